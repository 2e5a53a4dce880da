use std::fmt;
use std::sync::{OnceLock, RwLock};

/// Indeterminates that are pre-registered so that their order (and therefore
/// the monomial order) does not depend on the order of first use.
const STANDARD: [&str; 8] = ["q", "p", "x", "y", "z", "r", "s", "t"];

fn registry() -> &'static RwLock<Vec<String>> {
    static REGISTRY: OnceLock<RwLock<Vec<String>>> = OnceLock::new();
    REGISTRY.get_or_init(|| RwLock::new(STANDARD.iter().map(|s| s.to_string()).collect()))
}

/// A named indeterminate. The numeric id is its position in the declared
/// indeterminate list, which fixes the graded-lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(pub(crate) u16);

impl Var {
    pub const Q: Var = Var(0);

    /// Look up or declare an indeterminate by name.
    pub fn named(name: &str) -> Var {
        {
            let names = registry().read().expect("indeterminate registry poisoned");
            if let Some(pos) = names.iter().position(|n| n == name) {
                return Var(pos as u16);
            }
        }
        let mut names = registry().write().expect("indeterminate registry poisoned");
        if let Some(pos) = names.iter().position(|n| n == name) {
            return Var(pos as u16);
        }
        names.push(name.to_string());
        Var((names.len() - 1) as u16)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(i: usize) -> Var {
        Var(i as u16)
    }

    pub fn name(self) -> String {
        registry().read().expect("indeterminate registry poisoned")[self.index()].clone()
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_names_have_fixed_ids() {
        assert_eq!(Var::named("q"), Var::Q);
        assert_eq!(Var::named("z").index(), 4);
        let w = Var::named("w_extra");
        assert_eq!(Var::named("w_extra"), w);
        assert_eq!(w.name(), "w_extra");
    }
}
