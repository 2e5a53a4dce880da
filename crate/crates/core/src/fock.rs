//! The order-p Fock representation of the classical CAGs, realized on
//! degree-p monomials in `x_0, …, x_n` with `e_{AB}` acting as `x_A ∂_B`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::freealg::{Alphabet, GenSymbol};
use crate::matrep::{pullback_rep, Matrix, MatrixRep};
use crate::morphisms::chevalley_from_cag_classical;
use crate::scalar::{QMode, Specialize};

/// Occupation numbers `(r_0, r_1, …, r_n)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FockState(pub Vec<u32>);

impl FockState {
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl fmt::Display for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FockModule {
    n: usize,
    p: u32,
    basis: Vec<FockState>,
    index: BTreeMap<FockState, usize>,
}

/// All occupation vectors of length `len` summing to `total`, in
/// lexicographically descending order.
fn compositions(len: usize, total: u32) -> Vec<Vec<u32>> {
    if len == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(len - 1, total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn fock_module(n: usize, p: u32) -> Result<FockModule> {
    if n < 1 {
        return Err(Error::InvalidRank(n));
    }
    let basis: Vec<FockState> = compositions(n + 1, p).into_iter().map(FockState).collect();
    let index = basis.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
    Ok(FockModule { n, p, basis, index })
}

impl FockModule {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[FockState] {
        &self.basis
    }

    pub fn vacuum(&self) -> FockState {
        let mut v = vec![0; self.n + 1];
        v[0] = self.p;
        FockState(v)
    }

    pub fn index_of(&self, s: &FockState) -> Result<usize> {
        self.index.get(s).copied().ok_or_else(|| Error::StateOutsideModule(s.0.clone()))
    }

    /// `â_i^+ = x_i ∂_0`, `â_i^- = x_0 ∂_i`; at most one output term.
    pub fn apply_cag(&self, g: GenSymbol, s: &FockState) -> Result<Vec<(FockState, u32)>> {
        self.index_of(s)?;
        let (from, to) = match g {
            GenSymbol::Aplus(i) if (1..=self.n as u32).contains(&i) => (0, i as usize),
            GenSymbol::Aminus(i) if (1..=self.n as u32).contains(&i) => (i as usize, 0),
            other => return Err(Error::AlphabetMismatch(other, "classical-cag".into())),
        };
        let coeff = s.0[from];
        if coeff == 0 {
            return Ok(Vec::new());
        }
        let mut out = s.0.clone();
        out[from] -= 1;
        out[to] += 1;
        Ok(vec![(FockState(out), coeff)])
    }

    fn cag_matrix<S: Specialize>(&self, g: GenSymbol) -> Result<Matrix<S>> {
        let mut m = Matrix::zeros(self.dimension());
        for (col, s) in self.basis.iter().enumerate() {
            for (t, c) in self.apply_cag(g, s)? {
                m.set(self.index_of(&t)?, col, S::from_int(i64::from(c)));
            }
        }
        Ok(m)
    }

    pub fn to_json(&self) -> Result<serde_json::Value> {
        let rep = fock_matrix_rep::<crate::Rational>(self)?;
        let mats: serde_json::Map<String, serde_json::Value> =
            rep.matrices().map(|(g, m)| (g.to_string(), m.to_sparse_json())).collect();
        Ok(serde_json::json!({
            "n": self.n,
            "p": self.p,
            "dimension": self.dimension(),
            "vacuum": self.vacuum(),
            "basis": self.basis,
            "matrices": mats,
        }))
    }
}

/// CAG matrices on the module plus the Chevalley generators expressed
/// through them.
pub fn fock_matrix_rep<S: Specialize>(module: &FockModule) -> Result<MatrixRep<S>> {
    let n = module.n;
    let alphabet = Alphabet::classical_cag(n);
    let asg = alphabet
        .symbols()
        .map(|g| Ok((g, module.cag_matrix(g)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    let id = format!("fock(n={n},p={})", module.p);
    let cag = MatrixRep::new(id.clone(), alphabet, module.dimension(), None, asg)?;
    let to_cag = chevalley_from_cag_classical(n)?.specialize::<S>(&QMode::Symbolic)?;
    let mut rep = cag.merged(&pullback_rep(&to_cag, &cag)?)?;
    rep.id = id;
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrep::defining_rep_classical;
    use crate::presentations::classical_cag;
    use crate::{Poly, Rational};
    use GenSymbol::*;

    fn int(x: i64) -> Rational {
        Rational::from_integer(x.into())
    }

    fn binomial(a: u64, b: u64) -> u64 {
        (1..=b).fold(1, |acc, k| acc * (a - b + k) / k)
    }

    #[test]
    fn dimensions() {
        assert_eq!(fock_module(2, 2).unwrap().dimension(), 6);
        assert_eq!(fock_module(3, 0).unwrap().dimension(), 1);
        for n in 1..=4 {
            for p in 0..=5 {
                let m = fock_module(n, p).unwrap();
                assert_eq!(m.dimension() as u64, binomial((n as u64) + u64::from(p), u64::from(p)));
                assert_eq!(m.basis()[0], m.vacuum());
                assert!(m.basis().iter().all(|s| s.total() == p));
            }
        }
    }

    #[test]
    fn actions() {
        let m = fock_module(2, 3).unwrap();
        let vac = m.vacuum();
        assert_eq!(m.apply_cag(Aplus(1), &vac).unwrap(), vec![(FockState(vec![2, 1, 0]), 3)]);
        assert!(m.apply_cag(Aminus(1), &vac).unwrap().is_empty());
        let m = fock_module(2, 2).unwrap();
        assert_eq!(
            m.apply_cag(Aminus(2), &FockState(vec![0, 1, 1])).unwrap(),
            vec![(FockState(vec![1, 1, 0]), 1)]
        );
        assert_eq!(
            m.apply_cag(Aplus(1), &FockState(vec![0, 0, 1])),
            Err(Error::StateOutsideModule(vec![0, 0, 1]))
        );
    }

    #[test]
    fn small_modules_match_defining_rep() {
        for n in [1, 2] {
            let f = fock_matrix_rep::<Rational>(&fock_module(n, 1).unwrap()).unwrap();
            let d = defining_rep_classical::<Rational>(n).unwrap();
            for g in Alphabet::classical_cag(n).symbols() {
                assert_eq!(f.matrix(g).unwrap(), d.matrix(g).unwrap(), "{g}");
            }
        }
    }

    #[test]
    fn cartan_commutator_on_order_two() {
        let rep = fock_matrix_rep::<Rational>(&fock_module(1, 2).unwrap()).unwrap();
        let c = rep.eval(&Poly::commutator(&Poly::gen(Aminus(1)), &Poly::gen(Aplus(1))).try_map_coeffs(|c| Ok(c.as_rational().unwrap())).unwrap()).unwrap();
        assert_eq!(c, Matrix::diagonal(vec![int(2), int(0), int(-2)]));
        let trivial = fock_matrix_rep::<Rational>(&fock_module(3, 0).unwrap()).unwrap();
        assert!(trivial.matrices().all(|(_, m)| m.is_zero()));
    }

    #[test]
    fn extended_relations_vanish() {
        for n in 1..=3 {
            let pres = classical_cag(n, true).unwrap();
            let rels = pres.relations_in::<Rational>(&QMode::Symbolic).unwrap();
            for p in 0..=3 {
                let rep = fock_matrix_rep::<Rational>(&fock_module(n, p).unwrap()).unwrap();
                for (id, r) in &rels {
                    assert!(rep.eval(r).unwrap().is_zero(), "{id} p={p}");
                }
            }
        }
    }

    #[test]
    fn h_is_diagonal_with_occupation_eigenvalues() {
        let module = fock_module(3, 3).unwrap();
        let rep = fock_matrix_rep::<Rational>(&module).unwrap();
        for i in 1..=3usize {
            let h = rep.matrix(H(i as u32)).unwrap();
            assert!(h.is_diagonal());
            for (k, s) in module.basis().iter().enumerate() {
                assert_eq!(h.get(k, k), &int(i64::from(s.0[i - 1]) - i64::from(s.0[i])));
            }
        }
    }

    #[test]
    fn annihilators_are_nilpotent_of_order_p_plus_one() {
        for (n, p) in [(1, 2), (2, 3), (3, 2)] {
            let rep = fock_matrix_rep::<Rational>(&fock_module(n, p).unwrap()).unwrap();
            let mut sum = Matrix::zeros(rep.dim);
            for i in 1..=n as u32 {
                sum = sum.add(rep.matrix(Aminus(i)).unwrap()).unwrap();
            }
            let mut pow = Matrix::identity(rep.dim);
            for _ in 0..p {
                pow = pow.mul(&sum).unwrap();
            }
            assert!(!pow.is_zero());
            assert!(pow.mul(&sum).unwrap().is_zero());
        }
    }

    #[test]
    fn basis_order() {
        let m = fock_module(2, 2).unwrap();
        let b: Vec<_> = m.basis().iter().map(|s| s.0.clone()).collect();
        assert_eq!(
            b,
            [[2, 0, 0], [1, 1, 0], [1, 0, 1], [0, 2, 0], [0, 1, 1], [0, 0, 2]].map(|a| a.to_vec())
        );
    }
}
