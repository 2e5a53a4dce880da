//! Exact matrix representations and evaluation of free-algebra elements.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::freealg::{Alphabet, GenSymbol, NCPoly, TensorPoly, Word};
use crate::morphisms::{CoproductMap, GenMap};
use crate::presentations::quantum_chevalley;
use crate::scalar::{Coeff, QMode, RatFunc, Specialize};

use GenSymbol::*;

/// Dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<S> {
    dim: usize,
    data: Vec<S>,
}

impl<S: Coeff> Matrix<S> {
    pub fn zeros(dim: usize) -> Self {
        Matrix { dim, data: vec![S::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, S::one());
        }
        m
    }

    /// The matrix unit `E_{rc}`.
    pub fn elementary(dim: usize, r: usize, c: usize) -> Self {
        let mut m = Self::zeros(dim);
        m.set(r, c, S::one());
        m
    }

    pub fn diagonal(entries: Vec<S>) -> Self {
        let mut m = Self::zeros(entries.len());
        for (i, x) in entries.into_iter().enumerate() {
            m.set(i, i, x);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch(dim, row.len()));
            }
            data.extend(row);
        }
        Ok(Matrix { dim, data })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: S) {
        self.data[r * self.dim + c] = x;
    }

    fn same_dim(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(self.dim, other.dim))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add_ref(b)).collect();
        Ok(Matrix { dim: self.dim, data })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.sub_ref(b)).collect();
        Ok(Matrix { dim: self.dim, data })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let d = self.dim;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * d + j;
                    out.data[idx] = out.data[idx].add_ref(&a.mul_ref(b));
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zeros(self.dim);
        }
        let data = self
            .data
            .iter()
            .map(|x| if x.is_zero() { S::zero() } else { x.mul_ref(c) })
            .collect();
        Matrix { dim: self.dim, data }
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        let (a, b) = (self.dim, other.dim);
        let mut out = Self::zeros(a * b);
        for (i, j, x) in self.nonzero_entries() {
            for (k, l, y) in other.nonzero_entries() {
                out.set(i * b + k, j * b + l, x.mul_ref(y));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_diagonal(&self) -> bool {
        self.nonzero_entries().all(|(r, c, _)| r == c)
    }

    pub fn diagonal_entries(&self) -> Vec<S> {
        (0..self.dim).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn trace(&self) -> S {
        (0..self.dim).fold(S::zero(), |acc, i| acc.add_ref(self.get(i, i)))
    }

    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, &S)> {
        let d = self.dim;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(move |(idx, x)| (idx / d, idx % d, x))
    }

    pub fn try_map<T: Coeff>(&self, f: impl Fn(&S) -> Result<T>) -> Result<Matrix<T>> {
        let data = self.data.iter().map(f).collect::<Result<_>>()?;
        Ok(Matrix { dim: self.dim, data })
    }

    /// Nested arrays of scalar text forms.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<String>> = (0..self.dim)
            .map(|r| (0..self.dim).map(|c| self.get(r, c).to_string()).collect())
            .collect();
        serde_json::json!(rows)
    }

    /// `(row, col, value)` triples of the nonzero entries.
    pub fn to_sparse_json(&self) -> serde_json::Value {
        let entries: Vec<_> = self
            .nonzero_entries()
            .map(|(r, c, x)| serde_json::json!([r, c, x.to_string()]))
            .collect();
        serde_json::json!(entries)
    }
}

impl<S: Coeff> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// An assignment of square matrices to the symbols of an alphabet.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixRep<S> {
    pub id: String,
    pub alphabet: Alphabet,
    pub dim: usize,
    /// `None` for representations that do not involve q.
    pub q_mode: Option<QMode>,
    assignment: BTreeMap<GenSymbol, Matrix<S>>,
}

impl<S: Coeff> MatrixRep<S> {
    pub fn new(
        id: impl Into<String>,
        alphabet: Alphabet,
        dim: usize,
        q_mode: Option<QMode>,
        assignment: BTreeMap<GenSymbol, Matrix<S>>,
    ) -> Result<Self> {
        for g in alphabet.symbols() {
            let m = assignment.get(&g).ok_or(Error::UnassignedSymbol(g))?;
            if m.dim() != dim {
                return Err(Error::DimensionMismatch(dim, m.dim()));
            }
        }
        Ok(MatrixRep { id: id.into(), alphabet, dim, q_mode, assignment })
    }

    pub fn matrix(&self, g: GenSymbol) -> Result<&Matrix<S>> {
        self.assignment.get(&g).ok_or(Error::UnassignedSymbol(g))
    }

    pub fn matrices(&self) -> impl Iterator<Item = (GenSymbol, &Matrix<S>)> {
        self.assignment.iter().map(|(g, m)| (*g, m))
    }

    pub fn eval_word(&self, w: &Word) -> Result<Matrix<S>> {
        let mut syms = w.symbols().iter();
        let Some(first) = syms.next() else {
            return Ok(Matrix::identity(self.dim));
        };
        let mut acc = self.matrix(*first)?.clone();
        for g in syms {
            if acc.is_zero() {
                break;
            }
            acc = acc.mul(self.matrix(*g)?)?;
        }
        Ok(acc)
    }

    /// Matrix of a free-algebra element: words to products, extended linearly.
    pub fn eval(&self, p: &NCPoly<S>) -> Result<Matrix<S>> {
        let mut out = Matrix::zeros(self.dim);
        for (w, c) in p.terms() {
            out = out.add(&self.eval_word(w)?.scale(c))?;
        }
        Ok(out)
    }

    /// Evaluation of a tensor element as a sum of Kronecker products.
    pub fn eval_tensor(&self, t: &TensorPoly<S>) -> Result<Matrix<S>> {
        let mut out = Matrix::zeros(self.dim * self.dim);
        for ((l, r), c) in t.terms() {
            let m = self.eval_word(l)?.kron(&self.eval_word(r)?);
            out = out.add(&m.scale(c))?;
        }
        Ok(out)
    }

    /// Union of two representations on the same space.
    pub fn merged(&self, other: &MatrixRep<S>) -> Result<MatrixRep<S>> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        let mut assignment = self.assignment.clone();
        for (g, m) in &other.assignment {
            assignment.entry(*g).or_insert_with(|| m.clone());
        }
        Ok(MatrixRep {
            id: format!("{}+{}", self.id, other.id),
            alphabet: self.alphabet.union(&other.alphabet),
            dim: self.dim,
            q_mode: self.q_mode.clone().or_else(|| other.q_mode.clone()),
            assignment,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mats: serde_json::Map<String, serde_json::Value> = self
            .assignment
            .iter()
            .map(|(g, m)| (g.to_string(), m.to_json()))
            .collect();
        serde_json::json!({
            "id": self.id,
            "dimension": self.dim,
            "q": self.q_mode.as_ref().map(QMode::label),
            "matrices": mats,
        })
    }
}

fn check_rank(n: usize) -> Result<()> {
    if n < 1 {
        Err(Error::InvalidRank(n))
    } else {
        Ok(())
    }
}

/// `E_{AB}` on `C^{n+1}`, rows and columns indexed `0..=n`, carrying both
/// the Chevalley and the CAG alphabet of sl(n+1).
pub fn defining_rep_classical<S: Coeff>(n: usize) -> Result<MatrixRep<S>> {
    check_rank(n)?;
    let d = n + 1;
    let e = |a: usize, b: usize| Matrix::<S>::elementary(d, a, b);
    let mut asg = BTreeMap::new();
    for i in 1..=n {
        let k = i as u32;
        asg.insert(E(k), e(i - 1, i));
        asg.insert(F(k), e(i, i - 1));
        asg.insert(H(k), e(i - 1, i - 1).sub(&e(i, i))?);
        asg.insert(Aplus(k), e(i, 0));
        asg.insert(Aminus(k), e(0, i));
    }
    let alphabet = Alphabet::classical_chevalley(n).union(&Alphabet::classical_cag(n));
    MatrixRep::new(format!("defining(n={n})"), alphabet, d, None, asg)
}

/// The (n+1)-dimensional vector representation of U_q[sl(n+1)]; checked
/// against every quantum Chevalley relation before it is returned.
pub fn vector_rep_quantum<S: Specialize>(n: usize, mode: &QMode) -> Result<MatrixRep<S>> {
    check_rank(n)?;
    mode.check_generic()?;
    let d = n + 1;
    let q = S::specialize(&RatFunc::q(), mode)?;
    let qbar = S::one().try_div(&q)?;
    let mut asg = BTreeMap::new();
    for i in 1..=n {
        let k = i as u32;
        asg.insert(E(k), Matrix::elementary(d, i - 1, i));
        asg.insert(F(k), Matrix::elementary(d, i, i - 1));
        let mut kd = vec![S::one(); d];
        kd[i - 1] = q.clone();
        kd[i] = qbar.clone();
        let kbd = kd.iter().map(|x| S::one().try_div(x)).collect::<Result<Vec<_>>>()?;
        asg.insert(K(k), Matrix::diagonal(kd));
        asg.insert(Kbar(k), Matrix::diagonal(kbd));
    }
    let rep = MatrixRep::new(
        format!("vector(n={n})"),
        Alphabet::quantum_chevalley(n),
        d,
        Some(mode.clone()),
        asg,
    )?;
    for (id, rel) in quantum_chevalley(n)?.relations_in::<S>(mode)? {
        if !rep.eval(&rel)?.is_zero() {
            return Err(Error::RepresentationInvalid(id));
        }
    }
    Ok(rep)
}

/// Each source symbol of `m` goes to the matrix of its image.
pub fn pullback_rep<S: Coeff>(m: &GenMap<S>, rep: &MatrixRep<S>) -> Result<MatrixRep<S>> {
    for g in m.target.symbols() {
        if !rep.alphabet.contains(g) {
            return Err(Error::AlphabetMismatch(g, rep.alphabet.name().to_string()));
        }
    }
    let asg = m
        .images()
        .map(|(g, img)| Ok((g, rep.eval(img)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    MatrixRep::new(
        format!("{}<-{}", m.source.name(), rep.id),
        m.source.clone(),
        rep.dim,
        rep.q_mode.clone(),
        asg,
    )
}

/// Representation on the tensor square obtained through the coproduct.
pub fn tensor_square_rep<S: Coeff>(rep: &MatrixRep<S>, cop: &CoproductMap<S>) -> Result<MatrixRep<S>> {
    for g in cop.alphabet.symbols() {
        if !rep.alphabet.contains(g) {
            return Err(Error::AlphabetMismatch(g, rep.alphabet.name().to_string()));
        }
    }
    let asg = cop
        .images()
        .map(|(g, t)| Ok((g, rep.eval_tensor(t)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    MatrixRep::new(
        format!("tensor-square({})", rep.id),
        cop.alphabet.clone(),
        rep.dim * rep.dim,
        rep.q_mode.clone(),
        asg,
    )
}
