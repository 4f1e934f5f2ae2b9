//! Graded commutative algebras over `Q[q]` and their specialisation at
//! `q = 1`.

mod deform;
mod specialized;
mod spectral;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::Q;

pub use crate::linalg::Vector;
pub use deform::{
    first_order_product, order2_nilpotent_obstruction, psi, ObstructionPath, ObstructionVerdict,
    Schedule, Survivors, Verdict,
};
pub use specialized::{
    Clause3Report, GramReport, IdempotentBasis, LinOp, RadicalReport, SpecializedAlgebra,
    Theorem1Report,
};
pub use spectral::{SpectralComponent, SpectralDecomposition};

/// One structure-constant term `c · q^d · e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub k: usize,
    pub d: u32,
    pub c: Q,
}

/// Element of a [`QRing`]: sparse map `(basis index, q power) → coefficient`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct QElem {
    terms: BTreeMap<(usize, u32), Q>,
}

impl QElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: usize) -> Self {
        Self::monomial(k, 0, Q::one())
    }

    pub fn monomial(k: usize, d: u32, c: Q) -> Self {
        let mut e = Self::zero();
        e.add_term(k, d, c);
        e
    }

    pub fn add_term(&mut self, k: usize, d: u32, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((k, d)).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(k, d));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: usize, d: u32) -> Q {
        self.terms.get(&(k, d)).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, u32, &Q)> {
        self.terms.iter().map(|(&(k, d), c)| (k, d, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &QElem) -> QElem {
        let mut r = self.clone();
        for (k, d, c) in o.terms() {
            r.add_term(k, d, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &QElem) -> QElem {
        self.add(&o.scale(&-Q::one()))
    }

    pub fn scale(&self, s: &Q) -> QElem {
        let mut r = QElem::zero();
        for (k, d, c) in self.terms() {
            r.add_term(k, d, c * s);
        }
        r
    }

    /// Multiply by `q^e`.
    pub fn shift_q(&self, e: u32) -> QElem {
        let mut r = QElem::zero();
        for (k, d, c) in self.terms() {
            r.add_term(k, d + e, c.clone());
        }
        r
    }

    /// Coefficient vector at `q = 1`.
    pub fn at_q1(&self, dim: usize) -> Vector {
        let mut v = vec![Q::zero(); dim];
        for (k, _, c) in self.terms() {
            v[k] += c;
        }
        v
    }
}

impl fmt::Debug for QElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(
                self.terms
                    .iter()
                    .map(|((k, d), c)| (format!("q^{d} e{k}"), c.to_string())),
            )
            .finish()
    }
}

/// Small quantum cohomology presented by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QRing {
    name: String,
    labels: Vec<String>,
    degrees: Vec<u32>,
    c1: u32,
    unit: usize,
    /// Dense `n × n` table; entry `i * n + j` lists `e_i ⋆ e_j` sorted by `(k, d)`.
    table: Vec<Vec<Term>>,
}

impl QRing {
    /// Build and fully validate a ring. Products may be given for either
    /// order of `(i, j)`; duplicates are summed and the table is symmetrised.
    pub fn new(
        name: impl Into<String>,
        basis: Vec<(String, u32)>,
        c1: u32,
        unit: usize,
        products: impl IntoIterator<Item = (usize, usize, usize, u32, Q)>,
    ) -> Result<Self> {
        let ring = Self::assemble(name, basis, c1, unit, products)?;
        ring.validate()?;
        Ok(ring)
    }

    /// Build without the associativity sweep (grading and shape are still
    /// checked). Used for intermediate tables.
    pub(crate) fn assemble(
        name: impl Into<String>,
        basis: Vec<(String, u32)>,
        c1: u32,
        unit: usize,
        products: impl IntoIterator<Item = (usize, usize, usize, u32, Q)>,
    ) -> Result<Self> {
        let n = basis.len();
        if c1 == 0 {
            return Err(Error::validation("index", "c1 must be positive"));
        }
        if unit >= n {
            return Err(Error::validation(
                "unit",
                format!("unit index {unit} out of range"),
            ));
        }
        let (labels, degrees): (Vec<String>, Vec<u32>) = basis.into_iter().unzip();
        if let Some(i) = degrees.iter().position(|d| d % 2 == 1) {
            return Err(Error::validation(
                "grading",
                format!("basis element {i} has odd degree {}", degrees[i]),
            ));
        }
        let mut acc: BTreeMap<(usize, usize, usize, u32), Q> = BTreeMap::new();
        for (i, j, k, d, c) in products {
            if i >= n || j >= n || k >= n {
                return Err(Error::validation(
                    "index",
                    format!("product ({i},{j},{k},{d}) refers to a missing basis element"),
                ));
            }
            let (a, b) = if i <= j { (i, j) } else { (j, i) };
            *acc.entry((a, b, k, d)).or_insert_with(Q::zero) += c;
        }
        let mut table = vec![Vec::new(); n * n];
        for ((i, j, k, d), c) in acc {
            if c.is_zero() {
                continue;
            }
            let t = Term { k, d, c };
            table[i * n + j].push(t.clone());
            if i != j {
                table[j * n + i].push(t);
            }
        }
        let ring = QRing {
            name: name.into(),
            labels,
            degrees,
            c1,
            unit,
            table,
        };
        ring.check_grading()?;
        Ok(ring)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn c1(&self) -> u32 {
        self.c1
    }

    pub fn q_degree(&self) -> u32 {
        2 * self.c1
    }

    pub fn unit_index(&self) -> usize {
        self.unit
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.degrees[i]
    }

    pub fn top_degree(&self) -> u32 {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    /// The unique basis element of degree 2, if any.
    pub fn hyperplane_index(&self) -> Result<usize> {
        let v: Vec<usize> = (0..self.dim()).filter(|&i| self.degrees[i] == 2).collect();
        match v.as_slice() {
            [h] => Ok(*h),
            _ => Err(Error::MissingDegree2),
        }
    }

    /// The unique basis element of top degree.
    pub fn point_index(&self) -> Option<usize> {
        let top = self.top_degree();
        let v: Vec<usize> = (0..self.dim())
            .filter(|&i| self.degrees[i] == top)
            .collect();
        (v.len() == 1).then(|| v[0])
    }

    /// Resolve a class label; accepts the aliases `1`, `h` and `pt`.
    pub fn index_of(&self, label: &str) -> Result<usize> {
        if let Some(i) = self.labels.iter().position(|l| l == label) {
            return Ok(i);
        }
        match label {
            "1" => Ok(self.unit),
            "h" => self.hyperplane_index(),
            "pt" => self
                .point_index()
                .ok_or_else(|| Error::UnknownLabel(label.to_string())),
            _ => Err(Error::UnknownLabel(label.to_string())),
        }
    }

    /// `e_i ⋆ e_j`.
    pub fn product(&self, i: usize, j: usize) -> &[Term] {
        &self.table[i * self.dim() + j]
    }

    /// Canonical list of products `(i, j, k, d, c)` with `i ≤ j`, sorted.
    pub fn entries(&self) -> Vec<(usize, usize, usize, u32, Q)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                for t in self.product(i, j) {
                    out.push((i, j, t.k, t.d, t.c.clone()));
                }
            }
        }
        out
    }

    pub fn mul(&self, a: &QElem, b: &QElem) -> QElem {
        let mut r = QElem::zero();
        for (i, di, ci) in a.terms() {
            for (j, dj, cj) in b.terms() {
                let s = ci * cj;
                for t in self.product(i, j) {
                    r.add_term(t.k, t.d + di + dj, &s * &t.c);
                }
            }
        }
        r
    }

    pub fn mul_basis(&self, i: usize, b: &QElem) -> QElem {
        self.mul(&QElem::basis(i), b)
    }

    /// Degree of a homogeneous element; `None` for zero or inhomogeneous.
    pub fn homogeneous_degree(&self, x: &QElem) -> Option<u32> {
        let mut deg = None;
        for (k, d, _) in x.terms() {
            let dk = self.degrees[k] + d * self.q_degree();
            if deg.is_some_and(|e| e != dk) {
                return None;
            }
            deg = Some(dk);
        }
        deg
    }

    /// Monomials `q^d e_k` of total degree `deg`, sorted by `k`.
    pub fn monomials_of_degree(&self, deg: u32) -> Vec<(usize, u32)> {
        let qd = self.q_degree();
        (0..self.dim())
            .filter_map(|k| {
                let dk = self.degrees[k];
                (dk <= deg && (deg - dk) % qd == 0).then(|| (k, (deg - dk) / qd))
            })
            .collect()
    }

    /// Matrix of `x ↦ a ⋆ x` from degree `deg` to degree `deg + deg a`,
    /// in the monomial bases returned by [`QRing::monomials_of_degree`].
    pub fn graded_operator(
        &self,
        a: &QElem,
        deg: u32,
    ) -> Result<(Matrix, Vec<(usize, u32)>, Vec<(usize, u32)>)> {
        let da = self
            .homogeneous_degree(a)
            .ok_or_else(|| Error::Unsupported("operator element is not homogeneous".into()))?;
        let src = self.monomials_of_degree(deg);
        let dst = self.monomials_of_degree(deg + da);
        let mut m = Matrix::zeros(dst.len(), src.len());
        for (c, &(k, d)) in src.iter().enumerate() {
            let y = self.mul(a, &QElem::monomial(k, d, Q::one()));
            for (kk, dd, v) in y.terms() {
                let row = dst
                    .iter()
                    .position(|&m| m == (kk, dd))
                    .ok_or_else(|| Error::Internal("product left its graded piece".into()))?;
                m[(row, c)] = v.clone();
            }
        }
        Ok((m, src, dst))
    }

    fn check_grading(&self) -> Result<()> {
        let n = self.dim();
        let qd = self.q_degree();
        for i in 0..n {
            for j in i..n {
                for t in self.product(i, j) {
                    if self.degrees[t.k] + t.d * qd != self.degrees[i] + self.degrees[j] {
                        return Err(Error::validation(
                            "grading",
                            format!(
                                "term ({i},{j},{},{}) has degree {} but deg e{i} + deg e{j} = {}",
                                t.k,
                                t.d,
                                self.degrees[t.k] + t.d * qd,
                                self.degrees[i] + self.degrees[j]
                            ),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_unit(&self) -> Result<()> {
        if self.degrees[self.unit] != 0 {
            return Err(Error::validation("unit", "unit class must have degree 0"));
        }
        for j in 0..self.dim() {
            let p = self.product(self.unit, j);
            let ok = p.len() == 1 && p[0].k == j && p[0].d == 0 && p[0].c.is_one();
            if !ok {
                return Err(Error::validation(
                    "unit",
                    format!("e{} ⋆ e{j} is not e{j}", self.unit),
                ));
            }
        }
        Ok(())
    }

    /// Grading, unit, commutativity and associativity over all triples.
    pub fn validate(&self) -> Result<()> {
        self.check_grading()?;
        self.check_unit()?;
        // Commutativity holds by construction of the symmetric table.
        // With grading checked, associativity at q = 1 is equivalent to
        // associativity over Q[q]: each coefficient carries a forced q power.
        specialized::check_associative(self.dim(), |i, j| {
            self.product(i, j)
                .iter()
                .map(|t| (t.k, t.c.clone()))
                .collect()
        })
    }

    /// Quotient by `q − 1`.
    pub fn specialize(&self) -> Result<SpecializedAlgebra> {
        SpecializedAlgebra::from_ring(self)
    }
}
