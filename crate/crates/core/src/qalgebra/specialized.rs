use std::collections::BTreeMap;

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::spectral::{minimal_polynomial, SpectralDecomposition};
use super::QRing;
use crate::error::{Error, Result};
use crate::linalg::{
    self, is_zero_vec, ldlt_positive_definite, span_contains, span_intersection, span_rank,
    sylvester_positive_definite, unit_vector, Matrix, Vector,
};
use crate::poly::Poly;
use crate::Q;

/// Exhaustive associativity check for a commutative table given by `f(i, j)`.
///
/// For each unordered triple the three bracketings `(ij)k`, `(jk)i`, `(ki)j`
/// must agree. Integer tables take an `i128` fast path.
pub(crate) fn check_associative(
    n: usize,
    f: impl Fn(usize, usize) -> Vec<(usize, Q)>,
) -> Result<()> {
    let table: Vec<Vec<(usize, Q)>> = (0..n * n).map(|x| f(x / n, x % n)).collect();
    if let Some(int_table) = to_int_table(&table) {
        if let Some(res) = check_associative_int(n, &int_table) {
            return res;
        }
    }
    let mut acc = vec![Q::zero(); n];
    let mut acc2 = vec![Q::zero(); n];
    let bracket = |acc: &mut Vec<Q>, a: usize, b: usize, c: usize| {
        for z in acc.iter_mut() {
            z.set_zero();
        }
        for (m, cm) in &table[a * n + b] {
            for (k, ck) in &table[m * n + c] {
                acc[*k] += cm * ck;
            }
        }
    };
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                bracket(&mut acc, i, j, k);
                for (b, c, a) in [(j, k, i), (k, i, j)] {
                    bracket(&mut acc2, b, c, a);
                    if acc != acc2 {
                        return Err(assoc_error(i, j, k));
                    }
                }
            }
        }
    }
    Ok(())
}

fn assoc_error(i: usize, j: usize, k: usize) -> Error {
    Error::validation(
        "associativity",
        format!("(e{i} ⋆ e{j}) ⋆ e{k} differs from e{i} ⋆ (e{j} ⋆ e{k})"),
    )
}

fn to_int_table(table: &[Vec<(usize, Q)>]) -> Option<Vec<Vec<(usize, i64)>>> {
    table
        .iter()
        .map(|row| {
            row.iter()
                .map(|(k, c)| {
                    if c.is_integer() {
                        c.to_integer().to_i64().map(|v| (*k, v))
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect()
}

/// `None` on overflow, so the caller can fall back to exact rationals.
fn check_associative_int(n: usize, table: &[Vec<(usize, i64)>]) -> Option<Result<()>> {
    let mut acc = vec![0i128; n];
    let mut acc2 = vec![0i128; n];
    let bracket = |acc: &mut Vec<i128>, a: usize, b: usize, c: usize| -> Option<()> {
        acc.iter_mut().for_each(|z| *z = 0);
        for &(m, cm) in &table[a * n + b] {
            for &(k, ck) in &table[m * n + c] {
                let t = (cm as i128).checked_mul(ck as i128)?;
                acc[k] = acc[k].checked_add(t)?;
            }
        }
        Some(())
    };
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                bracket(&mut acc, i, j, k)?;
                for (b, c, a) in [(j, k, i), (k, i, j)] {
                    bracket(&mut acc2, b, c, a)?;
                    if acc != acc2 {
                        return Some(Err(assoc_error(i, j, k)));
                    }
                }
            }
        }
    }
    Some(Ok(()))
}

/// Linear endomorphism of an algebra in its fixed basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinOp {
    pub matrix: Matrix,
}

impl LinOp {
    pub fn new(matrix: Matrix) -> Self {
        assert!(matrix.is_square(), "operator must be square");
        Self { matrix }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, v: &[Q]) -> Vector {
        self.matrix.mul_vec(v)
    }

    pub fn kernel(&self) -> Vec<Vector> {
        self.matrix.kernel()
    }

    pub fn image(&self) -> Vec<Vector> {
        self.matrix.image()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn nullity(&self) -> usize {
        self.dim() - self.rank()
    }

    pub fn minimal_polynomial(&self) -> Poly {
        minimal_polynomial(&self.matrix)
    }

    pub fn generalized_components(&self) -> SpectralDecomposition {
        SpectralDecomposition::compute(self)
    }

    /// Generalised kernel `⋃ Ker E^m`.
    pub fn generalized_kernel(&self) -> Vec<Vector> {
        let n = self.dim();
        if n == 0 {
            return Vec::new();
        }
        self.matrix.pow(n as u32).kernel()
    }
}

#[derive(Clone, Debug)]
pub struct RadicalReport {
    pub basis: Vec<Vector>,
    pub is_semisimple: bool,
    /// `(element, order)` with `element^order = 0`, one per basis vector.
    pub witnesses: Vec<(Vector, u32)>,
}

impl RadicalReport {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Clone, Debug)]
pub struct GramReport {
    /// Basis indices spanning `A₀`.
    pub a0_basis: Vec<usize>,
    pub gram: Matrix,
    pub positive_definite: bool,
    /// One-based index of the first non-positive leading minor.
    pub failing_minor: Option<usize>,
    pub ldlt_positive_definite: bool,
}

#[derive(Clone, Debug)]
pub struct Clause3Report {
    pub radical_in_kernel: bool,
    pub image_kernel_direct_sum: bool,
    pub h_subalgebra_semisimple: bool,
    /// Squarefree `P` with `P(0) ≠ 0` and `μ_{E_h} | X·P(X^{c₁})`, if found.
    pub p: Option<Poly>,
    pub minpoly_divides_xp: bool,
}

impl Clause3Report {
    pub fn holds(&self) -> bool {
        self.radical_in_kernel
            && self.image_kernel_direct_sum
            && self.h_subalgebra_semisimple
            && self.minpoly_divides_xp
    }
}

#[derive(Clone, Debug)]
pub struct Theorem1Report {
    pub gram: GramReport,
    pub kernel_dim: usize,
    pub image_dim: usize,
    pub radical_dim: usize,
    pub min_poly: Poly,
    /// `R(A) ⊂ A₀(E_h)`; evaluated only when `Q_X` is positive definite.
    pub clause1: Option<bool>,
    pub clause2_fires: bool,
    /// Semisimplicity cross-check when clause 2 fires.
    pub clause2: Option<bool>,
    pub a0_splits: bool,
    pub clause3: Option<Clause3Report>,
}

#[derive(Clone, Debug)]
pub enum IdempotentBasis {
    Exact(Vec<Vector>),
    Numeric {
        idempotents: Vec<Vec<Complex64>>,
        residual: f64,
    },
}

impl IdempotentBasis {
    pub fn len(&self) -> usize {
        match self {
            IdempotentBasis::Exact(v) => v.len(),
            IdempotentBasis::Numeric { idempotents, .. } => idempotents.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_numeric(&self) -> bool {
        matches!(self, IdempotentBasis::Numeric { .. })
    }
}

/// Residual bound accepted on the numeric idempotent path.
pub const IDEMPOTENT_TOLERANCE: f64 = 1e-9;

/// Finite-dimensional commutative algebra over `Q`, graded mod `2c₁`.
#[derive(Clone, Debug)]
pub struct SpecializedAlgebra {
    name: String,
    labels: Vec<String>,
    degrees: Vec<u32>,
    c1: u32,
    unit: Vector,
    unit_index: Option<usize>,
    table: Vec<Vec<(usize, Q)>>,
}

impl SpecializedAlgebra {
    pub(crate) fn from_ring(r: &QRing) -> Result<Self> {
        let n = r.dim();
        let table = (0..n * n)
            .map(|x| {
                let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
                for t in r.product(x / n, x % n) {
                    *acc.entry(t.k).or_insert_with(Q::zero) += &t.c;
                }
                acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
            })
            .collect();
        let a = Self {
            name: r.name().to_string(),
            labels: r.labels().to_vec(),
            degrees: r.degrees().to_vec(),
            c1: r.c1(),
            unit: unit_vector(n, r.unit_index()),
            unit_index: Some(r.unit_index()),
            table,
        };
        a.check_associative()?;
        Ok(a)
    }

    /// Ungraded algebra from dense structure constants `table[i][j] = e_i e_j`.
    pub fn from_structure(name: &str, unit: Vector, table: Vec<Vec<Vector>>) -> Result<Self> {
        let n = unit.len();
        if table.len() != n
            || table
                .iter()
                .any(|r| r.len() != n || r.iter().any(|v| v.len() != n))
        {
            return Err(Error::validation(
                "shape",
                "structure table does not match dimension",
            ));
        }
        for i in 0..n {
            for j in 0..n {
                if table[i][j] != table[j][i] {
                    return Err(Error::validation(
                        "commutativity",
                        format!("e{i} e{j} != e{j} e{i}"),
                    ));
                }
            }
        }
        let sparse = (0..n * n)
            .map(|x| {
                table[x / n][x % n]
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.clone()))
                    .collect()
            })
            .collect();
        let unit_index = (0..n).find(|&i| unit == unit_vector(n, i));
        let a = Self {
            name: name.to_string(),
            labels: (0..n).map(|i| format!("e{i}")).collect(),
            degrees: vec![0; n],
            c1: 1,
            unit,
            unit_index,
            table: sparse,
        };
        a.check_associative()?;
        if n > 0 {
            for i in 0..n {
                let e = unit_vector(n, i);
                if a.mul(&a.unit, &e) != e {
                    return Err(Error::validation("unit", format!("unit does not fix e{i}")));
                }
            }
        }
        Ok(a)
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.dim();
        check_associative(n, |i, j| self.table[i * n + j].clone())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn c1(&self) -> u32 {
        self.c1
    }

    pub fn modulus(&self) -> u32 {
        2 * self.c1
    }

    /// Cohomological degree of basis element `i` in the parent ring.
    pub fn degree(&self, i: usize) -> u32 {
        self.degrees[i]
    }

    pub fn degree_mod(&self, i: usize) -> u32 {
        self.degrees[i] % self.modulus()
    }

    /// `residue → dim A_residue`.
    pub fn graded_dims(&self) -> BTreeMap<u32, usize> {
        let mut m = BTreeMap::new();
        for i in 0..self.dim() {
            *m.entry(self.degree_mod(i)).or_insert(0) += 1;
        }
        m
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn unit_index(&self) -> Option<usize> {
        self.unit_index
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Q)] {
        &self.table[i * self.dim() + j]
    }

    pub fn basis(&self, i: usize) -> Vector {
        unit_vector(self.dim(), i)
    }

    pub fn mul(&self, a: &[Q], b: &[Q]) -> Vector {
        let n = self.dim();
        let mut r = vec![Q::zero(); n];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let s = ai * bj;
                for (k, c) in self.basis_product(i, j) {
                    r[*k] += &s * c;
                }
            }
        }
        r
    }

    pub fn pow(&self, a: &[Q], e: u32) -> Vector {
        let mut r = self.unit.clone();
        for _ in 0..e {
            r = self.mul(&r, a);
        }
        r
    }

    /// Matrix of `x ↦ a x`.
    pub fn mult_operator(&self, a: &[Q]) -> LinOp {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            let col = self.mul(a, &self.basis(j));
            for (k, c) in col.into_iter().enumerate() {
                m[(k, j)] = c;
            }
        }
        LinOp::new(m)
    }

    /// The unique basis class of cohomological degree 2.
    pub fn hyperplane_index(&self) -> Result<usize> {
        let v: Vec<usize> = (0..self.dim()).filter(|&i| self.degrees[i] == 2).collect();
        match v.as_slice() {
            [h] => Ok(*h),
            _ => Err(Error::MissingDegree2),
        }
    }

    pub fn e_h(&self) -> Result<LinOp> {
        let h = self.hyperplane_index()?;
        Ok(self.mult_operator(&self.basis(h)))
    }

    /// Smallest `m ≥ 1` with `v^m = 0`, if `v` is nilpotent.
    pub fn nilpotency_order(&self, v: &[Q]) -> Option<u32> {
        let mut p = v.to_vec();
        for m in 1..=(self.dim() as u32 + 1) {
            if is_zero_vec(&p) {
                return Some(m);
            }
            p = self.mul(&p, v);
        }
        None
    }

    pub fn is_nilpotent(&self, v: &[Q]) -> bool {
        self.nilpotency_order(v).is_some()
    }

    /// Gram matrix of `(a, b) ↦ Tr(E_{ab})`.
    pub fn trace_form(&self) -> Matrix {
        let n = self.dim();
        let traces: Vec<Q> = (0..n)
            .map(|k| {
                (0..n).fold(Q::zero(), |acc, j| {
                    let d = self.basis_product(k, j).iter().find(|(m, _)| *m == j);
                    acc + d.map_or_else(Q::zero, |(_, c)| c.clone())
                })
            })
            .collect();
        Matrix::from_fn(n, n, |a, b| {
            self.basis_product(a, b)
                .iter()
                .fold(Q::zero(), |acc, (k, c)| acc + c * &traces[*k])
        })
    }

    /// Radical as the kernel of the trace form, with nilpotency witnesses.
    pub fn radical(&self) -> Result<RadicalReport> {
        let basis = self.trace_form().kernel();
        let mut witnesses = Vec::new();
        for v in &basis {
            let order = self.nilpotency_order(v).ok_or_else(|| {
                Error::Internal("trace-form kernel vector is not nilpotent".into())
            })?;
            witnesses.push((v.clone(), order));
        }
        Ok(RadicalReport {
            is_semisimple: basis.is_empty(),
            basis,
            witnesses,
        })
    }

    /// Basis indices of `A₀`.
    pub fn a0_indices(&self) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.degree_mod(i) == 0)
            .collect()
    }

    /// Vectors supported on basis classes of degree `≡ residue`.
    pub fn graded_piece(&self, residue: u32) -> Vec<Vector> {
        (0..self.dim())
            .filter(|&i| self.degree_mod(i) == residue)
            .map(|i| self.basis(i))
            .collect()
    }

    /// Projection onto `H⁰`: the coefficient of the unit class.
    pub fn phi0(&self, v: &[Q]) -> Result<Q> {
        let u = self
            .unit_index
            .ok_or_else(|| Error::Unsupported("unit is not a basis class".into()))?;
        Ok(v[u].clone())
    }

    /// `Q_X(a, b) = φ₀(a ⋆ b)` on `A₀`.
    pub fn qx_form(&self) -> Result<GramReport> {
        let a0 = self.a0_indices();
        let mut g = Matrix::zeros(a0.len(), a0.len());
        for (r, &i) in a0.iter().enumerate() {
            for (c, &j) in a0.iter().enumerate() {
                g[(r, c)] = self.phi0(&self.mul(&self.basis(i), &self.basis(j)))?;
            }
        }
        debug_assert!(g.is_symmetric());
        let (pd, failing) = sylvester_positive_definite(&g);
        let ldlt = ldlt_positive_definite(&g);
        Ok(GramReport {
            a0_basis: a0,
            gram: g,
            positive_definite: pd,
            failing_minor: failing,
            ldlt_positive_definite: ldlt,
        })
    }

    pub fn theorem1_report(&self) -> Result<Theorem1Report> {
        let n = self.dim();
        let eh = self.e_h()?;
        let gram = self.qx_form()?;
        let ker = eh.kernel();
        let im = eh.image();
        let rad = self.radical()?;
        let min_poly = eh.minimal_polynomial();
        let pd = gram.positive_definite;

        let clause1 = pd.then(|| span_contains(n, &eh.generalized_kernel(), &rad.basis));
        let clause2_fires = pd && ker.is_empty();
        let clause2 = clause2_fires.then_some(rad.is_semisimple);

        let a0 = self.graded_piece(0);
        let k0 = span_intersection(n, &a0, &ker);
        let i0 = span_intersection(n, &a0, &im);
        let mut both = k0.clone();
        both.extend(i0.iter().cloned());
        let a0_splits = k0.len() + i0.len() == a0.len() && span_rank(n, &both) == a0.len();

        let clause3 = (pd && a0_splits).then(|| {
            let mut all = ker.clone();
            all.extend(im.iter().cloned());
            let p = xp_factor(&eh, self.c1);
            let minpoly_divides_xp = p.as_ref().is_some_and(|p| {
                let xp = p.compose_power(self.c1 as usize).mul(&Poly::x());
                min_poly.divides(&xp)
            });
            Clause3Report {
                radical_in_kernel: span_contains(n, &ker, &rad.basis),
                image_kernel_direct_sum: ker.len() + im.len() == n && span_rank(n, &all) == n,
                h_subalgebra_semisimple: min_poly.is_squarefree(),
                p,
                minpoly_divides_xp,
            }
        });

        Ok(Theorem1Report {
            gram,
            kernel_dim: ker.len(),
            image_dim: im.len(),
            radical_dim: rad.dim(),
            min_poly,
            clause1,
            clause2_fires,
            clause2,
            a0_splits,
            clause3,
        })
    }

    /// Orthogonal idempotents summing to 1, exact when the spectrum of a
    /// generic element is rational.
    pub fn idempotent_basis(&self) -> Result<IdempotentBasis> {
        let n = self.dim();
        if !self.radical()?.is_semisimple {
            return Err(Error::NotSemisimple);
        }
        if n == 0 {
            return Ok(IdempotentBasis::Exact(Vec::new()));
        }
        let mut rng = StdRng::seed_from_u64(0x1de7);
        for _ in 0..32 {
            let a: Vector = (0..n)
                .map(|_| Q::from_integer(rng.gen_range(-9i64..=9).into()))
                .collect();
            let mu = self.mult_operator(&a).minimal_polynomial();
            if mu.deg() != n {
                continue;
            }
            let roots = mu.rational_roots();
            if roots.len() == n {
                return Ok(IdempotentBasis::Exact(
                    self.lagrange_idempotents(&a, &roots),
                ));
            }
            return self.numeric_idempotents(&a, &mu);
        }
        Err(Error::Internal("no regular element found".into()))
    }

    fn lagrange_idempotents(&self, a: &[Q], roots: &[Q]) -> Vec<Vector> {
        roots
            .iter()
            .enumerate()
            .map(|(i, l)| {
                let mut e = self.unit.clone();
                for (j, m) in roots.iter().enumerate() {
                    if i == j {
                        continue;
                    }
                    let mut f: Vector = a.to_vec();
                    linalg::add_scaled(&mut f, &-m.clone(), &self.unit);
                    let inv = (l - m).recip();
                    e = self.mul(&e, &f).into_iter().map(|x| x * &inv).collect();
                }
                e
            })
            .collect()
    }

    fn numeric_idempotents(&self, a: &[Q], mu: &Poly) -> Result<IdempotentBasis> {
        let n = self.dim();
        let roots = complex_roots(mu);
        let table: Vec<Vec<(usize, f64)>> = self
            .table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|(k, c)| (*k, c.to_f64().unwrap_or(f64::NAN)))
                    .collect()
            })
            .collect();
        let cmul = |x: &[Complex64], y: &[Complex64]| -> Vec<Complex64> {
            let mut r = vec![Complex64::new(0.0, 0.0); n];
            for i in 0..n {
                if x[i] == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    let s = x[i] * y[j];
                    for (k, c) in &table[i * n + j] {
                        r[*k] += s * c;
                    }
                }
            }
            r
        };
        let unit: Vec<Complex64> = self
            .unit
            .iter()
            .map(|c| Complex64::new(c.to_f64().unwrap(), 0.0))
            .collect();
        let af: Vec<Complex64> = a
            .iter()
            .map(|c| Complex64::new(c.to_f64().unwrap(), 0.0))
            .collect();
        let mut ids = Vec::new();
        for (i, l) in roots.iter().enumerate() {
            let mut e = unit.clone();
            for (j, m) in roots.iter().enumerate() {
                if i == j {
                    continue;
                }
                let f: Vec<Complex64> = af.iter().zip(&unit).map(|(x, u)| x - m * u).collect();
                let inv = 1.0 / (l - m);
                e = cmul(&e, &f).into_iter().map(|x| x * inv).collect();
            }
            ids.push(e);
        }
        let mut residual: f64 = 0.0;
        let mut sum = vec![Complex64::new(0.0, 0.0); n];
        for (i, e) in ids.iter().enumerate() {
            for (s, x) in sum.iter_mut().zip(e) {
                *s += x;
            }
            for (j, f) in ids.iter().enumerate() {
                let p = cmul(e, f);
                let target: Vec<Complex64> = if i == j {
                    e.clone()
                } else {
                    vec![Complex64::new(0.0, 0.0); n]
                };
                for (x, y) in p.iter().zip(&target) {
                    residual = residual.max((x - y).norm());
                }
            }
        }
        for (s, u) in sum.iter().zip(&unit) {
            residual = residual.max((s - u).norm());
        }
        if residual > IDEMPOTENT_TOLERANCE {
            return Err(Error::Internal(format!(
                "numeric idempotent residual {residual:e}"
            )));
        }
        Ok(IdempotentBasis::Numeric {
            idempotents: ids,
            residual,
        })
    }
}

/// `P` from the minimal polynomial `X^f P(X)` of `E_h^{c₁}`, if squarefree
/// with `P(0) ≠ 0`.
fn xp_factor(eh: &LinOp, c1: u32) -> Option<Poly> {
    let m = LinOp::new(eh.matrix.pow(c1)).minimal_polynomial();
    let v = m.x_adic_valuation();
    let p = m.shift_down(v);
    (p.is_squarefree() && !p.coeff(0).is_zero()).then_some(p)
}

/// Roots of a rational polynomial by Durand–Kerner with Newton polishing.
pub(crate) fn complex_roots(p: &Poly) -> Vec<Complex64> {
    let monic = p.monic();
    let c: Vec<Complex64> = monic
        .coeffs()
        .iter()
        .map(|x| Complex64::new(x.to_f64().unwrap(), 0.0))
        .collect();
    let n = c.len() - 1;
    let eval = |z: Complex64| {
        c.iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, a| acc * z + a)
    };
    let deriv = |z: Complex64| {
        c.iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, (i, a)| {
                acc * z + a * i as f64
            })
    };
    let bound = 1.0 + c[..n].iter().map(|a| a.norm()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| seed.powu(k as u32) * (bound / 2.0).clamp(0.5, 1.0))
        .collect();
    for _ in 0..2000 {
        let mut delta: f64 = 0.0;
        for i in 0..n {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            let step = eval(z[i]) / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    for zi in z.iter_mut() {
        for _ in 0..5 {
            let d = deriv(*zi);
            if d.norm() == 0.0 {
                break;
            }
            *zi -= eval(*zi) / d;
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;

    fn ring_p(n: usize) -> SpecializedAlgebra {
        // Q[h]/(h^{n+1} - 1)
        let dim = n + 1;
        let mut t = vec![vec![vec![Q::zero(); dim]; dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                t[i][j][(i + j) % dim] = q(1);
            }
        }
        SpecializedAlgebra::from_structure("cyclic", unit_vector(dim, 0), t).unwrap()
    }

    #[test]
    fn cyclic_algebra_is_semisimple() {
        let a = ring_p(2);
        assert!(a.radical().unwrap().is_semisimple);
        let e = a.mult_operator(&a.basis(1));
        assert_eq!(e.minimal_polynomial(), Poly::from_ints(&[-1, 0, 0, 1]));
    }

    #[test]
    fn dual_numbers_radical() {
        // Q[x]/(x^2) ⊕ Q
        let z = || vec![Q::zero(); 3];
        let mut t = vec![
            vec![z(), z(), z()],
            vec![z(), z(), z()],
            vec![z(), z(), z()],
        ];
        let one = |k: usize| unit_vector(3, k);
        // basis: 1, x, f  (f idempotent orthogonal to 1 - f), unit = e0
        t[0][0] = one(0);
        t[0][1] = one(1);
        t[1][0] = one(1);
        t[0][2] = one(2);
        t[2][0] = one(2);
        t[2][2] = one(2);
        let a = SpecializedAlgebra::from_structure("toy", unit_vector(3, 0), t).unwrap();
        let r = a.radical().unwrap();
        assert_eq!(r.dim(), 1);
        assert!(span_contains(3, &r.basis, &[one(1)]));
        assert_eq!(r.witnesses[0].1, 2);
    }

    #[test]
    fn p1_idempotents_exact() {
        let a = ring_p(1);
        match a.idempotent_basis().unwrap() {
            IdempotentBasis::Exact(mut v) => {
                v.sort();
                let half = crate::qf(1, 2);
                let mut want = vec![vec![half.clone(), -half.clone()], vec![half.clone(), half]];
                want.sort();
                assert_eq!(v, want);
            }
            _ => panic!("expected exact idempotents"),
        }
    }

    #[test]
    fn p2_idempotents_numeric() {
        let a = ring_p(2);
        match a.idempotent_basis().unwrap() {
            IdempotentBasis::Numeric {
                idempotents,
                residual,
            } => {
                assert_eq!(idempotents.len(), 3);
                assert!(residual < 1e-10);
            }
            _ => panic!("cube roots of unity are not rational"),
        }
    }

    #[test]
    fn non_associative_rejected() {
        let mut t = vec![vec![vec![Q::zero(); 2]; 2]; 2];
        t[0][0] = vec![q(1), q(0)];
        t[0][1] = vec![q(0), q(1)];
        t[1][0] = vec![q(0), q(1)];
        t[1][1] = vec![q(0), q(1)];
        // x^2 = x with unit e0 is fine; now break it.
        assert!(SpecializedAlgebra::from_structure("ok", unit_vector(2, 0), t.clone()).is_ok());
        let mut bad = vec![vec![vec![Q::zero(); 3]; 3]; 3];
        for i in 0..3 {
            bad[0][i] = unit_vector(3, i);
            bad[i][0] = unit_vector(3, i);
        }
        bad[1][1] = unit_vector(3, 2);
        bad[1][2] = unit_vector(3, 1);
        bad[2][1] = unit_vector(3, 1);
        bad[2][2] = unit_vector(3, 1);
        assert!(SpecializedAlgebra::from_structure("bad", unit_vector(3, 0), bad).is_err());
    }
}
