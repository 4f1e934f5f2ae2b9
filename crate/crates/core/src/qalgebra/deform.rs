//! First-order deformation `⋆_τ = ⋆₀ + t ⋆₁` in one direction `τ`, and the
//! order-2 nilpotent obstruction built on it.
//!
//! For a divisor `h` the divisor axiom gives `h ⋆₁ x = Ψ(τ ⋆₀ x)`, where `Ψ`
//! multiplies the `q^d` part by `d`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{QElem, QRing};
use crate::error::{Error, Result};
use crate::linalg::{dot, span_contains, span_intersection, Matrix, Vector};
use crate::Q;

/// `Ψ(Σ z q^d) = Σ d z q^d`.
pub fn psi(x: &QElem) -> QElem {
    let mut r = QElem::zero();
    for (k, d, c) in x.terms() {
        if d > 0 {
            r.add_term(k, d, c * Q::from_integer(d.into()));
        }
    }
    r
}

/// `(h ⋆₀ b, Ψ(τ ⋆₀ b))`: the constant and linear terms of `h ⋆_τ b`.
pub fn first_order_product(r: &QRing, h: usize, tau: &QElem, b: &QElem) -> Result<(QElem, QElem)> {
    if r.degree(h) != 2 {
        return Err(Error::Unsupported(format!(
            "{} has degree {}, the divisor shortcut needs degree 2",
            r.label(h),
            r.degree(h)
        )));
    }
    Ok((r.mul_basis(h, b), psi(&r.mul(tau, b))))
}

/// Which unknown 4-point invariants may survive in `pt ⋆₁ pt`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Survivors {
    /// A single class; the others vanish for geometric reasons.
    Single { class: usize },
    /// Every monomial of the right degree; decided by a lattice congruence.
    All,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Schedule {
    /// Basis index of the deformation direction `τ`.
    pub tau: usize,
    /// Degree in which the radical generator `C₀` is normalised.
    pub c0_degree: u32,
    pub survivors: Survivors,
}

impl Schedule {
    /// Normalise `C₀` in the top degree. For `τ = pt` only the invariant on
    /// the unit class survives; any other direction uses the congruence.
    pub fn for_direction(r: &QRing, tau: usize) -> Self {
        let survivors = if r.point_index() == Some(tau) {
            Survivors::Single {
                class: r.unit_index(),
            }
        } else {
            Survivors::All
        };
        Self {
            tau,
            c0_degree: r.top_degree(),
            survivors,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Obstructed,
    Consistent,
    Inconclusive,
    NotApplicable,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Obstructed => "OBSTRUCTED",
            Verdict::Consistent => "CONSISTENT",
            Verdict::Inconclusive => "INCONCLUSIVE",
            Verdict::NotApplicable => "NOT_APPLICABLE",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObstructionPath {
    SingleInvariant,
    Congruence,
}

#[derive(Clone, Debug)]
pub struct ObstructionVerdict {
    pub verdict: Verdict,
    pub path: ObstructionPath,
    pub c0: Option<QElem>,
    pub c1: Option<QElem>,
    /// `C₀ − λ·pt ∈ Im E_h`.
    pub lambda: Option<Q>,
    pub d0: Option<QElem>,
    /// `h ⋆₁ (h ⋆₀ D₀ ⋆₀ D₀)`.
    pub w: Option<QElem>,
    /// `W` in `coker E_h`.
    pub projected_w: Vec<Q>,
    /// Images in `coker E_h` of the monomials that may carry invariants.
    pub lattice_generators: Vec<Vec<Q>>,
    /// The invariant forced by the final identity (rank-one cokernel).
    pub candidate: Option<Q>,
    /// Whether `π(W)/λ²` lies in the integer span of the generators.
    pub in_lattice: Option<bool>,
    pub log: Vec<String>,
    pub reason: Option<String>,
}

impl ObstructionVerdict {
    fn new(path: ObstructionPath) -> Self {
        Self {
            verdict: Verdict::Inconclusive,
            path,
            c0: None,
            c1: None,
            lambda: None,
            d0: None,
            w: None,
            projected_w: Vec::new(),
            lattice_generators: Vec::new(),
            candidate: None,
            in_lattice: None,
            log: Vec::new(),
            reason: None,
        }
    }

    fn stop(mut self, verdict: Verdict, reason: impl Into<String>) -> Self {
        self.verdict = verdict;
        self.reason = Some(reason.into());
        self
    }
}

fn to_elem(v: &[Q], basis: &[(usize, u32)]) -> QElem {
    let mut e = QElem::zero();
    for (c, &(k, d)) in v.iter().zip(basis) {
        e.add_term(k, d, c.clone());
    }
    e
}

fn to_vec(x: &QElem, basis: &[(usize, u32)]) -> Result<Vector> {
    let mut v = vec![Q::zero(); basis.len()];
    for (k, d, c) in x.terms() {
        let i = basis
            .iter()
            .position(|&m| m == (k, d))
            .ok_or_else(|| Error::Internal("element outside its graded piece".into()))?;
        v[i] = c.clone();
    }
    Ok(v)
}

/// Replay of the order-2 nilpotent argument in direction `schedule.tau`.
pub fn order2_nilpotent_obstruction(r: &QRing, schedule: &Schedule) -> Result<ObstructionVerdict> {
    let path = match schedule.survivors {
        Survivors::Single { .. } => ObstructionPath::SingleInvariant,
        Survivors::All => ObstructionPath::Congruence,
    };
    let mut out = ObstructionVerdict::new(path);
    let alg = r.specialize()?;
    let rad = alg.radical()?;
    if rad.is_semisimple {
        return Ok(out.stop(Verdict::NotApplicable, "radical is trivial"));
    }
    let n = r.dim();
    let h = r.hyperplane_index()?;
    let hq = QElem::basis(h);
    let pt = r
        .point_index()
        .ok_or_else(|| Error::RadicalShape("no unique point class".into()))?;
    let tau = QElem::basis(schedule.tau);
    let deg_tau = r.degree(schedule.tau);
    let c0_deg = schedule.c0_degree;
    let qd = r.q_degree();
    let pt_q = |deg: u32| -> Option<(usize, u32)> {
        let dp = r.degree(pt);
        (deg >= dp && (deg - dp) % qd == 0).then(|| (pt, (deg - dp) / qd))
    };
    let surjective_onto = |deg: u32| -> Result<bool> {
        if deg < 2 {
            return Ok(r.monomials_of_degree(deg).is_empty());
        }
        let (m, _, dst) = r.graded_operator(&hq, deg - 2)?;
        Ok(m.rank() == dst.len())
    };
    let radical_free_in = |deg: u32| -> bool {
        let piece = alg.graded_piece(deg % alg.modulus());
        span_intersection(n, &piece, &rad.basis).is_empty()
    };

    // Step 1: C₀ spans Ker E_h in degree c0, normalised on the point class.
    let (m0, src0, _) = r.graded_operator(&hq, c0_deg)?;
    let ker = m0.kernel();
    if ker.len() != 1 {
        return Err(Error::RadicalShape(format!(
            "Ker E_h in degree {c0_deg} has dimension {}",
            ker.len()
        )));
    }
    let Some(ptm) = pt_q(c0_deg) else {
        return Err(Error::RadicalShape(format!(
            "no point monomial in degree {c0_deg}"
        )));
    };
    let ip = src0.iter().position(|&m| m == ptm).unwrap();
    if ker[0][ip].is_zero() {
        return Err(Error::RadicalShape(
            "C0 has no point-class component".into(),
        ));
    }
    let inv = ker[0][ip].recip();
    let c0v: Vector = ker[0].iter().map(|x| x * &inv).collect();
    let c0 = to_elem(&c0v, &src0);
    if !span_contains(n, &rad.basis, &[c0.at_q1(n)]) {
        return Err(Error::RadicalShape("C0 is not in the radical".into()));
    }
    if !r.mul(&c0, &c0).is_zero() {
        return Err(Error::RadicalShape("C0 ⋆ C0 ≠ 0".into()));
    }
    out.log.push(format!(
        "C0 in degree {c0_deg} spans Ker E_h there; C0 ⋆ C0 = 0"
    ));
    out.c0 = Some(c0.clone());

    // Step 2: h ⋆₀ C₁ = −h ⋆₁ C₀.
    let e1 = c0_deg + deg_tau;
    if !radical_free_in(e1) {
        return Ok(out.stop(Verdict::Inconclusive, format!("radical meets degree {e1}")));
    }
    if !surjective_onto(e1)? {
        return Ok(out.stop(
            Verdict::Inconclusive,
            format!("E_h is not onto degree {e1}"),
        ));
    }
    let rhs = psi(&r.mul(&tau, &c0)).scale(&-Q::one());
    let (m1, src1, dst1) = r.graded_operator(&hq, e1 - 2)?;
    let c1v = m1
        .solve(&to_vec(&rhs, &dst1)?)
        .ok_or_else(|| Error::Internal("surjective map without solution".into()))?;
    let c1 = to_elem(&c1v, &src1);
    let c0c1_zero = r.mul(&c0, &c1).is_zero();
    out.log.push(format!(
        "E_h onto degree {e1}; C1 solved in degree {}; C0 ⋆ C1 = 0: {c0c1_zero}",
        e1 - 2
    ));
    out.c1 = Some(c1);

    // Step 3: C₀ = λ·pt + h ⋆₀ D₀.
    if c0_deg < 2 {
        return Ok(out.stop(Verdict::Inconclusive, "C0 lies in the bottom degree"));
    }
    let (mi, srci, dsti) = r.graded_operator(&hq, c0_deg - 2)?;
    let c0t = to_vec(&c0, &dsti)?;
    let ptv = to_vec(&QElem::monomial(ptm.0, ptm.1, Q::one()), &dsti)?;
    let mut lambda: Option<Q> = None;
    for w in mi.left_kernel() {
        let a = dot(&w, &ptv);
        let b = dot(&w, &c0t);
        if a.is_zero() {
            if !b.is_zero() {
                return Ok(out.stop(Verdict::Inconclusive, "C0 − λ pt ∉ Im E_h for every λ"));
            }
            continue;
        }
        let l = b / a;
        if lambda.as_ref().is_some_and(|x| *x != l) {
            return Ok(out.stop(
                Verdict::Inconclusive,
                "no single λ puts C0 − λ pt in Im E_h",
            ));
        }
        lambda = Some(l);
    }
    let Some(lambda) = lambda else {
        return Ok(out.stop(Verdict::Inconclusive, "pt ∈ Im E_h, λ is not determined"));
    };
    if lambda.is_zero() {
        return Ok(out.stop(Verdict::Inconclusive, "λ = 0"));
    }
    let target: Vector = c0t.iter().zip(&ptv).map(|(c, p)| c - &lambda * p).collect();
    let x = mi
        .solve(&target)
        .ok_or_else(|| Error::Internal("λ chosen but no preimage".into()))?;
    let d0v = strip_kernel(r, &hq, c0_deg - 2, &mi, &srci, x)?;
    let d0 = to_elem(&d0v, &srci);
    out.log
        .push(format!("λ = {lambda}; D0 in degree {}", c0_deg - 2));
    out.lambda = Some(lambda.clone());
    out.d0 = Some(d0.clone());

    // D₁ exists when E_h is onto the degree of h ⋆₁ D₀.
    let e2 = c0_deg - 2 + deg_tau;
    if !surjective_onto(e2)? {
        return Ok(out.stop(
            Verdict::Inconclusive,
            format!("E_h is not onto degree {e2}"),
        ));
    }
    out.log.push(format!("E_h onto degree {e2}; D1 exists"));

    // Step 4: λ² pt ⋆₁ pt ≡ h ⋆₁ (h ⋆₀ D₀ ⋆₀ D₀) mod Im E_h.
    let hdd = r.mul(&r.mul(&hq, &d0), &d0);
    let w = psi(&r.mul(&tau, &hdd));
    let wd = 2 * c0_deg - 2 + deg_tau;
    let (mw, _, dstw) = r.graded_operator(&hq, wd - 2)?;
    let coker = mw.left_kernel();
    if coker.is_empty() {
        return Ok(out.stop(Verdict::Inconclusive, format!("E_h is onto degree {wd}")));
    }
    let wv = to_vec(&w, &dstw)?;
    let proj = |v: &[Q]| -> Vec<Q> { coker.iter().map(|c| dot(c, v)).collect() };
    let pw = proj(&wv);
    out.w = Some(w);
    out.projected_w = pw.clone();
    let lam2 = &lambda * &lambda;
    let t: Vec<Q> = pw.iter().map(|x| x / &lam2).collect();

    let gens: Vec<Vec<Q>> = match schedule.survivors {
        Survivors::Single { class } => {
            let d = r.degree(class);
            if d > wd || (wd - d) % qd != 0 {
                return Err(Error::Unsupported(format!(
                    "survivor {} does not occur in degree {wd}",
                    r.label(class)
                )));
            }
            let i = dstw
                .iter()
                .position(|&m| m == (class, (wd - d) / qd))
                .unwrap();
            vec![proj(&unit_at(dstw.len(), i))]
        }
        Survivors::All => (0..dstw.len())
            .map(|i| proj(&unit_at(dstw.len(), i)))
            .filter(|g| g.iter().any(|x| !x.is_zero()))
            .collect(),
    };
    out.lattice_generators = gens.clone();
    out.log.push(format!(
        "coker E_h in degree {wd} has dimension {}",
        coker.len()
    ));

    match schedule.survivors {
        Survivors::Single { .. } => {
            let g = &gens[0];
            let Some(i) = g.iter().position(|x| !x.is_zero()) else {
                return Ok(out.stop(Verdict::Inconclusive, "surviving class lies in Im E_h"));
            };
            let cand = &t[i] / &g[i];
            let consistent = t.iter().zip(g).all(|(a, b)| *a == &cand * b);
            out.candidate = Some(cand.clone());
            if !consistent {
                out.verdict = Verdict::Obstructed;
                out.reason = Some("final identity has no solution".into());
            } else if cand.is_integer() && !cand.is_negative() {
                out.verdict = Verdict::Consistent;
            } else {
                out.verdict = Verdict::Obstructed;
                out.reason = Some(format!("4-point candidate {cand} ∉ ℤ≥0"));
            }
        }
        Survivors::All => {
            let member = lattice_contains(&gens, &t);
            out.in_lattice = Some(member);
            if coker.len() == 1 {
                let g = gens
                    .iter()
                    .map(|v| v[0].clone())
                    .fold(Q::zero(), |acc, x| rational_gcd(&acc, &x));
                if !g.is_zero() {
                    out.candidate = Some(&t[0] / g);
                }
            }
            if member {
                out.verdict = Verdict::Consistent;
            } else {
                out.verdict = Verdict::Obstructed;
                out.reason = Some("π(W)/λ² is not an integral combination of invariants".into());
            }
        }
    }
    Ok(out)
}

fn unit_at(n: usize, i: usize) -> Vector {
    let mut v = vec![Q::zero(); n];
    v[i] = Q::one();
    v
}

/// Drop the `Ker E_h` component of `x` in `Im E_h ⊕ Ker E_h` (degree `deg`).
fn strip_kernel(
    r: &QRing,
    hq: &QElem,
    deg: u32,
    m: &Matrix,
    src: &[(usize, u32)],
    x: Vector,
) -> Result<Vector> {
    let ker = m.kernel();
    if ker.is_empty() {
        return Ok(x);
    }
    let im: Vec<Vector> = if deg >= 2 {
        let (mp, _, dst) = r.graded_operator(hq, deg - 2)?;
        debug_assert_eq!(dst.len(), src.len());
        mp.image()
    } else {
        Vec::new()
    };
    let mut cols = im.clone();
    cols.extend(ker.iter().cloned());
    let b = Matrix::from_columns(src.len(), &cols);
    let coeffs = b
        .solve(&x)
        .ok_or_else(|| Error::Internal("Im ⊕ Ker does not span the graded piece".into()))?;
    let mut y = vec![Q::zero(); src.len()];
    for (c, v) in coeffs.iter().zip(&im) {
        for (a, b) in y.iter_mut().zip(v) {
            *a += c * b;
        }
    }
    Ok(y)
}

fn rational_gcd(a: &Q, b: &Q) -> Q {
    if a.is_zero() {
        return b.abs();
    }
    if b.is_zero() {
        return a.abs();
    }
    let num = (a.numer() * b.denom()).gcd(&(b.numer() * a.denom()));
    let den = a.denom() * b.denom();
    Q::new(num, den)
}

/// Membership of `t` in the `ℤ`-span of `gens` (all rational vectors).
pub(crate) fn lattice_contains(gens: &[Vec<Q>], t: &[Q]) -> bool {
    let scale = gens
        .iter()
        .flatten()
        .chain(t.iter())
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let to_int = |v: &[Q]| -> Vec<BigInt> {
        v.iter()
            .map(|x| (x * Q::from_integer(scale.clone())).to_integer())
            .collect()
    };
    let mut pool: Vec<Vec<BigInt>> = gens.iter().map(|g| to_int(g)).collect();
    let mut target = to_int(t);
    let dim = t.len();
    let mut basis: Vec<(usize, Vec<BigInt>)> = Vec::new();
    for p in 0..dim {
        let mut pivot: Option<Vec<BigInt>> = None;
        let mut rest = Vec::new();
        for v in pool.drain(..) {
            if v[p].is_zero() {
                rest.push(v);
                continue;
            }
            match pivot.take() {
                None => pivot = Some(v),
                Some(u) => {
                    // Replace (u, v) by (gcd row, eliminated row).
                    let e = u[p].extended_gcd(&v[p]);
                    let g_row: Vec<BigInt> =
                        u.iter().zip(&v).map(|(a, b)| &e.x * a + &e.y * b).collect();
                    let (ug, vg) = (&u[p] / &e.gcd, &v[p] / &e.gcd);
                    let z_row: Vec<BigInt> =
                        u.iter().zip(&v).map(|(a, b)| &vg * a - &ug * b).collect();
                    debug_assert!(z_row[p].is_zero());
                    rest.push(z_row);
                    pivot = Some(g_row);
                }
            }
        }
        pool = rest;
        if let Some(b) = pivot {
            basis.push((p, b));
        }
    }
    for (p, b) in &basis {
        if target[*p].is_zero() {
            continue;
        }
        let (qt, rem) = target[*p].div_rem(&b[*p]);
        if !rem.is_zero() {
            return false;
        }
        for (x, y) in target.iter_mut().zip(b) {
            *x -= &qt * y;
        }
    }
    target.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, qf};

    #[test]
    fn psi_scales_by_q_power() {
        let mut x = QElem::zero();
        x.add_term(0, 0, q(5));
        x.add_term(1, 1, q(1));
        x.add_term(2, 3, q(1));
        let y = psi(&x);
        assert_eq!(y.coeff(0, 0), q(0));
        assert_eq!(y.coeff(1, 1), q(1));
        assert_eq!(y.coeff(2, 3), q(3));
        assert_eq!(psi(&QElem::monomial(4, 2, q(3))).coeff(4, 2), q(6));
    }

    #[test]
    fn lattice_membership() {
        let g = vec![vec![q(2), q(0)], vec![q(1), q(3)]];
        assert!(lattice_contains(&g, &[q(3), q(3)]));
        assert!(!lattice_contains(&g, &[q(1), q(0)]));
        assert!(lattice_contains(&[vec![qf(1, 2)]], &[q(3)]));
        assert!(!lattice_contains(&[vec![q(1)]], &[qf(2, 3)]));
        assert!(lattice_contains(&[vec![q(6)], vec![q(10)]], &[q(4)]));
        assert!(!lattice_contains(&[vec![q(6)], vec![q(10)]], &[q(3)]));
    }
}
