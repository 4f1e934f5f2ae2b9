use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::qalgebra::{QElem, QRing};
use crate::{q, Q};

fn power_label(j: usize) -> String {
    match j {
        0 => "1".to_string(),
        1 => "h".to_string(),
        _ => format!("h^{j}"),
    }
}

/// `QH(P^n)`: basis `1, h, …, h^n` with `h ⋆ h^n = q`.
pub fn projective_space(n: usize) -> Result<QRing> {
    if n == 0 {
        return Err(Error::Unsupported("P^n needs n >= 1".into()));
    }
    let basis = (0..=n).map(|j| (power_label(j), 2 * j as u32)).collect();
    let mut products = Vec::new();
    for i in 0..=n {
        for j in i..=n {
            let s = i + j;
            if s <= n {
                products.push((i, j, s, 0, Q::one()));
            } else {
                products.push((i, j, s - n - 1, 1, Q::one()));
            }
        }
    }
    QRing::new(format!("P^{n}"), basis, (n + 1) as u32, 0, products)
}

/// Polynomial in `ħ` whose coefficients are affine forms in the unknowns of
/// the current q-order: `hp[t][0]` is the constant, `hp[t][1 + u]` the
/// coefficient of unknown `u`.
type HPoly = Vec<Vec<Q>>;

fn hp_zero() -> HPoly {
    Vec::new()
}

/// `dst += c · ħ^shift · src`.
fn hp_add(dst: &mut HPoly, src: &HPoly, c: &Q, shift: usize, width: usize) {
    for (t, form) in src.iter().enumerate() {
        let tt = t + shift;
        while dst.len() <= tt {
            dst.push(vec![Q::zero(); width]);
        }
        for (a, x) in form.iter().enumerate() {
            if !x.is_zero() {
                dst[tt][a] += c * x;
            }
        }
    }
}

/// Add `c · ħ^t · u` for unknown column `col` (already offset by one).
fn hp_add_unknown(dst: &mut HPoly, t: usize, col: usize, c: &Q, width: usize) {
    while dst.len() <= t {
        dst.push(vec![Q::zero(); width]);
    }
    dst[t][col] += c;
}

/// Coefficients of `P(x, ħ) = ∏_i d_i ∏_{j=1}^{d_i-1} (d_i x + j ħ)` as
/// `p[e][t]` for `x^e ħ^t`.
fn ci_operator(degrees: &[u32]) -> Vec<Vec<Q>> {
    let lead: Q = degrees.iter().map(|&d| q(d as i64)).product();
    let mut p = vec![vec![lead]];
    for &d in degrees {
        for j in 1..d {
            let mut out = vec![vec![Q::zero(); p[0].len() + 1]; p.len() + 1];
            for (e, row) in p.iter().enumerate() {
                for (t, c) in row.iter().enumerate() {
                    out[e + 1][t] += c * q(d as i64);
                    out[e][t + 1] += c * q(j as i64);
                }
            }
            p = out;
        }
    }
    p
}

/// Coefficients `c_{j,m}` of the `h`-action on the classical basis
/// `H^j = h^j` of a complete intersection of multidegree `degrees` and
/// dimension `n`:
/// `h ⋆ H^j = H^{j+1} + Σ_{m≥1} c_{j,m} q^m H^{j+1−m c₁}`.
///
/// Obtained order by order in `q` from the quantum differential equation
/// `∇^{n+1} 1 = q P(∇) 1`; at each order the unknowns enter linearly and the
/// solution must be unique.
pub fn ci_hyperplane_coefficients(n: usize, degrees: &[u32]) -> Result<BTreeMap<(usize, u32), Q>> {
    let (c1, _, _) = ci_invariants(n, degrees)?;
    let c1 = c1 as usize;
    let big_n = n + 1;
    let p = ci_operator(degrees);
    let max_order = big_n / c1 + 1;

    let mut coeffs: BTreeMap<(usize, u32), Q> = BTreeMap::new();
    // known[m][k][col] : ħ-polynomial (constants only) of v_k at order q^m
    let mut known: Vec<Vec<Vec<Vec<Q>>>> = Vec::new();

    for m in 0..=max_order {
        let unknowns: Vec<usize> = if m == 0 {
            Vec::new()
        } else {
            (0..big_n)
                .filter(|&j| j + 1 >= m * c1 && j + 1 - m * c1 < big_n)
                .collect()
        };
        let width = unknowns.len() + 1;
        let mut v: Vec<Vec<HPoly>> = Vec::with_capacity(big_n + 2);
        let mut v0 = vec![hp_zero(); big_n];
        if m == 0 {
            v0[0] = vec![{
                let mut f = vec![Q::zero(); width];
                f[0] = Q::one();
                f
            }];
        }
        v.push(v0);
        for k in 0..=n {
            let cur = &v[k];
            let mut next = vec![hp_zero(); big_n];
            for col in 0..big_n {
                if m > 0 {
                    hp_add(&mut next[col], &cur[col], &q(m as i64), 1, width);
                }
                if col > 0 {
                    hp_add(&mut next[col], &cur[col - 1], &Q::one(), 0, width);
                }
            }
            for l in 1..m {
                let low = &known[m - l][k];
                for (j, hp) in low.iter().enumerate() {
                    let Some(c) = coeffs.get(&(j, l as u32)) else {
                        continue;
                    };
                    let col = j + 1 - l * c1;
                    let as_hp: HPoly = hp
                        .iter()
                        .map(|x| {
                            let mut f = vec![Q::zero(); width];
                            f[0] = x.clone();
                            f
                        })
                        .collect();
                    hp_add(&mut next[col], &as_hp, c, 0, width);
                }
            }
            if m > 0 {
                for (u, &j) in unknowns.iter().enumerate() {
                    let Some(hp) = known[0][k].get(j) else {
                        continue;
                    };
                    for (t, x) in hp.iter().enumerate() {
                        if !x.is_zero() {
                            hp_add_unknown(&mut next[j + 1 - m * c1], t, u + 1, x, width);
                        }
                    }
                }
            }
            v.push(next);
        }

        // residual v_{n+1} − Σ_e P_e(ħ) v_e^{(m−1)}
        let mut resid = v[big_n].clone();
        if m > 0 {
            for (e, row) in p.iter().enumerate() {
                if e > n {
                    return Err(Error::Unsupported(
                        "operator degree exceeds dimension".into(),
                    ));
                }
                for (t, c) in row.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for col in 0..big_n {
                        let low: HPoly = known[m - 1][e][col]
                            .iter()
                            .map(|x| {
                                let mut f = vec![Q::zero(); width];
                                f[0] = x.clone();
                                f
                            })
                            .collect();
                        hp_add(&mut resid[col], &low, &-c.clone(), t, width);
                    }
                }
            }
        }
        let eqs: Vec<&Vec<Q>> = resid.iter().flat_map(|hp| hp.iter()).collect();
        let u = unknowns.len();
        let a = Matrix::from_fn(eqs.len(), u, |r, c| eqs[r][c + 1].clone());
        let b: Vec<Q> = eqs.iter().map(|f| -f[0].clone()).collect();
        let sol = if u == 0 {
            if b.iter().any(|x| !x.is_zero()) {
                return Err(Error::Inconsistent(format!(
                    "quantum differential equation fails at order q^{m}"
                )));
            }
            Vec::new()
        } else {
            let s = a
                .solve(&b)
                .ok_or_else(|| Error::Inconsistent(format!("no h-action solves order q^{m}")))?;
            if a.rank() < u {
                return Err(Error::Inconsistent(format!(
                    "h-action not determined at order q^{m}"
                )));
            }
            s
        };
        for (&j, x) in unknowns.iter().zip(&sol) {
            if !x.is_zero() {
                coeffs.insert((j, m as u32), x.clone());
            }
        }
        let eval = |hp: &HPoly| -> Vec<Q> {
            hp.iter()
                .map(|f| {
                    let mut s = f[0].clone();
                    for (x, c) in sol.iter().zip(&f[1..]) {
                        s += x * c;
                    }
                    s
                })
                .collect()
        };
        known.push(v.iter().map(|row| row.iter().map(eval).collect()).collect());
    }
    Ok(coeffs)
}

/// `(c₁, D, s)` with `D = ∏ d_i^{d_i}` and `s = Σ (d_i − 1)`, after checking
/// the admissible range.
fn ci_invariants(n: usize, degrees: &[u32]) -> Result<(u32, Q, usize)> {
    if n < 2 {
        return Err(Error::Unsupported(
            "complete intersection needs n >= 2".into(),
        ));
    }
    if degrees.iter().any(|&d| d < 2) {
        return Err(Error::Unsupported("degrees must be at least 2".into()));
    }
    let r = degrees.len() as i64;
    let sum: i64 = degrees.iter().map(|&d| d as i64).sum();
    let s = (sum - r) as usize;
    if 2 * s > n + 1 {
        return Err(Error::Unsupported(format!(
            "n = {n} is below the range n >= 2 Σ(d_i - 1) - 1 = {}",
            (2 * s).saturating_sub(1)
        )));
    }
    let c1 = n as i64 + r + 1 - sum;
    let mut big_d = Q::one();
    for &d in degrees {
        big_d *= q(d as i64).pow(d as i32);
    }
    Ok((c1 as u32, big_d, s))
}

/// The `h`-subalgebra of `QH(X)` for a complete intersection `X ⊂ P^{n+r}`
/// of multidegree `degrees`, in the basis `H^j = h^j` of classical powers.
///
/// The constructor certifies `h^{⋆(n+1)} = D q h^{⋆s}`,
/// `h^{⋆c₁} ⋆ h^{⋆c₁} = D q h^{⋆c₁}` and the nilpotency of
/// `h^{⋆(c₁+1)} − D q h` at `q = 1`.
pub fn complete_intersection(n: usize, degrees: &[u32]) -> Result<QRing> {
    let (c1, big_d, s) = ci_invariants(n, degrees)?;
    let coeffs = ci_hyperplane_coefficients(n, degrees)?;
    let c1u = c1 as usize;
    let act_h = |x: &QElem| -> QElem {
        let mut out = QElem::zero();
        for (j, d, c) in x.terms() {
            if j < n {
                out.add_term(j + 1, d, c.clone());
            }
            for ((jj, m), cc) in coeffs.range((j, 0)..=(j, u32::MAX)) {
                debug_assert_eq!(*jj, j);
                out.add_term(j + 1 - *m as usize * c1u, d + m, c * cc);
            }
        }
        out
    };

    // Quantum powers of h, and H^i as Q[q]-combinations of them.
    let mut hpow = vec![QElem::basis(0)];
    for a in 1..=(2 * c1u + n + 1) {
        hpow.push(act_h(&hpow[a - 1]));
    }
    // expr[i]: map (power a, q^d) → coefficient with H^i = Σ c q^d h^{⋆a}
    let mut expr: Vec<QElem> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut e = QElem::monomial(i, 0, Q::one());
        for (k, d, c) in hpow[i].terms() {
            if (k, d) == (i, 0) {
                if !c.is_one() {
                    return Err(Error::Internal("h-power not unitriangular".into()));
                }
                continue;
            }
            e = e.sub(&expr[k].shift_q(d).scale(c));
        }
        expr.push(e);
    }
    let mut products = Vec::new();
    for i in 0..=n {
        for j in i..=n {
            let mut acc = QElem::zero();
            for (a, d, c) in expr[i].terms() {
                let mut y = QElem::basis(j);
                for _ in 0..a {
                    y = act_h(&y);
                }
                acc = acc.add(&y.shift_q(d).scale(c));
            }
            for (k, d, c) in acc.terms() {
                products.push((i, j, k, d, c.clone()));
            }
        }
    }
    let name = if degrees.is_empty() {
        format!("P^{n}")
    } else {
        let ds: Vec<String> = degrees.iter().map(|d| d.to_string()).collect();
        format!("X_{}({n})", ds.join(","))
    };
    let basis = (0..=n).map(|j| (power_label(j), 2 * j as u32)).collect();
    let ring = QRing::new(name, basis, c1, 0, products)?;

    // Certificates.
    let dq = |x: &QElem| x.shift_q(1).scale(&big_d);
    if hpow[n + 1] != dq(&hpow[s]) {
        return Err(Error::validation("ci-relation", "h^{n+1} != D q h^s"));
    }
    if hpow[2 * c1u] != dq(&hpow[c1u]) {
        return Err(Error::validation(
            "ci-square",
            "h^{c1} * h^{c1} != D q h^{c1}",
        ));
    }
    let alg = ring.specialize()?;
    let x = hpow[c1u + 1].sub(&dq(&hpow[1])).at_q1(n + 1);
    if !alg.is_nilpotent(&x) {
        return Err(Error::validation(
            "ci-nilpotent",
            "h^{c1+1} - D q h is not nilpotent",
        ));
    }
    Ok(ring)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p1_relation() {
        let r = projective_space(1).unwrap();
        assert_eq!(
            r.product(1, 1),
            &[crate::qalgebra::Term {
                k: 0,
                d: 1,
                c: q(1)
            }]
        );
    }

    #[test]
    fn no_degrees_is_projective_space() {
        for n in 2..6 {
            let a = complete_intersection(n, &[]).unwrap();
            assert_eq!(a, projective_space(n).unwrap());
        }
    }

    #[test]
    fn quadric_point_times_h() {
        // h ⋆ H^n = 2 q h on a quadric, H^n being twice the point class
        let c = ci_hyperplane_coefficients(5, &[2]).unwrap();
        assert_eq!(c.get(&(5, 1)), Some(&q(2)));
        assert_eq!(c.get(&(4, 1)), Some(&q(2)));
        assert_eq!(c.len(), 2);
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(complete_intersection(4, &[4]).is_err());
        assert!(complete_intersection(1, &[2]).is_err());
    }
}
