//! Univariate polynomials over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::factor;
use crate::linalg::Matrix;
use crate::Q;

/// Dense polynomial, coefficients in ascending degree, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Q>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Poly::new(c.iter().map(|&x| crate::q(x)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Poly::new(vec![c])
    }

    pub fn x() -> Self {
        Poly::monomial(Q::one(), 1)
    }

    pub fn monomial(c: Q, k: usize) -> Self {
        let mut v = vec![Q::zero(); k + 1];
        v[k] = c;
        Poly::new(v)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn lc(&self) -> Q {
        self.coeffs.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lc();
        self.scale(&l.recip())
    }

    pub fn scale(&self, c: &Q) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| -a.clone()).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Q::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        Poly::new(v)
    }

    pub fn pow(&self, e: usize) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| acc.mul(self))
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.coeffs.clone();
        let dd = d.deg();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let inv = d.lc().recip();
        let mut qv = vec![Q::zero(); r.len() - dd];
        for k in (0..qv.len()).rev() {
            let c = &r[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                if !dj.is_zero() {
                    r[k + j] -= &c * dj;
                }
            }
            qv[k] = c;
        }
        r.truncate(dd);
        (Poly::new(qv), Poly::new(r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn div_exact(&self, d: &Poly) -> Poly {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.rem(self).is_zero()
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        self.mul(o).div_exact(&self.gcd(o)).monic()
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * crate::q(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.coeffs
            .iter()
            .rev()
            .fold(Q::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            if !c.is_zero() {
                for i in 0..n {
                    acc[(i, i)] += c;
                }
            }
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).deg() == 0,
        }
    }

    /// Multiplicity of `x` as a factor.
    pub fn x_adic_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divide by `x^k` (the low coefficients must vanish).
    pub fn shift_down(&self, k: usize) -> Poly {
        assert!(self.coeffs.iter().take(k).all(Zero::is_zero));
        Poly::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// If `self = P(x^k)`, return `P`.
    pub fn as_poly_in_power(&self, k: usize) -> Option<Poly> {
        assert!(k > 0);
        if self
            .coeffs
            .iter()
            .enumerate()
            .any(|(i, c)| i % k != 0 && !c.is_zero())
        {
            return None;
        }
        Some(Poly::new(self.coeffs.iter().step_by(k).cloned().collect()))
    }

    /// `P(X^k)`.
    pub fn compose_power(&self, k: usize) -> Poly {
        let mut c = vec![Q::zero(); self.deg() * k + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            c[i * k] = a.clone();
        }
        Poly::new(c)
    }

    /// Yun's squarefree decomposition of the monic part: pairs `(a_i, i)`
    /// with `self ∝ ∏ a_i^i`, each `a_i` monic squarefree and nonconstant.
    pub fn squarefree_decomposition(&self) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.div_exact(&a0);
        let mut c = fp.div_exact(&a0);
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        loop {
            let a = b.gcd(&d);
            if a.deg() > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_exact(&a);
            if b.deg() == 0 {
                break;
            }
            c = d.div_exact(&a);
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    /// Factorisation over the rationals into monic irreducibles with
    /// multiplicities, sorted by (degree, coefficients).
    pub fn factor(&self) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        for (part, mult) in self.squarefree_decomposition() {
            let ints = part.primitive_integer();
            for g in factor::factor_squarefree(&ints) {
                let p = Poly::new(g.into_iter().map(Q::from_integer).collect()).monic();
                out.push((p, mult));
            }
        }
        out.sort_by_key(|a| a.0.sort_key());
        out
    }

    fn sort_key(&self) -> (usize, Vec<String>) {
        (
            self.coeffs.len(),
            self.coeffs
                .iter()
                .rev()
                .map(|c| format!("{c:>40}"))
                .collect(),
        )
    }

    /// Primitive integer polynomial with positive leading coefficient,
    /// proportional to `self`.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Q::from_integer(den.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !g.is_zero() {
            for c in ints.iter_mut() {
                *c /= &g;
            }
        }
        if ints.last().is_some_and(Signed::is_negative) {
            for c in ints.iter_mut() {
                *c = -c.clone();
            }
        }
        ints
    }

    /// Sturm sequence `p, p', -rem(p, p'), ...`.
    pub fn sturm_sequence(&self) -> Vec<Poly> {
        let mut seq = vec![self.clone()];
        if self.degree().unwrap_or(0) == 0 {
            return seq;
        }
        seq.push(self.derivative());
        loop {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1]).neg();
            if r.is_zero() {
                break;
            }
            seq.push(r);
        }
        seq
    }

    /// Number of distinct real roots, by Sturm's theorem.
    pub fn count_real_roots(&self) -> usize {
        let seq = self.sturm_sequence();
        let at_pos: Vec<i8> = seq.iter().map(|p| sign(&p.lc())).collect();
        let at_neg: Vec<i8> = seq
            .iter()
            .map(|p| {
                let s = sign(&p.lc());
                if p.deg() % 2 == 0 {
                    s
                } else {
                    -s
                }
            })
            .collect();
        variations(&at_neg).saturating_sub(variations(&at_pos))
    }

    /// Distinct real roots in the half-open interval `(a, b]`.
    pub fn count_real_roots_in(&self, a: &Q, b: &Q) -> usize {
        let seq = self.sturm_sequence();
        let sa: Vec<i8> = seq.iter().map(|p| sign(&p.eval(a))).collect();
        let sb: Vec<i8> = seq.iter().map(|p| sign(&p.eval(b))).collect();
        variations(&sa).saturating_sub(variations(&sb))
    }

    /// Rational roots (distinct), from the linear irreducible factors.
    pub fn rational_roots(&self) -> Vec<Q> {
        if self.is_zero() {
            return Vec::new();
        }
        self.factor()
            .into_iter()
            .filter(|(p, _)| p.deg() == 1)
            .map(|(p, _)| -p.coeff(0))
            .collect()
    }
}

fn sign(x: &Q) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn variations(s: &[i8]) -> usize {
    let nz: Vec<i8> = s.iter().copied().filter(|&x| x != 0).collect();
    nz.windows(2).filter(|w| w[0] != w[1]).count()
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let t = match i {
                0 => format!("{c}"),
                1 if c.is_one() => "X".to_string(),
                1 => format!("{c}*X"),
                _ if c.is_one() => format!("X^{i}"),
                _ => format!("{c}*X^{i}"),
            };
            terms.push(t);
        }
        write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;

    #[test]
    fn division_and_gcd() {
        let a = Poly::from_ints(&[-1, 0, 1]); // x^2 - 1
        let b = Poly::from_ints(&[1, 1]); // x + 1
        let (qq, r) = a.divrem(&b);
        assert_eq!(qq, Poly::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(
            a.gcd(&Poly::from_ints(&[-1, 0, 0, 1])),
            Poly::from_ints(&[-1, 1])
        );
    }

    #[test]
    fn yun_decomposition() {
        // (x-1)^3 (x+2)
        let f = Poly::from_ints(&[-1, 1])
            .pow(3)
            .mul(&Poly::from_ints(&[2, 1]));
        let d = f.squarefree_decomposition();
        assert_eq!(
            d,
            vec![
                (Poly::from_ints(&[2, 1]), 1),
                (Poly::from_ints(&[-1, 1]), 3)
            ]
        );
    }

    #[test]
    fn sturm_counts() {
        assert_eq!(Poly::from_ints(&[-1, 0, 0, 1]).count_real_roots(), 1);
        assert_eq!(Poly::from_ints(&[-2, 0, 1]).count_real_roots(), 2);
        assert_eq!(Poly::from_ints(&[1, 0, 1]).count_real_roots(), 0);
        let p = Poly::from_ints(&[-2, 0, 1]);
        assert_eq!(p.count_real_roots_in(&q(0), &q(2)), 1);
    }

    #[test]
    fn power_substitution() {
        let f = Poly::from_ints(&[3, 0, 0, 1, 0, 0, 2]);
        assert_eq!(f.as_poly_in_power(3), Some(Poly::from_ints(&[3, 1, 2])));
        assert_eq!(f.as_poly_in_power(2), None);
    }

    #[test]
    fn matrix_evaluation() {
        let m = Matrix::from_rows(vec![vec![q(0), q(1)], vec![q(1), q(0)]]);
        let p = Poly::from_ints(&[-1, 0, 1]);
        assert!(p.eval_matrix(&m).is_zero());
    }
}
