use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qalgebra::{QElem, QRing};
use crate::{q, Q};

/// Partition `(a, b)` with `a ≥ b ≥ 0`, indexing the Schubert class
/// `σ_{(a,b)}` of `Gr(2, n)` when `a ≤ n − 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition2 {
    pub a: usize,
    pub b: usize,
}

impl Partition2 {
    pub fn new(a: usize, b: usize) -> Option<Self> {
        (a >= b).then_some(Self { a, b })
    }

    pub fn size(&self) -> usize {
        self.a + self.b
    }

    pub fn fits(&self, n: usize) -> bool {
        self.a + 2 <= n
    }

    /// Complement in the `2 × (n−2)` rectangle.
    pub fn dual(&self, n: usize) -> Self {
        Self {
            a: n - 2 - self.b,
            b: n - 2 - self.a,
        }
    }

    pub fn label(&self) -> String {
        format!("p:{},{}", self.a, self.b)
    }

    pub fn parse_label(s: &str) -> Option<Self> {
        let (a, b) = s.strip_prefix("p:")?.split_once(',')?;
        Self::new(a.parse().ok()?, b.parse().ok()?)
    }

    /// All partitions in the rectangle, by size then by `a` ascending.
    pub fn all(n: usize) -> Vec<Self> {
        let mut v: Vec<Self> = (0..=n - 2)
            .flat_map(|a| (0..=a).map(move |b| Self { a, b }))
            .collect();
        v.sort_by_key(|p| (p.size(), p.a));
        v
    }
}

impl fmt::Display for Partition2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Two-row Littlewood–Richardson product in `GL_2` Schur functions.
fn two_row_product(x: Partition2, y: Partition2) -> Vec<Partition2> {
    let (u, v) = (x.a - x.b, y.a - y.b);
    let base = x.b + y.b;
    (0..=u.min(v))
        .map(|j| Partition2 {
            a: u + v - j + base,
            b: j + base,
        })
        .collect()
}

/// Strip `n`-rim hooks until the shape fits the rectangle; returns
/// `(sign, q power, shape)` or `None` if the class vanishes.
fn rim_hook_reduce(mut p: Partition2, n: usize) -> Option<(i64, u32, Partition2)> {
    let mut sign = 1;
    let mut d = 0;
    while !p.fits(n) {
        if p.a >= n + p.b {
            // horizontal hook in the first row
            p = Partition2 { a: p.a - n, b: p.b };
            sign = -sign;
        } else if p.b >= 1 && p.a + 1 >= n && p.b > p.a + 1 - n {
            // hook through both rows, ending under the last box of row two
            p = Partition2 {
                a: p.b - 1,
                b: p.a + 1 - n,
            };
        } else {
            return None;
        }
        d += 1;
    }
    Some((sign, d, p))
}

/// Full `QH(Gr(2, n))` in the Schubert basis.
pub fn grassmannian2(n: usize) -> Result<QRing> {
    if n < 4 {
        return Err(Error::Unsupported("Gr(2,n) needs n >= 4".into()));
    }
    let parts = Partition2::all(n);
    let index: BTreeMap<Partition2, usize> =
        parts.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let mut products = Vec::new();
    for (i, &x) in parts.iter().enumerate() {
        for (j, &y) in parts.iter().enumerate().skip(i) {
            for z in two_row_product(x, y) {
                if let Some((sign, d, w)) = rim_hook_reduce(z, n) {
                    products.push((i, j, index[&w], d, q(sign)));
                }
            }
        }
    }
    let basis = parts
        .iter()
        .map(|p| (p.label(), 2 * p.size() as u32))
        .collect();
    let ring = QRing::new(format!("Gr(2,{n})"), basis, n as u32, 0, products)?;

    // Self-checks: Poincaré duality and σ_{(1,1)}^{n−2} = σ_{(n−2,n−2)}.
    let top = index[&Partition2 { a: n - 2, b: n - 2 }];
    for (i, p) in parts.iter().enumerate() {
        let j = index[&p.dual(n)];
        for (k, kk) in parts.iter().enumerate() {
            let c = ring
                .product(i, k)
                .iter()
                .find(|t| t.k == top && t.d == 0)
                .map_or(Q::zero(), |t| t.c.clone());
            let expect = if k == j { Q::one() } else { Q::zero() };
            if c != expect {
                return Err(Error::validation(
                    "poincare-duality",
                    format!("<σ{p}, σ{kk}> = {c}"),
                ));
            }
        }
    }
    let s11 = index[&Partition2 { a: 1, b: 1 }];
    let mut pw = QElem::basis(0);
    for _ in 0..n - 2 {
        pw = ring.mul_basis(s11, &pw);
    }
    if pw != QElem::basis(top) {
        return Err(Error::validation(
            "sigma11-power",
            format!("σ(1,1)^{} is not the point class", n - 2),
        ));
    }
    Ok(ring)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(r: &QRing, a: usize, b: usize) -> usize {
        r.index_of(&Partition2 { a, b }.label()).unwrap()
    }

    #[test]
    fn gr24_quantum_products() {
        let r = grassmannian2(4).unwrap();
        let (s1, s2, s11, s21, s22) = (
            idx(&r, 1, 0),
            idx(&r, 2, 0),
            idx(&r, 1, 1),
            idx(&r, 2, 1),
            idx(&r, 2, 2),
        );
        let p = |i: usize, j: usize| r.mul(&QElem::basis(i), &QElem::basis(j));
        let mut e = QElem::basis(s22);
        e.add_term(0, 1, q(1));
        assert_eq!(p(s1, s21), e);
        assert_eq!(p(s2, s11), QElem::monomial(0, 1, q(1)));
        assert_eq!(p(s11, s22), QElem::monomial(s2, 1, q(1)));
        assert_eq!(p(s2, s22), QElem::monomial(s11, 1, q(1)));
    }

    #[test]
    fn rim_hook_cases() {
        assert_eq!(
            rim_hook_reduce(Partition2 { a: 3, b: 3 }, 4),
            Some((1, 1, Partition2 { a: 2, b: 0 }))
        );
        assert_eq!(
            rim_hook_reduce(Partition2 { a: 5, b: 1 }, 4),
            Some((-1, 1, Partition2 { a: 1, b: 1 }))
        );
        assert_eq!(rim_hook_reduce(Partition2 { a: 3, b: 0 }, 4), None);
        assert_eq!(
            rim_hook_reduce(Partition2 { a: 7, b: 1 }, 5),
            Some((-1, 1, Partition2 { a: 2, b: 1 }))
        );
    }
}
