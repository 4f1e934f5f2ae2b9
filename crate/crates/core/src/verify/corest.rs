//! The restriction square relating `E_h` on a variety `X` and on a general
//! hyperplane section `Y ⊂ X`.
//!
//! Strata are residues of the `q = 1` grading. On `A_a`, `J` is `j^*` on the
//! low part `H^a(X)` and `j_*^{-1}` on the high part `H^{2c₁(X)+a}(X)`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{CheckResult, Status};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::qalgebra::QRing;
use crate::rings::Partition2;
use crate::Q;

/// `J` on one residue class: columns indexed by `source` (basis indices of
/// `X`), rows by `target` (basis indices of `Y`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumMap {
    pub residue: u32,
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    pub matrix: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corestriction {
    /// Codimension of the linear section.
    pub k: u32,
    /// Maps on consecutive even residues starting at `0`.
    pub strata: Vec<StratumMap>,
    /// `J` on `A_{2c₁(Y)−2}`.
    pub second: StratumMap,
}

fn residue_class(r: &QRing, residue: u32) -> Vec<usize> {
    let m = 2 * r.c1();
    (0..r.dim())
        .filter(|&i| r.degree(i) % m == residue)
        .collect()
}

impl Corestriction {
    /// `X = Y`, `k = 0`, `J = id` on every stratum.
    pub fn identity(r: &QRing) -> Self {
        let id = |residue: u32| {
            let s = residue_class(r, residue);
            StratumMap {
                residue,
                matrix: Matrix::identity(s.len()),
                target: s.clone(),
                source: s,
            }
        };
        let top = r.top_degree().saturating_sub(2 * r.c1());
        let strata = (0..=top).step_by(2).map(id).collect();
        Corestriction {
            k: 0,
            strata,
            second: id(2 * r.c1() - 2),
        }
    }

    /// The same map with two target rows exchanged on stratum `residue`.
    pub fn swap_targets(&self, residue: u32, a: usize, b: usize) -> Result<Self> {
        let mut out = self.clone();
        let s = out
            .strata
            .iter_mut()
            .find(|s| s.residue == residue)
            .ok_or_else(|| Error::Unsupported(format!("no stratum {residue}")))?;
        if a >= s.target.len() || b >= s.target.len() {
            return Err(Error::Unsupported("swap outside the stratum".into()));
        }
        let mut rows = s.matrix.to_rows();
        rows.swap(a, b);
        s.matrix = Matrix::from_rows(rows);
        Ok(out)
    }

    /// `Gr(2, 2n) ⊃ IG(2, 2n)` with `j^*σ₁ = h` and `j^*σ_{(1,1)}` the
    /// unique degree-4 class of `Y` making `j^*` a ring map with
    /// `j_* j^* = h ∪ −`.
    pub fn grassmannian_section(x: &QRing, y: &QRing) -> Result<Self> {
        let n2 = x
            .labels()
            .iter()
            .filter_map(|l| Partition2::parse_label(l))
            .map(|p| p.a)
            .max()
            .ok_or_else(|| Error::Unsupported(format!("{} is not Gr(2,n)", x.name())))?
            + 2;
        if x.c1() != y.c1() + 1 || y.top_degree() + 2 != x.top_degree() {
            return Err(Error::Unsupported(format!(
                "{} is not a hyperplane section of {}",
                y.name(),
                x.name()
            )));
        }
        let hy = y.hyperplane_index()?;
        let candidates: Vec<usize> = (0..y.dim()).filter(|&i| y.degree(i) == 4).collect();
        let mut found = Vec::new();
        for &s in &candidates {
            if let Some(pb) = Pullback::from_sigma11(x, y, n2, hy, s) {
                found.push(pb);
            }
        }
        let pb = match found.len() {
            1 => found.pop().unwrap(),
            0 => {
                return Err(Error::Inconsistent(
                    "no degree-4 class gives a pullback".into(),
                ))
            }
            m => {
                return Err(Error::Inconsistent(format!(
                    "{m} degree-4 classes give a pullback; dictionary is ambiguous"
                )))
            }
        };
        pb.corestriction(x, y)
    }
}

/// Classical product of basis classes (`q⁰` part).
fn classical(r: &QRing, a: &[Q], b: &[Q]) -> Vector {
    let mut out = vec![Q::zero(); r.dim()];
    for (i, ai) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        for (j, bj) in b.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for t in r.product(i, j).iter().filter(|t| t.d == 0) {
                out[t.k] += ai * bj * &t.c;
            }
        }
    }
    out
}

fn unit(n: usize, i: usize) -> Vector {
    let mut v = vec![Q::zero(); n];
    v[i] = Q::one();
    v
}

/// `j^*` on every basis class of `X` and `j_*` on every basis class of `Y`.
struct Pullback {
    pull: Vec<Vector>,
    push: Vec<Vector>,
}

impl Pullback {
    fn from_sigma11(x: &QRing, y: &QRing, n: usize, hy: usize, s: usize) -> Option<Self> {
        let ny = y.dim();
        let h = unit(ny, hy);
        let s11 = unit(ny, s);
        // one-row classes: τ_k = h τ_{k−1} − σ₁₁ τ_{k−2}
        let mut tau = vec![unit(ny, y.unit_index()), h.clone()];
        for k in 2..=n {
            let a = classical(y, &h, &tau[k - 1]);
            let b = classical(y, &s11, &tau[k - 2]);
            tau.push(a.iter().zip(&b).map(|(p, q)| p - q).collect());
        }
        // Gr(2, n) relations
        if tau[n - 1].iter().chain(&tau[n]).any(|c| !c.is_zero()) {
            return None;
        }
        let mut pull = Vec::with_capacity(x.dim());
        for l in x.labels() {
            let p = Partition2::parse_label(l)?;
            let mut v = tau[p.a - p.b].clone();
            for _ in 0..p.b {
                v = classical(y, &s11, &v);
            }
            pull.push(v);
        }
        // j_* by adjunction: ∫_X j_*(b) ∪ σ = ∫_Y b ∪ j^*σ
        let ptx = x.point_index()?;
        let pty = y.point_index()?;
        let nx = x.dim();
        let pair_x = Matrix::from_fn(nx, nx, |i, j| {
            classical(x, &unit(nx, i), &unit(nx, j))[ptx].clone()
        });
        let inv = pair_x.inverse()?;
        let mut push = Vec::with_capacity(ny);
        for b in 0..ny {
            let rhs: Vector = (0..nx)
                .map(|l| classical(y, &unit(ny, b), &pull[l])[pty].clone())
                .collect();
            push.push(inv.transpose().mul_vec(&rhs));
        }
        // j_* j^* = h ∪ −
        let hx = x.hyperplane_index().ok()?;
        for i in 0..nx {
            let mut lhs = vec![Q::zero(); nx];
            for (b, c) in pull[i].iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                for (k, v) in push[b].iter().enumerate() {
                    lhs[k] += c * v;
                }
            }
            if lhs != classical(x, &unit(nx, hx), &unit(nx, i)) {
                return None;
            }
        }
        Some(Self { pull, push })
    }

    fn corestriction(&self, x: &QRing, y: &QRing) -> Result<Corestriction> {
        let (c1x, c1y) = (x.c1(), y.c1());
        let top = y.top_degree() - 2 * c1y;
        let mut strata = Vec::new();
        for a in (0..=top).step_by(2) {
            let source = residue_class(x, a);
            let target = residue_class(y, a);
            let low_y: Vec<usize> = target
                .iter()
                .copied()
                .filter(|&i| y.degree(i) == a)
                .collect();
            let high_y: Vec<usize> = target
                .iter()
                .copied()
                .filter(|&i| y.degree(i) == 2 * c1y + a)
                .collect();
            let high_x: Vec<usize> = source
                .iter()
                .copied()
                .filter(|&i| x.degree(i) == 2 * c1x + a)
                .collect();
            // j_* from the high part of Y onto the high part of X
            let p = Matrix::from_fn(high_x.len(), high_y.len(), |r, c| {
                self.push[high_y[c]][high_x[r]].clone()
            });
            let pinv = p.inverse().ok_or_else(|| {
                Error::Inconsistent(format!("j_* is not invertible on stratum {a}"))
            })?;
            let mut m = Matrix::zeros(target.len(), source.len());
            for (col, &i) in source.iter().enumerate() {
                if x.degree(i) == a {
                    for (row, &t) in target.iter().enumerate() {
                        if low_y.contains(&t) {
                            m[(row, col)] = self.pull[i][t].clone();
                        }
                    }
                } else if let Some(hc) = high_x.iter().position(|&z| z == i) {
                    for (hr, &t) in high_y.iter().enumerate() {
                        let row = target.iter().position(|&z| z == t).unwrap();
                        m[(row, col)] = pinv[(hr, hc)].clone();
                    }
                } else {
                    return Err(Error::Unsupported(format!(
                        "class {} does not fit stratum {a}",
                        x.label(i)
                    )));
                }
            }
            strata.push(StratumMap {
                residue: a,
                source,
                target,
                matrix: m,
            });
        }
        let r = 2 * c1y - 2;
        let source = residue_class(x, r);
        let target = residue_class(y, r);
        if source.iter().any(|&i| x.degree(i) != r) || target.iter().any(|&i| y.degree(i) != r) {
            return Err(Error::Unsupported(
                "stratum 2c1(Y)-2 has a second summand; only 2c1(Y)-1 > dim Y is handled".into(),
            ));
        }
        let m = Matrix::from_fn(target.len(), source.len(), |row, col| {
            self.pull[source[col]][target[row]].clone()
        });
        Ok(Corestriction {
            k: 1,
            strata,
            second: StratumMap {
                residue: r,
                source,
                target,
                matrix: m,
            },
        })
    }
}

/// Matrix of `E_{h^power}` at `q = 1` between two lists of basis indices.
fn restricted(r: &QRing, power: u32, src: &[usize], dst: &[usize]) -> Result<Matrix> {
    let h = r.hyperplane_index()?;
    let mut m = Matrix::zeros(dst.len(), src.len());
    let pos: BTreeMap<usize, usize> = dst.iter().enumerate().map(|(i, &k)| (k, i)).collect();
    for (col, &j) in src.iter().enumerate() {
        let mut v = crate::qalgebra::QElem::basis(j);
        for _ in 0..power {
            v = r.mul_basis(h, &v);
        }
        for (k, _, c) in v.terms() {
            let row = pos.get(&k).ok_or_else(|| {
                Error::Internal(format!("E_h leaves the stratum at {}", r.label(k)))
            })?;
            m[(*row, col)] += c;
        }
    }
    Ok(m)
}

fn render(m: &Matrix) -> String {
    m.to_rows()
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|c| c.to_string()).collect();
            format!("[{}]", cells.join(" "))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Both squares of the restriction diagram, exactly.
pub fn corest_check(x: &QRing, y: &QRing, j: &Corestriction) -> CheckResult {
    let id = format!("corest.{}.{}", x.name(), y.name());
    let anchor = "restriction squares for E_h";
    match corest_inner(x, y, j) {
        Ok(None) => CheckResult::pass(
            id,
            anchor,
            format!(
                "{} first squares and the E_h^{} square commute",
                j.strata.len().saturating_sub(1),
                j.k + 1
            ),
        ),
        Ok(Some((residue, diff))) => CheckResult {
            id,
            anchor: anchor.into(),
            status: Status::Fail,
            detail: format!("square at stratum {residue} does not commute"),
            witness: Some(format!(
                "stratum {residue}: J E^X - E^Y J = {}",
                render(&diff)
            )),
        },
        Err(e) => CheckResult {
            id,
            anchor: anchor.into(),
            status: Status::Fail,
            detail: format!("malformed correspondence: {e}"),
            witness: None,
        },
    }
}

fn corest_inner(x: &QRing, y: &QRing, j: &Corestriction) -> Result<Option<(u32, Matrix)>> {
    let find = |res: u32| j.strata.iter().find(|s| s.residue == res);
    for s in &j.strata {
        let Some(t) = find(s.residue + 2) else {
            continue;
        };
        let ex = restricted(x, 1, &s.source, &t.source)?;
        let ey = restricted(y, 1, &s.target, &t.target)?;
        let diff = t.matrix.mul(&ex).sub(&ey.mul(&s.matrix));
        if !diff.is_zero() {
            return Ok(Some((s.residue, diff)));
        }
    }
    let zero = find(0).ok_or_else(|| Error::Unsupported("no stratum 0".into()))?;
    let s = &j.second;
    let ex = restricted(x, j.k + 1, &s.source, &zero.source)?;
    let ey = restricted(y, 1, &s.target, &zero.target)?;
    let diff = zero.matrix.mul(&ex).sub(&ey.mul(&s.matrix));
    if !diff.is_zero() {
        return Ok(Some((s.residue, diff)));
    }
    Ok(None)
}
