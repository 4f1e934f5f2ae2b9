use std::collections::BTreeMap;

use super::complete::{associativity_complete, Completion, PartialTable};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::q;
use crate::qalgebra::{LinOp, QRing, Term};
use crate::rootsys::{AffineRoot, Family, Root, RootSystem, RootSystemType};

/// Quantum Chevalley data of a coadjoint variety: the short-root Schubert
/// basis and the operator `h ⋆ −`.
#[derive(Clone, Debug)]
pub struct CoadjointChevalley {
    pub root_system: RootSystem,
    /// Short roots in basis order.
    pub basis: Vec<Root>,
    pub degrees: Vec<u32>,
    pub c1: u32,
    /// `rows[j]` lists `h ⋆ σ_j`.
    pub rows: Vec<Vec<Term>>,
    pub unit: usize,
    pub hyperplane: usize,
    /// Poincaré involution `σ_α ↦ σ_{−α}` as an index map.
    pub dual: Vec<usize>,
}

impl CoadjointChevalley {
    pub fn name(&self) -> String {
        let t = self.root_system.root_type();
        match t.family {
            Family::C => format!("IG(2,{})", 2 * t.rank),
            _ => format!("{t}/P{}", t.rank),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        self.basis
            .iter()
            .map(|r| format!("s:{}", r.label()))
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `E_h` at `q = 1`, columns indexed by the source class.
    pub fn e_h(&self) -> LinOp {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (j, row) in self.rows.iter().enumerate() {
            for t in row {
                m[(t.k, j)] += &t.c;
            }
        }
        LinOp::new(m)
    }

    /// Known data for [`associativity_complete`]: unit row, `h` row and the
    /// duality `σ_α^∨ = σ_{−α}`.
    pub fn partial(&self) -> PartialTable {
        let basis = self
            .labels()
            .into_iter()
            .zip(self.degrees.iter().copied())
            .collect();
        let products = self
            .rows
            .iter()
            .enumerate()
            .flat_map(|(j, row)| {
                row.iter()
                    .map(move |t| (self.hyperplane, j, t.k, t.d, t.c.clone()))
            })
            .collect();
        PartialTable {
            name: self.name(),
            basis,
            c1: self.c1,
            unit: self.unit,
            dual: self.dual.clone(),
            known_rows: vec![self.hyperplane],
            products,
        }
    }
}

fn supported(t: RootSystemType) -> bool {
    matches!((t.family, t.rank), (Family::C, n) if n >= 3) || (t.family, t.rank) == (Family::F, 4)
}

/// Chevalley rule on short roots. For a non-simple short root `α`,
/// `h ⋆ σ_α = Σ_{i ∈ [0,n], <α_i^∨, α> > 0} <α_i^∨, α> η(s_i α)`, the index
/// `0` being the affine node. For a simple short root `α_i` the classical
/// terms are `Σ_{α_j short simple} |<α_j^∨, α_i>| σ_{−α_j}`.
pub fn coadjoint_chevalley(t: RootSystemType) -> Result<CoadjointChevalley> {
    if !supported(t) {
        return Err(Error::Unsupported(format!(
            "coadjoint Chevalley rule is implemented for C_n (n >= 3) and F4, not {t}"
        )));
    }
    let rs = RootSystem::build(t)?;
    let n = rs.rank();
    let basis: Vec<Root> = rs.short_roots().to_vec();
    let index: BTreeMap<Root, usize> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, r)| (r, i))
        .collect();
    let degrees: Vec<u32> = basis
        .iter()
        .map(|r| rs.schubert_degree(r).map(|d| d as u32))
        .collect::<Result<_>>()?;
    let c1 = rs.highest_root().height() as u32;
    let qd = rs.q_degree() as u32;

    let mut rows = Vec::with_capacity(basis.len());
    for alpha in &basis {
        let mut acc: BTreeMap<(usize, u32), i64> = BTreeMap::new();
        let simple = (0..n).find(|&i| *alpha == rs.simple_root(i));
        let x = AffineRoot::from_finite(alpha.clone());
        for i in 0..=n {
            let c = rs.coroot_pairing(i, &x);
            if c <= 0 || (i > 0 && simple.is_some()) {
                continue;
            }
            let m = rs.eta(&rs.simple_reflection(i, &x))?;
            *acc.entry((index[&m.root], m.q_power as u32)).or_default() += c;
        }
        if let Some(i) = simple {
            for j in 0..n {
                let aj = rs.simple_root(j);
                if !rs.is_short(&aj) {
                    continue;
                }
                let c = rs.cartan()[j][i].abs();
                if c != 0 {
                    *acc.entry((index[&aj.neg()], 0)).or_default() += c;
                }
            }
        }
        rows.push(
            acc.into_iter()
                .map(|((k, d), c)| Term { k, d, c: q(c) })
                .collect::<Vec<_>>(),
        );
    }
    for (j, row) in rows.iter().enumerate() {
        for tm in row {
            if degrees[tm.k] + tm.d * qd != degrees[j] + 2 {
                return Err(Error::validation(
                    "chevalley-degree",
                    format!(
                        "h * σ{} has a term σ{} q^{}",
                        basis[j].label(),
                        basis[tm.k].label(),
                        tm.d
                    ),
                ));
            }
        }
    }
    let unit = index[rs.highest_short_root()];
    let hyperplane = degrees
        .iter()
        .position(|&d| d == 2)
        .ok_or(Error::MissingDegree2)?;
    let dual = basis.iter().map(|r| index[&r.neg()]).collect();
    Ok(CoadjointChevalley {
        root_system: rs,
        basis,
        degrees,
        c1,
        rows,
        unit,
        hyperplane,
        dual,
    })
}

/// Complete quantum cohomology of a coadjoint variety, from the Chevalley
/// rule, duality and associativity.
pub fn coadjoint_ring(t: RootSystemType) -> Result<QRing> {
    let ch = coadjoint_chevalley(t)?;
    match associativity_complete(&ch.partial())? {
        Completion::Complete(r) => Ok(r),
        Completion::Underdetermined { free, .. } => Err(Error::Inconsistent(format!(
            "{} is not determined by associativity ({free} free parameters)",
            ch.name()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c3_unit_row() {
        let ch = coadjoint_chevalley("C3".parse().unwrap()).unwrap();
        assert_eq!(ch.dim(), 12);
        assert_eq!(ch.c1, 5);
        assert_eq!(ch.degrees[ch.unit], 0);
        // h ⋆ 1 = h
        assert_eq!(
            ch.rows[ch.unit],
            vec![Term {
                k: ch.hyperplane,
                d: 0,
                c: q(1)
            }]
        );
    }

    #[test]
    fn unsupported_types() {
        for s in ["B3", "C2", "G2", "E6", "A3"] {
            assert!(coadjoint_chevalley(s.parse().unwrap()).is_err(), "{s}");
        }
    }
}
