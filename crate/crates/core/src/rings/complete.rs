use std::collections::{BTreeMap, HashSet};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qalgebra::QRing;
use crate::Q;

/// A ring known only partially: the unit, the Poincaré involution and a few
/// full rows of the multiplication table.
#[derive(Clone, Debug)]
pub struct PartialTable {
    pub name: String,
    pub basis: Vec<(String, u32)>,
    pub c1: u32,
    pub unit: usize,
    /// `dual[i]` is the class paired to `1` with `e_i` (the pairing is the
    /// permutation matrix of `dual`).
    pub dual: Vec<usize>,
    /// Indices `g` for which every product `e_g ⋆ e_j` is listed.
    pub known_rows: Vec<usize>,
    /// Products `(i, j, k, d, c)`: `c q^d e_k` occurs in `e_i ⋆ e_j`.
    pub products: Vec<(usize, usize, usize, u32, Q)>,
}

impl PartialTable {
    /// Keep only the given rows of a complete ring.
    pub fn from_ring(r: &QRing, dual: Vec<usize>, rows: &[usize]) -> Self {
        let mut products = Vec::new();
        for &g in rows {
            for j in 0..r.dim() {
                for t in r.product(g, j) {
                    products.push((g, j, t.k, t.d, t.c.clone()));
                }
            }
        }
        Self {
            name: r.name().to_string(),
            basis: r
                .labels()
                .iter()
                .cloned()
                .zip(r.degrees().iter().copied())
                .collect(),
            c1: r.c1(),
            unit: r.unit_index(),
            dual,
            known_rows: rows.to_vec(),
            products,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Completion {
    Complete(QRing),
    /// The constraints leave `free` of the `unknowns` structure constants
    /// undetermined.
    Underdetermined {
        unknowns: usize,
        free: usize,
    },
}

#[derive(Clone, Debug)]
enum Slot {
    Absent,
    Known(Q),
    Unknown(usize),
}

/// Sparse row `Σ r_x u_x + c = 0`.
#[derive(Clone, Debug, Default)]
struct Row {
    coef: BTreeMap<usize, Q>,
    c: Q,
}

impl Row {
    fn add_var(&mut self, x: usize, v: Q) {
        let e = self.coef.entry(x).or_insert_with(Q::zero);
        *e += v;
        if e.is_zero() {
            self.coef.remove(&x);
        }
    }
}

/// Fully reduced echelon form, maintained incrementally.
#[derive(Default)]
struct Elim {
    piv: BTreeMap<usize, Row>,
}

impl Elim {
    fn reduce(&self, mut r: Row) -> Row {
        loop {
            let Some(x) = r.coef.keys().find(|x| self.piv.contains_key(x)).copied() else {
                return r;
            };
            let g = r.coef[&x].clone();
            let p = &self.piv[&x];
            for (y, v) in &p.coef {
                r.add_var(*y, -(&g * v));
            }
            r.c -= &g * &p.c;
        }
    }

    /// Returns whether the row added a pivot; errors on `0 = c ≠ 0`.
    fn insert(&mut self, r: Row) -> Result<bool> {
        let r = self.reduce(r);
        let Some((&x, g)) = r.coef.iter().next() else {
            if !r.c.is_zero() {
                return Err(Error::Inconsistent(
                    "associativity constraints have no solution".into(),
                ));
            }
            return Ok(false);
        };
        let g = g.clone();
        let r = Row {
            coef: r.coef.iter().map(|(y, v)| (*y, v / &g)).collect(),
            c: &r.c / &g,
        };
        for p in self.piv.values_mut() {
            if let Some(h) = p.coef.get(&x).cloned() {
                for (y, v) in &r.coef {
                    p.add_var(*y, -(&h * v));
                }
                p.c -= &h * &r.c;
            }
        }
        self.piv.insert(x, r);
        Ok(true)
    }

    /// Unknowns whose value no longer depends on free variables.
    fn determined(&self) -> BTreeMap<usize, Q> {
        self.piv
            .iter()
            .filter(|(_, r)| r.coef.len() == 1)
            .map(|(x, r)| (*x, -r.c.clone()))
            .collect()
    }
}

struct Tensor {
    n: usize,
    slots: Vec<Slot>,
}

impl Tensor {
    fn get(&self, i: usize, j: usize, k: usize) -> &Slot {
        &self.slots[(i * self.n + j) * self.n + k]
    }
}

/// Fill in the unknown structure constants from commutativity, grading,
/// Frobenius symmetry of `(a ⋆ b, c)` and associativity.
///
/// The unknowns are the values `T(i,j,k) = (e_i ⋆ e_j, e_k)`, symmetric in
/// their arguments, with the q power forced by the grading. Associativity
/// against the known rows gives linear equations; the remaining relations are
/// added whenever substitution of the values found so far makes them linear.
pub fn associativity_complete(p: &PartialTable) -> Result<Completion> {
    let n = p.basis.len();
    if p.dual.len() != n || p.unit >= n {
        return Err(Error::Unsupported(
            "partial table has inconsistent shape".into(),
        ));
    }
    let degs: Vec<u32> = p.basis.iter().map(|b| b.1).collect();
    let top = degs.iter().copied().max().unwrap_or(0);
    let qd = 2 * p.c1;
    let qpow = |i: usize, j: usize, k: usize| -> Option<u32> {
        let s = degs[i] + degs[j] + degs[k];
        (s >= top && (s - top) % qd == 0).then(|| (s - top) / qd)
    };
    let key = |i: usize, j: usize, k: usize| {
        let mut a = [i, j, k];
        a.sort_unstable();
        (a[0], a[1], a[2])
    };

    // Known values.
    let mut known: BTreeMap<(usize, usize, usize), Q> = BTreeMap::new();
    let mut set = |kk: (usize, usize, usize), v: Q, what: &str| -> Result<()> {
        if let Some(old) = known.get(&kk) {
            if *old != v {
                return Err(Error::Inconsistent(format!(
                    "conflicting values for T{kk:?} from {what}"
                )));
            }
        }
        known.insert(kk, v);
        Ok(())
    };
    for j in 0..n {
        for k in 0..n {
            if qpow(p.unit, j, k).is_some() {
                let v = if k == p.dual[j] { Q::one() } else { Q::zero() };
                set(key(p.unit, j, k), v, "the unit")?;
            }
        }
    }
    let mut rows: BTreeMap<(usize, usize), BTreeMap<usize, Q>> = BTreeMap::new();
    for (i, j, k, d, c) in &p.products {
        let (i, j, k, d) = (*i, *j, *k, *d);
        if i >= n || j >= n || k >= n {
            return Err(Error::Unsupported(format!(
                "product ({i},{j},{k},{d}) out of range"
            )));
        }
        if qpow(i, j, p.dual[k]) != Some(d) {
            return Err(Error::validation(
                "grading",
                format!("known product ({i},{j},{k},{d}) has the wrong q power"),
            ));
        }
        *rows
            .entry((i, j))
            .or_default()
            .entry(k)
            .or_insert_with(Q::zero) += c;
    }
    for &g in &p.known_rows {
        for j in 0..n {
            let row = rows.get(&(g, j));
            for k in 0..n {
                if qpow(g, j, k).is_none() {
                    continue;
                }
                let v = row
                    .and_then(|r| r.get(&p.dual[k]))
                    .cloned()
                    .unwrap_or_else(Q::zero);
                set(key(g, j, k), v, "a known row")?;
            }
        }
    }

    let mut unknown_keys: Vec<(usize, usize, usize)> = Vec::new();
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                if qpow(i, j, k).is_some() && !known.contains_key(&(i, j, k)) {
                    unknown_keys.push((i, j, k));
                }
            }
        }
    }
    let col: BTreeMap<(usize, usize, usize), usize> = unknown_keys
        .iter()
        .enumerate()
        .map(|(c, k)| (*k, c))
        .collect();
    let mut slots = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let kk = key(i, j, k);
                slots.push(if qpow(i, j, k).is_none() {
                    Slot::Absent
                } else if let Some(v) = known.get(&kk) {
                    Slot::Known(v.clone())
                } else {
                    Slot::Unknown(col[&kk])
                });
            }
        }
    }
    let mut t = Tensor { n, slots };

    // Equation ((e_g ⋆ e_j) ⋆ e_k, e_l) = (e_g ⋆ (e_j ⋆ e_k), e_l), returned
    // only if it is linear.
    let equation = |t: &Tensor, g: usize, j: usize, k: usize, l: usize| -> Option<Row> {
        let mut r = Row::default();
        for m in 0..n {
            let md = p.dual[m];
            for (a, b, s) in [
                (t.get(g, j, m), t.get(md, k, l), 1),
                (t.get(j, k, m), t.get(md, g, l), -1),
            ] {
                let sign = if s == 1 { Q::one() } else { -Q::one() };
                match (a, b) {
                    (Slot::Absent, _) | (_, Slot::Absent) => {}
                    (Slot::Known(x), Slot::Known(y)) => r.c += sign * x * y,
                    (Slot::Known(x), Slot::Unknown(u)) | (Slot::Unknown(u), Slot::Known(x)) => {
                        r.add_var(*u, sign * x)
                    }
                    (Slot::Unknown(_), Slot::Unknown(_)) => return None,
                }
            }
        }
        (!r.coef.is_empty() || !r.c.is_zero()).then_some(r)
    };

    let mut elim = Elim::default();
    let generators: Vec<usize> = p
        .known_rows
        .iter()
        .copied()
        .filter(|&g| g != p.unit)
        .collect();
    for &g in &generators {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    if let Some(r) = equation(&t, g, j, k, l) {
                        elim.insert(r)?;
                    }
                }
            }
        }
    }

    // Substitute determined values and retry the remaining relations.
    let mut applied: HashSet<usize> = HashSet::new();
    loop {
        let fresh: BTreeMap<usize, Q> = elim
            .determined()
            .into_iter()
            .filter(|(x, _)| !applied.contains(x))
            .collect();
        for s in t.slots.iter_mut() {
            if let Slot::Unknown(u) = s {
                if let Some(v) = fresh.get(u) {
                    *s = Slot::Known(v.clone());
                }
            }
        }
        applied.extend(fresh.keys());
        if applied.len() == unknown_keys.len() {
            break;
        }
        let mut progress = false;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        if let Some(r) = equation(&t, i, j, k, l) {
                            progress |= elim.insert(r)?;
                        }
                    }
                }
            }
        }
        if !progress {
            break;
        }
    }

    let det = elim.determined();
    if det.len() < unknown_keys.len() {
        return Ok(Completion::Underdetermined {
            unknowns: unknown_keys.len(),
            free: unknown_keys.len() - elim.piv.len(),
        });
    }
    for (kk, c) in &col {
        known.insert(*kk, det[c].clone());
    }
    let mut products = Vec::new();
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                if let Some(d) = qpow(i, j, k) {
                    let v = &known[&key(i, j, k)];
                    if !v.is_zero() {
                        products.push((i, j, p.dual[k], d, v.clone()));
                    }
                }
            }
        }
    }
    let ring = QRing::new(p.name.clone(), p.basis.clone(), p.c1, p.unit, products)?;
    // The completed ring must reproduce the given rows.
    for (&(i, j), row) in &rows {
        for (k, c) in row {
            let got = ring
                .product(i, j)
                .iter()
                .find(|tm| tm.k == *k)
                .map_or(Q::zero(), |tm| tm.c.clone());
            if got != *c {
                return Err(Error::Inconsistent(format!(
                    "known product ({i},{j}) is not Frobenius-symmetric at e{k}"
                )));
            }
        }
    }
    Ok(Completion::Complete(ring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;
    use crate::rings::projective_space;

    fn pn_dual(n: usize) -> Vec<usize> {
        (0..=n).map(|j| n - j).collect()
    }

    #[test]
    fn projective_space_from_h_row() {
        for n in 1..7 {
            let r = projective_space(n).unwrap();
            let p = PartialTable::from_ring(&r, pn_dual(n), &[1]);
            assert_eq!(associativity_complete(&p).unwrap(), Completion::Complete(r));
        }
    }

    #[test]
    fn complete_input_is_fixed() {
        let r = projective_space(4).unwrap();
        let all: Vec<usize> = (0..5).collect();
        let p = PartialTable::from_ring(&r, pn_dual(4), &all);
        assert_eq!(associativity_complete(&p).unwrap(), Completion::Complete(r));
    }

    #[test]
    fn toy_has_one_free_parameter() {
        // Classical 1, h, u, pt in degrees 0, 2, 4, 6 with only the unit known:
        // h ⋆ h = λ u is unconstrained.
        let p = PartialTable {
            name: "toy".into(),
            basis: vec![
                ("1".into(), 0),
                ("h".into(), 2),
                ("u".into(), 4),
                ("pt".into(), 6),
            ],
            c1: 100,
            unit: 0,
            dual: vec![3, 2, 1, 0],
            known_rows: vec![],
            products: vec![],
        };
        assert_eq!(
            associativity_complete(&p).unwrap(),
            Completion::Underdetermined {
                unknowns: 1,
                free: 1
            }
        );
    }

    #[test]
    fn conflicting_rows_rejected() {
        let r = projective_space(2).unwrap();
        let mut p = PartialTable::from_ring(&r, pn_dual(2), &[1]);
        p.products.push((1, 1, 2, 0, q(1)));
        assert!(matches!(
            associativity_complete(&p),
            Err(Error::Inconsistent(_))
        ));
    }
}
