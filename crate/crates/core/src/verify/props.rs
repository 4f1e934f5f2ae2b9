//! Randomised algebraic properties over seeded commutative algebras.
//!
//! Test algebras are products of `Q[x]/(p)` with `p` a product of powers of
//! distinct irreducibles, written in a random rational basis. The radical
//! dimension of such a product is known in closed form.

use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::CheckResult;
use crate::linalg::{
    ldlt_positive_definite, span_contains, sylvester_positive_definite, Matrix, Vector,
};
use crate::poly::Poly;
use crate::qalgebra::{SpecializedAlgebra, SpectralDecomposition};
use crate::{q, Q};

pub const PROPS_SEED: u64 = 0x5eed_2024;

/// Irreducible factor with multiplicity.
#[derive(Clone, Debug)]
struct Factor {
    poly: Poly,
    mult: usize,
}

/// `Q[x]/(Π f_i^{k_i})` and its radical dimension `Σ (k_i − 1) deg f_i`.
fn local_product(factors: &[Factor]) -> (Vec<Vec<Vector>>, Vector, usize) {
    let p = factors
        .iter()
        .fold(Poly::one(), |acc, f| acc.mul(&f.poly.pow(f.mult)));
    let m = p.deg();
    let reduce = |k: usize| -> Vector {
        let r = Poly::monomial(Q::one(), k).rem(&p);
        (0..m).map(|i| r.coeff(i)).collect()
    };
    let table = (0..m)
        .map(|i| (0..m).map(|j| reduce(i + j)).collect())
        .collect();
    let rad = factors.iter().map(|f| (f.mult - 1) * f.poly.deg()).sum();
    (table, reduce(0), rad)
}

fn direct_sum(parts: &[(Vec<Vec<Vector>>, Vector)]) -> (Vec<Vec<Vector>>, Vector) {
    let n: usize = parts.iter().map(|p| p.1.len()).sum();
    let mut table = vec![vec![vec![Q::zero(); n]; n]; n];
    let mut unit = vec![Q::zero(); n];
    let mut off = 0;
    for (t, u) in parts {
        let m = u.len();
        for i in 0..m {
            unit[off + i] = u[i].clone();
            for j in 0..m {
                for k in 0..m {
                    table[off + i][off + j][off + k] = t[i][j][k].clone();
                }
            }
        }
        off += m;
    }
    (table, unit)
}

/// Rewrite structure constants in the basis given by the columns of `p`.
fn change_basis(table: &[Vec<Vector>], unit: &[Q], p: &Matrix) -> (Vec<Vec<Vector>>, Vector) {
    let n = unit.len();
    let inv = p.inverse().expect("invertible change of basis");
    let col = |i: usize| p.column(i);
    let mul = |a: &[Q], b: &[Q]| -> Vector {
        let mut r = vec![Q::zero(); n];
        for (i, ai) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, bj) in b.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                for (k, c) in table[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        r[k] += ai * bj * c;
                    }
                }
            }
        }
        r
    };
    let t = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| inv.mul_vec(&mul(&col(i), &col(j))))
                .collect()
        })
        .collect();
    (t, inv.mul_vec(unit))
}

fn random_invertible(rng: &mut StdRng, n: usize) -> Matrix {
    loop {
        let m = Matrix::from_fn(n, n, |_, _| q(rng.gen_range(-2..=2)));
        if !m.det().is_zero() {
            return m;
        }
    }
}

fn random_factors(rng: &mut StdRng, budget: usize, split: bool) -> Vec<Factor> {
    let mut out: Vec<Factor> = Vec::new();
    let mut left = budget;
    let mut used_roots = Vec::new();
    let mut used_quadratic = Vec::new();
    while left > 0 {
        let quadratic = !split && left >= 2 && rng.gen_bool(0.3);
        if quadratic {
            let d = [2, 3, 5, -1, -3][rng.gen_range(0..5)];
            if used_quadratic.contains(&d) {
                continue;
            }
            used_quadratic.push(d);
            let mult = if left >= 4 && rng.gen_bool(0.3) { 2 } else { 1 };
            out.push(Factor {
                poly: Poly::from_ints(&[-d, 0, 1]),
                mult,
            });
            left -= 2 * mult;
        } else {
            let a = rng.gen_range(-3..=3);
            if used_roots.contains(&a) {
                continue;
            }
            used_roots.push(a);
            let mult = rng.gen_range(1..=left.min(3));
            out.push(Factor {
                poly: Poly::from_ints(&[-a, 1]),
                mult,
            });
            left -= mult;
        }
        if rng.gen_bool(0.3) {
            break;
        }
    }
    out
}

fn build(rng: &mut StdRng, max_dim: usize, split: bool, name: &str) -> (SpecializedAlgebra, usize) {
    let dim = rng.gen_range(1..=max_dim);
    let mut parts = Vec::new();
    let mut rad = 0;
    let mut left = dim;
    while left > 0 {
        let size = rng.gen_range(1..=left);
        let fs = random_factors(rng, size, split);
        let (t, u, r) = local_product(&fs);
        left -= u.len();
        rad += r;
        parts.push((t, u));
    }
    let (t, u) = direct_sum(&parts);
    let p = random_invertible(rng, u.len());
    let (t, u) = change_basis(&t, &u, &p);
    let a = SpecializedAlgebra::from_structure(name, u, t).expect("valid random algebra");
    (a, rad)
}

/// Random commutative unital algebra of dimension `≤ max_dim` and its radical
/// dimension from the construction.
pub fn random_algebra(rng: &mut StdRng, max_dim: usize) -> (SpecializedAlgebra, usize) {
    build(rng, max_dim, false, "random")
}

/// As [`random_algebra`] but split over `Q`: every multiplication operator has
/// rational eigenvalues.
pub fn random_split_algebra(rng: &mut StdRng, max_dim: usize) -> (SpecializedAlgebra, usize) {
    build(rng, max_dim, true, "random-split")
}

/// Elements of `{−1, 0, 1}^n` that are nilpotent, found by raising to the
/// `n`-th power.
pub fn brute_force_nilpotent(a: &SpecializedAlgebra) -> Vec<Vector> {
    let n = a.dim();
    let mut out = Vec::new();
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let v: Vector = (0..n)
            .map(|_| {
                let d = (c % 3) as i64 - 1;
                c /= 3;
                q(d)
            })
            .collect();
        if a.pow(&v, n as u32).iter().all(Zero::is_zero) {
            out.push(v);
        }
    }
    out
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PropertyStats {
    pub algebras: usize,
    pub grid_vectors: usize,
    pub operators: usize,
    pub grams: usize,
}

fn is_in_span(n: usize, basis: &[Vector], v: &Vector) -> bool {
    span_contains(n, basis, std::slice::from_ref(v))
}

/// Radical against brute force, the spectral containment and the agreement
/// of the two definiteness tests, on `count` algebras of each kind.
pub fn property_suite(seed: u64, count: usize) -> (PropertyStats, Vec<CheckResult>) {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut stats = PropertyStats::default();
    let mut rad_fail: Option<String> = None;
    let mut cont_fail: Option<String> = None;
    let mut def_fail: Option<String> = None;
    let mut grams: Vec<Matrix> = Vec::new();

    for i in 0..count {
        let (a, expect) = random_algebra(&mut rng, 5);
        let n = a.dim();
        stats.algebras += 1;
        let rad = a.radical().expect("radical").basis;
        if rad.len() != expect && rad_fail.is_none() {
            rad_fail = Some(format!(
                "algebra {i}: radical dim {} vs {expect}",
                rad.len()
            ));
        }
        let nil = brute_force_nilpotent(&a);
        let total = 3usize.pow(n as u32);
        stats.grid_vectors += total;
        let in_rad_grid: usize = {
            let mut c = 0;
            for code in 0..total {
                let mut k = code;
                let v: Vector = (0..n)
                    .map(|_| {
                        let d = (k % 3) as i64 - 1;
                        k /= 3;
                        q(d)
                    })
                    .collect();
                if is_in_span(n, &rad, &v) {
                    c += 1;
                    if !nil.contains(&v) && rad_fail.is_none() {
                        rad_fail = Some(format!("algebra {i}: {v:?} in R but not nilpotent"));
                    }
                }
            }
            c
        };
        if in_rad_grid != nil.len() && rad_fail.is_none() {
            rad_fail = Some(format!(
                "algebra {i}: {} nilpotent grid vectors, {in_rad_grid} in R",
                nil.len()
            ));
        }
        grams.push(a.trace_form());

        let (s, _) = random_split_algebra(&mut rng, 5);
        let m = s.dim();
        let srad = s.radical().expect("radical").basis;
        for _ in 0..2 {
            let b: Vector = (0..m).map(|_| q(rng.gen_range(-3..=3))).collect();
            let e = s.mult_operator(&b);
            let dec = SpectralDecomposition::compute(&e);
            stats.operators += 1;
            let rational = dec.components.iter().all(|c| c.factor.deg() == 1);
            if !rational && cont_fail.is_none() {
                cont_fail = Some(format!("split algebra {i}: E_b has irrational spectrum"));
            }
            if !span_contains(m, &dec.multiple_part(), &srad) && cont_fail.is_none() {
                cont_fail = Some(format!(
                    "split algebra {i}: R ⊄ ⊕_{{m>1}} A_λ for b = {b:?}"
                ));
            }
        }
        grams.push(s.trace_form());
        let g = Matrix::from_fn(m, m, |_, _| q(rng.gen_range(-3..=3)));
        grams.push(g.transpose().mul(&g));
        let sym = g.add(&g.transpose());
        grams.push(sym);
    }
    for g in &grams {
        stats.grams += 1;
        let (syl, _) = sylvester_positive_definite(g);
        if syl != ldlt_positive_definite(g) && def_fail.is_none() {
            def_fail = Some(format!("verdicts differ on {g:?}"));
        }
    }

    let verdict = |id: &str, anchor: &str, fail: Option<String>, ok: String| match fail {
        None => CheckResult::pass(id, anchor, ok),
        Some(w) => CheckResult::fail(id, anchor, w.clone(), w),
    };
    let results = vec![
        verdict(
            "props.radical",
            "trace-form radical equals the nilpotent elements",
            rad_fail,
            format!(
                "{} algebras, {} grid vectors agree",
                stats.algebras, stats.grid_vectors
            ),
        ),
        verdict(
            "props.containment",
            "radical lies in the multiple spectral components",
            cont_fail,
            format!("{} operators with rational spectra", stats.operators),
        ),
        verdict(
            "props.definiteness",
            "Sylvester and LDLT definiteness agree",
            def_fail,
            format!("{} Gram matrices", stats.grams),
        ),
    ];
    (stats, results)
}
