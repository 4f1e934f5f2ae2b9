use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use super::corest::{corest_check, Corestriction};
use super::{CheckResult, Status, Tables};
use crate::error::Result;
use crate::linalg::{span_contains, Vector};
use crate::qalgebra::{
    order2_nilpotent_obstruction, LinOp, ObstructionPath, QElem, QRing, Schedule,
    SpecializedAlgebra, Verdict,
};
use crate::rings::{
    adjoint_catalog, coadjoint_chevalley, coadjoint_ring, complete_intersection,
    fiber_dimension_check, grassmannian2, projective_space, Partition2,
};
use crate::rootsys::{Family, RootSystem, RootSystemType};
use crate::{q, qf, Q};

fn joined<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

// ---------------------------------------------------------------- root systems

fn expected_counts(t: RootSystemType) -> (usize, usize, i64) {
    // (roots, short roots, Coxeter number)
    let n = t.rank;
    match t.family {
        Family::A => (n * (n + 1), n * (n + 1), n as i64 + 1),
        Family::B => (2 * n * n, 2 * n, 2 * n as i64),
        Family::C => (2 * n * n, 2 * n * (n - 1), 2 * n as i64),
        Family::D => (2 * n * (n - 1), 2 * n * (n - 1), 2 * n as i64 - 2),
        Family::E => match n {
            6 => (72, 72, 12),
            7 => (126, 126, 18),
            _ => (240, 240, 30),
        },
        Family::F => (48, 24, 12),
        Family::G => (12, 6, 6),
    }
}

fn rootsys_one(t: RootSystemType) -> std::result::Result<(), String> {
    let rs = RootSystem::build(t).map_err(|e| e.to_string())?;
    let (nr, ns, h) = expected_counts(t);
    if rs.roots().len() != nr || rs.short_roots().len() != ns {
        return Err(format!(
            "{t}: {} roots / {} short, expected {nr} / {ns}",
            rs.roots().len(),
            rs.short_roots().len()
        ));
    }
    if rs.highest_root().height() != h - 1 {
        return Err(format!(
            "{t}: ht Θ = {}, expected {}",
            rs.highest_root().height(),
            h - 1
        ));
    }
    let n = rs.rank();
    for a in rs.roots() {
        for i in 0..n {
            let ai = rs.simple_root(i);
            let s = rs.reflect(&ai, a);
            if !rs.is_root(&s) || rs.reflect(&ai, &s) != *a {
                return Err(format!("{t}: s_{} fails on {}", i + 1, a.label()));
            }
            if rs.pairing(&ai, &s) != -rs.pairing(&ai, a) {
                return Err(format!(
                    "{t}: <α{}^∨, s α> ≠ −<α^∨, α> at {}",
                    i + 1,
                    a.label()
                ));
            }
            if rs.is_short(&s) != rs.is_short(a) {
                return Err(format!("{t}: reflection changes length at {}", a.label()));
            }
        }
    }
    let pos = rs.positive_roots().len();
    if pos * 2 != nr || rs.roots().iter().any(|r| !rs.is_root(&r.neg())) {
        return Err(format!("{t}: R ≠ R⁺ ⊔ −R⁺"));
    }
    Ok(())
}

/// Root counts, Coxeter heights and reflection identities for every type of
/// rank at most 8, plus the highest short root of `F4`.
pub fn rootsys_check() -> CheckResult {
    let id = "rootsys.identities";
    let anchor = "short-root indexing of Schubert classes";
    let types = RootSystemType::all_up_to(8);
    for &t in &types {
        if let Err(w) = rootsys_one(t) {
            return CheckResult::fail(id, anchor, format!("{t} failed"), w);
        }
    }
    let f4 = RootSystem::build("F4".parse().unwrap()).unwrap();
    let theta = f4.highest_short_root();
    let ok = theta.coeffs == [1, 2, 3, 2];
    CheckResult::check(
        id,
        anchor,
        ok,
        format!(
            "{} types; F4 highest short root {}",
            types.len(),
            theta.label()
        ),
    )
}

// ---------------------------------------------------------------- P^n

/// `P^n`, `n ≤ 12`: validity, trivial radical, `E_h` invertible, clause 2.
pub fn projective_check() -> CheckResult {
    let id = "pn.family";
    let anchor = "invertible E_h forces semisimplicity";
    let run = |n: usize| -> Result<std::result::Result<(), String>> {
        let r = projective_space(n)?;
        r.validate()?;
        let a = r.specialize()?;
        let rad = a.radical()?;
        let t = a.theorem1_report()?;
        Ok(if !rad.is_semisimple {
            Err(format!("P^{n}: radical of dim {}", rad.dim()))
        } else if t.kernel_dim != 0 {
            Err(format!("P^{n}: Ker E_h of dim {}", t.kernel_dim))
        } else if !(t.clause2_fires && t.clause2 == Some(true)) {
            Err(format!("P^{n}: clause 2 did not fire"))
        } else {
            Ok(())
        })
    };
    for n in 1..=12 {
        match run(n) {
            Ok(Ok(())) => {}
            Ok(Err(w)) => return CheckResult::fail(id, anchor, w.clone(), w),
            Err(e) => return CheckResult::error(id, anchor, &e),
        }
    }
    CheckResult::pass(id, anchor, "P^1..P^12 semisimple with E_h invertible")
}

// ---------------------------------------------------------------- complete intersections

/// Twenty `(n, degrees)` pairs with `n ≥ 2Σ(d_i − 1) − 1`.
pub fn ci_admissible_pairs() -> Vec<(usize, Vec<u32>)> {
    let mut v = Vec::new();
    v.extend((2..=7).map(|n| (n, vec![2])));
    v.extend((3..=7).map(|n| (n, vec![3])));
    v.extend((3..=7).map(|n| (n, vec![2, 2])));
    v.extend((5..=6).map(|n| (n, vec![4])));
    v.extend((5..=6).map(|n| (n, vec![2, 3])));
    v
}

fn ci_one(n: usize, degrees: &[u32]) -> Result<std::result::Result<String, String>> {
    let r = complete_intersection(n, degrees)?;
    let a = r.specialize()?;
    let c1 = r.c1() as usize;
    let dd = degrees
        .iter()
        .fold(Q::one(), |acc, &d| acc * q(d as i64).pow(d as i32));
    let name = r.name().to_string();
    let h = a.basis(r.hyperplane_index()?);
    let hc = a.pow(&h, c1 as u32);
    let sq = a.mul(&hc, &hc);
    let expect: Vector = hc.iter().map(|x| x * &dd).collect();
    if sq != expect {
        return Ok(Err(format!(
            "{name}: h^{{⋆{c1}}} squared ≠ {dd} h^{{⋆{c1}}}"
        )));
    }
    let g = a.qx_form()?;
    if !g.positive_definite {
        return Ok(Err(format!(
            "{name}: Q_X not positive definite, gram {:?}",
            g.gram
        )));
    }
    let hp = a.pow(&h, c1 as u32 + 1);
    let nil: Vector = hp.iter().zip(&h).map(|(x, y)| x - &dd * y).collect();
    if !a.is_nilpotent(&nil) {
        return Ok(Err(format!("{name}: h^{} − Dh is not nilpotent", c1 + 1)));
    }
    Ok(Ok(format!("{name} D={dd}")))
}

/// `h^{c₁} ⋆ h^{c₁} = D h^{c₁}`, `Q_X > 0` and `h^{c₁+1} − Dqh` nilpotent.
pub fn ci_check() -> CheckResult {
    let id = "ci.family";
    let anchor = "complete intersections of large index";
    let pairs = ci_admissible_pairs();
    for (n, d) in &pairs {
        match ci_one(*n, d) {
            Ok(Ok(_)) => {}
            Ok(Err(w)) => return CheckResult::fail(id, anchor, w.clone(), w),
            Err(e) => return CheckResult::error(id, anchor, &e),
        }
    }
    CheckResult::pass(
        id,
        anchor,
        format!("{} admissible (n, degrees) pairs", pairs.len()),
    )
}

// ---------------------------------------------------------------- Gr(2, n)

/// `dim A_{2a}(Gr(2, 2n))` for `0 ≤ a < 2n`.
pub fn gr2_graded_dims(n: u32) -> BTreeMap<u32, usize> {
    (0..2 * n)
        .map(|a| {
            (
                2 * a,
                if a % 2 == 0 {
                    n as usize
                } else {
                    n as usize - 1
                },
            )
        })
        .collect()
}

/// `dim A_{2a}(IG(2, 2n))` for `0 ≤ a < 2n − 1`.
pub fn ig2_graded_dims(n: u32) -> BTreeMap<u32, usize> {
    (0..2 * n - 1)
        .map(|a| {
            let d = if a % 2 == 0 && a <= 2 * n - 4 {
                n
            } else {
                n - 1
            };
            (2 * a, d as usize)
        })
        .collect()
}

fn gr2_one(n: usize) -> Result<std::result::Result<(), String>> {
    let r = grassmannian2(n)?;
    r.validate()?;
    let a = r.specialize()?;
    if n % 2 == 0 {
        let c = graded_dimension_check(&r, &gr2_graded_dims(n as u32 / 2));
        if !c.passed() {
            return Ok(Err(c.detail));
        }
    }
    let s11 = r.index_of(&Partition2 { a: 1, b: 1 }.label())?;
    let top = r.index_of(&Partition2 { a: n - 2, b: n - 2 }.label())?;
    let mut p = QElem::basis(r.unit_index());
    for _ in 0..n - 2 {
        p = r.mul_basis(s11, &p);
    }
    if p != QElem::basis(top) {
        return Ok(Err(format!("Gr(2,{n}): σ(1,1)^{} = {p:?}", n - 2)));
    }
    if !a.qx_form()?.positive_definite {
        return Ok(Err(format!("Gr(2,{n}): Q_X not positive definite")));
    }
    Ok(Ok(()))
}

/// `Gr(2, n)`, `4 ≤ n ≤ 10`.
pub fn gr2_check() -> CheckResult {
    let id = "gr2.family";
    let anchor = "quantum cohomology of Gr(2,n)";
    for n in 4..=10 {
        match gr2_one(n) {
            Ok(Ok(())) => {}
            Ok(Err(w)) => return CheckResult::fail(id, anchor, w.clone(), w),
            Err(e) => return CheckResult::error(id, anchor, &e),
        }
    }
    CheckResult::pass(
        id,
        anchor,
        "Gr(2,4)..Gr(2,10) associative; graded dims, σ(1,1) power and Q_X > 0 hold",
    )
}

// ---------------------------------------------------------------- coadjoint kernels

/// Residue `r ↦ dim(Ker E_h ∩ A_r)`, nonzero entries only.
pub fn kernel_residues(e: &LinOp, degrees: &[u32], modulus: u32) -> BTreeMap<u32, usize> {
    let mut out = BTreeMap::new();
    let residues: BTreeSet<u32> = degrees.iter().map(|d| d % modulus).collect();
    for r in residues {
        let cols: Vec<usize> = (0..degrees.len())
            .filter(|&i| degrees[i] % modulus == r)
            .collect();
        let rows: Vec<usize> = (0..degrees.len()).collect();
        let k = e.matrix.select(&rows, &cols).kernel().len();
        if k > 0 {
            out.insert(r, k);
        }
    }
    out
}

/// Kernel residues of `E_h` at `q = 1` for `C3..C6` and `F4`.
///
/// For `C_n` the kernel is spanned by one vector in each residue
/// `0, 4, …, 4(n−2)`. For `F4` it is spanned by `K₀` and `K₈`; the
/// degree-0 vector is forced because `dim A₀ > dim A₂`.
pub fn coadjoint_kernel_check() -> CheckResult {
    let id = "coadjoint.kernel";
    let anchor = "kernel of E_h on coadjoint varieties";
    let mut details = Vec::new();
    for t in ["C3", "C4", "C5", "C6", "F4"] {
        let ty: RootSystemType = t.parse().unwrap();
        let ch = match coadjoint_chevalley(ty) {
            Ok(c) => c,
            Err(e) => return CheckResult::error(id, anchor, &e),
        };
        let qd = 2 * ch.c1;
        for (j, row) in ch.rows.iter().enumerate() {
            for tm in row {
                if ch.degrees[tm.k] + tm.d * qd != ch.degrees[j] + 2 {
                    let w = format!(
                        "{t}: h ⋆ σ{} has a term of the wrong degree",
                        ch.basis[j].label()
                    );
                    return CheckResult::fail(id, anchor, w.clone(), w);
                }
            }
        }
        let ker = kernel_residues(&ch.e_h(), &ch.degrees, qd);
        let expected: BTreeMap<u32, usize> = match ty.family {
            Family::C => (0..ty.rank as u32 - 1).map(|i| (4 * i, 1)).collect(),
            _ => [(0, 1), (8, 1)].into_iter().collect(),
        };
        let dims = |r: u32| ch.degrees.iter().filter(|&&d| d % qd == r).count();
        details.push(format!(
            "{t}: nullity {} at residues {{{}}} (dim A0 {}, dim A2 {})",
            ker.values().sum::<usize>(),
            joined(ker.keys()),
            dims(0),
            dims(2)
        ));
        if ker != expected {
            let w = details.join("; ");
            return CheckResult::fail(id, anchor, format!("{t} kernel mismatch"), w);
        }
    }
    CheckResult::pass(id, anchor, details.join("; "))
}

// ---------------------------------------------------------------- radicals

/// `R(A) = Ker E_h ∩ ⊕_{2c₁ ∤ k} A^k`, both sides computed exactly and
/// compared by double inclusion.
pub fn radical_structure_check(a: &SpecializedAlgebra) -> CheckResult {
    let id = format!("radical.{}", a.name());
    let anchor = "radical = Ker E_h outside degree 0";
    let inner = || -> Result<(Vec<Vector>, Vec<Vector>)> {
        let n = a.dim();
        let rad = a.radical()?.basis;
        let e = a.e_h()?;
        let off: Vec<usize> = (0..n).filter(|&i| a.degree_mod(i) != 0).collect();
        let rows: Vec<usize> = (0..n).collect();
        let rhs = e
            .matrix
            .select(&rows, &off)
            .kernel()
            .into_iter()
            .map(|k| {
                let mut v = vec![Q::zero(); n];
                for (c, &i) in k.into_iter().zip(&off) {
                    v[i] = c;
                }
                v
            })
            .collect();
        Ok((rad, rhs))
    };
    match inner() {
        Ok((rad, rhs)) => {
            let n = a.dim();
            let le = span_contains(n, &rhs, &rad);
            let ge = span_contains(n, &rad, &rhs);
            let degs: BTreeSet<u32> = rad
                .iter()
                .flat_map(|v| (0..n).filter(|&i| !v[i].is_zero()).map(|i| a.degree_mod(i)))
                .collect();
            let detail = format!(
                "dim R = {}, dim Ker E_h off A0 = {}, R in residues {{{}}}",
                rad.len(),
                rhs.len(),
                joined(degs)
            );
            if le && ge {
                CheckResult::pass(id, anchor, detail)
            } else {
                CheckResult::fail(id, anchor, detail, format!("R ⊂ rhs: {le}; rhs ⊂ R: {ge}"))
            }
        }
        Err(e) => CheckResult::error(id, anchor, &e),
    }
}

struct RadicalShape {
    table: &'static str,
    dim: usize,
    residues: &'static [u32],
    /// `K^order = 0` for the lowest-degree generator `K`, with `K^{order−1} ≠ 0`.
    order: u32,
}

const RADICAL_SHAPES: [RadicalShape; 3] = [
    RadicalShape {
        table: "ig26",
        dim: 1,
        residues: &[4],
        order: 2,
    },
    RadicalShape {
        table: "ig28",
        dim: 2,
        residues: &[4, 8],
        order: 3,
    },
    RadicalShape {
        table: "f4p4",
        dim: 1,
        residues: &[8],
        order: 2,
    },
];

fn radical_shape(
    a: &SpecializedAlgebra,
    s: &RadicalShape,
) -> Result<std::result::Result<String, String>> {
    let base = radical_structure_check(a);
    if !base.passed() {
        return Ok(Err(base.witness.unwrap_or(base.detail)));
    }
    let rad = a.radical()?;
    let n = a.dim();
    let mut degs = BTreeSet::new();
    for v in &rad.basis {
        for i in (0..n).filter(|&i| !v[i].is_zero()) {
            degs.insert(a.degree_mod(i));
        }
    }
    let want: BTreeSet<u32> = s.residues.iter().copied().collect();
    if rad.dim() != s.dim || degs != want {
        return Ok(Err(format!(
            "R has dim {} in residues {{{}}}",
            rad.dim(),
            joined(&degs)
        )));
    }
    let low = s.residues[0];
    let k: Vector = rad
        .basis
        .iter()
        .find(|v| (0..n).all(|i| v[i].is_zero() || a.degree_mod(i) == low))
        .cloned()
        .ok_or_else(|| crate::Error::RadicalShape("no homogeneous generator".into()))?;
    if a.nilpotency_order(&k) != Some(s.order) {
        return Ok(Err(format!(
            "K{low} has nilpotency order {:?}",
            a.nilpotency_order(&k)
        )));
    }
    let t = a.theorem1_report()?;
    if !t.gram.positive_definite {
        return Ok(Err("Q_Y is not positive definite".into()));
    }
    let c3 = t.clause3.as_ref().is_some_and(|c| c.holds());
    if !c3 {
        return Ok(Err("clause 3 does not hold".into()));
    }
    Ok(Ok(format!(
        "R = <K{low}{}> (K{low}^{} = 0); Q_Y > 0; clause 3 holds; not semisimple",
        if s.order > 2 { ", powers" } else { "" },
        s.order
    )))
}

/// Radical shape, `Q_Y > 0` and clause 3 on the coadjoint tables.
pub fn coadjoint_radical_check(tables: &Tables) -> Vec<CheckResult> {
    let anchor = "radical of coadjoint varieties";
    RADICAL_SHAPES
        .iter()
        .map(|s| {
            let id = format!("coadjoint.radical.{}", s.table);
            let r = match tables.require(s.table) {
                Ok(r) => r,
                Err(m) => return CheckResult::skipped(id, anchor, m),
            };
            let res = r.specialize().and_then(|a| radical_shape(&a, s));
            match res {
                Ok(Ok(d)) => CheckResult::pass(id, anchor, format!("{}: {d}", r.name())),
                Ok(Err(w)) => {
                    CheckResult::fail(id, anchor, format!("{}: shape mismatch", r.name()), w)
                }
                Err(e) => CheckResult::error(id, anchor, &e),
            }
        })
        .collect()
}

// ---------------------------------------------------------------- graded dimensions

fn census(
    name: &str,
    degrees: &[u32],
    modulus: u32,
    expected: &BTreeMap<u32, usize>,
) -> CheckResult {
    let id = format!("graded.{name}");
    let anchor = "graded dimensions at q = 1";
    let mut got: BTreeMap<u32, usize> = BTreeMap::new();
    for d in degrees {
        *got.entry(d % modulus).or_insert(0) += 1;
    }
    let keys: BTreeSet<u32> = got.keys().chain(expected.keys()).copied().collect();
    let bad: Vec<String> = keys
        .iter()
        .filter_map(|k| {
            let (g, e) = (
                got.get(k).copied().unwrap_or(0),
                expected.get(k).copied().unwrap_or(0),
            );
            (g != e).then(|| format!("A_{k}: {g} ≠ {e}"))
        })
        .collect();
    let line = joined(expected.values());
    if bad.is_empty() {
        CheckResult::pass(id, anchor, format!("{name}: ({line})"))
    } else {
        CheckResult::fail(
            id,
            anchor,
            format!("{name}: census differs"),
            bad.join("; "),
        )
    }
}

/// Census of basis degrees mod `2c₁` against `expected` (missing keys are 0).
pub fn graded_dimension_check(r: &QRing, expected: &BTreeMap<u32, usize>) -> CheckResult {
    census(r.name(), r.degrees(), r.q_degree(), expected)
}

/// `IG(2,6)` table, `Gr(2,2n)` and `IG(2,2n)` closed forms.
pub fn graded_dimension_suite(_: &Tables) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let ig26: BTreeMap<u32, usize> = [(0, 3), (2, 2), (4, 3), (6, 2), (8, 2)]
        .into_iter()
        .collect();
    for n in 3..=6u32 {
        match coadjoint_chevalley(RootSystemType::new(Family::C, n as usize).unwrap()) {
            Ok(ch) => {
                let expected = if n == 3 {
                    ig26.clone()
                } else {
                    ig2_graded_dims(n)
                };
                out.push(census(&ch.name(), &ch.degrees, 2 * ch.c1, &expected));
            }
            Err(e) => out.push(CheckResult::error(
                format!("graded.IG(2,{})", 2 * n),
                "graded dimensions at q = 1",
                &e,
            )),
        }
    }
    for n in 2..=5u32 {
        match grassmannian2(2 * n as usize) {
            Ok(r) => out.push(graded_dimension_check(&r, &gr2_graded_dims(n))),
            Err(e) => out.push(CheckResult::error(
                format!("graded.Gr(2,{})", 2 * n),
                "graded dimensions at q = 1",
                &e,
            )),
        }
    }
    out
}

// ---------------------------------------------------------------- restriction squares

/// `Gr(2,2n) ⊃ IG(2,2n)` for `n = 3, 4`, the identity case and a perturbed
/// correspondence that must fail.
pub fn corest_suite() -> Vec<CheckResult> {
    let anchor = "restriction squares for E_h";
    let mut out = Vec::new();
    let pair = |n: usize| -> Result<(QRing, QRing)> {
        Ok((
            grassmannian2(2 * n)?,
            coadjoint_ring(RootSystemType::new(Family::C, n)?)?,
        ))
    };
    for n in [3usize, 4] {
        match pair(n)
            .and_then(|(x, y)| Corestriction::grassmannian_section(&x, &y).map(|j| (x, y, j)))
        {
            Ok((x, y, j)) => {
                out.push(corest_check(&x, &y, &j));
                if n == 3 {
                    out.push(corest_check(&x, &x, &Corestriction::identity(&x)));
                    let mut r = corest_check(&y, &y, &Corestriction::identity(&y));
                    r.id = format!("{}.identity", r.id);
                    out.push(r);
                    let id = "corest.negative-control";
                    let stratum = j
                        .strata
                        .iter()
                        .find(|s| s.target.len() >= 2)
                        .map(|s| s.residue);
                    match stratum.map(|s| j.swap_targets(s, 0, 1)) {
                        Some(Ok(bad)) => {
                            let c = corest_check(&x, &y, &bad);
                            out.push(CheckResult::check(
                                id,
                                anchor,
                                c.status == Status::Fail && c.witness.is_some(),
                                format!(
                                    "perturbed J: {} ({})",
                                    c.status,
                                    c.witness.unwrap_or_default()
                                ),
                            ));
                        }
                        Some(Err(e)) => out.push(CheckResult::error(id, anchor, &e)),
                        None => {
                            out.push(CheckResult::fail(id, anchor, "no stratum to perturb", ""))
                        }
                    }
                }
            }
            Err(e) => out.push(CheckResult::error(
                format!("corest.Gr(2,{})", 2 * n),
                anchor,
                &e,
            )),
        }
    }
    out
}

// ---------------------------------------------------------------- semisimplicity

fn semisimple_result(
    id: String,
    anchor: &str,
    r: &QRing,
    expect: bool,
    want_h_semisimple: bool,
) -> CheckResult {
    let inner = || -> Result<(bool, Option<bool>)> {
        let a = r.specialize()?;
        let ss = a.radical()?.is_semisimple;
        let t = a.theorem1_report()?;
        Ok((ss, t.clause3.map(|c| c.h_subalgebra_semisimple)))
    };
    match inner() {
        Ok((ss, hs)) => {
            let ok = ss == expect && (!want_h_semisimple || hs == Some(true));
            let mut d = format!("{}: semisimple {ss} (expected {expect})", r.name());
            if want_h_semisimple {
                d.push_str(&format!("; h-subalgebra semisimple {hs:?}"));
            }
            CheckResult::check(id, anchor, ok, d)
        }
        Err(e) => CheckResult::error(id, anchor, &e),
    }
}

/// Semisimplicity verdicts on every available target.
///
/// Expected semisimple: `P^n`, quadrics (as the `h`-subalgebra of the
/// complete-intersection family with `Σ(d_i − 1) = 1`) and `Gr(2, n)`.
/// Expected not semisimple: complete intersections with `Σ(d_i − 1) ≥ 2`
/// (the class `h^{c₁+1} − Dqh` is a nonzero nilpotent) and the coadjoint
/// tables, whose `h`-subalgebra is nevertheless semisimple.
pub fn semisimple_targets_check(tables: &Tables) -> Vec<CheckResult> {
    let anchor = "semisimplicity of quantum cohomology";
    let mut out = Vec::new();
    for n in 1..=12 {
        let id = format!("semisimple.P^{n:02}");
        match projective_space(n) {
            Ok(r) => out.push(semisimple_result(id, anchor, &r, true, false)),
            Err(e) => out.push(CheckResult::error(id, anchor, &e)),
        }
    }
    for (n, d) in ci_admissible_pairs() {
        let s: u32 = d.iter().map(|x| x - 1).sum();
        let id = format!("semisimple.ci.{n}.{}", joined(&d));
        match complete_intersection(n, &d) {
            Ok(r) => out.push(semisimple_result(id, anchor, &r, s <= 1, false)),
            Err(e) => out.push(CheckResult::error(id, anchor, &e)),
        }
    }
    for n in 4..=8 {
        let id = format!("semisimple.Gr(2,{n})");
        match grassmannian2(n) {
            Ok(r) => out.push(semisimple_result(id, anchor, &r, true, false)),
            Err(e) => out.push(CheckResult::error(id, anchor, &e)),
        }
    }
    for name in ["ig26", "ig28", "f4p4"] {
        let id = format!("semisimple.{name}");
        match tables.require(name) {
            Ok(r) => out.push(semisimple_result(id, anchor, r, false, true)),
            Err(m) => out.push(CheckResult::skipped(id, anchor, m)),
        }
    }
    out
}

// ---------------------------------------------------------------- obstruction

/// Order-2 nilpotent obstruction on the coadjoint tables.
pub fn bqh_obstruction_suite(tables: &Tables) -> Vec<CheckResult> {
    let anchor = "first-order deformation of the radical";
    let cases: [(&str, &str, bool); 3] = [
        ("ig26", "pt", true),
        ("f4p4", "pt", true),
        ("ig28", "s:a2+2a3+a4", false),
    ];
    cases
        .iter()
        .map(|&(name, tau, single)| {
            let id = format!("bqh.{name}");
            let r = match tables.require(name) {
                Ok(r) => r,
                Err(m) => return CheckResult::skipped(id, anchor, m),
            };
            let run = || -> Result<_> {
                let schedule = Schedule::for_direction(r, r.index_of(tau)?);
                order2_nilpotent_obstruction(r, &schedule)
            };
            match run() {
                Ok(v) => {
                    let detail = format!(
                        "{} τ={tau}: {} via {:?}; λ = {}; candidate {}",
                        r.name(),
                        v.verdict.as_str(),
                        v.path,
                        v.lambda.as_ref().map_or("-".into(), |l| l.to_string()),
                        v.candidate.as_ref().map_or("-".into(), |c| c.to_string()),
                    );
                    let ok = v.verdict == Verdict::Obstructed
                        && if single {
                            v.path == ObstructionPath::SingleInvariant
                                && v.candidate == Some(qf(2, 3))
                        } else {
                            v.path == ObstructionPath::Congruence && v.in_lattice == Some(false)
                        };
                    CheckResult::check(id, anchor, ok, detail)
                }
                Err(e) => CheckResult::error(id, anchor, &e),
            }
        })
        .collect()
}

// ---------------------------------------------------------------- catalogs

/// `dim F = 2(c₁ − dim Γ₂)` and `dim X = 2c₁ − 1` off type `C`.
pub fn catalog_check() -> CheckResult {
    let id = "catalog.identities";
    let anchor = "catalog dimension identities";
    let fibers = fiber_dimension_check();
    if let Some(f) = fibers.iter().find(|f| !f.holds()) {
        return CheckResult::fail(id, anchor, "fiber identity fails", format!("{f:?}"));
    }
    let adj = adjoint_catalog();
    for v in &adj {
        let holds = v.dim == 2 * v.c1() - 1;
        if holds == v.root_type.starts_with('C') {
            return CheckResult::fail(
                id,
                anchor,
                "adjoint identity fails",
                format!("{}: dim {} c1 {}", v.name, v.dim, v.c1()),
            );
        }
    }
    CheckResult::pass(
        id,
        anchor,
        format!("{} fiber rows, {} adjoint rows", fibers.len(), adj.len()),
    )
}
