//! Ring constructors against literal products and closed forms.

use qcoh::rings::{
    coadjoint_ring, complete_intersection, grassmannian2, projective_space, Partition2, Provenance,
    RingTable,
};
use qcoh::verify::ci_admissible_pairs;
use qcoh::{q, Poly, QElem, QRing, RootSystem, RootSystemType};

fn elem(r: &QRing, terms: &[(&str, u32, i64)]) -> QElem {
    let mut x = QElem::zero();
    for &(l, d, c) in terms {
        x.add_term(r.index_of(l).unwrap(), d, q(c));
    }
    x
}

fn times(r: &QRing, a: &str, b: &str) -> QElem {
    r.mul_basis(
        r.index_of(a).unwrap(),
        &QElem::basis(r.index_of(b).unwrap()),
    )
}

/// `h`-power of `h` in the quantum ring.
fn hpow(r: &QRing, k: usize) -> QElem {
    let h = r.hyperplane_index().unwrap();
    (0..k).fold(QElem::basis(r.unit_index()), |x, _| r.mul_basis(h, &x))
}

// ------------------------------------------------------------ P^n and CI

#[test]
fn projective_relation() {
    for n in 1..=12 {
        let r = projective_space(n).unwrap();
        assert_eq!(hpow(&r, n + 1), elem(&r, &[("1", 1, 1)]), "P^{n}");
        assert_eq!(r.c1() as usize, n + 1);
    }
}

#[test]
fn empty_multidegree_is_projective_space() {
    for n in 2..=6 {
        let a = complete_intersection(n, &[]).unwrap();
        let b = projective_space(n).unwrap();
        assert_eq!(a.entries(), b.entries());
    }
}

#[test]
fn quadric_threefold_products() {
    // Q3 with h² = 2ℓ, h³ = 2pt: h⋆ℓ = pt + q, h⋆pt = q h.
    let r = complete_intersection(3, &[2]).unwrap();
    assert_eq!(r.c1(), 3);
    assert_eq!(times(&r, "h", "h"), elem(&r, &[("h^2", 0, 1)]));
    assert_eq!(
        times(&r, "h", "h^2"),
        elem(&r, &[("h^3", 0, 1), ("1", 1, 2)])
    );
    assert_eq!(times(&r, "h", "h^3"), elem(&r, &[("h", 1, 2)]));
}

#[test]
fn quadric_relation() {
    for n in 3..=7 {
        let r = complete_intersection(n, &[2]).unwrap();
        assert_eq!(hpow(&r, n + 1), hpow(&r, 1).shift_q(1).scale(&q(4)), "Q{n}");
    }
}

#[test]
fn cubic_fourfold() {
    let r = complete_intersection(4, &[3]).unwrap();
    assert_eq!(r.c1(), 3);
    assert_eq!(hpow(&r, 5), hpow(&r, 2).shift_q(1).scale(&q(27)));
    let a = r.specialize().unwrap();
    let h = a.basis(r.hyperplane_index().unwrap());
    let h3 = a.pow(&h, 3);
    assert_eq!(
        a.mul(&h3, &h3),
        h3.iter().map(|x| x * q(27)).collect::<Vec<_>>()
    );
}

#[test]
fn ci_relation_and_index() {
    for (n, d) in ci_admissible_pairs() {
        let r = complete_intersection(n, &d).unwrap();
        r.validate().unwrap();
        let big_d: i64 = d.iter().map(|&x| (x as i64).pow(x)).product();
        let s: usize = d.iter().map(|&x| x as usize - 1).sum();
        let c1 = n as i64 + d.len() as i64 + 1 - d.iter().map(|&x| x as i64).sum::<i64>();
        assert_eq!(r.c1() as i64, c1, "{n} {d:?}");
        assert_eq!(
            hpow(&r, n + 1),
            hpow(&r, s).shift_q(1).scale(&q(big_d)),
            "{n} {d:?}"
        );
    }
}

#[test]
fn ci_outside_range_rejected() {
    assert!(complete_intersection(4, &[4]).is_err());
    assert!(complete_intersection(1, &[2]).is_err());
}

// ------------------------------------------------------------ Gr(2, n)

#[test]
fn gr2_quantum_pieri() {
    for n in 4..=9 {
        let r = grassmannian2(n).unwrap();
        r.validate().unwrap();
        for lam in Partition2::all(n) {
            let mut expect = QElem::zero();
            for (a, b) in [(lam.a + 1, lam.b), (lam.a, lam.b + 1)] {
                if let Some(p) = Partition2::new(a, b).filter(|p| p.fits(n)) {
                    expect.add_term(r.index_of(&p.label()).unwrap(), 0, q(1));
                }
            }
            if lam.a == n - 2 && lam.b >= 1 {
                let p = Partition2::new(lam.b - 1, 0).unwrap();
                expect.add_term(r.index_of(&p.label()).unwrap(), 1, q(1));
            }
            assert_eq!(
                times(&r, "p:1,0", &lam.label()),
                expect,
                "Gr(2,{n}) σ1 ⋆ σ{lam}"
            );
        }
    }
}

#[test]
fn gr24_point_class() {
    let r = grassmannian2(4).unwrap();
    assert_eq!(times(&r, "p:2,2", "p:2,2"), elem(&r, &[("p:0,0", 2, 1)]));
    assert_eq!(times(&r, "p:1,1", "p:1,1"), elem(&r, &[("p:2,2", 0, 1)]));
    assert_eq!(times(&r, "p:2,0", "p:2,0"), elem(&r, &[("p:2,2", 0, 1)]));
    assert_eq!(times(&r, "p:2,0", "p:1,1"), elem(&r, &[("p:0,0", 1, 1)]));
}

// ------------------------------------------------------------ Betti numbers

/// `Π(1 − t^{num}) / Π(1 − t^{den})` as a polynomial.
fn poincare(num: &[usize], den: &[usize]) -> Vec<i64> {
    let f = |e: &[usize]| {
        e.iter().fold(Poly::one(), |p, &k| {
            let mut c = vec![0i64; k + 1];
            c[0] = 1;
            c[k] = -1;
            p.mul(&Poly::from_ints(&c))
        })
    };
    let (qt, rem) = f(num).divrem(&f(den));
    assert!(rem.is_zero());
    qt.coeffs()
        .iter()
        .map(|c| c.to_integer().try_into().unwrap())
        .collect()
}

fn census(r: &QRing) -> Vec<i64> {
    let top = (r.top_degree() / 2) as usize;
    let mut v = vec![0i64; top + 1];
    for &d in r.degrees() {
        v[(d / 2) as usize] += 1;
    }
    v
}

#[test]
fn coadjoint_betti_numbers() {
    // Chevalley: P(G/P) = Π_G (1 − t^{d_i}) / Π_L (1 − t^{d_j}).
    for n in 3..=6usize {
        let num: Vec<usize> = (1..=n).map(|i| 2 * i).collect();
        let mut den: Vec<usize> = vec![1, 2];
        den.extend((1..=n - 2).map(|i| 2 * i));
        let rs = RootSystem::build(format!("C{n}").parse().unwrap()).unwrap();
        let mut from_roots = vec![0i64; poincare(&num, &den).len()];
        for a in rs.short_roots() {
            from_roots[(rs.schubert_degree(a).unwrap() / 2) as usize] += 1;
        }
        assert_eq!(from_roots, poincare(&num, &den), "C{n}");
    }
    let f4 = coadjoint_ring("F4".parse().unwrap()).unwrap();
    assert_eq!(census(&f4), poincare(&[2, 6, 8, 12], &[1, 2, 4, 6]));
}

#[test]
fn gr2_betti_numbers() {
    for n in 4..=10 {
        let r = grassmannian2(n).unwrap();
        assert_eq!(census(&r), poincare(&[n - 1, n], &[1, 2]), "Gr(2,{n})");
    }
}

// ------------------------------------------------------------ coadjoint tables

#[test]
fn bundled_tables_regenerate() {
    for (name, t) in [("ig26", "C3"), ("ig28", "C4"), ("f4p4", "F4")] {
        let built = RingTable::new(
            coadjoint_ring(t.parse().unwrap()).unwrap(),
            Provenance::Completed,
        );
        let bundled = RingTable::bundled(name).unwrap().unwrap();
        assert_eq!(bundled, built, "{name}");
        assert_eq!(bundled.to_text(), built.to_text(), "{name}");
    }
}

#[test]
fn coadjoint_dimensions() {
    for (t, dim, c1) in [("C3", 7, 5), ("C4", 11, 7), ("C5", 15, 9), ("F4", 15, 11)] {
        let ty: RootSystemType = t.parse().unwrap();
        let r = coadjoint_ring(ty).unwrap();
        assert_eq!((r.top_degree() / 2, r.c1()), (dim, c1), "{t}");
    }
}

#[test]
fn clause3_divisibility() {
    let rings: Vec<QRing> = ["ig26", "ig28", "f4p4"]
        .iter()
        .map(|n| RingTable::bundled(n).unwrap().unwrap().ring)
        .chain((2..=6).map(|n| projective_space(n).unwrap()))
        .chain((4..=7).map(|n| grassmannian2(n).unwrap()))
        .collect();
    let mut checked = 0;
    for r in rings {
        let a = r.specialize().unwrap();
        let rep = a.theorem1_report().unwrap();
        let Some(c3) = &rep.clause3 else { continue };
        if !c3.holds() {
            continue;
        }
        let p = c3.p.as_ref().expect("P recorded when clause 3 holds");
        assert!(p.is_squarefree(), "{}", r.name());
        assert!(!p.eval(&q(0)).eq(&q(0)), "{}", r.name());
        let xp = Poly::x().mul(&p.compose_power(r.c1() as usize));
        assert!(
            rep.min_poly.divides(&xp),
            "{}: {} ∤ {}",
            r.name(),
            rep.min_poly,
            xp
        );
        checked += 1;
    }
    assert!(checked >= 3);
}
