//! Property tests for the stated invariants of each module.

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use qcoh::linalg::{ldlt_positive_definite, sylvester_positive_definite, Matrix};
use qcoh::qalgebra::psi;
use qcoh::rings::{complete_intersection, grassmannian2, projective_space, Partition2, RingTable};
use qcoh::verify::{
    brute_force_nilpotent, ci_admissible_pairs, random_algebra, random_split_algebra,
};
use qcoh::{q, AffineRoot, Poly, QElem, Root, RootSystem, RootSystemType, Q};

fn root_system(i: usize) -> RootSystem {
    let types = RootSystemType::all_up_to(8);
    RootSystem::build(types[i % types.len()]).unwrap()
}

fn coadjoint_system(i: usize) -> RootSystem {
    let t = ["C2", "C3", "C4", "C5", "C6", "F4"][i % 6];
    RootSystem::build(t.parse().unwrap()).unwrap()
}

fn small_symmetric(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-4i64..=4, n * n).prop_map(move |v| {
        let m = Matrix::from_fn(n, n, |i, j| q(v[i * n + j]));
        Matrix::from_fn(n, n, |i, j| {
            if i <= j {
                m[(i, j)].clone()
            } else {
                m[(j, i)].clone()
            }
        })
    })
}

fn qelem(dim: usize) -> impl Strategy<Value = QElem> {
    prop::collection::vec((0..dim, 0u32..4, -5i64..=5), 0..8).prop_map(|ts| {
        let mut x = QElem::zero();
        for (k, d, c) in ts {
            x.add_term(k, d, q(c));
        }
        x
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflections_permute_roots(t in 0usize..64, a in 0usize..512, i in 0usize..8) {
        let rs = root_system(t);
        let roots = rs.roots();
        let alpha = &roots[a % roots.len()];
        let i = i % rs.rank();
        let s = rs.reflect(&rs.simple_root(i), alpha);
        prop_assert!(rs.is_root(&s));
        prop_assert_eq!(rs.is_short(&s), rs.is_short(alpha));
        prop_assert_eq!(rs.reflect(&rs.simple_root(i), &s), alpha.clone());
        let pairing: i64 = rs.cartan()[i].iter().zip(&alpha.coeffs).map(|(c, x)| c * x).sum();
        prop_assert_eq!(rs.height(&s), rs.height(alpha) - pairing);
    }

    #[test]
    fn eta_is_a_bijection(t in 0usize..6, a in 0usize..64, d in 0i64..4) {
        let rs = coadjoint_system(t);
        let shorts = rs.short_roots();
        let alpha = shorts[a % shorts.len()].clone();
        let x = AffineRoot::new(alpha.clone(), -d);
        let m = rs.eta(&x).unwrap();
        prop_assert_eq!(m.q_power, d);
        prop_assert_eq!(&m.root, &alpha);
        prop_assert_eq!(rs.eta_inv(&m), x);
        prop_assert_eq!(
            rs.quantum_degree(&m).unwrap(),
            rs.schubert_degree(&alpha).unwrap() + d * rs.q_degree()
        );
    }

    #[test]
    fn eta_rejects_long_roots(t in 0usize..6, a in 0usize..128) {
        let rs = coadjoint_system(t);
        let longs: Vec<&Root> = rs.roots().iter().filter(|r| !rs.is_short(r)).collect();
        let r = longs[a % longs.len()].clone();
        prop_assert!(rs.eta(&AffineRoot::from_finite(r)).is_err());
    }

    #[test]
    fn degree_plus_height_is_two_valued(t in 0usize..6) {
        let rs = coadjoint_system(t);
        let f = |r: &Root| rs.schubert_degree(r).unwrap() + 2 * r.height();
        let pos: Vec<i64> = rs.short_roots().iter().filter(|r| r.is_positive()).map(f).collect();
        let neg: Vec<i64> = rs.short_roots().iter().filter(|r| !r.is_positive()).map(f).collect();
        prop_assert!(pos.iter().all(|&v| v == pos[0]));
        prop_assert!(neg.iter().all(|&v| v == pos[0] - 2));
    }

    #[test]
    fn sylvester_agrees_with_ldlt(m in (1usize..6).prop_flat_map(small_symmetric)) {
        prop_assert_eq!(sylvester_positive_definite(&m).0, ldlt_positive_definite(&m));
        let g = m.transpose().mul(&m).add(&Matrix::identity(m.rows()));
        prop_assert!(sylvester_positive_definite(&g).0);
        prop_assert!(ldlt_positive_definite(&g));
    }

    #[test]
    fn kernel_is_annihilated(v in prop::collection::vec(-3i64..=3, 20), r in 1usize..5) {
        let c = 20 / r;
        let m = Matrix::from_fn(r, c, |i, j| q(v[i * c + j]));
        let k = m.kernel();
        prop_assert_eq!(k.len() + m.rank(), c);
        for x in &k {
            prop_assert!(m.mul_vec(x).iter().all(|z| *z == q(0)));
        }
    }

    #[test]
    fn factorization_multiplies_back(c in prop::collection::vec(-6i64..=6, 2..7)) {
        let p = Poly::from_ints(&c);
        prop_assume!(!p.is_zero() && p.deg() > 0);
        let mut prod = Poly::constant(p.lc());
        for (f, k) in p.factor() {
            prop_assert!(f.deg() > 0);
            prod = prod.mul(&f.pow(k));
        }
        prop_assert_eq!(prod, p);
    }

    #[test]
    fn psi_weights_by_q_power(x in qelem(6), e in 0u32..4) {
        prop_assert_eq!(psi(&QElem::zero()), QElem::zero());
        // Ψ(q^e z) = q^e (Ψ z + e z).
        let lhs = psi(&x.shift_q(e));
        let rhs = psi(&x).add(&x.scale(&q(e as i64))).shift_q(e);
        prop_assert_eq!(lhs, rhs);
        // Classical parts are killed.
        let classical: Vec<(usize, u32, Q)> = x.terms().filter(|t| t.1 == 0).map(|(k, d, c)| (k, d, c.clone())).collect();
        let mut c0 = QElem::zero();
        for (k, d, c) in classical {
            c0.add_term(k, d, c);
        }
        prop_assert!(psi(&c0).is_zero());
    }

    #[test]
    fn psi_commutes_with_classical_product(n in 1usize..6, x in qelem(6), z in qelem(6)) {
        let r = projective_space(n).unwrap();
        let keep = |w: &QElem, classical: bool| {
            let mut o = QElem::zero();
            for (k, d, c) in w.terms() {
                if k <= n && (!classical || d == 0) {
                    o.add_term(k, d, c.clone());
                }
            }
            o
        };
        let x = keep(&x, true);
        let z = keep(&z, false);
        // Cup product with a classical class, applied term by term.
        let cup = |w: &QElem| {
            let mut o = QElem::zero();
            for (k, d, c) in w.terms() {
                let p = keep(&r.mul(&x, &QElem::basis(k)), true);
                o = o.add(&p.shift_q(d).scale(c));
            }
            o
        };
        prop_assert_eq!(psi(&cup(&z)), cup(&psi(&z)));
    }

    #[test]
    fn random_algebra_radical_is_nilpotent_set(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (a, rad_dim) = random_algebra(&mut rng, 4);
        let rad = a.radical().unwrap();
        prop_assert_eq!(rad.dim(), rad_dim);
        prop_assert_eq!(rad.is_semisimple, rad_dim == 0);
        for v in brute_force_nilpotent(&a) {
            prop_assert!(qcoh::linalg::span_contains(a.dim(), &rad.basis, std::slice::from_ref(&v)));
        }
        for (v, k) in &rad.witnesses {
            prop_assert!(a.pow(v, *k).iter().all(|z| *z == q(0)));
        }
    }

    #[test]
    fn radical_sits_in_multiple_components(seed in any::<u64>(), b in prop::collection::vec(-3i64..=3, 5)) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (a, _) = random_split_algebra(&mut rng, 5);
        let b: Vec<Q> = b.iter().take(a.dim()).map(|&x| q(x)).collect();
        let dec = a.mult_operator(&b).generalized_components();
        prop_assert!(dec.all_real());
        let rad = a.radical().unwrap().basis;
        prop_assert!(qcoh::linalg::span_contains(a.dim(), &dec.multiple_part(), &rad));
    }

    #[test]
    fn gr2_pairing_and_pieri(n in 4usize..10, pick in 0usize..64) {
        let r = grassmannian2(n).unwrap();
        prop_assert_eq!(r.q_degree() as usize, 2 * n);
        let parts = Partition2::all(n);
        let lam = parts[pick % parts.len()];
        let i = r.index_of(&lam.label()).unwrap();
        // Poincaré pairing: the point coefficient of σ_λ σ_μ is δ(μ, λ^∨).
        let pt = r.point_index().unwrap();
        for mu in &parts {
            let j = r.index_of(&mu.label()).unwrap();
            let c = r.mul_basis(i, &QElem::basis(j)).coeff(pt, 0);
            prop_assert_eq!(c, q((*mu == lam.dual(n)) as i64));
        }
        // Classical part of σ1 ⋆ σ_λ: add one box, keeping a ≥ b and a ≤ n − 2.
        let s1 = r.index_of(&Partition2 { a: 1, b: 0 }.label()).unwrap();
        let prod = r.mul_basis(s1, &QElem::basis(i));
        let mut expect = QElem::zero();
        for (a, b) in [(lam.a + 1, lam.b), (lam.a, lam.b + 1)] {
            if let Some(p) = Partition2::new(a, b) {
                if p.fits(n) {
                    expect.add_term(r.index_of(&p.label()).unwrap(), 0, q(1));
                }
            }
        }
        let mut classical = QElem::zero();
        for (k, d, c) in prod.terms().filter(|t| t.1 == 0) {
            classical.add_term(k, d, c.clone());
        }
        prop_assert_eq!(classical, expect);
    }

    #[test]
    fn table_text_round_trips(which in 0usize..3, n in 1usize..8) {
        let ring = match which {
            0 => projective_space(n).unwrap(),
            1 => grassmannian2(n + 3).unwrap(),
            _ => {
                let pairs = ci_admissible_pairs();
                let (m, d) = &pairs[n % pairs.len()];
                complete_intersection(*m, d).unwrap()
            }
        };
        let t = RingTable::builtin(ring);
        let text = t.to_text();
        let back = RingTable::from_text(&text).unwrap();
        prop_assert_eq!(&back, &t);
        prop_assert_eq!(back.to_text(), text);
    }
}
