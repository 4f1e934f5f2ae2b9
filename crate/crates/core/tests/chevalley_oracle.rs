//! Quantum Chevalley rule on coadjoint varieties against an independent
//! Fulton–Woodward computation.
//!
//! The oracle works in orthonormal coordinates, with hard-coded root systems.
//! A Schubert class of `G/P` is a point `λ = wθ` of the Weyl orbit of the
//! highest short root; its length is the number of positive roots `β` with
//! `⟨λ, β^∨⟩ < 0`. For every root `γ` with `d = ⟨λ, γ^∨⟩ > 0`, the class
//! `s_γ λ` enters `h ⋆ σ_λ` with coefficient `d`: classically when the length
//! goes up by one, with `q^d` when it goes up by `1 − c₁ d`.

use std::collections::BTreeMap;

use qcoh::rings::{coadjoint_chevalley, RingTable};
use qcoh::{QElem, RootSystemType};

type V = Vec<i64>;

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn pairing(l: &[i64], g: &[i64]) -> i64 {
    let num = 2 * dot(l, g);
    let den = dot(g, g);
    assert_eq!(num % den, 0, "non-integral pairing");
    num / den
}

struct Oracle {
    simple: Vec<V>,
    roots: Vec<V>,
    positive: Vec<V>,
    theta: V,
    marked: usize,
}

impl Oracle {
    /// `C_n`: roots `±e_i ± e_j`, `±2e_i`; marked node 2.
    fn c(n: usize) -> Self {
        let e = |i: usize| -> V {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        };
        let add = |a: &V, b: &V, s: i64| -> V { a.iter().zip(b).map(|(x, y)| x + s * y).collect() };
        let mut roots = Vec::new();
        for i in 0..n {
            roots.push(add(&e(i), &e(i), 1));
            roots.push(add(&e(i), &e(i), 1).iter().map(|x| -x).collect());
            for j in i + 1..n {
                for (s, t) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    let v: V = (0..n)
                        .map(|k| {
                            if k == i {
                                s
                            } else if k == j {
                                t
                            } else {
                                0
                            }
                        })
                        .collect();
                    roots.push(v);
                }
            }
        }
        let mut simple: Vec<V> = (0..n - 1).map(|i| add(&e(i), &e(i + 1), -1)).collect();
        simple.push(add(&e(n - 1), &e(n - 1), 1));
        let f: V = (0..n).map(|i| (n - i) as i64).collect();
        Self::finish(roots, simple, f, add(&e(0), &e(1), 1), 1)
    }

    /// `F4` in doubled coordinates; marked node 4.
    fn f4() -> Self {
        let mut roots = Vec::new();
        for i in 0..4 {
            for s in [2, -2] {
                let mut v = vec![0; 4];
                v[i] = s;
                roots.push(v);
            }
            for j in i + 1..4 {
                for (s, t) in [(2, 2), (2, -2), (-2, 2), (-2, -2)] {
                    let mut v = vec![0; 4];
                    v[i] = s;
                    v[j] = t;
                    roots.push(v);
                }
            }
        }
        for m in 0..16 {
            roots.push(
                (0..4)
                    .map(|k| if m >> k & 1 == 1 { -1 } else { 1 })
                    .collect(),
            );
        }
        let simple = vec![
            vec![0, 2, -2, 0],
            vec![0, 0, 2, -2],
            vec![0, 0, 0, 2],
            vec![1, -1, -1, -1],
        ];
        Self::finish(roots, simple, vec![8, 4, 2, 1], vec![2, 0, 0, 0], 3)
    }

    fn finish(roots: Vec<V>, simple: Vec<V>, f: V, theta: V, marked: usize) -> Self {
        let positive = roots.iter().filter(|r| dot(r, &f) > 0).cloned().collect();
        Self {
            simple,
            roots,
            positive,
            theta,
            marked,
        }
    }

    fn in_eps(&self, coeffs: &[i64]) -> V {
        let n = self.theta.len();
        (0..n)
            .map(|k| coeffs.iter().zip(&self.simple).map(|(c, a)| c * a[k]).sum())
            .collect()
    }

    fn length(&self, l: &[i64]) -> i64 {
        self.positive.iter().filter(|b| pairing(l, b) < 0).count() as i64
    }

    fn c1(&self) -> i64 {
        let ak = &self.simple[self.marked];
        self.positive
            .iter()
            .filter(|b| pairing(&self.theta, b) > 0)
            .map(|b| pairing(b, ak))
            .sum()
    }

    fn orbit(&self) -> Vec<V> {
        let mut seen = vec![self.theta.clone()];
        let mut i = 0;
        while i < seen.len() {
            for a in &self.simple {
                let p = pairing(&seen[i], a);
                let v: V = seen[i].iter().zip(a).map(|(x, y)| x - p * y).collect();
                if !seen.contains(&v) {
                    seen.push(v);
                }
            }
            i += 1;
        }
        seen
    }

    /// `h ⋆ σ_λ` as `(s_γ λ, d) → coefficient`.
    fn chevalley(&self, l: &[i64]) -> BTreeMap<(V, u32), i64> {
        let c1 = self.c1();
        let len = self.length(l);
        let mut out = BTreeMap::new();
        for g in &self.roots {
            let d = pairing(l, g);
            if d <= 0 {
                continue;
            }
            let image: V = l.iter().zip(g).map(|(x, y)| x - d * y).collect();
            let dl = self.length(&image) - len;
            let qd = if dl == 1 {
                0
            } else if dl == 1 - c1 * d {
                d as u32
            } else {
                continue;
            };
            *out.entry((image, qd)).or_insert(0) += d;
        }
        out
    }
}

fn parse(label: &str, rank: usize) -> Vec<i64> {
    let s = label.strip_prefix("s:").expect("short-root label");
    qcoh::Root::parse_label(s, rank).expect("root label").coeffs
}

fn compare(t: &str, oracle: &Oracle) {
    let ty: RootSystemType = t.parse().unwrap();
    let ch = coadjoint_chevalley(ty).unwrap();
    assert_eq!(ch.c1 as i64, oracle.c1(), "{t}: c1");
    let orbit = oracle.orbit();
    assert_eq!(orbit.len(), ch.basis.len(), "{t}: number of classes");
    let eps: Vec<V> = ch.basis.iter().map(|r| oracle.in_eps(&r.coeffs)).collect();
    for (j, l) in eps.iter().enumerate() {
        assert!(
            orbit.contains(l),
            "{t}: {} is not in the orbit",
            ch.basis[j].label()
        );
        assert_eq!(
            ch.degrees[j] as i64,
            2 * oracle.length(l),
            "{t}: degree of {}",
            ch.basis[j].label()
        );
        let got: BTreeMap<(V, u32), i64> = ch.rows[j]
            .iter()
            .map(|tm| {
                assert!(tm.c.is_integer());
                (
                    (eps[tm.k].clone(), tm.d),
                    tm.c.to_integer().try_into().unwrap(),
                )
            })
            .collect();
        assert_eq!(
            got,
            oracle.chevalley(l),
            "{t}: h * s:{}",
            ch.basis[j].label()
        );
    }
}

#[test]
fn c3_matches_oracle() {
    compare("C3", &Oracle::c(3));
}

#[test]
fn c4_matches_oracle() {
    compare("C4", &Oracle::c(4));
}

#[test]
fn c5_matches_oracle() {
    compare("C5", &Oracle::c(5));
}

#[test]
fn c6_matches_oracle() {
    compare("C6", &Oracle::c(6));
}

#[test]
fn f4_matches_oracle() {
    compare("F4", &Oracle::f4());
}

#[test]
fn oracle_counts() {
    // Short roots: 2n(n − 1) in C_n, 24 in F4; c₁ = 2n − 1 and 11.
    for n in 3..=6 {
        let o = Oracle::c(n);
        assert_eq!(o.orbit().len(), 2 * n * (n - 1));
        assert_eq!(o.c1(), 2 * n as i64 - 1);
        assert_eq!(o.roots.len(), 2 * n * n);
    }
    let f = Oracle::f4();
    assert_eq!((f.orbit().len(), f.c1(), f.roots.len()), (24, 11, 48));
}

/// The bundled tables carry the same `h`-products as the rule.
#[test]
fn bundled_tables_agree_with_rule() {
    for (name, t) in [("ig26", "C3"), ("ig28", "C4"), ("f4p4", "F4")] {
        let table = RingTable::bundled(name).unwrap().unwrap();
        let r = &table.ring;
        let ch = coadjoint_chevalley(t.parse().unwrap()).unwrap();
        let h = r.hyperplane_index().unwrap();
        for (j, root) in ch.basis.iter().enumerate() {
            let i = r.index_of(&format!("s:{}", root.label())).unwrap();
            let mut expect = QElem::zero();
            for tm in &ch.rows[j] {
                let k = r
                    .index_of(&format!("s:{}", ch.basis[tm.k].label()))
                    .unwrap();
                expect.add_term(k, tm.d, tm.c.clone());
            }
            assert_eq!(
                r.mul_basis(h, &QElem::basis(i)),
                expect,
                "{name}: h * s:{}",
                root.label()
            );
        }
        let rank = ch.root_system.rank();
        assert_eq!(
            parse(r.label(r.unit_index()), rank),
            ch.root_system.highest_short_root().coeffs
        );
    }
}
