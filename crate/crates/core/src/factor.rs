//! Factorisation of squarefree integer polynomials (Zassenhaus).
//!
//! Distinct-degree and Cantor–Zassenhaus splitting modulo a small odd prime,
//! multifactor Hensel lifting, then recombination by subset search.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Fp = Vec<u64>;
type Zx = Vec<BigInt>;

/// Irreducible factors (primitive, positive leading coefficient) of a
/// primitive squarefree integer polynomial of positive degree.
pub fn factor_squarefree(f: &[BigInt]) -> Vec<Zx> {
    let mut f = trim_z(f.to_vec());
    assert!(f.len() >= 2, "constant polynomial");
    let mut out = Vec::new();
    if f[0].is_zero() {
        out.push(vec![BigInt::zero(), BigInt::one()]);
        f.remove(0);
    }
    if f.len() == 2 {
        out.push(normalize(f));
        return out;
    }
    if f.len() < 2 {
        return out;
    }
    out.extend(zassenhaus(&f));
    out
}

fn zassenhaus(f: &Zx) -> Vec<Zx> {
    let n = f.len() - 1;
    let lc = f[n].clone();
    let Some((p, factors)) = choose_prime(f) else {
        return vec![normalize(f.clone())];
    };
    if factors.len() == 1 {
        return vec![normalize(f.clone())];
    }

    // Bound on coefficients of lc * (any factor).
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let norm = isqrt(&norm2) + BigInt::one();
    let bound = lc.abs() * (BigInt::one() << n) * norm;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut m = pb.clone();
    while m <= &bound * 2 {
        m *= &pb;
        k += 1;
    }

    let lc_inv = BigInt::from(inv_mod(mod_u64(&lc, p), p));
    let mut monic_target = f.clone();
    let lc_inv_m = lift_inverse(&lc, &lc_inv, &pb, k);
    for c in monic_target.iter_mut() {
        *c = (&*c * &lc_inv_m).mod_floor(&m);
    }
    let lifted = hensel_multi(&monic_target, &factors, p, k);

    recombine(f.clone(), lifted, &m)
}

fn recombine(mut f: Zx, mut us: Vec<Zx>, m: &BigInt) -> Vec<Zx> {
    let mut out = Vec::new();
    let mut s = 1;
    while 2 * s <= us.len() {
        let mut found = false;
        for subset in combinations(us.len(), s) {
            let lc = f.last().unwrap().clone();
            let mut g: Zx = vec![lc.clone()];
            for &i in &subset {
                g = mul_z(&g, &us[i]);
                for c in g.iter_mut() {
                    *c = c.mod_floor(m);
                }
            }
            let g: Zx = g.into_iter().map(|c| symmetric(c, m)).collect();
            let g = primitive(trim_z(g));
            if let Some(quot) = divide_exact_z(&f, &g) {
                out.push(normalize(g));
                f = quot;
                let mut rest = Vec::new();
                for (i, u) in us.into_iter().enumerate() {
                    if !subset.contains(&i) {
                        rest.push(u);
                    }
                }
                us = rest;
                found = true;
                break;
            }
        }
        if !found {
            s += 1;
        }
    }
    if f.len() > 1 {
        out.push(normalize(f));
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn choose_prime(f: &Zx) -> Option<(u64, Vec<Fp>)> {
    let lc = f.last().unwrap();
    let mut best: Option<(u64, Vec<(Fp, usize)>, usize)> = None;
    let mut tried = 0;
    let mut p = 3u64;
    while tried < 6 && p < 20_000 {
        if is_prime(p) && !mod_u64(lc, p).is_zero() {
            let fp = monic_fp(&reduce(f, p), p);
            if fp.len() == f.len() && gcd_fp(&fp, &deriv_fp(&fp, p), p).len() == 1 {
                let parts = ddf(&fp, p);
                let count: usize = parts.iter().map(|(g, d)| (g.len() - 1) / d).sum();
                if best.as_ref().map_or(true, |b| count < b.2) {
                    best = Some((p, parts, count));
                }
                tried += 1;
                if count == 1 {
                    break;
                }
            }
        }
        p += 2;
    }
    let (p, parts, _) = best?;
    let mut rng = StdRng::seed_from_u64(0x5eed ^ p);
    let mut factors = Vec::new();
    for (g, d) in parts {
        edf(&g, d, p, &mut rng, &mut factors);
    }
    factors.sort();
    Some((p, factors))
}

// ---------- arithmetic in F_p[x] ----------

fn trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn reduce(f: &Zx, p: u64) -> Fp {
    trim(f.iter().map(|c| mod_u64(c, p)).collect())
}

fn mod_u64(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulm(acc, b, p);
        }
        b = mulm(b, b, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "not invertible");
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn monic_fp(a: &Fp, p: u64) -> Fp {
    let inv = inv_mod(*a.last().unwrap(), p);
    a.iter().map(|&c| mulm(c, inv, p)).collect()
}

fn add_fp(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

fn sub_fp(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

fn mul_fp(a: &Fp, b: &Fp, p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulm(x, y, p)) % p;
        }
    }
    trim(out)
}

fn divrem_fp(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp) {
    let db = b.len() - 1;
    if a.len() <= db {
        return (Vec::new(), a.clone());
    }
    let inv = inv_mod(*b.last().unwrap(), p);
    let mut r = a.clone();
    let mut q = vec![0u64; a.len() - db];
    for k in (0..q.len()).rev() {
        let c = mulm(r[k + db], inv, p);
        if c == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            r[k + j] = (r[k + j] + p - mulm(c, bj, p)) % p;
        }
        q[k] = c;
    }
    r.truncate(db);
    (trim(q), trim(r))
}

fn rem_fp(a: &Fp, b: &Fp, p: u64) -> Fp {
    divrem_fp(a, b, p).1
}

fn gcd_fp(a: &Fp, b: &Fp, p: u64) -> Fp {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem_fp(&a, &b, p);
        a = b;
        b = r;
    }
    if a.is_empty() {
        a
    } else {
        monic_fp(&a, p)
    }
}

/// `s, t` with `s a + t b = 1` for coprime `a, b`.
fn ext_gcd_fp(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = divrem_fp(&r0, &r1, p);
        let s2 = sub_fp(&s0, &mul_fp(&q, &s1, p), p);
        let t2 = sub_fp(&t0, &mul_fp(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    assert_eq!(r0.len(), 1, "factors are not coprime");
    let inv = inv_mod(r0[0], p);
    let sc = |v: &Fp| trim(v.iter().map(|&c| mulm(c, inv, p)).collect());
    (sc(&s0), sc(&t0))
}

fn deriv_fp(a: &Fp, p: u64) -> Fp {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulm(c, i as u64 % p, p))
            .collect(),
    )
}

fn powmod_fp(base: &Fp, mut e: u64, m: &Fp, p: u64) -> Fp {
    let mut acc = vec![1u64];
    let mut b = rem_fp(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem_fp(&mul_fp(&acc, &b, p), m, p);
        }
        e >>= 1;
        if e > 0 {
            b = rem_fp(&mul_fp(&b, &b, p), m, p);
        }
    }
    acc
}

/// Distinct-degree factorisation of a monic squarefree polynomial.
fn ddf(f: &Fp, p: u64) -> Vec<(Fp, usize)> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x: Fp = vec![0, 1];
    let mut h = x.clone();
    let mut i = 1;
    while rest.len() > 2 * i {
        h = powmod_fp(&h, p, &rest, p);
        let g = gcd_fp(&rest, &sub_fp(&h, &x, p), p);
        if g.len() > 1 {
            rest = divrem_fp(&rest, &g, p).0;
            h = rem_fp(&h, &rest, p);
            out.push((g, i));
        }
        i += 1;
    }
    if rest.len() > 1 {
        let d = rest.len() - 1;
        out.push((rest, d));
    }
    out
}

/// Equal-degree splitting (Cantor–Zassenhaus, odd `p`).
fn edf(g: &Fp, d: usize, p: u64, rng: &mut StdRng, out: &mut Vec<Fp>) {
    let n = g.len() - 1;
    if n == d {
        out.push(g.clone());
        return;
    }
    loop {
        let a: Fp = trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        let mut t = vec![1u64];
        let mut frob = a.clone();
        for i in 0..d {
            if i > 0 {
                frob = powmod_fp(&frob, p, g, p);
            }
            t = rem_fp(&mul_fp(&t, &frob, p), g, p);
        }
        let b = powmod_fp(&t, (p - 1) / 2, g, p);
        let c = gcd_fp(g, &sub_fp(&b, &vec![1], p), p);
        if c.len() > 1 && c.len() < g.len() {
            let other = monic_fp(&divrem_fp(g, &c, p).0, p);
            edf(&c, d, p, rng, out);
            edf(&other, d, p, rng, out);
            return;
        }
    }
}

// ---------- Hensel lifting ----------

fn hensel_multi(target: &Zx, factors: &[Fp], p: u64, k: u32) -> Vec<Zx> {
    let m = BigInt::from(p).pow(k);
    if factors.len() == 1 {
        return vec![target.iter().map(|c| c.mod_floor(&m)).collect()];
    }
    let mid = factors.len() / 2;
    let g0 = factors[..mid]
        .iter()
        .fold(vec![1u64], |acc, f| mul_fp(&acc, f, p));
    let h0 = factors[mid..]
        .iter()
        .fold(vec![1u64], |acc, f| mul_fp(&acc, f, p));
    let (g, h) = hensel_two(target, &g0, &h0, p, k);
    let mut out = hensel_multi(&g, &factors[..mid], p, k);
    out.extend(hensel_multi(&h, &factors[mid..], p, k));
    out
}

/// Lift `F ≡ g h (mod p)` with `F`, `g`, `h` monic to `mod p^k`.
fn hensel_two(f: &Zx, g0: &Fp, h0: &Fp, p: u64, k: u32) -> (Zx, Zx) {
    let (s, t) = ext_gcd_fp(g0, h0, p);
    let pb = BigInt::from(p);
    let mut g: Zx = g0.iter().map(|&c| BigInt::from(c)).collect();
    let mut h: Zx = h0.iter().map(|&c| BigInt::from(c)).collect();
    let mut pj = pb.clone();
    for _ in 1..k {
        let pj1 = &pj * &pb;
        let gh = mul_z(&g, &h);
        let n = f.len().max(gh.len());
        let e: Zx = (0..n)
            .map(|i| {
                let a = f.get(i).cloned().unwrap_or_default();
                let b = gh.get(i).cloned().unwrap_or_default();
                let d = (a - b).mod_floor(&pj1);
                debug_assert!((&d % &pj).is_zero());
                d / &pj
            })
            .collect();
        let e = reduce(&e, p);
        let se = mul_fp(&s, &e, p);
        let (qq, r) = divrem_fp(&se, &reduce(&h, p), p);
        let dg = add_fp(&mul_fp(&qq, &reduce(&g, p), p), &mul_fp(&t, &e, p), p);
        let dh = r;
        g = add_scaled_z(&g, &dg, &pj, &pj1);
        h = add_scaled_z(&h, &dh, &pj, &pj1);
        pj = pj1;
    }
    (g, h)
}

fn add_scaled_z(a: &Zx, d: &Fp, scale: &BigInt, m: &BigInt) -> Zx {
    let n = a.len().max(d.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            let y = d.get(i).copied().unwrap_or(0);
            (x + scale * BigInt::from(y)).mod_floor(m)
        })
        .collect()
}

/// Inverse of `a` modulo `p^k`, from its inverse modulo `p` (Newton).
fn lift_inverse(a: &BigInt, inv_p: &BigInt, p: &BigInt, k: u32) -> BigInt {
    let m = p.pow(k);
    let mut x = inv_p.clone();
    let mut prec = 1;
    while prec < k {
        prec *= 2;
        let two = BigInt::from(2);
        x = (&x * (two - a * &x)).mod_floor(&m);
    }
    x.mod_floor(&m)
}

// ---------- integer polynomial helpers ----------

fn trim_z(mut a: Zx) -> Zx {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn mul_z(a: &Zx, b: &Zx) -> Zx {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn symmetric(c: BigInt, m: &BigInt) -> BigInt {
    let half = m / 2;
    if c > half {
        c - m
    } else {
        c
    }
}

fn primitive(a: Zx) -> Zx {
    let g = a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() || g.is_one() {
        return a;
    }
    a.into_iter().map(|c| c / &g).collect()
}

fn normalize(a: Zx) -> Zx {
    let a = primitive(trim_z(a));
    if a.last().is_some_and(Signed::is_negative) {
        a.into_iter().map(|c| -c).collect()
    } else {
        a
    }
}

/// `a / b` if `b` divides `a` in `Z[x]`.
fn divide_exact_z(a: &Zx, b: &Zx) -> Option<Zx> {
    let db = b.len().checked_sub(1)?;
    if a.len() <= db {
        return None;
    }
    let lb = b.last().unwrap();
    let mut r = a.clone();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let (c, rem) = r[k + db].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &c * bj;
        }
        q[k] = c;
    }
    if r.iter().all(Zero::is_zero) {
        Some(trim_z(q))
    } else {
        None
    }
}

fn isqrt(n: &BigInt) -> BigInt {
    n.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64]) -> Zx {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn product(fs: &[Zx]) -> Zx {
        fs.iter().fold(z(&[1]), |acc, f| mul_z(&acc, f))
    }

    #[test]
    fn splits_products_of_known_irreducibles() {
        let parts = vec![
            z(&[1, 0, 1]),
            z(&[-2, 0, 0, 1]),
            z(&[3, 1]),
            z(&[1, 1, 1, 1, 1]),
        ];
        let f = product(&parts);
        let mut got = factor_squarefree(&f);
        got.sort();
        let mut want: Vec<Zx> = parts.into_iter().map(normalize).collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn swinnerton_dyer_like_stays_irreducible() {
        // x^4 - 10x^2 + 1 splits modulo every prime but is irreducible.
        let f = z(&[1, 0, -10, 0, 1]);
        assert_eq!(factor_squarefree(&f), vec![f]);
    }

    #[test]
    fn non_monic_factors() {
        let parts = vec![z(&[1, 2]), z(&[-1, 0, 3]), z(&[5, 0, 0, 7])];
        let f = product(&parts);
        let mut got = factor_squarefree(&f);
        got.sort();
        let mut want: Vec<Zx> = parts.into_iter().map(normalize).collect();
        want.sort();
        assert_eq!(got, want);
    }
}
