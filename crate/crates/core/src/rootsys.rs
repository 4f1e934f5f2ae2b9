//! Finite root systems in Bourbaki numbering and their single-node affine
//! extension, as used to index Schubert classes of coadjoint varieties.
//!
//! Roots are integer vectors in the simple-root basis. The Cartan matrix is
//! stored as `cartan[i][j] = <α_i^∨, α_j>`. The affine node is index `0`,
//! with `α₀ = δ − Θ` where `Θ` is the highest root.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RootSystemType {
    pub family: Family,
    pub rank: usize,
}

impl RootSystemType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::InvalidType(format!("{family}{rank}")))
        }
    }

    /// Every valid type of rank at most `max_rank`.
    pub fn all_up_to(max_rank: usize) -> Vec<Self> {
        let fams = [
            Family::A,
            Family::B,
            Family::C,
            Family::D,
            Family::E,
            Family::F,
            Family::G,
        ];
        let mut out = Vec::new();
        for fam in fams {
            for r in 1..=max_rank {
                if let Ok(t) = Self::new(fam, r) {
                    out.push(t);
                }
            }
        }
        out
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for RootSystemType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let fam = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::InvalidType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidType(s.to_string()))?;
        Self::new(fam, rank)
    }
}

/// A finite root, in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub coeffs: Vec<i64>,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Self { coeffs }
    }

    pub fn zero(rank: usize) -> Self {
        Self {
            coeffs: vec![0; rank],
        }
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coeffs = vec![0; rank];
        coeffs[i] = 1;
        Self { coeffs }
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().all(|&c| c >= 0)
    }

    pub fn neg(&self) -> Root {
        Root::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scaled(&self, c: i64) -> Root {
        Root::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Compact label such as `a1+2a2+a3` or `-a1-a2`.
    pub fn label(&self) -> String {
        let mut s = String::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
            if c.abs() != 1 {
                s.push_str(&c.abs().to_string());
            }
            s.push_str(&format!("a{}", i + 1));
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    /// Inverse of [`Root::label`].
    pub fn parse_label(s: &str, rank: usize) -> Option<Root> {
        let s = s.trim();
        if s.is_empty() {
            return None;
        }
        let mut coeffs = vec![0i64; rank];
        let bytes = s.as_bytes();
        let mut pos = 0;
        while pos < bytes.len() {
            let mut sign = 1;
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                if bytes[pos] == b'-' {
                    sign = -1;
                }
                pos += 1;
            } else if pos != 0 {
                return None;
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let mult: i64 = if pos == start {
                1
            } else {
                s[start..pos].parse().ok()?
            };
            if pos >= bytes.len() || bytes[pos] != b'a' {
                return None;
            }
            pos += 1;
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let idx: usize = s[start..pos].parse().ok()?;
            if idx == 0 || idx > rank {
                return None;
            }
            coeffs[idx - 1] += sign * mult;
        }
        Some(Root::new(coeffs))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// `finite + delta_mult·δ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineRoot {
    pub finite: Root,
    pub delta_mult: i64,
}

impl AffineRoot {
    pub fn new(finite: Root, delta_mult: i64) -> Self {
        Self { finite, delta_mult }
    }

    pub fn from_finite(finite: Root) -> Self {
        Self {
            finite,
            delta_mult: 0,
        }
    }
}

/// `q^q_power · σ_root`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuantumMonomial {
    pub q_power: i64,
    pub root: Root,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: RootSystemType,
    cartan: Vec<Vec<i64>>,
    /// Squared lengths of the simple roots, normalised so short roots have 1.
    sq_len: Vec<i64>,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    short: Vec<Root>,
    highest: Root,
    highest_short: Root,
}

/// Cartan matrix `A[i][j] = <α_i^∨, α_j>` in Bourbaki numbering.
pub fn cartan_matrix(t: RootSystemType) -> Vec<Vec<i64>> {
    let n = t.rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match t.family {
        Family::A => {
            for i in 0..n.saturating_sub(1) {
                link(&mut a, i, i + 1);
            }
        }
        Family::B | Family::C => {
            for i in 0..n - 1 {
                link(&mut a, i, i + 1);
            }
            if t.family == Family::B {
                a[n - 1][n - 2] = -2;
            } else {
                a[n - 2][n - 1] = -2;
            }
        }
        Family::D => {
            for i in 0..n - 2 {
                link(&mut a, i, i + 1);
            }
            link(&mut a, n - 3, n - 1);
        }
        Family::E => {
            link(&mut a, 0, 2);
            link(&mut a, 1, 3);
            for i in 2..n - 1 {
                link(&mut a, i, i + 1);
            }
        }
        Family::F => {
            link(&mut a, 0, 1);
            link(&mut a, 1, 2);
            link(&mut a, 2, 3);
            a[2][1] = -2;
        }
        Family::G => {
            a[0][1] = -3;
            a[1][0] = -1;
        }
    }
    a
}

fn simple_sq_lengths(t: RootSystemType) -> Vec<i64> {
    let n = t.rank;
    match t.family {
        Family::A | Family::D | Family::E => vec![1; n],
        Family::B => {
            let mut v = vec![2; n];
            v[n - 1] = 1;
            v
        }
        Family::C => {
            let mut v = vec![1; n];
            v[n - 1] = 2;
            v
        }
        Family::F => vec![2, 2, 1, 1],
        Family::G => vec![1, 3],
    }
}

impl RootSystem {
    pub fn build(t: RootSystemType) -> Result<Self> {
        let t = RootSystemType::new(t.family, t.rank)?;
        let n = t.rank;
        let cartan = cartan_matrix(t);
        let sq_len = simple_sq_lengths(t);

        let mut seen: HashSet<Root> = HashSet::new();
        let mut frontier: Vec<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
        seen.extend(frontier.iter().cloned());
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for a in &frontier {
                for i in 0..n {
                    let c: i64 = (0..n).map(|j| cartan[i][j] * a.coeffs[j]).sum();
                    let mut b = a.clone();
                    b.coeffs[i] -= c;
                    if seen.insert(b.clone()) {
                        next.push(b);
                    }
                }
            }
            frontier = next;
        }
        let mut roots: Vec<Root> = seen.into_iter().collect();
        roots.sort();
        let index = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();

        let mut rs = Self {
            ty: t,
            cartan,
            sq_len,
            roots,
            index,
            short: Vec::new(),
            highest: Root::zero(n),
            highest_short: Root::zero(n),
        };
        let min_norm = rs.roots.iter().map(|r| rs.norm(r)).min().unwrap_or(0);
        let short: Vec<Root> = rs
            .roots
            .iter()
            .filter(|r| rs.norm(r) == min_norm)
            .cloned()
            .collect();
        rs.highest = rs.roots.iter().max_by_key(|r| r.height()).cloned().unwrap();
        rs.highest_short = short.iter().max_by_key(|r| r.height()).cloned().unwrap();
        rs.short = short;
        let order: Vec<(i64, Root)> = rs
            .short
            .iter()
            .map(|r| (rs.schubert_degree(r).unwrap(), r.clone()))
            .collect();
        let mut order = order;
        order.sort();
        rs.short = order.into_iter().map(|(_, r)| r).collect();
        Ok(rs)
    }

    pub fn root_type(&self) -> RootSystemType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    /// All roots, sorted lexicographically.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> Vec<Root> {
        self.roots
            .iter()
            .filter(|r| r.is_positive())
            .cloned()
            .collect()
    }

    /// Short roots in basis order: by Schubert degree, then lexicographically.
    pub fn short_roots(&self) -> &[Root] {
        &self.short
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    pub fn is_short(&self, r: &Root) -> bool {
        self.is_root(r) && self.norm(r) == self.norm(&self.highest_short)
    }

    /// Highest root `Θ`.
    pub fn highest_root(&self) -> &Root {
        &self.highest
    }

    /// Highest short root `θ`.
    pub fn highest_short_root(&self) -> &Root {
        &self.highest_short
    }

    /// Symmetric form `B(α, β)`, twice the invariant form with short roots of
    /// squared length one.
    pub fn form(&self, a: &Root, b: &Root) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if a.coeffs[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += a.coeffs[i] * self.cartan[i][j] * self.sq_len[i] * b.coeffs[j];
            }
        }
        s
    }

    fn norm(&self, r: &Root) -> i64 {
        self.form(r, r)
    }

    /// `<β^∨, α>` for a root `β`.
    pub fn pairing(&self, beta: &Root, alpha: &Root) -> i64 {
        2 * self.form(alpha, beta) / self.norm(beta)
    }

    /// `s_β(α) = α − <β^∨, α> β`.
    pub fn reflect(&self, beta: &Root, alpha: &Root) -> Root {
        alpha.sub(&beta.scaled(self.pairing(beta, alpha)))
    }

    pub fn height(&self, r: &Root) -> i64 {
        r.height()
    }

    /// `ht δ = ht Θ + 1`.
    pub fn delta_height(&self) -> i64 {
        self.highest.height() + 1
    }

    pub fn affine_height(&self, x: &AffineRoot) -> i64 {
        x.finite.height() + x.delta_mult * self.delta_height()
    }

    pub fn delta(&self) -> AffineRoot {
        AffineRoot::new(Root::zero(self.rank()), 1)
    }

    /// `α₀ = δ − Θ`.
    pub fn alpha0(&self) -> AffineRoot {
        AffineRoot::new(self.highest.neg(), 1)
    }

    /// `<α_i^∨, x>` for `i ∈ [0, n]`; index `0` is the affine node.
    pub fn coroot_pairing(&self, i: usize, x: &AffineRoot) -> i64 {
        assert!(i <= self.rank(), "simple index {i} out of range");
        if i == 0 {
            -self.pairing(&self.highest, &x.finite)
        } else {
            let row = &self.cartan[i - 1];
            row.iter().zip(&x.finite.coeffs).map(|(a, c)| a * c).sum()
        }
    }

    pub fn simple_reflection(&self, i: usize, x: &AffineRoot) -> AffineRoot {
        let c = self.coroot_pairing(i, x);
        if i == 0 {
            AffineRoot::new(x.finite.add(&self.highest.scaled(c)), x.delta_mult - c)
        } else {
            let mut f = x.finite.clone();
            f.coeffs[i - 1] -= c;
            AffineRoot::new(f, x.delta_mult)
        }
    }

    /// `η(α − dδ) = q^d σ_α`.
    pub fn eta(&self, x: &AffineRoot) -> Result<QuantumMonomial> {
        if !self.is_short(&x.finite) {
            return Err(Error::NotShort(x.finite.label()));
        }
        Ok(QuantumMonomial {
            q_power: -x.delta_mult,
            root: x.finite.clone(),
        })
    }

    pub fn eta_inv(&self, m: &QuantumMonomial) -> AffineRoot {
        AffineRoot::new(m.root.clone(), -m.q_power)
    }

    /// Cohomological degree of `σ_α` for a short root `α`.
    pub fn schubert_degree(&self, r: &Root) -> Result<i64> {
        if r.is_zero() {
            return Err(Error::Unsupported("zero root has no Schubert class".into()));
        }
        if !self.is_short(r) {
            return Err(Error::NotShort(r.label()));
        }
        let ht_theta = self.highest_short.height();
        Ok(if r.is_positive() {
            2 * (ht_theta - r.height())
        } else {
            2 * (ht_theta - r.height() - 1)
        })
    }

    /// `deg q = 2(ht δ − 1)`.
    pub fn q_degree(&self) -> i64 {
        2 * (self.delta_height() - 1)
    }

    pub fn quantum_degree(&self, m: &QuantumMonomial) -> Result<i64> {
        Ok(self.schubert_degree(&m.root)? + m.q_power * self.q_degree())
    }

    /// Dimension of the coadjoint variety: half the point-class degree.
    pub fn coadjoint_dim(&self) -> i64 {
        self.schubert_degree(&self.highest_short.neg()).unwrap() / 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn invalid_types_rejected() {
        for s in ["E5", "F3", "G3", "B1", "D2", "A0", "X2"] {
            assert!(s.parse::<RootSystemType>().is_err(), "{s}");
        }
    }

    #[test]
    fn c3_basics() {
        let r = rs("C3");
        assert_eq!(r.roots().len(), 18);
        assert_eq!(r.positive_roots().len(), 9);
        assert_eq!(r.short_roots().len(), 12);
        assert_eq!(r.highest_short_root().coeffs, vec![1, 2, 1]);
        assert_eq!(r.highest_root().coeffs, vec![2, 2, 1]);
        assert_eq!(r.delta_height(), 6);
        assert_eq!(r.q_degree(), 10);
        let theta = AffineRoot::from_finite(r.highest_short_root().clone());
        assert_eq!(r.coroot_pairing(0, &theta), -1);
        let pt = r.highest_short_root().neg();
        assert_eq!(r.schubert_degree(&pt).unwrap(), 14);
    }

    #[test]
    fn affine_reflection_of_theta() {
        let r = rs("C3");
        let theta = r.highest_short_root().clone();
        let x = AffineRoot::from_finite(theta.clone());
        // <α₀^∨, θ> = -1, so s₀(θ) = θ + (δ − Θ).
        let y = r.simple_reflection(0, &x);
        assert_eq!(y.finite, theta.sub(r.highest_root()));
        assert_eq!(y.delta_mult, 1);
        assert_eq!(r.simple_reflection(0, &y), x);
    }

    #[test]
    fn label_round_trip() {
        let r = rs("F4");
        for a in r.roots() {
            assert_eq!(Root::parse_label(&a.label(), 4).as_ref(), Some(a));
        }
        assert_eq!(
            Root::parse_label("a1+2a2+3a3+2a4", 4).unwrap().coeffs,
            vec![1, 2, 3, 2]
        );
        assert!(Root::parse_label("a5", 4).is_none());
        assert!(Root::parse_label("2", 4).is_none());
    }

    #[test]
    fn eta_rejects_long() {
        let r = rs("C3");
        let long = AffineRoot::from_finite(r.highest_root().clone());
        assert!(r.eta(&long).is_err());
    }
}
