use num_traits::{One, Zero};

use super::specialized::LinOp;
use crate::linalg::{add_scaled, is_zero_vec, span_contains, unit_vector, Matrix, Vector};
use crate::poly::Poly;
use crate::Q;

/// Minimal polynomial as the lcm of the Krylov minimal polynomials of the
/// basis vectors.
pub(crate) fn minimal_polynomial(m: &Matrix) -> Poly {
    let n = m.rows();
    let mut mu = Poly::one();
    for j in 0..n {
        let v = unit_vector(n, j);
        if is_zero_vec(&apply_poly(&mu, m, &v)) {
            continue;
        }
        mu = mu.lcm(&krylov_min_poly(m, &v));
    }
    mu
}

/// `p(M) v` by Horner.
fn apply_poly(p: &Poly, m: &Matrix, v: &[Q]) -> Vector {
    let mut acc = vec![Q::zero(); v.len()];
    for c in p.coeffs().iter().rev() {
        acc = m.mul_vec(&acc);
        add_scaled(&mut acc, c, v);
    }
    acc
}

/// Monic polynomial of least degree annihilating `v`.
fn krylov_min_poly(m: &Matrix, v: &[Q]) -> Poly {
    // Echelon rows: (reduced vector, pivot, polynomial with p(M) v = vector).
    let mut rows: Vec<(Vector, usize, Poly)> = Vec::new();
    let mut w = v.to_vec();
    let mut k = 0;
    loop {
        let mut r = w.clone();
        let mut p = Poly::monomial(Q::one(), k);
        for (bv, piv, bp) in &rows {
            if r[*piv].is_zero() {
                continue;
            }
            let f = r[*piv].clone() / &bv[*piv];
            add_scaled(&mut r, &-f.clone(), bv);
            p = p.sub(&bp.scale(&f));
        }
        match r.iter().position(|x| !x.is_zero()) {
            None => return p.monic(),
            Some(piv) => rows.push((r, piv, p)),
        }
        w = m.mul_vec(&w);
        k += 1;
    }
}

#[derive(Clone, Debug)]
pub struct SpectralComponent {
    /// Monic irreducible factor of the minimal polynomial.
    pub factor: Poly,
    /// Exponent of `factor` in the minimal polynomial.
    pub exponent: usize,
    /// Basis of `Ker factor(E)^exponent`.
    pub basis: Vec<Vector>,
    /// `dim / deg factor`: the common multiplicity of each root.
    pub root_multiplicity: usize,
    /// Number of real roots of `factor` (Sturm).
    pub real_roots: usize,
}

impl SpectralComponent {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Clone, Debug)]
pub struct SpectralDecomposition {
    pub minimal_polynomial: Poly,
    pub components: Vec<SpectralComponent>,
}

impl SpectralDecomposition {
    pub fn compute(e: &LinOp) -> Self {
        let mu = e.minimal_polynomial();
        let mut components = Vec::new();
        for (factor, exponent) in mu.factor() {
            let p = factor.pow(exponent);
            let basis = p.eval_matrix(&e.matrix).kernel();
            let root_multiplicity = basis.len() / factor.deg();
            let real_roots = factor.count_real_roots();
            components.push(SpectralComponent {
                factor,
                exponent,
                basis,
                root_multiplicity,
                real_roots,
            });
        }
        Self {
            minimal_polynomial: mu,
            components,
        }
    }

    pub fn total_dim(&self) -> usize {
        self.components.iter().map(|c| c.dim()).sum()
    }

    /// Whether every characteristic root is real.
    pub fn all_real(&self) -> bool {
        self.components
            .iter()
            .all(|c| c.real_roots == c.factor.deg())
    }

    /// The component of the factor `X`, if present.
    pub fn zero_component(&self) -> Option<&SpectralComponent> {
        self.components.iter().find(|c| c.factor == Poly::x())
    }

    /// Sum of the components whose roots have multiplicity greater than one.
    pub fn multiple_part(&self) -> Vec<Vector> {
        self.components
            .iter()
            .filter(|c| c.root_multiplicity > 1)
            .flat_map(|c| c.basis.iter().cloned())
            .collect()
    }

    /// Every component is stable under `e`.
    pub fn components_stable(&self, e: &LinOp) -> bool {
        let n = e.dim();
        self.components.iter().all(|c| {
            let images: Vec<Vector> = c.basis.iter().map(|v| e.apply(v)).collect();
            span_contains(n, &c.basis, &images)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;

    #[test]
    fn identity_single_component() {
        let e = LinOp::new(Matrix::identity(4));
        let s = e.generalized_components();
        assert_eq!(s.minimal_polynomial, Poly::from_ints(&[-1, 1]));
        assert_eq!(s.components.len(), 1);
        assert_eq!(s.components[0].root_multiplicity, 4);
    }

    #[test]
    fn jordan_block_min_poly() {
        let m = Matrix::from_rows(vec![
            vec![q(2), q(1), q(0)],
            vec![q(0), q(2), q(0)],
            vec![q(0), q(0), q(3)],
        ]);
        let e = LinOp::new(m);
        let s = e.generalized_components();
        assert_eq!(
            s.minimal_polynomial,
            Poly::from_ints(&[-2, 1])
                .pow(2)
                .mul(&Poly::from_ints(&[-3, 1]))
        );
        assert_eq!(s.total_dim(), 3);
        assert!(s.components_stable(&e));
        assert_eq!(s.multiple_part().len(), 2);
    }

    #[test]
    fn rotation_has_no_real_roots() {
        let m = Matrix::from_rows(vec![vec![q(0), q(-1)], vec![q(1), q(0)]]);
        let s = LinOp::new(m).generalized_components();
        assert_eq!(s.components.len(), 1);
        assert_eq!(s.components[0].real_roots, 0);
        assert!(!s.all_real());
    }
}
