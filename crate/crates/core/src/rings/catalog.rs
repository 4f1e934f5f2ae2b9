use std::fmt;

/// Named varieties appearing in the catalogs, used both for catalog rows and
/// for the fibers `F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiberVariety {
    Point,
    /// `Gr(k, n)`.
    Grassmannian(i64, i64),
    /// Smooth quadric of the given dimension.
    Quadric(i64),
    /// `E6/P1`, the Cayley plane.
    E6P1,
}

impl FiberVariety {
    /// Dimension from the standard formulas.
    pub fn dim(&self) -> i64 {
        match *self {
            FiberVariety::Point => 0,
            FiberVariety::Grassmannian(k, n) => k * (n - k),
            FiberVariety::Quadric(m) => m,
            FiberVariety::E6P1 => 16,
        }
    }
}

impl fmt::Display for FiberVariety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiberVariety::Point => write!(f, "pt"),
            FiberVariety::Grassmannian(k, n) => write!(f, "Gr({k},{n})"),
            FiberVariety::Quadric(m) => write!(f, "Q{m}"),
            FiberVariety::E6P1 => write!(f, "E6/P1"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatalogFamily {
    Cominuscule,
    Adjoint,
}

/// One row of a variety catalog.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietyDescriptor {
    pub family: CatalogFamily,
    /// Dynkin type, e.g. `"A4"`.
    pub root_type: String,
    pub name: String,
    pub params: Vec<i64>,
    pub dim: i64,
    /// Fano index; two entries for Picard rank two.
    pub index: Vec<i64>,
    pub dim_gamma2: Option<i64>,
    /// `Y₂(X)` label, when listed.
    pub y2: Option<String>,
    pub fiber: Option<FiberVariety>,
    pub adjoint: bool,
    /// `d_X(2) = 1`, which happens exactly for projective spaces.
    pub projective: bool,
    /// Whether `Q_X` is positive definite.
    pub qx_positive_definite: Option<bool>,
    /// Largest codimension `k` of a general linear section for which the
    /// positivity result applies.
    pub section_codim_bound: Option<i64>,
}

impl VarietyDescriptor {
    pub fn c1(&self) -> i64 {
        self.index[0]
    }

    fn comin(
        root_type: String,
        name: String,
        params: Vec<i64>,
        dim: i64,
        c1: i64,
        g2: i64,
    ) -> Self {
        Self {
            family: CatalogFamily::Cominuscule,
            root_type,
            name,
            params,
            dim,
            index: vec![c1],
            dim_gamma2: Some(g2),
            y2: None,
            fiber: None,
            adjoint: false,
            projective: false,
            qx_positive_definite: None,
            section_codim_bound: None,
        }
    }

    fn adj(root_type: String, name: String, params: Vec<i64>, dim: i64, index: Vec<i64>) -> Self {
        Self {
            family: CatalogFamily::Adjoint,
            root_type,
            name,
            params,
            dim,
            index,
            dim_gamma2: None,
            y2: None,
            fiber: None,
            adjoint: true,
            projective: false,
            qx_positive_definite: Some(true),
            section_codim_bound: None,
        }
    }
}

/// Largest parameter used when instantiating the infinite families.
const MAX_PARAM: i64 = 10;

/// Cominuscule homogeneous spaces, with the `Y₂(X)` / `F` data where listed.
pub fn cominuscule_catalog() -> Vec<VarietyDescriptor> {
    let mut out = Vec::new();
    for n in 2..=MAX_PARAM {
        for k in 1..n {
            let mut v = VarietyDescriptor::comin(
                format!("A{}", n - 1),
                format!("Gr({k},{n})"),
                vec![k, n],
                k * (n - k),
                n,
                4,
            );
            v.projective = k == 1 || k == n - 1;
            v.qx_positive_definite = Some(k <= 2 || k >= n - 2);
            if v.projective {
                v.section_codim_bound = Some(n - 1);
            }
            if k == 2 && n >= 4 {
                v.y2 = Some(format!("Gr(4,{n})"));
                v.fiber = Some(FiberVariety::Grassmannian(2, n - 2));
                v.section_codim_bound = Some(3);
            }
            out.push(v);
        }
    }
    for n in 2..=MAX_PARAM {
        let m = 2 * n - 1;
        let mut v = VarietyDescriptor::comin(format!("B{n}"), format!("Q{m}"), vec![m], m, m, m);
        quadric_extras(&mut v, m);
        out.push(v);
    }
    for n in 2..=MAX_PARAM {
        let mut v = VarietyDescriptor::comin(
            format!("C{n}"),
            format!("LG({n},{})", 2 * n),
            vec![n],
            n * (n + 1) / 2,
            n + 1,
            3,
        );
        v.y2 = Some(format!("IG({},{})", n - 2, 2 * n));
        v.fiber = Some(FiberVariety::Grassmannian(2, n));
        v.qx_positive_definite = Some(n <= 4);
        if n == 3 {
            v.section_codim_bound = Some(1);
        }
        out.push(v);
    }
    for n in 4..=MAX_PARAM {
        let m = 2 * n - 2;
        let mut v = VarietyDescriptor::comin(format!("D{n}"), format!("Q{m}"), vec![m], m, m, m);
        quadric_extras(&mut v, m);
        out.push(v);
    }
    for n in 4..=MAX_PARAM {
        let mut v = VarietyDescriptor::comin(
            format!("D{n}"),
            format!("OG({n},{})", 2 * n),
            vec![n],
            n * (n - 1) / 2,
            2 * n - 2,
            6,
        );
        v.y2 = Some(format!("OG({},{})", n - 4, 2 * n));
        v.fiber = Some(FiberVariety::Grassmannian(4, n));
        v.qx_positive_definite = Some(n <= 6);
        v.section_codim_bound = match n {
            5 => Some(5),
            6 => Some(4),
            _ => None,
        };
        out.push(v);
    }
    let mut op2 = VarietyDescriptor::comin("E6".into(), "OP2".into(), vec![], 16, 12, 8);
    op2.y2 = Some("E6/P1".into());
    op2.fiber = Some(FiberVariety::Quadric(8));
    op2.qx_positive_definite = Some(true);
    op2.section_codim_bound = Some(7);
    out.push(op2);
    let mut e7 = VarietyDescriptor::comin("E7".into(), "E7/P7".into(), vec![], 27, 18, 10);
    e7.y2 = Some("E7/P1".into());
    e7.fiber = Some(FiberVariety::E6P1);
    e7.qx_positive_definite = Some(true);
    e7.section_codim_bound = Some(8);
    out.push(e7);
    out
}

fn quadric_extras(v: &mut VarietyDescriptor, m: i64) {
    v.y2 = Some("pt".into());
    v.fiber = Some(FiberVariety::Point);
    v.qx_positive_definite = Some(true);
    v.section_codim_bound = Some(m);
}

/// Adjoint varieties.
pub fn adjoint_catalog() -> Vec<VarietyDescriptor> {
    let mut out = Vec::new();
    for n in 2..=MAX_PARAM {
        out.push(VarietyDescriptor::adj(
            format!("A{n}"),
            format!("Fl(1,{n};{})", n + 1),
            vec![n],
            2 * n - 1,
            vec![n, n],
        ));
    }
    for n in 3..=MAX_PARAM {
        out.push(VarietyDescriptor::adj(
            format!("B{n}"),
            format!("OG(2,{})", 2 * n + 1),
            vec![n],
            4 * n - 5,
            vec![2 * n - 2],
        ));
    }
    for n in 2..=MAX_PARAM {
        let mut v = VarietyDescriptor::adj(
            format!("C{n}"),
            format!("P^{}", 2 * n - 1),
            vec![n],
            2 * n - 1,
            vec![2 * n],
        );
        v.projective = true;
        out.push(v);
    }
    for n in 4..=MAX_PARAM {
        out.push(VarietyDescriptor::adj(
            format!("D{n}"),
            format!("OG(2,{})", 2 * n),
            vec![n],
            4 * n - 7,
            vec![2 * n - 3],
        ));
    }
    for (t, name, dim, c1) in [
        ("E6", "E6/P2", 21, 11),
        ("E7", "E7/P1", 33, 17),
        ("E8", "E8/P8", 57, 29),
        ("F4", "F4/P1", 15, 8),
        ("G2", "G2/P1", 5, 3),
    ] {
        out.push(VarietyDescriptor::adj(
            t.into(),
            name.into(),
            vec![],
            dim,
            vec![c1],
        ));
    }
    out
}

/// One line of [`fiber_dimension_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberCheck {
    pub variety: String,
    pub fiber: FiberVariety,
    pub dim_fiber: i64,
    /// `2(c₁ − dim Γ₂)`.
    pub expected: i64,
}

impl FiberCheck {
    pub fn holds(&self) -> bool {
        self.dim_fiber == self.expected
    }
}

/// `dim F = 2(c₁(X) − dim Γ₂)` for every catalog row with a listed fiber.
pub fn fiber_dimension_check() -> Vec<FiberCheck> {
    cominuscule_catalog()
        .into_iter()
        .filter_map(|v| {
            let fiber = v.fiber?;
            Some(FiberCheck {
                expected: 2 * (v.c1() - v.dim_gamma2?),
                dim_fiber: fiber.dim(),
                variety: v.name,
                fiber,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fiber_identity_holds() {
        let c = fiber_dimension_check();
        assert!(c.len() > 20);
        for r in c {
            assert!(r.holds(), "{r:?}");
        }
    }

    #[test]
    fn adjoint_dimension_identity() {
        for v in adjoint_catalog() {
            let holds = v.dim == 2 * v.c1() - 1;
            assert_eq!(holds, !v.root_type.starts_with('C'), "{}", v.name);
        }
    }

    #[test]
    fn table_rows() {
        let c = cominuscule_catalog();
        let e7 = c.iter().find(|v| v.name == "E7/P7").unwrap();
        assert_eq!((e7.dim, e7.c1(), e7.dim_gamma2), (27, 18, Some(10)));
        let g = c.iter().find(|v| v.name == "Gr(3,7)").unwrap();
        assert_eq!((g.dim, g.c1(), g.dim_gamma2), (12, 7, Some(4)));
        let f4 = adjoint_catalog()
            .into_iter()
            .find(|v| v.name == "F4/P1")
            .unwrap();
        assert_eq!((f4.dim, f4.c1()), (15, 8));
    }
}
