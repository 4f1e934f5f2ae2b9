//! Field list behind `analyze`; the text and JSON renderings share it.

use num_traits::Zero;
use qcoh::error::Result;
use qcoh::rings::RingTable;
use qcoh::Q;
use serde_json::{json, Value};

#[derive(Clone, Debug)]
pub struct Field {
    pub key: &'static str,
    pub value: Value,
}

impl Field {
    fn new(key: &'static str, value: Value) -> Self {
        Self { key, value }
    }

    /// Strings bare, everything else as compact JSON.
    pub fn render(&self) -> String {
        match &self.value {
            Value::String(s) => s.clone(),
            v => v.to_string(),
        }
    }
}

/// Linear combination of basis labels.
fn combination(labels: &[String], v: &[Q]) -> String {
    let mut s = String::new();
    for (c, l) in v.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Q::zero();
        let a = if neg { -c } else { c.clone() };
        if s.is_empty() {
            s.push_str(if neg { "-" } else { "" });
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let l = if l.contains(['+', '-']) {
            format!("[{l}]")
        } else {
            l.clone()
        };
        if a == Q::from_integer(1.into()) {
            s.push_str(&l);
        } else {
            s.push_str(&format!("{a}*{l}"));
        }
    }
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

/// `Y` for the coadjoint varieties, `X` otherwise.
pub fn form_letter(name: &str) -> char {
    if name.starts_with("IG(2,") || name == "F4/P4" {
        'Y'
    } else {
        'X'
    }
}

pub fn analyze_fields(t: &RingTable) -> Result<Vec<Field>> {
    let r = &t.ring;
    let a = r.specialize()?;
    let labels = a.labels().to_vec();
    let rad = a.radical()?;
    let rep = a.theorem1_report()?;
    let g = &rep.gram;
    let letter = form_letter(r.name());

    let graded: serde_json::Map<String, Value> = a
        .graded_dims()
        .into_iter()
        .map(|(k, v)| (k.to_string(), json!(v)))
        .collect();
    let radical: Vec<Value> = rad
        .basis
        .iter()
        .map(|v| json!(combination(&labels, v)))
        .collect();
    let orders: Vec<Value> = rad.witnesses.iter().map(|(_, k)| json!(k)).collect();
    let gram: Vec<Value> = g
        .gram
        .to_rows()
        .iter()
        .map(|row| json!(row.iter().map(|x| x.to_string()).collect::<Vec<_>>()))
        .collect();
    let a0: Vec<Value> = g.a0_basis.iter().map(|&i| json!(labels[i])).collect();
    let clause3 = match &rep.clause3 {
        None => Value::Null,
        Some(c) => json!({
            "holds": c.holds(),
            "radical_in_kernel": c.radical_in_kernel,
            "image_kernel_direct_sum": c.image_kernel_direct_sum,
            "h_subalgebra_semisimple": c.h_subalgebra_semisimple,
            "p": c.p.as_ref().map(|p| p.to_string()),
            "minpoly_divides_xp": c.minpoly_divides_xp,
        }),
    };

    Ok(vec![
        Field::new("name", json!(r.name())),
        Field::new("provenance", json!(t.provenance.as_str())),
        Field::new("dim", json!(r.dim())),
        Field::new("c1", json!(r.c1())),
        Field::new("graded dims", Value::Object(graded)),
        Field::new("radical dim", json!(rad.dim())),
        Field::new("radical basis", Value::Array(radical)),
        Field::new("radical nilpotency orders", Value::Array(orders)),
        Field::new("semisimple", json!(rad.is_semisimple)),
        Field::new("form", json!(format!("Q_{letter}"))),
        Field::new("A0 basis", Value::Array(a0)),
        Field::new("gram", Value::Array(gram)),
        Field::new("positive definite", json!(g.positive_definite)),
        Field::new("failing minor", json!(g.failing_minor)),
        Field::new("ldlt positive definite", json!(g.ldlt_positive_definite)),
        Field::new("E_h kernel dim", json!(rep.kernel_dim)),
        Field::new("E_h image dim", json!(rep.image_dim)),
        Field::new("E_h minimal polynomial", json!(rep.min_poly.to_string())),
        Field::new("clause 1", json!(rep.clause1)),
        Field::new("clause 2 fires", json!(rep.clause2_fires)),
        Field::new("clause 2", json!(rep.clause2)),
        Field::new("A0 splits", json!(rep.a0_splits)),
        Field::new("clause 3", clause3),
    ])
}

pub(crate) fn summary_line(t: &RingTable, fields: &[Field]) -> String {
    let get = |k: &str| {
        fields
            .iter()
            .find(|f| f.key == k)
            .map(Field::render)
            .unwrap_or_default()
    };
    format!(
        "radical dim: {}; semisimple: {}; Q_{} positive definite: {}",
        get("radical dim"),
        get("semisimple"),
        form_letter(t.ring.name()),
        get("positive definite"),
    )
}
