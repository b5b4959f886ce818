//! File formats and report serialization. Scalars carry their numerators and
//! denominators as decimal strings so values never clip at machine width;
//! tensors and cubic matrices are stored sparsely with one-based indices.

use std::collections::HashSet;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::classify::{ClassReport, IsoOutcome};
use crate::constructions::CubicMatrix;
use crate::error::{Error, Result};
use crate::scalar::{EisScalar, Rational};
use crate::tensor::{CheckReport, StructureTensor};
use crate::EisMatrix;

impl Serialize for EisScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pair = |r: &Rational| [r.numer().to_string(), r.denom().to_string()];
        let mut st = s.serialize_struct("EisScalar", 2)?;
        st.serialize_field("a", &pair(self.a()))?;
        st.serialize_field("b", &pair(self.b()))?;
        st.end()
    }
}

fn parse_rational(pair: &[String; 2]) -> Result<Rational> {
    let num = BigInt::from_str(&pair[0])
        .map_err(|e| Error::Parse(format!("bad integer {:?}: {e}", pair[0])))?;
    let den = BigInt::from_str(&pair[1])
        .map_err(|e| Error::Parse(format!("bad integer {:?}: {e}", pair[1])))?;
    if den == BigInt::from(0) {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(Rational::new(num, den))
}

impl<'de> Deserialize<'de> for EisScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            a: [String; 2],
            b: [String; 2],
        }
        let repr = Repr::deserialize(d)?;
        let a = parse_rational(&repr.a).map_err(D::Error::custom)?;
        let b = parse_rational(&repr.b).map_err(D::Error::custom)?;
        Ok(EisScalar::new(a, b))
    }
}

#[derive(Serialize, Deserialize)]
struct TensorEntry {
    m: usize,
    i: usize,
    k: usize,
    l: usize,
    value: EisScalar,
}

#[derive(Serialize, Deserialize)]
struct TensorFile {
    dim: usize,
    entries: Vec<TensorEntry>,
}

/// Largest tensor dimension the dense storage will accept from a file.
/// Matches the largest basis the builders produce (order-3 cubic, 27 units).
pub const MAX_TENSOR_DIM: usize = 27;

pub fn tensor_to_string(c: &StructureTensor) -> String {
    let entries = c
        .nonzero()
        .map(|((m, i, k, l), v)| TensorEntry {
            m: m + 1,
            i: i + 1,
            k: k + 1,
            l: l + 1,
            value: v.clone(),
        })
        .collect();
    let file = TensorFile {
        dim: c.dim(),
        entries,
    };
    serde_json::to_string_pretty(&file).expect("tensor serialization")
}

pub fn tensor_from_str(text: &str) -> Result<StructureTensor> {
    let file: TensorFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if file.dim < 1 || file.dim > MAX_TENSOR_DIM {
        return Err(Error::Parse(format!(
            "tensor dimension {} outside 1..={MAX_TENSOR_DIM}",
            file.dim
        )));
    }
    let n = file.dim;
    let mut c = StructureTensor::zero(n);
    let mut seen = HashSet::new();
    for e in &file.entries {
        for (name, idx) in [("m", e.m), ("i", e.i), ("k", e.k), ("l", e.l)] {
            if idx < 1 || idx > n {
                return Err(Error::Parse(format!(
                    "index {name}={idx} outside 1..={n}"
                )));
            }
        }
        if !seen.insert((e.m, e.i, e.k, e.l)) {
            return Err(Error::Parse(format!(
                "duplicate entry ({},{},{},{})",
                e.m, e.i, e.k, e.l
            )));
        }
        c.set(e.m - 1, e.i - 1, e.k - 1, e.l - 1, e.value.clone());
    }
    Ok(c)
}

#[derive(Serialize, Deserialize)]
struct CubicFile {
    n: usize,
    entries: Vec<(usize, usize, usize, EisScalar)>,
}

pub fn cubic_to_string(x: &CubicMatrix) -> String {
    let n = x.order();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = x.get(i, j, k);
                if !v.is_zero() {
                    entries.push((i + 1, j + 1, k + 1, v.clone()));
                }
            }
        }
    }
    serde_json::to_string_pretty(&CubicFile { n, entries }).expect("cubic serialization")
}

pub fn cubic_from_str(text: &str) -> Result<CubicMatrix> {
    let file: CubicFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if file.n < 1 || file.n > MAX_TENSOR_DIM {
        return Err(Error::Parse(format!(
            "cubic order {} outside 1..={MAX_TENSOR_DIM}",
            file.n
        )));
    }
    let mut seen = HashSet::new();
    let mut shifted = Vec::with_capacity(file.entries.len());
    for (i, j, k, v) in file.entries {
        for (name, idx) in [("i", i), ("j", j), ("k", k)] {
            if idx < 1 || idx > file.n {
                return Err(Error::Parse(format!(
                    "index {name}={idx} outside 1..={}",
                    file.n
                )));
            }
        }
        if !seen.insert((i, j, k)) {
            return Err(Error::Parse(format!("duplicate entry ({i},{j},{k})")));
        }
        shifted.push((i - 1, j - 1, k - 1, v));
    }
    CubicMatrix::from_entries(file.n, &shifted)
}

#[derive(Serialize, Deserialize)]
struct RectFile {
    rows: usize,
    cols: usize,
    data: Vec<Vec<EisScalar>>,
}

pub fn rect_to_string(m: &EisMatrix) -> String {
    serde_json::to_string_pretty(&rect_file(m)).expect("matrix serialization")
}

fn rect_file(m: &EisMatrix) -> RectFile {
    RectFile {
        rows: m.rows(),
        cols: m.cols(),
        data: (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| m[(i, j)].clone()).collect())
            .collect(),
    }
}

pub fn rect_from_str(text: &str) -> Result<EisMatrix> {
    let file: RectFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if file.data.len() != file.rows || file.data.iter().any(|r| r.len() != file.cols) {
        return Err(Error::Parse(format!(
            "data block does not fill {}x{}",
            file.rows, file.cols
        )));
    }
    if file.rows == 0 || file.cols == 0 {
        return Err(Error::Parse("matrix must be nonempty".into()));
    }
    EisMatrix::from_rows(file.data)
}

pub fn rect_to_value(m: &EisMatrix) -> Value {
    serde_json::to_value(rect_file(m)).expect("matrix serialization")
}

pub fn class_report_to_value(report: &ClassReport) -> Value {
    json!({
        "label": report.label.to_string(),
        "invariants": {
            "is_zero": report.invariants.is_zero,
            "in_W": report.invariants.in_w,
            "disc_zero": report.invariants.disc_zero,
        },
        "witness": report.witness.as_ref().map(rect_to_value),
    })
}

pub fn iso_outcome_to_value(outcome: &IsoOutcome) -> Value {
    match outcome {
        IsoOutcome::Found(a) => json!({ "witness": rect_to_value(a), "reason": Value::Null }),
        IsoOutcome::NoWitness { reason } => {
            json!({ "witness": Value::Null, "reason": reason })
        }
    }
}

pub fn check_report_to_value(report: &CheckReport) -> Value {
    json!({
        "name": report.name,
        "passed": report.passed(),
        "checked": report.checked,
        "violation_count": report.violation_count,
        "truncated": report.truncated(),
        "violations": report
            .violations
            .iter()
            .map(|v| json!({ "indices": v.indices, "detail": v.detail }))
            .collect::<Vec<_>>(),
    })
}
