//! Text rendering of elements, sets, and tables.
//!
//! Coefficients follow the field: canonical residues `0..p-1` in
//! characteristic p (`x1 + 2 x4`), signed integers or fractions in
//! characteristic 0 (`x1 - x4`, `1/2 x2`). Terms are emitted in basis
//! order with unit coefficients suppressed.

use liealg::{AlgebraElement, CoordVector, LieAlgebra, Scalar};
use num::One;

/// `x1 + 2 x4` style rendering of a coordinate vector.
pub fn element(coords: &CoordVector) -> String {
    if coords.characteristic().is_zero() {
        signed_element(coords)
    } else {
        residue_element(coords)
    }
}

fn residue_element(coords: &CoordVector) -> String {
    let mut out = String::new();
    for (i, s) in coords.iter().enumerate() {
        let r = s.residue().expect("residue field");
        if r == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push_str(" + ");
        }
        if r != 1 {
            out.push_str(&format!("{r} "));
        }
        out.push_str(&format!("x{}", i + 1));
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

fn signed_element(coords: &CoordVector) -> String {
    let mut out = String::new();
    for (i, s) in coords.iter().enumerate() {
        if s.is_zero() {
            continue;
        }
        let q = s.rational().expect("characteristic 0");
        let negative = q.numer().sign() == num::bigint::Sign::Minus;
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let numer_abs = q.numer().magnitude();
        if !(numer_abs.is_one() && q.denom().is_one()) {
            if q.denom().is_one() {
                out.push_str(&format!("{numer_abs} "));
            } else {
                out.push_str(&format!("{numer_abs}/{} ", q.denom()));
            }
        }
        out.push_str(&format!("x{}", i + 1));
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

/// `{a, b, c}` with elements rendered in order; the empty set is `{}`.
pub fn set(elements: &[AlgebraElement]) -> String {
    let inner: Vec<String> = elements.iter().map(|e| element(e.coords())).collect();
    format!("{{{}}}", inner.join(", "))
}

/// The n-by-n bracket table as an aligned grid.
pub fn table(l: &LieAlgebra) -> String {
    let n = l.dim();
    let cells: Vec<Vec<String>> = (0..n)
        .map(|i| (0..n).map(|j| element(l.basis_bracket(i, j))).collect())
        .collect();
    let widths: Vec<usize> = (0..n)
        .map(|j| cells.iter().map(|row| row[j].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(j, cell)| format!("{cell:<width$}", width = widths[j]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// JSON encoding of one scalar: a plain number for residues, a `"num/den"`
/// string in characteristic 0.
pub fn scalar_json(s: &Scalar) -> serde_json::Value {
    match s.residue() {
        Some(r) => serde_json::Value::from(r),
        None => {
            let q = s.rational().expect("residue or rational");
            serde_json::Value::from(format!("{}/{}", q.numer(), q.denom()))
        }
    }
}

pub fn coords_json(v: &CoordVector) -> serde_json::Value {
    serde_json::Value::from(v.iter().map(scalar_json).collect::<Vec<_>>())
}
