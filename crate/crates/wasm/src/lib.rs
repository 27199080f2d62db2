//! Browser demo bindings: triangle explorer, identity checker, and
//! partition enumerator over the exact engine. Every function returns a
//! JSON string (or plain text for the enumerator) so the page needs no
//! marshalling beyond `JSON.parse`.

use std::collections::BTreeMap;

use serde_json::json;
use wasm_bindgen::prelude::*;

use pw_core::combinatorics::WeightFamily;
use pw_core::identities::{check, registry};
use pw_core::partitions::{enumerate, weight};
use pw_core::ring::{is_integer, rat_to_i64, Poly};
use pw_core::singleton::build_triangle;

fn family_from(name: &str, budget: usize) -> Result<WeightFamily, String> {
    match name {
        "symbolic" => Ok(WeightFamily::symbolic_with_budget(budget)),
        "permutation" => Ok(WeightFamily::Permutation),
        "involution" => Ok(WeightFamily::Involution),
        "forest" => Ok(WeightFamily::Forest),
        _ => Err(format!("unknown family {name:?}")),
    }
}

fn error_json(msg: &str) -> String {
    json!({ "error": msg }).to_string()
}

fn cell_json(p: &Poly) -> serde_json::Value {
    if let Some(r) = p.as_rational() {
        if is_integer(&r) {
            if let Some(v) = rat_to_i64(&r) {
                return json!(v);
            }
        }
    }
    json!(p.to_string())
}

/// The triangle A(n, k) for a family, as
/// `{"family": ..., "nmax": ..., "rows": [[...], ...]}`.
#[wasm_bindgen]
pub fn triangle_json(family: &str, nmax: usize) -> String {
    if nmax > 30 {
        return error_json("nmax is capped at 30 in the demo");
    }
    let fam = match family_from(family, nmax + 1) {
        Ok(f) => f,
        Err(e) => return error_json(&e),
    };
    match build_triangle(&fam, nmax) {
        Ok(tri) => {
            let rows: Vec<serde_json::Value> = (0..=nmax)
                .map(|n| {
                    serde_json::Value::Array(
                        (0..=n).map(|k| cell_json(tri.entry(n, k).unwrap())).collect(),
                    )
                })
                .collect();
            json!({ "family": fam.label(), "nmax": nmax, "rows": rows }).to_string()
        }
        Err(e) => error_json(&e.to_string()),
    }
}

/// The identity catalogue:
/// `[{"id": ..., "reference": ..., "params": ["n", "m"]}, ...]`.
#[wasm_bindgen]
pub fn identity_list() -> String {
    let records: Vec<serde_json::Value> = registry()
        .records()
        .iter()
        .map(|r| {
            json!({
                "id": r.id,
                "reference": r.reference,
                "params": r.params.iter().map(|p| p.name).collect::<Vec<_>>(),
            })
        })
        .collect();
    serde_json::to_string(&records).expect("catalogue serializes")
}

/// Check one identity; `n`, `m`, `k` are read only for the parameters the
/// identity declares. Returns the check report, or `{"error": ...}`.
#[wasm_bindgen]
pub fn check_identity(id: &str, n: i64, m: i64, k: i64) -> String {
    let rec = match registry().get(id) {
        Ok(r) => r,
        Err(e) => return error_json(&e.to_string()),
    };
    let mut bindings = BTreeMap::new();
    for p in rec.params {
        let v = match p.name {
            "n" => n,
            "m" => m,
            "k" => k,
            _ => 0,
        };
        bindings.insert(p.name.to_string(), v);
    }
    match check(id, &bindings) {
        Ok(report) => serde_json::to_string(&report).expect("report serializes"),
        Err(e) => error_json(&e.to_string()),
    }
}

/// All partitions of {1..n} with weights, one `blocks<TAB>weight` line per
/// partition. The demo keeps n small; Bell(9) = 21147 lines already.
#[wasm_bindgen]
pub fn enumerate_partitions(family: &str, n: usize) -> String {
    let fam = match family_from(family, n.max(1)) {
        Ok(f) => f,
        Err(e) => return error_json(&e),
    };
    let parts = match enumerate(n, 9) {
        Ok(iter) => iter,
        Err(e) => return error_json(&e.to_string()),
    };
    let mut lines = Vec::new();
    for p in parts {
        match weight(&p, &fam) {
            Ok(w) => lines.push(format!("{p}\t{w}")),
            Err(e) => return error_json(&e.to_string()),
        }
    }
    lines.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_json_shape() {
        let v: serde_json::Value =
            serde_json::from_str(&triangle_json("permutation", 6)).unwrap();
        assert_eq!(v["rows"][6][0], 265);
        let err: serde_json::Value = serde_json::from_str(&triangle_json("bogus", 3)).unwrap();
        assert!(err["error"].is_string());
    }

    #[test]
    fn identity_catalogue_and_check() {
        let list: serde_json::Value = serde_json::from_str(&identity_list()).unwrap();
        assert_eq!(list.as_array().unwrap().len(), 52);
        let report: serde_json::Value =
            serde_json::from_str(&check_identity("2.4", 2, 1, 1)).unwrap();
        assert_eq!(report["status"], "pass");
    }

    #[test]
    fn enumerator_output() {
        let text = enumerate_partitions("symbolic", 3);
        assert_eq!(text.lines().count(), 5);
        let err: serde_json::Value =
            serde_json::from_str(&enumerate_partitions("symbolic", 10)).unwrap();
        assert!(err["error"].is_string());
    }
}
