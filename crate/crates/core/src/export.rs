//! JSON, CSV and text renderings of computed objects.

use serde::Serialize;
use serde_json::{json, Value};

use crate::affine::{format_word, AffineWeylGroup, GroupElement};
use crate::error::{Error, Result};
use crate::regions::{DominantIdealRegion, RegionEnumeration};
use crate::root_system::RootSystem;
use crate::small_low::{small_inversion_set, SmallRootTable};

pub fn roots_json(sys: &RootSystem) -> Value {
    let roots: Vec<Value> = sys
        .positive_roots()
        .iter()
        .enumerate()
        .map(|(i, r)| json!({ "index": i, "coords": r.0, "height": r.height(), "name": r.to_string() }))
        .collect();
    let subsystems: Vec<Value> = sys
        .rank2_subsystems()
        .iter()
        .map(|p| json!({ "kind": p.kind.to_string(), "roots": p.roots }))
        .collect();
    json!({
        "type": sys.cartan_type().to_string(),
        "rank": sys.rank(),
        "cartan_matrix": sys.cartan_matrix(),
        "coxeter_number": sys.coxeter_number(),
        "exponents": sys.exponents(),
        "highest_root": sys.highest_root().0,
        "positive_roots": roots,
        "rank2_subsystems": subsystems,
    })
}

pub fn roots_text(sys: &RootSystem) -> String {
    let mut out = format!(
        "type {}  rank {}  h = {}  exponents {:?}\n",
        sys.cartan_type(),
        sys.rank(),
        sys.coxeter_number(),
        sys.exponents()
    );
    for (i, r) in sys.positive_roots().iter().enumerate() {
        out.push_str(&format!("{i:>4}  {:<24} height {}\n", r.to_string(), r.height()));
    }
    for p in sys.rank2_subsystems() {
        out.push_str(&format!("{} subsystem {:?}\n", p.kind, p.roots));
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct ElementRow {
    pub word: String,
    pub length: usize,
    pub shi_vector: Vec<i64>,
    pub small_inversions: Vec<usize>,
}

pub fn element_rows(group: &AffineWeylGroup, elements: &[GroupElement]) -> Vec<ElementRow> {
    let table = SmallRootTable::new(group);
    elements
        .iter()
        .map(|w| {
            let word = group.word_from_element(w);
            ElementRow {
                length: word.len(),
                word: format_word(&word),
                shi_vector: group.shi_vector(w),
                small_inversions: small_inversion_set(group, &table, w).iter().collect(),
            }
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct IdealRow {
    pub ideal: Vec<usize>,
    pub minimal: Vec<usize>,
    pub sign_type: String,
    pub word: String,
    pub length: usize,
}

pub fn ideal_rows(dominant: &[DominantIdealRegion]) -> Vec<IdealRow> {
    dominant
        .iter()
        .map(|d| IdealRow {
            ideal: d.ideal.members.clone(),
            minimal: d.ideal.minimal.clone(),
            sign_type: d.sign_type.to_string(),
            word: format_word(&d.word),
            length: d.word.len(),
        })
        .collect()
}

/// Serializes rows as CSV with a header line.
pub fn to_csv<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| Error::Parse(format!("csv: {e}")))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(format!("csv: {e}")))
}

pub fn regions_csv(regions: &RegionEnumeration) -> Result<String> {
    to_csv(&regions.rows())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regions::{regions_for, DEFAULT_BUDGET};

    #[test]
    fn csv_has_one_row_per_region() {
        let r = regions_for("A2", DEFAULT_BUDGET).unwrap();
        let text = regions_csv(&r).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "sign_type,separation,descent_roots,minimal_word,minimal_length,dominant"
        );
        assert_eq!(lines.count(), 16);
        assert!(text.contains("000,{},{},e,0,true"));
    }

    #[test]
    fn roots_json_shape() {
        let sys = RootSystem::new("B2".parse().unwrap());
        let v = roots_json(&sys);
        assert_eq!(v["positive_roots"].as_array().unwrap().len(), 4);
        assert_eq!(v["coxeter_number"], 4);
        assert_eq!(v["rank2_subsystems"][0]["kind"], "B2");
    }

    #[test]
    fn element_rows_for_generators() {
        let g = AffineWeylGroup::new("A2".parse().unwrap());
        let rows = element_rows(&g, g.generators());
        assert_eq!(rows[1].word, "1");
        assert_eq!(rows[1].shi_vector, vec![-1, 0, 0]);
        assert_eq!(rows[1].small_inversions, vec![0]);
        assert_eq!(rows[0].small_inversions, vec![5]);
    }
}
