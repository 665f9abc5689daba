//! Readers for presentation, matrix and witness files.

use std::fs;
use std::path::Path;

use gtg_core::algebra::IntegerMatrix;
use gtg_core::certify::F2Witness;
use gtg_core::groups::{CosetTable, Presentation};
use serde::Deserialize;

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {}", path.display(), e))
}

/// `gens: x, y; rels: x^3, y^4, (x*y)^2`. Lines starting with `#` are
/// ignored.
pub fn parse_presentation(text: &str) -> Result<Presentation, String> {
    let body: Vec<&str> = text.lines().filter(|l| !l.trim_start().starts_with('#')).collect();
    body.join(" ").trim().parse().map_err(|e| format!("presentation: {}", e))
}

pub fn read_presentation(path: &Path) -> Result<Presentation, String> {
    parse_presentation(&read(path)?).map_err(|e| format!("{}: {}", path.display(), e))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum MatrixFile {
    Rows(Vec<Vec<i64>>),
    Sized { cols: usize, rows: Vec<Vec<i64>> },
}

/// `[[1, 2], [3, 4]]` or `{"cols": 2, "rows": [[1, 2], [3, 4]]}`; the
/// second form allows zero rows.
pub fn parse_matrix(text: &str) -> Result<IntegerMatrix, String> {
    let m: MatrixFile = serde_json::from_str(text).map_err(|e| format!("matrix: {}", e))?;
    let (cols, rows) = match m {
        MatrixFile::Rows(rows) => {
            let cols = rows.first().map(Vec::len).ok_or("matrix: no rows; use {\"cols\": n, \"rows\": []}")?;
            (cols, rows)
        }
        MatrixFile::Sized { cols, rows } => (cols, rows),
    };
    if let Some(i) = rows.iter().position(|r| r.len() != cols) {
        return Err(format!("matrix: row {} has {} entries, expected {}", i, rows[i].len(), cols));
    }
    Ok(IntegerMatrix::from_rows(cols, &rows))
}

pub fn read_matrix(path: &Path) -> Result<IntegerMatrix, String> {
    parse_matrix(&read(path)?).map_err(|e| format!("{}: {}", path.display(), e))
}

#[derive(Deserialize)]
struct WitnessFile {
    subgroup: Vec<Vec<usize>>,
    images: Vec<String>,
}

/// `{"subgroup": <coset table rows over x, y>, "images": ["a*b^-1", ...]}`,
/// one image in F₂ = ⟨a, b⟩ per Reidemeister–Schreier generator.
pub fn parse_witness(text: &str) -> Result<F2Witness, String> {
    let f: WitnessFile = serde_json::from_str(text).map_err(|e| format!("witness: {}", e))?;
    let subgroup = CosetTable::from_rows(2, f.subgroup).map_err(|e| format!("witness: {}", e))?;
    let f2 = Presentation::new(vec!["a".into(), "b".into()], Vec::new());
    let images = f
        .images
        .iter()
        .map(|s| f2.parse_word(s).map_err(|e| format!("witness image {:?}: {}", s, e)))
        .collect::<Result<_, _>>()?;
    Ok(F2Witness { subgroup, images })
}

pub fn read_witness(path: &Path) -> Result<F2Witness, String> {
    parse_witness(&read(path)?).map_err(|e| format!("{}: {}", path.display(), e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use gtg_core::algebra::snf;

    #[test]
    fn matrix_forms() {
        let a = parse_matrix("[[2, 0], [0, 3]]").unwrap();
        let b = parse_matrix(r#"{"cols": 2, "rows": [[2, 0], [0, 3]]}"#).unwrap();
        assert_eq!(snf(&a), snf(&b));
        assert_eq!(snf(&a).torsion, vec![6.into()]);
        let empty = parse_matrix(r#"{"cols": 3, "rows": []}"#).unwrap();
        assert_eq!(snf(&empty).free_rank, 3);
        assert!(parse_matrix("[[1, 2], [3]]").is_err());
        assert!(parse_matrix("[]").is_err());
    }

    #[test]
    fn presentation_with_comments() {
        let p = parse_presentation("# S4\ngens: x, y;\nrels: x^3, y^4, (x*y)^2\n").unwrap();
        assert_eq!(p.ngens(), 2);
        assert_eq!(p.relators().len(), 3);
        assert!(parse_presentation("gens: x; rels: z").is_err());
    }

    #[test]
    fn witness_parsing() {
        let w = parse_witness(r#"{"subgroup": [[0, 0, 0, 0]], "images": ["a", "b*a^-1"]}"#).unwrap();
        assert_eq!(w.subgroup.index(), 1);
        assert_eq!(w.images.len(), 2);
        assert!(parse_witness(r#"{"subgroup": [[1, 0, 0, 0]], "images": []}"#).is_err());
        assert!(parse_witness(r#"{"subgroup": [[0, 0, 0, 0]], "images": ["c"]}"#).is_err());
    }
}
