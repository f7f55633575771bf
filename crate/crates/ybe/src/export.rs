//! Serialization and rendering: JSON schemas for groups, maps,
//! classifications, braces, subgroups and solutions, the text/CSV grid
//! renderers, and the sparse R-matrix coordinate export. Pair indexing is
//! row-major everywhere: the pair (a, b) has index a*n + b.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::brace::{brace_from_tables, BraceError, SkewBrace};
use crate::catalog;
use crate::group::{FiniteGroup, GroupError};
use crate::morphism::{FpfClassification, GroupMap, MapError};
use crate::perm::{PermError, RegularSubgroup};
use crate::ybe::{Provenance, YbeMap, YbeError};

#[derive(Debug, Error)]
pub enum ExportError {
    #[error("unknown element label {0:?}")]
    UnknownLabel(String),
    #[error("malformed payload: {0}")]
    Malformed(&'static str),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Brace(#[from] BraceError),
    #[error(transparent)]
    Subgroup(#[from] PermError),
    #[error(transparent)]
    Solution(#[from] YbeError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub name: String,
    pub order: usize,
    pub identity: usize,
    pub labels: Vec<String>,
    pub generators: Vec<usize>,
    pub cayley: Vec<Vec<usize>>,
}

pub fn group_to_json(group: &FiniteGroup) -> GroupJson {
    GroupJson {
        name: group.name().to_string(),
        order: group.order(),
        identity: group.identity(),
        labels: group.labels().to_vec(),
        generators: group.generators().to_vec(),
        cayley: group.cayley_rows(),
    }
}

pub fn group_from_json(json: &GroupJson) -> Result<Arc<FiniteGroup>, ExportError> {
    let g = FiniteGroup::from_cayley(&json.name, &json.cayley, Some(json.labels.clone()))?;
    let g = g.with_generators(json.generators.clone())?;
    Ok(Arc::new(g))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapJson {
    pub group: String,
    pub images: Vec<usize>,
}

pub fn map_to_json(map: &GroupMap) -> MapJson {
    MapJson {
        group: map.source().name().to_string(),
        images: map.images(),
    }
}

/// Rebuild a map against an explicit carrier (whose name must match).
pub fn map_from_json(json: &MapJson, group: &Arc<FiniteGroup>) -> Result<GroupMap, ExportError> {
    if json.group != group.name() {
        return Err(ExportError::Malformed("map group name does not match carrier"));
    }
    Ok(GroupMap::endomorphism(group, json.images.clone())?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitJson {
    pub representative: MapJson,
    pub members: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationJson {
    pub group: String,
    /// Image vectors of every fixed-point-free map, in enumeration order;
    /// orbit and class membership below refer to positions in this list.
    pub maps: Vec<Vec<usize>>,
    pub orbits: Vec<OrbitJson>,
    pub subgroup_classes: Vec<Vec<usize>>,
}

pub fn classification_to_json(group: &FiniteGroup, class: &FpfClassification) -> ClassificationJson {
    ClassificationJson {
        group: group.name().to_string(),
        maps: class.all_maps.iter().map(|m| m.images()).collect(),
        orbits: class
            .brace_orbits
            .iter()
            .map(|orbit| OrbitJson {
                representative: map_to_json(&class.all_maps[orbit[0]]),
                members: orbit.clone(),
            })
            .collect(),
        subgroup_classes: class.subgroup_classes.clone(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraceJson {
    pub group: String,
    pub psi: Option<Vec<usize>>,
    pub circle: Vec<Vec<usize>>,
    pub bar: Vec<usize>,
}

pub fn brace_to_json(brace: &SkewBrace) -> BraceJson {
    BraceJson {
        group: brace.carrier().name().to_string(),
        psi: brace.source_map().map(|m| m.images()),
        circle: brace.circle_rows(),
        bar: brace.bar_vector(),
    }
}

pub fn brace_from_json(
    json: &BraceJson,
    carrier: &Arc<FiniteGroup>,
) -> Result<SkewBrace, ExportError> {
    if json.group != carrier.name() {
        return Err(ExportError::Malformed("brace group name does not match carrier"));
    }
    let psi = json
        .psi
        .as_ref()
        .map(|images| GroupMap::endomorphism(carrier, images.clone()))
        .transpose()?;
    let brace = brace_from_tables(carrier, &json.circle, psi)?;
    if brace.bar_vector() != json.bar {
        return Err(ExportError::Malformed("bar vector disagrees with circle table"));
    }
    Ok(brace)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupJson {
    pub group: String,
    pub members: Vec<Vec<usize>>,
    pub labels: Vec<usize>,
}

pub fn subgroup_to_json(sub: &RegularSubgroup) -> SubgroupJson {
    SubgroupJson {
        group: sub.group().name().to_string(),
        members: sub.members().to_vec(),
        labels: sub.labels().to_vec(),
    }
}

pub fn subgroup_from_json(
    json: &SubgroupJson,
    group: &Arc<FiniteGroup>,
) -> Result<RegularSubgroup, ExportError> {
    if json.group != group.name() {
        return Err(ExportError::Malformed("subgroup group name does not match carrier"));
    }
    Ok(RegularSubgroup::from_members(
        group.clone(),
        json.members.clone(),
        json.labels.clone(),
    )?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionEntryJson {
    #[serde(rename = "in")]
    pub input: [String; 2],
    pub out: [String; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionJson {
    pub group: String,
    pub psi: Option<Vec<usize>>,
    pub provenance: Provenance,
    pub entries: Vec<SolutionEntryJson>,
}

pub fn solution_to_json(solution: &YbeMap, psi: Option<&GroupMap>) -> SolutionJson {
    let g = solution.group();
    let label = |x: usize| g.label(x).to_string();
    SolutionJson {
        group: g.name().to_string(),
        psi: psi.map(|m| m.images()),
        provenance: solution.provenance(),
        entries: solution
            .entries()
            .into_iter()
            .map(|((a, b), (x, y))| SolutionEntryJson {
                input: [label(a), label(b)],
                out: [label(x), label(y)],
            })
            .collect(),
    }
}

pub fn solution_from_json(
    json: &SolutionJson,
    group: &Arc<FiniteGroup>,
) -> Result<YbeMap, ExportError> {
    if json.group != group.name() {
        return Err(ExportError::Malformed("solution group name does not match carrier"));
    }
    let n = group.order();
    if json.entries.len() != n * n {
        return Err(ExportError::Malformed("entry list does not cover the square"));
    }
    let resolve = |label: &String| {
        group
            .element_by_label(label)
            .ok_or_else(|| ExportError::UnknownLabel(label.clone()))
    };
    let mut table = vec![None; n * n];
    for entry in &json.entries {
        let (a, b) = (resolve(&entry.input[0])?, resolve(&entry.input[1])?);
        let out = (resolve(&entry.out[0])?, resolve(&entry.out[1])?);
        if table[a * n + b].replace(out).is_some() {
            return Err(ExportError::Malformed("duplicate input pair"));
        }
    }
    let table: Vec<(usize, usize)> = table
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or(ExportError::Malformed("missing input pair"))?;
    Ok(YbeMap::from_entries(group, table, json.provenance)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RMatrixJson {
    /// n^2 for a group of order n.
    pub dimension: usize,
    pub basis_convention: String,
    /// (row, col) coordinates of the 1-entries, sorted by row; the column
    /// is the input pair index, the row the output pair index.
    pub entries: Vec<[usize; 2]>,
}

pub const BASIS_CONVENTION: &str = "pair (a,b) -> index a*n + b, row = output pair, col = input pair";

pub fn export_rmatrix(solution: &YbeMap) -> RMatrixJson {
    let n = solution.group().order();
    let mut entries: Vec<[usize; 2]> = solution
        .entries()
        .into_iter()
        .map(|((a, b), (x, y))| [x * n + y, a * n + b])
        .collect();
    entries.sort_unstable();
    RMatrixJson {
        dimension: n * n,
        basis_convention: BASIS_CONVENTION.to_string(),
        entries,
    }
}

pub fn rmatrix_to_solution(
    json: &RMatrixJson,
    group: &Arc<FiniteGroup>,
    provenance: Provenance,
) -> Result<YbeMap, ExportError> {
    let n = group.order();
    if json.dimension != n * n || json.entries.len() != n * n {
        return Err(ExportError::Malformed("dimension does not match the group"));
    }
    let mut table = vec![None; n * n];
    for &[row, col] in &json.entries {
        if row >= n * n || col >= n * n {
            return Err(ExportError::Malformed("coordinate out of range"));
        }
        if table[col].replace((row / n, row % n)).is_some() {
            return Err(ExportError::Malformed("duplicate column"));
        }
    }
    let table: Vec<(usize, usize)> = table
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or(ExportError::Malformed("missing column"))?;
    Ok(YbeMap::from_entries(group, table, provenance)?)
}

/// Fixed-width grid with row/column element labels and "(x,y)" cells,
/// rows and columns in element index order.
pub fn render_table(solution: &YbeMap) -> String {
    let g = solution.group();
    let n = g.order();
    let cell = |a: usize, b: usize| {
        let (x, y) = solution.apply(a, b);
        format!("({},{})", g.label(x), g.label(y))
    };
    let head_width = g.labels().iter().map(|l| l.len()).max().unwrap_or(1).max(1);
    let mut col_width = vec![0usize; n];
    for b in 0..n {
        col_width[b] = g.label(b).len();
        for a in 0..n {
            col_width[b] = col_width[b].max(cell(a, b).len());
        }
    }
    let mut out = String::new();
    out.push_str(&format!("{:head_width$}", "R"));
    for b in 0..n {
        out.push_str(&format!("  {:>width$}", g.label(b), width = col_width[b]));
    }
    out.push('\n');
    for a in 0..n {
        out.push_str(&format!("{:head_width$}", g.label(a)));
        for b in 0..n {
            out.push_str(&format!("  {:>width$}", cell(a, b), width = col_width[b]));
        }
        out.push('\n');
    }
    out
}

fn csv_quote(cell: &str) -> String {
    if cell.contains(',') || cell.contains('"') || cell.contains('\n') {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

/// The same grid as CSV: first column holds the row label, header row the
/// column labels, cells are "(x,y)" pairs (quoted, since they contain commas).
pub fn render_csv(solution: &YbeMap) -> String {
    let g = solution.group();
    let n = g.order();
    let mut out = String::new();
    out.push('R');
    for b in 0..n {
        out.push(',');
        out.push_str(&csv_quote(g.label(b)));
    }
    out.push('\n');
    for a in 0..n {
        out.push_str(&csv_quote(g.label(a)));
        for b in 0..n {
            let (x, y) = solution.apply(a, b);
            out.push(',');
            out.push_str(&csv_quote(&format!("({},{})", g.label(x), g.label(y))));
        }
        out.push('\n');
    }
    out
}

/// Resolve a solution's group by catalog name (for file imports).
pub fn catalog_group(name: &str) -> Result<Arc<FiniteGroup>, ExportError> {
    Ok(catalog::group_by_name(name)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::build_brace;
    use crate::morphism::classify_fpf;
    use crate::perm::regular_subgroup;
    use crate::ybe::{closed_form_r, closed_form_r_prime};

    fn gamma0() -> (Arc<FiniteGroup>, GroupMap) {
        let d4 = catalog::dihedral(4).unwrap();
        let mut img = vec![0usize; 8];
        for i in 0..4 {
            img[i] = d4.pow(5, i as i64);
            img[i + 4] = d4.mul(img[i], 5);
        }
        let psi = GroupMap::endomorphism(&d4, img).unwrap();
        (d4, psi)
    }

    #[test]
    fn swap_matrix_has_the_expected_coordinates() {
        let c2 = catalog::cyclic(2).unwrap();
        let matrix = export_rmatrix(&YbeMap::swap(&c2));
        assert_eq!(matrix.dimension, 4);
        assert_eq!(matrix.entries, vec![[0, 0], [1, 2], [2, 1], [3, 3]]);

        let one = catalog::cyclic(1).unwrap();
        let tiny = export_rmatrix(&YbeMap::swap(&one));
        assert_eq!(tiny.dimension, 1);
        assert_eq!(tiny.entries, vec![[0, 0]]);
    }

    #[test]
    fn rmatrix_round_trip_and_transpose() {
        let (_, psi) = gamma0();
        let r = closed_form_r(&psi).unwrap();
        let rp = closed_form_r_prime(&psi).unwrap();
        let m = export_rmatrix(&r);
        let mp = export_rmatrix(&rp);
        assert_eq!(m.entries.len(), 64);
        let mut transposed: Vec<[usize; 2]> = m.entries.iter().map(|&[r, c]| [c, r]).collect();
        transposed.sort_unstable();
        assert_eq!(mp.entries, transposed);

        let back = rmatrix_to_solution(&m, r.group(), r.provenance()).unwrap();
        assert_eq!(back.entries(), r.entries());
    }

    #[test]
    fn group_json_round_trip() {
        for name in ["D4", "S3", "M7_3"] {
            let g = catalog::group_by_name(name).unwrap();
            let json = group_to_json(&g);
            let text = serde_json::to_string(&json).unwrap();
            let parsed: GroupJson = serde_json::from_str(&text).unwrap();
            let back = group_from_json(&parsed).unwrap();
            assert_eq!(*back, *g, "{name}");
        }
    }

    #[test]
    fn map_and_classification_json() {
        let (d4, psi) = gamma0();
        let json = map_to_json(&psi);
        let back = map_from_json(&json, &d4).unwrap();
        assert_eq!(back.images(), psi.images());

        let class = classify_fpf(&d4).unwrap();
        let cjson = classification_to_json(&d4, &class);
        assert_eq!(cjson.maps.len(), 12);
        assert_eq!(cjson.orbits.len(), class.brace_orbits.len());
        for orbit in &cjson.orbits {
            assert_eq!(
                orbit.representative.images,
                cjson.maps[orbit.members[0]].clone()
            );
        }
        let text = serde_json::to_string_pretty(&cjson).unwrap();
        let parsed: ClassificationJson = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, cjson);
    }

    #[test]
    fn brace_json_round_trip() {
        let (d4, psi) = gamma0();
        let brace = build_brace(&d4, &psi).unwrap();
        let json = brace_to_json(&brace);
        let back = brace_from_json(&json, &d4).unwrap();
        assert_eq!(back, brace);

        let mut bad = json.clone();
        bad.bar[1] = (bad.bar[1] + 1) % 8;
        assert!(brace_from_json(&bad, &d4).is_err());
    }

    #[test]
    fn subgroup_json_round_trip() {
        let (d4, psi) = gamma0();
        let sub = regular_subgroup(&d4, &psi).unwrap();
        let json = subgroup_to_json(&sub);
        let back = subgroup_from_json(&json, &d4).unwrap();
        assert_eq!(back.members(), sub.members());
        assert_eq!(back.labels(), sub.labels());
    }

    #[test]
    fn solution_json_round_trip_uses_labels() {
        let (d4, psi) = gamma0();
        let r = closed_form_r(&psi).unwrap();
        let json = solution_to_json(&r, Some(&psi));
        // R(rs, r^2) = (r^2, rs) shows up in label form.
        let entry = json
            .entries
            .iter()
            .find(|e| e.input == ["rs".to_string(), "r^2".to_string()])
            .unwrap();
        assert_eq!(entry.out, ["r^2".to_string(), "rs".to_string()]);

        let text = serde_json::to_string(&json).unwrap();
        let parsed: SolutionJson = serde_json::from_str(&text).unwrap();
        let back = solution_from_json(&parsed, &d4).unwrap();
        assert_eq!(back.entries(), r.entries());
        assert_eq!(back.provenance(), r.provenance());
    }

    #[test]
    fn renderers_are_stable_and_quote_cells() {
        let (_d4, psi) = gamma0();
        let r = closed_form_r(&psi).unwrap();
        let table = render_table(&r);
        assert_eq!(table, render_table(&r));
        let row = table.lines().nth(6).unwrap(); // header + rows 1..r^3, s; row rs is 6th
        assert!(row.starts_with("rs"));
        assert!(row.contains("(r^2,rs)"));

        let csv = render_csv(&r);
        let cells: Vec<&str> = csv.lines().nth(1).unwrap().split("\",\"").collect();
        assert!(cells.len() > 2);
        assert!(csv.contains("\"(r^2,rs)\""));
        assert_eq!(csv, render_csv(&r));
    }

    #[test]
    fn malformed_imports_are_rejected() {
        let (d4, _) = gamma0();
        let c2 = catalog::cyclic(2).unwrap();
        let json = solution_to_json(&YbeMap::swap(&c2), None);
        assert!(matches!(
            solution_from_json(&json, &d4),
            Err(ExportError::Malformed(_))
        ));

        let mut bad = json.clone();
        bad.entries[0].input[0] = "zz".to_string();
        assert!(matches!(
            solution_from_json(&bad, &c2),
            Err(ExportError::UnknownLabel(_))
        ));
    }
}
