//! Group catalogs (JSON lines) and report serialization.
//!
//! A catalog line looks like
//!
//! ```text
//! {"name":"A5","degree":5,"generators":["(1 2 3)","(3 4 5)"]}
//! ```
//!
//! where each generator is either a 1-based image array or a string in
//! cycle notation.

use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::checks::{CheckReport, NamedGroup, SpInfo};
use crate::error::GroupError;
use crate::gf2::{sp_group, GF2Matrix};
use crate::group::{closure, named, FiniteGroupTable, GroupElement, Permutation};
use crate::hom::{BraidHom, HomClass};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },

    #[error("entry {name:?}: {source}")]
    BadGenerator { name: String, source: GroupError },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl CatalogEntry {
    pub fn to_table(&self, ceiling: usize) -> Result<FiniteGroupTable<Permutation>, GroupError> {
        if self.generators.is_empty() {
            return closure(&[Permutation::identity(self.degree)], ceiling);
        }
        closure(&self.generators, ceiling)
    }

    pub fn to_named_group(&self, ceiling: usize) -> Result<NamedGroup, GroupError> {
        Ok(NamedGroup::new(&self.name, self.to_table(ceiling)?))
    }
}

fn parse_generator(degree: usize, value: &Value) -> Result<Permutation, GroupError> {
    match value {
        Value::String(s) => Permutation::parse_cycles(degree, s),
        Value::Array(items) => {
            let images = items
                .iter()
                .map(|v| {
                    v.as_u64().map(|x| x as usize).ok_or_else(|| {
                        GroupError::InvalidPermutation(format!("non-integer image {v}"))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            if images.len() != degree {
                return Err(GroupError::InvalidPermutation(format!(
                    "image array of length {} for degree {degree}",
                    images.len()
                )));
            }
            Permutation::from_images(&images)
        }
        other => Err(GroupError::InvalidPermutation(format!(
            "generator must be an array or a string, got {other}"
        ))),
    }
}

/// Parses a JSON-lines catalog; blank lines are ignored.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, CatalogError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let malformed = |message: String| CatalogError::Malformed { line, message };
        let value: Value = serde_json::from_str(raw).map_err(|e| malformed(e.to_string()))?;
        let obj = value
            .as_object()
            .ok_or_else(|| malformed("expected a JSON object".into()))?;
        let name = obj
            .get("name")
            .and_then(Value::as_str)
            .ok_or_else(|| malformed("missing string field \"name\"".into()))?
            .to_string();
        let degree = obj
            .get("degree")
            .and_then(Value::as_u64)
            .filter(|&d| d > 0)
            .ok_or_else(|| malformed("missing positive integer field \"degree\"".into()))?
            as usize;
        let gens = obj
            .get("generators")
            .and_then(Value::as_array)
            .ok_or_else(|| malformed("missing array field \"generators\"".into()))?;
        let generators = gens
            .iter()
            .map(|g| parse_generator(degree, g))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|source| CatalogError::BadGenerator {
                name: name.clone(),
                source,
            })?;
        out.push(CatalogEntry {
            name,
            degree,
            generators,
        });
    }
    Ok(out)
}

#[derive(Serialize)]
struct CatalogLine<'a> {
    name: &'a str,
    degree: usize,
    generators: Vec<Vec<usize>>,
}

/// One JSON line per entry, generators as image arrays.
pub fn emit_catalog(entries: &[CatalogEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        let line = CatalogLine {
            name: &e.name,
            degree: e.degree,
            generators: e.generators.iter().map(Permutation::images).collect(),
        };
        out.push_str(&serde_json::to_string(&line).expect("plain data serializes"));
        out.push('\n');
    }
    out
}

/// A built-in or catalog-supplied target group.
#[derive(Clone, Debug)]
pub enum Target {
    Perm(NamedGroup),
    Matrix {
        name: String,
        table: FiniteGroupTable<GF2Matrix>,
    },
}

impl Target {
    pub fn name(&self) -> &str {
        match self {
            Target::Perm(g) => &g.name,
            Target::Matrix { name, .. } => name,
        }
    }

    pub fn order(&self) -> usize {
        match self {
            Target::Perm(g) => g.table.order(),
            Target::Matrix { table, .. } => table.order(),
        }
    }
}

/// Names accepted by [`builtin_target`].
pub const BUILTIN_NAMES: &str = "S1..S7, A3..A7, Z1..Z12, klein4, D4, Q8, sp2, sp4, sp6";

/// Resolves a built-in name (case-insensitive).
pub fn builtin_target(name: &str, ceiling: usize) -> Result<Target, GroupError> {
    let lower = name.to_ascii_lowercase();
    let unknown = || GroupError::OutOfRange(format!("unknown group {name:?}; known: {BUILTIN_NAMES}"));
    let number = |prefix: &str| lower.strip_prefix(prefix).and_then(|r| r.parse::<usize>().ok());
    let perm = |table: FiniteGroupTable<Permutation>| Ok(Target::Perm(NamedGroup::new(name, table)));
    match lower.as_str() {
        "klein4" | "v4" => return perm(named::klein4()?),
        "d4" | "d8" => return perm(named::dihedral8()?),
        "q8" => return perm(named::quaternion8()?),
        "sp2" | "sp4" | "sp6" => {
            let g = number("sp").unwrap() / 2;
            return Ok(Target::Matrix {
                name: name.to_string(),
                table: sp_group(g, ceiling)?,
            });
        }
        _ => {}
    }
    if let Some(k) = number("s").filter(|k| (1..=7).contains(k)) {
        return perm(named::symmetric(k)?);
    }
    if let Some(k) = number("a").filter(|k| (3..=7).contains(k)) {
        return perm(named::alternating(k)?);
    }
    if let Some(m) = number("z").filter(|m| (1..=12).contains(m)) {
        return perm(named::cyclic(m)?);
    }
    Err(unknown())
}

/// `{S₂…S₅, A₄, A₅, Z₁…Z₁₂, klein4, D₄, Q₈}`.
pub fn builtin_theorem_catalog() -> Result<Vec<NamedGroup>, GroupError> {
    let mut names: Vec<String> = (2..=5).map(|k| format!("S{k}")).collect();
    names.extend(["A4", "A5"].map(String::from));
    names.extend((1..=12).map(|m| format!("Z{m}")));
    names.extend(["klein4", "D4", "Q8"].map(String::from));
    names
        .iter()
        .map(|n| match builtin_target(n, usize::MAX)? {
            Target::Perm(g) => Ok(g),
            Target::Matrix { .. } => unreachable!("permutation names only"),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HomRow {
    pub images: Vec<Value>,
    pub cyclic: bool,
    pub class_size: Option<usize>,
    pub image_order: usize,
}

/// Result of a homomorphism enumeration.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Classification {
    pub n: usize,
    pub target: String,
    pub target_order: usize,
    pub mode: String,
    pub non_cyclic_only: bool,
    pub rows: Vec<HomRow>,
}

impl Classification {
    pub fn from_classes<E: GroupElement>(
        n: usize,
        target: &str,
        target_order: usize,
        classes: &[HomClass<E>],
        non_cyclic_only: bool,
    ) -> Self {
        Classification {
            n,
            target: target.to_string(),
            target_order,
            mode: "classes".into(),
            non_cyclic_only,
            rows: classes
                .iter()
                .map(|c| HomRow {
                    images: c.representative.render(),
                    cyclic: c.representative.is_cyclic(),
                    class_size: Some(c.class_size),
                    image_order: c.image_order,
                })
                .collect(),
        }
    }

    pub fn from_raw<E: GroupElement>(
        n: usize,
        target: &str,
        target_order: usize,
        homs: &[BraidHom<E>],
        non_cyclic_only: bool,
    ) -> Result<Self, GroupError> {
        let rows = homs
            .iter()
            .map(|h| {
                Ok(HomRow {
                    images: h.render(),
                    cyclic: h.is_cyclic(),
                    class_size: None,
                    image_order: h.image_subgroup(target_order)?.order(),
                })
            })
            .collect::<Result<Vec<_>, GroupError>>()?;
        Ok(Classification {
            n,
            target: target.to_string(),
            target_order,
            mode: "raw".into(),
            non_cyclic_only,
            rows,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Report {
    Check(CheckReport),
    Classification(Classification),
    SpInfo(SpInfo),
}

impl Report {
    pub fn passed(&self) -> bool {
        match self {
            Report::Check(c) => c.passed(),
            Report::Classification(_) => true,
            Report::SpInfo(s) => s.passed(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Tsv,
}

/// Deterministic serialization; identical reports give identical bytes.
pub fn emit_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("plain data serializes");
            s.push('\n');
            s
        }
        Format::Tsv => emit_tsv(report),
    }
}

fn emit_tsv(report: &Report) -> String {
    let mut lines: Vec<String> = Vec::new();
    match report {
        Report::Check(c) => {
            lines.push(format!("check\t{}", c.name));
            for (k, v) in &c.params {
                lines.push(format!("param\t{k}\t{v}"));
            }
            lines.push(format!("verdict\t{}\t{}", c.verdict.as_str(), c.witnesses.join(" | ")));
            for row in &c.counts {
                lines.push(format!("count\t{}\t{}", row.label, row.value));
            }
        }
        Report::Classification(c) => {
            lines.push(format!(
                "classification\tn={}\ttarget={}\ttarget_order={}\tmode={}\tnon_cyclic_only={}",
                c.n, c.target, c.target_order, c.mode, c.non_cyclic_only
            ));
            lines.push("index\tcyclic\tclass_size\timage_order\timages".into());
            for (i, row) in c.rows.iter().enumerate() {
                lines.push(format!(
                    "{i}\t{}\t{}\t{}\t{}",
                    row.cyclic,
                    row.class_size.map(|s| s.to_string()).unwrap_or_default(),
                    row.image_order,
                    Value::from(row.images.clone())
                ));
            }
        }
        Report::SpInfo(s) => {
            lines.push(
                "g\torder\torder_formula\ttransvections\tsymplectic_pairs\trefinements_even\trefinements_odd"
                    .into(),
            );
            lines.push(format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                s.g,
                s.order,
                s.order_formula,
                s.transvections,
                s.symplectic_pairs,
                s.refinements_even,
                s.refinements_odd
            ));
        }
    }
    let mut out = lines.join("\n");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::{lemma_a_check, sp_info};
    use crate::hom::{classify_homs, standard_projection, SearchOptions};
    use crate::group::DEFAULT_CEILING;

    #[test]
    fn parse_examples() {
        let entries = parse_catalog(
            "{\"name\":\"S3\",\"degree\":3,\"generators\":[[2,1,3],[1,3,2]]}\n\n\
             {\"name\":\"A5\",\"degree\":5,\"generators\":[\"(1 2 3)\",\"(3 4 5)\"]}\n",
        )
        .unwrap();
        assert_eq!(entries.len(), 2);
        assert_eq!(entries[0].to_table(DEFAULT_CEILING).unwrap().order(), 6);
        assert_eq!(entries[1].to_table(DEFAULT_CEILING).unwrap().order(), 60);
    }

    #[test]
    fn parse_errors() {
        let err = parse_catalog("{\"name\":\"bad\",\"degree\":3,\"generators\":[[1,1,2]]}").unwrap_err();
        assert!(matches!(err, CatalogError::BadGenerator { ref name, .. } if name == "bad"));
        let err = parse_catalog("\n{\"name\":\"x\"}").unwrap_err();
        assert!(matches!(err, CatalogError::Malformed { line: 2, .. }));
        let err = parse_catalog("not json").unwrap_err();
        assert!(matches!(err, CatalogError::Malformed { line: 1, .. }));
        assert!(parse_catalog("{\"name\":\"x\",\"degree\":3,\"generators\":[[1,2]]}").is_err());
    }

    #[test]
    fn builtins_resolve() {
        assert_eq!(builtin_target("S6", DEFAULT_CEILING).unwrap().order(), 720);
        assert_eq!(builtin_target("a6", DEFAULT_CEILING).unwrap().order(), 360);
        assert_eq!(builtin_target("Z12", DEFAULT_CEILING).unwrap().order(), 12);
        assert_eq!(builtin_target("sp4", DEFAULT_CEILING).unwrap().order(), 720);
        assert_eq!(builtin_target("Q8", DEFAULT_CEILING).unwrap().order(), 8);
        assert!(builtin_target("S9", DEFAULT_CEILING).is_err());
        assert!(builtin_target("Z13", DEFAULT_CEILING).is_err());
        assert_eq!(builtin_theorem_catalog().unwrap().len(), 21);
    }

    #[test]
    fn b3_s3_classification_has_four_rows() {
        let s3 = named::symmetric(3).unwrap();
        let classes = classify_homs(3, &s3, &SearchOptions::default()).unwrap();
        let c = Classification::from_classes(3, "S3", 6, &classes, false);
        assert_eq!(c.rows.len(), 4);
        assert_eq!(c.rows.iter().filter(|r| r.cyclic).count(), 3);
        let tsv = emit_report(&Report::Classification(c), Format::Tsv);
        assert_eq!(tsv.lines().count(), 6);
    }

    #[test]
    fn passing_check_has_empty_witness_field() {
        let r = lemma_a_check(&standard_projection(5).unwrap()).unwrap();
        let tsv = emit_report(&Report::Check(r), Format::Tsv);
        assert!(tsv.lines().any(|l| l == "verdict\tpass\t"));
    }

    #[test]
    fn sp_info_row() {
        let tsv = emit_report(&Report::SpInfo(sp_info(2, DEFAULT_CEILING).unwrap()), Format::Tsv);
        assert_eq!(tsv.lines().nth(1), Some("2\t720\t720\t15\t120\t10\t6"));
        let json = emit_report(&Report::SpInfo(sp_info(2, DEFAULT_CEILING).unwrap()), Format::Json);
        let v: Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["kind"], "sp_info");
        assert_eq!(v["order"], 720);
    }
}
