//! Bound tables, classification reports, and the golden-data cross-check.
//!
//! The tables recompute every `m` value from scratch through the pairing
//! module; nothing is cached between cells. Classification reports label
//! data sets `D_{n,g,i}` with `i` assigned in canonical order within each
//! degree, print root classes grouped by degree, and, for the two splits
//! with embedded golden lists, classify every golden entry as confirmed,
//! typo-suspected (it fails validation or the pair congruence as printed),
//! or missing, attaching corrected replacements produced by enumeration.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::lcm;
use crate::bounds::{degree_bound, split_degree_bound, stable_split_degree_bound};
use crate::data_set::{validate, Candidate, DataSet};
use crate::enumeration::enumerate_for_genus;
use crate::pairing::{enumerate_root_classes, is_compatible_pair, RootClass};
use crate::Error;

const GOLDEN_GENUS2: &str = include_str!("data/golden_genus2_roots.json");
const GOLDEN_GENUS3: &str = include_str!("data/golden_genus3_roots.json");
const PUBLISHED_TABLE1: &str = include_str!("data/published_table1.json");

/// One row of a bound table. Split fields are present only in per-split
/// tables; the CSV rendering always carries all seven columns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundRow {
    pub g: u64,
    pub g1: Option<u64>,
    pub g2: Option<u64>,
    pub m: u64,
    #[serde(rename = "U_stable")]
    pub u_stable: Option<u64>,
    #[serde(rename = "U")]
    pub u: u64,
    pub ratio: String,
}

/// `m/u` rounded half-up to exactly two decimal places.
pub fn format_ratio(m: u64, u: u64) -> String {
    assert!(u > 0);
    let hundredths = (200 * m as u128 + u as u128) / (2 * u as u128);
    format!("{}.{:02}", hundredths / 100, hundredths % 100)
}

/// Notes attached to a generated table where it disagrees with published
/// values or where the all-pairs maximum differs from the maximum over
/// spherical two-cone pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TableNote {
    RatioMismatch {
        g: u64,
        computed: String,
        published: String,
    },
    PublishedValueMismatch {
        g: u64,
        computed_m: u64,
        computed_u: u64,
        published_m: u64,
        published_u: u64,
    },
    RestrictedMaximumDiffers {
        g: u64,
        all_pairs: u64,
        spherical_two_cone: u64,
    },
}

impl std::fmt::Display for TableNote {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TableNote::RatioMismatch {
                g,
                computed,
                published,
            } => write!(
                f,
                "g={g}: computed ratio {computed} differs from published {published}"
            ),
            TableNote::PublishedValueMismatch {
                g,
                computed_m,
                computed_u,
                published_m,
                published_u,
            } => write!(
                f,
                "g={g}: computed (m, U) = ({computed_m}, {computed_u}) differs from published ({published_m}, {published_u})"
            ),
            TableNote::RestrictedMaximumDiffers {
                g,
                all_pairs,
                spherical_two_cone,
            } => write!(
                f,
                "g={g}: all-pairs maximum {all_pairs} differs from spherical two-cone maximum {spherical_two_cone}"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1 {
    pub rows: Vec<BoundRow>,
    pub notes: Vec<TableNote>,
}

#[derive(Debug, Clone, Deserialize)]
struct PublishedRow {
    g: u64,
    m: u64,
    u: u64,
    ratio: String,
}

fn published_table1() -> Vec<PublishedRow> {
    serde_json::from_str(PUBLISHED_TABLE1).expect("embedded table parses")
}

/// Rows `(g, m(g), U(g), ratio)` for the genus range.
pub fn table1(g_from: u64, g_to: u64) -> Vec<BoundRow> {
    table1_with_notes(g_from, g_to).rows
}

/// Like [`table1`], plus notes for any disagreement with the published
/// table and for any genus where restricting to spherical two-cone pairs
/// would change the maximum.
pub fn table1_with_notes(g_from: u64, g_to: u64) -> Table1 {
    assert!(2 <= g_from && g_from <= g_to);
    let published: BTreeMap<u64, PublishedRow> =
        published_table1().into_iter().map(|r| (r.g, r)).collect();

    let per_genus: Vec<(BoundRow, Option<TableNote>)> = (g_from..=g_to)
        .into_par_iter()
        .map(|g| {
            let mut all_pairs = 0u64;
            let mut restricted = 0u64;
            for g1 in g.div_ceil(2)..=g - 1 {
                let classes = enumerate_root_classes(g1, g - g1);
                all_pairs = all_pairs.max(classes.last().map(RootClass::degree).unwrap_or(0));
                restricted = restricted.max(
                    classes
                        .iter()
                        .filter(|c| {
                            [c.first(), c.second()]
                                .iter()
                                .all(|d| d.is_spherical() && d.cone_count() == 2)
                        })
                        .map(RootClass::degree)
                        .max()
                        .unwrap_or(0),
                );
            }
            let u = degree_bound(g);
            let row = BoundRow {
                g,
                g1: None,
                g2: None,
                m: all_pairs,
                u_stable: None,
                u,
                ratio: format_ratio(all_pairs, u),
            };
            let restricted_note =
                (restricted != all_pairs).then_some(TableNote::RestrictedMaximumDiffers {
                    g,
                    all_pairs,
                    spherical_two_cone: restricted,
                });
            (row, restricted_note)
        })
        .collect();

    let mut rows = Vec::new();
    let mut notes = Vec::new();
    for (row, restricted_note) in per_genus {
        if let Some(p) = published.get(&row.g) {
            if p.m != row.m || p.u != row.u {
                notes.push(TableNote::PublishedValueMismatch {
                    g: row.g,
                    computed_m: row.m,
                    computed_u: row.u,
                    published_m: p.m,
                    published_u: p.u,
                });
            } else if p.ratio != row.ratio {
                notes.push(TableNote::RatioMismatch {
                    g: row.g,
                    computed: row.ratio.clone(),
                    published: p.ratio.clone(),
                });
            }
        }
        notes.extend(restricted_note);
        rows.push(row);
    }
    Table1 { rows, notes }
}

/// Rows `(g, (g1, g2), m(g1, g2), U(g1, g2, N), U(g1, g2))` over every
/// split of each genus in range with both sides above `N + 3`, sorted by
/// `(g, g1)`.
pub fn table2(deficit: u64, g_from: u64, g_to: u64) -> Result<Vec<BoundRow>, Error> {
    if deficit == 0 || deficit.is_multiple_of(2) {
        return Err(Error::StableBoundDeficit(deficit));
    }
    let mut splits = Vec::new();
    for g in g_from..=g_to {
        for g1 in g.div_ceil(2)..=g.saturating_sub(1) {
            let g2 = g - g1;
            if g2 > deficit + 3 {
                splits.push((g, g1, g2));
            }
        }
    }
    Ok(splits
        .into_par_iter()
        .map(|(g, g1, g2)| {
            let classes = enumerate_root_classes(g1, g2);
            let m = classes.last().map(RootClass::degree).unwrap_or(0);
            let u = split_degree_bound(g1, g2);
            BoundRow {
                g,
                g1: Some(g1),
                g2: Some(g2),
                m,
                u_stable: Some(
                    stable_split_degree_bound(g1, g2, deficit).expect("split filtered to domain"),
                ),
                u,
                ratio: format_ratio(m, u),
            }
        })
        .collect())
}

/// CSV rendering with the fixed header `g,g1,g2,m,U_stable,U,ratio`.
pub fn bound_rows_to_csv(rows: &[BoundRow]) -> String {
    let mut out = String::from("g,g1,g2,m,U_stable,U,ratio\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.g,
            r.g1.map_or(String::new(), |v| v.to_string()),
            r.g2.map_or(String::new(), |v| v.to_string()),
            r.m,
            r.u_stable.map_or(String::new(), |v| v.to_string()),
            r.u,
            r.ratio
        ));
    }
    out
}

/// Markdown table; split columns appear only when some row carries them.
pub fn bound_rows_to_markdown(rows: &[BoundRow]) -> String {
    let with_split = rows.iter().any(|r| r.g1.is_some());
    let mut out = String::new();
    if with_split {
        out.push_str("| g | (g1, g2) | m | U_stable | U | ratio |\n");
        out.push_str("|---|----------|---|----------|---|-------|\n");
        for r in rows {
            out.push_str(&format!(
                "| {} | ({}, {}) | {} | {} | {} | {} |\n",
                r.g,
                r.g1.unwrap_or(0),
                r.g2.unwrap_or(0),
                r.m,
                r.u_stable.map_or(String::from("-"), |v| v.to_string()),
                r.u,
                r.ratio
            ));
        }
    } else {
        out.push_str("| g | m | U | ratio |\n|---|---|---|-------|\n");
        for r in rows {
            out.push_str(&format!("| {} | {} | {} | {} |\n", r.g, r.m, r.u, r.ratio));
        }
    }
    out
}

/// Plain-text table with aligned columns.
pub fn bound_rows_to_text(rows: &[BoundRow]) -> String {
    let with_split = rows.iter().any(|r| r.g1.is_some());
    let mut out = String::new();
    if with_split {
        out.push_str(&format!(
            "{:>4}  {:>10}  {:>8}  {:>9}  {:>8}  {:>6}\n",
            "g", "(g1, g2)", "m", "U_stable", "U", "ratio"
        ));
        for r in rows {
            out.push_str(&format!(
                "{:>4}  {:>10}  {:>8}  {:>9}  {:>8}  {:>6}\n",
                r.g,
                format!("({}, {})", r.g1.unwrap_or(0), r.g2.unwrap_or(0)),
                r.m,
                r.u_stable.map_or(String::from("-"), |v| v.to_string()),
                r.u,
                r.ratio
            ));
        }
    } else {
        out.push_str(&format!(
            "{:>4}  {:>8}  {:>8}  {:>6}\n",
            "g", "m", "U", "ratio"
        ));
        for r in rows {
            out.push_str(&format!(
                "{:>4}  {:>8}  {:>8}  {:>6}\n",
                r.g, r.m, r.u, r.ratio
            ));
        }
    }
    out
}

/// A root class with the `(D_{n,g,i}, D_{n,g,j})` notation attached.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledClass {
    pub label: String,
    pub class: RootClass,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeGroup {
    pub degree: u64,
    pub classes: Vec<LabeledClass>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GoldenStatus {
    /// Valid as printed and present in the enumeration.
    Confirmed,
    /// Fails validation or the pair congruence as printed.
    TypoSuspected,
    /// Valid as printed but absent from the enumeration (would indicate an
    /// enumeration bug).
    Missing,
}

/// Cross-check verdict for one golden entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoldenEntryStatus {
    pub location: String,
    pub printed: String,
    pub status: GoldenStatus,
    pub reasons: Vec<String>,
    /// Computed classes of the same degree not covered by any confirmed
    /// entry, offered as replacements.
    pub corrected: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnlistedClass {
    pub degree: u64,
    pub class: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub entries: Vec<GoldenEntryStatus>,
    /// Computed classes the golden list does not contain.
    pub unlisted: Vec<UnlistedClass>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub g1: u64,
    pub g2: u64,
    pub groups: Vec<DegreeGroup>,
    /// `label = tuple` legend for every data set that appears above.
    pub legend: Vec<(String, String)>,
    pub cross_check: Option<CrossCheck>,
}

#[derive(Debug, Clone, Deserialize)]
struct GoldenFile {
    split: (u64, u64),
    entries: Vec<GoldenEntry>,
}

#[derive(Debug, Clone, Deserialize)]
struct GoldenEntry {
    location: String,
    d1: Candidate,
    d2: Candidate,
}

fn golden_for(g1: u64, g2: u64) -> Option<GoldenFile> {
    let raw = match (g1, g2) {
        (1, 1) => GOLDEN_GENUS2,
        (2, 1) => GOLDEN_GENUS3,
        _ => return None,
    };
    let file: GoldenFile = serde_json::from_str(raw).expect("embedded golden list parses");
    assert_eq!(file.split, (g1, g2));
    Some(file)
}

fn candidate_text(c: &Candidate) -> String {
    let mut out = format!("({}, {}, {};", c.n, c.gt, c.a);
    for (i, (residue, order)) in c.cones.iter().enumerate() {
        let sep = if i == 0 { " " } else { ", " };
        out.push_str(&format!("{sep}({residue}, {order})"));
    }
    out.push(')');
    out
}

/// Classifies the split: root classes grouped by degree with generated
/// labels, plus the golden cross-check where an embedded list exists.
pub fn classification_report(g1: u64, g2: u64) -> ClassificationReport {
    assert!(g1 >= g2 && g2 >= 1);
    let classes = enumerate_root_classes(g1, g2);

    let mut labels: BTreeMap<DataSet, String> = BTreeMap::new();
    for g in if g1 == g2 { vec![g1] } else { vec![g1, g2] } {
        for (n, sets) in enumerate_for_genus(g) {
            for (i, set) in sets.iter().enumerate() {
                let label = if set.is_trivial() {
                    format!("D_{{1,{g}}}")
                } else {
                    format!("D_{{{n},{g},{}}}", i + 1)
                };
                labels.insert(set.clone(), label);
            }
        }
    }
    let label_of = |d: &DataSet| labels.get(d).cloned().unwrap_or_else(|| d.to_string());

    let mut groups: Vec<DegreeGroup> = Vec::new();
    let mut used: BTreeMap<String, String> = BTreeMap::new();
    for class in &classes {
        let label = format!(
            "({}, {})",
            label_of(class.first()),
            label_of(class.second())
        );
        for side in [class.first(), class.second()] {
            used.insert(label_of(side), side.to_string());
        }
        match groups.last_mut() {
            Some(group) if group.degree == class.degree() => group.classes.push(LabeledClass {
                label,
                class: class.clone(),
            }),
            _ => groups.push(DegreeGroup {
                degree: class.degree(),
                classes: vec![LabeledClass {
                    label,
                    class: class.clone(),
                }],
            }),
        }
    }

    let cross_check = golden_for(g1, g2).map(|file| cross_check(&file, &classes));

    ClassificationReport {
        g1,
        g2,
        groups,
        legend: used.into_iter().collect(),
        cross_check,
    }
}

fn cross_check(file: &GoldenFile, classes: &[RootClass]) -> CrossCheck {
    let (g1, g2) = file.split;
    let mut matched = vec![false; classes.len()];

    struct Draft {
        location: String,
        printed: String,
        printed_degree: u64,
        status: GoldenStatus,
        reasons: Vec<String>,
    }

    let mut drafts = Vec::new();
    for entry in &file.entries {
        let printed = format!(
            "({}, {})",
            candidate_text(&entry.d1),
            candidate_text(&entry.d2)
        );
        let printed_degree = lcm(entry.d1.n.max(1), entry.d2.n.max(1));
        let mut reasons = Vec::new();

        let sides: Vec<Option<DataSet>> = [&entry.d1, &entry.d2]
            .into_iter()
            .enumerate()
            .map(|(i, candidate)| {
                let report = validate(candidate);
                if report.overall() {
                    Some(DataSet::from_candidate(candidate).expect("validated"))
                } else {
                    reasons.push(format!("side {} fails validation: {report}", i + 1));
                    None
                }
            })
            .collect();

        let mut status = GoldenStatus::Confirmed;
        if let (Some(d1), Some(d2)) = (&sides[0], &sides[1]) {
            if d1.genus() != g1 || d2.genus() != g2 {
                reasons.push(format!(
                    "side genera ({}, {}) do not match the split ({g1}, {g2})",
                    d1.genus(),
                    d2.genus()
                ));
            } else if !is_compatible_pair(d1, d2) {
                reasons.push("pair congruence fails as printed".to_string());
            } else {
                let class = RootClass::new(d1.clone(), d2.clone()).expect("checked");
                match classes.iter().position(|c| *c == class) {
                    Some(i) => matched[i] = true,
                    None => {
                        status = GoldenStatus::Missing;
                        reasons.push("valid pair absent from the enumeration".to_string());
                    }
                }
            }
        }
        if !reasons.is_empty() && status == GoldenStatus::Confirmed {
            status = GoldenStatus::TypoSuspected;
        }
        drafts.push(Draft {
            location: entry.location.clone(),
            printed,
            printed_degree,
            status,
            reasons,
        });
    }

    let unlisted: Vec<UnlistedClass> = classes
        .iter()
        .zip(&matched)
        .filter(|(_, m)| !**m)
        .map(|(c, _)| UnlistedClass {
            degree: c.degree(),
            class: c.to_string(),
        })
        .collect();

    let entries = drafts
        .into_iter()
        .map(|draft| {
            let corrected = if draft.status == GoldenStatus::Confirmed {
                Vec::new()
            } else {
                unlisted
                    .iter()
                    .filter(|u| u.degree == draft.printed_degree)
                    .map(|u| u.class.clone())
                    .collect()
            };
            GoldenEntryStatus {
                location: draft.location,
                printed: draft.printed,
                status: draft.status,
                reasons: draft.reasons,
                corrected,
            }
        })
        .collect();

    CrossCheck { entries, unlisted }
}

/// Text rendering of a classification report.
pub fn classification_to_text(report: &ClassificationReport) -> String {
    let mut out = format!(
        "root classes for the split ({}, {})\n",
        report.g1, report.g2
    );
    for group in &report.groups {
        out.push_str(&format!(
            "\ndegree {} ({} class{}):\n",
            group.degree,
            group.classes.len(),
            if group.classes.len() == 1 { "" } else { "es" }
        ));
        for labeled in &group.classes {
            out.push_str(&format!("  {}\n", labeled.label));
        }
    }
    out.push_str("\nlabels:\n");
    for (label, tuple) in &report.legend {
        out.push_str(&format!("  {label} = {tuple}\n"));
    }
    if let Some(cc) = &report.cross_check {
        out.push_str("\ncross-check against the golden list:\n");
        for entry in &cc.entries {
            let tag = match entry.status {
                GoldenStatus::Confirmed => "confirmed",
                GoldenStatus::TypoSuspected => "typo-suspected",
                GoldenStatus::Missing => "missing",
            };
            out.push_str(&format!(
                "  [{tag}] {}: {}\n",
                entry.location, entry.printed
            ));
            for reason in &entry.reasons {
                out.push_str(&format!("      reason: {reason}\n"));
            }
            for fix in &entry.corrected {
                out.push_str(&format!("      corrected: {fix}\n"));
            }
        }
        if !cc.unlisted.is_empty() {
            out.push_str("\ncomputed classes absent from the golden list:\n");
            for u in &cc.unlisted {
                out.push_str(&format!("  degree {}: {}\n", u.degree, u.class));
            }
        }
    }
    out
}

/// Markdown rendering of a classification report.
pub fn classification_to_markdown(report: &ClassificationReport) -> String {
    let mut out = format!(
        "# Root classes for the split ({}, {})\n",
        report.g1, report.g2
    );
    for group in &report.groups {
        out.push_str(&format!("\n## Degree {}\n\n", group.degree));
        for labeled in &group.classes {
            out.push_str(&format!("- `{}`\n", labeled.label));
        }
    }
    out.push_str("\n## Labels\n\n");
    for (label, tuple) in &report.legend {
        out.push_str(&format!("- `{label}` = `{tuple}`\n"));
    }
    if let Some(cc) = &report.cross_check {
        out.push_str("\n## Cross-check against the golden list\n\n");
        out.push_str("| entry | status | printed |\n|-------|--------|---------|\n");
        for entry in &cc.entries {
            let tag = match entry.status {
                GoldenStatus::Confirmed => "confirmed",
                GoldenStatus::TypoSuspected => "typo-suspected",
                GoldenStatus::Missing => "missing",
            };
            out.push_str(&format!(
                "| {} | {tag} | `{}` |\n",
                entry.location, entry.printed
            ));
        }
        if !cc.unlisted.is_empty() {
            out.push_str("\nComputed classes absent from the golden list:\n\n");
            for u in &cc.unlisted {
                out.push_str(&format!("- degree {}: `{}`\n", u.degree, u.class));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_rounds_half_up_to_two_places() {
        assert_eq!(format_ratio(12, 20), "0.60");
        assert_eq!(format_ratio(210, 210), "1.00");
        assert_eq!(format_ratio(546, 600), "0.91");
        assert_eq!(format_ratio(126, 156), "0.81");
        assert_eq!(format_ratio(1, 3), "0.33");
        assert_eq!(format_ratio(1, 200), "0.01");
        assert_eq!(format_ratio(1, 201), "0.00");
        // exact halves round up
        assert_eq!(format_ratio(3, 200), "0.02");
    }

    #[test]
    fn table1_first_rows() {
        let rows = table1(2, 3);
        assert_eq!(rows.len(), 2);
        assert_eq!((rows[0].g, rows[0].m, rows[0].u), (2, 12, 20));
        assert_eq!(rows[0].ratio, "0.60");
        assert_eq!((rows[1].g, rows[1].m, rows[1].u), (3, 30, 42));
        assert_eq!(rows[1].ratio, "0.71");
    }

    #[test]
    fn table2_rejects_even_deficit() {
        assert!(table2(4, 30, 30).is_err());
        assert!(table2(0, 30, 30).is_err());
    }

    #[test]
    fn table_maxima_match_fresh_recomputation() {
        for row in table1(2, 4) {
            assert_eq!(row.m, crate::pairing::max_degree_for_genus(row.g).degree);
        }
        let rows = table2(1, 12, 12).unwrap();
        assert!(!rows.is_empty());
        for row in &rows {
            assert_eq!(
                row.m,
                crate::pairing::max_root_degree(row.g1.unwrap(), row.g2.unwrap())
            );
        }
    }

    #[test]
    fn csv_header_is_fixed() {
        let csv = bound_rows_to_csv(&table1(2, 2));
        assert!(csv.starts_with("g,g1,g2,m,U_stable,U,ratio\n"));
        assert!(csv.contains("2,,,12,,20,0.60"));
    }

    #[test]
    fn genus_two_classification_is_fully_confirmed() {
        let report = classification_report(1, 1);
        let degree6 = report.groups.iter().find(|g| g.degree == 6).unwrap();
        assert_eq!(degree6.classes.len(), 3);
        let cc = report.cross_check.unwrap();
        assert_eq!(cc.entries.len(), 10);
        assert!(cc
            .entries
            .iter()
            .all(|e| e.status == GoldenStatus::Confirmed));
        assert!(cc.unlisted.is_empty());
    }

    #[test]
    fn labels_follow_canonical_order() {
        let report = classification_report(1, 1);
        let legend: BTreeMap<_, _> = report.legend.iter().cloned().collect();
        assert_eq!(legend["D_{1,1}"], "(1, 1, 1;)");
        assert_eq!(legend["D_{6,1,2}"], "(6, 0, 5; (1, 2), (2, 3))");
        // equal genera: the side with the smaller serialization prints
        // first
        let degree12 = report.groups.iter().find(|g| g.degree == 12).unwrap();
        let labels: Vec<&str> = degree12.classes.iter().map(|c| c.label.as_str()).collect();
        assert!(labels.contains(&"(D_{4,1,1}, D_{6,1,2})"));
        assert!(labels.contains(&"(D_{3,1,1}, D_{4,1,2})"));
    }

    #[test]
    fn genus_three_flags_known_typos() {
        let report = classification_report(2, 1);
        let cc = report.cross_check.as_ref().unwrap();
        let status_of = |location: &str| {
            cc.entries
                .iter()
                .find(|e| e.location == location)
                .unwrap_or_else(|| panic!("no golden entry at {location}"))
        };
        for location in [
            "n=10 (ii)",
            "n=10 (iii)",
            "n=30 (i)",
            "n=6 (i)",
            "n=3 (iii)",
        ] {
            let entry = status_of(location);
            assert_eq!(entry.status, GoldenStatus::TypoSuspected, "{location}");
            assert!(!entry.corrected.is_empty(), "{location} needs corrections");
        }
        for location in ["n=4 (iii)", "n=12 (i)"] {
            let entry = status_of(location);
            assert_eq!(entry.status, GoldenStatus::TypoSuspected, "{location}");
            assert!(entry.reasons.iter().any(|r| r.contains("fails validation")));
        }
        assert!(cc.entries.iter().all(|e| e.status != GoldenStatus::Missing));
        assert_eq!(
            cc.entries
                .iter()
                .filter(|e| e.status == GoldenStatus::Confirmed)
                .count(),
            32
        );
        assert_eq!(cc.unlisted.len(), 9);
    }

    #[test]
    fn genus_three_degree_groups() {
        let report = classification_report(2, 1);
        let count = |n: u64| {
            report
                .groups
                .iter()
                .find(|g| g.degree == n)
                .map_or(0, |g| g.classes.len())
        };
        assert_eq!(count(8), 4);
        assert_eq!(count(30), 3);
        assert_eq!(report.groups.last().unwrap().degree, 30);
    }
}
