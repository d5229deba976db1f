//! Serialisable summaries and their json / tsv / dot / text renderings.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::ade::AdeType;
use crate::arith::rational::{self, Rational};
use crate::character::CharacterTable;
use crate::error::{Error, Result};
use crate::group::{ConjugacyClass, FiniteSubgroup, GroupElement};
use crate::orbifold::{ComparisonReport, OrbifoldCohomology, TwistedSector};
use crate::quiver::Graph;
use crate::roots::{characteristic_polynomial, CoxeterElement};
use crate::spectrum::{Grading, SpectrumReport};
use crate::verify::VerificationCase;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    Json,
    Tsv,
    Dot,
    #[default]
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "tsv" => Ok(Format::Tsv),
            "dot" => Ok(Format::Dot),
            "text" => Ok(Format::Text),
            _ => Err(Error::usage(format!("unknown format '{s}' (json, tsv, dot, text)"))),
        }
    }
}

type MatrixText = [[String; 2]; 2];

fn matrix_text(g: &GroupElement) -> MatrixText {
    let e = g.entries();
    [
        [e[0][0].to_string(), e[0][1].to_string()],
        [e[1][0].to_string(), e[1][1].to_string()],
    ]
}

fn rats(v: &[Rational]) -> Vec<String> {
    v.iter().map(rational::to_string).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassSummary {
    pub size: usize,
    pub element_order: usize,
    pub trace: String,
    pub representative: MatrixText,
}

fn class_summaries(classes: &[ConjugacyClass]) -> Vec<ClassSummary> {
    classes
        .iter()
        .map(|c| ClassSummary {
            size: c.size,
            element_order: c.element_order,
            trace: c.trace.to_string(),
            representative: matrix_text(&c.representative),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupSummary {
    #[serde(rename = "type")]
    pub ade: String,
    pub order: usize,
    pub cyclotomic_order: u32,
    pub generators: Vec<MatrixText>,
    pub classes: Vec<ClassSummary>,
}

pub fn group_summary(group: &FiniteSubgroup, classes: &[ConjugacyClass]) -> GroupSummary {
    GroupSummary {
        ade: group.ade().to_string(),
        order: group.order(),
        cyclotomic_order: group.cyclotomic_order(),
        generators: group.generators().iter().map(matrix_text).collect(),
        classes: class_summaries(classes),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharTableSummary {
    #[serde(rename = "type")]
    pub ade: String,
    pub group_order: usize,
    pub classes: Vec<ClassSummary>,
    pub dimensions: Vec<u32>,
    /// `values[irrep][class]`.
    pub values: Vec<Vec<String>>,
}

pub fn chartable_summary(ade: AdeType, table: &CharacterTable) -> CharTableSummary {
    CharTableSummary {
        ade: ade.to_string(),
        group_order: table.group_order(),
        classes: class_summaries(table.classes()),
        dimensions: table.dimensions(),
        values: table
            .values()
            .iter()
            .map(|row| row.iter().map(ToString::to_string).collect())
            .collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub name: String,
    pub labels: Vec<String>,
    pub marks: Option<Vec<u32>>,
    pub trivial: Option<usize>,
    pub adjacency: Vec<Vec<u32>>,
}

pub fn graph_summary(name: &str, g: &Graph) -> GraphSummary {
    GraphSummary {
        name: name.to_string(),
        labels: g.labels().to_vec(),
        marks: g.marks().map(<[u32]>::to_vec),
        trivial: g.trivial_vertex(),
        adjacency: g.adjacency().to_vec(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumEntry {
    pub lambda: String,
    pub mult: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumSummary {
    #[serde(rename = "type")]
    pub ade: Option<String>,
    pub equation: String,
    pub weights: Vec<String>,
    pub d: u64,
    pub mu: u64,
    pub grading: &'static str,
    pub basis: Vec<String>,
    pub spectrum: Vec<SpectrumEntry>,
}

pub fn spectrum_summary(ade: Option<AdeType>, report: &SpectrumReport, grading: Grading) -> SpectrumSummary {
    SpectrumSummary {
        ade: ade.map(|a| a.to_string()),
        equation: report.weighted.poly.to_string(),
        weights: rats(&report.weighted.weights),
        d: report.weighted.d,
        mu: report.mu_formula,
        grading: match grading {
            Grading::Shifted => "shifted",
            Grading::Raw => "raw",
        },
        basis: report.basis.standard_monomials.iter().map(ToString::to_string).collect(),
        spectrum: report
            .spectrum
            .entries
            .iter()
            .map(|(l, m)| SpectrumEntry {
                lambda: rational::to_string(l),
                mult: *m,
            })
            .collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoxeterSummary {
    #[serde(rename = "type")]
    pub ade: String,
    pub vertex_order: Vec<usize>,
    pub matrix: Vec<Vec<i64>>,
    pub h: usize,
    /// Coefficients of `det(tI - T)`, ascending degree.
    pub characteristic_polynomial: Vec<String>,
    pub exponents: Vec<String>,
    pub positive_roots: usize,
}

pub fn coxeter_summary(ade: AdeType, t: &CoxeterElement, exponents: &[Rational], positive_roots: usize) -> CoxeterSummary {
    CoxeterSummary {
        ade: ade.to_string(),
        vertex_order: t.vertex_order.clone(),
        matrix: t.matrix.clone(),
        h: t.order,
        characteristic_polynomial: characteristic_polynomial(&t.matrix).iter().map(ToString::to_string).collect(),
        exponents: rats(exponents),
        positive_roots,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SectorSummary {
    pub class: usize,
    pub size: usize,
    pub element_order: usize,
    pub exponents: [String; 2],
    pub age: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbifoldSummary {
    #[serde(rename = "type")]
    pub ade: String,
    pub sectors: Vec<SectorSummary>,
    pub cohomology: OrbifoldCohomology,
    pub comparison: ComparisonReport,
}

pub fn orbifold_summary(
    ade: AdeType,
    sectors: &[TwistedSector],
    cohomology: OrbifoldCohomology,
    comparison: ComparisonReport,
) -> OrbifoldSummary {
    OrbifoldSummary {
        ade: ade.to_string(),
        sectors: sectors
            .iter()
            .map(|s| SectorSummary {
                class: s.class_index,
                size: s.class_size,
                element_order: s.m,
                exponents: [
                    rational::to_string(&s.exponent_pair[0]),
                    rational::to_string(&s.exponent_pair[1]),
                ],
                age: rational::to_string(&s.age),
            })
            .collect(),
        cohomology,
        comparison,
    }
}

/// One `verify` case, or the consistency error that aborted it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum CaseOutcome {
    Done(VerificationCase),
    Aborted {
        #[serde(rename = "type")]
        ade: String,
        error: String,
    },
}

pub fn case_outcome(ade: AdeType, result: Result<VerificationCase>) -> CaseOutcome {
    match result {
        Ok(c) => CaseOutcome::Done(c),
        Err(e) => CaseOutcome::Aborted {
            ade: ade.to_string(),
            error: e.to_string(),
        },
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Artifact {
    Group(GroupSummary),
    CharTable(CharTableSummary),
    Graph(GraphSummary),
    Spectrum(SpectrumSummary),
    Coxeter(CoxeterSummary),
    Orbifold(OrbifoldSummary),
    Verification(Vec<CaseOutcome>),
}

impl Artifact {
    fn kind(&self) -> &'static str {
        match self {
            Artifact::Group(_) => "group",
            Artifact::CharTable(_) => "character table",
            Artifact::Graph(_) => "graph",
            Artifact::Spectrum(_) => "spectrum",
            Artifact::Coxeter(_) => "Coxeter element",
            Artifact::Orbifold(_) => "orbifold data",
            Artifact::Verification(_) => "verification report",
        }
    }
}

fn json<T: Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| Error::internal("emit", e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn graph_from_summary(g: &GraphSummary) -> Result<Graph> {
    let mut graph = Graph::new(g.labels.clone(), g.adjacency.clone())?;
    if let Some(m) = &g.marks {
        graph = graph.with_marks(m.clone())?;
    }
    if let Some(t) = g.trivial {
        graph = graph.with_trivial(t)?;
    }
    Ok(graph)
}

/// Renders an artifact; `dot` is only available for graphs.
pub fn emit(artifact: &Artifact, format: Format) -> Result<String> {
    match format {
        Format::Json => match artifact {
            Artifact::Group(v) => json(v),
            Artifact::CharTable(v) => json(v),
            Artifact::Graph(v) => json(v),
            Artifact::Spectrum(v) => json(v),
            Artifact::Coxeter(v) => json(v),
            Artifact::Orbifold(v) => json(v),
            Artifact::Verification(v) => json(v),
        },
        Format::Dot => match artifact {
            Artifact::Graph(g) => Ok(graph_from_summary(g)?.to_dot(&g.name)),
            other => Err(Error::usage(format!("dot output is only available for graphs, not a {}", other.kind()))),
        },
        Format::Tsv => Ok(tsv(artifact)),
        Format::Text => Ok(text(artifact)),
    }
}

fn tsv(artifact: &Artifact) -> String {
    let mut out = String::new();
    match artifact {
        Artifact::Group(g) => {
            for (i, c) in g.classes.iter().enumerate() {
                let m = &c.representative;
                writeln!(
                    out,
                    "{i}\t{}\t{}\t{}\t[[{}, {}], [{}, {}]]",
                    c.size, c.element_order, c.trace, m[0][0], m[0][1], m[1][0], m[1][1]
                )
                .unwrap();
            }
        }
        Artifact::CharTable(t) => {
            for (i, row) in t.values.iter().enumerate() {
                writeln!(out, "{i}\t{}\t{}", t.dimensions[i], row.join("\t")).unwrap();
            }
        }
        Artifact::Graph(g) => {
            for i in 0..g.labels.len() {
                for j in i + 1..g.labels.len() {
                    if g.adjacency[i][j] > 0 {
                        writeln!(out, "{}\t{}\t{}", g.labels[i], g.labels[j], g.adjacency[i][j]).unwrap();
                    }
                }
            }
        }
        Artifact::Spectrum(s) => {
            for e in &s.spectrum {
                writeln!(out, "{}\t{}", e.lambda, e.mult).unwrap();
            }
        }
        Artifact::Coxeter(c) => {
            let mut counts: Vec<(String, usize)> = Vec::new();
            for e in &c.exponents {
                match counts.last_mut() {
                    Some((v, n)) if v == e => *n += 1,
                    _ => counts.push((e.clone(), 1)),
                }
            }
            for (v, n) in counts {
                writeln!(out, "{v}\t{n}").unwrap();
            }
        }
        Artifact::Orbifold(o) => {
            for s in &o.sectors {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    s.class, s.size, s.element_order, s.exponents[0], s.exponents[1], s.age
                )
                .unwrap();
            }
        }
        Artifact::Verification(cases) => {
            for case in cases {
                match case {
                    CaseOutcome::Done(c) => {
                        for ch in &c.checks {
                            writeln!(
                                out,
                                "{}\t{}\t{}\t{}\t{}\t{}",
                                c.ade, ch.name, ch.status, ch.oracle, ch.expected, ch.actual
                            )
                            .unwrap();
                        }
                    }
                    CaseOutcome::Aborted { ade, error } => {
                        writeln!(out, "{ade}\t-\terror\t-\t-\t{error}").unwrap();
                    }
                }
            }
        }
    }
    out
}

fn text(artifact: &Artifact) -> String {
    let mut out = String::new();
    match artifact {
        Artifact::Group(g) => {
            writeln!(out, "{}: order {}, entries in Q(zeta_{})", g.ade, g.order, g.cyclotomic_order).unwrap();
            for (i, m) in g.generators.iter().enumerate() {
                writeln!(out, "generator {i}: [[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1]).unwrap();
            }
            writeln!(out, "{} conjugacy classes (size, order, trace):", g.classes.len()).unwrap();
            for (i, c) in g.classes.iter().enumerate() {
                writeln!(out, "  C{i}: {}, {}, {}", c.size, c.element_order, c.trace).unwrap();
            }
        }
        Artifact::CharTable(t) => {
            writeln!(out, "{}: {} irreps of dimensions {:?}", t.ade, t.dimensions.len(), t.dimensions).unwrap();
            let sizes: Vec<String> = t.classes.iter().map(|c| c.size.to_string()).collect();
            writeln!(out, "class sizes: {}", sizes.join(" ")).unwrap();
            for (i, row) in t.values.iter().enumerate() {
                writeln!(out, "  V{i}: {}", row.join(" | ")).unwrap();
            }
        }
        Artifact::Graph(g) => {
            writeln!(out, "{}: {} vertices", g.name, g.labels.len()).unwrap();
            for i in 0..g.labels.len() {
                let nbrs: Vec<String> = (0..g.labels.len())
                    .filter(|&j| g.adjacency[i][j] > 0)
                    .map(|j| match g.adjacency[i][j] {
                        1 => g.labels[j].clone(),
                        k => format!("{}x{k}", g.labels[j]),
                    })
                    .collect();
                let mark = g.marks.as_ref().map(|m| format!("({})", m[i])).unwrap_or_default();
                writeln!(out, "  {}{mark}: {}", g.labels[i], nbrs.join(", ")).unwrap();
            }
        }
        Artifact::Spectrum(s) => {
            if let Some(t) = &s.ade {
                writeln!(out, "type: {t}").unwrap();
            }
            writeln!(out, "f = {}", s.equation).unwrap();
            writeln!(out, "weights: ({}), d = {}, mu = {}", s.weights.join(", "), s.d, s.mu).unwrap();
            writeln!(out, "basis: {}", s.basis.join(", ")).unwrap();
            let sp: Vec<String> = s
                .spectrum
                .iter()
                .map(|e| if e.mult == 1 { e.lambda.clone() } else { format!("{} (x{})", e.lambda, e.mult) })
                .collect();
            writeln!(out, "spectrum ({}): {}", s.grading, sp.join(", ")).unwrap();
        }
        Artifact::Coxeter(c) => {
            writeln!(out, "{}: Coxeter number h = {}", c.ade, c.h).unwrap();
            writeln!(out, "exponents m/h: {}", c.exponents.join(", ")).unwrap();
            writeln!(out, "characteristic polynomial (ascending): {}", c.characteristic_polynomial.join(" ")).unwrap();
            writeln!(out, "positive roots: {}", c.positive_roots).unwrap();
        }
        Artifact::Orbifold(o) => {
            writeln!(out, "{}: {} twisted sectors", o.ade, o.sectors.len()).unwrap();
            for s in &o.sectors {
                writeln!(
                    out,
                    "  C{}: order {}, exponents ({}, {}), age {}",
                    s.class, s.element_order, s.exponents[0], s.exponents[1], s.age
                )
                .unwrap();
            }
            let dims: Vec<String> = o.cohomology.graded_dims.iter().map(|(d, n)| format!("H^{d} = {n}")).collect();
            writeln!(out, "orbifold cohomology: {} (total {})", dims.join(", "), o.cohomology.total).unwrap();
            for n in &o.comparison.notes {
                writeln!(out, "note: {n}").unwrap();
            }
        }
        Artifact::Verification(cases) => {
            for case in cases {
                match case {
                    CaseOutcome::Done(c) => {
                        writeln!(out, "{}: {}", c.ade, if c.passed() { "ok" } else { "FAILED" }).unwrap();
                        for ch in &c.checks {
                            writeln!(out, "  {:<20} {:<8} {}", ch.name, ch.status, ch.actual).unwrap();
                            if ch.status != crate::verify::Status::Pass {
                                writeln!(out, "  {:<20} {:<8} expected {} [{}]", "", "", ch.expected, ch.oracle).unwrap();
                            }
                        }
                    }
                    CaseOutcome::Aborted { ade, error } => writeln!(out, "{ade}: ERROR {error}").unwrap(),
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::character_table;
    use crate::group::build_group;
    use crate::quiver::{delete_trivial_vertex, mckay_graph};
    use crate::spectrum::analyze;
    use crate::poly::Polynomial;

    #[test]
    fn spectrum_tsv_lines() {
        let f = Polynomial::parse("x^4 + y^3 + z^2").unwrap();
        let rep = analyze(&f, Grading::Shifted).unwrap();
        let out = emit(&Artifact::Spectrum(spectrum_summary(None, &rep, Grading::Shifted)), Format::Tsv).unwrap();
        assert_eq!(out, "1/12\t1\n1/3\t1\n5/12\t1\n7/12\t1\n2/3\t1\n11/12\t1\n");
    }

    #[test]
    fn spectrum_json_schema() {
        let f = Polynomial::parse("x^5 + y^3 + z^2").unwrap();
        let rep = analyze(&f, Grading::Shifted).unwrap();
        let out = emit(&Artifact::Spectrum(spectrum_summary(Some(AdeType::e8()), &rep, Grading::Shifted)), Format::Json).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["type"], "E8");
        assert_eq!(v["weights"], serde_json::json!(["1/5", "1/3", "1/2"]));
        assert_eq!((v["d"].as_u64(), v["mu"].as_u64()), (Some(30), Some(8)));
        assert_eq!(v["spectrum"][0], serde_json::json!({"lambda": "1/30", "mult": 1}));
    }

    #[test]
    fn e8_dot_and_chartable_json() {
        let g = build_group(AdeType::e8()).unwrap();
        let t = character_table(&g).unwrap();
        let q = delete_trivial_vertex(&mckay_graph(&t).unwrap()).unwrap();
        let dot = emit(&Artifact::Graph(graph_summary("E8", &q)), Format::Dot).unwrap();
        assert_eq!(dot.matches("[label=").count(), 8);
        assert_eq!(dot.matches(" -- ").count(), 7);
        let ext = mckay_graph(&t).unwrap();
        let dot = emit(&Artifact::Graph(graph_summary("E8~", &ext)), Format::Dot).unwrap();
        assert_eq!((dot.matches("[label=").count(), dot.matches(" -- ").count()), (9, 8));

        let a1 = build_group(AdeType::a(1).unwrap()).unwrap();
        let t = character_table(&a1).unwrap();
        let out = emit(&Artifact::CharTable(chartable_summary(AdeType::a(1).unwrap(), &t)), Format::Json).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["values"], serde_json::json!([["1", "1"], ["1", "-1"]]));
    }

    #[test]
    fn dot_only_for_graphs() {
        let f = Polynomial::parse("x^2 + y^2 + z^2").unwrap();
        let rep = analyze(&f, Grading::Shifted).unwrap();
        let err = emit(&Artifact::Spectrum(spectrum_summary(None, &rep, Grading::Shifted)), Format::Dot).unwrap_err();
        assert!(matches!(err, Error::Usage(_)));
        assert!("xml".parse::<Format>().is_err());
        assert_eq!("JSON".parse::<Format>().unwrap(), Format::Json);
    }
}
