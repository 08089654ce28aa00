//! Serializable tables and their json / csv / text renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::ValueEnum;
use fsind_core::structure::closed_form_centralizer_generators;
use fsind_core::{ClassType, DoubleGroup, Group, Structure};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParamsOut {
    pub l: u32,
    pub k: u32,
    pub n1: u32,
    pub n2: u32,
    pub order: u64,
    pub exponent: u64,
    pub max_m: u64,
}

impl ParamsOut {
    pub fn new(group: &Group, max_m: u64) -> Result<Self, CliError> {
        let p = group.params();
        Ok(ParamsOut {
            l: p.l(),
            k: p.k(),
            n1: p.n1(),
            n2: p.n2(),
            order: p.order(),
            exponent: group.exponent()?,
            max_m,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassRow {
    pub index: usize,
    pub representative: String,
    pub size: usize,
    #[serde(rename = "type")]
    pub type_tag: String,
    pub centralizer_order: usize,
    pub centralizer_generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharacterRow {
    /// "G" for the group's own table, otherwise the class representative.
    pub scope: String,
    pub class_index: Option<usize>,
    pub eta_id: usize,
    pub family: String,
    pub label: String,
    pub degree: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelRef {
    pub class_rep: String,
    pub eta_id: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndicatorRow {
    pub target: String,
    pub label: LabelRef,
    pub m: u64,
    pub value: i64,
    pub paths: BTreeMap<String, i64>,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub params: ParamsOut,
    pub classes: Vec<ClassRow>,
    pub characters: Vec<CharacterRow>,
    pub indicators: Vec<IndicatorRow>,
}

impl Report {
    pub fn new(params: ParamsOut) -> Self {
        Report { params, classes: Vec::new(), characters: Vec::new(), indicators: Vec::new() }
    }

    pub fn disagreements(&self) -> usize {
        self.indicators.iter().filter(|r| !r.agree).count()
    }
}

pub fn class_rows(group: &Group, structure: &Structure) -> Vec<ClassRow> {
    structure
        .classes
        .iter()
        .enumerate()
        .map(|(c, class)| {
            let gens = if class.type_tag == ClassType::Central {
                vec![group.a(), group.u(), group.v()]
            } else {
                closed_form_centralizer_generators(group, &class.representative)
            };
            ClassRow {
                index: c,
                representative: class.representative.to_string(),
                size: class.size(),
                type_tag: class.type_tag.to_string(),
                centralizer_order: structure.centralizer_of_class(c).order(),
                centralizer_generators: gens.iter().map(ToString::to_string).collect(),
            }
        })
        .collect()
}

pub fn character_rows(double: &DoubleGroup) -> Vec<CharacterRow> {
    let mut rows: Vec<CharacterRow> = double
        .g_table()
        .irreducibles
        .iter()
        .zip(&double.g_table().labels)
        .enumerate()
        .map(|(e, (chi, label))| CharacterRow {
            scope: "G".into(),
            class_index: None,
            eta_id: e,
            family: label.tag().into(),
            label: label.to_string(),
            degree: chi.dim(),
        })
        .collect();
    for (c, class) in double.structure().classes.iter().enumerate() {
        let table = double.table(c);
        for (e, (eta, label)) in table.irreducibles.iter().zip(&table.labels).enumerate() {
            rows.push(CharacterRow {
                scope: class.representative.to_string(),
                class_index: Some(c),
                eta_id: e,
                family: label.tag().into(),
                label: label.to_string(),
                degree: eta.dim(),
            });
        }
    }
    rows
}

pub fn render(report: &Report, format: Format, section: Section) -> Result<String, CliError> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(report)? + "\n"),
        Format::Csv => render_csv(report, section),
        Format::Text => Ok(render_text(report, section)),
    }
}

/// Which table a csv or text rendering shows; json always carries everything.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Section {
    Classes,
    Characters,
    Indicators,
}

#[derive(Serialize)]
struct ClassCsv<'a> {
    index: usize,
    representative: &'a str,
    size: usize,
    #[serde(rename = "type")]
    type_tag: &'a str,
    centralizer_order: usize,
    centralizer_generators: String,
}

#[derive(Serialize)]
struct IndicatorCsv<'a> {
    target: &'a str,
    class_rep: &'a str,
    eta_id: usize,
    m: u64,
    value: i64,
    bruteforce: Option<i64>,
    closed_form: Option<i64>,
    zform: Option<i64>,
    charform: Option<i64>,
    central: Option<i64>,
    agree: bool,
}

fn render_csv(report: &Report, section: Section) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    match section {
        Section::Classes => {
            for r in &report.classes {
                w.serialize(ClassCsv {
                    index: r.index,
                    representative: &r.representative,
                    size: r.size,
                    type_tag: &r.type_tag,
                    centralizer_order: r.centralizer_order,
                    centralizer_generators: r.centralizer_generators.join(" "),
                })?;
            }
            if report.classes.is_empty() {
                w.write_record(["index", "representative", "size", "type", "centralizer_order", "centralizer_generators"])?;
            }
        }
        Section::Characters => {
            if report.characters.is_empty() {
                w.write_record(["scope", "class_index", "eta_id", "family", "label", "degree"])?;
            }
            for r in &report.characters {
                w.serialize(r)?;
            }
        }
        Section::Indicators => {
            if report.indicators.is_empty() {
                w.write_record([
                    "target", "class_rep", "eta_id", "m", "value", "bruteforce", "closed_form", "zform",
                    "charform", "central", "agree",
                ])?;
            }
            for r in &report.indicators {
                let path = |p: &str| r.paths.get(p).copied();
                w.serialize(IndicatorCsv {
                    target: &r.target,
                    class_rep: &r.label.class_rep,
                    eta_id: r.label.eta_id,
                    m: r.m,
                    value: r.value,
                    bruteforce: path("bruteforce"),
                    closed_form: path("closed_form"),
                    zform: path("zform"),
                    charform: path("charform"),
                    central: path("central"),
                    agree: r.agree,
                })?;
            }
        }
    }
    let bytes = w.into_inner().map_err(|e| CliError::Output(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
}

fn render_text(report: &Report, section: Section) -> String {
    let p = &report.params;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "G = Z_{} x| D_{}  (l = {}, k = {}, n1 = {}, n2 = {}), |G| = {}, exponent {}",
        1u64 << p.l,
        p.k,
        p.l,
        p.k,
        p.n1,
        p.n2,
        p.order,
        p.exponent
    );
    match section {
        Section::Classes => {
            let center: usize = report.classes.iter().filter(|c| c.type_tag == "central").count();
            let _ = writeln!(out, "center: order {center}");
            let _ = writeln!(out, "{} conjugacy classes", report.classes.len());
            let _ = writeln!(out, "{:>4}  {:<12} {:>5}  {:<12} {:>6}  generators", "#", "rep", "size", "type", "|C|");
            for c in &report.classes {
                let _ = writeln!(
                    out,
                    "{:>4}  {:<12} {:>5}  {:<12} {:>6}  {}",
                    c.index,
                    c.representative,
                    c.size,
                    c.type_tag,
                    c.centralizer_order,
                    c.centralizer_generators.join(", ")
                );
            }
        }
        Section::Characters => {
            let own = report.characters.iter().filter(|c| c.class_index.is_none()).count();
            let _ = writeln!(out, "{own} irreducible characters of G, {} centralizer characters", report.characters.len() - own);
            let _ = writeln!(out, "{:<12} {:>4}  {:>6}  label", "scope", "eta", "degree");
            for c in &report.characters {
                let _ = writeln!(out, "{:<12} {:>4}  {:>6}  {}", c.scope, c.eta_id, c.degree, c.label);
            }
        }
        Section::Indicators => {
            let _ = writeln!(
                out,
                "{} rows, {} disagreements",
                report.indicators.len(),
                report.disagreements()
            );
            let _ = writeln!(out, "{:<7} {:<12} {:>4} {:>4} {:>6}  paths", "target", "class", "eta", "m", "value");
            for r in &report.indicators {
                let paths: Vec<String> = r.paths.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let _ = writeln!(
                    out,
                    "{:<7} {:<12} {:>4} {:>4} {:>6}  {}{}",
                    r.target,
                    r.label.class_rep,
                    r.label.eta_id,
                    r.m,
                    r.value,
                    paths.join(" "),
                    if r.agree { "" } else { "  DISAGREE" }
                );
            }
        }
    }
    out
}
