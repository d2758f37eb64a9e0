//! Serializable report shapes. Field order is declaration order, and no
//! report contains a hash map, so the JSON text is reproducible.

use serde::Serialize;

use roughdep_core::evaluation::EvaluationMetrics;
use roughdep_core::{AttributeSet, DecisionSystem, DependencyProfile, Fraction, SelectionTrace};

pub const SCHEMA_VERSION: u32 = 1;

/// Every setting that influenced the result, after defaults and the config
/// file have been applied. The output path is left out on purpose.
#[derive(Debug, Serialize)]
pub struct RunConfig {
    pub command: &'static str,
    pub input: String,
    pub decision: String,
    pub missing_token: String,
    pub missing_policy: String,
    pub numeric: Vec<String>,
    pub bins: usize,
    pub encode: &'static str,
    pub format: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subsets: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub measure: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub direction: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cap: Option<usize>,
}

#[derive(Debug, Serialize)]
pub struct Header {
    pub schema_version: u32,
    pub config: RunConfig,
    pub objects: usize,
    pub conditional_attributes: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct Rounded {
    pub cla: f64,
    pub rel: f64,
    pub dir: f64,
    pub ecd: f64,
}

#[derive(Debug, Serialize)]
pub struct Profile {
    pub cla: Fraction,
    pub rel: Fraction,
    pub dir: Fraction,
    pub ecd: Fraction,
    pub rounded: Rounded,
}

impl From<DependencyProfile> for Profile {
    fn from(p: DependencyProfile) -> Self {
        Profile {
            cla: p.cla,
            rel: p.rel,
            dir: p.dir,
            ecd: p.ecd,
            rounded: Rounded {
                cla: p.cla.rounded3(),
                rel: p.rel.rounded3(),
                dir: p.dir.rounded3(),
                ecd: p.ecd.rounded3(),
            },
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SubsetRow {
    pub subset: Vec<String>,
    #[serde(flatten)]
    pub values: Profile,
}

#[derive(Debug, Serialize)]
pub struct MeasureReport {
    #[serde(flatten)]
    pub header: Header,
    pub rows: Vec<SubsetRow>,
}

#[derive(Debug, Serialize)]
pub struct Step {
    pub attr: usize,
    pub name: String,
    pub action: String,
    pub value: Fraction,
}

#[derive(Debug, Serialize)]
pub struct Trace {
    pub measure: String,
    pub direction: String,
    pub initial: Vec<String>,
    pub initial_value: Fraction,
    pub target: Fraction,
    pub steps: Vec<Step>,
    pub result: Vec<String>,
    pub final_value: Fraction,
    pub converged: bool,
    pub warnings: Vec<String>,
}

impl Trace {
    pub fn new(sys: &DecisionSystem, trace: &SelectionTrace) -> Self {
        Trace {
            measure: trace.measure.to_string(),
            direction: trace.direction.to_string(),
            initial: sys.attribute_names(&trace.initial),
            initial_value: trace.initial_value,
            target: trace.target,
            steps: trace
                .steps
                .iter()
                .map(|s| Step {
                    attr: s.attr,
                    name: sys.attribute(s.attr).name.clone(),
                    action: s.action.to_string(),
                    value: s.value,
                })
                .collect(),
            result: sys.attribute_names(&trace.result),
            final_value: trace.final_value(),
            converged: trace.converged,
            warnings: trace.warnings.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SelectReport {
    #[serde(flatten)]
    pub header: Header,
    pub trace: Trace,
}

#[derive(Debug, Serialize)]
pub struct ClassRow {
    pub label: String,
    pub precision: Fraction,
    pub recall: Fraction,
    pub f1: Fraction,
    pub support: u64,
}

#[derive(Debug, Serialize)]
pub struct ProtocolJson {
    /// 0 means resubstitution.
    pub k: usize,
    pub seed: u64,
}

#[derive(Debug, Serialize)]
pub struct Metrics {
    pub accuracy: Fraction,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub total: u64,
    pub correct: u64,
    pub undefined_cells: usize,
    pub per_class: Vec<ClassRow>,
    pub protocol: ProtocolJson,
}

impl From<&EvaluationMetrics> for Metrics {
    fn from(m: &EvaluationMetrics) -> Self {
        let protocol = m.protocol.expect("evaluation runs record their protocol");
        Metrics {
            accuracy: m.accuracy,
            precision: m.precision,
            recall: m.recall,
            f1: m.f1,
            total: m.total,
            correct: m.correct,
            undefined_cells: m.undefined_cells,
            per_class: m
                .per_class
                .iter()
                .map(|c| ClassRow {
                    label: c.name.clone(),
                    precision: c.precision,
                    recall: c.recall,
                    f1: c.f1,
                    support: c.support,
                })
                .collect(),
            protocol: ProtocolJson {
                k: protocol.k,
                seed: protocol.seed,
            },
        }
    }
}

#[derive(Debug, Serialize)]
pub struct EvaluateReport {
    #[serde(flatten)]
    pub header: Header,
    pub subset: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub selection: Option<Trace>,
    pub dependency: Profile,
    /// Whether the subset reaches the full-set value of the chosen measure.
    pub reaches_full: bool,
    pub metrics: Metrics,
}

#[derive(Debug, Serialize)]
pub struct ReductCheck {
    pub subset: Vec<String>,
    pub is_reduct: bool,
}

#[derive(Debug, Serialize)]
pub struct BackwardCheck {
    pub result: Vec<String>,
    pub in_list: bool,
}

#[derive(Debug, Serialize)]
pub struct MeasureReducts {
    pub measure: String,
    pub target: Fraction,
    pub reducts: Vec<Vec<String>>,
    pub backward: BackwardCheck,
    pub checks: Vec<ReductCheck>,
}

#[derive(Debug, Serialize)]
pub struct OracleReport {
    #[serde(flatten)]
    pub header: Header,
    pub measures: Vec<MeasureReducts>,
}

pub fn braces(names: &[String]) -> String {
    format!("{{{}}}", names.join(","))
}

pub fn names(sys: &DecisionSystem, set: &AttributeSet) -> Vec<String> {
    sys.attribute_names(set)
}

fn csv_text(rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.write_record(&row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("csv output is utf-8")
}

fn exact(f: &Fraction) -> String {
    f.to_string()
}

impl MeasureReport {
    /// The subset × measure matrix, decimals first, then exact fractions.
    pub fn to_csv(&self) -> String {
        let mut rows = vec![[
            "subset",
            "cla",
            "rel",
            "dir",
            "ecd",
            "cla_exact",
            "rel_exact",
            "dir_exact",
            "ecd_exact",
        ]
        .map(String::from)
        .to_vec()];
        for r in &self.rows {
            let v = &r.values;
            let fr = [v.cla, v.rel, v.dir, v.ecd];
            let mut row = vec![braces(&r.subset)];
            row.extend(fr.iter().map(|f| format!("{:.6}", f.to_f64())));
            row.extend(fr.iter().map(exact));
            rows.push(row);
        }
        csv_text(rows)
    }
}

impl SelectReport {
    pub fn to_csv(&self) -> String {
        let t = &self.trace;
        let mut rows = vec![["step", "action", "attribute", "value", "value_exact"]
            .map(String::from)
            .to_vec()];
        rows.push(vec![
            "0".into(),
            "initial".into(),
            braces(&t.initial),
            format!("{:.6}", t.initial_value.to_f64()),
            exact(&t.initial_value),
        ]);
        for (i, s) in t.steps.iter().enumerate() {
            rows.push(vec![
                (i + 1).to_string(),
                s.action.clone(),
                s.name.clone(),
                format!("{:.6}", s.value.to_f64()),
                exact(&s.value),
            ]);
        }
        csv_text(rows)
    }
}

impl EvaluateReport {
    /// Long format: one `scope,metric,value` row per number.
    pub fn to_csv(&self) -> String {
        let m = &self.metrics;
        let mut rows = vec![["scope", "metric", "value"].map(String::from).to_vec()];
        let mut push = |scope: &str, metric: &str, value: String| {
            rows.push(vec![scope.to_owned(), metric.to_owned(), value])
        };
        push("all", "subset", braces(&self.subset));
        push("all", "accuracy", exact(&m.accuracy));
        push("all", "precision", format!("{:.6}", m.precision));
        push("all", "recall", format!("{:.6}", m.recall));
        push("all", "f1", format!("{:.6}", m.f1));
        for c in &m.per_class {
            let scope = format!("class:{}", c.label);
            push(&scope, "precision", exact(&c.precision));
            push(&scope, "recall", exact(&c.recall));
            push(&scope, "f1", exact(&c.f1));
            push(&scope, "support", c.support.to_string());
        }
        csv_text(rows)
    }
}

impl OracleReport {
    pub fn to_csv(&self) -> String {
        let mut rows = vec![["measure", "size", "reduct"].map(String::from).to_vec()];
        for m in &self.measures {
            for r in &m.reducts {
                rows.push(vec![m.measure.clone(), r.len().to_string(), braces(r)]);
            }
        }
        csv_text(rows)
    }
}
