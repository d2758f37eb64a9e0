use std::fs::File;
use std::io::BufReader;

use roughdep_core::dataset::{discretize_numeric, encode_onehot, load_csv, LoadConfig};
use roughdep_core::evaluation::{evaluate_resubstitution, stratified_kfold};
use roughdep_core::selection::{
    backward_eliminate, exhaustive_reducts, is_reduct, select, Direction,
};
use roughdep_core::{AttributeSet, DecisionSystem, DependencyProfile, Error, Measure};

use crate::args::{Common, Encoding};
use crate::report::*;

/// How the process should end, apart from I/O failures.
pub enum Failure {
    /// Bad input file or unreadable data: exit 1.
    Io(String),
    /// The request cannot be honoured on this data: exit 3.
    Precondition(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownColumn(_)
            | Error::CapExceeded { .. }
            | Error::InvalidFolds { .. }
            | Error::DecisionAttribute(_)
            | Error::NumericConditional(_)
            | Error::NotNumeric(_)
            | Error::InvalidBins => Failure::Precondition(e.to_string()),
            _ => Failure::Io(e.to_string()),
        }
    }
}

pub struct Output {
    pub text: String,
    /// False for a selection that stopped short of the full-set value.
    pub converged: bool,
}

pub struct Loaded {
    pub sys: DecisionSystem,
    pub config: LoadConfig,
}

pub fn load(common: &Common) -> Result<Loaded, Failure> {
    let mut config = match &common.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            LoadConfig::parse_kv(&text)?
        }
        None => LoadConfig::new(""),
    };
    if let Some(d) = &common.decision {
        config.decision = d.clone();
    }
    if config.decision.is_empty() {
        return Err(Failure::Precondition(
            "no decision column given (use --decision)".into(),
        ));
    }
    if let Some(t) = &common.missing_token {
        config.missing_token = t.clone();
    }
    if let Some(p) = common.missing_policy {
        config.missing_policy = p;
    }
    if !common.numeric.is_empty() {
        config.numeric_columns = common
            .numeric
            .iter()
            .map(|s| s.trim().to_owned())
            .filter(|s| !s.is_empty())
            .collect();
    }
    if let Some(b) = common.bins {
        config.bins = b;
    }

    let file = File::open(&common.input)
        .map_err(|e| Failure::Io(format!("{}: {e}", common.input.display())))?;
    let sys = load_csv(BufReader::new(file), &config)?;
    let sys = discretize_numeric(&sys, config.bins)?;
    let sys = match common.encode {
        Encoding::Native => sys,
        Encoding::Onehot => encode_onehot(&sys)?,
    };
    Ok(Loaded { sys, config })
}

/// `"A,B"` → {A, B}; an empty string is the empty set.
pub fn parse_subset(sys: &DecisionSystem, text: &str) -> Result<AttributeSet, Failure> {
    let names: Vec<&str> = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    Ok(sys.attribute_set(&names)?)
}

fn run_config(command: &'static str, common: &Common, loaded: &Loaded) -> RunConfig {
    let c = &loaded.config;
    RunConfig {
        command,
        input: common.input.display().to_string(),
        decision: c.decision.clone(),
        missing_token: c.missing_token.clone(),
        missing_policy: c.missing_policy.to_string(),
        numeric: c.numeric_columns.clone(),
        bins: c.bins,
        encode: common.encode.as_str(),
        format: common.format.as_str(),
        subsets: None,
        measure: None,
        direction: None,
        k: None,
        seed: None,
        cap: None,
    }
}

fn header(config: RunConfig, sys: &DecisionSystem) -> Header {
    Header {
        schema_version: SCHEMA_VERSION,
        config,
        objects: sys.object_count(),
        conditional_attributes: names(sys, &sys.all_conditional()),
    }
}

fn render<T: serde::Serialize>(report: &T, csv: Option<String>) -> String {
    match csv {
        Some(text) => text,
        None => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
    }
}

fn wants_csv(common: &Common) -> bool {
    common.format == crate::args::Format::Csv
}

pub fn measure(common: &Common, subsets: &[String]) -> Result<Output, Failure> {
    let loaded = load(common)?;
    let sys = &loaded.sys;
    let sets: Vec<AttributeSet> = if subsets.is_empty() {
        let mut v: Vec<AttributeSet> = sys
            .conditional_indices()
            .map(|a| AttributeSet::from_indices([a]))
            .collect();
        v.push(sys.all_conditional());
        v
    } else {
        subsets
            .iter()
            .map(|s| parse_subset(sys, s))
            .collect::<Result<_, _>>()?
    };

    let mut config = run_config("measure", common, &loaded);
    config.subsets = Some(sets.iter().map(|s| names(sys, s)).collect());
    let report = MeasureReport {
        header: header(config, sys),
        rows: sets
            .iter()
            .map(|s| SubsetRow {
                subset: names(sys, s),
                values: DependencyProfile::of(sys, s).into(),
            })
            .collect(),
    };
    let csv = wants_csv(common).then(|| report.to_csv());
    Ok(Output {
        text: render(&report, csv),
        converged: true,
    })
}

pub fn select_cmd(
    common: &Common,
    measure: Measure,
    direction: Direction,
) -> Result<Output, Failure> {
    let loaded = load(common)?;
    let sys = &loaded.sys;
    let trace = select(sys, measure, direction);
    let mut config = run_config("select", common, &loaded);
    config.measure = Some(measure.to_string());
    config.direction = Some(direction.to_string());
    let report = SelectReport {
        header: header(config, sys),
        trace: Trace::new(sys, &trace),
    };
    let csv = wants_csv(common).then(|| report.to_csv());
    Ok(Output {
        text: render(&report, csv),
        converged: trace.converged,
    })
}

pub fn evaluate(
    common: &Common,
    subset: Option<&str>,
    measure: Measure,
    direction: Direction,
    k: usize,
    seed: u64,
) -> Result<Output, Failure> {
    let loaded = load(common)?;
    let sys = &loaded.sys;
    if k == 1 || k > sys.object_count() {
        return Err(Error::InvalidFolds {
            k,
            size: sys.object_count(),
        }
        .into());
    }
    let (attrs, trace) = match subset {
        Some(text) => (parse_subset(sys, text)?, None),
        None => {
            let t = select(sys, measure, direction);
            (t.result.clone(), Some(t))
        }
    };
    let metrics = if k == 0 {
        evaluate_resubstitution(sys, &attrs)
    } else {
        stratified_kfold(sys, &attrs, k, seed)?
    };

    let mut config = run_config("evaluate", common, &loaded);
    if subset.is_some() {
        config.subsets = Some(vec![names(sys, &attrs)]);
    }
    config.measure = Some(measure.to_string());
    if trace.is_some() {
        config.direction = Some(direction.to_string());
    }
    config.k = Some(k);
    config.seed = Some(seed);
    let report = EvaluateReport {
        header: header(config, sys),
        subset: names(sys, &attrs),
        selection: trace.as_ref().map(|t| Trace::new(sys, t)),
        dependency: DependencyProfile::of(sys, &attrs).into(),
        reaches_full: measure.evaluate(sys, &attrs)
            == measure.evaluate(sys, &sys.all_conditional()),
        metrics: (&metrics).into(),
    };
    let csv = wants_csv(common).then(|| report.to_csv());
    Ok(Output {
        text: render(&report, csv),
        converged: trace.is_none_or(|t| t.converged),
    })
}

pub fn oracle(
    common: &Common,
    measure: Option<Measure>,
    subsets: &[String],
    cap: usize,
) -> Result<Output, Failure> {
    let loaded = load(common)?;
    let sys = &loaded.sys;
    let checks: Vec<AttributeSet> = subsets
        .iter()
        .map(|s| parse_subset(sys, s))
        .collect::<Result<_, _>>()?;
    let measures: Vec<Measure> = measure.map_or(Measure::ALL.to_vec(), |m| vec![m]);

    let mut out = Vec::new();
    for m in measures {
        // everything is computed before anything is written
        let reducts = exhaustive_reducts(sys, m, cap)?;
        let bwd = backward_eliminate(sys, m);
        out.push(MeasureReducts {
            measure: m.to_string(),
            target: m.evaluate(sys, &sys.all_conditional()),
            reducts: reducts.iter().map(|r| names(sys, r)).collect(),
            backward: BackwardCheck {
                result: names(sys, &bwd.result),
                in_list: reducts.contains(&bwd.result),
            },
            checks: checks
                .iter()
                .map(|s| ReductCheck {
                    subset: names(sys, s),
                    is_reduct: is_reduct(sys, s, m),
                })
                .collect(),
        });
    }

    let mut config = run_config("oracle", common, &loaded);
    if !checks.is_empty() {
        config.subsets = Some(checks.iter().map(|s| names(sys, s)).collect());
    }
    config.measure = measure.map(|m| m.to_string());
    config.cap = Some(cap);
    let report = OracleReport {
        header: header(config, sys),
        measures: out,
    };
    let csv = wants_csv(common).then(|| report.to_csv());
    Ok(Output {
        text: render(&report, csv),
        converged: true,
    })
}
