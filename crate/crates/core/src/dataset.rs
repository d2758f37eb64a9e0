//! Decision systems: construction from tabular data and the value-level
//! transforms (discretization, one-hot recoding, relabeling, splitting).
//!
//! A [`DecisionSystem`] is immutable. Every transform returns a new system and
//! leaves its input untouched.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::io::Read;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AttributeKind {
    Categorical,
    Numeric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AttributeRole {
    Conditional,
    Decision,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttributeDescriptor {
    pub name: String,
    pub kind: AttributeKind,
    pub role: AttributeRole,
}

/// Bijection between raw values of one attribute and dense ids `0..len`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Dictionary {
    values: Vec<String>,
    index: HashMap<String, u32>,
}

impl Dictionary {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_values<I, S>(values: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut dict = Dictionary::new();
        for v in values {
            dict.intern(&v.into());
        }
        dict
    }

    /// Returns the id of `value`, assigning the next free id on first sight.
    pub fn intern(&mut self, value: &str) -> u32 {
        if let Some(&id) = self.index.get(value) {
            return id;
        }
        let id = self.values.len() as u32;
        self.values.push(value.to_owned());
        self.index.insert(value.to_owned(), id);
        id
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, id: u32) -> Option<&str> {
        self.values.get(id as usize).map(String::as_str)
    }

    pub fn id_of(&self, value: &str) -> Option<u32> {
        self.index.get(value).copied()
    }

    pub fn values(&self) -> &[String] {
        &self.values
    }
}

/// Ascending, duplicate-free set of conditional attribute indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AttributeSet(Vec<usize>);

impl AttributeSet {
    pub fn empty() -> Self {
        AttributeSet(Vec::new())
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut v: Vec<usize> = indices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        AttributeSet(v)
    }

    pub fn with(&self, attr: usize) -> Self {
        let mut v = self.0.clone();
        if let Err(pos) = v.binary_search(&attr) {
            v.insert(pos, attr);
        }
        AttributeSet(v)
    }

    pub fn without(&self, attr: usize) -> Self {
        AttributeSet(self.0.iter().copied().filter(|&a| a != attr).collect())
    }

    pub fn contains(&self, attr: usize) -> bool {
        self.0.binary_search(&attr).is_ok()
    }

    pub fn is_subset(&self, other: &AttributeSet) -> bool {
        self.0.iter().all(|&a| other.contains(a))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl FromIterator<usize> for AttributeSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        AttributeSet::from_indices(iter)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MissingPolicy {
    /// The missing token is interned like any other value.
    #[default]
    OwnCategory,
    /// Rows holding the missing token in any column are dropped.
    DropRow,
}

impl FromStr for MissingPolicy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "own" | "own-category" => Ok(MissingPolicy::OwnCategory),
            "drop" | "drop-row" => Ok(MissingPolicy::DropRow),
            other => Err(format!(
                "unknown missing-value policy `{other}` (expected own|drop)"
            )),
        }
    }
}

impl fmt::Display for MissingPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MissingPolicy::OwnCategory => "own",
            MissingPolicy::DropRow => "drop",
        })
    }
}

pub const DEFAULT_BINS: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoadConfig {
    pub decision: String,
    pub missing_token: String,
    pub missing_policy: MissingPolicy,
    pub numeric_columns: Vec<String>,
    /// Bin count used when numeric columns are discretized after loading.
    pub bins: usize,
    pub delimiter: u8,
}

impl LoadConfig {
    pub fn new(decision: impl Into<String>) -> Self {
        LoadConfig {
            decision: decision.into(),
            missing_token: "?".to_owned(),
            missing_policy: MissingPolicy::OwnCategory,
            numeric_columns: Vec::new(),
            bins: DEFAULT_BINS,
            delimiter: b',',
        }
    }

    /// Parses a `key = value` config file. Blank lines and `#` comments are
    /// skipped. Recognised keys: decision, missing_token, missing_policy,
    /// numeric_columns (comma separated), bins, delimiter.
    pub fn parse_kv(text: &str) -> Result<LoadConfig> {
        let mut config = LoadConfig::new("");
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |reason: String| Error::Config {
                line: i + 1,
                reason,
            };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| bad("expected `key = value`".into()))?;
            let value = value.trim();
            match key.trim() {
                "decision" => config.decision = value.to_owned(),
                "missing_token" => config.missing_token = value.to_owned(),
                "missing_policy" => config.missing_policy = value.parse().map_err(bad)?,
                "numeric_columns" => {
                    config.numeric_columns = value
                        .split(',')
                        .map(str::trim)
                        .filter(|s| !s.is_empty())
                        .map(str::to_owned)
                        .collect()
                }
                "bins" => {
                    config.bins = value
                        .parse()
                        .map_err(|_| bad(format!("bins must be an integer, got `{value}`")))?
                }
                "delimiter" => {
                    let bytes = value.as_bytes();
                    if bytes.len() != 1 {
                        return Err(bad("delimiter must be a single byte".into()));
                    }
                    config.delimiter = bytes[0];
                }
                other => return Err(bad(format!("unknown key `{other}`"))),
            }
        }
        if config.decision.is_empty() {
            return Err(Error::Config {
                line: 0,
                reason: "missing `decision` key".into(),
            });
        }
        Ok(config)
    }
}

/// A universe of objects described by interned conditional attributes and a
/// single decision attribute. Values are stored column by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecisionSystem {
    attributes: Vec<AttributeDescriptor>,
    decision: usize,
    columns: Vec<Vec<u32>>,
    dictionaries: Vec<Dictionary>,
    missing_token: String,
}

impl DecisionSystem {
    /// Assembles a system from already interned columns, checking every
    /// structural invariant.
    pub fn from_columns(
        attributes: Vec<AttributeDescriptor>,
        columns: Vec<Vec<u32>>,
        dictionaries: Vec<Dictionary>,
        missing_token: impl Into<String>,
    ) -> Result<Self> {
        if attributes.len() < 2
            || columns.len() != attributes.len()
            || dictionaries.len() != attributes.len()
        {
            return Err(Error::TooFewColumns);
        }
        let decisions: Vec<usize> = attributes
            .iter()
            .enumerate()
            .filter(|(_, a)| a.role == AttributeRole::Decision)
            .map(|(i, _)| i)
            .collect();
        if decisions.len() != 1 {
            return Err(Error::TooFewColumns);
        }
        let mut seen = HashSet::new();
        for a in &attributes {
            if !seen.insert(a.name.as_str()) {
                return Err(Error::DuplicateColumn(a.name.clone()));
            }
        }
        let n = columns[0].len();
        if n == 0 {
            return Err(Error::EmptyTable);
        }
        for (i, col) in columns.iter().enumerate() {
            if col.len() != n {
                return Err(Error::RaggedRow {
                    row: 0,
                    expected: n,
                    found: col.len(),
                });
            }
            let limit = dictionaries[i].len() as u32;
            if col.iter().any(|&v| v >= limit) {
                return Err(Error::AttributeOutOfRange(i));
            }
        }
        Ok(DecisionSystem {
            attributes,
            decision: decisions[0],
            columns,
            dictionaries,
            missing_token: missing_token.into(),
        })
    }

    /// Builds a system from raw string records, interning values in
    /// first-appearance order. Columns named in `numeric` must parse as
    /// numbers (the missing token excepted).
    pub fn from_records(
        header: &[String],
        records: &[Vec<String>],
        decision: &str,
        numeric: &[String],
        missing_token: &str,
    ) -> Result<Self> {
        if header.len() < 2 {
            return Err(Error::TooFewColumns);
        }
        let decision_index = header
            .iter()
            .position(|h| h == decision)
            .ok_or_else(|| Error::UnknownColumn(decision.to_owned()))?;
        for name in numeric {
            if !header.contains(name) {
                return Err(Error::UnknownColumn(name.clone()));
            }
        }
        if records.is_empty() {
            return Err(Error::EmptyTable);
        }
        let attributes: Vec<AttributeDescriptor> = header
            .iter()
            .enumerate()
            .map(|(i, name)| AttributeDescriptor {
                name: name.clone(),
                kind: if numeric.contains(name) {
                    AttributeKind::Numeric
                } else {
                    AttributeKind::Categorical
                },
                role: if i == decision_index {
                    AttributeRole::Decision
                } else {
                    AttributeRole::Conditional
                },
            })
            .collect();
        let mut columns = vec![Vec::with_capacity(records.len()); header.len()];
        let mut dictionaries = vec![Dictionary::new(); header.len()];
        for (r, record) in records.iter().enumerate() {
            if record.len() != header.len() {
                return Err(Error::RaggedRow {
                    row: r + 1,
                    expected: header.len(),
                    found: record.len(),
                });
            }
            for (c, value) in record.iter().enumerate() {
                if attributes[c].kind == AttributeKind::Numeric
                    && value != missing_token
                    && value.parse::<f64>().is_err()
                {
                    return Err(Error::NumericParse {
                        column: header[c].clone(),
                        row: r + 1,
                        value: value.clone(),
                    });
                }
                columns[c].push(dictionaries[c].intern(value));
            }
        }
        DecisionSystem::from_columns(attributes, columns, dictionaries, missing_token)
    }

    pub fn object_count(&self) -> usize {
        self.columns[0].len()
    }

    pub fn attribute_count(&self) -> usize {
        self.attributes.len()
    }

    pub fn attributes(&self) -> &[AttributeDescriptor] {
        &self.attributes
    }

    pub fn attribute(&self, index: usize) -> &AttributeDescriptor {
        &self.attributes[index]
    }

    pub fn decision_index(&self) -> usize {
        self.decision
    }

    pub fn missing_token(&self) -> &str {
        &self.missing_token
    }

    pub fn is_conditional(&self, index: usize) -> bool {
        index < self.attributes.len() && index != self.decision
    }

    pub fn conditional_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.attributes.len()).filter(move |&i| i != self.decision)
    }

    pub fn conditional_count(&self) -> usize {
        self.attributes.len() - 1
    }

    /// The full conditional set C.
    pub fn all_conditional(&self) -> AttributeSet {
        self.conditional_indices().collect()
    }

    pub fn column(&self, index: usize) -> &[u32] {
        &self.columns[index]
    }

    pub fn decision_column(&self) -> &[u32] {
        &self.columns[self.decision]
    }

    pub fn value(&self, object: usize, attr: usize) -> u32 {
        self.columns[attr][object]
    }

    pub fn decision_value(&self, object: usize) -> u32 {
        self.columns[self.decision][object]
    }

    pub fn dictionary(&self, index: usize) -> &Dictionary {
        &self.dictionaries[index]
    }

    /// Full-width row of value ids for one object.
    pub fn row(&self, object: usize) -> Vec<u32> {
        self.columns.iter().map(|c| c[object]).collect()
    }

    pub fn raw_value(&self, object: usize, attr: usize) -> &str {
        self.dictionaries[attr]
            .get(self.columns[attr][object])
            .expect("interned id within dictionary")
    }

    pub fn attribute_index(&self, name: &str) -> Option<usize> {
        self.attributes.iter().position(|a| a.name == name)
    }

    /// Resolves conditional attribute names into an [`AttributeSet`].
    pub fn attribute_set<S: AsRef<str>>(&self, names: &[S]) -> Result<AttributeSet> {
        names
            .iter()
            .map(|n| {
                let name = n.as_ref();
                match self.attribute_index(name) {
                    Some(i) if i == self.decision => Err(Error::DecisionAttribute(name.to_owned())),
                    Some(i) => Ok(i),
                    None => Err(Error::UnknownColumn(name.to_owned())),
                }
            })
            .collect()
    }

    pub fn attribute_names(&self, set: &AttributeSet) -> Vec<String> {
        set.iter()
            .map(|i| self.attributes[i].name.clone())
            .collect()
    }

    /// Panics unless every index of `set` is a conditional attribute.
    pub(crate) fn assert_conditional(&self, set: &AttributeSet) {
        for a in set.iter() {
            assert!(
                self.is_conditional(a),
                "attribute index {a} is not a conditional attribute of this system"
            );
        }
    }

    /// System restricted to `objects`, in the given order, sharing schema and
    /// dictionaries with `self`.
    pub fn subsystem(&self, objects: &[usize]) -> Result<DecisionSystem> {
        let n = self.object_count();
        if let Some(&bad) = objects.iter().find(|&&o| o >= n) {
            return Err(Error::ObjectOutOfRange {
                index: bad,
                size: n,
            });
        }
        if objects.is_empty() {
            return Err(Error::EmptyTable);
        }
        let columns = self
            .columns
            .iter()
            .map(|c| objects.iter().map(|&o| c[o]).collect())
            .collect();
        Ok(DecisionSystem {
            attributes: self.attributes.clone(),
            decision: self.decision,
            columns,
            dictionaries: self.dictionaries.clone(),
            missing_token: self.missing_token.clone(),
        })
    }

    /// Copy of the system with one cell replaced by an existing value id.
    pub fn with_value(&self, object: usize, attr: usize, id: u32) -> Result<DecisionSystem> {
        let n = self.object_count();
        if object >= n {
            return Err(Error::ObjectOutOfRange {
                index: object,
                size: n,
            });
        }
        if attr >= self.attributes.len() || id as usize >= self.dictionaries[attr].len() {
            return Err(Error::AttributeOutOfRange(attr));
        }
        let mut next = self.clone();
        next.columns[attr][object] = id;
        Ok(next)
    }
}

/// Reads a CSV table with a header row into a decision system.
pub fn load_csv<R: Read>(source: R, config: &LoadConfig) -> Result<DecisionSystem> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .delimiter(config.delimiter)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(source);
    let header: Vec<String> = reader.headers()?.iter().map(str::to_owned).collect();
    let mut records = Vec::new();
    for (r, record) in reader.records().enumerate() {
        let record = record?;
        if record.len() != header.len() {
            return Err(Error::RaggedRow {
                row: r + 1,
                expected: header.len(),
                found: record.len(),
            });
        }
        let fields: Vec<String> = record.iter().map(str::to_owned).collect();
        if config.missing_policy == MissingPolicy::DropRow && fields.contains(&config.missing_token)
        {
            continue;
        }
        records.push(fields);
    }
    DecisionSystem::from_records(
        &header,
        &records,
        &config.decision,
        &config.numeric_columns,
        &config.missing_token,
    )
}

/// Replaces a numeric conditional attribute by equal-frequency bin ids
/// `0..bins`. Boundaries are taken over non-missing values; a run of equal
/// values always lands in the bin of its first sorted position. Missing
/// values, if any, get the extra id `bins`.
pub fn discretize(system: &DecisionSystem, attr: usize, bins: usize) -> Result<DecisionSystem> {
    if attr >= system.attribute_count() {
        return Err(Error::AttributeOutOfRange(attr));
    }
    let desc = system.attribute(attr);
    if desc.role == AttributeRole::Decision {
        return Err(Error::DecisionAttribute(desc.name.clone()));
    }
    if desc.kind != AttributeKind::Numeric {
        return Err(Error::NotNumeric(desc.name.clone()));
    }
    if bins < 1 {
        return Err(Error::InvalidBins);
    }

    let n = system.object_count();
    let mut present: Vec<(f64, usize)> = Vec::with_capacity(n);
    let mut missing = Vec::new();
    for obj in 0..n {
        let raw = system.raw_value(obj, attr);
        if raw == system.missing_token() {
            missing.push(obj);
        } else {
            let v: f64 = raw.parse().map_err(|_| Error::NumericParse {
                column: desc.name.clone(),
                row: obj + 1,
                value: raw.to_owned(),
            })?;
            present.push((v, obj));
        }
    }
    present.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));

    let m = present.len();
    let mut column = vec![0u32; n];
    let mut ranges: Vec<Option<(usize, usize)>> = vec![None; bins];
    let mut start = 0;
    while start < m {
        let mut end = start;
        while end < m && present[end].0 == present[start].0 {
            end += 1;
        }
        let bin = start * bins / m;
        for &(_, obj) in &present[start..end] {
            column[obj] = bin as u32;
        }
        let entry = ranges[bin].get_or_insert((present[start].1, present[start].1));
        entry.1 = present[end - 1].1;
        start = end;
    }

    let mut dict = Dictionary::new();
    for (b, range) in ranges.iter().enumerate() {
        let label = match range {
            Some((lo, hi)) => format!(
                "[{},{}]",
                system.raw_value(*lo, attr),
                system.raw_value(*hi, attr)
            ),
            None => format!("(empty bin {b})"),
        };
        dict.intern(&label);
    }
    if !missing.is_empty() {
        let id = dict.intern(system.missing_token());
        for obj in missing {
            column[obj] = id;
        }
    }

    let mut next = system.clone();
    next.columns[attr] = column;
    next.dictionaries[attr] = dict;
    next.attributes[attr].kind = AttributeKind::Categorical;
    Ok(next)
}

/// Discretizes every numeric conditional attribute with the same bin count.
pub fn discretize_numeric(system: &DecisionSystem, bins: usize) -> Result<DecisionSystem> {
    let numeric: Vec<usize> = system
        .conditional_indices()
        .filter(|&i| system.attribute(i).kind == AttributeKind::Numeric)
        .collect();
    let mut current = system.clone();
    for attr in numeric {
        current = discretize(&current, attr, bins)?;
    }
    Ok(current)
}

/// Recodes every conditional attribute into one binary indicator per value
/// that occurs in it, named `attr=value`. The decision attribute is kept.
pub fn encode_onehot(system: &DecisionSystem) -> Result<DecisionSystem> {
    let mut attributes = Vec::new();
    let mut columns = Vec::new();
    let mut dictionaries = Vec::new();
    for (i, desc) in system.attributes().iter().enumerate() {
        if i == system.decision_index() {
            attributes.push(desc.clone());
            columns.push(system.column(i).to_vec());
            dictionaries.push(system.dictionary(i).clone());
            continue;
        }
        if desc.kind == AttributeKind::Numeric {
            return Err(Error::NumericConditional(desc.name.clone()));
        }
        let col = system.column(i);
        let occurring: BTreeSet<u32> = col.iter().copied().collect();
        for v in occurring {
            let label = system.dictionary(i).get(v).expect("interned id");
            attributes.push(AttributeDescriptor {
                name: format!("{}={}", desc.name, label),
                kind: AttributeKind::Categorical,
                role: AttributeRole::Conditional,
            });
            columns.push(col.iter().map(|&x| u32::from(x == v)).collect());
            dictionaries.push(Dictionary::from_values(["0", "1"]));
        }
    }
    DecisionSystem::from_columns(attributes, columns, dictionaries, system.missing_token())
}

/// Applies `bijection[old_id] = new_id` to one attribute's values.
pub fn relabel_attribute_values(
    system: &DecisionSystem,
    attr: usize,
    bijection: &[u32],
) -> Result<DecisionSystem> {
    if attr >= system.attribute_count() {
        return Err(Error::AttributeOutOfRange(attr));
    }
    let size = system.dictionary(attr).len();
    let mut hit = vec![false; size];
    let is_permutation = bijection.len() == size
        && bijection.iter().all(|&t| {
            let t = t as usize;
            t < size && !std::mem::replace(&mut hit[t], true)
        });
    if !is_permutation {
        return Err(Error::NotBijective(system.attribute(attr).name.clone()));
    }
    let mut next = system.clone();
    for v in next.columns[attr].iter_mut() {
        *v = bijection[*v as usize];
    }
    Ok(next)
}

/// Renames decision classes by a permutation of decision value ids.
pub fn permute_decision_labels(
    system: &DecisionSystem,
    permutation: &[u32],
) -> Result<DecisionSystem> {
    relabel_attribute_values(system, system.decision_index(), permutation)
}

/// Splits the universe into `subset` and its complement, both kept in
/// original object order.
pub fn split_universe(
    system: &DecisionSystem,
    subset: &[usize],
) -> Result<(DecisionSystem, DecisionSystem)> {
    let n = system.object_count();
    if let Some(&bad) = subset.iter().find(|&&o| o >= n) {
        return Err(Error::ObjectOutOfRange {
            index: bad,
            size: n,
        });
    }
    let chosen: BTreeSet<usize> = subset.iter().copied().collect();
    let first: Vec<usize> = chosen.iter().copied().collect();
    let second: Vec<usize> = (0..n).filter(|o| !chosen.contains(o)).collect();
    if first.is_empty() || second.is_empty() {
        return Err(Error::EmptySplit);
    }
    Ok((system.subsystem(&first)?, system.subsystem(&second)?))
}

const HIRING_HEADER: [&str; 6] = ["Exp", "Edu", "Test", "Comm", "Reloc", "Hire"];

const HIRING_ROWS: [[&str; 6]; 14] = [
    ["Junior", "Bachelors", "1", "2", "Yes", "Yes"],
    ["Senior", "Masters", "2", "1", "No", "Yes"],
    ["Mid", "Bachelors", "1", "1", "Yes", "Yes"],
    ["Junior", "HighSchool", "0", "1", "Yes", "No"],
    ["Senior", "Masters", "2", "2", "No", "Yes"],
    ["Mid", "Bachelors", "1", "1", "No", "No"],
    ["Junior", "HighSchool", "0", "0", "Yes", "No"],
    ["Mid", "Masters", "2", "2", "Yes", "Yes"],
    ["Senior", "Bachelors", "1", "0", "No", "No"],
    ["Mid", "HighSchool", "0", "2", "Yes", "No"],
    ["Junior", "Masters", "1", "2", "Yes", "Yes"],
    ["Senior", "Masters", "2", "2", "No", "No"],
    ["Mid", "Bachelors", "1", "0", "Yes", "No"],
    ["Senior", "HighSchool", "1", "1", "No", "No"],
];

/// The fourteen-applicant hiring table: conditional attributes Exp, Edu,
/// Test, Comm, Reloc and decision Hire, objects x1..x14 in order.
pub fn hiring_fixture() -> DecisionSystem {
    let header: Vec<String> = HIRING_HEADER.iter().map(|s| s.to_string()).collect();
    let records: Vec<Vec<String>> = HIRING_ROWS
        .iter()
        .map(|r| r.iter().map(|s| s.to_string()).collect())
        .collect();
    DecisionSystem::from_records(&header, &records, "Hire", &[], "?")
        .expect("fixture is well formed")
}

/// The hiring table rendered as CSV text.
pub fn hiring_csv() -> String {
    let mut out = HIRING_HEADER.join(",");
    out.push('\n');
    for row in HIRING_ROWS {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
