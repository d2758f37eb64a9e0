//! Rough approximations, positive regions and the four dependency measures:
//! classical (positive-region share), relative (partition-count ratio),
//! direct (joint block count share) and expected confidence dependency
//! (majority mass share). All values are exact fractions.

use std::fmt;
use std::str::FromStr;

use crate::dataset::{AttributeSet, DecisionSystem};
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::partition::{partition_by, ContingencyTable, Partition};

pub type DependencyValue = Fraction;

/// Lower and upper approximation of a target set, plus their difference.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproximationResult {
    pub lower: Vec<usize>,
    pub upper: Vec<usize>,
    pub boundary: Vec<usize>,
}

impl ApproximationResult {
    /// The target is exact (definable) when the boundary is empty.
    pub fn is_definable(&self) -> bool {
        self.boundary.is_empty()
    }
}

pub fn approximate(
    system: &DecisionSystem,
    attrs: &AttributeSet,
    target: &[usize],
) -> Result<ApproximationResult> {
    let n = system.object_count();
    let mut in_target = vec![false; n];
    for &o in target {
        if o >= n {
            return Err(Error::ObjectOutOfRange { index: o, size: n });
        }
        in_target[o] = true;
    }
    let partition = partition_by(system, attrs);
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    for block in partition.blocks() {
        let hits = block.iter().filter(|&&o| in_target[o]).count();
        if hits == block.len() {
            lower.extend_from_slice(block);
        }
        if hits > 0 {
            upper.extend_from_slice(block);
        }
    }
    lower.sort_unstable();
    upper.sort_unstable();
    let boundary = upper
        .iter()
        .copied()
        .filter(|o| lower.binary_search(o).is_err())
        .collect();
    Ok(ApproximationResult {
        lower,
        upper,
        boundary,
    })
}

fn is_consistent(system: &DecisionSystem, block: &[usize]) -> bool {
    let d = system.decision_column();
    block.iter().all(|&o| d[o] == d[block[0]])
}

/// Objects in blocks of `partition` that meet a single decision class, ascending.
pub fn positive_region_of(system: &DecisionSystem, partition: &Partition) -> Vec<usize> {
    let mut pos: Vec<usize> = partition
        .blocks()
        .iter()
        .filter(|b| is_consistent(system, b))
        .flatten()
        .copied()
        .collect();
    pos.sort_unstable();
    pos
}

/// `POS_attrs(D)`: union of the lower approximations of all decision classes.
pub fn positive_region(system: &DecisionSystem, attrs: &AttributeSet) -> Vec<usize> {
    positive_region_of(system, &partition_by(system, attrs))
}

fn universe(system: &DecisionSystem) -> u64 {
    system.object_count() as u64
}

fn classical_of(system: &DecisionSystem, partition: &Partition) -> DependencyValue {
    Fraction::new(
        positive_region_of(system, partition).len() as u64,
        universe(system),
    )
}

fn joint_block_count(system: &DecisionSystem, partition: &Partition) -> u64 {
    partition
        .refine_by_column(system.decision_column())
        .block_count() as u64
}

fn relative_of(system: &DecisionSystem, partition: &Partition) -> DependencyValue {
    Fraction::new(
        partition.block_count() as u64,
        joint_block_count(system, partition),
    )
}

fn direct_of(system: &DecisionSystem, partition: &Partition) -> DependencyValue {
    Fraction::new(joint_block_count(system, partition), universe(system))
}

/// Sum over blocks of the largest decision-class count inside the block.
fn weighted_mass_of(system: &DecisionSystem, partition: &Partition) -> u64 {
    let d = system.decision_column();
    let classes = system.dictionary(system.decision_index()).len();
    let mut tally = vec![0u64; classes];
    let mut mass = 0;
    for block in partition.blocks() {
        tally.iter_mut().for_each(|t| *t = 0);
        for &o in block {
            tally[d[o] as usize] += 1;
        }
        mass += tally.iter().max().copied().unwrap_or(0);
    }
    mass
}

fn expected_confidence_of(system: &DecisionSystem, partition: &Partition) -> DependencyValue {
    Fraction::new(weighted_mass_of(system, partition), universe(system))
}

/// `|POS_attrs(D)| / |U|`.
pub fn classical_dependency(system: &DecisionSystem, attrs: &AttributeSet) -> DependencyValue {
    classical_of(system, &partition_by(system, attrs))
}

/// `|U/attrs| / |U/(attrs ∪ D)|`.
pub fn relative_dependency(system: &DecisionSystem, attrs: &AttributeSet) -> DependencyValue {
    relative_of(system, &partition_by(system, attrs))
}

/// `|U/(attrs ∪ D)| / |U|`.
pub fn direct_dependency(system: &DecisionSystem, attrs: &AttributeSet) -> DependencyValue {
    direct_of(system, &partition_by(system, attrs))
}

/// `Conf(C_row → D_col) = n_ij / |C_i|`.
pub fn confidence(table: &ContingencyTable, row: usize, col: usize) -> Result<DependencyValue> {
    if row >= table.rows() || col >= table.cols() {
        return Err(Error::CellOutOfRange {
            row,
            col,
            rows: table.rows(),
            cols: table.cols(),
        });
    }
    Ok(Fraction::new(table.count(row, col), table.row_sum(row)))
}

/// Total weighted confidence mass: `Σ |X|·max_Y Conf(X → Y)`, which is the
/// integer `Σ max_Y |X ∩ Y|`.
pub fn weighted_confidence_mass(system: &DecisionSystem, attrs: &AttributeSet) -> u64 {
    weighted_mass_of(system, &partition_by(system, attrs))
}

/// Expected confidence dependency: weighted confidence mass over `|U|`.
pub fn expected_confidence_dependency(
    system: &DecisionSystem,
    attrs: &AttributeSet,
) -> DependencyValue {
    expected_confidence_of(system, &partition_by(system, attrs))
}

/// ECD read straight off a contingency table: `Σ_i max_j n_ij / Σ n_ij`.
pub fn ecd_from_contingency(table: &ContingencyTable) -> Result<DependencyValue> {
    table.check()?;
    let mass: u64 = (0..table.rows()).map(|i| table.row_max(i)).sum();
    Ok(Fraction::new(mass, table.total()))
}

/// Dependency measure selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Measure {
    Cla,
    Rel,
    Dir,
    Ecd,
}

impl Measure {
    pub const ALL: [Measure; 4] = [Measure::Cla, Measure::Rel, Measure::Dir, Measure::Ecd];

    pub fn id(self) -> &'static str {
        match self {
            Measure::Cla => "cla",
            Measure::Rel => "rel",
            Measure::Dir => "dir",
            Measure::Ecd => "ecd",
        }
    }

    /// Monotone under attribute-set inclusion (classical and ECD).
    pub fn is_monotone(self) -> bool {
        matches!(self, Measure::Cla | Measure::Ecd)
    }

    pub fn evaluate(self, system: &DecisionSystem, attrs: &AttributeSet) -> DependencyValue {
        self.evaluate_partition(system, &partition_by(system, attrs))
    }

    /// Evaluates the measure on an already computed `U/R`.
    pub fn evaluate_partition(
        self,
        system: &DecisionSystem,
        partition: &Partition,
    ) -> DependencyValue {
        match self {
            Measure::Cla => classical_of(system, partition),
            Measure::Rel => relative_of(system, partition),
            Measure::Dir => direct_of(system, partition),
            Measure::Ecd => expected_confidence_of(system, partition),
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Measure {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "cla" => Ok(Measure::Cla),
            "rel" => Ok(Measure::Rel),
            "dir" => Ok(Measure::Dir),
            "ecd" | "exp" => Ok(Measure::Ecd),
            other => Err(format!(
                "unknown measure `{other}` (expected cla|rel|dir|ecd)"
            )),
        }
    }
}

/// All four measures of one attribute subset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DependencyProfile {
    pub cla: DependencyValue,
    pub rel: DependencyValue,
    pub dir: DependencyValue,
    pub ecd: DependencyValue,
}

impl DependencyProfile {
    pub fn of(system: &DecisionSystem, attrs: &AttributeSet) -> Self {
        let p = partition_by(system, attrs);
        DependencyProfile {
            cla: classical_of(system, &p),
            rel: relative_of(system, &p),
            dir: direct_of(system, &p),
            ecd: expected_confidence_of(system, &p),
        }
    }

    pub fn get(&self, measure: Measure) -> DependencyValue {
        match measure {
            Measure::Cla => self.cla,
            Measure::Rel => self.rel,
            Measure::Dir => self.dir,
            Measure::Ecd => self.ecd,
        }
    }
}
