//! Greedy reduct search over any dependency measure, plus an exhaustive
//! enumeration of minimal reducts used to check the greedy results.

use std::fmt;
use std::str::FromStr;

use crate::dataset::{AttributeSet, DecisionSystem};
use crate::error::{Error, Result};
use crate::measures::{DependencyValue, Measure};
use crate::partition::{partition_by, Partition};

pub const DEFAULT_REDUCT_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        })
    }
}

impl FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "forward" => Ok(Direction::Forward),
            "backward" => Ok(Direction::Backward),
            other => Err(format!(
                "unknown direction `{other}` (expected forward|backward)"
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Action {
    Added,
    Removed,
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Action::Added => "added",
            Action::Removed => "removed",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelectionStep {
    pub attr: usize,
    pub action: Action,
    /// Dependency of the working set after this step.
    pub value: DependencyValue,
}

/// Ordered record of one greedy run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelectionTrace {
    pub measure: Measure,
    pub direction: Direction,
    /// Working set before the first step: `∅` forward, `C` backward.
    pub initial: AttributeSet,
    pub initial_value: DependencyValue,
    pub steps: Vec<SelectionStep>,
    pub result: AttributeSet,
    /// `Dep(C, D)`.
    pub target: DependencyValue,
    pub converged: bool,
    pub warnings: Vec<String>,
}

impl SelectionTrace {
    /// Rebuilds the result by applying the steps to the initial set.
    pub fn replay(&self) -> AttributeSet {
        self.steps
            .iter()
            .fold(self.initial.clone(), |r, s| match s.action {
                Action::Added => r.with(s.attr),
                Action::Removed => r.without(s.attr),
            })
    }

    pub fn final_value(&self) -> DependencyValue {
        self.steps.last().map_or(self.initial_value, |s| s.value)
    }
}

/// Forward selection: starting from `∅`, each round adds the attribute
/// maximising `Dep(R ∪ {a})` (lowest index on ties), even when no candidate
/// improves on `Dep(R)`. Stops once `Dep(R) = Dep(C)` or `R = C`.
pub fn forward_select(system: &DecisionSystem, measure: Measure) -> SelectionTrace {
    let all = system.all_conditional();
    let target = measure.evaluate(system, &all);
    let mut current = AttributeSet::empty();
    let mut partition = Partition::whole(system.object_count());
    let initial_value = measure.evaluate_partition(system, &partition);
    let mut value = initial_value;
    let mut steps = Vec::new();

    while value != target && current.len() < all.len() {
        let mut best: Option<(usize, DependencyValue, Partition)> = None;
        for a in all.iter().filter(|&a| !current.contains(a)) {
            let candidate = partition.refine_by_column(system.column(a));
            let v = measure.evaluate_partition(system, &candidate);
            if best.as_ref().is_none_or(|(_, bv, _)| v > *bv) {
                best = Some((a, v, candidate));
            }
        }
        let (attr, v, p) = best.expect("at least one candidate while R != C");
        current = current.with(attr);
        partition = p;
        value = v;
        steps.push(SelectionStep {
            attr,
            action: Action::Added,
            value,
        });
    }

    let converged = value == target;
    let mut warnings = Vec::new();
    if !converged {
        warnings.push(format!(
            "forward selection exhausted C without reaching Dep(C) = {target}; `{measure}` is not monotone"
        ));
    }
    SelectionTrace {
        measure,
        direction: Direction::Forward,
        initial: AttributeSet::empty(),
        initial_value,
        steps,
        result: current,
        target,
        converged,
        warnings,
    }
}

/// Backward elimination: starting from `C`, scans the working set in
/// descending index order and drops the first attribute whose removal keeps
/// `Dep(R \ {a}) = Dep(C)`, then rescans. Stops after a scan removes nothing.
pub fn backward_eliminate(system: &DecisionSystem, measure: Measure) -> SelectionTrace {
    let all = system.all_conditional();
    let target = measure.evaluate(system, &all);
    let mut current = all.clone();
    let mut steps = Vec::new();

    loop {
        let removable = current.iter().rev().find_map(|a| {
            let reduced = current.without(a);
            let v = measure.evaluate(system, &reduced);
            (v == target).then_some((a, v))
        });
        match removable {
            Some((attr, value)) => {
                current = current.without(attr);
                steps.push(SelectionStep {
                    attr,
                    action: Action::Removed,
                    value,
                });
            }
            None => break,
        }
    }

    let mut warnings = Vec::new();
    if !measure.is_monotone() {
        warnings.push(format!(
            "`{measure}` is not monotone; the result is only checked against single-attribute removals"
        ));
        if !is_reduct(system, &current, measure) {
            warnings.push("result fails the single-removal reduct check".to_owned());
        }
    }
    let converged = measure.evaluate(system, &current) == target;
    SelectionTrace {
        measure,
        direction: Direction::Backward,
        initial: all,
        initial_value: target,
        steps,
        result: current,
        target,
        converged,
        warnings,
    }
}

pub fn select(system: &DecisionSystem, measure: Measure, direction: Direction) -> SelectionTrace {
    match direction {
        Direction::Forward => forward_select(system, measure),
        Direction::Backward => backward_eliminate(system, measure),
    }
}

/// `Dep(subset) = Dep(C)` and every single-attribute removal strictly lowers
/// the value. For cla and ecd this is exactly minimality.
pub fn is_reduct(system: &DecisionSystem, subset: &AttributeSet, measure: Measure) -> bool {
    let target = measure.evaluate(system, &system.all_conditional());
    measure.evaluate(system, subset) == target
        && subset
            .iter()
            .all(|a| measure.evaluate(system, &subset.without(a)) < target)
}

/// Every subset `S ⊆ C` with `Dep(S) = Dep(C)` none of whose proper subsets
/// reaches `Dep(C)`, ordered by size then lexicographically.
pub fn exhaustive_reducts(
    system: &DecisionSystem,
    measure: Measure,
    max_attrs: usize,
) -> Result<Vec<AttributeSet>> {
    let cond: Vec<usize> = system.conditional_indices().collect();
    let k = cond.len();
    if k > max_attrs || k >= usize::BITS as usize {
        return Err(Error::CapExceeded {
            count: k,
            cap: max_attrs,
        });
    }
    let target = measure.evaluate(system, &system.all_conditional());
    let subset_of = |mask: usize| -> AttributeSet {
        (0..k)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| cond[i])
            .collect()
    };

    let size = 1usize << k;
    let mut attains = vec![false; size];
    // depth-first over masks, each child refining its parent's partition by
    // one attribute with a higher bit than any already present
    let mut stack = vec![(0usize, 0usize, partition_by(system, &AttributeSet::empty()))];
    while let Some((mask, next_bit, p)) = stack.pop() {
        attains[mask] = measure.evaluate_partition(system, &p) == target;
        for (i, &attr) in cond.iter().enumerate().skip(next_bit) {
            stack.push((
                mask | 1 << i,
                i + 1,
                p.refine_by_column(system.column(attr)),
            ));
        }
    }
    // below[mask]: some proper subset of mask attains the target
    let mut below = vec![false; size];
    for mask in 1..size {
        below[mask] = (0..k).filter(|i| mask >> i & 1 == 1).any(|i| {
            let sub = mask & !(1 << i);
            attains[sub] || below[sub]
        });
    }

    let mut reducts: Vec<AttributeSet> = (0..size)
        .filter(|&m| attains[m] && !below[m])
        .map(subset_of)
        .collect();
    reducts.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.as_slice().cmp(b.as_slice()))
    });
    Ok(reducts)
}
