//! Brute-force reference implementations and random decision systems.
//!
//! Everything here works object by object straight from the definitions
//! (pairwise indiscernibility, per-object lower approximation membership)
//! and never calls the partition or measure code it is used to check.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, RngExt};
use roughdep_core::dataset::{
    AttributeDescriptor, AttributeKind, AttributeRole, AttributeSet, DecisionSystem, Dictionary,
};
use roughdep_core::Fraction;

pub mod theorems;

pub struct Shape {
    pub max_objects: usize,
    pub max_conditional: usize,
    pub max_values: u32,
    pub max_classes: u32,
}

pub const SMALL: Shape = Shape {
    max_objects: 30,
    max_conditional: 6,
    max_values: 4,
    max_classes: 4,
};

pub fn random_system<R: Rng + ?Sized>(rng: &mut R, shape: &Shape) -> DecisionSystem {
    let n = rng.random_range(1..=shape.max_objects);
    let c = rng.random_range(1..=shape.max_conditional);
    let mut attributes = Vec::new();
    let mut columns = Vec::new();
    let mut dictionaries = Vec::new();
    for a in 0..=c {
        let decision = a == c;
        let k = if decision {
            rng.random_range(1..=shape.max_classes)
        } else {
            rng.random_range(1..=shape.max_values)
        };
        attributes.push(AttributeDescriptor {
            name: if decision {
                "d".to_owned()
            } else {
                format!("a{a}")
            },
            kind: AttributeKind::Categorical,
            role: if decision {
                AttributeRole::Decision
            } else {
                AttributeRole::Conditional
            },
        });
        columns.push((0..n).map(|_| rng.random_range(0..k)).collect::<Vec<u32>>());
        dictionaries.push(Dictionary::from_values((0..k).map(|v| format!("v{v}"))));
    }
    DecisionSystem::from_columns(attributes, columns, dictionaries, "?")
        .expect("generated system is valid")
}

pub fn random_subset<R: Rng + ?Sized>(rng: &mut R, sys: &DecisionSystem) -> AttributeSet {
    sys.conditional_indices()
        .filter(|_| rng.random_bool(0.5))
        .collect()
}

pub fn random_permutation<R: Rng + ?Sized>(rng: &mut R, size: usize) -> Vec<u32> {
    let mut p: Vec<u32> = (0..size as u32).collect();
    p.shuffle(rng);
    p
}

pub fn indiscernible(sys: &DecisionSystem, attrs: &AttributeSet, x: usize, y: usize) -> bool {
    attrs.iter().all(|a| sys.value(x, a) == sys.value(y, a))
}

fn indiscernible_with_decision(
    sys: &DecisionSystem,
    attrs: &AttributeSet,
    x: usize,
    y: usize,
) -> bool {
    indiscernible(sys, attrs, x, y) && sys.decision_value(x) == sys.decision_value(y)
}

/// `[x]_attrs` by scanning every object.
pub fn class_of(sys: &DecisionSystem, attrs: &AttributeSet, x: usize) -> Vec<usize> {
    (0..sys.object_count())
        .filter(|&y| indiscernible(sys, attrs, x, y))
        .collect()
}

/// Blocks of `U/attrs`, each ascending, ordered by smallest member.
pub fn blocks(sys: &DecisionSystem, attrs: &AttributeSet) -> Vec<Vec<usize>> {
    (0..sys.object_count())
        .filter(|&x| (0..x).all(|y| !indiscernible(sys, attrs, x, y)))
        .map(|x| class_of(sys, attrs, x))
        .collect()
}

fn count_classes(n: usize, same: impl Fn(usize, usize) -> bool) -> u64 {
    (0..n).filter(|&x| (0..x).all(|y| !same(x, y))).count() as u64
}

pub fn lower(sys: &DecisionSystem, attrs: &AttributeSet, target: &[usize]) -> Vec<usize> {
    (0..sys.object_count())
        .filter(|&u| class_of(sys, attrs, u).iter().all(|y| target.contains(y)))
        .collect()
}

pub fn upper(sys: &DecisionSystem, attrs: &AttributeSet, target: &[usize]) -> Vec<usize> {
    (0..sys.object_count())
        .filter(|&u| class_of(sys, attrs, u).iter().any(|y| target.contains(y)))
        .collect()
}

pub fn decision_classes(sys: &DecisionSystem) -> Vec<Vec<usize>> {
    blocks_by(sys.object_count(), |x, y| {
        sys.decision_value(x) == sys.decision_value(y)
    })
}

fn blocks_by(n: usize, same: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    (0..n)
        .filter(|&x| (0..x).all(|y| !same(x, y)))
        .map(|x| (0..n).filter(|&y| same(x, y)).collect())
        .collect()
}

/// Union of the lower approximations of the decision classes.
pub fn positive_region(sys: &DecisionSystem, attrs: &AttributeSet) -> Vec<usize> {
    let mut pos: Vec<usize> = decision_classes(sys)
        .iter()
        .flat_map(|class| lower(sys, attrs, class))
        .collect();
    pos.sort_unstable();
    pos
}

pub fn cla(sys: &DecisionSystem, attrs: &AttributeSet) -> Fraction {
    Fraction::new(
        positive_region(sys, attrs).len() as u64,
        sys.object_count() as u64,
    )
}

pub fn rel(sys: &DecisionSystem, attrs: &AttributeSet) -> Fraction {
    let n = sys.object_count();
    Fraction::new(
        count_classes(n, |x, y| indiscernible(sys, attrs, x, y)),
        count_classes(n, |x, y| indiscernible_with_decision(sys, attrs, x, y)),
    )
}

pub fn dir(sys: &DecisionSystem, attrs: &AttributeSet) -> Fraction {
    let n = sys.object_count();
    Fraction::new(
        count_classes(n, |x, y| indiscernible_with_decision(sys, attrs, x, y)),
        n as u64,
    )
}

/// Majority count per block, summed: for each block, the largest number of
/// members sharing one decision label.
pub fn majority_mass(sys: &DecisionSystem, attrs: &AttributeSet) -> u64 {
    blocks(sys, attrs)
        .iter()
        .map(|b| {
            b.iter()
                .map(|&x| {
                    b.iter()
                        .filter(|&&y| sys.decision_value(y) == sys.decision_value(x))
                        .count()
                })
                .max()
                .unwrap_or(0) as u64
        })
        .sum()
}

pub fn ecd(sys: &DecisionSystem, attrs: &AttributeSet) -> Fraction {
    Fraction::new(majority_mass(sys, attrs), sys.object_count() as u64)
}

/// `n_ij` for blocks of `U/attrs` against decision classes, both ordered by
/// smallest member.
pub fn counts(sys: &DecisionSystem, attrs: &AttributeSet) -> Vec<Vec<u64>> {
    let rows = blocks(sys, attrs);
    let cols = decision_classes(sys);
    rows.iter()
        .map(|r| {
            cols.iter()
                .map(|c| r.iter().filter(|x| c.contains(x)).count() as u64)
                .collect()
        })
        .collect()
}

/// All subsets of `C` reaching `target`, minimal under inclusion, by brute force.
pub fn minimal_reducts(
    sys: &DecisionSystem,
    measure: impl Fn(&DecisionSystem, &AttributeSet) -> Fraction,
) -> Vec<AttributeSet> {
    let cond: Vec<usize> = sys.conditional_indices().collect();
    let target = measure(sys, &sys.all_conditional());
    let subsets: Vec<AttributeSet> = (0..1usize << cond.len())
        .map(|m| {
            (0..cond.len())
                .filter(|i| m >> i & 1 == 1)
                .map(|i| cond[i])
                .collect()
        })
        .collect();
    let hits: Vec<&AttributeSet> = subsets
        .iter()
        .filter(|s| measure(sys, s) == target)
        .collect();
    let mut minimal: Vec<AttributeSet> = hits
        .iter()
        .filter(|s| !hits.iter().any(|t| t.len() < s.len() && t.is_subset(s)))
        .map(|s| (*s).clone())
        .collect();
    minimal.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.as_slice().cmp(b.as_slice()))
    });
    minimal
}
