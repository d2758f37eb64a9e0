//! Block-majority classification and its evaluation protocols.

use std::collections::{BTreeSet, HashMap};

use num_rational::Ratio;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dataset::{AttributeSet, DecisionSystem};
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::partition::partition_by;

/// Predicts, for each conditional signature seen in training, the majority
/// decision of its block. Unseen signatures get the global majority.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MajorityModel {
    pub attrs: AttributeSet,
    pub rules: HashMap<Vec<u32>, u32>,
    pub fallback: u32,
}

/// Label with the largest count, smallest id on ties.
fn majority_label(counts: &HashMap<u32, u64>) -> u32 {
    counts
        .iter()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)))
        .map(|(&label, _)| label)
        .expect("non-empty block")
}

pub fn train_majority(system: &DecisionSystem, attrs: &AttributeSet) -> MajorityModel {
    let partition = partition_by(system, attrs);
    let decisions = system.decision_column();
    let mut rules = HashMap::with_capacity(partition.block_count());
    for block in partition.blocks() {
        let mut counts = HashMap::new();
        for &o in block {
            *counts.entry(decisions[o]).or_insert(0u64) += 1;
        }
        let signature = attrs.iter().map(|a| system.value(block[0], a)).collect();
        rules.insert(signature, majority_label(&counts));
    }
    let mut global = HashMap::new();
    for &d in decisions {
        *global.entry(d).or_insert(0u64) += 1;
    }
    MajorityModel {
        attrs: attrs.clone(),
        rules,
        fallback: majority_label(&global),
    }
}

impl MajorityModel {
    /// Classifies a full-width row of value ids.
    pub fn predict(&self, row: &[u32]) -> Result<u32> {
        let signature = self
            .attrs
            .iter()
            .map(|a| {
                row.get(a).copied().ok_or(Error::MissingValue {
                    needed: a,
                    found: row.len(),
                })
            })
            .collect::<Result<Vec<u32>>>()?;
        Ok(self.rules.get(&signature).copied().unwrap_or(self.fallback))
    }

    pub fn predict_object(&self, system: &DecisionSystem, object: usize) -> u32 {
        let signature: Vec<u32> = self.attrs.iter().map(|a| system.value(object, a)).collect();
        self.rules.get(&signature).copied().unwrap_or(self.fallback)
    }
}

pub fn predict(model: &MajorityModel, row: &[u32]) -> Result<u32> {
    model.predict(row)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassMetrics {
    pub label: u32,
    pub name: String,
    pub precision: Fraction,
    pub recall: Fraction,
    pub f1: Fraction,
    pub support: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Protocol {
    /// Fold count; 0 stands for resubstitution.
    pub k: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EvaluationMetrics {
    pub accuracy: Fraction,
    /// Support-weighted averages over classes.
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub per_class: Vec<ClassMetrics>,
    pub total: u64,
    pub correct: u64,
    /// Per-class precision/recall cells whose denominator was zero (set to 0).
    pub undefined_cells: usize,
    pub protocol: Option<Protocol>,
}

fn weighted(parts: impl Iterator<Item = (u64, Fraction)>, total: u64) -> f64 {
    let sum = parts.fold(Ratio::<u128>::zero(), |acc, (w, f)| {
        acc + Ratio::new(w as u128 * f.numer() as u128, f.denom() as u128)
    });
    let mean = sum / Ratio::from_integer(total as u128);
    match (u64::try_from(*mean.numer()), u64::try_from(*mean.denom())) {
        (Ok(n), Ok(d)) => Fraction::new(n, d).to_f64(),
        _ => *mean.numer() as f64 / *mean.denom() as f64,
    }
}

/// Per-class and support-weighted precision, recall and F1 over paired
/// predictions and truths.
pub fn confusion_metrics(predictions: &[u32], truths: &[u32]) -> Result<EvaluationMetrics> {
    if predictions.len() != truths.len() {
        return Err(Error::LengthMismatch {
            predictions: predictions.len(),
            truths: truths.len(),
        });
    }
    if truths.is_empty() {
        return Err(Error::EmptyInput);
    }
    let labels: BTreeSet<u32> = predictions.iter().chain(truths).copied().collect();
    let total = truths.len() as u64;
    let correct = predictions
        .iter()
        .zip(truths)
        .filter(|(p, t)| p == t)
        .count() as u64;
    let mut undefined_cells = 0;
    let mut per_class = Vec::with_capacity(labels.len());
    for &label in &labels {
        let mut tp = 0u64;
        let mut fp = 0u64;
        let mut fneg = 0u64;
        for (&p, &t) in predictions.iter().zip(truths) {
            match (p == label, t == label) {
                (true, true) => tp += 1,
                (true, false) => fp += 1,
                (false, true) => fneg += 1,
                _ => {}
            }
        }
        let ratio = |num: u64, den: u64, undefined: &mut usize| {
            if den == 0 {
                *undefined += 1;
                Fraction::zero()
            } else {
                Fraction::new(num, den)
            }
        };
        let precision = ratio(tp, tp + fp, &mut undefined_cells);
        let recall = ratio(tp, tp + fneg, &mut undefined_cells);
        // 2PR/(P+R) = 2TP/(2TP+FP+FN); zero when TP = 0
        let f1 = if tp == 0 {
            Fraction::zero()
        } else {
            Fraction::new(2 * tp, 2 * tp + fp + fneg)
        };
        per_class.push(ClassMetrics {
            label,
            name: label.to_string(),
            precision,
            recall,
            f1,
            support: tp + fneg,
        });
    }
    Ok(EvaluationMetrics {
        accuracy: Fraction::new(correct, total),
        precision: weighted(per_class.iter().map(|c| (c.support, c.precision)), total),
        recall: weighted(per_class.iter().map(|c| (c.support, c.recall)), total),
        f1: weighted(per_class.iter().map(|c| (c.support, c.f1)), total),
        per_class,
        total,
        correct,
        undefined_cells,
        protocol: None,
    })
}

fn name_classes(system: &DecisionSystem, metrics: &mut EvaluationMetrics) {
    let dict = system.dictionary(system.decision_index());
    for c in &mut metrics.per_class {
        if let Some(name) = dict.get(c.label) {
            c.name = name.to_owned();
        }
    }
}

/// Trains on the whole system and scores on the same objects.
pub fn evaluate_resubstitution(system: &DecisionSystem, attrs: &AttributeSet) -> EvaluationMetrics {
    let model = train_majority(system, attrs);
    let predictions: Vec<u32> = (0..system.object_count())
        .map(|o| model.predict_object(system, o))
        .collect();
    let mut metrics =
        confusion_metrics(&predictions, system.decision_column()).expect("non-empty universe");
    name_classes(system, &mut metrics);
    metrics.protocol = Some(Protocol { k: 0, seed: 0 });
    metrics
}

/// Fold id for every object. Classes are visited in decision-id order; the
/// members of each class are shuffled with one ChaCha8 stream seeded by
/// `seed` and dealt round-robin, the fold counter carrying over between
/// classes.
pub fn stratified_folds(system: &DecisionSystem, k: usize, seed: u64) -> Result<Vec<usize>> {
    let n = system.object_count();
    if k < 2 || k > n {
        return Err(Error::InvalidFolds { k, size: n });
    }
    let decisions = system.decision_column();
    let classes: BTreeSet<u32> = decisions.iter().copied().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fold_of = vec![0usize; n];
    let mut next = 0usize;
    for class in classes {
        let mut members: Vec<usize> = (0..n).filter(|&o| decisions[o] == class).collect();
        members.shuffle(&mut rng);
        for o in members {
            fold_of[o] = next;
            next = (next + 1) % k;
        }
    }
    Ok(fold_of)
}

/// Stratified k-fold evaluation of the block-majority classifier. Test
/// predictions from all folds are pooled before scoring.
pub fn stratified_kfold(
    system: &DecisionSystem,
    attrs: &AttributeSet,
    k: usize,
    seed: u64,
) -> Result<EvaluationMetrics> {
    let folds = stratified_folds(system, k, seed)?;
    let n = system.object_count();
    let mut predictions = Vec::with_capacity(n);
    let mut truths = Vec::with_capacity(n);
    for fold in 0..k {
        let train: Vec<usize> = (0..n).filter(|&o| folds[o] != fold).collect();
        let test: Vec<usize> = (0..n).filter(|&o| folds[o] == fold).collect();
        if test.is_empty() {
            continue;
        }
        let model = train_majority(&system.subsystem(&train)?, attrs);
        for o in test {
            predictions.push(model.predict_object(system, o));
            truths.push(system.decision_value(o));
        }
    }
    let mut metrics = confusion_metrics(&predictions, &truths)?;
    name_classes(system, &mut metrics);
    metrics.protocol = Some(Protocol { k, seed });
    Ok(metrics)
}
