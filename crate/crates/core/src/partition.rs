//! Indiscernibility partitions and block-by-decision contingency tables.
//!
//! Blocks are always kept in canonical order: sorted by their smallest
//! member, members ascending. Refinement scans objects in index order and
//! numbers new blocks by first appearance, which yields that order directly.

use std::collections::HashMap;
use std::fmt::Write;

use crate::dataset::{AttributeSet, DecisionSystem};
use crate::error::{Error, Result};

/// A partition of the object indices `0..n` into non-empty blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    block_of: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// The single-block partition `{U}`.
    pub fn whole(size: usize) -> Self {
        Partition {
            block_of: vec![0; size],
            blocks: if size == 0 {
                Vec::new()
            } else {
                vec![(0..size).collect()]
            },
        }
    }

    /// Groups objects by equal labels; block ids follow first appearance.
    pub fn from_labels<K: std::hash::Hash + Eq>(labels: &[K]) -> Self {
        let mut ids: HashMap<&K, usize> = HashMap::new();
        let mut block_of = Vec::with_capacity(labels.len());
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (obj, key) in labels.iter().enumerate() {
            let next = blocks.len();
            let id = *ids.entry(key).or_insert(next);
            if id == next {
                blocks.push(Vec::new());
            }
            blocks[id].push(obj);
            block_of.push(id);
        }
        Partition { block_of, blocks }
    }

    pub fn universe_size(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, index: usize) -> &[usize] {
        &self.blocks[index]
    }

    /// Index of the block holding `object`.
    pub fn block_of(&self, object: usize) -> usize {
        self.block_of[object]
    }

    pub fn block_ids(&self) -> &[usize] {
        &self.block_of
    }

    /// Splits every block by the values of `column`. O(n).
    pub fn refine_by_column(&self, column: &[u32]) -> Partition {
        assert_eq!(
            column.len(),
            self.universe_size(),
            "column length differs from universe size"
        );
        let n = column.len();
        let card = column.iter().max().map_or(0, |&m| m as usize + 1);
        // a dense (block, value) table beats hashing unless it would be huge
        if self.blocks.len().saturating_mul(card) > 16 * n.max(64) {
            let keys: Vec<(usize, u32)> = self
                .block_of
                .iter()
                .copied()
                .zip(column.iter().copied())
                .collect();
            return Partition::from_labels(&keys);
        }
        let mut ids = vec![usize::MAX; self.blocks.len() * card];
        let mut block_of = Vec::with_capacity(n);
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (obj, (&b, &v)) in self.block_of.iter().zip(column).enumerate() {
            let slot = &mut ids[b * card + v as usize];
            if *slot == usize::MAX {
                *slot = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[*slot].push(obj);
            block_of.push(*slot);
        }
        Partition { block_of, blocks }
    }

    /// True when every block of `self` lies inside one block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.universe_size() == coarser.universe_size()
            && self.blocks.iter().all(|b| {
                let owner = coarser.block_of(b[0]);
                b.iter().all(|&o| coarser.block_of(o) == owner)
            })
    }

    /// One line per block, 1-based object numbers separated by commas.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for block in &self.blocks {
            let line: Vec<String> = block.iter().map(|o| (o + 1).to_string()).collect();
            let _ = writeln!(out, "{}", line.join(","));
        }
        out
    }
}

/// `U/attrs`. The empty set yields the single block `U`.
pub fn partition_by(system: &DecisionSystem, attrs: &AttributeSet) -> Partition {
    system.assert_conditional(attrs);
    attrs
        .iter()
        .fold(Partition::whole(system.object_count()), |p, a| {
            p.refine_by_column(system.column(a))
        })
}

/// `U/D`, the decision classes.
pub fn partition_by_decision(system: &DecisionSystem) -> Partition {
    Partition::from_labels(system.decision_column())
}

/// `U/(attrs ∪ D)`.
pub fn partition_with_decision(system: &DecisionSystem, attrs: &AttributeSet) -> Partition {
    partition_by(system, attrs).refine_by_column(system.decision_column())
}

/// Refines `partition` by one more attribute of `system`.
pub fn refine(partition: &Partition, system: &DecisionSystem, attr: usize) -> Result<Partition> {
    if partition.universe_size() != system.object_count() {
        return Err(Error::UniverseMismatch {
            left: partition.universe_size(),
            right: system.object_count(),
        });
    }
    if attr >= system.attribute_count() {
        return Err(Error::AttributeOutOfRange(attr));
    }
    Ok(partition.refine_by_column(system.column(attr)))
}

/// Equality as sets of blocks. Canonical ordering reduces this to comparing
/// block assignments.
pub fn same_partition(p1: &Partition, p2: &Partition) -> Result<bool> {
    if p1.universe_size() != p2.universe_size() {
        return Err(Error::UniverseMismatch {
            left: p1.universe_size(),
            right: p2.universe_size(),
        });
    }
    Ok(p1.block_of == p2.block_of)
}

/// Count matrix `n_ij = |C_i ∩ D_j|` with cached margins and row maxima.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContingencyTable {
    counts: Vec<Vec<u64>>,
    row_sums: Vec<u64>,
    col_sums: Vec<u64>,
    row_max: Vec<u64>,
    total: u64,
}

impl ContingencyTable {
    /// Validates and wraps a raw count matrix: at least one row and column,
    /// rectangular, and no all-zero row or column.
    pub fn from_counts(counts: Vec<Vec<u64>>) -> Result<Self> {
        let cols = counts.first().map_or(0, Vec::len);
        if counts.is_empty() || cols == 0 {
            return Err(Error::InvalidTable("table has no cells"));
        }
        if counts.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidTable("rows differ in length"));
        }
        let row_sums: Vec<u64> = counts.iter().map(|r| r.iter().sum()).collect();
        let col_sums: Vec<u64> = (0..cols)
            .map(|j| counts.iter().map(|r| r[j]).sum())
            .collect();
        if row_sums.contains(&0) {
            return Err(Error::InvalidTable("empty conditional block"));
        }
        if col_sums.contains(&0) {
            return Err(Error::InvalidTable("empty decision class"));
        }
        let row_max = counts
            .iter()
            .map(|r| *r.iter().max().expect("non-empty row"))
            .collect();
        let total = row_sums.iter().sum();
        Ok(ContingencyTable {
            counts,
            row_sums,
            col_sums,
            row_max,
            total,
        })
    }

    /// Cross-tabulates two partitions of the same universe.
    pub fn from_partitions(conditional: &Partition, decision: &Partition) -> Result<Self> {
        if conditional.universe_size() != decision.universe_size() {
            return Err(Error::UniverseMismatch {
                left: conditional.universe_size(),
                right: decision.universe_size(),
            });
        }
        let mut counts = vec![vec![0u64; decision.block_count()]; conditional.block_count()];
        for obj in 0..conditional.universe_size() {
            counts[conditional.block_of(obj)][decision.block_of(obj)] += 1;
        }
        let table = ContingencyTable::from_counts(counts)?;
        debug_assert!(table.check().is_ok());
        Ok(table)
    }

    /// Re-checks the margin invariants.
    pub fn check(&self) -> Result<()> {
        let rows_ok = self
            .counts
            .iter()
            .zip(&self.row_sums)
            .zip(&self.row_max)
            .all(|((r, &s), &m)| r.iter().sum::<u64>() == s && r.iter().max() == Some(&m));
        let cols_ok = (0..self.cols())
            .all(|j| self.counts.iter().map(|r| r[j]).sum::<u64>() == self.col_sums[j]);
        if !rows_ok || !cols_ok || self.row_sums.iter().sum::<u64>() != self.total {
            return Err(Error::InvalidTable("margins disagree with counts"));
        }
        Ok(())
    }

    pub fn rows(&self) -> usize {
        self.counts.len()
    }

    pub fn cols(&self) -> usize {
        self.col_sums.len()
    }

    pub fn count(&self, row: usize, col: usize) -> u64 {
        self.counts[row][col]
    }

    pub fn counts(&self) -> &[Vec<u64>] {
        &self.counts
    }

    pub fn row_sum(&self, row: usize) -> u64 {
        self.row_sums[row]
    }

    pub fn col_sum(&self, col: usize) -> u64 {
        self.col_sums[col]
    }

    pub fn row_max(&self, row: usize) -> u64 {
        self.row_max[row]
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// A row is consistent when its block meets exactly one decision class.
    pub fn is_row_consistent(&self, row: usize) -> bool {
        self.row_max[row] == self.row_sums[row]
    }

    pub fn nonzero_cells(&self) -> usize {
        self.counts.iter().flatten().filter(|&&c| c > 0).count()
    }
}

/// Contingency table of `U/attrs` against `U/D`, rows and columns in
/// canonical block order.
pub fn contingency(system: &DecisionSystem, attrs: &AttributeSet) -> ContingencyTable {
    ContingencyTable::from_partitions(&partition_by(system, attrs), &partition_by_decision(system))
        .expect("partitions of one system share a universe")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::hiring_fixture;

    fn blocks_1based(p: &Partition) -> Vec<Vec<usize>> {
        p.blocks()
            .iter()
            .map(|b| b.iter().map(|o| o + 1).collect())
            .collect()
    }

    fn set(sys: &DecisionSystem, names: &[&str]) -> AttributeSet {
        sys.attribute_set(names).unwrap()
    }

    #[test]
    fn reloc_blocks() {
        let sys = hiring_fixture();
        let p = partition_by(&sys, &set(&sys, &["Reloc"]));
        assert_eq!(
            blocks_1based(&p),
            vec![vec![1, 3, 4, 7, 8, 10, 11, 13], vec![2, 5, 6, 9, 12, 14]]
        );
    }

    #[test]
    fn comm_reloc_blocks() {
        let sys = hiring_fixture();
        let p = partition_by(&sys, &set(&sys, &["Comm", "Reloc"]));
        assert_eq!(
            blocks_1based(&p),
            vec![
                vec![1, 8, 10, 11],
                vec![2, 6, 14],
                vec![3, 4],
                vec![5, 12],
                vec![7, 13],
                vec![9]
            ]
        );
    }

    #[test]
    fn single_attribute_blocks() {
        let sys = hiring_fixture();
        let exp = partition_by(&sys, &set(&sys, &["Exp"]));
        assert_eq!(
            blocks_1based(&exp),
            vec![
                vec![1, 4, 7, 11],
                vec![2, 5, 9, 12, 14],
                vec![3, 6, 8, 10, 13]
            ]
        );
        let test = partition_by(&sys, &set(&sys, &["Test"]));
        assert_eq!(
            blocks_1based(&test),
            vec![
                vec![1, 3, 6, 9, 11, 13, 14],
                vec![2, 5, 8, 12],
                vec![4, 7, 10]
            ]
        );
        let d = partition_by_decision(&sys);
        assert_eq!(
            blocks_1based(&d),
            vec![vec![1, 2, 3, 5, 8, 11], vec![4, 6, 7, 9, 10, 12, 13, 14]]
        );
    }

    #[test]
    fn full_conditional_partition_merges_x5_and_x12() {
        let sys = hiring_fixture();
        let p = partition_by(&sys, &sys.all_conditional());
        assert_eq!(p.block_count(), 13);
        assert_eq!(p.block_of(4), p.block_of(11));
    }

    #[test]
    fn empty_set_is_one_block() {
        let sys = hiring_fixture();
        let p = partition_by(&sys, &AttributeSet::empty());
        assert_eq!(p.block_count(), 1);
        assert_eq!(p.block(0).len(), 14);
    }

    #[test]
    fn refine_matches_direct_partition() {
        let sys = hiring_fixture();
        let comm = partition_by(&sys, &set(&sys, &["Comm"]));
        let reloc = sys.attribute_index("Reloc").unwrap();
        let refined = refine(&comm, &sys, reloc).unwrap();
        assert_eq!(refined, partition_by(&sys, &set(&sys, &["Comm", "Reloc"])));
        assert_eq!(refined.block_count(), 6);
        assert!(refined.refines(&comm));
        let again = refine(&refined, &sys, reloc).unwrap();
        assert_eq!(again, refined);
    }

    #[test]
    fn refine_rejects_other_universe() {
        let sys = hiring_fixture();
        let p = Partition::whole(3);
        assert!(matches!(
            refine(&p, &sys, 0),
            Err(Error::UniverseMismatch { .. })
        ));
    }

    #[test]
    fn same_partition_cases() {
        let sys = hiring_fixture();
        let exp = partition_by(&sys, &set(&sys, &["Exp"]));
        let edu = partition_by(&sys, &set(&sys, &["Edu"]));
        assert!(same_partition(&exp, &exp).unwrap());
        assert!(!same_partition(&exp, &edu).unwrap());
        assert!(same_partition(&exp, &Partition::whole(3)).is_err());
    }

    #[test]
    fn test_contingency() {
        let sys = hiring_fixture();
        let t = contingency(&sys, &set(&sys, &["Test"]));
        // canonical rows: {x1,x3,..}, {x2,x5,x8,x12}, {x4,x7,x10}; columns Yes, No
        assert_eq!(t.counts(), &[vec![3, 4], vec![3, 1], vec![0, 3]]);
        assert_eq!(t.total(), 14);
        assert_eq!((t.row_max(0), t.row_max(1), t.row_max(2)), (4, 3, 3));
        assert!(t.is_row_consistent(2));
        assert!(!t.is_row_consistent(0));
        assert_eq!((t.col_sum(0), t.col_sum(1)), (6, 8));
        t.check().unwrap();
    }

    #[test]
    fn constant_decision_table_has_one_column() {
        let sys = hiring_fixture();
        let hire = sys.decision_index();
        let mut constant = sys.clone();
        for o in 0..14 {
            constant = constant.with_value(o, hire, 0).unwrap();
        }
        let t = contingency(&constant, &set(&constant, &["Exp"]));
        assert_eq!(t.cols(), 1);
        for i in 0..t.rows() {
            assert_eq!(t.count(i, 0), t.row_sum(i));
        }
    }

    #[test]
    fn table_validation() {
        assert!(ContingencyTable::from_counts(vec![]).is_err());
        assert!(ContingencyTable::from_counts(vec![vec![1, 2], vec![3]]).is_err());
        assert!(ContingencyTable::from_counts(vec![vec![0, 0], vec![1, 2]]).is_err());
        assert!(ContingencyTable::from_counts(vec![vec![1, 0], vec![1, 0]]).is_err());
        assert!(ContingencyTable::from_counts(vec![vec![5]]).is_ok());
    }

    #[test]
    fn dump_format() {
        let sys = hiring_fixture();
        let p = partition_by(&sys, &set(&sys, &["Reloc"]));
        assert_eq!(p.dump(), "1,3,4,7,8,10,11,13\n2,5,6,9,12,14\n");
    }
}
