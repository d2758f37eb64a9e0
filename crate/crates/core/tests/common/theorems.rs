//! Property checks shared by the property tests and the acceptance suite.
//! Each check returns human-readable violations; an empty list is a pass.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, RngExt};
use roughdep_core::dataset::{
    permute_decision_labels, relabel_attribute_values, split_universe, AttributeSet, DecisionSystem,
};
use roughdep_core::evaluation::evaluate_resubstitution;
use roughdep_core::measures::{
    ecd_from_contingency, expected_confidence_dependency, DependencyProfile, Measure,
};
use roughdep_core::partition::{contingency, partition_by, same_partition};
use roughdep_core::selection::{backward_eliminate, exhaustive_reducts, forward_select, is_reduct};
use roughdep_core::Fraction;

use super::*;

pub const THEOREMS: [&str; 11] = [
    "oracle agreement",
    "range",
    "ecd=1 iff consistent",
    "ecd >= cla",
    "monotonicity",
    "partition locality",
    "relabel invariance",
    "additivity",
    "single-label stability",
    "contingency path",
    "resubstitution = ecd",
];

pub type Violations = Vec<(&'static str, String)>;

fn profile_oracle(sys: &DecisionSystem, r: &AttributeSet) -> DependencyProfile {
    DependencyProfile {
        cla: cla(sys, r),
        rel: rel(sys, r),
        dir: dir(sys, r),
        ecd: ecd(sys, r),
    }
}

/// Runs every theorem check once on `sys` with subsets and transforms drawn
/// from `rng`.
pub fn theorem_violations<R: Rng + ?Sized>(sys: &DecisionSystem, rng: &mut R) -> Violations {
    let mut out: Violations = Vec::new();
    let mut fail = |name: &'static str, msg: String| out.push((name, msg));
    let n = sys.object_count() as u64;
    let r = random_subset(rng, sys);
    let p = DependencyProfile::of(sys, &r);

    if p != profile_oracle(sys, &r) {
        fail(
            THEOREMS[0],
            format!("R={r:?}: {p:?} vs oracle {:?}", profile_oracle(sys, &r)),
        );
    }
    if blocks(sys, &r) != partition_by(sys, &r).blocks() {
        fail(
            THEOREMS[0],
            format!("R={r:?}: partition differs from pairwise oracle"),
        );
    }
    let hired: Vec<usize> = (0..sys.object_count())
        .filter(|_| rng.random_bool(0.5))
        .collect();
    let approx = roughdep_core::measures::approximate(sys, &r, &hired).unwrap();
    if approx.lower != lower(sys, &r, &hired) || approx.upper != upper(sys, &r, &hired) {
        fail(
            THEOREMS[0],
            format!("R={r:?}: approximations differ from per-object oracle"),
        );
    }

    for m in Measure::ALL {
        let v = p.get(m);
        if v > Fraction::one() {
            fail(THEOREMS[1], format!("{m}({r:?}) = {v} > 1"));
        }
    }

    let table = counts(sys, &r);
    let consistent = table
        .iter()
        .all(|row| row.iter().filter(|&&c| c > 0).count() == 1);
    if (p.ecd == Fraction::one()) != consistent {
        fail(
            THEOREMS[2],
            format!("R={r:?}: ecd={} but consistent={consistent}", p.ecd),
        );
    }

    if p.ecd < p.cla || ((p.ecd == p.cla) != consistent) {
        fail(
            THEOREMS[3],
            format!(
                "R={r:?}: ecd={} cla={} consistent={consistent}",
                p.ecd, p.cla
            ),
        );
    }

    let extra = random_subset(rng, sys);
    let r2: AttributeSet = r.iter().chain(extra.iter()).collect();
    for m in [Measure::Cla, Measure::Ecd] {
        let (v1, v2) = (m.evaluate(sys, &r), m.evaluate(sys, &r2));
        if v1 > v2 {
            fail(THEOREMS[4], format!("{m}: {r:?}={v1} > {r2:?}={v2}"));
        }
    }

    // locality: any superset with the same partition, and a relabelled copy
    let pr = partition_by(sys, &r);
    for a in sys.conditional_indices().filter(|&a| !r.contains(a)) {
        let wider = r.with(a);
        if same_partition(&pr, &partition_by(sys, &wider)).unwrap()
            && expected_confidence_dependency(sys, &wider) != p.ecd
        {
            fail(
                THEOREMS[5],
                format!("{r:?} and {wider:?} share a partition but not ECD"),
            );
        }
    }
    let r3 = random_subset(rng, sys);
    if same_partition(&pr, &partition_by(sys, &r3)).unwrap()
        && expected_confidence_dependency(sys, &r3) != p.ecd
    {
        fail(
            THEOREMS[5],
            format!("{r:?} and {r3:?} share a partition but not ECD"),
        );
    }

    let attr = *sys
        .conditional_indices()
        .collect::<Vec<_>>()
        .choose(rng)
        .unwrap();
    let pi = random_permutation(rng, sys.dictionary(attr).len());
    let relabelled = relabel_attribute_values(sys, attr, &pi).unwrap();
    let sigma = random_permutation(rng, sys.dictionary(sys.decision_index()).len());
    let permuted = permute_decision_labels(sys, &sigma).unwrap();
    for (what, other) in [
        ("attribute relabel", &relabelled),
        ("decision permutation", &permuted),
    ] {
        let q = DependencyProfile::of(other, &r);
        if q != p {
            fail(THEOREMS[6], format!("{what} on R={r:?}: {p:?} -> {q:?}"));
        }
        if !same_partition(&pr, &partition_by(other, &r)).unwrap() {
            fail(THEOREMS[6], format!("{what} changed U/R"));
        }
    }

    // additivity holds for splits that keep every block of U/R whole
    let mut bl = blocks(sys, &r);
    if bl.len() >= 2 {
        bl.shuffle(rng);
        let cut = rng.random_range(1..bl.len());
        let part: Vec<usize> = bl[..cut].iter().flatten().copied().collect();
        let (u1, u2) = split_universe(sys, &part).unwrap();
        let (e1, e2) = (
            expected_confidence_dependency(&u1, &r),
            expected_confidence_dependency(&u2, &r),
        );
        let (n1, n2) = (u1.object_count() as u64, u2.object_count() as u64);
        // n·E = n1·E1 + n2·E2, compared on integer numerators
        let whole = p.ecd.numer() * n / p.ecd.denom();
        let parts = e1.numer() * n1 / e1.denom() + e2.numer() * n2 / e2.denom();
        if whole != parts || n1 + n2 != n {
            fail(THEOREMS[7], format!("R={r:?}: {whole} vs {parts}"));
        }
    }
    // an arbitrary split can only raise the total majority mass
    if n >= 2 {
        let cut = rng.random_range(1..n as usize);
        let mut objs: Vec<usize> = (0..n as usize).collect();
        objs.shuffle(rng);
        let (u1, u2) = split_universe(sys, &objs[..cut]).unwrap();
        let parts = majority_mass(&u1, &r) + majority_mass(&u2, &r);
        if parts < majority_mass(sys, &r) {
            fail(
                THEOREMS[7],
                format!("R={r:?}: split mass {parts} below whole"),
            );
        }
    }

    let classes = sys.dictionary(sys.decision_index()).len() as u32;
    if classes >= 2 {
        let x = rng.random_range(0..n as usize);
        let old = sys.decision_value(x);
        let new = (old + rng.random_range(1..classes)) % classes;
        let flipped = sys.with_value(x, sys.decision_index(), new).unwrap();
        let after = expected_confidence_dependency(&flipped, &r);
        let delta = if after > p.ecd {
            after.numer() * n / after.denom() - p.ecd.numer() * n / p.ecd.denom()
        } else {
            p.ecd.numer() * n / p.ecd.denom() - after.numer() * n / after.denom()
        };
        if delta > 1 {
            fail(
                THEOREMS[8],
                format!("flip x{x} on R={r:?}: {} -> {after}", p.ecd),
            );
        }
    }

    let t = contingency(sys, &r);
    if t.counts() != table.as_slice() {
        fail(
            THEOREMS[9],
            format!("R={r:?}: table {:?} vs oracle {table:?}", t.counts()),
        );
    }
    if ecd_from_contingency(&t).unwrap() != p.ecd {
        fail(THEOREMS[9], format!("R={r:?}: table ECD differs"));
    }

    if evaluate_resubstitution(sys, &r).accuracy != p.ecd {
        fail(
            THEOREMS[10],
            format!("R={r:?}: accuracy differs from ECD {}", p.ecd),
        );
    }

    out
}

pub const SELECTION_CHECKS: [&str; 4] = [
    "soundness",
    "forward monotone",
    "backward in reduct list",
    "reduct list = oracle",
];

/// Forward/backward soundness for the monotone measures, and the exhaustive
/// reduct list against the brute-force one.
pub fn selection_violations(sys: &DecisionSystem) -> Violations {
    let mut out: Violations = Vec::new();
    let all = sys.all_conditional();
    for m in [Measure::Cla, Measure::Ecd] {
        let target = m.evaluate(sys, &all);
        let fwd = forward_select(sys, m);
        let bwd = backward_eliminate(sys, m);
        for trace in [&fwd, &bwd] {
            if !trace.converged
                || m.evaluate(sys, &trace.result) != target
                || trace.replay() != trace.result
            {
                out.push((
                    SELECTION_CHECKS[0],
                    format!("{m} {}: {:?}", trace.direction, trace.result),
                ));
            }
        }
        let mut prev = fwd.initial_value;
        for s in &fwd.steps {
            if s.value < prev {
                out.push((SELECTION_CHECKS[1], format!("{m}: {prev} then {}", s.value)));
            }
            prev = s.value;
        }
        if all.len() <= 12 {
            let reducts = exhaustive_reducts(sys, m, 12).unwrap();
            if !reducts.contains(&bwd.result) || !is_reduct(sys, &bwd.result, m) {
                out.push((
                    SELECTION_CHECKS[2],
                    format!("{m}: {:?} not in {reducts:?}", bwd.result),
                ));
            }
            let oracle = match m {
                Measure::Cla => minimal_reducts(sys, cla),
                _ => minimal_reducts(sys, ecd),
            };
            if reducts != oracle {
                out.push((
                    SELECTION_CHECKS[3],
                    format!("{m}: {reducts:?} vs {oracle:?}"),
                ));
            }
        }
    }
    out
}
