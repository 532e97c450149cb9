//! Integer partitions and Ferrers conjugation.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Non-increasing list of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPartition {
    parts: Vec<u64>,
}

impl IntPartition {
    /// Sorts the input into non-increasing order.
    pub fn new(mut parts: Vec<u64>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes in the Ferrers diagram.
    pub fn box_count(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Ferrers transpose: `x*_j = #{ i : x_i >= j }` for `j = 1..=max`.
    pub fn conjugate(&self) -> IntPartition {
        let max = self.parts.first().copied().unwrap_or(0);
        let mut out = Vec::with_capacity(max as usize);
        // parts are non-increasing, so the count of parts >= j only shrinks
        let mut count = self.parts.len();
        for j in 1..=max {
            while count > 0 && self.parts[count - 1] < j {
                count -= 1;
            }
            out.push(count as u64);
        }
        IntPartition { parts: out }
    }

    /// Drops trailing zeros.
    pub fn nonzero(&self) -> IntPartition {
        IntPartition {
            parts: self.parts.iter().copied().filter(|&x| x > 0).collect(),
        }
    }
}

impl From<Vec<u64>> for IntPartition {
    fn from(v: Vec<u64>) -> Self {
        Self::new(v)
    }
}

/// Conjugate of a partition given as `value -> multiplicity` runs, returned in
/// the same form. Never materialises the parts, so it works for `p^alpha`
/// well beyond what fits in memory.
pub fn conjugate_runs(runs: &BTreeMap<u64, u64>) -> BTreeMap<u64, u64> {
    let mut out = BTreeMap::new();
    // walk distinct values from the top: for j in (next_lower, value] the
    // number of parts >= j is the running count of parts >= value
    let mut count = 0u64;
    let values: Vec<(u64, u64)> = runs.iter().rev().map(|(&v, &m)| (v, m)).collect();
    for (idx, &(value, mult)) in values.iter().enumerate() {
        if value == 0 {
            break;
        }
        count += mult;
        let lower = values.get(idx + 1).map_or(0, |&(v, _)| v);
        let width = value - lower;
        if width > 0 {
            *out.entry(count).or_insert(0) += width;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn conjugate_examples() {
        let x = IntPartition::new(vec![15, 7, 3, 3, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1]);
        assert_eq!(
            x.conjugate().parts(),
            &[16, 8, 4, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1]
        );
        let s = IntPartition::new(vec![3, 2, 1]);
        assert_eq!(s.conjugate(), s);
        assert!(IntPartition::default().conjugate().is_empty());
    }

    #[test]
    fn runs_match_materialised() {
        let x = IntPartition::new(vec![15, 7, 3, 3, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1]);
        let mut runs = BTreeMap::new();
        for &p in x.parts() {
            *runs.entry(p).or_insert(0) += 1;
        }
        let mut expect = BTreeMap::new();
        for &p in x.conjugate().parts() {
            *expect.entry(p).or_insert(0u64) += 1;
        }
        assert_eq!(conjugate_runs(&runs), expect);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn conjugation_is_an_involution(parts in prop::collection::vec(0u64..40, 0..40)) {
            let x = IntPartition::new(parts);
            let xs = x.conjugate();
            prop_assert_eq!(xs.box_count(), x.box_count());
            prop_assert_eq!(xs.conjugate(), x.nonzero());
        }
    }
}
