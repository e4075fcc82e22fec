//! Canonical forms under relabeling of points.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::error::HarnessError;
use crate::space::{default_labels, Topology};

use super::enumerate::enumerate_topologies;

/// The lexicographically least sorted-family encoding over all
/// relabelings.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    pub n: usize,
    pub sets: Vec<u8>,
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n)?;
        for s in &self.sets {
            write!(f, "{s:02x}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalSpace {
    /// The relabeling that attains the key, with default labels.
    pub topology: Topology,
    pub key: CanonicalKey,
    /// Number of distinct labeled topologies in the class.
    pub labeled_count: usize,
}

fn encode(t: &Topology) -> Vec<u8> {
    t.opens().iter().map(|s| s.bits()).collect()
}

pub fn permutations(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).permutations(n)
}

pub fn canonical_form(t: &Topology) -> CanonicalSpace {
    let n = t.n();
    let mut best: Option<(Vec<u8>, Topology)> = None;
    let mut seen = std::collections::BTreeSet::new();
    for perm in permutations(n) {
        let p = t.permute(&perm);
        let code = encode(&p);
        seen.insert(code.clone());
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            best = Some((code, p));
        }
    }
    let (sets, topology) = best.expect("at least one permutation");
    CanonicalSpace {
        topology: topology.with_labels(default_labels(n)),
        key: CanonicalKey { n, sets },
        labeled_count: seen.len(),
    }
}

/// One representative per relabeling class on `n` points, by key.
pub fn canonical_spaces(n: usize) -> Result<Vec<CanonicalSpace>, HarnessError> {
    let mut classes: BTreeMap<CanonicalKey, CanonicalSpace> = BTreeMap::new();
    for t in enumerate_topologies(n)? {
        let c = canonical_form(&t);
        classes.entry(c.key.clone()).or_insert(c);
    }
    Ok(classes.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::Subset;

    fn ex_2_14() -> Topology {
        let s = |v: &[usize]| Subset::from_indices(v.iter().copied());
        Topology::new(3, [s(&[]), s(&[0]), s(&[1]), s(&[0, 1]), s(&[0, 1, 2])]).unwrap()
    }

    #[test]
    fn canonical_counts() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| canonical_spaces(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 3, 9, 33, 139]);
    }

    #[test]
    fn multiplicities_sum_to_labeled_count() {
        for n in 1..=4 {
            let total: usize = canonical_spaces(n)
                .unwrap()
                .iter()
                .map(|c| c.labeled_count)
                .sum();
            assert_eq!(total, enumerate_topologies(n).unwrap().len());
        }
    }

    #[test]
    fn relabeling_and_idempotence() {
        let t = ex_2_14();
        let swapped = t.permute(&[1, 0, 2]);
        assert_eq!(canonical_form(&t).key, canonical_form(&swapped).key);
        let c = canonical_form(&t);
        assert_eq!(canonical_form(&c.topology).key, c.key);
        assert_eq!(c.labeled_count, 3);
        assert_ne!(
            canonical_form(&Topology::discrete(2)).key,
            canonical_form(&Topology::indiscrete(2)).key
        );
    }
}
