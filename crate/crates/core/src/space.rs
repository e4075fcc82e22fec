//! Finite topologies: validation, interior and closure, subspaces.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::TopologyError;
use crate::subset::{Subset, SubsetFamily, MAX_POINTS};

/// Default point names: `a`, `b`, `c`, ...
pub fn default_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect()
}

/// Render a subset with point labels, e.g. `{a,c}`.
pub fn format_set(labels: &[String], s: Subset) -> String {
    let names: Vec<&str> = s.iter().map(|i| labels[i].as_str()).collect();
    format!("{{{}}}", names.join(","))
}

/// A validated topology on `n` points.
///
/// Equality, ordering and hashing look only at the point count and the
/// open-set family; labels are presentation only.
#[derive(Clone)]
pub struct Topology {
    n: usize,
    labels: Vec<String>,
    opens: SubsetFamily,
    // interior of every subset, indexed by its bits
    interiors: Vec<Subset>,
}

/// Check that `family` is a topology on `n` points.
///
/// Witness pairs are reported in canonical order: the first offending pair
/// `(a, b)` with `a` before `b`, union checked before intersection.
pub fn validate_topology(n: usize, family: &SubsetFamily) -> Result<Topology, TopologyError> {
    if n == 0 {
        return Err(TopologyError::NoPoints);
    }
    if n > MAX_POINTS {
        return Err(TopologyError::TooManyPoints(n));
    }
    if let Some(bad) = family.iter().find(|s| !s.within(n)) {
        return Err(TopologyError::OutOfRange(bad));
    }
    if !family.contains(Subset::EMPTY) {
        return Err(TopologyError::MissingEmpty);
    }
    if !family.contains(Subset::full(n)) {
        return Err(TopologyError::MissingFull);
    }
    let members = family.members();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if !family.contains(a.union(b)) {
                return Err(TopologyError::NotClosedUnderUnion(a, b));
            }
            if !family.contains(a.intersection(b)) {
                return Err(TopologyError::NotClosedUnderIntersection(a, b));
            }
        }
    }
    Ok(Topology::from_valid(n, family.clone()))
}

impl Topology {
    pub(crate) fn from_valid(n: usize, opens: SubsetFamily) -> Self {
        let interiors = Subset::all(n)
            .map(|a| {
                opens
                    .subsets_of(a)
                    .fold(Subset::EMPTY, |acc, u| acc.union(u))
            })
            .collect();
        Topology {
            n,
            labels: default_labels(n),
            opens,
            interiors,
        }
    }

    /// Build from any iterator of subsets; see [`validate_topology`].
    pub fn new<I: IntoIterator<Item = Subset>>(n: usize, opens: I) -> Result<Self, TopologyError> {
        validate_topology(n, &opens.into_iter().collect())
    }

    pub fn discrete(n: usize) -> Self {
        Topology::from_valid(n, Subset::all(n).collect())
    }

    pub fn indiscrete(n: usize) -> Self {
        Topology::from_valid(n, [Subset::EMPTY, Subset::full(n)].into_iter().collect())
    }

    /// Replace point labels. Panics if the count does not match.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n, "label count must match point count");
        self.labels = labels;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn opens(&self) -> &SubsetFamily {
        &self.opens
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn complement(&self, a: Subset) -> Subset {
        a.complement(self.n)
    }

    /// All subsets of the ground set.
    pub fn subsets(&self) -> impl Iterator<Item = Subset> {
        Subset::all(self.n)
    }

    pub fn is_open(&self, a: Subset) -> bool {
        self.opens.contains(a)
    }

    pub fn is_closed(&self, a: Subset) -> bool {
        self.opens.contains(self.complement(a))
    }

    /// Closed sets, in canonical order.
    pub fn closed_sets(&self) -> SubsetFamily {
        self.opens.complements(self.n)
    }

    /// Largest open subset of `a`.
    #[inline]
    pub fn interior(&self, a: Subset) -> Subset {
        self.interiors[a.bits() as usize]
    }

    /// Smallest closed superset of `a`.
    #[inline]
    pub fn closure(&self, a: Subset) -> Subset {
        self.complement(self.interior(self.complement(a)))
    }

    pub fn is_clopen(&self, a: Subset) -> bool {
        self.is_open(a) && self.is_closed(a)
    }

    /// Relative topology on a nonempty subset `m`, with points renumbered in
    /// increasing order of their index in `self`.
    pub fn subspace(&self, m: Subset) -> Result<Subspace, TopologyError> {
        if m.is_empty() {
            return Err(TopologyError::EmptyCarrier);
        }
        let embedding: Vec<usize> = m.iter().collect();
        let restrict = |u: Subset| {
            Subset::from_indices(
                embedding
                    .iter()
                    .enumerate()
                    .filter(|(_, &p)| u.contains(p))
                    .map(|(k, _)| k),
            )
        };
        let opens: SubsetFamily = self.opens.iter().map(restrict).collect();
        let labels = embedding.iter().map(|&p| self.labels[p].clone()).collect();
        let topology = Topology::from_valid(embedding.len(), opens).with_labels(labels);
        Ok(Subspace {
            topology,
            embedding,
            carrier: m,
        })
    }

    /// Same space with point `i` renamed to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Topology {
        let mut labels = vec![String::new(); self.n];
        for (i, &p) in perm.iter().enumerate() {
            labels[p] = self.labels[i].clone();
        }
        Topology::from_valid(self.n, self.opens.permute(perm)).with_labels(labels)
    }

    pub fn show(&self, a: Subset) -> String {
        format_set(&self.labels, a)
    }

    /// Compact single-line form: `[{},{a},{a,b}]`.
    pub fn compact(&self) -> String {
        let sets: Vec<String> = self.opens.iter().map(|s| self.show(s)).collect();
        format!("[{}]", sets.join(","))
    }
}

impl PartialEq for Topology {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.opens == other.opens
    }
}

impl Eq for Topology {}

impl Hash for Topology {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.opens.hash(state);
    }
}

impl PartialOrd for Topology {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Topology {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.opens.cmp(&other.opens))
    }
}

impl fmt::Debug for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Topology(n={}, {})", self.n, self.compact())
    }
}

/// A subspace together with its embedding into the parent space.
#[derive(Clone, Debug)]
pub struct Subspace {
    pub topology: Topology,
    /// `embedding[k]` is the parent index of subspace point `k`.
    pub embedding: Vec<usize>,
    pub carrier: Subset,
}

impl Subspace {
    /// Parent-space set `a ∩ M`, in subspace indices.
    pub fn restrict(&self, a: Subset) -> Subset {
        Subset::from_indices(
            self.embedding
                .iter()
                .enumerate()
                .filter(|(_, &p)| a.contains(p))
                .map(|(k, _)| k),
        )
    }

    /// Subspace set, in parent indices.
    pub fn lift(&self, a: Subset) -> Subset {
        Subset::from_indices(a.iter().map(|k| self.embedding[k]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(bits: &[usize]) -> Subset {
        Subset::from_indices(bits.iter().copied())
    }

    /// {∅,{a},{b},{a,b},X} on three points.
    fn ex_2_14() -> Topology {
        Topology::new(
            3,
            [
                set(&[]),
                set(&[0]),
                set(&[1]),
                set(&[0, 1]),
                set(&[0, 1, 2]),
            ],
        )
        .unwrap()
    }

    /// {∅,{a},{c},{a,c},{b,d},{a,b,d},{b,c,d},X} on four points.
    fn ex_3_7() -> Topology {
        Topology::new(
            4,
            [
                set(&[]),
                set(&[0]),
                set(&[2]),
                set(&[0, 2]),
                set(&[1, 3]),
                set(&[0, 1, 3]),
                set(&[1, 2, 3]),
                set(&[0, 1, 2, 3]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn rejects_non_topology_with_first_union_witness() {
        // a=0 b=1 c=2 d=3
        let fam = [
            set(&[]),
            set(&[0]),
            set(&[1]),
            set(&[3]),
            set(&[0, 1]),
            set(&[1, 3]),
            set(&[0, 1, 2]),
            set(&[0, 1, 3]),
            set(&[0, 1, 2, 3]),
        ];
        let err = Topology::new(4, fam).unwrap_err();
        assert_eq!(
            err,
            TopologyError::NotClosedUnderUnion(set(&[0]), set(&[3]))
        );
    }

    #[test]
    fn missing_empty_and_full() {
        assert_eq!(
            Topology::new(2, [set(&[0, 1])]).unwrap_err(),
            TopologyError::MissingEmpty
        );
        assert_eq!(
            Topology::new(2, [set(&[])]).unwrap_err(),
            TopologyError::MissingFull
        );
    }

    #[test]
    fn intersection_witness() {
        let fam = [set(&[]), set(&[0, 1]), set(&[1, 2]), set(&[0, 1, 2])];
        assert_eq!(
            Topology::new(3, fam).unwrap_err(),
            TopologyError::NotClosedUnderIntersection(set(&[0, 1]), set(&[1, 2]))
        );
    }

    #[test]
    fn indiscrete_point() {
        let t = Topology::new(1, [set(&[]), set(&[0])]).unwrap();
        assert_eq!(t.opens().len(), 2);
    }

    #[test]
    fn interior_examples() {
        let t = ex_2_14();
        assert_eq!(t.interior(set(&[0, 2])), set(&[0]));
        assert_eq!(t.interior(set(&[2])), Subset::EMPTY);
        assert_eq!(t.interior(t.full()), t.full());
    }

    #[test]
    fn closure_examples() {
        let t = ex_2_14();
        assert_eq!(t.closure(set(&[0])), set(&[0, 2]));
        assert_eq!(t.closure(Subset::EMPTY), Subset::EMPTY);

        let t5 = Topology::new(
            5,
            [
                set(&[]),
                set(&[0]),
                set(&[1]),
                set(&[0, 1]),
                Subset::full(5),
            ],
        )
        .unwrap();
        assert_eq!(t5.closure(set(&[0])), set(&[0, 2, 3, 4]));
    }

    #[test]
    fn subspace_examples() {
        let t = ex_2_14();
        let full = t.subspace(t.full()).unwrap();
        assert_eq!(full.topology, t);

        let sub = t.subspace(set(&[0, 2])).unwrap();
        assert_eq!(sub.topology.n(), 2);
        let want: SubsetFamily = [set(&[]), set(&[0]), set(&[0, 1])].into_iter().collect();
        assert_eq!(sub.topology.opens(), &want);
        assert_eq!(sub.topology.labels(), &["a".to_string(), "c".to_string()]);

        // {b,d} in Ex 3.7: opens meet {b,d} in ∅, {b,d} only
        let sub = ex_3_7().subspace(set(&[1, 3])).unwrap();
        let brute: SubsetFamily = ex_3_7().opens().iter().map(|u| sub.restrict(u)).collect();
        assert_eq!(sub.topology.opens(), &brute);
        assert_eq!(brute.len(), 2);

        assert_eq!(
            t.subspace(Subset::EMPTY).unwrap_err(),
            TopologyError::EmptyCarrier
        );
    }

    #[test]
    fn clopen_examples() {
        assert!(ex_3_7().is_clopen(set(&[0, 2])));
        assert!(ex_2_14().is_clopen(Subset::EMPTY));
        assert!(!ex_2_14().is_clopen(set(&[0])));
    }

    #[test]
    fn restrict_lift_roundtrip() {
        let t = ex_3_7();
        let sub = t.subspace(set(&[0, 2, 3])).unwrap();
        for a in sub.topology.subsets() {
            assert_eq!(sub.restrict(sub.lift(a)), a);
        }
    }
}
