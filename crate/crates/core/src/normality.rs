//! Normality variants and πgD̂ separation axioms.
//!
//! Each variant names a family of disjoint pairs `(A, B)` and a separator
//! kind; it holds when every pair has disjoint separator-open `U ⊇ A`,
//! `V ⊇ B`.

use std::fmt;
use std::str::FromStr;

use crate::error::TokenError;
use crate::genclass::ClassTable;
use crate::subset::{Subset, SubsetFamily};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NormalityKind {
    Normal,
    QuasiNormal,
    AlmostNormal,
    MildlyNormal,
    SoftlyNormal,
    PiNormal,
    PiGDhatNormal,
    QuasiPiGDhat,
    AlmostPiGDhat,
    MildlyPiGDhat,
    SoftlyPiGDhat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairSide {
    Closed,
    PiClosed,
    RegularClosed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairScheme {
    /// `A` from the first family, `B` from the second.
    Product(PairSide, PairSide),
    /// Both closed, at least one π-closed.
    ClosedOnePiClosed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Separator {
    Open,
    PiGDhatOpen,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NormalityScheme {
    pub pairs: PairScheme,
    pub separator: Separator,
}

impl NormalityKind {
    pub const ALL: [NormalityKind; 11] = [
        NormalityKind::Normal,
        NormalityKind::QuasiNormal,
        NormalityKind::AlmostNormal,
        NormalityKind::MildlyNormal,
        NormalityKind::SoftlyNormal,
        NormalityKind::PiNormal,
        NormalityKind::PiGDhatNormal,
        NormalityKind::QuasiPiGDhat,
        NormalityKind::AlmostPiGDhat,
        NormalityKind::MildlyPiGDhat,
        NormalityKind::SoftlyPiGDhat,
    ];

    pub fn token(self) -> &'static str {
        match self {
            NormalityKind::Normal => "normal",
            NormalityKind::QuasiNormal => "quasi",
            NormalityKind::AlmostNormal => "almost",
            NormalityKind::MildlyNormal => "mildly",
            NormalityKind::SoftlyNormal => "softly",
            NormalityKind::PiNormal => "pi-normal",
            NormalityKind::PiGDhatNormal => "pigdhat-normal",
            NormalityKind::QuasiPiGDhat => "quasi-pigdhat",
            NormalityKind::AlmostPiGDhat => "almost-pigdhat",
            NormalityKind::MildlyPiGDhat => "mildly-pigdhat",
            NormalityKind::SoftlyPiGDhat => "softly-pigdhat",
        }
    }

    pub fn scheme(self) -> NormalityScheme {
        use NormalityKind::*;
        use PairSide::*;
        let pairs = match self {
            Normal => PairScheme::Product(Closed, Closed),
            QuasiNormal | QuasiPiGDhat => PairScheme::Product(PiClosed, PiClosed),
            AlmostNormal | AlmostPiGDhat => PairScheme::Product(Closed, RegularClosed),
            MildlyNormal | MildlyPiGDhat => PairScheme::Product(RegularClosed, RegularClosed),
            SoftlyNormal | SoftlyPiGDhat => PairScheme::Product(PiClosed, RegularClosed),
            PiNormal | PiGDhatNormal => PairScheme::ClosedOnePiClosed,
        };
        let separator = match self {
            Normal | QuasiNormal | AlmostNormal | MildlyNormal | SoftlyNormal | PiNormal => {
                Separator::Open
            }
            _ => Separator::PiGDhatOpen,
        };
        NormalityScheme { pairs, separator }
    }
}

impl fmt::Display for NormalityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for NormalityKind {
    type Err = TokenError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NormalityKind::ALL
            .into_iter()
            .find(|k| k.token() == s)
            .ok_or_else(|| TokenError::Unknown(s.to_string()))
    }
}

/// Outcome of a normality check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub pairs_checked: usize,
    /// A qualifying pair with no disjoint separators.
    pub witness: Option<(Subset, Subset)>,
}

fn side(table: &ClassTable, s: PairSide) -> &SubsetFamily {
    match s {
        PairSide::Closed => table.closed(),
        PairSide::PiClosed => table.pi_closed(),
        PairSide::RegularClosed => table.regular_closed(),
    }
}

pub fn separator_family(table: &ClassTable, s: Separator) -> &SubsetFamily {
    match s {
        Separator::Open => table.space().opens(),
        Separator::PiGDhatOpen => table.pigdhat_open(),
    }
}

/// Disjoint pairs demanded by a pair scheme, in canonical order.
pub fn qualifying_pairs(table: &ClassTable, pairs: PairScheme) -> Vec<(Subset, Subset)> {
    let (first, second, one_pi) = match pairs {
        PairScheme::Product(a, b) => (side(table, a), side(table, b), false),
        PairScheme::ClosedOnePiClosed => (table.closed(), table.closed(), true),
    };
    let pi = table.pi_closed();
    let mut out = Vec::new();
    for a in first.iter() {
        for b in second.iter() {
            if !a.is_disjoint(b) {
                continue;
            }
            if one_pi && !(pi.contains(a) || pi.contains(b)) {
                continue;
            }
            out.push((a, b));
        }
    }
    out
}

/// First disjoint `U ⊇ a`, `V ⊇ b` from `family`, in canonical order.
pub fn separate(family: &SubsetFamily, a: Subset, b: Subset) -> Option<(Subset, Subset)> {
    for u in family.supersets_of(a) {
        if !u.is_disjoint(b) {
            continue;
        }
        if let Some(v) = family.supersets_of(b).find(|v| u.is_disjoint(*v)) {
            return Some((u, v));
        }
    }
    None
}

/// Check a proposed separation.
pub fn separates(family: &SubsetFamily, a: Subset, b: Subset, u: Subset, v: Subset) -> bool {
    family.contains(u)
        && family.contains(v)
        && a.is_subset_of(u)
        && b.is_subset_of(v)
        && u.is_disjoint(v)
}

pub fn is_normal_kind(table: &ClassTable, k: NormalityKind) -> Verdict {
    check_scheme(table, k.scheme())
}

/// Evaluate an arbitrary pair scheme and separator.
pub fn check_scheme(table: &ClassTable, scheme: NormalityScheme) -> Verdict {
    let family = separator_family(table, scheme.separator);
    let pairs = qualifying_pairs(table, scheme.pairs);
    let witness = pairs
        .iter()
        .copied()
        .find(|&(a, b)| separate(family, a, b).is_none());
    Verdict {
        holds: witness.is_none(),
        pairs_checked: pairs.len(),
        witness,
    }
}

/// True when the witness in a failing verdict really is a qualifying,
/// unseparated pair.
pub fn replay(table: &ClassTable, k: NormalityKind, verdict: &Verdict) -> bool {
    match verdict.witness {
        None => verdict.holds,
        Some((a, b)) => {
            let scheme = k.scheme();
            !verdict.holds
                && qualifying_pairs(table, scheme.pairs).contains(&(a, b))
                && separate(separator_family(table, scheme.separator), a, b).is_none()
        }
    }
}

/// Verdicts for every kind, indexed by `NormalityKind as usize`.
#[derive(Clone, Debug)]
pub struct NormalityProfile(pub Vec<Verdict>);

impl NormalityProfile {
    pub fn of(table: &ClassTable) -> Self {
        NormalityProfile(
            NormalityKind::ALL
                .iter()
                .map(|&k| is_normal_kind(table, k))
                .collect(),
        )
    }

    pub fn get(&self, k: NormalityKind) -> &Verdict {
        &self.0[k as usize]
    }

    pub fn holds(&self, k: NormalityKind) -> bool {
        self.get(k).holds
    }
}

/// Implications between normality kinds.
pub fn normality_arrows() -> Vec<(NormalityKind, NormalityKind)> {
    use NormalityKind::*;
    vec![
        (Normal, PiNormal),
        (PiNormal, AlmostNormal),
        (AlmostNormal, SoftlyNormal),
        (SoftlyNormal, MildlyNormal),
        (Normal, QuasiNormal),
        (QuasiNormal, SoftlyNormal),
        (PiNormal, PiGDhatNormal),
        (AlmostNormal, AlmostPiGDhat),
        (SoftlyNormal, SoftlyPiGDhat),
        (MildlyNormal, MildlyPiGDhat),
        (QuasiNormal, QuasiPiGDhat),
        (QuasiPiGDhat, SoftlyPiGDhat),
        (SoftlyPiGDhat, MildlyPiGDhat),
        (PiGDhatNormal, AlmostPiGDhat),
        (AlmostPiGDhat, SoftlyPiGDhat),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalityDiagramVerdict {
    pub arrows_checked: usize,
    pub violation: Option<(NormalityKind, NormalityKind)>,
}

impl NormalityDiagramVerdict {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

pub fn check_normality_diagram(profile: &NormalityProfile) -> NormalityDiagramVerdict {
    let arrows = normality_arrows();
    let violation = arrows
        .iter()
        .copied()
        .find(|&(from, to)| profile.holds(from) && !profile.holds(to));
    NormalityDiagramVerdict {
        arrows_checked: arrows.len(),
        violation,
    }
}

/// One condition of an equivalence theorem, evaluated on its own.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    pub label: &'static str,
    pub holds: bool,
    /// For a failing condition, the offending `(A, B)` pair.
    pub witness: Option<(Subset, Subset)>,
    /// Reported alongside but excluded from the agreement test.
    pub informational: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub conditions: Vec<Condition>,
}

impl EquivalenceReport {
    fn counted(&self) -> impl Iterator<Item = &Condition> {
        self.conditions.iter().filter(|c| !c.informational)
    }

    pub fn agree(&self) -> bool {
        self.disagreement().is_none()
    }

    /// First pair of counted conditions with different outcomes.
    pub fn disagreement(&self) -> Option<(&Condition, &Condition)> {
        let first = self.counted().next()?;
        self.counted()
            .find(|c| c.holds != first.holds)
            .map(|c| (first, c))
    }
}

fn condition(label: &'static str, witness: Option<(Subset, Subset)>) -> Condition {
    Condition {
        label,
        holds: witness.is_none(),
        witness,
        informational: false,
    }
}

/// Some πgD̂-open `U` with `a ⊆ U ⊆ πgD̂cl(U) ⊆ b`.
fn interpolate(table: &ClassTable, a: Subset, b: Subset) -> Option<Subset> {
    table
        .pigdhat_open()
        .supersets_of(a)
        .find(|&u| table.pigdhat_closure(u).is_subset_of(b))
}

/// First `(A, B)` with `A ⊆ B` and no interpolating πgD̂-open set.
fn interpolation_failure(
    table: &ClassTable,
    inner: &SubsetFamily,
    outer: &SubsetFamily,
) -> Option<(Subset, Subset)> {
    for a in inner.iter() {
        for b in outer.supersets_of(a) {
            if interpolate(table, a, b).is_none() {
                return Some((a, b));
            }
        }
    }
    None
}

/// The four equivalent characterizations of softly πgD̂-normality via
/// interpolation and closure-disjoint separation.
pub fn softly_interpolation_check(table: &ClassTable) -> EquivalenceReport {
    let softly = is_normal_kind(table, NormalityKind::SoftlyPiGDhat);
    let pi_closed = table.pi_closed();
    let regular_open = table.kind(crate::weakopen::OpenKind::RegularOpen);
    let regular_closed = table.regular_closed();
    let pi_open = table.kind(crate::weakopen::OpenKind::PiOpen);

    let b = interpolation_failure(table, pi_closed, regular_open);
    let c = interpolation_failure(table, regular_closed, pi_open);

    let open = table.pigdhat_open();
    let d = qualifying_pairs(table, NormalityKind::SoftlyPiGDhat.scheme().pairs)
        .into_iter()
        .find(|&(a, b)| {
            !open.supersets_of(a).any(|u| {
                u.is_disjoint(b)
                    && open.supersets_of(b).any(|v| {
                        u.is_disjoint(v)
                            && table
                                .pigdhat_closure(u)
                                .is_disjoint(table.pigdhat_closure(v))
                    })
            })
        });

    EquivalenceReport {
        conditions: vec![
            condition("softly-pigdhat", softly.witness),
            condition("interpolate-pi-closed-in-regular-open", b),
            condition("interpolate-regular-closed-in-pi-open", c),
            condition("separate-with-disjoint-closures", d),
        ],
    }
}

/// Cover form: for π-open `U` and regular open `V` with `U ∪ V = X`, look
/// for πgD̂-closed `G ⊆ U`, `H ⊆ V` with `G ∪ H = X` (and `G ∩ H = ∅` when
/// `disjoint`).
fn cover_failure(table: &ClassTable, disjoint: bool) -> Option<(Subset, Subset)> {
    let full = table.space().full();
    let closed = table.pigdhat_closed();
    let pi_open = table.kind(crate::weakopen::OpenKind::PiOpen);
    let regular_open = table.kind(crate::weakopen::OpenKind::RegularOpen);
    for u in pi_open.iter() {
        for v in regular_open.iter() {
            if u.union(v) != full {
                continue;
            }
            let found = closed.subsets_of(u).any(|g| {
                closed
                    .subsets_of(v)
                    .any(|h| g.union(h) == full && (!disjoint || g.is_disjoint(h)))
            });
            if !found {
                return Some((u, v));
            }
        }
    }
    None
}

/// Cover characterization of softly πgD̂-normality. The disjoint-cover
/// reading is reported but not counted toward agreement.
pub fn softly_cover_check(table: &ClassTable) -> EquivalenceReport {
    let softly = is_normal_kind(table, NormalityKind::SoftlyPiGDhat);
    let interpolation = interpolation_failure(
        table,
        table.pi_closed(),
        table.kind(crate::weakopen::OpenKind::RegularOpen),
    );
    let mut literal = condition("disjoint-closed-cover", cover_failure(table, true));
    literal.informational = true;
    EquivalenceReport {
        conditions: vec![
            condition("softly-pigdhat", softly.witness),
            condition("closed-cover", cover_failure(table, false)),
            condition("interpolate-pi-closed-in-regular-open", interpolation),
            literal,
        ],
    }
}

/// Some clopen `C` with `b ⊆ C` and `a ∩ C = ∅`. On a finite space this is
/// exactly the existence of a continuous `f: X → [0,1]` with `f(a) = {0}`
/// and `f(b) = {1}`: continuity forces every fiber to be open, hence the
/// fiber over 1 is contained in a clopen union of fibers avoiding 0.
pub fn clopen_separator(table: &ClassTable, a: Subset, b: Subset) -> Option<Subset> {
    let t = table.space();
    t.opens()
        .supersets_of(b)
        .find(|&c| c.is_disjoint(a) && t.is_closed(c))
}

/// Compare softly πgD̂-normality with the existence of separating
/// continuous real functions for every (π-closed, regular closed) pair.
pub fn urysohn_check(table: &ClassTable) -> EquivalenceReport {
    let softly = is_normal_kind(table, NormalityKind::SoftlyPiGDhat);
    let no_function = qualifying_pairs(table, NormalityKind::SoftlyPiGDhat.scheme().pairs)
        .into_iter()
        .find(|&(a, b)| clopen_separator(table, a, b).is_none());
    EquivalenceReport {
        conditions: vec![
            condition("softly-pigdhat", softly.witness),
            condition("separating-function", no_function),
        ],
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeparationAxiom {
    T1,
    T2,
    T3,
}

impl SeparationAxiom {
    pub const ALL: [SeparationAxiom; 3] = [
        SeparationAxiom::T1,
        SeparationAxiom::T2,
        SeparationAxiom::T3,
    ];

    pub fn token(self) -> &'static str {
        match self {
            SeparationAxiom::T1 => "pigdhat-t1",
            SeparationAxiom::T2 => "pigdhat-t2",
            SeparationAxiom::T3 => "pigdhat-t3",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomVerdict {
    pub holds: bool,
    /// Offending points; for T1 both entries are the same point.
    pub witness: Option<(usize, usize)>,
}

/// πgD̂ separation axioms. T1: singletons are πgD̂-closed. T2: distinct
/// points have disjoint πgD̂-open neighborhoods. T3: T1 and softly
/// πgD̂-normal.
pub fn separation_axiom(table: &ClassTable, axiom: SeparationAxiom) -> AxiomVerdict {
    let n = table.n();
    let t1 = || {
        (0..n)
            .find(|&x| !table.pigdhat_closed().contains(Subset::singleton(x)))
            .map(|x| (x, x))
    };
    let witness = match axiom {
        SeparationAxiom::T1 => t1(),
        SeparationAxiom::T2 => {
            let open = table.pigdhat_open();
            (0..n)
                .flat_map(|x| (0..n).map(move |y| (x, y)))
                .filter(|(x, y)| x < y)
                .find(|&(x, y)| {
                    separate(open, Subset::singleton(x), Subset::singleton(y)).is_none()
                })
        }
        SeparationAxiom::T3 => t1().or_else(|| {
            is_normal_kind(table, NormalityKind::SoftlyPiGDhat)
                .witness
                .map(|(a, b)| (a.iter().next().unwrap_or(0), b.iter().next().unwrap_or(0)))
        }),
    };
    AxiomVerdict {
        holds: witness.is_none(),
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::Topology;

    fn set(bits: &[usize]) -> Subset {
        Subset::from_indices(bits.iter().copied())
    }

    fn space(n: usize, sets: &[&[usize]]) -> Topology {
        Topology::new(n, sets.iter().map(|s| set(s))).unwrap()
    }

    fn ex_3_7() -> Topology {
        space(
            4,
            &[
                &[],
                &[0],
                &[2],
                &[0, 2],
                &[1, 3],
                &[0, 1, 3],
                &[1, 2, 3],
                &[0, 1, 2, 3],
            ],
        )
    }

    fn ex_3_9() -> Topology {
        space(3, &[&[], &[0], &[0, 1], &[0, 2], &[0, 1, 2]])
    }

    #[test]
    fn quasi_normal_example_with_given_separators() {
        let table = ClassTable::build(&ex_3_7());
        assert!(is_normal_kind(&table, NormalityKind::QuasiNormal).holds);
        assert!(table.pi_closed().contains(set(&[0])));
        assert!(table.pi_closed().contains(set(&[2])));
        assert!(separates(
            table.space().opens(),
            set(&[0]),
            set(&[2]),
            set(&[0]),
            set(&[1, 2, 3])
        ));
    }

    #[test]
    fn not_normal_but_almost_normal() {
        let table = ClassTable::build(&ex_3_9());
        let v = is_normal_kind(&table, NormalityKind::Normal);
        assert!(!v.holds);
        assert_eq!(v.witness, Some((set(&[1]), set(&[2]))));
        assert!(replay(&table, NormalityKind::Normal, &v));
        assert!(is_normal_kind(&table, NormalityKind::AlmostNormal).holds);
        assert_eq!(table.regular_closed().len(), 2);
    }

    #[test]
    fn every_subset_pigdhat_closed_when_pi_open_is_trivial() {
        let table = ClassTable::build(&ex_3_9());
        assert_eq!(table.pigdhat_closed().len(), 8);
        assert!(is_normal_kind(&table, NormalityKind::PiGDhatNormal).holds);
    }

    #[test]
    fn interpolation_examples() {
        assert!(softly_interpolation_check(&ClassTable::build(&ex_3_7())).agree());
        let r = softly_interpolation_check(&ClassTable::build(&Topology::indiscrete(2)));
        assert!(r.agree());
        assert!(r.conditions.iter().all(|c| c.holds));
        assert!(softly_cover_check(&ClassTable::build(&ex_3_7())).agree());
        assert!(softly_cover_check(&ClassTable::build(&Topology::discrete(3))).agree());
    }

    #[test]
    fn clopen_separator_example() {
        let table = ClassTable::build(&ex_3_7());
        assert_eq!(
            clopen_separator(&table, set(&[0, 2]), set(&[1, 3])),
            Some(set(&[1, 3]))
        );
        assert!(urysohn_check(&ClassTable::build(&Topology::discrete(1))).agree());
    }

    #[test]
    fn separation_axioms_small() {
        let table = ClassTable::build(&Topology::discrete(2));
        for ax in SeparationAxiom::ALL {
            assert!(separation_axiom(&table, ax).holds);
        }
        // indiscrete: π-open family is {∅, X}, so every subset is πgD̂-open
        let table = ClassTable::build(&Topology::indiscrete(2));
        assert_eq!(table.pigdhat_open().len(), 4);
        assert!(separation_axiom(&table, SeparationAxiom::T2).holds);
    }

    #[test]
    fn one_point_space_all_kinds_hold() {
        let table = ClassTable::build(&Topology::discrete(1));
        let p = NormalityProfile::of(&table);
        assert!(NormalityKind::ALL.iter().all(|&k| p.holds(k)));
        assert!(check_normality_diagram(&p).holds());
    }

    #[test]
    fn tokens() {
        for k in NormalityKind::ALL {
            assert_eq!(k.token().parse::<NormalityKind>().unwrap(), k);
        }
    }
}
