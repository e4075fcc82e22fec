//! Exhaustive theorem checking over every space (and subspace, and map)
//! within a point-count scope.
//!
//! Theorems quantified over maps are checked either on all labeled spaces
//! or, when that exceeds the budget, on one representative per relabeling
//! class of domain and codomain. Every map between labeled spaces is a
//! relabeling of a map between representatives, so both coverages reach
//! every instance up to isomorphism.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::atlas::{canonical_spaces, enumerate_topologies};
use crate::error::{HarnessError, TokenError};
use crate::genclass::{check_implication_diagram, ClassTable, ClosedClass};
use crate::maps::{check_map_diagram, describe_assignment, Assignments, MapClass, MapRef};
use crate::normality::{
    check_normality_diagram, check_scheme, separation_axiom, softly_cover_check,
    softly_interpolation_check, urysohn_check, EquivalenceReport, NormalityKind, NormalityProfile,
    NormalityScheme, PairScheme, PairSide, SeparationAxiom, Separator,
};
use crate::report::{Record, Report};
use crate::space::Topology;
use crate::subset::Subset;
use crate::weakopen::OpenKind;

pub const DEFAULT_BUDGET: u128 = 100_000_000;
/// Counterexamples kept in full per theorem reading.
pub const MAX_EXAMPLES: usize = 10;
pub const JOBS_ENV: &str = "FINITOP_JOBS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    SoftlyInterpolation,
    SoftlyCover,
    Urysohn,
    OpenInjectiveImage,
    TopologicalProperty,
    ClosedDomainTrace,
    ClosedDomainHereditary,
    ClopenHereditary,
    T3ImpliesT2,
    ClassDiagram,
    MapDiagram,
    AlmostPiContinuousImage,
    AlmostClosedSurjection,
    ContinuousClosedSurjection,
    InteriorCharacterization,
    ClosedIrresoluteInjection,
    AlmostClosedCharacterization,
    RcPreservingInjection,
    PiContinuousSurjection,
    AlmostPiContinuousSurjection,
    AlmostContinuousSurjection,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    Space,
    Subspace,
    Map,
}

impl TheoremId {
    pub const ALL: [TheoremId; 21] = [
        TheoremId::SoftlyInterpolation,
        TheoremId::SoftlyCover,
        TheoremId::Urysohn,
        TheoremId::OpenInjectiveImage,
        TheoremId::TopologicalProperty,
        TheoremId::ClosedDomainTrace,
        TheoremId::ClosedDomainHereditary,
        TheoremId::ClopenHereditary,
        TheoremId::T3ImpliesT2,
        TheoremId::ClassDiagram,
        TheoremId::MapDiagram,
        TheoremId::AlmostPiContinuousImage,
        TheoremId::AlmostClosedSurjection,
        TheoremId::ContinuousClosedSurjection,
        TheoremId::InteriorCharacterization,
        TheoremId::ClosedIrresoluteInjection,
        TheoremId::AlmostClosedCharacterization,
        TheoremId::RcPreservingInjection,
        TheoremId::PiContinuousSurjection,
        TheoremId::AlmostPiContinuousSurjection,
        TheoremId::AlmostContinuousSurjection,
    ];

    pub fn token(self) -> &'static str {
        use TheoremId::*;
        match self {
            SoftlyInterpolation => "3.12",
            SoftlyCover => "3.13",
            Urysohn => "3.14",
            OpenInjectiveImage => "3.15",
            TopologicalProperty => "3.16",
            ClosedDomainTrace => "3.17",
            ClosedDomainHereditary => "3.18",
            ClopenHereditary => "3.19",
            T3ImpliesT2 => "3.21",
            ClassDiagram => "diagram",
            MapDiagram => "map-diagram",
            AlmostPiContinuousImage => "4.4",
            AlmostClosedSurjection => "4.5",
            ContinuousClosedSurjection => "5.1",
            InteriorCharacterization => "5.2",
            ClosedIrresoluteInjection => "5.3",
            AlmostClosedCharacterization => "5.4",
            RcPreservingInjection => "5.5",
            PiContinuousSurjection => "5.6",
            AlmostPiContinuousSurjection => "5.7",
            AlmostContinuousSurjection => "5.8",
        }
    }

    pub fn scope(self) -> Scope {
        use TheoremId::*;
        match self {
            SoftlyInterpolation
            | SoftlyCover
            | Urysohn
            | TopologicalProperty
            | T3ImpliesT2
            | ClassDiagram
            | InteriorCharacterization => Scope::Space,
            ClosedDomainTrace | ClosedDomainHereditary | ClopenHereditary => Scope::Subspace,
            _ => Scope::Map,
        }
    }

    /// Paper-independent facts whose failure is an engine defect rather
    /// than a finding about the statement.
    pub fn is_hard(self) -> bool {
        matches!(
            self,
            TheoremId::ClassDiagram
                | TheoremId::MapDiagram
                | TheoremId::TopologicalProperty
                | TheoremId::T3ImpliesT2
        )
    }

    /// Names of the readings checked, the first being the literal one.
    pub fn readings(self) -> &'static [&'static str] {
        match self {
            TheoremId::SoftlyCover => &["", "disjoint-cover"],
            TheoremId::RcPreservingInjection => &["", "pi-closed-pairs"],
            TheoremId::PiContinuousSurjection => &["", "closed-pairs"],
            _ => &[""],
        }
    }

    /// Parse a comma-separated list of tokens and ranges such as
    /// `3.12,3.13,5.1-5.8` or `all`.
    pub fn parse_list(s: &str) -> Result<Vec<TheoremId>, TokenError> {
        let mut out = Vec::new();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            if item == "all" {
                out.extend(TheoremId::ALL);
                continue;
            }
            if let Some((lo, hi)) = item.split_once('-').filter(|(lo, _)| lo.contains('.')) {
                let key = |t: &str| -> Result<(u32, u32), TokenError> {
                    let (a, b) = t
                        .split_once('.')
                        .ok_or_else(|| TokenError::Malformed(format!("bad range `{item}`")))?;
                    Ok((
                        a.parse()
                            .map_err(|_| TokenError::Malformed(format!("bad range `{item}`")))?,
                        b.parse()
                            .map_err(|_| TokenError::Malformed(format!("bad range `{item}`")))?,
                    ))
                };
                let (lo, hi) = (key(lo)?, key(hi)?);
                let hits: Vec<TheoremId> = TheoremId::ALL
                    .into_iter()
                    .filter(|t| key(t.token()).is_ok_and(|k| lo <= k && k <= hi))
                    .collect();
                if hits.is_empty() {
                    return Err(TokenError::Unknown(item.to_string()));
                }
                out.extend(hits);
                continue;
            }
            out.push(item.parse()?);
        }
        let mut seen = Vec::new();
        out.retain(|t| {
            let fresh = !seen.contains(t);
            seen.push(*t);
            fresh
        });
        Ok(out)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for TheoremId {
    type Err = TokenError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.token() == s)
            .ok_or_else(|| TokenError::Unknown(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coverage {
    Labeled,
    UpToRelabeling,
}

impl Coverage {
    pub fn token(self) -> &'static str {
        match self {
            Coverage::Labeled => "labeled",
            Coverage::UpToRelabeling => "up-to-relabeling",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CoveragePolicy {
    /// Labeled when within budget, otherwise up to relabeling.
    #[default]
    Auto,
    Labeled,
    UpToRelabeling,
}

#[derive(Clone, Debug)]
pub struct HarnessConfig {
    /// Spaces with `1..=scope` points are checked.
    pub scope: usize,
    pub budget: u128,
    pub jobs: usize,
    pub coverage: CoveragePolicy,
}

impl HarnessConfig {
    pub fn new(scope: usize) -> Self {
        HarnessConfig {
            scope,
            budget: DEFAULT_BUDGET,
            jobs: default_jobs(),
            coverage: CoveragePolicy::Auto,
        }
    }
}

/// Worker count from the environment, else the available parallelism.
pub fn default_jobs() -> usize {
    std::env::var(JOBS_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&j| j > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub subject: String,
    pub witness: String,
}

/// Result of one theorem reading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremLedger {
    pub theorem: TheoremId,
    pub reading: &'static str,
    pub coverage: Coverage,
    pub instances: u64,
    pub hypothesis_held: u64,
    pub passed: u64,
    pub counterexamples: u64,
    /// First [`MAX_EXAMPLES`] counterexamples in enumeration order.
    pub examples: Vec<Finding>,
    /// Per-space verdict lines for space-level theorems.
    pub per_space: Vec<Record>,
}

impl TheoremLedger {
    pub fn vacuous(&self) -> u64 {
        self.instances - self.hypothesis_held
    }

    pub fn check_id(&self) -> String {
        if self.reading.is_empty() {
            self.theorem.token().to_string()
        } else {
            format!("{}/{}", self.theorem.token(), self.reading)
        }
    }

    pub fn summary(&self) -> String {
        format!(
            "instances={} hypothesis={} vacuous={} passed={} counterexamples={} coverage={}",
            self.instances,
            self.hypothesis_held,
            self.vacuous(),
            self.passed,
            self.counterexamples,
            self.coverage.token()
        )
    }

    pub fn verdict(&self) -> &'static str {
        match (self.counterexamples, self.theorem.is_hard()) {
            (0, _) => "pass",
            (_, true) => "VIOLATION",
            (_, false) => "counterexample",
        }
    }
}

/// Render ledgers: per-space lines, then counterexamples and a summary for
/// each theorem reading.
pub fn ledger_report(ledgers: &[TheoremLedger]) -> Report {
    let mut r = Report::new();
    for l in ledgers {
        for rec in &l.per_space {
            r.push(rec.clone());
        }
        for ex in &l.examples {
            r.push(Record::new(
                &ex.subject,
                l.check_id(),
                "counterexample",
                &ex.witness,
            ));
        }
        r.push(Record::new(
            "summary",
            l.check_id(),
            l.verdict(),
            l.summary(),
        ));
    }
    r
}

#[derive(Clone, Debug)]
enum Outcome {
    Vacuous,
    Pass(String),
    Fail(String, String),
}

impl Outcome {
    fn check(held: bool, label: &str, witness: Option<String>) -> Outcome {
        match witness {
            Some(w) if held => Outcome::Fail("counterexample".into(), w),
            _ if !held => Outcome::Vacuous,
            _ => Outcome::Pass(label.into()),
        }
    }
}

struct Space {
    id: String,
    table: ClassTable,
    profile: NormalityProfile,
}

impl Space {
    fn t(&self) -> &Topology {
        self.table.space()
    }

    fn softly(&self) -> bool {
        self.profile.holds(NormalityKind::SoftlyPiGDhat)
    }
}

fn pair_text(t: &Topology, w: Option<(Subset, Subset)>) -> String {
    w.map(|(a, b)| format!("A={} B={}", t.show(a), t.show(b)))
        .unwrap_or_default()
}

fn space_ids(scope: usize, coverage: Coverage) -> Result<Vec<(String, Topology)>, HarnessError> {
    let mut out = Vec::new();
    for n in 1..=scope {
        match coverage {
            Coverage::Labeled => {
                for (i, t) in enumerate_topologies(n)?.into_iter().enumerate() {
                    out.push((format!("n{n}#{i}"), t));
                }
            }
            Coverage::UpToRelabeling => {
                for (i, c) in canonical_spaces(n)?.into_iter().enumerate() {
                    out.push((format!("n{n}c#{i}"), c.topology));
                }
            }
        }
    }
    Ok(out)
}

fn counts(scope: usize, coverage: Coverage) -> Vec<(usize, u128)> {
    let labeled = [1u128, 4, 29, 355, 6942];
    let canonical = [1u128, 3, 9, 33, 139];
    (1..=scope)
        .map(|n| {
            let table = match coverage {
                Coverage::Labeled => &labeled,
                Coverage::UpToRelabeling => &canonical,
            };
            // beyond the enumerable range the estimate only needs to be large
            (n, table.get(n - 1).copied().unwrap_or(u128::MAX >> 64))
        })
        .collect()
}

/// Estimated elementary membership checks for one theorem.
pub fn estimate(theorem: TheoremId, scope: usize, coverage: Coverage) -> u128 {
    let c = counts(scope, coverage);
    let pow = |b: usize, e: usize| (b as u128).saturating_pow(e as u32);
    match theorem.scope() {
        Scope::Space => c.iter().map(|&(n, k)| k.saturating_mul(pow(4, n))).sum(),
        Scope::Subspace => c.iter().map(|&(n, k)| k.saturating_mul(pow(8, n))).sum(),
        Scope::Map => c
            .iter()
            .flat_map(|&(d, kd)| c.iter().map(move |&(m, km)| (d, kd, m, km)))
            .map(|(d, kd, m, km)| {
                kd.saturating_mul(km)
                    .saturating_mul(pow(m, d))
                    .saturating_mul(pow(2, d + m))
            })
            .fold(0u128, u128::saturating_add),
    }
}

fn choose_coverage(theorem: TheoremId, config: &HarnessConfig) -> Result<Coverage, HarnessError> {
    let fits = |c| estimate(theorem, config.scope, c) <= config.budget;
    let too_large = |c| HarnessError::ScopeTooLarge {
        scope: config.scope,
        estimate: estimate(theorem, config.scope, c),
        budget: config.budget,
    };
    match config.coverage {
        CoveragePolicy::Labeled if fits(Coverage::Labeled) => Ok(Coverage::Labeled),
        CoveragePolicy::Labeled => Err(too_large(Coverage::Labeled)),
        CoveragePolicy::UpToRelabeling | CoveragePolicy::Auto if fits(Coverage::UpToRelabeling) => {
            if config.coverage == CoveragePolicy::Auto && fits(Coverage::Labeled) {
                Ok(Coverage::Labeled)
            } else {
                Ok(Coverage::UpToRelabeling)
            }
        }
        _ => Err(too_large(Coverage::UpToRelabeling)),
    }
}

/// Run the given theorems. Results are identical for any worker count.
pub fn run(
    config: &HarnessConfig,
    theorems: &[TheoremId],
) -> Result<Vec<TheoremLedger>, HarnessError> {
    let plan: Vec<(TheoremId, Coverage)> = theorems
        .iter()
        .map(|&t| choose_coverage(t, config).map(|c| (t, c)))
        .collect::<Result<_, _>>()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| {
        let mut cache: Vec<(Coverage, Vec<Space>)> = Vec::new();
        let mut out = Vec::new();
        for (theorem, coverage) in plan {
            if !cache.iter().any(|(c, _)| *c == coverage) {
                let ids = space_ids(config.scope, coverage)?;
                let spaces: Vec<Space> = ids
                    .into_par_iter()
                    .map(|(id, t)| {
                        let table = ClassTable::build(&t);
                        let profile = NormalityProfile::of(&table);
                        Space { id, table, profile }
                    })
                    .collect();
                cache.push((coverage, spaces));
            }
            let spaces = &cache
                .iter()
                .find(|(c, _)| *c == coverage)
                .expect("cached")
                .1;
            out.extend(run_theorem(theorem, coverage, spaces));
        }
        Ok(out)
    })
}

#[derive(Default, Clone)]
struct Tally {
    instances: u64,
    held: u64,
    passed: u64,
    failed: u64,
    examples: Vec<Finding>,
    per_space: Vec<Record>,
}

impl Tally {
    fn add(&mut self, subject: &str, o: Outcome) {
        self.instances += 1;
        match o {
            Outcome::Vacuous => {}
            Outcome::Pass(_) => {
                self.held += 1;
                self.passed += 1;
            }
            Outcome::Fail(_, w) => {
                self.held += 1;
                self.failed += 1;
                if self.examples.len() < MAX_EXAMPLES {
                    self.examples.push(Finding {
                        subject: subject.to_string(),
                        witness: w,
                    });
                }
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.instances += other.instances;
        self.held += other.held;
        self.passed += other.passed;
        self.failed += other.failed;
        for ex in other.examples {
            if self.examples.len() < MAX_EXAMPLES {
                self.examples.push(ex);
            }
        }
        self.per_space.extend(other.per_space);
        self
    }

    fn ledger(
        self,
        theorem: TheoremId,
        reading: &'static str,
        coverage: Coverage,
    ) -> TheoremLedger {
        TheoremLedger {
            theorem,
            reading,
            coverage,
            instances: self.instances,
            hypothesis_held: self.held,
            passed: self.passed,
            counterexamples: self.failed,
            examples: self.examples,
            per_space: self.per_space,
        }
    }
}

fn run_theorem(theorem: TheoremId, coverage: Coverage, spaces: &[Space]) -> Vec<TheoremLedger> {
    let readings = theorem.readings();
    let empty = || vec![Tally::default(); readings.len()];
    let merge = |a: Vec<Tally>, b: Vec<Tally>| -> Vec<Tally> {
        a.into_iter().zip(b).map(|(x, y)| x.merge(y)).collect()
    };
    let tallies: Vec<Tally> = match theorem.scope() {
        Scope::Space => spaces
            .par_iter()
            .map(|s| {
                let mut ts = empty();
                for (k, o) in space_outcomes(theorem, s).into_iter().enumerate() {
                    let check = if readings[k].is_empty() {
                        theorem.token().to_string()
                    } else {
                        format!("{}/{}", theorem.token(), readings[k])
                    };
                    let (verdict, witness) = match &o {
                        Outcome::Vacuous => ("vacuous".to_string(), String::new()),
                        Outcome::Pass(l) => (l.clone(), String::new()),
                        Outcome::Fail(l, w) => (l.clone(), w.clone()),
                    };
                    ts[k]
                        .per_space
                        .push(Record::new(&s.id, check, verdict, witness));
                    ts[k].add(&s.id, o);
                }
                ts
            })
            .reduce_with(merge)
            .unwrap_or_else(empty),
        Scope::Subspace => spaces
            .par_iter()
            .map(|s| {
                let mut ts = empty();
                for (m, o) in subspace_outcomes(theorem, s) {
                    ts[0].add(&format!("{} M={}", s.id, s.t().show(m)), o);
                }
                ts
            })
            .reduce_with(merge)
            .unwrap_or_else(empty),
        Scope::Map => {
            let pairs: Vec<(&Space, &Space)> = spaces
                .iter()
                .flat_map(|x| spaces.iter().map(move |y| (x, y)))
                .collect();
            pairs
                .par_iter()
                .map(|&(x, y)| {
                    let mut ts = empty();
                    for image in Assignments::new(x.t().n(), y.t().n()) {
                        let f = MapRef::new(&x.table, &y.table, &image);
                        let subject = format!(
                            "{} -> {} f={}",
                            x.id,
                            y.id,
                            describe_assignment(x.t(), y.t(), &image)
                        );
                        for (k, o) in map_outcomes(theorem, x, y, &f).into_iter().enumerate() {
                            let o = match o {
                                Outcome::Fail(l, w) => Outcome::Fail(
                                    l,
                                    format!("X={} Y={} {}", x.t().compact(), y.t().compact(), w),
                                ),
                                other => other,
                            };
                            ts[k].add(&subject, o);
                        }
                    }
                    ts
                })
                .reduce_with(merge)
                .unwrap_or_else(empty)
        }
    };
    tallies
        .into_iter()
        .zip(readings)
        .map(|(t, &r)| t.ledger(theorem, r, coverage))
        .collect()
}

fn equivalence_outcome(t: &Topology, r: &EquivalenceReport) -> Outcome {
    match r.disagreement() {
        None => Outcome::Pass(
            if r.conditions[0].holds {
                "agree:holds"
            } else {
                "agree:fails"
            }
            .into(),
        ),
        Some((a, b)) => {
            let failing = if a.holds { b } else { a };
            Outcome::Fail(
                "disagree".into(),
                format!(
                    "{}={} {}={} {}",
                    a.label,
                    a.holds,
                    b.label,
                    b.holds,
                    pair_text(t, failing.witness)
                ),
            )
        }
    }
}

fn space_outcomes(theorem: TheoremId, s: &Space) -> Vec<Outcome> {
    let t = s.t();
    let table = &s.table;
    match theorem {
        TheoremId::SoftlyInterpolation => {
            vec![equivalence_outcome(t, &softly_interpolation_check(table))]
        }
        TheoremId::SoftlyCover => {
            let r = softly_cover_check(table);
            let literal = r
                .conditions
                .iter()
                .find(|c| c.informational)
                .expect("literal reading");
            let softly = &r.conditions[0];
            let second = if literal.holds == softly.holds {
                Outcome::Pass(format!(
                    "agree:{}",
                    if softly.holds { "holds" } else { "fails" }
                ))
            } else {
                let w = literal.witness.or(softly.witness);
                Outcome::Fail(
                    "disagree".into(),
                    format!(
                        "{}={} {}={} {}",
                        softly.label,
                        softly.holds,
                        literal.label,
                        literal.holds,
                        w.map(|(u, v)| format!("U={} V={}", t.show(u), t.show(v)))
                            .unwrap_or_default()
                    ),
                )
            };
            vec![equivalence_outcome(t, &r), second]
        }
        TheoremId::Urysohn => vec![equivalence_outcome(t, &urysohn_check(table))],
        TheoremId::TopologicalProperty => vec![homeomorphism_invariance(s)],
        TheoremId::T3ImpliesT2 => {
            let t3 = separation_axiom(table, SeparationAxiom::T3).holds;
            let t2 = separation_axiom(table, SeparationAxiom::T2);
            let w = t2
                .witness
                .map(|(x, y)| format!("x={} y={}", t.labels()[x], t.labels()[y]));
            vec![Outcome::check(t3, "holds", if t2.holds { None } else { w })]
        }
        TheoremId::ClassDiagram => {
            let sets = check_implication_diagram(table);
            let kinds = check_normality_diagram(&s.profile);
            let w = sets
                .violation
                .map(|(arrow, a)| format!("{arrow} fails at A={}", t.show(a)))
                .or_else(|| kinds.violation.map(|(a, b)| format!("{a} => {b} fails")));
            vec![Outcome::check(true, "holds", w)]
        }
        TheoremId::InteriorCharacterization => {
            let open = table.pigdhat_open();
            let w = t
                .subsets()
                .find(|&a| {
                    let int = table.pigdhat_interior(a);
                    let side = table.closed().subsets_of(a).all(|f| f.is_subset_of(int));
                    open.contains(a) != side
                })
                .map(|a| format!("A={}", t.show(a)));
            vec![Outcome::check(true, "holds", w)]
        }
        _ => unreachable!("not a space theorem"),
    }
}

fn homeomorphism_invariance(s: &Space) -> Outcome {
    let t = s.t();
    for perm in crate::atlas::canonical::permutations(t.n()) {
        let p = t.permute(&perm);
        let table = ClassTable::build(&p);
        for c in ClosedClass::ALL {
            if s.table.class(c).permute(&perm) != *table.class(c) {
                return Outcome::Fail(
                    "VIOLATION".into(),
                    format!("class {c} not carried by relabeling {perm:?}"),
                );
            }
        }
        for k in OpenKind::ALL {
            if s.table.kind(k).permute(&perm) != *table.kind(k) {
                return Outcome::Fail(
                    "VIOLATION".into(),
                    format!("kind {k} not carried by relabeling {perm:?}"),
                );
            }
        }
        let profile = NormalityProfile::of(&table);
        if let Some(k) = NormalityKind::ALL
            .into_iter()
            .find(|&k| profile.holds(k) != s.profile.holds(k))
        {
            return Outcome::Fail(
                "VIOLATION".into(),
                format!("{k} changes under relabeling {perm:?}"),
            );
        }
    }
    Outcome::Pass("holds".into())
}

fn subspace_outcomes(theorem: TheoremId, s: &Space) -> Vec<(Subset, Outcome)> {
    let t = s.t();
    let carriers: Vec<Subset> = match theorem {
        TheoremId::ClopenHereditary => t.subsets().filter(|&m| t.is_clopen(m)).collect(),
        _ => s.table.regular_closed().iter().collect(),
    };
    carriers
        .into_iter()
        .filter(|m| !m.is_empty())
        .map(|m| {
            let sub = t.subspace(m).expect("nonempty carrier");
            let st = ClassTable::build(&sub.topology);
            let o = match theorem {
                TheoremId::ClosedDomainTrace => {
                    let w = s
                        .table
                        .pigdhat_open()
                        .iter()
                        .find(|&a| !st.pigdhat_open().contains(sub.restrict(a)))
                        .map(|a| format!("X={} A={}", t.compact(), t.show(a)));
                    Outcome::check(true, "holds", w)
                }
                _ => {
                    let v = check_scheme(&st, NormalityKind::SoftlyPiGDhat.scheme());
                    let w = v.witness.map(|(a, b)| {
                        format!(
                            "X={} A={} B={}",
                            t.compact(),
                            t.show(sub.lift(a)),
                            t.show(sub.lift(b))
                        )
                    });
                    Outcome::check(s.softly(), "holds", w)
                }
            };
            (m, o)
        })
        .collect()
}

/// Literal and pair-variant conclusions about one end of a map.
fn softly_witness(s: &Space) -> Option<String> {
    s.profile
        .get(NormalityKind::SoftlyPiGDhat)
        .witness
        .map(|w| pair_text(s.t(), Some(w)))
}

fn pairs_witness(s: &Space, pairs: PairScheme) -> Option<String> {
    let v = check_scheme(
        &s.table,
        NormalityScheme {
            pairs,
            separator: Separator::PiGDhatOpen,
        },
    );
    v.witness.map(|w| pair_text(s.t(), Some(w)))
}

/// `f` is almost πgD̂-closed iff for every `S ⊆ Y` and regular open
/// `U ⊇ f⁻¹(S)` some πgD̂-open `V ⊇ S` has `f⁻¹(V) ⊆ U`.
fn almost_closed_condition_failure(f: &MapRef) -> Option<(Subset, Subset)> {
    let y = f.cod;
    let ro = f.dom.kind(OpenKind::RegularOpen);
    for s in y.space().subsets() {
        let pre = f.preimage(s);
        for u in ro.supersets_of(pre) {
            if !y
                .pigdhat_open()
                .supersets_of(s)
                .any(|v| f.preimage(v).is_subset_of(u))
            {
                return Some((s, u));
            }
        }
    }
    None
}

fn characterization_outcome(f: &MapRef, held: bool) -> Outcome {
    let class = f.violation(MapClass::AlmostPiGDhatClosed.predicate());
    let cond = almost_closed_condition_failure(f);
    let w = match (class, cond) {
        (None, Some((s, u))) => Some(format!(
            "almost-pigdhat-closed=true condition fails at S={} U={}",
            f.cod.space().show(s),
            f.dom.space().show(u)
        )),
        (Some(a), None) => Some(format!(
            "condition holds but image of F={} is not pigdhat-closed",
            f.dom.space().show(a)
        )),
        _ => None,
    };
    Outcome::check(held, "holds", w)
}

fn map_outcomes(theorem: TheoremId, x: &Space, y: &Space, f: &MapRef) -> Vec<Outcome> {
    use MapClass::*;
    let is = |c| f.is(c);
    match theorem {
        TheoremId::OpenInjectiveImage => {
            let held = x.softly() && f.is_injective() && is(Continuous) && is(OpenMap);
            let w = held
                .then(|| {
                    let image = f.image_of(x.t().full());
                    let sub = y.t().subspace(image).expect("nonempty image");
                    let st = ClassTable::build(&sub.topology);
                    check_scheme(&st, NormalityKind::SoftlyPiGDhat.scheme())
                        .witness
                        .map(|(a, b)| {
                            format!(
                                "in f(X): A={} B={}",
                                y.t().show(sub.lift(a)),
                                y.t().show(sub.lift(b))
                            )
                        })
                })
                .flatten();
            vec![Outcome::check(held, "holds", w)]
        }
        TheoremId::MapDiagram => {
            let w = check_map_diagram(f).map(|(a, b)| format!("{a} => {b} fails"));
            vec![Outcome::check(true, "holds", w)]
        }
        TheoremId::AlmostPiContinuousImage => {
            let held = is(AlmostPiContinuous) && is(PiGDhatClosed);
            let w = held
                .then(|| {
                    x.table
                        .pigdhat_closed()
                        .iter()
                        .find(|&a| !y.table.pigdhat_closed().contains(f.image_of(a)))
                        .map(|a| format!("A={} f(A)={}", x.t().show(a), y.t().show(f.image_of(a))))
                })
                .flatten();
            vec![Outcome::check(held, "holds", w)]
        }
        TheoremId::AlmostClosedSurjection => vec![characterization_outcome(f, f.is_surjective())],
        TheoremId::AlmostClosedCharacterization => vec![characterization_outcome(f, true)],
        TheoremId::ContinuousClosedSurjection => {
            let held = x.softly() && f.is_surjective() && is(Continuous) && is(PiGDhatClosed);
            vec![Outcome::check(
                held,
                "holds",
                held.then(|| softly_witness(y)).flatten(),
            )]
        }
        TheoremId::ClosedIrresoluteInjection => {
            let held = y.softly() && f.is_injective() && is(ClosedMap) && is(PiGDhatIrresolute);
            vec![Outcome::check(
                held,
                "holds",
                held.then(|| softly_witness(x)).flatten(),
            )]
        }
        TheoremId::RcPreservingInjection => {
            let held =
                y.softly() && f.is_injective() && is(RcPreserving) && is(AlmostPiGDhatContinuous);
            let pi = PairScheme::Product(PairSide::PiClosed, PairSide::PiClosed);
            vec![
                Outcome::check(held, "holds", held.then(|| softly_witness(x)).flatten()),
                Outcome::check(held, "holds", held.then(|| pairs_witness(x, pi)).flatten()),
            ]
        }
        TheoremId::PiContinuousSurjection => {
            let held = x.softly() && f.is_surjective() && is(PiContinuous) && is(PiGDhatClosed);
            let closed = PairScheme::Product(PairSide::Closed, PairSide::Closed);
            vec![
                Outcome::check(held, "holds", held.then(|| softly_witness(y)).flatten()),
                Outcome::check(
                    held,
                    "holds",
                    held.then(|| pairs_witness(y, closed)).flatten(),
                ),
            ]
        }
        TheoremId::AlmostPiContinuousSurjection => {
            let held = x.softly()
                && f.is_surjective()
                && is(AlmostPiContinuous)
                && is(AlmostPiGDhatClosed);
            vec![Outcome::check(
                held,
                "holds",
                held.then(|| softly_witness(y)).flatten(),
            )]
        }
        TheoremId::AlmostContinuousSurjection => {
            let held = x.profile.holds(NormalityKind::Normal)
                && f.is_surjective()
                && is(AlmostContinuous)
                && is(AlmostClosed);
            vec![Outcome::check(
                held,
                "holds",
                held.then(|| softly_witness(y)).flatten(),
            )]
        }
        _ => unreachable!("not a map theorem"),
    }
}
