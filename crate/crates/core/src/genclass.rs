//! Guarded generalized closed-set classes.
//!
//! Every class except `Closed` follows one scheme: `A` belongs to the class
//! when `closure(A) ⊆ U` (or `⊆ int(U)`) for every guard-open `U ⊇ A`.
//! [`ClassTable`] materializes all families for one space bottom-up;
//! [`SchemeEvaluator`] decides single memberships top-down and serves as the
//! independent cross-check.

use std::fmt;
use std::str::FromStr;

use crate::error::TokenError;
use crate::space::Topology;
use crate::subset::{Subset, SubsetFamily};
use crate::weakopen::{
    formula_open, intersection_closure, pi_open_family, union_interior, ClosureKind, OpenKind,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClosedClass {
    Closed,
    G,
    PiG,
    AlphaG,
    PiGAlpha,
    GSP,
    RG,
    GPR,
    W,
    PreSemi,
    D,
    Dhat,
    GDhat,
    PiGDhat,
}

/// How a guarded class is decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassScheme {
    pub closure: ClosureKind,
    pub guard: OpenKind,
    /// Compare against `int(U)` instead of `U`.
    pub guard_interiorized: bool,
}

impl ClosedClass {
    pub const ALL: [ClosedClass; 14] = [
        ClosedClass::Closed,
        ClosedClass::G,
        ClosedClass::PiG,
        ClosedClass::AlphaG,
        ClosedClass::PiGAlpha,
        ClosedClass::GSP,
        ClosedClass::RG,
        ClosedClass::GPR,
        ClosedClass::W,
        ClosedClass::PreSemi,
        ClosedClass::D,
        ClosedClass::Dhat,
        ClosedClass::GDhat,
        ClosedClass::PiGDhat,
    ];

    pub fn token(self) -> &'static str {
        match self {
            ClosedClass::Closed => "closed",
            ClosedClass::G => "g",
            ClosedClass::PiG => "pig",
            ClosedClass::AlphaG => "alphag",
            ClosedClass::PiGAlpha => "pigalpha",
            ClosedClass::GSP => "gsp",
            ClosedClass::RG => "rg",
            ClosedClass::GPR => "gpr",
            ClosedClass::W => "w",
            ClosedClass::PreSemi => "presemi",
            ClosedClass::D => "d",
            ClosedClass::Dhat => "dhat",
            ClosedClass::GDhat => "gdhat",
            ClosedClass::PiGDhat => "pigdhat",
        }
    }

    /// `None` for `Closed`, which is decided by the topology itself.
    pub fn scheme(self) -> Option<ClassScheme> {
        use ClosureKind::*;
        use OpenKind::*;
        let s = |closure, guard| ClassScheme {
            closure,
            guard,
            guard_interiorized: false,
        };
        Some(match self {
            ClosedClass::Closed => return None,
            ClosedClass::G => s(Cl, Open),
            ClosedClass::PiG => s(Cl, PiOpen),
            ClosedClass::AlphaG => s(AlphaCl, Open),
            ClosedClass::PiGAlpha => s(AlphaCl, PiOpen),
            ClosedClass::GSP => s(SPCl, Open),
            ClosedClass::RG => s(Cl, RegularOpen),
            ClosedClass::GPR => s(PCl, RegularOpen),
            ClosedClass::W => s(Cl, SemiOpen),
            ClosedClass::PreSemi => s(SPCl, GOpen),
            ClosedClass::D => ClassScheme {
                closure: PCl,
                guard: WOpen,
                guard_interiorized: true,
            },
            ClosedClass::Dhat => s(SPCl, DOpen),
            ClosedClass::GDhat => s(DhatCl, Open),
            ClosedClass::PiGDhat => s(DhatCl, PiOpen),
        })
    }

    /// The open kind defined as complements of this class, if any.
    pub fn open_kind(self) -> Option<OpenKind> {
        Some(match self {
            ClosedClass::Closed => OpenKind::Open,
            ClosedClass::G => OpenKind::GOpen,
            ClosedClass::W => OpenKind::WOpen,
            ClosedClass::D => OpenKind::DOpen,
            ClosedClass::Dhat => OpenKind::DhatOpen,
            ClosedClass::PiGDhat => OpenKind::PiGDhatOpen,
            _ => return None,
        })
    }
}

impl fmt::Display for ClosedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for ClosedClass {
    type Err = TokenError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClosedClass::ALL
            .into_iter()
            .find(|c| c.token() == s)
            .ok_or_else(|| TokenError::Unknown(s.to_string()))
    }
}

/// Any subset property the engine can decide from a [`ClassTable`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SetProperty {
    /// Membership in a closed class.
    Closed(ClosedClass),
    /// Membership in an open kind.
    Open(OpenKind),
    /// Complement belongs to an open kind (regular closed, pre-closed, ...).
    CoOpen(OpenKind),
}

impl SetProperty {
    pub const REGULAR_CLOSED: SetProperty = SetProperty::CoOpen(OpenKind::RegularOpen);
    pub const PI_CLOSED: SetProperty = SetProperty::CoOpen(OpenKind::PiOpen);
    pub const ALPHA_CLOSED: SetProperty = SetProperty::CoOpen(OpenKind::AlphaOpen);
    pub const PRE_CLOSED: SetProperty = SetProperty::CoOpen(OpenKind::PreOpen);
    pub const SEMI_CLOSED: SetProperty = SetProperty::CoOpen(OpenKind::SemiOpen);

    /// Canonical form: complements of delegated kinds become their class.
    pub fn normalized(self) -> SetProperty {
        match self {
            SetProperty::CoOpen(k) => ClosedClass::ALL
                .into_iter()
                .find(|c| c.open_kind() == Some(k))
                .map_or(self, SetProperty::Closed),
            other => other,
        }
    }

    pub fn token(self) -> String {
        match self.normalized() {
            SetProperty::Closed(ClosedClass::Closed) => "closed".into(),
            SetProperty::Closed(c) => format!("{}-closed", c.token()),
            SetProperty::Open(OpenKind::Open) => "open".into(),
            SetProperty::Open(k) => format!("{}-open", k.token()),
            SetProperty::CoOpen(OpenKind::RegularOpen) => "regular-closed".into(),
            SetProperty::CoOpen(k) => format!("{}-closed", k.token()),
        }
    }
}

impl fmt::Display for SetProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

impl FromStr for SetProperty {
    type Err = TokenError;

    /// Accepts `closed`, `open`, `<class>-closed`, `<kind>-open`,
    /// `<kind>-closed` for the intrinsic kinds, and `regular-closed` /
    /// `regular-open` for the regular kinds.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || TokenError::Unknown(s.to_string());
        match s {
            "closed" => return Ok(SetProperty::Closed(ClosedClass::Closed)),
            "open" => return Ok(SetProperty::Open(OpenKind::Open)),
            "regular-closed" | "rc" => return Ok(SetProperty::REGULAR_CLOSED),
            "regular-open" => return Ok(SetProperty::Open(OpenKind::RegularOpen)),
            _ => {}
        }
        if let Some(head) = s.strip_suffix("-closed") {
            if let Ok(c) = head.parse::<ClosedClass>() {
                return Ok(SetProperty::Closed(c));
            }
            let k: OpenKind = head.parse().map_err(|_| unknown())?;
            return Ok(SetProperty::CoOpen(k).normalized());
        }
        if let Some(head) = s.strip_suffix("-open") {
            return head.parse().map(SetProperty::Open).map_err(|_| unknown());
        }
        Err(unknown())
    }
}

/// Every open-kind and closed-class family of one space, built once.
#[derive(Clone, Debug)]
pub struct ClassTable {
    space: Topology,
    kinds: Vec<SubsetFamily>,
    co_kinds: Vec<SubsetFamily>,
    classes: Vec<SubsetFamily>,
    // closure of every subset for each ClosureKind, indexed by bits
    closures: Vec<Vec<Subset>>,
}

fn closure_table(n: usize, closed: &SubsetFamily) -> Vec<Subset> {
    Subset::all(n)
        .map(|a| intersection_closure(n, closed, a))
        .collect()
}

fn guarded_family(
    t: &Topology,
    closure: &[Subset],
    guard: &SubsetFamily,
    interiorized: bool,
) -> SubsetFamily {
    t.subsets()
        .filter(|&a| {
            let cl = closure[a.bits() as usize];
            guard.supersets_of(a).all(|u| {
                let bound = if interiorized { t.interior(u) } else { u };
                cl.is_subset_of(bound)
            })
        })
        .collect()
}

impl ClassTable {
    /// Materialize every family, in dependency order.
    pub fn build(space: &Topology) -> ClassTable {
        let t = space;
        let n = t.n();
        let mut kinds = vec![SubsetFamily::new(); OpenKind::ALL.len()];
        let mut classes = vec![SubsetFamily::new(); ClosedClass::ALL.len()];
        let mut closures = vec![Vec::new(); ClosureKind::ALL.len()];

        for k in [
            OpenKind::Open,
            OpenKind::RegularOpen,
            OpenKind::PreOpen,
            OpenKind::SemiOpen,
            OpenKind::AlphaOpen,
            OpenKind::SemiPreOpen,
        ] {
            kinds[k as usize] = t
                .subsets()
                .filter(|&a| formula_open(t, k, a).unwrap_or(false))
                .collect();
        }
        kinds[OpenKind::PiOpen as usize] = pi_open_family(t);

        for ck in [
            ClosureKind::Cl,
            ClosureKind::SCl,
            ClosureKind::PCl,
            ClosureKind::AlphaCl,
            ClosureKind::SPCl,
        ] {
            let closed = kinds[ck.open_kind() as usize].complements(n);
            closures[ck as usize] = closure_table(n, &closed);
        }

        classes[ClosedClass::Closed as usize] = t.closed_sets();

        let fill = |class: ClosedClass,
                    kinds: &[SubsetFamily],
                    closures: &[Vec<Subset>]|
         -> SubsetFamily {
            let s = class.scheme().expect("guarded class");
            guarded_family(
                t,
                &closures[s.closure as usize],
                &kinds[s.guard as usize],
                s.guard_interiorized,
            )
        };

        for c in [
            ClosedClass::G,
            ClosedClass::PiG,
            ClosedClass::AlphaG,
            ClosedClass::PiGAlpha,
            ClosedClass::GSP,
            ClosedClass::RG,
            ClosedClass::GPR,
            ClosedClass::W,
        ] {
            classes[c as usize] = fill(c, &kinds, &closures);
        }
        kinds[OpenKind::GOpen as usize] = classes[ClosedClass::G as usize].complements(n);
        kinds[OpenKind::WOpen as usize] = classes[ClosedClass::W as usize].complements(n);
        classes[ClosedClass::PreSemi as usize] = fill(ClosedClass::PreSemi, &kinds, &closures);

        classes[ClosedClass::D as usize] = fill(ClosedClass::D, &kinds, &closures);
        kinds[OpenKind::DOpen as usize] = classes[ClosedClass::D as usize].complements(n);

        classes[ClosedClass::Dhat as usize] = fill(ClosedClass::Dhat, &kinds, &closures);
        kinds[OpenKind::DhatOpen as usize] = classes[ClosedClass::Dhat as usize].complements(n);
        closures[ClosureKind::DhatCl as usize] =
            closure_table(n, &classes[ClosedClass::Dhat as usize]);

        classes[ClosedClass::GDhat as usize] = fill(ClosedClass::GDhat, &kinds, &closures);
        classes[ClosedClass::PiGDhat as usize] = fill(ClosedClass::PiGDhat, &kinds, &closures);
        kinds[OpenKind::PiGDhatOpen as usize] =
            classes[ClosedClass::PiGDhat as usize].complements(n);
        closures[ClosureKind::PiGDhatCl as usize] =
            closure_table(n, &classes[ClosedClass::PiGDhat as usize]);

        let co_kinds = kinds.iter().map(|f| f.complements(n)).collect();

        ClassTable {
            space: t.clone(),
            kinds,
            co_kinds,
            classes,
            closures,
        }
    }

    pub fn space(&self) -> &Topology {
        &self.space
    }

    pub fn n(&self) -> usize {
        self.space.n()
    }

    pub fn class(&self, c: ClosedClass) -> &SubsetFamily {
        &self.classes[c as usize]
    }

    pub fn kind(&self, k: OpenKind) -> &SubsetFamily {
        &self.kinds[k as usize]
    }

    /// Complements of an open kind.
    pub fn co_kind(&self, k: OpenKind) -> &SubsetFamily {
        &self.co_kinds[k as usize]
    }

    pub fn family(&self, p: SetProperty) -> &SubsetFamily {
        match p {
            SetProperty::Closed(c) => self.class(c),
            SetProperty::Open(k) => self.kind(k),
            SetProperty::CoOpen(k) => self.co_kind(k),
        }
    }

    #[inline]
    pub fn has(&self, p: SetProperty, a: Subset) -> bool {
        self.family(p).contains(a)
    }

    pub fn is_in_class(&self, c: ClosedClass, a: Subset) -> bool {
        self.class(c).contains(a)
    }

    pub fn is_kind_open(&self, k: OpenKind, a: Subset) -> bool {
        self.kind(k).contains(a)
    }

    /// Intersection of all `k`-closed supersets of `a`.
    #[inline]
    pub fn kind_closure(&self, k: ClosureKind, a: Subset) -> Subset {
        self.closures[k as usize][a.bits() as usize]
    }

    /// Union of all `k`-open subsets of `a`.
    pub fn kind_interior(&self, k: ClosureKind, a: Subset) -> Subset {
        union_interior(self.kind(k.open_kind()), a)
    }

    pub fn regular_closed(&self) -> &SubsetFamily {
        self.co_kind(OpenKind::RegularOpen)
    }

    pub fn pi_closed(&self) -> &SubsetFamily {
        self.co_kind(OpenKind::PiOpen)
    }

    pub fn closed(&self) -> &SubsetFamily {
        self.class(ClosedClass::Closed)
    }

    pub fn pigdhat_open(&self) -> &SubsetFamily {
        self.kind(OpenKind::PiGDhatOpen)
    }

    pub fn pigdhat_closed(&self) -> &SubsetFamily {
        self.class(ClosedClass::PiGDhat)
    }

    pub fn pigdhat_closure(&self, a: Subset) -> Subset {
        self.kind_closure(ClosureKind::PiGDhatCl, a)
    }

    pub fn pigdhat_interior(&self, a: Subset) -> Subset {
        self.kind_interior(ClosureKind::PiGDhatCl, a)
    }
}

/// Top-down, memoized evaluation of class and kind membership directly from
/// the defining schemes. Shares no family storage with [`ClassTable`].
pub struct SchemeEvaluator<'a> {
    t: &'a Topology,
    kind_memo: Vec<Vec<Option<bool>>>,
    class_memo: Vec<Vec<Option<bool>>>,
}

impl<'a> SchemeEvaluator<'a> {
    pub fn new(t: &'a Topology) -> Self {
        let slots = 1usize << t.n();
        SchemeEvaluator {
            t,
            kind_memo: vec![vec![None; slots]; OpenKind::ALL.len()],
            class_memo: vec![vec![None; slots]; ClosedClass::ALL.len()],
        }
    }

    pub fn is_kind_open(&mut self, k: OpenKind, a: Subset) -> bool {
        if let Some(v) = self.kind_memo[k as usize][a.bits() as usize] {
            return v;
        }
        let n = self.t.n();
        let v = match k {
            OpenKind::PiOpen => {
                // a is a finite union of regular open sets iff it is the
                // union of the regular open sets it contains
                let covered = a
                    .subsets()
                    .filter(|&r| self.is_kind_open(OpenKind::RegularOpen, r))
                    .fold(Subset::EMPTY, Subset::union);
                covered == a
            }
            OpenKind::GOpen => self.is_in_class(ClosedClass::G, a.complement(n)),
            OpenKind::WOpen => self.is_in_class(ClosedClass::W, a.complement(n)),
            OpenKind::DOpen => self.is_in_class(ClosedClass::D, a.complement(n)),
            OpenKind::DhatOpen => self.is_in_class(ClosedClass::Dhat, a.complement(n)),
            OpenKind::PiGDhatOpen => self.is_in_class(ClosedClass::PiGDhat, a.complement(n)),
            intrinsic => formula_open(self.t, intrinsic, a).expect("intrinsic kind"),
        };
        self.kind_memo[k as usize][a.bits() as usize] = Some(v);
        v
    }

    fn is_kind_closed(&mut self, k: ClosureKind, a: Subset) -> bool {
        match k {
            ClosureKind::DhatCl => self.is_in_class(ClosedClass::Dhat, a),
            ClosureKind::PiGDhatCl => self.is_in_class(ClosedClass::PiGDhat, a),
            other => self.is_kind_open(other.open_kind(), a.complement(self.t.n())),
        }
    }

    pub fn kind_closure(&mut self, k: ClosureKind, a: Subset) -> Subset {
        let n = self.t.n();
        let mut acc = Subset::full(n);
        for s in a.supersets(n) {
            if self.is_kind_closed(k, s) {
                acc = acc.intersection(s);
            }
        }
        acc
    }

    pub fn is_in_class(&mut self, c: ClosedClass, a: Subset) -> bool {
        if let Some(v) = self.class_memo[c as usize][a.bits() as usize] {
            return v;
        }
        let v = match c.scheme() {
            None => self.t.is_closed(a),
            Some(scheme) => {
                let cl = self.kind_closure(scheme.closure, a);
                let n = self.t.n();
                let mut ok = true;
                for u in a.supersets(n) {
                    if !self.is_kind_open(scheme.guard, u) {
                        continue;
                    }
                    let bound = if scheme.guard_interiorized {
                        self.t.interior(u)
                    } else {
                        u
                    };
                    if !cl.is_subset_of(bound) {
                        ok = false;
                        break;
                    }
                }
                ok
            }
        };
        self.class_memo[c as usize][a.bits() as usize] = Some(v);
        v
    }

    pub fn has(&mut self, p: SetProperty, a: Subset) -> bool {
        match p {
            SetProperty::Closed(c) => self.is_in_class(c, a),
            SetProperty::Open(k) => self.is_kind_open(k, a),
            SetProperty::CoOpen(k) => self.is_kind_open(k, a.complement(self.t.n())),
        }
    }
}

/// Single membership query by direct scheme evaluation.
pub fn is_in_class(t: &Topology, c: ClosedClass, a: Subset) -> bool {
    SchemeEvaluator::new(t).is_in_class(c, a)
}

/// Single open-kind query by direct evaluation.
pub fn is_kind_open(t: &Topology, k: OpenKind, a: Subset) -> bool {
    SchemeEvaluator::new(t).is_kind_open(k, a)
}

/// An implication between two subset properties.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub from: SetProperty,
    pub to: SetProperty,
}

impl Arrow {
    pub const fn new(from: SetProperty, to: SetProperty) -> Self {
        Arrow { from, to }
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} => {}", self.from, self.to)
    }
}

impl FromStr for Arrow {
    type Err = TokenError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s
            .split_once("=>")
            .ok_or_else(|| TokenError::Malformed(format!("expected FROM=>TO, got `{s}`")))?;
        Ok(Arrow::new(a.trim().parse()?, b.trim().parse()?))
    }
}

/// The 3×3 grid: closed / α / D̂ rows against plain / g / πg columns.
pub fn grid_arrows() -> Vec<Arrow> {
    use ClosedClass::*;
    use SetProperty::Closed as C;
    let alpha = SetProperty::ALPHA_CLOSED;
    vec![
        Arrow::new(C(Closed), C(G)),
        Arrow::new(C(G), C(PiG)),
        Arrow::new(alpha, C(AlphaG)),
        Arrow::new(C(AlphaG), C(PiGAlpha)),
        Arrow::new(C(Dhat), C(GDhat)),
        Arrow::new(C(GDhat), C(PiGDhat)),
        Arrow::new(C(Closed), alpha),
        Arrow::new(alpha, C(Dhat)),
        Arrow::new(C(G), C(AlphaG)),
        Arrow::new(C(AlphaG), C(GDhat)),
        Arrow::new(C(PiG), C(PiGAlpha)),
        Arrow::new(C(PiGAlpha), C(PiGDhat)),
    ]
}

/// Grid arrows plus the direct inclusions into the πgD̂-closed class.
pub fn implication_arrows() -> Vec<Arrow> {
    let target = SetProperty::Closed(ClosedClass::PiGDhat);
    let mut arrows = grid_arrows();
    for from in [
        SetProperty::Closed(ClosedClass::Closed),
        SetProperty::ALPHA_CLOSED,
        SetProperty::PRE_CLOSED,
        SetProperty::SEMI_CLOSED,
        SetProperty::Closed(ClosedClass::W),
    ] {
        arrows.push(Arrow::new(from, target));
    }
    arrows
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramVerdict {
    pub arrows_checked: usize,
    /// First failing arrow and the subset violating it.
    pub violation: Option<(Arrow, Subset)>,
}

impl DiagramVerdict {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// Check every implication arrow on every subset of the space.
pub fn check_implication_diagram(table: &ClassTable) -> DiagramVerdict {
    let arrows = implication_arrows();
    let violation = arrows.iter().find_map(|&arrow| {
        table
            .family(arrow.from)
            .iter()
            .find(|&a| !table.has(arrow.to, a))
            .map(|a| (arrow, a))
    });
    DiagramVerdict {
        arrows_checked: arrows.len(),
        violation,
    }
}
