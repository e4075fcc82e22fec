//! Weak forms of openness and the closure/interior operators they induce.
//!
//! Seven kinds are decided directly from the topology (`Open` through
//! `PiOpen`); the remaining five are complements of guarded closed classes
//! and are looked up in a [`ClassTable`](crate::genclass::ClassTable).

use std::fmt;
use std::str::FromStr;

use crate::error::TokenError;
use crate::space::Topology;
use crate::subset::{Subset, SubsetFamily};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OpenKind {
    Open,
    RegularOpen,
    PreOpen,
    SemiOpen,
    AlphaOpen,
    SemiPreOpen,
    PiOpen,
    GOpen,
    WOpen,
    DOpen,
    DhatOpen,
    PiGDhatOpen,
}

impl OpenKind {
    pub const ALL: [OpenKind; 12] = [
        OpenKind::Open,
        OpenKind::RegularOpen,
        OpenKind::PreOpen,
        OpenKind::SemiOpen,
        OpenKind::AlphaOpen,
        OpenKind::SemiPreOpen,
        OpenKind::PiOpen,
        OpenKind::GOpen,
        OpenKind::WOpen,
        OpenKind::DOpen,
        OpenKind::DhatOpen,
        OpenKind::PiGDhatOpen,
    ];

    pub fn token(self) -> &'static str {
        match self {
            OpenKind::Open => "open",
            OpenKind::RegularOpen => "ro",
            OpenKind::PreOpen => "pre",
            OpenKind::SemiOpen => "semi",
            OpenKind::AlphaOpen => "alpha",
            OpenKind::SemiPreOpen => "sp",
            OpenKind::PiOpen => "pi",
            OpenKind::GOpen => "g",
            OpenKind::WOpen => "w",
            OpenKind::DOpen => "d",
            OpenKind::DhatOpen => "dhat",
            OpenKind::PiGDhatOpen => "pigdhat",
        }
    }

    /// True for kinds decided from interior/closure alone.
    pub fn is_intrinsic(self) -> bool {
        self <= OpenKind::PiOpen
    }
}

impl fmt::Display for OpenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for OpenKind {
    type Err = TokenError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        OpenKind::ALL
            .into_iter()
            .find(|k| k.token() == s)
            .ok_or_else(|| TokenError::Unknown(s.to_string()))
    }
}

/// Closure operators: intersection of all closed supersets of one kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClosureKind {
    Cl,
    SCl,
    PCl,
    AlphaCl,
    SPCl,
    DhatCl,
    PiGDhatCl,
}

impl ClosureKind {
    pub const ALL: [ClosureKind; 7] = [
        ClosureKind::Cl,
        ClosureKind::SCl,
        ClosureKind::PCl,
        ClosureKind::AlphaCl,
        ClosureKind::SPCl,
        ClosureKind::DhatCl,
        ClosureKind::PiGDhatCl,
    ];

    /// The open kind whose complements are this operator's closed sets.
    pub fn open_kind(self) -> OpenKind {
        match self {
            ClosureKind::Cl => OpenKind::Open,
            ClosureKind::SCl => OpenKind::SemiOpen,
            ClosureKind::PCl => OpenKind::PreOpen,
            ClosureKind::AlphaCl => OpenKind::AlphaOpen,
            ClosureKind::SPCl => OpenKind::SemiPreOpen,
            ClosureKind::DhatCl => OpenKind::DhatOpen,
            ClosureKind::PiGDhatCl => OpenKind::PiGDhatOpen,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            ClosureKind::Cl => "cl",
            ClosureKind::SCl => "scl",
            ClosureKind::PCl => "pcl",
            ClosureKind::AlphaCl => "alphacl",
            ClosureKind::SPCl => "spcl",
            ClosureKind::DhatCl => "dhatcl",
            ClosureKind::PiGDhatCl => "pigdhatcl",
        }
    }
}

impl fmt::Display for ClosureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for ClosureKind {
    type Err = TokenError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClosureKind::ALL
            .into_iter()
            .find(|k| k.token() == s)
            .ok_or_else(|| TokenError::Unknown(s.to_string()))
    }
}

/// Decide an intrinsic kind by its defining formula. Returns `None` for
/// `PiOpen` and the delegated kinds.
pub fn formula_open(t: &Topology, k: OpenKind, a: Subset) -> Option<bool> {
    let int = |s| t.interior(s);
    let cl = |s| t.closure(s);
    Some(match k {
        OpenKind::Open => t.is_open(a),
        OpenKind::RegularOpen => a == int(cl(a)),
        OpenKind::PreOpen => a.is_subset_of(int(cl(a))),
        OpenKind::SemiOpen => a.is_subset_of(cl(int(a))),
        OpenKind::AlphaOpen => a.is_subset_of(int(cl(int(a)))),
        OpenKind::SemiPreOpen => a.is_subset_of(cl(int(cl(a)))),
        _ => return None,
    })
}

pub fn regular_open_family(t: &Topology) -> SubsetFamily {
    t.opens()
        .iter()
        .filter(|&u| u == t.interior(t.closure(u)))
        .collect()
}

/// Finite unions of regular open sets: the union-closure of the regular
/// open family.
pub fn pi_open_family(t: &Topology) -> SubsetFamily {
    let regular = regular_open_family(t);
    let mut closed: Vec<Subset> = vec![Subset::EMPTY];
    let mut seen = crate::subset::SubsetMask::default();
    seen.insert(Subset::EMPTY);
    let mut frontier = 0;
    while frontier < closed.len() {
        let cur = closed[frontier];
        frontier += 1;
        for r in regular.iter() {
            let u = cur.union(r);
            if !seen.contains(u) {
                seen.insert(u);
                closed.push(u);
            }
        }
    }
    closed.into_iter().collect()
}

/// Intersection of every member of `closed` containing `a`. The result need
/// not itself belong to `closed`.
pub fn intersection_closure(n: usize, closed: &SubsetFamily, a: Subset) -> Subset {
    closed
        .supersets_of(a)
        .fold(Subset::full(n), |acc, f| acc.intersection(f))
}

/// Union of every member of `open` contained in `a`.
pub fn union_interior(open: &SubsetFamily, a: Subset) -> Subset {
    open.subsets_of(a)
        .fold(Subset::EMPTY, |acc, u| acc.union(u))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(bits: &[usize]) -> Subset {
        Subset::from_indices(bits.iter().copied())
    }

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

    #[test]
    fn regular_open_formula() {
        let t = ex_2_14();
        assert_eq!(
            formula_open(&t, OpenKind::RegularOpen, set(&[0])),
            Some(true)
        );
        assert_eq!(
            formula_open(&t, OpenKind::RegularOpen, set(&[0, 1])),
            Some(false)
        );
        assert_eq!(
            formula_open(&t, OpenKind::AlphaOpen, Subset::EMPTY),
            Some(true)
        );
        assert_eq!(formula_open(&t, OpenKind::PiOpen, Subset::EMPTY), None);
    }

    #[test]
    fn pi_open_examples() {
        let want: SubsetFamily = [
            set(&[]),
            set(&[0]),
            set(&[1]),
            set(&[0, 1]),
            set(&[0, 1, 2]),
        ]
        .into_iter()
        .collect();
        assert_eq!(pi_open_family(&ex_2_14()), want);

        let indiscrete = Topology::indiscrete(2);
        assert_eq!(pi_open_family(&indiscrete).len(), 2);

        let ex_3_9 = Topology::new(
            3,
            [
                set(&[]),
                set(&[0]),
                set(&[0, 1]),
                set(&[0, 2]),
                set(&[0, 1, 2]),
            ],
        )
        .unwrap();
        let want: SubsetFamily = [set(&[]), set(&[0, 1, 2])].into_iter().collect();
        assert_eq!(pi_open_family(&ex_3_9), want);
    }

    #[test]
    fn tokens_round_trip() {
        for k in OpenKind::ALL {
            assert_eq!(k.token().parse::<OpenKind>().unwrap(), k);
        }
        for k in ClosureKind::ALL {
            assert_eq!(k.token().parse::<ClosureKind>().unwrap(), k);
        }
        assert!("beta".parse::<OpenKind>().is_err());
    }
}
