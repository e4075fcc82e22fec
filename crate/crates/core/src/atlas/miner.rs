//! First space (and set) satisfying a goal, scanning canonical spaces in
//! `(n, key)` order.

use crate::error::HarnessError;
use crate::genclass::{Arrow, ClassTable, SchemeEvaluator, SetProperty};
use crate::space::Topology;
use crate::subset::Subset;

use super::canonical::{canonical_spaces, CanonicalKey};
use super::goal::{Goal, SchemeOracle, TableOracle};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MineOutcome {
    Found {
        topology: Topology,
        key: CanonicalKey,
        /// The set variable's value, when the goal mentions one.
        set: Option<Subset>,
    },
    NotFound {
        spaces_scanned: usize,
    },
}

impl MineOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, MineOutcome::Found { .. })
    }
}

fn candidates(goal: &Goal, n: usize) -> Vec<Subset> {
    if goal.uses_set() {
        let mut all: Vec<Subset> = Subset::all(n).collect();
        all.sort();
        all
    } else {
        vec![Subset::EMPTY]
    }
}

pub fn mine(goal: &Goal, max_n: usize) -> Result<MineOutcome, HarnessError> {
    let mut scanned = 0;
    for n in 1..=max_n {
        for space in canonical_spaces(n)? {
            scanned += 1;
            let table = ClassTable::build(&space.topology);
            let mut oracle = TableOracle::new(&table);
            if let Some(a) = candidates(goal, n)
                .into_iter()
                .find(|&a| goal.eval(&mut oracle, a))
            {
                return Ok(MineOutcome::Found {
                    topology: space.topology,
                    key: space.key,
                    set: goal.uses_set().then_some(a),
                });
            }
        }
    }
    Ok(MineOutcome::NotFound {
        spaces_scanned: scanned,
    })
}

/// Re-evaluate a found witness with the scheme evaluator.
pub fn replay(goal: &Goal, outcome: &MineOutcome) -> bool {
    match outcome {
        MineOutcome::NotFound { .. } => false,
        MineOutcome::Found { topology, set, .. } => {
            let table = ClassTable::build(topology);
            let mut oracle = SchemeOracle {
                table: &table,
                eval: SchemeEvaluator::new(topology),
            };
            goal.eval(&mut oracle, set.unwrap_or(Subset::EMPTY))
        }
    }
}

/// Goal `to(A) & !from(A)`: a set showing the arrow is not reversible.
pub fn strictness_goal(arrow: Arrow) -> Goal {
    use super::goal::Atom;
    let atom = |p: SetProperty| Goal::Atom(Atom::Set(p));
    Goal::And(
        Box::new(atom(arrow.to)),
        Box::new(Goal::Not(Box::new(atom(arrow.from)))),
    )
}

pub fn find_strictness_witness(arrow: Arrow, max_n: usize) -> Result<MineOutcome, HarnessError> {
    mine(&strictness_goal(arrow), max_n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pigdhat_closed_not_closed_is_found_small() {
        let g: Goal = "pigdhat-closed(A) & !closed(A)".parse().unwrap();
        let out = mine(&g, 3).unwrap();
        assert!(out.is_found());
        assert!(replay(&g, &out));
        if let MineOutcome::Found { topology, .. } = &out {
            assert!(topology.n() <= 2);
        }
    }

    #[test]
    fn closed_not_pigdhat_closed_never_found() {
        let g: Goal = "closed(A) & !pigdhat-closed(A)".parse().unwrap();
        assert_eq!(
            mine(&g, 4).unwrap(),
            MineOutcome::NotFound { spaces_scanned: 46 }
        );
    }

    #[test]
    fn space_goal_is_deterministic() {
        let g: Goal = "softly-pigdhat & !quasi-pigdhat".parse().unwrap();
        assert_eq!(mine(&g, 4).unwrap(), mine(&g, 4).unwrap());
    }
}
