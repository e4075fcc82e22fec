//! Topologies on `n` labeled points, generated from preorders: the open
//! sets of a finite space are exactly the up-sets of its specialization
//! preorder.

use crate::error::HarnessError;
use crate::space::Topology;
use crate::subset::{Subset, SubsetFamily};

pub const MAX_ENUMERATION_POINTS: usize = 5;

/// Every topology on `n` points exactly once, sorted by `Topology` order.
pub fn enumerate_topologies(n: usize) -> Result<Vec<Topology>, HarnessError> {
    if n > MAX_ENUMERATION_POINTS {
        return Err(HarnessError::ScopeTooLarge {
            scope: n,
            estimate: 1u128 << (n * (n - 1)),
            budget: 1u128 << (MAX_ENUMERATION_POINTS * (MAX_ENUMERATION_POINTS - 1)),
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        // up[i]: points every open set containing i must contain
        let mut up: Vec<Subset> = (0..n).map(Subset::singleton).collect();
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                up[i] = up[i].union(Subset::singleton(j));
            }
        }
        let transitive = (0..n).all(|i| up[i].iter().all(|j| up[j].is_subset_of(up[i])));
        if !transitive {
            continue;
        }
        let opens: SubsetFamily = Subset::all(n)
            .filter(|u| u.iter().all(|i| up[i].is_subset_of(*u)))
            .collect();
        out.push(Topology::from_valid(n, opens));
    }
    out.sort();
    Ok(out)
}
