use std::sync::OnceLock;

use finitop::atlas::{canonical_form, enumerate_topologies};
use finitop::format::{parse_space, write_space};
use finitop::genclass::SchemeEvaluator;
use finitop::maps::{MapClass, MapRef};
use finitop::normality::{clopen_separator, qualifying_pairs, urysohn_check, NormalityKind};
use finitop::weakopen::union_interior;
use finitop::{ClassTable, ClosedClass, ClosureKind, OpenKind, SetProperty, Subset, Topology};
use proptest::prelude::*;

fn spaces() -> &'static [Topology] {
    static SPACES: OnceLock<Vec<Topology>> = OnceLock::new();
    SPACES.get_or_init(|| {
        (1..=4)
            .flat_map(|n| enumerate_topologies(n).unwrap())
            .collect()
    })
}

fn properties() -> Vec<SetProperty> {
    let mut out: Vec<SetProperty> = ClosedClass::ALL
        .into_iter()
        .map(SetProperty::Closed)
        .collect();
    for k in OpenKind::ALL {
        out.push(SetProperty::Open(k));
        out.push(SetProperty::CoOpen(k));
    }
    out
}

fn space_and_set() -> impl Strategy<Value = (Topology, Subset)> {
    (0..spaces().len(), any::<u8>()).prop_map(|(i, bits)| {
        let t = spaces()[i].clone();
        let a = Subset::from_indices((0..t.n()).filter(|j| bits >> j & 1 == 1));
        (t, a)
    })
}

fn perm_of(n: usize, seed: u64) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut s = seed;
    for i in (1..n).rev() {
        s = s
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        p.swap(i, (s >> 33) as usize % (i + 1));
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn scheme_evaluator_matches_table((t, a) in space_and_set()) {
        let table = ClassTable::build(&t);
        let mut eval = SchemeEvaluator::new(&t);
        for p in properties() {
            prop_assert_eq!(eval.has(p, a), table.has(p, a), "{} on {}", p, t.show(a));
        }
    }

    #[test]
    fn closures_are_extensive_and_monotone((t, a) in space_and_set(), extra in any::<u8>()) {
        let table = ClassTable::build(&t);
        let b = a.union(Subset::from_indices((0..t.n()).filter(|j| extra >> j & 1 == 1)));
        for k in ClosureKind::ALL {
            let ca = table.kind_closure(k, a);
            prop_assert!(a.is_subset_of(ca), "{} not extensive", k);
            prop_assert!(ca.is_subset_of(table.kind_closure(k, b)), "{} not monotone", k);
        }
    }

    #[test]
    fn pigdhat_interior_is_union_of_open_subsets((t, a) in space_and_set()) {
        let table = ClassTable::build(&t);
        prop_assert_eq!(table.pigdhat_interior(a), union_interior(table.pigdhat_open(), a));
    }

    #[test]
    fn map_classes_survive_relabeling(
        d in 0..spaces().len(),
        c in 0..spaces().len(),
        seed in any::<u64>(),
    ) {
        let (x, y) = (&spaces()[d], &spaces()[c]);
        let image: Vec<usize> = (0..x.n()).map(|i| (seed >> (4 * i)) as usize % y.n()).collect();
        let (p, q) = (perm_of(x.n(), seed), perm_of(y.n(), !seed));
        let mut moved = vec![0; x.n()];
        for i in 0..x.n() {
            moved[p[i]] = q[image[i]];
        }
        let (tx, ty) = (ClassTable::build(x), ClassTable::build(y));
        let (px, py) = (ClassTable::build(&x.permute(&p)), ClassTable::build(&y.permute(&q)));
        let f = MapRef::new(&tx, &ty, &image);
        let g = MapRef::new(&px, &py, &moved);
        for class in MapClass::ALL {
            prop_assert_eq!(f.is(class), g.is(class), "{}", class);
        }
    }

    #[test]
    fn canonical_key_ignores_labels(i in 0..spaces().len(), seed in any::<u64>()) {
        let t = &spaces()[i];
        let moved = t.permute(&perm_of(t.n(), seed));
        prop_assert_eq!(canonical_form(t).key, canonical_form(&moved).key);
    }

    #[test]
    fn space_text_round_trips(i in 0..spaces().len()) {
        let t = &spaces()[i];
        prop_assert_eq!(&parse_space(&write_space(t)).unwrap(), t);
    }
}

/// Functions into a finite subset of the reals are continuous exactly when
/// every fiber is open. Search all functions into {0, 1/2, 1} directly.
fn separating_function_exists(t: &Topology, a: Subset, b: Subset) -> bool {
    let n = t.n();
    (0..3usize.pow(n as u32)).any(|code| {
        let value = |i: usize| code / 3usize.pow(i as u32) % 3;
        let fiber = |v| Subset::from_indices((0..n).filter(|&i| value(i) == v));
        (0..3).all(|v| t.is_open(fiber(v)))
            && a.iter().all(|i| value(i) == 0)
            && b.iter().all(|i| value(i) == 2)
    })
}

#[test]
fn urysohn_reduction_matches_brute_force() {
    for t in spaces() {
        let table = ClassTable::build(t);
        let pairs = qualifying_pairs(&table, NormalityKind::SoftlyPiGDhat.scheme().pairs);
        for (a, b) in pairs {
            assert_eq!(
                clopen_separator(&table, a, b).is_some(),
                separating_function_exists(t, a, b),
                "{} with {} and {}",
                t.compact(),
                t.show(a),
                t.show(b)
            );
        }
        assert!(urysohn_check(&table).agree(), "{}", t.compact());
    }
}

#[test]
fn four_point_counterexample_to_trace_lemma() {
    // All subsets of {a,b,c} are open, plus the whole space.
    let abc = Subset::from_indices([0, 1, 2]);
    let opens = abc.subsets().chain([Subset::full(4)]);
    let t = Topology::new(4, opens).unwrap();
    let m = Subset::from_indices([0, 1, 3]);
    let a = Subset::from_indices([2, 3]);
    let table = ClassTable::build(&t);
    assert!(table.regular_closed().contains(m));
    assert!(table.pigdhat_open().contains(a));
    let sub = t.subspace(m).unwrap();
    let inner = ClassTable::build(&sub.topology);
    assert!(!inner
        .pigdhat_open()
        .contains(sub.restrict(a.intersection(m))));
}
