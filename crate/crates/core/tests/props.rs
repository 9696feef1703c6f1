mod common;

use std::sync::LazyLock;

use proptest::prelude::*;
use wbcc::table::check_axioms;
use wbcc::tablefile::{format_table, parse_table};
use wbcc::{are_isomorphic, canonical_form, enumerate_classes, Algebra, CayleyTable, PropertyMask, SearchConfig};

static CENSUS: LazyLock<Vec<CayleyTable>> = LazyLock::new(|| {
    (1..=5)
        .flat_map(|n| {
            enumerate_classes(&SearchConfig::new(n))
                .unwrap()
                .tables()
                .cloned()
                .collect::<Vec<_>>()
        })
        .chain(wbcc::tables::all())
        .collect()
});

fn any_table() -> impl Strategy<Value = CayleyTable> {
    (1usize..=6).prop_flat_map(|n| {
        prop::collection::vec(0..n, n * n).prop_map(move |cells| CayleyTable::new(n, &cells).unwrap())
    })
}

/// A table from the census together with a permutation fixing `0`.
fn relabeled_algebra() -> impl Strategy<Value = (CayleyTable, Vec<usize>)> {
    (0..CENSUS.len()).prop_flat_map(|i| {
        let t = CENSUS[i].clone();
        let rest: Vec<usize> = (1..t.order()).collect();
        Just(rest).prop_shuffle().prop_map(move |mut p| {
            p.insert(0, 0);
            (t.clone(), p)
        })
    })
}

/// Near-valid tables: the forced cells are set, everything else random.
fn seeded_table() -> impl Strategy<Value = CayleyTable> {
    (2usize..=4).prop_flat_map(|n| {
        prop::collection::vec(0..n, n * n).prop_map(move |mut cells| {
            for x in 0..n {
                cells[x * n] = x;
                cells[x * n + x] = 0;
            }
            CayleyTable::new(n, &cells).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn table_file_round_trip(t in any_table()) {
        let text = format_table(&t);
        let back = parse_table(&text).unwrap();
        prop_assert_eq!(format_table(&back), text);
        prop_assert_eq!(back, t);
    }

    #[test]
    fn axiom_check_matches_oracle(t in seeded_table()) {
        prop_assert_eq!(check_axioms(&t).all_hold(), common::is_weak_bcc(&common::rows(&t)));
    }

    #[test]
    fn axiom_witnesses_violate(t in any_table()) {
        for o in check_axioms(&t).failures() {
            let w = o.witness.as_ref().unwrap();
            prop_assert!(o.axiom.violated_by(&t, w));
        }
    }

    #[test]
    fn flags_invariant_under_relabeling((t, p) in relabeled_algebra()) {
        let moved = t.relabel(&p).unwrap();
        let a = Algebra::new(t.clone()).unwrap();
        let b = Algebra::new(moved.clone()).unwrap();
        prop_assert_eq!(PropertyMask::of(&a), PropertyMask::of(&b));
        prop_assert_eq!(a.classify().flags, b.classify().flags);
        prop_assert_eq!(a.branches().branch_count(), b.branches().branch_count());
        prop_assert_eq!(PropertyMask::of(&b), common::mask(&common::rows(&moved)));
    }

    #[test]
    fn canonical_form_is_a_class_invariant((t, p) in relabeled_algebra()) {
        let moved = t.relabel(&p).unwrap();
        let c = canonical_form(&t);
        prop_assert_eq!(&canonical_form(&moved), &c);
        prop_assert_eq!(&canonical_form(c.table()), &c);
        prop_assert!(are_isomorphic(&t, &moved));
        prop_assert!(common::isomorphic_by_search(&common::rows(&t), &common::rows(c.table())));
    }
}
