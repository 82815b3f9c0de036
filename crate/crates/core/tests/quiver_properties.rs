use latmut::coxeter::CoxeterType;
use latmut::quiver::{
    all_orientations, orientation_to_quiver, sink_source_reflection_path, CoxeterOrientation, WeightedQuiver,
};
use proptest::prelude::*;

// Random skew-symmetric quiver: each unordered pair gets an arrow one way or
// the other, or none.
fn quiver() -> impl Strategy<Value = WeightedQuiver> {
    (2usize..7).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec((0u8..3, 1u32..3), pairs).prop_map(move |choice| {
            let mut edges = Vec::new();
            let mut c = choice.into_iter();
            for x in 0..n {
                for y in x + 1..n {
                    let (dir, m) = c.next().unwrap();
                    match dir {
                        1 => edges.push((x, y, m)),
                        2 => edges.push((y, x, m)),
                        _ => {}
                    }
                }
            }
            WeightedQuiver::new(vec![1; n], edges).unwrap()
        })
    })
}

fn orientation() -> impl Strategy<Value = CoxeterOrientation> {
    (prop::bool::ANY, 2usize..7).prop_flat_map(|(b, n)| {
        let ty = if b { CoxeterType::B } else { CoxeterType::A };
        let all = all_orientations(ty, n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn mutation_is_an_involution(q in quiver(), k in 0usize..7) {
        let k = k % q.len();
        let m = q.mutate(k).unwrap();
        prop_assert_eq!(m.mutate(k).unwrap(), q.clone());
        // arrows at k reverse
        for v in 0..q.len() {
            prop_assert_eq!(m.multiplicity(v, k), q.multiplicity(k, v));
        }
    }

    #[test]
    fn relabelling_commutes_with_mutation(
        (q, perm) in quiver().prop_flat_map(|q| { let n = q.len(); (Just(q), permutation(n)) }),
        k in 0usize..7,
    ) {
        let k = k % q.len();
        let p = q.permuted(&perm);
        prop_assert!(p.is_isomorphic(&q));
        prop_assert_eq!(p.mutate(perm[k]).unwrap(), q.mutate(k).unwrap().permuted(&perm));
    }

    #[test]
    fn json_round_trips(q in quiver()) {
        prop_assert_eq!(WeightedQuiver::from_json(&q.to_json()).unwrap(), q);
    }

    #[test]
    fn weighted_path_mutations_are_involutions(o in orientation(), ks in prop::collection::vec(0usize..6, 0..8)) {
        let mut q = orientation_to_quiver(&o);
        for k in ks {
            let k = k % q.len();
            let m = q.mutate(k).unwrap();
            prop_assert_eq!(m.mutate(k).unwrap(), q.clone());
            prop_assert_eq!(m.weights(), q.weights());
            q = m;
        }
    }

    #[test]
    fn extremal_mutation_is_reflection(o in orientation()) {
        let q = orientation_to_quiver(&o);
        let (sinks, sources) = q.sinks_sources();
        for v in 0..o.n {
            let extremal = sinks.contains(&v) || sources.contains(&v);
            prop_assert_eq!(extremal, o.is_extremal(v));
            if extremal {
                prop_assert_eq!(q.mutate(v).unwrap(), orientation_to_quiver(&o.reflected(v)));
            }
        }
    }

    #[test]
    fn reflection_paths_reach_their_target(o in orientation(), i in 0usize..64) {
        let all = all_orientations(o.ty, o.n);
        let target = &all[i % all.len()];
        let path = sink_source_reflection_path(&o, target).unwrap();
        let mut cur = o.clone();
        for v in path {
            prop_assert!(cur.is_extremal(v));
            cur = cur.reflected(v);
        }
        prop_assert_eq!(&cur, target);
    }
}

#[test]
fn rejects_malformed_quivers() {
    assert!(WeightedQuiver::new(vec![1, 1], [(0, 1, 1), (1, 0, 1)]).is_err());
    assert!(WeightedQuiver::new(vec![1, 1], [(0, 0, 1)]).is_err());
    assert!(WeightedQuiver::new(vec![1, 0], [(0, 1, 1)]).is_err());
    assert!(WeightedQuiver::new(vec![1], [(0, 1, 1)]).is_err());
    assert!(WeightedQuiver::from_json("{").is_err());
}
