//! Desk-scale verification suites. Each check prints one line.

use crate::Suite;
use latmut::cambrian::{build_cambrian_for, cambrian_quiver};
use latmut::coxeter::{build_weak_order, weak_order_mutation, CoxeterElement, CoxeterType, PermA, PermB, WeakOrder};
use latmut::exploration::catalog::tamari;
use latmut::exploration::{associahedron_census, mutation_graph, quiver_commutes, Classification};
use latmut::flip::{check_mutation, dual_flip, flip, flip_graph, mutate, FlipPair};
use latmut::order::{
    all_lattices, are_isomorphic, as_lattice, distance_table, down_sets, random_connected_poset, random_lattice,
};
use latmut::quiver::{all_orientations, orientation_to_quiver};
use latmut::Poset;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn report(name: &str, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let r = f();
    let secs = start.elapsed().as_secs_f64();
    match &r {
        Ok(m) => println!("PASS  {name} ({secs:.2}s): {m}"),
        Err(m) => println!("FAIL  {name} ({secs:.2}s): {m}"),
    }
    r.is_ok()
}

pub fn run(suite: Suite, seed: u64) -> bool {
    let mut ok = true;
    if matches!(suite, Suite::All | Suite::Flip) {
        ok &= report("flip: mutation criterion", || mutation_criterion(seed));
        ok &= report("flip: involution and distances", || flip_laws(seed));
    }
    if matches!(suite, Suite::All | Suite::Coxeter) {
        ok &= report("coxeter: weak-order mutations", weak_orders);
    }
    if matches!(suite, Suite::All | Suite::Cambrian) {
        ok &= report("cambrian: sizes and reflections", cambrian);
        ok &= report("cambrian: mutation graphs", mutation_graphs);
    }
    if matches!(suite, Suite::All | Suite::Census) {
        ok &= report("census: associahedron orientations", census);
    }
    ok
}

fn flip_pairs(p: &Poset) -> Vec<FlipPair> {
    down_sets(p, 1 << 16)
        .unwrap_or_default()
        .into_iter()
        .filter_map(|a| FlipPair::new(p, a.ones()).ok())
        .collect()
}

fn mutation_criterion(seed: u64) -> Outcome {
    let mut lattices: Vec<_> = (1..=5).flat_map(all_lattices).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..200 {
        let n = rng.random_range(6..=8);
        lattices.push(random_lattice(&mut rng, n));
    }
    let mut checked = 0;
    for l in &lattices {
        for pair in flip_pairs(l) {
            let said = check_mutation(l, &pair, false).is_mutation;
            let is = as_lattice(&flip(l, &pair)).is_ok();
            ensure(said == is, || format!("criterion {said}, lattice {is} on {:?}", l.covers()))?;
            checked += 1;
        }
        let g = flip_graph(l).map_err(|e| e.to_string())?;
        ensure(g.matches_hasse(l), || format!("flip graph differs from Hasse graph on {:?}", l.covers()))?;
    }
    Ok(format!("{checked} flips on {} lattices agree", lattices.len()))
}

fn flip_laws(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    for _ in 0..100 {
        let n = rng.random_range(2..=7);
        let p = random_connected_poset(&mut rng, n);
        let d = distance_table(&p).map_err(|e| e.to_string())?;
        for pair in flip_pairs(&p) {
            let (q, back) = dual_flip(&p, &pair);
            ensure(flip(&q, &back) == p, || format!("flip not undone on {:?}", p.covers()))?;
            let e = distance_table(&q).map_err(|e| e.to_string())?;
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        ensure(d.big_d(x, y, z) == e.big_d(x, y, z), || format!("D changed on {:?}", p.covers()))?;
                    }
                }
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} flips undone by their dual flips, D unchanged"))
}

fn weak_case<P: CoxeterElement>(w: &WeakOrder<P>) -> Result<(), String> {
    for i in 1..=w.rank() {
        weak_order_mutation(w, i).map_err(|e| format!("s{i}: {e}"))?;
    }
    Ok(())
}

fn weak_orders() -> Outcome {
    let e = |e: latmut::coxeter::CoxeterError| e.to_string();
    weak_case(&build_weak_order::<PermA>(2).map_err(e)?)?;
    weak_case(&build_weak_order::<PermA>(3).map_err(e)?)?;
    weak_case(&build_weak_order::<PermB>(2).map_err(e)?)?;
    weak_case(&build_weak_order::<PermB>(3).map_err(e)?)?;
    Ok("S3, S4, W(B2), W(B3): each atom mutation is x ↦ s·x".into())
}

fn cambrian() -> Outcome {
    let mut reflections = 0;
    let cases = (1..=4)
        .flat_map(|n| all_orientations(CoxeterType::A, n))
        .chain((2..=3).flat_map(|n| all_orientations(CoxeterType::B, n)));
    for o in cases {
        let c = build_cambrian_for(&o).map_err(|e| e.to_string())?;
        let q = cambrian_quiver(&c).map_err(|e| e.to_string())?;
        ensure(q == orientation_to_quiver(&o), || format!("{o}: quiver differs"))?;
        for v in (0..o.n).filter(|&v| o.is_extremal(v)) {
            let a = c.atom_for_vertex(v).map_err(|e| e.to_string())?;
            let (m, _, _) = mutate(&c.lattice, a).map_err(|e| format!("{o} at {v}: {e}"))?;
            let target = build_cambrian_for(&o.reflected(v)).map_err(|e| e.to_string())?;
            ensure(are_isomorphic(&m, &target.lattice), || format!("{o} at {v}: not the reflected lattice"))?;
            reflections += 1;
        }
        ensure(quiver_commutes(&c.lattice, o.ty), || format!("{o}: quiver mutation disagrees"))?;
    }
    let a3 = tamari("A3:RR").map_err(|e| e.to_string())?.lattice.len();
    let b3 = tamari("B3:RR").map_err(|e| e.to_string())?.lattice.len();
    ensure(a3 == 14 && b3 == 20, || format!("sizes {a3}, {b3}"))?;
    Ok(format!("|A3| = 14, |B3| = 20, {reflections} sink/source mutations match"))
}

fn mutation_graphs() -> Outcome {
    for (spec, want) in [("A3:RR", 4), ("B3:RR", 5)] {
        let l = tamari(spec).map_err(|e| e.to_string())?.lattice;
        let g = mutation_graph(&l, 1000).map_err(|e| e.to_string())?;
        ensure(g.len() == want, || format!("{spec}: {} classes", g.len()))?;
    }
    Ok("A3 Tamari reaches 4 classes, B3 Tamari 5".into())
}

fn census() -> Outcome {
    let r = associahedron_census().map_err(|e| e.to_string())?;
    ensure(r.classes.len() == 8, || format!("{} classes", r.classes.len()))?;
    let cambrian = r.classes.iter().filter(|c| matches!(c.classification, Classification::Cambrian(_))).count();
    ensure(cambrian == 3, || format!("{cambrian} Cambrian classes"))?;
    ensure(r.classes.iter().all(|c| c.classification != Classification::Unclassified), || "unclassified class".into())?;
    for c in &r.classes {
        if matches!(c.classification, Classification::BadCase1 | Classification::BadCase2) {
            ensure(c.regular_degree == Some(3) && !c.locally_mutable, || format!("{} misbehaves", c.classification))?;
        }
    }
    Ok(format!("{} lattice orientations in 8 classes", r.lattice_orientations))
}
