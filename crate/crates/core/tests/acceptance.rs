//! The acceptance suite: one line per criterion, then a single assertion.

mod common;

use common::*;
use latmut::cambrian::{
    build_cambrian, build_cambrian_for, cambrian_quiver, eta, pattern_kernel_equal, Polygon,
};
use latmut::coxeter::{build_weak_order, CoxeterElement, CoxeterType, PermA, PermB, WeakOrder};
use latmut::exploration::catalog::tamari;
use latmut::exploration::{
    associahedron_census, atom_t_values, mutation_graph, not_coxeter_quotient, quiver_commutes,
    Classification, MutationGraph,
};
use latmut::flip::{
    ac_correspondence_for_atom, check_mutation, fault_planes, flip, flip_graph, is_mutable, mutate,
    FlipPair,
};
use latmut::order::{
    all_lattices, are_isomorphic, as_lattice, distance_table, down_sets, random_connected_poset,
    random_lattice, Lattice, Poset,
};
use latmut::quiver::{all_orientations, orientation_to_quiver, quiver_from_lattice, WeightedQuiver};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Every flip pair of `p` with both sides nonempty.
fn flip_pairs(p: &Poset) -> Vec<FlipPair> {
    down_sets(p, 1 << 16)
        .expect("small poset")
        .into_iter()
        .filter_map(|a| FlipPair::new(p, a.ones()).ok())
        .collect()
}

fn criterion_1() -> Outcome {
    let a3 = tamari("A3:RR").map_err(|e| e.to_string())?;
    ensure(a3.lattice.len() == 14, || format!("A3 has {} elements", a3.lattice.len()))?;
    ensure(are_isomorphic(&a3.lattice, &a3_tamari_drawn()), || "A3 differs from the drawing".into())?;
    for spec in ["B3:RR", "B3:LL"] {
        let b3 = tamari(spec).map_err(|e| e.to_string())?;
        ensure(b3.lattice.len() == 20, || format!("{spec} has {} elements", b3.lattice.len()))?;
    }
    // the drawing orients every edge towards the weight-1 end
    let b3 = tamari("B3:LL").map_err(|e| e.to_string())?;
    ensure(are_isomorphic(&b3.lattice, &b3_tamari_drawn()), || "B3 differs from the drawing".into())?;
    Ok("|A3| = 14, |B3| = 20, both match their drawings".into())
}

fn criterion_2() -> Outcome {
    let mut lattices: Vec<Lattice> = (1..=6).flat_map(all_lattices).collect();
    let exhaustive = lattices.len();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..1000 {
        let n = rng.random_range(7..=9);
        lattices.push(random_lattice(&mut rng, n));
    }
    let mut checked = 0usize;
    for l in &lattices {
        for pair in flip_pairs(l) {
            let said = check_mutation(l, &pair, false).is_mutation;
            let is = as_lattice(&flip(l, &pair)).is_ok();
            ensure(said == is, || format!("criterion says {said}, flip lattice is {is} on {:?}", l.covers()))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} flips on {exhaustive} exhaustive + 1000 random lattices, no discrepancy"))
}

fn weak_case<P: CoxeterElement>(w: &WeakOrder<P>) -> Result<(), String> {
    for i in 1..=w.rank() {
        let s = w.generator(i).map_err(|e| e.to_string())?;
        let (m, _, _) = mutate(w.lattice(), s).map_err(|e| format!("s{i}: {e}"))?;
        // independent check of x ↦ s_i·x
        for &(x, y) in w.lattice().covers() {
            let (fx, fy) = (w.mul(s, x), w.mul(s, y));
            ensure(m.is_cover(fx, fy), || format!("s{i}: cover {x} ≺ {y} not carried to {fx} ≺ {fy}"))?;
        }
        ensure(m.covers().len() == w.lattice().covers().len(), || format!("s{i}: cover counts differ"))?;
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    let err = |e: latmut::coxeter::CoxeterError| e.to_string();
    weak_case(&build_weak_order::<PermA>(2).map_err(err)?)?;
    weak_case(&build_weak_order::<PermA>(3).map_err(err)?)?;
    weak_case(&build_weak_order::<PermB>(2).map_err(err)?)?;
    weak_case(&build_weak_order::<PermB>(3).map_err(err)?)?;
    Ok("S3, S4, W(B2), W(B3): every atom mutation is x ↦ s·x".into())
}

fn criterion_4() -> Outcome {
    let mut sink_source = 0;
    let mut all_atoms = 0;
    let cases = (1..=4)
        .flat_map(|n| all_orientations(CoxeterType::A, n))
        .chain((2..=3).flat_map(|n| all_orientations(CoxeterType::B, n)));
    for o in cases {
        let c = build_cambrian_for(&o).map_err(|e| e.to_string())?;
        let q = cambrian_quiver(&c).map_err(|e| e.to_string())?;
        ensure(q == orientation_to_quiver(&o), || format!("{o}: quiver differs from orientation"))?;
        for v in 0..o.n {
            if !o.is_extremal(v) {
                continue;
            }
            let a = c.atom_for_vertex(v).map_err(|e| e.to_string())?;
            let (m, _, _) = mutate(&c.lattice, a).map_err(|e| format!("{o} at {v}: {e}"))?;
            let target = build_cambrian_for(&o.reflected(v)).map_err(|e| e.to_string())?;
            ensure(are_isomorphic(&m, &target.lattice), || format!("{o} at {v}: not the reflected Cambrian"))?;
            sink_source += 1;
        }
        ensure(quiver_commutes(&c.lattice, o.ty), || format!("{o}: lattice and quiver mutation disagree"))?;
        all_atoms += o.n;
    }
    Ok(format!("{sink_source} sink/source mutations match, quivers commute at {all_atoms} atoms"))
}

fn named_quivers(ty: CoxeterType) -> Vec<(&'static str, WeightedQuiver)> {
    let mut out: Vec<(&str, WeightedQuiver)> = Vec::new();
    let names: &[&str] = match ty {
        CoxeterType::A => &["RR", "LR", "RL"],
        CoxeterType::B => &["RR", "LR", "RL", "LL"],
    };
    for &s in names {
        let o = format!("{ty}3:{s}").parse().unwrap();
        out.push((s, orientation_to_quiver(&o)));
    }
    let weights = match ty {
        CoxeterType::A => vec![1, 1, 1],
        CoxeterType::B => vec![1, 2, 2],
    };
    out.push(("Circle", WeightedQuiver::new(weights, [(0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap()));
    out
}

fn edge_names(g: &MutationGraph, ty: CoxeterType) -> Result<BTreeMap<(String, String), usize>, String> {
    let named = named_quivers(ty);
    let names: Vec<String> = g
        .representatives
        .iter()
        .map(|l| {
            let (q, _) = quiver_from_lattice(l, ty).map_err(|e| e.to_string())?;
            named
                .iter()
                .find(|(_, r)| r.is_isomorphic(&q))
                .map(|(n, _)| n.to_string())
                .ok_or_else(|| format!("unnamed quiver {}", q.to_json()))
        })
        .collect::<Result<_, _>>()?;
    let mut m = BTreeMap::new();
    for e in &g.edges {
        *m.entry((names[e.from].clone(), names[e.to].clone())).or_insert(0) += 1;
    }
    Ok(m)
}

fn expected(edges: &[(&str, &str, usize)]) -> BTreeMap<(String, String), usize> {
    edges.iter().map(|&(a, b, k)| ((a.to_string(), b.to_string()), k)).collect()
}

fn criterion_5() -> Outcome {
    let a3 = tamari("A3:RR").map_err(|e| e.to_string())?;
    let g = mutation_graph(&a3.lattice, 1000).map_err(|e| e.to_string())?;
    ensure(g.len() == 4, || format!("A3 graph has {} classes", g.len()))?;
    let want = expected(&[
        ("RR", "LR", 1), ("RR", "RL", 1), ("RR", "Circle", 1),
        ("LR", "RR", 2), ("LR", "RL", 1),
        ("RL", "RR", 2), ("RL", "LR", 1),
        ("Circle", "RR", 3),
    ]);
    let got = edge_names(&g, CoxeterType::A)?;
    ensure(got == want, || format!("A3 edges {got:?}"))?;

    let b3 = tamari("B3:RR").map_err(|e| e.to_string())?;
    let g = mutation_graph(&b3.lattice, 1000).map_err(|e| e.to_string())?;
    ensure(g.len() == 5, || format!("B3 graph has {} classes", g.len()))?;
    let want = expected(&[
        ("RR", "LR", 1), ("RR", "RL", 1), ("RR", "Circle", 1),
        ("LR", "RL", 1), ("LR", "LL", 1), ("LR", "RR", 1),
        ("RL", "LL", 1), ("RL", "RR", 1), ("RL", "LR", 1),
        ("LL", "RL", 1), ("LL", "LR", 1), ("LL", "Circle", 1),
        ("Circle", "RR", 1), ("Circle", "LL", 1), ("Circle", "Circle", 1),
    ]);
    let got = edge_names(&g, CoxeterType::B)?;
    ensure(got == want, || format!("B3 edges {got:?}"))?;
    Ok("A3: 4 classes, 12 edges; B3: 5 classes, 15 edges with the cyclic self-loop".into())
}

fn criterion_6() -> Outcome {
    let c = tamari("A3:RR").map_err(|e| e.to_string())?;
    let middle = c.atom_for_vertex(1).map_err(|e| e.to_string())?;
    let (m, _, _) = mutate(&c.lattice, middle).map_err(|e| e.to_string())?;
    let (atoms, t) = atom_t_values(&m);
    ensure(atoms.len() == 3, || format!("{} atoms", atoms.len()))?;
    for i in 0..3 {
        for j in 0..3 {
            ensure(i == j || t[i][j] == 5, || format!("t = {t:?}"))?;
        }
    }
    let w = not_coxeter_quotient(&m).map_err(|e| e.to_string())?;
    ensure(w.as_ref().map(|w| w.t) == Some([5, 5, 5]), || format!("obstruction {w:?}"))?;
    let (q, _) = quiver_from_lattice(&m, CoxeterType::A).map_err(|e| e.to_string())?;
    let cycle = WeightedQuiver::unweighted(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
    ensure(q.is_isomorphic(&cycle), || format!("quiver {}", q.to_json()))?;
    ensure(are_isomorphic(&m, &affine_tamari_drawn()), || "differs from the drawing".into())?;
    Ok("t-values all 5, obstruction (5,5,5), quiver is the 3-cycle".into())
}

fn criterion_7() -> Outcome {
    let r = associahedron_census().map_err(|e| e.to_string())?;
    ensure(r.classes.len() == 8, || format!("{} classes", r.classes.len()))?;
    ensure(r.faces.squares == 3 && r.faces.pentagons == 6, || format!("faces {:?}", r.faces))?;
    let mut kinds: Vec<Classification> = r.classes.iter().map(|c| c.classification.clone()).collect();
    kinds.sort();
    let mut want = vec![
        Classification::Cambrian("A3:RR".into()),
        Classification::Cambrian("A3:RL".into()),
        Classification::Cambrian("A3:LR".into()),
        Classification::AffineTamari,
        Classification::BadCase1,
        Classification::BadCase1Opposite,
        Classification::BadCase2,
        Classification::BadCase2Opposite,
    ];
    want.sort();
    ensure(kinds == want, || format!("classes {kinds:?}"))?;
    for c in &r.classes {
        let bad = matches!(
            c.classification,
            Classification::BadCase1
                | Classification::BadCase1Opposite
                | Classification::BadCase2
                | Classification::BadCase2Opposite
        );
        ensure(c.regular_degree == Some(3), || format!("{} is not 3-regular", c.classification))?;
        ensure(c.locally_mutable != bad, || format!("{}: locally mutable = {}", c.classification, c.locally_mutable))?;
    }
    Ok(format!("{} lattice orientations in 8 classes, bad cases 3-regular and not locally mutable", r.lattice_orientations))
}

fn d_shift(p: &Poset, pair: &FlipPair) -> Result<(), String> {
    let before = distance_table(p).map_err(|e| e.to_string())?;
    let q = flip(p, pair);
    let after = distance_table(&q).map_err(|e| e.to_string())?;
    let eps = |x: usize| if pair.in_a(x) { -1 } else { 1 };
    let n = p.len();
    for x in 0..n {
        for y in 0..n {
            let shift = after.get(x, y) as i64 - before.get(x, y) as i64;
            ensure(2 * shift == eps(y) - eps(x), || format!("d shift at ({x},{y}) is {shift}"))?;
            for z in 0..n {
                ensure(before.big_d(x, y, z) == after.big_d(x, y, z), || format!("D({x},{y},{z}) moved"))?;
            }
        }
    }
    Ok(())
}

fn fault_plane_iso(l: &Lattice, pair: &FlipPair) -> Result<(), String> {
    let a = l.meet_all(pair.hanging_wall());
    let ac = ac_correspondence_for_atom(l, a).ok_or("mutation without AC-correspondence")?;
    let fp = fault_planes(l, pair);
    let up: Vec<usize> = fp.d_a.iter().map(|&x| ac.partial_up(l, x)).collect();
    let mut sorted = up.clone();
    sorted.sort();
    ensure(sorted == fp.d_b, || "∂↑ does not map ∂A onto ∂B".into())?;
    for (i, &x) in fp.d_a.iter().enumerate() {
        ensure(ac.partial_down(l, up[i]) == x, || "∂↓ does not invert ∂↑".into())?;
        for (j, &y) in fp.d_a.iter().enumerate() {
            ensure(l.leq(x, y) == l.leq(up[i], up[j]), || "∂↑ is not an order isomorphism".into())?;
        }
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut lattices: Vec<Lattice> = (2..=6).flat_map(all_lattices).collect();
    for _ in 0..60 {
        let n = rng.random_range(7..=10);
        lattices.push(random_lattice(&mut rng, n));
    }
    let mut posets: Vec<Poset> = lattices.iter().map(|l| l.poset().clone()).collect();
    for _ in 0..60 {
        let n = rng.random_range(3..=9);
        posets.push(random_connected_poset(&mut rng, n));
    }
    let mut flips = 0;
    for p in &posets {
        for pair in flip_pairs(p) {
            d_shift(p, &pair)?;
            let back = flip(&flip(p, &pair), &pair.swapped());
            ensure(back == *p, || "flip then dual flip is not the identity".into())?;
            flips += 1;
        }
        if p.minimum().is_some() {
            let g = flip_graph(p).map_err(|e| e.to_string())?;
            ensure(g.matches_hasse(p), || format!("flip graph differs from Hasse graph on {:?}", p.covers()))?;
        }
    }
    let mut mutations = 0;
    let mut certified = 0;
    for l in &lattices {
        for pair in flip_pairs(l) {
            if check_mutation(l, &pair, false).is_mutation {
                fault_plane_iso(l, &pair)?;
                mutations += 1;
            }
        }
        let r = is_mutable(l).map_err(|e| e.to_string())?;
        if r.mutable {
            ensure(r.states.iter().all(Lattice::is_semidistributive), || "mutable but not semidistributive".into())?;
            certified += 1;
        }
    }
    // every Cambrian lattice of A1..A3, B2, B3 is mutable at desk scale
    let cambrian = (1..=3)
        .flat_map(|n| all_orientations(CoxeterType::A, n))
        .chain((2..=3).flat_map(|n| all_orientations(CoxeterType::B, n)));
    for o in cambrian {
        let c = build_cambrian_for(&o).map_err(|e| e.to_string())?;
        let r = is_mutable(&c.lattice).map_err(|e| e.to_string())?;
        ensure(r.mutable, || format!("{o}: Cambrian lattice is not mutable"))?;
        ensure(r.states.iter().all(Lattice::is_semidistributive), || format!("{o}: non-semidistributive state"))?;
        certified += 1;
    }
    let mut classes = 0;
    for n in 1..=3 {
        let w = build_weak_order::<PermA>(n).map_err(|e| e.to_string())?;
        for mask in 0..1usize << (n + 1) {
            let sides: String = (0..=n).map(|i| if mask >> i & 1 == 1 { 'U' } else { 'L' }).collect();
            let polygon: Polygon = format!("A{n}:{sides}").parse().map_err(|e: latmut::cambrian::CambrianError| e.to_string())?;
            for s in w.elements() {
                for t in w.elements() {
                    let same = eta(&polygon, s) == eta(&polygon, t);
                    ensure(same == pattern_kernel_equal(&polygon, s, t), || format!("{polygon}: {s} vs {t}"))?;
                }
            }
            classes += build_cambrian(&polygon).map_err(|e| e.to_string())?.lattice.len();
        }
    }
    Ok(format!(
        "{flips} flips, {mutations} fault-plane isomorphisms, {certified} mutable lattices semidistributive, {classes} η classes"
    ))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 8] = [
        ("1 Cambrian sizes", criterion_1),
        ("2 mutation iff lattice", criterion_2),
        ("3 weak-order mutation", criterion_3),
        ("4 Cambrian/quiver commutation", criterion_4),
        ("5 mutation graphs", criterion_5),
        ("6 affine Tamari", criterion_6),
        ("7 associahedron census", criterion_7),
        ("8 property suites", criterion_8),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let line = match outcome {
            Ok(msg) => format!("PASS  criterion {name} ({secs:.2}s): {msg}\n"),
            Err(msg) => {
                failed.push(name);
                format!("FAIL  criterion {name} ({secs:.2}s): {msg}\n")
            }
        };
        // straight to the handle so the line shows without --nocapture
        let _ = std::io::stdout().write_all(line.as_bytes());
    }
    assert!(failed.is_empty(), "failed: {failed:?}");
}
