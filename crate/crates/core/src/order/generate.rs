use super::{canonical_form, Lattice, Poset};
use fixedbitset::FixedBitSet;
use rand::seq::SliceRandom;
use rand::Rng;
use std::collections::HashSet;

// Bottom is element 0, top is n-1, the middle elements 1..n-1 carry an order
// compatible with their index order.
fn bounded_poset(n: usize, middle_pairs: &[(usize, usize)]) -> Poset {
    let top = n - 1;
    let mut pairs: Vec<(usize, usize)> = vec![(0, top)];
    for m in 1..top {
        pairs.push((0, m));
        pairs.push((m, top));
    }
    pairs.extend_from_slice(middle_pairs);
    Poset::from_covers(n, pairs).expect("index-compatible relation is acyclic")
}

/// Every lattice with `n` elements, one per isomorphism class. Feasible for
/// `n ≤ 8`.
pub fn all_lattices(n: usize) -> Vec<Lattice> {
    assert!(n <= 9, "exhaustive lattice enumeration is capped at 9 elements");
    match n {
        0 => return Vec::new(),
        1 => return vec![Lattice::new(Poset::from_covers(1, []).unwrap()).unwrap()],
        _ => {}
    }
    let k = n - 2;
    let slots: Vec<(usize, usize)> =
        (1..=k).flat_map(|i| (i + 1..=k).map(move |j| (i, j))).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << slots.len()) {
        let chosen: Vec<(usize, usize)> = slots
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let p = bounded_poset(n, &chosen);
        if let Ok(l) = Lattice::new(p) {
            if seen.insert(canonical_form(&l)) {
                out.push(l);
            }
        }
    }
    out
}

/// A random lattice on `n ≥ 2` elements by rejection sampling over random
/// bounded posets.
pub fn random_lattice<R: Rng>(rng: &mut R, n: usize) -> Lattice {
    assert!(n >= 2);
    loop {
        let density: f64 = rng.random_range(0.15..0.7);
        let mut pairs = Vec::new();
        for i in 1..n - 1 {
            for j in i + 1..n - 1 {
                if rng.random_bool(density) {
                    pairs.push((i, j));
                }
            }
        }
        let p = bounded_poset(n, &pairs);
        let perm = shuffled(rng, n);
        if let Ok(l) = Lattice::new(p.permuted(&perm)) {
            return l;
        }
    }
}

/// A random connected poset on `n ≥ 1` elements.
pub fn random_connected_poset<R: Rng>(rng: &mut R, n: usize) -> Poset {
    assert!(n >= 1);
    loop {
        let density: f64 = rng.random_range(0.2..0.8);
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.random_bool(density) {
                    pairs.push((i, j));
                }
            }
        }
        let p = Poset::from_covers(n, pairs).expect("forward edges are acyclic");
        if p.is_connected() {
            return p.permuted(&shuffled(rng, n));
        }
    }
}

fn shuffled<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// All down-closed subsets, or `None` once more than `cap` have been found.
pub fn down_sets(p: &Poset, cap: usize) -> Option<Vec<FixedBitSet>> {
    let order = p.linear_extension();
    let mut out = Vec::new();
    let mut current = FixedBitSet::with_capacity(p.len());
    if grow(p, &order, 0, &mut current, &mut out, cap) {
        Some(out)
    } else {
        None
    }
}

fn grow(
    p: &Poset,
    order: &[usize],
    i: usize,
    current: &mut FixedBitSet,
    out: &mut Vec<FixedBitSet>,
    cap: usize,
) -> bool {
    if i == order.len() {
        if out.len() >= cap {
            return false;
        }
        out.push(current.clone());
        return true;
    }
    let x = order[i];
    if !grow(p, order, i + 1, current, out, cap) {
        return false;
    }
    if p.covered_by(x).iter().all(|&y| current.contains(y)) {
        current.insert(x);
        let ok = grow(p, order, i + 1, current, out, cap);
        current.set(x, false);
        return ok;
    }
    true
}
