use super::{check_mutation, fault_planes, flip, FlipError, FlipPair};
use crate::order::{is_lattice_homomorphism, Interval, Lattice, Poset};
use std::collections::BTreeSet;

/// Pushes a mutation pair through a surjective lattice homomorphism `f: L → M`.
pub fn quotient_flip(
    l: &Lattice,
    pair: &FlipPair,
    m: &Lattice,
    f: &[usize],
) -> Result<FlipPair, FlipError> {
    if !is_lattice_homomorphism(l, m, f) {
        return Err(FlipError::Invariant("map is not a lattice homomorphism".into()));
    }
    let a = l.meet_all(pair.hanging_wall());
    if f[a] == f[l.bottom()] {
        return Err(FlipError::PrerequisiteFailed);
    }
    let fa: BTreeSet<usize> = pair.footwall().iter().map(|&x| f[x]).collect();
    let fb: BTreeSet<usize> = pair.hanging_wall().iter().map(|&x| f[x]).collect();
    if !fa.is_disjoint(&fb) || fa.len() + fb.len() != m.len() {
        return Err(FlipError::Invariant("images of A and B do not partition M".into()));
    }
    let pushed = FlipPair::new(m, fa.iter().copied())?;
    let here = fault_planes(l, pair);
    let there = fault_planes(m, &pushed);
    let image: BTreeSet<usize> = here.d_a.iter().map(|&x| f[x]).collect();
    if image.into_iter().collect::<Vec<_>>() != there.d_a {
        return Err(FlipError::Invariant("f(∂A) differs from ∂f(A)".into()));
    }
    if !check_mutation(m, &pushed, false).is_mutation {
        return Err(FlipError::Invariant("pushed pair is not a mutation".into()));
    }
    Ok(pushed)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealRestriction {
    /// `x ∈ ∂B`: the ideal `[0, x]` of `L` flips along the restricted pair to
    /// the interval `[a, ∂↓(x)]` of `L′`, on the same elements.
    Restricted { ideal: Interval, pair: FlipPair, image: Interval },
    /// `x ∈ A`: the ideal lies inside the footwall and the flip leaves it alone.
    Unchanged { ideal: Interval },
    /// `x ∈ B \ ∂B`: the ideal does not flip to an ideal.
    Outside,
}

pub fn restrict_mutation_to_ideal(
    l: &Lattice,
    pair: &FlipPair,
    x: usize,
) -> Result<IdealRestriction, FlipError> {
    l.check_index(x)?;
    if !check_mutation(l, pair, false).is_mutation {
        return Err(FlipError::NotAMutation);
    }
    let ideal = l.interval(l.bottom(), x)?;
    if pair.in_a(x) {
        return Ok(IdealRestriction::Unchanged { ideal });
    }
    if !fault_planes(l, pair).d_b.contains(&x) {
        return Ok(IdealRestriction::Outside);
    }
    let a = l.meet_all(pair.hanging_wall());
    let coatom = l.join_all(pair.footwall());
    let x_down = l.meet(l.join(x, a), coatom);
    let flipped = flip(l, pair);
    let image = flipped.interval(a, x_down)?;
    let local = FlipPair::new(
        &ideal.poset,
        (0..ideal.len()).filter(|&i| pair.in_a(ideal.elements[i])),
    )?;
    if image.elements != ideal.elements || flip(&ideal.poset, &local) != image.poset {
        return Err(FlipError::Invariant(format!(
            "flipped ideal [0, {x}] is not the interval [{a}, {x_down}]"
        )));
    }
    Ok(IdealRestriction::Restricted { ideal, pair: local, image })
}

/// A linear extension of the footwall; reflecting at each element in turn
/// realises the flip.
pub fn bgp_factorization(p: &Poset, pair: &FlipPair) -> Result<Vec<usize>, FlipError> {
    let seq: Vec<usize> = p.linear_extension().into_iter().filter(|&x| pair.in_a(x)).collect();
    if replay_reflections(p, &seq)? != flip(p, pair) {
        return Err(FlipError::Invariant("reflections do not reproduce the flip".into()));
    }
    Ok(seq)
}

/// Applies reflections at minimal elements of the running cover digraph.
pub fn replay_reflections(p: &Poset, seq: &[usize]) -> Result<Poset, FlipError> {
    let mut edges: Vec<(usize, usize)> = p.covers().to_vec();
    for &v in seq {
        p.check_index(v)?;
        if edges.iter().any(|&(_, hi)| hi == v) {
            return Err(FlipError::Invariant(format!("{v} is not minimal when reflected")));
        }
        for e in edges.iter_mut() {
            if e.0 == v {
                *e = (e.1, e.0);
            }
        }
    }
    let q = Poset::from_covers(p.len(), edges)?;
    Ok(match p.labels() {
        Some(l) => q.with_labels(l.to_vec())?,
        None => q,
    })
}
