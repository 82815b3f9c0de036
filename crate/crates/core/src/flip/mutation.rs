use super::{fault_planes, flip, FlipError, FlipPair};
use crate::order::{distance_table, Lattice, Poset};
use fixedbitset::FixedBitSet;
use std::collections::{HashMap, VecDeque};

pub const DEFAULT_STATE_CAP: usize = 1_000_000;

/// An atom `a` and coatom `a′` with `L = {x ≥ a} ⊔ {x ≤ a′}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AcCorrespondence {
    pub atom: usize,
    pub coatom: usize,
}

impl AcCorrespondence {
    /// `∂↓(x) = (x∨a)∧a′`.
    pub fn partial_down(&self, l: &Lattice, x: usize) -> usize {
        l.meet(l.join(x, self.atom), self.coatom)
    }

    /// `∂↑(x) = (x∧a′)∨a`.
    pub fn partial_up(&self, l: &Lattice, x: usize) -> usize {
        l.join(l.meet(x, self.coatom), self.atom)
    }

    /// `A = {x ≤ a′}`, `B = {x ≥ a}`.
    pub fn pair(&self, l: &Lattice) -> FlipPair {
        FlipPair::from_up_set(l, l.up_set(self.atom)).expect("AC-correspondence splits L")
    }
}

pub fn ac_correspondence_for_atom(l: &Lattice, a: usize) -> Option<AcCorrespondence> {
    if !l.is_cover(l.bottom(), a) {
        return None;
    }
    let mut rest = l.up_set(a).clone();
    rest.toggle_range(..);
    let c = l.join_all(rest.ones());
    (rest.contains(c) && *l.down_set(c) == rest && l.is_cover(c, l.top()))
        .then_some(AcCorrespondence { atom: a, coatom: c })
}

pub fn ac_correspondence_for_coatom(l: &Lattice, c: usize) -> Option<AcCorrespondence> {
    if !l.is_cover(c, l.top()) {
        return None;
    }
    let mut rest = l.down_set(c).clone();
    rest.toggle_range(..);
    let a = l.meet_all(rest.ones());
    (rest.contains(a) && *l.up_set(a) == rest && l.is_cover(l.bottom(), a))
        .then_some(AcCorrespondence { atom: a, coatom: c })
}

/// Every AC-correspondence, ordered by atom.
pub fn ac_correspondences(l: &Lattice) -> Vec<AcCorrespondence> {
    l.atoms().into_iter().filter_map(|a| ac_correspondence_for_atom(l, a)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MutationVerdict {
    pub is_mutation: bool,
    pub ac_ok: bool,
    pub sublattice_ok: bool,
    pub d_sublattice_ok: bool,
    /// Whether the flip is a lattice, filled in only when asked for.
    pub flipped_is_lattice: Option<bool>,
}

/// Evaluates the AC and ∂-sublattice conditions. With `verify`, also builds
/// the flip and tests it for lattice-ness directly.
pub fn check_mutation(l: &Lattice, pair: &FlipPair, verify: bool) -> MutationVerdict {
    let ac_ok = l.coatoms().iter().any(|&c| pair.in_a(c)) && l.atoms().iter().any(|&a| pair.in_b(a));
    let sublattice_ok =
        l.is_join_closed(&pair.footwall_set()) && l.is_meet_closed(&pair.hanging_wall_set());
    let fp = fault_planes(l, pair);
    let d_sublattice_ok = l.is_join_closed(&to_set(l.len(), &fp.d_a))
        && l.is_meet_closed(&to_set(l.len(), &fp.d_b));
    debug_assert!(!d_sublattice_ok || sublattice_ok);
    let flipped_is_lattice = verify.then(|| Lattice::new(flip(l, pair)).is_ok());
    MutationVerdict {
        is_mutation: ac_ok && d_sublattice_ok,
        ac_ok,
        sublattice_ok,
        d_sublattice_ok,
        flipped_is_lattice,
    }
}

fn to_set(n: usize, xs: &[usize]) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(n);
    for &x in xs {
        s.insert(x);
    }
    s
}

/// The mutation at atom `a`: the flip with `B = {x ≥ a}`, checked.
pub fn mutate(l: &Lattice, a: usize) -> Result<(Lattice, AcCorrespondence, FlipPair), FlipError> {
    l.check_index(a)?;
    if !l.is_cover(l.bottom(), a) {
        return Err(FlipError::NotAnAtom(a));
    }
    let ac = ac_correspondence_for_atom(l, a).ok_or(FlipError::NoCorrespondence(a))?;
    let pair = ac.pair(l);
    if !check_mutation(l, &pair, false).is_mutation {
        return Err(FlipError::NotAMutation);
    }
    let m = Lattice::new(flip(l, &pair))
        .map_err(|e| FlipError::Invariant(format!("criterion accepted a non-lattice flip: {e}")))?;
    Ok((m, ac, pair))
}

/// Every atom and coatom has an AC-correspondence and each of those flips is
/// a mutation.
pub fn is_locally_mutable(l: &Lattice) -> bool {
    if l.len() < 2 {
        return false;
    }
    let atoms_ok = l.atoms().into_iter().all(|a| match ac_correspondence_for_atom(l, a) {
        Some(ac) => check_mutation(l, &ac.pair(l), false).is_mutation,
        None => false,
    });
    atoms_ok && l.coatoms().into_iter().all(|c| ac_correspondence_for_coatom(l, c).is_some())
}

#[derive(Clone, Debug)]
pub struct MutabilityReport {
    pub mutable: bool,
    /// Every lattice reached, the input first.
    pub states: Vec<Lattice>,
    /// Index into `states` of a lattice that is not locally mutable.
    pub witness: Option<usize>,
}

fn state_cap() -> usize {
    std::env::var("LATMUT_STATE_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_STATE_CAP)
}

/// Breadth-first search over the mutation class of `l` on its fixed ground
/// set. Stops at the first lattice that is not locally mutable.
pub fn is_mutable(l: &Lattice) -> Result<MutabilityReport, FlipError> {
    let cap = state_cap();
    let mut seen: HashMap<Vec<(usize, usize)>, usize> = HashMap::new();
    let mut states = vec![l.clone()];
    seen.insert(l.covers().to_vec(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let cur = states[i].clone();
        if !is_locally_mutable(&cur) {
            return Ok(MutabilityReport { mutable: false, states, witness: Some(i) });
        }
        for a in cur.atoms() {
            let (next, _, _) = mutate(&cur, a)?;
            if seen.contains_key(next.covers()) {
                continue;
            }
            if states.len() >= cap {
                return Err(FlipError::Overflow(cap));
            }
            seen.insert(next.covers().to_vec(), states.len());
            queue.push_back(states.len());
            states.push(next);
        }
    }
    Ok(MutabilityReport { mutable: true, states, witness: None })
}

/// `u(x)`: the unique `z` with `D(x, y, z) = 0` for every `y`.
pub fn u_map(p: &Poset) -> Result<Vec<usize>, FlipError> {
    let t = distance_table(p)?;
    let n = p.len();
    let mut u = Vec::with_capacity(n);
    for x in 0..n {
        let mut found = (0..n).filter(|&z| (0..n).all(|y| t.big_d(x, y, z) == 0));
        match (found.next(), found.next()) {
            (Some(z), None) => u.push(z),
            _ => return Err(FlipError::NonUniqueU(x)),
        }
    }
    let mut hit = vec![false; n];
    for &z in &u {
        if std::mem::replace(&mut hit[z], true) {
            return Err(FlipError::Invariant("u is not injective".into()));
        }
    }
    Ok(u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Lattice {
        Lattice::new(Poset::from_covers(4, [(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()).unwrap()
    }

    // e=0, s1=1, s2=2, s1s2=3, s2s1=4, w0=5
    fn hexagon() -> Lattice {
        Lattice::new(
            Poset::from_covers(6, [(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 5)]).unwrap(),
        )
        .unwrap()
    }

    fn m3() -> Lattice {
        Lattice::new(Poset::from_covers(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap())
            .unwrap()
    }

    #[test]
    fn correspondences() {
        let d = diamond();
        assert_eq!(ac_correspondence_for_atom(&d, 1), Some(AcCorrespondence { atom: 1, coatom: 2 }));
        assert_eq!(ac_correspondence_for_coatom(&d, 2), Some(AcCorrespondence { atom: 1, coatom: 2 }));
        assert_eq!(ac_correspondence_for_atom(&m3(), 1), None);
        let h = hexagon();
        // s1·w0 = s2s1
        assert_eq!(ac_correspondence_for_atom(&h, 1).unwrap().coatom, 4);
    }

    #[test]
    fn partial_maps() {
        let d = diamond();
        let ac = ac_correspondence_for_atom(&d, 1).unwrap();
        assert_eq!(ac.partial_down(&d, 0), 0);
        let h = hexagon();
        let ac = ac_correspondence_for_atom(&h, 1).unwrap();
        assert_eq!(ac.partial_down(&h, 5), 4);
        let fp = fault_planes(&h, &ac.pair(&h));
        for &x in &fp.d_a {
            assert_eq!(ac.partial_down(&h, x), x);
        }
        for &y in &fp.d_b {
            assert_eq!(ac.partial_up(&h, y), y);
        }
    }

    #[test]
    fn diamond_mutation() {
        let d = diamond();
        let pair = FlipPair::from_hanging_wall(&d, [1, 3]).unwrap();
        let v = check_mutation(&d, &pair, true);
        assert!(v.is_mutation && v.ac_ok && v.sublattice_ok && v.d_sublattice_ok);
        assert_eq!(v.flipped_is_lattice, Some(true));
        let (m, _, _) = mutate(&d, 1).unwrap();
        assert_eq!(m.bottom(), 1);
    }

    #[test]
    fn m3_is_not_locally_mutable() {
        assert!(!is_locally_mutable(&m3()));
        assert_eq!(mutate(&m3(), 1).unwrap_err(), FlipError::NoCorrespondence(1));
    }

    #[test]
    fn polygons_are_mutable() {
        for l in [diamond(), hexagon()] {
            assert!(is_locally_mutable(&l));
            let r = is_mutable(&l).unwrap();
            assert!(r.mutable);
            assert_eq!(r.states.len(), l.len());
        }
    }

    #[test]
    fn u_on_polygons() {
        let d = diamond();
        assert_eq!(u_map(&d).unwrap(), vec![3, 2, 1, 0]);
        let h = hexagon();
        assert_eq!(u_map(&h).unwrap(), vec![5, 4, 3, 2, 1, 0]);
    }
}
