//! Symmetric groups and signed permutation groups with their right weak
//! orders.

mod perm;

pub use perm::{CoxeterElement, PermA, PermB};

use crate::flip::{flip_on_atom, FlipError};
use crate::order::{is_lattice_homomorphism, Interval, Lattice, OrderError, Poset};
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, VecDeque};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoxeterType {
    A,
    B,
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoxeterType::A => "A",
            CoxeterType::B => "B",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoxeterError {
    #[error("rank {rank} is out of range for type {ty} (1..={max})")]
    RankCap { ty: CoxeterType, rank: usize, max: usize },
    #[error("not a permutation of the expected kind: {0}")]
    BadPermutation(String),
    #[error("generator s{0} does not exist")]
    NotAGenerator(usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Flip(#[from] FlipError),
    #[error("consistency check failed: {0}")]
    Invariant(String),
}

/// The right weak order, elements interned in breadth-first order from the
/// identity. Index 0 is the identity and index `i` is `s_i` for `1 ≤ i ≤ n`.
#[derive(Clone, Debug)]
pub struct WeakOrder<P: CoxeterElement> {
    rank: usize,
    elements: Vec<P>,
    index: HashMap<P, usize>,
    lengths: Vec<usize>,
    lattice: Lattice,
    w0: usize,
}

pub fn build_weak_order<P: CoxeterElement>(rank: usize) -> Result<WeakOrder<P>, CoxeterError> {
    if rank == 0 || rank > P::MAX_RANK {
        return Err(CoxeterError::RankCap { ty: P::TYPE, rank, max: P::MAX_RANK });
    }
    let gens: Vec<P> = (1..=rank).map(|i| P::generator(rank, i)).collect();
    let id = P::identity(rank);
    let mut elements = vec![id.clone()];
    let mut index = HashMap::from([(id, 0usize)]);
    let mut lengths = vec![0usize];
    let mut covers = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    // Generators are involutions, so breadth-first depth is word length.
    while let Some(i) = queue.pop_front() {
        for s in &gens {
            let q = elements[i].compose(s);
            match index.get(&q) {
                Some(&j) => {
                    if lengths[j] == lengths[i] + 1 {
                        covers.push((i, j));
                    }
                }
                None => {
                    let j = elements.len();
                    index.insert(q.clone(), j);
                    elements.push(q);
                    lengths.push(lengths[i] + 1);
                    covers.push((i, j));
                    queue.push_back(j);
                }
            }
        }
    }
    let labels = elements.iter().map(ToString::to_string).collect();
    let poset = Poset::from_covers(elements.len(), covers)?.with_labels(labels)?;
    let lattice = Lattice::new(poset)?;
    let w0 = lattice.top();
    Ok(WeakOrder { rank, elements, index, lengths, lattice, w0 })
}

impl<P: CoxeterElement> WeakOrder<P> {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coxeter_type(&self) -> CoxeterType {
        P::TYPE
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn element(&self, i: usize) -> &P {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[P] {
        &self.elements
    }

    pub fn index_of(&self, p: &P) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Breadth-first word length of element `i`.
    pub fn length(&self, i: usize) -> usize {
        self.lengths[i]
    }

    pub fn w0(&self) -> usize {
        self.w0
    }

    /// Index of `s_i`.
    pub fn generator(&self, i: usize) -> Result<usize, CoxeterError> {
        if (1..=self.rank).contains(&i) {
            Ok(i)
        } else {
            Err(CoxeterError::NotAGenerator(i))
        }
    }

    /// Index of `p·q`.
    pub fn mul(&self, p: usize, q: usize) -> usize {
        self.index[&self.elements[p].compose(&self.elements[q])]
    }
}

/// `p ≤ q` iff `l(q) = l(p) + l(p⁻¹q)`.
pub fn weak_leq<P: CoxeterElement>(p: &P, q: &P) -> bool {
    q.length() == p.length() + p.inverse().compose(q).length()
}

/// Flips the weak order on the atom `s_i` and returns the result with the
/// isomorphism `x ↦ s_i·x` from the original weak order onto it.
pub fn weak_order_mutation<P: CoxeterElement>(
    w: &WeakOrder<P>,
    i: usize,
) -> Result<(Lattice, Vec<usize>), CoxeterError> {
    let s = w.generator(i)?;
    let (flipped, _) = flip_on_atom(&w.lattice, s)?;
    let m = Lattice::new(flipped)?;
    let f: Vec<usize> = (0..w.len()).map(|x| w.mul(s, x)).collect();
    let preserved = w.lattice.covers().iter().all(|&(x, y)| m.is_cover(f[x], f[y]));
    if !preserved || m.covers().len() != w.lattice.covers().len() {
        return Err(CoxeterError::Invariant(format!("x ↦ s{i}·x is not an isomorphism")));
    }
    Ok((m, f))
}

/// The parabolic subgroup on a set of generators as the interval below its
/// longest element.
#[derive(Clone, Debug)]
pub struct Parabolic {
    pub generators: Vec<usize>,
    pub longest: usize,
    pub interval: Interval,
}

pub fn parabolic<P: CoxeterElement>(
    w: &WeakOrder<P>,
    generators: &[usize],
) -> Result<Parabolic, CoxeterError> {
    let mut gens = generators.to_vec();
    gens.sort_unstable();
    gens.dedup();
    for &g in &gens {
        w.generator(g)?;
    }
    let mut members = vec![false; w.len()];
    members[0] = true;
    let mut stack = vec![0usize];
    while let Some(x) = stack.pop() {
        for &g in &gens {
            let y = w.mul(x, g);
            if !std::mem::replace(&mut members[y], true) {
                stack.push(y);
            }
        }
    }
    let longest = (0..w.len())
        .filter(|&x| members[x])
        .max_by_key(|&x| w.length(x))
        .expect("identity is a member");
    let interval = w.lattice.interval(0, longest)?;
    let expected: Vec<usize> = (0..w.len()).filter(|&x| members[x]).collect();
    if interval.elements != expected {
        return Err(CoxeterError::Invariant("parabolic subgroup is not an ideal".into()));
    }
    Ok(Parabolic { generators: gens, longest, interval })
}

/// A homomorphism `f` with `f(id) = f(s_a)`, split as `g ∘ f′` with
/// `f′(x) = x ∧ w`, `w` the longest element of the parabolic on the other
/// generators.
#[derive(Clone, Debug)]
pub struct ParabolicFactor {
    pub parabolic: Parabolic,
    /// `f′` into weak-order indices.
    pub projection: Vec<usize>,
    /// `g` on the parabolic, indexed by position in `parabolic.interval`.
    pub rest: Vec<usize>,
}

pub fn factor_through_parabolic<P: CoxeterElement>(
    w: &WeakOrder<P>,
    a: usize,
    m: &Lattice,
    f: &[usize],
) -> Result<ParabolicFactor, CoxeterError> {
    let s = w.generator(a)?;
    if !is_lattice_homomorphism(&w.lattice, m, f) {
        return Err(CoxeterError::Precondition("map is not a lattice homomorphism".into()));
    }
    if f[0] != f[s] {
        return Err(CoxeterError::Precondition(format!("f(id) ≠ f(s{a})")));
    }
    let others: Vec<usize> = (1..=w.rank).filter(|&g| g != a).collect();
    let par = parabolic(w, &others)?;
    let projection: Vec<usize> = (0..w.len()).map(|x| w.lattice.meet(x, par.longest)).collect();
    let sub = Lattice::new(par.interval.poset.clone())?;
    let local: Vec<usize> = projection
        .iter()
        .map(|&y| par.interval.position(y).expect("meet with the longest element lies below it"))
        .collect();
    if !is_lattice_homomorphism(&w.lattice, &sub, &local) {
        return Err(CoxeterError::Invariant("x ↦ x∧w is not a lattice homomorphism".into()));
    }
    if (0..w.len()).any(|x| f[x] != f[projection[x]]) {
        return Err(CoxeterError::Invariant("f does not factor through the projection".into()));
    }
    let rest = par.interval.elements.iter().map(|&y| f[y]).collect();
    Ok(ParabolicFactor { parabolic: par, projection, rest })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flip::ac_correspondence_for_atom;

    #[test]
    fn small_weak_orders() {
        let a2 = build_weak_order::<PermA>(2).unwrap();
        assert_eq!(a2.len(), 6);
        assert_eq!(a2.length(a2.w0()), 3);
        assert_eq!(a2.lattice().is_polygon(), Some((3, 3)));
        assert_eq!(build_weak_order::<PermA>(3).unwrap().len(), 24);
        let b2 = build_weak_order::<PermB>(2).unwrap();
        assert_eq!(b2.len(), 8);
        assert_eq!(b2.lattice().is_polygon(), Some((4, 4)));
        assert_eq!(b2.length(b2.w0()), 4);
        assert!(matches!(
            build_weak_order::<PermB>(5),
            Err(CoxeterError::RankCap { rank: 5, max: 4, .. })
        ));
    }

    #[test]
    fn weak_leq_matches_hexagon() {
        let a2 = build_weak_order::<PermA>(2).unwrap();
        let l = a2.lattice();
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(weak_leq(a2.element(x), a2.element(y)), l.leq(x, y));
            }
        }
        let s1 = PermA::generator(2, 1);
        let s2s1 = PermA::generator(2, 2).compose(&s1);
        assert!(!weak_leq(&s1, &s2s1));
    }

    #[test]
    fn generator_correspondence_is_a_w0() {
        let a3 = build_weak_order::<PermA>(3).unwrap();
        for i in 1..=3 {
            let ac = ac_correspondence_for_atom(a3.lattice(), i).unwrap();
            assert_eq!(ac.coatom, a3.mul(i, a3.w0()));
        }
    }

    #[test]
    fn mutations_are_isomorphisms() {
        let a3 = build_weak_order::<PermA>(3).unwrap();
        for i in 1..=3 {
            let (m, f) = weak_order_mutation(&a3, i).unwrap();
            assert_eq!(m.bottom(), f[0]);
        }
        let b2 = build_weak_order::<PermB>(2).unwrap();
        assert!(weak_order_mutation(&b2, 1).is_ok());
        assert!(weak_order_mutation(&b2, 3).is_err());
    }

    #[test]
    fn parabolics() {
        let a3 = build_weak_order::<PermA>(3).unwrap();
        assert_eq!(parabolic(&a3, &[]).unwrap().interval.len(), 1);
        let p = parabolic(&a3, &[1, 2]).unwrap();
        assert_eq!(p.interval.len(), 6);
        assert_eq!(a3.element(p.longest).to_string(), "[3,2,1,4]");
        assert_eq!(parabolic(&a3, &[1, 2, 3]).unwrap().interval.len(), 24);
    }

    #[test]
    fn factor_constant_map() {
        let a3 = build_weak_order::<PermA>(3).unwrap();
        let one = Lattice::new(Poset::from_covers(1, []).unwrap()).unwrap();
        let fac = factor_through_parabolic(&a3, 2, &one, &[0; 24]).unwrap();
        assert_eq!(fac.parabolic.interval.len(), 4);
        let id: Vec<usize> = (0..24).collect();
        assert!(matches!(
            factor_through_parabolic(&a3, 2, a3.lattice(), &id),
            Err(CoxeterError::Precondition(_))
        ));
    }
}
