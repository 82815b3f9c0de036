//! Flip pairs, flips, fault planes and everything built on top of them.

mod mutation;
mod reroot;
mod transport;

pub use mutation::{
    ac_correspondence_for_atom, ac_correspondence_for_coatom, ac_correspondences, check_mutation,
    is_locally_mutable, is_mutable, mutate, u_map, AcCorrespondence, MutabilityReport,
    MutationVerdict, DEFAULT_STATE_CAP,
};
pub use reroot::{flip_graph, flip_on_atom, reroot, FlipGraph};
pub use transport::{
    bgp_factorization, quotient_flip, replay_reflections, restrict_mutation_to_ideal,
    IdealRestriction,
};

use crate::order::{OrderError, Poset};
use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FlipError {
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error("flip pair needs both sides nonempty")]
    EmptySide,
    #[error("no-descent condition fails: {x} in A lies above {y} in B")]
    NoDescentViolated { x: usize, y: usize },
    #[error("poset has no least element")]
    NoLeastElement,
    #[error("{0} is not an atom")]
    NotAnAtom(usize),
    #[error("{0} is not a coatom")]
    NotACoatom(usize),
    #[error("atom {0} has no AC-correspondence")]
    NoCorrespondence(usize),
    #[error("flip pair is not a mutation")]
    NotAMutation,
    #[error("homomorphism collapses the atom of the pair onto the bottom")]
    PrerequisiteFailed,
    #[error("mutation closure exceeded {0} states")]
    Overflow(usize),
    #[error("u({0}) is not uniquely determined")]
    NonUniqueU(usize),
    #[error("consistency check failed: {0}")]
    Invariant(String),
}

/// A partition `(A, B)` with nothing in `A` above anything in `B`. `A` is the
/// footwall, `B` the hanging wall.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlipPair {
    in_a: Vec<bool>,
}

/// Serialised form `{"A": [..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlipPairFile {
    #[serde(rename = "A")]
    pub a: Vec<usize>,
}

impl FlipPair {
    /// Validates `A` against `p`; `B` is its complement.
    pub fn new<I: IntoIterator<Item = usize>>(p: &Poset, a: I) -> Result<FlipPair, FlipError> {
        let mut in_a = vec![false; p.len()];
        for x in a {
            p.check_index(x)?;
            in_a[x] = true;
        }
        if !in_a.iter().any(|&v| v) || in_a.iter().all(|&v| v) {
            return Err(FlipError::EmptySide);
        }
        // A is a down-set iff no cover y ≺ x has y ∈ B and x ∈ A.
        for &(y, x) in p.covers() {
            if in_a[x] && !in_a[y] {
                return Err(FlipError::NoDescentViolated { x, y });
            }
        }
        Ok(FlipPair { in_a })
    }

    /// The pair whose hanging wall is `b`.
    pub fn from_hanging_wall<I: IntoIterator<Item = usize>>(
        p: &Poset,
        b: I,
    ) -> Result<FlipPair, FlipError> {
        let mut in_b = vec![false; p.len()];
        for x in b {
            p.check_index(x)?;
            in_b[x] = true;
        }
        FlipPair::new(p, (0..p.len()).filter(|&x| !in_b[x]))
    }

    /// `A = L \ {x ≥ top_of_b}` style pair from an up-set given as bitset.
    pub fn from_up_set(p: &Poset, b: &FixedBitSet) -> Result<FlipPair, FlipError> {
        FlipPair::from_hanging_wall(p, b.ones())
    }

    pub fn len(&self) -> usize {
        self.in_a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.in_a.is_empty()
    }

    pub fn in_a(&self, x: usize) -> bool {
        self.in_a[x]
    }

    pub fn in_b(&self, x: usize) -> bool {
        !self.in_a[x]
    }

    pub fn footwall(&self) -> Vec<usize> {
        (0..self.in_a.len()).filter(|&x| self.in_a[x]).collect()
    }

    pub fn hanging_wall(&self) -> Vec<usize> {
        (0..self.in_a.len()).filter(|&x| !self.in_a[x]).collect()
    }

    pub fn footwall_set(&self) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.in_a.len());
        for x in self.footwall() {
            s.insert(x);
        }
        s
    }

    pub fn hanging_wall_set(&self) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.in_a.len());
        for x in self.hanging_wall() {
            s.insert(x);
        }
        s
    }

    /// The same partition with the roles swapped.
    pub fn swapped(&self) -> FlipPair {
        FlipPair { in_a: self.in_a.iter().map(|&v| !v).collect() }
    }

    pub fn to_file(&self) -> FlipPairFile {
        FlipPairFile { a: self.footwall() }
    }

    pub fn from_file(p: &Poset, f: &FlipPairFile) -> Result<FlipPair, FlipError> {
        FlipPair::new(p, f.a.iter().copied())
    }
}

/// Reverses every cover from `A` up into `B`; covers inside either side stay.
pub fn flip(p: &Poset, pair: &FlipPair) -> Poset {
    assert_eq!(p.len(), pair.len(), "flip pair belongs to another poset");
    let covers: Vec<(usize, usize)> = p
        .covers()
        .iter()
        .map(|&(x, y)| if pair.in_a(x) && pair.in_b(y) { (y, x) } else { (x, y) })
        .collect();
    let m = covers.len();
    let q = Poset::from_covers(p.len(), covers).expect("a flip of a poset is a poset");
    debug_assert_eq!(q.covers().len(), m, "flipped covers stay irredundant");
    match p.labels() {
        Some(l) => q.with_labels(l.to_vec()).expect("same size"),
        None => q,
    }
}

/// The flipped poset and the pair `(B, A)` on it, which flips back.
pub fn dual_flip(p: &Poset, pair: &FlipPair) -> (Poset, FlipPair) {
    let q = flip(p, pair);
    let back = pair.swapped();
    debug_assert!(FlipPair::new(&q, back.footwall()).is_ok());
    (q, back)
}

/// `∂A`: elements of `A` covered by something in `B`; `∂B` dually.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaultPlanes {
    pub d_a: Vec<usize>,
    pub d_b: Vec<usize>,
}

pub fn fault_planes(p: &Poset, pair: &FlipPair) -> FaultPlanes {
    let mut in_da = vec![false; p.len()];
    let mut in_db = vec![false; p.len()];
    for &(x, y) in p.covers() {
        if pair.in_a(x) && pair.in_b(y) {
            in_da[x] = true;
            in_db[y] = true;
        }
    }
    FaultPlanes {
        d_a: (0..p.len()).filter(|&x| in_da[x]).collect(),
        d_b: (0..p.len()).filter(|&x| in_db[x]).collect(),
    }
}
