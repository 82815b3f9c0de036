//! Named lattices used as references by the census and the explorers.

use crate::cambrian::{build_cambrian_for, Cambrian, CambrianError};
use crate::flip::mutate;
use crate::order::{Lattice, Poset};
use crate::quiver::CoxeterOrientation;

const NAMES: [&str; 14] = ["min", "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "max"];

fn named(covers: &[(&str, &str)]) -> Lattice {
    let ix = |s: &str| NAMES.iter().position(|&n| n == s).expect("known node name");
    let pairs = covers.iter().map(|&(x, y)| (ix(x), ix(y)));
    let p = Poset::from_covers(NAMES.len(), pairs)
        .and_then(|p| p.with_labels(NAMES.iter().map(|s| s.to_string()).collect()))
        .expect("fixture is a poset");
    Lattice::new(p).expect("fixture is a lattice")
}

/// A 3-regular lattice on the A₃ associahedron graph that is not locally
/// mutable; one of the two "bad" orientations together with its opposite.
pub fn bad_case_1() -> Lattice {
    named(&[
        ("min", "a"), ("min", "b"), ("min", "c"),
        ("a", "g"), ("a", "j"), ("b", "h"), ("b", "j"),
        ("c", "d"), ("c", "e"), ("d", "f"), ("d", "g"),
        ("e", "h"), ("e", "i"), ("f", "i"), ("f", "k"),
        ("g", "k"), ("h", "l"), ("i", "l"),
        ("j", "max"), ("k", "max"), ("l", "max"),
    ])
}

/// The other bad orientation; it has a single mutation, back to
/// [`bad_case_1`].
pub fn bad_case_2() -> Lattice {
    named(&[
        ("min", "a"), ("min", "b"), ("min", "c"),
        ("a", "f"), ("a", "g"), ("b", "d"), ("b", "j"),
        ("c", "d"), ("c", "e"), ("d", "l"),
        ("e", "g"), ("e", "i"), ("f", "h"), ("f", "j"),
        ("g", "h"), ("h", "k"), ("i", "k"), ("i", "l"),
        ("j", "max"), ("k", "max"), ("l", "max"),
    ])
}

/// The Cambrian lattice of the uniformly oriented path, i.e. the Tamari
/// lattice in type A.
pub fn tamari(spec: &str) -> Result<Cambrian, CambrianError> {
    let o: CoxeterOrientation = spec.parse()?;
    build_cambrian_for(&o)
}

/// Mutation of the A₃ Tamari lattice at the atom of the middle vertex. Its
/// quiver is the oriented 3-cycle.
pub fn affine_tamari() -> Lattice {
    let c = tamari("A3:RR").expect("A3 is in range");
    let a = c.atom_for_vertex(1).expect("A3 has a middle vertex");
    mutate(&c.lattice, a).expect("Tamari is locally mutable").0
}
