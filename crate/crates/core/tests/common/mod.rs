//! Hand-transcribed Hasse diagrams used as oracles. Each cover is written
//! (lower, upper).
#![allow(dead_code)]

use latmut::{Lattice, Poset};

pub fn named(names: &[&str], covers: &[(&str, &str)]) -> Lattice {
    let ix = |s: &str| names.iter().position(|&n| n == s).unwrap_or_else(|| panic!("unknown node {s}"));
    let p = Poset::from_covers(names.len(), covers.iter().map(|&(x, y)| (ix(x), ix(y))))
        .unwrap()
        .with_labels(names.iter().map(|s| s.to_string()).collect())
        .unwrap();
    Lattice::new(p).unwrap()
}

const A14: [&str; 14] = ["A0", "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "Aa", "Ab", "Ac", "Ad"];
const B20: [&str; 20] = [
    "min", "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m", "n", "o", "p", "q", "r", "max",
];

pub fn a3_tamari_drawn() -> Lattice {
    named(&A14, &[
        ("A1", "A0"), ("A2", "A0"), ("A3", "A0"), ("A4", "A1"), ("Aa", "A1"), ("A6", "A2"), ("A8", "A2"),
        ("A4", "A3"), ("A5", "A3"), ("Ab", "A4"), ("A6", "A5"), ("A7", "A5"), ("A9", "A6"), ("A9", "A7"),
        ("Ab", "A7"), ("Aa", "A8"), ("Ac", "A8"), ("Ac", "A9"), ("Ad", "Aa"), ("Ad", "Ab"), ("Ad", "Ac"),
    ])
}

/// An A₃ Cambrian lattice that is not the Tamari lattice.
pub fn a3_cambrian_drawn() -> Lattice {
    named(&A14, &[
        ("A1", "A0"), ("A2", "A0"), ("A3", "A0"), ("A7", "A1"), ("Ab", "A1"), ("A4", "A2"), ("A5", "A2"),
        ("A8", "A3"), ("Ab", "A3"), ("A6", "A4"), ("A7", "A4"), ("A6", "A5"), ("A8", "A5"), ("A9", "A6"),
        ("Aa", "A7"), ("Ac", "A8"), ("Aa", "A9"), ("Ac", "A9"), ("Ad", "Aa"), ("Ad", "Ab"), ("Ad", "Ac"),
    ])
}

/// The mutation of the A₃ Tamari lattice at its middle atom.
pub fn affine_tamari_drawn() -> Lattice {
    named(&A14, &[
        ("A1", "A0"), ("A2", "A0"), ("A3", "A0"), ("A4", "A1"), ("A8", "A1"), ("A5", "A2"), ("A9", "A2"),
        ("A6", "A3"), ("A7", "A3"), ("A9", "A4"), ("Ab", "A4"), ("A7", "A5"), ("Ac", "A5"), ("A8", "A6"),
        ("Aa", "A6"), ("Aa", "A7"), ("Ab", "A8"), ("Ac", "A9"), ("Ad", "Aa"), ("Ad", "Ab"), ("Ad", "Ac"),
    ])
}

pub fn b3_tamari_drawn() -> Lattice {
    named(&B20, &[
        ("min", "a"), ("min", "b"), ("min", "c"), ("a", "f"), ("a", "p"), ("b", "e"), ("b", "h"),
        ("c", "d"), ("c", "f"), ("d", "g"), ("d", "h"), ("e", "l"), ("e", "m"), ("f", "q"), ("g", "j"),
        ("g", "i"), ("h", "i"), ("i", "k"), ("j", "n"), ("j", "q"), ("k", "m"), ("k", "n"), ("l", "p"),
        ("l", "r"), ("m", "o"), ("n", "o"), ("o", "r"), ("p", "max"), ("q", "max"), ("r", "max"),
    ])
}

/// A B₃ Cambrian lattice that is not a type-B Tamari lattice.
pub fn b3_cambrian_drawn() -> Lattice {
    named(&B20, &[
        ("min", "a"), ("min", "b"), ("min", "c"), ("a", "j"), ("a", "q"), ("b", "d"), ("b", "e"),
        ("c", "g"), ("c", "q"), ("d", "f"), ("d", "h"), ("e", "f"), ("e", "g"), ("f", "i"), ("g", "n"),
        ("h", "j"), ("h", "k"), ("i", "k"), ("i", "l"), ("j", "p"), ("k", "m"), ("l", "m"), ("l", "n"),
        ("m", "o"), ("n", "r"), ("o", "p"), ("o", "r"), ("p", "max"), ("q", "max"), ("r", "max"),
    ])
}

/// A type-B mutation class member that is not Cambrian.
pub fn b3_ordovician_drawn() -> Lattice {
    named(&B20, &[
        ("min", "a"), ("min", "b"), ("min", "c"), ("a", "g"), ("a", "j"), ("b", "e"), ("b", "l"),
        ("c", "d"), ("c", "k"), ("d", "f"), ("d", "m"), ("e", "h"), ("e", "o"), ("f", "i"), ("f", "l"),
        ("g", "k"), ("g", "p"), ("h", "j"), ("h", "r"), ("i", "n"), ("i", "q"), ("j", "p"), ("k", "m"),
        ("l", "n"), ("m", "q"), ("n", "o"), ("o", "r"), ("p", "max"), ("q", "max"), ("r", "max"),
    ])
}

/// Semidistributive and locally mutable, but its mutations are not.
pub fn semidistributive_locally_mutable() -> Lattice {
    named(&["min", "C", "D", "B1", "B2", "A", "max"], &[
        ("min", "C"), ("min", "D"), ("C", "B1"), ("C", "B2"), ("B1", "A"), ("B2", "A"), ("A", "max"),
        ("D", "max"),
    ])
}

pub fn neither_semidistributive_nor_locally_mutable() -> Lattice {
    named(&["min", "C", "D", "B", "A1", "A2", "max"], &[
        ("min", "C"), ("min", "D"), ("C", "B"), ("B", "A1"), ("B", "A2"), ("A1", "max"), ("A2", "max"),
        ("D", "max"),
    ])
}

const MUT14: [&str; 14] = ["A0", "A1", "A2", "A3", "A4", "A5", "A6", "B0", "B1", "B2", "B3", "B4", "B5", "B6"];
const MUT_INNER: [(&str, &str); 16] = [
    ("A0", "A1"), ("A0", "A2"), ("A1", "A3"), ("A1", "A5"), ("A2", "A4"), ("A4", "A5"), ("A3", "A6"),
    ("A5", "A6"), ("B0", "B1"), ("B0", "B3"), ("B1", "B2"), ("B1", "B5"), ("B2", "B4"), ("B3", "B5"),
    ("B4", "B6"), ("B5", "B6"),
];
const MUT_CROSS: [(&str, &str); 5] = [("A0", "B0"), ("A2", "B2"), ("A3", "B3"), ("A4", "B4"), ("A6", "B6")];

/// The two sides of the worked mutation example: `B` below `A`, and after
/// the mutation `A` below `B`.
pub fn mutation_example() -> (Lattice, Lattice) {
    let mut before: Vec<(&str, &str)> = MUT_INNER.to_vec();
    before.extend(MUT_CROSS.iter().map(|&(a, b)| (b, a)));
    let mut after: Vec<(&str, &str)> = MUT_INNER.to_vec();
    after.extend(MUT_CROSS.iter().copied());
    (named(&MUT14, &before), named(&MUT14, &after))
}

/// Indices of the `B*` elements of [`mutation_example`].
pub fn mutation_example_b_side() -> Vec<usize> {
    (7..14).collect()
}
