//! Mutation graphs up to isomorphism, checks of their conjectured structure,
//! the finite-Coxeter-quotient obstruction and the census of lattice
//! orientations of the A₃ associahedron.

pub mod catalog;
mod census;

pub use census::{
    associahedron_census, associahedron_graph, census_json, face_counts, CensusClass, CensusEntry,
    CensusReport, Classification, FaceCounts,
};

use crate::cambrian::CambrianError;
use crate::coxeter::CoxeterType;
use crate::flip::{flip_on_atom, is_locally_mutable, u_map, FlipError};
use crate::order::{canonical_form, CanonicalForm, Lattice, OrderError};
use crate::quiver::{quiver_after_mutation, quiver_from_lattice, QuiverError};
use rayon::prelude::*;
use std::collections::HashMap;
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExplorationError {
    #[error("mutation graph exceeded {0} classes")]
    Cap(usize),
    #[error("needs at least 3 atoms, found {0}")]
    TooFewAtoms(usize),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Flip(#[from] FlipError),
    #[error(transparent)]
    Cambrian(#[from] CambrianError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}

/// Mutation at `atom` of the representative of `from` lands in class `to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MutationEdge {
    pub from: usize,
    pub to: usize,
    pub atom: usize,
}

/// Isomorphism classes reached from a seed by atom mutations. Class 0 is the
/// seed; classes are numbered in breadth-first order.
#[derive(Clone, Debug)]
pub struct MutationGraph {
    pub representatives: Vec<Lattice>,
    pub forms: Vec<CanonicalForm>,
    /// One edge per (class, atom) whose flip is a lattice, sorted.
    pub edges: Vec<MutationEdge>,
    /// (class, atom) pairs whose atom flip is not a lattice.
    pub non_lattice_flips: Vec<(usize, usize)>,
    /// Classes that are not locally mutable.
    pub not_locally_mutable: Vec<usize>,
}

impl MutationGraph {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn class_of(&self, l: &Lattice) -> Option<usize> {
        let f = canonical_form(l);
        self.forms.iter().position(|g| *g == f)
    }

    /// Whether every edge `X → Y` has some edge `Y → X`.
    pub fn is_reversible(&self) -> bool {
        self.edges.iter().all(|e| self.edges.iter().any(|f| f.from == e.to && f.to == e.from))
    }

    /// Edge multiplicities keyed by (from, to).
    pub fn multiplicities(&self) -> HashMap<(usize, usize), usize> {
        let mut m = HashMap::new();
        for e in &self.edges {
            *m.entry((e.from, e.to)).or_insert(0) += 1;
        }
        m
    }
}

/// The flips at each atom of `l`, with the flipped lattice when there is one.
pub fn atom_mutations(l: &Lattice) -> Result<Vec<(usize, Option<Lattice>)>, ExplorationError> {
    l.atoms()
        .into_iter()
        .map(|a| {
            let (p, _) = flip_on_atom(l.poset(), a)?;
            Ok((a, Lattice::new(p).ok()))
        })
        .collect()
}

/// Breadth-first search over isomorphism classes, mutating every
/// representative at every atom. `cap` bounds the number of classes.
pub fn mutation_graph(seed: &Lattice, cap: usize) -> Result<MutationGraph, ExplorationError> {
    let mut g = MutationGraph {
        representatives: vec![seed.clone()],
        forms: vec![canonical_form(seed)],
        edges: Vec::new(),
        non_lattice_flips: Vec::new(),
        not_locally_mutable: Vec::new(),
    };
    let mut index: HashMap<CanonicalForm, usize> = HashMap::from([(g.forms[0].clone(), 0)]);
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        type Found = (bool, Vec<(usize, Option<(Lattice, CanonicalForm)>)>);
        let layer: Vec<Result<Found, ExplorationError>> = frontier
            .par_iter()
            .map(|&c| {
                let rep = &g.representatives[c];
                let flips = atom_mutations(rep)?
                    .into_iter()
                    .map(|(a, m)| {
                        let m = m.map(|m| {
                            let f = canonical_form(&m);
                            (m, f)
                        });
                        (a, m)
                    })
                    .collect();
                Ok((is_locally_mutable(rep), flips))
            })
            .collect();
        let mut next = Vec::new();
        for (&c, found) in frontier.iter().zip(layer) {
            let (locally, flips) = found?;
            if !locally {
                g.not_locally_mutable.push(c);
            }
            for (atom, m) in flips {
                let Some((m, f)) = m else {
                    g.non_lattice_flips.push((c, atom));
                    continue;
                };
                let to = match index.get(&f) {
                    Some(&t) => t,
                    None => {
                        if g.representatives.len() >= cap {
                            return Err(ExplorationError::Cap(cap));
                        }
                        let t = g.representatives.len();
                        index.insert(f.clone(), t);
                        g.representatives.push(m);
                        g.forms.push(f);
                        next.push(t);
                        t
                    }
                };
                g.edges.push(MutationEdge { from: c, to, atom });
            }
        }
        frontier = next;
    }
    g.edges.sort();
    g.not_locally_mutable.sort();
    Ok(g)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub class: usize,
    pub size: usize,
    pub locally_mutable: bool,
    pub polygonal: bool,
    pub regular_degree: Option<usize>,
    pub u_bijective: bool,
    pub semidistributive: bool,
    /// `None` when no Coxeter type was given.
    pub quiver_commutes: Option<bool>,
}

impl ClassReport {
    pub fn passes(&self) -> bool {
        self.locally_mutable
            && self.polygonal
            && self.regular_degree.is_some()
            && self.u_bijective
            && self.semidistributive
            && self.quiver_commutes != Some(false)
    }
}

#[derive(Clone, Debug)]
pub struct OrdovicianReport {
    pub classes: Vec<ClassReport>,
    pub non_lattice_flips: usize,
    pub reversible: bool,
}

impl OrdovicianReport {
    pub fn all_pass(&self) -> bool {
        self.non_lattice_flips == 0 && self.reversible && self.classes.iter().all(ClassReport::passes)
    }
}

/// Whether the quiver of every atom mutation of `l` is the quiver of `l`
/// mutated at that vertex.
pub fn quiver_commutes(l: &Lattice, ty: CoxeterType) -> bool {
    let Ok((q, atoms)) = quiver_from_lattice(l, ty) else {
        return false;
    };
    atoms.iter().enumerate().all(|(v, &a)| {
        let Ok((p, _)) = flip_on_atom(l.poset(), a) else {
            return false;
        };
        let Ok(m) = Lattice::new(p) else {
            return false;
        };
        match (quiver_after_mutation(l, a, &m, ty), q.mutate(v)) {
            (Ok(x), Ok(y)) => x == y,
            _ => false,
        }
    })
}

/// Per class: local mutability, polygonality, regularity of the Hasse graph,
/// bijectivity of `u`, semidistributivity and, given a type, agreement of
/// lattice and quiver mutation.
pub fn verify_ordovician_conjectures(g: &MutationGraph, ty: Option<CoxeterType>) -> OrdovicianReport {
    let classes = g
        .representatives
        .par_iter()
        .enumerate()
        .map(|(class, l)| ClassReport {
            class,
            size: l.len(),
            locally_mutable: is_locally_mutable(l),
            polygonal: l.is_polygonal(),
            regular_degree: l.regular_degree(),
            u_bijective: u_map(l.poset()).is_ok(),
            semidistributive: l.is_semidistributive(),
            quiver_commutes: ty.map(|t| quiver_commutes(l, t)),
        })
        .collect();
    OrdovicianReport { classes, non_lattice_flips: g.non_lattice_flips.len(), reversible: g.is_reversible() }
}

/// Three atoms of `l` with their pairwise t-values `t(a,b) = |[0, a∨b]|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomTriple {
    pub atoms: [usize; 3],
    pub t: [usize; 3],
}

/// Pairwise t-values of the atoms, `t[i][j]` for atoms in index order.
pub fn atom_t_values(l: &Lattice) -> (Vec<usize>, Vec<Vec<usize>>) {
    let atoms = l.atoms();
    let t = atoms.iter().map(|&a| atoms.iter().map(|&b| if a == b { 0 } else { l.t_value(a, b) }).collect()).collect();
    (atoms, t)
}

/// Looks for three atoms no two of which span a square.
///
/// In a lattice quotient of a finite Coxeter group's weak order, atoms are
/// images of simple reflections and `[0, a∨b]` is the image of the
/// `2m`-gon of the two reflections, a square when they commute. Coxeter
/// graphs of finite groups are forests, so among any three atoms two commute
/// and give `t = 4`. A triple without a 4 therefore rules the lattice out as
/// such a quotient. Returns the first such triple, or `None` if every triple
/// has a square.
pub fn not_coxeter_quotient(l: &Lattice) -> Result<Option<AtomTriple>, ExplorationError> {
    let (atoms, t) = atom_t_values(l);
    let k = atoms.len();
    if k < 3 {
        return Err(ExplorationError::TooFewAtoms(k));
    }
    for i in 0..k {
        for j in i + 1..k {
            for h in j + 1..k {
                let tt = [t[i][j], t[j][h], t[i][h]];
                if !tt.contains(&4) {
                    return Ok(Some(AtomTriple { atoms: [atoms[i], atoms[j], atoms[h]], t: tt }));
                }
            }
        }
    }
    Ok(None)
}

/// DOT rendering of a mutation graph. With a type, each vertex shows the
/// quiver of its class (1-based vertices, `*` for weight 2).
pub fn mutation_graph_to_dot(g: &MutationGraph, ty: Option<CoxeterType>) -> String {
    let mut s = String::from("digraph mutation_graph {\n  node [shape=box];\n");
    for (c, l) in g.representatives.iter().enumerate() {
        let mut label = format!("class {c}\\n|L| = {}", l.len());
        if let Some(Ok((q, _))) = ty.map(|t| quiver_from_lattice(l, t)) {
            let name = |v: usize| {
                let star = if q.weights()[v] > 1 { "*" } else { "" };
                format!("{}{star}", v + 1)
            };
            let arrows: Vec<String> = q.edges().map(|(x, y, _)| format!("{}->{}", name(x), name(y))).collect();
            let body = if arrows.is_empty() { "no arrows".to_string() } else { arrows.join(" ") };
            let _ = write!(label, "\\n{body}");
        }
        let _ = writeln!(s, "  c{c} [label=\"{label}\"];");
    }
    for e in &g.edges {
        let _ = writeln!(s, "  c{} -> c{} [label=\"{}\"];", e.from, e.to, g.representatives[e.from].label(e.atom));
    }
    s.push_str("}\n");
    s
}
