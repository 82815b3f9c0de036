//! Cambrian lattices of types A and B from triangulations of labelled
//! polygons.

mod polygon;
mod triangulation;

pub use polygon::{Polygon, Side};
pub use triangulation::{
    all_triangulations, cover_orientation, eta, eta_b, flip_neighbours, pattern_kernel_equal,
    pattern_moves, Triangulation,
};

use crate::coxeter::{build_weak_order, CoxeterError, CoxeterType, PermA, PermB};
use crate::order::{is_lattice_homomorphism, Lattice, OrderError, Poset};
use crate::quiver::{quiver_from_lattice, CoxeterOrientation, QuiverError, WeightedQuiver};
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CambrianError {
    #[error("bad polygon: {0}")]
    BadPolygon(String),
    #[error("bad triangulation: {0}")]
    BadTriangulation(String),
    #[error("rank {rank} is out of range for type {ty} (1..={max})")]
    RankCap { ty: CoxeterType, rank: usize, max: usize },
    #[error("vertex {0} is not a quiver vertex")]
    BadVertex(usize),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("consistency check failed: {0}")]
    Invariant(String),
}

pub const MAX_RANK_A: usize = 5;
pub const MAX_RANK_B: usize = 3;

/// A Cambrian lattice with its triangulations and the projection from the
/// weak order.
#[derive(Clone, Debug)]
pub struct Cambrian {
    pub polygon: Polygon,
    pub lattice: Lattice,
    /// Element `x` of the lattice is `triangulations[x]`.
    pub triangulations: Vec<Triangulation>,
    /// Weak-order index (breadth-first from the identity) to lattice element.
    pub projection: Vec<usize>,
}

impl Cambrian {
    pub fn orientation(&self) -> CoxeterOrientation {
        self.polygon.orientation()
    }

    /// The atom `η(s_{v+1})` for quiver vertex `v` (0-based).
    pub fn atom_for_vertex(&self, v: usize) -> Result<usize, CambrianError> {
        if v >= self.polygon.rank() {
            return Err(CambrianError::BadVertex(v));
        }
        // the weak order interns s_i at index i
        Ok(self.projection[v + 1])
    }

    pub fn vertex_for_atom(&self, atom: usize) -> Option<usize> {
        (0..self.polygon.rank()).find(|&v| self.projection[v + 1] == atom)
    }

    pub fn element_of(&self, t: &Triangulation) -> Option<usize> {
        self.triangulations.iter().position(|u| u == t)
    }
}

fn check_rank(ty: CoxeterType, n: usize) -> Result<(), CambrianError> {
    let max = match ty {
        CoxeterType::A => MAX_RANK_A,
        CoxeterType::B => MAX_RANK_B,
    };
    if n == 0 || n > max {
        return Err(CambrianError::RankCap { ty, rank: n, max });
    }
    Ok(())
}

/// Projects the weak order through η (η_B), orders the fibres by their first
/// weak-order element, and checks that the quotient is a lattice and the
/// projection a lattice homomorphism.
pub fn build_cambrian(polygon: &Polygon) -> Result<Cambrian, CambrianError> {
    check_rank(polygon.ty(), polygon.rank())?;
    let (weak, images): (Lattice, Vec<Triangulation>) = match polygon.ty() {
        CoxeterType::A => {
            let w = build_weak_order::<PermA>(polygon.rank())?;
            let t = w.elements().iter().map(|s| eta(polygon, s)).collect();
            (w.lattice().clone(), t)
        }
        CoxeterType::B => {
            let w = build_weak_order::<PermB>(polygon.rank())?;
            let t = w.elements().iter().map(|s| eta_b(polygon, s)).collect();
            (w.lattice().clone(), t)
        }
    };
    let mut index: HashMap<Triangulation, usize> = HashMap::new();
    let mut triangulations = Vec::new();
    let projection: Vec<usize> = images
        .into_iter()
        .map(|t| {
            *index.entry(t.clone()).or_insert_with(|| {
                triangulations.push(t);
                triangulations.len() - 1
            })
        })
        .collect();
    let covers: Vec<(usize, usize)> = weak
        .covers()
        .iter()
        .map(|&(x, y)| (projection[x], projection[y]))
        .filter(|(x, y)| x != y)
        .collect();
    let labels = triangulations.iter().map(ToString::to_string).collect();
    let poset = Poset::from_covers(triangulations.len(), covers)?.with_labels(labels)?;
    let lattice = Lattice::new(poset)?;
    if !is_lattice_homomorphism(&weak, &lattice, &projection) {
        return Err(CambrianError::Invariant("η is not a lattice homomorphism".into()));
    }
    Ok(Cambrian { polygon: polygon.clone(), lattice, triangulations, projection })
}

pub fn build_cambrian_for(o: &CoxeterOrientation) -> Result<Cambrian, CambrianError> {
    build_cambrian(&Polygon::from_orientation(o))
}

/// The Cambrian lattice straight from triangulations: one element per
/// (point-symmetric) triangulation, one cover per single flip, oriented by the
/// quadrilateral rule. Elements are in the order `all_triangulations` returns.
pub fn direct_cambrian(polygon: &Polygon) -> Result<Lattice, CambrianError> {
    check_rank(polygon.ty(), polygon.rank())?;
    let all = all_triangulations(polygon)?;
    let index: HashMap<&Triangulation, usize> = all.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut covers = Vec::new();
    for (i, t) in all.iter().enumerate() {
        for (u, lower_is_t) in flip_neighbours(polygon, t)? {
            let j = index[&u];
            if lower_is_t {
                covers.push((i, j));
            } else {
                covers.push((j, i));
            }
        }
    }
    let labels = all.iter().map(ToString::to_string).collect();
    let poset = Poset::from_covers(all.len(), covers)?.with_labels(labels)?;
    Ok(Lattice::new(poset)?)
}

/// The quiver read off the atoms, numbered by quiver vertex.
pub fn cambrian_quiver(c: &Cambrian) -> Result<WeightedQuiver, CambrianError> {
    let (q, atoms) = quiver_from_lattice(&c.lattice, c.polygon.ty())?;
    let perm: Vec<usize> = atoms
        .iter()
        .map(|&a| c.vertex_for_atom(a).ok_or(CambrianError::Invariant(format!("{a} is no vertex's atom"))))
        .collect::<Result<_, _>>()?;
    let q = q.permuted(&perm);
    if c.polygon.ty() == CoxeterType::B && c.polygon.rank() == 2 {
        // either weighting fits B2; keep weight 1 on vertex 0
        return Ok(WeightedQuiver::new(vec![1, 2], q.edges())?);
    }
    Ok(q)
}
