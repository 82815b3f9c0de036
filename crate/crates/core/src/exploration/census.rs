use super::catalog::{affine_tamari, bad_case_1, bad_case_2, tamari};
use super::ExplorationError;
use crate::flip::is_locally_mutable;
use crate::order::{canonical_form, CanonicalForm, Lattice, Poset};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

const N: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Classification {
    /// Cambrian lattice of the given A₃ orientation.
    Cambrian(String),
    AffineTamari,
    BadCase1,
    BadCase1Opposite,
    BadCase2,
    BadCase2Opposite,
    Unclassified,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Cambrian(o) => write!(f, "cambrian {o}"),
            Classification::AffineTamari => f.write_str("affine tamari"),
            Classification::BadCase1 => f.write_str("bad case 1"),
            Classification::BadCase1Opposite => f.write_str("bad case 1 opposite"),
            Classification::BadCase2 => f.write_str("bad case 2"),
            Classification::BadCase2Opposite => f.write_str("bad case 2 opposite"),
            Classification::Unclassified => f.write_str("unclassified"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CensusClass {
    pub form: CanonicalForm,
    /// The orientation with the smallest edge mask in this class.
    pub lattice: Lattice,
    /// Number of edge orientations giving this class.
    pub orientations: usize,
    pub classification: Classification,
    pub locally_mutable: bool,
    pub regular_degree: Option<usize>,
}

/// Face counts of the associahedron graph by cycle length.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FaceCounts {
    pub squares: usize,
    pub pentagons: usize,
    pub hexagons: usize,
}

#[derive(Clone, Debug)]
pub struct CensusReport {
    /// Sorted by canonical form.
    pub classes: Vec<CensusClass>,
    pub orientations_examined: usize,
    pub lattice_orientations: usize,
    pub faces: FaceCounts,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    pub canonical: String,
    pub size: usize,
    pub classification: String,
    pub locally_mutable: bool,
    pub regular_degree: Option<usize>,
}

/// The undirected Hasse graph of the A₃ Tamari lattice: 14 vertices, 21
/// edges, as sorted pairs.
pub fn associahedron_graph() -> Result<Vec<(usize, usize)>, ExplorationError> {
    Ok(tamari("A3:RR")?.lattice.undirected_edges())
}

fn adjacency(edges: &[(usize, usize)]) -> [u16; N] {
    let mut adj = [0u16; N];
    for &(u, v) in edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

fn connected_without(adj: &[u16; N], removed: u16) -> bool {
    let keep = ((1u32 << N) - 1) as u16 & !removed;
    if keep == 0 {
        return true;
    }
    let mut seen = 1u16 << keep.trailing_zeros();
    loop {
        let mut grow = seen;
        for v in ones(seen) {
            grow |= adj[v] & keep;
        }
        if grow == seen {
            return seen == keep;
        }
        seen = grow;
    }
}

fn ones(mut m: u16) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(v)
    })
}

/// Induced, non-separating cycles of length 4 to 6. In a 3-connected planar
/// graph these are exactly the faces.
pub fn face_counts(edges: &[(usize, usize)]) -> FaceCounts {
    let adj = adjacency(edges);
    let mut counts = FaceCounts::default();
    let mut path = Vec::with_capacity(6);
    for start in 0..N {
        path.clear();
        path.push(start);
        extend_cycles(&adj, &mut path, &mut counts);
    }
    counts
}

// Cycles are rooted at their smallest vertex and counted in one direction
// (second vertex smaller than last).
fn extend_cycles(adj: &[u16; N], path: &mut Vec<usize>, counts: &mut FaceCounts) {
    let start = path[0];
    let last = *path.last().expect("path starts nonempty");
    if path.len() >= 4 && adj[last] >> start & 1 == 1 && path[1] < last {
        let set: u16 = path.iter().map(|&v| 1u16 << v).fold(0, |a, b| a | b);
        let chords = path.iter().map(|&v| (adj[v] & set).count_ones()).any(|d| d != 2);
        if !chords && connected_without(adj, set) {
            match path.len() {
                4 => counts.squares += 1,
                5 => counts.pentagons += 1,
                _ => counts.hexagons += 1,
            }
        }
    }
    if path.len() == 6 {
        return;
    }
    for w in ones(adj[last]) {
        if w > start && !path.contains(&w) {
            path.push(w);
            extend_cycles(adj, path, counts);
            path.pop();
        }
    }
}

// Orientation `mask`: bit e set sends edge (u, v) downwards, v ≺ u.
fn oriented(edges: &[(usize, usize)], mask: u32) -> impl Iterator<Item = (usize, usize)> + '_ {
    edges.iter().enumerate().map(move |(e, &(u, v))| if mask >> e & 1 == 1 { (v, u) } else { (u, v) })
}

/// Whether the orientation is the Hasse diagram of a lattice, using bitmask
/// up-sets only.
fn is_lattice_orientation(edges: &[(usize, usize)], mask: u32) -> bool {
    let mut succ = [0u16; N];
    let mut pred = [0u16; N];
    for (x, y) in oriented(edges, mask) {
        succ[x] |= 1 << y;
        pred[y] |= 1 << x;
    }
    if pred.iter().filter(|&&p| p == 0).count() != 1 || succ.iter().filter(|&&s| s == 0).count() != 1 {
        return false;
    }
    // topological order by peeling minimal elements
    let mut order = [0usize; N];
    let mut remaining = ((1u32 << N) - 1) as u16;
    for slot in order.iter_mut() {
        let Some(v) = ones(remaining).find(|&v| pred[v] & remaining == 0) else {
            return false;
        };
        *slot = v;
        remaining &= !(1 << v);
    }
    let mut up = [0u16; N];
    for &x in order.iter().rev() {
        up[x] = 1 << x;
        for s in ones(succ[x]) {
            up[x] |= up[s];
        }
    }
    // every edge must be a cover
    for &row in succ.iter().take(N) {
        for y in ones(row) {
            if ones(row & !(1 << y)).any(|s| up[s] >> y & 1 == 1) {
                return false;
            }
        }
    }
    // bounded, so pairwise joins suffice
    for x in 0..N {
        for y in x + 1..N {
            let ub = up[x] & up[y];
            if !ones(ub).any(|z| up[z] == ub) {
                return false;
            }
        }
    }
    true
}

fn references() -> Result<Vec<(CanonicalForm, Classification)>, ExplorationError> {
    let mut refs = Vec::new();
    for o in ["A3:RR", "A3:RL", "A3:LR"] {
        refs.push((canonical_form(&tamari(o)?.lattice), Classification::Cambrian(o.to_string())));
    }
    refs.push((canonical_form(&affine_tamari()), Classification::AffineTamari));
    let (b1, b2) = (bad_case_1(), bad_case_2());
    refs.push((canonical_form(&b1), Classification::BadCase1));
    refs.push((canonical_form(&b1.dual()), Classification::BadCase1Opposite));
    refs.push((canonical_form(&b2), Classification::BadCase2));
    refs.push((canonical_form(&b2.dual()), Classification::BadCase2Opposite));
    Ok(refs)
}

/// Tries every orientation of the 21 edges of the A₃ associahedron graph,
/// keeps those that are Hasse diagrams of lattices and groups them by
/// isomorphism type.
pub fn associahedron_census() -> Result<CensusReport, ExplorationError> {
    let edges = associahedron_graph()?;
    let total = 1u32 << edges.len();
    let masks: Vec<u32> = (0..total).into_par_iter().filter(|&m| is_lattice_orientation(&edges, m)).collect();
    let forms: Vec<(CanonicalForm, u32)> = masks
        .par_iter()
        .map(|&m| {
            let p = Poset::from_covers(N, oriented(&edges, m)).expect("orientation was checked acyclic");
            (canonical_form(&p), m)
        })
        .collect();
    let mut grouped: BTreeMap<CanonicalForm, (u32, usize)> = BTreeMap::new();
    for (f, m) in forms {
        let e = grouped.entry(f).or_insert((m, 0));
        e.0 = e.0.min(m);
        e.1 += 1;
    }
    let refs = references()?;
    let classes = grouped
        .into_iter()
        .map(|(form, (mask, orientations))| {
            let p = Poset::from_covers(N, oriented(&edges, mask)).expect("checked above");
            let lattice = Lattice::new(p)?;
            let classification = refs
                .iter()
                .find(|(f, _)| *f == form)
                .map_or(Classification::Unclassified, |(_, c)| c.clone());
            Ok(CensusClass {
                locally_mutable: is_locally_mutable(&lattice),
                regular_degree: lattice.regular_degree(),
                form,
                lattice,
                orientations,
                classification,
            })
        })
        .collect::<Result<Vec<_>, ExplorationError>>()?;
    Ok(CensusReport {
        classes,
        orientations_examined: total as usize,
        lattice_orientations: masks.len(),
        faces: face_counts(&edges),
    })
}

pub fn census_json(r: &CensusReport) -> String {
    let entries: Vec<CensusEntry> = r
        .classes
        .iter()
        .map(|c| CensusEntry {
            canonical: c.form.to_string(),
            size: c.form.size(),
            classification: c.classification.to_string(),
            locally_mutable: c.locally_mutable,
            regular_degree: c.regular_degree,
        })
        .collect();
    serde_json::to_string_pretty(&entries).expect("plain data serialises")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_shape() {
        let e = associahedron_graph().unwrap();
        assert_eq!(e.len(), 21);
        let f = face_counts(&e);
        assert_eq!(f, FaceCounts { squares: 3, pentagons: 6, hexagons: 0 });
    }

    #[test]
    fn tamari_orientation_passes() {
        let e = associahedron_graph().unwrap();
        assert!(is_lattice_orientation(&e, 0));
        assert!(is_lattice_orientation(&e, (1 << 21) - 1));
        // a single reversed edge leaves two sources or a cycle
        assert!(!is_lattice_orientation(&e, 1));
    }
}
