//! Vertex-weighted quivers, their mutation, Coxeter orientations of paths, and
//! the quiver read off the atoms of a lattice.

mod orientation;

pub use orientation::{all_orientations, orientation_to_quiver, sink_source_reflection_path, CoxeterOrientation, Dir};

use crate::coxeter::CoxeterType;
use crate::order::{io_quote, Lattice};
use itertools::Itertools;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuiverError {
    #[error("vertex {0} is out of range")]
    BadVertex(usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("2-cycle between {0} and {1}")]
    TwoCycle(usize, usize),
    #[error("vertex weights must be positive")]
    BadWeight,
    #[error("edge multiplier is not an integer")]
    NonIntegerMultiplier,
    #[error("[0, {a}∨{b}] is not a (2,m)-polygon")]
    NotPolygonal { a: usize, b: usize },
    #[error("no weight assignment fits the atom polygons")]
    WeightsUnsatisfiable,
    #[error("bad orientation: {0}")]
    BadOrientation(String),
    #[error("malformed quiver JSON: {0}")]
    Json(String),
    #[error("canonical forms are limited to 8 vertices")]
    TooLarge,
    #[error("atom correspondence after mutation is not unique at {0}")]
    AtomCorrespondence(usize),
}

/// Vertices `0..n` with weights; edges as `(from, to) → multiplicity`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightedQuiver {
    weights: Vec<u32>,
    edges: BTreeMap<(usize, usize), u32>,
}

/// `{"weights": [..], "edges": [[from, to, mult], ..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverFile {
    pub weights: Vec<u32>,
    pub edges: Vec<[usize; 3]>,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl WeightedQuiver {
    pub fn new<I>(weights: Vec<u32>, edges: I) -> Result<WeightedQuiver, QuiverError>
    where
        I: IntoIterator<Item = (usize, usize, u32)>,
    {
        if weights.contains(&0) {
            return Err(QuiverError::BadWeight);
        }
        let n = weights.len();
        let mut map = BTreeMap::new();
        for (x, y, m) in edges {
            for v in [x, y] {
                if v >= n {
                    return Err(QuiverError::BadVertex(v));
                }
            }
            if x == y {
                return Err(QuiverError::Loop(x));
            }
            if m > 0 {
                *map.entry((x, y)).or_insert(0) += m;
            }
        }
        for &(x, y) in map.keys() {
            if map.contains_key(&(y, x)) {
                return Err(QuiverError::TwoCycle(x.min(y), x.max(y)));
            }
        }
        Ok(WeightedQuiver { weights, edges: map })
    }

    /// All weights 1.
    pub fn unweighted<I>(n: usize, edges: I) -> Result<WeightedQuiver, QuiverError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        WeightedQuiver::new(vec![1; n], edges.into_iter().map(|(x, y)| (x, y, 1)))
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.edges.iter().map(|(&(x, y), &m)| (x, y, m))
    }

    pub fn multiplicity(&self, x: usize, y: usize) -> u32 {
        self.edges.get(&(x, y)).copied().unwrap_or(0)
    }

    /// Mutation at `k`: composite edges through `k`, reversal at `k`, then
    /// cancellation of opposite pairs.
    pub fn mutate(&self, k: usize) -> Result<WeightedQuiver, QuiverError> {
        if k >= self.len() {
            return Err(QuiverError::BadVertex(k));
        }
        let w = |v: usize| self.weights[v] as u64;
        let ins: Vec<(usize, u32)> = self.edges().filter(|e| e.1 == k).map(|e| (e.0, e.2)).collect();
        let outs: Vec<(usize, u32)> = self.edges().filter(|e| e.0 == k).map(|e| (e.1, e.2)).collect();
        let mut raw: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for (x, y, m) in self.edges() {
            let key = if x == k || y == k { (y, x) } else { (x, y) };
            *raw.entry(key).or_insert(0) += m as u64;
        }
        for &(j, p) in &ins {
            for &(l, q) in &outs {
                if j == l {
                    continue;
                }
                let num = p as u64 * q as u64 * gcd(w(j), w(l)) * w(k);
                let den = gcd(w(j), w(k)) * gcd(w(k), w(l));
                if !num.is_multiple_of(den) {
                    return Err(QuiverError::NonIntegerMultiplier);
                }
                *raw.entry((j, l)).or_insert(0) += num / den;
            }
        }
        let mut edges = BTreeMap::new();
        for (&(x, y), &m) in &raw {
            let back = raw.get(&(y, x)).copied().unwrap_or(0);
            if m > back {
                edges.insert((x, y), (m - back) as u32);
            }
        }
        Ok(WeightedQuiver { weights: self.weights.clone(), edges })
    }

    /// Vertices without outgoing edges, and without incoming edges.
    pub fn sinks_sources(&self) -> (Vec<usize>, Vec<usize>) {
        let mut has_out = vec![false; self.len()];
        let mut has_in = vec![false; self.len()];
        for (x, y, _) in self.edges() {
            has_out[x] = true;
            has_in[y] = true;
        }
        (
            (0..self.len()).filter(|&v| !has_out[v]).collect(),
            (0..self.len()).filter(|&v| !has_in[v]).collect(),
        )
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> WeightedQuiver {
        let mut weights = vec![0; self.len()];
        for (v, &p) in perm.iter().enumerate() {
            weights[p] = self.weights[v];
        }
        let edges = self.edges().map(|(x, y, m)| ((perm[x], perm[y]), m)).collect();
        WeightedQuiver { weights, edges }
    }

    /// Smallest encoding over all vertex relabellings.
    pub fn canonical_key(&self) -> Result<Vec<u32>, QuiverError> {
        let n = self.len();
        if n > 8 {
            return Err(QuiverError::TooLarge);
        }
        let encode = |perm: &[usize]| -> Vec<u32> {
            let q = self.permuted(perm);
            let mut code = vec![n as u32];
            code.extend_from_slice(&q.weights);
            for (x, y, m) in q.edges() {
                code.extend([x as u32, y as u32, m]);
            }
            code
        };
        Ok((0..n).permutations(n).map(|p| encode(&p)).min().unwrap_or_else(|| vec![0]))
    }

    pub fn is_isomorphic(&self, other: &WeightedQuiver) -> bool {
        self.len() == other.len()
            && self.edges.len() == other.edges.len()
            && matches!((self.canonical_key(), other.canonical_key()), (Ok(a), Ok(b)) if a == b)
    }

    pub fn to_file(&self) -> QuiverFile {
        QuiverFile {
            weights: self.weights.clone(),
            edges: self.edges().map(|(x, y, m)| [x, y, m as usize]).collect(),
        }
    }

    pub fn from_file(f: &QuiverFile) -> Result<WeightedQuiver, QuiverError> {
        WeightedQuiver::new(f.weights.clone(), f.edges.iter().map(|e| (e[0], e[1], e[2] as u32)))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("quiver serialises")
    }

    pub fn from_json(s: &str) -> Result<WeightedQuiver, QuiverError> {
        let f: QuiverFile = serde_json::from_str(s).map_err(|e| QuiverError::Json(e.to_string()))?;
        WeightedQuiver::from_file(&f)
    }

    /// Graphviz source; weight-2 vertices are drawn as double circles and
    /// vertices are shown 1-based.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph {} {{", io_quote(name));
        for (v, &w) in self.weights.iter().enumerate() {
            let shape = if w >= 2 { "doublecircle" } else { "circle" };
            let _ = writeln!(out, "  {v} [label=\"{}\", shape={shape}];", v + 1);
        }
        for (x, y, m) in self.edges() {
            if m == 1 {
                let _ = writeln!(out, "  {x} -> {y};");
            } else {
                let _ = writeln!(out, "  {x} -> {y} [label=\"{m}\"];");
            }
        }
        out.push_str("}\n");
        out
    }
}

/// The quiver on the atoms of `l` (vertex `i` is `atoms[i]`, atoms in index
/// order). Each pair of atoms spans a `(2,m)`-polygon `[0, a∨b]`; for `m ≥ 3`
/// the edge runs from the atom on the long side to the other.
pub fn quiver_from_lattice(
    l: &Lattice,
    ty: CoxeterType,
) -> Result<(WeightedQuiver, Vec<usize>), QuiverError> {
    let (edges, weights, atoms) = read_atoms(l, ty)?;
    let w = weights.into_iter().next().ok_or(QuiverError::WeightsUnsatisfiable)?;
    Ok((WeightedQuiver::new(w, edges)?, atoms))
}

type AtomReading = (Vec<(usize, usize, u32)>, Vec<Vec<u32>>, Vec<usize>);

// Edges plus every weighting the atom polygons allow, preferred one first.
fn read_atoms(l: &Lattice, ty: CoxeterType) -> Result<AtomReading, QuiverError> {
    let atoms = l.atoms();
    let k = atoms.len();
    let mut edges = Vec::new();
    let mut spans: HashMap<(usize, usize), usize> = HashMap::new();
    for i in 0..k {
        for j in i + 1..k {
            let (a, b) = (atoms[i], atoms[j]);
            let top = l.join(a, b);
            let iv = l.interval(l.bottom(), top).expect("bottom is below everything");
            let sub = Lattice::new(iv.poset).expect("interval of a lattice");
            let Some((2, m)) = sub.is_polygon() else {
                return Err(QuiverError::NotPolygonal { a, b });
            };
            spans.insert((i, j), m);
            if m >= 3 {
                if l.is_cover(a, top) {
                    edges.push((j, i, 1));
                } else {
                    edges.push((i, j, 1));
                }
            }
        }
    }
    let weights = match ty {
        CoxeterType::A => {
            if spans.values().any(|&m| m > 3) {
                return Err(QuiverError::WeightsUnsatisfiable);
            }
            vec![vec![1; k]]
        }
        CoxeterType::B => solve_b_weights(k, &spans)?,
    };
    Ok((edges, weights, atoms))
}

// Exactly one vertex of weight 1; equal weights across a (2,3)-polygon and
// different weights across a (2,4)-polygon. Assignments come in order of
// their weight-1 vertex.
fn solve_b_weights(k: usize, spans: &HashMap<(usize, usize), usize>) -> Result<Vec<Vec<u32>>, QuiverError> {
    if spans.values().any(|&m| m > 4) {
        return Err(QuiverError::WeightsUnsatisfiable);
    }
    let found: Vec<Vec<u32>> = (0..k)
        .map(|one| (0..k).map(|v| if v == one { 1 } else { 2 }).collect::<Vec<u32>>())
        .filter(|w| {
            spans.iter().all(|(&(i, j), &m)| match m {
                3 => w[i] == w[j],
                4 => w[i] != w[j],
                _ => true,
            })
        })
        .collect();
    if found.is_empty() {
        return Err(QuiverError::WeightsUnsatisfiable);
    }
    Ok(found)
}

/// Where each atom of `l` goes after mutating at atom `a`: `a` itself goes to
/// the old bottom, and another atom `b` to the unique atom of `mutated`, other
/// than the old bottom, lying below `a∨b` in `l`. Vertices follow the order
/// of `l.atoms()`; the result lists elements of `mutated`.
pub fn mutated_atom_map(l: &Lattice, a: usize, mutated: &Lattice) -> Result<Vec<usize>, QuiverError> {
    let new_atoms: BTreeSet<usize> = mutated.atoms().into_iter().collect();
    l.atoms()
        .into_iter()
        .map(|b| {
            if b == a {
                return Ok(l.bottom());
            }
            let top = l.join(a, b);
            let mut hits = new_atoms.iter().filter(|&&x| x != l.bottom() && l.leq(x, top));
            match (hits.next(), hits.next()) {
                (Some(&x), None) => Ok(x),
                _ => Err(QuiverError::AtomCorrespondence(b)),
            }
        })
        .collect()
}

/// The quiver of `mutated` relabelled into the vertex order of `l`'s atoms.
/// Mutation keeps weights, so when the atom polygons of `mutated` allow
/// several weightings (as in B₂), the one agreeing with `l` is taken.
pub fn quiver_after_mutation(
    l: &Lattice,
    a: usize,
    mutated: &Lattice,
    ty: CoxeterType,
) -> Result<WeightedQuiver, QuiverError> {
    let map = mutated_atom_map(l, a, mutated)?;
    let (edges, options, new_atoms) = read_atoms(mutated, ty)?;
    // new vertex v is atom new_atoms[v]; send it to the old vertex mapping onto it
    let mut perm = vec![usize::MAX; new_atoms.len()];
    for (old, &x) in map.iter().enumerate() {
        let v = new_atoms.iter().position(|&y| y == x).ok_or(QuiverError::AtomCorrespondence(x))?;
        perm[v] = old;
    }
    if perm.contains(&usize::MAX) {
        return Err(QuiverError::AtomCorrespondence(a));
    }
    let (before, _) = quiver_from_lattice(l, ty)?;
    let relabel = |w: &Vec<u32>| {
        let mut out = vec![0; w.len()];
        for (v, &x) in w.iter().enumerate() {
            out[perm[v]] = x;
        }
        out
    };
    let weights = options
        .iter()
        .map(relabel)
        .find(|w| w == before.weights())
        .unwrap_or_else(|| relabel(&options[0]));
    let edges = edges.into_iter().map(|(x, y, m)| (perm[x], perm[y], m));
    WeightedQuiver::new(weights, edges)
}
