//! Finite posets and lattices.
//!
//! A [`Poset`] is stored as its Hasse diagram together with one bitset row per
//! element for the up-set and the down-set, so `leq` is a single bit lookup.
//! A [`Lattice`] additionally carries full join and meet tables.

mod canon;
mod distance;
mod generate;
mod io;

pub use canon::{canonical_form, canonical_labeling, are_isomorphic, find_isomorphism, CanonicalForm};
pub use distance::{big_d, distance_table, DistanceTable};
pub use generate::{all_lattices, down_sets, random_connected_poset, random_lattice};
pub use io::{poset_from_json, poset_to_dot, poset_to_json, ParseError, PosetFile};
pub(crate) use io::quote as io_quote;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Deref;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrderError {
    #[error("element {index} out of range for a poset of size {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("self-loop at element {0}")]
    SelfLoop(usize),
    #[error("cover relation contains a cycle through element {0}")]
    Cycle(usize),
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("not a lattice: elements {x} and {y} have {reason}")]
    NotALattice { x: usize, y: usize, reason: BoundFailure },
    #[error("poset is not connected")]
    Disconnected,
    #[error("{a} is not below {b}")]
    NotComparable { a: usize, b: usize },
    #[error("poset is empty")]
    Empty,
}

/// Why a pair of elements fails to have a join or a meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundFailure {
    NoUpperBound,
    SeveralMinimalUpperBounds,
    NoLowerBound,
    SeveralMaximalLowerBounds,
}

impl fmt::Display for BoundFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BoundFailure::NoUpperBound => "no common upper bound",
            BoundFailure::SeveralMinimalUpperBounds => "several minimal upper bounds",
            BoundFailure::NoLowerBound => "no common lower bound",
            BoundFailure::SeveralMaximalLowerBounds => "several maximal lower bounds",
        };
        f.write_str(s)
    }
}

/// A finite poset given by its cover relations.
///
/// Element identity is the index `0..n`. Optional labels ride along through
/// flips and are ignored by isomorphism tests.
#[derive(Clone, Debug)]
pub struct Poset {
    n: usize,
    covers: Vec<(usize, usize)>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.covers == other.covers && self.labels == other.labels
    }
}

impl Eq for Poset {}

impl Hash for Poset {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.covers.hash(state);
        self.labels.hash(state);
    }
}

impl Poset {
    /// Builds a poset from pairs `(x, y)` meaning `x < y`.
    ///
    /// Redundant pairs are dropped, so a full order relation is accepted too.
    pub fn from_covers<I>(n: usize, pairs: I) -> Result<Poset, OrderError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut succ = vec![Vec::new(); n];
        for (x, y) in pairs {
            for index in [x, y] {
                if index >= n {
                    return Err(OrderError::IndexOutOfRange { index, n });
                }
            }
            if x == y {
                return Err(OrderError::SelfLoop(x));
            }
            succ[x].push(y);
        }
        for s in &mut succ {
            s.sort_unstable();
            s.dedup();
        }

        let mut indeg = vec![0usize; n];
        for s in &succ {
            for &y in s {
                indeg[y] += 1;
            }
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&x| indeg[x] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(x) = queue.pop_front() {
            topo.push(x);
            for &y in &succ[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    queue.push_back(y);
                }
            }
        }
        if topo.len() < n {
            let stuck = (0..n).find(|&x| indeg[x] > 0).unwrap_or(0);
            return Err(OrderError::Cycle(stuck));
        }

        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for &x in topo.iter().rev() {
            let mut row = FixedBitSet::with_capacity(n);
            row.insert(x);
            for &y in &succ[x] {
                row.union_with(&up[y]);
            }
            up[x] = row;
        }

        let mut covers = Vec::new();
        for (x, row) in succ.iter().enumerate().take(n) {
            for &y in row {
                let implied = row.iter().any(|&z| z != y && up[z].contains(y));
                if !implied {
                    covers.push((x, y));
                }
            }
        }
        covers.sort_unstable();
        Ok(Self::assemble(n, covers, up, None))
    }

    fn assemble(
        n: usize,
        covers: Vec<(usize, usize)>,
        up: Vec<FixedBitSet>,
        labels: Option<Vec<String>>,
    ) -> Poset {
        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        for &(x, y) in &covers {
            upper[x].push(y);
            lower[y].push(x);
        }
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (x, row) in up.iter().enumerate() {
            for y in row.ones() {
                down[y].insert(x);
            }
        }
        Poset { n, covers, upper, lower, up, down, labels }
    }

    /// Attaches one label per element.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Poset, OrderError> {
        if labels.len() != self.n {
            return Err(OrderError::LabelCount { expected: self.n, got: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Poset {
        self.labels = None;
        self
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Cover pairs `(x, y)` with `x ≺ y`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The label of `x`, or its index when the poset is unlabelled.
    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    /// Looks an element up by label, falling back to a numeric index.
    pub fn find(&self, key: &str) -> Option<usize> {
        if let Some(l) = &self.labels {
            if let Some(i) = l.iter().position(|s| s == key) {
                return Some(i);
            }
        }
        key.parse::<usize>().ok().filter(|&i| i < self.n)
    }

    pub fn check_index(&self, index: usize) -> Result<(), OrderError> {
        if index < self.n {
            Ok(())
        } else {
            Err(OrderError::IndexOutOfRange { index, n: self.n })
        }
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub fn is_cover(&self, x: usize, y: usize) -> bool {
        self.upper[x].contains(&y)
    }

    /// Elements covering `x`.
    pub fn covers_of(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    /// Elements covered by `x`.
    pub fn covered_by(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    /// `{y : x ≤ y}`.
    pub fn up_set(&self, x: usize) -> &FixedBitSet {
        &self.up[x]
    }

    /// `{y : y ≤ x}`.
    pub fn down_set(&self, x: usize) -> &FixedBitSet {
        &self.down[x]
    }

    pub fn minimum(&self) -> Option<usize> {
        (0..self.n).find(|&x| self.up[x].count_ones(..) == self.n)
    }

    pub fn maximum(&self) -> Option<usize> {
        (0..self.n).find(|&x| self.down[x].count_ones(..) == self.n)
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.lower[x].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.upper[x].is_empty()).collect()
    }

    /// Neighbours of `x` in the undirected Hasse graph.
    pub fn neighbours(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.upper[x].iter().chain(self.lower[x].iter()).copied()
    }

    /// Whether the undirected Hasse graph is connected. The empty poset is not.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for y in self.neighbours(x) {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == self.n
    }

    /// Edges of the undirected Hasse graph as `(min, max)` index pairs, sorted.
    pub fn undirected_edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = self.covers.iter().map(|&(x, y)| (x.min(y), x.max(y))).collect();
        e.sort_unstable();
        e
    }

    /// Length of the longest chain ending at each element.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0; self.n];
        for &x in &self.linear_extension() {
            for &y in &self.upper[x] {
                h[y] = h[y].max(h[x] + 1);
            }
        }
        h
    }

    /// A linear extension, choosing the smallest available index at each step.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut indeg: Vec<usize> = self.lower.iter().map(Vec::len).collect();
        let mut heap: BinaryHeap<Reverse<usize>> =
            (0..self.n).filter(|&x| indeg[x] == 0).map(Reverse).collect();
        let mut out = Vec::with_capacity(self.n);
        while let Some(Reverse(x)) = heap.pop() {
            out.push(x);
            for &y in &self.upper[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    heap.push(Reverse(y));
                }
            }
        }
        out
    }

    /// The opposite order on the same elements and labels.
    pub fn dual(&self) -> Poset {
        let covers = self.covers.iter().map(|&(x, y)| (y, x));
        let mut d = Poset::from_covers(self.n, covers).expect("dual of a poset is a poset");
        d.labels = self.labels.clone();
        d
    }

    /// Renames element `x` to `perm[x]`.
    pub fn permuted(&self, perm: &[usize]) -> Poset {
        let covers = self.covers.iter().map(|&(x, y)| (perm[x], perm[y]));
        let mut p = Poset::from_covers(self.n, covers).expect("relabelling preserves validity");
        if let Some(l) = &self.labels {
            let mut nl = vec![String::new(); self.n];
            for (x, s) in l.iter().enumerate() {
                nl[perm[x]] = s.clone();
            }
            p.labels = Some(nl);
        }
        p
    }

    /// The induced subposet on `elements` (in the given order).
    pub fn induced(&self, elements: &[usize]) -> Interval {
        let k = elements.len();
        let mut pairs = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if i != j && self.leq(elements[i], elements[j]) {
                    pairs.push((i, j));
                }
            }
        }
        let mut poset = Poset::from_covers(k, pairs).expect("induced order is a partial order");
        if let Some(l) = &self.labels {
            poset.labels = Some(elements.iter().map(|&x| l[x].clone()).collect());
        }
        Interval { poset, elements: elements.to_vec() }
    }

    /// The interval `[a, b]` with a map back to this poset.
    pub fn interval(&self, a: usize, b: usize) -> Result<Interval, OrderError> {
        self.check_index(a)?;
        self.check_index(b)?;
        if !self.leq(a, b) {
            return Err(OrderError::NotComparable { a, b });
        }
        let mut set = self.up[a].clone();
        set.intersect_with(&self.down[b]);
        let elements: Vec<usize> = set.ones().collect();
        Ok(self.induced(&elements))
    }

    /// Same labelled order up to renumbering: elements are matched by label.
    pub fn same_order_by_labels(&self, other: &Poset) -> bool {
        let (Some(a), Some(b)) = (self.labels(), other.labels()) else {
            return false;
        };
        if self.n != other.n {
            return false;
        }
        let mut map = vec![usize::MAX; self.n];
        for (i, s) in a.iter().enumerate() {
            match b.iter().position(|t| t == s) {
                Some(j) => map[i] = j,
                None => return false,
            }
        }
        let mut mine: Vec<_> = self.covers.iter().map(|&(x, y)| (map[x], map[y])).collect();
        mine.sort_unstable();
        mine == other.covers
    }
}

/// An induced subposet together with the original index of each element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub poset: Poset,
    pub elements: Vec<usize>,
}

impl Interval {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, original: usize) -> Option<usize> {
        self.elements.iter().position(|&e| e == original)
    }
}

/// Join and meet rows of one element.
type TableRow = (Vec<u32>, Vec<u32>);

/// A poset in which every pair has a join and a meet.
#[derive(Clone, Debug)]
pub struct Lattice {
    poset: Poset,
    join: Vec<u32>,
    meet: Vec<u32>,
    bottom: usize,
    top: usize,
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.poset == other.poset
    }
}

impl Eq for Lattice {}

impl Hash for Lattice {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.poset.hash(state);
    }
}

impl Deref for Lattice {
    type Target = Poset;

    fn deref(&self) -> &Poset {
        &self.poset
    }
}

/// Validates `p` as a lattice and fills its join and meet tables.
pub fn as_lattice(p: &Poset) -> Result<Lattice, OrderError> {
    Lattice::new(p.clone())
}

impl Lattice {
    pub fn new(poset: Poset) -> Result<Lattice, OrderError> {
        let n = poset.n;
        if n == 0 {
            return Err(OrderError::Empty);
        }
        let order = poset.linear_extension();
        let mut pos = vec![0; n];
        for (i, &x) in order.iter().enumerate() {
            pos[x] = i;
        }
        // Rows re-indexed by linear-extension position, so the least common
        // upper bound candidate is the first set bit of an intersection.
        let reindex = |rows: &[FixedBitSet]| -> Vec<FixedBitSet> {
            order
                .iter()
                .map(|&x| {
                    let mut r = FixedBitSet::with_capacity(n);
                    for y in rows[x].ones() {
                        r.insert(pos[y]);
                    }
                    r
                })
                .collect()
        };
        let up = reindex(&poset.up);
        let down = reindex(&poset.down);
        let rows: Vec<Result<TableRow, OrderError>> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut scratch = FixedBitSet::with_capacity(n);
                let mut jrow = vec![0u32; n];
                let mut mrow = vec![0u32; n];
                for j in 0..n {
                    let fail = |reason| OrderError::NotALattice {
                        x: order[i].min(order[j]),
                        y: order[i].max(order[j]),
                        reason,
                    };
                    jrow[j] = Self::bound(&up, i, j, &mut scratch, true).map_err(fail)? as u32;
                    mrow[j] = Self::bound(&down, i, j, &mut scratch, false).map_err(fail)? as u32;
                }
                Ok((jrow, mrow))
            })
            .collect();
        let mut join = vec![0u32; n * n];
        let mut meet = vec![0u32; n * n];
        for (i, row) in rows.into_iter().enumerate() {
            let (jrow, mrow) = row?;
            let x = order[i];
            for j in 0..n {
                let y = order[j];
                join[x * n + y] = order[jrow[j] as usize] as u32;
                meet[x * n + y] = order[mrow[j] as usize] as u32;
            }
        }
        let bottom = poset.minimum().ok_or(OrderError::NotALattice {
            x: 0,
            y: 0,
            reason: BoundFailure::NoLowerBound,
        })?;
        let top = poset.maximum().ok_or(OrderError::NotALattice {
            x: 0,
            y: 0,
            reason: BoundFailure::NoUpperBound,
        })?;
        Ok(Lattice { poset, join, meet, bottom, top })
    }

    // Least element of rows[i] ∩ rows[j] (upper bounds when `upward`), in
    // position space. The candidate is the first common bound (last for lower
    // bounds); it is the answer iff its own row contains every common bound.
    fn bound(
        rows: &[FixedBitSet],
        i: usize,
        j: usize,
        scratch: &mut FixedBitSet,
        upward: bool,
    ) -> Result<usize, BoundFailure> {
        scratch.clone_from(&rows[i]);
        scratch.intersect_with(&rows[j]);
        let cand = if upward { scratch.minimum() } else { scratch.maximum() };
        let Some(z) = cand else {
            return Err(if upward { BoundFailure::NoUpperBound } else { BoundFailure::NoLowerBound });
        };
        if scratch.is_subset(&rows[z]) {
            Ok(z)
        } else if upward {
            Err(BoundFailure::SeveralMinimalUpperBounds)
        } else {
            Err(BoundFailure::SeveralMaximalLowerBounds)
        }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn into_poset(self) -> Poset {
        self.poset
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.poset.n + y] as usize
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.poset.n + y] as usize
    }

    pub fn join_all<I: IntoIterator<Item = usize>>(&self, xs: I) -> usize {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, xs: I) -> usize {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn atoms(&self) -> Vec<usize> {
        self.poset.upper[self.bottom].clone()
    }

    pub fn coatoms(&self) -> Vec<usize> {
        self.poset.lower[self.top].clone()
    }

    pub fn dual(&self) -> Lattice {
        Lattice::new(self.poset.dual()).expect("dual of a lattice is a lattice")
    }

    /// The maximal-chain lengths `(m, n)`, `m ≤ n`, when the undirected Hasse
    /// graph is a single cycle.
    pub fn is_polygon(&self) -> Option<(usize, usize)> {
        let p = &self.poset;
        if p.n < 4 || p.covers.len() != p.n {
            return None;
        }
        if (0..p.n).any(|x| p.upper[x].len() + p.lower[x].len() != 2) || !p.is_connected() {
            return None;
        }
        let bottom_up = &p.upper[self.bottom];
        if bottom_up.len() != 2 {
            return None;
        }
        let mut lengths = [0usize; 2];
        for (k, &start) in bottom_up.iter().enumerate() {
            let mut x = start;
            let mut len = 1;
            while x != self.top {
                x = p.upper[x][0];
                len += 1;
            }
            lengths[k] = len;
        }
        lengths.sort_unstable();
        Some((lengths[0], lengths[1]))
    }

    /// `x∨y = x∨z ⇒ x∨(y∧z) = x∨y` and the dual, checked on all triples.
    pub fn is_semidistributive(&self) -> bool {
        let n = self.poset.n;
        for x in 0..n {
            for y in 0..n {
                for z in y + 1..n {
                    let j = self.join(x, y);
                    if j == self.join(x, z) && self.join(x, self.meet(y, z)) != j {
                        return false;
                    }
                    let m = self.meet(x, y);
                    if m == self.meet(x, z) && self.meet(x, self.join(y, z)) != m {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `#[0, a∨b]`.
    pub fn t_value(&self, a: usize, b: usize) -> usize {
        self.poset.down[self.join(a, b)].count_ones(..)
    }

    /// `[x, y∨z]` is a polygon whenever `x ≺ y, z`, and dually.
    pub fn is_polygonal(&self) -> bool {
        let p = &self.poset;
        for x in 0..p.n {
            let ups = &p.upper[x];
            for (i, &y) in ups.iter().enumerate() {
                for &z in &ups[i + 1..] {
                    let iv = p.interval(x, self.join(y, z)).expect("x ≤ y∨z");
                    let sub = Lattice::new(iv.poset).expect("interval of a lattice");
                    if sub.is_polygon().is_none() {
                        return false;
                    }
                }
            }
            let downs = &p.lower[x];
            for (i, &y) in downs.iter().enumerate() {
                for &z in &downs[i + 1..] {
                    let iv = p.interval(self.meet(y, z), x).expect("y∧z ≤ x");
                    let sub = Lattice::new(iv.poset).expect("interval of a lattice");
                    if sub.is_polygon().is_none() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Degree of the undirected Hasse graph when it is the same at every element.
    pub fn regular_degree(&self) -> Option<usize> {
        let p = &self.poset;
        let d = p.upper[0].len() + p.lower[0].len();
        (0..p.n).all(|x| p.upper[x].len() + p.lower[x].len() == d).then_some(d)
    }

    pub fn is_join_closed(&self, set: &FixedBitSet) -> bool {
        let items: Vec<usize> = set.ones().collect();
        items.iter().enumerate().all(|(i, &x)| {
            items[i + 1..].iter().all(|&y| set.contains(self.join(x, y)))
        })
    }

    pub fn is_meet_closed(&self, set: &FixedBitSet) -> bool {
        let items: Vec<usize> = set.ones().collect();
        items.iter().enumerate().all(|(i, &x)| {
            items[i + 1..].iter().all(|&y| set.contains(self.meet(x, y)))
        })
    }
}

/// Whether `f: L → M` preserves joins and meets.
pub fn is_lattice_homomorphism(l: &Lattice, m: &Lattice, f: &[usize]) -> bool {
    let n = l.len();
    if f.len() != n || f.iter().any(|&v| v >= m.len()) {
        return false;
    }
    for x in 0..n {
        for y in x + 1..n {
            if f[l.join(x, y)] != m.join(f[x], f[y]) || f[l.meet(x, y)] != m.meet(f[x], f[y]) {
                return false;
            }
        }
    }
    true
}
