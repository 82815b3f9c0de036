use super::{CambrianError, Polygon, Side};
use crate::coxeter::{CoxeterElement, CoxeterType, PermA, PermB};
use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

/// A set of diagonals, each stored as `(low, high)` and kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangulation {
    diagonals: Vec<(i32, i32)>,
}

fn norm(a: i32, b: i32) -> (i32, i32) {
    (a.min(b), a.max(b))
}

impl Triangulation {
    /// Checks that the diagonals are interior, pairwise non-crossing, of the
    /// right number and, in type B, closed under the half-turn.
    pub fn new<I>(polygon: &Polygon, diagonals: I) -> Result<Triangulation, CambrianError>
    where
        I: IntoIterator<Item = (i32, i32)>,
    {
        let set: BTreeSet<(i32, i32)> = diagonals.into_iter().map(|(a, b)| norm(a, b)).collect();
        let bad = |why: String| CambrianError::BadTriangulation(why);
        for &(a, b) in &set {
            if a == b || !polygon.contains_label(a) || !polygon.contains_label(b) {
                return Err(bad(format!("{a}-{b} is not a chord")));
            }
            if polygon.is_boundary(a, b) {
                return Err(bad(format!("{a}-{b} is a boundary edge")));
            }
            if polygon.ty() == CoxeterType::B {
                let m = norm(-a, -b);
                if !set.contains(&m) {
                    return Err(bad(format!("{a}-{b} has no mirror image")));
                }
            }
        }
        let diagonals: Vec<(i32, i32)> = set.into_iter().collect();
        for (i, &d) in diagonals.iter().enumerate() {
            for &e in &diagonals[i + 1..] {
                if polygon.crosses(d, e) {
                    return Err(bad(format!("{}-{} crosses {}-{}", d.0, d.1, e.0, e.1)));
                }
            }
        }
        if diagonals.len() != polygon.vertex_count() - 3 {
            return Err(bad(format!("{} diagonals, expected {}", diagonals.len(), polygon.vertex_count() - 3)));
        }
        Ok(Triangulation { diagonals })
    }

    pub fn diagonals(&self) -> &[(i32, i32)] {
        &self.diagonals
    }

    pub fn contains(&self, d: (i32, i32)) -> bool {
        self.diagonals.binary_search(&norm(d.0, d.1)).is_ok()
    }

    pub fn parse(polygon: &Polygon, s: &str) -> Result<Triangulation, CambrianError> {
        let raw: RawTriangulation = s.parse()?;
        Triangulation::new(polygon, raw.0)
    }
}

/// `"0-3,2-3"`; negative labels read as `"-2-1"` or `"-1--2"`.
impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.diagonals.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        f.write_str(&parts.join(","))
    }
}

/// Unvalidated diagonal list.
pub(crate) struct RawTriangulation(pub Vec<(i32, i32)>);

impl FromStr for RawTriangulation {
    type Err = CambrianError;

    fn from_str(s: &str) -> Result<Self, CambrianError> {
        let bad = || CambrianError::BadTriangulation(s.to_string());
        let s = s.trim();
        if s.is_empty() {
            return Ok(RawTriangulation(Vec::new()));
        }
        s.split(',')
            .map(|part| {
                let part = part.trim().replace('\u{2212}', "-");
                let cut = part[1..].find('-').map(|i| i + 1).ok_or_else(bad)?;
                let a = part[..cut].trim().parse::<i32>().map_err(|_| bad())?;
                let b = part[cut + 1..].trim().parse::<i32>().map_err(|_| bad())?;
                Ok(norm(a, b))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(RawTriangulation)
    }
}

// Start from the ends and the lower labels; before each toggle, every step of
// the zigzag through C that is not a boundary edge is recorded.
fn zigzags(polygon: &Polygon, toggles: &[i32], final_zigzag: bool) -> Triangulation {
    let (lo, hi) = polygon.ends();
    let mut c: BTreeSet<i32> = polygon
        .labels()
        .into_iter()
        .filter(|&l| l == lo || l == hi || polygon.side(l) == Some(Side::Lower))
        .collect();
    let mut diagonals = BTreeSet::new();
    let mut draw = |c: &BTreeSet<i32>| {
        let v: Vec<i32> = c.iter().copied().collect();
        for w in v.windows(2) {
            if !polygon.is_boundary(w[0], w[1]) {
                diagonals.insert((w[0], w[1]));
            }
        }
    };
    for &t in toggles {
        draw(&c);
        if !c.remove(&t) {
            c.insert(t);
        }
    }
    if final_zigzag {
        draw(&c);
    }
    Triangulation::new(polygon, diagonals).expect("zigzags give a triangulation")
}

/// η: the zigzags while toggling `σ(1), …, σ(n+1)`.
pub fn eta(polygon: &Polygon, sigma: &PermA) -> Triangulation {
    assert!(polygon.ty() == CoxeterType::A && sigma.rank() == polygon.rank());
    let toggles: Vec<i32> = (1..=polygon.rank() + 1).map(|i| sigma.image(i) as i32).collect();
    zigzags(polygon, &toggles, false)
}

/// η_B: the zigzags while toggling `σ(−n), …, σ(−1), σ(1), …, σ(n)`.
pub fn eta_b(polygon: &Polygon, sigma: &PermB) -> Triangulation {
    assert!(polygon.ty() == CoxeterType::B && sigma.rank() == polygon.rank());
    let n = polygon.rank() as i32;
    let toggles: Vec<i32> = (-n..=-1).chain(1..=n).map(|i| sigma.image(i)).collect();
    zigzags(polygon, &toggles, true)
}

/// Permutations one move away: adjacent values `k > i` (or `i < k`) swap when
/// some `j` between them sits upper and earlier, or lower and later.
pub fn pattern_moves(polygon: &Polygon, sigma: &PermA) -> Vec<PermA> {
    let w = sigma.images();
    let mut out = Vec::new();
    for p in 0..w.len() - 1 {
        let (lo, hi) = (w[p].min(w[p + 1]), w[p].max(w[p + 1]));
        let ok = (0..w.len()).any(|q| {
            let j = w[q];
            lo < j
                && j < hi
                && match polygon.side(j as i32) {
                    Some(Side::Upper) => q < p,
                    Some(Side::Lower) => q > p + 1,
                    None => false,
                }
        });
        if ok {
            let mut v = w.clone();
            v.swap(p, p + 1);
            out.push(PermA::new(v).expect("a swap keeps a permutation"));
        }
    }
    out
}

/// Whether `σ` and `τ` are joined by pattern moves.
pub fn pattern_kernel_equal(polygon: &Polygon, sigma: &PermA, tau: &PermA) -> bool {
    let mut seen = HashSet::from([sigma.clone()]);
    let mut queue = VecDeque::from([sigma.clone()]);
    while let Some(s) = queue.pop_front() {
        if &s == tau {
            return true;
        }
        for t in pattern_moves(polygon, &s) {
            if seen.insert(t.clone()) {
                queue.push_back(t);
            }
        }
    }
    false
}

/// For the quadrilateral on four labels, its two diagonals as
/// `(smaller, larger)`: with `a<b<c<d`, the diagonals are `bc, ad` when `b`
/// and `c` lie on opposite sides and `ac, bd` otherwise; the one through `b`
/// is smaller when `b` is upper, the one through `a` otherwise.
pub fn cover_orientation(polygon: &Polygon, quad: [i32; 4]) -> ((i32, i32), (i32, i32)) {
    let mut q = quad;
    q.sort_unstable();
    let [a, b, c, d] = q;
    let (through_a, through_b) = if polygon.side(b) != polygon.side(c) { ((a, d), (b, c)) } else { ((a, c), (b, d)) };
    if polygon.side(b) == Some(Side::Upper) {
        (through_b, through_a)
    } else {
        (through_a, through_b)
    }
}

fn orbit(polygon: &Polygon, d: (i32, i32)) -> Vec<(i32, i32)> {
    let m = norm(polygon.mirror(d.0), polygon.mirror(d.1));
    if m == d {
        vec![d]
    } else {
        vec![d.min(m), d.max(m)]
    }
}

/// The triangulations one flip away, each with whether `t` is the lower end
/// of that cover. In type B a flip replaces a long edge or a mirror pair of
/// short edges.
pub fn flip_neighbours(polygon: &Polygon, t: &Triangulation) -> Result<Vec<(Triangulation, bool)>, CambrianError> {
    let labels = polygon.labels();
    let mut done = HashSet::new();
    let mut out = Vec::new();
    for &d in t.diagonals() {
        let old = orbit(polygon, d);
        if !done.insert(old.clone()) {
            continue;
        }
        let rest: Vec<(i32, i32)> = t.diagonals().iter().copied().filter(|e| !old.contains(e)).collect();
        let mut found: Option<Vec<(i32, i32)>> = None;
        for (i, &x) in labels.iter().enumerate() {
            for &y in &labels[i + 1..] {
                let e = (x, y);
                if old.contains(&e) || polygon.is_boundary(x, y) || rest.contains(&e) {
                    continue;
                }
                let new = orbit(polygon, e);
                if new[0] != e || new.len() != old.len() {
                    continue;
                }
                let clash = new.iter().any(|&f| rest.iter().any(|&g| polygon.crosses(f, g)))
                    || (new.len() == 2 && polygon.crosses(new[0], new[1]));
                if clash {
                    continue;
                }
                if found.is_some() {
                    return Err(CambrianError::Invariant(format!("several flips of {}-{}", d.0, d.1)));
                }
                found = Some(new);
            }
        }
        let new = found.ok_or_else(|| CambrianError::Invariant(format!("no flip of {}-{}", d.0, d.1)))?;
        // Read the direction off every crossing pair; the smallest quad decides
        // and the others must agree.
        let mut verdicts: Vec<([i32; 4], bool)> = Vec::new();
        for &o in &old {
            for &e in &new {
                if polygon.crosses(o, e) {
                    let mut quad = [o.0, o.1, e.0, e.1];
                    quad.sort_unstable();
                    let (small, large) = cover_orientation(polygon, quad);
                    if norm(small.0, small.1) == o && norm(large.0, large.1) == e {
                        verdicts.push((quad, true));
                    } else if norm(small.0, small.1) == e && norm(large.0, large.1) == o {
                        verdicts.push((quad, false));
                    } else {
                        return Err(CambrianError::Invariant(format!("quad {quad:?} has other diagonals")));
                    }
                }
            }
        }
        verdicts.sort_unstable();
        let Some(&(_, lower)) = verdicts.first() else {
            return Err(CambrianError::Invariant("flip without a crossing".into()));
        };
        if verdicts.iter().any(|v| v.1 != lower) {
            return Err(CambrianError::Invariant("quad choice changes the orientation".into()));
        }
        let next = Triangulation::new(polygon, rest.into_iter().chain(new))?;
        out.push((next, lower));
    }
    Ok(out)
}

/// Every (point-symmetric) triangulation, breadth-first from `η(id)`.
pub fn all_triangulations(polygon: &Polygon) -> Result<Vec<Triangulation>, CambrianError> {
    let start = match polygon.ty() {
        CoxeterType::A => eta(polygon, &PermA::identity(polygon.rank())),
        CoxeterType::B => eta_b(polygon, &PermB::identity(polygon.rank())),
    };
    let mut seen = HashSet::from([start.clone()]);
    let mut out = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    while let Some(t) = queue.pop_front() {
        for (u, _) in flip_neighbours(polygon, &t)? {
            if seen.insert(u.clone()) {
                out.push(u.clone());
                queue.push_back(u);
            }
        }
    }
    Ok(out)
}
