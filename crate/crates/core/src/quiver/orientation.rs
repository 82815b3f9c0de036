use super::{QuiverError, WeightedQuiver};
use crate::coxeter::CoxeterType;
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

/// Direction of the edge between path vertices `i` and `i+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    /// `i → i+1`
    R,
    /// `i ← i+1`
    L,
}

impl Dir {
    pub fn reversed(self) -> Dir {
        match self {
            Dir::R => Dir::L,
            Dir::L => Dir::R,
        }
    }
}

/// An orientation of the Coxeter path of type A or B and rank `n`. Vertex 0
/// is the weight-1 end in type B.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterOrientation {
    pub ty: CoxeterType,
    pub n: usize,
    pub dirs: Vec<Dir>,
}

impl CoxeterOrientation {
    pub fn new(ty: CoxeterType, n: usize, dirs: Vec<Dir>) -> Result<Self, QuiverError> {
        if n == 0 || dirs.len() != n - 1 {
            return Err(QuiverError::BadOrientation(format!(
                "rank {n} needs {} directions, got {}",
                n.saturating_sub(1),
                dirs.len()
            )));
        }
        Ok(CoxeterOrientation { ty, n, dirs })
    }

    /// Every edge pointing the same way.
    pub fn uniform(ty: CoxeterType, n: usize, dir: Dir) -> Self {
        CoxeterOrientation { ty, n, dirs: vec![dir; n.saturating_sub(1)] }
    }

    pub fn dir_string(&self) -> String {
        self.dirs.iter().map(|d| if *d == Dir::R { 'R' } else { 'L' }).collect()
    }

    /// Reverses the edges at `v`.
    pub fn reflected(&self, v: usize) -> Self {
        let mut o = self.clone();
        if v > 0 {
            o.dirs[v - 1] = o.dirs[v - 1].reversed();
        }
        if v + 1 < self.n {
            o.dirs[v] = o.dirs[v].reversed();
        }
        o
    }

    /// Whether `v` is a sink or a source.
    pub fn is_extremal(&self, v: usize) -> bool {
        // incoming at v: edge v-1 is R, or edge v is L
        let left_in = v > 0 && self.dirs[v - 1] == Dir::R;
        let left_out = v > 0 && self.dirs[v - 1] == Dir::L;
        let right_in = v + 1 < self.n && self.dirs[v] == Dir::L;
        let right_out = v + 1 < self.n && self.dirs[v] == Dir::R;
        !(left_in || right_in) || !(left_out || right_out)
    }
}

impl fmt::Display for CoxeterOrientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}:{}", self.ty, self.n, self.dir_string())
    }
}

/// `"A3:RL"`, `"B2:R"`, `"A1:"`.
impl FromStr for CoxeterOrientation {
    type Err = QuiverError;

    fn from_str(s: &str) -> Result<Self, QuiverError> {
        let bad = || QuiverError::BadOrientation(s.to_string());
        let (head, tail) = s.trim().split_once(':').ok_or_else(bad)?;
        let ty = match head.chars().next() {
            Some('A' | 'a') => CoxeterType::A,
            Some('B' | 'b') => CoxeterType::B,
            _ => return Err(bad()),
        };
        let n: usize = head[1..].parse().map_err(|_| bad())?;
        let dirs = tail
            .chars()
            .map(|c| match c {
                'R' | 'r' => Ok(Dir::R),
                'L' | 'l' => Ok(Dir::L),
                _ => Err(bad()),
            })
            .collect::<Result<Vec<_>, _>>()?;
        CoxeterOrientation::new(ty, n, dirs)
    }
}

pub fn all_orientations(ty: CoxeterType, n: usize) -> Vec<CoxeterOrientation> {
    let k = n.saturating_sub(1);
    (0..1usize << k)
        .map(|mask| {
            let dirs = (0..k).map(|i| if mask >> i & 1 == 0 { Dir::R } else { Dir::L }).collect();
            CoxeterOrientation { ty, n, dirs }
        })
        .collect()
}

/// The path quiver; in type B vertex 0 has weight 1 and the rest weight 2.
pub fn orientation_to_quiver(o: &CoxeterOrientation) -> WeightedQuiver {
    let weights = match o.ty {
        CoxeterType::A => vec![1; o.n],
        CoxeterType::B => (0..o.n).map(|v| if v == 0 { 1 } else { 2 }).collect(),
    };
    let edges = o.dirs.iter().enumerate().map(|(i, d)| match d {
        Dir::R => (i, i + 1, 1),
        Dir::L => (i + 1, i, 1),
    });
    WeightedQuiver::new(weights, edges).expect("a path has no loops or 2-cycles")
}

/// Shortest sequence of sink/source reflections taking `from` to `to`.
pub fn sink_source_reflection_path(
    from: &CoxeterOrientation,
    to: &CoxeterOrientation,
) -> Result<Vec<usize>, QuiverError> {
    if from.ty != to.ty || from.n != to.n {
        return Err(QuiverError::BadOrientation(format!("{from} and {to} differ in type or rank")));
    }
    let mut parent: HashMap<Vec<Dir>, (Vec<Dir>, usize)> = HashMap::new();
    let mut queue = VecDeque::from([from.clone()]);
    parent.insert(from.dirs.clone(), (Vec::new(), usize::MAX));
    while let Some(cur) = queue.pop_front() {
        if cur.dirs == to.dirs {
            let mut path = Vec::new();
            let mut key = cur.dirs;
            while let Some((prev, v)) = parent.get(&key).cloned() {
                if v == usize::MAX {
                    break;
                }
                path.push(v);
                key = prev;
            }
            path.reverse();
            return Ok(path);
        }
        for v in 0..cur.n {
            if cur.is_extremal(v) {
                let next = cur.reflected(v);
                if !parent.contains_key(&next.dirs) {
                    parent.insert(next.dirs.clone(), (cur.dirs.clone(), v));
                    queue.push_back(next);
                }
            }
        }
    }
    Err(QuiverError::BadOrientation(format!("{to} is unreachable from {from}")))
}
