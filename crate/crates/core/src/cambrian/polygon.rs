use super::CambrianError;
use crate::coxeter::CoxeterType;
use crate::quiver::{CoxeterOrientation, Dir};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Upper,
    Lower,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Upper => Side::Lower,
            Side::Lower => Side::Upper,
        }
    }

    fn letter(self) -> char {
        match self {
            Side::Upper => 'U',
            Side::Lower => 'L',
        }
    }
}

/// The labelled polygon of a Coxeter orientation.
///
/// Type A: labels `0..=n+2`, with `0` leftmost, `n+2` rightmost and each of
/// `1..=n+1` on the upper or lower path. Type B: labels `±1..=±(n+1)`, with
/// `∓(n+1)` at the ends and `i`, `−i` on opposite paths.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polygon {
    ty: CoxeterType,
    n: usize,
    /// Type A: side of label `i` at `i-1`. Type B: side of `+i` at `i-1`.
    sides: Vec<Side>,
    /// Position of each label on the boundary cycle, indexed by `label + shift`.
    position: Vec<usize>,
}

impl Polygon {
    pub fn new(ty: CoxeterType, n: usize, sides: Vec<Side>) -> Result<Polygon, CambrianError> {
        let want = match ty {
            CoxeterType::A => n + 1,
            CoxeterType::B => n,
        };
        if n == 0 || sides.len() != want {
            return Err(CambrianError::BadPolygon(format!(
                "{ty}{n} needs {want} sides, got {}",
                sides.len()
            )));
        }
        let mut p = Polygon { ty, n, sides, position: Vec::new() };
        let cycle = p.cycle();
        let (lo, hi) = p.ends();
        p.position = vec![usize::MAX; (hi - lo + 1) as usize];
        let shift = p.shift();
        for (i, &l) in cycle.iter().enumerate() {
            p.position[(l + shift) as usize] = i;
        }
        Ok(p)
    }

    /// The polygon whose orientation is `o`. Labels not fixed by the
    /// orientation go to the lower side.
    pub fn from_orientation(o: &CoxeterOrientation) -> Polygon {
        let side_of = |d: Dir| if d == Dir::L { Side::Upper } else { Side::Lower };
        let sides = match o.ty {
            // edge i-(i+1) is read off label i+1
            CoxeterType::A => std::iter::once(Side::Lower)
                .chain(o.dirs.iter().map(|&d| side_of(d)))
                .chain(std::iter::once(Side::Lower))
                .collect(),
            // edge i-(i+1) is read off label i
            CoxeterType::B => o.dirs.iter().map(|&d| side_of(d)).chain(std::iter::once(Side::Lower)).collect(),
        };
        Polygon::new(o.ty, o.n, sides).expect("orientation has the right length")
    }

    pub fn orientation(&self) -> CoxeterOrientation {
        let dir_of = |s: Side| if s == Side::Upper { Dir::L } else { Dir::R };
        let dirs = match self.ty {
            CoxeterType::A => self.sides[1..self.n].iter().map(|&s| dir_of(s)).collect(),
            CoxeterType::B => self.sides[..self.n - 1].iter().map(|&s| dir_of(s)).collect(),
        };
        CoxeterOrientation::new(self.ty, self.n, dirs).expect("sides determine n-1 edges")
    }

    pub fn ty(&self) -> CoxeterType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    fn shift(&self) -> i32 {
        match self.ty {
            CoxeterType::A => 0,
            CoxeterType::B => self.n as i32 + 1,
        }
    }

    /// Leftmost and rightmost labels.
    pub fn ends(&self) -> (i32, i32) {
        match self.ty {
            CoxeterType::A => (0, self.n as i32 + 2),
            CoxeterType::B => (-(self.n as i32) - 1, self.n as i32 + 1),
        }
    }

    /// Every label, increasing.
    pub fn labels(&self) -> Vec<i32> {
        let (lo, hi) = self.ends();
        (lo..=hi).filter(|&l| !(self.ty == CoxeterType::B && l == 0)).collect()
    }

    /// The side of an interior label; `None` for the two ends.
    pub fn side(&self, label: i32) -> Option<Side> {
        let (lo, hi) = self.ends();
        if label <= lo || label >= hi {
            return None;
        }
        match self.ty {
            CoxeterType::A => Some(self.sides[label as usize - 1]),
            CoxeterType::B if label > 0 => Some(self.sides[label as usize - 1]),
            CoxeterType::B if label < 0 => Some(self.sides[(-label) as usize - 1].opposite()),
            CoxeterType::B => None,
        }
    }

    /// Boundary order: left end, upper labels ascending, right end, lower
    /// labels descending.
    pub fn cycle(&self) -> Vec<i32> {
        let (lo, hi) = self.ends();
        let interior: Vec<i32> = self.labels().into_iter().filter(|&l| l != lo && l != hi).collect();
        let mut c = vec![lo];
        c.extend(interior.iter().filter(|&&l| self.side(l) == Some(Side::Upper)));
        c.push(hi);
        c.extend(interior.iter().rev().filter(|&&l| self.side(l) == Some(Side::Lower)));
        c
    }

    pub fn pos(&self, label: i32) -> usize {
        self.position[(label + self.shift()) as usize]
    }

    pub fn contains_label(&self, label: i32) -> bool {
        let i = label + self.shift();
        i >= 0 && (i as usize) < self.position.len() && self.position[i as usize] != usize::MAX
    }

    pub fn vertex_count(&self) -> usize {
        self.position.iter().filter(|&&p| p != usize::MAX).count()
    }

    pub fn is_boundary(&self, a: i32, b: i32) -> bool {
        let m = self.vertex_count();
        let (p, q) = (self.pos(a), self.pos(b));
        (p + 1) % m == q || (q + 1) % m == p
    }

    /// Whether two chords cross in the interior.
    pub fn crosses(&self, d: (i32, i32), e: (i32, i32)) -> bool {
        let (mut p, mut q) = (self.pos(d.0), self.pos(d.1));
        if p > q {
            std::mem::swap(&mut p, &mut q);
        }
        let inside = |x: i32| {
            let r = self.pos(x);
            p < r && r < q
        };
        let ends = [e.0, e.1];
        if ends.iter().any(|&x| x == d.0 || x == d.1) {
            return false;
        }
        inside(e.0) != inside(e.1)
    }

    /// Under the half-turn, label `x` goes to `−x`.
    pub fn mirror(&self, label: i32) -> i32 {
        match self.ty {
            CoxeterType::A => label,
            CoxeterType::B => -label,
        }
    }
}

impl fmt::Display for Polygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.sides.iter().map(|s| s.letter()).collect();
        write!(f, "{}{}:{}", self.ty, self.n, s)
    }
}

/// `"A3:UL"` gives the sides of labels `2..=n` (the free labels `1` and `n+1`
/// go low); `"A3:LULL"` gives all of `1..=n+1`. Type B: `"B3:UL"` gives
/// labels `1..=n-1`, `"B3:ULL"` gives `1..=n`.
impl FromStr for Polygon {
    type Err = CambrianError;

    fn from_str(s: &str) -> Result<Self, CambrianError> {
        let bad = || CambrianError::BadPolygon(s.to_string());
        let (head, tail) = s.trim().split_once(':').ok_or_else(bad)?;
        let ty = match head.chars().next() {
            Some('A' | 'a') => CoxeterType::A,
            Some('B' | 'b') => CoxeterType::B,
            _ => return Err(bad()),
        };
        let n: usize = head[1..].parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(bad());
        }
        let letters = tail
            .chars()
            .map(|c| match c {
                'U' | 'u' => Ok(Side::Upper),
                'L' | 'l' => Ok(Side::Lower),
                _ => Err(bad()),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let sides = match (ty, letters.len()) {
            (CoxeterType::A, k) if k == n - 1 => {
                let mut v = vec![Side::Lower];
                v.extend(letters);
                v.push(Side::Lower);
                v
            }
            (CoxeterType::A, k) if k == n + 1 => letters,
            (CoxeterType::B, k) if k == n - 1 => {
                let mut v = letters;
                v.push(Side::Lower);
                v
            }
            (CoxeterType::B, k) if k == n => letters,
            _ => return Err(bad()),
        };
        Polygon::new(ty, n, sides)
    }
}
