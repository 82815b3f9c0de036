use super::{CoxeterError, CoxeterType};
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

/// Group arithmetic shared by the two families. `compose(p, q) = p∘q`, so
/// right multiplication by a generator acts on positions.
pub trait CoxeterElement:
    Clone + Eq + Hash + Ord + fmt::Debug + fmt::Display + FromStr<Err = CoxeterError> + Send + Sync
{
    const TYPE: CoxeterType;
    /// Largest rank `build_weak_order` accepts.
    const MAX_RANK: usize;

    fn identity(rank: usize) -> Self;
    /// `s_i` for `1 ≤ i ≤ rank`.
    fn generator(rank: usize, i: usize) -> Self;
    fn rank(&self) -> usize;
    fn compose(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
    /// Word length from an inversion count.
    fn length(&self) -> usize;
}

/// A permutation of `1..=n+1` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermA {
    images: Vec<u8>,
}

impl PermA {
    pub fn new(images: Vec<usize>) -> Result<PermA, CoxeterError> {
        let m = images.len();
        let mut seen = vec![false; m + 1];
        for &v in &images {
            if v == 0 || v > m || std::mem::replace(&mut seen[v], true) {
                return Err(CoxeterError::BadPermutation(format!("{images:?}")));
            }
        }
        if !(2..=255).contains(&m) {
            return Err(CoxeterError::BadPermutation(format!("{images:?}")));
        }
        Ok(PermA { images: images.into_iter().map(|v| v as u8).collect() })
    }

    /// `σ(i)` for `1 ≤ i ≤ n+1`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize).collect()
    }
}

impl CoxeterElement for PermA {
    const TYPE: CoxeterType = CoxeterType::A;
    const MAX_RANK: usize = 6;

    fn identity(rank: usize) -> Self {
        PermA { images: (1..=rank as u8 + 1).collect() }
    }

    fn generator(rank: usize, i: usize) -> Self {
        assert!((1..=rank).contains(&i), "generator index out of range");
        let mut p = Self::identity(rank);
        p.images.swap(i - 1, i);
        p
    }

    fn rank(&self) -> usize {
        self.images.len() - 1
    }

    fn compose(&self, other: &Self) -> Self {
        PermA { images: other.images.iter().map(|&j| self.images[j as usize - 1]).collect() }
    }

    fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize - 1] = i as u8 + 1;
        }
        PermA { images: inv }
    }

    fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }
}

impl fmt::Display for PermA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(u8::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for PermA {
    type Err = CoxeterError;

    fn from_str(s: &str) -> Result<Self, CoxeterError> {
        let values = parse_list(s)?;
        if values.iter().any(|&v| v <= 0) {
            return Err(CoxeterError::BadPermutation(s.to_string()));
        }
        PermA::new(values.into_iter().map(|v| v as usize).collect())
    }
}

/// A signed permutation of `±{1..n}`, stored as the images of `1..=n`;
/// `σ(−i) = −σ(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermB {
    images: Vec<i8>,
}

impl PermB {
    pub fn new(images: Vec<i32>) -> Result<PermB, CoxeterError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || std::mem::replace(&mut seen[a], true) {
                return Err(CoxeterError::BadPermutation(format!("{images:?}")));
            }
        }
        if n == 0 || n > 127 {
            return Err(CoxeterError::BadPermutation(format!("{images:?}")));
        }
        Ok(PermB { images: images.into_iter().map(|v| v as i8).collect() })
    }

    /// `σ(i)` for `i ∈ ±{1..n}`.
    pub fn image(&self, i: i32) -> i32 {
        let v = self.images[i.unsigned_abs() as usize - 1] as i32;
        if i < 0 {
            -v
        } else {
            v
        }
    }

    pub fn images(&self) -> Vec<i32> {
        self.images.iter().map(|&v| v as i32).collect()
    }
}

impl CoxeterElement for PermB {
    const TYPE: CoxeterType = CoxeterType::B;
    const MAX_RANK: usize = 4;

    fn identity(rank: usize) -> Self {
        PermB { images: (1..=rank as i8).collect() }
    }

    /// `s_1` negates 1; `s_i` swaps `i−1` and `i` for `i ≥ 2`.
    fn generator(rank: usize, i: usize) -> Self {
        assert!((1..=rank).contains(&i), "generator index out of range");
        let mut p = Self::identity(rank);
        if i == 1 {
            p.images[0] = -1;
        } else {
            p.images.swap(i - 2, i - 1);
        }
        p
    }

    fn rank(&self) -> usize {
        self.images.len()
    }

    fn compose(&self, other: &Self) -> Self {
        PermB { images: other.images.iter().map(|&j| self.image(j as i32) as i8).collect() }
    }

    fn inverse(&self) -> Self {
        let mut inv = vec![0i8; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            let sign = if v < 0 { -1 } else { 1 };
            inv[v.unsigned_abs() as usize - 1] = sign * (i as i8 + 1);
        }
        PermB { images: inv }
    }

    /// `inv(w) + #{i<j : w(i)+w(j) < 0} + #{i : w(i) < 0}`.
    fn length(&self) -> usize {
        let w: Vec<i32> = self.images();
        let n = w.len();
        let mut l = w.iter().filter(|&&v| v < 0).count();
        for i in 0..n {
            for j in i + 1..n {
                l += usize::from(w[i] > w[j]) + usize::from(w[i] + w[j] < 0);
            }
        }
        l
    }
}

impl fmt::Display for PermB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(i8::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for PermB {
    type Err = CoxeterError;

    fn from_str(s: &str) -> Result<Self, CoxeterError> {
        PermB::new(parse_list(s)?)
    }
}

// "[3,1,2]" or "[−2,1,3]"; the typographic minus is accepted.
fn parse_list(s: &str) -> Result<Vec<i32>, CoxeterError> {
    let bad = || CoxeterError::BadPermutation(s.to_string());
    let inner = s.trim().strip_prefix('[').and_then(|t| t.strip_suffix(']')).ok_or_else(bad)?;
    inner
        .split(',')
        .map(|t| t.trim().replace('\u{2212}', "-").parse::<i32>().map_err(|_| bad()))
        .collect()
}
