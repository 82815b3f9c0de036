use super::{OrderError, Poset};
use std::collections::VecDeque;

/// `d(x, y)`: the fewest descending covers on any covering path from `x` to `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    d: Vec<u32>,
}

impl DistanceTable {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, x: usize, y: usize) -> u32 {
        self.d[x * self.n + y]
    }

    /// `D(x, y, z) = d(x, y) + d(y, z) − d(x, z)`, never negative.
    pub fn big_d(&self, x: usize, y: usize, z: usize) -> u32 {
        let v = self.get(x, y) + self.get(y, z);
        debug_assert!(v >= self.get(x, z), "triangle inequality");
        v - self.get(x, z)
    }
}

/// All-pairs `d` via 0/1 breadth-first search: going up a cover is free,
/// going down costs one.
pub fn distance_table(p: &Poset) -> Result<DistanceTable, OrderError> {
    if !p.is_connected() {
        return Err(OrderError::Disconnected);
    }
    let n = p.len();
    let mut d = vec![u32::MAX; n * n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            let dx = row[x];
            for &y in p.covers_of(x) {
                if dx < row[y] {
                    row[y] = dx;
                    queue.push_front(y);
                }
            }
            for &y in p.covered_by(x) {
                if dx + 1 < row[y] {
                    row[y] = dx + 1;
                    queue.push_back(y);
                }
            }
        }
    }
    Ok(DistanceTable { n, d })
}

/// `D(x, y, z)` for a single triple.
pub fn big_d(p: &Poset, x: usize, y: usize, z: usize) -> Result<u32, OrderError> {
    Ok(distance_table(p)?.big_d(x, y, z))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hexagon() -> Poset {
        // e=0, s1=1, s2=2, s1s2=3, s2s1=4, w0=5
        Poset::from_covers(6, [(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 5)]).unwrap()
    }

    #[test]
    fn hexagon_distances() {
        let t = distance_table(&hexagon()).unwrap();
        assert_eq!(t.get(1, 2), 1);
        assert_eq!(t.get(5, 0), 3);
        assert_eq!(t.get(0, 5), 0);
        assert_eq!(t.big_d(1, 0, 2), 0);
        assert_eq!(t.big_d(3, 3, 4), 0);
    }

    #[test]
    fn disconnected_is_rejected() {
        let p = Poset::from_covers(2, []).unwrap();
        assert_eq!(distance_table(&p), Err(OrderError::Disconnected));
    }
}
