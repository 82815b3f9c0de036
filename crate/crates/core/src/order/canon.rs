use super::Poset;
use std::fmt;

/// Label-independent encoding of a poset: two posets are isomorphic exactly
/// when their canonical forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u32>);

impl CanonicalForm {
    pub fn to_bytes(&self) -> Vec<u8> {
        self.0.iter().flat_map(|v| v.to_le_bytes()).collect()
    }

    pub fn size(&self) -> usize {
        self.0.first().copied().unwrap_or(0) as usize
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.to_bytes() {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

struct Search<'a> {
    p: &'a Poset,
    best: Option<(Vec<u32>, Vec<usize>)>,
}

impl Search<'_> {
    // Colour refinement: a vertex's new colour is the rank of
    // (old colour, sorted colours above, sorted colours below).
    fn refine(&self, colours: &mut [u32]) {
        let n = self.p.len();
        let mut classes = count_classes(colours);
        loop {
            let mut sigs: Vec<(u32, Vec<u32>, Vec<u32>, usize)> = (0..n)
                .map(|v| {
                    let mut ups: Vec<u32> = self.p.covers_of(v).iter().map(|&w| colours[w]).collect();
                    let mut downs: Vec<u32> =
                        self.p.covered_by(v).iter().map(|&w| colours[w]).collect();
                    ups.sort_unstable();
                    downs.sort_unstable();
                    (colours[v], ups, downs, v)
                })
                .collect();
            sigs.sort_unstable_by(|a, b| (&a.0, &a.1, &a.2).cmp(&(&b.0, &b.1, &b.2)));
            let mut rank = 0u32;
            for i in 0..n {
                if i > 0 && (&sigs[i].0, &sigs[i].1, &sigs[i].2) != (&sigs[i - 1].0, &sigs[i - 1].1, &sigs[i - 1].2) {
                    rank = i as u32;
                }
                colours[sigs[i].3] = rank;
            }
            let now = count_classes(colours);
            if now == classes {
                return;
            }
            classes = now;
        }
    }

    fn run(&mut self, mut colours: Vec<u32>) {
        self.refine(&mut colours);
        let n = self.p.len();
        // Target cell: the smallest colour shared by more than one vertex.
        let mut counts = vec![0u32; n];
        for &c in &colours {
            counts[c as usize] += 1;
        }
        let target = (0..n).find(|&c| counts[c] > 1);
        let Some(cell) = target else {
            self.leaf(&colours);
            return;
        };
        let members: Vec<usize> = (0..n).filter(|&v| colours[v] as usize == cell).collect();
        for &v in &members {
            // Individualise v: it keeps the cell's colour, the others move up by one.
            let next: Vec<u32> = colours
                .iter()
                .enumerate()
                .map(|(w, &c)| if c as usize == cell && w != v { c + 1 } else { c })
                .collect();
            self.run(next);
        }
    }

    fn leaf(&mut self, colours: &[u32]) {
        let mut edges: Vec<(u32, u32)> =
            self.p.covers().iter().map(|&(x, y)| (colours[x], colours[y])).collect();
        edges.sort_unstable();
        let mut code = Vec::with_capacity(2 + 2 * edges.len());
        code.push(self.p.len() as u32);
        code.push(edges.len() as u32);
        for (a, b) in edges {
            code.push(a);
            code.push(b);
        }
        let better = match &self.best {
            None => true,
            Some((b, _)) => code < *b,
        };
        if better {
            let perm = colours.iter().map(|&c| c as usize).collect();
            self.best = Some((code, perm));
        }
    }
}

fn count_classes(colours: &[u32]) -> usize {
    let mut c: Vec<u32> = colours.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Canonical form plus the relabelling `x ↦ perm[x]` that produces it.
pub fn canonical_labeling(p: &Poset) -> (CanonicalForm, Vec<usize>) {
    if p.is_empty() {
        return (CanonicalForm(vec![0, 0]), Vec::new());
    }
    let mut s = Search { p, best: None };
    s.run(vec![0; p.len()]);
    let (code, perm) = s.best.expect("search visits at least one leaf");
    (CanonicalForm(code), perm)
}

pub fn canonical_form(p: &Poset) -> CanonicalForm {
    canonical_labeling(p).0
}

pub fn are_isomorphic(p: &Poset, q: &Poset) -> bool {
    p.len() == q.len() && p.covers().len() == q.covers().len() && canonical_form(p) == canonical_form(q)
}

/// An order isomorphism `p → q` as an index map, if one exists.
pub fn find_isomorphism(p: &Poset, q: &Poset) -> Option<Vec<usize>> {
    if p.len() != q.len() {
        return None;
    }
    let (cp, pp) = canonical_labeling(p);
    let (cq, pq) = canonical_labeling(q);
    if cp != cq {
        return None;
    }
    let mut inv_q = vec![0; q.len()];
    for (x, &c) in pq.iter().enumerate() {
        inv_q[c] = x;
    }
    Some(pp.iter().map(|&c| inv_q[c]).collect())
}
