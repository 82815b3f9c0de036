use super::{OrderError, Poset};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write;

/// On-disk poset: `{"n": .., "covers": [[x, y], ..], "labels": [..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetFile {
    pub n: usize,
    pub covers: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&Poset> for PosetFile {
    fn from(p: &Poset) -> Self {
        PosetFile {
            n: p.len(),
            covers: p.covers().iter().map(|&(x, y)| [x, y]).collect(),
            labels: p.labels().map(<[String]>::to_vec),
        }
    }
}

impl TryFrom<PosetFile> for Poset {
    type Error = OrderError;

    fn try_from(f: PosetFile) -> Result<Self, OrderError> {
        let p = Poset::from_covers(f.n, f.covers.iter().map(|c| (c[0], c[1])))?;
        match f.labels {
            Some(l) => p.with_labels(l),
            None => Ok(p),
        }
    }
}

pub fn poset_to_json(p: &Poset) -> String {
    serde_json::to_string_pretty(&PosetFile::from(p)).expect("poset serialises")
}

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("malformed poset JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Order(#[from] OrderError),
}

pub fn poset_from_json(s: &str) -> Result<Poset, ParseError> {
    let f: PosetFile = serde_json::from_str(s)?;
    Ok(Poset::try_from(f)?)
}

/// Graphviz source with one node per element and one edge per cover, ranked
/// by height so the minimum sits at the bottom.
pub fn poset_to_dot(p: &Poset, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", quote(name));
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  node [shape=circle, fontsize=10];");
    let mut ranks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (x, h) in p.heights().into_iter().enumerate() {
        ranks.entry(h).or_default().push(x);
    }
    for x in 0..p.len() {
        let _ = writeln!(out, "  {x} [label={}];", quote(&p.label(x)));
    }
    for members in ranks.values() {
        let ids: Vec<String> = members.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "  {{ rank=same; {}; }}", ids.join("; "));
    }
    for &(x, y) in p.covers() {
        let _ = writeln!(out, "  {x} -> {y};");
    }
    out.push_str("}\n");
    out
}

pub(crate) fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}
