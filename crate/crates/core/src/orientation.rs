//! An orientation assigns every edge of a graph exactly one direction.
//!
//! Directed edges x → y are read as x > y in the matching poset, so a
//! transitive orientation converts to a strict partial order and back.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poset::Poset;
use fixedbitset::FixedBitSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    base: Graph,
    /// dir[i] contains j iff the edge {i, j} is oriented i → j.
    dir: Vec<FixedBitSet>,
}

impl Orientation {
    /// Wrap a direction assignment; every edge of `base` must receive
    /// exactly one direction and non-edges none.
    pub fn new(base: Graph, dir: Vec<FixedBitSet>) -> Result<Orientation> {
        let n = base.n();
        if dir.len() != n {
            return Err(Error::InvariantViolation(
                "direction rows do not match vertex count".into(),
            ));
        }
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                let forward = dir[u].contains(v);
                let backward = dir[v].contains(u);
                if base.adjacent(u, v) {
                    if forward == backward {
                        return Err(Error::InvariantViolation(format!(
                            "edge {{{}, {}}} must be oriented exactly one way",
                            base.label(u),
                            base.label(v)
                        )));
                    }
                } else if forward || backward {
                    return Err(Error::InvariantViolation(format!(
                        "non-edge {{{}, {}}} carries a direction",
                        base.label(u),
                        base.label(v)
                    )));
                }
            }
        }
        Ok(Orientation { base, dir })
    }

    /// Orientation from directed label pairs (from, to); must cover every
    /// edge of `base` exactly once.
    pub fn from_pairs(base: Graph, pairs: &[(&str, &str)]) -> Result<Orientation> {
        let n = base.n();
        let mut dir = vec![FixedBitSet::with_capacity(n); n];
        for &(x, y) in pairs {
            let i = base.index_of(x)?;
            let j = base.index_of(y)?;
            dir[i].insert(j);
        }
        Orientation::new(base, dir)
    }

    pub(crate) fn from_raw(base: Graph, dir: Vec<FixedBitSet>) -> Orientation {
        Orientation { base, dir }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    /// True iff the edge {u, v} is oriented u → v.
    pub fn forward(&self, u: usize, v: usize) -> bool {
        self.dir[u].contains(v)
    }

    /// Directed edges (from, to) sorted by index pair.
    pub fn directed_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in self.dir[u].ones() {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        for u in 0..self.n() {
            for v in self.dir[u].ones() {
                // u → v → w requires u → w
                if !self.dir[v].is_subset(&self.dir[u]) {
                    return false;
                }
            }
        }
        true
    }

    /// Reverse every edge.
    pub fn reversed(&self) -> Orientation {
        let n = self.n();
        let mut dir = vec![FixedBitSet::with_capacity(n); n];
        for (u, v) in self.directed_pairs() {
            dir[v].insert(u);
        }
        Orientation {
            base: self.base.clone(),
            dir,
        }
    }

    /// Poset with y < x for every directed edge x → y.
    pub fn to_poset(&self) -> Result<Poset> {
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        let n = self.n();
        let mut lt = vec![FixedBitSet::with_capacity(n); n];
        for (u, v) in self.directed_pairs() {
            lt[v].insert(u);
        }
        Ok(Poset::from_closed(self.base.labels().to_vec(), lt))
    }

    /// Orientation of the comparability graph of `p`, directed from
    /// greater to lesser.
    pub fn from_poset(p: &Poset) -> Orientation {
        let base = p.comparability_graph();
        let n = p.n();
        let mut dir = vec![FixedBitSet::with_capacity(n); n];
        for (i, j) in p.relation_pairs() {
            dir[j].insert(i);
        }
        Orientation { base, dir }
    }

    /// Restriction to the induced subgraph on `keep`.
    pub fn restrict(&self, keep: &[&str]) -> Result<Orientation> {
        let sub = self.base.induced(keep)?;
        let n = sub.n();
        let mut dir = vec![FixedBitSet::with_capacity(n); n];
        for a in 0..n {
            let i = self.base.index_of(sub.label(a))?;
            for b in 0..n {
                let j = self.base.index_of(sub.label(b))?;
                if self.forward(i, j) {
                    dir[a].insert(b);
                }
            }
        }
        Ok(Orientation { base: sub, dir })
    }
}
