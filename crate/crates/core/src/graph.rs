//! Undirected simple graphs on labeled vertices.
//!
//! Vertex identity is the string label; every multi-graph operation
//! matches vertices by label, never by index. Values are immutable
//! after construction.

use crate::error::{Error, Result};
use fixedbitset::FixedBitSet;
use std::collections::HashMap;

/// Which vertex equivalence a reduction quotients by.
///
/// `Multiplication` merges non-adjacent vertices with identical
/// neighborhoods (the ρ reduction); `Expansion` merges adjacent
/// vertices with identical closed neighborhoods elsewhere (ρ′).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReduceMode {
    Multiplication,
    Expansion,
}

#[derive(Debug, Clone)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<FixedBitSet>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.adj == other.adj
    }
}

impl Eq for Graph {}

pub(crate) fn build_index(labels: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(index)
}

impl Graph {
    /// Edgeless graph on the given labels.
    pub fn edgeless<S: Into<String>>(labels: Vec<S>) -> Result<Graph> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let index = build_index(&labels)?;
        let n = labels.len();
        Ok(Graph {
            labels,
            index,
            adj: vec![FixedBitSet::with_capacity(n); n],
        })
    }

    /// Graph from an edge list. Self-loops and unknown labels are rejected.
    pub fn from_edges<S: Into<String>>(labels: Vec<S>, edges: &[(&str, &str)]) -> Result<Graph> {
        let mut g = Graph::edgeless(labels)?;
        for &(u, v) in edges {
            let ui = g.index_of(u)?;
            let vi = g.index_of(v)?;
            if ui == vi {
                return Err(Error::InvariantViolation(format!("self-loop at `{u}`")));
            }
            g.adj[ui].insert(vi);
            g.adj[vi].insert(ui);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u].ones()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones(..)).sum::<usize>() / 2
    }

    /// Edges as index pairs (u, v) with u < v, in index order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in self.adj[u].ones() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Vertex indices sorted by label.
    pub fn lex_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.n()).collect();
        idx.sort_by(|&a, &b| self.labels[a].cmp(&self.labels[b]));
        idx
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut adj = Vec::with_capacity(n);
        for u in 0..n {
            let mut row = self.adj[u].clone();
            row.toggle_range(..);
            row.set(u, false);
            adj.push(row);
        }
        Graph {
            labels: self.labels.clone(),
            index: self.index.clone(),
            adj,
        }
    }

    /// Induced subgraph on `keep`, in the original declaration order.
    pub fn induced(&self, keep: &[&str]) -> Result<Graph> {
        let mut mask = FixedBitSet::with_capacity(self.n());
        for l in keep {
            mask.insert(self.index_of(l)?);
        }
        let old: Vec<usize> = mask.ones().collect();
        let labels: Vec<String> = old.iter().map(|&i| self.labels[i].clone()).collect();
        let mut g = Graph::edgeless(labels)?;
        for (a, &i) in old.iter().enumerate() {
            for (b, &j) in old.iter().enumerate() {
                if self.adj[i].contains(j) {
                    g.adj[a].insert(b);
                }
            }
        }
        Ok(g)
    }

    /// True when every vertex of `self` appears in `other` and adjacency
    /// agrees on the common labels.
    pub fn is_induced_subgraph_of(&self, other: &Graph) -> bool {
        let map: Option<Vec<usize>> = self
            .labels
            .iter()
            .map(|l| other.index.get(l.as_str()).copied())
            .collect();
        let Some(map) = map else { return false };
        for u in 0..self.n() {
            for v in (u + 1)..self.n() {
                if self.adjacent(u, v) != other.adjacent(map[u], map[v]) {
                    return false;
                }
            }
        }
        true
    }

    /// map[i] = index in `self` of `target`'s vertex i; errors unless the
    /// label sets coincide.
    fn label_map(&self, target: &Graph) -> Result<Vec<usize>> {
        if self.n() != target.n() {
            return Err(Error::LabelMismatch);
        }
        target
            .labels
            .iter()
            .map(|l| self.index.get(l.as_str()).copied().ok_or(Error::LabelMismatch))
            .collect()
    }

    /// Edge intersection of graphs sharing one label set; the result
    /// keeps the first input's vertex order.
    pub fn intersection_all(graphs: &[&Graph]) -> Result<Graph> {
        Graph::combine(graphs, true)
    }

    /// Edge union of graphs sharing one label set.
    pub fn union_all(graphs: &[&Graph]) -> Result<Graph> {
        Graph::combine(graphs, false)
    }

    fn combine(graphs: &[&Graph], intersect: bool) -> Result<Graph> {
        let first = *graphs.first().ok_or(Error::EmptyList)?;
        let n = first.n();
        let mut out = first.clone();
        for g in &graphs[1..] {
            let map = g.label_map(first)?;
            for u in 0..n {
                for v in (u + 1)..n {
                    let there = g.adjacent(map[u], map[v]);
                    let here = out.adj[u].contains(v);
                    let keep = if intersect { here && there } else { here || there };
                    out.adj[u].set(v, keep);
                    out.adj[v].set(u, keep);
                }
            }
        }
        Ok(out)
    }

    /// Partition of the vertices by the substitutability relation of the
    /// given mode. Classes are listed by their least member index; members
    /// are in index order.
    pub fn equivalence_classes(&self, mode: ReduceMode) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut class = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for v in 0..n {
            if class[v] != usize::MAX {
                continue;
            }
            let id = classes.len();
            class[v] = id;
            let mut members = vec![v];
            for w in (v + 1)..n {
                if class[w] == usize::MAX && self.substitutable(v, w, mode) {
                    class[w] = id;
                    members.push(w);
                }
            }
            classes.push(members);
        }
        classes
    }

    fn substitutable(&self, v: usize, w: usize, mode: ReduceMode) -> bool {
        let adjacency_wanted = match mode {
            ReduceMode::Multiplication => false,
            ReduceMode::Expansion => true,
        };
        if self.adjacent(v, w) != adjacency_wanted {
            return false;
        }
        let mut nv = self.adj[v].clone();
        nv.set(v, false);
        nv.set(w, false);
        let mut nw = self.adj[w].clone();
        nw.set(v, false);
        nw.set(w, false);
        nv == nw
    }

    /// Quotient by the mode's equivalence: induced subgraph keeping the
    /// lexicographically least label of each class.
    pub fn reduce(&self, mode: ReduceMode) -> Graph {
        let reps: Vec<&str> = self
            .equivalence_classes(mode)
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&i| self.labels[i].as_str())
                    .min()
                    .unwrap()
            })
            .collect();
        self.induced(&reps).unwrap()
    }

    /// Replace each vertex by `counts[label]` pairwise non-adjacent copies
    /// (missing labels default to 1). Copies of v are adjacent to copies
    /// of w exactly when v ∼ w. Copies are named `label#k` when the count
    /// exceeds 1.
    pub fn multiply(&self, counts: &HashMap<String, usize>) -> Result<Graph> {
        for (l, &c) in counts {
            self.index_of(l)?;
            if c < 1 {
                return Err(Error::InvalidCount {
                    label: l.clone(),
                    count: c,
                });
            }
        }
        let (labels, origin) = multiplied_labels(&self.labels, counts)?;
        let mut g = Graph::edgeless(labels)?;
        for (a, &ov) in origin.iter().enumerate() {
            for (b, &ow) in origin.iter().enumerate() {
                if self.adjacent(ov, ow) {
                    g.adj[a].insert(b);
                }
            }
        }
        Ok(g)
    }
}

/// Expand a label list by per-label counts. Returns the new labels and,
/// for each, the index of the original vertex it copies.
pub(crate) fn multiplied_labels(
    labels: &[String],
    counts: &HashMap<String, usize>,
) -> Result<(Vec<String>, Vec<usize>)> {
    let mut out = Vec::new();
    let mut origin = Vec::new();
    for (i, l) in labels.iter().enumerate() {
        let c = counts.get(l).copied().unwrap_or(1);
        if c == 1 {
            out.push(l.clone());
            origin.push(i);
        } else {
            for k in 1..=c {
                out.push(format!("{l}#{k}"));
                origin.push(i);
            }
        }
    }
    let mut seen = HashMap::new();
    for l in &out {
        if seen.insert(l.clone(), ()).is_some() {
            return Err(Error::LabelCollision(l.clone()));
        }
    }
    Ok((out, origin))
}
