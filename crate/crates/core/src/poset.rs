//! Strict partial orders on labeled elements, stored transitively closed.

use crate::error::{Error, Result};
use crate::graph::{build_index, multiplied_labels, Graph};
use fixedbitset::FixedBitSet;
use std::collections::HashMap;

#[derive(Debug, Clone)]
pub struct Poset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    /// lt[i] contains j iff element i is strictly below element j.
    lt: Vec<FixedBitSet>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.lt == other.lt
    }
}

impl Eq for Poset {}

impl Poset {
    pub fn antichain<S: Into<String>>(labels: Vec<S>) -> Result<Poset> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let index = build_index(&labels)?;
        let n = labels.len();
        Ok(Poset {
            labels,
            index,
            lt: vec![FixedBitSet::with_capacity(n); n],
        })
    }

    /// Chain in the given order (first label is the minimum).
    pub fn chain<S: Into<String>>(labels: Vec<S>) -> Result<Poset> {
        let mut p = Poset::antichain(labels)?;
        for i in 0..p.n() {
            for j in (i + 1)..p.n() {
                p.lt[i].insert(j);
            }
        }
        Ok(p)
    }

    /// Build the transitive closure of `pairs` (each meaning lesser < greater).
    /// Rejects relations whose closure would relate an element to itself.
    pub fn from_pairs<S: Into<String>>(labels: Vec<S>, pairs: &[(&str, &str)]) -> Result<Poset> {
        let mut p = Poset::antichain(labels)?;
        let n = p.n();
        let mut direct = vec![FixedBitSet::with_capacity(n); n];
        for &(lo, hi) in pairs {
            let i = p.index_of(lo)?;
            let j = p.index_of(hi)?;
            direct[i].insert(j);
            p.lt[i].insert(j);
        }
        transitive_close(&mut p.lt);
        for i in 0..n {
            if p.lt[i].contains(i) {
                return Err(Error::CycleDetected {
                    cycle: witness_cycle(&direct, i)
                        .iter()
                        .map(|&v| p.labels[v].clone())
                        .collect(),
                });
            }
        }
        Ok(p)
    }

    /// Wrap an already transitively closed strict order matrix.
    pub(crate) fn from_closed(labels: Vec<String>, lt: Vec<FixedBitSet>) -> Poset {
        let index = build_index(&labels).expect("labels validated by caller");
        debug_assert!(is_strict_order(&lt));
        Poset { labels, index, lt }
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

    pub fn less(&self, i: usize, j: usize) -> bool {
        self.lt[i].contains(j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.less(i, j) || self.less(j, i)
    }

    pub fn is_chain(&self) -> bool {
        (0..self.n()).all(|i| (i + 1..self.n()).all(|j| self.comparable(i, j)))
    }

    /// Strict order pairs (i, j) with i < j in the order, by index.
    pub fn relation_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n() {
            for j in self.lt[i].ones() {
                out.push((i, j));
            }
        }
        out
    }

    pub fn relation_count(&self) -> usize {
        self.lt.iter().map(|r| r.count_ones(..)).sum()
    }

    /// Indices strictly below i.
    pub fn down_set(&self, i: usize) -> FixedBitSet {
        let mut down = FixedBitSet::with_capacity(self.n());
        for j in 0..self.n() {
            if self.less(j, i) {
                down.insert(j);
            }
        }
        down
    }

    /// Indices strictly above i.
    pub fn up_set(&self, i: usize) -> FixedBitSet {
        self.lt[i].clone()
    }

    /// Induced subposet on `keep`, in the original declaration order.
    /// Restriction of a closed order is closed.
    pub fn induced(&self, keep: &[&str]) -> Result<Poset> {
        let mut mask = FixedBitSet::with_capacity(self.n());
        for l in keep {
            mask.insert(self.index_of(l)?);
        }
        let old: Vec<usize> = mask.ones().collect();
        let labels: Vec<String> = old.iter().map(|&i| self.labels[i].clone()).collect();
        let mut p = Poset::antichain(labels)?;
        for (a, &i) in old.iter().enumerate() {
            for (b, &j) in old.iter().enumerate() {
                if self.less(i, j) {
                    p.lt[a].insert(b);
                }
            }
        }
        Ok(p)
    }

    /// True when every element of `self` appears in `other` and the order
    /// agrees on the common labels (induced subposet by label).
    pub fn is_induced_subposet_of(&self, other: &Poset) -> bool {
        let map: Option<Vec<usize>> = self
            .labels
            .iter()
            .map(|l| other.index.get(l.as_str()).copied())
            .collect();
        let Some(map) = map else { return false };
        for i in 0..self.n() {
            for j in 0..self.n() {
                if i != j && self.less(i, j) != other.less(map[i], map[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// x < y in the result iff x < y in every input. Inputs must share one
    /// label set; the result keeps the first input's element order.
    pub fn intersection_all(posets: &[&Poset]) -> Result<Poset> {
        let first = *posets.first().ok_or(Error::EmptyList)?;
        let n = first.n();
        let mut out = first.clone();
        for p in &posets[1..] {
            if p.n() != n {
                return Err(Error::LabelMismatch);
            }
            let map: Result<Vec<usize>> = first
                .labels
                .iter()
                .map(|l| p.index.get(l.as_str()).copied().ok_or(Error::LabelMismatch))
                .collect();
            let map = map?;
            for i in 0..n {
                for j in 0..n {
                    if out.lt[i].contains(j) && !p.less(map[i], map[j]) {
                        out.lt[i].set(j, false);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Undirected graph joining exactly the comparable pairs.
    pub fn comparability_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for (i, j) in self.relation_pairs() {
            edges.push((self.labels[i].clone(), self.labels[j].clone()));
        }
        let pairs: Vec<(&str, &str)> = edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        Graph::from_edges(self.labels.clone(), &pairs).unwrap()
    }

    /// Partition by substitutability: x ≈ y iff x = y, or x and y are
    /// incomparable and relate identically to every other element.
    pub fn equivalence_classes(&self) -> Vec<Vec<usize>> {
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
                if class[w] == usize::MAX && self.substitutable(v, w) {
                    class[w] = id;
                    members.push(w);
                }
            }
            classes.push(members);
        }
        classes
    }

    fn substitutable(&self, v: usize, w: usize) -> bool {
        if self.comparable(v, w) {
            return false;
        }
        let mut uv = self.lt[v].clone();
        uv.set(w, false);
        let mut uw = self.lt[w].clone();
        uw.set(v, false);
        if uv != uw {
            return false;
        }
        let mut dv = self.down_set(v);
        dv.set(w, false);
        let mut dw = self.down_set(w);
        dw.set(v, false);
        dv == dw
    }

    /// r(P): induced subposet keeping the lexicographically least label of
    /// each substitutability class.
    pub fn reduce(&self) -> Poset {
        let reps: Vec<&str> = self
            .equivalence_classes()
            .iter()
            .map(|c| c.iter().map(|&i| self.labels[i].as_str()).min().unwrap())
            .collect();
        self.induced(&reps).unwrap()
    }

    /// Replace each element by `counts[label]` pairwise incomparable copies
    /// with the original's outside relations (missing labels default to 1).
    pub fn multiply(&self, counts: &HashMap<String, usize>) -> Result<Poset> {
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
        let mut p = Poset::antichain(labels)?;
        for (a, &ov) in origin.iter().enumerate() {
            for (b, &ow) in origin.iter().enumerate() {
                if self.less(ov, ow) {
                    p.lt[a].insert(b);
                }
            }
        }
        Ok(p)
    }
}

/// In-place Warshall closure of a relation given as bit rows.
pub(crate) fn transitive_close(rel: &mut [FixedBitSet]) {
    let n = rel.len();
    for k in 0..n {
        let row_k = rel[k].clone();
        for i in 0..n {
            if rel[i].contains(k) {
                rel[i].union_with(&row_k);
            }
        }
    }
}

pub(crate) fn is_strict_order(lt: &[FixedBitSet]) -> bool {
    let n = lt.len();
    for i in 0..n {
        if lt[i].contains(i) {
            return false;
        }
        for j in lt[i].ones() {
            if lt[j].contains(i) {
                return false;
            }
            for k in lt[j].ones() {
                if !lt[i].contains(k) {
                    return false;
                }
            }
        }
    }
    true
}

/// Shortest cycle through `start` in the raw pair digraph, returned with
/// the start repeated at the end.
fn witness_cycle(direct: &[FixedBitSet], start: usize) -> Vec<usize> {
    let n = direct.len();
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::from([start]);
    let mut seen = FixedBitSet::with_capacity(n);
    seen.insert(start);
    while let Some(u) = queue.pop_front() {
        for v in direct[u].ones() {
            if v == start {
                let mut path = vec![start, u];
                let mut cur = u;
                while parent[cur] != usize::MAX {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                path.push(start);
                return path;
            }
            if !seen.contains(v) {
                seen.insert(v);
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    unreachable!("closure reported a cycle through this element")
}
