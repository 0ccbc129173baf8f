//! Constructive representation builders.
//!
//! Every builder here produces a value that the matching checker in
//! [`crate::verify`] accepts: downset families for arbitrary posets,
//! star subtrees for transitive orientations, intervals for posets of
//! dimension at most 2, boxes in d-space for dimension at most 2d, the
//! point embedding of a box family, composition posets of a set family,
//! and the overlap transform of an intersection family.

use crate::dimension::{dimension, is_two_dimensional, LinearOrder, Realizer};
use crate::error::{Error, Result};
use crate::graph::{build_index, Graph};
use crate::orientation::Orientation;
use crate::poset::Poset;
use fixedbitset::FixedBitSet;
use std::collections::{BTreeSet, HashMap};

/// Vertex-indexed finite sets of integer atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    sets: Vec<BTreeSet<u64>>,
    injective: bool,
}

impl SetFamily {
    /// Every set must be nonempty; the injectivity flag is derived from
    /// pairwise distinctness.
    pub fn new<S: Into<String>>(labels: Vec<S>, sets: Vec<Vec<u64>>) -> Result<SetFamily> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let index = build_index(&labels)?;
        if sets.len() != labels.len() {
            return Err(Error::InvariantViolation(
                "one atom set per vertex required".into(),
            ));
        }
        let sets: Vec<BTreeSet<u64>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        for (i, s) in sets.iter().enumerate() {
            if s.is_empty() {
                return Err(Error::InvariantViolation(format!(
                    "set for `{}` is empty",
                    labels[i]
                )));
            }
        }
        let injective = sets
            .iter()
            .enumerate()
            .all(|(i, s)| sets[i + 1..].iter().all(|t| s != t));
        Ok(SetFamily {
            labels,
            index,
            sets,
            injective,
        })
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

    pub fn set(&self, i: usize) -> &BTreeSet<u64> {
        &self.sets[i]
    }

    pub fn is_injective(&self) -> bool {
        self.injective
    }

    /// The first `len` sets, as a family on the same labels.
    pub fn prefix(&self, len: usize) -> SetFamily {
        let labels = self.labels[..len].to_vec();
        let sets = self.sets[..len].iter().map(|s| s.iter().copied().collect()).collect();
        SetFamily::new(labels, sets).expect("prefix of a valid family")
    }
}

/// Per-vertex closed integer interval [l, r].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalRep {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    intervals: Vec<(i64, i64)>,
}

impl IntervalRep {
    /// Requires l < r per vertex, pairwise distinct left endpoints, and
    /// pairwise distinct right endpoints.
    pub fn new<S: Into<String>>(labels: Vec<S>, intervals: Vec<(i64, i64)>) -> Result<IntervalRep> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let index = build_index(&labels)?;
        if intervals.len() != labels.len() {
            return Err(Error::InvariantViolation(
                "one interval per vertex required".into(),
            ));
        }
        check_axis(&labels, &intervals)?;
        Ok(IntervalRep {
            labels,
            index,
            intervals,
        })
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

    pub fn interval(&self, i: usize) -> (i64, i64) {
        self.intervals[i]
    }

    /// View as boxes in 1-space.
    pub fn to_box_rep(&self) -> BoxRep {
        BoxRep {
            labels: self.labels.clone(),
            index: self.index.clone(),
            d: 1,
            boxes: self.intervals.iter().map(|&iv| vec![iv]).collect(),
        }
    }
}

fn check_axis(labels: &[String], intervals: &[(i64, i64)]) -> Result<()> {
    for (i, &(l, r)) in intervals.iter().enumerate() {
        if l >= r {
            return Err(Error::InvariantViolation(format!(
                "interval for `{}` must satisfy l < r, got [{l}, {r}]",
                labels[i]
            )));
        }
        for (j, &(l2, r2)) in intervals.iter().enumerate().skip(i + 1) {
            if l == l2 || r == r2 {
                return Err(Error::InvariantViolation(format!(
                    "`{}` and `{}` share an endpoint",
                    labels[i], labels[j]
                )));
            }
        }
    }
    Ok(())
}

/// Per-vertex iso-oriented box: d closed intervals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxRep {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    d: usize,
    boxes: Vec<Vec<(i64, i64)>>,
}

impl BoxRep {
    /// Requires d ≥ 1, d intervals per vertex, and interval-rep
    /// invariants on every axis.
    pub fn new<S: Into<String>>(
        labels: Vec<S>,
        d: usize,
        boxes: Vec<Vec<(i64, i64)>>,
    ) -> Result<BoxRep> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let index = build_index(&labels)?;
        if d < 1 {
            return Err(Error::InvalidD);
        }
        if boxes.len() != labels.len() {
            return Err(Error::InvariantViolation("one box per vertex required".into()));
        }
        for (i, b) in boxes.iter().enumerate() {
            if b.len() != d {
                return Err(Error::MalformedBox(format!(
                    "box for `{}` has {} axes, expected {d}",
                    labels[i],
                    b.len()
                )));
            }
        }
        for axis in 0..d {
            let column: Vec<(i64, i64)> = boxes.iter().map(|b| b[axis]).collect();
            check_axis(&labels, &column)
                .map_err(|e| Error::MalformedBox(format!("axis {}: {e}", axis + 1)))?;
        }
        Ok(BoxRep {
            labels,
            index,
            d,
            boxes,
        })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn d(&self) -> usize {
        self.d
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

    pub fn box_intervals(&self, i: usize) -> &[(i64, i64)] {
        &self.boxes[i]
    }
}

/// Star subtrees: the center atom is 0, pendant atoms are 1..=n, and
/// vertex k's subtree is {0} ∪ leaves(k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarSubtreeRep {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    leaves: Vec<BTreeSet<usize>>,
}

impl StarSubtreeRep {
    /// Leaf sets live in 1..=n and the k-th vertex's set must contain k.
    pub fn new<S: Into<String>>(labels: Vec<S>, leaves: Vec<Vec<usize>>) -> Result<StarSubtreeRep> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let index = build_index(&labels)?;
        let n = labels.len();
        if leaves.len() != n {
            return Err(Error::InvariantViolation(
                "one leaf set per vertex required".into(),
            ));
        }
        let leaves: Vec<BTreeSet<usize>> = leaves.into_iter().map(|s| s.into_iter().collect()).collect();
        for (k, s) in leaves.iter().enumerate() {
            if !s.contains(&(k + 1)) {
                return Err(Error::InvariantViolation(format!(
                    "subtree for `{}` misses its own pendant {}",
                    labels[k],
                    k + 1
                )));
            }
            if s.iter().any(|&leaf| leaf == 0 || leaf > n) {
                return Err(Error::InvariantViolation(format!(
                    "subtree for `{}` uses a pendant outside 1..={n}",
                    labels[k]
                )));
            }
        }
        Ok(StarSubtreeRep {
            labels,
            index,
            leaves,
        })
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

    pub fn leaf_set(&self, i: usize) -> &BTreeSet<usize> {
        &self.leaves[i]
    }

    /// The full subtree {0} ∪ leaves as atoms.
    pub fn subtree(&self, i: usize) -> BTreeSet<u64> {
        std::iter::once(0u64)
            .chain(self.leaves[i].iter().map(|&l| l as u64))
            .collect()
    }
}

/// Theorem-style downset family: S_k = { i : x_i ≤ x_k }, atoms 1-based.
pub fn downset_representation(p: &Poset) -> SetFamily {
    let n = p.n();
    let mut sets = Vec::with_capacity(n);
    for k in 0..n {
        let mut s: Vec<u64> = p.down_set(k).ones().map(|i| (i + 1) as u64).collect();
        s.push((k + 1) as u64);
        sets.push(s);
    }
    let fam = SetFamily::new(p.labels().to_vec(), sets).expect("downsets are nonempty");
    debug_assert!(fam.is_injective());
    fam
}

/// Star subtrees from a transitive orientation: vertex j's subtree holds
/// the center, its own pendant, and the pendants of all i with i → j.
pub fn star_subtree_representation(o: &Orientation) -> Result<StarSubtreeRep> {
    if !o.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let n = o.n();
    let mut leaves = vec![Vec::new(); n];
    for (j, set) in leaves.iter_mut().enumerate() {
        set.push(j + 1);
    }
    for (i, j) in o.directed_pairs() {
        leaves[j].push(i + 1);
    }
    StarSubtreeRep::new(o.base().labels().to_vec(), leaves)
}

fn intervals_from_pair(p: &Poset, first: &LinearOrder, second: &LinearOrder) -> Result<Vec<(i64, i64)>> {
    let n = p.n() as i64;
    let r1 = first.ranks_in(p)?;
    let r2 = second.ranks_in(p)?;
    Ok((0..p.n())
        .map(|i| {
            let rank1 = (r1[i] + 1) as i64;
            let rank2 = (r2[i] + 1) as i64;
            (n - rank1, n + rank2)
        })
        .collect())
}

/// Interval containment representation of a poset of dimension ≤ 2:
/// from the 2-realizer (L1, L2), vertex x maps to
/// [n − rank_L1(x), n + rank_L2(x)].
pub fn interval_representation(p: &Poset) -> Result<IntervalRep> {
    let Some(realizer) = is_two_dimensional(p) else {
        return Err(Error::DimensionTooHigh { dim: 3, limit: 2 });
    };
    let intervals = intervals_from_pair(p, &realizer[0], &realizer[1])?;
    IntervalRep::new(p.labels().to_vec(), intervals)
}

/// Box containment representation in d-space for a poset of dimension
/// ≤ 2d: consecutive realizer members pair into the interval formula on
/// each axis. A short realizer is padded by repeating its last member.
pub fn box_representation(p: &Poset, d: usize) -> Result<BoxRep> {
    if d < 1 {
        return Err(Error::InvalidD);
    }
    if p.n() == 0 {
        return BoxRep::new(Vec::<String>::new(), d, Vec::new());
    }
    let mut realizer: Realizer = match is_two_dimensional(p) {
        Some(r) => r,
        None => match dimension(p, 2 * d) {
            Ok(res) => res.witness,
            Err(Error::BudgetExceeded { lower, .. }) => {
                return Err(Error::DimensionTooHigh {
                    dim: lower,
                    limit: 2 * d,
                })
            }
            Err(e) => return Err(e),
        },
    };
    if realizer.len() > 2 * d {
        // only possible for the 2-realizer of a chain at d < 1, ruled out above
        return Err(Error::DimensionTooHigh {
            dim: realizer.len(),
            limit: 2 * d,
        });
    }
    let last = realizer.last().expect("nonempty realizer").clone();
    while realizer.len() < 2 * d {
        realizer.push(last.clone());
    }
    let mut boxes = vec![Vec::with_capacity(d); p.n()];
    for axis in 0..d {
        let column = intervals_from_pair(p, &realizer[2 * axis], &realizer[2 * axis + 1])?;
        for (i, iv) in column.into_iter().enumerate() {
            boxes[i].push(iv);
        }
    }
    BoxRep::new(p.labels().to_vec(), d, boxes)
}

/// Map each box to the 2d-coordinate point (a_1, m − b_1, …, a_d, m − b_d)
/// with m above every right endpoint. A box properly contains another iff
/// its point is coordinatewise strictly below the other's.
pub fn boxes_to_embedding(b: &BoxRep) -> Result<Vec<Vec<i64>>> {
    if b.d < 1 {
        return Err(Error::MalformedBox("dimension must be at least 1".into()));
    }
    let m = 1 + b
        .boxes
        .iter()
        .flat_map(|bx| bx.iter().map(|&(_, r)| r))
        .max()
        .unwrap_or(0);
    Ok(b.boxes
        .iter()
        .map(|bx| {
            let mut point = Vec::with_capacity(2 * b.d);
            for &(l, r) in bx {
                point.push(l);
                point.push(m - r);
            }
            point
        })
        .collect())
}

/// Containment order recovered from an embedding: x < y iff x's point
/// strictly dominates y's in every coordinate (smaller point = larger
/// box under the embedding formula).
pub fn embedding_order(labels: &[String], points: &[Vec<i64>]) -> Result<Poset> {
    if labels.len() != points.len() {
        return Err(Error::InvariantViolation(
            "one point per label required".into(),
        ));
    }
    let n = labels.len();
    let mut lt = vec![FixedBitSet::with_capacity(n); n];
    for x in 0..n {
        for y in 0..n {
            if x != y
                && points[x].len() == points[y].len()
                && points[x].iter().zip(&points[y]).all(|(a, b)| a > b)
            {
                lt[x].insert(y);
            }
        }
    }
    build_index(labels)?;
    Ok(Poset::from_closed(labels.to_vec(), lt))
}

/// The containment poset of k copies of each member of `sigma`; copies
/// are named `label#copy` and stay mutually incomparable.
pub fn composition_poset(sigma: &SetFamily, k: usize) -> Result<Poset> {
    if k < 1 {
        return Err(Error::InvariantViolation(
            "multiplicity must be at least 1".into(),
        ));
    }
    let mut labels = Vec::with_capacity(sigma.n() * k);
    let mut origin = Vec::with_capacity(sigma.n() * k);
    for i in 0..sigma.n() {
        for copy in 1..=k {
            labels.push(format!("{}#{copy}", sigma.label(i)));
            origin.push(i);
        }
    }
    build_index(&labels).map_err(|e| match e {
        Error::DuplicateLabel(l) => Error::LabelCollision(l),
        other => other,
    })?;
    let total = labels.len();
    let mut lt = vec![FixedBitSet::with_capacity(total); total];
    for a in 0..total {
        for b in 0..total {
            let (si, sj) = (sigma.set(origin[a]), sigma.set(origin[b]));
            if si != sj && si.is_subset(sj) {
                lt[a].insert(b);
            }
        }
    }
    Ok(Poset::from_closed(labels, lt))
}

/// Tag every set with a fresh atom so that two tagged sets overlap
/// exactly when the originals intersect. The result is injective.
pub fn overlap_from_intersection(sigma: &SetFamily) -> SetFamily {
    let base = sigma
        .sets
        .iter()
        .flat_map(|s| s.iter().copied())
        .max()
        .unwrap_or(0);
    let sets: Vec<Vec<u64>> = sigma
        .sets
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let mut v: Vec<u64> = s.iter().copied().collect();
            v.push(base + 1 + i as u64);
            v
        })
        .collect();
    let out = SetFamily::new(sigma.labels.clone(), sets).expect("tagged sets are nonempty");
    debug_assert!(out.is_injective());
    out
}

/// A graph has a disjointedness representation by a family exactly when
/// its complement has an intersection representation by the same family.
pub fn disjointedness_complement(g: &Graph) -> Graph {
    g.complement()
}
