//! Independent representation checkers.
//!
//! Each verifier recomputes the set relation of every vertex pair from
//! the representation alone and compares it against the structure's
//! relation under the requested semantics. Verdicts list every
//! mismatching pair, not just the first.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poset::Poset;
use crate::represent::{BoxRep, IntervalRep, SetFamily, StarSubtreeRep};
use fixedbitset::FixedBitSet;

/// How two assigned sets relate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetRelation {
    Equal,
    ProperSubset,
    ProperSuperset,
    /// Intersecting, neither contained in the other.
    Overlap,
    Disjoint,
}

impl SetRelation {
    pub fn intersects(self) -> bool {
        self != SetRelation::Disjoint
    }

    pub fn proper_containment(self) -> bool {
        matches!(self, SetRelation::ProperSubset | SetRelation::ProperSuperset)
    }
}

impl std::fmt::Display for SetRelation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SetRelation::Equal => "equal",
            SetRelation::ProperSubset => "proper-subset",
            SetRelation::ProperSuperset => "proper-superset",
            SetRelation::Overlap => "overlap",
            SetRelation::Disjoint => "disjoint",
        };
        f.write_str(s)
    }
}

/// What the structure demanded of a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WantedRelation {
    Edge,
    NonEdge,
    Less,
    Greater,
    Incomparable,
}

impl std::fmt::Display for WantedRelation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            WantedRelation::Edge => "edge",
            WantedRelation::NonEdge => "non-edge",
            WantedRelation::Less => "less",
            WantedRelation::Greater => "greater",
            WantedRelation::Incomparable => "incomparable",
        };
        f.write_str(s)
    }
}

/// One mismatching pair, by structure vertex index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    pub expected: WantedRelation,
    pub observed: SetRelation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl Verdict {
    fn from_violations(violations: Vec<Violation>) -> Verdict {
        Verdict {
            ok: violations.is_empty(),
            violations,
        }
    }
}

/// Anything assigning a comparable set-like object to each vertex.
pub trait Representation {
    fn len(&self) -> usize;
    fn is_empty(&self) -> bool {
        self.len() == 0
    }
    fn label_at(&self, i: usize) -> &str;
    fn lookup(&self, label: &str) -> Option<usize>;
    fn relation(&self, i: usize, j: usize) -> SetRelation;
}

impl Representation for SetFamily {
    fn len(&self) -> usize {
        self.n()
    }
    fn label_at(&self, i: usize) -> &str {
        self.label(i)
    }
    fn lookup(&self, label: &str) -> Option<usize> {
        self.index_of(label).ok()
    }
    fn relation(&self, i: usize, j: usize) -> SetRelation {
        let (a, b) = (self.set(i), self.set(j));
        if a == b {
            SetRelation::Equal
        } else if a.is_subset(b) {
            SetRelation::ProperSubset
        } else if b.is_subset(a) {
            SetRelation::ProperSuperset
        } else if a.intersection(b).next().is_some() {
            SetRelation::Overlap
        } else {
            SetRelation::Disjoint
        }
    }
}

fn interval_relation(a: (i64, i64), b: (i64, i64)) -> SetRelation {
    if a == b {
        SetRelation::Equal
    } else if b.0 <= a.0 && a.1 <= b.1 {
        SetRelation::ProperSubset
    } else if a.0 <= b.0 && b.1 <= a.1 {
        SetRelation::ProperSuperset
    } else if a.1 < b.0 || b.1 < a.0 {
        SetRelation::Disjoint
    } else {
        SetRelation::Overlap
    }
}

impl Representation for IntervalRep {
    fn len(&self) -> usize {
        self.n()
    }
    fn label_at(&self, i: usize) -> &str {
        self.label(i)
    }
    fn lookup(&self, label: &str) -> Option<usize> {
        self.index_of(label).ok()
    }
    fn relation(&self, i: usize, j: usize) -> SetRelation {
        interval_relation(self.interval(i), self.interval(j))
    }
}

impl Representation for BoxRep {
    fn len(&self) -> usize {
        self.n()
    }
    fn label_at(&self, i: usize) -> &str {
        self.label(i)
    }
    fn lookup(&self, label: &str) -> Option<usize> {
        self.index_of(label).ok()
    }
    fn relation(&self, i: usize, j: usize) -> SetRelation {
        let (a, b) = (self.box_intervals(i), self.box_intervals(j));
        let axes: Vec<SetRelation> = a
            .iter()
            .zip(b.iter())
            .map(|(&x, &y)| interval_relation(x, y))
            .collect();
        if axes.iter().all(|r| *r == SetRelation::Equal) {
            SetRelation::Equal
        } else if axes
            .iter()
            .all(|r| matches!(r, SetRelation::Equal | SetRelation::ProperSubset))
        {
            SetRelation::ProperSubset
        } else if axes
            .iter()
            .all(|r| matches!(r, SetRelation::Equal | SetRelation::ProperSuperset))
        {
            SetRelation::ProperSuperset
        } else if axes.iter().any(|r| *r == SetRelation::Disjoint) {
            SetRelation::Disjoint
        } else {
            SetRelation::Overlap
        }
    }
}

impl Representation for StarSubtreeRep {
    fn len(&self) -> usize {
        self.n()
    }
    fn label_at(&self, i: usize) -> &str {
        self.label(i)
    }
    fn lookup(&self, label: &str) -> Option<usize> {
        self.index_of(label).ok()
    }
    fn relation(&self, i: usize, j: usize) -> SetRelation {
        let (a, b) = (self.leaf_set(i), self.leaf_set(j));
        // subtrees always share the central vertex, so never disjoint
        if a == b {
            SetRelation::Equal
        } else if a.is_subset(b) {
            SetRelation::ProperSubset
        } else if b.is_subset(a) {
            SetRelation::ProperSuperset
        } else {
            SetRelation::Overlap
        }
    }
}

/// map[i] = representation index for the structure's vertex i.
fn rep_map<R: Representation + ?Sized>(labels: &[String], f: &R) -> Result<Vec<usize>> {
    labels
        .iter()
        .map(|l| {
            f.lookup(l)
                .ok_or_else(|| Error::MissingVertex(l.to_string()))
        })
        .collect()
}

/// Adjacency must coincide with proper containment one way or the other.
pub fn verify_containment_graph<R: Representation + ?Sized>(g: &Graph, f: &R) -> Result<Verdict> {
    let map = rep_map(g.labels(), f)?;
    let mut violations = Vec::new();
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            let observed = f.relation(map[u], map[v]);
            let edge = g.adjacent(u, v);
            if edge != observed.proper_containment() {
                violations.push(Violation {
                    u,
                    v,
                    expected: if edge {
                        WantedRelation::Edge
                    } else {
                        WantedRelation::NonEdge
                    },
                    observed,
                });
            }
        }
    }
    Ok(Verdict::from_violations(violations))
}

/// Strict order must coincide with proper containment, per ordered pair.
pub fn verify_containment_poset<R: Representation + ?Sized>(p: &Poset, f: &R) -> Result<Verdict> {
    let map = rep_map(p.labels(), f)?;
    let mut violations = Vec::new();
    for x in 0..p.n() {
        for y in 0..p.n() {
            if x == y {
                continue;
            }
            let observed = f.relation(map[x], map[y]);
            let wanted = p.less(x, y);
            if wanted != (observed == SetRelation::ProperSubset) {
                violations.push(Violation {
                    u: x,
                    v: y,
                    expected: if wanted {
                        WantedRelation::Less
                    } else if p.less(y, x) {
                        WantedRelation::Greater
                    } else {
                        WantedRelation::Incomparable
                    },
                    observed,
                });
            }
        }
    }
    Ok(Verdict::from_violations(violations))
}

fn verify_graph_semantics(
    g: &Graph,
    f: &SetFamily,
    matches_edge: impl Fn(SetRelation) -> bool,
) -> Result<Verdict> {
    let map = rep_map(g.labels(), f)?;
    let mut violations = Vec::new();
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            let observed = f.relation(map[u], map[v]);
            let edge = g.adjacent(u, v);
            if edge != matches_edge(observed) {
                violations.push(Violation {
                    u,
                    v,
                    expected: if edge {
                        WantedRelation::Edge
                    } else {
                        WantedRelation::NonEdge
                    },
                    observed,
                });
            }
        }
    }
    Ok(Verdict::from_violations(violations))
}

/// Adjacency iff the assigned sets intersect.
pub fn verify_intersection(g: &Graph, f: &SetFamily) -> Result<Verdict> {
    verify_graph_semantics(g, f, SetRelation::intersects)
}

/// Adjacency iff the assigned sets intersect without containment either way.
pub fn verify_overlap(g: &Graph, f: &SetFamily) -> Result<Verdict> {
    verify_graph_semantics(g, f, |r| r == SetRelation::Overlap)
}

/// Adjacency iff the assigned sets are disjoint.
pub fn verify_disjointedness(g: &Graph, f: &SetFamily) -> Result<Verdict> {
    verify_graph_semantics(g, f, |r| r == SetRelation::Disjoint)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InjectivityReport {
    pub injective: bool,
    /// Groups of representation indices assigned one and the same set,
    /// only listed when the group has at least two members.
    pub duplicate_groups: Vec<Vec<usize>>,
}

pub fn injectivity_audit<R: Representation + ?Sized>(f: &R) -> InjectivityReport {
    let n = f.len();
    let mut assigned = vec![false; n];
    let mut duplicate_groups = Vec::new();
    for i in 0..n {
        if assigned[i] {
            continue;
        }
        let mut group = vec![i];
        for j in (i + 1)..n {
            if !assigned[j] && f.relation(i, j) == SetRelation::Equal {
                assigned[j] = true;
                group.push(j);
            }
        }
        if group.len() > 1 {
            duplicate_groups.push(group);
        }
    }
    InjectivityReport {
        injective: duplicate_groups.is_empty(),
        duplicate_groups,
    }
}

/// The strict order x < y iff f(x) ⊊ f(y); proper containment is
/// transitive, so this is always a valid poset.
pub fn derive_containment_order<R: Representation + ?Sized>(f: &R) -> Poset {
    let n = f.len();
    let labels: Vec<String> = (0..n).map(|i| f.label_at(i).to_string()).collect();
    let mut lt = vec![FixedBitSet::with_capacity(n); n];
    for i in 0..n {
        for j in 0..n {
            if i != j && f.relation(i, j) == SetRelation::ProperSubset {
                lt[i].insert(j);
            }
        }
    }
    Poset::from_closed(labels, lt)
}
