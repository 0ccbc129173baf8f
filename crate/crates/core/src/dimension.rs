//! Linear extensions and exact partial order dimension.
//!
//! The dimension of a poset is the size of its smallest realizer, a set
//! of linear extensions whose intersection is the poset. Dimension 1 is
//! the chains; dimension ≤ 2 is decided in polynomial time by testing
//! the complement of the comparability graph for transitive
//! orientability and merging the two orientations into a 2-realizer.
//! From 3 upward the search enumerates all linear extensions and solves
//! the minimum cover over ordered incomparable pairs exactly: each such
//! pair must be reversed by some chosen extension.

use crate::comparability::transitive_orient;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poset::Poset;
use fixedbitset::FixedBitSet;
use std::collections::HashMap;

/// Default cap on how many linear extensions the exact search will
/// enumerate before giving up.
pub const DEFAULT_EXTENSION_CAP: usize = 20_000;

/// A permutation of a poset's labels; position is rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearOrder {
    order: Vec<String>,
}

/// A list of linear orders read as a candidate realizer.
pub type Realizer = Vec<LinearOrder>;

impl LinearOrder {
    pub fn new<S: Into<String>>(order: Vec<S>) -> Result<LinearOrder> {
        let order: Vec<String> = order.into_iter().map(Into::into).collect();
        crate::graph::build_index(&order)?;
        Ok(LinearOrder { order })
    }

    pub fn labels(&self) -> &[String] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// rank[i] = position (0-based) of the poset's element i in this order.
    /// Errors unless the label sets coincide.
    pub fn ranks_in(&self, p: &Poset) -> Result<Vec<usize>> {
        if self.order.len() != p.n() {
            return Err(Error::LabelMismatch);
        }
        let pos: HashMap<&str, usize> = self
            .order
            .iter()
            .enumerate()
            .map(|(r, l)| (l.as_str(), r))
            .collect();
        (0..p.n())
            .map(|i| pos.get(p.label(i)).copied().ok_or(Error::LabelMismatch))
            .collect()
    }

    /// True iff every relation of `p` is respected by this order.
    pub fn extends(&self, p: &Poset) -> Result<bool> {
        let rank = self.ranks_in(p)?;
        Ok(p.relation_pairs().iter().all(|&(i, j)| rank[i] < rank[j]))
    }

    /// The chain poset this order describes.
    pub fn to_poset(&self) -> Poset {
        Poset::chain(self.order.clone()).unwrap()
    }
}

/// All linear extensions of `p` in lexicographic label-sequence order.
/// Errors with `CapExceeded` when there are more than `cap`.
pub fn linear_extensions(p: &Poset, cap: usize) -> Result<Vec<LinearOrder>> {
    let n = p.n();
    let down: Vec<FixedBitSet> = (0..n).map(|i| p.down_set(i)).collect();
    let lex: Vec<usize> = {
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by(|&a, &b| p.label(a).cmp(p.label(b)));
        idx
    };
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut placed = FixedBitSet::with_capacity(n);
    extend_rec(p, &down, &lex, &mut placed, &mut current, cap, &mut out)?;
    Ok(out)
}

fn extend_rec(
    p: &Poset,
    down: &[FixedBitSet],
    lex: &[usize],
    placed: &mut FixedBitSet,
    current: &mut Vec<usize>,
    cap: usize,
    out: &mut Vec<LinearOrder>,
) -> Result<()> {
    let n = p.n();
    if current.len() == n {
        if out.len() == cap {
            return Err(Error::CapExceeded {
                cap,
                found: out.len() + 1,
            });
        }
        out.push(LinearOrder {
            order: current.iter().map(|&i| p.label(i).to_string()).collect(),
        });
        return Ok(());
    }
    for &i in lex {
        if !placed.contains(i) && down[i].is_subset(placed) {
            placed.insert(i);
            current.push(i);
            extend_rec(p, down, lex, placed, current, cap, out)?;
            current.pop();
            placed.set(i, false);
        }
    }
    Ok(())
}

/// True iff every member extends `p` and the intersection of the members
/// is exactly `p`.
pub fn verify_realizer(p: &Poset, r: &[LinearOrder]) -> Result<bool> {
    if r.is_empty() {
        return Ok(p.n() <= 1);
    }
    let mut ranks = Vec::with_capacity(r.len());
    for l in r {
        ranks.push(l.ranks_in(p)?);
    }
    for i in 0..p.n() {
        for j in 0..p.n() {
            if i == j {
                continue;
            }
            let below_in_all = ranks.iter().all(|rk| rk[i] < rk[j]);
            if below_in_all != p.less(i, j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Exact minimum-cover search state over one extension enumeration.
struct CoverSearch {
    extensions: Vec<LinearOrder>,
    /// cover[e] = set of critical pairs reversed by extension e.
    cover: Vec<FixedBitSet>,
    pair_count: usize,
    /// For each pair, the largest extension index covering it.
    last_candidate: Vec<usize>,
    /// suffix_gain[i] = max cover size among extensions i.., used to prune.
    suffix_gain: Vec<usize>,
}

impl CoverSearch {
    fn build(p: &Poset, extension_cap: usize) -> Result<CoverSearch> {
        let extensions = linear_extensions(p, extension_cap)?;
        let n = p.n();
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && !p.comparable(i, j) {
                    // critical pair (i, j): some member must put j before i
                    pairs.push((i, j));
                }
            }
        }
        let m = extensions.len();
        let mut cover = Vec::with_capacity(m);
        let mut last_candidate = vec![usize::MAX; pairs.len()];
        for (e, l) in extensions.iter().enumerate() {
            let rank = l.ranks_in(p)?;
            let mut mask = FixedBitSet::with_capacity(pairs.len());
            for (pi, &(i, j)) in pairs.iter().enumerate() {
                if rank[j] < rank[i] {
                    mask.insert(pi);
                    last_candidate[pi] = e;
                }
            }
            cover.push(mask);
        }
        let mut suffix_gain = vec![0; m + 1];
        for e in (0..m).rev() {
            suffix_gain[e] = suffix_gain[e + 1].max(cover[e].count_ones(..));
        }
        Ok(CoverSearch {
            extensions,
            cover,
            pair_count: pairs.len(),
            last_candidate,
            suffix_gain,
        })
    }

    /// First cover of exactly `k` extensions in lexicographic index order,
    /// if one exists.
    fn solve(&self, k: usize) -> Option<Vec<usize>> {
        let covered = FixedBitSet::with_capacity(self.pair_count);
        let mut chosen = Vec::with_capacity(k);
        if self.dfs(0, &covered, k, &mut chosen) {
            Some(chosen)
        } else {
            None
        }
    }

    fn dfs(&self, start: usize, covered: &FixedBitSet, k: usize, chosen: &mut Vec<usize>) -> bool {
        let uncovered = self.pair_count - covered.count_ones(..);
        if uncovered == 0 {
            return true;
        }
        let slots = k - chosen.len();
        if slots == 0 || start >= self.extensions.len() {
            return false;
        }
        if slots * self.suffix_gain[start] < uncovered {
            return false;
        }
        // every still-uncovered pair needs a candidate at index >= start
        for pi in 0..self.pair_count {
            if !covered.contains(pi)
                && (self.last_candidate[pi] == usize::MAX || self.last_candidate[pi] < start)
            {
                return false;
            }
        }
        for e in start..self.extensions.len() {
            let mut next = covered.clone();
            next.union_with(&self.cover[e]);
            if next.count_ones(..) == covered.count_ones(..) {
                continue;
            }
            chosen.push(e);
            if self.dfs(e + 1, &next, k, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    /// Greedy cover, used as an upper bound when the budget runs out.
    fn greedy(&self) -> Option<Vec<usize>> {
        let mut covered = FixedBitSet::with_capacity(self.pair_count);
        let mut chosen = Vec::new();
        while covered.count_ones(..) < self.pair_count {
            let mut best: Option<(usize, usize)> = None;
            for (e, mask) in self.cover.iter().enumerate() {
                let mut gain = mask.clone();
                gain.difference_with(&covered);
                let g = gain.count_ones(..);
                if g > 0 && best.map_or(true, |(bg, _)| g > bg) {
                    best = Some((g, e));
                }
            }
            let (_, e) = best?;
            covered.union_with(&self.cover[e]);
            chosen.push(e);
        }
        Some(chosen)
    }

    fn realizer_from(&self, chosen: &[usize]) -> Realizer {
        chosen.iter().map(|&e| self.extensions[e].clone()).collect()
    }
}

/// Find some realizer using exactly `k` extensions (the lexicographically
/// first under extension enumeration order), or None when impossible.
pub fn find_realizer_of_size(
    p: &Poset,
    k: usize,
    extension_cap: usize,
) -> Result<Option<Realizer>> {
    if p.n() == 0 {
        return Err(Error::EmptyInput);
    }
    let search = CoverSearch::build(p, extension_cap)?;
    if search.pair_count == 0 {
        // chain: any k >= 1 copies of its unique extension work
        let l = search.extensions[0].clone();
        return Ok(Some(vec![l; k.max(1)]));
    }
    Ok(search.solve(k).map(|c| search.realizer_from(&c)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionResult {
    pub dim: usize,
    pub witness: Realizer,
}

/// Budget that always suffices: ⌈n/2⌉ from the classical bound, never
/// below 2 (every poset on at most 3 elements has dimension at most 2).
pub fn default_budget(n: usize) -> usize {
    hiraguchi_bound(n).max(2)
}

/// ⌈n/2⌉.
pub fn hiraguchi_bound(n: usize) -> usize {
    n.div_ceil(2)
}

/// Exact dimension with a verified minimum realizer as witness. The fast
/// paths settle 1 and 2; from 3 up to `budget` the exact cover search
/// decides each size in ascending order, so the first hit is minimal.
pub fn dimension(p: &Poset, budget: usize) -> Result<DimensionResult> {
    dimension_with_extension_cap(p, budget, DEFAULT_EXTENSION_CAP)
}

pub fn dimension_with_extension_cap(
    p: &Poset,
    budget: usize,
    extension_cap: usize,
) -> Result<DimensionResult> {
    if p.n() == 0 {
        return Err(Error::EmptyInput);
    }
    let over = |lower: usize, upper: usize| Error::BudgetExceeded {
        budget,
        lower,
        upper,
    };
    if p.is_chain() {
        if budget < 1 {
            return Err(over(1, 1));
        }
        let witness = linear_extensions(p, 1)?;
        return Ok(DimensionResult { dim: 1, witness });
    }
    if let Some(witness) = is_two_dimensional(p) {
        if budget < 2 {
            return Err(over(2, 2));
        }
        return Ok(DimensionResult { dim: 2, witness });
    }
    let search = CoverSearch::build(p, extension_cap)?;
    let mut k = 3;
    while k <= budget {
        if let Some(chosen) = search.solve(k) {
            return Ok(DimensionResult {
                dim: k,
                witness: search.realizer_from(&chosen),
            });
        }
        k += 1;
    }
    let upper = search
        .greedy()
        .map(|c| c.len())
        .unwrap_or_else(|| default_budget(p.n()))
        .max(budget + 1);
    Err(over(budget.max(2) + 1, upper))
}

/// Decide dim ≤ 2 and construct a 2-realizer when it holds: orient the
/// complement of the comparability graph transitively, then merge the
/// poset with that orientation and with its reverse into two linear
/// orders.
pub fn is_two_dimensional(p: &Poset) -> Option<Realizer> {
    let complement = p.comparability_graph().complement();
    let q = transitive_orient(&complement).ok()?;
    let l1 = merge_linear(p, &q, false);
    let l2 = merge_linear(p, &q, true);
    let realizer = vec![l1, l2];
    debug_assert_eq!(verify_realizer(p, &realizer), Ok(true));
    Some(realizer)
}

/// Linear order of the tournament p ∪ q (or p ∪ q reversed): rank each
/// element by how many others lie below it.
fn merge_linear(p: &Poset, q: &crate::orientation::Orientation, flip: bool) -> LinearOrder {
    let n = p.n();
    // below(i, j): j is below i in the tournament
    let below = |i: usize, j: usize| -> bool {
        if p.comparable(i, j) {
            p.less(j, i)
        } else {
            // arc x → y reads x above y; flipping reverses the complement part
            q.forward(i, j) != flip
        }
    };
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by_key(|&i| (0..n).filter(|&j| j != i && below(i, j)).count());
    LinearOrder {
        order: idx.into_iter().map(|i| p.label(i).to_string()).collect(),
    }
}

/// Common dimension of all transitive orientations of `g`.
pub fn graph_dimension(g: &Graph, budget: usize) -> Result<usize> {
    let o = transitive_orient(g)?;
    let p = o.to_poset().expect("recognition output is transitive");
    Ok(dimension(&p, budget)?.dim)
}

/// Least d such that `g` is a containment graph of boxes in d-space:
/// ⌈dim/2⌉.
pub fn box_dimension(g: &Graph, budget: usize) -> Result<usize> {
    Ok(graph_dimension(g, budget)?.div_ceil(2))
}
