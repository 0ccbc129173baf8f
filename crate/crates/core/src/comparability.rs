//! Comparability graph recognition.
//!
//! Recognition runs the implication-class (forcing) decomposition: pick
//! the least unoriented edge, propagate the forcing relation
//!
//! * x → y forces x → z when xz is an edge and yz is not,
//! * x → y forces z → y when zy is an edge and xz is not,
//!
//! to a fixed point inside the not-yet-oriented subgraph, fail when some
//! edge is forced both ways, otherwise commit the class, drop its edges,
//! and repeat. When recognition fails, the graph carries an odd closed
//! walk in which no two vertices at walk distance two are adjacent; that
//! walk is extracted as the obstruction certificate.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orientation::Orientation;
use fixedbitset::FixedBitSet;
use std::collections::VecDeque;

/// A closed odd walk (may retrace edges) with every consecutive pair
/// adjacent and no `v[i] v[i+2]` adjacency, read cyclically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycleCertificate {
    pub walk: Vec<String>,
}

/// One implication class, directed per the chosen seed.
struct ForcedClass {
    arcs: Vec<(usize, usize)>,
}

/// Propagate forcing from `seed` inside the graph given by `remaining`
/// rows. Returns None when some edge is forced both ways.
fn force_class(remaining: &[FixedBitSet], seed: (usize, usize)) -> Option<ForcedClass> {
    let n = remaining.len();
    let mut fwd = vec![FixedBitSet::with_capacity(n); n];
    let mut arcs = Vec::new();
    let mut queue = VecDeque::new();
    fwd[seed.0].insert(seed.1);
    arcs.push(seed);
    queue.push_back(seed);
    while let Some((x, y)) = queue.pop_front() {
        for z in 0..n {
            if z == x || z == y {
                continue;
            }
            if remaining[x].contains(z) && !remaining[y].contains(z) {
                if fwd[z].contains(x) {
                    return None;
                }
                if !fwd[x].contains(z) {
                    fwd[x].insert(z);
                    arcs.push((x, z));
                    queue.push_back((x, z));
                }
            }
            if remaining[y].contains(z) && !remaining[x].contains(z) {
                if fwd[y].contains(z) {
                    return None;
                }
                if !fwd[z].contains(y) {
                    fwd[z].insert(y);
                    arcs.push((z, y));
                    queue.push_back((z, y));
                }
            }
        }
    }
    Some(ForcedClass { arcs })
}

/// Least remaining edge under lexicographic label order, returned with
/// the lexicographically smaller endpoint first.
fn least_edge(g: &Graph, remaining: &[FixedBitSet], lex_rank: &[usize]) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), (usize, usize))> = None;
    for u in 0..g.n() {
        for v in remaining[u].ones() {
            if u >= v {
                continue;
            }
            let (a, b) = if lex_rank[u] < lex_rank[v] { (u, v) } else { (v, u) };
            let key = (lex_rank[a], lex_rank[b]);
            if best.map_or(true, |(k, _)| key < k) {
                best = Some((key, (a, b)));
            }
        }
    }
    best.map(|(_, e)| e)
}

fn lex_ranks(g: &Graph) -> Vec<usize> {
    let mut rank = vec![0; g.n()];
    for (r, &i) in g.lex_order().iter().enumerate() {
        rank[i] = r;
    }
    rank
}

/// Produce a transitive orientation of `g`, or the obstruction
/// certificate when none exists.
pub fn transitive_orient(g: &Graph) -> Result<Orientation> {
    let n = g.n();
    let lex_rank = lex_ranks(g);
    let mut remaining: Vec<FixedBitSet> = (0..n).map(|u| g.neighbors(u).collect()).collect();
    let mut dir = vec![FixedBitSet::with_capacity(n); n];
    while let Some(seed) = least_edge(g, &remaining, &lex_rank) {
        let Some(class) = force_class(&remaining, seed) else {
            let certificate = find_odd_cycle_certificate(g)
                .expect("forcing contradiction guarantees an odd-walk obstruction");
            return Err(Error::NotComparability { certificate });
        };
        for &(a, b) in &class.arcs {
            dir[a].insert(b);
            remaining[a].set(b, false);
            remaining[b].set(a, false);
        }
    }
    let o = Orientation::from_raw(g.clone(), dir);
    debug_assert!(o.is_transitive());
    Ok(o)
}

pub fn is_comparability(g: &Graph) -> bool {
    transitive_orient(g).is_ok()
}

/// All transitive orientations of `g`, in a deterministic order.
/// Errors with `CapExceeded` when there are more than `cap`.
///
/// Enumeration branches on the least undecided edge and propagates the
/// arcs that transitivity already forces; a branch dies when a forced
/// arc conflicts with a decision or would need a missing edge.
pub fn all_transitive_orientations(g: &Graph, cap: usize) -> Result<Vec<Orientation>> {
    let n = g.n();
    let lex_rank = lex_ranks(g);
    let mut remaining: Vec<FixedBitSet> = (0..n).map(|u| g.neighbors(u).collect()).collect();
    let mut dir = vec![FixedBitSet::with_capacity(n); n];
    let mut out = Vec::new();
    enumerate_orientations(g, &lex_rank, &mut remaining, &mut dir, cap, &mut out)?;
    Ok(out)
}

/// Commit the arc x → y plus everything transitivity forces from it.
/// Returns the committed arcs for rollback, or None on contradiction.
fn commit_arc(
    g: &Graph,
    dir: &mut [FixedBitSet],
    remaining: &mut [FixedBitSet],
    x: usize,
    y: usize,
) -> Option<Vec<(usize, usize)>> {
    let n = g.n();
    let mut added = Vec::new();
    let mut queue = VecDeque::from([(x, y)]);
    let mut fail = false;
    while let Some((a, b)) = queue.pop_front() {
        if dir[a].contains(b) {
            continue;
        }
        if dir[b].contains(a) {
            fail = true;
            break;
        }
        dir[a].insert(b);
        remaining[a].set(b, false);
        remaining[b].set(a, false);
        added.push((a, b));
        for z in 0..n {
            // a → b → z needs a → z
            if dir[b].contains(z) {
                if !g.adjacent(a, z) || dir[z].contains(a) {
                    fail = true;
                    break;
                }
                queue.push_back((a, z));
            }
            // z → a → b needs z → b
            if dir[z].contains(a) {
                if !g.adjacent(z, b) || dir[b].contains(z) {
                    fail = true;
                    break;
                }
                queue.push_back((z, b));
            }
        }
        if fail {
            break;
        }
    }
    if fail {
        for &(a, b) in added.iter().rev() {
            dir[a].set(b, false);
            remaining[a].insert(b);
            remaining[b].insert(a);
        }
        return None;
    }
    Some(added)
}

fn enumerate_orientations(
    g: &Graph,
    lex_rank: &[usize],
    remaining: &mut [FixedBitSet],
    dir: &mut [FixedBitSet],
    cap: usize,
    out: &mut Vec<Orientation>,
) -> Result<()> {
    let Some((u, v)) = least_edge(g, remaining, lex_rank) else {
        let o = Orientation::from_raw(g.clone(), dir.to_vec());
        debug_assert!(o.is_transitive());
        if out.len() == cap {
            return Err(Error::CapExceeded {
                cap,
                found: out.len() + 1,
            });
        }
        out.push(o);
        return Ok(());
    };
    for (x, y) in [(u, v), (v, u)] {
        if let Some(added) = commit_arc(g, dir, remaining, x, y) {
            let result = enumerate_orientations(g, lex_rank, remaining, dir, cap, out);
            for &(a, b) in added.iter().rev() {
                dir[a].set(b, false);
                remaining[a].insert(b);
                remaining[b].insert(a);
            }
            result?;
        }
    }
    Ok(())
}

/// Coherently orient a nested sequence: orient the last graph once and
/// restrict that orientation to every earlier graph. Greedy extension of
/// an early orientation is never attempted.
pub fn coherent_orient(sequence: &[&Graph]) -> Result<Vec<Orientation>> {
    if sequence.is_empty() {
        return Err(Error::EmptyList);
    }
    for i in 0..sequence.len() - 1 {
        if !sequence[i].is_induced_subgraph_of(sequence[i + 1]) {
            return Err(Error::NotNested(i));
        }
    }
    let last = sequence.last().unwrap();
    let oriented = transitive_orient(last)?;
    sequence
        .iter()
        .map(|g| {
            let n = g.n();
            let mut dir = vec![FixedBitSet::with_capacity(n); n];
            for (u, v) in g.edges() {
                let lu = last.index_of(g.label(u))?;
                let lv = last.index_of(g.label(v))?;
                if oriented.forward(lu, lv) {
                    dir[u].insert(v);
                } else {
                    dir[v].insert(u);
                }
            }
            Ok(Orientation::from_raw((*g).clone(), dir))
        })
        .collect()
}

/// Check the certificate's defining properties against `g`.
pub fn validate_certificate(g: &Graph, cert: &OddCycleCertificate) -> bool {
    let walk = &cert.walk;
    let len = walk.len();
    if len < 3 || len % 2 == 0 {
        return false;
    }
    let idx: Option<Vec<usize>> = walk.iter().map(|l| g.index_of(l).ok()).collect();
    let Some(idx) = idx else { return false };
    for i in 0..len {
        if !g.adjacent(idx[i], idx[(i + 1) % len]) {
            return false;
        }
        if g.adjacent(idx[i], idx[(i + 2) % len]) {
            return false;
        }
    }
    true
}

/// Find a shortest closed odd walk with no triangular chord, searching
/// the walk-state graph whose nodes are ordered adjacent pairs. Errors
/// with `IsComparability` when no such walk exists.
pub fn find_odd_cycle_certificate(g: &Graph) -> Result<OddCycleCertificate> {
    let arcs: Vec<(usize, usize)> = {
        let mut v = Vec::new();
        for (a, b) in g.edges() {
            v.push((a, b));
            v.push((b, a));
        }
        v
    };
    let state_id: std::collections::HashMap<(usize, usize), usize> =
        arcs.iter().enumerate().map(|(i, &s)| (s, i)).collect();

    let mut best: Option<Vec<usize>> = None;
    for (start, &(v1, v2)) in arcs.iter().enumerate() {
        if let Some(walk) = shortest_odd_closed_walk(g, &arcs, &state_id, start, (v1, v2)) {
            if best.as_ref().map_or(true, |b| walk.len() < b.len()) {
                best = Some(walk);
            }
        }
    }
    match best {
        Some(walk) => Ok(OddCycleCertificate {
            walk: walk.into_iter().map(|v| g.label(v).to_string()).collect(),
        }),
        None => Err(Error::IsComparability),
    }
}

/// Parity BFS over walk states from `start` back to itself in an odd
/// number of steps; each step (a,b) → (b,c) requires bc ∈ E and ac ∉ E.
fn shortest_odd_closed_walk(
    g: &Graph,
    arcs: &[(usize, usize)],
    state_id: &std::collections::HashMap<(usize, usize), usize>,
    start: usize,
    start_pair: (usize, usize),
) -> Option<Vec<usize>> {
    let m = arcs.len();
    // prev[state][parity] = (previous state, previous parity)
    let mut prev = vec![[usize::MAX; 2]; m];
    let mut seen = vec![[false; 2]; m];
    let mut queue = VecDeque::new();
    seen[start][0] = true;
    queue.push_back((start, 0usize));
    let mut closing: Option<usize> = None;
    'bfs: while let Some((s, par)) = queue.pop_front() {
        let (a, b) = arcs[s];
        for c in g.neighbors(b) {
            if g.adjacent(a, c) {
                continue;
            }
            let t = state_id[&(b, c)];
            let npar = 1 - par;
            if t == start && npar == 1 {
                closing = Some(s);
                break 'bfs;
            }
            if !seen[t][npar] {
                seen[t][npar] = true;
                prev[t][npar] = s * 2 + par;
                queue.push_back((t, npar));
            }
        }
    }
    let mut s = closing?;
    // walk back from the state preceding the closing step; the walk
    // vertices are the first components of the states on the path
    let mut par = 0usize; // closing step goes parity 0 -> 1
    let mut rev = Vec::new();
    loop {
        rev.push(arcs[s].0);
        if s == start && par == 0 {
            break;
        }
        let code = prev[s][par];
        s = code / 2;
        par = code % 2;
    }
    rev.reverse();
    debug_assert_eq!(rev[0], start_pair.0);
    debug_assert_eq!(rev[1], start_pair.1);
    debug_assert!(rev.len() % 2 == 1);
    Some(rev)
}
