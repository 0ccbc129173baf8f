//! Shared oracles and generators for the integration suites.
//!
//! Everything here recomputes results from first principles (brute
//! force over orientations, permutations, or relation matrices) so the
//! library can be checked against independent ground truth.

#![allow(dead_code)]

use containment_core::{Graph, Poset};
use rand::rngs::StdRng;
use rand::Rng;

pub fn letters(n: usize) -> Vec<String> {
    (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

pub fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let labels = letters(n);
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    let pairs: Vec<(&str, &str)> = edges
        .iter()
        .map(|&(u, v)| (labels[u].as_str(), labels[v].as_str()))
        .collect();
    Graph::from_edges(labels.clone(), &pairs).unwrap()
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn cycle_graph(n: usize) -> Graph {
    let labels = letters(n);
    let pairs: Vec<(String, String)> = (0..n)
        .map(|i| (labels[i].clone(), labels[(i + 1) % n].clone()))
        .collect();
    let refs: Vec<(&str, &str)> = pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    Graph::from_edges(labels, &refs).unwrap()
}

pub fn wheel8() -> Graph {
    let mut labels = vec!["hub".to_string()];
    labels.extend(letters(8));
    let mut pairs = Vec::new();
    for i in 0..8 {
        pairs.push((labels[1 + i].clone(), labels[1 + (i + 1) % 8].clone()));
        pairs.push(("hub".to_string(), labels[1 + i].clone()));
    }
    let refs: Vec<(&str, &str)> = pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    Graph::from_edges(labels, &refs).unwrap()
}

pub fn standard_s3() -> Poset {
    Poset::from_pairs(
        vec!["a1", "a2", "a3", "b1", "b2", "b3"],
        &[
            ("a2", "b1"),
            ("a3", "b1"),
            ("a1", "b2"),
            ("a3", "b2"),
            ("a1", "b3"),
            ("a2", "b3"),
        ],
    )
    .unwrap()
}

pub fn c8_fence() -> Poset {
    Poset::from_pairs(
        vec!["a", "b", "c", "d", "e", "f", "g", "h"],
        &[
            ("a", "b"),
            ("c", "b"),
            ("c", "d"),
            ("e", "d"),
            ("e", "f"),
            ("g", "f"),
            ("g", "h"),
            ("a", "h"),
        ],
    )
    .unwrap()
}

pub fn boolean_lattice_2() -> Poset {
    Poset::from_pairs(
        vec!["bot", "a", "b", "top"],
        &[("bot", "a"), ("bot", "b"), ("a", "top"), ("b", "top")],
    )
    .unwrap()
}

/// Brute-force comparability test: try every orientation of the edges
/// and accept when one is transitive. Independent of the recognizer.
pub fn oracle_is_comparability(g: &Graph) -> bool {
    let n = g.n();
    assert!(n <= 16, "oracle uses u16 rows");
    let edges = g.edges();
    let m = edges.len();
    assert!(m <= 25, "oracle enumerates 2^|E| orientations");
    for mask in 0u32..(1u32 << m) {
        let mut dir = vec![0u16; n];
        for (k, &(u, v)) in edges.iter().enumerate() {
            if mask >> k & 1 == 1 {
                dir[u] |= 1 << v;
            } else {
                dir[v] |= 1 << u;
            }
        }
        let mut transitive = true;
        'check: for u in 0..n {
            let mut row = dir[u];
            while row != 0 {
                let v = row.trailing_zeros() as usize;
                row &= row - 1;
                if dir[v] & !dir[u] != 0 {
                    transitive = false;
                    break 'check;
                }
            }
        }
        if transitive {
            return true;
        }
    }
    false
}

/// Number of transitive orientations, by the same brute force.
pub fn oracle_orientation_count(g: &Graph) -> usize {
    let n = g.n();
    let edges = g.edges();
    let m = edges.len();
    assert!(m <= 20);
    let mut count = 0;
    for mask in 0u32..(1u32 << m) {
        let mut dir = vec![0u16; n];
        for (k, &(u, v)) in edges.iter().enumerate() {
            if mask >> k & 1 == 1 {
                dir[u] |= 1 << v;
            } else {
                dir[v] |= 1 << u;
            }
        }
        let mut transitive = true;
        'check: for u in 0..n {
            let mut row = dir[u];
            while row != 0 {
                let v = row.trailing_zeros() as usize;
                row &= row - 1;
                if dir[v] & !dir[u] != 0 {
                    transitive = false;
                    break 'check;
                }
            }
        }
        if transitive {
            count += 1;
        }
    }
    count
}

/// All graphs on n labeled vertices, one per isomorphism class (the
/// representative is the lexicographically least edge mask under vertex
/// relabeling).
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = {
        let mut v = Vec::new();
        for u in 0..n {
            for w in (u + 1)..n {
                v.push((u, w));
            }
        }
        v
    };
    let pair_index = |i: usize, j: usize| -> usize {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        pairs.iter().position(|&p| p == (i, j)).unwrap()
    };
    let perms = permutations(n);
    let mut out = Vec::new();
    'masks: for mask in 0u32..(1u32 << pairs.len()) {
        for perm in &perms {
            let mut remapped = 0u32;
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    remapped |= 1 << pair_index(perm[i], perm[j]);
                }
            }
            if remapped < mask {
                continue 'masks;
            }
        }
        out.push(graph_from_mask(n, mask));
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    permute_rec(&mut items, 0, &mut out);
    out
}

fn permute_rec(items: &mut Vec<usize>, at: usize, out: &mut Vec<Vec<usize>>) {
    if at == items.len() {
        out.push(items.clone());
        return;
    }
    for i in at..items.len() {
        items.swap(at, i);
        permute_rec(items, at + 1, out);
        items.swap(at, i);
    }
}

/// All strict-order matrices on n labeled elements, rows as bitmasks
/// (bit j of row i set iff i < j). Built by adding one element at a
/// time: the new element picks a down-closed set below it and an
/// up-closed set above it, with every below-above pair already related.
pub fn all_poset_masks(n: usize) -> Vec<Vec<u16>> {
    let mut current: Vec<Vec<u16>> = vec![vec![]];
    for k in 0..n {
        let mut next = Vec::new();
        for lt in &current {
            // downmask[y] = elements below y; upmask[y] = elements above y
            let mut downmask = vec![0u16; k];
            for (x, row) in lt.iter().enumerate() {
                let mut bits = *row;
                while bits != 0 {
                    let y = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    downmask[y] |= 1 << x;
                }
            }
            for below in 0u16..(1 << k) {
                if (0..k).any(|y| below >> y & 1 == 1 && downmask[y] & !below != 0) {
                    continue;
                }
                for above in 0u16..(1 << k) {
                    if below & above != 0 {
                        continue;
                    }
                    if (0..k).any(|y| above >> y & 1 == 1 && lt[y] & !above != 0) {
                        continue;
                    }
                    // transitivity across the new element
                    if (0..k).any(|x| below >> x & 1 == 1 && above & !lt[x] != 0) {
                        continue;
                    }
                    let mut grown: Vec<u16> = lt
                        .iter()
                        .enumerate()
                        .map(|(x, row)| row | if below >> x & 1 == 1 { 1 << k } else { 0 })
                        .collect();
                    grown.push(above);
                    next.push(grown);
                }
            }
        }
        current = next;
    }
    current
}

pub fn poset_from_masks(rows: &[u16]) -> Poset {
    let n = rows.len();
    let labels = letters(n);
    let mut pairs = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let mut bits = *row;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            pairs.push((labels[i].clone(), labels[j].clone()));
        }
    }
    let refs: Vec<(&str, &str)> = pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    Poset::from_pairs(labels, &refs).unwrap()
}

/// All linear extensions by raw permutation filtering; independent of
/// the library's extension enumerator.
pub fn bruteforce_extensions(p: &Poset) -> Vec<Vec<usize>> {
    let n = p.n();
    permutations(n)
        .into_iter()
        .filter(|perm| {
            // perm[r] = element at rank r
            let mut rank = vec![0; n];
            for (r, &e) in perm.iter().enumerate() {
                rank[e] = r;
            }
            (0..n).all(|i| (0..n).all(|j| !p.less(i, j) || rank[i] < rank[j]))
        })
        .collect()
}

/// Dimension ≤ 2 oracle: some linear extension L1 admits a partner
/// ordering every incomparable pair the other way; the partner exists
/// iff the forced tournament is transitive.
pub fn oracle_dim_le2(p: &Poset) -> bool {
    let n = p.n();
    if n <= 1 {
        return true;
    }
    for perm in bruteforce_extensions(p) {
        let mut rank = vec![0; n];
        for (r, &e) in perm.iter().enumerate() {
            rank[e] = r;
        }
        // candidate partner order: comparable pairs follow p, incomparable
        // pairs are reversed relative to L1
        let below = |i: usize, j: usize| -> bool {
            if p.comparable(i, j) {
                p.less(j, i)
            } else {
                rank[i] < rank[j]
            }
        };
        let mut transitive = true;
        'check: for a in 0..n {
            for b in 0..n {
                if a == b || !below(a, b) {
                    continue;
                }
                for c in 0..n {
                    if c != a && c != b && below(b, c) && !below(a, c) {
                        transitive = false;
                        break 'check;
                    }
                }
            }
        }
        if transitive {
            return true;
        }
    }
    false
}

pub fn random_graph(n: usize, density: f64, rng: &mut StdRng) -> Graph {
    let labels = letters(n);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(density) {
                edges.push((labels[u].clone(), labels[v].clone()));
            }
        }
    }
    let refs: Vec<(&str, &str)> = edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    Graph::from_edges(labels, &refs).unwrap()
}

/// Random poset: sprinkle relations consistent with a random permutation
/// and close transitively.
pub fn random_poset(n: usize, density: f64, rng: &mut StdRng) -> Poset {
    let labels: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        order.swap(i, j);
    }
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            if rng.gen_bool(density) {
                pairs.push((labels[order[a]].clone(), labels[order[b]].clone()));
            }
        }
    }
    let refs: Vec<(&str, &str)> = pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    Poset::from_pairs(labels, &refs).unwrap()
}

pub fn random_family(
    n: usize,
    max_atom: u64,
    rng: &mut StdRng,
) -> containment_core::SetFamily {
    let labels = letters(n);
    let sets: Vec<Vec<u64>> = (0..n)
        .map(|_| {
            loop {
                let s: Vec<u64> = (1..=max_atom).filter(|_| rng.gen_bool(0.5)).collect();
                if !s.is_empty() {
                    return s;
                }
            }
        })
        .collect();
    containment_core::SetFamily::new(labels, sets).unwrap()
}
