//! Acceptance suite: each test prints one pass/fail line and checks an
//! exact property against an independent oracle. Run with
//! `cargo test -p containment-core --test acceptance -- --nocapture`
//! to see the summary lines.

mod common;

use common::*;
use containment_core::{
    all_transitive_orientations, box_dimension, box_representation, boxes_to_embedding,
    composition_poset, default_budget, dimension, downset_representation, embedding_order,
    find_realizer_of_size, graph_dimension, hiraguchi_bound, is_comparability,
    is_two_dimensional, overlap_from_intersection, star_subtree_representation,
    transitive_orient, validate_certificate, verify_containment_graph, verify_containment_poset,
    verify_disjointedness, verify_intersection, verify_overlap, verify_realizer, Error, Graph,
    Poset, SetFamily,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn criterion(number: usize, name: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("criterion {number} ({name}): PASS");
    } else {
        println!("criterion {number} ({name}): FAIL with {} cases", failures.len());
        for f in failures.iter().take(10) {
            println!("  {f}");
        }
        panic!("criterion {number} ({name}) failed");
    }
}

fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    (0u32..(1u32 << pair_count(n))).map(move |mask| graph_from_mask(n, mask))
}

#[test]
fn criterion_1_comparability_oracle_agreement() {
    let mut failures = Vec::new();
    for n in 0..=6 {
        for g in all_labeled_graphs(n) {
            if is_comparability(&g) != oracle_is_comparability(&g) {
                failures.push(format!("n={n} edges={:?}", g.edges()));
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(11);
    for i in 0..300 {
        let density = [0.2, 0.35, 0.5, 0.65][i % 4];
        let g = random_graph(7, density, &mut rng);
        if is_comparability(&g) != oracle_is_comparability(&g) {
            failures.push(format!("random n=7 #{i} edges={:?}", g.edges()));
        }
    }
    criterion(1, "comparability oracle agreement", failures);
}

#[test]
fn criterion_2_gilmore_hoffman_certificates() {
    let mut failures = Vec::new();
    let mut check = |g: &Graph, tag: String| match transitive_orient(g) {
        Ok(_) => {}
        Err(Error::NotComparability { certificate }) => {
            let len = certificate.walk.len();
            if len % 2 == 0 || !validate_certificate(g, &certificate) {
                failures.push(format!("{tag}: invalid certificate {:?}", certificate.walk));
            }
        }
        Err(other) => failures.push(format!("{tag}: unexpected error {other:?}")),
    };
    for n in 0..=6 {
        for g in all_labeled_graphs(n) {
            check(&g, format!("n={n} edges={:?}", g.edges()));
        }
    }
    let mut rng = StdRng::seed_from_u64(13);
    for i in 0..300 {
        let density = [0.3, 0.5, 0.7][i % 3];
        let g = random_graph(7, density, &mut rng);
        check(&g, format!("random n=7 #{i}"));
    }
    criterion(2, "failure certificates validate", failures);
}

#[test]
fn criterion_3_exact_dimension_values() {
    let mut failures = Vec::new();
    let expect = |failures: &mut Vec<String>, name: &str, got: usize, want: usize| {
        if got != want {
            failures.push(format!("{name}: dimension {got}, expected {want}"));
        }
    };

    let chain = Poset::chain(letters(5)).unwrap();
    expect(&mut failures, "chain", dimension(&chain, 3).unwrap().dim, 1);

    let anti2 = Poset::antichain(letters(2)).unwrap();
    expect(&mut failures, "2-antichain", dimension(&anti2, 2).unwrap().dim, 2);

    let s3 = standard_s3();
    let s3_result = dimension(&s3, 3).unwrap();
    expect(&mut failures, "standard example", s3_result.dim, 3);
    if verify_realizer(&s3, &s3_result.witness) != Ok(true) {
        failures.push("standard example witness does not verify".into());
    }
    if find_realizer_of_size(&s3, 2, 10_000).unwrap().is_some() {
        failures.push("standard example admitted a 2-realizer".into());
    }

    // every transitive orientation of the chordless 8-cycle
    let c8 = cycle_graph(8);
    let orientations = all_transitive_orientations(&c8, 64).unwrap();
    if orientations.len() != 2 {
        failures.push(format!("C8 has {} orientations, expected 2", orientations.len()));
    }
    for o in &orientations {
        let p = o.to_poset().unwrap();
        expect(&mut failures, "C8 orientation", dimension(&p, 4).unwrap().dim, 3);
    }
    expect(&mut failures, "C8 fence fixture", dimension(&c8_fence(), 4).unwrap().dim, 3);

    expect(&mut failures, "8-wheel", graph_dimension(&wheel8(), 5).unwrap(), 3);

    expect(
        &mut failures,
        "Boolean lattice 2^2",
        dimension(&boolean_lattice_2(), 2).unwrap().dim,
        2,
    );

    criterion(3, "exact dimension values", failures);
}

#[test]
fn criterion_4_dimension_invariance_across_orientations() {
    let mut failures = Vec::new();
    for n in 1..=6 {
        for g in nonisomorphic_graphs(n) {
            let orientations = match all_transitive_orientations(&g, 64) {
                Ok(list) => list,
                Err(Error::CapExceeded { .. }) => continue,
                Err(other) => {
                    failures.push(format!("n={n} edges={:?}: {other:?}", g.edges()));
                    continue;
                }
            };
            if orientations.is_empty() {
                continue;
            }
            let dims: Vec<usize> = orientations
                .iter()
                .map(|o| {
                    let p = o.to_poset().expect("enumerated orientations are transitive");
                    dimension(&p, default_budget(n)).expect("within budget").dim
                })
                .collect();
            if dims.iter().any(|&d| d != dims[0]) {
                failures.push(format!("n={n} edges={:?} dims={dims:?}", g.edges()));
            }
        }
    }
    criterion(4, "dimension invariant across orientations", failures);
}

#[test]
fn criterion_5_two_dimensional_fast_path_agreement() {
    let mut failures = Vec::new();
    for n in 0..=5 {
        for masks in all_poset_masks(n) {
            let p = poset_from_masks(&masks);
            let fast = is_two_dimensional(&p).is_some();
            let exact = oracle_dim_le2(&p);
            if fast != exact {
                failures.push(format!("exhaustive n={n} rel={masks:?} fast={fast} exact={exact}"));
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(17);
    for i in 0..500 {
        let n = 6 + i % 2;
        let density = [0.15, 0.3, 0.45][i % 3];
        let p = random_poset(n, density, &mut rng);
        let fast = is_two_dimensional(&p).is_some();
        let exact = oracle_dim_le2(&p);
        if fast != exact {
            failures.push(format!("random #{i} n={n} fast={fast} exact={exact}"));
        }
    }
    criterion(5, "dimension-2 fast path agrees with exact search", failures);
}

#[test]
fn criterion_6_box_round_trip() {
    let mut failures = Vec::new();
    let mut rng = StdRng::seed_from_u64(19);
    for i in 0..200 {
        let n = 1 + i % 7;
        let density = [0.2, 0.35, 0.5][i % 3];
        let p = random_poset(n, density, &mut rng);
        let dim = dimension(&p, default_budget(n)).unwrap().dim;
        let d = dim.div_ceil(2);
        let boxes = match box_representation(&p, d) {
            Ok(b) => b,
            Err(e) => {
                failures.push(format!("#{i} n={n} dim={dim} d={d}: builder failed {e:?}"));
                continue;
            }
        };
        match verify_containment_poset(&p, &boxes) {
            Ok(v) if v.ok => {}
            Ok(v) => {
                failures.push(format!("#{i} n={n}: {} violations", v.violations.len()));
                continue;
            }
            Err(e) => {
                failures.push(format!("#{i} n={n}: verifier error {e:?}"));
                continue;
            }
        }
        let points = boxes_to_embedding(&boxes).unwrap();
        let recovered = embedding_order(boxes.labels(), &points).unwrap();
        if recovered != p {
            failures.push(format!("#{i} n={n}: embedding order differs"));
        }
    }
    criterion(6, "box representation and embedding round trip", failures);
}

#[test]
fn criterion_7_star_and_downset_representations() {
    let mut failures = Vec::new();
    for n in 1..=6 {
        for g in nonisomorphic_graphs(n) {
            let o = match transitive_orient(&g) {
                Ok(o) => o,
                Err(_) => continue,
            };
            let star = star_subtree_representation(&o).unwrap();
            if !verify_containment_graph(&g, &star).unwrap().ok {
                failures.push(format!("star n={n} edges={:?}", g.edges()));
            }
            let p = o.to_poset().unwrap();
            let downsets = downset_representation(&p);
            if !verify_containment_graph(&g, &downsets).unwrap().ok {
                failures.push(format!("downset n={n} edges={:?}", g.edges()));
            }
        }
    }
    criterion(7, "star subtree and downset representations verify", failures);
}

#[test]
fn criterion_8_hiraguchi_and_box_dimension_bounds() {
    let mut failures = Vec::new();
    for n in 4..=6 {
        let bound = hiraguchi_bound(n);
        for masks in all_poset_masks(n) {
            let p = poset_from_masks(&masks);
            match dimension(&p, bound) {
                Ok(r) => {
                    if r.dim > bound {
                        failures.push(format!("n={n} rel={masks:?} dim={} > {bound}", r.dim));
                    }
                }
                Err(e) => failures.push(format!("n={n} rel={masks:?}: {e:?}")),
            }
        }
    }
    for n in 1..=6usize {
        let box_bound = n.div_ceil(4);
        for g in nonisomorphic_graphs(n) {
            if !is_comparability(&g) {
                continue;
            }
            let d = box_dimension(&g, default_budget(n)).unwrap();
            if d > box_bound {
                failures.push(format!(
                    "box dimension {d} > {box_bound} at n={n} edges={:?}",
                    g.edges()
                ));
            }
        }
    }
    criterion(8, "Hiraguchi and box dimension bounds", failures);
}

#[test]
fn criterion_9_duality_and_overlap_transform() {
    let mut failures = Vec::new();

    // families over nonempty subsets of {1..4}, one mask per vertex
    fn families(n: usize, max_atom: u64) -> Vec<SetFamily> {
        let choices = (1u64 << max_atom) - 1;
        let mut out = Vec::new();
        let mut masks = vec![1u64; n];
        loop {
            let sets: Vec<Vec<u64>> = masks
                .iter()
                .map(|&m| (1..=max_atom).filter(|a| m >> (a - 1) & 1 == 1).collect())
                .collect();
            out.push(SetFamily::new(letters(n), sets).unwrap());
            let mut i = 0;
            while i < n {
                if masks[i] < choices {
                    masks[i] += 1;
                    break;
                }
                masks[i] = 1;
                i += 1;
            }
            if i == n {
                return out;
            }
        }
    }

    let mut check_duality = |g: &Graph, f: &SetFamily, tag: &str| {
        let lhs = verify_disjointedness(g, f).unwrap().ok;
        let rhs = verify_intersection(&g.complement(), f).unwrap().ok;
        if lhs != rhs {
            failures.push(format!("{tag}: disjointedness {lhs} vs complement intersection {rhs}"));
        }
    };

    // exhaustive grid: every labeled graph with every atoms-<=4 family at
    // n <= 4, every labeled graph with every atoms-<=2 family at n = 5,
    // and every n=5 isomorphism representative against seeded random
    // atoms-<=4 families
    for n in 1..=4 {
        let fams = families(n, 4);
        let graphs: Vec<Graph> = all_labeled_graphs(n).collect();
        for f in &fams {
            for g in &graphs {
                check_duality(g, f, &format!("n={n}"));
            }
        }
    }
    {
        let fams = families(5, 2);
        let graphs: Vec<Graph> = all_labeled_graphs(5).collect();
        for f in &fams {
            for g in &graphs {
                check_duality(g, f, "n=5 atoms<=2");
            }
        }
        let reps = nonisomorphic_graphs(5);
        let mut rng = StdRng::seed_from_u64(23);
        for i in 0..2000 {
            let f = random_family(5, 4, &mut rng);
            for g in &reps {
                check_duality(g, &f, &format!("n=5 random family #{i}"));
            }
        }
    }

    // the overlap transform preserves intersection verdicts
    let mut rng = StdRng::seed_from_u64(29);
    for i in 0..500 {
        let n = 2 + i % 5;
        let f = random_family(n, 5, &mut rng);
        let tagged = overlap_from_intersection(&f);
        let g = random_graph(n, [0.25, 0.5, 0.75][i % 3], &mut rng);
        let direct = verify_intersection(&g, &f).unwrap().ok;
        let via_overlap = verify_overlap(&g, &tagged).unwrap().ok;
        if direct != via_overlap {
            failures.push(format!(
                "overlap transform #{i}: intersection {direct} vs overlap {via_overlap}"
            ));
        }
    }
    criterion(9, "duality and overlap transform", failures);
}

#[test]
fn criterion_10_composition_and_multiplication() {
    let mut failures = Vec::new();
    let mut rng = StdRng::seed_from_u64(31);

    for t in 0..25 {
        let size = 4 + t % 3;
        let f = random_family(size, 5, &mut rng);
        for k in 2..=4usize {
            let smaller = composition_poset(&f.prefix(k - 1), k - 1).unwrap();
            let larger = composition_poset(&f.prefix(k), k).unwrap();
            if !smaller.is_induced_subposet_of(&larger) {
                failures.push(format!("family #{t} k={k}: P_(k-1) not induced in P_k"));
            }
        }
    }

    for i in 0..200 {
        let n = 1 + i % 7;
        let p = random_poset(n, [0.2, 0.4][i % 2], &mut rng);
        let counts: std::collections::HashMap<String, usize> = p
            .labels()
            .iter()
            .map(|l| (l.clone(), 1 + rng.gen_range(0..3)))
            .collect();
        let multiplied = p.multiply(&counts).unwrap();
        let reduced_m = multiplied.reduce();
        let reduced_p = p.reduce();
        // copies project back to their original by stripping the suffix
        let projected: Vec<String> = reduced_m
            .labels()
            .iter()
            .map(|l| l.split_once('#').map(|(b, _)| b.to_string()).unwrap_or(l.clone()))
            .collect();
        if projected != reduced_p.labels() {
            failures.push(format!(
                "#{i}: reduced labels {projected:?} vs {:?}",
                reduced_p.labels()
            ));
            continue;
        }
        if reduced_m.relation_pairs() != reduced_p.relation_pairs() {
            failures.push(format!("#{i}: reduced relations differ"));
        }
    }
    criterion(10, "composition sequence and vertex multiplication", failures);
}
