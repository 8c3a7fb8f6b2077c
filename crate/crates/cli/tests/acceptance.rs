//! End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};
use std::time::Instant;

use nrr_core::graphs::{graph_of_partition, truncated_g_infinity};
use nrr_core::hilbert::{
    edge_ideal_of, generic_independent_set_series, hp_r, ladder_hilbert_series, ladder_prefix,
    verify_lemma_hilb, verify_polarization_identity, verify_proposition_hp,
    weighted_hilbert_inclusion_exclusion, weighted_hilbert_independent_sets,
    weighted_subgraph_series_at,
};
use nrr_core::partitions::{
    e_partitions, gf_e, gf_t, neighborly_partitions, partitions_of, r_partitions, r_signed_count,
    rr_numerator, rr_product_side, rr_sum_side, t_partitions,
};
use nrr_core::qseries::product_one_minus;
use nrr_core::signature::{neighborly_signature_sum, signature_bruteforce, signature_fast, signed_neighborly_gf};
use nrr_core::{Bounds, LabeledGraph, Mode, Order, Partition, SeriesQ, SignatureRoute, VertexLabel, WeightMap};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lam(s: &str) -> Partition {
    s.parse().unwrap()
}

fn names(list: &[Partition]) -> Vec<String> {
    list.iter().map(ToString::to_string).collect()
}

fn delta(s: &str) -> i64 {
    let g = graph_of_partition(&lam(s)).unwrap();
    let b = Bounds::default();
    let slow = signature_bruteforce(&g, &b).unwrap().get();
    assert_eq!(signature_fast(&g, &b).unwrap().get(), slow);
    slow
}

fn worked_example() -> Outcome {
    for (p, d) in [("3,3", -1), ("3,2,1", 1), ("2,2,1,1", 0)] {
        ensure(delta(p) == d, || format!("delta({p}) = {}, expected {d}", delta(p)))?;
    }
    let n2 = names(&neighborly_partitions(6, Mode::Two));
    ensure(n2 == ["3+3", "3+2+1", "2+2+1+1"], || format!("N_2(6) = {n2:?}"))?;
    let n1 = names(&neighborly_partitions(6, Mode::One));
    ensure(n1 == ["3+3"], || format!("N_1(6) = {n1:?}"))?;
    let r1 = names(&r_partitions(6, Mode::One));
    ensure(r1 == ["6"], || format!("R_1(6) = {r1:?}"))?;
    ensure(r_signed_count(6, Mode::One) == Ok(-1), || "signed |R_1(6)| != -1".into())?;
    ensure(r_partitions(6, Mode::Two).is_empty(), || "R_2(6) not empty".into())?;
    ensure(r_signed_count(6, Mode::Two) == Ok(0), || "signed |R_2(6)| != 0".into())?;
    Ok("8 fixtures".into())
}

fn introduction_fixtures() -> Outcome {
    ensure(partitions_of(4).len() == 5, || "p(4) != 5".into())?;
    let n1 = names(&neighborly_partitions(4, Mode::One));
    ensure(n1 == ["2+2"], || format!("N_1(4) = {n1:?}"))?;
    let n2 = names(&neighborly_partitions(4, Mode::Two));
    ensure(n2 == ["2+2", "2+1+1"], || format!("N_2(4) = {n2:?}"))?;
    let (x1, x2, y1) = (VertexLabel::x(1), VertexLabel::x(2), VertexLabel::y(1));
    let expected = LabeledGraph::new([x2, x1, y1], [(x2, x1), (x1, y1)]).unwrap();
    let g = graph_of_partition(&lam("2,1,1")).unwrap();
    ensure(g == expected, || format!("G_(2+1+1) = {g}"))?;
    Ok("4 fixtures".into())
}

fn signed_count_theorem() -> Outcome {
    let b = Bounds::default();
    let mut assertions = 0;
    for mode in Mode::ALL {
        for n in 1..=40 {
            let left = neighborly_signature_sum(n, mode, SignatureRoute::BruteForce, &b).map_err(|e| e.to_string())?;
            let right = r_signed_count(n, mode).map_err(|e| e.to_string())?;
            ensure(left == right, || format!("i={mode} n={n}: {left} != {right}"))?;
            assertions += 1;
        }
    }
    Ok(format!("{assertions} assertions"))
}

fn signed_series_product() -> Outcome {
    let b = Bounds::default();
    let order = Order::new(40);
    for mode in Mode::ALL {
        let gf = signed_neighborly_gf(mode, order, SignatureRoute::IndependencePolynomial, &b).unwrap();
        let exps = (1..=40u32).filter(|&j| mode.in_numerator_class(j)).map(|j| j as usize);
        let product = product_one_minus(exps, order).unwrap();
        gf.eq_to_order(&product, order).map_err(|m| format!("i={mode}: {m:?}"))?;
    }
    Ok("orders 0..=40, both i".into())
}

fn rogers_ramanujan() -> Outcome {
    let order = Order::new(60);
    for mode in Mode::ALL {
        let sum = rr_sum_side(mode, order).unwrap();
        sum.eq_to_order(&rr_product_side(mode, order).unwrap(), order)
            .map_err(|m| format!("i={mode} sum/product {m:?}"))?;
        sum.eq_to_order(&gf_t(mode, order).unwrap(), order)
            .map_err(|m| format!("i={mode} sum/T {m:?}"))?;
        for n in 0..=40 {
            let (t, e) = (t_partitions(n, mode).len(), e_partitions(n, mode).len());
            ensure(t == e, || format!("i={mode} n={n}: |T| = {t}, |E| = {e}"))?;
        }
    }
    Ok("series to 60, counts to 40".into())
}

fn random_graph(rng: &mut ChaCha8Rng, max_vertices: u32, max_edges: usize) -> LabeledGraph {
    let n = rng.random_range(1..=max_vertices);
    let vs: Vec<VertexLabel> = (1..=n).map(VertexLabel::x).collect();
    let p = rng.random_range(0.0..1.0);
    let mut edges = Vec::new();
    for a in 0..vs.len() {
        for c in a + 1..vs.len() {
            if rng.random_bool(p) {
                edges.push((vs[a], vs[c]));
            }
        }
    }
    while edges.len() > max_edges {
        let k = rng.random_range(0..edges.len());
        edges.swap_remove(k);
    }
    LabeledGraph::new(vs, edges).unwrap()
}

fn random_weights(rng: &mut ChaCha8Rng, g: &LabeledGraph, max: u32) -> WeightMap {
    let w = g.vertices().iter().map(|v| (*v, rng.random_range(1..=max))).collect();
    WeightMap::new(g, w).unwrap()
}

fn weighted_lemma() -> Outcome {
    let b = Bounds::default();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for k in 0..200 {
        let g = random_graph(&mut rng, 8, 12);
        let w = random_weights(&mut rng, &g, 5);
        verify_lemma_hilb(&g, &w, Order::new(20), &b)
            .map_err(|e| e.to_string())?
            .map_err(|m| format!("graph {k} {g}: {m:?}"))?;
    }
    Ok("200 random weighted graphs to order 20".into())
}

fn route_agreement() -> Outcome {
    let b = Bounds::default();
    let mut signatures = 0;
    for mode in Mode::ALL {
        for n in 1..=30 {
            for lambda in neighborly_partitions(n, mode) {
                let g = graph_of_partition(&lambda).unwrap();
                let (s, f) = (signature_bruteforce(&g, &b).unwrap(), signature_fast(&g, &b).unwrap());
                ensure(s == f, || format!("signature routes differ on {lambda}: {s} vs {f}"))?;
                signatures += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for _ in 0..200 {
        let g = random_graph(&mut rng, 12, 16);
        let (s, f) = (signature_bruteforce(&g, &b).unwrap(), signature_fast(&g, &b).unwrap());
        ensure(s == f, || format!("signature routes differ on {g}"))?;
        signatures += 1;
    }

    let order = Order::new(15);
    let mut hilbert = 0;
    for n in 1..=5u32 {
        let vs: Vec<VertexLabel> = (1..=n).map(VertexLabel::x).collect();
        let pairs: Vec<_> = (0..vs.len())
            .flat_map(|a| (a + 1..vs.len()).map(move |c| (a, c)))
            .map(|(a, c)| (vs[a], vs[c]))
            .collect();
        for mask in 0u32..1 << pairs.len() {
            let es = (0..pairs.len()).filter(|k| mask >> k & 1 == 1).map(|k| pairs[k]);
            let g = LabeledGraph::new(vs.clone(), es).unwrap();
            for code in 0..3u32.pow(n) {
                let mut c = code;
                let mut map = BTreeMap::new();
                for v in &vs {
                    map.insert(*v, c % 3 + 1);
                    c /= 3;
                }
                let w = WeightMap::new(&g, map).unwrap();
                let ie = weighted_hilbert_inclusion_exclusion(&edge_ideal_of(&g, &w).unwrap(), order, &b).unwrap();
                let is = weighted_hilbert_independent_sets(&g, &w, order, &b).unwrap();
                ie.eq_to_order(&is, order).map_err(|m| format!("{g} {w:?}: {m:?}"))?;
                hilbert += 1;
            }
        }
    }

    let mut ladders = 0;
    for mode in Mode::ALL {
        for m in mode.min_part()..=12 {
            let g = truncated_g_infinity(mode, m).unwrap();
            let order = Order::new(40);
            let dp = ladder_hilbert_series(mode, m, order).unwrap();
            let generic = generic_independent_set_series(&g, &WeightMap::by_index(&g), order, &b).unwrap();
            dp.eq_to_order(&generic, order).map_err(|x| format!("ladder i={mode} M={m}: {x:?}"))?;
            ladders += 1;
        }
    }
    Ok(format!("{signatures} signatures, {hilbert} weighted graphs, {ladders} ladders"))
}

fn polarization_and_proposition() -> Outcome {
    let b = Bounds::default();
    for mode in Mode::ALL {
        verify_polarization_identity(mode, Order::new(40))
            .map_err(|e| e.to_string())?
            .map_err(|m| format!("polarization i={mode}: {m:?}"))?;
        verify_proposition_hp(mode, Order::new(30), &b)
            .map_err(|e| e.to_string())?
            .map_err(|m| format!("proposition i={mode}: {m:?}"))?;
    }
    let hp = ladder_hilbert_series(Mode::Two, 3, Order::new(3)).unwrap();
    ensure(hp.coeffs() == [1, 2, 4, 7], || format!("HP_P at order 3 = {hp}"))?;
    Ok("both i, plus [1,2,4,7]".into())
}

fn named_series(mode: Mode, order: Order) -> Vec<(&'static str, SeriesQ)> {
    let b = Bounds::default();
    let g = ladder_prefix(mode, order).unwrap();
    let w = WeightMap::by_index(&g);
    vec![
        ("numerator", rr_numerator(mode, order).unwrap()),
        ("signed-gf", signed_neighborly_gf(mode, order, SignatureRoute::IndependencePolynomial, &b).unwrap()),
        ("rr-sum", rr_sum_side(mode, order).unwrap()),
        ("rr-product", rr_product_side(mode, order).unwrap()),
        ("gf-T", gf_t(mode, order).unwrap()),
        ("gf-E", gf_e(mode, order).unwrap()),
        ("hp-R", hp_r(mode, order).unwrap()),
        ("hilbert-P", ladder_hilbert_series(mode, order.value() as u32, order).unwrap()),
        ("subgraph", weighted_subgraph_series_at(&g, &w, -1, order, &b).unwrap()),
    ]
}

fn truncation_stability() -> Outcome {
    let mut count = 0;
    for mode in Mode::ALL {
        let short = named_series(mode, Order::new(40));
        let long = named_series(mode, Order::new(45));
        for ((name, a), (_, c)) in short.iter().zip(&long) {
            c.eq_to_order(a, Order::new(40)).map_err(|m| format!("{name} i={mode}: {m:?}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} series"))
}

fn cli_contract() -> Outcome {
    let nrr = |extra: &[String]| {
        Command::new(env!("CARGO_BIN_EXE_nrr"))
            .args(["verify", "--target", "all", "--order", "40"])
            .args(extra)
            .output()
            .unwrap()
    };
    let clean = nrr(&[]);
    ensure(clean.status.code() == Some(0), || format!("clean run exited {:?}", clean.status.code()))?;
    for k in 0..=40 {
        let o = nrr(&["--corrupt-coefficient".into(), k.to_string()]);
        ensure(o.status.code() == Some(1), || format!("corrupting order {k} exited {:?}", o.status.code()))?;
        let text = String::from_utf8_lossy(&o.stdout);
        let needle = format!("first failure at order {k}:");
        ensure(text.contains(&needle), || format!("no witness for order {k}"))?;
    }
    Ok("clean run exits 0; each of 41 corrupted orders exits 1 with witness".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 worked example fixtures", worked_example),
        ("2 introductory fixtures", introduction_fixtures),
        ("3 signed count theorem, n <= 40", signed_count_theorem),
        ("4 signed series = product, order 40", signed_series_product),
        ("5 Rogers-Ramanujan truncations", rogers_ramanujan),
        ("6 weighted subgraph lemma, random suite", weighted_lemma),
        ("7 route agreement suites", route_agreement),
        ("8 polarization and HP_P identities", polarization_and_proposition),
        ("9 truncation stability 40 vs 45", truncation_stability),
        ("10 CLI verify contract", cli_contract),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail} ({secs:.2}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why} ({secs:.2}s)");
            }
        }
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
