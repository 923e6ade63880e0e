//! One line per acceptance criterion, `PASS` or `FAIL`, with timings.
//! Exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use strathom::formats::table::{self, TableEntry};
use strathom::{fuzz, json, BUNDLED_TABLE};
use strathom_core::certificate::{certificate, compare, CertificateConfig, ComparisonVerdict, KnotCertificate};
use strathom_core::diagram::{figure_eight, trefoil};
use strathom_core::filtered::FilteredSimplicialSet;
use strathom_core::fox::{alexander_polynomial, alexander_polynomial_full};
use strathom_core::homsearch::{hom_count, SearchOptions};
use strathom_core::knot_group::peripheral_system;
use strathom_core::laurent::Laurent;
use strathom_core::perm::SymmetricGroup;
use strathom_core::snf::{determinant, smith_normal_form, IntMatrix};
use strathom_core::{ChainSimplex, GroupPresentation, KnotDiagram, Poset};

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome, Option<Duration>);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn table_knots() -> Vec<TableEntry> {
    table::parse(BUNDLED_TABLE).expect("bundled table parses")
}

fn knot(name: &str) -> KnotDiagram {
    table_knots().into_iter().find(|e| e.name == name).unwrap().diagram
}

fn cert(d: &KnotDiagram, depth: usize) -> KnotCertificate {
    certificate(d, &CertificateConfig { quotient_depth: depth, base_arc: 1 }).unwrap()
}

// every nonempty subset that is totally ordered is one reduced chain
fn chains_oracle(p: &Poset) -> usize {
    let n = p.len();
    (1u32..1 << n)
        .filter(|mask| {
            let elems: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            elems.iter().all(|&a| elems.iter().all(|&b| a == b || p.lt(a, b) || p.lt(b, a)))
        })
        .count()
}

fn random_poset(rng: &mut ChaCha8Rng) -> Poset {
    let n = rng.random_range(1..=6usize);
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let density = rng.random_range(0.0..1.0);
    let mut less = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(density) {
                less.push((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    Poset::from_covers(&labels, &less).unwrap()
}

fn c1_poset_nerve() -> Outcome {
    let p = Poset::two_strata();
    let got: BTreeSet<Vec<usize>> = p.enumerate_reduced().iter().map(|c| c.vertices().to_vec()).collect();
    let want: BTreeSet<Vec<usize>> = [vec![0], vec![1], vec![0, 1]].into_iter().collect();
    check(got == want, || format!("reduced chains of 0<1: {got:?}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let trials = 500;
    for t in 0..trials {
        let p = random_poset(&mut rng);
        let chains = p.enumerate_reduced();
        let distinct: BTreeSet<&ChainSimplex> = chains.iter().collect();
        check(distinct.len() == chains.len(), || format!("trial {t}: repeated chain"))?;
        check(chains.iter().all(|c| c.is_reduced(&p)), || format!("trial {t}: non-reduced chain"))?;
        let oracle = chains_oracle(&p);
        check(chains.len() == oracle, || format!("trial {t}: {} chains, oracle {oracle}", chains.len()))?;
    }
    Ok(format!("{{(0),(1),(0,1)}} for 0<1; {trials} random posets match the subset oracle"))
}

fn c2_strata() -> Outcome {
    for k in 2..=6 {
        let circle = FilteredSimplicialSet::circle_model(k);
        circle.validate().map_err(|e| e.to_string())?;
        let sp = circle.strata_poset();
        check(sp == Poset::two_strata(), || format!("circle with {k} complement vertices: {sp:?}"))?;
    }
    Ok("circle models with 2..=6 complement vertices give 0<1".into())
}

fn c3_homology() -> Outcome {
    let t = table_knots();
    let mut failures = Vec::new();
    for e in &t {
        let p = peripheral_system(&e.diagram);
        if !p.abelianization().is_integers() || p.homology_images() != Some((1, 0)) {
            failures.push(e.name.clone());
        }
    }
    check(failures.is_empty(), || format!("failures: {failures:?}"))?;
    Ok(format!("{} knots: H1 = Z, meridian -> 1, longitude -> 0", t.len()))
}

fn c4_alexander() -> Outcome {
    let cases = [
        ("unknot", KnotDiagram::unknot(), Laurent::one()),
        ("trefoil", trefoil(), Laurent::from_coeffs(&[1, -1, 1])),
        ("figure-eight", figure_eight(), Laurent::from_coeffs(&[1, -3, 1])),
    ];
    for (name, d, want) in cases {
        let p = peripheral_system(&d);
        let raw = p.group();
        let s = raw.tietze_simplify_tracked();
        let m = s.map_word(&p.meridian);
        let paths = [
            ("fox, wirtinger", alexander_polynomial(&raw, &p.meridian)),
            ("minors, wirtinger", alexander_polynomial_full(&raw, &p.meridian)),
            ("fox, simplified", alexander_polynomial(&s.presentation, &m)),
            ("minors, simplified", alexander_polynomial_full(&s.presentation, &m)),
        ];
        for (path, got) in paths {
            let got = got.map_err(|e| format!("{name} {path}: {e}"))?;
            check(got == want, || format!("{name} {path}: got {got}, want {want}"))?;
        }
    }
    Ok("1, t^2 - t + 1, t^2 - 3t + 1 on both paths".into())
}

fn c5_alexander_table() -> Outcome {
    let t = table_knots();
    for e in &t {
        let p = peripheral_system(&e.diagram);
        let s = p.group().tietze_simplify_tracked();
        let a = alexander_polynomial(&s.presentation, &s.map_word(&p.meridian)).map_err(|x| x.to_string())?;
        let at1 = a.eval(1);
        check(matches!(at1, Some(1) | Some(-1)), || format!("{}: Δ(1) = {at1:?}", e.name))?;
        check(a.is_symmetric(), || format!("{}: {a} not palindromic", e.name))?;
        check(a.associated(&a.mirror()), || format!("{}: Δ(t) and Δ(1/t) differ", e.name))?;
    }
    Ok(format!("{} knots: Δ(1) = ±1 and Δ(t) ≐ Δ(1/t)", t.len()))
}

fn c6_reidemeister() -> Outcome {
    let names = ["3_1", "4_1", "5_2", "6_2", "7_4"];
    let sequences = 100u64;
    let start = Instant::now();
    let results: Vec<Result<usize, String>> = names
        .par_iter()
        .enumerate()
        .map(|(ki, name)| {
            let d = knot(name);
            let base = json::certificate_json(&cert(&d, 5)).map_err(|e| e.to_string())?;
            let mut max_crossings = 0;
            for s in 0..sequences {
                let steps = 1 + (s % 8) as usize;
                let run = fuzz::fuzz(&d, steps, 1000 * ki as u64 + s).map_err(|e| e.to_string())?;
                max_crossings = max_crossings.max(run.diagram.crossing_count());
                let got = json::certificate_json(&cert(&run.diagram, 5)).map_err(|e| e.to_string())?;
                if got != base {
                    let moves: Vec<String> = run.moves.iter().map(|m| m.to_string()).collect();
                    return Err(format!("{name} seed {s} moves [{}]: certificate changed", moves.join(", ")));
                }
            }
            Ok(max_crossings)
        })
        .collect();
    let elapsed = start.elapsed();
    let mut biggest = 0;
    for r in results {
        biggest = biggest.max(r?);
    }
    check(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{} knots x {sequences} sequences of 1..=8 moves, S3..S5, byte-identical JSON (up to {biggest} crossings)",
        names.len()
    ))
}

fn brute_force_count(p: &GroupPresentation, g: &SymmetricGroup) -> u64 {
    let order = g.order();
    let total = order.pow(p.generators as u32);
    let mut count = 0;
    for code in 0..total {
        let mut rest = code;
        let assign: Vec<u8> = (0..p.generators)
            .map(|_| {
                let x = (rest % order) as u8;
                rest /= order;
                x
            })
            .collect();
        let ok = p.relators.iter().all(|r| {
            let v = r.letters().iter().fold(g.identity(), |acc, l| {
                let x = if l.inv { g.inv(assign[l.gen]) } else { assign[l.gen] };
                g.mul(acc, x)
            });
            v == g.identity()
        });
        count += ok as u64;
    }
    count
}

fn c7_hom_oracle() -> Outcome {
    let s3 = SymmetricGroup::new(3).unwrap();
    let mut parts = Vec::new();
    for (name, d, want) in [("trefoil", trefoil(), 12), ("unknot", KnotDiagram::unknot(), 6), ("figure-eight", figure_eight(), 6)] {
        let p = peripheral_system(&d).group().tietze_simplify();
        if name == "trefoil" {
            check(p.generators == 2, || format!("trefoil simplified to {} generators", p.generators))?;
        }
        let assignments = 6u64.pow(p.generators as u32);
        let oracle = brute_force_count(&p, &s3);
        let search = hom_count(&p, 3, SearchOptions::default()).map_err(|e| e.to_string())?;
        check(oracle == search, || format!("{name}: search {search}, brute force {oracle}"))?;
        check(oracle == want, || format!("{name}: {oracle} homomorphisms, expected {want}"))?;
        parts.push(format!("{name} {search}/{assignments}"));
    }
    // the fast path restricted to meridian images agrees on these too
    let p = peripheral_system(&trefoil()).group().tietze_simplify();
    let fast = hom_count(&p, 3, SearchOptions { all_generators_conjugate: true }).map_err(|e| e.to_string())?;
    check(fast == 12, || format!("conjugate-generator search on trefoil: {fast}"))?;
    Ok(format!("S3 counts equal brute force: {}", parts.join(", ")))
}

fn c8_comparisons() -> Outcome {
    let depth = 5;
    let u = cert(&KnotDiagram::unknot(), depth);
    let t = cert(&trefoil(), depth);
    let f = cert(&figure_eight(), depth);
    for (a, b, label) in [(&u, &t, "unknot/trefoil"), (&u, &f, "unknot/figure-eight"), (&t, &f, "trefoil/figure-eight")] {
        let v = compare(a, b);
        check(v.is_distinct(), || format!("{label}: {v}"))?;
    }
    let fuzzed = fuzz::fuzz(&trefoil(), 10, 2024).map_err(|e| e.to_string())?;
    let tf = cert(&fuzzed.diagram, depth);
    let vt = compare(&t, &tf);
    check(!vt.is_distinct(), || format!("trefoil vs fuzzed trefoil: {vt}"))?;
    let sq = cert(&knot("square"), depth);
    let gr = cert(&knot("granny"), depth);
    check(sq.alexander == gr.alexander, || "square/granny Alexander polynomials differ".into())?;
    for (a, b) in sq.quotient_signatures.iter().zip(&gr.quotient_signatures) {
        check(a.hom_count == b.hom_count, || format!("square/granny hom counts differ in {}", a.target))?;
    }
    let v = compare(&sq, &gr);
    let separated = match &v {
        ComparisonVerdict::Distinct { witness } => {
            check(witness.starts_with("peripheral_signature"), || format!("square/granny separated by {witness}"))?;
            true
        }
        ComparisonVerdict::Indistinguishable { .. } => false,
    };
    let counts: Vec<String> = sq.quotient_signatures.iter().map(|s| format!("{} {}", s.target, s.hom_count)).collect();
    Ok(format!(
        "unknot/3_1/4_1 pairwise Distinct; trefoil vs {}-crossing fuzzed trefoil Indistinguishable; square vs granny equal Alexander and hom counts ({}), verdict {v}{}",
        fuzzed.diagram.crossing_count(),
        counts.join(", "),
        if separated { "" } else { " (not separated)" }
    ))
}

fn c9_snf() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let trials = 1000;
    let start = Instant::now();
    for t in 0..trials {
        let rows = rng.random_range(1..=6usize);
        let cols = rng.random_range(1..=6usize);
        let data: Vec<Vec<i128>> = (0..rows).map(|_| (0..cols).map(|_| rng.random_range(-9..=9)).collect()).collect();
        let a = IntMatrix::from_rows(&data, cols);
        let s = smith_normal_form(&a);
        check(s.u.mul(&a).mul(&s.v) == s.d, || format!("trial {t}: U·A·V != D for {data:?}"))?;
        check(determinant(&s.u).abs() == 1, || format!("trial {t}: U not unimodular"))?;
        check(determinant(&s.v).abs() == 1, || format!("trial {t}: V not unimodular"))?;
        check(s.d.is_diagonal(), || format!("trial {t}: D not diagonal"))?;
        let diag = s.diagonal();
        check(diag.iter().all(|&x| x >= 0), || format!("trial {t}: negative invariant factor {diag:?}"))?;
        for w in diag.windows(2) {
            let divides = if w[0] == 0 { w[1] == 0 } else { w[1] % w[0] == 0 };
            check(divides, || format!("trial {t}: divisibility fails in {diag:?}"))?;
        }
    }
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(5), || format!("took {elapsed:?}"))?;
    Ok(format!("{trials} random matrices up to 6x6, entries in [-9,9]"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        (1, "poset/nerve", c1_poset_nerve, Some(Duration::from_secs(1))),
        (2, "strata poset", c2_strata, None),
        (3, "knot-group homology", c3_homology, None),
        (4, "alexander values", c4_alexander, None),
        (5, "alexander symmetry", c5_alexander_table, None),
        (6, "reidemeister invariance", c6_reidemeister, Some(Duration::from_secs(60))),
        (7, "hom-search oracle", c7_hom_oracle, None),
        (8, "comparison matrix", c8_comparisons, None),
        (9, "smith normal form", c9_snf, Some(Duration::from_secs(5))),
    ];
    let mut failed = 0;
    for (n, name, f, limit) in criteria {
        let start = Instant::now();
        let out = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let out = match (out, limit) {
            (Ok(_), Some(l)) if elapsed > l => Err(format!("over the {l:?} budget")),
            (o, _) => o,
        };
        match out {
            Ok(detail) => println!("criterion {n} PASS {name}: {detail} [{elapsed:.2?}]"),
            Err(why) => {
                failed += 1;
                println!("criterion {n} FAIL {name}: {why} [{elapsed:.2?}]");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
