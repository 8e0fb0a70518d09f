//! One test per acceptance criterion; each writes a `criterion N: PASS|FAIL`
//! line to stderr, uncaptured, before asserting. `cli_contract` holds the
//! finer-grained command-line checks behind criterion 13.

mod cli_contract;

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};
use std::time::Instant;

use arrangeops::arrangement::{
    apply_word, classify_rank3, compose_hat, compose_normalized, count_bounded_regions, decode_tuple,
    decompose_generators, encode_tuple, gauge_act, moving_frame, normalize, p_reverse, permutahedron_chain,
    reduced_word, upper_envelope, validate, z_project, Arrangement, Rank3Type,
};
use arrangeops::geometry::Point2;
use arrangeops::interval::{check_barycentric, tiling_compose, IntervalTiling};
use arrangeops::io::{Document, Payload};
use arrangeops::rational::{format_rational, int, rat, Rational};
use arrangeops::sample::seeded_rng;
use arrangeops::samplers;
use arrangeops::scattering::{check_factorization, run_yang_baxter_suite, RMatrixTheory};
use arrangeops::Operad;
use rand::Rng;

fn report(n: &str, ok: bool, detail: impl AsRef<str>) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    let line = format!("criterion {n}: {verdict} ({})\n", detail.as_ref());
    let _ = std::io::stderr().write_all(line.as_bytes());
}

fn pair(rng: &mut arrangeops::sample::SampleRng, max_rank: usize) -> (Arrangement, usize, Arrangement) {
    let p = samplers::arrangement_up_to(rng, max_rank);
    let q = samplers::arrangement_up_to(rng, max_rank);
    let i = rng.gen_range(1..=p.arity());
    (p, i, q)
}

fn ints(xs: &[(i64, i64)]) -> Arrangement {
    validate(xs.iter().map(|&(q, p)| (int(q), int(p))).collect()).unwrap()
}

#[test]
fn criterion_01_operad_laws() {
    let start = Instant::now();
    let names = ["tiling", "points", "chain", "word", "tree", "arrangement", "tuple"];
    let mut failed = Vec::new();
    for name in names {
        let r = samplers::run_named_law_suite(name, 1000, 7).unwrap();
        if !(r.passed() && r.sequential.samples_tested == 1000 && r.parallel.samples_tested == 1000) {
            failed.push(name);
        }
    }
    let secs = start.elapsed().as_secs_f64();
    let ok = failed.is_empty() && secs < 120.0;
    report(
        "1",
        ok,
        format!("7 operads x 2000 triples in {secs:.1}s, failing: {failed:?}"),
    );
    assert!(ok);
}

#[test]
fn criterion_02_route_equivalence() {
    let mut rng = seeded_rng(2, 0);
    let mut bad = 0;
    for _ in 0..500 {
        let (p, i, q) = pair(&mut rng, 8);
        let (np, rho) = normalize(&p);
        let (nq, _) = normalize(&q);
        let w = compose_normalized(&encode_tuple(&np), i, &encode_tuple(&nq)).unwrap();
        let routed = gauge_act(&rho, &decode_tuple(&w).unwrap().into_inner()).unwrap();
        if routed != compose_hat(&p, i, &q).unwrap() {
            bad += 1;
        }
    }
    report("2", bad == 0, format!("{bad} of 500 pairs disagree"));
    assert_eq!(bad, 0);
}

#[test]
fn criterion_03_moving_frame() {
    let mut rng = seeded_rng(3, 0);
    let bad = (0..500)
        .filter(|_| {
            let (p, i, q) = pair(&mut rng, 6);
            moving_frame(&compose_hat(&p, i, &q).unwrap()) != moving_frame(&p)
        })
        .count();
    report("3", bad == 0, format!("{bad} of 500 pairs move the frame"));
    assert_eq!(bad, 0);
}

#[test]
fn criterion_04_breakpoint_regression() {
    let a = IntervalTiling::from_breakpoints(&[rat(22, 100), rat(6, 10)]).unwrap();
    let b = IntervalTiling::from_breakpoints(&[rat(2, 10)]).unwrap();
    let got = tiling_compose(&a, 2, &b).unwrap().breakpoints();
    let want = vec![rat(22, 100), rat(296, 1000), rat(6, 10)];
    let shown: Vec<String> = got.iter().map(format_rational).collect();
    report("4", got == want, shown.join(", "));
    assert_eq!(got, want);
}

#[test]
fn criterion_05_barycentric() {
    let mut rng = seeded_rng(5, 0);
    let mut bad = 0;
    for _ in 0..100 {
        let w = arrangeops::sample::simplex_point(&mut rng, 3);
        if !check_barycentric(&w[0], &w[1]).unwrap() {
            bad += 1;
        }
    }
    let third = rat(1, 3);
    let lhs = tiling_compose(
        &IntervalTiling::generator(&rat(2, 3)).unwrap(),
        1,
        &IntervalTiling::generator(&rat(1, 2)).unwrap(),
    )
    .unwrap();
    let thirds = lhs.lengths() == [third.clone(), third.clone(), third.clone()];
    let ok = bad == 0 && thirds && check_barycentric(&third, &third).unwrap();
    report(
        "5",
        ok,
        format!("{bad} of 100 random pairs fail; thirds instance {thirds}"),
    );
    assert!(ok);
}

#[test]
fn criterion_06_generators() {
    let mut rng = seeded_rng(6, 0);
    let mut bad = 0;
    for _ in 0..200 {
        let p = samplers::arrangement_up_to(&mut rng, 10);
        let (base, gens) = decompose_generators(&p);
        let rebuilt = gens
            .iter()
            .fold(base, |acc, (slot, g)| compose_hat(&acc, *slot, g).unwrap());
        if rebuilt != p || gens.iter().any(|(_, g)| g.rank() != 3) {
            bad += 1;
        }
    }
    report("6", bad == 0, format!("{bad} of 200 decompositions fail"));
    assert_eq!(bad, 0);
}

#[test]
fn criterion_07_projection_morphism() {
    let mut rng = seeded_rng(7, 0);
    let mut bad = 0;
    for _ in 0..300 {
        let (p, i, q) = pair(&mut rng, 6);
        let at = samplers::upper_point(&mut rng);
        let lhs = z_project(&compose_hat(&p, i, &q).unwrap(), &at).unwrap();
        let rhs = compose_hat(&z_project(&p, &at).unwrap(), i, &z_project(&q, &at).unwrap()).unwrap();
        if lhs != rhs || lhs.concurrency_point() != Some(at) {
            bad += 1;
        }
    }
    report("7", bad == 0, format!("{bad} of 300 samples fail"));
    assert_eq!(bad, 0);
}

#[test]
fn criterion_08_permutahedron() {
    let left = ints(&[(0, 3), (1, 1), (2, 0)]);
    let right = ints(&[(0, 1), (1, 0), (2, -2)]);
    let concurrent = ints(&[(0, 2), (1, 1), (2, 0)]);
    let types_ok = classify_rank3(&left).unwrap() == Rank3Type::MiddleLeft
        && classify_rank3(&right).unwrap() == Rank3Type::MiddleRight
        && classify_rank3(&concurrent).unwrap() == Rank3Type::Concurrent;
    let words_ok = reduced_word(&left).unwrap() == [1, 2, 1] && reduced_word(&right).unwrap() == [2, 1, 2];
    let chain = permutahedron_chain(&concurrent);
    let block_ok = chain.events.len() == 1 && chain.events[0].blocks == vec![vec![1, 2, 3]];

    let mut rng = seeded_rng(8, 0);
    let mut bad = 0;
    for _ in 0..200 {
        let n = rng.gen_range(2..=7);
        let p = samplers::generic_arrangement(&mut rng, n);
        let w = reduced_word(&p).unwrap();
        if w.len() != n * (n - 1) / 2 || apply_word(n, &w) != (1..=n).rev().collect::<Vec<_>>() {
            bad += 1;
        }
    }
    let ok = types_ok && words_ok && block_ok && bad == 0;
    report(
        "8",
        ok,
        format!("types {types_ok}, words {words_ok}, concurrent block {block_ok}, {bad} of 200 random words fail"),
    );
    assert!(ok);
}

#[test]
fn criterion_09_bounded_regions() {
    let mut rng = seeded_rng(9, 0);
    let mut bad = 0;
    for _ in 0..50 {
        if count_bounded_regions(&samplers::generic_arrangement(&mut rng, 4)) != 3 {
            bad += 1;
        }
        if count_bounded_regions(&samplers::generic_arrangement(&mut rng, 7)) != 15 {
            bad += 1;
        }
        let at = samplers::upper_point(&mut rng);
        let rank = rng.gen_range(2..=7);
        if count_bounded_regions(&samplers::concurrent_arrangement(&mut rng, rank, &at)) != 0 {
            bad += 1;
        }
    }
    report("9", bad == 0, format!("{bad} of 150 counts wrong"));
    assert_eq!(bad, 0);
}

fn cross(o: &Point2, a: &Point2, b: &Point2) -> Rational {
    (&a.q - &o.q) * (&b.t - &o.t) - (&a.t - &o.t) * (&b.q - &o.q)
}

fn in_closed_polygon(x: &Point2, poly: &[Point2]) -> bool {
    let zero = Rational::from_integer(0.into());
    let n = poly.len();
    let mut inside = false;
    for k in 0..n {
        let (a, b) = (&poly[k], &poly[(k + 1) % n]);
        let between = |u: &Rational, v: &Rational, w: &Rational| (u <= w && w <= v) || (v <= w && w <= u);
        if cross(a, b, x) == zero && between(&a.q, &b.q, &x.q) && between(&a.t, &b.t, &x.t) {
            return true;
        }
        if (a.t > x.t) != (b.t > x.t) {
            let s = cross(a, b, x);
            if (b.t > a.t && s > zero) || (b.t < a.t && s < zero) {
                inside = !inside;
            }
        }
    }
    inside
}

#[test]
fn criterion_10_envelope_containment() {
    let mut rng = seeded_rng(10, 0);
    let mut bad = 0;
    for _ in 0..200 {
        let rank = rng.gen_range(3..=7);
        let p = samplers::arrangement_of_rank(&mut rng, rank);
        let env = upper_envelope(&p);
        let all_inside = (1..=rank).all(|i| (i + 1..=rank).all(|j| in_closed_polygon(&p.crossing(i, j), &env)));
        if !all_inside {
            bad += 1;
        }
    }
    report("10", bad == 0, format!("{bad} of 200 envelopes miss a crossing"));
    assert_eq!(bad, 0);
}

#[test]
fn criterion_11_yang_baxter() {
    let yang = RMatrixTheory::yang(1.0);
    let yb = run_yang_baxter_suite(&yang, 20, 11, 1e-10);
    let mut rng = seeded_rng(11, 0);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let p = samplers::generic_arrangement(&mut rng, 4);
        let at = samplers::upper_point(&mut rng);
        worst = worst.max(check_factorization(&yang, &p, &at).unwrap());
    }
    let ok = yb.passed() && worst < 1e-9;
    report(
        "11",
        ok,
        format!(
            "Yang residual {:.1e} on 20 triples, factorization {worst:.1e} on 50 arrangements",
            yb.max_residual
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_11_broken_evaluator_is_detected() {
    let broken = RMatrixTheory::broken();
    let mut rng = seeded_rng(11, 1);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let rank = rng.gen_range(3..=5);
        let p = samplers::generic_arrangement(&mut rng, rank);
        let at = samplers::upper_point(&mut rng);
        worst = worst.max(check_factorization(&broken, &p, &at).unwrap());
    }
    let yb = run_yang_baxter_suite(&broken, 20, 11, 1e-6);
    let ok = worst > 1e-6 || !yb.passed();
    report(
        "11 (broken evaluator)",
        ok,
        format!(
            "max factorization residual {worst:.1e}, Yang-Baxter residual {:.1e}; a diagonal S(u) commutes in every order",
            yb.max_residual
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_12_equivariance() {
    let mut rng = seeded_rng(12, 0);
    let (mut rev, mut left, mut right) = (0, 0, 0);
    for _ in 0..300 {
        let (p, i, q) = pair(&mut rng, 6);
        let pq = compose_hat(&p, i, &q).unwrap();
        if p_reverse(&pq) != compose_hat(&p_reverse(&p), p.arity() - i + 1, &p_reverse(&q)).unwrap() {
            rev += 1;
        }
        let g = samplers::stabilizer(&mut rng);
        if gauge_act(&g, &pq).unwrap() != compose_hat(&gauge_act(&g, &p).unwrap(), i, &q).unwrap() {
            left += 1;
        }
        if compose_hat(&p, i, &gauge_act(&g, &q).unwrap()).unwrap() != pq {
            right += 1;
        }
    }
    let ok = rev + left + right == 0;
    report(
        "12",
        ok,
        format!("reversal {rev}, left gauge {left}, right gauge {right} failures of 300"),
    );
    assert!(ok);
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arrangeops"))
        .args(args)
        .env_remove("ARRANGEOPS_SEED")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap_or(-1)
}

#[test]
fn criterion_13_cli_contract() {
    let f = |n: &str| fixture(n).to_string_lossy().into_owned();
    let dir = tempfile::tempdir().unwrap();
    let composed = dir.path().join("composed.json");
    let svg = dir.path().join("generic4.svg");
    let mut problems = Vec::new();

    let expect = [
        (vec!["validate".into(), f("concurrent_p.json")], 0),
        (vec!["validate".into(), f("parallel.json")], 2),
        (vec!["validate".into(), f("unsorted.json")], 2),
        (vec!["validate".into(), f("malformed.json")], 2),
        (vec!["validate".into(), f("missing.json")], 1),
        (vec!["regions".into(), "--bogus".into(), f("generic4.json")], 1),
        (vec!["reduced-word".into(), f("concurrent_p.json")], 2),
        (
            vec![
                "laws".into(),
                "--operad".into(),
                "arrangement".into(),
                "--samples".into(),
                "1000".into(),
                "--seed".into(),
                "7".into(),
            ],
            0,
        ),
        (vec!["yb-check".into(), "--theory".into(), "yang".into()], 0),
        (vec!["yb-check".into(), "--theory".into(), "skew".into()], 3),
        (
            vec![
                "compose".into(),
                f("concurrent_p.json"),
                "1".into(),
                f("concurrent_q.json"),
                "--out".into(),
                composed.to_string_lossy().into_owned(),
            ],
            0,
        ),
        (vec!["validate".into(), composed.to_string_lossy().into_owned()], 0),
        (
            vec![
                "render".into(),
                f("generic4.json"),
                "--out".into(),
                svg.to_string_lossy().into_owned(),
                "--envelope".into(),
            ],
            0,
        ),
    ];
    for (args, want) in &expect {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = cli(&args);
        if code(&out) != *want {
            problems.push(format!("{:?} exited {} not {want}", &args[..2], code(&out)));
        }
    }

    let parallel = cli(&["validate", &f("parallel.json")]);
    if !String::from_utf8_lossy(&parallel.stderr).contains("ParallelPair(1, 2)") {
        problems.push("parallel diagnostic lacks ParallelPair(1, 2)".into());
    }

    let want = ints(&[(-1, 1), (0, 0), (1, -1)]);
    let want = compose_hat(
        &want,
        1,
        &validate(vec![(int(0), rat(1, 2)), (rat(1, 2), int(0)), (int(1), rat(-1, 2))]).unwrap(),
    )
    .unwrap();
    match std::fs::read_to_string(&composed).map(|t| Document::parse(&t)) {
        Ok(Ok(Document {
            payload: Payload::Arrangement(a),
            ..
        })) if a == want && a.to_string() == "((-1, 1), (-1/2, 1/2), (0, 0), (1, -1))" => {}
        _ => problems.push("composed output does not re-validate to the rank-4 result".into()),
    }

    match std::fs::read_to_string(&svg) {
        Ok(text) => match roxmltree::Document::parse(&text) {
            Ok(doc) => {
                let class = |c: &str| {
                    doc.descendants()
                        .filter(|n| n.has_tag_name("line") && n.attribute("class") == Some(c))
                        .count()
                };
                if class("line") != 4 || class("root") != 1 {
                    problems.push(format!("svg has {} lines and {} roots", class("line"), class("root")));
                }
            }
            Err(e) => problems.push(format!("svg is not XML: {e}")),
        },
        Err(e) => problems.push(format!("svg missing: {e}")),
    }

    let ok = problems.is_empty();
    report(
        "13",
        ok,
        if ok {
            format!("{} invocations", expect.len() + 1)
        } else {
            problems.join("; ")
        },
    );
    assert!(ok, "{problems:?}");
}
