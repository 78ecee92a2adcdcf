//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::Rng;
use symalg::construct::{self, Kind};
use symalg::format::{parse_matrix, to_json};
use symalg::predicates::Space;
use symalg::verify::{
    self, build_constraints, dimension_probe, grading_check_with, mps_triple_product_check, parasymmetry_check,
    rank_bound_check, reversible_implies_a_check, rv_equals_av, trial_rng, AgreementReport, GradingPair, Oracle,
    RankTarget,
};
use symalg::{classify, from_block, BlockForm, Matrix, Property, Scalar, SplitKind};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const SEED: u64 = 20240601;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    ensure(start.elapsed() < limit, format!("took {:.1?}, limit {limit:?}", start.elapsed()))
}

fn e<T: std::fmt::Display>(x: T) -> String {
    x.to_string()
}

fn ints(rows: &[&[i64]]) -> Matrix {
    Matrix::from_int_rows(rows)
}

fn printed_square() -> Matrix {
    ints(&[
        &[-2, 3, 0, -4, 5, -2],
        &[1, -2, -1, 5, -6, 3],
        &[-2, 3, 0, -4, 5, -2],
        &[4, -5, 2, 2, -3, 0],
        &[-5, 6, -3, -1, 2, 1],
        &[4, -5, 2, 2, -3, 0],
    ])
}

fn reference_example() -> Outcome {
    let start = Instant::now();
    let block = ints(&[
        &[0, 0, 0, 1, -1, 1],
        &[0, 0, 0, -2, 2, -2],
        &[0, 0, 0, 1, -1, 1],
        &[-2, 4, -2, 1, 0, -1],
        &[2, -4, 2, -1, 0, 1],
        &[-2, 4, -2, 1, 0, -1],
    ]);
    let m = from_block(&BlockForm::from_conjugate(block.scale(&Scalar::from_int(2))).map_err(e)?);
    ensure(m == printed_square(), format!("reconstruction differs:\n{m}"))?;
    let r = classify(&m).map_err(e)?;
    for p in [Property::S, Property::M, Property::P] {
        ensure(r.weight(p) == Some(&Scalar::zero()), format!("{p} weight {:?}", r.weight(p)))?;
    }
    within(start, Duration::from_secs(1))?;
    Ok(format!("bit-exact, S/M/P weight 0 ({:.0?})", start.elapsed()))
}

fn dimension_formulas() -> Outcome {
    let start = Instant::now();
    for n in 2..=8 {
        for space in [Space::S, Space::V] {
            let p = dimension_probe(space, n, SEED).map_err(e)?;
            ensure(p.passed, format!("{p:?}"))?;
        }
        for kind in SplitKind::ALL {
            let (even, odd) = kind.spaces();
            if even.requires_even() && n % 2 == 1 {
                continue;
            }
            let (de, d_odd) = verify::direct_sum_dimensions((even, odd), n).map_err(e)?;
            ensure(de + d_odd == n * n, format!("{even}+{odd} at n={n}: {de}+{d_odd}"))?;
        }
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("n = 2..8, S/V formulas and four direct sums ({:.1?})", start.elapsed()))
}

fn grading_suites() -> Outcome {
    let start = Instant::now();
    let mut oracle = Oracle::new();
    let mut checks = 0;
    for pair in GradingPair::ALL {
        for n in 2..=6 {
            if pair.requires_even() && n % 2 == 1 {
                continue;
            }
            let r = grading_check_with(&mut oracle, pair, n, 200, SEED).map_err(e)?;
            ensure(r.passed(), format!("{} n={n}: {} failures, {:?}", pair.name(), r.failure_count, r.witnesses.first()))?;
            checks += r.trials * r.laws.len();
        }
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("7 pairs, n = 2..6, {checks} products, 0 failures ({:.1?})", start.elapsed()))
}

fn impossibility() -> Outcome {
    for n in [3, 5, 7] {
        let s = build_constraints(Space::MArraySum, n).map_err(e)?;
        ensure(s.nullity() == 0, format!("nullity {} at n={n}", s.nullity()))?;
    }
    Ok("array-sum system nullity 0 at n = 3, 5, 7".into())
}

fn rank_bounds() -> Outcome {
    let cases: Vec<(RankTarget, Vec<usize>)> = vec![
        (RankTarget::MpsWeightless, vec![4, 6, 8]),
        (RankTarget::MpsWeighted, vec![4, 6, 8]),
        (RankTarget::Reversible, (2..=8).collect()),
        (RankTarget::V, (2..=9).collect()),
    ];
    let mut summary = Vec::new();
    for (target, ns) in cases {
        let mut max = 0;
        for n in ns {
            let r = rank_bound_check(target, n, 200, SEED).map_err(e)?;
            ensure(r.passed(), format!("{r:?}"))?;
            max = max.max(r.max_rank);
        }
        summary.push(format!("{target:?} ≤ {} (max {max})", target.bound()));
    }
    Ok(summary.join(", "))
}

fn triple_products() -> Outcome {
    for n in [4, 6, 8] {
        for trial in 0..100 {
            let mut rng = trial_rng(SEED, trial);
            let t = [
                construct::random_mps_pair(n, &mut rng).map_err(e)?,
                construct::random_mps_pair(n, &mut rng).map_err(e)?,
                construct::random_mps_pair(n, &mut rng).map_err(e)?,
            ];
            ensure(mps_triple_product_check(&t).map_err(e)?, format!("n={n} trial {trial}"))?;
        }
    }
    Ok("100 triples each at n = 4, 6, 8".into())
}

fn structural() -> Outcome {
    for n in 2..=6 {
        ensure(rv_equals_av(n).map_err(e)?, format!("RV ≠ AV at n={n}"))?;
        ensure(reversible_implies_a_check(n, 200, SEED).map_err(e)?, format!("reversible without (A) at n={n}"))?;
    }
    let mut dependent = 0;
    for trial in 0..100u64 {
        let mut rng = trial_rng(SEED, trial);
        let n = [4, 6, 8][trial as usize % 3];
        let (g, d) = construct::random_mps_pair(n, &mut rng).map_err(e)?;
        let d = if trial % 3 == 0 { g.scale(&Scalar::from_int(rng.gen_range(-3..=3))) } else { d };
        let r = parasymmetry_check(&g, &d).map_err(e)?;
        ensure(r.passed(), format!("parasymmetry draw {trial}: {r:?}"))?;
        dependent += usize::from(r.dependent);
    }
    Ok(format!("RV = AV and reversible ⇒ (A) for n = 2..6; parasymmetry on 100 draws ({dependent} dependent)"))
}

fn agreement() -> Outcome {
    let start = Instant::now();
    let mut oracle = Oracle::new();
    let mut report = AgreementReport::default();
    let ns: Vec<usize> = (2..=7).collect();
    verify::oracle_basis_agreement(&mut oracle, ns.iter().copied(), &mut report).map_err(e)?;
    verify::random_agreement(&mut oracle, &ns, 1000, SEED, &mut report).map_err(e)?;
    ensure(report.passed(), format!("{report:?}"))?;
    Ok(format!("{} trials, n = 2..7, 0 disagreements ({:.1?})", report.trials, start.elapsed()))
}

fn cli_golden() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_symalg");
    let dir = tempfile::tempdir().map_err(e)?;
    let run = |args: &[&str]| Command::new(bin).args(args).env_remove("SYMALG_SEED").output().map_err(e);

    // Serialization: 1000 random matrices with √2 parts.
    let mut rng = trial_rng(SEED, 0);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=6);
        let m = Matrix::from_fn(n, n, |_, _| {
            Scalar::from_parts((rng.gen_range(-50..50), rng.gen_range(1..9)), (rng.gen_range(-50..50), rng.gen_range(1..9)))
        });
        ensure(parse_matrix(&to_json(&m)).map_err(e)? == m, "JSON round trip")?;
    }
    // Through the binary: block applied twice returns the input.
    let m = Matrix::from_fn(5, 5, |i, j| Scalar::from_parts(((i * 3 + j) as i64 - 6, 2), (j as i64 - i as i64, 3)));
    let p0 = dir.path().join("m.json");
    std::fs::write(&p0, to_json(&m)).map_err(e)?;
    let once = run(&["block", p0.to_str().unwrap()])?;
    let p1 = dir.path().join("b.json");
    std::fs::write(&p1, &once.stdout).map_err(e)?;
    let twice = run(&["block", p1.to_str().unwrap()])?;
    ensure(parse_matrix(&String::from_utf8_lossy(&twice.stdout)).map_err(e)? == m, "CLI block round trip")?;

    // Exit codes.
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"n\": 2}").map_err(e)?;
    ensure(run(&["classify", bad.to_str().unwrap()])?.status.code() == Some(2), "exit code 2")?;
    ensure(run(&["construct", "--type", "mps", "--n", "5"])?.status.code() == Some(3), "exit code 3")?;

    // construct → classify for every type tag.
    for kind in Kind::ALL {
        let n = if kind.requires_even() { 6 } else { 5 };
        let path = dir.path().join(format!("{kind}.json"));
        let out = run(&["construct", "--type", kind.tag(), "--n", &n.to_string(), "--seed", "11", "-o", path.to_str().unwrap()])?;
        ensure(out.status.success(), format!("construct {kind}: {}", String::from_utf8_lossy(&out.stderr)))?;
        let out = run(&["classify", path.to_str().unwrap()])?;
        ensure(out.status.success(), format!("classify {kind}"))?;
        let m = parse_matrix(&std::fs::read_to_string(&path).map_err(e)?).map_err(e)?;
        ensure(kind.space().contains(&m).map_err(e)?, format!("{kind} output outside {}", kind.space()))?;
    }
    Ok("1000 exact round trips, exit codes 2/3, construct→classify for 12 types".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("reference square reproduction", reference_example),
        ("dimension formulas", dimension_formulas),
        ("grading suites", grading_suites),
        ("odd-order array sum impossibility", impossibility),
        ("rank bounds", rank_bounds),
        ("MPS triple product", triple_products),
        ("structural identities", structural),
        ("dual-route and oracle agreement", agreement),
        ("CLI golden tests", cli_golden),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS [{}] {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL [{}] {name}: {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
