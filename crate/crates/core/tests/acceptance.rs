//! Acceptance gate. Each criterion prints one PASS/FAIL line; any failure
//! makes the binary exit non-zero.

use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;
use std::time::{Duration, Instant};

use cage_spectra::feasibility::{
    f_weight, g_weight, multiplicity_order_checks, rounded_multiplicities, scan_triples, spectral_feasibility,
    FeasibilityError, FeasibilityReport, GWeight, IntegralityStatus, Verdict,
};
use cage_spectra::graphcore::{catalog, verify_all_ones_identity, verify_path_count_identity};
use cage_spectra::intersection::{minimal_polynomial_check, trace_identity_check};
use cage_spectra::moore_bound;
use num_bigint::{BigInt, BigUint};

/// Relative tolerance for multiplicity comparisons.
const TOLERANCE: f64 = 1e-6;

type Outcome = Result<(), String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn moore_regression() -> Outcome {
    for (k, g, n) in [(3, 6, 14u32), (4, 6, 26), (3, 8, 30)] {
        let m = moore_bound(k, g).map_err(|e| e.to_string())?;
        check(m == BigUint::from(n), || format!("M({k},{g}) = {m}, expected {n}"))?;
    }
    for k in 3..=10u32 {
        let m = moore_bound(k, 4).map_err(|e| e.to_string())?;
        check(m == BigUint::from(2 * k), || format!("M({k},4) = {m}"))?;
    }
    Ok(())
}

fn exact_identities() -> Outcome {
    for (name, d) in [("heawood", 3), ("tutte_coxeter", 4)] {
        let g = catalog(name).map_err(|e| e.to_string())?;
        let path = verify_path_count_identity(&g, 3, d, 0).map_err(|e| format!("{name}: {e}"))?;
        check(path.holds(), || format!("{name}: path-count residual {}", path.max_abs_residual))?;
        let ones = verify_all_ones_identity(&g, 3, d, 0).map_err(|e| format!("{name}: {e}"))?;
        check(ones.holds(), || format!("{name}: all-ones residual {}", ones.max_abs_residual))?;
    }
    Ok(())
}

fn trace_oracle() -> Outcome {
    for (name, d) in [("heawood", 3), ("tutte_coxeter", 4)] {
        let g = catalog(name).map_err(|e| e.to_string())?;
        let report = trace_identity_check(&g, 3, d).map_err(|e| format!("{name}: {e}"))?;
        check(report.rows.len() == 2 * d as usize, || format!("{name}: {} rows", report.rows.len()))?;
        check(report.passes(), || format!("{name}: first failure at q = {:?}", report.first_failure))?;
    }
    Ok(())
}

fn minimal_polynomial() -> Outcome {
    for k in 3..=7 {
        for diameter in 2..=8 {
            let r = minimal_polynomial_check(k, diameter).map_err(|e| e.to_string())?;
            check(r.annihilates(), || format!("k = {k}, D = {diameter}: residual {}", r.residual))?;
        }
    }
    Ok(())
}

fn worked_instance() -> Outcome {
    let r = spectral_feasibility(4, 3, 2).map_err(|e| e.to_string())?;
    check(r.verdict == Verdict::SpectrallyAdmissible, || format!("verdict {}", r.verdict))?;
    let expected = [(-4.0, 1.0), (-2.0, 7.0), (-(2f64.sqrt()), 6.0), (2f64.sqrt(), 6.0), (2.0, 7.0), (4.0, 1.0)];
    check(r.multiplicities.entries.len() == expected.len(), || "wrong number of eigenvalues".into())?;
    for (&(theta, m), &(t0, m0)) in r.multiplicities.entries.iter().zip(&expected) {
        check((theta - t0).abs() <= TOLERANCE && (m - m0).abs() <= TOLERANCE * m0, || {
            format!("m({theta}) = {m}, expected m({t0}) = {m0}")
        })?;
    }
    let n = moore_bound(4, 6).map_err(|e| e.to_string())? + 2u32;
    check(r.n == n && n == BigUint::from(28u32), || format!("n = {}", r.n))?;
    check((r.multiplicities.total() - 28.0).abs() <= TOLERANCE * 28.0, || "sum of multiplicities".into())?;
    for root in r.roots() {
        let (a, b) = root.integrality.enclosure.integer_span();
        check(a == b && root.integrality.status == IntegralityStatus::Integral, || {
            format!("enclosure {:?} of theta = {}", root.integrality.enclosure, root.record.theta)
        })?;
    }
    let rounded = rounded_multiplicities(&r).ok_or("not all integral")?;
    let want: Vec<BigInt> = [1, 7, 6, 6, 7, 1].into_iter().map(BigInt::from).collect();
    check(rounded == want, || format!("rounded multiplicities {rounded:?}"))?;
    check(r.moment_check.max_q >= 5 && r.moment_check.passes(), || format!("{:?}", r.moment_check))?;
    check(r.sum_check.passes(), || format!("{:?}", r.sum_check))
}

const DUAL_TRIPLES: [(u32, u32, u32); 5] = [(4, 3, 2), (5, 5, 2), (6, 5, 4), (7, 7, 2), (8, 7, 6)];

fn dual_formula() -> Outcome {
    for (k, d, e) in DUAL_TRIPLES {
        let r = spectral_feasibility(k, d, e).map_err(|e| e.to_string())?;
        for root in r.roots() {
            let rel = root.relative_disagreement();
            check(rel <= TOLERANCE, || {
                format!("({k},{d},{e}) theta = {}: closed {} trig {} rel {rel:e}", root.record.theta, root.closed_form, root.trig)
            })?;
        }
    }
    Ok(())
}

fn gap_row(report: &FeasibilityReport) -> Outcome {
    let tag = format!("({},{},{})", report.k, report.d, report.e);
    check(report.verdict == Verdict::ExcludedByGap, || format!("{tag}: verdict {}", report.verdict))?;
    let gap = report.gap.report().ok_or_else(|| format!("{tag}: gap not evaluated"))?;
    check(gap.lower() > 0.0 && gap.upper() < 1.0, || format!("{tag}: gap interval {:?}", gap.certified))?;
    check(!gap.contains_integer(), || format!("{tag}: gap interval contains an integer"))?;
    check(gap.chain.holds(), || format!("{tag}: closing chain {:?}", gap.chain))
}

fn gap_scan() -> Outcome {
    let ks: Vec<u32> = (4..=20).collect();
    let triples: Vec<_> = scan_triples(&ks, &[7, 9, 11], &[2, 4, 6])
        .into_iter()
        .filter(|&(k, _, e)| e + 2 <= k)
        .collect();
    check(triples.len() == 135, || format!("{} in-regime triples", triples.len()))?;
    let next = AtomicUsize::new(0);
    let failures = Mutex::new(Vec::new());
    let workers = thread::available_parallelism().map_or(1, |n| n.get());
    thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(k, d, e)) = triples.get(i) else { break };
                let outcome = spectral_feasibility(k, d, e).map_err(|err| format!("({k},{d},{e}): {err}"));
                if let Err(msg) = outcome.and_then(|r| gap_row(&r)) {
                    failures.lock().unwrap().push(msg);
                }
            });
        }
    });
    let mut failures = failures.into_inner().unwrap();
    failures.sort();
    check(failures.is_empty(), || failures.join("; "))
}

fn grid(points: usize) -> Vec<f64> {
    (1..=points).map(|j| -1.0 + 2.0 * j as f64 / (points + 1) as f64).collect()
}

fn property_suites() -> Outcome {
    for k in 3..=10 {
        let zs = grid(100);
        let f: Vec<f64> = zs.iter().map(|&z| f_weight(k, z).unwrap()).collect();
        for &z in &zs {
            check(f_weight(k, z) == f_weight(k, -z), || format!("f not even at k = {k}, z = {z}"))?;
        }
        for w in f.windows(3) {
            let second = w[0] - 2.0 * w[1] + w[2];
            check(second <= 0.0, || format!("f second difference {second:e} at k = {k}"))?;
        }
    }
    for (k, d, e) in [(4, 3, 2), (6, 5, 4), (8, 7, 6)] {
        let zs = grid(50);
        for (which, increasing) in [(GWeight::G1, true), (GWeight::G2, false), (GWeight::G3, true)] {
            let g: Vec<f64> = zs
                .iter()
                .map(|&z| g_weight(which, k, d, e, z))
                .collect::<Result<_, _>>()
                .map_err(|err| err.to_string())?;
            for w in g.windows(2) {
                let ok = if increasing { w[1] > w[0] } else { w[1] < w[0] };
                check(ok, || format!("{which:?} not monotone at ({k},{d},{e})"))?;
            }
        }
    }
    for (k, d, e) in DUAL_TRIPLES {
        let r = multiplicity_order_checks(k, d, e).map_err(|e| e.to_string())?;
        check(r.symmetric(), || format!("({k},{d},{e}): symmetry errors {} {}", r.mu_symmetry_error, r.lambda_symmetry_error))?;
    }
    let r = multiplicity_order_checks(7, 7, 2).map_err(|e| e.to_string())?;
    let (mu, lambda) = (r.mu_minimality_margin, r.lambda_minimality_margin);
    check(mu.is_some_and(|m| m > 0.0) && lambda.is_some_and(|m| m > 0.0), || {
        format!("minimality margins {mu:?} {lambda:?}")
    })
}

fn negative_controls() -> Outcome {
    let cases = [
        ((4, 3, 3), FeasibilityError::OddExcess { e: 3 }),
        ((4, 4, 2), FeasibilityError::EvenDiameter { d: 4 }),
        ((3, 3, 2), FeasibilityError::ExcessTooLarge { e: 2, k: 3 }),
    ];
    for ((k, d, e), want) in cases {
        match spectral_feasibility(k, d, e) {
            Err(got) => check(got == want, || format!("({k},{d},{e}): got {got:?}, want {want:?}"))?,
            Ok(r) => return Err(format!("({k},{d},{e}) accepted with verdict {}", r.verdict)),
        }
    }
    Ok(())
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

const CRITERIA: [Criterion; 9] = [
    Criterion { id: 1, name: "Moore-bound regression", limit: Duration::from_secs(1), run: moore_regression },
    Criterion { id: 2, name: "exact matrix identities", limit: Duration::from_secs(1), run: exact_identities },
    Criterion { id: 3, name: "closed-walk trace oracle", limit: Duration::from_secs(1), run: trace_oracle },
    Criterion { id: 4, name: "intersection minimal polynomial", limit: Duration::from_secs(1), run: minimal_polynomial },
    Criterion { id: 5, name: "worked multiplicity instance", limit: Duration::from_secs(1), run: worked_instance },
    Criterion { id: 6, name: "dual-formula agreement", limit: Duration::from_secs(5), run: dual_formula },
    Criterion { id: 7, name: "gap exclusion scan", limit: Duration::from_secs(60), run: gap_scan },
    Criterion { id: 8, name: "weight and ordering properties", limit: Duration::from_secs(30), run: property_suites },
    Criterion { id: 9, name: "parameter negative controls", limit: Duration::from_secs(1), run: negative_controls },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            check(elapsed <= c.limit, || format!("took {elapsed:?}, limit {:?}", c.limit))
        });
        match outcome {
            Ok(()) => println!("criterion {}: {} ... PASS ({:.3}s)", c.id, c.name, elapsed.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: {} ... FAIL ({:.3}s): {msg}", c.id, c.name, elapsed.as_secs_f64());
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
