//! Acceptance criteria at their stated bounds. Every criterion is exact:
//! zero failing instances (or, for the probe, an exact deviation of 1/4).
//!
//! Prints one `PASS`/`FAIL` line per criterion and exits nonzero if any fail.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use deltakit::promonoidal::{normalize_kernel, pentagon_check, triangle_check, hexagon_check, KernelClass};
use deltakit::realization::{compare_on_grid, COINCIDENCE_NOTE};
use deltakit::report::CheckReport;
use deltakit::simplex::{count_maps, enumerate_maps, identity};
use deltakit::suites::{coherence, hadamard, kernel, realization, simplex_laws};
use deltakit::Rational;

type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

struct Outcome {
    pass: bool,
    detail: String,
}

fn checks(reports: Vec<CheckReport>) -> Outcome {
    let instances: u64 = reports.iter().map(|r| r.instances).sum();
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.is_pass() || r.instances == 0)
        .map(|r| match r.counterexamples.first() {
            Some(cx) => format!("{}: {} failed, e.g. {} on {}", r.name, r.failed, cx.operation, cx.inputs),
            None => format!("{}: {} failed of {}", r.name, r.failed, r.instances),
        })
        .collect();
    Outcome {
        pass: failed.is_empty(),
        detail: if failed.is_empty() {
            format!("{instances} instances, 0 failed")
        } else {
            failed.join("; ")
        },
    }
}

/// Distinct normal forms over every representative at levels `m <= r + 1`.
fn eta_class_counts() -> Outcome {
    let mut mismatches = Vec::new();
    let mut total = 0;
    for p in 0..=3 {
        for q in 0..=3 {
            for r in 0..=3 {
                let mut classes = BTreeSet::new();
                for m in 0..=r + 1 {
                    let betas = enumerate_maps(m, q);
                    let gammas = enumerate_maps(r, m);
                    for a in enumerate_maps(m, p) {
                        for b in &betas {
                            for g in &gammas {
                                let c = KernelClass::new(a.clone(), b.clone(), g.clone()).unwrap();
                                classes.insert(normalize_kernel(&c));
                            }
                        }
                    }
                }
                total += classes.len();
                if classes.len() != usize::try_from(count_maps(r, p) * count_maps(r, q)).unwrap() {
                    mismatches.push(format!("P({p},{q};{r}) has {} classes", classes.len()));
                }
                if (p, q, r) == (1, 1, 1) && classes.len() != 9 {
                    mismatches.push(format!("|P(1,1;1)| = {}", classes.len()));
                }
            }
        }
    }
    Outcome {
        pass: mismatches.is_empty(),
        detail: if mismatches.is_empty() {
            format!("{total} classes over p,q,r <= 3, |P(1,1;1)| = 9")
        } else {
            mismatches.join("; ")
        },
    }
}

fn probe() -> Outcome {
    let report = compare_on_grid(1, 1, &identity(1), 2).unwrap();
    let witness = report.witness.as_ref().map(|(pt, a, b)| (pt.to_string(), a.to_string(), b.to_string()));
    let expected = (
        "u=1/2,1/2 t=1/2".to_string(),
        "1/2,1/2".to_string(),
        "3/4,1/4".to_string(),
    );
    let pass = report.max_deviation == Rational::new(1, 4)
        && witness.as_ref() == Some(&expected)
        && report.vertex_agreement
        && report.slice_agreement;
    Outcome {
        pass,
        detail: format!(
            "max deviation {} at {:?}; open issue: {}",
            report.max_deviation,
            witness,
            COINCIDENCE_NOTE
        ),
    }
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("hom-set counts, m,n <= 5", Box::new(|| checks(vec![simplex_laws::hom_counts(5)]))),
        (
            "eta bijection, p,q,r <= 3",
            Box::new(|| {
                let suite = checks(vec![kernel::eta_bijection(3)]);
                let classes = eta_class_counts();
                Outcome {
                    pass: suite.pass && classes.pass,
                    detail: format!("{}; {}", suite.detail, classes.detail),
                }
            }),
        ),
        ("coend quotient at B = r+2, p,q,r <= 2", Box::new(|| checks(vec![kernel::truncation(2)]))),
        (
            "delta well-definedness and naturality, m,m',r,r',p,q <= 2",
            Box::new(|| {
                checks(vec![
                    kernel::relation_and_delta(2, 2, None),
                    kernel::delta_invariance(2, 2),
                    kernel::delta_naturality(2, 2),
                ])
            }),
        ),
        (
            "theta agreement, p,q,r <= 2",
            Box::new(|| checks(vec![kernel::theta_agreement(2), kernel::theta_well_defined(2, None)])),
        ),
        (
            "coherence (pentagon, triangle, hexagon), ordinals <= 1",
            Box::new(|| {
                checks(vec![
                    pentagon_check(1),
                    triangle_check(1),
                    hexagon_check(1),
                    coherence::associators(1),
                    coherence::unitors(1),
                ])
            }),
        ),
        (
            "hadamard laws",
            Box::new(|| {
                checks(vec![
                    hadamard::monotone_closure(3),
                    hadamard::commutativity(3),
                    hadamard::associativity(2),
                    hadamard::unit(3),
                ])
            }),
        ),
        ("H is simplicial, k,m <= 3, p,q <= 2", Box::new(|| checks(vec![hadamard::simplicial_map(2, 3)]))),
        ("contraction endpoints, n,m <= 4", Box::new(|| checks(vec![hadamard::endpoints(4, 4)]))),
        (
            "non-factorization of [3,3]:[1]->[4] over 36 candidates",
            Box::new(|| checks(vec![hadamard::non_factorization_witness()])),
        ),
        ("two-path realization, m,n <= 3, D = 4", Box::new(|| checks(vec![realization::two_path(3, 4)]))),
        (
            "prism geometry, m <= 3, D = 3 and 4",
            Box::new(|| {
                let mut reports = vec![realization::triangulation_vertices(3)];
                for d in [3, 4] {
                    reports.extend([
                        realization::cover_nonempty(3, d),
                        realization::decomposition_roundtrip(3, d),
                        realization::lower_face(3, d),
                        realization::gluing(3, d),
                        realization::overlap(3, d),
                    ]);
                }
                checks(reports)
            }),
        ),
        (
            "vertex and slice agreement with C, m,n <= 3",
            Box::new(|| {
                checks(vec![
                    realization::vertex_and_slice_agreement(3, 3),
                    realization::vertex_and_slice_agreement(3, 4),
                ])
            }),
        ),
        ("discrepancy probe (measurement), n=m=1, D=2", Box::new(probe)),
    ];

    let mut failures = 0;
    for (name, run) in &criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        if !outcome.pass {
            failures += 1;
        }
        let tag = if outcome.pass { "PASS" } else { "FAIL" };
        println!("{tag} {name} [{secs:.2}s] {}", outcome.detail);
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
