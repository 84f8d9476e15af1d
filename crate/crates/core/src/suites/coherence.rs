use crate::promonoidal::coherence::{associator_instance, unitor_instance};
use crate::report::{CheckReport, Counterexample};

/// Associator instances for every `p, q, r, w <= b`.
pub fn associators(b: usize) -> CheckReport {
    let mut report = CheckReport::new("associator");
    for p in 0..=b {
        for q in 0..=b {
            for r in 0..=b {
                for w in 0..=b {
                    let a = associator_instance(p, q, r, w);
                    report.record(a.is_pass(), || {
                        Counterexample::new(
                            "associator_instance",
                            format!("p={p} q={q} r={r} w={w}"),
                            format!("{} classes, bijective re-bracketing", a.expected_size),
                            format!("{a:?}"),
                        )
                    });
                }
            }
        }
    }
    report
}

/// Left unitor instances for every `q, w <= b`, checked against the right
/// unitor through the symmetry.
pub fn unitors(b: usize) -> CheckReport {
    let mut report = CheckReport::new("unitor");
    for q in 0..=b {
        for w in 0..=b {
            let u = unitor_instance(q, w);
            report.record(u.is_pass(), || {
                Counterexample::new(
                    "unitor_instance",
                    format!("q={q} w={w}"),
                    format!("{} classes", u.expected_size),
                    format!("{u:?}"),
                )
            });
        }
    }
    report
}
