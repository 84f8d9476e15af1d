use num_bigint::BigUint;

use crate::report::{CheckReport, Counterexample};
use crate::simplex::{compose, count_maps, enumerate_maps, identity, make_map, terminal_map};

/// `count_maps(m, n) == |enumerate_maps(m, n)|` for `m, n <= bound`.
pub fn hom_counts(bound: usize) -> CheckReport {
    let mut report = CheckReport::new("hom_counts");
    for m in 0..=bound {
        for n in 0..=bound {
            let listed = BigUint::from(enumerate_maps(m, n).len());
            let counted = count_maps(m, n);
            report.record(listed == counted, || {
                Counterexample::new("count_maps", format!("m={m} n={n}"), &listed, &counted)
            });
        }
    }
    report
}

/// Enumeration is strictly increasing and every table passes validation.
pub fn enumeration_order(bound: usize) -> CheckReport {
    let mut report = CheckReport::new("enumeration_order");
    for m in 0..=bound {
        for n in 0..=bound {
            let maps = enumerate_maps(m, n);
            let sorted = maps.windows(2).all(|w| w[0].values() < w[1].values());
            let valid = maps
                .iter()
                .all(|f| make_map(m, n, f.values().to_vec()).as_ref() == Ok(f));
            report.record(sorted && valid, || {
                Counterexample::new(
                    "enumerate_maps",
                    format!("m={m} n={n}"),
                    "strictly increasing valid tables",
                    format!("sorted={sorted} valid={valid}"),
                )
            });
        }
    }
    report
}

pub fn identity_laws(bound: usize) -> CheckReport {
    let mut report = CheckReport::new("identity_laws");
    for m in 0..=bound {
        for n in 0..=bound {
            for f in enumerate_maps(m, n) {
                let left = compose(&identity(n), &f).expect("shapes");
                let right = compose(&f, &identity(m)).expect("shapes");
                report.record(left == f && right == f, || {
                    Counterexample::new(
                        "compose(identity, f) / compose(f, identity)",
                        f.signature(),
                        f.signature(),
                        format!("{} / {}", left.signature(), right.signature()),
                    )
                });
            }
        }
    }
    report
}

/// `h∘(g∘f) = (h∘g)∘f` for all composable triples over ordinals `<= bound`.
pub fn associativity(bound: usize) -> CheckReport {
    let mut report = CheckReport::new("associativity");
    for a in 0..=bound {
        for b in 0..=bound {
            let fs = enumerate_maps(a, b);
            for c in 0..=bound {
                let gs = enumerate_maps(b, c);
                for e in 0..=bound {
                    let hs = enumerate_maps(c, e);
                    for f in &fs {
                        for g in &gs {
                            let gf = compose(g, f).expect("shapes");
                            for h in &hs {
                                let left = compose(h, &gf).expect("shapes");
                                let right = compose(&compose(h, g).expect("shapes"), f).expect("shapes");
                                report.record(left == right, || {
                                    Counterexample::new(
                                        "compose associativity",
                                        format!("h={} g={} f={}", h.signature(), g.signature(), f.signature()),
                                        left.signature(),
                                        right.signature(),
                                    )
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    report
}

/// Every map into `[n]` followed by `[n] -> [0]` is the terminal map.
pub fn terminality(bound: usize) -> CheckReport {
    let mut report = CheckReport::new("terminality");
    for m in 0..=bound {
        for n in 0..=bound {
            for f in enumerate_maps(m, n) {
                let composite = compose(&terminal_map(n), &f).expect("shapes");
                report.record(composite == terminal_map(m), || {
                    Counterexample::new("terminal_map", f.signature(), terminal_map(m).signature(), composite.signature())
                });
            }
        }
    }
    report
}
