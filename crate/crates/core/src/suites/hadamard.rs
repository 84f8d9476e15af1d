use crate::hadamard::{factor_hadamard, hadamard, homotopy_endpoints, same_values, simplicial_map_check, HomotopyLevel};
use crate::report::{CheckReport, Counterexample};
use crate::simplex::{constant_map, enumerate_maps, map_from, Ordinal};

fn pairs(m: usize, p: usize, q: usize) -> Vec<(crate::MonotoneMap, crate::MonotoneMap)> {
    let betas = enumerate_maps(m, q);
    enumerate_maps(m, p)
        .into_iter()
        .flat_map(|a| betas.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
}

/// `α ⊠ β` is monotone into `[p·q]` for all `m, p, q <= b`.
pub fn monotone_closure(b: usize) -> CheckReport {
    let mut report = CheckReport::new("monotone_closure");
    for m in 0..=b {
        for p in 0..=b {
            for q in 0..=b {
                for (alpha, beta) in pairs(m, p, q) {
                    let h = hadamard(&alpha, &beta).expect("shared source");
                    let ok = crate::simplex::make_map(m, p * q, h.values().to_vec()).is_ok()
                        && h.target() == &Ordinal::from(p * q);
                    report.record(ok, || {
                        Counterexample::new("hadamard", format!("{} {}", alpha.signature(), beta.signature()), "monotone map", h.signature())
                    });
                }
            }
        }
    }
    report
}

pub fn commutativity(b: usize) -> CheckReport {
    let mut report = CheckReport::new("commutativity");
    for m in 0..=b {
        for p in 0..=b {
            for q in 0..=b {
                for (alpha, beta) in pairs(m, p, q) {
                    let ab = hadamard(&alpha, &beta).expect("shared source");
                    let ba = hadamard(&beta, &alpha).expect("shared source");
                    report.record(same_values(&ab, &ba) && ab.target() == ba.target(), || {
                        Counterexample::new("hadamard commutativity", format!("{} {}", alpha.signature(), beta.signature()), &ab, &ba)
                    });
                }
            }
        }
    }
    report
}

pub fn associativity(b: usize) -> CheckReport {
    let mut report = CheckReport::new("associativity");
    for m in 0..=b {
        for p in 0..=b {
            for q in 0..=b {
                let ab = pairs(m, p, q);
                for r in 0..=b {
                    let gammas = enumerate_maps(m, r);
                    for (alpha, beta) in &ab {
                        for gamma in &gammas {
                            let left = hadamard(&hadamard(alpha, beta).expect("src"), gamma).expect("src");
                            let right = hadamard(alpha, &hadamard(beta, gamma).expect("src")).expect("src");
                            report.record(left == right, || {
                                Counterexample::new(
                                    "hadamard associativity",
                                    format!("{} {} {}", alpha.signature(), beta.signature(), gamma.signature()),
                                    &left,
                                    &right,
                                )
                            });
                        }
                    }
                }
            }
        }
    }
    report
}

/// The constant map onto vertex 1 of `[1]` is a two-sided unit.
pub fn unit(d: usize) -> CheckReport {
    let mut report = CheckReport::new("unit");
    for m in 0..=d {
        let one = constant_map(m, 1usize, 1u32).expect("1 in [1]");
        for n in 0..=d {
            for alpha in enumerate_maps(m, n) {
                let left = hadamard(&one, &alpha).expect("src");
                let right = hadamard(&alpha, &one).expect("src");
                report.record(left == alpha && right == alpha, || {
                    Counterexample::new("hadamard unit", alpha.signature(), &alpha, format!("{left} / {right}"))
                });
            }
        }
    }
    report
}

/// `H_{p,q}` commutes with every `θ: [k] -> [m]`, `k, m <= bound`.
pub fn simplicial_map(pq: usize, bound: usize) -> CheckReport {
    let mut report = CheckReport::new("simplicial_map");
    for p in 0..=pq {
        for q in 0..=pq {
            report.absorb(simplicial_map_check(p, q, bound));
        }
    }
    report
}

/// `[3,3]: [1] -> [4]` has no factorization through `Δ^2 × Δ^2`.
pub fn non_factorization_witness() -> CheckReport {
    let mut report = CheckReport::new("non_factorization_witness");
    let h = map_from(1, 4, &[3, 3]).expect("constant map is monotone");
    let search = factor_hadamard(&h, 2, 2).expect("target is [4]");
    report.record(search.examined == 36 && search.factorizations.is_empty(), || {
        Counterexample::new(
            "factor_hadamard",
            format!("h={} p=2 q=2", h.signature()),
            "36 candidates, no factorization",
            format!("{} candidates, {} factorizations", search.examined, search.factorizations.len()),
        )
    });
    report
}

/// Endpoint laws of `H^n` for `n <= n_bound`, source levels `<= m_bound`.
pub fn endpoints(n_bound: usize, m_bound: usize) -> CheckReport {
    let mut report = CheckReport::new("endpoints");
    for n in 0..=n_bound {
        report.absorb(homotopy_endpoints(n, m_bound));
    }
    report
}

/// Tabulated levels of `H^n` are total, land in `[n]`, and agree with the
/// Hadamard product entrywise.
pub fn homotopy_levels(b: usize) -> CheckReport {
    let mut report = CheckReport::new("homotopy_levels");
    for n in 0..=b {
        for m in 0..=b {
            let level = HomotopyLevel::build(n, m);
            report.record(level.is_valid(), || {
                Counterexample::new("HomotopyLevel", format!("n={n} m={m}"), "total table into [n]", level.len())
            });
            for (alpha, beta, h) in level.entries() {
                let direct = hadamard(alpha, beta).expect("src");
                let ok = same_values(&direct, h) && h.target() == &Ordinal::from(n);
                report.record(ok, || {
                    Counterexample::new("HomotopyLevel entry", format!("{} {}", alpha.signature(), beta.signature()), &direct, h)
                });
            }
        }
    }
    report
}
