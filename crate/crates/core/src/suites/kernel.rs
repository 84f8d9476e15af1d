use rand::seq::SliceRandom;
use rand::Rng;

use crate::hadamard::{hadamard, same_values};
use crate::promonoidal::day::{day_level, DayClass, day_relation_x, day_relation_y, day_to_pair, normalize_day, theta};
use crate::promonoidal::kernel::{
    delta, delta_naturality_check, eta, eta_inverse, kernel_act, normalize_kernel, relation_pair,
    symmetry_instance, unit_element, unit_elements, KernelClass,
};
use crate::promonoidal::truncation::truncation_stability;
use crate::report::{CheckReport, Counterexample};
use crate::simplex::{enumerate_maps, MonotoneMap};
use crate::suites::sampler;

/// All representatives `[α, β, γ]` of `P([p],[q];[r])` at level `m`.
fn reps(p: usize, q: usize, r: usize, m: usize) -> Vec<KernelClass> {
    let alphas = enumerate_maps(m, p);
    let betas = enumerate_maps(m, q);
    let gammas = enumerate_maps(r, m);
    let mut out = Vec::with_capacity(alphas.len() * betas.len() * gammas.len());
    for a in &alphas {
        for b in &betas {
            for g in &gammas {
                out.push(KernelClass::new(a.clone(), b.clone(), g.clone()).expect("shapes"));
            }
        }
    }
    out
}

fn canonical(p: usize, q: usize, r: usize) -> Vec<KernelClass> {
    let gs = enumerate_maps(r, q);
    enumerate_maps(r, p)
        .iter()
        .flat_map(|f| gs.iter().map(move |g| eta_inverse(f, g).expect("shared source")))
        .collect()
}

/// `η` and `η⁻¹` are mutually inverse on `P([p],[q];[r])`, `p, q, r <= b`.
pub fn eta_bijection(b: usize) -> CheckReport {
    let mut report = CheckReport::new("eta_bijection");
    for p in 0..=b {
        for q in 0..=b {
            for r in 0..=b {
                for c in canonical(p, q, r) {
                    let (f, g) = eta(&c);
                    let back = eta_inverse(&f, &g).expect("shared source");
                    let ok = back == c && normalize_kernel(&back) == c && c.is_canonical();
                    report.record(ok, || Counterexample::new("eta_inverse(eta(c))", c.to_string(), &c, &back));
                }
            }
        }
    }
    report
}

/// One instance of the coend relation along `f: [m'] -> [m]`: both sides
/// share a canonical form and a `δ` value.
fn relation_instance(
    report: &mut CheckReport,
    alpha: &MonotoneMap,
    beta: &MonotoneMap,
    gamma: &MonotoneMap,
    f: &MonotoneMap,
) {
    let (left, right) = relation_pair(alpha, beta, gamma, f).expect("shapes");
    let (nl, nr) = (normalize_kernel(&left), normalize_kernel(&right));
    report.record(nl == nr, || Counterexample::new("normalize_kernel relation", format!("{left} ~ {right}"), &nl, &nr));
    let (dl, dr) = (delta(&left), delta(&right));
    report.record(dl == dr, || Counterexample::new("delta relation", format!("{left} ~ {right}"), &dl, &dr));
}

/// Coend relation instances with `p, q <= p_bound` and `m, m', r <= m_bound`;
/// exhaustive unless `sample = Some((count, seed))`.
pub fn relation_and_delta(p_bound: usize, m_bound: usize, sample: Option<(usize, u64)>) -> CheckReport {
    let mut report = CheckReport::new("relation_and_delta");
    if let Some((count, seed)) = sample {
        let mut rng = sampler(seed);
        for _ in 0..count {
            let (p, q) = (rng.gen_range(0..=p_bound), rng.gen_range(0..=p_bound));
            let (m, m2, r) = (
                rng.gen_range(0..=m_bound),
                rng.gen_range(0..=m_bound),
                rng.gen_range(0..=m_bound),
            );
            let alpha = enumerate_maps(m, p).choose(&mut rng).cloned().expect("nonempty");
            let beta = enumerate_maps(m, q).choose(&mut rng).cloned().expect("nonempty");
            let f = enumerate_maps(m2, m).choose(&mut rng).cloned().expect("nonempty");
            let gamma = enumerate_maps(r, m2).choose(&mut rng).cloned().expect("nonempty");
            relation_instance(&mut report, &alpha, &beta, &gamma, &f);
        }
        return report;
    }
    for p in 0..=p_bound {
        for q in 0..=p_bound {
            for m in 0..=m_bound {
                let alphas = enumerate_maps(m, p);
                let betas = enumerate_maps(m, q);
                for m2 in 0..=m_bound {
                    let fs = enumerate_maps(m2, m);
                    for r in 0..=m_bound {
                        let gammas = enumerate_maps(r, m2);
                        for alpha in &alphas {
                            for beta in &betas {
                                for f in &fs {
                                    for gamma in &gammas {
                                        relation_instance(&mut report, alpha, beta, gamma, f);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report
}

/// `δ` agrees on every representative and its canonical form, and equals
/// the pointwise product of `η`.
pub fn delta_invariance(pq_bound: usize, rep_bound: usize) -> CheckReport {
    let mut report = CheckReport::new("delta_invariance");
    for p in 0..=pq_bound {
        for q in 0..=pq_bound {
            for r in 0..=rep_bound {
                for m in 0..=rep_bound {
                    for c in reps(p, q, r, m) {
                        let direct = delta(&c);
                        let canon = delta(&normalize_kernel(&c));
                        let (f, g) = eta(&c);
                        let via_eta = hadamard(&f, &g).expect("shared source");
                        report.record(direct == canon && direct == via_eta, || {
                            Counterexample::new("delta", c.to_string(), &via_eta, format!("{direct} / {canon}"))
                        });
                    }
                }
            }
        }
    }
    report
}

/// Naturality of `δ` in `[r]` along every `h: [r'] -> [r]`.
pub fn delta_naturality(pq_bound: usize, r_bound: usize) -> CheckReport {
    let mut report = CheckReport::new("delta_naturality");
    for p in 0..=pq_bound {
        for q in 0..=pq_bound {
            for r in 0..=r_bound {
                let classes = canonical(p, q, r);
                for r2 in 0..=r_bound {
                    for h in enumerate_maps(r2, r) {
                        for c in &classes {
                            let ok = delta_naturality_check(&h, c).unwrap_or(false);
                            report.record(ok, || {
                                Counterexample::new(
                                    "delta_naturality",
                                    format!("h={} c={c}", h.signature()),
                                    "commuting square",
                                    "squares differ",
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

/// The functorial action is well defined on classes: acting on any
/// representative and on its canonical form gives the same class.
pub fn action_normalization(b: usize) -> CheckReport {
    let mut report = CheckReport::new("action_normalization");
    for p in 0..=b {
        for q in 0..=b {
            for r in 0..=b {
                for m in 0..=b {
                    let classes = reps(p, q, r, m);
                    for p2 in 0..=b {
                        let fps = enumerate_maps(p, p2);
                        for q2 in 0..=b {
                            let fqs = enumerate_maps(q, q2);
                            for r2 in 0..=b {
                                let hs = enumerate_maps(r2, r);
                                for c in &classes {
                                    let nc = normalize_kernel(c);
                                    for fp in &fps {
                                        for fq in &fqs {
                                            for h in &hs {
                                                let one = normalize_kernel(&kernel_act(fp, fq, h, c).expect("shapes"));
                                                let two = normalize_kernel(&kernel_act(fp, fq, h, &nc).expect("shapes"));
                                                report.record(one == two, || {
                                                    Counterexample::new(
                                                        "kernel_act",
                                                        format!("fp={} fq={} h={} c={c}", fp.signature(), fq.signature(), h.signature()),
                                                        &two,
                                                        &one,
                                                    )
                                                });
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report
}

/// The symmetry swaps `η` components, is an involution, and commutes with
/// `δ` up to the swap `[p·q] = [q·p]`.
pub fn symmetry(b: usize) -> CheckReport {
    let mut report = CheckReport::new("symmetry");
    for p in 0..=b {
        for q in 0..=b {
            for r in 0..=b {
                for m in 0..=b {
                    for c in reps(p, q, r, m) {
                        let s = symmetry_instance(&c);
                        let (f, g) = eta(&c);
                        let (g2, f2) = eta(&s);
                        let ok = f == f2
                            && g == g2
                            && symmetry_instance(&s) == c
                            && same_values(&delta(&s), &delta(&c));
                        report.record(ok, || Counterexample::new("symmetry", c.to_string(), "swapped class", &s));
                    }
                }
            }
        }
    }
    report
}

/// `J([r])` is a singleton and the action of every `h` lands on it.
pub fn unit(d: usize) -> CheckReport {
    let mut report = CheckReport::new("unit");
    for r in 0..=d {
        let all = unit_elements(r);
        report.record(all == vec![unit_element(r)], || {
            Counterexample::new("unit_elements", format!("r={r}"), 1, all.len())
        });
        for r2 in 0..=d {
            for h in enumerate_maps(r2, r) {
                let moved = unit_element(r).act(&h).expect("shapes");
                report.record(moved == unit_element(r2), || {
                    Counterexample::new("unit act", h.signature(), unit_element(r2).as_map(), moved.as_map())
                });
            }
        }
    }
    report
}

/// The union-find quotient at `B = r + 2` and `B + 1` matches the `η` count.
pub fn truncation(b: usize) -> CheckReport {
    let mut report = CheckReport::new("truncation");
    for p in 0..=b {
        for q in 0..=b {
            for r in 0..=b {
                let t = truncation_stability(p, q, r, r + 2).expect("bound >= r");
                report.record(t.is_stable(), || {
                    Counterexample::new(
                        "truncation_stability",
                        format!("p={p} q={q} r={r} B={}", r + 2),
                        t.expected,
                        format!("{} at B, {} at B+1", t.classes_at_bound, t.classes_at_next),
                    )
                });
            }
        }
    }
    report
}

/// `Θ` equals the Hadamard product of the pair under the Day identification.
pub fn theta_agreement(b: usize) -> CheckReport {
    let mut report = CheckReport::new("theta_agreement");
    for p in 0..=b {
        for q in 0..=b {
            for r in 0..=b {
                for d in day_level(p, q, r) {
                    let (f, g) = day_to_pair(&d);
                    let expected = hadamard(&f, &g).expect("shared source");
                    let actual = theta(&d);
                    report.record(actual == expected && d.is_canonical(), || {
                        Counterexample::new("theta", d.to_string(), &expected, &actual)
                    });
                }
            }
        }
    }
    report
}

fn pick(rng: &mut impl Rng, m: usize, n: usize) -> MonotoneMap {
    enumerate_maps(m, n).choose(rng).cloned().expect("nonempty")
}

fn day_instance(report: &mut CheckReport, pair: (DayClass, DayClass), op: &str) {
    let (left, right) = pair;
    let (tl, tr) = (theta(&left), theta(&right));
    let (nl, nr) = (normalize_day(&left).expect("small"), normalize_day(&right).expect("small"));
    report.record(tl == tr && nl == nr, || {
        Counterexample::new(op, format!("{left} ~ {right}"), format!("{tl} / {nl}"), format!("{tr} / {nr}"))
    });
}

/// `Θ` and Day normalization respect both families of coend relations, with
/// every ordinal `<= b`; exhaustive unless sampled.
pub fn theta_well_defined(b: usize, sample: Option<(usize, u64)>) -> CheckReport {
    let mut report = CheckReport::new("theta_well_defined");
    if let Some((count, seed)) = sample {
        let mut rng = sampler(seed);
        for i in 0..count {
            let [p, q, r, x, x2, y] = [(); 6].map(|_| rng.gen_range(0..=b));
            let pi = eta_inverse(&pick(&mut rng, r, x2), &pick(&mut rng, r, y)).expect("shared source");
            let u = pick(&mut rng, x2, x);
            let alpha = pick(&mut rng, x, p);
            let beta = pick(&mut rng, y, q);
            if i % 2 == 0 {
                day_instance(&mut report, day_relation_x(&pi, &u, &alpha, &beta).expect("shapes"), "theta relation (x)");
            } else {
                let pi = symmetry_instance(&pi);
                let (alpha, beta) = (pick(&mut rng, y, p), pick(&mut rng, x, q));
                day_instance(&mut report, day_relation_y(&pi, &u, &alpha, &beta).expect("shapes"), "theta relation (y)");
            }
        }
        return report;
    }
    for r in 0..=b {
        for a in 0..=b {
            for a2 in 0..=b {
                let us = enumerate_maps(a2, a);
                for other in 0..=b {
                    // π' ∈ P([a'],[other];[r]) for the x relation, and its mirror for y.
                    let pis = canonical(a2, other, r);
                    for p in 0..=b {
                        for q in 0..=b {
                            let moving = enumerate_maps(a, p);
                            let fixed = enumerate_maps(other, q);
                            let moving_q = enumerate_maps(a, q);
                            let fixed_p = enumerate_maps(other, p);
                            for pi in &pis {
                                let mirrored = symmetry_instance(pi);
                                for u in &us {
                                    for alpha in &moving {
                                        for beta in &fixed {
                                            day_instance(
                                                &mut report,
                                                day_relation_x(pi, u, alpha, beta).expect("shapes"),
                                                "theta relation (x)",
                                            );
                                        }
                                    }
                                    for beta in &moving_q {
                                        for alpha in &fixed_p {
                                            day_instance(
                                                &mut report,
                                                day_relation_y(&mirrored, u, alpha, beta).expect("shapes"),
                                                "theta relation (y)",
                                            );
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bounds_pass() {
        for report in [
            eta_bijection(1),
            relation_and_delta(1, 1, None),
            relation_and_delta(2, 2, Some((200, 7))),
            delta_invariance(1, 2),
            delta_naturality(1, 1),
            action_normalization(1),
            symmetry(1),
            unit(2),
            truncation(1),
            theta_agreement(1),
            theta_well_defined(1, None),
            theta_well_defined(2, Some((200, 3))),
        ] {
            assert!(report.is_pass(), "{report:#?}");
            assert!(report.instances > 0);
        }
    }

    #[test]
    fn eta_instance_count_matches_class_count() {
        // Σ_{p,q,r<=1} C(r+p+1, r+1)·C(r+q+1, r+1)
        let expected: u64 = (0..=1u64)
            .flat_map(|p| (0..=1u64).flat_map(move |q| (0..=1u64).map(move |r| (p, q, r))))
            .map(|(p, q, r)| {
                let c = |n: u64| crate::simplex::count_maps(r as usize, n as usize);
                u64::try_from(c(p) * c(q)).unwrap()
            })
            .sum();
        assert_eq!(eta_bijection(1).instances, expected);
    }
}
