//! Exhaustive verification suites.
//!
//! Each suite group is a list of named checks. A check enumerates every
//! instance up to its bound (derived from [`SuiteConfig::max_dim`], capped
//! where the combinatorics get steep) and tallies pass/fail per instance.
//! Checks run in parallel; results come back in declaration order.

pub mod coherence;
pub mod hadamard;
pub mod kernel;
pub mod realization;
pub mod simplex_laws;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::report::{CheckReport, SuiteConfig, SuiteReport};

/// Suite group names accepted by [`run`], besides `"all"`.
pub const SUITES: [&str; 6] = ["core", "kernel", "coherence", "hadamard", "homotopy", "realization"];

type Check = Box<dyn Fn() -> CheckReport + Send + Sync>;

fn checks_for(group: &str, config: &SuiteConfig) -> Vec<Check> {
    let d = config.max_dim;
    let deep = config.deep;
    let grid = config.grid_denominator;
    let sample = config.sample.map(|n| (n, config.sample_seed));
    match group {
        "core" => vec![
            Box::new(move || simplex_laws::hom_counts(d + 2)),
            Box::new(move || simplex_laws::enumeration_order(d + 2)),
            Box::new(move || simplex_laws::identity_laws(d)),
            Box::new(move || simplex_laws::associativity(d.min(3))),
            Box::new(move || simplex_laws::terminality(d)),
        ],
        "kernel" => vec![
            Box::new(move || kernel::eta_bijection(d.min(3))),
            Box::new(move || kernel::relation_and_delta(d.min(2), d.min(2), sample)),
            Box::new(move || kernel::delta_invariance(d.min(2), d.min(3))),
            Box::new(move || kernel::delta_naturality(d.min(2), d.min(2))),
            Box::new(move || kernel::action_normalization(d.min(1))),
            Box::new(move || kernel::symmetry(d.min(2))),
            Box::new(move || kernel::unit(d)),
            Box::new(move || kernel::truncation(d.min(2))),
            Box::new(move || kernel::theta_agreement(d.min(2))),
            Box::new(move || kernel::theta_well_defined(d.min(if deep { 2 } else { 1 }), sample)),
        ],
        "coherence" => {
            let b = d.min(if deep { 2 } else { 1 });
            vec![
                Box::new(move || coherence::associators(b)),
                Box::new(move || coherence::unitors(d.min(2))),
                Box::new(move || crate::promonoidal::pentagon_check(b)),
                Box::new(move || crate::promonoidal::triangle_check(b)),
                Box::new(move || crate::promonoidal::hexagon_check(b)),
                Box::new(move || crate::promonoidal::coherence::symmetry_involution_check(b)),
            ]
        }
        "hadamard" => vec![
            Box::new(move || hadamard::monotone_closure(d.min(3))),
            Box::new(move || hadamard::commutativity(d.min(3))),
            Box::new(move || hadamard::associativity(d.min(2))),
            Box::new(move || hadamard::unit(d)),
            Box::new(move || hadamard::simplicial_map(d.min(2), d.min(3))),
            Box::new(hadamard::non_factorization_witness),
        ],
        "homotopy" => vec![
            Box::new(move || hadamard::endpoints(d.min(4), d.min(4))),
            Box::new(move || hadamard::homotopy_levels(d.min(3))),
        ],
        "realization" => {
            let b = d.min(3);
            vec![
                Box::new(move || realization::two_path(b, grid)),
                Box::new(move || realization::s_consistency(b, grid)),
                Box::new(move || realization::lower_face(b, grid)),
                Box::new(move || realization::cover_nonempty(b, grid)),
                Box::new(move || realization::decomposition_roundtrip(b, grid)),
                Box::new(move || realization::triangulation_vertices(d)),
                Box::new(move || realization::gluing(b, grid)),
                Box::new(move || realization::overlap(b, grid)),
                Box::new(move || realization::vertex_and_slice_agreement(b, grid)),
            ]
        }
        _ => Vec::new(),
    }
}

/// Runs the configured suite (or all of them) and returns one report per
/// check, in a fixed order.
pub fn run(config: &SuiteConfig) -> Result<Vec<SuiteReport>> {
    let groups: Vec<&str> = match config.suite.as_str() {
        "all" => SUITES.to_vec(),
        s if SUITES.contains(&s) => vec![s],
        other => {
            return Err(Error::ParameterOutOfRange(format!(
                "unknown suite {other:?}; expected one of all, {}",
                SUITES.join(", ")
            )))
        }
    };
    if config.grid_denominator == 0 {
        return Err(Error::ParameterOutOfRange("grid denominator must be >= 1".into()));
    }
    let jobs: Vec<(&str, Check)> = groups
        .iter()
        .flat_map(|g| checks_for(g, config).into_iter().map(move |c| (*g, c)))
        .collect();
    Ok(jobs
        .par_iter()
        .map(|(group, check)| SuiteReport::from_check(group, check(), config))
        .collect())
}

/// Small deterministic sampler for the relation-style checks.
pub(crate) fn sampler(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_rejected() {
        let config = SuiteConfig {
            suite: "nope".into(),
            ..SuiteConfig::default()
        };
        assert!(run(&config).is_err());
    }

    #[test]
    fn degenerate_bounds_pass_everywhere() {
        let config = SuiteConfig {
            max_dim: 0,
            grid_denominator: 1,
            ..SuiteConfig::default()
        };
        let reports = run(&config).unwrap();
        assert!(reports.iter().all(SuiteReport::is_pass), "{reports:#?}");
        // A 0-simplex prism on the vertex grid has no cell overlaps.
        assert!(
            reports.iter().all(|r| r.instances > 0 || r.suite == "realization.overlap"),
            "{reports:#?}"
        );
    }

    #[test]
    fn output_order_is_stable() {
        let config = SuiteConfig {
            suite: "hadamard".into(),
            max_dim: 1,
            ..SuiteConfig::default()
        };
        assert_eq!(run(&config).unwrap(), run(&config).unwrap());
    }
}
