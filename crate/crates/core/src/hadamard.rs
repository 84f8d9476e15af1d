//! Pointwise products of monotone maps and the contraction homotopy
//! `H^n : Δ^n × Δ^1 -> Δ^n`.

use crate::error::{Error, Result};
use crate::report::{CheckReport, Counterexample};
use crate::simplex::{compose, constant_map, enumerate_maps, MonotoneMap, Ordinal};

/// `(α ⊠ β)(t) = α(t)·β(t)`, a map `[m] -> [p·q]`.
pub fn hadamard(alpha: &MonotoneMap, beta: &MonotoneMap) -> Result<MonotoneMap> {
    if alpha.source() != beta.source() {
        return Err(Error::SourceMismatch {
            left: alpha.source(),
            right: beta.source(),
        });
    }
    let values = alpha
        .values()
        .iter()
        .zip(beta.values())
        .map(|(a, b)| a * b)
        .collect();
    Ok(MonotoneMap::from_parts_unchecked(
        alpha.target().product(beta.target()),
        values,
    ))
}

/// Checks `(α ⊠ β) ∘ θ = (α ∘ θ) ⊠ (β ∘ θ)`.
pub fn hadamard_source_naturality(
    alpha: &MonotoneMap,
    beta: &MonotoneMap,
    theta: &MonotoneMap,
) -> Result<bool> {
    let lhs = compose(&hadamard(alpha, beta)?, theta)?;
    let rhs = hadamard(&compose(alpha, theta)?, &compose(beta, theta)?)?;
    Ok(lhs == rhs)
}

/// Exhaustively checks that `H_{p,q}` commutes with every `θ: [k] -> [m]`
/// for `k, m <= bound`, i.e. that it is a map of simplicial sets.
pub fn simplicial_map_check(p: usize, q: usize, bound: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("simplicial_map(p={p},q={q})"));
    for m in 0..=bound {
        let alphas = enumerate_maps(m, p);
        let betas = enumerate_maps(m, q);
        for k in 0..=bound {
            for theta in enumerate_maps(k, m) {
                for alpha in &alphas {
                    for beta in &betas {
                        let lhs = hadamard(
                            &compose(alpha, &theta).expect("shapes"),
                            &compose(beta, &theta).expect("shapes"),
                        )
                        .expect("shared source");
                        let rhs = compose(&hadamard(alpha, beta).expect("shared source"), &theta)
                            .expect("shapes");
                        report.record(lhs == rhs, || {
                            Counterexample::new(
                                "hadamard_source_naturality",
                                format!(
                                    "alpha={} beta={} theta={}",
                                    alpha.signature(),
                                    beta.signature(),
                                    theta.signature()
                                ),
                                rhs.signature(),
                                lhs.signature(),
                            )
                        });
                    }
                }
            }
        }
    }
    report
}

/// Endpoint laws of `H^n`: for every `α: [m] -> [n]` with `m <= bound`,
/// the `ε = 1` end returns `α` and the `ε = 0` end the constant 0-vertex map.
pub fn homotopy_endpoints(n: usize, bound: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("endpoints(n={n})"));
    for m in 0..=bound {
        let zero_end = constant_map(m, 1usize, 0u32).expect("0 in [1]");
        let one_end = constant_map(m, 1usize, 1u32).expect("1 in [1]");
        let collapsed = constant_map(m, n, 0u32).expect("0 in [n]");
        for alpha in enumerate_maps(m, n) {
            let top = hadamard(&alpha, &one_end).expect("shared source");
            report.record(top == alpha, || {
                Counterexample::new(
                    "homotopy_endpoint(eps=1)",
                    alpha.signature(),
                    alpha.signature(),
                    top.signature(),
                )
            });
            let bottom = hadamard(&alpha, &zero_end).expect("shared source");
            report.record(bottom == collapsed, || {
                Counterexample::new(
                    "homotopy_endpoint(eps=0)",
                    alpha.signature(),
                    collapsed.signature(),
                    bottom.signature(),
                )
            });
        }
    }
    report
}

/// Result of an exhaustive factorization search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSearch {
    /// Number of `(α, β)` candidates examined.
    pub examined: usize,
    pub factorizations: Vec<(MonotoneMap, MonotoneMap)>,
}

/// All `(α: [m] -> [p], β: [m] -> [q])` with `α ⊠ β = h`.
///
/// Every candidate pair is tried; an empty result certifies that `h` is not
/// in the image of the Hadamard map.
pub fn factor_hadamard(h: &MonotoneMap, p: usize, q: usize) -> Result<FactorSearch> {
    let expected = Ordinal::from(p).product(&Ordinal::from(q));
    if h.target() != &expected {
        return Err(Error::TargetMismatch {
            expected: expected.top().clone(),
            found: h.target().top().clone(),
        });
    }
    let m = h.source();
    let alphas = enumerate_maps(m, p);
    let betas = enumerate_maps(m, q);
    let mut factorizations = Vec::new();
    for alpha in &alphas {
        for beta in &betas {
            if hadamard(alpha, beta).expect("shared source") == *h {
                factorizations.push((alpha.clone(), beta.clone()));
            }
        }
    }
    Ok(FactorSearch {
        examined: alphas.len() * betas.len(),
        factorizations,
    })
}

/// The level-`m` component of `H^n`, tabulated over
/// `Δ([m],[n]) × Δ([m],[1])`.
#[derive(Debug, Clone)]
pub struct HomotopyLevel {
    n: usize,
    m: usize,
    table: Vec<(MonotoneMap, MonotoneMap, MonotoneMap)>,
}

impl HomotopyLevel {
    pub fn build(n: usize, m: usize) -> Self {
        let steps = enumerate_maps(m, 1);
        let mut table = Vec::new();
        for alpha in enumerate_maps(m, n) {
            for beta in &steps {
                let image = hadamard(&alpha, beta).expect("shared source");
                table.push((alpha.clone(), beta.clone(), image));
            }
        }
        HomotopyLevel { n, m, table }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn get(&self, alpha: &MonotoneMap, beta: &MonotoneMap) -> Option<&MonotoneMap> {
        self.table
            .iter()
            .find(|(a, b, _)| a == alpha && b == beta)
            .map(|(_, _, h)| h)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&MonotoneMap, &MonotoneMap, &MonotoneMap)> {
        self.table.iter().map(|(a, b, h)| (a, b, h))
    }

    /// Totality over both hom-sets, and every output lands in `[n]`.
    pub fn is_valid(&self) -> bool {
        let expected = enumerate_maps(self.m, self.n).len() * enumerate_maps(self.m, 1).len();
        let target = Ordinal::from(self.n);
        self.table.len() == expected && self.table.iter().all(|(_, _, h)| h.target() == &target)
    }
}

/// Value-table comparison that ignores the declared targets.
pub(crate) fn same_values(a: &MonotoneMap, b: &MonotoneMap) -> bool {
    a.values() == b.values()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex::{identity, map_from};

    fn m(m: usize, n: usize, v: &[usize]) -> MonotoneMap {
        map_from(m, n, v).unwrap()
    }

    #[test]
    fn hadamard_examples() {
        let alpha = m(2, 2, &[0, 1, 2]);
        let ones = m(2, 1, &[1, 1, 1]);
        let zeros = m(2, 1, &[0, 0, 0]);
        assert_eq!(hadamard(&alpha, &ones).unwrap(), alpha);
        assert_eq!(hadamard(&alpha, &zeros).unwrap(), m(2, 2, &[0, 0, 0]));
        let h = hadamard(&m(1, 2, &[0, 2]), &m(1, 2, &[1, 2])).unwrap();
        assert_eq!(h, m(1, 4, &[0, 4]));
    }

    #[test]
    fn hadamard_requires_shared_source() {
        assert_eq!(
            hadamard(&identity(1), &identity(2)),
            Err(Error::SourceMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn degenerate_products_land_in_the_point() {
        let h = hadamard(&m(2, 0, &[0, 0, 0]), &m(2, 3, &[0, 2, 3])).unwrap();
        assert_eq!(h.target(), &Ordinal::zero());
        assert_eq!(h.to_string(), "0,0,0");
    }

    #[test]
    fn source_naturality_examples() {
        let alpha = m(1, 2, &[0, 2]);
        let beta = m(1, 2, &[1, 2]);
        assert!(hadamard_source_naturality(&alpha, &beta, &identity(1)).unwrap());
        let theta = m(1, 1, &[0, 0]);
        assert!(hadamard_source_naturality(&alpha, &beta, &theta).unwrap());
        let lhs = compose(&hadamard(&alpha, &beta).unwrap(), &theta).unwrap();
        assert_eq!(lhs, m(1, 4, &[0, 0]));
        assert!(hadamard_source_naturality(&alpha, &beta, &identity(2)).is_err());
    }

    #[test]
    fn simplicial_map_small() {
        assert!(simplicial_map_check(1, 1, 3).is_pass());
        assert!(simplicial_map_check(2, 1, 3).is_pass());
    }

    #[test]
    fn constant_theta_picks_a_vertex_value() {
        let alpha = m(2, 2, &[0, 1, 2]);
        let beta = m(2, 2, &[1, 2, 2]);
        let theta = m(1, 2, &[1, 1]);
        let lhs = compose(&hadamard(&alpha, &beta).unwrap(), &theta).unwrap();
        assert_eq!(lhs.to_string(), "2,2");
    }

    #[test]
    fn endpoints() {
        let r = homotopy_endpoints(2, 2);
        assert!(r.is_pass());
        assert_eq!(r.instances, 2 * (3 + 6 + 10));
        // n = 0: both ends are the unique map to [0].
        assert!(homotopy_endpoints(0, 3).is_pass());
    }

    #[test]
    fn factor_examples() {
        let witness = m(1, 4, &[3, 3]);
        let search = factor_hadamard(&witness, 2, 2).unwrap();
        assert_eq!(search.examined, 36);
        assert!(search.factorizations.is_empty());

        let h = m(1, 4, &[0, 4]);
        let search = factor_hadamard(&h, 2, 2).unwrap();
        assert!(search
            .factorizations
            .contains(&(m(1, 2, &[0, 2]), m(1, 2, &[1, 2]))));

        let h = m(2, 3, &[0, 2, 3]);
        let search = factor_hadamard(&h, 3, 1).unwrap();
        assert!(search
            .factorizations
            .contains(&(h.clone(), constant_map(2, 1usize, 1u32).unwrap())));

        assert!(matches!(
            factor_hadamard(&h, 2, 2),
            Err(Error::TargetMismatch { .. })
        ));
    }

    #[test]
    fn homotopy_level_table() {
        let level = HomotopyLevel::build(2, 2);
        assert!(level.is_valid());
        assert_eq!(level.len(), 10 * 4);
        let alpha = m(2, 2, &[0, 1, 2]);
        let beta = m(2, 1, &[0, 1, 1]);
        assert_eq!(level.get(&alpha, &beta).unwrap().to_string(), "0,1,2");
        assert_eq!(
            level.get(&alpha, &m(2, 1, &[0, 0, 1])).unwrap().to_string(),
            "0,0,2"
        );
    }
}
