//! Elements of `(Δ^p ★ Δ^q)([r])` and the induced map `Θ_{p,q}` into `Δ^{pq}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::promonoidal::kernel::{delta, eta, eta_inverse, kernel_act, normalize_kernel, KernelClass};
use crate::simplex::{compose, enumerate_maps, identity, MonotoneMap, Ordinal};

/// A representative `[π; α, β]` with `π ∈ P([x],[y];[r])`, `α: [x] -> [p]`
/// and `β: [y] -> [q]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DayClass {
    pi: KernelClass,
    alpha: MonotoneMap,
    beta: MonotoneMap,
}

impl DayClass {
    pub fn new(pi: KernelClass, alpha: MonotoneMap, beta: MonotoneMap) -> Result<Self> {
        if pi.p() != &Ordinal::from(alpha.source()) {
            return Err(Error::SourceTargetMismatch {
                context: format!("pi has p-slot {} but alpha starts at [{}]", pi.p(), alpha.source()),
            });
        }
        if pi.q() != &Ordinal::from(beta.source()) {
            return Err(Error::SourceTargetMismatch {
                context: format!("pi has q-slot {} but beta starts at [{}]", pi.q(), beta.source()),
            });
        }
        Ok(DayClass { pi, alpha, beta })
    }

    pub fn pi(&self) -> &KernelClass {
        &self.pi
    }

    pub fn alpha(&self) -> &MonotoneMap {
        &self.alpha
    }

    pub fn beta(&self) -> &MonotoneMap {
        &self.beta
    }

    pub fn x(&self) -> usize {
        self.alpha.source()
    }

    pub fn y(&self) -> usize {
        self.beta.source()
    }

    pub fn p(&self) -> &Ordinal {
        self.alpha.target()
    }

    pub fn q(&self) -> &Ordinal {
        self.beta.target()
    }

    pub fn r(&self) -> usize {
        self.pi.r()
    }

    /// `P(α, β; [r])(π)`, the kernel element this class pushes to.
    pub fn pushed_kernel(&self) -> KernelClass {
        kernel_act(&self.alpha, &self.beta, &identity(self.r()), &self.pi)
            .expect("slots agree by construction")
    }

    pub fn is_canonical(&self) -> bool {
        self.alpha.is_identity() && self.beta.is_identity() && self.pi.is_canonical()
    }
}

impl fmt::Display for DayClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[pi={}; alpha={} beta={}]", self.pi, self.alpha, self.beta)
    }
}

/// Canonical form `[(f, g, id_r); id_p, id_q]`, obtained by pushing `α, β`
/// into the kernel and normalizing.
pub fn normalize_day(d: &DayClass) -> Result<DayClass> {
    let p = d.p().to_usize()?;
    let q = d.q().to_usize()?;
    Ok(DayClass {
        pi: normalize_kernel(&d.pushed_kernel()),
        alpha: identity(p),
        beta: identity(q),
    })
}

/// The identification `(Δ^p ★ Δ^q)([r]) ≅ Δ([r],[p]) × Δ([r],[q])`.
pub fn day_to_pair(d: &DayClass) -> (MonotoneMap, MonotoneMap) {
    eta(&d.pushed_kernel())
}

/// Inverse of [`day_to_pair`], producing the canonical representative.
pub fn day_from_pair(f: &MonotoneMap, g: &MonotoneMap) -> Result<DayClass> {
    let p = f.target().to_usize()?;
    let q = g.target().to_usize()?;
    DayClass::new(eta_inverse(f, g)?, identity(p), identity(q))
}

/// One canonical representative per element of `(Δ^p ★ Δ^q)([r])`.
pub fn day_level(p: usize, q: usize, r: usize) -> Vec<DayClass> {
    let gs = enumerate_maps(r, q);
    enumerate_maps(r, p)
        .iter()
        .flat_map(|f| gs.iter().map(move |g| day_from_pair(f, g).expect("small ordinals")))
        .collect()
}

/// `Θ[π; α, β] = δ(P(α, β; [r])(π))`.
pub fn theta(d: &DayClass) -> MonotoneMap {
    delta(&d.pushed_kernel())
}

/// The two sides of the coend relation along `u: [x'] -> [x]` in the first
/// variable: `[P(u, id; r)(π'); α, β] ~ [π'; α∘u, β]`.
pub fn day_relation_x(
    pi_prime: &KernelClass,
    u: &MonotoneMap,
    alpha: &MonotoneMap,
    beta: &MonotoneMap,
) -> Result<(DayClass, DayClass)> {
    let id_y = identity(pi_prime.q().to_usize()?);
    let id_r = identity(pi_prime.r());
    let left = DayClass::new(kernel_act(u, &id_y, &id_r, pi_prime)?, alpha.clone(), beta.clone())?;
    let right = DayClass::new(pi_prime.clone(), compose(alpha, u)?, beta.clone())?;
    Ok((left, right))
}

/// Same as [`day_relation_x`] in the second variable, along `v: [y'] -> [y]`.
pub fn day_relation_y(
    pi_prime: &KernelClass,
    v: &MonotoneMap,
    alpha: &MonotoneMap,
    beta: &MonotoneMap,
) -> Result<(DayClass, DayClass)> {
    let id_x = identity(pi_prime.p().to_usize()?);
    let id_r = identity(pi_prime.r());
    let left = DayClass::new(kernel_act(&id_x, v, &id_r, pi_prime)?, alpha.clone(), beta.clone())?;
    let right = DayClass::new(pi_prime.clone(), alpha.clone(), compose(beta, v)?)?;
    Ok((left, right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hadamard::hadamard;
    use crate::simplex::{map_from, terminal_map};

    fn m(m: usize, n: usize, v: &[usize]) -> MonotoneMap {
        map_from(m, n, v).unwrap()
    }

    #[test]
    fn day_level_counts() {
        assert_eq!(day_level(1, 1, 1).len(), 9);
        for p in 0..=3 {
            for q in 0..=3 {
                assert_eq!(day_level(p, q, 0).len(), (p + 1) * (q + 1));
            }
        }
        assert_eq!(day_level(0, 0, 4).len(), 1);
        assert!(day_level(2, 1, 2).iter().all(DayClass::is_canonical));
    }

    #[test]
    fn theta_example() {
        let pi = eta_inverse(&m(0, 1, &[1]), &m(0, 1, &[0])).unwrap();
        let d = DayClass::new(pi, identity(1), identity(1)).unwrap();
        assert_eq!(theta(&d), m(0, 1, &[0]));
    }

    #[test]
    fn theta_through_the_point() {
        let pi = eta_inverse(&m(1, 2, &[0, 1]), &m(1, 1, &[0, 1])).unwrap();
        let d = DayClass::new(pi, m(2, 2, &[1, 2, 2]), m(1, 0, &[0, 0])).unwrap();
        assert_eq!(theta(&d), terminal_map(1));
    }

    #[test]
    fn theta_matches_hadamard_on_a_pushed_class() {
        let pi = KernelClass::new(m(2, 1, &[0, 0, 1]), m(2, 2, &[0, 1, 2]), m(1, 2, &[0, 2])).unwrap();
        let d = DayClass::new(pi, m(1, 2, &[1, 2]), m(2, 2, &[0, 2, 2])).unwrap();
        let (f, g) = day_to_pair(&d);
        assert_eq!(theta(&d), hadamard(&f, &g).unwrap());
        let canon = normalize_day(&d).unwrap();
        assert!(canon.is_canonical());
        assert_eq!(theta(&canon), theta(&d));
        assert_eq!(day_from_pair(&f, &g).unwrap(), canon);
    }

    #[test]
    fn relations_preserve_theta() {
        let pi_prime = eta_inverse(&m(1, 1, &[0, 1]), &m(1, 1, &[1, 1])).unwrap();
        let u = m(1, 2, &[0, 2]);
        let (l, r) = day_relation_x(&pi_prime, &u, &m(2, 2, &[0, 1, 2]), &identity(1)).unwrap();
        assert_eq!(theta(&l), theta(&r));
        assert_eq!(normalize_day(&l).unwrap(), normalize_day(&r).unwrap());
        let v = m(1, 1, &[0, 0]);
        let (l, r) = day_relation_y(&pi_prime, &v, &identity(1), &identity(1)).unwrap();
        assert_eq!(theta(&l), theta(&r));
    }

    #[test]
    fn constructor_checks_slots() {
        let pi = eta_inverse(&identity(1), &identity(1)).unwrap();
        assert!(DayClass::new(pi.clone(), identity(2), identity(1)).is_err());
        assert!(DayClass::new(pi, identity(1), identity(0)).is_err());
    }
}
