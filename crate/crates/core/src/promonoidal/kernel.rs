use std::fmt;

use crate::error::{Error, Result};
use crate::hadamard::hadamard;
use crate::simplex::{compose, identity, terminal_map, MonotoneMap, Ordinal};

/// A coend representative `[α: [m] -> [p], β: [m] -> [q], γ: [r] -> [m]]` of
/// `P([p],[q];[r])`.
///
/// Two representatives denote the same element iff their canonical forms
/// agree; the canonical form sits at level `m = r` with `γ = id`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KernelClass {
    alpha: MonotoneMap,
    beta: MonotoneMap,
    gamma: MonotoneMap,
}

impl KernelClass {
    pub fn new(alpha: MonotoneMap, beta: MonotoneMap, gamma: MonotoneMap) -> Result<Self> {
        if alpha.source() != beta.source() {
            return Err(Error::SourceMismatch {
                left: alpha.source(),
                right: beta.source(),
            });
        }
        if gamma.target() != &Ordinal::from(alpha.source()) {
            return Err(Error::SourceTargetMismatch {
                context: format!(
                    "gamma lands in {} but alpha, beta start at [{}]",
                    gamma.target(),
                    alpha.source()
                ),
            });
        }
        Ok(KernelClass { alpha, beta, gamma })
    }

    pub fn alpha(&self) -> &MonotoneMap {
        &self.alpha
    }

    pub fn beta(&self) -> &MonotoneMap {
        &self.beta
    }

    pub fn gamma(&self) -> &MonotoneMap {
        &self.gamma
    }

    pub fn p(&self) -> &Ordinal {
        self.alpha.target()
    }

    pub fn q(&self) -> &Ordinal {
        self.beta.target()
    }

    pub fn r(&self) -> usize {
        self.gamma.source()
    }

    /// The level `m` the representative lives at.
    pub fn rep_level(&self) -> usize {
        self.alpha.source()
    }

    pub fn is_canonical(&self) -> bool {
        self.rep_level() == self.r() && self.gamma.is_identity()
    }

    /// Precomposes the contravariant slot: `[α, β, γ] ↦ [α, β, γ ∘ h]`.
    pub fn restrict(&self, h: &MonotoneMap) -> Result<KernelClass> {
        Ok(KernelClass {
            alpha: self.alpha.clone(),
            beta: self.beta.clone(),
            gamma: compose(&self.gamma, h)?,
        })
    }
}

impl fmt::Display for KernelClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[alpha={} beta={} gamma={}]@m={} in P({},{};[{}])",
            self.alpha,
            self.beta,
            self.gamma,
            self.rep_level(),
            self.p(),
            self.q(),
            self.r()
        )
    }
}

/// Reduces to `(α∘γ, β∘γ, id_r)`. Idempotent.
pub fn normalize_kernel(c: &KernelClass) -> KernelClass {
    if c.is_canonical() {
        return c.clone();
    }
    let alpha = compose(&c.alpha, &c.gamma).expect("gamma lands in the source of alpha");
    let beta = compose(&c.beta, &c.gamma).expect("gamma lands in the source of beta");
    KernelClass {
        alpha,
        beta,
        gamma: identity(c.r()),
    }
}

/// `P([p],[q];[r]) -> Δ([r],[p]) × Δ([r],[q])`.
pub fn eta(c: &KernelClass) -> (MonotoneMap, MonotoneMap) {
    let canonical = normalize_kernel(c);
    (canonical.alpha, canonical.beta)
}

/// The canonical class `(f, g, id_r)`.
pub fn eta_inverse(f: &MonotoneMap, g: &MonotoneMap) -> Result<KernelClass> {
    if f.source() != g.source() {
        return Err(Error::SourceTargetMismatch {
            context: format!(
                "pair components start at [{}] and [{}]",
                f.source(),
                g.source()
            ),
        });
    }
    Ok(KernelClass {
        alpha: f.clone(),
        beta: g.clone(),
        gamma: identity(f.source()),
    })
}

/// Functorial action `P(fp, fq; h)`: `[α, β, γ] ↦ [fp∘α, fq∘β, γ∘h]`.
pub fn kernel_act(
    fp: &MonotoneMap,
    fq: &MonotoneMap,
    h: &MonotoneMap,
    c: &KernelClass,
) -> Result<KernelClass> {
    Ok(KernelClass {
        alpha: compose(fp, &c.alpha)?,
        beta: compose(fq, &c.beta)?,
        gamma: compose(&c.gamma, h)?,
    })
}

/// Checks that `[α∘f, β∘f, γ]` and `[α, β, f∘γ]` have the same canonical
/// form, for `f: [m'] -> [m]` and `γ: [r] -> [m']`.
pub fn relation_check(
    alpha: &MonotoneMap,
    beta: &MonotoneMap,
    gamma: &MonotoneMap,
    f: &MonotoneMap,
) -> Result<bool> {
    let (left, right) = relation_pair(alpha, beta, gamma, f)?;
    Ok(normalize_kernel(&left) == normalize_kernel(&right))
}

/// The two representatives identified by the coend relation along `f`.
pub fn relation_pair(
    alpha: &MonotoneMap,
    beta: &MonotoneMap,
    gamma: &MonotoneMap,
    f: &MonotoneMap,
) -> Result<(KernelClass, KernelClass)> {
    let left = KernelClass::new(compose(alpha, f)?, compose(beta, f)?, gamma.clone())?;
    let right = KernelClass::new(alpha.clone(), beta.clone(), compose(f, gamma)?)?;
    Ok((left, right))
}

/// `δ[α, β, γ] = (α ⊠ β) ∘ γ`, a map `[r] -> [p·q]`.
pub fn delta(c: &KernelClass) -> MonotoneMap {
    let product = hadamard(&c.alpha, &c.beta).expect("alpha and beta share a source");
    compose(&product, &c.gamma).expect("gamma lands in the shared source")
}

/// Naturality square of `δ` along `h: [r'] -> [r]`.
pub fn delta_naturality_check(h: &MonotoneMap, c: &KernelClass) -> Result<bool> {
    let id_p = identity(c.p().to_usize()?);
    let id_q = identity(c.q().to_usize()?);
    let moved = kernel_act(&id_p, &id_q, h, c)?;
    let left_bottom = delta(&moved);
    let top_right = compose(&delta(c), h)?;
    Ok(left_bottom == top_right)
}

/// Swaps the two covariant slots.
pub fn symmetry_instance(c: &KernelClass) -> KernelClass {
    KernelClass {
        alpha: c.beta.clone(),
        beta: c.alpha.clone(),
        gamma: c.gamma.clone(),
    }
}

/// The unique element of `J([r]) = Δ([r],[0])`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitElement {
    map: MonotoneMap,
}

impl UnitElement {
    pub fn r(&self) -> usize {
        self.map.source()
    }

    pub fn as_map(&self) -> &MonotoneMap {
        &self.map
    }

    /// Contravariant action along `h: [r'] -> [r]`.
    pub fn act(&self, h: &MonotoneMap) -> Result<UnitElement> {
        Ok(UnitElement {
            map: compose(&self.map, h)?,
        })
    }
}

pub fn unit_element(r: usize) -> UnitElement {
    UnitElement {
        map: terminal_map(r),
    }
}

/// All of `J([r])`; always a single element.
pub fn unit_elements(r: usize) -> Vec<UnitElement> {
    crate::simplex::enumerate_maps(r, 0)
        .into_iter()
        .map(|map| UnitElement { map })
        .collect()
}
