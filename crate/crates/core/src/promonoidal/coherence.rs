//! Instance-level coherence for the Cartesian promonoidal structure.
//!
//! Elements of iterated coends such as `∫^x P(p,q;x) × P(x,r;w)` are
//! normalized, through `η` applied once per coend, to bracketed tuples of
//! maps out of `[w]` ([`Bracket`]). The structure isomorphisms act on those
//! tuples, and the coherence diagrams are checked elementwise.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::promonoidal::kernel::{eta, eta_inverse, unit_element, KernelClass, UnitElement};
use crate::report::{CheckReport, Counterexample};
use crate::simplex::{count_maps, enumerate_maps, identity, MonotoneMap};

/// A normalized element of an iterated coend at level `[w]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bracket {
    Leaf(MonotoneMap),
    Unit(UnitElement),
    Pair(Box<Bracket>, Box<Bracket>),
}

impl Bracket {
    pub fn pair(left: Bracket, right: Bracket) -> Bracket {
        Bracket::Pair(Box::new(left), Box::new(right))
    }

    fn split(&self) -> Option<(&Bracket, &Bracket)> {
        match self {
            Bracket::Pair(l, r) => Some((l, r)),
            _ => None,
        }
    }
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bracket::Leaf(m) => write!(f, "{m}"),
            Bracket::Unit(_) => f.write_str("*"),
            Bracket::Pair(l, r) => write!(f, "({l} | {r})"),
        }
    }
}

/// `((a, b), c) ↦ (a, (b, c))`.
pub fn associate(t: &Bracket) -> Option<Bracket> {
    let (ab, c) = t.split()?;
    let (a, b) = ab.split()?;
    Some(Bracket::pair(a.clone(), Bracket::pair(b.clone(), c.clone())))
}

/// `(a, b) ↦ (b, a)`.
pub fn swap(t: &Bracket) -> Option<Bracket> {
    let (a, b) = t.split()?;
    Some(Bracket::pair(b.clone(), a.clone()))
}

/// `(*, b) ↦ b`.
pub fn left_unitor(t: &Bracket) -> Option<Bracket> {
    match t.split()? {
        (Bracket::Unit(_), b) => Some(b.clone()),
        _ => None,
    }
}

/// `(a, *) ↦ a`.
pub fn right_unitor(t: &Bracket) -> Option<Bracket> {
    match t.split()? {
        (a, Bracket::Unit(_)) => Some(a.clone()),
        _ => None,
    }
}

/// Applies `op` to the left factor.
pub fn on_left(t: &Bracket, op: impl Fn(&Bracket) -> Option<Bracket>) -> Option<Bracket> {
    let (a, b) = t.split()?;
    Some(Bracket::pair(op(a)?, b.clone()))
}

/// Applies `op` to the right factor.
pub fn on_right(t: &Bracket, op: impl Fn(&Bracket) -> Option<Bracket>) -> Option<Bracket> {
    let (a, b) = t.split()?;
    Some(Bracket::pair(a.clone(), op(b)?))
}

fn leaf(f: MonotoneMap) -> Bracket {
    Bracket::Leaf(f)
}

/// Outcome of comparing the two bracketings of a triple coend.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociatorReport {
    pub left_representatives: usize,
    pub right_representatives: usize,
    pub left_size: usize,
    pub right_size: usize,
    pub expected_size: usize,
    /// Representatives of one left class all land in one right class.
    pub well_defined: bool,
    pub bijective: bool,
    /// The induced map is the re-bracketing `((f,g),h) ↦ (f,(g,h))`.
    pub matches_rebracketing: bool,
}

impl AssociatorReport {
    pub fn is_pass(&self) -> bool {
        self.left_size == self.expected_size
            && self.right_size == self.expected_size
            && self.well_defined
            && self.bijective
            && self.matches_rebracketing
    }
}

/// Normal form of `(π1, π2) ∈ P(p,q;x) × P(x,r;w)`: `((f∘a, g∘a), c)`.
fn normalize_left(pi1: &KernelClass, pi2: &KernelClass) -> Bracket {
    let (a, c) = eta(pi2);
    let (fa, ga) = eta(&pi1.restrict(&a).expect("a lands in [x]"));
    Bracket::pair(Bracket::pair(leaf(fa), leaf(ga)), leaf(c))
}

/// Normal form of `(π1', π2') ∈ P(q,r;y) × P(p,y;w)`: `(f, (g∘b, h∘b))`.
fn normalize_right(pi1: &KernelClass, pi2: &KernelClass) -> Bracket {
    let (f, b) = eta(pi2);
    let (gb, hb) = eta(&pi1.restrict(&b).expect("b lands in [y]"));
    Bracket::pair(leaf(f), Bracket::pair(leaf(gb), leaf(hb)))
}

/// The associator on representatives: `(π1, π2)` at level `x` goes to a
/// right-hand representative at level `y = w`.
fn associator_rep(pi1: &KernelClass, pi2: &KernelClass) -> (KernelClass, KernelClass) {
    let (a, c) = eta(pi2);
    let (fa, ga) = eta(&pi1.restrict(&a).expect("a lands in [x]"));
    let w = c.source();
    let right_inner = eta_inverse(&ga, &c).expect("shared source [w]");
    let right_outer = eta_inverse(&fa, &identity(w)).expect("shared source [w]");
    (right_inner, right_outer)
}

/// Compares `∫^x P(p,q;x) × P(x,r;w)` with `∫^y P(q,r;y) × P(p,y;w)`,
/// with intermediate levels `x, y <= w + 1`.
pub fn associator_instance(p: usize, q: usize, r: usize, w: usize) -> AssociatorReport {
    associator_instance_with_levels(p, q, r, w, w + 1)
}

pub fn associator_instance_with_levels(
    p: usize,
    q: usize,
    r: usize,
    w: usize,
    levels: usize,
) -> AssociatorReport {
    let mut left_reps = 0;
    let mut image: BTreeMap<Bracket, Bracket> = BTreeMap::new();
    let mut well_defined = true;
    let mut matches = true;
    let cs = enumerate_maps(w, r);
    for x in 0..=levels {
        let fs = enumerate_maps(x, p);
        let gs = enumerate_maps(x, q);
        let as_ = enumerate_maps(w, x);
        for f in &fs {
            for g in &gs {
                let pi1 = eta_inverse(f, g).expect("shared source");
                for a in &as_ {
                    for c in &cs {
                        let pi2 = eta_inverse(a, c).expect("shared source");
                        left_reps += 1;
                        let nf = normalize_left(&pi1, &pi2);
                        let (r1, r2) = associator_rep(&pi1, &pi2);
                        let target = normalize_right(&r1, &r2);
                        if associate(&nf).as_ref() != Some(&target) {
                            matches = false;
                        }
                        match image.get(&nf) {
                            Some(prev) if *prev != target => well_defined = false,
                            Some(_) => {}
                            None => {
                                image.insert(nf, target);
                            }
                        }
                    }
                }
            }
        }
    }

    let mut right_reps = 0;
    let mut right: BTreeSet<Bracket> = BTreeSet::new();
    let fs = enumerate_maps(w, p);
    for y in 0..=levels {
        let gs = enumerate_maps(y, q);
        let hs = enumerate_maps(y, r);
        let bs = enumerate_maps(w, y);
        for g in &gs {
            for h in &hs {
                let pi1 = eta_inverse(g, h).expect("shared source");
                for f in &fs {
                    for b in &bs {
                        let pi2 = eta_inverse(f, b).expect("shared source");
                        right_reps += 1;
                        right.insert(normalize_right(&pi1, &pi2));
                    }
                }
            }
        }
    }

    let values: BTreeSet<&Bracket> = image.values().collect();
    let bijective = values.len() == image.len()
        && values.len() == right.len()
        && values.iter().all(|v| right.contains(*v));
    let expected = count_maps(w, p) * count_maps(w, q) * count_maps(w, r);
    AssociatorReport {
        left_representatives: left_reps,
        right_representatives: right_reps,
        left_size: image.len(),
        right_size: right.len(),
        expected_size: usize::try_from(expected).expect("desk-scale count"),
        well_defined,
        bijective,
        matches_rebracketing: matches,
    }
}

/// Outcome of the unit-law instance at `(q, w)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitorReport {
    pub representatives: usize,
    pub size: usize,
    pub expected_size: usize,
    /// `λ` is a bijection onto `Δ([w],[q])`.
    pub bijective: bool,
    /// `λ = ρ ∘ σ` on every element.
    pub symmetric_agreement: bool,
}

impl UnitorReport {
    pub fn is_pass(&self) -> bool {
        self.size == self.expected_size && self.bijective && self.symmetric_agreement
    }
}

/// Normalizes `∫^x J(x) × P(x,q;w)` (levels `x <= w + 1`) and checks the
/// left unitor against `Δ([w],[q])`.
pub fn unitor_instance(q: usize, w: usize) -> UnitorReport {
    let mut reps = 0;
    let mut classes: BTreeSet<Bracket> = BTreeSet::new();
    let gs = enumerate_maps(w, q);
    for x in 0..=w + 1 {
        let j = unit_element(x);
        for a in enumerate_maps(w, x) {
            for g in &gs {
                let pi = eta_inverse(&a, g).expect("shared source");
                reps += 1;
                let (a, g) = eta(&pi);
                let unit = j.act(&a).expect("a lands in [x]");
                classes.insert(Bracket::pair(Bracket::Unit(unit), leaf(g)));
            }
        }
    }
    let images: BTreeSet<Bracket> = classes.iter().filter_map(left_unitor).collect();
    let expected: BTreeSet<Bracket> = gs.iter().cloned().map(leaf).collect();
    let symmetric_agreement = classes
        .iter()
        .all(|e| left_unitor(e).is_some() && left_unitor(e) == swap(e).and_then(|s| right_unitor(&s)));
    UnitorReport {
        representatives: reps,
        size: classes.len(),
        expected_size: gs.len(),
        bijective: images.len() == classes.len() && images == expected,
        symmetric_agreement,
    }
}

fn leaves(ordinals: &[usize], w: usize) -> Vec<Vec<MonotoneMap>> {
    ordinals.iter().map(|&o| enumerate_maps(w, o)).collect()
}

fn tuples(bound: usize, arity: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..=bound).map(move |o| {
                    let mut t = t.clone();
                    t.push(o);
                    t
                })
            })
            .collect();
    }
    out
}

fn record_paths(report: &mut CheckReport, op: &str, input: &Bracket, one: Option<Bracket>, two: Option<Bracket>) {
    let ok = one.is_some() && one == two;
    report.record(ok, || {
        let show = |b: &Option<Bracket>| b.as_ref().map_or("<shape error>".to_string(), |b| b.to_string());
        Counterexample::new(op, input.to_string(), show(&one), show(&two))
    });
}

/// Pentagon on `(((f, g), h), k)` for all ordinals and levels `<= bound`.
pub fn pentagon_check(bound: usize) -> CheckReport {
    let mut report = CheckReport::new("pentagon");
    for w in 0..=bound {
        for objs in tuples(bound, 4) {
            let ls = leaves(&objs, w);
            for f in &ls[0] {
                for g in &ls[1] {
                    for h in &ls[2] {
                        for k in &ls[3] {
                            let t = Bracket::pair(
                                Bracket::pair(Bracket::pair(leaf(f.clone()), leaf(g.clone())), leaf(h.clone())),
                                leaf(k.clone()),
                            );
                            let one = associate(&t).and_then(|s| associate(&s));
                            let two = on_left(&t, associate)
                                .and_then(|s| associate(&s))
                                .and_then(|s| on_right(&s, associate));
                            record_paths(&mut report, "pentagon", &t, one, two);
                        }
                    }
                }
            }
        }
    }
    report
}

/// Triangle on `((f, *), g)`: `(id ⊗ λ) ∘ α = ρ ⊗ id`.
pub fn triangle_check(bound: usize) -> CheckReport {
    let mut report = CheckReport::new("triangle");
    for w in 0..=bound {
        let unit = Bracket::Unit(unit_element(w));
        for objs in tuples(bound, 2) {
            let ls = leaves(&objs, w);
            for f in &ls[0] {
                for g in &ls[1] {
                    let t = Bracket::pair(Bracket::pair(leaf(f.clone()), unit.clone()), leaf(g.clone()));
                    let one = associate(&t).and_then(|s| on_right(&s, left_unitor));
                    let two = on_left(&t, right_unitor);
                    record_paths(&mut report, "triangle", &t, one, two);
                }
            }
        }
    }
    report
}

/// Hexagon on `((f, g), h)`:
/// `α ∘ σ ∘ α = (id ⊗ σ) ∘ α ∘ (σ ⊗ id)`.
pub fn hexagon_check(bound: usize) -> CheckReport {
    let mut report = CheckReport::new("hexagon");
    for w in 0..=bound {
        for objs in tuples(bound, 3) {
            let ls = leaves(&objs, w);
            for f in &ls[0] {
                for g in &ls[1] {
                    for h in &ls[2] {
                        let t = Bracket::pair(Bracket::pair(leaf(f.clone()), leaf(g.clone())), leaf(h.clone()));
                        let one = associate(&t)
                            .and_then(|s| swap(&s))
                            .and_then(|s| associate(&s));
                        let two = on_left(&t, swap)
                            .and_then(|s| associate(&s))
                            .and_then(|s| on_right(&s, swap));
                        record_paths(&mut report, "hexagon", &t, one, two);
                    }
                }
            }
        }
    }
    report
}

/// `σ ∘ σ = id` on every two-fold element.
pub fn symmetry_involution_check(bound: usize) -> CheckReport {
    let mut report = CheckReport::new("symmetry_involution");
    for w in 0..=bound {
        for objs in tuples(bound, 2) {
            let ls = leaves(&objs, w);
            for f in &ls[0] {
                for g in &ls[1] {
                    let t = Bracket::pair(leaf(f.clone()), leaf(g.clone()));
                    let back = swap(&t).and_then(|s| swap(&s));
                    record_paths(&mut report, "symmetry_involution", &t, back, Some(t.clone()));
                }
            }
        }
    }
    report
}
