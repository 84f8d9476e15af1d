//! Exact geometric realization of `H^n`.
//!
//! Points of `|Δ^m|` are barycentric coordinate vectors of [`Rational`]s.
//! The prism `|Δ^m| × [0,1]` is covered by the closed cells
//! `S_k = conv((e_0,0),…,(e_k,0),(e_k,1),…,(e_m,1))`, and `|H^n|` is affine
//! on each of them.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::report::{CheckReport, Counterexample};
use crate::simplex::{compose, MonotoneMap, Ordinal};
use crate::rational::Rational;

/// A point of `|Δ^m|`: nonnegative coordinates summing to exactly 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BaryPoint {
    coords: Vec<Rational>,
}

impl BaryPoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidPoint("no coordinates".into()));
        }
        if let Some(i) = coords.iter().position(Rational::is_negative) {
            return Err(Error::InvalidPoint(format!("coordinate {i} is negative")));
        }
        let total: Rational = coords.iter().sum();
        if total != Rational::one() {
            return Err(Error::InvalidPoint(format!("coordinates sum to {total}")));
        }
        Ok(BaryPoint { coords })
    }

    /// The vertex `e_i` of `|Δ^m|`.
    pub fn vertex(m: usize, i: usize) -> Result<Self> {
        if i > m {
            return Err(Error::IndexOutOfRange { k: i as i64, m });
        }
        let mut coords = vec![Rational::zero(); m + 1];
        coords[i] = Rational::one();
        Ok(BaryPoint { coords })
    }

    pub fn barycenter(m: usize) -> Self {
        BaryPoint {
            coords: vec![Rational::new(1, m as i64 + 1); m + 1],
        }
    }

    pub fn level(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Rational {
        &self.coords[i]
    }

    /// `max_j |self_j - other_j|`.
    pub fn linf_distance(&self, other: &BaryPoint) -> Result<Rational> {
        check_level(other.level(), self.level())?;
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a - b).abs())
            .max()
            .unwrap_or_else(Rational::zero))
    }
}

impl fmt::Display for BaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for BaryPoint {
    type Err = Error;

    /// `"1/3,1/3,1/3"`.
    fn from_str(s: &str) -> Result<Self> {
        let coords = s
            .split(',')
            .map(Rational::from_str)
            .collect::<Result<Vec<_>>>()?;
        BaryPoint::new(coords).map_err(|e| Error::bad_literal(s, e.to_string()))
    }
}

/// A point `(u, t)` of `|Δ^m| × [0,1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrismPoint {
    base: BaryPoint,
    t: Rational,
}

impl PrismPoint {
    pub fn new(base: BaryPoint, t: Rational) -> Result<Self> {
        if !t.is_unit_interval() {
            return Err(Error::ParameterOutOfRange(format!("t = {t} is outside [0,1]")));
        }
        Ok(PrismPoint { base, t })
    }

    pub fn base(&self) -> &BaryPoint {
        &self.base
    }

    pub fn t(&self) -> &Rational {
        &self.t
    }

    pub fn level(&self) -> usize {
        self.base.level()
    }
}

impl fmt::Display for PrismPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u={} t={}", self.base, self.t)
    }
}

impl FromStr for PrismPoint {
    type Err = Error;

    /// `"u=1/3,1/3,1/3 t=1/2"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut base = None;
        let mut t = None;
        for part in s.split_whitespace() {
            match part.split_once('=') {
                Some(("u", v)) => base = Some(v.parse::<BaryPoint>()?),
                Some(("t", v)) => t = Some(v.parse::<Rational>()?),
                _ => return Err(Error::bad_literal(s, format!("unexpected token {part:?}"))),
            }
        }
        match (base, t) {
            (Some(base), Some(t)) => {
                PrismPoint::new(base, t).map_err(|e| Error::bad_literal(s, e.to_string()))
            }
            _ => Err(Error::bad_literal(s, "expected `u=<coords> t=<rational>`")),
        }
    }
}

/// The step index `k` of `β: [m] -> [1]`: `β(i) = 0` iff `i <= k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StepIndex(i64);

impl StepIndex {
    pub fn value(self) -> i64 {
        self.0
    }

    /// The prism cell index, absent for `k = -1`.
    pub fn cell(self) -> Option<usize> {
        usize::try_from(self.0).ok()
    }
}

impl fmt::Display for StepIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The `(m+1)`-simplex `S_k` inside `|Δ^m| × [0,1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrismCell {
    m: usize,
    k: usize,
}

impl PrismCell {
    pub fn new(m: usize, k: usize) -> Result<Self> {
        if k > m {
            return Err(Error::IndexOutOfRange { k: k as i64, m });
        }
        Ok(PrismCell { m, k })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `(e_0,0),…,(e_k,0),(e_k,1),…,(e_m,1)` as `(vertex index, height)`.
    pub fn vertices(&self) -> Vec<(usize, u8)> {
        (0..=self.k)
            .map(|i| (i, 0))
            .chain((self.k..=self.m).map(|i| (i, 1)))
            .collect()
    }

    pub fn vertex_points(&self) -> Vec<PrismPoint> {
        self.vertices()
            .into_iter()
            .map(|(i, h)| PrismPoint {
                base: BaryPoint::vertex(self.m, i).expect("i <= m"),
                t: Rational::integer(h as i64),
            })
            .collect()
    }
}

/// Convex coefficients of a point of `S_k` on its vertices:
/// `a_0…a_k` on the bottom vertices and `b_k…b_m` on the top ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineDecomposition {
    m: usize,
    k: usize,
    a: Vec<Rational>,
    b: Vec<Rational>,
}

impl AffineDecomposition {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `a_i`, for `0 <= i <= k`.
    pub fn a(&self, i: usize) -> &Rational {
        &self.a[i]
    }

    /// `b_i`, for `k <= i <= m`.
    pub fn b(&self, i: usize) -> &Rational {
        &self.b[i - self.k]
    }

    pub fn a_coeffs(&self) -> &[Rational] {
        &self.a
    }

    pub fn b_coeffs(&self) -> &[Rational] {
        &self.b
    }

    /// `Σ a_i (e_i, 0) + Σ b_i (e_i, 1)`.
    pub fn reconstruct(&self) -> Result<PrismPoint> {
        let mut coords = vec![Rational::zero(); self.m + 1];
        for (i, a) in self.a.iter().enumerate() {
            coords[i] = &coords[i] + a;
        }
        for (j, b) in self.b.iter().enumerate() {
            coords[self.k + j] = &coords[self.k + j] + b;
        }
        let t: Rational = self.b.iter().sum();
        PrismPoint::new(BaryPoint::new(coords)?, t)
    }
}

fn check_level(found: usize, expected: usize) -> Result<()> {
    if found != expected {
        return Err(Error::LevelMismatch { expected, found });
    }
    Ok(())
}

fn target_len(f: &MonotoneMap) -> Result<usize> {
    Ok(f.target().to_usize()? + 1)
}

/// `|α|(u)`: `w_j = Σ_{α(i)=j} u_i`.
pub fn realize_map(alpha: &MonotoneMap, u: &BaryPoint) -> Result<BaryPoint> {
    check_level(u.level(), alpha.source())?;
    let mut coords = vec![Rational::zero(); target_len(alpha)?];
    for (i, ui) in u.coords.iter().enumerate() {
        let j = alpha.index(i);
        coords[j] = &coords[j] + ui;
    }
    Ok(BaryPoint { coords })
}

pub fn step_index(beta: &MonotoneMap) -> Result<StepIndex> {
    if beta.target() != &Ordinal::from(1usize) {
        return Err(Error::TargetMismatch {
            expected: 1u32.into(),
            found: beta.target().top().clone(),
        });
    }
    let zeros = beta.values().iter().take_while(|v| *v == &0u32.into()).count();
    Ok(StepIndex(zeros as i64 - 1))
}

/// `s = Σ_{i>k} u_i`, the `|Δ^1|` coordinate of vertex 1 under `|β|`.
pub fn s_coord(beta: &MonotoneMap, u: &BaryPoint) -> Result<Rational> {
    check_level(u.level(), beta.source())?;
    let first_one = (step_index(beta)?.value() + 1) as usize;
    Ok(u.coords[first_one..].iter().sum())
}

/// The image of `(α, β; u)` under `|H^n|`, from the coordinate formulas:
/// `v_j = Σ_{i>k, α(i)=j} u_i` for `j >= 1` and
/// `v_0 = (1 - s) + Σ_{i>k, α(i)=0} u_i`.
pub fn homotopy_point(alpha: &MonotoneMap, beta: &MonotoneMap, u: &BaryPoint) -> Result<BaryPoint> {
    check_level(u.level(), alpha.source())?;
    check_level(u.level(), beta.source())?;
    let first_one = (step_index(beta)?.value() + 1) as usize;
    let s = s_coord(beta, u)?;
    let mut coords = vec![Rational::zero(); target_len(alpha)?];
    coords[0] = Rational::one() - s;
    for i in first_one..=u.level() {
        let j = alpha.index(i);
        coords[j] = &coords[j] + &u.coords[i];
    }
    Ok(BaryPoint { coords })
}

/// Closed test `Σ_{i>k} u_i <= t <= u_k + Σ_{i>k} u_i`.
pub fn cell_membership(m: usize, k: usize, point: &PrismPoint) -> Result<bool> {
    if k > m {
        return Err(Error::IndexOutOfRange { k: k as i64, m });
    }
    check_level(point.level(), m)?;
    let above: Rational = point.base.coords[k + 1..].iter().sum();
    let upper = &above + &point.base.coords[k];
    Ok(above <= point.t && point.t <= upper)
}

/// Every `k` whose cell contains the point; never empty.
pub fn cover_index(point: &PrismPoint) -> Vec<usize> {
    let m = point.level();
    (0..=m)
        .filter(|&k| cell_membership(m, k, point).expect("k <= m at the point's level"))
        .collect()
}

/// The unique convex coefficients of `point` on the vertices of `S_k`.
pub fn cell_decompose(m: usize, k: usize, point: &PrismPoint) -> Result<AffineDecomposition> {
    if !cell_membership(m, k, point)? {
        return Err(Error::NotInCell { k, m });
    }
    let u = &point.base.coords;
    let above: Rational = u[k + 1..].iter().sum();
    let b_k = &point.t - &above;
    let a_k = &u[k] - &b_k;
    let mut a: Vec<Rational> = u[..k].to_vec();
    a.push(a_k);
    let mut b = vec![b_k];
    b.extend(u[k + 1..].iter().cloned());
    Ok(AffineDecomposition { m, k, a, b })
}

/// The affine map on `S_k` sending `(e_i,0) ↦ e_0` and `(e_i,1) ↦ e_{α(i)}`.
pub fn affine_image(alpha: &MonotoneMap, d: &AffineDecomposition) -> Result<BaryPoint> {
    check_level(d.m, alpha.source())?;
    let mut coords = vec![Rational::zero(); target_len(alpha)?];
    coords[0] = d.a.iter().sum();
    for (offset, b) in d.b.iter().enumerate() {
        let j = alpha.index(d.k + offset);
        coords[j] = &coords[j] + b;
    }
    Ok(BaryPoint { coords })
}

/// Straight-line contraction to the 0-vertex:
/// `c_0 = (1 - t) + t·w_0`, `c_j = t·w_j`.
pub fn standard_contraction(w: &BaryPoint, t: &Rational) -> Result<BaryPoint> {
    if !t.is_unit_interval() {
        return Err(Error::ParameterOutOfRange(format!("t = {t} is outside [0,1]")));
    }
    let mut coords: Vec<Rational> = w.coords.iter().map(|wj| t * wj).collect();
    coords[0] = &coords[0] + &(Rational::one() - t.clone());
    Ok(BaryPoint { coords })
}

/// The nondegenerate `(m+1)`-simplices of `Δ^m × Δ^1`: for each `k`,
/// `α_k: [m+1] -> [m]` repeating `k`, and `β_k: [m+1] -> [1]` with step
/// index `k`.
pub fn prism_triangulation(m: usize) -> Vec<(MonotoneMap, MonotoneMap)> {
    (0..=m)
        .map(|k| {
            let alpha: Vec<usize> = (0..=m + 1).map(|i| if i <= k { i } else { i - 1 }).collect();
            let beta: Vec<usize> = (0..=m + 1).map(|i| usize::from(i > k)).collect();
            (
                crate::simplex::map_from(m + 1, m, &alpha).expect("degeneracy is monotone"),
                crate::simplex::map_from(m + 1, 1, &beta).expect("step map is monotone"),
            )
        })
        .collect()
}

/// Vertex images `(|α_k|(e_i), |β_k|(e_i))` as `(vertex index, height)`.
pub fn triangulation_vertices(alpha: &MonotoneMap, beta: &MonotoneMap) -> Vec<(usize, u8)> {
    (0..=alpha.source())
        .map(|i| (alpha.index(i), beta.index(i) as u8))
        .collect()
}

/// Barycentric points of `|Δ^m|` with denominators dividing `d`, in
/// lexicographic order, followed by the barycenter if it is not among them.
pub fn grid_points(m: usize, d: usize) -> Vec<BaryPoint> {
    let mut out = Vec::new();
    let mut parts = vec![0usize; m + 1];
    compositions(d, 0, &mut parts, &mut out, d);
    let center = BaryPoint::barycenter(m);
    if !out.contains(&center) {
        out.push(center);
    }
    out
}

fn compositions(remaining: usize, pos: usize, parts: &mut Vec<usize>, out: &mut Vec<BaryPoint>, d: usize) {
    if pos == parts.len() - 1 {
        parts[pos] = remaining;
        out.push(BaryPoint {
            coords: parts.iter().map(|&c| Rational::new(c as i64, d as i64)).collect(),
        });
        return;
    }
    for c in 0..=remaining {
        parts[pos] = c;
        compositions(remaining - c, pos + 1, parts, out, d);
    }
}

/// [`grid_points`] crossed with `t ∈ {0, 1/d, …, 1}`.
pub fn grid_prism_points(m: usize, d: usize) -> Vec<PrismPoint> {
    let ts: Vec<Rational> = (0..=d).map(|i| Rational::new(i as i64, d as i64)).collect();
    grid_points(m, d)
        .into_iter()
        .flat_map(|u| {
            ts.iter().map(move |t| PrismPoint {
                base: u.clone(),
                t: t.clone(),
            })
        })
        .collect()
}

/// Grid comparison of the prism-wise affine `|H^n|` against the straight-line
/// contraction `C ∘ (|α| × id)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeviationReport {
    pub points: usize,
    /// Largest L∞ distance over the grid.
    pub max_deviation: Rational,
    /// First grid point attaining the maximum, with both values there.
    pub witness: Option<(PrismPoint, BaryPoint, BaryPoint)>,
    /// Exact agreement at every vertex of every `S_k`.
    pub vertex_agreement: bool,
    /// Exact agreement on the `t = 0` and `t = 1` slices.
    pub slice_agreement: bool,
}

impl DeviationReport {
    pub fn interior_agreement(&self) -> bool {
        self.max_deviation.is_zero()
    }
}

/// Interpretation caveat attached to every nonzero deviation report.
pub const COINCIDENCE_NOTE: &str = "the prism-wise affine homotopy agrees with the straight-line \
contraction at cell vertices and on the t=0, t=1 slices only; whether the two are meant to \
coincide pointwise is an open interpretation question, so interior deviation is reported, \
not asserted";

fn check_shape(alpha: &MonotoneMap, n: usize, m: usize) -> Result<()> {
    check_level(alpha.source(), m)?;
    if alpha.target() != &Ordinal::from(n) {
        return Err(Error::TargetMismatch {
            expected: n.into(),
            found: alpha.target().top().clone(),
        });
    }
    Ok(())
}

fn affine_at(alpha: &MonotoneMap, k: usize, point: &PrismPoint) -> BaryPoint {
    let d = cell_decompose(point.level(), k, point).expect("k comes from the cover");
    affine_image(alpha, &d).expect("levels agree")
}

fn contraction_at(alpha: &MonotoneMap, point: &PrismPoint) -> BaryPoint {
    let w = realize_map(alpha, &point.base).expect("levels agree");
    standard_contraction(&w, &point.t).expect("t in [0,1]")
}

/// Measures `|A − B|` over the grid of denominator `d`, where `A` is the
/// affine image through the first covering cell and `B` the straight-line
/// contraction of `|α|(u)`.
pub fn compare_on_grid(n: usize, m: usize, alpha: &MonotoneMap, d: usize) -> Result<DeviationReport> {
    if d == 0 {
        return Err(Error::ParameterOutOfRange("grid denominator must be >= 1".into()));
    }
    check_shape(alpha, n, m)?;

    let mut vertex_agreement = true;
    for k in 0..=m {
        let cell = PrismCell::new(m, k)?;
        for v in cell.vertex_points() {
            vertex_agreement &= affine_at(alpha, k, &v) == contraction_at(alpha, &v);
        }
    }

    let points = grid_prism_points(m, d);
    let mut max_deviation = Rational::zero();
    let mut witness = None;
    let mut slice_agreement = true;
    for point in &points {
        let cover = cover_index(point);
        let b = contraction_at(alpha, point);
        if point.t.is_zero() || point.t == Rational::one() {
            slice_agreement &= cover.iter().all(|&k| affine_at(alpha, k, point) == b);
        }
        let a = affine_at(alpha, cover[0], point);
        let dev = a.linf_distance(&b)?;
        if dev > max_deviation {
            max_deviation = dev;
            witness = Some((point.clone(), a, b));
        }
    }
    Ok(DeviationReport {
        points: points.len(),
        max_deviation,
        witness,
        vertex_agreement,
        slice_agreement,
    })
}

/// Where cells overlap, every covering cell yields the same affine image.
pub fn overlap_consistency(m: usize, alpha: &MonotoneMap, d: usize) -> Result<CheckReport> {
    check_level(alpha.source(), m)?;
    let mut report = CheckReport::new(format!("overlap(m={m},alpha={alpha},D={d})"));
    for point in grid_prism_points(m, d) {
        let cover = cover_index(&point);
        if cover.len() < 2 {
            continue;
        }
        let first = affine_at(alpha, cover[0], &point);
        for &k in &cover[1..] {
            let other = affine_at(alpha, k, &point);
            report.record(other == first, || {
                Counterexample::new(
                    "overlap_consistency",
                    format!("alpha={} point=({point}) cells={},{k}", alpha.signature(), cover[0]),
                    &first,
                    &other,
                )
            });
        }
    }
    Ok(report)
}

/// `|α|(α_k-image)`: composite used by the triangulation gluing identity.
pub fn triangulation_gluing(alpha: &MonotoneMap, k: usize, w: &BaryPoint) -> Result<(BaryPoint, BaryPoint)> {
    let m = alpha.source();
    let cells = prism_triangulation(m);
    let (alpha_k, beta_k) = cells
        .get(k)
        .ok_or(Error::IndexOutOfRange { k: k as i64, m })?;
    let direct = homotopy_point(&compose(alpha, alpha_k)?, beta_k, w)?;
    let point = PrismPoint::new(realize_map(alpha_k, w)?, s_coord(beta_k, w)?)?;
    let via_cell = affine_image(alpha, &cell_decompose(m, k, &point)?)?;
    Ok((direct, via_cell))
}
