use crate::hadamard::hadamard;
use crate::rational::Rational;
use crate::realization::{
    cell_decompose, cell_membership, compare_on_grid, cover_index, grid_points, grid_prism_points,
    homotopy_point, overlap_consistency, prism_triangulation, realize_map, s_coord, step_index,
    triangulation_gluing, PrismCell, PrismPoint,
};
use crate::report::{CheckReport, Counterexample};
use crate::simplex::{enumerate_maps, MonotoneMap};

/// Every `α: [m] -> [n]` with `m, n <= b`.
fn alphas(b: usize) -> impl Iterator<Item = (usize, usize, MonotoneMap)> {
    (0..=b).flat_map(move |m| {
        (0..=b).flat_map(move |n| enumerate_maps(m, n).into_iter().map(move |a| (m, n, a)))
    })
}

/// `homotopy_point(α, β, u) = |α ⊠ β|(u)` on every grid point.
pub fn two_path(b: usize, grid: usize) -> CheckReport {
    let mut report = CheckReport::new("two_path");
    for (m, _, alpha) in alphas(b) {
        let betas = enumerate_maps(m, 1);
        let us = grid_points(m, grid);
        for beta in &betas {
            let product = hadamard(&alpha, beta).expect("shared source");
            for u in &us {
                let v = homotopy_point(&alpha, beta, u).expect("levels agree");
                let w = realize_map(&product, u).expect("levels agree");
                report.record(v == w, || {
                    Counterexample::new(
                        "homotopy_point",
                        format!("alpha={} beta={} u={u}", alpha.signature(), beta.signature()),
                        &w,
                        &v,
                    )
                });
            }
        }
    }
    report
}

/// `s_coord(β, u)` is the vertex-1 coordinate of `|β|(u)`.
pub fn s_consistency(b: usize, grid: usize) -> CheckReport {
    let mut report = CheckReport::new("s_consistency");
    for m in 0..=b {
        let us = grid_points(m, grid);
        for beta in enumerate_maps(m, 1) {
            for u in &us {
                let s = s_coord(&beta, u).expect("levels agree");
                let pushed = realize_map(&beta, u).expect("levels agree");
                report.record(&s == pushed.coord(1), || {
                    Counterexample::new("s_coord", format!("beta={} u={u}", beta.signature()), pushed.coord(1), &s)
                });
            }
        }
    }
    report
}

/// For step index `k >= 0`, `(u, s)` lies in `S_k` and the coordinate
/// formulas agree with the affine formula on `S_k`.
pub fn lower_face(b: usize, grid: usize) -> CheckReport {
    let mut report = CheckReport::new("lower_face");
    for (m, _, alpha) in alphas(b) {
        let us = grid_points(m, grid);
        for beta in enumerate_maps(m, 1) {
            let Some(k) = step_index(&beta).expect("target [1]").cell() else {
                continue;
            };
            for u in &us {
                let s = s_coord(&beta, u).expect("levels agree");
                let point = PrismPoint::new(u.clone(), s).expect("s in [0,1]");
                let inside = cell_membership(m, k, &point).expect("k <= m");
                let outcome = if inside {
                    let d = cell_decompose(m, k, &point).expect("member");
                    let affine = crate::realization::affine_image(&alpha, &d).expect("levels agree");
                    let v = homotopy_point(&alpha, &beta, u).expect("levels agree");
                    (affine == v).then_some(()).ok_or_else(|| {
                        Counterexample::new(
                            "lower_face",
                            format!("alpha={} beta={} u={u}", alpha.signature(), beta.signature()),
                            &v,
                            &affine,
                        )
                    })
                } else {
                    Err(Counterexample::new("cell_membership", format!("k={k} point=({point})"), true, false))
                };
                report.record_outcome(outcome.err());
            }
        }
    }
    report
}

/// Every grid prism point lies in some cell; `t = 0` lies in `S_m` and
/// `t = 1` in `S_0`.
pub fn cover_nonempty(b: usize, grid: usize) -> CheckReport {
    let mut report = CheckReport::new("cover_nonempty");
    for m in 0..=b {
        for point in grid_prism_points(m, grid) {
            let cover = cover_index(&point);
            let ends = (!point.t().is_zero() || cover.contains(&m))
                && (point.t() != &Rational::one() || cover.contains(&0));
            report.record(!cover.is_empty() && ends, || {
                Counterexample::new("cover_index", point.to_string(), "nonempty cover", format!("{cover:?}"))
            });
        }
    }
    report
}

/// Decomposing in any covering cell and reconstructing returns the point,
/// with convex coefficients and `Σb = t`.
pub fn decomposition_roundtrip(b: usize, grid: usize) -> CheckReport {
    let mut report = CheckReport::new("decomposition_roundtrip");
    for m in 0..=b {
        for point in grid_prism_points(m, grid) {
            for k in cover_index(&point) {
                let d = cell_decompose(m, k, &point).expect("member");
                let coeffs = d.a_coeffs().iter().chain(d.b_coeffs());
                let convex = coeffs.clone().all(|c| !c.is_negative())
                    && coeffs.sum::<Rational>() == Rational::one()
                    && d.b_coeffs().iter().sum::<Rational>() == *point.t();
                let back = d.reconstruct().expect("convex coefficients");
                report.record(convex && back == point, || {
                    Counterexample::new("cell_decompose", format!("k={k} point=({point})"), &point, &back)
                });
            }
        }
    }
    report
}

/// The realized vertices of `(α_k, β_k)` are exactly the vertex list of `S_k`.
pub fn triangulation_vertices(d: usize) -> CheckReport {
    let mut report = CheckReport::new("triangulation_vertices");
    for m in 0..=d {
        for (k, (alpha_k, beta_k)) in prism_triangulation(m).into_iter().enumerate() {
            let got = crate::realization::triangulation_vertices(&alpha_k, &beta_k);
            let want = PrismCell::new(m, k).expect("k <= m").vertices();
            let step = step_index(&beta_k).expect("target [1]").cell();
            report.record(got == want && step == Some(k), || {
                Counterexample::new("prism_triangulation", format!("m={m} k={k}"), format!("{want:?}"), format!("{got:?}"))
            });
        }
    }
    report
}

/// Gluing along the prism triangulation, on the level-`m+1` grid.
pub fn gluing(b: usize, grid: usize) -> CheckReport {
    let mut report = CheckReport::new("gluing");
    for (m, _, alpha) in alphas(b) {
        let ws = grid_points(m + 1, grid);
        for k in 0..=m {
            for w in &ws {
                let (direct, via_cell) = triangulation_gluing(&alpha, k, w).expect("shapes");
                report.record(direct == via_cell, || {
                    Counterexample::new(
                        "triangulation_gluing",
                        format!("alpha={} k={k} w={w}", alpha.signature()),
                        &direct,
                        &via_cell,
                    )
                });
            }
        }
    }
    report
}

pub fn overlap(b: usize, grid: usize) -> CheckReport {
    let mut report = CheckReport::new("overlap");
    for (m, _, alpha) in alphas(b) {
        report.absorb(overlap_consistency(m, &alpha, grid).expect("levels agree"));
    }
    report
}

/// Exact agreement with the straight-line contraction at cell vertices and
/// on the `t ∈ {0, 1}` slices.
pub fn vertex_and_slice_agreement(b: usize, grid: usize) -> CheckReport {
    let mut report = CheckReport::new("vertex_and_slice_agreement");
    for (m, n, alpha) in alphas(b) {
        let r = compare_on_grid(n, m, &alpha, grid).expect("grid >= 1");
        report.record(r.vertex_agreement && r.slice_agreement, || {
            Counterexample::new(
                "compare_on_grid",
                format!("n={n} m={m} alpha={}", alpha.signature()),
                "vertex and slice agreement",
                format!("vertices={} slices={}", r.vertex_agreement, r.slice_agreement),
            )
        });
    }
    report
}
