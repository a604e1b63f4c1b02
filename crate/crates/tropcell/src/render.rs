//! SVG pictures of the planar case: the decomposition of the tropical plane
//! induced by an arrangement, and mixed subdivisions of n·Δ₂.
//!
//! Geometry stays exact for as long as it matters. Projections, convex-hull
//! vertex ordering, and recession directions of unbounded edges are computed
//! over rationals; floating point enters only when coordinates are formatted
//! into the document. Output is byte-identical across runs for a fixed input.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num::{Signed, ToPrimitive};

use crate::complex::{constraint_system_of, TropicalComplex};
use crate::mixed::MixedSubdivision;
use crate::rat::{rat, rat_int, Rat};
use crate::{Error, Result};

/// Exact planar point, kept rational until formatting.
type Point = (Rat, Rat);

/// Vertical scale applied at output time in the simplex picture: the second
/// barycentric coordinate axis is stretched by √3/2 to make the triangle
/// equilateral. Orientation and ordering are unaffected by a positive
/// uniform scale, so the exact hull bookkeeping can ignore it.
const SIMPLEX_Y_SCALE: f64 = 0.866_025_403_784_438_6;

fn require_planar(d: usize) -> Result<()> {
    if d == 3 {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "rendering is implemented for d = 3 only, got d = {d}"
        )))
    }
}

/// Projection of the tropical plane to R², p ↦ (p₂ − p₁, p₃ − p₁).
fn project(coords: &[Rat]) -> Point {
    (&coords[1] - &coords[0], &coords[2] - &coords[0])
}

/// Cross product (a − o) × (b − o); positive iff the turn o → a → b is
/// counterclockwise.
fn cross(o: &Point, a: &Point, b: &Point) -> Rat {
    let ax = &a.0 - &o.0;
    let ay = &a.1 - &o.1;
    let bx = &b.0 - &o.0;
    let by = &b.1 - &o.1;
    &ax * &by - &ay * &bx
}

/// Strict convex hull in counterclockwise order starting at the
/// lexicographic minimum (monotone chain). Interior, collinear, and
/// duplicate points are dropped.
fn convex_hull(mut pts: Vec<Point>) -> Vec<Point> {
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut hull: Vec<Point> = Vec::with_capacity(pts.len() + 1);
    for p in &pts {
        while hull.len() >= 2 && !cross(&hull[hull.len() - 2], &hull[hull.len() - 1], p).is_positive()
        {
            hull.pop();
        }
        hull.push(p.clone());
    }
    let lower = hull.len() + 1;
    for p in pts.iter().rev().skip(1) {
        while hull.len() >= lower
            && !cross(&hull[hull.len() - 2], &hull[hull.len() - 1], p).is_positive()
        {
            hull.pop();
        }
        hull.push(p.clone());
    }
    hull.pop();
    hull
}

fn approx(x: &Rat) -> Result<f64> {
    x.to_f64().ok_or_else(|| {
        Error::Precondition("coordinate exceeds the floating-point render range".to_string())
    })
}

/// Fixed four-decimal formatting; negative zero is normalized away so that
/// equal rationals always print identically.
fn fmt(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.4}")
}

/// Element sink. Emission flips the y axis (SVG grows downward) and applies
/// the picture's vertical scale.
struct Canvas {
    body: String,
    y_scale: f64,
    stroke: f64,
    dot: f64,
}

impl Canvas {
    fn new(y_scale: f64, stroke: f64, dot: f64) -> Self {
        Canvas {
            body: String::new(),
            y_scale,
            stroke,
            dot,
        }
    }

    fn emit(&self, p: &Point) -> Result<(f64, f64)> {
        Ok((approx(&p.0)?, -approx(&p.1)? * self.y_scale))
    }

    fn polygon(&mut self, pts: &[Point], class: &str, fill: &str) -> Result<()> {
        let mut coords = Vec::with_capacity(pts.len());
        for p in pts {
            let (x, y) = self.emit(p)?;
            coords.push(format!("{},{}", fmt(x), fmt(y)));
        }
        let _ = writeln!(
            self.body,
            "  <polygon class=\"{class}\" points=\"{}\" fill=\"{fill}\" stroke=\"none\"/>",
            coords.join(" ")
        );
        Ok(())
    }

    fn line(&mut self, a: &Point, b: &Point, class: &str) -> Result<()> {
        let (x1, y1) = self.emit(a)?;
        let (x2, y2) = self.emit(b)?;
        let _ = writeln!(
            self.body,
            "  <line class=\"{class}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#333333\" stroke-width=\"{}\" stroke-linecap=\"round\"/>",
            fmt(x1),
            fmt(y1),
            fmt(x2),
            fmt(y2),
            fmt(self.stroke)
        );
        Ok(())
    }

    fn dot(&mut self, c: &Point, class: &str) -> Result<()> {
        let (x, y) = self.emit(c)?;
        let _ = writeln!(
            self.body,
            "  <circle class=\"{class}\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#1a1a1a\"/>",
            fmt(x),
            fmt(y),
            fmt(self.dot)
        );
        Ok(())
    }

    fn ring(&mut self, c: &Point, r: f64, class: &str) -> Result<()> {
        let (x, y) = self.emit(c)?;
        let _ = writeln!(
            self.body,
            "  <circle class=\"{class}\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"#1a1a1a\" stroke-width=\"{}\"/>",
            fmt(x),
            fmt(y),
            fmt(r),
            fmt(self.stroke)
        );
        Ok(())
    }
}

/// Wraps a finished body in an SVG 1.1 document. The viewBox is given in
/// picture coordinates; the pixel size scales the longer side to 640.
fn document(x0: f64, y0: f64, w: f64, h: f64, body: &str) -> String {
    let scale = 640.0 / w.max(h);
    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">\n\
         {}</svg>\n",
        fmt(w * scale),
        fmt(h * scale),
        fmt(x0),
        fmt(y0),
        fmt(w),
        fmt(h),
        body
    )
}

/// Recession direction of an unbounded 1-cell, already projected. The only
/// possible directions are −e_m: a 1-cell forces exactly one coordinate
/// equality p_j = p_k + c, which caps p_m − p_j above for every m, leaving
/// the ray that lowers the remaining coordinate. A direction −e_m recedes
/// exactly when no finite bound caps p_j − p_m for j ≠ m.
fn ray_direction(tc: &TropicalComplex, idx: usize) -> Result<Point> {
    let cell = &tc.cells()[idx];
    let closed = constraint_system_of(tc.arrangement(), &cell.canonical_type)?.close();
    let mut found: Option<usize> = None;
    for m in 0..3 {
        if (0..3).all(|j| j == m || closed.get(m, j).is_none()) {
            if found.is_some() {
                return Err(Error::Consistency(format!(
                    "unbounded edge {idx} admits more than one recession direction"
                )));
            }
            found = Some(m);
        }
    }
    let m = found.ok_or_else(|| {
        Error::Consistency(format!(
            "unbounded edge {idx} has no coordinate recession direction"
        ))
    })?;
    Ok(match m {
        0 => (rat_int(1), rat_int(1)),
        1 => (rat_int(-1), rat_int(0)),
        _ => (rat_int(0), rat_int(-1)),
    })
}

fn bounding_box<'a>(pts: impl Iterator<Item = &'a Point>) -> Option<(Rat, Rat, Rat, Rat)> {
    let mut it = pts;
    let first = it.next()?;
    let (mut xmin, mut xmax) = (first.0.clone(), first.0.clone());
    let (mut ymin, mut ymax) = (first.1.clone(), first.1.clone());
    for p in it {
        if p.0 < xmin {
            xmin = p.0.clone();
        }
        if p.0 > xmax {
            xmax = p.0.clone();
        }
        if p.1 < ymin {
            ymin = p.1.clone();
        }
        if p.1 > ymax {
            ymax = p.1.clone();
        }
    }
    Some((xmin, xmax, ymin, ymax))
}

/// Picture of the cell decomposition of the tropical plane: bounded 2-cells
/// shaded, bounded edges as segments, unbounded edges as rays clipped by
/// the viewport, cell vertices as dots, and apices as ring marks.
pub fn render_arrangement_svg(tc: &TropicalComplex) -> Result<String> {
    let arr = tc.arrangement();
    require_planar(arr.d())?;

    let mut vertex_pos: BTreeMap<usize, Point> = BTreeMap::new();
    for (idx, cell) in tc.cells().iter().enumerate() {
        if cell.dim == 0 {
            let p = tc.vertex_point(idx)?;
            vertex_pos.insert(idx, project(p.coords()));
        }
    }
    let apex_pos: Vec<Point> = arr.apices().iter().map(|p| project(p.coords())).collect();

    let (xmin, xmax, ymin, ymax) = bounding_box(vertex_pos.values().chain(apex_pos.iter()))
        .ok_or(Error::EmptyArrangement)?;
    let span_x = &xmax - &xmin;
    let span_y = &ymax - &ymin;
    let span = span_x.clone().max(span_y.clone()).max(rat_int(1));
    let pad = &span / rat_int(2) + rat_int(1);
    // Long enough to leave the padded box from any start point in any of
    // the three ray directions; the viewport clips the overshoot.
    let reach = &span_x + &span_y + rat_int(4) * &pad;

    let span_f = approx(&span)?;
    let mut canvas = Canvas::new(1.0, span_f / 150.0, span_f / 80.0);

    for (idx, cell) in tc.cells().iter().enumerate() {
        if cell.dim == 2 && cell.bounded {
            let pts: Vec<Point> = tc
                .closure_vertices(idx)
                .iter()
                .map(|v| vertex_pos[v].clone())
                .collect();
            let hull = convex_hull(pts);
            if hull.len() < 3 {
                return Err(Error::Consistency(format!(
                    "bounded 2-cell {idx} spans fewer than 3 vertices"
                )));
            }
            canvas.polygon(&hull, "bounded", "#cfdcee")?;
        }
    }

    for (idx, cell) in tc.cells().iter().enumerate() {
        if cell.dim != 1 {
            continue;
        }
        let vs = tc.closure_vertices(idx);
        if cell.bounded {
            if vs.len() != 2 {
                return Err(Error::Consistency(format!(
                    "bounded edge {idx} has {} endpoints",
                    vs.len()
                )));
            }
            canvas.line(&vertex_pos[&vs[0]], &vertex_pos[&vs[1]], "edge")?;
        } else {
            if vs.len() != 1 {
                return Err(Error::Consistency(format!(
                    "unbounded edge {idx} has {} endpoints",
                    vs.len()
                )));
            }
            let dir = ray_direction(tc, idx)?;
            let start = &vertex_pos[&vs[0]];
            let end = (&start.0 + &reach * &dir.0, &start.1 + &reach * &dir.1);
            canvas.line(start, &end, "ray")?;
        }
    }

    for p in vertex_pos.values() {
        canvas.dot(p, "vertex")?;
    }
    let apex_r = span_f / 45.0;
    for p in &apex_pos {
        canvas.ring(p, apex_r, "apex")?;
    }

    let x0 = approx(&(&xmin - &pad))?;
    let y0 = -approx(&(&ymax + &pad))?;
    let w = approx(&(&span_x + rat_int(2) * &pad))?;
    let h = approx(&(&span_y + rat_int(2) * &pad))?;
    Ok(document(x0, y0, w, h, &canvas.body))
}

/// Barycentric embedding of a lattice point (a, b, c) of n·Δ₂, before the
/// vertical √3/2 stretch: b·(1, 0) + c·(1/2, 1).
fn embed(p: &[u32]) -> Point {
    (
        rat_int(i64::from(p[1])) + rat(i64::from(p[2]), 2),
        rat_int(i64::from(p[2])),
    )
}

/// Picture of a mixed subdivision of n·Δ₂: 2-cells shaded, edges as
/// segments, vertex cells as dots.
pub fn render_mixed_svg(ms: &MixedSubdivision) -> Result<String> {
    require_planar(ms.d())?;

    let n = ms.n() as f64;
    let scale = n.max(1.0);
    let mut canvas = Canvas::new(SIMPLEX_Y_SCALE, scale / 120.0, scale / 55.0);

    for (k, cell) in ms.cells().iter().enumerate() {
        if ms.dims()[k] != 2 {
            continue;
        }
        let pts: Vec<Point> = cell.lattice_points().iter().map(|p| embed(p)).collect();
        let hull = convex_hull(pts);
        if hull.len() < 3 {
            return Err(Error::Consistency(format!(
                "2-dimensional mixed cell {k} spans fewer than 3 points"
            )));
        }
        canvas.polygon(&hull, "cell", "#dfe8f2")?;
    }

    for (k, cell) in ms.cells().iter().enumerate() {
        if ms.dims()[k] != 1 {
            continue;
        }
        // The lattice points of a 1-cell are collinear; the lexicographic
        // extremes are the segment's endpoints.
        let mut pts: Vec<Point> = cell.lattice_points().iter().map(|p| embed(p)).collect();
        pts.sort();
        match (pts.first(), pts.last()) {
            (Some(a), Some(b)) if a != b => canvas.line(a, b, "edge")?,
            _ => {
                return Err(Error::Consistency(format!(
                    "1-dimensional mixed cell {k} has no extent"
                )))
            }
        }
    }

    for (k, cell) in ms.cells().iter().enumerate() {
        if ms.dims()[k] != 0 {
            continue;
        }
        let pts = cell.lattice_points();
        if pts.len() != 1 {
            return Err(Error::Consistency(format!(
                "vertex cell {k} has {} lattice points",
                pts.len()
            )));
        }
        canvas.dot(&embed(&pts[0]), "vertex")?;
    }

    let pad = 0.1 * scale + 0.25;
    let x0 = -pad;
    let y0 = -(n * SIMPLEX_Y_SCALE + pad);
    let w = n + 2.0 * pad;
    let h = n * SIMPLEX_Y_SCALE + 2.0 * pad;
    Ok(document(x0, y0, w, h, &canvas.body))
}
