//! Planar geometry for coverage regions: convex polygons under half-plane
//! clipping, polygonal disk approximations, and mass / centroid / polar-moment
//! integrals with respect to a density field.
//!
//! All regions handled by the simulator (the working area, Voronoi cells,
//! sensing disks and their intersections) are convex polygons with vertices in
//! counter-clockwise order. Clipping can annihilate a region entirely, so the
//! empty polygon is a first-class value rather than an error.

mod density;
mod moments;

pub use density::DensityField;
pub use moments::{
    for_each_quadrature_node, moments_numeric, moments_uniform, polar_moment, RegionMoments,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Vertices closer than this are merged during polygon construction.
pub const MERGE_TOLERANCE: f64 = 1e-9;

/// Polygons with less area than this collapse to the explicit empty polygon.
pub const MIN_AREA: f64 = 1e-12;

/// Normalized slack used by containment tests.
pub const CONTAINS_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("operation on an empty region")]
    EmptyRegion,
    #[error("density mass over the region is numerically zero")]
    ZeroMass,
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),
    #[error("disk approximation needs at least 8 segments, got {0}")]
    InvalidSegments(usize),
}

/// A point in the plane, in meters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn distance(self, other: Point2) -> f64 {
        (other - self).norm()
    }

    pub fn distance_sq(self, other: Point2) -> f64 {
        (other - self).norm_sq()
    }

    pub fn midpoint(self, other: Point2) -> Point2 {
        Point2::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl From<[f64; 2]> for Point2 {
    fn from(v: [f64; 2]) -> Self {
        Point2::new(v[0], v[1])
    }
}

impl From<Point2> for [f64; 2] {
    fn from(p: Point2) -> Self {
        [p.x, p.y]
    }
}

impl std::ops::Sub for Point2 {
    type Output = Vec2;
    fn sub(self, rhs: Point2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl std::ops::Add<Vec2> for Point2 {
    type Output = Point2;
    fn add(self, rhs: Vec2) -> Point2 {
        Point2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

/// A displacement in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn cross(self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Unit vector in the same direction, or `None` for (near) zero vectors.
    pub fn normalized(self) -> Option<Vec2> {
        let n = self.norm();
        if n > 0.0 {
            Some(Vec2::new(self.x / n, self.y / n))
        } else {
            None
        }
    }

    /// Counter-clockwise perpendicular.
    pub fn perp(self) -> Vec2 {
        Vec2::new(-self.y, self.x)
    }
}

impl From<[f64; 2]> for Vec2 {
    fn from(v: [f64; 2]) -> Self {
        Vec2::new(v[0], v[1])
    }
}

impl From<Vec2> for [f64; 2] {
    fn from(v: Vec2) -> Self {
        [v.x, v.y]
    }
}

impl std::ops::Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, s: f64) -> Vec2 {
        Vec2::new(self.x * s, self.y * s)
    }
}

impl std::ops::Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

/// A directed line; clipping keeps the open half-plane to its left.
#[derive(Debug, Clone, Copy)]
pub struct DirectedLine {
    point: Point2,
    /// Unit left normal: `normal · (q - point) >= 0` means `q` is kept.
    normal: Vec2,
}

impl DirectedLine {
    /// Line through `point` along `direction` (must be non-zero).
    pub fn through(point: Point2, direction: Vec2) -> Self {
        let dir = direction
            .normalized()
            .expect("directed line needs a non-zero direction");
        Self {
            point,
            normal: dir.perp(),
        }
    }

    /// Perpendicular bisector between `keep` and `other`, oriented so that
    /// `keep`'s side is retained. A positive `shrink` moves the boundary
    /// toward `keep`, narrowing the kept half-plane.
    pub fn bisector_toward(keep: Point2, other: Point2, shrink: f64) -> Self {
        let toward_other = (other - keep)
            .normalized()
            .expect("bisector endpoints must be distinct");
        let boundary = keep.midpoint(other) + toward_other * (-shrink);
        Self {
            point: boundary,
            normal: -toward_other,
        }
    }

    /// Line parallel to the bisector of `keep`/`other`, passing through
    /// `other` itself, with `keep`'s side retained.
    pub fn parallel_through_other(keep: Point2, other: Point2) -> Self {
        let toward_other = (other - keep)
            .normalized()
            .expect("endpoints must be distinct");
        Self {
            point: other,
            normal: -toward_other,
        }
    }

    /// Signed distance of `q` from the boundary; positive on the kept side.
    pub fn signed_offset(&self, q: Point2) -> f64 {
        self.normal.dot(q - self.point)
    }
}

/// A convex polygon with counter-clockwise vertices, or the explicit empty
/// region (no vertices). Construction merges near-duplicate vertices and
/// rejects clockwise or non-convex input; clipping operations collapse
/// degenerate results to the empty value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<[f64; 2]>", into = "Vec<[f64; 2]>")]
pub struct ConvexPolygon {
    vertices: Vec<Point2>,
}

impl TryFrom<Vec<[f64; 2]>> for ConvexPolygon {
    type Error = GeometryError;
    fn try_from(raw: Vec<[f64; 2]>) -> Result<Self, GeometryError> {
        ConvexPolygon::new(raw.into_iter().map(Point2::from).collect())
    }
}

impl From<ConvexPolygon> for Vec<[f64; 2]> {
    fn from(poly: ConvexPolygon) -> Self {
        poly.vertices.into_iter().map(<[f64; 2]>::from).collect()
    }
}

impl ConvexPolygon {
    /// Validating constructor: requires at least 3 distinct vertices in
    /// counter-clockwise order, convex up to a collinearity tolerance.
    pub fn new(vertices: Vec<Point2>) -> Result<Self, GeometryError> {
        for v in &vertices {
            if !v.is_finite() {
                return Err(GeometryError::InvalidPolygon(
                    "non-finite vertex coordinate".into(),
                ));
            }
        }
        let merged = merge_close_vertices(vertices);
        if merged.len() < 3 {
            return Err(GeometryError::InvalidPolygon(
                "fewer than 3 distinct vertices".into(),
            ));
        }
        let area = signed_area(&merged);
        if area <= MIN_AREA {
            return Err(GeometryError::InvalidPolygon(format!(
                "signed area {area} is not positive; vertices must be counter-clockwise"
            )));
        }
        let n = merged.len();
        for i in 0..n {
            let a = merged[i];
            let b = merged[(i + 1) % n];
            let c = merged[(i + 2) % n];
            let e1 = b - a;
            let e2 = c - b;
            let denom = e1.norm() * e2.norm();
            if e1.cross(e2) < -CONTAINS_TOLERANCE * denom {
                return Err(GeometryError::InvalidPolygon(format!(
                    "reflex turn at vertex ({}, {})",
                    b.x, b.y
                )));
            }
        }
        Ok(Self { vertices: merged })
    }

    /// The explicit empty region.
    pub fn empty() -> Self {
        Self {
            vertices: Vec::new(),
        }
    }

    /// Axis-aligned rectangle `[x0, x1] x [y0, y1]`.
    pub fn rectangle(x0: f64, x1: f64, y0: f64, y1: f64) -> Self {
        Self::new(vec![
            Point2::new(x0, y0),
            Point2::new(x1, y0),
            Point2::new(x1, y1),
            Point2::new(x0, y1),
        ])
        .expect("rectangle extents must be positive")
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point2, Point2)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Shoelace area; zero for the empty polygon.
    pub fn area(&self) -> f64 {
        if self.is_empty() {
            0.0
        } else {
            signed_area(&self.vertices)
        }
    }

    /// Largest pairwise vertex distance (exact diameter for convex polygons).
    pub fn diameter(&self) -> f64 {
        let mut best = 0.0f64;
        for (i, a) in self.vertices.iter().enumerate() {
            for b in &self.vertices[i + 1..] {
                best = best.max(a.distance(*b));
            }
        }
        best
    }

    pub fn max_vertex_distance(&self, from: Point2) -> f64 {
        self.vertices
            .iter()
            .map(|v| from.distance(*v))
            .fold(0.0, f64::max)
    }

    /// Bounding box as `(lower_left, upper_right)`; `None` when empty.
    pub fn bounding_box(&self) -> Option<(Point2, Point2)> {
        let first = self.vertices.first()?;
        let mut lo = *first;
        let mut hi = *first;
        for v in &self.vertices {
            lo.x = lo.x.min(v.x);
            lo.y = lo.y.min(v.y);
            hi.x = hi.x.max(v.x);
            hi.y = hi.y.max(v.y);
        }
        Some((lo, hi))
    }

    /// Closed containment with a small normalized slack.
    pub fn contains(&self, q: Point2) -> bool {
        self.offset_from_boundary(q)
            .map(|d| d >= -CONTAINS_TOLERANCE)
            .unwrap_or(false)
    }

    /// True when `q` is inside by more than the boundary slack.
    pub fn contains_strict(&self, q: Point2) -> bool {
        self.offset_from_boundary(q)
            .map(|d| d > CONTAINS_TOLERANCE)
            .unwrap_or(false)
    }

    /// Minimum normalized signed distance from `q` to the edge lines
    /// (positive inside). `None` for the empty polygon.
    pub fn offset_from_boundary(&self, q: Point2) -> Option<f64> {
        if self.is_empty() {
            return None;
        }
        let mut min_off = f64::INFINITY;
        for (a, b) in self.edges() {
            let edge = b - a;
            let len = edge.norm();
            if len == 0.0 {
                continue;
            }
            min_off = min_off.min(edge.cross(q - a) / len);
        }
        Some(min_off)
    }

    /// Nearest point of the polygon to `q` (`q` itself when inside).
    pub fn project(&self, q: Point2) -> Point2 {
        if self.contains(q) {
            return q;
        }
        let mut best = self.vertices[0];
        let mut best_d = f64::INFINITY;
        for (a, b) in self.edges() {
            let p = closest_point_on_segment(a, b, q);
            let d = p.distance_sq(q);
            if d < best_d {
                best_d = d;
                best = p;
            }
        }
        best
    }

    /// Clips to the left half-plane of `line`. Returns the empty polygon when
    /// nothing remains.
    pub fn clip_halfplane(&self, line: &DirectedLine) -> ConvexPolygon {
        if self.is_empty() {
            return ConvexPolygon::empty();
        }
        let n = self.vertices.len();
        let offsets: Vec<f64> = self
            .vertices
            .iter()
            .map(|v| line.signed_offset(*v))
            .collect();
        let mut out = Vec::with_capacity(n + 1);
        for i in 0..n {
            let j = (i + 1) % n;
            let (a, b) = (self.vertices[i], self.vertices[j]);
            let (oa, ob) = (offsets[i], offsets[j]);
            if oa >= 0.0 {
                out.push(a);
            }
            if (oa > 0.0 && ob < 0.0) || (oa < 0.0 && ob > 0.0) {
                let t = oa / (oa - ob);
                out.push(a + (b - a) * t);
            }
        }
        finish_clip(out)
    }

    /// Convex intersection; empty when disjoint.
    pub fn intersect(&self, other: &ConvexPolygon) -> ConvexPolygon {
        if self.is_empty() || other.is_empty() {
            return ConvexPolygon::empty();
        }
        let mut result = self.clone();
        for (a, b) in other.edges() {
            result = result.clip_halfplane(&DirectedLine::through(a, b - a));
            if result.is_empty() {
                break;
            }
        }
        result
    }
}

/// Regular polygon inscribed in the circle of `radius` around `center`.
/// Requires at least 8 segments; its area is
/// `(segments / 2) * sin(2*pi / segments) * radius^2`.
pub fn disk_polygon(
    center: Point2,
    radius: f64,
    segments: usize,
) -> Result<ConvexPolygon, GeometryError> {
    if segments < 8 {
        return Err(GeometryError::InvalidSegments(segments));
    }
    if !(radius > 0.0) {
        return Err(GeometryError::InvalidPolygon(format!(
            "disk radius must be positive, got {radius}"
        )));
    }
    let vertices = (0..segments)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * k as f64 / segments as f64;
            Point2::new(
                center.x + radius * angle.cos(),
                center.y + radius * angle.sin(),
            )
        })
        .collect();
    ConvexPolygon::new(vertices)
}

fn merge_close_vertices(vertices: Vec<Point2>) -> Vec<Point2> {
    let mut merged: Vec<Point2> = Vec::with_capacity(vertices.len());
    for v in vertices {
        if merged
            .last()
            .map(|last| last.distance(v) <= MERGE_TOLERANCE)
            .unwrap_or(false)
        {
            continue;
        }
        merged.push(v);
    }
    while merged.len() > 1
        && merged[0].distance(*merged.last().unwrap()) <= MERGE_TOLERANCE
    {
        merged.pop();
    }
    merged
}

fn finish_clip(vertices: Vec<Point2>) -> ConvexPolygon {
    let merged = merge_close_vertices(vertices);
    if merged.len() < 3 || signed_area(&merged) <= MIN_AREA {
        return ConvexPolygon::empty();
    }
    ConvexPolygon { vertices: merged }
}

fn signed_area(vertices: &[Point2]) -> f64 {
    let n = vertices.len();
    let mut sum = 0.0;
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        sum += a.x * b.y - b.x * a.y;
    }
    0.5 * sum
}

fn closest_point_on_segment(a: Point2, b: Point2, q: Point2) -> Point2 {
    let ab = b - a;
    let len_sq = ab.norm_sq();
    if len_sq == 0.0 {
        return a;
    }
    let t = (ab.dot(q - a) / len_sq).clamp(0.0, 1.0);
    a + ab * t
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn unit_square() -> ConvexPolygon {
        ConvexPolygon::rectangle(0.0, 1.0, 0.0, 1.0)
    }

    #[test]
    fn clip_axis_aligned_cut() {
        // Keep x <= 0.5: left of the upward line through (0.5, 0).
        let line = DirectedLine::through(Point2::new(0.5, 0.0), Vec2::new(0.0, 1.0));
        let clipped = unit_square().clip_halfplane(&line);
        assert_relative_eq!(clipped.area(), 0.5, epsilon = 1e-12);
        let (lo, hi) = clipped.bounding_box().unwrap();
        assert_relative_eq!(lo.x, 0.0, epsilon = 1e-12);
        assert_relative_eq!(hi.x, 0.5, epsilon = 1e-12);
        assert_relative_eq!(hi.y, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn clip_identity_when_kept_side_covers() {
        let square = unit_square();
        let line = DirectedLine::through(Point2::new(5.0, 0.0), Vec2::new(0.0, 1.0));
        let clipped = square.clip_halfplane(&line);
        assert_eq!(clipped, square);
    }

    #[test]
    fn clip_annihilation() {
        let line = DirectedLine::through(Point2::new(-1.0, 0.0), Vec2::new(0.0, 1.0));
        let clipped = unit_square().clip_halfplane(&line);
        assert!(clipped.is_empty());
        assert_eq!(clipped.area(), 0.0);
    }

    #[test]
    fn clip_halves_sum_to_whole() {
        let poly = ConvexPolygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(4.0, 1.0),
            Point2::new(3.0, 4.0),
            Point2::new(-1.0, 2.0),
        ])
        .unwrap();
        let p = Point2::new(1.3, 1.7);
        let dir = Vec2::new(0.6, 1.1);
        let left = poly.clip_halfplane(&DirectedLine::through(p, dir));
        let right = poly.clip_halfplane(&DirectedLine::through(p, -dir));
        assert_relative_eq!(left.area() + right.area(), poly.area(), epsilon = 1e-9);
    }

    #[test]
    fn disk_area_32_segments() {
        let disk = disk_polygon(Point2::new(0.0, 0.0), 1.0, 32).unwrap();
        let expected = 16.0 * (std::f64::consts::PI / 16.0).sin();
        assert_relative_eq!(disk.area(), expected, epsilon = 1e-12);
        assert_relative_eq!(disk.area(), 3.1214, epsilon = 1e-4);
    }

    #[test]
    fn disk_area_increases_toward_pi() {
        let mut last = 0.0;
        for segments in [8, 16, 32, 64, 128, 256] {
            let area = disk_polygon(Point2::new(0.0, 0.0), 1.0, segments)
                .unwrap()
                .area();
            assert!(area > last);
            assert!(area < std::f64::consts::PI);
            last = area;
        }
        assert_relative_eq!(last, std::f64::consts::PI, epsilon = 1e-3);
    }

    #[test]
    fn disk_vertices_on_circle() {
        let center = Point2::new(2.0, 3.0);
        let disk = disk_polygon(center, 1.0, 32).unwrap();
        for v in disk.vertices() {
            assert_relative_eq!(center.distance(*v), 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn disk_rejects_few_segments() {
        assert_eq!(
            disk_polygon(Point2::new(0.0, 0.0), 1.0, 7),
            Err(GeometryError::InvalidSegments(7))
        );
    }

    #[test]
    fn intersect_axis_aligned_overlap() {
        let a = ConvexPolygon::rectangle(0.0, 2.0, 0.0, 1.0);
        let b = ConvexPolygon::rectangle(1.0, 3.0, 0.0, 1.0);
        let inter = a.intersect(&b);
        assert_relative_eq!(inter.area(), 1.0, epsilon = 1e-12);
        let (lo, hi) = inter.bounding_box().unwrap();
        assert_relative_eq!(lo.x, 1.0, epsilon = 1e-12);
        assert_relative_eq!(hi.x, 2.0, epsilon = 1e-12);
    }

    #[test]
    fn intersect_self_is_identity_area() {
        let poly = ConvexPolygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(3.0, 0.5),
            Point2::new(2.0, 3.0),
            Point2::new(-0.5, 1.5),
        ])
        .unwrap();
        let inter = poly.intersect(&poly);
        assert_relative_eq!(inter.area(), poly.area(), epsilon = 1e-9);
    }

    #[test]
    fn intersect_disjoint_is_empty() {
        let a = ConvexPolygon::rectangle(0.0, 1.0, 0.0, 1.0);
        let b = ConvexPolygon::rectangle(5.0, 6.0, 0.0, 1.0);
        assert!(a.intersect(&b).is_empty());
    }

    #[test]
    fn rejects_clockwise_vertices() {
        let result = ConvexPolygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(0.0, 1.0),
            Point2::new(1.0, 1.0),
            Point2::new(1.0, 0.0),
        ]);
        assert!(matches!(result, Err(GeometryError::InvalidPolygon(_))));
    }

    #[test]
    fn rejects_reflex_polygon() {
        let result = ConvexPolygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(2.0, 2.0),
            Point2::new(1.0, 0.5),
            Point2::new(0.0, 2.0),
        ]);
        assert!(matches!(result, Err(GeometryError::InvalidPolygon(_))));
    }

    #[test]
    fn merges_duplicate_vertices() {
        let poly = ConvexPolygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(0.0, 1e-12),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
        ])
        .unwrap();
        assert_eq!(poly.vertices().len(), 3);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn hull_of(points: &[(f64, f64)]) -> Option<ConvexPolygon> {
            let mut pts: Vec<Point2> =
                points.iter().map(|&(x, y)| Point2::new(x, y)).collect();
            pts.sort_by(|a, b| (a.x, a.y).partial_cmp(&(b.x, b.y)).unwrap());
            pts.dedup_by(|a, b| a.distance(*b) < 1e-9);
            if pts.len() < 3 {
                return None;
            }
            let cross = |o: Point2, a: Point2, b: Point2| (a - o).cross(b - o);
            let mut lower: Vec<Point2> = Vec::new();
            for &p in &pts {
                while lower.len() >= 2
                    && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0
                {
                    lower.pop();
                }
                lower.push(p);
            }
            let mut upper: Vec<Point2> = Vec::new();
            for &p in pts.iter().rev() {
                while upper.len() >= 2
                    && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0
                {
                    upper.pop();
                }
                upper.push(p);
            }
            lower.pop();
            upper.pop();
            lower.extend(upper);
            ConvexPolygon::new(lower).ok()
        }

        proptest! {
            // Any line splits a polygon into halves whose areas sum back.
            #[test]
            fn clip_area_additivity(
                points in prop::collection::vec((-10.0..10.0f64, -10.0..10.0f64), 4..14),
                px in -12.0..12.0f64,
                py in -12.0..12.0f64,
                angle in 0.0..std::f64::consts::TAU,
            ) {
                let Some(poly) = hull_of(&points) else {
                    return Ok(());
                };
                let line = DirectedLine::through(
                    Point2::new(px, py),
                    Vec2::new(angle.cos(), angle.sin()),
                );
                let flipped = DirectedLine::through(
                    Point2::new(px, py),
                    Vec2::new(-angle.cos(), -angle.sin()),
                );
                let kept = poly.clip_halfplane(&line).area();
                let dropped = poly.clip_halfplane(&flipped).area();
                prop_assert!((kept + dropped - poly.area()).abs() <= 1e-9);
            }

            // Self-intersection preserves area.
            #[test]
            fn self_intersection_area(
                points in prop::collection::vec((-10.0..10.0f64, -10.0..10.0f64), 4..14),
            ) {
                let Some(poly) = hull_of(&points) else {
                    return Ok(());
                };
                prop_assert!((poly.intersect(&poly).area() - poly.area()).abs() <= 1e-9);
            }
        }
    }

    #[test]
    fn containment_and_projection() {
        let square = unit_square();
        assert!(square.contains(Point2::new(0.5, 0.5)));
        assert!(square.contains(Point2::new(0.0, 0.5))); // boundary is closed
        assert!(!square.contains_strict(Point2::new(0.0, 0.5)));
        assert!(!square.contains(Point2::new(1.2, 0.5)));
        let projected = square.project(Point2::new(2.0, 0.5));
        assert_relative_eq!(projected.x, 1.0, epsilon = 1e-12);
        assert_relative_eq!(projected.y, 0.5, epsilon = 1e-12);
        assert_eq!(square.project(Point2::new(0.3, 0.4)), Point2::new(0.3, 0.4));
    }
}
