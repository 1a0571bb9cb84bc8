//! Randomized property and oracle checks behind the `verify` CLI command:
//! spanning-tree weights against exhaustive enumeration, the two-radius cost
//! sandwich, and quadrature moments against the closed forms.
//!
//! Oracles here are deliberately independent of the implementation paths they
//! check: tree enumeration never calls the incremental tree builder, and the
//! moment cross-check compares two different integration routes.

use crate::connectivity::compute_mst;
use crate::geometry::{
    moments_numeric, moments_uniform, ConvexPolygon, DensityField, Point2,
};
use crate::metrics::verify_comm_bound;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Outcome of one randomized check.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub name: &'static str,
    pub trials: usize,
    pub failures: usize,
    pub detail: String,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Runs the full verification suite with fixed seeds.
pub fn run_all() -> Vec<CheckReport> {
    vec![
        mst_oracle_trials(200, 0xC0FFEE),
        comm_bound_trials(100, 0xBEEF),
        centroid_cross_check_trials(100, 0xFACade),
    ]
}

/// Minimum spanning-tree weight of the r-disk graph by exhaustive enumeration
/// of all (n-1)-edge subsets; `None` when the graph is disconnected.
pub fn mst_min_weight_exhaustive(positions: &[Point2], comm_radius: f64) -> Option<f64> {
    let n = positions.len();
    if n == 0 {
        return None;
    }
    if n == 1 {
        return Some(0.0);
    }
    // Admissible edges in canonical (a, b) order; subset sums follow the same
    // order, so equal edge sets sum bit-identically.
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let w = positions[a].distance(positions[b]);
            if w <= comm_radius {
                edges.push((a, b, w));
            }
        }
    }
    let need = n - 1;
    if edges.len() < need {
        return None;
    }
    let mut chosen = Vec::with_capacity(need);
    let mut best: Option<f64> = None;
    enumerate_subsets(&edges, 0, need, &mut chosen, &mut best, n);
    best
}

fn enumerate_subsets(
    edges: &[(usize, usize, f64)],
    start: usize,
    need: usize,
    chosen: &mut Vec<(usize, usize, f64)>,
    best: &mut Option<f64>,
    n: usize,
) {
    if need == 0 {
        if spans(chosen, n) {
            let weight = chosen.iter().map(|(_, _, w)| *w).sum::<f64>();
            if best.map(|b| weight < b).unwrap_or(true) {
                *best = Some(weight);
            }
        }
        return;
    }
    for i in start..=edges.len().saturating_sub(need) {
        chosen.push(edges[i]);
        enumerate_subsets(edges, i + 1, need - 1, chosen, best, n);
        chosen.pop();
    }
}

fn spans(edges: &[(usize, usize, f64)], n: usize) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    let mut merged = 0;
    for (a, b, _) in edges {
        let (ra, rb) = (find(&mut parent, *a), find(&mut parent, *b));
        if ra == rb {
            return false; // cycle: n-1 edges must all merge
        }
        parent[rb] = ra;
        merged += 1;
    }
    merged == n - 1
}

/// Random agent configurations with a communication radius tight enough that
/// some edges are inadmissible, comparing the incremental tree weight against
/// enumeration. Exact equality is required.
pub fn mst_oracle_trials(trials: usize, seed: u64) -> CheckReport {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut failures = 0;
    let mut detail = String::new();
    for trial in 0..trials {
        let n = rng.gen_range(3..=7);
        let positions: Vec<Point2> = (0..n)
            .map(|_| Point2::new(rng.gen_range(0.0..6.0), rng.gen_range(0.0..6.0)))
            .collect();
        // Smallest radius keeping the graph connected, stretched a little so
        // the admissibility filter still bites.
        let Some(bottleneck) = connectivity_bottleneck(&positions) else {
            continue;
        };
        let comm_radius = bottleneck * rng.gen_range(1.0..1.5) + 1e-9;
        let tree = match compute_mst(&positions, comm_radius) {
            Ok(tree) => tree,
            Err(e) => {
                failures += 1;
                detail = format!("trial {trial}: tree construction failed: {e}");
                continue;
            }
        };
        let oracle = mst_min_weight_exhaustive(&positions, comm_radius)
            .expect("graph connected by construction");
        if tree.total_weight() != oracle {
            failures += 1;
            detail = format!(
                "trial {trial}: tree weight {} != enumerated minimum {}",
                tree.total_weight(),
                oracle
            );
        }
    }
    CheckReport {
        name: "mst-enumeration",
        trials,
        failures,
        detail,
    }
}

/// Longest edge of the bottleneck spanning structure: the smallest radius at
/// which the disk graph is connected.
fn connectivity_bottleneck(positions: &[Point2]) -> Option<f64> {
    let n = positions.len();
    if n < 2 {
        return Some(0.0);
    }
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            edges.push((positions[a].distance(positions[b]), a, b));
        }
    }
    edges.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    let mut merged = 0;
    for (w, a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[rb] = ra;
            merged += 1;
            if merged == n - 1 {
                return Some(w);
            }
        }
    }
    None
}

/// Random configurations with `s_star = 2s`: the sandwich
/// `beta * H_s >= H_{s*} >= H_s > 0` must hold on every trial.
pub fn comm_bound_trials(trials: usize, seed: u64) -> CheckReport {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut failures = 0;
    let mut detail = String::new();
    for trial in 0..trials {
        let area = random_convex_polygon(&mut rng);
        let (lo, hi) = area.bounding_box().unwrap();
        let n = rng.gen_range(2..=8);
        let positions: Vec<Point2> = (0..n)
            .map(|_| loop {
                let q = Point2::new(rng.gen_range(lo.x..hi.x), rng.gen_range(lo.y..hi.y));
                if area.contains(q) {
                    break q;
                }
            })
            .collect();
        let density = if trial % 2 == 0 {
            DensityField::uniform(rng.gen_range(0.3..2.0))
        } else {
            DensityField::gaussian_mixture(vec![Point2::new(
                rng.gen_range(lo.x..hi.x),
                rng.gen_range(lo.y..hi.y),
            )])
        };
        let s = rng.gen_range(0.2..2.5);
        match verify_comm_bound(&positions, &density, &area, s, 2.0 * s, 128) {
            Ok(check) if check.holds => {}
            Ok(check) => {
                failures += 1;
                detail = format!("trial {trial}: sandwich violated: {check:?}");
            }
            Err(e) => {
                failures += 1;
                detail = format!("trial {trial}: {e}");
            }
        }
    }
    CheckReport {
        name: "cost-sandwich",
        trials,
        failures,
        detail,
    }
}

/// Random convex polygons: quadrature moments at resolution 256 must match
/// the closed-form mass within 1e-3 relative and the centroid within
/// 1e-3 of the diameter.
pub fn centroid_cross_check_trials(trials: usize, seed: u64) -> CheckReport {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut failures = 0;
    let mut detail = String::new();
    let density = DensityField::uniform(1.0);
    for trial in 0..trials {
        let poly = random_convex_polygon(&mut rng);
        let exact = moments_uniform(&poly, 1.0).expect("non-empty polygon");
        let numeric = moments_numeric(&poly, &density, 256).expect("positive mass");
        let mass_error = (numeric.mass - exact.mass).abs() / exact.mass;
        let centroid_error = numeric.centroid.distance(exact.centroid);
        if mass_error > 1e-3 || centroid_error > 1e-3 * poly.diameter() {
            failures += 1;
            detail = format!(
                "trial {trial}: mass error {mass_error}, centroid error {centroid_error}"
            );
        }
    }
    CheckReport {
        name: "centroid-cross-check",
        trials,
        failures,
        detail,
    }
}

/// Convex hull of a handful of random points, rejected until it is
/// reasonably fat (area at least 5% of diameter squared) so that relative
/// tolerances stay meaningful.
pub fn random_convex_polygon(rng: &mut impl Rng) -> ConvexPolygon {
    loop {
        let count = rng.gen_range(4..16);
        let cx = rng.gen_range(-5.0..5.0);
        let cy = rng.gen_range(-5.0..5.0);
        let w = rng.gen_range(2.0..8.0);
        let h = rng.gen_range(2.0..8.0);
        let points: Vec<Point2> = (0..count)
            .map(|_| {
                Point2::new(
                    cx + rng.gen_range(-0.5 * w..0.5 * w),
                    cy + rng.gen_range(-0.5 * h..0.5 * h),
                )
            })
            .collect();
        let Some(hull) = convex_hull(&points) else {
            continue;
        };
        let Ok(poly) = ConvexPolygon::new(hull) else {
            continue;
        };
        let d = poly.diameter();
        if poly.area() >= 0.05 * d * d {
            return poly;
        }
    }
}

/// Andrew's monotone chain; counter-clockwise, strict turns only.
fn convex_hull(points: &[Point2]) -> Option<Vec<Point2>> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| (a.x, a.y).partial_cmp(&(b.x, b.y)).unwrap());
    pts.dedup_by(|a, b| a.distance(*b) < 1e-12);
    if pts.len() < 3 {
        return None;
    }
    let cross = |o: Point2, a: Point2, b: Point2| (a - o).cross(b - o);
    let mut lower: Vec<Point2> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point2> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() >= 3 {
        Some(lower)
    } else {
        None
    }
}
