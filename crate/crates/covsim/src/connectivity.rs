//! Communication-network connectivity: the minimum-distance spanning tree of
//! the r-disk graph, recomputed every step, and the per-agent motion
//! constraints that keep each preserved link intact.
//!
//! Two agents joined by a tree link are both confined to the circle centered
//! at their current midpoint with radius r/2; wherever both end up inside that
//! circle, their distance stays within r.

use crate::geometry::Point2;
use thiserror::Error;

/// Relative shave applied to constraint radii so that post-move link lengths
/// stay strictly within r under floating-point rounding.
const RADIUS_SHAVE: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConnectivityError {
    #[error("communication graph is disconnected: reached {reachable:?}, unreached {unreachable:?}")]
    DisconnectedGraph {
        reachable: Vec<usize>,
        unreachable: Vec<usize>,
    },
}

/// An undirected tree link between agents `a < b` with Euclidean weight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TreeEdge {
    pub a: usize,
    pub b: usize,
    pub weight: f64,
}

/// Spanning tree over the agent set: exactly `node_count - 1` edges.
#[derive(Debug, Clone, PartialEq)]
pub struct SpanningTree {
    pub node_count: usize,
    pub edges: Vec<TreeEdge>,
}

impl SpanningTree {
    /// Total weight, summed in canonical (a, b) order so that equal edge sets
    /// produce bit-identical totals.
    pub fn total_weight(&self) -> f64 {
        let mut edges = self.edges.clone();
        edges.sort_by(|x, y| (x.a, x.b).cmp(&(y.a, y.b)));
        edges.iter().map(|e| e.weight).sum()
    }

    pub fn max_edge_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.weight).fold(0.0, f64::max)
    }
}

/// Grows a spanning tree from node 0: each round adds the shortest admissible
/// edge (length within `comm_radius`) from the tree to a non-tree node, ties
/// broken by the smallest (source, candidate) index pair.
pub fn compute_mst(
    positions: &[Point2],
    comm_radius: f64,
) -> Result<SpanningTree, ConnectivityError> {
    let n = positions.len();
    let mut in_tree = vec![false; n];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    if n > 0 {
        in_tree[0] = true;
    }
    while edges.len() + 1 < n {
        let mut best: Option<(f64, usize, usize)> = None;
        for source in 0..n {
            if !in_tree[source] {
                continue;
            }
            for candidate in 0..n {
                if in_tree[candidate] {
                    continue;
                }
                let weight = positions[source].distance(positions[candidate]);
                if weight > comm_radius {
                    continue;
                }
                // Strict improvement keeps the first (source, candidate) in
                // ascending scan order on ties.
                if best.map(|(w, _, _)| weight < w).unwrap_or(true) {
                    best = Some((weight, source, candidate));
                }
            }
        }
        match best {
            Some((weight, source, candidate)) => {
                in_tree[candidate] = true;
                edges.push(TreeEdge {
                    a: source.min(candidate),
                    b: source.max(candidate),
                    weight,
                });
            }
            None => {
                let reachable: Vec<usize> =
                    (0..n).filter(|i| in_tree[*i]).collect();
                let unreachable: Vec<usize> =
                    (0..n).filter(|i| !in_tree[*i]).collect();
                return Err(ConnectivityError::DisconnectedGraph {
                    reachable,
                    unreachable,
                });
            }
        }
    }
    Ok(SpanningTree {
        node_count: n,
        edges,
    })
}

/// A disk the agent's next position must stay inside.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MotionConstraint {
    pub center: Point2,
    pub radius: f64,
}

/// One constraint per incident tree link: both endpoints of link (i, j) are
/// held inside the circle centered at their midpoint with radius r/2.
pub fn motion_constraints(
    tree: &SpanningTree,
    positions: &[Point2],
    comm_radius: f64,
) -> Vec<Vec<MotionConstraint>> {
    let mut constraints = vec![Vec::new(); positions.len()];
    for edge in &tree.edges {
        let constraint = MotionConstraint {
            center: positions[edge.a].midpoint(positions[edge.b]),
            radius: 0.5 * comm_radius,
        };
        constraints[edge.a].push(constraint);
        constraints[edge.b].push(constraint);
    }
    constraints
}

/// Moves from `current` toward `goal` as far as the constraints allow:
/// returns `current + k * (goal - current)` with the largest `k` in [0, 1]
/// keeping the result inside every constraint circle, found by solving each
/// circle/segment quadratic exactly.
pub fn limit_goal(current: Point2, goal: Point2, constraints: &[MotionConstraint]) -> Point2 {
    let d = goal - current;
    let a = d.norm_sq();
    if a == 0.0 {
        return goal;
    }
    let mut k = 1.0f64;
    for c in constraints {
        let e = c.center - current;
        let radius = c.radius * (1.0 - RADIUS_SHAVE);
        let cc = e.norm_sq() - radius * radius;
        let b = d.dot(e);
        let disc = b * b - a * cc;
        if disc <= 0.0 {
            // Tangent or no admissible motion along this direction.
            k = 0.0;
            break;
        }
        k = k.min((b + disc.sqrt()) / a);
    }
    let k = k.clamp(0.0, 1.0);
    if k == 1.0 {
        goal
    } else {
        current + d * k
    }
}

/// Connected components of the r-disk communication graph, each sorted, in
/// order of their smallest member.
pub fn communication_components(positions: &[Point2], comm_radius: f64) -> Vec<Vec<usize>> {
    let n = positions.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    for i in 0..n {
        for j in i + 1..n {
            if positions[i].distance(positions[j]) <= comm_radius {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[rj.max(ri)] = rj.min(ri);
                }
            }
        }
    }
    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut index_of_root = std::collections::BTreeMap::new();
    for i in 0..n {
        let root = find(&mut parent, i);
        let slot = *index_of_root.entry(root).or_insert_with(|| {
            components.push(Vec::new());
            components.len() - 1
        });
        components[slot].push(i);
    }
    components
}

pub fn is_connected(positions: &[Point2], comm_radius: f64) -> bool {
    positions.len() <= 1 || communication_components(positions, comm_radius).len() == 1
}
