//! Density (importance) fields weighting the plane.

use super::Point2;

/// Importance function over the plane: either a positive constant or a sum of
/// unit-variance Gaussian bumps, one per tracked target.
#[derive(Debug, Clone, PartialEq)]
pub enum DensityField {
    Uniform { value: f64 },
    GaussianMixture { centers: Vec<Point2> },
}

impl DensityField {
    /// Constant density; `value` must be positive.
    pub fn uniform(value: f64) -> Self {
        assert!(value > 0.0, "uniform density must be positive");
        DensityField::Uniform { value }
    }

    /// Sum of `exp(-|q - c|^2)` bumps over the given centers.
    pub fn gaussian_mixture(centers: Vec<Point2>) -> Self {
        assert!(!centers.is_empty(), "gaussian mixture needs at least one center");
        DensityField::GaussianMixture { centers }
    }

    pub fn evaluate(&self, q: Point2) -> f64 {
        match self {
            DensityField::Uniform { value } => *value,
            DensityField::GaussianMixture { centers } => centers
                .iter()
                .map(|c| (-q.distance_sq(*c)).exp())
                .sum(),
        }
    }

    pub fn is_uniform(&self) -> bool {
        matches!(self, DensityField::Uniform { .. })
    }
}
