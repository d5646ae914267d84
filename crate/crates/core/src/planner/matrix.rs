use crate::error::{Error, Result};

/// Dense symmetric matrix of pairwise Euclidean distances (metres).
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<f64>,
}

impl DistanceMatrix {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.d[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.d[i * self.n..(i + 1) * self.n]
    }

    /// Mean off-diagonal entry; zero for fewer than two points.
    pub fn mean_distance(&self) -> f64 {
        if self.n < 2 {
            return 0.0;
        }
        let total: f64 = self.d.iter().sum();
        total / (self.n * (self.n - 1)) as f64
    }

    /// Largest violation of the metric axioms (symmetry, zero diagonal,
    /// non-negativity, triangle inequality). Zero for an exact metric.
    pub fn metric_violation(&self) -> f64 {
        let n = self.n;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            worst = worst.max(self.get(i, i).abs());
            for j in 0..n {
                worst = worst.max((self.get(i, j) - self.get(j, i)).abs());
                worst = worst.max(-self.get(i, j));
                for k in 0..n {
                    worst = worst.max(self.get(i, k) - self.get(i, j) - self.get(j, k));
                }
            }
        }
        worst
    }
}

/// Euclidean distance matrix over planar points `(x, y)` in metres.
pub fn distance_matrix(points: &[(f64, f64)]) -> Result<DistanceMatrix> {
    if points.is_empty() {
        return Err(Error::Input("distance matrix needs at least one point".into()));
    }
    if let Some(i) = points.iter().position(|(x, y)| !x.is_finite() || !y.is_finite()) {
        return Err(Error::Input(format!("point {i} has a non-finite coordinate")));
    }
    let n = points.len();
    let mut d = vec![0.0; n * n];
    for i in 0..n {
        for j in (i + 1)..n {
            let (xi, yi) = points[i];
            let (xj, yj) = points[j];
            let v = (xi - xj).hypot(yi - yj);
            d[i * n + j] = v;
            d[j * n + i] = v;
        }
    }
    Ok(DistanceMatrix { n, d })
}
