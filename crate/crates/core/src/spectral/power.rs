use alloc::vec::Vec;

use crate::graph::{Graph, VertexSet};

pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const MAX_ITERATIONS: usize = 1_000_000;

/// Spectral radius of `Q(G)` with its Perron vector.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralResult {
    pub q: f64,
    /// Unit, non-negative; supported on the component that attains `q`.
    pub vector: Vec<f64>,
    /// `max_v |(Qx)_v - q x_v|`.
    pub residual: f64,
    /// Iterations summed over all components.
    pub iterations: usize,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SpectralError {
    #[error("the empty graph has no spectrum")]
    EmptyGraph,
    #[error("power iteration stopped after {iterations} steps at residual {residual:e}")]
    NoConvergence { iterations: usize, residual: f64 },
}

/// `q(G)` by power iteration on `Q + I`, one connected component at a time.
pub fn q_index(g: &Graph, tol: f64) -> Result<SpectralResult, SpectralError> {
    q_index_capped(g, tol, MAX_ITERATIONS)
}

/// [`q_index`] at the default tolerance, returning just the value.
pub fn q_value(g: &Graph) -> Result<f64, SpectralError> {
    q_index(g, DEFAULT_TOLERANCE).map(|r| r.q)
}

pub fn q_index_capped(g: &Graph, tol: f64, cap: usize) -> Result<SpectralResult, SpectralError> {
    let n = g.n();
    if n == 0 {
        return Err(SpectralError::EmptyGraph);
    }
    let mut best: Option<(f64, Vec<f64>, f64)> = None;
    let mut iterations = 0;
    for comp in g.components() {
        let (q, x, residual, steps) = component_index(g, &comp, tol, cap)?;
        iterations += steps;
        if best.as_ref().is_none_or(|(bq, _, _)| q > *bq) {
            let mut vector = alloc::vec![0.0; n];
            for (i, v) in comp.iter().enumerate() {
                vector[v] = x[i];
            }
            best = Some((q, vector, residual));
        }
    }
    let (q, vector, residual) = best.expect("at least one component");
    Ok(SpectralResult {
        q,
        vector,
        residual,
        iterations,
    })
}

fn component_index(
    g: &Graph,
    comp: &VertexSet,
    tol: f64,
    cap: usize,
) -> Result<(f64, Vec<f64>, f64, usize), SpectralError> {
    let verts: Vec<usize> = comp.iter().collect();
    let m = verts.len();
    if m == 1 {
        return Ok((0.0, alloc::vec![1.0], 0.0, 0));
    }
    let mut local = alloc::vec![usize::MAX; g.n()];
    for (i, &v) in verts.iter().enumerate() {
        local[v] = i;
    }
    let adj: Vec<Vec<usize>> = verts
        .iter()
        .map(|&v| g.neighbors(v).iter().map(|u| local[u]).collect())
        .collect();
    let deg: Vec<f64> = adj.iter().map(|a| a.len() as f64).collect();
    let apply = |x: &[f64], out: &mut [f64]| {
        for i in 0..m {
            out[i] = deg[i] * x[i] + adj[i].iter().map(|&j| x[j]).sum::<f64>();
        }
    };

    let mut x = alloc::vec![1.0 / libm::sqrt(m as f64); m];
    let mut qx = alloc::vec![0.0; m];
    let mut residual = f64::INFINITY;
    for step in 1..=cap {
        apply(&x, &mut qx);
        let q: f64 = x.iter().zip(&qx).map(|(a, b)| a * b).sum();
        residual = x
            .iter()
            .zip(&qx)
            .map(|(a, b)| (b - q * a).abs())
            .fold(0.0, f64::max);
        if residual <= tol {
            return Ok((q, x, residual, step));
        }
        // x <- (Q + I) x, normalised.
        let norm = libm::sqrt(
            x.iter()
                .zip(qx.iter_mut())
                .map(|(a, b)| {
                    *b += a;
                    *b * *b
                })
                .sum::<f64>(),
        );
        for (a, b) in x.iter_mut().zip(&qx) {
            *a = b / norm;
        }
    }
    Err(SpectralError::NoConvergence {
        iterations: cap,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn q(g: &Graph) -> f64 {
        q_value(g).unwrap()
    }

    #[test]
    fn small_values() {
        assert!((q(&Graph::complete(2).unwrap()) - 2.0).abs() < 1e-12);
        for n in 3..12 {
            assert!((q(&Graph::cycle(n).unwrap()) - 4.0).abs() < 1e-11, "C_{n}");
        }
        assert_eq!(q(&Graph::empty(3).unwrap()), 0.0);
        assert_eq!(
            q_index(&Graph::empty(0).unwrap(), 1e-12),
            Err(SpectralError::EmptyGraph)
        );
    }

    #[test]
    fn result_invariants() {
        let g = Family::K1JoinK4UnionK1.graph().unwrap();
        let r = q_index(&g, DEFAULT_TOLERANCE).unwrap();
        assert!((r.q - 8.2749).abs() < 5e-4);
        assert!(r.residual <= DEFAULT_TOLERANCE);
        assert!(r.vector.iter().all(|&v| v > 0.0));
        let norm: f64 = r.vector.iter().map(|v| v * v).sum();
        assert!((norm - 1.0).abs() < 1e-12);
    }

    #[test]
    fn disconnected_graphs_take_the_largest_component() {
        let g = Graph::complete(4)
            .unwrap()
            .disjoint_union(&Graph::cycle(5).unwrap())
            .unwrap();
        let r = q_index(&g, DEFAULT_TOLERANCE).unwrap();
        assert!((r.q - 6.0).abs() < 1e-11);
        assert!(r.vector[..4].iter().all(|&v| v > 0.0));
        assert!(r.vector[4..].iter().all(|&v| v == 0.0));
    }

    #[test]
    fn iteration_cap_is_reported() {
        let g = Family::G { i: 9, n: 10 }.graph().unwrap();
        assert!(matches!(
            q_index_capped(&g, 1e-12, 3),
            Err(SpectralError::NoConvergence { iterations: 3, .. })
        ));
    }
}
