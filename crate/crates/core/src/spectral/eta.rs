use num_rational::Rational64;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("vertex {0} is isolated")]
pub struct IsolatedVertex(pub usize);

/// `η_G(v) = d(v) + (1/d(v)) Σ_{u ~ v} d(u)`.
pub fn eta(g: &Graph, v: usize) -> Result<Rational64, IsolatedVertex> {
    let d = g.degree(v) as i64;
    if d == 0 {
        return Err(IsolatedVertex(v));
    }
    let around: i64 = g.neighbors(v).iter().map(|u| g.degree(u) as i64).sum();
    Ok(Rational64::from_integer(d) + Rational64::new(around, d))
}

/// `max_v η_G(v)`, defined when `G` has no isolated vertex.
pub fn max_eta(g: &Graph) -> Result<Rational64, IsolatedVertex> {
    (0..g.n())
        .map(|v| eta(g, v))
        .try_fold(Rational64::from_integer(0), |m, e| e.map(|e| m.max(e)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn examples() {
        let k3 = Graph::complete(3).unwrap();
        assert!((0..3).all(|v| eta(&k3, v) == Ok(Rational64::from_integer(4))));
        let k13 = Family::Star { s: 3 }.graph().unwrap();
        assert_eq!(eta(&k13, 0), Ok(Rational64::from_integer(4)));
        assert_eq!(eta(&k13, 2), Ok(Rational64::from_integer(4)));
        assert_eq!(
            eta(&Graph::path(3).unwrap(), 1),
            Ok(Rational64::from_integer(3))
        );
        assert_eq!(eta(&Graph::empty(2).unwrap(), 1), Err(IsolatedVertex(1)));
        let p4 = Graph::path(4).unwrap();
        assert_eq!(eta(&p4, 0), Ok(Rational64::from_integer(3)));
        assert_eq!(eta(&p4, 1), Ok(Rational64::new(7, 2)));
        assert_eq!(max_eta(&p4), Ok(Rational64::new(7, 2)));
    }
}
