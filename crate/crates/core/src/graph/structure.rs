use serde::Serialize;

use super::{is_isomorphic, Family, Graph};
use crate::error::{Error, Result};

/// Outcome of the "min degree above n/2 forces diameter at most 2" check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DiameterCheck {
    /// `δ(G) > n/2`.
    pub applicable: bool,
    /// `diam(G) <= 2`; false for disconnected graphs.
    pub holds: bool,
}

fn min_degree_above_half(g: &Graph) -> bool {
    2 * g.min_degree() > g.order()
}

pub fn check_dense_diameter(g: &Graph) -> DiameterCheck {
    DiameterCheck {
        applicable: min_degree_above_half(g),
        holds: g.diameter().is_some_and(|d| d <= 2),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DenseClassification {
    pub triangle_free: bool,
    pub bipartite: bool,
    /// Isomorphic to `K_{n/2,n/2}`.
    pub is_krr: bool,
}

/// Classifies a graph with `δ(G) > n/2`.
///
/// Under that hypothesis triangle-freeness and bipartiteness coincide and
/// the only bipartite case is the balanced complete bipartite graph; the
/// three flags are computed independently so callers can check that.
pub fn classify_dense_graph(g: &Graph) -> Result<DenseClassification> {
    if !min_degree_above_half(g) {
        return Err(Error::PreconditionViolated(format!(
            "min degree {} is not above n/2 = {}/2",
            g.min_degree(),
            g.order()
        )));
    }
    let n = g.order();
    let is_krr = n.is_multiple_of(2) && {
        let r = n / 2;
        is_isomorphic(g, &Family::CompleteBipartite(r, r).build()?)?
    };
    Ok(DenseClassification {
        triangle_free: !g.has_triangle(),
        bipartite: g.is_bipartite().is_some(),
        is_krr,
    })
}
