//! Numeric bounds: planar edge counts under a girth constraint, the
//! girth-4 thickness lower bound, and arboricity values.
//!
//! Everything here is integer arithmetic.

use crate::error::BoundsError;
use crate::graph::{Girth, Graph, MultipartiteSpec};

/// Largest vertex count `nash_williams_exact` will enumerate.
pub const NASH_WILLIAMS_MAX_VERTICES: usize = 20;

#[inline]
pub fn ceil_div(a: usize, b: usize) -> usize {
    debug_assert!(b > 0);
    (a + b - 1) / b
}

/// Maximum edge count of a planar graph on `n` vertices whose girth is at
/// least `girth`.
///
/// For finite `g` and `n >= g` this is `floor(g (n - 2) / (g - 2))`. Below
/// that threshold, or for `Infinite`, the graph must be a forest and the
/// bound is `n - 1`.
pub fn planar_girth_edge_bound(n: usize, girth: Girth) -> Result<usize, BoundsError> {
    if n == 0 {
        return Err(BoundsError::NoVertices);
    }
    match girth {
        Girth::Finite(g) if g < 3 => Err(BoundsError::GirthTooSmall(g)),
        Girth::Finite(g) if n >= g => Ok(g * (n - 2) / (g - 2)),
        _ => Ok(n - 1),
    }
}

/// `ceil(e / (2(n-2)))` for `n >= 4`, `ceil(e / (n-1))` below that, and 0
/// for edgeless graphs.
pub fn theta4_lower_bound(g: &Graph) -> usize {
    let (n, e) = (g.vertex_count(), g.edge_count());
    if e == 0 {
        0
    } else if n >= 4 {
        ceil_div(e, 2 * (n - 2))
    } else {
        ceil_div(e, n - 1)
    }
}

/// Closed-form arboricity of `K_{n1,...,nm}`: `ceil(e / (n-1))`.
pub fn multipartite_arboricity(spec: &MultipartiteSpec) -> Result<usize, BoundsError> {
    let n = spec.vertex_count();
    if n < 2 {
        return Err(BoundsError::TooFewVertices);
    }
    Ok(ceil_div(spec.edge_count(), n - 1))
}

/// Maximum of `ceil(|E(H)| / (|V(H)| - 1))` over every induced subgraph `H`
/// with at least two vertices, by exhaustive enumeration.
///
/// Returns 0 for graphs with fewer than two vertices.
pub fn nash_williams_exact(g: &Graph) -> Result<usize, BoundsError> {
    let n = g.vertex_count();
    if n > NASH_WILLIAMS_MAX_VERTICES {
        return Err(BoundsError::TooLarge {
            n,
            cap: NASH_WILLIAMS_MAX_VERTICES,
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    // edges[mask] = edges of the subgraph induced by mask, built from
    // mask minus its lowest vertex
    let mut edges = vec![0u16; 1 << n];
    let mut best = 0;
    for mask in 1u32..(1 << n) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let e = edges[rest as usize] + (adj[low] & rest).count_ones() as u16;
        edges[mask as usize] = e;
        let k = mask.count_ones() as usize;
        if k >= 2 {
            best = best.max(ceil_div(e as usize, k - 1));
        }
    }
    Ok(best)
}
