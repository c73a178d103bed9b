//! Matching decompositions of complete graphs.
//!
//! For odd `x` the edges of `K_x` split into `x` near-perfect matchings
//! `M_{v_1}, ..., M_{v_x}`, where `M_{v_i}` misses exactly `v_i` and its
//! `k`-th edge joins `v_{i+k}` and `v_{i-k}` (indices mod `x`, with 0 read
//! as `x`). For `i = x` this is `v_1 v_{x-1}, v_2 v_{x-2}, ...`. Even `K_p`
//! is handled by the circle method on top of that.

use crate::error::{invalid, Result};
use crate::graph::{Edge, VertexId};

/// The near-perfect matching that misses `center`, with its edges in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedMatching {
    center: VertexId,
    edges: Vec<Edge>,
}

impl OrderedMatching {
    pub fn center(&self) -> VertexId {
        self.center
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Position (1-based) of the edge containing `w`, if any.
    pub fn edge_rank_of(&self, w: VertexId) -> Option<usize> {
        self.edges.iter().position(|e| e.touches(w)).map(|k| k + 1)
    }
}

/// Reduces `i` modulo `x` into `1..=x`.
pub(crate) fn wrap(i: i64, x: usize) -> usize {
    let r = i.rem_euclid(x as i64) as usize;
    if r == 0 {
        x
    } else {
        r
    }
}

/// The matching `M_{v_center}` of odd `K_x`.
pub(crate) fn near_matching(x: usize, center: usize) -> OrderedMatching {
    let edges = (1..=(x - 1) / 2)
        .map(|k| {
            let a = wrap(center as i64 + k as i64, x);
            let b = wrap(center as i64 - k as i64, x);
            Edge::from_indices(a, b)
        })
        .collect();
    OrderedMatching {
        center: VertexId::raw(center),
        edges,
    }
}

/// `M_{v_1}, ..., M_{v_x}` for odd `x >= 3`.
pub fn near_one_factorization(x: usize) -> Result<Vec<OrderedMatching>> {
    if x < 3 || x.is_multiple_of(2) {
        return Err(invalid(format!(
            "near-1-factorization needs odd order >= 3, got {x}"
        )));
    }
    Ok((1..=x).map(|i| near_matching(x, i)).collect())
}

/// `p - 1` perfect matchings partitioning the edges of `K_p`, `p` even.
///
/// Matching `i` is `M_{v_i}` of `K_{p-1}` plus the edge `{v_i, v_p}`.
pub fn one_factorization(p: usize) -> Result<Vec<Vec<Edge>>> {
    if p < 2 || p % 2 == 1 {
        return Err(invalid(format!(
            "1-factorization needs even order >= 2, got {p}"
        )));
    }
    if p == 2 {
        return Ok(vec![vec![Edge::from_indices(1, 2)]]);
    }
    let near = near_one_factorization(p - 1)?;
    Ok(near
        .into_iter()
        .map(|m| {
            let mut edges = m.edges;
            edges.push(Edge::from_indices(m.center.index(), p));
            edges
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::graph::edge_count;

    fn pairs(m: &OrderedMatching) -> Vec<(usize, usize)> {
        m.edges()
            .iter()
            .map(|e| (e.u().index(), e.v().index()))
            .collect()
    }

    #[test]
    fn k3_matchings() {
        let ms = near_one_factorization(3).unwrap();
        assert_eq!(pairs(&ms[2]), vec![(1, 2)]);
        assert_eq!(pairs(&ms[0]), vec![(2, 3)]);
        assert_eq!(pairs(&ms[1]), vec![(1, 3)]);
    }

    #[test]
    fn k5_matchings_in_order() {
        let ms = near_one_factorization(5).unwrap();
        assert_eq!(pairs(&ms[4]), vec![(1, 4), (2, 3)]);
        assert_eq!(pairs(&ms[1]), vec![(1, 3), (4, 5)]);
        let all: HashSet<_> = ms.iter().flat_map(pairs).collect();
        assert_eq!(all.len(), 10);
    }

    #[test]
    fn rejects_bad_orders() {
        assert!(near_one_factorization(4).is_err());
        assert!(near_one_factorization(1).is_err());
        assert!(one_factorization(5).is_err());
        assert!(one_factorization(0).is_err());
    }

    #[test]
    fn small_one_factorizations() {
        assert_eq!(
            one_factorization(2).unwrap(),
            vec![vec![Edge::from_indices(1, 2)]]
        );
        let f4 = one_factorization(4).unwrap();
        assert_eq!(f4.len(), 3);
        let all: HashSet<_> = f4.iter().flatten().copied().collect();
        assert_eq!(all.len(), 6);
    }

    #[test]
    fn partition_property_odd() {
        for x in (3..=51).step_by(2) {
            let ms = near_one_factorization(x).unwrap();
            let mut seen = HashSet::new();
            for (i, m) in ms.iter().enumerate() {
                assert_eq!(m.center().index(), i + 1);
                assert_eq!(m.edges().len(), (x - 1) / 2);
                let mut touched = HashSet::new();
                for e in m.edges() {
                    assert!(!e.touches(m.center()));
                    assert!(touched.insert(e.u()) && touched.insert(e.v()));
                    assert!(seen.insert(*e), "edge {e} repeated in K_{x}");
                }
            }
            assert_eq!(seen.len(), edge_count(x));
        }
    }

    #[test]
    fn center_sum_property() {
        for x in (3..=51).step_by(2) {
            let ms = near_one_factorization(x).unwrap();
            for m in &ms {
                let i = m.center().index();
                for e in m.edges() {
                    assert_eq!((e.u().index() + e.v().index()) % x, (2 * i) % x);
                }
            }
            // conversely each edge lands in the matching its endpoint sum selects
            for a in 1..=x {
                for b in (a + 1)..=x {
                    let owners: Vec<_> = ms
                        .iter()
                        .filter(|m| m.edges().contains(&Edge::from_indices(a, b)))
                        .map(|m| m.center().index())
                        .collect();
                    assert_eq!(owners.len(), 1);
                    assert_eq!((a + b) % x, (2 * owners[0]) % x);
                }
            }
        }
    }

    #[test]
    fn one_factorization_validity() {
        for p in (2..=50).step_by(2) {
            let f = one_factorization(p).unwrap();
            assert_eq!(f.len(), p - 1);
            let mut seen = HashSet::new();
            for m in &f {
                assert_eq!(m.len(), p / 2);
                let covered: HashSet<_> = m.iter().flat_map(|e| [e.u(), e.v()]).collect();
                assert_eq!(covered.len(), p);
                for e in m {
                    assert!(seen.insert(*e));
                }
            }
            assert_eq!(seen.len(), edge_count(p));
        }
    }
}
