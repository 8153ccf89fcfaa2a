//! The Tutte polynomial by deletion-contraction and the rank-generating
//! polynomial by subset expansion. The two are computed independently so
//! each can check the other.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{MultiGraph, UnionFind};
use crate::poly::BivariatePolynomial;
use crate::Budget;

/// Edge list with vertices renamed in order of first appearance and each
/// edge stored as a sorted pair; equal keys mean isomorphic-by-relabeling
/// graphs, hence equal Tutte polynomials.
fn canonical(edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut names: HashMap<usize, usize> = HashMap::new();
    let mut out: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(a, b)| {
            let n = names.len();
            let a = *names.entry(a).or_insert(n);
            let n = names.len();
            let b = *names.entry(b).or_insert(n);
            (a.min(b), a.max(b))
        })
        .collect();
    out.sort_unstable();
    out
}

fn connects_without_first(edges: &[(usize, usize)]) -> bool {
    let (a, b) = edges[0];
    let n = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap() + 1;
    let mut uf = UnionFind::new(n);
    for &(u, v) in &edges[1..] {
        uf.union(u, v);
    }
    uf.find(a) == uf.find(b)
}

fn tutte_rec(
    edges: Vec<(usize, usize)>,
    memo: &mut HashMap<Vec<(usize, usize)>, BivariatePolynomial>,
) -> BivariatePolynomial {
    if edges.is_empty() {
        return BivariatePolynomial::one();
    }
    let key = canonical(&edges);
    if let Some(t) = memo.get(&key) {
        return t.clone();
    }
    let (a, b) = edges[0];
    let deleted: Vec<_> = edges[1..].to_vec();
    let contract = |es: &[(usize, usize)]| -> Vec<(usize, usize)> {
        let r = |v: usize| if v == b { a } else { v };
        es.iter().map(|&(u, v)| (r(u), r(v))).collect()
    };
    let t = if a == b {
        &BivariatePolynomial::y() * &tutte_rec(deleted, memo)
    } else if !connects_without_first(&edges) {
        &BivariatePolynomial::x() * &tutte_rec(contract(&deleted), memo)
    } else {
        &tutte_rec(deleted.clone(), memo) + &tutte_rec(contract(&deleted), memo)
    };
    memo.insert(key, t.clone());
    t
}

/// `T_G(x, y)`: `1` on edgeless graphs, `y·T(G−e)` for a loop, `x·T(G/e)`
/// for a bridge, and `T(G−e) + T(G/e)` otherwise.
pub fn tutte(g: &MultiGraph) -> BivariatePolynomial {
    let edges = g.edges().iter().map(|e| (e.tail, e.head)).collect();
    tutte_rec(edges, &mut HashMap::new())
}

/// `R_G(x, y) = Σ_{X ⊆ E} x^{r(E) − r(X)} y^{n(X)}`.
pub fn rank_generating(g: &MultiGraph, budget: &Budget) -> Result<BivariatePolynomial> {
    let m = g.edge_count();
    if m > budget.max_subset_edges {
        return Err(Error::BudgetExceeded(format!(
            "{m} edges exceeds the subset expansion limit of {}",
            budget.max_subset_edges
        )));
    }
    let n = g.vertex_count();
    let rank_e = g.stats().rank;
    let mut counts: HashMap<(u32, u32), i64> = HashMap::new();
    for mask in 0u64..1 << m {
        let mut uf = UnionFind::new(n);
        let mut rank = 0;
        for (k, e) in g.edges().iter().enumerate() {
            if mask >> k & 1 == 1 && uf.union(e.tail, e.head) {
                rank += 1;
            }
        }
        let size = mask.count_ones() as usize;
        *counts.entry(((rank_e - rank) as u32, (size - rank) as u32)).or_insert(0) += 1;
    }
    Ok(BivariatePolynomial::from_terms(counts.into_iter().map(|((i, j), c)| (i, j, c))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tutte_examples() {
        let p8 = MultiGraph::new(3, &[(0, 2), (0, 1), (1, 2), (0, 1), (1, 2)]).unwrap();
        assert_eq!(tutte(&p8).to_string(), "y^3+x^2+2*x*y+2*y^2+x+y");
        let c3 = MultiGraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(tutte(&c3).to_string(), "x^2+x+y");
        assert_eq!(tutte(&MultiGraph::new(4, &[]).unwrap()).to_string(), "1");
        assert_eq!(tutte(&MultiGraph::new(1, &[(0, 0)]).unwrap()).to_string(), "y");
        let k4: Vec<(usize, usize)> = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let t = tutte(&MultiGraph::new(4, &k4).unwrap());
        assert_eq!(t.to_string(), "x^3+y^3+3*x^2+4*x*y+3*y^2+2*x+2*y");
    }

    #[test]
    fn rank_generating_examples() {
        let b = Budget::default();
        let k2 = MultiGraph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(rank_generating(&k2, &b).unwrap().to_string(), "x+1");
        let l1 = MultiGraph::new(1, &[(0, 0)]).unwrap();
        assert_eq!(rank_generating(&l1, &b).unwrap().to_string(), "y+1");
        let p8 = MultiGraph::new(3, &[(0, 2), (0, 1), (1, 2), (0, 1), (1, 2)]).unwrap();
        let r = rank_generating(&p8, &b).unwrap();
        assert_eq!(r.evaluate_integer(1, 1).unwrap(), 32.into());
        assert_eq!(r.substitute(1, -1, 1, -1), tutte(&p8));
    }

    #[test]
    fn rank_generating_budget() {
        let g = MultiGraph::new(1, &[(0, 0); 5]).unwrap();
        let tight = Budget { max_subset_edges: 4, ..Budget::default() };
        assert!(matches!(rank_generating(&g, &tight), Err(Error::BudgetExceeded(_))));
    }
}
