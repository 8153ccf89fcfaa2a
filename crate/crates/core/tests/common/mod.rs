//! Naive reference implementations that share no code with the library:
//! plain edge lists, potentials for tensions, vertex balance for flows and
//! full box sweeps.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use tfpoly::{EdgeSet, MultiGraph, Orientation};

#[derive(Debug, Clone)]
pub struct Naive {
    pub n: usize,
    pub pairs: Vec<(usize, usize)>,
}

impl Naive {
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Self {
        Naive { n, pairs: pairs.to_vec() }
    }

    pub fn graph(&self) -> MultiGraph {
        MultiGraph::new(self.n, &self.pairs).unwrap()
    }

    pub fn m(&self) -> usize {
        self.pairs.len()
    }

    pub fn orientation(&self, mask: u64) -> Orientation {
        Orientation::from_flips(&self.graph(), EdgeSet(mask)).unwrap()
    }

    pub fn arcs(&self, mask: u64) -> Vec<(usize, usize)> {
        self.pairs.iter().enumerate().map(|(i, &(u, v))| if mask >> i & 1 == 1 { (v, u) } else { (u, v) }).collect()
    }

    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            v = parent[v];
        }
        v
    }

    /// Rank of the edge subset `x` (bitmask).
    pub fn rank(&self, x: u64) -> usize {
        let mut parent: Vec<usize> = (0..self.n).collect();
        let mut r = 0;
        for (i, &(u, v)) in self.pairs.iter().enumerate() {
            if x >> i & 1 == 1 {
                let (a, b) = (Self::find(&mut parent, u), Self::find(&mut parent, v));
                if a != b {
                    parent[a] = b;
                    r += 1;
                }
            }
        }
        r
    }

    pub fn full(&self) -> u64 {
        (1u64 << self.m()) - 1
    }

    /// `T(x, y)` by the subset expansion of `R(x - 1, y - 1)`.
    pub fn tutte_at(&self, x: i64, y: i64) -> i128 {
        let re = self.rank(self.full()) as u32;
        (0..=self.full())
            .map(|s| {
                let r = self.rank(s) as u32;
                let nul = s.count_ones() - r;
                ((x - 1) as i128).pow(re - r) * ((y - 1) as i128).pow(nul)
            })
            .sum()
    }

    /// `modulus == 0` means integers.
    pub fn is_tension(&self, arcs: &[(usize, usize)], f: &[i64], modulus: i64) -> bool {
        let norm = |x: i64| if modulus == 0 { x } else { x.rem_euclid(modulus) };
        let mut h: Vec<Option<i64>> = vec![None; self.n];
        for start in 0..self.n {
            if h[start].is_some() {
                continue;
            }
            h[start] = Some(0);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for (&(a, b), &x) in arcs.iter().zip(f) {
                    let next = if a == v && h[b].is_none() {
                        Some((b, h[v].unwrap() + x))
                    } else if b == v && h[a].is_none() {
                        Some((a, h[v].unwrap() - x))
                    } else {
                        None
                    };
                    if let Some((w, val)) = next {
                        h[w] = Some(norm(val));
                        stack.push(w);
                    }
                }
            }
        }
        arcs.iter().zip(f).all(|(&(a, b), &x)| norm(h[b].unwrap() - h[a].unwrap() - x) == 0)
    }

    pub fn is_flow(&self, arcs: &[(usize, usize)], g: &[i64], modulus: i64) -> bool {
        let mut bal = vec![0i64; self.n];
        for (&(a, b), &x) in arcs.iter().zip(g) {
            bal[a] += x;
            bal[b] -= x;
        }
        bal.iter().all(|&b| if modulus == 0 { b == 0 } else { b.rem_euclid(modulus) == 0 })
    }

    pub fn tensions(&self, arcs: &[(usize, usize)], lo: i64, hi: i64, modulus: i64) -> Vec<Vec<i64>> {
        sweep(self.m(), lo, hi).into_iter().filter(|f| self.is_tension(arcs, f, modulus)).collect()
    }

    pub fn flows(&self, arcs: &[(usize, usize)], lo: i64, hi: i64, modulus: i64) -> Vec<Vec<i64>> {
        sweep(self.m(), lo, hi).into_iter().filter(|g| self.is_flow(arcs, g, modulus)).collect()
    }

    /// Integral complementary `(p, q)`-pairs in the reference frame.
    pub fn integral_pairs(&self, p: i64, q: i64) -> Vec<(Vec<i64>, Vec<i64>)> {
        let arcs = self.arcs(0);
        let ts = self.tensions(&arcs, 1 - p, p - 1, 0);
        let fs = self.flows(&arcs, 1 - q, q - 1, 0);
        let mut out = Vec::new();
        for f in &ts {
            for g in &fs {
                if complementary(f, g) {
                    out.push((f.clone(), g.clone()));
                }
            }
        }
        out
    }

    pub fn kappa_int(&self, p: i64, q: i64) -> u64 {
        self.integral_pairs(p, q).len() as u64
    }

    pub fn kappa_mod(&self, p: i64, q: i64) -> u64 {
        let arcs = self.arcs(0);
        let ts = self.tensions(&arcs, 0, p - 1, p);
        let fs = self.flows(&arcs, 0, q - 1, q);
        pair_count(&ts, &fs, complementary)
    }

    /// Pairs whose sum is positive in the frame of `mask`.
    pub fn kappa_local(&self, mask: u64, p: i64, q: i64) -> u64 {
        let arcs = self.arcs(mask);
        let ts = self.tensions(&arcs, 1 - p, p - 1, 0);
        let fs = self.flows(&arcs, 1 - q, q - 1, 0);
        pair_count(&ts, &fs, |f, g| complementary(f, g) && f.iter().zip(g).all(|(a, b)| a + b > 0))
    }

    /// Pairs of nonnegative vectors with disjoint supports in the frame of `mask`.
    pub fn kappa_bar_local(&self, mask: u64, p: i64, q: i64) -> u64 {
        let arcs = self.arcs(mask);
        let ts = self.tensions(&arcs, 0, p, 0);
        let fs = self.flows(&arcs, 0, q, 0);
        pair_count(&ts, &fs, |f, g| f.iter().zip(g).all(|(a, b)| a * b == 0))
    }

    pub fn kappa_bar_int(&self, p: i64, q: i64) -> u64 {
        (0..=self.full()).map(|m| self.kappa_bar_local(m, p, q)).sum()
    }

    /// Whether the edges where `a` and `b` disagree split as a 0-1 tension
    /// plus a 0-1 flow of `a`, with `tension_ok`/`flow_ok` allowing each part.
    pub fn related(&self, a: u64, b: u64, tension_ok: bool, flow_ok: bool) -> bool {
        let d = a ^ b;
        let arcs = self.arcs(a);
        let ind: Vec<i64> = (0..self.m()).map(|i| (d >> i & 1) as i64).collect();
        let ts = if tension_ok { self.tensions(&arcs, 0, 1, 0) } else { vec![vec![0; self.m()]] };
        let fs: BTreeSet<Vec<i64>> =
            if flow_ok { self.flows(&arcs, 0, 1, 0).into_iter().collect() } else { [vec![0; self.m()]].into() };
        ts.iter().any(|t| {
            let rest: Vec<i64> = ind.iter().zip(t).map(|(i, x)| i - x).collect();
            fs.contains(&rest)
        })
    }

    /// Cut-Eulerian classes as lists of flip masks, via connected components
    /// of the relation graph.
    pub fn ce_classes(&self) -> Vec<Vec<u64>> {
        let all: Vec<u64> = (0..=self.full()).collect();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &a in &all {
            if seen.contains(&a) {
                continue;
            }
            let mut class = vec![a];
            let mut stack = vec![a];
            seen.insert(a);
            while let Some(x) = stack.pop() {
                for &b in &all {
                    if !seen.contains(&b) && self.related(x, b, true, true) {
                        seen.insert(b);
                        class.push(b);
                        stack.push(b);
                    }
                }
            }
            class.sort();
            out.push(class);
        }
        out
    }

    pub fn kappa_bar_mod(&self, p: i64, q: i64) -> u64 {
        self.ce_classes().iter().map(|c| self.kappa_bar_local(c[0], p, q)).sum()
    }

    pub fn is_acyclic(&self, mask: u64) -> bool {
        // a directed cycle carries a positive 0-1 flow
        let arcs = self.arcs(mask);
        self.flows(&arcs, 0, 1, 0).len() == 1
    }

    pub fn is_totally_cyclic(&self, mask: u64) -> bool {
        let arcs = self.arcs(mask);
        self.tensions(&arcs, 0, 1, 0).len() == 1
    }
}

pub fn complementary(f: &[i64], g: &[i64]) -> bool {
    f.iter().zip(g).all(|(&a, &b)| (a == 0) != (b == 0))
}

fn pair_count(ts: &[Vec<i64>], fs: &[Vec<i64>], ok: impl Fn(&[i64], &[i64]) -> bool) -> u64 {
    let mut n = 0;
    for f in ts {
        for g in fs {
            n += ok(f, g) as u64;
        }
    }
    n
}

/// Every vector in `[lo, hi]^len`.
pub fn sweep(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (lo..=hi).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn p8() -> Naive {
    Naive::new(3, &[(0, 2), (0, 1), (1, 2), (0, 1), (1, 2)])
}

/// Digon on two vertices plus a loop.
pub fn digon_loop() -> Naive {
    Naive::new(2, &[(0, 1), (0, 1), (0, 0)])
}

/// A few named small graphs covering bridges, loops and parallel edges.
pub fn zoo() -> BTreeMap<&'static str, Naive> {
    BTreeMap::from([
        ("K1", Naive::new(1, &[])),
        ("K2", Naive::new(2, &[(0, 1)])),
        ("L1", Naive::new(1, &[(0, 0)])),
        ("digon", Naive::new(2, &[(0, 1), (1, 0)])),
        ("digon+loop", digon_loop()),
        ("C3", Naive::new(3, &[(0, 1), (1, 2), (2, 0)])),
        ("P3+iso", Naive::new(4, &[(0, 1), (1, 2)])),
        ("K4-e", Naive::new(4, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 0)])),
        ("P8", p8()),
    ])
}

/// Multigraphs on 1..=4 vertices with at most `max_edges` edges.
pub fn small_graph(max_edges: usize) -> impl Strategy<Value = Naive> {
    (1usize..=4).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_edges).prop_map(move |pairs| Naive { n, pairs })
    })
}
