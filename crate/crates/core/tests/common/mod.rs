//! Test-only oracles that share no code path with the library's
//! implementations they check.

#![allow(dead_code)]

use std::collections::VecDeque;

use nalgebra::DMatrix;
use steklov_core::BoundaryGraph;

/// Steklov eigenvalues by brute force: for each boundary basis vector solve
/// the full `n × n` Dirichlet system (boundary rows pinned, interior rows
/// harmonic) with LU, read off the normal derivative to assemble `Λ`
/// column by column, then take the eigenvalues of the non-symmetric `Λ`.
pub fn dense_steklov_eigenvalues(g: &BoundaryGraph) -> Vec<f64> {
    let n = g.vertex_count();
    let mut weight = DMatrix::<f64>::zeros(n, n);
    for e in g.edges() {
        weight[(e.u, e.v)] = e.w;
        weight[(e.v, e.u)] = e.w;
    }
    let boundary: Vec<usize> = (0..n).filter(|&x| g.is_boundary(x)).collect();
    let b = boundary.len();

    let mut system = DMatrix::<f64>::zeros(n, n);
    for x in 0..n {
        if g.is_boundary(x) {
            system[(x, x)] = 1.0;
        } else {
            for y in 0..n {
                if weight[(x, y)] != 0.0 {
                    system[(x, y)] -= weight[(x, y)];
                    system[(x, x)] += weight[(x, y)];
                }
            }
        }
    }
    let lu = system.lu();

    let mut lambda = DMatrix::<f64>::zeros(b, b);
    for (k, &source) in boundary.iter().enumerate() {
        let mut rhs = nalgebra::DVector::<f64>::zeros(n);
        rhs[source] = 1.0;
        let u = lu.solve(&rhs).expect("Dirichlet system is nonsingular");
        for (i, &x) in boundary.iter().enumerate() {
            let flux: f64 = (0..n).map(|y| (u[x] - u[y]) * weight[(x, y)]).sum();
            lambda[(i, k)] = flux / g.measure(x);
        }
    }
    let mut eigenvalues: Vec<f64> = lambda.complex_eigenvalues().iter().map(|z| z.re).collect();
    eigenvalues.sort_by(f64::total_cmp);
    eigenvalues
}

/// Number of shortest `x`–`y` paths by dynamic programming over BFS layers.
pub fn count_geodesics(g: &BoundaryGraph, x: usize, y: usize) -> u64 {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut count = vec![0u64; n];
    dist[x] = 0;
    count[x] = 1;
    let mut queue = VecDeque::from([x]);
    while let Some(v) = queue.pop_front() {
        for &(z, _) in g.neighbors(v) {
            if dist[z] == usize::MAX {
                dist[z] = dist[v] + 1;
                queue.push_back(z);
            }
            if dist[z] == dist[v] + 1 {
                count[z] += count[v];
            }
        }
    }
    count[y]
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Connected labelled graphs on `n` vertices, by the standard recurrence
/// `C(n) = 2^{n(n-1)/2} - Σ_{k<n} binom(n-1, k-1) C(k) 2^{(n-k)(n-k-1)/2}`.
pub fn connected_labelled_graphs(n: u64) -> u64 {
    let total = |m: u64| 1u64 << (m * m.saturating_sub(1) / 2);
    let mut c = vec![0u64; n as usize + 1];
    for m in 1..=n {
        let disconnected: u64 = (1..m)
            .map(|k| binomial(m - 1, k - 1) * c[k as usize] * total(m - k))
            .sum();
        c[m as usize] = total(m) - disconnected;
    }
    c[n as usize]
}

/// Counts `(graph, boundary)` instances by recursively choosing each edge,
/// then testing connectivity with a depth-first search.
pub fn recursive_instance_count(n_max: usize) -> u64 {
    fn dfs_connected(n: usize, adj: &[Vec<usize>]) -> bool {
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }
    fn recurse(n: usize, pairs: &[(usize, usize)], chosen: &mut Vec<(usize, usize)>) -> u64 {
        match pairs.split_first() {
            None => {
                let mut adj = vec![Vec::new(); n];
                for &(a, b) in chosen.iter() {
                    adj[a].push(b);
                    adj[b].push(a);
                }
                u64::from(dfs_connected(n, &adj))
            }
            Some((&p, rest)) => {
                let without = recurse(n, rest, chosen);
                chosen.push(p);
                let with = recurse(n, rest, chosen);
                chosen.pop();
                without + with
            }
        }
    }
    (2..=n_max)
        .map(|n| {
            let pairs: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            let graphs = recurse(n, &pairs, &mut Vec::new());
            let subsets = (1u64 << n) - 1 - n as u64;
            graphs * subsets
        })
        .sum()
}

/// Unit path on `n` vertices with the two endpoints as boundary.
pub fn unit_path(n: usize) -> BoundaryGraph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    BoundaryGraph::unit(n, &[0, n - 1], &edges).unwrap()
}

pub fn relative_gap(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}
