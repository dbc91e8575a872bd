//! Dinic's max-flow on small integer networks.

use std::collections::VecDeque;

#[derive(Clone, Debug)]
pub struct FlowNetwork {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
    initial: Vec<i64>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl FlowNetwork {
    pub fn new(n: usize) -> Self {
        FlowNetwork {
            adj: vec![Vec::new(); n],
            to: Vec::new(),
            cap: Vec::new(),
            initial: Vec::new(),
            level: vec![0; n],
            iter: vec![0; n],
        }
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    /// Adds an arc and its residual twin; returns the arc index.
    pub fn add_edge(&mut self, u: usize, v: usize, cap: i64) -> usize {
        let e = self.to.len();
        self.adj[u].push(e);
        self.to.push(v);
        self.cap.push(cap);
        self.initial.push(cap);
        self.adj[v].push(e + 1);
        self.to.push(u);
        self.cap.push(0);
        self.initial.push(0);
        e
    }

    /// Undirected edge: capacity `cap` both ways.
    pub fn add_undirected(&mut self, u: usize, v: usize, cap: i64) -> usize {
        let e = self.add_edge(u, v, cap);
        self.cap[e + 1] = cap;
        self.initial[e + 1] = cap;
        e
    }

    /// Flow currently carried by arc `e` (as returned by `add_edge`).
    pub fn flow(&self, e: usize) -> i64 {
        self.initial[e] - self.cap[e]
    }

    fn bfs(&mut self, s: usize) {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && self.level[v] < 0 {
                    self.level[v] = self.level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }

    fn dfs(&mut self, u: usize, t: usize, pushed: i64) -> i64 {
        if u == t {
            return pushed;
        }
        while self.iter[u] < self.adj[u].len() {
            let e = self.adj[u][self.iter[u]];
            let v = self.to[e];
            if self.cap[e] > 0 && self.level[v] == self.level[u] + 1 {
                let d = self.dfs(v, t, pushed.min(self.cap[e]));
                if d > 0 {
                    self.cap[e] -= d;
                    self.cap[e ^ 1] += d;
                    return d;
                }
            }
            self.iter[u] += 1;
        }
        0
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        loop {
            self.bfs(s);
            if self.level[t] < 0 {
                return total;
            }
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, i64::MAX);
                if f == 0 {
                    break;
                }
                total += f;
            }
        }
    }

    /// Nodes reachable from `s` in the residual network (the source side of a
    /// minimum cut after `max_flow`).
    pub fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &e in &self.adj[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }
}

pub struct BoundedArc {
    pub from: usize,
    pub to: usize,
    pub lower: i64,
    pub upper: i64,
}

/// Finds a flow from `s` to `t` respecting every arc's `[lower, upper]`
/// bounds with conservation at all other nodes. Returns the per-arc flow or
/// `None` when no such flow exists.
pub fn feasible_bounded(n: usize, s: usize, t: usize, arcs: &[BoundedArc]) -> Option<Vec<i64>> {
    let super_s = n;
    let super_t = n + 1;
    let mut net = FlowNetwork::new(n + 2);
    let mut excess = vec![0i64; n];
    let mut handles = Vec::with_capacity(arcs.len());
    for a in arcs {
        if a.lower > a.upper {
            return None;
        }
        handles.push(net.add_edge(a.from, a.to, a.upper - a.lower));
        excess[a.to] += a.lower;
        excess[a.from] -= a.lower;
    }
    net.add_edge(t, s, i64::MAX / 4);
    let mut demand = 0;
    for (v, &x) in excess.iter().enumerate() {
        if x > 0 {
            net.add_edge(super_s, v, x);
            demand += x;
        } else if x < 0 {
            net.add_edge(v, super_t, -x);
        }
    }
    if net.max_flow(super_s, super_t) != demand {
        return None;
    }
    Some(arcs.iter().zip(&handles).map(|(a, &h)| a.lower + net.flow(h)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classic_network() {
        let mut net = FlowNetwork::new(6);
        net.add_edge(0, 1, 16);
        net.add_edge(0, 2, 13);
        net.add_edge(1, 2, 10);
        net.add_edge(2, 1, 4);
        net.add_edge(1, 3, 12);
        net.add_edge(3, 2, 9);
        net.add_edge(2, 4, 14);
        net.add_edge(4, 3, 7);
        net.add_edge(3, 5, 20);
        net.add_edge(4, 5, 4);
        assert_eq!(net.max_flow(0, 5), 23);
        let side = net.residual_reachable(0);
        assert!(side[0] && !side[5]);
    }

    #[test]
    fn lower_bounds() {
        // s -> a -> t with a forced minimum of 2 but capacity 1 upstream.
        let arcs =
            [BoundedArc { from: 0, to: 1, lower: 0, upper: 1 }, BoundedArc { from: 1, to: 2, lower: 2, upper: 3 }];
        assert!(feasible_bounded(3, 0, 2, &arcs).is_none());
        let arcs =
            [BoundedArc { from: 0, to: 1, lower: 0, upper: 5 }, BoundedArc { from: 1, to: 2, lower: 2, upper: 3 }];
        let f = feasible_bounded(3, 0, 2, &arcs).unwrap();
        assert_eq!(f[0], f[1]);
        assert!((2..=3).contains(&f[1]));
    }
}
