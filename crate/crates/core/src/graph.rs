//! Small simple graphs: Kneser graphs, automorphisms and isomorphisms by backtracking.

use std::collections::VecDeque;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<bool>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![vec![false; n]; n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    /// Kneser graph K(n, k): vertices are the k-subsets of `0..n` in
    /// lexicographic order, adjacent when disjoint.
    pub fn kneser(n: usize, k: usize) -> (Self, Vec<Vec<usize>>) {
        let subsets = k_subsets(n, k);
        let mut g = Graph::new(subsets.len());
        for a in 0..subsets.len() {
            for b in a + 1..subsets.len() {
                if subsets[a].iter().all(|x| !subsets[b].contains(x)) {
                    g.add_edge(a, b);
                }
            }
        }
        (g, subsets)
    }

    pub fn petersen() -> Self {
        Graph::kneser(5, 2).0
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b, "loops are not allowed");
        self.adj[a][b] = true;
        self.adj[b][a] = true;
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a][b]
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.order()).filter(|&w| self.adj[v][w]).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&x| x).count()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if self.adj[a][b] {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        (0..self.order()).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.order();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        let len = dist[v] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// All isomorphisms `self -> other`, as vertex maps, in lexicographic order.
    /// `limit` stops the search early.
    pub fn isomorphisms(&self, other: &Graph, limit: Option<usize>) -> Vec<Vec<usize>> {
        let n = self.order();
        if n != other.order() || self.edges().len() != other.edges().len() {
            return Vec::new();
        }
        let mut degs_a: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut degs_b: Vec<usize> = (0..n).map(|v| other.degree(v)).collect();
        degs_a.sort_unstable();
        degs_b.sort_unstable();
        if degs_a != degs_b {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend_iso(other, 0, &mut map, &mut used, &mut out, limit);
        out
    }

    fn extend_iso(
        &self,
        other: &Graph,
        v: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
        limit: Option<usize>,
    ) -> bool {
        if limit.is_some_and(|l| out.len() >= l) {
            return true;
        }
        let n = self.order();
        if v == n {
            out.push(map.clone());
            return limit.is_some_and(|l| out.len() >= l);
        }
        for w in 0..n {
            if used[w] || self.degree(v) != other.degree(w) {
                continue;
            }
            if (0..v).any(|u| self.adj[u][v] != other.adj[map[u]][w]) {
                continue;
            }
            map[v] = w;
            used[w] = true;
            let stop = self.extend_iso(other, v + 1, map, used, out, limit);
            used[w] = false;
            map[v] = usize::MAX;
            if stop {
                return true;
            }
        }
        false
    }

    /// Lexicographically least isomorphism `self -> other`.
    pub fn isomorphism(&self, other: &Graph) -> Option<Vec<usize>> {
        self.isomorphisms(other, Some(1)).into_iter().next()
    }

    pub fn automorphism_count(&self) -> usize {
        self.isomorphisms(self, None).len()
    }

    pub fn is_vertex_transitive(&self) -> bool {
        let autos = self.isomorphisms(self, None);
        (0..self.order()).all(|v| autos.iter().any(|a| a[0] == v))
    }
}

/// The k-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_invariants() {
        let g = Graph::petersen();
        assert_eq!(g.order(), 10);
        assert_eq!(g.edges().len(), 15);
        assert_eq!(g.regular_degree(), Some(3));
        assert_eq!(g.girth(), Some(5));
        assert_eq!(g.automorphism_count(), 120);
        assert!(g.is_vertex_transitive());
    }

    #[test]
    fn petersen_outer_inner_drawing_is_isomorphic() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        let h = Graph::from_edges(10, &edges);
        let iso = Graph::petersen().isomorphism(&h).expect("isomorphic");
        let g = Graph::petersen();
        for (a, b) in g.edges() {
            assert!(h.adjacent(iso[a], iso[b]));
        }
    }

    #[test]
    fn non_isomorphic_graphs() {
        let cycle10 = Graph::from_edges(10, &(0..10).map(|i| (i, (i + 1) % 10)).collect::<Vec<_>>());
        assert!(Graph::petersen().isomorphism(&cycle10).is_none());
        assert_eq!(cycle10.automorphism_count(), 20);
        assert_eq!(cycle10.girth(), Some(10));
    }

    #[test]
    fn subsets() {
        assert_eq!(k_subsets(5, 2).len(), 10);
        assert_eq!(k_subsets(5, 3)[0], vec![0, 1, 2]);
        assert_eq!(k_subsets(4, 0), vec![Vec::<usize>::new()]);
    }
}
