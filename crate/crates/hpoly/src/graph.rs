//! Immutable finite simple graphs and the structural predicates the rest of
//! the crate consumes: degrees, components, line graph, girth, diameter,
//! dominance, pendant paths, regularity classes, and small-scale isomorphism.
//!
//! Vertex ids are dense `0..n-1`. Graph values never change after
//! construction, so every operation here is a pure function and safe to call
//! concurrently on shared graphs.

use std::collections::VecDeque;
use thiserror::Error;

/// Hard ceiling for the brute-force isomorphism and canonical-form search.
pub const ISOMORPHISM_LIMIT: usize = 9;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("loop edge ({v}, {v}) is not allowed in a simple graph")]
    LoopEdge { v: usize },
    #[error("{operation} is limited to {limit} vertices, got {n}; refusing to guess")]
    SizeLimitExceeded {
        operation: &'static str,
        n: usize,
        limit: usize,
    },
}

/// A finite simple undirected graph. Neighbor lists are sorted and free of
/// duplicates; `m` is cached at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    m: usize,
}

/// Result of [`Graph::build`]: the graph plus a flag recording whether any
/// duplicate input pairs were collapsed.
#[derive(Clone, Debug)]
pub struct BuiltGraph {
    pub graph: Graph,
    pub collapsed_duplicates: bool,
}

/// Per-vertex degrees plus the deduplicated degree set. `max_degree` and
/// `min_degree` range over non-isolated vertices only and are `None` when
/// every vertex is isolated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSummary {
    pub degrees: Vec<usize>,
    /// Sorted set of distinct degree values over all vertices.
    pub distinct: Vec<usize>,
    pub max_degree: Option<usize>,
    pub min_degree: Option<usize>,
}

impl DegreeSummary {
    /// Cardinality of the distinct-degree set.
    pub fn distinct_count(&self) -> usize {
        self.distinct.len()
    }
}

/// A connected component as a vertex-induced graph, with the map from
/// component-local ids back to the parent graph.
#[derive(Clone, Debug)]
pub struct Component {
    pub graph: Graph,
    /// `vertex_map[i]` is the parent-graph id of component vertex `i`.
    pub vertex_map: Vec<usize>,
}

/// Shortest cycle length, or a sentinel for forests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Girth {
    Cycle(usize),
    Acyclic,
}

/// Largest shortest-path distance, or a sentinel for graphs with more than
/// one component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diameter {
    Value(usize),
    Disconnected,
}

/// Degree structure of one connected component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegularityClass {
    /// Every vertex has degree `k`.
    Regular(usize),
    /// Bipartite with one side all `max` and the other all `min`, `max != min`.
    Biregular { max: usize, min: usize },
    Neither,
}

impl RegularityClass {
    /// `max + min` for regular/biregular components (`2k` for regular);
    /// `None` for `Neither`.
    pub fn degree_sum(&self) -> Option<usize> {
        match self {
            RegularityClass::Regular(k) => Some(2 * k),
            RegularityClass::Biregular { max, min } => Some(max + min),
            RegularityClass::Neither => None,
        }
    }
}

impl Graph {
    /// Builds a graph from unordered vertex pairs, collapsing duplicates
    /// (including swapped copies) and reporting that via the returned flag.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<BuiltGraph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        let mut collapsed = false;
        let mut m = 0;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::LoopEdge { v });
            }
            if adj[u].contains(&v) {
                collapsed = true;
                continue;
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(BuiltGraph {
            graph: Graph { n, adj, m },
            collapsed_duplicates: collapsed,
        })
    }

    /// Like [`Graph::build`] but discards the duplicate-collapse flag.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        Ok(Self::build(n, edges)?.graph)
    }

    /// Fast constructor for edges already known to be valid, loop-free,
    /// duplicate-free and sorted lexicographically with `u < v`.
    pub(crate) fn from_sorted_edges_unchecked(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            debug_assert!(u < v && v < n);
            adj[u].push(v);
            adj[v].push(u);
        }
        Graph {
            n,
            adj,
            m: edges.len(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u, v))
        })
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|list| list.is_empty())
    }

    pub fn degree_summary(&self) -> DegreeSummary {
        let degrees: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut distinct = degrees.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let positive = degrees.iter().copied().filter(|&d| d > 0);
        DegreeSummary {
            max_degree: positive.clone().max(),
            min_degree: positive.min(),
            degrees,
            distinct,
        }
    }

    /// Partition of the vertex set into connected components, each returned
    /// as an induced graph with its index map back to `self`.
    pub fn connected_components(&self) -> Vec<Component> {
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut vertex_map = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(v) = queue.pop_front() {
                vertex_map.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            vertex_map.sort_unstable();
            let mut local = vec![usize::MAX; self.n];
            for (i, &v) in vertex_map.iter().enumerate() {
                local[v] = i;
            }
            let mut edges: Vec<(usize, usize)> = Vec::new();
            for &v in &vertex_map {
                for &w in &self.adj[v] {
                    if w > v {
                        edges.push((local[v], local[w]));
                    }
                }
            }
            let graph = Graph::new(vertex_map.len(), &edges).expect("induced edges are valid");
            components.push(Component { graph, vertex_map });
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.n
    }

    /// Intersection graph of the edge set: one vertex per edge of `self`
    /// (in lexicographic edge order), adjacent when the edges share an
    /// endpoint.
    pub fn line_graph(&self) -> Graph {
        let edges: Vec<(usize, usize)> = self.edges().collect();
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        let mut line_edges = Vec::new();
        for list in &incident {
            for (a, &i) in list.iter().enumerate() {
                for &j in &list[a + 1..] {
                    line_edges.push((i.min(j), i.max(j)));
                }
            }
        }
        let graph = Graph::new(edges.len(), &line_edges).expect("line graph edges are valid");
        // degree of the vertex for edge uv must be d_u + d_v - 2
        debug_assert!(edges
            .iter()
            .enumerate()
            .all(|(i, &(u, v))| graph.degree(i) == self.degree(u) + self.degree(v) - 2));
        graph
    }

    /// Length of a shortest cycle, found by BFS from every vertex.
    pub fn girth(&self) -> Girth {
        // a graph is a forest iff m = n - (number of components)
        let components = {
            let mut seen = vec![false; self.n];
            let mut count = 0;
            for start in 0..self.n {
                if seen[start] {
                    continue;
                }
                count += 1;
                let mut queue = VecDeque::from([start]);
                seen[start] = true;
                while let Some(v) = queue.pop_front() {
                    for &w in &self.adj[v] {
                        if !seen[w] {
                            seen[w] = true;
                            queue.push_back(w);
                        }
                    }
                }
            }
            count
        };
        if self.m + components == self.n {
            return Girth::Acyclic;
        }
        let mut best = usize::MAX;
        for start in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        // non-tree edge: closes a cycle through `start`
                        best = best.min(dist[v] + dist[w] + 1);
                    }
                }
            }
        }
        Girth::Cycle(best)
    }

    /// Maximum over vertex pairs of the shortest-path distance.
    pub fn diameter(&self) -> Diameter {
        if self.n == 0 {
            return Diameter::Value(0);
        }
        let mut overall = 0;
        for start in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            dist[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
            match dist.iter().filter(|&&d| d != usize::MAX).count() {
                c if c < self.n => return Diameter::Disconnected,
                _ => overall = overall.max(*dist.iter().max().expect("n > 0")),
            }
        }
        Diameter::Value(overall)
    }

    /// True iff no edge's endpoints share a neighbor.
    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| {
            // sorted lists: linear intersection test
            let (mut i, mut j) = (0, 0);
            let (a, b) = (&self.adj[u], &self.adj[v]);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return false,
                }
            }
            true
        })
    }

    /// Vertices adjacent to every other vertex.
    pub fn dominant_vertices(&self) -> Vec<usize> {
        if self.n == 0 {
            return Vec::new();
        }
        (0..self.n).filter(|&v| self.degree(v) == self.n - 1).collect()
    }

    /// Number of pendant paths: edges whose endpoint degrees are exactly
    /// `{1, 2}`.
    pub fn pendant_path_count(&self) -> usize {
        self.edges()
            .filter(|&(u, v)| {
                let (a, b) = (self.degree(u), self.degree(v));
                (a == 1 && b == 2) || (a == 2 && b == 1)
            })
            .count()
    }

    /// True iff every edge joins an odd-degree vertex to an even-degree one.
    pub fn has_alternated_degree(&self) -> bool {
        self.edges()
            .all(|(u, v)| (self.degree(u) + self.degree(v)) % 2 == 1)
    }

    /// Classifies each connected component as regular, biregular, or neither.
    pub fn regularity_classes(&self) -> Vec<RegularityClass> {
        self.connected_components()
            .iter()
            .map(|c| component_regularity(&c.graph))
            .collect()
    }

    /// True iff every component is regular or biregular and the per-component
    /// degree sums `max_i + min_i` agree across components.
    pub fn is_coherent(&self) -> bool {
        let mut common: Option<usize> = None;
        for class in self.regularity_classes() {
            match class.degree_sum() {
                None => return false,
                Some(s) => {
                    if *common.get_or_insert(s) != s {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Regularity class of a connected graph. Bipartiteness is established by an
/// actual 2-coloring, not inferred from the degree set.
pub fn component_regularity(g: &Graph) -> RegularityClass {
    if g.n() == 0 {
        return RegularityClass::Regular(0);
    }
    let first = g.degree(0);
    if (0..g.n()).all(|v| g.degree(v) == first) {
        return RegularityClass::Regular(first);
    }
    // 2-color; the component is connected so one BFS suffices
    let mut color = vec![u8::MAX; g.n()];
    color[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if color[w] == u8::MAX {
                color[w] = 1 - color[v];
                queue.push_back(w);
            } else if color[w] == color[v] {
                return RegularityClass::Neither;
            }
        }
    }
    let side_degrees = |side: u8| {
        let mut degs = (0..g.n())
            .filter(|&v| color[v] == side)
            .map(|v| g.degree(v));
        let d = degs.next();
        d.filter(|&d0| degs.all(|d| d == d0))
    };
    match (side_degrees(0), side_degrees(1)) {
        (Some(a), Some(b)) if a != b => RegularityClass::Biregular {
            max: a.max(b),
            min: a.min(b),
        },
        _ => RegularityClass::Neither,
    }
}

/// Adjacency-preserving-bijection test by backtracking over degree classes.
/// Refuses graphs above [`ISOMORPHISM_LIMIT`] instead of guessing.
pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool, GraphError> {
    let n = g1.n();
    for g in [g1, g2] {
        if g.n() > ISOMORPHISM_LIMIT {
            return Err(GraphError::SizeLimitExceeded {
                operation: "isomorphism test",
                n: g.n(),
                limit: ISOMORPHISM_LIMIT,
            });
        }
    }
    if n != g2.n() || g1.m() != g2.m() {
        return Ok(false);
    }
    let mut d1: Vec<usize> = (0..n).map(|v| g1.degree(v)).collect();
    let mut d2: Vec<usize> = (0..n).map(|v| g2.degree(v)).collect();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return Ok(false);
    }

    // map vertices of g1 in order of rarest degree first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (d1.iter().filter(|&&d| d == g1.degree(v)).count(), v));

    fn extend(
        g1: &Graph,
        g2: &Graph,
        order: &[usize],
        pos: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        'candidate: for w in 0..g2.n() {
            if used[w] || g1.degree(v) != g2.degree(w) {
                continue;
            }
            for &prev in &order[..pos] {
                if g1.has_edge(v, prev) != g2.has_edge(w, map[prev]) {
                    continue 'candidate;
                }
            }
            map[v] = w;
            used[w] = true;
            if extend(g1, g2, order, pos + 1, map, used) {
                return true;
            }
            used[w] = false;
        }
        false
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend(g1, g2, &order, 0, &mut map, &mut used))
}

/// Canonical key for a small graph: the lexicographically smallest
/// upper-triangle bit vector over all relabelings that list vertices in
/// non-increasing degree order. Two graphs of equal order are isomorphic iff
/// their keys are equal.
pub fn canonical_form(g: &Graph) -> Result<u64, GraphError> {
    let n = g.n();
    if n > ISOMORPHISM_LIMIT {
        return Err(GraphError::SizeLimitExceeded {
            operation: "canonical form",
            n,
            limit: ISOMORPHISM_LIMIT,
        });
    }
    if n <= 1 {
        return Ok(0);
    }
    let mut required: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    required.sort_unstable_by(|a, b| b.cmp(a));

    let nbits = n * (n - 1) / 2;

    struct Search<'a> {
        g: &'a Graph,
        required: Vec<usize>,
        best: Option<Vec<bool>>,
    }

    impl Search<'_> {
        fn dfs(&mut self, perm: &mut Vec<usize>, used: &mut Vec<bool>, prefix: &mut Vec<bool>) {
            let pos = perm.len();
            if pos == self.required.len() {
                if self.best.as_ref().is_none_or(|b| prefix.as_slice() < b.as_slice()) {
                    self.best = Some(prefix.clone());
                }
                return;
            }
            for v in 0..self.g.n() {
                if used[v] || self.g.degree(v) != self.required[pos] {
                    continue;
                }
                let mark = prefix.len();
                for &u in perm.iter() {
                    prefix.push(self.g.has_edge(u, v));
                }
                let viable = match &self.best {
                    Some(b) => prefix.as_slice() <= &b[..prefix.len()],
                    None => true,
                };
                if viable {
                    perm.push(v);
                    used[v] = true;
                    self.dfs(perm, used, prefix);
                    used[v] = false;
                    perm.pop();
                }
                prefix.truncate(mark);
            }
        }
    }

    let mut search = Search {
        g,
        required,
        best: None,
    };
    search.dfs(
        &mut Vec::with_capacity(n),
        &mut vec![false; n],
        &mut Vec::with_capacity(nbits),
    );
    let bits = search.best.expect("at least one valid relabeling exists");
    let mut key = 0u64;
    for (i, &b) in bits.iter().enumerate() {
        if b {
            key |= 1 << (nbits - 1 - i);
        }
    }
    Ok(key)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).unwrap()
    }

    pub(crate) fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    pub(crate) fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    pub(crate) fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::new(leaves + 1, &edges).unwrap()
    }

    pub(crate) fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        Graph::new(a + b, &edges).unwrap()
    }

    fn wheel(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        for i in 1..n {
            let next = if i == n - 1 { 1 } else { i + 1 };
            edges.push((i, next));
        }
        Graph::new(n, &edges).unwrap()
    }

    fn disjoint(g1: &Graph, g2: &Graph) -> Graph {
        let mut edges: Vec<_> = g1.edges().collect();
        edges.extend(g2.edges().map(|(u, v)| (u + g1.n(), v + g1.n())));
        Graph::new(g1.n() + g2.n(), &edges).unwrap()
    }

    #[test]
    fn build_examples() {
        let p4 = Graph::build(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.graph.m(), 3);
        assert!(!p4.collapsed_duplicates);

        let c3 = Graph::build(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(c3.graph.m(), 3);

        let k2 = Graph::build(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(k2.graph.m(), 1);
        assert!(k2.collapsed_duplicates);
    }

    #[test]
    fn build_rejections() {
        assert_eq!(
            Graph::build(3, &[(0, 3)]).unwrap_err(),
            GraphError::EndpointOutOfRange { u: 0, v: 3, n: 3 }
        );
        assert_eq!(
            Graph::build(3, &[(1, 1)]).unwrap_err(),
            GraphError::LoopEdge { v: 1 }
        );
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        for g in [path(4), cycle(5), complete(5), wheel(6), star(4)] {
            let total: usize = (0..g.n()).map(|v| g.degree(v)).sum();
            assert_eq!(total, 2 * g.m());
        }
    }

    #[test]
    fn degree_summary_examples() {
        let s = path(4).degree_summary();
        assert_eq!(s.degrees, vec![1, 2, 2, 1]);
        assert_eq!(s.distinct, vec![1, 2]);
        assert_eq!((s.max_degree, s.min_degree), (Some(2), Some(1)));

        let s = complete(4).degree_summary();
        assert_eq!(s.distinct, vec![3]);
        assert_eq!((s.max_degree, s.min_degree), (Some(3), Some(3)));

        let s = wheel(5).degree_summary();
        assert_eq!(s.distinct, vec![3, 4]);
        assert_eq!((s.max_degree, s.min_degree), (Some(4), Some(3)));

        let s = Graph::new(3, &[]).unwrap().degree_summary();
        assert_eq!((s.max_degree, s.min_degree), (None, None));
        assert_eq!(s.distinct, vec![0]);
    }

    #[test]
    fn component_examples() {
        let two_triangles = disjoint(&cycle(3), &cycle(3));
        let comps = two_triangles.connected_components();
        assert_eq!(comps.len(), 2);
        for c in &comps {
            assert_eq!((c.graph.n(), c.graph.m()), (3, 3));
        }
        // union of components reconstructs the parent edge set
        let mut rebuilt: Vec<(usize, usize)> = comps
            .iter()
            .flat_map(|c| {
                c.graph
                    .edges()
                    .map(|(u, v)| (c.vertex_map[u], c.vertex_map[v]))
                    .collect::<Vec<_>>()
            })
            .collect();
        rebuilt.sort_unstable();
        assert_eq!(rebuilt, two_triangles.edges().collect::<Vec<_>>());

        assert_eq!(path(4).connected_components().len(), 1);
        assert_eq!(Graph::new(3, &[]).unwrap().connected_components().len(), 3);
    }

    #[test]
    fn line_graph_examples() {
        assert!(is_isomorphic(&path(4).line_graph(), &path(3)).unwrap());
        assert!(is_isomorphic(&cycle(5).line_graph(), &cycle(5)).unwrap());
        assert!(is_isomorphic(&star(3).line_graph(), &cycle(3)).unwrap());
        assert_eq!(Graph::new(2, &[]).unwrap().line_graph().n(), 0);
    }

    #[test]
    fn line_graph_degree_identity() {
        for g in [path(5), wheel(6), complete(5), star(4), cycle(4)] {
            let lg = g.line_graph();
            for (i, (u, v)) in g.edges().enumerate() {
                assert_eq!(lg.degree(i), g.degree(u) + g.degree(v) - 2);
            }
        }
    }

    #[test]
    fn girth_examples() {
        assert_eq!(cycle(5).girth(), Girth::Cycle(5));
        assert_eq!(path(4).girth(), Girth::Acyclic);
        assert_eq!(wheel(5).girth(), Girth::Cycle(3));
        assert_eq!(complete_bipartite(2, 3).girth(), Girth::Cycle(4));
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(complete(4).diameter(), Diameter::Value(1));
        assert_eq!(path(4).diameter(), Diameter::Value(3));
        assert_eq!(
            disjoint(&cycle(3), &cycle(3)).diameter(),
            Diameter::Disconnected
        );
    }

    #[test]
    fn triangle_free_examples() {
        assert!(cycle(6).is_triangle_free());
        assert!(!complete(3).is_triangle_free());
        assert!(complete_bipartite(3, 3).is_triangle_free());
    }

    #[test]
    fn dominant_vertex_examples() {
        assert_eq!(complete(4).dominant_vertices(), vec![0, 1, 2, 3]);
        assert_eq!(wheel(5).dominant_vertices(), vec![0]);
        assert!(path(4).dominant_vertices().is_empty());
    }

    #[test]
    fn pendant_path_examples() {
        assert_eq!(path(4).pendant_path_count(), 2);
        assert_eq!(star(3).pendant_path_count(), 0);
        assert_eq!(path(3).pendant_path_count(), 2);
        assert_eq!(path(2).pendant_path_count(), 0);
    }

    #[test]
    fn alternated_degree_examples() {
        assert!(path(3).has_alternated_degree());
        assert!(!cycle(4).has_alternated_degree());
        assert!(complete_bipartite(2, 3).has_alternated_degree());
    }

    #[test]
    fn regularity_examples() {
        assert_eq!(cycle(6).regularity_classes(), vec![RegularityClass::Regular(2)]);
        assert!(cycle(6).is_coherent());

        assert_eq!(
            star(3).regularity_classes(),
            vec![RegularityClass::Biregular { max: 3, min: 1 }]
        );
        assert!(star(3).is_coherent());

        // K_{1,3} + C_3: 3+1 = 2+2, so the union is coherent
        let mixed = disjoint(&star(3), &cycle(3));
        assert_eq!(
            mixed.regularity_classes(),
            vec![
                RegularityClass::Biregular { max: 3, min: 1 },
                RegularityClass::Regular(2)
            ]
        );
        assert!(mixed.is_coherent());

        // K_{1,2} + C_3: 2+1 != 2+2
        assert!(!disjoint(&star(2), &cycle(3)).is_coherent());
        assert!(!path(4).is_coherent());
    }

    #[test]
    fn biregular_requires_bipartiteness() {
        // 5-cycle with a chord has degrees {2,3} but an odd cycle
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        assert_eq!(component_regularity(&g), RegularityClass::Neither);
    }

    #[test]
    fn isomorphism_examples() {
        assert!(is_isomorphic(&cycle(3), &complete(3)).unwrap());
        assert!(!is_isomorphic(&star(3), &cycle(3)).unwrap());
        assert!(!is_isomorphic(&cycle(6), &disjoint(&cycle(3), &cycle(3))).unwrap());
        // same degree multiset, different structure
        assert!(!is_isomorphic(&cycle(6), &disjoint(&cycle(3), &cycle(3))).unwrap());
        assert!(is_isomorphic(
            &path(4),
            &Graph::new(4, &[(2, 0), (0, 3), (3, 1)]).unwrap()
        )
        .unwrap());
    }

    #[test]
    fn isomorphism_size_limit() {
        let big = path(10);
        assert!(matches!(
            is_isomorphic(&big, &big),
            Err(GraphError::SizeLimitExceeded { .. })
        ));
        assert!(matches!(
            canonical_form(&big),
            Err(GraphError::SizeLimitExceeded { .. })
        ));
    }

    #[test]
    fn canonical_form_matches_isomorphism_exhaustively() {
        // all labeled graphs on 4 vertices, pairwise
        let mut graphs = Vec::new();
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        for mask in 0u32..64 {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            graphs.push(Graph::new(4, &edges).unwrap());
        }
        for a in &graphs {
            let ca = canonical_form(a).unwrap();
            for b in &graphs {
                assert_eq!(
                    canonical_form(b).unwrap() == ca,
                    is_isomorphic(a, b).unwrap()
                );
            }
        }
    }
}
