//! Hypergraph data model, structural predicates and loose-path distances.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// A simple hypergraph on vertices `0..n`. Every edge is a set of at least
/// two vertex ids, edges are pairwise distinct as sets, and the edge list
/// keeps insertion order with each edge stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Builds a hypergraph, sorting each edge and validating the invariants.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let mut sorted_edges: Vec<Vec<usize>> = Vec::with_capacity(edges.len());
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        for (index, edge) in edges.into_iter().enumerate() {
            for &v in &edge {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            let mut e: Vec<usize> = edge;
            e.sort_unstable();
            e.dedup();
            if e.len() < 2 {
                return Err(Error::EdgeTooSmall { index });
            }
            if !seen.insert(e.clone()) {
                return Err(Error::DuplicateEdge { index });
            }
            sorted_edges.push(e);
        }
        Ok(Hypergraph {
            n,
            edges: sorted_edges,
        })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edge list in insertion order; each edge is sorted.
    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Result<&[usize]> {
        self.edges
            .get(index)
            .map(Vec::as_slice)
            .ok_or(Error::EdgeIndexOutOfRange {
                index,
                m: self.edges.len(),
            })
    }

    /// Maximum edge cardinality (0 for an edgeless hypergraph).
    pub fn rank(&self) -> usize {
        self.edges.iter().map(Vec::len).max().unwrap_or(0)
    }

    fn check_vertex(&self, u: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: u,
                n: self.n,
            });
        }
        Ok(())
    }

    /// Indices of the edges containing `u`.
    pub fn edges_containing(&self, u: usize) -> Result<Vec<usize>> {
        self.check_vertex(u)?;
        Ok(self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.binary_search(&u).is_ok())
            .map(|(i, _)| i)
            .collect())
    }

    /// Number of edges containing `u`.
    pub fn degree(&self, u: usize) -> Result<usize> {
        Ok(self.edges_containing(u)?.len())
    }

    /// Vertices sharing an edge with `u`, sorted, excluding `u` itself.
    pub fn neighbors(&self, u: usize) -> Result<Vec<usize>> {
        self.check_vertex(u)?;
        let mut out = BTreeSet::new();
        for e in &self.edges {
            if e.binary_search(&u).is_ok() {
                out.extend(e.iter().copied().filter(|&v| v != u));
            }
        }
        Ok(out.into_iter().collect())
    }

    /// True iff `u` and `v` lie in a common edge.
    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        u != v
            && self
                .edges
                .iter()
                .any(|e| e.binary_search(&u).is_ok() && e.binary_search(&v).is_ok())
    }

    /// The 2-section graph: same vertex set, one 2-edge per co-occurring
    /// vertex pair, so each size-r edge becomes an r-clique.
    pub fn two_section(&self) -> Hypergraph {
        let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
        for e in &self.edges {
            for i in 0..e.len() {
                for j in i + 1..e.len() {
                    pairs.insert((e[i], e[j]));
                }
            }
        }
        Hypergraph {
            n: self.n,
            edges: pairs.into_iter().map(|(u, v)| vec![u, v]).collect(),
        }
    }

    /// Breadth-first distances from `source`; unreachable entries are `None`.
    fn bfs(&self, source: usize, incident: &[Vec<usize>]) -> Vec<Option<u32>> {
        let mut dist: Vec<Option<u32>> = vec![None; self.n];
        let mut edge_done = vec![false; self.edges.len()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertex has a distance");
            for &ei in &incident[u] {
                if edge_done[ei] {
                    continue;
                }
                edge_done[ei] = true;
                for &v in &self.edges[ei] {
                    if dist[v].is_none() {
                        dist[v] = Some(du + 1);
                        queue.push_back(v);
                    }
                }
            }
        }
        dist
    }

    fn incidence_lists(&self) -> Vec<Vec<usize>> {
        let mut incident = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                incident[v].push(i);
            }
        }
        incident
    }

    /// True iff every vertex pair is joined by a loose path (equivalently,
    /// the 2-section is connected).
    pub fn is_connected(&self) -> bool {
        let incident = self.incidence_lists();
        self.bfs(0, &incident).iter().all(Option::is_some)
    }

    /// Breadth-first distance rows from every source; `None` marks an
    /// unreachable pair.
    pub(crate) fn all_bfs(&self) -> Vec<Vec<Option<u32>>> {
        let incident = self.incidence_lists();
        (0..self.n).map(|s| self.bfs(s, &incident)).collect()
    }

    /// Vertex sets of the connected components, each sorted; components are
    /// ordered by their smallest vertex id.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let incident = self.incidence_lists();
        let mut assigned = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if assigned[s] {
                continue;
            }
            let dist = self.bfs(s, &incident);
            let comp: Vec<usize> = (0..self.n)
                .filter(|&v| !assigned[v] && dist[v].is_some())
                .collect();
            for &v in &comp {
                assigned[v] = true;
            }
            out.push(comp);
        }
        out
    }

    /// Connected components after deleting the edge at `index` (vertices are
    /// kept). Ordered by smallest vertex id.
    pub fn components_without_edge(&self, index: usize) -> Result<Vec<Vec<usize>>> {
        self.edge(index)?;
        let mut edges = self.edges.clone();
        edges.remove(index);
        let g = Hypergraph { n: self.n, edges };
        Ok(g.components())
    }

    /// Connected components of `G - u`: vertex `u` is removed from every
    /// edge and edges that shrink below two vertices are dropped. Component
    /// vertex sets never contain `u`; ordered by smallest vertex id.
    pub fn components_without_vertex(&self, u: usize) -> Result<Vec<Vec<usize>>> {
        self.check_vertex(u)?;
        if self.n == 1 {
            return Ok(Vec::new());
        }
        let edges: Vec<Vec<usize>> = self
            .edges
            .iter()
            .map(|e| {
                e.iter()
                    .copied()
                    .filter(|&v| v != u)
                    .map(|v| if v > u { v - 1 } else { v })
                    .collect::<Vec<usize>>()
            })
            .filter(|e| e.len() >= 2)
            .collect();
        let g = Hypergraph {
            n: self.n - 1,
            edges,
        };
        let unshift = |v: usize| if v >= u { v + 1 } else { v };
        Ok(g.components()
            .into_iter()
            .map(|comp| comp.into_iter().map(unshift).collect())
            .collect())
    }

    /// True iff the hypergraph is connected and contains no loose cycle:
    /// every two edges meet in at most one vertex and the edge sizes satisfy
    /// the tree identity `sum(|e| - 1) = n - 1`.
    pub fn is_hypertree(&self) -> bool {
        for i in 0..self.edges.len() {
            for j in i + 1..self.edges.len() {
                let shared = intersection_size(&self.edges[i], &self.edges[j]);
                if shared > 1 {
                    return false;
                }
            }
        }
        let slack: usize = self.edges.iter().map(|e| e.len() - 1).sum();
        slack == self.n - 1 && self.is_connected()
    }

    /// Pendant edges: pairs `(edge index, anchor vertex)` where the anchor
    /// has degree above one and every other vertex of the edge has degree one.
    pub fn pendant_edges(&self) -> Vec<(usize, usize)> {
        let mut deg = vec![0usize; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        let mut out = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            let heavy: Vec<usize> = e.iter().copied().filter(|&v| deg[v] > 1).collect();
            if heavy.len() == 1 {
                out.push((i, heavy[0]));
            }
        }
        out
    }

    /// Matrix of loose-path distances. Errors on disconnected input.
    pub fn distance_matrix(&self) -> Result<DistanceMatrix> {
        let incident = self.incidence_lists();
        let mut d = vec![0u32; self.n * self.n];
        for u in 0..self.n {
            let dist = self.bfs(u, &incident);
            for v in 0..self.n {
                d[u * self.n + v] = dist[v].ok_or(Error::Disconnected)?;
            }
        }
        Ok(DistanceMatrix { n: self.n, d })
    }

    /// The edge list as a set, for order-insensitive comparisons.
    pub fn edge_set(&self) -> BTreeSet<Vec<usize>> {
        self.edges.iter().cloned().collect()
    }

    /// Parses the text format: first non-comment line is the vertex count,
    /// every following non-empty line is one edge of space-separated ids.
    /// Lines starting with `#` are ignored.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut edges: Vec<Vec<usize>> = Vec::new();
        let mut edge_lines: Vec<usize> = Vec::new();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match n {
                None => {
                    let v: usize = line.parse().map_err(|_| Error::Parse {
                        line: line_no,
                        msg: format!("expected vertex count, found {line:?}"),
                    })?;
                    if v == 0 {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: "vertex count must be positive".into(),
                        });
                    }
                    n = Some(v);
                }
                Some(order) => {
                    let mut edge = Vec::new();
                    for tok in line.split_whitespace() {
                        let v: usize = tok.parse().map_err(|_| Error::Parse {
                            line: line_no,
                            msg: format!("invalid vertex id {tok:?}"),
                        })?;
                        if v >= order {
                            return Err(Error::Parse {
                                line: line_no,
                                msg: format!("vertex id {v} out of range for order {order}"),
                            });
                        }
                        edge.push(v);
                    }
                    edge.sort_unstable();
                    edge.dedup();
                    if edge.len() < 2 {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: "edge must contain at least two distinct vertices".into(),
                        });
                    }
                    if !seen.insert(edge.clone()) {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: "duplicate edge".into(),
                        });
                    }
                    edges.push(edge);
                    edge_lines.push(line_no);
                }
            }
        }
        let n = n.ok_or(Error::Parse {
            line: text.lines().count() + 1,
            msg: "missing vertex count".into(),
        })?;
        Self::new(n, edges)
    }

    /// Canonical text form: vertex count, then edges sorted lexicographically
    /// with each edge sorted internally. `parse_text` round-trips it exactly.
    pub fn to_text(&self) -> String {
        let mut edges = self.edges.clone();
        edges.sort();
        let mut out = format!("{}\n", self.n);
        for e in edges {
            let words: Vec<String> = e.iter().map(usize::to_string).collect();
            out.push_str(&words.join(" "));
            out.push('\n');
        }
        out
    }
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let mut i = 0;
    let mut j = 0;
    let mut count = 0;
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Symmetric matrix of pairwise loose-path distances of a connected
/// hypergraph: zero diagonal, off-diagonal entries at least one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    /// Row sum at `u`: the status (transmission) of the vertex.
    pub fn row_sum(&self, u: usize) -> u64 {
        self.d[u * self.n..(u + 1) * self.n]
            .iter()
            .map(|&x| u64::from(x))
            .sum()
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.d.chunks(self.n)
    }
}
