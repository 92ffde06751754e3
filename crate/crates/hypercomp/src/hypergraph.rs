use std::collections::HashMap;

use crate::error::{Error, Result};

/// A finite hypergraph: an ordered vertex set plus a set of hyperedges,
/// each a set of at least two vertices. Isolated vertices are allowed,
/// loops (singleton edges) are not.
///
/// Vertex ids are opaque strings; internally each vertex gets a dense
/// index in declaration order. Hyperedges are stored canonically
/// (members sorted, edge list sorted by member names) so the edge set
/// is deterministic regardless of insertion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertices: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<Vec<usize>>,
}

impl Default for Hypergraph {
    fn default() -> Self {
        Self::new()
    }
}

impl Hypergraph {
    pub fn new() -> Self {
        Hypergraph {
            vertices: Vec::new(),
            index: HashMap::new(),
            edges: Vec::new(),
        }
    }

    /// Declare a vertex, returning its index. Idempotent.
    pub fn ensure_vertex(&mut self, name: &str) -> usize {
        if let Some(&i) = self.index.get(name) {
            return i;
        }
        let i = self.vertices.len();
        self.vertices.push(name.to_string());
        self.index.insert(name.to_string(), i);
        i
    }

    /// Add a hyperedge given by vertex names. Undeclared names are
    /// declared in order of first appearance. Duplicate edges collapse.
    pub fn add_edge<S: AsRef<str>>(&mut self, members: &[S]) -> Result<()> {
        if members.len() < 2 {
            return Err(Error::Precondition(
                "hyperedges must have at least two vertices (no loops)".into(),
            ));
        }
        let mut ids: Vec<usize> = members.iter().map(|m| self.ensure_vertex(m.as_ref())).collect();
        ids.sort_unstable();
        ids.dedup();
        if ids.len() < members.len() {
            return Err(Error::Precondition(
                "hyperedge members must be distinct".into(),
            ));
        }
        self.add_edge_ids(ids);
        Ok(())
    }

    /// Add an edge of already-declared vertex indices (must be sorted, distinct, len >= 2).
    pub(crate) fn add_edge_ids(&mut self, ids: Vec<usize>) {
        debug_assert!(ids.len() >= 2);
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        if self.edges.iter().any(|e| *e == ids) {
            return;
        }
        self.edges.push(ids);
        self.canonicalize_edges();
    }

    fn canonicalize_edges(&mut self) {
        let names: Vec<Vec<&str>> = self
            .edges
            .iter()
            .map(|e| {
                let mut ns: Vec<&str> = e.iter().map(|&i| self.vertices[i].as_str()).collect();
                ns.sort_unstable();
                ns
            })
            .collect();
        let mut order: Vec<usize> = (0..self.edges.len()).collect();
        order.sort_by(|&a, &b| names[a].cmp(&names[b]));
        self.edges = order.iter().map(|&i| self.edges[i].clone()).collect();
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_id(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn vertex_name(&self, id: usize) -> &str {
        &self.vertices[id]
    }

    /// Edges as sorted index lists, in canonical order.
    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Members of edge `e` as names, sorted lexicographically.
    pub fn edge_names(&self, e: usize) -> Vec<String> {
        let mut ns: Vec<String> = self.edges[e].iter().map(|&i| self.vertices[i].clone()).collect();
        ns.sort();
        ns
    }

    pub fn contains_edge(&self, ids: &[usize]) -> bool {
        let mut sorted = ids.to_vec();
        sorted.sort_unstable();
        self.edges.iter().any(|e| *e == sorted)
    }

    /// Number of hyperedges containing the named vertex.
    pub fn degree(&self, v: &str) -> Result<usize> {
        let id = self
            .vertex_id(v)
            .ok_or_else(|| Error::UnknownVertex(v.to_string()))?;
        Ok(self.degree_of(id))
    }

    pub fn degree_of(&self, id: usize) -> usize {
        self.edges.iter().filter(|e| e.binary_search(&id).is_ok()).count()
    }

    pub fn is_isolated(&self, id: usize) -> bool {
        self.degree_of(id) == 0
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&i| self.is_isolated(i)).collect()
    }

    /// Common size of all hyperedges, if the hypergraph is r-uniform
    /// with a nonempty edge set.
    pub fn uniformity(&self) -> Option<usize> {
        let first = self.edges.first()?.len();
        if self.edges.iter().all(|e| e.len() == first) {
            Some(first)
        } else {
            None
        }
    }

    /// Connected components as vertex-index blocks, ordered by the
    /// smallest declaration index they contain. Isolated vertices are
    /// singleton blocks.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut comp = vec![usize::MAX; n];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let c = blocks.len();
            let mut block = vec![start];
            comp[start] = c;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for e in &self.edges {
                    if e.binary_search(&v).is_err() {
                        continue;
                    }
                    for &u in e {
                        if comp[u] == usize::MAX {
                            comp[u] = c;
                            block.push(u);
                            queue.push(u);
                        }
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        blocks
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Berge's counting criterion: no cycle iff sum(|e|-1) = |V| - p
    /// where p is the number of connected components.
    pub fn has_no_cycle(&self) -> bool {
        let total: usize = self.edges.iter().map(|e| e.len() - 1).sum();
        let p = self.connected_components().len();
        total == self.vertex_count() - p
    }

    /// Exhaustive definitional cycle search. A cycle is a sequence
    /// v0 v1 ... vk with v0..v_{k-1} distinct, v0 = vk, k >= 2, and k
    /// distinct hyperedges e_i with {v_{i-1}, v_i} in e_i. Guarded to
    /// small instances; cross-validates `has_no_cycle`.
    pub fn find_cycle_bruteforce(&self) -> Result<Option<CyclePath>> {
        if self.vertex_count() > 10 || self.edge_count() > 8 {
            return Err(Error::Resource(format!(
                "find_cycle_bruteforce supports |V| <= 10, |E| <= 8 (got {}, {})",
                self.vertex_count(),
                self.edge_count()
            )));
        }
        let n = self.vertex_count();
        let m = self.edge_count();
        // edges_with[u][v] = bitmask of edges containing both u and v
        let mut pair_edges = vec![vec![0u32; n]; n];
        for (ei, e) in self.edges.iter().enumerate() {
            for (a, &u) in e.iter().enumerate() {
                for &v in &e[a + 1..] {
                    pair_edges[u][v] |= 1 << ei;
                    pair_edges[v][u] |= 1 << ei;
                }
            }
        }
        for start in 0..n {
            let mut seq = vec![start];
            let mut edge_seq: Vec<usize> = Vec::new();
            if let Some(cycle) =
                self.cycle_dfs(start, &mut seq, &mut edge_seq, 1 << start, 0, &pair_edges, m)
            {
                return Ok(Some(cycle));
            }
        }
        Ok(None)
    }

    #[allow(clippy::too_many_arguments)]
    fn cycle_dfs(
        &self,
        start: usize,
        seq: &mut Vec<usize>,
        edge_seq: &mut Vec<usize>,
        visited: u32,
        used_edges: u32,
        pair_edges: &[Vec<u32>],
        m: usize,
    ) -> Option<CyclePath> {
        let last = *seq.last().unwrap();
        // close the cycle: needs length >= 2 and a fresh edge back to start
        if seq.len() >= 2 {
            let back = pair_edges[last][start] & !used_edges;
            if back != 0 {
                let ei = back.trailing_zeros() as usize;
                let mut vs: Vec<String> = seq.iter().map(|&v| self.vertices[v].clone()).collect();
                vs.push(self.vertices[start].clone());
                let mut es: Vec<Vec<String>> =
                    edge_seq.iter().map(|&e| self.edge_names(e)).collect();
                es.push(self.edge_names(ei));
                return Some(CyclePath {
                    vertex_sequence: vs,
                    edge_sequence: es,
                });
            }
        }
        for next in 0..pair_edges.len() {
            if visited & (1 << next) != 0 {
                continue;
            }
            let avail = pair_edges[last][next] & !used_edges;
            for ei in 0..m {
                if avail & (1 << ei) == 0 {
                    continue;
                }
                seq.push(next);
                edge_seq.push(ei);
                if let Some(c) = self.cycle_dfs(
                    start,
                    seq,
                    edge_seq,
                    visited | (1 << next),
                    used_edges | (1 << ei),
                    pair_edges,
                    m,
                ) {
                    return Some(c);
                }
                seq.pop();
                edge_seq.pop();
            }
        }
        None
    }

    /// The subhypergraph with the same vertices but only the given edges.
    pub fn spanning_with_edges(&self, edge_ids: &[usize]) -> Hypergraph {
        let mut h = Hypergraph::new();
        for v in &self.vertices {
            h.ensure_vertex(v);
        }
        for &ei in edge_ids {
            h.add_edge_ids(self.edges[ei].clone());
        }
        h
    }

    /// Copy without the isolated vertices, plus the names removed.
    pub fn without_isolated(&self) -> (Hypergraph, Vec<String>) {
        let isolated: Vec<String> = self
            .isolated_vertices()
            .into_iter()
            .map(|i| self.vertices[i].clone())
            .collect();
        let mut h = Hypergraph::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if !self.is_isolated(i) {
                h.ensure_vertex(v);
            }
        }
        for e in &self.edges {
            let names: Vec<&str> = e.iter().map(|&i| self.vertices[i].as_str()).collect();
            h.add_edge(&names).expect("valid edge");
        }
        (h, isolated)
    }

    /// The subhypergraph induced by a vertex subset: those vertices and
    /// every edge fully contained in the subset.
    pub fn induced(&self, vertex_ids: &[usize]) -> Hypergraph {
        let mut keep = vertex_ids.to_vec();
        keep.sort_unstable();
        let mut h = Hypergraph::new();
        for &i in &keep {
            h.ensure_vertex(&self.vertices[i]);
        }
        for e in &self.edges {
            if e.iter().all(|v| keep.binary_search(v).is_ok()) {
                let names: Vec<&str> = e.iter().map(|&i| self.vertices[i].as_str()).collect();
                h.add_edge(&names).expect("valid edge");
            }
        }
        h
    }
}

/// A path or cycle in the paper's sense: a vertex sequence together
/// with distinct hyperedges covering each consecutive pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclePath {
    pub vertex_sequence: Vec<String>,
    pub edge_sequence: Vec<Vec<String>>,
}
