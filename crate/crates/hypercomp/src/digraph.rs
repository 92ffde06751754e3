use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A finite digraph with named vertices and a set of arcs. Self-arcs
/// are rejected (they are one-vertex cycles and no construction emits
/// one). Arc insertion order is preserved for deterministic output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    vertices: Vec<String>,
    index: HashMap<String, usize>,
    arcs: Vec<(usize, usize)>,
}

impl Default for Digraph {
    fn default() -> Self {
        Self::new()
    }
}

impl Digraph {
    pub fn new() -> Self {
        Digraph {
            vertices: Vec::new(),
            index: HashMap::new(),
            arcs: Vec::new(),
        }
    }

    pub fn ensure_vertex(&mut self, name: &str) -> usize {
        if let Some(&i) = self.index.get(name) {
            return i;
        }
        let i = self.vertices.len();
        self.vertices.push(name.to_string());
        self.index.insert(name.to_string(), i);
        i
    }

    pub fn add_arc(&mut self, src: &str, dst: &str) -> Result<()> {
        if src == dst {
            return Err(Error::Precondition(format!("self-arc ({src},{src}) not allowed")));
        }
        let s = self.ensure_vertex(src);
        let d = self.ensure_vertex(dst);
        self.add_arc_ids(s, d);
        Ok(())
    }

    pub(crate) fn add_arc_ids(&mut self, src: usize, dst: usize) {
        debug_assert_ne!(src, dst);
        if !self.arcs.contains(&(src, dst)) {
            self.arcs.push((src, dst));
        }
    }

    pub fn remove_arc_ids(&mut self, src: usize, dst: usize) {
        self.arcs.retain(|&a| a != (src, dst));
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
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

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// In-neighborhood of a vertex, as sorted indices.
    pub fn in_neighborhood(&self, id: usize) -> Vec<usize> {
        let mut ns: Vec<usize> = self
            .arcs
            .iter()
            .filter(|&&(_, d)| d == id)
            .map(|&(s, _)| s)
            .collect();
        ns.sort_unstable();
        ns.dedup();
        ns
    }

    /// Vertices with no in-neighbor, in declaration order.
    pub fn sources(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&v| !self.arcs.iter().any(|&(_, d)| d == v))
            .collect()
    }

    /// Deterministic topological order: among available vertices, the
    /// one with the smallest declaration index comes first. Returns
    /// `None` when the digraph has a cycle.
    pub fn acyclic_ordering(&self) -> Option<AcyclicOrdering> {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for &(_, d) in &self.arcs {
            indeg[d] += 1;
        }
        let mut order = Vec::with_capacity(n);
        let mut done = vec![false; n];
        for _ in 0..n {
            let next = (0..n).find(|&v| !done[v] && indeg[v] == 0)?;
            done[next] = true;
            order.push(self.vertices[next].clone());
            for &(s, d) in &self.arcs {
                if s == next {
                    indeg[d] -= 1;
                }
            }
        }
        Some(AcyclicOrdering { sequence: order })
    }

    pub fn is_acyclic(&self) -> bool {
        self.acyclic_ordering().is_some()
    }

    /// Extract some cycle as a vertex-name sequence v0 ... v0, for
    /// diagnostics. Returns `None` on acyclic digraphs.
    pub fn find_cycle(&self) -> Option<Vec<String>> {
        let n = self.vertices.len();
        // colors: 0 unvisited, 1 on stack, 2 done
        let mut color = vec![0u8; n];
        let mut stack: Vec<usize> = Vec::new();
        for start in 0..n {
            if color[start] != 0 {
                continue;
            }
            if let Some(cycle) = self.cycle_dfs(start, &mut color, &mut stack) {
                return Some(cycle);
            }
        }
        None
    }

    fn cycle_dfs(&self, v: usize, color: &mut [u8], stack: &mut Vec<usize>) -> Option<Vec<String>> {
        color[v] = 1;
        stack.push(v);
        for &(s, d) in &self.arcs {
            if s != v {
                continue;
            }
            if color[d] == 1 {
                let pos = stack.iter().position(|&x| x == d).unwrap();
                let mut cycle: Vec<String> =
                    stack[pos..].iter().map(|&x| self.vertices[x].clone()).collect();
                cycle.push(self.vertices[d].clone());
                return Some(cycle);
            }
            if color[d] == 0 {
                if let Some(c) = self.cycle_dfs(d, color, stack) {
                    return Some(c);
                }
            }
        }
        stack.pop();
        color[v] = 2;
        None
    }

    /// DOT rendering: all vertices as quoted nodes in declaration
    /// order, then arcs in insertion order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph {\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  \"{v}\";");
        }
        for &(s, d) in &self.arcs {
            let _ = writeln!(out, "  \"{}\" -> \"{}\";", self.vertices[s], self.vertices[d]);
        }
        out.push_str("}\n");
        out
    }
}

/// A vertex ordering of a digraph in which every arc points forward.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcyclicOrdering {
    pub sequence: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn topological_order_unique() {
        let mut d = Digraph::new();
        d.add_arc("a", "b").unwrap();
        d.add_arc("b", "c").unwrap();
        let ord = d.acyclic_ordering().unwrap();
        assert_eq!(ord.sequence, vec!["a", "b", "c"]);
    }

    #[test]
    fn two_cycle_has_no_ordering() {
        let mut d = Digraph::new();
        d.add_arc("a", "b").unwrap();
        d.add_arc("b", "a").unwrap();
        assert!(d.acyclic_ordering().is_none());
        let c = d.find_cycle().unwrap();
        assert_eq!(c.first(), c.last());
        assert!(c.len() >= 3);
    }

    #[test]
    fn arc_free_uses_declaration_order() {
        let mut d = Digraph::new();
        d.ensure_vertex("a");
        d.ensure_vertex("b");
        d.ensure_vertex("c");
        let ord = d.acyclic_ordering().unwrap();
        assert_eq!(ord.sequence, vec!["a", "b", "c"]);
    }

    #[test]
    fn self_arc_rejected() {
        let mut d = Digraph::new();
        assert!(d.add_arc("a", "a").is_err());
    }

    #[test]
    fn dot_output_is_deterministic() {
        let mut d = Digraph::new();
        d.ensure_vertex("a");
        d.add_arc("a", "b").unwrap();
        d.ensure_vertex("z");
        assert_eq!(
            d.to_dot(),
            "digraph {\n  \"a\";\n  \"b\";\n  \"z\";\n  \"a\" -> \"b\";\n}\n"
        );
    }
}
