//! Undirected loopless graphs over dense vertex indices `0..vertex_count`.

use crate::error::{Error, Result};

/// An undirected loopless graph. Adjacency is stored as a sorted neighbor
/// list per vertex; the relation is kept symmetric and irreflexive by
/// construction, so equality of two values means equality of edge sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    adj: Vec<Vec<u32>>,
}

impl Graph {
    /// Builds a graph from an edge list. Symmetric closure is applied and
    /// duplicate edges collapse; endpoints must be in range and distinct.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if vertex_count == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let mut adj = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            if u >= vertex_count {
                return Err(Error::VertexOutOfRange {
                    vertex: u,
                    vertex_count,
                });
            }
            if v >= vertex_count {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    vertex_count,
                });
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        for row in &mut adj {
            row.sort_unstable();
            row.dedup();
        }
        Ok(Graph { vertex_count, adj })
    }

    /// Edgeless graph on `vertex_count` vertices.
    pub fn empty(vertex_count: usize) -> Result<Graph> {
        Graph::from_edges(vertex_count, &[])
    }

    /// Complete graph on `vertex_count` vertices.
    pub fn complete(vertex_count: usize) -> Result<Graph> {
        if vertex_count == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let adj = (0..vertex_count)
            .map(|v| {
                (0..vertex_count as u32)
                    .filter(|&u| u as usize != v)
                    .collect()
            })
            .collect();
        Ok(Graph { vertex_count, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// All edges as pairs `(u, v)` with `u < v`, lexicographically ordered.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, row)| {
            row.iter()
                .filter(move |&&v| (v as usize) > u)
                .map(move |&v| (u, v as usize))
        })
    }

    /// Complement graph: `u ~ v` in the output iff `u != v` and not `u ~ v`
    /// here. An involution on edge sets.
    pub fn complement(&self) -> Graph {
        let n = self.vertex_count;
        let adj = (0..n)
            .map(|v| {
                let mut row = Vec::with_capacity(n - 1 - self.adj[v].len());
                let mut nbrs = self.adj[v].iter().copied().peekable();
                for u in 0..n as u32 {
                    if u as usize == v {
                        continue;
                    }
                    if nbrs.peek() == Some(&u) {
                        nbrs.next();
                    } else {
                        row.push(u);
                    }
                }
                row
            })
            .collect();
        Graph {
            vertex_count: n,
            adj,
        }
    }

    /// True if `set` is pairwise non-adjacent. Duplicates are not checked.
    pub fn is_independent_set(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &u)| {
            set[i + 1..].iter().all(|&v| !self.has_edge(u, v))
        })
    }

    /// True if `set` is pairwise adjacent. Duplicates are not checked.
    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &u)| {
            set[i + 1..].iter().all(|&v| self.has_edge(u, v))
        })
    }
}
