//! The total conflict graph: one node per vertex, edge and half-edge, with
//! adjacency exactly where a total colouring forbids equal colours.

use std::collections::{BTreeMap, BTreeSet};

use super::HalfEdgeGraph;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ElementKind {
    Vertex,
    Edge,
    HalfEdge,
}

/// Element-adjacency structure of a [`HalfEdgeGraph`]:
///
/// - two vertices are adjacent iff an edge joins them;
/// - a vertex is adjacent to every edge and half-edge it is an endpoint of;
/// - two edges or half-edges are adjacent iff they share an endpoint.
///
/// Elements are ordered by label, so identical graphs always produce the
/// identical conflict graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TotalConflictGraph {
    labels: Vec<String>,
    kinds: Vec<ElementKind>,
    adj: Vec<Vec<u32>>,
    pairs: Vec<(u32, u32)>,
}

impl TotalConflictGraph {
    pub fn new(g: &HalfEdgeGraph) -> Self {
        let mut elements: Vec<(String, ElementKind)> = g
            .vertices()
            .map(|v| (v.to_string(), ElementKind::Vertex))
            .chain(g.edges().map(|(l, _)| (l.to_string(), ElementKind::Edge)))
            .chain(
                g.half_edges()
                    .map(|(l, _)| (l.to_string(), ElementKind::HalfEdge)),
            )
            .collect();
        elements.sort_by(|a, b| a.0.cmp(&b.0));
        let labels: Vec<String> = elements.iter().map(|(l, _)| l.clone()).collect();
        let kinds: Vec<ElementKind> = elements.iter().map(|(_, k)| *k).collect();
        let index: BTreeMap<&str, u32> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i as u32))
            .collect();

        let mut pair_set: BTreeSet<(u32, u32)> = BTreeSet::new();
        let mut add = |a: u32, b: u32| {
            debug_assert_ne!(a, b);
            pair_set.insert((a.min(b), a.max(b)));
        };

        // items (edges and half-edges) incident to each vertex
        let mut incident: BTreeMap<&str, Vec<u32>> = BTreeMap::new();
        for (l, (u, v)) in g.edges() {
            let e = index[l];
            add(index[u], index[v]);
            add(e, index[u]);
            add(e, index[v]);
            incident.entry(u).or_default().push(e);
            incident.entry(v).or_default().push(e);
        }
        for (l, v) in g.half_edges() {
            let h = index[l];
            add(h, index[v]);
            incident.entry(v).or_default().push(h);
        }
        for items in incident.values() {
            for (i, &a) in items.iter().enumerate() {
                for &b in &items[i + 1..] {
                    add(a, b);
                }
            }
        }

        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); labels.len()];
        for &(a, b) in &pair_set {
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        for nbs in &mut adj {
            nbs.sort_unstable();
        }
        TotalConflictGraph {
            labels,
            kinds,
            adj,
            pairs: pair_set.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.labels.iter().map(|s| s.as_str())
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn kind(&self, i: usize) -> ElementKind {
        self.kinds[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels
            .binary_search_by(|l| l.as_str().cmp(label))
            .ok()
    }

    pub fn neighbors(&self, i: usize) -> &[u32] {
        &self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    /// Adjacent element pairs `(i, j)` with `i < j`, in ascending order.
    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i].binary_search(&(j as u32)).is_ok()
    }

    /// Element of maximum degree, ties broken by element order.
    pub fn max_degree_element(&self) -> Option<usize> {
        (0..self.len()).max_by_key(|&i| (self.degree(i), std::cmp::Reverse(i)))
    }
}
