//! Graphs with half-edges, the family generators, and the total conflict
//! graph.
//!
//! A half-edge has a single end vertex; two half-edges may later be joined
//! into an ordinary edge between their end vertices. All graphs here are
//! simple (no loops, no parallel edges) and every element carries a stable
//! string label, so colouring certificates can address elements by name and
//! remain diffable across runs.
//!
//! Graph values are immutable: every operation returns a new graph.

mod conflict;
mod format;

pub use conflict::{ElementKind, TotalConflictGraph};

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid label `{0}` (labels are nonempty and contain no whitespace or `#`)")]
    InvalidLabel(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("edge `{edge}` would be a loop at `{vertex}`")]
    LoopEdge { edge: String, vertex: String },
    #[error("edge `{edge}` would duplicate edge `{existing}` between `{u}` and `{v}`")]
    ParallelEdge {
        edge: String,
        existing: String,
        u: String,
        v: String,
    },
    #[error("cannot join half-edge `{0}` with itself")]
    JoinSelf(String),
    #[error("duplicate union prefix `{0}`")]
    DuplicatePrefix(String),
    #[error("{0}")]
    InvalidParameter(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

fn validate_label(label: &str) -> Result<(), GraphError> {
    if label.is_empty() || label.contains(char::is_whitespace) || label.contains('#') {
        return Err(GraphError::InvalidLabel(label.to_string()));
    }
    Ok(())
}

/// Maximum degrees of a graph under the two half-edge conventions.
///
/// Half-edges occupy a colour slot at their end vertex, so they count toward
/// the degree that matters for colouring; the edges-only figure is the
/// maximum degree of the underlying simple graph.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DegreeReport {
    pub max_degree_with_half_edges: usize,
    pub max_degree_edges_only: usize,
}

/// Outcome of the bipartiteness check on the underlying simple graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Bipartiteness {
    Bipartite {
        left: BTreeSet<String>,
        right: BTreeSet<String>,
    },
    /// A closed odd walk witnessing non-bipartiteness, listed as vertices
    /// with consecutive entries (cyclically) joined by edges.
    OddCycle(Vec<String>),
}

/// A simple graph with half-edges. Labels are unique across vertices, edges
/// and half-edges jointly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HalfEdgeGraph {
    vertices: BTreeSet<String>,
    /// edge label -> endpoints, stored in sorted order
    edges: BTreeMap<String, (String, String)>,
    /// half-edge label -> end vertex
    half_edges: BTreeMap<String, String>,
}

impl HalfEdgeGraph {
    pub fn empty() -> Self {
        HalfEdgeGraph {
            vertices: BTreeSet::new(),
            edges: BTreeMap::new(),
            half_edges: BTreeMap::new(),
        }
    }

    /// Builds a graph from parts, validating every invariant: label syntax
    /// and global uniqueness, existing endpoints, no loops, no parallel
    /// edges.
    pub fn new<V, E, H>(vertices: V, edges: E, half_edges: H) -> Result<Self, GraphError>
    where
        V: IntoIterator<Item = String>,
        E: IntoIterator<Item = (String, String, String)>,
        H: IntoIterator<Item = (String, String)>,
    {
        let mut g = HalfEdgeGraph::empty();
        let mut all_labels: BTreeSet<String> = BTreeSet::new();
        let mut claim = |label: &str| -> Result<(), GraphError> {
            validate_label(label)?;
            if !all_labels.insert(label.to_string()) {
                return Err(GraphError::DuplicateLabel(label.to_string()));
            }
            Ok(())
        };

        for v in vertices {
            claim(&v)?;
            g.vertices.insert(v);
        }
        let mut seen_pairs: BTreeMap<(String, String), String> = BTreeMap::new();
        for (label, u, v) in edges {
            claim(&label)?;
            for end in [&u, &v] {
                if !g.vertices.contains(end) {
                    return Err(GraphError::UnknownLabel(end.clone()));
                }
            }
            if u == v {
                return Err(GraphError::LoopEdge {
                    edge: label,
                    vertex: u,
                });
            }
            let pair = if u <= v {
                (u.clone(), v.clone())
            } else {
                (v.clone(), u.clone())
            };
            if let Some(existing) = seen_pairs.get(&pair) {
                return Err(GraphError::ParallelEdge {
                    edge: label,
                    existing: existing.clone(),
                    u: pair.0,
                    v: pair.1,
                });
            }
            seen_pairs.insert(pair.clone(), label.clone());
            g.edges.insert(label, pair);
        }
        for (label, v) in half_edges {
            claim(&label)?;
            if !g.vertices.contains(&v) {
                return Err(GraphError::UnknownLabel(v));
            }
            g.half_edges.insert(label, v);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn half_edge_count(&self) -> usize {
        self.half_edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = &str> {
        self.vertices.iter().map(|s| s.as_str())
    }

    pub fn edges(&self) -> impl Iterator<Item = (&str, (&str, &str))> {
        self.edges
            .iter()
            .map(|(l, (u, v))| (l.as_str(), (u.as_str(), v.as_str())))
    }

    pub fn half_edges(&self) -> impl Iterator<Item = (&str, &str)> {
        self.half_edges.iter().map(|(l, v)| (l.as_str(), v.as_str()))
    }

    pub fn has_vertex(&self, label: &str) -> bool {
        self.vertices.contains(label)
    }

    pub fn half_edge_endpoint(&self, label: &str) -> Option<&str> {
        self.half_edges.get(label).map(|s| s.as_str())
    }

    pub fn edge_endpoints(&self, label: &str) -> Option<(&str, &str)> {
        self.edges.get(label).map(|(u, v)| (u.as_str(), v.as_str()))
    }

    pub fn edge_between(&self, u: &str, v: &str) -> Option<&str> {
        self.edges
            .iter()
            .find(|(_, (a, b))| (a == u && b == v) || (a == v && b == u))
            .map(|(l, _)| l.as_str())
    }

    /// Degree counting both edges and half-edges at `v`.
    pub fn degree(&self, v: &str) -> usize {
        self.edge_degree(v) + self.half_edges.values().filter(|w| *w == v).count()
    }

    /// Degree counting edges only.
    pub fn edge_degree(&self, v: &str) -> usize {
        self.edges
            .values()
            .filter(|(a, b)| a == v || b == v)
            .count()
    }

    pub fn degree_report(&self) -> DegreeReport {
        let mut with = 0;
        let mut without = 0;
        for v in &self.vertices {
            with = with.max(self.degree(v));
            without = without.max(self.edge_degree(v));
        }
        DegreeReport {
            max_degree_with_half_edges: with,
            max_degree_edges_only: without,
        }
    }

    /// Removes the half-edges `h1` and `h2` and adds one new edge joining
    /// their end vertices. Fails if the endpoints coincide (loop) or are
    /// already joined by an edge.
    pub fn join_half_edges(
        &self,
        h1: &str,
        h2: &str,
        new_edge: &str,
    ) -> Result<Self, GraphError> {
        if h1 == h2 {
            return Err(GraphError::JoinSelf(h1.to_string()));
        }
        let u = self
            .half_edges
            .get(h1)
            .ok_or_else(|| GraphError::UnknownLabel(h1.to_string()))?
            .clone();
        let v = self
            .half_edges
            .get(h2)
            .ok_or_else(|| GraphError::UnknownLabel(h2.to_string()))?
            .clone();
        if u == v {
            return Err(GraphError::LoopEdge {
                edge: new_edge.to_string(),
                vertex: u,
            });
        }
        if let Some(existing) = self.edge_between(&u, &v) {
            return Err(GraphError::ParallelEdge {
                edge: new_edge.to_string(),
                existing: existing.to_string(),
                u,
                v,
            });
        }
        let vertices = self.vertices.iter().cloned();
        let edges = self
            .edges
            .iter()
            .map(|(l, (a, b))| (l.clone(), a.clone(), b.clone()))
            .chain(std::iter::once((new_edge.to_string(), u, v)));
        let half_edges = self
            .half_edges
            .iter()
            .filter(|(l, _)| l.as_str() != h1 && l.as_str() != h2)
            .map(|(l, w)| (l.clone(), w.clone()));
        HalfEdgeGraph::new(vertices, edges, half_edges)
    }

    /// Disjoint union; every element of part `i` is relabelled
    /// `"{prefix_i}.{label}"`. Prefixes must be pairwise distinct.
    pub fn disjoint_union(parts: &[(&str, &HalfEdgeGraph)]) -> Result<Self, GraphError> {
        let mut seen = BTreeSet::new();
        for (prefix, _) in parts {
            validate_label(prefix)?;
            if !seen.insert(*prefix) {
                return Err(GraphError::DuplicatePrefix(prefix.to_string()));
            }
        }
        let renamed: Vec<HalfEdgeGraph> = parts
            .iter()
            .map(|(prefix, g)| g.renamed(|l| format!("{prefix}.{l}")))
            .collect::<Result<_, _>>()?;
        Self::merge_parts(&renamed)
    }

    /// Merges graphs whose label sets are already disjoint.
    pub(crate) fn merge_parts(parts: &[HalfEdgeGraph]) -> Result<Self, GraphError> {
        HalfEdgeGraph::new(
            parts.iter().flat_map(|g| g.vertices.iter().cloned()),
            parts.iter().flat_map(|g| {
                g.edges
                    .iter()
                    .map(|(l, (u, v))| (l.clone(), u.clone(), v.clone()))
            }),
            parts
                .iter()
                .flat_map(|g| g.half_edges.iter().map(|(l, v)| (l.clone(), v.clone()))),
        )
    }

    /// Rebuilds the graph with every label passed through `f`.
    pub(crate) fn renamed(
        &self,
        f: impl Fn(&str) -> String,
    ) -> Result<HalfEdgeGraph, GraphError> {
        HalfEdgeGraph::new(
            self.vertices.iter().map(|v| f(v)),
            self.edges.iter().map(|(l, (u, v))| (f(l), f(u), f(v))),
            self.half_edges.iter().map(|(l, v)| (f(l), f(v))),
        )
    }

    fn vertex_adjacency(&self) -> BTreeMap<&str, Vec<&str>> {
        let mut adj: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
        for v in &self.vertices {
            adj.insert(v.as_str(), Vec::new());
        }
        for (u, v) in self.edges.values() {
            adj.get_mut(u.as_str()).unwrap().push(v.as_str());
            adj.get_mut(v.as_str()).unwrap().push(u.as_str());
        }
        adj
    }

    /// Two-colours the underlying simple graph (half-edges ignored), or
    /// returns an odd cycle.
    pub fn bipartiteness(&self) -> Bipartiteness {
        let adj = self.vertex_adjacency();
        let mut side: BTreeMap<&str, bool> = BTreeMap::new();
        let mut parent: BTreeMap<&str, &str> = BTreeMap::new();

        for root in self.vertices.iter().map(|s| s.as_str()) {
            if side.contains_key(root) {
                continue;
            }
            side.insert(root, false);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let su = side[u];
                for &w in &adj[u] {
                    match side.get(w) {
                        None => {
                            side.insert(w, !su);
                            parent.insert(w, u);
                            queue.push_back(w);
                        }
                        Some(&sw) if sw == su => {
                            return Bipartiteness::OddCycle(odd_cycle(&parent, u, w));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let mut left = BTreeSet::new();
        let mut right = BTreeSet::new();
        for (v, s) in side {
            if s {
                right.insert(v.to_string());
            } else {
                left.insert(v.to_string());
            }
        }
        Bipartiteness::Bipartite { left, right }
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartiteness(), Bipartiteness::Bipartite { .. })
    }

    /// Canonical form for cycles: `Some(m)` iff the underlying simple graph
    /// is a single cycle on `m` vertices (connected, every vertex of edge
    /// degree 2). Two graphs are isomorphic cycles iff these agree.
    pub fn cycle_length(&self) -> Option<usize> {
        let n = self.vertex_count();
        if n < 3 || self.edge_count() != n {
            return None;
        }
        let adj = self.vertex_adjacency();
        if adj.values().any(|nb| nb.len() != 2) {
            return None;
        }
        // connectivity walk
        let start = self.vertices.iter().next()?.as_str();
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        (seen.len() == n).then_some(n)
    }

    /// Writes the graph in the `heg 1` text format.
    pub fn to_heg_string(&self) -> String {
        format::to_heg_string(self)
    }

    /// Parses the `heg 1` text format.
    pub fn from_heg_str(text: &str) -> Result<Self, GraphError> {
        format::from_heg_str(text)
    }

    /// The element-adjacency structure whose proper circular colourings are
    /// exactly the circular total colourings of this graph.
    pub fn conflict_graph(&self) -> TotalConflictGraph {
        TotalConflictGraph::new(self)
    }
}

/// Reconstructs the odd closed walk from BFS parents once the conflicting
/// edge `u -- w` (same side) is found.
fn odd_cycle<'a>(
    parent: &BTreeMap<&'a str, &'a str>,
    u: &'a str,
    w: &'a str,
) -> Vec<String> {
    let ancestors = |mut x: &'a str| {
        let mut path = vec![x];
        while let Some(&p) = parent.get(x) {
            path.push(p);
            x = p;
        }
        path
    };
    let pu = ancestors(u);
    let pw = ancestors(w);
    let in_pu: BTreeSet<&str> = pu.iter().copied().collect();
    let lca = *pw.iter().find(|x| in_pu.contains(**x)).expect("same tree");
    let mut cycle: Vec<String> = pu
        .iter()
        .take_while(|x| **x != lca)
        .map(|s| s.to_string())
        .collect();
    cycle.push(lca.to_string());
    let tail: Vec<String> = pw
        .iter()
        .take_while(|x| **x != lca)
        .map(|s| s.to_string())
        .collect();
    cycle.extend(tail.into_iter().rev());
    cycle
}

fn require(cond: bool, msg: String) -> Result<(), GraphError> {
    if cond {
        Ok(())
    } else {
        Err(GraphError::InvalidParameter(msg))
    }
}

/// Complete bipartite graph `K_{k,k}` with one vertex removed and its `k`
/// incident edges kept as half-edges. Vertices `x1..xk` and `y2..yk`, edges
/// `xiyj`, half-edge `ei` at `xi`.
pub fn hk(k: usize) -> Result<HalfEdgeGraph, GraphError> {
    require(k >= 2, format!("hk requires k >= 2, got {k}"))?;
    let vertices = (1..=k)
        .map(|i| format!("x{i}"))
        .chain((2..=k).map(|j| format!("y{j}")));
    let edges = (1..=k).flat_map(|i| {
        (2..=k).map(move |j| (format!("x{i}y{j}"), format!("x{i}"), format!("y{j}")))
    });
    let half_edges = (1..=k).map(|i| (format!("e{i}"), format!("x{i}")));
    HalfEdgeGraph::new(vertices, edges, half_edges)
}

/// `hk(k)` with all half-edges removed except `e{keep.0}` and `e{keep.1}`.
pub fn hprime_keep(k: usize, keep: (usize, usize)) -> Result<HalfEdgeGraph, GraphError> {
    let (a, b) = keep;
    require(
        a != b && (1..=k).contains(&a) && (1..=k).contains(&b),
        format!("hprime keep indices must be distinct and in 1..={k}, got ({a},{b})"),
    )?;
    let g = hk(k)?;
    let kept = [format!("e{a}"), format!("e{b}")];
    HalfEdgeGraph::new(
        g.vertices.iter().cloned(),
        g.edges
            .iter()
            .map(|(l, (u, v))| (l.clone(), u.clone(), v.clone())),
        g.half_edges
            .iter()
            .filter(|(l, _)| kept.contains(l))
            .map(|(l, v)| (l.clone(), v.clone())),
    )
}

/// `hprime_keep` with the default kept pair `(1, k)`.
pub fn hprime(k: usize) -> Result<HalfEdgeGraph, GraphError> {
    hk(k)?; // surface the k < 2 error first
    hprime_keep(k, (1, k))
}

/// Chain of `n` blocks isomorphic to `hprime(k)` closed through one extra
/// vertex `u`. Block `i` is labelled `Bi.*`; its half-edge at `xk` becomes
/// the outgoing `f{i}` and the one at `x1` the incoming `f'{i}`; joining
/// `f{i}` with `f'{i+1}` forms the edge `e{i}` for `0 <= i <= n`. The result
/// has no half-edges and maximum degree `k`.
pub fn gkn(k: usize, n: usize) -> Result<HalfEdgeGraph, GraphError> {
    require(k >= 2, format!("gkn requires k >= 2, got {k}"))?;
    require(n >= 1, format!("gkn requires n >= 1, got {n}"))?;
    let block = hprime(k)?;
    let ek = format!("e{k}");
    let mut parts = Vec::with_capacity(n + 1);
    for i in 1..=n {
        parts.push(block.renamed(|l| {
            if l == "e1" {
                format!("f'{i}")
            } else if l == ek {
                format!("f{i}")
            } else {
                format!("B{i}.{l}")
            }
        })?);
    }
    parts.push(HalfEdgeGraph::new(
        ["u".to_string()],
        [],
        [
            ("f0".to_string(), "u".to_string()),
            (format!("f'{}", n + 1), "u".to_string()),
        ],
    )?);
    let mut g = HalfEdgeGraph::merge_parts(&parts)?;
    for i in 0..=n {
        g = g.join_half_edges(&format!("f{i}"), &format!("f'{}", i + 1), &format!("e{i}"))?;
    }
    Ok(g)
}

/// Cycle on `m >= 3` vertices.
pub fn cycle(m: usize) -> Result<HalfEdgeGraph, GraphError> {
    require(m >= 3, format!("cycle requires m >= 3, got {m}"))?;
    let vertices = (0..m).map(|i| format!("v{i}"));
    let edges = (0..m).map(|i| {
        let j = (i + 1) % m;
        (format!("v{i}v{j}"), format!("v{i}"), format!("v{j}"))
    });
    HalfEdgeGraph::new(vertices, edges, [])
}

/// Moebius ladder on `2n` vertices (`n >= 2`): a `2n`-cycle plus the `n`
/// main diagonals. 3-regular.
pub fn moebius(n: usize) -> Result<HalfEdgeGraph, GraphError> {
    require(n >= 2, format!("moebius requires n >= 2, got {n}"))?;
    let m = 2 * n;
    let vertices = (0..m).map(|i| format!("v{i}"));
    let ring = (0..m).map(|i| {
        let j = (i + 1) % m;
        (format!("v{i}v{j}"), format!("v{i}"), format!("v{j}"))
    });
    let chords = (0..n).map(|i| {
        let j = i + n;
        (format!("v{i}v{j}"), format!("v{i}"), format!("v{j}"))
    });
    HalfEdgeGraph::new(vertices, ring.chain(chords), [])
}

/// Prism over the `m`-cycle (`K_2` box `C_m`, `m >= 3`): two `m`-cycles
/// joined by a perfect matching. 3-regular.
pub fn prism(m: usize) -> Result<HalfEdgeGraph, GraphError> {
    require(m >= 3, format!("prism requires m >= 3, got {m}"))?;
    let vertices = (0..m)
        .map(|i| format!("u{i}"))
        .chain((0..m).map(|i| format!("w{i}")));
    let edges = (0..m)
        .flat_map(|i| {
            let j = (i + 1) % m;
            [
                (format!("u{i}u{j}"), format!("u{i}"), format!("u{j}")),
                (format!("w{i}w{j}"), format!("w{i}"), format!("w{j}")),
            ]
        })
        .chain((0..m).map(|i| (format!("u{i}w{i}"), format!("u{i}"), format!("w{i}"))));
    HalfEdgeGraph::new(vertices, edges, [])
}

/// Complete bipartite graph `K_{a,b}` (`a, b >= 1`).
pub fn complete_bipartite(a: usize, b: usize) -> Result<HalfEdgeGraph, GraphError> {
    require(
        a >= 1 && b >= 1,
        format!("complete_bipartite requires a, b >= 1, got ({a},{b})"),
    )?;
    let vertices = (1..=a)
        .map(|i| format!("a{i}"))
        .chain((1..=b).map(|j| format!("b{j}")));
    let edges = (1..=a)
        .flat_map(|i| (1..=b).map(move |j| (format!("a{i}b{j}"), format!("a{i}"), format!("b{j}"))));
    HalfEdgeGraph::new(vertices, edges, [])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn join_smallest_case() {
        let g = HalfEdgeGraph::new(
            ["a".into(), "b".into()],
            [],
            [("h".into(), "a".into()), ("h'".into(), "b".into())],
        )
        .unwrap();
        let joined = g.join_half_edges("h", "h'", "ab").unwrap();
        assert_eq!(joined.edge_count(), 1);
        assert_eq!(joined.half_edge_count(), 0);
        assert_eq!(joined.edge_endpoints("ab"), Some(("a", "b")));
    }

    #[test]
    fn join_rejects_bad_inputs() {
        let g = HalfEdgeGraph::new(
            ["a".into(), "b".into()],
            [("ab".into(), "a".into(), "b".into())],
            [
                ("h".into(), "a".into()),
                ("i".into(), "a".into()),
                ("j".into(), "b".into()),
            ],
        )
        .unwrap();
        assert_eq!(
            g.join_half_edges("h", "h", "x"),
            Err(GraphError::JoinSelf("h".into()))
        );
        assert!(matches!(
            g.join_half_edges("h", "i", "x"),
            Err(GraphError::LoopEdge { .. })
        ));
        assert!(matches!(
            g.join_half_edges("h", "j", "x"),
            Err(GraphError::ParallelEdge { .. })
        ));
        assert_eq!(
            g.join_half_edges("h", "nope", "x"),
            Err(GraphError::UnknownLabel("nope".into()))
        );
    }

    #[test]
    fn union_counts_and_errors() {
        let single = HalfEdgeGraph::new(["v".into()], [], []).unwrap();
        let two = HalfEdgeGraph::disjoint_union(&[("A", &single), ("B", &single)]).unwrap();
        assert_eq!((two.vertex_count(), two.edge_count()), (2, 0));
        assert!(two.has_vertex("A.v") && two.has_vertex("B.v"));

        assert_eq!(
            HalfEdgeGraph::disjoint_union(&[("A", &single), ("A", &single)]),
            Err(GraphError::DuplicatePrefix("A".into()))
        );

        let empty = HalfEdgeGraph::disjoint_union(&[]).unwrap();
        assert_eq!(empty.vertex_count(), 0);
    }

    #[test]
    fn union_of_blocks_matches_counts() {
        // n copies of hprime(3) plus a one-vertex block with two half-edges:
        // 5n+1 vertices, 6n edges, 2n+2 half-edges.
        let n = 3;
        let block = hprime(3).unwrap();
        let b0 = HalfEdgeGraph::new(
            ["u".into()],
            [],
            [("f".into(), "u".into()), ("f'".into(), "u".into())],
        )
        .unwrap();
        let prefixes: Vec<String> = (1..=n).map(|i| format!("B{i}")).collect();
        let mut parts: Vec<(&str, &HalfEdgeGraph)> = prefixes
            .iter()
            .map(|p| (p.as_str(), &block))
            .collect();
        parts.push(("B0", &b0));
        let g = HalfEdgeGraph::disjoint_union(&parts).unwrap();
        assert_eq!(g.vertex_count(), 5 * n + 1);
        assert_eq!(g.edge_count(), 6 * n);
        assert_eq!(g.half_edge_count(), 2 * n + 2);
    }

    #[test]
    fn hk_structure() {
        let g = hk(2).unwrap();
        assert_eq!(g.vertices().collect::<Vec<_>>(), vec!["x1", "x2", "y2"]);
        assert_eq!(
            g.edges().map(|(l, _)| l).collect::<Vec<_>>(),
            vec!["x1y2", "x2y2"]
        );
        assert_eq!(
            g.half_edges().collect::<Vec<_>>(),
            vec![("e1", "x1"), ("e2", "x2")]
        );

        let g3 = hk(3).unwrap();
        assert_eq!(
            (g3.vertex_count(), g3.edge_count(), g3.half_edge_count()),
            (5, 6, 3)
        );

        assert!(matches!(hk(1), Err(GraphError::InvalidParameter(_))));
    }

    #[test]
    fn hk_degree_invariants() {
        for k in 2..=10 {
            let g = hk(k).unwrap();
            assert_eq!(g.vertex_count(), 2 * k - 1);
            assert_eq!(g.edge_count(), k * (k - 1));
            assert_eq!(g.half_edge_count(), k);
            for j in 2..=k {
                assert_eq!(g.degree(&format!("y{j}")), k);
            }
            for i in 1..=k {
                let x = format!("x{i}");
                assert_eq!(g.edge_degree(&x), k - 1);
                assert_eq!(g.degree(&x), k);
            }
        }
    }

    #[test]
    fn hprime_cases() {
        assert_eq!(hprime(2).unwrap(), hk(2).unwrap());
        let g = hprime_keep(3, (1, 3)).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 6));
        assert_eq!(
            g.half_edges().map(|(l, _)| l).collect::<Vec<_>>(),
            vec!["e1", "e3"]
        );
        assert!(hprime_keep(4, (4, 4)).is_err());
        assert!(hprime_keep(4, (0, 2)).is_err());
    }

    #[test]
    fn gkn_structure() {
        let g = gkn(2, 1).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 4));
        assert_eq!(g.cycle_length(), Some(4));

        let g = gkn(3, 2).unwrap();
        assert_eq!(
            (g.vertex_count(), g.edge_count(), g.half_edge_count()),
            (11, 15, 0)
        );
        assert!(g.has_vertex("u") && g.has_vertex("B2.x3"));
        assert!(g.edge_endpoints("e0").is_some());

        let g = gkn(3, 1).unwrap();
        assert_eq!(g.degree_report().max_degree_with_half_edges, 3);

        assert!(gkn(1, 1).is_err());
        assert!(gkn(3, 0).is_err());
    }

    #[test]
    fn gkn_count_invariants() {
        for k in 2..=6 {
            for n in 1..=4 {
                let g = gkn(k, n).unwrap();
                assert_eq!(g.half_edge_count(), 0);
                assert_eq!(g.vertex_count(), n * (2 * k - 1) + 1);
                assert_eq!(g.edge_count(), n * k * (k - 1) + n + 1);
                assert_eq!(g.degree_report().max_degree_with_half_edges, k);
            }
        }
    }

    #[test]
    fn classic_families() {
        let c7 = cycle(7).unwrap();
        assert_eq!((c7.vertex_count(), c7.edge_count()), (7, 7));
        assert!(c7.vertices().all(|v| c7.degree(v) == 2));

        let p5 = prism(5).unwrap();
        assert_eq!((p5.vertex_count(), p5.edge_count()), (10, 15));
        assert!(p5.vertices().all(|v| p5.degree(v) == 3));

        let v8 = moebius(4).unwrap();
        assert_eq!((v8.vertex_count(), v8.edge_count()), (8, 12));
        assert!(v8.vertices().all(|v| v8.degree(v) == 3));

        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!((k23.vertex_count(), k23.edge_count()), (5, 6));

        assert!(cycle(2).is_err());
        assert!(moebius(1).is_err());
        assert!(prism(2).is_err());
        assert!(complete_bipartite(0, 1).is_err());
    }

    #[test]
    fn bipartiteness_checks() {
        assert!(gkn(3, 1).unwrap().is_bipartite());
        assert!(!gkn(3, 2).unwrap().is_bipartite());
        match cycle(5).unwrap().bipartiteness() {
            Bipartiteness::OddCycle(c) => assert_eq!(c.len() % 2, 1),
            _ => panic!("C5 is not bipartite"),
        }
    }

    #[test]
    fn odd_cycle_witness_is_a_cycle() {
        let g = gkn(4, 2).unwrap();
        match g.bipartiteness() {
            Bipartiteness::OddCycle(c) => {
                assert!(c.len() >= 3 && c.len() % 2 == 1);
                for i in 0..c.len() {
                    let j = (i + 1) % c.len();
                    assert!(
                        g.edge_between(&c[i], &c[j]).is_some(),
                        "missing edge {} -- {}",
                        c[i],
                        c[j]
                    );
                }
                let distinct: BTreeSet<&String> = c.iter().collect();
                assert_eq!(distinct.len(), c.len());
            }
            _ => panic!("gkn(4,2) is not bipartite"),
        }
    }

    #[test]
    fn cycle_canonical_form() {
        assert_eq!(cycle(7).unwrap().cycle_length(), Some(7));
        assert_eq!(hk(3).unwrap().cycle_length(), None);
        assert_eq!(prism(3).unwrap().cycle_length(), None);
        for n in 1..=5 {
            assert_eq!(gkn(2, n).unwrap().cycle_length(), Some(3 * n + 1));
        }
    }

    #[test]
    fn new_validates_invariants() {
        assert!(matches!(
            HalfEdgeGraph::new(
                ["a".into()],
                [("aa".into(), "a".into(), "a".into())],
                []
            ),
            Err(GraphError::LoopEdge { .. })
        ));
        assert!(matches!(
            HalfEdgeGraph::new(["a".into(), "a".into()], [], []),
            Err(GraphError::DuplicateLabel(_))
        ));
        assert!(matches!(
            HalfEdgeGraph::new(["a b".into()], [], []),
            Err(GraphError::InvalidLabel(_))
        ));
        assert!(matches!(
            HalfEdgeGraph::new([], [], [("h".into(), "v".into())]),
            Err(GraphError::UnknownLabel(_))
        ));
    }
}
