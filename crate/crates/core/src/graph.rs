//! Weighted graphs with boundary: data model, validation, hop distances,
//! geodesic enumeration and the JSON interchange format.
//!
//! Vertices are identified by contiguous indices `0..n`. External string
//! labels are sorted lexicographically on construction, so index order is
//! the canonical order used for serialization.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json::serialize_g17;

pub type VertexId = usize;

/// Default cap on the number of geodesics enumerated between two vertices.
pub const DEFAULT_GEODESIC_LIMIT: usize = 1_000_000;

/// An undirected edge with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub w: f64,
}

/// A simple graph with positive vertex measures, positive edge weights and
/// a distinguished boundary vertex set. Immutable once built.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryGraph {
    labels: Vec<String>,
    measure: Vec<f64>,
    is_boundary: Vec<bool>,
    boundary: Vec<VertexId>,
    interior: Vec<VertexId>,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<(VertexId, f64)>>,
}

/// Collects labelled vertices and edges in any order and validates them
/// into a canonical [`BoundaryGraph`].
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    vertices: Vec<(String, f64, bool)>,
    edges: Vec<(String, String, f64)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(&mut self, label: impl Into<String>, measure: f64, boundary: bool) -> &mut Self {
        self.vertices.push((label.into(), measure, boundary));
        self
    }

    pub fn edge(&mut self, u: impl Into<String>, v: impl Into<String>, weight: f64) -> &mut Self {
        self.edges.push((u.into(), v.into(), weight));
        self
    }

    pub fn build(&self) -> Result<BoundaryGraph> {
        let mut seen = HashSet::new();
        for (i, (label, m, _)) in self.vertices.iter().enumerate() {
            let location = format!("vertices[{i}]");
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateVertex {
                    location,
                    label: label.clone(),
                });
            }
            if !(m.is_finite() && *m > 0.0) {
                return Err(Error::NonPositiveMeasure {
                    location,
                    label: label.clone(),
                    value: *m,
                });
            }
        }

        let mut order: Vec<usize> = (0..self.vertices.len()).collect();
        order.sort_by(|&a, &b| self.vertices[a].0.cmp(&self.vertices[b].0));
        let index: HashMap<&str, VertexId> = order
            .iter()
            .enumerate()
            .map(|(id, &i)| (self.vertices[i].0.as_str(), id))
            .collect();

        let mut edges = Vec::with_capacity(self.edges.len());
        let mut pairs = HashSet::new();
        for (i, (a, b, w)) in self.edges.iter().enumerate() {
            let location = format!("edges[{i}]");
            let lookup = |label: &String| {
                index.get(label.as_str()).copied().ok_or_else(|| Error::UnknownVertex {
                    location: location.clone(),
                    label: label.clone(),
                })
            };
            let (x, y) = (lookup(a)?, lookup(b)?);
            if x == y {
                return Err(Error::Loop {
                    location,
                    label: a.clone(),
                });
            }
            if !(w.is_finite() && *w > 0.0) {
                return Err(Error::NonPositiveWeight {
                    location,
                    u: a.clone(),
                    v: b.clone(),
                    value: *w,
                });
            }
            let (u, v) = (x.min(y), x.max(y));
            if !pairs.insert((u, v)) {
                return Err(Error::DuplicateEdge {
                    location,
                    u: a.clone(),
                    v: b.clone(),
                });
            }
            edges.push(Edge { u, v, w: *w });
        }

        let labels = order.iter().map(|&i| self.vertices[i].0.clone()).collect();
        let measure = order.iter().map(|&i| self.vertices[i].1).collect();
        let is_boundary = order.iter().map(|&i| self.vertices[i].2).collect();
        Ok(BoundaryGraph::assemble(labels, measure, is_boundary, edges))
    }
}

impl BoundaryGraph {
    fn assemble(labels: Vec<String>, measure: Vec<f64>, is_boundary: Vec<bool>, mut edges: Vec<Edge>) -> Self {
        edges.sort_by_key(|e| (e.u, e.v));
        let n = labels.len();
        let mut adjacency = vec![Vec::new(); n];
        for e in &edges {
            adjacency[e.u].push((e.v, e.w));
            adjacency[e.v].push((e.u, e.w));
        }
        for list in &mut adjacency {
            list.sort_by_key(|&(y, _)| y);
        }
        let boundary = (0..n).filter(|&x| is_boundary[x]).collect();
        let interior = (0..n).filter(|&x| !is_boundary[x]).collect();
        Self {
            labels,
            measure,
            is_boundary,
            boundary,
            interior,
            edges,
            adjacency,
        }
    }

    /// Builds a graph on vertices `0..n` given by index. Labels are
    /// zero-padded decimal indices, so canonical order equals index order.
    pub fn from_indexed(measures: &[f64], boundary: &[bool], edges: &[(VertexId, VertexId, f64)]) -> Result<Self> {
        assert_eq!(measures.len(), boundary.len(), "measure and boundary lengths differ");
        let width = measures.len().saturating_sub(1).to_string().len();
        let label = |i: usize| format!("{i:0width$}");
        let mut builder = GraphBuilder::new();
        for (i, (&m, &b)) in measures.iter().zip(boundary).enumerate() {
            builder.vertex(label(i), m, b);
        }
        for &(u, v, w) in edges {
            builder.edge(label(u), label(v), w);
        }
        builder.build()
    }

    /// Unit measures and unit weights.
    pub fn unit(n: usize, boundary: &[VertexId], edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut flags = vec![false; n];
        for &b in boundary {
            flags[b] = true;
        }
        let edges: Vec<_> = edges.iter().map(|&(u, v)| (u, v, 1.0)).collect();
        Self::from_indexed(&vec![1.0; n], &flags, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, x: VertexId) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn find(&self, label: &str) -> Option<VertexId> {
        self.labels.binary_search_by(|l| l.as_str().cmp(label)).ok()
    }

    pub fn measure(&self, x: VertexId) -> f64 {
        self.measure[x]
    }

    pub fn measures(&self) -> &[f64] {
        &self.measure
    }

    pub fn is_boundary(&self, x: VertexId) -> bool {
        self.is_boundary[x]
    }

    /// Boundary vertices in ascending order.
    pub fn boundary(&self) -> &[VertexId] {
        &self.boundary
    }

    /// Interior vertices in ascending order.
    pub fn interior(&self) -> &[VertexId] {
        &self.interior
    }

    /// Edges sorted by `(u, v)`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbours of `x` with edge weights, ascending by id.
    pub fn neighbors(&self, x: VertexId) -> &[(VertexId, f64)] {
        &self.adjacency[x]
    }

    pub fn weight(&self, x: VertexId, y: VertexId) -> Option<f64> {
        self.adjacency[x]
            .binary_search_by_key(&y, |&(z, _)| z)
            .ok()
            .map(|i| self.adjacency[x][i].1)
    }

    /// True when every measure and every weight equals 1.
    pub fn is_unit_weighted(&self) -> bool {
        self.measure.iter().all(|&m| m == 1.0) && self.edges.iter().all(|e| e.w == 1.0)
    }

    /// True when some edge joins two boundary vertices.
    pub fn has_boundary_edge(&self) -> bool {
        self.edges
            .iter()
            .any(|e| self.is_boundary[e.u] && self.is_boundary[e.v])
    }

    pub fn with_scaled_weights(&self, c: f64) -> Self {
        let edges = self.edges.iter().map(|e| Edge { w: e.w * c, ..*e }).collect();
        Self::assemble(
            self.labels.clone(),
            self.measure.clone(),
            self.is_boundary.clone(),
            edges,
        )
    }

    pub fn with_scaled_measures(&self, c: f64) -> Self {
        let measure = self.measure.iter().map(|m| m * c).collect();
        Self::assemble(
            self.labels.clone(),
            measure,
            self.is_boundary.clone(),
            self.edges.clone(),
        )
    }

    /// The subgraph induced on `keep`, preserving labels.
    pub fn induced_subgraph(&self, keep: &[VertexId]) -> Self {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut new_id = vec![usize::MAX; self.vertex_count()];
        for (i, &x) in keep.iter().enumerate() {
            new_id[x] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| new_id[e.u] != usize::MAX && new_id[e.v] != usize::MAX)
            .map(|e| Edge {
                u: new_id[e.u],
                v: new_id[e.v],
                w: e.w,
            })
            .collect();
        Self::assemble(
            keep.iter().map(|&x| self.labels[x].clone()).collect(),
            keep.iter().map(|&x| self.measure[x]).collect(),
            keep.iter().map(|&x| self.is_boundary[x]).collect(),
            edges,
        )
    }

    /// Serializes to the canonical JSON document, numbers printed with 17
    /// significant digits.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("graph serializes")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::from_str(&serde_json::to_string(&self.to_doc()).expect("graph serializes"))
            .expect("graph JSON parses")
    }

    fn to_doc(&self) -> GraphDoc {
        GraphDoc {
            vertices: (0..self.vertex_count())
                .map(|x| VertexDoc {
                    id: self.labels[x].clone(),
                    m: self.measure[x],
                    boundary: self.is_boundary[x],
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeDoc {
                    u: self.labels[e.u].clone(),
                    v: self.labels[e.v].clone(),
                    w: e.w,
                })
                .collect(),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    vertices: Vec<VertexDoc>,
    edges: Vec<EdgeDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexDoc {
    id: String,
    #[serde(serialize_with = "serialize_g17")]
    m: f64,
    boundary: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeDoc {
    u: String,
    v: String,
    #[serde(serialize_with = "serialize_g17")]
    w: f64,
}

/// Parses and validates a graph document.
pub fn parse_graph(text: &str) -> Result<BoundaryGraph> {
    let doc: GraphDoc = serde_json::from_str(text)?;
    let mut builder = GraphBuilder::new();
    for v in doc.vertices {
        builder.vertex(v.id, v.m, v.boundary);
    }
    for e in doc.edges {
        builder.edge(e.u, e.v, e.w);
    }
    builder.build()
}

/// Hop distances from `source`; `None` for unreachable vertices.
pub fn bfs_distances(g: &BoundaryGraph, source: VertexId) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(x) = queue.pop_front() {
        let next = dist[x].unwrap() + 1;
        for &(y, _) in g.neighbors(x) {
            if dist[y].is_none() {
                dist[y] = Some(next);
                queue.push_back(y);
            }
        }
    }
    dist
}

pub fn is_connected(g: &BoundaryGraph) -> bool {
    g.vertex_count() == 0 || bfs_distances(g, 0).iter().all(Option::is_some)
}

/// All-pairs hop distances (edge weights ignored).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopDistances {
    n: usize,
    d: Vec<usize>,
}

impl HopDistances {
    pub fn get(&self, x: VertexId, y: VertexId) -> usize {
        self.d[x * self.n + y]
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }
}

pub fn hop_distance_matrix(g: &BoundaryGraph) -> Result<HopDistances> {
    let n = g.vertex_count();
    let mut d = Vec::with_capacity(n * n);
    for x in 0..n {
        for dist in bfs_distances(g, x) {
            d.push(dist.ok_or(Error::Disconnected)?);
        }
    }
    Ok(HopDistances { n, d })
}

/// Every shortest path from `x` to `y`, in lexicographic order of vertex
/// ids. Fails once more than `limit` paths have been found.
pub fn all_geodesics(g: &BoundaryGraph, x: VertexId, y: VertexId, limit: usize) -> Result<Vec<Vec<VertexId>>> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let to_target = bfs_distances(g, y);
    let mut paths = Vec::new();
    let mut path = vec![x];
    // Stack of (vertex, next neighbour index to try).
    let mut stack = vec![(x, 0usize)];
    while let Some(&(v, next)) = stack.last() {
        if v == y {
            if paths.len() == limit {
                return Err(Error::GeodesicLimitExceeded {
                    from: g.label(x).to_string(),
                    to: g.label(y).to_string(),
                    limit,
                });
            }
            paths.push(path.clone());
            stack.pop();
            path.pop();
            continue;
        }
        let here = to_target[v].expect("connected");
        let step = g.neighbors(v)[next..]
            .iter()
            .position(|&(z, _)| to_target[z] == Some(here - 1));
        match step {
            Some(offset) => {
                let z = g.neighbors(v)[next + offset].0;
                stack.last_mut().unwrap().1 = next + offset + 1;
                stack.push((z, 0));
                path.push(z);
            }
            None => {
                stack.pop();
                path.pop();
            }
        }
    }
    Ok(paths)
}
