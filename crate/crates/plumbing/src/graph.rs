//! Plumbing graph data model: validation, shape classification,
//! intersection matrix, nefness and minimality predicates.

use crate::intalg::{self, IntMatrix};
use num_bigint::BigInt;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use thiserror::Error;

/// Vertex identifier as it appears in graph files.
pub type VertexId = u32;

/// Self-intersection of a curve. `Inf` stands for an arbitrarily negative
/// weight: the vertex keeps its generator and commutation relations but
/// contributes no main relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Weight {
    Int(i64),
    Inf,
}

impl Weight {
    /// Multiplicity `m = -self_int`, when finite.
    pub fn multiplicity(self) -> Option<i64> {
        match self {
            Weight::Int(w) => Some(-w),
            Weight::Inf => None,
        }
    }

    pub fn is_inf(self) -> bool {
        matches!(self, Weight::Inf)
    }

    /// True when the weight is `<= bound`; `Inf` counts as arbitrarily
    /// negative.
    pub fn at_most(self, bound: i64) -> bool {
        match self {
            Weight::Int(w) => w <= bound,
            Weight::Inf => true,
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Int(w) => write!(f, "{w}"),
            Weight::Inf => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Vertex {
    pub id: VertexId,
    pub genus: u32,
    pub self_int: Weight,
}

impl Vertex {
    pub fn new(id: VertexId, genus: u32, self_int: i64) -> Self {
        Vertex {
            id,
            genus,
            self_int: Weight::Int(self_int),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate vertex id {0}")]
    DuplicateId(VertexId),
    #[error("edge ({0}, {1}) refers to a missing vertex")]
    DanglingEdge(VertexId, VertexId),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("graph is disconnected: vertex {0} is not reachable from vertex {1}")]
    Disconnected(VertexId, VertexId),
    #[error("graph is empty")]
    Empty,
    #[error("vertex {0} has infinite weight")]
    InfiniteWeight(VertexId),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("no vertex with id {0}")]
    NoSuchVertex(VertexId),
}

/// A connected multigraph of curves. Vertices are stored sorted by id and
/// edges as sorted normalized pairs, so structural equality is equality of
/// the canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlumbingGraph {
    vertices: Vec<Vertex>,
    edges: Vec<(VertexId, VertexId)>,
}

impl PlumbingGraph {
    /// Validates and canonicalizes the raw data: ids unique, endpoints
    /// present, no self-loops, connected.
    pub fn new(
        mut vertices: Vec<Vertex>,
        edges: Vec<(VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::Empty);
        }
        vertices.sort_by_key(|v| v.id);
        for w in vertices.windows(2) {
            if w[0].id == w[1].id {
                return Err(GraphError::DuplicateId(w[0].id));
            }
        }
        let ids: BTreeSet<VertexId> = vertices.iter().map(|v| v.id).collect();
        let mut norm_edges = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            if !ids.contains(&a) || !ids.contains(&b) {
                return Err(GraphError::DanglingEdge(a, b));
            }
            norm_edges.push((a.min(b), a.max(b)));
        }
        norm_edges.sort_unstable();
        let g = PlumbingGraph {
            vertices,
            edges: norm_edges,
        };
        let root = g.vertices[0].id;
        let reached = g.reachable_from(root);
        if let Some(stray) = g.vertices.iter().find(|v| !reached.contains(&v.id)) {
            return Err(GraphError::Disconnected(stray.id, root));
        }
        Ok(g)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn vertex(&self, id: VertexId) -> Option<&Vertex> {
        self.vertices
            .binary_search_by_key(&id, |v| v.id)
            .ok()
            .map(|i| &self.vertices[i])
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().map(|v| v.id)
    }

    /// Neighbors with multiplicity, ascending.
    pub fn neighbors(&self, id: VertexId) -> Vec<VertexId> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            if a == id {
                out.push(b);
            } else if b == id {
                out.push(a);
            }
        }
        out.sort_unstable();
        out
    }

    /// Degree counting multi-edges.
    pub fn valency(&self, id: VertexId) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == id || b == id)
            .count()
    }

    pub fn edge_multiplicity(&self, a: VertexId, b: VertexId) -> usize {
        let key = (a.min(b), a.max(b));
        self.edges.iter().filter(|&&e| e == key).count()
    }

    /// First Betti number of the underlying graph (edges - vertices + 1).
    pub fn betti(&self) -> usize {
        self.edges.len() + 1 - self.vertices.len()
    }

    pub fn is_tree(&self) -> bool {
        self.betti() == 0
    }

    fn reachable_from(&self, start: VertexId) -> BTreeSet<VertexId> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start);
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            for n in self.neighbors(v) {
                if seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        seen
    }

    /// Connected components after deleting `removed`, as vertex-id sets.
    pub fn components_without(&self, removed: VertexId) -> Vec<BTreeSet<VertexId>> {
        let mut remaining: BTreeSet<VertexId> =
            self.vertex_ids().filter(|&v| v != removed).collect();
        let mut out = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::new();
            comp.insert(start);
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for n in self.neighbors(v) {
                    if n != removed && remaining.contains(&n) && comp.insert(n) {
                        queue.push_back(n);
                    }
                }
            }
            for v in &comp {
                remaining.remove(v);
            }
            out.push(comp);
        }
        out
    }

    /// Induced subgraph on `keep`; fails if it is empty or disconnected.
    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> Result<PlumbingGraph, GraphError> {
        let vertices: Vec<Vertex> = self
            .vertices
            .iter()
            .filter(|v| keep.contains(&v.id))
            .copied()
            .collect();
        let edges: Vec<(VertexId, VertexId)> = self
            .edges
            .iter()
            .filter(|(a, b)| keep.contains(a) && keep.contains(b))
            .copied()
            .collect();
        PlumbingGraph::new(vertices, edges)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapeKind {
    /// Tree with all valencies <= 2 (includes the single vertex).
    LinearTree,
    /// Tree with exactly one vertex of valency >= 3 (its rim).
    Comb(VertexId),
    /// Tree with at least two vertices of valency >= 3.
    GeneralTree,
    /// First Betti number > 0.
    HasCycles,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphShape {
    pub kind: ShapeKind,
    pub valencies: BTreeMap<VertexId, usize>,
}

pub fn classify_shape(g: &PlumbingGraph) -> GraphShape {
    let valencies: BTreeMap<VertexId, usize> =
        g.vertex_ids().map(|v| (v, g.valency(v))).collect();
    let kind = if !g.is_tree() {
        ShapeKind::HasCycles
    } else {
        let mut branch = valencies.iter().filter(|(_, &d)| d >= 3);
        match (branch.next(), branch.next()) {
            (None, _) => ShapeKind::LinearTree,
            (Some((&rim, _)), None) => ShapeKind::Comb(rim),
            (Some(_), Some(_)) => ShapeKind::GeneralTree,
        }
    };
    GraphShape { kind, valencies }
}

/// Intersection matrix: diagonal is the self-intersection, off-diagonal
/// entries count crossings. Vertices ordered by id.
pub fn intersection_matrix(g: &PlumbingGraph) -> Result<IntMatrix, GraphError> {
    let n = g.vertices().len();
    let index: BTreeMap<VertexId, usize> = g
        .vertex_ids()
        .enumerate()
        .map(|(i, v)| (v, i))
        .collect();
    let mut m = IntMatrix::zero(n, n);
    for v in g.vertices() {
        match v.self_int {
            Weight::Int(w) => m[(index[&v.id], index[&v.id])] = BigInt::from(w),
            Weight::Inf => return Err(GraphError::InfiniteWeight(v.id)),
        }
    }
    for &(a, b) in g.edges() {
        let (i, j) = (index[&a], index[&b]);
        m[(i, j)] += 1;
        m[(j, i)] += 1;
    }
    Ok(m)
}

/// Exact signature `(n_plus, n_zero, n_minus)` of a symmetric matrix.
pub fn signature(m: &IntMatrix) -> Result<(usize, usize, usize), GraphError> {
    if !m.is_symmetric() {
        return Err(GraphError::NotSymmetric);
    }
    let p = intalg::char_poly(m).expect("symmetric implies square");
    Ok(intalg::signature_of_char_poly(&p))
}

/// Per-vertex nefness of the canonical divisor restricted to genus-zero
/// curves: true iff genus >= 1, or genus 0 and self-intersection <= -2.
pub fn nef_on_genus_zero(g: &PlumbingGraph) -> BTreeMap<VertexId, bool> {
    g.vertices()
        .iter()
        .map(|v| (v.id, v.genus >= 1 || v.self_int.at_most(-2)))
        .collect()
}

/// Minimality in the normal-crossings category: no rational (-1)-vertex
/// meeting at most two other curves, each in a single point.
pub fn is_minimal_gnc(g: &PlumbingGraph) -> (bool, Vec<VertexId>) {
    let violating: Vec<VertexId> = g
        .vertices()
        .iter()
        .filter(|v| {
            v.genus == 0
                && v.self_int == Weight::Int(-1)
                && g.valency(v.id) <= 2
                && g.neighbors(v.id)
                    .iter()
                    .all(|&n| g.edge_multiplicity(v.id, n) == 1)
        })
        .map(|v| v.id)
        .collect();
    (violating.is_empty(), violating)
}

/// Path graph with the given weights, ids 1..=n, all genus zero.
pub fn chain_graph(weights: &[i64]) -> PlumbingGraph {
    let vertices = weights
        .iter()
        .enumerate()
        .map(|(i, &w)| Vertex::new(i as VertexId + 1, 0, w))
        .collect();
    let edges = (1..weights.len() as VertexId).map(|i| (i, i + 1)).collect();
    PlumbingGraph::new(vertices, edges).expect("chain is valid")
}

/// Star: a center of the given weight joined to one single-vertex tooth per
/// entry of `teeth`. Center id 1, teeth ids 2..
pub fn star_graph(center: i64, teeth: &[i64]) -> PlumbingGraph {
    let mut vertices = vec![Vertex::new(1, 0, center)];
    let mut edges = Vec::new();
    for (i, &w) in teeth.iter().enumerate() {
        let id = i as VertexId + 2;
        vertices.push(Vertex::new(id, 0, w));
        edges.push((1, id));
    }
    PlumbingGraph::new(vertices, edges).expect("star is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_smallest_graph() {
        let g = PlumbingGraph::new(vec![Vertex::new(1, 0, -2)], vec![]).unwrap();
        assert_eq!(g.vertices().len(), 1);
    }

    #[test]
    fn validation_rejects_disconnected() {
        let err = PlumbingGraph::new(
            vec![Vertex::new(1, 0, -2), Vertex::new(2, 0, -2)],
            vec![],
        )
        .unwrap_err();
        assert_eq!(err, GraphError::Disconnected(2, 1));
    }

    #[test]
    fn validation_rejects_self_loop() {
        let err =
            PlumbingGraph::new(vec![Vertex::new(1, 0, -2)], vec![(1, 1)]).unwrap_err();
        assert_eq!(err, GraphError::SelfLoop(1));
    }

    #[test]
    fn validation_rejects_dangling_and_duplicate() {
        let err = PlumbingGraph::new(
            vec![Vertex::new(1, 0, -2), Vertex::new(2, 0, -2)],
            vec![(1, 3)],
        )
        .unwrap_err();
        assert_eq!(err, GraphError::DanglingEdge(1, 3));
        let err = PlumbingGraph::new(
            vec![Vertex::new(1, 0, -2), Vertex::new(1, 0, -3)],
            vec![],
        )
        .unwrap_err();
        assert_eq!(err, GraphError::DuplicateId(1));
    }

    #[test]
    fn shapes() {
        assert_eq!(
            classify_shape(&chain_graph(&[-2, -2, -2, -2])).kind,
            ShapeKind::LinearTree
        );
        assert_eq!(
            classify_shape(&star_graph(-2, &[-2; 5])).kind,
            ShapeKind::Comb(1)
        );
        // Two valency-3 vertices.
        let g = PlumbingGraph::new(
            (1..=8).map(|i| Vertex::new(i, 0, -2)).collect(),
            vec![(1, 2), (2, 3), (3, 4), (2, 5), (3, 6), (5, 7), (6, 8)],
        )
        .unwrap();
        assert_eq!(classify_shape(&g).kind, ShapeKind::GeneralTree);
        // Triangle.
        let t = PlumbingGraph::new(
            (1..=3).map(|i| Vertex::new(i, 0, -2)).collect(),
            vec![(1, 2), (2, 3), (1, 3)],
        )
        .unwrap();
        assert_eq!(classify_shape(&t).kind, ShapeKind::HasCycles);
        assert_eq!(t.betti(), 1);
    }

    #[test]
    fn intersection_matrix_chain() {
        let g = chain_graph(&[-2, -2]);
        let m = intersection_matrix(&g).unwrap();
        assert_eq!(m, IntMatrix::from_i64(&[&[-2, 1], &[1, -2]]));
    }

    #[test]
    fn intersection_matrix_a4_determinant() {
        let g = chain_graph(&[-2, -2, -2, -2]);
        let m = intersection_matrix(&g).unwrap();
        assert_eq!(intalg::determinant(&m).unwrap(), BigInt::from(5));
        assert_eq!(signature(&m).unwrap(), (0, 0, 4));
    }

    #[test]
    fn intersection_matrix_rejects_inf() {
        let g = PlumbingGraph::new(
            vec![Vertex {
                id: 1,
                genus: 0,
                self_int: Weight::Inf,
            }],
            vec![],
        )
        .unwrap();
        assert_eq!(
            intersection_matrix(&g).unwrap_err(),
            GraphError::InfiniteWeight(1)
        );
    }

    #[test]
    fn signature_of_indefinite_star() {
        // Star of (-2)-curves with 5 teeth carries a positive direction.
        let g = star_graph(-2, &[-2; 5]);
        let m = intersection_matrix(&g).unwrap();
        assert_eq!(signature(&m).unwrap(), (1, 0, 5));
    }

    #[test]
    fn signature_counts_kernel() {
        // Star with 4 teeth is degenerate.
        let g = star_graph(-2, &[-2; 4]);
        let m = intersection_matrix(&g).unwrap();
        let (_, zero, _) = signature(&m).unwrap();
        assert_eq!(zero, 1);
    }

    #[test]
    fn nef_flags() {
        let g = PlumbingGraph::new(
            vec![
                Vertex::new(1, 0, -2),
                Vertex::new(2, 0, -1),
                Vertex::new(3, 1, 0),
            ],
            vec![(1, 2), (2, 3)],
        )
        .unwrap();
        let nef = nef_on_genus_zero(&g);
        assert!(nef[&1]);
        assert!(!nef[&2]);
        assert!(nef[&3]);
    }

    #[test]
    fn minimality() {
        let (ok, _) = is_minimal_gnc(&chain_graph(&[-2, -2, -2, -2]));
        assert!(ok);
        let (ok, bad) = is_minimal_gnc(&chain_graph(&[-2, -3, -1, -3, -2]));
        assert!(!ok);
        assert_eq!(bad, vec![3]);
        // A (-1)-vertex of valency 3 meets three curves: minimal.
        let g = star_graph(-1, &[-2, -2, -2]);
        let (ok, _) = is_minimal_gnc(&g);
        assert!(ok);
    }

    #[test]
    fn negative_definite_chain_signature() {
        for weights in [&[-2, -3][..], &[-2, -2, -2][..], &[-4, -2, -3, -2][..]] {
            let m = intersection_matrix(&chain_graph(weights)).unwrap();
            let n = weights.len();
            assert_eq!(signature(&m).unwrap(), (0, 0, n));
            assert_eq!(signature(&m.neg()).unwrap(), (n, 0, 0));
        }
    }
}
