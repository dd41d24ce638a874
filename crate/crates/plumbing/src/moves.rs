//! Blow-up and blow-down rewrites on plumbing graphs.
//!
//! A blow-up inserts a rational (-1)-vertex on an edge (or as a new leaf)
//! and shifts the touched weights by -1; a blow-down is the inverse
//! contraction. Replaying the returned [`MoveRecord`]s against the source
//! graph reproduces the target.

use crate::graph::{GraphError, PlumbingGraph, Vertex, VertexId, Weight};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MoveError {
    #[error("no edge between {0} and {1}")]
    NoSuchEdge(VertexId, VertexId),
    #[error("no vertex with id {0}")]
    NoSuchVertex(VertexId),
    #[error("vertex {0} has infinite weight")]
    InfiniteWeight(VertexId),
    #[error("vertex {0} is not contractible: {1}")]
    NotContractible(VertexId, &'static str),
    #[error("contracting vertex {0} would create a multi-edge between {1} and {2}")]
    MultiEdgeCreated(VertexId, VertexId, VertexId),
    #[error("graph is not a tree")]
    NotATree,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MoveRecord {
    BlowUpEdge {
        edge: (VertexId, VertexId),
        new_vertex: VertexId,
    },
    BlowUpPoint {
        vertex: VertexId,
        new_vertex: VertexId,
    },
    BlowDown {
        vertex: VertexId,
        /// Edge added between the two former neighbors, when valency was 2.
        rejoined: Option<(VertexId, VertexId)>,
        /// The rejoining produced a second edge between already-adjacent
        /// vertices (impossible on trees).
        created_multi_edge: bool,
    },
}

fn fresh_id(g: &PlumbingGraph) -> VertexId {
    g.vertex_ids().max().unwrap_or(0) + 1
}

fn shift_weight(
    vertices: &mut [Vertex],
    id: VertexId,
    delta: i64,
) -> Result<(), MoveError> {
    let v = vertices
        .iter_mut()
        .find(|v| v.id == id)
        .ok_or(MoveError::NoSuchVertex(id))?;
    match v.self_int {
        Weight::Int(w) => {
            v.self_int = Weight::Int(w + delta);
            Ok(())
        }
        // An infinite weight absorbs any finite shift.
        Weight::Inf => Ok(()),
    }
}

/// Blow up a crossing point: the edge is replaced by a (-1)-vertex joined
/// to both endpoints, whose weights drop by one.
pub fn blow_up_edge(
    g: &PlumbingGraph,
    edge: (VertexId, VertexId),
) -> Result<(PlumbingGraph, MoveRecord), MoveError> {
    let key = (edge.0.min(edge.1), edge.0.max(edge.1));
    if g.edge_multiplicity(key.0, key.1) == 0 {
        return Err(MoveError::NoSuchEdge(edge.0, edge.1));
    }
    for end in [key.0, key.1] {
        if g.vertex(end).expect("endpoint exists").self_int.is_inf() {
            return Err(MoveError::InfiniteWeight(end));
        }
    }
    let new_vertex = fresh_id(g);
    let mut vertices = g.vertices().to_vec();
    shift_weight(&mut vertices, key.0, -1)?;
    shift_weight(&mut vertices, key.1, -1)?;
    vertices.push(Vertex::new(new_vertex, 0, -1));
    let mut edges = g.edges().to_vec();
    let pos = edges.iter().position(|&e| e == key).expect("edge present");
    edges.remove(pos);
    edges.push((key.0, new_vertex));
    edges.push((key.1, new_vertex));
    let out = PlumbingGraph::new(vertices, edges)?;
    Ok((
        out,
        MoveRecord::BlowUpEdge {
            edge: key,
            new_vertex,
        },
    ))
}

/// Blow up a smooth point of the curve: attach a new (-1)-leaf and drop the
/// vertex weight by one.
pub fn blow_up_point(
    g: &PlumbingGraph,
    v: VertexId,
) -> Result<(PlumbingGraph, MoveRecord), MoveError> {
    let vert = g.vertex(v).ok_or(MoveError::NoSuchVertex(v))?;
    if vert.self_int.is_inf() {
        return Err(MoveError::InfiniteWeight(v));
    }
    let new_vertex = fresh_id(g);
    let mut vertices = g.vertices().to_vec();
    shift_weight(&mut vertices, v, -1)?;
    vertices.push(Vertex::new(new_vertex, 0, -1));
    let mut edges = g.edges().to_vec();
    edges.push((v, new_vertex));
    let out = PlumbingGraph::new(vertices, edges)?;
    Ok((
        out,
        MoveRecord::BlowUpPoint {
            vertex: v,
            new_vertex,
        },
    ))
}

fn check_contractible(g: &PlumbingGraph, v: VertexId) -> Result<Vec<VertexId>, MoveError> {
    let vert = g.vertex(v).ok_or(MoveError::NoSuchVertex(v))?;
    if vert.genus != 0 {
        return Err(MoveError::NotContractible(v, "positive genus"));
    }
    if vert.self_int != Weight::Int(-1) {
        return Err(MoveError::NotContractible(v, "self-intersection is not -1"));
    }
    if g.valency(v) > 2 {
        return Err(MoveError::NotContractible(v, "meets more than two curves"));
    }
    let neighbors = g.neighbors(v);
    let mut distinct = neighbors.clone();
    distinct.dedup();
    if distinct.len() != neighbors.len() {
        return Err(MoveError::NotContractible(
            v,
            "meets a neighbor in more than one point",
        ));
    }
    if g.vertices().len() == 1 {
        return Err(MoveError::NotContractible(
            v,
            "contraction would empty the graph",
        ));
    }
    Ok(neighbors)
}

/// Contract a rational (-1)-vertex of valency <= 2 with simple edges.
/// Neighbor weights rise by one; with valency 2 the neighbors get joined.
pub fn blow_down(
    g: &PlumbingGraph,
    v: VertexId,
) -> Result<(PlumbingGraph, MoveRecord), MoveError> {
    let neighbors = check_contractible(g, v)?;
    let mut vertices: Vec<Vertex> = g
        .vertices()
        .iter()
        .filter(|w| w.id != v)
        .copied()
        .collect();
    for &n in &neighbors {
        shift_weight(&mut vertices, n, 1)?;
    }
    let mut edges: Vec<(VertexId, VertexId)> = g
        .edges()
        .iter()
        .filter(|&&(a, b)| a != v && b != v)
        .copied()
        .collect();
    let mut rejoined = None;
    let mut created_multi_edge = false;
    if let [a, b] = neighbors[..] {
        created_multi_edge = g.edge_multiplicity(a, b) > 0;
        edges.push((a.min(b), a.max(b)));
        rejoined = Some((a.min(b), a.max(b)));
    }
    let out = PlumbingGraph::new(vertices, edges)?;
    Ok((
        out,
        MoveRecord::BlowDown {
            vertex: v,
            rejoined,
            created_multi_edge,
        },
    ))
}

/// Vertices eligible for [`blow_down`], ascending.
pub fn eligible_blow_downs(g: &PlumbingGraph) -> Vec<VertexId> {
    g.vertex_ids()
        .filter(|&v| check_contractible(g, v).is_ok())
        .collect()
}

/// Contract rational (-1)-vertices until none remains, smallest id first.
/// Requires a tree; a contraction that would create a multi-edge aborts
/// with [`MoveError::MultiEdgeCreated`].
pub fn full_blow_down(
    g: &PlumbingGraph,
) -> Result<(PlumbingGraph, Vec<MoveRecord>), MoveError> {
    if !g.is_tree() {
        return Err(MoveError::NotATree);
    }
    let mut current = g.clone();
    let mut records = Vec::new();
    loop {
        let Some(v) = eligible_blow_downs(&current).first().copied() else {
            return Ok((current, records));
        };
        let (next, record) = blow_down(&current, v)?;
        if let MoveRecord::BlowDown {
            created_multi_edge: true,
            rejoined: Some((a, b)),
            ..
        } = record
        {
            return Err(MoveError::MultiEdgeCreated(v, a, b));
        }
        current = next;
        records.push(record);
    }
}

/// Replay a recorded move against a graph.
pub fn replay(g: &PlumbingGraph, record: &MoveRecord) -> Result<PlumbingGraph, MoveError> {
    match record {
        MoveRecord::BlowUpEdge { edge, new_vertex } => {
            let (out, rec) = blow_up_edge(g, *edge)?;
            match rec {
                MoveRecord::BlowUpEdge { new_vertex: n, .. } if n == *new_vertex => Ok(out),
                _ => Err(MoveError::NoSuchVertex(*new_vertex)),
            }
        }
        MoveRecord::BlowUpPoint { vertex, new_vertex } => {
            let (out, rec) = blow_up_point(g, *vertex)?;
            match rec {
                MoveRecord::BlowUpPoint { new_vertex: n, .. } if n == *new_vertex => Ok(out),
                _ => Err(MoveError::NoSuchVertex(*new_vertex)),
            }
        }
        MoveRecord::BlowDown { vertex, .. } => Ok(blow_down(g, *vertex)?.0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::chain_graph;

    fn weights(g: &PlumbingGraph) -> Vec<Weight> {
        g.vertices().iter().map(|v| v.self_int).collect()
    }

    #[test]
    fn blow_up_central_edge_of_a4() {
        let g = chain_graph(&[-2, -2, -2, -2]);
        let (out, rec) = blow_up_edge(&g, (2, 3)).unwrap();
        assert_eq!(
            weights(&out),
            [-2, -3, -3, -2, -1].map(Weight::Int).to_vec()
        );
        assert_eq!(
            rec,
            MoveRecord::BlowUpEdge {
                edge: (2, 3),
                new_vertex: 5
            }
        );
        // Path order: 1 - 2 - 5 - 3 - 4.
        assert_eq!(out.neighbors(5), vec![2, 3]);
        assert_eq!(out.edge_multiplicity(2, 3), 0);
    }

    #[test]
    fn blow_up_two_chain() {
        let g = chain_graph(&[-2, -2]);
        let (out, _) = blow_up_edge(&g, (2, 1)).unwrap();
        assert_eq!(weights(&out), [-3, -3, -1].map(Weight::Int).to_vec());
    }

    #[test]
    fn blow_up_missing_edge() {
        let g = chain_graph(&[-2, -2, -2]);
        assert_eq!(
            blow_up_edge(&g, (1, 3)).unwrap_err(),
            MoveError::NoSuchEdge(1, 3)
        );
    }

    #[test]
    fn blow_up_point_twice() {
        let g = chain_graph(&[-2]);
        let (g1, _) = blow_up_point(&g, 1).unwrap();
        assert_eq!(weights(&g1), [-3, -1].map(Weight::Int).to_vec());
        let (g2, _) = blow_up_point(&g1, 1).unwrap();
        assert_eq!(weights(&g2), [-4, -1, -1].map(Weight::Int).to_vec());
        assert_eq!(
            blow_up_point(&g2, 99).unwrap_err(),
            MoveError::NoSuchVertex(99)
        );
    }

    #[test]
    fn blow_down_inverts_blow_up() {
        let g = chain_graph(&[-2, -3, -2, -4]);
        for &edge in g.edges() {
            let (up, rec) = blow_up_edge(&g, edge).unwrap();
            let MoveRecord::BlowUpEdge { new_vertex, .. } = rec else {
                panic!()
            };
            let (down, _) = blow_down(&up, new_vertex).unwrap();
            assert_eq!(down, g);
        }
    }

    #[test]
    fn blow_down_center() {
        let g = chain_graph(&[-3, -1, -3]);
        let (out, rec) = blow_down(&g, 2).unwrap();
        assert_eq!(weights(&out), [-2, -2].map(Weight::Int).to_vec());
        assert_eq!(
            rec,
            MoveRecord::BlowDown {
                vertex: 2,
                rejoined: Some((1, 3)),
                created_multi_edge: false
            }
        );
    }

    #[test]
    fn blow_down_rejects_minus_two() {
        let g = chain_graph(&[-2, -2]);
        assert!(matches!(
            blow_down(&g, 1),
            Err(MoveError::NotContractible(1, _))
        ));
    }

    #[test]
    fn full_blow_down_example() {
        let g = chain_graph(&[-2, -3, -1, -3, -2]);
        let (out, records) = full_blow_down(&g).unwrap();
        assert_eq!(weights(&out), [-2, -2, -2, -2].map(Weight::Int).to_vec());
        assert_eq!(records.len(), 1);
    }

    #[test]
    fn full_blow_down_no_op() {
        let g = chain_graph(&[-2, -2, -3]);
        let (out, records) = full_blow_down(&g).unwrap();
        assert_eq!(out, g);
        assert!(records.is_empty());
    }

    #[test]
    fn full_blow_down_iterates() {
        let g = chain_graph(&[-1, -2, -1]);
        let (out, records) = full_blow_down(&g).unwrap();
        assert_eq!(out.vertices().len(), 1);
        assert_eq!(out.vertices()[0].self_int, Weight::Int(0));
        assert_eq!(records.len(), 2);
    }

    #[test]
    fn blow_down_on_cycle_flags_multi_edge() {
        let g = PlumbingGraph::new(
            vec![
                Vertex::new(1, 0, -2),
                Vertex::new(2, 0, -2),
                Vertex::new(3, 0, -1),
            ],
            vec![(1, 2), (2, 3), (1, 3)],
        )
        .unwrap();
        let (out, rec) = blow_down(&g, 3).unwrap();
        assert_eq!(out.edge_multiplicity(1, 2), 2);
        assert!(matches!(
            rec,
            MoveRecord::BlowDown {
                created_multi_edge: true,
                ..
            }
        ));
    }

    #[test]
    fn replay_reproduces_target() {
        let g = chain_graph(&[-2, -2, -2, -2]);
        let (target, rec) = blow_up_edge(&g, (2, 3)).unwrap();
        assert_eq!(replay(&g, &rec).unwrap(), target);
    }

    #[test]
    fn blow_ups_preserve_negated_determinant() {
        use crate::graph::intersection_matrix;
        use crate::intalg::determinant;
        for weights in [&[-2, -2][..], &[-2, -3, -2, -4][..], &[-3, -2, -2][..]] {
            let g = chain_graph(weights);
            let before = determinant(&intersection_matrix(&g).unwrap().neg()).unwrap();
            for &edge in g.edges() {
                let (up, _) = blow_up_edge(&g, edge).unwrap();
                let after = determinant(&intersection_matrix(&up).unwrap().neg()).unwrap();
                assert_eq!(before, after, "edge {edge:?} of {weights:?}");
            }
            for v in g.vertex_ids() {
                let (up, _) = blow_up_point(&g, v).unwrap();
                let after = determinant(&intersection_matrix(&up).unwrap().neg()).unwrap();
                assert_eq!(before, after, "point {v} of {weights:?}");
            }
        }
    }
}
