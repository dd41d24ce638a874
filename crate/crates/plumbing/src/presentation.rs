//! Finite presentations of the boundary fundamental group of a plumbed
//! neighbourhood, built from the dual graph.
//!
//! Generators: one meridian `g<i>` per curve, one `l<i>_<j>` per crossing
//! outside a fixed spanning tree, and handle generators `a<i>_<h>`,
//! `b<i>_<h>` per unit of genus. Relations: the handle generators commute
//! with their own meridian; each curve contributes one main relation tying
//! its handle commutators, its neighbors' meridians and its self-
//! intersection; and meridians commute across every crossing.

use crate::graph::{GraphError, PlumbingGraph, Vertex, VertexId, Weight};
use crate::intalg::{self, IntMatrix};
use crate::word::{display_factors, expand_factors, Factor, Gen, Word};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PresentationError {
    #[error("vertex {0} does not have genus 1")]
    NotElliptic(VertexId),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Provenance of a relator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelTag {
    /// `[a_h(i), g_i]` or `[g_i, b_h(i)]`.
    GlobalCommutation(VertexId, u32),
    /// The main relation of vertex `i`.
    Main(VertexId),
    /// Commutation across the crossing `(i, j)` (copy index for
    /// multi-edges).
    LocalCommutation(VertexId, VertexId, u16),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relator {
    pub factors: Vec<Factor>,
    pub word: Word,
    pub tag: RelTag,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<Gen>,
    relators: Vec<Relator>,
}

impl Presentation {
    pub fn generators(&self) -> &[Gen] {
        &self.generators
    }

    pub fn relators(&self) -> &[Relator] {
        &self.relators
    }

    pub fn lambda_count(&self) -> usize {
        self.generators
            .iter()
            .filter(|g| matches!(g, Gen::Lambda { .. }))
            .count()
    }

    pub fn generator_index(&self) -> BTreeMap<Gen, usize> {
        self.generators
            .iter()
            .enumerate()
            .map(|(i, &g)| (g, i))
            .collect()
    }
}

/// Spanning tree of the graph: breadth-first from the smallest vertex id,
/// neighbors explored in ascending order. Returns the set of tree edges
/// (normalized pairs; one copy of a multi-edge at most).
fn spanning_tree(g: &PlumbingGraph) -> BTreeSet<(VertexId, VertexId)> {
    let root = g.vertex_ids().next().expect("graph is nonempty");
    let mut tree = BTreeSet::new();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(root);
    queue.push_back(root);
    while let Some(u) = queue.pop_front() {
        let mut distinct = g.neighbors(u);
        distinct.dedup();
        for v in distinct {
            if seen.insert(v) {
                tree.insert((u.min(v), u.max(v)));
                queue.push_back(v);
            }
        }
    }
    tree
}

/// One crossing point: a normalized edge occurrence, tree or not.
#[derive(Debug, Clone, Copy)]
struct Crossing {
    a: VertexId,
    b: VertexId,
    /// Lambda generator for non-tree crossings.
    lambda: Option<Gen>,
}

fn crossings(g: &PlumbingGraph) -> Vec<Crossing> {
    let tree = spanning_tree(g);
    let mut out = Vec::new();
    let mut i = 0;
    let edges = g.edges();
    while i < edges.len() {
        let (a, b) = edges[i];
        let mut mult = 1;
        while i + mult < edges.len() && edges[i + mult] == (a, b) {
            mult += 1;
        }
        let in_tree = tree.contains(&(a, b));
        let mut copy = 0u16;
        for k in 0..mult {
            let lambda = if in_tree && k == 0 {
                None
            } else {
                let l = Gen::lambda(a, b, copy);
                copy += 1;
                Some(l)
            };
            out.push(Crossing { a, b, lambda });
        }
        i += mult;
    }
    out
}

/// Meridian of vertex `other` as seen from vertex `from` across the given
/// crossing, as a factor list.
fn gamma_across(from: VertexId, other: VertexId, c: &Crossing, exp: i64) -> Vec<Factor> {
    match c.lambda {
        None => vec![Factor::Pow(Gen::Gamma(other), exp)],
        Some(l) => {
            // Stored orientation is a -> b; from the b side the connector
            // is the inverse.
            let sign = if from == c.a { 1 } else { -1 };
            vec![
                Factor::Pow(l, sign),
                Factor::Pow(Gen::Gamma(other), exp),
                Factor::Pow(l, -sign),
            ]
        }
    }
}

/// Build the presentation of the boundary group from a validated graph.
pub fn build_presentation(g: &PlumbingGraph) -> Presentation {
    let cross = crossings(g);
    let mut generators: Vec<Gen> = g.vertex_ids().map(Gen::Gamma).collect();
    generators.extend(cross.iter().filter_map(|c| c.lambda));
    for v in g.vertices() {
        for h in 1..=v.genus {
            generators.push(Gen::A(v.id, h));
            generators.push(Gen::B(v.id, h));
        }
    }
    generators.sort();

    let mut relators = Vec::new();
    let mut push = |factors: Vec<Factor>, tag: RelTag| {
        let word = expand_factors(&factors);
        if !word.is_identity() {
            relators.push(Relator { factors, word, tag });
        }
    };

    // Handle generators commute with their own meridian.
    for v in g.vertices() {
        for h in 1..=v.genus {
            push(
                vec![Factor::Comm(
                    vec![Factor::Pow(Gen::A(v.id, h), 1)],
                    vec![Factor::Pow(Gen::Gamma(v.id), 1)],
                )],
                RelTag::GlobalCommutation(v.id, h),
            );
            push(
                vec![Factor::Comm(
                    vec![Factor::Pow(Gen::Gamma(v.id), 1)],
                    vec![Factor::Pow(Gen::B(v.id, h), 1)],
                )],
                RelTag::GlobalCommutation(v.id, h),
            );
        }
    }

    // Main relation per finite-weight vertex, written as a relator:
    // prod_h [a_h, b_h] * prod_j gamma_ij^{-1} * gamma_i^{m_i}.
    for v in g.vertices() {
        let Some(m) = v.self_int.multiplicity() else {
            continue;
        };
        let mut factors = Vec::new();
        for h in 1..=v.genus {
            factors.push(Factor::Comm(
                vec![Factor::Pow(Gen::A(v.id, h), 1)],
                vec![Factor::Pow(Gen::B(v.id, h), 1)],
            ));
        }
        for c in &cross {
            if c.a == v.id {
                factors.extend(gamma_across(v.id, c.b, c, -1));
            } else if c.b == v.id {
                factors.extend(gamma_across(v.id, c.a, c, -1));
            }
        }
        factors.push(Factor::Pow(Gen::Gamma(v.id), m));
        push(factors, RelTag::Main(v.id));
    }

    // Meridians commute across every crossing.
    for c in &cross {
        let factors = vec![Factor::Comm(
            vec![Factor::Pow(Gen::Gamma(c.a), 1)],
            gamma_across(c.a, c.b, c, 1),
        )];
        let copy = match c.lambda {
            Some(Gen::Lambda { copy, .. }) => copy + 1,
            _ => 0,
        };
        push(factors, RelTag::LocalCommutation(c.a, c.b, copy));
    }

    Presentation {
        generators,
        relators,
    }
}

/// Replace every genus >= 2 by genus 1; weights and edges unchanged.
pub fn simplify_genus(g: &PlumbingGraph) -> PlumbingGraph {
    let vertices = g
        .vertices()
        .iter()
        .map(|v| Vertex {
            genus: v.genus.min(1),
            ..*v
        })
        .collect();
    PlumbingGraph::new(vertices, g.edges().to_vec()).expect("rewrite preserves validity")
}

/// Replace a genus-1 vertex by a rational one of multiplicity `n`
/// (self-intersection `-n`; `Weight::Inf` drops the main relation).
/// Nontriviality and order verdicts for the other meridians computed in
/// the rewritten graph transfer back to the original group.
pub fn replace_elliptic(
    g: &PlumbingGraph,
    v: VertexId,
    n: Weight,
) -> Result<PlumbingGraph, PresentationError> {
    let vert = g
        .vertex(v)
        .ok_or(PresentationError::Graph(GraphError::NoSuchVertex(v)))?;
    if vert.genus != 1 {
        return Err(PresentationError::NotElliptic(v));
    }
    let self_int = match n {
        Weight::Int(m) => Weight::Int(-m),
        Weight::Inf => Weight::Inf,
    };
    let vertices = g
        .vertices()
        .iter()
        .map(|w| {
            if w.id == v {
                Vertex {
                    id: v,
                    genus: 0,
                    self_int,
                }
            } else {
                *w
            }
        })
        .collect();
    Ok(PlumbingGraph::new(vertices, g.edges().to_vec())?)
}

/// Abelianization of a presentation: invariant factors (0 denotes an
/// infinite cyclic factor) and the coordinates of each meridian in the
/// corresponding decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Abelianization {
    /// Nontrivial invariant factors, finite ones first (divisibility
    /// chain), then one 0 per infinite cyclic factor.
    pub factors: Vec<BigInt>,
    /// Coordinates of the class of each meridian, one per factor.
    pub gamma_images: BTreeMap<VertexId, Vec<BigInt>>,
}

impl Abelianization {
    /// Order of the image of the meridian of `v`; 0 means infinite.
    pub fn gamma_order(&self, v: VertexId) -> Option<BigInt> {
        let coords = self.gamma_images.get(&v)?;
        let mut order = BigInt::from(1);
        for (c, f) in coords.iter().zip(&self.factors) {
            if f.is_zero() {
                if !c.is_zero() {
                    return Some(BigInt::zero());
                }
            } else {
                let k = f / f.gcd(c);
                order = order.lcm(&k);
            }
        }
        Some(order)
    }
}

pub fn abelianization(p: &Presentation) -> Abelianization {
    let index = p.generator_index();
    let ngens = p.generators().len();
    let rows: Vec<Vec<BigInt>> = p
        .relators()
        .iter()
        .map(|r| {
            let sums = r.word.exponent_sums();
            let mut row = vec![BigInt::zero(); ngens];
            for (g, e) in sums {
                row[index[&g]] = e;
            }
            row
        })
        .collect();
    let nrows = rows.len();
    let a = if nrows == 0 {
        IntMatrix::zero(1, ngens) // single zero relation row
    } else {
        IntMatrix::from_rows(rows)
    };
    let snf = intalg::smith_normal_form(&a);
    let min = a.rows().min(ngens);
    let diag = snf.diagonal();

    // Retained factor positions: diagonal entries != 1 plus the columns
    // beyond the diagonal range (free).
    let mut positions: Vec<(usize, BigInt)> = Vec::new();
    for (k, d) in diag.iter().enumerate() {
        if *d != BigInt::from(1) {
            positions.push((k, d.clone()));
        }
    }
    for k in min..ngens {
        positions.push((k, BigInt::zero()));
    }
    // Finite factors first (the SNF chain keeps them ascending), zeros last.
    positions.sort_by(|(_, a), (_, b)| match (a.is_zero(), b.is_zero()) {
        (true, false) => std::cmp::Ordering::Greater,
        (false, true) => std::cmp::Ordering::Less,
        _ => a.cmp(b),
    });

    let factors: Vec<BigInt> = positions.iter().map(|(_, d)| d.clone()).collect();
    let mut gamma_images = BTreeMap::new();
    for (gen, &row) in &index {
        let Gen::Gamma(v) = gen else { continue };
        let coords = positions
            .iter()
            .map(|(k, d)| {
                let c = snf.v[(row, *k)].clone();
                if d.is_zero() {
                    c
                } else {
                    c.mod_floor(d)
                }
            })
            .collect();
        gamma_images.insert(*v, coords);
    }
    Abelianization {
        factors,
        gamma_images,
    }
}

/// Deterministic textual form:
/// `gens: <name>(, <name>)*; rels: <word>(, <word>)*;`
/// with words as whitespace-separated `name^int` factors and `[x,y]`
/// commutators.
pub fn export_text(p: &Presentation) -> String {
    let gens = p
        .generators()
        .iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    let rels = p
        .relators()
        .iter()
        .map(|r| display_factors(&r.factors))
        .collect::<Vec<_>>()
        .join(", ");
    format!("gens: {gens}; rels: {rels};")
}

/// Presentation text parsed back from the export grammar. Tags are not
/// recoverable from text, so relators come back as bare factor lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedPresentation {
    pub generators: Vec<Gen>,
    pub relators: Vec<Vec<Factor>>,
}

impl ParsedPresentation {
    pub fn render(&self) -> String {
        let gens = self
            .generators
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        let rels = self
            .relators
            .iter()
            .map(|f| display_factors(f))
            .collect::<Vec<_>>()
            .join(", ");
        format!("gens: {gens}; rels: {rels};")
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("presentation text error at byte {pos}: {msg}")]
pub struct TextError {
    pub pos: usize,
    pub msg: String,
}

struct TextParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> TextParser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, TextError> {
        Err(TextError {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, token: &str) -> Result<(), TextError> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            Ok(())
        } else {
            self.err(format!("expected `{token}`"))
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<u64, TextError> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .or_else(|_| self.err("number out of range"))
    }

    fn signed(&mut self) -> Result<i64, TextError> {
        let neg = self.src.get(self.pos) == Some(&b'-');
        if neg {
            self.pos += 1;
        }
        let n = self.number()? as i64;
        Ok(if neg { -n } else { n })
    }

    fn name(&mut self) -> Result<Gen, TextError> {
        self.skip_ws();
        let kind = match self.src.get(self.pos) {
            Some(&c @ (b'g' | b'l' | b'a' | b'b')) => c,
            _ => return self.err("expected a generator name"),
        };
        self.pos += 1;
        let first = self.number()? as u32;
        match kind {
            b'g' => Ok(Gen::Gamma(first)),
            b'a' | b'b' => {
                self.eat("_")?;
                let h = self.number()? as u32;
                Ok(if kind == b'a' {
                    Gen::A(first, h)
                } else {
                    Gen::B(first, h)
                })
            }
            b'l' => {
                self.eat("_")?;
                let j = self.number()? as u32;
                let copy = if self.src.get(self.pos) == Some(&b'_') {
                    self.pos += 1;
                    self.number()? as u16
                } else {
                    0
                };
                if first >= j {
                    return self.err("lambda indices must be ascending");
                }
                Ok(Gen::Lambda { i: first, j, copy })
            }
            _ => unreachable!(),
        }
    }

    fn factor(&mut self) -> Result<Factor, TextError> {
        if self.peek() == Some(b'[') {
            self.eat("[")?;
            let x = self.word(b",]")?;
            self.eat(",")?;
            let y = self.word(b"]")?;
            self.eat("]")?;
            return Ok(Factor::Comm(x, y));
        }
        let g = self.name()?;
        let exp = if self.src.get(self.pos) == Some(&b'^') {
            self.pos += 1;
            self.signed()?
        } else {
            1
        };
        Ok(Factor::Pow(g, exp))
    }

    /// Word = sequence of factors, stopped by any byte of `stops` at this
    /// nesting level.
    fn word(&mut self, stops: &[u8]) -> Result<Vec<Factor>, TextError> {
        let mut out = Vec::new();
        loop {
            match self.peek() {
                Some(c) if stops.contains(&c) => return Ok(out),
                None => return Ok(out),
                _ => out.push(self.factor()?),
            }
        }
    }
}

pub fn parse_text(src: &str) -> Result<ParsedPresentation, TextError> {
    let mut p = TextParser {
        src: src.as_bytes(),
        pos: 0,
    };
    p.eat("gens:")?;
    let mut generators = Vec::new();
    if p.peek() != Some(b';') {
        loop {
            generators.push(p.name()?);
            match p.peek() {
                Some(b',') => p.eat(",")?,
                _ => break,
            }
        }
    }
    p.eat(";")?;
    p.eat("rels:")?;
    let mut relators = Vec::new();
    loop {
        match p.peek() {
            Some(b';') | None => break,
            _ => {
                let w = p.word(b",;")?;
                if w.is_empty() {
                    return p.err("empty relator");
                }
                relators.push(w);
                if p.peek() == Some(b',') {
                    p.eat(",")?;
                }
            }
        }
    }
    p.eat(";")?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return p.err("trailing input");
    }
    let known: BTreeSet<Gen> = generators.iter().copied().collect();
    if known.len() != generators.len() {
        return p.err("duplicate generator");
    }
    fn check(fs: &[Factor], known: &BTreeSet<Gen>) -> bool {
        fs.iter().all(|f| match f {
            Factor::Pow(g, _) => known.contains(g),
            Factor::Comm(x, y) => check(x, known) && check(y, known),
        })
    }
    if !relators.iter().all(|r| check(r, &known)) {
        return p.err("relator uses an undeclared generator");
    }
    Ok(ParsedPresentation {
        generators,
        relators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{chain_graph, star_graph};

    #[test]
    fn single_rational_vertex() {
        let g = PlumbingGraph::new(vec![Vertex::new(1, 0, -5)], vec![]).unwrap();
        let p = build_presentation(&g);
        assert_eq!(export_text(&p), "gens: g1; rels: g1^5;");
    }

    #[test]
    fn single_elliptic_vertex() {
        let g = PlumbingGraph::new(vec![Vertex::new(1, 1, -2)], vec![]).unwrap();
        let p = build_presentation(&g);
        assert_eq!(
            export_text(&p),
            "gens: g1, a1_1, b1_1; rels: [a1_1,g1], [g1,b1_1], [a1_1,b1_1] g1^2;"
        );
    }

    #[test]
    fn genus_zero_weight_zero_is_free() {
        let g = PlumbingGraph::new(vec![Vertex::new(1, 0, 0)], vec![]).unwrap();
        let p = build_presentation(&g);
        assert_eq!(export_text(&p), "gens: g1; rels: ;");
    }

    #[test]
    fn triangle_has_one_lambda() {
        let g = PlumbingGraph::new(
            (1..=3).map(|i| Vertex::new(i, 0, -2)).collect(),
            vec![(1, 2), (2, 3), (1, 3)],
        )
        .unwrap();
        let p = build_presentation(&g);
        assert_eq!(p.lambda_count(), 1);
        assert_eq!(p.lambda_count(), g.betti());
    }

    #[test]
    fn inf_weight_drops_main_relator() {
        let g = PlumbingGraph::new(
            vec![
                Vertex::new(1, 0, -2),
                Vertex {
                    id: 2,
                    genus: 0,
                    self_int: Weight::Inf,
                },
            ],
            vec![(1, 2)],
        )
        .unwrap();
        let p = build_presentation(&g);
        assert!(p
            .relators()
            .iter()
            .all(|r| r.tag != RelTag::Main(2)));
        assert!(p.relators().iter().any(|r| r.tag == RelTag::Main(1)));
    }

    #[test]
    fn chain_main_relators() {
        let g = chain_graph(&[-2, -2, -2, -2]);
        let p = build_presentation(&g);
        // Interior vertex: gens of both neighbors inverted, then g^2.
        let main2 = p
            .relators()
            .iter()
            .find(|r| r.tag == RelTag::Main(2))
            .unwrap();
        assert_eq!(display_factors(&main2.factors), "g1^-1 g3^-1 g2^2");
    }

    #[test]
    fn simplify_and_replace() {
        let g = PlumbingGraph::new(vec![Vertex::new(1, 3, -3)], vec![]).unwrap();
        let s = simplify_genus(&g);
        assert_eq!(s.vertices()[0].genus, 1);
        let r = replace_elliptic(&s, 1, Weight::Int(5)).unwrap();
        assert_eq!(r.vertices()[0].genus, 0);
        assert_eq!(r.vertices()[0].self_int, Weight::Int(-5));
        let e = replace_elliptic(&r, 1, Weight::Int(2)).unwrap_err();
        assert_eq!(e, PresentationError::NotElliptic(1));
    }

    #[test]
    fn abelianization_of_a4_is_z5() {
        let p = build_presentation(&chain_graph(&[-2, -2, -2, -2]));
        let ab = abelianization(&p);
        assert_eq!(ab.factors, vec![BigInt::from(5)]);
        assert_eq!(ab.gamma_order(1), Some(BigInt::from(5)));
    }

    #[test]
    fn abelianization_of_star6() {
        // 2(n-4) = 4 and n-2 = 4 factors of order 2.
        let p = build_presentation(&star_graph(-2, &[-2; 6]));
        let ab = abelianization(&p);
        let mut factors = ab.factors.clone();
        factors.sort();
        assert_eq!(
            factors,
            vec![2, 2, 2, 2, 4]
                .into_iter()
                .map(BigInt::from)
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn abelianization_matches_negated_intersection_matrix() {
        for weights in [&[-2, -3, -2][..], &[-4, -2][..], &[-2, -2, -2, -2][..]] {
            let g = chain_graph(weights);
            let p = build_presentation(&g);
            let ab = abelianization(&p);
            let m = crate::graph::intersection_matrix(&g).unwrap().neg();
            let snf = intalg::smith_normal_form(&m);
            let expected: Vec<BigInt> = snf
                .diagonal()
                .into_iter()
                .filter(|d| *d != BigInt::from(1))
                .collect();
            assert_eq!(ab.factors, expected, "weights {weights:?}");
        }
    }

    #[test]
    fn export_is_deterministic() {
        let g = star_graph(-2, &[-2, -3, -2]);
        let a = export_text(&build_presentation(&g));
        let b = export_text(&build_presentation(&g));
        assert_eq!(a, b);
    }

    #[test]
    fn killing_meridians_leaves_surface_relations() {
        let g = PlumbingGraph::new(
            vec![
                Vertex::new(1, 1, -2),
                Vertex::new(2, 0, -3),
                Vertex::new(3, 2, -2),
            ],
            vec![(1, 2), (2, 3), (1, 3)],
        )
        .unwrap();
        let p = build_presentation(&g);
        assert_eq!(p.lambda_count(), g.betti());
        for r in p.relators() {
            let survivor = r
                .word
                .retain(|gen| !matches!(gen, Gen::Gamma(_) | Gen::Lambda { .. }));
            match r.tag {
                RelTag::Main(i) => {
                    // Only the surface relation prod [a_h, b_h] survives.
                    let expected: Vec<Factor> = (1..=g.vertex(i).unwrap().genus)
                        .map(|h| {
                            Factor::Comm(
                                vec![Factor::Pow(Gen::A(i, h), 1)],
                                vec![Factor::Pow(Gen::B(i, h), 1)],
                            )
                        })
                        .collect();
                    assert_eq!(survivor, expand_factors(&expected));
                }
                _ => assert!(survivor.is_identity()),
            }
        }
    }

    #[test]
    fn text_round_trip() {
        for g in [
            chain_graph(&[-2, -2, -2]),
            star_graph(-2, &[-2, -2, -3]),
            PlumbingGraph::new(
                vec![Vertex::new(1, 2, -1), Vertex::new(2, 0, 3)],
                vec![(1, 2), (1, 2)],
            )
            .unwrap(),
        ] {
            let p = build_presentation(&g);
            let text = export_text(&p);
            let parsed = parse_text(&text).unwrap();
            assert_eq!(parsed.render(), text);
            assert_eq!(parsed.generators, p.generators());
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_text("gens g1; rels: ;").is_err());
        assert!(parse_text("gens: g1; rels: g2;").is_err());
        assert!(parse_text("gens: g1; rels: [g1,g1;").is_err());
        assert!(parse_text("gens: g1; rels: ; trailing").is_err());
    }
}
