//! Edge-colored signed graphs and the Adinkra axioms.
//!
//! An `N`-colored Adinkra is a signed graph satisfying four axioms:
//! (1) bipartite; (2) every vertex meets exactly one edge of each color;
//! (3) for every pair of colors, the bicolored subgraph is a disjoint union
//! of 4-cycles; (4) every bicolored 4-cycle carries an odd number of
//! negative edges.
//!
//! Graphs satisfying (1)-(3) are exactly the quotients of hypercubes by
//! doubly even codes, built here by [`build_quotient_graph`]. Odd dashings
//! (axiom 4) are found by solving an F2 linear system with one variable per
//! edge and one parity equation per bicolored 4-cycle; switching classes of
//! dashings are cosets of the span of vertex stars inside the solution
//! space.

use crate::codes::{BinaryCode, CodeError, Coset, DEFAULT_MAX_VERTICES};
use crate::f2::{BitMatrix, BitVec, Echelon};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AdinkraError {
    #[error("code is not doubly even; the quotient graph would not be simple")]
    NotDoublyEven,
    #[error("axiom violation: {0}")]
    AxiomViolation(String),
    #[error("no odd dashing exists for this graph")]
    Infeasible,
    #[error("index {index} out of range for {what} of length {len}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        len: usize,
    },
    #[error("malformed graph: {0}")]
    InvalidGraph(String),
    #[error("signature has {found} signs but the graph has {expected} edges")]
    SignatureLength { expected: usize, found: usize },
    #[error("switching-class space has dimension {bits}, too many cosets to enumerate")]
    TooManyClasses { bits: usize },
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// An edge `{u, v}` of a given color; endpoints are stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub color: usize,
}

impl Edge {
    pub fn other(&self, vertex: usize) -> usize {
        if vertex == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, vertex: usize) -> bool {
        self.u == vertex || self.v == vertex
    }
}

/// A simple graph with colored edges on an ordered vertex set of cosets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    t: usize,
    n_colors: usize,
    vertices: Vec<Coset>,
    edges: Vec<Edge>,
}

/// Edge signs, `+1` or `-1`, indexed like the graph's edge list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    signs: Vec<i8>,
}

impl Signature {
    pub fn new(signs: Vec<i8>) -> Result<Self, AdinkraError> {
        if let Some(index) = signs.iter().position(|s| *s != 1 && *s != -1) {
            return Err(AdinkraError::InvalidGraph(format!(
                "sign at edge {index} must be +1 or -1"
            )));
        }
        Ok(Signature { signs })
    }

    pub fn all_positive(len: usize) -> Self {
        Signature { signs: vec![1; len] }
    }

    fn from_bits(bits: &BitVec) -> Self {
        Signature {
            signs: (0..bits.len())
                .map(|i| if bits.get(i) { -1 } else { 1 })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn sign(&self, edge: usize) -> i8 {
        self.signs[edge]
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn negative_count(&self) -> usize {
        self.signs.iter().filter(|s| **s < 0).count()
    }
}

/// A colored graph together with a signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Adinkra {
    graph: ColoredGraph,
    signature: Signature,
}

impl ColoredGraph {
    /// Assemble a graph from explicit parts. Enforces only simplicity
    /// (no loops, no repeated vertex pairs) and index ranges; the Adinkra
    /// axioms are the validator's business.
    pub fn from_parts(
        t: usize,
        n_colors: usize,
        vertices: Vec<Coset>,
        edges: Vec<Edge>,
    ) -> Result<Self, AdinkraError> {
        let nv = vertices.len();
        let mut normalized = Vec::with_capacity(edges.len());
        for e in edges {
            if e.u >= nv || e.v >= nv {
                return Err(AdinkraError::IndexOutOfRange {
                    what: "vertices",
                    index: e.u.max(e.v),
                    len: nv,
                });
            }
            if e.color >= n_colors {
                return Err(AdinkraError::IndexOutOfRange {
                    what: "colors",
                    index: e.color,
                    len: n_colors,
                });
            }
            if e.u == e.v {
                return Err(AdinkraError::InvalidGraph(format!("loop at vertex {}", e.u)));
            }
            let (u, v) = (e.u.min(e.v), e.u.max(e.v));
            normalized.push(Edge { u, v, color: e.color });
        }
        normalized.sort_by_key(|e| (e.u, e.color, e.v));
        for w in normalized.windows(2) {
            if w[0].u == w[1].u && w[0].v == w[1].v {
                return Err(AdinkraError::InvalidGraph(format!(
                    "parallel edges between {} and {}",
                    w[0].u, w[0].v
                )));
            }
        }
        Ok(ColoredGraph {
            t,
            n_colors,
            vertices,
            edges: normalized,
        })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn n_colors(&self) -> usize {
        self.n_colors
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Coset] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_label(&self, index: usize) -> String {
        crate::codes::bits_to_string(self.vertices[index].representative, self.t)
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let (u, v) = (a.min(b), a.max(b));
        self.edges.iter().position(|e| e.u == u && e.v == v)
    }

    /// Lookup table `vertex * n_colors + color -> edge index`; errors unless
    /// every vertex meets exactly one edge of each color.
    fn incidence(&self) -> Result<Vec<usize>, AdinkraError> {
        let nv = self.vertex_count();
        let mut table = vec![usize::MAX; nv * self.n_colors];
        for (idx, e) in self.edges.iter().enumerate() {
            for end in [e.u, e.v] {
                let slot = &mut table[end * self.n_colors + e.color];
                if *slot != usize::MAX {
                    return Err(AdinkraError::AxiomViolation(format!(
                        "vertex {end} meets two edges of color {}",
                        e.color
                    )));
                }
                *slot = idx;
            }
        }
        if let Some(miss) = table.iter().position(|&x| x == usize::MAX) {
            return Err(AdinkraError::AxiomViolation(format!(
                "vertex {} has no edge of color {}",
                miss / self.n_colors,
                miss % self.n_colors
            )));
        }
        Ok(table)
    }

    fn neighbor_via(&self, incidence: &[usize], vertex: usize, color: usize) -> (usize, usize) {
        let e = incidence[vertex * self.n_colors + color];
        (e, self.edges[e].other(vertex))
    }
}

/// Build the quotient of the hypercube Q_t by a doubly even code: vertices
/// are cosets, and flipping coordinate `i` gives the edge of color `i`.
pub fn build_quotient_graph(code: &BinaryCode) -> Result<ColoredGraph, AdinkraError> {
    build_quotient_graph_capped(code, DEFAULT_MAX_VERTICES)
}

pub fn build_quotient_graph_capped(
    code: &BinaryCode,
    cap: usize,
) -> Result<ColoredGraph, AdinkraError> {
    if !code.is_doubly_even() {
        // Weight-1 codewords would create loops, weight-2 parallel edges.
        return Err(AdinkraError::NotDoublyEven);
    }
    let cosets = code.cosets_capped(cap)?;
    let index_of: std::collections::HashMap<u64, usize> = cosets
        .iter()
        .enumerate()
        .map(|(i, c)| (code.reduce(c.representative), i))
        .collect();
    let t = code.t();
    let mut edges = Vec::with_capacity(cosets.len() * t / 2);
    for (u, coset) in cosets.iter().enumerate() {
        for color in 0..t {
            let image = code.reduce(coset.representative ^ (1 << color));
            let v = index_of[&image];
            if v > u {
                edges.push(Edge { u, v, color });
            }
        }
    }
    ColoredGraph::from_parts(t, t, cosets, edges)
}

/// All bicolored 4-cycles, each as the 4 edge indices in traversal order
/// (alternating the two colors). Errors if some bicolored component is not
/// a 4-cycle.
pub fn bicolored_cycles(graph: &ColoredGraph) -> Result<Vec<[usize; 4]>, AdinkraError> {
    let incidence = graph.incidence()?;
    let nv = graph.vertex_count();
    let mut cycles = Vec::new();
    for c1 in 0..graph.n_colors {
        for c2 in c1 + 1..graph.n_colors {
            let mut visited = vec![false; nv];
            for start in 0..nv {
                if visited[start] {
                    continue;
                }
                let (e1, a) = graph.neighbor_via(&incidence, start, c1);
                let (e2, b) = graph.neighbor_via(&incidence, a, c2);
                let (e3, c) = graph.neighbor_via(&incidence, b, c1);
                let (e4, back) = graph.neighbor_via(&incidence, c, c2);
                let quad = [start, a, b, c];
                let distinct = quad.iter().collect::<std::collections::HashSet<_>>().len() == 4;
                if back != start || !distinct {
                    return Err(AdinkraError::AxiomViolation(format!(
                        "colors {c1},{c2} do not close a 4-cycle at vertex {start}"
                    )));
                }
                for q in quad {
                    visited[q] = true;
                }
                cycles.push([e1, e2, e3, e4]);
            }
        }
    }
    Ok(cycles)
}

/// Find an odd dashing: a signature with an odd number of negative edges on
/// every bicolored 4-cycle. Solves the parity system over F2 and returns the
/// solution with all free variables positive.
pub fn solve_signature(graph: &ColoredGraph) -> Result<Signature, AdinkraError> {
    let cycles = bicolored_cycles(graph)?;
    let system = cycle_system(graph, &cycles);
    let rhs = vec![true; cycles.len()];
    match system.solve(&rhs) {
        Some(bits) => Ok(Signature::from_bits(&bits)),
        None => Err(AdinkraError::Infeasible),
    }
}

fn cycle_system(graph: &ColoredGraph, cycles: &[[usize; 4]]) -> BitMatrix {
    let mut m = BitMatrix::new(graph.edges.len());
    for cycle in cycles {
        let mut row = BitVec::zeros(graph.edges.len());
        for &e in cycle {
            row.flip(e);
        }
        m.push_row(row);
    }
    m
}

/// Pass/fail record for the four Adinkra axioms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    /// Axiom 1: the underlying graph is bipartite.
    pub bipartite: bool,
    /// Axiom 2: every vertex meets exactly one edge of each color.
    pub proper_coloring: bool,
    /// Axiom 3: every bicolored subgraph is a disjoint union of 4-cycles.
    pub four_cycles: bool,
    /// Axiom 4: every bicolored 4-cycle has an odd number of negative edges.
    pub odd_dashing: bool,
    pub failures: Vec<String>,
}

impl ValidationReport {
    pub fn passes(&self) -> bool {
        self.bipartite && self.proper_coloring && self.four_cycles && self.odd_dashing
    }

    pub fn first_failure(&self) -> Option<&'static str> {
        if !self.bipartite {
            Some("axiom1")
        } else if !self.proper_coloring {
            Some("axiom2")
        } else if !self.four_cycles {
            Some("axiom3")
        } else if !self.odd_dashing {
            Some("axiom4")
        } else {
            None
        }
    }
}

fn is_bipartite(graph: &ColoredGraph) -> bool {
    let nv = graph.vertex_count();
    let mut adj = vec![Vec::new(); nv];
    for e in &graph.edges {
        adj[e.u].push(e.v);
        adj[e.v].push(e.u);
    }
    let mut side = vec![None; nv];
    for root in 0..nv {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            let sx = side[x].unwrap();
            for &y in &adj[x] {
                match side[y] {
                    None => {
                        side[y] = Some(!sx);
                        queue.push_back(y);
                    }
                    Some(sy) if sy == sx => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

impl Adinkra {
    pub fn new(graph: ColoredGraph, signature: Signature) -> Result<Self, AdinkraError> {
        if signature.len() != graph.edges.len() {
            return Err(AdinkraError::SignatureLength {
                expected: graph.edges.len(),
                found: signature.len(),
            });
        }
        Ok(Adinkra { graph, signature })
    }

    /// Build the quotient graph of a doubly even code and solve for an odd
    /// dashing in one step.
    pub fn from_code(code: &BinaryCode) -> Result<Self, AdinkraError> {
        Self::from_code_capped(code, DEFAULT_MAX_VERTICES)
    }

    pub fn from_code_capped(code: &BinaryCode, cap: usize) -> Result<Self, AdinkraError> {
        let graph = build_quotient_graph_capped(code, cap)?;
        let signature = solve_signature(&graph)?;
        Adinkra::new(graph, signature)
    }

    pub fn graph(&self) -> &ColoredGraph {
        &self.graph
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn n_colors(&self) -> usize {
        self.graph.n_colors
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_sign(&self, edge: usize) -> i8 {
        self.signature.sign(edge)
    }

    /// Replace the signature, keeping the graph.
    pub fn with_signature(&self, signature: Signature) -> Result<Self, AdinkraError> {
        Adinkra::new(self.graph.clone(), signature)
    }
}

/// Check all four Adinkra axioms; failures are report entries, not errors.
pub fn validate_adinkra(adinkra: &Adinkra) -> ValidationReport {
    let graph = adinkra.graph();
    let mut failures = Vec::new();

    let bipartite = is_bipartite(graph);
    if !bipartite {
        failures.push("graph is not bipartite".to_string());
    }

    let proper_coloring = match graph.incidence() {
        Ok(_) => true,
        Err(e) => {
            failures.push(e.to_string());
            false
        }
    };

    let (four_cycles, odd_dashing) = if proper_coloring {
        match bicolored_cycles(graph) {
            Ok(cycles) => {
                let mut odd = true;
                for cycle in &cycles {
                    let negatives = cycle
                        .iter()
                        .filter(|&&e| adinkra.edge_sign(e) < 0)
                        .count();
                    if negatives % 2 == 0 {
                        failures.push(format!(
                            "bicolored cycle through edges {cycle:?} has {negatives} negative edges"
                        ));
                        odd = false;
                    }
                }
                (true, odd)
            }
            Err(e) => {
                failures.push(e.to_string());
                (false, false)
            }
        }
    } else {
        (false, false)
    };

    ValidationReport {
        bipartite,
        proper_coloring,
        four_cycles,
        odd_dashing,
        failures,
    }
}

/// Negate the signs of all edges incident to `vertex`. Switching preserves
/// the Adinkra axioms and the critical group.
pub fn switch_vertex(adinkra: &Adinkra, vertex: usize) -> Result<Adinkra, AdinkraError> {
    let nv = adinkra.vertex_count();
    if vertex >= nv {
        return Err(AdinkraError::IndexOutOfRange {
            what: "vertices",
            index: vertex,
            len: nv,
        });
    }
    let mut signs = adinkra.signature.signs.clone();
    for (i, e) in adinkra.graph.edges.iter().enumerate() {
        if e.touches(vertex) {
            signs[i] = -signs[i];
        }
    }
    adinkra.with_signature(Signature { signs })
}

/// The switching classes of odd dashings of a graph.
#[derive(Debug, Clone)]
pub struct SwitchingClasses {
    /// One representative dashing per class, in a fixed enumeration order.
    pub representatives: Vec<Signature>,
    pub class_count: u64,
    /// Dimension of the homogeneous solution space of the parity system.
    pub solution_space_dim: usize,
    /// Rank of the span of vertex stars (v - 1 for connected graphs).
    pub switching_rank: usize,
}

const MAX_CLASS_BITS: usize = 16;

/// Enumerate switching classes of odd dashings.
///
/// The odd dashings form a coset of the parity system's kernel S0; switching
/// acts by adding vertex stars, which all lie in S0 because a 4-cycle meets
/// each vertex in 0 or 2 edges. Classes are therefore cosets of the star
/// span W inside S0, and there are 2^(dim S0 - rank W) of them.
pub fn enumerate_switching_classes(
    graph: &ColoredGraph,
) -> Result<SwitchingClasses, AdinkraError> {
    let cycles = bicolored_cycles(graph)?;
    let system = cycle_system(graph, &cycles);
    let rhs = vec![true; cycles.len()];
    let particular = system.solve(&rhs).ok_or(AdinkraError::Infeasible)?;
    let kernel = system.nullspace();

    let ne = graph.edges.len();
    let mut span = Echelon::new(ne);
    for vertex in 0..graph.vertex_count() {
        let mut star = BitVec::zeros(ne);
        for (i, e) in graph.edges.iter().enumerate() {
            if e.touches(vertex) {
                star.flip(i);
            }
        }
        span.insert(&star);
    }
    let switching_rank = span.rank();

    // Extend the star span to a basis of the kernel; the added vectors
    // parametrize the classes.
    let mut complement = Vec::new();
    for vector in &kernel {
        let reduced = span.reduce(vector);
        if span.insert(&reduced) {
            complement.push(reduced);
        }
    }
    let bits = complement.len();
    if bits > MAX_CLASS_BITS {
        return Err(AdinkraError::TooManyClasses { bits });
    }

    let mut representatives = Vec::with_capacity(1 << bits);
    for subset in 0u64..(1 << bits) {
        let mut rep = particular.clone();
        for (j, vector) in complement.iter().enumerate() {
            if subset >> j & 1 == 1 {
                rep.xor_assign(vector);
            }
        }
        representatives.push(Signature::from_bits(&rep));
    }

    Ok(SwitchingClasses {
        class_count: 1 << bits,
        representatives,
        solution_space_dim: kernel.len(),
        switching_rank,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn quotient_adinkra(rows: &[&str]) -> Adinkra {
        let code = BinaryCode::from_strings(rows).unwrap();
        Adinkra::from_code(&code).unwrap()
    }

    pub(crate) fn hypercube_adinkra(t: usize) -> Adinkra {
        let code = BinaryCode::hypercube(t).unwrap();
        Adinkra::from_code(&code).unwrap()
    }

    fn plain_vertices(n: usize) -> Vec<Coset> {
        (0..n as u64).map(|representative| Coset { representative }).collect()
    }

    fn edge(u: usize, v: usize, color: usize) -> Edge {
        Edge { u, v, color }
    }

    /// 3-colored cube dashing with negatives on EH, EF, DC, FG
    /// (vertices A..H as 0..7).
    pub(crate) fn hand_built_q3() -> Adinkra {
        let edges = vec![
            edge(0, 4, 0), edge(3, 7, 0), edge(1, 5, 0), edge(2, 6, 0),
            edge(0, 3, 1), edge(4, 7, 1), edge(1, 2, 1), edge(5, 6, 1),
            edge(0, 1, 2), edge(4, 5, 2), edge(3, 2, 2), edge(6, 7, 2),
        ];
        let graph = ColoredGraph::from_parts(3, 3, plain_vertices(8), edges).unwrap();
        let negatives = [(4, 7), (4, 5), (2, 3), (5, 6)];
        let mut signs = vec![1i8; graph.edges().len()];
        for (a, b) in negatives {
            signs[graph.edge_index(a, b).unwrap()] = -1;
        }
        Adinkra::new(graph, Signature::new(signs).unwrap()).unwrap()
    }

    /// 4-colored complete bipartite dashing between {0..3} and {4..7}.
    pub(crate) fn hand_built_k44() -> Adinkra {
        // (A,B,C,D,E,F,G,H) = (0..7); colors: red 0, blue 1, black 2, green 3.
        let edges = vec![
            edge(1, 4, 0), edge(3, 6, 0), edge(2, 7, 0), edge(0, 5, 0),
            edge(3, 4, 1), edge(1, 6, 1), edge(0, 7, 1), edge(2, 5, 1),
            edge(3, 7, 2), edge(2, 6, 2), edge(0, 4, 2), edge(1, 5, 2),
            edge(2, 4, 3), edge(0, 6, 3), edge(3, 5, 3), edge(1, 7, 3),
        ];
        let graph = ColoredGraph::from_parts(4, 4, plain_vertices(8), edges).unwrap();
        let negatives = [(1, 6), (2, 5), (2, 6), (0, 4), (0, 6), (1, 7)];
        let mut signs = vec![1i8; graph.edges().len()];
        for (a, b) in negatives {
            signs[graph.edge_index(a, b).unwrap()] = -1;
        }
        Adinkra::new(graph, Signature::new(signs).unwrap()).unwrap()
    }

    /// Properly 3-colored K_{3,3}: bicolored components are 6-cycles.
    fn k33_graph() -> ColoredGraph {
        let mut edges = Vec::new();
        for i in 0..3 {
            for c in 0..3 {
                edges.push(edge(i, 3 + (i + c) % 3, c));
            }
        }
        ColoredGraph::from_parts(3, 3, plain_vertices(6), edges).unwrap()
    }

    #[test]
    fn quotient_shapes() {
        let q3 = hypercube_adinkra(3);
        assert_eq!(q3.vertex_count(), 8);
        assert_eq!(q3.graph().edges().len(), 12);
        assert_eq!(q3.n_colors(), 3);

        let k44 = quotient_adinkra(&["1111"]);
        assert_eq!(k44.vertex_count(), 8);
        assert_eq!(k44.graph().edges().len(), 16);
        assert_eq!(k44.n_colors(), 4);

        let big = quotient_adinkra(&["11110000", "00001111"]);
        assert_eq!(big.vertex_count(), 64);
        assert_eq!(big.graph().edges().len(), 256);
        assert_eq!(big.n_colors(), 8);
    }

    #[test]
    fn quotient_requires_doubly_even() {
        let code = BinaryCode::from_strings(&["1100"]).unwrap();
        assert!(matches!(
            build_quotient_graph(&code),
            Err(AdinkraError::NotDoublyEven)
        ));
    }

    #[test]
    fn cycle_counts() {
        let q3 = hypercube_adinkra(3);
        assert_eq!(bicolored_cycles(q3.graph()).unwrap().len(), 6);
        let k44 = quotient_adinkra(&["1111"]);
        assert_eq!(bicolored_cycles(k44.graph()).unwrap().len(), 12);
        let q2 = hypercube_adinkra(2);
        assert_eq!(bicolored_cycles(q2.graph()).unwrap().len(), 1);
    }

    #[test]
    fn edge_count_formula_on_quotients() {
        for adinkra in [
            hypercube_adinkra(2),
            hypercube_adinkra(3),
            hypercube_adinkra(4),
            quotient_adinkra(&["1111"]),
            quotient_adinkra(&["11110000", "00001111"]),
        ] {
            let v = adinkra.vertex_count();
            let n = adinkra.n_colors();
            assert_eq!(adinkra.graph().edges().len(), v * n / 2);
            assert_eq!(
                bicolored_cycles(adinkra.graph()).unwrap().len(),
                n * (n - 1) / 2 * v / 4
            );
        }
    }

    #[test]
    fn solved_signatures_validate() {
        for adinkra in [
            hypercube_adinkra(2),
            hypercube_adinkra(3),
            quotient_adinkra(&["1111"]),
            quotient_adinkra(&["11110000", "00001111"]),
        ] {
            let report = validate_adinkra(&adinkra);
            assert!(report.passes(), "failures: {:?}", report.failures);
        }
    }

    #[test]
    fn q2_solution_has_odd_negatives() {
        let q2 = hypercube_adinkra(2);
        assert!(q2.signature().negative_count() % 2 == 1);
    }

    #[test]
    fn all_positive_dashing_fails_axiom_four_everywhere() {
        let q3 = hypercube_adinkra(3);
        let flat = q3
            .with_signature(Signature::all_positive(q3.graph().edges().len()))
            .unwrap();
        let report = validate_adinkra(&flat);
        assert!(!report.odd_dashing);
        assert!(report.bipartite && report.proper_coloring && report.four_cycles);
        assert_eq!(report.first_failure(), Some("axiom4"));
        // Every one of the 6 cycles is even.
        assert_eq!(report.failures.len(), 6);
    }

    #[test]
    fn hand_built_dashings_validate() {
        assert!(validate_adinkra(&hand_built_q3()).passes());
        assert!(validate_adinkra(&hand_built_k44()).passes());
    }

    #[test]
    fn k33_violates_axiom_three() {
        let graph = k33_graph();
        assert!(matches!(
            bicolored_cycles(&graph),
            Err(AdinkraError::AxiomViolation(_))
        ));
        let flat = Adinkra::new(
            graph.clone(),
            Signature::all_positive(graph.edges().len()),
        )
        .unwrap();
        let report = validate_adinkra(&flat);
        assert!(report.bipartite && report.proper_coloring);
        assert!(!report.four_cycles);
        assert_eq!(report.first_failure(), Some("axiom3"));
    }

    #[test]
    fn switching_is_an_involution() {
        let q3 = hypercube_adinkra(3);
        let once = switch_vertex(&q3, 5).unwrap();
        assert_ne!(once.signature(), q3.signature());
        let twice = switch_vertex(&once, 5).unwrap();
        assert_eq!(twice, q3);
    }

    #[test]
    fn switching_preserves_validity() {
        let q3 = hypercube_adinkra(3);
        for vertex in 0..q3.vertex_count() {
            let switched = switch_vertex(&q3, vertex).unwrap();
            assert!(validate_adinkra(&switched).passes());
        }
        assert!(matches!(
            switch_vertex(&q3, 8),
            Err(AdinkraError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn switching_class_counts() {
        let q2 = hypercube_adinkra(2);
        assert_eq!(enumerate_switching_classes(q2.graph()).unwrap().class_count, 1);
        let q3 = hypercube_adinkra(3);
        assert_eq!(enumerate_switching_classes(q3.graph()).unwrap().class_count, 1);
        let k44 = quotient_adinkra(&["1111"]);
        let classes = enumerate_switching_classes(k44.graph()).unwrap();
        assert!(classes.class_count >= 2, "found {}", classes.class_count);
        for rep in &classes.representatives {
            let candidate = k44.with_signature(rep.clone()).unwrap();
            assert!(validate_adinkra(&candidate).passes());
        }
    }

    #[test]
    fn inequivalent_dashings_exist_iff_code_has_all_ones() {
        for (rows, t) in [
            (vec![], 3usize),
            (vec!["1111"], 4),
            (vec!["11110000"], 8),
            (vec!["11110000", "00001111"], 8),
        ] {
            let code = if rows.is_empty() {
                BinaryCode::hypercube(t).unwrap()
            } else {
                BinaryCode::from_strings(&rows).unwrap()
            };
            let graph = build_quotient_graph(&code).unwrap();
            let classes = enumerate_switching_classes(&graph).unwrap();
            assert_eq!(
                classes.class_count > 1,
                code.contains_all_ones(),
                "code {rows:?}"
            );
        }
    }

    #[test]
    fn switching_rank_is_vertices_minus_one_on_connected_quotients() {
        for adinkra in [hypercube_adinkra(3), quotient_adinkra(&["1111"])] {
            let classes = enumerate_switching_classes(adinkra.graph()).unwrap();
            assert_eq!(classes.switching_rank, adinkra.vertex_count() - 1);
        }
    }

    /// Brute-force check on the 4-cycle: all odd dashings are switching
    /// equivalent, and the class count is 1.
    #[test]
    fn q2_brute_force_single_class() {
        let q2 = hypercube_adinkra(2);
        let ne = q2.graph().edges().len();
        let mut odd_dashings = Vec::new();
        for mask in 0u32..(1 << ne) {
            let signs: Vec<i8> = (0..ne)
                .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                .collect();
            let candidate = q2.with_signature(Signature::new(signs).unwrap()).unwrap();
            if validate_adinkra(&candidate).passes() {
                odd_dashings.push(candidate.signature().clone());
            }
        }
        assert_eq!(odd_dashings.len(), 8); // 1 or 3 negatives out of 4 edges
        let orbit = switching_orbit(&q2);
        for dashing in &odd_dashings {
            assert!(orbit.contains(dashing));
        }
    }

    /// Distinct class representatives are not connected by switching.
    #[test]
    fn k44_class_representatives_in_distinct_orbits() {
        let k44 = quotient_adinkra(&["1111"]);
        let classes = enumerate_switching_classes(k44.graph()).unwrap();
        let first = k44
            .with_signature(classes.representatives[0].clone())
            .unwrap();
        let orbit = switching_orbit(&first);
        for rep in &classes.representatives[1..] {
            assert!(!orbit.contains(rep));
        }
    }

    fn switching_orbit(adinkra: &Adinkra) -> std::collections::HashSet<Signature> {
        let mut seen = std::collections::HashSet::new();
        let mut queue = std::collections::VecDeque::from([adinkra.clone()]);
        seen.insert(adinkra.signature().clone());
        while let Some(current) = queue.pop_front() {
            for vertex in 0..current.vertex_count() {
                let next = switch_vertex(&current, vertex).unwrap();
                if seen.insert(next.signature().clone()) {
                    queue.push_back(next);
                }
            }
        }
        seen
    }
}
