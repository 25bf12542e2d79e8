//! Simplicial complexes stored by their facets.
//!
//! Vertices are small integers (`0..64`) and faces are bitsets over them, so
//! the set operations behind star, link, deletion and costar are single
//! machine instructions. A complex is the antichain of its facets plus a
//! ground set. Two complexes compare equal when they have the same faces;
//! the ground set is bookkeeping for operations that add vertices.
//!
//! Two degenerate complexes are kept apart: the void complex `<>` has no
//! faces at all, while `<{}>` has exactly the empty face.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use crate::graph::{DegreeMismatch, Graph};

pub type Vertex = u32;

/// Largest vertex id a [`Face`] can hold.
pub const MAX_VERTEX: Vertex = 63;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("vertex {0} is out of range (vertices are 0..={MAX_VERTEX})")]
    VertexOutOfRange(u64),
    #[error("vertex {0} is not in the ground set")]
    UnknownVertex(Vertex),
    #[error("vertex {0} is already in use")]
    VertexCollision(Vertex),
    #[error("{0} is not a facet")]
    NotAFacet(Face),
    #[error("complex is not pure")]
    NotPure,
    #[error(transparent)]
    DegreeMismatch(#[from] DegreeMismatch),
}

/// A finite set of vertices.
///
/// Faces order lexicographically on their sorted vertex lists, so
/// `{1,2} < {1,2,3} < {1,3} < {2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn try_new(vertices: impl IntoIterator<Item = Vertex>) -> Result<Self, ComplexError> {
        let mut bits = 0u64;
        for v in vertices {
            if v > MAX_VERTEX {
                return Err(ComplexError::VertexOutOfRange(v as u64));
            }
            bits |= 1 << v;
        }
        Ok(Face(bits))
    }

    /// # Panics
    /// If a vertex exceeds [`MAX_VERTEX`].
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        Self::try_new(vertices).expect("vertex out of range")
    }

    pub fn singleton(v: Vertex) -> Self {
        Face::new([v])
    }

    pub const fn from_bits(bits: u64) -> Self {
        Face(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `|F| - 1`; the empty face has dimension -1.
    pub fn dim(self) -> isize {
        self.len() as isize - 1
    }

    pub fn contains(self, v: Vertex) -> bool {
        v <= MAX_VERTEX && self.0 & (1 << v) != 0
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn with(self, v: Vertex) -> Face {
        self.union(Face::singleton(v))
    }

    pub fn without(self, v: Vertex) -> Face {
        self.difference(Face::singleton(v))
    }

    pub fn vertices(self) -> impl Iterator<Item = Vertex> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros();
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn min_vertex(self) -> Option<Vertex> {
        (self.0 != 0).then(|| self.0.trailing_zeros())
    }

    pub fn max_vertex(self) -> Option<Vertex> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros())
    }

    /// All subsets, including the empty face and `self`.
    pub fn subsets(self) -> impl Iterator<Item = Face> {
        let full = self.0;
        let mut sub = full;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let cur = sub;
            if sub == 0 {
                done = true;
            } else {
                sub = (sub - 1) & full;
            }
            Some(Face(cur))
        })
    }

    /// Order by size first, then lexicographically.
    pub fn graded_cmp(&self, other: &Face) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.cmp(other))
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let v = diff.trailing_zeros();
        // Everything below v is shared. The face holding v is smaller unless
        // the other face stops right there.
        let above = |bits: u64| if v >= 63 { 0 } else { bits >> (v + 1) };
        if self.0 & (1 << v) != 0 {
            if above(other.0) != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if above(self.0) != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl serde::Serialize for Face {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.vertices())
    }
}

impl FromIterator<Vertex> for Face {
    fn from_iter<T: IntoIterator<Item = Vertex>>(iter: T) -> Self {
        Face::new(iter)
    }
}

/// Keeps the inclusion-maximal faces, sorted. Returns how many were dropped.
fn maximal_faces(faces: impl IntoIterator<Item = Face>) -> (Vec<Face>, usize) {
    let mut all: Vec<Face> = faces.into_iter().collect();
    let total = all.len();
    all.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    all.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(all.len());
    for f in all {
        if !kept.iter().any(|k| f.is_subset(*k)) {
            kept.push(f);
        }
    }
    kept.sort();
    let dropped = total - kept.len();
    (kept, dropped)
}

#[derive(Clone)]
pub struct SimplicialComplex {
    ground: Face,
    facets: Vec<Face>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl std::hash::Hash for SimplicialComplex {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.facets.hash(state);
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{facet}")?;
        }
        write!(f, ">")
    }
}

impl SimplicialComplex {
    /// The complex generated by `faces`; the ground set is their union.
    pub fn from_facets(faces: impl IntoIterator<Item = Face>) -> Self {
        Self::from_facets_reporting(faces).0
    }

    /// Like [`from_facets`](Self::from_facets), also returning how many input
    /// faces were absorbed by larger ones (or repeated).
    pub fn from_facets_reporting(faces: impl IntoIterator<Item = Face>) -> (Self, usize) {
        let (facets, dropped) = maximal_faces(faces);
        let ground = facets.iter().fold(Face::EMPTY, |acc, f| acc.union(*f));
        (SimplicialComplex { ground, facets }, dropped)
    }

    /// Convenience constructor from vertex lists.
    pub fn from_vertex_lists<I, F>(lists: I) -> Self
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = Vertex>,
    {
        Self::from_facets(lists.into_iter().map(Face::new))
    }

    /// The void complex `<>`, with no faces.
    pub fn void() -> Self {
        SimplicialComplex {
            ground: Face::EMPTY,
            facets: Vec::new(),
        }
    }

    /// The complex `<{}>` whose only face is the empty face.
    pub fn empty_face_only() -> Self {
        SimplicialComplex {
            ground: Face::EMPTY,
            facets: vec![Face::EMPTY],
        }
    }

    /// Replaces the ground set; it must contain every vertex.
    pub fn with_ground_set(mut self, ground: Face) -> Result<Self, ComplexError> {
        let verts = self.vertex_set();
        if let Some(v) = verts.difference(ground).min_vertex() {
            return Err(ComplexError::UnknownVertex(v));
        }
        self.ground = ground;
        Ok(self)
    }

    fn derived(&self, faces: impl IntoIterator<Item = Face>) -> Self {
        let (facets, _) = maximal_faces(faces);
        SimplicialComplex {
            ground: self.ground,
            facets,
        }
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn ground_set(&self) -> Face {
        self.ground
    }

    /// Vertices that lie in some facet.
    pub fn vertex_set(&self) -> Face {
        self.facets.iter().fold(Face::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len()) || self.facets.len() <= 1
    }

    /// At most one facet. Both `<>` and `<{}>` count as simplices.
    pub fn is_simplex(&self) -> bool {
        self.facets.len() <= 1
    }

    /// Largest facet dimension; `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.dim()).max()
    }

    pub fn is_facet(&self, f: Face) -> bool {
        self.facets.binary_search(&f).is_ok()
    }

    pub fn contains_face(&self, f: Face) -> bool {
        self.facets.iter().any(|g| f.is_subset(*g))
    }

    /// Every face, each once, ordered by size then lexicographically.
    pub fn faces(&self) -> Vec<Face> {
        let set: BTreeSet<u64> = self
            .facets
            .iter()
            .flat_map(|f| f.subsets())
            .map(Face::bits)
            .collect();
        let mut out: Vec<Face> = set.into_iter().map(Face::from_bits).collect();
        out.sort_by(Face::graded_cmp);
        out
    }

    /// Number of faces of each dimension, starting at dimension -1.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for f in self.faces() {
            if counts.len() <= f.len() {
                counts.resize(f.len() + 1, 0);
            }
            counts[f.len()] += 1;
        }
        counts
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &n)| if k % 2 == 1 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// Faces not containing `face`. Deleting the empty face leaves `<>`.
    pub fn deletion(&self, face: Face) -> Self {
        self.derived(self.facets.iter().flat_map(|&f| {
            let hit = face.is_subset(f);
            let keep = (!hit).then_some(f);
            let cut = face
                .vertices()
                .filter(move |_| hit)
                .map(move |v| f.without(v));
            keep.into_iter().chain(cut)
        }))
    }

    /// Generated by the facets containing `face`.
    pub fn star(&self, face: Face) -> Self {
        self.derived(self.facets.iter().copied().filter(|f| face.is_subset(*f)))
    }

    /// Star facets with `face` removed.
    pub fn link(&self, face: Face) -> Self {
        self.derived(
            self.facets
                .iter()
                .filter(|f| face.is_subset(**f))
                .map(|f| f.difference(face)),
        )
    }

    /// Generated by the facets not containing `face`.
    pub fn costar(&self, face: Face) -> Self {
        self.derived(self.facets.iter().copied().filter(|f| !face.is_subset(*f)))
    }

    /// Faces contained in `w`, which must lie in the ground set.
    pub fn induced(&self, w: Face) -> Result<Self, ComplexError> {
        if let Some(v) = w.difference(self.ground).min_vertex() {
            return Err(ComplexError::UnknownVertex(v));
        }
        let mut out = self.derived(self.facets.iter().map(|f| f.intersection(w)));
        out.ground = w;
        Ok(out)
    }

    /// The join with the simplex on `face`: every facet `G` becomes `G u face`.
    pub fn join_with_simplex(&self, face: Face) -> Result<Self, ComplexError> {
        if let Some(v) = face.intersection(self.vertex_set()).min_vertex() {
            return Err(ComplexError::VertexCollision(v));
        }
        let mut out = self.derived(self.facets.iter().map(|f| f.union(face)));
        out.ground = self.ground.union(face);
        Ok(out)
    }

    /// All faces obtained from a facet by dropping one vertex.
    pub fn ridges(&self) -> BTreeSet<Face> {
        self.facets
            .iter()
            .flat_map(|&f| f.vertices().map(move |v| f.without(v)))
            .collect()
    }

    /// How many facets contain each ridge.
    pub fn ridge_incidence(&self) -> BTreeMap<Face, usize> {
        let mut counts = BTreeMap::new();
        for &f in &self.facets {
            for v in f.vertices() {
                *counts.entry(f.without(v)).or_insert(0) += 1;
            }
        }
        counts
    }

    /// Number of facets containing each vertex of the ground set.
    pub fn degree_profile(&self) -> BTreeMap<Vertex, usize> {
        let mut out: BTreeMap<Vertex, usize> = self.ground.vertices().map(|v| (v, 0)).collect();
        for f in &self.facets {
            for v in f.vertices() {
                *out.entry(v).or_insert(0) += 1;
            }
        }
        out
    }

    pub fn facet_ridge_graph(&self) -> Result<FacetRidgeGraph, ComplexError> {
        if !self.is_pure() {
            return Err(ComplexError::NotPure);
        }
        let n = self.facets.len();
        let mut graph = Graph::new(n);
        // Bucket facets by ridge so the pass is linear in facet-ridge incidences.
        let mut by_ridge: HashMap<Face, Vec<usize>> = HashMap::new();
        for (i, &f) in self.facets.iter().enumerate() {
            for v in f.vertices() {
                by_ridge.entry(f.without(v)).or_default().push(i);
            }
        }
        for nodes in by_ridge.values() {
            for (k, &a) in nodes.iter().enumerate() {
                for &b in &nodes[k + 1..] {
                    graph.add_edge(a, b);
                }
            }
        }
        Ok(FacetRidgeGraph {
            facets: self.facets.clone(),
            graph,
        })
    }

    /// Replaces `facet` by the cone from `apex` over its boundary.
    pub fn stellar_subdivide(&self, facet: Face, apex: Vertex) -> Result<Self, ComplexError> {
        if !self.is_facet(facet) {
            return Err(ComplexError::NotAFacet(facet));
        }
        if apex > MAX_VERTEX {
            return Err(ComplexError::VertexOutOfRange(apex as u64));
        }
        if self.ground.contains(apex) {
            return Err(ComplexError::VertexCollision(apex));
        }
        let replaced = facet.vertices().map(|v| facet.without(v).with(apex));
        let kept = self.facets.iter().copied().filter(|f| *f != facet);
        let mut out = self.derived(kept.chain(replaced));
        out.ground = self.ground.with(apex);
        Ok(out)
    }

    /// Applies `map` to every vertex. `map` must be injective on the ground set.
    pub fn relabel(&self, map: impl Fn(Vertex) -> Vertex) -> Self {
        let apply = |f: Face| f.vertices().map(&map).collect::<Face>();
        SimplicialComplex {
            ground: apply(self.ground),
            facets: maximal_faces(self.facets.iter().map(|&f| apply(f))).0,
        }
    }

    /// Relabels the vertex set onto `0..k` preserving order; a cheap key for
    /// memoising properties invariant under relabelling.
    pub fn compact_key(&self) -> Vec<u64> {
        let verts = self.vertex_set();
        let mut facets: Vec<u64> = self
            .facets
            .iter()
            .map(|&f| {
                let mut bits = 0u64;
                for (i, v) in verts.vertices().enumerate() {
                    if f.contains(v) {
                        bits |= 1 << i;
                    }
                }
                bits
            })
            .collect();
        facets.sort_unstable();
        facets
    }

    /// Betti numbers over GF(2), `b_0 ..= b_dim`.
    pub fn gf2_homology(&self) -> Vec<usize> {
        let dim = match self.dim() {
            Some(d) if d >= 0 => d as usize,
            _ => return Vec::new(),
        };
        let mut by_dim: Vec<Vec<Face>> = vec![Vec::new(); dim + 1];
        for f in self.faces() {
            if !f.is_empty() {
                by_dim[f.len() - 1].push(f);
            }
        }
        // rank of the boundary map C_k -> C_{k-1}, k >= 1
        let mut ranks = vec![0usize; dim + 2];
        for k in 1..=dim {
            let index: HashMap<Face, usize> = by_dim[k - 1]
                .iter()
                .enumerate()
                .map(|(i, &f)| (f, i))
                .collect();
            let rows: Vec<BitRow> = by_dim[k]
                .iter()
                .map(|&f| {
                    let mut row = BitRow::zeros(index.len());
                    for v in f.vertices() {
                        row.set(index[&f.without(v)]);
                    }
                    row
                })
                .collect();
            ranks[k] = gf2_rank(rows);
        }
        (0..=dim)
            .map(|k| by_dim[k].len() - ranks[k] - ranks[k + 1])
            .collect()
    }

    pub fn pseudomanifold_report(&self) -> Result<PseudomanifoldReport, ComplexError> {
        if !self.is_pure() {
            return Err(ComplexError::NotPure);
        }
        let mut boundary = Vec::new();
        let mut singular = Vec::new();
        for (ridge, count) in self.ridge_incidence() {
            match count {
                2 => {}
                1 => boundary.push(ridge),
                _ => singular.push(ridge),
            }
        }
        let connected = self.facet_ridge_graph()?.graph.is_connected();
        Ok(PseudomanifoldReport {
            boundary_ridges: boundary,
            singular_ridges: singular,
            connected,
        })
    }

    /// Every ridge in exactly two facets and a connected facet-ridge graph.
    pub fn is_pseudomanifold(&self) -> Result<bool, ComplexError> {
        Ok(self.pseudomanifold_report()?.holds() && !self.is_void())
    }

    /// Pseudomanifold whose GF(2) homology is that of a sphere of its
    /// dimension. `<{}>` counts as the (-1)-sphere.
    pub fn is_gf2_homology_sphere(&self) -> bool {
        match self.dim() {
            None => false,
            Some(-1) => true,
            Some(d) => {
                if !self.is_pseudomanifold().unwrap_or(false) {
                    return false;
                }
                let betti = self.gf2_homology();
                let d = d as usize;
                let expected: Vec<usize> = if d == 0 {
                    vec![2]
                } else {
                    (0..=d).map(|k| usize::from(k == 0 || k == d)).collect()
                };
                betti == expected
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudomanifoldReport {
    /// Ridges lying in a single facet.
    pub boundary_ridges: Vec<Face>,
    /// Ridges lying in three or more facets.
    pub singular_ridges: Vec<Face>,
    pub connected: bool,
}

impl PseudomanifoldReport {
    pub fn holds(&self) -> bool {
        self.boundary_ridges.is_empty() && self.singular_ridges.is_empty() && self.connected
    }
}

/// The facet-ridge graph; node `i` is `facets[i]`, which follows the facet
/// order of the complex it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetRidgeGraph {
    pub facets: Vec<Face>,
    pub graph: Graph,
}

impl FacetRidgeGraph {
    pub fn node_of(&self, facet: Face) -> Option<usize> {
        self.facets.binary_search(&facet).ok()
    }

    pub fn node_count(&self) -> usize {
        self.facets.len()
    }

    /// Truncates the node of `facet`, the graph-side image of stellar subdivision.
    pub fn truncate_vertex(&self, facet: Face, d: usize) -> Result<Graph, ComplexError> {
        let node = self.node_of(facet).ok_or(ComplexError::NotAFacet(facet))?;
        Ok(self.graph.truncate_vertex(node, d)?)
    }
}

struct BitRow(Vec<u64>);

impl BitRow {
    fn zeros(n: usize) -> Self {
        BitRow(vec![0; n.div_ceil(64).max(1)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn lowest(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn xor(&mut self, other: &BitRow) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a ^= b;
        }
    }
}

fn gf2_rank(rows: Vec<BitRow>) -> usize {
    let mut pivots: HashMap<usize, BitRow> = HashMap::new();
    for mut row in rows {
        while let Some(p) = row.lowest() {
            match pivots.get(&p) {
                Some(pivot) => row.xor(pivot),
                None => {
                    pivots.insert(p, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(lists: &[&[Vertex]]) -> SimplicialComplex {
        SimplicialComplex::from_vertex_lists(lists.iter().map(|l| l.iter().copied()))
    }

    fn f(v: &[Vertex]) -> Face {
        Face::new(v.iter().copied())
    }

    fn pentagon() -> SimplicialComplex {
        cx(&[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]])
    }

    #[test]
    fn face_order_is_lexicographic() {
        let mut v = vec![f(&[2]), f(&[1, 3]), f(&[1, 2, 3]), f(&[1, 2]), Face::EMPTY];
        v.sort();
        assert_eq!(
            v,
            vec![Face::EMPTY, f(&[1, 2]), f(&[1, 2, 3]), f(&[1, 3]), f(&[2])]
        );
        assert!(f(&[63]) > f(&[1, 63]));
        assert!(f(&[0, 63]) < f(&[63]));
    }

    #[test]
    fn face_subsets_cover_power_set() {
        assert_eq!(f(&[1, 2, 3]).subsets().count(), 8);
        assert_eq!(Face::EMPTY.subsets().collect::<Vec<_>>(), vec![Face::EMPTY]);
    }

    #[test]
    fn from_facets_drops_absorbed_faces() {
        let (c, dropped) = SimplicialComplex::from_facets_reporting([f(&[1]), f(&[1, 2])]);
        assert_eq!(c.facets(), &[f(&[1, 2])]);
        assert_eq!(dropped, 1);
        assert!(SimplicialComplex::from_facets([]).is_void());
    }

    #[test]
    fn pentagon_faces() {
        let p = pentagon();
        assert!(p.is_pure());
        assert_eq!(p.dim(), Some(1));
        assert_eq!(p.faces().len(), 11);
        assert_eq!(cx(&[&[1, 2, 3]]).faces().len(), 8);
        assert!(SimplicialComplex::void().faces().is_empty());
        assert_eq!(
            SimplicialComplex::empty_face_only().faces(),
            vec![Face::EMPTY]
        );
    }

    #[test]
    fn deletion_cases() {
        let p = pentagon();
        assert_eq!(p.deletion(f(&[1])), cx(&[&[2, 3], &[3, 4], &[4, 5]]));
        assert!(p.deletion(Face::EMPTY).is_void());
        // deleting an edge keeps its endpoints
        assert_eq!(
            p.deletion(f(&[1, 2])),
            cx(&[&[1, 5], &[2, 3], &[3, 4], &[4, 5]])
        );
    }

    #[test]
    fn triangular_bipyramid() {
        // Two triangles glued along {4,5} plus apex triangles through vertex 3.
        let d = cx(&[&[1, 4, 5], &[2, 4, 5], &[1, 3, 4], &[2, 3, 4], &[1, 2, 3]]);
        let del = d.deletion(f(&[3]));
        assert_eq!(del, cx(&[&[1, 4, 5], &[2, 4, 5], &[1, 2]]));
        assert_eq!(d.link(f(&[3])), cx(&[&[1, 4], &[2, 4], &[1, 2]]));
    }

    #[test]
    fn star_link_costar() {
        let p = pentagon();
        assert_eq!(p.star(Face::EMPTY), p);
        assert_eq!(p.star(f(&[1])), cx(&[&[1, 2], &[1, 5]]));
        assert!(p.star(f(&[1, 3])).is_void());
        assert_eq!(p.link(f(&[1])), cx(&[&[2], &[5]]));
        assert_eq!(p.link(Face::EMPTY), p);
        assert_eq!(p.link(f(&[1, 2])), SimplicialComplex::empty_face_only());
        assert!(p.costar(Face::EMPTY).is_void());
        assert_eq!(p.costar(f(&[1, 3])), p);
        let path = cx(&[&[1, 2], &[2, 3], &[3, 4]]);
        assert_eq!(path.costar(f(&[2, 3])), cx(&[&[1, 2], &[3, 4]]));
    }

    #[test]
    fn induced_subcomplexes() {
        let p = pentagon();
        assert_eq!(p.induced(f(&[1, 2, 3])).unwrap(), cx(&[&[1, 2], &[2, 3]]));
        assert_eq!(p.induced(p.ground_set()).unwrap(), p);
        assert_eq!(
            p.induced(Face::EMPTY).unwrap(),
            SimplicialComplex::empty_face_only()
        );
        assert_eq!(p.induced(f(&[9])), Err(ComplexError::UnknownVertex(9)));
    }

    #[test]
    fn joins() {
        let p = pentagon();
        assert_eq!(p.join_with_simplex(Face::EMPTY).unwrap(), p);
        let pt = cx(&[&[1]]);
        assert_eq!(pt.join_with_simplex(f(&[2])).unwrap(), cx(&[&[1, 2]]));
        assert_eq!(
            p.join_with_simplex(f(&[1])),
            Err(ComplexError::VertexCollision(1))
        );
        for face in p.faces() {
            let joined = p.link(face).join_with_simplex(face).unwrap();
            assert_eq!(joined, p.star(face), "{face}");
        }
    }

    #[test]
    fn ridges_and_graph() {
        let p = pentagon();
        assert_eq!(p.ridges().len(), 5);
        assert_eq!(cx(&[&[1, 2, 3]]).ridges().len(), 3);
        let g = p.facet_ridge_graph().unwrap();
        assert_eq!(g.graph.edge_count(), 5);
        assert!((0..5).all(|i| g.graph.degree(i) == 2));
        assert_eq!(g.graph.girth(), Some(5));
        let single = cx(&[&[1, 2, 3]]).facet_ridge_graph().unwrap();
        assert_eq!((single.node_count(), single.graph.edge_count()), (1, 0));
        assert_eq!(
            cx(&[&[1], &[2, 3]]).facet_ridge_graph(),
            Err(ComplexError::NotPure)
        );
    }

    #[test]
    fn stellar_subdivision_of_a_triangle() {
        let t = cx(&[&[1, 2, 3]]);
        let s = t.stellar_subdivide(f(&[1, 2, 3]), 4).unwrap();
        assert_eq!(s, cx(&[&[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]));
        assert_eq!(
            t.stellar_subdivide(f(&[1, 2]), 4),
            Err(ComplexError::NotAFacet(f(&[1, 2])))
        );
        assert_eq!(
            t.stellar_subdivide(f(&[1, 2, 3]), 2),
            Err(ComplexError::VertexCollision(2))
        );
    }

    #[test]
    fn homology_of_small_spaces() {
        assert_eq!(pentagon().gf2_homology(), vec![1, 1]);
        assert_eq!(cx(&[&[1, 2, 3]]).gf2_homology(), vec![1, 0, 0]);
        assert_eq!(cx(&[&[1], &[2]]).gf2_homology(), vec![2]);
        let tetra = cx(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
        assert_eq!(tetra.gf2_homology(), vec![1, 0, 1]);
        assert!(tetra.is_gf2_homology_sphere());
        assert!(SimplicialComplex::void().gf2_homology().is_empty());
    }

    #[test]
    fn pseudomanifold_checks() {
        assert!(pentagon().is_pseudomanifold().unwrap());
        let two_edges = cx(&[&[1, 2], &[3, 4]]);
        let report = two_edges.pseudomanifold_report().unwrap();
        assert!(!report.holds());
        assert!(report.boundary_ridges.contains(&f(&[2])));
        assert!(!cx(&[&[1, 2, 3]]).is_pseudomanifold().unwrap());
        assert_eq!(
            cx(&[&[1], &[2, 3]]).is_pseudomanifold(),
            Err(ComplexError::NotPure)
        );
    }

    #[test]
    fn compact_key_ignores_labels() {
        let a = cx(&[&[1, 2], &[2, 3]]);
        let b = cx(&[&[5, 7], &[7, 9]]);
        assert_eq!(a.compact_key(), b.compact_key());
    }
}
