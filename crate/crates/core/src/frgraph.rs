//! Isomorphisms of facet-ridge graphs and the faces they induce.
//!
//! An isomorphism `f: FR(A) -> FR(B)` sends facets to facets. It induces a
//! map on all faces of `A`,
//!
//! ```text
//! g(I) = ∩ { f(F) : F a facet of A with I ⊆ F },
//! ```
//!
//! which agrees with `f` on facets. [`verify_reconstruction`] decides whether
//! `g` is a simplicial isomorphism `A -> B`, and otherwise reports where it
//! breaks.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::simplicial::{ComplexError, Face, FacetRidgeGraph, SimplicialComplex, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FrError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("the node map is not an isomorphism of facet-ridge graphs")]
    NotAnIsomorphism,
}

// ---------------------------------------------------------------------------
// Graph isomorphism

/// A bijection between the nodes of two graphs: node `i` goes to `map[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GraphIso {
    pub map: Vec<usize>,
}

impl GraphIso {
    pub fn identity(n: usize) -> Self {
        GraphIso {
            map: (0..n).collect(),
        }
    }

    pub fn apply(&self, node: usize) -> usize {
        self.map[node]
    }

    pub fn inverse(&self) -> GraphIso {
        let mut inv = vec![0; self.map.len()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j] = i;
        }
        GraphIso { map: inv }
    }

    /// `other` after `self`.
    pub fn then(&self, other: &GraphIso) -> GraphIso {
        GraphIso {
            map: self.map.iter().map(|&j| other.map[j]).collect(),
        }
    }

    /// Bijective, and preserves both adjacency and non-adjacency.
    pub fn is_isomorphism(&self, g1: &Graph, g2: &Graph) -> bool {
        let n = g1.node_count();
        if n != g2.node_count() || self.map.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &j in &self.map {
            if j >= n || std::mem::replace(&mut seen[j], true) {
                return false;
            }
        }
        g1.edge_count() == g2.edge_count()
            && g1
                .edges()
                .all(|(a, b)| g2.has_edge(self.map[a], self.map[b]))
    }
}

/// Joint colour refinement of two graphs from the given initial colours.
/// Returns `None` when the colour histograms differ at some round, which
/// rules out any colour-preserving isomorphism.
fn refine(g1: &Graph, g2: &Graph, init1: &[u64], init2: &[u64]) -> Option<(Vec<u32>, Vec<u32>)> {
    let relabel = |c1: &[u64], c2: &[u64]| {
        let mut ids = BTreeMap::new();
        for &c in c1.iter().chain(c2) {
            let next = ids.len() as u32;
            ids.entry(c).or_insert(next);
        }
        (
            c1.iter().map(|c| ids[c]).collect::<Vec<u32>>(),
            c2.iter().map(|c| ids[c]).collect::<Vec<u32>>(),
        )
    };
    let (mut c1, mut c2) = relabel(init1, init2);
    let histogram = |c: &[u32]| {
        let mut h = c.to_vec();
        h.sort_unstable();
        h
    };
    loop {
        if histogram(&c1) != histogram(&c2) {
            return None;
        }
        let classes = c1.iter().collect::<HashSet<_>>().len();
        let signature = |g: &Graph, c: &[u32]| -> Vec<(u32, Vec<u32>)> {
            (0..g.node_count())
                .map(|v| {
                    let mut ns: Vec<u32> = g.neighbors(v).iter().map(|&u| c[u]).collect();
                    ns.sort_unstable();
                    (c[v], ns)
                })
                .collect()
        };
        let s1 = signature(g1, &c1);
        let s2 = signature(g2, &c2);
        let mut ids = BTreeMap::new();
        for s in s1.iter().chain(&s2) {
            let next = ids.len() as u32;
            ids.entry(s.clone()).or_insert(next);
        }
        let n1: Vec<u32> = s1.iter().map(|s| ids[s]).collect();
        let n2: Vec<u32> = s2.iter().map(|s| ids[s]).collect();
        let new_classes = n1.iter().collect::<HashSet<_>>().len();
        c1 = n1;
        c2 = n2;
        if new_classes == classes {
            return (histogram(&c1) == histogram(&c2)).then_some((c1, c2));
        }
    }
}

/// Search order: breadth first from a node of the rarest colour, component
/// by component, so most nodes have an already placed neighbour.
fn search_order(g: &Graph, colours: &[u32]) -> Vec<usize> {
    let n = g.node_count();
    let mut class_size: HashMap<u32, usize> = HashMap::new();
    for &c in colours {
        *class_size.entry(c).or_insert(0) += 1;
    }
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_by_key(|&v| (class_size[&colours[v]], v));
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in starts {
        if placed[s] {
            continue;
        }
        placed[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &u in g.neighbors(v) {
                if !placed[u] {
                    placed[u] = true;
                    queue.push_back(u);
                }
            }
        }
    }
    order
}

struct Matcher<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    c1: Vec<u32>,
    c2: Vec<u32>,
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn run(&mut self, depth: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if depth == self.order.len() {
            return visit(&self.map);
        }
        let x = self.order[depth];
        let placed = self.order[..depth].to_vec();
        // Candidates come from the image of a placed neighbour when there is one.
        let anchor = self.g1.neighbors(x).iter().find(|u| placed.contains(u));
        let candidates: Vec<usize> = match anchor {
            Some(&u) => self.g2.neighbors(self.map[u]).to_vec(),
            None => (0..self.g2.node_count()).collect(),
        };
        for y in candidates {
            if self.used[y] || self.c1[x] != self.c2[y] {
                continue;
            }
            let consistent = placed
                .iter()
                .all(|&u| self.g1.has_edge(x, u) == self.g2.has_edge(y, self.map[u]));
            if !consistent {
                continue;
            }
            self.map[x] = y;
            self.used[y] = true;
            let keep_going = self.run(depth + 1, visit);
            self.used[y] = false;
            if !keep_going {
                return false;
            }
        }
        true
    }
}

/// Calls `visit` on every isomorphism `g1 -> g2` that carries each node to
/// one of the same initial colour, until `visit` returns `false`.
pub fn for_each_coloured_isomorphism(
    g1: &Graph,
    g2: &Graph,
    colours1: &[u64],
    colours2: &[u64],
    visit: &mut dyn FnMut(&[usize]) -> bool,
) {
    let n = g1.node_count();
    if n != g2.node_count() || g1.edge_count() != g2.edge_count() {
        return;
    }
    let Some((c1, c2)) = refine(g1, g2, colours1, colours2) else {
        return;
    };
    let order = search_order(g1, &c1);
    let mut matcher = Matcher {
        g1,
        g2,
        c1,
        c2,
        order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    matcher.run(0, visit);
}

fn uncoloured(g: &Graph) -> Vec<u64> {
    vec![0; g.node_count()]
}

pub fn find_isomorphism(g1: &Graph, g2: &Graph) -> Option<GraphIso> {
    let mut found = None;
    for_each_coloured_isomorphism(g1, g2, &uncoloured(g1), &uncoloured(g2), &mut |m| {
        found = Some(GraphIso { map: m.to_vec() });
        false
    });
    debug_assert!(found.as_ref().is_none_or(|f| f.is_isomorphism(g1, g2)));
    found
}

pub fn isomorphisms(g1: &Graph, g2: &Graph) -> Vec<GraphIso> {
    let mut all = Vec::new();
    for_each_coloured_isomorphism(g1, g2, &uncoloured(g1), &uncoloured(g2), &mut |m| {
        all.push(GraphIso { map: m.to_vec() });
        true
    });
    all
}

pub fn automorphism_group_order(g: &Graph) -> u64 {
    let mut count = 0u64;
    for_each_coloured_isomorphism(g, g, &uncoloured(g), &uncoloured(g), &mut |_| {
        count += 1;
        true
    });
    count
}

/// A cheap isomorphism invariant: sizes plus the stable colour histogram.
pub fn graph_invariant(g: &Graph) -> (usize, usize, Vec<(u64, usize)>) {
    // Colour ids are not comparable between graphs, class sizes are.
    let zeros = uncoloured(g);
    let (c, _) = refine(g, g, &zeros, &zeros).expect("a graph matches itself");
    let mut size: HashMap<u32, usize> = HashMap::new();
    for &x in &c {
        *size.entry(x).or_insert(0) += 1;
    }
    let mut hist: Vec<(u64, usize)> = (0..g.node_count())
        .map(|v| (g.degree(v) as u64, size[&c[v]]))
        .collect();
    hist.sort_unstable();
    (g.node_count(), g.edge_count(), hist)
}

// ---------------------------------------------------------------------------
// Simplicial isomorphism, via the vertex-facet incidence graph

/// Incidence graph: vertices first (in increasing order), then facets.
fn incidence(complex: &SimplicialComplex) -> (Graph, Vec<u64>, Vec<Vertex>) {
    let verts: Vec<Vertex> = complex.vertex_set().vertices().collect();
    let index: HashMap<Vertex, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let nv = verts.len();
    let mut g = Graph::new(nv + complex.facet_count());
    for (k, f) in complex.facets().iter().enumerate() {
        for v in f.vertices() {
            g.add_edge(index[&v], nv + k);
        }
    }
    let colours = (0..g.node_count()).map(|i| u64::from(i >= nv)).collect();
    (g, colours, verts)
}

/// Number of permutations of the vertex set carrying facets to facets.
pub fn simplicial_automorphism_group_order(complex: &SimplicialComplex) -> Result<u64, FrError> {
    if !complex.is_pure() {
        return Err(ComplexError::NotPure.into());
    }
    let (g, c, _) = incidence(complex);
    let mut count = 0u64;
    for_each_coloured_isomorphism(&g, &g, &c, &c, &mut |_| {
        count += 1;
        true
    });
    Ok(count)
}

/// A vertex bijection carrying the facets of `a` onto those of `b`.
pub fn find_simplicial_isomorphism(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
) -> Option<BTreeMap<Vertex, Vertex>> {
    let (ga, ca, va) = incidence(a);
    let (gb, cb, vb) = incidence(b);
    if va.len() != vb.len() {
        return None;
    }
    let mut found = None;
    for_each_coloured_isomorphism(&ga, &gb, &ca, &cb, &mut |m| {
        found = Some((0..va.len()).map(|i| (va[i], vb[m[i]])).collect());
        false
    });
    found
}

// ---------------------------------------------------------------------------
// Induced face map and reconstruction

/// The map `g` induced on faces by a facet-ridge graph isomorphism.
#[derive(Debug, Clone)]
pub struct InducedFaceMap<'a> {
    pub source: &'a SimplicialComplex,
    pub target: &'a SimplicialComplex,
    pub iso: GraphIso,
}

impl<'a> InducedFaceMap<'a> {
    /// Checks that `iso` is an isomorphism `FR(source) -> FR(target)`.
    pub fn new(
        source: &'a SimplicialComplex,
        target: &'a SimplicialComplex,
        iso: GraphIso,
    ) -> Result<Self, FrError> {
        let ga = source.facet_ridge_graph()?;
        let gb = target.facet_ridge_graph()?;
        if !iso.is_isomorphism(&ga.graph, &gb.graph) {
            return Err(FrError::NotAnIsomorphism);
        }
        Ok(InducedFaceMap {
            source,
            target,
            iso,
        })
    }

    /// `g(I)`: the intersection of the images of the facets containing `I`.
    /// Faces outside the source complex go to `None`.
    pub fn image(&self, face: Face) -> Option<Face> {
        let mut acc: Option<Face> = None;
        for (i, &f) in self.source.facets().iter().enumerate() {
            if face.is_subset(f) {
                let img = self.target.facets()[self.iso.map[i]];
                acc = Some(acc.map_or(img, |a| a.intersection(img)));
            }
        }
        acc
    }

    /// The map induced by the inverse isomorphism.
    pub fn inverse(&self) -> InducedFaceMap<'a> {
        InducedFaceMap {
            source: self.target,
            target: self.source,
            iso: self.iso.inverse(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureKind {
    /// `|g(I)| != |I|`.
    WrongDimension,
    /// `g(I)` is not a face of the target.
    NotAFace,
    /// `g(I) = g(J)` for an earlier face `J`.
    Collision,
    /// The map induced by the inverse isomorphism does not undo `g` at `I`.
    NotInverse,
    /// `g(I)` is not the union of the images of the vertices of `I`.
    NotSimplicial,
    /// A face of the target is not an image; the witness is that face.
    NotSurjective,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegradedFace {
    pub face: Face,
    pub image: Face,
    pub kind: FailureKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Reconstruction {
    /// `g` is a simplicial isomorphism; this is its vertex map.
    IsomorphismExtension {
        vertex_map: BTreeMap<Vertex, Vertex>,
    },
    Failure {
        /// A smallest failing face. Ties go to the face lying in the most
        /// facets, whose image is cut down by the most intersections, and
        /// then to the lexicographically first.
        witness: Face,
        g_image: Face,
        kind: FailureKind,
        /// Every failing face of the source, by size and then
        /// lexicographically.
        degraded: Vec<DegradedFace>,
    },
}

impl Reconstruction {
    pub fn extends(&self) -> bool {
        matches!(self, Reconstruction::IsomorphismExtension { .. })
    }
}

/// Decides whether the face map induced by `iso` is a simplicial isomorphism.
pub fn verify_reconstruction(
    iso: &GraphIso,
    a: &SimplicialComplex,
    b: &SimplicialComplex,
) -> Result<Reconstruction, FrError> {
    let g = InducedFaceMap::new(a, b, iso.clone())?;
    let h = g.inverse();
    let faces_a = a.faces();
    let vertex_image: HashMap<Vertex, Face> = a
        .vertex_set()
        .vertices()
        .map(|v| (v, g.image(Face::singleton(v)).unwrap_or(Face::EMPTY)))
        .collect();
    let mut seen: HashMap<Face, Face> = HashMap::new();
    let mut degraded = Vec::new();
    for &face in &faces_a {
        let image = g.image(face).expect("faces of a lie in a facet");
        let kind = if image.len() != face.len() {
            Some(FailureKind::WrongDimension)
        } else if !b.contains_face(image) {
            Some(FailureKind::NotAFace)
        } else if seen.contains_key(&image) {
            Some(FailureKind::Collision)
        } else if h.image(image) != Some(face) {
            Some(FailureKind::NotInverse)
        } else if face
            .vertices()
            .fold(Face::EMPTY, |acc, v| acc.union(vertex_image[&v]))
            != image
        {
            Some(FailureKind::NotSimplicial)
        } else {
            None
        };
        seen.entry(image).or_insert(face);
        if let Some(kind) = kind {
            degraded.push(DegradedFace { face, image, kind });
        }
    }
    let facets_through = |f: Face| a.facets().iter().filter(|&&g| f.is_subset(g)).count();
    if let Some(first) = degraded
        .iter()
        .min_by_key(|d| {
            (
                d.face.len(),
                std::cmp::Reverse(facets_through(d.face)),
                d.face,
            )
        })
        .cloned()
    {
        return Ok(Reconstruction::Failure {
            witness: first.face,
            g_image: first.image,
            kind: first.kind,
            degraded,
        });
    }
    if let Some(missing) = b.faces().into_iter().find(|f| !seen.contains_key(f)) {
        return Ok(Reconstruction::Failure {
            witness: missing,
            g_image: missing,
            kind: FailureKind::NotSurjective,
            degraded: vec![DegradedFace {
                face: missing,
                image: missing,
                kind: FailureKind::NotSurjective,
            }],
        });
    }
    let vertex_map = vertex_image
        .into_iter()
        .map(|(v, img)| (v, img.min_vertex().expect("vertex images are vertices")))
        .collect();
    Ok(Reconstruction::IsomorphismExtension { vertex_map })
}

/// Number of facets through each vertex.
pub fn degree_profile(complex: &SimplicialComplex) -> BTreeMap<Vertex, usize> {
    complex.degree_profile()
}

pub fn max_vertex_degree(complex: &SimplicialComplex) -> Option<(Vertex, usize)> {
    complex
        .degree_profile()
        .into_iter()
        .max_by_key(|&(v, d)| (d, std::cmp::Reverse(v)))
}

// ---------------------------------------------------------------------------
// Sweeps

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FlagReason {
    /// Same facet-ridge graph, no simplicial isomorphism at all.
    NotIsomorphic,
    /// Simplicially isomorphic, yet some graph isomorphism does not extend.
    IsomorphismDoesNotExtend,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlaggedPair {
    /// Indices into the input family.
    pub first: usize,
    pub second: usize,
    pub reason: FlagReason,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub complexes: usize,
    /// Complexes after removing exact duplicates.
    pub distinct: usize,
    /// Classes of distinct complexes under facet-ridge graph isomorphism.
    pub classes: usize,
    /// Graph isomorphisms whose induced face map was checked.
    pub isomorphisms_checked: u64,
    pub flagged: Vec<FlaggedPair>,
}

impl SweepReport {
    pub fn all_extend(&self) -> bool {
        self.flagged.is_empty()
    }
}

struct Class {
    rep: usize,
    members: Vec<(usize, GraphIso)>,
}

/// For every pair of complexes in `family` with isomorphic facet-ridge
/// graphs, checks that every graph isomorphism extends to a simplicial
/// isomorphism.
///
/// Complexes are grouped into classes by graph isomorphism. Within a class,
/// every isomorphism from the representative `R` to a member `X` is
/// `φ ∘ a` for one fixed `φ` and an automorphism `a` of `FR(R)`, and the face
/// map of a composite is the composite of the face maps. So it suffices to
/// check every automorphism of each representative and one isomorphism per
/// member.
pub fn exhaustive_reconstruction_sweep(
    family: &[SimplicialComplex],
) -> Result<SweepReport, FrError> {
    let mut first_index: HashMap<Vec<Face>, usize> = HashMap::new();
    let mut distinct = Vec::new();
    for (i, c) in family.iter().enumerate() {
        if !c.is_pure() {
            return Err(ComplexError::NotPure.into());
        }
        first_index.entry(c.facets().to_vec()).or_insert_with(|| {
            distinct.push(i);
            i
        });
    }
    let graphs: Vec<FacetRidgeGraph> = distinct
        .par_iter()
        .map(|&i| family[i].facet_ridge_graph())
        .collect::<Result<_, _>>()?;
    let invariants: Vec<_> = graphs
        .par_iter()
        .map(|g| graph_invariant(&g.graph))
        .collect();
    let mut buckets: BTreeMap<_, Vec<usize>> = BTreeMap::new();
    for (k, inv) in invariants.into_iter().enumerate() {
        buckets.entry(inv).or_default().push(k);
    }
    let classes: Vec<Class> = buckets
        .into_values()
        .collect::<Vec<_>>()
        .into_par_iter()
        .flat_map_iter(|bucket| {
            let mut classes: Vec<Class> = Vec::new();
            'next: for k in bucket {
                for class in &mut classes {
                    if let Some(phi) = find_isomorphism(&graphs[class.rep].graph, &graphs[k].graph)
                    {
                        class.members.push((k, phi));
                        continue 'next;
                    }
                }
                classes.push(Class {
                    rep: k,
                    members: Vec::new(),
                });
            }
            classes
        })
        .collect();
    let results: Vec<(u64, Vec<FlaggedPair>)> = classes
        .par_iter()
        .map(|class| {
            let rep = &family[distinct[class.rep]];
            let mut checked = 0u64;
            let mut flagged = Vec::new();
            let g = &graphs[class.rep].graph;
            let mut rep_ok = true;
            for_each_coloured_isomorphism(g, g, &uncoloured(g), &uncoloured(g), &mut |m| {
                checked += 1;
                let iso = GraphIso { map: m.to_vec() };
                rep_ok = verify_reconstruction(&iso, rep, rep).is_ok_and(|r| r.extends());
                rep_ok
            });
            if !rep_ok {
                flagged.push(FlaggedPair {
                    first: distinct[class.rep],
                    second: distinct[class.rep],
                    reason: FlagReason::IsomorphismDoesNotExtend,
                });
            }
            for (k, phi) in &class.members {
                checked += 1;
                let other = &family[distinct[*k]];
                let extends = verify_reconstruction(phi, rep, other).is_ok_and(|r| r.extends());
                if !extends || !rep_ok {
                    let reason = if find_simplicial_isomorphism(rep, other).is_some() {
                        FlagReason::IsomorphismDoesNotExtend
                    } else {
                        FlagReason::NotIsomorphic
                    };
                    flagged.push(FlaggedPair {
                        first: distinct[class.rep],
                        second: distinct[*k],
                        reason,
                    });
                }
            }
            (checked, flagged)
        })
        .collect();
    let mut flagged: Vec<FlaggedPair> = results.iter().flat_map(|(_, f)| f.clone()).collect();
    flagged.sort_by_key(|p| (p.first, p.second));
    Ok(SweepReport {
        complexes: family.len(),
        distinct: distinct.len(),
        classes: classes.len(),
        isomorphisms_checked: results.iter().map(|(c, _)| c).sum(),
        flagged,
    })
}
