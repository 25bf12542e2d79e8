//! Shellability and vertex decomposability, plus their strong variants.
//!
//! Both searches follow the recursive definitions directly:
//!
//! * a complex is shellable if it is a simplex, or it is pure and has a
//!   facet `F` whose costar is shellable and meets `<F>` in a complex that
//!   is pure of dimension `dim F - 1`;
//! * a complex is vertex decomposable if it is a simplex, or it is pure and
//!   has a vertex whose deletion and link are both vertex decomposable.
//!
//! Complexes with at most one facet, including `<>` and `<{}>`, count as
//! simplices. Every search is bounded by a node budget and answers
//! [`Outcome::Indeterminate`] when the budget runs out.

use std::collections::HashMap;

use serde::Serialize;

use crate::simplicial::{Face, SimplicialComplex, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of search nodes per query.
    pub budget: u64,
    pub memoize: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: 10_000_000,
            memoize: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome<C> {
    Yes(C),
    No,
    Indeterminate,
}

impl<C> Outcome<C> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Outcome::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Outcome::No)
    }

    pub fn verdict(&self) -> Verdict {
        match self {
            Outcome::Yes(_) => Verdict::True,
            Outcome::No => Verdict::False,
            Outcome::Indeterminate => Verdict::Indeterminate,
        }
    }

    pub fn certificate(&self) -> Option<&C> {
        match self {
            Outcome::Yes(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    True,
    False,
    Indeterminate,
}

impl Verdict {
    /// Process exit code: 0, 1 or 2.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::True => 0,
            Verdict::False => 1,
            Verdict::Indeterminate => 2,
        }
    }

    /// Conjunction: false wins, then indeterminate.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::False, _) | (_, Verdict::False) => Verdict::False,
            (Verdict::Indeterminate, _) | (_, Verdict::Indeterminate) => Verdict::Indeterminate,
            _ => Verdict::True,
        }
    }
}

struct Budget {
    left: u64,
}

impl Budget {
    fn new(budget: u64) -> Self {
        Budget { left: budget }
    }

    /// Charges one node; `false` once the budget is spent.
    fn tick(&mut self) -> bool {
        if self.left == 0 {
            return false;
        }
        self.left -= 1;
        true
    }
}

/// Marker for an exhausted budget, propagated with `?`.
struct OutOfBudget;

// ---------------------------------------------------------------------------
// Shellability

/// A shelling order `F_1, ..., F_k`, together with the facets of
/// `<F_j> ∩ <F_1, ..., F_{j-1}>` for every `j >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShellingCertificate {
    pub order: Vec<Face>,
    pub intersections: Vec<Vec<Face>>,
}

impl ShellingCertificate {
    fn from_order(order: Vec<Face>) -> Self {
        let intersections = (0..order.len())
            .map(|j| step_intersection(&order[..j], order[j]).facets().to_vec())
            .collect();
        ShellingCertificate {
            order,
            intersections,
        }
    }
}

fn step_intersection(earlier: &[Face], f: Face) -> SimplicialComplex {
    SimplicialComplex::from_facets(earlier.iter().map(|g| g.intersection(f)))
}

/// Replays a shelling order against `complex`.
pub fn verify_shelling(
    complex: &SimplicialComplex,
    cert: &ShellingCertificate,
) -> Result<(), String> {
    let mut order = cert.order.clone();
    order.sort();
    if order != complex.facets() {
        return Err("order is not a permutation of the facets".into());
    }
    if complex.is_simplex() {
        return Ok(());
    }
    if !complex.is_pure() {
        return Err("complex is not pure".into());
    }
    for (j, &f) in cert.order.iter().enumerate().skip(1) {
        let meet = step_intersection(&cert.order[..j], f);
        if meet.facets().iter().any(|g| g.len() + 1 != f.len()) {
            return Err(format!(
                "step {} ({f}) meets the earlier facets in {meet:?}",
                j + 1
            ));
        }
        if cert.intersections.get(j).map(Vec::as_slice) != Some(meet.facets()) {
            return Err(format!("recorded intersection at step {} is wrong", j + 1));
        }
    }
    Ok(())
}

struct FacetSet(Vec<u64>);

impl FacetSet {
    fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; n.div_ceil(64)];
        if !n.is_multiple_of(64) {
            *words.last_mut().unwrap() = (1u64 << (n % 64)) - 1;
        }
        FacetSet(words)
    }

    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] & (1 << (i % 64)) != 0
    }

    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn members(&self, n: usize) -> impl Iterator<Item = usize> + '_ {
        (0..n).filter(move |&i| self.contains(i))
    }
}

struct ShellSearch<'a> {
    facets: &'a [Face],
    memo: Option<HashMap<Vec<u64>, bool>>,
    budget: Budget,
}

impl ShellSearch<'_> {
    /// Whether the facet subset `set` is shellable with the last facet taken
    /// from it; on success `order` receives the shelling in reverse.
    fn search(&mut self, set: &mut FacetSet, order: &mut Vec<usize>) -> Result<bool, OutOfBudget> {
        let n = self.facets.len();
        let size = set.count();
        if size <= 1 {
            order.extend(set.members(n));
            return Ok(true);
        }
        if let Some(memo) = &self.memo {
            if memo.get(&set.0) == Some(&false) {
                return Ok(false);
            }
        }
        if !self.budget.tick() {
            return Err(OutOfBudget);
        }
        let members: Vec<usize> = set.members(n).collect();
        // Later facets first: the lexicographic order is often a shelling.
        for &i in members.iter().rev() {
            if !self.can_remove_last(&members, i) {
                continue;
            }
            set.remove(i);
            let mark = order.len();
            order.push(i);
            let found = self.search(set, order);
            set.insert(i);
            match found {
                Ok(true) => return Ok(true),
                Ok(false) => order.truncate(mark),
                Err(e) => return Err(e),
            }
        }
        if let Some(memo) = &mut self.memo {
            memo.insert(set.0.clone(), false);
        }
        Ok(false)
    }

    /// `<F> ∩ <others>` is pure of dimension `dim F - 1`.
    fn can_remove_last(&self, members: &[usize], i: usize) -> bool {
        let f = self.facets[i];
        // vertices x of F whose ridge F \ {x} lies in another facet
        let mut free = Face::EMPTY;
        for &j in members {
            if j != i {
                let missing = f.difference(self.facets[j]);
                if missing.len() == 1 {
                    free = free.union(missing);
                }
            }
        }
        members
            .iter()
            .filter(|&&j| j != i)
            .all(|&j| !f.difference(self.facets[j]).intersection(free).is_empty())
    }
}

pub fn is_shellable(
    complex: &SimplicialComplex,
    options: SearchOptions,
) -> Outcome<ShellingCertificate> {
    let facets = complex.facets();
    if complex.is_simplex() {
        return Outcome::Yes(ShellingCertificate::from_order(facets.to_vec()));
    }
    if !complex.is_pure() {
        return Outcome::No;
    }
    let mut search = ShellSearch {
        facets,
        memo: options.memoize.then(HashMap::new),
        budget: Budget::new(options.budget),
    };
    let mut set = FacetSet::full(facets.len());
    let mut reversed = Vec::new();
    match search.search(&mut set, &mut reversed) {
        Ok(true) => {
            let order = reversed.iter().rev().map(|&i| facets[i]).collect();
            Outcome::Yes(ShellingCertificate::from_order(order))
        }
        Ok(false) => Outcome::No,
        Err(OutOfBudget) => Outcome::Indeterminate,
    }
}

// ---------------------------------------------------------------------------
// Vertex decomposability

/// A vertex decomposition: either a simplex, or a shedding vertex with
/// decompositions of its deletion and link.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VdCertificate {
    /// `None` stands for the void complex.
    Simplex { facet: Option<Face> },
    Shed {
        vertex: Vertex,
        deletion: Box<VdCertificate>,
        link: Box<VdCertificate>,
    },
}

impl VdCertificate {
    fn relabel(&self, map: &[Vertex]) -> VdCertificate {
        let face = |f: Face| f.vertices().map(|v| map[v as usize]).collect::<Face>();
        match self {
            VdCertificate::Simplex { facet } => VdCertificate::Simplex {
                facet: facet.map(face),
            },
            VdCertificate::Shed {
                vertex,
                deletion,
                link,
            } => VdCertificate::Shed {
                vertex: map[*vertex as usize],
                deletion: Box::new(deletion.relabel(map)),
                link: Box::new(link.relabel(map)),
            },
        }
    }

    /// Number of nodes in the decomposition tree.
    pub fn size(&self) -> usize {
        match self {
            VdCertificate::Simplex { .. } => 1,
            VdCertificate::Shed { deletion, link, .. } => 1 + deletion.size() + link.size(),
        }
    }
}

/// Replays a vertex decomposition against `complex`.
pub fn verify_vertex_decomposition(
    complex: &SimplicialComplex,
    cert: &VdCertificate,
) -> Result<(), String> {
    match cert {
        VdCertificate::Simplex { facet } => {
            if complex.facets() == facet.as_slice() {
                Ok(())
            } else {
                Err(format!("{complex:?} is not the simplex {facet:?}"))
            }
        }
        VdCertificate::Shed {
            vertex,
            deletion,
            link,
        } => {
            if !complex.is_pure() {
                return Err(format!("{complex:?} is not pure"));
            }
            let v = Face::singleton(*vertex);
            if !complex.contains_face(v) {
                return Err(format!("{v} is not a vertex of {complex:?}"));
            }
            verify_vertex_decomposition(&complex.deletion(v), deletion)?;
            verify_vertex_decomposition(&complex.link(v), link)
        }
    }
}

/// Relabels the vertex set onto `0..k` preserving order. Returns the
/// compacted complex and the map back to the original labels.
fn compact(complex: &SimplicialComplex) -> (SimplicialComplex, Vec<Vertex>) {
    let verts: Vec<Vertex> = complex.vertex_set().vertices().collect();
    let facets = complex
        .compact_key()
        .into_iter()
        .map(Face::from_bits)
        .collect::<Vec<_>>();
    (SimplicialComplex::from_facets(facets), verts)
}

struct VdSearch {
    memo: Option<HashMap<Vec<u64>, Option<VdCertificate>>>,
    budget: Budget,
}

impl VdSearch {
    /// Works on a compacted complex; the certificate uses its labels.
    fn search(
        &mut self,
        complex: &SimplicialComplex,
    ) -> Result<Option<VdCertificate>, OutOfBudget> {
        if complex.is_simplex() {
            return Ok(Some(VdCertificate::Simplex {
                facet: complex.facets().first().copied(),
            }));
        }
        if !complex.is_pure() {
            return Ok(None);
        }
        let key = complex.compact_key();
        if let Some(memo) = &self.memo {
            if let Some(hit) = memo.get(&key) {
                return Ok(hit.clone());
            }
        }
        if !self.budget.tick() {
            return Err(OutOfBudget);
        }
        let mut result = None;
        for v in complex.vertex_set().vertices() {
            let face = Face::singleton(v);
            let Some(deletion) = self.child(&complex.deletion(face))? else {
                continue;
            };
            let Some(link) = self.child(&complex.link(face))? else {
                continue;
            };
            result = Some(VdCertificate::Shed {
                vertex: v,
                deletion: Box::new(deletion),
                link: Box::new(link),
            });
            break;
        }
        if let Some(memo) = &mut self.memo {
            memo.insert(key, result.clone());
        }
        Ok(result)
    }

    fn child(&mut self, complex: &SimplicialComplex) -> Result<Option<VdCertificate>, OutOfBudget> {
        let (compacted, map) = compact(complex);
        Ok(self.search(&compacted)?.map(|c| c.relabel(&map)))
    }
}

pub fn is_vertex_decomposable(
    complex: &SimplicialComplex,
    options: SearchOptions,
) -> Outcome<VdCertificate> {
    let mut search = VdSearch {
        memo: options.memoize.then(HashMap::new),
        budget: Budget::new(options.budget),
    };
    match search.child(complex) {
        Ok(Some(cert)) => Outcome::Yes(cert),
        Ok(None) => Outcome::No,
        Err(OutOfBudget) => Outcome::Indeterminate,
    }
}

// ---------------------------------------------------------------------------
// Strong variants

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Star,
    Costar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    Shellable,
    VertexDecomposable,
}

impl Property {
    pub fn decide(self, complex: &SimplicialComplex, options: SearchOptions) -> Verdict {
        match self {
            Property::Shellable => is_shellable(complex, options).verdict(),
            Property::VertexDecomposable => is_vertex_decomposable(complex, options).verdict(),
        }
    }
}

/// Result of testing the star and costar of one face.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceRecord {
    pub face: Face,
    pub star: Verdict,
    pub costar: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrongOutcome {
    pub verdict: Verdict,
    /// First face, in graded order, where a check did not come out true.
    pub witness: Option<(Face, Side)>,
}

/// Checks the property for the star and costar of every face, including
/// the empty face, in graded order. Stops at the first failure.
pub fn is_strongly(
    property: Property,
    complex: &SimplicialComplex,
    options: SearchOptions,
) -> StrongOutcome {
    let mut pending = None;
    for face in complex.faces() {
        for side in [Side::Star, Side::Costar] {
            let part = match side {
                Side::Star => complex.star(face),
                Side::Costar => complex.costar(face),
            };
            match property.decide(&part, options) {
                Verdict::True => {}
                Verdict::False => {
                    return StrongOutcome {
                        verdict: Verdict::False,
                        witness: Some((face, side)),
                    }
                }
                Verdict::Indeterminate => {
                    pending.get_or_insert((face, side));
                }
            }
        }
    }
    StrongOutcome {
        verdict: if pending.is_some() {
            Verdict::Indeterminate
        } else {
            Verdict::True
        },
        witness: pending,
    }
}

pub fn is_strongly_shellable(complex: &SimplicialComplex, options: SearchOptions) -> StrongOutcome {
    is_strongly(Property::Shellable, complex, options)
}

pub fn is_strongly_vertex_decomposable(
    complex: &SimplicialComplex,
    options: SearchOptions,
) -> StrongOutcome {
    is_strongly(Property::VertexDecomposable, complex, options)
}

/// Star and costar verdicts for every face, without stopping early.
pub fn strong_face_log(
    property: Property,
    complex: &SimplicialComplex,
    options: SearchOptions,
) -> (Verdict, Vec<FaceRecord>) {
    let mut overall = Verdict::True;
    let records = complex
        .faces()
        .into_iter()
        .map(|face| {
            let star = property.decide(&complex.star(face), options);
            let costar = property.decide(&complex.costar(face), options);
            overall = overall.and(star).and(costar);
            FaceRecord { face, star, costar }
        })
        .collect();
    (overall, records)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(lists: &[&[Vertex]]) -> SimplicialComplex {
        SimplicialComplex::from_vertex_lists(lists.iter().map(|l| l.iter().copied()))
    }

    fn pentagon() -> SimplicialComplex {
        cx(&[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]])
    }

    fn opts() -> SearchOptions {
        SearchOptions::default()
    }

    #[test]
    fn simplices_are_everything() {
        for c in [
            SimplicialComplex::void(),
            SimplicialComplex::empty_face_only(),
            cx(&[&[1, 2, 3]]),
        ] {
            assert!(is_shellable(&c, opts()).is_yes());
            assert!(is_vertex_decomposable(&c, opts()).is_yes());
            assert_eq!(is_strongly_shellable(&c, opts()).verdict, Verdict::True);
            assert_eq!(
                is_strongly_vertex_decomposable(&c, opts()).verdict,
                Verdict::True
            );
        }
    }

    #[test]
    fn pentagon_is_shellable_with_certificate() {
        let p = pentagon();
        let out = is_shellable(&p, opts());
        let cert = out.certificate().unwrap();
        verify_shelling(&p, cert).unwrap();
        let given = ShellingCertificate::from_order(
            [[1, 2], [2, 3], [3, 4], [4, 5], [1, 5]]
                .iter()
                .map(|e| Face::new(e.iter().copied()))
                .collect(),
        );
        verify_shelling(&p, &given).unwrap();
    }

    #[test]
    fn bad_orders_are_rejected() {
        let p = pentagon();
        let bad = ShellingCertificate::from_order(
            [[1, 2], [3, 4], [2, 3], [4, 5], [1, 5]]
                .iter()
                .map(|e| Face::new(e.iter().copied()))
                .collect(),
        );
        assert!(verify_shelling(&p, &bad).is_err());
    }

    #[test]
    fn disconnected_edges_are_not_shellable() {
        let c = cx(&[&[1, 2], &[3, 4]]);
        assert!(is_shellable(&c, opts()).is_no());
        assert!(is_vertex_decomposable(&c, opts()).is_no());
    }

    #[test]
    fn points_are_shellable() {
        let c = cx(&[&[1], &[2], &[3]]);
        assert!(is_shellable(&c, opts()).is_yes());
        assert!(is_vertex_decomposable(&c, opts()).is_yes());
    }

    #[test]
    fn non_pure_is_rejected() {
        let c = cx(&[&[1], &[3, 4]]);
        assert!(is_shellable(&c, opts()).is_no());
        assert!(is_vertex_decomposable(&c, opts()).is_no());
    }

    #[test]
    fn pentagon_vd_certificate_replays() {
        let p = pentagon();
        let cert = is_vertex_decomposable(&p, opts())
            .certificate()
            .cloned()
            .unwrap();
        verify_vertex_decomposition(&p, &cert).unwrap();
        match cert {
            VdCertificate::Shed { vertex, .. } => assert_eq!(vertex, 1),
            _ => panic!("pentagon is not a simplex"),
        }
    }

    #[test]
    fn path_ball_fails_strongly_at_the_middle_edge() {
        let ball = cx(&[&[1, 2], &[2, 3], &[3, 4]]);
        assert!(is_shellable(&ball, opts()).is_yes());
        let out = is_strongly_shellable(&ball, opts());
        assert_eq!(out.verdict, Verdict::False);
        assert_eq!(out.witness, Some((Face::new([2, 3]), Side::Costar)));
        let out = is_strongly_vertex_decomposable(&ball, opts());
        assert_eq!(out.witness, Some((Face::new([2, 3]), Side::Costar)));
    }

    #[test]
    fn pentagon_is_strongly_vd() {
        let (verdict, log) = strong_face_log(Property::VertexDecomposable, &pentagon(), opts());
        assert_eq!(verdict, Verdict::True);
        assert_eq!(log.len(), 11);
    }

    #[test]
    fn tiny_budget_gives_indeterminate() {
        let tight = SearchOptions {
            budget: 0,
            memoize: true,
        };
        assert_eq!(is_shellable(&pentagon(), tight), Outcome::Indeterminate);
        assert_eq!(
            is_vertex_decomposable(&pentagon(), tight),
            Outcome::Indeterminate
        );
        assert_eq!(
            is_strongly_shellable(&pentagon(), tight).verdict,
            Verdict::Indeterminate
        );
    }

    #[test]
    fn memo_and_plain_search_agree() {
        let plain = SearchOptions {
            memoize: false,
            ..opts()
        };
        let c = cx(&[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[4, 5, 1], &[5, 1, 2]]);
        assert_eq!(
            is_shellable(&c, opts()).verdict(),
            is_shellable(&c, plain).verdict()
        );
        assert_eq!(
            is_vertex_decomposable(&c, opts()).verdict(),
            is_vertex_decomposable(&c, plain).verdict()
        );
    }
}
