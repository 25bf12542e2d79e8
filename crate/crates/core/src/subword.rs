//! Subword complexes `SC(Q, π)`.
//!
//! For a word `Q = (q_1, ..., q_r)` and a group element `π`, the facets are
//! the sets of positions `I` such that the letters outside `I` form a reduced
//! expression of `π`. Positions carry explicit labels, `1..=r` by default, so
//! that complexes built from `Q` with letters removed keep the labels of the
//! surviving positions.

use std::sync::Arc;

use thiserror::Error;

use crate::coxeter::{CoxeterError, CoxeterSystem, GroupElement, Word};
use crate::decomp::{self, FaceRecord, Property, SearchOptions, Verdict};
use crate::simplicial::{ComplexError, Face, SimplicialComplex, Vertex, MAX_VERTEX};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubwordError {
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("word has {letters} letters but {labels} position labels were given")]
    LabelCount { letters: usize, labels: usize },
    #[error("position label {0} is too large")]
    LabelOutOfRange(Vertex),
    #[error("the subword complex is empty")]
    EmptyComplex,
    #[error("the subword complex is not spherical")]
    NotSpherical,
    #[error("the element is not the longest element")]
    WrongPi,
    #[error("{{{0}}} is not a vertex of the complex")]
    NotAVertex(Vertex),
    #[error("{0} is not a face of the complex")]
    NotAFace(Face),
    #[error("{0} is not a facet of the complex")]
    NotAFacet(Face),
    #[error("position {position} is not in {face}")]
    NotInFace { position: Vertex, face: Face },
    #[error("face {0} needs at least two elements")]
    FaceTooSmall(Face),
    #[error("the ridge {0} does not lie in exactly two facets")]
    NotFlippable(Face),
}

#[derive(Clone)]
pub struct SubwordComplex {
    system: Arc<CoxeterSystem>,
    word: Word,
    pi: GroupElement,
    positions: Vec<Vertex>,
    complex: SimplicialComplex,
}

impl std::fmt::Debug for SubwordComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SC({}; Q=[{}], pi=[{}]) = {:?}",
            self.system.coxeter_type(),
            self.word,
            self.system.reduced_word(&self.pi),
            self.complex
        )
    }
}

impl SubwordComplex {
    /// Builds `SC(Q, π)` on positions `1..=r`.
    pub fn build(
        system: Arc<CoxeterSystem>,
        word: Word,
        pi: GroupElement,
    ) -> Result<Self, SubwordError> {
        let positions = (1..=word.len() as Vertex).collect();
        Self::build_on_positions(system, word, pi, positions)
    }

    /// Builds `SC(Q, π)` with position `k` of the word labelled `positions[k]`.
    pub fn build_on_positions(
        system: Arc<CoxeterSystem>,
        word: Word,
        pi: GroupElement,
        positions: Vec<Vertex>,
    ) -> Result<Self, SubwordError> {
        system.check_word(&word)?;
        if positions.len() != word.len() {
            return Err(SubwordError::LabelCount {
                letters: word.len(),
                labels: positions.len(),
            });
        }
        if let Some(&bad) = positions.iter().find(|&&p| p > MAX_VERTEX) {
            return Err(SubwordError::LabelOutOfRange(bad));
        }
        let facets = enumerate_facets(&system, word.letters(), &pi, &positions);
        let ground = positions.iter().copied().collect::<Face>();
        let complex = SimplicialComplex::from_facets(facets).with_ground_set(ground)?;
        Ok(SubwordComplex {
            system,
            word,
            pi,
            positions,
            complex,
        })
    }

    /// Builds from a type string and two 1-indexed words.
    pub fn from_words(
        type_str: &str,
        word: &[usize],
        pi_word: &[usize],
    ) -> Result<Self, SubwordError> {
        let system = Arc::new(CoxeterSystem::from_type_str(type_str)?);
        let word = Word::from_one_indexed(word)?;
        let pi_word = Word::from_one_indexed(pi_word)?;
        system.check_word(&pi_word)?;
        let pi = system.evaluate(&pi_word);
        Self::build(system, word, pi)
    }

    pub fn system(&self) -> &Arc<CoxeterSystem> {
        &self.system
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn pi(&self) -> &GroupElement {
        &self.pi
    }

    pub fn positions(&self) -> &[Vertex] {
        &self.positions
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn into_complex(self) -> SimplicialComplex {
        self.complex
    }

    fn index_of(&self, label: Vertex) -> Option<usize> {
        self.positions.iter().position(|&p| p == label)
    }

    fn rebuild(&self, word: Word, pi: GroupElement, positions: Vec<Vertex>) -> Self {
        Self::build_on_positions(self.system.clone(), word, pi, positions)
            .expect("derived from a valid subword complex")
    }

    /// `Dem(Q) = π`. Only defined for non-empty complexes.
    pub fn is_spherical(&self) -> Result<bool, SubwordError> {
        if self.complex.is_void() {
            return Err(SubwordError::EmptyComplex);
        }
        Ok(self.system.demazure_product(&self.word) == self.pi)
    }

    fn require_spherical(&self) -> Result<(), SubwordError> {
        match self.is_spherical() {
            Ok(true) => Ok(()),
            Ok(false) | Err(SubwordError::EmptyComplex) => Err(SubwordError::NotSpherical),
            Err(e) => Err(e),
        }
    }

    fn require_vertex(&self, i: Vertex) -> Result<(), SubwordError> {
        if self.complex.contains_face(Face::singleton(i)) && self.index_of(i).is_some() {
            Ok(())
        } else {
            Err(SubwordError::NotAVertex(i))
        }
    }

    fn require_face(&self, face: Face) -> Result<(), SubwordError> {
        if self.complex.contains_face(face) {
            Ok(())
        } else {
            Err(SubwordError::NotAFace(face))
        }
    }

    /// Removes the letters at the given position labels, keeping the labels
    /// of the remaining positions.
    pub fn without_positions(&self, removed: Face) -> Self {
        let (letters, positions): (Vec<usize>, Vec<Vertex>) = self
            .word
            .letters()
            .iter()
            .zip(&self.positions)
            .filter(|(_, p)| !removed.contains(**p))
            .map(|(&l, &p)| (l, p))
            .unzip();
        self.rebuild(Word::new(letters), self.pi.clone(), positions)
    }

    /// Appends the lexicographically smallest reduced word of `π⁻¹ω∘`, giving
    /// a complex over `ω∘` with the same facets. Returns the labels of the
    /// appended positions, which lie in no facet.
    pub fn complete_to_w0(&self) -> Result<(Self, Vec<Vertex>), SubwordError> {
        self.require_spherical()?;
        let w0 = self.system.longest_element();
        let tail = self.system.reduced_word(&self.pi.inverse().mul(&w0));
        let next = self.positions.iter().max().map_or(1, |m| m + 1);
        let appended: Vec<Vertex> = (next..next + tail.len() as Vertex).collect();
        if let Some(&bad) = appended.iter().find(|&&p| p > MAX_VERTEX) {
            return Err(SubwordError::LabelOutOfRange(bad));
        }
        let mut positions = self.positions.clone();
        positions.extend(&appended);
        let out =
            Self::build_on_positions(self.system.clone(), self.word.concat(&tail), w0, positions)?;
        Ok((out, appended))
    }

    /// For `π = ω∘`: moves the first letter `s` to the end as `ψ(s)`.
    ///
    /// The new complex keeps the same position labels. The returned pairs
    /// map each old label to the label of the position it moves to, shifting
    /// everything one place to the left and the first position to the end.
    pub fn rotate(&self) -> Result<(Self, Vec<(Vertex, Vertex)>), SubwordError> {
        if self.pi != self.system.longest_element() {
            return Err(SubwordError::WrongPi);
        }
        let r = self.word.len();
        if r == 0 {
            return Ok((self.clone(), Vec::new()));
        }
        let letters = self.word.letters();
        let mut rotated = letters[1..].to_vec();
        rotated.push(self.system.psi(letters[0]));
        let map = (0..r)
            .map(|k| (self.positions[k], self.positions[(k + r - 1) % r]))
            .collect();
        Ok((
            self.rebuild(Word::new(rotated), self.pi.clone(), self.positions.clone()),
            map,
        ))
    }

    /// The deletion of the first position, built as a subword complex on the
    /// remaining letters: `SC(Q', π)` when `ℓ(q_1 π) > ℓ(π)`, else
    /// `SC(Q', q_1 π)`.
    pub fn delete_first_position(&self) -> Result<Self, SubwordError> {
        let Some(&first) = self.positions.first() else {
            return Err(SubwordError::NotAVertex(1));
        };
        self.require_vertex(first)?;
        let s = self.word.letters()[0];
        let q1_pi = self.system.generator(s).mul(&self.pi);
        let pi = if self.system.length(&q1_pi) > self.system.length(&self.pi) {
            self.pi.clone()
        } else {
            q1_pi
        };
        let rest = Word::new(self.word.letters()[1..].to_vec());
        Ok(self.rebuild(rest, pi, self.positions[1..].to_vec()))
    }

    /// `costar({i}) == deletion({i})`, on any complex.
    pub fn costar_equals_deletion(&self, i: Vertex) -> Result<bool, SubwordError> {
        self.require_vertex(i)?;
        let v = Face::singleton(i);
        Ok(self.complex.costar(v) == self.complex.deletion(v))
    }

    /// The same comparison, restricted to spherical complexes where it
    /// always holds.
    pub fn costar_equals_deletion_check(&self, i: Vertex) -> Result<bool, SubwordError> {
        self.require_spherical()?;
        self.costar_equals_deletion(i)
    }

    /// The other facet through the ridge `facet \ {i}`.
    pub fn flip(&self, facet: Face, i: Vertex) -> Result<Face, SubwordError> {
        self.require_spherical()?;
        if !self.complex.is_facet(facet) {
            return Err(SubwordError::NotAFacet(facet));
        }
        if !facet.contains(i) {
            return Err(SubwordError::NotInFace {
                position: i,
                face: facet,
            });
        }
        let ridge = facet.without(i);
        let others: Vec<Face> = self
            .complex
            .facets()
            .iter()
            .copied()
            .filter(|&g| g != facet && ridge.is_subset(g))
            .collect();
        match others.as_slice() {
            [other] => Ok(*other),
            _ => Err(SubwordError::NotFlippable(ridge)),
        }
    }

    /// For each `i` in `face`, whether `{i}` is a face of `costar(face)`.
    pub fn costar_vertex_membership_raw(
        &self,
        face: Face,
    ) -> Result<Vec<(Vertex, bool)>, SubwordError> {
        self.require_face(face)?;
        if face.len() < 2 {
            return Err(SubwordError::FaceTooSmall(face));
        }
        let costar = self.complex.costar(face);
        Ok(face
            .vertices()
            .map(|i| (i, costar.contains_face(Face::singleton(i))))
            .collect())
    }

    pub fn costar_vertex_membership(
        &self,
        face: Face,
    ) -> Result<Vec<(Vertex, bool)>, SubwordError> {
        self.require_spherical()?;
        self.costar_vertex_membership_raw(face)
    }

    fn check_face_and_element(&self, face: Face, i: Vertex) -> Result<(), SubwordError> {
        self.require_face(face)?;
        if face.len() < 2 {
            return Err(SubwordError::FaceTooSmall(face));
        }
        if !face.contains(i) {
            return Err(SubwordError::NotInFace { position: i, face });
        }
        Ok(())
    }

    /// `link(costar(I), i) == costar(SC(Q \ q_i, π), I \ i)`, on any complex.
    pub fn costar_link_identity_raw(&self, face: Face, i: Vertex) -> Result<bool, SubwordError> {
        self.check_face_and_element(face, i)?;
        let lhs = self.complex.costar(face).link(Face::singleton(i));
        let smaller = self.without_positions(Face::singleton(i));
        let rhs = smaller.complex.costar(face.without(i));
        Ok(lhs == rhs)
    }

    pub fn costar_link_identity_check(&self, face: Face, i: Vertex) -> Result<bool, SubwordError> {
        self.require_spherical()?;
        self.costar_link_identity_raw(face, i)
    }

    /// `deletion(costar(I), i) == deletion(i)`, on any complex.
    pub fn costar_deletion_identity_raw(
        &self,
        face: Face,
        i: Vertex,
    ) -> Result<bool, SubwordError> {
        self.check_face_and_element(face, i)?;
        let v = Face::singleton(i);
        Ok(self.complex.costar(face).deletion(v) == self.complex.deletion(v))
    }

    pub fn costar_deletion_identity_check(
        &self,
        face: Face,
        i: Vertex,
    ) -> Result<bool, SubwordError> {
        self.require_spherical()?;
        self.costar_deletion_identity_raw(face, i)
    }

    /// Vertex decomposability of the star and costar of every face.
    pub fn strong_vd_pipeline(
        &self,
        options: SearchOptions,
    ) -> Result<(Verdict, Vec<FaceRecord>), SubwordError> {
        self.require_spherical()?;
        Ok(decomp::strong_face_log(
            Property::VertexDecomposable,
            &self.complex,
            options,
        ))
    }
}

/// Depth-first search over positions. `remaining` is the part of `π` the
/// letters not yet placed must still produce; a letter may be used only if
/// it shortens `remaining`, and a branch dies once `remaining` is not below
/// the Demazure product of the rest of the word.
fn enumerate_facets(
    system: &CoxeterSystem,
    letters: &[usize],
    pi: &GroupElement,
    positions: &[Vertex],
) -> Vec<Face> {
    let r = letters.len();
    // suffix_dem[k] = Dem(q_k ... q_r)
    let mut suffix_dem = vec![system.identity(); r + 1];
    for k in (0..r).rev() {
        let rest = &suffix_dem[k + 1];
        let s = letters[k];
        suffix_dem[k] = if system.is_left_descent(rest, s) {
            rest.clone()
        } else {
            system.generator(s).mul(rest)
        };
    }
    let mut out = Vec::new();
    if !system.bruhat_leq(pi, &suffix_dem[0]) {
        return out;
    }
    let mut stack = vec![(0usize, pi.clone(), Face::EMPTY)];
    while let Some((k, remaining, skipped)) = stack.pop() {
        if k == r {
            if system.length(&remaining) == 0 {
                out.push(skipped);
            }
            continue;
        }
        let s = letters[k];
        let label = positions[k];
        let skip_ok = system.bruhat_leq(&remaining, &suffix_dem[k + 1]);
        if skip_ok {
            stack.push((k + 1, remaining.clone(), skipped.with(label)));
        }
        if system.is_left_descent(&remaining, s) {
            let next = system.generator(s).mul(&remaining);
            if system.bruhat_leq(&next, &suffix_dem[k + 1]) {
                stack.push((k + 1, next, skipped));
            }
        }
    }
    out
}

/// Every `(Q, Dem(Q))` with `1 <= |Q| <= max_len` and `ℓ(Dem(Q)) >= 1`,
/// words in lexicographic order by length. These are exactly the spherical
/// subword complexes of the system up to that length.
pub fn spherical_inventory(system: &Arc<CoxeterSystem>, max_len: usize) -> Vec<SubwordComplex> {
    let n = system.rank();
    let mut out = Vec::new();
    for len in 1..=max_len {
        let mut letters = vec![0usize; len];
        loop {
            let word = Word::new(letters.clone());
            let pi = system.demazure_product(&word);
            if system.length(&pi) >= 1 {
                out.push(
                    SubwordComplex::build(system.clone(), word, pi)
                        .expect("inventory words are valid"),
                );
            }
            // next word in base n
            let mut k = len;
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                letters[k] += 1;
                if letters[k] < n {
                    break;
                }
                letters[k] = 0;
            }
            if letters.iter().all(|&l| l == 0) {
                break;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(v: &[Vertex]) -> Face {
        Face::new(v.iter().copied())
    }

    fn facets(lists: &[&[Vertex]]) -> SimplicialComplex {
        SimplicialComplex::from_vertex_lists(lists.iter().map(|l| l.iter().copied()))
    }

    fn pentagon() -> SubwordComplex {
        SubwordComplex::from_words("A3", &[1, 2, 1, 2, 1], &[1, 2, 1]).unwrap()
    }

    fn ball() -> SubwordComplex {
        SubwordComplex::from_words("A2", &[1, 2, 1, 2], &[1, 2]).unwrap()
    }

    #[test]
    fn pentagon_and_cone() {
        let p = pentagon();
        assert_eq!(
            p.complex(),
            &facets(&[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]])
        );
        assert!(p.is_spherical().unwrap());
        let cone = SubwordComplex::from_words("A3", &[1, 2, 1, 2, 1, 3], &[1, 2, 1]).unwrap();
        assert_eq!(
            cone.complex(),
            &facets(&[&[1, 2, 6], &[2, 3, 6], &[3, 4, 6], &[4, 5, 6], &[1, 5, 6]])
        );
        assert!(!cone.is_spherical().unwrap());
    }

    #[test]
    fn running_ball_example() {
        let b = ball();
        assert_eq!(b.complex(), &facets(&[&[1, 2], &[2, 3], &[3, 4]]));
        assert!(!b.is_spherical().unwrap());
        assert_eq!(b.complex().costar(f(&[2, 3])), facets(&[&[1, 2], &[3, 4]]));
    }

    #[test]
    fn reduced_word_gives_the_minus_one_sphere() {
        let sc = SubwordComplex::from_words("A2", &[1, 2], &[1, 2]).unwrap();
        assert_eq!(sc.complex(), &SimplicialComplex::empty_face_only());
        assert!(sc.is_spherical().unwrap());
    }

    #[test]
    fn unreachable_pi_gives_the_void_complex() {
        let sc = SubwordComplex::from_words("A2", &[1, 1], &[1, 2]).unwrap();
        assert!(sc.complex().is_void());
        assert_eq!(sc.is_spherical(), Err(SubwordError::EmptyComplex));
    }

    #[test]
    fn deletion_counterexample() {
        let b = ball();
        assert_eq!(b.complex().costar(f(&[2])), facets(&[&[3, 4]]));
        assert_eq!(b.complex().deletion(f(&[2])), facets(&[&[1], &[3, 4]]));
        assert!(!b.costar_equals_deletion(2).unwrap());
        assert_eq!(
            b.costar_equals_deletion_check(2),
            Err(SubwordError::NotSpherical)
        );
    }

    #[test]
    fn costar_membership_counterexample() {
        let b = ball();
        let got = b.costar_vertex_membership_raw(f(&[1, 2])).unwrap();
        assert_eq!(got, vec![(1, false), (2, true)]);
        assert_eq!(
            b.costar_vertex_membership_raw(f(&[2])),
            Err(SubwordError::FaceTooSmall(f(&[2])))
        );
    }

    #[test]
    fn deletion_identity_counterexample() {
        let sc = SubwordComplex::from_words("A3", &[1, 2, 3, 1, 2], &[1, 2]).unwrap();
        assert_eq!(sc.complex(), &facets(&[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5]]));
        let face = f(&[2, 3]);
        assert_eq!(sc.complex().costar(face), facets(&[&[3, 4, 5]]));
        assert_eq!(
            sc.complex().deletion(f(&[3])),
            facets(&[&[1, 2], &[2, 4], &[4, 5]])
        );
        assert!(!sc.costar_deletion_identity_raw(face, 3).unwrap());
    }

    #[test]
    fn pentagon_checks() {
        let p = pentagon();
        for i in 1..=5 {
            assert!(p.costar_equals_deletion_check(i).unwrap());
        }
        assert_eq!(p.flip(f(&[1, 2]), 1).unwrap(), f(&[2, 3]));
        assert!(p.costar_deletion_identity_check(f(&[1, 2]), 1).unwrap());
        assert!(p.costar_deletion_identity_check(f(&[1, 2]), 2).unwrap());
        assert!(p.costar_link_identity_check(f(&[1, 2]), 2).unwrap());
    }

    #[test]
    fn completion_keeps_facets() {
        let p = pentagon();
        let (full, appended) = p.complete_to_w0().unwrap();
        assert_eq!(appended, vec![6, 7, 8]);
        assert_eq!(full.complex(), p.complex());
        assert_eq!(full.pi(), &p.system().longest_element());
        assert_eq!(
            ball().complete_to_w0().err(),
            Some(SubwordError::NotSpherical)
        );
    }

    #[test]
    fn rotation_in_a2() {
        let sc = SubwordComplex::from_words("A2", &[1, 2, 1, 2, 1], &[1, 2, 1]).unwrap();
        let (rot, map) = sc.rotate().unwrap();
        assert_eq!(rot.word().one_indexed(), vec![2, 1, 2, 1, 2]);
        let image = SimplicialComplex::from_facets(sc.complex().facets().iter().map(|&g| {
            g.vertices()
                .map(|v| map.iter().find(|(a, _)| *a == v).unwrap().1)
                .collect::<Face>()
        }));
        assert_eq!(&image, rot.complex());
        assert_eq!(pentagon().rotate().err(), Some(SubwordError::WrongPi));
    }

    #[test]
    fn deleting_the_first_position() {
        let p = pentagon();
        let del = p.delete_first_position().unwrap();
        assert_eq!(del.complex(), &p.complex().deletion(f(&[1])));
        let b = ball();
        assert_eq!(
            b.delete_first_position().unwrap().complex(),
            &b.complex().deletion(f(&[1]))
        );
    }

    #[test]
    fn links_are_subword_complexes() {
        let p = pentagon();
        for face in p.complex().faces() {
            assert_eq!(
                p.complex().link(face),
                *p.without_positions(face).complex(),
                "{face}"
            );
        }
    }

    #[test]
    fn inventory_is_spherical() {
        let sys = Arc::new(CoxeterSystem::from_type_str("A2").unwrap());
        let inv = spherical_inventory(&sys, 4);
        assert_eq!(inv.len(), 2 + 4 + 8 + 16);
        assert!(inv.iter().all(|sc| sc.is_spherical().unwrap()));
    }
}
