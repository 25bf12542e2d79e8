mod common;

use std::collections::BTreeSet;

use common::{all_faces, complex_from_masks};
use proptest::prelude::*;
use subword_complex::decomp::{
    self, is_shellable, is_strongly_shellable, is_strongly_vertex_decomposable,
    is_vertex_decomposable, verify_shelling, verify_vertex_decomposition, SearchOptions, Verdict,
};
use subword_complex::frgraph::find_isomorphism;
use subword_complex::simplicial::{Face, SimplicialComplex};

const N: u32 = 7;

fn any_complex() -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(1u64..(1 << N), 1..7).prop_map(|m| complex_from_masks(&m))
}

/// Pure complexes of dimension 1 or 2 on seven vertices.
fn pure_complex() -> impl Strategy<Value = SimplicialComplex> {
    (2usize..=3).prop_flat_map(|k| {
        prop::collection::vec(
            prop::sample::subsequence((0..N).collect::<Vec<_>>(), k),
            1..8,
        )
        .prop_map(SimplicialComplex::from_vertex_lists)
    })
}

fn faces_of(c: &SimplicialComplex) -> BTreeSet<Face> {
    c.faces().into_iter().collect()
}

/// Shellable by trying every order of the facets.
fn brute_shellable(c: &SimplicialComplex) -> bool {
    if c.is_simplex() {
        return true;
    }
    if !c.is_pure() {
        return false;
    }
    fn extend(placed: &mut Vec<Face>, rest: &mut Vec<Face>) -> bool {
        if rest.is_empty() {
            return true;
        }
        for k in 0..rest.len() {
            let f = rest[k];
            let ok = placed.is_empty() || {
                let meet = SimplicialComplex::from_facets(placed.iter().map(|g| g.intersection(f)));
                meet.facets().iter().all(|g| g.len() + 1 == f.len())
            };
            if ok {
                rest.remove(k);
                placed.push(f);
                if extend(placed, rest) {
                    return true;
                }
                placed.pop();
                rest.insert(k, f);
            }
        }
        false
    }
    extend(&mut Vec::new(), &mut c.facets().to_vec())
}

/// Vertex decomposable by the recursive definition, without memory.
fn brute_vd(c: &SimplicialComplex) -> bool {
    if c.is_simplex() {
        return true;
    }
    c.is_pure()
        && c.vertex_set().vertices().any(|v| {
            let v = Face::singleton(v);
            brute_vd(&c.deletion(v)) && brute_vd(&c.link(v))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn faces_are_downward_closure(c in any_complex()) {
        let faces = c.faces();
        prop_assert_eq!(faces.iter().copied().collect::<BTreeSet<_>>(), all_faces(&c));
        prop_assert!(faces.windows(2).all(|w| w[0].graded_cmp(&w[1]).is_lt()));
        let mut f = vec![0usize; faces.iter().map(|f| f.len()).max().unwrap() + 1];
        for face in &faces {
            f[face.len()] += 1;
        }
        prop_assert_eq!(c.f_vector(), f.clone());
        let euler: i64 = f.iter().enumerate().skip(1).map(|(k, &n)| if k % 2 == 1 { n as i64 } else { -(n as i64) }).sum();
        prop_assert_eq!(c.euler_characteristic(), euler);
    }

    #[test]
    fn local_operations_match_set_definitions(c in any_complex()) {
        let faces = all_faces(&c);
        let facets = c.facets();
        for &i in &faces {
            let star: BTreeSet<Face> = faces.iter().copied().filter(|j| faces.contains(&i.union(*j))).collect();
            let link: BTreeSet<Face> = star.iter().copied().filter(|j| j.intersection(i).is_empty()).collect();
            let deletion: BTreeSet<Face> = faces.iter().copied().filter(|j| !i.is_subset(*j)).collect();
            let costar: BTreeSet<Face> = faces
                .iter()
                .copied()
                .filter(|j| facets.iter().any(|g| j.is_subset(*g) && !i.is_subset(*g)))
                .collect();
            prop_assert_eq!(&faces_of(&c.star(i)), &star, "star {}", i);
            prop_assert_eq!(&faces_of(&c.link(i)), &link, "link {}", i);
            prop_assert_eq!(&faces_of(&c.deletion(i)), &deletion, "deletion {}", i);
            prop_assert_eq!(&faces_of(&c.costar(i)), &costar, "costar {}", i);
        }
    }

    #[test]
    fn star_is_join_of_link(c in any_complex()) {
        for i in c.faces() {
            prop_assert_eq!(c.star(i), c.link(i).join_with_simplex(i).unwrap(), "face {}", i);
        }
    }

    #[test]
    fn vertex_deletion_is_induced_complement(c in any_complex()) {
        let ground = c.ground_set();
        for v in c.vertex_set().vertices() {
            let induced = c.induced(ground.without(v)).unwrap();
            prop_assert_eq!(c.deletion(Face::singleton(v)), induced);
        }
    }

    #[test]
    fn shellability_matches_brute_force(c in pure_complex()) {
        let outcome = is_shellable(&c, SearchOptions::default());
        prop_assert_eq!(outcome.is_yes(), brute_shellable(&c));
        if let Some(cert) = outcome.certificate() {
            prop_assert_eq!(verify_shelling(&c, cert), Ok(()));
        }
        let plain = is_shellable(&c, SearchOptions { memoize: false, ..SearchOptions::default() });
        prop_assert_eq!(plain.is_yes(), outcome.is_yes());
    }

    #[test]
    fn vertex_decomposability_matches_brute_force(c in pure_complex()) {
        let outcome = is_vertex_decomposable(&c, SearchOptions::default());
        prop_assert_eq!(outcome.is_yes(), brute_vd(&c));
        if let Some(cert) = outcome.certificate() {
            prop_assert_eq!(verify_vertex_decomposition(&c, cert), Ok(()));
        }
    }

    #[test]
    fn vertex_decomposable_implies_shellable(c in pure_complex()) {
        if is_vertex_decomposable(&c, SearchOptions::default()).is_yes() {
            prop_assert!(is_shellable(&c, SearchOptions::default()).is_yes());
        }
    }

    #[test]
    fn strong_implies_base(c in pure_complex()) {
        let opts = SearchOptions::default();
        let svd = is_strongly_vertex_decomposable(&c, opts).verdict;
        let ssh = is_strongly_shellable(&c, opts).verdict;
        if svd == Verdict::True {
            prop_assert!(is_vertex_decomposable(&c, opts).is_yes());
            prop_assert_eq!(ssh, Verdict::True);
        }
        if ssh == Verdict::True {
            prop_assert!(is_shellable(&c, opts).is_yes());
        }
        // The star of the empty face is the whole complex.
        let (verdict, log) = decomp::strong_face_log(decomp::Property::VertexDecomposable, &c, opts);
        prop_assert_eq!(verdict, svd);
        prop_assert_eq!(log[0].face, Face::EMPTY);
    }

    #[test]
    fn stellar_subdivision_keeps_homology(c in any_complex(), pick in any::<prop::sample::Index>()) {
        let facet = c.facets()[pick.index(c.facet_count())];
        let sub = c.stellar_subdivide(facet, 40).unwrap();
        prop_assert_eq!(sub.gf2_homology(), c.gf2_homology());
        prop_assert_eq!(sub.euler_characteristic(), c.euler_characteristic());
        prop_assert_eq!(sub.facet_count(), c.facet_count() + facet.len() - 1);
    }
}

#[test]
fn budget_zero_is_indeterminate() {
    let c = SimplicialComplex::from_vertex_lists([[1, 2], [2, 3], [3, 4], [4, 5], [1, 5]]);
    let opts = SearchOptions {
        budget: 0,
        ..SearchOptions::default()
    };
    assert_eq!(is_shellable(&c, opts).verdict(), Verdict::Indeterminate);
    assert_eq!(
        is_vertex_decomposable(&c, opts).verdict(),
        Verdict::Indeterminate
    );
    assert_eq!(
        is_strongly_vertex_decomposable(&c, opts).verdict,
        Verdict::Indeterminate
    );
}

#[test]
fn truncation_matches_subdivision_on_surfaces() {
    use subword_complex::fixtures::{rp2_minimal, torus_minimal};
    for c in [rp2_minimal(), torus_minimal()] {
        let fr = c.facet_ridge_graph().unwrap();
        for &f in c.facets() {
            let truncated = fr.truncate_vertex(f, 2).unwrap();
            let sub = c
                .stellar_subdivide(f, 20)
                .unwrap()
                .facet_ridge_graph()
                .unwrap();
            assert!(
                find_isomorphism(&truncated, &sub.graph).is_some(),
                "facet {f}"
            );
        }
    }
}
