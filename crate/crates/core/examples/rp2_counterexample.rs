//! Two triangulations of the projective plane with isomorphic facet-ridge
//! graphs that are not simplicially isomorphic.
//!
//! ```bash
//! cargo run --example rp2_counterexample
//! ```

use subword_complex::fixtures;
use subword_complex::frgraph::{
    automorphism_group_order, isomorphisms, simplicial_automorphism_group_order,
    verify_reconstruction, InducedFaceMap, Reconstruction,
};

fn main() {
    let minimal = fixtures::rp2_minimal();
    println!(
        "minimal RP2: {} facets, {} simplicial automorphisms, {} facet-ridge automorphisms",
        minimal.facet_count(),
        simplicial_automorphism_group_order(&minimal).unwrap(),
        automorphism_group_order(&minimal.facet_ridge_graph().unwrap().graph)
    );

    let pair = fixtures::rp2_pair();
    let (a, b) = (&pair.source.complex, &pair.target.complex);
    println!(
        "{}: {} and {} facets",
        pair.name,
        a.facet_count(),
        b.facet_count()
    );
    println!(
        "  degrees {}: {:?}",
        pair.source.label,
        fixtures::labelled_degrees(a)
    );
    println!(
        "  degrees {}: {:?}",
        pair.target.label,
        fixtures::labelled_degrees(b)
    );

    match verify_reconstruction(&pair.correspondence, a, b).unwrap() {
        Reconstruction::Failure {
            witness,
            g_image,
            kind,
            degraded,
        } => {
            println!("  face map fails at {witness} ({kind:?}), g = {g_image:?}");
            println!("  {} faces degrade", degraded.len());
        }
        other => println!("  unexpected: {other:?}"),
    }
    let g = InducedFaceMap::new(a, b, pair.correspondence.clone()).unwrap();
    for v in 1..=4 {
        let face = subword_complex::simplicial::Face::new([v]);
        println!("  g({face}) = {:?}", g.image(face));
    }

    let (ga, gb) = (
        a.facet_ridge_graph().unwrap().graph,
        b.facet_ridge_graph().unwrap().graph,
    );
    let all = isomorphisms(&ga, &gb);
    let extending = all
        .iter()
        .filter(|iso| verify_reconstruction(iso, a, b).unwrap().extends())
        .count();
    println!("  {} graph isomorphisms, {extending} extend", all.len());
}
