//! The same phenomenon on the torus: subdivisions of the minimal torus
//! whose facet-ridge graphs agree while the vertex degrees do not.
//!
//! ```bash
//! cargo run --example torus_counterexample
//! ```

use subword_complex::fixtures;
use subword_complex::frgraph::{
    automorphism_group_order, max_vertex_degree, simplicial_automorphism_group_order,
    verify_reconstruction, Reconstruction,
};

fn main() {
    let minimal = fixtures::torus_minimal();
    println!(
        "minimal torus: {} facets, {} simplicial automorphisms, {} facet-ridge automorphisms",
        minimal.facet_count(),
        simplicial_automorphism_group_order(&minimal).unwrap(),
        automorphism_group_order(&minimal.facet_ridge_graph().unwrap().graph)
    );

    let pair = fixtures::torus_pair();
    let (a, b) = (&pair.source.complex, &pair.target.complex);
    println!(
        "subdivisions applied to both: {}",
        pair.common_subdivisions.len()
    );
    for side in [&pair.source, &pair.target] {
        println!(
            "  {}: {} facets, busiest vertex {:?}, homology {:?}",
            side.label,
            side.complex.facet_count(),
            max_vertex_degree(&side.complex),
            side.complex.gf2_homology()
        );
    }
    if let Reconstruction::Failure {
        witness,
        g_image,
        kind,
        ..
    } = verify_reconstruction(&pair.correspondence, a, b).unwrap()
    {
        println!("  face map fails at {witness}: g = {g_image:?} ({kind:?})");
    }
}
