//! Stellar subdivision of a facet truncates its node in the facet-ridge
//! graph and leaves homology alone.
//!
//! ```bash
//! cargo run --example stellar_truncation
//! ```

use subword_complex::fixtures;
use subword_complex::frgraph::find_isomorphism;

fn main() {
    let torus = fixtures::torus_minimal();
    let facet = torus.facets()[0];
    let fr = torus.facet_ridge_graph().unwrap();
    let sub = torus.stellar_subdivide(facet, 8).unwrap();
    let truncated = fr.truncate_vertex(facet, 2).unwrap();
    let after = sub.facet_ridge_graph().unwrap().graph;

    println!(
        "torus: {} facets, homology {:?}",
        torus.facet_count(),
        torus.gf2_homology()
    );
    println!(
        "subdivide {facet} at 8: {} facets, homology {:?}",
        sub.facet_count(),
        sub.gf2_homology()
    );
    println!(
        "graph: {} nodes, {} edges; truncated {} nodes, {} edges",
        fr.graph.node_count(),
        fr.graph.edge_count(),
        truncated.node_count(),
        truncated.edge_count()
    );
    println!(
        "truncation matches the subdivision: {}",
        find_isomorphism(&truncated, &after).is_some()
    );
}
