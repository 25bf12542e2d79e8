//! Graphviz output for a facet-ridge graph and for the correspondence
//! between the two projective planes.
//!
//! ```bash
//! cargo run --example facet_ridge_dot > rp2.dot
//! ```

use subword_complex::fixtures;
use subword_complex::io::{fr_graph_dot, isomorphism_dot, LabelStyle};

fn main() {
    let minimal = fixtures::rp2_minimal();
    print!(
        "{}",
        fr_graph_dot(
            &minimal.facet_ridge_graph().unwrap(),
            LabelStyle::Alphanumeric,
            "rp2"
        )
    );

    let pair = fixtures::rp2_pair();
    let a = pair.source.complex.facet_ridge_graph().unwrap();
    let b = pair.target.complex.facet_ridge_graph().unwrap();
    print!(
        "{}",
        isomorphism_dot(&a, &b, &pair.correspondence, LabelStyle::Alphanumeric)
    );
}
