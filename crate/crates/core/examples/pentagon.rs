//! The pentagon as a subword complex of type A3, and the cone over it.
//!
//! ```bash
//! cargo run --example pentagon
//! ```

use subword_complex::io::{fr_graph_dot, ComplexJson, LabelStyle};
use subword_complex::subword::SubwordComplex;

fn main() {
    let pentagon = SubwordComplex::from_words("A3", &[1, 2, 1, 2, 1], &[1, 2, 1]).unwrap();
    let cone = SubwordComplex::from_words("A3", &[1, 2, 1, 2, 1, 3], &[1, 2, 1]).unwrap();

    for (name, sc) in [("pentagon", &pentagon), ("cone", &cone)] {
        let c = sc.complex();
        let facets: Vec<String> = c.facets().iter().map(|f| f.to_string()).collect();
        println!("{name}: Q = {}, facets {}", sc.word(), facets.join(" "));
        println!(
            "  f-vector {:?}, spherical {}",
            c.f_vector(),
            sc.is_spherical().unwrap()
        );
    }

    let json = serde_json::to_string_pretty(&ComplexJson::from_subword(&pentagon)).unwrap();
    println!("{json}");
    let fr = pentagon.complex().facet_ridge_graph().unwrap();
    print!("{}", fr_graph_dot(&fr, LabelStyle::Decimal, "pentagon"));
}
