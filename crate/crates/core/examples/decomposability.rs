//! Shellability and vertex decomposability, with certificates, plus the
//! strong variants on a sphere and a counterexample.
//!
//! ```bash
//! cargo run --example decomposability
//! ```

use subword_complex::decomp::{
    is_shellable, is_strongly_shellable, is_strongly_vertex_decomposable, is_vertex_decomposable,
    Outcome, SearchOptions,
};
use subword_complex::fixtures;
use subword_complex::simplicial::SimplicialComplex;
use subword_complex::subword::SubwordComplex;

fn report(name: &str, c: &SimplicialComplex) {
    let opts = SearchOptions::default();
    let shell = is_shellable(c, opts);
    let vd = is_vertex_decomposable(c, opts);
    println!(
        "{name}: shellable {:?}, vertex decomposable {:?}",
        shell.verdict(),
        vd.verdict()
    );
    if let Outcome::Yes(cert) = &shell {
        let order: Vec<String> = cert.order.iter().map(|f| f.to_string()).collect();
        println!("  shelling order {}", order.join(" "));
    }
    if let Some(cert) = vd.certificate() {
        println!("  decomposition tree with {} nodes", cert.size());
    }
    let strong_vd = is_strongly_vertex_decomposable(c, opts);
    let strong_sh = is_strongly_shellable(c, opts);
    println!(
        "  strongly vd {:?} (witness {:?}), strongly shellable {:?}",
        strong_vd.verdict, strong_vd.witness, strong_sh.verdict
    );
}

fn main() {
    let sphere =
        SubwordComplex::from_words("A3", &[1, 2, 3, 1, 2, 3, 1, 2, 3], &[1, 2, 1, 3, 2, 1])
            .unwrap();
    report(&format!("sphere A3 [{}]", sphere.word()), sphere.complex());

    // Demazure product w0, not 123: a ball, and not strongly decomposable.
    let ball = SubwordComplex::from_words("A3", &[1, 2, 3, 1, 2, 3, 1], &[1, 2, 3]).unwrap();
    report(&format!("ball A3 [{}]", ball.word()), ball.complex());

    // Two triangles meeting in a vertex: not shellable.
    let bowtie = SimplicialComplex::from_vertex_lists([[1, 2, 3], [3, 4, 5]]);
    report("bowtie", &bowtie);

    report("minimal projective plane", &fixtures::rp2_minimal());
}
