//! Costars of spherical subword complexes, and where the identities break
//! on balls.
//!
//! ```bash
//! cargo run --example costar_identities
//! ```

use subword_complex::simplicial::Face;
use subword_complex::subword::SubwordComplex;

fn main() {
    let sphere =
        SubwordComplex::from_words("A3", &[1, 2, 3, 1, 2, 3, 1, 2, 3], &[1, 2, 1, 3, 2, 1])
            .unwrap();
    let c = sphere.complex();
    println!(
        "A3 [{}]: {} facets, spherical {}",
        sphere.word(),
        c.facet_count(),
        sphere.is_spherical().unwrap()
    );
    for i in c.vertex_set().vertices() {
        println!(
            "  costar({{{i}}}) = deletion: {:?}",
            sphere.costar_equals_deletion_check(i)
        );
    }
    let mut checked = 0;
    for face in c.faces().into_iter().filter(|f| f.len() >= 2) {
        for i in face.vertices() {
            assert_eq!(sphere.costar_link_identity_check(face, i), Ok(true));
            assert_eq!(sphere.costar_deletion_identity_check(face, i), Ok(true));
            checked += 2;
        }
    }
    println!("  {checked} link and deletion identities hold");

    let ball = SubwordComplex::from_words("A2", &[1, 2, 1, 2], &[1, 2]).unwrap();
    let c = ball.complex();
    let two = Face::new([2]);
    println!(
        "A2 [{}] is a ball: spherical {}",
        ball.word(),
        ball.is_spherical().unwrap()
    );
    println!(
        "  costar({{2}}) = {:?}, deletion = {:?}",
        c.costar(two),
        c.deletion(two)
    );
    println!(
        "  checked form refuses: {:?}",
        ball.costar_equals_deletion_check(2)
    );
    println!(
        "  vertices of {{1,2}} in its costar: {:?}",
        ball.costar_vertex_membership_raw(Face::new([1, 2]))
    );

    let tri = SubwordComplex::from_words("A3", &[1, 2, 3, 1, 2], &[1, 2]).unwrap();
    println!(
        "A3 [{}]: deletion identity at ({{2,3}}, 3) holds: {:?}",
        tri.word(),
        tri.costar_deletion_identity_raw(Face::new([2, 3]), 3)
    );
}
