//! Group elements, reduced words, Bruhat order and Demazure products.
//!
//! ```bash
//! cargo run --example coxeter_basics
//! ```

use subword_complex::coxeter::{CoxeterSystem, Word};

fn main() {
    for name in ["A3", "B3", "I2(5)", "H3"] {
        let w = CoxeterSystem::from_type_str(name).unwrap();
        let w0 = w.longest_element();
        let psi: Vec<usize> = (0..w.rank()).map(|s| w.psi(s) + 1).collect();
        println!(
            "{name}: {} positive roots, w0 = {}, psi = {psi:?}",
            w.positive_root_count(),
            w.reduced_word(&w0)
        );
    }

    let a3 = CoxeterSystem::from_type_str("A3").unwrap();
    let q = Word::from_one_indexed(&[1, 2, 1, 2, 1]).unwrap();
    let dem = a3.demazure_product(&q);
    println!(
        "A3: Dem({q}) = {} of length {}",
        a3.reduced_word(&dem),
        a3.length(&dem)
    );

    let u = a3.evaluate(&Word::from_one_indexed(&[1, 2]).unwrap());
    let v = a3.evaluate(&Word::from_one_indexed(&[1, 2, 1]).unwrap());
    let x = a3.evaluate(&Word::from_one_indexed(&[3]).unwrap());
    println!(
        "A3: 12 <= 121 is {}, 3 <= 121 is {}",
        a3.bruhat_leq(&u, &v),
        a3.bruhat_leq(&x, &v)
    );
}
