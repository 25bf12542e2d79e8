//! Every facet-ridge isomorphism between spherical subword complexes of
//! small rank extends to a simplicial isomorphism. Balls behave differently.
//!
//! ```bash
//! cargo run --release --example reconstruction_sweep -- 6
//! ```

use std::collections::BTreeMap;
use std::sync::Arc;

use subword_complex::coxeter::CoxeterSystem;
use subword_complex::fixtures;
use subword_complex::frgraph::exhaustive_reconstruction_sweep;
use subword_complex::subword::spherical_inventory;

fn main() {
    let max_len: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(6);
    for name in ["A2", "A3", "B2", "I2(5)"] {
        let w = Arc::new(CoxeterSystem::from_type_str(name).unwrap());
        let mut by_dim = BTreeMap::new();
        for sc in spherical_inventory(&w, max_len) {
            let c = sc.into_complex();
            by_dim
                .entry(c.dim().unwrap())
                .or_insert_with(Vec::new)
                .push(c);
        }
        for (dim, family) in by_dim {
            let r = exhaustive_reconstruction_sweep(&family).unwrap();
            println!(
                "{name} dim {dim}: {} complexes, {} distinct, {} classes, {} isomorphisms checked, all extend: {}",
                r.complexes, r.distinct, r.classes, r.isomorphisms_checked, r.all_extend()
            );
        }
    }

    let (x, y) = fixtures::ball_pair();
    let r = exhaustive_reconstruction_sweep(&[x.into_complex(), y.into_complex()]).unwrap();
    println!("ball pair: {:?}", r.flagged);
}
