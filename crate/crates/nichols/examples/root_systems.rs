//! Real roots of a braiding matrix, cross-checked against the classical
//! root system of its Cartan matrix.
//!
//! The positive real roots are the degrees reached by pushing the unit
//! vectors through every chain of pseudo-reflections.  For a braiding of
//! finite Cartan type they coincide with the positive roots of the Cartan
//! matrix computed purely from integer linear algebra.
//!
//! Run with `cargo run --example root_systems`.

use std::collections::BTreeSet;

use nichols::braiding::BraidingMatrix;
use nichols::cartan::root_system;
use nichols::groupoid::{real_roots, Caps};

fn main() {
    let caps = Caps::default();
    for (name, text) in [
        ("a2_generic", include_str!("data/a2_generic.txt")),
        ("b2_generic", include_str!("data/b2_generic.txt")),
        ("g2_generic", include_str!("data/g2_generic.txt")),
        ("a3_generic", include_str!("data/a3_generic.txt")),
    ] {
        let q = BraidingMatrix::parse(text).expect("bundled data parses");
        let roots = real_roots(&q, &caps).expect("within default caps");
        println!("{name}: {} positive real roots", roots.positive_count());
        for v in roots.positive() {
            println!("  {v:?}");
        }

        let c = q.cartan_matrix().expect("these instances are of Cartan type");
        let classical = root_system(&c).expect("these Cartan matrices are finite type");
        let from_braiding: BTreeSet<_> = roots.positive().cloned().collect();
        let from_cartan: BTreeSet<_> = classical.positive().cloned().collect();
        assert_eq!(from_braiding, from_cartan);
        println!(
            "  agrees with the root system of {}",
            c.to_string().replace('\n', " ")
        );
        println!();
    }
}
