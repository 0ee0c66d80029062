//! The groupoid of reflected braidings and its Brandt axioms.
//!
//! Starting from one braiding matrix, repeatedly applying pseudo-reflections
//! produces a finite graph of braidings (states) joined by reflections
//! (arrows).  Pushing the basis changes along every path yields a groupoid
//! of integer matrices attached to bases; `check_brandt_axioms` verifies
//! the defining axioms of a connected Brandt groupoid element by element.
//!
//! Run with `cargo run --example weyl_groupoid`.

use nichols::braiding::BraidingMatrix;
use nichols::groupoid::{build_groupoid, check_brandt_axioms, compose, weyl_brandt_elements, Caps};

fn main() {
    let caps = Caps::default();
    for (name, text) in [
        ("rank1_minus_one", include_str!("data/rank1_minus_one.txt")),
        ("a2_third_root", include_str!("data/a2_third_root.txt")),
        ("a3_generic", include_str!("data/a3_generic.txt")),
    ] {
        let q = BraidingMatrix::parse(text).expect("bundled data parses");
        let graph = build_groupoid(&q, &caps).expect("within default caps");
        println!(
            "{name}: {} states, {} arrows, {} obstructions, fully reflectable: {}",
            graph.states().len(),
            graph.arrows().len(),
            graph.obstructions().len(),
            graph.fully_reflectable(),
        );

        let wb = weyl_brandt_elements(&q, &caps).expect("within default caps");
        println!(
            "  groupoid: {} elements over {} bases, identity at the start: {}",
            wb.len(),
            wb.bases().len(),
            wb.contains_identity_at_start(),
        );
        match check_brandt_axioms(&wb) {
            Ok(()) => println!("  Brandt axioms: pass"),
            Err(v) => println!("  Brandt axioms: FAIL ({v})"),
        }

        // Composition is partial: x o y needs y to land on the basis x
        // starts from.  Count the defined pairs.
        let elements: Vec<_> = wb.elements().iter().collect();
        let defined = elements
            .iter()
            .flat_map(|x| elements.iter().map(move |y| (x, y)))
            .filter(|(x, y)| compose(x, y).is_some())
            .count();
        println!(
            "  composition defined for {defined} of {} ordered pairs",
            elements.len() * elements.len()
        );
        println!();
    }

    // The state graph renders directly to Graphviz.
    let q = BraidingMatrix::parse(include_str!("data/a2_third_root.txt")).unwrap();
    let graph = build_groupoid(&q, &caps).unwrap();
    println!("graphviz form of the a2_third_root state graph:");
    print!("{}", graph.to_dot());
}
