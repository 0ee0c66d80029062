//! Cross-validation: reflection orbits against brute-force word counting.
//!
//! The two sides share nothing beyond the scalar arithmetic.  The
//! reflection side enumerates positive real roots through integer
//! pseudo-reflections; the word side infers restricted-PBW generators from
//! symmetrizer ranks.  `compare` matches them degree by degree, and a
//! mismatch is reported rather than reconciled.
//!
//! Run with `cargo run --example groupoid_vs_oracle`.

use nichols::braiding::BraidingMatrix;
use nichols::groupoid::Caps;
use nichols::report::compare;

fn main() {
    let caps = Caps::default();
    for (name, text, max_total) in [
        ("a2_generic", include_str!("data/a2_generic.txt"), 5),
        ("b2_generic", include_str!("data/b2_generic.txt"), 6),
        ("a2_third_root", include_str!("data/a2_third_root.txt"), 5),
        ("b2_fourth_root", include_str!("data/b2_fourth_root.txt"), 6),
    ] {
        let q = BraidingMatrix::parse(text).expect("bundled data parses");
        let report = compare(&q, &caps, max_total).expect("cutoff is high enough");
        println!("{name} (degrees up to {max_total}): agreed = {}", report.agreed());
        print!("{}", indent(&report.to_text()));
        println!();
    }

    // A deliberately corrupted instance: the diagonal of the generic A2
    // chain with a broken off-diagonal pair.  The two sides cannot agree,
    // and the report says which degrees are in conflict.
    let corrupted = BraidingMatrix::parse(
        "rank 2\nparams t\nentry 1 1 t\nentry 1 2 t^-1\nentry 2 1 t^2\nentry 2 2 t",
    )
    .unwrap();
    let report = compare(&corrupted, &caps, 4).expect("cutoff is high enough");
    println!("corrupted instance: agreed = {}", report.agreed());
    print!("{}", indent(&report.to_text()));
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("  {l}\n")).collect()
}
