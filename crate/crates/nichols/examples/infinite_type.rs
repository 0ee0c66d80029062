//! What failure to be finite looks like, on both levels.
//!
//! On the braiding level an affine instance drives every enumeration into
//! its cap.  On the pure Cartan-matrix level this example shows a
//! non-symmetrizable cycle that no diagonal braiding realizes, a Weyl
//! group too large to enumerate, a product of simple reflections of
//! infinite order, and a closed form for the trace of a 3-cycle's
//! reflection product.
//!
//! Run with `cargo run --example infinite_type`.

use nichols::braiding::{BraidingMatrix, CartanMatrix};
use nichols::cartan::{
    cycles, matrix_order, realizable_as_braiding, sign_coherent_set, simple_reflection_matrix,
    trace_3cycle, weyl_group, MatrixOrder, Realizability,
};
use nichols::groupoid::{real_roots, Caps};

fn main() {
    // Affine braiding: the real roots are infinite, so enumeration stops
    // at whatever cap it is given.
    let q = BraidingMatrix::parse(include_str!("data/affine_rank2.txt"))
        .expect("bundled data parses");
    let small = Caps { max_states: 50, max_arrows: 500, max_word_len: 64 };
    match real_roots(&q, &small) {
        Ok(_) => unreachable!("affine instances have infinitely many real roots"),
        Err(e) => println!("affine_rank2 under a small cap: {e}"),
    }

    // A 3-cycle that is a perfectly valid generalized Cartan matrix but is
    // not the Cartan matrix of any diagonal braiding over these scalars.
    let c3 = cycles::three_cycle_minus_two();
    println!("\n3-cycle {}:", c3.to_string().replace('\n', " "));
    match realizable_as_braiding(&c3) {
        Realizability::Realizable { .. } => unreachable!("this cycle is obstructed"),
        Realizability::Unrealizable { reason } => println!("  unrealizable: {reason}"),
    }
    match weyl_group(&c3, 10_000) {
        Ok(w) => println!("  Weyl group of order {}", w.len()),
        Err(e) => println!("  Weyl group: {e}"),
    }
    match sign_coherent_set(&c3, 2) {
        Ok(_) => unreachable!("sign coherence needs finite type"),
        Err(e) => println!("  sign-coherent set: {e}"),
    }
    let t = trace_3cycle(&c3).expect("this is a 3-cycle");
    let product = simple_reflection_matrix(&c3, 0)
        .mul(&simple_reflection_matrix(&c3, 1))
        .mul(&simple_reflection_matrix(&c3, 2));
    assert_eq!(t, product.trace());
    println!("  trace of s1 s2 s3 from the closed form: {t}");

    // A 4-cycle whose reflection product never returns to the identity.
    let c4 = cycles::four_cycle();
    let product = simple_reflection_matrix(&c4, 0)
        .mul(&simple_reflection_matrix(&c4, 1))
        .mul(&simple_reflection_matrix(&c4, 2))
        .mul(&simple_reflection_matrix(&c4, 3));
    println!("\n4-cycle {}:", c4.to_string().replace('\n', " "));
    println!("  s1 s2 s3 s4 =\n{}", indent(&product.to_string()));
    match matrix_order(&product, 10_000).expect("reflections are invertible") {
        MatrixOrder::Finite(n) => println!("  order {n}"),
        MatrixOrder::ExceedsCap => println!("  no power up to 10000 is the identity"),
    }

    // For contrast: a finite-type matrix is realizable, with an explicit
    // braiding witness.
    let b2 = CartanMatrix::from_rows(&[&[2, -1], &[-2, 2]]);
    match realizable_as_braiding(&b2) {
        Realizability::Realizable { witness } => {
            println!(
                "\nfinite-type {} is realized by:\n{}",
                b2.to_string().replace('\n', " "),
                indent(&witness.serialize())
            );
        }
        Realizability::Unrealizable { .. } => unreachable!("finite type is realizable"),
    }
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("    {l}\n")).collect()
}
