//! Skew derivations, iterated braided commutators, and the duality
//! pairing.
//!
//! The free braided algebra carries one skew derivation per generator on
//! each side; together they induce a bilinear pairing whose radical is
//! exactly the kernel of the braided symmetrizer.  This example walks the
//! adjoint tower (ad x1)^m(x2) of a doubled-bond instance: the right
//! derivation acts by an explicit scalar, the scalar vanishes exactly one
//! step past the truncation exponent, and the pairing sees the same cutoff.
//!
//! Run with `cargo run --example skew_derivations`.

use nichols::braiding::BraidingMatrix;
use nichols::oracle::{
    ad_power, apply_symmetrizer, laurent_rank, pairing, pairing_matrix, q_integer, skew_diff,
    words_of_degree, Side,
};
use nichols::reflection::m_coefficient;
use nichols::scalar::LaurentScalar;

fn main() {
    let q = BraidingMatrix::parse(include_str!("data/b2_generic.txt"))
        .expect("bundled data parses");
    let ctx = q.ctx();
    let one = LaurentScalar::one(ctx);
    let m12 = m_coefficient(&q, 0, 1).expect("the tower truncates") as usize;
    println!("truncation exponent m12 = {m12}");

    for m in 1..=m12 {
        println!("(ad x1)^{m}(x2) = {}", ad_power(&q, 0, 1, m));
    }

    // The right derivation removing x1 acts on the tower by a closed-form
    // scalar built from a q-integer.
    println!("\nright derivation of the tower:");
    for m in 1..=m12 + 1 {
        let coeff = LaurentScalar::from_unit(&q.q(1, 0).inv())
            .mul(&q_integer(&q.q(0, 0).inv(), m))
            .mul(&one.sub(&LaurentScalar::from_unit(
                &q.q(0, 0).pow(m as i64 - 1).mul(q.q(0, 1)).mul(q.q(1, 0)),
            )));
        let lhs = skew_diff(&q, 0, Side::Right, &ad_power(&q, 0, 1, m));
        assert_eq!(lhs, ad_power(&q, 0, 1, m - 1).scale(&coeff));
        println!("  d1((ad x1)^{m}(x2)) = ({coeff}) * (ad x1)^{}(x2)", m - 1);
    }
    println!("the scalar vanishes exactly at m = {}", m12 + 1);

    // Left and right derivations commute.
    let v = ad_power(&q, 0, 1, 2).prepend(1);
    for a in 0..2 {
        for b in 0..2 {
            assert_eq!(
                skew_diff(&q, a, Side::Left, &skew_diff(&q, b, Side::Right, &v)),
                skew_diff(&q, b, Side::Right, &skew_diff(&q, a, Side::Left, &v)),
            );
        }
    }
    println!("\nleft and right derivations commute on x2 * (ad x1)^2(x2): ok");

    // The pairing is nonzero at the truncation exponent; one step further
    // the commutator lies in the symmetrizer kernel and pairs to zero.
    let generator = ad_power(&q, 0, 1, m12);
    println!(
        "\n<(ad x1)^{m12}(x2), (ad x1)^{m12}(x2)> = {}",
        pairing(&q, &generator, &generator)
    );
    let dead = ad_power(&q, 0, 1, m12 + 1);
    assert!(apply_symmetrizer(&q, &dead).is_zero());
    assert!(pairing(&q, &dead, &dead).is_zero());
    println!("(ad x1)^{}(x2) is in the symmetrizer kernel and pairs to zero", m12 + 1);

    // The rank of the pairing matrix on a block equals the graded
    // dimension computed from the symmetrizer.
    let degree = [2usize, 1];
    let words = words_of_degree(&degree);
    let gram = pairing_matrix(&q, &degree);
    println!("\npairing matrix on the {degree:?} block ({} words):", words.len());
    for (row, word) in words.iter().enumerate() {
        let letters: String = word.iter().map(|&l| (b'1' + l as u8) as char).collect();
        let entries: Vec<String> = gram[row].iter().map(|e| e.to_string()).collect();
        println!("  {letters}: [{}]", entries.join(", "));
    }
    let rank = laurent_rank(gram, ctx);
    assert_eq!(rank, nichols::oracle::graded_dimension(&q, &degree));
    println!("rank {rank} = graded dimension of the block");
}
