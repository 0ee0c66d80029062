//! Classify braiding matrices through their generalized Cartan matrices.
//!
//! For each bundled instance this prints the truncation exponents `m_ij`,
//! the Cartan matrix when one exists, and the finite-type verdict with its
//! component labels.
//!
//! Run with `cargo run --example cartan_classification`.

use nichols::braiding::BraidingMatrix;
use nichols::cartan::finite_type;
use nichols::reflection::m_coefficient;

fn main() {
    let bundled = [
        ("a2_generic", include_str!("data/a2_generic.txt")),
        ("b2_generic", include_str!("data/b2_generic.txt")),
        ("g2_generic", include_str!("data/g2_generic.txt")),
        ("a3_generic", include_str!("data/a3_generic.txt")),
        ("a2_third_root", include_str!("data/a2_third_root.txt")),
        ("b2_fourth_root", include_str!("data/b2_fourth_root.txt")),
        ("affine_rank2", include_str!("data/affine_rank2.txt")),
    ];

    for (name, text) in bundled {
        let q = BraidingMatrix::parse(text).expect("bundled data parses");
        let n = q.rank();
        println!("{name} (rank {n})");

        print!("  truncation exponents m_ij:");
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                match m_coefficient(&q, i, j) {
                    Some(m) => print!(" m[{}{}]={m}", i + 1, j + 1),
                    None => print!(" m[{}{}]=?", i + 1, j + 1),
                }
            }
        }
        println!();

        match q.cartan_matrix() {
            None => println!("  no Cartan matrix: some adjoint tower never truncates"),
            Some(c) => {
                println!("  cartan matrix: {}", c.to_string().replace('\n', " "));
                let report = finite_type(&c);
                match (report.finite, report.label()) {
                    (true, Some(label)) => println!("  finite type: yes, {label}"),
                    (true, None) => println!("  finite type: yes"),
                    (false, _) => println!("  finite type: no"),
                }
            }
        }
        println!();
    }
}
