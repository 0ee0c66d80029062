//! Graded dimensions from braided symmetrizers, and the root data they
//! imply.
//!
//! The dimension of each multidegree component is the rank of the braided
//! symmetrizer on that block, computed exactly over Laurent polynomials
//! with cyclotomic coefficients.  `pbw_infer` then factors the dimension
//! table into a product over restricted-PBW generators, each with a degree
//! and a height.
//!
//! Run with `cargo run --example hilbert_series`.

use nichols::braiding::BraidingMatrix;
use nichols::oracle::{hilbert_data, pbw_infer, symmetrizer_block, HeightBound};

fn show(name: &str, text: &str, max_total: usize) {
    let q = BraidingMatrix::parse(text).expect("bundled data parses");
    let dims = hilbert_data(&q, max_total);
    println!("{name}: nonzero graded dimensions up to total degree {max_total}:");
    for (d, n) in &dims {
        if *n > 0 {
            println!("  {d:?}: {n}");
        }
    }
    match pbw_infer(&dims, max_total) {
        Err(e) => println!("  inference stopped: {e}"),
        Ok(report) => {
            println!("  inferred generators:");
            for r in &report.roots {
                let h = match r.height {
                    HeightBound::Finite(h) => format!("height {h}"),
                    HeightBound::AtLeast(h) => format!("height >= {h}"),
                };
                println!("    {:?}: {h}", r.degree);
            }
            match report.total_dimension() {
                Some(total) => println!("  total dimension: {total}"),
                None => println!("  total dimension: unbounded within this degree range"),
            }
        }
    }
    println!();
}

fn main() {
    show("rank1_minus_one", include_str!("data/rank1_minus_one.txt"), 4);
    show("a2_third_root", include_str!("data/a2_third_root.txt"), 8);
    show("b2_fourth_root", include_str!("data/b2_fourth_root.txt"), 8);
    // An infinite-dimensional instance: every height stays open no matter
    // the cutoff, so the total dimension never resolves.
    show("affine_rank2", include_str!("data/affine_rank2.txt"), 5);

    // The machinery underneath: one symmetrizer block, explicitly.
    let q = BraidingMatrix::parse(include_str!("data/a2_third_root.txt")).unwrap();
    let block = symmetrizer_block(&q, &[2, 1]);
    println!(
        "the (2,1) block of a2_third_root acts on {} words:",
        block.words.len()
    );
    for (row, word) in block.words.iter().enumerate() {
        let letters: String = word.iter().map(|&l| (b'1' + l as u8) as char).collect();
        let entries: Vec<String> = block.matrix[row].iter().map(|e| e.to_string()).collect();
        println!("  {letters}: [{}]", entries.join(", "));
    }
}
