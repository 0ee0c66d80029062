//! Pseudo-reflections of a braiding matrix.
//!
//! Reflecting at index `i` rewrites the braiding in the basis where the
//! `i`-th generator is replaced by the top of its adjoint tower.  The
//! degree map is an integer pseudo-reflection, and reflecting twice at the
//! same index restores the original matrix.
//!
//! Run with `cargo run --example reflections`.

use nichols::braiding::BraidingMatrix;
use nichols::reflection::{pseudo_reflection, reflect_braiding, reflectable_indices};

fn main() {
    let q = BraidingMatrix::parse(include_str!("data/a2_third_root.txt"))
        .expect("bundled data parses");
    println!("original braiding:\n{}", indent(&q.serialize()));

    let indices = reflectable_indices(&q);
    println!(
        "reflectable indices (1-based): {:?}",
        indices.iter().map(|i| i + 1).collect::<Vec<_>>()
    );

    let map = pseudo_reflection(&q, 0).expect("index 1 is reflectable");
    println!(
        "reflection at index 1: coefficients {:?}, degree map",
        map.coefficients()
    );
    println!("{}", indent(&map.matrix().to_string()));
    for (label, v) in [("e1", vec![1, 0]), ("e2", vec![0, 1]), ("e1+e2", vec![1, 1])] {
        println!("  {label} -> {:?}", map.apply(&v));
    }

    let image = reflect_braiding(&q, 0).expect("index 1 is reflectable");
    println!("reflected braiding:\n{}", indent(&image.serialize()));

    let back = reflect_braiding(&image, 0).expect("reflecting back is defined");
    assert_eq!(back.serialize(), q.serialize());
    println!("reflecting again at index 1 restores the original: ok");

    // An instance where no reflection is defined: q12*q21 = t^2 is never a
    // nonpositive power of q11 = t, and q11 has infinite order.
    let blocked = BraidingMatrix::parse(
        "rank 2\nparams t\nentry 1 1 t\nentry 1 2 t^2\nentry 2 1 1\nentry 2 2 t",
    )
    .unwrap();
    match reflect_braiding(&blocked, 0) {
        Ok(_) => unreachable!("this tower never truncates"),
        Err(e) => println!("blocked instance: {e}"),
    }
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("  {l}\n")).collect()
}
