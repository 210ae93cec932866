//! Invariants of a trivalent graph: the edges of a tetrahedron in S^3.
//! The result is a genuine rational function (not a Laurent polynomial),
//! proportional to the all-equal quantum 6j-symbol.
//!
//! ```bash
//! cargo run --example tetrahedron_graph
//! ```

use shadowjones::builders::tetrahedron_shadow;
use shadowjones::qalg::{qint_pow, sixj_symmetric, HalfInt};
use shadowjones::statesum::jones_symbolic;

fn main() {
    let shadow = tetrahedron_shadow();
    println!(
        "tetrahedron shadow: {} fins, {} singular arcs, {} vertex",
        shadow.regions().len(),
        shadow.edges().len(),
        shadow.vertices().len()
    );

    for d in 2..=7 {
        let j = jones_symbolic(&shadow, d).unwrap();
        if d % 2 == 0 {
            assert!(j.is_zero());
            println!("d = {d}: no admissible colorings, J_d = 0");
        } else {
            println!("d = {d}: J_d = {j}");
            let k = HalfInt::from_twice(d as i64 - 1);
            let closed = &qint_pow(d as u64, 5).unwrap() * &sixj_symmetric(k).unwrap();
            assert_eq!(j, closed);
            println!("        = [d]^5 * (6j with all entries {k})");
        }
    }
}
