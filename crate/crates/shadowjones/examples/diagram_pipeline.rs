//! From a planar link diagram to a shadow: faces become regions with
//! gleams accumulated from the crossing rule, strands become annuli, and
//! crossings become 6j vertices. Includes the Reidemeister-I sanity check:
//! a kink is the unknot with one framing twist.
//!
//! ```bash
//! cargo run --example diagram_pipeline
//! ```

use shadowjones::builders::{diagram_to_shadow, kink_diagram, trefoil_diagram};
use shadowjones::statesum::{framing_factor, jones_symbolic};

fn main() {
    let diagram = trefoil_diagram();
    println!("input diagram JSON:\n{}", diagram.to_json());

    let shadow = diagram_to_shadow(&diagram).unwrap();
    println!("\nresulting shadow:");
    for r in shadow.regions() {
        println!(
            "  region {}: euler {}, gleam {}, boundary {:?}",
            r.id, r.euler, r.gleam, r.boundary
        );
    }
    println!("J_2 = {}", jones_symbolic(&shadow, 2).unwrap());

    // Reidemeister-I kinks pick up exactly one framing twist.
    for (positive, s) in [(true, 1i64), (false, -1)] {
        let kink = diagram_to_shadow(&kink_diagram(positive)).unwrap();
        for d in 2..=4 {
            let j = jones_symbolic(&kink, d).unwrap();
            assert_eq!(j, framing_factor(s, d));
        }
        println!("kink (positive = {positive}): J_d carries the s = {s} framing factor");
    }
}
