//! Colored Jones invariants of the left trefoil from two different shadow
//! presentations: the 3-crossing diagram and the collapsed Moebius-core
//! shadow. Homeomorphism invariance makes them agree up to a framing
//! factor, and the example finds the offset empirically.
//!
//! ```bash
//! cargo run --example trefoil_invariants
//! ```

use shadowjones::builders::{trefoil_collapsed_shadow, trefoil_diagram_shadow};
use shadowjones::statesum::{framing_factor, framing_twist, jones_symbolic};

fn main() {
    let collapsed = trefoil_collapsed_shadow();
    let diagram = trefoil_diagram_shadow();
    println!(
        "collapsed: {} regions / {} edges / {} vertices",
        collapsed.regions().len(),
        collapsed.edges().len(),
        collapsed.vertices().len()
    );
    println!(
        "diagram:   {} regions / {} edges / {} vertices",
        diagram.regions().len(),
        diagram.edges().len(),
        diagram.vertices().len()
    );

    for d in 2..=6 {
        println!("J_{d} = {}", jones_symbolic(&collapsed, d).unwrap());
    }

    // Shadow independence: one framing offset relates the presentations.
    let offset = (-8..=8).find(|&s| {
        (2..=4).all(|d| {
            jones_symbolic(&diagram, d).unwrap()
                == &framing_factor(s, d) * &jones_symbolic(&collapsed, d).unwrap()
        })
    });
    println!("framing offset between the presentations: s = {}", offset.unwrap());

    // Framing covariance: twisting multiplies by the framing factor.
    let twisted = framing_twist(&collapsed, 1, -3).unwrap();
    println!(
        "after -3 twists (Seifert framing), J_2 = {}",
        jones_symbolic(&twisted, 2).unwrap()
    );
}
