//! The normalization check every invariant theory starts with: the
//! 0-framed unknot has J_d = 1 for every color.
//!
//! ```bash
//! cargo run --example unknot_identity
//! ```

use shadowjones::builders::unknot_shadow;
use shadowjones::statesum::{jones_symbolic, state_sum_symbolic};

fn main() {
    let shadow = unknot_shadow();
    println!("shadow: {} region(s), b1 = {}", shadow.regions().len(), shadow.first_betti().unwrap());
    for d in 2..=12 {
        let raw = state_sum_symbolic(&shadow, d).unwrap();
        let jones = jones_symbolic(&shadow, d).unwrap();
        println!(
            "d = {d:>2}: |(P,gl)|_d = {}  ->  J_d = {}",
            raw.value, jones
        );
        assert!(jones.is_one());
    }
    println!("J_d(S^3, unknot) = 1 for all d in [2, 12]");
}
