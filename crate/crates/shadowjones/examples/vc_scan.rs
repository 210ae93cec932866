//! Volume Conjecture scan for the complexity-1 universal hyperbolic link:
//! a_d = (1/d) log |ev_d(J_d)| climbs monotonically toward
//! 2 Vol_Oct / (2 pi) = (8/pi) Lambda(pi/4) = 1.16624...
//!
//! ```bash
//! cargo run --release --example vc_scan [d_max]
//! ```

use shadowjones::builders::universal_graph_c1;
use shadowjones::builders::universal_shadow;
use shadowjones::statesum::vc_record;
use shadowjones::volume::{vc_sequence, vc_target};

fn main() {
    let d_max: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(201);
    let precision = 128;

    let target = vc_target(1);
    let records = vc_sequence(1, d_max, precision).unwrap();

    // Cross-check the closed-form route against the state-sum engine for
    // small d: two genuinely different evaluation pipelines.
    let shadow = universal_shadow(&universal_graph_c1()).unwrap();
    for r in records.iter().take_while(|r| r.d <= 21) {
        let engine = vc_record(&shadow, r.d, precision).unwrap();
        let diff = (engine.log_mag.unwrap() - r.log_mag.unwrap()).abs();
        assert!(diff < 1e-9, "d={}: routes differ by {diff}", r.d);
    }
    println!("# engine cross-check passed for d <= 21");

    println!("d,status,log_mag,a_d,target,gap");
    for r in &records {
        let a = r.a_d.unwrap();
        println!("{},{},{},{},{},{}", r.d, r.status, r.log_mag.unwrap(), a, target, target - a);
    }
    let last = records.last().unwrap();
    eprintln!(
        "a_{} = {:.6}, target = {:.6}, gap = {:.6}",
        last.d,
        last.a_d.unwrap(),
        target,
        target - last.a_d.unwrap()
    );
}
