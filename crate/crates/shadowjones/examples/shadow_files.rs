//! The shadow file format: half-integers serialized as doubled integers,
//! validation on load, and the diagnostics a malformed shadow produces.
//!
//! ```bash
//! cargo run --example shadow_files
//! ```

use shadowjones::builders::tetrahedron_shadow;
use shadowjones::shadow::ShadowPolyhedron;

fn main() {
    let shadow = tetrahedron_shadow();
    let json = shadow.to_json();
    println!("serialized shadow:\n{json}\n");

    let reloaded = ShadowPolyhedron::from_json(&json).unwrap();
    assert_eq!(reloaded.to_json(), json);
    println!("roundtrip ok; b1 = {}", reloaded.first_betti().unwrap());

    // A vertex whose slot triple disagrees with its incident edge is
    // rejected with a diagnostic naming the offending element.
    let corrupt = json.replace("\"slots\": [\n        0,", "\"slots\": [\n        1,");
    match ShadowPolyhedron::from_json(&corrupt) {
        Err(e) => println!("\ncorrupted file rejected:\n{e}"),
        Ok(_) => panic!("corrupt shadow must not load"),
    }
}
