//! The Lobachevsky function and the hyperbolic-volume targets: series vs
//! quadrature, the ideal octahedron volume, and the concave combination
//! L(alpha, beta) whose maximum pins the scan limit.
//!
//! ```bash
//! cargo run --example lobachevsky
//! ```

use shadowjones::volume::{
    l_alpha_beta, lobachevsky, lobachevsky_quadrature, vc_target, vol_oct, LobParams,
};

fn main() {
    let params = LobParams::default();
    let pi = std::f64::consts::PI;

    println!("x, Lambda(x) [series], Lambda(x) [quadrature]");
    for i in 1..=8 {
        let x = i as f64 * pi / 16.0;
        let s = lobachevsky(x, &params).unwrap();
        let q = lobachevsky_quadrature(x, 1e-13);
        println!("{x:.6}, {s:.12}, {q:.12}");
    }

    println!("\nVol_Oct = 8 Lambda(pi/4) = {:.9}", vol_oct());
    for c in 1..=3 {
        println!("VC target for complexity {c}: {:.6}", vc_target(c));
    }

    // Max of Lambda(a) + Lambda(pi/2 - a) sits at a = pi/4.
    let best = (1..200)
        .map(|i| i as f64 * pi / 400.0)
        .map(|a| (a, l_alpha_beta(a, 0.0)))
        .max_by(|x, y| x.1.total_cmp(&y.1))
        .unwrap();
    println!(
        "\nargmax of L(alpha, 0) on a grid: alpha = {:.4} (pi/4 = {:.4}), value {:.9}",
        best.0,
        pi / 4.0,
        best.1
    );
    println!("2 Lambda(pi/4) = {:.9}", 2.0 * lobachevsky(pi / 4.0, &params).unwrap());
}
