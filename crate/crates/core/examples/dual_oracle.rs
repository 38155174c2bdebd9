//! Dual words supported on a point set versus the failure of that set to
//! impose independent conditions on plane curves, and what the classifier
//! says when the failure is positive.
//!
//! Run with `cargo run --example dual_oracle`.

use hermitian_codes::cli::oracle_instances;
use hermitian_codes::cohomology::{classify_h1_positive, h1_report, kernel_and_h1, ZeroScheme};
use hermitian_codes::geometry::HermitianCurve;

fn main() -> hermitian_codes::Result<()> {
    let q = 3;
    let curve = HermitianCurve::new(q)?;
    let mut agree = 0;
    let instances = oracle_instances(q, 200, 1);
    for (d, a, s) in &instances {
        let (k, h1) = kernel_and_h1(&curve, *d, *a, s)?;
        if k == h1 {
            agree += 1;
        }
    }
    println!("q={q}: kernel dimension = h1 on {agree} of {} seeded instances", instances.len());

    // Three collinear points on a vertical line, d = 1.
    let line = &curve.vertical_lines()[0];
    let s: Vec<usize> = line.affine_points(curve.n_affine())[..3].to_vec();
    let z = ZeroScheme::new(0, &s);
    println!("{:?}", h1_report(&curve, 1, &z)?);
    let (case, divisor) = classify_h1_positive(&curve, 1, &z)?;
    println!("  classified as {case:?} via {divisor:?}");

    // A heavier scheme: the same line together with order 2 at P_inf.
    let z = ZeroScheme::new(2, &line.affine_points(curve.n_affine()));
    let (case, divisor) = classify_h1_positive(&curve, 2, &z)?;
    println!("{:?}\n  classified as {case:?} via {divisor:?}", h1_report(&curve, 2, &z)?);
    Ok(())
}
