//! Classifies every small-weight support of `C(d,a)^⊥` by the line or conic
//! that carries it.
//!
//! Run with `cargo run --release --example small_weight_supports`.

use hermitian_codes::codes::Budget;
use hermitian_codes::geometry::HermitianCurve;
use hermitian_codes::smallwords::{classify_support, soundness_sweep};

fn main() -> hermitian_codes::Result<()> {
    let budget = Budget::default();
    let curve = HermitianCurve::new(3)?;
    for (d, a) in [(1, 0), (1, 1), (2, 0), (2, 1), (2, 2)] {
        let w_max = (3 * d - 1 - a) as usize;
        let r = soundness_sweep(&curve, d, a, 1..=w_max, &budget)?;
        println!(
            "q=3 (d,a)=({d},{a}) w<={w_max}: tags {:?}, unexplained {}, converse {}/{}",
            r.histogram,
            r.counterexamples.len(),
            r.converse_checked as usize - r.converse_failures.len(),
            r.converse_checked
        );
    }
    let curve4 = HermitianCurve::new(4)?;
    let line = curve4.classify_lines().r().next().expect("secants exist").clone();
    let pts = line.affine_points(curve4.n_affine());
    let c = classify_support(&curve4, 3, 1, &pts)?;
    println!("q=4 (d,a)=(3,1), {} points on {:?}: {} {:?}", pts.len(), line.line, c.tag, c.tags());
    Ok(())
}
