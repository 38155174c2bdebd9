//! Removing points to raise the dual distance of `C(d,a)`: the minimal
//! construction, its verification and what goes wrong with one point fewer.
//!
//! Run with `cargo run --release --example improving_sets`.

use hermitian_codes::codes::Budget;
use hermitian_codes::geometry::HermitianCurve;
use hermitian_codes::improve::{improved_report, is_improving, minimal_improving_set};

fn main() -> hermitian_codes::Result<()> {
    let budget = Budget::default();
    for (q, d, a) in [(3, 2, 1), (4, 2, 2), (5, 2, 1), (5, 3, 1)] {
        let curve = HermitianCurve::new(q)?;
        let set = minimal_improving_set(&curve, d, a)?;
        let r = improved_report(&curve, d, a, &set.h, &budget)?;
        println!(
            "q={q} (d,a)=({d},{a}): |H|={} length {} k={} dual distance {:?} (>= {}) consistent {}",
            r.h_size, r.new_length, r.dimension, r.dual_distance, r.dual_distance_bound, r.consistent
        );
        let fewer = &set.h[1..];
        let weaker = improved_report(&curve, d, a, fewer, &budget)?;
        println!(
            "  without point {}: improving {} dual distance {:?} witness {:?}",
            set.h[0],
            is_improving(&curve, d, a, fewer)?,
            weaker.dual_distance,
            weaker.collinear_witness
        );
    }
    Ok(())
}
