//! Builds `C_m` two ways, compares the row spaces, checks duality and
//! computes minimum distances against the closed table.
//!
//! Run with `cargo run --release --example one_point_codes`.

use hermitian_codes::codes::{Budget, DistanceStrategy};
use hermitian_codes::geometry::HermitianCurve;
use hermitian_codes::onepoint::{self, CodeSpec};

fn main() -> hermitian_codes::Result<()> {
    let budget = Budget::default();
    let curve = HermitianCurve::new(2)?;
    for m in 1..=onepoint::max_m(2) {
        let code = onepoint::build_code(&curve, m)?;
        let (d, a) = onepoint::m_to_da(2, m)?;
        let designed = onepoint::designed_distance(2, m)?;
        let actual = code.min_distance(DistanceStrategy::Exhaustive, designed as usize, &budget)?;
        let dual_ok = code.dual().same_code(&onepoint::build_code(&curve, onepoint::dual_index(2, m))?)?;
        println!(
            "q=2 m={m} (d,a)=({d},{a}) phase {} k={} designed {designed} computed {actual:?} dual ok {dual_ok}",
            onepoint::phase(2, m)?,
            code.dimension()
        );
    }
    let curve3 = HermitianCurve::new(3)?;
    for (d, a) in [(1, 0), (2, 1), (3, 2), (3, 3)] {
        let monomial = onepoint::build_code(&curve3, onepoint::da_to_m(3, d, a))?;
        let forms = onepoint::build_code_projective(&curve3, d, a)?;
        println!("q=3 (d,a)=({d},{a}): monomial and plane-form codes agree: {}", monomial.same_code(&forms)?);
    }
    let spec: CodeSpec = "q=7 m=53".parse()?;
    if let onepoint::Designation::M(m) = spec.designation {
        let curve7 = HermitianCurve::new(spec.q)?;
        println!("{spec}: {:?}", onepoint::code_params(&curve7, m)?);
    }
    Ok(())
}
