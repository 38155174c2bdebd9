//! Rational points, tangent lines and the parabola census of the Hermitian
//! curve `y^q + y = x^{q+1}`.
//!
//! Run with `cargo run --example curve_geometry -- 4`.

use hermitian_codes::geometry::HermitianCurve;

fn main() -> hermitian_codes::Result<()> {
    let q: u32 = std::env::args().nth(1).map(|s| s.parse().expect("q must be an integer")).unwrap_or(3);
    let curve = HermitianCurve::new(q)?;
    let f = curve.field();
    println!("q={q}: {} affine points plus P_inf", curve.n_affine());
    for (i, p) in curve.points().iter().enumerate().take(4) {
        let t = curve.tangent_line(p)?;
        println!("  point {i} = {p:?}, tangent {:?}, contact order {}", t, curve.contact_order(&t, p)?);
    }
    let lc = curve.classify_lines();
    println!(
        "lines: {} total, {} tangent, {} secant through P_inf, {} other secants",
        lc.all().len(),
        lc.tangents().count(),
        lc.r_inf().count(),
        lc.r().count()
    );
    let secant = lc.r().next().expect("secants exist");
    println!("  e.g. {:?} meets the curve at {:?}", secant.line, secant.points);
    println!("order of the tangent at P_inf along the branch: {}", curve.line_order_at_infinity(&curve.tangent_line(&curve.p_infinity())?));
    println!("parabola census (affine hits -> count): {:?}", curve.parabola_census());
    let rich = curve.parabolas_with_hits(if q % 2 == 1 { 2 * q as usize } else { 2 * q as usize - 1 });
    if let Some((c, pts)) = rich.first() {
        println!("  richest first: {c:?} through {pts:?}, smooth {}", c.is_smooth(f));
    }
    Ok(())
}
