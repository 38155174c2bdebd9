//! Arithmetic in F_{q^2} and its subfield F_q: Frobenius, trace, norm and
//! the fibers of the trace map.
//!
//! Run with `cargo run --example field_arithmetic -- 9`.

use hermitian_codes::gf::Fq2;

fn main() -> hermitian_codes::Result<()> {
    let q: u64 = std::env::args().nth(1).map(|s| s.parse().expect("q must be an integer")).unwrap_or(3);
    let fq = Fq2::new(q)?;
    let f = fq.field();
    println!("F_{} = F_{}[t]/({:?}), generator index {}", f.order(), f.characteristic(), f.modulus(), f.generator());
    let g = f.generator();
    for e in [1u64, 2, q, q + 1] {
        let x = f.powu(g, e);
        let (fr, tr, nm) = fq.frobenius_trace_norm(x);
        println!("g^{e:<3} = {x:<4} frob {fr:<4} trace {tr:<4} norm {nm:<4} in F_q: {}", fq.in_subfield(x));
    }
    let sub: Vec<String> = fq.subfield_elements().map(|x| x.to_string()).collect();
    println!("F_q inside F_q^2: {}", sub.join(" "));
    for c in fq.subfield_elements().take(3) {
        let fiber: Vec<String> = fq.solve_trace_equation(c)?.iter().map(|x| x.to_string()).collect();
        println!("trace^-1({c}) = {{{}}}", fiber.join(", "));
    }
    let x = f.powu(g, 5);
    println!("g^5 * g^-5 = {}, g^5 / g^2 = g^3: {}", f.mul(x, f.inv(x)), f.div(x, f.powu(g, 2)) == f.powu(g, 3));
    Ok(())
}
