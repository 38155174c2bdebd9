//! Hermitian one-point codes `C_m` and `C(d, a, H)`.
//!
//! `C_m` evaluates the monomials `x^i y^j` with `0 <= j <= q-1` and pole order
//! `iq + j(q+1) <= m` at the `q^3` affine points. Writing
//! `m = d(q+1) - a` with `0 <= a <= q` gives the same code as the evaluation
//! of degree-`d` plane forms vanishing to order `a` at `P_inf` along the
//! curve; [`build_code_projective`] builds that second presentation
//! independently so the two can be compared.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::geometry::HermitianCurve;
use crate::gf::Elem;
use crate::linalg::Matrix;

/// Largest `m` for which `C_m` is not the whole space: `q^3 + q^2 - q - 2`.
pub fn max_m(q: u32) -> i64 {
    let q = q as i64;
    q * q * q + q * q - q - 2
}

/// `m_perp = q^3 + q^2 - q - 2 - m`; `C_m^⊥ = C_{m_perp}`.
pub fn dual_index(q: u32, m: i64) -> i64 {
    max_m(q) - m
}

/// The unique `(d, a)` with `m = d(q+1) - a` and `0 <= a <= q`.
pub fn m_to_da(q: u32, m: i64) -> Result<(u32, u32)> {
    if m <= 0 {
        return Err(Error::params(format!("m = {m} must be positive")));
    }
    let s = q as i64 + 1;
    let d = (m + s - 1) / s;
    let a = d * s - m;
    Ok((d as u32, a as u32))
}

pub fn da_to_m(q: u32, d: u32, a: u32) -> i64 {
    d as i64 * (q as i64 + 1) - a as i64
}

/// Replaces `(d, a)` with `a > d` by `(d - 1, 0)`; pairs with `a <= d` are
/// returned unchanged.
pub fn reduce_da(q: u32, d: u32, a: u32) -> Result<(u32, u32)> {
    if a > q {
        return Err(Error::params(format!("a = {a} exceeds q = {q}")));
    }
    if a <= d {
        return Ok((d, a));
    }
    if d <= 1 {
        return Err(Error::params(format!("(d, a) = ({d}, {a}) with a > d needs d > 1")));
    }
    Ok((d - 1, 0))
}

/// Exponent pairs `(i, j)` of the basis of `L(m P_inf)`, sorted by pole
/// order `iq + j(q+1)`. `m = 0` gives the constants.
pub fn monomial_basis(q: u32, m: i64) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    if m < 0 {
        return out;
    }
    let (qi, q1) = (q as i64, q as i64 + 1);
    for j in 0..q {
        let mut i = 0i64;
        while i * qi + j as i64 * q1 <= m {
            out.push((i as u32, j));
            i += 1;
        }
    }
    out.sort_by_key(|&(i, j)| (i as i64 * qi + j as i64 * q1, j));
    out
}

/// Minimum distance of `C_m` from the five-phase closed formula.
pub fn designed_distance(q: u32, m: i64) -> Result<u64> {
    if m <= 0 || m > max_m(q) {
        return Err(Error::params(format!("m = {m} outside 1..={}", max_m(q))));
    }
    let qq = q as i64;
    let n = qq * qq * qq;
    let d = if m < qq * qq - qq {
        let (alpha, beta) = (m / qq, m % qq);
        if m < qq || alpha <= beta {
            n - alpha * (qq + 1)
        } else {
            n - beta - alpha * qq
        }
    } else if m < n - qq * qq {
        n - m
    } else if m < n {
        let r = m - (n - qq * qq);
        let (a, b) = (r / qq, r % qq);
        if a < b {
            n - m
        } else {
            n - m + b
        }
    } else {
        let mp = dual_index(q, m);
        let (alpha, beta) = (mp / qq, mp % qq);
        if mp < qq || alpha <= beta {
            alpha + 2
        } else {
            alpha + 1
        }
    };
    Ok(d as u64)
}

/// Table phase (1 to 5) of `m`.
pub fn phase(q: u32, m: i64) -> Result<u8> {
    if m <= 0 || m > max_m(q) {
        return Err(Error::params(format!("m = {m} outside 1..={}", max_m(q))));
    }
    let qq = q as i64;
    let n = qq * qq * qq;
    Ok(if m < qq * qq - qq {
        1
    } else if m < n - qq * qq {
        2
    } else if m < n {
        let r = m - (n - qq * qq);
        if r / qq < r % qq {
            3
        } else {
            4
        }
    } else {
        5
    })
}

// powers[e][p] = coordinate^e at affine point p.
fn power_table(curve: &HermitianCurve, max_e: u32, coord: impl Fn(usize) -> Elem) -> Vec<Vec<Elem>> {
    let f = curve.field();
    let n = curve.n_affine();
    let mut t = vec![vec![Elem::ONE; n]];
    for e in 1..=max_e as usize {
        let row = (0..n).map(|p| f.mul(t[e - 1][p], coord(p))).collect();
        t.push(row);
    }
    t
}

fn evaluate_monomials(curve: &HermitianCurve, monos: &[(u32, u32)]) -> Matrix {
    let f = curve.field();
    let n = curve.n_affine();
    let max_i = monos.iter().map(|m| m.0).max().unwrap_or(0);
    let max_j = monos.iter().map(|m| m.1).max().unwrap_or(0);
    let pts = curve.affine_points();
    let xp = power_table(curve, max_i, |p| pts[p].x);
    let yp = power_table(curve, max_j, |p| pts[p].y);
    let mut data = Vec::with_capacity(monos.len() * n);
    for &(i, j) in monos {
        data.extend((0..n).map(|p| f.mul(xp[i as usize][p], yp[j as usize][p])));
    }
    Matrix::new(monos.len(), n, data).expect("sized above")
}

/// `C_m` on all affine points. Rows are the evaluations of
/// [`monomial_basis`]; for `m >= q^3` dependent rows are dropped.
pub fn build_code(curve: &HermitianCurve, m: i64) -> Result<LinearCode> {
    let q = curve.q();
    if m < 0 || m > max_m(q) {
        return Err(Error::params(format!("m = {m} outside 0..={}", max_m(q))));
    }
    let basis = monomial_basis(q, m);
    let g = evaluate_monomials(curve, &basis);
    let labels = curve.affine_points().to_vec();
    let code = LinearCode::from_spanning(curve.field().clone(), &g, labels)?;
    if (m as u64) < curve.n_affine() as u64 && code.dimension() != basis.len() {
        return Err(Error::params(format!(
            "evaluation matrix of C_{m} has rank {} below {}",
            code.dimension(),
            basis.len()
        )));
    }
    Ok(code)
}

/// `C(d, a, H)`: `C_{d(q+1)-a}` punctured at the affine point indices `h`.
pub fn build_code_da(curve: &HermitianCurve, d: u32, a: u32, h: &[usize]) -> Result<LinearCode> {
    let q = curve.q();
    if d == 0 || a > q {
        return Err(Error::params(format!("(d, a) = ({d}, {a}) needs d > 0 and a <= q")));
    }
    if let Some(&bad) = h.iter().find(|&&i| i >= curve.n_affine()) {
        return Err(Error::params(format!("removed point {bad} is not an affine curve point")));
    }
    let code = build_code(curve, da_to_m(q, d, a))?;
    if h.is_empty() {
        Ok(code)
    } else {
        code.puncture(h)
    }
}

/// Degree-`d` monomials `x^i y^j z^k` minus those `x^i y^{d-i}` with
/// `i < min(a, d+1)`, i.e. the forms whose restriction to the branch at
/// `P_inf` vanishes to order `a`. Returned as `(i, j, k)`.
pub fn projective_monomials(d: u32, a: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for i in 0..=d {
        for j in 0..=d - i {
            let k = d - i - j;
            if k == 0 && i < a.min(d + 1) {
                continue;
            }
            out.push((i, j, k));
        }
    }
    out
}

/// `C(d, a)` from plane forms of degree `d` vanishing to order `a` at `P_inf`,
/// evaluated at `(x : y : 1)`.
pub fn build_code_projective(curve: &HermitianCurve, d: u32, a: u32) -> Result<LinearCode> {
    let q = curve.q();
    if d == 0 || d > q || a > q {
        return Err(Error::params(format!("(d, a) = ({d}, {a}) needs 0 < d <= q and a <= q")));
    }
    let monos: Vec<(u32, u32)> = projective_monomials(d, a).into_iter().map(|(i, j, _)| (i, j)).collect();
    let g = evaluate_monomials(curve, &monos);
    LinearCode::from_spanning(curve.field().clone(), &g, curve.affine_points().to_vec())
}

/// A code designation: either `m` or `(d, a, H)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Designation {
    M(i64),
    Da { d: u32, a: u32, h: Vec<usize> },
}

/// `q` plus a designation, parsed from strings like `q=7 m=53` or
/// `q=7 d=7 a=3 H=1,5,9`. A `H=@path` value is kept as a path for the
/// caller to resolve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSpec {
    pub q: u32,
    pub designation: Designation,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_file: Option<String>,
}

impl CodeSpec {
    pub fn m(&self) -> i64 {
        match &self.designation {
            Designation::M(m) => *m,
            Designation::Da { d, a, .. } => da_to_m(self.q, *d, *a),
        }
    }

    pub fn removed(&self) -> &[usize] {
        match &self.designation {
            Designation::M(_) => &[],
            Designation::Da { h, .. } => h,
        }
    }

    pub fn build(&self, curve: &HermitianCurve) -> Result<LinearCode> {
        if curve.q() != self.q {
            return Err(Error::params(format!("spec has q = {} but the curve has q = {}", self.q, curve.q())));
        }
        match &self.designation {
            Designation::M(m) => build_code(curve, *m),
            Designation::Da { d, a, h } => build_code_da(curve, *d, *a, h),
        }
    }
}

impl FromStr for CodeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<CodeSpec> {
        let mut q = None;
        let (mut m, mut d, mut a) = (None, None, None);
        let mut h = Vec::new();
        let mut h_file = None;
        for tok in s.split_whitespace() {
            let (k, v) = tok.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value, got {tok:?}")))?;
            let int = |v: &str| v.parse::<i64>().map_err(|_| Error::Parse(format!("{k}: not an integer: {v:?}")));
            match k {
                "q" => q = Some(int(v)?),
                "m" => m = Some(int(v)?),
                "d" => d = Some(int(v)?),
                "a" => a = Some(int(v)?),
                "H" | "h" => {
                    if let Some(path) = v.strip_prefix('@') {
                        h_file = Some(path.to_string());
                    } else if !v.is_empty() {
                        for part in v.split(',') {
                            h.push(part.parse::<usize>().map_err(|_| Error::Parse(format!("bad point index {part:?}")))?);
                        }
                    }
                }
                _ => return Err(Error::Parse(format!("unknown key {k:?}"))),
            }
        }
        let q = q.ok_or_else(|| Error::Parse("missing q".into()))?;
        let q = u32::try_from(q).map_err(|_| Error::Parse(format!("bad q {q}")))?;
        let designation = match (m, d, a) {
            (Some(m), None, None) if h.is_empty() && h_file.is_none() => Designation::M(m),
            (None, Some(d), Some(a)) if d > 0 && (0..=q as i64).contains(&a) => {
                h.sort_unstable();
                h.dedup();
                Designation::Da { d: d as u32, a: a as u32, h }
            }
            _ => return Err(Error::Parse(format!("need either m or d and a (0 <= a <= q, d > 0): {s:?}"))),
        };
        Ok(CodeSpec { q, designation, h_file })
    }
}

impl fmt::Display for CodeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.designation {
            Designation::M(m) => write!(f, "q={} m={m}", self.q),
            Designation::Da { d, a, h } => {
                write!(f, "q={} d={d} a={a}", self.q)?;
                if let Some(path) = &self.h_file {
                    write!(f, " H=@{path}")
                } else if !h.is_empty() {
                    let parts: Vec<String> = h.iter().map(|i| i.to_string()).collect();
                    write!(f, " H={}", parts.join(","))
                } else {
                    Ok(())
                }
            }
        }
    }
}

/// Summary of `C_m` used by reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeParams {
    pub q: u32,
    pub m: i64,
    pub d: u32,
    pub a: u32,
    pub n: usize,
    pub k: usize,
    pub phase: u8,
    pub designed_distance: u64,
    pub dual_index: i64,
    pub dual_designed_distance: Option<u64>,
}

/// Parameters of `C_m` and its dual, computing `k` by rank.
pub fn code_params(curve: &HermitianCurve, m: i64) -> Result<CodeParams> {
    let q = curve.q();
    let (d, a) = m_to_da(q, m)?;
    let code = build_code(curve, m)?;
    let mp = dual_index(q, m);
    Ok(CodeParams {
        q,
        m,
        d,
        a,
        n: code.length(),
        k: code.dimension(),
        phase: phase(q, m)?,
        designed_distance: designed_distance(q, m)?,
        dual_index: mp,
        dual_designed_distance: if mp > 0 { Some(designed_distance(q, mp)?) } else { None },
    })
}
