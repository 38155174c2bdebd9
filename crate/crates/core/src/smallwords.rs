//! Classification of small-weight supports of `C(d,a)^⊥`, `d <= q - 1`.
//!
//! A support `S` of weight `w` with `d+2 <= a+w <= 2d+1` lies on a single
//! line (cases `a`, `b`). For `2d+2 <= a+w <= 3d-1` it may also spread over
//! two lines (cases `c`, `d`) or lie on a smooth conic (case `e`). Every
//! case condition is evaluated with scheme-theoretic intersection degrees
//! against `E ∪ S`, `E = aP_inf`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::codes::{binomial, columns_of, full_support_witness, scan_subsets, Budget};
use crate::cohomology::{candidate_lines, intersection_degree, Divisor, ZeroScheme};
use crate::error::{Error, Result};
use crate::geometry::{Conic, HermitianCurve, Line, LineClass, ProjPoint};
use crate::gf::Elem;
use crate::linalg::{self, Matrix};
use crate::minwords::combinations;
use crate::onepoint;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseTag {
    A,
    B,
    C,
    D,
    E,
    OutsideRange,
    Unclassified,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::A => "a",
            CaseTag::B => "b",
            CaseTag::C => "c",
            CaseTag::D => "d",
            CaseTag::E => "e",
            CaseTag::OutsideRange => "outside_range",
            CaseTag::Unclassified => "unclassified",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseWitness {
    Line(Line),
    LinePair(Line, Line),
    Conic(Conic),
}

/// Primary tag (first in precedence order) plus every tag whose conditions
/// hold, each with the object that realizes it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub tag: CaseTag,
    pub matches: Vec<(CaseTag, CaseWitness)>,
}

impl Classification {
    pub fn tags(&self) -> Vec<CaseTag> {
        self.matches.iter().map(|m| m.0).collect()
    }

    pub fn witness(&self) -> Option<&CaseWitness> {
        self.matches.first().map(|m| &m.1)
    }
}

fn check_params(curve: &HermitianCurve, d: u32, a: u32, s: &[usize]) -> Result<()> {
    let q = curve.q();
    if d == 0 || d >= q || a > d {
        return Err(Error::params(format!("need 0 < d <= q-1 and a <= d, got (d, a) = ({d}, {a}), q = {q}")));
    }
    if let Some(&bad) = s.iter().find(|&&i| i >= curve.n_affine()) {
        return Err(Error::params(format!("point {bad} is not an affine curve point")));
    }
    Ok(())
}

fn line_class(curve: &HermitianCurve, l: &Line) -> LineClass {
    let pts = curve.points_on_line(l);
    if pts.len() == 1 {
        LineClass::Tangent { at: pts[0] }
    } else if l.passes_through_infinity() {
        LineClass::RInf
    } else {
        LineClass::R
    }
}

/// Conics through every point of `s` (all of them when the solution space
/// is small), in canonical order.
fn conics_through(curve: &HermitianCurve, s: &[usize]) -> Vec<Conic> {
    let f = curve.field();
    let rows: Vec<Vec<Elem>> = s
        .iter()
        .map(|&i| {
            let p = curve.point(i);
            let (x, y, z) = (p.x, p.y, p.z);
            vec![f.mul(x, x), f.mul(y, y), f.mul(z, z), f.mul(x, y), f.mul(x, z), f.mul(y, z)]
        })
        .collect();
    let kernel = if rows.is_empty() {
        Matrix::identity(6)
    } else {
        linalg::kernel_from_rref(f, &linalg::rref(f, &Matrix::from_rows(6, &rows).unwrap()))
    };
    let k = kernel.rows();
    if k == 0 || k > 3 {
        return Vec::new();
    }
    let basis = kernel.row_vecs();
    let mut out = Vec::new();
    let total = (f.order() as u64).pow(k as u32);
    for mut n in 1..total {
        let mut coeffs = [Elem::ZERO; 6];
        for b in &basis {
            let c = f.element((n % f.order() as u64) as u32).unwrap();
            n /= f.order() as u64;
            for (x, &y) in coeffs.iter_mut().zip(b) {
                *x = f.add(*x, f.mul(c, y));
            }
        }
        out.push(Conic::new(f, coeffs).unwrap());
    }
    out.sort();
    out.dedup();
    out
}

/// Evaluates every case condition for `S` as a support of `C(d,a)^⊥`.
pub fn classify_support(curve: &HermitianCurve, d: u32, a: u32, s: &[usize]) -> Result<Classification> {
    check_params(curve, d, a, s)?;
    let z = ZeroScheme::new(a, s);
    let w = z.s.len();
    let (du, au) = (d as usize, a as usize);
    if au + w < du + 2 || au + w > 3 * du - 1 {
        return Ok(Classification { tag: CaseTag::OutsideRange, matches: Vec::new() });
    }
    let f = curve.field();
    let pts: Vec<ProjPoint> = z.s.iter().map(|&i| curve.point(i)).collect();
    let mut matches: Vec<(CaseTag, CaseWitness)> = Vec::new();

    let lines = candidate_lines(curve, &z);
    let classes: Vec<LineClass> = lines.iter().map(|l| line_class(curve, l)).collect();
    for (l, cls) in lines.iter().zip(&classes) {
        if !pts.iter().all(|p| l.contains(f, p)) {
            continue;
        }
        match cls {
            LineClass::RInf if w >= du + 1 => matches.push((CaseTag::A, CaseWitness::Line(*l))),
            LineClass::R if w >= du + 2 => matches.push((CaseTag::B, CaseWitness::Line(*l))),
            _ => {}
        }
    }

    if au + w >= 2 * du + 2 {
        let degs: Vec<usize> = lines.iter().map(|l| intersection_degree(curve, &Divisor::Line(*l), &z)).collect();
        let ords: Vec<usize> = lines.iter().map(|l| curve.line_order_at_infinity(l)).collect();
        let mut found_c = None;
        let mut found_d = None;
        for i in 0..lines.len() {
            for j in 0..lines.len() {
                if i == j {
                    continue;
                }
                let e_deg = au.min(ords[i] + ords[j]);
                if e_deg + w < 2 * du + 2 {
                    continue;
                }
                let (ci, cj) = (classes[i], classes[j]);
                let both_r = ci == LineClass::R && cj == LineClass::R;
                let mixed = (ci == LineClass::R && cj == LineClass::RInf) || (ci == LineClass::RInf && cj == LineClass::R);
                let both_inf = ci == LineClass::RInf && cj == LineClass::RInf;
                if found_c.is_none() && degs[i] >= du + 2 && degs[j] >= du + 1 {
                    let w_ok = (both_r && w >= 2 * du + 3) || (mixed && w >= 2 * du + 2) || (both_inf && w >= 2 * du + 1);
                    if w_ok {
                        found_c = Some(CaseWitness::LinePair(lines[i], lines[j]));
                    }
                }
                if found_d.is_none() && degs[i] == du + 1 && degs[j] == du + 1 {
                    let meet = lines[i].meet(f, &lines[j]).ok();
                    let disjoint_on_s = pts.iter().all(|p| !(lines[i].contains(f, p) && lines[j].contains(f, p)));
                    let w_ok = (w == 2 * du && au >= 2 && meet == Some(ProjPoint::infinity()))
                        || (w == 2 * du + 1 && au >= 1 && mixed)
                        || (w == 2 * du + 2 && both_r);
                    if disjoint_on_s && w_ok {
                        found_d = Some(CaseWitness::LinePair(lines[i], lines[j]));
                    }
                }
            }
        }
        if let Some(wit) = found_c {
            matches.push((CaseTag::C, wit));
        }
        if let Some(wit) = found_d {
            matches.push((CaseTag::D, wit));
        }
        if w + au.min(2) >= 2 * du + 2 {
            for t in conics_through(curve, &z.s) {
                if !t.is_smooth(f) {
                    continue;
                }
                let e_deg = au.min(curve.conic_order_at_infinity(&t));
                if e_deg + w >= 2 * du + 2 {
                    matches.push((CaseTag::E, CaseWitness::Conic(t)));
                    break;
                }
            }
        }
    }
    let tag = matches.first().map(|m| m.0).unwrap_or(CaseTag::Unclassified);
    Ok(Classification { tag, matches })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightSweep {
    pub w: usize,
    pub subsets: u64,
    pub genuine_supports: u64,
    pub histogram: BTreeMap<CaseTag, u64>,
    /// Genuine supports matching more than one case.
    pub multi_tag: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub q: u32,
    pub d: u32,
    pub a: u32,
    pub weights: Vec<WeightSweep>,
    pub histogram: BTreeMap<CaseTag, u64>,
    /// Genuine supports that no case explains, or that fall below the range.
    pub counterexamples: Vec<Vec<usize>>,
    pub converse_checked: u64,
    pub converse_failures: Vec<Vec<usize>>,
    pub passed: bool,
}

/// Every set listed in cases `a`/`b` within the single-line range, each of
/// which should support a dual word of weight exactly `w`.
pub fn line_case_sets(curve: &HermitianCurve, d: u32, a: u32) -> Vec<Vec<usize>> {
    let (du, au) = (d as usize, a as usize);
    let n_aff = curve.n_affine();
    let lc = curve.classify_lines();
    let mut out = Vec::new();
    for li in lc.r_inf().chain(lc.r()) {
        let aff = li.affine_points(n_aff);
        let min_w = if li.class == LineClass::RInf { du + 1 } else { du + 2 };
        for w in min_w..=aff.len() {
            if au + w >= du + 2 && au + w <= 2 * du + 1 {
                out.extend(combinations(&aff, w));
            }
        }
    }
    out.sort();
    out
}

/// Scans all `w`-subsets of affine points for `w` in `weights`, keeps those
/// supporting a dual word of full support and classifies them. Also checks
/// that every case `a`/`b` set of the single-line range is a support.
pub fn soundness_sweep(
    curve: &HermitianCurve,
    d: u32,
    a: u32,
    weights: std::ops::RangeInclusive<usize>,
    budget: &Budget,
) -> Result<SweepReport> {
    check_params(curve, d, a, &[])?;
    let n = curve.n_affine();
    let needed: u128 = weights.clone().map(|w| binomial(n as u64, w as u64)).sum();
    budget.check_subsets("soundness sweep", needed)?;
    let code = onepoint::build_code_da(curve, d, a, &[])?;
    let f = curve.field();
    let columns = columns_of(code.generator(), n);
    let mut report = SweepReport {
        q: curve.q(),
        d,
        a,
        weights: Vec::new(),
        histogram: BTreeMap::new(),
        counterexamples: Vec::new(),
        converse_checked: 0,
        converse_failures: Vec::new(),
        passed: true,
    };
    for w in weights {
        let genuine: Vec<Vec<usize>> = scan_subsets(f, &columns, w, |s, dep| {
            if !dep {
                return None;
            }
            let sub = code.generator().select_columns(s);
            let kernel = linalg::kernel_from_rref(f, &linalg::rref(f, &sub));
            match full_support_witness(f, &kernel) {
                Ok(Some(_)) => Some(s.to_vec()),
                _ => None,
            }
        });
        let classes: Vec<Result<Classification>> = genuine.par_iter().map(|s| classify_support(curve, d, a, s)).collect();
        let mut ws = WeightSweep {
            w,
            subsets: binomial(n as u64, w as u64) as u64,
            genuine_supports: genuine.len() as u64,
            histogram: BTreeMap::new(),
            multi_tag: 0,
        };
        for (s, c) in genuine.iter().zip(classes) {
            let c = c?;
            *ws.histogram.entry(c.tag).or_insert(0) += 1;
            *report.histogram.entry(c.tag).or_insert(0) += 1;
            if c.matches.len() > 1 {
                ws.multi_tag += 1;
            }
            let below_range = c.tag == CaseTag::OutsideRange && (a as usize + w) < d as usize + 2;
            if c.tag == CaseTag::Unclassified || below_range {
                report.counterexamples.push(s.clone());
            }
        }
        report.weights.push(ws);
    }
    let sets = line_case_sets(curve, d, a);
    let results: Vec<Result<bool>> =
        sets.par_iter().map(|s| Ok(code.dual_words_supported_within(s)?.witness.is_some())).collect();
    for (s, ok) in sets.iter().zip(results) {
        report.converse_checked += 1;
        if !ok? {
            report.converse_failures.push(s.clone());
        }
    }
    report.passed = report.counterexamples.is_empty() && report.converse_failures.is_empty();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn outside_range_and_errors() {
        let c = HermitianCurve::new(3).unwrap();
        assert_eq!(classify_support(&c, 2, 0, &[0, 1]).unwrap().tag, CaseTag::OutsideRange);
        assert!(classify_support(&c, 3, 0, &[0]).is_err());
        assert!(classify_support(&c, 2, 3, &[0]).is_err());
    }

    #[test]
    fn q4_line_cases() {
        let c = HermitianCurve::new(4).unwrap();
        let lc = c.classify_lines();
        let n = c.n_affine();
        let vertical = lc.r_inf().next().unwrap().affine_points(n);
        let r = classify_support(&c, 2, 1, &vertical[..3]).unwrap();
        assert_eq!(r.tag, CaseTag::A);
        let rline = lc.r().next().unwrap();
        let r = classify_support(&c, 3, 0, &rline.points).unwrap();
        assert_eq!(r.tag, CaseTag::B);
    }

    #[test]
    fn q4_two_vertical_lines() {
        let c = HermitianCurve::new(4).unwrap();
        let n = c.n_affine();
        let v = c.vertical_lines();
        let mut s = v[0].affine_points(n)[..3].to_vec();
        s.extend_from_slice(&v[1].affine_points(n)[..3]);
        let r = classify_support(&c, 3, 2, &s).unwrap();
        assert!(r.tags().contains(&CaseTag::D));
    }

    #[test]
    fn sweep_q3_d2_a0() {
        let c = HermitianCurve::new(3).unwrap();
        let r = soundness_sweep(&c, 2, 0, 1..=4, &Budget::default()).unwrap();
        assert!(r.passed);
        let w4 = r.weights.iter().find(|x| x.w == 4).unwrap();
        assert_eq!(w4.histogram.get(&CaseTag::B), Some(&54));
        assert_eq!(w4.genuine_supports, 54);
    }
}
