//! Improving sets: affine points whose removal raises the minimum distance
//! of `C(d,a)^⊥` above `d + 1`.
//!
//! The dual distance of the punctured code stays `d + 1` exactly when some
//! line through `P_inf` keeps `d + 1` of the remaining points, so a set is
//! improving iff every vertical line retains at most `d` points.

use serde::{Deserialize, Serialize};

use crate::codes::{Budget, Distance, DistanceStrategy};
use crate::error::{Error, Result};
use crate::geometry::{HermitianCurve, Line};
use crate::onepoint;

fn check_range(q: u32, d: u32, a: u32) -> Result<()> {
    if d == 0 || d >= q {
        return Err(Error::params(format!("improving sets need 0 < d < q, got d = {d}, q = {q}")));
    }
    if a == 0 || a > d {
        return Err(Error::params(format!("improving sets need 1 <= a <= d, got a = {a}")));
    }
    Ok(())
}

fn removed_mask(curve: &HermitianCurve, h: &[usize]) -> Result<Vec<bool>> {
    let mut mask = vec![false; curve.n_affine()];
    for &i in h {
        if i >= curve.n_affine() {
            return Err(Error::params(format!("point {i} is not an affine curve point")));
        }
        mask[i] = true;
    }
    Ok(mask)
}

/// First vertical line keeping at least `d + 1` points outside `h`, with
/// the `d + 1` smallest of them.
pub fn violating_line(curve: &HermitianCurve, d: u32, h: &[usize]) -> Result<Option<(Line, Vec<usize>)>> {
    let mask = removed_mask(curve, h)?;
    let n_aff = curve.n_affine();
    for li in curve.vertical_lines() {
        let kept: Vec<usize> = li.affine_points(n_aff).into_iter().filter(|&i| !mask[i]).collect();
        if kept.len() > d as usize {
            return Ok(Some((li.line, kept[..=d as usize].to_vec())));
        }
    }
    Ok(None)
}

pub fn is_improving(curve: &HermitianCurve, d: u32, a: u32, h: &[usize]) -> Result<bool> {
    check_range(curve.q(), d, a)?;
    Ok(violating_line(curve, d, h)?.is_none())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineRemoval {
    pub line: Line,
    pub removed: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImprovingSet {
    pub q: u32,
    pub d: u32,
    pub a: u32,
    #[serde(rename = "H")]
    pub h: Vec<usize>,
    pub per_line_removal: Vec<LineRemoval>,
}

/// Removes the `q - d` smallest points of every vertical line. The lines
/// partition the affine points, so `|H| = q^2 (q - d)`.
pub fn minimal_improving_set(curve: &HermitianCurve, d: u32, a: u32) -> Result<ImprovingSet> {
    let q = curve.q();
    check_range(q, d, a)?;
    let n_aff = curve.n_affine();
    let mut h = Vec::new();
    let mut per_line_removal = Vec::new();
    for li in curve.vertical_lines() {
        let removed = li.affine_points(n_aff)[..(q - d) as usize].to_vec();
        h.extend_from_slice(&removed);
        per_line_removal.push(LineRemoval { line: li.line, removed });
    }
    h.sort_unstable();
    Ok(ImprovingSet { q, d, a, h, per_line_removal })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImprovedReport {
    pub q: u32,
    pub d: u32,
    pub a: u32,
    #[serde(rename = "H_size")]
    pub h_size: usize,
    pub new_length: usize,
    pub dimension: usize,
    pub is_improving: bool,
    /// Support search of the punctured dual up to weight `d + 1`.
    pub dual_distance: Distance,
    /// Proven lower bound on the punctured dual distance.
    pub dual_distance_bound: usize,
    /// For non-improving sets: the collinear `d + 1` points (original
    /// indices) and whether they support a dual word of the punctured code.
    pub collinear_witness: Option<Vec<usize>>,
    pub collinear_witness_verified: Option<bool>,
    pub consistent: bool,
}

/// Punctures `C(d,a)` at `h` and searches its dual for words of weight
/// `<= d + 1`.
pub fn improved_report(curve: &HermitianCurve, d: u32, a: u32, h: &[usize], budget: &Budget) -> Result<ImprovedReport> {
    check_range(curve.q(), d, a)?;
    let mut h = h.to_vec();
    h.sort_unstable();
    h.dedup();
    let improving = is_improving(curve, d, a, &h)?;
    let code = onepoint::build_code_da(curve, d, a, &h)?;
    let dual = code.dual();
    let bound = d as usize + 1;
    let dual_distance = dual.min_distance(DistanceStrategy::SupportSearch, bound, budget)?;
    let dual_distance_bound = match dual_distance {
        Distance::Exact(w) => w,
        Distance::Exceeds(b) => b + 1,
    };
    let (mut collinear_witness, mut collinear_witness_verified) = (None, None);
    if let Some((_, pts)) = violating_line(curve, d, &h)? {
        // Position of each kept point in the punctured coordinate order.
        let mask = removed_mask(curve, &h)?;
        let mut pos = vec![usize::MAX; curve.n_affine()];
        let mut next = 0;
        for (i, p) in pos.iter_mut().enumerate() {
            if !mask[i] {
                *p = next;
                next += 1;
            }
        }
        let local: Vec<usize> = pts.iter().map(|&i| pos[i]).collect();
        let w = code.dual_words_supported_within(&local)?;
        collinear_witness_verified = Some(w.witness.is_some());
        collinear_witness = Some(pts);
    }
    let consistent = match dual_distance {
        Distance::Exact(w) => w == bound && !improving && collinear_witness_verified == Some(true),
        Distance::Exceeds(_) => improving,
    };
    Ok(ImprovedReport {
        q: curve.q(),
        d,
        a,
        h_size: h.len(),
        new_length: code.length(),
        dimension: code.dimension(),
        is_improving: improving,
        dual_distance,
        dual_distance_bound,
        collinear_witness,
        collinear_witness_verified,
        consistent,
    })
}
