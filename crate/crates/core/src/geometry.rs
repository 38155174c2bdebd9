//! Incidence geometry of `PG(2, q^2)` and the Hermitian curve
//! `y^q z + y z^q = x^{q+1}`.
//!
//! Projective objects are stored in canonical form: the rightmost nonzero
//! coordinate (or coefficient) is 1. Curve points are numbered globally:
//! affine points first, sorted by `(x, y)` element index, then `P_inf` last
//! with index `q^3`. That numbering fixes the coordinate order of every code
//! built in this crate.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Elem, Field, Fq2};

/// Largest `q` accepted by [`HermitianCurve::new`].
pub const MAX_Q: u32 = 16;

fn canonical3(field: &Field, v: [Elem; 3]) -> Option<[Elem; 3]> {
    let last = v.iter().rposition(|e| !e.is_zero())?;
    let inv = field.inv(v[last]);
    Some(v.map(|e| field.mul(e, inv)))
}

/// A point of the projective plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ProjPoint {
    pub x: Elem,
    pub y: Elem,
    pub z: Elem,
}

impl ProjPoint {
    pub fn new(field: &Field, x: Elem, y: Elem, z: Elem) -> Result<ProjPoint> {
        let [x, y, z] = canonical3(field, [x, y, z]).ok_or_else(|| Error::params("(0:0:0) is not a point"))?;
        Ok(ProjPoint { x, y, z })
    }

    pub fn affine(x: Elem, y: Elem) -> ProjPoint {
        ProjPoint { x, y, z: Elem::ONE }
    }

    pub fn infinity() -> ProjPoint {
        ProjPoint { x: Elem::ZERO, y: Elem::ONE, z: Elem::ZERO }
    }

    pub fn coords(&self) -> [Elem; 3] {
        [self.x, self.y, self.z]
    }
}

/// The line `a x + b y + c z = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Line {
    pub a: Elem,
    pub b: Elem,
    pub c: Elem,
}

impl Line {
    pub fn new(field: &Field, a: Elem, b: Elem, c: Elem) -> Result<Line> {
        let [a, b, c] = canonical3(field, [a, b, c]).ok_or_else(|| Error::params("zero line equation"))?;
        Ok(Line { a, b, c })
    }

    pub fn coeffs(&self) -> [Elem; 3] {
        [self.a, self.b, self.c]
    }

    #[inline]
    pub fn eval(&self, field: &Field, p: &ProjPoint) -> Elem {
        field.add(field.add(field.mul(self.a, p.x), field.mul(self.b, p.y)), field.mul(self.c, p.z))
    }

    pub fn contains(&self, field: &Field, p: &ProjPoint) -> bool {
        self.eval(field, p).is_zero()
    }

    /// The unique line through two distinct points.
    pub fn through(field: &Field, p: &ProjPoint, r: &ProjPoint) -> Result<Line> {
        let [a, b, c] = cross(field, p.coords(), r.coords());
        Line::new(field, a, b, c).map_err(|_| Error::params("a line needs two distinct points"))
    }

    /// Intersection point with another line.
    pub fn meet(&self, field: &Field, other: &Line) -> Result<ProjPoint> {
        let [x, y, z] = cross(field, self.coeffs(), other.coeffs());
        ProjPoint::new(field, x, y, z).map_err(|_| Error::params("identical lines have no single meeting point"))
    }

    /// Two distinct points of the line (not canonicalized against each other).
    pub fn two_points(&self, field: &Field) -> (ProjPoint, ProjPoint) {
        let (a, b, c) = (self.a, self.b, self.c);
        let cands = [
            [b, field.neg(a), Elem::ZERO],
            [c, Elem::ZERO, field.neg(a)],
            [Elem::ZERO, c, field.neg(b)],
        ];
        let mut pts: Vec<ProjPoint> = Vec::new();
        for v in cands {
            if let Ok(p) = ProjPoint::new(field, v[0], v[1], v[2]) {
                if !pts.contains(&p) {
                    pts.push(p);
                }
            }
        }
        (pts[0], pts[1])
    }

    pub fn passes_through_infinity(&self) -> bool {
        self.b.is_zero()
    }
}

fn cross(field: &Field, u: [Elem; 3], v: [Elem; 3]) -> [Elem; 3] {
    let m = |a, b| field.mul(a, b);
    [
        field.sub(m(u[1], v[2]), m(u[2], v[1])),
        field.sub(m(u[2], v[0]), m(u[0], v[2])),
        field.sub(m(u[0], v[1]), m(u[1], v[0])),
    ]
}

/// The conic `A x^2 + B y^2 + C z^2 + D xy + E xz + F yz = 0`, coefficients
/// stored in that order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Conic {
    pub coeffs: [Elem; 6],
}

impl Conic {
    pub fn new(field: &Field, coeffs: [Elem; 6]) -> Result<Conic> {
        let last = coeffs.iter().rposition(|e| !e.is_zero()).ok_or_else(|| Error::params("zero conic equation"))?;
        let inv = field.inv(coeffs[last]);
        Ok(Conic { coeffs: coeffs.map(|e| field.mul(e, inv)) })
    }

    /// The affine parabola `y = a x^2 + b x + c`, i.e. `yz = a x^2 + b xz + c z^2`.
    pub fn parabola(field: &Field, a: Elem, b: Elem, c: Elem) -> Result<Conic> {
        Conic::new(field, [a, Elem::ZERO, c, Elem::ZERO, b, field.neg(Elem::ONE)])
    }

    /// The product of two linear forms.
    pub fn line_pair(field: &Field, l: &Line, m: &Line) -> Conic {
        let (a1, b1, c1) = (l.a, l.b, l.c);
        let (a2, b2, c2) = (m.a, m.b, m.c);
        let mul = |x, y| field.mul(x, y);
        let cross_term = |x1, y1, x2, y2| field.add(mul(x1, y2), mul(x2, y1));
        Conic::new(
            field,
            [
                mul(a1, a2),
                mul(b1, b2),
                mul(c1, c2),
                cross_term(a1, b1, a2, b2),
                cross_term(a1, c1, a2, c2),
                cross_term(b1, c1, b2, c2),
            ],
        )
        .expect("product of nonzero forms is nonzero")
    }

    #[inline]
    pub fn eval(&self, field: &Field, p: &ProjPoint) -> Elem {
        let [a, b, c, d, e, f] = self.coeffs;
        let (x, y, z) = (p.x, p.y, p.z);
        let m = |u, v| field.mul(u, v);
        field.sum([
            m(a, m(x, x)),
            m(b, m(y, y)),
            m(c, m(z, z)),
            m(d, m(x, y)),
            m(e, m(x, z)),
            m(f, m(y, z)),
        ])
    }

    pub fn contains(&self, field: &Field, p: &ProjPoint) -> bool {
        self.eval(field, p).is_zero()
    }

    /// Smoothness over the algebraic closure. Odd characteristic uses the
    /// determinant of the symmetric matrix; characteristic 2 evaluates the
    /// conic at the common zero `(F : E : D)` of its partial derivatives.
    pub fn is_smooth(&self, field: &Field) -> bool {
        let [a, b, c, d, e, f] = self.coeffs;
        let m = |u, v| field.mul(u, v);
        if field.characteristic() == 2 {
            if d.is_zero() && e.is_zero() && f.is_zero() {
                return false;
            }
            let inv = field.sum([m(a, m(f, f)), m(b, m(e, e)), m(c, m(d, d)), m(d, m(e, f))]);
            !inv.is_zero()
        } else {
            let two = field.from_int(2);
            let (a2, b2, c2) = (m(two, a), m(two, b), m(two, c));
            // det [[2A, D, E], [D, 2B, F], [E, F, 2C]]
            let t1 = m(a2, field.sub(m(b2, c2), m(f, f)));
            let t2 = m(d, field.sub(m(d, c2), m(f, e)));
            let t3 = m(e, field.sub(m(d, f), m(b2, e)));
            !field.add(field.sub(t1, t2), t3).is_zero()
        }
    }
}

/// Truncated power series in `t`, coefficients low-degree-first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    pub coeffs: Vec<Elem>,
}

impl Series {
    fn zero(n: usize) -> Series {
        Series { coeffs: vec![Elem::ZERO; n] }
    }

    fn monomial(n: usize, k: usize, c: Elem) -> Series {
        let mut s = Series::zero(n);
        if k < n {
            s.coeffs[k] = c;
        }
        s
    }

    fn add(&self, field: &Field, o: &Series) -> Series {
        Series { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(&a, &b)| field.add(a, b)).collect() }
    }

    fn scale(&self, field: &Field, c: Elem) -> Series {
        Series { coeffs: self.coeffs.iter().map(|&a| field.mul(a, c)).collect() }
    }

    fn mul(&self, field: &Field, o: &Series) -> Series {
        let n = self.coeffs.len();
        let mut out = Series::zero(n);
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate().take(n - i) {
                out.coeffs[i + j] = field.add(out.coeffs[i + j], field.mul(a, b));
            }
        }
        out
    }

    fn pow(&self, field: &Field, e: u32) -> Series {
        let mut out = Series::monomial(self.coeffs.len(), 0, Elem::ONE);
        for _ in 0..e {
            out = out.mul(field, self);
        }
        out
    }

    /// Index of the first nonzero coefficient, or the precision if none.
    pub fn order(&self) -> usize {
        self.coeffs.iter().position(|e| !e.is_zero()).unwrap_or(self.coeffs.len())
    }
}

/// The Hermitian curve over `F_{q^2}` with its rational points.
#[derive(Clone, Debug)]
pub struct HermitianCurve {
    fq2: Fq2,
    points: Vec<ProjPoint>,
    // (x, y) element indices -> affine point index, u32::MAX when off-curve.
    lookup: Vec<u32>,
    branch: Series,
}

impl HermitianCurve {
    /// Enumerates all `q^3` affine points by solving `y^q + y = x^{q+1}` per `x`.
    pub fn new(q: u32) -> Result<HermitianCurve> {
        if !(2..=MAX_Q).contains(&q) {
            return Err(Error::params(format!("q = {q} outside the supported range 2..={MAX_Q}")));
        }
        let fq2 = Fq2::new(q as u64)?;
        let field = fq2.field().clone();
        let order = field.order() as usize;
        let mut points = Vec::with_capacity((q as usize).pow(3) + 1);
        let mut lookup = vec![u32::MAX; order * order];
        for x in field.elements() {
            for &y in fq2.solve_trace_equation(fq2.norm(x))? {
                lookup[x.index() as usize * order + y.index() as usize] = points.len() as u32;
                points.push(ProjPoint::affine(x, y));
            }
        }
        points.push(ProjPoint::infinity());
        let branch = branch_at_infinity(&field, q);
        Ok(HermitianCurve { fq2, points, lookup, branch })
    }

    pub fn q(&self) -> u32 {
        self.fq2.q()
    }

    pub fn field(&self) -> &Arc<Field> {
        self.fq2.field()
    }

    pub fn fq2(&self) -> &Fq2 {
        &self.fq2
    }

    /// Number of affine points, `q^3`.
    pub fn n_affine(&self) -> usize {
        self.points.len() - 1
    }

    /// Index of `P_inf` in the global numbering.
    pub fn infinity_index(&self) -> usize {
        self.points.len() - 1
    }

    pub fn p_infinity(&self) -> ProjPoint {
        ProjPoint::infinity()
    }

    /// All rational points, `P_inf` last.
    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn affine_points(&self) -> &[ProjPoint] {
        &self.points[..self.n_affine()]
    }

    pub fn point(&self, i: usize) -> ProjPoint {
        self.points[i]
    }

    pub fn is_on_curve(&self, p: &ProjPoint) -> bool {
        let f = self.field();
        let q = self.q() as u64;
        // y^q z + y z^q - x^{q+1}
        let lhs = f.add(f.mul(f.powu(p.y, q), p.z), f.mul(p.y, f.powu(p.z, q)));
        lhs == f.powu(p.x, q + 1)
    }

    /// Global index of a rational point of the curve.
    pub fn point_index(&self, p: &ProjPoint) -> Option<usize> {
        if p.z.is_zero() {
            return (*p == ProjPoint::infinity()).then(|| self.infinity_index());
        }
        self.affine_index(p.x, p.y)
    }

    #[inline]
    pub fn affine_index(&self, x: Elem, y: Elem) -> Option<usize> {
        let order = self.field().order() as usize;
        match self.lookup[x.index() as usize * order + y.index() as usize] {
            u32::MAX => None,
            i => Some(i as usize),
        }
    }

    /// Tangent line at a rational point: `-x0^q X + Y + y0^q Z = 0` on the
    /// affine chart, `z = 0` at `P_inf`.
    pub fn tangent_line(&self, p: &ProjPoint) -> Result<Line> {
        if !self.is_on_curve(p) {
            return Err(Error::params(format!("{p:?} is not on the curve")));
        }
        let f = self.field();
        if p.z.is_zero() {
            return Line::new(f, Elem::ZERO, Elem::ZERO, Elem::ONE);
        }
        let fr = |e| self.fq2.frobenius(e);
        Line::new(f, f.neg(fr(p.x)), Elem::ONE, fr(p.y))
    }

    /// Indices of the rational points of the curve lying on `line`.
    pub fn points_on_line(&self, line: &Line) -> Vec<usize> {
        let f = self.field();
        if line.b.is_zero() && line.a.is_zero() {
            // z = 0 meets the curve only at P_inf.
            return vec![self.infinity_index()];
        }
        let mut out = Vec::new();
        if !line.b.is_zero() {
            // y = -(a x + c) / b
            let nb_inv = f.neg(f.inv(line.b));
            for x in f.elements() {
                let y = f.mul(nb_inv, f.add(f.mul(line.a, x), line.c));
                if let Some(i) = self.affine_index(x, y) {
                    out.push(i);
                }
            }
        } else {
            // a x + c = 0, a vertical line through P_inf.
            let x = f.neg(f.div(line.c, line.a));
            for y in f.elements() {
                if let Some(i) = self.affine_index(x, y) {
                    out.push(i);
                }
            }
            out.push(self.infinity_index());
        }
        out.sort_unstable();
        out
    }

    /// Local expansion of the restriction of the curve equation to `line`
    /// around `p`: returns the order of vanishing, i.e. the intersection
    /// multiplicity of the line and the curve at `p`.
    pub fn contact_order(&self, line: &Line, p: &ProjPoint) -> Result<usize> {
        let f = self.field();
        if !line.contains(f, p) || !self.is_on_curve(p) {
            return Err(Error::params("point must lie on both the line and the curve"));
        }
        let (u, v) = line.two_points(f);
        let r = if u != *p { u } else { v };
        let q = self.q();
        let n = q as usize + 2;
        // Coordinates along the line: p + s r.
        let lin = |a: Elem, b: Elem| {
            let mut s = Series::zero(n);
            s.coeffs[0] = a;
            s.coeffs[1] = b;
            s
        };
        let (xs, ys, zs) = (lin(p.x, r.x), lin(p.y, r.y), lin(p.z, r.z));
        let yq = ys.pow(f, q);
        let zq = zs.pow(f, q);
        let xq1 = xs.pow(f, q + 1);
        let poly = yq.mul(f, &zs).add(f, &ys.mul(f, &zq)).add(f, &xq1.scale(f, f.neg(Elem::ONE)));
        Ok(poly.order())
    }

    /// Branch of the curve at `P_inf` in the local parameter `t = x/y`:
    /// `z/y = t^{q+1} - t^{q(q+1)} + ...`, truncated at precision `2q+3`.
    pub fn branch_at_infinity(&self) -> &Series {
        &self.branch
    }

    /// Order of vanishing of a line along the branch at `P_inf`, capped at the
    /// series precision.
    pub fn line_order_at_infinity(&self, line: &Line) -> usize {
        let f = self.field();
        let n = self.branch.coeffs.len();
        let t = Series::monomial(n, 1, Elem::ONE);
        let one = Series::monomial(n, 0, Elem::ONE);
        t.scale(f, line.a).add(f, &one.scale(f, line.b)).add(f, &self.branch.scale(f, line.c)).order()
    }

    /// Order of vanishing of a conic along the branch at `P_inf`.
    pub fn conic_order_at_infinity(&self, conic: &Conic) -> usize {
        let f = self.field();
        let n = self.branch.coeffs.len();
        let x = Series::monomial(n, 1, Elem::ONE);
        let y = Series::monomial(n, 0, Elem::ONE);
        let z = &self.branch;
        let [a, b, c, d, e, g] = conic.coeffs;
        let terms = [
            x.mul(f, &x).scale(f, a),
            y.scale(f, b),
            z.mul(f, z).scale(f, c),
            x.scale(f, d),
            x.mul(f, z).scale(f, e),
            z.scale(f, g),
        ];
        terms.iter().skip(1).fold(terms[0].clone(), |acc, s| acc.add(f, s)).order()
    }

    /// Every line of the plane, classified against the curve.
    pub fn classify_lines(&self) -> LineClassification {
        let f = self.field();
        let lines = all_lines(f);
        let infos: Vec<LineInfo> = lines
            .into_par_iter()
            .map(|line| {
                let points = self.points_on_line(&line);
                let class = if points.len() == 1 {
                    LineClass::Tangent { at: points[0] }
                } else if line.passes_through_infinity() {
                    LineClass::RInf
                } else {
                    LineClass::R
                };
                LineInfo { line, class, points }
            })
            .collect();
        let index = infos.iter().enumerate().map(|(i, li)| (li.line, i)).collect();
        LineClassification { n_affine: self.n_affine(), lines: infos, index }
    }

    /// The lines `x = c` through `P_inf`, each with its `q` affine points.
    pub fn vertical_lines(&self) -> Vec<LineInfo> {
        let f = self.field();
        let mut out: Vec<LineInfo> = f
            .elements()
            .map(|c| {
                let line = Line::new(f, Elem::ONE, Elem::ZERO, f.neg(c)).unwrap();
                let points = self.points_on_line(&line);
                LineInfo { line, class: LineClass::RInf, points }
            })
            .collect();
        out.sort_by_key(|li| li.line);
        out
    }

    /// For each `h`, the number of parabolas `y = a x^2 + b x + c` (`a != 0`)
    /// meeting the curve in exactly `h` affine points.
    pub fn parabola_census(&self) -> BTreeMap<usize, u64> {
        let f = self.field();
        let tables = self.parabola_tables();
        let counts: Vec<BTreeMap<usize, u64>> = f
            .elements()
            .skip(1)
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|a| {
                let mut local = BTreeMap::new();
                for b in f.elements() {
                    for c in f.elements() {
                        let h = self.parabola_hits(&tables, a, b, c).count();
                        *local.entry(h).or_insert(0) += 1;
                    }
                }
                local
            })
            .collect();
        let mut total = BTreeMap::new();
        for m in counts {
            for (h, c) in m {
                *total.entry(h).or_insert(0) += c;
            }
        }
        total
    }

    /// Parabolas with exactly `h` affine intersection points, each with its
    /// sorted point indices. Ordered by `(a, b, c)`.
    pub fn parabolas_with_hits(&self, h: usize) -> Vec<(Conic, Vec<usize>)> {
        let f = self.field();
        let tables = self.parabola_tables();
        let per_a: Vec<Vec<(Conic, Vec<usize>)>> = f
            .elements()
            .skip(1)
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|a| {
                let mut out = Vec::new();
                for b in f.elements() {
                    for c in f.elements() {
                        if self.parabola_hits(&tables, a, b, c).count() == h {
                            let mut pts: Vec<usize> = self.parabola_hits(&tables, a, b, c).collect();
                            pts.sort_unstable();
                            out.push((Conic::parabola(f, a, b, c).unwrap(), pts));
                        }
                    }
                }
                out
            })
            .collect();
        per_a.into_iter().flatten().collect()
    }

    fn parabola_tables(&self) -> (Vec<Elem>, Vec<Elem>, Vec<Elem>) {
        let f = self.field();
        let xs: Vec<Elem> = f.elements().collect();
        let sq = xs.iter().map(|&x| f.mul(x, x)).collect();
        let norms = xs.iter().map(|&x| self.fq2.norm(x)).collect();
        (xs, sq, norms)
    }

    fn parabola_hits<'a>(
        &'a self,
        tables: &'a (Vec<Elem>, Vec<Elem>, Vec<Elem>),
        a: Elem,
        b: Elem,
        c: Elem,
    ) -> impl Iterator<Item = usize> + 'a {
        let f = self.field();
        let (xs, sq, norms) = tables;
        xs.iter().enumerate().filter_map(move |(i, &x)| {
            let y = f.add(f.add(f.mul(a, sq[i]), f.mul(b, x)), c);
            if self.fq2.trace(y) == norms[i] {
                self.affine_index(x, y)
            } else {
                None
            }
        })
    }
}

fn branch_at_infinity(field: &Field, q: u32) -> Series {
    // Dehomogenized at y = 1 the curve reads z + z^q = x^{q+1}; iterate
    // z <- t^{q+1} - z^q from z = 0 until it stabilizes.
    let n = 2 * q as usize + 3;
    let lead = Series::monomial(n, q as usize + 1, Elem::ONE);
    let mut z = Series::zero(n);
    loop {
        let next = lead.add(field, &z.pow(field, q).scale(field, field.neg(Elem::ONE)));
        if next == z {
            return z;
        }
        z = next;
    }
}

/// All lines of `PG(2, F)` in canonical form, sorted.
pub fn all_lines(field: &Field) -> Vec<Line> {
    let mut out = Vec::new();
    for a in field.elements() {
        for b in field.elements() {
            out.push(Line { a, b, c: Elem::ONE });
        }
        out.push(Line { a, b: Elem::ONE, c: Elem::ZERO });
    }
    out.push(Line { a: Elem::ONE, b: Elem::ZERO, c: Elem::ZERO });
    out.sort();
    out
}

/// Every conic in canonical form, in coefficient order, restricted to those
/// satisfying `keep`. Work is split over the leading coefficient.
pub fn conics_where<F>(field: &Field, keep: F) -> Vec<Conic>
where
    F: Fn(&Conic) -> bool + Sync,
{
    let order = field.order() as u64;
    let mut out = Vec::new();
    // Position of the normalized (rightmost nonzero) coefficient.
    for last in 0..6usize {
        let free = order.pow(last as u32);
        let chunk: Vec<Conic> = (0..free)
            .into_par_iter()
            .filter_map(|mut n| {
                let mut coeffs = [Elem::ZERO; 6];
                for c in coeffs.iter_mut().take(last) {
                    *c = Elem::raw((n % order) as u32);
                    n /= order;
                }
                coeffs[last] = Elem::ONE;
                let conic = Conic { coeffs };
                keep(&conic).then_some(conic)
            })
            .collect();
        out.extend(chunk);
    }
    out.sort();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LineClass {
    /// Meets the curve in a single rational point.
    Tangent { at: usize },
    /// Through `P_inf`, not tangent.
    RInf,
    /// Not through `P_inf`, not tangent.
    R,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineInfo {
    pub line: Line,
    pub class: LineClass,
    /// Global indices of the rational curve points on the line.
    pub points: Vec<usize>,
}

impl LineInfo {
    /// The points of the line other than `P_inf`.
    pub fn affine_points(&self, n_affine: usize) -> Vec<usize> {
        self.points.iter().copied().filter(|&i| i < n_affine).collect()
    }
}

/// The partition of all lines into tangents, `R(inf)` and `R`.
#[derive(Clone, Debug)]
pub struct LineClassification {
    n_affine: usize,
    lines: Vec<LineInfo>,
    index: HashMap<Line, usize>,
}

impl LineClassification {
    pub fn all(&self) -> &[LineInfo] {
        &self.lines
    }

    pub fn get(&self, line: &Line) -> Option<&LineInfo> {
        self.index.get(line).map(|&i| &self.lines[i])
    }

    pub fn tangents(&self) -> impl Iterator<Item = &LineInfo> {
        self.lines.iter().filter(|l| matches!(l.class, LineClass::Tangent { .. }))
    }

    pub fn r_inf(&self) -> impl Iterator<Item = &LineInfo> {
        self.lines.iter().filter(|l| l.class == LineClass::RInf)
    }

    pub fn r(&self) -> impl Iterator<Item = &LineInfo> {
        self.lines.iter().filter(|l| l.class == LineClass::R)
    }

    pub fn n_affine(&self) -> usize {
        self.n_affine
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_counts() {
        for (q, total) in [(2u32, 9usize), (3, 28), (4, 65)] {
            let c = HermitianCurve::new(q).unwrap();
            assert_eq!(c.points().len(), total);
            assert!(c.points().iter().all(|p| c.is_on_curve(p)));
            assert_eq!(c.point(c.infinity_index()), ProjPoint::infinity());
        }
        assert!(HermitianCurve::new(6).is_err());
        assert!(HermitianCurve::new(17).is_err());
    }

    #[test]
    fn affine_points_are_sorted() {
        let c = HermitianCurve::new(3).unwrap();
        let keys: Vec<_> = c.affine_points().iter().map(|p| (p.x, p.y)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn tangent_at_infinity_is_z_equals_zero() {
        let c = HermitianCurve::new(3).unwrap();
        let t = c.tangent_line(&ProjPoint::infinity()).unwrap();
        assert_eq!(t, Line { a: Elem::ZERO, b: Elem::ZERO, c: Elem::ONE });
        assert_eq!(c.points_on_line(&t), vec![c.infinity_index()]);
        assert_eq!(c.line_order_at_infinity(&t), 4);
    }

    #[test]
    fn tangent_at_origin_meets_only_origin() {
        for q in [2, 3, 4] {
            let c = HermitianCurve::new(q).unwrap();
            let o = ProjPoint::affine(Elem::ZERO, Elem::ZERO);
            let t = c.tangent_line(&o).unwrap();
            let idx = c.point_index(&o).unwrap();
            assert_eq!(c.points_on_line(&t), vec![idx]);
            assert_eq!(c.contact_order(&t, &o).unwrap(), q as usize + 1);
        }
    }

    #[test]
    fn tangent_rejects_off_curve_point() {
        let c = HermitianCurve::new(2).unwrap();
        let off = (0..4u32)
            .flat_map(|x| (0..4u32).map(move |y| ProjPoint::affine(Elem::raw(x), Elem::raw(y))))
            .find(|p| !c.is_on_curve(p))
            .unwrap();
        assert!(c.tangent_line(&off).is_err());
    }

    #[test]
    fn branch_series_at_infinity() {
        let c = HermitianCurve::new(2).unwrap();
        let b = c.branch_at_infinity();
        // z = t^3 - t^6 + ... truncated at precision 7; in characteristic 2 the sign vanishes.
        assert_eq!(b.coeffs.len(), 7);
        assert_eq!(b.coeffs[3], Elem::ONE);
        assert_eq!(b.coeffs[6], Elem::ONE);
        assert_eq!(b.order(), 3);
    }

    #[test]
    fn line_classification_q2() {
        let c = HermitianCurve::new(2).unwrap();
        let lc = c.classify_lines();
        assert_eq!(lc.all().len(), 21);
        assert_eq!(lc.tangents().count(), 9);
        assert_eq!(lc.r_inf().count(), 4);
        assert_eq!(lc.r().count(), 8);
        for li in lc.r_inf().chain(lc.r()) {
            assert_eq!(li.points.len(), 3);
        }
    }

    #[test]
    fn parabola_orders_at_infinity() {
        let c = HermitianCurve::new(3).unwrap();
        let f = c.field();
        let par = Conic::parabola(f, Elem::ONE, Elem::ZERO, Elem::ZERO).unwrap();
        assert_eq!(c.conic_order_at_infinity(&par), 2);
        let vertical = Line::new(f, Elem::ONE, Elem::ZERO, Elem::ZERO).unwrap();
        assert_eq!(c.line_order_at_infinity(&vertical), 1);
        let pair = Conic::line_pair(f, &vertical, &Line::new(f, Elem::ONE, Elem::ZERO, Elem::ONE).unwrap());
        assert_eq!(c.conic_order_at_infinity(&pair), 2);
    }

    #[test]
    fn smoothness_samples() {
        for q in [2, 3] {
            let c = HermitianCurve::new(q).unwrap();
            let f = c.field();
            let par = Conic::parabola(f, Elem::ONE, Elem::ZERO, Elem::ZERO).unwrap();
            assert!(par.is_smooth(f));
            let l = Line::new(f, Elem::ONE, Elem::ZERO, Elem::ZERO).unwrap();
            let m = Line::new(f, Elem::ZERO, Elem::ONE, Elem::ZERO).unwrap();
            assert!(!Conic::line_pair(f, &l, &m).is_smooth(f));
            assert!(!Conic::line_pair(f, &l, &l).is_smooth(f));
        }
    }

    #[test]
    fn census_small_q() {
        let c = HermitianCurve::new(3).unwrap();
        let census = c.parabola_census();
        assert_eq!(census.get(&6), Some(&36));
        assert!(census.keys().all(|&h| h <= 6));
        assert_eq!(census.values().sum::<u64>(), 8 * 81);
        let c2 = HermitianCurve::new(2).unwrap();
        assert!(c2.parabola_census().keys().all(|&h| h < 4));
    }
}
