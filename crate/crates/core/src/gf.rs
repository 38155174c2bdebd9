//! Exact arithmetic in small finite fields `F_{p^k}`.
//!
//! Elements are encoded by the integer index of their coefficient vector
//! (residue polynomial modulo the field modulus, base `p`, little-endian).
//! The modulus is always the lexicographically smallest monic irreducible
//! polynomial of the requested degree, with coefficients compared from the
//! constant term upward. That makes the encoding reproducible across runs
//! and across implementations, which the text formats rely on.
//!
//! [`Fq2`] specializes a field of order `q^2` to the pair `(F_q, F_{q^2})`
//! with Frobenius, trace and norm, the two sides of the Hermitian equation.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// Fields up to this order keep a full addition table.
const ADD_TABLE_LIMIT: u32 = 1024;

/// A field element, identified by its index in `[0, p^k)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn index(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Wraps a raw index without checking it against a field.
    #[inline]
    pub(crate) fn raw(index: u32) -> Elem {
        Elem(index)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Binary field operations accepted by [`Field::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Clone, Debug)]
enum Adder {
    Xor,
    Table(Vec<u32>),
    Digits,
}

/// A finite field `F_{p^k}` with log/antilog tables.
#[derive(Clone)]
pub struct Field {
    p: u32,
    k: u32,
    order: u32,
    modulus: Vec<u32>,
    generator: Elem,
    // exp has length 2 * (order - 1) so products never need a reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    adder: Adder,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for Field {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^e` with `p` prime, if possible.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut e = 0;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Dense polynomial helpers over F_p, coefficients low-degree-first.

fn poly_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let dm = m.len() - 1;
    let inv_lead = inv_mod(m[dm], p);
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let factor = (r[r.len() - 1] as u64 * inv_lead as u64 % p as u64) as u32;
        for (i, &c) in m.iter().enumerate() {
            let sub = (factor as u64 * c as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        poly_trim(&mut r);
    }
    r
}

fn poly_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
    poly_rem(&prod, m, p)
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime and small, so Fermat is fine.
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

/// Exhaustive irreducibility test: no monic factor of degree `1..=deg/2`.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for e in 1..=deg / 2 {
        let count = (p as u64).pow(e as u32);
        for n in 0..count {
            let mut cand = digits(n as u32, p, e);
            cand.push(1);
            if poly_rem(poly, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn digits(mut n: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(n % p);
        n /= p;
    }
    out
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Lexicographically smallest monic irreducible of degree `k` over `F_p`,
/// comparing the constant term first. Returned low-degree-first, including
/// the leading 1.
fn smallest_irreducible(p: u32, k: u32) -> Vec<u32> {
    let count = (p as u64).pow(k);
    for n in 0..count {
        // c_0 is the most significant digit of the enumeration counter.
        let mut coeffs = vec![0u32; k as usize + 1];
        let mut rest = n;
        for i in (0..k as usize).rev() {
            coeffs[i] = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        coeffs[k as usize] = 1;
        if is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl Field {
    /// Builds `F_{p^k}` with the canonical modulus.
    pub fn new(p: u64, k: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::params("extension degree must be positive"));
        }
        match p.checked_pow(k) {
            Some(order) if order <= MAX_FIELD_ORDER => {}
            _ => return Err(Error::FieldTooLarge { p, k }),
        }
        let p = p as u32;
        let modulus = smallest_irreducible(p, k);
        Ok(Self::with_modulus(p, k, modulus))
    }

    fn with_modulus(p: u32, k: u32, modulus: Vec<u32>) -> Field {
        let order = p.pow(k);
        let n1 = order - 1;
        let elem_poly = |i: u32| {
            let mut d = digits(i, p, k as usize);
            poly_trim(&mut d);
            d
        };
        let poly_elem = |d: &[u32]| {
            let mut full = d.to_vec();
            full.resize(k as usize, 0);
            undigits(&full, p)
        };
        let pow_poly = |base: &[u32], mut e: u64| {
            let mut result = vec![1u32];
            let mut b = base.to_vec();
            while e > 0 {
                if e & 1 == 1 {
                    result = poly_mulmod(&result, &b, &modulus, p);
                }
                b = poly_mulmod(&b, &b, &modulus, p);
                e >>= 1;
            }
            result
        };

        let factors = distinct_prime_factors(n1 as u64);
        let generator = (1..order)
            .find(|&g| {
                let gp = elem_poly(g);
                factors.iter().all(|&r| pow_poly(&gp, n1 as u64 / r) != vec![1])
            })
            .expect("multiplicative group is cyclic");

        let mut exp = vec![0u32; 2 * n1 as usize];
        let mut log = vec![0u32; order as usize];
        let gp = elem_poly(generator);
        let mut cur = vec![1u32];
        for i in 0..n1 {
            let idx = poly_elem(&cur);
            exp[i as usize] = idx;
            exp[(i + n1) as usize] = idx;
            log[idx as usize] = i;
            cur = poly_mulmod(&cur, &gp, &modulus, p);
        }

        let neg = (0..order)
            .map(|i| {
                let d: Vec<u32> = digits(i, p, k as usize).into_iter().map(|c| (p - c) % p).collect();
                undigits(&d, p)
            })
            .collect();

        let adder = if p == 2 {
            Adder::Xor
        } else if order <= ADD_TABLE_LIMIT {
            let mut table = vec![0u32; (order * order) as usize];
            for a in 0..order {
                let da = digits(a, p, k as usize);
                for b in 0..order {
                    let db = digits(b, p, k as usize);
                    let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                    table[(a * order + b) as usize] = undigits(&s, p);
                }
            }
            Adder::Table(table)
        } else {
            Adder::Digits
        };

        Field { p, k, order, modulus, generator: Elem(generator), exp, log, neg, adder }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Modulus coefficients, constant term first, including the leading 1.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The primitive element used for the log tables.
    pub fn generator(&self) -> Elem {
        self.generator
    }

    /// Validates an index against this field.
    pub fn element(&self, index: u32) -> Result<Elem> {
        if index < self.order {
            Ok(Elem(index))
        } else {
            Err(Error::ForeignElement { index, order: self.order })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.order).map(Elem)
    }

    /// Coefficient vector of `x`, constant term first.
    pub fn coefficients(&self, x: Elem) -> Vec<u32> {
        digits(x.0, self.p, self.k as usize)
    }

    /// Element of the prime field with integer value `n mod p`.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.p as i64) as u32)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.adder {
            Adder::Xor => Elem(a.0 ^ b.0),
            Adder::Table(t) => Elem(t[(a.0 * self.order + b.0) as usize]),
            Adder::Digits => {
                let (mut x, mut y) = (a.0, b.0);
                let mut out = 0;
                let mut place = 1;
                while x > 0 || y > 0 {
                    out += ((x % self.p + y % self.p) % self.p) * place;
                    x /= self.p;
                    y /= self.p;
                    place *= self.p;
                }
                Elem(out)
            }
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        Elem(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    /// Multiplicative inverse; panics on zero. See [`Field::checked_inv`].
    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        assert!(!a.is_zero(), "inverse of zero");
        let n1 = self.order - 1;
        Elem(self.exp[((n1 - self.log[a.0 as usize]) % n1) as usize])
    }

    pub fn checked_inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.inv(a))
        }
    }

    /// Quotient; panics on a zero divisor. See [`Field::arith`].
    #[inline]
    pub fn div(&self, a: Elem, b: Elem) -> Elem {
        self.mul(a, self.inv(b))
    }

    /// `a^e` for any integer exponent, with `x^0 = 1` (including `0^0`).
    pub fn pow(&self, a: Elem, e: i64) -> Result<Elem> {
        if e == 0 {
            return Ok(Elem::ONE);
        }
        if a.is_zero() {
            return if e > 0 { Ok(Elem::ZERO) } else { Err(Error::DivisionByZero) };
        }
        let n1 = (self.order - 1) as i64;
        let l = self.log[a.0 as usize] as i64;
        let idx = (l * e.rem_euclid(n1)).rem_euclid(n1);
        Ok(Elem(self.exp[idx as usize]))
    }

    /// `a^e` for a non-negative exponent.
    #[inline]
    pub fn powu(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let n1 = (self.order - 1) as u64;
        let idx = (self.log[a.0 as usize] as u64 * (e % n1)) % n1;
        Elem(self.exp[idx as usize])
    }

    /// Checked binary operation on raw operands.
    pub fn arith(&self, a: Elem, b: Elem, op: ArithOp) -> Result<Elem> {
        self.element(a.0)?;
        self.element(b.0)?;
        Ok(match op {
            ArithOp::Add => self.add(a, b),
            ArithOp::Sub => self.sub(a, b),
            ArithOp::Mul => self.mul(a, b),
            ArithOp::Div => self.mul(a, self.checked_inv(b)?),
        })
    }

    pub fn sum<I: IntoIterator<Item = Elem>>(&self, it: I) -> Elem {
        it.into_iter().fold(Elem::ZERO, |acc, x| self.add(acc, x))
    }
}

/// The pair `F_q ⊂ F_{q^2}`.
#[derive(Clone, Debug)]
pub struct Fq2 {
    field: Arc<Field>,
    q: u32,
    frob: Vec<Elem>,
    trace: Vec<Elem>,
    norm: Vec<Elem>,
    // fibers[c] lists the y with y^q + y = c, in increasing index order.
    fibers: Vec<Vec<Elem>>,
}

impl Fq2 {
    /// Builds `F_{q^2}` for a prime power `q`.
    pub fn new(q: u64) -> Result<Fq2> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        let field = Field::new(p, 2 * e)?;
        Fq2::from_field(Arc::new(field), q)
    }

    /// Attaches a declared `q` to an existing field of order `q^2`.
    pub fn from_field(field: Arc<Field>, q: u64) -> Result<Fq2> {
        if (field.order() as u64) != q * q {
            return Err(Error::params(format!(
                "field of order {} is not a square extension of a field of order {q}",
                field.order()
            )));
        }
        let q = q as u32;
        let frob: Vec<Elem> = field.elements().map(|x| field.powu(x, q as u64)).collect();
        let trace: Vec<Elem> = field.elements().map(|x| field.add(frob[x.0 as usize], x)).collect();
        let norm: Vec<Elem> = field.elements().map(|x| field.mul(frob[x.0 as usize], x)).collect();
        let mut fibers = vec![Vec::new(); field.order() as usize];
        for y in field.elements() {
            fibers[trace[y.0 as usize].0 as usize].push(y);
        }
        Ok(Fq2 { field, q, frob, trace, norm, fibers })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn frobenius(&self, x: Elem) -> Elem {
        self.frob[x.0 as usize]
    }

    /// `x^q + x`.
    #[inline]
    pub fn trace(&self, x: Elem) -> Elem {
        self.trace[x.0 as usize]
    }

    /// `x^{q+1}`.
    #[inline]
    pub fn norm(&self, x: Elem) -> Elem {
        self.norm[x.0 as usize]
    }

    pub fn frobenius_trace_norm(&self, x: Elem) -> (Elem, Elem, Elem) {
        (self.frobenius(x), self.trace(x), self.norm(x))
    }

    #[inline]
    pub fn in_subfield(&self, x: Elem) -> bool {
        self.frobenius(x) == x
    }

    pub fn subfield_elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.field.elements().filter(move |&x| self.in_subfield(x))
    }

    /// All `y` in `F_{q^2}` with `y^q + y = c`.
    pub fn solve_trace_equation(&self, c: Elem) -> Result<&[Elem]> {
        self.field.element(c.0)?;
        if !self.in_subfield(c) {
            return Err(Error::params(format!("{c} does not lie in the subfield F_{}", self.q)));
        }
        Ok(&self.fibers[c.0 as usize])
    }
}
