//! Exact arithmetic in GF(p^r) over a polynomial basis.
//!
//! An element is stored packed: the coefficient of `x^i` in its
//! polynomial-basis representation is the i-th base-`p` digit of the
//! packed integer. So for GF(4) = GF(2)[x]/(x^2+x+1), the element `x`
//! is index 2 and `x + 1` is index 3. Fields with at most 2^16 elements
//! carry exp/log tables against the designated generator; larger fields
//! fall back to schoolbook multiplication modulo the defining polynomial.
//!
//! Default moduli come from the Conway polynomial table (every p^r up to
//! 3^6, plus the prime fields). In particular GF(8) defaults to
//! x^3 + x + 1; pass an explicit modulus to use x^3 + x^2 + 1 instead.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prime_poly;

/// Largest supported field size.
pub const MAX_FIELD_ORDER: u64 = 1 << 62;
const TABLE_LIMIT: u64 = 1 << 16;
const ADD_TABLE_LIMIT: u64 = 1 << 10;

/// A packed field element. Only meaningful together with the
/// [`FieldSpec`] that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct FieldElement(pub(crate) u64);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Packed index in `[0, q)`.
    pub fn index(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Conway polynomials, ascending coefficients, for every p^r <= 729.
const CONWAY: &[(u64, &[u64])] = &[
    (2, &[1, 1]),
    (2, &[1, 1, 1]),
    (2, &[1, 1, 0, 1]),
    (2, &[1, 1, 0, 0, 1]),
    (2, &[1, 0, 1, 0, 0, 1]),
    (2, &[1, 1, 0, 1, 1, 0, 1]),
    (2, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (2, &[1, 0, 0, 0, 1, 0, 0, 0, 0, 1]),
    (3, &[1, 1]),
    (3, &[2, 2, 1]),
    (3, &[1, 2, 0, 1]),
    (3, &[2, 0, 0, 2, 1]),
    (3, &[1, 2, 0, 0, 0, 1]),
    (3, &[2, 2, 1, 0, 2, 0, 1]),
    (5, &[3, 1]),
    (5, &[2, 4, 1]),
    (5, &[3, 3, 0, 1]),
    (5, &[2, 4, 4, 0, 1]),
    (7, &[4, 1]),
    (7, &[3, 6, 1]),
    (7, &[4, 0, 6, 1]),
    (11, &[9, 1]),
    (11, &[2, 7, 1]),
    (13, &[11, 1]),
    (13, &[2, 12, 1]),
    (17, &[14, 1]),
    (17, &[3, 16, 1]),
    (19, &[17, 1]),
    (19, &[2, 18, 1]),
    (23, &[18, 1]),
    (23, &[5, 21, 1]),
];

/// Conway polynomial for GF(p^r) if the built-in table has it.
pub fn conway_polynomial(p: u64, r: u32) -> Option<&'static [u64]> {
    CONWAY
        .iter()
        .find(|(cp, c)| *cp == p && c.len() == r as usize + 1)
        .map(|(_, c)| *c)
}

struct Tables {
    exp: Vec<u64>,
    log: Vec<u64>,
}

struct Inner {
    p: u64,
    r: u32,
    q: u64,
    modulus: Vec<u64>,
    generator: u64,
    /// Distinct prime factors of q - 1.
    order_factors: Vec<u64>,
    tables: Option<Tables>,
    add_table: Option<Vec<u32>>,
}

/// GF(p^r) with an explicit monic irreducible modulus and a designated
/// primitive element. Cloning is cheap: the tables are shared.
#[derive(Clone)]
pub struct FieldSpec {
    inner: Arc<Inner>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; modulus {:?})", self.p(), self.r(), self.modulus())
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl FieldSpec {
    /// Builds GF(p^r). With `modulus = None` the Conway polynomial is used
    /// when tabulated, otherwise the smallest irreducible polynomial in
    /// digit order.
    pub fn new(p: u64, r: u32, modulus: Option<&[u64]>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if r == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = checked_order(p, r)?;
        let modulus = match modulus {
            Some(m) => {
                if m.len() != r as usize + 1 {
                    return Err(Error::InvalidModulus(format!(
                        "expected degree {r}, got {} coefficients",
                        m.len()
                    )));
                }
                if m[r as usize] != 1 {
                    return Err(Error::InvalidModulus("modulus must be monic".into()));
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidModulus(format!(
                        "coefficients must lie in [0, {p})"
                    )));
                }
                if !prime_poly::is_irreducible(m, p) {
                    return Err(Error::ReducibleModulus(p));
                }
                m.to_vec()
            }
            None => match conway_polynomial(p, r) {
                Some(c) => c.to_vec(),
                None => smallest_irreducible(p, r),
            },
        };
        Ok(Self::build(p, r, q, modulus))
    }

    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1, None)
    }

    fn build(p: u64, r: u32, q: u64, modulus: Vec<u64>) -> Self {
        let order_factors = distinct_prime_factors(q - 1);
        let mut inner = Inner {
            p,
            r,
            q,
            modulus,
            generator: 1,
            order_factors,
            tables: None,
            add_table: None,
        };
        inner.generator = find_generator(&inner);
        if q <= TABLE_LIMIT {
            let mut exp = Vec::with_capacity((q - 1) as usize);
            let mut log = vec![0u64; q as usize];
            let mut acc = 1u64;
            for i in 0..q - 1 {
                exp.push(acc);
                log[acc as usize] = i;
                acc = generic_mul(&inner, acc, inner.generator);
            }
            inner.tables = Some(Tables { exp, log });
        }
        if q <= ADD_TABLE_LIMIT && p != 2 {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = generic_add(&inner, a, b) as u32;
                }
            }
            inner.add_table = Some(t);
        }
        FieldSpec {
            inner: Arc::new(inner),
        }
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    /// Extension degree over the prime field.
    pub fn r(&self) -> u32 {
        self.inner.r
    }

    /// Number of elements q = p^r.
    pub fn order(&self) -> u64 {
        self.inner.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    /// The designated primitive element (`w` / `beta` in digit notation).
    pub fn generator(&self) -> FieldElement {
        FieldElement(self.inner.generator)
    }

    pub fn has_log_table(&self) -> bool {
        self.inner.tables.is_some()
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    pub fn contains(&self, a: FieldElement) -> bool {
        a.0 < self.inner.q
    }

    /// Element with the given polynomial-basis coefficients (ascending,
    /// at most r of them, each in `[0, p)`).
    pub fn element(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() > self.r() as usize || coeffs.iter().any(|&c| c >= self.p()) {
            return Err(Error::ForeignElement);
        }
        Ok(FieldElement(pack(coeffs, self.p())))
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, c: i64) -> FieldElement {
        FieldElement(c.rem_euclid(self.p() as i64) as u64)
    }

    pub fn coeffs(&self, a: FieldElement) -> Vec<u64> {
        unpack(a.0, self.p(), self.r() as usize)
    }

    /// All elements in packed-index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.inner.q).map(FieldElement)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let inner = &*self.inner;
        if inner.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if let Some(t) = &inner.add_table {
            return FieldElement(t[(a.0 * inner.q + b.0) as usize] as u64);
        }
        FieldElement(generic_add(inner, a.0, b.0))
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let p = self.p();
        if p == 2 {
            return a;
        }
        let digits: Vec<u64> = self
            .coeffs(a)
            .into_iter()
            .map(|d| (p - d) % p)
            .collect();
        FieldElement(pack(&digits, p))
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        let inner = &*self.inner;
        if let Some(t) = &inner.tables {
            let n = inner.q - 1;
            let mut e = t.log[a.0 as usize] + t.log[b.0 as usize];
            if e >= n {
                e -= n;
            }
            return FieldElement(t.exp[e as usize]);
        }
        FieldElement(generic_mul(inner, a.0, b.0))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if a.0 == 0 {
            return FieldElement::ZERO;
        }
        if let Some(t) = &self.inner.tables {
            let n = self.inner.q - 1;
            let l = ((t.log[a.0 as usize] as u128 * (e % n) as u128) % n as u128) as u64;
            return FieldElement(t.exp[l as usize]);
        }
        let mut acc = FieldElement::ONE;
        let mut base = a;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(base, base);
            }
        }
        acc
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        if let Some(t) = &self.inner.tables {
            let n = self.inner.q - 1;
            let l = t.log[a.0 as usize];
            return Ok(FieldElement(t.exp[((n - l) % n) as usize]));
        }
        Ok(self.pow(a, self.inner.q - 2))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^(p^e)`.
    pub fn frobenius_power(&self, a: FieldElement, e: u32) -> FieldElement {
        let e = e % self.r();
        if e == 0 || a.0 <= 1 {
            return a;
        }
        if let Some(t) = &self.inner.tables {
            let n = self.inner.q - 1;
            let pe = prime_poly::pow_mod_p(self.p(), e as u64, n);
            let l = ((t.log[a.0 as usize] as u128 * pe as u128) % n as u128) as u64;
            return FieldElement(t.exp[l as usize]);
        }
        let mut acc = a;
        for _ in 0..e {
            acc = self.pow(acc, self.p());
        }
        acc
    }

    /// Discrete logarithm to the base of the generator.
    pub fn log(&self, a: FieldElement) -> Result<u64> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        match &self.inner.tables {
            Some(t) => Ok(t.log[a.0 as usize]),
            None => Err(Error::NoLogTable(self.order())),
        }
    }

    /// `generator^e`.
    pub fn exp(&self, e: u64) -> FieldElement {
        if let Some(t) = &self.inner.tables {
            return FieldElement(t.exp[(e % (self.inner.q - 1)) as usize]);
        }
        self.pow(self.generator(), e)
    }

    pub fn multiplicative_order(&self, a: FieldElement) -> Result<u64> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let mut ord = self.inner.q - 1;
        for &l in &self.inner.order_factors {
            while ord % l == 0 && self.pow(a, ord / l) == FieldElement::ONE {
                ord /= l;
            }
        }
        Ok(ord)
    }

    /// Digit notation: 0 and 1 stand for themselves, `d >= 2` stands for
    /// `generator^(d-1)`.
    pub fn from_digit(&self, d: u64) -> Result<FieldElement> {
        let q = self.order();
        if d >= q {
            return Err(Error::DigitOutOfRange { digit: d, q });
        }
        if !self.has_log_table() {
            return Err(Error::NoLogTable(q));
        }
        Ok(match d {
            0 => FieldElement::ZERO,
            1 => FieldElement::ONE,
            _ => self.exp(d - 1),
        })
    }

    pub fn to_digit(&self, a: FieldElement) -> Result<u64> {
        if !self.contains(a) {
            return Err(Error::ForeignElement);
        }
        Ok(match a.0 {
            0 => 0,
            1 => 1,
            _ => self.log(a)? + 1,
        })
    }

    /// Renders an element in the `w^i` notation used by the examples.
    pub fn display(&self, a: FieldElement) -> String {
        match a.0 {
            0 => "0".into(),
            1 => "1".into(),
            _ => match self.log(a) {
                Ok(1) => "w".into(),
                Ok(l) => format!("w^{l}"),
                Err(_) => format!("#{}", a.0),
            },
        }
    }

    /// GF(q^m) together with an embedding of this field into it.
    pub fn extension(&self, m: u32) -> Result<(FieldSpec, Embedding)> {
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let r = self.r() as u64 * m as u64;
        if r > u32::MAX as u64 {
            return Err(Error::FieldTooLarge { p: self.p(), r });
        }
        let ext = FieldSpec::new(self.p(), r as u32, None)?;
        let emb = Embedding::new(self, &ext)?;
        Ok((ext, emb))
    }
}

fn checked_order(p: u64, r: u32) -> Result<u64> {
    let mut q: u64 = 1;
    for _ in 0..r {
        q = match q.checked_mul(p) {
            Some(v) if v <= MAX_FIELD_ORDER => v,
            _ => return Err(Error::FieldTooLarge { p, r: r as u64 }),
        };
    }
    Ok(q)
}

fn smallest_irreducible(p: u64, r: u32) -> Vec<u64> {
    let r = r as usize;
    // start at index 1: the constant term of an irreducible of degree > 1 is nonzero
    (1..)
        .map(|i| prime_poly::monic_from_index(i, r, p))
        .find(|f| prime_poly::is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

fn pack(digits: &[u64], p: u64) -> u64 {
    digits.iter().rev().fold(0u64, |acc, &d| acc * p + d)
}

fn unpack(mut v: u64, p: u64, r: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(r);
    for _ in 0..r {
        out.push(v % p);
        v /= p;
    }
    out
}

fn generic_add(inner: &Inner, a: u64, b: u64) -> u64 {
    let p = inner.p;
    if p == 2 {
        return a ^ b;
    }
    let (mut a, mut b) = (a, b);
    let mut out = 0u64;
    let mut place = 1u64;
    for _ in 0..inner.r {
        let d = (a % p + b % p) % p;
        out += d * place;
        a /= p;
        b /= p;
        place = place.wrapping_mul(p);
    }
    out
}

fn generic_mul(inner: &Inner, a: u64, b: u64) -> u64 {
    let p = inner.p;
    let r = inner.r as usize;
    let x = unpack(a, p, r);
    let y = unpack(b, p, r);
    let prod = prime_poly::mul(&x, &y, p);
    let red = prime_poly::rem(&prod, &inner.modulus, p);
    pack(&red, p)
}

fn generic_pow(inner: &Inner, a: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    let mut base = a;
    while e > 0 {
        if e & 1 == 1 {
            acc = generic_mul(inner, acc, base);
        }
        e >>= 1;
        if e > 0 {
            base = generic_mul(inner, base, base);
        }
    }
    acc
}

/// Smallest packed index whose multiplicative order is q - 1, checked by
/// `a^((q-1)/l) != 1` for every prime `l | q - 1`.
fn find_generator(inner: &Inner) -> u64 {
    let n = inner.q - 1;
    if n == 1 {
        return 1;
    }
    (2..inner.q)
        .find(|&a| {
            inner
                .order_factors
                .iter()
                .all(|&l| generic_pow(inner, a, n / l) != 1)
        })
        .expect("finite fields have primitive elements")
}

/// Injective ring homomorphism GF(q) -> GF(q^m), determined by the image
/// of the base field's polynomial variable (a root of its modulus).
#[derive(Clone, Debug)]
pub struct Embedding {
    base: FieldSpec,
    target: FieldSpec,
    basis_images: Vec<FieldElement>,
    table: Option<Vec<FieldElement>>,
}

impl Embedding {
    fn new(base: &FieldSpec, target: &FieldSpec) -> Result<Self> {
        if target.p() != base.p() || target.r() % base.r() != 0 {
            return Err(Error::Mismatch);
        }
        let r = base.r() as usize;
        let root = if r == 1 {
            FieldElement::ONE
        } else {
            // roots of the base modulus live in the unique subfield of size q
            let cofactor = (target.order() - 1) / (base.order() - 1);
            let step = target.pow(target.generator(), cofactor);
            let mut cand = FieldElement::ONE;
            let mut found = None;
            for _ in 0..base.order() - 1 {
                if eval_prime_poly(target, base.modulus(), cand).is_zero() {
                    found = Some(cand);
                    break;
                }
                cand = target.mul(cand, step);
            }
            found.ok_or_else(|| Error::Verification("no root of the base modulus".into()))?
        };
        let mut basis_images = Vec::with_capacity(r);
        let mut acc = FieldElement::ONE;
        for _ in 0..r {
            basis_images.push(acc);
            acc = target.mul(acc, root);
        }
        let mut emb = Embedding {
            base: base.clone(),
            target: target.clone(),
            basis_images,
            table: None,
        };
        if base.order() <= TABLE_LIMIT {
            let t = base.elements().map(|a| emb.apply_direct(a)).collect();
            emb.table = Some(t);
        }
        Ok(emb)
    }

    fn apply_direct(&self, a: FieldElement) -> FieldElement {
        let coeffs = self.base.coeffs(a);
        coeffs
            .iter()
            .zip(&self.basis_images)
            .fold(FieldElement::ZERO, |acc, (&c, &img)| {
                self.target
                    .add(acc, self.target.mul(self.target.from_int(c as i64), img))
            })
    }

    pub fn apply(&self, a: FieldElement) -> FieldElement {
        match &self.table {
            Some(t) => t[a.0 as usize],
            None => self.apply_direct(a),
        }
    }

    pub fn base(&self) -> &FieldSpec {
        &self.base
    }

    pub fn target(&self) -> &FieldSpec {
        &self.target
    }
}

fn eval_prime_poly(field: &FieldSpec, f: &[u64], x: FieldElement) -> FieldElement {
    f.iter().rev().fold(FieldElement::ZERO, |acc, &c| {
        field.add(field.mul(acc, x), field.from_int(c as i64))
    })
}

/// The Frobenius power `theta(a) = a^(p^s)` on a fixed field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    field: FieldSpec,
    s: u32,
    order: u32,
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

impl Automorphism {
    pub fn frobenius(field: &FieldSpec, s: u32) -> Result<Self> {
        let r = field.r();
        if s >= r {
            return Err(Error::InvalidAutomorphism { s, r });
        }
        let order = if s == 0 { 1 } else { r / gcd_u32(r, s) };
        Ok(Automorphism {
            field: field.clone(),
            s,
            order,
        })
    }

    pub fn identity(field: &FieldSpec) -> Self {
        Automorphism {
            field: field.clone(),
            s: 0,
            order: 1,
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// Order m of theta in the automorphism group.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_identity(&self) -> bool {
        self.s == 0
    }

    /// `theta^j(a)` for any integer `j`; negative powers use
    /// `theta^-1 = theta^(m-1)`.
    pub fn apply(&self, j: i64, a: FieldElement) -> FieldElement {
        let j = j.rem_euclid(self.order as i64) as u32;
        if j == 0 {
            return a;
        }
        self.field.frobenius_power(a, self.s * j)
    }

    pub fn is_fixed(&self, a: FieldElement) -> bool {
        self.apply(1, a) == a
    }

    /// Size of the fixed subfield, p^gcd(r, s).
    pub fn fixed_field_order(&self) -> u64 {
        let g = if self.s == 0 {
            self.field.r()
        } else {
            gcd_u32(self.field.r(), self.s)
        };
        self.field.p().pow(g)
    }
}
