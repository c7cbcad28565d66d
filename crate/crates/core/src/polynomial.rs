//! The skew polynomial ring F_q[x; theta], where `x * a = theta(a) * x`.
//! With the identity automorphism this is the ordinary ring F_q[x].
//!
//! Polynomials are plain coefficient vectors (constant term first) in
//! canonical form; all arithmetic goes through a [`SkewRing`], which owns
//! the field and the automorphism.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Automorphism, Embedding, FieldElement, FieldSpec};

/// Exhaustive root scans stop at groups larger than this.
pub const ROOT_SCAN_CAP: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct SkewPoly {
    coeffs: Vec<FieldElement>,
}

impl SkewPoly {
    pub fn zero() -> Self {
        SkewPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        SkewPoly {
            coeffs: vec![FieldElement::ONE],
        }
    }

    /// `c * x^i`.
    pub fn monomial(c: FieldElement, i: usize) -> Self {
        let mut coeffs = vec![FieldElement::ZERO; i + 1];
        coeffs[i] = c;
        Self::new(coeffs)
    }

    /// From ascending coefficients; trailing zeros are stripped.
    pub fn new(mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        SkewPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(FieldElement::ONE)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Coefficients padded with zeros to length `n`.
    pub fn to_vector(&self, n: usize) -> Vec<FieldElement> {
        let mut v = self.coeffs.clone();
        v.resize(n.max(v.len()), FieldElement::ZERO);
        v
    }
}

/// F_q[x; theta] for a Frobenius power theta.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewRing {
    aut: Automorphism,
}

impl SkewRing {
    pub fn new(aut: Automorphism) -> Self {
        SkewRing { aut }
    }

    /// Convenience constructor for `F_q[x; a -> a^(p^s)]`.
    pub fn frobenius(field: &FieldSpec, s: u32) -> Result<Self> {
        Ok(Self::new(Automorphism::frobenius(field, s)?))
    }

    /// The commutative ring F_q[x].
    pub fn commutative(field: &FieldSpec) -> Self {
        Self::new(Automorphism::identity(field))
    }

    pub fn field(&self) -> &FieldSpec {
        self.aut.field()
    }

    pub fn aut(&self) -> &Automorphism {
        &self.aut
    }

    pub fn is_commutative(&self) -> bool {
        self.aut.is_identity()
    }

    /// `theta^j(a)`.
    pub fn theta(&self, j: i64, a: FieldElement) -> FieldElement {
        self.aut.apply(j, a)
    }

    /// `x^n - alpha`.
    pub fn binomial(&self, n: usize, alpha: FieldElement) -> SkewPoly {
        let f = self.field();
        let mut c = vec![FieldElement::ZERO; n + 1];
        c[0] = f.neg(alpha);
        c[n] = f.add(c[n], FieldElement::ONE);
        SkewPoly::new(c)
    }

    /// Polynomial from ascending digit-notation coefficients.
    pub fn from_digits(&self, digits: &[u64]) -> Result<SkewPoly> {
        let f = self.field();
        let c = digits
            .iter()
            .map(|&d| f.from_digit(d))
            .collect::<Result<Vec<_>>>()?;
        Ok(SkewPoly::new(c))
    }

    pub fn to_digits(&self, a: &SkewPoly) -> Result<Vec<u64>> {
        a.coeffs().iter().map(|&c| self.field().to_digit(c)).collect()
    }

    pub fn add(&self, a: &SkewPoly, b: &SkewPoly) -> SkewPoly {
        let f = self.field();
        let n = a.coeffs.len().max(b.coeffs.len());
        SkewPoly::new((0..n).map(|i| f.add(a.coeff(i), b.coeff(i))).collect())
    }

    pub fn sub(&self, a: &SkewPoly, b: &SkewPoly) -> SkewPoly {
        let f = self.field();
        let n = a.coeffs.len().max(b.coeffs.len());
        SkewPoly::new((0..n).map(|i| f.sub(a.coeff(i), b.coeff(i))).collect())
    }

    pub fn neg(&self, a: &SkewPoly) -> SkewPoly {
        let f = self.field();
        SkewPoly::new(a.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    /// Left scalar multiple `c * a`.
    pub fn scale(&self, c: FieldElement, a: &SkewPoly) -> SkewPoly {
        let f = self.field();
        SkewPoly::new(a.coeffs.iter().map(|&x| f.mul(c, x)).collect())
    }

    /// Ore product: the coefficient of `x^n` in `a*b` is
    /// `sum_{i+j=n} a_i * theta^i(b_j)`.
    pub fn mul(&self, a: &SkewPoly, b: &SkewPoly) -> SkewPoly {
        if a.is_zero() || b.is_zero() {
            return SkewPoly::zero();
        }
        let f = self.field();
        let m = self.aut.order() as usize;
        // theta^t(b) for t in 0..m; theta^i only depends on i mod m
        let twisted: Vec<Vec<FieldElement>> = (0..m)
            .map(|t| b.coeffs.iter().map(|&c| self.theta(t as i64, c)).collect())
            .collect();
        let mut out = vec![FieldElement::ZERO; a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &ai) in a.coeffs.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, &bj) in twisted[i % m].iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(ai, bj));
            }
        }
        SkewPoly::new(out)
    }

    /// `(q, r)` with `a = q*b + r` and `deg r < deg b`.
    pub fn right_divmod(&self, a: &SkewPoly, b: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let f = self.field();
        let lead = b.leading().expect("nonzero divisor");
        let mut r = a.coeffs.clone();
        let mut q = vec![FieldElement::ZERO; a.coeffs.len().saturating_sub(db)];
        while r.len() > db {
            let top = r.len() - 1;
            let shift = top - db;
            let c = f.div(r[top], self.theta(shift as i64, lead))?;
            if !c.is_zero() {
                q[shift] = c;
                for (j, &bj) in b.coeffs.iter().enumerate() {
                    let t = f.mul(c, self.theta(shift as i64, bj));
                    r[shift + j] = f.sub(r[shift + j], t);
                }
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Ok((SkewPoly::new(q), SkewPoly::new(r)))
    }

    /// `(q, r)` with `a = b*q + r` and `deg r < deg b`.
    pub fn left_divmod(&self, a: &SkewPoly, b: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let f = self.field();
        let lead = b.leading().expect("nonzero divisor");
        let mut r = a.coeffs.clone();
        let mut q = vec![FieldElement::ZERO; a.coeffs.len().saturating_sub(db)];
        while r.len() > db {
            let top = r.len() - 1;
            let shift = top - db;
            // b * (c x^shift) has leading coefficient lead * theta^db(c)
            let c = self.theta(-(db as i64), f.div(r[top], lead)?);
            if !c.is_zero() {
                q[shift] = c;
                for (j, &bj) in b.coeffs.iter().enumerate() {
                    let t = f.mul(bj, self.theta(j as i64, c));
                    r[shift + j] = f.sub(r[shift + j], t);
                }
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Ok((SkewPoly::new(q), SkewPoly::new(r)))
    }

    /// Canonical representative of `a` in the left module R/R(x^n - alpha),
    /// using `c x^(n+j) = c theta^j(alpha) x^j`.
    pub fn mod_reduce(&self, a: &SkewPoly, n: usize, alpha: FieldElement) -> Result<SkewPoly> {
        if alpha.is_zero() {
            return Err(Error::ZeroAlpha);
        }
        if n == 0 {
            return Err(Error::InvalidParameter("modulus degree must be positive".into()));
        }
        let f = self.field();
        let mut c = a.coeffs.clone();
        while c.len() > n {
            let top = c.len() - 1;
            let j = top - n;
            let v = c[top];
            if !v.is_zero() {
                c[j] = f.add(c[j], f.mul(v, self.theta(j as i64, alpha)));
            }
            c.pop();
        }
        Ok(SkewPoly::new(c))
    }

    /// Whether `g` right-divides `x^n - alpha`, i.e. `x^n = alpha` modulo
    /// the left ideal `R g`.
    pub fn right_divides_binomial(&self, g: &SkewPoly, n: usize, alpha: FieldElement) -> bool {
        match self.binomial_constant(g, n) {
            Some(c) => c == alpha,
            None => false,
        }
    }

    /// The unique constant `c` with `g` right-dividing `x^n - c`, if any.
    pub fn binomial_constant(&self, g: &SkewPoly, n: usize) -> Option<FieldElement> {
        let d = g.degree()?;
        if d == 0 || d > n {
            return None;
        }
        let f = self.field();
        let lead_inv = f.inv(g.leading()?).ok()?;
        let g = self.scale(lead_inv, g);
        // x^d = -(g_0 + ... + g_{d-1} x^{d-1}) modulo R g
        let mut rem: Vec<FieldElement> = (0..d).map(|j| f.neg(g.coeff(j))).collect();
        let mut buf = vec![FieldElement::ZERO; d];
        for _ in d..n {
            // x * sum r_j x^j = sum theta(r_j) x^(j+1), then reduce x^d
            let top = self.theta(1, rem[d - 1]);
            buf[0] = FieldElement::ZERO;
            for j in 1..d {
                buf[j] = self.theta(1, rem[j - 1]);
            }
            if !top.is_zero() {
                for (j, b) in buf.iter_mut().enumerate() {
                    *b = f.sub(*b, f.mul(top, g.coeff(j)));
                }
            }
            std::mem::swap(&mut rem, &mut buf);
        }
        if rem[1..].iter().all(|c| c.is_zero()) {
            Some(rem[0])
        } else {
            None
        }
    }

    /// Monic `theta^k(h_0)^-1 * sum_{i=0}^{k} theta^i(h_{k-i}) x^i`, k = deg h.
    pub fn skew_reciprocal(&self, h: &SkewPoly) -> Result<SkewPoly> {
        let k = h.degree().ok_or(Error::ZeroConstantTerm)?;
        let h0 = h.coeff(0);
        if h0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let f = self.field();
        let scale = f.inv(self.theta(k as i64, h0))?;
        let coeffs = (0..=k)
            .map(|i| f.mul(scale, self.theta(i as i64, h.coeff(k - i))))
            .collect();
        Ok(SkewPoly::new(coeffs))
    }

    /// Evaluation of a commutative polynomial at a point of an extension
    /// field (Horner). Only meaningful for the identity automorphism.
    pub fn eval_in(&self, a: &SkewPoly, emb: &Embedding, x: FieldElement) -> FieldElement {
        let ext = emb.target();
        a.coeffs.iter().rev().fold(FieldElement::ZERO, |acc, &c| {
            ext.add(ext.mul(acc, x), emb.apply(c))
        })
    }

    /// Exponents `e` in `[0, Q-1)` with `a(omega^e) = 0`, where omega is the
    /// generator of the embedding's target field.
    pub fn find_roots(&self, a: &SkewPoly, emb: &Embedding) -> Result<Vec<u64>> {
        if !self.is_commutative() {
            return Err(Error::InvalidParameter(
                "root finding needs a commutative polynomial".into(),
            ));
        }
        if a.is_zero() {
            return Err(Error::InvalidParameter("the zero polynomial vanishes everywhere".into()));
        }
        let ext = emb.target();
        let group = ext.order() - 1;
        if group > ROOT_SCAN_CAP {
            return Err(Error::BudgetExceeded(format!(
                "root scan over a group of order {group}"
            )));
        }
        let omega = ext.generator();
        let mut y = FieldElement::ONE;
        let mut roots = Vec::new();
        for e in 0..group {
            if self.eval_in(a, emb, y).is_zero() {
                roots.push(e);
            }
            y = ext.mul(y, omega);
        }
        Ok(roots)
    }

    /// Human-readable sum such as `1 + w*x^2 + x^6`.
    pub fn render(&self, a: &SkewPoly) -> String {
        if a.is_zero() {
            return "0".into();
        }
        let f = self.field();
        let terms: Vec<String> = a
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| {
                let cs = f.display(c);
                let mono = match i {
                    0 => String::new(),
                    1 => "x".into(),
                    _ => format!("x^{i}"),
                };
                match (i, c == FieldElement::ONE) {
                    (0, _) => cs,
                    (_, true) => mono,
                    _ => format!("{cs}*{mono}"),
                }
            })
            .collect();
        terms.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4_ring(s: u32) -> SkewRing {
        let f = FieldSpec::new(2, 2, None).unwrap();
        SkewRing::frobenius(&f, s).unwrap()
    }

    #[test]
    fn x_times_w() {
        let r = f4_ring(1);
        let f = r.field().clone();
        let w = f.generator();
        let x = SkewPoly::monomial(f.one(), 1);
        let prod = r.mul(&x, &SkewPoly::new(vec![w]));
        assert_eq!(prod, SkewPoly::monomial(f.mul(w, w), 1));
    }

    #[test]
    fn paper_divisor_of_x8_minus_w() {
        let r = f4_ring(1);
        let w = r.field().generator();
        let g = r.from_digits(&[1, 0, 3, 0, 2, 0, 1]).unwrap();
        let f = r.binomial(8, w);
        let (q, rem) = r.right_divmod(&f, &g).unwrap();
        assert!(rem.is_zero());
        assert_eq!(r.add(&r.mul(&q, &g), &rem), f);
        assert!(r.right_divides_binomial(&g, 8, w));
        let (h, rem) = r.left_divmod(&f, &g).unwrap();
        assert!(rem.is_zero());
        assert_eq!(h.degree(), Some(2));
    }

    #[test]
    fn f8_divisor_of_x7_minus_w3() {
        let f = FieldSpec::new(2, 3, None).unwrap();
        let r = SkewRing::frobenius(&f, 2).unwrap();
        // x^4 + w^2 x^2 + x + w^3
        let g = r.from_digits(&[4, 1, 3, 0, 1]).unwrap();
        let (_, rem) = r.right_divmod(&r.binomial(7, f.exp(3)), &g).unwrap();
        assert!(rem.is_zero());
        assert_eq!(r.binomial_constant(&g, 7), Some(f.exp(3)));
    }

    #[test]
    fn division_by_self_and_zero() {
        let r = f4_ring(1);
        let g = r.from_digits(&[2, 3, 1]).unwrap();
        assert_eq!(r.right_divmod(&g, &g).unwrap(), (SkewPoly::one(), SkewPoly::zero()));
        assert_eq!(r.left_divmod(&g, &g).unwrap(), (SkewPoly::one(), SkewPoly::zero()));
        assert_eq!(r.right_divmod(&g, &SkewPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn mod_reduce_cases() {
        let r = f4_ring(1);
        let f = r.field().clone();
        let w = f.generator();
        let low = r.from_digits(&[1, 2, 3]).unwrap();
        assert_eq!(r.mod_reduce(&low, 5, w).unwrap(), low);
        let xn = SkewPoly::monomial(f.one(), 5);
        assert_eq!(r.mod_reduce(&xn, 5, w).unwrap(), SkewPoly::new(vec![w]));
        let xn1 = SkewPoly::monomial(f.one(), 6);
        let red = r.mod_reduce(&xn1, 5, w).unwrap();
        assert_eq!(red, SkewPoly::monomial(r.theta(1, w), 1));
        let (_, rem) = r.right_divmod(&xn1, &r.binomial(5, w)).unwrap();
        assert_eq!(red, rem);
        assert_eq!(r.mod_reduce(&xn1, 5, FieldElement::ZERO), Err(Error::ZeroAlpha));
    }

    #[test]
    fn reciprocal_of_linear() {
        let r = f4_ring(1);
        let f = r.field().clone();
        for c in f.elements().skip(1) {
            let h = SkewPoly::new(vec![c, f.one()]);
            let rec = r.skew_reciprocal(&h).unwrap();
            let expect = SkewPoly::new(vec![f.inv(r.theta(1, c)).unwrap(), f.one()]);
            assert_eq!(rec, expect);
            assert!(rec.is_monic());
        }
        assert_eq!(
            r.skew_reciprocal(&SkewPoly::monomial(f.one(), 2)),
            Err(Error::ZeroConstantTerm)
        );
    }

    #[test]
    fn reciprocal_fixes_palindromes() {
        let r = f4_ring(0);
        let h = r.from_digits(&[1, 2, 3, 2, 1]).unwrap();
        assert_eq!(r.skew_reciprocal(&h).unwrap(), h);
    }

    #[test]
    fn roots_in_extension() {
        let f2 = FieldSpec::prime(2).unwrap();
        let r = SkewRing::commutative(&f2);
        let (_, emb) = f2.extension(2).unwrap();
        let x2x1 = SkewPoly::new(vec![f2.one(), f2.one(), f2.one()]);
        assert_eq!(r.find_roots(&x2x1, &emb).unwrap(), vec![1, 2]);
        let xm1 = SkewPoly::new(vec![f2.one(), f2.one()]);
        assert_eq!(r.find_roots(&xm1, &emb).unwrap(), vec![0]);
    }

    #[test]
    fn render_sum() {
        let r = f4_ring(1);
        let g = r.from_digits(&[1, 0, 2, 0, 0, 0, 1]).unwrap();
        assert_eq!(r.render(&g), "1 + w*x^2 + x^6");
        let g = r.from_digits(&[3, 1]).unwrap();
        assert_eq!(r.render(&g), "w^2 + x");
    }
}
