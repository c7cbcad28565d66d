//! Skew (alpha, theta)-cyclic codes: the twisted shift, generator
//! matrices of right divisors of `x^n - alpha`, exhaustive divisor
//! enumeration, and dual generator polynomials.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::linear_code::{LinearCode, MatrixFq, SemiLinearVectorMap};
use crate::polynomial::{SkewPoly, SkewRing};

/// Default cap on the number of candidate polynomials tried by
/// [`ConstacyclicSpec::right_divisors`].
pub const DIVISOR_BUDGET: u64 = 1 << 30;

/// Length, twist and ring of a family of skew constacyclic codes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstacyclicSpec {
    ring: SkewRing,
    n: usize,
    alpha: FieldElement,
}

impl ConstacyclicSpec {
    pub fn new(ring: SkewRing, n: usize, alpha: FieldElement) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::ZeroAlpha);
        }
        if !ring.field().contains(alpha) {
            return Err(Error::ForeignElement);
        }
        if n < 2 {
            return Err(Error::InvalidParameter(format!("length {n} is below 2")));
        }
        Ok(ConstacyclicSpec { ring, n, alpha })
    }

    pub fn ring(&self) -> &SkewRing {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn alpha(&self) -> FieldElement {
        self.alpha
    }

    /// `x^n - alpha`.
    pub fn modulus(&self) -> SkewPoly {
        self.ring.binomial(self.n, self.alpha)
    }

    /// `(c_0, ..., c_{n-1}) -> (alpha theta(c_{n-1}), theta(c_0), ..., theta(c_{n-2}))`.
    pub fn shift(&self, v: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: v.len(),
            });
        }
        let f = self.ring.field();
        let mut out = Vec::with_capacity(self.n);
        out.push(f.mul(self.alpha, self.ring.theta(1, v[self.n - 1])));
        out.extend(v[..self.n - 1].iter().map(|&c| self.ring.theta(1, c)));
        Ok(out)
    }

    /// The shift as a semi-linear map.
    pub fn shift_map(&self) -> SemiLinearVectorMap {
        let f = self.ring.field();
        let mut t = MatrixFq::zeros(f, self.n, self.n);
        for i in 0..self.n - 1 {
            t.set(i, i + 1, FieldElement::ONE);
        }
        t.set(self.n - 1, 0, self.alpha);
        SemiLinearVectorMap::new(self.ring.aut().clone(), t).expect("square matrix over the ring's field")
    }

    fn check_divisor(&self, g: &SkewPoly) -> Result<usize> {
        if !g.is_monic() {
            return Err(Error::NotMonic);
        }
        let d = g.degree().expect("monic is nonzero");
        if d == 0 || d >= self.n || !self.ring.right_divides_binomial(g, self.n, self.alpha) {
            return Err(Error::NotRightDivisor { n: self.n });
        }
        Ok(d)
    }

    /// Rows `g, x g, ..., x^(n-d-1) g`; row i carries `theta^i(g_j)` in
    /// column `i + j`.
    pub fn gen_matrix(&self, g: &SkewPoly) -> Result<MatrixFq> {
        let d = self.check_divisor(g)?;
        let k = self.n - d;
        let mut m = MatrixFq::zeros(self.ring.field(), k, self.n);
        for i in 0..k {
            for (j, &c) in g.coeffs().iter().enumerate() {
                m.set(i, i + j, self.ring.theta(i as i64, c));
            }
        }
        Ok(m)
    }

    pub fn code(&self, g: &SkewPoly) -> Result<SkewCyclicCode> {
        let code = LinearCode::from_rows(&self.gen_matrix(g)?)?;
        Ok(SkewCyclicCode {
            cspec: self.clone(),
            g: g.clone(),
            code,
        })
    }

    /// All monic nontrivial right divisors of `x^n - alpha` with degree in
    /// `[min_deg, max_deg]`, ordered by degree and then by ascending
    /// coefficient digits.
    pub fn right_divisors(&self, min_deg: usize, max_deg: usize) -> Result<Vec<SkewPoly>> {
        self.right_divisors_with(min_deg, max_deg, DIVISOR_BUDGET)
    }

    pub fn right_divisors_with(
        &self,
        min_deg: usize,
        max_deg: usize,
        budget: u64,
    ) -> Result<Vec<SkewPoly>> {
        let n = self.n;
        let min_deg = min_deg.max(1);
        let max_deg = max_deg.min(n - 1);
        let q = self.ring.field().order() as u128;
        let mut total: u128 = 0;
        for d in min_deg..=max_deg {
            // the smaller of g and its left cofactor is enumerated
            let e = d.min(n - d) as u32;
            total = total.saturating_add((q - 1).saturating_mul(q.saturating_pow(e - 1)));
        }
        if total > budget as u128 {
            return Err(Error::BudgetExceeded(format!(
                "{total} candidate divisors exceed the budget of {budget}"
            )));
        }
        let mut out = Vec::new();
        for d in min_deg..=max_deg {
            if 2 * d <= n {
                out.extend(self.scan_degree(d, |g| {
                    self.ring.right_divides_binomial(&g, n, self.alpha).then_some(g)
                }));
            } else {
                // x^n - alpha = h g with h monic of degree n - d
                let f = self.modulus();
                out.extend(self.scan_degree(n - d, |h| {
                    let (g, r) = self.ring.left_divmod(&f, &h).ok()?;
                    r.is_zero().then_some(g)
                }));
            }
        }
        let ring = &self.ring;
        let mut keyed: Vec<(usize, Vec<u64>, SkewPoly)> = out
            .into_iter()
            .map(|g| {
                let digits = ring.to_digits(&g).unwrap_or_default();
                (g.degree().unwrap_or(0), digits, g)
            })
            .collect();
        keyed.sort();
        Ok(keyed.into_iter().map(|(_, _, g)| g).collect())
    }

    /// Runs `test` over every monic degree-`d` polynomial with nonzero
    /// constant term.
    fn scan_degree<F>(&self, d: usize, test: F) -> Vec<SkewPoly>
    where
        F: Fn(SkewPoly) -> Option<SkewPoly> + Sync,
    {
        let f = self.ring.field();
        let elems: Vec<FieldElement> = f.elements().collect();
        let q = elems.len() as u64;
        let count = (q - 1) * q.pow(d as u32 - 1);
        (0..count)
            .into_par_iter()
            .filter_map(|idx| {
                let mut coeffs = Vec::with_capacity(d + 1);
                coeffs.push(elems[(1 + idx % (q - 1)) as usize]);
                let mut x = idx / (q - 1);
                for _ in 1..d {
                    coeffs.push(elems[(x % q) as usize]);
                    x /= q;
                }
                coeffs.push(FieldElement::ONE);
                test(SkewPoly::new(coeffs))
            })
            .collect()
    }

    /// Generator of the dual code, which is skew `alpha^-1`-cyclic: with
    /// `k = n - deg g` and `x^n - theta^-k(alpha) = g hbar`, the result is
    /// the normalized skew reciprocal of `hbar`.
    pub fn dual_generator(&self, g: &SkewPoly) -> Result<SkewPoly> {
        let d = self.check_divisor(g)?;
        let k = self.n - d;
        let c = self.ring.theta(-(k as i64), self.alpha);
        let (hbar, r) = self.ring.left_divmod(&self.ring.binomial(self.n, c), g)?;
        if !r.is_zero() {
            return Err(Error::Verification(format!(
                "{} does not left-divide x^{} - theta^-{k}(alpha)",
                self.ring.render(g),
                self.n
            )));
        }
        self.ring.skew_reciprocal(&hbar)
    }

    /// The spec of the dual family, length n and twist `alpha^-1`.
    pub fn dual_spec(&self) -> Self {
        let inv = self.ring.field().inv(self.alpha).expect("alpha is nonzero");
        ConstacyclicSpec {
            ring: self.ring.clone(),
            n: self.n,
            alpha: inv,
        }
    }
}

/// A skew constacyclic code with its generator polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewCyclicCode {
    cspec: ConstacyclicSpec,
    g: SkewPoly,
    code: LinearCode,
}

impl SkewCyclicCode {
    pub fn spec(&self) -> &ConstacyclicSpec {
        &self.cspec
    }

    pub fn generator_poly(&self) -> &SkewPoly {
        &self.g
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    /// The dual as a skew `alpha^-1`-cyclic code.
    pub fn dual(&self) -> Result<SkewCyclicCode> {
        let h = self.cspec.dual_generator(&self.g)?;
        self.cspec.dual_spec().code(&h)
    }

    /// Whether the code equals its dual. A self-dual code must have even
    /// length and `alpha^2 = 1`; anything else is reported as a failed
    /// verification.
    pub fn is_self_dual(&self) -> Result<bool> {
        let n = self.cspec.n;
        if n % 2 == 1 || 2 * self.code.dim() != n {
            return Ok(false);
        }
        let same = self.code.equals(&self.code.dual()?)?;
        let f = self.cspec.ring.field();
        let a = self.cspec.alpha;
        if same && f.mul(a, a) != FieldElement::ONE {
            return Err(Error::Verification(format!(
                "self-dual code with alpha = {} and alpha^2 != 1",
                f.display(a)
            )));
        }
        Ok(same)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn f4_spec(s: u32, n: usize, alpha_digit: u64) -> ConstacyclicSpec {
        let f = FieldSpec::new(2, 2, None).unwrap();
        let ring = SkewRing::frobenius(&f, s).unwrap();
        let a = f.from_digit(alpha_digit).unwrap();
        ConstacyclicSpec::new(ring, n, a).unwrap()
    }

    #[test]
    fn shift_examples() {
        let c = f4_spec(0, 4, 1);
        let f = c.ring().field().clone();
        let e = |d: u64| f.from_digit(d).unwrap();
        assert_eq!(c.shift(&[e(1), e(0), e(0), e(0)]).unwrap(), vec![e(0), e(1), e(0), e(0)]);
        let c = f4_spec(1, 4, 2);
        // theta(w) = w^2, digit 3
        assert_eq!(c.shift(&[e(1), e(2), e(0), e(0)]).unwrap(), vec![e(0), e(1), e(3), e(0)]);
        assert!(c.shift(&[e(1)]).is_err());
    }

    #[test]
    fn paper_generator_matrix() {
        let c = f4_spec(1, 8, 2);
        let g = c.ring().from_digits(&[1, 0, 3, 0, 2, 0, 1]).unwrap();
        let m = c.gen_matrix(&g).unwrap();
        assert_eq!(
            m.to_digit_rows().unwrap(),
            vec![vec![1, 0, 3, 0, 2, 0, 1, 0], vec![0, 1, 0, 2, 0, 3, 0, 1]]
        );
        let code = c.code(&g).unwrap();
        assert_eq!(code.code().min_weight().unwrap(), 4);
        assert!(code.code().invariant_under(&c.shift_map()).unwrap());
    }

    #[test]
    fn dual_generator_of_paper_code() {
        let c = f4_spec(1, 8, 2);
        let g = c.ring().from_digits(&[1, 0, 3, 0, 2, 0, 1]).unwrap();
        let h = c.dual_generator(&g).unwrap();
        assert_eq!(c.ring().to_digits(&h).unwrap(), vec![3, 0, 1]);
        let code = c.code(&g).unwrap();
        let dual = code.dual().unwrap();
        assert!(dual.code().equals(&code.code().dual().unwrap()).unwrap());
        assert_eq!(dual.code().min_weight().unwrap(), 2);
        assert!(!code.is_self_dual().unwrap());
    }

    #[test]
    fn rejects_non_divisors() {
        let c = f4_spec(1, 8, 2);
        let g = c.ring().from_digits(&[1, 1]).unwrap();
        assert_eq!(c.gen_matrix(&g), Err(Error::NotRightDivisor { n: 8 }));
        let nm = c.ring().from_digits(&[1, 2]).unwrap();
        assert_eq!(c.gen_matrix(&nm), Err(Error::NotMonic));
    }

    #[test]
    fn small_divisor_counts_match_brute_force() {
        for (s, n, a) in [(1, 2, 1), (1, 4, 2), (0, 6, 1), (1, 6, 3), (1, 5, 1)] {
            let c = f4_spec(s, n, a);
            let fast = c.right_divisors(1, n - 1).unwrap();
            let f = c.ring().field().clone();
            let elems: Vec<_> = f.elements().collect();
            let mut slow = Vec::new();
            for d in 1..n {
                for idx in 0..4u64.pow(d as u32) {
                    let mut co: Vec<_> = (0..d)
                        .map(|i| elems[((idx >> (2 * i)) & 3) as usize])
                        .collect();
                    co.push(FieldElement::ONE);
                    let g = SkewPoly::new(co);
                    let (_, r) = c.ring().right_divmod(&c.modulus(), &g).unwrap();
                    if r.is_zero() {
                        slow.push(g);
                    }
                }
            }
            let mut fast_sorted = fast.clone();
            fast_sorted.sort();
            slow.sort();
            assert_eq!(fast_sorted, slow, "s={s} n={n} alpha={a}");
        }
    }

    #[test]
    fn self_dual_binary_length_two() {
        let f = FieldSpec::prime(2).unwrap();
        let c = ConstacyclicSpec::new(SkewRing::commutative(&f), 2, FieldElement::ONE).unwrap();
        let g = c.ring().from_digits(&[1, 1]).unwrap();
        assert!(c.code(&g).unwrap().is_self_dual().unwrap());
    }
}
