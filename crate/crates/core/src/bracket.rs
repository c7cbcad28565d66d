//! Bracket exponents `[i]_s = ((p^s)^i - 1) / (p^s - 1)` and the map
//! `sum f_i t^i -> sum f_i x^[i]` from F_q[t; theta] to F_q[x], together
//! with the distance bounds it yields for skew constacyclic codes.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Embedding, FieldElement, FieldSpec};
use crate::linear_code::{LinearCode, MatrixFq, WeightRoute, MIN_WEIGHT_BUDGET};
use crate::polynomial::{SkewPoly, SkewRing};
use crate::skew_constacyclic::ConstacyclicSpec;

/// Largest degree expanded densely.
pub const DENSE_DEGREE_CAP: u64 = 1 << 16;
/// Largest Vandermonde matrix built by [`BracketContext::vandermonde_full_rank`].
pub const VANDERMONDE_CAP: u64 = 1 << 10;
/// Largest group `F_{q^[k]}^*` searched over all strides.
pub const BCH_SCAN_CAP: u64 = 1 << 16;

/// `[i]_s` for a fixed `p^s`, tied to the skew ring it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketContext {
    ring: SkewRing,
    base: u128,
}

impl BracketContext {
    /// Needs a nontrivial Frobenius power (`s >= 1`).
    pub fn new(ring: &SkewRing) -> Result<Self> {
        let s = ring.aut().s();
        if s == 0 {
            return Err(Error::DegenerateBracket);
        }
        let base = (ring.field().p() as u128)
            .checked_pow(s)
            .ok_or_else(|| Error::InvalidParameter("p^s overflows".into()))?;
        Ok(BracketContext {
            ring: ring.clone(),
            base,
        })
    }

    pub fn ring(&self) -> &SkewRing {
        &self.ring
    }

    /// `[i]_s`, erroring when it leaves the 128-bit range.
    pub fn bracket(&self, i: u32) -> Result<u128> {
        let pow = self
            .base
            .checked_pow(i)
            .ok_or_else(|| Error::InvalidParameter(format!("[{i}]_s overflows 128 bits")))?;
        Ok((pow - 1) / (self.base - 1))
    }

    fn bracket_usize(&self, i: usize, cap: u64) -> Result<usize> {
        let b = self.bracket(i as u32)?;
        if b > cap as u128 {
            return Err(Error::BudgetExceeded(format!("[{i}]_s = {b} exceeds {cap}")));
        }
        Ok(b as usize)
    }

    /// Sparse image of `f` under `t^i -> x^[i]`.
    pub fn bracket_map(&self, f: &SkewPoly) -> Result<BracketPoly> {
        let mut terms = BTreeMap::new();
        for (i, &c) in f.coeffs().iter().enumerate() {
            if !c.is_zero() {
                terms.insert(self.bracket(i as u32)?, c);
            }
        }
        Ok(BracketPoly { terms })
    }

    /// The code generated by the bracket image of `g` inside
    /// `F_q[x] / (x^[n] - alpha)`. Fails with a verification error if the
    /// image does not divide `x^[n] - alpha`.
    pub fn bracket_code(&self, cspec: &ConstacyclicSpec, g: &SkewPoly) -> Result<LinearCode> {
        let (bspec, big) = self.bracket_spec(cspec, g)?;
        LinearCode::from_rows(&bspec.gen_matrix(&big)?)
    }

    /// Commutative spec of length `[n]` and the dense bracket image,
    /// after checking divisibility.
    fn bracket_spec(&self, cspec: &ConstacyclicSpec, g: &SkewPoly) -> Result<(ConstacyclicSpec, SkewPoly)> {
        self.check_ring(cspec)?;
        let n = cspec.len();
        if !g.is_monic() || !self.ring.right_divides_binomial(g, n, cspec.alpha()) {
            return Err(Error::NotRightDivisor { n });
        }
        let big_n = self.bracket_usize(n, DENSE_DEGREE_CAP)?;
        let big = self.bracket_map(g)?.to_dense(DENSE_DEGREE_CAP)?;
        let comm = SkewRing::commutative(self.ring.field());
        if !comm.right_divides_binomial(&big, big_n, cspec.alpha()) {
            return Err(Error::Verification(format!(
                "bracket image of {} does not divide x^{big_n} - alpha",
                self.ring.render(g)
            )));
        }
        Ok((ConstacyclicSpec::new(comm, big_n, cspec.alpha())?, big))
    }

    fn check_ring(&self, cspec: &ConstacyclicSpec) -> Result<()> {
        if cspec.ring() != &self.ring {
            return Err(Error::Mismatch);
        }
        Ok(())
    }

    /// Whether the bracket image of `g` divides `x^[n] - alpha`.
    pub fn divisibility_transfers(&self, cspec: &ConstacyclicSpec, g: &SkewPoly) -> Result<bool> {
        match self.bracket_spec(cspec, g) {
            Ok(_) => Ok(true),
            Err(Error::Verification(_)) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// Exact distances of the skew code and its bracket code.
    pub fn distance_transfer(&self, cspec: &ConstacyclicSpec, g: &SkewPoly, budget: u64) -> Result<TransferReport> {
        let skew = cspec.code(g)?;
        let d_skew = skew.code().min_weight_with(None, budget)?;
        let bcode = self.bracket_code(cspec, g)?;
        let d_bracket = bcode.min_weight_with(None, budget)?;
        // bracket codewords supported on the positions [0], [1], ..., [n-1]
        let n = cspec.len();
        let support: Vec<usize> = (0..n)
            .map(|i| self.bracket_usize(i, DENSE_DEGREE_CAP))
            .collect::<Result<_>>()?;
        let gen = bcode.generator();
        let outside: Vec<usize> = (0..bcode.len()).filter(|j| !support.contains(j)).collect();
        let combos = gen.select_columns(&outside).left_kernel();
        let sub_words = combos.mul(gen)?.select_columns(&support);
        let (d_support, witness) = if combos.rows() == 0 {
            (None, None)
        } else {
            let sub = LinearCode::from_rows(&sub_words)?;
            let word = sub.min_weight_codeword(budget)?;
            let w = word.iter().filter(|a| !a.is_zero()).count();
            (Some(w), Some(SkewPoly::new(word)))
        };
        let witness = witness.filter(|w| w.weight() == d_bracket);
        Ok(TransferReport {
            d_skew,
            d_bracket,
            holds: d_bracket <= d_skew,
            equality: d_bracket == d_skew,
            d_support,
            witness,
        })
    }

    /// `q^[k]` as an integer, if it fits.
    fn big_order(&self, k: usize) -> Result<Option<u128>> {
        let q = self.ring.field().order() as u128;
        let bk = self.bracket(k as u32)?;
        Ok(u32::try_from(bk).ok().and_then(|e| q.checked_pow(e)))
    }

    /// The size condition `q^[k]_s - 1 >= [n]_s`, in exact integers.
    pub fn size_condition(&self, k: usize, n: usize) -> Result<bool> {
        let bn = self.bracket(n as u32)?;
        Ok(match self.big_order(k)? {
            Some(qk) => qk - 1 >= bn,
            None => true,
        })
    }

    /// F_{q^[k]} with the embedding of F_q; its generator plays the role of
    /// omega.
    fn omega_field(&self, k: usize) -> Result<(FieldSpec, Embedding)> {
        let bk = self.bracket(k as u32)?;
        let m = u32::try_from(bk).map_err(|_| Error::FieldTooLarge {
            p: self.ring.field().p(),
            r: u64::MAX,
        })?;
        self.ring.field().extension(m)
    }

    /// Rank test of the `[n] x [n]` Vandermonde matrix on `1, w, ..., w^([n]-1)`
    /// with w a generator of F_{q^[k]}^*.
    pub fn vandermonde_full_rank(&self, k: usize, n: usize) -> Result<bool> {
        let size = self.bracket_usize(n, VANDERMONDE_CAP)?;
        let (ext, _) = self.omega_field(k)?;
        let w = ext.generator();
        let mut m = MatrixFq::zeros(&ext, size, size);
        for j in 0..size {
            let x = ext.pow(w, j as u64);
            let mut v = ext.one();
            for i in 0..size {
                m.set(i, j, v);
                v = ext.mul(v, x);
            }
        }
        Ok(m.rank() == size)
    }

    /// The BCH-style lower bound: `1 + ` the number of consecutive exponents
    /// `l, l + c, l + 2c, ...` with `omega^e` a root of the bracket image of
    /// `g`, where `omega` generates F_{q^[k]}^*, k = deg g.
    pub fn bch_bound(&self, cspec: &ConstacyclicSpec, g: &SkewPoly, c: u64, l: u64) -> Result<BchBound> {
        let roots = self.bracket_roots(cspec, g)?;
        let modulus = roots.group;
        if gcd(c % modulus, modulus) != 1 {
            return Err(Error::StrideNotCoprime { c, modulus });
        }
        Ok(roots.run(c, l))
    }

    /// Best bound over every offset and admissible stride.
    pub fn best_bch_bound(&self, cspec: &ConstacyclicSpec, g: &SkewPoly) -> Result<BchBound> {
        let roots = self.bracket_roots(cspec, g)?;
        let modulus = roots.group;
        if modulus > BCH_SCAN_CAP {
            return Err(Error::BudgetExceeded(format!("stride scan over a group of order {modulus}")));
        }
        let mut best = BchBound { delta: 1, c: 1, l: 0 };
        if roots.set.iter().all(|&r| !r) {
            return Ok(best);
        }
        if roots.set.iter().all(|&r| r) {
            best.delta = modulus as usize + 1;
            return Ok(best);
        }
        for c in (1..modulus).filter(|&c| gcd(c, modulus) == 1) {
            // walk the single cycle 0, c, 2c, ... starting just after a non-root
            let start = (0..modulus)
                .map(|i| (i * c) % modulus)
                .find(|&e| !roots.set[e as usize])
                .expect("some non-root");
            let mut run = 0u64;
            let mut run_start = 0u64;
            let mut e = start;
            for _ in 0..modulus {
                e = (e + c) % modulus;
                if roots.set[e as usize] {
                    if run == 0 {
                        run_start = e;
                    }
                    run += 1;
                    if run as usize + 1 > best.delta {
                        best = BchBound {
                            delta: run as usize + 1,
                            c,
                            l: run_start,
                        };
                    }
                } else {
                    run = 0;
                }
            }
        }
        Ok(best)
    }

    fn bracket_roots(&self, cspec: &ConstacyclicSpec, g: &SkewPoly) -> Result<RootSet> {
        self.check_ring(cspec)?;
        let k = g.degree().ok_or(Error::NotMonic)?;
        let n = cspec.len();
        if !self.size_condition(k, n)? {
            let lhs = self.big_order(k)?.map_or(u128::MAX, |v| v - 1);
            return Err(Error::SizeCondition {
                lhs,
                rhs: self.bracket(n as u32)?,
            });
        }
        let (ext, emb) = self.omega_field(k)?;
        let big = self.bracket_map(g)?.to_dense(DENSE_DEGREE_CAP)?;
        let comm = SkewRing::commutative(self.ring.field());
        let group = ext.order() - 1;
        let mut set = vec![false; group as usize];
        for e in comm.find_roots(&big, &emb)? {
            set[e as usize] = true;
        }
        Ok(RootSet { group, set })
    }
}

struct RootSet {
    group: u64,
    set: Vec<bool>,
}

impl RootSet {
    fn run(&self, c: u64, l: u64) -> BchBound {
        let mut len = 0u64;
        while len < self.group && self.set[((l as u128 + c as u128 * len as u128) % self.group as u128) as usize] {
            len += 1;
        }
        BchBound {
            delta: len as usize + 1,
            c,
            l,
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A lower bound `delta <= d` and the stride and offset achieving it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BchBound {
    pub delta: usize,
    pub c: u64,
    pub l: u64,
}

/// Distances on both sides of the bracket map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferReport {
    pub d_skew: usize,
    pub d_bracket: usize,
    pub holds: bool,
    pub equality: bool,
    /// Minimum weight of the bracket codewords supported on the bracket
    /// positions, if there are any.
    pub d_support: Option<usize>,
    /// The skew polynomial whose bracket image is such a codeword of
    /// weight `d_bracket`.
    pub witness: Option<SkewPoly>,
}

/// A sparse commutative polynomial, exponent to coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BracketPoly {
    terms: BTreeMap<u128, FieldElement>,
}

impl BracketPoly {
    pub fn terms(&self) -> impl Iterator<Item = (u128, FieldElement)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn weight(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> Option<u128> {
        self.terms.keys().next_back().copied()
    }

    pub fn to_dense(&self, cap: u64) -> Result<SkewPoly> {
        let deg = self.degree().unwrap_or(0);
        if deg > cap as u128 {
            return Err(Error::BudgetExceeded(format!("dense degree {deg} exceeds {cap}")));
        }
        let mut v = vec![FieldElement::ZERO; deg as usize + 1];
        for (&e, &c) in &self.terms {
            v[e as usize] = c;
        }
        Ok(SkewPoly::new(v))
    }
}

/// One checked instance in an MDS scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanInstance {
    pub n: usize,
    pub alpha: u64,
    pub g_digits: Vec<u64>,
    pub d_skew: usize,
    pub d_bracket: usize,
    pub delta: Option<usize>,
    pub mds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ScanReport {
    pub instances: Vec<ScanInstance>,
    pub violations: Vec<ScanInstance>,
}

/// For every nontrivial divisor g of `x^n - alpha` with `2 <= n <= n_max`
/// and alpha in `alphas`, checks that the bracket code is not MDS and that
/// distances transfer. Instances where the bound or the distance
/// inequality fails, or the bracket code is MDS, are listed as violations.
pub fn mds_scan(ring: &SkewRing, n_max: usize, alphas: &[FieldElement]) -> Result<ScanReport> {
    let ctx = BracketContext::new(ring)?;
    let mut report = ScanReport::default();
    for n in 2..=n_max {
        for &alpha in alphas {
            let cspec = ConstacyclicSpec::new(ring.clone(), n, alpha)?;
            let divisors = cspec.right_divisors(1, n - 1)?;
            let checked: Vec<(ScanInstance, bool)> = divisors
                .par_iter()
                .map(|g| scan_one(&ctx, &cspec, g))
                .collect::<Result<_>>()?;
            for (inst, bad) in checked {
                if bad {
                    report.violations.push(inst.clone());
                }
                report.instances.push(inst);
            }
        }
    }
    Ok(report)
}

fn scan_one(ctx: &BracketContext, cspec: &ConstacyclicSpec, g: &SkewPoly) -> Result<(ScanInstance, bool)> {
    let ring = ctx.ring();
    let n = cspec.len();
    let k = g.degree().expect("nonzero");
    let t = ctx.distance_transfer(cspec, g, MIN_WEIGHT_BUDGET)?;
    let delta = if ctx.size_condition(k, n)? {
        Some(ctx.best_bch_bound(cspec, g)?.delta)
    } else {
        None
    };
    let mds = t.d_bracket == ctx.bracket(k as u32)? as usize + 1;
    let inst = ScanInstance {
        n,
        alpha: ring.field().to_digit(cspec.alpha())?,
        g_digits: ring.to_digits(g)?,
        d_skew: t.d_skew,
        d_bracket: t.d_bracket,
        delta,
        mds,
    };
    let bad = mds || !t.holds || delta.is_some_and(|d| d > t.d_skew);
    Ok((inst, bad))
}

impl LinearCode {
    /// A nonzero codeword of minimum weight, by walking the projective
    /// codewords sequentially.
    pub fn min_weight_codeword(&self, budget: u64) -> Result<Vec<FieldElement>> {
        let (words, _) = self.route_costs();
        if words > budget as u128 {
            return Err(Error::BudgetExceeded(format!(
                "{words} projective codewords exceed the budget of {budget}"
            )));
        }
        let f = self.field();
        let elems: Vec<FieldElement> = f.elements().collect();
        let q = elems.len() as u64;
        let k = self.dim();
        let gen = self.generator();
        let mut best: Option<(usize, Vec<FieldElement>)> = None;
        for lead in 0..k {
            let free = k - 1 - lead;
            for idx in 0..q.pow(free as u32) {
                let mut word = gen.row(lead).to_vec();
                let mut x = idx;
                for t in 0..free {
                    let c = elems[(x % q) as usize];
                    x /= q;
                    if c.is_zero() {
                        continue;
                    }
                    for (a, &b) in word.iter_mut().zip(gen.row(lead + 1 + t)) {
                        *a = f.add(*a, f.mul(c, b));
                    }
                }
                let w = word.iter().filter(|a| !a.is_zero()).count();
                if best.as_ref().is_none_or(|(bw, _)| w < *bw) {
                    best = Some((w, word));
                }
            }
        }
        let (w, word) = best.expect("k >= 1");
        debug_assert_eq!(w, self.min_weight_with(Some(WeightRoute::Codewords), budget)?);
        Ok(word)
    }
}
