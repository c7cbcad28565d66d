//! Companion matrices, orbits of the semi-linear map `tau = Theta o T_g`
//! on projective space, orbit parity-check matrices, and skew
//! quasi-twisted (SQT) codes built from several orbits.
//!
//! Shorthand: `[a_0 a_1 ... a_{k-1}]^N + P_2^{n_2} + ...`, where the
//! bracket lists the companion row of `g = x^k - sum a_i x^i` and every
//! other group the coordinates of a point, all as single-character digits.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::linear_code::{LinearCode, MatrixFq, SemiLinearVectorMap};
use crate::polynomial::{SkewPoly, SkewRing};
use crate::skew_constacyclic::ConstacyclicSpec;

/// Largest `q^k` for which the projective space is scanned exhaustively.
pub const CENSUS_LIMIT: u64 = 1 << 26;

/// `k x k` companion matrix, ones on the superdiagonal and last row
/// `(-g_0, ..., -g_{k-1})`.
pub fn companion(ring: &SkewRing, g: &SkewPoly) -> Result<MatrixFq> {
    if !g.is_monic() {
        return Err(Error::NotMonic);
    }
    let k = g.degree().expect("monic is nonzero");
    if k == 0 {
        return Err(Error::InvalidParameter("g must have positive degree".into()));
    }
    let f = ring.field();
    let mut t = MatrixFq::zeros(f, k, k);
    for i in 0..k - 1 {
        t.set(i, i + 1, FieldElement::ONE);
    }
    for j in 0..k {
        t.set(k - 1, j, f.neg(g.coeff(j)));
    }
    Ok(t)
}

/// `tau: v -> theta(v) * T_g`.
pub fn tau(ring: &SkewRing, g: &SkewPoly) -> Result<SemiLinearVectorMap> {
    SemiLinearVectorMap::new(ring.aut().clone(), companion(ring, g)?)
}

/// A point of `P^{k-1}(F_q)` scaled so its first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ProjectivePoint {
    coords: Vec<FieldElement>,
}

impl ProjectivePoint {
    pub fn new(field: &FieldSpec, coords: &[FieldElement]) -> Result<Self> {
        let lead = coords
            .iter()
            .find(|a| !a.is_zero())
            .ok_or_else(|| Error::InvalidParameter("the zero vector is not a point".into()))?;
        let inv = field.inv(*lead)?;
        Ok(ProjectivePoint {
            coords: coords.iter().map(|&a| field.mul(inv, a)).collect(),
        })
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Packed index `sum coords[i] * q^i`, used for canonical ordering.
    fn index(&self, q: u64) -> u64 {
        self.coords.iter().rev().fold(0, |acc, c| acc * q + c.index())
    }
}

/// `[P], [P tau], ..., [P tau^(L-1)]` with L the projective orbit length.
pub fn orbit(map: &SemiLinearVectorMap, p: &ProjectivePoint, cap: usize) -> Result<Vec<ProjectivePoint>> {
    let f = map.aut().field();
    let mut out = vec![p.clone()];
    let mut v = map.apply(p.coords())?;
    loop {
        let pt = ProjectivePoint::new(f, &v)?;
        if &pt == p {
            return Ok(out);
        }
        if out.len() >= cap {
            return Err(Error::BudgetExceeded(format!("orbit longer than {cap}")));
        }
        out.push(pt);
        v = map.apply(&v)?;
    }
}

/// The literal vectors `v, v tau, ..., v tau^(len-1)`.
pub fn orbit_vectors(map: &SemiLinearVectorMap, v: &[FieldElement], len: usize) -> Result<Vec<Vec<FieldElement>>> {
    let mut out = Vec::with_capacity(len);
    let mut cur = v.to_vec();
    for _ in 0..len {
        let next = map.apply(&cur)?;
        out.push(cur);
        cur = next;
    }
    Ok(out)
}

fn unit(field: &FieldSpec, k: usize) -> Vec<FieldElement> {
    let mut e = vec![field.zero(); k];
    e[0] = field.one();
    e
}

fn columns_matrix(field: &FieldSpec, k: usize, cols: &[Vec<FieldElement>]) -> MatrixFq {
    let mut m = MatrixFq::zeros(field, k, cols.len());
    for (j, c) in cols.iter().enumerate() {
        for (i, &a) in c.iter().enumerate() {
            m.set(i, j, a);
        }
    }
    m
}

/// Parity-check matrix of the skew constacyclic code generated by `g`:
/// column j is `(P tau^j)^t` with `P = (1, 0, ..., 0)`.
pub fn pcm(cspec: &ConstacyclicSpec, g: &SkewPoly) -> Result<MatrixFq> {
    let ring = cspec.ring();
    let n = cspec.len();
    if !g.is_monic() {
        return Err(Error::NotMonic);
    }
    if !ring.right_divides_binomial(g, n, cspec.alpha()) {
        return Err(Error::NotRightDivisor { n });
    }
    let k = g.degree().expect("monic");
    let map = tau(ring, g)?;
    let cols = orbit_vectors(&map, &unit(ring.field(), k), n)?;
    Ok(columns_matrix(ring.field(), k, &cols))
}

/// Data of an SQT code: generator polynomial `g` of degree k, the first
/// block length `N` (orbit of `(1,0,...,0)`), and further points with
/// their block lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqtSpec {
    ring: SkewRing,
    g: SkewPoly,
    alpha: FieldElement,
    points: Vec<Vec<FieldElement>>,
    blocks: Vec<usize>,
}

/// Serializable form of an [`SqtSpec`]. `g_digits` are the ascending
/// coefficients of g.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SqtExport {
    pub g_digits: Vec<u64>,
    #[serde(rename = "N")]
    pub n_block: usize,
    pub alpha_digit: u64,
    pub points: Vec<Vec<u64>>,
    pub blocks: Vec<usize>,
}

impl SqtSpec {
    /// `points` excludes the implicit first point; `blocks[0]` is `N` and
    /// `blocks[i]` belongs to `points[i-1]`. Every declared block length
    /// must equal the projective orbit length of its point, and the first
    /// orbit must close with `P tau^N = alpha P`.
    pub fn new(ring: SkewRing, g: SkewPoly, points: Vec<Vec<FieldElement>>, blocks: Vec<usize>) -> Result<Self> {
        let k = g.degree().ok_or(Error::NotMonic)?;
        if blocks.len() != points.len() + 1 {
            return Err(Error::LengthMismatch {
                expected: points.len() + 1,
                got: blocks.len(),
            });
        }
        let f = ring.field().clone();
        for p in &points {
            if p.len() != k {
                return Err(Error::LengthMismatch {
                    expected: k,
                    got: p.len(),
                });
            }
        }
        let map = tau(&ring, &g)?;
        let e0 = unit(&f, k);
        let cap = total_points(f.order(), k).unwrap_or(u64::MAX).min(1 << 32) as usize;
        for (b, v) in std::iter::once(&e0).chain(points.iter()).enumerate() {
            let pt = ProjectivePoint::new(&f, v)?;
            let found = orbit(&map, &pt, cap)?.len();
            if found != blocks[b] {
                return Err(Error::OrbitLengthMismatch {
                    block: b,
                    found,
                    declared: blocks[b],
                });
            }
        }
        let n = blocks[0];
        let alpha = ring
            .binomial_constant(&g, n)
            .ok_or_else(|| Error::Verification(format!("orbit of P_1 closes but g does not divide any x^{n} - c")))?;
        Ok(SqtSpec {
            ring,
            g,
            alpha,
            points,
            blocks,
        })
    }

    /// Parses the shorthand over `ring`.
    pub fn parse(ring: SkewRing, text: &str) -> Result<Self> {
        let f = ring.field().clone();
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut groups = compact.split('+');
        let first = groups.next().unwrap_or_default();
        let body = first
            .strip_prefix('[')
            .ok_or_else(|| Error::Shorthand(format!("`{first}` must start with `[`")))?;
        let (gdigits, glen) = body
            .split_once("]^")
            .ok_or_else(|| Error::Shorthand(format!("`{first}` must look like [digits]^N")))?;
        let a = parse_digits(&f, gdigits)?;
        let k = a.len();
        let mut coeffs: Vec<FieldElement> = a.iter().map(|&x| f.neg(x)).collect();
        coeffs.push(FieldElement::ONE);
        let g = SkewPoly::new(coeffs);
        let mut blocks = vec![parse_len(glen)?];
        let mut points = Vec::new();
        for grp in groups {
            let (d, l) = grp
                .split_once('^')
                .ok_or_else(|| Error::Shorthand(format!("`{grp}` must look like digits^len")))?;
            let p = parse_digits(&f, d)?;
            if p.len() != k {
                return Err(Error::Shorthand(format!(
                    "point `{d}` has {} coordinates, expected {k}",
                    p.len()
                )));
            }
            points.push(p);
            blocks.push(parse_len(l)?);
        }
        Self::new(ring, g, points, blocks)
    }

    /// Canonical shorthand; `parse(emit(s)) == s`.
    pub fn emit(&self) -> Result<String> {
        let f = self.ring.field();
        let k = self.k();
        let a: Vec<FieldElement> = (0..k).map(|i| f.neg(self.g.coeff(i))).collect();
        let mut s = format!("[{}]^{}", emit_digits(f, &a)?, self.blocks[0]);
        for (p, l) in self.points.iter().zip(&self.blocks[1..]) {
            s.push_str(&format!("+{}^{}", emit_digits(f, p)?, l));
        }
        Ok(s)
    }

    pub fn ring(&self) -> &SkewRing {
        &self.ring
    }

    pub fn g(&self) -> &SkewPoly {
        &self.g
    }

    pub fn k(&self) -> usize {
        self.g.degree().expect("nonzero")
    }

    /// Length `N` of the first block.
    pub fn block_len(&self) -> usize {
        self.blocks[0]
    }

    pub fn alpha(&self) -> FieldElement {
        self.alpha
    }

    pub fn points(&self) -> &[Vec<FieldElement>] {
        &self.points
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The `k x n` matrix of concatenated orbit columns.
    pub fn matrix(&self) -> Result<MatrixFq> {
        let f = self.ring.field();
        let k = self.k();
        let map = tau(&self.ring, &self.g)?;
        let e0 = unit(f, k);
        let mut cols = Vec::with_capacity(self.len());
        for (v, &l) in std::iter::once(&e0).chain(self.points.iter()).zip(&self.blocks) {
            cols.extend(orbit_vectors(&map, v, l)?);
        }
        Ok(columns_matrix(f, k, &cols))
    }

    /// The code generated by [`SqtSpec::matrix`].
    pub fn code(&self) -> Result<LinearCode> {
        LinearCode::from_rows(&self.matrix()?)
    }

    pub fn export(&self) -> Result<SqtExport> {
        let f = self.ring.field();
        Ok(SqtExport {
            g_digits: self.ring.to_digits(&self.g)?,
            n_block: self.blocks[0],
            alpha_digit: f.to_digit(self.alpha)?,
            points: self
                .points
                .iter()
                .map(|p| p.iter().map(|&a| f.to_digit(a)).collect())
                .collect::<Result<_>>()?,
            blocks: self.blocks.clone(),
        })
    }

    pub fn import(ring: SkewRing, e: &SqtExport) -> Result<Self> {
        let f = ring.field().clone();
        let g = ring.from_digits(&e.g_digits)?;
        let points = e
            .points
            .iter()
            .map(|p| p.iter().map(|&d| f.from_digit(d)).collect())
            .collect::<Result<_>>()?;
        let s = Self::new(ring, g, points, e.blocks.clone())?;
        if s.blocks[0] != e.n_block || f.to_digit(s.alpha)? != e.alpha_digit {
            return Err(Error::InvalidParameter("N or alpha disagree with g".into()));
        }
        Ok(s)
    }

    /// The 1-generator form. Returns `(g_1, ..., g_m)` in
    /// `R / R(x^N - alpha^-1)` such that the code is spanned by the tuples
    /// `x^j (g_1, ..., g_m)`. Needs block lengths all equal to N, point
    /// coordinates in the fixed field, and `theta^j(alpha) = alpha`
    /// whenever coordinate j of a point is nonzero.
    pub fn one_generator(&self) -> Result<OneGenerator> {
        let f = self.ring.field();
        let aut = self.ring.aut();
        let k = self.k();
        let n = self.block_len();
        if let Some(b) = self.blocks.iter().position(|&l| l != n) {
            return Err(Error::InvalidParameter(format!(
                "block {b} has length {}, the 1-generator form needs all blocks of length {n}",
                self.blocks[b]
            )));
        }
        for (i, p) in self.points.iter().enumerate() {
            if p.iter().any(|&a| !aut.is_fixed(a)) {
                return Err(Error::PointOutsideFixedField(i + 1));
            }
            for (j, a) in p.iter().enumerate() {
                if !a.is_zero() && aut.apply(j as i64, self.alpha) != self.alpha {
                    return Err(Error::TwistNotFixed { point: i + 1, coord: j });
                }
            }
        }
        let cspec = ConstacyclicSpec::new(self.ring.clone(), n, self.alpha)?;
        let h = cspec.dual_generator(&self.g)?;
        // extend c periodically: c_{t+N} = theta^t(alpha) c_t
        let mut ext = h.to_vector(n);
        for t in 0..k {
            let v = f.mul(aut.apply(t as i64, self.alpha), ext[t]);
            ext.push(v);
        }
        let mut residues = vec![h];
        for p in &self.points {
            let coeffs: Vec<FieldElement> = (0..n)
                .map(|t| {
                    p.iter().enumerate().fold(f.zero(), |acc, (j, &l)| {
                        f.add(acc, f.mul(l, ext[t + j]))
                    })
                })
                .collect();
            residues.push(SkewPoly::new(coeffs));
        }
        Ok(OneGenerator {
            ring: self.ring.clone(),
            n,
            modulus_constant: f.inv(self.alpha)?,
            residues,
        })
    }
}

/// Generator tuple of a 1-generator module code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneGenerator {
    pub ring: SkewRing,
    pub n: usize,
    /// The residues live modulo `x^n - modulus_constant`.
    pub modulus_constant: FieldElement,
    pub residues: Vec<SkewPoly>,
}

impl OneGenerator {
    /// The code spanned by `x^j (g_1, ..., g_m)`, `0 <= j < n`.
    pub fn code(&self) -> Result<LinearCode> {
        let f = self.ring.field();
        let m = self.residues.len();
        let mut rows = Vec::with_capacity(self.n);
        let mut cur = self.residues.clone();
        let x = SkewPoly::monomial(f.one(), 1);
        for _ in 0..self.n {
            let mut row = Vec::with_capacity(m * self.n);
            for r in &cur {
                row.extend(r.to_vector(self.n));
            }
            rows.push(row);
            cur = cur
                .iter()
                .map(|r| self.ring.mod_reduce(&self.ring.mul(&x, r), self.n, self.modulus_constant))
                .collect::<Result<_>>()?;
        }
        LinearCode::from_rows(&MatrixFq::from_rows(f, &rows)?)
    }
}

fn parse_len(s: &str) -> Result<usize> {
    let v: usize = s
        .parse()
        .map_err(|_| Error::Shorthand(format!("`{s}` is not a block length")))?;
    if v == 0 {
        return Err(Error::Shorthand("block length 0".into()));
    }
    Ok(v)
}

fn parse_digits(f: &FieldSpec, s: &str) -> Result<Vec<FieldElement>> {
    if s.is_empty() {
        return Err(Error::Shorthand("empty digit group".into()));
    }
    s.chars()
        .map(|c| {
            let d = c
                .to_digit(36)
                .ok_or_else(|| Error::Shorthand(format!("`{c}` is not a digit")))?;
            f.from_digit(d as u64)
        })
        .collect()
}

fn emit_digits(f: &FieldSpec, v: &[FieldElement]) -> Result<String> {
    v.iter()
        .map(|&a| {
            let d = f.to_digit(a)?;
            char::from_digit(d as u32, 36).ok_or(Error::DigitOutOfRange { digit: d, q: 36 })
        })
        .collect()
}

/// `(q^k - 1) / (q - 1)` if it fits.
pub fn total_points(q: u64, k: usize) -> Option<u64> {
    let qk = q.checked_pow(k as u32)?;
    Some((qk - 1) / (q - 1))
}

/// Partition of `P^{k-1}(F_q)` into tau-orbits. Each orbit is listed by
/// its smallest point in the canonical order (packed index) together with
/// its length; orbits come in order of their representatives.
pub fn orbit_census(map: &SemiLinearVectorMap) -> Result<Vec<(ProjectivePoint, usize)>> {
    let f = map.aut().field().clone();
    let k = map.dim();
    let q = f.order();
    let size = q
        .checked_pow(k as u32)
        .filter(|&s| s <= CENSUS_LIMIT)
        .ok_or_else(|| Error::BudgetExceeded(format!("projective space over F_{q} of dimension {}", k - 1)))?;
    let elems: Vec<FieldElement> = f.elements().collect();
    let mut seen = vec![false; size as usize];
    let mut out = Vec::new();
    for idx in 1..size {
        if seen[idx as usize] {
            continue;
        }
        let mut coords = Vec::with_capacity(k);
        let mut x = idx;
        for _ in 0..k {
            coords.push(elems[(x % q) as usize]);
            x /= q;
        }
        // only normalized vectors stand for points
        if coords.iter().find(|a| !a.is_zero()) != Some(&FieldElement::ONE) {
            continue;
        }
        let pt = ProjectivePoint { coords };
        let orb = orbit(map, &pt, size as usize)?;
        for o in &orb {
            seen[o.index(q) as usize] = true;
        }
        out.push((pt, orb.len()));
    }
    Ok(out)
}

/// Search in the manner of the original SQT program: take the orbit of
/// `(1,0,...,0)` (which must have length `n`) and `m - 1` further orbits
/// of length `n`. Candidate orbits are taken in canonical order, or in an
/// order shuffled by `seed`.
pub fn sqt_search(ring: &SkewRing, g: &SkewPoly, m: usize, n: usize, seed: Option<u64>) -> Result<SqtSpec> {
    let map = tau(ring, g)?;
    let f = ring.field();
    let k = g.degree().ok_or(Error::NotMonic)?;
    let e0 = ProjectivePoint::new(f, &unit(f, k))?;
    let census = orbit_census(&map)?;
    let first = orbit(&map, &e0, usize::MAX)?.len();
    if first != n {
        return Err(Error::OrbitLengthMismatch {
            block: 0,
            found: first,
            declared: n,
        });
    }
    let mut candidates: Vec<&ProjectivePoint> = census
        .iter()
        .filter(|(p, l)| *l == n && *p != e0)
        .map(|(p, _)| p)
        .collect();
    if let Some(s) = seed {
        candidates.shuffle(&mut ChaCha8Rng::seed_from_u64(s));
    }
    if candidates.len() + 1 < m {
        return Err(Error::NotEnoughOrbits {
            n,
            needed: m,
            found: candidates.len() + 1,
        });
    }
    let points = candidates[..m - 1].iter().map(|p| p.coords.clone()).collect();
    SqtSpec::new(ring.clone(), g.clone(), points, vec![n; m])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(p: u64, r: u32, s: u32) -> SkewRing {
        SkewRing::frobenius(&FieldSpec::new(p, r, None).unwrap(), s).unwrap()
    }

    fn digits(f: &FieldSpec, d: &[u64]) -> Vec<FieldElement> {
        d.iter().map(|&x| f.from_digit(x).unwrap()).collect()
    }

    #[test]
    fn companion_of_paper_g() {
        let r = ring(2, 2, 1);
        let g = r.from_digits(&[1, 3, 1, 0, 1]).unwrap();
        let t = companion(&r, &g).unwrap();
        assert_eq!(t.to_digit_rows().unwrap()[3], vec![1, 3, 1, 0]);
        assert_eq!(t.to_digit_rows().unwrap()[0], vec![0, 1, 0, 0]);
        let lin = r.from_digits(&[3, 1]).unwrap();
        // g = x - a with a = w^2 over F_4 (characteristic 2: -a = a)
        assert_eq!(companion(&r, &lin).unwrap().to_digit_rows().unwrap(), vec![vec![3]]);
        let b = SkewRing::commutative(&FieldSpec::prime(2).unwrap());
        let x2 = b.from_digits(&[0, 0, 1]).unwrap();
        assert_eq!(companion(&b, &x2).unwrap().to_digit_rows().unwrap()[1], vec![0, 0]);
        assert_eq!(companion(&r, &r.from_digits(&[1, 2]).unwrap()), Err(Error::NotMonic));
    }

    #[test]
    fn f8_orbit_of_length_seven() {
        let r = ring(2, 3, 2);
        let f = r.field().clone();
        let s = SqtSpec::parse(r.clone(), "[4130]^7+0501^7").unwrap();
        let map = tau(&r, s.g()).unwrap();
        let p = ProjectivePoint::new(&f, &digits(&f, &[0, 5, 0, 1])).unwrap();
        assert_eq!(orbit(&map, &p, 1000).unwrap().len(), 7);
        assert_eq!(f.to_digit(s.alpha()).unwrap(), 4);
        assert_eq!(s.emit().unwrap(), "[4130]^7+0501^7");
    }

    #[test]
    fn f9_orbit_lengths() {
        let r = ring(3, 2, 1);
        let f = r.field().clone();
        let s = SqtSpec::parse(r.clone(), "[5418]^5+1681^10+4741^10").unwrap();
        let map = tau(&r, s.g()).unwrap();
        let lens: Vec<usize> = [[1, 0, 0, 0], [1, 6, 8, 1], [4, 7, 4, 1]]
            .iter()
            .map(|d| orbit(&map, &ProjectivePoint::new(&f, &digits(&f, d)).unwrap(), 1000).unwrap().len())
            .collect();
        assert_eq!(lens, vec![5, 10, 10]);
    }

    #[test]
    fn identity_map_fixes_every_point() {
        let f = FieldSpec::new(2, 2, None).unwrap();
        let id = SemiLinearVectorMap::new(crate::field::Automorphism::identity(&f), MatrixFq::identity(&f, 3)).unwrap();
        let census = orbit_census(&id).unwrap();
        assert_eq!(census.len(), 21);
        assert!(census.iter().all(|(_, l)| *l == 1));
    }

    #[test]
    fn paper_pcm_4x7() {
        let r = ring(2, 2, 1);
        let f = r.field().clone();
        let g = r.from_digits(&[1, 3, 1, 0, 1]).unwrap();
        let c = ConstacyclicSpec::new(r.clone(), 7, f.generator()).unwrap();
        let h = pcm(&c, &g).unwrap();
        assert_eq!(
            h.to_digit_rows().unwrap(),
            vec![
                vec![1, 0, 0, 0, 1, 0, 1],
                vec![0, 1, 0, 0, 3, 1, 3],
                vec![0, 0, 1, 0, 1, 2, 0],
                vec![0, 0, 0, 1, 0, 1, 3],
            ]
        );
        let gm = c.gen_matrix(&g).unwrap();
        assert_eq!(
            gm.to_digit_rows().unwrap(),
            vec![vec![1, 3, 1, 0, 1, 0, 0], vec![0, 1, 2, 1, 0, 1, 0], vec![0, 0, 1, 3, 1, 0, 1]]
        );
        assert!(gm.mul(&h.transpose()).unwrap().is_zero());
    }

    #[test]
    fn shorthand_errors() {
        let r = ring(2, 2, 1);
        for bad in ["1313]^5", "[1313]5", "[1313]^5+331^10", "[1314]^5", "[1313]^0", "[1313]^5+3331"] {
            assert!(SqtSpec::parse(r.clone(), bad).is_err(), "{bad}");
        }
        assert!(matches!(
            SqtSpec::parse(r.clone(), "[1313]^4"),
            Err(Error::OrbitLengthMismatch { block: 0, .. })
        ));
    }

    #[test]
    fn not_enough_orbits() {
        let r = ring(2, 3, 2);
        let s = SqtSpec::parse(r.clone(), "[4130]^7").unwrap();
        let err = sqt_search(&r, s.g(), 1000, 7, None).unwrap_err();
        assert!(err.to_string().starts_with("There are not enough orbits of length 7"));
        let found = sqt_search(&r, s.g(), 2, 7, Some(3)).unwrap();
        assert_eq!(found.len(), 14);
    }

    #[test]
    fn export_round_trip() {
        let r = ring(2, 3, 2);
        let s = SqtSpec::parse(r.clone(), "[4130]^7+0501^7").unwrap();
        let e = s.export().unwrap();
        assert_eq!(e.n_block, 7);
        assert_eq!(e.alpha_digit, 4);
        assert_eq!(SqtSpec::import(r, &e).unwrap(), s);
    }
}
