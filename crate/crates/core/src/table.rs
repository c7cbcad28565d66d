//! Reference SQT codes with their printed parameters, and the machinery
//! to rebuild each one from its shorthand and compare.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::linear_code::{LinearCode, MatrixFq};
use crate::orbit_sqt::{orbit_vectors, tau, SqtSpec};
use crate::polynomial::{SkewPoly, SkewRing};

/// One printed row: `[n, k, d]_q`, the shorthand, N, alpha (digit) and
/// the image exponent `p^s` of the Frobenius power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub q: u64,
    pub shorthand: &'static str,
    pub block: usize,
    pub alpha_digit: u64,
    pub theta: u64,
}

const fn row(
    n: usize,
    k: usize,
    d: usize,
    q: u64,
    shorthand: &'static str,
    block: usize,
    alpha_digit: u64,
    theta: u64,
) -> TableRow {
    TableRow {
        n,
        k,
        d,
        q,
        shorthand,
        block,
        alpha_digit,
        theta,
    }
}

pub const TABLE: [TableRow; 18] = [
    row(21, 6, 12, 4, "[131313]^7+220211^14", 7, 2, 2),
    row(25, 4, 17, 4, "[1313]^5+3331^10+2310^10", 5, 2, 2),
    row(35, 6, 22, 4, "[131313]^7+123210^14+113110^14", 7, 2, 2),
    row(35, 4, 24, 4, "[1212]^5+0321^10+1031^10+1301^10", 5, 3, 2),
    row(40, 4, 28, 4, "[1313]^5+0321^10+3301^10+1301^10+1010^5", 5, 2, 2),
    row(45, 4, 32, 4, "[1212]^5+2100^10+1311^10+0101^10+3321^10", 5, 2, 2),
    row(49, 6, 32, 4, "[131313]^7+233101^14+312221^14+231310^14", 7, 2, 2),
    row(50, 4, 36, 4, "[1212]^5+1231^10+1101^10+2231^10+3321^10+3100^5", 5, 3, 2),
    row(55, 4, 36, 4, "[1313]^5+2011^10+1131^10+2221^10+1331^10+0310^5", 5, 2, 2),
    row(60, 4, 44, 4, "[1313]^5+1110^10+0231^10+0031^10+3111^10+3311^10+2021^5", 5, 2, 2),
    row(65, 4, 48, 4, "[1212]^5+2201^10+1011^10+2131^10+1310^10+0211^10+3100^5+3031^5", 5, 3, 2),
    row(
        85,
        4,
        64,
        4,
        "[1212]^5+3211^10+0011^10+3301^10+1301^10+1331^10+3121^10+1331^10+1010^5+0210^5",
        5,
        3,
        2,
    ),
    row(34, 3, 28, 8, "[175]^4+721^12+610^12+111^6", 4, 2, 4),
    row(50, 4, 41, 8, "[6156]^5+5331^15+5610^15+6321^15", 5, 2, 4),
    row(65, 5, 56, 8, "[6156]^5+5541^15+7310^15+3110^15+1531^15", 5, 1, 2),
    row(25, 4, 19, 9, "[4518]^5+1681^10+4741^10", 5, 6, 3),
    row(30, 4, 24, 9, "[4518]^5+4801^10+8771^10+5810^5", 5, 6, 3),
    row(42, 4, 34, 9, "[2030]^6+8121^12+6821^12+0531^12", 6, 7, 3),
];

/// The other irreducible cubic over GF(2), tried when a row over F_8
/// fails under the default modulus.
pub const F8_ALTERNATE_MODULUS: [u64; 4] = [1, 0, 1, 1];

impl TableRow {
    /// `(p, r, s)` of the row's field and automorphism.
    pub fn field_params(&self) -> Result<(u64, u32, u32)> {
        let (p, r) = match self.q {
            4 => (2, 2),
            8 => (2, 3),
            9 => (3, 2),
            q => return Err(Error::InvalidParameter(format!("no table field of order {q}"))),
        };
        let mut s = 0;
        let mut t = 1;
        while t < self.theta {
            t *= p;
            s += 1;
        }
        if t != self.theta {
            return Err(Error::InvalidParameter(format!("theta = {} is not a power of {p}", self.theta)));
        }
        Ok((p, r, s))
    }

    /// The bracket group with its first two digits exchanged; this reading
    /// differs from the printed one for the F_9 rows.
    pub fn swapped_reading(&self) -> String {
        let s = self.shorthand;
        let mut chars: Vec<char> = s.chars().collect();
        chars.swap(1, 2);
        chars.into_iter().collect()
    }
}

/// How a row was read when rebuilding it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reading {
    /// Printed shorthand, default modulus, `s` from the theta column.
    Printed,
    /// Printed shorthand under [`F8_ALTERNATE_MODULUS`].
    AlternateModulus,
    /// First two bracket digits exchanged.
    SwappedBracket,
    /// Over F_8 with theta column 4, the automorphism `a -> a^2` instead.
    AlternateAutomorphism,
}

/// Outcome of rebuilding one row. `n`, `k` and `d` describe the literal
/// column matrix even when the orbit check fails; `error` records why the
/// strict construction was rejected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowOutcome {
    pub reading: Reading,
    pub shorthand: String,
    pub modulus: Vec<u64>,
    pub s: u32,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub d: Option<usize>,
    pub alpha_digit: Option<u64>,
    pub error: Option<String>,
}

impl RowOutcome {
    /// Strict construction succeeded and `[n, k, d]` agree.
    pub fn matches(&self, row: &TableRow) -> bool {
        self.error.is_none() && self.nk_matches(row) && self.d == Some(row.d)
    }

    pub fn nk_matches(&self, row: &TableRow) -> bool {
        self.error.is_none() && self.n == Some(row.n) && self.k == Some(row.k)
    }

    pub fn d_matches(&self, row: &TableRow) -> bool {
        self.error.is_none() && self.d == Some(row.d)
    }
}

/// Rebuilds `shorthand` in the field of `row`, optionally with an explicit
/// modulus or Frobenius exponent, and computes its exact parameters.
pub fn rebuild(row: &TableRow, reading: Reading, shorthand: &str, modulus: Option<&[u64]>, s: Option<u32>) -> RowOutcome {
    let mut out = RowOutcome {
        reading,
        shorthand: shorthand.to_string(),
        modulus: Vec::new(),
        s: 0,
        n: None,
        k: None,
        d: None,
        alpha_digit: None,
        error: None,
    };
    let run = |out: &mut RowOutcome| -> Result<()> {
        let (p, r, s0) = row.field_params()?;
        let s = s.unwrap_or(s0);
        out.s = s;
        let f = FieldSpec::new(p, r, modulus)?;
        out.modulus = f.modulus().to_vec();
        let ring = SkewRing::frobenius(&f, s)?;
        let (g, points, blocks) = parse_shorthand(&f, shorthand)?;
        let m = literal_matrix(&ring, &g, &points, &blocks)?;
        let code = LinearCode::from_rows(&m)?;
        out.n = Some(code.len());
        out.k = Some(code.dim());
        out.d = Some(code.min_weight()?);
        out.alpha_digit = ring
            .binomial_constant(&g, blocks[0])
            .map(|a| f.to_digit(a))
            .transpose()?;
        SqtSpec::new(ring, g, points, blocks)?;
        Ok(())
    };
    if let Err(e) = run(&mut out) {
        out.error = Some(e.to_string());
    }
    out
}

/// The readings tried for a row, in order, stopping at the first exact
/// match: the printed string; (F_8) the alternate modulus; (rows printed
/// with `[4518]`) the swapped bracket; (F_8, theta 4) `s = 1`.
pub fn reproduce(row: &TableRow) -> Vec<RowOutcome> {
    let mut tries = vec![rebuild(row, Reading::Printed, row.shorthand, None, None)];
    let done = |t: &[RowOutcome]| t.last().is_some_and(|o| o.matches(row));
    if row.q == 8 && !done(&tries) {
        tries.push(rebuild(row, Reading::AlternateModulus, row.shorthand, Some(&F8_ALTERNATE_MODULUS), None));
    }
    if row.shorthand.starts_with("[4518]") && !done(&tries) {
        tries.push(rebuild(row, Reading::SwappedBracket, &row.swapped_reading(), None, None));
    }
    if row.q == 8 && row.theta == 4 && !done(&tries) {
        tries.push(rebuild(row, Reading::AlternateAutomorphism, row.shorthand, None, Some(1)));
    }
    tries
}

type Parsed = (SkewPoly, Vec<Vec<FieldElement>>, Vec<usize>);

/// Shorthand split into g, points and block lengths without any orbit
/// validation. The strict parser is [`SqtSpec::parse`].
fn parse_shorthand(f: &FieldSpec, text: &str) -> Result<Parsed> {
    let bad = || Error::Shorthand(text.to_string());
    let digits = |s: &str| -> Result<Vec<FieldElement>> {
        s.chars()
            .map(|c| f.from_digit(c.to_digit(36).ok_or_else(bad)? as u64))
            .collect()
    };
    let mut groups = text.split('+');
    let first = groups.next().ok_or_else(bad)?;
    let (gd, gl) = first.strip_prefix('[').and_then(|b| b.split_once("]^")).ok_or_else(bad)?;
    let mut coeffs: Vec<FieldElement> = digits(gd)?.into_iter().map(|a| f.neg(a)).collect();
    coeffs.push(f.one());
    let mut blocks = vec![gl.parse().map_err(|_| bad())?];
    let mut points = Vec::new();
    for grp in groups {
        let (d, l) = grp.split_once('^').ok_or_else(bad)?;
        points.push(digits(d)?);
        blocks.push(l.parse().map_err(|_| bad())?);
    }
    Ok((SkewPoly::new(coeffs), points, blocks))
}

fn literal_matrix(ring: &SkewRing, g: &SkewPoly, points: &[Vec<FieldElement>], blocks: &[usize]) -> Result<MatrixFq> {
    let f = ring.field();
    let k = g.degree().ok_or(Error::NotMonic)?;
    let map = tau(ring, g)?;
    let mut e0 = vec![f.zero(); k];
    e0[0] = f.one();
    let mut rows = vec![Vec::new(); k];
    for (v, &l) in std::iter::once(&e0).chain(points).zip(blocks) {
        if v.len() != k {
            return Err(Error::LengthMismatch { expected: k, got: v.len() });
        }
        for c in orbit_vectors(&map, v, l)? {
            for (row, a) in rows.iter_mut().zip(c) {
                row.push(a);
            }
        }
    }
    MatrixFq::from_rows(f, &rows)
}
