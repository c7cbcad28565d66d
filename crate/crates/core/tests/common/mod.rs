#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use skewcodes::bracket::BracketContext;
use skewcodes::linear_code::MatrixFq;
use skewcodes::orbit_sqt::{orbit_census, orbit_vectors, tau, total_points};
use skewcodes::{FieldElement, FieldSpec, SemiLinearVectorMap, SkewPoly, SkewRing};

/// (p, r, s) of the rings the algebra suites draw from.
pub const RINGS: [(u64, u32, u32); 6] = [(2, 2, 1), (2, 3, 1), (2, 3, 2), (3, 2, 1), (2, 4, 1), (2, 4, 3)];

pub fn ring(i: usize) -> SkewRing {
    let (p, r, s) = RINGS[i % RINGS.len()];
    SkewRing::frobenius(&FieldSpec::new(p, r, None).unwrap(), s).unwrap()
}

pub fn poly(ring: &SkewRing, raw: &[u64]) -> SkewPoly {
    let q = ring.field().order();
    let d: Vec<u64> = raw.iter().map(|x| x % q).collect();
    ring.from_digits(&d).unwrap()
}

fn elem(f: &FieldSpec, raw: u64) -> FieldElement {
    f.from_digit(raw % f.order()).unwrap()
}

pub fn raw_poly(max_len: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(any::<u64>(), 0..=max_len)
}

pub fn check_division(ri: usize, a: Vec<u64>, b: Vec<u64>) -> Result<(), TestCaseError> {
    let r = ring(ri);
    let a = poly(&r, &a);
    let b = poly(&r, &b);
    prop_assume!(!b.is_zero());
    let db = b.degree().unwrap();
    let (q, rem) = r.right_divmod(&a, &b).unwrap();
    prop_assert_eq!(r.add(&r.mul(&q, &b), &rem), a.clone());
    prop_assert!(rem.degree().is_none_or(|d| d < db));
    let (q, rem) = r.left_divmod(&a, &b).unwrap();
    prop_assert_eq!(r.add(&r.mul(&b, &q), &rem), a.clone());
    prop_assert!(rem.degree().is_none_or(|d| d < db));
    // b right-divides its own left multiples
    let (q2, rem2) = r.right_divmod(&r.mul(&a, &b), &b).unwrap();
    prop_assert!(rem2.is_zero());
    prop_assert_eq!(q2, a);
    Ok(())
}

pub fn check_ring_laws(ri: usize, a: Vec<u64>, b: Vec<u64>, c: Vec<u64>, k: u64) -> Result<(), TestCaseError> {
    let r = ring(ri);
    let f = r.field().clone();
    let (a, b, c) = (poly(&r, &a), poly(&r, &b), poly(&r, &c));
    prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
    prop_assert_eq!(r.mul(&a, &r.add(&b, &c)), r.add(&r.mul(&a, &b), &r.mul(&a, &c)));
    prop_assert_eq!(r.mul(&r.add(&a, &b), &c), r.add(&r.mul(&a, &c), &r.mul(&b, &c)));
    let x = SkewPoly::monomial(f.one(), 1);
    let e = elem(&f, k);
    let ce = SkewPoly::monomial(e, 0);
    prop_assert_eq!(r.mul(&x, &ce), SkewPoly::monomial(r.theta(1, e), 1));
    let da = a.degree().unwrap_or(0) + b.degree().unwrap_or(0);
    if !a.is_zero() && !b.is_zero() {
        prop_assert_eq!(r.mul(&a, &b).degree(), Some(da));
    }
    Ok(())
}

pub fn check_homomorphisms(ri: usize, a: u64, b: u64, j: i64, u: Vec<u64>, v: Vec<u64>) -> Result<(), TestCaseError> {
    let r = ring(ri);
    let f = r.field().clone();
    let aut = r.aut();
    let (a, b) = (elem(&f, a), elem(&f, b));
    prop_assert_eq!(aut.apply(j, f.add(a, b)), f.add(aut.apply(j, a), aut.apply(j, b)));
    prop_assert_eq!(aut.apply(j, f.mul(a, b)), f.mul(aut.apply(j, a), aut.apply(j, b)));
    prop_assert_eq!(aut.apply(-j, aut.apply(j, a)), a);
    prop_assert_eq!(aut.apply(aut.order() as i64, a), a);
    let (ext, emb) = f.extension(2).unwrap();
    prop_assert_eq!(emb.apply(f.add(a, b)), ext.add(emb.apply(a), emb.apply(b)));
    prop_assert_eq!(emb.apply(f.mul(a, b)), ext.mul(emb.apply(a), emb.apply(b)));
    // tau is theta-semilinear
    let k = 3;
    let vec = |raw: &[u64]| -> Vec<FieldElement> { (0..k).map(|i| elem(&f, *raw.get(i).unwrap_or(&0))).collect() };
    let (u, v) = (vec(&u), vec(&v));
    let mut gd = vec![1u64; k + 1];
    gd[1] = 0;
    let g = r.from_digits(&gd).unwrap();
    let t = tau(&r, &g).unwrap();
    let sum: Vec<FieldElement> = u.iter().zip(&v).map(|(&x, &y)| f.add(x, y)).collect();
    let tu = t.apply(&u).unwrap();
    let tv = t.apply(&v).unwrap();
    prop_assert_eq!(t.apply(&sum).unwrap(), tu.iter().zip(&tv).map(|(&x, &y)| f.add(x, y)).collect::<Vec<_>>());
    let au: Vec<FieldElement> = u.iter().map(|&x| f.mul(a, x)).collect();
    let ta = r.theta(1, a);
    prop_assert_eq!(t.apply(&au).unwrap(), tu.iter().map(|&x| f.mul(ta, x)).collect::<Vec<_>>());
    prop_assert_eq!(t.apply_inverse(&tu).unwrap(), u.clone());
    // the bracket map is additive and keeps weights
    let ctx = BracketContext::new(&r).unwrap();
    let pu = SkewPoly::new(u.clone());
    let pv = SkewPoly::new(v.clone());
    let bu = ctx.bracket_map(&pu).unwrap();
    prop_assert_eq!(bu.weight(), pu.weight());
    let bsum = ctx.bracket_map(&r.add(&pu, &pv)).unwrap().to_dense(1 << 16).unwrap();
    let comm = SkewRing::commutative(&f);
    let parts = comm.add(
        &bu.to_dense(1 << 16).unwrap(),
        &ctx.bracket_map(&pv).unwrap().to_dense(1 << 16).unwrap(),
    );
    prop_assert_eq!(bsum, parts);
    Ok(())
}

/// Ring used for orbit counts: small enough that every projective space
/// is scanned quickly.
pub fn check_orbit_partition(ri: usize, raw: Vec<u64>) -> Result<(), TestCaseError> {
    let r = ring(ri);
    let f = r.field().clone();
    let k = raw.len();
    prop_assume!(k >= 1);
    let mut d: Vec<u64> = raw.iter().map(|x| x % f.order()).collect();
    prop_assume!(d[0] != 0);
    d.push(1);
    let g = r.from_digits(&d).unwrap();
    let t = tau(&r, &g).unwrap();
    let census = orbit_census(&t).unwrap();
    let total: usize = census.iter().map(|(_, l)| l).sum();
    prop_assert_eq!(total as u64, total_points(f.order(), k).unwrap());
    // representatives are pairwise in different orbits
    let reps: std::collections::HashSet<_> = census.iter().map(|(p, _)| p.clone()).collect();
    prop_assert_eq!(reps.len(), census.len());
    Ok(())
}

/// `T' = theta(S^-1) T S` and `P_2 = P_1 S` produce `H_2 = S^t H_1`.
pub fn check_conjugation(ri: usize, graw: Vec<u64>, sraw: Vec<u64>, praw: Vec<u64>, n: usize) -> Result<(), TestCaseError> {
    let r = ring(ri);
    let f = r.field().clone();
    let k = graw.len();
    prop_assume!(k >= 1);
    let mut d: Vec<u64> = graw.iter().map(|x| x % f.order()).collect();
    prop_assume!(d[0] != 0);
    d.push(1);
    let g = r.from_digits(&d).unwrap();
    let t1 = tau(&r, &g).unwrap();
    let rows: Vec<Vec<FieldElement>> = (0..k)
        .map(|i| (0..k).map(|j| elem(&f, sraw.get(i * k + j).copied().unwrap_or((i == j) as u64))).collect())
        .collect();
    let s = MatrixFq::from_rows(&f, &rows).unwrap();
    prop_assume!(s.rank() == k);
    let sinv = s.inverse().unwrap();
    let t2m = sinv.frobenius(r.aut(), 1).mul(t1.matrix()).unwrap().mul(&s).unwrap();
    let t2 = SemiLinearVectorMap::new(r.aut().clone(), t2m).unwrap();
    let p1: Vec<FieldElement> = (0..k).map(|i| elem(&f, *praw.get(i).unwrap_or(&1))).collect();
    prop_assume!(p1.iter().any(|a| !a.is_zero()));
    let p2 = MatrixFq::from_rows(&f, &[p1.clone()]).unwrap().mul(&s).unwrap().row(0).to_vec();
    let h = |map: &SemiLinearVectorMap, p: &[FieldElement]| -> MatrixFq {
        let cols = orbit_vectors(map, p, n).unwrap();
        MatrixFq::from_rows(&f, &cols).unwrap().transpose()
    };
    let h1 = h(&t1, &p1);
    let h2 = h(&t2, &p2);
    prop_assert_eq!(h2, s.transpose().mul(&h1).unwrap());
    Ok(())
}
