use skewcodes::orbit_sqt::{orbit, orbit_census, pcm, tau, ProjectivePoint};
use skewcodes::table::TABLE;
use skewcodes::{ConstacyclicSpec, Error, FieldElement, FieldSpec, LinearCode, MatrixFq, SkewRing, SqtSpec};

fn ring(p: u64, r: u32, s: u32) -> SkewRing {
    SkewRing::frobenius(&FieldSpec::new(p, r, None).unwrap(), s).unwrap()
}

#[test]
fn paper_divisions() {
    let r = ring(2, 2, 1);
    let w = r.field().generator();
    let g = r.from_digits(&[1, 0, 3, 0, 2, 0, 1]).unwrap();
    let f = r.binomial(8, w);
    let (q, rem) = r.right_divmod(&f, &g).unwrap();
    assert!(rem.is_zero());
    assert_eq!(r.mul(&q, &g), f);
    let (hbar, rem) = r.left_divmod(&f, &g).unwrap();
    assert!(rem.is_zero());
    assert_eq!(hbar.degree(), Some(2));
    let r8 = ring(2, 3, 2);
    let w8 = r8.field().generator();
    let g8 = r8.from_digits(&[4, 1, 3, 0, 1]).unwrap();
    assert_eq!(r8.field().to_digit(r8.field().pow(w8, 3)).unwrap(), 4);
    let (_, rem) = r8.right_divmod(&r8.binomial(7, r8.field().pow(w8, 3)), &g8).unwrap();
    assert!(rem.is_zero());
}

#[test]
fn mod_reduce_matches_division() {
    let r = ring(2, 3, 1);
    let f = r.field().clone();
    let a = f.generator();
    for e in 0..20 {
        let xe = skewcodes::SkewPoly::monomial(f.one(), e);
        let red = r.mod_reduce(&xe, 5, a).unwrap();
        let (_, rem) = r.right_divmod(&xe, &r.binomial(5, a)).unwrap();
        assert_eq!(red, rem, "x^{e}");
    }
    let x6 = skewcodes::SkewPoly::monomial(f.one(), 6);
    assert_eq!(r.mod_reduce(&x6, 5, a).unwrap(), skewcodes::SkewPoly::monomial(r.theta(1, a), 1));
}

#[test]
fn paper_codes_differ_with_equal_minimal_polynomials() {
    let r = ring(2, 2, 1);
    let one = r.field().one();
    let c = ConstacyclicSpec::new(r.clone(), 14, one).unwrap();
    let g1 = r.from_digits(&[1, 2, 1, 1]).unwrap();
    let g2 = r.from_digits(&[1, 3, 1, 1]).unwrap();
    assert!(r.right_divides_binomial(&g1, 14, one));
    assert!(r.right_divides_binomial(&g2, 14, one));
    let c1 = c.code(&g1).unwrap();
    let c2 = c.code(&g2).unwrap();
    assert_eq!(c1.code().dim(), 11);
    assert!(!c1.code().equals(c2.code()).unwrap());
}

#[test]
fn dual_of_paper_code_is_the_displayed_row_space() {
    let r = ring(2, 2, 1);
    let f = r.field().clone();
    let c = ConstacyclicSpec::new(r.clone(), 8, f.generator()).unwrap();
    let g = r.from_digits(&[1, 0, 3, 0, 2, 0, 1]).unwrap();
    let code = c.code(&g).unwrap();
    let shown: Vec<Vec<u64>> = (0..6)
        .map(|j| {
            let mut row = vec![0; 8];
            row[j] = 1;
            row[j + 2] = if j % 2 == 0 { 2 } else { 3 };
            row
        })
        .collect();
    let displayed = LinearCode::from_rows(&MatrixFq::from_digit_rows(&f, &shown).unwrap()).unwrap();
    assert!(code.code().dual().unwrap().equals(&displayed).unwrap());
    assert!(code.code().invariant_under(&c.shift_map()).unwrap());
    assert!(!code.is_self_dual().unwrap());
}

#[test]
fn commutative_dual_generator_is_classical_reciprocal() {
    // x^7 - 1 = (x^3 + x + 1)(x^4 + x^2 + x + 1) over F_2; h* of h = x^4 + x^2 + x + 1
    let r = SkewRing::commutative(&FieldSpec::prime(2).unwrap());
    let c = ConstacyclicSpec::new(r.clone(), 7, FieldElement::ONE).unwrap();
    let g = r.from_digits(&[1, 1, 0, 1]).unwrap();
    let h = c.dual_generator(&g).unwrap();
    assert_eq!(r.to_digits(&h).unwrap(), vec![1, 0, 1, 1, 1]);
}

#[test]
fn pcm_for_every_sd8_divisor() {
    let r = ring(2, 2, 1);
    let c = ConstacyclicSpec::new(r.clone(), 8, r.field().generator()).unwrap();
    for g in c.right_divisors(1, 7).unwrap() {
        let h = pcm(&c, &g).unwrap();
        assert_eq!(h.rank(), g.degree().unwrap());
        assert!(c.gen_matrix(&g).unwrap().mul(&h.transpose()).unwrap().is_zero());
    }
}

#[test]
fn orbit_of_f8_point() {
    let r = ring(2, 3, 2);
    let f = r.field().clone();
    let g = r.from_digits(&[4, 1, 3, 0, 1]).unwrap();
    let w4 = f.from_digit(5).unwrap();
    let p = ProjectivePoint::new(&f, &[f.zero(), w4, f.zero(), f.one()]).unwrap();
    assert_eq!(orbit(&tau(&r, &g).unwrap(), &p, 100).unwrap().len(), 7);
    let census = orbit_census(&tau(&r, &g).unwrap()).unwrap();
    assert_eq!(census.iter().map(|c| c.1).sum::<usize>(), 585);
}

#[test]
fn single_block_sqt_is_the_orbit_pcm() {
    let r = ring(2, 2, 1);
    let f = r.field().clone();
    let g = r.from_digits(&[1, 3, 1, 0, 1]).unwrap();
    let s = SqtSpec::new(r.clone(), g.clone(), vec![], vec![7]).unwrap();
    let c = ConstacyclicSpec::new(r, 7, f.generator()).unwrap();
    assert_eq!(s.matrix().unwrap(), pcm(&c, &g).unwrap());
    assert_eq!(s.alpha(), f.generator());
}

#[test]
fn one_generator_for_the_length_eight_code() {
    let r = ring(2, 2, 1);
    let f = r.field().clone();
    let g = r.from_digits(&[1, 0, 3, 0, 2, 0, 1]).unwrap();
    let map = tau(&r, &g).unwrap();
    let mut tried = 0;
    // points over F_2 supported on even coordinates, the ones fixed by alpha = w
    for mask in 1u32..8 {
        let mut v = vec![f.zero(); 6];
        for (b, j) in [0, 2, 4].iter().enumerate() {
            if mask >> b & 1 == 1 {
                v[*j] = f.one();
            }
        }
        let l = orbit(&map, &ProjectivePoint::new(&f, &v).unwrap(), 1000).unwrap().len();
        if l != 8 {
            continue;
        }
        let s = SqtSpec::new(r.clone(), g.clone(), vec![v], vec![8, 8]).unwrap();
        assert_eq!(s.alpha(), f.generator());
        let one = s.one_generator().unwrap();
        assert_eq!(one.modulus_constant, f.inv(f.generator()).unwrap());
        assert!(one.code().unwrap().equals(&s.code().unwrap()).unwrap());
        tried += 1;
    }
    assert!(tried > 0);
    let odd = vec![f.zero(), f.one(), f.zero(), f.zero(), f.zero(), f.zero()];
    let l = orbit(&map, &ProjectivePoint::new(&f, &odd).unwrap(), 1000).unwrap().len();
    let s = SqtSpec::new(r.clone(), g.clone(), vec![odd.clone()], vec![8, l]).unwrap();
    assert!(s.one_generator().is_err());
    if l == 8 {
        assert_eq!(s.one_generator().unwrap_err(), Error::TwistNotFixed { point: 1, coord: 1 });
    }
}

#[test]
fn table_shorthands_round_trip_when_valid() {
    let mut valid = 0;
    for row in TABLE.iter() {
        let (p, r, s) = row.field_params().unwrap();
        let ring = ring(p, r, s);
        match SqtSpec::parse(ring, row.shorthand) {
            Ok(spec) => {
                assert_eq!(spec.emit().unwrap(), row.shorthand);
                valid += 1;
            }
            Err(e) => assert!(matches!(e, Error::OrbitLengthMismatch { .. }), "{}: {e}", row.shorthand),
        }
    }
    assert!(valid >= 10);
}

#[test]
fn min_weight_of_f9_example() {
    let s = SqtSpec::parse(ring(3, 2, 1), "[5418]^5+1681^10+4741^10").unwrap();
    let code = s.code().unwrap();
    assert_eq!((code.len(), code.dim()), (25, 4));
    assert_eq!(code.min_weight().unwrap(), 19);
    let w = [skewcodes::WeightRoute::Codewords, skewcodes::WeightRoute::CheckColumns]
        .map(|rt| code.min_weight_with(Some(rt), 1 << 40).unwrap());
    assert_eq!(w, [19, 19]);
}
