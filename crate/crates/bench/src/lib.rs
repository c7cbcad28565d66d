//! Fixtures shared by the benchmarks.

use skewcodes::{ConstacyclicSpec, FieldSpec, SkewRing, SqtSpec};

pub fn ring(p: u64, r: u32, s: u32) -> SkewRing {
    SkewRing::frobenius(&FieldSpec::new(p, r, None).expect("valid field"), s).expect("valid automorphism")
}

/// `x^n - 1` over F_4 with `theta = a^(2^s)`.
pub fn f4_binomial(n: usize, s: u32) -> ConstacyclicSpec {
    let r = ring(2, 2, s);
    let one = r.field().one();
    ConstacyclicSpec::new(r, n, one).expect("valid spec")
}

/// The [25, 4] code over F_9.
pub fn f9_sqt() -> SqtSpec {
    SqtSpec::parse(ring(3, 2, 1), "[5418]^5+1681^10+4741^10").expect("valid shorthand")
}
