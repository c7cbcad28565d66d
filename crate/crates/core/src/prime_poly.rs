//! Dense polynomials over the prime field GF(p), used to validate moduli
//! and to search for default ones. Coefficients are ascending and reduced
//! into `[0, p)`.

pub(crate) fn mul_mod_p(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn inv_mod_p(a: u64, p: u64) -> u64 {
    pow_mod_p(a, p - 2, p)
}

pub(crate) fn pow_mod_p(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod_p(acc, a, p);
        }
        a = mul_mod_p(a, a, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Remainder of `a` modulo the nonzero polynomial `m`.
pub(crate) fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = inv_mod_p(m[dm], p);
    while r.len() > dm {
        let top = r.len() - 1;
        let c = mul_mod_p(r[top], lead_inv, p);
        if c != 0 {
            let shift = top - dm;
            for (i, &mi) in m.iter().enumerate() {
                let t = mul_mod_p(c, mi, p);
                r[shift + i] = (r[shift + i] + p - t) % p;
            }
        }
        trim(&mut r);
    }
    r
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod_p(ai, bj, p)) % p;
        }
    }
    trim(&mut out);
    out
}

fn mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    rem(&mul(a, b, p), m, p)
}

fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out: Vec<u64> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

/// `base^(p^e)` reduced modulo `m`, by `e` successive p-th powers.
fn frobenius_iter(base: &[u64], e: u32, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = base.to_vec();
    for _ in 0..e {
        acc = pow_mod(&acc, p, m, p);
    }
    acc
}

fn pow_mod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(&acc, &b, m, p);
        }
        e >>= 1;
        if e > 0 {
            b = mul_mod(&b, &b, m, p);
        }
    }
    acc
}

/// Ben-Or irreducibility test: `f` (monic, degree r) has no factor of
/// degree `i <= r/2`, detected as `gcd(f, x^(p^i) - x) = 1`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let r = f.len() - 1;
    if r == 0 {
        return false;
    }
    if r == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    let mut xp = x.clone();
    for _ in 1..=r / 2 {
        xp = frobenius_iter(&xp, 1, f, p);
        let g = gcd(f, &sub(&xp, &x, p), p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

/// Monic polynomial of degree `r` whose non-leading coefficients are the
/// base-p digits of `index`.
pub(crate) fn monic_from_index(mut index: u64, r: usize, p: u64) -> Vec<u64> {
    let mut v = Vec::with_capacity(r + 1);
    for _ in 0..r {
        v.push(index % p);
        index /= p;
    }
    v.push(1);
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_irreducibles() {
        assert!(is_irreducible(&[1, 1, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1], 2));
        assert!(is_irreducible(&[1, 1, 0, 1], 2));
        assert!(is_irreducible(&[1, 0, 1, 1], 2));
        assert!(!is_irreducible(&[1, 1, 1, 1], 2));
        assert!(is_irreducible(&[2, 2, 1], 3));
        // (x^2+1)^2 over GF(2) has no roots but is reducible
        assert!(!is_irreducible(&[1, 0, 0, 0, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
    }

    #[test]
    fn irreducible_count_matches_necklace_formula() {
        // number of monic irreducibles of degree 4 over GF(2) is 3, over GF(3) is 18
        let count = |p: u64, r: usize| {
            (0..p.pow(r as u32))
                .filter(|&i| is_irreducible(&monic_from_index(i, r, p), p))
                .count()
        };
        assert_eq!(count(2, 4), 3);
        assert_eq!(count(3, 4), 18);
        assert_eq!(count(2, 6), 9);
    }
}
