//! Comparisons that can exceed i128: promoted to `BigInt` on demand.

use num_bigint::BigInt;
use std::cmp::Ordering;

/// Compare n1/d1 with n2/d2 for d1, d2 > 0.  Exact for all i128 inputs.
pub fn cmp_frac(n1: i128, d1: i128, n2: i128, d2: i128) -> Ordering {
    debug_assert!(d1 > 0 && d2 > 0);
    // i128 products overflow only beyond ~2^127; promote unconditionally,
    // this path is rare.
    let l = BigInt::from(n1) * BigInt::from(d2);
    let r = BigInt::from(n2) * BigInt::from(d1);
    l.cmp(&r)
}

/// Sign of a·b − c·d for arbitrary i128 inputs.
pub fn cmp_prod(a: i128, b: i128, c: i128, d: i128) -> Ordering {
    if let (Some(x), Some(y)) = (a.checked_mul(b), c.checked_mul(d)) {
        return x.cmp(&y);
    }
    (BigInt::from(a) * BigInt::from(b)).cmp(&(BigInt::from(c) * BigInt::from(d)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frac_and_prod() {
        assert_eq!(cmp_frac(1, 2, 2, 3), Ordering::Less);
        assert_eq!(cmp_frac(-1, 2, -2, 4), Ordering::Equal);
        let big = i128::MAX / 2;
        assert_eq!(cmp_frac(big, 3, big, 4), Ordering::Greater);
        assert_eq!(cmp_prod(big, big, big, big - 1), Ordering::Greater);
        assert_eq!(cmp_prod(-big, big, big, -big), Ordering::Equal);
    }
}
