//! JSON report schema and exact decimal rendering.

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::props::StructureFlags;
use crate::psi::BigRational;
use crate::verify::CheckOutcome;

/// A rational rendered both ways: `exact` as `num/den` (or a plain integer)
/// and `decimal` rounded to significant digits.
#[derive(Debug, Clone, Serialize)]
pub struct ExactValue {
    pub exact: String,
    pub decimal: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupRecord {
    pub name: String,
    pub order: u64,
    pub psi: u64,
    pub psi_prime: ExactValue,
    pub psi_dprime: ExactValue,
    pub flags: StructureFlags,
    pub checks: Vec<CheckOutcome>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerdictReport {
    pub tool_version: String,
    pub corpus: String,
    pub records: Vec<GroupRecord>,
    pub global_checks: Vec<CheckOutcome>,
    pub summary: Summary,
}

impl VerdictReport {
    pub fn failed(&self) -> usize {
        self.summary.failed
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn pow10(k: u32) -> BigInt {
    BigInt::from(10u32).pow(k)
}

fn round_half_even(num: &BigInt, den: &BigInt) -> BigInt {
    let q = num / den;
    let r = num - &q * den;
    let twice = &r + &r;
    match twice.cmp(den) {
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Greater => q + 1,
        std::cmp::Ordering::Equal => {
            if (&q % 2u8).is_zero() {
                q
            } else {
                q + 1
            }
        }
    }
}

/// Renders a rational as a decimal with `sig` significant digits, round
/// half to even. Values whose leading digit sits within 10^-4..10^15 of
/// the decimal point come out in fixed notation, anything else in
/// scientific notation.
pub fn decimal_string(value: &BigRational, sig: u32) -> String {
    assert!(sig >= 1);
    if value.is_zero() {
        return "0".to_string();
    }
    let neg = value.numer().sign() == Sign::Minus;
    let a = value.numer().abs();
    let b = value.denom().clone();

    // Largest e with 10^e <= a/b, found from digit counts plus adjustment.
    let mut e = a.to_string().len() as i64 - b.to_string().len() as i64;
    while pow10_shift(&b, e) > a {
        e -= 1;
    }
    while pow10_shift(&b, e + 1) <= a {
        e += 1;
    }

    let shift = sig as i64 - 1 - e;
    let mut digits = if shift >= 0 {
        round_half_even(&(&a * pow10(shift as u32)), &b)
    } else {
        round_half_even(&a, &(&b * pow10((-shift) as u32)))
    };
    let mut ds = digits.to_string();
    if ds.len() as u32 == sig + 1 {
        // Rounding carried into a new leading digit (all trailing zeros).
        e += 1;
        digits /= 10;
        ds = digits.to_string();
    }
    debug_assert_eq!(ds.len() as u32, sig);

    let sign = if neg { "-" } else { "" };
    if (-4..15).contains(&e) {
        if e >= 0 {
            let point = (e + 1) as usize;
            if point == ds.len() {
                format!("{sign}{ds}")
            } else {
                format!("{sign}{}.{}", &ds[..point], &ds[point..])
            }
        } else {
            let zeros = "0".repeat((-e - 1) as usize);
            format!("{sign}0.{zeros}{ds}")
        }
    } else {
        format!("{sign}{}.{}e{}", &ds[..1], &ds[1..], e)
    }
}

// b * 10^e as a rational comparison helper: returns a value comparable to
// an integer a, i.e. computes b*10^e when e >= 0, else rounds the compare
// by scaling a instead. Used only for locating the leading digit.
fn pow10_shift(b: &BigInt, e: i64) -> BigInt {
    if e >= 0 {
        b * pow10(e as u32)
    } else {
        // compare b*10^e <= a as b <= a*10^-e; caller compares against a,
        // so fold the scaling into the returned bound via ceiling division.
        let scale = pow10((-e) as u32);
        let q = b / &scale;
        if (b % &scale).is_zero() {
            q
        } else {
            q + 1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn decimal_basic() {
        assert_eq!(decimal_string(&r(1, 2), 10), "0.5000000000");
        assert_eq!(decimal_string(&r(7, 16), 10), "0.4375000000");
        assert_eq!(decimal_string(&r(27, 64), 10), "0.4218750000");
        assert_eq!(decimal_string(&r(1, 3), 10), "0.3333333333");
        assert_eq!(decimal_string(&r(2, 3), 10), "0.6666666667");
        assert_eq!(decimal_string(&r(211, 3600), 10), "0.05861111111");
        assert_eq!(decimal_string(&r(1, 1), 10), "1.000000000");
        assert_eq!(decimal_string(&r(1617, 1), 10), "1617.000000");
    }

    #[test]
    fn decimal_half_even() {
        assert_eq!(decimal_string(&r(25, 100), 1), "0.2");
        assert_eq!(decimal_string(&r(35, 100), 1), "0.4");
        assert_eq!(decimal_string(&r(15, 10), 1), "2");
        assert_eq!(decimal_string(&r(25, 10), 1), "2");
    }

    #[test]
    fn decimal_carry_and_sign() {
        assert_eq!(decimal_string(&r(999999999999i64, 1000000000000i64), 10), "1.000000000");
        assert_eq!(decimal_string(&r(-1, 3), 4), "-0.3333");
        assert_eq!(decimal_string(&r(0, 5), 10), "0");
    }

    #[test]
    fn decimal_scientific() {
        assert_eq!(decimal_string(&r(1, 10000), 4), "0.0001000");
        assert_eq!(decimal_string(&r(1, 100000), 4), "1.000e-5");
        let big = BigRational::from(BigInt::from(10u8).pow(20));
        assert_eq!(decimal_string(&big, 4), "1.000e20");
    }
}
