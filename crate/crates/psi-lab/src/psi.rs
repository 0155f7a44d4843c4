//! Exact computation of psi, psi', psi'' and every closed form attached to
//! them.
//!
//! All values are exact: psi is an integer, the normalizations are
//! arbitrary-precision rationals stored reduced, and comparisons are
//! cross-multiplications. Decimal rendering is display-only.

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::families::GroupSpec;
use crate::grpcore::Group;

pub type BigRational = num_rational::BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PsiError {
    #[error("no closed form for {0}")]
    UnsupportedFamily(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// Multiset of (prime, exponent) pairs, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization(Vec<(u64, u32)>);

impl Factorization {
    /// Trial division with a 2,3,5 wheel; adequate for every order and scan
    /// bound in this crate.
    pub fn of(mut n: u64) -> Self {
        let mut factors = Vec::new();
        for p in [2u64, 3, 5] {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            if e > 0 {
                factors.push((p, e));
            }
        }
        const WHEEL: [u64; 8] = [4, 2, 4, 2, 4, 6, 2, 6];
        let mut p = 7u64;
        let mut w = 0;
        while p * p <= n {
            if n % p == 0 {
                let mut e = 0;
                while n % p == 0 {
                    n /= p;
                    e += 1;
                }
                factors.push((p, e));
            }
            p += WHEEL[w];
            w = (w + 1) % WHEEL.len();
        }
        if n > 1 {
            factors.push((n, 1));
        }
        Factorization(factors)
    }

    pub fn from_pairs(pairs: Vec<(u64, u32)>) -> Self {
        debug_assert!(pairs.windows(2).all(|w| w[0].0 < w[1].0));
        Factorization(pairs)
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.0
    }

    pub fn value(&self) -> u64 {
        self.0.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

impl std::fmt::Display for Factorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(p, e)| if e == 1 { format!("{p}") } else { format!("{p}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

fn big(n: u64) -> BigInt {
    BigInt::from(n)
}

/// `psi(C_{p^e}) = (p^{2e+1} + 1) / (p + 1)`.
pub fn psi_prime_power(p: u64, e: u32) -> BigInt {
    (big(p).pow(2 * e + 1) + 1) / (big(p) + 1)
}

/// `psi(C_n)` from the factorization of `n`, multiplicatively, without
/// constructing the group. The empty factorization is `n = 1`.
pub fn psi_cyclic(f: &Factorization) -> BigInt {
    f.factors().iter().map(|&(p, e)| psi_prime_power(p, e)).product()
}

pub fn psi_cyclic_of(n: u64) -> BigInt {
    psi_cyclic(&Factorization::of(n))
}

/// `psi(G)`: the sum of the orders of all elements.
pub fn psi_sum(g: &Group) -> BigInt {
    big(g.element_orders().iter().map(|&o| o as u64).sum())
}

/// psi together with its two normalizations, all exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiTriple {
    pub psi: BigInt,
    /// `psi(G) / psi(C_|G|)`; 1 exactly iff G is cyclic.
    pub psi_prime: BigRational,
    /// `psi(G) / |G|^2`; < 1 for nontrivial G.
    pub psi_dprime: BigRational,
}

pub fn psi_triple(g: &Group) -> PsiTriple {
    let psi = psi_sum(g);
    let n = g.order() as u64;
    // The denominator uses the closed form, never a constructed C_n, so
    // psi' stays available for groups at the order cap.
    let psi_prime = BigRational::new(psi.clone(), psi_cyclic_of(n));
    let psi_dprime = BigRational::new(psi.clone(), big(n) * big(n));
    PsiTriple { psi, psi_prime, psi_dprime }
}

/// `psi(P x| H) = |P| psi(H) + (psi(P) - |P|) psi(C_H(P))` for a cyclic
/// p-group `P = C_{p^n}` acting coprimely on `H`.
pub fn psi_semidirect(p: u64, n: u32, psi_h: &BigInt, psi_centralizer: &BigInt) -> BigInt {
    let card_p = big(p).pow(n);
    let psi_p = psi_prime_power(p, n);
    &card_p * psi_h + (psi_p - card_p) * psi_centralizer
}

fn two_power_exponent(order: u64) -> u32 {
    debug_assert!(order.is_power_of_two());
    order.trailing_zeros()
}

fn prime_power(n: u64) -> Option<(u64, u32)> {
    let f = Factorization::of(n);
    match f.factors() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

/// Closed-form `psi''` for the families the proofs use:
/// `C(n)`, the 2-power families `Dih(2^{n-1})`, `Q(2^n)`, `SD(2^n)`,
/// the abelian `C_2 x C_{2^{n-1}}`, and the odd dihedral `SDP(p^n, -1, 2)`.
///
/// `M(2^n)` is deliberately unsupported: its displayed formula is
/// inconsistent (it would contradict `psi(G) > |G|`), so the modular family
/// is handled by brute force only.
pub fn closed_form_psi_dprime(spec: &GroupSpec) -> Result<BigRational, PsiError> {
    let unsupported = || PsiError::UnsupportedFamily(spec.to_string());
    match spec {
        GroupSpec::Cyclic(n) => {
            Ok(BigRational::new(psi_cyclic_of(*n), big(*n) * big(*n)))
        }
        GroupSpec::Dihedral(m) if m.is_power_of_two() && *m >= 2 => {
            // psi''(D_{2^n}) = (2^{2n-1} + 3*2^n + 1) / (3*2^{2n})
            let n = two_power_exponent(2 * m);
            let num = (BigInt::one() << (2 * n - 1)) + 3 * (BigInt::one() << n) + 1;
            Ok(BigRational::new(num, 3 * (BigInt::one() << (2 * n))))
        }
        GroupSpec::Quaternion(o) => {
            // psi''(Q_{2^n}) = (2^{2n-1} + 3*2^{n+1} + 1) / (3*2^{2n})
            let n = two_power_exponent(*o);
            let num = (BigInt::one() << (2 * n - 1)) + 3 * (BigInt::one() << (n + 1)) + 1;
            Ok(BigRational::new(num, 3 * (BigInt::one() << (2 * n))))
        }
        GroupSpec::Semidihedral(o) => {
            // psi''(S_{2^n}) = (2^{2n-1} + 9*2^{n-1} + 1) / (3*2^{2n})
            let n = two_power_exponent(*o);
            let num = (BigInt::one() << (2 * n - 1)) + 9 * (BigInt::one() << (n - 1)) + 1;
            Ok(BigRational::new(num, 3 * (BigInt::one() << (2 * n))))
        }
        GroupSpec::ElemAb(2) => {
            // C_2 x C_2: (2^4 + 5) / (3*2^4) = 7/16.
            Ok(BigRational::new(big(21), big(48)))
        }
        GroupSpec::Product(a, b) => {
            // C_2 x C_{2^{n-1}}, in either order.
            let (small, rest) = (a.as_ref(), b.as_ref());
            let pow2 = |s: &GroupSpec| match s {
                GroupSpec::Cyclic(n) if n.is_power_of_two() => Some(*n),
                _ => None,
            };
            let matched = match (pow2(small), pow2(rest)) {
                (Some(2), Some(k)) => Some(2 * k),
                (Some(k), Some(2)) => Some(2 * k),
                _ => None,
            };
            let order = matched.ok_or_else(unsupported)?;
            // (2^{2n} + 5) / (3*2^{2n}) with 2^n the total order.
            let n = two_power_exponent(order);
            let num = (BigInt::one() << (2 * n)) + 5;
            Ok(BigRational::new(num, 3 * (BigInt::one() << (2 * n))))
        }
        GroupSpec::Sdp { m, t, k } if *k == 2 && *m > 1 && t % m == m - 1 => {
            // Lemma-2.3 family: C_{p^n} inverted by C_2, p odd.
            let (p, e) = prime_power(*m).ok_or_else(unsupported)?;
            if p == 2 {
                return Err(unsupported());
            }
            let num = big(p).pow(2 * e + 1) + 2 * big(p).pow(e + 1) + 2 * big(p).pow(e) + 1;
            let den = 4 * (big(p).pow(2 * e + 1) + big(p).pow(2 * e));
            Ok(BigRational::new(num, den))
        }
        _ => Err(unsupported()),
    }
}

/// Theorem-B bound factor `f(q) = [(q^2-1)q + 1](q+1) / (q^5+1)`.
pub fn f_of_q(q: u64) -> Result<BigRational, PsiError> {
    let f = Factorization::of(q);
    if f.factors() != [(q, 1)] || q < 2 {
        return Err(PsiError::NotPrime(q));
    }
    let qb = big(q);
    let num = ((&qb * &qb - 1) * &qb + 1) * (&qb + 1);
    let den = qb.pow(5) + 1;
    Ok(BigRational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make, parse_spec};
    use num_traits::{One, Zero};

    fn group(text: &str) -> Group {
        make(&parse_spec(text).unwrap(), 4096).unwrap()
    }

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// Independent oracle: psi(C_n) = sum over d|n of d*phi(d).
    fn psi_cyclic_oracle(n: u64) -> u64 {
        let phi = |m: u64| (1..=m).filter(|&k| {
            let mut a = k;
            let mut b = m;
            while b != 0 {
                let t = a % b;
                a = b;
                b = t;
            }
            a == 1
        }).count() as u64;
        (1..=n).filter(|d| n % d == 0).map(|d| d * phi(d)).sum()
    }

    #[test]
    fn psi_sum_examples() {
        assert_eq!(psi_sum(&group("C(1)")), big(1));
        assert_eq!(psi_sum(&group("Sym(3)")), big(13));
        assert_eq!(psi_sum(&group("Alt(5)")), big(211));
    }

    #[test]
    fn psi_cyclic_examples() {
        assert_eq!(psi_cyclic(&Factorization::of(1)), big(1));
        assert_eq!(psi_cyclic(&Factorization::of(9)), big(61));
        assert_eq!(psi_cyclic(&Factorization::of(60)), big(1617));
    }

    #[test]
    fn psi_cyclic_matches_oracle() {
        for n in 1..=300 {
            assert_eq!(psi_cyclic_of(n), big(psi_cyclic_oracle(n)), "n={n}");
        }
    }

    #[test]
    fn psi_triple_examples() {
        for n in [1u64, 7, 12, 60] {
            let t = psi_triple(&group(&format!("C({n})")));
            assert!(t.psi_prime.is_one(), "C({n})");
        }
        let q8 = psi_triple(&group("Q(8)"));
        assert_eq!(q8.psi_prime, ratio(27, 43));
        assert_eq!(q8.psi_dprime, ratio(27, 64));
        let s3 = psi_triple(&group("Sym(3)"));
        assert_eq!(s3.psi_prime, ratio(13, 21));
        assert_eq!(s3.psi_dprime, ratio(13, 36));
    }

    #[test]
    fn psi_semidirect_examples() {
        // Trivial action: reduces to psi(P) * psi(H).
        let h = big(21);
        assert_eq!(psi_semidirect(3, 2, &h, &h), psi_prime_power(3, 2) * 21);
        // S_3 = C_3 x| C_2 with trivial centralizer.
        assert_eq!(psi_semidirect(3, 1, &big(3), &big(1)), big(13));
        // Dih(5) brute force.
        assert_eq!(psi_semidirect(5, 1, &big(3), &big(1)), big(31));
        assert_eq!(psi_sum(&group("Dih(5)")), big(31));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_psi_dprime(&parse_spec("Q(8)").unwrap()).unwrap(), ratio(27, 64));
        assert_eq!(
            closed_form_psi_dprime(&parse_spec("SDP(3,2,2)").unwrap()).unwrap(),
            ratio(13, 36)
        );
        assert_eq!(closed_form_psi_dprime(&parse_spec("SD(16)").unwrap()).unwrap(), ratio(67, 256));
        assert_eq!(
            closed_form_psi_dprime(&parse_spec("X(C(2),C(2))").unwrap()).unwrap(),
            ratio(7, 16)
        );
        assert!(matches!(
            closed_form_psi_dprime(&parse_spec("M(16)").unwrap()),
            Err(PsiError::UnsupportedFamily(_))
        ));
        assert!(matches!(
            closed_form_psi_dprime(&parse_spec("Sym(4)").unwrap()),
            Err(PsiError::UnsupportedFamily(_))
        ));
    }

    #[test]
    fn closed_forms_match_brute_force() {
        let mut specs = vec!["C(48)".to_string(), "ElemAb(2)".into()];
        for n in [3u32, 4, 5, 6, 7, 8] {
            specs.push(format!("Dih({})", 1u64 << (n - 1)));
            specs.push(format!("Q({})", 1u64 << n));
            if n >= 4 {
                specs.push(format!("SD({})", 1u64 << n));
            }
            specs.push(format!("X(C(2),C({}))", 1u64 << (n - 1)));
        }
        for q in [3u64, 5, 9, 27, 49] {
            specs.push(format!("SDP({q},{},2)", q - 1));
        }
        for text in specs {
            let spec = parse_spec(&text).unwrap();
            assert!(spec.order() <= 512);
            let closed = closed_form_psi_dprime(&spec).unwrap();
            let brute = psi_triple(&make(&spec, 1024).unwrap()).psi_dprime;
            assert_eq!(closed, brute, "{text}");
        }
    }

    #[test]
    fn f_of_q_examples() {
        assert_eq!(f_of_q(2).unwrap(), ratio(7, 11));
        assert_eq!(f_of_q(3).unwrap(), ratio(25, 61));
        assert!(f_of_q(2).unwrap() > f_of_q(3).unwrap());
        assert!(f_of_q(3).unwrap() > f_of_q(5).unwrap());
        assert_eq!(f_of_q(4), Err(PsiError::NotPrime(4)));
    }

    #[test]
    fn basic_bounds() {
        for text in ["C(17)", "Sym(4)", "Q(16)", "Alt(5)"] {
            let g = group(text);
            let t = psi_triple(&g);
            let n = g.order() as u64;
            assert!(t.psi >= big(2 * n - 1));
            assert!(t.psi_dprime < BigRational::one());
            assert!(!t.psi_prime.is_zero());
        }
    }

    #[test]
    fn product_inequality_lemma_1_2_3() {
        let pairs = [
            ("Sym(3)", "C(4)"),
            ("Sym(3)", "C(3)"),
            ("Q(8)", "C(2)"),
            ("C(6)", "C(10)"),
            ("Q(8)", "C(15)"),
        ];
        for (a, b) in pairs {
            let ga = group(a);
            let gb = group(b);
            let prod = ga.direct_product(&gb, 4096).unwrap();
            let lhs = psi_sum(&prod);
            let rhs = psi_sum(&ga) * psi_sum(&gb);
            assert!(lhs <= rhs, "{a} x {b}");
            let coprime = num_integer::gcd(ga.order(), gb.order()) == 1;
            assert_eq!(lhs == rhs, coprime, "{a} x {b}");
        }
    }

    /// |psi''(C_{p^m}) - p/(p+1)| < 1/p^{2m}, exactly.
    #[test]
    fn prime_power_limit_monotone() {
        for p in [2u64, 3, 5] {
            let target = ratio(p as i64, (p + 1) as i64);
            let mut prev_gap: Option<BigRational> = None;
            for m in 1..=12u32 {
                let value = BigRational::new(psi_prime_power(p, m), big(p).pow(2 * m));
                let gap = if value > target { &value - &target } else { &target - &value };
                assert!(gap < BigRational::new(BigInt::one(), big(p).pow(2 * m)));
                if let Some(prev) = prev_gap {
                    assert!(gap < prev);
                }
                prev_gap = Some(gap);
            }
        }
    }
}
