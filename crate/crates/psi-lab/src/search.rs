//! Number-theoretic exploration of `psi''(C_n)`: threshold scans, minima,
//! the primorial cutoff, and a bounded solver for `psi''(C_n) = c`.
//!
//! Every relation is decided exactly on big integers; floating point is not
//! used anywhere, not even as a prefilter.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::psi::{BigRational, Factorization};

/// Hard bound on scan ranges (sieve bound).
pub const SCAN_BOUND: u64 = 1_000_000_000;

/// Segment size for the factorization sieve.
const SEGMENT: u64 = 1 << 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("n_max {0} exceeds the sieve bound {SCAN_BOUND}")]
    BoundExceeded(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Lt,
    Gt,
}

impl std::str::FromStr for Relation {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "eq" => Ok(Relation::Eq),
            "lt" => Ok(Relation::Lt),
            "gt" => Ok(Relation::Gt),
            other => Err(format!("unknown relation {other:?}")),
        }
    }
}

/// One hit of a cyclic-group scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanResult {
    pub n: u64,
    pub factorization: Factorization,
    /// `psi''(C_n)`, exact and reduced.
    pub value: BigRational,
}

/// `psi(C_n)` in u128 from a factor list; safe for n up to the sieve bound
/// since `psi(C_n) < n^2 <= 10^18`.
fn psi_u128(factors: &[(u64, u32)]) -> u128 {
    factors
        .iter()
        .map(|&(p, e)| {
            let p = p as u128;
            (p.pow(2 * e + 1) + 1) / (p + 1)
        })
        .product()
}

fn value_of(factors: &[(u64, u32)], n: u64) -> BigRational {
    BigRational::new(BigInt::from(psi_u128(factors)), BigInt::from(n) * BigInt::from(n))
}

/// Compares `psi / n^2` to `target` exactly.
fn cmp_to_target(psi: u128, n: u64, target_num: &BigInt, target_den: &BigInt) -> std::cmp::Ordering {
    let lhs = BigInt::from(psi) * target_den;
    let rhs = target_num * (BigInt::from(n) * BigInt::from(n));
    lhs.cmp(&rhs)
}

/// Streams the factor lists of every `n` in `[lo, hi)` using a segmented
/// smallest-prime-factor pass, calling `f(n, factors)` in ascending order.
fn for_each_factorization(lo: u64, hi: u64, mut f: impl FnMut(u64, &[(u64, u32)])) {
    debug_assert!(lo >= 1);
    let mut primes: Vec<u64> = Vec::new();
    {
        // Primes up to sqrt(hi).
        let root = (hi as f64).sqrt() as u64 + 2;
        let mut sieve = vec![true; (root + 1) as usize];
        for p in 2..=root {
            if sieve[p as usize] {
                primes.push(p);
                let mut q = p * p;
                while q <= root {
                    sieve[q as usize] = false;
                    q += p;
                }
            }
        }
    }
    let mut seg_lo = lo;
    let mut residual: Vec<u64> = Vec::new();
    let mut factors: Vec<Vec<(u64, u32)>> = Vec::new();
    while seg_lo < hi {
        let seg_hi = (seg_lo + SEGMENT).min(hi);
        let len = (seg_hi - seg_lo) as usize;
        residual.clear();
        residual.extend(seg_lo..seg_hi);
        factors.clear();
        factors.resize(len, Vec::new());
        for &p in &primes {
            if p * p >= seg_hi {
                break;
            }
            let mut m = seg_lo.div_ceil(p) * p;
            while m < seg_hi {
                let i = (m - seg_lo) as usize;
                let mut e = 0u32;
                while residual[i] % p == 0 {
                    residual[i] /= p;
                    e += 1;
                }
                if e > 0 {
                    factors[i].push((p, e));
                }
                m += p;
            }
        }
        for i in 0..len {
            let n = seg_lo + i as u64;
            if n == 0 {
                continue;
            }
            if residual[i] > 1 {
                factors[i].push((residual[i], 1));
            }
            f(n, &factors[i]);
        }
        seg_lo = seg_hi;
    }
}

/// All `n <= n_max` with `psi''(C_n)` in the stated relation to `target`,
/// ascending.
pub fn scan_cyclic(
    n_max: u64,
    relation: Relation,
    target: &BigRational,
) -> Result<Vec<ScanResult>, SearchError> {
    if n_max > SCAN_BOUND {
        return Err(SearchError::BoundExceeded(n_max));
    }
    let (tn, td) = (target.numer().clone(), target.denom().clone());
    let mut hits = Vec::new();
    for_each_factorization(1, n_max + 1, |n, factors| {
        let psi = psi_u128(factors);
        let ord = cmp_to_target(psi, n, &tn, &td);
        let keep = match relation {
            Relation::Eq => ord == std::cmp::Ordering::Equal,
            Relation::Lt => ord == std::cmp::Ordering::Less,
            Relation::Gt => ord == std::cmp::Ordering::Greater,
        };
        if keep {
            hits.push(ScanResult {
                n,
                factorization: Factorization::from_pairs(factors.to_vec()),
                value: value_of(factors, n),
            });
        }
    });
    Ok(hits)
}

/// The `n <= n_max` minimizing `psi''(C_n)`, ties broken by smaller n.
pub fn min_psi_dprime_cyclic(n_max: u64) -> Result<ScanResult, SearchError> {
    if n_max > SCAN_BOUND {
        return Err(SearchError::BoundExceeded(n_max));
    }
    let mut best: Option<(u64, Vec<(u64, u32)>, u128)> = None;
    for_each_factorization(1, n_max + 1, |n, factors| {
        let psi = psi_u128(factors);
        let better = match &best {
            None => true,
            Some((bn, _, bpsi)) => {
                let (bn, bpsi) = (*bn, *bpsi);
                // psi/n^2 < bpsi/bn^2, cross-multiplied exactly.
                let lhs = BigInt::from(psi) * BigInt::from(bn) * BigInt::from(bn);
                let rhs = BigInt::from(bpsi) * BigInt::from(n) * BigInt::from(n);
                lhs < rhs
            }
        };
        if better {
            best = Some((n, factors.to_vec(), psi));
        }
    });
    let (n, factors, _) = best.expect("nonempty range");
    Ok(ScanResult { n, value: value_of(&factors, n), factorization: Factorization::from_pairs(factors) })
}

/// Unreduced product of `p_i/(p_i+1)` over the first `k` primes, via product
/// trees (the exact numbers run to millions of digits near the 211/3600
/// cutoff, so incremental multiplication is too slow).
fn primorial_ratio(primes: &[u64], k: usize) -> (BigInt, BigInt) {
    fn tree(values: &[u64], offset: u64) -> BigInt {
        match values {
            [] => BigInt::one(),
            [v] => BigInt::from(v + offset),
            _ => {
                let mid = values.len() / 2;
                tree(&values[..mid], offset) * tree(&values[mid..], offset)
            }
        }
    }
    (tree(&primes[..k], 0), tree(&primes[..k], 1))
}

/// Unreduced `prod_{i=1}^k p_i/(p_i+1)`, exact; see
/// [`primorial_threshold_k`] for why it is left unreduced.
pub fn primorial_product(k: usize) -> BigRational {
    let primes = primes_first(k);
    let (num, den) = primorial_ratio(&primes, k);
    BigRational::new_raw(num, den)
}

fn primes_first(count: usize) -> Vec<u64> {
    let mut primes = Vec::with_capacity(count);
    let mut bound = 64u64;
    while primes.len() < count {
        bound *= 2;
        primes.clear();
        let mut sieve = vec![true; bound as usize];
        for p in 2..bound {
            if sieve[p as usize] {
                primes.push(p);
                if primes.len() == count {
                    break;
                }
                let mut q = p * p;
                while q < bound {
                    sieve[q as usize] = false;
                    q += p;
                }
            }
        }
    }
    primes
}

/// Minimal `k` with `prod_{i=1}^k p_i/(p_i+1) < c`, plus the exact product.
///
/// Near small targets the minimal k runs into the hundreds of thousands and
/// the exact products to millions of digits, so every full evaluation is
/// expensive. A floating-point log sum picks the candidate k and a walk of
/// exact product-tree comparisons settles it, so the answer rests only on
/// exact arithmetic. The returned rational is not reduced: a gcd pass on
/// numbers that size would dominate the runtime, and comparisons on it
/// remain exact.
pub fn primorial_threshold_k(c: &BigRational) -> (usize, BigRational) {
    assert!(c > &BigRational::zero() && c < &BigRational::one(), "need 0 < c < 1");
    let ln_c = rational_ln(c);
    let mut primes = primes_first(64);
    let mut sum = 0.0f64;
    let mut k = 0usize;
    loop {
        if k == primes.len() {
            primes = primes_first(primes.len() * 2);
        }
        let p = primes[k] as f64;
        sum += (p / (p + 1.0)).ln();
        k += 1;
        if sum < ln_c {
            break;
        }
    }
    let exact_below = |k: usize, primes: &mut Vec<u64>| {
        if primes.len() < k {
            *primes = primes_first(k);
        }
        let (num, den) = primorial_ratio(primes, k);
        num * c.denom() < c.numer() * den
    };
    while !exact_below(k, &mut primes) {
        k += 1;
    }
    while k > 1 && exact_below(k - 1, &mut primes) {
        k -= 1;
    }
    let (num, den) = primorial_ratio(&primes, k);
    (k, BigRational::new_raw(num, den))
}

/// `ln(c)` for candidate selection only; verdicts are settled exactly.
fn rational_ln(c: &BigRational) -> f64 {
    fn big_ln(x: &BigInt) -> f64 {
        let s = x.magnitude().to_string();
        let head: f64 = s[..s.len().min(17)].parse().unwrap();
        head.ln() + (s.len().saturating_sub(17)) as f64 * std::f64::consts::LN_10
    }
    big_ln(c.numer()) - big_ln(c.denom())
}

/// Exact `|psi''(C_{p^m}) - p/(p+1)|`.
pub fn limit_gap(p: u64, m: u32) -> BigRational {
    let pp = BigInt::from(p);
    let value = BigRational::new(pp.pow(2 * m + 1) + 1, (&pp + 1) * pp.pow(2 * m));
    let limit = BigRational::new(pp.clone(), &pp + 1);
    (value - limit).abs()
}

/// Per-prime-power factor of `psi''(C_n)`:
/// `(p^{2e+1} + 1) / ((p+1) p^{2e})`, which lies in
/// `(p/(p+1), (p^2-p+1)/p^2]` for `e >= 1`.
fn dprime_factor(p: u64, e: u32) -> BigRational {
    let pp = BigInt::from(p);
    BigRational::new(pp.pow(2 * e + 1) + 1, (&pp + 1) * pp.pow(2 * e))
}

/// All factorizations with primes `<= prime_bound` and exponents
/// `<= exp_bound` whose `psi''` equals `c` exactly. DFS over primes in
/// increasing order; a partial product can only decrease, and the suffix of
/// remaining primes bounds how far it can still fall.
///
/// This is a subset-product equality search: every set of primes whose
/// factors multiply to something between `c` and 1 must be walked, so the
/// runtime is exponential in the number of primes in that window. Targets
/// below the product of all available factors prune at the root; mid-range
/// targets need a modest `prime_bound`.
pub fn open_problem_cyclic(c: &BigRational, prime_bound: u64, exp_bound: u32) -> Vec<Factorization> {
    let primes: Vec<u64> = (2..=prime_bound).filter(|&p| {
        matches!(Factorization::of(p).factors(), [(_, 1)])
    }).collect();
    // suffix_min[i]: the smallest product achievable from primes[i..].
    let mut suffix_min = vec![BigRational::one(); primes.len() + 1];
    for i in (0..primes.len()).rev() {
        suffix_min[i] = &suffix_min[i + 1] * dprime_factor(primes[i], exp_bound);
    }
    let mut out = Vec::new();
    let mut stack: Vec<(u64, u32)> = Vec::new();
    fn dfs(
        primes: &[u64],
        suffix_min: &[BigRational],
        exp_bound: u32,
        i: usize,
        partial: BigRational,
        c: &BigRational,
        stack: &mut Vec<(u64, u32)>,
        out: &mut Vec<Factorization>,
    ) {
        if &partial == c {
            out.push(Factorization::from_pairs(stack.clone()));
            // A deeper extension with all-zero exponents would be the same
            // factorization; nonzero exponents strictly shrink the product,
            // so stop here.
            return;
        }
        if i == primes.len() || &partial < c {
            return;
        }
        // partial * suffix_min[i] > c, cross-multiplied to skip the
        // rational reduction a Ratio multiply would do.
        let lhs = partial.numer() * suffix_min[i].numer() * c.denom();
        let rhs = c.numer() * partial.denom() * suffix_min[i].denom();
        if lhs > rhs {
            return; // cannot fall far enough
        }
        // Skip this prime entirely.
        dfs(primes, suffix_min, exp_bound, i + 1, partial.clone(), c, stack, out);
        for e in 1..=exp_bound {
            // The factor for p decreases strictly as e grows, so once the
            // partial product drops below c no larger exponent can recover.
            let with = &partial * dprime_factor(primes[i], e);
            let dead = &with < c;
            stack.push((primes[i], e));
            dfs(primes, suffix_min, exp_bound, i + 1, with, c, stack, out);
            stack.pop();
            if dead {
                break;
            }
        }
    }
    dfs(&primes, &suffix_min, exp_bound, 0, BigRational::one(), c, &mut stack, &mut out);
    out.sort_by_key(|f| f.value());
    out
}
