//! Elementary number theory by trial division.
//!
//! Inputs here are desk scale (group orders, field sizes), so everything is
//! exhaustive and exact: no probabilistic primality, no factoring tricks.

use alloc::vec::Vec;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumthError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("exponent f = {0} out of range (need f >= 2)")]
    ExponentOutOfRange(u32),
    #[error("{p}^{f} exceeds the 2^20 bound")]
    TooLarge { p: u64, f: u32 },
}

/// Prime factorization of `n >= 1` as ascending `(prime, exponent)` pairs.
///
/// `factorize(1)` is empty; `factorize(720)` is `[(2,4), (3,2), (5,1)]`.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factorize requires n >= 1");
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0u32;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut p = 3u64;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 2;
    }
    true
}

/// The `p`-part of `n`: the largest power of `p` dividing `n`.
///
/// `p_part(720, 2) = 16`, `p_part(720, 7) = 1`.
pub fn p_part(n: u64, p: u64) -> u64 {
    assert!(n >= 1, "p_part requires n >= 1");
    assert!(p >= 2, "p_part requires p >= 2");
    let mut part = 1u64;
    let mut m = n;
    while m % p == 0 {
        part *= p;
        m /= p;
    }
    part
}

/// All divisors of `n >= 1`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors requires n >= 1");
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// Outcome of the Zsigmondy search on `p^f + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Zsigmondy {
    /// Smallest prime `r` with `r | p^f + 1` and `r` dividing no `p^k - 1`
    /// for `1 <= k < 2f`.
    Prime(u64),
    /// No such prime exists (happens exactly at `p^f = 8` in range).
    Exceptional,
}

/// Zsigmondy primes for `p^f + 1`: the smallest prime dividing `p^f + 1`
/// but no `p^k - 1` with `1 <= k < 2f`.
///
/// Requires `p` prime, `f >= 2`, `p^f <= 2^20`. Returns
/// [`Zsigmondy::Exceptional`] when no qualifying prime exists; by Zsigmondy's
/// theorem that is exactly `p^f = 8` within the supported range.
pub fn zsigmondy_plus(p: u64, f: u32) -> Result<Zsigmondy, NumthError> {
    if !is_prime(p) {
        return Err(NumthError::NotPrime(p));
    }
    if f < 2 {
        return Err(NumthError::ExponentOutOfRange(f));
    }
    let q = p
        .checked_pow(f)
        .filter(|&q| q <= 1 << 20)
        .ok_or(NumthError::TooLarge { p, f })?;
    'next_r: for (r, _) in factorize(q + 1) {
        let mut pk = 1u64;
        for _ in 1..2 * f {
            pk *= p;
            if (pk - 1) % r == 0 {
                continue 'next_r;
            }
        }
        return Ok(Zsigmondy::Prime(r));
    }
    Ok(Zsigmondy::Exceptional)
}
