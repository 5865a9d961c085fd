//! Small finite fields `GF(p^f)` with full lookup tables.
//!
//! Elements are indices `0..q`; index `e` stands for the polynomial whose
//! coefficient of `x^i` is the `i`-th base-`p` digit of `e`. Arithmetic is
//! modulo the lexicographically smallest monic irreducible polynomial of
//! degree `f` (ordered by the integer value of the coefficient vector), so
//! every table is reproducible from `(p, f)` alone.

use alloc::vec;
use alloc::vec::Vec;

use super::FamilyError;
use crate::numth::is_prime;

/// Upper bound on the field size; keeps the `q x q` tables tiny.
pub const MAX_Q: u64 = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    f: u32,
    q: u64,
    /// Monic modulus, coefficients ascending, length `f + 1`.
    modulus: Vec<u64>,
    mul: Vec<u64>,
    add: Vec<u64>,
    generator: u64,
}

/// Polynomial product modulo the modulus, coefficients over `GF(p)`.
fn polymul_mod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let f = modulus.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    // Reduce: x^f = -(m_0 + m_1 x + ... + m_{f-1} x^{f-1}).
    for d in (f..prod.len()).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for (i, &mi) in modulus.iter().take(f).enumerate() {
            let sub = (c * mi) % p;
            prod[d - f + i] = (prod[d - f + i] + p - sub) % p;
        }
    }
    prod.truncate(f.max(1));
    prod
}

fn digits(mut e: u64, p: u64, f: u32) -> Vec<u64> {
    let mut out = Vec::with_capacity(f as usize);
    for _ in 0..f {
        out.push(e % p);
        e /= p;
    }
    out
}

fn undigits(coeffs: &[u64], p: u64) -> u64 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Irreducibility over `GF(p)` by exhaustive trial division with monic
/// divisors of degree `1..=f/2` (desk scale: `f <= 6`).
fn is_irreducible(modulus: &[u64], p: u64) -> bool {
    let f = modulus.len() - 1;
    if f == 1 {
        return true;
    }
    for d in 1..=f / 2 {
        let count = p.pow(d as u32);
        for low in 0..count {
            let mut div = digits(low, p, d as u32);
            div.push(1);
            // Remainder of modulus by div via schoolbook division.
            let mut rem: Vec<u64> = modulus.to_vec();
            while rem.len() > d {
                let lead = rem[rem.len() - 1];
                if lead != 0 {
                    let shift = rem.len() - 1 - d;
                    for (i, &ci) in div.iter().enumerate() {
                        let sub = (lead * ci) % p;
                        rem[shift + i] = (rem[shift + i] + p - sub) % p;
                    }
                }
                rem.pop();
            }
            if rem.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    pub fn new(p: u64, f: u32) -> Result<FiniteField, FamilyError> {
        if !is_prime(p) {
            return Err(FamilyError::BadField { p, f });
        }
        if f == 0 || f > 6 || p.checked_pow(f).is_none_or(|q| q > MAX_Q) {
            return Err(FamilyError::BadField { p, f });
        }
        let q = p.pow(f);

        // Lexicographically smallest monic irreducible modulus: scan the
        // integer encodings of the low-coefficient vectors ascending.
        let modulus = (0..q)
            .map(|low| {
                let mut m = digits(low, p, f);
                m.push(1);
                m
            })
            .find(|m| is_irreducible(m, p))
            .expect("an irreducible polynomial of every degree exists");

        let qs = q as usize;
        let mut add = vec![0u64; qs * qs];
        let mut mul = vec![0u64; qs * qs];
        for a in 0..q {
            let da = digits(a, p, f);
            for b in 0..q {
                let db = digits(b, p, f);
                let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = undigits(&sum, p);
                mul[(a * q + b) as usize] = undigits(&polymul_mod(&da, &db, &modulus, p), p);
            }
        }

        let mut field = FiniteField {
            p,
            f,
            q,
            modulus,
            mul,
            add,
            generator: 1,
        };
        // Smallest multiplicative generator; the multiplicative group of a
        // finite field is cyclic, so one exists.
        field.generator = (1..q)
            .find(|&g| field.mult_order(g) == q - 1)
            .expect("the multiplicative group of a finite field is cyclic");
        Ok(field)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn generator(&self) -> u64 {
        self.generator
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        self.add[(a * self.q + b) as usize]
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.mul[(a * self.q + b) as usize]
    }

    pub fn neg(&self, a: u64) -> u64 {
        (0..self.q)
            .find(|&b| self.add(a, b) == 0)
            .expect("additive inverse exists")
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert_ne!(a, 0, "zero has no multiplicative inverse");
        (1..self.q)
            .find(|&b| self.mul(a, b) == 1)
            .expect("multiplicative inverse exists")
    }

    pub fn pow(&self, a: u64, n: u64) -> u64 {
        let mut acc = 1;
        for _ in 0..n {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// The field automorphism `a -> a^p` (generates the Galois group).
    pub fn frobenius(&self, a: u64) -> u64 {
        self.pow(a, self.p)
    }

    pub fn mult_order(&self, a: u64) -> u64 {
        assert_ne!(a, 0);
        let mut x = a;
        let mut n = 1;
        while x != 1 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }
}
