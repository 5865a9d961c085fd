//! Exact arithmetic in the cyclotomic integers `Z[zeta_e]`.
//!
//! A character value is a sum of `e`-th roots of unity, stored two ways:
//! the *multiplicity vector* `m` (length `e`, `m[j]` = how many eigenvalues
//! `zeta_e^j`, all nonnegative, summing to the degree) and the *canonical
//! form*, the remainder modulo the `e`-th cyclotomic polynomial (length
//! `phi(e)`), which is the unique representation in the power basis
//! `1, zeta, ..., zeta^(phi(e)-1)` and therefore directly comparable.
//!
//! Reduction never long-divides a high-degree polynomial: the table
//! `x^k mod Phi_e` for `k < e` is built once by the shift-and-reduce
//! recurrence, and any exponent vector reduces as a linear combination of
//! table rows. Coefficients stay tiny for the exponents arising here (at
//! most 2 in absolute value per table entry), but every step is checked
//! against i64 overflow through i128 intermediates anyway.

use alloc::vec;
use alloc::vec::Vec;

/// Cyclotomic polynomial `Phi_n`, integer coefficients low to high, computed
/// by exact division of `x^n - 1` by all `Phi_d`, `d | n`, `d < n`.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    assert!(n >= 1);
    let mut num: Vec<i128> = vec![0; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = poly_div_exact(&num, &cyclotomic_polynomial(d));
        }
    }
    num.iter()
        .map(|&c| i64::try_from(c).expect("cyclotomic coefficient fits i64"))
        .collect()
}

/// Exact division of integer polynomials (remainder must vanish).
fn poly_div_exact(num: &[i128], den: &[i64]) -> Vec<i128> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(dn >= dd);
    assert_eq!(den[dd], 1, "divisor must be monic");
    let mut rem: Vec<i128> = num.to_vec();
    let mut quot: Vec<i128> = vec![0; dn - dd + 1];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (j, &dc) in den.iter().enumerate() {
                rem[i + j] -= c * dc as i128;
            }
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "division must be exact");
    quot
}

/// Reduction context for a fixed conductor `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloCtx {
    e: u64,
    /// `Phi_e`, monic, degree `phi(e)`.
    phi: Vec<i64>,
    /// `rems[k] = x^k mod Phi_e`, each of length `phi(e)`, for `k < e`.
    rems: Vec<Vec<i64>>,
}

impl CycloCtx {
    pub fn new(e: u64) -> Self {
        let phi = cyclotomic_polynomial(e);
        let deg = phi.len() - 1; // = phi(e) >= 1
        let mut rems: Vec<Vec<i64>> = Vec::with_capacity(e as usize);
        let mut cur: Vec<i64> = vec![0; deg];
        cur[0] = 1;
        for _ in 0..e {
            rems.push(cur.clone());
            // cur *= x, then reduce the overflowing top coefficient.
            let top = cur[deg - 1];
            for i in (1..deg).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for (i, c) in cur.iter_mut().enumerate() {
                    let v = *c as i128 - top as i128 * phi[i] as i128;
                    *c = i64::try_from(v).expect("reduction coefficient fits i64");
                }
            }
        }
        CycloCtx { e, phi, rems }
    }

    pub fn conductor(&self) -> u64 {
        self.e
    }

    /// Degree of `Phi_e`, the canonical-form length (1 when `e = 1`).
    pub fn canonical_len(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn cyclotomic(&self) -> &[i64] {
        &self.phi
    }

    /// Canonical form of an exponent-coefficient vector: `coeffs[j]` copies
    /// of `zeta_e^j` (coefficients may be any integers).
    pub fn reduce(&self, coeffs: &[i64]) -> Vec<i64> {
        assert_eq!(coeffs.len(), self.e as usize);
        let len = self.canonical_len();
        let mut acc: Vec<i128> = vec![0; len];
        for (j, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (i, &r) in self.rems[j].iter().enumerate() {
                acc[i] += c as i128 * r as i128;
            }
        }
        acc.into_iter()
            .map(|c| i64::try_from(c).expect("canonical coefficient fits i64"))
            .collect()
    }
}

/// One exact character value: eigenvalue multiplicities plus canonical form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CyclotomicValue {
    /// `mults[j]` = multiplicity of the eigenvalue `zeta_e^j`; length `e`,
    /// entries sum to the character degree.
    mults: Vec<u32>,
    /// Remainder mod `Phi_e`, length `phi(e)` — the comparable form.
    canonical: Vec<i64>,
}

impl CyclotomicValue {
    pub fn from_mults(ctx: &CycloCtx, mults: Vec<u32>) -> Self {
        assert_eq!(mults.len(), ctx.e as usize);
        let coeffs: Vec<i64> = mults.iter().map(|&m| m as i64).collect();
        let canonical = ctx.reduce(&coeffs);
        CyclotomicValue { mults, canonical }
    }

    pub fn mults(&self) -> &[u32] {
        &self.mults
    }

    pub fn canonical(&self) -> &[i64] {
        &self.canonical
    }

    /// Number of eigenvalues, i.e. the degree of the owning character.
    pub fn weight(&self) -> u64 {
        self.mults.iter().map(|&m| m as u64).sum()
    }

    /// Complex conjugate: inverts every eigenvalue (`m'[j] = m[(e-j) mod e]`).
    pub fn conjugate(&self, ctx: &CycloCtx) -> Self {
        let e = self.mults.len();
        let mut mults = vec![0u32; e];
        for (j, &m) in self.mults.iter().enumerate() {
            mults[(e - j) % e] = m;
        }
        CyclotomicValue::from_mults(ctx, mults)
    }

    /// `Some(n)` when the value is the rational integer `n`.
    pub fn as_integer(&self) -> Option<i64> {
        if self.canonical[1..].iter().all(|&c| c == 0) {
            Some(self.canonical[0])
        } else {
            None
        }
    }

    /// True when the value equals its own degree: every eigenvalue is 1.
    /// For a character value this says the class lies in the kernel.
    pub fn is_full_weight(&self) -> bool {
        self.mults[0] as u64 == self.weight()
    }

    /// Sparse view: the `(exponent, multiplicity)` pairs with nonzero
    /// multiplicity.
    pub fn support(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.mults
            .iter()
            .enumerate()
            .filter(|(_, &m)| m != 0)
            .map(|(j, &m)| (j, m))
    }
}
