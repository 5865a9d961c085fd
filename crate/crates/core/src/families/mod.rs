//! Constructors for the projective linear families and their expected
//! degree/codegree supersets.
//!
//! All groups act on the projective line `PG(1,q)` (or, for `SL2`, on the
//! nonzero vectors of `GF(q)^2`), with a fixed deterministic point
//! numbering: point `0` is `infinity`, point `1 + e` is the field element
//! `e`. Generators are the classical Mobius maps `x -> x+1`, `x -> g^2 x`,
//! `x -> -1/x`, extended by the diagonal map `x -> gx`, the field
//! automorphism `x -> x^p`, or (for `M10`) the semilinear map `x -> g x^3`
//! over `GF(9)`. Every constructor verifies the resulting order against the
//! closed form, so a generator bug cannot slip through silently.

mod field;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::gcd;
use thiserror::Error;

use crate::numth::{divisors, factorize};
use crate::permgroup::{generate_group, Group, PermError, Permutation};
pub use field::FiniteField;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("q = {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("GF({p}^{f}) is outside the supported range")]
    BadField { p: u64, f: u32 },
    #[error("{kind} with q = {q} is not supported: {reason}")]
    Unsupported {
        kind: FamilyKind,
        q: u64,
        reason: &'static str,
    },
    #[error("construction self-check failed: {check} (expected {expected}, got {got})")]
    Construction {
        check: &'static str,
        expected: u64,
        got: u64,
    },
    #[error("the first superset formula requires odd q, got {0}")]
    Eq1RequiresOddQ(u64),
    #[error("{0} is not one of the three-codegree families")]
    NotClassificationFamily(FamilyKind),
    #[error("group generation failed: {0}")]
    Perm(#[from] PermError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    L2,
    Pgl2,
    Sl2,
    PsigmaL2,
    PgammaL2,
    M10,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            FamilyKind::L2 => "L2",
            FamilyKind::Pgl2 => "PGL2",
            FamilyKind::Sl2 => "SL2",
            FamilyKind::PsigmaL2 => "PSigmaL2",
            FamilyKind::PgammaL2 => "PGammaL2",
            FamilyKind::M10 => "M10",
        };
        f.write_str(name)
    }
}

/// A validated family member: `q = p^f`, the field-part index `b`, and
/// whether the group contains the diagonal automorphism of order 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySpec {
    kind: FamilyKind,
    q: u64,
    p: u64,
    f: u32,
    b: u64,
    contains_diagonal: bool,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, q: u64) -> Result<FamilySpec, FamilyError> {
        let factors = factorize(q);
        if factors.len() != 1 {
            return Err(FamilyError::NotPrimePower(q));
        }
        let (p, f) = factors[0];
        let unsupported = |reason| {
            Err(FamilyError::Unsupported { kind, q, reason })
        };
        match kind {
            FamilyKind::L2 => {
                if !(4..=32).contains(&q) {
                    return unsupported("q must lie in 4..=32");
                }
            }
            FamilyKind::Pgl2 => {
                if q % 2 == 0 {
                    return unsupported("even q gives PGL2(q) = L2(q); use L2");
                }
                if !(5..=13).contains(&q) {
                    return unsupported("odd q must lie in 5..=13");
                }
            }
            FamilyKind::Sl2 => {
                if q % 2 == 0 {
                    return unsupported("even q gives SL2(q) = L2(q); use L2");
                }
                if !(3..=13).contains(&q) {
                    return unsupported("odd q must lie in 3..=13");
                }
            }
            FamilyKind::PsigmaL2 | FamilyKind::PgammaL2 => {
                if !(4..=32).contains(&q) {
                    return unsupported("q must lie in 4..=32");
                }
                if f < 2 {
                    return unsupported("a prime q has no field automorphisms");
                }
            }
            FamilyKind::M10 => {
                if q != 9 {
                    return unsupported("M10 is defined over GF(9)");
                }
            }
        }
        let b = match kind {
            FamilyKind::L2 | FamilyKind::Pgl2 | FamilyKind::Sl2 => 1,
            FamilyKind::PsigmaL2 | FamilyKind::PgammaL2 => f as u64,
            FamilyKind::M10 => 2,
        };
        let contains_diagonal = match kind {
            FamilyKind::Pgl2 => true,
            FamilyKind::PgammaL2 => q % 2 == 1,
            _ => false,
        };
        Ok(FamilySpec {
            kind,
            q,
            p,
            f,
            b,
            contains_diagonal,
        })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    /// The field-part index `b` entering the superset formulas.
    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn contains_diagonal(&self) -> bool {
        self.contains_diagonal
    }

    /// Closed-form order of the family member.
    pub fn expected_order(&self) -> u64 {
        let q = self.q;
        let d = gcd(2, q - 1);
        let l2 = q * (q * q - 1) / d;
        match self.kind {
            FamilyKind::L2 => l2,
            FamilyKind::Pgl2 | FamilyKind::Sl2 => q * (q * q - 1),
            FamilyKind::PsigmaL2 => l2 * self.f as u64,
            FamilyKind::PgammaL2 => l2 * d * self.f as u64,
            FamilyKind::M10 => 720,
        }
    }
}

/// The Mobius map `x -> x + 1` on `PG(1,q)`.
fn translation(k: &FiniteField) -> Permutation {
    let q = k.q();
    let mut images = vec![0u16; (q + 1) as usize];
    for e in 0..q {
        images[(1 + e) as usize] = 1 + k.add(e, 1) as u16;
    }
    Permutation::from_images(images).expect("translation is a bijection")
}

/// The Mobius map `x -> s x` for a nonzero scalar `s`.
fn scaling(k: &FiniteField, s: u64) -> Permutation {
    let q = k.q();
    let mut images = vec![0u16; (q + 1) as usize];
    for e in 0..q {
        images[(1 + e) as usize] = 1 + k.mul(s, e) as u16;
    }
    Permutation::from_images(images).expect("scaling is a bijection")
}

/// The Mobius map `x -> -1/x` (swaps 0 and infinity).
fn inversion(k: &FiniteField) -> Permutation {
    let q = k.q();
    let mut images = vec![0u16; (q + 1) as usize];
    images[0] = 1; // infinity -> 0
    images[1] = 0; // 0 -> infinity
    for e in 1..q {
        images[(1 + e) as usize] = 1 + k.neg(k.inv(e)) as u16;
    }
    Permutation::from_images(images).expect("inversion is a bijection")
}

/// The field automorphism `x -> x^p` extended by `infinity -> infinity`.
fn frobenius_map(k: &FiniteField) -> Permutation {
    let q = k.q();
    let mut images = vec![0u16; (q + 1) as usize];
    for e in 0..q {
        images[(1 + e) as usize] = 1 + k.frobenius(e) as u16;
    }
    Permutation::from_images(images).expect("frobenius is a bijection")
}

/// The semilinear map `x -> g x^3` over `GF(9)` whose extension of `L2(9)`
/// is `M10` (the diagonal-times-field outer automorphism).
fn m10_map(k: &FiniteField) -> Permutation {
    let q = k.q();
    let g = k.generator();
    let mut images = vec![0u16; (q + 1) as usize];
    for e in 0..q {
        images[(1 + e) as usize] = 1 + k.mul(g, k.pow(e, 3)) as u16;
    }
    Permutation::from_images(images).expect("the semilinear map is a bijection")
}

fn check_order(group: Group, expected: u64) -> Result<Group, FamilyError> {
    if group.order() != expected {
        return Err(FamilyError::Construction {
            check: "group order",
            expected,
            got: group.order(),
        });
    }
    Ok(group)
}

/// `L2(q)` and its diagonal/field extensions on the `q + 1` projective
/// points.
pub fn l2_type_group(spec: &FamilySpec) -> Result<Group, FamilyError> {
    let k = FiniteField::new(spec.p, spec.f)?;
    let g = k.generator();
    let mut gens = vec![
        translation(&k),
        scaling(&k, k.mul(g, g)),
        inversion(&k),
    ];
    match spec.kind {
        FamilyKind::L2 => {}
        FamilyKind::Pgl2 => gens.push(scaling(&k, g)),
        FamilyKind::PsigmaL2 => gens.push(frobenius_map(&k)),
        FamilyKind::PgammaL2 => {
            if spec.contains_diagonal {
                gens.push(scaling(&k, g));
            }
            gens.push(frobenius_map(&k));
        }
        FamilyKind::M10 => gens.push(m10_map(&k)),
        FamilyKind::Sl2 => {
            return Err(FamilyError::Unsupported {
                kind: spec.kind,
                q: spec.q,
                reason: "SL2 does not act faithfully on the projective line",
            })
        }
    }
    let expected = spec.expected_order();
    let group = generate_group((spec.q + 1) as usize, &gens, expected)?;
    let group = check_order(group, expected)?;
    if spec.kind == FamilyKind::M10 {
        let spectrum = group.order_spectrum();
        if spectrum != [1, 2, 3, 4, 5, 8] {
            return Err(FamilyError::Construction {
                check: "M10 element-order spectrum {1,2,3,4,5,8}",
                expected: 8,
                got: *spectrum.last().unwrap_or(&0),
            });
        }
    }
    Ok(group)
}

/// The point stabilizer `M10 = L2(9) . 2` inside `M11`, realized as `L2(9)`
/// extended by the semilinear map; order and spectrum are verified.
pub fn m10() -> Result<Group, FamilyError> {
    let spec = FamilySpec::new(FamilyKind::M10, 9)?;
    l2_type_group(&spec)
}

/// `SL2(q)` for odd `q`, acting on the `q^2 - 1` nonzero column vectors of
/// `GF(q)^2`; vector `(a, b)` is point `a q + b - 1`.
pub fn sl2(q: u64) -> Result<Group, FamilyError> {
    let spec = FamilySpec::new(FamilyKind::Sl2, q)?;
    let k = FiniteField::new(spec.p, spec.f)?;
    let degree = (q * q - 1) as usize;
    // Matrix [[alpha, beta], [gamma, delta]] sends (a, b) to
    // (alpha a + beta b, gamma a + delta b).
    let mat = |alpha: u64, beta: u64, gamma: u64, delta: u64| -> Permutation {
        let mut images = vec![0u16; degree];
        for a in 0..q {
            for b in 0..q {
                if a == 0 && b == 0 {
                    continue;
                }
                let x = k.add(k.mul(alpha, a), k.mul(beta, b));
                let y = k.add(k.mul(gamma, a), k.mul(delta, b));
                images[(a * q + b - 1) as usize] = (x * q + y - 1) as u16;
            }
        }
        Permutation::from_images(images).expect("invertible matrices act by bijections")
    };
    let g = k.generator();
    let gens = vec![
        mat(1, 1, 0, 1),
        mat(1, g, 0, 1),
        mat(0, 1, k.neg(1), 0),
    ];
    let expected = spec.expected_order();
    check_order(generate_group(degree, &gens, expected)?, expected)
}

/// Builds any family member.
pub fn build(spec: &FamilySpec) -> Result<Group, FamilyError> {
    match spec.kind {
        FamilyKind::Sl2 => sl2(spec.q),
        _ => l2_type_group(spec),
    }
}

fn sort_dedup(mut v: Vec<u64>) -> Vec<u64> {
    v.sort_unstable();
    v.dedup();
    v
}

/// `+1` if `q = 1 (mod 4)`, `-1` if `q = 3 (mod 4)`.
fn epsilon(q: u64) -> i64 {
    debug_assert_eq!(q % 2, 1);
    if q % 4 == 1 {
        1
    } else {
        -1
    }
}

fn q_plus_epsilon(q: u64) -> u64 {
    if epsilon(q) == 1 {
        q + 1
    } else {
        q - 1
    }
}

/// The nonlinear codegree sets of the classification's three families:
/// `{q(q-1), q^2-1, q(q+1)}` for `L2(2^f)` and `PGL2(q)` with odd `q >= 5`,
/// and `{45, 72, 80}` for `M10`.
pub fn expected_cod_theorem_a(spec: &FamilySpec) -> Result<Vec<u64>, FamilyError> {
    let q = spec.q;
    match spec.kind {
        FamilyKind::L2 if q % 2 == 0 => {
            Ok(sort_dedup(vec![q * (q - 1), q * q - 1, q * (q + 1)]))
        }
        FamilyKind::Pgl2 if q >= 5 => {
            Ok(sort_dedup(vec![q * (q - 1), q * q - 1, q * (q + 1)]))
        }
        FamilyKind::M10 => Ok(vec![45, 72, 80]),
        _ => Err(FamilyError::NotClassificationFamily(spec.kind)),
    }
}

/// Codegree superset for the contains-diagonal case (odd `q`):
/// `{b(q^2-1)} U {bq(q+1)/j : j | b} U {bq(q-1)/j : j | b}`.
pub fn eq1_superset(q: u64, b: u64) -> Result<Vec<u64>, FamilyError> {
    if q % 2 == 0 {
        return Err(FamilyError::Eq1RequiresOddQ(q));
    }
    let mut set = vec![b * (q * q - 1)];
    for j in divisors(b) {
        set.push(b * q * (q + 1) / j);
        set.push(b * q * (q - 1) / j);
    }
    Ok(sort_dedup(set))
}

/// Codegree superset for the no-diagonal case, `d = (2, q-1)`:
/// `{b(q^2-1)/d, 2bq(q^2-1)/(d(q+eps))} U {bq(q+1)/(dj) : j | b}
/// U {bq(q-1)/(dj) : j | b}`; the epsilon term exists only for odd `q`.
pub fn eq2_superset(q: u64, b: u64) -> Vec<u64> {
    let d = gcd(2, q - 1);
    let mut set = vec![b * (q * q - 1) / d];
    if q % 2 == 1 {
        set.push(2 * b * q * (q * q - 1) / (d * q_plus_epsilon(q)));
    }
    for j in divisors(b) {
        set.push(b * q * (q + 1) / (d * j));
        set.push(b * q * (q - 1) / (d * j));
    }
    sort_dedup(set)
}

/// Degree superset for almost simple groups with socle `L2(q)`:
/// `{1, q, (q+eps)/2} U {(q-1)j : j | b} U {(q+1)j : j | b}`; the
/// `(q+eps)/2` term exists only for odd `q`.
pub fn white_degree_superset(q: u64, b: u64) -> Vec<u64> {
    let mut set = vec![1, q];
    if q % 2 == 1 {
        set.push(q_plus_epsilon(q) / 2);
    }
    for j in divisors(b) {
        set.push((q - 1) * j);
        set.push((q + 1) * j);
    }
    sort_dedup(set)
}

/// Every family member the classification names, for fingerprint matching:
/// `L2(2^f)` for `f = 2..=5`, `PGL2(q)` for odd `q = 5..=13`, and `M10`.
pub fn theorem_a_family_specs() -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    for q in [4u64, 8, 16, 32] {
        specs.push(FamilySpec::new(FamilyKind::L2, q).expect("in range"));
    }
    for q in [5u64, 7, 9, 11, 13] {
        specs.push(FamilySpec::new(FamilyKind::Pgl2, q).expect("in range"));
    }
    specs.push(FamilySpec::new(FamilyKind::M10, 9).expect("in range"));
    specs
}
