//! Exact character tables by the Dixon–Schneider method.
//!
//! The pipeline:
//!
//! 1. **Class matrices.** For conjugacy classes `C_0 .. C_{k-1}` with fixed
//!    representatives `z_k`, the structure constants
//!    `a[i][j][k] = #{x in C_i : x^{-1} z_k in C_j}` make the matrix `A_i`
//!    (rows `j`, columns `k`). Every irreducible character `chi` yields a
//!    common right eigenvector `w_j = omega(C_j) = |C_j| chi(g_j) / chi(1)`,
//!    with `A_i w = omega(C_i) w`.
//! 2. **Modular splitting.** Over `F_L` for a prime `L = 1 (mod exponent)`
//!    with `L >= 2*floor(sqrt |G|)`, the `A_i` are simultaneously
//!    diagonalizable with the same eigenvector structure. Intersecting
//!    eigenspaces of successive `A_i` splits `F_L^k` into the `k` common
//!    one-dimensional eigenspaces.
//! 3. **Degrees.** Modular row orthogonality pins down
//!    `d^2 = |G| / sum_c w_c w_{c*} / |C_c| (mod L)`; the bound on `L` makes
//!    the integer degree `d <= sqrt|G|` unique.
//! 4. **Lift.** `chi(g_c)` is a sum of `d` eigenvalue roots of unity whose
//!    multiplicities come back exactly by a discrete Fourier inversion of
//!    the modular values along the cyclic group `<g_c>`; the result is an
//!    exact value in `Z[zeta_e]`.
//!
//! [`verify_orthogonality`] replays the first and second orthogonality
//! relations in exact cyclotomic arithmetic and is the pipeline's
//! self-contained soundness oracle.

pub mod cyclo;
mod linalg;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use num_integer::Roots;
use thiserror::Error;

use crate::numth::{factorize, is_prime};
use crate::permgroup::Group;
pub use cyclo::{cyclotomic_polynomial, CycloCtx, CyclotomicValue};
use linalg::{addm, invm, mulm, poly_eval, powm, subm, MatP};

/// Hard ceiling for the lifting prime search.
pub const PRIME_CEILING: u64 = 1_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChartabError {
    #[error("no lifting prime = 1 (mod {exponent}) and >= {bound} below {PRIME_CEILING}")]
    PrimeSearchExceeded { exponent: u64, bound: u64 },
    #[error("prime {prime} rejected: {reason}")]
    BadPrime { prime: u64, reason: &'static str },
    #[error("class matrices do not match the group")]
    MatrixShape,
    #[error("internal error: {0}")]
    Internal(&'static str),
}

/// One class matrix `A_i`, entries `a[i][j][k]` with `j` the row index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassMatrix {
    class: usize,
    k: usize,
    entries: Vec<u64>,
}

impl ClassMatrix {
    pub fn class(&self) -> usize {
        self.class
    }

    pub fn num_classes(&self) -> usize {
        self.k
    }

    /// `a[i][j][k]` for this matrix's fixed `i`.
    pub fn at(&self, j: usize, k: usize) -> u64 {
        self.entries[j * self.k + k]
    }
}

/// Computes `A_i` by direct counting: for each `x in C_i` and each class
/// representative `z_k`, the product `x^{-1} z_k` lands in exactly one class
/// `j` and bumps `a[i][j][k]`.
pub fn class_matrix(g: &Group, i: usize) -> ClassMatrix {
    let classes = g.classes();
    let k = classes.num_classes();
    let reps: Vec<&crate::permgroup::Permutation> =
        (0..k).map(|c| g.element(classes.rep(c))).collect();
    let mut entries = vec![0u64; k * k];
    for &member in classes.members(i) {
        let x_inv = g.element(member as usize).inverse();
        for (kk, z) in reps.iter().enumerate() {
            let prod = x_inv.compose(z);
            let j = classes.class_of(
                g.index_of(&prod)
                    .expect("class members multiply inside the group"),
            );
            entries[j * k + kk] += 1;
        }
    }
    ClassMatrix {
        class: i,
        k,
        entries,
    }
}

/// All class matrices `A_0 .. A_{k-1}` in order.
pub fn class_matrices(g: &Group) -> Vec<ClassMatrix> {
    (0..g.num_classes()).map(|i| class_matrix(g, i)).collect()
}

/// Smallest prime `L = 1 (mod exponent)` with `L >= 2*floor(sqrt(order))`,
/// the Dixon lifting prime. Errors out above [`PRIME_CEILING`].
pub fn choose_lifting_prime(order: u64, exponent: u64) -> Result<u64, ChartabError> {
    let bound = 2 * order.sqrt();
    let mut l = exponent + 1;
    while l <= PRIME_CEILING {
        if l >= bound && is_prime(l) {
            return Ok(l);
        }
        l += exponent;
    }
    Err(ChartabError::PrimeSearchExceeded { exponent, bound })
}

/// Checks a (possibly user-supplied) lifting prime against every property
/// the pipeline relies on.
pub fn validate_lifting_prime(order: u64, exponent: u64, prime: u64) -> Result<(), ChartabError> {
    let reject = |reason| Err(ChartabError::BadPrime { prime, reason });
    if !is_prime(prime) {
        return reject("not prime");
    }
    if prime % exponent != 1 {
        return reject("not congruent to 1 modulo the group exponent");
    }
    if prime < 2 * order.sqrt() {
        return reject("smaller than twice the square root of the group order");
    }
    if prime > PRIME_CEILING {
        return reject("exceeds the search ceiling");
    }
    if order % prime == 0 {
        return reject("divides the group order");
    }
    Ok(())
}

/// The table of central characters and character values over `F_L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularTable {
    prime: u64,
    degrees: Vec<u64>,
    /// `omegas[r][c]` = central character `|C_c| chi_r(g_c) / chi_r(1)` mod L.
    omegas: Vec<Vec<u64>>,
    /// `thetas[r][c]` = character value `chi_r(g_c)` mod L.
    thetas: Vec<Vec<u64>>,
}

impl ModularTable {
    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn omega(&self, row: usize, class: usize) -> u64 {
        self.omegas[row][class]
    }

    pub fn theta(&self, row: usize, class: usize) -> u64 {
        self.thetas[row][class]
    }
}

/// Splits `F_L^k` into the common eigenspaces of the class matrices and
/// recovers degrees and modular character values.
pub fn modular_character_table(
    g: &Group,
    prime: u64,
    matrices: &[ClassMatrix],
) -> Result<ModularTable, ChartabError> {
    let classes = g.classes();
    let k = classes.num_classes();
    let p = prime;
    if matrices.len() != k || matrices.iter().enumerate().any(|(i, m)| m.class != i || m.k != k) {
        return Err(ChartabError::MatrixShape);
    }

    // Invariant subspaces as RREF row bases; start with the full space and
    // split on each class matrix until everything is one-dimensional.
    let mut spaces: Vec<MatP> = vec![MatP::identity(k, p)];
    for mat in matrices.iter().skip(1) {
        if spaces.iter().all(|s| s.rows == 1) {
            break;
        }
        let mut full = MatP::zero(k, k, p);
        for j in 0..k {
            for c in 0..k {
                full.set(j, c, mat.at(j, c) % p);
            }
        }
        let cp = full.charpoly();
        let roots: Vec<u64> = (0..p).filter(|&x| poly_eval(&cp, x, p) == 0).collect();

        let mut next: Vec<MatP> = Vec::with_capacity(spaces.len());
        for s in spaces {
            let m = s.rows;
            if m == 1 {
                next.push(s);
                continue;
            }
            // The basis is in RREF, so coordinates of any vector in the
            // subspace can be read off at the pivot columns, giving the
            // restriction M[t][j] = (A b_j)[pivot_t].
            let pivots: Vec<usize> = (0..m)
                .map(|r| {
                    s.row(r)
                        .iter()
                        .position(|&v| v != 0)
                        .expect("RREF basis rows are nonzero")
                })
                .collect();
            let mut restr = MatP::zero(m, m, p);
            for j in 0..m {
                let bj = s.row(j);
                for (t, &pt) in pivots.iter().enumerate() {
                    let mut acc = 0u64;
                    for (c, &bjc) in bj.iter().enumerate() {
                        acc = addm(acc, mulm(full.at(pt, c), bjc, p), p);
                    }
                    restr.set(t, j, acc);
                }
            }
            let mut found = 0usize;
            for &lam in &roots {
                let mut shifted = restr.clone();
                for t in 0..m {
                    let v = subm(shifted.at(t, t), lam, p);
                    shifted.set(t, t, v);
                }
                let kernel = shifted.kernel_basis();
                if kernel.is_empty() {
                    continue;
                }
                found += kernel.len();
                // Map eigencoordinates back to F_L^k and renormalize.
                let mut sub = MatP::zero(kernel.len(), k, p);
                for (r, kappa) in kernel.iter().enumerate() {
                    for (t, &kt) in kappa.iter().enumerate() {
                        if kt != 0 {
                            for c in 0..k {
                                let v = addm(
                                    sub.at(r, c),
                                    mulm(kt, s.row(t)[c], p),
                                    p,
                                );
                                sub.set(r, c, v);
                            }
                        }
                    }
                }
                sub.rref();
                if sub.rows != kernel.len() {
                    return Err(ChartabError::Internal(
                        "eigenspace basis lost rank on reduction",
                    ));
                }
                next.push(sub);
            }
            if found != m {
                return Err(ChartabError::Internal(
                    "eigenspace dimensions do not sum to the subspace dimension",
                ));
            }
        }
        spaces = next;
    }
    if spaces.len() != k || spaces.iter().any(|s| s.rows != 1) {
        return Err(ChartabError::Internal(
            "class matrices failed to separate the eigenvectors",
        ));
    }

    // Normalize each eigenvector by its identity-class coordinate, which is
    // nonzero because the true central character has omega(C_0) = 1.
    let mut omegas: Vec<Vec<u64>> = Vec::with_capacity(k);
    for s in &spaces {
        let w = s.row(0);
        if w[0] == 0 {
            return Err(ChartabError::Internal(
                "eigenvector vanishes on the identity class",
            ));
        }
        let inv = invm(w[0], p);
        omegas.push(w.iter().map(|&x| mulm(x, inv, p)).collect());
    }

    // Degrees from modular row orthogonality.
    let order = g.order();
    let order_mod = order % p;
    let isq = order.sqrt();
    let size_inv: Vec<u64> = (0..k).map(|c| invm(classes.size(c) % p, p)).collect();
    let mut degrees = Vec::with_capacity(k);
    for w in &omegas {
        let mut s = 0u64;
        for c in 0..k {
            let wc_star = w[classes.inverse_class(c)];
            s = addm(s, mulm(mulm(w[c], wc_star, p), size_inv[c], p), p);
        }
        if s == 0 {
            return Err(ChartabError::Internal("degree denominator vanished"));
        }
        let d2 = mulm(order_mod, invm(s, p), p);
        let d = (1..=isq)
            .find(|&d| mulm(d % p, d % p, p) == d2)
            .ok_or(ChartabError::Internal(
                "no integer degree matches the modular square",
            ))?;
        degrees.push(d);
    }

    // Character values theta(c) = d * omega_c / |C_c| mod L.
    let thetas: Vec<Vec<u64>> = omegas
        .iter()
        .zip(&degrees)
        .map(|(w, &d)| {
            (0..k)
                .map(|c| mulm(mulm(d % p, w[c], p), size_inv[c], p))
                .collect()
        })
        .collect();

    Ok(ModularTable {
        prime,
        degrees,
        omegas,
        thetas,
    })
}

/// The exact character table: degrees and cyclotomic values per class, in
/// the canonical row order (trivial character first, then ascending degree,
/// ties broken by the lexicographic canonical value vectors).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    order: u64,
    prime: u64,
    exponent: u64,
    class_sizes: Vec<u64>,
    rep_orders: Vec<u64>,
    inverse_class: Vec<usize>,
    degrees: Vec<u64>,
    /// `values[row][class]`.
    values: Vec<Vec<CyclotomicValue>>,
    ctx: CycloCtx,
}

impl CharacterTable {
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn num_classes(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }

    pub fn rep_orders(&self) -> &[u64] {
        &self.rep_orders
    }

    pub fn inverse_class(&self, c: usize) -> usize {
        self.inverse_class[c]
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn degree(&self, row: usize) -> u64 {
        self.degrees[row]
    }

    pub fn value(&self, row: usize, class: usize) -> &CyclotomicValue {
        &self.values[row][class]
    }

    pub fn row(&self, row: usize) -> &[CyclotomicValue] {
        &self.values[row]
    }

    pub fn ctx(&self) -> &CycloCtx {
        &self.ctx
    }

    /// Distinct character degrees, ascending (the set `cd(G)`).
    pub fn degree_set(&self) -> Vec<u64> {
        let mut ds = self.degrees.clone();
        ds.sort_unstable();
        ds.dedup();
        ds
    }
}

/// Lifts a modular table to exact cyclotomic character values.
///
/// For each row and class, the eigenvalue multiplicities of `rho(g_c)` come
/// from inverting the discrete Fourier transform of the modular values along
/// the cyclic group generated by `g_c`: with `o = ord(g_c)`, only exponents
/// `j = (e/o) s` occur, and
/// `m_j = o^{-1} * sum_a theta(g_c^a) z^{-ja} (mod L)`,
/// which equals the true multiplicity because `0 <= m_j <= d < L`.
pub fn lift_to_cyclotomic(g: &Group, mt: &ModularTable) -> Result<CharacterTable, ChartabError> {
    let classes = g.classes();
    let k = classes.num_classes();
    let p = mt.prime;
    let e = g.exponent();
    let ctx = CycloCtx::new(e);

    // Smallest integer of multiplicative order exactly e modulo L.
    let e_primes: Vec<u64> = factorize(e).into_iter().map(|(q, _)| q).collect();
    let z = (1..p)
        .find(|&z| powm(z, e, p) == 1 && e_primes.iter().all(|&q| powm(z, e / q, p) != 1))
        .ok_or(ChartabError::Internal(
            "no element of order e modulo the lifting prime",
        ))?;
    let mut zpow = vec![1u64; e as usize];
    for j in 1..e as usize {
        zpow[j] = mulm(zpow[j - 1], z, p);
    }

    let mut rows: Vec<(u64, Vec<CyclotomicValue>)> = Vec::with_capacity(k);
    for r in 0..k {
        let d = mt.degrees[r];
        let mut vals = Vec::with_capacity(k);
        for c in 0..k {
            let o = classes.rep_order(c);
            let step = (e / o) as usize;
            let inv_o = invm(o % p, p);
            let theta_pow: Vec<u64> = (0..o).map(|a| mt.thetas[r][classes.power_class(c, a)]).collect();
            let mut mults = vec![0u32; e as usize];
            let mut total = 0u64;
            for s in 0..o as usize {
                let mut acc = 0u64;
                for (a, &th) in theta_pow.iter().enumerate() {
                    // z^{-j a} for j = step * s.
                    let exp = (step * s * a) % e as usize;
                    let zneg = zpow[(e as usize - exp) % e as usize];
                    acc = addm(acc, mulm(th, zneg, p), p);
                }
                let m = mulm(inv_o, acc, p);
                if m > d {
                    return Err(ChartabError::Internal(
                        "eigenvalue multiplicity exceeds the degree",
                    ));
                }
                total += m;
                mults[step * s] = m as u32;
            }
            if total != d {
                return Err(ChartabError::Internal(
                    "eigenvalue multiplicities do not sum to the degree",
                ));
            }
            vals.push(CyclotomicValue::from_mults(&ctx, mults));
        }
        rows.push((d, vals));
    }

    // Canonical row order: the trivial character first, then by degree and
    // the lexicographic canonical vectors.
    let is_trivial =
        |row: &(u64, Vec<CyclotomicValue>)| row.0 == 1 && row.1.iter().all(|v| v.mults()[0] == 1);
    rows.sort_by(|a, b| {
        (is_trivial(b), a.0)
            .cmp(&(is_trivial(a), b.0))
            .then_with(|| {
                for (va, vb) in a.1.iter().zip(&b.1) {
                    let c = va.canonical().cmp(vb.canonical());
                    if c != core::cmp::Ordering::Equal {
                        return c;
                    }
                }
                core::cmp::Ordering::Equal
            })
    });
    if !is_trivial(&rows[0]) {
        return Err(ChartabError::Internal("trivial character missing"));
    }

    let order = g.order();
    let degree_square_sum: u64 = rows.iter().map(|r| r.0 * r.0).sum();
    if degree_square_sum != order {
        return Err(ChartabError::Internal(
            "degree squares do not sum to the group order",
        ));
    }
    if rows.iter().any(|r| order % r.0 != 0) {
        return Err(ChartabError::Internal(
            "a degree does not divide the group order",
        ));
    }

    let (degrees, values): (Vec<u64>, Vec<Vec<CyclotomicValue>>) = rows.into_iter().unzip();
    Ok(CharacterTable {
        order,
        prime: p,
        exponent: e,
        class_sizes: classes.sizes().into(),
        rep_orders: classes.rep_orders().into(),
        inverse_class: (0..k).map(|c| classes.inverse_class(c)).collect(),
        degrees,
        values,
        ctx,
    })
}

/// Full pipeline with the automatically chosen lifting prime.
pub fn character_table(g: &Group) -> Result<CharacterTable, ChartabError> {
    let prime = choose_lifting_prime(g.order(), g.exponent())?;
    let matrices = class_matrices(g);
    let mt = modular_character_table(g, prime, &matrices)?;
    lift_to_cyclotomic(g, &mt)
}

/// Full pipeline from precomputed parts (validated), for prime overrides and
/// parallel class-matrix computation.
pub fn character_table_from_parts(
    g: &Group,
    prime: u64,
    matrices: &[ClassMatrix],
) -> Result<CharacterTable, ChartabError> {
    validate_lifting_prime(g.order(), g.exponent(), prime)?;
    let mt = modular_character_table(g, prime, matrices)?;
    lift_to_cyclotomic(g, &mt)
}

/// First failure found while replaying the orthogonality relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrthogonalityFailure {
    DegreeSum {
        sum: u64,
        order: u64,
    },
    /// Row relation `sum_c |C_c| chi_r1(c) conj(chi_r2(c))` missed its target.
    Row {
        r1: usize,
        r2: usize,
        got: Vec<i64>,
        expected: i64,
    },
    /// Column relation `sum_r chi_r(c1) conj(chi_r(c2))` missed its target.
    Column {
        c1: usize,
        c2: usize,
        got: Vec<i64>,
        expected: i64,
    },
}

impl fmt::Display for OrthogonalityFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrthogonalityFailure::DegreeSum { sum, order } => {
                write!(f, "sum of degree squares {sum} != group order {order}")
            }
            OrthogonalityFailure::Row { r1, r2, got, expected } => write!(
                f,
                "row orthogonality failed for characters {r1},{r2}: got {got:?}, expected {expected}"
            ),
            OrthogonalityFailure::Column { c1, c2, got, expected } => write!(
                f,
                "column orthogonality failed for classes {c1},{c2}: got {got:?}, expected {expected}"
            ),
        }
    }
}

/// Replays both orthogonality relations in exact cyclotomic arithmetic.
///
/// Row: `sum_c |C_c| chi_r1(c) conj(chi_r2(c)) = |G| delta_{r1 r2}`.
/// Column: `sum_r chi_r(c1) conj(chi_r(c2)) = (|G| / |C_c1|) delta_{c1 c2}`.
/// Both products expand as convolutions of eigenvalue multiplicity vectors;
/// conjugation is evaluation at the inverse class. Returns the first
/// counterexample, scanning rows then columns in index order.
pub fn verify_orthogonality(t: &CharacterTable) -> Result<(), OrthogonalityFailure> {
    let k = t.num_classes();
    let e = t.exponent as usize;
    let order = t.order;

    let sum: u64 = t.degrees.iter().map(|&d| d * d).sum();
    if sum != order {
        return Err(OrthogonalityFailure::DegreeSum { sum, order });
    }

    let expect = |target: i64| {
        let mut v = vec![0i64; t.ctx.canonical_len()];
        v[0] = target;
        v
    };

    let mut acc = vec![0i64; e];
    for r1 in 0..k {
        for r2 in r1..k {
            acc.iter_mut().for_each(|x| *x = 0);
            for c in 0..k {
                let weight = t.class_sizes[c] as i64;
                let v1 = &t.values[r1][c];
                let v2 = &t.values[r2][t.inverse_class[c]];
                for (j1, m1) in v1.support() {
                    for (j2, m2) in v2.support() {
                        acc[(j1 + j2) % e] += weight * m1 as i64 * m2 as i64;
                    }
                }
            }
            let got = t.ctx.reduce(&acc);
            let expected = if r1 == r2 { order as i64 } else { 0 };
            if got != expect(expected) {
                return Err(OrthogonalityFailure::Row { r1, r2, got, expected });
            }
        }
    }

    for c1 in 0..k {
        for c2 in c1..k {
            acc.iter_mut().for_each(|x| *x = 0);
            for r in 0..k {
                let v1 = &t.values[r][c1];
                let v2 = &t.values[r][t.inverse_class[c2]];
                for (j1, m1) in v1.support() {
                    for (j2, m2) in v2.support() {
                        acc[(j1 + j2) % e] += m1 as i64 * m2 as i64;
                    }
                }
            }
            let got = t.ctx.reduce(&acc);
            let expected = if c1 == c2 {
                (order / t.class_sizes[c1]) as i64
            } else {
                0
            };
            if got != expect(expected) {
                return Err(OrthogonalityFailure::Column { c1, c2, got, expected });
            }
        }
    }
    Ok(())
}

/// Renders one canonical value as `[c0,c1,...]`, trailing zeros trimmed.
fn write_canonical(out: &mut String, canonical: &[i64]) {
    let last = canonical.iter().rposition(|&c| c != 0).unwrap_or(0);
    out.push('[');
    for (i, c) in canonical[..=last].iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{c}");
    }
    out.push(']');
}

/// Deterministic text form: header (order, prime, exponent, class sizes),
/// then one `char` line per row with the degree and the canonical value
/// vectors.
pub fn format_table(t: &CharacterTable) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "order {}", t.order);
    let _ = writeln!(out, "prime {}", t.prime);
    let _ = writeln!(out, "exponent {}", t.exponent);
    out.push_str("sizes");
    for s in &t.class_sizes {
        let _ = write!(out, " {s}");
    }
    out.push('\n');
    for (d, row) in t.degrees.iter().zip(&t.values) {
        let _ = write!(out, "char {d} :");
        for v in row {
            out.push(' ');
            write_canonical(&mut out, v.canonical());
        }
        out.push('\n');
    }
    out
}

/// Convenience used by tests and the report layer: format one value.
pub fn format_value(v: &CyclotomicValue) -> String {
    let mut s = String::new();
    write_canonical(&mut s, v.canonical());
    s
}
