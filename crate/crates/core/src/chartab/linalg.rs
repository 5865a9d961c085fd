//! Dense linear algebra over the prime field `F_p`, `p < 2^31`.
//!
//! Textbook Gaussian elimination throughout: matrices here are at most a few
//! dozen rows (one per conjugacy class), so clarity wins over asymptotics.
//! All element values are reduced representatives in `0..p`.

use alloc::vec;
use alloc::vec::Vec;

/// A row-major matrix over `F_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct MatP {
    pub rows: usize,
    pub cols: usize,
    pub p: u64,
    pub a: Vec<u64>,
}

pub(crate) fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

pub(crate) fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub(crate) fn mulm(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

pub(crate) fn powm(mut a: u64, mut n: u64, p: u64) -> u64 {
    a %= p;
    let mut r = 1 % p;
    while n > 0 {
        if n & 1 == 1 {
            r = mulm(r, a, p);
        }
        a = mulm(a, a, p);
        n >>= 1;
    }
    r
}

/// Inverse of `a != 0` by Fermat's little theorem.
pub(crate) fn invm(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0, "inverse of zero mod {p}");
    powm(a, p - 2, p)
}

impl MatP {
    pub fn zero(rows: usize, cols: usize, p: u64) -> Self {
        MatP {
            rows,
            cols,
            p,
            a: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize, p: u64) -> Self {
        let mut m = MatP::zero(n, n, p);
        for i in 0..n {
            m.a[i * n + i] = 1 % p;
        }
        m
    }

    pub fn at(&self, r: usize, c: usize) -> u64 {
        self.a[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.a[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.a[r * self.cols..(r + 1) * self.cols]
    }

    /// In-place reduced row echelon form. Returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let p = self.p;
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| self.at(r, col) != 0) else {
                continue;
            };
            self.swap_rows(row, pr);
            let inv = invm(self.at(row, col), p);
            for c in col..self.cols {
                let v = mulm(self.at(row, c), inv, p);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && self.at(r, col) != 0 {
                    let f = self.at(r, col);
                    for c in col..self.cols {
                        let v = subm(self.at(r, c), mulm(f, self.at(row, c), p), p);
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        self.rows = row;
        self.a.truncate(row * self.cols);
        pivots
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        if r1 == r2 {
            return;
        }
        for c in 0..self.cols {
            self.a.swap(r1 * self.cols + c, r2 * self.cols + c);
        }
    }

    /// Basis of the null space `{v : Mv = 0}`, one vector per free column,
    /// in ascending free-column order (itself in RREF up to sign layout).
    pub fn kernel_basis(mut self) -> Vec<Vec<u64>> {
        let cols = self.cols;
        let p = self.p;
        let pivots = self.rref();
        let mut is_pivot = vec![false; cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in 0..cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![0u64; cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = subm(0, self.at(r, free), p);
            }
            basis.push(v);
        }
        basis
    }

    /// Characteristic polynomial `det(xI - M)`, monic, coefficients low to
    /// high, via similarity reduction to upper Hessenberg form and the
    /// leading-minor recurrence. Works for any prime `p`, including `p <= n`.
    pub fn charpoly(&self) -> Vec<u64> {
        assert_eq!(self.rows, self.cols, "charpoly needs a square matrix");
        let n = self.rows;
        let p = self.p;
        let mut h = self.clone();

        // Hessenberg reduction by row/column elimination with pivoting:
        // similarity transforms, so the characteristic polynomial survives.
        for col in 0..n.saturating_sub(2) {
            let Some(piv) = (col + 1..n).find(|&r| h.at(r, col) != 0) else {
                continue;
            };
            if piv != col + 1 {
                // Swap rows then matching columns (a similarity).
                h.swap_rows(piv, col + 1);
                for r in 0..n {
                    h.a.swap(r * n + piv, r * n + col + 1);
                }
            }
            let inv = invm(h.at(col + 1, col), p);
            for r in col + 2..n {
                let f = mulm(h.at(r, col), inv, p);
                if f == 0 {
                    continue;
                }
                // row_r -= f * row_{col+1}; col_{col+1} += f * col_r.
                for c in 0..n {
                    let v = subm(h.at(r, c), mulm(f, h.at(col + 1, c), p), p);
                    h.set(r, c, v);
                }
                for r2 in 0..n {
                    let v = addm(h.at(r2, col + 1), mulm(f, h.at(r2, r), p), p);
                    h.set(r2, col + 1, v);
                }
            }
        }

        // p_m(x) = charpoly of the leading m x m block of the Hessenberg
        // matrix: p_m = (x - h[m-1][m-1]) p_{m-1}
        //              - sum_{k>=1} h[m-1-k][m-1] (prod subdiag) p_{m-1-k}.
        let mut polys: Vec<Vec<u64>> = vec![vec![1 % p]];
        for m in 1..=n {
            let mut poly = poly_mul_linear(&polys[m - 1], h.at(m - 1, m - 1), p);
            let mut subdiag = 1u64 % p;
            for k in 1..m {
                subdiag = mulm(subdiag, h.at(m - k, m - k - 1), p);
                if subdiag == 0 {
                    break;
                }
                let f = mulm(h.at(m - 1 - k, m - 1), subdiag, p);
                poly_sub_scaled(&mut poly, &polys[m - 1 - k], f, p);
            }
            polys.push(poly);
        }
        polys.pop().unwrap()
    }
}

/// `poly * (x - c)`.
fn poly_mul_linear(poly: &[u64], c: u64, p: u64) -> Vec<u64> {
    let mut out = vec![0u64; poly.len() + 1];
    for (i, &a) in poly.iter().enumerate() {
        out[i + 1] = addm(out[i + 1], a, p);
        out[i] = subm(out[i], mulm(c, a, p), p);
    }
    out
}

/// `poly -= f * other` (aligned at degree 0).
fn poly_sub_scaled(poly: &mut [u64], other: &[u64], f: u64, p: u64) {
    for (i, &b) in other.iter().enumerate() {
        poly[i] = subm(poly[i], mulm(f, b, p), p);
    }
}

/// Horner evaluation.
pub(crate) fn poly_eval(poly: &[u64], x: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for &c in poly.iter().rev() {
        acc = addm(mulm(acc, x, p), c, p);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Deterministic pseudo-random stream for test matrices.
    fn xorshift(state: &mut u64) -> u64 {
        *state ^= *state << 13;
        *state ^= *state >> 7;
        *state ^= *state << 17;
        *state
    }

    /// Determinant by Gaussian elimination, the oracle for charpoly tests.
    fn det(m: &MatP) -> u64 {
        let mut m = m.clone();
        let n = m.rows;
        let p = m.p;
        let mut d = 1u64 % p;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| m.at(r, col) != 0) else {
                return 0;
            };
            if piv != col {
                m.swap_rows(piv, col);
                d = subm(0, d, p);
            }
            d = mulm(d, m.at(col, col), p);
            let inv = invm(m.at(col, col), p);
            for r in col + 1..n {
                let f = mulm(m.at(r, col), inv, p);
                for c in col..n {
                    let v = subm(m.at(r, c), mulm(f, m.at(col, c), p), p);
                    m.set(r, c, v);
                }
            }
        }
        d
    }

    #[test]
    fn modular_helpers() {
        assert_eq!(addm(5, 6, 7), 4);
        assert_eq!(subm(2, 6, 7), 3);
        assert_eq!(powm(3, 6, 7), 1);
        assert_eq!(mulm(invm(5, 13), 5, 13), 1);
        for p in [2u64, 3, 5, 13, 1021] {
            for a in 1..p.min(50) {
                assert_eq!(mulm(a, invm(a, p), p), 1, "p={p} a={a}");
            }
        }
    }

    #[test]
    fn rref_and_kernel() {
        // x + 2y + z = 0 over F_5 has a 2-dimensional kernel.
        let m = MatP {
            rows: 1,
            cols: 3,
            p: 5,
            a: vec![1, 2, 1],
        };
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 2);
        for v in &basis {
            let s = (v[0] + 2 * v[1] + v[2]) % 5;
            assert_eq!(s, 0);
        }
        // Full-rank square matrix: trivial kernel.
        let m = MatP {
            rows: 2,
            cols: 2,
            p: 7,
            a: vec![1, 1, 0, 3],
        };
        assert!(m.kernel_basis().is_empty());
    }

    /// charpoly(M)(x) must equal det(xI - M) for every x in F_p; checked
    /// exhaustively over small primes on pseudo-random matrices, including
    /// primes smaller than the dimension.
    #[test]
    fn charpoly_matches_determinant_oracle() {
        let mut state = 0x9e3779b97f4a7c15u64;
        for p in [2u64, 3, 5, 7, 13, 31, 97] {
            for n in 1..=6usize {
                for _ in 0..8 {
                    let mut m = MatP::zero(n, n, p);
                    for i in 0..n * n {
                        m.a[i] = xorshift(&mut state) % p;
                    }
                    let cp = m.charpoly();
                    assert_eq!(cp.len(), n + 1);
                    assert_eq!(cp[n], 1 % p, "monic");
                    for x in 0..p {
                        let mut xi_m = MatP::zero(n, n, p);
                        for r in 0..n {
                            for c in 0..n {
                                let v = if r == c {
                                    subm(x, m.at(r, c), p)
                                } else {
                                    subm(0, m.at(r, c), p)
                                };
                                xi_m.set(r, c, v);
                            }
                        }
                        assert_eq!(
                            poly_eval(&cp, x, p),
                            det(&xi_m),
                            "p={p} n={n} x={x}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn charpoly_known_small() {
        // [[0,1],[1,0]] over F_5: x^2 - 1.
        let m = MatP {
            rows: 2,
            cols: 2,
            p: 5,
            a: vec![0, 1, 1, 0],
        };
        assert_eq!(m.charpoly(), vec![4, 0, 1]);
        // Identity 3x3 over F_7: (x-1)^3 = x^3 - 3x^2 + 3x - 1.
        let m = MatP::identity(3, 7);
        assert_eq!(m.charpoly(), vec![6, 3, 4, 1]);
    }
}
