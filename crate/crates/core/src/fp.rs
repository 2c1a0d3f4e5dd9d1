//! Dense linear algebra over prime fields F_p.
//!
//! Matrices are stored row-major with entries reduced to `[0, p)`. The module
//! action convention throughout the crate is row vectors acted on from the
//! right: `v -> v * M`.

use crate::error::{Error, Result};

/// Trial-division primality check; inputs here are tiny.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    base %= p;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` mod prime `p` via Fermat.
pub fn mod_inv(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    mod_pow(a, p - 2, p)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    entries: Vec<u64>,
}

impl std::fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "FpMatrix {}x{} mod {}", self.rows, self.cols, self.p)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.entries[r * self.cols..(r + 1) * self.cols])?;
        }
        Ok(())
    }
}

impl FpMatrix {
    pub fn new(p: u64, rows: usize, cols: usize, entries: Vec<u64>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        let entries = entries.into_iter().map(|e| e % p).collect();
        FpMatrix { p, rows, cols, entries }
    }

    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        FpMatrix { p, rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Build from a list of row vectors.
    pub fn from_rows(p: u64, cols: usize, rows: &[Vec<u64>]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            entries.extend(r.iter().map(|e| e % p));
        }
        FpMatrix { p, rows: rows.len(), cols, entries }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.entries[r * self.cols + c] = v % self.p;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.p, other.p);
        let p = self.p;
        let mut out = FpMatrix::zeros(p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, (cur + a * other.get(k, j)) % p);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| (a + b) % self.p)
            .collect();
        FpMatrix { p: self.p, rows: self.rows, cols: self.cols, entries }
    }

    pub fn sub(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| (a + self.p - b) % self.p)
            .collect();
        FpMatrix { p: self.p, rows: self.rows, cols: self.cols, entries }
    }

    pub fn scale(&self, s: u64) -> FpMatrix {
        let s = s % self.p;
        let entries = self.entries.iter().map(|&a| a * s % self.p).collect();
        FpMatrix { p: self.p, rows: self.rows, cols: self.cols, entries }
    }

    /// Row vector times matrix: `v * M`.
    pub fn apply_row(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![0u64; self.cols];
        for (i, &vi) in v.iter().enumerate() {
            if vi == 0 {
                continue;
            }
            for j in 0..self.cols {
                out[j] = (out[j] + vi * self.get(i, j)) % self.p;
            }
        }
        out
    }

    /// In-place reduction to reduced row echelon form; returns the rank.
    pub fn rref(&mut self) -> usize {
        let p = self.p;
        let mut pivot_row = 0usize;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let mut sel = None;
            for r in pivot_row..self.rows {
                if self.get(r, col) != 0 {
                    sel = Some(r);
                    break;
                }
            }
            let Some(sel) = sel else { continue };
            if sel != pivot_row {
                for c in 0..self.cols {
                    self.entries.swap(sel * self.cols + c, pivot_row * self.cols + c);
                }
            }
            let inv = mod_inv(self.get(pivot_row, col), p);
            for c in col..self.cols {
                let v = self.get(pivot_row, c) * inv % p;
                self.set(pivot_row, c, v);
            }
            for r in 0..self.rows {
                if r == pivot_row {
                    continue;
                }
                let f = self.get(r, col);
                if f == 0 {
                    continue;
                }
                for c in col..self.cols {
                    let v = (self.get(r, c) + (p - f) * self.get(pivot_row, c)) % p;
                    self.set(r, c, v);
                }
            }
            pivot_row += 1;
        }
        pivot_row
    }

    pub fn rank(&self) -> usize {
        self.clone().rref()
    }

    /// Canonical basis of the row space: RREF with zero rows dropped.
    pub fn row_space_basis(&self) -> FpMatrix {
        let mut m = self.clone();
        let rank = m.rref();
        let entries = m.entries[..rank * m.cols].to_vec();
        FpMatrix { p: m.p, rows: rank, cols: m.cols, entries }
    }

    pub fn inverse(&self) -> Option<FpMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let p = self.p;
        // augmented [self | I], reduce, read off the right block
        let mut aug = FpMatrix::zeros(p, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        aug.rref();
        // invertible iff the left block reduced to the identity
        for i in 0..n {
            for j in 0..n {
                let want = u64::from(i == j);
                if aug.get(i, j) != want {
                    return None;
                }
            }
        }
        let mut inv = FpMatrix::zeros(p, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j));
            }
        }
        Some(inv)
    }

    /// Basis of the right null space `{x : M x = 0}`, one solution per row.
    pub fn null_space(&self) -> FpMatrix {
        let p = self.p;
        let mut m = self.clone();
        m.rref();
        // locate pivot columns
        let mut pivot_col_of_row = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for r in 0..m.rows {
            if let Some(c) = (0..m.cols).find(|&c| m.get(r, c) != 0) {
                pivot_col_of_row.push((r, c));
                is_pivot[c] = true;
            }
        }
        let free_cols: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut basis_rows = Vec::new();
        for &fc in &free_cols {
            let mut x = vec![0u64; self.cols];
            x[fc] = 1;
            for &(r, c) in &pivot_col_of_row {
                // pivot entry is 1 in RREF, so x[c] = -m[r][fc]
                x[c] = (p - m.get(r, fc)) % p;
            }
            basis_rows.push(x);
        }
        FpMatrix::from_rows(p, self.cols, &basis_rows)
    }

    /// Matrix power by repeated squaring.
    pub fn pow(&self, mut e: u64) -> FpMatrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = FpMatrix::identity(self.p, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of an invertible matrix.
    pub fn order(&self) -> u64 {
        let id = FpMatrix::identity(self.p, self.rows);
        let mut acc = self.clone();
        let mut k = 1u64;
        while acc != id {
            acc = acc.mul(self);
            k += 1;
            assert!(k < 1 << 40, "matrix is not of finite order (not invertible?)");
        }
        k
    }
}

/// Does the row vector `v` lie in the row space of the RREF matrix `basis`?
pub fn row_in_span(basis: &FpMatrix, v: &[u64]) -> bool {
    reduce_against(basis, v).iter().all(|&e| e == 0)
}

/// Reduce `v` against an RREF basis; the remainder is zero iff `v` is in the span.
pub fn reduce_against(basis: &FpMatrix, v: &[u64]) -> Vec<u64> {
    let p = basis.p;
    let mut v = v.to_vec();
    for r in 0..basis.rows {
        let Some(c) = (0..basis.cols).find(|&c| basis.get(r, c) != 0) else { continue };
        let f = v[c];
        if f == 0 {
            continue;
        }
        for j in 0..basis.cols {
            v[j] = (v[j] + (p - f) * basis.get(r, j)) % p;
        }
    }
    v
}

/// Coordinates of `v` in the row space of RREF `basis`, if it lies there.
pub fn coordinates_in_span(basis: &FpMatrix, v: &[u64]) -> Option<Vec<u64>> {
    let p = basis.p;
    let mut v = v.to_vec();
    let mut coords = vec![0u64; basis.rows];
    for r in 0..basis.rows {
        let Some(c) = (0..basis.cols).find(|&c| basis.get(r, c) != 0) else { continue };
        let f = v[c];
        if f == 0 {
            continue;
        }
        coords[r] = f;
        for j in 0..basis.cols {
            v[j] = (v[j] + (p - f) * basis.get(r, j)) % p;
        }
    }
    if v.iter().all(|&e| e == 0) {
        Some(coords)
    } else {
        None
    }
}

/// Iterate all vectors of F_p^n in lexicographic order, including zero.
pub fn all_vectors(p: u64, n: usize) -> impl Iterator<Item = Vec<u64>> {
    let total = (p as u128).pow(n as u32);
    (0..total).map(move |mut ix| {
        let mut v = vec![0u64; n];
        for i in (0..n).rev() {
            v[i] = (ix % p as u128) as u64;
            ix /= p as u128;
        }
        v
    })
}

/// First monic irreducible degree-`e` polynomial over F_p whose roots have
/// multiplicative order exactly `m`. Coefficients low-to-high, without the
/// leading 1. Requires `m | p^e - 1` and `ord_m(p) = e`.
pub fn order_m_min_poly(p: u64, e: usize, m: u64) -> Result<Vec<u64>> {
    if e == 0 {
        return Err(Error::BadParameters("polynomial degree must be positive".into()));
    }
    let pe = (p as u128).pow(e as u32);
    if (pe - 1) % m as u128 != 0 {
        return Err(Error::BadParameters(format!("{m} does not divide {p}^{e} - 1")));
    }
    if multiplicative_order_mod(p, m) != Some(e as u64) {
        return Err(Error::BadParameters(format!(
            "multiplicative order of {p} mod {m} is not {e}"
        )));
    }
    // lex scan over coefficient vectors (c_0, ..., c_{e-1})
    for coeffs in all_vectors(p, e) {
        if coeffs[0] == 0 {
            continue; // root at zero: reducible or wrong order
        }
        if !poly_is_irreducible(p, &coeffs) {
            continue;
        }
        if poly_root_order(p, &coeffs, m) {
            return Ok(coeffs);
        }
    }
    Err(Error::BadParameters(format!(
        "no irreducible degree-{e} polynomial with root order {m} over F_{p}"
    )))
}

/// Multiplicative order of `a` modulo `m` (m = 1 gives 1), or None if not coprime.
pub fn multiplicative_order_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if gcd(a % m, m) != 1 {
        return None;
    }
    let mut x = a % m;
    let mut k = 1;
    while x != 1 {
        x = x * (a % m) % m;
        k += 1;
    }
    Some(k)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

// --- dense polynomial arithmetic mod (p, f) for the Singer construction ---

fn poly_mul_mod(p: u64, f: &[u64], a: &[u64], b: &[u64]) -> Vec<u64> {
    let e = f.len();
    let mut prod = vec![0u64; 2 * e];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    // reduce: x^e = -f (coefficients f are low-to-high without leading 1)
    for d in (e..2 * e).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for (k, &fk) in f.iter().enumerate() {
            prod[d - e + k] = (prod[d - e + k] + c * (p - fk)) % p;
        }
    }
    prod.truncate(e);
    prod
}

fn poly_pow_x_mod(p: u64, f: &[u64], mut n: u64) -> Vec<u64> {
    let e = f.len();
    let mut acc = vec![0u64; e];
    acc[0] = 1;
    let mut base = vec![0u64; e];
    if e == 1 {
        base[0] = (p - f[0]) % p; // x = -c_0 in F_p
    } else {
        base[1] = 1;
    }
    while n > 0 {
        if n & 1 == 1 {
            acc = poly_mul_mod(p, f, &acc, &base);
        }
        base = poly_mul_mod(p, f, &base, &base);
        n >>= 1;
    }
    acc
}

fn poly_is_one(v: &[u64]) -> bool {
    v[0] == 1 && v[1..].iter().all(|&c| c == 0)
}

/// Distinct prime factors of n.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Irreducibility over F_p: x^(p^e) = x mod f, and x^(p^(e/r)) != x for prime r | e.
fn poly_is_irreducible(p: u64, f: &[u64]) -> bool {
    let e = f.len() as u64;
    let frob = |k: u64| -> Vec<u64> { poly_pow_x_mod(p, f, mod_pow_u128(p, k)) };
    let mut x = vec![0u64; f.len()];
    if f.len() == 1 {
        x[0] = (p - f[0]) % p;
    } else {
        x[1] = 1;
    }
    if frob(e) != x {
        return false;
    }
    for r in prime_factors(e) {
        if frob(e / r) == x {
            return false;
        }
    }
    true
}

fn mod_pow_u128(p: u64, k: u64) -> u64 {
    let mut acc: u128 = 1;
    for _ in 0..k {
        acc *= p as u128;
        assert!(acc < u64::MAX as u128);
    }
    acc as u64
}

/// Do the roots of irreducible `f` have multiplicative order exactly `m`?
fn poly_root_order(p: u64, f: &[u64], m: u64) -> bool {
    if !poly_is_one(&poly_pow_x_mod(p, f, m)) {
        return false;
    }
    for r in prime_factors(m) {
        if poly_is_one(&poly_pow_x_mod(p, f, m / r)) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(3) && is_prime(7) && is_prime(11));
        assert!(!is_prime(1) && !is_prime(4) && !is_prime(9) && !is_prime(0));
    }

    #[test]
    fn rref_canonical() {
        let mut m = FpMatrix::new(2, 3, 3, vec![1, 1, 0, 1, 0, 1, 0, 1, 1]);
        let rank = m.rref();
        assert_eq!(rank, 2);
        assert_eq!(m.row(0), &[1, 0, 1]);
        assert_eq!(m.row(1), &[0, 1, 1]);
    }

    #[test]
    fn inverse_round_trip() {
        let m = FpMatrix::new(7, 2, 2, vec![2, 3, 1, 4]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), FpMatrix::identity(7, 2));
        assert_eq!(inv.mul(&m), FpMatrix::identity(7, 2));
    }

    #[test]
    fn singular_has_no_inverse() {
        let m = FpMatrix::new(5, 2, 2, vec![1, 2, 2, 4]);
        assert!(m.inverse().is_none());
    }

    #[test]
    fn null_space_dimension() {
        let m = FpMatrix::new(3, 2, 3, vec![1, 1, 1, 0, 1, 2]);
        let ns = m.null_space();
        assert_eq!(ns.rows, 1);
        // check M x = 0
        let x: Vec<u64> = (0..3).map(|c| ns.get(0, c)).collect();
        for r in 0..2 {
            let dot: u64 = (0..3).map(|c| m.get(r, c) * x[c]).sum::<u64>() % 3;
            assert_eq!(dot, 0);
        }
    }

    #[test]
    fn span_membership() {
        let basis =
            FpMatrix::new(2, 2, 4, vec![1, 0, 1, 0, 0, 1, 1, 0]).row_space_basis();
        assert!(row_in_span(&basis, &[1, 1, 0, 0]));
        assert!(!row_in_span(&basis, &[0, 0, 0, 1]));
    }

    #[test]
    fn singer_poly_f2_e2_m3() {
        // x^2 + x + 1 is the only candidate
        let f = order_m_min_poly(2, 2, 3).unwrap();
        assert_eq!(f, vec![1, 1]);
    }

    #[test]
    fn singer_poly_f3_e2_m8() {
        let f = order_m_min_poly(3, 2, 8).unwrap();
        // verify: companion matrix has order 8 and irreducible char poly
        let c = FpMatrix::new(3, 2, 2, vec![0, 1, (3 - f[0]) % 3, (3 - f[1]) % 3]);
        assert_eq!(c.order(), 8);
    }

    #[test]
    fn singer_poly_rejects_bad_order() {
        // ord_1(2) = 1 != 2
        assert!(order_m_min_poly(2, 2, 1).is_err());
        // 5 does not divide 2^2 - 1
        assert!(order_m_min_poly(2, 2, 5).is_err());
    }

    #[test]
    fn matrix_order() {
        let c = FpMatrix::new(2, 2, 2, vec![0, 1, 1, 1]);
        assert_eq!(c.order(), 3);
    }

    #[test]
    fn vector_enumeration_order() {
        let vs: Vec<Vec<u64>> = all_vectors(2, 2).collect();
        assert_eq!(vs, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }
}
