//! Exact dense linear algebra over the integers, the rationals and GF(2).
//!
//! Everything here is fraction-free or exact-rational; no floating point is
//! used anywhere in the crate.  Matrices are row-major `Vec<Vec<_>>`, sized
//! for desk-scale inputs (dimensions in the dozens).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact integer scalar.
pub type Int = BigInt;
/// Exact rational scalar.
pub type Rat = BigRational;
/// Row-major integer matrix.
pub type IntMat = Vec<Vec<Int>>;
/// Row-major rational matrix.
pub type RatMat = Vec<Vec<Rat>>;

/// Builds an integer matrix from machine integers (test and fixture helper).
pub fn int_mat(rows: &[&[i64]]) -> IntMat {
    rows.iter()
        .map(|r| r.iter().map(|&x| Int::from(x)).collect())
        .collect()
}

/// The n-by-n identity matrix.
pub fn identity(n: usize) -> IntMat {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Int::one() } else { Int::zero() }).collect())
        .collect()
}

/// Integer matrix product.
pub fn mat_mul(a: &IntMat, b: &IntMat) -> IntMat {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut c = vec![vec![Int::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                let t = &a[i][l] * &b[l][j];
                c[i][j] += t;
            }
        }
    }
    c
}

/// Determinant of a square integer matrix by fraction-free (Bareiss)
/// elimination.
pub fn det(a: &IntMat) -> Int {
    let n = a.len();
    if n == 0 {
        return Int::one();
    }
    debug_assert!(a.iter().all(|r| r.len() == n));
    let mut m = a.clone();
    let mut sign = 1i32;
    let mut prev = Int::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = Int::zero();
        }
        prev = m[k][k].clone();
    }
    if sign < 0 {
        -m[n - 1][n - 1].clone()
    } else {
        m[n - 1][n - 1].clone()
    }
}

/// Row-style Hermite normal form: the unique matrix obtainable from `a` by
/// left multiplication with a unimodular matrix that is in row echelon form
/// with positive pivots and entries above each pivot reduced into
/// `[0, pivot)`.  Zero rows sink to the bottom.
pub fn row_hnf(a: &IntMat) -> IntMat {
    let mut m = a.clone();
    let cols = if m.is_empty() { 0 } else { m[0].len() };
    row_echelon_hnf(&mut m, cols);
    m
}

/// Row Hermite reduction together with the unimodular transform: returns
/// `(u, h)` with `u a = h` and `h` the row Hermite form of `a`.
pub fn row_hnf_with_transform(a: &IntMat) -> (IntMat, IntMat) {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut aug: IntMat = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            for j in 0..rows {
                row.push(if i == j { Int::one() } else { Int::zero() });
            }
            row
        })
        .collect();
    row_echelon_hnf(&mut aug, cols);
    let h = aug.iter().map(|r| r[..cols].to_vec()).collect();
    let u = aug.iter().map(|r| r[cols..].to_vec()).collect();
    (u, h)
}

/// In-place row Hermite reduction choosing pivots only among the first
/// `limit` columns; row operations act on the full rows.
fn row_echelon_hnf(m: &mut IntMat, limit: usize) {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut r = 0;
    for c in 0..limit {
        if r >= rows {
            break;
        }
        // Reduce the column below r to a single nonzero entry by gcd steps.
        loop {
            let mut best: Option<usize> = None;
            for i in r..rows {
                if !m[i][c].is_zero() {
                    best = match best {
                        None => Some(i),
                        Some(b) if m[i][c].abs() < m[b][c].abs() => Some(i),
                        keep => keep,
                    };
                }
            }
            let Some(b) = best else { break };
            m.swap(r, b);
            let mut done = true;
            for i in r + 1..rows {
                if m[i][c].is_zero() {
                    continue;
                }
                let q = m[i][c].div_floor(&m[r][c]);
                for j in 0..cols {
                    let t = &q * &m[r][j];
                    m[i][j] -= t;
                }
                if !m[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if m[r][c].is_zero() {
            continue;
        }
        if m[r][c].is_negative() {
            for j in 0..cols {
                m[r][j] = -m[r][j].clone();
            }
        }
        // Reduce the entries above the pivot into [0, pivot).
        for i in 0..r {
            let q = m[i][c].div_floor(&m[r][c]);
            if q.is_zero() {
                continue;
            }
            for j in 0..cols {
                let t = &q * &m[r][j];
                m[i][j] -= t;
            }
        }
        r += 1;
    }
}

/// Smith normal form with transforms: returns `(u, s, v)` with `u a v = s`,
/// `u` and `v` unimodular and `s` diagonal with each diagonal entry dividing
/// the next.
pub fn snf(a: &IntMat) -> (IntMat, IntMat, IntMat) {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut s = a.clone();
    let mut u = identity(rows);
    let mut v = identity(cols);

    let add_row = |s: &mut IntMat, u: &mut IntMat, dst: usize, src: usize, q: &Int| {
        for j in 0..cols {
            let t = q * &s[src][j];
            s[dst][j] -= t;
        }
        for j in 0..rows {
            let t = q * &u[src][j];
            u[dst][j] -= t;
        }
    };
    let add_col = |s: &mut IntMat, v: &mut IntMat, dst: usize, src: usize, q: &Int| {
        for i in 0..rows {
            let t = q * &s[i][src];
            s[i][dst] -= t;
        }
        for i in 0..cols {
            let t = q * &v[i][src];
            v[i][dst] -= t;
        }
    };

    let mut t = 0;
    while t < rows && t < cols {
        // Locate a minimal-magnitude nonzero entry in the trailing block.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if s[i][j].is_zero() {
                    continue;
                }
                pivot = match pivot {
                    None => Some((i, j)),
                    Some((pi, pj)) if s[i][j].abs() < s[pi][pj].abs() => Some((i, j)),
                    keep => keep,
                };
            }
        }
        let Some((pi, pj)) = pivot else { break };
        s.swap(t, pi);
        u.swap(t, pi);
        for row in s.iter_mut() {
            row.swap(t, pj);
        }
        for row in v.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            // Clear the pivot column.
            let mut dirty = false;
            for i in t + 1..rows {
                if s[i][t].is_zero() {
                    continue;
                }
                let q = s[i][t].div_floor(&s[t][t]);
                add_row(&mut s, &mut u, i, t, &q);
                if !s[i][t].is_zero() {
                    s.swap(t, i);
                    u.swap(t, i);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Clear the pivot row.
            for j in t + 1..cols {
                if s[t][j].is_zero() {
                    continue;
                }
                let q = s[t][j].div_floor(&s[t][t]);
                add_col(&mut s, &mut v, j, t, &q);
                if !s[t][j].is_zero() {
                    for row in s.iter_mut() {
                        row.swap(t, j);
                    }
                    for row in v.iter_mut() {
                        row.swap(t, j);
                    }
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Enforce divisibility of the trailing block by the pivot.
            let mut fixed = true;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(&s[i][j] % &s[t][t]).is_zero() {
                        // Fold row i into row t and restart clearing.
                        let minus_one = -Int::one();
                        add_row(&mut s, &mut u, t, i, &minus_one);
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if s[t][t].is_negative() {
            for j in 0..cols {
                s[t][j] = -s[t][j].clone();
            }
            for j in 0..rows {
                u[t][j] = -u[t][j].clone();
            }
        }
        t += 1;
    }
    (u, s, v)
}

/// Elementary divisors (nonzero diagonal of the Smith form).
pub fn elementary_divisors(a: &IntMat) -> Vec<Int> {
    let (_, s, _) = snf(a);
    (0..s.len().min(s.first().map_or(0, |r| r.len())))
        .map(|i| s[i][i].clone())
        .filter(|d| !d.is_zero())
        .collect()
}

/// Converts an integer matrix to rationals.
pub fn to_rat(a: &IntMat) -> RatMat {
    a.iter()
        .map(|r| r.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect()
}

/// Solves a square rational system `a x = b`; `None` when `a` is singular.
pub fn rat_solve(a: &RatMat, b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    debug_assert!(a.iter().all(|r| r.len() == n) && b.len() == n);
    let mut m: RatMat = a
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut row = r.clone();
            row.push(x.clone());
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        let inv = m[c][c].recip();
        for j in c..=n {
            m[c][j] = &m[c][j] * &inv;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=n {
                    let t = &f * &m[c][j];
                    m[i][j] -= t;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

/// A basis of the right kernel `{x : a x = 0}` of a rational matrix.
pub fn rat_kernel(a: &RatMat) -> Vec<Vec<Rat>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m = a.clone();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for j in 0..cols {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut x = vec![Rat::zero(); cols];
        x[free] = Rat::one();
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = -m[row][free].clone();
        }
        basis.push(x);
    }
    basis
}

/// Solves `m x = b` for a rational matrix unknown `x`, requiring the solution
/// to be unique (i.e. `m` of full column rank) and the system consistent.
pub fn rat_solve_matrix(m: &RatMat, b: &RatMat) -> Option<RatMat> {
    let rows = m.len();
    let mcols = if rows == 0 { 0 } else { m[0].len() };
    let bcols = if rows == 0 { 0 } else { b[0].len() };
    debug_assert_eq!(b.len(), rows);
    let mut aug: RatMat = m
        .iter()
        .zip(b)
        .map(|(r, s)| r.iter().chain(s.iter()).cloned().collect())
        .collect();
    let total = mcols + bcols;
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..mcols {
        let Some(p) = (r..rows).find(|&i| !aug[i][c].is_zero()) else {
            return None; // rank deficiency: solution not unique
        };
        aug.swap(r, p);
        let inv = aug[r][c].recip();
        for j in 0..total {
            aug[r][j] = &aug[r][j] * &inv;
        }
        for i in 0..rows {
            if i != r && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                for j in 0..total {
                    let t = &f * &aug[r][j];
                    aug[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if pivots.len() < mcols {
        return None;
    }
    // Consistency of the remaining rows.
    for row in aug.iter().skip(r) {
        if row.iter().skip(mcols).any(|x| !x.is_zero()) {
            return None;
        }
    }
    Some(
        (0..mcols)
            .map(|i| aug[i][mcols..].to_vec())
            .collect(),
    )
}

/// Solves `m x = b` over GF(2), requiring a unique, consistent solution.
pub fn gf2_solve_matrix(m: &[Vec<u8>], b: &[Vec<u8>]) -> Option<Vec<Vec<u8>>> {
    let rows = m.len();
    let mcols = if rows == 0 { 0 } else { m[0].len() };
    let bcols = if rows == 0 { 0 } else { b[0].len() };
    let mut aug: Vec<Vec<u8>> = m
        .iter()
        .zip(b)
        .map(|(r, s)| r.iter().chain(s.iter()).map(|&x| x & 1).collect())
        .collect();
    let total = mcols + bcols;
    let mut r = 0;
    for c in 0..mcols {
        let Some(p) = (r..rows).find(|&i| aug[i][c] == 1) else {
            return None;
        };
        aug.swap(r, p);
        for i in 0..rows {
            if i != r && aug[i][c] == 1 {
                for j in 0..total {
                    aug[i][j] ^= aug[r][j];
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    if r < mcols {
        return None;
    }
    for row in aug.iter().skip(r) {
        if row.iter().skip(mcols).any(|&x| x == 1) {
            return None;
        }
    }
    Some((0..mcols).map(|i| aug[i][mcols..].to_vec()).collect())
}

/// Reduced row echelon form over GF(2); the canonical representative of the
/// left-multiplication orbit.
pub fn gf2_rref(a: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<u8>> = a
        .iter()
        .map(|r| r.iter().map(|&x| x & 1).collect())
        .collect();
    let mut r = 0;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i][c] == 1) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..rows {
            if i != r && m[i][c] == 1 {
                for j in 0..cols {
                    m[i][j] ^= m[r][j];
                }
            }
        }
        r += 1;
    }
    m
}

/// Rank over GF(2).
pub fn gf2_rank(a: &[Vec<u8>]) -> usize {
    gf2_rref(a)
        .iter()
        .filter(|r| r.iter().any(|&x| x == 1))
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_matches_cofactor_expansion() {
        let a = int_mat(&[&[2, 3, 1], &[4, 1, -3], &[2, 5, 2]]);
        // Expansion by hand: 2(2+15) - 3(8+6) + 1(20-2) = 34 - 42 + 18 = 10.
        assert_eq!(det(&a), Int::from(10));
        assert_eq!(det(&int_mat(&[&[1, 2], &[2, 4]])), Int::zero());
    }

    #[test]
    fn hnf_is_canonical_under_row_ops() {
        let a = int_mat(&[&[1, 0, -1, -1, 0], &[0, 1, 1, 0, -1]]);
        // Mix rows by a unimodular matrix; the Hermite form must not change.
        let u = int_mat(&[&[3, 2], &[1, 1]]);
        let b = mat_mul(&u, &a);
        assert_eq!(row_hnf(&a), row_hnf(&b));
        assert_eq!(row_hnf(&a), a);
    }

    #[test]
    fn snf_transform_identity_holds() {
        let a = int_mat(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
        let (u, s, v) = snf(&a);
        assert_eq!(mat_mul(&mat_mul(&u, &a), &v), s);
        assert_eq!(det(&u).abs(), Int::one());
        assert_eq!(det(&v).abs(), Int::one());
        let divs = elementary_divisors(&a);
        for w in divs.windows(2) {
            assert!((&w[1] % &w[0]).is_zero());
        }
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let a = to_rat(&int_mat(&[&[1, 0, -1, -1, 0], &[0, 1, 1, 0, -1]]));
        let ker = rat_kernel(&a);
        assert_eq!(ker.len(), 3);
        for x in &ker {
            for row in &a {
                let s: Rat = row.iter().zip(x).map(|(a, b)| a * b).sum();
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn gf2_rank_and_rref() {
        let a = vec![vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 0]];
        assert_eq!(gf2_rank(&a), 2);
        let r = gf2_rref(&a);
        assert_eq!(r, vec![vec![1, 0, 1], vec![0, 1, 1], vec![0, 0, 0]]);
    }
}
