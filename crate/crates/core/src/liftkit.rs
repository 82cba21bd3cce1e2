//! Constructive mod-2 lifting: odd-determinant integer matrices to
//! determinant-one matrices with the same parity pattern, and GF(2)
//! characteristic maps to integer ones when the vertex count exceeds the
//! dimension by at most three.

use crate::charmap::{CharError, CharMatrix, Ring};
use crate::complex::SimplicialComplex;
use crate::matrix::{det, gf2_solve_matrix, Int, IntMat};
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LiftError {
    #[error("determinant is even; no parity-preserving unimodular lift exists")]
    EvenDeterminant,
    #[error("matrix must be square")]
    NotSquare,
    #[error("vertex count exceeds dimension by {0}; only up to 3 is supported")]
    UnsupportedPicard(usize),
    #[error("input map is singular on some face")]
    NotNonsingular,
    #[error("input map must be over GF(2)")]
    RingNotZ2,
    #[error(transparent)]
    Char(#[from] CharError),
}

fn is_odd(x: &Int) -> bool {
    !(x % Int::from(2)).is_zero()
}

/// The minor of `a` with row `i` and column `j` deleted.
fn minor(a: &IntMat, i: usize, j: usize) -> IntMat {
    a.iter()
        .enumerate()
        .filter(|(r, _)| *r != i)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(c, _)| *c != j)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

/// Rewrites an odd-determinant integer matrix into one of determinant one
/// with every entry's parity preserved.
///
/// The recursion normalizes a corner minor to determinant one and then
/// shifts the corner entry by the (even) determinant defect.  The corner is
/// not always usable directly — its minor may be even — so a position with
/// an odd cofactor is swapped in first (one exists whenever the determinant
/// is odd, because the adjugate cannot vanish mod 2) and the swap's sign is
/// repaired afterwards by negating a row.
pub fn lift_unimodular(a: &IntMat) -> Result<IntMat, LiftError> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(LiftError::NotSquare);
    }
    if !is_odd(&det(a)) {
        return Err(LiftError::EvenDeterminant);
    }
    let mut b = lift_recursive(a.clone());
    debug_assert!(det(&b).is_one());
    // Parity sanity: the recursion only adds even numbers and swaps back.
    debug_assert!(a
        .iter()
        .zip(&b)
        .all(|(ra, rb)| ra.iter().zip(rb).all(|(x, y)| !is_odd(&(x - y)))));
    // Normalize (should already hold; negation path covered inside).
    if !det(&b).is_one() {
        for x in &mut b[0] {
            *x = -x.clone();
        }
    }
    Ok(b)
}

fn lift_recursive(mut a: IntMat) -> IntMat {
    let n = a.len();
    if n == 1 {
        // Odd scalar: the lift is 1, an even shift away.
        a[0][0] = Int::one();
        return a;
    }
    // Find a position whose cofactor is odd and move it to the corner.
    let (pi, pj) = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| is_odd(&det(&minor(&a, i, j))))
        .expect("odd determinant guarantees an odd cofactor");
    let mut sign = 1i64;
    if pi != 0 {
        a.swap(0, pi);
        sign = -sign;
    }
    if pj != 0 {
        for row in &mut a {
            row.swap(0, pj);
        }
        sign = -sign;
    }
    // Lift the corner minor to determinant one and write it back.
    let lifted = lift_recursive(minor(&a, 0, 0));
    for i in 1..n {
        for j in 1..n {
            a[i][j] = lifted[i - 1][j - 1].clone();
        }
    }
    // Shift the corner by the (even) determinant defect: the cofactor
    // expansion along the first row then yields determinant one.
    let defect = det(&a) - Int::one();
    debug_assert!(!is_odd(&defect));
    a[0][0] = &a[0][0] - defect;
    debug_assert!(det(&a).is_one());
    // Undo the swaps; a negative permutation sign is absorbed by negating
    // the swapped-back row, which keeps parity and restores determinant one.
    if pj != 0 {
        for row in &mut a {
            row.swap(0, pj);
        }
    }
    if pi != 0 {
        a.swap(0, pi);
    }
    if sign == -1 {
        for x in &mut a[pi] {
            *x = -x.clone();
        }
    }
    a
}

/// Outcome of a characteristic-map lift, with its verification record.
#[derive(Clone, Debug)]
pub struct LiftCertificate {
    pub input: CharMatrix,
    pub output: CharMatrix,
    /// The reduction of the output agrees entry-wise with the normalized
    /// input representative.
    pub parity_ok: bool,
    /// The output is non-singular over the complex (every facet submatrix
    /// has determinant ±1).
    pub nonsingular: bool,
    /// The reduction of the output lies in the same equivalence class as
    /// the original input.
    pub round_trip_ok: bool,
}

impl LiftCertificate {
    pub fn ok(&self) -> bool {
        self.parity_ok && self.nonsingular && self.round_trip_ok
    }
}

/// Lifts a non-singular GF(2) characteristic map over a complex with at most
/// three more vertices than its dimension (plus one) to an integer map.
///
/// The map is first normalized so that the columns of one facet form the
/// identity; the remaining columns then have width at most three, so every
/// facet determinant of the 0/1 integer matrix is a 0/1 minor of size at
/// most three — an odd value in `[-2, 2]`, hence `±1`.
pub fn lift_charmap(
    lambda2: &CharMatrix,
    k: &SimplicialComplex,
) -> Result<LiftCertificate, LiftError> {
    if lambda2.ring() != Ring::Z2 {
        return Err(LiftError::RingNotZ2);
    }
    let n = lambda2.rows_len();
    let m = lambda2.labels().len();
    if m < n {
        return Err(LiftError::NotNonsingular);
    }
    if m - n > 3 {
        return Err(LiftError::UnsupportedPicard(m - n));
    }
    if !lambda2.is_nonsingular(k)? {
        return Err(LiftError::NotNonsingular);
    }
    // Normalize on the lexicographically least facet: multiply by the
    // inverse of its column submatrix over GF(2).
    let facet = k
        .facet_labels()
        .into_iter()
        .min()
        .ok_or(LiftError::NotNonsingular)?;
    let rows = lambda2.as_gf2_rows();
    let facet_cols: Vec<Vec<u8>> = (0..n)
        .map(|r| {
            facet
                .iter()
                .map(|v| {
                    let j = lambda2
                        .labels()
                        .iter()
                        .position(|l| l == v)
                        .expect("facet label is a column");
                    rows[r][j]
                })
                .collect()
        })
        .collect();
    let id: Vec<Vec<u8>> = (0..n)
        .map(|i| (0..n).map(|j| u8::from(i == j)).collect())
        .collect();
    let inv = gf2_solve_matrix(&facet_cols, &id).ok_or(LiftError::NotNonsingular)?;
    let inv_int: IntMat = inv
        .iter()
        .map(|r| r.iter().map(|&x| Int::from(x)).collect())
        .collect();
    let normalized = lambda2.transformed(&inv_int);
    // Read the 0/1 entries over the integers.
    let columns = normalized
        .labels()
        .iter()
        .map(|l| {
            (
                l.clone(),
                normalized.column(l).expect("own label").clone(),
            )
        })
        .collect();
    let output = CharMatrix::new(Ring::Z, n, columns)?;
    let nonsingular = output.is_nonsingular(k)?;
    let reduced = output.mod2_reduce();
    let parity_ok = reduced.as_gf2_rows() == normalized.as_gf2_rows();
    let round_trip_ok = reduced.dj_equal(lambda2);
    Ok(LiftCertificate {
        input: lambda2.clone(),
        output,
        parity_ok,
        nonsingular,
        round_trip_ok,
    })
}

/// Whether every entry of `b` is congruent to the matching entry of `a`
/// modulo two.
pub fn parity_equal(a: &IntMat, b: &IntMat) -> bool {
    a.len() == b.len()
        && a.iter().zip(b).all(|(ra, rb)| {
            ra.len() == rb.len() && ra.iter().zip(rb).all(|(x, y)| !is_odd(&(x - y)))
        })
}
