//! Characteristic matrices over Z or GF(2): integer column assignments to the
//! vertices of a simplicial complex, considered up to left multiplication by
//! unimodular (resp. invertible) matrices.
//!
//! The main operations are non-singularity over the faces of a complex, the
//! canonical form deciding equivalence, projections with respect to a face,
//! and the reconstruction/extension operations along simplicial wedges.

use crate::complex::{ComplexError, SimplicialComplex};
use crate::label::VertexLabel;
use crate::matrix::{
    self, gf2_rank, gf2_rref, gf2_solve_matrix, rat_solve_matrix, row_hnf, row_hnf_with_transform,
    to_rat, Int, IntMat,
};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Coefficient ring of a characteristic matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Ring {
    /// The integers.
    Z,
    /// The field with two elements; entries are stored as 0/1.
    Z2,
}

/// Errors raised by characteristic-matrix operations.
#[derive(Debug, Error)]
pub enum CharError {
    #[error("matrices are over different rings")]
    RingMismatch,
    #[error("column for vertex {0} appears more than once")]
    DuplicateColumn(VertexLabel),
    #[error("column entry count disagrees with the declared row count")]
    ShapeMismatch,
    #[error("matrix columns do not match the vertices of the complex")]
    LabelsDisagree,
    #[error("{0} is not a face of the complex")]
    NotAFace(String),
    #[error("columns of face {0} are not unimodular")]
    FaceNotUnimodular(String),
    #[error("column of vertex {0} is not primitive")]
    ColumnNotPrimitive(VertexLabel),
    #[error("the two inputs do not project to a common matrix")]
    IncompatibleProjections,
    #[error("complex error: {0}")]
    Complex(#[from] ComplexError),
    #[error("invalid matrix JSON: {0}")]
    BadJson(String),
}

/// A characteristic matrix: one column per vertex of a complex, columns kept
/// in canonical vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharMatrix {
    ring: Ring,
    n: usize,
    labels: Vec<VertexLabel>,
    /// Column-major entries; `cols[j]` is the column of `labels[j]`.
    cols: Vec<Vec<Int>>,
}

#[derive(Serialize, Deserialize)]
struct ColumnJson {
    vertex: (String, u32),
    entries: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    ring: String,
    n: usize,
    columns: Vec<ColumnJson>,
}

impl CharMatrix {
    /// Builds a matrix from labeled columns.  Columns are sorted by label;
    /// over GF(2) entries are reduced to 0/1.
    pub fn new(
        ring: Ring,
        n: usize,
        columns: Vec<(VertexLabel, Vec<Int>)>,
    ) -> Result<Self, CharError> {
        let mut columns = columns;
        columns.sort_by(|a, b| a.0.cmp(&b.0));
        for w in columns.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(CharError::DuplicateColumn(w[0].0.clone()));
            }
        }
        let mut labels = Vec::with_capacity(columns.len());
        let mut cols = Vec::with_capacity(columns.len());
        for (v, mut c) in columns {
            if c.len() != n {
                return Err(CharError::ShapeMismatch);
            }
            if ring == Ring::Z2 {
                for x in &mut c {
                    *x = x.mod_floor_two();
                }
            }
            labels.push(v);
            cols.push(c);
        }
        Ok(CharMatrix {
            ring,
            n,
            labels,
            cols,
        })
    }

    /// Convenience constructor from machine integers with parseable labels.
    pub fn from_rows(ring: Ring, labels: &[&str], rows: &[&[i64]]) -> Result<Self, CharError> {
        let n = rows.len();
        let columns = labels
            .iter()
            .enumerate()
            .map(|(j, l)| {
                (
                    VertexLabel::parse(l).expect("parseable label"),
                    rows.iter().map(|r| Int::from(r[j])).collect(),
                )
            })
            .collect();
        CharMatrix::new(ring, n, columns)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// Number of rows.
    pub fn rows_len(&self) -> usize {
        self.n
    }

    /// Column labels in canonical order.
    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    /// The column assigned to a vertex.
    pub fn column(&self, v: &VertexLabel) -> Option<&Vec<Int>> {
        let j = self.labels.binary_search(v).ok()?;
        Some(&self.cols[j])
    }

    /// Row-major copy of the matrix (columns in label order).
    pub fn as_rows(&self) -> IntMat {
        (0..self.n)
            .map(|i| self.cols.iter().map(|c| c[i].clone()).collect())
            .collect()
    }

    /// Row-major 0/1 copy, reducing mod 2 when the ring is Z.
    pub fn as_gf2_rows(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|i| {
                self.cols
                    .iter()
                    .map(|c| if c[i].mod_floor_two().is_zero() { 0 } else { 1 })
                    .collect()
            })
            .collect()
    }

    fn from_row_major(ring: Ring, rows: IntMat, labels: Vec<VertexLabel>) -> Self {
        let n = rows.len();
        let cols = (0..labels.len())
            .map(|j| (0..n).map(|i| rows[i][j].clone()).collect())
            .collect();
        CharMatrix {
            ring,
            n,
            labels,
            cols,
        }
    }

    /// Whether the row set is linearly independent of full rank `n`.
    pub fn has_full_rank(&self) -> bool {
        match self.ring {
            Ring::Z2 => gf2_rank(&self.as_gf2_rows()) == self.n,
            Ring::Z => {
                let h = row_hnf(&self.as_rows());
                h.iter().filter(|r| r.iter().any(|x| !x.is_zero())).count() == self.n
            }
        }
    }

    /// Checks that the matrix labels coincide with the vertex set of `k`.
    fn check_labels(&self, k: &SimplicialComplex) -> Result<(), CharError> {
        if self.labels != k.vertices() {
            return Err(CharError::LabelsDisagree);
        }
        Ok(())
    }

    /// Non-singularity over `k`: for every face, the assigned columns span a
    /// direct summand (over Z: all elementary divisors 1; over GF(2): linear
    /// independence).  Checking facets suffices, since subsets of a
    /// unimodular column set are again unimodular.
    pub fn is_nonsingular(&self, k: &SimplicialComplex) -> Result<bool, CharError> {
        self.check_labels(k)?;
        for facet in k.facets() {
            if facet.len() > self.n {
                return Ok(false);
            }
            match self.ring {
                Ring::Z2 => {
                    let sub: Vec<Vec<u8>> = (0..self.n)
                        .map(|i| {
                            facet
                                .iter()
                                .map(|&j| if self.cols[j][i].is_zero() { 0 } else { 1 })
                                .collect()
                        })
                        .collect();
                    if gf2_rank(&sub) != facet.len() {
                        return Ok(false);
                    }
                }
                Ring::Z => {
                    let sub: IntMat = (0..self.n)
                        .map(|i| facet.iter().map(|&j| self.cols[j][i].clone()).collect())
                        .collect();
                    let divs = matrix::elementary_divisors(&sub);
                    if divs.len() != facet.len() || divs.iter().any(|d| !d.is_one()) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Canonical representative of the equivalence class under left
    /// multiplication by unimodular (Z) or invertible (GF(2)) matrices:
    /// the row Hermite form, resp. the reduced row echelon form.
    pub fn dj_canonical(&self) -> CharMatrix {
        let rows = match self.ring {
            Ring::Z => row_hnf(&self.as_rows()),
            Ring::Z2 => gf2_rref(&self.as_gf2_rows())
                .into_iter()
                .map(|r| r.into_iter().map(Int::from).collect())
                .collect(),
        };
        CharMatrix::from_row_major(self.ring, rows, self.labels.clone())
    }

    /// Equivalence test through canonical forms.
    pub fn dj_equal(&self, other: &CharMatrix) -> bool {
        self.ring == other.ring
            && self.labels == other.labels
            && self.dj_canonical().cols == other.dj_canonical().cols
    }

    /// Entry-wise reduction mod 2 into a GF(2) matrix.
    pub fn mod2_reduce(&self) -> CharMatrix {
        let columns = self
            .labels
            .iter()
            .cloned()
            .zip(self.cols.iter().map(|c| {
                c.iter().map(|x| x.mod_floor_two()).collect::<Vec<Int>>()
            }))
            .collect();
        CharMatrix::new(Ring::Z2, self.n, columns).expect("shape preserved")
    }

    /// Left-multiplies by an invertible transform `u` (rows become `u·rows`).
    pub fn transformed(&self, u: &IntMat) -> CharMatrix {
        let rows = matrix::mat_mul(u, &self.as_rows());
        let mut out = CharMatrix::from_row_major(self.ring, rows, self.labels.clone());
        if self.ring == Ring::Z2 {
            for c in &mut out.cols {
                for x in c {
                    *x = x.mod_floor_two();
                }
            }
        }
        out
    }

    /// Normalizes so that the column of `v` becomes the first standard basis
    /// vector; the column must be primitive.  Returns the normalized matrix.
    pub fn normalize_at(&self, v: &VertexLabel) -> Result<CharMatrix, CharError> {
        let col = self
            .column(v)
            .ok_or_else(|| CharError::ColumnNotPrimitive(v.clone()))?
            .clone();
        let col_mat: IntMat = col.iter().map(|x| vec![x.clone()]).collect();
        match self.ring {
            Ring::Z => {
                let (u, h) = row_hnf_with_transform(&col_mat);
                // Primitivity: the Hermite form of a primitive column is e1.
                if h[0][0] != Int::one() || h.iter().skip(1).any(|r| !r[0].is_zero()) {
                    return Err(CharError::ColumnNotPrimitive(v.clone()));
                }
                Ok(self.transformed(&u))
            }
            Ring::Z2 => {
                let bits: Vec<u8> = col
                    .iter()
                    .map(|x| if x.mod_floor_two().is_zero() { 0 } else { 1 })
                    .collect();
                let Some(p) = bits.iter().position(|&b| b == 1) else {
                    return Err(CharError::ColumnNotPrimitive(v.clone()));
                };
                let mut u = matrix::identity(self.n);
                u.swap(0, p);
                // Column bits after the swap.
                let mut cur = bits.clone();
                cur.swap(0, p);
                // Clear the remaining 1s of the column below the new top row.
                for (i, &b) in cur.iter().enumerate().skip(1) {
                    if b == 1 {
                        let top = u[0].clone();
                        for (x, t) in u[i].iter_mut().zip(top) {
                            *x = (&*x + t).mod_floor_two();
                        }
                    }
                }
                Ok(self.transformed(&u))
            }
        }
    }

    /// Projection with respect to a face `σ` of `k`: completes the columns of
    /// `σ` to a basis, rewrites in that basis, and drops the rows and columns
    /// of `σ`.  The result is a characteristic matrix over `link_k(σ)`.
    pub fn project(
        &self,
        k: &SimplicialComplex,
        sigma: &[VertexLabel],
    ) -> Result<CharMatrix, CharError> {
        self.check_labels(k)?;
        let mut sigma = sigma.to_vec();
        sigma.sort();
        sigma.dedup();
        let sigma_name = || {
            sigma
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let idx: Vec<usize> = sigma
            .iter()
            .map(|v| {
                k.vertex_index(v)
                    .ok_or_else(|| CharError::NotAFace(sigma_name()))
            })
            .collect::<Result<_, _>>()?;
        if !k.contains_face(&idx) {
            return Err(CharError::NotAFace(sigma_name()));
        }
        let s = sigma.len();
        let link = k.link_face(&sigma)?;
        // Transform sending the σ-columns to the first s standard vectors.
        let a: IntMat = (0..self.n)
            .map(|i| idx.iter().map(|&j| self.cols[j][i].clone()).collect())
            .collect();
        let w = match self.ring {
            Ring::Z => {
                let (u, h) = row_hnf_with_transform(&a);
                let ok = (0..s).all(|i| {
                    (0..s).all(|j| h[i][j] == if i == j { Int::one() } else { Int::zero() })
                }) && h.iter().skip(s).all(|r| r.iter().all(|x| x.is_zero()));
                if !ok {
                    return Err(CharError::FaceNotUnimodular(sigma_name()));
                }
                u
            }
            Ring::Z2 => {
                let bits: Vec<Vec<u8>> = a
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|x| if x.mod_floor_two().is_zero() { 0 } else { 1 })
                            .collect()
                    })
                    .collect();
                let Some(u) = gf2_reduce_to_prefix(&bits) else {
                    return Err(CharError::FaceNotUnimodular(sigma_name()));
                };
                u
            }
        };
        let rewritten = self.transformed(&w);
        let columns = link
            .vertices()
            .iter()
            .map(|v| {
                let c = rewritten.column(v).expect("link vertex has a column");
                (v.clone(), c[s..].to_vec())
            })
            .collect();
        CharMatrix::new(self.ring, self.n - s, columns)
    }

    /// Reconstruction over a wedge: given two matrices over `k` whose columns
    /// at `v` are primitive and which agree below the top row once both are
    /// normalized at `v`, builds the unique matrix over `wedge(k, v)` whose
    /// two projections at the copies of `v` recover the inputs.
    pub fn wedge_reconstruct(
        k: &SimplicialComplex,
        v: &VertexLabel,
        lambda1: &CharMatrix,
        lambda2: &CharMatrix,
    ) -> Result<CharMatrix, CharError> {
        if lambda1.ring != lambda2.ring {
            return Err(CharError::RingMismatch);
        }
        lambda1.check_labels(k)?;
        lambda2.check_labels(k)?;
        let n = lambda1.n;
        if lambda2.n != n {
            return Err(CharError::ShapeMismatch);
        }
        let l1 = lambda1.normalize_at(v)?;
        let l2 = lambda2.normalize_at(v)?;
        let rows1 = l1.as_rows();
        let rows2 = l2.as_rows();
        // Lower blocks (everything below the top row); the v-columns are e1,
        // so their lower parts are zero on both sides.
        let a1: IntMat = rows1[1..].to_vec();
        let a2: IntMat = rows2[1..].to_vec();
        // Find the change of basis t with t·a2 = a1 by solving the
        // transposed system, then verify it is invertible over the ring.
        let t = match lambda1.ring {
            Ring::Z => {
                let a2t = transpose(&a2);
                let a1t = transpose(&a1);
                let sol = rat_solve_matrix(&to_rat(&a2t), &to_rat(&a1t))
                    .ok_or(CharError::IncompatibleProjections)?;
                let mut t_int: IntMat = Vec::new();
                for row in transpose_rat_to_int(&sol).ok_or(CharError::IncompatibleProjections)? {
                    t_int.push(row);
                }
                if matrix::det(&t_int).abs() != Int::one() {
                    return Err(CharError::IncompatibleProjections);
                }
                t_int
            }
            Ring::Z2 => {
                let a2t: Vec<Vec<u8>> = transpose(&a2)
                    .iter()
                    .map(|r| r.iter().map(|x| if x.is_zero() { 0 } else { 1 }).collect())
                    .collect();
                let a1t: Vec<Vec<u8>> = transpose(&a1)
                    .iter()
                    .map(|r| r.iter().map(|x| if x.is_zero() { 0 } else { 1 }).collect())
                    .collect();
                let sol =
                    gf2_solve_matrix(&a2t, &a1t).ok_or(CharError::IncompatibleProjections)?;
                let t: IntMat = (0..n - 1)
                    .map(|i| (0..n - 1).map(|j| Int::from(sol[j][i])).collect())
                    .collect();
                if gf2_rank(
                    &t.iter()
                        .map(|r| r.iter().map(|x| if x.is_zero() { 0 } else { 1 }).collect())
                        .collect::<Vec<Vec<u8>>>(),
                ) != n - 1
                {
                    return Err(CharError::IncompatibleProjections);
                }
                t
            }
        };
        // Verify t·a2 = a1 exactly (the solve only guarantees it on a
        // spanning subset when the system was square).
        let check = matrix::mat_mul(&t, &a2);
        let agrees = match lambda1.ring {
            Ring::Z => check == a1,
            Ring::Z2 => check
                .iter()
                .zip(&a1)
                .all(|(r, s)| {
                    r.iter()
                        .zip(s)
                        .all(|(x, y)| x.mod_floor_two() == y.mod_floor_two())
                }),
        };
        if !agrees {
            return Err(CharError::IncompatibleProjections);
        }
        let wedge = k.wedge(v)?;
        let max_copy = k
            .vertices()
            .iter()
            .filter(|w| w.base == v.base)
            .map(|w| w.copy)
            .max()
            .unwrap();
        let v2 = VertexLabel::new(v.base.clone(), max_copy + 1);
        // Assemble: rows are (top row of λ1 | top row of λ2 | shared block),
        // with the two copies of v mapped to e1 and e2.
        let mut columns: Vec<(VertexLabel, Vec<Int>)> = Vec::new();
        for w in wedge.vertices() {
            let mut c = vec![Int::zero(); n + 1];
            if *w == *v {
                c[0] = Int::one();
            } else if *w == v2 {
                c[1] = Int::one();
            } else {
                let j1 = l1.labels.binary_search(w).expect("shared vertex");
                c[0] = l1.cols[j1][0].clone();
                c[1] = l2.cols[l2.labels.binary_search(w).unwrap()][0].clone();
                for i in 1..n {
                    c[i + 1] = l1.cols[j1][i].clone();
                }
            }
            columns.push((w.clone(), c));
        }
        CharMatrix::new(lambda1.ring, n + 1, columns)
    }

    /// Canonical extension along a wedge at `v`: the reconstruction of the
    /// matrix with itself, which duplicates the `v`-row.
    pub fn canonical_extension(
        &self,
        k: &SimplicialComplex,
        v: &VertexLabel,
    ) -> Result<CharMatrix, CharError> {
        CharMatrix::wedge_reconstruct(k, v, self, self)
    }

    /// Iterated canonical extension realizing a matrix over `k(J)`: entry
    /// `j[i]` is the number of copies for the `i`-th vertex of `k`.
    pub fn m_of_j(&self, k: &SimplicialComplex, j: &[u32]) -> Result<CharMatrix, CharError> {
        self.check_labels(k)?;
        if j.len() != k.vertex_count() {
            return Err(CharError::ShapeMismatch);
        }
        let targets: Vec<(VertexLabel, u32)> = k
            .vertices()
            .iter()
            .cloned()
            .zip(j.iter().copied())
            .collect();
        let mut cur_k = k.clone();
        let mut cur = self.clone();
        for (v, mult) in targets {
            for _ in 1..mult {
                let next = cur.canonical_extension(&cur_k, &v)?;
                cur_k = cur_k.wedge(&v)?;
                cur = next;
            }
        }
        Ok(cur)
    }

    /// Renames column labels through the given map (labels not present are
    /// kept); the renaming must stay injective.
    pub fn relabel(
        &self,
        map: &std::collections::BTreeMap<VertexLabel, VertexLabel>,
    ) -> Result<CharMatrix, CharError> {
        let columns: Vec<(VertexLabel, Vec<Int>)> = self
            .labels
            .iter()
            .zip(&self.cols)
            .map(|(v, c)| (map.get(v).cloned().unwrap_or_else(|| v.clone()), c.clone()))
            .collect();
        CharMatrix::new(self.ring, self.n, columns)
    }

    /// Serializes to the canonical JSON form with decimal-string entries.
    pub fn to_json(&self) -> String {
        let j = MatrixJson {
            ring: match self.ring {
                Ring::Z => "Z".into(),
                Ring::Z2 => "Z2".into(),
            },
            n: self.n,
            columns: self
                .labels
                .iter()
                .zip(&self.cols)
                .map(|(v, c)| ColumnJson {
                    vertex: (v.base.clone(), v.copy),
                    entries: c.iter().map(|x| x.to_string()).collect(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&j).expect("matrix serializes")
    }

    /// Parses the canonical JSON form.
    pub fn from_json(s: &str) -> Result<Self, CharError> {
        let j: MatrixJson =
            serde_json::from_str(s).map_err(|e| CharError::BadJson(e.to_string()))?;
        let ring = match j.ring.as_str() {
            "Z" => Ring::Z,
            "Z2" => Ring::Z2,
            other => return Err(CharError::BadJson(format!("unknown ring {other:?}"))),
        };
        let columns = j
            .columns
            .into_iter()
            .map(|c| {
                let entries: Result<Vec<Int>, CharError> = c
                    .entries
                    .iter()
                    .map(|e| {
                        e.parse::<Int>()
                            .map_err(|_| CharError::BadJson(format!("bad entry {e:?}")))
                    })
                    .collect();
                Ok((VertexLabel::new(c.vertex.0, c.vertex.1), entries?))
            })
            .collect::<Result<Vec<_>, CharError>>()?;
        CharMatrix::new(ring, j.n, columns)
    }
}

/// Row/column transpose.
fn transpose(a: &IntMat) -> IntMat {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    (0..cols)
        .map(|j| (0..rows).map(|i| a[i][j].clone()).collect())
        .collect()
}

/// Converts the rational solution of a transposed system back to an integer
/// matrix (transposing again); `None` when any entry is non-integral.
fn transpose_rat_to_int(sol: &matrix::RatMat) -> Option<IntMat> {
    let rows = sol.len();
    let cols = if rows == 0 { 0 } else { sol[0].len() };
    let mut out = vec![vec![Int::zero(); rows]; cols];
    for i in 0..rows {
        for j in 0..cols {
            if !sol[i][j].is_integer() {
                return None;
            }
            out[j][i] = sol[i][j].to_integer();
        }
    }
    Some(out)
}

/// Over GF(2): invertible `u` with `u·a` equal to the identity over the first
/// `k` rows and zero below, for an n-by-k matrix of full column rank.
fn gf2_reduce_to_prefix(a: &[Vec<u8>]) -> Option<IntMat> {
    let n = a.len();
    let k = if n == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<u8>> = a.to_vec();
    let mut u: Vec<Vec<u8>> = (0..n)
        .map(|i| (0..n).map(|j| u8::from(i == j)).collect())
        .collect();
    for c in 0..k {
        let p = (c..n).find(|&i| m[i][c] == 1)?;
        m.swap(c, p);
        u.swap(c, p);
        for i in 0..n {
            if i != c && m[i][c] == 1 {
                for j in 0..k {
                    m[i][j] ^= m[c][j];
                }
                for j in 0..n {
                    u[i][j] ^= u[c][j];
                }
            }
        }
    }
    Some(
        u.into_iter()
            .map(|r| r.into_iter().map(Int::from).collect())
            .collect(),
    )
}

/// Small helper trait: representative of an integer mod 2 in {0, 1}.
trait ModTwo {
    fn mod_floor_two(&self) -> Int;
}

impl ModTwo for Int {
    fn mod_floor_two(&self) -> Int {
        let r: Int = self % Int::from(2);
        if r.is_negative() {
            r + 2
        } else {
            r
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{cycle, simplex_boundary};
    use std::collections::BTreeMap;

    fn l(s: &str) -> VertexLabel {
        VertexLabel::parse(s).unwrap()
    }

    /// The standard projective-plane-style matrix over the triangle boundary.
    fn triangle_matrix() -> (SimplicialComplex, CharMatrix) {
        let k = simplex_boundary(&["1", "2", "3"]).unwrap();
        let m = CharMatrix::from_rows(Ring::Z, &["1", "2", "3"], &[&[1, 0, -1], &[0, 1, -1]])
            .unwrap();
        (k, m)
    }

    #[test]
    fn nonsingular_detects_index_two_column() {
        let k = simplex_boundary(&["1", "2"]).unwrap();
        let m = CharMatrix::from_rows(Ring::Z, &["1", "2"], &[&[2, 1]]).unwrap();
        assert!(!m.is_nonsingular(&k).unwrap());
        let good = CharMatrix::from_rows(Ring::Z, &["1", "2"], &[&[1, 1]]).unwrap();
        assert!(good.is_nonsingular(&k).unwrap());
    }

    #[test]
    fn triangle_matrix_is_nonsingular() {
        let (k, m) = triangle_matrix();
        assert!(m.is_nonsingular(&k).unwrap());
    }

    #[test]
    fn dj_canonical_invariant_under_row_mixing() {
        let (_, m) = triangle_matrix();
        let u = crate::matrix::int_mat(&[&[2, 1], &[1, 1]]);
        let mixed = m.transformed(&u);
        assert!(m.dj_equal(&mixed));
    }

    #[test]
    fn mod2_reduction_of_pentagon_matrix() {
        // d even reduces to one 0/1 pattern, d odd to another.
        let even = CharMatrix::from_rows(
            Ring::Z,
            &["1", "2", "3", "4", "5"],
            &[&[1, 0, -1, -1, 0], &[0, 1, 1, 0, -1]],
        )
        .unwrap()
        .mod2_reduce();
        let expect = CharMatrix::from_rows(
            Ring::Z2,
            &["1", "2", "3", "4", "5"],
            &[&[1, 0, 1, 1, 0], &[0, 1, 1, 0, 1]],
        )
        .unwrap();
        assert_eq!(even, expect);
    }

    /// A matrix over the wedge of the pentagon at vertex 1, used across the
    /// projection and reconstruction tests.
    fn wedge_example() -> (SimplicialComplex, CharMatrix) {
        let w = cycle(5).wedge(&l("1")).unwrap();
        let m = CharMatrix::from_rows(
            Ring::Z,
            &["1", "1_2", "2", "3", "4", "5"],
            &[
                &[0, 1, 0, -1, -1, 0],
                &[0, 0, 1, 1, 0, -1],
                &[1, -1, 0, 0, 0, 0],
            ],
        )
        .unwrap();
        (w, m)
    }

    #[test]
    fn wedge_example_is_nonsingular() {
        let (w, m) = wedge_example();
        assert!(m.is_nonsingular(&w).unwrap());
    }

    #[test]
    fn projection_at_first_copy() {
        let (w, m) = wedge_example();
        let p = m.project(&w, &[l("1")]).unwrap();
        let expect = CharMatrix::from_rows(
            Ring::Z,
            &["1_2", "2", "3", "4", "5"],
            &[&[1, 0, -1, -1, 0], &[0, 1, 1, 0, -1]],
        )
        .unwrap();
        assert!(p.dj_equal(&expect));
    }

    #[test]
    fn projection_at_interior_vertex() {
        let (w, m) = wedge_example();
        let p = m.project(&w, &[l("3")]).unwrap();
        let expect = CharMatrix::from_rows(
            Ring::Z,
            &["1", "1_2", "2", "4"],
            &[&[0, 1, 1, -1], &[1, -1, 0, 0]],
        )
        .unwrap();
        assert!(p.dj_equal(&expect));
    }

    #[test]
    fn projection_rejects_non_faces() {
        let (w, m) = wedge_example();
        assert!(matches!(
            m.project(&w, &[l("2"), l("4")]),
            Err(CharError::NotAFace(_))
        ));
    }

    #[test]
    fn reconstruction_from_both_projections_round_trips() {
        let (w, m) = wedge_example();
        let k = cycle(5);
        // The projection at the first copy lives on 1_2,2,…; renaming the
        // second copy back to the base vertex identifies the link with k.
        let to_base: BTreeMap<VertexLabel, VertexLabel> =
            [(l("1_2"), l("1"))].into_iter().collect();
        let side2 = m.project(&w, &[l("1")]).unwrap().relabel(&to_base).unwrap();
        let side1 = m.project(&w, &[l("1_2")]).unwrap();
        let rebuilt = CharMatrix::wedge_reconstruct(&k, &l("1"), &side1, &side2).unwrap();
        assert!(rebuilt.dj_equal(&m));
    }

    #[test]
    fn reconstruction_rejects_incompatible_blocks() {
        let k = cycle(5);
        let a = CharMatrix::from_rows(
            Ring::Z,
            &["1", "2", "3", "4", "5"],
            &[&[1, 0, -1, -1, 0], &[0, 1, 1, 0, -1]],
        )
        .unwrap();
        let b = CharMatrix::from_rows(
            Ring::Z,
            &["1", "2", "3", "4", "5"],
            &[&[1, 0, -1, -1, 2], &[0, 1, 1, 0, 1]],
        )
        .unwrap();
        assert!(matches!(
            CharMatrix::wedge_reconstruct(&k, &l("1"), &a, &b),
            Err(CharError::IncompatibleProjections)
        ));
    }

    #[test]
    fn canonical_extension_duplicates_the_wedged_row() {
        let k = cycle(5);
        let a = CharMatrix::from_rows(
            Ring::Z,
            &["1", "2", "3", "4", "5"],
            &[&[1, 0, -1, -1, 0], &[0, 1, 1, 0, -1]],
        )
        .unwrap();
        let ext = a.canonical_extension(&k, &l("1")).unwrap();
        let w = k.wedge(&l("1")).unwrap();
        assert!(ext.is_nonsingular(&w).unwrap());
        let rows = ext.as_rows();
        // Top two rows agree away from the copies of the wedged vertex.
        for j in 2..6 {
            assert_eq!(rows[0][j], rows[1][j]);
        }
        // Projections at either copy recover the input.
        let p2 = ext.project(&w, &[l("1_2")]).unwrap();
        assert!(p2.dj_equal(&a));
    }

    #[test]
    fn m_of_j_sections_recover_base_matrix() {
        let k = cycle(5);
        let a = CharMatrix::from_rows(
            Ring::Z,
            &["1", "2", "3", "4", "5"],
            &[&[1, 0, -1, -1, 3], &[0, 1, 1, 0, -1]],
        )
        .unwrap();
        let j = [2u32, 1, 2, 1, 1];
        let kj = k.k_of_j(&j).unwrap();
        let mj = a.m_of_j(&k, &j).unwrap();
        assert!(mj.is_nonsingular(&kj).unwrap());
        assert_eq!(mj.rows_len(), 4);
        // Projecting away the extra copies returns the original class.
        let p = mj
            .project(&kj, &[l("1_2")])
            .unwrap()
            .project(&kj.remove_vertex(&l("1_2")).unwrap(), &[l("3_2")])
            .unwrap();
        assert!(p.dj_equal(&a));
    }

    #[test]
    fn mod2_commutes_with_extension() {
        let k = cycle(5);
        let a = CharMatrix::from_rows(
            Ring::Z,
            &["1", "2", "3", "4", "5"],
            &[&[1, 0, -1, -1, 2], &[0, 1, 1, 0, -1]],
        )
        .unwrap();
        let w = k.wedge(&l("2")).unwrap();
        let lhs = a.canonical_extension(&k, &l("2")).unwrap().mod2_reduce();
        let rhs = a
            .mod2_reduce()
            .canonical_extension(&k, &l("2"))
            .unwrap();
        assert!(lhs.is_nonsingular(&w).unwrap());
        assert!(lhs.dj_equal(&rhs));
    }

    #[test]
    fn json_round_trip() {
        let (_, m) = wedge_example();
        let s = m.to_json();
        let back = CharMatrix::from_json(&s).unwrap();
        assert_eq!(m, back);
    }
}
