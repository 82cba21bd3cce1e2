//! Properties of the complete rational multi-fan spanned by a characteristic
//! matrix over an oriented simplicial sphere: facet weights, positivity, the
//! Todd genus via counting cones over a generic vector, and the resulting
//! fan-givingness test, together with an independent oracle that checks the
//! fan condition by exact pairwise cone separation.

use crate::charmap::{CharMatrix, Ring};
use crate::complex::SimplicialComplex;
use crate::lp::{EqLp, LpOutcome};
use crate::matrix::{self, det, rat_solve, Int, Rat, RatMat};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Errors raised by fan-property computations.
#[derive(Debug, Error)]
pub enum FanError {
    #[error("complex is not pure")]
    NotPure,
    #[error("a ridge lies in {0} facets; expected exactly 2")]
    NotPseudomanifold(usize),
    #[error("facet adjacency graph is disconnected")]
    Disconnected,
    #[error("no coherent orientation exists")]
    NotOrientable,
    #[error("matrix rows ({0}) do not match facet size ({1})")]
    DimensionMismatch(usize, usize),
    #[error("matrix columns do not match the vertices of the complex")]
    LabelsDisagree,
    #[error("weights require integer coefficients")]
    RingNotZ,
    #[error("facet {0} spans a degenerate cone")]
    DegenerateFacet(String),
    #[error("generic-vector trials disagree; input is numerically degenerate")]
    GenericTrialsDisagree,
    #[error("no usable generic vector found")]
    NoGenericVector,
}

/// A pure complex together with a coherent orientation of its facets,
/// anchored so the lexicographically least facet carries sign +1.
#[derive(Clone, Debug)]
pub struct OrientedSphere {
    complex: SimplicialComplex,
    /// Signs aligned with `complex.facets()` order.
    signs: Vec<i8>,
}

impl OrientedSphere {
    /// Orients a pure closed pseudomanifold; fails when some ridge does not
    /// lie in exactly two facets, the facet graph is disconnected, or no
    /// coherent orientation exists.
    pub fn orient(k: &SimplicialComplex) -> Result<Self, FanError> {
        if !k.is_pure() {
            return Err(FanError::NotPure);
        }
        let facets = k.facets();
        let nf = facets.len();
        // Ridge -> incident (facet index, position of the removed vertex).
        let mut ridges: std::collections::BTreeMap<Vec<usize>, Vec<(usize, usize)>> =
            std::collections::BTreeMap::new();
        for (fi, f) in facets.iter().enumerate() {
            for (pos, _) in f.iter().enumerate() {
                let mut r = f.clone();
                r.remove(pos);
                ridges.entry(r).or_default().push((fi, pos));
            }
        }
        for inc in ridges.values() {
            if inc.len() != 2 {
                return Err(FanError::NotPseudomanifold(inc.len()));
            }
        }
        // Anchor at the lexicographically least facet and propagate signs.
        let anchor = (0..nf)
            .min_by(|&a, &b| facets[a].cmp(&facets[b]))
            .ok_or(FanError::NotPure)?;
        let mut signs: Vec<i8> = vec![0; nf];
        signs[anchor] = 1;
        let mut queue = std::collections::VecDeque::from([anchor]);
        while let Some(fi) = queue.pop_front() {
            for inc in ridges.values() {
                let Some(me) = inc.iter().find(|(g, _)| *g == fi) else {
                    continue;
                };
                let (other, opos) = inc[usize::from(inc[0].0 == fi)];
                debug_assert_ne!(other, fi);
                // Coherence: the induced orientations of the shared ridge
                // must be opposite.
                let induced_me = signs[fi] * if me.1 % 2 == 0 { 1 } else { -1 };
                let needed = -induced_me * if opos % 2 == 0 { 1 } else { -1 };
                if signs[other] == 0 {
                    signs[other] = needed;
                    queue.push_back(other);
                } else if signs[other] != needed {
                    return Err(FanError::NotOrientable);
                }
            }
        }
        if signs.iter().any(|&s| s == 0) {
            return Err(FanError::Disconnected);
        }
        Ok(OrientedSphere {
            complex: k.clone(),
            signs,
        })
    }

    /// The underlying complex.
    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    /// Facet signs aligned with `complex().facets()`.
    pub fn signs(&self) -> &[i8] {
        &self.signs
    }
}

/// Checks shape compatibility and returns the per-facet column matrices.
fn facet_matrices(
    os: &OrientedSphere,
    lambda: &CharMatrix,
) -> Result<Vec<matrix::IntMat>, FanError> {
    if lambda.ring() != Ring::Z {
        return Err(FanError::RingNotZ);
    }
    if lambda.labels() != os.complex.vertices() {
        return Err(FanError::LabelsDisagree);
    }
    let n = lambda.rows_len();
    let rows = lambda.as_rows();
    let mut out = Vec::new();
    for f in os.complex.facets() {
        if f.len() != n {
            return Err(FanError::DimensionMismatch(n, f.len()));
        }
        let sub: matrix::IntMat = (0..n)
            .map(|i| f.iter().map(|&j| rows[i][j].clone()).collect())
            .collect();
        out.push(sub);
    }
    Ok(out)
}

/// The weight of each facet: the sign of the determinant of its columns taken
/// in the oriented vertex order.  Fails on a facet with determinant zero.
pub fn weights(os: &OrientedSphere, lambda: &CharMatrix) -> Result<Vec<i8>, FanError> {
    let mats = facet_matrices(os, lambda)?;
    let mut out = Vec::with_capacity(mats.len());
    for (fi, sub) in mats.iter().enumerate() {
        let d = det(sub);
        if d.is_zero() {
            let name = os.complex.facet_labels()[fi]
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",");
            return Err(FanError::DegenerateFacet(name));
        }
        let s = if d.is_positive() { 1 } else { -1 };
        out.push(s * os.signs[fi]);
    }
    Ok(out)
}

/// Positivity: all weights agree under one of the two global orientations.
pub fn is_positive(os: &OrientedSphere, lambda: &CharMatrix) -> Result<bool, FanError> {
    let w = weights(os, lambda)?;
    Ok(w.iter().all(|&x| x == 1) || w.iter().all(|&x| x == -1))
}

/// The Todd genus: the signed number of maximal cones containing a generic
/// rational vector, computed in the global orientation that makes the count
/// nonnegative.  Three independent generic vectors are evaluated and must
/// agree.
pub fn todd_genus(os: &OrientedSphere, lambda: &CharMatrix) -> Result<i64, FanError> {
    let w = weights(os, lambda)?;
    let mats = facet_matrices(os, lambda)?;
    let rats: Vec<RatMat> = mats.iter().map(matrix::to_rat).collect();
    let n = lambda.rows_len();
    // Deterministic base point: the column sum of the first facet.
    let base: Vec<Rat> = (0..n)
        .map(|i| {
            let s: Int = mats[0][i].iter().sum();
            Rat::from_integer(s)
        })
        .collect();
    let mut agreed: Option<i64> = None;
    let mut trials = 0;
    let mut q: i64 = 10_007;
    while trials < 3 {
        if q > 1_000_000 {
            return Err(FanError::NoGenericVector);
        }
        // Moment-curve perturbation 1/q, 1/q², …, generic for all but
        // finitely many q.
        let mut v = base.clone();
        let mut p = Rat::one();
        let qr = Rat::new(Int::one(), Int::from(q));
        for x in v.iter_mut() {
            p = &p * &qr;
            *x = &*x + &p;
        }
        q += 2;
        let mut total: i64 = 0;
        let mut generic = true;
        for (fi, m) in rats.iter().enumerate() {
            let Some(sol) = rat_solve(m, &v) else {
                // A singular facet matrix is caught by `weights` above.
                generic = false;
                break;
            };
            if sol.iter().any(|x| x.is_zero()) {
                generic = false;
                break;
            }
            if sol.iter().all(|x| x > &Rat::zero()) {
                total += i64::from(w[fi]);
            }
        }
        if !generic {
            continue;
        }
        match agreed {
            None => agreed = Some(total),
            Some(prev) if prev != total => return Err(FanError::GenericTrialsDisagree),
            _ => {}
        }
        trials += 1;
    }
    Ok(agreed.expect("three trials completed").abs())
}

/// Fan-givingness: positive weights and Todd genus one.
pub fn is_fan_giving(os: &OrientedSphere, lambda: &CharMatrix) -> Result<bool, FanError> {
    Ok(is_positive(os, lambda)? && todd_genus(os, lambda)? == 1)
}

/// Independent fan oracle: the cones over the faces form a fan if and only if
/// every face spans a simplicial cone and the relative interiors of the cones
/// of distinct, inclusion-incomparable faces are disjoint.  Each disjointness
/// question is decided by an exact strict-feasibility program.
pub fn is_fan_giving_oracle(
    k: &SimplicialComplex,
    lambda: &CharMatrix,
) -> Result<bool, FanError> {
    if lambda.ring() != Ring::Z {
        return Err(FanError::RingNotZ);
    }
    if lambda.labels() != k.vertices() {
        return Err(FanError::LabelsDisagree);
    }
    let rows = matrix::to_rat(&lambda.as_rows());
    let n = lambda.rows_len();
    let faces = k.faces();
    // Strong convexity of every cone: faces must have independent columns.
    for f in &faces {
        let sub: RatMat = (0..n)
            .map(|i| f.iter().map(|&j| rows[i][j].clone()).collect())
            .collect();
        if rat_rank(&sub) != f.len() {
            return Ok(false);
        }
    }
    for (ai, a) in faces.iter().enumerate() {
        for b in faces.iter().skip(ai + 1) {
            if is_subset(a, b) || is_subset(b, a) {
                // A subset spans a face of the larger simplicial cone; their
                // relative interiors are automatically disjoint.
                continue;
            }
            if relint_cones_intersect(&rows, a, b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

fn rat_rank(a: &RatMat) -> usize {
    let cols = if a.is_empty() { 0 } else { a[0].len() };
    cols - matrix::rat_kernel(a).len()
}

/// Strict feasibility of `Σ μ_i a_i = Σ ν_j b_j` with all coefficients
/// positive, i.e. whether the relative interiors of the two spanned cones
/// meet.
fn relint_cones_intersect(rows: &RatMat, a: &[usize], b: &[usize]) -> bool {
    let n = rows.len();
    let mut lp = EqLp::new();
    let t = lp.free(Rat::one());
    let pa: Vec<_> = a.iter().map(|_| lp.nonneg(Rat::zero())).collect();
    let pb: Vec<_> = b.iter().map(|_| lp.nonneg(Rat::zero())).collect();
    // Coefficients are t + slack; the cone equation and a normalization that
    // bounds t from above.
    for i in 0..n {
        let mut terms: Vec<(crate::lp::Var, Rat)> = Vec::new();
        let mut tcoef = Rat::zero();
        for (v, &j) in pa.iter().zip(a) {
            terms.push((*v, rows[i][j].clone()));
            tcoef += &rows[i][j];
        }
        for (v, &j) in pb.iter().zip(b) {
            terms.push((*v, -rows[i][j].clone()));
            tcoef -= &rows[i][j];
        }
        terms.push((t, tcoef));
        lp.equation(terms, Rat::zero());
    }
    let mut norm: Vec<(crate::lp::Var, Rat)> = pa
        .iter()
        .chain(pb.iter())
        .map(|v| (*v, Rat::one()))
        .collect();
    norm.push((t, Rat::from_integer(Int::from((a.len() + b.len()) as i64))));
    lp.equation(norm, Rat::one());
    match lp.solve() {
        LpOutcome::Optimal(v, _) => v > Rat::zero(),
        LpOutcome::Infeasible => false,
        LpOutcome::Unbounded => unreachable!("normalized strictness program is bounded"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charmap::CharMatrix;
    use crate::complex::{cycle, simplex_boundary};

    fn triangle_fan() -> (OrientedSphere, CharMatrix) {
        let k = simplex_boundary(&["1", "2", "3"]).unwrap();
        let os = OrientedSphere::orient(&k).unwrap();
        let m = CharMatrix::from_rows(Ring::Z, &["1", "2", "3"], &[&[1, 0, -1], &[0, 1, -1]])
            .unwrap();
        (os, m)
    }

    #[test]
    fn projective_plane_fan_has_genus_one() {
        let (os, m) = triangle_fan();
        let w = weights(&os, &m).unwrap();
        assert!(w.iter().all(|&x| x == w[0]));
        assert!(is_positive(&os, &m).unwrap());
        assert_eq!(todd_genus(&os, &m).unwrap(), 1);
        assert!(is_fan_giving(&os, &m).unwrap());
        assert!(is_fan_giving_oracle(os.complex(), &m).unwrap());
    }

    #[test]
    fn pentagon_fan_matrix_is_fan_giving_for_each_parameter() {
        let k = cycle(5);
        let os = OrientedSphere::orient(&k).unwrap();
        for d in -3..=3 {
            let m = CharMatrix::from_rows(
                Ring::Z,
                &["1", "2", "3", "4", "5"],
                &[&[1, 0, -1, -1, d], &[0, 1, 1, 0, -1]],
            )
            .unwrap();
            assert!(is_fan_giving(&os, &m).unwrap(), "d = {d}");
            assert!(is_fan_giving_oracle(&k, &m).unwrap(), "d = {d}");
        }
    }

    #[test]
    fn double_winding_cycle_has_genus_two() {
        // Eight rays traversing the four coordinate directions twice.
        let k = cycle(8);
        let os = OrientedSphere::orient(&k).unwrap();
        let m = CharMatrix::from_rows(
            Ring::Z,
            &["1", "2", "3", "4", "5", "6", "7", "8"],
            &[&[1, 0, -1, 0, 1, 0, -1, 0], &[0, 1, 0, -1, 0, 1, 0, -1]],
        )
        .unwrap();
        assert!(is_positive(&os, &m).unwrap());
        assert_eq!(todd_genus(&os, &m).unwrap(), 2);
        assert!(!is_fan_giving(&os, &m).unwrap());
        assert!(!is_fan_giving_oracle(&k, &m).unwrap());
    }

    #[test]
    fn orientation_rejects_non_spheres() {
        // A path (ridge {2} lies in one facet only after pruning…): use a
        // complex with a ridge in three facets instead.
        let k = SimplicialComplex::from_facet_labels(&[
            vec![
                crate::label::VertexLabel::simple("1"),
                crate::label::VertexLabel::simple("2"),
            ],
            vec![
                crate::label::VertexLabel::simple("1"),
                crate::label::VertexLabel::simple("3"),
            ],
            vec![
                crate::label::VertexLabel::simple("1"),
                crate::label::VertexLabel::simple("4"),
            ],
        ])
        .unwrap();
        assert!(matches!(
            OrientedSphere::orient(&k),
            Err(FanError::NotPseudomanifold(_))
        ));
    }
}
