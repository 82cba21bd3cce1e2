//! Point configurations, linear and Gale transforms, cofaces, and Shephard's
//! projectivity criterion — all over exact rationals.
//!
//! A configuration is a labeled list of rational points (the columns of a ray
//! or diagram matrix).  The Shephard machinery scales the rays of a complete
//! fan to sum to zero, passes to a linear transform containing the all-ones
//! row, deletes that row, and intersects the relative interiors of the
//! coface hulls; the fan is strongly polytopal exactly when that region is
//! nonempty.

use crate::charmap::{CharMatrix, Ring};
use crate::complex::SimplicialComplex;
use crate::label::VertexLabel;
use crate::lp::{EqLp, LpOutcome, Var};
use crate::matrix::{rat_kernel, rat_solve_matrix, Rat, RatMat};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported number of points for subset-enumerating operations.
pub const MAX_POINTS: usize = 16;

/// Errors raised by configuration and diagram operations.
#[derive(Debug, Error)]
pub enum GaleError {
    #[error("point for label {0} appears more than once")]
    DuplicateLabel(VertexLabel),
    #[error("coordinate count disagrees with the declared dimension")]
    DimMismatch,
    #[error("label {0} is not a point of the configuration")]
    UnknownLabel(VertexLabel),
    #[error("too many points ({0}); at most {MAX_POINTS} are supported here")]
    TooManyPoints(usize),
    #[error("rays do not positively span the ambient space")]
    NotPositivelySpanning,
    #[error("matrix must have integer ring for ray configurations")]
    RingNotZ,
    #[error("complex vertices are not all labeled in the configuration")]
    LabelsDisagree,
    #[error("invalid configuration JSON: {0}")]
    BadJson(String),
}

/// A labeled list of exact rational points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfiguration {
    dim: usize,
    labels: Vec<VertexLabel>,
    /// `points[j]` is the coordinate vector of `labels[j]`.
    points: Vec<Vec<Rat>>,
}

#[derive(Serialize, Deserialize)]
struct PointJson {
    label: String,
    coords: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct ConfigJson {
    dim: usize,
    points: Vec<PointJson>,
}

impl PointConfiguration {
    /// Builds a configuration from labeled points; points are sorted by
    /// label.
    pub fn new(
        dim: usize,
        points: Vec<(VertexLabel, Vec<Rat>)>,
    ) -> Result<Self, GaleError> {
        let mut points = points;
        points.sort_by(|a, b| a.0.cmp(&b.0));
        for w in points.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(GaleError::DuplicateLabel(w[0].0.clone()));
            }
        }
        let mut labels = Vec::with_capacity(points.len());
        let mut coords = Vec::with_capacity(points.len());
        for (l, p) in points {
            if p.len() != dim {
                return Err(GaleError::DimMismatch);
            }
            labels.push(l);
            coords.push(p);
        }
        Ok(PointConfiguration {
            dim,
            labels,
            points: coords,
        })
    }

    /// The columns of an integer characteristic matrix as a configuration.
    pub fn from_columns(m: &CharMatrix) -> Result<Self, GaleError> {
        if m.ring() != Ring::Z {
            return Err(GaleError::RingNotZ);
        }
        let points = m
            .labels()
            .iter()
            .map(|v| {
                (
                    v.clone(),
                    m.column(v)
                        .expect("label has a column")
                        .iter()
                        .map(|x| Rat::from_integer(x.clone()))
                        .collect(),
                )
            })
            .collect();
        PointConfiguration::new(m.rows_len(), points)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    /// The point assigned to a label.
    pub fn point(&self, v: &VertexLabel) -> Option<&Vec<Rat>> {
        let j = self.labels.binary_search(v).ok()?;
        Some(&self.points[j])
    }

    /// The points as the columns of a `dim × len` matrix.
    pub fn as_matrix(&self) -> RatMat {
        (0..self.dim)
            .map(|i| self.points.iter().map(|p| p[i].clone()).collect())
            .collect()
    }

    /// Removes one labeled point.
    pub fn delete_point(&self, v: &VertexLabel) -> Result<Self, GaleError> {
        if self.point(v).is_none() {
            return Err(GaleError::UnknownLabel(v.clone()));
        }
        let points = self
            .labels
            .iter()
            .zip(&self.points)
            .filter(|(l, _)| *l != v)
            .map(|(l, p)| (l.clone(), p.clone()))
            .collect();
        PointConfiguration::new(self.dim, points)
    }

    /// Serializes to the canonical JSON form with `p/q` rational strings.
    pub fn to_json(&self) -> String {
        let j = ConfigJson {
            dim: self.dim,
            points: self
                .labels
                .iter()
                .zip(&self.points)
                .map(|(l, p)| PointJson {
                    label: l.to_string(),
                    coords: p.iter().map(rat_to_string).collect(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&j).expect("configuration serializes")
    }

    /// Parses the canonical JSON form.
    pub fn from_json(s: &str) -> Result<Self, GaleError> {
        let j: ConfigJson =
            serde_json::from_str(s).map_err(|e| GaleError::BadJson(e.to_string()))?;
        let points = j
            .points
            .into_iter()
            .map(|p| {
                let label = VertexLabel::parse(&p.label)
                    .ok_or_else(|| GaleError::BadJson(format!("bad label {:?}", p.label)))?;
                let coords = p
                    .coords
                    .iter()
                    .map(|c| parse_rat(c))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok((label, coords))
            })
            .collect::<Result<Vec<_>, GaleError>>()?;
        PointConfiguration::new(j.dim, points)
    }
}

fn rat_to_string(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn parse_rat(s: &str) -> Result<Rat, GaleError> {
    let bad = || GaleError::BadJson(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = p.parse().map_err(|_| bad())?;
            let q = q.parse().map_err(|_| bad())?;
            Ok(Rat::new(p, q))
        }
        None => Ok(Rat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// A linear transform of a configuration: the rows of the output span the
/// kernel of the input matrix, so the two annihilate each other.
pub fn linear_transform(x: &PointConfiguration) -> PointConfiguration {
    let kernel = rat_kernel(&x.as_matrix());
    let points = x
        .labels
        .iter()
        .enumerate()
        .map(|(j, l)| {
            (
                l.clone(),
                kernel.iter().map(|row| row[j].clone()).collect(),
            )
        })
        .collect();
    PointConfiguration::new(kernel.len(), points).expect("kernel dimensions agree")
}

/// The Gale transform: the linear transform of the configuration lifted by an
/// all-ones row.  Its points sum to zero.
pub fn gale_transform(x: &PointConfiguration) -> PointConfiguration {
    let mut lifted = x.as_matrix();
    lifted.push(vec![Rat::one(); x.len()]);
    let kernel = rat_kernel(&lifted);
    let points = x
        .labels
        .iter()
        .enumerate()
        .map(|(j, l)| {
            (
                l.clone(),
                kernel.iter().map(|row| row[j].clone()).collect(),
            )
        })
        .collect();
    PointConfiguration::new(kernel.len(), points).expect("kernel dimensions agree")
}

/// Whether the origin lies in the relative interior of the convex hull of the
/// points selected by `y`.  The empty selection is a coface by convention
/// (its complement spans the improper face).
pub fn is_coface(t: &PointConfiguration, y: &[VertexLabel]) -> Result<bool, GaleError> {
    if y.is_empty() {
        return Ok(true);
    }
    let pts: Vec<&Vec<Rat>> = y
        .iter()
        .map(|l| t.point(l).ok_or_else(|| GaleError::UnknownLabel(l.clone())))
        .collect::<Result<_, _>>()?;
    Ok(origin_in_relint(&pts, t.dim))
}

/// Strict program deciding `0 ∈ relint conv(pts)`.
fn origin_in_relint(pts: &[&Vec<Rat>], dim: usize) -> bool {
    let mut lp = EqLp::new();
    let t = lp.free(Rat::one());
    let ps: Vec<Var> = pts.iter().map(|_| lp.nonneg(Rat::zero())).collect();
    // Convex coefficients μ_i = p_i + t with Σ μ = 1 and Σ μ_i x_i = 0.
    let mut norm: Vec<(Var, Rat)> = ps.iter().map(|v| (*v, Rat::one())).collect();
    norm.push((t, Rat::from_integer((pts.len() as i64).into())));
    lp.equation(norm, Rat::one());
    for c in 0..dim {
        let mut terms: Vec<(Var, Rat)> = Vec::new();
        let mut tcoef = Rat::zero();
        for (v, p) in ps.iter().zip(pts) {
            terms.push((*v, p[c].clone()));
            tcoef += &p[c];
        }
        terms.push((t, tcoef));
        lp.equation(terms, Rat::zero());
    }
    match lp.solve() {
        LpOutcome::Optimal(v, _) => v > Rat::zero(),
        LpOutcome::Infeasible => false,
        LpOutcome::Unbounded => unreachable!("normalized program is bounded"),
    }
}

/// The inclusion-minimal cofaces of a configuration.
pub fn minimal_cofaces(t: &PointConfiguration) -> Result<Vec<Vec<VertexLabel>>, GaleError> {
    let m = t.len();
    if m > MAX_POINTS {
        return Err(GaleError::TooManyPoints(m));
    }
    let mut minimal: Vec<u32> = Vec::new();
    let mut masks: Vec<u32> = (1..(1u32 << m)).collect();
    masks.sort_by_key(|x| x.count_ones());
    for mask in masks {
        if minimal.iter().any(|&s| s & mask == s) {
            continue;
        }
        let y: Vec<VertexLabel> = (0..m)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| t.labels[i].clone())
            .collect();
        if is_coface(t, &y)? {
            minimal.push(mask);
        }
    }
    minimal.sort_unstable();
    Ok(minimal
        .into_iter()
        .map(|mask| {
            (0..m)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| t.labels[i].clone())
                .collect()
        })
        .collect())
}

/// Rebuilds the boundary complex of the polytope encoded by a Gale diagram:
/// facets are the complements of the minimal cofaces.
pub fn face_poset_from_gale(t: &PointConfiguration) -> Result<SimplicialComplex, GaleError> {
    let minimal = minimal_cofaces(t)?;
    let facets: Vec<Vec<VertexLabel>> = minimal
        .iter()
        .map(|y| {
            t.labels
                .iter()
                .filter(|l| !y.contains(l))
                .cloned()
                .collect()
        })
        .collect();
    SimplicialComplex::from_facet_labels(&facets)
        .map_err(|_| GaleError::NotPositivelySpanning)
}

/// The Shephard diagram of a spanning ray configuration: rays are rescaled by
/// a strictly positive vector summing them to zero, a linear transform
/// containing the all-ones row is chosen, and that row is deleted.
pub fn shephard_diagram(x: &PointConfiguration) -> Result<PointConfiguration, GaleError> {
    let m = x.len();
    // Strictly positive μ with Σ μ_i x_i = 0, found at maximum margin.
    let mut lp = EqLp::new();
    let t = lp.free(Rat::one());
    let ps: Vec<Var> = (0..m).map(|_| lp.nonneg(Rat::zero())).collect();
    let mut norm: Vec<(Var, Rat)> = ps.iter().map(|v| (*v, Rat::one())).collect();
    norm.push((t, Rat::from_integer((m as i64).into())));
    lp.equation(norm, Rat::from_integer((m as i64).into()));
    for c in 0..x.dim {
        let mut terms: Vec<(Var, Rat)> = Vec::new();
        let mut tcoef = Rat::zero();
        for (v, p) in ps.iter().zip(&x.points) {
            terms.push((*v, p[c].clone()));
            tcoef += &p[c];
        }
        terms.push((t, tcoef));
        lp.equation(terms, Rat::zero());
    }
    let (margin, sol) = match lp.solve() {
        LpOutcome::Optimal(v, sol) => (v, sol),
        _ => return Err(GaleError::NotPositivelySpanning),
    };
    if margin <= Rat::zero() {
        return Err(GaleError::NotPositivelySpanning);
    }
    let mu: Vec<Rat> = (0..m).map(|i| &sol[i + 1] + &sol[0]).collect();
    // The scaled rays sum to zero, so the all-ones vector is a dependency.
    let scaled: RatMat = (0..x.dim)
        .map(|i| {
            (0..m)
                .map(|j| &x.points[j][i] * &mu[j])
                .collect()
        })
        .collect();
    let kernel = rat_kernel(&scaled);
    // Express the all-ones row in the kernel basis and swap it in.
    let bt: RatMat = (0..m)
        .map(|j| kernel.iter().map(|row| row[j].clone()).collect())
        .collect();
    let ones: RatMat = (0..m).map(|_| vec![Rat::one()]).collect();
    let c = rat_solve_matrix(&bt, &ones).expect("all-ones row lies in the kernel");
    let r = c
        .iter()
        .position(|row| !row[0].is_zero())
        .expect("all-ones row is nonzero");
    let diagram_rows: Vec<&Vec<Rat>> = kernel
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != r)
        .map(|(_, row)| row)
        .collect();
    let points = x
        .labels
        .iter()
        .enumerate()
        .map(|(j, l)| {
            (
                l.clone(),
                diagram_rows.iter().map(|row| row[j].clone()).collect(),
            )
        })
        .collect();
    PointConfiguration::new(diagram_rows.len(), points)
}

/// Outcome of the Shephard-criterion region test.
#[derive(Clone, Debug)]
pub struct ShephardRegion {
    /// Whether the intersection of the relative interiors of the coface
    /// hulls is nonempty.
    pub nonempty: bool,
    /// A point of the region, when nonempty.
    pub witness: Option<Vec<Rat>>,
    /// The attained interiority margin (positive exactly when nonempty).
    pub margin: Rat,
    /// Whether only the minimal cofaces (facet complements) were
    /// intersected, which suffices when their hulls are full simplices.
    pub minimal_mode: bool,
}

/// Shephard's criterion for the fan described by the faces of `k` with
/// diagram `xhat`: intersects the relative interiors of the coface hulls,
/// where a coface is the complement (within the diagram labels) of a face of
/// `k`.  When every facet complement spans a full-dimensional simplex the
/// intersection over those complements alone is used.
pub fn shephard_criterion(
    k: &SimplicialComplex,
    xhat: &PointConfiguration,
) -> Result<ShephardRegion, GaleError> {
    for v in k.vertices() {
        if xhat.point(v).is_none() {
            return Err(GaleError::LabelsDisagree);
        }
    }
    let facet_cofaces: Vec<Vec<VertexLabel>> = k
        .facet_labels()
        .iter()
        .map(|f| {
            xhat.labels
                .iter()
                .filter(|l| !f.contains(l))
                .cloned()
                .collect()
        })
        .collect();
    let minimal_mode = facet_cofaces
        .iter()
        .all(|y| spans_full_simplex(xhat, y));
    let cofaces: Vec<Vec<VertexLabel>> = if minimal_mode {
        facet_cofaces
    } else {
        // Fall back to the complements of all faces (desk-scale exhaustive).
        k.faces()
            .into_iter()
            .map(|f| {
                let fl: Vec<&VertexLabel> = f.iter().map(|&i| &k.vertices()[i]).collect();
                xhat.labels
                    .iter()
                    .filter(|l| !fl.contains(l))
                    .cloned()
                    .collect()
            })
            .collect()
    };
    let mut lp = EqLp::new();
    let t = lp.free(Rat::one());
    let zs: Vec<Var> = (0..xhat.dim).map(|_| lp.free(Rat::zero())).collect();
    for y in &cofaces {
        let pts: Vec<&Vec<Rat>> = y.iter().map(|l| xhat.point(l).unwrap()).collect();
        let ps: Vec<Var> = pts.iter().map(|_| lp.nonneg(Rat::zero())).collect();
        let mut norm: Vec<(Var, Rat)> = ps.iter().map(|v| (*v, Rat::one())).collect();
        norm.push((t, Rat::from_integer((pts.len() as i64).into())));
        lp.equation(norm, Rat::one());
        for c in 0..xhat.dim {
            let mut terms: Vec<(Var, Rat)> = Vec::new();
            let mut tcoef = Rat::zero();
            for (v, p) in ps.iter().zip(&pts) {
                terms.push((*v, p[c].clone()));
                tcoef += &p[c];
            }
            terms.push((t, tcoef));
            terms.push((zs[c], -Rat::one()));
            lp.equation(terms, Rat::zero());
        }
    }
    match lp.solve() {
        LpOutcome::Optimal(v, sol) => {
            let nonempty = v > Rat::zero();
            let witness = if nonempty {
                Some((0..xhat.dim).map(|c| sol[1 + c].clone()).collect())
            } else {
                None
            };
            Ok(ShephardRegion {
                nonempty,
                witness,
                margin: v,
                minimal_mode,
            })
        }
        LpOutcome::Infeasible => Ok(ShephardRegion {
            nonempty: false,
            witness: None,
            margin: -Rat::one(),
            minimal_mode,
        }),
        LpOutcome::Unbounded => unreachable!("normalized region program is bounded"),
    }
}

/// Whether the selected points are `dim + 1` affinely independent points.
fn spans_full_simplex(t: &PointConfiguration, y: &[VertexLabel]) -> bool {
    if y.len() != t.dim + 1 {
        return false;
    }
    // Affine independence: the lifted points (x, 1) are linearly independent.
    let lifted: RatMat = (0..=t.dim)
        .map(|i| {
            y.iter()
                .map(|l| {
                    let p = t.point(l).expect("coface label present");
                    if i < t.dim {
                        p[i].clone()
                    } else {
                        Rat::one()
                    }
                })
                .collect()
        })
        .collect();
    rat_kernel(&lifted).is_empty()
}

/// Renders a two-dimensional configuration (and an optional region witness)
/// as a standalone SVG document.  Coordinates are converted to floating point
/// for presentation only.
pub fn svg_diagram(t: &PointConfiguration, witness: Option<&[Rat]>) -> String {
    let to_f = |x: &Rat| -> f64 {
        let n: f64 = x.numer().to_string().parse().unwrap_or(0.0);
        let d: f64 = x.denom().to_string().parse().unwrap_or(1.0);
        n / d
    };
    let mut pts: Vec<(String, f64, f64)> = t
        .labels
        .iter()
        .zip(&t.points)
        .map(|(l, p)| {
            (
                l.to_string(),
                p.first().map(&to_f).unwrap_or(0.0),
                p.get(1).map(&to_f).unwrap_or(0.0),
            )
        })
        .collect();
    if let Some(w) = witness {
        pts.push((
            "*".to_string(),
            w.first().map(&to_f).unwrap_or(0.0),
            w.get(1).map(&to_f).unwrap_or(0.0),
        ));
    }
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for (_, x, y) in &pts {
        x0 = x0.min(*x);
        x1 = x1.max(*x);
        y0 = y0.min(*y);
        y1 = y1.max(*y);
    }
    let pad = 1.0 + 0.1 * ((x1 - x0).abs() + (y1 - y0).abs());
    let (x0, w, h) = (x0 - pad, x1 - x0 + 2.0 * pad, y1 - y0 + 2.0 * pad);
    let scale = 400.0 / w.max(h);
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0}\" height=\"{:.0}\" \
         viewBox=\"0 0 {:.2} {:.2}\">\n",
        w * scale,
        h * scale,
        w * scale,
        h * scale
    ));
    for (label, x, y) in &pts {
        // Flip y so the mathematical orientation points up.
        let cx = (x - x0) * scale;
        let cy = (y1 + pad - y) * scale;
        let color = if label == "*" { "red" } else { "black" };
        out.push_str(&format!(
            "  <circle cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"4\" fill=\"{color}\"/>\n\
             \x20 <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\">{label}</text>\n",
            cx + 6.0,
            cy - 6.0
        ));
    }
    out.push_str("</svg>\n");
    out
}
