//! Integer-side classification engines at Picard number three: the pentagon
//! fan types, the multi-pentagon family, the heptagon obstruction, and
//! projectivity sweeps.

use crate::charmap::{CharError, CharMatrix, Ring};
use crate::complex::{cycle, ComplexError, SimplicialComplex};
use crate::fanprops::{
    is_fan_giving, FanError, OrientedSphere,
};
use crate::galeview::{
    shephard_criterion, shephard_diagram, GaleError, PointConfiguration,
};
use crate::label::VertexLabel;
use crate::matrix::{row_hnf, Int, IntMat, Rat};
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use std::collections::BTreeMap;

use thiserror::Error;

/// Errors raised by the classification engines.
#[derive(Debug, Error)]
pub enum Picard3Error {
    #[error("matrix is not of any pentagon rotation type")]
    NotClassifiable,
    #[error("invalid family parameters: {0}")]
    BadSpec(String),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Fan(#[from] FanError),
    #[error(transparent)]
    Gale(#[from] GaleError),
}

/// The 5-cycle complex with vertices `1..5` and edges between cyclic
/// neighbors: the boundary complex (dual face structure) of the pentagon.
pub fn pentagon_complex() -> SimplicialComplex {
    cycle(5)
}

fn label(base: u32, copy: u32) -> VertexLabel {
    VertexLabel::parse(&if copy == 1 {
        base.to_string()
    } else {
        format!("{base}_{copy}")
    })
    .expect("numeric label parses")
}

/// Representative in `1..=5` of an integer mod 5.
fn rep5(x: i64) -> u32 {
    ((x - 1).rem_euclid(5)) as u32 + 1
}

/// The base column data `(1,0), (0,1), (-1,1), (-1,0), (d,-1)`.
fn base_columns(d: i64) -> [[i64; 2]; 5] {
    [[1, 0], [0, 1], [-1, 1], [-1, 0], [d, -1]]
}

/// A rotation class of complete non-singular fans over the pentagon.
///
/// `rotation` lives in `0..5`; the base matrix's columns are assigned to the
/// vertices `rotation+1, …, rotation+4, rotation` (mod 5, representatives
/// `1..=5`).  Classes with `d = 1` are identified with the previous
/// rotation's `d = 0` and stored in the latter form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PentagonType {
    pub rotation: u8,
    pub d: i64,
}

impl PentagonType {
    /// Applies the `(i,0) = (i+1,1)` identification.
    pub fn canonical(self) -> PentagonType {
        if self.d == 1 {
            PentagonType {
                rotation: (self.rotation + 4) % 5,
                d: 0,
            }
        } else {
            self
        }
    }
}

/// The characteristic matrix of the pentagon fan of type `(i, d)`.
pub fn pentagon_lambda(i: u8, d: i64) -> CharMatrix {
    let cols = base_columns(d);
    let mut assigned: Vec<(u32, [i64; 2])> = Vec::new();
    for (k, col) in cols.iter().enumerate() {
        assigned.push((rep5(i as i64 + k as i64 + 1), *col));
    }
    assigned.sort();
    let labels: Vec<String> = assigned.iter().map(|(l, _)| l.to_string()).collect();
    let label_refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    let row0: Vec<i64> = assigned.iter().map(|(_, c)| c[0]).collect();
    let row1: Vec<i64> = assigned.iter().map(|(_, c)| c[1]).collect();
    CharMatrix::from_rows(Ring::Z, &label_refs, &[&row0, &row1])
        .expect("pentagon matrix is well formed")
}

/// Classifies a complete non-singular fan-giving matrix over a 5-cycle into
/// its rotation type.  The five rotations are tried explicitly; the sorted
/// column positions are read as the cyclic order of the pentagon.
pub fn classify_pentagon_fan(lambda: &CharMatrix) -> Result<PentagonType, Picard3Error> {
    if lambda.ring() != Ring::Z || lambda.rows_len() != 2 || lambda.labels().len() != 5 {
        return Err(Picard3Error::NotClassifiable);
    }
    let cols: Vec<&Vec<Int>> = lambda
        .labels()
        .iter()
        .map(|l| lambda.column(l).expect("own label"))
        .collect();
    let mut found: Vec<PentagonType> = Vec::new();
    for i in 0..5u8 {
        // Column order i+1, i+2, i+3, i+4, i as positions in the cyclic
        // labeling.
        let order: Vec<usize> = (1..=5)
            .map(|k| (rep5(i as i64 + k) - 1) as usize)
            .collect();
        let m: IntMat = (0..2)
            .map(|r| order.iter().map(|&j| cols[j][r].clone()).collect())
            .collect();
        let h = row_hnf(&m);
        if h.len() != 2 {
            continue;
        }
        let pattern_ok = h[0][0].is_one()
            && h[0][1].is_zero()
            && h[0][2] == Int::from(-1)
            && h[0][3] == Int::from(-1)
            && h[1][0].is_zero()
            && h[1][1].is_one()
            && h[1][2].is_one()
            && h[1][3].is_zero()
            && h[1][4] == Int::from(-1);
        if pattern_ok {
            if let Some(d) = h[0][4].to_i64() {
                found.push(PentagonType { rotation: i, d }.canonical());
            }
        }
    }
    found.sort();
    found.dedup();
    match found.as_slice() {
        [t] => Ok(*t),
        _ => Err(Picard3Error::NotClassifiable),
    }
}

/// The five integer matrices from the boundary of the classification that
/// are positive over the pentagon yet not fan-giving.
pub fn non_fan_giving_positive_candidates() -> Vec<CharMatrix> {
    // (a, b) with c = -ab - 1 and d = (1+b)/(1+ab) integral, a < 0.
    let pairs: [(i64, i64); 5] = [(-1, 2), (-1, 3), (-2, 1), (-2, 2), (-3, 1)];
    pairs
        .iter()
        .map(|&(a, b)| {
            let c = -a * b - 1;
            let d = (1 + b) / (1 + a * b);
            CharMatrix::from_rows(
                Ring::Z,
                &["1", "2", "3", "4", "5"],
                &[&[1, 0, -1, b, d], &[0, 1, a, c, -1]],
            )
            .expect("candidate matrix is well formed")
        })
        .collect()
}

/// Parameters of the multi-pentagon family: multiplicities, the base type
/// offset `d`, and the unknown vectors attached to the first and fourth
/// vertex groups (first entries pinned to zero by convention).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PentagonFamilySpec {
    pub a: [usize; 5],
    pub d: i64,
    pub n1: Vec<i64>,
    pub n4: Vec<i64>,
}

impl PentagonFamilySpec {
    pub fn validate(&self) -> Result<(), Picard3Error> {
        if self.a.iter().any(|&x| x == 0) {
            return Err(Picard3Error::BadSpec("multiplicities must be positive".into()));
        }
        if self.n1.len() != self.a[0] || self.n4.len() != self.a[3] {
            return Err(Picard3Error::BadSpec(
                "unknown vectors must match their group sizes".into(),
            ));
        }
        if self.n1[0] != 0 || self.n4[0] != 0 {
            return Err(Picard3Error::BadSpec(
                "first unknown entry is pinned to zero".into(),
            ));
        }
        Ok(())
    }

    /// The closed-form type of the projection onto the section `b`: the
    /// base `d` shifted by the unknown entries selected by the first and
    /// fourth coordinates.  Keeping a group's last copy contributes nothing;
    /// keeping copy `b < aᵢ` contributes the entry after it.
    pub fn projection_type_closed_form(&self, b: &[usize; 5]) -> PentagonType {
        let pick = |n: &[i64], b: usize| n[b % n.len()];
        PentagonType {
            rotation: 0,
            d: self.d + pick(&self.n1, b[0]) - pick(&self.n4, b[3]),
        }
        .canonical()
    }

    /// All sections `(b₁..b₅)` with `1 ≤ bᵢ ≤ aᵢ`.
    pub fn sections(&self) -> Vec<[usize; 5]> {
        let mut out = Vec::new();
        for b1 in 1..=self.a[0] {
            for b2 in 1..=self.a[1] {
                for b3 in 1..=self.a[2] {
                    for b4 in 1..=self.a[3] {
                        for b5 in 1..=self.a[4] {
                            out.push([b1, b2, b3, b4, b5]);
                        }
                    }
                }
            }
        }
        out
    }
}

/// Builds the block characteristic matrix of the multi-pentagon family
/// together with its underlying complex (the iterated wedge of the 5-cycle).
///
/// Layout: two top rows carry the base column of each vertex group in the
/// group's last copy; each group has a difference band `[I | -1-column]`;
/// the unknown vectors sit in the last column of the fifth group, in the
/// bands of groups one and four.
pub fn pentagon_family(
    spec: &PentagonFamilySpec,
) -> Result<(SimplicialComplex, CharMatrix), Picard3Error> {
    spec.validate()?;
    let a = spec.a;
    let m: usize = a.iter().sum();
    let n = m - 3;
    let base = base_columns(spec.d);
    // Row offset of each group's difference band.
    let mut band = [0usize; 5];
    let mut off = 2;
    for i in 0..5 {
        band[i] = off;
        off += a[i] - 1;
    }
    debug_assert_eq!(off, n);
    let mut columns: Vec<(VertexLabel, Vec<Int>)> = Vec::new();
    for g in 0..5 {
        for c in 1..=a[g] {
            let mut col = vec![Int::zero(); n];
            if c == a[g] {
                col[0] = Int::from(base[g][0]);
                col[1] = Int::from(base[g][1]);
            }
            // Difference band of the own group.
            for r in 1..a[g] {
                if c == r {
                    col[band[g] + r - 1] = Int::one();
                } else if c == a[g] {
                    col[band[g] + r - 1] = Int::from(-1);
                }
            }
            // Unknown vectors live in the last column of group five.
            if g == 4 && c == a[4] {
                for r in 1..a[0] {
                    col[band[0] + r - 1] = Int::from(spec.n1[r]);
                }
                for r in 1..a[3] {
                    col[band[3] + r - 1] = Int::from(spec.n4[r]);
                }
            }
            columns.push((label(g as u32 + 1, c as u32), col));
        }
    }
    let lambda = CharMatrix::new(Ring::Z, n, columns)?;
    let j: Vec<u32> = a.iter().map(|&x| x as u32).collect();
    let complex = pentagon_complex().k_of_j(&j)?;
    Ok((complex, lambda))
}

/// Projects a family matrix onto the sub-pentagon selected by a section and
/// classifies the result.
pub fn pentagon_projection_type(
    k: &SimplicialComplex,
    lambda: &CharMatrix,
    a: &[usize; 5],
    b: &[usize; 5],
) -> Result<PentagonType, Picard3Error> {
    let mut sigma: Vec<VertexLabel> = Vec::new();
    for g in 0..5 {
        if b[g] < 1 || b[g] > a[g] {
            return Err(Picard3Error::BadSpec("section out of range".into()));
        }
        for c in 1..=a[g] {
            if c != b[g] {
                sigma.push(label(g as u32 + 1, c as u32));
            }
        }
    }
    let proj = lambda.project(k, &sigma)?;
    classify_pentagon_fan(&proj)
}

/// The fourteen facets of the heptagon-type boundary sphere and their
/// orientation signs; ridge-adjacent facets carry opposite sign products.
#[derive(Clone, Debug)]
pub struct HeptagonSignTable {
    pub entries: Vec<(Vec<u8>, i8)>,
}

impl HeptagonSignTable {
    pub fn standard() -> Self {
        let raw: [(&[u8; 4], i8); 14] = [
            (&[1, 2, 3, 4], 1),
            (&[1, 2, 3, 6], -1),
            (&[1, 2, 4, 6], 1),
            (&[1, 3, 4, 7], -1),
            (&[1, 3, 5, 6], -1),
            (&[1, 3, 5, 7], 1),
            (&[1, 4, 5, 6], 1),
            (&[1, 4, 5, 7], -1),
            (&[2, 3, 4, 7], 1),
            (&[2, 3, 6, 7], -1),
            (&[2, 4, 5, 6], -1),
            (&[2, 4, 5, 7], 1),
            (&[2, 5, 6, 7], 1),
            (&[3, 5, 6, 7], -1),
        ];
        HeptagonSignTable {
            entries: raw.iter().map(|(f, s)| (f.to_vec(), *s)).collect(),
        }
    }

    /// Checks the alternating-sign rule: every ridge lies in exactly two
    /// facets and their signs multiply to −1.
    pub fn is_consistent(&self) -> bool {
        let mut ridges: BTreeMap<Vec<u8>, Vec<i8>> = BTreeMap::new();
        for (f, s) in &self.entries {
            for skip in 0..f.len() {
                let ridge: Vec<u8> = f
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != skip)
                    .map(|(_, &v)| v)
                    .collect();
                // Reorder so the non-ridge column comes last: moving it
                // from position `skip` to the end costs a det sign of
                // (−1)^(len−1−skip).
                let parity = if (f.len() - 1 - skip) % 2 == 1 { -1 } else { 1 };
                ridges.entry(ridge).or_default().push(*s * parity);
            }
        }
        ridges
            .values()
            .all(|ss| ss.len() == 2 && ss[0] * ss[1] == -1)
    }

    /// The facet complex described by the table.
    pub fn complex(&self) -> SimplicialComplex {
        let facets: Vec<Vec<VertexLabel>> = self
            .entries
            .iter()
            .map(|(f, _)| {
                f.iter()
                    .map(|v| VertexLabel::parse(&v.to_string()).unwrap())
                    .collect()
            })
            .collect();
        SimplicialComplex::from_facet_labels(&facets).expect("table facets form a complex")
    }
}

/// The heptagon-type facet sphere built from its circular signature and
/// relabeled counterclockwise (`1,2,5,3,4,6,7`) to match the sign table.
pub fn heptagon_facet_complex() -> SimplicialComplex {
    let positions = SimplicialComplex::from_gale(&[1; 7]).expect("signature is valid");
    let map: BTreeMap<String, String> = [
        ("1", "1"),
        ("2", "2"),
        ("3", "5"),
        ("4", "3"),
        ("5", "4"),
        ("6", "6"),
        ("7", "7"),
    ]
    .iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect();
    positions.relabel(&map).expect("relabeling is injective")
}

/// A solution of the obstruction system (expected never to occur).
pub type ObstructionSolution = [i64; 8];

/// The nine equations of the heptagon obstruction system in the variables
/// `(a, b, c, d, e, f, k, l)` after the forced substitutions.
fn obstruction_equations(x: &ObstructionSolution) -> [i64; 9] {
    let [a, b, c, d, e, f, k, l] = *x;
    let det3 = |m: [[i64; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    [
        b + f * d - 1,
        b * l + d + 1,
        b + c * f + 1,
        b * k + c + 1,
        e * l,
        a + c * e + 1,
        a * k + c + 1,
        det3([[a, e, -1], [c, -1, k], [d, -1, l]]) + 1,
        det3([[a, e, -1], [b, f, -1], [d, -1, l]]) + 1,
    ]
}

/// Exhaustive search for integer solutions of the obstruction system inside
/// the box `|x| ≤ bound`, with optional equations disabled (for negative
/// controls).  Candidate values are propagated only from *active* equations,
/// so disabling an equation can only enlarge the search.
pub fn heptagon_obstruction_search_with(
    bound: i64,
    active: [bool; 9],
) -> Vec<ObstructionSolution> {
    assert!(
        HeptagonSignTable::standard().is_consistent(),
        "sign table fails the alternating-ridge rule"
    );
    let in_box = |x: i64| x.abs() <= bound;
    let boxed = || (-bound..=bound).collect::<Vec<i64>>();
    let exact_div = |num: i64, den: i64| -> Vec<i64> {
        if den != 0 && num % den == 0 && in_box(num / den) {
            vec![num / den]
        } else if den != 0 {
            vec![]
        } else {
            boxed()
        }
    };
    let mut solutions = Vec::new();
    // Active equations 1 and 3 subtract to f·(d−c) = 2, confining f.
    let fs: Vec<i64> = if active[0] && active[2] {
        [-2, -1, 1, 2].iter().copied().filter(|&f| in_box(f)).collect()
    } else {
        boxed()
    };
    for &f in &fs {
        for b in -bound..=bound {
            let ds = if active[0] { exact_div(1 - b, f) } else { boxed() };
            for &d in &ds {
                let cs = if active[2] { exact_div(-1 - b, f) } else { boxed() };
                for &c in &cs {
                    let ls = if active[1] { exact_div(-1 - d, b) } else { boxed() };
                    for &l in &ls {
                        let es = if active[4] && l != 0 { vec![0] } else { boxed() };
                        for &e in &es {
                            let az = if active[5] {
                                let a = -1 - c * e;
                                if in_box(a) { vec![a] } else { vec![] }
                            } else {
                                boxed()
                            };
                            for &a in &az {
                                let ks = if active[6] { exact_div(-1 - c, a) } else { boxed() };
                                for &k in &ks {
                                    let x = [a, b, c, d, e, f, k, l];
                                    let eqs = obstruction_equations(&x);
                                    if eqs
                                        .iter()
                                        .zip(&active)
                                        .all(|(v, on)| !*on || *v == 0)
                                    {
                                        solutions.push(x);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    solutions.sort_unstable();
    solutions.dedup();
    solutions
}

/// Full obstruction search: all nine equations active.
pub fn heptagon_obstruction_search(bound: i64) -> Vec<ObstructionSolution> {
    heptagon_obstruction_search_with(bound, [true; 9])
}

/// Outcome of a projectivity sweep over a family of fan-giving matrices.
#[derive(Clone, Debug)]
pub struct ProjectivityReport {
    pub total: usize,
    /// Indices of members whose Shephard region is empty.
    pub non_projective: Vec<usize>,
    /// A region point for each projective member, by index.
    pub witnesses: Vec<(usize, Vec<Rat>)>,
}

/// Runs the Shephard criterion over every member of a family in parallel.
pub fn projectivity_sweep(
    members: &[(SimplicialComplex, CharMatrix)],
) -> Result<ProjectivityReport, Picard3Error> {
    let results: Vec<Result<(usize, bool, Option<Vec<Rat>>), Picard3Error>> = members
        .par_iter()
        .enumerate()
        .map(|(idx, (k, lambda))| {
            let rays = PointConfiguration::from_columns(lambda)?;
            let diagram = shephard_diagram(&rays)?;
            let region = shephard_criterion(k, &diagram)?;
            Ok((idx, region.nonempty, region.witness))
        })
        .collect();
    let mut non_projective = Vec::new();
    let mut witnesses = Vec::new();
    let total = members.len();
    for r in results {
        let (idx, nonempty, witness) = r?;
        if nonempty {
            witnesses.push((idx, witness.expect("nonempty region has a witness")));
        } else {
            non_projective.push(idx);
        }
    }
    non_projective.sort_unstable();
    witnesses.sort_by_key(|(i, _)| *i);
    Ok(ProjectivityReport {
        total,
        non_projective,
        witnesses,
    })
}

/// Exhaustively enumerates the identity-prefixed pentagon matrices with the
/// remaining entries bounded by `bound`, keeping the non-singular ones.
/// Every complete non-singular fan over the pentagon has a representative of
/// this shape up to basis change.
pub fn pentagon_candidates(bound: i64) -> Vec<CharMatrix> {
    let rng = || -bound..=bound;
    let mut out = Vec::new();
    // λ = [[1,0,x3,x5,x7],[0,1,x4,x6,x8]]; adjacent unimodularity pins
    // x3 = ±det and x8 = ±det on the edges touching the identity block.
    for x3 in [-1i64, 1] {
        for x8 in [-1i64, 1] {
            for x4 in rng() {
                for x5 in rng() {
                    for x6 in rng() {
                        if (x3 * x6 - x4 * x5).abs() != 1 {
                            continue;
                        }
                        for x7 in rng() {
                            if (x5 * x8 - x6 * x7).abs() != 1 {
                                continue;
                            }
                            out.push(
                                CharMatrix::from_rows(
                                    Ring::Z,
                                    &["1", "2", "3", "4", "5"],
                                    &[&[1, 0, x3, x5, x7], &[0, 1, x4, x6, x8]],
                                )
                                .expect("candidate matrix is well formed"),
                            );
                        }
                    }
                }
            }
        }
    }
    out
}

/// Classifies every fan-giving member of `pentagon_candidates(bound)`;
/// returns `(fan_giving_count, classified_types)` or the first failure.
pub fn pentagon_sweep(bound: i64) -> Result<(usize, Vec<PentagonType>), Picard3Error> {
    let os = OrientedSphere::orient(&pentagon_complex())?;
    let candidates = pentagon_candidates(bound);
    let classified: Vec<Result<Option<PentagonType>, Picard3Error>> = candidates
        .par_iter()
        .map(|lambda| {
            if !lambda.is_nonsingular(os.complex())? {
                return Ok(None);
            }
            if !is_fan_giving(&os, lambda)? {
                return Ok(None);
            }
            classify_pentagon_fan(lambda).map(Some)
        })
        .collect();
    let mut types = Vec::new();
    for c in classified {
        if let Some(t) = c? {
            types.push(t);
        }
    }
    let count = types.len();
    types.sort();
    types.dedup();
    Ok((count, types))
}

/// Builds a triple-stage tower member over the product-of-simplices complex
/// with factor dimensions `n`: each factor's first `nᵢ` vertices get
/// standard basis vectors in the factor's row block, and the factor's last
/// vertex gets the negated block sum plus free integer entries (taken from
/// `params` in order) in the row blocks of the earlier factors.  Such
/// matrices are always fan-giving and strongly polytopal.
pub fn cube_tower_member(
    n: &[u32; 3],
    params: &[i64],
) -> Result<(SimplicialComplex, CharMatrix), Picard3Error> {
    let k = crate::realcover::cube_family_complex(n)
        .map_err(|e| Picard3Error::BadSpec(e.to_string()))?;
    let total: usize = n.iter().map(|&x| x as usize).sum();
    let expected = n[0] as usize + (n[0] + n[1]) as usize;
    if params.len() != expected {
        return Err(Picard3Error::BadSpec(format!(
            "expected {expected} free entries, got {}",
            params.len()
        )));
    }
    let mut cols: BTreeMap<VertexLabel, Vec<Int>> = BTreeMap::new();
    let mut offset = 0usize;
    let mut consumed = 0usize;
    for (g, &ng) in n.iter().enumerate() {
        let ng = ng as usize;
        for c in 0..=ng {
            let label = VertexLabel::new(
                format!("{}{}", g + 1, (b'a' + c as u8) as char),
                1,
            );
            let mut col = vec![Int::zero(); total];
            if c < ng {
                col[offset + c] = Int::one();
            } else {
                for r in 0..ng {
                    col[offset + r] = -Int::one();
                }
                for r in 0..offset {
                    col[r] = Int::from(params[consumed]);
                    consumed += 1;
                }
            }
            cols.insert(label, col);
        }
        offset += ng;
    }
    let columns: Vec<(VertexLabel, Vec<Int>)> = k
        .vertices()
        .iter()
        .map(|v| (v.clone(), cols[v].clone()))
        .collect();
    let lambda = CharMatrix::new(Ring::Z, total, columns)?;
    Ok((k, lambda))
}
