//! The GF(2) side: exhaustive enumeration of characteristic maps over a
//! simple polytope, closed-form class counts, and the mod-2 pentagon and
//! heptagon families.

use crate::charmap::{CharError, CharMatrix, Ring};
use crate::complex::{ComplexError, SimplicialComplex};
use crate::label::VertexLabel;
use crate::matrix::Int;
use crate::picard3::{pentagon_family, Picard3Error, PentagonFamilySpec};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

/// Errors raised by the enumeration machinery.
#[derive(Debug, Error)]
pub enum CoverError {
    #[error("the first n facets of the chosen order do not meet at a vertex")]
    PrefixNotAVertex,
    #[error("facet order must be a permutation of the complex's vertices")]
    BadOrder,
    #[error("dimension too large for the bitmask enumeration ({0})")]
    TooLarge(usize),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Picard3(#[from] Picard3Error),
}

/// The face data of a simple polytope, encoded through its dual complex: a
/// set `I` of facet indices belongs when the facets meet in a face.
#[derive(Clone, Debug)]
pub struct FaceInput {
    n: usize,
    m: usize,
    /// Facet order: position `j` (0-based) holds the label of facet `j+1`.
    order: Vec<VertexLabel>,
    /// All faces of the dual complex as bitmasks over the order.
    faces: Vec<u64>,
}

impl FaceInput {
    /// Builds the face data from a dual complex and an explicit facet order.
    /// The first `n` facets must span a facet of the dual complex (meet at a
    /// vertex of the polytope).
    pub fn from_complex(
        k: &SimplicialComplex,
        order: &[VertexLabel],
    ) -> Result<Self, CoverError> {
        let m = k.vertex_count();
        let n = (k.dim() + 1) as usize;
        if n > 30 {
            return Err(CoverError::TooLarge(n));
        }
        if order.len() != m {
            return Err(CoverError::BadOrder);
        }
        // Position of each complex vertex in the order.
        let mut pos: BTreeMap<&VertexLabel, usize> = BTreeMap::new();
        for (j, l) in order.iter().enumerate() {
            if k.vertex_index(l).is_none() || pos.insert(l, j).is_some() {
                return Err(CoverError::BadOrder);
            }
        }
        let prefix: Vec<usize> = (0..n)
            .map(|j| k.vertex_index(&order[j]).expect("order is checked"))
            .collect();
        let mut sorted_prefix = prefix.clone();
        sorted_prefix.sort_unstable();
        if !k.contains_face(&sorted_prefix) {
            return Err(CoverError::PrefixNotAVertex);
        }
        let faces = k
            .faces()
            .iter()
            .map(|f| {
                f.iter()
                    .map(|&i| 1u64 << pos[&k.vertices()[i]])
                    .sum()
            })
            .collect();
        Ok(FaceInput {
            n,
            m,
            order: order.to_vec(),
            faces,
        })
    }

    /// Chooses a canonical order: the lexicographically least facet of the
    /// dual complex first, then the remaining vertices in sorted order.
    pub fn from_complex_auto(k: &SimplicialComplex) -> Result<Self, CoverError> {
        let first = k
            .facets()
            .into_iter()
            .min()
            .ok_or(CoverError::BadOrder)?;
        let mut order: Vec<VertexLabel> =
            first.iter().map(|&i| k.vertices()[i].clone()).collect();
        for v in k.vertices() {
            if !order.contains(v) {
                order.push(v.clone());
            }
        }
        FaceInput::from_complex(k, &order)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn order(&self) -> &[VertexLabel] {
        &self.order
    }
}

/// The full list of identity-prefixed characteristic maps over GF(2) for a
/// polytope.  Distinct members lie in distinct equivalence classes, so the
/// count equals the number of classes.
#[derive(Clone, Debug)]
pub struct Z2Census {
    pub n: usize,
    pub m: usize,
    pub order: Vec<VertexLabel>,
    /// `members[k][j]` is the column of facet `j+1` as a bitmask of GF(2)ⁿ.
    pub members: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct CensusJson {
    n: usize,
    m: usize,
    order: Vec<String>,
    /// Each member as column bitstrings (row 1 first).
    members: Vec<Vec<String>>,
}

impl Z2Census {
    /// The census members as labeled GF(2) matrices.
    pub fn matrices(&self) -> Vec<CharMatrix> {
        self.members
            .iter()
            .map(|cols| {
                let columns = self
                    .order
                    .iter()
                    .zip(cols)
                    .map(|(l, &v)| {
                        (
                            l.clone(),
                            (0..self.n).map(|r| Int::from(v >> r & 1)).collect(),
                        )
                    })
                    .collect();
                CharMatrix::new(Ring::Z2, self.n, columns)
                    .expect("census member is a valid matrix")
            })
            .collect()
    }

    pub fn count(&self) -> usize {
        self.members.len()
    }

    pub fn to_json(&self) -> String {
        let j = CensusJson {
            n: self.n,
            m: self.m,
            order: self.order.iter().map(|l| l.to_string()).collect(),
            members: self
                .members
                .iter()
                .map(|cols| {
                    cols.iter()
                        .map(|&v| {
                            (0..self.n)
                                .map(|r| if v >> r & 1 == 1 { '1' } else { '0' })
                                .collect()
                        })
                        .collect()
                })
                .collect(),
        };
        serde_json::to_string_pretty(&j).expect("census serializes")
    }
}

/// Depth-first enumeration of all completions of the identity prefix, with
/// an explicit candidate order (the list `S` of the backtracking procedure).
pub fn enumerate_small_covers_with_order(
    input: &FaceInput,
    s_order: &[u32],
) -> Z2Census {
    let (n, m) = (input.n, input.m);
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    debug_assert!({
        let mut s = s_order.to_vec();
        s.sort_unstable();
        s == (1..=full).collect::<Vec<u32>>()
    });
    // Face subsets attached to each level: for level i (1-based), the masks
    // of faces whose maximum element is i.
    let mut level_faces: Vec<Vec<u64>> = vec![Vec::new(); m + 1];
    for &f in &input.faces {
        if f == 0 {
            continue;
        }
        let top = 63 - f.leading_zeros() as usize + 1;
        level_faces[top].push(f & !(1u64 << (top - 1)));
    }
    let mut lambda: Vec<u32> = vec![0; m + 1];
    for j in 1..=n {
        lambda[j] = 1 << (j - 1);
    }
    let mut stacks: Vec<Vec<u32>> = vec![Vec::new(); m + 1];
    let mut members: Vec<Vec<u32>> = Vec::new();
    let mut i = n + 1;
    if m == n {
        // Nothing to choose: the identity itself is the only member.
        return Z2Census {
            n,
            m,
            order: input.order.clone(),
            members: vec![lambda[1..=m].to_vec()],
        };
    }
    // Step 1/2: (re)build the candidate list for level i.
    'outer: loop {
        let mut s: Vec<u32> = s_order.to_vec();
        for &j_mask in &level_faces[i] {
            let mut sum = 0u32;
            let mut jm = j_mask;
            while jm != 0 {
                let b = jm.trailing_zeros() as usize;
                sum ^= lambda[b + 1];
                jm &= jm - 1;
            }
            s.retain(|&v| v != sum);
        }
        stacks[i] = s;
        // Steps 3–8.
        loop {
            if i == n {
                break 'outer;
            }
            if stacks[i].is_empty() {
                i -= 1;
                continue;
            }
            lambda[i] = stacks[i].remove(0);
            if i == m {
                members.push(lambda[1..=m].to_vec());
                continue;
            }
            i += 1;
            continue 'outer;
        }
    }
    members.sort_unstable();
    Z2Census {
        n,
        m,
        order: input.order.clone(),
        members,
    }
}

/// Enumeration with the natural candidate order `1, 2, …, 2ⁿ−1`.
pub fn enumerate_small_covers(input: &FaceInput) -> Z2Census {
    let full = (1u32 << input.n) - 1;
    let natural: Vec<u32> = (1..=full).collect();
    enumerate_small_covers_with_order(input, &natural)
}

/// Closed-form class count over the multi-pentagon polytope.
pub fn dj_count_pentagon_formula(a: &[u32; 5]) -> u128 {
    let p = |i: usize, j: usize| 1u128 << (a[i] + a[j] - 1);
    p(0, 3) + p(1, 4) + p(2, 0) + p(3, 1) + p(4, 2) - 5
}

/// Closed-form class count over a product of three simplices.
pub fn dj_count_cube_formula(n: &[u32; 3]) -> u128 {
    let x: Vec<i128> = n.iter().map(|&ni| (1i128 << ni) - 1).collect();
    let s1 = x[0] + x[1] + x[2];
    let e2 = x[0] * x[1] + x[1] * x[2] + x[2] * x[0];
    let q = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
    let cubes = x[0].pow(3) + x[1].pow(3) + x[2].pow(3);
    (1 + 2 * s1 + s1 * s1 + e2 + s1 * q - cubes) as u128
}

/// The five identity-prefixed classes over the pentagon.
pub fn pentagon_reference_classes() -> Vec<CharMatrix> {
    let rows: [[[i64; 5]; 2]; 5] = [
        [[1, 0, 1, 0, 1], [0, 1, 1, 1, 1]],
        [[1, 0, 1, 1, 1], [0, 1, 1, 0, 1]],
        [[1, 0, 1, 1, 0], [0, 1, 1, 0, 1]],
        [[1, 0, 1, 1, 0], [0, 1, 0, 1, 1]],
        [[1, 0, 1, 0, 1], [0, 1, 0, 1, 1]],
    ];
    rows.iter()
        .map(|r| {
            CharMatrix::from_rows(Ring::Z2, &["1", "2", "3", "4", "5"], &[&r[0], &r[1]])
                .expect("reference matrix is well formed")
        })
        .collect()
}

/// Which of the two pentagon base patterns the family is built on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PentagonBase {
    /// Reduction of an even offset (type 3 pattern).
    A3,
    /// Reduction of an odd offset (type 2 pattern).
    A2,
}

impl PentagonBase {
    fn offset(self) -> i64 {
        match self {
            PentagonBase::A3 => 0,
            PentagonBase::A2 => 1,
        }
    }
}

/// The GF(2) multi-pentagon family: the integer family at the matching
/// offset parity, reduced mod 2.
pub fn real_pentagon_family(
    a: [usize; 5],
    base: PentagonBase,
    n1: &[u8],
    n4: &[u8],
) -> Result<(SimplicialComplex, CharMatrix), CoverError> {
    let spec = PentagonFamilySpec {
        a,
        d: base.offset(),
        n1: n1.iter().map(|&x| (x & 1) as i64).collect(),
        n4: n4.iter().map(|&x| (x & 1) as i64).collect(),
    };
    let (k, lambda) = pentagon_family(&spec)?;
    Ok((k, lambda.mod2_reduce()))
}

/// The type (the reference-class index) of a 2×5 GF(2) matrix over the
/// pentagon, read off its reduced form.
pub fn classify_real_pentagon(lambda: &CharMatrix) -> Option<usize> {
    let canon = lambda.dj_canonical();
    pentagon_reference_classes()
        .iter()
        .position(|a| {
            a.labels().len() == canon.labels().len() && a.as_gf2_rows() == canon.as_gf2_rows()
        })
        .map(|i| i + 1)
}

/// Closed-form projection type of the GF(2) family at a section: the base
/// pattern shifted by the selected unknown entries (same selection rule as
/// the integer family: a group's last copy selects nothing, copy `b < aᵢ`
/// selects the entry after it).
pub fn real_projection_type_closed_form(
    base: PentagonBase,
    n1: &[u8],
    n4: &[u8],
    b: &[usize; 5],
) -> usize {
    let pick = |n: &[u8], b: usize| (n[b % n.len()] & 1) as i64;
    if (base.offset() + pick(n1, b[0]) + pick(n4, b[3])) % 2 == 0 {
        3
    } else {
        2
    }
}

/// The two GF(2) characteristic maps over the heptagon-type sphere.
pub fn heptagon_reference_maps() -> Vec<CharMatrix> {
    let labels = ["1", "2", "3", "4", "5", "6", "7"];
    let l1: [[i64; 7]; 4] = [
        [1, 0, 0, 0, 1, 0, 1],
        [0, 1, 0, 0, 0, 1, 1],
        [0, 0, 1, 0, 1, 1, 0],
        [0, 0, 0, 1, 1, 1, 1],
    ];
    let l2: [[i64; 7]; 4] = [
        [1, 0, 0, 0, 1, 1, 1],
        [0, 1, 0, 0, 1, 0, 1],
        [0, 0, 1, 0, 0, 1, 1],
        [0, 0, 0, 1, 1, 1, 0],
    ];
    [l1, l2]
        .iter()
        .map(|rows| {
            let row_refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            CharMatrix::from_rows(Ring::Z2, &labels, &row_refs)
                .expect("reference map is well formed")
        })
        .collect()
}

/// The heptagon-type polytope census for multiplicities `j`: the iterated
/// canonical extensions of the two base maps, cross-checked against the full
/// enumeration by the caller.
pub fn heptagon_covers(
    j: &[u32; 7],
) -> Result<(SimplicialComplex, Vec<CharMatrix>), CoverError> {
    let base = crate::picard3::heptagon_facet_complex();
    let wedged = base.k_of_j(j)?;
    let maps = heptagon_reference_maps()
        .iter()
        .map(|l| l.m_of_j(&base, j))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((wedged, maps))
}

/// All members of the GF(2) pentagon family over every rotation, expressed
/// over the common wedged complex; distinct reduced forms are distinct
/// classes, so the length equals the closed-form count.
pub fn real_pentagon_family_classes(
    a: &[usize; 5],
) -> Result<Vec<CharMatrix>, CoverError> {
    let rep = |x: i64| ((x - 1).rem_euclid(5)) as u32 + 1;
    let mut seen: Vec<CharMatrix> = Vec::new();
    for r in 0..5i64 {
        let rot_a = [
            a[rep(1 + r) as usize - 1],
            a[rep(2 + r) as usize - 1],
            a[rep(3 + r) as usize - 1],
            a[rep(4 + r) as usize - 1],
            a[rep(5 + r) as usize - 1],
        ];
        // Relabel base g back to g + r so every member lives over the same
        // complex.
        let map: BTreeMap<VertexLabel, VertexLabel> = (1..=5i64)
            .flat_map(|g| {
                let from_base = g;
                let to_base = rep(g + r);
                (1..=rot_a[g as usize - 1] as u32).map(move |c| {
                    let mk = |base: u32, copy: u32| {
                        VertexLabel::parse(&if copy == 1 {
                            base.to_string()
                        } else {
                            format!("{base}_{copy}")
                        })
                        .expect("numeric label")
                    };
                    (mk(from_base as u32, c), mk(to_base, c))
                })
            })
            .collect();
        for base in [PentagonBase::A3, PentagonBase::A2] {
            for n1_bits in 0..1u32 << (rot_a[0] - 1) {
                for n4_bits in 0..1u32 << (rot_a[3] - 1) {
                    let unpack = |bits: u32, len: usize| -> Vec<u8> {
                        (0..len)
                            .map(|i| {
                                if i == 0 {
                                    0
                                } else {
                                    (bits >> (i - 1) & 1) as u8
                                }
                            })
                            .collect()
                    };
                    let (_, lambda) = real_pentagon_family(
                        rot_a,
                        base,
                        &unpack(n1_bits, rot_a[0]),
                        &unpack(n4_bits, rot_a[3]),
                    )?;
                    let member = lambda.relabel(&map)?.dj_canonical();
                    if !seen.iter().any(|m| m.as_gf2_rows() == member.as_gf2_rows()) {
                        seen.push(member);
                    }
                }
            }
        }
    }
    Ok(seen)
}

/// The multi-pentagon polytope's dual complex under its circular signature,
/// `P₅(a₁..a₅) = [a₁,a₃,a₅,a₂,a₄]`.
pub fn pentagon_polytope_complex(a: &[u32; 5]) -> Result<SimplicialComplex, CoverError> {
    Ok(SimplicialComplex::from_gale(&[a[0], a[2], a[4], a[1], a[3]])?)
}

/// The dual complex of a product of three simplices: the join of three
/// simplex boundaries, with groups labeled `1*, 2*, 3*`.
pub fn cube_family_complex(n: &[u32; 3]) -> Result<SimplicialComplex, CoverError> {
    let mut parts = Vec::new();
    for (g, &ng) in n.iter().enumerate() {
        let bases: Vec<String> = (1..=ng + 1)
            .map(|c| format!("{}{}", g + 1, (b'a' + (c - 1) as u8) as char))
            .collect();
        let base_refs: Vec<&str> = bases.iter().map(|s| s.as_str()).collect();
        parts.push(crate::complex::simplex_boundary(&base_refs)?);
    }
    let mut k = parts[0].clone();
    for p in &parts[1..] {
        k = k.join(p)?;
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::cycle;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn census_of(k: &SimplicialComplex) -> Z2Census {
        let input = FaceInput::from_complex_auto(k).unwrap();
        enumerate_small_covers(&input)
    }

    #[test]
    fn pentagon_census_is_the_five_reference_classes() {
        let k = cycle(5);
        let census = census_of(&k);
        assert_eq!(census.count(), 5);
        let mats = census.matrices();
        for a in pentagon_reference_classes() {
            assert!(
                mats.iter().any(|m| m.as_gf2_rows() == a.as_gf2_rows()),
                "missing reference class"
            );
        }
    }

    #[test]
    fn preset_order_census_reproduces_the_nineteen_blocks() {
        let k = SimplicialComplex::from_gale(&[1, 2, 1, 2, 2]).unwrap();
        let order: Vec<VertexLabel> = ["1", "2_1", "3", "4_1", "5_1", "2_2", "4_2", "5_2"]
            .iter()
            .map(|s| VertexLabel::parse(s).unwrap())
            .collect();
        let input = FaceInput::from_complex(&k, &order).unwrap();
        let census = enumerate_small_covers(&input);
        assert_eq!(census.count(), 19);
        let printed: [[[u8; 3]; 5]; 19] = [
            [[0, 1, 1], [1, 0, 0], [1, 1, 0], [0, 1, 0], [0, 0, 1]],
            [[0, 1, 1], [1, 0, 0], [1, 1, 1], [0, 1, 0], [0, 0, 1]],
            [[0, 1, 1], [1, 0, 1], [1, 1, 0], [0, 1, 0], [0, 0, 1]],
            [[0, 1, 1], [1, 0, 1], [1, 1, 1], [0, 1, 0], [0, 0, 1]],
            [[0, 1, 1], [1, 0, 0], [1, 1, 1], [0, 1, 0], [1, 0, 1]],
            [[0, 1, 1], [1, 0, 0], [1, 1, 0], [0, 1, 0], [1, 1, 1]],
            [[0, 1, 1], [1, 0, 0], [1, 1, 1], [1, 1, 0], [0, 0, 1]],
            [[0, 1, 1], [1, 0, 0], [1, 1, 1], [1, 1, 0], [1, 0, 1]],
            [[1, 0, 1], [1, 0, 0], [0, 1, 1], [0, 1, 0], [0, 0, 1]],
            [[1, 0, 1], [1, 1, 0], [0, 1, 1], [0, 1, 0], [0, 0, 1]],
            [[1, 1, 1], [1, 0, 0], [0, 1, 1], [0, 1, 0], [0, 0, 1]],
            [[1, 1, 1], [1, 1, 0], [0, 1, 1], [0, 1, 0], [0, 0, 1]],
            [[1, 1, 1], [1, 0, 0], [0, 1, 1], [0, 1, 0], [1, 0, 1]],
            [[1, 0, 1], [1, 0, 0], [0, 1, 1], [1, 1, 1], [0, 0, 1]],
            [[1, 1, 1], [1, 0, 0], [0, 1, 1], [1, 1, 0], [0, 0, 1]],
            [[1, 1, 1], [1, 0, 0], [0, 1, 1], [1, 1, 0], [1, 0, 1]],
            [[1, 0, 1], [1, 0, 0], [1, 1, 0], [0, 1, 0], [0, 0, 1]],
            [[1, 0, 1], [1, 0, 0], [1, 1, 0], [0, 1, 0], [1, 1, 1]],
            [[1, 0, 1], [1, 0, 0], [1, 1, 0], [1, 1, 1], [0, 0, 1]],
        ];
        // Non-identity block of a member: rows over the last three columns.
        let blocks: Vec<[[u8; 3]; 5]> = census
            .members
            .iter()
            .map(|cols| {
                let mut b = [[0u8; 3]; 5];
                for (j, &col) in cols[5..].iter().enumerate() {
                    for r in 0..5 {
                        b[r][j] = (col >> r & 1) as u8;
                    }
                }
                b
            })
            .collect();
        for p in &printed {
            assert!(blocks.contains(p), "missing printed block {p:?}");
        }
    }

    #[test]
    fn census_is_order_independent_and_identity_prefixed() {
        let k = SimplicialComplex::from_gale(&[2, 1, 1, 1, 1]).unwrap();
        let input = FaceInput::from_complex_auto(&k).unwrap();
        let reference = enumerate_small_covers(&input);
        let full = (1u32 << input.n()) - 1;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let mut order: Vec<u32> = (1..=full).collect();
            order.shuffle(&mut rng);
            let shuffled = enumerate_small_covers_with_order(&input, &order);
            assert_eq!(shuffled.members, reference.members);
        }
        for m in reference.matrices() {
            assert!(m.is_nonsingular(&k).unwrap());
            for (j, l) in input.order().iter().take(input.n()).enumerate() {
                let col = m.column(l).unwrap();
                for (r, e) in col.iter().enumerate() {
                    assert_eq!(*e == 1.into(), r == j);
                }
            }
        }
    }

    #[test]
    fn pentagon_counts_match_the_formula() {
        for a in [[1u32, 1, 1, 1, 1], [2, 1, 1, 1, 1], [1, 2, 2, 2, 1]] {
            let k = pentagon_polytope_complex(&a).unwrap();
            let census = census_of(&k);
            assert_eq!(census.count() as u128, dj_count_pentagon_formula(&a), "{a:?}");
        }
        assert_eq!(dj_count_pentagon_formula(&[1, 2, 2, 2, 1]), 19);
        // Two of the five exponents are a₁+a₄−1 = a₃+a₁−1 = 2 here, so the
        // value is 4+2+4+2+2−5; the census above confirms it independently.
        assert_eq!(dj_count_pentagon_formula(&[2, 1, 1, 1, 1]), 9);
    }

    #[test]
    fn cube_counts_match_the_formula() {
        for n in [[1u32, 1, 1], [2, 1, 1]] {
            let k = cube_family_complex(&n).unwrap();
            let census = census_of(&k);
            assert_eq!(census.count() as u128, dj_count_cube_formula(&n), "{n:?}");
        }
        assert_eq!(dj_count_cube_formula(&[1, 1, 1]), 25);
        assert_eq!(
            dj_count_cube_formula(&[2, 1, 3]),
            dj_count_cube_formula(&[3, 2, 1])
        );
    }

    #[test]
    fn family_classes_count_matches_the_formula() {
        for a in [[1usize, 1, 1, 1, 1], [2, 1, 1, 1, 1], [1, 2, 1, 1, 2]] {
            let classes = real_pentagon_family_classes(&a).unwrap();
            let a32 = a.map(|x| x as u32);
            assert_eq!(
                classes.len() as u128,
                dj_count_pentagon_formula(&a32),
                "{a:?}"
            );
        }
    }

    #[test]
    fn real_family_projection_follows_the_parity_rule() {
        let a = [2usize, 1, 1, 2, 1];
        for base in [PentagonBase::A3, PentagonBase::A2] {
            for n1_tail in 0..2u8 {
                for n4_tail in 0..2u8 {
                    let n1 = [0, n1_tail];
                    let n4 = [0, n4_tail];
                    let (k, lambda) = real_pentagon_family(a, base, &n1, &n4).unwrap();
                    for b1 in 1..=2usize {
                        for b4 in 1..=2usize {
                            let b = [b1, 1, 1, b4, 1];
                            let sigma: Vec<VertexLabel> = a
                                .iter()
                                .enumerate()
                                .flat_map(|(g, &ag)| {
                                    (1..=ag).filter(move |&c| c != b[g]).map(move |c| {
                                        let base_lbl = (g + 1).to_string();
                                        if c == 1 {
                                            VertexLabel::parse(&base_lbl).unwrap()
                                        } else {
                                            VertexLabel::parse(&format!("{base_lbl}_{c}"))
                                                .unwrap()
                                        }
                                    })
                                })
                                .collect();
                            let proj = lambda.project(&k, &sigma).unwrap();
                            let t = classify_real_pentagon(&proj).unwrap();
                            assert_eq!(
                                t,
                                real_projection_type_closed_form(base, &n1, &n4, &b),
                                "base {base:?} n1 {n1:?} n4 {n4:?} b {b:?}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn heptagon_covers_match_the_enumeration() {
        for j in [[1u32; 7], [2, 1, 1, 1, 1, 1, 1]] {
            let (k, maps) = heptagon_covers(&j).unwrap();
            assert_eq!(maps.len(), 2);
            for m in &maps {
                assert!(m.is_nonsingular(&k).unwrap());
            }
            let census = census_of(&k);
            assert_eq!(census.count(), 2);
            let census_canon: Vec<Vec<Vec<u8>>> = census
                .matrices()
                .iter()
                .map(|m| m.dj_canonical().as_gf2_rows())
                .collect();
            for m in &maps {
                assert!(census_canon.contains(&m.dj_canonical().as_gf2_rows()));
            }
        }
    }

    #[test]
    fn heptagon_base_maps_differ_in_more_than_one_row_block() {
        // No single basis row distinguishes the two base maps, so no
        // nontrivial wedge mixes them.
        let maps = heptagon_reference_maps();
        let r1 = maps[0].as_gf2_rows();
        let r2 = maps[1].as_gf2_rows();
        for k in 0..4 {
            let agree_elsewhere = (0..4).filter(|&i| i != k).all(|i| r1[i] == r2[i]);
            assert!(!agree_elsewhere, "row {k} would admit a nontrivial wedge");
        }
    }
}
