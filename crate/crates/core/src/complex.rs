//! Abstract simplicial complexes on labeled vertices, with the wedge
//! operation, multiplicity expansion, joins, links, and construction from a
//! cyclic-polytope-style multiplicity signature.
//!
//! Faces are stored as bitmasks over the sorted vertex list, so all
//! set-theoretic operations are exact and fast for the intended desk-scale
//! sizes (at most a few dozen vertices).

use crate::label::VertexLabel;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// Largest supported vertex count.  Faces are stored in `u64` bitmasks and
/// several operations enumerate all subsets of the vertex set.
pub const MAX_VERTICES: usize = 24;

/// Errors arising while building or transforming complexes.
#[derive(Debug, Error)]
pub enum ComplexError {
    #[error("duplicate vertex label {0}")]
    DuplicateVertex(VertexLabel),
    #[error("facet index {0} out of range (have {1} vertices)")]
    FacetIndexOutOfRange(usize, usize),
    #[error("vertex {0} lies in no facet")]
    DanglingVertex(VertexLabel),
    #[error("label {0} is not a vertex of the complex")]
    NotAVertex(VertexLabel),
    #[error("vertex label {0} occurs in both join factors")]
    LabelCollision(VertexLabel),
    #[error("too many vertices ({0}); at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("multiplicity vector has length {0}, expected one entry per vertex ({1})")]
    MultiplicityLength(usize, usize),
    #[error("multiplicity entries must be positive")]
    ZeroMultiplicity,
    #[error("signature must have odd length at least 5 with positive entries")]
    BadSignature,
    #[error("relabeling map must be injective on the base names present")]
    BadRelabeling,
    #[error("empty complex not supported here")]
    Empty,
}

/// A finite abstract simplicial complex with labeled vertices.
///
/// Invariants maintained by every constructor:
/// * vertices are distinct and sorted canonically,
/// * every vertex lies in some facet (no dangling vertices),
/// * the stored facets are exactly the maximal faces, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<VertexLabel>,
    /// Facets as bitmasks over `vertices`; sorted, pairwise incomparable.
    facets: Vec<u64>,
}

/// JSON wire form of a complex: labeled vertices plus facets as sorted index
/// lists into the vertex array.
#[derive(Serialize, Deserialize)]
struct ComplexJson {
    vertices: Vec<(String, u32)>,
    facets: Vec<Vec<usize>>,
}

fn mask_of(indices: &[usize]) -> u64 {
    indices.iter().fold(0u64, |m, &i| m | (1u64 << i))
}

fn indices_of(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

impl SimplicialComplex {
    /// Builds a complex from a vertex list and facets given as index lists
    /// into that list.  Vertices are re-sorted canonically and facet indices
    /// remapped; non-maximal input faces are dropped.
    pub fn new(
        vertices: Vec<VertexLabel>,
        facets: Vec<Vec<usize>>,
    ) -> Result<Self, ComplexError> {
        if vertices.len() > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices(vertices.len()));
        }
        if vertices.is_empty() {
            return Err(ComplexError::Empty);
        }
        let mut sorted: Vec<VertexLabel> = vertices.clone();
        sorted.sort();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(ComplexError::DuplicateVertex(w[0].clone()));
            }
        }
        // Position of each input vertex in the sorted order.
        let perm: Vec<usize> = vertices
            .iter()
            .map(|v| sorted.binary_search(v).expect("vertex present"))
            .collect();
        let mut masks: Vec<u64> = Vec::new();
        for f in &facets {
            let mut m = 0u64;
            for &i in f {
                if i >= vertices.len() {
                    return Err(ComplexError::FacetIndexOutOfRange(i, vertices.len()));
                }
                m |= 1u64 << perm[i];
            }
            masks.push(m);
        }
        let masks = prune_non_maximal(masks);
        let covered = masks.iter().fold(0u64, |a, &m| a | m);
        for (i, v) in sorted.iter().enumerate() {
            if covered >> i & 1 == 0 {
                return Err(ComplexError::DanglingVertex(v.clone()));
            }
        }
        Ok(SimplicialComplex {
            vertices: sorted,
            facets: masks,
        })
    }

    /// Builds a complex directly from facets given as label lists.
    pub fn from_facet_labels(facets: &[Vec<VertexLabel>]) -> Result<Self, ComplexError> {
        let mut vs: BTreeSet<VertexLabel> = BTreeSet::new();
        for f in facets {
            vs.extend(f.iter().cloned());
        }
        let vertices: Vec<VertexLabel> = vs.into_iter().collect();
        let idx: BTreeMap<&VertexLabel, usize> =
            vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let facets = facets
            .iter()
            .map(|f| f.iter().map(|v| idx[v]).collect())
            .collect();
        SimplicialComplex::new(vertices, facets)
    }

    /// Builds the complex whose faces are exactly the subsets of the vertex
    /// set containing none of the given minimal non-faces.
    pub fn from_min_non_faces(
        vertices: Vec<VertexLabel>,
        non_faces: &[Vec<VertexLabel>],
    ) -> Result<Self, ComplexError> {
        if vertices.len() > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices(vertices.len()));
        }
        let mut sorted = vertices;
        sorted.sort();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(ComplexError::DuplicateVertex(w[0].clone()));
            }
        }
        let mut nf_masks: Vec<u64> = Vec::new();
        for nf in non_faces {
            let mut m = 0u64;
            for v in nf {
                let i = sorted
                    .binary_search(v)
                    .map_err(|_| ComplexError::NotAVertex(v.clone()))?;
                m |= 1u64 << i;
            }
            nf_masks.push(m);
        }
        let n = sorted.len();
        let mut facets: Vec<u64> = Vec::new();
        for mask in 0..(1u64 << n) {
            if nf_masks.iter().any(|&nf| nf & mask == nf) {
                continue;
            }
            facets.push(mask);
        }
        let facets = prune_non_maximal(facets);
        SimplicialComplex {
            vertices: sorted,
            facets,
        }
        .validated()
    }

    fn validated(self) -> Result<Self, ComplexError> {
        let covered = self.facets.iter().fold(0u64, |a, &m| a | m);
        for (i, v) in self.vertices.iter().enumerate() {
            if covered >> i & 1 == 0 {
                return Err(ComplexError::DanglingVertex(v.clone()));
            }
        }
        Ok(self)
    }

    /// The sorted vertex labels.
    pub fn vertices(&self) -> &[VertexLabel] {
        &self.vertices
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Index of a label in the sorted vertex list.
    pub fn vertex_index(&self, v: &VertexLabel) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    /// Facets as sorted index lists.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&m| indices_of(m)).collect()
    }

    /// Facets as bitmasks over the vertex list.
    pub fn facet_masks(&self) -> &[u64] {
        &self.facets
    }

    /// Facets as label lists.
    pub fn facet_labels(&self) -> Vec<Vec<VertexLabel>> {
        self.facets()
            .into_iter()
            .map(|f| f.into_iter().map(|i| self.vertices[i].clone()).collect())
            .collect()
    }

    /// Dimension: one less than the largest facet size.
    pub fn dim(&self) -> i64 {
        self.facets
            .iter()
            .map(|m| m.count_ones() as i64 - 1)
            .max()
            .unwrap_or(-1)
    }

    /// Whether all facets have the same size.
    pub fn is_pure(&self) -> bool {
        let mut sizes = self.facets.iter().map(|m| m.count_ones());
        match sizes.next() {
            None => true,
            Some(s) => sizes.all(|t| t == s),
        }
    }

    /// Whether the given index set is a face.
    pub fn contains_face(&self, face: &[usize]) -> bool {
        let m = mask_of(face);
        self.facets.iter().any(|&f| f & m == m)
    }

    /// All nonempty faces as bitmasks, in ascending mask order.
    pub fn face_masks(&self) -> Vec<u64> {
        let mut out: BTreeSet<u64> = BTreeSet::new();
        for &f in &self.facets {
            // Enumerate the subsets of f via the standard submask walk.
            let mut s = f;
            loop {
                if s != 0 {
                    out.insert(s);
                }
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        out.into_iter().collect()
    }

    /// All nonempty faces as sorted index lists.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        self.face_masks().into_iter().map(indices_of).collect()
    }

    /// The minimal non-faces: inclusion-minimal vertex sets that are not
    /// faces.  For the 5-cycle `1-2-3-4-5` these are the five anti-edges
    /// `13, 14, 24, 25, 35`.
    pub fn minimal_non_faces(&self) -> Vec<Vec<VertexLabel>> {
        let n = self.vertices.len();
        let faces: BTreeSet<u64> = self.face_masks().into_iter().collect();
        let is_face = |m: u64| m == 0 || faces.contains(&m);
        let mut out: Vec<u64> = Vec::new();
        for mask in 1..(1u64 << n) {
            if is_face(mask) {
                continue;
            }
            // Minimal iff all maximal proper subsets are faces.
            let minimal = (0..n)
                .filter(|&i| mask >> i & 1 == 1)
                .all(|i| is_face(mask & !(1u64 << i)));
            if minimal {
                out.push(mask);
            }
        }
        out.sort_by_key(|&m| (m.count_ones(), indices_of(m)));
        out.into_iter()
            .map(|m| {
                indices_of(m)
                    .into_iter()
                    .map(|i| self.vertices[i].clone())
                    .collect()
            })
            .collect()
    }

    /// The link of vertex `v`: all faces `σ` with `v ∉ σ` and `σ ∪ {v}` a
    /// face, as a complex on the remaining vertices.
    pub fn link(&self, v: &VertexLabel) -> Result<Self, ComplexError> {
        let vi = self
            .vertex_index(v)
            .ok_or_else(|| ComplexError::NotAVertex(v.clone()))?;
        let bit = 1u64 << vi;
        let cands: Vec<u64> = self
            .facets
            .iter()
            .filter(|&&f| f & bit != 0)
            .map(|&f| f & !bit)
            .collect();
        self.subcomplex_from_masks(cands)
    }

    /// The link of a face: all faces disjoint from it whose union with it is
    /// again a face.
    pub fn link_face(&self, face: &[VertexLabel]) -> Result<Self, ComplexError> {
        let mut mask = 0u64;
        for v in face {
            let i = self
                .vertex_index(v)
                .ok_or_else(|| ComplexError::NotAVertex(v.clone()))?;
            mask |= 1u64 << i;
        }
        let cands: Vec<u64> = self
            .facets
            .iter()
            .filter(|&&f| f & mask == mask)
            .map(|&f| f & !mask)
            .collect();
        if cands.is_empty() {
            return Err(ComplexError::Empty);
        }
        self.subcomplex_from_masks(cands)
    }

    /// The induced subcomplex on all vertices except `v`.
    pub fn remove_vertex(&self, v: &VertexLabel) -> Result<Self, ComplexError> {
        let vi = self
            .vertex_index(v)
            .ok_or_else(|| ComplexError::NotAVertex(v.clone()))?;
        let bit = 1u64 << vi;
        let cands: Vec<u64> = self.facets.iter().map(|&f| f & !bit).collect();
        self.subcomplex_from_masks(cands)
    }

    /// Reassembles a complex on `self.vertices` minus `v` from candidate
    /// facet masks (which must not involve `v`).
    fn subcomplex_from_masks(&self, cands: Vec<u64>) -> Result<Self, ComplexError> {
        let facets = prune_non_maximal(cands);
        let mut kept: Vec<usize> = Vec::new();
        let covered = facets.iter().fold(0u64, |a, &m| a | m);
        for i in 0..self.vertices.len() {
            if covered >> i & 1 == 1 {
                kept.push(i);
            }
        }
        if kept.is_empty() {
            return Err(ComplexError::Empty);
        }
        let vertices: Vec<VertexLabel> = kept.iter().map(|&i| self.vertices[i].clone()).collect();
        let remap: BTreeMap<usize, usize> =
            kept.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let facets = facets
            .into_iter()
            .map(|m| {
                indices_of(m)
                    .into_iter()
                    .fold(0u64, |acc, old| acc | (1u64 << remap[&old]))
            })
            .collect();
        Ok(SimplicialComplex { vertices, facets })
    }

    /// The join `K ⋆ L`; the vertex label sets must be disjoint.
    pub fn join(&self, other: &Self) -> Result<Self, ComplexError> {
        for v in &other.vertices {
            if self.vertex_index(v).is_some() {
                return Err(ComplexError::LabelCollision(v.clone()));
            }
        }
        let mut facets: Vec<Vec<VertexLabel>> = Vec::new();
        for f in self.facet_labels() {
            for g in other.facet_labels() {
                let mut h = f.clone();
                h.extend(g.iter().cloned());
                facets.push(h);
            }
        }
        SimplicialComplex::from_facet_labels(&facets)
    }

    /// The simplicial wedge at vertex `v`:
    /// `(I ⋆ link v) ∪ (∂I ⋆ (K ∖ v))` where `I` is an edge on two fresh
    /// copies of `v`.  The wedged vertex keeps its label as the first copy;
    /// the second copy receives the next unused copy index of the same base.
    pub fn wedge(&self, v: &VertexLabel) -> Result<Self, ComplexError> {
        if self.vertex_index(v).is_none() {
            return Err(ComplexError::NotAVertex(v.clone()));
        }
        let max_copy = self
            .vertices
            .iter()
            .filter(|w| w.base == v.base)
            .map(|w| w.copy)
            .max()
            .unwrap();
        let v1 = v.clone();
        let v2 = VertexLabel::new(v.base.clone(), max_copy + 1);
        let mut facets: Vec<Vec<VertexLabel>> = Vec::new();
        // I ⋆ link v: both copies joined to each link facet.  When v only
        // appears as an isolated facet the link is empty and the wedge still
        // contains the bare edge on the two copies.
        let link_facets = match self.link(v) {
            Ok(link) => link.facet_labels(),
            Err(ComplexError::Empty) => vec![Vec::new()],
            Err(e) => return Err(e),
        };
        for f in link_facets {
            let mut h = vec![v1.clone(), v2.clone()];
            h.extend(f);
            facets.push(h);
        }
        // ∂I ⋆ (K ∖ v): each single copy joined to each facet avoiding v.
        // An empty deletion contributes only faces of the edge above.
        match self.remove_vertex(v) {
            Ok(del) => {
                for f in del.facet_labels() {
                    for c in [&v1, &v2] {
                        let mut h = vec![c.clone()];
                        h.extend(f.iter().cloned());
                        facets.push(h);
                    }
                }
            }
            Err(ComplexError::Empty) => {}
            Err(e) => return Err(e),
        }
        SimplicialComplex::from_facet_labels(&facets)
    }

    /// Iterated wedge `K(J)`: entry `J[i]` is the total number of copies the
    /// `i`-th vertex (in sorted order) should end up with.  The result does
    /// not depend on the order of the individual wedges.
    pub fn k_of_j(&self, j: &[u32]) -> Result<Self, ComplexError> {
        if j.len() != self.vertices.len() {
            return Err(ComplexError::MultiplicityLength(
                j.len(),
                self.vertices.len(),
            ));
        }
        if j.iter().any(|&x| x == 0) {
            return Err(ComplexError::ZeroMultiplicity);
        }
        let targets: Vec<(VertexLabel, u32)> = self
            .vertices
            .iter()
            .cloned()
            .zip(j.iter().copied())
            .collect();
        let mut k = self.clone();
        for (v, mult) in targets {
            for _ in 1..mult {
                k = k.wedge(&v)?;
            }
        }
        Ok(k)
    }

    /// The boundary-of-dual complex of the polygon-signature polytope
    /// `[a_1, …, a_{2k-1}]`: vertex bases are the positions `1..2k-1`, each
    /// with the given number of copies, and the minimal non-faces are the
    /// unions of `k-1` cyclically consecutive position blocks.
    ///
    /// For the signature `(1,1,1,1,1)` this yields the 5-cycle in pentagram
    /// position order (edges `{p, p+2}`); for `(2,2,2)` the octahedron, whose
    /// minimal non-faces are the three same-position pairs.
    pub fn from_gale(a: &[u32]) -> Result<Self, ComplexError> {
        let len = a.len();
        if len < 3 || len % 2 == 0 || a.iter().any(|&x| x == 0) {
            return Err(ComplexError::BadSignature);
        }
        let k = (len + 1) / 2;
        let m: usize = a.iter().map(|&x| x as usize).sum();
        if m > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices(m));
        }
        let block = |p: usize| -> Vec<VertexLabel> {
            (1..=a[p]).map(|c| VertexLabel::new((p + 1).to_string(), c)).collect()
        };
        let mut vertices: Vec<VertexLabel> = Vec::new();
        for p in 0..len {
            vertices.extend(block(p));
        }
        let mut non_faces: Vec<Vec<VertexLabel>> = Vec::new();
        for start in 0..len {
            let mut nf: Vec<VertexLabel> = Vec::new();
            for off in 0..(k - 1) {
                nf.extend(block((start + off) % len));
            }
            non_faces.push(nf);
        }
        SimplicialComplex::from_min_non_faces(vertices, &non_faces)
    }

    /// Renames vertex bases through the given map (bases not present in the
    /// map are kept).  The map must stay injective on the bases involved.
    pub fn relabel(&self, map: &BTreeMap<String, String>) -> Result<Self, ComplexError> {
        let new_base = |b: &String| -> String { map.get(b).cloned().unwrap_or_else(|| b.clone()) };
        let bases: BTreeSet<String> = self.vertices.iter().map(|v| v.base.clone()).collect();
        let images: BTreeSet<String> = bases.iter().map(new_base).collect();
        if images.len() != bases.len() {
            return Err(ComplexError::BadRelabeling);
        }
        let facets: Vec<Vec<VertexLabel>> = self
            .facet_labels()
            .into_iter()
            .map(|f| {
                f.into_iter()
                    .map(|v| VertexLabel::new(new_base(&v.base), v.copy))
                    .collect()
            })
            .collect();
        SimplicialComplex::from_facet_labels(&facets)
    }

    /// Serializes to the canonical JSON form.
    pub fn to_json(&self) -> String {
        let j = ComplexJson {
            vertices: self
                .vertices
                .iter()
                .map(|v| (v.base.clone(), v.copy))
                .collect(),
            facets: self.facets(),
        };
        serde_json::to_string_pretty(&j).expect("complex serializes")
    }

    /// Parses the canonical JSON form.
    pub fn from_json(s: &str) -> Result<Self, ComplexError> {
        let j: ComplexJson =
            serde_json::from_str(s).map_err(|_| ComplexError::BadSignature)?;
        let vertices = j
            .vertices
            .into_iter()
            .map(|(b, c)| VertexLabel::new(b, c))
            .collect();
        SimplicialComplex::new(vertices, j.facets)
    }
}

/// Deduplicates and removes masks contained in another mask.
fn prune_non_maximal(mut masks: Vec<u64>) -> Vec<u64> {
    masks.sort_unstable();
    masks.dedup();
    let kept: Vec<u64> = masks
        .iter()
        .filter(|&&m| {
            m != 0 && !masks.iter().any(|&other| other != m && other & m == m)
        })
        .copied()
        .collect();
    kept
}

/// The boundary of the `n`-simplex on copy-1 vertices with the given bases.
pub fn simplex_boundary(bases: &[&str]) -> Result<SimplicialComplex, ComplexError> {
    let verts: Vec<VertexLabel> = bases.iter().map(|b| VertexLabel::simple(*b)).collect();
    let mut facets = Vec::new();
    for skip in 0..verts.len() {
        facets.push(
            verts
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, v)| v.clone())
                .collect(),
        );
    }
    SimplicialComplex::from_facet_labels(&facets)
}

/// The cycle `1 - 2 - … - n - 1` on copy-1 vertices with numeric bases.
pub fn cycle(n: usize) -> SimplicialComplex {
    let facets: Vec<Vec<VertexLabel>> = (0..n)
        .map(|i| {
            vec![
                VertexLabel::simple((i + 1).to_string()),
                VertexLabel::simple(((i + 1) % n + 1).to_string()),
            ]
        })
        .collect();
    SimplicialComplex::from_facet_labels(&facets).expect("cycle is a valid complex")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> VertexLabel {
        VertexLabel::parse(s).unwrap()
    }

    #[test]
    fn pentagon_minimal_non_faces_are_anti_edges() {
        let k = cycle(5);
        let nf: Vec<Vec<String>> = k
            .minimal_non_faces()
            .iter()
            .map(|f| f.iter().map(|v| v.to_string()).collect())
            .collect();
        let expect: Vec<Vec<String>> = vec![
            vec!["1".into(), "3".into()],
            vec!["1".into(), "4".into()],
            vec!["2".into(), "4".into()],
            vec!["2".into(), "5".into()],
            vec!["3".into(), "5".into()],
        ];
        assert_eq!(nf, expect);
    }

    #[test]
    fn wedge_of_pentagon_matches_known_facets() {
        let k = cycle(5);
        let w = k.wedge(&l("1")).unwrap();
        let mut facets: Vec<Vec<String>> = w
            .facet_labels()
            .iter()
            .map(|f| f.iter().map(|v| v.to_string()).collect())
            .collect();
        facets.sort();
        let mut expect: Vec<Vec<String>> = vec![
            vec!["1", "1_2", "2"],
            vec!["1", "1_2", "5"],
            vec!["1", "2", "3"],
            vec!["1", "3", "4"],
            vec!["1", "4", "5"],
            vec!["1_2", "2", "3"],
            vec!["1_2", "3", "4"],
            vec!["1_2", "4", "5"],
        ]
        .into_iter()
        .map(|f| f.into_iter().map(String::from).collect())
        .collect();
        expect.sort();
        assert_eq!(facets, expect);
    }

    #[test]
    fn wedge_non_vertex_errors() {
        let k = cycle(5);
        assert!(k.wedge(&l("9")).is_err());
    }

    #[test]
    fn pentagon_from_signature_is_pentagram_cycle() {
        let k = SimplicialComplex::from_gale(&[1, 1, 1, 1, 1]).unwrap();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.facets().len(), 5);
        // Pentagram adjacency in position labels: {p, p+2} are the edges.
        assert!(k.contains_face(&[
            k.vertex_index(&l("1")).unwrap(),
            k.vertex_index(&l("3")).unwrap()
        ]));
        assert!(!k.contains_face(&[
            k.vertex_index(&l("1")).unwrap(),
            k.vertex_index(&l("2")).unwrap()
        ]));
    }

    #[test]
    fn octahedron_from_signature() {
        let k = SimplicialComplex::from_gale(&[2, 2, 2]).unwrap();
        assert_eq!(k.facets().len(), 8);
        let nf = k.minimal_non_faces();
        assert_eq!(nf.len(), 3);
        for pair in nf {
            assert_eq!(pair.len(), 2);
            assert_eq!(pair[0].base, pair[1].base);
        }
    }

    #[test]
    fn join_wedge_identity_on_small_complexes() {
        // (K ⋆ L)(J ∪ J') agrees with K(J) ⋆ L(J').
        let k = simplex_boundary(&["1", "2"]).unwrap(); // two points
        let l = simplex_boundary(&["3", "4"]).unwrap();
        let kj = k.k_of_j(&[2, 1]).unwrap();
        let lj = l.k_of_j(&[1, 2]).unwrap();
        let lhs = k.join(&l).unwrap().k_of_j(&[2, 1, 1, 2]).unwrap();
        let rhs = kj.join(&lj).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn json_round_trip() {
        let k = cycle(5).wedge(&l("3")).unwrap();
        let s = k.to_json();
        let back = SimplicialComplex::from_json(&s).unwrap();
        assert_eq!(k, back);
    }
}
