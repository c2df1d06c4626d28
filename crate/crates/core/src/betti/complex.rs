use std::collections::BTreeSet;

use crate::error::{Error, Result};

use super::rank::rank;

/// A finite simplicial complex stored as its full face list.
///
/// Faces are sorted vertex tuples. The empty face is present in every
/// non-void complex; the void complex has no faces at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: usize,
    faces: BTreeSet<Vec<usize>>,
}

impl SimplicialComplex {
    /// Validate a full face list: vertices in range and closed under subsets.
    pub fn from_faces(
        vertices: usize,
        faces: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<Self> {
        let mut set = BTreeSet::new();
        for mut f in faces {
            f.sort_unstable();
            if f.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidComplex(format!(
                    "face {f:?} repeats a vertex"
                )));
            }
            if let Some(&v) = f.iter().find(|&&v| v >= vertices) {
                return Err(Error::InvalidComplex(format!("vertex {v} out of range")));
            }
            set.insert(f);
        }
        for f in &set {
            for k in 0..f.len() {
                let mut sub = f.clone();
                sub.remove(k);
                if !set.contains(&sub) {
                    return Err(Error::InvalidComplex(format!(
                        "face {f:?} present but its facet {sub:?} is missing"
                    )));
                }
            }
        }
        Ok(SimplicialComplex {
            vertices,
            faces: set,
        })
    }

    /// The complex generated by the given facets.
    pub fn from_facets(
        vertices: usize,
        facets: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<Self> {
        let mut all = BTreeSet::new();
        for mut f in facets {
            f.sort_unstable();
            f.dedup();
            let k = f.len();
            for mask in 0u64..(1u64 << k) {
                all.insert(
                    (0..k)
                        .filter(|b| mask >> b & 1 == 1)
                        .map(|b| f[b])
                        .collect::<Vec<_>>(),
                );
            }
        }
        Self::from_faces(vertices, all)
    }

    /// Complex whose faces are the given vertex bitmasks; the caller guarantees
    /// closure under subsets.
    pub(crate) fn from_masks_unchecked(
        vertices: usize,
        masks: impl IntoIterator<Item = u64>,
    ) -> Self {
        let faces = masks
            .into_iter()
            .map(|m| (0..vertices).filter(|&v| m >> v & 1 == 1).collect())
            .collect();
        SimplicialComplex { vertices, faces }
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn faces(&self) -> impl Iterator<Item = &[usize]> {
        self.faces.iter().map(Vec::as_slice)
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// `dim H~_k(X; Q)` for `k = -1, 0, 1, ...`; entry `0` is `k = -1`.
    ///
    /// The vector runs up to the top dimension of the complex (empty for the
    /// void complex).
    pub fn reduced_homology_ranks(&self) -> Vec<usize> {
        let Some(top) = self.faces.iter().map(Vec::len).max() else {
            return Vec::new();
        };
        // by_size[s] = faces with s vertices, i.e. dimension s - 1
        let mut by_size: Vec<Vec<&Vec<usize>>> = vec![Vec::new(); top + 1];
        for f in &self.faces {
            by_size[f.len()].push(f);
        }
        // boundary_rank[s]: rank of the map from s-vertex faces to (s-1)-vertex faces
        let mut boundary_rank = vec![0usize; top + 2];
        for s in 1..=top {
            boundary_rank[s] = boundary_matrix_rank(&by_size[s], &by_size[s - 1]);
        }
        (0..=top)
            .map(|s| by_size[s].len() - boundary_rank[s] - boundary_rank[s + 1])
            .collect()
    }
}

/// Rank of the simplicial boundary from `upper` faces to `lower` faces,
/// with the sign `(-1)^k` for deleting the `k`-th vertex.
fn boundary_matrix_rank(upper: &[&Vec<usize>], lower: &[&Vec<usize>]) -> usize {
    if upper.is_empty() || lower.is_empty() {
        return 0;
    }
    let col_of: std::collections::HashMap<&[usize], usize> = lower
        .iter()
        .enumerate()
        .map(|(c, f)| (f.as_slice(), c))
        .collect();
    let rows: Vec<Vec<i64>> = upper
        .iter()
        .map(|f| {
            let mut row = vec![0i64; lower.len()];
            for k in 0..f.len() {
                let mut sub = (*f).clone();
                sub.remove(k);
                let c = col_of[sub.as_slice()];
                row[c] = if k % 2 == 0 { 1 } else { -1 };
            }
            row
        })
        .collect();
    rank(&rows)
}
