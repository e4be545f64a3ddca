use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::ClassifyError;
use crate::poset::{bit, bits, Poset};

use super::is_2plus2_free;

/// The strictly increasing chain `∅ = D_0 ⊊ … ⊊ D_m` of strict down-sets of a
/// (2+2)-free poset, with `L_i = {a | D(a) = D_i}` and `K_i = D_{i+1} ∖ D_i`
/// where `D_{m+1}` is the whole ground set. All sets are masks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DownsetChain {
    pub downsets: Vec<u64>,
    pub l: Vec<u64>,
    pub k: Vec<u64>,
}

pub fn downset_chain(p: &Poset) -> Result<DownsetChain, ClassifyError> {
    if !is_2plus2_free(p) {
        return Err(ClassifyError::Not2Plus2Free);
    }
    let mut downsets: Vec<u64> = (0..p.len()).map(|i| p.strict_down_mask(i)).collect();
    downsets.sort_by_key(|d| d.count_ones());
    downsets.dedup();
    let l = downsets
        .iter()
        .map(|&d| (0..p.len()).filter(|&a| p.strict_down_mask(a) == d).fold(0, |acc, a| acc | bit(a)))
        .collect();
    let k = (0..downsets.len())
        .map(|i| downsets.get(i + 1).copied().unwrap_or(p.all_mask()) & !downsets[i])
        .collect();
    Ok(DownsetChain { downsets, l, k })
}

/// Upper-triangular square matrix of pairwise disjoint label sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CompositionMatrix {
    cells: Vec<Vec<Vec<String>>>,
}

impl CompositionMatrix {
    /// Validate and wrap raw cells; every cell is sorted on the way in.
    pub fn new(mut cells: Vec<Vec<Vec<String>>>) -> Result<Self, ClassifyError> {
        let size = cells.len();
        let bad = |m: &str| Err(ClassifyError::InvalidMatrix(m.to_string()));
        if cells.iter().any(|row| row.len() != size) {
            return bad("matrix is not square");
        }
        let mut seen = BTreeSet::new();
        for (i, row) in cells.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                cell.sort();
                if j < i && !cell.is_empty() {
                    return bad(&format!("cell ({i},{j}) lies below the diagonal"));
                }
                for label in cell.iter() {
                    if !seen.insert(label.clone()) {
                        return bad(&format!("label `{label}` appears more than once"));
                    }
                }
            }
        }
        for i in 0..size {
            if cells[i].iter().all(Vec::is_empty) {
                return bad(&format!("row {i} is empty"));
            }
            if cells.iter().all(|row| row[i].is_empty()) {
                return bad(&format!("column {i} is empty"));
            }
        }
        Ok(Self { cells })
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn cell(&self, i: usize, j: usize) -> &[String] {
        &self.cells[i][j]
    }

    pub fn cells(&self) -> &[Vec<Vec<String>>] {
        &self.cells
    }

    pub fn row_union(&self, i: usize) -> Vec<&str> {
        let mut v: Vec<&str> = self.cells[i].iter().flatten().map(String::as_str).collect();
        v.sort_unstable();
        v
    }

    pub fn column_union(&self, j: usize) -> Vec<&str> {
        let mut v: Vec<&str> = self.cells.iter().flat_map(|row| row[j].iter()).map(String::as_str).collect();
        v.sort_unstable();
        v
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, ClassifyError> {
        let cells: Vec<Vec<Vec<String>>> =
            serde_json::from_str(text).map_err(|e| ClassifyError::InvalidMatrix(e.to_string()))?;
        Self::new(cells)
    }
}

/// The matrix with cell `(i, j)` equal to `L_i ∩ K_j`.
pub fn composition_matrix(p: &Poset) -> Result<CompositionMatrix, ClassifyError> {
    let chain = downset_chain(p)?;
    let size = chain.downsets.len();
    let cells = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| p.mask_labels(chain.l[i] & chain.k[j]).into_iter().map(String::from).collect())
                .collect()
        })
        .collect();
    CompositionMatrix::new(cells)
}

/// Inverse of [`composition_matrix`]: an element in row `i` lies above exactly
/// the elements of columns `0..i`. Elements are ordered by label.
pub fn poset_from_composition_matrix(m: &CompositionMatrix) -> Result<Poset, ClassifyError> {
    let mut labels: Vec<&str> = m.cells().iter().flatten().flatten().map(String::as_str).collect();
    labels.sort_unstable();
    let index = |s: &str| labels.binary_search(&s).expect("label collected above");
    let size = m.size();
    let mut columns_below = vec![0u64; size + 1];
    for j in 0..size {
        columns_below[j + 1] = m.column_union(j).iter().fold(columns_below[j], |acc, s| acc | bit(index(s)));
    }
    let mut rel = Vec::new();
    for i in 0..size {
        for a in m.row_union(i) {
            rel.extend(bits(columns_below[i]).map(|b| (b, index(a))));
        }
    }
    Ok(Poset::new(labels.iter().copied(), &rel)?)
}
