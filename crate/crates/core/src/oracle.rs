//! Brute-force ground truth built from the parity-check matrix H, whose row
//! (a, b) evaluates x^a·y^b at every point. Nothing here goes through the
//! column transforms or the row codes.

use crate::error::{Error, Result};
use crate::gf::Elem;
use crate::hermitian::{enumerate_points, CodeArray, CodeParams};
use crate::matrix::Matrix;

#[derive(Clone, Debug)]
pub struct ParityCheckMatrix {
    pub basis: Vec<(usize, usize)>,
    pub matrix: Matrix,
}

impl ParityCheckMatrix {
    /// H · flatten(r), in basis order.
    pub fn apply(&self, params: &CodeParams, r: &CodeArray) -> Result<Vec<Elem>> {
        r.check_shape(params.q())?;
        Ok(self.matrix.mul_vec(params.field(), r.flat()))
    }
}

pub fn build_h(params: &CodeParams) -> Result<ParityCheckMatrix> {
    let f = params.field();
    let points = enumerate_points(f)?;
    let basis = params.basis().to_vec();
    let matrix = Matrix::from_fn(basis.len(), points.len(), |row, col| {
        let (a, b) = basis[row];
        let p = points[col];
        f.mul(f.pow(p.x, a as u64), f.pow(p.y, b as u64))
    });
    Ok(ParityCheckMatrix { basis, matrix })
}

/// Flat indices (row·q² + column) of the redundancy positions.
fn redundancy_indices(params: &CodeParams) -> Vec<usize> {
    let q2 = params.q2();
    (0..params.n())
        .filter(|&idx| !params.is_info_position(idx / q2, idx % q2))
        .collect()
}

/// True when the non-information positions carry a nonsingular square
/// block of H, so every info assignment completes to exactly one codeword.
pub fn verify_information_set(params: &CodeParams) -> Result<bool> {
    let h = build_h(params)?;
    let red = redundancy_indices(params);
    if red.len() != h.basis.len() {
        return Ok(false);
    }
    let block = Matrix::from_fn(h.basis.len(), red.len(), |r, c| h.matrix[(r, red[c])]);
    Ok(block.rank(params.field()) == red.len())
}

pub fn complete_systematic(params: &CodeParams, info: &[Elem]) -> Result<CodeArray> {
    let n_red = params.basis().len();
    let order: Vec<usize> = (0..n_red).collect();
    complete_systematic_with_pivots(params, info, &order)
}

/// Dense elimination over GF(q²) on H_red · c_red = H_info · c_info, visiting
/// pivot columns in `pivot_order` (a permutation of the redundancy slots).
pub fn complete_systematic_with_pivots(
    params: &CodeParams,
    info: &[Elem],
    pivot_order: &[usize],
) -> Result<CodeArray> {
    let f = params.field();
    let d = params.info_array(info)?;
    let h = build_h(params)?;
    let red = redundancy_indices(params);
    let rows = h.basis.len();
    if red.len() != rows || pivot_order.len() != rows {
        return Err(Error::Singular("redundancy set is not square"));
    }

    // Known part: H · flatten(d), since d is zero off the info positions.
    let rhs = h.matrix.mul_vec(f, d.flat());
    let mut aug = Matrix::from_fn(rows, rows + 1, |r, c| {
        if c < rows {
            h.matrix[(r, red[c])]
        } else {
            rhs[r]
        }
    });
    let pivots = aug.row_reduce(f, pivot_order);
    if pivots.len() != rows {
        return Err(Error::Singular("information set check failed"));
    }
    let mut word = d.flat().to_vec();
    for (r, &c) in pivots.iter().enumerate() {
        // characteristic 2: moving the known part across is a no-op on sign
        word[red[c]] = aug[(r, rows)];
    }
    CodeArray::from_flat(params.q(), word)
}
