//! Syndromes, membership and systematic encoding of whole code arrays.
//!
//! The fast path works on r̃, the array whose column j is A_j · r_j: row b of
//! r̃ must be a word of the row code E_b, and S_{a,b} is exactly the a-th row
//! syndrome of E_b. Encoding runs the same relation backwards, one column at
//! a time, with the row encoders supplying the known part of each r̃ column.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldSpec};
use crate::hermitian::{enumerate_points, CodeArray, CodeParams};
use crate::matrix::Matrix;
use crate::row_codes::{make_ei, ExtendedCyclicCode, RowEncoderState};
use crate::transforms::{ColumnKind, TransformFamily};

/// S_{a,b} for every basis monomial, in basis order.
#[derive(Clone, PartialEq, Eq)]
pub struct SyndromeTable {
    entries: Vec<((usize, usize), Elem)>,
}

impl SyndromeTable {
    pub fn get(&self, a: usize, b: usize) -> Option<Elem> {
        self.entries
            .iter()
            .find(|(key, _)| *key == (a, b))
            .map(|&(_, v)| v)
    }

    pub fn entries(&self) -> &[((usize, usize), Elem)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|(_, v)| v.is_zero())
    }

    pub fn nonzero(&self) -> impl Iterator<Item = &((usize, usize), Elem)> {
        self.entries.iter().filter(|(_, v)| !v.is_zero())
    }
}

impl fmt::Debug for SyndromeTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.entries.iter().map(|(k, v)| (k, v)))
            .finish()
    }
}

/// Reference path: S_{a,b} = Σ_P r_P · x(P)^a · y(P)^b over all q³ points.
pub fn syndromes_direct(params: &CodeParams, r: &CodeArray) -> Result<SyndromeTable> {
    let f = params.field();
    r.check_shape(params.q())?;
    let points = enumerate_points(f)?;
    let entries = params
        .basis()
        .iter()
        .map(|&(a, b)| {
            let s = points
                .iter()
                .zip(r.flat())
                .filter(|(_, v)| !v.is_zero())
                .map(|(p, &v)| {
                    let mono = f.mul(f.pow(p.x, a as u64), f.pow(p.y, b as u64));
                    f.mul(v, mono)
                })
                .sum();
            ((a, b), s)
        })
        .collect();
    Ok(SyndromeTable { entries })
}

/// Result of systematic encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Encoded {
    pub codeword: CodeArray,
    /// Column-transformed array; row i is a word of E_i.
    pub rtilde: CodeArray,
}

/// A Hermitian code together with its column transforms and row codes.
#[derive(Clone, Debug)]
pub struct HermitianCode {
    params: CodeParams,
    transforms: TransformFamily,
    rows: Vec<ExtendedCyclicCode>,
}

impl HermitianCode {
    pub fn new(params: CodeParams) -> Result<Self> {
        let transforms = TransformFamily::new(params.field())?;
        let rows = (0..params.q()).map(|i| make_ei(&params, i)).collect();
        Ok(HermitianCode {
            params,
            transforms,
            rows,
        })
    }

    pub fn params(&self) -> &CodeParams {
        &self.params
    }

    pub fn field(&self) -> &FieldSpec {
        self.params.field()
    }

    pub fn transforms(&self) -> &TransformFamily {
        &self.transforms
    }

    pub fn row_code(&self, i: usize) -> &ExtendedCyclicCode {
        &self.rows[i]
    }

    pub fn row_codes(&self) -> &[ExtendedCyclicCode] {
        &self.rows
    }

    /// r̃ with columns A_j · r_j (A′ on the last column).
    pub fn transform_columns(&self, r: &CodeArray) -> Result<CodeArray> {
        let f = self.field();
        r.check_shape(self.params.q())?;
        let q2 = f.q2();
        let mut out = CodeArray::zeros(f.q());
        for j in 0..q2 {
            let m = self.transforms.forward(ColumnKind::for_column(j, q2));
            out.set_column(j, &m.mul_vec(f, &r.column(j)));
        }
        Ok(out)
    }

    pub fn syndromes_direct(&self, r: &CodeArray) -> Result<SyndromeTable> {
        syndromes_direct(&self.params, r)
    }

    /// S_{a,b} read off the row syndromes of r̃.
    pub fn syndromes_fast(&self, r: &CodeArray) -> Result<SyndromeTable> {
        let f = self.field();
        let rt = self.transform_columns(r)?;
        let mut entries = Vec::with_capacity(self.params.basis().len());
        for (b, code) in self.rows.iter().enumerate() {
            let syn = code.row_syndromes(f, rt.row(b))?;
            entries.extend(syn.into_iter().enumerate().map(|(a, s)| ((a, b), s)));
        }
        Ok(SyndromeTable { entries })
    }

    pub fn is_codeword(&self, r: &CodeArray) -> Result<bool> {
        Ok(self.syndromes_fast(r)?.is_zero())
    }

    /// Checks that every row of r̃ lies in its row code.
    pub fn rows_in_row_codes(&self, rtilde: &CodeArray) -> Result<bool> {
        let f = self.field();
        for (i, code) in self.rows.iter().enumerate() {
            if !code.contains(f, rtilde.row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Systematic encoding for a code with a uniform â profile: transform the
    /// info columns, encode every row of r̂, map the columns back.
    ///
    /// `d` is q × (q² − â − 1); its columns become the first columns of the
    /// codeword.
    pub fn encode_uniform(&self, d: &Matrix) -> Result<CodeArray> {
        let p = &self.params;
        if !p.is_uniform() {
            return Err(Error::InvalidParameter(
                "encode_uniform needs a uniform a_hat profile".into(),
            ));
        }
        let f = self.field();
        let (q, q2) = (p.q(), p.q2());
        let width = p.row_dim(0);
        if d.rows() != q || d.cols() != width {
            return Err(Error::ShapeMismatch {
                expected_rows: q,
                expected_cols: width,
                rows: d.rows(),
                cols: d.cols(),
            });
        }
        let r_hat = self.transforms.forward(ColumnKind::A).mul(f, d);
        let mut r_full = CodeArray::zeros(q);
        for (i, code) in self.rows.iter().enumerate() {
            let row = code.encode_row(f, r_hat.row(i))?;
            for (j, v) in row.into_iter().enumerate() {
                r_full.set(i, j, v);
            }
        }
        let mut c = CodeArray::zeros(q);
        for j in 0..q2 {
            let inv = self.transforms.inverse(ColumnKind::for_column(j, q2));
            c.set_column(j, &inv.mul_vec(f, &r_full.column(j)));
        }
        Ok(c)
    }

    /// Systematic encoder: one left-to-right sweep over the columns.
    ///
    /// At column j the top l = q − b̂(j) rows of r̃ are parity of their row
    /// codes and come out of the row encoders; the top b̂(j) entries of the
    /// codeword column are information. The mixed solve fills in the rest,
    /// and the newly fixed r̃ entries are fed to the row encoders that are
    /// still reading information.
    pub fn encode(&self, info: &[Elem]) -> Result<Encoded> {
        let p = &self.params;
        let f = self.field();
        let (q, q2) = (p.q(), p.q2());
        let d = p.info_array(info)?;

        let mut states: Vec<RowEncoderState<'_>> =
            self.rows.iter().map(|code| code.streaming(f)).collect();
        let mut codeword = CodeArray::zeros(q);
        let mut rtilde = CodeArray::zeros(q);

        for j in 0..q2 {
            let kind = ColumnKind::for_column(j, q2);
            let info_rows = p.b_hat()[j];
            let l = q - info_rows;
            let x: Vec<Elem> = (0..info_rows).map(|i| d.get(i, j)).collect();
            let v = states[..l]
                .iter_mut()
                .map(|st| st.pull())
                .collect::<Result<Vec<_>>>()?;
            let solved = self.transforms.solve_mixed(kind, l, &x, &v)?;
            for (st, &u) in states[l..].iter_mut().zip(&solved.right_full[l..]) {
                st.push(u)?;
            }
            codeword.set_column(j, &solved.left_full);
            rtilde.set_column(j, &solved.right_full);
        }
        Ok(Encoded { codeword, rtilde })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermitian::make_code;

    fn code(s: u32, m: usize) -> HermitianCode {
        HermitianCode::new(make_code(FieldSpec::build(s).unwrap(), m).unwrap()).unwrap()
    }

    fn pseudo_random_array(q: usize, seed: u64, q2: usize) -> CodeArray {
        let mut state = seed
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        let data = (0..q * q2)
            .map(|_| {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                Elem(((state >> 33) % q2 as u64) as u16)
            })
            .collect();
        CodeArray::from_flat(q, data).unwrap()
    }

    #[test]
    fn zero_array_has_zero_syndromes() {
        let c = code(1, 4);
        let z = CodeArray::zeros(2);
        assert!(c.syndromes_direct(&z).unwrap().is_zero());
        assert!(c.syndromes_fast(&z).unwrap().is_zero());
        assert!(c.is_codeword(&z).unwrap());
    }

    #[test]
    fn point_indicator_gives_monomial_values() {
        let c = code(2, 19);
        let f = c.field();
        let pts = enumerate_points(f).unwrap();
        for idx in [0usize, 17, 15, 63, 50] {
            let mut r = CodeArray::zeros(4);
            r.set(idx / 16, idx % 16, Elem::ONE);
            let direct = c.syndromes_direct(&r).unwrap();
            let fast = c.syndromes_fast(&r).unwrap();
            assert_eq!(direct, fast);
            for &((a, b), s) in direct.entries() {
                let p = pts[idx];
                assert_eq!(s, f.mul(f.pow(p.x, a as u64), f.pow(p.y, b as u64)));
            }
        }
    }

    #[test]
    fn fast_matches_direct_on_arbitrary_arrays() {
        for (s, m) in [(1, 4), (2, 19), (2, 23)] {
            let c = code(s, m);
            let q = c.params().q();
            for seed in 0..20 {
                let r = pseudo_random_array(q, seed, q * q);
                assert_eq!(
                    c.syndromes_direct(&r).unwrap(),
                    c.syndromes_fast(&r).unwrap()
                );
            }
        }
    }

    #[test]
    fn zero_info_encodes_to_zero() {
        let c = code(2, 19);
        let out = c.encode(&vec![Elem::ZERO; c.params().k()]).unwrap();
        assert_eq!(out.codeword, CodeArray::zeros(4));
        assert_eq!(out.rtilde, CodeArray::zeros(4));
    }

    #[test]
    fn encode_output_is_systematic_codeword() {
        for (s, m) in [(1, 4), (2, 19), (2, 23), (3, 64)] {
            let c = code(s, m);
            let p = c.params();
            let f = c.field();
            let info: Vec<Elem> = (0..p.k()).map(|t| f.eps_pow((t * 7 + 3) as i64)).collect();
            let out = c.encode(&info).unwrap();
            assert_eq!(p.read_info(&out.codeword), info);
            assert!(c.is_codeword(&out.codeword).unwrap());
            assert!(c.syndromes_direct(&out.codeword).unwrap().is_zero());
            assert!(c.rows_in_row_codes(&out.rtilde).unwrap());
            assert_eq!(c.transform_columns(&out.codeword).unwrap(), out.rtilde);
        }
    }

    #[test]
    fn streamed_rows_match_reinvoked_row_encoder() {
        // Re-running φ_i on the finished info prefix reproduces each r̃ row.
        let c = code(2, 23);
        let f = c.field();
        let info: Vec<Elem> = (0..c.params().k())
            .map(|t| Elem((t * 5 % 16) as u16))
            .collect();
        let out = c.encode(&info).unwrap();
        for (i, e) in c.row_codes().iter().enumerate() {
            let row = out.rtilde.row(i);
            assert_eq!(e.encode_row(f, &row[..e.dim()]).unwrap(), row);
        }
    }

    #[test]
    fn single_symbol_corruption_is_detected() {
        let c = code(2, 19);
        let info: Vec<Elem> = (0..c.params().k()).map(|t| Elem((t % 16) as u16)).collect();
        let mut word = c.encode(&info).unwrap().codeword;
        let old = word.get(2, 9);
        word.set(2, 9, old + Elem(5));
        assert!(!c.is_codeword(&word).unwrap());
    }

    #[test]
    fn uniform_encoder() {
        let f = FieldSpec::build(1).unwrap();
        let c = HermitianCode::new(CodeParams::uniform(f, 2).unwrap()).unwrap();
        let zero = Matrix::zeros(2, 1);
        assert_eq!(c.encode_uniform(&zero).unwrap(), CodeArray::zeros(2));
        for a in 0..4u16 {
            for b in 0..4u16 {
                let d = Matrix::from_rows(vec![vec![Elem(a)], vec![Elem(b)]]);
                let out = c.encode_uniform(&d).unwrap();
                assert_eq!(out.column(0), vec![Elem(a), Elem(b)]);
                let syn = c.syndromes_direct(&out).unwrap();
                assert_eq!(syn.entries().len(), 6);
                assert!(syn.is_zero());
            }
        }
        assert!(code(1, 4).encode_uniform(&zero).is_err());
    }

    #[test]
    fn length_and_shape_errors() {
        let c = code(1, 4);
        assert!(matches!(
            c.encode(&[Elem::ZERO; 3]),
            Err(Error::LengthMismatch { .. })
        ));
        let wrong = CodeArray::zeros(4);
        assert!(c.syndromes_fast(&wrong).is_err());
        assert!(c.syndromes_direct(&wrong).is_err());
    }
}
