//! The Hermitian curve x^(q+1) = y^q + y over GF(q²), its affine points laid
//! out as a q × q² array, and the parameters of the code C(m).
//!
//! Array convention used everywhere in this crate: row 0 carries β = 0 and
//! row j+1 carries β = γ^j; column i carries α = ε^i for i ≤ q²−2 and the
//! last column carries α = 0.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RationalPoint {
    pub alpha: Elem,
    pub beta: Elem,
    pub x: Elem,
    pub y: Elem,
}

impl RationalPoint {
    /// The point P_{α,β} = (α, α^(q+1)(y₀+β) + δ(α)β).
    pub fn new(field: &FieldSpec, alpha: Elem, beta: Elem) -> Self {
        let q = field.q() as u64;
        let mut y = field.mul(field.pow(alpha, q + 1), field.y0() + beta);
        if alpha.is_zero() {
            y += beta;
        }
        RationalPoint {
            alpha,
            beta,
            x: alpha,
            y,
        }
    }

    pub fn on_curve(&self, field: &FieldSpec) -> bool {
        let q = field.q() as u64;
        field.pow(self.x, q + 1) == field.pow(self.y, q) + self.y
    }
}

/// All q³ affine points in row-major array order (index = row·q² + column).
pub fn enumerate_points(field: &FieldSpec) -> Result<Vec<RationalPoint>> {
    let (q, q2) = (field.q(), field.q2());
    let mut points = Vec::with_capacity(q * q2);
    for row in 0..q {
        let beta = field.beta(row);
        for col in 0..q2 {
            let p = RationalPoint::new(field, field.alpha(col), beta);
            if !p.on_curve(field) {
                return Err(Error::Invariant(format!(
                    "point at row {row}, column {col} is off the curve"
                )));
            }
            points.push(p);
        }
    }
    Ok(points)
}

/// A q × q² array over GF(q²): codewords, received words, r̃ and info arrays.
#[derive(Clone, PartialEq, Eq)]
pub struct CodeArray {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl std::fmt::Debug for CodeArray {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "CodeArray {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl CodeArray {
    pub fn zeros(q: usize) -> Self {
        CodeArray {
            rows: q,
            cols: q * q,
            data: vec![Elem::ZERO; q * q * q],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Elem>>) -> Result<Self> {
        let q = rows.len();
        for r in &rows {
            if r.len() != q * q {
                return Err(Error::ShapeMismatch {
                    expected_rows: q,
                    expected_cols: q * q,
                    rows: q,
                    cols: r.len(),
                });
            }
        }
        Ok(CodeArray {
            rows: q,
            cols: q * q,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Array from the point-order flattening (index = row·q² + column).
    pub fn from_flat(q: usize, data: Vec<Elem>) -> Result<Self> {
        if data.len() != q * q * q {
            return Err(Error::LengthMismatch {
                expected: q * q * q,
                found: data.len(),
            });
        }
        Ok(CodeArray {
            rows: q,
            cols: q * q,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn flat(&self) -> &[Elem] {
        &self.data
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Elem {
        self.data[row * self.cols + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: Elem) {
        self.data[row * self.cols + col] = value;
    }

    pub fn row(&self, row: usize) -> &[Elem] {
        &self.data[row * self.cols..(row + 1) * self.cols]
    }

    pub fn column(&self, col: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self.get(r, col)).collect()
    }

    pub fn set_column(&mut self, col: usize, values: &[Elem]) {
        assert_eq!(values.len(), self.rows);
        for (r, &v) in values.iter().enumerate() {
            self.set(r, col, v);
        }
    }

    pub fn check_shape(&self, q: usize) -> Result<()> {
        if self.rows != q || self.cols != q * q {
            return Err(Error::ShapeMismatch {
                expected_rows: q,
                expected_cols: q * q,
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }
}

/// Parameters of the Hermitian code C(m), or of a code with a uniform â
/// profile when built through [`CodeParams::uniform`].
#[derive(Clone, Debug)]
pub struct CodeParams {
    field: FieldSpec,
    m: Option<usize>,
    a_hat: Vec<usize>,
    info_len: Vec<usize>,
    b_hat: Vec<usize>,
    basis: Vec<(usize, usize)>,
    k: usize,
}

/// Builds C(m), enforcing both the supported m range and the dimension
/// restriction k < q³ − g − q.
pub fn make_code(field: FieldSpec, m: usize) -> Result<CodeParams> {
    let params = make_code_in_range(field, m)?;
    let q = params.q();
    let bound = q * q * q - params.genus() - q;
    if params.k >= bound {
        return Err(Error::InvalidParameter(format!(
            "dimension k={} must be < q^3 - g - q = {bound} (m={m})",
            params.k
        )));
    }
    Ok(params)
}

/// Builds C(m) checking only q²−1 ≤ m ≤ q³−q−1, which is all the encoder
/// needs. This admits the boundary case k = q³ − g − q (m = q² − 1).
pub fn make_code_in_range(field: FieldSpec, m: usize) -> Result<CodeParams> {
    let q = field.q();
    let (lo, hi) = (q * q - 1, q * q * q - q - 1);
    if m < lo {
        return Err(Error::InvalidParameter(format!(
            "m={m} is below (q-1)(q+1) = {lo}"
        )));
    }
    if m > hi {
        return Err(Error::InvalidParameter(format!(
            "m={m} is above q^3 - q - 1 = {hi}"
        )));
    }
    let a_hat = (0..q).map(|b| (m - b * (q + 1)) / q).collect();
    Ok(CodeParams::from_profile(field, Some(m), a_hat))
}

impl CodeParams {
    /// The code Ĉ: S_{a,b} = 0 for a ≤ `a_hat` and every b < q.
    pub fn uniform(field: FieldSpec, a_hat: usize) -> Result<Self> {
        let q = field.q();
        if a_hat > q * q - 2 {
            return Err(Error::InvalidParameter(format!(
                "uniform a_hat={a_hat} exceeds q^2 - 2 = {}",
                q * q - 2
            )));
        }
        Ok(Self::from_profile(field, None, vec![a_hat; q]))
    }

    fn from_profile(field: FieldSpec, m: Option<usize>, a_hat: Vec<usize>) -> Self {
        let q = field.q();
        let q2 = q * q;
        debug_assert!(a_hat.windows(2).all(|w| w[0] >= w[1]));
        let info_len: Vec<usize> = (0..q).map(|i| q2 - a_hat[q - 1 - i] - 1).collect();
        let b_hat: Vec<usize> = (0..q2)
            .map(|j| info_len.iter().filter(|&&len| len > j).count())
            .collect();
        let basis = a_hat
            .iter()
            .enumerate()
            .flat_map(|(b, &top)| (0..=top).map(move |a| (a, b)))
            .collect();
        let k = info_len.iter().sum();
        CodeParams {
            field,
            m,
            a_hat,
            info_len,
            b_hat,
            basis,
            k,
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn q(&self) -> usize {
        self.field.q()
    }

    pub fn q2(&self) -> usize {
        self.field.q2()
    }

    /// Pole-order bound, absent for uniform-profile codes.
    pub fn m(&self) -> Option<usize> {
        self.m
    }

    /// Code length q³.
    pub fn n(&self) -> usize {
        self.q() * self.q2()
    }

    pub fn genus(&self) -> usize {
        self.q() * (self.q() - 1) / 2
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// â(b): largest a with x^a y^b in the basis.
    pub fn a_hat(&self) -> &[usize] {
        &self.a_hat
    }

    /// Information length of row i of the info array d.
    pub fn info_len(&self) -> &[usize] {
        &self.info_len
    }

    /// b̂(j): number of information symbols in column j of d.
    pub fn b_hat(&self) -> &[usize] {
        &self.b_hat
    }

    pub fn basis(&self) -> &[(usize, usize)] {
        &self.basis
    }

    pub fn is_uniform(&self) -> bool {
        self.a_hat.windows(2).all(|w| w[0] == w[1])
    }

    /// Dimension of the row code E_i.
    pub fn row_dim(&self, i: usize) -> usize {
        self.q2() - self.a_hat[i] - 1
    }

    /// Information positions in row-major staircase order.
    pub fn info_positions(&self) -> Vec<(usize, usize)> {
        self.info_len
            .iter()
            .enumerate()
            .flat_map(|(row, &len)| (0..len).map(move |col| (row, col)))
            .collect()
    }

    pub fn is_info_position(&self, row: usize, col: usize) -> bool {
        col < self.info_len[row]
    }

    /// Places an info vector into a q × q² array along the staircase.
    pub fn info_array(&self, info: &[Elem]) -> Result<CodeArray> {
        if info.len() != self.k {
            return Err(Error::LengthMismatch {
                expected: self.k,
                found: info.len(),
            });
        }
        let mut d = CodeArray::zeros(self.q());
        for (&(r, c), &v) in self.info_positions().iter().zip(info) {
            d.set(r, c, v);
        }
        Ok(d)
    }

    /// Reads the info positions back out of an array.
    pub fn read_info(&self, array: &CodeArray) -> Vec<Elem> {
        self.info_positions()
            .iter()
            .map(|&(r, c)| array.get(r, c))
            .collect()
    }

    /// ASCII picture of the info region: `#` info, `.` redundancy.
    pub fn staircase(&self) -> String {
        let mut out = String::new();
        for row in 0..self.q() {
            for col in 0..self.q2() {
                out.push(if self.is_info_position(row, col) {
                    '#'
                } else {
                    '.'
                });
            }
            let _ = writeln!(out, "  row {row}: {} info", self.info_len[row]);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(s: u32) -> FieldSpec {
        FieldSpec::build(s).unwrap()
    }

    #[test]
    fn q2_curve_has_eight_distinct_points() {
        let f = gf(1);
        let pts = enumerate_points(&f).unwrap();
        assert_eq!(pts.len(), 8);
        let mut coords: Vec<(Elem, Elem)> = pts.iter().map(|p| (p.x, p.y)).collect();
        coords.sort();
        coords.dedup();
        assert_eq!(coords.len(), 8);
        // Brute force: x^3 = y^2 + y over GF(4) has exactly these solutions.
        let mut brute: Vec<(Elem, Elem)> = Vec::new();
        for x in f.elements() {
            for y in f.elements() {
                if f.pow(x, 3) == f.mul(y, y) + y {
                    brute.push((x, y));
                }
            }
        }
        brute.sort();
        assert_eq!(brute, coords);
    }

    #[test]
    fn points_distinct_and_on_curve_up_to_q4() {
        for s in 1..=2 {
            let f = gf(s);
            let pts = enumerate_points(&f).unwrap();
            let q = f.q();
            assert_eq!(pts.len(), q * q * q);
            let mut coords: Vec<(Elem, Elem)> = pts.iter().map(|p| (p.x, p.y)).collect();
            coords.sort();
            coords.dedup();
            assert_eq!(coords.len(), q * q * q);
        }
    }

    #[test]
    fn alpha_zero_points() {
        let f = gf(2);
        let pts = enumerate_points(&f).unwrap();
        let last = f.q2() - 1;
        assert_eq!((pts[last].x, pts[last].y), (Elem::ZERO, Elem::ZERO));
        for j in 0..f.q() - 1 {
            let p = pts[(j + 1) * f.q2() + last];
            assert_eq!((p.x, p.y), (Elem::ZERO, f.gamma_pow(j)));
        }
    }

    #[test]
    fn q2_m4_parameters() {
        let p = make_code(gf(1), 4).unwrap();
        assert_eq!(p.basis(), &[(0, 0), (1, 0), (2, 0), (0, 1)]);
        assert_eq!(p.a_hat(), &[2, 0]);
        assert_eq!(p.info_len(), &[3, 1]);
        assert_eq!(p.b_hat(), &[2, 1, 1, 0]);
        assert_eq!((p.k(), p.genus(), p.n()), (4, 1, 8));
        assert_eq!(p.info_positions(), vec![(0, 0), (0, 1), (0, 2), (1, 0)]);
    }

    #[test]
    fn q2_m3_violates_dimension_restriction() {
        let err = make_code(gf(1), 3).unwrap_err();
        assert!(matches!(err, Error::InvalidParameter(ref s) if s.contains("q^3 - g - q")));
        let boundary = make_code_in_range(gf(1), 3).unwrap();
        assert_eq!(boundary.k(), 5);
        assert_eq!(boundary.basis().len(), 3);
    }

    #[test]
    fn out_of_range_m_is_rejected() {
        assert!(make_code(gf(2), 14).is_err());
        assert!(make_code(gf(2), 60).is_err());
        assert!(make_code(gf(2), 59).is_ok());
    }

    #[test]
    fn parameter_invariants_over_all_valid_m() {
        for s in 1..=3 {
            let f = gf(s);
            let q = f.q();
            for m in (q * q - 1)..=(q * q * q - q - 1) {
                let p = make_code_in_range(f.clone(), m).unwrap();
                assert!(p.a_hat().windows(2).all(|w| w[0] >= w[1]));
                assert!(p.info_len().windows(2).all(|w| w[0] >= w[1]));
                assert!(p.b_hat().windows(2).all(|w| w[0] >= w[1]));
                assert_eq!(*p.b_hat().last().unwrap(), 0);
                assert_eq!(p.b_hat().iter().sum::<usize>(), p.k());
                assert_eq!(p.k() + p.basis().len(), p.n());
                let expected_basis: usize = p.a_hat().iter().map(|a| a + 1).sum();
                assert_eq!(p.basis().len(), expected_basis);
                for &(a, b) in p.basis() {
                    assert!(a * q + b * (q + 1) <= m);
                }
                let brute = (0..q)
                    .flat_map(|b| (0..q * q).map(move |a| (a, b)))
                    .filter(|&(a, b)| a * q + b * (q + 1) <= m)
                    .count();
                assert_eq!(brute, p.basis().len());
                // staircase: column info rows form a prefix of length b̂(j)
                for j in 0..q * q {
                    for i in 0..q {
                        assert_eq!(p.is_info_position(i, j), i < p.b_hat()[j]);
                    }
                }
            }
        }
    }

    #[test]
    fn info_round_trip_and_length_check() {
        let p = make_code(gf(2), 19).unwrap();
        let info: Vec<Elem> = (0..p.k()).map(|i| Elem((i % 16) as u16)).collect();
        let d = p.info_array(&info).unwrap();
        assert_eq!(p.read_info(&d), info);
        assert!(p.info_array(&info[1..]).is_err());
        assert!(!p.info_positions().contains(&(p.q() - 1, p.q2() - 1)));
    }

    #[test]
    fn uniform_profile() {
        let p = CodeParams::uniform(gf(1), 2).unwrap();
        assert!(p.is_uniform());
        assert_eq!(p.k(), 2);
        assert_eq!(p.b_hat(), &[2, 0, 0, 0]);
        assert!(CodeParams::uniform(gf(1), 3).is_err());
    }
}
