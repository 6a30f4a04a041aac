//! Column transforms: the q × q matrices A and A′ that map a column of the
//! codeword array to a column of r̃, their closed-form inverses, the
//! projection matrices D(l), and the mixed known/unknown column solve.
//!
//! Both A and A′ are Vandermonde matrices in disguise: entry (b, c) is
//! node_c^b with nodes y₀ + β_c for A and β_c for A′ (taking 0⁰ = 1). That is
//! what makes every corner block used below nonsingular.

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldSpec};
use crate::matrix::Matrix;
use crate::poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixRole {
    A,
    Aprime,
    Ainv,
    AprimeInv,
    D,
}

/// Which forward matrix a column uses: A′ for the α = 0 column, A elsewhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ColumnKind {
    A,
    Aprime,
}

impl ColumnKind {
    pub fn for_column(col: usize, q2: usize) -> Self {
        if col == q2 - 1 {
            ColumnKind::Aprime
        } else {
            ColumnKind::A
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnMatrix {
    pub role: MatrixRole,
    pub matrix: Matrix,
}

/// Vandermonde nodes of the forward matrix, in column order.
pub fn nodes(field: &FieldSpec, kind: ColumnKind) -> Vec<Elem> {
    (0..field.q())
        .map(|c| match kind {
            ColumnKind::A => field.y0() + field.beta(c),
            ColumnKind::Aprime => field.beta(c),
        })
        .collect()
}

fn vandermonde(field: &FieldSpec, nodes: &[Elem]) -> Matrix {
    let n = nodes.len();
    Matrix::from_fn(n, n, |b, c| field.pow(nodes[c], b as u64))
}

/// A with entry (b, c) = (y₀ + β_c)^b.
pub fn build_a(field: &FieldSpec) -> ColumnMatrix {
    ColumnMatrix {
        role: MatrixRole::A,
        matrix: vandermonde(field, &nodes(field, ColumnKind::A)),
    }
}

/// A′: first column e₀, column j+1 holds the powers of γ^j.
pub fn build_aprime(field: &FieldSpec) -> ColumnMatrix {
    ColumnMatrix {
        role: MatrixRole::Aprime,
        matrix: vandermonde(field, &nodes(field, ColumnKind::Aprime)),
    }
}

/// Closed-form A⁻¹: row μ is (1 + (y₀+μ)^(q−1), (y₀+μ)^(q−2), …, (y₀+μ)⁰).
pub fn build_a_inverse(field: &FieldSpec) -> Result<ColumnMatrix> {
    let q = field.q();
    let ns = nodes(field, ColumnKind::A);
    let inv = Matrix::from_fn(q, q, |r, c| {
        let t = ns[r];
        if c == 0 {
            Elem::ONE + field.pow(t, (q - 1) as u64)
        } else {
            field.pow(t, (q - 1 - c) as u64)
        }
    });
    verify_inverse(field, &build_a(field).matrix, &inv, "A")?;
    Ok(ColumnMatrix {
        role: MatrixRole::Ainv,
        matrix: inv,
    })
}

/// Closed-form A′⁻¹: row 0 is (1, 0, …, 0, 1); row j+1 is
/// (0, (γ^j)^(q−2), …, (γ^j)¹, 1). Signs vanish in characteristic 2.
pub fn build_aprime_inverse(field: &FieldSpec) -> Result<ColumnMatrix> {
    let q = field.q();
    let inv = Matrix::from_fn(q, q, |r, c| {
        if r == 0 {
            if c == 0 || c == q - 1 {
                Elem::ONE
            } else {
                Elem::ZERO
            }
        } else if c == 0 {
            Elem::ZERO
        } else {
            field.pow(field.gamma_pow(r - 1), (q - 1 - c) as u64)
        }
    });
    verify_inverse(field, &build_aprime(field).matrix, &inv, "A'")?;
    Ok(ColumnMatrix {
        role: MatrixRole::AprimeInv,
        matrix: inv,
    })
}

fn verify_inverse(field: &FieldSpec, fwd: &Matrix, inv: &Matrix, name: &str) -> Result<()> {
    if fwd.mul(field, inv).is_identity() && inv.mul(field, fwd).is_identity() {
        Ok(())
    } else {
        Err(Error::Invariant(format!(
            "closed-form inverse of {name} fails the identity check"
        )))
    }
}

/// Nonsingularity of the corner blocks the column solve relies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CornerReport {
    /// A on rows q−l..q−1, columns 0..l−1.
    pub a_lower_left: bool,
    /// A′ on rows 0..l−1, columns q−l..q−1 (the transposed index set).
    pub aprime_upper_right: bool,
    /// A on rows 0..l−1, columns q−l..q−1: the block the solve inverts.
    pub a_upper_right: bool,
}

impl CornerReport {
    pub fn all(&self) -> bool {
        self.a_lower_left && self.aprime_upper_right && self.a_upper_right
    }
}

pub fn corner_report(field: &FieldSpec, l: usize) -> CornerReport {
    let q = field.q();
    assert!((1..=q).contains(&l), "corner size must lie in 1..=q");
    let a = build_a(field).matrix;
    let ap = build_aprime(field).matrix;
    CornerReport {
        a_lower_left: a.block(q - l, q, 0, l).rank(field) == l,
        aprime_upper_right: ap.block(0, l, q - l, q).rank(field) == l,
        a_upper_right: a.block(0, l, q - l, q).rank(field) == l,
    }
}

pub fn check_corner_submatrices(field: &FieldSpec, l: usize) -> bool {
    corner_report(field, l).all()
}

/// D(l) = [[I_l, 0], [P, 0]] whose columns lie in the span of the last l
/// columns of the forward matrix M, so the top q−l rows of M⁻¹·D vanish.
///
/// `l` counts the known entries at the top of the right-hand side. The
/// columns are M[:, q−l..] · V⁻¹ with V the top-left l × l Vandermonde block
/// of those columns, inverted through the Lagrange basis.
pub fn build_d(field: &FieldSpec, kind: ColumnKind, l: usize) -> Result<ColumnMatrix> {
    let q = field.q();
    if l > q {
        return Err(Error::InvalidParameter(format!(
            "D(l) needs l <= q, got {l}"
        )));
    }
    let matrix = if l == 0 {
        Matrix::zeros(q, q)
    } else if l == q {
        Matrix::identity(q)
    } else {
        let tail: Vec<Elem> = nodes(field, kind)[q - l..].to_vec();
        let lagrange = poly::lagrange_basis(field, &tail);
        Matrix::from_fn(q, q, |r, t| {
            if t >= l {
                Elem::ZERO
            } else if r < l {
                if r == t {
                    Elem::ONE
                } else {
                    Elem::ZERO
                }
            } else {
                // Σ_u node_u^r · L_u[t]
                tail.iter()
                    .zip(&lagrange)
                    .map(|(&x, lu)| field.mul(field.pow(x, r as u64), lu[t]))
                    .sum()
            }
        })
    };
    Ok(ColumnMatrix {
        role: MatrixRole::D,
        matrix,
    })
}

/// Output of the mixed column solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedSolveResult {
    /// Known left entries followed by the solved y's.
    pub left_full: Vec<Elem>,
    /// Known right entries followed by the solved u's.
    pub right_full: Vec<Elem>,
}

/// A, A′, their inverses and every D(l), built once per field.
#[derive(Clone, Debug)]
pub struct TransformFamily {
    field: FieldSpec,
    a: Matrix,
    a_inv: Matrix,
    aprime: Matrix,
    aprime_inv: Matrix,
    d_a: Vec<Matrix>,
    d_aprime: Vec<Matrix>,
}

impl TransformFamily {
    pub fn new(field: &FieldSpec) -> Result<Self> {
        let q = field.q();
        let a = build_a(field).matrix;
        let a_inv = build_a_inverse(field)?.matrix;
        let aprime = build_aprime(field).matrix;
        let aprime_inv = build_aprime_inverse(field)?.matrix;
        let mut d_a = Vec::with_capacity(q + 1);
        let mut d_aprime = Vec::with_capacity(q + 1);
        for l in 0..=q {
            let da = build_d(field, ColumnKind::A, l)?.matrix;
            let dp = build_d(field, ColumnKind::Aprime, l)?.matrix;
            check_projection(field, &a_inv, &da, l)?;
            check_projection(field, &aprime_inv, &dp, l)?;
            d_a.push(da);
            d_aprime.push(dp);
        }
        Ok(TransformFamily {
            field: field.clone(),
            a,
            a_inv,
            aprime,
            aprime_inv,
            d_a,
            d_aprime,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn forward(&self, kind: ColumnKind) -> &Matrix {
        match kind {
            ColumnKind::A => &self.a,
            ColumnKind::Aprime => &self.aprime,
        }
    }

    pub fn inverse(&self, kind: ColumnKind) -> &Matrix {
        match kind {
            ColumnKind::A => &self.a_inv,
            ColumnKind::Aprime => &self.aprime_inv,
        }
    }

    pub fn d(&self, kind: ColumnKind, l: usize) -> &Matrix {
        match kind {
            ColumnKind::A => &self.d_a[l],
            ColumnKind::Aprime => &self.d_aprime[l],
        }
    }

    /// Solves M·(x, y) = (v, u) for y and u, where `x` fills the top q−l
    /// left entries and `v` the top l right entries.
    ///
    /// Steps: b = M(x,0); b̂ = (v − b_top, 0); b̃ = D(l)·b̂;
    /// left = (x,0) + M⁻¹b̃; right = b̃ + b.
    pub fn solve_mixed(
        &self,
        kind: ColumnKind,
        l: usize,
        x: &[Elem],
        v: &[Elem],
    ) -> Result<MixedSolveResult> {
        let f = &self.field;
        let q = f.q();
        if l > q {
            return Err(Error::InvalidParameter(format!("l={l} exceeds q={q}")));
        }
        if x.len() != q - l {
            return Err(Error::LengthMismatch {
                expected: q - l,
                found: x.len(),
            });
        }
        if v.len() != l {
            return Err(Error::LengthMismatch {
                expected: l,
                found: v.len(),
            });
        }
        let m = self.forward(kind);
        let m_inv = self.inverse(kind);

        if l == 0 {
            return Ok(MixedSolveResult {
                left_full: x.to_vec(),
                right_full: m.mul_vec(f, x),
            });
        }
        if l == q {
            return Ok(MixedSolveResult {
                left_full: m_inv.mul_vec(f, v),
                right_full: v.to_vec(),
            });
        }

        let mut x_padded = x.to_vec();
        x_padded.resize(q, Elem::ZERO);
        let b = m.mul_vec(f, &x_padded);
        let mut b_hat = vec![Elem::ZERO; q];
        for t in 0..l {
            b_hat[t] = v[t] - b[t];
        }
        let b_tilde = self.d(kind, l).mul_vec(f, &b_hat);
        let correction = m_inv.mul_vec(f, &b_tilde);
        let left_full = x_padded
            .iter()
            .zip(&correction)
            .map(|(&a, &c)| a + c)
            .collect();
        let right_full = b_tilde.iter().zip(&b).map(|(&a, &c)| a + c).collect();
        Ok(MixedSolveResult {
            left_full,
            right_full,
        })
    }
}

fn check_projection(field: &FieldSpec, m_inv: &Matrix, d: &Matrix, l: usize) -> Result<()> {
    let q = field.q();
    let product = m_inv.mul(field, d);
    let top_zero = product.block(0, q - l, 0, q).is_zero();
    let shape_ok = d.block(0, l, 0, l).is_identity() && d.block(0, q, l, q).is_zero();
    if top_zero && shape_ok {
        Ok(())
    } else {
        Err(Error::Invariant(format!(
            "D({l}) fails its block conditions"
        )))
    }
}
