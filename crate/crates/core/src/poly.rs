//! Dense univariate polynomials over GF(q²), coefficients lowest degree first.

use crate::gf::{Elem, FieldSpec};

/// `p · (X + root)`; in characteristic 2 this is also `p · (X − root)`.
pub fn mul_linear(field: &FieldSpec, p: &[Elem], root: Elem) -> Vec<Elem> {
    let mut out = vec![Elem::ZERO; p.len() + 1];
    for (i, &c) in p.iter().enumerate() {
        out[i + 1] += c;
        out[i] += field.mul(c, root);
    }
    out
}

/// Monic polynomial with the given roots.
pub fn from_roots(field: &FieldSpec, roots: &[Elem]) -> Vec<Elem> {
    roots
        .iter()
        .fold(vec![Elem::ONE], |acc, &r| mul_linear(field, &acc, r))
}

pub fn eval(field: &FieldSpec, p: &[Elem], x: Elem) -> Elem {
    p.iter()
        .rev()
        .fold(Elem::ZERO, |acc, &c| field.mul(acc, x) + c)
}

/// Remainder of `dividend` modulo a monic `divisor`.
pub fn rem_monic(field: &FieldSpec, dividend: &[Elem], divisor: &[Elem]) -> Vec<Elem> {
    let deg = divisor.len() - 1;
    debug_assert_eq!(divisor[deg], Elem::ONE);
    let mut work = dividend.to_vec();
    if work.len() <= deg {
        work.resize(deg, Elem::ZERO);
        return work;
    }
    for top in (deg..work.len()).rev() {
        let lead = work[top];
        if lead.is_zero() {
            continue;
        }
        for (k, &g) in divisor.iter().enumerate() {
            work[top - deg + k] += field.mul(lead, g);
        }
    }
    work.truncate(deg);
    work
}

/// Coefficients of the Lagrange basis polynomials for distinct `nodes`:
/// row t holds L_t with L_t(nodes[u]) = [t = u].
///
/// Read as a matrix indexed [t][b] this is the inverse of the Vandermonde
/// matrix V[b][t] = nodes[t]^b.
pub fn lagrange_basis(field: &FieldSpec, nodes: &[Elem]) -> Vec<Vec<Elem>> {
    let full = from_roots(field, nodes);
    nodes
        .iter()
        .map(|&xt| {
            // full / (X + xt) by synthetic division
            let n = full.len() - 1;
            let mut quotient = vec![Elem::ZERO; n];
            let mut carry = Elem::ZERO;
            for k in (0..n).rev() {
                carry = full[k + 1] + field.mul(carry, xt);
                quotient[k] = carry;
            }
            let scale = field
                .inv(eval(field, &quotient, xt))
                .expect("Lagrange nodes must be distinct");
            quotient.iter().map(|&c| field.mul(c, scale)).collect()
        })
        .collect()
}
