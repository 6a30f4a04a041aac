//! Hand-computed small cases checked through the public API.

use hermit_core::gf::SubfieldIndex;
use hermit_core::matrix::Matrix;
use hermit_core::oracle::complete_systematic;
use hermit_core::row_codes::make_ei;
use hermit_core::transforms::{
    build_a, build_a_inverse, build_aprime, build_aprime_inverse, check_corner_submatrices,
    ColumnKind, TransformFamily,
};
use hermit_core::{
    enumerate_points, make_code, CodeArray, CodeParams, Elem, FieldSpec, HermitianCode,
};

fn gf4() -> FieldSpec {
    FieldSpec::build(1).unwrap()
}

fn q2_m4() -> CodeParams {
    make_code(gf4(), 4).unwrap()
}

#[test]
fn gf4_arithmetic() {
    let f = gf4();
    let w = f.epsilon();
    let w2 = f.mul(w, w);
    assert_eq!(f.modulus(), 0b111);
    assert_eq!(f.gamma(), Elem::ONE);
    assert_eq!(f.inv(w).unwrap(), w2);
    assert_eq!(w + w2, Elem::ONE);
    assert_eq!(f.y0(), w.min(w2));
    assert_eq!(f.mul(w, Elem::ZERO), Elem::ZERO);
    assert!(f.inv(Elem::ZERO).is_err());
}

#[test]
fn gf16_constants() {
    let f = FieldSpec::build(2).unwrap();
    let y0 = f.y0();
    assert_eq!(y0 + f.pow(y0, 4), Elem::ONE);
    assert!(!f.in_subfield(y0));
    assert_eq!(f.multiplicative_order(f.gamma()), Some(3));
    assert_eq!(
        f.subfield_index(f.eps_pow(5)),
        Some(SubfieldIndex::Power(1))
    );
    assert_eq!(f.subfield_index(Elem::ZERO), Some(SubfieldIndex::Zero));
    assert_eq!(f.subfield_index(Elem::ONE), Some(SubfieldIndex::Power(0)));
    assert_eq!(f.pow(f.epsilon(), 15), Elem::ONE);
}

#[test]
fn q2_curve_points() {
    let f = gf4();
    let pts = enumerate_points(&f).unwrap();
    assert_eq!(pts.len(), 8);
    let mut xy: Vec<_> = pts.iter().map(|p| (p.x, p.y)).collect();
    xy.sort();
    xy.dedup();
    assert_eq!(xy.len(), 8);
    let exhaustive = f
        .elements()
        .flat_map(|x| f.elements().map(move |y| (x, y)))
        .filter(|&(x, y)| f.pow(x, 3) == f.mul(y, y) + y)
        .count();
    assert_eq!(exhaustive, 8);
}

#[test]
fn q2_m4_parameters() {
    let p = q2_m4();
    assert_eq!(p.basis(), &[(0, 0), (1, 0), (2, 0), (0, 1)]);
    assert_eq!(p.a_hat(), &[2, 0]);
    assert_eq!(p.info_len(), &[3, 1]);
    assert_eq!(p.b_hat(), &[2, 1, 1, 0]);
    assert_eq!((p.k(), p.genus()), (4, 1));
    assert_eq!(p.info_positions(), vec![(0, 0), (0, 1), (0, 2), (1, 0)]);
    assert!(make_code(gf4(), 3).is_err());
}

#[test]
fn q2_column_matrices() {
    let f = gf4();
    let y0 = f.y0();
    let one = Elem::ONE;
    let zero = Elem::ZERO;
    let a = build_a(&f).matrix;
    assert_eq!(
        a,
        Matrix::from_rows(vec![vec![one, one], vec![y0, y0 + one]])
    );
    let a_inv = build_a_inverse(&f).unwrap().matrix;
    assert_eq!(
        a_inv,
        Matrix::from_rows(vec![vec![one + y0, one], vec![y0, one]])
    );
    let ap = build_aprime(&f).matrix;
    assert_eq!(ap, Matrix::from_rows(vec![vec![one, one], vec![zero, one]]));
    assert_eq!(build_aprime_inverse(&f).unwrap().matrix, ap);
    assert!((1..=2).all(|l| check_corner_submatrices(&f, l)));
}

#[test]
fn q2_projection_clears_first_check() {
    let f = gf4();
    let fam = TransformFamily::new(&f).unwrap();
    let prod = fam.inverse(ColumnKind::A).mul(&f, fam.d(ColumnKind::A, 1));
    assert!(prod.row(0).iter().all(|e| e.is_zero()));
    assert!(fam.d(ColumnKind::A, 0).is_zero());
}

#[test]
fn q2_row_codes() {
    let p = q2_m4();
    let f = p.field();
    let e0 = make_ei(&p, 0);
    assert_eq!(e0.roots(), &[f.eps_pow(0), f.eps_pow(1), f.eps_pow(2)]);
    assert_eq!(e0.dim(), 1);
    let e1 = make_ei(&p, 1);
    assert_eq!(e1.roots(), &[f.eps_pow(3)]);
    assert_eq!(e1.dim(), 3);

    let d = [f.eps_pow(1), Elem::ONE, f.eps_pow(2)];
    let c = e1.encode_row(f, &d).unwrap();
    let parity = d[0] + f.mul(d[1], f.eps_pow(3)) + f.mul(d[2], f.eps_pow(6));
    assert_eq!(c, vec![d[0], d[1], d[2], parity]);
}

#[test]
fn q2_encoder_matches_hand_oracle() {
    let p = q2_m4();
    let f = p.field().clone();
    let code = HermitianCode::new(p.clone()).unwrap();
    assert_eq!(
        code.encode(&[Elem::ZERO; 4]).unwrap().codeword,
        CodeArray::zeros(2)
    );
    for v in 0..256u32 {
        let info: Vec<Elem> = (0..4)
            .map(|t| f.elem((v >> (2 * t)) & 3).unwrap())
            .collect();
        let enc = code.encode(&info).unwrap();
        assert_eq!(enc.codeword, complete_systematic(&p, &info).unwrap());
        assert!(code.is_codeword(&enc.codeword).unwrap());
    }
}

#[test]
fn point_indicator_syndromes() {
    let p = make_code(FieldSpec::build(2).unwrap(), 19).unwrap();
    let f = p.field().clone();
    let code = HermitianCode::new(p.clone()).unwrap();
    let (row, col) = (2, 5);
    let mut r = CodeArray::zeros(4);
    r.set(row, col, Elem::ONE);
    let pt = enumerate_points(&f).unwrap()[row * 16 + col];
    let table = code.syndromes_direct(&r).unwrap();
    for &(a, b) in p.basis() {
        let want = f.mul(f.pow(pt.x, a as u64), f.pow(pt.y, b as u64));
        assert_eq!(table.get(a, b), Some(want));
    }
    assert_eq!(table, code.syndromes_fast(&r).unwrap());
}

#[test]
fn uniform_encoder_satisfies_checks() {
    let f = gf4();
    let p = CodeParams::uniform(f.clone(), 2).unwrap();
    let code = HermitianCode::new(p.clone()).unwrap();
    let cols = p.row_dim(0);
    let d = Matrix::from_fn(2, cols, |r, c| Elem(((r * 3 + c * 2 + 1) % 4) as u16));
    let cw = code.encode_uniform(&d).unwrap();
    let pts = enumerate_points(&f).unwrap();
    for a in 0..=2u64 {
        for b in 0..=1u64 {
            let s: Elem = pts
                .iter()
                .enumerate()
                .map(|(idx, pt)| {
                    let w = f.mul(f.pow(pt.x, a), f.pow(pt.y, b));
                    f.mul(w, cw.flat()[idx])
                })
                .sum();
            assert_eq!(s, Elem::ZERO, "S({a},{b})");
        }
    }
}
