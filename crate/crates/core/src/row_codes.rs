//! Extended cyclic row codes E_i of length q².
//!
//! A word c lies in EC((ξ₀, ξ₁, …), q²) when its first q²−1 symbols, read as
//! a polynomial, vanish at ξ₁, ξ₂, … and the last symbol cancels the value
//! at ξ₀. For row i the roots are ξ_a = ε^(a + i(q+1)), a = 0..=â(i).
//!
//! Information symbols occupy the prefix 0..dim, parity the suffix with the
//! extended position last. Reversing the cyclic part turns this into the
//! usual "parity in the low coefficients" layout, with generator
//! g′(X) = Π_{a≥1} (X − ξ_a⁻¹).

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldSpec};
use crate::hermitian::CodeParams;
use crate::poly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedCyclicCode {
    row_index: usize,
    length: usize,
    roots: Vec<Elem>,
    dim: usize,
    // g′ coefficients, lowest degree first, monic of degree roots.len() − 1.
    generator: Vec<Elem>,
}

/// Row code E_i of the given parameters.
pub fn make_ei(params: &CodeParams, i: usize) -> ExtendedCyclicCode {
    let f = params.field();
    let q = f.q();
    let a_hat = params.a_hat()[i];
    let roots: Vec<Elem> = (0..=a_hat)
        .map(|a| f.eps_pow((a + i * (q + 1)) as i64))
        .collect();
    ExtendedCyclicCode::new(f, i, roots)
}

impl ExtendedCyclicCode {
    /// Extended cyclic code of length q² with the given ordered roots;
    /// `roots[0]` is the distinguished root.
    pub fn new(field: &FieldSpec, row_index: usize, roots: Vec<Elem>) -> Self {
        let length = field.q2();
        assert!(
            !roots.is_empty() && roots.len() < length,
            "root count out of range"
        );
        let reversed: Vec<Elem> = roots[1..]
            .iter()
            .map(|&r| field.inv(r).expect("roots are nonzero"))
            .collect();
        let generator = poly::from_roots(field, &reversed);
        ExtendedCyclicCode {
            row_index,
            length,
            dim: length - roots.len(),
            roots,
            generator,
        }
    }

    pub fn row_index(&self) -> usize {
        self.row_index
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn roots(&self) -> &[Elem] {
        &self.roots
    }

    /// Number of parity symbols, â(i) + 1.
    pub fn redundancy(&self) -> usize {
        self.roots.len()
    }

    /// Generator polynomial of the reversed cyclic part.
    pub fn reversed_generator(&self) -> &[Elem] {
        &self.generator
    }

    fn check_len(&self, found: usize, expected: usize) -> Result<()> {
        if found == expected {
            Ok(())
        } else {
            Err(Error::LengthMismatch { expected, found })
        }
    }

    /// Systematic encoder φ_i by polynomial division.
    pub fn encode_row(&self, field: &FieldSpec, info: &[Elem]) -> Result<Vec<Elem>> {
        self.check_len(info.len(), self.dim)?;
        let cyclic_len = self.length - 1;
        let parity_len = self.roots.len() - 1;

        // Reversed message: coefficient of X^(N−1−t) is info[t].
        let mut dividend = vec![Elem::ZERO; cyclic_len];
        for (t, &s) in info.iter().enumerate() {
            dividend[cyclic_len - 1 - t] = s;
        }
        let rem = poly::rem_monic(field, &dividend, &self.generator);

        let mut word = Vec::with_capacity(self.length);
        word.extend_from_slice(info);
        word.extend((0..parity_len).map(|e| rem[parity_len - 1 - e]));
        let ext = poly::eval(field, &word, self.roots[0]);
        word.push(ext);
        Ok(word)
    }

    /// Per-root checks: entry 0 is c_{q²−1} + c(ξ₀), entry a ≥ 1 is c(ξ_a).
    pub fn row_syndromes(&self, field: &FieldSpec, word: &[Elem]) -> Result<Vec<Elem>> {
        self.check_len(word.len(), self.length)?;
        let (cyclic, ext) = word.split_at(self.length - 1);
        Ok(self
            .roots
            .iter()
            .enumerate()
            .map(|(a, &xi)| {
                let value = poly::eval(field, cyclic, xi);
                if a == 0 {
                    value + ext[0]
                } else {
                    value
                }
            })
            .collect())
    }

    pub fn contains(&self, field: &FieldSpec, word: &[Elem]) -> Result<bool> {
        Ok(self.row_syndromes(field, word)?.iter().all(|s| s.is_zero()))
    }

    pub fn streaming<'f>(&self, field: &'f FieldSpec) -> RowEncoderState<'f> {
        RowEncoderState::new(field, self)
    }
}

/// Shift-register form of φ_i: information symbols are pushed one at a
/// time, after which the parity symbols are pulled one at a time.
#[derive(Clone, Debug)]
pub struct RowEncoderState<'f> {
    field: &'f FieldSpec,
    taps: Vec<Elem>,
    registers: Vec<Elem>,
    // Horner form of Σ c_t ξ₀^t: acc ← acc·ξ₀⁻¹ + c_t, then one more ·ξ₀⁻¹
    // at the end, using ξ₀^(q²−1) = 1.
    xi0_inv: Elem,
    acc: Elem,
    dim: usize,
    length: usize,
    step: usize,
}

impl<'f> RowEncoderState<'f> {
    pub fn new(field: &'f FieldSpec, code: &ExtendedCyclicCode) -> Self {
        let deg = code.generator.len() - 1;
        RowEncoderState {
            field,
            taps: code.generator[..deg].to_vec(),
            registers: vec![Elem::ZERO; deg],
            xi0_inv: field.inv(code.roots[0]).expect("roots are nonzero"),
            acc: Elem::ZERO,
            dim: code.dim,
            length: code.length,
            step: 0,
        }
    }

    pub fn position(&self) -> usize {
        self.step
    }

    pub fn info_complete(&self) -> bool {
        self.step >= self.dim
    }

    pub fn register_count(&self) -> usize {
        self.registers.len() + 1
    }

    fn accumulate(&mut self, symbol: Elem) {
        self.acc = self.field.mul(self.acc, self.xi0_inv) + symbol;
        self.step += 1;
    }

    /// Feeds the next information symbol and echoes it.
    pub fn push(&mut self, symbol: Elem) -> Result<Elem> {
        if self.step >= self.dim {
            return Err(Error::StreamOrder(
                "information pushed after the info prefix",
            ));
        }
        let f = self.field;
        if let Some(&top) = self.registers.last() {
            let fb = symbol + top;
            for k in (1..self.registers.len()).rev() {
                self.registers[k] = self.registers[k - 1] + f.mul(fb, self.taps[k]);
            }
            self.registers[0] = f.mul(fb, self.taps[0]);
        }
        self.accumulate(symbol);
        Ok(symbol)
    }

    /// Emits the next parity symbol; the final one is the extended check.
    pub fn pull(&mut self) -> Result<Elem> {
        if self.step < self.dim {
            return Err(Error::StreamOrder(
                "parity pulled before the info prefix is complete",
            ));
        }
        if self.step >= self.length {
            return Err(Error::StreamExhausted(self.length));
        }
        if self.step == self.length - 1 {
            self.step += 1;
            return Ok(self.field.mul(self.acc, self.xi0_inv));
        }
        let out = self.registers.pop().expect("cyclic parity remains");
        self.registers.insert(0, Elem::ZERO);
        self.accumulate(out);
        Ok(out)
    }
}

/// Streams `encode_row` output one symbol per step over a known info vector.
#[derive(Clone, Debug)]
pub struct RowStream<'f> {
    state: RowEncoderState<'f>,
    info: Vec<Elem>,
}

impl<'f> RowStream<'f> {
    pub fn new(field: &'f FieldSpec, code: &ExtendedCyclicCode, info: &[Elem]) -> Result<Self> {
        code.check_len(info.len(), code.dim)?;
        Ok(RowStream {
            state: RowEncoderState::new(field, code),
            info: info.to_vec(),
        })
    }

    pub fn step(&mut self) -> Result<Elem> {
        let pos = self.state.position();
        if pos < self.info.len() {
            self.state.push(self.info[pos])
        } else {
            self.state.pull()
        }
    }
}

impl Iterator for RowStream<'_> {
    type Item = Elem;

    fn next(&mut self) -> Option<Elem> {
        self.step().ok()
    }
}

pub fn encode_row_streaming<'f>(
    field: &'f FieldSpec,
    code: &ExtendedCyclicCode,
    info: &[Elem],
) -> Result<RowStream<'f>> {
    RowStream::new(field, code, info)
}
