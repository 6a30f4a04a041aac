//! Arithmetic in the tower GF(q) ⊂ GF(q²) for q = 2^s.
//!
//! Elements of GF(q²) are stored in polynomial basis as integers below q²,
//! so addition is XOR. Multiplication goes through log/antilog tables built
//! from a fixed primitive polynomial of degree 2s; the class of `x` is the
//! primitive element ε, and the subfield generator is γ = ε^(q+1).

use std::fmt;
use std::ops::{Add, AddAssign, Sub, SubAssign};

use crate::error::{Error, Result};

/// Lexicographically smallest primitive polynomial over GF(2) for each even
/// degree 2..=16, indexed by `s - 1` (degree `2s`).
pub const PRIMITIVE_POLYNOMIALS: [u32; 8] =
    [0x7, 0x13, 0x43, 0x11d, 0x409, 0x1053, 0x402b, 0x1002d];

pub const MAX_S: u32 = 8;

/// An element of GF(q²) in polynomial-basis encoding.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(pub u16);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn value(self) -> u16 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}

// Characteristic 2: addition and subtraction are both XOR.
impl Add for Elem {
    type Output = Elem;
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Elem) -> Elem {
        Elem(self.0 ^ rhs.0)
    }
}

impl AddAssign for Elem {
    #[inline]
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: Elem) {
        self.0 ^= rhs.0;
    }
}

impl Sub for Elem {
    type Output = Elem;
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: Elem) -> Elem {
        Elem(self.0 ^ rhs.0)
    }
}

impl SubAssign for Elem {
    #[inline]
    #[allow(clippy::suspicious_op_assign_impl)]
    fn sub_assign(&mut self, rhs: Elem) {
        self.0 ^= rhs.0;
    }
}

impl std::iter::Sum for Elem {
    fn sum<I: Iterator<Item = Elem>>(iter: I) -> Elem {
        iter.fold(Elem::ZERO, |acc, x| acc + x)
    }
}

/// Position of an element inside the subfield GF(q).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubfieldIndex {
    Zero,
    /// The element equals γ^j with 0 ≤ j ≤ q−2.
    Power(usize),
}

/// The field tower GF(q) ⊂ GF(q²) with the distinguished constants ε, γ, y₀.
#[derive(Clone)]
pub struct FieldSpec {
    s: u32,
    q: usize,
    q2: usize,
    modulus: u32,
    epsilon: Elem,
    gamma: Elem,
    y0: Elem,
    // exp has 2·(q²−1) entries so a product of two logs indexes without a reduction.
    exp: Vec<Elem>,
    log: Vec<u32>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("s", &self.s)
            .field("q", &self.q)
            .field("modulus", &format_args!("{:#x}", self.modulus))
            .field("epsilon", &self.epsilon)
            .field("gamma", &self.gamma)
            .field("y0", &self.y0)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.s == other.s && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

impl FieldSpec {
    /// Builds GF(q²) for q = 2^s from the fixed primitive-polynomial table.
    pub fn build(s: u32) -> Result<Self> {
        if s == 0 || s > MAX_S {
            return Err(Error::UnsupportedExponent(s));
        }
        let degree = 2 * s;
        let modulus = PRIMITIVE_POLYNOMIALS[(s - 1) as usize];
        let q = 1usize << s;
        let q2 = q * q;
        let order = q2 - 1;

        let mut exp = vec![Elem::ZERO; 2 * order];
        let mut log = vec![0u32; q2];
        let mut x: u32 = 1;
        for (i, slot) in exp.iter_mut().take(order).enumerate() {
            if i > 0 && x == 1 {
                return Err(Error::Invariant(format!(
                    "modulus {modulus:#x} is not primitive (x has order {i})"
                )));
            }
            *slot = Elem(x as u16);
            log[x as usize] = i as u32;
            x <<= 1;
            if x & (1 << degree) != 0 {
                x ^= modulus;
            }
        }
        if x != 1 {
            return Err(Error::Invariant(format!(
                "modulus {modulus:#x} is not primitive"
            )));
        }
        for i in order..2 * order {
            exp[i] = exp[i - order];
        }

        let mut field = FieldSpec {
            s,
            q,
            q2,
            modulus,
            epsilon: exp[1],
            gamma: exp[(q + 1) % order],
            y0: Elem::ZERO,
            exp,
            log,
        };
        field.y0 = solve_y0(&field)?;
        Ok(field)
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// Size of the subfield GF(q).
    pub fn q(&self) -> usize {
        self.q
    }

    /// Size of GF(q²).
    pub fn q2(&self) -> usize {
        self.q2
    }

    /// Order of the multiplicative group of GF(q²).
    pub fn order(&self) -> usize {
        self.q2 - 1
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn epsilon(&self) -> Elem {
        self.epsilon
    }

    pub fn gamma(&self) -> Elem {
        self.gamma
    }

    pub fn y0(&self) -> Elem {
        self.y0
    }

    /// Number of hex digits needed for one element.
    pub fn hex_width(&self) -> usize {
        (2 * self.s as usize).div_ceil(4)
    }

    /// Builds an element from its integer encoding, rejecting out-of-range values.
    pub fn elem(&self, value: u32) -> Result<Elem> {
        if (value as usize) < self.q2 {
            Ok(Elem(value as u16))
        } else {
            Err(Error::Format(format!(
                "value {value:#x} is not an element of GF({})",
                self.q2
            )))
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q2).map(|v| Elem(v as u16))
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        a + b
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize]
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let l = self.log[a.0 as usize] as usize;
        Ok(self.exp[(self.order() - l) % self.order()])
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` with the convention 0⁰ = 1.
    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let l = self.log[a.0 as usize] as u64;
        self.exp[((l * (e % self.order() as u64)) % self.order() as u64) as usize]
    }

    /// ε^e for any integer exponent.
    pub fn eps_pow(&self, e: i64) -> Elem {
        let order = self.order() as i64;
        self.exp[e.rem_euclid(order) as usize]
    }

    /// Discrete log base ε, or `None` for zero.
    pub fn log(&self, a: Elem) -> Option<usize> {
        if a.is_zero() {
            None
        } else {
            Some(self.log[a.0 as usize] as usize)
        }
    }

    /// Frobenius map a ↦ a^q.
    pub fn frobenius(&self, a: Elem) -> Elem {
        self.pow(a, self.q as u64)
    }

    pub fn gamma_pow(&self, j: usize) -> Elem {
        self.eps_pow(((self.q + 1) * j) as i64)
    }

    /// The subfield element labelling codeword row `row`: 0 for row 0, γ^(row−1) otherwise.
    pub fn beta(&self, row: usize) -> Elem {
        if row == 0 {
            Elem::ZERO
        } else {
            self.gamma_pow(row - 1)
        }
    }

    /// The element labelling codeword column `col`: ε^col for col ≤ q²−2, 0 for the last column.
    pub fn alpha(&self, col: usize) -> Elem {
        if col == self.order() {
            Elem::ZERO
        } else {
            self.exp[col]
        }
    }

    /// Locates `a` inside GF(q); `None` if `a` lies outside the subfield.
    pub fn subfield_index(&self, a: Elem) -> Option<SubfieldIndex> {
        match self.log(a) {
            None => Some(SubfieldIndex::Zero),
            Some(l) if l % (self.q + 1) == 0 => Some(SubfieldIndex::Power(l / (self.q + 1))),
            Some(_) => None,
        }
    }

    pub fn in_subfield(&self, a: Elem) -> bool {
        self.subfield_index(a).is_some()
    }

    /// Trace-like map x ↦ x + x^q onto GF(q).
    pub fn trace(&self, a: Elem) -> Elem {
        a + self.frobenius(a)
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: Elem) -> Option<usize> {
        let l = self.log(a)?;
        let n = self.order();
        Some(n / gcd(l, n))
    }
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Smallest element `e` (by encoding) with `e + e^q = 1`.
pub fn solve_y0(field: &FieldSpec) -> Result<Elem> {
    field
        .elements()
        .find(|&e| field.trace(e) == Elem::ONE)
        .ok_or_else(|| Error::Invariant("no element with y + y^q = 1".into()))
}
