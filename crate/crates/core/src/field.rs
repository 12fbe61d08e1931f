//! Arithmetic in binary extension fields GF(2^m).
//!
//! Elements are bit vectors of polynomial coefficients over GF(2): bit `i`
//! holds the coefficient of `x^i`. Multiplication goes through log/antilog
//! tables built once per field. The coordinate field for the projective plane
//! is [`gf8`], GF(2)[x]/(x³+x+1).

use std::fmt;
use std::sync::LazyLock;

use thiserror::Error;

/// Modulus x³ + x + 1.
pub const GF8_MODULUS: u32 = 0b1011;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("degree {0} is outside the supported range 1..=8")]
    UnsupportedDegree(u32),
    #[error("modulus {modulus:#b} does not have degree {degree}")]
    WrongDegree { modulus: u32, degree: u32 },
    #[error("modulus {modulus:#b} is reducible (divisible by {factor:#b})")]
    Reducible { modulus: u32, factor: u32 },
    #[error("value {value} is not an element of GF(2^{degree})")]
    OutOfRange { value: u32, degree: u32 },
}

/// An element of a binary field, stored as its coefficient bit vector.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(u8);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Wraps raw bits without range checking; see [`BinaryField::element`].
    pub const fn from_bits(bits: u8) -> Self {
        FieldElement(bits)
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Carry-less product of two polynomials over GF(2).
fn clmul(mut a: u32, mut b: u32) -> u32 {
    let mut acc = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        a <<= 1;
        b >>= 1;
    }
    acc
}

fn poly_degree(p: u32) -> Option<u32> {
    (p != 0).then(|| 31 - p.leading_zeros())
}

fn poly_rem(mut a: u32, m: u32) -> u32 {
    let dm = poly_degree(m).expect("nonzero modulus");
    while let Some(da) = poly_degree(a) {
        if da < dm {
            break;
        }
        a ^= m << (da - dm);
    }
    a
}

/// Smallest nontrivial divisor of `p` over GF(2), found by trial division by
/// every polynomial of degree at most deg(p)/2.
fn smallest_factor(p: u32) -> Option<u32> {
    let d = poly_degree(p)?;
    (2u32..(1 << (d / 2 + 1)))
        .filter(|&f| poly_degree(f).is_some_and(|df| df >= 1 && 2 * df <= d))
        .find(|&f| poly_rem(p, f) == 0)
}

/// GF(2^m) with precomputed log/antilog tables.
#[derive(Debug, Clone)]
pub struct BinaryField {
    degree: u32,
    modulus: u32,
    generator: FieldElement,
    /// `antilog[i] = g^i` for `i` in `0..order-1`, repeated once so that
    /// `antilog[log a + log b]` never needs a reduction.
    antilog: Vec<u8>,
    /// `log[a]` for nonzero `a`; `log[0]` is unused.
    log: Vec<u8>,
}

impl BinaryField {
    pub fn new(degree: u32, modulus: u32) -> Result<Self, FieldError> {
        if !(1..=8).contains(&degree) {
            return Err(FieldError::UnsupportedDegree(degree));
        }
        if poly_degree(modulus) != Some(degree) {
            return Err(FieldError::WrongDegree { modulus, degree });
        }
        if let Some(factor) = smallest_factor(modulus) {
            return Err(FieldError::Reducible { modulus, factor });
        }
        let size = 1usize << degree;
        let units = size - 1;
        // The smallest element whose powers cover every unit.
        let (generator, powers) = (1..size as u32)
            .find_map(|g| {
                let mut powers = Vec::with_capacity(units);
                let mut acc = 1u32;
                for _ in 0..units {
                    powers.push(acc as u8);
                    acc = poly_rem(clmul(acc, g), modulus);
                }
                let mut seen = vec![false; size];
                let distinct = powers.iter().all(|&p| !std::mem::replace(&mut seen[p as usize], true));
                distinct.then_some((g, powers))
            })
            .expect("the unit group of a finite field is cyclic");
        let mut log = vec![0u8; size];
        for (i, &p) in powers.iter().enumerate() {
            log[p as usize] = i as u8;
        }
        let mut antilog = powers.clone();
        antilog.extend_from_slice(&powers);
        Ok(BinaryField {
            degree,
            modulus,
            generator: FieldElement(generator as u8),
            antilog,
            log,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn size(&self) -> usize {
        1 << self.degree
    }

    /// The primitive element whose powers fill the antilog table.
    pub fn generator(&self) -> FieldElement {
        self.generator
    }

    pub fn antilog_table(&self) -> &[u8] {
        &self.antilog[..self.size() - 1]
    }

    pub fn element(&self, value: u32) -> Result<FieldElement, FieldError> {
        if (value as usize) < self.size() {
            Ok(FieldElement(value as u8))
        } else {
            Err(FieldError::OutOfRange { value, degree: self.degree })
        }
    }

    /// All elements in increasing bit order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.size()).map(|v| FieldElement(v as u8))
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(a.0 ^ b.0)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        let e = self.log[a.0 as usize] as usize + self.log[b.0 as usize] as usize;
        FieldElement(self.antilog[e])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if a.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        let units = self.size() - 1;
        let e = (units - self.log[a.0 as usize] as usize) % units;
        Ok(FieldElement(self.antilog[e]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, e: u32) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if a.is_zero() {
            return FieldElement::ZERO;
        }
        let units = self.size() - 1;
        let idx = (self.log[a.0 as usize] as usize * (e as usize % units)) % units;
        FieldElement(self.antilog[idx])
    }

    /// The Frobenius automorphism `a ↦ a²`.
    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    /// `a ↦ a^(2^e)`.
    pub fn frobenius_pow(&self, a: FieldElement, e: u32) -> FieldElement {
        (0..e % self.degree).fold(a, |x, _| self.frobenius(x))
    }
}

static GF8: LazyLock<BinaryField> =
    LazyLock::new(|| BinaryField::new(3, GF8_MODULUS).expect("x^3+x+1 is irreducible"));

/// The field GF(8) = GF(2)[x]/(x³+x+1).
pub fn gf8() -> &'static BinaryField {
    &GF8
}
