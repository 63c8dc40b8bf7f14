//! GF(2⁸) arithmetic.
//!
//! Elements are bytes read as polynomials over GF(2) modulo a degree-8 field
//! polynomial. Multiplication goes through log/antilog tables built once per
//! field; the default field uses `x⁸+x⁴+x³+x²+1` (0x11D) with `α = 0x02`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign};
use std::sync::OnceLock;

use crate::{Error, Result};

/// Field polynomial `x⁸+x⁴+x³+x²+1`.
pub const DEFAULT_FIELD_POLY: u16 = 0x11D;

/// Number of nonzero field elements.
pub const FIELD_ORDER: usize = 255;

/// Log/antilog tables for one choice of field polynomial.
#[derive(Clone)]
pub struct GaloisField {
    poly: u16,
    // doubled so that exp[log a + log b] never needs a modulo
    exp: [u8; 2 * FIELD_ORDER],
    log: [u8; 256],
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GaloisField")
            .field("poly", &format_args!("{:#05x}", self.poly))
            .finish()
    }
}

impl GaloisField {
    /// Builds the tables for `poly`, which must be primitive of degree 8
    /// (so that `x`, i.e. 0x02, generates the multiplicative group).
    pub fn new(poly: u16) -> Result<Self> {
        if poly & 0x100 == 0 || poly > 0x1FF {
            return Err(Error::config(format!("field polynomial {poly:#x} is not of degree 8")));
        }
        let mut exp = [0u8; 2 * FIELD_ORDER];
        let mut log = [0u8; 256];
        let mut seen = [false; 256];
        let mut v: u16 = 1;
        for (i, slot) in exp.iter_mut().take(FIELD_ORDER).enumerate() {
            if seen[v as usize] {
                return Err(Error::config(format!("field polynomial {poly:#x} is not primitive")));
            }
            seen[v as usize] = true;
            *slot = v as u8;
            log[v as usize] = i as u8;
            v <<= 1;
            if v & 0x100 != 0 {
                v ^= poly;
            }
        }
        for i in FIELD_ORDER..2 * FIELD_ORDER {
            exp[i] = exp[i - FIELD_ORDER];
        }
        Ok(GaloisField { poly, exp, log })
    }

    /// The shared default field (0x11D).
    pub fn standard() -> &'static GaloisField {
        static FIELD: OnceLock<GaloisField> = OnceLock::new();
        FIELD.get_or_init(|| GaloisField::new(DEFAULT_FIELD_POLY).expect("0x11D is primitive"))
    }

    pub fn poly(&self) -> u16 {
        self.poly
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp[self.log[a as usize] as usize + self.log[b as usize] as usize]
        }
    }

    /// Multiplicative inverse. Panics on zero.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        assert_ne!(a, 0, "zero has no inverse in GF(256)");
        self.exp[FIELD_ORDER - self.log[a as usize] as usize]
    }

    #[inline]
    pub fn div(&self, a: u8, b: u8) -> u8 {
        assert_ne!(b, 0, "division by zero in GF(256)");
        if a == 0 {
            0
        } else {
            self.exp[self.log[a as usize] as usize + FIELD_ORDER - self.log[b as usize] as usize]
        }
    }

    /// `α^n` for any integer exponent (reduced mod 255).
    #[inline]
    pub fn alpha_pow(&self, n: i64) -> u8 {
        self.exp[n.rem_euclid(FIELD_ORDER as i64) as usize]
    }

    /// Discrete log base `α`. Panics on zero.
    #[inline]
    pub fn log(&self, a: u8) -> u8 {
        assert_ne!(a, 0, "log of zero");
        self.log[a as usize]
    }
}

/// A byte viewed as an element of the default field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct FieldElement(pub u8);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn inverse(self) -> Option<FieldElement> {
        (self.0 != 0).then(|| FieldElement(GaloisField::standard().inv(self.0)))
    }
}

impl From<u8> for FieldElement {
    fn from(v: u8) -> Self {
        FieldElement(v)
    }
}

impl From<FieldElement> for u8 {
    fn from(v: FieldElement) -> Self {
        v.0
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: FieldElement) -> FieldElement {
        FieldElement(self.0 ^ rhs.0)
    }
}

impl AddAssign for FieldElement {
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: FieldElement) {
        self.0 ^= rhs.0;
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        FieldElement(gf_mul(self.0, rhs.0))
    }
}

impl MulAssign for FieldElement {
    fn mul_assign(&mut self, rhs: FieldElement) {
        *self = *self * rhs;
    }
}

impl Div for FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: FieldElement) -> FieldElement {
        FieldElement(GaloisField::standard().div(self.0, rhs.0))
    }
}

/// Product in the default field.
#[inline]
pub fn gf_mul(a: u8, b: u8) -> u8 {
    GaloisField::standard().mul(a, b)
}
