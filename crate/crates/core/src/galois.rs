//! Arithmetic in GF(2) and GF(4), and the maps that tie GF(4) to pairs of bits.
//!
//! GF(4) = {0, 1, w, w²} with w² = w + 1. Elements are stored as two-bit codes
//! `0, 1, 2, 3` for `0, 1, w, w²`; bit 0 is the coordinate on `1` and bit 1 the
//! coordinate on `w` in the basis {1, w}, so addition is exclusive-or of codes.
//!
//! ```text
//! × | 0  1  w  w²
//! --+------------
//! 0 | 0  0  0  0
//! 1 | 0  1  w  w²
//! w | 0  w  w² 1
//! w²| 0  w² 1  w
//! ```

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Which of the two supported fields a runtime value belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum FieldKind {
    Gf2,
    Gf4,
}

impl FieldKind {
    pub fn order(self) -> u32 {
        match self {
            FieldKind::Gf2 => 2,
            FieldKind::Gf4 => 4,
        }
    }

    pub fn from_order(q: u32) -> Option<Self> {
        match q {
            2 => Some(FieldKind::Gf2),
            4 => Some(FieldKind::Gf4),
            _ => None,
        }
    }
}

/// A small field of characteristic two whose elements pack into `BITS` bits.
///
/// Everything generic in the crate (matrices, codes, enumeration) is written
/// against this trait; [`Gf2`] and [`Gf4`] are the two implementations.
pub trait FiniteField:
    Copy
    + Eq
    + Ord
    + Hash
    + Default
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    const KIND: FieldKind;
    /// Number of bits in the packed representation.
    const BITS: u32;

    /// All field elements in code order (`0` first).
    fn elements() -> &'static [Self];

    /// Nonzero elements in code order.
    fn nonzero() -> &'static [Self] {
        &Self::elements()[1..]
    }

    /// A basis of the field over GF(2). Spans over the field are the GF(2)
    /// spans of `basis × vectors`.
    fn additive_basis() -> &'static [Self];

    fn to_bits(self) -> u8;

    /// Inverse of [`to_bits`](Self::to_bits). Bits above `BITS` are ignored.
    fn from_bits(bits: u8) -> Self;

    fn inv(self) -> Result<Self>;

    fn symbol(self) -> char;

    fn from_symbol(c: char) -> Option<Self>;

    fn order() -> u32 {
        Self::KIND.order()
    }
}

/// An element of GF(2).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Gf2(u8);

impl Gf2 {
    pub const ZERO: Gf2 = Gf2(0);
    pub const ONE: Gf2 = Gf2(1);

    pub fn new(bit: bool) -> Self {
        Gf2(bit as u8)
    }

    pub fn is_one(self) -> bool {
        self.0 == 1
    }
}

/// An element of GF(4) = {0, 1, w, w²}, w² = w + 1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Gf4(u8);

const GF4_MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
const GF4_INV: [u8; 4] = [0, 1, 3, 2];

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    /// The primitive element `w`.
    pub const W: Gf4 = Gf4(2);
    /// `w² = w + 1`.
    pub const W2: Gf4 = Gf4(3);

    /// Builds an element from its code in `0..4`.
    pub fn new(code: u8) -> Result<Self> {
        if code < 4 {
            Ok(Gf4(code))
        } else {
            Err(Error::InvalidParameters(format!(
                "{code} is not a GF(4) code"
            )))
        }
    }

    pub fn code(self) -> u8 {
        self.0
    }

    pub fn pow(self, e: u32) -> Self {
        let mut acc = Gf4::ONE;
        for _ in 0..e {
            acc *= self;
        }
        acc
    }
}

static GF2_ELEMS: [Gf2; 2] = [Gf2(0), Gf2(1)];
static GF2_BASIS: [Gf2; 1] = [Gf2(1)];
static GF4_ELEMS: [Gf4; 4] = [Gf4(0), Gf4(1), Gf4(2), Gf4(3)];
static GF4_BASIS: [Gf4; 2] = [Gf4(1), Gf4(2)];

impl FiniteField for Gf2 {
    const KIND: FieldKind = FieldKind::Gf2;
    const BITS: u32 = 1;

    fn elements() -> &'static [Self] {
        &GF2_ELEMS
    }

    fn additive_basis() -> &'static [Self] {
        &GF2_BASIS
    }

    fn to_bits(self) -> u8 {
        self.0
    }

    fn from_bits(bits: u8) -> Self {
        Gf2(bits & 1)
    }

    fn inv(self) -> Result<Self> {
        if self.0 == 0 {
            Err(Error::ZeroInverse)
        } else {
            Ok(self)
        }
    }

    fn symbol(self) -> char {
        if self.0 == 0 {
            '0'
        } else {
            '1'
        }
    }

    fn from_symbol(c: char) -> Option<Self> {
        match c {
            '0' => Some(Gf2(0)),
            '1' => Some(Gf2(1)),
            _ => None,
        }
    }
}

impl FiniteField for Gf4 {
    const KIND: FieldKind = FieldKind::Gf4;
    const BITS: u32 = 2;

    fn elements() -> &'static [Self] {
        &GF4_ELEMS
    }

    fn additive_basis() -> &'static [Self] {
        &GF4_BASIS
    }

    fn to_bits(self) -> u8 {
        self.0
    }

    fn from_bits(bits: u8) -> Self {
        Gf4(bits & 3)
    }

    fn inv(self) -> Result<Self> {
        if self.0 == 0 {
            Err(Error::ZeroInverse)
        } else {
            Ok(Gf4(GF4_INV[self.0 as usize]))
        }
    }

    fn symbol(self) -> char {
        ['0', '1', 'w', 'W'][self.0 as usize]
    }

    fn from_symbol(c: char) -> Option<Self> {
        match c {
            '0' => Some(Gf4(0)),
            '1' => Some(Gf4(1)),
            'w' => Some(Gf4(2)),
            'W' => Some(Gf4(3)),
            _ => None,
        }
    }
}

macro_rules! char2_ops {
    ($t:ident, $mul:expr) => {
        impl Add for $t {
            type Output = $t;
            #[inline]
            #[allow(clippy::suspicious_arithmetic_impl)]
            fn add(self, rhs: $t) -> $t {
                $t(self.0 ^ rhs.0)
            }
        }

        impl Sub for $t {
            type Output = $t;
            #[inline]
            #[allow(clippy::suspicious_arithmetic_impl)]
            fn sub(self, rhs: $t) -> $t {
                $t(self.0 ^ rhs.0)
            }
        }

        impl Neg for $t {
            type Output = $t;
            #[inline]
            fn neg(self) -> $t {
                self
            }
        }

        impl Mul for $t {
            type Output = $t;
            #[inline]
            fn mul(self, rhs: $t) -> $t {
                $t($mul(self.0, rhs.0))
            }
        }

        /// Panics on division by zero, like integer division.
        impl Div for $t {
            type Output = $t;
            #[allow(clippy::suspicious_arithmetic_impl)]
            fn div(self, rhs: $t) -> $t {
                self * rhs.inv().expect("division by zero")
            }
        }

        impl AddAssign for $t {
            #[inline]
            #[allow(clippy::suspicious_op_assign_impl)]
            fn add_assign(&mut self, rhs: $t) {
                self.0 ^= rhs.0;
            }
        }

        impl SubAssign for $t {
            #[inline]
            #[allow(clippy::suspicious_op_assign_impl)]
            fn sub_assign(&mut self, rhs: $t) {
                self.0 ^= rhs.0;
            }
        }

        impl MulAssign for $t {
            #[inline]
            fn mul_assign(&mut self, rhs: $t) {
                *self = *self * rhs;
            }
        }

        impl Zero for $t {
            fn zero() -> $t {
                $t(0)
            }
            fn is_zero(&self) -> bool {
                self.0 == 0
            }
        }

        impl One for $t {
            fn one() -> $t {
                $t(1)
            }
        }

        impl std::iter::Sum for $t {
            fn sum<I: Iterator<Item = $t>>(iter: I) -> $t {
                iter.fold($t(0), |a, b| a + b)
            }
        }

        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.symbol())
            }
        }

        impl fmt::Debug for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.symbol())
            }
        }
    };
}

char2_ops!(Gf2, |a: u8, b: u8| a & b);
char2_ops!(Gf4, |a: u8, b: u8| GF4_MUL[a as usize][b as usize]);

/// Field product in GF(4).
pub fn gf4_mul(a: Gf4, b: Gf4) -> Gf4 {
    a * b
}

/// Multiplicative inverse in GF(4).
pub fn gf4_inv(a: Gf4) -> Result<Gf4> {
    a.inv()
}

/// The additive isomorphism `g: GF(4) → GF(2)²`, coordinates in the basis {1, w}.
pub fn g_map(a: Gf4) -> [Gf2; 2] {
    [Gf2(a.0 & 1), Gf2(a.0 >> 1)]
}

/// Inverse of [`g_map`].
pub fn g_inverse(pair: [Gf2; 2]) -> Gf4 {
    Gf4(pair[0].0 | (pair[1].0 << 1))
}

/// Applies [`g_map`] componentwise: a length-m GF(4) vector becomes a
/// length-2m binary vector.
pub fn big_g_map(x: &[Gf4]) -> Vec<Gf2> {
    x.iter().flat_map(|&a| g_map(a)).collect()
}

/// Inverse of [`big_g_map`]. Panics on odd length.
pub fn big_g_inverse(bits: &[Gf2]) -> Vec<Gf4> {
    assert!(
        bits.len().is_multiple_of(2),
        "binary image must have even length"
    );
    bits.chunks(2).map(|p| g_inverse([p[0], p[1]])).collect()
}

/// The 2×2 binary matrix of `x ↦ αx` in the basis {1, w}.
///
/// Column `j` holds the coordinates of `α·ω_j`, so `L(α)` applied to the
/// column `g(β)` gives `g(αβ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gf4MulMatrix(pub [[Gf2; 2]; 2]);

impl Gf4MulMatrix {
    pub fn apply(&self, v: [Gf2; 2]) -> [Gf2; 2] {
        let m = &self.0;
        [
            m[0][0] * v[0] + m[0][1] * v[1],
            m[1][0] * v[0] + m[1][1] * v[1],
        ]
    }

    pub fn entry(&self, row: usize, col: usize) -> Gf2 {
        self.0[row][col]
    }
}

impl Mul for Gf4MulMatrix {
    type Output = Gf4MulMatrix;

    fn mul(self, rhs: Gf4MulMatrix) -> Gf4MulMatrix {
        let (a, b) = (&self.0, &rhs.0);
        let mut out = [[Gf2(0); 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Gf4MulMatrix(out)
    }
}

impl Add for Gf4MulMatrix {
    type Output = Gf4MulMatrix;

    fn add(self, rhs: Gf4MulMatrix) -> Gf4MulMatrix {
        let mut out = self.0;
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell += rhs.0[i][j];
            }
        }
        Gf4MulMatrix(out)
    }
}

/// Multiplication-by-`a` matrix `L(a)`.
pub fn l_matrix(a: Gf4) -> Gf4MulMatrix {
    let c0 = g_map(a);
    let c1 = g_map(a * Gf4::W);
    Gf4MulMatrix([[c0[0], c1[0]], [c0[1], c1[1]]])
}
