//! The Clifford algebra Cl(3) of Euclidean 3-space over the golden field.
//!
//! A [`Multivector`] carries eight golden coefficients on the fixed blade
//! basis `{1, e1, e2, e3, e2e3, e3e1, e1e2, e1e2e3}`. Internally each basis
//! element is a 3-bit mask (bit i set when `e(i+1)` is a factor); the sign
//! of a blade product is the parity of the transpositions needed to sort
//! and contract the factors, with `ei ei = +1`. The bivector basis is kept
//! in the cyclic form `e2e3, e3e1, e1e2`, so `e1e2e3 * ei` lands on the
//! i-th bivector with a plus sign.
//!
//! Reflections and orthogonal maps act through versors: products of
//! nonzero vectors applied by the sandwich `v' = ±A~ v A / |A|^2`, minus
//! for odd versors (the twisted, pinor convention). With that sign, roots
//! reflect as `v' = -a v a / |a|^2`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use serde::de::{self, Deserialize, Deserializer};
use serde::ser::{Serialize, Serializer};

use crate::golden::GoldenNum;
use crate::{Error, Result};

/// Blade names in storage order.
pub const BLADE_NAMES: [&str; 8] = ["1", "e1", "e2", "e3", "e2e3", "e3e1", "e1e2", "e1e2e3"];

/// Grade of each storage slot.
pub const BLADE_GRADE: [usize; 8] = [0, 1, 1, 1, 2, 2, 2, 3];

/// Generator mask of each storage slot (bit i = factor `e(i+1)`).
const BLADE_MASK: [u8; 8] = [0b000, 0b001, 0b010, 0b100, 0b110, 0b101, 0b011, 0b111];

/// Sign relating each stored basis element to the ascending-order blade of
/// its mask: `e3e1` is stored, `e1e3` is the sorted form, hence the -1.
const BLADE_ORIENT: [i8; 8] = [1, 1, 1, 1, 1, -1, 1, 1];

/// Storage slot of each mask.
const MASK_TO_SLOT: [usize; 8] = [0, 1, 2, 6, 3, 5, 4, 7];

/// Product of two ascending-order blades given as masks: the result mask is
/// the XOR, the sign counts the transpositions that sort the concatenation.
fn mask_product(a: u8, b: u8) -> (i8, u8) {
    let mut sign = 1i8;
    let mut acc = a;
    for i in 0..3 {
        if b & (1 << i) != 0 {
            let higher = acc >> (i + 1);
            if higher.count_ones() % 2 == 1 {
                sign = -sign;
            }
            acc ^= 1 << i;
        }
    }
    (sign, acc)
}

/// Product of two stored basis elements: `(sign, slot)` of the result.
pub(crate) fn blade_product(i: usize, j: usize) -> (i8, usize) {
    let (s, mask) = mask_product(BLADE_MASK[i], BLADE_MASK[j]);
    let k = MASK_TO_SLOT[mask as usize];
    (s * BLADE_ORIENT[i] * BLADE_ORIENT[j] * BLADE_ORIENT[k], k)
}

/// Grade parity of a homogeneous multivector.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

/// An element of Cl(3) over the golden field.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multivector {
    c: [GoldenNum; 8],
}

fn zero_coeffs() -> [GoldenNum; 8] {
    std::array::from_fn(|_| GoldenNum::zero())
}

impl Multivector {
    pub fn zero() -> Self {
        Multivector { c: zero_coeffs() }
    }

    pub fn from_coeffs(c: [GoldenNum; 8]) -> Self {
        Multivector { c }
    }

    pub fn scalar(x: GoldenNum) -> Self {
        let mut c = zero_coeffs();
        c[0] = x;
        Multivector { c }
    }

    pub fn one() -> Self {
        Multivector::scalar(GoldenNum::one())
    }

    /// The stored basis element in the given slot, e.g. slot 5 is `e3e1`.
    pub fn basis_blade(slot: usize) -> Self {
        let mut c = zero_coeffs();
        c[slot] = GoldenNum::one();
        Multivector { c }
    }

    /// The pseudoscalar I = e1e2e3.
    pub fn pseudoscalar() -> Self {
        Multivector::basis_blade(7)
    }

    /// The pure vector `x e1 + y e2 + z e3`.
    pub fn from_vector(v: &[GoldenNum; 3]) -> Self {
        let mut c = zero_coeffs();
        c[1] = v[0].clone();
        c[2] = v[1].clone();
        c[3] = v[2].clone();
        Multivector { c }
    }

    pub fn coeff(&self, slot: usize) -> &GoldenNum {
        &self.c[slot]
    }

    pub fn coeffs(&self) -> &[GoldenNum; 8] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(GoldenNum::is_zero)
    }

    pub fn scalar_part(&self) -> GoldenNum {
        self.c[0].clone()
    }

    /// Grade-1 coefficients `(e1, e2, e3)`.
    pub fn vector_coeffs(&self) -> [GoldenNum; 3] {
        [self.c[1].clone(), self.c[2].clone(), self.c[3].clone()]
    }

    /// True when every nonzero coefficient sits in grade 1.
    pub fn is_vector(&self) -> bool {
        self.c
            .iter()
            .enumerate()
            .all(|(i, x)| BLADE_GRADE[i] == 1 || x.is_zero())
    }

    pub fn is_scalar(&self) -> bool {
        self.c
            .iter()
            .enumerate()
            .all(|(i, x)| i == 0 || x.is_zero())
    }

    /// The grades that actually occur.
    pub fn grades(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .c
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, _)| BLADE_GRADE[i])
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// `Some(parity)` when all present grades share one parity; `None` for
    /// the zero multivector or mixed-parity elements.
    pub fn parity(&self) -> Option<Parity> {
        let grades = self.grades();
        if grades.is_empty() {
            return None;
        }
        if grades.iter().all(|g| g % 2 == 0) {
            Some(Parity::Even)
        } else if grades.iter().all(|g| g % 2 == 1) {
            Some(Parity::Odd)
        } else {
            None
        }
    }

    /// Reversal: the anti-automorphism fixing scalars and vectors and
    /// negating bivectors and the pseudoscalar.
    pub fn reverse(&self) -> Self {
        let c = std::array::from_fn(|i| {
            if BLADE_GRADE[i] >= 2 {
                -&self.c[i]
            } else {
                self.c[i].clone()
            }
        });
        Multivector { c }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Multivector {
            c: std::array::from_fn(|i| self.c[i].scale(r)),
        }
    }

    pub fn scale_golden(&self, g: &GoldenNum) -> Self {
        Multivector {
            c: std::array::from_fn(|i| &self.c[i] * g),
        }
    }
}

impl<'a, 'b> Mul<&'b Multivector> for &'a Multivector {
    type Output = Multivector;

    fn mul(self, rhs: &'b Multivector) -> Multivector {
        let mut c = zero_coeffs();
        for i in 0..8 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..8 {
                if rhs.c[j].is_zero() {
                    continue;
                }
                let (sign, k) = blade_product(i, j);
                let term = &self.c[i] * &rhs.c[j];
                c[k] = if sign > 0 { &c[k] + &term } else { &c[k] - &term };
            }
        }
        Multivector { c }
    }
}

impl<'a, 'b> Add<&'b Multivector> for &'a Multivector {
    type Output = Multivector;
    fn add(self, rhs: &'b Multivector) -> Multivector {
        Multivector {
            c: std::array::from_fn(|i| &self.c[i] + &rhs.c[i]),
        }
    }
}

impl<'a, 'b> Sub<&'b Multivector> for &'a Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &'b Multivector) -> Multivector {
        Multivector {
            c: std::array::from_fn(|i| &self.c[i] - &rhs.c[i]),
        }
    }
}

impl<'a> Neg for &'a Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        Multivector {
            c: std::array::from_fn(|i| -&self.c[i]),
        }
    }
}

macro_rules! forward_mv_binop {
    ($imp:ident, $method:ident) => {
        impl $imp<Multivector> for Multivector {
            type Output = Multivector;
            fn $method(self, rhs: Multivector) -> Multivector {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $imp<&'a Multivector> for Multivector {
            type Output = Multivector;
            fn $method(self, rhs: &'a Multivector) -> Multivector {
                (&self).$method(rhs)
            }
        }
        impl<'a> $imp<Multivector> for &'a Multivector {
            type Output = Multivector;
            fn $method(self, rhs: Multivector) -> Multivector {
                self.$method(&rhs)
            }
        }
    };
}

forward_mv_binop!(Mul, mul);
forward_mv_binop!(Add, add);
forward_mv_binop!(Sub, sub);

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        -&self
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let term = if i == 0 {
                format!("{}", x)
            } else if x.is_one() {
                BLADE_NAMES[i].to_string()
            } else if (-x).is_one() {
                format!("-{}", BLADE_NAMES[i])
            } else {
                format!("({}){}", x, BLADE_NAMES[i])
            };
            terms.push(term);
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Serialize for Multivector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.c.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Multivector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let c = <[GoldenNum; 8]>::deserialize(deserializer)?;
        Ok(Multivector { c })
    }
}

/// Reflects the pure vector `v` in the hyperplane orthogonal to `root`:
/// `v' = -root v root / (root|root)`.
pub fn reflect(root: &Multivector, v: &Multivector) -> Result<Multivector> {
    if !root.is_vector() || !v.is_vector() {
        return Err(Error::NotAVector(format!("reflect({}, {})", root, v)));
    }
    if root.is_zero() {
        return Err(Error::ZeroRoot);
    }
    let norm_sq = (root * root).scalar_part();
    let image = -(root * v * root).scale_golden(&norm_sq.inverse()?);
    debug_assert!(image.is_vector());
    Ok(image)
}

/// A versor: a geometric product of nonzero vectors, stored with its grade
/// parity. In Cl(3) these are exactly the nonzero homogeneous-parity
/// multivectors, and `A A~` is always a strictly positive scalar.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Versor {
    value: Multivector,
    parity: Parity,
}

impl Versor {
    pub fn try_new(value: Multivector) -> Result<Self> {
        let parity = value
            .parity()
            .ok_or_else(|| Error::NotAVersor(format!("`{}` has mixed or empty parity", value)))?;
        let n = &value * &value.reverse();
        if !n.is_scalar() || n.scalar_part().sign() != 1 {
            return Err(Error::NotAVersor(format!(
                "`{}` has non-positive or non-scalar norm `{}`",
                value, n
            )));
        }
        Ok(Versor { value, parity })
    }

    /// Wraps a nonzero vector as an odd versor.
    pub fn from_vector(v: &[GoldenNum; 3]) -> Result<Self> {
        Versor::try_new(Multivector::from_vector(v))
    }

    pub fn value(&self) -> &Multivector {
        &self.value
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// `A A~`, a strictly positive golden scalar.
    pub fn norm_sq(&self) -> GoldenNum {
        // Scalar part of A A~: cross blades never land on grade 0, and each
        // e_S rev(e_S) squares to +1, so only the coefficient squares remain.
        let mut acc = GoldenNum::zero();
        for c in self.value.coeffs() {
            if !c.is_zero() {
                acc = acc + c * c;
            }
        }
        acc
    }

    pub fn reverse(&self) -> Versor {
        Versor {
            value: self.value.reverse(),
            parity: self.parity,
        }
    }

    /// The sandwich action on a pure vector: `v' = ±A~ v A / |A|^2`, minus
    /// for odd parity. Always an orthogonal map; for a single root vector
    /// it is the reflection in that root's hyperplane.
    pub fn apply(&self, v: &Multivector) -> Result<Multivector> {
        if !v.is_vector() {
            return Err(Error::NotAVector(format!("{}", v)));
        }
        let sandwich = &self.value.reverse() * v * &self.value;
        let scaled = sandwich.scale_golden(&self.norm_sq().inverse()?);
        let image = match self.parity {
            Parity::Even => scaled,
            Parity::Odd => -scaled,
        };
        debug_assert!(image.is_vector());
        Ok(image)
    }
}

/// Free-function form of [`Versor::apply`].
pub fn versor_action(a: &Versor, v: &Multivector) -> Result<Multivector> {
    a.apply(v)
}

impl fmt::Display for Versor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Debug for Versor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Serialize for Versor {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.value.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Versor {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let value = Multivector::deserialize(deserializer)?;
        Versor::try_new(value).map_err(de::Error::custom)
    }
}
