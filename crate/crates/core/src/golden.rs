//! Arithmetic in the golden field Q(tau), where tau^2 = tau + 1.
//!
//! A [`GoldenNum`] stores a pair of arbitrary-precision rationals `(a, b)`
//! representing `a + b*tau`. The basis `{1, tau}` is linearly independent
//! over Q, so equality is coefficient equality and the representation is
//! unique. Products rewrite `tau^2` as `1 + tau`; the Galois conjugate
//! swaps tau for `1 - tau`; the reduced projection keeps the rational part.
//! Signs (and with them the total order) are decided by exact integer case
//! analysis, never by floating point.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserialize, Deserializer};
use serde::ser::{Serialize, SerializeTuple, Serializer};

use crate::{Error, Result};

/// An element `a + b*tau` of the golden field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GoldenNum {
    a: BigRational,
    b: BigRational,
}

fn big_ratio(num: i64, den: i64) -> BigRational {
    assert!(den != 0, "zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl GoldenNum {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        GoldenNum { a, b }
    }

    pub fn zero() -> Self {
        GoldenNum::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        GoldenNum::new(BigRational::one(), BigRational::zero())
    }

    /// The golden ratio tau itself.
    pub fn tau() -> Self {
        GoldenNum::new(BigRational::zero(), BigRational::one())
    }

    /// The Galois conjugate of tau: sigma = 1 - tau = -1/tau.
    pub fn sigma() -> Self {
        GoldenNum::tau().galois()
    }

    pub fn from_int(n: i64) -> Self {
        GoldenNum::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        GoldenNum::new(big_ratio(num, den), BigRational::zero())
    }

    /// Builds `a_num/a_den + (b_num/b_den) tau`.
    pub fn from_parts(a_num: i64, a_den: i64, b_num: i64, b_den: i64) -> Self {
        GoldenNum::new(big_ratio(a_num, a_den), big_ratio(b_num, b_den))
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn tau_part(&self) -> &BigRational {
        &self.b
    }

    /// The reduced projection `(a + b*tau) |-> a`.
    ///
    /// Additive and Galois-compatible, but not multiplicative: it is the
    /// coefficient-extraction map used to read E8 data out of Q(tau).
    pub fn reduced(&self) -> BigRational {
        self.a.clone()
    }

    /// The field automorphism `tau |-> 1 - tau`, i.e. `a + b*tau |->
    /// (a + b) - b*tau`.
    pub fn galois(&self) -> Self {
        GoldenNum::new(&self.a + &self.b, -&self.b)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// True when the tau-coefficient vanishes.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Multiplies by a plain rational.
    pub fn scale(&self, r: &BigRational) -> Self {
        GoldenNum::new(&self.a * r, &self.b * r)
    }

    /// The multiplicative inverse, via `x^-1 = galois(x) / (x * galois(x))`.
    ///
    /// The field norm `x * galois(x) = a^2 + ab - b^2` is rational and
    /// vanishes only at zero.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let norm = &self.a * &self.a + &self.a * &self.b - &self.b * &self.b;
        debug_assert!(!norm.is_zero());
        Ok(self.galois().scale(&norm.recip()))
    }

    /// The exact sign of the real number `a + b*tau`: -1, 0 or +1.
    ///
    /// Writing `2(a + b*tau) = u + v*sqrt(5)` with `u = 2a + b`, `v = b`,
    /// the sign follows from the signs of `u`, `v` and, when they differ,
    /// from the exact comparison of `u^2` against `5 v^2`.
    pub fn sign(&self) -> i8 {
        let u = &self.a + &self.a + &self.b;
        let v = &self.b;
        let (us, vs) = (rational_sign(&u), rational_sign(v));
        match (us, vs) {
            (0, 0) => 0,
            (s, 0) | (0, s) => s,
            (s, t) if s == t => s,
            _ => {
                // Opposite signs: |u| vs |v|*sqrt(5). Equality would force
                // sqrt(5) rational, so the comparison is always strict.
                let u2 = &u * &u;
                let v5 = v * v * BigRational::from_integer(BigInt::from(5));
                debug_assert!(u2 != v5);
                if u2 > v5 {
                    us
                } else {
                    vs
                }
            }
        }
    }

    /// Approximate value, for display and cross-checks only.
    pub fn to_f64(&self) -> f64 {
        let tau = (1.0 + 5.0_f64.sqrt()) / 2.0;
        ratio_f64(&self.a) + ratio_f64(&self.b) * tau
    }
}

fn rational_sign(r: &BigRational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

fn ratio_f64(r: &BigRational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

impl<'a, 'b> Add<&'b GoldenNum> for &'a GoldenNum {
    type Output = GoldenNum;
    fn add(self, rhs: &'b GoldenNum) -> GoldenNum {
        GoldenNum::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a, 'b> Sub<&'b GoldenNum> for &'a GoldenNum {
    type Output = GoldenNum;
    fn sub(self, rhs: &'b GoldenNum) -> GoldenNum {
        GoldenNum::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl<'a, 'b> Mul<&'b GoldenNum> for &'a GoldenNum {
    type Output = GoldenNum;
    /// `(a1 + b1 t)(a2 + b2 t) = (a1 a2 + b1 b2) + (a1 b2 + a2 b1 + b1 b2) t`.
    fn mul(self, rhs: &'b GoldenNum) -> GoldenNum {
        let a = &self.a * &rhs.a + &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &rhs.a * &self.b + &self.b * &rhs.b;
        GoldenNum::new(a, b)
    }
}

impl<'a> Neg for &'a GoldenNum {
    type Output = GoldenNum;
    fn neg(self) -> GoldenNum {
        GoldenNum::new(-&self.a, -&self.b)
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident) => {
        impl $imp<GoldenNum> for GoldenNum {
            type Output = GoldenNum;
            fn $method(self, rhs: GoldenNum) -> GoldenNum {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $imp<&'a GoldenNum> for GoldenNum {
            type Output = GoldenNum;
            fn $method(self, rhs: &'a GoldenNum) -> GoldenNum {
                (&self).$method(rhs)
            }
        }
        impl<'a> $imp<GoldenNum> for &'a GoldenNum {
            type Output = GoldenNum;
            fn $method(self, rhs: GoldenNum) -> GoldenNum {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for GoldenNum {
    type Output = GoldenNum;
    fn neg(self) -> GoldenNum {
        -&self
    }
}

impl PartialOrd for GoldenNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GoldenNum {
    /// Orders by real value; exact, via [`GoldenNum::sign`].
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        match (self - other).sign() {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        }
    }
}

impl fmt::Display for GoldenNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn tau_term(b: &BigRational) -> String {
            if b.is_one() {
                "τ".to_string()
            } else if (-b).is_one() {
                "-τ".to_string()
            } else if b.denom().is_one() {
                format!("{}τ", b)
            } else {
                format!("({})τ", b)
            }
        }
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}", tau_term(&self.b))
        } else if self.b.is_positive() {
            write!(f, "{} + {}", self.a, tau_term(&self.b))
        } else {
            write!(f, "{} - {}", self.a, tau_term(&(-&self.b)))
        }
    }
}

impl fmt::Debug for GoldenNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn int_i64<E: serde::ser::Error>(n: &BigInt) -> std::result::Result<i64, E> {
    n.to_i64()
        .ok_or_else(|| E::custom("golden coefficient exceeds the i64 serialization range"))
}

impl Serialize for GoldenNum {
    /// Emits `[a_num, a_den, b_num, b_den]`, reduced, denominators positive.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = serializer.serialize_tuple(4)?;
        t.serialize_element(&int_i64::<S::Error>(self.a.numer())?)?;
        t.serialize_element(&int_i64::<S::Error>(self.a.denom())?)?;
        t.serialize_element(&int_i64::<S::Error>(self.b.numer())?)?;
        t.serialize_element(&int_i64::<S::Error>(self.b.denom())?)?;
        t.end()
    }
}

impl<'de> Deserialize<'de> for GoldenNum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let [an, ad, bn, bd] = <[i64; 4]>::deserialize(deserializer)?;
        if ad == 0 || bd == 0 {
            return Err(de::Error::custom("zero denominator in golden coefficient"));
        }
        Ok(GoldenNum::from_parts(an, ad, bn, bd))
    }
}
