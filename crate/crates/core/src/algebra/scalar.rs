//! Scalar types: exact arbitrary-precision rationals and the float scalars
//! (double or MPFR) used at evaluation points.
//!
//! `Rat` is the coefficient type of every exact object in the crate. All
//! arithmetic on it is exact; floats appear only when a value is finally
//! evaluated at a numeric point.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU32, Ordering as AtomicOrdering};

use num::bigint::{BigInt, Sign};
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use rug::ops::Pow;

/// Working precision (bits) for [`Mp`] values created after the call.
static MP_PRECISION: AtomicU32 = AtomicU32::new(100);

pub fn set_mp_precision(bits: u32) {
    MP_PRECISION.store(bits.max(2), AtomicOrdering::Relaxed);
}

pub fn mp_precision() -> u32 {
    MP_PRECISION.load(AtomicOrdering::Relaxed)
}

/// Coefficient scalar: the operations polynomial and rational-function
/// algebra need. Implemented by [`Rat`] (exact), `f64` and [`Mp`].
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// True when arithmetic is exact and equality is decisive.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_rat(r: &Rat) -> Self;
    fn is_zero(&self) -> bool;
    fn neg(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Division; `rhs` must be nonzero.
    fn div(&self, rhs: &Self) -> Self;
    fn powi(&self, n: i64) -> Self;
    fn to_f64(&self) -> f64;
    /// Some(n) when the value is exactly the integer n.
    fn as_integer(&self) -> Option<i64>;
}

/// Float scalar: adds the elementary functions needed to evaluate models
/// at numeric points.
pub trait Real: Coeff + PartialOrd {
    fn from_f64(x: f64) -> Self;
    fn exp(&self) -> Self;
    fn ln(&self) -> Self;
    /// self^e for self > 0.
    fn powf(&self, e: &Self) -> Self;
    fn sqrt(&self) -> Self;
    fn cos(&self) -> Self;
    fn sin(&self) -> Self;
    fn abs(&self) -> Self;
    fn pi() -> Self;
}

/// Exact rational scalar in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Rat(BigRational::new(num, den))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }

    pub fn int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.0.is_zero(), "reciprocal of zero");
        Rat(self.0.recip())
    }

    pub fn signum(&self) -> i8 {
        match self.0.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    /// n! as a Rat.
    pub fn factorial(n: u64) -> Self {
        let mut acc = BigInt::one();
        for i in 2..=n {
            acc *= BigInt::from(i);
        }
        Rat::from_bigint(acc)
    }
}

/// binom(n, k) by the Pascal recurrence on big integers.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut row: Vec<BigInt> = vec![BigInt::one()];
    for i in 1..=n {
        let mut next = vec![BigInt::one(); (i as usize + 1).min(k as usize + 1)];
        for j in 1..next.len() {
            let left = if j < row.len() { row[j - 1].clone() } else { BigInt::zero() };
            let right = if j < row.len() { row[j].clone() } else { BigInt::zero() };
            next[j] = left + right;
        }
        // keep the full prefix while the row is still short
        if (i as usize) < next.len() {
            next[i as usize] = BigInt::one();
        }
        row = next;
    }
    row[k as usize].clone()
}

pub fn binomial_rat(n: u64, k: u64) -> Rat {
    Rat::from_bigint(binomial(n, k))
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Rat {
    type Err = String;

    /// Accepts "3", "-3/4" and decimal literals like "0.25" (parsed exactly).
    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let num: BigInt = n.trim().parse().map_err(|_| format!("bad numerator {n:?}"))?;
            let den: BigInt = d.trim().parse().map_err(|_| format!("bad denominator {d:?}"))?;
            if den.is_zero() {
                return Err("zero denominator".into());
            }
            return Ok(Rat(BigRational::new(num, den)));
        }
        if let Some((int, frac)) = s.split_once('.') {
            let neg = int.trim_start().starts_with('-');
            let int_part: BigInt = if int.is_empty() || int == "-" {
                BigInt::zero()
            } else {
                int.parse().map_err(|_| format!("bad number {s:?}"))?
            };
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(format!("bad number {s:?}"));
            }
            let scale = BigInt::from(10u32).pow(frac.len() as u32);
            let frac_part: BigInt = frac.parse().map_err(|_| format!("bad number {s:?}"))?;
            let mut value = BigRational::new(int_part.abs() * &scale + frac_part, scale);
            if neg {
                value = -value;
            }
            return Ok(Rat(value));
        }
        let n: BigInt = s.parse().map_err(|_| format!("bad number {s:?}"))?;
        Ok(Rat::from_bigint(n))
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl std::ops::$trait for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(&self.0 $op &rhs.0)
            }
        }
        impl std::ops::$trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0 $op rhs.0)
            }
        }
    };
}

rat_binop!(Add, add, +);
rat_binop!(Sub, sub, -);
rat_binop!(Mul, mul, *);

impl std::ops::Div for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.0.is_zero(), "division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl std::ops::Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl std::ops::Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::int(n)
    }
}

impl Coeff for Rat {
    const EXACT: bool = true;

    fn zero() -> Self {
        Rat(BigRational::zero())
    }

    fn one() -> Self {
        Rat(BigRational::one())
    }

    fn from_i64(n: i64) -> Self {
        Rat::int(n)
    }

    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn neg(&self) -> Self {
        Rat(-&self.0)
    }

    fn add(&self, rhs: &Self) -> Self {
        Rat(&self.0 + &rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Rat(&self.0 - &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Rat(&self.0 * &rhs.0)
    }

    fn div(&self, rhs: &Self) -> Self {
        assert!(!rhs.0.is_zero(), "division by zero");
        Rat(&self.0 / &rhs.0)
    }

    fn powi(&self, n: i64) -> Self {
        if n == 0 {
            return <Rat as Coeff>::one();
        }
        let p = self.0.pow(n.unsigned_abs() as i32);
        Rat(if n < 0 { p.recip() } else { p })
    }

    fn to_f64(&self) -> f64 {
        // Ratio::to_f64 handles magnitudes beyond f64 by returning inf.
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    fn as_integer(&self) -> Option<i64> {
        if self.0.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }
}

impl Coeff for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn from_i64(n: i64) -> Self {
        n as f64
    }

    fn from_rat(r: &Rat) -> Self {
        Coeff::to_f64(r)
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }

    fn neg(&self) -> Self {
        -self
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }

    fn powi(&self, n: i64) -> Self {
        f64::powi(*self, n as i32)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn as_integer(&self) -> Option<i64> {
        if self.fract() == 0.0 && f64::abs(*self) < 2f64.powi(53) {
            Some(*self as i64)
        } else {
            None
        }
    }
}

impl Real for f64 {
    fn from_f64(x: f64) -> Self {
        x
    }

    fn exp(&self) -> Self {
        f64::exp(*self)
    }

    fn ln(&self) -> Self {
        f64::ln(*self)
    }

    fn powf(&self, e: &Self) -> Self {
        f64::powf(*self, *e)
    }

    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }

    fn cos(&self) -> Self {
        f64::cos(*self)
    }

    fn sin(&self) -> Self {
        f64::sin(*self)
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    fn pi() -> Self {
        std::f64::consts::PI
    }
}

/// Multiple-precision float at the crate-wide working precision
/// (see [`set_mp_precision`]; default 100 bits).
#[derive(Clone, PartialEq, PartialOrd)]
pub struct Mp(rug::Float);

impl Mp {
    pub fn with_val(v: f64) -> Self {
        Mp(rug::Float::with_val(mp_precision(), v))
    }

    pub fn inner(&self) -> &rug::Float {
        &self.0
    }
}

impl fmt::Debug for Mp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Mp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Coeff for Mp {
    const EXACT: bool = false;

    fn zero() -> Self {
        Mp(rug::Float::with_val(mp_precision(), 0))
    }

    fn one() -> Self {
        Mp(rug::Float::with_val(mp_precision(), 1))
    }

    fn from_i64(n: i64) -> Self {
        Mp(rug::Float::with_val(mp_precision(), n))
    }

    fn from_rat(r: &Rat) -> Self {
        let q: rug::Rational = r
            .to_string()
            .parse()
            .expect("exact rational converts to rug::Rational");
        Mp(rug::Float::with_val(mp_precision(), &q))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn neg(&self) -> Self {
        Mp(rug::Float::with_val(self.0.prec(), -&self.0))
    }

    fn add(&self, rhs: &Self) -> Self {
        let prec = self.0.prec().max(rhs.0.prec());
        Mp(rug::Float::with_val(prec, &self.0 + &rhs.0))
    }

    fn sub(&self, rhs: &Self) -> Self {
        let prec = self.0.prec().max(rhs.0.prec());
        Mp(rug::Float::with_val(prec, &self.0 - &rhs.0))
    }

    fn mul(&self, rhs: &Self) -> Self {
        let prec = self.0.prec().max(rhs.0.prec());
        Mp(rug::Float::with_val(prec, &self.0 * &rhs.0))
    }

    fn div(&self, rhs: &Self) -> Self {
        let prec = self.0.prec().max(rhs.0.prec());
        Mp(rug::Float::with_val(prec, &self.0 / &rhs.0))
    }

    fn powi(&self, n: i64) -> Self {
        Mp(rug::Float::with_val(self.0.prec(), (&self.0).pow(n)))
    }

    fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    fn as_integer(&self) -> Option<i64> {
        if self.0.is_integer() {
            self.0.to_integer().and_then(|i| i.to_i64())
        } else {
            None
        }
    }
}

impl Real for Mp {
    fn from_f64(x: f64) -> Self {
        Mp::with_val(x)
    }

    fn exp(&self) -> Self {
        Mp(self.0.clone().exp())
    }

    fn ln(&self) -> Self {
        Mp(self.0.clone().ln())
    }

    fn powf(&self, e: &Self) -> Self {
        let prec = self.0.prec().max(e.0.prec());
        Mp(rug::Float::with_val(prec, (&self.0).pow(&e.0)))
    }

    fn sqrt(&self) -> Self {
        Mp(self.0.clone().sqrt())
    }

    fn cos(&self) -> Self {
        Mp(self.0.clone().cos())
    }

    fn sin(&self) -> Self {
        Mp(self.0.clone().sin())
    }

    fn abs(&self) -> Self {
        Mp(self.0.clone().abs())
    }

    fn pi() -> Self {
        Mp(rug::Float::with_val(mp_precision(), rug::float::Constant::Pi))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals_and_decimals() {
        assert_eq!("3/4".parse::<Rat>().unwrap(), Rat::new(3, 4));
        assert_eq!("-0.25".parse::<Rat>().unwrap(), Rat::new(-1, 4));
        assert_eq!("2".parse::<Rat>().unwrap(), Rat::int(2));
        assert_eq!("0.125".parse::<Rat>().unwrap(), Rat::new(1, 8));
        assert!("1/0".parse::<Rat>().is_err());
    }

    #[test]
    fn binomial_matches_known_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(2, 1), BigInt::from(2));
        assert_eq!(binomial(10, 0), BigInt::from(1));
        assert_eq!(binomial(10, 11), BigInt::from(0));
        // binom(2k,k) near the 64-bit overflow point
        assert_eq!(
            binomial(66, 33).to_string(),
            "7219428434016265740"
        );
        assert_eq!(
            binomial(100, 50).to_string(),
            "100891344545564193334812497256"
        );
    }

    #[test]
    fn rat_powi_and_recip() {
        let x = Rat::new(2, 3);
        assert_eq!(x.powi(3), Rat::new(8, 27));
        assert_eq!(x.powi(-2), Rat::new(9, 4));
        assert_eq!(x.powi(0), Rat::int(1));
    }

    #[test]
    fn mp_precision_tracks_setting() {
        set_mp_precision(120);
        let third = Mp::from_i64(1).div(&Mp::from_i64(3));
        let err = third.mul(&Mp::from_i64(3)).sub(&Mp::from_i64(1));
        assert!(Coeff::to_f64(&err).abs() < 1e-35);
        set_mp_precision(100);
    }

    #[test]
    fn mp_from_rat_is_faithful() {
        let r = Rat::new(-7, 16); // exactly representable
        let m = Mp::from_rat(&r);
        assert_eq!(Coeff::to_f64(&m), -7.0 / 16.0);
    }
}
