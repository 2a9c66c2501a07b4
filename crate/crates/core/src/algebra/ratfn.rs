//! Exact rational functions over the rationals, kept in a canonical form:
//! numerator and denominator coprime, denominator monic and nonzero.
//! Canonical form makes equality decisive, which the identity checks rely on.

use super::poly::{Poly, QPoly};
use super::scalar::{Coeff, Rat};

#[derive(Clone, PartialEq)]
pub struct RatFn {
    num: QPoly,
    den: QPoly,
}

/// Exact one-sided limit of a rational function.
#[derive(Clone, Debug, PartialEq)]
pub enum Limit {
    Finite(Rat),
    /// Diverges; the payload is the sign of the blow-up (+1 / -1).
    Infinite(i8),
}

impl RatFn {
    /// Panics if `den` is identically zero.
    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFn {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree().unwrap_or(0) > 0 {
            (num.divrem(&g).0, den.divrem(&g).0)
        } else {
            (num, den)
        };
        let lead = den.leading().expect("nonzero denominator").clone();
        if lead == Rat::int(1) {
            RatFn { num, den }
        } else {
            let inv = Rat::int(1).div(&lead);
            RatFn {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(p: QPoly) -> Self {
        RatFn {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        RatFn::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        RatFn::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        RatFn::from_poly(Poly::one())
    }

    pub fn x() -> Self {
        RatFn::from_poly(Poly::x())
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        RatFn::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        RatFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        RatFn::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn div(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RatFn::new(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        RatFn::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        RatFn::new(self.num.scale(c), self.den.clone())
    }

    /// Multiply by x^n (n may be negative).
    pub fn mul_xpow(&self, n: i64) -> Self {
        if n >= 0 {
            RatFn::new(self.num.mul_xpow(n as usize), self.den.clone())
        } else {
            RatFn::new(self.num.clone(), self.den.mul_xpow((-n) as usize))
        }
    }

    pub fn pow_i(&self, n: i64) -> Self {
        let mut acc = RatFn::one();
        let base = if n < 0 { self.recip() } else { self.clone() };
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Exact derivative by the quotient rule, reduced to canonical form.
    pub fn derivative(&self) -> Self {
        let num = self
            .num
            .derivative()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative()));
        RatFn::new(num, self.den.mul(&self.den))
    }

    pub fn derivative_n(&self, order: usize) -> Self {
        let mut r = self.clone();
        for _ in 0..order {
            if r.is_zero() {
                break;
            }
            r = r.derivative();
        }
        r
    }

    /// Exact evaluation; None at a pole.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if Coeff::is_zero(&d) {
            return None;
        }
        Some(self.num.eval(x).div(&d))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }

    /// Exact substitution x -> 1/x.
    pub fn substitute_inverse(&self) -> Self {
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        // num(1/x) = rev(num)/x^dn, den(1/x) = rev(den)/x^dd
        let mut num = self.num.reversed();
        let mut den = self.den.reversed();
        if dd >= dn {
            num = num.mul_xpow(dd - dn);
        } else {
            den = den.mul_xpow(dn - dd);
        }
        RatFn::new(num, den)
    }

    /// The reflection h -> \u{0125}, \u{0125}(x) = -h(1/x).
    pub fn hat(&self) -> Self {
        self.substitute_inverse().neg()
    }

    /// Exact substitution x -> c*x.
    pub fn scale_arg(&self, c: &Rat) -> Self {
        RatFn::new(self.num.scale_arg(c), self.den.scale_arg(c))
    }

    /// Exact substitution x -> c/x.
    pub fn inv_scale_arg(&self, c: &Rat) -> Self {
        self.scale_arg(c).substitute_inverse()
    }

    /// Order of vanishing at 0: ord(num) - ord(den). None for the zero function.
    pub fn ord_at_zero(&self) -> Option<i64> {
        let n = self.num.ord_at_zero()? as i64;
        let d = self.den.ord_at_zero().expect("den nonzero") as i64;
        Some(n - d)
    }

    /// Exact one-sided limit as x -> 0+.
    pub fn limit_at_zero(&self) -> Limit {
        if self.is_zero() {
            return Limit::Finite(Rat::int(0));
        }
        let on = self.num.ord_at_zero().unwrap();
        let od = self.den.ord_at_zero().unwrap();
        let cn = self.num.coeff(on);
        let cd = self.den.coeff(od);
        match on.cmp(&od) {
            std::cmp::Ordering::Greater => Limit::Finite(Rat::int(0)),
            std::cmp::Ordering::Equal => Limit::Finite(cn.div(&cd)),
            std::cmp::Ordering::Less => Limit::Infinite(cn.signum() * cd.signum()),
        }
    }

    /// Exact limit as x -> +infinity.
    pub fn limit_at_inf(&self) -> Limit {
        if self.is_zero() {
            return Limit::Finite(Rat::int(0));
        }
        let dn = self.num.degree().unwrap();
        let dd = self.den.degree().unwrap();
        let cn = self.num.leading().unwrap();
        let cd = self.den.leading().unwrap();
        match dn.cmp(&dd) {
            std::cmp::Ordering::Less => Limit::Finite(Rat::int(0)),
            std::cmp::Ordering::Equal => Limit::Finite(cn.div(cd)),
            std::cmp::Ordering::Greater => Limit::Infinite(cn.signum() * cd.signum()),
        }
    }

    /// True when the denominator has no root at x (cheap pole test).
    pub fn defined_at(&self, x: &Rat) -> bool {
        !Coeff::is_zero(&self.den.eval(x))
    }
}

/// Horner evaluation of a polynomial at a rational function.
pub fn poly_of_ratfn(p: &QPoly, r: &RatFn) -> RatFn {
    let mut acc = RatFn::zero();
    for c in (0..p.coeffs().len()).rev() {
        acc = acc.mul(r).add(&RatFn::constant(p.coeff(c)));
    }
    acc
}

impl std::fmt::Debug for RatFn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl std::fmt::Display for RatFn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x_over_1px() -> RatFn {
        // x / (x + 1)
        RatFn::new(Poly::from_i64_coeffs(&[0, 1]), Poly::from_i64_coeffs(&[1, 1]))
    }

    #[test]
    fn derivative_examples() {
        // (x/(x+1))' = 1/(x+1)^2
        let r = x_over_1px();
        let expect = RatFn::new(Poly::from_i64_coeffs(&[1]), Poly::from_i64_coeffs(&[1, 2, 1]));
        assert_eq!(r.derivative(), expect);

        // second derivative: -2/(x+1)^3
        let expect2 = RatFn::new(
            Poly::from_i64_coeffs(&[-2]),
            Poly::from_i64_coeffs(&[1, 3, 3, 1]),
        );
        assert_eq!(r.derivative_n(2), expect2);

        // (1/(1+x^2))' = -2x/(1+x^2)^2
        let r = RatFn::new(Poly::from_i64_coeffs(&[1]), Poly::from_i64_coeffs(&[1, 0, 1]));
        let expect = RatFn::new(
            Poly::from_i64_coeffs(&[0, -2]),
            Poly::from_i64_coeffs(&[1, 0, 2, 0, 1]),
        );
        assert_eq!(r.derivative(), expect);
    }

    #[test]
    fn hat_transform_examples() {
        // r(x) = x -> -1/x
        let r = RatFn::x();
        assert_eq!(
            r.hat(),
            RatFn::new(Poly::from_i64_coeffs(&[-1]), Poly::from_i64_coeffs(&[0, 1]))
        );
        // r = 1/(1+x) -> -x/(x+1)
        let r = RatFn::new(Poly::from_i64_coeffs(&[1]), Poly::from_i64_coeffs(&[1, 1]));
        assert_eq!(
            r.hat(),
            RatFn::new(Poly::from_i64_coeffs(&[0, -1]), Poly::from_i64_coeffs(&[1, 1]))
        );
        // constants map to their negation
        let c = RatFn::constant(Rat::new(5, 3));
        assert_eq!(c.hat(), RatFn::constant(Rat::new(-5, 3)));
    }

    #[test]
    fn normal_form_is_canonical() {
        // (x^2-1)/(2x-2) reduces to (x+1)/2 with monic denominator
        let r = RatFn::new(Poly::from_i64_coeffs(&[-1, 0, 1]), Poly::from_i64_coeffs(&[-2, 2]));
        assert_eq!(
            r,
            RatFn::new(Poly::from_i64_coeffs(&[1, 1]), Poly::from_i64_coeffs(&[2]))
        );
        assert_eq!(r.den().leading().cloned(), Some(Rat::int(1)));
    }

    #[test]
    fn limits() {
        let r = x_over_1px();
        assert_eq!(r.limit_at_zero(), Limit::Finite(Rat::int(0)));
        assert_eq!(r.limit_at_inf(), Limit::Finite(Rat::int(1)));
        let s = r.recip(); // (x+1)/x
        assert_eq!(s.limit_at_zero(), Limit::Infinite(1));
    }

    #[test]
    fn substitution_round_trip() {
        let r = RatFn::new(Poly::from_i64_coeffs(&[1, 2, 5]), Poly::from_i64_coeffs(&[3, 0, 0, 7]));
        assert_eq!(r.substitute_inverse().substitute_inverse(), r);
        let v = Rat::new(5, 3);
        assert_eq!(
            r.substitute_inverse().eval(&v),
            r.eval(&v.recip())
        );
    }
}
