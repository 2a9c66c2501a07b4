//! Dense univariate polynomials over a [`Coeff`] scalar.
//!
//! Coefficients are stored by ascending power with trailing zeros trimmed,
//! so the zero polynomial is the empty list and `degree` is `len - 1`.

use super::scalar::{Coeff, Rat};

#[derive(Clone, PartialEq)]
pub struct Poly<C: Coeff> {
    coeffs: Vec<C>,
}

pub type QPoly = Poly<Rat>;

impl<C: Coeff> Poly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Poly::new(vec![c])
    }

    pub fn x() -> Self {
        Poly::new(vec![C::zero(), C::one()])
    }

    /// c * x^n
    pub fn monomial(c: C, n: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![C::zero(); n + 1];
        coeffs[n] = c;
        Poly { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| C::from_i64(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    /// Order of vanishing at 0 (index of the first nonzero coefficient).
    /// None for the zero polynomial.
    pub fn ord_at_zero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64();
        }
        acc
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Multiply by x^n.
    pub fn mul_xpow(&self, n: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![C::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i).add(&rhs.coeff(i)));
        }
        Poly::new(coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Poly::new(coeffs)
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul(&C::from_i64(i as i64)))
                .collect(),
        )
    }

    pub fn derivative_n(&self, order: usize) -> Self {
        let mut p = self.clone();
        for _ in 0..order {
            if p.is_zero() {
                break;
            }
            p = p.derivative();
        }
        p
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = vec![C::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i + 1] = c.div(&C::from_i64(i as i64 + 1));
        }
        Poly::new(coeffs)
    }

    /// Composition self(inner(x)).
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Poly::constant(c.clone()));
        }
        acc
    }

    /// self(x + c), by Horner composition with (x + c).
    pub fn taylor_shift(&self, c: &C) -> Self {
        self.compose(&Poly::new(vec![c.clone(), C::one()]))
    }

    /// self(c * x).
    pub fn scale_arg(&self, c: &C) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        let mut p = C::one();
        for a in &self.coeffs {
            coeffs.push(a.mul(&p));
            p = p.mul(c);
        }
        Poly::new(coeffs)
    }

    /// Coefficients reversed: x^deg * self(1/x). Zero polynomial maps to itself.
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Poly::new(coeffs)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => {
                if *l == C::one() {
                    self.clone()
                } else {
                    let inv = C::one().div(l);
                    self.scale(&inv)
                }
            }
        }
    }

    /// Euclidean division: (quotient, remainder) with deg rem < deg rhs.
    pub fn divrem(&self, rhs: &Self) -> (Self, Self) {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        let drhs = rhs.degree().unwrap();
        let lead = rhs.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some(drem) = rem.degree() {
            if drem < drhs {
                break;
            }
            let c = rem.leading().unwrap().div(&lead);
            let term = Poly::monomial(c, drem - drhs);
            quot = quot.add(&term);
            rem = rem.sub(&term.mul(rhs));
        }
        (quot, rem)
    }

    /// Monic gcd by the Euclidean algorithm (exact scalars only).
    pub fn gcd(&self, rhs: &Self) -> Self {
        debug_assert!(C::EXACT, "polynomial gcd needs exact coefficients");
        let mut a = self.monic();
        let mut b = rhs.monic();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        if a.is_zero() {
            Poly::zero()
        } else {
            a
        }
    }

    pub fn map_coeff<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl Poly<Rat> {
    pub fn to_float<D: Coeff>(&self) -> Poly<D> {
        self.map_coeff(|c| D::from_rat(c))
    }
}

impl<C: Coeff> std::fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self)
    }
}

impl<C: Coeff> std::fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}*x", c)?,
                _ => write!(f, "{}*x^{}", c, i)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn derivative_basics() {
        // d/dx (2 - x) = -1
        let p: QPoly = Poly::from_i64_coeffs(&[2, -1]);
        assert_eq!(p.derivative(), Poly::from_i64_coeffs(&[-1]));
        // d^2/dx^2 x^2 = 2
        let p: QPoly = Poly::from_i64_coeffs(&[0, 0, 1]);
        assert_eq!(p.derivative_n(2), Poly::from_i64_coeffs(&[2]));
        // order beyond the degree kills the polynomial
        let p: QPoly = Poly::from_i64_coeffs(&[6, -4, 1]);
        assert!(p.derivative_n(3).is_zero());
    }

    #[test]
    fn divrem_and_gcd() {
        // (x^2 - 1) = (x - 1)(x + 1)
        let a: QPoly = Poly::from_i64_coeffs(&[-1, 0, 1]);
        let b: QPoly = Poly::from_i64_coeffs(&[-1, 1]);
        let (quot, rem) = a.divrem(&b);
        assert!(rem.is_zero());
        assert_eq!(quot, Poly::from_i64_coeffs(&[1, 1]));

        let c: QPoly = Poly::from_i64_coeffs(&[1, 1]); // x + 1
        let g = a.gcd(&c.mul(&c));
        assert_eq!(g, c.monic());
    }

    #[test]
    fn taylor_shift_and_scale() {
        // p(x) = x^2, p(x+1) = 1 + 2x + x^2
        let p: QPoly = Poly::from_i64_coeffs(&[0, 0, 1]);
        assert_eq!(p.taylor_shift(&q(1, 1)), Poly::from_i64_coeffs(&[1, 2, 1]));
        // p(2x) = 4x^2
        assert_eq!(p.scale_arg(&q(2, 1)), Poly::from_i64_coeffs(&[0, 0, 4]));
    }

    #[test]
    fn antiderivative_inverts_derivative() {
        let p: QPoly = Poly::new(vec![q(1, 2), q(-3, 1), q(5, 7)]);
        assert_eq!(p.antiderivative().derivative(), p);
    }
}
