//! The hyperbolic chart: functions of w = v + 1/v represented exactly as
//! rational functions of v on the branch v >= 1, where d/dw is the exact
//! operator (v^2/(v^2-1)) d/dv. Keeping everything in v means no radicals
//! enter stored values; sqrt(w^2-4) shows up only at evaluation time.

use super::poly::QPoly;
use super::ratfn::{poly_of_ratfn, RatFn};
use super::scalar::{Coeff, Rat};

#[derive(Clone, PartialEq)]
pub struct VFieldFn {
    f: RatFn,
}

impl VFieldFn {
    pub fn from_ratfn_in_v(f: RatFn) -> Self {
        VFieldFn { f }
    }

    /// Embed a polynomial in w via w = v + 1/v.
    pub fn from_w_poly(p: &QPoly) -> Self {
        let w = RatFn::x().add(&RatFn::x().recip());
        VFieldFn {
            f: poly_of_ratfn(p, &w),
        }
    }

    pub fn as_ratfn_in_v(&self) -> &RatFn {
        &self.f
    }

    /// Exact derivative with respect to w: (v^2/(v^2-1)) df/dv.
    pub fn d_dw(&self) -> Self {
        let v2 = QPoly::from_i64_coeffs(&[0, 0, 1]);
        let v2m1 = QPoly::from_i64_coeffs(&[-1, 0, 1]);
        let factor = RatFn::new(v2, v2m1);
        VFieldFn {
            f: self.f.derivative().mul(&factor),
        }
    }

    pub fn d_dw_n(&self, n: usize) -> Self {
        let mut g = self.clone();
        for _ in 0..n {
            g = g.d_dw();
        }
        g
    }

    /// Exact evaluation at a rational v > 1; None on a pole.
    pub fn eval_at_v(&self, v: &Rat) -> Option<Rat> {
        self.f.eval(v)
    }

    /// Evaluate at w >= 2 through v = (w + sqrt(w^2-4))/2.
    pub fn eval_at_w(&self, w: f64) -> f64 {
        let v = 0.5 * (w + (w * w - 4.0).max(0.0).sqrt());
        self.f.eval_f64(v)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        VFieldFn {
            f: self.f.add(&rhs.f),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        VFieldFn {
            f: self.f.sub(&rhs.f),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        VFieldFn {
            f: self.f.mul(&rhs.f),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        VFieldFn { f: self.f.scale(c) }
    }

    pub fn has_pole_at_chart_boundary(&self) -> bool {
        Coeff::is_zero(&self.f.den().eval(&Rat::int(1)))
    }
}

impl std::fmt::Debug for VFieldFn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "v-chart {:?}", self.f)
    }
}
