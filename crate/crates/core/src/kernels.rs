//! The truncated-Laurent kernel family.
//!
//! P_k(y) = sum_{n=0}^{k} binom(2k, n+k) (-y)^n is the polynomial part of the
//! finite Laurent series (1-y)^k (1-1/y)^k. With P\u{302}_k = P_k - P_k(0),
//! the kernel is
//!
//!   Phi_k(x,t) = (1/x) ( P_k(t/x) 1_{x>=t} - P\u{302}_k(x/t) 1_{x<t} ),
//!
//! nonnegative on (0,inf) x [0,inf), and x*Phi_k(x,t) = psi_k(x/t) where
//! psi_k has a single breakpoint at 1 and is C^{2k-1} there. Differentiating
//! past that order produces the Dirac mass that makes these kernels the
//! fundamental solutions of the finite-order Stieltjes conditions; that jump
//! is computed exactly here, never symbolically as a distribution.

use crate::algebra::{
    binomial_rat, poly_of_ratfn, Coeff, PiecewiseRatFn, Poly, QPoly, Rat, RatFn,
};
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct KernelFamily {
    k: usize,
    p: QPoly,
    p_hat: QPoly,
    psi: PiecewiseRatFn,
}

impl KernelFamily {
    /// Build the order-k family with exact coefficients.
    pub fn new(k: usize) -> Self {
        let mut coeffs = Vec::with_capacity(k + 1);
        for n in 0..=k as u64 {
            let b = binomial_rat(2 * k as u64, n + k as u64);
            coeffs.push(if n % 2 == 0 { b } else { -b });
        }
        let p = Poly::new(coeffs);
        let p0 = p.coeff(0);
        let p_hat = p.sub(&Poly::constant(p0.clone()));

        // psi_k(y) = -P_hat(y) on (0,1), P_k(1/y) on [1,inf)
        let left = RatFn::from_poly(p_hat.neg());
        let right = poly_of_ratfn(&p, &RatFn::x().recip());
        let psi = PiecewiseRatFn::split(Rat::int(1), left, right);

        let fam = KernelFamily { k, p, p_hat, psi };
        debug_assert_eq!(fam.p.eval(&Rat::int(0)), binomial_rat(2 * k as u64, k as u64));
        if k >= 1 {
            // continuity at 1: P_k(1) = -P_hat_k(1); psi_0 is the indicator and jumps
            debug_assert_eq!(fam.p.eval(&Rat::int(1)), fam.p_hat.eval(&Rat::int(1)).neg());
        }
        fam
    }

    pub fn order(&self) -> usize {
        self.k
    }

    pub fn p(&self) -> &QPoly {
        &self.p
    }

    pub fn p_hat(&self) -> &QPoly {
        &self.p_hat
    }

    /// psi_k as a piecewise rational function of y = x/t.
    pub fn psi(&self) -> &PiecewiseRatFn {
        &self.psi
    }

    /// P_k(0) = binom(2k, k).
    pub fn p_at_zero(&self) -> Rat {
        self.p.coeff(0)
    }

    /// Largest order at which classical x-derivatives exist across x = t.
    pub fn max_classical_order(&self) -> usize {
        if self.k == 0 {
            0
        } else {
            2 * self.k - 1
        }
    }

    /// Exact psi_k(y).
    pub fn psi_at(&self, y: &Rat) -> Rat {
        assert!(y.is_positive(), "psi is defined on (0,inf)");
        self.psi.eval(y).expect("psi has no poles on (0,inf)")
    }

    pub fn psi_at_f64(&self, y: f64) -> f64 {
        if y >= 1.0 {
            self.p.eval_f64(1.0 / y)
        } else {
            -self.p_hat.eval_f64(y)
        }
    }

    /// Exact Phi_k(x,t) for x > 0, t >= 0.
    pub fn phi(&self, x: &Rat, t: &Rat) -> Rat {
        assert!(x.is_positive(), "phi needs x > 0");
        assert!(!t.is_negative(), "phi needs t >= 0");
        if Coeff::is_zero(t) {
            return self.p_at_zero().div(x);
        }
        self.psi_at(&x.div(t)).div(x)
    }

    pub fn phi_f64(&self, x: f64, t: f64) -> f64 {
        assert!(x > 0.0 && t >= 0.0);
        if t == 0.0 {
            return self.p_at_zero().to_f64() / x;
        }
        self.psi_at_f64(x / t) / x
    }

    /// x -> Phi_k(x, t) as an exact piecewise rational function (t > 0).
    pub fn phi_in_x(&self, t: &Rat) -> PiecewiseRatFn {
        assert!(t.is_positive());
        // x < t: -P_hat(x/t)/x ; x >= t: P(t/x)/x
        let tinv = t.recip();
        let left = RatFn::from_poly(self.p_hat.scale_arg(&tinv).neg()).mul_xpow(-1);
        let right = poly_of_ratfn(&self.p, &RatFn::x().recip().scale(t)).mul_xpow(-1);
        PiecewiseRatFn::split(t.clone(), left, right)
    }

    /// Exact i-th partial derivative of Phi_k in x.
    ///
    /// Valid on both branches; across x = t it exists classically only for
    /// i <= 2k-1, and requesting i >= 2k exactly at x = t is refused (that
    /// regime is distributional; use [`dirac_jump`](Self::dirac_jump)).
    pub fn phi_x_derivative(&self, i: usize, x: &Rat, t: &Rat) -> Result<Rat> {
        assert!(x.is_positive() && !t.is_negative());
        if Coeff::is_zero(t) {
            // binom/x differentiates cleanly
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let fall = Rat::factorial(i as u64).mul(&Rat::int(sign));
            return Ok(self.p_at_zero().mul(&fall).div(&x.powi(i as i64 + 1)));
        }
        if x == t && i > self.max_classical_order() {
            return Err(Error::DistributionalOrder {
                order: i,
                max_classical: self.max_classical_order(),
            });
        }
        let d = self.phi_in_x(t).derivative_n(i);
        Ok(d.eval(x).expect("no pole on (0,inf)"))
    }

    /// One-sided derivatives of psi_k at y = 1, orders 0..=order_max,
    /// as (left, right) pairs. They agree exactly through order 2k-1.
    pub fn psi_one_sided_derivs(&self, order_max: usize) -> Vec<(Rat, Rat)> {
        let one = Rat::int(1);
        let mut out = Vec::with_capacity(order_max + 1);
        let mut cur = self.psi.clone();
        for _ in 0..=order_max {
            let left = cur.pieces()[0].eval(&one).expect("left branch is polynomial");
            let right = cur.pieces()[1].eval(&one).expect("pole only at 0");
            out.push((left, right));
            cur = cur.derivative();
        }
        out
    }

    /// pi_k = (-1)^k (x^k psi_k(x))^{(2k-1)}, the convex piecewise-linear
    /// signature function; its slope is -(2k)! on (0,1) and 0 on (1,inf).
    pub fn pi_fn(&self) -> PiecewiseRatFn {
        assert!(self.k >= 1, "pi_k needs k >= 1");
        let f = self.psi.mul_xpow(self.k as i64).derivative_n(2 * self.k - 1);
        if self.k % 2 == 0 {
            f
        } else {
            f.neg()
        }
    }

    /// The Dirac mass of (-1)^k (x^{k+1} Phi_k(x,t))^{(2k+1)}: computed as the
    /// exact jump of the (2k)-th one-sided derivative at x = t, returned as
    /// the atom (t, (2k)! t^{-k}).
    pub fn dirac_jump(&self, t: &Rat) -> (Rat, Rat) {
        assert!(self.k >= 1, "dirac_jump needs k >= 1");
        assert!(t.is_positive());
        let h = self.phi_in_x(t).mul_xpow(self.k as i64 + 1);
        let jumps = h.jumps_of_derivative(2 * self.k);
        assert_eq!(jumps.len(), 1, "a single jump at x = t");
        let (loc, jump) = jumps.into_iter().next().unwrap();
        let mass = if self.k % 2 == 0 { jump } else { jump.neg() };
        (loc, mass)
    }

    /// binom(2k,k)^{-1} Phi_k(x,t); converges to 1/(x+t) as k grows.
    pub fn limit_ratio(&self, x: &Rat, t: &Rat) -> Rat {
        self.phi(x, t).div(&self.p_at_zero())
    }

    /// Psi_{n,k} = (-1)^{n-1} (x^{n-1} psi_k(x))^{(2n-1)}, the n-th Widder
    /// sign function; nonnegative on (0,inf) for n = 1..=k.
    pub fn widder_sign_fn(&self, n: usize) -> PiecewiseRatFn {
        assert!((1..=self.k).contains(&n));
        let f = self
            .psi
            .mul_xpow(n as i64 - 1)
            .derivative_n(2 * n - 1);
        if n % 2 == 1 {
            f
        } else {
            f.neg()
        }
    }

    /// The recursion weight f_{n,k}(u) = (-1)^n u^{n+1} (u^n psi_k(u))^{(2n+1)}
    /// restricted to u in (0,1], where it is the polynomial the Section-4
    /// recursion integrates against.
    pub fn recursion_weight(&self, n: usize) -> RatFn {
        assert!(n < self.k && n >= 1);
        let inner = self.p_hat.neg().mul_xpow(n); // u^n psi_k(u) on (0,1)
        let d = inner.derivative_n(2 * n + 1);
        let r = RatFn::from_poly(d).mul_xpow(n as i64 + 1);
        if n % 2 == 0 {
            r
        } else {
            r.neg()
        }
    }
}

/// Endpoint criterion: a polynomial with (-1)^i P^{(i)}(0) > 0 and
/// (-1)^i P^{(i)}(1) > 0 for all i = 0..=deg is monotone of full order,
/// hence positive, on [0,1]. Weak inequalities allowed when `strict` is
/// false.
pub fn endpoint_monotone_criterion(p: &QPoly, strict: bool) -> bool {
    let mut cur = p.clone();
    let zero = Rat::int(0);
    let one = Rat::int(1);
    let mut sign = 1i64;
    loop {
        let a = cur.eval(&zero).mul(&Rat::int(sign));
        let b = cur.eval(&one).mul(&Rat::int(sign));
        let ok = if strict {
            a.is_positive() && b.is_positive()
        } else {
            !a.is_negative() && !b.is_negative()
        };
        if !ok {
            return false;
        }
        if cur.is_constant() {
            return true;
        }
        cur = cur.derivative();
        sign = -sign;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn small_orders_have_known_polynomials() {
        let k1 = KernelFamily::new(1);
        assert_eq!(k1.p(), &Poly::from_i64_coeffs(&[2, -1])); // 2 - x
        assert_eq!(k1.p_hat(), &Poly::from_i64_coeffs(&[0, -1])); // -x

        let k2 = KernelFamily::new(2);
        assert_eq!(k2.p(), &Poly::from_i64_coeffs(&[6, -4, 1])); // 6 - 4x + x^2
    }

    #[test]
    fn psi_value_at_one_is_half_central_binomial() {
        for k in 1..=6u64 {
            let fam = KernelFamily::new(k as usize);
            let expect = binomial_rat(2 * k, k).div(&Rat::int(2));
            assert_eq!(fam.psi_at(&Rat::int(1)), expect);
        }
        assert_eq!(KernelFamily::new(1).psi_at(&Rat::int(1)), Rat::int(1));
    }

    #[test]
    fn phi_values() {
        let k1 = KernelFamily::new(1);
        assert_eq!(k1.phi(&Rat::int(1), &Rat::int(1)), Rat::int(1));
        assert_eq!(k1.phi(&Rat::int(2), &Rat::int(1)), q(3, 4));
        let k2 = KernelFamily::new(2);
        // Phi_2(x,0) = 6/x
        assert_eq!(k2.phi(&Rat::int(3), &Rat::int(0)), Rat::int(2));
        assert_eq!(k2.phi(&Rat::int(1), &Rat::int(1)), Rat::int(3));
    }

    #[test]
    fn phi_x_derivative_examples() {
        let k1 = KernelFamily::new(1);
        // below the breakpoint the branch is 1/t, free of x
        assert_eq!(
            k1.phi_x_derivative(1, &Rat::int(1), &Rat::int(2)).unwrap(),
            Rat::int(0)
        );
        // d/dx (2x-t)/x^2 at x=2, t=1 is -1/4
        assert_eq!(
            k1.phi_x_derivative(1, &Rat::int(2), &Rat::int(1)).unwrap(),
            q(-1, 4)
        );
        // distributional order refused at x = t
        assert!(k1.phi_x_derivative(2, &Rat::int(1), &Rat::int(1)).is_err());
        // ...but fine off the breakpoint
        assert!(k1.phi_x_derivative(2, &Rat::int(2), &Rat::int(1)).is_ok());
    }

    #[test]
    fn psi_is_smooth_to_order_2k_minus_1() {
        for k in 1..=6 {
            let fam = KernelFamily::new(k);
            let derivs = fam.psi_one_sided_derivs(2 * k);
            for (i, (l, r)) in derivs.iter().enumerate().take(2 * k) {
                assert_eq!(l, r, "k={k}, order {i} must match");
            }
            let (l, r) = &derivs[2 * k];
            assert_ne!(l, r, "order 2k jumps");
        }
    }

    #[test]
    fn pi_slopes_and_jump() {
        let k1 = KernelFamily::new(1);
        let pi = k1.pi_fn();
        let dpi = pi.derivative();
        assert_eq!(dpi.eval(&q(1, 2)), Some(Rat::int(-2)));
        assert_eq!(dpi.eval(&Rat::int(2)), Some(Rat::int(0)));
        // slope gap at 1 equals (2k)!
        let jumps = pi.jumps_of_derivative(1);
        assert_eq!(jumps, vec![(Rat::int(1), Rat::int(2))]);

        let k2 = KernelFamily::new(2);
        let jumps = k2.pi_fn().jumps_of_derivative(1);
        assert_eq!(jumps, vec![(Rat::int(1), Rat::int(24))]);
    }

    #[test]
    fn dirac_jump_mass() {
        let k1 = KernelFamily::new(1);
        assert_eq!(k1.dirac_jump(&Rat::int(1)), (Rat::int(1), Rat::int(2)));
        assert_eq!(k1.dirac_jump(&Rat::int(2)), (Rat::int(2), Rat::int(1)));
        let k2 = KernelFamily::new(2);
        assert_eq!(k2.dirac_jump(&Rat::int(1)), (Rat::int(1), Rat::int(24)));
    }

    #[test]
    fn limit_ratio_tends_to_cauchy_kernel() {
        // k=0 at t=0 is exact: 1/x
        let k0 = KernelFamily::new(0);
        assert_eq!(k0.limit_ratio(&Rat::int(1), &Rat::int(0)), Rat::int(1));
        // k=50 at (1,1) is within 1e-2 of 1/2
        let k50 = KernelFamily::new(50);
        let v = k50.limit_ratio(&Rat::int(1), &Rat::int(1)).to_f64();
        assert!((v - 0.5).abs() < 1e-2, "got {v}");
    }

    #[test]
    fn widder_sign_special_values() {
        // Psi_{k,k} = (2k-1)! on (0,1) and (2k-1)! x^{-2k} on (1,inf)
        for k in 1..=4usize {
            let fam = KernelFamily::new(k);
            let w = fam.widder_sign_fn(k);
            let fact = Rat::factorial(2 * k as u64 - 1);
            assert_eq!(w.eval(&q(1, 3)), Some(fact.clone()));
            let x = Rat::int(2);
            let expect = fact.div(&x.powi(2 * k as i64));
            assert_eq!(w.eval(&x), Some(expect));
        }
    }

    #[test]
    fn widder_endpoint_values_match_binomials() {
        // (-1)^i Psi_{n,k}^{(i)}(0) / ((2n-1)! i!) = binom(2k, k-n-i) binom(2n+i-1, 2n-1)
        // and at 1 with binom(2k-2n-i, k-n-i) in place of the first factor.
        for k in 1..=5usize {
            let fam = KernelFamily::new(k);
            for n in 1..=k {
                let w = fam.widder_sign_fn(n);
                let left = w.pieces()[0].clone(); // polynomial branch on (0,1)
                let norm = Rat::factorial(2 * n as u64 - 1);
                for i in 0..=(k - n) {
                    let di = left.derivative_n(i);
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    let at0 = di
                        .eval(&Rat::int(0))
                        .unwrap()
                        .mul(&Rat::int(sign))
                        .div(&norm.mul(&Rat::factorial(i as u64)));
                    let expect0 = binomial_rat(2 * k as u64, (k - n - i) as u64)
                        .mul(&binomial_rat((2 * n + i - 1) as u64, (2 * n - 1) as u64));
                    assert_eq!(at0, expect0, "k={k} n={n} i={i} at 0");

                    let at1 = di
                        .eval(&Rat::int(1))
                        .unwrap()
                        .mul(&Rat::int(sign))
                        .div(&norm.mul(&Rat::factorial(i as u64)));
                    let expect1 = binomial_rat((2 * k - 2 * n - i) as u64, (k - n - i) as u64)
                        .mul(&binomial_rat((2 * n + i - 1) as u64, (2 * n - 1) as u64));
                    assert_eq!(at1, expect1, "k={k} n={n} i={i} at 1");
                }
                // endpoint data certify nonnegativity on [0,1]
                let as_poly = left.num().clone();
                assert!(endpoint_monotone_criterion(&as_poly, false));
            }
        }
    }

    #[test]
    fn reflection_identity() {
        // psi_k(y) + psi_k(1/y) = P_k(0) exactly
        for k in 0..=5usize {
            let fam = KernelFamily::new(k);
            for y in [q(1, 3), q(3, 2), Rat::int(4), q(7, 5)] {
                let sum = fam.psi_at(&y).add(&fam.psi_at(&y.recip()));
                assert_eq!(sum, fam.p_at_zero(), "k={k}, y={y}");
            }
        }
    }

    #[test]
    fn homogeneity_of_psi_kernel() {
        // x Phi_k(x,t) depends only on x/t
        let fam = KernelFamily::new(3);
        let lam = q(7, 3);
        for (x, t) in [(Rat::int(2), Rat::int(1)), (q(1, 2), q(5, 4))] {
            let a = fam.phi(&x, &t).mul(&x);
            let (xs, ts) = (x.mul(&lam), t.mul(&lam));
            let b = fam.phi(&xs, &ts).mul(&xs);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn nonnegative_on_log_grid() {
        for k in 0..=8usize {
            let fam = KernelFamily::new(k);
            let mut x = 1e-3;
            while x < 1e3 {
                let mut t = 1e-3;
                while t < 1e3 {
                    assert!(fam.phi_f64(x, t) >= 0.0, "k={k} x={x} t={t}");
                    t *= 3.7;
                }
                x *= 3.1;
            }
        }
    }

    #[test]
    fn recursion_weight_special_case() {
        // n = k-1: (1/(2n)!) f_{n,k}(u) = (2k-1) u^k on (0,1]
        for k in 2..=4usize {
            let fam = KernelFamily::new(k);
            let n = k - 1;
            let f = fam.recursion_weight(n);
            let norm = Rat::factorial(2 * n as u64);
            let u = q(1, 3);
            let got = f.eval(&u).unwrap().div(&norm);
            let expect = Rat::int(2 * k as i64 - 1).mul(&u.powi(k as i64));
            assert_eq!(got, expect);
        }
    }
}
