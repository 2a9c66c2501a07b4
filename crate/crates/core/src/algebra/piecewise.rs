//! Piecewise rational functions on (0, \u{221e}) with exact jump bookkeeping.
//!
//! A value jump at a breakpoint is never dropped: differentiating a function
//! whose j-th derivative jumps produces a Dirac term, and the callers decide
//! what that means (kernel construction, Dirac-mass extraction, membership
//! testing in the measure sense all hang off this record).

use super::poly::QPoly;
use super::ratfn::RatFn;
use super::scalar::{Coeff, Rat};

/// Piecewise rational function: `pieces[i]` lives on `[breaks[i-1], breaks[i])`
/// (first piece starts at 0+, last piece is unbounded). Evaluation at a
/// breakpoint uses the right piece.
#[derive(Clone, PartialEq)]
pub struct PiecewiseRatFn {
    breaks: Vec<Rat>,
    pieces: Vec<RatFn>,
}

impl PiecewiseRatFn {
    pub fn new(breaks: Vec<Rat>, pieces: Vec<RatFn>) -> Self {
        assert_eq!(pieces.len(), breaks.len() + 1, "pieces must cover (0,inf)");
        assert!(
            breaks.windows(2).all(|w| w[0] < w[1]),
            "breakpoints must be strictly increasing"
        );
        assert!(
            breaks.iter().all(|b| b.is_positive()),
            "breakpoints must lie in (0,inf)"
        );
        PiecewiseRatFn { breaks, pieces }
    }

    pub fn global(r: RatFn) -> Self {
        PiecewiseRatFn {
            breaks: Vec::new(),
            pieces: vec![r],
        }
    }

    /// Two pieces split at `at`.
    pub fn split(at: Rat, left: RatFn, right: RatFn) -> Self {
        PiecewiseRatFn::new(vec![at], vec![left, right])
    }

    pub fn breaks(&self) -> &[Rat] {
        &self.breaks
    }

    pub fn pieces(&self) -> &[RatFn] {
        &self.pieces
    }

    /// Index of the piece containing x (right-continuous convention).
    fn piece_index(&self, x: &Rat) -> usize {
        self.breaks.iter().take_while(|b| *b <= x).count()
    }

    pub fn piece_at(&self, x: &Rat) -> &RatFn {
        &self.pieces[self.piece_index(x)]
    }

    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        self.piece_at(x).eval(x)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let idx = self
            .breaks
            .iter()
            .take_while(|b| b.to_f64() <= x)
            .count();
        self.pieces[idx].eval_f64(x)
    }

    /// One-sided values (left, right) at breakpoint index i; None on a pole.
    pub fn one_sided(&self, i: usize) -> (Option<Rat>, Option<Rat>) {
        let b = &self.breaks[i];
        (self.pieces[i].eval(b), self.pieces[i + 1].eval(b))
    }

    /// Exact value jumps (right limit minus left limit) at each breakpoint,
    /// skipping zero jumps. Panics if a piece has a pole at its breakpoint.
    pub fn jumps(&self) -> Vec<(Rat, Rat)> {
        let mut out = Vec::new();
        for i in 0..self.breaks.len() {
            let (l, r) = self.one_sided(i);
            let (l, r) = (
                l.expect("left limit finite at breakpoint"),
                r.expect("right limit finite at breakpoint"),
            );
            let jump = r.sub(&l);
            if !Coeff::is_zero(&jump) {
                out.push((self.breaks[i].clone(), jump));
            }
        }
        out
    }

    /// Classical piecewise derivative (jumps of self are NOT differentiated;
    /// read them off with [`jumps`](Self::jumps) first if they matter).
    pub fn derivative(&self) -> Self {
        self.map_pieces(|p| p.derivative())
    }

    pub fn derivative_n(&self, order: usize) -> Self {
        let mut f = self.clone();
        for _ in 0..order {
            f = f.derivative();
        }
        f
    }

    /// Jumps of the m-th classical derivative.
    pub fn jumps_of_derivative(&self, m: usize) -> Vec<(Rat, Rat)> {
        self.derivative_n(m).jumps()
    }

    pub fn map_pieces(&self, f: impl Fn(&RatFn) -> RatFn) -> Self {
        PiecewiseRatFn {
            breaks: self.breaks.clone(),
            pieces: self.pieces.iter().map(f).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map_pieces(|p| p.neg())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        self.map_pieces(|p| p.scale(c))
    }

    pub fn mul_ratfn(&self, r: &RatFn) -> Self {
        self.map_pieces(|p| p.mul(r))
    }

    pub fn mul_poly(&self, q: &QPoly) -> Self {
        let r = RatFn::from_poly(q.clone());
        self.mul_ratfn(&r)
    }

    /// Multiply by x^n (n may be negative).
    pub fn mul_xpow(&self, n: i64) -> Self {
        self.map_pieces(|p| p.mul_xpow(n))
    }

    fn merge_with(&self, rhs: &Self, op: impl Fn(&RatFn, &RatFn) -> RatFn) -> Self {
        let mut breaks: Vec<Rat> = self
            .breaks
            .iter()
            .chain(rhs.breaks.iter())
            .cloned()
            .collect();
        breaks.sort();
        breaks.dedup();
        let mut pieces = Vec::with_capacity(breaks.len() + 1);
        // representative point strictly inside each interval
        for i in 0..=breaks.len() {
            let probe = representative(&breaks, i);
            pieces.push(op(self.piece_at(&probe), rhs.piece_at(&probe)));
        }
        PiecewiseRatFn { breaks, pieces }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.merge_with(rhs, |a, b| a.add(b))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.merge_with(rhs, |a, b| a.sub(b))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.merge_with(rhs, |a, b| a.mul(b))
    }

    /// Exact substitution x -> x/c (c > 0), rescaling the breakpoints to c*b.
    pub fn stretch_arg(&self, c: &Rat) -> Self {
        assert!(c.is_positive());
        let inv = c.recip();
        PiecewiseRatFn {
            breaks: self.breaks.iter().map(|b| b.mul(c)).collect(),
            pieces: self.pieces.iter().map(|p| p.scale_arg(&inv)).collect(),
        }
    }
}

fn representative(breaks: &[Rat], i: usize) -> Rat {
    let half = Rat::new(1, 2);
    if breaks.is_empty() {
        return Rat::int(1);
    }
    if i == 0 {
        return breaks[0].mul(&half);
    }
    if i == breaks.len() {
        return breaks[i - 1].add(&Rat::int(1));
    }
    breaks[i - 1].add(&breaks[i]).mul(&half)
}

impl std::fmt::Debug for PiecewiseRatFn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "piecewise[(0")?;
        for (i, p) in self.pieces.iter().enumerate() {
            if i > 0 {
                write!(f, ", [{}", self.breaks[i - 1])?;
            }
            write!(f, ",..): {:?}", p)?;
        }
        write!(f, "]")
    }
}
