//! Dense univariate polynomials and Laurent polynomials over an exact
//! coefficient ring.
//!
//! The same [`DensePoly`] type backs the numerator and denominator of a
//! [`Scalar`](crate::Scalar) (coefficients in Q) and the generators of central
//! ideals (coefficients in Q(s)).

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

/// A commutative ring with exact equality.
///
/// Arithmetic is spelled out as methods so generic containers do not need
/// higher-ranked bounds on reference operators.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
}

/// A [`Ring`] in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Polynomial with coefficients stored lowest degree first; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DensePoly<F> {
    coeffs: Vec<F>,
}

impl<F: Ring> DensePoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// `c * X^deg`
    pub fn monomial(c: F, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![F::zero(); deg + 1];
        coeffs[deg] = c;
        Self { coeffs }
    }

    pub fn x() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.times(c)).collect())
    }

    /// Multiplies by `X^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![F::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.times(x).plus(c);
        }
        acc
    }

    /// Substitutes another polynomial for the variable.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(c.clone());
        }
        acc
    }

    /// `p(X) -> p(c*X)`
    pub fn scale_var(&self, c: &F) -> Self {
        let mut pw = F::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.times(&pw));
            pw = pw.times(c);
        }
        Self::new(out)
    }
}

impl<F: Field> DensePoly<F> {
    /// Euclidean division; `None` when `d` is zero.
    pub fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        let dd = d.degree()?;
        let lead_inv = d.leading()?.inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![F::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd].times(&lead_inv);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].minus(&c.times(dc));
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Some((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, d: &Self) -> Option<Self> {
        self.div_rem(d).map(|(_, r)| r)
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).is_some_and(|r| r.is_zero())
    }

    /// Monic associate; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading().and_then(|l| l.inv()) {
            Some(inv) if !inv.is_one() => self.scale(&inv),
            _ => self.clone(),
        }
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|l| l.is_one())
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a
    }

    /// Monic least common multiple; zero if either input is zero.
    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(other);
        let (q, _) = self.div_rem(&g).expect("gcd is nonzero");
        (&q * other).monic()
    }

    /// Inverse of `a` modulo `m`, when `gcd(a, m) = 1`.
    pub fn inverse_mod(&self, m: &Self) -> Option<Self> {
        let (mut r0, mut r1) = (m.clone(), self.rem(m)?);
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let t = &t0 - &(&q * &t1);
            r0 = r1;
            r1 = r;
            t0 = t1;
            t1 = t;
        }
        if r0.degree() != Some(0) {
            return None;
        }
        let c = r0.coeffs[0].inv()?;
        t0.scale(&c).rem(m)
    }
}

impl<'a, F: Ring> Add for &'a DensePoly<F> {
    type Output = DensePoly<F>;
    fn add(self, rhs: Self) -> DensePoly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.plus(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        DensePoly::new(out)
    }
}

impl<'a, F: Ring> Sub for &'a DensePoly<F> {
    type Output = DensePoly<F>;
    fn sub(self, rhs: Self) -> DensePoly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.minus(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.negate(),
                (None, None) => unreachable!(),
            });
        }
        DensePoly::new(out)
    }
}

impl<'a, F: Ring> Mul for &'a DensePoly<F> {
    type Output = DensePoly<F>;
    fn mul(self, rhs: Self) -> DensePoly<F> {
        if self.is_zero() || rhs.is_zero() {
            return DensePoly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        DensePoly::new(out)
    }
}

impl<'a, F: Ring> Neg for &'a DensePoly<F> {
    type Output = DensePoly<F>;
    fn neg(self) -> DensePoly<F> {
        DensePoly { coeffs: self.coeffs.iter().map(|c| c.negate()).collect() }
    }
}

/// `X^low * body(X)` with `body(0) != 0`, or the zero polynomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly<F> {
    low: i64,
    body: DensePoly<F>,
}

impl<F: Ring> LaurentPoly<F> {
    pub fn new(low: i64, body: DensePoly<F>) -> Self {
        if body.is_zero() {
            return Self::zero();
        }
        let skip = body.coeffs().iter().take_while(|c| c.is_zero()).count();
        if skip == 0 {
            return Self { low, body };
        }
        let body = DensePoly::new(body.coeffs()[skip..].to_vec());
        Self { low: low + skip as i64, body }
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, F)>) -> Self {
        let terms: Vec<_> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let Some(low) = terms.iter().map(|(e, _)| *e).min() else {
            return Self::zero();
        };
        let high = terms.iter().map(|(e, _)| *e).max().unwrap();
        let mut coeffs = vec![F::zero(); (high - low) as usize + 1];
        for (e, c) in terms {
            let slot = &mut coeffs[(e - low) as usize];
            *slot = slot.plus(&c);
        }
        Self::new(low, DensePoly::new(coeffs))
    }

    pub fn zero() -> Self {
        Self { low: 0, body: DensePoly::zero() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::new(0, DensePoly::constant(c))
    }

    pub fn monomial(c: F, e: i64) -> Self {
        Self::new(e, DensePoly::constant(c))
    }

    pub fn from_poly(p: DensePoly<F>) -> Self {
        Self::new(0, p)
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// Lowest exponent (0 for the zero polynomial).
    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.low + self.body.degree().map_or(0, |d| d as i64)
    }

    pub fn body(&self) -> &DensePoly<F> {
        &self.body
    }

    pub fn coeff(&self, e: i64) -> F {
        if e < self.low {
            return F::zero();
        }
        self.body.coeff((e - self.low) as usize)
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &F)> {
        self.body
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    /// The ordinary polynomial, when no negative exponents occur.
    pub fn to_poly(&self) -> Option<DensePoly<F>> {
        if self.is_zero() {
            return Some(DensePoly::zero());
        }
        (self.low >= 0).then(|| self.body.shift_up(self.low as usize))
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.low, self.body.scale(c))
    }

    /// `p(X) -> p(c*X)` for an invertible `c`.
    pub fn scale_var(&self, c: &F, c_pow_low: &F) -> Self {
        Self::new(self.low, self.body.scale_var(c).scale(c_pow_low))
    }

    pub fn pow(&self, e: u32) -> Self {
        Self::new(self.low * e as i64, self.body.pow(e))
    }
}

impl<'a, F: Ring> Add for &'a LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn add(self, rhs: Self) -> LaurentPoly<F> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let a = self.body.shift_up((self.low - low) as usize);
        let b = rhs.body.shift_up((rhs.low - low) as usize);
        LaurentPoly::new(low, &a + &b)
    }
}

impl<'a, F: Ring> Sub for &'a LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn sub(self, rhs: Self) -> LaurentPoly<F> {
        self + &(-rhs)
    }
}

impl<'a, F: Ring> Mul for &'a LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn mul(self, rhs: Self) -> LaurentPoly<F> {
        LaurentPoly::new(self.low + rhs.low, &self.body * &rhs.body)
    }
}

impl<'a, F: Ring> Neg for &'a LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn neg(self) -> LaurentPoly<F> {
        LaurentPoly { low: self.low, body: -&self.body }
    }
}
