//! The coefficient field F = Q(s). Every q-deformed family uses q = s², so
//! half-integer powers of q are plain powers of s.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{DensePoly, Field, Ring};

/// Polynomials in `s` with rational coefficients.
pub type QPoly = DensePoly<BigRational>;

/// A reduced fraction `num/den` in Q(s): `den` is monic, `gcd(num, den) = 1`,
/// and zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: QPoly,
    den: QPoly,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exponent of the largest power of `s` dividing `p` (p nonzero).
fn s_valuation(p: &QPoly) -> usize {
    p.coeffs().iter().take_while(|c| Zero::is_zero(*c)).count()
}

fn is_s_monomial(p: &QPoly) -> bool {
    p.degree().is_some_and(|d| s_valuation(p) == d)
}

fn drop_low(p: &QPoly, k: usize) -> QPoly {
    QPoly::new(p.coeffs()[k..].to_vec())
}

/// gcd with fast paths for the monomial denominators that dominate in practice.
fn qgcd(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_constant() && !a.is_zero() || b.is_constant() && !b.is_zero() {
        return QPoly::one();
    }
    if is_s_monomial(a) && !b.is_zero() {
        let k = s_valuation(a).min(s_valuation(b));
        return QPoly::monomial(rat(1), k);
    }
    if is_s_monomial(b) && !a.is_zero() {
        let k = s_valuation(a).min(s_valuation(b));
        return QPoly::monomial(rat(1), k);
    }
    if let Some(gp) = gcd_mod_p(a, b) {
        if gp.len() == 1 {
            return QPoly::one();
        }
        // deg gcd ≤ deg gp, so a common divisor of that degree is the gcd
        if let Some(g) = lift(&gp) {
            if divides_exactly(&g, a) && divides_exactly(&g, b) {
                return g;
            }
        }
    }
    a.gcd(b)
}

const P: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64) -> u64 {
    powmod(a, P - 2)
}

fn reduce_int(n: &BigInt) -> u64 {
    let r = n % BigInt::from(P);
    let r = if r.is_negative() { r + BigInt::from(P) } else { r };
    r.iter_u64_digits().next().unwrap_or(0)
}

/// Image of `p` in `F_P[s]`; `None` if a denominator or the leading
/// coefficient vanishes mod `P`.
fn image_mod_p(p: &QPoly) -> Option<Vec<u64>> {
    let mut out = Vec::with_capacity(p.coeffs().len());
    for c in p.coeffs() {
        let d = reduce_int(c.denom());
        if d == 0 {
            return None;
        }
        out.push(mulmod(reduce_int(c.numer()), invmod(d)));
    }
    (out.last() != Some(&0)).then_some(out)
}

/// Monic gcd of the images in `F_P[s]`. Its degree bounds the degree of the
/// true gcd whenever both leading coefficients survive reduction.
fn gcd_mod_p(a: &QPoly, b: &QPoly) -> Option<Vec<u64>> {
    let (mut x, mut y) = (image_mod_p(a)?, image_mod_p(b)?);
    if x.is_empty() || y.is_empty() {
        return None;
    }
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let inv = invmod(*y.last().unwrap());
        while x.len() >= y.len() {
            let c = mulmod(*x.last().unwrap(), inv);
            let shift = x.len() - y.len();
            for (j, &yc) in y.iter().enumerate() {
                x[shift + j] = (x[shift + j] + P - mulmod(c, yc)) % P;
            }
            while x.last() == Some(&0) {
                x.pop();
            }
        }
        std::mem::swap(&mut x, &mut y);
    }
    let inv = invmod(*x.last().unwrap());
    Some(x.into_iter().map(|c| mulmod(c, inv)).collect())
}

/// Smallest `n/d ≡ r (mod P)` with `|n|, d < 2^30`.
fn rational_reconstruct(r: u64) -> Option<BigRational> {
    const BOUND: i128 = 1 << 30;
    let (mut r0, mut r1) = (P as i128, r as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 >= BOUND {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if t1 == 0 || t1.abs() >= BOUND {
        return None;
    }
    let (n, d) = if t1 < 0 { (-r1, -t1) } else { (r1, t1) };
    Some(BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn lift(gp: &[u64]) -> Option<QPoly> {
    gp.iter().map(|&c| rational_reconstruct(c)).collect::<Option<Vec<_>>>().map(QPoly::new)
}

fn divides_exactly(g: &QPoly, a: &QPoly) -> bool {
    a.rem(g).is_some_and(|r| r.is_zero())
}

fn exact_div(a: &QPoly, b: &QPoly) -> QPoly {
    if b.is_one() {
        return a.clone();
    }
    if is_s_monomial(b) && b.is_monic() {
        return drop_low(a, b.degree().unwrap());
    }
    let (q, r) = a.div_rem(b).expect("nonzero divisor");
    debug_assert!(r.is_zero());
    q
}

impl Scalar {
    /// Builds `num/den` and reduces it.
    pub fn from_fraction(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = qgcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (exact_div(&num, &g), exact_div(&den, &g))
        };
        let lead = den.leading().expect("nonzero denominator").clone();
        if One::is_one(&lead) {
            Self { num, den }
        } else {
            let inv = lead.recip();
            Self { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn zero() -> Self {
        Self { num: QPoly::zero(), den: QPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self { num: QPoly::constant(r), den: QPoly::one() }
    }

    /// `n/d` as a constant; panics on `d = 0`.
    pub fn ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Self::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_poly(num: QPoly) -> Self {
        Self { num, den: QPoly::one() }
    }

    /// The deformation symbol `s`.
    pub fn s() -> Self {
        Self::s_pow(1)
    }

    /// `q = s²`.
    pub fn q() -> Self {
        Self::s_pow(2)
    }

    /// `s^k` for any integer `k`.
    pub fn s_pow(k: i64) -> Self {
        let mono = QPoly::monomial(rat(1), k.unsigned_abs() as usize);
        if k >= 0 {
            Self { num: mono, den: QPoly::one() }
        } else {
            Self { num: QPoly::one(), den: mono }
        }
    }

    /// `q^j = s^(2j)`.
    pub fn q_pow(j: i64) -> Self {
        Self::s_pow(2 * j)
    }

    pub fn numer(&self) -> &QPoly {
        &self.num
    }

    pub fn denom(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Rational constant value, when the scalar does not involve `s`.
    pub fn as_rational(&self) -> Option<BigRational> {
        (self.num.is_constant() && self.den.is_one()).then(|| self.num.coeff(0))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power; negative exponents invert (error on `0^-k`).
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs() as u32;
        if base.den.is_one() {
            return Ok(Self::from_poly(base.num.pow(e)));
        }
        // num and den stay coprime under powers
        Ok(Self { num: base.num.pow(e), den: base.den.pow(e) })
    }

    /// A square root in Q(s), if one exists.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = poly_sqrt(&self.num)?;
        let d = poly_sqrt(&self.den)?;
        let r = Self::reduce(n, d);
        (&r * &r == *self).then_some(r)
    }

    pub fn is_square(&self) -> bool {
        self.sqrt().is_some()
    }

    /// Single-term numerator over a unit denominator, so it can be printed
    /// next to a monomial without parentheses.
    fn is_atomic(&self) -> bool {
        self.den.is_one() && self.num.coeffs().iter().filter(|c| !Zero::is_zero(*c)).count() <= 1
    }

    fn is_negative_lead(&self) -> bool {
        self.num.leading().is_some_and(|c| c.is_negative())
    }
}

/// Square root of a polynomial over Q by coefficient recursion from the top.
fn poly_sqrt(p: &QPoly) -> Option<QPoly> {
    let deg = p.degree()?;
    if deg % 2 == 1 {
        return None;
    }
    let lead = rat_sqrt(p.leading()?)?;
    let half = deg / 2;
    // r = sum r_i s^i, r_half = lead; solve downward
    let mut r = vec![rat(0); half + 1];
    r[half] = lead.clone();
    let two_lead = &lead * rat(2);
    for k in (0..half).rev() {
        // coefficient of s^(half + k) in r^2
        let target = p.coeff(half + k);
        let mut acc = rat(0);
        for i in (k + 1)..half {
            let j = half + k - i;
            if j > half || j <= k {
                continue;
            }
            acc += &r[i] * &r[j];
        }
        r[k] = (target - acc) / &two_lead;
    }
    let root = QPoly::new(r);
    (&root * &root == *p).then_some(root)
}

fn rat_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| BigRational::new(n, d))
}

impl Ring for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Scalar::is_one(self)
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

impl Field for Scalar {
    fn inv(&self) -> Option<Self> {
        Scalar::inv(self).ok()
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar::from_poly(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return Scalar::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let g = qgcd(&self.den, &rhs.den);
        let a_cof = exact_div(&rhs.den, &g);
        let b_cof = exact_div(&self.den, &g);
        let num = &(&self.num * &a_cof) + &(&rhs.num * &b_cof);
        Scalar::reduce(num, &self.den * &a_cof)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar::from_poly(&self.num * &rhs.num);
        }
        let g1 = qgcd(&self.num, &rhs.den);
        let g2 = qgcd(&rhs.num, &self.den);
        let num = &exact_div(&self.num, &g1) * &exact_div(&rhs.num, &g2);
        let den = &exact_div(&self.den, &g2) * &exact_div(&rhs.den, &g1);
        // already coprime; only the leading coefficient needs fixing
        Scalar::reduce_unit(num, den)
    }
}

impl Scalar {
    fn reduce_unit(num: QPoly, den: QPoly) -> Self {
        let lead = den.leading().expect("nonzero denominator").clone();
        if One::is_one(&lead) {
            Self { num, den }
        } else {
            let inv = lead.recip();
            Self { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }
}

/// Panics on division by zero; use [`Scalar::checked_div`] for a fallible form.
impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

// Only used for deterministic ordering (e.g. in reports); not a field order.
impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.to_string().cmp(&other.to_string())
    }
}

/// Renders a polynomial over Q in `var`, highest degree first.
pub(crate) fn render_qpoly(p: &QPoly, var: &str) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if Zero::is_zero(c) {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        let body = if mono.is_empty() {
            a.to_string()
        } else if One::is_one(&a) {
            mono
        } else {
            format!("{a}*{mono}")
        };
        parts.push((neg, body));
    }
    join_signed(parts)
}

/// Joins `(negative, magnitude)` summands as `a - b + c`.
pub(crate) fn join_signed(parts: Vec<(bool, String)>) -> String {
    if parts.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (neg, body)) in parts.into_iter().enumerate() {
        match (k, neg) {
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (0, false) => out.push_str(&body),
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
        }
    }
    out
}

/// A summand `c * mono` as `(negative, magnitude)`. An empty `mono` is the unit
/// monomial.
pub(crate) fn scalar_term(c: &Scalar, mono: &str) -> (bool, String) {
    let neg = c.is_negative_lead();
    let a = if neg { -c } else { c.clone() };
    let coeff = if a.is_atomic() { a.to_string() } else { format!("({a})") };
    let body = if mono.is_empty() {
        coeff
    } else if a.is_one() {
        mono.to_string()
    } else {
        format!("{coeff}*{mono}")
    };
    (neg, body)
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = render_qpoly(&self.num, "s");
        if self.den.is_one() {
            return f.write_str(&num);
        }
        let single = |p: &QPoly| p.coeffs().iter().filter(|c| !Zero::is_zero(*c)).count() == 1;
        let num = if single(&self.num) && !self.num.leading().unwrap().is_negative() || self.num.is_constant() {
            num
        } else {
            format!("({num})")
        };
        let den = render_qpoly(&self.den, "s");
        let den = if single(&self.den) && self.den.is_monic() { den } else { format!("({den})") };
        write!(f, "{num}/{den}")
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}
