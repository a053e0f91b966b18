//! Principal ideals of the central univariate subring `F[t]` or `F[t^{±1}]`,
//! residue-ring linear algebra and Sylvester resultants.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::basealg::{Automorphism, BaseElem, CentralPoly};
use crate::error::{Error, Result};
use crate::poly::{DensePoly, Ring};
use crate::scalar::{join_signed, scalar_term, Scalar};

/// Univariate polynomials over F.
pub type UPoly = DensePoly<Scalar>;

/// Renders `p` in `var`, highest degree first.
pub fn render_upoly(p: &UPoly, var: &str) -> String {
    let parts = p
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            scalar_term(c, &mono)
        })
        .collect();
    join_signed(parts)
}

/// Renders a Laurent polynomial in `var`, highest exponent first.
pub fn render_central(p: &CentralPoly, var: &str) -> String {
    let mut parts: Vec<_> = p
        .terms()
        .map(|(e, c)| {
            let mono = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            (e, scalar_term(c, &mono))
        })
        .collect();
    parts.reverse();
    join_signed(parts.into_iter().map(|(_, t)| t).collect())
}

/// Canonical generator of `p·F[t]` (monic) or `p·F[t^{±1}]` (monic with
/// nonzero constant term). Fails for negative exponents in a polynomial ring.
pub fn normalize_generator(p: &CentralPoly, laurent: bool) -> Result<UPoly> {
    if p.is_zero() {
        return Ok(UPoly::zero());
    }
    if laurent {
        Ok(p.body().monic())
    } else {
        p.to_poly().map(|q| q.monic()).ok_or(Error::NotCentralUnivariate)
    }
}

/// Image of `f` in `F[t^{±1}]/(g)` as a polynomial of degree `< deg g`.
/// `g` must have a nonzero constant term when `f` has negative exponents.
pub fn reduce_mod(f: &CentralPoly, g: &UPoly) -> Result<UPoly> {
    if f.is_zero() {
        return Ok(UPoly::zero());
    }
    let body = f.body().rem(g).ok_or(Error::DivisionByZero)?;
    let low = f.low();
    let shift = if low >= 0 {
        UPoly::monomial(Scalar::one(), low as usize).rem(g).ok_or(Error::DivisionByZero)?
    } else {
        let t_inv = UPoly::x().inverse_mod(g).ok_or(Error::InfiniteResidue)?;
        pow_mod(&t_inv, (-low) as u32, g)?
    };
    (&body * &shift).rem(g).ok_or(Error::DivisionByZero)
}

fn pow_mod(b: &UPoly, e: u32, g: &UPoly) -> Result<UPoly> {
    let mut acc = UPoly::one().rem(g).ok_or(Error::DivisionByZero)?;
    for _ in 0..e {
        acc = (&acc * b).rem(g).ok_or(Error::DivisionByZero)?;
    }
    Ok(acc)
}

/// `p(f)` for a polynomial `p` and a central Laurent element `f`.
pub fn eval_at_central(p: &UPoly, f: &CentralPoly) -> CentralPoly {
    let mut acc = CentralPoly::zero();
    for c in p.coeffs().iter().rev() {
        acc = &(&acc * f) + &CentralPoly::constant(c.clone());
    }
    acc
}

/// Ideal of the central subring, stored by its canonical generator.
#[derive(Clone, PartialEq, Eq)]
pub struct CentralIdeal {
    generator: UPoly,
    laurent: bool,
    var: String,
}

/// Serialized form of a [`CentralIdeal`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealRecord {
    pub generator: String,
    pub laurent: bool,
}

impl CentralIdeal {
    pub fn new(p: &CentralPoly, laurent: bool, var: &str) -> Result<Self> {
        Ok(Self { generator: normalize_generator(p, laurent)?, laurent, var: var.to_string() })
    }

    /// The ideal generated by a central-univariate base element.
    pub fn from_base(a: &BaseElem) -> Result<Self> {
        let sig = a.signature();
        let p = a.central_project().ok_or(Error::NotCentralUnivariate)?;
        Self::new(&p, sig.central_is_laurent(), &sig.names()[sig.central_var()])
    }

    pub fn unit(laurent: bool, var: &str) -> Self {
        Self { generator: UPoly::one(), laurent, var: var.to_string() }
    }

    pub fn zero(laurent: bool, var: &str) -> Self {
        Self { generator: UPoly::zero(), laurent, var: var.to_string() }
    }

    pub fn generator(&self) -> &UPoly {
        &self.generator
    }

    pub fn is_laurent(&self) -> bool {
        self.laurent
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn is_unit(&self) -> bool {
        self.generator.is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.generator.is_zero()
    }

    pub fn degree(&self) -> Option<usize> {
        self.generator.degree()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.laurent != other.laurent || self.var != other.var {
            return Err(Error::MixedSubrings);
        }
        Ok(())
    }

    fn with(&self, generator: UPoly) -> Self {
        let generator = if generator.is_zero() { generator } else { generator.monic() };
        Self { generator, laurent: self.laurent, var: self.var.clone() }
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(self.generator.gcd(&other.generator)))
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(&self.generator * &other.generator))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(self.generator.lcm(&other.generator)))
    }

    /// `self ⊆ other`
    pub fn is_subset_of(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(other.generator.divides(&self.generator))
    }

    pub fn contains(&self, f: &CentralPoly) -> Result<bool> {
        let g = normalize_generator(f, self.laurent)?;
        Ok(self.generator.divides(&g))
    }

    pub fn contains_elem(&self, a: &BaseElem) -> Result<bool> {
        self.contains(&a.central_project().ok_or(Error::NotCentralUnivariate)?)
    }

    /// Maximality for generators of degree at most 2.
    pub fn is_maximal(&self) -> Result<bool> {
        match self.generator.degree() {
            _ if self.generator.is_zero() => Ok(false),
            Some(0) => Ok(false),
            Some(1) => Ok(true),
            Some(2) => {
                let c = self.generator.coeffs();
                let disc = &(&c[1] * &c[1]) - &(&Scalar::from_int(4) * &(&c[0] * &c[2]));
                Ok(!disc.is_square())
            }
            Some(d) => Err(Error::UndecidableDegree(d)),
            None => Ok(false),
        }
    }

    /// The ideal generated by `φ^k(generator)`, where `φ` acts on the base
    /// algebra whose central variable has index `central`.
    pub fn apply_auto(&self, phi: &Automorphism, central: usize, k: i64) -> Self {
        if k == 0 || self.generator.is_zero() {
            return self.clone();
        }
        let image = phi.apply_central(k, central, &CentralPoly::from_poly(self.generator.clone()));
        self.with(normalize_generator(&image, self.laurent).expect("image of a generator"))
    }

    pub fn to_record(&self) -> IdealRecord {
        IdealRecord { generator: self.to_string(), laurent: self.laurent }
    }
}

impl fmt::Display for CentralIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_upoly(&self.generator, &self.var))
    }
}

impl fmt::Debug for CentralIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Minimal polynomial of the image of `f` in `F[t^{±1}]/(g)` (or `F[t]/(g)`).
pub fn residue_minpoly(g: &CentralIdeal, f: &CentralPoly) -> Result<UPoly> {
    if g.is_zero() {
        return Err(Error::InfiniteResidue);
    }
    if g.is_unit() {
        return Err(Error::DegenerateQuotient);
    }
    let n = g.generator.degree().expect("nonzero");
    let base = reduce_mod(f, &g.generator)?;
    let as_vec = |p: &UPoly| (0..n).map(|i| p.coeff(i)).collect::<Vec<_>>();

    // echelon rows: (pivot, vector, combination of powers f^0..f^k)
    let mut rows: Vec<(usize, Vec<Scalar>, Vec<Scalar>)> = Vec::new();
    let mut power = UPoly::one();
    for k in 0..=n {
        let mut v = as_vec(&power);
        let mut combo = vec![Scalar::zero(); k + 1];
        combo[k] = Scalar::one();
        for (piv, rv, rc) in &rows {
            if v[*piv].is_zero() {
                continue;
            }
            let factor = v[*piv].clone();
            for (a, b) in v.iter_mut().zip(rv) {
                *a = &*a - &(&factor * b);
            }
            for (a, b) in combo.iter_mut().zip(rc) {
                *a = &*a - &(&factor * b);
            }
        }
        match v.iter().position(|c| !c.is_zero()) {
            None => return Ok(UPoly::new(combo)),
            Some(piv) => {
                let inv = v[piv].inv()?;
                let v = v.iter().map(|c| c * &inv).collect();
                let c = combo.iter().map(|c| c * &inv).collect();
                rows.push((piv, v, c));
            }
        }
        power = (&power * &base).rem(&g.generator).ok_or(Error::DivisionByZero)?;
    }
    unreachable!("n + 1 vectors in an n-dimensional space are dependent")
}

/// Determinant of the Sylvester matrix of `f` and `g`, by Laplace expansion
/// with memoized minors; valid over any commutative ring.
pub fn resultant<R: Ring>(f: &DensePoly<R>, g: &DensePoly<R>) -> Result<R> {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        if f.is_zero() && g.is_zero() {
            return Err(Error::ConstantResultantInputs);
        }
        return Ok(R::zero());
    };
    if m == 0 && n == 0 {
        return Err(Error::ConstantResultantInputs);
    }
    let size = m + n;
    let mut mat = vec![vec![R::zero(); size]; size];
    // rows hold coefficients highest first
    for r in 0..n {
        for (i, c) in f.coeffs().iter().rev().enumerate() {
            mat[r][r + i] = c.clone();
        }
    }
    for r in 0..m {
        for (i, c) in g.coeffs().iter().rev().enumerate() {
            mat[n + r][r + i] = c.clone();
        }
    }
    let mut memo = HashMap::new();
    Ok(laplace(&mat, 0, (1u64 << size) - 1, &mut memo))
}

fn laplace<R: Ring>(mat: &[Vec<R>], row: usize, cols: u64, memo: &mut HashMap<u64, R>) -> R {
    if row == mat.len() {
        return R::one();
    }
    if let Some(hit) = memo.get(&cols) {
        return hit.clone();
    }
    let mut acc = R::zero();
    let mut sign_neg = false;
    for c in 0..mat.len() {
        if cols & (1 << c) == 0 {
            continue;
        }
        let entry = &mat[row][c];
        if !entry.is_zero() {
            let minor = laplace(mat, row + 1, cols & !(1 << c), memo);
            let term = entry.times(&minor);
            acc = if sign_neg { acc.minus(&term) } else { acc.plus(&term) };
        }
        sign_neg = !sign_neg;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// Polynomials in two commuting variables `X`, `Y` over F.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Scalar>,
}

impl BiPoly {
    pub fn constant(c: Scalar) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Scalar, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Self { terms }
    }

    pub fn x() -> Self {
        Self::monomial(Scalar::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Scalar::one(), 0, 1)
    }

    pub fn coeff(&self, i: u32, j: u32) -> Scalar {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Scalar)> {
        self.terms.iter()
    }

    pub fn degree_x(&self) -> u32 {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::default();
        for (&k, a) in &self.terms {
            out.add(k, a * c);
        }
        out
    }

    fn add(&mut self, k: (u32, u32), c: Scalar) {
        if c.is_zero() {
            return;
        }
        let sum = &self.coeff(k.0, k.1) + &c;
        if sum.is_zero() {
            self.terms.remove(&k);
        } else {
            self.terms.insert(k, sum);
        }
    }

    /// Leading coefficient under (deg_X, deg_Y) lexicographic order.
    pub fn leading(&self) -> Option<&Scalar> {
        self.terms.iter().next_back().map(|(_, c)| c)
    }

    /// `p(x, y)` with `x`, `y` central Laurent elements.
    pub fn eval_central(&self, x: &CentralPoly, y: &CentralPoly) -> CentralPoly {
        let mut acc = CentralPoly::zero();
        for (&(i, j), c) in &self.terms {
            let t = &x.pow(i) * &y.pow(j);
            acc = &acc + &t.scale(c);
        }
        acc
    }
}

impl Ring for BiPoly {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::constant(Scalar::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &o.terms {
            out.add(k, c.clone());
        }
        out
    }
    fn minus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &o.terms {
            out.add(k, -c);
        }
        out
    }
    fn times(&self, o: &Self) -> Self {
        let mut out = Self::default();
        for (&(a, b), c) in &self.terms {
            for (&(d, e), f) in &o.terms {
                out.add((a + d, b + e), c * f);
            }
        }
        out
    }
    fn negate(&self) -> Self {
        Self { terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect() }
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self
            .terms
            .iter()
            .rev()
            .map(|(&(i, j), c)| {
                let mono: Vec<String> = [("X", i), ("Y", j)]
                    .into_iter()
                    .filter(|(_, e)| *e > 0)
                    .map(|(v, e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
                    .collect();
                scalar_term(c, &mono.join("*"))
            })
            .collect();
        f.write_str(&join_signed(parts))
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(terms: &[(i64, Scalar)]) -> CentralPoly {
        CentralPoly::from_terms(terms.iter().cloned())
    }

    fn ideal(terms: &[(i64, Scalar)]) -> CentralIdeal {
        CentralIdeal::new(&lp(terms), false, "t").unwrap()
    }

    fn lideal(terms: &[(i64, Scalar)]) -> CentralIdeal {
        CentralIdeal::new(&lp(terms), true, "t").unwrap()
    }

    fn int(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    // t - a
    fn lin(a: Scalar) -> CentralIdeal {
        ideal(&[(1, int(1)), (0, -a)])
    }

    #[test]
    fn distinct_points_are_comaximal() {
        let a = lin(int(1));
        let b = lin(int(2));
        assert!(a.sum(&b).unwrap().is_unit());
        assert_eq!(a.intersect(&b).unwrap(), ideal(&[(2, int(1)), (1, int(-3)), (0, int(2))]));
        assert!(!a.contains(&CentralPoly::one()).unwrap());
    }

    #[test]
    fn product_equals_intersection_for_coprime_pair() {
        let p = lin(int(-1)).product(&lin(int(1))).unwrap();
        let i = lin(int(-1)).intersect(&lin(int(1))).unwrap();
        assert_eq!(p, i);
        assert_eq!(p.to_string(), "t^2 - 1");
    }

    #[test]
    fn laurent_normalization_drops_monomial_units() {
        let a = lideal(&[(-3, int(2)), (-1, int(4))]);
        assert_eq!(a.to_string(), "t^2 + 1/2");
        assert!(lideal(&[(5, Scalar::s())]).is_unit());
        assert!(!ideal(&[(5, Scalar::s())]).is_unit());
        assert!(matches!(CentralIdeal::new(&lp(&[(-1, int(1))]), false, "t"), Err(Error::NotCentralUnivariate)));
    }

    #[test]
    fn membership_at_quantum_roots() {
        for m in 1..5i64 {
            let mu = Scalar::q_pow(1 - m);
            let g = lideal(&[(1, int(1)), (0, -&mu)]);
            let f = lp(&[(2, int(1)), (0, -Scalar::q_pow(2 - 2 * m))]);
            assert!(g.contains(&f).unwrap());
            // oracle: f vanishes at t = mu
            assert!(eval_at_central(&f.to_poly().unwrap(), &CentralPoly::constant(mu)).is_zero());
        }
    }

    #[test]
    fn maximality_by_degree() {
        assert!(lin(int(-1)).is_maximal().unwrap());
        for m in 1..4 {
            let g = lideal(&[(2, int(1)), (0, -Scalar::q_pow(2 - 2 * m))]);
            assert!(!g.is_maximal().unwrap());
        }
        assert!(ideal(&[(2, int(1)), (0, -Scalar::s())]).is_maximal().unwrap());
        assert!(!CentralIdeal::unit(false, "t").is_maximal().unwrap());
        let cubic = ideal(&[(3, int(1)), (0, int(2))]);
        assert_eq!(cubic.is_maximal(), Err(Error::UndecidableDegree(3)));
    }

    #[test]
    fn automorphism_images() {
        let shift = Automorphism::Shift(int(2));
        assert_eq!(lin(int(-1)).apply_auto(&shift, 0, -1), lin(int(1)));
        assert_eq!(lin(int(-1)).apply_auto(&shift, 0, 0), lin(int(-1)));
        let scale = Automorphism::Scaling(vec![Scalar::q_pow(2)]);
        let mu = &Scalar::s() + &int(3);
        let img = lideal(&[(1, int(1)), (0, -&mu)]).apply_auto(&scale, 0, 1);
        assert_eq!(img, lideal(&[(1, int(1)), (0, -(&Scalar::q_pow(-2) * &mu))]));
    }

    #[test]
    fn mixed_subrings_rejected() {
        let a = lin(int(1));
        let b = lideal(&[(1, int(1)), (0, int(1))]);
        assert_eq!(a.sum(&b), Err(Error::MixedSubrings));
    }

    #[test]
    fn residue_minpoly_linear_case() {
        for m in 1..6i64 {
            let g = lin(int(1 - m));
            let u = lp(&[(2, Scalar::ratio(-1, 4)), (1, Scalar::ratio(1, 2)), (0, Scalar::ratio(-1, 4))]);
            let p = residue_minpoly(&g, &u).unwrap();
            assert_eq!(p, UPoly::new(vec![Scalar::ratio(m * m, 4), int(1)]));
            assert!(g.contains(&eval_at_central(&p, &u)).unwrap());
        }
    }

    #[test]
    fn residue_minpoly_errors() {
        let u = lp(&[(1, int(1))]);
        assert_eq!(residue_minpoly(&CentralIdeal::zero(false, "t"), &u), Err(Error::InfiniteResidue));
        assert_eq!(residue_minpoly(&CentralIdeal::unit(false, "t"), &u), Err(Error::DegenerateQuotient));
    }

    #[test]
    fn residue_minpoly_laurent_inverse() {
        // t^{-1} modulo t^2 - 2 satisfies X^2 - 1/2
        let g = lideal(&[(2, int(1)), (0, int(-2))]);
        let p = residue_minpoly(&g, &lp(&[(-1, int(1))])).unwrap();
        assert_eq!(p, UPoly::new(vec![Scalar::ratio(-1, 2), int(0), int(1)]));
    }

    #[test]
    fn small_resultants() {
        let a = &Scalar::s() + &int(1);
        let b = Scalar::q();
        let f = UPoly::new(vec![-&a, int(1)]);
        let g = UPoly::new(vec![-&b, int(1)]);
        assert_eq!(resultant(&f, &g).unwrap(), &a - &b);
        assert!(resultant(&f, &f).unwrap().is_zero());
        assert_eq!(resultant(&UPoly::one(), &UPoly::one()), Err(Error::ConstantResultantInputs));
        // res(t^2 + 1, t - c) = c^2 + 1
        let h = UPoly::new(vec![int(1), int(0), int(1)]);
        assert_eq!(resultant(&h, &g).unwrap(), &(&b * &b) + &int(1));
    }

    #[test]
    fn bivariate_resultant_eliminates() {
        // res_k(X - k, Y - k^2) = ±(Y - X^2)
        let f = DensePoly::new(vec![BiPoly::x(), BiPoly::constant(int(-1))]);
        let g = DensePoly::new(vec![BiPoly::y(), BiPoly::default(), BiPoly::constant(int(-1))]);
        let r = resultant(&f, &g).unwrap();
        let expect = BiPoly::y().minus(&BiPoly::x().times(&BiPoly::x()));
        assert!(r == expect || r == expect.negate(), "{r}");
        assert_eq!(expect.to_string(), "-X^2 + Y");
    }

    fn arb_ideal() -> impl Strategy<Value = CentralIdeal> {
        // products of (t - a) for small integer a, plus an optional quadratic
        (prop::collection::vec(-3i64..4, 0..4), prop::bool::ANY).prop_map(|(roots, quad)| {
            let mut g = CentralIdeal::unit(false, "t");
            for a in roots {
                g = g.product(&lin(int(a))).unwrap();
            }
            if quad {
                g = g.product(&ideal(&[(2, int(1)), (0, -Scalar::s())])).unwrap();
            }
            g
        })
    }

    proptest! {
        #[test]
        fn lattice_laws(a in arb_ideal(), b in arb_ideal(), c in arb_ideal()) {
            prop_assert_eq!(a.sum(&b).unwrap(), b.sum(&a).unwrap());
            prop_assert_eq!(a.intersect(&b).unwrap(), b.intersect(&a).unwrap());
            prop_assert_eq!(a.sum(&b).unwrap().sum(&c).unwrap(), a.sum(&b.sum(&c).unwrap()).unwrap());
            prop_assert_eq!(
                a.intersect(&b).unwrap().intersect(&c).unwrap(),
                a.intersect(&b.intersect(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(a.sum(&a).unwrap(), a.clone());
            prop_assert_eq!(a.intersect(&a).unwrap(), a.clone());
            prop_assert_eq!(
                a.product(&b.sum(&c).unwrap()).unwrap(),
                a.product(&b).unwrap().sum(&a.product(&c).unwrap()).unwrap()
            );
            prop_assert!(a.product(&b).unwrap().is_subset_of(&a.intersect(&b).unwrap()).unwrap());
        }

        #[test]
        fn minpoly_is_sound(a in arb_ideal(), e in 0i64..4, c in -3i64..4) {
            prop_assume!(!a.is_unit());
            let f = lp(&[(e, int(1)), (0, int(c))]);
            let p = residue_minpoly(&a, &f).unwrap();
            prop_assert!(a.contains(&eval_at_central(&p, &f)).unwrap());
            prop_assert!(p.degree().unwrap() <= a.degree().unwrap());
        }
    }
}
