//! Generalized Weyl algebras `W(A, α, u)`: `XY = u`, `YX = α(u)`,
//! `Ya = α(a)Y`, `Xa = α⁻¹(a)X`. Elements are stored graded, with left
//! coefficients: `a·Y^d` for `d > 0`, `a·X^{-d}` for `d < 0`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::ambiskew::{AmbiskewRing, OreElem};
use crate::basealg::{AlgebraSignature, Automorphism, BaseElem, CentralPoly};
use crate::error::{Error, Result};
use crate::ideal::{normalize_generator, reduce_mod, UPoly};
use crate::scalar::{join_signed, Scalar};

#[derive(Clone, PartialEq)]
pub struct GwaRing {
    sig: Arc<AlgebraSignature>,
    alpha: Automorphism,
    u: BaseElem,
    // base is A/(g) for this central generator, normalized
    modulus: Option<UPoly>,
}

impl GwaRing {
    pub fn new(sig: &Arc<AlgebraSignature>, alpha: Automorphism, u: BaseElem) -> Result<Arc<Self>> {
        alpha.validate(sig)?;
        if u.signature() != sig {
            return Err(Error::SignatureMismatch);
        }
        if !u.is_central() {
            return Err(Error::NotCentral(u.to_string()));
        }
        Ok(Arc::new(Self { sig: sig.clone(), alpha, u, modulus: None }))
    }

    /// `W(A, α, u + λ) ≅ R/(z - λ)R` for a conformal ring with `ρ = 1`.
    pub fn from_ambiskew(r: &AmbiskewRing, u: &BaseElem, lambda: &Scalar) -> Result<Arc<Self>> {
        if !r.rho().is_one() {
            return Err(Error::NonConformal);
        }
        if !r.splitting_check(u)? {
            return Err(Error::NotSplitting(u.to_string()));
        }
        let shifted = u + &BaseElem::constant(r.signature(), lambda.clone());
        Self::new(r.signature(), r.alpha().clone(), shifted)
    }

    pub fn signature(&self) -> &Arc<AlgebraSignature> {
        &self.sig
    }

    pub fn alpha(&self) -> &Automorphism {
        &self.alpha
    }

    pub fn u(&self) -> &BaseElem {
        &self.u
    }

    /// Central generator `g` when the base is `A/(g)`.
    pub fn modulus(&self) -> Option<&UPoly> {
        self.modulus.as_ref()
    }

    /// Canonical representative of `a` in the base.
    pub fn reduce(&self, a: &BaseElem) -> BaseElem {
        let Some(g) = &self.modulus else {
            return a.clone();
        };
        let k = self.sig.central_var();
        let mut groups: BTreeMap<Vec<i32>, Vec<(i64, Scalar)>> = BTreeMap::new();
        for (e, c) in a.terms() {
            let mut key = e.clone();
            key[k] = 0;
            groups.entry(key).or_default().push((e[k] as i64, c.clone()));
        }
        let mut out = Vec::new();
        for (key, terms) in groups {
            let r = reduce_mod(&CentralPoly::from_terms(terms), g).expect("stable modulus is invertible-compatible");
            for (i, c) in r.coeffs().iter().enumerate() {
                let mut e = key.clone();
                e[k] = i as i32;
                out.push((e, c.clone()));
            }
        }
        BaseElem::from_terms(&self.sig, out).expect("exponents stay valid")
    }

    fn alpha_pow(&self, k: i64, a: &BaseElem) -> BaseElem {
        self.reduce(&self.alpha.apply(k, a))
    }

    /// Central coefficient `P` and degree with `W_d W_e = P · W_{d+e}`.
    fn word_product(&self, d: i64, e: i64) -> BaseElem {
        let one = BaseElem::one(&self.sig);
        if d >= 0 && e >= 0 || d <= 0 && e <= 0 {
            return one;
        }
        let mut acc = one;
        if d > 0 {
            // Y^i X^j = α^i(u) α^{i-1}(u) ... Y^{i-k} X^{j-k}
            let (i, j) = (d, -e);
            for l in 0..i.min(j) {
                acc = &acc * &self.alpha_pow(i - l, &self.u);
            }
        } else {
            // X^i Y^j = α^{-(i-1)}(u) α^{-(i-2)}(u) ... X^{i-k} Y^{j-k}
            let (i, j) = (-d, e);
            for l in 0..i.min(j) {
                acc = &acc * &self.alpha_pow(-(i - 1 - l), &self.u);
            }
        }
        self.reduce(&acc)
    }

    /// `d_i = α(u) α²(u) ⋯ α^i(u)`
    pub fn d_element(&self, i: u32) -> BaseElem {
        let mut acc = BaseElem::one(&self.sig);
        for l in 1..=i as i64 {
            acc = &acc * &self.alpha_pow(l, &self.u);
        }
        self.reduce(&acc)
    }

    /// `e_i = α^{-i}(d_i)`
    pub fn e_element(&self, i: u32) -> BaseElem {
        self.alpha_pow(-(i as i64), &self.d_element(i))
    }

    /// Checks `X^m Y^m = Π_{i<m} α^{-i}(u)` and `Y^m X^m = Π_{i=1}^m α^i(u)`,
    /// building each power one generator at a time.
    pub fn power_identities(self: &Arc<Self>, m: u32) -> bool {
        let x = GwaElem::x(self);
        let y = GwaElem::y(self);
        let one = GwaElem::one(self);
        let ym = (0..m).fold(one.clone(), |acc, _| &y * &acc);
        let xm = (0..m).fold(one.clone(), |acc, _| &x * &acc);
        let xy = (0..m).fold(ym.clone(), |acc, _| &x * &acc);
        let yx = (0..m).fold(xm.clone(), |acc, _| &y * &acc);
        let mut prod_x = BaseElem::one(&self.sig);
        let mut prod_y = BaseElem::one(&self.sig);
        for i in 0..m as i64 {
            prod_x = &prod_x * &self.alpha_pow(-i, &self.u);
            prod_y = &prod_y * &self.alpha_pow(i + 1, &self.u);
        }
        xy == GwaElem::from_base(self, prod_x) && yx == GwaElem::from_base(self, prod_y)
    }

    /// Image of `x^i a y^j` under `x ↦ X`, `y ↦ Y`.
    pub fn project_ore(self: &Arc<Self>, w: &OreElem) -> Result<GwaElem> {
        if w.ring().signature() != &self.sig {
            return Err(Error::SignatureMismatch);
        }
        let mut out = GwaElem::zero(self);
        for (&(i, j), a) in w.terms() {
            let left = GwaElem::term(self, -(i as i64), self.alpha_pow(-(i as i64), a));
            let right = GwaElem::term(self, j as i64, BaseElem::one(&self.sig));
            out = &out + &(&left * &right);
        }
        Ok(out)
    }

    /// `W/gW ≅ W(A/gA, ᾱ, ū)` for an α-stable central `g`.
    ///
    /// Supported shapes: `g` in the central univariate subring, or
    /// `g = a·z_i - h` with `z_i` central, `a ∈ F` and `h` free of `z_i`, in
    /// which case `z_i := h/a` is substituted and the variable dropped.
    pub fn quotient_by_stable_central(self: &Arc<Self>, g: &BaseElem) -> Result<GwaQuotient> {
        if g.signature() != &self.sig {
            return Err(Error::SignatureMismatch);
        }
        let g = self.reduce(g);
        if g.is_zero() {
            return Ok(GwaQuotient { ring: self.clone(), map: QuotientMap::Identity });
        }
        if !g.is_central() {
            return Err(Error::NotCentral(g.to_string()));
        }
        if let Some(p) = g.central_project() {
            return self.quotient_central(&p);
        }
        self.quotient_substitute(&g)
    }

    fn quotient_central(self: &Arc<Self>, p: &CentralPoly) -> Result<GwaQuotient> {
        let laurent = self.sig.central_is_laurent();
        let k = self.sig.central_var();
        let gen = normalize_generator(p, laurent)?;
        let image = normalize_generator(&self.alpha.apply_central(1, k, p), laurent)?;
        if gen != image {
            return Err(Error::NotStable);
        }
        let gen = match &self.modulus {
            Some(old) => old.gcd(&gen),
            None => gen,
        };
        if gen.is_one() {
            return Err(Error::DegenerateQuotient);
        }
        let mut ring = GwaRing { modulus: Some(gen), ..(**self).clone() };
        ring.u = ring.reduce(&ring.u);
        Ok(GwaQuotient { ring: Arc::new(ring), map: QuotientMap::Modulus })
    }

    fn quotient_substitute(self: &Arc<Self>, g: &BaseElem) -> Result<GwaQuotient> {
        if self.modulus.is_some() {
            return Err(Error::UnsupportedQuotient("substitution over a quotient base".into()));
        }
        let n = self.sig.nvars();
        let linear_in = |i: usize| {
            g.terms().all(|(e, _)| e[i] == 0 || (e[i] == 1 && e.iter().enumerate().all(|(j, &x)| j == i || x == 0)))
                && g.terms().any(|(e, _)| e[i] == 1)
        };
        let var = (0..n)
            .find(|&i| linear_in(i))
            .ok_or_else(|| Error::UnsupportedQuotient(format!("{g} is not linear in a variable")))?;
        if (0..n).any(|j| !self.sig.q_ij(var.max(j), var.min(j)).is_one()) {
            return Err(Error::NotCentral(self.sig.names()[var].clone()));
        }
        let mut unit = vec![0; n];
        unit[var] = 1;
        let a = g.terms().find(|(e, _)| **e == unit).map(|(_, c)| c.clone()).expect("linear term");
        // α(g) must be a scalar multiple of g; the only scalar possible is the
        // factor on z_var
        let Automorphism::Scaling(cs) = &self.alpha else {
            return Err(Error::NotStable);
        };
        if self.alpha.apply(1, g) != g.scale(&cs[var]) {
            return Err(Error::NotStable);
        }

        let names: Vec<String> = (0..n).filter(|&i| i != var).map(|i| self.sig.names()[i].clone()).collect();
        let invertible: Vec<bool> = (0..n).filter(|&i| i != var).map(|i| self.sig.is_invertible(i)).collect();
        let idx = |i: usize| if i > var { i - 1 } else { i };
        let mut comm = Vec::new();
        for i in 0..n {
            for j in 0..i {
                let q = self.sig.q_ij(i, j);
                if i != var && j != var && !q.is_one() {
                    comm.push(((idx(i), idx(j)), q));
                }
            }
        }
        let central = self.sig.central_var();
        if central == var {
            return Err(Error::UnsupportedQuotient("cannot drop the central variable".into()));
        }
        let sig = AlgebraSignature::new(names, invertible, comm, idx(central))?;
        let alpha = Automorphism::Scaling(cs.iter().enumerate().filter(|&(i, _)| i != var).map(|(_, c)| c.clone()).collect());

        let a_inv = a.inv()?;
        let h = -&(g - &BaseElem::monomial(&self.sig, unit, a).expect("valid"));
        let value = BaseElem::from_terms(
            &sig,
            h.terms().map(|(e, c)| {
                let e2: Vec<i32> = e.iter().enumerate().filter(|&(i, _)| i != var).map(|(_, &x)| x).collect();
                (e2, c * &a_inv)
            }),
        )?;
        let value_inv = if self.sig.is_invertible(var) {
            if value.is_zero() {
                return Err(Error::DegenerateQuotient);
            }
            if value.len() != 1 {
                return Err(Error::UnsupportedQuotient(format!("{value} is not a unit")));
            }
            let (e, c) = value.terms().next().expect("one term");
            let neg: Vec<i32> = e.iter().map(|x| -x).collect();
            let mut twisted = c.inv()?;
            // (c z^e)^{-1} = c^{-1} λ(e, -e)^{-1} z^{-e}
            twisted = &twisted * &sig.monomial_twist(e, &neg).inv()?;
            Some(BaseElem::monomial(&sig, neg, twisted)?)
        } else {
            None
        };
        let map = QuotientMap::Substitute { source: self.sig.clone(), var, value, value_inv };
        let u = map.apply_base(&self.u, &sig);
        let ring = GwaRing::new(&sig, alpha, u)?;
        Ok(GwaQuotient { ring, map })
    }
}

impl fmt::Debug for GwaRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GwaRing").field("alpha", &self.alpha).field("u", &self.u).field("modulus", &self.modulus).finish()
    }
}

#[derive(Clone, Debug)]
enum QuotientMap {
    Identity,
    Modulus,
    Substitute { source: Arc<AlgebraSignature>, var: usize, value: BaseElem, value_inv: Option<BaseElem> },
}

impl QuotientMap {
    fn apply_base(&self, a: &BaseElem, target: &Arc<AlgebraSignature>) -> BaseElem {
        match self {
            QuotientMap::Identity | QuotientMap::Modulus => a.clone(),
            QuotientMap::Substitute { source, var, value, value_inv } => {
                debug_assert!(a.signature() == source);
                let mut out = BaseElem::zero(target);
                for (e, c) in a.terms() {
                    let rest: Vec<i32> = e.iter().enumerate().filter(|&(i, _)| i != *var).map(|(_, &x)| x).collect();
                    let k = e[*var];
                    let factor = if k >= 0 {
                        value.pow(k as u32)
                    } else {
                        value_inv.as_ref().expect("invertible variable").pow((-k) as u32)
                    };
                    // z_var commutes with everything, so it can be pulled to the front
                    let mono = BaseElem::monomial(target, rest, c.clone()).expect("valid exponents");
                    out = &out + &(&factor * &mono);
                }
                out
            }
        }
    }
}

/// A quotient `W/gW` with its canonical surjection.
#[derive(Clone, Debug)]
pub struct GwaQuotient {
    pub ring: Arc<GwaRing>,
    map: QuotientMap,
}

impl GwaQuotient {
    pub fn project_base(&self, a: &BaseElem) -> BaseElem {
        self.ring.reduce(&self.map.apply_base(a, &self.ring.sig))
    }

    pub fn project(&self, w: &GwaElem) -> GwaElem {
        let mut out = GwaElem::zero(&self.ring);
        for (&d, a) in &w.comps {
            out.add_component(d, self.project_base(a));
        }
        out
    }
}

/// Element of a generalized Weyl algebra, stored by degree.
#[derive(Clone)]
pub struct GwaElem {
    ring: Arc<GwaRing>,
    comps: BTreeMap<i64, BaseElem>,
}

impl GwaElem {
    pub fn zero(ring: &Arc<GwaRing>) -> Self {
        Self { ring: ring.clone(), comps: BTreeMap::new() }
    }

    pub fn one(ring: &Arc<GwaRing>) -> Self {
        Self::from_base(ring, BaseElem::one(&ring.sig))
    }

    pub fn x(ring: &Arc<GwaRing>) -> Self {
        Self::term(ring, -1, BaseElem::one(&ring.sig))
    }

    pub fn y(ring: &Arc<GwaRing>) -> Self {
        Self::term(ring, 1, BaseElem::one(&ring.sig))
    }

    pub fn from_base(ring: &Arc<GwaRing>, a: BaseElem) -> Self {
        Self::term(ring, 0, a)
    }

    /// `a·Y^d` for `d ≥ 0`, `a·X^{-d}` for `d < 0`.
    pub fn term(ring: &Arc<GwaRing>, d: i64, a: BaseElem) -> Self {
        let mut out = Self::zero(ring);
        out.add_component(d, ring.reduce(&a));
        out
    }

    fn add_component(&mut self, d: i64, a: BaseElem) {
        if a.is_zero() {
            return;
        }
        let sum = match self.comps.remove(&d) {
            Some(old) => &old + &a,
            None => a,
        };
        if !sum.is_zero() {
            self.comps.insert(d, sum);
        }
    }

    pub fn ring(&self) -> &Arc<GwaRing> {
        &self.ring
    }

    pub fn components(&self) -> impl Iterator<Item = (&i64, &BaseElem)> {
        self.comps.iter()
    }

    pub fn component(&self, d: i64) -> BaseElem {
        self.comps.get(&d).cloned().unwrap_or_else(|| BaseElem::zero(&self.ring.sig))
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.comps.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(&self.ring);
        for (&d, a) in &self.comps {
            out.add_component(d, a.scale(c));
        }
        out
    }

    fn same_ring(&self, rhs: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &rhs.ring) || *self.ring == *rhs.ring
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        if !self.same_ring(rhs) {
            return Err(Error::SignatureMismatch);
        }
        let mut out = self.clone();
        for (&d, a) in &rhs.comps {
            out.add_component(d, a.clone());
        }
        Ok(out)
    }

    /// `(a W_d)(b W_e) = a α^d(b) P_{d,e} W_{d+e}`.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if !self.same_ring(rhs) {
            return Err(Error::SignatureMismatch);
        }
        let ring = &self.ring;
        let mut out = Self::zero(ring);
        for (&d, a) in &self.comps {
            for (&e, b) in &rhs.comps {
                let coeff = &(a * &ring.alpha_pow(d, b)) * &ring.word_product(d, e);
                out.add_component(d + e, ring.reduce(&coeff));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(&self.ring), |acc, _| &acc * self)
    }
}

impl PartialEq for GwaElem {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.comps == other.comps
    }
}

impl Add for &GwaElem {
    type Output = GwaElem;
    fn add(self, rhs: &GwaElem) -> GwaElem {
        self.try_add(rhs).expect("ring mismatch")
    }
}

impl Sub for &GwaElem {
    type Output = GwaElem;
    fn sub(self, rhs: &GwaElem) -> GwaElem {
        self.try_add(&-rhs).expect("ring mismatch")
    }
}

impl Mul for &GwaElem {
    type Output = GwaElem;
    fn mul(self, rhs: &GwaElem) -> GwaElem {
        self.try_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &GwaElem {
    type Output = GwaElem;
    fn neg(self) -> GwaElem {
        GwaElem { ring: self.ring.clone(), comps: self.comps.iter().map(|(&d, a)| (d, -a)).collect() }
    }
}

impl fmt::Display for GwaElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self
            .comps
            .iter()
            .rev()
            .map(|(&d, a)| {
                let body = match d {
                    0 => format!("({a})"),
                    1 => format!("({a})*Y"),
                    -1 => format!("({a})*X"),
                    d if d > 0 => format!("({a})*Y^{d}"),
                    d => format!("({a})*X^{}", -d),
                };
                (false, body)
            })
            .collect();
        f.write_str(&join_signed(parts))
    }
}

impl fmt::Debug for GwaElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GwaElem({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzz;
    use proptest::prelude::*;

    fn int(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn usl2() -> (Arc<AmbiskewRing>, BaseElem) {
        let sig = AlgebraSignature::polynomial("t");
        let t = BaseElem::var(&sig, 0);
        let r = AmbiskewRing::new(&sig, Automorphism::Shift(int(2)), t.clone(), Scalar::one()).unwrap();
        let tm1 = &t - &BaseElem::one(&sig);
        (r, (&tm1 * &tm1).scale(&Scalar::ratio(-1, 4)))
    }

    fn qtorus3() -> Arc<GwaRing> {
        let sig = AlgebraSignature::quantum_torus(3).unwrap();
        let qi = Scalar::q_pow(-1);
        let alpha = Automorphism::Scaling(vec![qi.clone(), Scalar::one(), qi]);
        let u = BaseElem::from_terms(&sig, vec![(vec![0, 0, -1], Scalar::q()), (vec![0, 0, 1], Scalar::q())]).unwrap();
        GwaRing::new(&sig, alpha, u).unwrap()
    }

    // K[c, k^{±1}], α = (c, q² k); central variable chosen by the caller
    fn adu_base(central: usize) -> (Arc<AlgebraSignature>, Automorphism, BaseElem) {
        let sig = AlgebraSignature::commutative(&["c", "k"], &[false, true], central).unwrap();
        let alpha = Automorphism::Scaling(vec![Scalar::one(), Scalar::q_pow(2)]);
        let u = BaseElem::from_terms(&sig, vec![(vec![1, 1], int(1)), (vec![0, -1], int(1))]).unwrap();
        (sig, alpha, u)
    }

    #[test]
    fn defining_relations() {
        let w = qtorus3();
        let x = GwaElem::x(&w);
        let y = GwaElem::y(&w);
        assert_eq!(&x * &y, GwaElem::from_base(&w, w.u().clone()));
        assert_eq!(&y * &x, GwaElem::from_base(&w, w.alpha().apply(1, w.u())));
        let x2y2 = &x.pow(2) * &y.pow(2);
        assert_eq!(x2y2, GwaElem::from_base(&w, w.u() * &w.alpha().apply(-1, w.u())));
    }

    #[test]
    fn power_identities_hold() {
        let (r, u) = usl2();
        let w = GwaRing::from_ambiskew(&r, &u, &int(1)).unwrap();
        let q3 = qtorus3();
        for m in 1..=6 {
            assert!(w.power_identities(m));
            assert!(q3.power_identities(m));
        }
    }

    #[test]
    fn d_and_e_elements_match_words() {
        let w = qtorus3();
        assert_eq!(w.d_element(1), w.alpha().apply(1, w.u()));
        for i in 1..=5 {
            let yx = &GwaElem::y(&w).pow(i) * &GwaElem::x(&w).pow(i);
            let xy = &GwaElem::x(&w).pow(i) * &GwaElem::y(&w).pow(i);
            assert_eq!(yx, GwaElem::from_base(&w, w.d_element(i)));
            assert_eq!(xy, GwaElem::from_base(&w, w.e_element(i)));
            assert_eq!(w.e_element(i), w.alpha().apply(-(i as i64), &w.d_element(i)));
        }
    }

    #[test]
    fn from_ambiskew_shifts_u() {
        let (r, u) = usl2();
        let w = GwaRing::from_ambiskew(&r, &u, &Scalar::zero()).unwrap();
        assert_eq!(w.u(), &u);
        let lam = Scalar::ratio(9, 4);
        let w = GwaRing::from_ambiskew(&r, &u, &lam).unwrap();
        assert_eq!(w.u(), &(&u + &BaseElem::constant(r.signature(), lam.clone())));
        assert!(matches!(GwaRing::from_ambiskew(&r, r.v(), &lam), Err(Error::NotSplitting(_))));
    }

    #[test]
    fn from_ambiskew_needs_rho_one() {
        let sig = AlgebraSignature::polynomial("t");
        let t = BaseElem::var(&sig, 0);
        let r = AmbiskewRing::new(&sig, Automorphism::Scaling(vec![Scalar::q()]), t.clone(), Scalar::s()).unwrap();
        let u = t.scale(&(&Scalar::one() - &Scalar::s_pow(3)).inv().unwrap());
        assert_eq!(GwaRing::from_ambiskew(&r, &u, &int(0)).unwrap_err(), Error::NonConformal);
    }

    #[test]
    fn casimir_translate_maps_to_zero() {
        let (r, u) = usl2();
        let lam = Scalar::ratio(1, 3);
        let w = GwaRing::from_ambiskew(&r, &u, &lam).unwrap();
        let z = r.casimir(&u).unwrap();
        let zl = &z - &OreElem::from_base(&r, BaseElem::constant(r.signature(), lam));
        assert!(w.project_ore(&zl).unwrap().is_zero());
    }

    #[test]
    fn rendering() {
        let w = qtorus3();
        let e = &GwaElem::y(&w).pow(2) + &GwaElem::term(&w, -1, BaseElem::var(w.signature(), 0));
        assert_eq!(e.to_string(), "(1)*Y^2 + (z1)*X");
    }

    #[test]
    fn central_quotient_is_multiplicative() {
        let (sig, alpha, u) = adu_base(0);
        let w = GwaRing::new(&sig, alpha, u).unwrap();
        let g = BaseElem::from_terms(&sig, vec![(vec![2, 0], int(1)), (vec![0, 0], int(-2))]).unwrap();
        let quo = w.quotient_by_stable_central(&g).unwrap();
        assert_eq!(quo.ring.modulus().unwrap().degree(), Some(2));
        let mut rng = fuzz::rng(7);
        for _ in 0..40 {
            let a = fuzz::random_gwa(&mut rng, &w, 3, 2);
            let b = fuzz::random_gwa(&mut rng, &w, 3, 2);
            assert_eq!(quo.project(&(&a * &b)), &quo.project(&a) * &quo.project(&b));
        }
        // c^2 reduces to 2
        let c2 = GwaElem::from_base(&w, BaseElem::var(&sig, 0).pow(2));
        assert_eq!(quo.project(&c2), GwaElem::from_base(&quo.ring, BaseElem::constant(&sig, int(2))));
    }

    #[test]
    fn substitution_quotient() {
        let (sig, alpha, u) = adu_base(1);
        let w = GwaRing::new(&sig, alpha, u).unwrap();
        let g = BaseElem::from_terms(&sig, vec![(vec![1, 0], int(2)), (vec![0, 0], int(-6))]).unwrap();
        let quo = w.quotient_by_stable_central(&g).unwrap();
        let ksig = quo.ring.signature().clone();
        assert_eq!(ksig.names(), ["k".to_string()]);
        // oracle: u = ck + k^{-1} with c := 3
        let expect = BaseElem::from_terms(&ksig, vec![(vec![1], int(3)), (vec![-1], int(1))]).unwrap();
        assert_eq!(quo.ring.u(), &expect);
        let mut rng = fuzz::rng(11);
        for _ in 0..40 {
            let a = fuzz::random_gwa(&mut rng, &w, 3, 2);
            let b = fuzz::random_gwa(&mut rng, &w, 3, 2);
            assert_eq!(quo.project(&(&a * &b)), &quo.project(&a) * &quo.project(&b));
        }
    }

    #[test]
    fn unstable_and_degenerate_quotients() {
        let (sig, alpha, u) = adu_base(1);
        let w = GwaRing::new(&sig, alpha, u).unwrap();
        // c - q^{-2} k^{-2} moves under k -> q^2 k
        let g = BaseElem::from_terms(&sig, vec![(vec![1, 0], int(1)), (vec![0, -2], -Scalar::q_pow(-2))]).unwrap();
        assert_eq!(w.quotient_by_stable_central(&g).unwrap_err(), Error::NotStable);
        assert_eq!(w.quotient_by_stable_central(&BaseElem::one(&sig)).unwrap_err(), Error::DegenerateQuotient);

        let lsig = AlgebraSignature::laurent("t");
        let alpha = Automorphism::Scaling(vec![Scalar::q_pow(2)]);
        let w = GwaRing::new(&lsig, alpha.clone(), BaseElem::var(&lsig, 0)).unwrap();
        for m in 1..4 {
            let g = BaseElem::from_terms(&lsig, vec![(vec![2], int(1)), (vec![0], -Scalar::q_pow(2 - 2 * m))]).unwrap();
            // oracle: α(g) = q^4 t^2 - q^{2-2m} is not a scalar multiple of g
            let ag = alpha.apply(1, &g);
            assert_ne!(ag, g.scale(&Scalar::q_pow(2)));
            assert_eq!(w.quotient_by_stable_central(&g).unwrap_err(), Error::NotStable);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn projection_from_ambiskew_is_multiplicative(seed in any::<u64>()) {
            let (r, u) = usl2();
            let w = GwaRing::from_ambiskew(&r, &u, &Scalar::ratio(1, 3)).unwrap();
            let mut rng = fuzz::rng(seed);
            let a = fuzz::random_ore(&mut rng, &r, 3, 3);
            let b = fuzz::random_ore(&mut rng, &r, 3, 3);
            let lhs = w.project_ore(&(&a * &b)).unwrap();
            let rhs = &w.project_ore(&a).unwrap() * &w.project_ore(&b).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn gwa_associative_and_graded(seed in any::<u64>()) {
            let w = qtorus3();
            let mut rng = fuzz::rng(seed);
            let [a, b, c] = [(); 3].map(|_| fuzz::random_gwa(&mut rng, &w, 3, 2));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }
    }
}
