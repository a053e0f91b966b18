//! Ambiskew polynomial rings `R(A, α, v, ρ)`: `ya = α(a)y`, `xa = α⁻¹(a)x`,
//! `xy = ρyx + v`, with elements kept in the normal form `Σ x^i a y^j`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, RwLock};

use crate::basealg::{AlgebraSignature, Automorphism, BaseElem};
use crate::error::{Error, Result};
use crate::scalar::{join_signed, Scalar};

type Terms = BTreeMap<(u32, u32), BaseElem>;

pub struct AmbiskewRing {
    sig: Arc<AlgebraSignature>,
    alpha: Automorphism,
    v: BaseElem,
    rho: Scalar,
    rho_inv: Scalar,
    // (j, k) -> normal form of y^j x^k
    yx_memo: RwLock<HashMap<(u32, u32), Arc<Terms>>>,
    v_memo: RwLock<HashMap<u32, BaseElem>>,
}

impl AmbiskewRing {
    pub fn new(
        sig: &Arc<AlgebraSignature>,
        alpha: Automorphism,
        v: BaseElem,
        rho: Scalar,
    ) -> Result<Arc<Self>> {
        alpha.validate(sig)?;
        if v.signature() != sig {
            return Err(Error::SignatureMismatch);
        }
        if !v.is_central() {
            return Err(Error::NotCentral(v.to_string()));
        }
        let rho_inv = rho.inv()?;
        Ok(Arc::new(Self {
            sig: sig.clone(),
            alpha,
            v,
            rho,
            rho_inv,
            yx_memo: RwLock::new(HashMap::new()),
            v_memo: RwLock::new(HashMap::new()),
        }))
    }

    pub fn signature(&self) -> &Arc<AlgebraSignature> {
        &self.sig
    }

    pub fn alpha(&self) -> &Automorphism {
        &self.alpha
    }

    pub fn v(&self) -> &BaseElem {
        &self.v
    }

    pub fn rho(&self) -> &Scalar {
        &self.rho
    }

    pub fn is_conformal_rho(&self) -> bool {
        self.rho.is_one()
    }

    /// `v^(m) = Σ_{l<m} ρ^l α^l(v)`.
    pub fn v_power(&self, m: u32) -> BaseElem {
        if let Some(hit) = self.v_memo.read().expect("memo lock").get(&m) {
            return hit.clone();
        }
        let mut acc = BaseElem::zero(&self.sig);
        let mut rho_l = Scalar::one();
        for l in 0..m {
            acc = &acc + &self.alpha.apply(l as i64, &self.v).scale(&rho_l);
            rho_l = &rho_l * &self.rho;
        }
        self.v_memo.write().expect("memo lock").insert(m, acc.clone());
        acc
    }

    /// Normal form of `y^j x^k`, from `y^j x = ρ^{-j}(x y^j - v^(j) y^{j-1})`.
    fn yx(&self, j: u32, k: u32) -> Arc<Terms> {
        if let Some(hit) = self.yx_memo.read().expect("memo lock").get(&(j, k)) {
            return hit.clone();
        }
        let out = if j == 0 || k == 0 {
            let mut t = Terms::new();
            t.insert((k, j), BaseElem::one(&self.sig));
            t
        } else {
            let mut t = Terms::new();
            let rho_j = self.rho_inv.pow(j as i64).expect("rho is nonzero");
            for (&(p, r), c) in self.yx(j, k - 1).iter() {
                add_into(&mut t, (p + 1, r), c.scale(&rho_j));
            }
            let vj = self.v_power(j);
            for (&(p, r), c) in self.yx(j - 1, k - 1).iter() {
                let moved = &self.alpha.apply(p as i64, &vj) * c;
                add_into(&mut t, (p, r), -&moved.scale(&rho_j));
            }
            t
        };
        let out = Arc::new(out);
        self.yx_memo.write().expect("memo lock").insert((j, k), out.clone());
        out
    }

    /// True iff `v = u - ρα(u)`.
    pub fn splitting_check(&self, u: &BaseElem) -> Result<bool> {
        if u.signature() != &self.sig {
            return Err(Error::SignatureMismatch);
        }
        if !u.is_central() {
            return Err(Error::NotCentral(u.to_string()));
        }
        Ok(self.v == u - &self.alpha.apply(1, u).scale(&self.rho))
    }

    /// Checks `xy^m - ρ^m y^m x = v^(m) y^{m-1}` and
    /// `x^m y - ρ^m y x^m = x^{m-1} v^(m) = α^{1-m}(v^(m)) x^{m-1}`.
    ///
    /// Powers are built one generator at a time, so only the `y x^k`
    /// reduction is exercised, never the memoized `y^j x^k` table for `j > 1`.
    pub fn check_skewcomm(self: &Arc<Self>, m: u32) -> bool {
        if m == 0 {
            return true;
        }
        let x = OreElem::x(self);
        let y = OreElem::y(self);
        let rho_m = self.rho.pow(m as i64).expect("rho is nonzero");
        let vm = self.v_power(m);

        let ym = fold_left_gen(&y, m, &OreElem::one(self));
        let ym_x = fold_left_gen(&y, m, &x);
        let lhs1 = &(&x * &ym) - &ym_x.scale(&rho_m);
        let rhs1 = OreElem::term(self, 0, vm.clone(), m - 1);

        let xm = fold_left_gen(&x, m, &OreElem::one(self));
        let xm_y = fold_left_gen(&x, m, &y);
        let lhs2 = &xm_y - &(&y * &xm).scale(&rho_m);
        let rhs2 = OreElem::term(self, m - 1, vm.clone(), 0);
        let xm1 = fold_left_gen(&x, m - 1, &OreElem::one(self));
        let rhs2b = &OreElem::from_base(self, self.alpha.apply(1 - m as i64, &vm)) * &xm1;

        lhs1 == rhs1 && lhs2 == rhs2 && lhs2 == rhs2b
    }

    /// `z = xy - u`.
    pub fn casimir(self: &Arc<Self>, u: &BaseElem) -> Result<OreElem> {
        if !self.splitting_check(u)? {
            return Err(Error::NotSplitting(u.to_string()));
        }
        Ok(&(&OreElem::x(self) * &OreElem::y(self)) - &OreElem::from_base(self, u.clone()))
    }

    /// Checks `zy = ρyz`, `zx = ρ⁻¹xz` and `za = az` for every generator `a`
    /// of A (and its inverse when invertible).
    pub fn check_casimir_normality(self: &Arc<Self>, z: &OreElem) -> bool {
        let x = OreElem::x(self);
        let y = OreElem::y(self);
        if z * &y != (&y * z).scale(&self.rho) {
            return false;
        }
        if z * &x != (&x * z).scale(&self.rho_inv) {
            return false;
        }
        (0..self.sig.nvars()).all(|g| {
            let mut gens = vec![BaseElem::var(&self.sig, g)];
            if self.sig.is_invertible(g) {
                let mut e = vec![0; self.sig.nvars()];
                e[g] = -1;
                gens.push(BaseElem::monomial(&self.sig, e, Scalar::one()).expect("invertible"));
            }
            gens.into_iter().all(|a| {
                let a = OreElem::from_base(self, a);
                z * &a == &a * z
            })
        })
    }
}

impl PartialEq for AmbiskewRing {
    fn eq(&self, other: &Self) -> bool {
        self.sig == other.sig && self.alpha == other.alpha && self.v == other.v && self.rho == other.rho
    }
}

impl fmt::Debug for AmbiskewRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AmbiskewRing")
            .field("alpha", &self.alpha)
            .field("v", &self.v)
            .field("rho", &self.rho)
            .finish()
    }
}

fn add_into(t: &mut Terms, key: (u32, u32), c: BaseElem) {
    if c.is_zero() {
        return;
    }
    match t.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = e.get() + &c;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

/// `g · (g · ( … (g · w)))` with `n` copies of `g`.
fn fold_left_gen(g: &OreElem, n: u32, w: &OreElem) -> OreElem {
    (0..n).fold(w.clone(), |acc, _| g * &acc)
}

/// Element `Σ x^i a_ij y^j` of an ambiskew ring.
#[derive(Clone)]
pub struct OreElem {
    ring: Arc<AmbiskewRing>,
    terms: Terms,
}

impl OreElem {
    pub fn zero(ring: &Arc<AmbiskewRing>) -> Self {
        Self { ring: ring.clone(), terms: Terms::new() }
    }

    pub fn one(ring: &Arc<AmbiskewRing>) -> Self {
        Self::from_base(ring, BaseElem::one(&ring.sig))
    }

    pub fn x(ring: &Arc<AmbiskewRing>) -> Self {
        Self::term(ring, 1, BaseElem::one(&ring.sig), 0)
    }

    pub fn y(ring: &Arc<AmbiskewRing>) -> Self {
        Self::term(ring, 0, BaseElem::one(&ring.sig), 1)
    }

    pub fn from_base(ring: &Arc<AmbiskewRing>, a: BaseElem) -> Self {
        Self::term(ring, 0, a, 0)
    }

    /// `x^i a y^j`
    pub fn term(ring: &Arc<AmbiskewRing>, i: u32, a: BaseElem, j: u32) -> Self {
        let mut out = Self::zero(ring);
        add_into(&mut out.terms, (i, j), a);
        out
    }

    pub fn from_terms(
        ring: &Arc<AmbiskewRing>,
        terms: impl IntoIterator<Item = ((u32, u32), BaseElem)>,
    ) -> Result<Self> {
        let mut out = Self::zero(ring);
        for (k, a) in terms {
            if a.signature() != &ring.sig {
                return Err(Error::SignatureMismatch);
            }
            add_into(&mut out.terms, k, a);
        }
        Ok(out)
    }

    pub fn ring(&self) -> &Arc<AmbiskewRing> {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BaseElem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> BaseElem {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(|| BaseElem::zero(&self.ring.sig))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest `i + j` over the terms.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(&self.ring);
        for (&k, a) in &self.terms {
            add_into(&mut out.terms, k, a.scale(c));
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
        for (&k, a) in &rhs.terms {
            add_into(&mut out.terms, k, a.clone());
        }
        Ok(out)
    }

    /// `(x^i a y^j)(x^k b y^l) = Σ_{(p,c,r) ∈ y^j x^k} x^{i+p} α^p(a) c α^r(b) y^{r+l}`.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if !self.same_ring(rhs) {
            return Err(Error::SignatureMismatch);
        }
        let ring = &self.ring;
        let mut out = Self::zero(ring);
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                for (&(p, r), c) in ring.yx(j, k).iter() {
                    let left = &ring.alpha.apply(p as i64, a) * c;
                    let prod = &left * &ring.alpha.apply(r as i64, b);
                    add_into(&mut out.terms, (i + p, r + l), prod);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(&self.ring), |acc, _| &acc * self)
    }
}

impl PartialEq for OreElem {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.terms == other.terms
    }
}

impl Add for &OreElem {
    type Output = OreElem;
    fn add(self, rhs: &OreElem) -> OreElem {
        self.try_add(rhs).expect("ring mismatch")
    }
}

impl Sub for &OreElem {
    type Output = OreElem;
    fn sub(self, rhs: &OreElem) -> OreElem {
        self.try_add(&-rhs).expect("ring mismatch")
    }
}

impl Mul for &OreElem {
    type Output = OreElem;
    fn mul(self, rhs: &OreElem) -> OreElem {
        self.try_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &OreElem {
    type Output = OreElem;
    fn neg(self) -> OreElem {
        OreElem { ring: self.ring.clone(), terms: self.terms.iter().map(|(&k, a)| (k, -a)).collect() }
    }
}

fn gen_power(name: &str, e: u32) -> Option<String> {
    match e {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{e}")),
    }
}

impl fmt::Display for OreElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self
            .terms
            .iter()
            .map(|(&(i, j), a)| {
                let body = [gen_power("x", i), Some(format!("({a})")), gen_power("y", j)]
                    .into_iter()
                    .flatten()
                    .collect::<Vec<_>>()
                    .join(" * ");
                (false, body)
            })
            .collect();
        f.write_str(&join_signed(parts))
    }
}

impl fmt::Debug for OreElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OreElem({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t_ring(alpha: Automorphism, v: BaseElem, rho: Scalar) -> Arc<AmbiskewRing> {
        let sig = v.signature().clone();
        AmbiskewRing::new(&sig, alpha, v, rho).unwrap()
    }

    fn usl2() -> (Arc<AmbiskewRing>, BaseElem) {
        let sig = AlgebraSignature::polynomial("t");
        let t = BaseElem::var(&sig, 0);
        let r = t_ring(Automorphism::Shift(Scalar::from_int(2)), t.clone(), Scalar::one());
        let tm1 = &t - &BaseElem::one(&sig);
        let u = (&tm1 * &tm1).scale(&Scalar::ratio(-1, 4));
        (r, u)
    }

    // K[t], α(t) = q t, v = t, ρ = s
    fn toy_rho_s() -> Arc<AmbiskewRing> {
        let sig = AlgebraSignature::polynomial("t");
        t_ring(Automorphism::Scaling(vec![Scalar::q()]), BaseElem::var(&sig, 0), Scalar::s())
    }

    #[test]
    fn y_times_x_rearranges_the_defining_relation() {
        let r = toy_rho_s();
        let x = OreElem::x(&r);
        let y = OreElem::y(&r);
        let expected = (&(&x * &y) - &OreElem::from_base(&r, r.v().clone())).scale(&Scalar::s().inv().unwrap());
        assert_eq!(&y * &x, expected);
        // x y stays as written
        assert_eq!((&x * &y).terms().count(), 1);
    }

    #[test]
    fn y_moves_past_base_elements_by_alpha() {
        let (r, _) = usl2();
        let t = OreElem::from_base(&r, BaseElem::var(r.signature(), 0));
        let y = OreElem::y(&r);
        let shifted = &BaseElem::var(r.signature(), 0) + &BaseElem::constant(r.signature(), Scalar::from_int(2));
        assert_eq!(&y * &t, OreElem::term(&r, 0, shifted, 1));
        // x t = (t - 2) x
        let x = OreElem::x(&r);
        let back = &BaseElem::var(r.signature(), 0) - &BaseElem::constant(r.signature(), Scalar::from_int(2));
        assert_eq!(&OreElem::from_base(&r, back) * &x, &x * &t);
    }

    #[test]
    fn usl2_v_power_is_m_t_plus_m_minus_one() {
        let (r, _) = usl2();
        let sig = r.signature().clone();
        assert!(r.v_power(0).is_zero());
        for m in 1..=8i64 {
            let t = BaseElem::var(&sig, 0);
            let expect = (&t + &BaseElem::constant(&sig, Scalar::from_int(m - 1))).scale(&Scalar::from_int(m));
            assert_eq!(r.v_power(m as u32), expect);
        }
    }

    #[test]
    fn v_power_recurrence_and_splitting_form() {
        let (r, u) = usl2();
        for m in 0..10 {
            let next = &r.v().clone() + &r.alpha().apply(1, &r.v_power(m)).scale(r.rho());
            assert_eq!(r.v_power(m + 1), next);
            assert_eq!(r.v_power(m), &u - &r.alpha().apply(m as i64, &u));
        }
    }

    #[test]
    fn x_y_squared_identity() {
        let r = toy_rho_s();
        let x = OreElem::x(&r);
        let y2 = OreElem::y(&r).pow(2);
        let lhs = &(&x * &y2) - &(&y2 * &x).scale(&Scalar::q());
        assert_eq!(lhs, OreElem::term(&r, 0, r.v_power(2), 1));
    }

    #[test]
    fn skew_commutation_holds_generic_rho() {
        let r = toy_rho_s();
        for m in 1..=6 {
            assert!(r.check_skewcomm(m), "m = {m}");
        }
        let (r, _) = usl2();
        for m in 1..=6 {
            assert!(r.check_skewcomm(m), "m = {m}");
        }
    }

    #[test]
    fn memo_table_agrees_with_repeated_multiplication() {
        let r = toy_rho_s();
        let x = OreElem::x(&r);
        let y = OreElem::y(&r);
        for j in 0..4 {
            for k in 0..4 {
                let folded = fold_left_gen(&y, j, &x.pow(k));
                let direct = &y.pow(j) * &x.pow(k);
                assert_eq!(folded, direct, "y^{j} x^{k}");
            }
        }
    }

    #[test]
    fn splitting_elements() {
        let (r, u) = usl2();
        assert!(r.splitting_check(&u).unwrap());
        assert!(!r.splitting_check(&BaseElem::var(r.signature(), 0)).unwrap());
        // toy ring: u = t / (1 - s^3)
        let r = toy_rho_s();
        let den = &Scalar::one() - &Scalar::s_pow(3);
        let u = BaseElem::var(r.signature(), 0).scale(&den.inv().unwrap());
        assert!(r.splitting_check(&u).unwrap());
    }

    #[test]
    fn casimir_is_normal() {
        let (r, u) = usl2();
        let z = r.casimir(&u).unwrap();
        assert!(r.check_casimir_normality(&z));
        assert_eq!(z.to_string(), "(1/4*t^2 - 1/2*t + 1/4) + x * (1) * y");
        let r = toy_rho_s();
        let den = &Scalar::one() - &Scalar::s_pow(3);
        let u = BaseElem::var(r.signature(), 0).scale(&den.inv().unwrap());
        let z = r.casimir(&u).unwrap();
        assert!(r.check_casimir_normality(&z));
        // not central when rho != 1
        let y = OreElem::y(&r);
        assert_ne!(&z * &y, &y * &z);
    }

    #[test]
    fn casimir_rejects_non_splitting() {
        let (r, _) = usl2();
        assert!(matches!(r.casimir(&BaseElem::var(r.signature(), 0)), Err(Error::NotSplitting(_))));
    }

    #[test]
    fn non_central_v_rejected() {
        let sig = AlgebraSignature::quantum_torus(3).unwrap();
        let alpha = Automorphism::Scaling(vec![Scalar::q_pow(-1), Scalar::one(), Scalar::q_pow(-1)]);
        assert!(matches!(
            AmbiskewRing::new(&sig, alpha, BaseElem::var(&sig, 0), Scalar::one()),
            Err(Error::NotCentral(_))
        ));
    }

    mod props {
        use proptest::prelude::*;

        use super::*;
        use crate::fuzz;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(32))]

            #[test]
            fn ore_product_is_associative(seed in any::<u64>()) {
                let r = toy_rho_s();
                let mut rng = fuzz::rng(seed);
                let [a, b, c] = [(); 3].map(|_| fuzz::random_ore(&mut rng, &r, 3, 2));
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            }

            #[test]
            fn casimir_translates_are_central(seed in any::<u64>()) {
                let (r, u) = usl2();
                let mut rng = fuzz::rng(seed);
                let lambda = fuzz::random_scalar(&mut rng);
                let z = &r.casimir(&u).unwrap() + &OreElem::from_base(&r, BaseElem::constant(r.signature(), lambda));
                let w = fuzz::random_ore(&mut rng, &r, 3, 3);
                prop_assert_eq!(&z * &w, &w * &z);
            }
        }
    }
}
