//! Base algebras A: quantum tori / q-commuting (Laurent) polynomial rings in
//! normal form, together with the diagonal and shift automorphisms the
//! example families need.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{DensePoly, LaurentPoly};
use crate::scalar::{join_signed, scalar_term, Scalar};

/// Exponent vector of a normal-form monomial `z_1^{e_1} ... z_n^{e_n}`.
pub type Exponents = Vec<i32>;

/// Univariate Laurent polynomials over F in the designated central variable.
pub type CentralPoly = LaurentPoly<Scalar>;

/// Generators `z_1..z_n` with `z_i z_j = q_ij z_j z_i` for `i > j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraSignature {
    names: Vec<String>,
    invertible: Vec<bool>,
    // commutation[i][j] = q_ij for i > j
    commutation: Vec<Vec<Scalar>>,
    central: usize,
    // distinct nontrivial q_ij with the (i, j) pairs that use them
    twists: Vec<(Scalar, Vec<(usize, usize)>)>,
}

impl AlgebraSignature {
    /// `commutation` lists `((i, j), q_ij)` with `i > j`; unlisted pairs commute.
    pub fn new(
        names: Vec<String>,
        invertible: Vec<bool>,
        commutation: Vec<((usize, usize), Scalar)>,
        central: usize,
    ) -> Result<Arc<Self>> {
        let n = names.len();
        if n == 0 || invertible.len() != n {
            return Err(Error::InvalidSignature("variable count mismatch".into()));
        }
        if central >= n {
            return Err(Error::InvalidSignature(format!("central index {central} out of range")));
        }
        let mut table: Vec<Vec<Scalar>> = (0..n).map(|i| vec![Scalar::one(); i]).collect();
        for ((i, j), q) in commutation {
            if i >= n || j >= i {
                return Err(Error::InvalidSignature(format!("commutation entry ({i}, {j}) needs i > j")));
            }
            if q.is_zero() {
                return Err(Error::InvalidSignature(format!("q_{i}{j} is zero")));
            }
            if (i == central || j == central) && !q.is_one() {
                return Err(Error::InvalidSignature(format!(
                    "central variable {} must commute with every generator",
                    names[central]
                )));
            }
            table[i][j] = q;
        }
        let mut twists: Vec<(Scalar, Vec<(usize, usize)>)> = Vec::new();
        for (i, row) in table.iter().enumerate() {
            for (j, q) in row.iter().enumerate() {
                if q.is_one() {
                    continue;
                }
                match twists.iter_mut().find(|(c, _)| c == q) {
                    Some((_, pairs)) => pairs.push((i, j)),
                    None => twists.push((q.clone(), vec![(i, j)])),
                }
            }
        }
        Ok(Arc::new(Self { names, invertible, commutation: table, central, twists }))
    }

    /// `K[t]`
    pub fn polynomial(name: &str) -> Arc<Self> {
        Self::new(vec![name.into()], vec![false], vec![], 0).expect("valid signature")
    }

    /// `K[t^{±1}]`
    pub fn laurent(name: &str) -> Arc<Self> {
        Self::new(vec![name.into()], vec![true], vec![], 0).expect("valid signature")
    }

    /// Commutative signature with the given invertibility flags.
    pub fn commutative(names: &[&str], invertible: &[bool], central: usize) -> Result<Arc<Self>> {
        Self::new(names.iter().map(|s| s.to_string()).collect(), invertible.to_vec(), vec![], central)
    }

    /// Quantum torus on `z_1..z_p`: for `i > j`, `q_ij = q^{-1}` when `i` is
    /// even and `j` odd, otherwise 1. `z_p` is the central variable.
    pub fn quantum_torus(p: usize) -> Result<Arc<Self>> {
        if p == 0 {
            return Err(Error::InvalidSignature("quantum torus needs p >= 1".into()));
        }
        let mut comm = Vec::new();
        for i in 1..=p {
            for j in 1..i {
                if i % 2 == 0 && j % 2 == 1 {
                    comm.push(((i - 1, j - 1), Scalar::q_pow(-1)));
                }
            }
        }
        let names = (1..=p).map(|i| format!("z{i}")).collect();
        Self::new(names, vec![true; p], comm, p - 1)
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_invertible(&self, i: usize) -> bool {
        self.invertible[i]
    }

    pub fn central_var(&self) -> usize {
        self.central
    }

    /// Whether the central subring is a Laurent ring.
    pub fn central_is_laurent(&self) -> bool {
        self.invertible[self.central]
    }

    /// `q_ij` for `i > j`; 1 on or above the diagonal.
    pub fn q_ij(&self, i: usize, j: usize) -> Scalar {
        if i > j {
            self.commutation[i][j].clone()
        } else {
            Scalar::one()
        }
    }

    pub fn is_commutative(&self) -> bool {
        self.twists.is_empty()
    }

    /// The scalar `λ` with `z^a z^b = λ z^{a+b}`, i.e. `Π_{i>j} q_ij^{a_i b_j}`.
    pub fn monomial_twist(&self, a: &[i32], b: &[i32]) -> Scalar {
        let mut out = Scalar::one();
        for (q, pairs) in &self.twists {
            let e: i64 = pairs.iter().map(|&(i, j)| a[i] as i64 * b[j] as i64).sum();
            if e != 0 {
                out = &out * &q.pow(e).expect("q_ij is nonzero");
            }
        }
        out
    }

    fn check_exponents(&self, e: &[i32]) -> Result<()> {
        if e.len() != self.nvars() {
            return Err(Error::InvalidSignature("exponent vector length".into()));
        }
        for (i, &x) in e.iter().enumerate() {
            if x < 0 && !self.invertible[i] {
                return Err(Error::InvalidSignature(format!("{} is not invertible", self.names[i])));
            }
        }
        Ok(())
    }

    fn unit_vector(&self, g: usize) -> Exponents {
        let mut e = vec![0; self.nvars()];
        e[g] = 1;
        e
    }

    fn render_monomial(&self, e: &[i32]) -> String {
        let parts: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| if x == 1 { self.names[i].clone() } else { format!("{}^{x}", self.names[i]) })
            .collect();
        parts.join("*")
    }
}

/// Normal-form element of a base algebra: exponent vectors to coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct BaseElem {
    sig: Arc<AlgebraSignature>,
    terms: BTreeMap<Exponents, Scalar>,
}

fn same_sig(a: &Arc<AlgebraSignature>, b: &Arc<AlgebraSignature>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl BaseElem {
    pub fn zero(sig: &Arc<AlgebraSignature>) -> Self {
        Self { sig: sig.clone(), terms: BTreeMap::new() }
    }

    pub fn one(sig: &Arc<AlgebraSignature>) -> Self {
        Self::constant(sig, Scalar::one())
    }

    pub fn constant(sig: &Arc<AlgebraSignature>, c: Scalar) -> Self {
        let mut out = Self::zero(sig);
        out.add_term(vec![0; sig.nvars()], c);
        out
    }

    /// The generator `z_i` (0-based index).
    pub fn var(sig: &Arc<AlgebraSignature>, i: usize) -> Self {
        let mut out = Self::zero(sig);
        out.add_term(sig.unit_vector(i), Scalar::one());
        out
    }

    pub fn monomial(sig: &Arc<AlgebraSignature>, exps: Exponents, c: Scalar) -> Result<Self> {
        sig.check_exponents(&exps)?;
        let mut out = Self::zero(sig);
        out.add_term(exps, c);
        Ok(out)
    }

    pub fn from_terms(
        sig: &Arc<AlgebraSignature>,
        terms: impl IntoIterator<Item = (Exponents, Scalar)>,
    ) -> Result<Self> {
        let mut out = Self::zero(sig);
        for (e, c) in terms {
            sig.check_exponents(&e)?;
            out.add_term(e, c);
        }
        Ok(out)
    }

    /// Embeds a polynomial in the central variable.
    pub fn from_central(sig: &Arc<AlgebraSignature>, p: &CentralPoly) -> Result<Self> {
        let k = sig.central_var();
        Self::from_terms(
            sig,
            p.terms().map(|(e, c)| {
                let mut v = vec![0; sig.nvars()];
                v[k] = e as i32;
                (v, c.clone())
            }),
        )
    }

    fn add_term(&mut self, e: Exponents, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn signature(&self) -> &Arc<AlgebraSignature> {
        &self.sig
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(e, c)| e.iter().all(|&x| x == 0) && c.is_one())
    }

    /// The constant term.
    pub fn constant_term(&self) -> Scalar {
        self.terms.get(&vec![0; self.sig.nvars()]).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.sig);
        }
        Self { sig: self.sig.clone(), terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect() }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        if !same_sig(&self.sig, &rhs.sig) {
            return Err(Error::SignatureMismatch);
        }
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if !same_sig(&self.sig, &rhs.sig) {
            return Err(Error::SignatureMismatch);
        }
        let mut out = Self::zero(&self.sig);
        let commutative = self.sig.is_commutative();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let e: Exponents = a.iter().zip(b).map(|(x, y)| x + y).collect();
                let mut c = ca * cb;
                if !commutative {
                    c = &c * &self.sig.monomial_twist(a, b);
                }
                out.add_term(e, c);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.sig);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// True iff the element commutes with every generator.
    pub fn is_central(&self) -> bool {
        if self.sig.is_commutative() {
            return true;
        }
        (0..self.sig.nvars()).all(|g| {
            let z = self.sig.unit_vector(g);
            self.terms.keys().all(|e| self.sig.monomial_twist(e, &z) == self.sig.monomial_twist(&z, e))
        })
    }

    /// The element as a Laurent polynomial in the central variable, when it
    /// only involves that variable.
    pub fn central_project(&self) -> Option<CentralPoly> {
        let k = self.sig.central_var();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(i, &x)| i != k && x != 0) {
                return None;
            }
            terms.push((e[k] as i64, c.clone()));
        }
        Some(CentralPoly::from_terms(terms))
    }
}

impl Add for &BaseElem {
    type Output = BaseElem;
    fn add(self, rhs: &BaseElem) -> BaseElem {
        self.try_add(rhs).expect("signature mismatch")
    }
}

impl Sub for &BaseElem {
    type Output = BaseElem;
    fn sub(self, rhs: &BaseElem) -> BaseElem {
        self.try_add(&-rhs).expect("signature mismatch")
    }
}

impl Mul for &BaseElem {
    type Output = BaseElem;
    fn mul(self, rhs: &BaseElem) -> BaseElem {
        self.try_mul(rhs).expect("signature mismatch")
    }
}

impl Neg for &BaseElem {
    type Output = BaseElem;
    fn neg(self) -> BaseElem {
        BaseElem { sig: self.sig.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl fmt::Display for BaseElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.terms.iter().rev().map(|(e, c)| scalar_term(c, &self.sig.render_monomial(e))).collect();
        f.write_str(&join_signed(parts))
    }
}

impl fmt::Debug for BaseElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BaseElem({self})")
    }
}

/// The automorphisms supported on base algebras.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Automorphism {
    /// `z_i -> c_i z_i`
    Scaling(Vec<Scalar>),
    /// `t -> t + mu` on a single polynomial variable.
    Shift(Scalar),
}

impl Automorphism {
    pub fn validate(&self, sig: &AlgebraSignature) -> Result<()> {
        match self {
            Automorphism::Scaling(cs) => {
                if cs.len() != sig.nvars() {
                    return Err(Error::InvalidAutomorphism("one scaling factor per variable".into()));
                }
                if cs.iter().any(|c| c.is_zero()) {
                    return Err(Error::InvalidAutomorphism("scaling factors must be nonzero".into()));
                }
                // must respect z_i z_j = q_ij z_j z_i: automatic for diagonal maps
                Ok(())
            }
            Automorphism::Shift(_) => {
                if sig.nvars() != 1 || sig.is_invertible(0) {
                    return Err(Error::InvalidAutomorphism(
                        "shift needs a single non-invertible variable".into(),
                    ));
                }
                Ok(())
            }
        }
    }

    /// Applies the `k`-th power (negative `k` for the inverse).
    pub fn apply(&self, k: i64, a: &BaseElem) -> BaseElem {
        if k == 0 {
            return a.clone();
        }
        match self {
            Automorphism::Scaling(cs) => {
                let mut out = BaseElem::zero(&a.sig);
                for (e, c) in &a.terms {
                    let mut f = c.clone();
                    for (ci, &ei) in cs.iter().zip(e) {
                        if ei != 0 && !ci.is_one() {
                            f = &f * &ci.pow(k * ei as i64).expect("nonzero scaling");
                        }
                    }
                    out.add_term(e.clone(), f);
                }
                out
            }
            Automorphism::Shift(mu) => {
                let p = DensePoly::new({
                    let deg = a.terms.keys().map(|e| e[0]).max().unwrap_or(0).max(0) as usize;
                    let mut v = vec![Scalar::zero(); deg + 1];
                    for (e, c) in &a.terms {
                        v[e[0] as usize] = c.clone();
                    }
                    v
                });
                let shifted = p.compose(&DensePoly::new(vec![mu * &Scalar::from_int(k), Scalar::one()]));
                let mut out = BaseElem::zero(&a.sig);
                for (i, c) in shifted.coeffs().iter().enumerate() {
                    out.add_term(vec![i as i32], c.clone());
                }
                out
            }
        }
    }

    /// Applies the `k`-th power to a polynomial in the central variable.
    pub fn apply_central(&self, k: i64, central: usize, p: &CentralPoly) -> CentralPoly {
        if k == 0 || p.is_zero() {
            return p.clone();
        }
        match self {
            Automorphism::Scaling(cs) => {
                let c = cs[central].pow(k).expect("nonzero scaling");
                CentralPoly::from_terms(p.terms().map(|(e, a)| (e, a * &c.pow(e).expect("nonzero"))))
            }
            Automorphism::Shift(mu) => {
                let poly = p.to_poly().expect("shift acts on a polynomial ring");
                let shifted = poly.compose(&DensePoly::new(vec![mu * &Scalar::from_int(k), Scalar::one()]));
                CentralPoly::from_poly(shifted)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qt(p: usize) -> Arc<AlgebraSignature> {
        AlgebraSignature::quantum_torus(p).unwrap()
    }

    fn qt_alpha(p: usize) -> Automorphism {
        Automorphism::Scaling((1..=p).map(|i| if i % 2 == 0 { Scalar::one() } else { Scalar::q_pow(-1) }).collect())
    }

    #[test]
    fn quantum_torus_relation() {
        let sig = qt(3);
        let z1 = BaseElem::var(&sig, 0);
        let z2 = BaseElem::var(&sig, 1);
        let lhs = &z2 * &z1;
        let rhs = (&z1 * &z2).scale(&Scalar::q_pow(-1));
        assert_eq!(lhs, rhs);
        assert_eq!(&z1 * &BaseElem::one(&sig), z1);
    }

    #[test]
    fn twist_matches_single_swap_rewriting() {
        // z^a z^b by bubble-sorting the concatenated word one swap at a time
        fn by_swaps(sig: &AlgebraSignature, a: &[i32], b: &[i32]) -> Scalar {
            let mut word: Vec<(usize, i32)> = Vec::new();
            for (i, &x) in a.iter().enumerate() {
                for _ in 0..x.abs() {
                    word.push((i, x.signum()));
                }
            }
            for (i, &x) in b.iter().enumerate() {
                for _ in 0..x.abs() {
                    word.push((i, x.signum()));
                }
            }
            let mut c = Scalar::one();
            let mut swapped = true;
            while swapped {
                swapped = false;
                for k in 0..word.len().saturating_sub(1) {
                    let (i, si) = word[k];
                    let (j, sj) = word[k + 1];
                    if i > j {
                        // z_i^si z_j^sj = q_ij^(si*sj) z_j^sj z_i^si
                        c = &c * &sig.q_ij(i, j).pow((si * sj) as i64).unwrap();
                        word.swap(k, k + 1);
                        swapped = true;
                    }
                }
            }
            c
        }
        let sig = qt(5);
        let samples = [
            (vec![1, 2, -1, 0, 1], vec![-1, 1, 2, 1, 0]),
            (vec![0, -2, 1, 1, -1], vec![2, 0, -1, 1, 3]),
            (vec![3, 1, 0, -1, 0], vec![0, 0, 2, 2, 1]),
        ];
        for (a, b) in samples {
            assert_eq!(sig.monomial_twist(&a, &b), by_swaps(&sig, &a, &b));
        }
    }

    #[test]
    fn polynomial_square() {
        let sig = AlgebraSignature::polynomial("t");
        let t = BaseElem::var(&sig, 0);
        assert_eq!((&t * &t).to_string(), "t^2");
    }

    #[test]
    fn shift_automorphism() {
        let sig = AlgebraSignature::polynomial("t");
        let alpha = Automorphism::Shift(Scalar::from_int(2));
        alpha.validate(&sig).unwrap();
        let t = BaseElem::var(&sig, 0);
        let two = BaseElem::constant(&sig, Scalar::from_int(2));
        assert_eq!(alpha.apply(1, &t), &t + &two);
        let four = BaseElem::constant(&sig, Scalar::from_int(4));
        let expected = &(&(&t * &t) + &(&t * &four)) + &four;
        assert_eq!(alpha.apply(1, &(&t * &t)), expected);
        for m in -5..=10 {
            let shift = BaseElem::constant(&sig, Scalar::from_int(2 * m));
            assert_eq!(alpha.apply(m, &t), &t + &shift);
        }
    }

    #[test]
    fn torus_automorphism_scales_odd_generators() {
        let sig = qt(3);
        let alpha = qt_alpha(3);
        let z1 = BaseElem::var(&sig, 0);
        assert_eq!(alpha.apply(1, &z1), z1.scale(&Scalar::q_pow(-1)));
        let z2 = BaseElem::var(&sig, 1);
        assert_eq!(alpha.apply(1, &z2), z2);
        let w = &(&z1 * &z2) + &BaseElem::var(&sig, 2);
        assert_eq!(alpha.apply(-3, &alpha.apply(3, &w)), w);
    }

    #[test]
    fn invalid_automorphisms_rejected() {
        let sig = AlgebraSignature::laurent("t");
        assert!(Automorphism::Shift(Scalar::one()).validate(&sig).is_err());
        assert!(Automorphism::Scaling(vec![Scalar::zero()]).validate(&sig).is_err());
        assert!(Automorphism::Scaling(vec![]).validate(&sig).is_err());
    }

    #[test]
    fn centrality() {
        let sig = qt(3);
        assert!(BaseElem::var(&sig, 2).is_central());
        assert!(!BaseElem::var(&sig, 0).is_central());
        let k = AlgebraSignature::polynomial("t");
        assert!(BaseElem::var(&k, 0).is_central());
        for p in [1usize, 3, 5, 7] {
            let s = qt(p);
            assert!(BaseElem::var(&s, p - 1).is_central());
        }
    }

    #[test]
    fn central_projection() {
        let sig = qt(3);
        let z3 = BaseElem::var(&sig, 2);
        let z3inv = BaseElem::monomial(&sig, vec![0, 0, -1], Scalar::q_pow(1)).unwrap();
        let u = &z3inv + &z3.scale(&Scalar::q());
        let proj = u.central_project().unwrap();
        assert_eq!(proj.coeff(-1), Scalar::q());
        assert_eq!(proj.coeff(1), Scalar::q());
        assert_eq!(BaseElem::from_central(&sig, &proj).unwrap(), u);
        assert!(BaseElem::var(&sig, 0).central_project().is_none());
        let five = BaseElem::constant(&sig, Scalar::from_int(5));
        assert_eq!(five.central_project().unwrap(), CentralPoly::constant(Scalar::from_int(5)));
    }

    #[test]
    fn signature_validation() {
        assert!(AlgebraSignature::new(vec!["a".into()], vec![true], vec![((0, 0), Scalar::one())], 0).is_err());
        assert!(AlgebraSignature::new(
            vec!["a".into(), "b".into()],
            vec![true, true],
            vec![((1, 0), Scalar::zero())],
            0
        )
        .is_err());
        // central variable must commute
        assert!(AlgebraSignature::new(
            vec!["a".into(), "b".into()],
            vec![true, true],
            vec![((1, 0), Scalar::q())],
            1
        )
        .is_err());
        let k = AlgebraSignature::polynomial("t");
        assert!(BaseElem::monomial(&k, vec![-1], Scalar::one()).is_err());
    }

    #[test]
    fn mismatched_signatures() {
        let a = BaseElem::var(&AlgebraSignature::polynomial("t"), 0);
        let b = BaseElem::var(&AlgebraSignature::laurent("t"), 0);
        assert_eq!(a.try_mul(&b), Err(Error::SignatureMismatch));
    }

    #[test]
    fn rendering_sorted_by_exponent() {
        let sig = qt(3);
        let z3inv = BaseElem::monomial(&sig, vec![0, 0, -1], Scalar::q()).unwrap();
        let u = &z3inv + &BaseElem::var(&sig, 2).scale(&Scalar::q());
        assert_eq!(u.to_string(), "s^2*z3 + s^2*z3^-1");
    }

    mod props {
        use proptest::prelude::*;

        use super::*;
        use crate::fuzz;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn torus_product_is_associative(seed in any::<u64>()) {
                let sig = qt(3);
                let mut rng = fuzz::rng(seed);
                let [a, b, c] = [(); 3].map(|_| fuzz::random_base(&mut rng, &sig, 5, 2));
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            }

            #[test]
            fn automorphism_powers_are_multiplicative_and_invertible(seed in any::<u64>(), k in -3i64..=3) {
                let sig = qt(3);
                let alpha = qt_alpha(3);
                let mut rng = fuzz::rng(seed);
                let a = fuzz::random_base(&mut rng, &sig, 4, 2);
                let b = fuzz::random_base(&mut rng, &sig, 4, 2);
                prop_assert_eq!(alpha.apply(k, &(&a * &b)), &alpha.apply(k, &a) * &alpha.apply(k, &b));
                prop_assert_eq!(alpha.apply(-k, &alpha.apply(k, &a)), a);
            }

            #[test]
            fn shift_powers_translate(m in 0i64..=10) {
                let sig = AlgebraSignature::polynomial("t");
                let t = BaseElem::var(&sig, 0);
                let image = Automorphism::Shift(Scalar::from_int(2)).apply(m, &t);
                prop_assert_eq!(image, &t + &BaseElem::constant(&sig, Scalar::from_int(2 * m)));
            }
        }
    }
}
