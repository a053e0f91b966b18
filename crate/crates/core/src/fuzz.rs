//! Seeded random elements and the property suites built on them.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::ambiskew::{AmbiskewRing, OreElem};
use crate::basealg::{AlgebraSignature, BaseElem, CentralPoly};
use crate::gwa::{GwaElem, GwaRing};
use crate::ideal::CentralIdeal;
use crate::scalar::Scalar;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small nonzero scalar: `(a + b s^k) / d` with `d ∈ {1, s, s + 1}`.
pub fn random_scalar<R: Rng>(rng: &mut R) -> Scalar {
    loop {
        let a = Scalar::from_int(rng.gen_range(-3..=3));
        let b = Scalar::from_int(rng.gen_range(-2..=2));
        let num = &a + &(&b * &Scalar::s_pow(rng.gen_range(-2..=2)));
        let den = [Scalar::one(), Scalar::s(), &Scalar::s() + &Scalar::one()].choose(rng).cloned().expect("nonempty");
        let c = &num / &den;
        if !c.is_zero() {
            return c;
        }
    }
}

pub fn random_base<R: Rng>(rng: &mut R, sig: &Arc<AlgebraSignature>, max_terms: usize, max_exp: i32) -> BaseElem {
    let n = rng.gen_range(1..=max_terms);
    let terms = (0..n).map(|_| {
        let e: Vec<i32> = (0..sig.nvars())
            .map(|i| if sig.is_invertible(i) { rng.gen_range(-max_exp..=max_exp) } else { rng.gen_range(0..=max_exp) })
            .collect();
        (e, random_scalar(rng))
    });
    let terms: Vec<_> = terms.collect();
    BaseElem::from_terms(sig, terms).expect("valid exponents")
}

/// Random central element in the central univariate subring.
pub fn random_central<R: Rng>(rng: &mut R, sig: &Arc<AlgebraSignature>, max_terms: usize, max_exp: i64) -> BaseElem {
    let lo = if sig.central_is_laurent() { -max_exp } else { 0 };
    let n = rng.gen_range(1..=max_terms);
    let p = CentralPoly::from_terms((0..n).map(|_| (rng.gen_range(lo..=max_exp), random_scalar(rng))).collect::<Vec<_>>());
    BaseElem::from_central(sig, &p).expect("valid exponents")
}

pub fn random_ore<R: Rng>(rng: &mut R, ring: &Arc<AmbiskewRing>, max_terms: usize, max_deg: u32) -> OreElem {
    let n = rng.gen_range(1..=max_terms);
    let terms: Vec<_> = (0..n)
        .map(|_| {
            let i = rng.gen_range(0..=max_deg);
            let j = rng.gen_range(0..=max_deg - i);
            ((i, j), random_base(rng, ring.signature(), 2, 1))
        })
        .collect();
    OreElem::from_terms(ring, terms).expect("same signature")
}

pub fn random_gwa<R: Rng>(rng: &mut R, ring: &Arc<GwaRing>, max_terms: usize, max_deg: i64) -> GwaElem {
    let n = rng.gen_range(1..=max_terms);
    (0..n).fold(GwaElem::zero(ring), |acc, _| {
        let d = rng.gen_range(-max_deg..=max_deg);
        &acc + &GwaElem::term(ring, d, random_base(rng, ring.signature(), 2, 1))
    })
}

/// Random ideal of `F[t]` / `F[t^{±1}]`: a product of linear factors at small
/// integer and `±s^k` points, optionally times `t² - s`.
pub fn random_ideal<R: Rng>(rng: &mut R, laurent: bool, var: &str) -> CentralIdeal {
    let mut g = CentralIdeal::unit(laurent, var);
    for _ in 0..rng.gen_range(0..=3) {
        let root = if rng.gen_bool(0.5) {
            Scalar::from_int(rng.gen_range(1..=4))
        } else {
            Scalar::s_pow(rng.gen_range(-2..=2))
        };
        let root = if rng.gen_bool(0.5) { -root } else { root };
        let p = CentralPoly::from_terms(vec![(1, Scalar::one()), (0, -root)]);
        g = g.product(&CentralIdeal::new(&p, laurent, var).expect("polynomial")).expect("same subring");
    }
    if rng.gen_bool(0.3) {
        let p = CentralPoly::from_terms(vec![(2, Scalar::one()), (0, -Scalar::s())]);
        g = g.product(&CentralIdeal::new(&p, laurent, var).expect("polynomial")).expect("same subring");
    }
    g
}

/// Result of one property suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteOutcome {
    pub name: String,
    pub trials: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl SuiteOutcome {
    fn run(name: &str, trials: usize, mut check: impl FnMut(usize) -> Option<String>) -> Self {
        let mut failures = 0;
        let mut first_failure = None;
        for k in 0..trials {
            if let Some(msg) = check(k) {
                failures += 1;
                first_failure.get_or_insert(msg);
            }
        }
        Self { name: name.to_string(), trials, failures, first_failure }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

pub fn base_associativity(seed: u64, sig: &Arc<AlgebraSignature>, trials: usize) -> SuiteOutcome {
    let mut r = rng(seed);
    SuiteOutcome::run("base associativity", trials, |_| {
        let [a, b, c] = [(); 3].map(|_| random_base(&mut r, sig, 5, 2));
        let lhs = &(&a * &b) * &c;
        let rhs = &a * &(&b * &c);
        (lhs != rhs).then(|| format!("({a})({b})({c})"))
    })
}

pub fn ore_associativity(seed: u64, ring: &Arc<AmbiskewRing>, trials: usize) -> SuiteOutcome {
    let mut r = rng(seed);
    SuiteOutcome::run("ore associativity", trials, |_| {
        let [a, b, c] = [(); 3].map(|_| random_ore(&mut r, ring, 3, 2));
        let lhs = &(&a * &b) * &c;
        let rhs = &a * &(&b * &c);
        (lhs != rhs).then(|| format!("({a})({b})({c})"))
    })
}

pub fn gwa_associativity(seed: u64, ring: &Arc<GwaRing>, trials: usize) -> SuiteOutcome {
    let mut r = rng(seed);
    SuiteOutcome::run("gwa associativity", trials, |_| {
        let [a, b, c] = [(); 3].map(|_| random_gwa(&mut r, ring, 3, 2));
        let lhs = &(&a * &b) * &c;
        let rhs = &a * &(&b * &c);
        (lhs != rhs).then(|| format!("({a})({b})({c})"))
    })
}

/// Homogeneous factors of degrees `d`, `e` multiply into degree `d + e`.
pub fn gwa_grading(seed: u64, ring: &Arc<GwaRing>, trials: usize) -> SuiteOutcome {
    let mut r = rng(seed);
    SuiteOutcome::run("gwa grading", trials, |_| {
        let d = r.gen_range(-3..=3);
        let e = r.gen_range(-3..=3);
        let a = GwaElem::term(ring, d, random_base(&mut r, ring.signature(), 3, 2));
        let b = GwaElem::term(ring, e, random_base(&mut r, ring.signature(), 3, 2));
        let p = &a * &b;
        p.degrees().iter().any(|&k| k != d + e).then(|| format!("deg({a} * {b}) = {:?}", p.degrees()))
    })
}

pub fn ideal_lattice(seed: u64, laurent: bool, trials: usize) -> SuiteOutcome {
    let mut r = rng(seed);
    SuiteOutcome::run("ideal lattice", trials, |_| {
        let [a, b, c] = [(); 3].map(|_| random_ideal(&mut r, laurent, "t"));
        let sum = |x: &CentralIdeal, y: &CentralIdeal| x.sum(y).expect("same subring");
        let cap = |x: &CentralIdeal, y: &CentralIdeal| x.intersect(y).expect("same subring");
        let mul = |x: &CentralIdeal, y: &CentralIdeal| x.product(y).expect("same subring");
        let laws = [
            sum(&a, &b) == sum(&b, &a),
            cap(&a, &b) == cap(&b, &a),
            sum(&sum(&a, &b), &c) == sum(&a, &sum(&b, &c)),
            cap(&cap(&a, &b), &c) == cap(&a, &cap(&b, &c)),
            sum(&a, &a) == a && cap(&a, &a) == a,
            mul(&a, &sum(&b, &c)) == sum(&mul(&a, &b), &mul(&a, &c)),
            sum(&a, &cap(&a, &b)) == a && cap(&a, &sum(&a, &b)) == a,
        ];
        laws.iter().position(|ok| !ok).map(|k| format!("law {k} fails on {a:?}, {b:?}, {c:?}"))
    })
}
