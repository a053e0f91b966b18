//! Fixed workloads shared by the criterion benchmarks under `benches/`.

use skewalg_core::fuzz;
use skewalg_core::{make_example, CentralIdeal, Example, ExampleFamily, GwaElem, GwaRing, OreElem, Scalar};
use std::sync::Arc;

pub fn example(fam: &ExampleFamily) -> Example {
    make_example(fam).expect("built-in family")
}

/// Seeded random Ore elements of total degree ≤ 3.
pub fn ore_pair(ex: &Example, seed: u64) -> (OreElem, OreElem) {
    let mut r = fuzz::rng(seed);
    (fuzz::random_ore(&mut r, &ex.ring, 3, 3), fuzz::random_ore(&mut r, &ex.ring, 3, 3))
}

pub fn gwa_pair(ring: &Arc<GwaRing>, seed: u64) -> (GwaElem, GwaElem) {
    let mut r = fuzz::rng(seed);
    (fuzz::random_gwa(&mut r, ring, 3, 3), fuzz::random_gwa(&mut r, ring, 3, 3))
}

pub fn ideal_pair(laurent: bool, seed: u64) -> (CentralIdeal, CentralIdeal) {
    let mut r = fuzz::rng(seed);
    (fuzz::random_ideal(&mut r, laurent, "t"), fuzz::random_ideal(&mut r, laurent, "t"))
}

/// `(q - q⁻¹)⁻²`, a typical non-monomial denominator.
pub fn quantum_denominator() -> Scalar {
    let d = &Scalar::q() - &Scalar::q_pow(-1);
    (&d * &d).inv().expect("nonzero")
}
