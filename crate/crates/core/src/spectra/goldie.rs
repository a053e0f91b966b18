use serde::{Deserialize, Serialize};

use super::jm::{window, JmTable};
use crate::error::Result;
use crate::ideal::CentralIdeal;

/// One checked fact about central ideals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessLine {
    pub claim: String,
    pub passed: bool,
}

/// Uniformity witnesses for the summand `J^(r)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandWitness {
    pub r: u32,
    pub comaximality: Vec<WitnessLine>,
    pub injectivity: Vec<WitnessLine>,
    pub annihilation: Vec<WitnessLine>,
    pub window: Vec<WitnessLine>,
    /// Every `ℓ ∈ [r - 2m, r + 2m]` with `α^{-ℓ}(u) ∈ M_r`.
    pub membership_set: Vec<i64>,
}

impl SummandWitness {
    fn lines(&self) -> impl Iterator<Item = &WitnessLine> {
        self.comaximality.iter().chain(&self.injectivity).chain(&self.annihilation).chain(&self.window)
    }

    pub fn passed(&self) -> bool {
        self.lines().all(|w| w.passed)
    }
}

/// Decomposition of `W/J(M)` into `m` uniform right ideals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldieReport {
    pub m: u32,
    /// Telescoping sums and directness, per degree and stage.
    pub direct_sum: Vec<WitnessLine>,
    pub summands: Vec<SummandWitness>,
    /// `Some(m)` iff every witness passed.
    pub rank: Option<u32>,
}

impl GoldieReport {
    pub fn passed(&self) -> bool {
        self.rank.is_some()
    }

    pub fn failures(&self) -> Vec<String> {
        self.direct_sum
            .iter()
            .chain(self.summands.iter().flat_map(|s| s.lines()))
            .filter(|w| !w.passed)
            .map(|w| w.claim.clone())
            .collect()
    }
}

struct Log(Vec<WitnessLine>);

impl Log {
    fn push(&mut self, claim: String, ok: Result<bool>) {
        self.0.push(WitnessLine { claim, passed: matches!(ok, Ok(true)) });
    }
}

fn eq(a: Result<CentralIdeal>, b: &CentralIdeal) -> Result<bool> {
    a.map(|a| &a == b)
}

fn not(r: Result<bool>) -> Result<bool> {
    r.map(|b| !b)
}

fn pi(lo: i64, skip: Option<i64>, hi: i64) -> String {
    match skip {
        Some(r) => format!("Π({lo},^{r},{hi})"),
        None => format!("Π({lo},{hi})"),
    }
}

/// Staged sums for one degree over the window `[lo, hi]`:
/// `Σ_{j=lo}^{s} Π(lo, ĵ, hi) = Π(s+1, hi)` and each new summand meets the
/// previous stage in `Π(lo, hi)`.
fn staged(log: &mut Log, t: &[CentralIdeal], d: i64, lo: i64, hi: i64) {
    let full = window(t, lo, None, hi);
    let mut acc: Option<CentralIdeal> = None;
    for s in lo..=hi {
        let next = window(t, lo, Some(s as usize), hi);
        if let Some(prev) = &acc {
            log.push(
                format!("deg {d}: stage {} ∩ {} = {}", s - 1, pi(lo, Some(s), hi), pi(lo, None, hi)),
                eq(prev.intersect(&next), &full),
            );
        }
        let sum = match acc.take() {
            Some(prev) => prev.sum(&next).expect("same subring"),
            None => next,
        };
        log.push(
            format!("deg {d}: Σ_{{j={lo}}}^{s} Π({lo},^j,{hi}) = {}", pi(s + 1, None, hi)),
            Ok(sum == window(t, s + 1, None, hi)),
        );
        acc = Some(sum);
    }
}

/// Witnesses that `W/J(M) = J^(0) ⊕ … ⊕ J^(m-1)` with each `J^(r)` uniform.
pub fn goldie_decomposition(table: &JmTable) -> GoldieReport {
    let m = table.m as i64;
    let t = &table.translates;

    let mut direct = Log(Vec::new());
    for d in 0..m {
        staged(&mut direct, t, d, 0, m - d - 1);
    }
    for d in 1..m {
        staged(&mut direct, t, -d, d, m - 1);
    }

    let unit = CentralIdeal::unit(table.ideal.is_laurent(), table.ideal.var());
    let full = window(t, 0, None, m - 1);
    let au = |k: i64| table.shifted_u_image(k);

    let mut summands = Vec::new();
    for r in 0..m {
        let mr = &t[r as usize];
        let skip = Some(r as usize);
        let rest = window(t, 0, skip, m - 1);

        let mut a = Log(Vec::new());
        a.push(format!("M_{r} + {} = A", pi(0, Some(r), m - 1)), eq(mr.sum(&rest), &unit));
        a.push(format!("M_{r} ∩ {} = {}", pi(0, Some(r), m - 1), pi(0, None, m - 1)), eq(mr.intersect(&rest), &full));

        let mut b = Log(Vec::new());
        for d in 1..=m - r - 1 {
            b.push(format!("α^{d}(u) ∉ M_{r}"), not(mr.contains(&au(d))));
        }
        for d in 1..=r {
            b.push(format!("α^{}(u) ∉ M_{r}", 1 - d), not(mr.contains(&au(1 - d))));
        }

        let ur = table.alpha_u(-r);
        let mut c = Log(Vec::new());
        for d in 1..=m - r - 1 {
            let lhs = window(t, 0, skip, m - d - 1).product(&ur);
            c.push(
                format!("{}·α^{}(u) ⊆ {}", pi(0, Some(r), m - d - 1), -r, pi(0, None, m - d - 1)),
                lhs.and_then(|l| l.is_subset_of(&window(t, 0, None, m - d - 1))),
            );
        }
        for d in 1..=r {
            let lhs = window(t, d, skip, m - 1).product(&ur);
            c.push(
                format!("{}·α^{}(u) ⊆ {}", pi(d, Some(r), m - 1), -r, pi(d, None, m - 1)),
                lhs.and_then(|l| l.is_subset_of(&window(t, d, None, m - 1))),
            );
        }

        let mut w = Log(Vec::new());
        for l in r - m + 1..=r + m - 1 {
            if l != r {
                w.push(format!("α^{}(u) ∉ M_{r}", -l), not(mr.contains(&au(-l))));
            }
        }
        let membership_set: Vec<i64> =
            (r - 2 * m..=r + 2 * m).filter(|&l| matches!(mr.contains(&au(-l)), Ok(true))).collect();
        let expected = vec![r - m, r];
        w.push(format!("{{ℓ : α^-ℓ(u) ∈ M_{r}}} = {{{}, {r}}}", r - m), Ok(membership_set == expected));

        summands.push(SummandWitness {
            r: r as u32,
            comaximality: a.0,
            injectivity: b.0,
            annihilation: c.0,
            window: w.0,
            membership_set,
        });
    }

    let all = direct.0.iter().all(|w| w.passed) && summands.iter().all(SummandWitness::passed);
    GoldieReport { m: table.m, direct_sum: direct.0, summands, rank: all.then_some(table.m) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use crate::spectra::families::{make_example, ExampleFamily};
    use crate::spectra::jm::build_jm;
    use crate::spectra::scan::exceptional_lambdas;

    #[test]
    fn usl2_m2_rank_two() {
        let ex = make_example(&ExampleFamily::Usl2).unwrap();
        let t = build_jm(&ex, &Scalar::one(), 2).unwrap();
        let g = goldie_decomposition(&t);
        assert_eq!(g.failures(), Vec::<String>::new());
        assert_eq!(g.rank, Some(2));
        assert_eq!(g.summands[0].membership_set, vec![-2, 0]);
        assert_eq!(g.summands[1].membership_set, vec![-1, 1]);
    }

    #[test]
    fn qtorus3_ranks() {
        let fam = ExampleFamily::Qtorus { p: 3 };
        let ex = make_example(&fam).unwrap();
        for m in 1..=4 {
            for l in exceptional_lambdas(&fam, m).unwrap() {
                let g = goldie_decomposition(&build_jm(&ex, &l.value, m).unwrap());
                assert_eq!(g.rank, Some(m), "m={m} failures={:?}", g.failures());
            }
        }
    }

    #[test]
    fn corrupted_translates_lose_rank() {
        let ex = make_example(&ExampleFamily::Usl2).unwrap();
        let mut t = build_jm(&ex, &Scalar::one(), 2).unwrap();
        t.translates[1] = t.translates[0].clone();
        let g = goldie_decomposition(&t);
        assert_eq!(g.rank, None);
        assert!(!g.failures().is_empty());
    }
}
