//! Erasure repair on binary LRCs: local repair inside a group, global
//! decoding by linear solving, and a seeded failure-injection simulator.

use std::collections::{BTreeMap, BTreeSet};

use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::galois::Gf2;
use crate::lrc::BinaryLrc;
use crate::matspace::FieldMatrix;

/// A set of erased coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ErasurePattern {
    positions: BTreeSet<usize>,
}

impl ErasurePattern {
    pub fn new(positions: impl IntoIterator<Item = usize>, n: usize) -> Result<Self> {
        let positions: BTreeSet<usize> = positions.into_iter().collect();
        if let Some(&p) = positions.iter().find(|&&p| p >= n) {
            return Err(Error::InvalidParameters(format!(
                "erased position {p} is outside 0..{n}"
            )));
        }
        Ok(ErasurePattern { positions })
    }

    pub fn positions(&self) -> &BTreeSet<usize> {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn contains(&self, pos: usize) -> bool {
        self.positions.contains(&pos)
    }

    /// Number of erasures in each repair group.
    pub fn per_group(&self, lrc: &BinaryLrc) -> Vec<usize> {
        lrc.groups()
            .iter()
            .map(|g| g.iter().filter(|p| self.contains(**p)).count())
            .collect()
    }

    /// Applies the pattern to a word, marking erased symbols as `None`.
    pub fn apply(&self, word: &[Gf2]) -> Vec<Option<Gf2>> {
        word.iter()
            .enumerate()
            .map(|(i, &x)| (!self.contains(i)).then_some(x))
            .collect()
    }
}

/// How an erased symbol was restored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RepairMethod {
    Local,
    Global,
    Failed,
}

/// Result of [`global_decode`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepairOutcome {
    pub word: Vec<Gf2>,
    pub methods: BTreeMap<usize, RepairMethod>,
    /// Symbols read: 2 per local repair, plus every surviving symbol when a
    /// global solve was needed.
    pub accessed: usize,
}

impl RepairOutcome {
    pub fn local_count(&self) -> usize {
        self.methods
            .values()
            .filter(|m| **m == RepairMethod::Local)
            .count()
    }
}

/// Restores the erased symbol at `pos` as the sum of its two group
/// partners.
pub fn local_repair(lrc: &BinaryLrc, word: &[Option<Gf2>], pos: usize) -> Result<Gf2> {
    let g = lrc.groups()[lrc.group_of(pos)];
    let mut sum = Gf2::ZERO;
    for p in g.into_iter().filter(|&p| p != pos) {
        sum += word[p].ok_or(Error::GroupDamaged { pos, partner: p })?;
    }
    Ok(sum)
}

/// Recovers every erased symbol. Groups with a single erasure are repaired
/// locally; the rest are found by solving `H_E·x = H_Ē·c_Ē` over GF(2).
///
/// Fails with [`Error::AmbiguousDecode`] when the parity-check columns at the
/// erased positions are dependent; the dimension reported is `|E|` minus
/// their rank.
pub fn global_decode(lrc: &BinaryLrc, word: &[Option<Gf2>]) -> Result<RepairOutcome> {
    let n = lrc.n();
    if word.len() != n {
        return Err(Error::ShapeMismatch(format!(
            "word has length {}, code has length {n}",
            word.len()
        )));
    }
    let erased: Vec<usize> = (0..n).filter(|&i| word[i].is_none()).collect();
    let h = lrc.code().parity_check();
    let he = h.select_columns(&erased);
    let rank = he.rank();
    if rank < erased.len() {
        return Err(Error::AmbiguousDecode {
            dimension: erased.len() - rank,
        });
    }
    let mut out: Vec<Option<Gf2>> = word.to_vec();
    let mut methods = BTreeMap::new();
    let mut accessed = 0;
    for g in lrc.groups() {
        let missing: Vec<usize> = g.iter().copied().filter(|&p| word[p].is_none()).collect();
        if let [p] = missing[..] {
            out[p] = Some(local_repair(lrc, word, p)?);
            methods.insert(p, RepairMethod::Local);
            accessed += 2;
        }
    }
    let rest: Vec<usize> = erased
        .iter()
        .copied()
        .filter(|p| out[*p].is_none())
        .collect();
    if !rest.is_empty() {
        let known: Vec<Gf2> = out.iter().map(|x| x.unwrap_or(Gf2::ZERO)).collect();
        let syndrome = h.mul_vec(&known);
        let hr = h.select_columns(&rest);
        let aug = FieldMatrix::from_fn(h.rows(), rest.len() + 1, |i, j| {
            if j < rest.len() {
                hr.get(i, j)
            } else {
                syndrome[i]
            }
        });
        let red = aug.rref();
        for (row, &pc) in red.pivots.iter().enumerate() {
            if pc < rest.len() {
                out[rest[pc]] = Some(red.matrix.get(row, rest.len()));
            }
        }
        for &p in &rest {
            methods.insert(p, RepairMethod::Global);
        }
        accessed += n - erased.len();
    }
    Ok(RepairOutcome {
        word: out
            .into_iter()
            .map(|x| x.expect("every erasure resolved"))
            .collect(),
        methods,
        accessed,
    })
}

/// How erasures are drawn in a simulation trial.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ErasureModel {
    /// Exactly `t` distinct positions, uniformly.
    RandomT(usize),
    /// Each position independently with probability `p`.
    PerSymbol(f64),
}

impl std::fmt::Display for ErasureModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ErasureModel::RandomT(t) => write!(f, "random_t_erasures({t})"),
            ErasureModel::PerSymbol(p) => write!(f, "per_symbol_prob({p})"),
        }
    }
}

/// Aggregate statistics of a simulation run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimulationReport {
    pub trials: u64,
    pub model: String,
    pub seed: u64,
    pub success_rate: f64,
    /// Locally repaired symbols over all erased symbols.
    pub local_fraction: f64,
    pub mean_accessed: f64,
}

impl SimulationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Increment between per-trial seeds (the SplitMix64 gamma).
const TRIAL_STRIDE: u64 = 0x9E37_79B9_7F4A_7C15;

/// The generator for trial `i`: SplitMix64 with initial state
/// `seed + i·0x9E3779B97F4A7C15 (mod 2^64)`.
///
/// SplitMix64 advances `s ← s + 0x9E3779B97F4A7C15` and outputs
/// `z = s; z = (z ^ (z >> 30))·0xBF58476D1CE4E5B9; z = (z ^ (z >> 27))·0x94D049BB133111EB; z ^ (z >> 31)`.
fn trial_rng(seed: u64, i: u64) -> SplitMix64 {
    SplitMix64::from_seed(
        seed.wrapping_add(i.wrapping_mul(TRIAL_STRIDE))
            .to_le_bytes(),
    )
}

/// Uniform in `0..n`: the high 64 bits of `next_u64() · n`.
fn below(rng: &mut SplitMix64, n: usize) -> usize {
    ((rng.next_u64() as u128 * n as u128) >> 64) as usize
}

/// Uniform in `[0, 1)` from the top 53 bits.
fn unit(rng: &mut SplitMix64) -> f64 {
    (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64
}

#[derive(Default, Clone, Copy)]
struct Tally {
    success: u64,
    erased: u64,
    local: u64,
    accessed: u64,
}

impl std::ops::Add for Tally {
    type Output = Tally;
    fn add(self, o: Tally) -> Tally {
        Tally {
            success: self.success + o.success,
            erased: self.erased + o.erased,
            local: self.local + o.local,
            accessed: self.accessed + o.accessed,
        }
    }
}

fn run_trial(lrc: &BinaryLrc, model: ErasureModel, rng: &mut SplitMix64) -> Tally {
    let n = lrc.n();
    let message: Vec<Gf2> = (0..lrc.k())
        .map(|_| Gf2::new(rng.next_u64() >> 63 == 1))
        .collect();
    let word = lrc.code().encode(&message);
    let positions: Vec<usize> = match model {
        ErasureModel::RandomT(t) => {
            // partial Fisher–Yates
            let mut idx: Vec<usize> = (0..n).collect();
            let t = t.min(n);
            for i in 0..t {
                let j = i + below(rng, n - i);
                idx.swap(i, j);
            }
            idx.truncate(t);
            idx
        }
        ErasureModel::PerSymbol(p) => (0..n).filter(|_| unit(rng) < p).collect(),
    };
    let pattern = ErasurePattern::new(positions, n).expect("positions are in range");
    let mut tally = Tally {
        erased: pattern.len() as u64,
        ..Tally::default()
    };
    if let Ok(out) = global_decode(lrc, &pattern.apply(&word)) {
        if out.word == word {
            tally.success = 1;
        }
        tally.local = out.local_count() as u64;
        tally.accessed = out.accessed as u64;
    }
    tally
}

/// Runs `trials` independent erasure trials on random codewords.
///
/// Trial `i` draws everything from its own generator (see [`trial_rng`]),
/// so the report depends only on the inputs, never on scheduling.
pub fn simulate(
    lrc: &BinaryLrc,
    trials: u64,
    model: ErasureModel,
    seed: u64,
) -> Result<SimulationReport> {
    if trials == 0 {
        return Err(Error::InvalidParameters("trials must be ≥ 1".into()));
    }
    if let ErasureModel::PerSymbol(p) = model {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidParameters(format!(
                "probability {p} is outside [0, 1]"
            )));
        }
    }
    let total = (0..trials)
        .into_par_iter()
        .map(|i| run_trial(lrc, model, &mut trial_rng(seed, i)))
        .reduce(Tally::default, |a, b| a + b);
    Ok(SimulationReport {
        trials,
        model: model.to_string(),
        seed,
        success_rate: total.success as f64 / trials as f64,
        local_fraction: if total.erased == 0 {
            0.0
        } else {
            total.local as f64 / total.erased as f64
        },
        mean_accessed: total.accessed as f64 / trials as f64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lrc::concatenate;
    use crate::outer::{hamming4, hexacode};
    use num_traits::Zero;

    #[test]
    fn splitmix_reference_values() {
        // reference SplitMix64 outputs for state 1234567
        let mut r = SplitMix64::from_seed(1234567u64.to_le_bytes());
        assert_eq!(r.next_u64(), 6457827717110365317);
        assert_eq!(r.next_u64(), 3203168211198807973);
    }

    #[test]
    fn local_repair_cases() {
        let lrc = concatenate(&hamming4(2).unwrap()).unwrap();
        let mut w = vec![Some(Gf2::ZERO); 15];
        w[0] = Some(Gf2::ONE);
        w[2] = None;
        assert_eq!(local_repair(&lrc, &w, 2), Ok(Gf2::ONE));
        w[0] = Some(Gf2::ZERO);
        assert_eq!(local_repair(&lrc, &w, 2), Ok(Gf2::ZERO));
        w[1] = None;
        assert_eq!(
            local_repair(&lrc, &w, 2),
            Err(Error::GroupDamaged { pos: 2, partner: 1 })
        );
    }

    #[test]
    fn empty_pattern_is_identity() {
        let lrc = concatenate(&hexacode()).unwrap();
        let word =
            lrc.code()
                .encode(&[Gf2::ONE, Gf2::ZERO, Gf2::ONE, Gf2::ONE, Gf2::ZERO, Gf2::ONE]);
        let out = global_decode(&lrc, &ErasurePattern::default().apply(&word)).unwrap();
        assert_eq!(out.word, word);
        assert!(out.methods.is_empty());
        assert_eq!(out.accessed, 0);
    }

    #[test]
    fn two_full_groups_of_the_hexacode_lrc() {
        let lrc = concatenate(&hexacode()).unwrap();
        let word = lrc.code().encode(&[Gf2::ONE; 6]);
        let p = ErasurePattern::new(0..6, 18).unwrap();
        let out = global_decode(&lrc, &p.apply(&word)).unwrap();
        assert_eq!(out.word, word);
        assert!(out.methods.values().all(|m| *m == RepairMethod::Global));
    }

    #[test]
    fn simulation_is_deterministic() {
        let lrc = concatenate(&hamming4(2).unwrap()).unwrap();
        let a = simulate(&lrc, 200, ErasureModel::RandomT(1), 7).unwrap();
        assert_eq!(a.success_rate, 1.0);
        assert_eq!(a.local_fraction, 1.0);
        assert_eq!(a.mean_accessed, 2.0);
        let b = simulate(&lrc, 200, ErasureModel::PerSymbol(0.2), 7).unwrap();
        assert_eq!(
            b,
            simulate(&lrc, 200, ErasureModel::PerSymbol(0.2), 7).unwrap()
        );
        let c = simulate(&lrc, 50, ErasureModel::RandomT(5), 1).unwrap();
        assert_eq!(c.success_rate, 1.0);
        let d = simulate(&lrc, 50, ErasureModel::RandomT(15), 1).unwrap();
        assert_eq!(d.success_rate, 0.0);
        assert!(simulate(&lrc, 0, ErasureModel::RandomT(1), 1).is_err());
    }

    #[test]
    fn every_five_erasures_decode_on_the_15_6_6_code() {
        let lrc = concatenate(&hamming4(2).unwrap()).unwrap();
        let word =
            lrc.code()
                .encode(&[Gf2::ONE, Gf2::ZERO, Gf2::ONE, Gf2::ONE, Gf2::ZERO, Gf2::ONE]);
        let mut count = 0;
        for mask in 0u32..1 << 15 {
            if mask.count_ones() != 5 {
                continue;
            }
            let p = ErasurePattern::new((0..15).filter(|i| mask >> i & 1 == 1), 15).unwrap();
            let out = global_decode(&lrc, &p.apply(&word)).unwrap();
            assert_eq!(out.word, word);
            count += 1;
        }
        assert_eq!(count, 3003);
    }

    #[test]
    fn support_of_a_minimum_word_is_ambiguous() {
        let lrc = concatenate(&hamming4(2).unwrap()).unwrap();
        let cert = lrc.code().min_distance(1 << 20).unwrap();
        let support: Vec<usize> = (0..15).filter(|&i| !cert.witness[i].is_zero()).collect();
        assert_eq!(support.len(), 6);
        let word = vec![Gf2::ZERO; 15];
        let p = ErasurePattern::new(support, 15).unwrap();
        assert_eq!(
            global_decode(&lrc, &p.apply(&word)),
            Err(Error::AmbiguousDecode { dimension: 1 })
        );
    }

    #[test]
    fn out_of_range_positions_are_rejected() {
        assert!(ErasurePattern::new([3, 15], 15).is_err());
    }
}
