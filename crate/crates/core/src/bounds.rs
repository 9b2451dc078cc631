//! Bounds on `[n, k, d; r]` LRCs and on classical linear codes, evaluated in
//! exact arithmetic, and the optimality classification built on them.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::macwilliams::binomial;

/// Smallest `m ≥ 0` with `base^m ≥ x`.
pub fn ceil_log(base: u32, x: &BigRational) -> u32 {
    assert!(base >= 2 && x.is_positive());
    let mut m = 0;
    let mut p = BigInt::one();
    let b = BigInt::from(base);
    while &p * x.denom() < *x.numer() {
        p *= &b;
        m += 1;
    }
    m
}

fn rat(x: BigInt) -> BigRational {
    BigRational::from_integer(x)
}

/// `n − k − ⌈k/r⌉ + 2`; may be negative for infeasible parameters.
pub fn singleton_like_max_d(n: usize, k: usize, r: usize) -> i64 {
    n as i64 - k as i64 - k.div_ceil(r) as i64 + 2
}

/// An upper bound on `k_opt(n, d)`, the largest dimension of a binary linear
/// code of length `n` and minimum distance `d`.
pub trait KoptOracle {
    fn kopt(&self, n: usize, d: usize) -> usize;
}

/// `min(n − d + 1, largest k allowed by the Griesmer bound)`, and 0 when
/// `n < d`.
#[derive(Debug, Clone, Copy)]
pub struct DefaultKopt {
    pub q: u32,
}

impl Default for DefaultKopt {
    fn default() -> Self {
        DefaultKopt { q: 2 }
    }
}

impl KoptOracle for DefaultKopt {
    fn kopt(&self, n: usize, d: usize) -> usize {
        if n < d || d == 0 {
            return 0;
        }
        let singleton = n - d + 1;
        let mut k = 0;
        while k < singleton && griesmer_classical_min_n(k + 1, d, self.q) <= n {
            k += 1;
        }
        k
    }
}

/// The Singleton bound alone.
#[derive(Debug, Clone, Copy, Default)]
pub struct SingletonKopt;

impl KoptOracle for SingletonKopt {
    fn kopt(&self, n: usize, d: usize) -> usize {
        if n < d {
            0
        } else {
            n - d + 1
        }
    }
}

/// Tabulated `k_opt` values (`n d kmax` per line) over a fallback oracle.
#[derive(Debug, Clone, Default)]
pub struct KoptTable<O = DefaultKopt> {
    entries: HashMap<(usize, usize), usize>,
    fallback: O,
}

impl KoptTable<DefaultKopt> {
    /// Parses lines `n d kmax`; blank lines and lines starting with `#` are
    /// skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = HashMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Parse {
                    line: i + 1,
                    message: format!("expected `n d kmax`, found `{line}`"),
                })?;
            if nums.len() != 3 {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("expected 3 numbers, found {}", nums.len()),
                });
            }
            entries.insert((nums[0], nums[1]), nums[2]);
        }
        Ok(KoptTable {
            entries,
            fallback: DefaultKopt::default(),
        })
    }
}

impl<O: KoptOracle> KoptOracle for KoptTable<O> {
    fn kopt(&self, n: usize, d: usize) -> usize {
        self.entries
            .get(&(n, d))
            .copied()
            .unwrap_or_else(|| self.fallback.kopt(n, d))
    }
}

/// Largest `k` satisfying `k ≤ τr + k_opt(n − τ(r+1), d)` for every
/// `1 ≤ τ ≤ min(⌈n/(r+1)⌉, ⌈k/r⌉)` with a nonnegative residual length.
pub fn cm_bound_max_k(n: usize, d: usize, r: usize, oracle: &impl KoptOracle) -> usize {
    let holds = |k: usize| {
        let top = n.div_ceil(r + 1).min(k.div_ceil(r));
        (1..=top)
            .filter(|&t| t * (r + 1) <= n)
            .all(|t| k <= t * r + oracle.kopt(n - t * (r + 1), d))
    };
    (0..=n).rev().find(|&k| holds(k)).unwrap_or(0)
}

/// `Σ_{i<k} ⌈d/q^i⌉`.
pub fn griesmer_classical_min_n(k: usize, d: usize, q: u32) -> usize {
    let mut total = 0;
    let mut p: usize = 1;
    for _ in 0..k {
        total += d.div_ceil(p);
        p = p.saturating_mul(q as usize);
    }
    total
}

/// One Griesmer-like term `τ(r+1) + Σ_{i<k−rτ} ⌈d/q^i⌉` at any `τ` with
/// `rτ ≤ k`; `τ = 0` is the classical Griesmer sum.
pub fn griesmer_like_term(k: usize, d: usize, r: usize, q: u32, tau: usize) -> Result<usize> {
    if r * tau > k {
        return Err(Error::InvalidParameters(format!(
            "τ = {tau} exceeds k/r = {k}/{r}"
        )));
    }
    Ok(tau * (r + 1) + griesmer_classical_min_n(k - r * tau, d, q))
}

/// The `l` with `q^(l−1) < d ≤ q^l`.
pub fn griesmer_level(d: usize, q: u32) -> usize {
    let mut l = 0;
    let mut p: usize = 1;
    while p < d {
        p = p.saturating_mul(q as usize);
        l += 1;
    }
    l
}

/// The Griesmer-like terms `τ(r+1) + Σ_{i<k−rτ} ⌈d/q^i⌉` for
/// `1 ≤ τ ≤ ⌈k/r⌉ − 1`, as `(τ, value)` pairs.
pub fn griesmer_like_terms(k: usize, d: usize, r: usize, q: u32) -> Result<Vec<(usize, usize)>> {
    if k <= r {
        return Err(Error::EmptyTauRange);
    }
    Ok((1..k.div_ceil(r))
        .map(|t| (t, t * (r + 1) + griesmer_classical_min_n(k - r * t, d, q)))
        .collect())
}

/// The Griesmer-like lower bound on `n`: the largest term over `τ`.
pub fn griesmer_like_min_n(k: usize, d: usize, r: usize, q: u32) -> Result<usize> {
    Ok(griesmer_like_terms(k, d, r, q)?
        .into_iter()
        .map(|(_, v)| v)
        .max()
        .expect("tau range is nonempty"))
}

/// Largest `d` admitted at length `n` by both the Griesmer-like bound (when
/// `k > r`) and the classical Griesmer bound.
pub fn griesmer_like_max_d(n: usize, k: usize, r: usize, q: u32) -> usize {
    let ok = |d: usize| {
        griesmer_classical_min_n(k, d, q) <= n
            && (k <= r || griesmer_like_min_n(k, d, r, q).expect("k > r") <= n)
    };
    let mut d = 0;
    while d < n && ok(d + 1) {
        d += 1;
    }
    d
}

/// `Σ_{s ≤ ⌊(d−1)/4⌋} C(ℓ, s) 3^s`, the number of vectors in a ball of the
/// group-parity space.
pub fn omega(ell: usize, d: usize) -> BigInt {
    let top = d.saturating_sub(1) / 4;
    (0..=top as u64)
        .map(|s| binomial(ell as u64, s) * BigInt::from(3).pow(s as u32))
        .sum()
}

/// `Σ_{i ≤ ⌊(d−1)/2⌋} C(n, i)(q−1)^i`.
pub fn ball(n: usize, d: usize, q: u32) -> BigInt {
    let top = d.saturating_sub(1) / 2;
    (0..=top as u64)
        .map(|i| binomial(n as u64, i) * BigInt::from(q - 1).pow(i as u32))
        .sum()
}

/// A dimension bound `k ≤ max_k` together with the denominator it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionBound {
    pub max_k: i64,
    pub denominator: BigRational,
}

fn check_lrc_shape(n: usize) -> Result<usize> {
    if !n.is_multiple_of(3) {
        return Err(Error::InvalidShape { n, modulus: 3 });
    }
    Ok(n / 3)
}

/// Sphere-packing-like bound for `[3ℓ, k, d; 2]` binary LRCs:
/// `k ≤ 2n/3 − ⌈log₂ Ω_d⌉`.
pub fn sphere_packing_like_max_k(n: usize, d: usize) -> Result<DimensionBound> {
    let ell = check_lrc_shape(n)?;
    let om = rat(omega(ell, d));
    Ok(DimensionBound {
        max_k: (2 * ell) as i64 - ceil_log(2, &om) as i64,
        denominator: om,
    })
}

/// Classical sphere-packing bound: `k ≤ n − ⌈log_q O_d⌉`.
pub fn sphere_packing_classical_max_k(n: usize, d: usize, q: u32) -> DimensionBound {
    let o = rat(ball(n, d, q));
    DimensionBound {
        max_k: n as i64 - ceil_log(q, &o) as i64,
        denominator: o,
    }
}

/// Classical Johnson bound for even `d`:
/// `O'_d = O_d + C(n, d/2)(q−1)^(d/2) / ⌊2n/d⌋`, `k ≤ n − ⌈log_q O'_d⌉`.
pub fn johnson_classical_max_k(n: usize, d: usize, q: u32) -> Result<DimensionBound> {
    if d % 2 == 1 {
        return Err(Error::OddDistance(d));
    }
    let a = 2 * n / d.max(1);
    if d == 0 || a == 0 {
        return Err(Error::InvalidParameters(format!(
            "distance {d} exceeds twice the length {n}"
        )));
    }
    let h = (d / 2) as u64;
    let extra = BigRational::new(
        binomial(n as u64, h) * BigInt::from(q - 1).pow(h as u32),
        BigInt::from(a),
    );
    let o = rat(ball(n, d, q)) + extra;
    Ok(DimensionBound {
        max_k: n as i64 - ceil_log(q, &o) as i64,
        denominator: o,
    })
}

/// The Johnson-like bound for `[3ℓ, k, d; 2]` binary LRCs with `4 | d`, in
/// its improved form (divisor `⌊4n/(3d)⌋`) and its original form (divisor
/// `⌊2n/d⌋`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JohnsonLike {
    pub improved: DimensionBound,
    pub original: DimensionBound,
}

pub fn johnson_like_improved_max_k(n: usize, d: usize) -> Result<JohnsonLike> {
    let ell = check_lrc_shape(n)?;
    if d % 2 == 1 {
        return Err(Error::OddDistance(d));
    }
    if d == 0 || !d.is_multiple_of(4) {
        return Err(Error::InvalidParameters(format!(
            "the Johnson-like bound needs d ≡ 0 mod 4, got {d}"
        )));
    }
    let (div_new, div_old) = (4 * n / (3 * d), 2 * n / d);
    if div_new == 0 {
        return Err(Error::InvalidParameters(format!(
            "distance {d} is too large for length {n}"
        )));
    }
    let q = (d / 4) as u64;
    let top = binomial(ell as u64, q) * BigInt::from(3).pow(q as u32);
    let om = rat(omega(ell, d));
    let make = |div: usize| {
        let den = om.clone() + BigRational::new(top.clone(), BigInt::from(div));
        DimensionBound {
            max_k: (2 * ell) as i64 - ceil_log(2, &den) as i64,
            denominator: den,
        }
    };
    Ok(JohnsonLike {
        improved: make(div_new),
        original: make(div_old),
    })
}

/// Which parameter a bound limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    MaxK,
    MinN,
    MaxD,
}

/// One evaluated bound. `value` is exact: an integer or a fraction `p/q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub name: &'static str,
    pub value: String,
    pub direction: Direction,
    pub attained: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    pub singleton_optimal: bool,
    pub griesmer_like_d_optimal: bool,
    pub perfect: bool,
    pub k_optimal_sp: bool,
    /// `None` when the Johnson-like bound does not apply (`4 ∤ d`).
    pub nearly_perfect: Option<bool>,
    pub k_optimal_johnson: Option<bool>,
}

/// All bounds evaluated for one `[n, k, d; r]` parameter set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub r: usize,
    pub entries: Vec<BoundEntry>,
    pub verdicts: Verdicts,
    /// `Ω_d`
    pub omega: Option<String>,
    /// `Ω'_d` with the improved divisor
    pub omega_prime: Option<String>,
}

impl BoundReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn entry(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

/// Exact decimal rendering when the denominator is a power of 2 and 5,
/// otherwise `p/q`.
pub fn format_rational(x: &BigRational) -> String {
    if x.is_integer() {
        return x.numer().to_string();
    }
    let mut den = x.denom().clone();
    let (two, five) = (BigInt::from(2), BigInt::from(5));
    let mut twos = 0u32;
    let mut fives = 0u32;
    while den.is_even() {
        den /= &two;
        twos += 1;
    }
    while (&den % &five).is_zero() {
        den /= &five;
        fives += 1;
    }
    if !den.is_one() {
        return format!("{}/{}", x.numer(), x.denom());
    }
    let digits = twos.max(fives);
    let scaled = x * rat(BigInt::from(10).pow(digits));
    let s = scaled.to_integer().abs().to_string();
    let s = format!("{:0>width$}", s, width = digits as usize + 1);
    let (int, frac) = s.split_at(s.len() - digits as usize);
    let sign = if x.is_negative() { "-" } else { "" };
    format!("{sign}{int}.{frac}")
}

/// Classifies binary `[n, k, d; r]` parameters against every bound.
///
/// LRC-specific bounds (sphere-packing-like, Johnson-like) assume disjoint
/// repair groups of size 3 and are evaluated only when `r = 2` and `3 | n`.
pub fn classify(n: usize, k: usize, d: usize, r: usize) -> BoundReport {
    classify_with(n, k, d, r, &DefaultKopt::default())
}

/// [`classify`] with a caller-supplied `k_opt` oracle for the C-M bound.
pub fn classify_with(
    n: usize,
    k: usize,
    d: usize,
    r: usize,
    oracle: &impl KoptOracle,
) -> BoundReport {
    let mut entries = Vec::new();
    let s = singleton_like_max_d(n, k, r);
    let singleton_optimal = d as i64 == s;
    entries.push(BoundEntry {
        name: "singleton_like",
        value: s.to_string(),
        direction: Direction::MaxD,
        attained: singleton_optimal,
    });
    let cm = cm_bound_max_k(n, d, r, oracle);
    entries.push(BoundEntry {
        name: "cm",
        value: cm.to_string(),
        direction: Direction::MaxK,
        attained: k == cm,
    });
    let gc = griesmer_classical_min_n(k, d, 2);
    entries.push(BoundEntry {
        name: "griesmer_classical",
        value: gc.to_string(),
        direction: Direction::MinN,
        attained: n == gc,
    });
    if let Ok(gl) = griesmer_like_min_n(k, d, r, 2) {
        entries.push(BoundEntry {
            name: "griesmer_like",
            value: gl.to_string(),
            direction: Direction::MinN,
            attained: n == gl,
        });
    }
    let gmax = griesmer_like_max_d(n, k, r, 2);
    entries.push(BoundEntry {
        name: "griesmer_like_max_d",
        value: gmax.to_string(),
        direction: Direction::MaxD,
        attained: d == gmax,
    });
    let mut verdicts = Verdicts {
        singleton_optimal,
        griesmer_like_d_optimal: d == gmax,
        perfect: false,
        k_optimal_sp: false,
        nearly_perfect: None,
        k_optimal_johnson: None,
    };
    let (mut omega_s, mut omega_p) = (None, None);
    if r == 2 && n.is_multiple_of(3) {
        let full = rat(BigInt::from(2).pow((2 * n / 3) as u32));
        let size = rat(BigInt::from(2).pow(k as u32));
        let sp = sphere_packing_like_max_k(n, d).expect("3 | n");
        verdicts.perfect = &size * &sp.denominator == full;
        verdicts.k_optimal_sp = k as i64 == sp.max_k;
        omega_s = Some(format_rational(&sp.denominator));
        entries.push(BoundEntry {
            name: "sphere_packing_like",
            value: sp.max_k.to_string(),
            direction: Direction::MaxK,
            attained: verdicts.k_optimal_sp,
        });
        if let Ok(j) = johnson_like_improved_max_k(n, d) {
            let nearly = &size * &j.improved.denominator == full;
            verdicts.nearly_perfect = Some(nearly);
            verdicts.k_optimal_johnson = Some(k as i64 == j.improved.max_k);
            omega_p = Some(format_rational(&j.improved.denominator));
            entries.push(BoundEntry {
                name: "johnson_like_original",
                value: j.original.max_k.to_string(),
                direction: Direction::MaxK,
                attained: k as i64 == j.original.max_k,
            });
            entries.push(BoundEntry {
                name: "johnson_like_improved",
                value: j.improved.max_k.to_string(),
                direction: Direction::MaxK,
                attained: k as i64 == j.improved.max_k,
            });
        }
    }
    let sc = sphere_packing_classical_max_k(n, d, 2);
    entries.push(BoundEntry {
        name: "sphere_packing_classical",
        value: sc.max_k.to_string(),
        direction: Direction::MaxK,
        attained: k as i64 == sc.max_k,
    });
    if let Ok(jc) = johnson_classical_max_k(n, d, 2) {
        entries.push(BoundEntry {
            name: "johnson_classical",
            value: jc.max_k.to_string(),
            direction: Direction::MaxK,
            attained: k as i64 == jc.max_k,
        });
    }
    BoundReport {
        n,
        k,
        d,
        r,
        entries,
        verdicts,
        omega: omega_s,
        omega_prime: omega_p,
    }
}

/// `⌈log₂(num/den)⌉`.
pub fn ceil_log2_ratio(num: u128, den: u128) -> u32 {
    ceil_log(2, &BigRational::new(BigInt::from(num), BigInt::from(den)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn ceil_log_edges() {
        assert_eq!(ceil_log(2, &r(1, 1)), 0);
        assert_eq!(ceil_log(2, &r(16, 1)), 4);
        assert_eq!(ceil_log(2, &r(17, 1)), 5);
        assert_eq!(ceil_log(2, &r(33, 2)), 5);
        assert_eq!(ceil_log(4, &r(8257, 1)), 7);
        assert_eq!(ceil_log2_ratio(21077, 2), 14);
    }

    #[test]
    fn singleton_like() {
        assert_eq!(singleton_like_max_d(15, 10, 2), 2);
        assert_eq!(singleton_like_max_d(12, 4, 2), 8);
        // k = r reduces to the Singleton bound
        assert_eq!(singleton_like_max_d(9, 3, 3), 9 - 3 + 1);
    }

    #[test]
    fn griesmer_values() {
        assert_eq!(griesmer_classical_min_n(2, 7, 4), 9);
        assert_eq!(griesmer_classical_min_n(4, 14, 2), 27);
        assert_eq!(griesmer_classical_min_n(1, 11, 3), 11);
        assert_eq!(griesmer_like_min_n(4, 6, 2, 2), Ok(12));
        assert_eq!(griesmer_like_min_n(6, 30, 2, 2), Ok(60));
        assert_eq!(griesmer_like_terms(6, 8, 2, 2), Ok(vec![(1, 18), (2, 18)]));
        assert_eq!(griesmer_like_min_n(2, 6, 2, 2), Err(Error::EmptyTauRange));
        assert_eq!(griesmer_like_max_d(27, 4, 2, 2), 14);
        assert_eq!(griesmer_like_max_d(12, 4, 2, 2), 6);
        assert_eq!(griesmer_like_max_d(3, 2, 2, 2), 2);
    }

    #[test]
    fn sphere_packing_values() {
        let b = sphere_packing_like_max_k(15, 6).unwrap();
        assert_eq!((b.max_k, b.denominator.clone()), (6, r(16, 1)));
        let b = sphere_packing_like_max_k(6, 2).unwrap();
        assert_eq!((b.max_k, b.denominator), (4, r(1, 1)));
        assert_eq!(
            sphere_packing_like_max_k(10, 2),
            Err(Error::InvalidShape { n: 10, modulus: 3 })
        );
        let c = sphere_packing_classical_max_k(5, 3, 4);
        assert_eq!((c.max_k, c.denominator), (3, r(16, 1)));
        let c = sphere_packing_classical_max_k(43, 5, 4);
        assert_eq!((c.max_k, c.denominator), (36, r(8257, 1)));
        let c = sphere_packing_classical_max_k(9, 1, 4);
        assert_eq!((c.max_k, c.denominator), (9, r(1, 1)));
        let b = sphere_packing_like_max_k(129, 10).unwrap();
        assert_eq!(b.denominator, r(8257, 1));
        assert_eq!(ceil_log(2, &b.denominator), 14);
    }

    #[test]
    fn johnson_values() {
        let j = johnson_classical_max_k(6, 4, 4).unwrap();
        assert_eq!((j.max_k, j.denominator), (3, r(64, 1)));
        let j = johnson_classical_max_k(17, 4, 4).unwrap();
        assert_eq!(j.denominator, r(205, 1));
        let j = johnson_classical_max_k(7, 2, 4).unwrap();
        assert_eq!((j.max_k, j.denominator), (6, r(4, 1)));
        assert_eq!(johnson_classical_max_k(7, 3, 2), Err(Error::OddDistance(3)));

        let j = johnson_like_improved_max_k(51, 8).unwrap();
        assert_eq!((j.improved.max_k, j.improved.denominator), (26, r(205, 1)));
        let j = johnson_like_improved_max_k(18, 8).unwrap();
        assert_eq!((j.improved.max_k, j.improved.denominator), (6, r(64, 1)));
        let j = johnson_like_improved_max_k(12, 4).unwrap();
        assert_eq!((j.improved.max_k, j.improved.denominator), (6, r(4, 1)));

        let j = johnson_like_improved_max_k(75, 12).unwrap();
        assert_eq!(j.improved.denominator, r(21077, 2));
        assert_eq!(j.improved.max_k, 36);
        assert_eq!(j.original.denominator, r(7951, 1));
        assert_eq!(j.original.max_k, 37);
    }

    #[test]
    fn oracles() {
        let d = DefaultKopt::default();
        assert_eq!(d.kopt(7, 3), 4);
        assert_eq!(d.kopt(3, 5), 0);
        assert!(cm_bound_max_k(15, 6, 2, &d) >= 6);
        for n in 3..40 {
            for dd in 1..n {
                assert!(cm_bound_max_k(n, dd, 2, &SingletonKopt) >= cm_bound_max_k(n, dd, 2, &d));
            }
        }
        let t = KoptTable::parse("# n d k\n7 3 4\n\n8 3 4\n").unwrap();
        assert_eq!(t.kopt(8, 3), 4);
        assert_eq!(t.kopt(7, 3), 4);
        assert!(KoptTable::parse("7 3\n").is_err());
    }

    #[test]
    fn rational_rendering() {
        assert_eq!(format_rational(&r(21077, 2)), "10538.5");
        assert_eq!(format_rational(&r(205, 1)), "205");
        assert_eq!(format_rational(&r(1, 3)), "1/3");
        assert_eq!(format_rational(&r(1, 8)), "0.125");
    }

    #[test]
    fn classify_examples() {
        let rep = classify(15, 6, 6, 2);
        assert!(rep.verdicts.perfect);
        assert!(rep.verdicts.k_optimal_sp);
        let rep = classify(18, 6, 8, 2);
        assert_eq!(rep.verdicts.nearly_perfect, Some(true));
        assert_eq!(rep.omega_prime.as_deref(), Some("64"));
        let rep = classify(12, 8, 2, 2);
        assert!(rep.verdicts.singleton_optimal);
        let rep = classify(12, 4, 6, 2);
        assert!(rep.verdicts.griesmer_like_d_optimal);
        assert!(!rep.verdicts.singleton_optimal);
    }

    #[test]
    fn griesmer_terms_and_levels() {
        assert_eq!(griesmer_level(1, 4), 0);
        assert_eq!(griesmer_level(4, 4), 1);
        assert_eq!(griesmer_level(5, 4), 2);
        assert_eq!(griesmer_level(16, 4), 2);
        assert_eq!(griesmer_like_term(4, 14, 2, 2, 0).unwrap(), 27);
        assert_eq!(griesmer_like_term(4, 14, 2, 2, 1).unwrap(), 24);
        assert_eq!(griesmer_like_term(6, 30, 2, 2, 1).unwrap(), 60);
        assert_eq!(griesmer_like_term(8, 22, 2, 2, 2).unwrap(), 48);
        assert!(griesmer_like_term(4, 14, 2, 2, 3).is_err());
    }
}
