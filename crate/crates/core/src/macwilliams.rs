//! Krawtchouk polynomials and the MacWilliams transform, in exact integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::code::WeightDistribution;
use crate::error::{Error, Result};

/// Binomial coefficient as a big integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `K_j(i; n, q) = Σ_a (-1)^a (q-1)^(j-a) C(i, a) C(n-i, j-a)`.
pub fn krawtchouk(j: u64, i: u64, n: u64, q: u64) -> BigInt {
    let mut sum = BigInt::zero();
    for a in 0..=j {
        let term = BigInt::from(q - 1).pow((j - a) as u32)
            * binomial(i, a)
            * binomial(n - i.min(n), j - a);
        if a % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum
}

/// Recovers a code's weight distribution from its dual's:
/// `A_j = (1/|C^⊥|) Σ_i A_i^⊥ K_j(i; n, q)`.
///
/// `dual_size` is `|C^⊥|`. A non-integral or negative result means the input
/// was not the distribution of a linear code.
pub fn macwilliams(
    dual_weights: &WeightDistribution,
    dual_size: u128,
    n: usize,
    q: u32,
) -> Result<WeightDistribution> {
    if dual_weights.total() != dual_size {
        return Err(Error::InvalidParameters(format!(
            "dual distribution sums to {} but the dual has {dual_size} words",
            dual_weights.total()
        )));
    }
    let size = BigInt::from(dual_size);
    let mut counts = Vec::with_capacity(n + 1);
    for j in 0..=n as u64 {
        let mut acc = BigInt::zero();
        for (i, &a) in dual_weights.counts.iter().enumerate() {
            if a != 0 {
                acc += BigInt::from(a) * krawtchouk(j, i as u64, n as u64, q as u64);
            }
        }
        let (quot, rem) = acc.div_rem(&size);
        if !rem.is_zero() {
            return Err(Error::NonIntegerResult { index: j as usize });
        }
        let v = quot
            .to_u128()
            .ok_or(Error::NonIntegerResult { index: j as usize })?;
        counts.push(v);
    }
    Ok(WeightDistribution {
        n,
        k: n - dual_weights.k,
        q,
        counts,
    })
}

/// Weight distribution of the `[(4^t−1)/3, (4^t−1)/3 − t, 3]` Hamming code
/// over GF(4), from its dual's two weights `0` and `4^(t−1)`:
/// `A_j = 4^(−t)·(K_j(0) + (4^t − 1)·K_j(4^(t−1)))`.
pub fn hamming4_weights(t: u32) -> Result<WeightDistribution> {
    if !(1..=5).contains(&t) {
        return Err(Error::InvalidParameters(format!("t = {t} is out of range")));
    }
    let n = (4u64.pow(t) - 1) / 3;
    let simplex = WeightDistribution {
        n: n as usize,
        k: t as usize,
        q: 4,
        counts: (0..=n)
            .map(|i| match i {
                0 => 1,
                i if i == 4u64.pow(t - 1) => 4u128.pow(t) - 1,
                _ => 0,
            })
            .collect(),
    };
    macwilliams(&simplex, 4u128.pow(t), n as usize, 4)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Character-sum definition: `K_j(i) = Σ_{wt(x)=j} (-1)^{Tr(<x, u>)}`
    /// over GF(4)^n for a fixed `u` of weight `i`.
    fn krawtchouk_brute(j: usize, i: usize, n: usize) -> i64 {
        use crate::galois::{FiniteField, Gf4};
        // absolute trace GF(4) → GF(2): Tr(a) = a + a²
        let trace = |a: Gf4| -> u8 { (a + a * a).to_bits() };
        let u: Vec<Gf4> = (0..n)
            .map(|p| if p < i { Gf4::ONE } else { Gf4::ZERO })
            .collect();
        let mut total = 0i64;
        for idx in 0..4usize.pow(n as u32) {
            let mut t = idx;
            let x: Vec<Gf4> = (0..n)
                .map(|_| {
                    let a = Gf4::from_bits((t % 4) as u8);
                    t /= 4;
                    a
                })
                .collect();
            if x.iter().filter(|a| a.to_bits() != 0).count() != j {
                continue;
            }
            let ip = x.iter().zip(&u).fold(Gf4::ZERO, |s, (a, b)| s + *a * *b);
            total += if trace(ip) == 0 { 1 } else { -1 };
        }
        total
    }

    #[test]
    fn krawtchouk_examples() {
        for i in 0..5 {
            assert_eq!(krawtchouk(0, i, 5, 4), BigInt::one());
        }
        assert_eq!(krawtchouk(1, 0, 5, 4), BigInt::from(15));
        // frozen from the brute-force character sum below
        assert_eq!(
            krawtchouk(3, 4, 5, 4),
            BigInt::from(krawtchouk_brute(3, 4, 5))
        );
        assert_eq!(krawtchouk(3, 4, 5, 4), BigInt::from(14));
    }

    #[test]
    fn krawtchouk_matches_character_sum() {
        for n in 1..=4 {
            for i in 0..=n {
                for j in 0..=n {
                    assert_eq!(
                        krawtchouk(j as u64, i as u64, n as u64, 4),
                        BigInt::from(krawtchouk_brute(j, i, n)),
                        "K_{j}({i};{n})"
                    );
                }
            }
        }
    }

    #[test]
    fn macwilliams_examples() {
        let dual = WeightDistribution {
            n: 5,
            k: 2,
            q: 4,
            counts: vec![1, 0, 0, 0, 15, 0],
        };
        let a = macwilliams(&dual, 16, 5, 4).unwrap();
        assert_eq!(a.counts, vec![1, 0, 0, 30, 15, 18]);
        assert_eq!(a.k, 3);

        let zero = WeightDistribution {
            n: 4,
            k: 0,
            q: 4,
            counts: vec![1, 0, 0, 0, 0],
        };
        let full = macwilliams(&zero, 1, 4, 4).unwrap();
        let expect: Vec<u128> = (0..=4u32)
            .map(|j| binomial(4, j as u64).to_u128().unwrap() * 3u128.pow(j))
            .collect();
        assert_eq!(full.counts, expect);

        let hexa = WeightDistribution {
            n: 6,
            k: 3,
            q: 4,
            counts: vec![1, 0, 0, 0, 45, 0, 18],
        };
        assert_eq!(macwilliams(&hexa, 64, 6, 4).unwrap().counts, hexa.counts);
    }

    #[test]
    fn macwilliams_rejects_inconsistent_input() {
        let bogus = WeightDistribution {
            n: 2,
            k: 1,
            q: 2,
            counts: vec![1, 1, 1],
        };
        assert!(matches!(
            macwilliams(&bogus, 3, 2, 2),
            Err(Error::NonIntegerResult { .. })
        ));
    }

    #[test]
    fn hamming_closed_form_matches_enumeration() {
        let code = crate::outer::hamming4(2).unwrap();
        assert_eq!(
            hamming4_weights(2).unwrap().counts,
            code.weight_distribution_exhaustive().counts
        );
        assert!(hamming4_weights(0).is_err());
    }
}
