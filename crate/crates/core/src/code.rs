//! Linear codes over GF(2) and GF(4): construction, minimum distance with a
//! witness codeword, exhaustive weight distributions and duals.

use std::collections::HashMap;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::PackedSpan;
use crate::error::{Error, Result};
use crate::galois::{FieldKind, FiniteField};
use crate::matspace::{weight, FieldMatrix};

/// Default enumeration budget: codewords visited, or column combinations
/// tried by the dependence search.
pub const DEFAULT_ENUM_BUDGET: u64 = 1 << 26;

/// Codes this small are always enumerated outright.
const SMALL_CODE: u128 = 1 << 20;

/// An `[n, k]` linear code holding both a generator and a parity-check matrix.
#[derive(Debug)]
pub struct LinearCode<F> {
    generator: FieldMatrix<F>,
    parity_check: FieldMatrix<F>,
    distance: OnceLock<DistanceCertificate<F>>,
    weights: OnceLock<WeightDistribution>,
}

impl<F: FiniteField> Clone for LinearCode<F> {
    fn clone(&self) -> Self {
        LinearCode {
            generator: self.generator.clone(),
            parity_check: self.parity_check.clone(),
            distance: self.distance.clone(),
            weights: self.weights.clone(),
        }
    }
}

/// How a minimum distance was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceMethod {
    /// Every codeword was enumerated.
    Exhaustive,
    /// All column sets of smaller size in the parity-check matrix were shown
    /// independent and a dependent set was found.
    ColumnDependence,
    /// Subspace-sum criterion on the repair groups of a binary LRC.
    SubspaceRank,
}

/// Minimum distance `d` together with a nonzero codeword of weight `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceCertificate<F> {
    pub d: usize,
    pub witness: Vec<F>,
    pub method: DistanceMethod,
}

/// Counts `A_0..A_n` of codewords by Hamming weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDistribution {
    pub n: usize,
    pub k: usize,
    pub q: u32,
    #[serde(rename = "A")]
    pub counts: Vec<u128>,
}

impl WeightDistribution {
    pub fn total(&self) -> u128 {
        self.counts.iter().sum()
    }

    /// Smallest positive weight with a nonzero count.
    pub fn min_distance(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&i| self.counts[i] > 0)
    }

    pub fn get(&self, i: usize) -> u128 {
        self.counts.get(i).copied().unwrap_or(0)
    }

    /// The nonzero entries as `(weight, count)` pairs.
    pub fn support(&self) -> Vec<(usize, u128)> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, c)| **c > 0)
            .map(|(i, c)| (i, *c))
            .collect()
    }

    /// `{"n":…,"k":…,"q":…,"A":[…]}`
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("weight distribution serializes")
    }
}

impl<F: FiniteField> LinearCode<F> {
    /// Builds a code from a full-rank generator matrix.
    pub fn from_generator(generator: FieldMatrix<F>) -> Result<Self> {
        check_full_rank(&generator)?;
        let parity_check = generator.nullspace();
        Ok(Self::from_parts(generator, parity_check))
    }

    /// Builds a code from a full-rank parity-check matrix. The matrix is kept
    /// as given so that structured forms survive.
    pub fn from_parity_check(parity_check: FieldMatrix<F>) -> Result<Self> {
        check_full_rank(&parity_check)?;
        let generator = parity_check.nullspace();
        Ok(Self::from_parts(generator, parity_check))
    }

    /// Pairs a generator and parity-check matrix after checking
    /// `G·Hᵀ = 0` and the ranks.
    pub fn from_pair(generator: FieldMatrix<F>, parity_check: FieldMatrix<F>) -> Result<Self> {
        check_full_rank(&generator)?;
        check_full_rank(&parity_check)?;
        if generator.cols() != parity_check.cols()
            || generator.rows() + parity_check.rows() != generator.cols()
        {
            return Err(Error::ShapeMismatch(format!(
                "generator {}x{} and parity-check {}x{} do not describe one code",
                generator.rows(),
                generator.cols(),
                parity_check.rows(),
                parity_check.cols()
            )));
        }
        if !generator.mul(&parity_check.transpose())?.is_zero() {
            return Err(Error::InvalidParameters(
                "generator rows fail the parity checks".into(),
            ));
        }
        Ok(Self::from_parts(generator, parity_check))
    }

    fn from_parts(generator: FieldMatrix<F>, parity_check: FieldMatrix<F>) -> Self {
        LinearCode {
            generator,
            parity_check,
            distance: OnceLock::new(),
            weights: OnceLock::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn field(&self) -> FieldKind {
        F::KIND
    }

    pub fn generator(&self) -> &FieldMatrix<F> {
        &self.generator
    }

    pub fn parity_check(&self) -> &FieldMatrix<F> {
        &self.parity_check
    }

    /// Number of codewords, `q^k`, saturating at `u128::MAX`.
    pub fn size(&self) -> u128 {
        (F::order() as u128)
            .checked_pow(self.k() as u32)
            .unwrap_or(u128::MAX)
    }

    pub fn contains(&self, word: &[F]) -> bool {
        word.len() == self.n() && self.parity_check.mul_vec(word).iter().all(|x| x.is_zero())
    }

    /// Encodes a message of length `k` as `m·G`.
    pub fn encode(&self, message: &[F]) -> Vec<F> {
        assert_eq!(message.len(), self.k(), "message length must equal k");
        let mut out = vec![F::zero(); self.n()];
        for (i, &m) in message.iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(self.generator.row(i)) {
                *o += m * g;
            }
        }
        out
    }

    /// The dual code: generator and parity-check swap roles.
    pub fn dual(&self) -> LinearCode<F> {
        Self::from_parts(self.parity_check.clone(), self.generator.clone())
    }

    /// True when both codes span the same subspace.
    pub fn same_code(&self, other: &LinearCode<F>) -> bool {
        self.n() == other.n()
            && self.k() == other.k()
            && self.generator.row_basis() == other.generator.row_basis()
    }

    pub fn cached_distance(&self) -> Option<&DistanceCertificate<F>> {
        self.distance.get()
    }

    /// Records a distance established elsewhere (for example by the
    /// subspace criterion on a concatenated code). The witness is checked.
    pub fn set_distance(&self, cert: DistanceCertificate<F>) -> Result<()> {
        if !self.contains(&cert.witness) || weight(&cert.witness) != cert.d {
            return Err(Error::InvalidParameters(
                "distance witness is not a codeword of the claimed weight".into(),
            ));
        }
        let _ = self.distance.set(cert);
        Ok(())
    }

    /// Minimum distance with a witness codeword.
    ///
    /// Small codes are enumerated outright. Larger ones first search for the
    /// smallest linearly dependent set of parity-check columns, trying at most
    /// `budget` column combinations, and fall back to enumeration when that
    /// runs out but `q^k ≤ budget`. Otherwise the error carries the bracket
    /// established so far.
    pub fn min_distance(&self, budget: u64) -> Result<DistanceCertificate<F>> {
        if let Some(c) = self.distance.get() {
            return Ok(c.clone());
        }
        if self.k() == 0 {
            return Err(Error::ZeroDimension);
        }
        let fits = self.size() <= budget as u128;
        let cert = if fits && self.size() <= SMALL_CODE {
            self.min_distance_exhaustive()
        } else {
            match self.min_distance_by_columns(budget) {
                Ok(c) => c,
                Err(Error::BudgetExceeded { .. }) if fits => self.min_distance_exhaustive(),
                Err(e) => return Err(e),
            }
        };
        let _ = self.distance.set(cert.clone());
        Ok(cert)
    }

    /// Minimum distance by walking every codeword.
    pub fn min_distance_exhaustive(&self) -> DistanceCertificate<F> {
        let span = PackedSpan::from_generator(&self.generator);
        let (d, idx) = span
            .min_weight()
            .expect("a code of positive dimension has a nonzero codeword");
        DistanceCertificate {
            d,
            witness: span.codeword_at(idx),
            method: DistanceMethod::Exhaustive,
        }
    }

    /// Minimum distance from the parity-check columns alone.
    pub fn min_distance_by_columns(&self, budget: u64) -> Result<DistanceCertificate<F>> {
        let upper = (0..self.k())
            .map(|i| weight(self.generator.row(i)))
            .min()
            .unwrap_or(self.n());
        let search = ColumnSearch::new(&self.parity_check)?;
        let mut spent = 0u64;
        for w in 1..=upper {
            match search.find(w, budget.saturating_sub(spent)) {
                SearchResult::Found(word) => {
                    return Ok(DistanceCertificate {
                        d: w,
                        witness: word,
                        method: DistanceMethod::ColumnDependence,
                    })
                }
                SearchResult::None(cost) => spent += cost,
                SearchResult::OverBudget => return Err(Error::BudgetExceeded { lower: w, upper }),
            }
        }
        // a generator row of weight `upper` is always dependent
        unreachable!("dependence search missed a known codeword")
    }

    /// Exact weight distribution.
    ///
    /// Enumerates the code when `q^k ≤ budget`, otherwise enumerates the dual
    /// when `q^(n-k) ≤ budget` and applies the MacWilliams transform.
    pub fn weight_distribution(&self, budget: u64) -> Result<WeightDistribution> {
        if let Some(w) = self.weights.get() {
            return Ok(w.clone());
        }
        let dist = if self.size() <= budget as u128 {
            self.weight_distribution_exhaustive()
        } else {
            let dual = self.dual();
            if dual.size() <= budget as u128 {
                let dw = dual.weight_distribution_exhaustive();
                crate::macwilliams::macwilliams(&dw, dual.size(), self.n(), F::order())?
            } else {
                let lower = self.distance.get().map_or(1, |c| c.d);
                return Err(Error::BudgetExceeded {
                    lower,
                    upper: self.n(),
                });
            }
        };
        let _ = self.weights.set(dist.clone());
        Ok(dist)
    }

    /// Weight distribution by walking every codeword.
    pub fn weight_distribution_exhaustive(&self) -> WeightDistribution {
        let span = PackedSpan::from_generator(&self.generator);
        WeightDistribution {
            n: self.n(),
            k: self.k(),
            q: F::order(),
            counts: span.histogram(),
        }
    }

    /// Weight histogram of the codewords whose Gray-code message index lies
    /// in `start..end`. Histograms over a partition of `0..q^k` add up to the
    /// full distribution.
    pub fn weight_histogram_range(&self, start: u64, end: u64) -> Vec<u128> {
        let span = PackedSpan::from_generator(&self.generator);
        span.histogram_range(start, end.min(span.len()))
    }
}

fn check_full_rank<F: FiniteField>(m: &FieldMatrix<F>) -> Result<()> {
    let rank = m.rank();
    if rank < m.rows() {
        Err(Error::RankDeficient {
            rows: m.rows(),
            rank,
        })
    } else {
        Ok(())
    }
}

enum SearchResult<F> {
    Found(Vec<F>),
    None(u64),
    OverBudget,
}

/// Searches for linearly dependent column sets of a fixed size.
///
/// Columns are packed into `u128` syndromes. For size `w` it tries every
/// `(w-1)`-subset of columns with leading coefficient 1 and all nonzero
/// coefficients after it, then looks the partial sum up in a table of scaled
/// columns to close the relation with a later column.
struct ColumnSearch<F> {
    n: usize,
    columns: Vec<u128>,
    /// syndrome → (column, scalar) with `scalar·column = syndrome`
    table: HashMap<u128, Vec<(usize, F)>>,
}

fn pack_column<F: FiniteField>(col: &[F]) -> u128 {
    col.iter().enumerate().fold(0u128, |acc, (i, x)| {
        acc | (x.to_bits() as u128) << (i as u32 * F::BITS)
    })
}

impl<F: FiniteField> ColumnSearch<F> {
    fn new(h: &FieldMatrix<F>) -> Result<Self> {
        if h.rows() * F::BITS as usize > 128 {
            return Err(Error::UnsupportedParameters(format!(
                "dependence search supports at most {} parity checks",
                128 / F::BITS
            )));
        }
        let cols: Vec<Vec<F>> = (0..h.cols()).map(|j| h.column(j)).collect();
        let columns = cols.iter().map(|c| pack_column(c)).collect();
        let mut table: HashMap<u128, Vec<(usize, F)>> = HashMap::new();
        for (j, c) in cols.iter().enumerate() {
            for &a in F::nonzero() {
                let scaled: Vec<F> = c.iter().map(|&x| a * x).collect();
                table.entry(pack_column(&scaled)).or_default().push((j, a));
            }
        }
        Ok(ColumnSearch {
            n: h.cols(),
            columns,
            table,
        })
    }

    fn scaled(&self, j: usize, a: F) -> u128 {
        let c = self.columns[j];
        let mut out = 0u128;
        let mask = (1u128 << F::BITS) - 1;
        let mut i = 0;
        while i < 128 {
            let bits = ((c >> i) & mask) as u8;
            if bits != 0 {
                out |= ((a * F::from_bits(bits)).to_bits() as u128) << i;
            }
            i += F::BITS;
        }
        out
    }

    fn cost(&self, w: usize) -> u128 {
        let q1 = (F::order() - 1) as u128;
        binomial_u128(self.n as u128, (w - 1) as u128)
            .saturating_mul(q1.saturating_pow(w.saturating_sub(2) as u32))
    }

    fn find(&self, w: usize, budget: u64) -> SearchResult<F> {
        if w == 1 {
            return match self.columns.iter().position(|&c| c == 0) {
                Some(j) => {
                    let mut word = vec![F::zero(); self.n];
                    word[j] = F::one();
                    SearchResult::Found(word)
                }
                None => SearchResult::None(self.n as u64),
            };
        }
        let cost = self.cost(w);
        if cost > budget as u128 {
            return SearchResult::OverBudget;
        }
        let found = (0..self.n).into_par_iter().find_map_first(|first| {
            let mut chosen = vec![(first, F::one())];
            self.extend(w, &mut chosen, self.columns[first])
        });
        match found {
            Some(word) => SearchResult::Found(word),
            None => SearchResult::None(cost as u64),
        }
    }

    fn extend(&self, w: usize, chosen: &mut Vec<(usize, F)>, sum: u128) -> Option<Vec<F>> {
        let last = chosen.last().expect("nonempty").0;
        if chosen.len() == w - 1 {
            let hit = self
                .table
                .get(&sum)?
                .iter()
                .find(|(j, _)| *j > last)
                .copied()?;
            let mut word = vec![F::zero(); self.n];
            for &(j, a) in chosen.iter() {
                word[j] = a;
            }
            word[hit.0] = hit.1;
            return Some(word);
        }
        for j in last + 1..self.n {
            for &a in F::nonzero() {
                let s = sum ^ self.scaled(j, a);
                chosen.push((j, a));
                let r = self.extend(w, chosen, s);
                chosen.pop();
                if r.is_some() {
                    return r;
                }
            }
        }
        None
    }
}

pub(crate) fn binomial_u128(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u128;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// A code whose field is only known at run time.
#[derive(Debug, Clone)]
pub enum AnyCode {
    Gf2(LinearCode<crate::galois::Gf2>),
    Gf4(LinearCode<crate::galois::Gf4>),
}

impl AnyCode {
    pub fn field(&self) -> FieldKind {
        match self {
            AnyCode::Gf2(_) => FieldKind::Gf2,
            AnyCode::Gf4(_) => FieldKind::Gf4,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            AnyCode::Gf2(c) => c.n(),
            AnyCode::Gf4(c) => c.n(),
        }
    }

    pub fn k(&self) -> usize {
        match self {
            AnyCode::Gf2(c) => c.k(),
            AnyCode::Gf4(c) => c.k(),
        }
    }

    pub fn min_distance(&self, budget: u64) -> Result<usize> {
        match self {
            AnyCode::Gf2(c) => c.min_distance(budget).map(|c| c.d),
            AnyCode::Gf4(c) => c.min_distance(budget).map(|c| c.d),
        }
    }

    pub fn weight_distribution(&self, budget: u64) -> Result<WeightDistribution> {
        match self {
            AnyCode::Gf2(c) => c.weight_distribution(budget),
            AnyCode::Gf4(c) => c.weight_distribution(budget),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::{Gf2, Gf4};
    use crate::matspace::parse_symbols;

    fn mat<F: FiniteField>(rows: &[&str]) -> FieldMatrix<F> {
        let v: Vec<Vec<F>> = rows.iter().map(|r| parse_symbols(r).unwrap()).collect();
        let cols = v[0].len();
        FieldMatrix::from_rows(v, cols).unwrap()
    }

    fn hamming5() -> LinearCode<Gf4> {
        LinearCode::from_parity_check(mat(&["10111", "011wW"])).unwrap()
    }

    fn hexacode() -> LinearCode<Gf4> {
        LinearCode::from_parity_check(mat(&["1001ww", "010w1w", "001ww1"])).unwrap()
    }

    #[test]
    fn make_code_examples() {
        let rep = LinearCode::from_generator(mat::<Gf2>(&["111"])).unwrap();
        assert_eq!((rep.n(), rep.k()), (3, 1));
        assert_eq!(rep.parity_check().rank(), 2);
        assert!(rep
            .generator()
            .mul(&rep.parity_check().transpose())
            .unwrap()
            .is_zero());

        let h = hamming5();
        assert_eq!((h.n(), h.k()), (5, 3));

        let err = LinearCode::from_generator(mat::<Gf2>(&["110", "110"])).unwrap_err();
        assert_eq!(err, Error::RankDeficient { rows: 2, rank: 1 });
    }

    #[test]
    fn distance_examples() {
        let c = hamming5().min_distance(DEFAULT_ENUM_BUDGET).unwrap();
        assert_eq!(c.d, 3);
        assert_eq!(weight(&c.witness), 3);
        assert!(hamming5().contains(&c.witness));

        assert_eq!(hexacode().min_distance(DEFAULT_ENUM_BUDGET).unwrap().d, 4);

        let full = LinearCode::from_generator(FieldMatrix::<Gf2>::identity(3)).unwrap();
        assert_eq!(full.min_distance(DEFAULT_ENUM_BUDGET).unwrap().d, 1);
    }

    #[test]
    fn column_search_agrees_with_enumeration() {
        for code in [hamming5(), hexacode()] {
            let a = code.min_distance_exhaustive();
            let b = code.min_distance_by_columns(DEFAULT_ENUM_BUDGET).unwrap();
            assert_eq!(a.d, b.d);
            assert_eq!(b.method, DistanceMethod::ColumnDependence);
            assert!(code.contains(&b.witness));
            assert_eq!(weight(&b.witness), b.d);
        }
    }

    #[test]
    fn column_search_reports_bracket_on_budget() {
        let err = hexacode().min_distance_by_columns(10).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { lower, upper } if lower <= 4 && upper >= 4));
        // small budget forces the column path in min_distance as well
        let code = hexacode();
        assert!(matches!(
            code.min_distance(3),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn weight_distribution_examples() {
        let rep = LinearCode::from_generator(mat::<Gf2>(&["111"])).unwrap();
        assert_eq!(
            rep.weight_distribution(DEFAULT_ENUM_BUDGET).unwrap().counts,
            vec![1, 0, 0, 1]
        );
        let h = hamming5().weight_distribution(DEFAULT_ENUM_BUDGET).unwrap();
        assert_eq!(h.counts, vec![1, 0, 0, 30, 15, 18]);
        let x = hexacode().weight_distribution(DEFAULT_ENUM_BUDGET).unwrap();
        assert_eq!(x.counts, vec![1, 0, 0, 0, 45, 0, 18]);
        assert_eq!(x.total(), 64);
        assert_eq!(x.min_distance(), Some(4));
    }

    #[test]
    fn weight_distribution_via_dual_when_code_is_large() {
        let h = hamming5();
        // budget 16 admits only the 16-word dual
        let w = h.weight_distribution(16).unwrap();
        assert_eq!(w.counts, vec![1, 0, 0, 30, 15, 18]);
    }

    #[test]
    fn dual_examples() {
        let rep = LinearCode::from_generator(mat::<Gf2>(&["111"])).unwrap();
        let d = rep.dual();
        assert_eq!((d.n(), d.k()), (3, 2));
        assert_eq!(d.min_distance(DEFAULT_ENUM_BUDGET).unwrap().d, 2);
        assert!(d.dual().same_code(&rep));

        let hd = hamming5().dual().weight_distribution_exhaustive();
        assert_eq!(hd.counts, vec![1, 0, 0, 0, 15, 0]);

        let xd = hexacode().dual().weight_distribution_exhaustive();
        assert_eq!(xd.counts, vec![1, 0, 0, 0, 45, 0, 18]);
    }

    #[test]
    fn partitioned_histogram_is_deterministic() {
        let code = hexacode();
        let whole = code.weight_distribution_exhaustive().counts;
        for cuts in [[0u64, 64, 64], [0, 1, 64], [0, 17, 40], [0, 63, 64]] {
            let mut acc = vec![0u128; 7];
            for pair in [(cuts[0], cuts[1]), (cuts[1], cuts[2])] {
                for (a, b) in acc
                    .iter_mut()
                    .zip(code.weight_histogram_range(pair.0, pair.1))
                {
                    *a += b;
                }
            }
            if cuts[2] < 64 {
                for (a, b) in acc.iter_mut().zip(code.weight_histogram_range(cuts[2], 64)) {
                    *a += b;
                }
            }
            assert_eq!(acc, whole);
        }
    }

    #[test]
    fn json_shape() {
        let w = hamming5().weight_distribution(DEFAULT_ENUM_BUDGET).unwrap();
        let v: serde_json::Value = serde_json::from_str(&w.to_json()).unwrap();
        assert_eq!(v["n"], 5);
        assert_eq!(v["k"], 3);
        assert_eq!(v["q"], 4);
        assert_eq!(v["A"][3], 30);
    }
}
