//! Binary LRCs with locality 2 obtained by concatenating a GF(4) outer code
//! with the `[3,2,2]` single-parity inner code, and the tools that read
//! their structure: repair groups, the `W_i` subspaces, the subspace-sum
//! distance certificate, locality coverage and the weight map.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::code::{DistanceCertificate, DistanceMethod, LinearCode, WeightDistribution};
use crate::error::{Error, Result};
use crate::galois::{big_g_map, g_map, FiniteField, Gf2, Gf4};
use crate::matspace::FieldMatrix;

/// Default cap on the number of group subsets examined by
/// [`BinaryLrc::distance_via_subspaces`].
pub const DEFAULT_MAX_SUBSETS: u64 = 10_000_000;

/// The fixed inner code and the maps used to concatenate with it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcatenationContext {
    /// `G_in = (1 1 0; 1 0 1)`
    pub g_in: FieldMatrix<Gf2>,
    /// `H_in = (1 1 1)`
    pub h_in: FieldMatrix<Gf2>,
    /// `Q = (0 1 0; 0 0 1)`, a right inverse with `Q·G_inᵀ = I`
    pub q: FieldMatrix<Gf2>,
}

impl Default for ConcatenationContext {
    fn default() -> Self {
        let m = |rows: &[[u8; 3]]| {
            FieldMatrix::from_fn(rows.len(), 3, |i, j| Gf2::from_bits(rows[i][j]))
        };
        ConcatenationContext {
            g_in: m(&[[1, 1, 0], [1, 0, 1]]),
            h_in: m(&[[1, 1, 1]]),
            q: m(&[[0, 1, 0], [0, 0, 1]]),
        }
    }
}

impl ConcatenationContext {
    /// The inner encoding `f(α) = g(α)·G_in`; with `g(α) = (x1, x2)` this is
    /// `(x1 + x2, x1, x2)`.
    pub fn encode_symbol(&self, a: Gf4) -> [Gf2; 3] {
        let x = g_map(a);
        let mut out = [Gf2::ZERO; 3];
        for (j, o) in out.iter_mut().enumerate() {
            *o = x[0] * self.g_in.get(0, j) + x[1] * self.g_in.get(1, j);
        }
        out
    }

    /// Concatenated image of an outer word.
    pub fn encode_word(&self, c: &[Gf4]) -> Vec<Gf2> {
        c.iter().flat_map(|&a| self.encode_symbol(a)).collect()
    }
}

/// A binary LRC with `ℓ` disjoint repair groups of size 3 and a
/// parity-check matrix of the form
///
/// ```text
/// ( 1 1 1                 )
/// (        …              )   ℓ group rows
/// (               1 1 1   )
/// ( 0 e11 e12 … 0 eℓ1 eℓ2 )   u rows
/// ```
#[derive(Debug, Clone)]
pub struct BinaryLrc {
    code: LinearCode<Gf2>,
    ell: usize,
    u: usize,
    groups: Vec<[usize; 3]>,
    e_vectors: Vec<(Vec<Gf2>, Vec<Gf2>)>,
    claimed_d: Option<usize>,
}

/// Summary written as JSON.
#[derive(Serialize)]
struct LrcJson<'a> {
    n: usize,
    k: usize,
    d: Option<usize>,
    r: usize,
    ell: usize,
    u: usize,
    groups: &'a [[usize; 3]],
    #[serde(rename = "H")]
    h: String,
}

/// Concatenates a GF(4) outer code `[n1, k1, d1]` with the inner code,
/// giving a binary `[3n1, 2k1, 2d1; 2]` LRC.
///
/// The parity-check matrix has one all-ones row per group and, for each
/// outer parity-check row, two rows holding `𝒢(h_i)` and `𝒢(w·h_i)` under
/// positions 1 and 2 of group `i`. The generator rows are the images of
/// `g` and `w·g` for each outer generator row `g`.
pub fn concatenate(outer: &LinearCode<Gf4>) -> Result<BinaryLrc> {
    let ctx = ConcatenationContext::default();
    let n1 = outer.n();
    let h = outer.parity_check();
    let r1 = h.rows();
    let (ell, u) = (n1, 2 * r1);
    let n = 3 * n1;
    let mut hb = FieldMatrix::<Gf2>::zeros(ell + u, n);
    let mut e_vectors = Vec::with_capacity(ell);
    for i in 0..n1 {
        for p in 0..3 {
            hb.set(i, 3 * i + p, Gf2::ONE);
        }
        let col = h.column(i);
        let wcol: Vec<Gf4> = col.iter().map(|&x| Gf4::W * x).collect();
        let e1 = big_g_map(&col);
        let e2 = big_g_map(&wcol);
        for r in 0..u {
            hb.set(ell + r, 3 * i + 1, e1[r]);
            hb.set(ell + r, 3 * i + 2, e2[r]);
        }
        e_vectors.push((e1, e2));
    }
    let mut gb = Vec::with_capacity(2 * outer.k());
    for i in 0..outer.k() {
        for &b in Gf4::additive_basis() {
            let row: Vec<Gf4> = outer.generator().row(i).iter().map(|&x| b * x).collect();
            gb.push(ctx.encode_word(&row));
        }
    }
    let gb = FieldMatrix::from_rows(gb, n)?;
    let code = if outer.k() == 0 {
        LinearCode::from_parity_check(hb)?
    } else {
        LinearCode::from_pair(gb, hb)?
    };
    Ok(BinaryLrc {
        code,
        ell,
        u,
        groups: (0..ell).map(|i| [3 * i, 3 * i + 1, 3 * i + 2]).collect(),
        e_vectors,
        claimed_d: outer.cached_distance().map(|c| 2 * c.d),
    })
}

impl BinaryLrc {
    /// Reads the group structure off a binary parity-check matrix whose first
    /// `ℓ` rows have disjoint weight-3 supports covering every coordinate.
    ///
    /// Lower rows are put in normal form by adding group rows so that the
    /// first position of every group is zero below the group rows.
    pub fn from_parity_check(h: FieldMatrix<Gf2>) -> Result<Self> {
        let n = h.cols();
        if !n.is_multiple_of(3) {
            return Err(Error::InvalidShape { n, modulus: 3 });
        }
        let ell = n / 3;
        if h.rows() < ell {
            return Err(Error::NotGroupForm(format!(
                "{} rows cannot hold {ell} group rows",
                h.rows()
            )));
        }
        let mut owner = vec![usize::MAX; n];
        let mut groups = Vec::with_capacity(ell);
        for i in 0..ell {
            let supp: Vec<usize> = (0..n).filter(|&j| h.get(i, j).is_one()).collect();
            if supp.len() != 3 {
                return Err(Error::NotGroupForm(format!(
                    "row {i} has weight {}, expected 3",
                    supp.len()
                )));
            }
            for &j in &supp {
                if owner[j] != usize::MAX {
                    return Err(Error::NotGroupForm(format!(
                        "coordinate {j} lies in rows {} and {i}",
                        owner[j]
                    )));
                }
                owner[j] = i;
            }
            groups.push([supp[0], supp[1], supp[2]]);
        }
        let mut h = h;
        let u = h.rows() - ell;
        for r in ell..h.rows() {
            for (gi, g) in groups.iter().enumerate() {
                if h.get(r, g[0]).is_one() {
                    for &j in g {
                        let v = h.get(r, j) + h.get(gi, j);
                        h.set(r, j, v);
                    }
                }
            }
        }
        let e_vectors = groups
            .iter()
            .map(|g| {
                let col = |c: usize| (ell..ell + u).map(|r| h.get(r, c)).collect::<Vec<_>>();
                (col(g[1]), col(g[2]))
            })
            .collect();
        let code = LinearCode::from_parity_check(h)?;
        Ok(BinaryLrc {
            code,
            ell,
            u,
            groups,
            e_vectors,
            claimed_d: None,
        })
    }

    pub fn code(&self) -> &LinearCode<Gf2> {
        &self.code
    }

    pub fn n(&self) -> usize {
        self.code.n()
    }

    pub fn k(&self) -> usize {
        self.code.k()
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn groups(&self) -> &[[usize; 3]] {
        &self.groups
    }

    pub fn e_vectors(&self) -> &[(Vec<Gf2>, Vec<Gf2>)] {
        &self.e_vectors
    }

    /// Group index of coordinate `pos`.
    pub fn group_of(&self, pos: usize) -> usize {
        self.groups
            .iter()
            .position(|g| g.contains(&pos))
            .expect("every coordinate lies in a group")
    }

    /// Bases (in reduced row-echelon form) of `W_i = span{e_i1, e_i2}`.
    pub fn group_subspaces(&self) -> Vec<FieldMatrix<Gf2>> {
        self.e_vectors
            .iter()
            .map(|(a, b)| {
                FieldMatrix::from_rows(vec![a.clone(), b.clone()], self.u)
                    .expect("e vectors have length u")
                    .row_basis()
            })
            .collect()
    }

    /// Certifies the minimum distance from the `W_i` subspaces: `d = 2s`
    /// where `s` is the least number of groups whose subspaces fail to span
    /// a space of dimension `2s`.
    ///
    /// Subsets are checked level by level; the first deficient subset in
    /// lexicographic order gives the witness codeword. A level is entered
    /// only when the subsets it would add keep the total within
    /// `max_subsets`; otherwise the error brackets the distance.
    pub fn distance_via_subspaces(&self, max_subsets: u64) -> Result<DistanceCertificate<Gf2>> {
        if self.k() == 0 {
            return Err(Error::ZeroDimension);
        }
        if self.u > 128 {
            return Err(Error::UnsupportedParameters(format!(
                "{} lower rows exceed the packed width of 128",
                self.u
            )));
        }
        let pack = |v: &[Gf2]| {
            v.iter()
                .enumerate()
                .fold(0u128, |acc, (i, x)| acc | (x.to_bits() as u128) << i)
        };
        let vecs: Vec<[u128; 2]> = self
            .e_vectors
            .iter()
            .map(|(a, b)| [pack(a), pack(b)])
            .collect();
        let upper = self.claimed_d.unwrap_or_else(|| {
            (0..self.k())
                .map(|i| crate::matspace::weight(self.code.generator().row(i)))
                .min()
                .unwrap_or(self.n())
        });
        let mut spent = 0u64;
        for s in 1..=self.ell {
            let level = crate::code::binomial_u128(self.ell as u128, s as u128);
            if spent as u128 + level > max_subsets as u128 {
                return Err(Error::SubsetBudgetExceeded {
                    lower: 2 * s,
                    upper,
                });
            }
            spent += level as u64;
            let found = (0..self.ell).into_par_iter().find_map_first(|first| {
                let mut basis = Basis::default();
                let mut chosen = vec![first];
                let ok = basis.insert(vecs[first][0]) && basis.insert(vecs[first][1]);
                if !ok {
                    return if s == 1 { Some(chosen) } else { None };
                }
                let r = deficient_extension(&vecs, s, &mut chosen, &mut basis);
                basis.undo(2);
                r
            });
            if let Some(subset) = found {
                let word = self.witness_word(&subset);
                let cert = DistanceCertificate {
                    d: 2 * s,
                    witness: word,
                    method: DistanceMethod::SubspaceRank,
                };
                self.code.set_distance(cert.clone())?;
                return Ok(cert);
            }
        }
        unreachable!("the groups cannot all be independent when k > 0")
    }

    /// Nonzero codeword supported on the groups of a minimal deficient subset.
    fn witness_word(&self, subset: &[usize]) -> Vec<Gf2> {
        let cols: Vec<&Vec<Gf2>> = subset
            .iter()
            .flat_map(|&g| [&self.e_vectors[g].0, &self.e_vectors[g].1])
            .collect();
        let m = FieldMatrix::from_fn(self.u, cols.len(), |i, j| cols[j][i]);
        let null = m.nullspace();
        let x = null.row(0);
        let mut word = vec![Gf2::ZERO; self.n()];
        for (idx, &g) in subset.iter().enumerate() {
            let [p0, p1, p2] = self.groups[g];
            let pair = match (x[2 * idx].is_one(), x[2 * idx + 1].is_one()) {
                (true, false) => [p0, p1],
                (false, true) => [p0, p2],
                (true, true) => [p1, p2],
                (false, false) => unreachable!("minimal dependency touches every group"),
            };
            for p in pair {
                word[p] = Gf2::ONE;
            }
        }
        word
    }

    /// Checks the weight map between an outer code and this concatenation:
    /// `A_2j(C') = A_j(C)`, odd weights absent. Returns both distributions.
    pub fn weight_map_check(
        &self,
        outer: &LinearCode<Gf4>,
        budget: u64,
    ) -> Result<(WeightDistribution, WeightDistribution)> {
        if self.n() != 3 * outer.n() || self.k() != 2 * outer.k() {
            return Err(Error::ShapeMismatch(format!(
                "[{},{}] is not the concatenation of [{},{}]",
                self.n(),
                self.k(),
                outer.n(),
                outer.k()
            )));
        }
        let a = outer.weight_distribution(budget)?;
        let b = self.code.weight_distribution(budget)?;
        for (i, &found) in b.counts.iter().enumerate() {
            let expected = if i % 2 == 0 { a.get(i / 2) } else { 0 };
            if expected != found {
                return Err(Error::Mismatch {
                    index: i,
                    expected,
                    found,
                });
            }
        }
        Ok((a, b))
    }

    /// JSON summary `{"n","k","d","r","ell","u","groups","H"}` with sorted keys;
    /// `d` is present once certified.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&LrcJson {
            n: self.n(),
            k: self.k(),
            d: self.code.cached_distance().map(|c| c.d),
            r: 2,
            ell: self.ell,
            u: self.u,
            groups: &self.groups,
            h: self.code.parity_check().to_text(),
        })
        .expect("summary serializes")
    }
}

/// GF(2) vectors in echelon form keyed by leading bit, with an undo stack.
struct Basis {
    by_pivot: [u128; 128],
    stack: Vec<u32>,
}

impl Default for Basis {
    fn default() -> Self {
        Basis {
            by_pivot: [0; 128],
            stack: Vec::new(),
        }
    }
}

impl Basis {
    /// Adds `v`; returns false (adding nothing) when `v` is already spanned.
    fn insert(&mut self, mut v: u128) -> bool {
        while v != 0 {
            let p = 127 - v.leading_zeros();
            let b = self.by_pivot[p as usize];
            if b == 0 {
                self.by_pivot[p as usize] = v;
                self.stack.push(p);
                return true;
            }
            v ^= b;
        }
        false
    }

    fn undo(&mut self, count: usize) {
        for _ in 0..count {
            if let Some(p) = self.stack.pop() {
                self.by_pivot[p as usize] = 0;
            }
        }
    }
}

/// Extends `chosen` (whose subspaces are independent) to `s` groups with
/// increasing indices; returns the first subset whose last group breaks
/// independence.
fn deficient_extension(
    vecs: &[[u128; 2]],
    s: usize,
    chosen: &mut Vec<usize>,
    basis: &mut Basis,
) -> Option<Vec<usize>> {
    let last = *chosen.last().expect("nonempty");
    for next in last + 1..vecs.len() {
        let a = basis.insert(vecs[next][0]);
        let b = a && basis.insert(vecs[next][1]);
        let added = usize::from(a) + usize::from(b);
        chosen.push(next);
        if !b {
            if chosen.len() == s {
                basis.undo(added);
                return Some(chosen.clone());
            }
            // a deficient subset smaller than s cannot occur at level s
        } else if chosen.len() < s {
            if let Some(r) = deficient_extension(vecs, s, chosen, basis) {
                basis.undo(added);
                return Some(r);
            }
        }
        chosen.pop();
        basis.undo(added);
    }
    None
}

/// Per-coordinate result of a locality check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalityReport {
    pub r: usize,
    /// For each coordinate, the support of a dual codeword of weight at most
    /// `r + 1` containing it, or `None` if there is none.
    pub covering: Vec<Option<Vec<usize>>>,
}

impl LocalityReport {
    pub fn has_locality(&self) -> bool {
        self.covering.iter().all(Option::is_some)
    }

    pub fn uncovered(&self) -> Vec<usize> {
        (0..self.covering.len())
            .filter(|&i| self.covering[i].is_none())
            .collect()
    }
}

/// Finds, for every coordinate, a dual codeword of weight at most `r + 1`
/// whose support contains it. A binary dual word supported on `S` is a set of
/// generator columns summing to zero, so the search runs over column sets of
/// size up to `r + 1`, at most `budget` partial sets.
pub fn locality_check(code: &LinearCode<Gf2>, r: usize, budget: u64) -> Result<LocalityReport> {
    let n = code.n();
    let g = code.generator();
    let blocks = g.rows().div_ceil(64).max(1);
    let cols: Vec<Vec<u64>> = (0..n)
        .map(|j| {
            let mut v = vec![0u64; blocks];
            for i in 0..g.rows() {
                if g.get(i, j).is_one() {
                    v[i / 64] |= 1 << (i % 64);
                }
            }
            v
        })
        .collect();
    let mut index: HashMap<&[u64], Vec<usize>> = HashMap::new();
    for (j, c) in cols.iter().enumerate() {
        index.entry(c.as_slice()).or_default().push(j);
    }
    let mut covering: Vec<Option<Vec<usize>>> = vec![None; n];
    let mut spent = 0u64;
    for size in 1..=r + 1 {
        if covering.iter().all(Option::is_some) {
            break;
        }
        // choose size-1 columns increasing, then look up the closing column
        let mut stack: Vec<usize> = Vec::new();
        let mut acc = vec![vec![0u64; blocks]];
        let mut next = 0usize;
        loop {
            if stack.len() == size - 1 {
                spent += 1;
                if spent > budget {
                    return Err(Error::BudgetExceeded { lower: 0, upper: n });
                }
                let top = acc.last().expect("accumulator stack");
                let after = stack.last().map_or(0, |&l| l + 1);
                if let Some(list) = index.get(top.as_slice()) {
                    for &c in list.iter().filter(|&&c| c >= after) {
                        let mut supp = stack.clone();
                        supp.push(c);
                        for &p in &supp {
                            if covering[p].is_none() {
                                covering[p] = Some(supp.clone());
                            }
                        }
                    }
                }
            } else if next < n {
                let mut v = acc.last().expect("accumulator stack").clone();
                for (a, b) in v.iter_mut().zip(&cols[next]) {
                    *a ^= *b;
                }
                stack.push(next);
                acc.push(v);
                next += 1;
                continue;
            }
            match stack.pop() {
                Some(p) => {
                    acc.pop();
                    next = p + 1;
                }
                None => break,
            }
        }
    }
    Ok(LocalityReport { r, covering })
}

impl BinaryLrc {
    /// Locality-2 coverage read from the group rows, without a search.
    pub fn locality_report(&self) -> LocalityReport {
        let mut covering = vec![None; self.n()];
        for g in &self.groups {
            for &p in g {
                covering[p] = Some(g.to_vec());
            }
        }
        LocalityReport { r: 2, covering }
    }
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use super::*;
    use crate::matspace::parse_symbols;
    use crate::outer::{hamming4, hexacode, mds_rs};

    fn bin(rows: &[&str]) -> FieldMatrix<Gf2> {
        let rows: Vec<Vec<Gf2>> = rows.iter().map(|r| parse_symbols(r).unwrap()).collect();
        let c = rows[0].len();
        FieldMatrix::from_rows(rows, c).unwrap()
    }

    #[test]
    fn context_identities() {
        let ctx = ConcatenationContext::default();
        assert_eq!(
            ctx.q.mul(&ctx.g_in.transpose()).unwrap(),
            FieldMatrix::identity(2)
        );
        assert_eq!(ctx.encode_symbol(Gf4::ZERO), [Gf2::ZERO; 3]);
        for &a in Gf4::nonzero() {
            let f = ctx.encode_symbol(a);
            assert_eq!(f.iter().filter(|x| x.is_one()).count(), 2);
            assert!(ctx.h_in.mul_vec(&f)[0].is_zero());
        }
    }

    #[test]
    fn example_hamming_matrix() {
        let outer = LinearCode::from_parity_check(
            FieldMatrix::from_rows(
                vec![
                    parse_symbols("10111").unwrap(),
                    parse_symbols("011wW").unwrap(),
                ],
                5,
            )
            .unwrap(),
        )
        .unwrap();
        let lrc = concatenate(&outer).unwrap();
        let shown = bin(&[
            "111000000000000",
            "000111000000000",
            "000000111000000",
            "000000000111000",
            "000000000000111",
            "010000010010010",
            "001000001001001",
            "000010010001011",
            "000001001011010",
        ]);
        assert_eq!(lrc.code().parity_check(), &shown);
        assert_eq!((lrc.n(), lrc.k(), lrc.ell(), lrc.u()), (15, 6, 5, 4));
        let w = lrc.group_subspaces();
        assert_eq!(w[0], bin(&["1000", "0100"]));
        let cert = lrc.distance_via_subspaces(DEFAULT_MAX_SUBSETS).unwrap();
        assert_eq!(cert.d, 6);
        assert_eq!(lrc.code().min_distance_exhaustive().d, 6);
    }

    #[test]
    fn hexacode_concatenation() {
        let lrc = concatenate(&hexacode()).unwrap();
        assert_eq!((lrc.n(), lrc.k()), (18, 6));
        assert!(lrc.group_subspaces().iter().all(|w| w.rows() == 2));
        assert_eq!(
            lrc.distance_via_subspaces(DEFAULT_MAX_SUBSETS).unwrap().d,
            8
        );
        let (_, b) = lrc.weight_map_check(&hexacode(), 1 << 20).unwrap();
        assert_eq!(b.support(), vec![(0, 1), (8, 45), (12, 18)]);
    }

    #[test]
    fn trivial_outer() {
        let outer = mds_rs(4, 4).unwrap();
        let lrc = concatenate(&outer).unwrap();
        assert_eq!((lrc.n(), lrc.k(), lrc.u()), (12, 8, 0));
        assert_eq!(lrc.distance_via_subspaces(100).unwrap().d, 2);
    }

    #[test]
    fn zero_parity_column_gives_trivial_subspace() {
        // [2,1,1] outer code with parity-check (1 0)
        let outer = LinearCode::from_parity_check(
            FieldMatrix::from_rows(vec![vec![Gf4::ONE, Gf4::ZERO]], 2).unwrap(),
        )
        .unwrap();
        let lrc = concatenate(&outer).unwrap();
        let w = lrc.group_subspaces();
        assert_eq!(w[1].rows(), 0);
        assert_eq!(lrc.distance_via_subspaces(100).unwrap().d, 2);
    }

    #[test]
    fn round_trip_through_parity_check() {
        let lrc = concatenate(&hamming4(2).unwrap()).unwrap();
        let again = BinaryLrc::from_parity_check(lrc.code().parity_check().clone()).unwrap();
        assert_eq!(again.groups(), lrc.groups());
        assert_eq!(again.e_vectors(), lrc.e_vectors());
        assert!(again.code().same_code(lrc.code()));
    }

    #[test]
    fn group_form_is_normalized() {
        // lower row has a 1 under the first position of group 0
        let h = bin(&["111000", "000111", "110011"]);
        let lrc = BinaryLrc::from_parity_check(h).unwrap();
        assert_eq!(lrc.code().parity_check().row(2), bin(&["001011"]).row(0));
        assert!(matches!(
            BinaryLrc::from_parity_check(bin(&["110000", "001111"])),
            Err(Error::NotGroupForm(_))
        ));
    }

    #[test]
    fn locality_examples() {
        let spc = LinearCode::from_parity_check(bin(&["111"])).unwrap();
        let r = locality_check(&spc, 2, 1000).unwrap();
        assert!(r.has_locality());
        assert_eq!(r.covering[0], Some(vec![0, 1, 2]));

        let rep = LinearCode::from_generator(bin(&["111"])).unwrap();
        let r = locality_check(&rep, 1, 1000).unwrap();
        assert!(r.has_locality());
        assert_eq!(r.covering[2].as_ref().unwrap().len(), 2);

        let lrc = concatenate(&hamming4(2).unwrap()).unwrap();
        let searched = locality_check(lrc.code(), 2, 1 << 20).unwrap();
        assert!(searched.has_locality());
        assert!(lrc.locality_report().has_locality());

        // [4,3,2] single parity over 4 positions has no dual word of weight ≤ 3
        let spc4 = LinearCode::from_parity_check(bin(&["1111"])).unwrap();
        assert_eq!(
            locality_check(&spc4, 2, 1000).unwrap().uncovered(),
            vec![0, 1, 2, 3]
        );
    }

    #[test]
    fn json_shape() {
        let lrc = concatenate(&hexacode()).unwrap();
        lrc.distance_via_subspaces(DEFAULT_MAX_SUBSETS).unwrap();
        let v: serde_json::Value = serde_json::from_str(&lrc.to_json()).unwrap();
        assert_eq!(v["d"], 8);
        assert_eq!(v["r"], 2);
        assert_eq!(v["groups"][1], serde_json::json!([3, 4, 5]));
        assert!(v["H"]
            .as_str()
            .unwrap()
            .starts_with("field=2 rows=12 cols=18"));
    }
}
