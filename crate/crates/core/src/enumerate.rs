//! Packed enumeration of a code's codewords.
//!
//! A code over GF(4) with generator rows `g_1..g_k` is the GF(2)-span of the
//! `2k` vectors `{g_i, w·g_i}`, so every supported field reduces to walking a
//! binary span. The walk uses the reflected binary Gray code: consecutive
//! indices differ in one basis vector, making each step a single XOR.
//!
//! Codewords are stored as bit planes: plane `p` holds bit `p` of every
//! symbol's code, so a symbol is nonzero iff it is set in some plane and the
//! Hamming weight is a popcount of the OR of the planes.

use rayon::prelude::*;

use crate::galois::FiniteField;
use crate::matspace::FieldMatrix;

/// Index ranges below this size are not split further.
const CHUNK: u64 = 1 << 14;

#[derive(Debug, Clone)]
pub(crate) struct PackedSpan {
    n: usize,
    planes: usize,
    blocks: usize,
    basis: Vec<Vec<u64>>,
}

#[inline]
pub(crate) fn gray(i: u64) -> u64 {
    i ^ (i >> 1)
}

impl PackedSpan {
    pub fn from_generator<F: FiniteField>(g: &FieldMatrix<F>) -> Self {
        let n = g.cols();
        let planes = F::BITS as usize;
        let blocks = n.div_ceil(64).max(1);
        let mut basis = Vec::with_capacity(g.rows() * F::additive_basis().len());
        for i in 0..g.rows() {
            for &b in F::additive_basis() {
                let row: Vec<F> = g.row(i).iter().map(|&x| b * x).collect();
                basis.push(pack(&row, planes, blocks));
            }
        }
        PackedSpan {
            n,
            planes,
            blocks,
            basis,
        }
    }

    /// Number of GF(2) basis vectors; the span has `2^dim` elements.
    pub fn dim(&self) -> u32 {
        self.basis.len() as u32
    }

    pub fn len(&self) -> u64 {
        1u64 << self.dim()
    }

    fn word_len(&self) -> usize {
        self.planes * self.blocks
    }

    #[inline]
    fn weight(&self, w: &[u64]) -> usize {
        let mut total = 0;
        for b in 0..self.blocks {
            let mut any = 0u64;
            for p in 0..self.planes {
                any |= w[p * self.blocks + b];
            }
            total += any.count_ones() as usize;
        }
        total
    }

    /// Codeword at Gray index `i`, in packed form.
    fn packed_at(&self, i: u64) -> Vec<u64> {
        let g = gray(i);
        let mut w = vec![0u64; self.word_len()];
        for (bit, v) in self.basis.iter().enumerate() {
            if g >> bit & 1 == 1 {
                xor_into(&mut w, v);
            }
        }
        w
    }

    /// Codeword at Gray index `i`, as field symbols.
    pub fn codeword_at<F: FiniteField>(&self, i: u64) -> Vec<F> {
        unpack(&self.packed_at(i), self.n, self.planes, self.blocks)
    }

    /// Visits Gray indices `start..end` in order, passing each index and the
    /// weight of its codeword.
    fn walk(&self, start: u64, end: u64, mut visit: impl FnMut(u64, usize)) {
        if start >= end {
            return;
        }
        let mut w = self.packed_at(start);
        let mut i = start;
        loop {
            visit(i, self.weight(&w));
            i += 1;
            if i == end {
                break;
            }
            let flip = i.trailing_zeros() as usize;
            xor_into(&mut w, &self.basis[flip]);
        }
    }

    /// Weight histogram of codewords with Gray index in `start..end`.
    pub fn histogram_range(&self, start: u64, end: u64) -> Vec<u128> {
        let mut h = vec![0u128; self.n + 1];
        self.walk(start, end, |_, wt| h[wt] += 1);
        h
    }

    /// Lowest positive weight in `start..end` and the first index attaining it.
    pub fn min_weight_range(&self, start: u64, end: u64) -> Option<(usize, u64)> {
        let mut best: Option<(usize, u64)> = None;
        self.walk(start, end, |i, wt| {
            if wt > 0 && best.is_none_or(|(b, _)| wt < b) {
                best = Some((wt, i));
            }
        });
        best
    }

    fn chunks(&self) -> Vec<(u64, u64)> {
        let total = self.len();
        let mut out = Vec::new();
        let mut s = 0;
        while s < total {
            let e = (s + CHUNK).min(total);
            out.push((s, e));
            s = e;
        }
        out
    }

    /// Full weight histogram, split over worker threads and merged by addition.
    pub fn histogram(&self) -> Vec<u128> {
        self.chunks()
            .into_par_iter()
            .map(|(s, e)| self.histogram_range(s, e))
            .reduce(
                || vec![0u128; self.n + 1],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x += y;
                    }
                    a
                },
            )
    }

    /// Minimum positive weight over the whole span and the lowest Gray index
    /// attaining it.
    pub fn min_weight(&self) -> Option<(usize, u64)> {
        self.chunks()
            .into_par_iter()
            .filter_map(|(s, e)| self.min_weight_range(s, e))
            .min()
    }
}

#[inline]
fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= *s;
    }
}

fn pack<F: FiniteField>(v: &[F], planes: usize, blocks: usize) -> Vec<u64> {
    let mut w = vec![0u64; planes * blocks];
    for (j, x) in v.iter().enumerate() {
        let bits = x.to_bits();
        for p in 0..planes {
            if bits >> p & 1 == 1 {
                w[p * blocks + j / 64] |= 1 << (j % 64);
            }
        }
    }
    w
}

fn unpack<F: FiniteField>(w: &[u64], n: usize, planes: usize, blocks: usize) -> Vec<F> {
    (0..n)
        .map(|j| {
            let mut bits = 0u8;
            for p in 0..planes {
                bits |= ((w[p * blocks + j / 64] >> (j % 64) & 1) as u8) << p;
            }
            F::from_bits(bits)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::{Gf2, Gf4};
    use crate::matspace::parse_symbols;

    #[test]
    fn gray_walk_visits_every_codeword_once() {
        let rows: Vec<Vec<Gf4>> = ["1w0W1", "01ww0"]
            .iter()
            .map(|r| parse_symbols(r).unwrap())
            .collect();
        let g = FieldMatrix::from_rows(rows, 5).unwrap();
        let span = PackedSpan::from_generator(&g);
        assert_eq!(span.len(), 16);
        let words: std::collections::HashSet<Vec<Gf4>> =
            (0..16).map(|i| span.codeword_at::<Gf4>(i)).collect();
        assert_eq!(words.len(), 16);
        // brute-force oracle: all a*g1 + b*g2
        for a in Gf4::elements() {
            for b in Gf4::elements() {
                let w: Vec<Gf4> = (0..5)
                    .map(|j| *a * g.get(0, j) + *b * g.get(1, j))
                    .collect();
                assert!(words.contains(&w));
            }
        }
    }

    #[test]
    fn partitioned_histogram_matches_single_pass() {
        let rows: Vec<Vec<Gf2>> = ["1101000", "0110100", "0011010", "0001101"]
            .iter()
            .map(|r| parse_symbols(r).unwrap())
            .collect();
        let g = FieldMatrix::from_rows(rows, 7).unwrap();
        let span = PackedSpan::from_generator(&g);
        let whole = span.histogram_range(0, 16);
        for cut in 0..=16 {
            let mut a = span.histogram_range(0, cut);
            for (x, y) in a.iter_mut().zip(span.histogram_range(cut, 16)) {
                *x += y;
            }
            assert_eq!(a, whole);
        }
        assert_eq!(whole, vec![1, 0, 0, 7, 7, 0, 0, 1]);
        assert_eq!(span.histogram(), whole);
    }

    #[test]
    fn wide_words_cross_block_boundaries() {
        let n = 130;
        let row: Vec<Gf4> = (0..n).map(|j| Gf4::from_bits((j % 4) as u8)).collect();
        let g = FieldMatrix::from_rows(vec![row.clone()], n).unwrap();
        let span = PackedSpan::from_generator(&g);
        assert_eq!(span.codeword_at::<Gf4>(1), row);
        let nz = row.iter().filter(|x| x.to_bits() != 0).count();
        let h = span.histogram();
        assert_eq!(h[nz], 3);
        assert_eq!(h[0], 1);
    }
}
