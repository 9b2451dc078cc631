//! GF(4) outer codes: MDS, Hamming, hexacode, MacDonald, Solomon–Stiffler,
//! cap codes, cyclic codes, and codes read from files.

mod projective;

pub use projective::{
    bundled_cap17, cap_search, pg_points, pg_size, points_matrix, CapSet, ProjectivePoint,
};

use std::path::Path;

use num_traits::Zero;

use crate::code::{AnyCode, LinearCode, DEFAULT_ENUM_BUDGET};
use crate::error::{Error, Result};
use crate::galois::{FiniteField, Gf2, Gf4};
use crate::matspace::{parse_matrix, parse_symbols, AnyMatrix, FieldMatrix};

/// Dimensions `u_1 ≥ u_2 ≥ … ≥ u_h ≥ 1` of the subspaces removed from a
/// simplex code; no value occurs more than three times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceSpec {
    dims: Vec<usize>,
}

impl SubspaceSpec {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.contains(&0) {
            return Err(Error::InvalidParameters(
                "subspace dimensions must be ≥ 1".into(),
            ));
        }
        if dims.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameters(
                "subspace dimensions must be non-increasing".into(),
            ));
        }
        if dims.windows(4).any(|w| w[0] == w[3]) {
            return Err(Error::InvalidParameters(
                "at most three subspaces may share a dimension".into(),
            ));
        }
        Ok(SubspaceSpec { dims })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn sum(&self) -> usize {
        self.dims.iter().sum()
    }
}

fn pow4(e: usize) -> usize {
    4usize.pow(e as u32)
}

fn from_rows(rows: &[&str]) -> FieldMatrix<Gf4> {
    let rows: Vec<Vec<Gf4>> = rows
        .iter()
        .map(|r| parse_symbols(r).expect("valid literal"))
        .collect();
    let cols = rows[0].len();
    FieldMatrix::from_rows(rows, cols).expect("rectangular literal")
}

/// An MDS code `[n1, k1, n1 - k1 + 1]` over GF(4).
///
/// Besides the trivial `k1 = n1` and single-parity `k1 = n1 - 1` codes, the
/// supported nontrivial pairs are (4,2), (5,2), (5,3) and (6,3): the first
/// three come from points of the projective line, (6,3) from a hyperoval of
/// PG(2, 4). The distance is verified before returning.
pub fn mds_rs(n1: usize, k1: usize) -> Result<LinearCode<Gf4>> {
    let unsupported = || {
        Err(Error::UnsupportedParameters(format!(
            "no MDS code [{n1},{k1}] over GF(4) is built here"
        )))
    };
    if k1 == 0 || k1 > n1 {
        return unsupported();
    }
    let code = if k1 == n1 {
        LinearCode::from_generator(FieldMatrix::identity(n1))?
    } else if k1 + 1 == n1 {
        LinearCode::from_parity_check(FieldMatrix::from_fn(1, n1, |_, _| Gf4::ONE))?
    } else {
        match (n1, k1) {
            (4, 2) | (5, 2) => {
                let pts = pg_points(1);
                LinearCode::from_generator(points_matrix(&pts[..n1], 2))?
            }
            (5, 3) => LinearCode::from_parity_check(points_matrix(&pg_points(1), 2))?,
            (6, 3) => {
                // conic {(1, t, t²)} with its point at infinity and nucleus
                let mut cols: Vec<Vec<Gf4>> = Gf4::elements()
                    .iter()
                    .map(|&t| vec![Gf4::ONE, t, t * t])
                    .collect();
                cols.push(vec![Gf4::ZERO, Gf4::ZERO, Gf4::ONE]);
                cols.push(vec![Gf4::ZERO, Gf4::ONE, Gf4::ZERO]);
                LinearCode::from_generator(FieldMatrix::from_fn(3, 6, |i, j| cols[j][i]))?
            }
            _ => return unsupported(),
        }
    };
    let d = code.min_distance(DEFAULT_ENUM_BUDGET)?.d;
    if d != n1 - k1 + 1 {
        return Err(Error::InvalidParameters(format!(
            "built [{n1},{k1}] code has distance {d}, not MDS"
        )));
    }
    Ok(code)
}

/// The Hamming code over GF(4) with `t` parity checks: the parity-check
/// columns are all points of PG(t−1, 4).
pub fn hamming4(t: usize) -> Result<LinearCode<Gf4>> {
    if t < 2 {
        return Err(Error::InvalidParameters(format!(
            "Hamming codes need t ≥ 2 parity checks, got {t}"
        )));
    }
    LinearCode::from_parity_check(points_matrix(&pg_points(t - 1), t))
}

/// The `[6,3,4]` hexacode with parity-check `[I₃ | A]`,
/// `A = (1 w w; w 1 w; w w 1)`.
pub fn hexacode() -> LinearCode<Gf4> {
    LinearCode::from_parity_check(from_rows(&["1001ww", "010w1w", "001ww1"]))
        .expect("hexacode parity-check has full rank")
}

/// Columns of a generator: `copies` copies of every point of PG(m−1, 4),
/// minus `removed(p)` copies of each point `p`.
fn multiset_generator(
    m: usize,
    copies: usize,
    mut removed: impl FnMut(&ProjectivePoint) -> usize,
) -> FieldMatrix<Gf4> {
    let mut cols = Vec::new();
    for p in pg_points(m - 1) {
        let keep = copies - removed(&p);
        for _ in 0..keep {
            cols.push(p.clone());
        }
    }
    points_matrix(&cols, m)
}

/// Points whose support lies inside coordinates `lo..hi`.
fn in_block(p: &ProjectivePoint, lo: usize, hi: usize) -> bool {
    p.coords()
        .iter()
        .enumerate()
        .all(|(i, x)| x.is_zero() || (lo..hi).contains(&i))
}

/// Generalized MacDonald code: `t` copies of every point of PG(m−1, 4) with
/// one copy of the points of the subspace spanned by the first `u`
/// coordinates removed.
///
/// The length `(t·4^m − 4^u)/3` is integral only for `t ∈ {1, 4}`; other
/// multiplicities are rejected. The realized code has length
/// `(t(4^m − 1) − (4^u − 1))/3`, dimension `m` and distance
/// `t·4^(m−1) − 4^(u−1)`.
pub fn macdonald(m: usize, u: usize, t: usize) -> Result<LinearCode<Gf4>> {
    if u == 0 || u >= m {
        return Err(Error::InvalidParameters(format!(
            "MacDonald codes need 1 ≤ u ≤ m−1, got m={m}, u={u}"
        )));
    }
    if !(1..=4).contains(&t) {
        return Err(Error::InvalidParameters(format!(
            "multiplicity t must be in 1..=4, got {t}"
        )));
    }
    let num = t * pow4(m) - pow4(u);
    if !num.is_multiple_of(3) {
        return Err(Error::InvalidParameters(format!(
            "length ({t}·4^{m} − 4^{u})/3 = {num}/3 is not an integer"
        )));
    }
    let g = multiset_generator(m, t, |p| usize::from(in_block(p, 0, u)));
    LinearCode::from_generator(g)
}

/// Solomon–Stiffler code: the simplex code of dimension `t` with the points
/// of disjoint subspaces removed. Subspace `i` is spanned by a block of
/// `u_i` consecutive coordinates, blocks laid out left to right.
pub fn solomon_stiffler(t: usize, spec: &SubspaceSpec) -> Result<LinearCode<Gf4>> {
    if t == 0 {
        return Err(Error::InvalidParameters("dimension t must be ≥ 1".into()));
    }
    if spec.sum() > t {
        return Err(Error::UnsupportedSubspaceLayout { sum: spec.sum(), t });
    }
    if spec.dims().first().is_some_and(|&u| u >= t) {
        return Err(Error::InvalidParameters(format!(
            "largest subspace dimension must be below t = {t}"
        )));
    }
    let mut blocks = Vec::new();
    let mut lo = 0;
    for &u in spec.dims() {
        blocks.push((lo, lo + u));
        lo += u;
    }
    let g = multiset_generator(t, 1, |p| {
        usize::from(blocks.iter().any(|&(lo, hi)| in_block(p, lo, hi)))
    });
    LinearCode::from_generator(g)
}

/// The code whose parity-check columns are the cap points. Its distance is
/// computed and cached before returning.
pub fn cap_code(cap: &CapSet) -> Result<LinearCode<Gf4>> {
    let cap = CapSet::new(cap.ambient(), cap.points().to_vec())?;
    let mut h = cap.matrix();
    if h.rank() < h.rows() {
        h = h.row_basis();
    }
    let code = LinearCode::from_parity_check(h)?;
    if code.k() > 0 {
        code.min_distance(DEFAULT_ENUM_BUDGET)?;
    }
    Ok(code)
}

/// Remainder of `a` divided by `b`; coefficients in ascending powers.
fn poly_rem(a: &[Gf4], b: &[Gf4]) -> Vec<Gf4> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = b[db].inv().expect("leading coefficient is nonzero");
    while r.len() > db {
        let top = *r.last().expect("nonempty");
        if !top.is_zero() {
            let c = top * lead_inv;
            let shift = r.len() - 1 - db;
            for (i, &bi) in b.iter().enumerate() {
                r[shift + i] += c * bi;
            }
        }
        r.pop();
    }
    r
}

/// Cyclic code of length `n` generated by `gen_poly`, given as coefficients
/// in ascending powers of x (`gen_poly[i]` multiplies `x^i`).
pub fn cyclic4(n: usize, gen_poly: &[Gf4]) -> Result<LinearCode<Gf4>> {
    let deg = gen_poly
        .iter()
        .rposition(|c| !c.is_zero())
        .ok_or_else(|| Error::InvalidParameters("generator polynomial is zero".into()))?;
    if deg >= n {
        return Err(Error::InvalidParameters(format!(
            "generator degree {deg} must be below the length {n}"
        )));
    }
    let g = &gen_poly[..=deg];
    let mut xn1 = vec![Gf4::ZERO; n + 1];
    xn1[0] = Gf4::ONE;
    xn1[n] = Gf4::ONE;
    if poly_rem(&xn1, g).iter().any(|c| !c.is_zero()) {
        return Err(Error::NotADivisor { n });
    }
    let k = n - deg;
    let gm = FieldMatrix::from_fn(k, n, |i, j| {
        if j >= i && j - i <= deg {
            g[j - i]
        } else {
            Gf4::ZERO
        }
    });
    LinearCode::from_generator(gm)
}

/// Whether an ingested matrix is a generator or a parity-check matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixKind {
    Generator,
    Parity,
}

/// Result of reading a code file: the code plus what was checked.
#[derive(Debug, Clone)]
pub struct IngestReport {
    pub code: AnyCode,
    pub kind: MatrixKind,
    /// Distance stated in the file header (`d=`), if any.
    pub advertised_d: Option<usize>,
    /// Distance computed within the budget, if it could be.
    pub computed_d: Option<usize>,
    pub log: Vec<String>,
}

fn build<F: FiniteField>(m: FieldMatrix<F>, kind: MatrixKind) -> Result<LinearCode<F>> {
    match kind {
        MatrixKind::Generator => LinearCode::from_generator(m),
        MatrixKind::Parity => LinearCode::from_parity_check(m),
    }
}

/// A code file after parsing, before any distance computation.
#[derive(Debug, Clone)]
pub struct ParsedCode {
    pub code: AnyCode,
    pub kind: MatrixKind,
    pub advertised_d: Option<usize>,
}

/// Parses a code file: a matrix in the text format with a header token
/// `kind=generator` or `kind=parity` and optionally `d=<distance>`.
pub fn parse_code(text: &str) -> Result<ParsedCode> {
    let (header, matrix) = parse_matrix(text)?;
    let perr = |message: String| Error::Parse { line: 1, message };
    let mut kind = None;
    let mut advertised_d = None;
    for (k, v) in &header.extra {
        match k.as_str() {
            "kind" => {
                kind = Some(match v.as_str() {
                    "generator" => MatrixKind::Generator,
                    "parity" => MatrixKind::Parity,
                    _ => return Err(perr(format!("unknown kind `{v}`"))),
                })
            }
            "d" => {
                advertised_d = Some(
                    v.parse::<usize>()
                        .map_err(|_| perr(format!("`d` is not a count: `{v}`")))?,
                )
            }
            _ => return Err(perr(format!("unknown header key `{k}`"))),
        }
    }
    let kind = kind.ok_or_else(|| perr("missing `kind`".into()))?;
    let code = match matrix {
        AnyMatrix::Gf2(m) => AnyCode::Gf2(build::<Gf2>(m, kind)?),
        AnyMatrix::Gf4(m) => AnyCode::Gf4(build::<Gf4>(m, kind)?),
    };
    Ok(ParsedCode {
        code,
        kind,
        advertised_d,
    })
}

/// Parses a code file (see [`parse_code`]) and computes its distance within
/// `budget`.
///
/// The code is returned even when the advertised distance disagrees with
/// the computed one; the disagreement is recorded in the log.
pub fn ingest_str(text: &str, budget: u64) -> Result<IngestReport> {
    let ParsedCode {
        code,
        kind,
        advertised_d,
    } = parse_code(text)?;
    let mut log = vec![format!(
        "parsed {:?} matrix over GF({}): [{},{}]",
        kind,
        code.field().order(),
        code.n(),
        code.k()
    )];
    let computed_d = if code.k() == 0 {
        log.push("zero-dimensional code; distance undefined".into());
        None
    } else {
        match code.min_distance(budget) {
            Ok(d) => {
                log.push(format!("computed d = {d}"));
                Some(d)
            }
            Err(Error::BudgetExceeded { lower, upper }) => {
                log.push(format!(
                    "distance budget exhausted; d in [{lower}, {upper}]"
                ));
                None
            }
            Err(e) => return Err(e),
        }
    };
    match (advertised_d, computed_d) {
        (Some(a), Some(c)) if a != c => log.push(format!(
            "MISMATCH: file advertises d = {a}, computed d = {c}"
        )),
        (Some(a), Some(_)) => log.push(format!("advertised d = {a} confirmed")),
        (Some(a), None) => log.push(format!("advertised d = {a} not verified")),
        _ => {}
    }
    Ok(IngestReport {
        code,
        kind,
        advertised_d,
        computed_d,
        log,
    })
}

/// Reads and parses a code file; see [`ingest_str`].
pub fn ingest(path: &Path, budget: u64) -> Result<IngestReport> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    ingest_str(&text, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::DistanceMethod;

    fn params(c: &LinearCode<Gf4>) -> (usize, usize, usize) {
        (c.n(), c.k(), c.min_distance_exhaustive().d)
    }

    fn griesmer(k: usize, d: usize) -> usize {
        (0..k).map(|i| d.div_ceil(pow4(i))).sum()
    }

    #[test]
    fn mds_table() {
        assert_eq!(params(&mds_rs(4, 2).unwrap()), (4, 2, 3));
        assert_eq!(params(&mds_rs(5, 2).unwrap()), (5, 2, 4));
        assert_eq!(params(&mds_rs(5, 3).unwrap()), (5, 3, 3));
        assert_eq!(params(&mds_rs(6, 3).unwrap()), (6, 3, 4));
        assert_eq!(params(&mds_rs(7, 7).unwrap()), (7, 7, 1));
        assert_eq!(params(&mds_rs(7, 6).unwrap()), (7, 6, 2));
        assert!(matches!(mds_rs(7, 3), Err(Error::UnsupportedParameters(_))));
        assert!(matches!(mds_rs(6, 2), Err(Error::UnsupportedParameters(_))));
    }

    #[test]
    fn hamming_codes() {
        let h2 = hamming4(2).unwrap();
        assert_eq!(params(&h2), (5, 3, 3));
        let h3 = hamming4(3).unwrap();
        assert_eq!((h3.n(), h3.k()), (21, 18));
        let c = h3.min_distance(1 << 10).unwrap();
        assert_eq!(c.d, 3);
        assert_eq!(c.method, DistanceMethod::ColumnDependence);
        assert!(h3.contains(&c.witness));
        assert!(hamming4(1).is_err());
        // perfect: 4^k (1 + 3n) = 4^n
        for t in 2..=3 {
            let c = hamming4(t).unwrap();
            assert_eq!(
                4u128.pow(c.k() as u32) * (1 + 3 * c.n() as u128),
                4u128.pow(c.n() as u32)
            );
        }
    }

    #[test]
    fn hexacode_parameters() {
        let h = hexacode();
        assert_eq!(params(&h), (6, 3, 4));
        assert_eq!(
            h.weight_distribution_exhaustive().counts,
            vec![1, 0, 0, 0, 45, 0, 18]
        );
    }

    #[test]
    fn macdonald_codes() {
        let c = macdonald(2, 1, 1).unwrap();
        assert_eq!(params(&c), (4, 2, 3));
        let c = macdonald(3, 1, 1).unwrap();
        assert_eq!(params(&c), (20, 3, 15));
        assert_eq!(c.n(), griesmer(3, 15));
        let c = macdonald(2, 1, 4).unwrap();
        assert_eq!(params(&c), (19, 2, 15));
        assert_eq!(c.n(), griesmer(2, 15));
        assert!(matches!(
            macdonald(2, 1, 2),
            Err(Error::InvalidParameters(_))
        ));
        assert!(matches!(
            macdonald(2, 1, 3),
            Err(Error::InvalidParameters(_))
        ));
        assert!(macdonald(2, 2, 1).is_err());
    }

    #[test]
    fn solomon_stiffler_codes() {
        let s = SubspaceSpec::new(vec![1]).unwrap();
        assert_eq!(params(&solomon_stiffler(2, &s).unwrap()), (4, 2, 3));
        let s = SubspaceSpec::new(vec![1, 1, 1]).unwrap();
        let c = solomon_stiffler(3, &s).unwrap();
        assert_eq!(params(&c), (18, 3, 13));
        assert_eq!(c.n(), griesmer(3, 13));
        let s = SubspaceSpec::new(vec![2, 1]).unwrap();
        let c = solomon_stiffler(4, &s).unwrap();
        assert_eq!(params(&c), (85 - 5 - 1, 4, 64 - 4 - 1));
        let s = SubspaceSpec::new(vec![2, 2]).unwrap();
        assert_eq!(
            solomon_stiffler(3, &s).unwrap_err(),
            Error::UnsupportedSubspaceLayout { sum: 4, t: 3 }
        );
        assert!(SubspaceSpec::new(vec![1, 1, 1, 1]).is_err());
        assert!(SubspaceSpec::new(vec![1, 2]).is_err());
    }

    #[test]
    fn cap_codes() {
        let cap5 = cap_search(2, 5, 100_000).unwrap();
        let c = cap_code(&cap5).unwrap();
        assert_eq!(params(&c), (5, 2, 4));
        let pts = pg_points(2);
        let bad = CapSet::new(2, vec![pts[0].clone(), pts[1].clone(), pts[4].clone()]);
        assert!(matches!(bad, Err(Error::NotACap(_))));
    }

    #[test]
    fn bundled_cap_is_a_17_cap() {
        let cap = bundled_cap17();
        assert_eq!((cap.ambient(), cap.len()), (3, 17));
        let c = cap_code(&cap).unwrap();
        assert_eq!((c.n(), c.k()), (17, 13));
        assert_eq!(c.cached_distance().unwrap().d, 4);
    }

    #[test]
    fn cyclic_codes() {
        let c = cyclic4(3, &[Gf4::ONE, Gf4::ONE]).unwrap();
        assert_eq!((c.n(), c.k()), (3, 2));
        let g = parse_symbols::<Gf4>("10W11w01").unwrap();
        let c = cyclic4(43, &g).unwrap();
        assert_eq!((c.n(), c.k()), (43, 36));
        assert_eq!(
            cyclic4(5, &[Gf4::ONE, Gf4::ZERO, Gf4::ONE]).unwrap_err(),
            Error::NotADivisor { n: 5 }
        );
    }

    #[test]
    fn ingest_reports_mismatch() {
        let text = "field=4 rows=2 cols=5 kind=parity d=4\n1 0 1 1 1\n0 1 1 w W\n";
        let r = ingest_str(text, 1 << 20).unwrap();
        assert_eq!((r.code.n(), r.code.k()), (5, 3));
        assert_eq!(r.computed_d, Some(3));
        assert!(r.log.iter().any(|l| l.contains("MISMATCH")));
        assert!(matches!(
            ingest_str("field=4 rows=1 cols=2 kind=parity\n1 x\n", 10),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            ingest_str("field=4 rows=1 cols=2\n1 1\n", 10),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            ingest_str("field=4 rows=2 cols=2 kind=generator\n1 1\nw w\n", 10),
            Err(Error::RankDeficient { .. })
        ));
    }
}
