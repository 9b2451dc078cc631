//! Points of PG(n, 4), caps, and a backtracking cap search.

use std::fmt;

use crate::error::{Error, Result};
use crate::galois::{FiniteField, Gf4};
use crate::matspace::{parse_count, parse_header_tokens, FieldMatrix};

/// A point of PG(n, 4): a nonzero vector scaled so that its first nonzero
/// coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint {
    coords: Vec<Gf4>,
}

impl ProjectivePoint {
    /// Normalizes `v`; fails on the zero vector.
    pub fn new(v: &[Gf4]) -> Result<Self> {
        let lead = v
            .iter()
            .find(|x| x.to_bits() != 0)
            .ok_or_else(|| Error::InvalidParameters("the zero vector is not a point".into()))?;
        let s = lead.inv()?;
        Ok(ProjectivePoint {
            coords: v.iter().map(|&x| s * x).collect(),
        })
    }

    pub fn coords(&self) -> &[Gf4] {
        &self.coords
    }

    /// Ambient projective dimension `n` (the vector has `n + 1` coordinates).
    pub fn ambient(&self) -> usize {
        self.coords.len() - 1
    }

    /// Position of the point in [`pg_points`] order: the base-4 integer with
    /// coordinate 0 as the least significant digit.
    pub fn key(&self) -> usize {
        vector_key(&self.coords)
    }
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.coords.iter().map(|x| x.symbol()).collect();
        write!(f, "P({s})")
    }
}

fn vector_key(v: &[Gf4]) -> usize {
    v.iter()
        .rev()
        .fold(0usize, |acc, x| acc * 4 + x.to_bits() as usize)
}

fn vector_from_key(mut key: usize, len: usize) -> Vec<Gf4> {
    (0..len)
        .map(|_| {
            let x = Gf4::from_bits((key % 4) as u8);
            key /= 4;
            x
        })
        .collect()
}

/// All `(4^(n+1) - 1)/3` points of PG(n, 4), normalized, ordered by the
/// base-4 integer whose least significant digit is coordinate 0.
///
/// For PG(1, 4) this gives (1,0), (0,1), (1,1), (1,w), (1,w²).
pub fn pg_points(n: usize) -> Vec<ProjectivePoint> {
    let len = n + 1;
    (1..4usize.pow(len as u32))
        .map(|key| vector_from_key(key, len))
        .filter(|v| v.iter().find(|x| x.to_bits() != 0).map(|x| x.to_bits()) == Some(1))
        .map(|coords| ProjectivePoint { coords })
        .collect()
}

/// Number of points of PG(n, 4).
pub fn pg_size(n: usize) -> usize {
    (4usize.pow(n as u32 + 1) - 1) / 3
}

/// Matrix whose columns are the given points.
pub fn points_matrix(points: &[ProjectivePoint], rows: usize) -> FieldMatrix<Gf4> {
    FieldMatrix::from_fn(rows, points.len(), |i, j| points[j].coords[i])
}

/// Three distinct points are collinear iff their vectors have rank < 3.
fn collinear(a: &ProjectivePoint, b: &ProjectivePoint, c: &ProjectivePoint) -> bool {
    let m = FieldMatrix::from_rows(
        vec![a.coords.clone(), b.coords.clone(), c.coords.clone()],
        a.coords.len(),
    )
    .expect("points share an ambient space");
    m.rank() < 3
}

/// A set of points of PG(n, 4), no three collinear.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapSet {
    ambient: usize,
    points: Vec<ProjectivePoint>,
}

impl CapSet {
    /// Checks the cap condition on every triple; the error names the first
    /// collinear triple by index. Repeated points count as collinear.
    pub fn new(ambient: usize, points: Vec<ProjectivePoint>) -> Result<Self> {
        if let Some(p) = points.iter().find(|p| p.ambient() != ambient) {
            return Err(Error::InvalidParameters(format!(
                "point {p:?} is not in PG({ambient},4)"
            )));
        }
        let m = points.len();
        for i in 0..m {
            for j in i + 1..m {
                if points[i] == points[j] {
                    let k = if j + 1 < m { j + 1 } else { i };
                    return Err(Error::NotACap([i, j, k]));
                }
                for k in j + 1..m {
                    if collinear(&points[i], &points[j], &points[k]) {
                        return Err(Error::NotACap([i, j, k]));
                    }
                }
            }
        }
        Ok(CapSet { ambient, points })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Parity-check matrix with the cap points as columns.
    pub fn matrix(&self) -> FieldMatrix<Gf4> {
        points_matrix(&self.points, self.ambient + 1)
    }

    /// Cap file text: `pg=<n> q=4 size=<k>` then one point per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("pg={} q=4 size={}\n", self.ambient, self.points.len());
        for p in &self.points {
            let syms: Vec<String> = p.coords.iter().map(|x| x.symbol().to_string()).collect();
            s.push_str(&syms.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses a cap file. Points may be written with or without spaces
    /// between symbols; each must already be normalized.
    pub fn parse(text: &str) -> Result<Self> {
        let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
        let perr = |line: usize, message: String| Error::Parse { line, message };
        let first = lines.first().ok_or_else(|| perr(1, "empty input".into()))?;
        let hdr = parse_header_tokens(first, 1)?;
        for k in hdr.keys() {
            if !["pg", "q", "size"].contains(&k.as_str()) {
                return Err(perr(1, format!("unknown header key `{k}`")));
            }
        }
        let ambient = parse_count(&hdr, "pg", 1)?;
        if parse_count(&hdr, "q", 1)? != 4 {
            return Err(perr(1, "only q=4 caps are supported".into()));
        }
        let size = parse_count(&hdr, "size", 1)?;
        if lines.len() - 1 != size {
            return Err(perr(
                lines.len() + 1,
                format!("expected {size} points, found {}", lines.len() - 1),
            ));
        }
        let mut points = Vec::with_capacity(size);
        for (i, line) in lines[1..].iter().enumerate() {
            let lineno = i + 2;
            let v: Vec<Gf4> = line
                .chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| {
                    Gf4::from_symbol(c)
                        .ok_or_else(|| perr(lineno, format!("`{c}` is not a GF(4) symbol")))
                })
                .collect::<Result<_>>()?;
            if v.len() != ambient + 1 {
                return Err(perr(
                    lineno,
                    format!("expected {} coordinates, found {}", ambient + 1, v.len()),
                ));
            }
            let p = ProjectivePoint::new(&v).map_err(|e| perr(lineno, e.to_string()))?;
            if p.coords != v {
                return Err(perr(lineno, "point is not normalized".into()));
            }
            points.push(p);
        }
        CapSet::new(ambient, points)
    }
}

/// Largest caps of PG(n, 4) for n ≤ 3.
const MAX_CAP: [usize; 4] = [1, 2, 6, 17];

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    #[inline]
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    /// Number of clear bits at positions `from..n`.
    fn count_clear_from(&self, from: usize, n: usize) -> usize {
        (from..n).filter(|&i| !self.get(i)).count()
    }
}

struct Search<'a> {
    n: usize,
    /// third_points[i][j] = the other three points on the line through i and j
    lines: &'a [Vec<[u16; 3]>],
    target: usize,
    budget: u64,
    nodes: u64,
}

impl Search<'_> {
    fn block_new(&self, chosen: &[usize], p: usize, blocked: &mut Bits) {
        blocked.set(p);
        for &c in chosen {
            for &t in &self.lines[c][p] {
                blocked.set(t as usize);
            }
        }
    }

    /// Depth-first over points in increasing index. Returns Ok(true) when the
    /// target is reached with `chosen` holding the cap.
    fn dfs(&mut self, chosen: &mut Vec<usize>, blocked: &Bits, from: usize) -> Result<bool> {
        if chosen.len() == self.target {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchBudgetExceeded {
                budget: self.budget,
            });
        }
        let need = self.target - chosen.len();
        if blocked.count_clear_from(from, self.n) < need {
            return Ok(false);
        }
        for p in from..self.n {
            if blocked.get(p) {
                continue;
            }
            let mut next = blocked.clone();
            self.block_new(chosen, p, &mut next);
            chosen.push(p);
            if self.dfs(chosen, &next, p + 1)? {
                return Ok(true);
            }
            chosen.pop();
            if blocked.count_clear_from(p + 1, self.n) < need {
                break;
            }
        }
        Ok(false)
    }
}

fn line_table(points: &[ProjectivePoint]) -> Vec<Vec<[u16; 3]>> {
    let len = points[0].coords.len();
    let mut index = vec![u16::MAX; 4usize.pow(len as u32)];
    for (i, p) in points.iter().enumerate() {
        index[p.key()] = i as u16;
    }
    let n = points.len();
    let mut lines = vec![vec![[0u16; 3]; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut out = [0u16; 3];
            for (slot, lam) in Gf4::nonzero().iter().enumerate() {
                let v: Vec<Gf4> = points[i]
                    .coords
                    .iter()
                    .zip(&points[j].coords)
                    .map(|(a, b)| *a + *lam * *b)
                    .collect();
                let p = ProjectivePoint::new(&v).expect("distinct points span a line");
                out[slot] = index[p.key()];
            }
            lines[i][j] = out;
        }
    }
    lines
}

/// Finds a cap of `target` points in PG(ambient, 4) by deterministic
/// backtracking over points in [`pg_points`] order, visiting at most
/// `node_budget` search nodes.
///
/// Whenever a cap of the target size must contain a projective basis (it
/// cannot fit in a hyperplane) the search starts from the coordinate basis,
/// and in the plane from the standard frame, which loses no caps up to
/// projective equivalence. The cap returned is the lexicographically least
/// one extending the seed.
pub fn cap_search(ambient: usize, target: usize, node_budget: u64) -> Result<CapSet> {
    let points = pg_points(ambient);
    let n = points.len();
    if target == 0 {
        return CapSet::new(ambient, vec![]);
    }
    let mut seeds: Vec<Vec<Gf4>> = Vec::new();
    let spans = ambient >= 1 && ambient <= MAX_CAP.len() && target > MAX_CAP[ambient - 1];
    if spans {
        for i in 0..=ambient {
            let mut e = vec![Gf4::ZERO; ambient + 1];
            e[i] = Gf4::ONE;
            seeds.push(e);
        }
        if ambient == 2 {
            seeds.push(vec![Gf4::ONE; 3]);
        }
    }
    let lines = line_table(&points);
    let mut search = Search {
        n,
        lines: &lines,
        target,
        budget: node_budget,
        nodes: 0,
    };
    let mut chosen = Vec::new();
    let mut blocked = Bits::new(n);
    for s in &seeds {
        let key = vector_key(s);
        let idx = points
            .iter()
            .position(|p| p.key() == key)
            .expect("seed is a point");
        search.block_new(&chosen, idx, &mut blocked);
        chosen.push(idx);
    }
    let found = if chosen.len() >= target {
        chosen.truncate(target);
        true
    } else {
        search.dfs(&mut chosen, &blocked, 0)?
    };
    if !found {
        return Err(Error::SearchExhausted { target });
    }
    chosen.sort_unstable();
    CapSet::new(
        ambient,
        chosen.into_iter().map(|i| points[i].clone()).collect(),
    )
}

/// The 17-cap of PG(3, 4) found by [`cap_search`], bundled so that builds do
/// not need to repeat the search.
pub fn bundled_cap17() -> CapSet {
    CapSet::parse(include_str!("../../data/cap_pg3_17.txt")).expect("bundled cap is valid")
}
