//! Recomputes the reference tables and worked examples and compares them with
//! the stated values.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::{
    ball, ceil_log, classify, format_rational, griesmer_classical_min_n, griesmer_level,
    griesmer_like_max_d, griesmer_like_min_n, griesmer_like_term, johnson_like_improved_max_k,
    omega, sphere_packing_classical_max_k, sphere_packing_like_max_k,
};
use crate::code::{DistanceMethod, LinearCode, DEFAULT_ENUM_BUDGET};
use crate::error::{Error, Result};
use crate::galois::{Gf2, Gf4};
use crate::lrc::{concatenate, BinaryLrc, DEFAULT_MAX_SUBSETS};
use crate::macwilliams::{binomial, hamming4_weights};
use crate::matspace::parse_symbols;
use crate::outer::{
    bundled_cap17, cap_code, cyclic4, hamming4, hexacode, macdonald, mds_rs, solomon_stiffler,
    SubspaceSpec,
};

/// Outcome of one comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Match,
    Mismatch,
    /// The stated value disagrees with a recomputation from its own
    /// definitions; both are reported and neither is asserted.
    PaperDiscrepancyNoted,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReproduceItem {
    pub id: String,
    pub expected: Value,
    pub computed: Value,
    pub status: Status,
}

impl ReproduceItem {
    fn compare(id: &str, expected: Value, computed: Value) -> Self {
        let status = if expected == computed {
            Status::Match
        } else {
            Status::Mismatch
        };
        ReproduceItem {
            id: id.to_string(),
            expected,
            computed,
            status,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ReproduceOptions {
    pub max_enum: u64,
    pub max_subsets: u64,
    /// Also enumerate the 2^26 words of the [51,26] code.
    pub heavy: bool,
}

impl Default for ReproduceOptions {
    fn default() -> Self {
        ReproduceOptions {
            max_enum: DEFAULT_ENUM_BUDGET,
            max_subsets: DEFAULT_MAX_SUBSETS,
            heavy: false,
        }
    }
}

/// Scope names accepted by [`reproduce`], in run order. `table1` expands to
/// its four rows.
pub const SCOPES: &[&str] = &[
    "table1",
    "example4.1",
    "example4.2",
    "macdonald",
    "solomon_stiffler",
    "example5.1",
    "corollary5.1",
    "example5.2",
    "example6.1",
    "example6.2",
    "example6.3",
];

const TABLE1: [(usize, usize, usize, [usize; 3]); 4] = [
    (4, 2, 3, [12, 4, 6]),
    (5, 2, 4, [15, 4, 8]),
    (5, 3, 3, [15, 6, 6]),
    (6, 3, 4, [18, 6, 8]),
];

const EXAMPLE51_LOWER: [&str; 4] = [
    "010000010010010",
    "001000001001001",
    "000010010001011",
    "000001001011010",
];

const EXAMPLE61_LOWER: [&str; 6] = [
    "010000000010001001",
    "001000000001011011",
    "000010000001010001",
    "000001000011001011",
    "000000010001001010",
    "000000001011011001",
];

const EXAMPLE52_POLY: &str = "10W11w01";

/// Runs the requested items (`all`, a scope name, or a row id such as
/// `table1.row3`), in [`SCOPES`] order.
pub fn reproduce(ids: &[String], opts: &ReproduceOptions) -> Result<Vec<ReproduceItem>> {
    let all = ids.is_empty() || ids.iter().any(|s| s == "all");
    for id in ids {
        let known = id == "all"
            || SCOPES.contains(&id.as_str())
            || (1..=4).any(|r| *id == format!("table1.row{r}"));
        if !known {
            return Err(Error::InvalidParameters(format!(
                "unknown reproduce id {id:?}"
            )));
        }
    }
    let wanted = |id: &str| all || ids.iter().any(|s| s == id);
    let mut out = Vec::new();
    for (row, _) in TABLE1.iter().enumerate() {
        let id = format!("table1.row{}", row + 1);
        if wanted("table1") || wanted(&id) {
            out.push(table1_row(row, opts)?);
        }
    }
    type Item = fn(&ReproduceOptions) -> Result<ReproduceItem>;
    let rest: [(&str, Item); 10] = [
        ("example4.1", |_| Ok(example41())),
        ("example4.2", |_| Ok(example42())),
        ("macdonald", macdonald_item),
        ("solomon_stiffler", solomon_stiffler_item),
        ("example5.1", example51),
        ("corollary5.1", corollary51),
        ("example5.2", example52),
        ("example6.1", example61),
        ("example6.2", example62),
        ("example6.3", |_| example63()),
    ];
    for (id, f) in rest {
        if wanted(id) {
            out.push(f(opts)?);
        }
    }
    Ok(out)
}

fn certify(lrc: &BinaryLrc, opts: &ReproduceOptions) -> Result<usize> {
    Ok(lrc.distance_via_subspaces(opts.max_subsets)?.d)
}

fn table1_row(row: usize, opts: &ReproduceOptions) -> Result<ReproduceItem> {
    let (n1, k1, d1, [n, k, d]) = TABLE1[row];
    let outer = mds_rs(n1, k1)?;
    let od = outer.min_distance_exhaustive().d;
    let lrc = concatenate(&outer)?;
    let cd = certify(&lrc, opts)?;
    let exhaustive = lrc.code().min_distance_exhaustive().d;
    Ok(ReproduceItem::compare(
        &format!("table1.row{}", row + 1),
        json!({"outer": [n1, k1, d1], "lrc": [n, k, d, 2], "griesmer_like_d_optimal": true}),
        json!({
            "outer": [outer.n(), outer.k(), od],
            "lrc": [lrc.n(), lrc.k(), if cd == exhaustive { cd } else { 0 }, 2],
            "griesmer_like_d_optimal": griesmer_like_max_d(lrc.n(), lrc.k(), 2, 2) == cd,
        }),
    ))
}

/// The Griesmer-like check for a concatenation of a Griesmer outer code:
/// the term at `τ = k1 − l` (where `4^(l−1) < d1 ≤ 4^l`) and whether `n`
/// respects every term in the stated `τ` range.
fn griesmer_check(outer: [usize; 3], lrc: [usize; 3], with_classical: bool) -> Value {
    let [_, k1, d1] = outer;
    let [n, k, d] = lrc;
    let tau = k1.saturating_sub(griesmer_level(d1, 4));
    let mut v = json!({
        "outer": outer,
        "outer_griesmer_min_n": griesmer_classical_min_n(k1, d1, 4),
        "lrc": [n, k, d, 2],
        "tau": tau,
        "term_at_tau": griesmer_like_term(k, d, 2, 2, tau).ok(),
        "within_bound": griesmer_like_min_n(k, d, 2, 2).map_or(true, |m| m <= n),
    });
    if with_classical {
        v["attains_classical"] = json!(griesmer_classical_min_n(k, d, 2) == n);
    }
    v
}

/// `classical` is compared only where the example states it.
fn griesmer_expected(
    outer: [usize; 3],
    lrc: [usize; 3],
    tau: usize,
    classical: Option<bool>,
) -> Value {
    let mut v = json!({
        "outer": outer,
        "outer_griesmer_min_n": outer[0],
        "lrc": [lrc[0], lrc[1], lrc[2], 2],
        "tau": tau,
        "term_at_tau": lrc[0],
        "within_bound": true,
    });
    if let Some(c) = classical {
        v["attains_classical"] = json!(c);
    }
    v
}

/// Bound checks only: the outer codes are quoted from tables, not built.
fn griesmer_table_item(
    id: &str,
    rows: &[([usize; 3], [usize; 3])],
    tau: usize,
    classical: bool,
) -> ReproduceItem {
    let expected: Vec<Value> = rows
        .iter()
        .map(|&(o, l)| griesmer_expected(o, l, tau, Some(classical)))
        .collect();
    let computed: Vec<Value> = rows
        .iter()
        .map(|&(o, l)| griesmer_check(o, l, true))
        .collect();
    ReproduceItem::compare(id, Value::from(expected), Value::from(computed))
}

fn example41() -> ReproduceItem {
    griesmer_table_item(
        "example4.1",
        &[([9, 2, 7], [27, 4, 14]), ([10, 2, 8], [30, 4, 16])],
        0,
        true,
    )
}

fn example42() -> ReproduceItem {
    griesmer_table_item(
        "example4.2",
        &[([16, 4, 11], [48, 8, 22]), ([17, 4, 12], [51, 8, 24])],
        2,
        false,
    )
}

fn built_griesmer(outer: &LinearCode<Gf4>, opts: &ReproduceOptions) -> Result<Value> {
    let d1 = outer.min_distance(opts.max_enum)?.d;
    let lrc = concatenate(outer)?;
    let d = certify(&lrc, opts)?;
    Ok(griesmer_check(
        [outer.n(), outer.k(), d1],
        [lrc.n(), lrc.k(), d],
        false,
    ))
}

fn macdonald_item(opts: &ReproduceOptions) -> Result<ReproduceItem> {
    Ok(ReproduceItem::compare(
        "macdonald",
        griesmer_expected([20, 3, 15], [60, 6, 30], 1, None),
        built_griesmer(&macdonald(3, 1, 1)?, opts)?,
    ))
}

/// The family is claimed to meet the Griesmer-like bound for every layout. When
/// only the attained term falls short the item is reported as a discrepancy.
fn solomon_stiffler_item(opts: &ReproduceOptions) -> Result<ReproduceItem> {
    let outer = solomon_stiffler(3, &SubspaceSpec::new(vec![1, 1, 1])?)?;
    let expected = griesmer_expected([18, 3, 13], [54, 6, 26], 1, None);
    let computed = built_griesmer(&outer, opts)?;
    let mut item = ReproduceItem::compare("solomon_stiffler", expected.clone(), computed.clone());
    let strip = |v: &Value| {
        let mut v = v.clone();
        v["term_at_tau"] = Value::Null;
        v
    };
    if item.status == Status::Mismatch && strip(&expected) == strip(&computed) {
        item.status = Status::PaperDiscrepancyNoted;
        item.computed["griesmer_like_max_d"] = json!(griesmer_like_max_d(54, 6, 2, 2));
    }
    Ok(item)
}

fn bits(row: &[Gf2]) -> String {
    row.iter().map(|b| b.to_string()).collect()
}

fn lower_rows(lrc: &BinaryLrc) -> Vec<String> {
    let h = lrc.code().parity_check();
    (lrc.ell()..h.rows()).map(|i| bits(h.row(i))).collect()
}

fn nonzero_weights(counts: &[u128]) -> Value {
    let m: serde_json::Map<String, Value> = counts
        .iter()
        .enumerate()
        .filter(|(_, &a)| a != 0)
        .map(|(i, &a)| (i.to_string(), json!(a)))
        .collect();
    Value::Object(m)
}

fn example51(opts: &ReproduceOptions) -> Result<ReproduceItem> {
    let outer = hamming4(2)?;
    let lrc = concatenate(&outer)?;
    let d = certify(&lrc, opts)?;
    let w = lrc.code().weight_distribution(opts.max_enum)?;
    let report = classify(lrc.n(), lrc.k(), d, 2);
    let om = omega(lrc.ell(), d);
    Ok(ReproduceItem::compare(
        "example5.1",
        json!({
            "lrc": [15, 6, 6, 2],
            "weights": {"0": 1, "6": 30, "8": 15, "10": 18},
            "lower_rows": EXAMPLE51_LOWER,
            "perfect": true,
            "sphere_packing": "2^6 * 16 = 2^10",
        }),
        json!({
            "lrc": [lrc.n(), lrc.k(), d, 2],
            "weights": nonzero_weights(&w.counts),
            "lower_rows": lower_rows(&lrc),
            "perfect": report.verdicts.perfect,
            "sphere_packing": format!("2^{} * {om} = 2^{}", lrc.k(), 2 * lrc.ell()),
        }),
    ))
}

fn corollary51(opts: &ReproduceOptions) -> Result<ReproduceItem> {
    let closed = hamming4_weights(2)?;
    let mut mapped = vec![0u128; 3 * closed.n + 1];
    for (j, &a) in closed.counts.iter().enumerate() {
        mapped[2 * j] = a;
    }
    let lrc = concatenate(&hamming4(2)?)?;
    let w = lrc.code().weight_distribution(opts.max_enum)?;
    let stated = json!({"0": 1, "6": 30, "8": 15, "10": 18});
    Ok(ReproduceItem::compare(
        "corollary5.1",
        json!({"closed_form": stated, "enumerated": stated}),
        json!({"closed_form": nonzero_weights(&mapped), "enumerated": nonzero_weights(&w.counts)}),
    ))
}

fn example52(opts: &ReproduceOptions) -> Result<ReproduceItem> {
    let g = parse_symbols::<Gf4>(EXAMPLE52_POLY)?;
    let outer = cyclic4(43, &g)?;
    let cert = outer.min_distance_by_columns(opts.max_enum)?;
    let sp = sphere_packing_classical_max_k(43, cert.d, 4);
    let o = ball(43, cert.d, 4);
    let lrc = concatenate(&outer)?;
    let d = certify(&lrc, opts)?;
    let spl = sphere_packing_like_max_k(lrc.n(), d)?;
    let gap = 2 * lrc.ell() - lrc.k();
    Ok(ReproduceItem::compare(
        "example5.2",
        json!({
            "outer": [43, 36, 5],
            "distance_method": "column_dependence",
            "ball": "8257",
            "ceil_log2_ball": 14,
            "k_optimal_sp": true,
            "lrc": [129, 72, 10, 2],
            "gap": 14,
            "ceil_log2_omega": 14,
        }),
        json!({
            "outer": [outer.n(), outer.k(), cert.d],
            "distance_method": match cert.method {
                DistanceMethod::ColumnDependence => "column_dependence",
                _ => "other",
            },
            "ceil_log2_ball": ceil_log(2, &BigRational::from(o.clone())),
            "ball": o.to_string(),
            "k_optimal_sp": sp.max_k == outer.k() as i64,
            "lrc": [lrc.n(), lrc.k(), d, 2],
            "gap": gap,
            "ceil_log2_omega": ceil_log(2, &spl.denominator),
        }),
    ))
}

fn example61(opts: &ReproduceOptions) -> Result<ReproduceItem> {
    let lrc = concatenate(&hexacode())?;
    let d = certify(&lrc, opts)?;
    let w = lrc.code().weight_distribution(opts.max_enum)?;
    let report = classify(lrc.n(), lrc.k(), d, 2);
    let j = johnson_like_improved_max_k(lrc.n(), d)?;
    Ok(ReproduceItem::compare(
        "example6.1",
        json!({
            "lrc": [18, 6, 8, 2],
            "weights": {"0": 1, "8": 45, "12": 18},
            "lower_rows": EXAMPLE61_LOWER,
            "nearly_perfect": true,
            "omega_prime": "64",
        }),
        json!({
            "lrc": [lrc.n(), lrc.k(), d, 2],
            "weights": nonzero_weights(&w.counts),
            "lower_rows": lower_rows(&lrc),
            "nearly_perfect": report.verdicts.nearly_perfect,
            "omega_prime": format_rational(&j.improved.denominator),
        }),
    ))
}

fn example62(opts: &ReproduceOptions) -> Result<ReproduceItem> {
    let cap = bundled_cap17();
    let outer = cap_code(&cap)?;
    let d1 = outer.min_distance(opts.max_enum)?.d;
    let lrc = concatenate(&outer)?;
    let d = certify(&lrc, opts)?;
    let j = johnson_like_improved_max_k(lrc.n(), d)?;
    let mut expected = json!({
        "cap_size": 17,
        "outer": [17, 13, 4],
        "lrc": [51, 26, 8, 2],
        "omega_prime": "205",
        "gap": 8,
        "ceil_log2_omega_prime": 8,
    });
    let mut computed = json!({
        "cap_size": cap.len(),
        "outer": [outer.n(), outer.k(), d1],
        "lrc": [lrc.n(), lrc.k(), d, 2],
        "omega_prime": format_rational(&j.improved.denominator),
        "gap": 2 * lrc.ell() - lrc.k(),
        "ceil_log2_omega_prime": ceil_log(2, &j.improved.denominator),
    });
    if opts.heavy {
        let w = lrc.code().weight_distribution(u64::MAX)?;
        expected["min_weight"] = json!(8);
        computed["min_weight"] = json!(w.min_distance());
    }
    Ok(ReproduceItem::compare("example6.2", expected, computed))
}

/// The stated value substitutes `n` for `ℓ` inside `Ω_d`; both readings
/// are recomputed.
fn example63() -> Result<ReproduceItem> {
    let (n, k, d) = (75usize, 34usize, 12usize);
    let j = johnson_like_improved_max_k(n, d)?;
    let h = (d / 4) as u64;
    let top = binomial((n / 3) as u64, h) * BigInt::from(3).pow(h as u32);
    let as_printed = |div: usize| {
        BigRational::from(omega(n, d)) + BigRational::new(top.clone(), BigInt::from(div))
    };
    let printed_improved = as_printed(4 * n / (3 * d));
    let printed_original = as_printed(2 * n / d);
    let computed = json!({
        "omega": omega(n / 3, d).to_string(),
        "omega_prime_improved": format_rational(&j.improved.denominator),
        "omega_prime_original": format_rational(&j.original.denominator),
        "max_k_improved": j.improved.max_k,
        "max_k_original": j.original.max_k,
        "attains_improved": k as i64 == j.improved.max_k,
        "reading_n_for_ell": {
            "omega_prime_improved": format_rational(&printed_improved),
            "omega_prime_original": format_rational(&printed_original),
            "max_k_improved": (2 * n / 3) as i64 - ceil_log(2, &printed_improved) as i64,
        },
    });
    let expected = json!({
        "lrc": [n, k, d, 2],
        "omega_prime_improved": "32963.5",
        "omega_prime_original": "30376",
        "gap": 16,
        "attains_improved": true,
    });
    let consistent = computed["reading_n_for_ell"]["omega_prime_improved"]
        == expected["omega_prime_improved"]
        && computed["reading_n_for_ell"]["omega_prime_original"]
            == expected["omega_prime_original"];
    Ok(ReproduceItem {
        id: "example6.3".into(),
        expected,
        computed,
        status: if consistent && j.improved.max_k != k as i64 {
            Status::PaperDiscrepancyNoted
        } else if j.improved.max_k == k as i64 {
            Status::Match
        } else {
            Status::Mismatch
        },
    })
}

/// Items in JSON, one array with keys in sorted order.
pub fn to_json(items: &[ReproduceItem]) -> String {
    serde_json::to_string(items).expect("items serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table1_and_small_examples_match() {
        let opts = ReproduceOptions::default();
        let items = reproduce(
            &[
                "table1".into(),
                "example4.1".into(),
                "example5.1".into(),
                "example6.1".into(),
            ],
            &opts,
        )
        .unwrap();
        assert_eq!(items.len(), 7);
        for it in &items {
            assert_eq!(
                it.status,
                Status::Match,
                "{}: {:?} vs {:?}",
                it.id,
                it.expected,
                it.computed
            );
        }
    }

    #[test]
    fn example63_is_flagged() {
        let it = example63().unwrap();
        assert_eq!(it.status, Status::PaperDiscrepancyNoted);
        assert_eq!(it.computed["omega_prime_improved"], "10538.5");
        assert_eq!(
            it.computed["reading_n_for_ell"]["omega_prime_improved"],
            "32963.5"
        );
    }

    #[test]
    fn unknown_ids_are_rejected() {
        assert!(reproduce(&["table9".into()], &ReproduceOptions::default()).is_err());
    }
}
