//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line. Expected table values are frozen here independently of the
//! library's own constants.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use pw_core::combinatorics::WeightFamily;
use pw_core::egf::{check_lemma21, check_tree_identity, Egf2};
use pw_core::identities::{check, run_suite, SuiteRanges};
use pw_core::partitions::oracle_a;
use pw_core::ring::{cayley_power, rat, Poly};
use pw_core::singleton::{a_explicit, a_umbral, build_triangle};

const P_ROWS: [&[i64]; 7] = [
    &[1],
    &[0, 1],
    &[1, 1, 2],
    &[2, 3, 4, 6],
    &[9, 11, 14, 18, 24],
    &[44, 53, 64, 78, 96, 120],
    &[265, 309, 362, 426, 504, 600, 720],
];

const Q_ROWS: [&[i64]; 9] = [
    &[1],
    &[0, 1],
    &[1, 1, 2],
    &[0, 1, 2, 4],
    &[3, 3, 4, 6, 10],
    &[0, 3, 6, 10, 16, 26],
    &[15, 15, 18, 24, 34, 50, 76],
    &[0, 15, 30, 48, 72, 106, 156, 232],
    &[105, 105, 120, 150, 198, 270, 376, 532, 764],
];

const L_ROWS: [&[i64]; 7] = [
    &[1],
    &[0, 1],
    &[2, 2, 3],
    &[9, 11, 13, 16],
    &[76, 85, 96, 109, 125],
    &[805, 881, 966, 1062, 1171, 1296],
    &[10626, 11431, 12312, 13278, 14340, 15511, 16807],
];

fn verdict(criterion: &str, pass: bool, detail: &str) {
    let tag = if pass { "PASS" } else { "FAIL" };
    println!("{tag} {criterion}: {detail}");
    assert!(pass, "{criterion}: {detail}");
}

#[test]
fn criterion_1_table_reproduction() {
    let start = Instant::now();
    let mut entries = 0usize;
    let mut ok = true;
    for (family, rows) in [
        (WeightFamily::Permutation, &P_ROWS[..]),
        (WeightFamily::Involution, &Q_ROWS[..]),
        (WeightFamily::Forest, &L_ROWS[..]),
    ] {
        let tri = build_triangle(&family, rows.len() - 1).unwrap();
        for (n, row) in rows.iter().enumerate() {
            for (k, &v) in row.iter().enumerate() {
                entries += 1;
                ok &= tri.entry(n, k).unwrap().as_rational().unwrap() == rat(v);
            }
        }
    }
    let elapsed = start.elapsed();
    let within_budget = elapsed < Duration::from_secs(1);
    verdict(
        "criterion 1 (table reproduction)",
        ok && entries == 28 + 45 + 28 && within_budget,
        &format!("{entries} entries exact in {elapsed:.2?} (budget 1 s)"),
    );
}

#[test]
fn criterion_2_oracle_equivalence() {
    let start = Instant::now();
    let sym = WeightFamily::symbolic();
    let tri = build_triangle(&sym, 8).unwrap();
    let mut checked = 0usize;
    let mut ok = true;
    for n in 0..=8usize {
        for k in 0..=n {
            let rec = tri.entry(n, k).unwrap();
            let exp = a_explicit(n - k, k, &sym).unwrap();
            let umb = a_umbral(n - k, k, &sym).unwrap();
            let oracle = oracle_a(n, k, &sym, 9).unwrap();
            ok &= *rec == exp && *rec == umb && *rec == oracle;
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    let within_budget = elapsed < Duration::from_secs(120);
    verdict(
        "criterion 2 (oracle equivalence)",
        ok && checked == 45 && within_budget,
        &format!(
            "recurrence = explicit = umbral = enumeration on {checked} cells in {elapsed:.2?} (budget 2 min)"
        ),
    );
}

#[test]
fn criterion_3_identity_suite() {
    let start = Instant::now();
    let reports = run_suite(&SuiteRanges::new(), 4).unwrap();
    let elapsed = start.elapsed();
    let failures: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
    let ids: std::collections::BTreeSet<_> = reports.iter().map(|r| r.id.as_str()).collect();
    let within_budget = elapsed < Duration::from_secs(300);
    verdict(
        "criterion 3 (identity suite)",
        failures.is_empty() && ids.len() == 52 && within_budget,
        &format!(
            "{} checks across {} identities, {} failures, in {elapsed:.2?} (budget 5 min)",
            reports.len(),
            ids.len(),
            failures.len()
        ),
    );
}

#[test]
fn criterion_4_riordan_analogue() {
    let mut ok = true;
    for id in ["3.3", "3.4"] {
        for n in 0..=20i64 {
            let mut bindings = BTreeMap::new();
            bindings.insert("n".to_string(), n);
            ok &= check(id, &bindings).unwrap().passed();
        }
    }
    verdict(
        "criterion 4 (derangement power-sum identities)",
        ok,
        "ids 3.3 and 3.4 exact for 0 <= n <= 20",
    );
}

#[test]
fn criterion_5_lemma21_machine_check() {
    let mut ok = check_lemma21(8, &WeightFamily::symbolic()).unwrap().pass;
    for family in [
        WeightFamily::Permutation,
        WeightFamily::Involution,
        WeightFamily::Forest,
    ] {
        ok &= check_lemma21(12, &family).unwrap().pass;
    }
    verdict(
        "criterion 5 (bivariate EGF identity)",
        ok,
        "symbolic at order 8, all three numeric families at order 12",
    );
}

#[test]
fn criterion_6_tree_identity() {
    let ok = check_tree_identity(12).unwrap().pass;
    let mut g = Egf2::zero(12);
    for j in 1..=12 {
        g.set_coeff(j, 0, Poly::from_big(cayley_power(j, j as i64 - 1)));
    }
    let coeff6 = g.exp().unwrap().coeff(6, 0).clone();
    verdict(
        "criterion 6 (tree-function identity)",
        ok && coeff6 == Poly::from_int(16807),
        "coefficientwise to order 12; z^6/6! coefficient is 16807",
    );
}

#[test]
fn criterion_7_suite_determinism() {
    let one = run_suite(&SuiteRanges::new(), 1).unwrap();
    let eight = run_suite(&SuiteRanges::new(), 8).unwrap();
    let render = |rs: &[pw_core::identities::CheckReport]| serde_json::to_string(rs).unwrap();
    let (a, b) = (render(&one), render(&eight));
    verdict(
        "criterion 7 (suite determinism)",
        a == b,
        &format!("workers 1 and 8 emit byte-identical reports ({} bytes)", a.len()),
    );
}
