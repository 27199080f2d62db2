//! Declarative registry of combinatorial identities around the
//! largest-singleton triangle, and an exhaustive exact checker over integer
//! parameter grids.
//!
//! Every record constructs its two sides through independent public APIs
//! (triangle recurrence vs. explicit sums, umbral routes, generating
//! functions) and compares them either as canonical polynomials in the
//! symbolic weights and the indeterminates lambda / y, or -- for relations
//! that are rational rather than polynomial in y -- at a declared finite
//! set of exact rational points avoiding poles.

mod registry;

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::combinatorics::{
    bell_polynomial, complete_bell_sequence, sequence_values, Sequence, WeightFamily,
};
use crate::error::{Error, Result};
use crate::ring::{Poly, Rat};
use crate::singleton::{build_triangle, Triangle};

pub use registry::register_all;

/// Comparison discipline for one identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Both sides are polynomials; compare canonical forms (exact equality
    /// in the symbolic weights and any indeterminates).
    SymbolicPoly,
    /// The relation is rational in y; compare exact values at every point
    /// of a declared pole-free set.
    RationalPoints,
}

/// Whether a record computes over symbolic weights or a numeric family;
/// drives context sizing and default grids.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightsKind {
    Symbolic,
    Numeric,
}

/// One integer parameter of an identity, with its default grid bound
/// (inclusive) and the largest value a single `check` call accepts.
#[derive(Clone, Copy, Debug)]
pub struct Param {
    pub name: &'static str,
    pub default_max: i64,
    pub hard_max: i64,
}

/// Bound parameter values; only the fields named by the record's `params`
/// are meaningful.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Params {
    pub n: usize,
    pub m: usize,
    pub k: usize,
}

impl Params {
    pub fn get(&self, name: &str) -> usize {
        match name {
            "n" => self.n,
            "m" => self.m,
            "k" => self.k,
            _ => panic!("unknown parameter {name:?}"),
        }
    }

    pub fn set(&mut self, name: &str, value: usize) {
        match name {
            "n" => self.n = value,
            "m" => self.m = value,
            "k" => self.k = value,
            _ => panic!("unknown parameter {name:?}"),
        }
    }
}

/// Evaluated sides of one identity instance.
pub enum Sides {
    Polys { lhs: Poly, rhs: Poly },
    Points { pairs: Vec<PointPair> },
}

/// Exact evaluation of both sides at one rational point.
pub struct PointPair {
    pub at: Rat,
    pub lhs: Rat,
    pub rhs: Rat,
}

/// A registered identity: id, parameter domain, independent side
/// constructors, and a human-readable statement of the relation.
pub struct IdentityRecord {
    pub id: &'static str,
    /// ASCII rendering of the relation being checked.
    pub reference: &'static str,
    pub params: &'static [Param],
    pub mode: Mode,
    pub weights: WeightsKind,
    pub sides: fn(&SuiteContext, &Params) -> Sides,
}

/// The immutable record set; construction fails on duplicate ids.
pub struct Registry {
    records: Vec<IdentityRecord>,
}

impl Registry {
    pub(crate) fn from_records(records: Vec<IdentityRecord>) -> Result<Registry> {
        let mut seen = std::collections::HashSet::new();
        for r in &records {
            if !seen.insert(r.id) {
                return Err(Error::DuplicateIdentity(r.id.to_string()));
            }
        }
        Ok(Registry { records })
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn records(&self) -> &[IdentityRecord] {
        &self.records
    }

    pub fn get(&self, id: &str) -> Result<&IdentityRecord> {
        self.records
            .iter()
            .find(|r| r.id == id)
            .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
    }
}

/// Shared registry instance.
pub fn registry() -> &'static Registry {
    static REG: OnceLock<Registry> = OnceLock::new();
    REG.get_or_init(|| register_all().expect("registry is statically well formed"))
}

/// Precomputed immutable tables the side constructors read: the symbolic
/// triangle and complete Bell sequence, the three numeric triangles, the
/// classical sequences, and the Bell polynomials. Safe to share across
/// worker threads.
pub struct SuiteContext {
    sym: Triangle,
    ysym: Vec<Poly>,
    perm: Triangle,
    inv: Triangle,
    forest: Triangle,
    der: Vec<Rat>,
    invs: Vec<Rat>,
    fpf: Vec<Rat>,
    bells: Vec<Rat>,
    bell_polys: Vec<Poly>,
}

impl SuiteContext {
    /// Build tables covering symbolic triangle rows up to `sym_rows` and
    /// numeric rows up to `num_rows`.
    pub fn build(sym_rows: usize, num_rows: usize) -> Result<SuiteContext> {
        let sym_rows = sym_rows.max(2);
        let num_rows = num_rows.max(2);
        let sym_family = WeightFamily::symbolic_with_budget(sym_rows + 2);
        let sym = build_triangle(&sym_family, sym_rows)?;
        let ysym = complete_bell_sequence(sym_rows, &sym_family, false)?;
        let seq_len = num_rows + 2;
        Ok(SuiteContext {
            sym,
            ysym,
            perm: build_triangle(&WeightFamily::Permutation, num_rows)?,
            inv: build_triangle(&WeightFamily::Involution, num_rows)?,
            forest: build_triangle(&WeightFamily::Forest, num_rows)?,
            der: sequence_values(Sequence::Derangement, seq_len),
            invs: sequence_values(Sequence::InvolutionCount, seq_len),
            fpf: sequence_values(Sequence::FpfInvolution, seq_len),
            bells: sequence_values(Sequence::BellNumber, seq_len),
            bell_polys: (0..=seq_len).map(bell_polynomial).collect(),
        })
    }

    /// Symbolic triangle entry A(n, k).
    pub fn a(&self, n: usize, k: usize) -> &Poly {
        self.sym.entry(n, k).expect("context sized for this check")
    }

    /// Symbolic complete Bell polynomial Y(j).
    pub fn y(&self, j: usize) -> &Poly {
        &self.ysym[j]
    }

    fn numeric(tri: &Triangle, n: usize, k: usize) -> Rat {
        tri.entry(n, k)
            .expect("context sized for this check")
            .as_rational()
            .expect("numeric triangle entries are constants")
    }

    /// Permutation triangle P(n, k).
    pub fn p(&self, n: usize, k: usize) -> Rat {
        Self::numeric(&self.perm, n, k)
    }

    /// Involution triangle Q(n, k).
    pub fn q(&self, n: usize, k: usize) -> Rat {
        Self::numeric(&self.inv, n, k)
    }

    /// Forest triangle L(n, k).
    pub fn l(&self, n: usize, k: usize) -> Rat {
        Self::numeric(&self.forest, n, k)
    }

    /// Derangement number D(j).
    pub fn d(&self, j: usize) -> Rat {
        self.der[j].clone()
    }

    /// Involution count I(j).
    pub fn i(&self, j: usize) -> Rat {
        self.invs[j].clone()
    }

    /// Fixed-point-free involution count M(j).
    pub fn m(&self, j: usize) -> Rat {
        self.fpf[j].clone()
    }

    /// Bell number B(j).
    pub fn b(&self, j: usize) -> Rat {
        self.bells[j].clone()
    }

    /// Bell polynomial B_j(y).
    pub fn bell_poly(&self, j: usize) -> &Poly {
        &self.bell_polys[j]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// Counterexample carried by every failing report: canonical text of both
/// sides, and the evaluation point for rational-point checks.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub lhs: String,
    pub rhs: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub at: Option<String>,
}

/// Outcome of checking one identity at one parameter binding.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub params: BTreeMap<String, i64>,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// Evaluate one record at bound parameters against a prebuilt context.
pub fn check_record(rec: &IdentityRecord, ctx: &SuiteContext, params: &Params) -> CheckReport {
    let start = Instant::now();
    let (status, witness) = match (rec.sides)(ctx, params) {
        Sides::Polys { lhs, rhs } => {
            if lhs == rhs {
                (CheckStatus::Pass, None)
            } else {
                (
                    CheckStatus::Fail,
                    Some(Witness {
                        lhs: lhs.to_string(),
                        rhs: rhs.to_string(),
                        at: None,
                    }),
                )
            }
        }
        Sides::Points { pairs } => {
            match pairs.iter().find(|p| p.lhs != p.rhs) {
                Some(bad) => (
                    CheckStatus::Fail,
                    Some(Witness {
                        lhs: bad.lhs.to_string(),
                        rhs: bad.rhs.to_string(),
                        at: Some(bad.at.to_string()),
                    }),
                ),
                None => (CheckStatus::Pass, None),
            }
        }
    };
    let mut param_map = BTreeMap::new();
    for p in rec.params {
        param_map.insert(p.name.to_string(), params.get(p.name) as i64);
    }
    CheckReport {
        id: rec.id.to_string(),
        params: param_map,
        status,
        witness,
        elapsed: start.elapsed(),
    }
}

fn context_rows(rec: &IdentityRecord, params: &Params) -> (usize, usize) {
    let rows = params.n + params.m + params.k + 2;
    match rec.weights {
        WeightsKind::Symbolic => (rows, 2),
        WeightsKind::Numeric => (2, rows),
    }
}

/// Check a single identity at explicit bindings. Bindings must name exactly
/// the record's parameters, each within its checkable range.
pub fn check(id: &str, bindings: &BTreeMap<String, i64>) -> Result<CheckReport> {
    let rec = registry().get(id)?;
    let mut params = Params::default();
    for p in rec.params {
        let v = *bindings
            .get(p.name)
            .ok_or_else(|| Error::MissingParameter(p.name.to_string()))?;
        if v < 0 || v > p.hard_max {
            return Err(Error::OutOfDomain {
                name: p.name.to_string(),
                value: v,
                max: p.hard_max,
            });
        }
        params.set(p.name, v as usize);
    }
    for name in bindings.keys() {
        if !rec.params.iter().any(|p| p.name == name) {
            return Err(Error::UnexpectedParameter(name.clone()));
        }
    }
    let (sym_rows, num_rows) = context_rows(rec, &params);
    let ctx = SuiteContext::build(sym_rows, num_rows)?;
    Ok(check_record(rec, &ctx, &params))
}

/// Grid bounds for `run_suite`: entries override a record's per-parameter
/// default (inclusive upper bound, values start at 0). A negative bound
/// empties the grid of every record declaring that parameter; an absent
/// entry keeps the default.
pub type SuiteRanges = BTreeMap<String, i64>;

/// Run every registered identity over its grid. The report order is sorted
/// by id then parameter values and is byte-stable for any worker count.
pub fn run_suite(ranges: &SuiteRanges, workers: usize) -> Result<Vec<CheckReport>> {
    let reg = registry();
    let mut tasks: Vec<(usize, Params)> = Vec::new();
    for (idx, rec) in reg.records().iter().enumerate() {
        let mut maxes = Vec::with_capacity(rec.params.len());
        let mut empty = false;
        for p in rec.params {
            let max = ranges.get(p.name).copied().unwrap_or(p.default_max);
            if max < 0 {
                empty = true;
                break;
            }
            maxes.push(max as usize);
        }
        if empty {
            continue;
        }
        let mut stack = vec![Params::default()];
        for (p, &max) in rec.params.iter().zip(&maxes) {
            let mut next = Vec::with_capacity(stack.len() * (max + 1));
            for base in &stack {
                for v in 0..=max {
                    let mut b = *base;
                    b.set(p.name, v);
                    next.push(b);
                }
            }
            stack = next;
        }
        for params in stack {
            tasks.push((idx, params));
        }
    }
    tasks.sort_by(|a, b| {
        let ra = reg.records()[a.0].id;
        let rb = reg.records()[b.0].id;
        ra.cmp(rb).then_with(|| a.1.cmp(&b.1))
    });

    let mut sym_rows = 0usize;
    let mut num_rows = 0usize;
    for (idx, params) in &tasks {
        let (s, n) = context_rows(&reg.records()[*idx], params);
        sym_rows = sym_rows.max(s);
        num_rows = num_rows.max(n);
    }
    let ctx = SuiteContext::build(sym_rows, num_rows)?;

    let workers = workers.max(1);
    let slots: Vec<OnceLock<CheckReport>> = (0..tasks.len()).map(|_| OnceLock::new()).collect();
    let cursor = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = cursor.fetch_add(1, Ordering::Relaxed);
                if i >= tasks.len() {
                    break;
                }
                let (idx, params) = &tasks[i];
                let report = check_record(&reg.records()[*idx], &ctx, params);
                slots[i].set(report).expect("each slot written once");
            });
        }
    });
    Ok(slots
        .into_iter()
        .map(|s| s.into_inner().expect("all tasks completed"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    #[test]
    fn registry_has_every_catalogued_identity() {
        let reg = register_all().unwrap();
        assert_eq!(reg.len(), 52);
        assert!(reg.get("3.4").is_ok());
        assert!(matches!(
            reg.get("9.9"),
            Err(Error::UnknownIdentity(_))
        ));
    }

    #[test]
    fn check_examples() {
        let mut b = BTreeMap::new();
        b.insert("n".to_string(), 2);
        b.insert("m".to_string(), 1);
        b.insert("k".to_string(), 1);
        assert!(check("2.4", &b).unwrap().passed());

        let mut b = BTreeMap::new();
        b.insert("n".to_string(), 1);
        let report = check("3.4", &b).unwrap();
        assert!(report.passed());

        // binding validation
        let empty = BTreeMap::new();
        assert!(matches!(
            check("3.4", &empty),
            Err(Error::MissingParameter(_))
        ));
        let mut bad = BTreeMap::new();
        bad.insert("n".to_string(), 1);
        bad.insert("q".to_string(), 1);
        assert!(matches!(
            check("3.4", &bad),
            Err(Error::UnexpectedParameter(_))
        ));
        let mut big = BTreeMap::new();
        big.insert("n".to_string(), 10_000);
        assert!(matches!(check("3.4", &big), Err(Error::OutOfDomain { .. })));
    }

    #[test]
    fn three_four_at_one_has_unit_sides() {
        // C(1,1) D(2) 2^0 = 1 and 1^2 = 1
        let ctx = SuiteContext::build(2, 4).unwrap();
        let rec = registry().get("3.4").unwrap();
        let params = Params {
            n: 1,
            ..Params::default()
        };
        match (rec.sides)(&ctx, &params) {
            Sides::Polys { lhs, rhs } => {
                assert_eq!(lhs, Poly::one());
                assert_eq!(rhs, Poly::one());
            }
            _ => panic!("3.4 compares polynomials"),
        }
    }

    #[test]
    fn perturbed_side_fails_with_witness() {
        fn broken(ctx: &SuiteContext, p: &Params) -> Sides {
            let lhs = Poly::constant(ctx.d(p.n));
            let rhs = &lhs + &Poly::one();
            Sides::Polys { lhs, rhs }
        }
        let rec = IdentityRecord {
            id: "test.broken",
            reference: "deliberately off by one",
            params: &[Param {
                name: "n",
                default_max: 3,
                hard_max: 3,
            }],
            mode: Mode::SymbolicPoly,
            weights: WeightsKind::Numeric,
            sides: broken,
        };
        let ctx = SuiteContext::build(2, 4).unwrap();
        let report = check_record(&rec, &ctx, &Params { n: 2, ..Params::default() });
        assert!(!report.passed());
        let w = report.witness.expect("failures carry a witness");
        assert_eq!(w.lhs, "1");
        assert_eq!(w.rhs, "2");
    }

    #[test]
    fn suite_empty_ranges_give_empty_report() {
        let mut ranges = SuiteRanges::new();
        ranges.insert("n".into(), -1);
        ranges.insert("m".into(), -1);
        ranges.insert("k".into(), -1);
        assert!(run_suite(&ranges, 2).unwrap().is_empty());
    }

    #[test]
    fn suite_minimal_grid_passes() {
        let mut ranges = SuiteRanges::new();
        ranges.insert("n".into(), 0);
        ranges.insert("m".into(), 0);
        ranges.insert("k".into(), 0);
        let reports = run_suite(&ranges, 2).unwrap();
        assert_eq!(reports.len(), 52);
        for r in &reports {
            assert!(r.passed(), "{} failed at {:?}", r.id, r.params);
        }
    }

    #[test]
    fn suite_small_grid_passes_and_is_deterministic() {
        let mut ranges = SuiteRanges::new();
        ranges.insert("n".into(), 2);
        ranges.insert("m".into(), 2);
        ranges.insert("k".into(), 2);
        let one = run_suite(&ranges, 1).unwrap();
        let eight = run_suite(&ranges, 8).unwrap();
        for r in &one {
            assert!(r.passed(), "{} failed at {:?}: {:?}", r.id, r.params, r.witness);
        }
        let render = |rs: &[CheckReport]| serde_json::to_string(rs).unwrap();
        assert_eq!(render(&one), render(&eight));
    }

    #[test]
    fn lambda_degree_is_bounded_by_n() {
        use crate::ring::Var;
        let ctx = SuiteContext::build(10, 2).unwrap();
        for id in ["2.2A", "2.2B"] {
            let rec = registry().get(id).unwrap();
            for n in 0..=4usize {
                for m in 0..=4usize {
                    let params = Params { n, m, k: 0 };
                    match (rec.sides)(&ctx, &params) {
                        Sides::Polys { lhs, rhs } => {
                            assert!(lhs.degree_in(Var::Lambda) as usize <= n);
                            assert!(rhs.degree_in(Var::Lambda) as usize <= n);
                        }
                        _ => panic!("{id} compares polynomials"),
                    }
                }
            }
        }
    }

    #[test]
    fn report_json_shape_is_stable() {
        let mut b = BTreeMap::new();
        b.insert("n".to_string(), 1);
        let report = check("3.4", &b).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["id"], "3.4");
        assert_eq!(json["params"]["n"], 1);
        assert_eq!(json["status"], "pass");
        assert!(json.get("witness").is_none());
        assert!(json.get("elapsed").is_none());
    }

    #[test]
    fn charlier_points_avoid_the_pole() {
        let rec = registry().get("3.charlier1").unwrap();
        assert_eq!(rec.mode, Mode::RationalPoints);
        let ctx = SuiteContext::build(2, 10).unwrap();
        match (rec.sides)(&ctx, &Params { n: 3, m: 2, k: 0 }) {
            Sides::Points { pairs } => {
                assert_eq!(pairs.len(), 6); // y in 0..=n+2
                for p in &pairs {
                    assert_ne!(p.at, rat(-1));
                    assert_eq!(p.lhs, p.rhs);
                }
            }
            _ => panic!("charlier1 is a rational-point check"),
        }
    }
}
