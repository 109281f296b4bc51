//! Closed forms against brute-force measurement.
//!
//! Every run in a suite is generated, measured and compared with the oracles.
//! Mandatory rows decide the overall verdict; recorded rows (formulas known to
//! be printed inconsistently) and informational rows (finite-horizon trends)
//! never do.

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use crate::cliques::count_k_cliques;
use crate::format_rational;
use crate::generate::{generate, generate_logged, StepReport};
use crate::graph::{FrustumGraph, VertexId};
use crate::metrics::{
    all_pairs_distances, degree_at, distance_summary, global_clustering, increment_series,
    trajectory,
};
use crate::oracles::{
    binomial, clique_recurrence_check, cone_average_distance_proxy, cone_clustering_bound,
    cone_degree_closed, cone_diameter_closed, cone_edges_closed, cone_edges_printed_sum,
    cone_order_closed, cone_wiener_closed, cylinder_constant_closed, densification_diagnostic,
    HypothesisVerdict, WienerCandidate,
};
use crate::params::ModelParams;
use crate::sequence::SequenceSpec;
use crate::spectral::{mixing_all_subsets, mixing_check, spectral_report, SpectralReport, TOLERANCE};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Match,
    Mismatch,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::NotApplicable => "not-applicable",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub run: String,
    pub quantity: String,
    pub t: Option<u32>,
    pub expected: String,
    pub measured: String,
    pub verdict: Verdict,
    pub mandatory: bool,
}

/// A suite entry: the model plus how far the expensive checks go.
#[derive(Debug, Clone)]
pub struct RunSpec {
    pub label: String,
    pub params: ModelParams,
    /// Last snapshot that gets all-pairs distance checks.
    pub distance_horizon: u32,
    /// Last snapshot that gets spectral checks.
    pub spectral_horizon: u32,
}

impl RunSpec {
    pub fn new(label: impl Into<String>, params: ModelParams) -> Self {
        let horizon = params.horizon;
        RunSpec { label: label.into(), params, distance_horizon: horizon, spectral_horizon: horizon }
    }

    pub fn limits(mut self, distance_horizon: u32, spectral_horizon: u32) -> Self {
        self.distance_horizon = distance_horizon;
        self.spectral_horizon = spectral_horizon;
        self
    }
}

/// Deliberate oracle corruption, used to prove the harness can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Fault {
    #[default]
    None,
    ConeOrderOffByOne,
}

/// Snapshots up to this order get the all-subsets mixing check.
pub const SUBSET_CHECK_ORDER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateTally {
    pub candidate: WienerCandidate,
    pub matched: usize,
    pub total: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<CheckRow>,
    pub wiener: Vec<CandidateTally>,
    /// The candidate that matched every brute-force value, if any.
    pub wiener_recommended: Option<WienerCandidate>,
}

impl ValidationReport {
    pub fn mandatory_failures(&self) -> impl Iterator<Item = &CheckRow> {
        self.checks.iter().filter(|r| r.mandatory && r.verdict != Verdict::Match)
    }

    pub fn passed(&self) -> bool {
        self.mandatory_failures().next().is_none()
    }

    pub fn wiener_summary(&self) -> String {
        let tallies: Vec<String> = self
            .wiener
            .iter()
            .map(|t| format!("{} matched {}/{}", t.candidate.label(), t.matched, t.total))
            .collect();
        let chosen = self.wiener_recommended.map_or("none", WienerCandidate::label);
        format!("wiener arbitration: recommended={chosen} ({})", tallies.join(", "))
    }

    /// Fixed-order columnar text.
    pub fn to_text(&self) -> String {
        let mut out = String::from("run\tquantity\tt\texpected\tmeasured\tverdict\tmandatory\n");
        for r in &self.checks {
            let t = r.t.map_or_else(|| "-".to_string(), |t| t.to_string());
            let _ = writeln!(
                out,
                "{}\t{}\t{t}\t{}\t{}\t{}\t{}",
                r.run,
                r.quantity,
                r.expected,
                r.measured,
                r.verdict,
                if r.mandatory { "yes" } else { "no" }
            );
        }
        let _ = writeln!(out, "# {}", self.wiener_summary());
        let mandatory = self.checks.iter().filter(|r| r.mandatory).count();
        let failed = self.mandatory_failures().count();
        let _ = writeln!(
            out,
            "# result: {} ({mandatory} mandatory checks, {failed} failed)",
            if self.passed() { "PASS" } else { "FAIL" }
        );
        out
    }
}

struct Rows<'a> {
    run: &'a str,
    rows: Vec<CheckRow>,
}

impl Rows<'_> {
    fn push(&mut self, quantity: &str, t: Option<u32>, expected: String, measured: String, verdict: Verdict, mandatory: bool) {
        self.rows.push(CheckRow {
            run: self.run.to_string(),
            quantity: quantity.to_string(),
            t,
            expected,
            measured,
            verdict,
            mandatory,
        });
    }

    fn check(&mut self, quantity: &str, t: u32, expected: impl fmt::Display, measured: impl fmt::Display, ok: bool) {
        let verdict = if ok { Verdict::Match } else { Verdict::Mismatch };
        self.push(quantity, Some(t), expected.to_string(), measured.to_string(), verdict, true);
    }

    fn equal<T: PartialEq + fmt::Display>(&mut self, quantity: &str, t: u32, expected: T, measured: T) {
        let ok = expected == measured;
        self.check(quantity, t, expected, measured, ok);
    }

    fn record<T: PartialEq + fmt::Display>(&mut self, quantity: &str, t: u32, expected: T, measured: T) {
        let verdict = if expected == measured { Verdict::Match } else { Verdict::Mismatch };
        self.push(quantity, Some(t), expected.to_string(), measured.to_string(), verdict, false);
    }

    fn info(&mut self, quantity: &str, t: Option<u32>, measured: impl fmt::Display) {
        self.push(quantity, t, "-".into(), measured.to_string(), Verdict::NotApplicable, false);
    }

    fn failure(&mut self, quantity: &str, t: Option<u32>, message: impl fmt::Display) {
        self.push(quantity, t, "ok".into(), message.to_string(), Verdict::Mismatch, true);
    }
}

fn rat(p: u64, q: u64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Runs every check for one suite entry.
pub fn validate_run(spec: &RunSpec, fault: Fault) -> Vec<CheckRow> {
    let mut rows = Rows { run: &spec.label, rows: Vec::new() };
    let p = &spec.params;
    let generation = match generate_logged(p) {
        Ok(g) => g,
        Err(e) => {
            rows.failure("generate", None, e);
            return rows.rows;
        }
    };
    let graph = &generation.graph;
    let snapshots: Vec<FrustumGraph> = (0..=p.horizon)
        .map(|s| graph.snapshot_at(s).expect("s within horizon"))
        .collect();

    frustum_checks(&mut rows, p, graph, &snapshots, &generation.steps);
    if p.is_cone() {
        cone_checks(&mut rows, spec, &snapshots, fault);
    }
    if let (SequenceSpec::Constant(f), SequenceSpec::Constant(g)) = (&p.f, &p.g) {
        if *f == p.n && *g == p.n {
            cylinder_checks(&mut rows, p.n, &snapshots);
        }
    }
    spectral_checks(&mut rows, spec, &snapshots);
    rows.rows
}

fn frustum_checks(rows: &mut Rows, p: &ModelParams, graph: &FrustumGraph, snapshots: &[FrustumGraph], steps: &[StepReport]) {
    let traj = trajectory(graph);
    for s in 0..p.horizon {
        match generate(&p.with_horizon(s)) {
            Ok(direct) => rows.check("snapshot-prefix", s, "identical", if direct == snapshots[s as usize] { "identical" } else { "different" }, direct == snapshots[s as usize]),
            Err(e) => rows.failure("snapshot-prefix", Some(s), e),
        }
    }
    for step in steps {
        let t = step.t;
        let prev = &snapshots[t as usize - 1];
        let cliques = count_k_cliques(prev, step.f as usize);
        let (n_prev, e_prev) = (traj[t as usize - 1].n, traj[t as usize - 1].e);
        let (n_t, e_t) = (traj[t as usize].n, traj[t as usize].e);
        rows.equal("order-increment", t, u128::from(step.g) * cliques, u128::from(n_t - n_prev));
        let per_cap = binomial(step.f + step.g, 2) - binomial(step.f, 2);
        rows.equal("edge-increment", t, per_cap * BigUint::from(cliques), BigUint::from(e_t - e_prev));
        rows.check("cap-structure", t, "isolated cliques", cap_structure(&snapshots[t as usize], prev, t), cap_structure(&snapshots[t as usize], prev, t) == "isolated cliques");
    }
    if p.horizon >= 1 {
        match increment_series(&traj) {
            Ok(incs) => {
                for (inc, step) in incs.iter().zip(steps) {
                    let predicted = rat(step.g, 2) + rat(step.f, 1) - rat(1, 2);
                    let ok = predicted == inc.ratio;
                    rows.check("increment-ratio", inc.t, format_rational(&predicted), format_rational(&inc.ratio), ok);
                }
            }
            Err(e) => rows.failure("increment-ratio", None, e),
        }
    }
    match densification_diagnostic(graph, p) {
        Ok(diag) => {
            for s in &diag.steps {
                let n_prev = traj[s.t as usize - 1].n;
                let n_t = traj[s.t as usize].n;
                rows.check(
                    "growth-inequality",
                    s.t,
                    format!(">= {}", u128::from(n_prev) * u128::from(s.clique_min) * u128::from(s.g)),
                    u128::from(n_t - n_prev) * u128::from(s.f),
                    s.growth_inequality,
                );
                rows.info("growth-factor", Some(s.t), format_rational(&s.growth_factor));
                rows.info("density", Some(s.t), format_rational(&s.density));
                if let Some(bound) = &s.clique_bound {
                    rows.check("clique-lower-bound", s.t, format!(">= {}", bound.bound), bound.min_count, bound.holds);
                }
            }
            let verdict = |v: HypothesisVerdict| match v {
                HypothesisVerdict::Supported => "supported (finite-horizon evidence)",
                HypothesisVerdict::NotSupported => "not supported (finite-horizon evidence)",
                HypothesisVerdict::Undetermined => "undetermined",
            };
            rows.info("densification-hypothesis", None, verdict(diag.densification_hypothesis));
            rows.info("sufficient-condition", None, verdict(diag.sufficient_condition));
        }
        Err(e) => rows.failure("densification-diagnostic", None, e),
    }
    for t in 2..=p.horizon {
        match clique_recurrence_check(graph, p, t) {
            Ok(check) => rows.check(
                "clique-recurrence",
                t,
                format!("0/{} failures", check.vertices_checked),
                format!("{}/{} failures", check.failures.len(), check.vertices_checked),
                check.holds(),
            ),
            Err(e) => rows.failure("clique-recurrence", Some(t), e),
        }
    }
}

/// Parent cliques exist at `t - 1`, caps are cliques at `t`, and new vertices
/// see nothing outside their cap's closed set.
fn cap_structure(snap: &FrustumGraph, prev: &FrustumGraph, t: u32) -> String {
    let is_clique = |g: &FrustumGraph, set: &[VertexId]| {
        set.iter().enumerate().all(|(i, &a)| set[i + 1..].iter().all(|&b| g.has_edge(a, b)))
    };
    for cap in snap.caps().iter().filter(|c| c.time == t) {
        if !is_clique(prev, &cap.parent_clique) {
            return format!("cap {} parent is not a clique", cap.cap_id);
        }
        let mut closed = cap.parent_clique.clone();
        closed.extend_from_slice(&cap.new_vertices);
        if !is_clique(snap, &closed) {
            return format!("cap {} is not a clique", cap.cap_id);
        }
        closed.sort_unstable();
        for &v in &cap.new_vertices {
            if snap.neighbors(v).iter().any(|w| closed.binary_search(w).is_err()) {
                return format!("cap {} leaks at vertex {v}", cap.cap_id);
            }
        }
    }
    "isolated cliques".into()
}

fn cone_checks(rows: &mut Rows, spec: &RunSpec, snapshots: &[FrustumGraph], fault: Fault) {
    let g = &spec.params.g;
    for (t, snap) in snapshots.iter().enumerate() {
        let t = t as u32;
        match cone_order_closed(g, t) {
            Ok(mut order) => {
                if fault == Fault::ConeOrderOffByOne {
                    order += 1u32;
                }
                rows.equal("cone-order", t, order, BigUint::from(snap.order()));
            }
            Err(e) => rows.failure("cone-order", Some(t), e),
        }
        match cone_edges_closed(g, t) {
            Ok(edges) => rows.equal("cone-edges", t, edges, BigUint::from(snap.edge_count())),
            Err(e) => rows.failure("cone-edges", Some(t), e),
        }
        if t >= 1 {
            if let Ok(printed) = cone_edges_printed_sum(g, t) {
                rows.record("cone-edges-printed-sum", t, printed, BigUint::from(snap.edge_count()));
            }
            degree_check(rows, g, snap, t);
            match cone_clustering_bound(g, t) {
                Ok(bound) => {
                    let measured = global_clustering(snap);
                    let ok = measured >= bound;
                    let verdict = if ok { Verdict::Match } else { Verdict::Mismatch };
                    // the bound leans on binom(g,2) >= g^2/4, false for g = 1
                    let premise = (1..=t).all(|i| g.eval(i).is_ok_and(|gi| gi >= 2));
                    rows.push("clustering-bound", Some(t), format!(">= {}", format_rational(&bound)), format_rational(&measured), verdict, premise);
                }
                Err(e) => rows.failure("clustering-bound", Some(t), e),
            }
        }
        if t > spec.distance_horizon {
            continue;
        }
        let summary = match distance_summary(snap) {
            Ok(s) => s,
            Err(e) => {
                rows.failure("distances", Some(t), e);
                continue;
            }
        };
        if t >= 1 {
            match cone_diameter_closed(t) {
                Ok(d) => rows.equal("diameter", t, d, u64::from(summary.diameter)),
                Err(e) => rows.failure("diameter", Some(t), e),
            }
            let (checked, failures) = distance_recurrences(&snapshots[t as usize - 1], snap, t);
            rows.check("distance-recurrences", t, format!("0/{checked} failures"), format!("{failures}/{checked} failures"), failures == 0);
            if let Ok(proxy) = cone_average_distance_proxy(g, t) {
                let pairs = BigInt::from(snap.order()) * BigInt::from(snap.order() - 1) / 2;
                let avg = Rational::new(BigInt::from(summary.wiener), pairs);
                rows.info("avg-distance/proxy", Some(t), format!("{:.6}", ratio_f64(&(avg / proxy))));
            }
        }
        match cone_wiener_closed(g, t) {
            Ok(eval) => {
                let measured = BigUint::from(summary.wiener);
                for (candidate, value) in &eval.candidates {
                    let quantity = format!("wiener-{}", candidate.label());
                    if *candidate == WienerCandidate::Recurrence {
                        rows.equal(&quantity, t, value.clone(), measured.clone());
                    } else {
                        rows.record(&quantity, t, value.clone(), measured.clone());
                    }
                }
            }
            Err(e) => rows.failure("wiener", Some(t), e),
        }
    }
}

fn ratio_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

fn degree_check(rows: &mut Rows, g: &SequenceSpec, snap: &FrustumGraph, t: u32) {
    let mut checked = 0;
    let mut failures = 0;
    for meta in snap.vertices() {
        let j = meta.birth_time.max(1);
        let expected = cone_degree_closed(g, j, t).ok();
        let measured = degree_at(snap, meta.id, t).ok().map(|d| d as u64);
        checked += 1;
        if expected.is_none() || expected != measured {
            failures += 1;
        }
    }
    rows.check("degree", t, format!("0/{checked} failures"), format!("{failures}/{checked} failures"), failures == 0);
}

/// Checks the three distance recurrences between consecutive cone snapshots;
/// returns `(pairs checked, failures)`.
fn distance_recurrences(prev: &FrustumGraph, snap: &FrustumGraph, t: u32) -> (u64, u64) {
    let before = all_pairs_distances(prev);
    let after = all_pairs_distances(snap);
    let mut cap_of: HashMap<VertexId, &[VertexId]> = HashMap::new();
    for cap in snap.caps().iter().filter(|c| c.time == t) {
        cap_of.insert(cap.parent_clique[0], &cap.new_vertices);
    }
    let (mut checked, mut failures) = (0u64, 0u64);
    let mut expect = |got: Option<u32>, want: Option<u32>| {
        checked += 1;
        if got != want {
            failures += 1;
        }
    };
    let old = prev.order() as VertexId;
    for x in 0..old {
        let empty: &[VertexId] = &[];
        let cap_x = cap_of.get(&x).copied().unwrap_or(empty);
        for y in 0..old {
            if x == y {
                continue;
            }
            let d = before[x as usize].get(y);
            expect(after[x as usize].get(y), d);
            let cap_y = cap_of.get(&y).copied().unwrap_or(empty);
            for &y2 in cap_y {
                expect(after[x as usize].get(y2), d.map(|d| d + 1));
                for &x2 in cap_x {
                    expect(after[x2 as usize].get(y2), d.map(|d| d + 2));
                }
            }
        }
    }
    (checked, failures)
}

fn cylinder_checks(rows: &mut Rows, n: u64, snapshots: &[FrustumGraph]) {
    let mut previous_density: Option<Rational> = None;
    for (t, snap) in snapshots.iter().enumerate() {
        let t = t as u32;
        let closed = match cylinder_constant_closed(n, t) {
            Ok(c) => c,
            Err(e) => {
                rows.failure("cylinder", Some(t), e);
                return;
            }
        };
        rows.equal("cylinder-cliques", t, closed.cliques, BigUint::from(count_k_cliques(snap, n as usize)));
        rows.equal("cylinder-order", t, closed.order, BigUint::from(snap.order()));
        rows.equal("cylinder-edges", t, closed.edges, BigUint::from(snap.edge_count()));
        let density = rat(snap.edge_count(), snap.order() as u64);
        if t >= 1 {
            let ok = density < closed.limit_ratio;
            rows.check("cylinder-density-below-limit", t, format!("< {}", format_rational(&closed.limit_ratio)), format_rational(&density), ok);
        }
        if t >= 2 {
            let prev = previous_density.clone().expect("set at t-1");
            let ok = density > prev;
            rows.check("cylinder-density-increasing", t, format!("> {}", format_rational(&prev)), format_rational(&density), ok);
        }
        previous_density = Some(density);
    }
}

fn spectral_checks(rows: &mut Rows, spec: &RunSpec, snapshots: &[FrustumGraph]) {
    let cone = spec.params.is_cone();
    for (t, snap) in snapshots.iter().enumerate() {
        let t = t as u32;
        if t > spec.spectral_horizon || snap.order() < 2 {
            continue;
        }
        let report = match spectral_report(snap) {
            Ok(r) => r,
            Err(e) => {
                rows.failure("spectrum", Some(t), e);
                continue;
            }
        };
        spectrum_sanity(rows, snap, &report, t);
        if snap.order() <= SUBSET_CHECK_ORDER {
            match mixing_all_subsets(snap, report.lambda_gap) {
                Ok(sweep) => rows.check(
                    "mixing-all-subsets",
                    t,
                    format!("0/{} failures", sweep.subsets_checked),
                    format!("{}/{} failures", sweep.failures.len(), sweep.subsets_checked),
                    sweep.failures.is_empty(),
                ),
                Err(e) => rows.failure("mixing-all-subsets", Some(t), e),
            }
        }
        if cone && t >= 1 {
            cone_spectral_checks(rows, spec, snapshots, &report, t);
        }
    }
}

fn spectrum_sanity(rows: &mut Rows, snap: &FrustumGraph, report: &SpectralReport, t: u32) {
    let in_range = report.eigenvalues.iter().all(|&l| (-TOLERANCE..=2.0 + TOLERANCE).contains(&l))
        && report.eigenvalues[0] <= TOLERANCE;
    let (lo, hi) = (report.eigenvalues[0], report.eigenvalues[report.eigenvalues.len() - 1]);
    rows.check("spectrum-range", t, "0 = l_0, all in [0, 2]", format!("[{lo:.3e}, {hi:.12}] residual {:.1e}", report.residual), in_range);
    let n = snap.order();
    if snap.edge_count() == (n * (n - 1) / 2) as u64 {
        let high = n as f64 / (n as f64 - 1.0);
        let ok = report.eigenvalues[0].abs() <= TOLERANCE
            && report.eigenvalues[1..].iter().all(|l| (l - high).abs() <= TOLERANCE);
        rows.check("complete-spectrum", t, format!("0, {high:.12} x{}", n - 1), format!("{:?}", report.eigenvalues), ok);
    }
}

fn cone_spectral_checks(rows: &mut Rows, spec: &RunSpec, snapshots: &[FrustumGraph], report: &SpectralReport, t: u32) {
    let snap = &snapshots[t as usize];
    let prev = &snapshots[t as usize - 1];
    let gap = report.lambda_gap;
    if t >= 2 {
        rows.check("spectral-gap", t, ">= 0.5", format!("{gap:.12}"), gap >= 0.5 - TOLERANCE);
    } else {
        rows.info("spectral-gap", Some(t), format!("{gap:.12}"));
    }
    let Ok(gt) = spec.params.g.eval(t) else { return };
    let newborn: Vec<VertexId> = snap.born_at(t).collect();
    let check = mixing_check(snap, &newborn, gap);
    let n_prev = prev.order() as u64;
    let e_prev = prev.edge_count();
    let expected = (n_prev * gt * gt, 2 * e_prev + (gt * gt + gt) * n_prev, gt * (gt - 1) * n_prev);
    let measured = (check.vol_x, check.vol_g, check.e_xx);
    rows.check(
        "volume-identities",
        t,
        format!("vol(X)={} vol(G)={} e(X,X)={}", expected.0, expected.1, expected.2),
        format!("vol(X)={} vol(G)={} e(X,X)={}", measured.0, measured.1, measured.2),
        expected == measured,
    );
    rows.check("mixing-newborn", t, format!("<= {:.12}", check.rhs), format!("{:.12}", ratio_f64(&check.lhs)), check.holds);
}

/// The default calibration suite.
pub fn calibration_suite() -> Vec<RunSpec> {
    use SequenceSpec::{Constant, Table};
    let id = SequenceSpec::identity;
    let mut suite = vec![
        RunSpec::new("cone g=(1,1)", ModelParams::cone(Table(vec![1, 1]), 2)),
        RunSpec::new("cone g=(2)", ModelParams::cone(Table(vec![2]), 1)),
        RunSpec::new("cone g=2", ModelParams::cone(Constant(2), 5)).limits(4, 4),
        RunSpec::new("cone g=t", ModelParams::cone(id(), 6)).limits(4, 4),
        RunSpec::new("cone g=(1,2,2,3)", ModelParams::cone(Table(vec![1, 2, 2, 3]), 4)),
        RunSpec::new("frus(3,2,2)", ModelParams::new(3, Constant(2), Constant(2), 3)),
        RunSpec::new("frus(2,2,1)", ModelParams::new(2, Constant(2), Constant(1), 3)),
        RunSpec::new("frus(4,3,1)", ModelParams::new(4, Constant(3), Constant(1), 3)),
        RunSpec::new(
            "frus(2,(1,2,2),(1,1,2))",
            ModelParams::new(2, Table(vec![1, 2, 2]), Table(vec![1, 1, 2]), 3),
        ),
        RunSpec::new("cylinder n=1", ModelParams::new(1, Constant(1), Constant(1), 3)),
        RunSpec::new("cylinder n=2", ModelParams::new(2, Constant(2), Constant(2), 3)),
        RunSpec::new("cylinder f=g=t", ModelParams::new(1, id(), id(), 4)),
    ];
    for n in 2..=5 {
        suite.push(RunSpec::new(format!("K{n}"), ModelParams::new(n, Constant(1), Constant(1), 0)));
    }
    suite
}

pub fn run_validation(suite: &[RunSpec], fault: Fault) -> ValidationReport {
    let checks: Vec<CheckRow> = suite.iter().flat_map(|spec| validate_run(spec, fault)).collect();
    let wiener: Vec<CandidateTally> = WienerCandidate::ALL
        .iter()
        .map(|&candidate| {
            let quantity = format!("wiener-{}", candidate.label());
            let rows: Vec<&CheckRow> = checks.iter().filter(|r| r.quantity == quantity).collect();
            CandidateTally {
                candidate,
                matched: rows.iter().filter(|r| r.verdict == Verdict::Match).count(),
                total: rows.len(),
            }
        })
        .collect();
    let wiener_recommended = wiener
        .iter()
        .find(|t| t.total > 0 && t.matched == t.total)
        .map(|t| t.candidate);
    ValidationReport { checks, wiener, wiener_recommended }
}
