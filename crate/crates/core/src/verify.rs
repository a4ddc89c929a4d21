//! Exhaustive cross-checks of every family and bijection at a fixed `n`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::bijection::{graph_of_sign_vector, pak_stanley_label, phi, phi_inverse, psi, psi_inverse, TraceEvent};
use crate::cayley::{
    all_pollak_codes, all_prufer_codes, parking_function_of_tree, pollak, pollak_inverse, prufer_decode, prufer_encode,
    tree_of_parking_function,
};
use crate::error::{Error, Result};
use crate::geometry::{
    all_sign_vectors, feasible_interior, is_relatively_bounded, is_relatively_bounded_by_probe, par_enumerate_regions,
    sign_vector_of_point, system_of_sign_vector, RegionSignVector, Sign,
};
use crate::mixed::{check_source_sink, in_degrees_oriented, par_enumerate_parking_graphs};
use crate::pf::{count_parking_functions, par_enumerate_parking_functions, ParkingFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Counts,
    Roundtrip,
    Lemmas,
    Oracle,
    PakStanley,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "counts" => Suite::Counts,
            "roundtrip" => Suite::Roundtrip,
            "lemmas" => Suite::Lemmas,
            "oracle" => Suite::Oracle,
            "pakstanley" => Suite::PakStanley,
            other => return Err(Error::Malformed(format!("unknown suite {other:?}"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}: {}", self.name, self.detail)
    }
}

/// `(n-1)^(n-1)` with `0^0 = 1`.
pub fn count_bounded_regions(n: usize) -> BigUint {
    assert!(n >= 1);
    BigUint::from(n - 1).pow((n - 1) as u32)
}

pub fn run_suite(suite: Suite, n: usize, jobs: usize) -> Result<Vec<CheckResult>> {
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    let mut ctx = Context::new(n, jobs);
    let mut out = Vec::new();
    let wants = |s: Suite| suite == Suite::All || suite == s;
    if wants(Suite::Counts) {
        out.extend(counts(&mut ctx)?);
    }
    if wants(Suite::Roundtrip) {
        out.extend(roundtrips(&mut ctx)?);
    }
    if wants(Suite::Lemmas) {
        out.extend(lemmas(&mut ctx)?);
    }
    if wants(Suite::Oracle) {
        out.extend(oracle(&mut ctx)?);
    }
    if wants(Suite::PakStanley) {
        out.extend(pak_stanley(&mut ctx)?);
    }
    Ok(out)
}

type Region = (RegionSignVector, crate::geometry::Witness<crate::Rational>);

/// Lazily enumerated families shared between suites.
struct Context {
    n: usize,
    jobs: usize,
    pfs: Option<Vec<ParkingFunction>>,
    graphs: Option<Vec<crate::mixed::ParkingGraph>>,
    regions: Option<Vec<Region>>,
}

impl Context {
    fn new(n: usize, jobs: usize) -> Self {
        Self {
            n,
            jobs,
            pfs: None,
            graphs: None,
            regions: None,
        }
    }

    fn pfs(&mut self) -> Result<&[ParkingFunction]> {
        if self.pfs.is_none() {
            self.pfs = Some(par_enumerate_parking_functions(self.n, self.jobs)?);
        }
        Ok(self.pfs.as_deref().unwrap())
    }

    fn graphs(&mut self) -> Result<&[crate::mixed::ParkingGraph]> {
        if self.graphs.is_none() {
            self.graphs = Some(par_enumerate_parking_graphs(self.n, self.jobs)?);
        }
        Ok(self.graphs.as_deref().unwrap())
    }

    fn regions(&mut self) -> Result<&[Region]> {
        if self.regions.is_none() {
            self.regions = Some(par_enumerate_regions(self.n, self.jobs)?);
        }
        Ok(self.regions.as_deref().unwrap())
    }
}

fn count_check(name: &str, found: usize, expected: &BigUint) -> CheckResult {
    let pass = BigUint::from(found) == *expected;
    CheckResult::new(name, pass, format!("{name}={found} expected {expected}"))
}

fn counts(ctx: &mut Context) -> Result<Vec<CheckResult>> {
    let n = ctx.n;
    let expected = count_parking_functions(n);
    let mut out = vec![
        count_check("pf", ctx.pfs()?.len(), &expected),
        count_check("graphs", ctx.graphs()?.len(), &expected),
        count_check("regions", ctx.regions()?.len(), &expected),
    ];
    let mut bounded = 0;
    for (sv, _) in ctx.regions()? {
        if is_relatively_bounded(sv)? {
            bounded += 1;
        }
    }
    out.push(count_check("bounded", bounded, &count_bounded_regions(n)));
    let trees: BTreeSet<_> = all_prufer_codes(n + 1).map(|c| prufer_decode(&c)).collect();
    out.push(count_check("trees", trees.len(), &expected));
    Ok(out)
}

fn roundtrips(ctx: &mut Context) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();

    let mut bad = 0;
    let pfs = ctx.pfs()?.to_vec();
    for x in &pfs {
        if phi(&phi_inverse(x)?.graph) != *x {
            bad += 1;
        }
    }
    out.push(CheckResult::new(
        "phi∘phi_inverse",
        bad == 0,
        format!("{} round trips, {bad} failures", pfs.len()),
    ));

    let graphs = ctx.graphs()?.to_vec();
    let (mut bad_phi, mut bad_psi) = (0, 0);
    for p in &graphs {
        if phi_inverse(&phi(p))?.graph != *p {
            bad_phi += 1;
        }
        let (sv, _) = psi(p)?;
        if psi_inverse(&sv)? != *p {
            bad_psi += 1;
        }
    }
    out.push(CheckResult::new(
        "phi_inverse∘phi",
        bad_phi == 0,
        format!("{} round trips, {bad_phi} failures", graphs.len()),
    ));
    out.push(CheckResult::new(
        "psi_inverse∘psi",
        bad_psi == 0,
        format!("{} round trips, {bad_psi} failures", graphs.len()),
    ));

    let regions = ctx.regions()?.to_vec();
    let mut bad = 0;
    for (sv, w) in &regions {
        let back = psi(&psi_inverse(sv)?)?.0;
        if back != *sv || sign_vector_of_point(w.point())? != *sv {
            bad += 1;
        }
    }
    out.push(CheckResult::new(
        "psi∘psi_inverse",
        bad == 0,
        format!("{} round trips, {bad} failures", regions.len()),
    ));

    let mut bad = 0;
    for x in &pfs {
        if pollak_inverse(&pollak(x))? != *x || parking_function_of_tree(&tree_of_parking_function(x))? != *x {
            bad += 1;
        }
    }
    out.push(CheckResult::new(
        "pollak/prufer",
        bad == 0,
        format!("{} round trips, {bad} failures", pfs.len()),
    ));
    let mut bad = 0;
    let mut codes = 0;
    for code in all_prufer_codes(ctx.n + 1) {
        codes += 1;
        if prufer_encode(&prufer_decode(&code)) != code {
            bad += 1;
        }
    }
    out.push(CheckResult::new(
        "prufer codes",
        bad == 0,
        format!("{codes} codes, {bad} failures"),
    ));
    Ok(out)
}

/// Violation counts for the four properties of the inverse algorithm.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LemmaTally {
    pub inputs: usize,
    pub priority_not_permutation: usize,
    pub feeder_order: usize,
    pub up_edge_law: usize,
    pub down_feeder_law: usize,
    pub down_feeder_nonnegative: usize,
    pub guard_activations: usize,
}

/// Runs the inverse algorithm on every parking function of length `n` and
/// checks the trace against the priority vector.
pub fn lemma_tally(pfs: &[ParkingFunction]) -> Result<LemmaTally> {
    let mut t = LemmaTally::default();
    for x in pfs {
        t.inputs += 1;
        let run = match phi_inverse(x) {
            Ok(run) => run,
            Err(Error::AlgorithmInvariant(msg)) if msg.contains("expected negative") => {
                t.down_feeder_nonnegative += 1;
                continue;
            }
            Err(Error::AlgorithmInvariant(msg)) if msg.contains("permutation") => {
                t.priority_not_permutation += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        let n = x.n();
        let s = &run.priority;
        t.guard_activations += run.trace.guard_activations;

        let mut by_priority: Vec<usize> = (1..=n).collect();
        by_priority.sort_by_key(|&i| std::cmp::Reverse(s.priority(i)));
        if run.trace.up_feeders().collect::<Vec<_>>() != by_priority {
            t.feeder_order += 1;
        }

        let up_ok = crate::pairs::pairs(n)
            .all(|(i, j)| (s.priority(i) > s.priority(j)) == (run.graph.kind(i, j) == crate::mixed::EdgeKind::Up));
        if !up_ok {
            t.up_edge_law += 1;
        }

        let down_ok = run.trace.events.iter().all(|e| match e {
            TraceEvent::Down { feeder, candidates, .. } => candidates
                .iter()
                .all(|&c| c == *feeder || s.priority(*feeder) > s.priority(c)),
            _ => true,
        });
        if !down_ok {
            t.down_feeder_law += 1;
        }
    }
    Ok(t)
}

fn lemmas(ctx: &mut Context) -> Result<Vec<CheckResult>> {
    let t = lemma_tally(ctx.pfs()?)?;
    let row =
        |name: &str, bad: usize| CheckResult::new(name, bad == 0, format!("{} inputs, {bad} violations", t.inputs));
    Ok(vec![
        row("source priority is a permutation", t.priority_not_permutation),
        row("reverse up-feeder order", t.feeder_order),
        row("up-edge law", t.up_edge_law),
        row("down-feeder law", t.down_feeder_law),
        row("down feeders negative", t.down_feeder_nonnegative),
        CheckResult::new(
            "down-step guard activations",
            true,
            format!("{} activations over {} inputs", t.guard_activations, t.inputs),
        ),
    ])
}

fn oracle(ctx: &mut Context) -> Result<Vec<CheckResult>> {
    let n = ctx.n;
    let mut disagreements = 0;
    let mut bad_certificates = 0;
    let mut total = 0;
    for sv in all_sign_vectors(n) {
        total += 1;
        let geometric = feasible_interior(&system_of_sign_vector::<crate::Rational>(&sv));
        let combinatorial = check_source_sink(&graph_of_sign_vector(&sv)).is_ok();
        if let Err(cert) = &geometric {
            if !cert.is_valid() {
                bad_certificates += 1;
            }
        }
        if geometric.is_ok() != combinatorial {
            disagreements += 1;
        }
    }
    let mut out = vec![
        CheckResult::new(
            "feasibility vs source-sink",
            disagreements == 0,
            format!("{total} sign vectors, {disagreements} disagreements"),
        ),
        CheckResult::new(
            "infeasibility certificates",
            bad_certificates == 0,
            format!("{bad_certificates} invalid certificates"),
        ),
    ];

    let regions = ctx.regions()?.to_vec();
    let mut mismatch = 0;
    for (sv, _) in &regions {
        if is_relatively_bounded(sv)? != is_relatively_bounded_by_probe(sv)? {
            mismatch += 1;
        }
    }
    out.push(CheckResult::new(
        "boundedness: strong connectivity vs probe",
        mismatch == 0,
        format!("{} regions, {mismatch} mismatches", regions.len()),
    ));

    let mut misordered = 0;
    for (sv, w) in &regions {
        let p = psi_inverse(sv)?;
        let degrees = in_degrees_oriented(&p);
        let mut by_degree: Vec<usize> = (0..n).collect();
        by_degree.sort_by_key(|&v| degrees[v]);
        let x = w.point().coords();
        if by_degree.windows(2).any(|w2| x[w2[0]] >= x[w2[1]]) {
            misordered += 1;
        }
    }
    out.push(CheckResult::new(
        "witness order follows oriented in-degrees",
        misordered == 0,
        format!("{} regions, {misordered} misordered", regions.len()),
    ));
    Ok(out)
}

fn neighbour_sign(s: Sign) -> Option<Sign> {
    match s {
        Sign::Below => Some(Sign::Between),
        Sign::Between => Some(Sign::Above),
        Sign::Above => None,
    }
}

/// Adjacent pairs of regions (one pair moved one step across a wall) whose
/// labels do not differ by a unit vector, and the number of pairs examined.
pub fn wall_crossing_failures(labels: &BTreeMap<RegionSignVector, ParkingFunction>) -> (usize, usize) {
    let (mut checked, mut failed) = (0, 0);
    for (sv, label) in labels {
        for ((j, k), &s) in sv.signs().iter() {
            let Some(next) = neighbour_sign(s) else { continue };
            let mut signs = sv.signs().clone();
            signs.set(j, k, next);
            let other = RegionSignVector::new(signs).expect("n >= 1");
            let Some(other_label) = labels.get(&other) else {
                continue;
            };
            checked += 1;
            let diffs: Vec<i64> = label
                .entries()
                .iter()
                .zip(other_label.entries())
                .map(|(&a, &b)| b as i64 - a as i64)
                .filter(|&d| d != 0)
                .collect();
            if diffs.len() != 1 || diffs[0].abs() != 1 {
                failed += 1;
            }
        }
    }
    (checked, failed)
}

fn pak_stanley(ctx: &mut Context) -> Result<Vec<CheckResult>> {
    let n = ctx.n;
    let regions = ctx.regions()?.to_vec();
    let mut labels = BTreeMap::new();
    for (sv, _) in &regions {
        labels.insert(sv.clone(), pak_stanley_label(sv)?);
    }
    let image: BTreeSet<&ParkingFunction> = labels.values().collect();
    let pfs: BTreeSet<&ParkingFunction> = ctx.pfs()?.iter().collect();
    let bijective = image.len() == regions.len() && image == pfs;
    let central = pak_stanley_label(&RegionSignVector::uniform(n, Sign::Between))?;
    let (checked, failed) = wall_crossing_failures(&labels);
    Ok(vec![
        CheckResult::new(
            "label bijection",
            bijective,
            format!(
                "{} regions onto {} distinct labels of {} parking functions",
                regions.len(),
                image.len(),
                pfs.len()
            ),
        ),
        CheckResult::new(
            "central label",
            central.entries().iter().all(|&e| e == 1),
            format!("central region labeled {central}"),
        ),
        CheckResult::new(
            "wall-crossing unit step",
            failed == 0,
            format!("{checked} adjacent pairs, {failed} failures"),
        ),
    ])
}

/// Number of Pollak codes for which exactly one first entry parks.
pub fn unique_first_entry_count(n: usize) -> (usize, usize) {
    let mut total = 0;
    let mut unique = 0;
    for code in all_pollak_codes(n) {
        total += 1;
        if pollak_inverse(&code).is_ok() {
            unique += 1;
        }
    }
    (unique, total)
}
