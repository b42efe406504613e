//! Acceptance criteria, one `criterion N: PASS|FAIL ...` line each. Runs
//! without the libtest harness so every line is printed; exits nonzero if
//! any criterion fails.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use tdc_core::explorer::{conjecture_scan, enumerate_graphs, GraphFilter, ScanPopulation};
use tdc_core::families::*;
use tdc_core::ops::{neighbourhood_corona, r_gluing};
use tdc_core::oracle::tdc_brute_force;
use tdc_core::perturbation::{DegenerateConvention, PerturbationConfig};
use tdc_core::solver::{tdc_number, tdc_number_with, SolverConfig};
use tdc_core::theorems::suite::{FLAG_COMPLEMENT_UNDEFINED, FLAG_CYCLE_STABILITY_C4};
use tdc_core::theorems::*;
use tdc_core::Graph;

fn verdict_line(n: u32, what: &str, failures: &[String]) -> bool {
    if failures.is_empty() {
        println!("criterion {n}: PASS {what}");
    } else {
        println!("criterion {n}: FAIL {what}: {}", failures.join("; "));
    }
    failures.is_empty()
}

fn tdc(g: &Graph) -> usize {
    tdc_number(g).unwrap().value
}

/// The default suite, run once and shared.
fn default_report() -> &'static TheoremReport {
    static REPORT: OnceLock<TheoremReport> = OnceLock::new();
    REPORT.get_or_init(|| run_suite(&SuiteConfig::default()))
}

fn rows<'a>(claim: &'a str) -> impl Iterator<Item = &'static ClaimVerdict> + 'a {
    default_report().rows.iter().filter(move |r| r.claim == claim)
}

fn row(claim: &str, instance: &str) -> &'static ClaimVerdict {
    rows(claim)
        .find(|r| r.instance == instance)
        .unwrap_or_else(|| panic!("no {claim} row for {instance}"))
}

fn describe(r: &ClaimVerdict) -> String {
    format!("{} {}: expected {}, computed {}", r.claim, r.instance, r.expected, r.computed)
}

fn criterion_01_path_formula() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 2..=12 {
        let got = tdc(&path(n).unwrap());
        let want = chi_dt_path_formula(n).unwrap();
        if got != want {
            failures.push(format!("P_{n}: formula {want}, solver {got}"));
        }
    }
    if start.elapsed() > Duration::from_secs(60) {
        failures.push(format!("took {:?}", start.elapsed()));
    }
    verdict_line(1, "path closed form for n = 2..12", &failures)
}

fn criterion_02_cycle_formula() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    if tdc(&cycle(3).unwrap()) != 3 {
        failures.push("C_3 != 3".into());
    }
    for n in 4..=12 {
        let got = tdc(&cycle(n).unwrap());
        let want = chi_dt_cycle_formula(n).unwrap();
        if got != want {
            failures.push(format!("C_{n}: formula {want}, solver {got}"));
        }
    }
    if start.elapsed() > Duration::from_secs(60) {
        failures.push(format!("took {:?}", start.elapsed()));
    }
    verdict_line(2, "cycle closed form for n = 4..12 and C_3 = 3", &failures)
}

fn criterion_03_oracle_equivalence() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 2..=7 {
        for g in enumerate_graphs(n, GraphFilter::CONNECTED, true).unwrap() {
            checked += 1;
            let (solver, brute) = (tdc(&g), tdc_brute_force(&g).unwrap());
            if solver != brute {
                failures.push(format!("{g:?}: solver {solver}, oracle {brute}"));
            }
        }
    }
    if checked != 995 {
        failures.push(format!("expected 995 connected classes, enumerated {checked}"));
    }
    if start.elapsed() > Duration::from_secs(600) {
        failures.push(format!("took {:?}", start.elapsed()));
    }
    verdict_line(3, &format!("solver = oracle on {checked} connected graphs, n = 2..7"), &failures)
}

fn criterion_04_henning_sandwich() -> bool {
    let all: Vec<_> = rows("henning.sandwich").collect();
    let mut failures: Vec<String> = all
        .iter()
        .filter(|r| r.verdict != Verdict::Holds)
        .map(|r| describe(r))
        .collect();
    if all.len() != 995 {
        failures.push(format!("expected 995 rows, got {}", all.len()));
    }
    verdict_line(4, &format!("gamma_t <= tdc <= gamma_t + chi on {} graphs", all.len()), &failures)
}

fn criterion_05_ncorona_bounds() -> bool {
    let mut failures = Vec::new();
    let mut checked = 0;
    for claim in ["ncorona.order_bound", "ncorona.tdc_plus_order_bound", "ncorona.tdc_sum_bound"] {
        for r in rows(claim) {
            checked += 1;
            match r.verdict {
                Verdict::Holds => {}
                // The sum bound needs tdc(G2), which K_1 lacks.
                Verdict::UndefinedInstance if claim == "ncorona.tdc_sum_bound" => {}
                _ => failures.push(describe(r)),
            }
        }
    }
    let random = rows("ncorona.order_bound").filter(|r| r.instance.starts_with("ncorona(g6:")).count();
    if random != 30 {
        failures.push(format!("expected 30 random pairs, got {random}"));
    }
    let sharp: Vec<_> = rows("ncorona.sharpness.order_bound")
        .chain(rows("ncorona.sharpness.tdc_plus_order_bound"))
        .chain(rows("ncorona.sharpness.tdc_sum_bound"))
        .collect();
    if sharp.len() != 3 {
        failures.push("(K_4, K_3) sharpness rows missing".into());
    }
    let tight: Vec<String> = sharp
        .iter()
        .map(|r| format!("{}={}", r.claim.trim_start_matches("ncorona.sharpness."), r.verdict == Verdict::Holds))
        .collect();
    verdict_line(
        5,
        &format!("corona upper bounds on {checked} rows; (K_4, K_3) tight: {}", tight.join(", ")),
        &failures,
    )
}

fn criterion_06_ncorona_equality() -> bool {
    let mut failures = Vec::new();
    let named = [
        (path(2).unwrap(), complete(1).unwrap(), 3),
        (path(2).unwrap(), path(2).unwrap(), 4),
        (path(3).unwrap(), complete(2).unwrap(), 4),
        (complete(3).unwrap(), complete(2).unwrap(), 5),
    ];
    for (g1, g2, want) in named {
        let got = tdc(&neighbourhood_corona(&g1, &g2).unwrap());
        if got != want {
            failures.push(format!("{g1:?} * {g2:?}: expected {want}, got {got}"));
        }
    }
    let eq: Vec<_> = rows("ncorona.tdc_plus_chi_equality").collect();
    for r in &eq {
        if r.verdict != Verdict::Holds {
            failures.push(format!("{} flag={:?}", describe(r), r.flag));
        }
    }
    for r in rows("ncorona.tdc_plus_chi_upper") {
        if r.verdict != Verdict::Holds {
            failures.push(describe(r));
        }
    }
    verdict_line(6, &format!("corona equality on 4 named pairs and {} suite pairs", eq.len()), &failures)
}

fn criterion_07_corollary() -> bool {
    let g = neighbourhood_corona(&friendship(2).unwrap(), &complete(2).unwrap()).unwrap();
    let cfg = SolverConfig {
        time_budget: Some(Duration::from_secs(600)),
        ..SolverConfig::default()
    };
    let mut failures = Vec::new();
    match tdc_number_with(&g, &cfg) {
        Ok(r) if r.value == 5 => {}
        Ok(r) => failures.push(format!("F_2 * K_2 = {}", r.value)),
        Err(e) => failures.push(format!("skipped: {e}")),
    }
    if g.order() != 15 {
        failures.push(format!("F_2 * K_2 has {} vertices", g.order()));
    }
    let f2c4 = row("corollary.friendship_even_cycle", "ncorona(friendship:2, cycle:4)");
    if f2c4.verdict != Verdict::Holds {
        failures.push(describe(f2c4));
    }
    verdict_line(7, "tdc(F_2 * K_2) = 5 (and F_2 * C_4 = 5)", &failures)
}

fn criterion_08_gluing() -> bool {
    let mut failures: Vec<String> = rows("gluing.lower_bound")
        .chain(rows("gluing.upper_bound"))
        .filter(|r| !matches!(r.verdict, Verdict::Holds | Verdict::UndefinedInstance))
        .map(describe)
        .collect();
    let violated = failures.len();
    let total = rows("gluing.lower_bound").count() + rows("gluing.upper_bound").count();
    failures.truncate(5);
    if violated > 5 {
        failures.push(format!("... {violated} violated rows of {total}"));
    }
    let lower = r_gluing(&complete(4).unwrap(), &complete(5).unwrap(), &[0, 1, 2, 3], &[0, 1, 2, 3]).unwrap();
    if tdc(&lower) != 5 {
        failures.push(format!("K_4 glued into K_5 gives {}", tdc(&lower)));
    }
    let upper = r_gluing(&cycle(4).unwrap(), &complete(3).unwrap(), &[0], &[0]).unwrap();
    if tdc(&upper) != 4 {
        failures.push(format!("C_4 and K_3 glued at a vertex give {}", tdc(&upper)));
    }
    verdict_line(8, &format!("gluing sandwich over {total} rows, tightness instances"), &failures)
}

fn family_rows(kind: &str, family: &str, ns: &[usize]) -> Vec<&'static ClaimVerdict> {
    ns.iter()
        .map(|&n| {
            let instance = match family {
                "balanced_complete_bipartite" => format!("complete_bipartite:{n}:{n}"),
                _ => format!("{family}:{n}"),
            };
            row(&format!("{kind}.{family}"), &instance)
        })
        .collect()
}

fn criterion_09_stability_values() -> bool {
    let mut checked = Vec::new();
    checked.extend(family_rows("stability", "path", &[4, 5, 6, 7, 8, 9]));
    checked.extend(family_rows("stability", "cycle", &[3, 5, 6, 7, 8, 9, 10, 11, 12]));
    checked.extend(family_rows("stability", "friendship", &[2, 3]));
    checked.extend(family_rows("stability", "book", &[3, 4]));
    checked.extend(family_rows("stability", "balanced_complete_bipartite", &[2, 3]));
    let mut failures: Vec<String> = checked
        .iter()
        .filter(|r| r.verdict != Verdict::Holds)
        .map(|r| describe(r))
        .collect();
    let c4 = row("stability.cycle", "cycle:4");
    if !(c4.flag.as_deref() == Some(FLAG_CYCLE_STABILITY_C4) && c4.computed == "2" && c4.expected == "1") {
        failures.push(format!("C_4 discrepancy row not reported as flagged: {c4:?}"));
    }
    verdict_line(9, &format!("{} stability values, C_4 flagged", checked.len()), &failures)
}

fn criterion_10_bondage_values() -> bool {
    let mut checked = Vec::new();
    checked.extend(family_rows("bondage", "path", &[3, 4, 5, 6, 7, 8, 9]));
    checked.extend(family_rows("bondage", "cycle", &[5, 6, 7, 8, 9, 10, 11, 12]));
    checked.extend(family_rows("bondage", "friendship", &[2, 3]));
    let failures: Vec<String> = checked
        .iter()
        .filter(|r| r.verdict != Verdict::Holds)
        .map(|r| describe(r))
        .collect();
    verdict_line(10, &format!("{} bondage values", checked.len()), &failures)
}

fn criterion_11_nordhaus_gaddum() -> bool {
    let mut failures = Vec::new();
    let mut defined = 0;
    let mut undefined = 0;
    for claim in ["nordhaus_gaddum.stability", "nordhaus_gaddum.bondage"] {
        for r in rows(claim) {
            match r.verdict {
                Verdict::Holds => defined += 1,
                Verdict::UndefinedInstance => undefined += 1,
                _ => failures.push(describe(r)),
            }
        }
    }
    let c5 = row("nordhaus_gaddum.stability_equality", "cycle:5");
    if !(c5.verdict == Verdict::Holds && c5.computed == "1 + 1") {
        failures.push(describe(c5));
    }
    let p3 = row("nordhaus_gaddum.stability_equality", "path:3");
    if !(p3.verdict == Verdict::UndefinedInstance && p3.flag.as_deref() == Some(FLAG_COMPLEMENT_UNDEFINED)) {
        failures.push(format!("P_3 not reported as undefined complement: {p3:?}"));
    }
    if undefined == 0 {
        failures.push("no undefined-complement instances counted".into());
    }
    if default_report().config.nordhaus_gaddum_max_n < 6 {
        failures.push("sweep does not reach n = 6".into());
    }
    verdict_line(
        11,
        &format!("{defined} defined rows hold, {undefined} undefined complements reported"),
        &failures,
    )
}

fn scan_json(max_n: usize) -> String {
    conjecture_scan(
        max_n,
        DegenerateConvention::default(),
        ScanPopulation::Connected,
        &PerturbationConfig::default(),
    )
    .unwrap()
    .iter()
    .map(|f| serde_json::to_string(f).unwrap() + "\n")
    .collect()
}

fn criterion_12_conjecture_scan() -> bool {
    let mut failures = Vec::new();
    let first = scan_json(6);
    let expected: usize = (2..=6)
        .map(|n| {
            enumerate_graphs(n, GraphFilter::CONNECTED, true)
                .unwrap()
                .filter(|g| g.min_degree().unwrap() <= 2)
                .count()
        })
        .sum();
    let found = first.lines().count();
    if found != expected {
        failures.push(format!("{found} findings for {expected} graphs"));
    }
    if scan_json(6) != first {
        failures.push("second run differs".into());
    }
    let counterexamples = first.matches(r#""verdict":"counterexample""#).count();
    verdict_line(
        12,
        &format!("{found} findings, {counterexamples} counterexamples, reproducible"),
        &failures,
    )
}

fn criterion_13_determinism() -> bool {
    let run = || run_suite(&SuiteConfig::default()).to_json_lines() + &scan_json(6);
    let (a, b) = (run(), run());
    let failures = if a == b {
        Vec::new()
    } else {
        vec!["reports differ between runs".to_string()]
    };
    verdict_line(13, &format!("two runs byte-identical ({} bytes)", a.len()), &failures)
}

fn main() {
    let criteria: [fn() -> bool; 13] = [
        criterion_01_path_formula,
        criterion_02_cycle_formula,
        criterion_03_oracle_equivalence,
        criterion_04_henning_sandwich,
        criterion_05_ncorona_bounds,
        criterion_06_ncorona_equality,
        criterion_07_corollary,
        criterion_08_gluing,
        criterion_09_stability_values,
        criterion_10_bondage_values,
        criterion_11_nordhaus_gaddum,
        criterion_12_conjecture_scan,
        criterion_13_determinism,
    ];
    let failed = criteria.iter().filter(|c| !c()).count();
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
