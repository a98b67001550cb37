//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. All comparisons are exact.

use std::cell::Cell;
use std::process::Command;

use pathideal::betti::{betti_hochster, betti_taylor_tor};
use pathideal::path::{formula_jm, Branch, FormulaReg};
use pathideal::splitting::{path_intersection_closed_form, path_top_split, verify_disjoint_identities, Engine};
use pathideal::topology::{
    clutter_of, cover_complex, find_shelling, free_vertex_property, is_sequentially_cm, is_valid_shelling,
    path_free_vertex_property,
};
use pathideal::{Clutter, FieldSpec, Monomial, MonomialIdeal, PathParams, VarSet};
use pathideal_cli::format::{golden, parse_golden};
use pathideal_cli::sweep::{instances, run_sweep, Family, SweepConfig};
use proptest::strategy::Strategy;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

type Criterion = (&'static str, fn() -> Verdict);

const BIN: &str = env!("CARGO_BIN_EXE_pathideal");

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(failures: &[String], summary: String) -> Verdict {
    let mut detail = summary;
    for f in failures.iter().take(5) {
        detail.push_str(&format!("\n    {f}"));
    }
    if failures.len() > 5 {
        detail.push_str(&format!("\n    ... {} more", failures.len() - 5));
    }
    Verdict { passed: failures.is_empty(), detail }
}

fn run_bin(args: &[&str]) -> (i32, String) {
    let out = Command::new(BIN).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8 output"))
}

fn general_sweep() -> SweepConfig {
    SweepConfig { m: (2, 5), n_max: 13, ..SweepConfig::default() }
}

fn full_path_sweep() -> SweepConfig {
    SweepConfig { m: (2, 4), n_max: 12, family: Family::FullPath, ..SweepConfig::default() }
}

fn closed_form_sweep() -> Verdict {
    let report = run_sweep(&general_sweep());
    let mut failures = Vec::new();
    for s in &report.skipped {
        failures.push(format!("skipped m={},l={},k={}: {}", s.m, s.l, s.k, s.reason));
    }
    for r in &report.records {
        let closed_reg = r.regime != Branch::Residual.label();
        if !r.match_pd || !r.match_depth || (closed_reg && r.match_reg != Some(true)) {
            failures.push(format!(
                "m={},l={},k={}: pd {}/{} reg {}/{} depth {}/{}",
                r.m, r.l, r.k, r.pd_formula, r.pd_oracle, r.reg_formula, r.reg_oracle, r.depth_formula, r.depth_oracle
            ));
        }
    }
    let (code, _) = run_bin(&["verify", "--m", "2-5", "--n-max", "13", "--csv"]);
    if code != 0 {
        failures.push(format!("verify exited with {code}"));
    }
    verdict(
        &failures,
        format!(
            "{} instances, {} mismatches, {} skipped",
            report.summary.instances, report.summary.mismatches, report.summary.skipped
        ),
    )
}

fn full_path_ideals() -> Verdict {
    let report = run_sweep(&full_path_sweep());
    let mut failures: Vec<String> = report
        .records
        .iter()
        .filter(|r| r.is_mismatch() || r.match_reg.is_none())
        .map(|r| {
            format!("m={},n={}: pd {}/{} reg {}/{}", r.m, r.n, r.pd_formula, r.pd_oracle, r.reg_formula, r.reg_oracle)
        })
        .collect();
    failures.extend(report.skipped.iter().map(|s| format!("skipped m={},n={}: {}", s.m, s.n, s.reason)));
    let mut specialized = 0;
    for m in 2..=4 {
        for n in m..=12 {
            let jm = formula_jm(m, n).expect("valid");
            let general = PathParams::full_path(m, n).expect("valid").formulas();
            specialized += 1;
            if jm != general || general.reg == FormulaReg::Unknown {
                failures.push(format!("m={m},n={n}: dedicated {jm:?} vs general {general:?}"));
            }
        }
    }
    verdict(
        &failures,
        format!(
            "{} instances, {} mismatches, {specialized} specializations compared",
            report.summary.instances, report.summary.mismatches
        ),
    )
}

fn oracle_agreement() -> Verdict {
    let mut params = instances(&general_sweep());
    params.extend(instances(&full_path_sweep()));
    params.sort_by_key(|p| (p.m(), p.l(), p.k()));
    params.dedup();
    params.retain(|p| p.n() <= 12 && p.k() <= 10);
    let mut failures = Vec::new();
    let mut field_differences = 0;
    for p in &params {
        let ideal = p.ideal();
        let mut per_field = Vec::new();
        for field in [FieldSpec::Gf2, FieldSpec::Rational] {
            let h = betti_hochster(&ideal, field).expect("within caps");
            let t = betti_taylor_tor(&ideal, field).expect("within caps");
            if h != t {
                failures.push(format!("{p} over {field}: hochster {:?} taylor {:?}", golden(&h), golden(&t)));
            }
            per_field.push(h);
        }
        if per_field[0] != per_field[1] {
            field_differences += 1;
        }
    }
    verdict(
        &failures,
        format!(
            "{} instances x 2 fields, {} disagreements, {field_differences} field-dependent tables",
            params.len(),
            failures.len()
        ),
    )
}

fn top_splitting() -> Verdict {
    let engine = Engine::new(FieldSpec::Gf2);
    let params: Vec<PathParams> = instances(&general_sweep()).into_iter().filter(|p| p.k() >= 2).collect();
    let mut failures = Vec::new();
    for p in &params {
        let check = match path_top_split(p, &engine) {
            Ok(c) => c,
            Err(e) => {
                failures.push(format!("{p}: {e}"));
                continue;
            }
        };
        if check.j.num_gens() != 1 || !check.applies {
            failures.push(format!("{p}: divisible part {} not principal with linear resolution", check.j));
            continue;
        }
        let Some(split) = &check.split else {
            failures.push(format!("{p}: split not computed"));
            continue;
        };
        if !split.verdict {
            failures.push(format!("{p}: identity fails at {:?}", split.witness));
        }
        if split.max_formulas_hold() != (true, true) {
            failures.push(format!("{p}: max formulas {:?}", split.max_formulas_hold()));
        }
        match path_intersection_closed_form(p) {
            Ok(form) if form == split.j_cap_k => {}
            Ok(form) => failures.push(format!("{p}: intersection {} vs closed form {form}", split.j_cap_k)),
            Err(e) => failures.push(format!("{p}: {e}")),
        }
    }
    verdict(&failures, format!("{} instances with k >= 2, {} failures", params.len(), failures.len()))
}

fn disjoint_pair() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    use proptest::prelude::*;
    (1u32..=6, 1u32..=6).prop_flat_map(|(a, b)| {
        let left = prop::collection::vec(1u32..(1 << a), 1..=4);
        let right = prop::collection::vec(1u32..(1 << b), 1..=4);
        (left, right).prop_map(move |(l, r)| {
            let n = a + b;
            let i = MonomialIdeal::minimalize(n, l.into_iter().map(|x| Monomial::new(VarSet::from_bits(x))));
            let j = MonomialIdeal::minimalize(n, r.into_iter().map(|x| Monomial::new(VarSet::from_bits(x << a))));
            (i.expect("fits"), j.expect("fits"))
        })
    })
}

fn deterministic_runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(
        Config { cases, failure_persistence: None, ..Config::default() },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    )
}

fn disjoint_identities() -> Verdict {
    let count = Cell::new(0);
    let mut runner = deterministic_runner(50);
    let result = runner.run(&disjoint_pair(), |(i, j)| {
        count.set(count.get() + 1);
        let r = verify_disjoint_identities(&i, &j, FieldSpec::Gf2).expect("disjoint supports");
        proptest::prop_assert!(r.all_ok(), "{} and {}: {:?}", i, j, r);
        Ok(())
    });
    let failures: Vec<String> = result.err().map(|e| e.to_string()).into_iter().collect();
    verdict(&failures, format!("{} random pairs", count.get()))
}

fn random_clutter() -> impl Strategy<Value = Clutter> {
    use proptest::prelude::*;
    (2u32..=6).prop_flat_map(|n| {
        prop::collection::vec(1u32..(1 << n), 1..=5)
            .prop_map(move |edges| Clutter::new(n, edges.into_iter().map(VarSet::from_bits)).expect("fits"))
    })
}

/// Free vertex property implies a shelling, which implies sequential CM.
fn chain_failure(c: &Clutter) -> Option<String> {
    let fv = free_vertex_property(c).ok()?.holds;
    let delta = cover_complex(c);
    let shelling = find_shelling(&delta).ok()?;
    if let Some(order) = &shelling {
        if !is_valid_shelling(&order.0) {
            return Some(format!("{c}: invalid shelling returned"));
        }
    }
    let scm = is_sequentially_cm(&delta, FieldSpec::Gf2).ok()?;
    if fv && shelling.is_none() {
        return Some(format!("{c}: free vertex property but no shelling"));
    }
    if shelling.is_some() && !scm {
        return Some(format!("{c}: shellable but not sequentially CM"));
    }
    None
}

fn topology_suite() -> Verdict {
    let mut failures = Vec::new();
    let all = instances(&SweepConfig { m: (2, 13), n_max: 13, ..SweepConfig::default() });
    let (mut fv_checked, mut shell_checked, mut scm_checked) = (0, 0, 0);
    for p in &all {
        let c = clutter_of(&p.ideal());
        let delta = cover_complex(&c);
        if p.n() <= 9 {
            fv_checked += 1;
            match free_vertex_property(&c) {
                Ok(r) if r.holds => {}
                Ok(r) => failures.push(format!("{p}: minor without free vertex {:?}", r.counterexample)),
                Err(e) => failures.push(format!("{p}: {e}")),
            }
            match path_free_vertex_property(p) {
                Ok(r) if r.holds => {}
                other => failures.push(format!("{p}: constructive check {other:?}")),
            }
        }
        if delta.facets().len() <= 10 {
            shell_checked += 1;
            match find_shelling(&delta) {
                Ok(Some(order)) if is_valid_shelling(&order.0) => {}
                other => failures.push(format!("{p}: shelling {other:?}")),
            }
        }
        if p.n() <= 7 {
            scm_checked += 1;
            if is_sequentially_cm(&delta, FieldSpec::Gf2) != Ok(true) {
                failures.push(format!("{p}: not sequentially CM"));
            }
        }
        if p.n() <= 9 && delta.facets().len() <= 12 {
            failures.extend(chain_failure(&c));
        }
    }
    let named: [&[&[u32]]; 4] = [
        &[&[1, 2], &[2, 3], &[1, 3]],
        &[&[1, 2], &[3, 4]],
        &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]],
        &[&[1, 2, 3], &[3, 4, 5], &[1, 5]],
    ];
    for edges in named {
        let n = edges.iter().flat_map(|e| e.iter()).copied().max().unwrap_or(1);
        let c = Clutter::new(n, edges.iter().map(|e| VarSet::from_indices(e.iter().copied()).expect("valid")))
            .expect("valid");
        failures.extend(chain_failure(&c));
    }
    let random = Cell::new(0);
    let mut runner = deterministic_runner(200);
    let result = runner.run(&random_clutter(), |c| {
        random.set(random.get() + 1);
        match chain_failure(&c) {
            None => Ok(()),
            Some(f) => Err(proptest::test_runner::TestCaseError::fail(f)),
        }
    });
    failures.extend(result.err().map(|e| e.to_string()));
    verdict(
        &failures,
        format!(
            "free vertex on {fv_checked}, shelling on {shell_checked}, sequential CM on {scm_checked} path clutters; chain on {} random and {} named clutters",
            random.get(),
            named.len()
        ),
    )
}

fn open_problem_dataset() -> Verdict {
    let (code, csv) = run_bin(&["open-problem", "--n-max", "13", "--csv"]);
    let mut failures = Vec::new();
    if code != 0 {
        failures.push(format!("open-problem exited with {code}"));
    }
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap_or_default().split(',').collect();
    let col = |name: &str| header.iter().position(|h| *h == name);
    let (Some(cm), Some(cl), Some(ck), Some(creg), Some(cregime)) =
        (col("m"), col("l"), col("k"), col("reg_oracle"), col("regime"))
    else {
        return verdict(&["missing CSV columns".to_string()], String::new());
    };
    let mut rows = std::collections::BTreeMap::new();
    for line in lines {
        let f: Vec<&str> = line.split(',').collect();
        let key: (u32, u32, u32) = (f[cm].parse().unwrap_or(0), f[cl].parse().unwrap_or(0), f[ck].parse().unwrap_or(0));
        if f[cregime] != Branch::Residual.label() {
            failures.push(format!("{key:?} is not in the residual regime"));
        }
        rows.insert(key, f[creg].parse::<u32>().ok());
    }
    let mut expected = 0;
    for m in 2..=13u32 {
        for l in 1..m {
            for k in 1.. {
                let p = PathParams::new(m, l, k).expect("valid");
                if p.n() > 13 {
                    break;
                }
                if p.regime().branch == Branch::Residual {
                    expected += 1;
                    match rows.get(&(m, l, k)) {
                        Some(Some(_)) => {}
                        _ => failures.push(format!("{p}: missing oracle reg")),
                    }
                }
            }
        }
    }
    let spot = rows.get(&(5, 3, 2)).copied().flatten();
    if spot != Some(6) {
        failures.push(format!("reg(I(5,3,2)) reported as {spot:?}, expected 6"));
    }
    let shown = spot.map_or("missing".to_string(), |v| v.to_string());
    verdict(&failures, format!("{} rows for {expected} residual instances, reg(I(5,3,2)) = {shown}", rows.len()))
}

fn golden_tables() -> Verdict {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden");
    let cases: [(&str, &[&str], &str); 2] = [
        ("i_3_1_2.txt", &["--m", "3", "--l", "1", "--k", "2"], "0 3 2\n1 5 1\n"),
        ("j_2_l_4.txt", &["--m", "2", "--n", "4"], "0 2 3\n1 3 2\n"),
    ];
    let mut failures = Vec::new();
    let mut compared = 0;
    for (file, instance, literal) in cases {
        let on_disk = std::fs::read_to_string(format!("{dir}/{file}")).unwrap_or_default();
        if on_disk != literal {
            failures.push(format!("{file} does not hold the expected table"));
        }
        for field in ["gf2", "rat"] {
            for method in ["hochster", "taylor", "both"] {
                let mut args = vec!["betti", "--golden", "--field", field, "--method", method];
                args.extend_from_slice(instance);
                let (code, out) = run_bin(&args);
                compared += 1;
                if code != 0 || out != on_disk {
                    failures.push(format!("{file} via {field}/{method}: exit {code}, got {out:?}"));
                }
            }
        }
        if parse_golden(literal).map(|t| golden(&t)).ok().as_deref() != Some(literal) {
            failures.push(format!("{file} does not round-trip"));
        }
    }
    verdict(&failures, format!("{compared} byte-exact comparisons against 2 golden files"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("closed-form sweep, 2 <= m <= 5, n <= 13", closed_form_sweep),
        ("full path ideals, 2 <= m <= 4, n <= 12", full_path_ideals),
        ("Hochster and Taylor agree over GF(2) and QQ", oracle_agreement),
        ("splitting at the last generator", top_splitting),
        ("disjoint-variable identities", disjoint_identities),
        ("topological certificates", topology_suite),
        ("open-problem dataset", open_problem_dataset),
        ("golden tables", golden_tables),
    ];
    let mut failed = 0;
    for (index, (name, check)) in criteria.iter().enumerate() {
        let v = check();
        let status = if v.passed { "PASS" } else { "FAIL" };
        println!("criterion {} [{status}] {name}: {}", index + 1, v.detail);
        if !v.passed {
            failed += 1;
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
