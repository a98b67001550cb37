use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use pathideal::betti::betti;
use pathideal::path::{classify, formula_jm};
use pathideal::splitting::{fht_condition_with, Engine};
use pathideal::topology::{clutter_of, cover_complex, find_shelling, free_vertex_property, is_sequentially_cm};
use pathideal::{Caps, Clutter, Error, FieldSpec, Method, MonomialIdeal, PathParams};
use pathideal_cli::format::{golden, parse_clutter, parse_field, parse_ideal, parse_range};
use pathideal_cli::report::{self, CertJson};
use pathideal_cli::sweep::{self, Family, SweepConfig};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "pathideal",
    version,
    about = "Exact Betti tables and closed-form checks for path ideals of line graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV where the command supports it.
    #[arg(long, global = true)]
    csv: bool,
    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Worker threads for sweeps.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Print a path ideal.
    Gen(Instance),
    /// Compute one graded Betti table.
    Betti {
        #[command(flatten)]
        instance: Instance,
        #[command(flatten)]
        engine: EngineArgs,
        /// Emit `i j beta` lines.
        #[arg(long)]
        golden: bool,
    },
    /// Evaluate the closed forms for pd, reg and depth.
    Formula(Instance),
    /// Sweep the family and compare closed forms with computed tables.
    Verify {
        #[command(flatten)]
        ranges: Ranges,
        #[command(flatten)]
        engine: EngineArgs,
        /// Sweep J_m(L_n) against its own closed forms.
        #[arg(long)]
        full_path: bool,
    },
    /// Check the splitting of an ideal at a variable.
    Split {
        #[command(flatten)]
        instance: Instance,
        #[command(flatten)]
        engine: EngineArgs,
        /// Split variable; defaults to the last one.
        #[arg(long)]
        var: Option<u32>,
        /// Explicit part `J` in ideal text form; `K` is the remaining generators.
        #[arg(long, conflicts_with = "var")]
        j: Option<String>,
    },
    /// Free vertex property, shelling and sequential Cohen-Macaulayness.
    Cert {
        #[command(flatten)]
        instance: Instance,
        /// Clutter text form `n=5; {1,2,3},{3,4,5}`.
        #[arg(long, conflicts_with_all = ["m", "l", "k", "n", "ideal"])]
        clutter: Option<String>,
        #[arg(long, default_value = "gf2", value_parser = field_arg)]
        field: FieldSpec,
    },
    /// Regularity data for the regime without a closed form.
    OpenProblem {
        #[command(flatten)]
        ranges: Ranges,
        #[command(flatten)]
        engine: EngineArgs,
    },
}

/// One ideal: `--m --l --k`, `--m --n` for the full path, or `--ideal`.
#[derive(Args, Clone)]
struct Instance {
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    l: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    /// Ideal text form `n=5; (x1*x2*x3, x3*x4*x5)`.
    #[arg(long, conflicts_with_all = ["m", "l", "k", "n"])]
    ideal: Option<String>,
}

impl Instance {
    fn params(&self) -> Result<Option<PathParams>> {
        if self.ideal.is_some() {
            return Ok(None);
        }
        let Some(m) = self.m else { bail!("give --m with --l and --k (or --n), or --ideal") };
        let params = match (self.l, self.k, self.n) {
            (Some(l), Some(k), n) => {
                let p = PathParams::new(m, l, k)?;
                if n.is_some_and(|n| n != p.n()) {
                    bail!("--n {} disagrees with n = {} for m={m},l={l},k={k}", n.unwrap_or(0), p.n());
                }
                p
            }
            (None, None, Some(n)) => PathParams::full_path(m, n)?,
            _ => bail!("give either --l and --k, or --n alone"),
        };
        Ok(Some(params))
    }

    fn ideal(&self) -> Result<(Option<PathParams>, MonomialIdeal)> {
        match &self.ideal {
            Some(text) => Ok((None, parse_ideal(text)?)),
            None => {
                let p = self.params()?.context("missing parameters")?;
                Ok((Some(p), p.ideal()))
            }
        }
    }
}

#[derive(Args, Clone)]
struct Ranges {
    /// m, or an inclusive range like 2-5 [default: 2-5 for verify,
    /// 2-<n-max> for open-problem].
    #[arg(long)]
    m: Option<String>,
    #[arg(long)]
    l: Option<String>,
    #[arg(long)]
    k: Option<String>,
    #[arg(long, default_value_t = 13)]
    n_max: u32,
    /// Record wall-clock milliseconds per instance.
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Hochster,
    Taylor,
    Auto,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Hochster => Method::Hochster,
            MethodArg::Taylor => Method::Taylor,
            MethodArg::Auto => Method::Auto,
            MethodArg::Both => Method::Both,
        }
    }
}

fn field_arg(s: &str) -> Result<FieldSpec> {
    parse_field(s)
}

#[derive(Args, Clone)]
struct EngineArgs {
    /// gf2, gf<p> for a prime p, or rat.
    #[arg(long, default_value = "gf2", value_parser = field_arg)]
    field: FieldSpec,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    /// Variable cap for Hochster's formula.
    #[arg(long, default_value_t = Caps::default().hochster_n)]
    cap_n: u32,
    /// Generator cap for the Taylor complex.
    #[arg(long, default_value_t = Caps::default().taylor_k)]
    cap_k: u32,
}

impl EngineArgs {
    fn engine(&self) -> Engine {
        Engine {
            field: self.field,
            method: self.method.into(),
            caps: Caps { hochster_n: self.cap_n, taylor_k: self.cap_k },
        }
    }
}

enum Format {
    Human,
    Json,
    Csv,
}

/// Exit status of a successful run.
enum Outcome {
    Ok,
    Mismatch,
}

struct Output {
    text: String,
    outcome: Outcome,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, outcome: Outcome::Ok }
    }

    fn checked(text: String, passed: bool) -> Self {
        Output { text, outcome: if passed { Outcome::Ok } else { Outcome::Mismatch } }
    }
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string(value)? + "\n")
}

fn no_csv(format: &Format) -> Result<()> {
    if matches!(format, Format::Csv) {
        bail!("--csv is not supported by this command");
    }
    Ok(())
}

fn sweep_config(ranges: &Ranges, engine: &EngineArgs, default_m: (u32, u32)) -> Result<SweepConfig> {
    let e = engine.engine();
    Ok(SweepConfig {
        m: ranges.m.as_deref().map(parse_range).transpose().context("--m")?.unwrap_or(default_m),
        l: ranges.l.as_deref().map(parse_range).transpose().context("--l")?,
        k: ranges.k.as_deref().map(parse_range).transpose().context("--k")?,
        n_max: ranges.n_max,
        field: e.field,
        method: e.method,
        caps: e.caps,
        timing: ranges.timing,
        ..SweepConfig::default()
    })
}

#[derive(Serialize)]
struct FormulaJson {
    m: u32,
    l: u32,
    k: u32,
    n: u32,
    regime: &'static str,
    p: Option<u32>,
    d: Option<u32>,
    s: u32,
    period: Option<u32>,
    pd: u32,
    reg: sweep::RegValue,
    #[serde(rename = "depth_I")]
    depth_i: u32,
    #[serde(rename = "depth_RI")]
    depth_ri: u32,
}

fn run(cli: &Cli) -> Result<Output> {
    let format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Human
    };
    match &cli.command {
        Command::Gen(instance) => {
            no_csv(&format)?;
            let (params, ideal) = instance.ideal()?;
            Ok(Output::ok(match format {
                Format::Json => json(&report::gen_json(params.as_ref(), &ideal))?,
                _ => format!("{ideal}\n"),
            }))
        }
        Command::Betti { instance, engine, golden: as_golden } => {
            let (_, ideal) = instance.ideal()?;
            let e = engine.engine();
            let table = match betti(&ideal, e.field, e.method, e.caps) {
                Err(Error::MethodDisagreement) => {
                    return Ok(Output::checked(format!("{ideal}: Hochster and Taylor tables disagree\n"), false));
                }
                other => other?,
            };
            Ok(Output::ok(match format {
                Format::Json => json(&report::betti_json(&ideal, e.field, &table))?,
                Format::Csv => {
                    let mut s = String::from("i,j,beta\n");
                    for (i, j, b) in table.iter() {
                        s.push_str(&format!("{i},{j},{b}\n"));
                    }
                    s
                }
                Format::Human if *as_golden => golden(&table),
                Format::Human => {
                    let b = report::betti_json(&ideal, e.field, &table);
                    let show = |v: Option<u32>| v.map_or("-".to_string(), |x| x.to_string());
                    format!(
                        "{ideal}\nfield {}\n{}pd {}  reg {}  depth(I) {}  depth(R/I) {}\n",
                        e.field,
                        report::betti_diagram(&table),
                        show(b.pd),
                        show(b.reg),
                        show(b.depth_i),
                        show(b.depth_ri)
                    )
                }
            }))
        }
        Command::Formula(instance) => {
            no_csv(&format)?;
            if instance.ideal.is_some() {
                bail!("formula needs --m with --l and --k, or --m with --n");
            }
            let p = instance.params()?.context("missing parameters")?;
            let full = instance.l.is_none();
            let f = if full { formula_jm(p.m(), p.n())? } else { p.formulas() };
            let r = classify(p.m(), p.l(), p.k());
            let data = FormulaJson {
                m: p.m(),
                l: p.l(),
                k: p.k(),
                n: p.n(),
                regime: r.branch.label(),
                p: r.p,
                d: r.d,
                s: r.s,
                period: r.period,
                pd: f.pd,
                reg: f.reg.into(),
                depth_i: f.depth_i,
                depth_ri: f.depth_ri,
            };
            Ok(Output::ok(match format {
                Format::Json => json(&data)?,
                _ => format!(
                    "{p} n={} regime {}\npd {}  reg {}  depth(I) {}  depth(R/I) {}\n",
                    p.n(),
                    data.regime,
                    data.pd,
                    data.reg,
                    data.depth_i,
                    data.depth_ri
                ),
            }))
        }
        Command::Verify { ranges, engine, full_path } => {
            let mut cfg = sweep_config(ranges, engine, (2, 5))?;
            if *full_path {
                cfg.family = Family::FullPath;
            }
            let report = sweep::run_sweep(&cfg);
            let text = match format {
                Format::Json => json(&report)?,
                Format::Csv => sweep::to_csv(&report),
                Format::Human => sweep::to_table(&report),
            };
            Ok(Output::checked(text, !report.has_mismatch()))
        }
        Command::OpenProblem { ranges, engine } => {
            let mut cfg = sweep_config(ranges, engine, (2, ranges.n_max.max(2)))?;
            cfg.branch = Some(pathideal::Branch::Residual);
            let report = sweep::run_sweep(&cfg);
            let text = match format {
                Format::Json => json(&report)?,
                Format::Csv => sweep::to_csv(&report),
                Format::Human => {
                    let mut s = format!(
                        "{:>3} {:>3} {:>3} {:>3} {:>3} {:>3} {:>3} {:>4} {:>4}\n",
                        "m", "l", "k", "n", "s", "p", "d", "pd", "reg"
                    );
                    for r in &report.records {
                        s.push_str(&format!(
                            "{:>3} {:>3} {:>3} {:>3} {:>3} {:>3} {:>3} {:>4} {:>4}\n",
                            r.m,
                            r.l,
                            r.k,
                            r.n,
                            r.s,
                            r.p.unwrap_or(0),
                            r.d.unwrap_or(0),
                            r.pd_oracle,
                            r.reg_oracle
                        ));
                    }
                    for sk in &report.skipped {
                        s.push_str(&format!("skipped m={},l={},k={}: {}\n", sk.m, sk.l, sk.k, sk.reason));
                    }
                    s
                }
            };
            Ok(Output::checked(text, !report.has_mismatch()))
        }
        Command::Split { instance, engine, var, j } => {
            no_csv(&format)?;
            let (_, ideal) = instance.ideal()?;
            if let Some(text) = j {
                let j = parse_ideal(text)?;
                let rest = ideal.gens().iter().filter(|g| !j.gens().contains(g)).copied();
                let k = MonomialIdeal::minimalize(ideal.n(), rest)?;
                let split = pathideal::splitting::is_betti_splitting_with(&ideal, &j, &k, &engine.engine())?;
                let text = match format {
                    Format::Json => json(&report::split_json(&split))?,
                    _ => report::split_text(&split),
                };
                return Ok(Output::checked(text, split.verdict));
            }
            let var = var.unwrap_or(ideal.n());
            let check = fht_condition_with(&ideal, var, &engine.engine())?;
            let split = match &check.split {
                Some(s) => s.clone(),
                None => pathideal::splitting::is_betti_splitting_with(&ideal, &check.j, &check.k, &engine.engine())?,
            };
            let passed = split.verdict;
            let text = match format {
                Format::Json => {
                    let mut j = report::fht_json(var, &check);
                    j.split = Some(report::split_json(&split));
                    json(&j)?
                }
                _ => format!(
                    "split at x{var}; J has a linear resolution: {}\n{}",
                    check.applies,
                    report::split_text(&split)
                ),
            };
            Ok(Output::checked(text, passed))
        }
        Command::Cert { instance, clutter, field } => {
            no_csv(&format)?;
            let c: Clutter = match clutter {
                Some(text) => parse_clutter(text)?,
                None => clutter_of(&instance.ideal()?.1),
            };
            let cert = certify(&c, *field);
            let chain_ok = !(cert.free_vertex_property == Some(true) && cert.shellable == Some(false))
                && !(cert.shellable == Some(true) && cert.seq_cm == Some(false));
            let text = match format {
                Format::Json => json(&cert)?,
                _ => report::cert_text(&cert),
            };
            Ok(Output::checked(text, chain_ok))
        }
    }
}

fn certify(c: &Clutter, field: FieldSpec) -> CertJson {
    let delta = cover_complex(c);
    let mut skipped = Vec::new();
    let (fvp, counterexample) = match free_vertex_property(c) {
        Ok(r) => (Some(r.holds), r.counterexample.map(|(_, minor)| minor.to_string())),
        Err(e) => {
            skipped.push(format!("free vertex property: {e}"));
            (None, None)
        }
    };
    let (shellable, shelling) = match find_shelling(&delta) {
        Ok(order) => (Some(order.is_some()), order.as_ref().map(report::shelling_lists)),
        Err(e) => {
            skipped.push(format!("shelling: {e}"));
            (None, None)
        }
    };
    let seq_cm = match is_sequentially_cm(&delta, field) {
        Ok(v) => Some(v),
        Err(e) => {
            skipped.push(format!("sequentially Cohen-Macaulay: {e}"));
            None
        }
    };
    CertJson {
        clutter: c.to_string(),
        cover_complex: delta.to_string(),
        free_vertex_property: fvp,
        free_vertex_counterexample: counterexample,
        shellable,
        shelling,
        seq_cm,
        skipped,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(output) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &output.text).with_context(|| format!("writing {}", path.display())),
                None => {
                    print!("{}", output.text);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            match output.outcome {
                Outcome::Ok => ExitCode::SUCCESS,
                Outcome::Mismatch => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
