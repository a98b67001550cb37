//! Parameter sweeps comparing closed forms with computed Betti tables.

use std::time::Instant;

use log::warn;
use pathideal::betti::{betti, depth_of, invariants_of};
use pathideal::path::{formula_jm, Branch, FormulaReg};
use pathideal::{Caps, FieldSpec, Method, PathParams};
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::format::golden;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `I(m,l,k)` over all admissible `l` and `k`.
    General,
    /// `J_m(L_n)`, checked against the dedicated closed forms.
    FullPath,
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub m: (u32, u32),
    pub l: Option<(u32, u32)>,
    pub k: Option<(u32, u32)>,
    pub n_max: u32,
    pub field: FieldSpec,
    pub method: Method,
    pub caps: Caps,
    pub family: Family,
    /// Keep only instances in this branch.
    pub branch: Option<Branch>,
    /// Record wall-clock time; off by default so reports are reproducible.
    pub timing: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            m: (2, 5),
            l: None,
            k: None,
            n_max: 13,
            field: FieldSpec::Gf2,
            method: Method::Auto,
            caps: Caps::default(),
            family: Family::General,
            branch: None,
            timing: false,
        }
    }
}

/// Serializes as a number, or the string `UNKNOWN`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum RegValue {
    Value(u32),
    Unknown(&'static str),
}

impl From<FormulaReg> for RegValue {
    fn from(r: FormulaReg) -> Self {
        match r {
            FormulaReg::Value(v) => RegValue::Value(v),
            FormulaReg::Unknown => RegValue::Unknown("UNKNOWN"),
        }
    }
}

impl std::fmt::Display for RegValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RegValue::Value(v) => write!(f, "{v}"),
            RegValue::Unknown(s) => f.write_str(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRecord {
    pub m: u32,
    pub l: u32,
    pub k: u32,
    pub n: u32,
    pub regime: &'static str,
    pub p: Option<u32>,
    pub d: Option<u32>,
    pub s: u32,
    pub pd_formula: u32,
    pub pd_oracle: u32,
    pub reg_formula: RegValue,
    pub reg_oracle: u32,
    pub depth_formula: u32,
    pub depth_oracle: u32,
    pub match_pd: bool,
    /// `None` when the closed form is unknown.
    pub match_reg: Option<bool>,
    pub match_depth: bool,
    pub betti_total: u64,
    pub betti_digest: String,
    pub millis: u64,
}

impl SweepRecord {
    pub fn is_mismatch(&self) -> bool {
        !self.match_pd || self.match_reg == Some(false) || !self.match_depth
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub m: u32,
    pub l: u32,
    pub k: u32,
    pub n: u32,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub instances: usize,
    pub computed: usize,
    pub skipped: usize,
    pub mismatches: usize,
    pub pd_mismatches: usize,
    pub reg_mismatches: usize,
    pub depth_mismatches: usize,
    pub reg_unknown: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub field: String,
    pub records: Vec<SweepRecord>,
    pub skipped: Vec<Skipped>,
    pub summary: Summary,
}

impl SweepReport {
    pub fn has_mismatch(&self) -> bool {
        self.summary.mismatches > 0
    }
}

/// Instances of the sweep in `(m, l, k)` order.
pub fn instances(cfg: &SweepConfig) -> Vec<PathParams> {
    let mut out = Vec::new();
    for m in cfg.m.0.max(2)..=cfg.m.1 {
        let (l_lo, l_hi) = match cfg.family {
            Family::FullPath => (m - 1, m - 1),
            Family::General => cfg.l.unwrap_or((1, u32::MAX)),
        };
        for l in l_lo.max(1)..=l_hi.min(m - 1) {
            let (k_lo, k_hi) = cfg.k.unwrap_or((1, u32::MAX));
            for k in k_lo.max(1)..=k_hi {
                let Ok(p) = PathParams::new(m, l, k) else { break };
                if p.n() > cfg.n_max {
                    break;
                }
                if cfg.branch.is_none_or(|b| b == p.regime().branch) {
                    out.push(p);
                }
            }
        }
    }
    out
}

fn digest(text: &str) -> String {
    let hash = Sha256::digest(text.as_bytes());
    hash.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

/// Computes one instance; `Err` carries the reason it was skipped.
pub fn run_instance(p: &PathParams, cfg: &SweepConfig) -> Result<SweepRecord, String> {
    let start = Instant::now();
    let ideal = p.ideal();
    let table = betti(&ideal, cfg.field, cfg.method, cfg.caps).map_err(|e| e.to_string())?;
    let inv = invariants_of(&table).map_err(|e| e.to_string())?;
    let depth = depth_of(&ideal, &table).map_err(|e| e.to_string())?;
    let regime = p.regime();
    let formulas = match cfg.family {
        Family::General => p.formulas(),
        Family::FullPath => formula_jm(p.m(), p.n()).map_err(|e| e.to_string())?,
    };
    let reg_formula = formulas.reg;
    let millis = if cfg.timing { start.elapsed().as_millis() as u64 } else { 0 };
    Ok(SweepRecord {
        m: p.m(),
        l: p.l(),
        k: p.k(),
        n: p.n(),
        regime: regime.branch.label(),
        p: regime.p,
        d: regime.d,
        s: regime.s,
        pd_formula: formulas.pd,
        pd_oracle: inv.pd,
        reg_formula: reg_formula.into(),
        reg_oracle: inv.reg,
        depth_formula: formulas.depth_i,
        depth_oracle: depth.depth_i,
        match_pd: formulas.pd == inv.pd,
        match_reg: reg_formula.value().map(|v| v == inv.reg),
        match_depth: formulas.depth_i == depth.depth_i,
        betti_total: table.total(),
        betti_digest: digest(&golden(&table)),
        millis,
    })
}

/// Runs every instance on the current rayon pool. Output order is the
/// instance order regardless of scheduling.
pub fn run_sweep(cfg: &SweepConfig) -> SweepReport {
    let params = instances(cfg);
    let results: Vec<(PathParams, Result<SweepRecord, String>)> =
        params.par_iter().map(|p| (*p, run_instance(p, cfg))).collect();
    let mut records = Vec::new();
    let mut skipped = Vec::new();
    for (p, r) in results {
        match r {
            Ok(rec) => records.push(rec),
            Err(reason) => {
                warn!("skipping {p}: {reason}");
                skipped.push(Skipped { m: p.m(), l: p.l(), k: p.k(), n: p.n(), reason });
            }
        }
    }
    let summary = Summary {
        instances: params.len(),
        computed: records.len(),
        skipped: skipped.len(),
        mismatches: records.iter().filter(|r| r.is_mismatch()).count(),
        pd_mismatches: records.iter().filter(|r| !r.match_pd).count(),
        reg_mismatches: records.iter().filter(|r| r.match_reg == Some(false)).count(),
        depth_mismatches: records.iter().filter(|r| !r.match_depth).count(),
        reg_unknown: records.iter().filter(|r| r.match_reg.is_none()).count(),
    };
    SweepReport { field: cfg.field.to_string(), records, skipped, summary }
}

pub const CSV_HEADER: &str = "m,l,k,n,regime,p,d,s,pd_formula,pd_oracle,reg_formula,reg_oracle,\
depth_formula,depth_oracle,match_pd,match_reg,match_depth,millis";

fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(String::new, |x| x.to_string())
}

pub fn to_csv(report: &SweepReport) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in &report.records {
        let match_reg = r.match_reg.map_or("na".to_string(), |b| b.to_string());
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            r.m,
            r.l,
            r.k,
            r.n,
            r.regime,
            opt(r.p),
            opt(r.d),
            r.s,
            r.pd_formula,
            r.pd_oracle,
            r.reg_formula,
            r.reg_oracle,
            r.depth_formula,
            r.depth_oracle,
            r.match_pd,
            match_reg,
            r.match_depth,
            r.millis
        ));
    }
    out
}

pub fn to_table(report: &SweepReport) -> String {
    let mut out = format!(
        "{:>3} {:>3} {:>3} {:>3} {:<6} {:>9} {:>11} {:>11} {:<5}\n",
        "m", "l", "k", "n", "regime", "pd f/o", "reg f/o", "depth f/o", "ok"
    );
    for r in &report.records {
        let ok = if r.is_mismatch() { "FAIL" } else { "ok" };
        out.push_str(&format!(
            "{:>3} {:>3} {:>3} {:>3} {:<6} {:>9} {:>11} {:>11} {:<5}\n",
            r.m,
            r.l,
            r.k,
            r.n,
            r.regime,
            format!("{}/{}", r.pd_formula, r.pd_oracle),
            format!("{}/{}", r.reg_formula, r.reg_oracle),
            format!("{}/{}", r.depth_formula, r.depth_oracle),
            ok
        ));
    }
    for s in &report.skipped {
        out.push_str(&format!("skipped m={},l={},k={} (n={}): {}\n", s.m, s.l, s.k, s.n, s.reason));
    }
    let s = &report.summary;
    out.push_str(&format!(
        "field {}: {} instances, {} computed, {} skipped, {} mismatches (pd {}, reg {}, depth {}), {} reg unknown\n",
        report.field,
        s.instances,
        s.computed,
        s.skipped,
        s.mismatches,
        s.pd_mismatches,
        s.reg_mismatches,
        s.depth_mismatches,
        s.reg_unknown
    ));
    out
}
