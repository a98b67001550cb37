//! JSON shapes and human-readable renderings for single-instance commands.

use pathideal::betti::{depth_of, invariants_of};
use pathideal::splitting::{FhtCheck, SplitCase};
use pathideal::topology::ShellingOrder;
use pathideal::{BettiTable, FieldSpec, MonomialIdeal, PathParams, VarSet};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct ParamsJson {
    pub m: u32,
    pub l: u32,
    pub k: u32,
    pub n: u32,
}

impl From<&PathParams> for ParamsJson {
    fn from(p: &PathParams) -> Self {
        ParamsJson { m: p.m(), l: p.l(), k: p.k(), n: p.n() }
    }
}

#[derive(Debug, Serialize)]
pub struct GenJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamsJson>,
    pub ideal: String,
    pub generators: Vec<Vec<u32>>,
}

pub fn gen_json(params: Option<&PathParams>, ideal: &MonomialIdeal) -> GenJson {
    GenJson {
        params: params.map(ParamsJson::from),
        ideal: ideal.to_string(),
        generators: ideal.gens().iter().map(|g| g.vars().collect()).collect(),
    }
}

pub fn entries(table: &BettiTable) -> Vec<[u64; 3]> {
    table.iter().map(|(i, j, b)| [u64::from(i), u64::from(j), b]).collect()
}

#[derive(Debug, Serialize)]
pub struct BettiJson {
    pub ideal: String,
    pub field: String,
    pub betti: Vec<[u64; 3]>,
    pub pd: Option<u32>,
    pub reg: Option<u32>,
    #[serde(rename = "depth_I")]
    pub depth_i: Option<u32>,
    #[serde(rename = "depth_RI")]
    pub depth_ri: Option<u32>,
}

pub fn betti_json(ideal: &MonomialIdeal, field: FieldSpec, table: &BettiTable) -> BettiJson {
    let inv = invariants_of(table).ok();
    let depth = depth_of(ideal, table).ok();
    BettiJson {
        ideal: ideal.to_string(),
        field: field.to_string(),
        betti: entries(table),
        pd: inv.map(|v| v.pd),
        reg: inv.map(|v| v.reg),
        depth_i: depth.map(|d| d.depth_i),
        depth_ri: depth.map(|d| d.depth_ri),
    }
}

/// Betti diagram with rows `j - i` and columns `i`, zeros shown as `.`.
pub fn betti_diagram(table: &BettiTable) -> String {
    let (Some(pd), Some(reg)) = (table.pd(), table.reg()) else { return String::from("(empty)\n") };
    let low = table.iter().map(|(i, j, _)| j - i).min().unwrap_or(0);
    let width = table.iter().map(|(_, _, b)| b.to_string().len()).max().unwrap_or(1).max(pd.to_string().len());
    let mut out = format!("{:>4}:", "");
    for i in 0..=pd {
        out.push_str(&format!(" {i:>width$}"));
    }
    out.push('\n');
    for r in low..=reg {
        out.push_str(&format!("{r:>4}:"));
        for i in 0..=pd {
            match table.get(i, i + r) {
                0 => out.push_str(&format!(" {:>width$}", ".")),
                b => out.push_str(&format!(" {b:>width$}")),
            }
        }
        out.push('\n');
    }
    out.push_str(&format!("total: {}\n", table.total()));
    out
}

#[derive(Debug, Serialize)]
pub struct SplitJson {
    pub ideal: String,
    #[serde(rename = "J")]
    pub j: String,
    #[serde(rename = "K")]
    pub k: String,
    #[serde(rename = "J_cap_K")]
    pub j_cap_k: String,
    pub tables: SplitTables,
    pub verdict: bool,
    pub witness: Option<[u32; 2]>,
    pub pd_max_formula: bool,
    pub reg_max_formula: bool,
}

#[derive(Debug, Serialize)]
pub struct SplitTables {
    #[serde(rename = "I")]
    pub whole: Vec<[u64; 3]>,
    #[serde(rename = "J")]
    pub j: Vec<[u64; 3]>,
    #[serde(rename = "K")]
    pub k: Vec<[u64; 3]>,
    #[serde(rename = "J_cap_K")]
    pub j_cap_k: Vec<[u64; 3]>,
}

pub fn split_json(case: &SplitCase) -> SplitJson {
    let (pd_ok, reg_ok) = case.max_formulas_hold();
    SplitJson {
        ideal: case.whole.to_string(),
        j: case.j.to_string(),
        k: case.k.to_string(),
        j_cap_k: case.j_cap_k.to_string(),
        tables: SplitTables {
            whole: entries(&case.table_whole),
            j: entries(&case.table_j),
            k: entries(&case.table_k),
            j_cap_k: entries(&case.table_j_cap_k),
        },
        verdict: case.verdict,
        witness: case.witness.map(|(i, j)| [i, j]),
        pd_max_formula: pd_ok,
        reg_max_formula: reg_ok,
    }
}

#[derive(Debug, Serialize)]
pub struct FhtJson {
    pub variable: u32,
    #[serde(rename = "J")]
    pub j: String,
    #[serde(rename = "K")]
    pub k: String,
    pub applies: bool,
    pub split: Option<SplitJson>,
}

pub fn fht_json(var: u32, check: &FhtCheck) -> FhtJson {
    FhtJson {
        variable: var,
        j: check.j.to_string(),
        k: check.k.to_string(),
        applies: check.applies,
        split: check.split.as_ref().map(split_json),
    }
}

pub fn split_text(case: &SplitCase) -> String {
    let (pd_ok, reg_ok) = case.max_formulas_hold();
    let mut out = format!("I     = {}\nJ     = {}\nK     = {}\nJ ∩ K = {}\n", case.whole, case.j, case.k, case.j_cap_k);
    for (name, t) in
        [("I", &case.table_whole), ("J", &case.table_j), ("K", &case.table_k), ("J ∩ K", &case.table_j_cap_k)]
    {
        out.push_str(&format!("betti({name}):\n{}", betti_diagram(t)));
    }
    match case.witness {
        None => out.push_str("betti splitting: yes\n"),
        Some((i, j)) => out.push_str(&format!("betti splitting: no, first failure at ({i}, {j})\n")),
    }
    out.push_str(&format!("pd max formula: {pd_ok}\nreg max formula: {reg_ok}\n"));
    out
}

#[derive(Debug, Serialize)]
pub struct CertJson {
    pub clutter: String,
    pub cover_complex: String,
    pub free_vertex_property: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub free_vertex_counterexample: Option<String>,
    /// `None` when the search was not run.
    pub shellable: Option<bool>,
    pub shelling: Option<Vec<Vec<u32>>>,
    pub seq_cm: Option<bool>,
    /// Checks not run, with the reason.
    pub skipped: Vec<String>,
}

pub fn shelling_lists(order: &ShellingOrder) -> Vec<Vec<u32>> {
    order.0.iter().map(|f: &VarSet| f.iter().collect()).collect()
}

pub fn cert_text(c: &CertJson) -> String {
    let show = |v: Option<bool>| v.map_or("not checked".to_string(), |b| b.to_string());
    let mut out = format!("clutter: {}\ncover complex: {}\n", c.clutter, c.cover_complex);
    out.push_str(&format!("free vertex property: {}\n", show(c.free_vertex_property)));
    if let Some(cx) = &c.free_vertex_counterexample {
        out.push_str(&format!("  minor without a free vertex: {cx}\n"));
    }
    match &c.shelling {
        Some(order) => {
            let faces: Vec<String> = order
                .iter()
                .map(|f| format!("{{{}}}", f.iter().map(u32::to_string).collect::<Vec<_>>().join(",")))
                .collect();
            out.push_str(&format!("shelling: {}\n", faces.join(" ")));
        }
        None if c.shellable == Some(false) => out.push_str("shelling: none exists\n"),
        None => out.push_str("shelling: not checked\n"),
    }
    out.push_str(&format!("sequentially Cohen-Macaulay: {}\n", show(c.seq_cm)));
    for s in &c.skipped {
        out.push_str(&format!("skipped: {s}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn betti_json_shape() {
        let p = PathParams::new(3, 1, 2).unwrap();
        let t = BettiTable::from_entries([(0, 3, 2), (1, 5, 1)]);
        let json = serde_json::to_string(&betti_json(&p.ideal(), FieldSpec::Gf2, &t)).unwrap();
        assert_eq!(
            json,
            r#"{"ideal":"n=5; (x1*x2*x3, x3*x4*x5)","field":"GF(2)","betti":[[0,3,2],[1,5,1]],"pd":1,"reg":4,"depth_I":4,"depth_RI":3}"#
        );
        let params = serde_json::to_string(&ParamsJson::from(&p)).unwrap();
        assert_eq!(params, r#"{"m":3,"l":1,"k":2,"n":5}"#);
    }

    #[test]
    fn diagram() {
        let t = BettiTable::from_entries([(0, 2, 3), (1, 3, 2)]);
        assert_eq!(betti_diagram(&t), "    : 0 1\n   2: 3 2\ntotal: 5\n");
        let t = BettiTable::from_entries([(0, 3, 2), (1, 5, 1)]);
        assert_eq!(betti_diagram(&t), "    : 0 1\n   3: 2 .\n   4: . 1\ntotal: 3\n");
    }
}
