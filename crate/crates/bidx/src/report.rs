//! Rendering of search results and verification reports as text, JSON and
//! CSV. All writers are deterministic: fixed field order, shortest
//! round-trip float formatting, pre-sorted lists.

use anyhow::Result;
use bidx_core::conditions::ConditionReport;
use bidx_core::theorems::{CheckStatus, TheoremReport};
use bidx_core::{Direction, ExtremalResult, IndexKind, IndexValue, TheoremId};

/// Exact integers print without a decimal point, floats with the shortest
/// representation that round-trips.
pub fn format_value(v: &IndexValue) -> String {
    match v.exact_integer {
        Some(i) => i.to_string(),
        None => v.value.to_string(),
    }
}

pub fn index_name(kind: IndexKind) -> &'static str {
    match kind {
        IndexKind::Chi => "chi",
        IndexKind::Pl => "pl",
        IndexKind::Sei => "sei",
        IndexKind::M1 => "m1",
        IndexKind::Platt => "platt",
        IndexKind::Custom => "custom",
    }
}

pub fn direction_name(d: Direction) -> &'static str {
    match d {
        Direction::Max => "max",
        Direction::Min => "min",
    }
}

pub fn theorem_name(id: TheoremId) -> &'static str {
    match id {
        TheoremId::Thm2 => "thm2",
        TheoremId::Thm4 => "thm4",
        TheoremId::Thm6 => "thm6",
        TheoremId::Lemma2Conclusion => "lemma2",
    }
}

pub fn extremal_text(r: &ExtremalResult) -> String {
    let mut out = format!(
        "n={} m={} index={} param={} direction={}\n",
        r.n,
        r.m,
        index_name(r.index),
        r.param,
        direction_name(r.direction)
    );
    out.push_str(&format!(
        "optimum: {} over {} classes\n",
        format_value(&r.optimum),
        r.total_enumerated
    ));
    for form in &r.optimizers {
        out.push_str(&format!("optimizer: {form}\n"));
    }
    out
}

pub fn extremal_csv(results: &[ExtremalResult]) -> String {
    let mut out = String::from("n,m,index,param,direction,optimum,optimizer_graph6_list\n");
    for r in results {
        let list: Vec<&str> = r.optimizers.iter().map(|c| c.0.as_str()).collect();
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.n,
            r.m,
            index_name(r.index),
            r.param,
            direction_name(r.direction),
            format_value(&r.optimum),
            list.join(";")
        ));
    }
    out
}

pub fn extremal_json(r: &ExtremalResult) -> Result<String> {
    Ok(serde_json::to_string_pretty(r)? + "\n")
}

pub fn extremal_graph6(r: &ExtremalResult) -> String {
    let mut out = String::new();
    for form in &r.optimizers {
        out.push_str(&form.0);
        out.push('\n');
    }
    out
}

fn status_name(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Pass => "PASS",
        CheckStatus::Fail => "FAIL",
        CheckStatus::Skipped => "SKIP",
    }
}

pub fn theorem_text(r: &TheoremReport) -> String {
    let mut out = String::new();
    for cell in &r.cells {
        out.push_str(&format!(
            "cell {} n={} param={}: {}\n",
            theorem_name(r.theorem),
            cell.n,
            cell.param,
            if cell.pass { "PASS" } else { "FAIL" }
        ));
        for check in &cell.checks {
            if check.status != CheckStatus::Pass {
                out.push_str(&format!(
                    "  {} {}: {}\n",
                    status_name(check.status),
                    check.name,
                    check.detail
                ));
            }
        }
    }
    for check in &r.global {
        out.push_str(&format!(
            "global {}: {}\n",
            check.name,
            status_name(check.status)
        ));
    }
    for note in &r.notes {
        out.push_str(&format!("note: {note}\n"));
    }
    out.push_str(&format!(
        "overall: {}\n",
        if r.overall { "PASS" } else { "FAIL" }
    ));
    out
}

pub fn theorem_csv(r: &TheoremReport) -> String {
    let mut out = String::from("theorem,n,param,check,status,detail\n");
    let quote = |s: &str| format!("\"{}\"", s.replace('"', "\"\""));
    for cell in &r.cells {
        for check in &cell.checks {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                theorem_name(r.theorem),
                cell.n,
                cell.param,
                quote(&check.name),
                status_name(check.status),
                quote(&check.detail)
            ));
        }
    }
    for check in &r.global {
        out.push_str(&format!(
            "{},,,{},{},{}\n",
            theorem_name(r.theorem),
            quote(&check.name),
            status_name(check.status),
            quote(&check.detail)
        ));
    }
    out
}

pub fn theorem_json(r: &TheoremReport) -> Result<String> {
    Ok(serde_json::to_string_pretty(r)? + "\n")
}

pub fn conditions_text(r: &ConditionReport) -> String {
    let mut out = format!(
        "conditions {} param={} mode={} grid={}: {} ({:?})\n",
        index_name(r.kind),
        r.param,
        direction_name(r.mode),
        r.grid_bound,
        if r.passed() { "PASS" } else { "FAIL" },
        r.strictness
    );
    if let Some(ce) = &r.counterexample {
        out.push_str(&format!(
            "  counterexample (x,c,t,y)=({},{},{},{}) delta1={} delta2={}\n",
            ce.x, ce.c, ce.t, ce.y, ce.delta1, ce.delta2
        ));
    }
    out
}
