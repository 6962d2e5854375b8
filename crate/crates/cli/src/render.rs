use std::fmt::Write as _;

use serde::Serialize;

use compedge::formulas::{linear_powers_predicate, symbolic_equals_ordinary_class};
use compedge::graph::io::to_graph6;
use compedge::varset::format_sets;
use compedge::verify::{Status, VerificationReport};
use compedge::{classify_big_degree, BettiTable};

#[derive(Serialize)]
pub struct BettiRow {
    pub k: u32,
    pub prime: u32,
    pub ideal: String,
    pub reg: u32,
    pub pd: usize,
    pub depth: usize,
    pub table: BettiTable,
}

pub fn betti_text(rows: &[BettiRow]) -> String {
    let mut out = String::new();
    for r in rows {
        let _ = writeln!(out, "k = {}, p = {}: {}", r.k, r.prime, r.ideal);
        out.push_str(&r.table.pretty());
        let _ = writeln!(out, "reg = {}, pd = {}, depth = {}\n", r.reg, r.pd, r.depth);
    }
    out
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".into(), T::to_string)
}

pub fn analysis_text(r: &VerificationReport) -> anyhow::Result<String> {
    let g = &r.graph;
    let s = g.component_summary();
    let mut out = String::new();
    let _ = writeln!(out, "graph   {g}  (graph6 {})", to_graph6(g));
    let _ = writeln!(out, "b = {}, b~ = {}, c = {}, isolated = {:?}", s.b, s.b_tilde, s.c,
        s.isolated.iter().map(|v| v + 1).collect::<Vec<_>>());
    let tri: Vec<String> = g
        .triangles()
        .iter()
        .map(|t| format!("{{{},{},{}}}", t[0] + 1, t[1] + 1, t[2] + 1))
        .collect();
    let _ = writeln!(out, "triangles {}", if tri.is_empty() { "none".into() } else { tri.join(" ") });
    let co: Vec<String> = g
        .complement()
        .edges()
        .iter()
        .map(|&(i, j)| format!("{{{},{}}}", i + 1, j + 1))
        .collect();
    let _ = writeln!(out, "complement edges {}", if co.is_empty() { "none".into() } else { co.join(" ") });
    let _ = writeln!(out, "I_c(G) = {}\n", r.ideal);

    if let (Some(stable), Some(bounds)) = (&r.stable_set, &r.entry_bounds) {
        let _ = writeln!(out, "Ass^inf = {}", format_sets(stable));
        let observed = r.observed_entry.clone().unwrap_or_default();
        for (f, b) in bounds {
            let seen = observed.iter().find(|(g, _)| g == f).map(|&(_, k)| k);
            let _ = writeln!(out, "  {f}: entry bound {b}, observed {}", opt(&seen));
        }
        out.push('\n');
    }

    let _ = writeln!(out, "k  Ass oracle / formula / match");
    for (k, p) in &r.per_k {
        if let Some(a) = &p.ass_oracle {
            let f = p.ass_formula.as_ref().map_or_else(|| "-".into(), format_sets);
            let _ = writeln!(out, "{k}  {} / {f} / {}", format_sets(a), opt(&p.ass_formula_match));
        }
    }
    let _ = writeln!(out, "\nk  reg oracle/formula  v oracle/formula  depth  v witness");
    for (k, p) in &r.per_k {
        let _ = writeln!(
            out,
            "{k}  {}/{}  {}/{}  {}  {}",
            opt(&p.reg_oracle),
            opt(&p.reg_formula),
            opt(&p.v_oracle),
            opt(&p.v_formula),
            opt(&p.depth_oracle),
            p.v_witness.as_deref().unwrap_or("-")
        );
    }

    let cls = classify_big_degree(&r.ideal)?;
    let _ = writeln!(out, "\nsymbolic = ordinary class: {}", symbolic_equals_ordinary_class(g)?);
    let _ = writeln!(out, "linear powers predicted: {}\n", linear_powers_predicate(&cls)?);
    for c in &r.summary {
        let tag = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
            Status::Info => "INFO",
        };
        let _ = writeln!(out, "{tag} {:<24} {}", c.check.name(), c.detail);
    }
    Ok(out)
}
