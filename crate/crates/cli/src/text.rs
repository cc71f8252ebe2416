//! Plain-text rendering of a [`CohomologyReport`].

use std::fmt::Write;

use crate::report::{CohomologyReport, Term};

fn combo(terms: &[Term]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (k, t) in terms.iter().enumerate() {
        let (neg, abs) = match t.coeff.strip_prefix('-') {
            Some(a) => (true, a),
            None => (false, t.coeff.as_str()),
        };
        s.push_str(match (k, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        if abs != "1" {
            let _ = write!(s, "{abs}*");
        }
        s.push_str(&t.label);
    }
    s
}

fn dims(v: &[usize]) -> String {
    v.iter().map(|d| format!("{d:>4}")).collect()
}

pub fn render(r: &CohomologyReport) -> String {
    let mut out = String::new();
    let p = &r.parameters;
    let _ = writeln!(out, "{} — scenario {} (q = {})", r.command, r.scenario.name, r.scenario.q);
    let _ = writeln!(
        out,
        "weights {}..={}, index_max {}, m_max {}",
        p.weight_min, p.weight_max, p.index_max, p.m_max
    );
    if let Some(k) = &r.koszul {
        let _ = writeln!(out, "\nKoszul dual on {}: dims {:?}", k.generators.join(", "), k.dual_dims);
        for (m, b) in k.dual_basis.iter().enumerate() {
            let _ = writeln!(out, "  A^!_{m}: {}", b.join(", "));
        }
        let _ = writeln!(
            out,
            "  Koszul complex exact up to weight {}: {}",
            k.exact_weight_max,
            if k.exact { "yes" } else { "NO" }
        );
    }
    if !r.strands.is_empty() {
        let _ = writeln!(out, "\n{:>6} | {:<16}| {:<16}| invariant", "weight", "chains", "full");
        for s in &r.strands {
            let _ = writeln!(
                out,
                "{:>6} | {:<16}| {:<16}| {}",
                s.weight,
                dims(&s.chain_dims),
                dims(&s.full_dims),
                dims(&s.invariant_dims)
            );
        }
        if r.command == "compute" {
            for s in &r.strands {
                for (m, b) in s.invariant_basis.iter().enumerate() {
                    for (k, c) in b.iter().enumerate() {
                        let _ = writeln!(out, "  H^{m}_{}[{k}] = {c}", s.weight);
                    }
                }
            }
        }
    }
    for t in &r.cup_tables {
        for e in &t.entries {
            if !e.product.is_empty() {
                let _ = writeln!(out, "  {} * {} = {}", e.left, e.right, combo(&e.product));
            }
        }
    }
    for t in &r.paper_tables {
        let _ = writeln!(out, "\n{}: {} entries, {} mismatches", t.name, t.entries, t.mismatches);
        for c in &t.cells {
            let _ = writeln!(
                out,
                "  {} {:<14} * {:<14} expected {:<34} computed {}",
                if c.matches { " " } else { "!" },
                c.row,
                c.col,
                combo(&c.expected),
                combo(&c.computed)
            );
        }
    }
    if !r.identities.is_empty() {
        let held = r.identities.iter().filter(|i| i.holds).count();
        let _ = writeln!(out, "\nclass identities: {held}/{} hold", r.identities.len());
        for i in r.identities.iter().filter(|i| !i.holds) {
            let _ = writeln!(out, "  FAIL {} at i = {}, j = {}, h = {}", i.name, i.i, i.j, i.h);
        }
    }
    if let Some(v) = &r.verification {
        let _ = writeln!(out, "\nverification (seed {:#x}):", v.seed);
        for c in &v.checks {
            let _ = write!(out, "  {} {}", if c.passed { "PASS" } else { "FAIL" }, c.name);
            if let Some(d) = &c.detail {
                let _ = write!(out, " [{d}]");
            }
            out.push('\n');
        }
        let _ = writeln!(out, "{}", if v.passed { "all checks passed" } else { "SOME CHECKS FAILED" });
    }
    out
}
