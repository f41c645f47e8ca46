//! Batch cross-check of a graph6 stream against the brute-force oracles.

use std::path::Path;
use std::time::Instant;

use bperfect::family::{family, find_forbidden_in};
use bperfect::greedy::default_order;
use bperfect::io::decode_graph6;
use bperfect::oracle::{chromatic_number, clique_number, is_b_perfect_oracle};
use bperfect::{b_greedy, clique_unchecked, clique_via_module_tree_unchecked, Graph};
use rayon::prelude::*;
use serde::Serialize;

use crate::input::{numbered_lines, read_text};
use crate::report::{millis, Report};
use crate::Failure;

#[derive(Serialize)]
struct Record {
    id: usize,
    graph6: String,
    n: usize,
    m: usize,
    b_perfect_fast: bool,
    b_perfect_oracle: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    chi: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    greedy_colors: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    omega: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    clique_structural: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    clique_module_tree: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    mismatches: Vec<String>,
    time_ms: f64,
}

#[derive(Serialize)]
struct Mismatch {
    id: usize,
    graph6: String,
    what: String,
}

#[derive(Serialize)]
struct LineError {
    id: usize,
    error: String,
}

#[derive(Serialize, Default)]
struct Summary {
    graphs: usize,
    b_perfect: usize,
    errors: Vec<LineError>,
    mismatches: Vec<Mismatch>,
}

fn check(id: usize, line: &str, max_n: usize) -> Result<Record, String> {
    let g = decode_graph6(line).map_err(|e| e.to_string())?;
    if g.order() > max_n {
        return Err(format!("{} vertices exceeds --max-n {max_n}", g.order()));
    }
    let start = Instant::now();
    let fast = find_forbidden_in(&g, &family()).is_none();
    let slow = is_b_perfect_oracle(&g).map_err(|e| e.to_string())?;
    let mut r = Record {
        id,
        graph6: line.to_string(),
        n: g.order(),
        m: g.size(),
        b_perfect_fast: fast,
        b_perfect_oracle: slow,
        chi: None,
        greedy_colors: None,
        omega: None,
        clique_structural: None,
        clique_module_tree: None,
        mismatches: Vec::new(),
        time_ms: 0.0,
    };
    if fast != slow {
        r.mismatches
            .push(format!("recognition says {fast}, oracle says {slow}"));
    }
    if slow {
        check_b_perfect(&g, &mut r)?;
    }
    r.time_ms = millis(start);
    Ok(r)
}

fn check_b_perfect(g: &Graph, r: &mut Record) -> Result<(), String> {
    let chi = chromatic_number(g).map_err(|e| e.to_string())?;
    let (c, _) = b_greedy(g, &default_order(g)).map_err(|e| e.to_string())?;
    if !c.is_b_coloring(g) {
        r.mismatches.push("b-greedy output is not a b-colouring".into());
    }
    if c.num_colors() != chi {
        r.mismatches.push(format!(
            "b-greedy used {} colours, chromatic number {chi}",
            c.num_colors()
        ));
    }
    let omega = clique_number(g).map_err(|e| e.to_string())?;
    let structural = clique_unchecked(g).map(|k| k.clique);
    let tree = clique_via_module_tree_unchecked(g).map(|k| k.clique);
    for (label, res, slot) in [
        ("structural", structural, &mut r.clique_structural),
        ("module-tree", tree, &mut r.clique_module_tree),
    ] {
        match res {
            Ok(k) if g.is_clique(&k) && k.len() == omega => *slot = Some(k.len()),
            Ok(k) => {
                *slot = Some(k.len());
                r.mismatches
                    .push(format!("{label} clique {:?}, clique number {omega}", k.to_vec()));
            }
            Err(e) => r.mismatches.push(format!("{label} clique failed: {e}")),
        }
    }
    r.chi = Some(chi);
    r.greedy_colors = Some(c.num_colors());
    r.omega = Some(omega);
    Ok(())
}

pub fn run(path: Option<&Path>, max_n: usize, json: bool) -> Result<u8, Failure> {
    let text = read_text(path)?;
    let lines: Vec<(usize, &str)> = numbered_lines(&text).collect();
    // results come back in input order whatever the scheduling
    let results: Vec<(usize, Result<Record, String>)> = lines
        .par_iter()
        .map(|&(id, line)| (id, check(id, line, max_n)))
        .collect();

    let mut summary = Summary::default();
    let mut records = Vec::new();
    for (id, res) in results {
        match res {
            Ok(r) => {
                summary.graphs += 1;
                summary.b_perfect += usize::from(r.b_perfect_oracle);
                for what in &r.mismatches {
                    summary.mismatches.push(Mismatch {
                        id,
                        graph6: r.graph6.clone(),
                        what: what.clone(),
                    });
                }
                records.push(r);
            }
            Err(error) => {
                eprintln!("line {id}: {error}");
                summary.errors.push(LineError { id, error });
            }
        }
    }
    let code = if summary.mismatches.is_empty() { 0 } else { 1 };
    if json {
        Report {
            schema: crate::report::SCHEMA,
            command: "verify",
            graphs: records,
            summary: Some(summary),
        }
        .print();
    } else {
        for m in &summary.mismatches {
            println!("mismatch at line {} ({}): {}", m.id, m.graph6, m.what);
        }
        println!(
            "{} graphs checked, {} b-perfect, {} mismatches, {} lines skipped",
            summary.graphs,
            summary.b_perfect,
            summary.mismatches.len(),
            summary.errors.len()
        );
    }
    Ok(code)
}
