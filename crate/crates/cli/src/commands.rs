use std::time::Instant;

use bperfect::enumerate::enumerate_graphs;
use bperfect::family::{self as forbidden, find_forbidden_in, small_boats};
use bperfect::greedy::default_order;
use bperfect::oracle::{b_chromatic_number, chromatic_number, is_b_perfect_oracle, max_clique};
use bperfect::structure::{
    extend_to_special_boat, find_small_boat, modular_decomposition, BoatPartition, NestedModule, SmallBoatSeed,
};
use bperfect::{
    b_greedy, clique_unchecked, clique_via_module_tree_unchecked, encode_graph6, find_forbidden, CliqueStep,
    EliminationTrace, Error, Graph, VertexSet,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::input::read_graphs;
use crate::report::{millis, Report, Witness};
use crate::{CliqueMethod, Failure, InputArgs};

fn input_error(e: Error) -> Failure {
    Failure::Input(e.to_string())
}

#[derive(Serialize)]
struct Recognition {
    id: usize,
    n: usize,
    m: usize,
    b_perfect: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    b_perfect_oracle: Option<bool>,
    time_ms: f64,
}

pub fn recognize(args: &InputArgs, oracle: bool, json: bool) -> Result<u8, Failure> {
    let fam = forbidden::family();
    let mut records = Vec::new();
    for input in read_graphs(args.input.as_deref(), args.format)? {
        let g = &input.graph;
        let start = Instant::now();
        let witness = find_forbidden_in(g, &fam).map(|(i, e)| Witness::new(g, i, e));
        let time_ms = millis(start);
        let b_perfect_oracle = if oracle {
            Some(is_b_perfect_oracle(g).map_err(input_error)?)
        } else {
            None
        };
        records.push(Recognition {
            id: input.id,
            n: g.order(),
            m: g.size(),
            b_perfect: witness.is_none(),
            witness,
            b_perfect_oracle,
            time_ms,
        });
    }
    let all = records.iter().all(|r| r.b_perfect);
    if json {
        Report::new("recognize", records).print();
    } else {
        for r in &records {
            let verdict = match &r.witness {
                None => "b-perfect".to_string(),
                Some(w) => format!("not b-perfect, contains {}", w.describe()),
            };
            let checked = match r.b_perfect_oracle {
                Some(true) => "; oracle: b-perfect",
                Some(false) => "; oracle: not b-perfect",
                None => "",
            };
            println!("graph {}: {verdict}{checked}", r.id);
        }
    }
    Ok(if all { 0 } else { 1 })
}

#[derive(Serialize)]
struct ColorRecord {
    id: usize,
    n: usize,
    m: usize,
    b_perfect: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Witness>,
    colors: Vec<usize>,
    num_colors: usize,
    /// One b-vertex per colour, colour 1 first.
    b_vertices: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chi: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    b: Option<usize>,
    trace: EliminationTrace,
    time_ms: f64,
}

pub fn color(
    args: &InputArgs,
    order: Option<&[usize]>,
    require_b_perfect: bool,
    oracle: bool,
    json: bool,
) -> Result<u8, Failure> {
    let mut records = Vec::new();
    for input in read_graphs(args.input.as_deref(), args.format)? {
        let g = &input.graph;
        let witness = find_forbidden(g).map(|(i, e)| Witness::new(g, i, e));
        if let Some(w) = &witness {
            if require_b_perfect {
                return Err(Failure::Guard(format!(
                    "graph {} is not b-perfect: contains {}",
                    input.id,
                    w.describe()
                )));
            }
            eprintln!(
                "warning: graph {} is not b-perfect (contains {}); the colouring may not be optimal",
                input.id,
                w.describe()
            );
        }
        let order = order.map(<[usize]>::to_vec).unwrap_or_else(|| default_order(g));
        let start = Instant::now();
        let (c, trace) = b_greedy(g, &order).map_err(input_error)?;
        let time_ms = millis(start);
        let b_vertices = c.b_vertices(g).map_err(input_error)?;
        assert!(c.is_b_coloring(g), "b-greedy output is not a b-colouring");
        let (chi, b) = if oracle {
            (
                Some(chromatic_number(g).map_err(input_error)?),
                Some(b_chromatic_number(g).map_err(input_error)?.0),
            )
        } else {
            (None, None)
        };
        records.push(ColorRecord {
            id: input.id,
            n: g.order(),
            m: g.size(),
            b_perfect: witness.is_none(),
            witness,
            colors: c.as_slice().to_vec(),
            num_colors: c.num_colors(),
            b_vertices: b_vertices
                .values()
                .map(|s| s.first().expect("every class has a b-vertex"))
                .collect(),
            chi,
            b,
            trace,
            time_ms,
        });
    }
    if json {
        Report::new("color", records).print();
    } else {
        for r in &records {
            println!("graph {}: {} colours {:?}", r.id, r.num_colors, r.colors);
            println!("  b-vertices by colour: {:?}", r.b_vertices);
            if let (Some(chi), Some(b)) = (r.chi, r.b) {
                println!("  chromatic number {chi}, b-chromatic number {b}");
            }
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct CliqueRecord {
    id: usize,
    n: usize,
    m: usize,
    method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    clique: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    size: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    trace: Vec<CliqueStep>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    time_ms: f64,
}

pub fn clique(args: &InputArgs, method: CliqueMethod, skip_check: bool, json: bool) -> Result<u8, Failure> {
    let name = match method {
        CliqueMethod::Structural => "structural",
        CliqueMethod::ModuleTree => "module-tree",
        CliqueMethod::Oracle => "oracle",
    };
    let mut records = Vec::new();
    let mut code = 0;
    for input in read_graphs(args.input.as_deref(), args.format)? {
        let g = &input.graph;
        let mut record = CliqueRecord {
            id: input.id,
            n: g.order(),
            m: g.size(),
            method: name,
            clique: None,
            size: None,
            trace: Vec::new(),
            witness: None,
            error: None,
            time_ms: 0.0,
        };
        let start = Instant::now();
        let guarded = method != CliqueMethod::Oracle && !skip_check;
        let outcome = match guarded.then(|| find_forbidden(g)).flatten() {
            Some((i, e)) => Err(Error::NotBPerfect { index: i, embedding: e }),
            None => match method {
                CliqueMethod::Structural => clique_unchecked(g).map(|r| (r.clique, r.trace)),
                CliqueMethod::ModuleTree => clique_via_module_tree_unchecked(g).map(|r| (r.clique, r.trace)),
                CliqueMethod::Oracle => max_clique(g).map(|k| (k, Vec::new())),
            },
        };
        record.time_ms = millis(start);
        match outcome {
            Ok((k, trace)) => {
                assert!(g.is_clique(&k), "reported set is not a clique");
                record.size = Some(k.len());
                record.clique = Some(k);
                record.trace = trace;
            }
            Err(Error::NotBPerfect { index, embedding }) => {
                let w = Witness::new(g, index, embedding);
                record.error = Some(format!("not b-perfect: contains {}", w.describe()));
                record.witness = Some(w);
                code = 3;
            }
            Err(e @ (Error::TooLarge { .. } | Error::BudgetExhausted(_))) => return Err(input_error(e)),
            Err(e) => {
                record.error = Some(e.to_string());
                code = 3;
            }
        }
        records.push(record);
    }
    if json {
        Report::new("clique", records).print();
    } else {
        for r in &records {
            match (&r.clique, &r.error) {
                (Some(k), _) => println!("graph {}: clique of size {} {:?}", r.id, k.len(), k.to_vec()),
                (None, Some(e)) => eprintln!("graph {}: {e}", r.id),
                (None, None) => unreachable!(),
            }
        }
    }
    Ok(code)
}

#[derive(Serialize)]
struct FamilyRecord {
    name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    alias: Option<&'static str>,
    n: usize,
    m: usize,
    graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    minimally_b_imperfect: Option<bool>,
}

// b exceeds chi and every vertex-deleted subgraph is b-perfect.
fn minimally_imperfect(g: &Graph) -> Result<bool, Failure> {
    let b = b_chromatic_number(g).map_err(input_error)?.0;
    let chi = chromatic_number(g).map_err(input_error)?;
    if b <= chi {
        return Ok(false);
    }
    for v in 0..g.order() {
        let mut keep = g.vertices();
        keep.remove(v);
        let h = g.induced_subgraph(&keep).map_err(input_error)?;
        if !is_b_perfect_oracle(&h).map_err(input_error)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn family(boats: bool, selfcheck: bool, json: bool) -> Result<u8, Failure> {
    let mut records = Vec::new();
    for p in forbidden::family() {
        let minimally_b_imperfect = if selfcheck {
            Some(minimally_imperfect(&p.graph)?)
        } else {
            None
        };
        records.push(FamilyRecord {
            name: p.name,
            alias: p.alias,
            n: p.graph.order(),
            m: p.graph.size(),
            graph6: encode_graph6(&p.graph).map_err(input_error)?,
            minimally_b_imperfect,
        });
    }
    if boats {
        for (name, g) in ["boat-q2", "boat-q3"].into_iter().zip(small_boats()) {
            records.push(FamilyRecord {
                name: name.into(),
                alias: None,
                n: g.order(),
                m: g.size(),
                graph6: encode_graph6(&g).map_err(input_error)?,
                minimally_b_imperfect: None,
            });
        }
    }
    let failed: Vec<&str> = records
        .iter()
        .filter(|r| r.minimally_b_imperfect == Some(false))
        .map(|r| r.name.as_str())
        .collect();
    if json {
        Report::new("family", records.iter().collect()).print();
    } else if selfcheck {
        for r in &records {
            match r.minimally_b_imperfect {
                Some(ok) => println!("{} {}", r.name, if ok { "ok" } else { "FAILED" }),
                None => println!("{} {}", r.name, r.graph6),
            }
        }
    } else {
        for r in &records {
            println!("{}", r.graph6);
        }
    }
    if failed.is_empty() {
        Ok(0)
    } else {
        eprintln!("not minimally b-imperfect: {}", failed.join(", "));
        Ok(1)
    }
}

pub fn enumerate(max_n: usize) -> Result<u8, Failure> {
    for g in enumerate_graphs(max_n).map_err(input_error)? {
        println!("{}", encode_graph6(&g).map_err(input_error)?);
    }
    Ok(0)
}

/// A random b-perfect graph on `n` vertices: starting from the empty or the
/// complete graph, vertex pairs are flipped in random order and each flip is
/// kept only if no forbidden subgraph appears.
fn random_b_perfect(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let fam = forbidden::family();
    let mut g = if rng.gen_bool(0.5) {
        Graph::complete(n)
    } else {
        Graph::empty(n)
    };
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let keep = rng.gen_range(0.2..1.0);
    for (u, v) in pairs {
        if !rng.gen_bool(keep) {
            continue;
        }
        let flipped = Graph::from_fn(n, |a, b| g.has_edge(a, b) != ((a, b) == (u, v)));
        if find_forbidden_in(&flipped, &fam).is_none() {
            g = flipped;
        }
    }
    g
}

pub fn sample(n: usize, count: usize, seed: u64) -> Result<u8, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        println!(
            "{}",
            encode_graph6(&random_b_perfect(&mut rng, n)).map_err(input_error)?
        );
    }
    Ok(0)
}

fn print_tree(node: &NestedModule, depth: usize) {
    let kind = serde_json::to_value(node.kind).expect("kinds serialise");
    println!(
        "{}{} {:?}",
        "  ".repeat(depth),
        kind.as_str().unwrap_or("?"),
        node.members.to_vec()
    );
    for c in &node.children {
        print_tree(c, depth + 1);
    }
}

pub fn modules(args: &InputArgs, json: bool) -> Result<u8, Failure> {
    let inputs = read_graphs(args.input.as_deref(), args.format)?;
    let trees: Vec<Option<NestedModule>> = inputs
        .iter()
        .map(|i| modular_decomposition(&i.graph).nested())
        .collect();
    if json {
        Report::new("modules", trees).print();
    } else {
        for (input, tree) in inputs.iter().zip(&trees) {
            println!("graph {}:", input.id);
            if let Some(t) = tree {
                print_tree(t, 1);
            }
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct BoatRecord {
    id: usize,
    seed: Option<SmallBoatSeed>,
    partition: Option<BoatPartition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

pub fn boat(args: &InputArgs, json: bool) -> Result<u8, Failure> {
    let mut records = Vec::new();
    for input in read_graphs(args.input.as_deref(), args.format)? {
        let g = &input.graph;
        let seed = find_small_boat(g);
        let (partition, error) = match &seed {
            None => (None, Some("no induced small boat".to_string())),
            Some(s) => match extend_to_special_boat(g, s) {
                Ok(p) => (Some(p), None),
                Err(e) => (None, Some(e.to_string())),
            },
        };
        records.push(BoatRecord {
            id: input.id,
            seed,
            partition,
            error,
        });
    }
    let found = records.iter().all(|r| r.partition.is_some());
    if json {
        Report::new("boat", records).print();
    } else {
        for r in &records {
            match (&r.partition, &r.error) {
                (Some(p), _) => {
                    println!("graph {}: special boat with q = {}", r.id, p.q);
                    for (side, parts) in [("A", &p.a), ("B", &p.b)] {
                        for (i, part) in parts.iter().enumerate() {
                            println!("  {side}{i} {:?}", part.to_vec());
                        }
                    }
                }
                (None, Some(e)) => println!("graph {}: {e}", r.id),
                (None, None) => unreachable!(),
            }
        }
    }
    Ok(if found { 0 } else { 1 })
}
