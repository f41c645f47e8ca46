use std::io::Write;
use std::process::{Command, Output, Stdio};

use bperfect::io::decode_graph6;
use bperfect::{are_isomorphic, encode_graph6, Coloring, Graph};
use serde_json::Value;

fn bperf(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_bperf"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn g6(g: &Graph) -> String {
    encode_graph6(g).unwrap() + "\n"
}

fn json(out: &Output) -> Value {
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    v
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn recognize_p5_and_p4() {
    let out = bperf(&["recognize", "--json"], &g6(&Graph::path(5)));
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["graphs"][0]["b_perfect"], false);
    assert_eq!(v["graphs"][0]["witness"]["index"], 1);

    let out = bperf(&["recognize", "--oracle"], &g6(&Graph::path(4)));
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("oracle: b-perfect"));
}

#[test]
fn color_reports_valid_b_colorings() {
    let tt = Graph::complete(3).disjoint_union(&Graph::complete(3));
    for (g, k) in [(Graph::path(4), 2), (tt, 3)] {
        let out = bperf(&["color", "--json"], &g6(&g));
        assert_eq!(out.status.code(), Some(0));
        let v = json(&out);
        let colors: Vec<usize> = serde_json::from_value(v["graphs"][0]["colors"].clone()).unwrap();
        let c = Coloring::new(colors).unwrap();
        assert_eq!(c.num_colors(), k);
        assert!(c.is_proper(&g).unwrap() && c.is_b_coloring(&g));
    }
}

#[test]
fn color_c5_with_oracle_numbers() {
    let v = json(&bperf(&["color", "--oracle", "--json"], &g6(&Graph::cycle(5))));
    let r = &v["graphs"][0];
    assert_eq!(r["num_colors"], 3);
    assert_eq!(r["chi"], 3);
    assert_eq!(r["b"], 3);
}

#[test]
fn color_guard_and_order() {
    let out = bperf(&["color", "--require-b-perfect"], &g6(&Graph::path(5)));
    assert_eq!(out.status.code(), Some(3));
    let out = bperf(&["color", "--order", "0,3,1,2", "--json"], &g6(&Graph::path(4)));
    let v = json(&out);
    assert_eq!(v["graphs"][0]["num_colors"], 2);
    assert_eq!(v["graphs"][0]["trace"]["rounds"].as_array().unwrap().len(), 1);
    let out = bperf(&["color", "--order", "0,0,1,2"], &g6(&Graph::path(4)));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn clique_methods() {
    let cc6 = Graph::cycle(6).complement();
    let v = json(&bperf(&["clique", "--json"], &g6(&cc6)));
    assert_eq!(v["graphs"][0]["size"], 3);
    assert_eq!(v["graphs"][0]["trace"][0]["step"], "special_boat");

    for method in ["structural", "module-tree", "oracle"] {
        let v = json(&bperf(
            &["clique", "--json", "--method", method],
            &g6(&Graph::complete(5)),
        ));
        assert_eq!(v["graphs"][0]["size"], 5, "{method}");
    }

    let out = bperf(&["clique", "--json"], &g6(&Graph::path(5)));
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["graphs"][0]["witness"]["name"], "F1");
    let out = bperf(&["clique", "--unsafe-skip-check"], &g6(&Graph::path(5)));
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn text_formats() {
    let out = bperf(&["recognize", "-f", "edgelist"], "n 5\n0 1\n1 2\n2 3\n3 4\n");
    assert_eq!(out.status.code(), Some(1));
    let out = bperf(&["clique", "-f", "dimacs"], "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("size 3"));
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(bperf(&["recognize"], "garbage\n").status.code(), Some(2));
    assert_eq!(bperf(&["recognize"], "").status.code(), Some(2));
    assert_eq!(
        bperf(&["recognize", "/nonexistent/graph.g6"], "").status.code(),
        Some(2)
    );
    assert_eq!(bperf(&["recognize", "-f", "dimacs"], "e 1 2\n").status.code(), Some(2));
}

#[test]
fn family_listing() {
    let out = bperf(&["family"], "");
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(lines.len(), 22);
    let f1 = decode_graph6(&lines[0]).unwrap();
    assert!(are_isomorphic(&f1, &Graph::path(5)).unwrap());
    assert_eq!(stdout(&bperf(&["family", "--boats"], "")).lines().count(), 24);
}

#[test]
fn family_selfcheck_passes() {
    let out = bperf(&["family", "--selfcheck"], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().filter(|l| l.ends_with(" ok")).count(), 22);
}

#[test]
fn enumerate_counts_and_distinctness() {
    let text = stdout(&bperf(&["enumerate", "--max-n", "4"], ""));
    assert_eq!(text.lines().count(), 18);
    assert_eq!(stdout(&bperf(&["enumerate", "--max-n", "1"], "")).lines().count(), 1);
    assert_eq!(bperf(&["enumerate", "--max-n", "9"], "").status.code(), Some(2));

    let graphs: Vec<Graph> = stdout(&bperf(&["enumerate", "--max-n", "5"], ""))
        .lines()
        .map(|l| decode_graph6(l).unwrap())
        .collect();
    assert_eq!(graphs.len(), 52);
    for (i, a) in graphs.iter().enumerate() {
        for b in &graphs[..i] {
            assert!(!are_isomorphic(a, b).unwrap());
        }
    }
}

#[test]
fn verify_all_small_graphs() {
    let stream = stdout(&bperf(&["enumerate", "--max-n", "7"], ""));
    let out = bperf(&["verify", "--json"], &stream);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["summary"]["graphs"], 1252);
    assert_eq!(v["summary"]["mismatches"].as_array().unwrap().len(), 0);
    // records come back in input order
    let ids: Vec<u64> = v["graphs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["id"].as_u64().unwrap())
        .collect();
    assert!(ids.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn verify_edge_cases() {
    let out = bperf(&["verify", "--json"], &g6(&Graph::path(5)));
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["graphs"][0]["b_perfect_fast"], false);
    assert_eq!(v["graphs"][0]["b_perfect_oracle"], false);

    let out = bperf(&["verify"], "");
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("0 graphs checked"));

    let stream = format!("{}not-graph6\n{}", g6(&Graph::path(4)), g6(&Graph::complete(9)));
    let out = bperf(&["verify", "--json"], &stream);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["summary"]["graphs"], 1);
    assert_eq!(v["summary"]["errors"].as_array().unwrap().len(), 2);
}

#[test]
fn sampled_graphs_are_b_perfect() {
    let stream = stdout(&bperf(&["sample", "-n", "20", "--count", "3", "--seed", "11"], ""));
    assert_eq!(stream.lines().count(), 3);
    let out = bperf(&["recognize"], &stream);
    assert_eq!(out.status.code(), Some(0));
    // same seed, same graphs
    assert_eq!(
        stdout(&bperf(&["sample", "-n", "20", "--count", "3", "--seed", "11"], "")),
        stream
    );
}

#[test]
fn debug_views() {
    let v = json(&bperf(&["modules", "--json"], &g6(&Graph::path(3))));
    assert_eq!(v["graphs"][0]["kind"], "series");
    let v = json(&bperf(&["boat", "--json"], &g6(&Graph::cycle(6).complement())));
    assert_eq!(v["graphs"][0]["partition"]["q"], 3);
    assert_eq!(bperf(&["boat"], &g6(&Graph::path(3))).status.code(), Some(1));
}
