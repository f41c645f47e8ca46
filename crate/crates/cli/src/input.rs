use std::fs;
use std::io::{self, Read};
use std::path::Path;

use bperfect::io::decode_graph6;
use bperfect::{parse_graph, Format, Graph};

use crate::Failure;

pub fn read_text(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

/// One input graph. `id` is the 1-based line number for graph6 streams and 1 otherwise.
pub struct Input {
    pub id: usize,
    pub graph: Graph,
}

/// Every non-blank graph6 line gives one graph; the other formats hold a single graph.
pub fn read_graphs(path: Option<&Path>, format: Format) -> Result<Vec<Input>, Failure> {
    let text = read_text(path)?;
    if format != Format::Graph6 {
        let graph = parse_graph(&text, format).map_err(|e| Failure::Input(e.to_string()))?;
        return Ok(vec![Input { id: 1, graph }]);
    }
    let mut out = Vec::new();
    for (id, line) in numbered_lines(&text) {
        let graph = decode_graph6(line).map_err(|e| Failure::Input(format!("line {id}: {e}")))?;
        out.push(Input { id, graph });
    }
    if out.is_empty() {
        return Err(Failure::Input("no graph in input".into()));
    }
    Ok(out)
}

pub fn numbered_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}
