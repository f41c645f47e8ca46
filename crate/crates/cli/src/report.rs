use std::time::Instant;

use bperfect::family::family;
use bperfect::{Embedding, Graph};
use serde::Serialize;

pub const SCHEMA: u32 = 1;

#[derive(Serialize)]
pub struct Report<T: Serialize, S: Serialize = ()> {
    pub schema: u32,
    pub command: &'static str,
    pub graphs: Vec<T>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summary: Option<S>,
}

impl<T: Serialize> Report<T> {
    pub fn new(command: &'static str, graphs: Vec<T>) -> Self {
        Report {
            schema: SCHEMA,
            command,
            graphs,
            summary: None,
        }
    }
}

impl<T: Serialize, S: Serialize> Report<T, S> {
    pub fn print(&self) {
        println!("{}", serde_json::to_string_pretty(self).expect("reports serialise"));
    }
}

/// A forbidden induced subgraph found in the input.
#[derive(Serialize)]
pub struct Witness {
    pub index: usize,
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alias: Option<&'static str>,
    /// `embedding[i]` is the input vertex playing pattern vertex `i`.
    pub embedding: Vec<usize>,
}

impl Witness {
    /// Re-checks the embedding before reporting it.
    pub fn new(g: &Graph, index: usize, embedding: Embedding) -> Self {
        let p = family().into_iter().nth(index - 1).expect("family indices are 1..=22");
        assert!(embedding.is_valid(g, &p.graph), "witness for {} does not embed", p.name);
        Witness {
            index,
            name: p.name,
            alias: p.alias,
            embedding: embedding.map,
        }
    }

    pub fn describe(&self) -> String {
        let alias = self.alias.map(|a| format!(" ({a})")).unwrap_or_default();
        format!("{}{alias} at vertices {:?}", self.name, self.embedding)
    }
}

pub fn millis(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1000.0
}
