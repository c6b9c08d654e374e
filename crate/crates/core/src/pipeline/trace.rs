//! Per-stage dump of a pipeline run.
//!
//! Text form, one block per stage:
//!
//! ```text
//! stage <name>
//! c selected <1-based ids>
//! c <free-form note>
//! p <n> <m>
//! e <u> <v>
//! w <v> <weight>
//! ```
//!
//! Everything after the `stage` line is a valid edge-list block, so each
//! stage can be fed back to the parser on its own.

use std::fmt::Write as _;

use crate::graph::VertexId;
use crate::io::write_block;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stage {
    pub name: String,
    pub n: usize,
    pub edges: Vec<(VertexId, VertexId)>,
    pub weights: Vec<u64>,
    pub selected: Vec<VertexId>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StageTrace {
    pub stages: Vec<Stage>,
}

impl StageTrace {
    pub fn len(&self) -> usize {
        self.stages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stages.is_empty()
    }

    pub fn stage(&self, name: &str) -> Option<&Stage> {
        self.stages.iter().find(|s| s.name == name)
    }

    pub fn names(&self) -> Vec<&str> {
        self.stages.iter().map(|s| s.name.as_str()).collect()
    }

    pub(crate) fn push(
        &mut self,
        name: &str,
        edges: Vec<(VertexId, VertexId)>,
        weights: Vec<u64>,
        selected: Vec<VertexId>,
        notes: Vec<String>,
    ) {
        self.stages.push(Stage {
            name: name.to_string(),
            n: weights.len(),
            edges,
            weights,
            selected,
            notes,
        });
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.stages {
            let _ = writeln!(out, "stage {}", s.name);
            if !s.selected.is_empty() {
                let ids: Vec<String> = s.selected.iter().map(|v| (v + 1).to_string()).collect();
                let _ = writeln!(out, "c selected {}", ids.join(" "));
            }
            for note in &s.notes {
                let _ = writeln!(out, "c {note}");
            }
            write_block(&mut out, s.n, s.edges.iter().copied(), &s.weights);
        }
        out
    }
}

/// Splits trace text back into `(stage name, edge-list block)` pairs.
pub fn split_trace(text: &str) -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = Vec::new();
    for line in text.lines() {
        if let Some(name) = line.strip_prefix("stage ") {
            out.push((name.trim().to_string(), String::new()));
        } else if let Some((_, block)) = out.last_mut() {
            block.push_str(line);
            block.push('\n');
        }
    }
    out
}
