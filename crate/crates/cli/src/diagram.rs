use std::fmt::Write as _;

use serde::Serialize;

use stringtop_core::diagrams::ChordDiagram;

use crate::SCHEMA;

#[derive(Clone, Debug, Serialize)]
pub struct DualSummary {
    pub inputs: usize,
    pub outputs: usize,
    pub genus: u64,
    pub euler_char: i64,
    /// The dual of the dual is the original diagram.
    pub involution: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DiagramReport {
    pub schema: u32,
    pub command: &'static str,
    pub diagram: String,
    pub circles: Vec<Vec<String>>,
    pub parts: Vec<Vec<String>>,
    pub inputs: usize,
    pub outputs: usize,
    /// Each output circle as its sequence of arcs.
    pub output_circles: Vec<Vec<String>>,
    pub genus: u64,
    pub euler_char: i64,
    pub components: usize,
    pub d: i64,
    pub degree: i64,
    pub dual: DualSummary,
}

pub fn summarize(name: &str, diagram: &ChordDiagram, d: i64) -> DiagramReport {
    let owned = |v: Vec<&str>| v.into_iter().map(str::to_string).collect::<Vec<_>>();
    let r = diagram.surgery_outputs();
    let dual = diagram.dual();
    let rd = dual.surgery_outputs();
    DiagramReport {
        schema: SCHEMA,
        command: "diagram",
        diagram: name.to_string(),
        circles: diagram.circles().map(owned).collect(),
        parts: diagram.parts().map(owned).collect(),
        inputs: r.input_count,
        outputs: r.output_count,
        output_circles: r.outputs.iter().map(|c| c.iter().map(|&a| diagram.arc_name(a)).collect()).collect(),
        genus: r.genus,
        euler_char: r.euler_char,
        components: r.components,
        d,
        degree: diagram.operator_degree(d),
        dual: DualSummary {
            inputs: rd.input_count,
            outputs: rd.output_count,
            genus: rd.genus,
            euler_char: rd.euler_char,
            involution: dual.dual().is_isomorphic(diagram),
        },
    }
}

impl DiagramReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        let join = |v: &[Vec<String>], open, close| {
            v.iter().map(|c| format!("{open}{}{close}", c.join(" "))).collect::<Vec<_>>().join(" ")
        };
        let _ = writeln!(out, "diagram {}", self.diagram);
        let _ = writeln!(out, "circles {}", join(&self.circles, "(", ")"));
        let _ = writeln!(out, "parts {}", join(&self.parts, "<", ">"));
        let _ = writeln!(out, "inputs {}", self.inputs);
        let _ = writeln!(out, "outputs {}", self.outputs);
        for (k, c) in self.output_circles.iter().enumerate() {
            let _ = writeln!(out, "  output {}: {}", k + 1, c.join(" "));
        }
        let _ = writeln!(out, "genus {}", self.genus);
        let _ = writeln!(out, "euler_char {}", self.euler_char);
        let _ = writeln!(out, "degree {} (d = {})", self.degree, self.d);
        let _ = writeln!(
            out,
            "dual: inputs {} outputs {} genus {} euler_char {} involution {}",
            self.dual.inputs,
            self.dual.outputs,
            self.dual.genus,
            self.dual.euler_char,
            if self.dual.involution { "yes" } else { "no" }
        );
        out
    }
}
