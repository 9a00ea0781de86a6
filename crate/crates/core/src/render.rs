//! Text graph output: the Hasse diagram of `<=l` and the commutation graph.
//!
//! `<=l` is drawn rather than `<=q` because the two agree on IOMLs and only
//! `<=l` shows the hexagon shape of non-orthomodular examples such as O6.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::algebra::{Elem, FiniteAlgebra, RelationKind};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RenderFormat {
    #[default]
    Text,
    Dot,
}

impl FromStr for RenderFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "text" | "txt" => Ok(RenderFormat::Text),
            "dot" => Ok(RenderFormat::Dot),
            other => Err(format!(
                "unknown render format `{other}` (expected text or dot)"
            )),
        }
    }
}

impl fmt::Display for RenderFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RenderFormat::Text => "text",
            RenderFormat::Dot => "dot",
        })
    }
}

/// Covering pairs `(lower, upper)` of `<=l`.
pub fn hasse_edges(a: &FiniteAlgebra) -> Vec<(Elem, Elem)> {
    a.relation_matrix(RelationKind::LeL).covering_pairs()
}

/// Commuting pairs `x C y` with `x != y`, each unordered pair once. The flag
/// is true when the pair commutes in both directions.
pub fn commuting_pairs(a: &FiniteAlgebra) -> Vec<(Elem, Elem, bool)> {
    let m = a.relation_matrix(RelationKind::Commutes);
    let mut out = Vec::new();
    for x in a.elements() {
        for y in a.elements() {
            if x == y {
                continue;
            }
            let (xy, yx) = (m.get(x, y), m.get(y, x));
            if xy && yx && x < y {
                out.push((x, y, true));
            } else if xy && !yx {
                out.push((x, y, false));
            }
        }
    }
    out
}

pub fn render(a: &FiniteAlgebra, name: &str, format: RenderFormat) -> String {
    match format {
        RenderFormat::Text => render_text(a, name),
        RenderFormat::Dot => render_dot(a, name),
    }
}

fn render_text(a: &FiniteAlgebra, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {name}");
    let _ = writeln!(out, "nodes {}", a.names().join(" "));
    if !a.relation_matrix(RelationKind::LeL).is_partial_order() {
        let _ = writeln!(out, "# <=l is not a partial order here");
    }
    let _ = writeln!(out, "order <=l");
    for (lo, hi) in hasse_edges(a) {
        let _ = writeln!(out, "edge {} {}", a.name(lo), a.name(hi));
    }
    let _ = writeln!(out, "commutes");
    for (x, y, both) in commuting_pairs(a) {
        let arrow = if both { "<->" } else { "->" };
        let _ = writeln!(out, "pair {} {arrow} {}", a.name(x), a.name(y));
    }
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn render_dot(a: &FiniteAlgebra, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", quote(&format!("{name} <=l")));
    out.push_str("  rankdir=BT;\n");
    for e in a.elements() {
        let _ = writeln!(out, "  {};", quote(a.name(e)));
    }
    for (lo, hi) in hasse_edges(a) {
        let _ = writeln!(out, "  {} -> {};", quote(a.name(lo)), quote(a.name(hi)));
    }
    out.push_str("}\n");
    let _ = writeln!(out, "digraph {} {{", quote(&format!("{name} commutes")));
    for e in a.elements() {
        let _ = writeln!(out, "  {};", quote(a.name(e)));
    }
    for (x, y, both) in commuting_pairs(a) {
        let attr = if both { " [dir=both]" } else { "" };
        let _ = writeln!(out, "  {} -> {}{attr};", quote(a.name(x)), quote(a.name(y)));
    }
    out.push_str("}\n");
    out
}
