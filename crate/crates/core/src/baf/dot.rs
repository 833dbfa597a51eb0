//! Graphviz export: attacks as solid edges, supports as dashed edges.

use std::fmt::Write as _;

use super::{Baf, Pbaf};
use crate::idset::ArgId;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn render(f: &Baf, label: impl Fn(ArgId) -> String) -> String {
    let mut out = String::from("digraph baf {\n");
    for a in (0..f.n_args()).map(ArgId) {
        let _ = writeln!(out, "  {} [label={}];", a.0, quote(&label(a)));
    }
    for (x, y) in f.attacks() {
        let _ = writeln!(out, "  {x} -> {y};");
    }
    for (x, y) in f.supports() {
        let _ = writeln!(out, "  {x} -> {y} [style=dashed];");
    }
    out.push_str("}\n");
    out
}

pub fn baf_to_dot(f: &Baf) -> String {
    render(f, |a| f.arg_name(a))
}

/// Like [`baf_to_dot`], with each node labelled by its premises as well.
pub fn pbaf_to_dot(pf: &Pbaf) -> String {
    render(pf.baf(), |a| {
        format!(
            "{} {}",
            pf.baf().arg_name(a),
            pf.display_premises(pf.premises(a))
        )
    })
}
