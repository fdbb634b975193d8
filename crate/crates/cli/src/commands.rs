use std::collections::BTreeMap;

use clap::ValueEnum;
use encone_core::combinatorics::{enumerate_bipartitions, hasse};
use encone_core::{Bipartition, IntPoly};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::memo::TableCache;
use crate::output::{bip_json, partition_cell, partition_json, poly_cell, poly_json, Output};

/// `𝒬_n` in canonical order with `b`, orbit dimension and flag composition.
pub fn cmd_qn(n: usize) -> Output {
    let labels = enumerate_bipartitions(n);
    let mut orbits = Vec::new();
    let mut rows = Vec::new();
    for l in &labels {
        let comp = l.interleaved_composition();
        orbits.push(json!({
            "label": l.to_string(),
            "mu": l.mu().parts(),
            "nu": l.nu().parts(),
            "b": l.b_stat(),
            "dim": l.dim(),
            "composition": comp,
        }));
        rows.push(vec![
            l.to_string(),
            partition_cell(l.mu()),
            partition_cell(l.nu()),
            l.b_stat().to_string(),
            l.dim().to_string(),
            comp.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
        ]);
    }
    Output {
        json: json!({ "n": n, "orbits": orbits }),
        header: ["label", "mu", "nu", "b", "dim", "composition"].map(String::from).to_vec(),
        rows,
        dot: None,
    }
}

/// Covering relations of the closure order with their move types.
pub fn cmd_hasse(n: usize) -> Output {
    let labels = enumerate_bipartitions(n);
    let id = |b: &Bipartition| labels.iter().position(|x| x == b).expect("label in Q_n");
    let edges = hasse(n);

    let nodes: Vec<Value> = labels
        .iter()
        .map(|l| json!({ "label": l.to_string(), "mu": l.mu().parts(), "nu": l.nu().parts(), "dim": l.dim() }))
        .collect();
    let mut jedges = Vec::new();
    let mut rows = Vec::new();
    for (lo, hi, c) in &edges {
        jedges.push(json!({
            "lower": bip_json(lo),
            "upper": bip_json(hi),
            "type": c.kind.number(),
            "rows": [c.k, c.l],
        }));
        rows.push(vec![lo.to_string(), hi.to_string(), c.kind.number().to_string(), c.k.to_string(), c.l.to_string()]);
    }

    let mut dot = format!("digraph q{n} {{\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for (i, l) in labels.iter().enumerate() {
        dot += &format!("  n{i} [label=\"{l}\"];\n");
    }
    let mut by_dim: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, l) in labels.iter().enumerate() {
        by_dim.entry(l.dim()).or_default().push(i);
    }
    for (d, ids) in &by_dim {
        let names: Vec<String> = ids.iter().map(|i| format!("n{i};")).collect();
        dot += &format!("  {{ rank=same; /* dim {d} */ {} }}\n", names.join(" "));
    }
    for (lo, hi, c) in &edges {
        dot += &format!("  n{} -> n{} [label=\"{}\"];\n", id(lo), id(hi), c.kind.number());
    }
    dot += "}\n";

    Output {
        json: json!({ "n": n, "nodes": nodes, "edges": jedges }),
        header: ["lower", "upper", "type", "k", "l"].map(String::from).to_vec(),
        rows,
        dot: Some(dot),
    }
}

type Key = (&'static str, Value, String);

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Kostka,
    Ic,
    Pi,
    Theta,
    Hall,
    Omega,
}

impl Which {
    fn name(self) -> &'static str {
        match self {
            Which::Kostka => "kostka",
            Which::Ic => "ic",
            Which::Pi => "pi",
            Which::Theta => "theta",
            Which::Hall => "hall",
            Which::Omega => "omega",
        }
    }
}

/// Nonzero entries of one table, keyed by labels. Matrix tables use `row`
/// and `col` (upper/lower label for `K̃` and `IC`, fibre type/orbit for `Π`);
/// `theta` uses `orbit`; `hall` uses `ambient`, `rho`, `sigma`.
pub fn cmd_tables(n: usize, which: Which, cache: &TableCache) -> Result<Output, CliError> {
    let table = cache.get(n)?;
    let labels = table.labels();
    // (key name, JSON value, CSV cell) per key, then the polynomial
    let mut entries: Vec<(Vec<Key>, IntPoly)> = Vec::new();
    let key = |k: &'static str, b: &Bipartition| (k, bip_json(b), b.to_string());
    match which {
        Which::Kostka | Which::Ic | Which::Pi | Which::Omega => {
            for (i, a) in labels.iter().enumerate() {
                for (j, c) in labels.iter().enumerate() {
                    let p = match which {
                        Which::Kostka => table.kostka(a, c)?.clone(),
                        Which::Ic => table.ic(a, c)?,
                        Which::Pi => table.pi(a, c)?,
                        _ => table.omega().get(i, j).as_int_poly().ok_or_else(|| {
                            CliError::Core(encone_core::Error::NotIntegral(format!("Ω at ({a}, {c})")))
                        })?,
                    };
                    if !p.is_zero() {
                        entries.push((vec![key("row", a), key("col", c)], p));
                    }
                }
            }
        }
        Which::Theta => {
            for a in labels {
                entries.push((vec![key("orbit", a)], table.theta(a)?));
            }
        }
        Which::Hall => {
            for a in labels {
                for m in 0..=n {
                    for ((rho, sigma), g) in table.hall_family(a, m)? {
                        if !g.is_zero() {
                            let k = vec![
                                key("ambient", a),
                                ("rho", partition_json(&rho), partition_cell(&rho)),
                                ("sigma", partition_json(&sigma), partition_cell(&sigma)),
                            ];
                            entries.push((k, g));
                        }
                    }
                }
            }
        }
    }

    let keys: &[&str] = match which {
        Which::Theta => &["orbit"],
        Which::Hall => &["ambient", "rho", "sigma"],
        _ => &["row", "col"],
    };
    let mut header: Vec<String> = keys.iter().map(|k| k.to_string()).collect();
    header.push("coeffs".into());
    header.push("poly".into());
    let mut jentries = Vec::new();
    let mut rows = Vec::new();
    for (k, p) in &entries {
        let mut obj = serde_json::Map::new();
        let mut row = Vec::new();
        for (name, v, cell) in k {
            obj.insert(name.to_string(), v.clone());
            row.push(cell.clone());
        }
        obj.insert("poly".into(), poly_json(p));
        row.push(poly_cell(p));
        row.push(p.to_string());
        jentries.push(Value::Object(obj));
        rows.push(row);
    }
    Ok(Output {
        json: json!({
            "n": n,
            "which": which.name(),
            "labels": labels.iter().map(bip_json).collect::<Vec<_>>(),
            "entries": jentries,
        }),
        header,
        rows,
        dot: None,
    })
}
