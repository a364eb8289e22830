//! Rendering of reports and maps in the three output formats.

use mtc_core::category::builtin_names;
use mtc_core::cobordism::{format_sig, EvaluatedMap};
use mtc_core::{CategoryData, Report, C64};
use serde_json::{json, Value};

use crate::Format;

pub struct Emit {
    pub format: Format,
}

impl Emit {
    pub fn new(format: Format) -> Self {
        Emit { format }
    }

    fn json(&self, v: &Value) {
        println!("{}", serde_json::to_string_pretty(v).expect("json value serializes"));
    }

    fn csv(&self, header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) {
        let mut w = csv::Writer::from_writer(std::io::stdout());
        w.write_record(header).expect("stdout is writable");
        for r in rows {
            w.write_record(&r).expect("stdout is writable");
        }
        w.flush().expect("stdout is writable");
    }
}

fn pair(z: C64) -> Value {
    json!([z.re, z.im])
}

fn verdict(ok: bool) -> &'static str {
    if ok { "pass" } else { "fail" }
}

fn tuple_name(cat: &CategoryData, labels: &[usize]) -> String {
    if labels.is_empty() {
        "()".to_string()
    } else {
        labels.iter().map(|&l| cat.label_name(l)).collect::<Vec<_>>().join("⊗")
    }
}

pub fn emit_list(out: &Emit) {
    let names = builtin_names();
    match out.format {
        Format::Text => {
            for b in names {
                let params = if b.params.is_empty() { String::new() } else { format!("({})", b.params.join(",")) };
                println!("{:<16} {}", format!("{}{params}", b.name), b.summary);
            }
        }
        Format::Json => out.json(&Value::Array(
            names.iter().map(|b| json!({"name": b.name, "params": b.params, "summary": b.summary})).collect(),
        )),
        Format::Csv => out.csv(
            &["name", "params", "summary"],
            names.iter().map(|b| vec![b.name.to_string(), b.params.join(";"), b.summary.to_string()]),
        ),
    }
}

pub fn emit_report(out: &Emit, title: &str, rep: &Report) {
    match out.format {
        Format::Text => {
            println!("{title}");
            print!("{rep}");
            println!("{} (max residual {:.5e})", verdict(rep.passed()), rep.max_residual());
        }
        Format::Json => out.json(&json!({
            "subject": title,
            "result": verdict(rep.passed()),
            "max_residual": rep.max_residual(),
            "checks": rep.checks,
        })),
        Format::Csv => out.csv(
            &["check", "result", "max_residual", "tolerance", "offending"],
            rep.checks.iter().map(|c| {
                vec![
                    c.name.clone(),
                    verdict(c.passed).to_string(),
                    format!("{:e}", c.max_residual),
                    format!("{:e}", c.tolerance),
                    c.offending.iter().map(|v| format!("{v:?}")).collect::<Vec<_>>().join(" "),
                ]
            }),
        ),
    }
}

pub fn emit_verlinde(out: &Emit, cat: &CategoryData, tol: f64, forward: &Report, reverse: &Report) {
    let worst = forward.max_residual().max(reverse.max_residual());
    match out.format {
        Format::Json => out.json(&json!({
            "category": cat.name(),
            "verlinde": verdict(forward.passed()),
            "reverse": verdict(reverse.passed()),
            "max_residual": worst,
            "checks": forward.checks.iter().chain(&reverse.checks).collect::<Vec<_>>(),
        })),
        Format::Text => {
            println!("{} (transparent: {})", cat.name(), tuple_list(cat, &cat.transparent_objects(tol)));
            print!("{forward}{reverse}");
            println!("verlinde {}, reverse {} (max residual {worst:.5e})", verdict(forward.passed()), verdict(reverse.passed()));
        }
        Format::Csv => {
            let mut both = forward.clone();
            both.extend(reverse.clone());
            emit_report(out, cat.name(), &both);
        }
    }
}

fn tuple_list(cat: &CategoryData, labels: &[usize]) -> String {
    labels.iter().map(|&l| cat.label_name(l)).collect::<Vec<_>>().join(", ")
}

#[allow(clippy::too_many_arguments)]
pub fn emit_genus(out: &Emit, cat: &CategoryData, g: u32, ins: &[usize], formula: C64, brute: u128, residual: f64, passed: bool) {
    match out.format {
        Format::Text => {
            println!("{} g={g} insertions [{}]", cat.name(), tuple_list(cat, ins));
            if formula.im.abs() > 1e-12 {
                println!("formula {:.6}{:+.6}i", formula.re, formula.im);
            } else {
                println!("formula {:.6}", formula.re);
            }
            println!("bruteforce {brute}");
            println!("{}", verdict(passed));
        }
        Format::Json => out.json(&json!({
            "category": cat.name(),
            "g": g,
            "insertions": ins.iter().map(|&l| cat.label_name(l)).collect::<Vec<_>>(),
            "formula": pair(formula),
            "bruteforce": brute.to_string(),
            "residual": residual,
            "result": verdict(passed),
        })),
        Format::Csv => out.csv(
            &["g", "insertions", "formula_re", "formula_im", "bruteforce", "result"],
            [vec![
                g.to_string(),
                tuple_list(cat, ins).replace(", ", ";"),
                formula.re.to_string(),
                formula.im.to_string(),
                brute.to_string(),
                verdict(passed).to_string(),
            ]],
        ),
    }
}

pub fn emit_map(out: &Emit, cat: &CategoryData, word: &str, map: &EvaluatedMap) {
    match out.format {
        Format::Json => println!("{}", map.to_json()),
        Format::Csv => print!("{}", map.to_csv()),
        Format::Text => {
            let (rows, cols) = map.matrix.shape();
            println!("{word} : {} -> {} ({rows}x{cols})", map.inputs, map.outputs);
            let row_names: Vec<String> = (0..rows).map(|i| tuple_name(cat, &map.basis_labels(i, map.outputs))).collect();
            let col_names: Vec<String> = (0..cols).map(|j| tuple_name(cat, &map.basis_labels(j, map.inputs))).collect();
            let cells: Vec<Vec<String>> =
                (0..rows).map(|i| (0..cols).map(|j| format_sig(map.matrix[(i, j)])).collect()).collect();
            let w = cells
                .iter()
                .flatten()
                .chain(&col_names)
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(1);
            let lw = row_names.iter().map(|s| s.chars().count()).max().unwrap_or(1);
            let pad = |s: &str, n: usize| format!("{s}{}", " ".repeat(n.saturating_sub(s.chars().count())));
            let header: Vec<String> = col_names.iter().map(|c| pad(c, w)).collect();
            println!("{}  {}", " ".repeat(lw), header.join("  ").trim_end());
            for (name, row) in row_names.iter().zip(&cells) {
                let row: Vec<String> = row.iter().map(|c| pad(c, w)).collect();
                println!("{}  {}", pad(name, lw), row.join("  ").trim_end());
            }
        }
    }
}

pub fn emit_image(out: &Emit, cat: &CategoryData, map: &EvaluatedMap, input: &[usize], image: &[C64]) {
    let entries: Vec<(String, C64)> = image
        .iter()
        .enumerate()
        .map(|(i, &z)| (tuple_name(cat, &map.basis_labels(i, map.outputs)), z))
        .collect();
    match out.format {
        Format::Json => out.json(&json!({
            "input": input.iter().map(|&l| cat.label_name(l)).collect::<Vec<_>>(),
            "basis": entries.iter().map(|(n, _)| n.clone()).collect::<Vec<_>>(),
            "image": image.iter().map(|&z| pair(z)).collect::<Vec<_>>(),
        })),
        Format::Csv => out.csv(
            &["basis", "re", "im"],
            entries.iter().map(|(n, z)| vec![n.clone(), z.re.to_string(), z.im.to_string()]),
        ),
        Format::Text => {
            println!("image of {}", tuple_name(cat, input));
            let nonzero: Vec<_> = entries.iter().filter(|(_, z)| z.norm() > 1e-12).collect();
            if nonzero.is_empty() {
                println!("  0");
            }
            for (n, z) in nonzero {
                println!("  {:>12}  {n}", format_sig(*z));
            }
        }
    }
}
