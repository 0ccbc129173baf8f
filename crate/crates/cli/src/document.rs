//! The line-based document formats.
//!
//! Every document starts with `<kind> <n>` (`boxes <n> <d>`), declares
//! its vertices with `v <label>` lines whose order fixes the indices,
//! and then lists content lines: `e` edges, `<` order pairs, `s` atom
//! sets, `i` intervals, `b` boxes, `t` star subtrees, or `L` linear
//! orders. Lines whose first token starts with `#` are comments; blank
//! lines are ignored. Printing is canonical, so parse(print(x)) = x.

use containment_core::{
    BoxRep, Error as CoreError, Graph, IntervalRep, LinearOrder, Poset, SetFamily, StarSubtreeRep,
};
use std::collections::HashMap;
use std::fmt::Write as _;

#[derive(Debug)]
pub enum CliError {
    Parse { line: usize, msg: String },
    /// Structural rejection while loading an input file (bad cycle,
    /// broken invariant); maps to the usage exit code.
    Input(CoreError),
    Usage(String),
    Io(String),
    /// Engine-level negative outcome; maps to exit code 1.
    Semantic(CoreError),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse { line, msg } => write!(f, "parse error at line {line}: {msg}"),
            CliError::Input(e) => write!(f, "invalid input: {e}"),
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Io(msg) => write!(f, "{msg}"),
            CliError::Semantic(e) => write!(f, "{e}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Semantic(_) => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Graph(Graph),
    Poset(Poset),
    Family(SetFamily),
    Intervals(IntervalRep),
    Boxes(BoxRep),
    Star(StarSubtreeRep),
    Realizer {
        labels: Vec<String>,
        orders: Vec<LinearOrder>,
    },
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Graph(_) => "graph",
            Document::Poset(_) => "poset",
            Document::Family(_) => "family",
            Document::Intervals(_) => "intervals",
            Document::Boxes(_) => "boxes",
            Document::Star(_) => "star",
            Document::Realizer { .. } => "realizer",
        }
    }
}

fn err(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        msg: msg.into(),
    }
}

struct Lines<'a> {
    tokens: Vec<(usize, Vec<&'a str>)>,
}

fn significant_lines(text: &str) -> Lines<'_> {
    let mut tokens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        tokens.push((i + 1, trimmed.split_whitespace().collect()));
    }
    Lines { tokens }
}

fn parse_num<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<T, CliError> {
    tok.parse()
        .map_err(|_| err(line, format!("invalid {what} `{tok}`")))
}

pub fn parse(text: &str) -> Result<Document, CliError> {
    let lines = significant_lines(text);
    let mut it = lines.tokens.into_iter();
    let Some((hline, header)) = it.next() else {
        return Err(err(1, "empty document"));
    };
    let kind = header[0];
    let expect_header_len = if kind == "boxes" { 3 } else { 2 };
    if header.len() != expect_header_len {
        return Err(err(hline, format!("malformed `{kind}` header")));
    }
    let n: usize = parse_num(hline, header[1], "vertex count")?;
    let d: usize = if kind == "boxes" {
        parse_num(hline, header[2], "box dimension")?
    } else {
        0
    };

    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut last_line = hline;
    // content rows, each (line, index, payload tokens)
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut rows: Vec<(usize, usize, Vec<String>)> = Vec::new();
    let mut orders: Vec<(usize, Vec<String>)> = Vec::new();

    for (line, toks) in it {
        last_line = line;
        match toks[0] {
            "v" => {
                if toks.len() != 2 {
                    return Err(err(line, "vertex line takes exactly one label"));
                }
                if labels.len() == n {
                    return Err(err(line, format!("more than {n} vertex declarations")));
                }
                let label = toks[1].to_string();
                if index.insert(label.clone(), labels.len()).is_some() {
                    return Err(err(line, format!("duplicate label `{label}`")));
                }
                labels.push(label);
            }
            "e" | "<" if toks[0] == content_prefix(kind) => {
                if toks.len() != 3 {
                    return Err(err(line, format!("`{}` line takes two labels", toks[0])));
                }
                let u = *index
                    .get(toks[1])
                    .ok_or_else(|| err(line, format!("unknown vertex `{}`", toks[1])))?;
                let v = *index
                    .get(toks[2])
                    .ok_or_else(|| err(line, format!("unknown vertex `{}`", toks[2])))?;
                if u == v && kind == "graph" {
                    return Err(err(line, format!("self-loop at `{}`", toks[1])));
                }
                edges.push((line, u, v));
            }
            "s" | "i" | "b" | "t" if toks[0] == content_prefix(kind) => {
                if toks.len() < 2 {
                    return Err(err(line, format!("`{}` line needs a label", toks[0])));
                }
                let u = *index
                    .get(toks[1])
                    .ok_or_else(|| err(line, format!("unknown vertex `{}`", toks[1])))?;
                rows.push((line, u, toks[2..].iter().map(|t| t.to_string()).collect()));
            }
            "L" if kind == "realizer" => {
                orders.push((line, toks[1..].iter().map(|t| t.to_string()).collect()));
            }
            other => {
                return Err(err(
                    line,
                    format!("unexpected directive `{other}` in a {kind} document"),
                ));
            }
        }
    }
    if labels.len() != n {
        return Err(err(
            last_line,
            format!("expected {n} vertex declarations, found {}", labels.len()),
        ));
    }

    match kind {
        "graph" => {
            let pairs: Vec<(&str, &str)> = edges
                .iter()
                .map(|&(_, u, v)| (labels[u].as_str(), labels[v].as_str()))
                .collect();
            Graph::from_edges(labels.clone(), &pairs)
                .map(Document::Graph)
                .map_err(CliError::Input)
        }
        "poset" => {
            let pairs: Vec<(&str, &str)> = edges
                .iter()
                .map(|&(_, u, v)| (labels[u].as_str(), labels[v].as_str()))
                .collect();
            Poset::from_pairs(labels.clone(), &pairs)
                .map(Document::Poset)
                .map_err(CliError::Input)
        }
        "family" => {
            let sets = collect_rows(&labels, rows, |line, toks| {
                toks.iter()
                    .map(|t| parse_num::<u64>(line, t, "atom"))
                    .collect()
            })?;
            SetFamily::new(labels, sets)
                .map(Document::Family)
                .map_err(CliError::Input)
        }
        "intervals" => {
            let ivs = collect_rows(&labels, rows, |line, toks| {
                if toks.len() != 2 {
                    return Err(err(line, "interval line takes two endpoints"));
                }
                Ok((
                    parse_num::<i64>(line, &toks[0], "endpoint")?,
                    parse_num::<i64>(line, &toks[1], "endpoint")?,
                ))
            })?;
            IntervalRep::new(labels, ivs)
                .map(Document::Intervals)
                .map_err(CliError::Input)
        }
        "boxes" => {
            let boxes = collect_rows(&labels, rows, |line, toks| {
                if toks.len() != 2 * d {
                    return Err(err(line, format!("box line takes {} endpoints", 2 * d)));
                }
                toks.chunks(2)
                    .map(|c| {
                        Ok((
                            parse_num::<i64>(line, &c[0], "endpoint")?,
                            parse_num::<i64>(line, &c[1], "endpoint")?,
                        ))
                    })
                    .collect()
            })?;
            BoxRep::new(labels, d, boxes)
                .map(Document::Boxes)
                .map_err(CliError::Input)
        }
        "star" => {
            let leaves = collect_rows(&labels, rows, |line, toks| {
                toks.iter()
                    .map(|t| parse_num::<usize>(line, t, "pendant"))
                    .collect()
            })?;
            StarSubtreeRep::new(labels, leaves)
                .map(Document::Star)
                .map_err(CliError::Input)
        }
        "realizer" => {
            let mut parsed = Vec::new();
            for (line, toks) in orders {
                if toks.len() != n {
                    return Err(err(line, format!("order must list all {n} labels")));
                }
                for t in &toks {
                    if !index.contains_key(t.as_str()) {
                        return Err(err(line, format!("unknown vertex `{t}`")));
                    }
                }
                let order = LinearOrder::new(toks)
                    .map_err(|e| err(line, format!("not a permutation: {e}")))?;
                parsed.push(order);
            }
            Ok(Document::Realizer {
                labels,
                orders: parsed,
            })
        }
        other => Err(err(hline, format!("unknown document kind `{other}`"))),
    }
}

fn content_prefix(kind: &str) -> &'static str {
    match kind {
        "graph" => "e",
        "poset" => "<",
        "family" => "s",
        "intervals" => "i",
        "boxes" => "b",
        "star" => "t",
        "realizer" => "L",
        _ => "?",
    }
}

/// Gather exactly one content row per declared vertex.
fn collect_rows<T>(
    labels: &[String],
    rows: Vec<(usize, usize, Vec<String>)>,
    mut convert: impl FnMut(usize, &[String]) -> Result<T, CliError>,
) -> Result<Vec<T>, CliError> {
    let mut slots: Vec<Option<(usize, Vec<String>)>> = vec![None; labels.len()];
    for (line, u, toks) in rows {
        if slots[u].is_some() {
            return Err(err(line, format!("second row for `{}`", labels[u])));
        }
        slots[u] = Some((line, toks));
    }
    slots
        .into_iter()
        .enumerate()
        .map(|(u, slot)| {
            let (line, toks) =
                slot.ok_or_else(|| err(0, format!("missing row for `{}`", labels[u])))?;
            convert(line, &toks)
        })
        .collect()
}

pub fn print(doc: &Document) -> String {
    let mut out = String::new();
    match doc {
        Document::Graph(g) => {
            let _ = writeln!(out, "graph {}", g.n());
            for l in g.labels() {
                let _ = writeln!(out, "v {l}");
            }
            for (u, v) in g.edges() {
                let _ = writeln!(out, "e {} {}", g.label(u), g.label(v));
            }
        }
        Document::Poset(p) => {
            let _ = writeln!(out, "poset {}", p.n());
            for l in p.labels() {
                let _ = writeln!(out, "v {l}");
            }
            for (i, j) in p.relation_pairs() {
                let _ = writeln!(out, "< {} {}", p.label(i), p.label(j));
            }
        }
        Document::Family(f) => {
            let _ = writeln!(out, "family {}", f.n());
            for l in f.labels() {
                let _ = writeln!(out, "v {l}");
            }
            for i in 0..f.n() {
                let atoms: Vec<String> = f.set(i).iter().map(|a| a.to_string()).collect();
                let _ = writeln!(out, "s {} {}", f.label(i), atoms.join(" "));
            }
        }
        Document::Intervals(rep) => {
            let _ = writeln!(out, "intervals {}", rep.n());
            for l in rep.labels() {
                let _ = writeln!(out, "v {l}");
            }
            for i in 0..rep.n() {
                let (l, r) = rep.interval(i);
                let _ = writeln!(out, "i {} {} {}", rep.label(i), l, r);
            }
        }
        Document::Boxes(rep) => {
            let _ = writeln!(out, "boxes {} {}", rep.n(), rep.d());
            for l in rep.labels() {
                let _ = writeln!(out, "v {l}");
            }
            for i in 0..rep.n() {
                let ends: Vec<String> = rep
                    .box_intervals(i)
                    .iter()
                    .flat_map(|&(l, r)| [l.to_string(), r.to_string()])
                    .collect();
                let _ = writeln!(out, "b {} {}", rep.label(i), ends.join(" "));
            }
        }
        Document::Star(rep) => {
            let _ = writeln!(out, "star {}", rep.n());
            for l in rep.labels() {
                let _ = writeln!(out, "v {l}");
            }
            for i in 0..rep.n() {
                let leaves: Vec<String> = rep.leaf_set(i).iter().map(|l| l.to_string()).collect();
                let _ = writeln!(out, "t {} {}", rep.label(i), leaves.join(" "));
            }
        }
        Document::Realizer { labels, orders } => {
            let _ = writeln!(out, "realizer {}", labels.len());
            for l in labels {
                let _ = writeln!(out, "v {l}");
            }
            for o in orders {
                let _ = writeln!(out, "L {}", o.labels().join(" "));
            }
        }
    }
    out
}
