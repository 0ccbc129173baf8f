//! Command-line front end: recognize comparability graphs, compute
//! partial order dimension, build and verify containment
//! representations, and apply the structural transforms.

mod document;

use clap::{Args, Parser, Subcommand, ValueEnum};
use containment_core::{
    box_representation, default_budget, dimension, downset_representation, hiraguchi_bound,
    injectivity_audit, interval_representation, overlap_from_intersection,
    star_subtree_representation, transitive_orient, verify_containment_graph,
    verify_containment_poset, verify_disjointedness, verify_intersection, verify_overlap,
    Error as CoreError, Graph, OddCycleCertificate, Orientation, Poset, ReduceMode,
    Representation, SetFamily, Verdict,
};
use document::{parse, print, CliError, Document};
use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "containment",
    version,
    about = "Comparability graphs, partial order dimension, and containment representations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph file is a comparability graph
    Recognize { file: PathBuf },
    /// Exact partial order dimension of a poset (or comparability graph)
    Dimension {
        file: PathBuf,
        /// Largest realizer size to search (defaults to ⌈n/2⌉, min 2)
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Build a containment representation and print it as a document
    Represent {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: RepKind,
        /// Box dimension (required for --kind box)
        #[arg(long)]
        d: Option<usize>,
    },
    /// Check a representation file against a structure file
    Verify {
        structure: PathBuf,
        representation: PathBuf,
        #[arg(long, value_enum)]
        semantics: Semantics,
        /// Additionally audit the representation for injectivity
        #[arg(long)]
        injective: bool,
    },
    /// Apply a structural transform and print the resulting document
    Transform(TransformArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum RepKind {
    Interval,
    Box,
    Star,
    Downset,
}

#[derive(Clone, Copy, ValueEnum)]
enum Semantics {
    Containment,
    Intersection,
    Overlap,
    Disjointedness,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Mult,
    Exp,
}

#[derive(Args)]
struct TransformArgs {
    /// Tag each set of an intersection family with a fresh atom
    #[arg(long, value_name = "FAMILY_FILE")]
    overlap_from_intersection: Option<PathBuf>,
    /// Complement a graph (disjointedness ↔ intersection duality)
    #[arg(long, value_name = "GRAPH_FILE")]
    complement: Option<PathBuf>,
    /// Reduce a graph or poset modulo vertex substitutability
    #[arg(long, value_name = "FILE")]
    reduce: Option<PathBuf>,
    /// Equivalence used by --reduce (graphs only; posets use mult)
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    /// Multiply vertices: counts like `a=2,b=3`, followed by the file
    #[arg(long, value_name = "COUNTS")]
    multiply: Option<String>,
    /// Input file for --multiply
    file: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn load(path: &Path) -> Result<Document, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    parse(&text)
}

fn print_certificate(cert: &OddCycleCertificate) {
    println!("NOT-COMPARABILITY");
    println!("cycle {}", cert.walk.join(" "));
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Recognize { file } => cmd_recognize(&file),
        Command::Dimension { file, budget } => cmd_dimension(&file, budget),
        Command::Represent { file, kind, d } => cmd_represent(&file, kind, d),
        Command::Verify {
            structure,
            representation,
            semantics,
            injective,
        } => cmd_verify(&structure, &representation, semantics, injective),
        Command::Transform(args) => cmd_transform(args),
    }
}

fn cmd_recognize(file: &Path) -> Result<u8, CliError> {
    let Document::Graph(g) = load(file)? else {
        return Err(CliError::Usage("recognize expects a graph file".into()));
    };
    match transitive_orient(&g) {
        Ok(o) => {
            println!("COMPARABILITY");
            for (u, v) in o.directed_pairs() {
                println!("> {} {}", g.label(u), g.label(v));
            }
            Ok(0)
        }
        Err(CoreError::NotComparability { certificate }) => {
            print_certificate(&certificate);
            Ok(1)
        }
        Err(e) => Err(CliError::Semantic(e)),
    }
}

/// Poset view of a structure file: posets pass through, graphs are
/// transitively oriented first.
fn load_poset_view(file: &Path) -> Result<(Poset, Graph), CliError> {
    match load(file)? {
        Document::Poset(p) => {
            let g = p.comparability_graph();
            Ok((p, g))
        }
        Document::Graph(g) => match transitive_orient(&g) {
            Ok(o) => {
                let p = o.to_poset().map_err(CliError::Semantic)?;
                Ok((p, g))
            }
            Err(e) => Err(CliError::Semantic(e)),
        },
        other => Err(CliError::Usage(format!(
            "expected a graph or poset file, got `{}`",
            other.kind()
        ))),
    }
}

fn cmd_dimension(file: &Path, budget: Option<usize>) -> Result<u8, CliError> {
    let (p, _) = match load_poset_view(file) {
        Ok(pair) => pair,
        Err(CliError::Semantic(CoreError::NotComparability { certificate })) => {
            print_certificate(&certificate);
            return Ok(1);
        }
        Err(e) => return Err(e),
    };
    let budget = budget.unwrap_or_else(|| default_budget(p.n()));
    let result = dimension(&p, budget).map_err(CliError::Semantic)?;
    println!("dimension {}", result.dim);
    for order in &result.witness {
        println!("L {}", order.labels().join(" "));
    }
    println!("hiraguchi-bound {}", hiraguchi_bound(p.n()));
    Ok(0)
}

fn cmd_represent(file: &Path, kind: RepKind, d: Option<usize>) -> Result<u8, CliError> {
    let (p, g) = load_poset_view(file)?;
    let refuse = || {
        CliError::Semantic(CoreError::InvariantViolation(
            "representation failed self-verification; refusing to emit it".into(),
        ))
    };
    let doc = match kind {
        RepKind::Downset => {
            let fam = downset_representation(&p);
            if !verify_containment_poset(&p, &fam)
                .map_err(CliError::Semantic)?
                .ok
            {
                return Err(refuse());
            }
            Document::Family(fam)
        }
        RepKind::Star => {
            let o = Orientation::from_poset(&p);
            let rep = star_subtree_representation(&o).map_err(CliError::Semantic)?;
            if !verify_containment_graph(&g, &rep)
                .map_err(CliError::Semantic)?
                .ok
            {
                return Err(refuse());
            }
            Document::Star(rep)
        }
        RepKind::Interval => {
            let rep = interval_representation(&p).map_err(CliError::Semantic)?;
            if !verify_containment_poset(&p, &rep)
                .map_err(CliError::Semantic)?
                .ok
            {
                return Err(refuse());
            }
            Document::Intervals(rep)
        }
        RepKind::Box => {
            let d = d.ok_or_else(|| CliError::Usage("--kind box requires --d".into()))?;
            let rep = box_representation(&p, d).map_err(CliError::Semantic)?;
            if !verify_containment_poset(&p, &rep)
                .map_err(CliError::Semantic)?
                .ok
            {
                return Err(refuse());
            }
            Document::Boxes(rep)
        }
    };
    print!("{}", print(&doc));
    Ok(0)
}

fn structure_labels(doc: &Document) -> Result<&[String], CliError> {
    match doc {
        Document::Graph(g) => Ok(g.labels()),
        Document::Poset(p) => Ok(p.labels()),
        other => Err(CliError::Usage(format!(
            "expected a graph or poset structure file, got `{}`",
            other.kind()
        ))),
    }
}

fn report_verdict(labels: &[String], verdict: &Verdict) {
    if verdict.ok {
        println!("OK");
    } else {
        println!("VIOLATIONS {}", verdict.violations.len());
        for v in &verdict.violations {
            println!(
                "! {} {} expected {} observed {}",
                labels[v.u], labels[v.v], v.expected, v.observed
            );
        }
    }
}

fn cmd_verify(
    structure: &Path,
    representation: &Path,
    semantics: Semantics,
    injective: bool,
) -> Result<u8, CliError> {
    let sdoc = load(structure)?;
    let rdoc = load(representation)?;
    let rep: &dyn Representation = match &rdoc {
        Document::Family(f) => f,
        Document::Intervals(r) => r,
        Document::Boxes(b) => b,
        Document::Star(s) => s,
        other => {
            return Err(CliError::Usage(format!(
                "expected a representation file, got `{}`",
                other.kind()
            )))
        }
    };
    let labels = structure_labels(&sdoc)?;
    let verdict = match (semantics, &sdoc) {
        (Semantics::Containment, Document::Poset(p)) => {
            verify_containment_poset(p, rep).map_err(CliError::Semantic)?
        }
        (Semantics::Containment, Document::Graph(g)) => {
            verify_containment_graph(g, rep).map_err(CliError::Semantic)?
        }
        (sem, Document::Graph(g)) => {
            let Document::Family(f) = &rdoc else {
                return Err(CliError::Usage(
                    "intersection, overlap, and disjointedness take a family file".into(),
                ));
            };
            let check: fn(&Graph, &SetFamily) -> containment_core::Result<Verdict> = match sem {
                Semantics::Intersection => verify_intersection,
                Semantics::Overlap => verify_overlap,
                Semantics::Disjointedness => verify_disjointedness,
                Semantics::Containment => unreachable!(),
            };
            check(g, f).map_err(CliError::Semantic)?
        }
        (_, _) => {
            return Err(CliError::Usage(
                "intersection, overlap, and disjointedness apply to graphs".into(),
            ))
        }
    };
    report_verdict(labels, &verdict);
    let mut ok = verdict.ok;
    if injective {
        let report = injectivity_audit(rep);
        println!("injective {}", if report.injective { "yes" } else { "no" });
        for group in &report.duplicate_groups {
            let names: Vec<&str> = group.iter().map(|&i| rep.label_at(i)).collect();
            println!("dup {}", names.join(" "));
        }
        ok = ok && report.injective;
    }
    Ok(if ok { 0 } else { 1 })
}

fn parse_counts(spec: &str) -> Result<HashMap<String, usize>, CliError> {
    let mut counts = HashMap::new();
    for item in spec.split(',').filter(|s| !s.is_empty()) {
        let (label, count) = item
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("bad count `{item}`, use label=count")))?;
        let count: usize = count
            .parse()
            .map_err(|_| CliError::Usage(format!("bad count `{item}`")))?;
        if counts.insert(label.to_string(), count).is_some() {
            return Err(CliError::Usage(format!("label `{label}` counted twice")));
        }
    }
    Ok(counts)
}

fn cmd_transform(args: TransformArgs) -> Result<u8, CliError> {
    let chosen = [
        args.overlap_from_intersection.is_some(),
        args.complement.is_some(),
        args.reduce.is_some(),
        args.multiply.is_some(),
    ]
    .iter()
    .filter(|&&b| b)
    .count();
    if chosen != 1 {
        return Err(CliError::Usage(
            "transform takes exactly one of --overlap-from-intersection, --complement, --reduce, --multiply"
                .into(),
        ));
    }
    let doc = if let Some(path) = &args.overlap_from_intersection {
        let Document::Family(f) = load(path)? else {
            return Err(CliError::Usage(
                "--overlap-from-intersection expects a family file".into(),
            ));
        };
        Document::Family(overlap_from_intersection(&f))
    } else if let Some(path) = &args.complement {
        let Document::Graph(g) = load(path)? else {
            return Err(CliError::Usage("--complement expects a graph file".into()));
        };
        Document::Graph(g.complement())
    } else if let Some(path) = &args.reduce {
        match load(path)? {
            Document::Graph(g) => {
                let mode = match args.mode.unwrap_or(Mode::Mult) {
                    Mode::Mult => ReduceMode::Multiplication,
                    Mode::Exp => ReduceMode::Expansion,
                };
                Document::Graph(g.reduce(mode))
            }
            Document::Poset(p) => {
                if matches!(args.mode, Some(Mode::Exp)) {
                    return Err(CliError::Usage(
                        "poset reduction has no expansion mode".into(),
                    ));
                }
                Document::Poset(p.reduce())
            }
            other => {
                return Err(CliError::Usage(format!(
                    "--reduce expects a graph or poset file, got `{}`",
                    other.kind()
                )))
            }
        }
    } else {
        let counts = parse_counts(args.multiply.as_deref().unwrap())?;
        let path = args
            .file
            .as_ref()
            .ok_or_else(|| CliError::Usage("--multiply needs an input file".into()))?;
        match load(path)? {
            Document::Graph(g) => Document::Graph(g.multiply(&counts).map_err(CliError::Input)?),
            Document::Poset(p) => Document::Poset(p.multiply(&counts).map_err(CliError::Input)?),
            other => {
                return Err(CliError::Usage(format!(
                    "--multiply expects a graph or poset file, got `{}`",
                    other.kind()
                )))
            }
        }
    };
    print!("{}", print(&doc));
    Ok(0)
}
