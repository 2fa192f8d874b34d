//! Command-line surface over the recognition, certification, construction,
//! and cross-check machinery. Exit codes: 0 YES, 1 NO, 2 malformed input,
//! 3 guard violation.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use slashfree::certificates::verify_weak_edge_asteroid;
use slashfree::comparability::{recognize_comparability, verify_transitive, Orientation};
use slashfree::constructions::{bipartite_double, close_both_sides};
use slashfree::graph::{
    complement_simple, decode_graph, is_bigraph_slash_free, is_slash_free_ordering, Bigraph,
    Decoded, Graph, GraphKind, SimpleGraph, VertexOrdering,
};
use slashfree::oracle::{
    crosscheck_enumerate, emit_report, oracle_cocomp_bigraph, oracle_comparability,
    oracle_strong_cocomp, ReportFormat,
};
use slashfree::{Decision, Error};

#[derive(Parser)]
#[command(name = "slashfree", about = "strong cocomparability graph toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print YES or NO for the given graph class.
    Recognize {
        #[arg(long, value_enum)]
        class: Class,
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        file: PathBuf,
    },
    /// Recognize, then print a re-verified certificate block.
    Certify {
        #[arg(long, value_enum)]
        class: Class,
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        file: PathBuf,
    },
    /// Print a derived graph in canonical text form.
    Construct {
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        file: PathBuf,
    },
    /// Run the recognizers side by side over an enumeration.
    Crosscheck {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the guarded brute-force recognizers.
    Oracle {
        #[arg(long, value_enum)]
        class: Class,
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        file: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    StrongCocomp,
    Cocomp,
    Comparability,
    CocompBigraph,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Reflexive,
    Simple,
    Bigraph,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    BipartiteDouble,
    HPlusPlus,
    Complement,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::GuardExceeded(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn kind_from_extension(path: &Path) -> Option<GraphKind> {
    match path.extension()?.to_str()? {
        "g" => Some(GraphKind::Reflexive),
        "sg" => Some(GraphKind::Simple),
        "bg" => Some(GraphKind::Bigraph),
        _ => None,
    }
}

fn load(path: &Path, flag: Option<Kind>, default: GraphKind) -> Result<Decoded, Error> {
    let kind = match flag {
        Some(Kind::Reflexive) => GraphKind::Reflexive,
        Some(Kind::Simple) => GraphKind::Simple,
        Some(Kind::Bigraph) => GraphKind::Bigraph,
        None => kind_from_extension(path).unwrap_or(default),
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Malformed(format!("cannot read {}: {e}", path.display())))?;
    decode_graph(&text, kind)
}

fn want_reflexive(d: Decoded) -> Result<Graph, Error> {
    match d {
        Decoded::Reflexive(g) => Ok(g),
        _ => Err(Error::Malformed("this class expects a reflexive graph".into())),
    }
}

fn want_simple(d: Decoded) -> Result<SimpleGraph, Error> {
    match d {
        Decoded::Simple(g) => Ok(g),
        _ => Err(Error::Malformed("this class expects a simple graph".into())),
    }
}

fn want_bigraph(d: Decoded) -> Result<Bigraph, Error> {
    match d {
        Decoded::Bigraph(h) => Ok(h),
        _ => Err(Error::Malformed("this class expects a bigraph".into())),
    }
}

fn default_kind(class: Class) -> GraphKind {
    match class {
        Class::StrongCocomp | Class::Cocomp => GraphKind::Reflexive,
        Class::Comparability => GraphKind::Simple,
        Class::CocompBigraph => GraphKind::Bigraph,
    }
}

fn verdict(yes: bool) -> u8 {
    println!("{}", if yes { "YES" } else { "NO" });
    u8::from(!yes)
}

fn orientation_block(o: &Orientation) -> String {
    let mut out = format!("orientation {}\n", o.arc_count());
    for (a, b) in o.arcs() {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}

fn ordering_pair_block(rows: &VertexOrdering, cols: &VertexOrdering) -> String {
    format!("rows {rows}\ncols {cols}\n")
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.cmd {
        Cmd::Recognize { class, kind, file } => {
            let d = load(&file, kind, default_kind(class))?;
            let yes = match class {
                Class::StrongCocomp => {
                    slashfree::recognize_strong_cocomparability(&want_reflexive(d)?).is_yes()
                }
                Class::Cocomp => slashfree::recognize_cocomparability(&want_reflexive(d)?),
                Class::Comparability => recognize_comparability(&want_simple(d)?).is_some(),
                Class::CocompBigraph => {
                    slashfree::recognize_cocomparability_bigraph(&want_bigraph(d)?)
                }
            };
            Ok(verdict(yes))
        }
        Cmd::Certify { class, kind, file } => {
            let d = load(&file, kind, default_kind(class))?;
            certify(class, d)
        }
        Cmd::Construct { op, kind, file } => {
            let default = match op {
                Op::BipartiteDouble | Op::Complement => GraphKind::Reflexive,
                Op::HPlusPlus => GraphKind::Bigraph,
            };
            let d = load(&file, kind, default)?;
            let text = match op {
                Op::BipartiteDouble => bipartite_double(&want_reflexive(d)?).encode(),
                Op::HPlusPlus => close_both_sides(&want_bigraph(d)?).encode(),
                Op::Complement => match d {
                    Decoded::Reflexive(g) => complement_simple(&g).encode(),
                    Decoded::Simple(g) => g.reflexive_complement().encode(),
                    Decoded::Bigraph(h) => {
                        let mut c = Bigraph::new(h.nx(), h.ny());
                        for x in 0..h.nx() {
                            for y in 0..h.ny() {
                                if !h.adjacent(x, y) {
                                    c.add_edge(x, y);
                                }
                            }
                        }
                        c.encode()
                    }
                },
            };
            print!("{text}");
            Ok(0)
        }
        Cmd::Crosscheck { n, seed, samples, format } => {
            let report = crosscheck_enumerate(n, samples, seed)?;
            let fmt = match format {
                Format::Text => ReportFormat::Text,
                Format::Structured => ReportFormat::Structured,
            };
            print!("{}", emit_report(&report, fmt));
            Ok(0)
        }
        Cmd::Oracle { class, kind, file } => {
            let d = load(&file, kind, default_kind(class))?;
            oracle(class, d)
        }
    }
}

fn certify(class: Class, d: Decoded) -> Result<u8, Error> {
    match class {
        Class::StrongCocomp => {
            let g = want_reflexive(d)?;
            match slashfree::recognize_strong_cocomparability(&g) {
                Decision::Yes(Some(ord)) => {
                    assert!(is_slash_free_ordering(&g, &ord)?, "unverified ordering; bug");
                    println!("YES");
                    println!("{ord}");
                    Ok(0)
                }
                Decision::Yes(None) => Err(Error::GuardExceeded(format!(
                    "YES certificates come from exhaustive search, limited to n <= {}",
                    slashfree::forcing::ORDERING_SEARCH_BOUND
                ))),
                Decision::No(wea) => {
                    assert!(verify_weak_edge_asteroid(&g, &wea)?, "unverified certificate; bug");
                    println!("NO");
                    print!("{}", wea.to_text());
                    Ok(1)
                }
            }
        }
        Class::Cocomp => {
            let g = want_reflexive(d)?;
            let complement = complement_simple(&g);
            match recognize_comparability(&complement) {
                Some(o) => {
                    assert!(verify_transitive(&complement, &o), "unverified orientation; bug");
                    println!("YES");
                    print!("{}", orientation_block(&o));
                    Ok(0)
                }
                None => Ok(verdict(false)),
            }
        }
        Class::Comparability => {
            let h = want_simple(d)?;
            match recognize_comparability(&h) {
                Some(o) => {
                    assert!(verify_transitive(&h, &o), "unverified orientation; bug");
                    println!("YES");
                    print!("{}", orientation_block(&o));
                    Ok(0)
                }
                None => Ok(verdict(false)),
            }
        }
        Class::CocompBigraph => {
            let h = want_bigraph(d)?;
            let hpp = close_both_sides(&h);
            match slashfree::recognize_strong_cocomparability(&hpp) {
                Decision::Yes(_) => {
                    // the checkable witness is an ordering pair from the
                    // guarded oracle
                    let (rows, cols) = oracle_cocomp_bigraph(&h)?
                        .expect("recognizer and oracle agree");
                    assert!(is_bigraph_slash_free(&h, &rows, &cols)?, "unverified pair; bug");
                    println!("YES");
                    print!("{}", ordering_pair_block(&rows, &cols));
                    Ok(0)
                }
                Decision::No(wea) => {
                    assert!(verify_weak_edge_asteroid(&hpp, &wea)?, "unverified certificate; bug");
                    println!("NO");
                    print!("{}", wea.to_text());
                    Ok(1)
                }
            }
        }
    }
}

fn oracle(class: Class, d: Decoded) -> Result<u8, Error> {
    match class {
        Class::StrongCocomp => {
            let g = want_reflexive(d)?;
            match oracle_strong_cocomp(&g)? {
                Some(ord) => {
                    println!("YES");
                    println!("{ord}");
                    Ok(0)
                }
                None => Ok(verdict(false)),
            }
        }
        Class::Cocomp => {
            let g = want_reflexive(d)?;
            match oracle_comparability(&complement_simple(&g))? {
                Some(o) => {
                    println!("YES");
                    print!("{}", orientation_block(&o));
                    Ok(0)
                }
                None => Ok(verdict(false)),
            }
        }
        Class::Comparability => {
            let h = want_simple(d)?;
            match oracle_comparability(&h)? {
                Some(o) => {
                    println!("YES");
                    print!("{}", orientation_block(&o));
                    Ok(0)
                }
                None => Ok(verdict(false)),
            }
        }
        Class::CocompBigraph => {
            let h = want_bigraph(d)?;
            match oracle_cocomp_bigraph(&h)? {
                Some((rows, cols)) => {
                    println!("YES");
                    print!("{}", ordering_pair_block(&rows, &cols));
                    Ok(0)
                }
                None => Ok(verdict(false)),
            }
        }
    }
}
