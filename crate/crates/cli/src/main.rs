use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use affine_abacus::oracle::enumerate_quotient;
use affine_abacus::poset::poset_dot;
use affine_abacus::registry::{all_representations, length_method, length_methods, representation};
use affine_abacus::render::{render, RenderOptions};
use affine_abacus::{Abacus, ElementDescriptor, Family, GroupContext};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "abacus", version, about = "Convert, enumerate and draw affine Weyl group quotient elements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Group {
    /// One of C~/C, B~/B, B~/D, D~/D (also accepted: cc, bb, bd, dd)
    #[arg(long)]
    family: Family,
    /// Rank n
    #[arg(long)]
    rank: usize,
}

#[derive(Args)]
struct Input {
    /// Representation of VALUE: window, levels, core, bounded, word or root
    #[arg(long, default_value = "window")]
    from: String,
    /// The element, e.g. "-11,-9,-1,8,16,18" or "(8,8,5*,4)"
    value: String,
}

#[derive(Subcommand)]
enum Command {
    /// Convert an element between representations
    Convert {
        #[command(flatten)]
        group: Group,
        #[command(flatten)]
        input: Input,
        /// Target representation
        #[arg(long)]
        to: String,
        /// Print {"ctx":…, "<to>":…} instead of plain text
        #[arg(long)]
        json: bool,
    },
    /// Print every element up to a length, one per line
    Enumerate {
        #[command(flatten)]
        group: Group,
        #[arg(long)]
        max_len: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: ListFormat,
    },
    /// Draw an element
    Render {
        #[command(flatten)]
        group: Group,
        #[command(flatten)]
        input: Input,
        /// abacus, core, bounded or peel-trace
        #[arg(long)]
        render: String,
        /// text or svg
        #[arg(long, default_value = "text")]
        format: String,
        /// Leave core boxes blank
        #[arg(long)]
        no_residues: bool,
    },
    /// Export the Bruhat poset as a DOT graph
    Poset {
        #[command(flatten)]
        group: Group,
        #[arg(long)]
        max_len: usize,
    },
    /// Coxeter length by one or all methods
    Length {
        #[command(flatten)]
        group: Group,
        #[command(flatten)]
        input: Input,
        /// abacus, core, rimwalk, word, bfs or all
        #[arg(long, default_value = "all")]
        method: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Json,
    Text,
}

enum Failure {
    Usage(String),
    Invalid(affine_abacus::Error),
    Io(io::Error),
}

impl From<affine_abacus::Error> for Failure {
    fn from(e: affine_abacus::Error) -> Self {
        Failure::Invalid(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn context(g: &Group) -> Result<GroupContext, Failure> {
    Ok(GroupContext::new(g.family, g.rank)?)
}

fn parse_input(ctx: GroupContext, input: &Input) -> Result<ElementDescriptor, Failure> {
    let rep = representation(&input.from).map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(rep.parse(ctx, &input.value)?)
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    match cli.command {
        Command::Convert { group, input, to, json } => {
            let ctx = context(&group)?;
            let el = parse_input(ctx, &input)?;
            representation(&to).map_err(|e| Failure::Usage(e.to_string()))?;
            let converted = affine_abacus::convert(&el, &to)?;
            if json {
                writeln!(out, "{}", converted.to_json())?;
            } else {
                writeln!(out, "{converted}")?;
            }
        }
        Command::Enumerate { group, max_len, format } => {
            let ctx = context(&group)?;
            let table = enumerate_quotient(ctx, max_len);
            for w in table.elements() {
                let a = Abacus::from_permutation(w);
                match format {
                    ListFormat::Json => writeln!(out, "{}", all_representations(&a)?)?,
                    ListFormat::Text => {
                        let el = ElementDescriptor::Levels(a);
                        let cols: Vec<String> = ["window", "bounded", "word"]
                            .iter()
                            .map(|t| affine_abacus::convert(&el, t).map(|c| c.to_string()))
                            .collect::<Result<_, _>>()?;
                        writeln!(out, "{}\t{}", table.length(w).unwrap_or_default(), cols.join("\t"))?;
                    }
                }
            }
        }
        Command::Render { group, input, render: what, format, no_residues } => {
            let ctx = context(&group)?;
            let el = parse_input(ctx, &input)?;
            let opts = RenderOptions { residues: !no_residues };
            write!(out, "{}", render(&el, &what, &format, opts)?)?;
        }
        Command::Poset { group, max_len } => {
            let ctx = context(&group)?;
            write!(out, "{}", poset_dot(ctx, max_len)?)?;
        }
        Command::Length { group, input, method } => {
            let ctx = context(&group)?;
            let el = parse_input(ctx, &input)?;
            let a = el.abacus()?;
            if method == "all" {
                for m in length_methods() {
                    writeln!(out, "{}\t{}", m.name(), m.length(&a)?)?;
                }
            } else {
                let m = length_method(&method).map_err(|e| Failure::Usage(e.to_string()))?;
                writeln!(out, "{}", m.length(&a)?)?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out).and_then(|()| out.flush().map_err(Failure::Io));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Invalid(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
