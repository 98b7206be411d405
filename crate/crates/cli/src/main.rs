mod family;

use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sgt_core::commgraph::{
    chromatic_number, clique_number, commuting_graph, girth, knit_degree, to_dot, to_json,
    ExportFormat,
};
use sgt_core::enumeration::{enumerate, ClassFilter, EnumerationTask};
use sgt_core::semigroup::{parse_labels, parse_stream, write_labels, write_table};
use sgt_core::verify::{self, Suite, VerifyOptions};
use sgt_core::{Error, FiniteSemigroup, GraphMetrics, SizeCaps};

#[derive(Parser)]
#[command(
    name = "sgt",
    version,
    about = "Finite semigroups, commuting graphs and their invariants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a semigroup and write its table (plus a `.labels` sidecar with --out).
    Build {
        /// One of tn, in, sym, alt, cyc, rees, zerounion, product, girth4band, girth2n.
        family: String,
        /// Family parameters, e.g. `3` for sym, `alt4 sym3` for zerounion,
        /// `cyc2 2 2 0,0;0,1` for rees.
        params: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report commuting-graph invariants of each semigroup in a table stream.
    Analyze(AnalyzeArgs),
    /// Rerun the reproduction checks.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 4)]
        max_order: usize,
        /// Range of n, e.g. `3..6`.
        #[arg(long)]
        n: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Stream every semigroup of an order, one table block each.
    Enumerate {
        #[arg(long)]
        order: usize,
        /// any, band, inverse, clifford, completely-regular (cr), completely-simple (cs).
        #[arg(long, default_value = "any")]
        class: String,
        #[arg(long)]
        non_commutative: bool,
        /// Emit every labelled table instead of one per isomorphism class.
        #[arg(long)]
        no_dedup: bool,
        /// Allow order 5.
        #[arg(long)]
        long: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Table file, `-` for stdin, or a spec such as sym3, in3, girth2n4.
    #[arg(default_value = "-")]
    input: String,
    #[arg(long)]
    girth: bool,
    #[arg(long)]
    clique: bool,
    #[arg(long)]
    chromatic: bool,
    #[arg(long)]
    diameter: bool,
    #[arg(long)]
    knit: bool,
    #[arg(long)]
    classify: bool,
    /// Print the commuting graph as dot or json instead of a report line.
    #[arg(long)]
    export: Option<String>,
}

enum Failure {
    Usage(Error),
    Io(io::Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = SizeCaps::from_env();
    let result = match cli.command {
        Command::Build {
            family,
            params,
            out,
        } => build(&family, &params, out.as_deref(), &caps),
        Command::Analyze(args) => analyze(&args, &caps),
        Command::Verify {
            suite,
            max_order,
            n,
            json,
        } => run_verify(&suite, max_order, n.as_deref(), json, caps),
        Command::Enumerate {
            order,
            class,
            non_commutative,
            no_dedup,
            long,
            out,
        } => {
            let task = EnumerationTask {
                order,
                class: match class.parse::<ClassFilter>() {
                    Ok(c) => c,
                    Err(e) => return report(Failure::Usage(e)),
                },
                non_commutative,
                dedup: !no_dedup,
                allow_long: long,
            };
            run_enumerate(&task, out.as_deref())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => report(failure),
    }
}

fn report(failure: Failure) -> ExitCode {
    match failure {
        Failure::Verification => ExitCode::from(1),
        Failure::Usage(e) => {
            eprintln!("sgt: {e}");
            ExitCode::from(2)
        }
        Failure::Io(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Failure::Io(e) => {
            eprintln!("sgt: {e}");
            ExitCode::from(2)
        }
    }
}

fn labels_path(path: &Path) -> PathBuf {
    let mut name = path.as_os_str().to_owned();
    name.push(".labels");
    PathBuf::from(name)
}

fn build(
    family: &str,
    params: &[String],
    out: Option<&Path>,
    caps: &SizeCaps,
) -> Result<(), Failure> {
    let s = family::build(family, params, caps)?;
    match out {
        Some(path) => {
            fs::write(path, write_table(&s))?;
            fs::write(labels_path(path), write_labels(&s))?;
            eprintln!("wrote {} ({} elements)", path.display(), s.order());
        }
        None => io::stdout().write_all(write_table(&s).as_bytes())?,
    }
    Ok(())
}

fn load(input: &str, caps: &SizeCaps) -> Result<Vec<FiniteSemigroup>, Failure> {
    if input == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        return Ok(parse_stream(&text)?);
    }
    let path = Path::new(input);
    if !path.exists() {
        return Ok(vec![family::part(input, caps)?]);
    }
    let mut semigroups = parse_stream(&fs::read_to_string(path)?)?;
    let sidecar = labels_path(path);
    if let ([s], true) = (semigroups.as_mut_slice(), sidecar.exists()) {
        let labels = parse_labels(&fs::read_to_string(&sidecar)?, s.order())?;
        *s = s.clone().with_labels(labels)?;
    }
    Ok(semigroups)
}

fn show(value: Option<usize>) -> String {
    value.map_or_else(|| "none".into(), |v| v.to_string())
}

fn classification(s: &FiniteSemigroup) -> Vec<String> {
    [
        ("commutative", s.is_commutative()),
        ("band", s.is_band()),
        ("group", s.is_group()),
        ("regular", s.is_regular()),
        ("inverse", s.is_inverse_semigroup()),
        ("clifford", s.is_clifford()),
        ("completely-regular", s.is_completely_regular()),
        ("completely-simple", s.is_completely_simple()),
    ]
    .into_iter()
    .map(|(k, v)| format!("{k}={v}"))
    .collect()
}

fn analyze(args: &AnalyzeArgs, caps: &SizeCaps) -> Result<(), Failure> {
    let format = args
        .export
        .as_deref()
        .map(str::parse::<ExportFormat>)
        .transpose()?;
    let semigroups = load(&args.input, caps)?;
    let mut out = BufWriter::new(io::stdout().lock());
    let all = !(args.girth || args.clique || args.chromatic || args.diameter || args.knit);
    for (k, s) in semigroups.iter().enumerate() {
        let name = s
            .name()
            .map_or_else(|| format!("#{}", k + 1), str::to_string);
        let mut fields = vec![format!("order={}", s.order())];
        if args.classify {
            fields.extend(classification(s));
        }
        if s.is_commutative() {
            writeln!(
                out,
                "{name}: {} commutative: no commuting graph",
                fields.join(" ")
            )?;
            continue;
        }
        let g = commuting_graph(s)?;
        match format {
            Some(ExportFormat::Dot) => {
                write!(out, "{}", to_dot(&g, s))?;
                continue;
            }
            Some(ExportFormat::Json) => {
                writeln!(out, "{}", to_json(&g, s, &GraphMetrics::compute(&g)))?;
                continue;
            }
            None => {}
        }
        fields.push(format!("vertices={}", g.vertex_count()));
        fields.push(format!("edges={}", g.edge_count()));
        if all || args.girth {
            fields.push(format!("girth={}", show(girth(&g))));
        }
        if all || args.clique {
            fields.push(format!("clique={}", clique_number(&g)));
        }
        if all || args.chromatic {
            fields.push(format!("chromatic={}", chromatic_number(&g)));
        }
        if all || args.diameter {
            fields.push(format!("diameter={}", show(g.diameter())));
        }
        if args.knit {
            match knit_degree(s)? {
                Some(w) => {
                    let path: Vec<String> = w
                        .vertices
                        .iter()
                        .map(|&x| s.label(x).into_owned())
                        .collect();
                    fields.push(format!("knit={} path={}", w.length(), path.join("~")));
                }
                None => fields.push("knit=none".into()),
            }
        }
        writeln!(out, "{name}: {}", fields.join(" "))?;
    }
    out.flush()?;
    Ok(())
}

fn parse_range(text: &str) -> Result<RangeInclusive<usize>, Error> {
    let bad = || Error::BadParams(format!("bad range {text:?}, expected a..b"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

fn run_verify(
    suite: &str,
    max_order: usize,
    n: Option<&str>,
    json: bool,
    caps: SizeCaps,
) -> Result<(), Failure> {
    let suite: Suite = suite.parse()?;
    let opts = VerifyOptions {
        max_order,
        n_range: n.map(parse_range).transpose()?,
        caps,
    };
    let report = verify::run(suite, &opts)?;
    let mut out = io::stdout().lock();
    if json {
        writeln!(out, "{}", report.to_json())?;
    } else {
        out.write_all(report.to_text().as_bytes())?;
    }
    if report.overall {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run_enumerate(task: &EnumerationTask, out: Option<&Path>) -> Result<(), Failure> {
    let sink: Box<dyn Write> = match out {
        Some(path) => Box::new(fs::File::create(path)?),
        None => Box::new(io::stdout().lock()),
    };
    let mut sink = BufWriter::new(sink);
    let mut failed = None;
    let mut index = 0;
    let count = enumerate(task, |s| {
        if failed.is_some() {
            return;
        }
        index += 1;
        let s = s.clone().with_name(format!("o{}#{index}", s.order()));
        let sep = if index > 1 { "\n" } else { "" };
        if let Err(e) = write!(sink, "{sep}{}", write_table(&s)) {
            failed = Some(e);
        }
    })?;
    if let Some(e) = failed {
        return Err(e.into());
    }
    sink.flush()?;
    eprintln!("{count} semigroups");
    Ok(())
}
