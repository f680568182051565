//! Command-line front end. Exit codes: 0 success, 1 usage or parameter
//! error, 2 input error, 3 disagreement found by `oracle --check`.

use std::ffi::OsString;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::alpha::{self, Alpha};
use crate::bench;
use crate::bounded::{longest_bounded, lpf_bounded, lprf_bounded};
use crate::dbf::build_dbf;
use crate::oracle::{oracle_compute, OracleOutput, OracleParams, ProblemId};
use crate::periodicity::{boundary_squares, centered_squares, compute_runs, local_periods, SquareMode};
use crate::positional::{lpf_positional, lprf_positional, prev_factor_links};
use crate::{build_index, Error, GapArray, GappedStructure, Kind, Text, TextIndex};

#[derive(Debug, Parser)]
#[command(name = "gapped", version, about = "Longest gapped repeats and palindromes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Io {
    /// Input file, `-` for stdin.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "raw")]
    pub format: InputFormat,
    #[arg(long, value_enum, default_value = "tsv")]
    pub output: OutputFormat,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Add the reconstructed structure (left arm start, gap) to each row.
    #[arg(long)]
    pub emit_witnesses: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum InputFormat {
    Raw,
    Fasta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Tsv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum KindArg {
    Repeat,
    Palindrome,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Repeat => Kind::Repeat,
            KindArg::Palindrome => Kind::Palindrome,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    ShortestEnd,
    LongestEnd,
    ShortestStart,
    LongestStart,
}

impl From<ModeArg> for SquareMode {
    fn from(m: ModeArg) -> SquareMode {
        match m {
            ModeArg::ShortestEnd => SquareMode::ShortestEnd,
            ModeArg::LongestEnd => SquareMode::LongestEnd,
            ModeArg::ShortestStart => SquareMode::ShortestStart,
            ModeArg::LongestStart => SquareMode::LongestStart,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum What {
    Runs,
    Sc,
    Lp,
    BoundarySquares,
    #[value(name = "L", alias = "l")]
    L,
}

#[derive(Debug, Args)]
pub struct GapArgs {
    #[arg(long)]
    pub g: Option<usize>,
    #[arg(long = "G")]
    pub big_g: Option<usize>,
    /// Whitespace-separated g(1..n).
    #[arg(long)]
    pub gap_file: Option<PathBuf>,
    #[arg(long)]
    pub alpha: Option<Alpha>,
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Gap length in [g, G).
    Bounded {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        g: usize,
        #[arg(long = "G")]
        big_g: usize,
    },
    /// Gap length at least g(i), from --gap-file or a constant --g.
    Positional {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, conflicts_with = "g")]
        gap_file: Option<PathBuf>,
        #[arg(long)]
        g: Option<usize>,
    },
    /// |uv| <= alpha |u|.
    Alpha {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        alpha: Alpha,
    },
    /// One longest structure, under --g/--G or --alpha.
    Longest {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, requires = "big_g", conflicts_with = "alpha")]
        g: Option<usize>,
        #[arg(long = "G", requires = "g")]
        big_g: Option<usize>,
        #[arg(long, required_unless_present = "g")]
        alpha: Option<Alpha>,
    },
    /// Runs, square arrays and previous-factor links.
    Analyze {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum)]
        what: What,
        #[arg(long, value_enum, default_value = "shortest-end")]
        mode: ModeArg,
    },
    /// Recompute a problem by brute force; with --check compare with the
    /// fast path.
    Oracle {
        #[command(flatten)]
        io: Io,
        /// 1a 1b 2a 2b 3a 3b runs sc lp boundary-squares L
        #[arg(long)]
        problem: String,
        #[command(flatten)]
        params: GapArgs,
        #[arg(long)]
        check: bool,
    },
    /// Timing table over generated inputs.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [1024usize, 4096, 16384])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value = "tsv")]
        output: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// The fast-path counterpart of [`oracle_compute`].
pub fn fast_compute(problem: ProblemId, idx: &TextIndex, params: &OracleParams) -> crate::Result<OracleOutput> {
    let n = idx.len();
    let need = |x: Option<usize>, name: &str| x.ok_or_else(|| Error::Param(format!("missing {name}")));
    let gaps = || params.gaps.as_deref().ok_or_else(|| Error::Param("missing gap function".into()));
    let alpha = || params.alpha.ok_or_else(|| Error::Param("missing alpha".into()));
    let runs = || compute_runs(idx);
    Ok(match problem {
        ProblemId::P1a => OracleOutput::Array(lprf_bounded(idx, need(params.g, "g")?, need(params.big_g, "G")?)?),
        ProblemId::P1b => {
            let (g, big_g) = (need(params.g, "g")?, need(params.big_g, "G")?);
            OracleOutput::Array(lpf_bounded(idx, &build_dbf(idx), g, big_g)?)
        }
        ProblemId::P2a => OracleOutput::Array(lprf_positional(idx, gaps()?)?),
        ProblemId::P2b => OracleOutput::Array(lpf_positional(idx, gaps()?)?),
        ProblemId::P3a => OracleOutput::Array(alpha::lpal_alpha(idx, alpha()?)?),
        ProblemId::P3b => OracleOutput::Array(alpha::lrep_alpha(idx, alpha()?)?),
        ProblemId::Runs => OracleOutput::Runs(runs()),
        ProblemId::Sc => OracleOutput::Values(centered_squares(n, &runs())),
        ProblemId::Lp => OracleOutput::Values(local_periods(n, &runs())),
        ProblemId::BoundarySquares => {
            let mode = params.square_mode.ok_or_else(|| Error::Param("missing square mode".into()))?;
            OracleOutput::Values(boundary_squares(n, &runs(), mode))
        }
        ProblemId::L => OracleOutput::Links(prev_factor_links(idx)),
    })
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Input(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Input(_) => Failure::Input(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Input(e.to_string())
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(()) => 0,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            1
        }
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            2
        }
        Err(Failure::Mismatch) => 3,
    }
}

struct Record {
    id: Option<String>,
    text: Text,
}

fn read_input(path: &Path) -> Result<Vec<u8>, Failure> {
    let mut buf = Vec::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_end(&mut buf)?;
    } else {
        buf = std::fs::read(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(buf)
}

fn read_records(io: &Io) -> Result<Vec<Record>, Failure> {
    let data = read_input(&io.input)?;
    match io.format {
        InputFormat::Raw => {
            let end = data.iter().rposition(|c| !matches!(c, b'\n' | b'\r')).map_or(0, |p| p + 1);
            Ok(vec![Record { id: None, text: Text::from_bytes(&data[..end])? }])
        }
        InputFormat::Fasta => {
            let text = String::from_utf8_lossy(&data);
            let mut out = Vec::new();
            let mut cur: Option<(String, Vec<u8>)> = None;
            let mut finish = |cur: Option<(String, Vec<u8>)>| -> Result<(), Failure> {
                if let Some((id, seq)) = cur {
                    let t = Text::from_bytes(&seq).map_err(|_| Failure::Input(format!("record '{id}' is empty")))?;
                    out.push(Record { id: Some(id), text: t });
                }
                Ok(())
            };
            for line in text.lines() {
                let line = line.trim();
                if let Some(h) = line.strip_prefix('>') {
                    finish(cur.take())?;
                    cur = Some((h.split_whitespace().next().unwrap_or("").to_string(), Vec::new()));
                } else if !line.is_empty() && !line.starts_with(';') {
                    let Some((_, seq)) = cur.as_mut() else {
                        return Err(Failure::Input("sequence data before the first FASTA header".into()));
                    };
                    seq.extend(line.bytes().filter(|c| !c.is_ascii_whitespace()).map(|c| c.to_ascii_uppercase()));
                }
            }
            finish(cur.take())?;
            if out.is_empty() {
                return Err(Failure::Input("no FASTA records".into()));
            }
            Ok(out)
        }
    }
}

fn read_gaps(path: &Path, n: usize) -> Result<Vec<usize>, Failure> {
    let data = read_input(path)?;
    let gaps = String::from_utf8_lossy(&data)
        .split_whitespace()
        .map(|s| s.parse::<usize>().map_err(|_| Failure::Input(format!("bad gap value '{s}'"))))
        .collect::<Result<Vec<_>, _>>()?;
    if gaps.len() != n {
        return Err(Failure::Input(format!("gap file has {} values, text has {n}", gaps.len())));
    }
    if let Some(g) = gaps.iter().find(|&&g| g == 0 || g > n) {
        return Err(Failure::Input(format!("gap value {g} outside [1, {n}]")));
    }
    Ok(gaps)
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(
            std::fs::File::create(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn signed(x: Option<usize>) -> i64 {
    x.map_or(-1, |v| v as i64)
}

/// One output block: a table with named columns.
struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<i64>>,
}

impl Table {
    fn array(a: &GapArray, kind: Kind, emit: bool) -> Table {
        let mut columns = vec!["pos", "value", "witness"];
        if emit {
            columns.extend(["left_start", "gap"]);
        }
        let rows = (1..=a.len())
            .map(|i| {
                let mut row = vec![i as i64, a.values[i - 1] as i64, signed(a.witness[i - 1])];
                if emit {
                    let s = a.structure_at(i, kind);
                    row.push(signed(s.map(|s| s.left_start)));
                    row.push(signed(s.map(|s| s.gap_len)));
                }
                row
            })
            .collect();
        Table { columns, rows }
    }

    fn output(o: &OracleOutput, kind: Kind, emit: bool) -> Table {
        match o {
            OracleOutput::Array(a) => Table::array(a, kind, emit),
            OracleOutput::Values(v) => Table {
                columns: vec!["pos", "value"],
                rows: v.iter().enumerate().map(|(i, &x)| vec![i as i64 + 1, x as i64]).collect(),
            },
            OracleOutput::Runs(r) => Table {
                columns: vec!["start", "end", "period"],
                rows: r.iter().map(|r| vec![r.start as i64, r.end as i64, r.period as i64]).collect(),
            },
            OracleOutput::Links(l) => Table {
                columns: vec!["pos", "value"],
                rows: l.iter().enumerate().map(|(i, &x)| vec![i as i64 + 1, signed(x)]).collect(),
            },
        }
    }

    fn structure(s: Option<GappedStructure>) -> Table {
        Table {
            columns: vec!["left_start", "arm", "gap", "right_start"],
            rows: s
                .map(|s| vec![s.left_start as i64, s.arm_len as i64, s.gap_len as i64, s.right_start() as i64])
                .into_iter()
                .collect(),
        }
    }

    fn json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|r| Value::Object(self.columns.iter().zip(r).map(|(c, v)| (c.to_string(), json!(v))).collect()))
                .collect(),
        )
    }
}

fn emit(io: &Io, blocks: Vec<(Option<String>, Table)>) -> Result<(), Failure> {
    let mut w = sink(&io.out)?;
    match io.output {
        OutputFormat::Tsv => {
            for (id, t) in &blocks {
                if let Some(id) = id {
                    writeln!(w, ">{id}")?;
                }
                writeln!(w, "{}", t.columns.join("\t"))?;
                for r in &t.rows {
                    let cells: Vec<String> = r.iter().map(i64::to_string).collect();
                    writeln!(w, "{}", cells.join("\t"))?;
                }
            }
        }
        OutputFormat::Json => {
            let objs: Vec<Value> = blocks
                .iter()
                .map(|(id, t)| match id {
                    Some(id) => json!({ "id": id, "rows": t.json() }),
                    None => json!({ "rows": t.json() }),
                })
                .collect();
            let v = if objs.len() == 1 && blocks[0].0.is_none() { objs[0].clone() } else { Value::Array(objs) };
            writeln!(w, "{v}")?;
        }
    }
    w.flush()?;
    Ok(())
}

fn per_record(io: &Io, mut f: impl FnMut(&Text) -> Result<Table, Failure>) -> Result<(), Failure> {
    let mut blocks = Vec::new();
    for r in read_records(io)? {
        blocks.push((r.id, f(&r.text)?));
    }
    emit(io, blocks)
}

fn execute(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Bounded { io, kind, g, big_g } => {
            let kind = Kind::from(kind);
            per_record(&io, |t| {
                let idx = build_index(t);
                let a = match kind {
                    Kind::Palindrome => lprf_bounded(&idx, g, big_g)?,
                    Kind::Repeat => lpf_bounded(&idx, &build_dbf(&idx), g, big_g)?,
                };
                Ok(Table::array(&a, kind, io.emit_witnesses))
            })
        }
        Command::Positional { io, kind, gap_file, g } => {
            let kind = Kind::from(kind);
            if gap_file.is_none() && g.is_none() {
                return Err(Failure::Usage("positional needs --gap-file or --g".into()));
            }
            per_record(&io, |t| {
                let n = t.len();
                let gaps = match (&gap_file, g) {
                    (Some(p), _) => read_gaps(p, n)?,
                    (None, Some(g)) => vec![g; n],
                    (None, None) => unreachable!(),
                };
                let idx = build_index(t);
                let a = match kind {
                    Kind::Palindrome => lprf_positional(&idx, &gaps)?,
                    Kind::Repeat => lpf_positional(&idx, &gaps)?,
                };
                Ok(Table::array(&a, kind, io.emit_witnesses))
            })
        }
        Command::Alpha { io, kind, alpha } => {
            let kind = Kind::from(kind);
            per_record(&io, |t| {
                let idx = build_index(t);
                let a = match kind {
                    Kind::Palindrome => alpha::lpal_alpha(&idx, alpha)?,
                    Kind::Repeat => alpha::lrep_alpha(&idx, alpha)?,
                };
                Ok(Table::array(&a, kind, io.emit_witnesses))
            })
        }
        Command::Longest { io, kind, g, big_g, alpha } => {
            let kind = Kind::from(kind);
            per_record(&io, |t| {
                let idx = build_index(t);
                let s = match (g, big_g, alpha) {
                    (Some(g), Some(big_g), _) => longest_bounded(&idx, g, big_g, kind)?,
                    (_, _, Some(a)) => alpha::longest_alpha(&idx, a, kind)?,
                    _ => return Err(Failure::Usage("longest needs --g and --G, or --alpha".into())),
                };
                Ok(Table::structure(s))
            })
        }
        Command::Analyze { io, what, mode } => {
            let problem = match what {
                What::Runs => ProblemId::Runs,
                What::Sc => ProblemId::Sc,
                What::Lp => ProblemId::Lp,
                What::BoundarySquares => ProblemId::BoundarySquares,
                What::L => ProblemId::L,
            };
            let params = OracleParams { square_mode: Some(mode.into()), ..Default::default() };
            per_record(&io, |t| {
                let out = fast_compute(problem, &build_index(t), &params)?;
                Ok(Table::output(&out, Kind::Repeat, false))
            })
        }
        Command::Oracle { io, problem, params, check } => {
            let id: ProblemId = problem.parse()?;
            let kind = match id {
                ProblemId::P1a | ProblemId::P2a | ProblemId::P3a => Kind::Palindrome,
                _ => Kind::Repeat,
            };
            let mut mismatch = false;
            let result = per_record(&io, |t| {
                let op = OracleParams {
                    g: params.g,
                    big_g: params.big_g,
                    gaps: match &params.gap_file {
                        Some(p) => Some(read_gaps(p, t.len())?),
                        None => params.g.filter(|_| params.big_g.is_none()).map(|g| vec![g; t.len()]),
                    },
                    alpha: params.alpha,
                    square_mode: params.mode.map(Into::into),
                };
                let want = oracle_compute(id, t, &op)?;
                if check {
                    let got = fast_compute(id, &build_index(t), &op)?;
                    let diffs = differences(&want, &got);
                    for d in &diffs {
                        eprintln!("mismatch: {d}");
                    }
                    mismatch |= !diffs.is_empty();
                }
                Ok(Table::output(&want, kind, io.emit_witnesses))
            });
            result?;
            if mismatch {
                return Err(Failure::Mismatch);
            }
            Ok(())
        }
        Command::Bench { sizes, seed, output, out } => {
            let rows = bench::run_bench(&sizes, seed)?;
            let mut w = sink(&out)?;
            match output {
                OutputFormat::Tsv => {
                    writeln!(w, "family\tn\tproblem\tseconds")?;
                    for r in &rows {
                        writeln!(w, "{}\t{}\t{}\t{:.6}", r.family, r.n, r.problem, r.seconds)?;
                    }
                }
                OutputFormat::Json => writeln!(w, "{}", json!(rows))?,
            }
            w.flush()?;
            Ok(())
        }
    }
}

/// Human-readable differences between oracle and fast outputs; witnesses
/// are not compared since ties may be broken differently.
pub fn differences(want: &OracleOutput, got: &OracleOutput) -> Vec<String> {
    let values = |o: &OracleOutput| -> Vec<i64> {
        match o {
            OracleOutput::Array(a) => a.values.iter().map(|&v| v as i64).collect(),
            OracleOutput::Values(v) => v.iter().map(|&v| v as i64).collect(),
            OracleOutput::Links(l) => l.iter().map(|&x| signed(x)).collect(),
            OracleOutput::Runs(_) => Vec::new(),
        }
    };
    if let (OracleOutput::Runs(a), OracleOutput::Runs(b)) = (want, got) {
        let mut out: Vec<String> = a.iter().filter(|r| !b.contains(r)).map(|r| format!("missing run {r:?}")).collect();
        out.extend(b.iter().filter(|r| !a.contains(r)).map(|r| format!("extra run {r:?}")));
        return out;
    }
    let (a, b) = (values(want), values(got));
    if a.len() != b.len() {
        return vec![format!("length {} vs {}", a.len(), b.len())];
    }
    (0..a.len()).filter(|&i| a[i] != b[i]).map(|i| format!("pos {}: oracle {} fast {}", i + 1, a[i], b[i])).collect()
}
