use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use partmod::alternating::{self, AltLabel};
use partmod::branching;
use partmod::classifier::{self, ScanRow, Verdict};
use partmod::error::Error;
use partmod::mullineux;
use partmod::partition::Partition;
use partmod::selftest;
use partmod::specht::{self, DimensionIdentity};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "partmod",
    version,
    about = "Modular partition combinatorics and A_n tensor-product classification"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for scans and sweeps.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Report elapsed time on stderr.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Decide irreducibility of V ⊗ W for A_n (p = 2 or 3).
    Classify {
        #[arg(long)]
        p: usize,
        /// Checked against the label sizes when given.
        #[arg(long)]
        n: Option<usize>,
        /// Label such as `5,3,1+`, `4,1,1-` or `8,1`.
        #[arg(long, allow_hyphen_values = true)]
        lhs: String,
        #[arg(long, allow_hyphen_values = true)]
        rhs: String,
    },
    /// Classify every pair of labels for one n or a range of n.
    Scan {
        #[arg(long)]
        p: usize,
        /// Single n, or the start of the range when --max-n is given.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        /// Keep only these verdicts: trivial, notirreducible, irreducible, open.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
    /// i-signatures, normal and conormal nodes.
    Nodes {
        #[arg(long)]
        p: usize,
        #[arg(allow_hyphen_values = true)]
        partition: String,
    },
    /// Mullineux image and symbol.
    Mullineux {
        #[arg(long)]
        p: usize,
        #[arg(allow_hyphen_values = true)]
        partition: String,
    },
    /// Gram-rank dimensions and dimension identities.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// Run the built-in invariant suites.
    Selftest {
        /// Run only the suites with these tags.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// dim D^λ as the Gram rank of the Specht module.
    Dim {
        #[arg(long)]
        p: usize,
        #[arg(allow_hyphen_values = true)]
        partition: String,
    },
    /// Two-row restriction identities for all two-row partitions up to --max-n.
    VerifyBranching {
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
    /// Dimension identities for every irreducible classifier row up to --max-n.
    VerifyClassifier {
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 9)]
        max_n: usize,
    },
}

enum Failure {
    Usage(String),
    Compute(String),
    /// The reader went away; not an error.
    Closed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Compute(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            Failure::Closed
        } else {
            Failure::Compute(format!("output: {e}"))
        }
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        match e.into_kind() {
            csv::ErrorKind::Io(io) => io.into(),
            other => Failure::Compute(format!("output: {other:?}")),
        }
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

/// One output record in every format.
struct Record {
    payload: Value,
    csv: Vec<Vec<String>>,
    pretty: String,
}

struct Output {
    command: String,
    header: Vec<&'static str>,
    records: Vec<Record>,
}

impl Output {
    fn new(command: String, header: &[&'static str]) -> Self {
        Output {
            command,
            header: header.to_vec(),
            records: Vec::new(),
        }
    }

    fn push(&mut self, payload: impl Serialize, csv: Vec<String>, pretty: String) -> Outcome<()> {
        let payload = serde_json::to_value(payload).map_err(|e| Failure::Compute(e.to_string()))?;
        self.records.push(Record {
            payload,
            csv: vec![csv],
            pretty,
        });
        Ok(())
    }

    fn write(&self, format: Format) -> Outcome<()> {
        let stdout = io::stdout();
        let mut out = stdout.lock();
        match format {
            Format::Pretty => {
                for r in &self.records {
                    writeln!(out, "{}", r.pretty)?;
                }
            }
            Format::Json => {
                for r in &self.records {
                    let line = json!({
                        "schema_version": SCHEMA_VERSION,
                        "command": self.command,
                        "payload": r.payload,
                    });
                    writeln!(out, "{line}")?;
                }
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.header)?;
                for row in self.records.iter().flat_map(|r| &r.csv) {
                    w.write_record(row)?;
                }
                w.flush()?;
            }
        }
        Ok(())
    }
}

fn parse_partition(text: &str) -> Outcome<Partition> {
    text.parse::<Partition>().map_err(Failure::from)
}

fn opt(x: Option<impl ToString>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn classification_record(out: &mut Output, row: &ScanRow) -> Outcome<()> {
    let c = &row.classification;
    let citations: Vec<&str> = c.citations.iter().map(|t| t.tag()).collect();
    let mut pretty = format!(
        "p={} n={}  E^{} x E^{}  {:?}",
        row.p, row.n, row.lhs, row.rhs, c.verdict
    );
    if let Some(product) = &c.product {
        pretty.push_str(&format!("  -> E^{product}"));
    }
    if let Some(partner) = &c.mullineux_partner {
        pretty.push_str(&format!(" (= E^{partner})"));
    }
    pretty.push_str(&format!("  [{}]", citations.join(", ")));
    if let Some(r) = &c.report {
        pretty.push_str(&format!(
            "\n    normal nodes of {}: {} (bound {}), product height in [{}, {}]",
            r.other, r.normal_node_count, r.bound, r.product_height_min, r.product_height_max
        ));
    }
    let csv = vec![
        row.p.to_string(),
        row.n.to_string(),
        row.lhs.to_string(),
        row.rhs.to_string(),
        format!("{:?}", c.verdict),
        opt(c.product.as_ref()),
        opt(c.mullineux_partner.as_ref()),
        citations.join(";"),
    ];
    out.push(row, csv, pretty)
}

const CLASSIFY_HEADER: &[&str] = &[
    "p",
    "n",
    "lhs",
    "rhs",
    "verdict",
    "product",
    "mullineux_partner",
    "citations",
];

fn classify(command: String, p: usize, n: Option<usize>, lhs: &str, rhs: &str) -> Outcome<Output> {
    let v = AltLabel::parse(lhs, p)?;
    let w = AltLabel::parse(rhs, p)?;
    let n = n.unwrap_or(v.size());
    let classification = classifier::classify(p, n, &v, &w)?;
    let row = ScanRow {
        p,
        n,
        lhs: v,
        rhs: w,
        classification,
    };
    let mut out = Output::new(command, CLASSIFY_HEADER);
    classification_record(&mut out, &row)?;
    Ok(out)
}

fn scan(
    command: String,
    p: usize,
    n: Option<usize>,
    max_n: Option<usize>,
    only: &[String],
) -> Outcome<Output> {
    let range = match (n, max_n) {
        (Some(n), None) => n..=n,
        (Some(n), Some(m)) => n..=m,
        (None, Some(m)) => 5..=m,
        (None, None) => return Err(Failure::Usage("scan needs --n or --max-n".into())),
    };
    let filter = only
        .iter()
        .map(|t| {
            Verdict::from_token(t).ok_or_else(|| {
                Failure::Usage(format!(
                    "unknown verdict `{t}`; expected trivial, notirreducible, irreducible or open"
                ))
            })
        })
        .collect::<Outcome<Vec<_>>>()?;
    let mut out = Output::new(command, CLASSIFY_HEADER);
    for n in range {
        for row in classifier::classify_all(p, n)? {
            if filter.is_empty() || filter.contains(&row.classification.verdict) {
                classification_record(&mut out, &row)?;
            }
        }
    }
    Ok(out)
}

fn nodes(command: String, p: usize, text: &str) -> Outcome<Output> {
    let lambda = parse_partition(text)?;
    let reports = branching::signatures(&lambda, p)?;
    let normal = branching::normal_count(&lambda, p)?;
    let conormal = branching::conormal_count(&lambda, p)?;
    let js = branching::is_js(&lambda, p)?;
    let mut out = Output::new(
        command,
        &[
            "partition",
            "p",
            "residue",
            "signature",
            "reduced",
            "epsilon",
            "phi",
            "good",
            "cogood",
        ],
    );
    let mut pretty = vec![format!(
        "{lambda} at p={p}: {normal} normal, {conormal} conormal, JS: {js}"
    )];
    let mut rows = Vec::new();
    for r in &reports {
        pretty.push(format!(
            "  i={}  signature {:<8} reduced {:<6} eps={} phi={} good {} cogood {}",
            r.residue,
            display_word(&r.word()),
            display_word(&r.reduced_word()),
            r.epsilon,
            r.phi,
            r.good.map_or("-".into(), |n| n.to_string()),
            r.cogood.map_or("-".into(), |n| n.to_string()),
        ));
        rows.push(vec![
            lambda.to_string(),
            p.to_string(),
            r.residue.to_string(),
            r.word(),
            r.reduced_word(),
            r.epsilon.to_string(),
            r.phi.to_string(),
            opt(r.good),
            opt(r.cogood),
        ]);
    }
    let payload = json!({
        "partition": lambda,
        "p": p,
        "normal_count": normal,
        "conormal_count": conormal,
        "js": js,
        "residues": reports.iter().map(|r| json!({
            "residue": r.residue,
            "signature": r.word(),
            "reduced": r.reduced_word(),
            "epsilon": r.epsilon,
            "phi": r.phi,
            "good": r.good,
            "cogood": r.cogood,
            "normal_nodes": r.normal_nodes(),
            "conormal_nodes": r.conormal_nodes(),
        })).collect::<Vec<_>>(),
    });
    out.records.push(Record {
        payload,
        csv: rows,
        pretty: pretty.join("\n"),
    });
    Ok(out)
}

fn display_word(w: &str) -> &str {
    if w.is_empty() {
        "(empty)"
    } else {
        w
    }
}

fn mullineux_cmd(command: String, p: usize, text: &str) -> Outcome<Output> {
    let lambda = parse_partition(text)?;
    let image = mullineux::mullineux(&lambda, p)?;
    let symbol = mullineux::mullineux_symbol(&lambda, p)?;
    let fixed = image == lambda;
    let splits = alternating::splits(&lambda, p)?;
    let mut out = Output::new(command, &["partition", "p", "image", "fixed", "symbol"]);
    out.push(
        json!({
            "partition": lambda,
            "p": p,
            "image": image,
            "fixed": fixed,
            "splits": splits,
            "symbol": symbol,
        }),
        vec![
            lambda.to_string(),
            p.to_string(),
            image.to_string(),
            fixed.to_string(),
            symbol.to_string(),
        ],
        format!("{lambda}^M = {image} at p={p}  symbol {symbol}  fixed: {fixed}  splits: {splits}"),
    )?;
    Ok(out)
}

fn identity_output(command: String, ids: &[DimensionIdentity]) -> Outcome<(Output, usize)> {
    let mut out = Output::new(command, &["statement", "lhs", "rhs", "holds"]);
    let mut failed = 0;
    for id in ids {
        failed += usize::from(!id.holds);
        out.push(
            id,
            vec![
                id.statement.clone(),
                id.lhs.to_string(),
                id.rhs.to_string(),
                id.holds.to_string(),
            ],
            format!(
                "{}  {}  ({} vs {})",
                if id.holds { "ok  " } else { "FAIL" },
                id.statement,
                id.lhs,
                id.rhs
            ),
        )?;
    }
    Ok((out, failed))
}

fn oracle(command: String, sub: &OracleCommand) -> Outcome<(Output, usize)> {
    match sub {
        OracleCommand::Dim { p, partition } => {
            let lambda = parse_partition(partition)?;
            let cert = specht::gram_rank(&lambda, *p)?;
            let mut out = Output::new(command, &["partition", "p", "syt", "rank"]);
            out.push(
                &cert,
                vec![
                    cert.partition.to_string(),
                    cert.p.to_string(),
                    cert.syt.to_string(),
                    cert.rank.to_string(),
                ],
                format!(
                    "dim D^({}) = {} at p={} ({} standard tableaux)",
                    cert.partition, cert.rank, cert.p, cert.syt
                ),
            )?;
            Ok((out, 0))
        }
        OracleCommand::VerifyBranching { p, max_n } => {
            identity_output(command, &specht::two_row_sweep(*p, *max_n)?)
        }
        OracleCommand::VerifyClassifier { p, max_n } => {
            identity_output(command, &specht::classifier_sweep(*p, *max_n)?)
        }
    }
}

fn run_selftest(command: String, only: &[String]) -> Outcome<(Output, usize)> {
    let suites: Vec<&selftest::Suite> = if only.is_empty() {
        selftest::SUITES.iter().collect()
    } else {
        only.iter()
            .map(|t| {
                selftest::find(t).ok_or_else(|| Failure::Usage(format!("unknown suite `{t}`")))
            })
            .collect::<Outcome<_>>()?
    };
    let mut out = Output::new(command, &["tag", "passed", "checked", "failures"]);
    let mut failed = 0;
    for suite in suites {
        let o = suite.run();
        eprintln!("{}: {:.2}s", o.tag, o.seconds);
        failed += usize::from(!o.passed());
        let mut pretty = format!(
            "{}  {:<22} {:>7} checks  {}",
            if o.passed() { "PASS" } else { "FAIL" },
            o.tag,
            o.checked,
            o.title
        );
        for f in &o.failures {
            pretty.push_str(&format!("\n      {f}"));
        }
        out.push(
            &o,
            vec![
                o.tag.to_string(),
                o.passed().to_string(),
                o.checked.to_string(),
                o.failure_count.to_string(),
            ],
            pretty,
        )?;
    }
    Ok((out, failed))
}

fn run(cli: &Cli, command: String) -> Outcome<()> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(Failure::Usage("--jobs must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Failure::Compute(e.to_string()))?;
    }
    let format = if cli.json { Format::Json } else { cli.format };
    let (output, failed) = match &cli.command {
        Command::Classify { p, n, lhs, rhs } => (classify(command, *p, *n, lhs, rhs)?, 0),
        Command::Scan { p, n, max_n, only } => (scan(command, *p, *n, *max_n, only)?, 0),
        Command::Nodes { p, partition } => (nodes(command, *p, partition)?, 0),
        Command::Mullineux { p, partition } => (mullineux_cmd(command, *p, partition)?, 0),
        Command::Oracle { command: sub } => oracle(command, sub)?,
        Command::Selftest { only } => run_selftest(command, only)?,
    };
    output.write(format)?;
    if failed > 0 {
        return Err(Failure::Compute(format!("{failed} check(s) failed")));
    }
    Ok(())
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let command = args[1..].join(" ");
    let start = Instant::now();
    let result = run(&cli, command);
    if cli.timing {
        eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    }
    match result {
        Ok(()) | Err(Failure::Closed) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
