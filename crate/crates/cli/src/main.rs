use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use pfbraid_core::bijection::{in_vector, reconstruct};
use pfbraid_core::braid::{apply_word, generator_order, orbit_graph, BraidWord};
use pfbraid_core::dbasis::{enumerate_recursive, DistinguishedBasis};
use pfbraid_core::noncrossing::{chain_to_basis, enumerate_chains, lambda_chain, pi_chain, NCChain};
use pfbraid_core::parking::{enumerate_nondecreasing, enumerate_parking, parking_count, catalan, ParkingFunction};
use pfbraid_core::quiver::{hom_ext_table, is_exceptional_sequence, modules_of};
use pfbraid_core::render::{render, Format, RenderSpec, Target};
use pfbraid_core::verify::{self, Suite};

#[derive(Parser)]
#[command(name = "pfbraid", version, about = "Parking functions and distinguished bases of A_n")]
struct Cli {
    /// Read input JSON from this file instead of stdin.
    #[arg(long = "in", global = true)]
    input: Option<PathBuf>,
    /// Write output here instead of stdout.
    #[arg(long = "out", global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    PfToBasis,
    BasisToPf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Pf,
    Bases,
    Nondecreasing,
    Chains,
}

impl Kind {
    fn default_limit(self) -> usize {
        match self {
            Kind::Pf | Kind::Bases => 8,
            Kind::Nondecreasing => 12,
            Kind::Chains => 6,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Convert between a parking function {"f"} and a basis {"basis"}.
    Convert {
        #[arg(long, value_enum)]
        direction: Direction,
    },
    /// Stream objects of rank n as JSON lines, or count them.
    Enumerate {
        n: usize,
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long)]
        count: bool,
        /// Largest n accepted (default 8 for pf/bases, 12 for nondecreasing, 6 for chains).
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Apply a braid word (e.g. "1 -2 1") left to right.
    Braid {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// The action graph on PF_n.
    Orbit {
        n: usize,
        #[arg(long, default_value = "dot")]
        format: Format,
        /// Also draw the inverse generators.
        #[arg(long)]
        inverse: bool,
    },
    Render {
        #[arg(long)]
        format: Format,
        #[arg(long)]
        target: Target,
    },
    /// Hom and Ext^1 between the interval modules of a basis.
    Quiver,
    /// Maximal chain of non-crossing partitions of a basis, or the basis of {"chain"}.
    Nc,
    /// Run the invariant checks at rank n; exit status 1 if any fails.
    Verify {
        n: usize,
        #[arg(default_value = "all")]
        suite: Suite,
        /// Flip the sign of <e_1, e_2> in the Seifert oracle.
        #[arg(long)]
        inject_fault: bool,
    },
}

#[derive(Debug)]
struct CliError {
    code: &'static str,
    message: String,
}

impl From<pfbraid_core::Error> for CliError {
    fn from(e: pfbraid_core::Error) -> Self {
        CliError { code: e.code(), message: e.to_string() }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError { code: "io_error", message: e.to_string() }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError { code: "parse_error", message: e.to_string() }
    }
}

fn fail(code: &'static str, message: impl Into<String>) -> CliError {
    CliError { code, message: message.into() }
}

/// Other fields (e.g. from a previous command's output) are ignored.
#[derive(Deserialize)]
struct Input {
    n: Option<usize>,
    f: Option<Vec<usize>>,
    basis: Option<Vec<[usize; 2]>>,
    chain: Option<Vec<Vec<Vec<usize>>>>,
}

impl Input {
    fn check_n(&self, len: usize) -> Result<(), CliError> {
        match self.n {
            Some(n) if n != len => Err(fail("rank_mismatch", format!("\"n\" is {n} but the input has length {len}"))),
            _ => Ok(()),
        }
    }

    fn basis(&self) -> Result<DistinguishedBasis, CliError> {
        if let Some(intervals) = &self.basis {
            self.check_n(intervals.len())?;
            return Ok(DistinguishedBasis::from_intervals(intervals.len(), intervals)?);
        }
        if let Some(c) = &self.chain {
            let chain = NCChain::from_blocks(c.clone())?;
            self.check_n(chain.n())?;
            return Ok(chain_to_basis(&chain));
        }
        Ok(reconstruct(&self.pf()?))
    }

    fn pf(&self) -> Result<ParkingFunction, CliError> {
        match &self.f {
            Some(f) => {
                self.check_n(f.len())?;
                Ok(ParkingFunction::new(f.clone())?)
            }
            None if self.basis.is_some() || self.chain.is_some() => Ok(in_vector(&self.basis()?)),
            None => Err(fail("missing_field", "input needs \"f\", \"basis\" or \"chain\"")),
        }
    }
}

struct Io {
    input: Option<PathBuf>,
    out: Box<dyn Write>,
}

impl Io {
    fn read(&self) -> Result<Input, CliError> {
        let text = match &self.input {
            Some(p) => fs::read_to_string(p)?,
            None => {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s)?;
                s
            }
        };
        Ok(serde_json::from_str(&text)?)
    }

    fn line(&mut self, v: &Value) -> Result<(), CliError> {
        writeln!(self.out, "{v}")?;
        Ok(())
    }
}

fn convert(io: &mut Io, direction: Direction) -> Result<(), CliError> {
    let input = io.read()?;
    let out = match direction {
        Direction::PfToBasis => {
            let f = match &input.f {
                Some(_) => input.pf()?,
                None => return Err(fail("missing_field", "pf-to-basis needs \"f\"")),
            };
            let b = reconstruct(&f);
            json!({ "n": f.n(), "basis": b, "verified": in_vector(&b) == f })
        }
        Direction::BasisToPf => {
            if input.basis.is_none() {
                return Err(fail("missing_field", "basis-to-pf needs \"basis\""));
            }
            let b = input.basis()?;
            let f = in_vector(&b);
            json!({ "n": b.n(), "f": f, "verified": reconstruct(&f) == b })
        }
    };
    io.line(&out)
}

fn enumerate(io: &mut Io, n: usize, kind: Kind, count: bool, limit: Option<usize>) -> Result<(), CliError> {
    let limit = limit.unwrap_or(kind.default_limit());
    if n > limit {
        return Err(fail("limit_exceeded", format!("n = {n} exceeds the limit {limit}; raise it with --limit")));
    }
    if n == 0 {
        return Err(fail("precondition", "n must be at least 1"));
    }
    if count {
        let c: u64 = match kind {
            Kind::Pf => enumerate_parking(n)?.count() as u64,
            Kind::Bases if n <= 6 => enumerate_recursive(n).len() as u64,
            Kind::Bases => enumerate_parking(n)?.filter(|f| in_vector(&reconstruct(f)) == *f).count() as u64,
            Kind::Nondecreasing => enumerate_nondecreasing(n)?.count() as u64,
            Kind::Chains => enumerate_chains(n).len() as u64,
        };
        debug_assert_eq!(c, if matches!(kind, Kind::Nondecreasing) { catalan(n) } else { parking_count(n) });
        writeln!(io.out, "{c}")?;
        return Ok(());
    }
    match kind {
        Kind::Pf => {
            for f in enumerate_parking(n)? {
                io.line(&json!({ "n": n, "f": f }))?;
            }
        }
        Kind::Bases => {
            for f in enumerate_parking(n)? {
                io.line(&json!({ "n": n, "basis": reconstruct(&f) }))?;
            }
        }
        Kind::Nondecreasing => {
            for f in enumerate_nondecreasing(n)? {
                io.line(&json!({ "n": n, "f": f }))?;
            }
        }
        Kind::Chains => {
            for c in enumerate_chains(n) {
                io.line(&json!({ "n": n, "chain": c }))?;
            }
        }
    }
    Ok(())
}

fn braid(io: &mut Io, word: &str) -> Result<(), CliError> {
    let word: BraidWord = word.parse()?;
    let input = io.read()?;
    let b = input.basis()?;
    word.check_rank(b.n())?;
    let orders = (1..b.n()).map(|k| generator_order(&b, k)).collect::<pfbraid_core::Result<Vec<_>>>()?;
    let out = apply_word(&b, &word)?;
    io.line(&json!({
        "n": b.n(),
        "word": word.to_string(),
        "basis": out,
        "f": in_vector(&out),
        "orders": orders,
    }))
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let out: Box<dyn Write> = match &cli.output {
        Some(p) => Box::new(BufWriter::new(fs::File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let mut io = Io { input: cli.input, out };
    let mut ok = true;
    match cli.command {
        Command::Convert { direction } => convert(&mut io, direction)?,
        Command::Enumerate { n, kind, count, limit } => enumerate(&mut io, n, kind, count, limit)?,
        Command::Braid { word } => braid(&mut io, &word)?,
        Command::Orbit { n, format, inverse } => {
            let text = match format {
                Format::Dot => orbit_graph(n)?.to_dot(inverse),
                Format::Json => format!("{}\n", serde_json::to_string(&orbit_graph(n)?)?),
                other => return Err(RenderSpec::new(other, Target::Orbit).unwrap_err().into()),
            };
            io.out.write_all(text.as_bytes())?;
        }
        Command::Render { format, target } => {
            let spec = RenderSpec::new(format, target)?;
            let input = io.read()?;
            let b = match (target, &input) {
                (Target::Orbit, Input { n: Some(n), f: None, basis: None, chain: None, .. }) => {
                    reconstruct(&ParkingFunction::new(vec![1; *n])?)
                }
                _ => input.basis()?,
            };
            io.out.write_all(render(spec, &b)?.as_bytes())?;
        }
        Command::Quiver => {
            let b = io.read()?.basis()?;
            let t = hom_ext_table(&b);
            let exceptional = is_exceptional_sequence(&modules_of(&b));
            io.line(&json!({ "n": b.n(), "basis": b, "hom": t.hom, "ext": t.ext, "kinds": t.kinds, "exceptional": exceptional }))?;
        }
        Command::Nc => {
            let b = io.read()?.basis()?;
            let c = pi_chain(&b);
            io.line(&json!({ "n": b.n(), "basis": b, "chain": c, "lambda": lambda_chain(&c), "f": in_vector(&b) }))?;
        }
        Command::Verify { n, suite, inject_fault } => {
            let report = verify::run(n, suite, verify::Options { inject_fault })?;
            ok = report.passed;
            io.line(&serde_json::to_value(&report)?)?;
        }
    }
    io.out.flush()?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let message = e.message.replace('\n', " ");
            eprintln!("error[{}]: {message}", e.code);
            ExitCode::from(2)
        }
    }
}
