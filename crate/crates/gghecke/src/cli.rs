//! Argument parsing and subcommand dispatch.
//!
//! Exit status is 0 on success, 1 when a verification finds a mismatch and 2
//! for usage errors or any failure to compute or write results.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use gghecke_core::cyclo::{gauss_sum, kloosterman, kloosterman_s, quad_char_sum};
use gghecke_core::hecke::{is_erratum, Reading};
use gghecke_core::intersect::intersect;
use gghecke_core::oracle::DEFAULT_BUDGET;
use gghecke_core::{CartanType, Field, Fq, Hecke};
use rayon::prelude::*;

use crate::config::{self, parse_pick, FieldSpec, Pick};
use crate::format::{self, BasisRecord, ConstantRecord, FieldJson, Format, IntersectRecord, Report, RowJson, SumRecord};
use crate::verify::{check_oracle, check_tables, Mismatch};
use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "gghecke", version, about = "Exact structure constants of Gelfand-Graev Hecke algebras for PGL3(q) and SO5(q)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the standard basis.
    Basis {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Coset representatives of U x U ∩ z U y⁻¹ U for three basis points.
    Intersect {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        select: SelectArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Structure constants S_ij^k for every selected triple.
    Constants {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        select: SelectArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compare the algorithm with the closed-form tables.
    VerifyTables {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        select: SelectArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Use the corrected closed forms instead of the printed ones.
        #[arg(long)]
        corrected: bool,
    },
    /// Compare the algorithm with brute-force coset scans.
    VerifyOracle {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        select: SelectArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Also multiply e·n·e products in the group algebra.
        #[arg(long)]
        algebra: bool,
        /// Maximum number of enumeration steps per brute-force call.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Gauss, Kloosterman and quadratic character sums.
    Sums {
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// `ell:B,a,b` or `ell:B,a,b,a2,b2`, as integer codes.
        #[arg(long)]
        kloosterman: Vec<String>,
        /// `a,b,c` for the sum of φ(ax² + bx + c) over F_q.
        #[arg(long)]
        quadratic: Vec<String>,
    },
}

#[derive(Debug, Clone, Args)]
pub struct FieldArgs {
    /// Field order.
    #[arg(long)]
    pub q: Option<u32>,
    /// Characteristic, used with --f instead of --q.
    #[arg(long)]
    pub p: Option<u32>,
    /// Extension degree.
    #[arg(long)]
    pub f: Option<u32>,
    /// Monic modulus coefficients c0,c1,...,1 overriding the default.
    #[arg(long, value_delimiter = ',')]
    pub modulus: Option<Vec<u32>>,
}

impl FieldArgs {
    fn spec(&self) -> FieldSpec {
        FieldSpec { q: self.q, p: self.p, f: self.f, modulus: self.modulus.clone() }
    }
}

#[derive(Debug, Clone, Args)]
pub struct GroupArgs {
    #[arg(long = "type", value_parser = parse_type)]
    pub ty: CartanType,
    #[command(flatten)]
    pub field: FieldArgs,
}

fn parse_type(s: &str) -> Result<CartanType, String> {
    s.parse().map_err(|e| format!("{e}"))
}

#[derive(Debug, Clone, Args)]
pub struct SelectArgs {
    /// First basis element, `kind` or `kind:params`.
    #[arg(long, visible_alias = "x")]
    pub i: Option<String>,
    /// Second basis element.
    #[arg(long, visible_alias = "y")]
    pub j: Option<String>,
    /// Target basis element.
    #[arg(long, visible_alias = "z")]
    pub k: Option<String>,
}

impl SelectArgs {
    fn picks(&self, field: &Field) -> Result<[Option<Pick>; 3], CliError> {
        let one = |s: &Option<String>| s.as_deref().map(|s| parse_pick(field, s)).transpose();
        Ok([one(&self.i)?, one(&self.j)?, one(&self.k)?])
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Worker threads; defaults to the number of cores.
    #[arg(long)]
    pub jobs: Option<usize>,
}

enum Outcome {
    Done,
    Mismatch,
}

/// Runs the tool on `argv` (including the program name) and returns the exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let jobs = match &cli.command {
        Command::Basis { output, .. }
        | Command::Intersect { output, .. }
        | Command::Constants { output, .. }
        | Command::VerifyTables { output, .. }
        | Command::VerifyOracle { output, .. }
        | Command::Sums { output, .. } => output.jobs,
    };
    let result = match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| CliError::Usage(e.to_string()))
            .and_then(|pool| pool.install(|| execute(&cli.command))),
        None => execute(&cli.command),
    };
    match result {
        Ok(Outcome::Done) => 0,
        Ok(Outcome::Mismatch) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn write(output: &OutputArgs, bytes: &[u8]) -> Result<(), CliError> {
    match &output.out {
        Some(path) => std::fs::write(path, bytes)?,
        None => std::io::stdout().lock().write_all(bytes)?,
    }
    Ok(())
}

fn execute(cmd: &Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Basis { group, output } => {
            let h = config::hecke(group.ty, &group.field.spec())?;
            let g = h.group();
            let records: Vec<_> = config::all_basis(g).iter().map(|b| BasisRecord::new(g, b)).collect();
            write(output, &format::emit(&records, output.format)?)?;
        }
        Command::Intersect { group, select, output } => {
            let g = config::group(group.ty, group.field.spec().build()?)?;
            let [Some(Pick::Elem(x)), Some(Pick::Elem(y)), Some(Pick::Elem(z))] = select.picks(g.field())? else {
                return Err(CliError::Usage("intersect needs three basis points --x/--y/--z as kind:params".into()));
            };
            let reps = intersect(&g, x.point(&g), y.point(&g), z.point(&g))?;
            let records: Vec<_> = reps.iter().map(|r| IntersectRecord::new(&g, r)).collect();
            write(output, &format::emit(&records, output.format)?)?;
        }
        Command::Constants { group, select, output } => {
            let h = config::hecke(group.ty, &group.field.spec())?;
            let g = h.group();
            let triples = config::triples(g, select.picks(g.field())?);
            let records = triples
                .par_iter()
                .map(|[i, j, k]| Ok(ConstantRecord::new(g, i, j, k, &h.structure_constant(i, j, k)?)))
                .collect::<Result<Vec<_>, CliError>>()?;
            write(output, &format::emit(&records, output.format)?)?;
        }
        Command::VerifyTables { group, select, output, corrected } => {
            let h = config::hecke(group.ty, &group.field.spec())?;
            let g = h.group();
            let triples = config::triples(g, select.picks(g.field())?);
            let reading = if *corrected { Reading::Corrected } else { Reading::Published };
            let check = check_tables(&h, &triples, reading)?;
            let rows = check
                .rows
                .iter()
                .map(|(r, (n, bad))| RowJson {
                    row: format!("{}{}{}", r.i, r.j, r.k),
                    checked: *n,
                    mismatched: *bad,
                    erratum: is_erratum(g.cartan_type(), *r),
                })
                .collect();
            let name = if *corrected { "tables (corrected)" } else { "tables (published)" };
            return report(&h, output, name, check.checked, rows, &check.mismatches);
        }
        Command::VerifyOracle { group, select, output, algebra, budget } => {
            let h = config::hecke(group.ty, &group.field.spec())?;
            let g = h.group();
            let triples = config::triples(g, select.picks(g.field())?);
            let check = check_oracle(&h, &triples, *budget, *algebra)?;
            return report(&h, output, "oracle", check.checked, Vec::new(), &check.mismatches);
        }
        Command::Sums { field, output, kloosterman, quadratic } => {
            let k = field.spec().build()?;
            let records = sums(&k, kloosterman, quadratic)?;
            write(output, &format::emit(&records, output.format)?)?;
        }
    }
    Ok(Outcome::Done)
}

fn report(h: &Hecke, output: &OutputArgs, check: &str, checked: u64, rows: Vec<RowJson>, mismatches: &[Mismatch]) -> Result<Outcome, CliError> {
    let g = h.group();
    let records = mismatches.iter().map(|m| m.record(h)).collect::<Result<Vec<_>, _>>()?;
    let bytes = match output.format {
        Format::Json => format::to_json(&Report {
            check: check.to_string(),
            ty: g.cartan_type().to_string(),
            field: FieldJson::from(g.field()),
            checked,
            passed: records.is_empty(),
            rows,
            mismatches: records,
        })?,
        Format::Csv => format::to_csv(&records)?,
    };
    write(output, &bytes)?;
    if mismatches.is_empty() {
        eprintln!("{check}: {checked} constants agree");
        Ok(Outcome::Done)
    } else {
        eprintln!("{check}: {} of {checked} constants disagree", mismatches.len());
        Ok(Outcome::Mismatch)
    }
}

fn parse_codes(k: &Field, s: &str) -> Result<Vec<Fq>, CliError> {
    s.split(',')
        .map(|c| {
            let c: u32 = c.trim().parse().map_err(|_| CliError::Usage(format!("{c:?} is not an integer code")))?;
            Ok(k.elem(c)?)
        })
        .collect()
}

fn sums(k: &Field, kloost: &[String], quadratic: &[String]) -> Result<Vec<SumRecord>, CliError> {
    let mut out = vec![SumRecord::new("gauss", Vec::new(), &gauss_sum(k))];
    for spec in kloost {
        let usage = || CliError::Usage(format!("cannot parse {spec:?}; expected ell:B,a,b or ell:B,a,b,a2,b2"));
        let (ell, rest) = spec.split_once(':').ok_or_else(usage)?;
        let ell: u32 = ell.trim().parse().map_err(|_| usage())?;
        if ell == 0 || !(k.q() - 1).is_multiple_of(ell) {
            return Err(CliError::Usage(format!("ell = {ell} must divide q - 1 = {}", k.q() - 1)));
        }
        let xs = parse_codes(k, rest)?;
        let mut args = vec![ell];
        args.extend(xs.iter().map(|x| x.code()));
        match xs[..] {
            [b, x, y] => out.push(SumRecord::new("kloosterman", args, &kloosterman_s(k, ell, b, x, y))),
            [b, x, y, x2, y2] => out.push(SumRecord::new("kloosterman_generalized", args, &kloosterman(k, ell, b, x, y, x2, y2))),
            _ => return Err(usage()),
        }
    }
    for spec in quadratic {
        let xs = parse_codes(k, spec)?;
        let [a, b, c] = xs[..] else {
            return Err(CliError::Usage(format!("cannot parse {spec:?}; expected a,b,c")));
        };
        out.push(SumRecord::new("quadratic", xs.iter().map(|x| x.code()).collect(), &quad_char_sum(k, a, b, c)));
    }
    Ok(out)
}
