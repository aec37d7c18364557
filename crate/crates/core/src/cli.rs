//! Command-line front end.
//!
//! Exit status: 0 on success, 2 when a named precondition fails, 1 on
//! internal failure or when `verify` finds a mismatching record.

use std::io::Write;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::aqec::{css_aqec, css_subsystem, defset_aqec, euclidean_assc, genpoly_aqec};
use crate::catalog::{
    join_list, parse_entries, search_catalog, verify_record, CatalogEntry, COLUMNS,
};
use crate::cyclic::{bch_construct, rs_construct, CodeSpace, CyclicCode};
use crate::error::{Error, Result};
use crate::polyring::{cyclotomic_cosets, factor_xn_minus_1, Poly};
use crate::weights::{min_weight, DEFAULT_BUDGET};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "cyclic-aqec",
    version,
    about = "Asymmetric quantum codes from cyclic codes"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Codewords an exact weight computation may enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Space {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    q: u32,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// q-ary cyclotomic cosets modulo n.
    Cosets(Space),
    /// Factor x^n - 1 into minimal polynomials.
    Factor(Space),
    /// Build a cyclic code from a defining set or generator polynomial.
    Code {
        #[command(flatten)]
        space: Space,
        #[arg(
            long,
            value_delimiter = ',',
            conflicts_with = "genpoly",
            required_unless_present = "genpoly"
        )]
        defset: Option<Vec<usize>>,
        /// Coefficients, constant term first.
        #[arg(long)]
        genpoly: Option<String>,
    },
    /// Asymmetric quantum codes.
    #[command(subcommand)]
    Aqec(AqecCommand),
    /// Asymmetric subsystem codes from a code and its hull.
    #[command(subcommand)]
    Assc(AsscCommand),
    /// CSS subsystem code with r gauge qudits.
    Subsystem {
        #[command(flatten)]
        space: Space,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        defset1: Vec<usize>,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        defset2: Vec<usize>,
        #[arg(long)]
        r: usize,
    },
    /// Narrow or general BCH code.
    Bch {
        #[command(flatten)]
        space: Space,
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = 1)]
        b: usize,
    },
    /// Reed-Solomon code of length q - 1.
    Rs {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        b: usize,
    },
    /// Exhaustive catalog over all cyclic codes of length n.
    Search(Space),
    /// Recompute every record of a catalog file.
    Verify {
        #[arg(long = "in", value_name = "FILE")]
        input: std::path::PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum AqecCommand {
    Css {
        #[command(flatten)]
        space: Space,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        defset1: Vec<usize>,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        defset2: Vec<usize>,
    },
    Genpoly {
        #[command(flatten)]
        space: Space,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        defset1: Vec<usize>,
        /// Coefficients of f, constant term first.
        #[arg(long)]
        f: String,
    },
    Defset {
        #[command(flatten)]
        space: Space,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        defset1: Vec<usize>,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        t: Vec<usize>,
    },
}

#[derive(Debug, Subcommand)]
enum AsscCommand {
    Euclidean {
        #[command(flatten)]
        space: Space,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        defset: Vec<usize>,
    },
}

/// What a command produced, before formatting.
enum Output {
    Cosets(Vec<Vec<usize>>),
    Factors(Vec<(Vec<usize>, Vec<u32>)>),
    Code(CodeSummary),
    Records(Vec<CatalogEntry>),
    Verify(Vec<crate::catalog::VerifyReport>),
}

#[derive(serde::Serialize)]
struct CodeSummary {
    n: usize,
    q: u32,
    k: usize,
    defset: Vec<usize>,
    generator: Vec<u32>,
    min_weight: Option<usize>,
    exact: bool,
}

/// Parses `argv` (program name first), runs the command and writes results
/// to `out` and diagnostics to `err`. Returns the process exit status.
pub fn run_command<W: Write, E: Write>(argv: &[String], out: &mut W, err: &mut E) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(out, "{}", e.render());
                    if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                        2
                    } else {
                        0
                    }
                }
                ErrorKind::InvalidSubcommand => report(err, &Error::UnknownCommand(first_line(&e))),
                _ => report(err, &Error::BadFlag(first_line(&e))),
            };
        }
    };
    let format = cli.format;
    match execute(cli) {
        Ok(output) => {
            let failed = matches!(&output, Output::Verify(v) if v.iter().any(|r| !r.pass));
            if let Err(e) = render(&output, format, out) {
                return report(err, &e);
            }
            if failed {
                let _ = writeln!(
                    err,
                    "error: VerificationFailed: at least one record does not match"
                );
                return 1;
            }
            0
        }
        Err(e) => report(err, &e),
    }
}

fn first_line(e: &clap::Error) -> String {
    let text = e.render().to_string();
    text.lines()
        .take_while(|l| !l.trim().is_empty() && !l.starts_with("Usage:"))
        .map(|l| l.trim().trim_start_matches("error: "))
        .collect::<Vec<_>>()
        .join(" ")
}

fn report<E: Write>(err: &mut E, e: &Error) -> i32 {
    let _ = writeln!(err, "error: {e}");
    if e.is_internal() {
        1
    } else {
        2
    }
}

fn space_of(s: &Space) -> Result<std::sync::Arc<CodeSpace>> {
    CodeSpace::new(s.n, s.q)
}

fn summarize(code: &CyclicCode, budget: u64) -> Result<CodeSummary> {
    let (min_weight, exact) = if code.is_zero_code() {
        (None, true)
    } else {
        let w = min_weight(code, budget)?;
        (Some(w.value), w.exact)
    };
    Ok(CodeSummary {
        n: code.n(),
        q: code.q(),
        k: code.k(),
        defset: code.defset().to_vec(),
        generator: code.generator().coeffs().to_vec(),
        min_weight,
        exact,
    })
}

fn execute(cli: Cli) -> Result<Output> {
    let budget = cli.budget;
    Ok(match cli.command {
        Command::Cosets(s) => Output::Cosets(
            cyclotomic_cosets(s.n, s.q)?
                .into_iter()
                .map(|c| c.members)
                .collect(),
        ),
        Command::Factor(s) => Output::Factors(
            factor_xn_minus_1(s.n, s.q)?
                .into_iter()
                .map(|(c, p)| (c.members, p.coeffs().to_vec()))
                .collect(),
        ),
        Command::Code {
            space,
            defset,
            genpoly,
        } => {
            let sp = space_of(&space)?;
            let code = match (defset, genpoly) {
                (Some(t), _) => sp.code_from_defset(&t)?,
                (None, Some(g)) => sp.code_from_genpoly(&Poly::parse(sp.field(), &g)?)?,
                (None, None) => {
                    return Err(Error::BadFlag(
                        "one of --defset or --genpoly is required".into(),
                    ))
                }
            };
            Output::Code(summarize(&code, budget)?)
        }
        Command::Aqec(AqecCommand::Css {
            space,
            defset1,
            defset2,
        }) => {
            let sp = space_of(&space)?;
            let c1 = sp.code_from_defset(&defset1)?;
            let c2 = sp.code_from_defset(&defset2)?;
            Output::Records(vec![CatalogEntry::from_aqec(&css_aqec(&c1, &c2, budget)?)])
        }
        Command::Aqec(AqecCommand::Genpoly { space, defset1, f }) => {
            let sp = space_of(&space)?;
            let c1 = sp.code_from_defset(&defset1)?;
            let f = Poly::parse(sp.field(), &f)?;
            Output::Records(vec![CatalogEntry::from_aqec(&genpoly_aqec(
                &c1, &f, budget,
            )?)])
        }
        Command::Aqec(AqecCommand::Defset { space, defset1, t }) => {
            let sp = space_of(&space)?;
            let c1 = sp.code_from_defset(&defset1)?;
            Output::Records(vec![CatalogEntry::from_aqec(&defset_aqec(
                &c1, &t, budget,
            )?)])
        }
        Command::Assc(AsscCommand::Euclidean { space, defset }) => {
            let sp = space_of(&space)?;
            let c1 = sp.code_from_defset(&defset)?;
            let (a, b) = euclidean_assc(&c1, budget)?;
            Output::Records(vec![
                CatalogEntry::from_subsystem(&a),
                CatalogEntry::from_subsystem(&b),
            ])
        }
        Command::Subsystem {
            space,
            defset1,
            defset2,
            r,
        } => {
            let sp = space_of(&space)?;
            let c1 = sp.code_from_defset(&defset1)?;
            let c2 = sp.code_from_defset(&defset2)?;
            Output::Records(vec![CatalogEntry::from_subsystem(&css_subsystem(
                &c1, &c2, r, budget,
            )?)])
        }
        Command::Bch { space, delta, b } => Output::Code(summarize(
            &bch_construct(space.n, space.q, delta, b)?,
            budget,
        )?),
        Command::Rs { q, k, b } => Output::Code(summarize(&rs_construct(q, k, b)?, budget)?),
        Command::Search(s) => Output::Records(search_catalog(s.n, s.q, budget)?),
        Command::Verify { input } => {
            let text = std::fs::read_to_string(&input)
                .map_err(|e| Error::Io(format!("{}: {e}", input.display())))?;
            let entries = parse_entries(&text)?;
            Output::Verify(
                entries
                    .iter()
                    .map(|e| verify_record(e, budget))
                    .collect::<Result<_>>()?,
            )
        }
    })
}

fn csv_out<W: Write>(out: &mut W, header: &[&str], rows: Vec<Vec<String>>) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(&row).map_err(io)?;
    }
    w.flush()?;
    Ok(())
}

fn opt_string<T: ToString>(x: Option<T>) -> String {
    x.map_or_else(String::new, |v| v.to_string())
}

fn render<W: Write>(output: &Output, format: Format, out: &mut W) -> Result<()> {
    match (output, format) {
        (Output::Cosets(cs), Format::Json) => writeln!(out, "{}", json!(cs))?,
        (Output::Cosets(cs), Format::Csv) => csv_out(
            out,
            &["rep", "members"],
            cs.iter()
                .map(|c| vec![c[0].to_string(), join_list(c)])
                .collect(),
        )?,
        (Output::Cosets(cs), Format::Table) => {
            for c in cs {
                writeln!(out, "{:>5}  {{{}}}", c[0], join_list(c))?;
            }
        }

        (Output::Factors(fs), Format::Json) => {
            let v: Vec<_> = fs
                .iter()
                .map(|(c, p)| json!({"coset": c, "poly": p}))
                .collect();
            writeln!(out, "{}", json!(v))?
        }
        (Output::Factors(fs), Format::Csv) => csv_out(
            out,
            &["coset", "poly"],
            fs.iter()
                .map(|(c, p)| vec![join_list(c), join_list(p)])
                .collect(),
        )?,
        (Output::Factors(fs), Format::Table) => {
            for (c, p) in fs {
                writeln!(out, "{{{}}}  {}", join_list(c), join_list(p))?;
            }
        }

        (Output::Code(c), Format::Json) => writeln!(
            out,
            "{}",
            serde_json::to_string(c).expect("summary serializes")
        )?,
        (Output::Code(c), Format::Csv) => csv_out(
            out,
            &["n", "q", "k", "defset", "generator", "min_weight", "exact"],
            vec![vec![
                c.n.to_string(),
                c.q.to_string(),
                c.k.to_string(),
                join_list(&c.defset),
                join_list(&c.generator),
                opt_string(c.min_weight),
                c.exact.to_string(),
            ]],
        )?,
        (Output::Code(c), Format::Table) => {
            let d = match (c.min_weight, c.exact) {
                (Some(d), true) => d.to_string(),
                (Some(d), false) => format!("<= {d}"),
                (None, _) => "-".into(),
            };
            writeln!(out, "[{},{},{}]_{}", c.n, c.k, d, c.q)?;
            writeln!(out, "defset     {{{}}}", join_list(&c.defset))?;
            writeln!(out, "generator  {}", join_list(&c.generator))?;
        }

        (Output::Records(rs), Format::Json) => {
            for r in rs {
                writeln!(out, "{}", r.to_json())?;
            }
        }
        (Output::Records(rs), Format::Csv) => csv_out(
            out,
            &COLUMNS,
            rs.iter().map(CatalogEntry::csv_row).collect(),
        )?,
        (Output::Records(rs), Format::Table) => {
            for r in rs {
                let mut line = format!(
                    "{:<22} {:<10} {:<10}",
                    r.label(),
                    r.construction.as_str(),
                    format!("{:?}", r.kind).to_lowercase()
                );
                line.push_str(&format!(
                    " C1={{{}}} C2={{{}}}",
                    join_list(&r.c1_defset),
                    join_list(&r.c2_defset)
                ));
                if !(r.dx_exact && r.dz_exact) {
                    line.push_str(" (inexact)");
                }
                if let (Some(x), Some(z)) = (r.pure_x, r.pure_z) {
                    line.push_str(&format!(" pure={x}/{z}"));
                }
                writeln!(out, "{}", line.trim_end())?;
            }
        }

        (Output::Verify(reports), Format::Json) => {
            for r in reports {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(r).expect("report serializes")
                )?;
            }
        }
        (Output::Verify(reports), Format::Csv) => csv_out(
            out,
            &["index", "label", "field", "recorded", "recomputed", "match"],
            reports
                .iter()
                .enumerate()
                .flat_map(|(i, r)| {
                    r.fields.iter().map(move |f| {
                        vec![
                            i.to_string(),
                            r.label.clone(),
                            f.field.to_string(),
                            f.recorded.to_string(),
                            f.recomputed.to_string(),
                            f.matches.to_string(),
                        ]
                    })
                })
                .collect(),
        )?,
        (Output::Verify(reports), Format::Table) => {
            for (i, r) in reports.iter().enumerate() {
                writeln!(
                    out,
                    "{:>4}  {:<22} {}",
                    i,
                    r.label,
                    if r.pass { "PASS" } else { "FAIL" }
                )?;
                for f in r.mismatches() {
                    writeln!(
                        out,
                        "      {}: recorded {} recomputed {}",
                        f.field, f.recorded, f.recomputed
                    )?;
                }
            }
        }
    }
    Ok(())
}
