//! Argument parsing and command dispatch for the `qf` binary.

pub mod input;
pub mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use qf_core::cocycle::{check_lemma_admissible, cocycle_kernel_basis, CocycleFile};
use qf_core::movie::{lower_bound, weight, MovieFile};
use qf_core::quandle::{enumerate_good_involutions, verify_good_involution, verify_quandle};
use qf_core::{
    count_colorings, enumerate_colorings, parse_diagram, theorem1_report, Error, FamilyParams,
    QuandleFile, Result, SymmetricQuandle,
};

use report::{
    CocycleSolve, CocycleVerify, ColorCount, ColorEnum, Involutions, QuandleVerify, Report,
    TripleValue, WeightReport,
};

/// Symmetric quandle colorings and cocycle weights of surface-link movies.
///
/// Input names are tried as paths first, then inside the directory named by
/// QF_ASSETS, then among the bundled assets (with or without `.json`).
#[derive(Debug, Parser)]
#[command(name = "qf", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Write the report to this file instead of standard output.
    #[arg(short = 'o', long, global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,

    /// Log input resolution to standard error; repeat for more.
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    pub verbose: u8,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check or inspect a quandle table.
    #[command(subcommand)]
    Quandle(QuandleCmd),
    /// Check a 3-cocycle or solve for cocycles over Z_p.
    #[command(subcommand)]
    Cocycle(CocycleCmd),
    /// Count or list colorings of a link diagram.
    #[command(subcommand)]
    Color(ColorCmd),
    /// Weight of a colored movie and the triple point lower bound.
    Weight {
        movie: String,
        #[arg(long)]
        cocycle: String,
        /// Use this symmetric quandle instead of the one the movie names.
        #[arg(long)]
        quandle: Option<String>,
    },
    /// Build and weigh a member of the (k, m) surface-link family.
    Family(FamilyArgs),
}

#[derive(Debug, Subcommand)]
pub enum QuandleCmd {
    /// Check the quandle axioms and the file's involution.
    Verify { file: String },
    /// List every good involution.
    Involutions { file: String },
}

#[derive(Debug, Subcommand)]
pub enum CocycleCmd {
    Verify {
        file: String,
        #[arg(long)]
        quandle: String,
    },
    /// Basis of the Z_p-valued symmetric 3-cocycles.
    Solve {
        #[arg(long)]
        quandle: String,
        #[arg(short = 'p', long = "prime")]
        p: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum ColorCmd {
    Count {
        diagram: String,
        #[arg(long)]
        quandle: String,
    },
    Enum {
        diagram: String,
        #[arg(long)]
        quandle: String,
    },
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(short = 'k')]
    pub k: usize,
    #[arg(short = 'm')]
    pub m: usize,
    /// Genera of the orientable components, comma separated.
    #[arg(long = "g", value_delimiter = ',')]
    pub g: Vec<u64>,
    /// Even genera of the non-orientable components, comma separated.
    #[arg(long = "gprime", value_delimiter = ',')]
    pub gprime: Vec<u64>,
}

struct Ctx {
    verbose: u8,
}

impl Ctx {
    fn load(&self, what: &str, name: &str) -> Result<(String, input::Source)> {
        let (text, src) = input::load(name)?;
        self.log(what, &src);
        Ok((text, src))
    }

    fn log(&self, what: &str, src: &input::Source) {
        if self.verbose > 0 {
            eprintln!("{what}: {src}");
        }
    }

    fn quandle_file(&self, name: &str) -> Result<QuandleFile> {
        QuandleFile::from_json(&self.load("quandle", name)?.0)
    }

    fn symmetric(&self, name: &str) -> Result<SymmetricQuandle> {
        self.quandle_file(name)?.symmetric()
    }
}

pub fn run(cli: &Cli) -> Result<Report> {
    let ctx = Ctx {
        verbose: cli.verbose,
    };
    match &cli.command {
        Command::Quandle(QuandleCmd::Verify { file }) => quandle_verify(&ctx.quandle_file(file)?),
        Command::Quandle(QuandleCmd::Involutions { file }) => {
            let q = ctx.quandle_file(file)?.quandle()?;
            Ok(Report::Involutions(Involutions {
                order: q.order(),
                involutions: enumerate_good_involutions(&q)
                    .iter()
                    .map(|r| r.as_slice().to_vec())
                    .collect(),
            }))
        }
        Command::Cocycle(CocycleCmd::Verify { file, quandle }) => {
            let sq = ctx.symmetric(quandle)?;
            let cf = CocycleFile::from_json(&ctx.load("cocycle", file)?.0)?;
            cocycle_verify(&sq, &cf)
        }
        Command::Cocycle(CocycleCmd::Solve { quandle, p }) => {
            let sq = ctx.symmetric(quandle)?;
            let space = cocycle_kernel_basis(&sq, *p)?;
            let unknowns = sq.order().pow(3);
            Ok(Report::CocycleSolve(CocycleSolve {
                order: sq.order(),
                p: *p,
                unknowns,
                rank: unknowns - space.dimension(),
                dimension: space.dimension(),
                basis: (0..space.dimension())
                    .map(|i| {
                        space
                            .sparse(i)
                            .into_iter()
                            .map(|(triple, value)| TripleValue { triple, value })
                            .collect()
                    })
                    .collect(),
            }))
        }
        Command::Color(cmd) => {
            let (diagram, quandle, list) = match cmd {
                ColorCmd::Count { diagram, quandle } => (diagram, quandle, false),
                ColorCmd::Enum { diagram, quandle } => (diagram, quandle, true),
            };
            let d = parse_diagram(&ctx.load("diagram", diagram)?.0)?;
            let sq = ctx.symmetric(quandle)?;
            if list {
                let colorings = enumerate_colorings(&d, &sq);
                Ok(Report::ColorEnum(ColorEnum {
                    count: colorings.len() as u128,
                    colorings,
                }))
            } else {
                Ok(Report::ColorCount(ColorCount {
                    count: count_colorings(&d, &sq),
                }))
            }
        }
        Command::Weight {
            movie,
            cocycle,
            quandle,
        } => {
            let (text, src) = ctx.load("movie", movie)?;
            let mf = MovieFile::from_json(&text)?;
            let movie = mf.movie(|name| {
                let name = quandle.as_deref().unwrap_or(name);
                let (text, qsrc) = input::load_from(src.dir(), name)?;
                ctx.log("quandle", &qsrc);
                QuandleFile::from_json(&text)?.symmetric()
            })?;
            let cf = CocycleFile::from_json(&ctx.load("cocycle", cocycle)?.0)?;
            let phi = cf.cocycle(movie.symmetric_quandle())?;
            let w = weight(&movie, &phi)?;
            let bound = lower_bound(&w, &phi)?;
            Ok(Report::Weight(WeightReport {
                triple_count: movie.triples().len(),
                weight: w,
                lower_bound: bound,
            }))
        }
        Command::Family(a) => {
            let params = FamilyParams::new(a.k, a.m, a.g.clone(), a.gprime.clone())?;
            Ok(Report::Family(theorem1_report(&params)?))
        }
    }
}

fn quandle_verify(file: &QuandleFile) -> Result<Report> {
    let rho_given = file.rho.is_some();
    let rho = file.rho.clone().unwrap_or_else(|| (0..file.n).collect());
    let mut r = QuandleVerify {
        order: file.n,
        quandle_valid: false,
        rho,
        rho_given,
        involution_valid: None,
        violation: None,
    };
    let q = match verify_quandle(&file.table) {
        Ok(q) => q,
        Err(Error::Violation(v)) => {
            r.violation = Some(v);
            return Ok(Report::QuandleVerify(r));
        }
        Err(e) => return Err(e),
    };
    r.quandle_valid = true;
    match verify_good_involution(&q, &r.rho) {
        Ok(_) => r.involution_valid = Some(true),
        Err(Error::Violation(v)) => {
            r.involution_valid = Some(false);
            r.violation = Some(v);
        }
        Err(e) => return Err(e),
    }
    Ok(Report::QuandleVerify(r))
}

fn cocycle_verify(sq: &SymmetricQuandle, cf: &CocycleFile) -> Result<Report> {
    let mut r = CocycleVerify {
        signature: cf.signature,
        valid: false,
        admissible: None,
        offenders: Vec::new(),
        violation: None,
    };
    match cf.cocycle(sq) {
        Ok(phi) => {
            let adm = check_lemma_admissible(&phi);
            r.valid = true;
            r.admissible = Some(adm.admissible);
            r.offenders = adm
                .offenders
                .into_iter()
                .map(|(triple, value)| TripleValue { triple, value })
                .collect();
        }
        Err(Error::Violation(v)) => r.violation = Some(v),
        Err(e) => return Err(e),
    }
    Ok(Report::CocycleVerify(r))
}

/// Process exit status for a failed run.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_domain_violation() {
        1
    } else {
        2
    }
}
