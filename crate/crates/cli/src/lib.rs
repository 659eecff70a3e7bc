//! The `hopf` command line: verbs, check suites and reports.

pub mod acceptance;
pub mod report;
pub mod suites;

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use exactlin::Scalar;
use liftings::{LiftingParams, Variant};
use thiserror::Error;

pub use report::{CheckRecord, Report, SuiteTiming, Timing};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Parser)]
#[command(
    name = "hopf",
    about = "Exact verification of a 16-dimensional Hopf algebra, its double, modules and liftings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Degree cap for Nichols ranks and for presentation files.
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, conflicts_with = "table")]
    pub json: bool,
    /// Plain table (the default).
    #[arg(long, global = true)]
    pub table: bool,
    /// Seed for randomized sign mutations.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Presentation file to build instead of a named family.
    #[arg(long, global = true)]
    pub presentation: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// H: axioms, antipode, dual generators, automorphisms.
    VerifyKashina,
    /// The 256-dimensional double.
    Double {
        #[arg(long)]
        verify: bool,
    },
    /// Simple modules of the double.
    Simples {
        #[arg(long)]
        census: bool,
    },
    /// Yetter-Drinfeld structures on the simples.
    Yd {
        /// Also check the twist isomorphisms between catalog modules.
        #[arg(long)]
        catalog: bool,
    },
    /// Nichols algebras of catalog modules.
    Nichols {
        /// A catalog name such as M1, V3, W1_100 or a sum M1+V1.
        #[arg(long)]
        module: Option<String>,
    },
    /// Liftings: build one family, or sweep all of them.
    Lifting {
        /// Family identifier, e.g. U1_1 or U6.
        family: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        zero_compare: bool,
        /// Also verify the Hopf axioms.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t = VariantArg::AsWritten)]
        variant: VariantArg,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        eta: Option<String>,
    },
    /// Every suite.
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    AsWritten,
    Completed,
    Corrected,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::AsWritten => Variant::AsWritten,
            VariantArg::Completed => Variant::Completed,
            VariantArg::Corrected => Variant::Corrected,
        }
    }
}

/// Named, timed groups of checks.
pub struct Suites {
    pub checks: Vec<CheckRecord>,
    pub timing: Timing,
    start: Instant,
}

impl Suites {
    pub fn new() -> Suites {
        Suites { checks: Vec::new(), timing: Timing::default(), start: Instant::now() }
    }

    pub fn run(&mut self, name: &str, f: impl FnOnce() -> Vec<CheckRecord>) {
        let t = Instant::now();
        self.checks.extend(f());
        self.timing.suites.push(SuiteTiming { suite: name.into(), millis: t.elapsed().as_millis() as u64 });
    }

    pub fn try_run(
        &mut self,
        name: &str,
        f: impl FnOnce() -> Result<Vec<CheckRecord>, CliError>,
    ) -> Result<(), CliError> {
        let t = Instant::now();
        self.checks.extend(f()?);
        self.timing.suites.push(SuiteTiming { suite: name.into(), millis: t.elapsed().as_millis() as u64 });
        Ok(())
    }

    pub fn finish(mut self, command: Vec<String>) -> Report {
        self.timing.total_millis = self.start.elapsed().as_millis() as u64;
        Report { command, checks: self.checks, timing: self.timing }
    }
}

impl Default for Suites {
    fn default() -> Self {
        Suites::new()
    }
}

/// Everything `hopf all` runs.
pub fn run_all(s: &mut Suites, seed: Option<u64>) {
    s.run("verify-kashina", suites::kashina_suite);
    s.run("double", || suites::double_suite(true));
    s.run("simples", || suites::simples_suite(true));
    s.run("yd", || suites::yd_suite(true));
    s.run("nichols", || suites::nichols_suite(6));
    s.run("lifting", suites::lifting_grid);
    s.run("zero-compare", suites::zero_compare_all);
    s.run("isomorphisms", || {
        let mut v = suites::iso_checks();
        v.push(suites::var7_check());
        v
    });
    s.run("mutation", || suites::mutation_checks(seed));
}

fn scalar(name: &str, s: &Option<String>) -> Result<Option<Scalar>, CliError> {
    s.as_ref()
        .map(|v| v.parse::<Scalar>().map_err(|_| CliError::Usage(format!("--{name}: cannot parse `{v}` as a scalar"))))
        .transpose()
}

fn read_presentation(path: &PathBuf, cap: Option<usize>) -> Result<presentations::Presentation, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let mut p = presentations::parse(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    if let Some(c) = cap {
        p.cap = c;
    }
    Ok(p)
}

/// Executes a parsed command line.
pub fn execute(cli: &Cli, command: Vec<String>) -> Result<Report, CliError> {
    let mut s = Suites::new();
    match &cli.command {
        Command::VerifyKashina => s.run("verify-kashina", suites::kashina_suite),
        Command::Double { verify } => s.run("double", || suites::double_suite(*verify)),
        Command::Simples { census } => s.run("simples", || suites::simples_suite(*census)),
        Command::Yd { catalog } => s.run("yd", || suites::yd_suite(*catalog)),
        Command::Nichols { module } => {
            let cap = cli.cap.unwrap_or(6);
            match module {
                Some(m) => s.try_run("nichols", || suites::nichols_module(m, cap).map_err(CliError::Usage))?,
                None => s.run("nichols", || suites::nichols_suite(cap)),
            }
        }
        Command::Lifting { family, all, zero_compare, verify, variant, lambda, mu, alpha, beta, gamma, eta } => {
            if let Some(path) = &cli.presentation {
                if family.is_some() || *all {
                    return Err(CliError::Usage("--presentation replaces the family argument and --all".into()));
                }
                let pres = read_presentation(path, cli.cap)?;
                let seeded = cli.seed.map(|seed| suites::seeded_mutation(&pres, seed));
                s.run("presentation", || suites::presentation_checks(pres, *verify));
                if let Some(r) = seeded {
                    s.run("mutation", || vec![r]);
                }
            } else if *all {
                if family.is_some() {
                    return Err(CliError::Usage("give a family or --all, not both".into()));
                }
                if *zero_compare {
                    s.run("zero-compare", suites::zero_compare_all);
                } else {
                    s.run("lifting", suites::lifting_grid);
                    s.run("isomorphisms", || {
                        let mut v = suites::iso_checks();
                        v.push(suites::var7_check());
                        v
                    });
                    s.run("mutation", || suites::mutation_checks(cli.seed));
                }
            } else {
                let Some(f) = family else {
                    return Err(CliError::Usage("lifting needs a family, --all or --presentation".into()));
                };
                let fam = liftings::family(f).map_err(|e| CliError::Usage(e.to_string()))?;
                if *zero_compare {
                    s.run("zero-compare", || vec![suites::zero_compare(fam.id)]);
                } else {
                    let mut values = Vec::new();
                    for (n, v) in [
                        ("lambda", lambda),
                        ("mu", mu),
                        ("alpha", alpha),
                        ("beta", beta),
                        ("gamma", gamma),
                        ("eta", eta),
                    ] {
                        if let Some(x) = scalar(n, v)? {
                            values.push((n, x));
                        }
                    }
                    let p = LiftingParams::new(fam.id, &values).with_variant((*variant).into());
                    p.validate().map_err(|e| CliError::Usage(e.to_string()))?;
                    s.run("lifting", || suites::lifting_single(&p, *verify));
                    if let Some(seed) = cli.seed {
                        let pres = fam.presentation(&p.values, false).map_err(|e| CliError::Usage(e.to_string()))?;
                        s.run("mutation", || vec![suites::seeded_mutation(&pres, seed)]);
                    }
                }
            }
        }
        Command::All => run_all(&mut s, cli.seed),
    }
    Ok(s.finish(command))
}

/// Parses `argv`, runs, writes the report; returns the exit code
/// (0 all checks pass, 1 a check failed, 2 usage error).
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let command: Vec<String> = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let report = match execute(&cli, command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("hopf: {e}");
            return 2;
        }
    };
    let text = if cli.json { report.to_json() } else { report.to_table() };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("hopf: cannot write {}: {e}", path.display());
                return 2;
            }
            for f in report.failures() {
                eprintln!("FAIL {}: {}", f.name, f.witness);
            }
        }
        None => print!("{text}"),
    }
    report.exit_code()
}
