use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use affine_shi::export::{element_rows, ideal_rows, regions_csv, roots_json, roots_text, to_csv};
use affine_shi::small_low::{enumerate_low, CertificateMode};
use affine_shi::verify::{default_bound, run_suite, Suite, VerifyConfig};
use affine_shi::{AffineWeylGroup, Automaton, CartanType, Family, RegionEnumeration, RootSystem};

#[derive(Parser, Debug)]
#[command(name = "affine-shi", version, about = "Low elements, Shi regions and reduced-word automata of affine Weyl groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Family letter (A-G).
    #[arg(long = "type", short = 't')]
    family: char,
    #[arg(long, short = 'r')]
    rank: usize,
    /// Length bound for exhaustive checks (default depends on the rank).
    #[arg(long)]
    bound: Option<usize>,
    #[arg(long, short = 'f', value_enum)]
    format: Option<Format>,
    /// Write the main output here instead of stdout.
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
    /// Cap on the number of elements visited by enumerations.
    #[arg(long, env = "AFFINE_SHI_BUDGET", default_value_t = affine_shi::regions::DEFAULT_BUDGET)]
    budget: usize,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum What {
    Low,
    Regions,
    Dominant,
    Ideals,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum SuiteArg {
    MainTheorem,
    DescentWalls,
    Recurrences,
    Automaton,
    Tables,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::MainTheorem => Suite::MainTheorem,
            SuiteArg::DescentWalls => Suite::DescentWalls,
            SuiteArg::Recurrences => Suite::Recurrences,
            SuiteArg::Automaton => Suite::Automaton,
            SuiteArg::Tables => Suite::Tables,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Positive roots, Coxeter number, exponents and rank-2 subsystems.
    Roots(Common),
    /// Enumerate low elements, Shi regions, dominant regions or root poset ideals.
    Enumerate {
        #[arg(value_enum)]
        what: What,
        #[command(flatten)]
        common: Common,
    },
    /// Run a verification suite; exits nonzero if any check fails.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[command(flatten)]
        common: Common,
    },
    /// Build the reduced-word automaton and export it.
    Automaton(Common),
}

impl Common {
    fn cartan_type(&self) -> Result<CartanType> {
        let family = Family::from_letter(self.family.to_ascii_uppercase())
            .with_context(|| format!("unknown family {:?}", self.family))?;
        Ok(CartanType::new(family, self.rank)?)
    }

    fn format(&self, allowed: &[Format], default: Format) -> Result<Format> {
        let f = self.format.unwrap_or(default);
        if !allowed.contains(&f) {
            bail!("format {f:?} is not available for this command (use one of {allowed:?})");
        }
        Ok(f)
    }

    fn bound(&self) -> usize {
        self.bound.unwrap_or_else(|| default_bound(self.rank))
    }

    /// Writes the main output; returns whether it went to stdout.
    fn emit(&self, text: &str) -> Result<bool> {
        match &self.output {
            Some(path) => {
                fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
                Ok(false)
            }
            None => {
                let mut out = std::io::stdout().lock();
                out.write_all(text.as_bytes())?;
                if !text.ends_with('\n') {
                    out.write_all(b"\n")?;
                }
                Ok(true)
            }
        }
    }

    /// Summary lines go to stdout unless machine-readable output is there.
    fn summary(&self, format: Format, on_stdout: bool, line: &str) {
        if on_stdout && format != Format::Text {
            eprintln!("{line}");
        } else {
            println!("{line}");
        }
    }
}

fn cmd_roots(c: &Common) -> Result<ExitCode> {
    let sys = RootSystem::new(c.cartan_type()?);
    let format = c.format(&[Format::Text, Format::Json], Format::Text)?;
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&roots_json(&sys))?,
        _ => roots_text(&sys),
    };
    let stdout = c.emit(&text)?;
    c.summary(
        format,
        stdout,
        &format!("{} positive roots, h = {}", sys.num_positive(), sys.coxeter_number()),
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_enumerate(what: What, c: &Common) -> Result<ExitCode> {
    let group = AffineWeylGroup::new(c.cartan_type()?);
    let format = c.format(&[Format::Text, Format::Json, Format::Csv], Format::Text)?;
    let (text, count, label) = match what {
        What::Low => {
            let low = enumerate_low(&group, CertificateMode::SuffixClosure, c.budget)?;
            let rows = element_rows(&group, &low);
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&rows)?,
                Format::Csv => to_csv(
                    &rows
                        .iter()
                        .map(|r| {
                            (
                                r.word.clone(),
                                r.length,
                                format!("{:?}", r.shi_vector),
                                format!("{:?}", r.small_inversions),
                            )
                        })
                        .collect::<Vec<_>>(),
                )?,
                _ => rows
                    .iter()
                    .map(|r| format!("{:<16} {:?}", r.word, r.shi_vector))
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            (text, rows.len(), "low elements")
        }
        What::Regions | What::Dominant => {
            let regions = RegionEnumeration::new(&group, c.budget)?;
            let mut rows = regions.rows();
            if matches!(what, What::Dominant) {
                rows.retain(|r| r.dominant);
            }
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&rows)?,
                Format::Csv if matches!(what, What::Regions) => regions_csv(&regions)?,
                Format::Csv => to_csv(&rows)?,
                _ => rows
                    .iter()
                    .map(|r| format!("{}  {:<12} {}", r.sign_type, r.minimal_word, r.descent_roots))
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            let label = if matches!(what, What::Regions) { "shi regions" } else { "dominant regions" };
            (text, rows.len(), label)
        }
        What::Ideals => {
            let regions = RegionEnumeration::new(&group, c.budget)?;
            let rows = ideal_rows(&regions.dominant_regions()?);
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&rows)?,
                Format::Csv => to_csv(
                    &rows
                        .iter()
                        .map(|r| (format!("{:?}", r.ideal), format!("{:?}", r.minimal), r.sign_type.clone(), r.word.clone()))
                        .collect::<Vec<_>>(),
                )?,
                _ => rows
                    .iter()
                    .map(|r| format!("{:<20} {}  {}", format!("{:?}", r.ideal), r.sign_type, r.word))
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            (text, rows.len(), "ideals")
        }
    };
    let stdout = c.emit(&text)?;
    c.summary(format, stdout, &format!("count: {count} {label} of {}", group.cartan_type()));
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(suite: Suite, c: &Common) -> Result<ExitCode> {
    let group = AffineWeylGroup::new(c.cartan_type()?);
    let format = c.format(&[Format::Text, Format::Json], Format::Text)?;
    let cfg = VerifyConfig {
        bound: c.bound(),
        budget: c.budget,
        ..VerifyConfig::for_rank(c.rank)
    };
    let report = run_suite(&group, suite, &cfg)?;
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&report.to_json())?,
        _ => report.to_string(),
    };
    c.emit(&text)?;
    if let Some(fail) = report.first_failure() {
        eprintln!("first failure: {}", serde_json::to_string(fail)?);
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_automaton(c: &Common) -> Result<ExitCode> {
    let group = AffineWeylGroup::new(c.cartan_type()?);
    let format = c.format(&[Format::Dot, Format::Json, Format::Text], Format::Dot)?;
    let aut = Automaton::build(&group);
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&aut.transition_table())?,
        Format::Dot => aut.to_dot(),
        _ => {
            let counts = aut.word_counts(c.bound());
            format!("reduced words by length: {counts:?}")
        }
    };
    let stdout = c.emit(&text)?;
    c.summary(format, stdout, &format!("{} states", aut.num_states()));
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Roots(c) => cmd_roots(c),
        Command::Enumerate { what, common } => cmd_enumerate(*what, common),
        Command::Verify { suite, common } => cmd_verify((*suite).into(), common),
        Command::Automaton(c) => cmd_automaton(c),
    };
    match result {
        Ok(code) => code,
        Err(e)
            if e.downcast_ref::<std::io::Error>()
                .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe) =>
        {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
