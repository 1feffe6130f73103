//! `qfideal`: finite semigroups, Q-fuzzy ideals and their extensions.
//!
//! Exit codes: 0 on success, 1 when a verification or search reports
//! violations, 2 on bad input. Data goes to stdout, diagnostics to stderr.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use qfideal_core::enumeration::{build_corpus, build_corpus_up_to, Ceiling, Corpus, Dedup};
use qfideal_core::harness::{search_counterexample, verify_all, CheckReport, SampleConfig, TheoremId};
use qfideal_core::{classify, json, transforms, ClassFilter, CrispKind, Grade, QFuzzySubset, Semigroup};

#[derive(Parser)]
#[command(name = "qfideal", version, about = "Finite semigroups and Q-fuzzy ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the semigroups of one order (or all orders up to it).
    Enumerate {
        #[arg(long)]
        order: usize,
        /// One representative per isomorphism class.
        #[arg(long)]
        iso: bool,
        /// Include every order from 1 to --order.
        #[arg(long)]
        up_to: bool,
        /// Class filter such as `commutative,!archimedean`.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the class flags of a semigroup.
    Classify {
        #[arg(long)]
        semigroup: PathBuf,
    },
    /// Decide a Q-fuzzy predicate.
    Check {
        #[arg(long)]
        semigroup: PathBuf,
        #[arg(long)]
        fuzzy: PathBuf,
        #[arg(long)]
        kind: CrispKind,
    },
    /// Extension of a fuzzy subset by an element, optionally after the
    /// magnified translation beta * mu + alpha.
    Extend {
        #[arg(long)]
        semigroup: PathBuf,
        #[arg(long)]
        fuzzy: PathBuf,
        /// Element label.
        #[arg(long)]
        by: String,
        #[arg(long)]
        beta: Option<Grade>,
        #[arg(long)]
        alpha: Option<Grade>,
    },
    /// Check every claim over a corpus.
    Verify {
        #[command(flatten)]
        run: RunArgs,
    },
    /// Check one claim with a hypothesis dropped.
    Search {
        #[arg(long)]
        theorem: TheoremId,
        /// Hypothesis label, or `none`.
        #[arg(long, default_value = "none")]
        drop: String,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Args)]
struct RunArgs {
    /// Corpus file (JSON array of semigroups).
    #[arg(long, required_unless_present = "max_order", conflicts_with = "max_order")]
    corpus: Option<PathBuf>,
    /// Build the up-to-isomorphism corpus of orders 1..=N instead.
    #[arg(long)]
    max_order: Option<usize>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, value_delimiter = ',')]
    pool: Option<Vec<Grade>>,
    #[arg(long, value_delimiter = ',')]
    q_sizes: Option<Vec<usize>>,
    #[arg(long)]
    max_witnesses: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

impl RunArgs {
    fn config(&self) -> SampleConfig {
        let mut c = SampleConfig {
            seed: self.seed,
            samples_per_semigroup: self.samples,
            ..SampleConfig::default()
        };
        if let Some(p) = &self.pool {
            c.grade_pool = p.clone();
        }
        if let Some(q) = &self.q_sizes {
            c.q_sizes = q.clone();
        }
        if let Some(w) = self.max_witnesses {
            c.max_witnesses = w;
        }
        c
    }

    fn corpus(&self) -> Result<Corpus> {
        match (&self.corpus, self.max_order) {
            (Some(path), _) => {
                let text = read(path)?;
                let items = json::parse_corpus(&text).with_context(|| path.display().to_string())?;
                Ok(Corpus::from_items(items))
            }
            (None, Some(n)) => Ok(build_corpus_up_to(n, Dedup::UpToIso, None, Ceiling::from_env())?),
            (None, None) => unreachable!("clap requires one of --corpus, --max-order"),
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_semigroup(path: &Path) -> Result<Arc<Semigroup>> {
    let s = json::parse_semigroup(&read(path)?).with_context(|| path.display().to_string())?;
    Ok(Arc::new(s))
}

fn load_fuzzy(path: &Path, owner: Arc<Semigroup>) -> Result<QFuzzySubset> {
    json::parse_fuzzy(&read(path)?, owner).with_context(|| path.display().to_string())
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, format!("{text}\n")).with_context(|| format!("cannot write {}", path.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn summary(r: &CheckReport) -> String {
    let mut line = format!(
        "{:<8} instances={} hits={} violations={}",
        r.theorem.name(),
        r.instances_checked,
        r.hypothesis_hits,
        r.violation_count
    );
    for a in &r.anomalies {
        line.push_str(&format!(" {}={}", a.kind, a.count));
    }
    if let Some(v) = &r.strict_variant {
        line.push_str(&format!(
            " strict_hits={} strict_violations={}",
            v.hypothesis_hits, v.violation_count
        ));
    }
    if r.hypothesis_never_satisfied {
        line.push_str(" (hypotheses never satisfied)");
    }
    line
}

fn finish(reports: &[CheckReport], out: Option<&Path>) -> Result<ExitCode> {
    let text = serde_json::to_string_pretty(reports)?;
    if out.is_some() {
        emit(&text, out)?;
        for r in reports {
            println!("{}", summary(r));
        }
    } else {
        emit(&text, None)?;
    }
    let violations: u64 = reports.iter().map(|r| r.violation_count).sum();
    if violations > 0 {
        eprintln!("{violations} violation(s)");
        Ok(ExitCode::from(1))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Enumerate {
            order,
            iso,
            up_to,
            filter,
            out,
        } => {
            let dedup = if iso { Dedup::UpToIso } else { Dedup::Labeled };
            let filter = filter.as_deref().map(ClassFilter::parse).transpose()?;
            let ceiling = Ceiling::from_env();
            let corpus = if up_to {
                build_corpus_up_to(order, dedup, filter.as_ref(), ceiling)?
            } else {
                build_corpus(order, dedup, filter.as_ref(), ceiling)?
            };
            emit(&json::corpus_to_string(&corpus.items), out.as_deref())?;
            eprintln!("{} semigroup(s)", corpus.len());
        }
        Command::Classify { semigroup } => {
            let s = load_semigroup(&semigroup)?;
            println!("{}", serde_json::to_string_pretty(&classify(&s))?);
        }
        Command::Check { semigroup, fuzzy, kind } => {
            let s = load_semigroup(&semigroup)?;
            let mu = load_fuzzy(&fuzzy, s)?;
            let holds = mu
                .q_predicate(kind)
                .with_context(|| format!("{}: {kind}", fuzzy.display()))?;
            println!("{holds}");
            if !holds {
                if let Some(why) = mu.law_failure(kind) {
                    eprintln!("{why}");
                }
            }
        }
        Command::Extend {
            semigroup,
            fuzzy,
            by,
            beta,
            alpha,
        } => {
            let s = load_semigroup(&semigroup)?;
            let x = s.index_of(&by).with_context(|| format!("--by {by}"))?;
            let mu = load_fuzzy(&fuzzy, s)?;
            let subject = if beta.is_some() || alpha.is_some() {
                transforms::magnified_translation(&mu, beta.unwrap_or(Grade::ONE), alpha.unwrap_or(Grade::ZERO))?
            } else {
                mu
            };
            println!("{}", json::fuzzy_to_string(&transforms::extension(&subject, x)?));
        }
        Command::Verify { run } => {
            let report = verify_all(&run.corpus()?, &run.config())?;
            return finish(&report.reports, run.out.as_deref());
        }
        Command::Search { theorem, drop, run } => {
            let report = search_counterexample(theorem, &drop, &run.corpus()?, &run.config())?;
            return finish(&[report], run.out.as_deref());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
