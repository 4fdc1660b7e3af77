use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lihull::analysis::{self, Format};
use lihull::config::{Bounds, Config};
use lihull::error::Error;

#[derive(Parser)]
#[command(name = "lihull", version, about = "Left inverse hulls and constructible right ideals of concrete semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verdicts, witnesses and sizes for the configured semigroup.
    Analyze(Common),
    /// The constructible right ideals up to `--depth`, one per line.
    Ideals(Common),
    /// Hull elements up to `--length` as `grade | domain`.
    Hull {
        #[command(flatten)]
        common: Common,
        /// Re-check every element against the pointwise action of a word.
        #[arg(long)]
        oracle: bool,
    },
    /// Filters of the truncated semilattice, by minimal elements.
    Filters(Common),
    /// The maximal group image, images of generators and Følner means.
    Group(Common),
    /// Writes window matrices and prints the relation report.
    Matrix {
        #[command(flatten)]
        common: Common,
        /// Output directory.
        #[arg(long, default_value = "matrices")]
        out: PathBuf,
    },
    /// Runs every property suite; exits 1 on any failure.
    Check(Common),
}

#[derive(Args)]
struct Common {
    /// Semigroup configuration file.
    config: PathBuf,
    #[arg(long)]
    depth: Option<usize>,
    #[arg(long)]
    length: Option<usize>,
    #[arg(long)]
    window: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Machine,
}

impl Common {
    fn format(&self) -> Format {
        match self.format {
            FormatArg::Text => Format::Text,
            FormatArg::Machine => Format::Machine,
        }
    }

    fn bounds(&self, config: &Config) -> Bounds {
        let b = config.bounds;
        Bounds {
            depth: self.depth.unwrap_or(b.depth),
            length: self.length.unwrap_or(b.length),
            window: self.window.unwrap_or(b.window),
            seed: self.seed.unwrap_or(b.seed),
        }
    }
}

enum Failure {
    Lib(Error),
    Io(PathBuf, std::io::Error),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn write_matrices(sg: &lihull::semigroup::Semigroup, bounds: &Bounds, out: &Path, format: Format) -> Result<String, Failure> {
    let exports = analysis::matrix_exports(sg, bounds)?;
    fs::create_dir_all(out).map_err(|e| Failure::Io(out.to_path_buf(), e))?;
    let mut index = String::new();
    for (file, label, m) in &exports {
        let path = out.join(format!("{file}.txt"));
        fs::write(&path, m.to_text()).map_err(|e| Failure::Io(path.clone(), e))?;
        index.push_str(&format!("{file}.txt\t{label}\n"));
    }
    let path = out.join("index.txt");
    fs::write(&path, index).map_err(|e| Failure::Io(path.clone(), e))?;
    let mut report = analysis::relations_output(sg, bounds, format)?;
    match format {
        Format::Text => report.push_str(&format!("wrote {} matrices to {}\n", exports.len(), out.display())),
        Format::Machine => report.push_str(&format!("matrices={}\n", exports.len())),
    }
    Ok(report)
}

fn run(command: Command) -> Result<String, Failure> {
    let common = match &command {
        Command::Analyze(c) | Command::Ideals(c) | Command::Filters(c) | Command::Group(c) | Command::Check(c) => c,
        Command::Hull { common, .. } | Command::Matrix { common, .. } => common,
    };
    let config = Config::load(&common.config)?;
    let sg = config.semigroup()?;
    let bounds = common.bounds(&config);
    let format = common.format();
    Ok(match &command {
        Command::Analyze(_) => analysis::analyze(&sg, &bounds)?.render(format),
        Command::Ideals(_) => analysis::ideals_output(&sg, &bounds, format),
        Command::Hull { oracle, .. } => analysis::hull_output(&sg, &bounds, format, *oracle)?,
        Command::Filters(_) => analysis::filters_output(&sg, &bounds, format)?,
        Command::Group(_) => analysis::group_output(&sg, format)?,
        Command::Matrix { out, .. } => write_matrices(&sg, &bounds, out, format)?,
        Command::Check(_) => {
            let report = analysis::run_check(&sg, &bounds);
            let text = report.render(format);
            if !report.passed() {
                return Err(Failure::Check(text));
            }
            text
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check(report)) => {
            print!("{report}");
            ExitCode::from(1)
        }
        Err(Failure::Io(path, e)) => {
            eprintln!("error: {}: {e}", path.display());
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Config { .. } | Error::InvalidDescriptor(_) => 2,
                Error::Unsupported { .. } => 3,
                _ => 1,
            })
        }
    }
}
