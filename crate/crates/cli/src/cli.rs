use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::commands::{self, ConvertKind, Outcome, SurfaceAction};
use crate::config::RunConfig;
use crate::error::{CliError, Result};

#[derive(Debug, Parser)]
#[command(name = "fn3", version, about = "Trace coordinates and gluing of SL(3,C) surface-group representations")]
pub struct Args {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Tolerance override, repeatable.
    #[arg(long = "tol", value_name = "NAME=VAL", global = true)]
    pub tol: Vec<String>,
    /// Write the report here instead of standard output.
    #[arg(long, value_name = "PATH", global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Conjugacy class, eigen data and trace test of a matrix file.
    Classify { file: PathBuf },
    /// Build a pants from coordinates or read coordinates off matrices.
    Pants {
        #[arg(value_enum)]
        action: PantsAction,
        file: PathBuf,
    },
    /// Assemble a surface group from a decomposition file.
    Surface {
        #[arg(value_enum)]
        action: SurfaceArg,
        file: PathBuf,
    },
    /// Run a verification suite (`all` runs every suite).
    Verify {
        suite: String,
        /// Sample-count override, repeatable.
        #[arg(long = "samples", value_name = "SUITE=N")]
        samples: Vec<String>,
    },
    /// Goldman boundary/pants conversions and Parker-Platis cross-ratios.
    Convert {
        #[arg(value_enum)]
        kind: ConvertArg,
        file: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum PantsAction {
    Build,
    Coords,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SurfaceArg {
    Build,
    Check,
    Coords,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ConvertArg {
    Goldman,
    Ppcross,
}

impl Args {
    pub fn config(&self) -> Result<RunConfig> {
        let mut cfg = RunConfig::new(self.seed);
        for t in &self.tol {
            cfg.set_tol(t)?;
        }
        if let Command::Verify { samples, .. } = &self.command {
            for s in samples {
                cfg.set_samples(s)?;
            }
        }
        cfg.output = self.out.clone();
        Ok(cfg)
    }
}

pub fn run(args: &Args) -> Result<Outcome> {
    let cfg = args.config()?;
    match &args.command {
        Command::Classify { file } => commands::classify_cmd(file, &cfg),
        Command::Pants { action, file } => match action {
            PantsAction::Build => commands::pants_build(file, &cfg),
            PantsAction::Coords => commands::pants_coords_cmd(file, &cfg),
        },
        Command::Surface { action, file } => {
            let a = match action {
                SurfaceArg::Build => SurfaceAction::Build,
                SurfaceArg::Check => SurfaceAction::Check,
                SurfaceArg::Coords => SurfaceAction::Coords,
            };
            commands::surface_cmd(a, file, &cfg)
        }
        Command::Verify { suite, .. } => commands::verify(suite, &cfg),
        Command::Convert { kind, file } => {
            let k = match kind {
                ConvertArg::Goldman => ConvertKind::Goldman,
                ConvertArg::Ppcross => ConvertKind::PpCross,
            };
            commands::convert(k, file, &cfg)
        }
    }
}

/// Runs the command and writes its output; returns the process exit code.
pub fn execute(args: &Args) -> i32 {
    let result = run(args).and_then(|out| {
        match &args.out {
            Some(path) => std::fs::write(path, &out.text).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?,
            None => print!("{}", out.text),
        }
        match out.failed {
            Some(s) => Err(CliError::SuiteFailed(s)),
            None => Ok(()),
        }
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("fn3: error: {e}");
            e.exit_code()
        }
    }
}
