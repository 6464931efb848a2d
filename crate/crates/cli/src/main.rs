use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lozenge_cli::commands::{self, Format, Quotient};
use lozenge_cli::svg::Style;
use lozenge_cli::{parse_basis, parse_fingerprint};
use lozenge_core::heights::Fingerprint;
use lozenge_core::lattice::Basis;
use lozenge_core::tiling::DEFAULT_ENUMERATION_CAP;

/// Exact enumeration of doubly periodic lozenge tilings.
#[derive(Parser)]
#[command(name = "lozenge", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = FormatArg::Json)]
    format: FormatArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Args)]
struct BasisArg {
    /// Period lattice basis `a1,a2,b1,b2` in (u, v) coordinates.
    #[arg(long, value_parser = parse_basis, allow_hyphen_values = true)]
    basis: Basis,
}

#[derive(Args)]
struct CapArg {
    /// Largest index the brute-force enumerator accepts.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    cap: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Generating function Z(L,D,R) from four signed determinants.
    Genfun {
        #[command(flatten)]
        basis: BasisArg,
    },
    /// All tilings of the period lattice, optionally of one fingerprint.
    Enumerate {
        #[command(flatten)]
        basis: BasisArg,
        #[command(flatten)]
        cap: CapArg,
        /// Keep only tilings with this fingerprint `d1,d2`.
        #[arg(long, value_parser = parse_fingerprint, allow_hyphen_values = true)]
        fingerprint: Option<Fingerprint>,
        /// Construct one tiling of the fingerprint instead of enumerating.
        #[arg(long, requires = "fingerprint")]
        realize: bool,
    },
    /// Fundamental triangle and every realizable type.
    Types {
        #[command(flatten)]
        basis: BasisArg,
    },
    /// Census of tilings up to translation, optionally also the involution.
    Classes {
        #[command(flatten)]
        basis: BasisArg,
        #[command(flatten)]
        cap: CapArg,
        #[arg(long)]
        mod_shift: bool,
        #[arg(long, requires = "mod_shift")]
        mod_involution: bool,
    },
    /// Flip sites and the flip graph of one type.
    Flips {
        #[command(flatten)]
        basis: BasisArg,
        #[command(flatten)]
        cap: CapArg,
        #[arg(long, value_parser = parse_fingerprint, allow_hyphen_values = true)]
        fingerprint: Fingerprint,
    },
    /// Cross-check every lattice of index at most N against the oracles.
    Verify {
        #[arg(long, default_value_t = 9)]
        max_index: i64,
        #[command(flatten)]
        cap: CapArg,
    },
    /// Draw a tiling stored as JSON.
    Render {
        /// Optional; checked against the lattice of the tiling.
        #[arg(long, value_parser = parse_basis, allow_hyphen_values = true)]
        basis: Option<Basis>,
        #[arg(long)]
        tiling: PathBuf,
        /// Write here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Copies of the fundamental domain along each period.
        #[arg(long, default_value_t = 3)]
        reps: u32,
        /// Length of a lattice edge in SVG units.
        #[arg(long, default_value_t = 40.0)]
        unit: f64,
        /// Outline the fundamental domain.
        #[arg(long)]
        outline: bool,
        #[arg(long)]
        color_l: Option<String>,
        #[arg(long)]
        color_d: Option<String>,
        #[arg(long)]
        color_r: Option<String>,
    },
}

fn run(cli: Cli) -> Result<bool> {
    let format = match cli.format {
        FormatArg::Json => Format::Json,
        FormatArg::Text => Format::Text,
    };
    let out = match cli.command {
        Command::Genfun { basis } => commands::genfun(&basis.basis, format)?,
        Command::Enumerate {
            basis,
            cap,
            fingerprint,
            realize,
        } => match (realize, fingerprint) {
            (true, Some(f)) => commands::realize(&basis.basis, f, format)?,
            _ => commands::enumerate(&basis.basis, cap.cap, fingerprint, format)?,
        },
        Command::Types { basis } => commands::types(&basis.basis, format)?,
        Command::Classes {
            basis,
            cap,
            mod_shift,
            mod_involution,
        } => {
            let q = match (mod_shift, mod_involution) {
                (false, _) => Quotient::None,
                (true, false) => Quotient::Shift,
                (true, true) => Quotient::ShiftInvolution,
            };
            commands::classes(&basis.basis, cap.cap, q, format)?
        }
        Command::Flips {
            basis,
            cap,
            fingerprint,
        } => commands::flips(&basis.basis, fingerprint, cap.cap, format)?,
        Command::Verify { max_index, cap } => {
            let (text, ok) = commands::verify(max_index, cap.cap, format)?;
            print!("{text}");
            return Ok(ok);
        }
        Command::Render {
            basis,
            tiling,
            out,
            reps,
            unit,
            outline,
            color_l,
            color_d,
            color_r,
        } => {
            let text = std::fs::read_to_string(&tiling)
                .with_context(|| format!("reading {}", tiling.display()))?;
            let defaults = Style::default();
            let style = Style {
                unit,
                fill_l: color_l.unwrap_or(defaults.fill_l),
                fill_d: color_d.unwrap_or(defaults.fill_d),
                fill_r: color_r.unwrap_or(defaults.fill_r),
                outline,
                ..defaults
            };
            let svg = commands::render(&text, basis.as_ref(), reps, &style)?;
            match out {
                Some(path) => {
                    std::fs::write(&path, svg)
                        .with_context(|| format!("writing {}", path.display()))?;
                    return Ok(true);
                }
                None => svg,
            }
        }
    };
    print!("{out}");
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
