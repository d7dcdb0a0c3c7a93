//! tracklight command-line front end: parse tracking files, run the
//! load -> filter -> model -> output pipeline, plot SVGs and fetch
//! datasets. Results go to standard output, diagnostics to standard error.

mod config;
mod error;
mod input;
mod pipeline;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use error::CliError;

#[derive(Parser)]
#[command(name = "tracklight", version, about = "Team-sport tracking data toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert a tracking file into canonical wide CSV
    Parse {
        /// Input format: wide_csv, long_csv or dat
        #[arg(long)]
        format: InputFormat,
        /// Input file path
        #[arg(long)]
        input: PathBuf,
        /// Output path; multi-object formats derive one file per object
        #[arg(long)]
        output: PathBuf,
    },
    /// Run a load -> filter -> model -> output pipeline from a config file
    Pipeline {
        /// Flat `section.key = value` config file
        #[arg(long)]
        config: PathBuf,
    },
    /// Render positions or trajectories of tracking data to SVG
    Plot {
        /// `sample` for the bundled sample, or a file path
        #[arg(long)]
        input: String,
        /// Input format for file inputs
        #[arg(long, value_enum, default_value_t = InputFormat::WideCsv)]
        format: InputFormat,
        /// Object to plot for sample/dat inputs
        #[arg(long, value_enum, default_value_t = TeamChoice::Home)]
        team: TeamChoice,
        /// Group id for long_csv inputs
        #[arg(long)]
        group: Option<String>,
        #[arg(long, value_enum)]
        mode: PlotMode,
        /// Frame index for positions mode
        #[arg(long, default_value_t = 0)]
        frame: usize,
        /// Frame range `t0:t1` (end exclusive) for trajectories mode;
        /// defaults to the full segment
        #[arg(long)]
        range: Option<String>,
        /// Pitch override `xmin,xmax,ymin,ymax,unit,sport`
        #[arg(long)]
        pitch: Option<String>,
        /// Output SVG path
        #[arg(long)]
        output: PathBuf,
    },
    /// Fetch and verify a dataset segment, printing its cache path
    Dataset {
        /// Registry file path
        #[arg(long)]
        registry: PathBuf,
        #[arg(long)]
        dataset_id: String,
        #[arg(long)]
        segment_id: String,
        /// Cache directory (overrides the TRACKLIGHT_CACHE variable)
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    WideCsv,
    LongCsv,
    Dat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TeamChoice {
    Home,
    Away,
    Ball,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PlotMode {
    Positions,
    Trajectories,
}

/// Environment variable overriding the dataset cache directory.
const CACHE_ENV: &str = "TRACKLIGHT_CACHE";

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Parse {
            format,
            input,
            output,
        } => cmd_parse(format, &input, &output),
        Command::Pipeline { config } => pipeline::run(&config),
        Command::Plot {
            input,
            format,
            team,
            group,
            mode,
            frame,
            range,
            pitch,
            output,
        } => cmd_plot(
            &input,
            format,
            team,
            group.as_deref(),
            mode,
            frame,
            range.as_deref(),
            pitch.as_deref(),
            &output,
        ),
        Command::Dataset {
            registry,
            dataset_id,
            segment_id,
            cache_dir,
        } => cmd_dataset(&registry, &dataset_id, &segment_id, cache_dir),
    }
}

fn cmd_parse(format: InputFormat, input: &PathBuf, output: &PathBuf) -> Result<(), CliError> {
    let outputs = input::parse_to_wide_csv(format, input, output)?;
    for path in outputs {
        eprintln!("wrote {}", path.display());
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_plot(
    source: &str,
    format: InputFormat,
    team: TeamChoice,
    group: Option<&str>,
    mode: PlotMode,
    frame: usize,
    range: Option<&str>,
    pitch_spec: Option<&str>,
    output: &PathBuf,
) -> Result<(), CliError> {
    let loaded = input::load_tracking(source, format, team, group)?;
    let pitch = match pitch_spec {
        Some(spec) => input::parse_pitch_spec(spec)?,
        None => match loaded.pitch {
            Some(p) => p,
            None => input::bounding_pitch(&loaded.data)?,
        },
    };
    let style = tracklight::vis::RenderStyle::default();
    let svg = match mode {
        PlotMode::Positions => {
            tracklight::vis::render_positions(&pitch, &loaded.data, frame, &style)
                .map_err(|e| CliError::Config(e.to_string()))?
        }
        PlotMode::Trajectories => {
            let (t0, t1) = match range {
                Some(spec) => input::parse_range_spec(spec)?,
                None => (0, loaded.data.n_frames()),
            };
            tracklight::vis::render_trajectories(&pitch, &loaded.data, (t0, t1), &style)
                .map_err(|e| CliError::Config(e.to_string()))?
        }
    };
    std::fs::write(output, svg).map_err(|e| CliError::Io(format!("{}: {e}", output.display())))?;
    Ok(())
}

fn cmd_dataset(
    registry: &PathBuf,
    dataset_id: &str,
    segment_id: &str,
    cache_dir: Option<PathBuf>,
) -> Result<(), CliError> {
    let entries = tracklight::datasets::load_registry(registry)?;
    let entry = entries
        .iter()
        .find(|e| e.dataset_id == dataset_id)
        .ok_or_else(|| CliError::Config(format!("unknown dataset_id {dataset_id:?}")))?;
    let cache = cache_dir
        .or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
        .unwrap_or_else(default_cache_dir);
    let path = tracklight::datasets::fetch_segment(entry, segment_id, &cache)?;
    println!("{}", path.display());
    Ok(())
}

fn default_cache_dir() -> PathBuf {
    match std::env::var_os("HOME") {
        Some(home) => PathBuf::from(home).join(".cache").join("tracklight"),
        None => PathBuf::from(".tracklight-cache"),
    }
}
