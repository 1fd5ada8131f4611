use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tilings::cli::{
    cmd_check, cmd_components, cmd_count, cmd_distance, cmd_dump_heights, cmd_gen, cmd_partition,
    cmd_render, CountMethod, GenSpec,
};
use tilings::region::Lattice;
use tilings::render::{RenderFormat, RenderStyle};

/// Exact domino and lozenge tilings: tileability, counting, flips,
/// plane partitions and rendering.
#[derive(Parser)]
#[command(name = "tilings", version, about)]
struct Args {
    /// Output format for pictures
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Ascii)]
    format: FormatArg,
    /// Pixels per lattice unit in SVG output
    #[arg(long, global = true, default_value_t = 24)]
    scale: u32,
    /// Seed for randomized generators
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Cap on the number of tilings any command may enumerate
    #[arg(long, global = true, default_value_t = 1_000_000)]
    limit: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Ascii,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Det,
    Formula,
    Enumerate,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum LatticeArg {
    Square,
    Triangle,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the region is tileable
    Check {
        region_file: PathBuf,
        /// Print the minimal tiling's height function after the verdict
        #[arg(long)]
        dump_heights: bool,
    },
    /// Count tilings exactly
    Count {
        region_file: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Det)]
        method: MethodArg,
    },
    /// Flip distance between two tilings
    Distance {
        region_file: PathBuf,
        tiling_file_1: PathBuf,
        tiling_file_2: PathBuf,
    },
    /// Flip-graph components with flow signatures
    Components {
        region_file: PathBuf,
        /// Also print the flip-graph edge list as `i j` lines
        #[arg(long)]
        edges: bool,
    },
    /// Draw a region or a tiling
    Render {
        region_file: PathBuf,
        tiling_file: Option<PathBuf>,
        /// Label vertices with the height function
        #[arg(long)]
        show_heights: bool,
        /// Shade cells by their color class
        #[arg(long)]
        show_colors: bool,
    },
    /// Convert between hexagon tilings and boxed plane partitions
    Partition {
        region_file: PathBuf,
        /// Tiling file to convert into a partition array
        #[arg(long)]
        tiling: Option<PathBuf>,
        /// Partition array file to convert into a tiling
        #[arg(long)]
        array: Option<PathBuf>,
    },
    /// Emit a template region file
    Gen {
        #[command(subcommand)]
        shape: GenCommand,
    },
    /// Print a height function as `x y h` lines
    #[command(name = "dump-heights")]
    DumpHeights {
        region_file: PathBuf,
        /// Tiling to read heights from (defaults to the minimal tiling)
        tiling_file: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// n x m rectangle
    Rect { n: u32, m: u32 },
    /// Center-symmetric hexagon with sides r, c, m
    Hex { r: u32, c: u32, m: u32 },
    /// Triangle of side n
    Tri { n: u32 },
    /// Seeded random edge-connected region
    Random {
        #[arg(value_enum)]
        lattice: LatticeArg,
        cells: usize,
    },
}

fn main() -> ExitCode {
    let args = Args::parse();
    let style = RenderStyle {
        format: match args.format {
            FormatArg::Ascii => RenderFormat::Ascii,
            FormatArg::Svg => RenderFormat::Svg,
        },
        scale: args.scale,
        show_heights: false,
        show_colors: false,
    };
    let out = match &args.command {
        Command::Check { region_file, dump_heights } => cmd_check(region_file, *dump_heights),
        Command::Count { region_file, method } => {
            let method = match method {
                MethodArg::Det => CountMethod::Determinant,
                MethodArg::Formula => CountMethod::Formula,
                MethodArg::Enumerate => CountMethod::Enumerate,
                MethodArg::All => CountMethod::All,
            };
            cmd_count(region_file, method, args.limit)
        }
        Command::Distance { region_file, tiling_file_1, tiling_file_2 } => {
            cmd_distance(region_file, tiling_file_1, tiling_file_2, args.limit)
        }
        Command::Components { region_file, edges } => {
            cmd_components(region_file, args.limit, *edges)
        }
        Command::Render { region_file, tiling_file, show_heights, show_colors } => {
            let style = RenderStyle {
                show_heights: *show_heights,
                show_colors: *show_colors,
                ..style
            };
            cmd_render(region_file, tiling_file.as_deref(), &style)
        }
        Command::Partition { region_file, tiling, array } => {
            cmd_partition(region_file, tiling.as_deref(), array.as_deref())
        }
        Command::Gen { shape } => {
            let spec = match shape {
                GenCommand::Rect { n, m } => GenSpec::Rect { n: *n, m: *m },
                GenCommand::Hex { r, c, m } => GenSpec::Hex { r: *r, c: *c, m: *m },
                GenCommand::Tri { n } => GenSpec::Tri { n: *n },
                GenCommand::Random { lattice, cells } => GenSpec::Random {
                    lattice: match lattice {
                        LatticeArg::Square => Lattice::Square,
                        LatticeArg::Triangle => Lattice::Triangular,
                    },
                    cells: *cells,
                },
            };
            cmd_gen(&spec, args.seed)
        }
        Command::DumpHeights { region_file, tiling_file } => {
            cmd_dump_heights(region_file, tiling_file.as_deref())
        }
    };
    print!("{}", out.stdout);
    let _ = std::io::stdout().flush();
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
