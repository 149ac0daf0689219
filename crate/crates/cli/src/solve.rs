use std::path::PathBuf;

use hyperpath::format;

use crate::util::{emit, io_err, read_file, CliError};

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum StaticAlgo {
    /// Hyperedge-scanning Dijkstra.
    Gallo,
    /// Dijkstra over the underlying graph.
    Dr,
}

#[derive(clap::Args)]
pub struct Args {
    /// Hypergraph file (`n m` header, then `weight k v...` lines).
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    source: usize,
    #[arg(long, value_enum, default_value = "dr")]
    algo: StaticAlgo,
    /// Write the state here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn run(args: Args) -> Result<(), CliError> {
    let text = read_file(&args.input)?;
    let h = format::read_hypergraph(&text).map_err(|e| io_err(&args.input, e))?;
    let st = match args.algo {
        StaticAlgo::Gallo => hyperpath::gallo_sssp(&h, args.source),
        StaticAlgo::Dr => hyperpath::dr_sp(&h, args.source),
    }
    .map_err(CliError::usage)?;
    emit(args.out.as_deref(), &format::write_sp_state(&st))
}
