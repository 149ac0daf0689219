use std::path::PathBuf;

use hyperpath::changes::{ChangeGenerator, ChangeMode, ChangeModelParams};
use hyperpath::geometric::{random_geometric, GeoParams};
use hyperpath::format;

use crate::util::{write_file, CliError};

#[derive(clap::Args)]
pub struct Args {
    /// Number of nodes.
    #[arg(long, default_value_t = 1000)]
    n: usize,
    /// Side length of the square.
    #[arg(long, default_value_t = 1000.0)]
    a: f64,
    /// Circle radius.
    #[arg(long, default_value_t = 31.622776601683793)]
    r: f64,
    /// Grid spacing between circle centers.
    #[arg(long, default_value_t = 1.0)]
    h: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output prefix; writes `<prefix>.hg` and `<prefix>.coords`.
    #[arg(long)]
    out: PathBuf,
    /// Also pre-draw this many random-model changes into `<prefix>.changes`.
    /// Targeted sequences depend on the evolving shortest paths and must be
    /// drawn online by `run`.
    #[arg(long)]
    events: Option<usize>,
    #[arg(long, default_value_t = 0.25)]
    p_ins: f64,
    #[arg(long, default_value_t = 0.25)]
    p_del: f64,
    #[arg(long, default_value_t = 10.0)]
    w_min: f64,
    #[arg(long, default_value_t = 20.0)]
    w_max: f64,
    /// Seed for the pre-drawn change sequence.
    #[arg(long, default_value_t = 1)]
    change_seed: u64,
}

pub fn run(args: Args) -> Result<(), CliError> {
    let inst = random_geometric(&GeoParams {
        n: args.n,
        side: args.a,
        radius: args.r,
        spacing: args.h,
        seed: args.seed,
    })
    .map_err(CliError::usage)?;

    let hg_path = args.out.with_extension("hg");
    let coords_path = args.out.with_extension("coords");
    write_file(&hg_path, &format::write_hypergraph(&inst.hypergraph))?;
    write_file(&coords_path, &format::write_coords(&inst.coords))?;

    if let Some(events) = args.events {
        let mut h = inst.hypergraph.clone();
        let params = ChangeModelParams {
            p_insert: args.p_ins,
            p_delete: args.p_del,
            w_min: args.w_min,
            w_max: args.w_max,
            mode: ChangeMode::Random,
            seed: args.change_seed,
            integer_weights: false,
        };
        let mut gen = ChangeGenerator::new(params, &h).map_err(CliError::usage)?;
        let mut drawn = Vec::with_capacity(events);
        while drawn.len() < events {
            match gen.next_change(&h, None) {
                Ok(ev) => {
                    h.apply_change(&ev).expect("generated events are valid");
                    drawn.push(ev);
                }
                Err(hyperpath::Error::NothingToTarget) => continue,
                Err(e) => return Err(CliError::usage(e)),
            }
        }
        write_file(&args.out.with_extension("changes"), &format::write_changes(&drawn))?;
    }

    println!(
        "instance: {} vertices, {} hyperedges -> {}",
        inst.hypergraph.vertex_count(),
        inst.hypergraph.edge_count(),
        hg_path.display()
    );
    Ok(())
}
