use std::path::PathBuf;
use std::time::Instant;

use hyperpath::changes::{ChangeGenerator, ChangeMode, ChangeModelParams};
use hyperpath::dynamic::{dr::DrDsp, he::HeDsp};
use hyperpath::geometric::{random_geometric, GeoParams};
use hyperpath::ShortestPathMaintainer;

use crate::util::{emit, write_file, CliError};

#[derive(clap::Args)]
pub struct Args {
    #[arg(long, default_value_t = 1000)]
    n: usize,
    #[arg(long, default_value_t = 1000.0)]
    a: f64,
    #[arg(long, default_value_t = 31.622776601683793)]
    r: f64,
    #[arg(long, default_value_t = 1.0)]
    h: f64,
    /// Number of repetitions (one fresh instance per seed).
    #[arg(long, default_value_t = 5)]
    seeds: u64,
    /// First instance seed; repetition i uses `seed0 + i`.
    #[arg(long, default_value_t = 0)]
    seed0: u64,
    /// Events per repetition.
    #[arg(long, default_value_t = 10_000)]
    events: usize,
    #[arg(long, default_value_t = 0.25)]
    p_ins: f64,
    #[arg(long, default_value_t = 0.25)]
    p_del: f64,
    #[arg(long, default_value_t = 10.0)]
    w_min: f64,
    #[arg(long, default_value_t = 20.0)]
    w_max: f64,
    /// Aggregate CSV destination (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write a gnuplot script that plots the CSV.
    #[arg(long)]
    plot: Option<PathBuf>,
}

pub fn run(args: Args) -> Result<(), CliError> {
    let mut csv = String::from("mode,algo,seed,mean_ns_per_event\n");
    let mut sums: std::collections::BTreeMap<(&str, &str), (f64, u64)> = Default::default();

    for rep in 0..args.seeds {
        let seed = args.seed0 + rep;
        let inst = random_geometric(&GeoParams {
            n: args.n,
            side: args.a,
            radius: args.r,
            spacing: args.h,
            seed,
        })
        .map_err(CliError::usage)?;
        let source = inst
            .corner_vertex()
            .ok_or_else(|| CliError::Usage("instance has no vertices".into()))?;
        for (mode_name, mode) in [("random", ChangeMode::Random), ("targeted", ChangeMode::Targeted)] {
            for algo in ["he", "dr"] {
                let mut h = inst.hypergraph.clone();
                let mut he;
                let mut dr;
                let maintainer: &mut dyn ShortestPathMaintainer = if algo == "he" {
                    he = HeDsp::new(&h, source).map_err(CliError::usage)?;
                    &mut he
                } else {
                    dr = DrDsp::new(&h, source).map_err(CliError::usage)?;
                    &mut dr
                };
                let params = ChangeModelParams {
                    p_insert: args.p_ins,
                    p_delete: args.p_del,
                    w_min: args.w_min,
                    w_max: args.w_max,
                    mode,
                    seed,
                    integer_weights: false,
                };
                let mut gen = ChangeGenerator::new(params, &h).map_err(CliError::usage)?;
                // Wall-clock time covers only the maintenance call, not event
                // generation or any verification.
                let mut total_ns = 0u128;
                let mut applied = 0;
                while applied < args.events {
                    let ev = match gen.next_change(&h, Some(maintainer.state())) {
                        Ok(ev) => ev,
                        Err(hyperpath::Error::NothingToTarget) => continue,
                        Err(e) => return Err(CliError::usage(e)),
                    };
                    let t0 = Instant::now();
                    maintainer
                        .apply(&mut h, ev)
                        .expect("generated events are valid");
                    total_ns += t0.elapsed().as_nanos();
                    applied += 1;
                }
                let mean = total_ns as f64 / applied as f64;
                csv.push_str(&format!("{mode_name},{algo},{seed},{mean:.1}\n"));
                let slot = sums.entry((mode_name, algo)).or_insert((0.0, 0));
                slot.0 += mean;
                slot.1 += 1;
            }
        }
    }
    for ((mode_name, algo), (sum, count)) in &sums {
        csv.push_str(&format!("{mode_name},{algo},mean,{:.1}\n", sum / *count as f64));
    }
    emit(args.out.as_deref(), &csv)?;

    if let Some(plot) = &args.plot {
        let data = args
            .out
            .as_ref()
            .map(|p| p.display().to_string())
            .unwrap_or_else(|| "bench.csv".into());
        let script = format!(
            "set datafile separator ','\n\
             set ylabel 'mean ns per event'\n\
             set style data histogram\n\
             set style fill solid\n\
             plot '< grep \",mean,\" {data}' using 4:xtic(strcol(1).\"/\".strcol(2)) title 'mean per-event time'\n"
        );
        write_file(plot, &script)?;
    }
    Ok(())
}
