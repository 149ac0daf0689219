use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use hyperpath::centrality;
use hyperpath::dynamic::{dr::DrDsp, he::HeDsp};
use hyperpath::email;
use hyperpath::ShortestPathMaintainer;

use crate::replay::{Algo, EVENT_CSV_HEADER};
use crate::util::{emit, io_err, read_file, write_file, CliError};

#[derive(clap::Args)]
pub struct Args {
    /// Email log: `timestamp<TAB>sender<TAB>rcpt1,rcpt2,...` per line.
    #[arg(long)]
    input: PathBuf,
    /// How fast repeated interaction strengthens a tie.
    #[arg(long, default_value_t = 0.6)]
    alpha: f64,
    #[arg(long, value_enum, default_value = "dr")]
    algo: Algo,
    /// Actor whose shortest hyperpaths are maintained through the replay.
    #[arg(long)]
    root: String,
    /// Optional `actor,label` CSV assigning a group to each actor.
    #[arg(long)]
    roles: Option<PathBuf>,
    /// Fail on malformed log lines instead of skipping them.
    #[arg(long)]
    strict: bool,
    /// Closeness ranking CSV (stdout when omitted).
    #[arg(long)]
    centrality_out: Option<PathBuf>,
    /// Per-event timing CSV, same schema as `run`.
    #[arg(long)]
    timing_out: Option<PathBuf>,
    /// Per-label mean distance CSV; needs `--roles`.
    #[arg(long)]
    profile_out: Option<PathBuf>,
}

pub fn run(args: Args) -> Result<(), CliError> {
    let log_text = read_file(&args.input)?;
    let log = email::parse_email_log(log_text.as_bytes(), args.strict)
        .map_err(|e| io_err(&args.input, e))?;
    for (line, reason) in &log.skipped {
        eprintln!("{}:{line}: skipped: {reason}", args.input.display());
    }
    if log.actors.is_empty() {
        // Nothing to rank or replay.
        emit(args.centrality_out.as_deref(), "vertex,total,reachable,rank\n")?;
        if let Some(path) = &args.timing_out {
            write_file(path, &format!("{EVENT_CSV_HEADER}\n"))?;
        }
        return Ok(());
    }
    let changes = email::emails_to_changes(log.actors.len(), &log.events, args.alpha)
        .map_err(CliError::usage)?;
    let root = log
        .actor_id(&args.root)
        .ok_or_else(|| CliError::Usage(format!("actor `{}` does not appear in the log", args.root)))?;

    let mut h = changes.hypergraph.clone();
    let mut he;
    let mut dr;
    let maintainer: &mut dyn ShortestPathMaintainer = match args.algo {
        Algo::He => {
            he = HeDsp::new(&h, root).map_err(CliError::usage)?;
            &mut he
        }
        Algo::Dr => {
            dr = DrDsp::new(&h, root).map_err(CliError::usage)?;
            &mut dr
        }
    };

    let mut timing = String::from(EVENT_CSV_HEADER);
    timing.push('\n');
    for (event_id, ev) in changes.events.iter().enumerate() {
        let t0 = Instant::now();
        let affected = maintainer
            .apply(&mut h, *ev)
            .expect("email change streams are valid by construction");
        let elapsed_ns = t0.elapsed().as_nanos();
        timing.push_str(&format!(
            "{event_id},{},{},{},{elapsed_ns},{}\n",
            ev.kind_str(),
            ev.edge(),
            affected.len(),
            maintainer.trace().counters.scans,
        ));
    }
    if let Some(path) = &args.timing_out {
        write_file(path, &timing)?;
    }

    // Closeness ranking over the final hypergraph, labeled by actor name.
    let ranked = centrality::most_important_actor(&h).map_err(CliError::usage)?;
    let mut csv = String::from("vertex,total,reachable,rank\n");
    for (rank, c) in ranked.iter().enumerate() {
        csv.push_str(&format!(
            "{},{},{},{}\n",
            log.actors[c.vertex],
            c.total,
            c.reachable,
            rank + 1
        ));
    }
    emit(args.centrality_out.as_deref(), &csv)?;

    if let Some(profile_out) = &args.profile_out {
        let roles_path = args
            .roles
            .as_ref()
            .ok_or_else(|| CliError::Usage("--profile-out needs --roles".into()))?;
        let mut groups: BTreeMap<usize, String> = BTreeMap::new();
        for (idx, line) in read_file(roles_path)?.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let (actor, label) = line.split_once(',').ok_or_else(|| {
                io_err(roles_path, format!("line {}: expected `actor,label`", idx + 1))
            })?;
            if let Some(id) = log.actor_id(actor.trim()) {
                groups.insert(id, label.trim().to_string());
            }
        }
        let profile =
            centrality::distance_profile(maintainer.state(), &groups).map_err(CliError::usage)?;
        let mut csv = String::from("label,mean_distance,count\n");
        for (label, stats) in profile {
            let mean = stats.mean.map_or(String::new(), |m| m.to_string());
            csv.push_str(&format!("{label},{mean},{}\n", stats.count));
        }
        write_file(profile_out, &csv)?;
    }
    Ok(())
}
