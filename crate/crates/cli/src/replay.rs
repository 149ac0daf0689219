use std::path::PathBuf;
use std::time::Instant;

use hyperpath::changes::{ChangeGenerator, ChangeMode, ChangeModelParams};
use hyperpath::dynamic::{dr::DrDsp, he::HeDsp};
use hyperpath::format;
use hyperpath::oracle;
use hyperpath::{Hypergraph, ShortestPathMaintainer, VertexId};

use crate::util::{emit, io_err, read_file, write_file, CliError};

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Algo {
    He,
    Dr,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Random,
    Targeted,
}

impl From<Mode> for ChangeMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Random => ChangeMode::Random,
            Mode::Targeted => ChangeMode::Targeted,
        }
    }
}

#[derive(clap::Args)]
pub struct Args {
    /// Hypergraph file.
    #[arg(long)]
    input: PathBuf,
    /// Coordinates sidecar; needed when `--source` is omitted, to pick the
    /// vertex nearest the origin corner.
    #[arg(long)]
    coords: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub algo: Algo,
    #[arg(long, value_enum, default_value = "random")]
    mode: Mode,
    /// Number of events to apply.
    #[arg(long)]
    events: usize,
    /// Source vertex; defaults to the vertex nearest the (0,0) corner.
    #[arg(long)]
    source: Option<VertexId>,
    /// Replay this pre-drawn change file instead of drawing online.
    #[arg(long)]
    changes: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 0.25)]
    p_ins: f64,
    #[arg(long, default_value_t = 0.25)]
    p_del: f64,
    #[arg(long, default_value_t = 10.0)]
    w_min: f64,
    #[arg(long, default_value_t = 20.0)]
    w_max: f64,
    /// `every=K`: recompute from scratch every K events and abort on any
    /// mismatch (exit code 2).
    #[arg(long)]
    verify: Option<String>,
    /// Event CSV destination (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Dump the final state (`v dist parent via` lines) to this file.
    #[arg(long)]
    dump_final: Option<PathBuf>,
}

pub fn resolve_source(
    source: Option<VertexId>,
    coords: Option<&PathBuf>,
    h: &Hypergraph,
) -> Result<VertexId, CliError> {
    if let Some(s) = source {
        if s >= h.vertex_count() {
            return Err(CliError::Usage(format!(
                "source {s} out of range for {} vertices",
                h.vertex_count()
            )));
        }
        return Ok(s);
    }
    let path = coords.ok_or_else(|| {
        CliError::Usage("need --source or --coords to locate the corner vertex".into())
    })?;
    let coords = format::read_coords(&read_file(path)?).map_err(|e| io_err(path, e))?;
    if coords.len() != h.vertex_count() {
        return Err(CliError::Usage(format!(
            "coordinates file has {} vertices, hypergraph has {}",
            coords.len(),
            h.vertex_count()
        )));
    }
    Ok((0..coords.len())
        .min_by(|&a, &b| (coords[a].0 + coords[a].1).total_cmp(&(coords[b].0 + coords[b].1)))
        .expect("hypergraphs have at least one vertex"))
}

fn parse_verify(spec: Option<&str>) -> Result<usize, CliError> {
    match spec {
        None => Ok(0),
        Some(s) => match s.strip_prefix("every=").map(str::parse) {
            Some(Ok(k)) => Ok(k),
            _ => Err(CliError::Usage(format!("--verify expects `every=K`, got `{s}`"))),
        },
    }
}

pub const EVENT_CSV_HEADER: &str = "event_id,kind,edge,affected,elapsed_ns,scans";

pub fn run(args: Args) -> Result<(), CliError> {
    let text = read_file(&args.input)?;
    let mut h = format::read_hypergraph(&text).map_err(|e| io_err(&args.input, e))?;
    let source = resolve_source(args.source, args.coords.as_ref(), &h)?;
    let verify_every = parse_verify(args.verify.as_deref())?;

    let mut he;
    let mut dr;
    let maintainer: &mut dyn ShortestPathMaintainer = match args.algo {
        Algo::He => {
            he = HeDsp::new(&h, source).map_err(CliError::usage)?;
            &mut he
        }
        Algo::Dr => {
            dr = DrDsp::new(&h, source).map_err(CliError::usage)?;
            &mut dr
        }
    };

    let mut script = match &args.changes {
        Some(path) => Some(
            format::read_changes(&read_file(path)?)
                .map_err(|e| io_err(path, e))?
                .into_iter(),
        ),
        None => None,
    };
    let mut gen = match script {
        Some(_) => None,
        None => Some(
            ChangeGenerator::new(
                ChangeModelParams {
                    p_insert: args.p_ins,
                    p_delete: args.p_del,
                    w_min: args.w_min,
                    w_max: args.w_max,
                    mode: args.mode.into(),
                    seed: args.seed,
                    integer_weights: false,
                },
                &h,
            )
            .map_err(CliError::usage)?,
        ),
    };

    let mut csv = String::from(EVENT_CSV_HEADER);
    csv.push('\n');
    for event_id in 0..args.events {
        let ev = if let Some(script) = &mut script {
            match script.next() {
                Some(ev) => ev,
                None => break, // change file exhausted
            }
        } else {
            let gen = gen.as_mut().expect("generator exists when no change file");
            loop {
                match gen.next_change(&h, Some(maintainer.state())) {
                    Ok(ev) => break ev,
                    Err(hyperpath::Error::NothingToTarget) => continue,
                    Err(e) => return Err(CliError::usage(e)),
                }
            }
        };
        let t0 = Instant::now();
        let affected = maintainer
            .apply(&mut h, ev)
            .map_err(|e| CliError::Io(format!("event {event_id} ({ev:?}) rejected: {e}")))?;
        let elapsed_ns = t0.elapsed().as_nanos();
        csv.push_str(&format!(
            "{event_id},{},{},{},{elapsed_ns},{}\n",
            ev.kind_str(),
            ev.edge(),
            affected.len(),
            maintainer.trace().counters.scans,
        ));

        if verify_every > 0 && (event_id + 1) % verify_every == 0 {
            let fresh = oracle::recompute(&h, source).map_err(CliError::usage)?;
            if maintainer.state().dist != fresh.dist {
                return Err(CliError::Verify(format!(
                    "distances diverged from recomputation after event {event_id}"
                )));
            }
            let report = oracle::certify(&h, maintainer.state());
            if !report.is_empty() {
                return Err(CliError::Verify(format!(
                    "certificate failed after event {event_id}: {}",
                    report[0]
                )));
            }
        }
    }

    emit(args.out.as_deref(), &csv)?;
    if let Some(path) = &args.dump_final {
        write_file(path, &format::write_sp_state(maintainer.state()))?;
    }
    Ok(())
}
