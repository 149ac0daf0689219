//! Plain-text interchange formats.
//!
//! Hypergraph: first line `n m`, then one line per hyperedge,
//! `weight k v_1 ... v_k`. A weight of `inf` marks a deleted hyperedge whose
//! id and vertex set are retained for later insertion. Change sequences:
//! one event per line, `kind edge_id [new_weight]` with kind one of
//! `inc dec ins del`. Coordinates: one `v x y` line per vertex.
//! Solved states: one `v dist parent via_edge` line per vertex, `-` for
//! absent links.

use crate::error::{Error, Result};
use crate::hypergraph::{ChangeEvent, Hypergraph, HypergraphBuilder};
use crate::sssp::SPState;
use crate::weight::Weight;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("{} {}\n", h.vertex_count(), h.edge_count());
    for e in h.edges() {
        out.push_str(&format!("{} {}", e.weight, e.vertices.len()));
        for v in &e.vertices {
            out.push_str(&format!(" {v}"));
        }
        out.push('\n');
    }
    out
}

pub fn read_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "empty input"))?;
    let mut head = header.split_whitespace();
    let n: usize = parse_field(head.next(), 1, "vertex count")?;
    let m: usize = parse_field(head.next(), 1, "edge count")?;
    let mut builder = HypergraphBuilder::new(n);
    let mut seen = 0;
    for (idx, line) in lines {
        let lineno = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let weight: Weight = parse_field(fields.next(), lineno, "weight")?;
        let k: usize = parse_field(fields.next(), lineno, "vertex count")?;
        let mut vertices = Vec::with_capacity(k);
        for _ in 0..k {
            vertices.push(parse_field(fields.next(), lineno, "vertex")?);
        }
        if fields.next().is_some() {
            return Err(parse_err(lineno, "trailing fields"));
        }
        if weight.is_infinite() {
            builder.dormant(vertices)?;
        } else {
            builder.edge(vertices, weight)?;
        }
        seen += 1;
    }
    if seen != m {
        return Err(parse_err(seen + 1, format!("expected {m} edges, found {seen}")));
    }
    Ok(builder.build())
}

pub fn write_changes(events: &[ChangeEvent]) -> String {
    let mut out = String::new();
    for ev in events {
        match *ev {
            ChangeEvent::Increase { edge, weight } => out.push_str(&format!("inc {edge} {weight}\n")),
            ChangeEvent::Decrease { edge, weight } => out.push_str(&format!("dec {edge} {weight}\n")),
            ChangeEvent::Insert { edge, weight } => out.push_str(&format!("ins {edge} {weight}\n")),
            ChangeEvent::Delete { edge } => out.push_str(&format!("del {edge}\n")),
        }
    }
    out
}

pub fn read_changes(text: &str) -> Result<Vec<ChangeEvent>> {
    let mut events = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let kind = fields.next().expect("nonempty line has a first field");
        let edge = parse_field(fields.next(), lineno, "edge id")?;
        let ev = match kind {
            "del" => ChangeEvent::Delete { edge },
            "inc" | "dec" | "ins" => {
                let weight: Weight = parse_field(fields.next(), lineno, "weight")?;
                match kind {
                    "inc" => ChangeEvent::Increase { edge, weight },
                    "dec" => ChangeEvent::Decrease { edge, weight },
                    _ => ChangeEvent::Insert { edge, weight },
                }
            }
            other => return Err(parse_err(lineno, format!("unknown change kind `{other}`"))),
        };
        if fields.next().is_some() {
            return Err(parse_err(lineno, "trailing fields"));
        }
        events.push(ev);
    }
    Ok(events)
}

pub fn write_coords(coords: &[(f64, f64)]) -> String {
    let mut out = String::new();
    for (v, (x, y)) in coords.iter().enumerate() {
        out.push_str(&format!("{v} {x} {y}\n"));
    }
    out
}

pub fn read_coords(text: &str) -> Result<Vec<(f64, f64)>> {
    let mut coords = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let v: usize = parse_field(fields.next(), lineno, "vertex")?;
        if v != coords.len() {
            return Err(parse_err(lineno, format!("expected vertex {}, got {v}", coords.len())));
        }
        let x: f64 = parse_field(fields.next(), lineno, "x")?;
        let y: f64 = parse_field(fields.next(), lineno, "y")?;
        coords.push((x, y));
    }
    Ok(coords)
}

/// `v dist parent via_edge` per vertex, `-` for absent links.
pub fn write_sp_state(st: &SPState) -> String {
    let mut out = String::new();
    for v in 0..st.vertex_count() {
        let p = st.parent[v].map_or("-".to_string(), |p| p.to_string());
        let e = st.via_edge[v].map_or("-".to_string(), |e| e.to_string());
        out.push_str(&format!("{v} {} {p} {e}\n", st.dist[v]));
    }
    out
}

fn parse_field<T: std::str::FromStr>(
    field: Option<&str>,
    line: usize,
    what: &str,
) -> Result<T> {
    field
        .ok_or_else(|| parse_err(line, format!("missing {what}")))?
        .parse()
        .map_err(|_| parse_err(line, format!("bad {what} `{}`", field.unwrap())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::sample9;
    use crate::hypergraph::ChangeEvent;

    #[test]
    fn hypergraph_round_trip_preserves_everything() {
        let mut h = sample9();
        h.apply_change(&ChangeEvent::Decrease { edge: 1, weight: 0.125 }).unwrap();
        h.apply_change(&ChangeEvent::Delete { edge: 3 }).unwrap();
        let text = write_hypergraph(&h);
        let back = read_hypergraph(&text).unwrap();
        assert_eq!(back.vertex_count(), h.vertex_count());
        for (a, b) in h.edges().zip(back.edges()) {
            assert_eq!(a, b);
        }
        assert_eq!(write_hypergraph(&back), text);
    }

    #[test]
    fn changes_round_trip() {
        let events = vec![
            ChangeEvent::Decrease { edge: 1, weight: 0.5 },
            ChangeEvent::Delete { edge: 0 },
            ChangeEvent::Insert { edge: 0, weight: 2.25 },
            ChangeEvent::Increase { edge: 2, weight: 19.0 },
        ];
        let text = write_changes(&events);
        assert_eq!(read_changes(&text).unwrap(), events);
    }

    #[test]
    fn malformed_inputs_name_the_line() {
        let err = read_hypergraph("2 1\n1.0 2 0\n").unwrap_err();
        assert_eq!(err, Error::Parse { line: 2, message: "missing vertex".into() });
        let err = read_changes("inc 0 1\nbogus 1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn coords_round_trip() {
        let coords = vec![(0.5, 1.25), (3.0, 4.75)];
        assert_eq!(read_coords(&write_coords(&coords)).unwrap(), coords);
    }
}
