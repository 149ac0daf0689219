//! Email-log ingestion: every message's sender plus recipients form a
//! hyperedge over the interned actors.
//!
//! The weight of a hyperedge on its `l`-th appearance is
//! `sqrt(|e|) ^ (alpha ^ (l - 1))`: wider groups mean weaker ties, repeated
//! groups mean stronger ones. For `|e| >= 2` and `alpha < 1` the weight
//! strictly decreases with every repeat and tends to 1 from above, so each
//! repeat is a valid weight decrease.

use std::collections::HashMap;
use std::io::BufRead;

use crate::error::{Error, Result};
use crate::hypergraph::{ChangeEvent, Hypergraph, HypergraphBuilder, VertexId};
use crate::weight::Weight;

/// One email reduced to actor ids. Recipients are sorted, deduplicated and
/// never contain the sender.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmailEvent {
    pub timestamp: String,
    pub sender: VertexId,
    pub recipients: Vec<VertexId>,
}

impl EmailEvent {
    /// The hyperedge vertex set: sender plus recipients, sorted.
    pub fn vertex_set(&self) -> Vec<VertexId> {
        let mut set = self.recipients.clone();
        set.push(self.sender);
        set.sort_unstable();
        set
    }
}

#[derive(Clone, Debug, Default)]
pub struct EmailLog {
    /// Actor names in first-appearance order; index is the vertex id.
    pub actors: Vec<String>,
    pub events: Vec<EmailEvent>,
    /// Lines dropped in lax mode, with reasons.
    pub skipped: Vec<(usize, String)>,
}

impl EmailLog {
    pub fn actor_id(&self, name: &str) -> Option<VertexId> {
        self.actors.iter().position(|a| a == name)
    }
}

/// Parse `timestamp<TAB>sender<TAB>rcpt1,rcpt2,...` lines. Malformed lines
/// are fatal under `strict`, recorded and skipped otherwise. Emails whose
/// recipient set is empty after removing the sender are dropped silently:
/// they carry no interaction.
pub fn parse_email_log(input: impl BufRead, strict: bool) -> Result<EmailLog> {
    let mut log = EmailLog::default();
    let mut intern: HashMap<String, VertexId> = HashMap::new();
    for (idx, line) in input.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| Error::Parse { line: lineno, message: e.to_string() })?;
        if line.trim().is_empty() {
            continue;
        }
        let mut fields = line.split('\t');
        let (ts, sender, rcpts) = match (fields.next(), fields.next(), fields.next()) {
            (Some(a), Some(b), Some(c)) if !b.trim().is_empty() => (a, b.trim(), c),
            _ => {
                let message = "expected `timestamp<TAB>sender<TAB>recipients`".to_string();
                if strict {
                    return Err(Error::Parse { line: lineno, message });
                }
                log.skipped.push((lineno, message));
                continue;
            }
        };
        let mut id_of = |name: &str, actors: &mut Vec<String>| -> VertexId {
            *intern.entry(name.to_string()).or_insert_with(|| {
                actors.push(name.to_string());
                actors.len() - 1
            })
        };
        let sender_id = id_of(sender, &mut log.actors);
        let mut recipients: Vec<VertexId> = rcpts
            .split(',')
            .map(|r| r.trim())
            .filter(|r| !r.is_empty())
            .map(|r| id_of(r, &mut log.actors))
            .filter(|&r| r != sender_id)
            .collect();
        recipients.sort_unstable();
        recipients.dedup();
        if recipients.is_empty() {
            continue;
        }
        log.events.push(EmailEvent {
            timestamp: ts.to_string(),
            sender: sender_id,
            recipients,
        });
    }
    Ok(log)
}

/// Tie-strength weight of a hyperedge of the given cardinality on its
/// `occurrence`-th appearance (1-based).
pub fn email_weight(cardinality: usize, occurrence: u32, alpha: f64) -> Weight {
    (cardinality as f64).sqrt().powf(alpha.powi(occurrence as i32 - 1))
}

/// The dynamic sequence derived from an email log: a hypergraph holding
/// every distinct vertex set as a dormant hyperedge, plus the change stream
/// that replays the log (first appearance inserts, repeats decrease).
#[derive(Clone, Debug)]
pub struct EmailChanges {
    pub hypergraph: Hypergraph,
    pub events: Vec<ChangeEvent>,
}

pub fn emails_to_changes(n: usize, events: &[EmailEvent], alpha: f64) -> Result<EmailChanges> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::BadParams(format!("alpha must lie in (0, 1], got {alpha}")));
    }
    let mut builder = HypergraphBuilder::new(n);
    let mut edge_of: HashMap<Vec<VertexId>, usize> = HashMap::new();
    for ev in events {
        let set = ev.vertex_set();
        if !edge_of.contains_key(&set) {
            let id = builder.dormant(set.clone())?;
            edge_of.insert(set, id);
        }
    }
    let mut occurrences: HashMap<usize, u32> = HashMap::new();
    let mut changes = Vec::with_capacity(events.len());
    for ev in events {
        let set = ev.vertex_set();
        let edge = edge_of[&set];
        let l = occurrences.entry(edge).or_insert(0);
        *l += 1;
        let weight = email_weight(set.len(), *l, alpha);
        if *l == 1 {
            changes.push(ChangeEvent::Insert { edge, weight });
        } else {
            let prev = email_weight(set.len(), *l - 1, alpha);
            if weight < prev {
                changes.push(ChangeEvent::Decrease { edge, weight });
            }
            // alpha == 1 keeps the weight constant; no event to emit.
        }
    }
    Ok(EmailChanges { hypergraph: builder.build(), events: changes })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> EmailLog {
        parse_email_log(s.as_bytes(), true).unwrap()
    }

    #[test]
    fn basic_line_becomes_a_triple() {
        let log = parse("1\ta\tb,c\n");
        assert_eq!(log.actors, vec!["a", "b", "c"]);
        assert_eq!(log.events.len(), 1);
        assert_eq!(log.events[0].vertex_set(), vec![0, 1, 2]);
    }

    #[test]
    fn self_only_mail_is_dropped() {
        let log = parse("2\ta\ta\n");
        assert!(log.events.is_empty());
        assert_eq!(log.actors, vec!["a"]); // the actor still gets interned
    }

    #[test]
    fn duplicate_recipients_collapse() {
        let log = parse("3\ta\tb,b,a,b\n");
        assert_eq!(log.events[0].recipients, vec![1]);
    }

    #[test]
    fn malformed_lines_respect_strictness() {
        assert!(parse_email_log("nonsense".as_bytes(), true).is_err());
        let lax = parse_email_log("nonsense\n1\ta\tb\n".as_bytes(), false).unwrap();
        assert_eq!(lax.skipped.len(), 1);
        assert_eq!(lax.events.len(), 1);
    }

    #[test]
    fn weight_formula_fixed_points() {
        assert_eq!(email_weight(4, 1, 0.6), 2.0);
        assert!((email_weight(4, 2, 0.6) - 2f64.powf(0.6)).abs() < 1e-15);
        // Repeats drive the weight toward 1 from above.
        let mut prev = email_weight(2, 1, 0.6);
        for l in 2..40 {
            let w = email_weight(2, l, 0.6);
            assert!(w < prev && w >= 1.0, "l={l}: {w} vs {prev}");
            prev = w;
        }
        // Wider hyperedges weigh more at equal occurrence counts.
        for l in 1..10 {
            assert!(email_weight(5, l, 0.6) > email_weight(3, l, 0.6));
        }
    }

    #[test]
    fn repeats_become_decreases() {
        let log = parse("1\ta\tb,c\n2\tb\ta,c\n3\ta\tb,c\n");
        let ec = emails_to_changes(log.actors.len(), &log.events, 0.6).unwrap();
        // Both emails cover {a,b,c}; one insert then two decreases.
        assert_eq!(ec.events.len(), 3);
        assert!(matches!(ec.events[0], ChangeEvent::Insert { edge: 0, .. }));
        assert!(matches!(ec.events[1], ChangeEvent::Decrease { edge: 0, .. }));
        assert!(matches!(ec.events[2], ChangeEvent::Decrease { edge: 0, .. }));
        // The stream replays cleanly.
        let mut h = ec.hypergraph.clone();
        for ev in &ec.events {
            h.apply_change(ev).unwrap();
        }
        assert_eq!(h.edge(0).unwrap().weight, email_weight(3, 3, 0.6));
    }

    #[test]
    fn alpha_one_emits_no_repeat_events() {
        let log = parse("1\ta\tb\n2\ta\tb\n");
        let ec = emails_to_changes(log.actors.len(), &log.events, 1.0).unwrap();
        assert_eq!(ec.events.len(), 1);
    }

    #[test]
    fn alpha_out_of_range_is_rejected() {
        assert!(emails_to_changes(2, &[], 0.0).is_err());
        assert!(emails_to_changes(2, &[], 1.5).is_err());
    }
}
