//! Combinatorics of a pants decomposition.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::report::{CheckEntry, VerificationReport};

/// One of the three boundary slots of a pair of pants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Slot {
    Curve(usize),
    Cusp,
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slot::Curve(id) => write!(f, "{id}"),
            Slot::Cusp => write!(f, "cusp"),
        }
    }
}

/// Pants with three slots each, and the curves the slots refer to.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PantsGraph {
    pants: Vec<[Slot; 3]>,
    /// Curve id to boundary flag.
    curves: BTreeMap<usize, bool>,
}

impl PantsGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_curve(&mut self, id: usize, boundary: bool) {
        self.curves.insert(id, boundary);
    }

    /// Adds a pair of pants and returns its 1-based id.
    pub fn add_pants(&mut self, slots: [Slot; 3]) -> usize {
        self.pants.push(slots);
        self.pants.len()
    }

    pub fn pants(&self) -> &[[Slot; 3]] {
        &self.pants
    }

    pub fn curves(&self) -> impl Iterator<Item = (usize, bool)> + '_ {
        self.curves.iter().map(|(&id, &b)| (id, b))
    }

    pub fn is_boundary(&self, id: usize) -> Option<bool> {
        self.curves.get(&id).copied()
    }

    /// `(pants id, slot index)` pairs referring to curve `id`, both 1-based.
    pub fn incident_slots(&self, id: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (p, slots) in self.pants.iter().enumerate() {
            for (s, slot) in slots.iter().enumerate() {
                if *slot == Slot::Curve(id) {
                    out.push((p + 1, s + 1));
                }
            }
        }
        out
    }

    /// Text form: a `pantsgraph v1` header, `curve <id> boundary|interior`
    /// lines, then `pants <slot> <slot> <slot>` lines.
    pub fn to_text(&self) -> String {
        let mut s = String::from("pantsgraph v1\n");
        for (id, boundary) in self.curves() {
            let kind = if boundary { "boundary" } else { "interior" };
            s.push_str(&format!("curve {id} {kind}\n"));
        }
        for slots in &self.pants {
            s.push_str(&format!("pants {} {} {}\n", slots[0], slots[1], slots[2]));
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        match lines.next() {
            Some((_, "pantsgraph v1")) => {}
            Some((n, _)) => return Err(Error::parse(n, "expected header `pantsgraph v1`")),
            None => return Err(Error::parse(1, "empty pants graph")),
        }
        let mut g = PantsGraph::new();
        for (n, line) in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let id = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::parse(n, format!("bad curve id {s:?}")))
            };
            match fields.as_slice() {
                ["curve", c, kind] => {
                    let boundary = match *kind {
                        "boundary" => true,
                        "interior" => false,
                        other => return Err(Error::parse(n, format!("bad curve kind {other:?}"))),
                    };
                    g.add_curve(id(c)?, boundary);
                }
                ["pants", a, b, c] => {
                    let slot = |s: &str| -> Result<Slot> {
                        if s == "cusp" {
                            Ok(Slot::Cusp)
                        } else {
                            id(s).map(Slot::Curve)
                        }
                    };
                    g.add_pants([slot(a)?, slot(b)?, slot(c)?]);
                }
                _ => return Err(Error::parse(n, format!("unrecognised line {line:?}"))),
            }
        }
        Ok(g)
    }
}

/// Every slot names a known curve, interior curves fill exactly two slots
/// and boundary curves exactly one.
pub fn validate_pants_graph(g: &PantsGraph) -> VerificationReport {
    let mut report = VerificationReport::new(format!(
        "pants graph: {} pants, {} curves",
        g.pants.len(),
        g.curves.len()
    ));
    for (p, slots) in g.pants.iter().enumerate() {
        for (s, slot) in slots.iter().enumerate() {
            if let Slot::Curve(id) = slot {
                if !g.curves.contains_key(id) {
                    report.push(CheckEntry::structural(
                        format!("pants {} slot {}", p + 1, s + 1),
                        false,
                        Some(format!("unknown curve {id}")),
                    ));
                }
            }
        }
    }
    for (id, boundary) in g.curves() {
        let incident = g.incident_slots(id);
        let expected = if boundary { 1 } else { 2 };
        let ok = incident.len() == expected;
        let note = (!ok).then(|| {
            let at: Vec<String> = incident.iter().map(|(p, s)| format!("{p}.{s}")).collect();
            format!(
                "{} curve in {} slots (expected {expected}): [{}]",
                if boundary { "boundary" } else { "interior" },
                incident.len(),
                at.join(", ")
            )
        });
        report.push(CheckEntry::structural(format!("curve {id}"), ok, note));
    }
    report
}
