//! Coordinates, finite windows and lazily evaluated coordinate sequences.

use std::f64::consts::TAU;
use std::fmt;

use crate::error::{require_positive, Error, Result};
use crate::examples::pants1_arc_length;

/// Length and twist of one decomposition curve. Boundary curves carry no
/// twist.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FNCoordinate {
    length: f64,
    twist: Option<f64>,
}

impl FNCoordinate {
    pub fn interior(length: f64, twist: f64) -> Result<Self> {
        if !twist.is_finite() {
            return Err(Error::domain(
                "coordinate",
                format!("twist must be finite, got {twist}"),
            ));
        }
        require_positive("coordinate", "length", length)?;
        Ok(FNCoordinate {
            length,
            twist: Some(twist),
        })
    }

    pub fn boundary(length: f64) -> Result<Self> {
        require_positive("coordinate", "length", length)?;
        Ok(FNCoordinate {
            length,
            twist: None,
        })
    }

    pub fn new(length: f64, twist: Option<f64>) -> Result<Self> {
        match twist {
            Some(t) => Self::interior(length, t),
            None => Self::boundary(length),
        }
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn twist(&self) -> Option<f64> {
        self.twist
    }

    pub fn is_boundary(&self) -> bool {
        self.twist.is_none()
    }
}

/// A coordinate sequence indexed from 1, possibly infinite.
#[derive(Debug, Clone, PartialEq)]
pub enum StructureGenerator {
    /// Every curve interior with the same coordinates.
    Constant { length: f64, twist: f64 },
    /// Length `1/n` at curve `n`, `1` elsewhere, no twist.
    ExFn1X { n: u64 },
    /// As `ExFn1X` with twist `2π` at curve `n`.
    ExFn1Y { n: u64 },
    /// Length `1/n` at curve `n`, `1` elsewhere, no twist.
    ExFn2X { n: u64 },
    /// Length `1/n^2` at curve `n`, `1` elsewhere, no twist.
    ExFn2Y { n: u64 },
    /// Chain of surfaces `X_1, X_2, ...`, each two copies of a pair of pants
    /// with one cusp and boundary lengths `1, n` glued along the length-`n`
    /// curve `W_n`. Curve 1 is the free boundary `E_0`, curve `2n` is `W_n`
    /// and curve `2n + 1` is `E_n`, the length-1 curve joining `X_n` to
    /// `X_{n+1}`. All twists are zero.
    Pants1,
    /// As `Pants1` with each `W_n` replaced by the closed geodesic made of
    /// two copies of the shortest arc from `W_n` to itself separating the
    /// cusp from the length-1 boundary.
    Pants1Recut,
    /// A finite literal table.
    Table(Vec<FNCoordinate>),
}

impl StructureGenerator {
    pub fn kind_name(&self) -> &'static str {
        match self {
            StructureGenerator::Constant { .. } => "constant",
            StructureGenerator::ExFn1X { .. } => "ex_fn1_x",
            StructureGenerator::ExFn1Y { .. } => "ex_fn1_y",
            StructureGenerator::ExFn2X { .. } => "ex_fn2_x",
            StructureGenerator::ExFn2Y { .. } => "ex_fn2_y",
            StructureGenerator::Pants1 => "pants1",
            StructureGenerator::Pants1Recut => "pants1_recut",
            StructureGenerator::Table(_) => "table",
        }
    }

    /// Number of curves, `None` for infinite sequences.
    pub fn curve_count(&self) -> Option<usize> {
        match self {
            StructureGenerator::Table(t) => Some(t.len()),
            _ => None,
        }
    }

    /// The first index from which every coordinate equals the coordinate at
    /// that index, if any.
    pub fn stable_from(&self) -> Option<usize> {
        match self {
            StructureGenerator::Constant { .. } => Some(1),
            StructureGenerator::ExFn1X { n }
            | StructureGenerator::ExFn1Y { n }
            | StructureGenerator::ExFn2X { n }
            | StructureGenerator::ExFn2Y { n } => usize::try_from(*n).ok().map(|n| n + 1),
            StructureGenerator::Pants1 | StructureGenerator::Pants1Recut => None,
            StructureGenerator::Table(_) => None,
        }
    }

    /// Coordinate of curve `index` (1-based).
    pub fn coordinate(&self, index: usize) -> Option<FNCoordinate> {
        if index == 0 {
            return None;
        }
        let coord =
            |l: f64, t: f64| FNCoordinate::interior(l, t).expect("generator lengths are positive");
        let at_n = |n: u64| index as u64 == n;
        Some(match self {
            StructureGenerator::Constant { length, twist } => coord(*length, *twist),
            StructureGenerator::ExFn1X { n } | StructureGenerator::ExFn2X { n } => {
                coord(if at_n(*n) { 1.0 / *n as f64 } else { 1.0 }, 0.0)
            }
            StructureGenerator::ExFn1Y { n } => {
                if at_n(*n) {
                    coord(1.0 / *n as f64, TAU)
                } else {
                    coord(1.0, 0.0)
                }
            }
            StructureGenerator::ExFn2Y { n } => {
                let nf = *n as f64;
                coord(if at_n(*n) { 1.0 / (nf * nf) } else { 1.0 }, 0.0)
            }
            StructureGenerator::Pants1 | StructureGenerator::Pants1Recut => {
                if index == 1 {
                    return Some(FNCoordinate::boundary(1.0).expect("positive"));
                }
                if index % 2 == 1 {
                    coord(1.0, 0.0)
                } else {
                    let n = (index / 2) as u64;
                    if matches!(self, StructureGenerator::Pants1) {
                        coord(n as f64, 0.0)
                    } else {
                        coord(2.0 * pants1_arc_length(n).ok()?.l, 0.0)
                    }
                }
            }
            StructureGenerator::Table(t) => return t.get(index - 1).copied(),
        })
    }

    /// Curves `1..=size`.
    pub fn window(&self, size: usize) -> Result<StructureWindow> {
        if size == 0 {
            return Err(Error::Usage("window must be at least 1".into()));
        }
        if let Some(len) = self.curve_count() {
            if size > len {
                return Err(Error::Usage(format!(
                    "window {size} exceeds the {len} curves of the table"
                )));
            }
        }
        let entries = (1..=size)
            .map(|i| {
                self.coordinate(i).ok_or_else(|| {
                    Error::domain("generator", format!("no coordinate for curve {i}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(StructureWindow {
            entries,
            source: StructureSource::Generator(self.clone()),
        })
    }
}

impl fmt::Display for StructureGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind_name())?;
        match self {
            StructureGenerator::Constant { length, twist } => {
                write!(f, " length={length} twist={twist}")
            }
            StructureGenerator::ExFn1X { n }
            | StructureGenerator::ExFn1Y { n }
            | StructureGenerator::ExFn2X { n }
            | StructureGenerator::ExFn2Y { n } => write!(f, " n={n}"),
            StructureGenerator::Table(t) => write!(f, " ({} curves)", t.len()),
            _ => Ok(()),
        }
    }
}

/// Where a window's coordinates came from.
#[derive(Debug, Clone, PartialEq)]
pub enum StructureSource {
    /// The window is the whole structure.
    Literal,
    Generator(StructureGenerator),
}

/// Coordinates of curves `1..=len`.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureWindow {
    entries: Vec<FNCoordinate>,
    source: StructureSource,
}

impl StructureWindow {
    pub fn literal(entries: Vec<FNCoordinate>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Usage("a structure needs at least one curve".into()));
        }
        Ok(StructureWindow {
            entries,
            source: StructureSource::Literal,
        })
    }

    pub fn entries(&self) -> &[FNCoordinate] {
        &self.entries
    }

    pub fn source(&self) -> &StructureSource {
        &self.source
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The coordinate of curve `index` (1-based).
    pub fn get(&self, index: usize) -> Option<FNCoordinate> {
        index
            .checked_sub(1)
            .and_then(|i| self.entries.get(i))
            .copied()
    }
}
