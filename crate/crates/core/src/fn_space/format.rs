//! Text formats for structures and generator specs.
//!
//! ```text
//! fnstruct v1
//! 1 1 -
//! 2 0.25 6.283185307179586
//! ```
//!
//! Each data line is `index length twist`, with `-` as the twist of a
//! boundary curve. Indices start at 1 and increase by one. A generator spec
//! is a single line such as `generator v1 kind=ex_fn1_y n=4`.

use crate::error::{Error, Result};

use super::coords::{FNCoordinate, StructureGenerator, StructureWindow};

/// A parsed input file.
#[derive(Debug, Clone, PartialEq)]
pub enum StructureInput {
    Window(StructureWindow),
    Generator(StructureGenerator),
}

impl StructureInput {
    /// The structure restricted to curves `1..=size`; `None` keeps a
    /// literal table whole.
    pub fn window(&self, size: Option<usize>) -> Result<StructureWindow> {
        match (self, size) {
            (StructureInput::Window(w), None) => Ok(w.clone()),
            (StructureInput::Window(w), Some(n)) if n == w.len() => Ok(w.clone()),
            (StructureInput::Window(w), Some(n)) => Err(Error::Usage(format!(
                "window {n} does not match the {} curves in the file",
                w.len()
            ))),
            (StructureInput::Generator(g), Some(n)) => g.window(n),
            (StructureInput::Generator(_), None) => Err(Error::Usage(
                "a generator spec needs an explicit window".into(),
            )),
        }
    }
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_input(text: &str) -> Result<StructureInput> {
    match data_lines(text).next() {
        Some((_, l)) if l.starts_with("generator") => {
            parse_generator(text).map(StructureInput::Generator)
        }
        Some(_) => parse_structure(text).map(StructureInput::Window),
        None => Err(Error::parse(1, "empty input")),
    }
}

pub fn parse_structure(text: &str) -> Result<StructureWindow> {
    let mut lines = data_lines(text);
    match lines.next() {
        Some((_, "fnstruct v1")) => {}
        Some((n, _)) => return Err(Error::parse(n, "expected header `fnstruct v1`")),
        None => return Err(Error::parse(1, "empty structure file")),
    }
    let mut entries = Vec::new();
    for (n, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [index, length, twist] = fields.as_slice() else {
            return Err(Error::parse(n, "expected `index length twist`"));
        };
        let index: usize = index
            .parse()
            .map_err(|_| Error::parse(n, format!("bad index {index:?}")))?;
        if index != entries.len() + 1 {
            return Err(Error::parse(
                n,
                format!("expected index {}, found {index}", entries.len() + 1),
            ));
        }
        let length: f64 = length
            .parse()
            .map_err(|_| Error::parse(n, format!("bad length {length:?}")))?;
        let twist = match *twist {
            "-" => None,
            t => Some(
                t.parse::<f64>()
                    .map_err(|_| Error::parse(n, format!("bad twist {t:?}")))?,
            ),
        };
        let coord = FNCoordinate::new(length, twist).map_err(|e| Error::parse(n, e.to_string()))?;
        entries.push(coord);
    }
    StructureWindow::literal(entries).map_err(|_| Error::parse(1, "structure has no curves"))
}

/// Writes `fnstruct v1` with shortest round-trip decimal forms.
pub fn write_structure(w: &StructureWindow) -> String {
    let mut s = String::from("fnstruct v1\n");
    for (i, c) in w.entries().iter().enumerate() {
        match c.twist() {
            Some(t) => s.push_str(&format!("{} {} {}\n", i + 1, c.length(), t)),
            None => s.push_str(&format!("{} {} -\n", i + 1, c.length())),
        }
    }
    s
}

/// Parses `generator v1 kind=<kind> n=<int>`. `constant` also accepts
/// `length=` and `twist=` (defaults 1 and 0) and ignores `n`; the `pants1`
/// kinds ignore `n`.
pub fn parse_generator(text: &str) -> Result<StructureGenerator> {
    let mut lines = data_lines(text);
    let Some((n, line)) = lines.next() else {
        return Err(Error::parse(1, "empty generator spec"));
    };
    if let Some((extra, _)) = lines.next() {
        return Err(Error::parse(extra, "a generator spec is a single line"));
    }
    let mut fields = line.split_whitespace();
    if fields.next() != Some("generator") || fields.next() != Some("v1") {
        return Err(Error::parse(n, "expected `generator v1`"));
    }
    let (mut kind, mut count, mut length, mut twist) = (None, None, 1.0, 0.0);
    for field in fields {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| Error::parse(n, format!("expected key=value, found {field:?}")))?;
        let real = |v: &str| {
            v.parse::<f64>()
                .map_err(|_| Error::parse(n, format!("bad {key} {v:?}")))
        };
        match key {
            "kind" => kind = Some(value),
            "n" => {
                count = Some(
                    value
                        .parse::<u64>()
                        .ok()
                        .filter(|&v| v >= 1)
                        .ok_or_else(|| {
                            Error::parse(
                                n,
                                format!("n must be a positive integer, found {value:?}"),
                            )
                        })?,
                )
            }
            "length" => length = real(value)?,
            "twist" => twist = real(value)?,
            _ => return Err(Error::parse(n, format!("unknown key {key:?}"))),
        }
    }
    let need_n = || count.ok_or_else(|| Error::parse(n, "missing n=<integer>"));
    let g = match kind.ok_or_else(|| Error::parse(n, "missing kind=<kind>"))? {
        "constant" => {
            FNCoordinate::interior(length, twist).map_err(|e| Error::parse(n, e.to_string()))?;
            StructureGenerator::Constant { length, twist }
        }
        "ex_fn1_x" => StructureGenerator::ExFn1X { n: need_n()? },
        "ex_fn1_y" => StructureGenerator::ExFn1Y { n: need_n()? },
        "ex_fn2_x" => StructureGenerator::ExFn2X { n: need_n()? },
        "ex_fn2_y" => StructureGenerator::ExFn2Y { n: need_n()? },
        "pants1" => StructureGenerator::Pants1,
        "pants1_recut" => StructureGenerator::Pants1Recut,
        "table" => {
            return Err(Error::parse(
                n,
                "table structures are given as fnstruct v1 files",
            ))
        }
        other => return Err(Error::parse(n, format!("unknown generator kind {other:?}"))),
    };
    Ok(g)
}

/// The spec line for a generator; `None` for tables.
pub fn write_generator(g: &StructureGenerator) -> Option<String> {
    let tail = match g {
        StructureGenerator::Constant { length, twist } => {
            format!("n=1 length={length} twist={twist}")
        }
        StructureGenerator::ExFn1X { n }
        | StructureGenerator::ExFn1Y { n }
        | StructureGenerator::ExFn2X { n }
        | StructureGenerator::ExFn2Y { n } => format!("n={n}"),
        StructureGenerator::Pants1 | StructureGenerator::Pants1Recut => "n=1".into(),
        StructureGenerator::Table(_) => return None,
    };
    Some(format!("generator v1 kind={} {tail}\n", g.kind_name()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structure_round_trip() {
        let w = StructureWindow::literal(vec![
            FNCoordinate::boundary(1.0).unwrap(),
            FNCoordinate::interior(0.1, std::f64::consts::TAU).unwrap(),
            FNCoordinate::interior(1.0 / 3.0, -0.0).unwrap(),
        ])
        .unwrap();
        let text = write_structure(&w);
        assert_eq!(parse_structure(&text).unwrap(), w);
        assert!(text.starts_with("fnstruct v1\n1 1 -\n2 0.1 6.283185307179586\n"));
    }

    #[test]
    fn structure_errors_carry_line_numbers() {
        let cases = [
            ("fnstruct v2\n1 1 0", 1),
            ("fnstruct v1\n1 1 0\n3 1 0", 3),
            ("fnstruct v1\n1 0 0", 2),
            ("fnstruct v1\n\n1 1 x", 3),
            ("fnstruct v1\n1 1", 2),
        ];
        for (text, line) in cases {
            match parse_structure(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn generator_specs() {
        let g = parse_generator("generator v1 kind=ex_fn1_y n=4").unwrap();
        assert_eq!(g, StructureGenerator::ExFn1Y { n: 4 });
        assert_eq!(parse_generator(&write_generator(&g).unwrap()).unwrap(), g);
        let c = parse_generator("generator v1 kind=constant n=1").unwrap();
        assert_eq!(
            c,
            StructureGenerator::Constant {
                length: 1.0,
                twist: 0.0
            }
        );
        assert!(parse_generator("generator v1 kind=ex_fn1_y").is_err());
        assert!(parse_generator("generator v1 kind=ex_fn1_y n=0").is_err());
        assert!(parse_generator("generator v1 kind=bogus n=1").is_err());
    }

    #[test]
    fn input_dispatch() {
        assert!(matches!(
            parse_input("generator v1 kind=pants1 n=1").unwrap(),
            StructureInput::Generator(StructureGenerator::Pants1)
        ));
        let w = parse_input("fnstruct v1\n1 2 0\n").unwrap();
        assert!(w.window(None).is_ok());
        assert!(w.window(Some(2)).is_err());
    }
}
