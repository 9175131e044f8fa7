//! The JSON polygon file.
//!
//! A file describes one polygon with a dissection and either the values of a
//! weak frieze on every diagonal (`values`) or one frieze per cell of the
//! dissection (`pieces`), which are glued on load. Diagonal keys are `"a,b"`
//! with `a < b` in the labels of the whole polygon; values are scalar
//! expressions such as `"3/2"` or `"(x_1_2 + x_2_3)/x_1_3"`.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, ensure, Context, Result};
use serde::Deserialize;

use frieze_core::frieze::{glue, Piece, WeakFrieze};
use frieze_core::geometry::{all_diagonals, validate_dissection, Cell, Diagonal, Dissection};
use frieze_core::scalar::{format_scalar, parse_scalar, Scalar, ScalarKind, Universe};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarMode {
    Rational,
    Symbolic,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolygonFile {
    pub n: usize,
    pub scalar_mode: ScalarMode,
    #[serde(default)]
    pub variables: Option<Vec<String>>,
    #[serde(default)]
    pub dissection: Vec<[usize; 2]>,
    #[serde(default)]
    pub pieces: Option<Vec<PieceFile>>,
    #[serde(default)]
    pub values: Option<BTreeMap<String, String>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PieceFile {
    pub vertices: Vec<usize>,
    #[serde(default)]
    pub dissection: Vec<[usize; 2]>,
    pub values: BTreeMap<String, String>,
}

/// A loaded polygon file.
#[derive(Debug)]
pub struct Loaded {
    pub frieze: WeakFrieze,
    pub universe: Universe,
}

impl Loaded {
    pub fn variables(&self) -> Option<&[String]> {
        match &self.universe {
            Universe::Symbolic(v) => Some(v),
            Universe::Rational => None,
        }
    }
}

fn parse_key(key: &str, n: usize) -> Result<Diagonal> {
    let (a, b) = key
        .split_once(',')
        .ok_or_else(|| anyhow!("diagonal key {key:?} is not of the form \"a,b\""))?;
    let a: usize = a.trim().parse().with_context(|| format!("diagonal key {key:?}"))?;
    let b: usize = b.trim().parse().with_context(|| format!("diagonal key {key:?}"))?;
    ensure!(a < b, "diagonal key {key:?} must list the smaller vertex first");
    let d = Diagonal::new(a, b);
    d.check(n).with_context(|| format!("diagonal key {key:?}"))?;
    Ok(d)
}

fn dissection_of(n: usize, pairs: &[[usize; 2]]) -> Result<Dissection> {
    let ds = pairs
        .iter()
        .map(|&[a, b]| Diagonal::try_new(a, b))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(validate_dissection(n, ds)?)
}

fn parse_value(text: &str, key: &str, u: &Universe) -> Result<Scalar> {
    parse_scalar(text, u).with_context(|| format!("value {text:?} at {key}"))
}

pub fn universe(mode: ScalarMode, variables: Option<Vec<String>>) -> Result<Universe> {
    match (mode, variables) {
        (ScalarMode::Rational, None) => Ok(Universe::Rational),
        (ScalarMode::Rational, Some(_)) => bail!("\"variables\" is only allowed with scalar_mode \"symbolic\""),
        (ScalarMode::Symbolic, Some(v)) => Ok(Universe::Symbolic(v)),
        (ScalarMode::Symbolic, None) => bail!("scalar_mode \"symbolic\" needs a \"variables\" list"),
    }
}

/// Parses and validates a polygon file, gluing pieces if present.
pub fn load(text: &str) -> Result<Loaded> {
    let file: PolygonFile = serde_json::from_str(text).context("malformed polygon file")?;
    let n = file.n;
    let universe = universe(file.scalar_mode, file.variables)?;
    let gluing = dissection_of(n, &file.dissection)?;
    let frieze = match (file.values, file.pieces) {
        (Some(values), None) => {
            let mut slots: Vec<Option<Scalar>> = vec![None; n * (n - 1) / 2];
            let all = all_diagonals(n);
            for (key, text) in &values {
                let d = parse_key(key, n)?;
                let k = all.iter().position(|e| *e == d).expect("checked diagonal");
                ensure!(slots[k].is_none(), "diagonal {d} is given twice");
                slots[k] = Some(parse_value(text, key, &universe)?);
            }
            let values = all
                .iter()
                .zip(slots)
                .map(|(d, v)| v.ok_or_else(|| anyhow!("no value for diagonal {d}")))
                .collect::<Result<Vec<_>>>()?;
            WeakFrieze::new(gluing, values)?
        }
        (None, Some(pieces)) => {
            let pieces = pieces
                .into_iter()
                .map(|p| load_piece(n, p, &universe))
                .collect::<Result<Vec<_>>>()?;
            ensure!(!pieces.is_empty(), "\"pieces\" is empty");
            glue(&gluing, &pieces)?
        }
        _ => bail!("give exactly one of \"values\" and \"pieces\""),
    };
    Ok(Loaded { frieze, universe })
}

fn load_piece(n: usize, p: PieceFile, u: &Universe) -> Result<Piece> {
    let cell = Cell::new(p.vertices.iter().copied())
        .filter(|c| c.vertices().iter().all(|&v| (1..=n).contains(&v)))
        .ok_or_else(|| anyhow!("piece vertices {:?} do not form a cell of the {n}-gon", p.vertices))?;
    let m = cell.len();
    let local = |d: &Diagonal| {
        cell.to_local(d)
            .ok_or_else(|| anyhow!("diagonal {d} is not inside piece {cell}"))
    };
    let mut slots: Vec<Option<Scalar>> = vec![None; m * (m - 1) / 2];
    let all = all_diagonals(m);
    for (key, text) in &p.values {
        let d = local(&parse_key(key, n)?)?;
        let k = all.iter().position(|e| *e == d).expect("local diagonal");
        slots[k] = Some(parse_value(text, key, u)?);
    }
    let values = all
        .iter()
        .zip(slots)
        .map(|(d, v)| v.ok_or_else(|| anyhow!("piece {cell} has no value for {}", cell.to_global(d))))
        .collect::<Result<Vec<_>>>()?;
    let inner = p
        .dissection
        .iter()
        .map(|&[a, b]| local(&Diagonal::try_new(a, b)?))
        .collect::<Result<Vec<_>>>()?;
    let frieze = WeakFrieze::new(validate_dissection(m, inner)?, values)?;
    Ok(Piece::new(cell, frieze)?)
}

/// The `values` form of `f` as indented JSON with one value per line and a
/// trailing newline. Keys follow diagonal order.
pub fn write_frieze(f: &WeakFrieze, variables: Option<&[String]>) -> String {
    let json = |s: &str| serde_json::to_string(s).expect("strings serialize");
    let mode = match f.kind() {
        ScalarKind::Rational => "rational",
        ScalarKind::Symbolic => "symbolic",
    };
    let mut out = format!("{{\n  \"n\": {},\n  \"scalar_mode\": \"{mode}\",\n", f.n());
    if let Some(vs) = variables {
        let names: Vec<String> = vs.iter().map(|v| json(v)).collect();
        out += &format!("  \"variables\": [{}],\n", names.join(", "));
    }
    let pairs: Vec<String> = f
        .dissection()
        .iter()
        .map(|d| format!("[{}, {}]", d.a(), d.b()))
        .collect();
    out += &format!("  \"dissection\": [{}],\n", pairs.join(", "));
    let values: Vec<String> = f
        .iter()
        .map(|(d, v)| format!("    \"{},{}\": {}", d.a(), d.b(), json(&format_scalar(v))))
        .collect();
    out += &format!("  \"values\": {{\n{}\n  }}\n}}\n", values.join(",\n"));
    out
}
