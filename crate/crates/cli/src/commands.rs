use std::io::Read;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};

use frieze_core::frieze::{check_frieze, check_weak_frieze, render_pattern, WeakFrieze};
use frieze_core::gallery::{
    baur_marsh_frieze, bhj_det_formula, bm_det_formula, bm_variables, cell_sizes, chain_dissection, dissection_frieze,
    maldonado_check, maldonado_det_formula, overlap_identity_check, random_dissection, random_evaluation,
    random_weak_frieze, DissectionMode, MaldonadoMatrix,
};
use frieze_core::geometry::{split_polygon, validate_dissection, Diagonal, Dissection};
use frieze_core::matrix::{frieze_matrix, glue_det_check};
use frieze_core::scalar::{Scalar, ScalarKind};

use crate::format::{load, write_frieze, Loaded};
use crate::Gallery;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    fn from_ok(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn and(self, other: Status) -> Status {
        Status::from_ok(self == Status::Pass && other == Status::Pass)
    }

    fn word(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub enum CheckKind {
    Weak,
    Full,
    Diamond,
    Overlap,
}

fn read_input(path: &Path) -> Result<Loaded> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading standard input")?;
        s
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    load(&text)
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn report(failures: &[String]) -> Status {
    for f in failures {
        println!("{f}");
    }
    let status = Status::from_ok(failures.is_empty());
    match status {
        Status::Pass => println!("PASS"),
        Status::Fail => println!("FAIL: {} violation(s)", failures.len()),
    }
    status
}

pub fn check(input: &Path, kind: CheckKind) -> Result<Status> {
    let f = read_input(input)?.frieze;
    let failures: Vec<String> = match kind {
        CheckKind::Weak => check_weak_frieze(&f).iter().map(|v| v.to_string()).collect(),
        CheckKind::Full => check_frieze(&f).iter().map(|v| v.to_string()).collect(),
        CheckKind::Diamond => maldonado_check(&MaldonadoMatrix::from_frieze(&f)?)
            .iter()
            .map(|v| format!("({},{}): {} != {}", v.i, v.j, v.lhs, v.rhs))
            .collect(),
        CheckKind::Overlap => overlap_identity_check(&MaldonadoMatrix::from_frieze(&f)?)
            .iter()
            .map(|v| format!("i = {}: {} != {}", v.i, v.lhs, v.rhs))
            .collect(),
    };
    Ok(report(&failures))
}

pub fn glue(input: &Path, out: Option<&Path>) -> Result<Status> {
    let loaded = read_input(input)?;
    write_output(out, &write_frieze(&loaded.frieze, loaded.variables()))?;
    Ok(Status::Pass)
}

fn parse_factor(arg: &str) -> Result<Diagonal> {
    let pair = arg.strip_prefix("d=").unwrap_or(arg);
    let (a, b) = pair
        .split_once(',')
        .ok_or_else(|| anyhow!("--factor expects d=A,B, got {arg:?}"))?;
    let a: usize = a.trim().parse().with_context(|| format!("--factor {arg:?}"))?;
    let b: usize = b.trim().parse().with_context(|| format!("--factor {arg:?}"))?;
    Ok(Diagonal::try_new(a, b)?)
}

pub fn det(input: &Path, factor: Option<&str>) -> Result<Status> {
    let f = read_input(input)?.frieze;
    let Some(arg) = factor else {
        println!("{}", frieze_matrix(&f).det());
        return Ok(Status::Pass);
    };
    let d = parse_factor(arg)?;
    let chk = glue_det_check(&f, &d)?;
    let cells = split_polygon(&validate_dissection(f.n(), [d])?);
    let (p, q) = if cells[0].contains_vertex(d.a() + 1) {
        (&cells[0], &cells[1])
    } else {
        (&cells[1], &cells[0])
    };
    println!("det(M_f) = {}", chk.lhs);
    println!("f({},{}) = {}", d.a(), d.b(), chk.c);
    println!("det(M_fP) = {} on {p}", chk.det_p);
    println!("det(M_fQ) = {} on {q}", chk.det_q);
    println!("-f(d)^-2 * det(M_fP) * det(M_fQ) = {}", chk.rhs);
    let status = Status::from_ok(chk.pass);
    println!("{}", status.word());
    if !f.dissection().contains(&d) {
        println!("note: {d} is not a gluing diagonal of this frieze");
    }
    Ok(status)
}

fn parse_rows(arg: &str) -> Result<(i64, i64)> {
    let (a, b) = arg
        .split_once("..")
        .ok_or_else(|| anyhow!("--rows expects I..J, got {arg:?}"))?;
    let a: i64 = a.trim().parse().with_context(|| format!("--rows {arg:?}"))?;
    let b: i64 = b.trim().parse().with_context(|| format!("--rows {arg:?}"))?;
    if a > b {
        bail!("--rows {arg:?} is empty");
    }
    Ok((a, b))
}

pub fn render(input: &Path, rows: &str) -> Result<Status> {
    let f = read_input(input)?.frieze;
    let (a, b) = parse_rows(rows)?;
    print!("{}", render_pattern(&f, a, b));
    Ok(Status::Pass)
}

pub fn matrix(input: &Path) -> Result<Status> {
    let f = read_input(input)?.frieze;
    print!("{}", frieze_matrix(&f).matrix());
    Ok(Status::Pass)
}

fn show_dissection(d: &Dissection) -> String {
    if d.is_empty() {
        "(none)".into()
    } else {
        d.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
    }
}

/// Prints a computed determinant next to a closed form and returns the verdict.
fn compare(det: &Scalar, label: &str, formula: &Scalar) -> Status {
    println!("det(M_f) = {det}");
    println!("{label} = {formula}");
    let status = Status::from_ok(det == formula);
    println!("{}", status.word());
    status
}

fn save(out: Option<&Path>, f: &WeakFrieze, variables: Option<&[String]>) -> Result<()> {
    if let Some(p) = out {
        write_output(Some(p), &write_frieze(f, variables))?;
    }
    Ok(())
}

pub fn gallery(g: Gallery) -> Result<Status> {
    match g {
        Gallery::Bhj { n, cells, out } => {
            let d = chain_dissection(&cells)?;
            if let Some(n) = n {
                if n != d.n() {
                    bail!("cells {cells:?} glue to a {}-gon, not a {n}-gon", d.n());
                }
            }
            let f = dissection_frieze(&d);
            println!("n = {}", d.n());
            println!(
                "cells: {}",
                cells.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
            );
            println!("dissection: {}", show_dissection(&d));
            let formula = bhj_det_formula(d.n(), &cell_sizes(&d))?;
            let status = compare(&frieze_matrix(&f).det(), "(-1)^(n-1) * prod(d_i - 1)", &formula);
            save(out.as_deref(), &f, None)?;
            Ok(status)
        }
        Gallery::Cc { n, seed, out } => {
            let t = random_dissection(n, seed, DissectionMode::Triangulation)?;
            let f = dissection_frieze(&t);
            println!("n = {n}");
            println!("triangulation: {}", show_dissection(&t));
            let quiddity: Vec<String> = (1..=n)
                .map(|i| {
                    let (prev, next) = ((i + n - 2) % n + 1, i % n + 1);
                    f.value(prev, next).to_string()
                })
                .collect();
            println!("quiddity: {}", quiddity.join(" "));
            let formula = Scalar::from_int(ScalarKind::Rational, -(-2i64).pow(n as u32 - 2));
            let status = compare(&frieze_matrix(&f).det(), "-(-2)^(n-2)", &formula);
            save(out.as_deref(), &f, None)?;
            Ok(status)
        }
        Gallery::Bm { n, seed, out } => {
            let t = random_dissection(n, seed, DissectionMode::Triangulation)?;
            let f = baur_marsh_frieze(&t)?;
            println!("n = {n}");
            println!("triangulation: {}", show_dissection(&t));
            let status = compare(
                &frieze_matrix(&f).det(),
                "-(-2)^(n-2) * prod(boundary edges)",
                &bm_det_formula(&f),
            );
            save(out.as_deref(), &f, Some(&bm_variables(&t)))?;
            Ok(status)
        }
        Gallery::Maldonado { n, seed, out } => {
            let t = random_dissection(n, seed, DissectionMode::Triangulation)?;
            let f = baur_marsh_frieze(&t)?;
            let g = random_evaluation(&f, seed).ok_or_else(|| anyhow!("no evaluation point found"))?;
            println!("n = {n}");
            println!("triangulation: {}", show_dissection(&t));
            let m = MaldonadoMatrix::from_frieze(&g)?;
            let diamond = maldonado_check(&m);
            let overlap = overlap_identity_check(&m);
            println!("diamond rule: {} violation(s)", diamond.len());
            println!("overlap identity: {} failure(s)", overlap.len());
            let mut status = Status::from_ok(diamond.is_empty() && overlap.is_empty());
            match maldonado_det_formula(&m) {
                Ok(formula) => {
                    status = status.and(compare(
                        &m.matrix().det(),
                        "-(-2)^(n-2) * c(1,n) * prod c(i,i+1)",
                        &formula,
                    ))
                }
                Err(e) => println!("FAIL: {e}"),
            }
            save(out.as_deref(), &g, None)?;
            Ok(status)
        }
        Gallery::Random {
            n,
            seed,
            triangulation,
            out,
        } => {
            let mode = if triangulation {
                DissectionMode::Triangulation
            } else {
                DissectionMode::Any
            };
            let d = random_dissection(n, seed, mode)?;
            let f = random_weak_frieze(&d, seed);
            println!("n = {n}");
            println!("dissection: {}", show_dissection(&d));
            println!("det(M_f) = {}", frieze_matrix(&f).det());
            let mut status = Status::Pass;
            for e in d.iter() {
                let chk = glue_det_check(&f, e)?;
                let s = Status::from_ok(chk.pass);
                println!("factor along {e}: {} {}", chk.rhs, s.word());
                status = status.and(s);
            }
            println!("{}", status.word());
            save(out.as_deref(), &f, None)?;
            Ok(status)
        }
    }
}
