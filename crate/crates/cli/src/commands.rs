//! One function per subcommand; each returns the text to print.

use std::fmt::Write;

use anyhow::{bail, Result};
use lozenge_core::flips::{flip_graph_with, flip_sites, FlipConfig};
use lozenge_core::heights::{fingerprint, tiling_for_fingerprint, Fingerprint};
use lozenge_core::lattice::{hnf, Basis};
use lozenge_core::quotients::orbits;
use lozenge_core::tiling::{enumerate_with, type_of, EnumOptions};
use lozenge_core::typegeom::{all_types, count_summary, fingerprint_to_type, triangle};
use lozenge_core::{kasteleyn, Poly, Tiling};
use serde_json::{json, Value};

use crate::json::{
    basis_rows, bigint_to_json, fingerprint_json, poly_to_json, tiling_to_json, type_json, HnfJson,
};
use crate::svg::{self, Style};
use crate::verify;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
}

fn emit(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn header(basis: &Basis) -> Result<Value> {
    let h = hnf(basis)?;
    Ok(json!({"basis": basis_rows(basis), "hnf": HnfJson::from(h), "index": h.index()}))
}

fn with(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(b), Value::Object(e)) = (&mut base, extra) {
        b.extend(e);
    }
    base
}

fn poly_text(p: &Poly) -> String {
    p.to_string()
}

pub fn genfun(basis: &Basis, format: Format) -> Result<String> {
    let z = kasteleyn::genfun(basis)?;
    let total = z.eval_ones();
    Ok(match format {
        Format::Json => emit(&with(
            header(basis)?,
            json!({
                "polynomial": poly_to_json(&z),
                "text": poly_text(&z),
                "monomials": z.len(),
                "z111": bigint_to_json(&total),
            }),
        )),
        Format::Text => format!("Z(L,D,R) = {z}\nZ(1,1,1) = {total}\n"),
    })
}

pub fn enumerate(
    basis: &Basis,
    cap: u64,
    target: Option<Fingerprint>,
    format: Format,
) -> Result<String> {
    let h = hnf(basis)?;
    let opts = EnumOptions {
        cap,
        ..EnumOptions::default()
    };
    let mut tilings = enumerate_with(&h, &opts)?;
    if let Some(f) = target {
        fingerprint_to_type(basis, f)?;
        tilings.retain(|t| fingerprint(t, basis).is_ok_and(|g| g == f));
    }
    Ok(match format {
        Format::Json => {
            let list: Vec<_> = tilings.iter().map(|t| tiling_to_json(basis, t)).collect();
            emit(&with(
                header(basis)?,
                json!({"count": tilings.len(), "tilings": serde_json::to_value(list)?}),
            ))
        }
        Format::Text => tilings.iter().map(|t| format!("{t}\n")).collect(),
    })
}

/// A single tiling with the given fingerprint, without enumerating.
pub fn realize(basis: &Basis, target: Fingerprint, format: Format) -> Result<String> {
    let t = tiling_for_fingerprint(basis, target)?;
    Ok(match format {
        Format::Json => emit(&serde_json::to_value(tiling_to_json(basis, &t))?),
        Format::Text => format!("{t}\n"),
    })
}

pub fn types(basis: &Basis, format: Format) -> Result<String> {
    let tri = triangle(basis);
    let all = all_types(basis)?;
    let s = count_summary(basis)?;
    Ok(match format {
        Format::Json => {
            let list: Vec<Value> = all
                .iter()
                .map(|(f, t)| json!({"fingerprint": fingerprint_json(*f), "type": type_json(*t), "interior": t.is_interior()}))
                .collect();
            emit(&with(
                header(basis)?,
                json!({
                    "triangle": {"L": fingerprint_json(tri.l), "D": fingerprint_json(tri.d), "R": fingerprint_json(tri.r)},
                    "types": list,
                    "count_summary": {
                        "boundary_dl": s.boundary_dl,
                        "boundary_lr": s.boundary_lr,
                        "boundary_rd": s.boundary_rd,
                        "interior": s.interior,
                        "monomials": s.monomials,
                    },
                }),
            ))
        }
        Format::Text => {
            let mut out = String::new();
            let p = |f: Fingerprint| format!("({}, {})", f.d1, f.d2);
            let _ = writeln!(out, "triangle L {} D {} R {}", p(tri.l), p(tri.d), p(tri.r));
            for (f, t) in &all {
                let _ = writeln!(out, "{} ({}, {}, {})", p(*f), t.l, t.d, t.r);
            }
            let _ = writeln!(
                out,
                "boundary {} {} {} interior {} monomials {}",
                s.boundary_dl, s.boundary_lr, s.boundary_rd, s.interior, s.monomials
            );
            out
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quotient {
    None,
    Shift,
    ShiftInvolution,
}

pub fn classes(basis: &Basis, cap: u64, quotient: Quotient, format: Format) -> Result<String> {
    let h = hnf(basis)?;
    let tilings = enumerate_with(
        &h,
        &EnumOptions {
            cap,
            ..EnumOptions::default()
        },
    )?;
    let (name, count, p) = match quotient {
        Quotient::None => {
            let p = tilings
                .iter()
                .map(census_term)
                .fold(Poly::zero(), |a, b| a + b);
            ("none", tilings.len(), p)
        }
        Quotient::Shift => {
            let set = orbits(&tilings, false);
            ("shift", set.len(), set.census())
        }
        Quotient::ShiftInvolution => {
            let set = orbits(&tilings, true);
            ("shift+involution", set.len(), set.census())
        }
    };
    Ok(match format {
        Format::Json => emit(&with(
            header(basis)?,
            json!({"quotient": name, "classes": count, "polynomial": poly_to_json(&p), "text": poly_text(&p)}),
        )),
        Format::Text => format!("{p}\nclasses = {count}\n"),
    })
}

fn census_term(t: &Tiling) -> Poly {
    let ty = type_of(t);
    Poly::term(
        1,
        lozenge_core::Monomial::new(ty.l as u32, ty.d as u32, ty.r as u32),
    )
}

pub fn flips(basis: &Basis, target: Fingerprint, cap: u64, format: Format) -> Result<String> {
    let h = hnf(basis)?;
    let ty = fingerprint_to_type(basis, target)?;
    let opts = EnumOptions {
        cap,
        ..EnumOptions::default()
    };
    let tilings: Vec<Tiling> = enumerate_with(&h, &opts)?
        .into_iter()
        .filter(|t| type_of(t) == ty)
        .collect();
    let per_tiling: Vec<usize> = tilings.iter().map(|t| flip_sites(t).len()).collect();
    let quoins: usize = tilings
        .iter()
        .map(|t| {
            flip_sites(t)
                .iter()
                .filter(|s| s.config == FlipConfig::Quoin)
                .count()
        })
        .sum();
    let total: usize = per_tiling.iter().sum();
    let g = flip_graph_with(basis, ty, &opts)?;
    Ok(match format {
        Format::Json => emit(&with(
            header(basis)?,
            json!({
                "fingerprint": fingerprint_json(target),
                "type": type_json(ty),
                "interior": ty.is_interior(),
                "sites": {"total": total, "quoin": quoins, "inner_corner": total - quoins, "per_tiling": per_tiling},
                "graph": {"order": g.order, "size": g.size, "connected": g.connected},
            }),
        )),
        Format::Text => format!(
            "type ({}, {}, {}) tilings {} sites {} (quoin {}, inner corner {})\ngraph order {} size {} connected {}\n",
            ty.l,
            ty.d,
            ty.r,
            tilings.len(),
            total,
            quoins,
            total - quoins,
            g.order,
            g.size,
            g.connected
        ),
    })
}

/// The report and whether every check passed.
pub fn verify(max_index: i64, cap: u64, format: Format) -> Result<(String, bool)> {
    let report = verify::run(max_index, cap)?;
    let text = match format {
        Format::Json => emit(&serde_json::to_value(&report)?),
        Format::Text => {
            let mut out = String::new();
            for l in &report.lattices {
                let passed = l.checks.iter().filter(|c| c.pass).count();
                let _ = write!(
                    out,
                    "({}, {}, {}) {passed}/{}",
                    l.hnf.a,
                    l.hnf.b,
                    l.hnf.c,
                    l.checks.len()
                );
                for c in l.checks.iter().filter(|c| !c.pass) {
                    let _ = write!(out, " FAIL {}", c.name);
                }
                out.push('\n');
            }
            let s = &report.summary;
            let _ = writeln!(
                out,
                "{} lattices, {} checks, {} passed, {} failed",
                s.lattices, s.checks, s.passed, s.failed
            );
            out
        }
    };
    Ok((text, report.ok))
}

/// Renders a tiling read from JSON. When `basis` is given it must span the
/// tiling's lattice.
pub fn render(
    tiling_json: &str,
    basis: Option<&Basis>,
    reps: u32,
    style: &Style,
) -> Result<String> {
    let (_, t) = crate::json::read_tiling(tiling_json)?;
    if let Some(b) = basis {
        let h = hnf(b)?;
        if h != *t.hnf() {
            bail!("tiling has lattice {} but --basis gives {h}", t.hnf());
        }
    }
    if reps == 0 {
        bail!("--reps must be positive");
    }
    Ok(svg::render(&t, reps, style))
}
