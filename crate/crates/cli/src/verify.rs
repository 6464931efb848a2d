//! Cross-check harness: every lattice of bounded index is run through the
//! symbolic pipeline and the brute-force oracles, and each agreement is
//! recorded as a named pass/fail entry.

use std::collections::{BTreeMap, BTreeSet};

use anyhow::{ensure, Result};
use lozenge_core::flips::{apply_flip, flip_graph_with, flip_sites, FlipConfig};
use lozenge_core::heights::{fingerprint, heights, tiling_for_fingerprint, Fingerprint};
use lozenge_core::lattice::{Basis, HnfForm};
use lozenge_core::quotients::{involute, orbits, OrbitSet};
use lozenge_core::tiling::{constant, enumerate_with, is_valid, type_of, EnumOptions};
use lozenge_core::typegeom::{
    all_types, binomial, bracelet_count, count_summary, dr_edge_length, fingerprint_to_type,
    necklace_count, necklace_total, triangle, type_to_fingerprint,
};
use lozenge_core::{kasteleyn, poly, Monomial, Orientation, Poly, Tiling, TilingType};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Value;

use crate::json::{bigint_to_json, fingerprint_json, HnfJson};

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct LatticeReport {
    pub hnf: HnfJson,
    pub index: usize,
    pub tilings: usize,
    pub monomials: usize,
    pub z111: Value,
    /// Holonomy of each constant tiling in the HNF basis.
    pub constant_fingerprints: BTreeMap<char, Value>,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub lattices: usize,
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub max_index: i64,
    pub lattices: Vec<LatticeReport>,
    pub summary: Summary,
    pub ok: bool,
}

impl Report {
    pub fn failures(&self) -> impl Iterator<Item = (&HnfJson, &'static str)> {
        self.lattices.iter().flat_map(|l| {
            l.checks
                .iter()
                .filter(|c| !c.pass)
                .map(move |c| (&l.hnf, c.name))
        })
    }
}

/// Runs every check on every HNF of index at most `max_index`.
pub fn run(max_index: i64, cap: u64) -> Result<Report> {
    ensure!(max_index >= 1, "max-index must be positive");
    ensure!(
        max_index as u64 <= cap,
        "max-index {max_index} exceeds the enumeration cap {cap}"
    );
    let lattices: Vec<LatticeReport> = HnfForm::all_up_to(max_index)
        .into_iter()
        .map(|h| check_lattice(h, cap))
        .collect::<Result<_>>()?;
    let checks = lattices.iter().map(|l| l.checks.len()).sum();
    let passed = lattices
        .iter()
        .map(|l| l.checks.iter().filter(|c| c.pass).count())
        .sum();
    Ok(Report {
        max_index,
        summary: Summary {
            lattices: lattices.len(),
            checks,
            passed,
            failed: checks - passed,
        },
        ok: checks == passed,
        lattices,
    })
}

fn monomial(t: TilingType) -> Monomial {
    Monomial::new(t.l as u32, t.d as u32, t.r as u32)
}

fn census(tilings: &[Tiling]) -> Poly {
    let mut p = Poly::zero();
    for t in tilings {
        p.add_term(monomial(type_of(t)), BigInt::from(1));
    }
    p
}

fn support(p: &Poly) -> BTreeSet<Monomial> {
    p.terms().map(|(m, _)| *m).collect()
}

struct Ctx {
    h: HnfForm,
    basis: Basis,
    n: usize,
    tilings: Vec<Tiling>,
    z: Poly,
    types: Vec<(Fingerprint, TilingType)>,
    shifts: OrbitSet,
    shifts_inv: OrbitSet,
    opts: EnumOptions,
}

fn check_lattice(h: HnfForm, cap: u64) -> Result<LatticeReport> {
    let basis = h.basis();
    let opts = EnumOptions {
        cap,
        ..EnumOptions::default()
    };
    let tilings = enumerate_with(&h, &opts)?;
    let ctx = Ctx {
        h,
        basis,
        n: h.index(),
        z: kasteleyn::genfun_hnf(&h)?,
        types: all_types(&basis)?,
        shifts: orbits(&tilings, false),
        shifts_inv: orbits(&tilings, true),
        tilings,
        opts,
    };

    let mut checks = Vec::new();
    let mut push = |name: &'static str, pass: Result<bool>| {
        checks.push(Check {
            name,
            pass: pass.unwrap_or(false),
        })
    };
    push("genfun_eq_permanent", genfun_eq_permanent(&ctx));
    push("genfun_eq_census", Ok(ctx.z == census(&ctx.tilings)));
    push(
        "matrix_matches_geometry",
        Ok(kasteleyn::build_m(&h) == kasteleyn::adjacency_matrix(&h)),
    );
    push("genfun_shape", Ok(genfun_shape(&ctx)));
    push("support_eq_types", Ok(support_eq_types(&ctx)));
    push("count_summary", count_formulas(&ctx));
    push("type_fingerprint_roundtrip", type_roundtrip(&ctx));
    push("fingerprint_identity", fingerprint_identity(&ctx));
    push("realized_types", Ok(realized_types(&ctx)));
    push("constant_holonomy", constant_holonomy(&ctx));
    push("realization", realization(&ctx));
    push(
        "dr_edge_binomial",
        Ok(dr_edge(
            &ctx,
            &ctx.z,
            |d, i| Ok(binomial(d, i)),
            |d| Ok(1 << d),
        )),
    );
    push(
        "dr_edge_necklace",
        Ok(dr_edge(
            &ctx,
            &ctx.shifts.census(),
            necklace_count,
            necklace_total,
        )),
    );
    push(
        "dr_edge_bracelet",
        Ok(dr_edge(
            &ctx,
            &ctx.shifts_inv.census(),
            bracelet_count,
            |d| (0..=d).map(|i| bracelet_count(d, i)).sum(),
        )),
    );
    push("involution", Ok(involution(&ctx)));
    push("quotient_support", Ok(quotient_support(&ctx)));
    push("flip_invariants", flip_invariants(&ctx));
    if ctx.n >= 3 {
        push("flip_site_iff_interior", Ok(site_iff_interior(&ctx)));
    }
    push("flip_connected_interior", flip_connected_interior(&ctx));

    let mut constant_fingerprints = BTreeMap::new();
    for o in Orientation::ALL {
        let f = fingerprint(&constant(&h, o), &basis)?;
        constant_fingerprints.insert(o.as_char(), fingerprint_json(f));
    }
    Ok(LatticeReport {
        hnf: h.into(),
        index: ctx.n,
        tilings: ctx.tilings.len(),
        monomials: ctx.z.len(),
        z111: bigint_to_json(&ctx.z.eval_ones()),
        constant_fingerprints,
        checks,
    })
}

fn genfun_eq_permanent(ctx: &Ctx) -> Result<bool> {
    let perm = poly::permanent_with_cap(&kasteleyn::build_m(&ctx.h), poly::MAX_ORDER)?;
    Ok(perm == ctx.z)
}

// homogeneous of degree n, positive coefficients, vertex coefficients 1
fn genfun_shape(ctx: &Ctx) -> bool {
    let n = ctx.n as u32;
    let one = BigInt::from(1);
    ctx.z.is_homogeneous(n)
        && ctx.z.has_nonnegative_coefficients()
        && [(n, 0, 0), (0, n, 0), (0, 0, n)]
            .into_iter()
            .all(|(l, d, r)| ctx.z.coeff(Monomial::new(l, d, r)) == one)
        && ctx.z.eval_ones() == BigInt::from(ctx.tilings.len())
}

fn support_eq_types(ctx: &Ctx) -> bool {
    let types: BTreeSet<Monomial> = ctx.types.iter().map(|(_, t)| monomial(*t)).collect();
    support(&ctx.z) == types
}

fn count_formulas(ctx: &Ctx) -> Result<bool> {
    let s = count_summary(&ctx.basis)?;
    let count =
        |f: &dyn Fn(&TilingType) -> bool| ctx.types.iter().filter(|(_, t)| f(t)).count() as u64;
    Ok(s.monomials == ctx.types.len() as u64
        && s.interior == count(&|t| t.is_interior())
        && s.boundary_dl == count(&|t| t.r == 0)
        && s.boundary_lr == count(&|t| t.d == 0)
        && s.boundary_rd == count(&|t| t.l == 0)
        && s.monomials == s.boundary_dl + s.boundary_lr + s.boundary_rd - 3 + s.interior)
}

fn type_roundtrip(ctx: &Ctx) -> Result<bool> {
    for (f, t) in &ctx.types {
        if fingerprint_to_type(&ctx.basis, *f)? != *t || type_to_fingerprint(&ctx.basis, *t)? != *f
        {
            return Ok(false);
        }
    }
    Ok(true)
}

fn bases(ctx: &Ctx) -> [Basis; 2] {
    [ctx.basis, ctx.basis.transform([[2, 1], [1, 1]])]
}

// n·fingerprint = nL·vL + nD·vD + nR·vR in two bases of the lattice
fn fingerprint_identity(ctx: &Ctx) -> Result<bool> {
    let n = ctx.n as i64;
    for basis in bases(ctx) {
        let tri = triangle(&basis);
        for t in &ctx.tilings {
            let f = fingerprint(t, &basis)?;
            let ty = type_of(t);
            let (l, d, r) = (ty.l as i64, ty.d as i64, ty.r as i64);
            let lhs = (n * f.d1, n * f.d2);
            let rhs = (
                l * tri.l.d1 + d * tri.d.d1 + r * tri.r.d1,
                l * tri.l.d2 + d * tri.d.d2 + r * tri.r.d2,
            );
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn realized_types(ctx: &Ctx) -> bool {
    let realized: BTreeSet<TilingType> = ctx.tilings.iter().map(type_of).collect();
    let predicted: BTreeSet<TilingType> = ctx.types.iter().map(|(_, t)| *t).collect();
    realized == predicted
}

fn constant_holonomy(ctx: &Ctx) -> Result<bool> {
    let tri = triangle(&ctx.basis);
    for (o, v) in [
        (Orientation::L, tri.l),
        (Orientation::D, tri.d),
        (Orientation::R, tri.r),
    ] {
        let field = heights(&constant(&ctx.h, o), &ctx.basis)?;
        if field.fingerprint() != v {
            return Ok(false);
        }
    }
    Ok(true)
}

fn realization(ctx: &Ctx) -> Result<bool> {
    for basis in bases(ctx) {
        for (f, t) in all_types(&basis)? {
            let tiling = tiling_for_fingerprint(&basis, f)?;
            if type_of(&tiling) != t || fingerprint(&tiling, &basis)? != f {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

// Coefficients along the D–R side, where L is absent: the i-th lattice point
// of the side carries `coeff(d, i)` and the side sums to `total(d)`.
fn dr_edge(
    ctx: &Ctx,
    p: &Poly,
    coeff: impl Fn(u64, u64) -> lozenge_core::Result<u128>,
    total: impl Fn(u64) -> lozenge_core::Result<u128>,
) -> bool {
    let d = dr_edge_length(&ctx.basis);
    let step = ctx.n as u64 / d;
    let edge: BTreeMap<Monomial, BigInt> = p
        .terms()
        .filter(|(m, _)| m.l == 0)
        .map(|(m, c)| (*m, c.clone()))
        .collect();
    let mut expected = BTreeMap::new();
    let mut sum = BigInt::from(0);
    for i in 0..=d {
        let Ok(c) = coeff(d, i) else { return false };
        let m = Monomial::new(0, (i * step) as u32, ((d - i) * step) as u32);
        expected.insert(m, BigInt::from(c));
        sum += c;
    }
    matches!(total(d), Ok(t) if BigInt::from(t) == sum) && edge == expected
}

fn involution(ctx: &Ctx) -> bool {
    let class: BTreeMap<&Tiling, usize> = ctx
        .shifts
        .orbits
        .iter()
        .enumerate()
        .flat_map(|(k, orbit)| orbit.iter().map(move |t| (t, k)))
        .collect();
    let involutive = ctx.tilings.iter().all(|t| {
        let i = involute(t);
        involute(&i) == *t
            && type_of(&i) == type_of(t)
            && is_valid(&ctx.h, i.cells()).unwrap_or(false)
    });
    let descends = ctx.shifts.orbits.iter().all(|orbit| {
        let images: BTreeSet<usize> = orbit.iter().map(|t| class[&involute(t)]).collect();
        images.len() == 1
    });
    involutive && descends
}

// z2 ≤ z1 ≤ Z coefficientwise, all with the support of Z
fn quotient_support(ctx: &Ctx) -> bool {
    let (z1, z2) = (ctx.shifts.census(), ctx.shifts_inv.census());
    let s = support(&ctx.z);
    support(&z1) == s
        && support(&z2) == s
        && ctx
            .z
            .terms()
            .all(|(m, c)| z2.coeff(*m) <= z1.coeff(*m) && z1.coeff(*m) <= *c)
}

// Flips keep the tiling valid, its type and holonomy, and move the height at
// the flip vertex by −3 (quoin) or +3 (inner corner) relative to every other
// vertex class.
fn flip_invariants(ctx: &Ctx) -> Result<bool> {
    let n = ctx.n;
    for t in &ctx.tilings {
        let before = heights(t, &ctx.basis)?;
        for site in flip_sites(t) {
            let f = apply_flip(t, &site)?;
            if !is_valid(&ctx.h, f.cells())? || type_of(&f) != type_of(t) {
                return Ok(false);
            }
            let after = heights(&f, &ctx.basis)?;
            if after.holonomy != before.holonomy {
                return Ok(false);
            }
            let centre = ctx.h.index_of(site.vertex());
            let jump = match site.config {
                FlipConfig::Quoin => -3,
                FlipConfig::InnerCorner => 3,
            };
            if n == 1 {
                continue;
            }
            let other = (centre + 1) % n;
            let offset = after.base[other] - before.base[other];
            let ok = (0..n).all(|k| {
                let dh = after.base[k] - before.base[k] - offset;
                dh == if k == centre { jump } else { 0 }
            });
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn site_iff_interior(ctx: &Ctx) -> bool {
    ctx.tilings
        .iter()
        .all(|t| !flip_sites(t).is_empty() == type_of(t).is_interior())
}

fn flip_connected_interior(ctx: &Ctx) -> Result<bool> {
    for (_, t) in ctx.types.iter().filter(|(_, t)| t.is_interior()) {
        if !flip_graph_with(&ctx.basis, *t, &ctx.opts)?.connected {
            return Ok(false);
        }
    }
    Ok(true)
}
