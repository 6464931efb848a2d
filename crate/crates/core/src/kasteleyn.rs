//! Bipartite adjacency matrices of the periodic honeycomb graph and the
//! generating function of tilings by four signed determinants.
//!
//! Row `i·a + j` is the up-triangle at `i·v + j·u`; column `i·a + j` is the
//! down-triangle at `(i+1)·v + j·u`. Both matrices are laid out as `b × b`
//! blocks of order `a`: `X` on the diagonal, `Z = D·Id` below it, and the
//! wrap-around block `Z'` in the top-right corner.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::lattice::{hnf, Basis, HnfForm, Point};
use crate::poly::{self, Poly, PolyMatrix};
use crate::tiling::Orientation;

/// Sign pattern of the wrap-around edges. `omega1` marks edges crossing the
/// diagonal border of the fundamental domain, `omega2` the horizontal one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Signs {
    signed: bool,
    omega1: i64,
    omega2: i64,
}

fn build(h: &HnfForm, s: Signs) -> PolyMatrix {
    let (a, b, c) = (h.a as usize, h.b as usize, h.c as usize);
    let mut m = PolyMatrix::zeros(a * b);
    let at = |block: usize, k: usize| block * a + k;
    let scaled = |p: Poly, k: i64| p.scale(&BigInt::from(k));
    let minus = if s.signed { -1 } else { 1 };
    for i in 0..b {
        // X
        for j in 0..a {
            m.add_to(at(i, j), at(i, j), &Poly::r());
            if j > 0 {
                m.add_to(at(i, j), at(i, j - 1), &scaled(Poly::l(), minus));
            }
        }
        m.add_to(at(i, 0), at(i, a - 1), &scaled(Poly::l(), s.omega1));
        // Z
        if i > 0 {
            for j in 0..a {
                m.add_to(at(i, j), at(i - 1, j), &Poly::d());
            }
        }
    }
    // Z'
    let parity = if s.signed && b % 2 == 0 { -1 } else { 1 };
    let upper = parity * s.omega2;
    let lower = if s.signed { -parity } else { 1 } * s.omega1 * s.omega2;
    for j in 0..a {
        let (col, k) = if j < a - c {
            (j + c, upper)
        } else {
            (j + c - a, lower)
        };
        m.add_to(at(0, j), at(b - 1, col), &scaled(Poly::d(), k));
    }
    m
}

/// The unsigned bipartite adjacency matrix `M`.
pub fn build_m(h: &HnfForm) -> PolyMatrix {
    build(
        h,
        Signs {
            signed: false,
            omega1: 1,
            omega2: 1,
        },
    )
}

/// The oriented matrix `M'` with the border markers set to `s1, s2 = ±1`.
pub fn build_m_prime(h: &HnfForm, s1: i64, s2: i64) -> PolyMatrix {
    debug_assert!(s1.abs() == 1 && s2.abs() == 1);
    build(
        h,
        Signs {
            signed: true,
            omega1: s1,
            omega2: s2,
        },
    )
}

/// `M` read off the geometry: the up-triangle at `x` meets the down-triangle
/// at `x + ξ(o)` for each orientation `o`.
pub fn adjacency_matrix(h: &HnfForm) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(h.index());
    for cell in h.cells() {
        let x = cell.point();
        for o in Orientation::ALL {
            let col = h.index_of(x + o.xi() - Point::V);
            let var = match o {
                Orientation::L => Poly::l(),
                Orientation::D => Poly::d(),
                Orientation::R => Poly::r(),
            };
            m.add_to(cell.linear(h), col, &var);
        }
    }
    m
}

/// `Z(L, D, R) = (g(1,1) + g(1,−1) + g(−1,1) − g(−1,−1)) / 2` with
/// `g(ω1, ω2) = det M'`.
pub fn genfun(basis: &Basis) -> Result<Poly> {
    genfun_hnf(&hnf(basis)?)
}

pub fn genfun_hnf(h: &HnfForm) -> Result<Poly> {
    if h.index() > poly::MAX_ORDER {
        return Err(Error::CapExceeded {
            index: h.index() as u64,
            cap: poly::MAX_ORDER as u64,
        });
    }
    let g = |s1, s2| poly::determinant(&build_m_prime(h, s1, s2));
    let doubled = g(1, 1)? + g(1, -1)? + g(-1, 1)? - g(-1, -1)?;
    let two = BigInt::from(2);
    let mut z = Poly::zero();
    for (m, c) in doubled.terms() {
        let (q, r) = c.div_rem(&two);
        if r != BigInt::from(0) {
            return Err(Error::NonIntegralCombination);
        }
        z.add_term(*m, q);
    }
    Ok(z)
}
