//! Translation classes of tilings and the central involution.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::Result;
use crate::lattice::{hnf, Basis, Point};
use crate::poly::{Monomial, Poly};
use crate::tiling::{self, type_of, EnumOptions, Orientation, Tiling};

/// `τ'(x) = τ(x + s)`.
pub fn shift(tiling: &Tiling, s: Point) -> Tiling {
    let h = *tiling.hnf();
    let cells = h.cells().map(|c| tiling.at(c.point() + s)).collect();
    Tiling::new_unchecked(h, cells)
}

/// The involution `(Iτ̃)(x) = −τ̃⁻¹(−x)`.
///
/// For each `x`, the up-triangle `w` matched with the down-triangle `−x`
/// gives `(Iτ)(x) = τ(w)`.
pub fn involute(tiling: &Tiling) -> Tiling {
    let h = *tiling.hnf();
    let cells = h
        .cells()
        .map(|c| {
            let target = -c.point();
            Orientation::ALL
                .into_iter()
                .find(|&o| tiling.at(target - o.xi()) == o)
                .expect("matching is bijective")
        })
        .collect();
    Tiling::new_unchecked(h, cells)
}

/// A partition of a set of tilings into orbits. Each orbit is sorted and the
/// orbits are sorted by their least element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSet {
    pub orbits: Vec<Vec<Tiling>>,
}

impl OrbitSet {
    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    /// One monomial per orbit, for the common type of its members.
    pub fn census(&self) -> Poly {
        let mut p = Poly::zero();
        for orbit in &self.orbits {
            let t = type_of(&orbit[0]);
            p.add_term(
                Monomial::new(t.l as u32, t.d as u32, t.r as u32),
                BigInt::from(1),
            );
        }
        p
    }
}

/// Orbits of `tilings` under all translations, and under the involution
/// too when `with_involution` is set. The set must be closed under the
/// group; images outside it are ignored.
pub fn orbits(tilings: &[Tiling], with_involution: bool) -> OrbitSet {
    let index: BTreeMap<&[Orientation], usize> = tilings
        .iter()
        .enumerate()
        .map(|(k, t)| (t.cells(), k))
        .collect();
    let mut seen = alloc::vec![false; tilings.len()];
    let mut out = Vec::new();
    for start in 0..tilings.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = Vec::new();
        let mut queue = VecDeque::from([start]);
        while let Some(k) = queue.pop_front() {
            let t = &tilings[k];
            orbit.push(t.clone());
            let h = *t.hnf();
            let mut images: Vec<Tiling> = h.cells().map(|c| shift(t, c.point())).collect();
            if with_involution {
                images.push(involute(t));
            }
            for img in images {
                match index.get(img.cells()) {
                    Some(&j) if !seen[j] => {
                        seen[j] = true;
                        queue.push_back(j);
                    }
                    Some(_) => {}
                    None => debug_assert!(false, "tiling set not closed under the group"),
                }
            }
        }
        orbit.sort();
        out.push(orbit);
    }
    out.sort_by(|x, y| x[0].cmp(&y[0]));
    OrbitSet { orbits: out }
}

/// Generating function of tilings up to translation.
pub fn z1(basis: &Basis) -> Result<Poly> {
    z1_with(basis, &EnumOptions::default())
}

pub fn z1_with(basis: &Basis, opts: &EnumOptions) -> Result<Poly> {
    let tilings = tiling::enumerate_with(&hnf(basis)?, opts)?;
    Ok(orbits(&tilings, false).census())
}

/// Generating function of tilings up to translation and the involution.
pub fn z2(basis: &Basis) -> Result<Poly> {
    z2_with(basis, &EnumOptions::default())
}

pub fn z2_with(basis: &Basis, opts: &EnumOptions) -> Result<Poly> {
    let tilings = tiling::enumerate_with(&hnf(basis)?, opts)?;
    Ok(orbits(&tilings, true).census())
}
