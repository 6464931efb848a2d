//! Local flips around a vertex and the flip graph of each type.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lattice::{hnf, Basis, Cell, Point};
use crate::tiling::{self, type_of, EnumOptions, Orientation, Tiling, TilingType};

/// The two fillings of the unit hexagon around the vertex `m + u`, read on
/// the cells `(m, m+u, m+u−v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FlipConfig {
    /// `(D, L, R)`: the centre is a local maximum of the height.
    Quoin,
    /// `(R, D, L)`: the centre is a local minimum of the height.
    InnerCorner,
}

impl FlipConfig {
    fn pattern(self) -> [Orientation; 3] {
        use Orientation::*;
        match self {
            FlipConfig::Quoin => [D, L, R],
            FlipConfig::InnerCorner => [R, D, L],
        }
    }

    pub fn other(self) -> FlipConfig {
        match self {
            FlipConfig::Quoin => FlipConfig::InnerCorner,
            FlipConfig::InnerCorner => FlipConfig::Quoin,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlipSite {
    pub cell: Cell,
    pub config: FlipConfig,
}

impl FlipSite {
    /// The hexagon centre, the one vertex whose height a flip changes.
    pub fn vertex(&self) -> Point {
        self.cell.point() + Point::U
    }
}

fn triple(t: &Tiling, m: Point) -> Option<[usize; 3]> {
    let h = t.hnf();
    let k = [m, m + Point::U, m + Point::U - Point::V].map(|p| h.index_of(p));
    (k[0] != k[1] && k[1] != k[2] && k[0] != k[2]).then_some(k)
}

pub fn flip_sites(tiling: &Tiling) -> Vec<FlipSite> {
    let mut out = Vec::new();
    for cell in tiling.hnf().cells() {
        let Some(k) = triple(tiling, cell.point()) else {
            continue;
        };
        let seen = k.map(|i| tiling.cells()[i]);
        for config in [FlipConfig::Quoin, FlipConfig::InnerCorner] {
            if seen == config.pattern() {
                out.push(FlipSite { cell, config });
            }
        }
    }
    out
}

/// Swaps the hexagon filling at `site`.
pub fn apply_flip(tiling: &Tiling, site: &FlipSite) -> Result<Tiling> {
    let k = triple(tiling, site.cell.point()).ok_or(Error::StaleFlipSite)?;
    if k.map(|i| tiling.cells()[i]) != site.config.pattern() {
        return Err(Error::StaleFlipSite);
    }
    let mut cells = tiling.cells().to_vec();
    for (i, o) in k.into_iter().zip(site.config.other().pattern()) {
        cells[i] = o;
    }
    Ok(Tiling::new_unchecked(*tiling.hnf(), cells))
}

/// Order, size and connectivity of the flip graph of one type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FlipGraph {
    pub order: usize,
    pub size: usize,
    pub connected: bool,
}

pub fn flip_graph(basis: &Basis, t: TilingType) -> Result<FlipGraph> {
    flip_graph_with(basis, t, &EnumOptions::default())
}

pub fn flip_graph_with(basis: &Basis, t: TilingType, opts: &EnumOptions) -> Result<FlipGraph> {
    let tilings: Vec<Tiling> = tiling::enumerate_with(&hnf(basis)?, opts)?
        .into_iter()
        .filter(|x| type_of(x) == t)
        .collect();
    if tilings.is_empty() {
        return Err(Error::UnknownType {
            l: t.l,
            d: t.d,
            r: t.r,
        });
    }
    let index: BTreeMap<&[Orientation], usize> = tilings
        .iter()
        .enumerate()
        .map(|(k, x)| (x.cells(), k))
        .collect();
    let mut adjacency = alloc::vec![Vec::new(); tilings.len()];
    let mut edges = BTreeSet::new();
    for (k, x) in tilings.iter().enumerate() {
        for site in flip_sites(x) {
            let y = apply_flip(x, &site)?;
            let j = index[y.cells()];
            adjacency[k].push(j);
            edges.insert((k.min(j), k.max(j)));
        }
    }
    let mut seen = alloc::vec![false; tilings.len()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    let mut reached = 1;
    while let Some(k) = queue.pop_front() {
        for &j in &adjacency[k] {
            if !seen[j] {
                seen[j] = true;
                reached += 1;
                queue.push_back(j);
            }
        }
    }
    Ok(FlipGraph {
        order: tilings.len(),
        size: edges.len(),
        connected: reached == tilings.len(),
    })
}

pub fn flip_connected(basis: &Basis, t: TilingType) -> Result<bool> {
    flip_graph(basis, t).map(|g| g.connected)
}
