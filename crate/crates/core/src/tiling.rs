//! Periodic tilings as orientation assignments on the fundamental domain.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::lattice::{HnfForm, Point};

/// Orientation of the lozenge containing an up-triangle. Collation order is
/// `L < D < R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    L,
    D,
    R,
}

impl Orientation {
    pub const ALL: [Orientation; 3] = [Orientation::L, Orientation::D, Orientation::R];

    /// Offset from the up-triangle to the down-triangle it is merged with.
    pub fn xi(self) -> Point {
        match self {
            Orientation::L => Point(-1, 1),
            Orientation::D => Point(0, 0),
            Orientation::R => Point(0, 1),
        }
    }

    pub fn from_xi(p: Point) -> Option<Orientation> {
        Orientation::ALL.into_iter().find(|o| o.xi() == p)
    }

    pub fn as_char(self) -> char {
        match self {
            Orientation::L => 'L',
            Orientation::D => 'D',
            Orientation::R => 'R',
        }
    }

    pub fn from_char(c: char) -> Option<Orientation> {
        match c {
            'L' => Some(Orientation::L),
            'D' => Some(Orientation::D),
            'R' => Some(Orientation::R),
            _ => None,
        }
    }
}

/// Census of lozenge orientations over one fundamental domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TilingType {
    pub l: u64,
    pub d: u64,
    pub r: u64,
}

impl TilingType {
    pub fn new(l: u64, d: u64, r: u64) -> TilingType {
        TilingType { l, d, r }
    }

    pub fn total(&self) -> u64 {
        self.l + self.d + self.r
    }

    /// All three orientations occur.
    pub fn is_interior(&self) -> bool {
        self.l > 0 && self.d > 0 && self.r > 0
    }

    pub fn count(&self, o: Orientation) -> u64 {
        match o {
            Orientation::L => self.l,
            Orientation::D => self.d,
            Orientation::R => self.r,
        }
    }
}

impl fmt::Display for TilingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.l, self.d, self.r)
    }
}

/// A tiling periodic under the lattice `hnf`, one orientation per cell in
/// linear order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tiling {
    hnf: HnfForm,
    cells: Vec<Orientation>,
}

impl Tiling {
    /// Validates the matching condition before constructing.
    pub fn new(hnf: HnfForm, cells: Vec<Orientation>) -> Result<Tiling> {
        if !is_valid(&hnf, &cells)? {
            return Err(Error::InvalidTiling);
        }
        Ok(Tiling { hnf, cells })
    }

    pub(crate) fn new_unchecked(hnf: HnfForm, cells: Vec<Orientation>) -> Tiling {
        debug_assert_eq!(cells.len(), hnf.index());
        Tiling { hnf, cells }
    }

    pub fn hnf(&self) -> &HnfForm {
        &self.hnf
    }

    pub fn cells(&self) -> &[Orientation] {
        &self.cells
    }

    pub fn index(&self) -> usize {
        self.cells.len()
    }

    /// Orientation at an arbitrary point of the ambient lattice.
    pub fn at(&self, p: Point) -> Orientation {
        self.cells[self.hnf.index_of(p)]
    }

    /// Down-triangle matched with the up-triangle at `p`.
    pub fn matched(&self, p: Point) -> Point {
        p + self.at(p).xi()
    }

    pub fn cells_string(&self) -> alloc::string::String {
        self.cells.iter().map(|o| o.as_char()).collect()
    }

    pub fn parse_cells(s: &str) -> Option<Vec<Orientation>> {
        s.chars().map(Orientation::from_char).collect()
    }
}

impl fmt::Display for Tiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.cells {
            write!(f, "{}", o.as_char())?;
        }
        Ok(())
    }
}

/// Checks that at every cell `x` exactly one of `τ(x)=R`, `τ(x+u)=L`,
/// `τ(x+v)=D` holds.
pub fn is_valid(hnf: &HnfForm, cells: &[Orientation]) -> Result<bool> {
    if cells.len() != hnf.index() {
        return Err(Error::LengthMismatch {
            expected: hnf.index(),
            found: cells.len(),
        });
    }
    let at = |p: Point| cells[hnf.index_of(p)];
    Ok(hnf.cells().all(|cell| {
        let x = cell.point();
        let hits = (at(x) == Orientation::R) as u8
            + (at(x + Point::U) == Orientation::L) as u8
            + (at(x + Point::V) == Orientation::D) as u8;
        hits == 1
    }))
}

pub fn constant(hnf: &HnfForm, o: Orientation) -> Tiling {
    Tiling::new_unchecked(*hnf, vec![o; hnf.index()])
}

pub fn type_of(tiling: &Tiling) -> TilingType {
    let mut t = TilingType::default();
    for o in tiling.cells() {
        match o {
            Orientation::L => t.l += 1,
            Orientation::D => t.d += 1,
            Orientation::R => t.r += 1,
        }
    }
    t
}

pub const DEFAULT_ENUMERATION_CAP: u64 = 16;

#[derive(Debug, Clone)]
pub struct EnumOptions {
    /// Largest admissible index.
    pub cap: u64,
    /// Orientations a cell may take; restricting this enumerates the
    /// tilings on an edge of the fundamental triangle.
    pub alphabet: Vec<Orientation>,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            cap: DEFAULT_ENUMERATION_CAP,
            alphabet: Orientation::ALL.to_vec(),
        }
    }
}

/// All valid tilings for `hnf`, sorted by cell sequence.
pub fn enumerate(hnf: &HnfForm) -> Result<Vec<Tiling>> {
    enumerate_with(hnf, &EnumOptions::default())
}

pub fn enumerate_with(hnf: &HnfForm, opts: &EnumOptions) -> Result<Vec<Tiling>> {
    let n = hnf.index();
    if n as u64 > opts.cap {
        return Err(Error::CapExceeded {
            index: n as u64,
            cap: opts.cap,
        });
    }
    // The up-triangles that can be merged with each down class.
    let candidates: Vec<Vec<(usize, Orientation)>> = hnf
        .cells()
        .map(|cell| {
            let y = cell.point();
            opts.alphabet
                .iter()
                .map(|&o| (hnf.index_of(y - o.xi()), o))
                .collect()
        })
        .collect();
    let mut search = Search {
        candidates,
        assigned: vec![None; n],
        covered: vec![false; n],
        hnf: *hnf,
        found: Vec::new(),
    };
    search.run();
    let mut found = search.found;
    found.sort();
    Ok(found)
}

// Exact cover of the down classes by the up cells, branching on the down
// class with the fewest remaining candidates.
struct Search {
    candidates: Vec<Vec<(usize, Orientation)>>,
    assigned: Vec<Option<Orientation>>,
    covered: Vec<bool>,
    hnf: HnfForm,
    found: Vec<Tiling>,
}

impl Search {
    fn run(&mut self) {
        let mut best: Option<(usize, usize)> = None;
        for (y, cands) in self.candidates.iter().enumerate() {
            if self.covered[y] {
                continue;
            }
            let live = cands
                .iter()
                .filter(|(x, _)| self.assigned[*x].is_none())
                .count();
            if live == 0 {
                return;
            }
            if best.is_none_or(|(_, k)| live < k) {
                best = Some((y, live));
            }
        }
        let Some((y, _)) = best else {
            let cells = self.assigned.iter().map(|o| o.unwrap()).collect();
            self.found.push(Tiling::new_unchecked(self.hnf, cells));
            return;
        };
        for k in 0..self.candidates[y].len() {
            let (x, o) = self.candidates[y][k];
            if self.assigned[x].is_some() {
                continue;
            }
            self.assigned[x] = Some(o);
            self.covered[y] = true;
            self.run();
            self.covered[y] = false;
            self.assigned[x] = None;
        }
    }
}
