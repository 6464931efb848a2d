//! Sublattices of the triangular lattice and their fundamental domains.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A point `λ1·u + λ2·v` of the ambient lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Point(pub i64, pub i64);

impl Point {
    pub const ORIGIN: Point = Point(0, 0);
    pub const U: Point = Point(1, 0);
    pub const V: Point = Point(0, 1);
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point(self.0 + rhs.0, self.1 + rhs.1)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point(self.0 - rhs.0, self.1 - rhs.1)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point(-self.0, -self.1)
    }
}

impl Mul<Point> for i64 {
    type Output = Point;
    fn mul(self, rhs: Point) -> Point {
        Point(self * rhs.0, self * rhs.1)
    }
}

/// Two generators of a sublattice, the columns of the integer matrix
/// `[[a1, b1], [a2, b2]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Basis {
    pub a: Point,
    pub b: Point,
}

impl Basis {
    pub fn new(a: Point, b: Point) -> Basis {
        Basis { a, b }
    }

    /// Builds a basis from the flat column-major list `a1, a2, b1, b2`.
    pub fn from_columns(a1: i64, a2: i64, b1: i64, b2: i64) -> Basis {
        Basis::new(Point(a1, a2), Point(b1, b2))
    }

    pub fn det(&self) -> i64 {
        self.a.0 * self.b.1 - self.b.0 * self.a.1
    }

    /// `self · U` for an integer matrix `U = [[u11, u12], [u21, u22]]`.
    pub fn transform(&self, u: [[i64; 2]; 2]) -> Basis {
        Basis::new(
            u[0][0] * self.a + u[1][0] * self.b,
            u[0][1] * self.a + u[1][1] * self.b,
        )
    }

    /// Integer coordinates `(k1, k2)` with `k1·a + k2·b = p`, if `p` lies in
    /// the lattice.
    pub fn coords_of(&self, p: Point) -> Option<(i64, i64)> {
        let det = self.det();
        if det == 0 {
            return None;
        }
        let n1 = p.0 * self.b.1 - self.b.0 * p.1;
        let n2 = self.a.0 * p.1 - p.0 * self.a.1;
        if n1 % det != 0 || n2 % det != 0 {
            return None;
        }
        Some((n1 / det, n2 / det))
    }

    /// The point `k1·a + k2·b`.
    pub fn point(&self, k1: i64, k2: i64) -> Point {
        k1 * self.a + k2 * self.b
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.a.0, self.b.0, self.a.1, self.b.1
        )
    }
}

/// Triangular canonical form of a sublattice: it is generated by `(a, 0)`
/// and `(c, b)` with `a > 0`, `b > 0` and `0 <= c < a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HnfForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl HnfForm {
    /// Checks the normalization and returns the form.
    pub fn new(a: i64, b: i64, c: i64) -> Result<HnfForm> {
        if a <= 0 || b <= 0 || c < 0 || c >= a {
            return Err(Error::RankDeficient);
        }
        Ok(HnfForm { a, b, c })
    }

    pub fn index(&self) -> usize {
        (self.a * self.b) as usize
    }

    pub fn basis(&self) -> Basis {
        Basis::new(Point(self.a, 0), Point(self.c, self.b))
    }

    /// Canonical representative `j·u + i·v` of the class of `p`.
    pub fn reduce(&self, p: Point) -> Cell {
        let i = p.1.rem_euclid(self.b);
        let k = (p.1 - i) / self.b;
        let j = (p.0 - k * self.c).rem_euclid(self.a);
        Cell { j, i }
    }

    /// Linear index of the class of `p`.
    pub fn index_of(&self, p: Point) -> usize {
        self.reduce(p).linear(self)
    }

    pub fn cell(&self, linear: usize) -> Cell {
        let a = self.a as usize;
        Cell {
            j: (linear % a) as i64,
            i: (linear / a) as i64,
        }
    }

    /// All cells in linear order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.index()).map(move |k| self.cell(k))
    }

    pub fn contains(&self, p: Point) -> bool {
        self.reduce(p) == Cell { j: 0, i: 0 }
    }

    /// Every triangular form of index at most `max_index`, ordered by
    /// index, then `a`, then `c`.
    pub fn all_up_to(max_index: i64) -> alloc::vec::Vec<HnfForm> {
        let mut out = alloc::vec::Vec::new();
        for n in 1..=max_index {
            for a in 1..=n {
                if n % a != 0 {
                    continue;
                }
                for c in 0..a {
                    out.push(HnfForm { a, b: n / a, c });
                }
            }
        }
        out
    }
}

impl fmt::Display for HnfForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// A class of the quotient by the sublattice, stored as its representative
/// `j·u + i·v` with `0 <= j < a`, `0 <= i < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub j: i64,
    pub i: i64,
}

impl Cell {
    pub fn point(&self) -> Point {
        Point(self.j, self.i)
    }

    pub fn linear(&self, hnf: &HnfForm) -> usize {
        (self.i * hnf.a + self.j) as usize
    }
}

/// Triangular form of the lattice generated by `basis`.
///
/// Column reduction on the second coordinates, then sign and offset
/// normalization.
pub fn hnf(basis: &Basis) -> Result<HnfForm> {
    if basis.det() == 0 {
        return Err(Error::RankDeficient);
    }
    let (mut p, mut q) = (basis.a, basis.b);
    while q.1 != 0 {
        let t = p.1.div_euclid(q.1);
        p = p - t * q;
        core::mem::swap(&mut p, &mut q);
    }
    // q = (±a, 0), p = (c', ±b)
    let a = q.0.abs();
    if p.1 < 0 {
        p = -p;
    }
    HnfForm::new(a, p.1, p.0.rem_euclid(a))
}

/// `[Λ₀ : Λ] = |det B|`.
pub fn index(basis: &Basis) -> Result<u64> {
    match basis.det() {
        0 => Err(Error::RankDeficient),
        d => Ok(d.unsigned_abs()),
    }
}

/// Canonical cell of `point` modulo the lattice `hnf`.
pub fn reduce(point: Point, hnf: &HnfForm) -> Cell {
    hnf.reduce(point)
}
