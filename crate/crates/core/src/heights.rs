//! Height functions, fingerprints and the stepped-surface picture of a
//! periodic tiling.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::lattice::{hnf, Basis, HnfForm, Point};
use crate::tiling::{self, Orientation, Tiling};
use crate::typegeom;

/// One of the six unit steps of the triangular lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    U,
    NegU,
    V,
    NegV,
    UMinusV,
    VMinusU,
}

impl Step {
    pub const ALL: [Step; 6] = [
        Step::U,
        Step::NegU,
        Step::V,
        Step::NegV,
        Step::UMinusV,
        Step::VMinusU,
    ];

    pub fn vector(self) -> Point {
        match self {
            Step::U => Point(1, 0),
            Step::NegU => Point(-1, 0),
            Step::V => Point(0, 1),
            Step::NegV => Point(0, -1),
            Step::UMinusV => Point(1, -1),
            Step::VMinusU => Point(-1, 1),
        }
    }

    pub fn from_vector(p: Point) -> Option<Step> {
        Step::ALL.into_iter().find(|s| s.vector() == p)
    }

    /// Height increment along an edge of the tiling.
    pub fn increment(self) -> i64 {
        match self {
            Step::U | Step::NegV | Step::VMinusU => -1,
            Step::NegU | Step::V | Step::UMinusV => 1,
        }
    }

    /// Increment of the three-dimensional coordinates along an edge.
    pub fn coords_increment(self) -> [i64; 3] {
        match self {
            Step::U => [-1, 0, 0],
            Step::NegU => [1, 0, 0],
            Step::V => [0, 0, 1],
            Step::NegV => [0, 0, -1],
            Step::UMinusV => [0, 1, 0],
            Step::VMinusU => [0, -1, 0],
        }
    }

    pub fn reverse(self) -> Step {
        match self {
            Step::U => Step::NegU,
            Step::NegU => Step::U,
            Step::V => Step::NegV,
            Step::NegV => Step::V,
            Step::UMinusV => Step::VMinusU,
            Step::VMinusU => Step::UMinusV,
        }
    }
}

/// Whether the segment from `point` to `point + step` is an edge of the
/// tiling, i.e. not the diagonal of a lozenge.
pub fn edge_exists(tiling: &Tiling, point: Point, step: Step) -> bool {
    use Orientation::*;
    let x = point;
    match step {
        Step::U => tiling.at(x) != D,
        Step::V => tiling.at(x) != L,
        Step::VMinusU => tiling.at(x - Point::U) != R,
        Step::NegU => tiling.at(x - Point::U) != D,
        Step::NegV => tiling.at(x - Point::V) != L,
        Step::UMinusV => tiling.at(x - Point::V) != R,
    }
}

/// Height increments `(e(a), e(b))` along the two basis vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fingerprint {
    pub d1: i64,
    pub d2: i64,
}

impl Fingerprint {
    pub fn new(d1: i64, d2: i64) -> Fingerprint {
        Fingerprint { d1, d2 }
    }
}

/// Heights of a tiling with `h(0) = 0`: one value per cell representative,
/// extended quasi-periodically by the holonomy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightField {
    hnf: HnfForm,
    basis: Basis,
    pub base: Vec<i64>,
    pub holonomy: (i64, i64),
}

impl HeightField {
    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn at(&self, p: Point) -> i64 {
        let cell = self.hnf.reduce(p);
        let (k1, k2) = self
            .basis
            .coords_of(p - cell.point())
            .expect("offset lies in the lattice");
        self.base[cell.linear(&self.hnf)] + k1 * self.holonomy.0 + k2 * self.holonomy.1
    }

    pub fn fingerprint(&self) -> Fingerprint {
        Fingerprint::new(self.holonomy.0, self.holonomy.1)
    }
}

// c0 + ca·e(a) + cb·e(b)
type Affine = [i64; 3];

/// Solves the height equations over a spanning tree of the quotient edge
/// graph. Every non-tree edge is checked, so success certifies that the
/// height is well defined.
pub fn heights(tiling: &Tiling, basis: &Basis) -> Result<HeightField> {
    let h = *tiling.hnf();
    let found = hnf(basis)?;
    if found != h {
        return Err(Error::LatticeMismatch { expected: h, found });
    }
    let n = h.index();
    let mut value: Vec<Option<Affine>> = vec![None; n];
    let mut cycles: Vec<Affine> = Vec::new();
    value[0] = Some([0, 0, 0]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let hx = value[x].unwrap();
        let px = h.cell(x).point();
        for step in Step::ALL {
            if !edge_exists(tiling, px, step) {
                continue;
            }
            let q = px + step.vector();
            let cell = h.reduce(q);
            let y = cell.linear(&h);
            let (k1, k2) = basis.coords_of(q - cell.point()).unwrap();
            // h(y) + k1·e(a) + k2·e(b) = h(x) + f(step)
            let hy = [hx[0] + step.increment(), hx[1] - k1, hx[2] - k2];
            match value[y] {
                None => {
                    value[y] = Some(hy);
                    queue.push_back(y);
                }
                Some(old) => {
                    let diff = [old[0] - hy[0], old[1] - hy[1], old[2] - hy[2]];
                    if diff != [0, 0, 0] {
                        cycles.push(diff);
                    }
                }
            }
        }
    }
    if value.iter().any(Option::is_none) {
        return Err(Error::HeightNotWellDefined);
    }
    let holonomy = solve_holonomy(&cycles).ok_or(Error::HeightNotWellDefined)?;
    let eval = |v: Affine| v[0] + v[1] * holonomy.0 + v[2] * holonomy.1;
    if cycles.iter().any(|&c| eval(c) != 0) {
        return Err(Error::HeightNotWellDefined);
    }
    Ok(HeightField {
        hnf: h,
        basis: *basis,
        base: value.into_iter().map(|v| eval(v.unwrap())).collect(),
        holonomy,
    })
}

// Integral solution of the homogeneous-affine constraints c0 + ca·x + cb·y = 0.
fn solve_holonomy(cycles: &[Affine]) -> Option<(i64, i64)> {
    for (i, p) in cycles.iter().enumerate() {
        for q in &cycles[i + 1..] {
            let det = p[1] * q[2] - p[2] * q[1];
            if det == 0 {
                continue;
            }
            let nx = -p[0] * q[2] + p[2] * q[0];
            let ny = -p[1] * q[0] + p[0] * q[1];
            if nx % det != 0 || ny % det != 0 {
                return None;
            }
            return Some((nx / det, ny / det));
        }
    }
    None
}

/// The holonomy of the tiling in `basis`.
pub fn fingerprint(tiling: &Tiling, basis: &Basis) -> Result<Fingerprint> {
    heights(tiling, basis).map(|f| f.fingerprint())
}

/// Three-dimensional coordinates of the stepped-surface vertex above `point`.
pub fn coords3(tiling: &Tiling, point: Point) -> Result<[i64; 3]> {
    let field = heights(tiling, &tiling.hnf().basis())?;
    Ok(coords_from_height(point, field.at(point)))
}

fn coords_from_height(p: Point, h: i64) -> [i64; 3] {
    let (l1, l2) = (p.0, p.1);
    let t = (h - l2 + l1) / 3;
    debug_assert_eq!((h - l2 + l1).rem_euclid(3), 0);
    [-l1 + t, t, l2 + t]
}

/// Skeleton of a fingerprint: the 3D positions of the two basis vectors on
/// any tiling with that fingerprint.
pub fn skeleton(basis: &Basis, target: Fingerprint) -> Option<([i64; 3], [i64; 3])> {
    let lift = |d: i64, p: Point| -> Option<[i64; 3]> {
        let (x1, x2) = (p.0, p.1);
        let parts = [d - 2 * x1 - x2, d + x1 - x2, d + x1 + 2 * x2];
        if parts.iter().any(|x| x.rem_euclid(3) != 0) {
            return None;
        }
        Some(parts.map(|x| x / 3))
    };
    Some((lift(target.d1, basis.a)?, lift(target.d2, basis.b)?))
}

/// A tiling of the lattice of `basis` with fingerprint `target`.
///
/// Built as the upper boundary of the union of the downward octants whose
/// apexes are the lattice translates of the skeleton. The result is checked
/// against the matching rule and the target; a failed check falls back to
/// the first enumerated tiling with that fingerprint when the index is
/// small enough to enumerate.
pub fn tiling_for_fingerprint(basis: &Basis, target: Fingerprint) -> Result<Tiling> {
    typegeom::fingerprint_to_type(basis, target)
        .map_err(|_| Error::UnrealizableFingerprint(target))?;
    if let Some(t) = octant_tiling(basis, target)? {
        return Ok(t);
    }
    let h = hnf(basis)?;
    for t in tiling::enumerate(&h)? {
        if fingerprint(&t, basis)? == target {
            return Ok(t);
        }
    }
    Err(Error::UnrealizableFingerprint(target))
}

/// The octant-union construction alone. `Ok(None)` when the surface it
/// produces fails validation.
pub fn octant_tiling(basis: &Basis, target: Fingerprint) -> Result<Option<Tiling>> {
    let h = hnf(basis)?;
    let Some((xa, xb)) = skeleton(basis, target) else {
        return Err(Error::UnrealizableFingerprint(target));
    };
    let n = h.index() as i64;
    let radius = 2 * n + 2;
    let det = basis.det();
    let height = |p: Point| -> i64 {
        // nearest basis coordinates of p, then a window around them
        let k1 = Integer::div_floor(&(p.0 * basis.b.1 - basis.b.0 * p.1), &det);
        let k2 = Integer::div_floor(&(basis.a.0 * p.1 - p.0 * basis.a.1), &det);
        let base = [-p.0, 0, p.1];
        let mut best = i64::MIN;
        for i in k1 - radius..=k1 + radius {
            for j in k2 - radius..=k2 + radius {
                let s = [0, 1, 2].map(|c| i * xa[c] + j * xb[c]);
                let t = (0..3).map(|c| s[c] - base[c]).min().unwrap();
                best = best.max(t);
            }
        }
        3 * best + p.1 - p.0
    };
    let mut cells = Vec::with_capacity(h.index());
    for cell in h.cells() {
        let x = cell.point();
        let hx = height(x);
        let du = height(x + Point::U) - hx;
        let dv = height(x + Point::V) - hx;
        let o = match (du, dv, dv - du) {
            (2, _, _) => Orientation::D,
            (_, -2, _) => Orientation::L,
            (_, _, 2) => Orientation::R,
            _ => return Ok(None),
        };
        cells.push(o);
    }
    let Ok(t) = Tiling::new(h, cells) else {
        return Ok(None);
    };
    match fingerprint(&t, basis) {
        Ok(f) if f == target => Ok(Some(t)),
        _ => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::{constant, enumerate, type_of, TilingType};
    use Orientation::*;

    fn dr() -> Tiling {
        Tiling::new(HnfForm::new(2, 1, 0).unwrap(), vec![D, R]).unwrap()
    }

    fn hexagon12() -> Basis {
        Basis::from_columns(2, 2, -2, 4)
    }

    #[test]
    fn edge_examples() {
        let h = HnfForm::new(3, 2, 1).unwrap();
        let d = constant(&h, D);
        for p in [Point(0, 0), Point(5, -3), Point(-1, 7)] {
            assert!(!edge_exists(&d, p, Step::U));
            assert!(edge_exists(&d, p, Step::V));
        }
        assert!(!edge_exists(&dr(), Point(0, 0), Step::U));
        assert!(edge_exists(&dr(), Point(1, 0), Step::U));
    }

    #[test]
    fn constant_fingerprints() {
        for basis in [
            hexagon12(),
            Basis::from_columns(1, 0, 0, 1),
            Basis::from_columns(3, -1, 1, 2),
        ] {
            let h = hnf(&basis).unwrap();
            let (a, b) = (basis.a, basis.b);
            let f = |o| fingerprint(&constant(&h, o), &basis).unwrap();
            assert_eq!(f(D), Fingerprint::new(2 * a.0 + a.1, 2 * b.0 + b.1));
            assert_eq!(f(L), Fingerprint::new(-a.0 - 2 * a.1, -b.0 - 2 * b.1));
            assert_eq!(f(R), Fingerprint::new(-a.0 + a.1, -b.0 + b.1));
        }
    }

    #[test]
    fn dr_holonomy() {
        let basis = Basis::from_columns(2, 0, 0, 1);
        let field = heights(&dr(), &basis).unwrap();
        assert_eq!(field.holonomy, (1, 1));
        // path 0 -> v -> u -> 2u
        assert_eq!(field.at(Point(0, 1)), 1);
        assert_eq!(field.at(Point(1, 0)), 2);
        assert_eq!(field.at(Point(2, 0)), 1);
        assert_eq!(fingerprint(&dr(), &basis).unwrap(), Fingerprint::new(1, 1));
    }

    #[test]
    fn lattice_mismatch() {
        let err = fingerprint(&dr(), &Basis::from_columns(1, 0, 0, 1)).unwrap_err();
        assert!(matches!(err, Error::LatticeMismatch { .. }));
    }

    #[test]
    fn coords3_examples() {
        let h = HnfForm::new(2, 2, 1).unwrap();
        for t in enumerate(&h).unwrap() {
            assert_eq!(coords3(&t, Point::ORIGIN).unwrap(), [0, 0, 0]);
        }
        assert_eq!(coords3(&constant(&h, D), Point::U).unwrap(), [0, 1, 1]);
        assert_eq!(coords3(&constant(&h, R), Point::V).unwrap(), [0, 0, 1]);
    }

    #[test]
    fn coords_follow_edges() {
        for hnf_form in HnfForm::all_up_to(6) {
            for t in enumerate(&hnf_form).unwrap() {
                let field = heights(&t, &hnf_form.basis()).unwrap();
                for x in -3..=3 {
                    for y in -3..=3 {
                        let p = Point(x, y);
                        let c = coords_from_height(p, field.at(p));
                        for s in Step::ALL {
                            if edge_exists(&t, p, s) {
                                let q = p + s.vector();
                                let cq = coords_from_height(q, field.at(q));
                                let inc = s.coords_increment();
                                assert_eq!([0, 1, 2].map(|i| cq[i] - c[i]), inc);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn heights_agree_mod_three_and_detours() {
        for hnf_form in HnfForm::all_up_to(6) {
            let basis = hnf_form.basis();
            let tilings = enumerate(&hnf_form).unwrap();
            let fields: Vec<_> = tilings
                .iter()
                .map(|t| heights(t, &basis).unwrap())
                .collect();
            for (t, field) in tilings.iter().zip(&fields) {
                for x in -2..=2 {
                    for y in -2..=2 {
                        let p = Point(x, y);
                        assert_eq!((field.at(p) - fields[0].at(p)).rem_euclid(3), 0);
                        for s in Step::ALL {
                            let q = p + s.vector();
                            let dh = field.at(q) - field.at(p);
                            if edge_exists(t, p, s) {
                                assert_eq!(dh, s.increment());
                            } else {
                                assert_eq!(dh, -2 * s.increment());
                            }
                        }
                    }
                }
                // quasi-periodicity along both generators
                for p in [Point(0, 0), Point(1, 2), Point(-2, 1)] {
                    for y in [basis.a, basis.b, basis.a + basis.b] {
                        assert_eq!(field.at(p + y), field.at(p) + field.at(y));
                    }
                }
            }
        }
    }

    #[test]
    fn fingerprint_residues() {
        for hnf_form in HnfForm::all_up_to(6) {
            let basis = hnf_form.basis();
            for t in enumerate(&hnf_form).unwrap() {
                let f = fingerprint(&t, &basis).unwrap();
                let (a, b) = (basis.a, basis.b);
                assert_eq!((f.d1 - 2 * a.0 - a.1).rem_euclid(3), 0);
                assert_eq!((f.d2 - 2 * b.0 - b.1).rem_euclid(3), 0);
            }
        }
    }

    #[test]
    fn basis_covariance() {
        let basis = Basis::from_columns(3, 1, -1, 2);
        let u = [[2, 1], [1, 1]];
        let other = basis.transform(u);
        let h = hnf(&basis).unwrap();
        for t in enumerate(&h).unwrap() {
            let e = fingerprint(&t, &basis).unwrap();
            let e2 = fingerprint(&t, &other).unwrap();
            assert_eq!(e2.d1, u[0][0] * e.d1 + u[1][0] * e.d2);
            assert_eq!(e2.d2, u[0][1] * e.d1 + u[1][1] * e.d2);
        }
    }

    #[test]
    fn realizing_fingerprints() {
        let basis = Basis::from_columns(2, 0, 0, 1);
        let t = tiling_for_fingerprint(&basis, Fingerprint::new(1, 1)).unwrap();
        assert_eq!(type_of(&t), TilingType::new(0, 1, 1));
        let t = tiling_for_fingerprint(&hexagon12(), Fingerprint::new(0, 3)).unwrap();
        assert_eq!(type_of(&t), TilingType::new(2, 2, 8));
        assert_eq!(
            fingerprint(&t, &hexagon12()).unwrap(),
            Fingerprint::new(0, 3)
        );
        for basis in [hexagon12(), basis, Basis::from_columns(1, 0, 0, 1)] {
            let vd = Fingerprint::new(2 * basis.a.0 + basis.a.1, 2 * basis.b.0 + basis.b.1);
            let t = tiling_for_fingerprint(&basis, vd).unwrap();
            assert_eq!(t, constant(&hnf(&basis).unwrap(), D));
        }
    }

    #[test]
    fn hexagon12_skeleton() {
        let (xa, xb) = skeleton(&hexagon12(), Fingerprint::new(0, 3)).unwrap();
        assert_eq!(xa, [-2, 0, 2]);
        assert_eq!(xb, [1, -1, 3]);
    }

    #[test]
    fn unrealizable_targets() {
        for target in [
            Fingerprint::new(1, 3),
            Fingerprint::new(9, 0),
            Fingerprint::new(-9, 0),
        ] {
            assert_eq!(
                tiling_for_fingerprint(&hexagon12(), target),
                Err(Error::UnrealizableFingerprint(target))
            );
        }
    }

    #[test]
    fn octants_realize_every_type() {
        for hnf_form in HnfForm::all_up_to(12) {
            for basis in [
                hnf_form.basis(),
                hnf_form.basis().transform([[1, 1], [-1, 0]]),
            ] {
                for (target, ty) in typegeom::all_types(&basis).unwrap() {
                    let t = octant_tiling(&basis, target)
                        .unwrap()
                        .unwrap_or_else(|| panic!("{hnf_form} {target:?}"));
                    assert_eq!(type_of(&t), ty);
                }
            }
        }
    }
}
