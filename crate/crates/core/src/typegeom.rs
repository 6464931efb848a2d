//! The fundamental triangle in fingerprint space and the closed-form counts
//! attached to it.

use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::heights::Fingerprint;
use crate::lattice::{index, Basis};
use crate::tiling::TilingType;

/// Fingerprints of the three constant tilings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FundamentalTriangle {
    pub l: Fingerprint,
    pub d: Fingerprint,
    pub r: Fingerprint,
}

impl FundamentalTriangle {
    /// Twice the signed area.
    pub fn doubled_area(&self) -> i64 {
        cross(sub(self.d, self.l), sub(self.r, self.l))
    }
}

fn sub(p: Fingerprint, q: Fingerprint) -> Fingerprint {
    Fingerprint::new(p.d1 - q.d1, p.d2 - q.d2)
}

fn cross(p: Fingerprint, q: Fingerprint) -> i64 {
    p.d1 * q.d2 - p.d2 * q.d1
}

pub fn triangle(basis: &Basis) -> FundamentalTriangle {
    let (a, b) = (basis.a, basis.b);
    FundamentalTriangle {
        l: Fingerprint::new(-a.0 - 2 * a.1, -b.0 - 2 * b.1),
        d: Fingerprint::new(2 * a.0 + a.1, 2 * b.0 + b.1),
        r: Fingerprint::new(-a.0 + a.1, -b.0 + b.1),
    }
}

/// Type of the tilings with fingerprint `p`: the barycentric coordinates of
/// `p` in the fundamental triangle, scaled by the index.
pub fn fingerprint_to_type(basis: &Basis, p: Fingerprint) -> Result<TilingType> {
    let n = index(basis)? as i64;
    let tri = triangle(basis);
    let bad = || Error::UnrealizableFingerprint(p);
    if (p.d1 - tri.d.d1).rem_euclid(3) != 0 || (p.d2 - tri.d.d2).rem_euclid(3) != 0 {
        return Err(bad());
    }
    // n·(p − vR) = nL·(vL − vR) + nD·(vD − vR)
    let area = cross(sub(tri.l, tri.r), sub(tri.d, tri.r));
    let rhs = sub(p, tri.r);
    let nl_num = n * cross(rhs, sub(tri.d, tri.r));
    let nd_num = n * cross(sub(tri.l, tri.r), rhs);
    if nl_num % area != 0 || nd_num % area != 0 {
        return Err(bad());
    }
    let (nl, nd) = (nl_num / area, nd_num / area);
    let nr = n - nl - nd;
    if nl < 0 || nd < 0 || nr < 0 {
        return Err(bad());
    }
    Ok(TilingType::new(nl as u64, nd as u64, nr as u64))
}

pub fn type_to_fingerprint(basis: &Basis, t: TilingType) -> Result<Fingerprint> {
    let n = index(basis)? as i64;
    let impossible = || Error::ImpossibleType {
        l: t.l,
        d: t.d,
        r: t.r,
    };
    if t.total() != n as u64 {
        return Err(impossible());
    }
    let tri = triangle(basis);
    let (l, d, r) = (t.l as i64, t.d as i64, t.r as i64);
    let s1 = l * tri.l.d1 + d * tri.d.d1 + r * tri.r.d1;
    let s2 = l * tri.l.d2 + d * tri.d.d2 + r * tri.r.d2;
    if s1 % n != 0 || s2 % n != 0 {
        return Err(impossible());
    }
    Ok(Fingerprint::new(s1 / n, s2 / n))
}

/// Every lattice point of the closed fundamental triangle congruent to the
/// D vertex modulo 3, with its type, sorted by fingerprint.
pub fn all_types(basis: &Basis) -> Result<Vec<(Fingerprint, TilingType)>> {
    index(basis)?;
    let tri = triangle(basis);
    // work in the triangle translated by −vD and scaled by 1/3
    let scaled = [tri.l, tri.d, tri.r].map(|v| ((v.d1 - tri.d.d1) / 3, (v.d2 - tri.d.d2) / 3));
    let lo1 = scaled.iter().map(|v| v.0).min().unwrap();
    let hi1 = scaled.iter().map(|v| v.0).max().unwrap();
    let lo2 = scaled.iter().map(|v| v.1).min().unwrap();
    let hi2 = scaled.iter().map(|v| v.1).max().unwrap();
    let mut out = Vec::new();
    for q1 in lo1..=hi1 {
        for q2 in lo2..=hi2 {
            let p = Fingerprint::new(tri.d.d1 + 3 * q1, tri.d.d2 + 3 * q2);
            if let Ok(t) = fingerprint_to_type(basis, p) {
                out.push((p, t));
            }
        }
    }
    Ok(out)
}

/// Lattice-point counts of the fundamental triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountSummary {
    pub boundary_dl: u64,
    pub boundary_lr: u64,
    pub boundary_rd: u64,
    pub interior: u64,
    pub monomials: u64,
}

pub fn count_summary(basis: &Basis) -> Result<CountSummary> {
    let n = index(basis)? as i64;
    let (a, b) = (basis.a, basis.b);
    let g_rd = a.0.gcd(&b.0);
    let g_lr = a.1.gcd(&b.1);
    let g_dl = (a.0 + a.1).gcd(&(b.0 + b.1));
    let g = g_rd + g_lr + g_dl;
    Ok(CountSummary {
        boundary_dl: (g_dl + 1) as u64,
        boundary_lr: (g_lr + 1) as u64,
        boundary_rd: (g_rd + 1) as u64,
        interior: ((n - g) / 2 + 1) as u64,
        monomials: ((n + g) / 2 + 1) as u64,
    })
}

/// Edge length `gcd(a1, b1)` of the D–R side of the triangle.
pub fn dr_edge_length(basis: &Basis) -> u64 {
    basis.a.0.gcd(&basis.b.0) as u64
}

// Necklace counts are kept below this many beads so sums fit in u128.
const MAX_BEADS: u64 = 100;

fn check_beads(d: u64, i: u64) -> Result<()> {
    if d == 0 || i > d || d > MAX_BEADS {
        return Err(Error::OutOfRange { d, i });
    }
    Ok(())
}

/// `n choose k`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * (n - j) as u128 / (j + 1) as u128;
    }
    acc
}

fn totient(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn divisors(n: u64) -> impl Iterator<Item = u64> {
    (1..=n).filter(move |k| n.is_multiple_of(*k))
}

/// Binary necklaces of `d` beads with `i` coloured, up to rotation.
pub fn necklace_count(d: u64, i: u64) -> Result<u128> {
    check_beads(d, i)?;
    let g = i.gcd(&d);
    let sum: u128 = divisors(g)
        .map(|k| totient(k) as u128 * binomial(d / k, i / k))
        .sum();
    Ok(sum / d as u128)
}

/// Binary necklaces of `d` beads, any number coloured.
pub fn necklace_total(d: u64) -> Result<u128> {
    check_beads(d, 0)?;
    let sum: u128 = divisors(d)
        .map(|k| totient(k) as u128 * (1u128 << (d / k)))
        .sum();
    Ok(sum / d as u128)
}

/// Binary necklaces up to rotation and reflection (bracelets), by
/// Burnside's lemma over the dihedral group.
pub fn bracelet_count(d: u64, i: u64) -> Result<u128> {
    check_beads(d, i)?;
    // colourings fixed by a reflection with `fixed` fixed beads and `pairs`
    // swapped pairs
    let by_reflection = |fixed: u64, pairs: u64| -> u128 {
        (0..=pairs)
            .filter(|k| 2 * k <= i && i - 2 * k <= fixed)
            .map(|k| binomial(pairs, k) * binomial(fixed, i - 2 * k))
            .sum()
    };
    let rotations = necklace_count(d, i)? * d as u128;
    let reflections = if d % 2 == 1 {
        d as u128 * by_reflection(1, (d - 1) / 2)
    } else {
        (d / 2) as u128 * (by_reflection(2, d / 2 - 1) + by_reflection(0, d / 2))
    };
    Ok((rotations + reflections) / (2 * d as u128))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::vec;

    fn hexagon12() -> Basis {
        Basis::from_columns(2, 2, -2, 4)
    }

    fn fp(d1: i64, d2: i64) -> Fingerprint {
        Fingerprint::new(d1, d2)
    }

    #[test]
    fn triangle_examples() {
        let t = triangle(&hexagon12());
        assert_eq!((t.l, t.d, t.r), (fp(-6, -6), fp(6, 0), fp(0, 6)));
        let t = triangle(&Basis::from_columns(1, 0, 0, 1));
        assert_eq!((t.l, t.d, t.r), (fp(-1, -2), fp(2, 1), fp(-1, 1)));
        let t = triangle(&Basis::from_columns(2, 0, 0, 1));
        assert_eq!((t.l, t.d, t.r), (fp(-2, -2), fp(4, 1), fp(-2, 1)));
    }

    #[test]
    fn triangle_invariants() {
        for a1 in -4..=4 {
            for a2 in -4..=4 {
                for (b1, b2) in [(1, 3), (-2, 5), (4, -1), (0, 2)] {
                    let basis = Basis::from_columns(a1, a2, b1, b2);
                    if basis.det() == 0 {
                        continue;
                    }
                    let t = triangle(&basis);
                    assert_eq!(t.l.d1 + t.d.d1 + t.r.d1, 0);
                    assert_eq!(t.l.d2 + t.d.d2 + t.r.d2, 0);
                    assert_eq!(t.doubled_area().abs(), 9 * basis.det().abs());
                    for p in [t.l, t.r] {
                        assert_eq!((p.d1 - t.d.d1) % 3, 0);
                        assert_eq!((p.d2 - t.d.d2) % 3, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn type_conversions() {
        let b = hexagon12();
        assert_eq!(
            fingerprint_to_type(&b, fp(0, 3)),
            Ok(TilingType::new(2, 2, 8))
        );
        assert_eq!(
            fingerprint_to_type(&b, fp(6, 0)),
            Ok(TilingType::new(0, 12, 0))
        );
        assert_eq!(
            fingerprint_to_type(&b, fp(3, 3)),
            Ok(TilingType::new(0, 6, 6))
        );
        assert_eq!(
            type_to_fingerprint(&b, TilingType::new(2, 2, 8)),
            Ok(fp(0, 3))
        );
        assert_eq!(
            type_to_fingerprint(&b, TilingType::new(4, 4, 4)),
            Ok(fp(0, 0))
        );
        assert_eq!(
            type_to_fingerprint(&b, TilingType::new(12, 0, 0)),
            Ok(fp(-6, -6))
        );
        assert!(type_to_fingerprint(&b, TilingType::new(1, 1, 1)).is_err());
        assert!(type_to_fingerprint(&b, TilingType::new(1, 1, 10)).is_err());
        assert!(fingerprint_to_type(&b, fp(1, 0)).is_err());
        assert!(fingerprint_to_type(&b, fp(9, 0)).is_err());
    }

    #[test]
    fn all_types_examples() {
        let types = all_types(&hexagon12()).unwrap();
        assert_eq!(types.len(), 10);
        let interior: BTreeSet<_> = types
            .iter()
            .map(|(_, t)| *t)
            .filter(|t| t.is_interior())
            .collect();
        let expected: BTreeSet<_> = [(4, 4, 4), (8, 2, 2), (2, 8, 2), (2, 2, 8)]
            .into_iter()
            .map(|(l, d, r)| TilingType::new(l, d, r))
            .collect();
        assert_eq!(interior, expected);
        assert_eq!(
            all_types(&Basis::from_columns(1, 0, 0, 1)).unwrap().len(),
            3
        );
        let mut small: Vec<_> = all_types(&Basis::from_columns(2, 0, 0, 1))
            .unwrap()
            .into_iter()
            .map(|(_, t)| (t.l, t.d, t.r))
            .collect();
        small.sort();
        assert_eq!(small, vec![(0, 0, 2), (0, 1, 1), (0, 2, 0), (2, 0, 0)]);
        for w in types.windows(2) {
            assert!(w[0].0 < w[1].0);
        }
        for (p, t) in types {
            assert_eq!(type_to_fingerprint(&hexagon12(), t), Ok(p));
        }
    }

    #[test]
    fn count_summary_examples() {
        let s = count_summary(&hexagon12()).unwrap();
        assert_eq!((s.boundary_dl, s.boundary_lr, s.boundary_rd), (3, 3, 3));
        assert_eq!((s.interior, s.monomials), (4, 10));
        let s = count_summary(&Basis::from_columns(2, 0, 0, 1)).unwrap();
        assert_eq!((s.boundary_dl, s.boundary_lr, s.boundary_rd), (2, 2, 3));
        assert_eq!((s.interior, s.monomials), (0, 4));
        assert_eq!(
            count_summary(&Basis::from_columns(1, 0, 0, 1))
                .unwrap()
                .monomials,
            3
        );
    }

    #[test]
    fn monomial_count_matches_scan() {
        for a1 in -5i64..=5 {
            for a2 in -3i64..=3 {
                for b1 in -3i64..=3 {
                    for b2 in -5i64..=5 {
                        let basis = Basis::from_columns(a1, a2, b1, b2);
                        let n = basis.det().abs();
                        if n == 0 || n > 30 {
                            continue;
                        }
                        let s = count_summary(&basis).unwrap();
                        let types = all_types(&basis).unwrap();
                        assert_eq!(types.len() as u64, s.monomials, "{basis}");
                        let inner = types.iter().filter(|(_, t)| t.is_interior()).count();
                        assert_eq!(inner as u64, s.interior, "{basis}");
                        for (p, t) in types {
                            assert_eq!(type_to_fingerprint(&basis, t), Ok(p));
                        }
                    }
                }
            }
        }
    }

    // Orbit enumeration over all binary strings.
    fn orbits(d: u64, i: u64, reflect: bool) -> u128 {
        let mut seen = BTreeSet::new();
        let mut count = 0;
        let rot = |w: u64| ((w << 1) | (w >> (d - 1))) & ((1 << d) - 1);
        let rev = |w: u64| (0..d).fold(0, |acc, k| acc | (((w >> k) & 1) << (d - 1 - k)));
        for w in 0u64..(1 << d) {
            if w.count_ones() as u64 != i || seen.contains(&w) {
                continue;
            }
            count += 1;
            let mut x = w;
            for _ in 0..d {
                seen.insert(x);
                if reflect {
                    seen.insert(rev(x));
                }
                x = rot(x);
            }
        }
        count
    }

    #[test]
    fn necklace_examples() {
        assert_eq!(necklace_count(2, 1), Ok(1));
        assert_eq!(necklace_count(4, 2), Ok(2));
        assert_eq!(necklace_count(1, 0), Ok(1));
        assert_eq!(necklace_total(2), Ok(3));
        assert_eq!(necklace_total(1), Ok(2));
        assert_eq!(bracelet_count(4, 2), Ok(2));
        assert!(necklace_count(3, 4).is_err());
        assert!(necklace_total(0).is_err());
    }

    #[test]
    fn closed_forms_match_orbit_enumeration() {
        for d in 1..=12 {
            let mut total = 0;
            for i in 0..=d {
                let n = necklace_count(d, i).unwrap();
                let b = bracelet_count(d, i).unwrap();
                assert_eq!(n, orbits(d, i, false), "necklace {d} {i}");
                assert_eq!(b, orbits(d, i, true), "bracelet {d} {i}");
                assert!(b <= n);
                total += n;
            }
            assert_eq!(necklace_total(d).unwrap(), total);
        }
    }
}
