//! Sparse polynomials in `L, D, R` with big-integer coefficients, and
//! determinants and permanents of square matrices over them.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponents of `L^l D^d R^r`, ordered lexicographically by `(l, d, r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub l: u32,
    pub d: u32,
    pub r: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { l: 0, d: 0, r: 0 };

    pub fn new(l: u32, d: u32, r: u32) -> Monomial {
        Monomial { l, d, r }
    }

    pub fn degree(&self) -> u32 {
        self.l + self.d + self.r
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.l + rhs.l, self.d + rhs.d, self.r + rhs.r)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, e) in [("L", self.l), ("D", self.d), ("R", self.r)] {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(name)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// A polynomial in canonical form: no zero coefficients, terms kept in
/// monomial order, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::term(1, Monomial::ONE)
    }

    pub fn l() -> Poly {
        Poly::term(1, Monomial::new(1, 0, 0))
    }

    pub fn d() -> Poly {
        Poly::term(1, Monomial::new(0, 1, 0))
    }

    pub fn r() -> Poly {
        Poly::term(1, Monomial::new(0, 0, 1))
    }

    pub fn term(coeff: impl Into<BigInt>, m: Monomial) -> Poly {
        let mut p = Poly::zero();
        p.add_term(m, coeff.into());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Poly {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: Monomial) -> BigInt {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn scale(&self, k: &BigInt) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    /// Sum of the coefficients.
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn eval(&self, l: &BigInt, d: &BigInt, r: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(m, c)| c * l.pow(m.l) * d.pow(m.d) * r.pow(m.r))
            .sum()
    }

    /// All terms have degree `n`.
    pub fn is_homogeneous(&self, n: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == n)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(*m1 * *m2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl fmt::Display for Poly {
    /// `R^2 + 2*D*R + D^2 + L^2`: ascending monomial order, explicit `*`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *m == Monomial::ONE {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Square matrix of polynomials, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zeros(n: usize) -> PolyMatrix {
        PolyMatrix {
            n,
            entries: (0..n * n).map(|_| Poly::zero()).collect(),
        }
    }

    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Result<PolyMatrix> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::NotSquare {
                rows: n,
                cols: bad.len(),
            });
        }
        Ok(PolyMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &Poly {
        &self.entries[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, p: Poly) {
        self.entries[row * self.n + col] = p;
    }

    pub fn add_to(&mut self, row: usize, col: usize, p: &Poly) {
        self.entries[row * self.n + col] += p;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Poly]> {
        self.entries.chunks(self.n.max(1))
    }

    /// Block-diagonal composition `diag(self, other)`.
    pub fn block_diag(&self, other: &PolyMatrix) -> PolyMatrix {
        let n = self.n + other.n;
        let mut out = PolyMatrix::zeros(n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                out.set(self.n + i, self.n + j, other.get(i, j).clone());
            }
        }
        out
    }
}

/// Largest order handled by the subset expansion (one bit per column).
pub const MAX_ORDER: usize = 64;

/// Default cap on the order of a permanent.
pub const DEFAULT_PERMANENT_CAP: usize = 14;

/// Exact determinant.
pub fn determinant(m: &PolyMatrix) -> Result<Poly> {
    expand(m, true, MAX_ORDER)
}

pub fn permanent(m: &PolyMatrix) -> Result<Poly> {
    permanent_with_cap(m, DEFAULT_PERMANENT_CAP)
}

pub fn permanent_with_cap(m: &PolyMatrix, cap: usize) -> Result<Poly> {
    expand(m, false, cap.min(MAX_ORDER))
}

pub fn eval_ones(p: &Poly) -> BigInt {
    p.eval_ones()
}

// Row-by-row Laplace expansion memoized on the set of used columns. Only
// subsets reachable through nonzero entries are stored, and a subset is
// dropped once some column it misses has no nonzero entry in the remaining
// rows, so sparse matrices stay far below 2^n states. Rows are visited in an
// order that keeps few columns half-covered at any time.
fn expand(m: &PolyMatrix, signed: bool, cap: usize) -> Result<Poly> {
    let n = m.order();
    if n > cap {
        return Err(Error::CapExceeded {
            index: n as u64,
            cap: cap as u64,
        });
    }
    if n == 0 {
        return Ok(Poly::one());
    }
    let row_entries: Vec<Vec<(usize, &Poly)>> = m
        .rows()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, p)| !p.is_zero())
                .collect()
        })
        .collect();
    let mut rows_of = alloc::vec![0u64; n];
    for (r, row) in row_entries.iter().enumerate() {
        for &(k, _) in row {
            rows_of[k] |= 1 << r;
        }
    }
    if rows_of.contains(&0) {
        return Ok(Poly::zero());
    }
    let order = row_order(&row_entries, &rows_of);

    // columns that must be used once step t has been expanded
    let mut required = alloc::vec![0u64; n];
    let mut done = 0u64;
    for (t, &r) in order.iter().enumerate() {
        done |= 1 << r;
        for (k, &rs) in rows_of.iter().enumerate() {
            if rs & !done == 0 {
                required[t] |= 1 << k;
            }
        }
    }

    let mut states: BTreeMap<u64, Poly> = BTreeMap::new();
    states.insert(0, Poly::one());
    for (t, &r) in order.iter().enumerate() {
        let mut next: BTreeMap<u64, Poly> = BTreeMap::new();
        for (mask, acc) in &states {
            for &(k, entry) in &row_entries[r] {
                let bit = 1u64 << k;
                if mask & bit != 0 {
                    continue;
                }
                let used = mask | bit;
                if used & required[t] != required[t] {
                    continue;
                }
                let mut term = acc * entry;
                // inversions: earlier steps that took a later column
                if signed && (mask >> k).count_ones() % 2 == 1 {
                    term = -term;
                }
                *next.entry(used).or_default() += &term;
            }
        }
        next.retain(|_, p| !p.is_zero());
        states = next;
        if states.is_empty() {
            return Ok(Poly::zero());
        }
    }
    let total = states.into_values().next().unwrap_or_default();
    Ok(if signed && odd_permutation(&order) {
        -total
    } else {
        total
    })
}

// Greedy visiting order: from each starting row, repeatedly take the row that
// leaves the fewest active columns (touched by a visited row, still needed by
// an unvisited one). The start with the smallest peak wins.
fn row_order(row_entries: &[Vec<(usize, &Poly)>], rows_of: &[u64]) -> Vec<usize> {
    let n = row_entries.len();
    let cols_of: Vec<u64> = row_entries
        .iter()
        .map(|row| row.iter().fold(0u64, |acc, &(k, _)| acc | 1 << k))
        .collect();
    let width = |visited: u64, touched: u64| {
        (0..n)
            .filter(|&k| touched >> k & 1 == 1 && rows_of[k] & !visited != 0)
            .count()
    };
    let mut best: Option<(usize, Vec<usize>)> = None;
    for start in 0..n {
        let mut order = alloc::vec![start];
        let mut visited = 1u64 << start;
        let mut touched = cols_of[start];
        let mut peak = width(visited, touched);
        while order.len() < n {
            let (w, r) = (0..n)
                .filter(|&r| visited >> r & 1 == 0)
                .map(|r| (width(visited | 1 << r, touched | cols_of[r]), r))
                .min()
                .unwrap();
            order.push(r);
            visited |= 1 << r;
            touched |= cols_of[r];
            peak = peak.max(w);
            if best.as_ref().is_some_and(|(p, _)| peak >= *p) {
                break;
            }
        }
        if order.len() == n && best.as_ref().is_none_or(|(p, _)| peak < *p) {
            best = Some((peak, order));
        }
    }
    best.map(|(_, o)| o).unwrap_or_default()
}

fn odd_permutation(p: &[usize]) -> bool {
    let mut seen = alloc::vec![false; p.len()];
    let mut odd = false;
    for i in 0..p.len() {
        let mut j = i;
        let mut len = 0;
        while !seen[j] {
            seen[j] = true;
            j = p[j];
            len += 1;
        }
        if len > 0 && len % 2 == 0 {
            odd = !odd;
        }
    }
    odd
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;
    use proptest::prelude::*;

    fn l() -> Poly {
        Poly::l()
    }
    fn d() -> Poly {
        Poly::d()
    }
    fn r() -> Poly {
        Poly::r()
    }

    fn matrix(rows: Vec<Vec<Poly>>) -> PolyMatrix {
        PolyMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn ring_examples() {
        assert_eq!((l() + d()) * (l() - d()), l() * l() - d() * d());
        assert!((r() + -r()).is_zero());
        let rd = r() + d();
        assert_eq!(
            &rd * &rd,
            r() * r() + Poly::term(2, Monomial::new(0, 1, 1)) + d() * d()
        );
        assert_eq!(
            rd.scale(&BigInt::from(3)),
            Poly::term(3, Monomial::new(0, 0, 1)) + Poly::term(3, Monomial::new(0, 1, 0))
        );
        assert!(rd.scale(&BigInt::from(0)).is_zero());
    }

    #[test]
    fn text_form() {
        let p = l() * l() + d() * d() + Poly::term(2, Monomial::new(0, 1, 1)) + r() * r();
        assert_eq!(p.to_string(), "R^2 + 2*D*R + D^2 + L^2");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!((Poly::one() - l()).to_string(), "1 - L");
        assert_eq!((-(l() * d() * r())).to_string(), "-L*D*R");
    }

    #[test]
    fn eval_ones_examples() {
        let p = l() * l() + d() * d() + Poly::term(2, Monomial::new(0, 1, 1)) + r() * r();
        assert_eq!(eval_ones(&p), BigInt::from(5));
        assert_eq!(eval_ones(&Poly::zero()), BigInt::from(0));
        assert_eq!(eval_ones(&(l() + d() + r())), BigInt::from(3));
    }

    #[test]
    fn determinant_examples() {
        let m = matrix(vec![vec![r(), l()], vec![-l(), r()]]);
        assert_eq!(determinant(&m).unwrap(), r() * r() + l() * l());
        let (p, q) = (l() + Poly::one(), d() - r());
        let m = matrix(vec![
            vec![p.clone(), Poly::zero()],
            vec![Poly::zero(), q.clone()],
        ]);
        assert_eq!(determinant(&m).unwrap(), p * q);
        let rd = r() + d();
        let m = matrix(vec![vec![rd.clone(), l()], vec![-l(), rd.clone()]]);
        assert_eq!(determinant(&m).unwrap(), &rd * &rd + l() * l());
    }

    #[test]
    fn permanent_examples() {
        let m = matrix(vec![vec![r(), l()], vec![l(), r()]]);
        assert_eq!(permanent(&m).unwrap(), r() * r() + l() * l());
        let rd = r() + d();
        let m = matrix(vec![vec![rd.clone(), l()], vec![l(), rd.clone()]]);
        assert_eq!(permanent(&m).unwrap(), &rd * &rd + l() * l());
        let m = matrix(vec![vec![l() + d() + r()]]);
        assert_eq!(permanent(&m).unwrap(), l() + d() + r());
        assert!(matches!(
            permanent(&PolyMatrix::zeros(15)),
            Err(Error::CapExceeded { index: 15, cap: 14 })
        ));
    }

    #[test]
    fn not_square() {
        assert!(matches!(
            PolyMatrix::from_rows(vec![vec![l(), d()], vec![r()]]),
            Err(Error::NotSquare { .. })
        ));
    }

    // n! permutation sum, kept apart from the subset expansion.
    fn leibniz(m: &PolyMatrix, signed: bool) -> Poly {
        fn go(
            m: &PolyMatrix,
            row: usize,
            used: &mut Vec<bool>,
            perm: &mut Vec<usize>,
            signed: bool,
            out: &mut Poly,
        ) {
            let n = m.order();
            if row == n {
                let mut inversions = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if perm[i] > perm[j] {
                            inversions += 1;
                        }
                    }
                }
                let mut t = Poly::one();
                for (i, &c) in perm.iter().enumerate() {
                    t = &t * m.get(i, c);
                }
                if signed && inversions % 2 == 1 {
                    t = -t;
                }
                *out += &t;
                return;
            }
            for c in 0..n {
                if !used[c] {
                    used[c] = true;
                    perm.push(c);
                    go(m, row + 1, used, perm, signed, out);
                    perm.pop();
                    used[c] = false;
                }
            }
        }
        let mut out = Poly::zero();
        go(
            m,
            0,
            &mut vec![false; m.order()],
            &mut Vec::new(),
            signed,
            &mut out,
        );
        out
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec((0u32..2, 0u32..2, 0u32..2, -2i64..=2), 0..3).prop_map(|ts| {
            Poly::from_terms(
                ts.into_iter()
                    .map(|(l, d, r, c)| (Monomial::new(l, d, r), BigInt::from(c))),
            )
        })
    }

    fn small_matrix(max: usize) -> impl Strategy<Value = PolyMatrix> {
        (1..=max).prop_flat_map(|n| {
            proptest::collection::vec(small_poly(), n * n)
                .prop_map(move |es| PolyMatrix { n, entries: es })
        })
    }

    fn abs_matrix(m: &PolyMatrix) -> PolyMatrix {
        PolyMatrix {
            n: m.n,
            entries: m
                .entries
                .iter()
                .map(|p| Poly::from_terms(p.terms().map(|(m, c)| (*m, c.abs()))))
                .collect(),
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn determinant_matches_permutation_sum(m in small_matrix(5)) {
            prop_assert_eq!(determinant(&m).unwrap(), leibniz(&m, true));
            prop_assert_eq!(permanent(&m).unwrap(), leibniz(&m, false));
        }

        #[test]
        fn permanent_of_nonnegative_is_nonnegative(m in small_matrix(5)) {
            let p = permanent(&abs_matrix(&m)).unwrap();
            prop_assert!(p.has_nonnegative_coefficients());
        }

        #[test]
        fn determinant_is_multiplicative_on_blocks(a in small_matrix(3), b in small_matrix(3)) {
            let lhs = determinant(&a.block_diag(&b)).unwrap();
            prop_assert_eq!(lhs, determinant(&a).unwrap() * determinant(&b).unwrap());
        }

        #[test]
        fn ring_axioms(p in small_poly(), q in small_poly(), s in small_poly()) {
            prop_assert_eq!(&(&p + &q) * &s, &(&p * &s) + &(&q * &s));
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert!((&p - &p).is_zero());
        }
    }
}
