use core::fmt;

use crate::heights::Fingerprint;
use crate::lattice::HnfForm;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The basis columns are linearly dependent.
    RankDeficient,
    /// A cell sequence does not have one entry per fundamental-domain cell.
    LengthMismatch {
        expected: usize,
        found: usize,
    },
    /// The index exceeds a configured enumeration or matrix cap.
    CapExceeded {
        index: u64,
        cap: u64,
    },
    /// The height equations of a tiling are inconsistent.
    HeightNotWellDefined,
    /// A basis does not generate the lattice a tiling is periodic for.
    LatticeMismatch {
        expected: HnfForm,
        found: HnfForm,
    },
    UnrealizableFingerprint(Fingerprint),
    /// A type whose components do not sum to the index, or that has no
    /// integral fingerprint.
    ImpossibleType {
        l: u64,
        d: u64,
        r: u64,
    },
    /// The flip site does not match the tiling.
    StaleFlipSite,
    InvalidTiling,
    /// `i` outside `0..=d` in a necklace count.
    OutOfRange {
        d: u64,
        i: u64,
    },
    NotSquare {
        rows: usize,
        cols: usize,
    },
    /// The four-determinant combination has an odd coefficient.
    NonIntegralCombination,
    /// No enumerated tiling has the requested type.
    UnknownType {
        l: u64,
        d: u64,
        r: u64,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RankDeficient => f.write_str("rank-deficient lattice"),
            Error::LengthMismatch { expected, found } => {
                write!(f, "cell sequence has length {found}, expected {expected}")
            }
            Error::CapExceeded { index, cap } => {
                write!(f, "index {index} exceeds the cap of {cap}")
            }
            Error::HeightNotWellDefined => f.write_str("height not well-defined"),
            Error::LatticeMismatch { expected, found } => write!(
                f,
                "basis generates lattice {found} but the tiling is periodic for {expected}"
            ),
            Error::UnrealizableFingerprint(p) => {
                write!(f, "unrealizable fingerprint ({}, {})", p.d1, p.d2)
            }
            Error::ImpossibleType { l, d, r } => write!(f, "impossible type ({l}, {d}, {r})"),
            Error::StaleFlipSite => f.write_str("stale flip site"),
            Error::InvalidTiling => f.write_str("invalid tiling"),
            Error::OutOfRange { d, i } => write!(f, "bead count {i} outside 0..={d}"),
            Error::NotSquare { rows, cols } => write!(f, "matrix is {rows}x{cols}, not square"),
            Error::NonIntegralCombination => {
                f.write_str("determinant combination is not divisible by 2")
            }
            Error::UnknownType { l, d, r } => write!(f, "no tiling of type ({l}, {d}, {r})"),
        }
    }
}

impl core::error::Error for Error {}
