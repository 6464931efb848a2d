//! Command-line front end for `lozenge-core`: argument parsing helpers, JSON
//! formats, SVG rendering and the `verify` cross-check harness.

pub mod commands;
pub mod json;
pub mod svg;
pub mod verify;

use lozenge_core::heights::Fingerprint;
use lozenge_core::lattice::Basis;

fn integers<const N: usize>(s: &str) -> Result<[i64; N], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(format!(
            "expected {N} comma-separated integers, got {:?}",
            s
        ));
    }
    let mut out = [0; N];
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = p.parse().map_err(|_| format!("not an integer: {p:?}"))?;
    }
    Ok(out)
}

/// `a1,a2,b1,b2`, the two basis vectors one after the other.
pub fn parse_basis(s: &str) -> Result<Basis, String> {
    let [a1, a2, b1, b2] = integers::<4>(s)?;
    Ok(Basis::from_columns(a1, a2, b1, b2))
}

/// `d1,d2`
pub fn parse_fingerprint(s: &str) -> Result<Fingerprint, String> {
    let [d1, d2] = integers::<2>(s)?;
    Ok(Fingerprint::new(d1, d2))
}
