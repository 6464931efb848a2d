//! JSON forms of tilings and polynomials.

use anyhow::{anyhow, bail, ensure, Result};
use lozenge_core::heights::Fingerprint;
use lozenge_core::lattice::{hnf, Basis, HnfForm};
use lozenge_core::{Monomial, Poly, Tiling, TilingType};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HnfJson {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl From<HnfForm> for HnfJson {
    fn from(h: HnfForm) -> Self {
        HnfJson {
            a: h.a,
            b: h.b,
            c: h.c,
        }
    }
}

/// `{"basis":[[a1,b1],[a2,b2]],"hnf":{"a":…,"b":…,"c":…},"cells":"DRL…"}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilingJson {
    pub basis: [[i64; 2]; 2],
    pub hnf: HnfJson,
    pub cells: String,
}

pub fn basis_rows(basis: &Basis) -> [[i64; 2]; 2] {
    [[basis.a.0, basis.b.0], [basis.a.1, basis.b.1]]
}

pub fn basis_from_rows(rows: [[i64; 2]; 2]) -> Basis {
    Basis::from_columns(rows[0][0], rows[1][0], rows[0][1], rows[1][1])
}

pub fn tiling_to_json(basis: &Basis, tiling: &Tiling) -> TilingJson {
    TilingJson {
        basis: basis_rows(basis),
        hnf: (*tiling.hnf()).into(),
        cells: tiling.cells_string(),
    }
}

/// Parses and validates: the HNF must be that of the basis and the cells a
/// tiling of it.
pub fn tiling_from_json(j: &TilingJson) -> Result<(Basis, Tiling)> {
    let basis = basis_from_rows(j.basis);
    let h = hnf(&basis)?;
    ensure!(
        HnfJson::from(h) == j.hnf,
        "hnf {:?} does not match the basis, expected {h}",
        j.hnf
    );
    let cells = Tiling::parse_cells(&j.cells)
        .ok_or_else(|| anyhow!("cells must be a string over L, D, R"))?;
    Ok((basis, Tiling::new(h, cells)?))
}

pub fn read_tiling(text: &str) -> Result<(Basis, Tiling)> {
    tiling_from_json(&serde_json::from_str(text)?)
}

/// Integers that fit an `i64` are written as JSON numbers, larger ones as
/// decimal strings.
pub fn bigint_to_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(k) => json!(k),
        None => json!(n.to_string()),
    }
}

pub fn bigint_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| anyhow!("coefficient {n} is not an integer")),
        Value::String(s) => Ok(s.parse()?),
        _ => bail!("coefficient must be a number or a decimal string"),
    }
}

/// Sorted list of `{"l":…,"d":…,"r":…,"coeff":…}`.
pub fn poly_to_json(p: &Poly) -> Value {
    Value::Array(
        p.terms()
            .map(|(m, c)| json!({"l": m.l, "d": m.d, "r": m.r, "coeff": bigint_to_json(c)}))
            .collect(),
    )
}

pub fn poly_from_json(v: &Value) -> Result<Poly> {
    let terms = v
        .as_array()
        .ok_or_else(|| anyhow!("polynomial must be a list of terms"))?;
    let mut out = Poly::zero();
    let mut last: Option<Monomial> = None;
    for t in terms {
        let exp = |k: &str| -> Result<u32> {
            let e = t
                .get(k)
                .and_then(Value::as_u64)
                .ok_or_else(|| anyhow!("missing exponent {k}"))?;
            Ok(u32::try_from(e)?)
        };
        let m = Monomial::new(exp("l")?, exp("d")?, exp("r")?);
        ensure!(
            last.is_none_or(|p| p < m),
            "terms must be sorted and distinct"
        );
        last = Some(m);
        let c = bigint_from_json(t.get("coeff").ok_or_else(|| anyhow!("missing coeff"))?)?;
        ensure!(c != BigInt::from(0), "zero coefficient");
        out.add_term(m, c);
    }
    Ok(out)
}

pub fn fingerprint_json(f: Fingerprint) -> Value {
    json!([f.d1, f.d2])
}

pub fn type_json(t: TilingType) -> Value {
    json!({"l": t.l, "d": t.d, "r": t.r})
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiling_shape() {
        let basis = Basis::from_columns(2, 0, 0, 1);
        let t = Tiling::new(hnf(&basis).unwrap(), Tiling::parse_cells("DR").unwrap()).unwrap();
        let text = serde_json::to_string(&tiling_to_json(&basis, &t)).unwrap();
        assert_eq!(
            text,
            r#"{"basis":[[2,0],[0,1]],"hnf":{"a":2,"b":1,"c":0},"cells":"DR"}"#
        );
        assert_eq!(read_tiling(&text).unwrap(), (basis, t));
    }

    #[test]
    fn rejects_bad_tilings() {
        assert!(
            read_tiling(r#"{"basis":[[2,0],[0,1]],"hnf":{"a":2,"b":1,"c":0},"cells":"DL"}"#)
                .is_err()
        );
        assert!(
            read_tiling(r#"{"basis":[[2,0],[0,1]],"hnf":{"a":1,"b":2,"c":0},"cells":"DR"}"#)
                .is_err()
        );
        assert!(
            read_tiling(r#"{"basis":[[2,0],[0,1]],"hnf":{"a":2,"b":1,"c":0},"cells":"DRR"}"#)
                .is_err()
        );
        assert!(
            read_tiling(r#"{"basis":[[2,4],[1,2]],"hnf":{"a":2,"b":1,"c":0},"cells":"DR"}"#)
                .is_err()
        );
    }

    #[test]
    fn poly_shape() {
        let p = Poly::from_terms([
            (Monomial::new(0, 1, 1), BigInt::from(2)),
            (Monomial::new(2, 0, 0), BigInt::from(1)),
        ]);
        let v = poly_to_json(&p);
        assert_eq!(
            v.to_string(),
            r#"[{"l":0,"d":1,"r":1,"coeff":2},{"l":2,"d":0,"r":0,"coeff":1}]"#
        );
        assert_eq!(poly_from_json(&v).unwrap(), p);
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let q = Poly::term(big.clone(), Monomial::new(0, 0, 3));
        assert_eq!(poly_to_json(&q)[0]["coeff"], json!(big.to_string()));
        assert_eq!(poly_from_json(&poly_to_json(&q)).unwrap(), q);
    }
}
