use std::collections::BTreeSet;

use lozenge_core::kasteleyn::genfun;
use lozenge_core::lattice::{hnf, Basis, HnfForm};
use lozenge_core::tiling::{enumerate, is_valid, type_of};
use lozenge_core::typegeom::{all_types, binomial, dr_edge_length};
use lozenge_core::{Monomial, Orientation, Poly, Tiling};
use num_bigint::BigInt;
use proptest::prelude::*;

fn census(tilings: &[Tiling]) -> Poly {
    let mut p = Poly::zero();
    for t in tilings {
        let ty = type_of(t);
        p.add_term(
            Monomial::new(ty.l as u32, ty.d as u32, ty.r as u32),
            BigInt::from(1),
        );
    }
    p
}

fn words(h: &HnfForm) -> Vec<Tiling> {
    let n = h.index();
    (0..3usize.pow(n as u32))
        .filter_map(|mut code| {
            let word: Vec<Orientation> = (0..n)
                .map(|_| {
                    let o = Orientation::ALL[code % 3];
                    code /= 3;
                    o
                })
                .collect();
            is_valid(h, &word)
                .unwrap()
                .then(|| Tiling::new(*h, word).unwrap())
        })
        .collect()
}

fn basis(max_entry: i64, max_index: i64) -> impl Strategy<Value = Basis> {
    let e = -max_entry..=max_entry;
    (e.clone(), e.clone(), e.clone(), e)
        .prop_map(|(a1, a2, b1, b2)| Basis::from_columns(a1, a2, b1, b2))
        .prop_filter("index in range", move |b| {
            (1..=max_index).contains(&b.det().abs())
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn genfun_matches_every_word(b in basis(5, 7)) {
        let h = hnf(&b).unwrap();
        prop_assert_eq!(genfun(&b).unwrap(), census(&words(&h)));
    }

    #[test]
    fn enumeration_matches_every_word(b in basis(5, 7)) {
        let h = hnf(&b).unwrap();
        let mut all = words(&h);
        all.sort();
        prop_assert_eq!(enumerate(&h).unwrap(), all);
    }
}

#[test]
fn index_thirty_structure() {
    for a in (1..=30).filter(|a| 30 % a == 0) {
        for c in 0..a {
            let h = HnfForm::new(a, 30 / a, c).unwrap();
            let b = h.basis();
            let z = genfun(&b).unwrap();
            assert!(
                z.is_homogeneous(30) && z.has_nonnegative_coefficients(),
                "{h}"
            );
            let types: BTreeSet<Monomial> = all_types(&b)
                .unwrap()
                .into_iter()
                .map(|(_, t)| Monomial::new(t.l as u32, t.d as u32, t.r as u32))
                .collect();
            assert_eq!(
                z.terms().map(|(m, _)| *m).collect::<BTreeSet<_>>(),
                types,
                "{h}"
            );
            let d = dr_edge_length(&b);
            let step = 30 / d;
            for i in 0..=d {
                let m = Monomial::new(0, (i * step) as u32, ((d - i) * step) as u32);
                assert_eq!(z.coeff(m), BigInt::from(binomial(d, i)), "{h} at {m}");
            }
        }
    }
}
