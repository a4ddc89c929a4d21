//! Randomized properties at sizes beyond the exhaustive sweeps.

use proptest::prelude::*;
use shi_parking::cayley::{
    parking_function_of_tree, pollak, pollak_inverse, prufer_decode, prufer_encode, tree_of_parking_function,
    PruferCode,
};
use shi_parking::geometry::{feasible_interior, sign_vector_of_point, system_of_sign_vector};
use shi_parking::json::{canonical, pf_from_json, pf_to_json, region_from_json, region_to_json};
use shi_parking::pf::{check_by_simulation, check_by_sort};
use shi_parking::{
    pak_stanley_label, pak_stanley_label_of_point, phi, phi_inverse, psi, psi_inverse_point, Error, ParkingFunction,
    Point, Rational, Rational64,
};

/// Shuffles a sequence with `z_k <= k` at every position; every parking function is reachable.
fn parking_function(max_n: usize) -> impl Strategy<Value = ParkingFunction> {
    (1..=max_n)
        .prop_flat_map(|n| proptest::collection::vec(0..1000usize, n))
        .prop_map(|raw| raw.iter().enumerate().map(|(k, r)| 1 + r % (k + 1)).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|entries| ParkingFunction::new(entries).unwrap())
}

fn rational_point(n: usize) -> impl Strategy<Value = Point<Rational>> {
    proptest::collection::vec((-40i64..40, 1i64..9), n).prop_map(|parts| {
        Point::new(
            parts
                .into_iter()
                .map(|(p, q)| Rational::new(p.into(), q.into()))
                .collect(),
        )
    })
}

proptest! {
    #[test]
    fn recognizers_agree(seq in proptest::collection::vec(1i64..10, 1..10)) {
        let sim = check_by_simulation(&seq).unwrap();
        prop_assert_eq!(sim.success, check_by_sort(&seq).unwrap());
        if let Some(spots) = sim.assignment {
            let mut sorted = spots.clone();
            sorted.sort_unstable();
            prop_assert_eq!(sorted, (1..=seq.len()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn phi_inverts_phi_inverse(x in parking_function(8)) {
        let out = phi_inverse(&x).unwrap();
        prop_assert_eq!(phi(&out.graph), x.clone());
        prop_assert_eq!(out.trace.guard_activations, 0);
        let (sv, w) = psi(&out.graph).unwrap();
        prop_assert_eq!(sign_vector_of_point(w.point()).unwrap(), sv.clone());
        prop_assert_eq!(pak_stanley_label(&sv).unwrap(), x);
    }

    #[test]
    fn code_and_tree_round_trips(x in parking_function(9)) {
        prop_assert_eq!(pollak_inverse(&pollak(&x)).unwrap(), x.clone());
        prop_assert_eq!(parking_function_of_tree(&tree_of_parking_function(&x)).unwrap(), x);
    }

    #[test]
    fn prufer_round_trip(labels in (3usize..12).prop_flat_map(|nv| proptest::collection::vec(1..=nv, nv - 2).prop_map(move |l| (nv, l)))) {
        let (nv, labels) = labels;
        let code = PruferCode::new(nv, labels).unwrap();
        prop_assert_eq!(prufer_encode(&prufer_decode(&code)), code);
    }

    #[test]
    fn labels_of_points(p in (1usize..7).prop_flat_map(rational_point)) {
        match psi_inverse_point(&p) {
            Ok(g) => {
                let label = pak_stanley_label_of_point(&p).unwrap();
                prop_assert_eq!(phi(&g), label.clone());
                prop_assert!(check_by_sort(&label.entries().iter().map(|&e| e as i64).collect::<Vec<_>>()).unwrap());
                let sv = sign_vector_of_point(&p).unwrap();
                prop_assert!(feasible_interior(&system_of_sign_vector::<Rational>(&sv)).is_ok());
            }
            Err(e) => prop_assert!(matches!(e, Error::OnHyperplane { .. }), "{e}"),
        }
    }

    #[test]
    fn machine_rationals_agree_with_big(p in (1usize..6).prop_flat_map(rational_point)) {
        let small = Point::new(
            p.coords()
                .iter()
                .map(|c| Rational64::new(c.numer().try_into().unwrap(), c.denom().try_into().unwrap()))
                .collect(),
        );
        prop_assert_eq!(sign_vector_of_point(&small).ok(), sign_vector_of_point(&p).ok());
    }

    #[test]
    fn json_round_trips(x in parking_function(7)) {
        let text = canonical(&pf_to_json(&x));
        prop_assert_eq!(pf_from_json(&text).unwrap(), x.clone());
        let (sv, w) = psi(&phi_inverse(&x).unwrap().graph).unwrap();
        let region = canonical(&region_to_json(&sv, Some(&w)));
        prop_assert_eq!(region_from_json(&region).unwrap(), sv);
    }
}
