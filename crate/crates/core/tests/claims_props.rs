use idrad::checker::{evaluate_claims, ClaimId, ClaimStatus, Invariants, SimpleInjectivity};
use idrad::homology::{Certificate, ExtDim, Gorenstein, GorensteinVerdict};
use proptest::prelude::*;

fn ext_dim() -> impl Strategy<Value = ExtDim> {
    prop_oneof![
        Just(ExtDim::NegInfinity),
        (0usize..5).prop_map(ExtDim::finite),
        (0usize..5).prop_map(ExtDim::at_least),
        Just(ExtDim::Infinite {
            certificate: Certificate::PathCycle {
                cycle: vec!["x".into()],
                via: None,
            },
        }),
    ]
}

fn invariants() -> impl Strategy<Value = Invariants> {
    (
        ext_dim(),
        ext_dim(),
        ext_dim(),
        ext_dim(),
        proptest::collection::vec(ext_dim(), 1..4),
        proptest::collection::vec(ext_dim(), 1..4),
        ext_dim(),
        prop_oneof![
            Just(GorensteinVerdict::Gorenstein),
            Just(GorensteinVerdict::NotGorenstein),
            Just(GorensteinVerdict::Undetermined)
        ],
    )
        .prop_map(|(gldim, id_j, id_j2, id_jmodj2, pd_simples, id_simples, gor, verdict)| Invariants {
            gldim,
            id_j,
            id_j2,
            id_jmodj2,
            pd_simples,
            id_simples,
            gorenstein: Gorenstein {
                right: gor.clone(),
                left: gor,
                verdict,
            },
            simple_injectivity: vec![SimpleInjectivity {
                vertex: 1,
                by_envelope: true,
                by_ext: true,
                no_incoming_arrow: true,
                ext1_counts_arrows: true,
            }],
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn violations_need_determined_evidence(inv in invariants()) {
        for v in evaluate_claims(&inv) {
            if v.status == ClaimStatus::Violated {
                prop_assert!(v.evidence.iter().all(|e| e.value.is_determined()), "{:?}", v);
            }
        }
    }

    #[test]
    fn lower_bounds_never_confirm_equalities(inv in invariants()) {
        let verdicts = evaluate_claims(&inv);
        let c1 = verdicts.iter().find(|v| v.claim == ClaimId::C1).unwrap();
        let undetermined = !inv.gldim.is_determined() || !inv.id_j.is_determined();
        if undetermined {
            prop_assert_ne!(c1.status, ClaimStatus::Confirmed);
        }
        // determined values decide C1 by plain equality
        if !undetermined {
            let equal = inv.gldim.same_value(&inv.id_j);
            prop_assert_eq!(c1.status == ClaimStatus::Confirmed, equal);
            prop_assert_eq!(c1.status == ClaimStatus::Violated, !equal);
        }
    }

    #[test]
    fn every_claim_is_reported_once(inv in invariants()) {
        let claims: Vec<ClaimId> = evaluate_claims(&inv).iter().map(|v| v.claim).collect();
        prop_assert_eq!(claims, ClaimId::ALL.to_vec());
    }
}
