//! Property tests for the bidegree conversions and the classifiers: the
//! unstable verdicts factor through the stable ones, regions partition the
//! plane, and the two Stiefel condition sets differ exactly in their
//! weight bounds.

use proptest::prelude::*;

use stiefel_core::bidegree::{Bidegree, Convention};
use stiefel_core::chart::{chart, region_code};
use stiefel_core::classify::{
    classify_sphere_unstable, classify_stable_realization, classify_stable_realization_coweight,
    classify_stiefel_injective, classify_stiefel_surjective, Assumptions, Hypothesis, KernelLabel,
    Verdict, VerdictKind,
};

const PLAIN: Assumptions = Assumptions { beilinson_soule: false };
const BS: Assumptions = Assumptions { beilinson_soule: true };

#[test]
fn conversion_round_trip_exhaustive() {
    for s in -100..=100i64 {
        for w in -100..=100i64 {
            let b = Bidegree::stem_weight(s, w);
            let twice =
                b.convert(Convention::CoweightWeight).convert(Convention::StemWeight);
            assert_eq!(twice, b);
            let c = Bidegree::coweight_weight(s, w);
            assert_eq!(
                c.convert(Convention::StemWeight).convert(Convention::CoweightWeight),
                c
            );
        }
    }
}

/// Surjectivity class shared by the stable and unstable classifiers.
#[derive(Debug, PartialEq, Eq)]
enum MapClass {
    Excluded,
    Iso,
    Surjection,
}

fn map_class(v: &Verdict) -> Option<MapClass> {
    match &v.kind {
        VerdictKind::ExcludedZeroStem => Some(MapClass::Excluded),
        VerdictKind::Isomorphism => Some(MapClass::Iso),
        VerdictKind::SplitSurjective { .. } | VerdictKind::TargetZeroDivisibleKernel { .. } => {
            Some(MapClass::Surjection)
        }
        _ => None,
    }
}

proptest! {
    // wherever the unstable classifier reaches a verdict (not a hypothesis
    // failure or a vanishing source), it must agree with the stable
    // classifier at (s, w) = (d+e-x-y, e-y): same class, same kernel label
    #[test]
    fn unstable_factors_through_stable(
        x in 2i64..=12, y in 2i64..=12,
        d in -5i64..=30, e in -10i64..=30,
        bs in any::<bool>(),
    ) {
        let asm = Assumptions { beilinson_soule: bs };
        let unstable = classify_sphere_unstable(x, y, d, e, asm);
        if let Some(unstable_class) = map_class(&unstable) {
            let stable = classify_stable_realization(d + e - x - y, e - y, asm);
            let stable_class = map_class(&stable)
                .expect("the stable classifier covers every bidegree the unstable one reports on");
            prop_assert_eq!(unstable_class, stable_class);
            prop_assert_eq!(unstable.kernel(), stable.kernel());
        }
    }

    // the coweight entry point is the same classification
    #[test]
    fn stable_coweight_agrees(c in -40i64..=40, w in -40i64..=40, bs in any::<bool>()) {
        let asm = Assumptions { beilinson_soule: bs };
        let direct = classify_stable_realization(c + w, w, asm);
        let via_coweight = classify_stable_realization_coweight(c, w, asm);
        prop_assert_eq!(direct.kind, via_coweight.kind);
    }

    // the vanishing assumption never downgrades any classifier
    #[test]
    fn assumption_is_monotone(
        s in -40i64..=40, w in -40i64..=40,
        n in 1i64..=20, r in 1i64..=20, d in -5i64..=45, e in -5i64..=45,
    ) {
        let stable0 = classify_stable_realization(s, w, PLAIN);
        let stable1 = classify_stable_realization(s, w, BS);
        prop_assert!(stable1.strength() >= stable0.strength());

        let surj0 = classify_stiefel_surjective(n, r, d, e, PLAIN).unwrap();
        let surj1 = classify_stiefel_surjective(n, r, d, e, BS).unwrap();
        prop_assert!(surj1.strength() >= surj0.strength());

        let inj0 = classify_stiefel_injective(n, r, d, e, PLAIN).unwrap();
        let inj1 = classify_stiefel_injective(n, r, d, e, BS).unwrap();
        prop_assert!(inj1.strength() >= inj0.strength());
    }

    // the injectivity and surjectivity conditions differ exactly in the
    // weight upper bound: d+3 against d+4-r
    #[test]
    fn stiefel_condition_sets_interplay(
        n in 1i64..=24, r in 1i64..=12, d in 0i64..=45, e in 0i64..=45,
        bs in any::<bool>(),
    ) {
        let asm = Assumptions { beilinson_soule: bs };
        let inj = classify_stiefel_injective(n, r, d, e, asm).unwrap();
        if matches!(inj.kind, VerdictKind::Injective) {
            let surj = classify_stiefel_surjective(n, r, d, e, asm).unwrap();
            match surj.kind {
                VerdictKind::NotCovered { failed } => {
                    prop_assert_eq!(failed, vec![Hypothesis::WeightTooLarge]);
                    prop_assert!(e > d + 4 - r);
                }
                _ => prop_assert!(e <= d + 4 - r),
            }
        }
    }

    // a chart assigns every cell exactly one of the six region codes, and
    // cells agree with direct classification
    #[test]
    fn chart_partitions_grid(
        x in 2i64..=10, y in 2i64..=10,
        d0 in -3i64..=3, e0 in -3i64..=3,
        width in 0i64..=12, height in 0i64..=12,
        bs in any::<bool>(),
    ) {
        let asm = Assumptions { beilinson_soule: bs };
        let c = chart(x, y, (d0, d0 + width), (e0, e0 + height), asm).unwrap();
        let mut seen = 0u64;
        for (d, e, v) in c.iter_cells() {
            let code = region_code(v);
            prop_assert!(["Z", "ISO", "BS", "DIV", "S0", "S-1", "NC"].contains(&code));
            prop_assert_eq!(v, &classify_sphere_unstable(x, y, d, e, asm));
            seen += 1;
        }
        prop_assert_eq!(seen, ((width + 1) * (height + 1)) as u64);
        let tsv = c.to_tsv();
        prop_assert_eq!(tsv.lines().count() as i64, height + 1);
    }
}

#[test]
fn divisible_kernels_keep_their_flavor() {
    // the -1-stem reports divisibility without uniqueness, the Stiefel
    // surjection reports unique divisibility
    let stem = classify_stable_realization(-1, -3, PLAIN);
    assert_eq!(stem.kernel(), Some(KernelLabel::Divisible { uniquely: false }));
    let stiefel = classify_stiefel_surjective(10, 2, 13, 8, PLAIN).unwrap();
    assert_eq!(stiefel.kernel(), Some(KernelLabel::Divisible { uniquely: true }));
}

#[test]
fn verdict_json_shape() {
    let v = classify_stable_realization(3, -5, PLAIN);
    let json = serde_json::to_value(&v).unwrap();
    assert_eq!(json["verdict"], "split_surjective");
    assert_eq!(json["citation"], "Cor 3.4");
    assert_eq!(json["kernel"]["mot_coh"]["degree"], -3);
    assert_eq!(json["kernel"]["mot_coh"]["twist"], 5);

    let v = classify_sphere_unstable(8, 9, 5, 5, PLAIN);
    let json = serde_json::to_value(&v).unwrap();
    assert_eq!(json["verdict"], "zero_source");
}
