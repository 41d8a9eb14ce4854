//! Classification of realization maps by bidegree.
//!
//! Each classifier is an ordered, total decision tree over exact integer
//! inequalities: every input receives exactly one verdict, and every
//! verdict names the statement that produced it. Nothing here computes a
//! homotopy or cohomology group; kernels are reported as symbolic labels.
//!
//! The classifiers cover four maps:
//! * the stable comparison/realization for the sphere spectrum,
//! * its unstable analogue for motivic spheres (the chart of region codes
//!   in [`crate::chart`] is drawn from this one),
//! * surjectivity and injectivity ranges for Stiefel varieties.

use serde::Serialize;
use std::fmt;

use crate::error::{Error, Result};

/// Ambient assumptions a verdict may depend on.
///
/// `beilinson_soule` asserts the vanishing of the relevant rational
/// motivic cohomology in positive stems for the ground field; it is the
/// caller's responsibility. Flipping it on can only upgrade verdicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Assumptions {
    pub beilinson_soule: bool,
}

impl Assumptions {
    pub fn with_beilinson_soule() -> Self {
        Assumptions { beilinson_soule: true }
    }
}

/// Symbolic description of the kernel of a comparison map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KernelLabel {
    Zero,
    /// The motivic cohomology group `H^degree(Spec k; Z(twist))`, as a
    /// label only.
    MotCoh { degree: i64, twist: i64 },
    /// A divisible kernel with no identification on record; `uniquely`
    /// records whether unique divisibility is known.
    Divisible { uniquely: bool },
}

impl fmt::Display for KernelLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KernelLabel::Zero => write!(f, "0"),
            KernelLabel::MotCoh { degree, twist } => {
                write!(f, "H^{degree}(Spec k; Z({twist}))")
            }
            KernelLabel::Divisible { uniquely: true } => write!(f, "uniquely divisible"),
            KernelLabel::Divisible { uniquely: false } => write!(f, "divisible, unidentified"),
        }
    }
}

/// The statement a verdict is read off from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Citation {
    #[serde(rename = "Thm 3.2")]
    Thm3_2,
    #[serde(rename = "Cor 3.3")]
    Cor3_3,
    #[serde(rename = "Cor 3.4")]
    Cor3_4,
    #[serde(rename = "Rmk 3.5")]
    Rmk3_5,
    #[serde(rename = "Rmk 3.8")]
    Rmk3_8,
    #[serde(rename = "Prop 4.1")]
    Prop4_1,
    #[serde(rename = "Prop 4.3")]
    Prop4_3,
    #[serde(rename = "Fig. 1")]
    Fig1,
    #[serde(rename = "Thm 4.4")]
    Thm4_4,
    #[serde(rename = "Thm 4.5")]
    Thm4_5,
    #[serde(rename = "Rmk after Thm 4.5")]
    RmkPost4_5,
}

impl fmt::Display for Citation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Citation::Thm3_2 => "Thm 3.2",
            Citation::Cor3_3 => "Cor 3.3",
            Citation::Cor3_4 => "Cor 3.4",
            Citation::Rmk3_5 => "Rmk 3.5",
            Citation::Rmk3_8 => "Rmk 3.8",
            Citation::Prop4_1 => "Prop 4.1",
            Citation::Prop4_3 => "Prop 4.3",
            Citation::Fig1 => "Fig. 1",
            Citation::Thm4_4 => "Thm 4.4",
            Citation::Thm4_5 => "Thm 4.5",
            Citation::RmkPost4_5 => "Rmk after Thm 4.5",
        };
        write!(f, "{s}")
    }
}

/// A hypothesis that failed, leaving an input outside the covered range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Hypothesis {
    /// The weight exceeds half the stem plus one.
    WeightTooLarge,
    /// Sphere indices below the connectivity floor (`x < 2` or `y < 2`).
    SphereTooSmall,
    /// Outside the suspension range (`d` too large).
    FreudenthalRangeExceeded,
    /// The stable comparison is not understood at this weight
    /// (`e - y > d - x + 2`).
    StableComparisonUnknown,
    /// `r > n - 2`.
    RankTooLarge,
    /// `d > 2n - 2r - 3`.
    DegreeTooLarge,
    /// The total degree is below the torsion range (`e + d < 2n`).
    StemTooSmall,
    /// The weight is below the isomorphism bound.
    WeightTooSmall,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Hypothesis::WeightTooLarge => "weight too large",
            Hypothesis::SphereTooSmall => "sphere too small",
            Hypothesis::FreudenthalRangeExceeded => "outside the suspension range",
            Hypothesis::StableComparisonUnknown => "stable comparison unknown",
            Hypothesis::RankTooLarge => "rank too large",
            Hypothesis::DegreeTooLarge => "degree too large",
            Hypothesis::StemTooSmall => "stem too small",
            Hypothesis::WeightTooSmall => "weight too small",
        };
        write!(f, "{s}")
    }
}

/// What a comparison map does in a given bidegree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum VerdictKind {
    /// The source group vanishes for dimensional reasons.
    ZeroSource,
    Isomorphism,
    /// Injective; nothing is asserted about the image.
    Injective,
    SplitSurjective { kernel: KernelLabel, target_torsion: bool },
    /// The target vanishes and the source is divisible with the given
    /// label; still split surjective, onto zero.
    TargetZeroDivisibleKernel { kernel: KernelLabel },
    /// The 0-stem, excluded from all completion statements.
    ExcludedZeroStem,
    /// Some hypothesis fails; `failed` lists every failing one, first
    /// failure first.
    NotCovered { failed: Vec<Hypothesis> },
}

/// A classification together with the statement it came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    #[serde(flatten)]
    pub kind: VerdictKind,
    pub citation: Citation,
}

impl Verdict {
    fn new(kind: VerdictKind, citation: Citation) -> Self {
        Verdict { kind, citation }
    }

    pub fn is_isomorphism(&self) -> bool {
        matches!(self.kind, VerdictKind::Isomorphism)
    }

    pub fn is_not_covered(&self) -> bool {
        matches!(self.kind, VerdictKind::NotCovered { .. })
    }

    /// The kernel label carried by the verdict, if any.
    pub fn kernel(&self) -> Option<KernelLabel> {
        match &self.kind {
            VerdictKind::Isomorphism => Some(KernelLabel::Zero),
            VerdictKind::SplitSurjective { kernel, .. }
            | VerdictKind::TargetZeroDivisibleKernel { kernel } => Some(*kernel),
            _ => None,
        }
    }

    /// Position in the refinement order `NotCovered < SplitSurjective <
    /// Isomorphism` (with `Injective` alongside the split verdicts).
    /// Used to check that assumptions never downgrade a verdict.
    pub fn strength(&self) -> u8 {
        match &self.kind {
            VerdictKind::NotCovered { .. } => 0,
            VerdictKind::SplitSurjective { .. }
            | VerdictKind::TargetZeroDivisibleKernel { .. }
            | VerdictKind::Injective => 1,
            VerdictKind::Isomorphism => 2,
            VerdictKind::ZeroSource | VerdictKind::ExcludedZeroStem => 0,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            VerdictKind::ZeroSource => write!(f, "source is zero")?,
            VerdictKind::Isomorphism => write!(f, "isomorphism")?,
            VerdictKind::Injective => write!(f, "injective")?,
            VerdictKind::SplitSurjective { kernel, target_torsion } => {
                write!(f, "split surjective, kernel {kernel}")?;
                if *target_torsion {
                    write!(f, ", target torsion")?;
                }
            }
            VerdictKind::TargetZeroDivisibleKernel { kernel } => {
                write!(f, "target is zero, kernel {kernel}")?;
            }
            VerdictKind::ExcludedZeroStem => write!(f, "0-stem, excluded")?,
            VerdictKind::NotCovered { failed } => {
                let parts: Vec<String> = failed.iter().map(|h| h.to_string()).collect();
                write!(f, "not covered ({})", parts.join("; "))?;
            }
        }
        write!(f, " [{}]", self.citation)
    }
}

/// Stabilization range test, stem-weight form: the map from the unstable
/// sphere `(a, b)` to the spectrum is an isomorphism on `pi_{a+s, b+w}`
/// when `b >= 2`, `a - b >= 2` and `s - w <= min(a-b-2, b-2)`.
pub fn freudenthal_stable(a: i64, b: i64, s: i64, w: i64) -> bool {
    b >= 2 && a - b >= 2 && s - w <= (a - b - 2).min(b - 2)
}

/// The same range test in coweight-weight coordinates: `x, y >= 2` and
/// `c <= min(x-2, y-2)`.
pub fn freudenthal_stable_coweight(x: i64, y: i64, c: i64) -> bool {
    x >= 2 && y >= 2 && c <= (x - 2).min(y - 2)
}

/// Classifies the stable realization map in stem-weight bidegree `(s, w)`.
///
/// The decision tree, in priority order:
/// 1. `s = 0`: excluded.
/// 2. `2w > s + 2`: not covered (the weight bound fails).
/// 3. `w >= -1`, `s != -1`: isomorphism, the kernel label vanishes.
/// 4. `s = -1`, `w >= 0`: isomorphism (both sides vanish).
/// 5. `s = -1` otherwise: split surjective, divisible kernel with no
///    identification on record.
/// 6. positive stem under the vanishing assumption: isomorphism.
/// 7. otherwise: split surjective with motivic-cohomology kernel label.
pub fn classify_stable_realization(s: i64, w: i64, asm: Assumptions) -> Verdict {
    if s == 0 {
        return Verdict::new(VerdictKind::ExcludedZeroStem, Citation::Cor3_4);
    }
    if 2 * w > s + 2 {
        return Verdict::new(
            VerdictKind::NotCovered { failed: vec![Hypothesis::WeightTooLarge] },
            Citation::Cor3_4,
        );
    }
    if w >= -1 && s != -1 {
        return Verdict::new(VerdictKind::Isomorphism, Citation::Rmk3_5);
    }
    if s == -1 {
        if w >= 0 {
            return Verdict::new(VerdictKind::Isomorphism, Citation::Cor3_3);
        }
        return Verdict::new(
            VerdictKind::SplitSurjective {
                kernel: KernelLabel::Divisible { uniquely: false },
                target_torsion: true,
            },
            Citation::Cor3_4,
        );
    }
    if asm.beilinson_soule && s >= 1 {
        return Verdict::new(VerdictKind::Isomorphism, Citation::Rmk3_5);
    }
    Verdict::new(
        VerdictKind::SplitSurjective {
            kernel: KernelLabel::MotCoh { degree: -s, twist: -w },
            target_torsion: true,
        },
        Citation::Cor3_4,
    )
}

/// Stable realization classified from coweight-weight coordinates
/// `(c, w)`; same tree as [`classify_stable_realization`] at
/// `(c + w, w)`, cited in the coweight form where the weight bound is
/// what decides.
pub fn classify_stable_realization_coweight(c: i64, w: i64, asm: Assumptions) -> Verdict {
    let mut v = classify_stable_realization(c + w, w, asm);
    if v.citation == Citation::Rmk3_5 {
        v.citation = Citation::Rmk3_8;
    }
    v
}

/// Classifies the realization map for the unstable motivic sphere with
/// cell structure `(x, y)` in degree `(d, e)` (coweight-weight style:
/// the map lives on `pi_{d + e*alpha}`).
///
/// The decision tree, in priority order:
/// 1. `x < 2` or `y < 2`: not covered.
/// 2. `d < x`: the source vanishes (negative coweight).
/// 3. `d > min(2x-2, x+y-2)`: outside the suspension range.
/// 4. `e - y > d - x + 2`: the stable comparison is unknown there.
/// 5. `d + e = x + y`: the 0-stem, excluded.
/// 6. `e >= y - 1` off the (-1)-stem: isomorphism.
/// 7. under the vanishing assumption, `d + e > x + y`: isomorphism.
/// 8. `d + e = x + y - 1`: target zero, divisible kernel, unidentified.
/// 9. `d + e < x + y - 1`: target zero, kernel labelled by motivic
///    cohomology.
/// 10. otherwise: split surjective with motivic-cohomology kernel label.
///
/// Step 6 skips the single corner `(d, e) = (x, y-1)`: that bidegree sits
/// on the (-1)-stem, where the kernel identification is withheld, and on
/// that stem the target vanishes while the source need not, so no
/// isomorphism claim is available there.
pub fn classify_sphere_unstable(x: i64, y: i64, d: i64, e: i64, asm: Assumptions) -> Verdict {
    if x < 2 || y < 2 {
        return Verdict::new(
            VerdictKind::NotCovered { failed: vec![Hypothesis::SphereTooSmall] },
            Citation::Prop4_3,
        );
    }
    if d < x {
        return Verdict::new(VerdictKind::ZeroSource, Citation::Fig1);
    }
    if d > (2 * x - 2).min(x + y - 2) {
        let mut failed = vec![Hypothesis::FreudenthalRangeExceeded];
        if e - y > d - x + 2 {
            failed.push(Hypothesis::StableComparisonUnknown);
        }
        return Verdict::new(VerdictKind::NotCovered { failed }, Citation::Prop4_1);
    }
    if e - y > d - x + 2 {
        return Verdict::new(
            VerdictKind::NotCovered { failed: vec![Hypothesis::StableComparisonUnknown] },
            Citation::Prop4_3,
        );
    }
    if d + e == x + y {
        return Verdict::new(VerdictKind::ExcludedZeroStem, Citation::Prop4_3);
    }
    if e >= y - 1 && d + e != x + y - 1 {
        return Verdict::new(VerdictKind::Isomorphism, Citation::Prop4_3);
    }
    if asm.beilinson_soule && d + e > x + y {
        return Verdict::new(VerdictKind::Isomorphism, Citation::Prop4_3);
    }
    if d + e == x + y - 1 {
        return Verdict::new(
            VerdictKind::TargetZeroDivisibleKernel {
                kernel: KernelLabel::Divisible { uniquely: false },
            },
            Citation::Prop4_3,
        );
    }
    if d + e < x + y - 1 {
        return Verdict::new(
            VerdictKind::TargetZeroDivisibleKernel {
                kernel: KernelLabel::MotCoh { degree: x + y - d - e, twist: y - e },
            },
            Citation::Prop4_3,
        );
    }
    Verdict::new(
        VerdictKind::SplitSurjective {
            kernel: KernelLabel::MotCoh { degree: x + y - d - e, twist: y - e },
            target_torsion: true,
        },
        Citation::Prop4_3,
    )
}

fn stiefel_parameters_ok(n: i64, r: i64) -> Result<()> {
    if n < 1 || r < 1 {
        return Err(Error::InvalidParameters(format!(
            "Stiefel indices must be positive, got n = {n}, r = {r}"
        )));
    }
    Ok(())
}

/// Surjectivity range for the realization map of the Stiefel variety with
/// parameters `(n, r)` in degree `(d, e)`.
///
/// All four inequalities `r <= n-2`, `d <= 2n-2r-3`, `e <= d+4-r`,
/// `2n <= e+d` must hold for the split surjection (uniquely divisible
/// kernel, torsion target); `n-1 <= e` upgrades it to an isomorphism,
/// relaxed to `min(n-1, 2n-d) <= e` under the vanishing assumption.
pub fn classify_stiefel_surjective(n: i64, r: i64, d: i64, e: i64, asm: Assumptions) -> Result<Verdict> {
    stiefel_parameters_ok(n, r)?;
    let mut failed = Vec::new();
    if r > n - 2 {
        failed.push(Hypothesis::RankTooLarge);
    }
    if d > 2 * n - 2 * r - 3 {
        failed.push(Hypothesis::DegreeTooLarge);
    }
    if e > d + 4 - r {
        failed.push(Hypothesis::WeightTooLarge);
    }
    if e + d < 2 * n {
        failed.push(Hypothesis::StemTooSmall);
    }
    if !failed.is_empty() {
        return Ok(Verdict::new(VerdictKind::NotCovered { failed }, Citation::Thm4_4));
    }
    if n - 1 <= e {
        return Ok(Verdict::new(VerdictKind::Isomorphism, Citation::Thm4_4));
    }
    if asm.beilinson_soule && (n - 1).min(2 * n - d) <= e {
        return Ok(Verdict::new(VerdictKind::Isomorphism, Citation::RmkPost4_5));
    }
    Ok(Verdict::new(
        VerdictKind::SplitSurjective {
            kernel: KernelLabel::Divisible { uniquely: true },
            target_torsion: true,
        },
        Citation::Thm4_4,
    ))
}

/// Injectivity range for the same realization map.
///
/// Requires `r <= n-2`, `d <= 2n-2r-3`, `e <= d+3`, `2n <= e+d` and
/// `n-1 <= e`, the last relaxed to `min(n-1, 2n-d) <= e` under the
/// vanishing assumption.
pub fn classify_stiefel_injective(n: i64, r: i64, d: i64, e: i64, asm: Assumptions) -> Result<Verdict> {
    stiefel_parameters_ok(n, r)?;
    let mut failed = Vec::new();
    if r > n - 2 {
        failed.push(Hypothesis::RankTooLarge);
    }
    if d > 2 * n - 2 * r - 3 {
        failed.push(Hypothesis::DegreeTooLarge);
    }
    if e > d + 3 {
        failed.push(Hypothesis::WeightTooLarge);
    }
    if e + d < 2 * n {
        failed.push(Hypothesis::StemTooSmall);
    }
    let weight_bound = if asm.beilinson_soule { (n - 1).min(2 * n - d) } else { n - 1 };
    let relaxed = asm.beilinson_soule && 2 * n - d < n - 1;
    if e < weight_bound {
        failed.push(Hypothesis::WeightTooSmall);
    }
    if !failed.is_empty() {
        return Ok(Verdict::new(VerdictKind::NotCovered { failed }, Citation::Thm4_5));
    }
    let citation = if relaxed && e < n - 1 { Citation::RmkPost4_5 } else { Citation::Thm4_5 };
    Ok(Verdict::new(VerdictKind::Injective, citation))
}

#[cfg(test)]
mod tests {
    use super::*;

    const PLAIN: Assumptions = Assumptions { beilinson_soule: false };
    const BS: Assumptions = Assumptions { beilinson_soule: true };

    #[test]
    fn freudenthal_examples() {
        assert!(freudenthal_stable(5, 2, 0, 0));
        assert!(!freudenthal_stable(4, 2, 1, 0));
        for w in -10..=10 {
            assert!(freudenthal_stable(4, 2, w, w));
        }
        assert!(!freudenthal_stable(3, 2, 0, 0));
        assert!(!freudenthal_stable(4, 1, 0, 0));
    }

    #[test]
    fn stable_tree() {
        assert!(classify_stable_realization(1, 0, PLAIN).is_isomorphism());

        let v = classify_stable_realization(3, -5, PLAIN);
        assert_eq!(
            v.kernel(),
            Some(KernelLabel::MotCoh { degree: -3, twist: 5 })
        );
        assert!(classify_stable_realization(3, -5, BS).is_isomorphism());

        let v = classify_stable_realization(2, 3, PLAIN);
        assert_eq!(
            v.kind,
            VerdictKind::NotCovered { failed: vec![Hypothesis::WeightTooLarge] }
        );

        assert_eq!(classify_stable_realization(0, 7, PLAIN).kind, VerdictKind::ExcludedZeroStem);

        // -1-stem: isomorphism at weight 0, unidentified divisible kernel below
        assert!(classify_stable_realization(-1, 0, PLAIN).is_isomorphism());
        let v = classify_stable_realization(-1, -1, PLAIN);
        assert_eq!(v.kernel(), Some(KernelLabel::Divisible { uniquely: false }));

        // negative stems keep the motivic cohomology label
        let v = classify_stable_realization(-2, -1, PLAIN);
        assert!(v.is_isomorphism());
        let v = classify_stable_realization(-2, -2, PLAIN);
        assert_eq!(v.kernel(), Some(KernelLabel::MotCoh { degree: 2, twist: 2 }));
        // the assumption only helps positive stems
        assert_eq!(classify_stable_realization(-2, -2, BS), v);
    }

    #[test]
    fn stable_coweight_wrapper() {
        let v = classify_stable_realization_coweight(1, 0, PLAIN);
        assert!(v.is_isomorphism());
        assert_eq!(v.citation, Citation::Rmk3_8);
        let w = classify_stable_realization(1, 0, PLAIN);
        assert_eq!(v.kind, w.kind);
    }

    #[test]
    fn unstable_tree_examples() {
        assert!(classify_sphere_unstable(8, 9, 11, 11, PLAIN).is_isomorphism());
        assert_eq!(classify_sphere_unstable(8, 9, 5, 5, PLAIN).kind, VerdictKind::ZeroSource);

        let v = classify_sphere_unstable(8, 9, 10, 3, PLAIN);
        assert_eq!(
            v.kind,
            VerdictKind::TargetZeroDivisibleKernel {
                kernel: KernelLabel::MotCoh { degree: 4, twist: 6 }
            }
        );

        assert_eq!(
            classify_sphere_unstable(8, 9, 17, 17, PLAIN).kind,
            VerdictKind::NotCovered { failed: vec![Hypothesis::FreudenthalRangeExceeded] }
        );
        assert_eq!(
            classify_sphere_unstable(8, 9, 8, 12, PLAIN).kind,
            VerdictKind::NotCovered { failed: vec![Hypothesis::StableComparisonUnknown] }
        );
        assert_eq!(
            classify_sphere_unstable(8, 9, 9, 8, PLAIN).kind,
            VerdictKind::ExcludedZeroStem
        );
        assert_eq!(
            classify_sphere_unstable(1, 9, 5, 5, PLAIN).kind,
            VerdictKind::NotCovered { failed: vec![Hypothesis::SphereTooSmall] }
        );
    }

    #[test]
    fn unstable_minus_one_stem_corner() {
        // (d, e) = (x, y-1) lies on the -1-stem: no isomorphism claim
        let v = classify_sphere_unstable(8, 9, 8, 8, PLAIN);
        assert_eq!(
            v.kind,
            VerdictKind::TargetZeroDivisibleKernel {
                kernel: KernelLabel::Divisible { uniquely: false }
            }
        );
        // one step to the right the isomorphism region starts
        assert!(classify_sphere_unstable(8, 9, 10, 8, PLAIN).is_isomorphism());
    }

    #[test]
    fn unstable_bs_triangle() {
        let v = classify_sphere_unstable(8, 9, 13, 6, PLAIN);
        assert!(matches!(v.kind, VerdictKind::SplitSurjective { .. }));
        assert!(classify_sphere_unstable(8, 9, 13, 6, BS).is_isomorphism());
        // on the 0-stem hypotenuse nothing changes
        assert_eq!(
            classify_sphere_unstable(8, 9, 14, 3, BS).kind,
            VerdictKind::ExcludedZeroStem
        );
    }

    #[test]
    fn stiefel_surjective_examples() {
        let v = classify_stiefel_surjective(10, 2, 13, 15, PLAIN).unwrap();
        assert!(v.is_isomorphism());

        let v = classify_stiefel_surjective(10, 2, 10, 9, PLAIN).unwrap();
        assert_eq!(
            v.kind,
            VerdictKind::NotCovered { failed: vec![Hypothesis::StemTooSmall] }
        );

        let v = classify_stiefel_surjective(5, 4, 0, 0, PLAIN).unwrap();
        match v.kind {
            VerdictKind::NotCovered { failed } => assert_eq!(failed[0], Hypothesis::RankTooLarge),
            other => panic!("expected NotCovered, got {other:?}"),
        }

        // split surjective without the isomorphism bound
        let v = classify_stiefel_surjective(10, 2, 13, 8, PLAIN).unwrap();
        assert_eq!(
            v.kind,
            VerdictKind::SplitSurjective {
                kernel: KernelLabel::Divisible { uniquely: true },
                target_torsion: true,
            }
        );

        assert!(classify_stiefel_surjective(0, 1, 0, 0, PLAIN).is_err());
    }

    #[test]
    fn stiefel_injective_examples() {
        assert_eq!(
            classify_stiefel_injective(10, 2, 12, 11, PLAIN).unwrap().kind,
            VerdictKind::Injective
        );
        assert_eq!(
            classify_stiefel_injective(23, 2, 22, 24, PLAIN).unwrap().kind,
            VerdictKind::Injective
        );
        let v = classify_stiefel_injective(10, 2, 14, 11, PLAIN).unwrap();
        match v.kind {
            VerdictKind::NotCovered { failed } => {
                assert_eq!(failed[0], Hypothesis::DegreeTooLarge)
            }
            other => panic!("expected NotCovered, got {other:?}"),
        }
        assert!(classify_stiefel_injective(10, 0, 0, 0, PLAIN).is_err());
    }

    #[test]
    fn stiefel_bs_relaxation() {
        // e between min(n-1, 2n-d) and n-1: only the assumption covers it
        let (n, r, d, e) = (10, 2, 13, 7);
        assert!(2 * n - d < n - 1 && e >= 2 * n - d && e < n - 1);
        let plain = classify_stiefel_injective(n, r, d, e, PLAIN).unwrap();
        assert!(plain.is_not_covered());
        let bs = classify_stiefel_injective(n, r, d, e, BS).unwrap();
        assert_eq!(bs.kind, VerdictKind::Injective);
        assert_eq!(bs.citation, Citation::RmkPost4_5);

        let plain = classify_stiefel_surjective(n, r, d, e, PLAIN).unwrap();
        assert!(matches!(plain.kind, VerdictKind::SplitSurjective { .. }));
        let bs = classify_stiefel_surjective(n, r, d, e, BS).unwrap();
        assert!(bs.is_isomorphism());
        assert_eq!(bs.citation, Citation::RmkPost4_5);
    }
}
