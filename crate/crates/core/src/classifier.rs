//! Irreducibility of tensor products `V ⊗ W` of `A_n`-irreducibles in
//! characteristics 2 and 3.
//!
//! Outcomes:
//! - `Trivial`: one factor is one-dimensional.
//! - `Irreducible`: either `E^λ_± ⊗ E^{(n-1,1)}` with `λ` a split JS partition
//!   and `p ∤ n`, or the single exceptional pair `E^{(4,1,1)}_+ ⊗ E^{(4,1,1)}_-`
//!   at `p = 3`.
//! - `BasicSpinOpen`: `p = 2`, one factor is the basic spin label, at least
//!   one factor splits, and the normal-node necessary condition holds.
//!   Irreducibility is not decided here.
//! - `NotIrreducible`: everything else.

use rayon::prelude::*;
use serde::Serialize;

use crate::alternating::{self, AltLabel, Variant};
use crate::branching;
use crate::error::{Error, Result};
use crate::mullineux;
use crate::partition::{basic_spin, Partition};

/// Largest `n` accepted by [`classify_all`].
pub const SCAN_LIMIT: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Verdict {
    Trivial,
    NotIrreducible,
    Irreducible,
    BasicSpinOpen,
}

impl Verdict {
    /// Short token used by `--only` filters.
    pub fn token(self) -> &'static str {
        match self {
            Verdict::Trivial => "trivial",
            Verdict::NotIrreducible => "notirreducible",
            Verdict::Irreducible => "irreducible",
            Verdict::BasicSpinOpen => "open",
        }
    }

    pub fn from_token(token: &str) -> Option<Verdict> {
        [
            Verdict::Trivial,
            Verdict::NotIrreducible,
            Verdict::Irreducible,
            Verdict::BasicSpinOpen,
        ]
        .into_iter()
        .find(|v| v.token() == token.to_ascii_lowercase())
    }
}

/// The result a verdict rests on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Citation {
    /// One factor is the trivial or the sign module.
    DimensionOne,
    /// Two non-split factors at `p = 2`: an irreducible symmetric-group
    /// product would be a split `D^ν`, so the restriction is reducible.
    NonsplitPairChar2,
    /// Two non-split factors at `p = 3`: no non-trivial irreducible products
    /// for symmetric groups.
    NonsplitPairChar3,
    /// `E^λ_± ⊗ E^{(n-1,1)}` at `p = 2`: irreducible iff `n` odd and `λ` JS.
    SplitNaturalChar2,
    /// `E^λ_± ⊗ E^{(n-1,1)}` at `p = 3`: irreducible iff `λ` JS and `3 ∤ n`.
    SplitNaturalChar3,
    /// Split times non-split at `p = 2` needs `(n-1,1)` or the basic spin
    /// label among the factors.
    SplitNonsplitChar2,
    /// Split times non-split at `p = 3` needs `(n-1,1)` or its Mullineux
    /// image.
    SplitNonsplitChar3,
    /// Two split factors at `p = 2` need the basic spin label and
    /// `n ≢ 2 (mod 4)`.
    DoubleSplitChar2,
    /// Two split factors at `p = 3`: only `E^{(4,1,1)}_+ ⊗ E^{(4,1,1)}_-`.
    DoubleSplitChar3,
    /// Normal-node bound for basic spin times a non-split factor.
    BasicSpinNonsplitBound,
    /// Normal-node bound for basic spin times a split factor.
    BasicSpinDoubleSplitBound,
    /// JS partitions via the closed-form criterion.
    JsCriterion,
}

impl Citation {
    pub fn tag(self) -> &'static str {
        match self {
            Citation::DimensionOne => "dimension-one",
            Citation::NonsplitPairChar2 => "nonsplit-pair-char2",
            Citation::NonsplitPairChar3 => "nonsplit-pair-char3",
            Citation::SplitNaturalChar2 => "split-natural-char2",
            Citation::SplitNaturalChar3 => "split-natural-char3",
            Citation::SplitNonsplitChar2 => "split-nonsplit-char2",
            Citation::SplitNonsplitChar3 => "split-nonsplit-char3",
            Citation::DoubleSplitChar2 => "double-split-char2",
            Citation::DoubleSplitChar3 => "double-split-char3",
            Citation::BasicSpinNonsplitBound => "basic-spin-nonsplit-bound",
            Citation::BasicSpinDoubleSplitBound => "basic-spin-double-split-bound",
            Citation::JsCriterion => "js-criterion",
        }
    }
}

impl std::fmt::Display for Citation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BasicSpinSubcase {
    SplitNonSplit,
    BothSplit,
}

/// Necessary conditions for `E^{β_n} ⊗ E^λ` (in some variants) to be
/// irreducible at `p = 2`. Only the normal-node bound is decisive; the
/// height ranges describe where a product `D^ν` would have to live.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasicSpinReport {
    pub subcase: BasicSpinSubcase,
    /// The partition paired with `β_n`.
    pub other: Partition,
    pub normal_node_count: usize,
    pub bound: usize,
    pub passes: bool,
    /// `h(ν)` is at most this for any irreducible product `E^ν(_±)`.
    pub product_height_max: usize,
    /// `h(λ) ≤ 2 h(ν)` gives `h(ν) ≥ ⌈h(λ)/2⌉`.
    pub product_height_min: usize,
}

/// Height bound for a composition factor `D^ν` of `D^λ ⊗ D^{β_n}` whose
/// multiplicity is `2^i b` with `b` odd: `h(ν) ≤ 4i + 2` for odd `n`, and
/// `h(ν) ≤ 4i + 4` for even `n`.
pub fn spin_multiplicity_height_bound(n: usize, two_adic_exponent: usize) -> usize {
    if n % 2 == 1 {
        4 * two_adic_exponent + 2
    } else {
        4 * two_adic_exponent + 4
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub product: Option<AltLabel>,
    /// For `p = 3` products, the other member of `{ν, ν^M}`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mullineux_partner: Option<Partition>,
    pub citations: Vec<Citation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<BasicSpinReport>,
}

impl Classification {
    fn simple(verdict: Verdict, citations: Vec<Citation>) -> Self {
        Classification {
            verdict,
            product: None,
            mullineux_partner: None,
            citations,
            report: None,
        }
    }
}

fn split_js_checked(lambda: &Partition, p: usize) -> Result<()> {
    if !lambda.is_p_regular(p) {
        return Err(Error::IrregularInput {
            partition: lambda.clone(),
            p,
        });
    }
    if !alternating::splits(lambda, p)? || !branching::is_js(lambda, p)? {
        return Err(Error::PreconditionViolated(format!(
            "{lambda} is not a split JS partition at p = {p}"
        )));
    }
    Ok(())
}

/// `(λ ∖ A) ∪ B` with `A` the top removable and `B` the second bottom
/// addable node of `λ`: the label of `E^λ_± ⊗ E^{(n-1,1)}` when that product
/// is irreducible.
///
/// Requires `λ` split and JS; `p ∤ n` is left to the caller, so the node
/// arithmetic can be inspected on its own.
pub fn natural_product_label(lambda: &Partition, p: usize) -> Result<Partition> {
    split_js_checked(lambda, p)?;
    let top = lambda.removable_nodes()[0];
    let addable = lambda.addable_nodes();
    let second_bottom = addable[addable.len() - 2];
    let nu = remove_then_add(lambda, top, second_bottom)?;
    if !nu.is_p_regular(p) {
        return Err(Error::IrregularResult { partition: nu, p });
    }
    Ok(nu)
}

/// `(λ ∖ A) ∪ C` with `C` the bottom addable node; at `p = 3` this is the
/// Mullineux partner of [`natural_product_label`].
pub fn natural_product_partner(lambda: &Partition, p: usize) -> Result<Partition> {
    split_js_checked(lambda, p)?;
    let top = lambda.removable_nodes()[0];
    let bottom = *lambda
        .addable_nodes()
        .last()
        .expect("always one addable node");
    let nu = remove_then_add(lambda, top, bottom)?;
    if !nu.is_p_regular(p) {
        return Err(Error::IrregularResult { partition: nu, p });
    }
    Ok(nu)
}

fn remove_then_add(
    lambda: &Partition,
    remove: crate::partition::Node,
    add: crate::partition::Node,
) -> Result<Partition> {
    lambda
        .remove_node(remove)
        .and_then(|smaller| smaller.add_node(add))
        .ok_or_else(|| Error::Internal(format!("cannot move {remove} to {add} in {lambda}")))
}

/// `(n/2 - j, n/2 - j - 1, j + 1, j)` for `n ≡ 2 (mod 4)` and
/// `0 ≤ j ≤ (n - 6)/4`: the labels of irreducible products of non-trivial
/// `D^λ ⊗ D^μ` at `p = 2`.
pub fn char2_symmetric_product_family(n: usize, j: usize) -> Result<Partition> {
    if n < 6 || n % 4 != 2 {
        return Err(Error::OutOfRange(format!(
            "n = {n} is not 2 mod 4 with n >= 6"
        )));
    }
    if j > (n - 6) / 4 {
        return Err(Error::OutOfRange(format!(
            "j = {j} exceeds (n-6)/4 = {}",
            (n - 6) / 4
        )));
    }
    let half = n / 2;
    Partition::from_row_lengths(vec![half - j, half - j - 1, j + 1, j])
}

fn normalise(label: &AltLabel, n: usize, p: usize) -> Result<AltLabel> {
    if label.size() != n {
        return Err(Error::OutOfRange(format!(
            "label {label} has size {}, expected n = {n}",
            label.size()
        )));
    }
    if !label.partition.is_p_regular(p) {
        return Err(Error::IrregularInput {
            partition: label.partition.clone(),
            p,
        });
    }
    AltLabel::new(label.partition.clone(), label.variant, p)
}

/// Decides irreducibility of `V ⊗ W` for `p ∈ {2, 3}` and `n ≥ 5`.
pub fn classify(p: usize, n: usize, v: &AltLabel, w: &AltLabel) -> Result<Classification> {
    if p != 2 && p != 3 {
        return Err(Error::UnsupportedCharacteristic(p));
    }
    if n < 5 {
        return Err(Error::OutOfRange(format!(
            "classification needs n >= 5, got {n}"
        )));
    }
    if v.size() != w.size() {
        return Err(Error::SizeMismatch {
            left: v.partition.clone(),
            left_size: v.size(),
            right: w.partition.clone(),
            right_size: w.size(),
        });
    }
    let v = normalise(v, n, p)?;
    let w = normalise(w, n, p)?;

    if alternating::is_dim_one(&v.partition, p)? || alternating::is_dim_one(&w.partition, p)? {
        return Ok(Classification::simple(
            Verdict::Trivial,
            vec![Citation::DimensionOne],
        ));
    }

    match (v.is_split(), w.is_split()) {
        (false, false) => Ok(Classification::simple(
            Verdict::NotIrreducible,
            vec![if p == 2 {
                Citation::NonsplitPairChar2
            } else {
                Citation::NonsplitPairChar3
            }],
        )),
        (true, false) => split_nonsplit(p, n, &v.partition, &w.partition),
        (false, true) => split_nonsplit(p, n, &w.partition, &v.partition),
        (true, true) => double_split(p, n, &v, &w),
    }
}

fn split_nonsplit(
    p: usize,
    n: usize,
    split: &Partition,
    other: &Partition,
) -> Result<Classification> {
    let natural = Partition::new(vec![n - 1, 1])?;
    let natural_image = mullineux::mullineux(&natural, p)?;
    if *other == natural || *other == natural_image {
        return split_times_natural(p, n, split);
    }
    if p == 2 {
        let spin = basic_spin(n);
        if *split == spin || *other == spin {
            let partner = if *split == spin { other } else { split };
            let report = basic_spin_report(BasicSpinSubcase::SplitNonSplit, n, partner)?;
            let mut citations = vec![
                Citation::SplitNonsplitChar2,
                Citation::BasicSpinNonsplitBound,
            ];
            citations.sort();
            return Ok(open_or_not(report, citations));
        }
        return Ok(Classification::simple(
            Verdict::NotIrreducible,
            vec![Citation::SplitNonsplitChar2],
        ));
    }
    Ok(Classification::simple(
        Verdict::NotIrreducible,
        vec![Citation::SplitNonsplitChar3],
    ))
}

fn split_times_natural(p: usize, n: usize, lambda: &Partition) -> Result<Classification> {
    let citation = if p == 2 {
        Citation::SplitNaturalChar2
    } else {
        Citation::SplitNaturalChar3
    };
    let js = branching::is_js(lambda, p)?;
    if !js || n.is_multiple_of(p) {
        let mut citations = vec![citation];
        if !js {
            citations.push(Citation::JsCriterion);
        }
        return Ok(Classification::simple(Verdict::NotIrreducible, citations));
    }
    let nu = natural_product_label(lambda, p)?;
    if alternating::splits(&nu, p)? {
        return Err(Error::Internal(format!(
            "product label {nu} of {lambda} splits at p = {p}"
        )));
    }
    let image = mullineux::mullineux(&nu, p)?;
    let (canonical, partner) = if image > nu {
        (image, Some(nu))
    } else if image < nu {
        (nu, Some(image))
    } else {
        (nu, None)
    };
    Ok(Classification {
        verdict: Verdict::Irreducible,
        product: Some(AltLabel {
            partition: canonical,
            variant: Variant::Whole,
        }),
        mullineux_partner: partner,
        citations: vec![citation, Citation::JsCriterion],
        report: None,
    })
}

fn double_split(p: usize, n: usize, v: &AltLabel, w: &AltLabel) -> Result<Classification> {
    if p == 3 {
        let exceptional = Partition::new(vec![4, 1, 1])?;
        if n == 6
            && v.partition == exceptional
            && w.partition == exceptional
            && v.variant != w.variant
        {
            let product = Partition::new(vec![4, 2])?;
            let label = AltLabel::new(product, Variant::Whole, p)?;
            return Ok(Classification {
                verdict: Verdict::Irreducible,
                product: Some(label),
                mullineux_partner: None,
                citations: vec![Citation::DoubleSplitChar3],
                report: None,
            });
        }
        return Ok(Classification::simple(
            Verdict::NotIrreducible,
            vec![Citation::DoubleSplitChar3],
        ));
    }
    let spin = basic_spin(n);
    if v.partition == spin || w.partition == spin {
        let partner = if v.partition == spin {
            &w.partition
        } else {
            &v.partition
        };
        let report = basic_spin_report(BasicSpinSubcase::BothSplit, n, partner)?;
        return Ok(open_or_not(
            report,
            vec![
                Citation::DoubleSplitChar2,
                Citation::BasicSpinDoubleSplitBound,
            ],
        ));
    }
    Ok(Classification::simple(
        Verdict::NotIrreducible,
        vec![Citation::DoubleSplitChar2],
    ))
}

fn basic_spin_report(
    subcase: BasicSpinSubcase,
    n: usize,
    other: &Partition,
) -> Result<BasicSpinReport> {
    let normal_node_count = branching::normal_count(other, 2)?;
    let odd = n % 2 == 1;
    let (bound, exponent) = match subcase {
        // D^λ ⊗ D^{β_n} ~ D^ν | D^ν
        BasicSpinSubcase::SplitNonSplit => (if odd { 2 } else { 3 }, 1),
        // the loosest case is D^ν four times over
        BasicSpinSubcase::BothSplit => (if odd { 3 } else { 4 }, 2),
    };
    Ok(BasicSpinReport {
        subcase,
        other: other.clone(),
        normal_node_count,
        bound,
        passes: normal_node_count <= bound,
        product_height_max: spin_multiplicity_height_bound(n, exponent),
        product_height_min: other.height().div_ceil(2),
    })
}

fn open_or_not(report: BasicSpinReport, citations: Vec<Citation>) -> Classification {
    let verdict = if report.passes {
        Verdict::BasicSpinOpen
    } else {
        Verdict::NotIrreducible
    };
    Classification {
        verdict,
        product: None,
        mullineux_partner: None,
        citations,
        report: Some(report),
    }
}

/// One row of a scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub p: usize,
    pub n: usize,
    pub lhs: AltLabel,
    pub rhs: AltLabel,
    #[serde(flatten)]
    pub classification: Classification,
}

/// Classifies every unordered pair of labels (including equal pairs), in
/// the order of [`alternating::all_labels`].
pub fn classify_all(p: usize, n: usize) -> Result<Vec<ScanRow>> {
    if p != 2 && p != 3 {
        return Err(Error::UnsupportedCharacteristic(p));
    }
    if !(5..=SCAN_LIMIT).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "scan needs 5 <= n <= {SCAN_LIMIT}, got {n}"
        )));
    }
    let labels = alternating::all_labels(n, p)?;
    let pairs: Vec<(usize, usize)> = (0..labels.len())
        .flat_map(|i| (i..labels.len()).map(move |j| (i, j)))
        .collect();
    pairs
        .par_iter()
        .map(|&(i, j)| {
            let (lhs, rhs) = (&labels[i], &labels[j]);
            classify(p, n, lhs, rhs).map(|classification| ScanRow {
                p,
                n,
                lhs: lhs.clone(),
                rhs: rhs.clone(),
                classification,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn run(p: usize, n: usize, lhs: &str, rhs: &str) -> Classification {
        let v = AltLabel::parse(lhs, p).unwrap();
        let w = AltLabel::parse(rhs, p).unwrap();
        classify(p, n, &v, &w).unwrap()
    }

    #[test]
    fn natural_product_examples() {
        assert_eq!(
            natural_product_label(&part("5,3,1"), 2).unwrap(),
            part("4,3,2")
        );
        assert_eq!(
            natural_product_label(&part("4,1,1"), 3).unwrap(),
            part("3,2,1")
        );
        assert!(matches!(
            natural_product_label(&part("5,3"), 2),
            Err(Error::IrregularResult { .. })
        ));
        assert!(matches!(
            natural_product_label(&part("8,1"), 2),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn family_examples() {
        assert_eq!(char2_symmetric_product_family(6, 0).unwrap(), part("3,2,1"));
        assert_eq!(
            char2_symmetric_product_family(10, 0).unwrap(),
            part("5,4,1")
        );
        assert_eq!(
            char2_symmetric_product_family(10, 1).unwrap(),
            part("4,3,2,1")
        );
        assert!(char2_symmetric_product_family(10, 2).is_err());
        assert!(char2_symmetric_product_family(8, 0).is_err());
    }

    #[test]
    fn split_times_natural_char2() {
        let c = run(2, 9, "5,3,1+", "8,1");
        assert_eq!(c.verdict, Verdict::Irreducible);
        assert_eq!(c.product.unwrap().to_string(), "4,3,2");
        assert!(c.citations.contains(&Citation::SplitNaturalChar2));
        assert_eq!(c.mullineux_partner, None);
    }

    #[test]
    fn double_split_char3() {
        let c = run(3, 6, "4,1,1+", "4,1,1-");
        assert_eq!(c.verdict, Verdict::Irreducible);
        assert_eq!(c.product.unwrap().partition, part("4,2"));
        assert_eq!(
            run(3, 6, "4,1,1+", "4,1,1+").verdict,
            Verdict::NotIrreducible
        );
        assert_eq!(
            run(3, 6, "4,1,1-", "4,1,1-").verdict,
            Verdict::NotIrreducible
        );
    }

    #[test]
    fn split_times_natural_char3_divisible() {
        assert_eq!(run(3, 6, "4,1,1+", "5,1").verdict, Verdict::NotIrreducible);
    }

    #[test]
    fn basic_spin_cases() {
        let c = run(2, 8, "5,3+", "5,2,1");
        assert_eq!(c.verdict, Verdict::BasicSpinOpen);
        let report = c.report.unwrap();
        assert!(report.passes);
        assert_eq!(report.bound, 3);
        assert_eq!(report.subcase, BasicSpinSubcase::SplitNonSplit);

        let c = run(2, 9, "5,4+", "4,3,2");
        assert_eq!(c.verdict, Verdict::NotIrreducible);
        let report = c.report.unwrap();
        assert_eq!((report.normal_node_count, report.bound), (3, 2));
        assert!(!report.passes);

        assert_eq!(run(2, 9, "5,4+", "8,1").verdict, Verdict::NotIrreducible);
    }

    #[test]
    fn trivial() {
        assert_eq!(run(3, 7, "7", "5,2").verdict, Verdict::Trivial);
        assert_eq!(run(2, 7, "5,2", "7").verdict, Verdict::Trivial);
    }

    #[test]
    fn argument_errors() {
        let v = AltLabel::parse("5,3,1+", 2).unwrap();
        let w = AltLabel::parse("8,1", 2).unwrap();
        assert_eq!(
            classify(5, 9, &v, &w),
            Err(Error::UnsupportedCharacteristic(5))
        );
        assert!(matches!(classify(2, 10, &v, &w), Err(Error::OutOfRange(_))));
        let w10 = AltLabel::parse("9,1", 2).unwrap();
        assert!(matches!(
            classify(2, 9, &v, &w10),
            Err(Error::SizeMismatch { .. })
        ));
        let bad = AltLabel {
            partition: part("8,1"),
            variant: Variant::Plus,
        };
        assert!(matches!(
            classify(2, 9, &v, &bad),
            Err(Error::VariantInconsistent { .. })
        ));
        let small = AltLabel::parse("4", 2).unwrap();
        assert!(matches!(
            classify(2, 4, &small, &small),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn symmetric_in_arguments() {
        for (p, n) in [(2, 9), (3, 7), (2, 8)] {
            let labels = alternating::all_labels(n, p).unwrap();
            for v in &labels {
                for w in &labels {
                    let a = classify(p, n, v, w).unwrap();
                    let b = classify(p, n, w, v).unwrap();
                    assert_eq!(a.verdict, b.verdict, "{v} x {w}");
                    assert_eq!(a.product, b.product);
                }
            }
        }
    }

    #[test]
    fn scan_small() {
        let rows = classify_all(3, 6).unwrap();
        let irreducible: Vec<_> = rows
            .iter()
            .filter(|r| r.classification.verdict == Verdict::Irreducible)
            .collect();
        assert_eq!(irreducible.len(), 1);
        assert_eq!(irreducible[0].lhs.to_string(), "4,1,1+");
        assert_eq!(irreducible[0].rhs.to_string(), "4,1,1-");
        assert!(classify_all(5, 6).is_err());
        assert!(classify_all(2, 4).is_err());
    }

    #[test]
    fn verdict_tokens() {
        for v in [
            Verdict::Trivial,
            Verdict::NotIrreducible,
            Verdict::Irreducible,
            Verdict::BasicSpinOpen,
        ] {
            assert_eq!(Verdict::from_token(v.token()), Some(v));
        }
        assert_eq!(Verdict::from_token("Open"), Some(Verdict::BasicSpinOpen));
        assert_eq!(Verdict::from_token("maybe"), None);
    }

    #[test]
    fn char3_partner_is_bottom_addable_move() {
        for n in [5usize, 7, 8, 10, 11] {
            for lambda in crate::partition::enumerate_p_regular(n, 3) {
                if !alternating::splits(&lambda, 3).unwrap()
                    || !branching::is_js(&lambda, 3).unwrap()
                {
                    continue;
                }
                let nu = natural_product_label(&lambda, 3).unwrap();
                let partner = natural_product_partner(&lambda, 3).unwrap();
                assert_eq!(mullineux::mullineux(&nu, 3).unwrap(), partner, "{lambda}");
            }
        }
    }

    #[test]
    fn exceptional_product_is_canonical() {
        let nu = part("4,2");
        assert!(!alternating::splits(&nu, 3).unwrap());
        assert!(mullineux::mullineux(&nu, 3).unwrap() < nu);
    }
}
