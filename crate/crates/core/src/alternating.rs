//! Irreducible modules of the alternating group.
//!
//! `D^λ` restricted to `A_n` either stays irreducible (`E^λ`) or splits as
//! `E^λ_+ ⊕ E^λ_-`. For `p = 2` splitting is decided by Benson's criterion on
//! consecutive pairs of parts; for `p ≥ 3` it happens exactly when `λ` is
//! Mullineux-fixed.
//!
//! The `+`/`-` tags are formal. Conjugating by an odd permutation swaps the
//! two constituents, so only "same tag" versus "different tag" carries
//! meaning.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::branching;
use crate::error::{check_characteristic, Error, Result};
use crate::mullineux;
use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Variant {
    Whole,
    Plus,
    Minus,
}

impl Variant {
    pub fn suffix(self) -> &'static str {
        match self {
            Variant::Whole => "",
            Variant::Plus => "+",
            Variant::Minus => "-",
        }
    }

    pub fn is_split(self) -> bool {
        self != Variant::Whole
    }
}

/// `E^λ` (variant `Whole`) or one of `E^λ_±`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AltLabel {
    pub partition: Partition,
    pub variant: Variant,
}

impl AltLabel {
    /// Checks the variant against splitting and canonicalises `Whole` labels
    /// for `p ≥ 3` to the lexicographically larger of `λ` and `λ^M`.
    pub fn new(partition: Partition, variant: Variant, p: usize) -> Result<Self> {
        let split = splits(&partition, p)?;
        let label = AltLabel { partition, variant };
        match (split, variant.is_split()) {
            (true, false) => Err(Error::VariantInconsistent {
                label: label.to_string(),
                reason: "the partition splits, so a +/- tag is required".into(),
            }),
            (false, true) => Err(Error::VariantInconsistent {
                label: label.to_string(),
                reason: "the partition does not split, so it takes no +/- tag".into(),
            }),
            (false, false) => Ok(AltLabel {
                partition: canonical_representative(&label.partition, p)?,
                variant,
            }),
            (true, true) => Ok(label),
        }
    }

    /// Parses `"5,3,1+"`, `"5,3,1-"` or `"8,1"`.
    pub fn parse(text: &str, p: usize) -> Result<Self> {
        let trimmed = text.trim();
        let (body, variant) = if let Some(body) = trimmed.strip_suffix('+') {
            (body, Variant::Plus)
        } else if let Some(body) = trimmed.strip_suffix('-').filter(|b| !b.is_empty()) {
            (body, Variant::Minus)
        } else {
            (trimmed, Variant::Whole)
        };
        let partition: Partition = body.parse()?;
        if !partition.is_p_regular(p) {
            return Err(Error::IrregularInput { partition, p });
        }
        AltLabel::new(partition, variant, p)
    }

    pub fn size(&self) -> usize {
        self.partition.size()
    }

    pub fn is_split(&self) -> bool {
        self.variant.is_split()
    }
}

impl fmt::Display for AltLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.partition, self.variant.suffix())
    }
}

impl Serialize for AltLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn require_regular(lambda: &Partition, p: usize) -> Result<()> {
    check_characteristic(p)?;
    if lambda.is_p_regular(p) {
        Ok(())
    } else {
        Err(Error::IrregularInput {
            partition: lambda.clone(),
            p,
        })
    }
}

/// Benson's criterion: for every `i ≥ 1`, `λ_{2i-1} - λ_{2i} ≤ 2` and
/// `λ_{2i-1} + λ_{2i} ≢ 2 (mod 4)`.
pub fn benson_splits(lambda: &Partition) -> bool {
    (1..=lambda.height().div_ceil(2)).all(|i| {
        let (upper, lower) = (lambda.part(2 * i - 1), lambda.part(2 * i));
        upper - lower <= 2 && (upper + lower) % 4 != 2
    })
}

/// Whether `D^λ` splits on restriction to the alternating group.
pub fn splits(lambda: &Partition, p: usize) -> Result<bool> {
    require_regular(lambda, p)?;
    if p == 2 {
        Ok(benson_splits(lambda))
    } else {
        mullineux::is_mullineux_fixed(lambda, p)
    }
}

/// The labels of the constituents of `D^λ` restricted to `A_n`.
pub fn alt_labels(lambda: &Partition, p: usize) -> Result<Vec<AltLabel>> {
    if splits(lambda, p)? {
        Ok(vec![
            AltLabel {
                partition: lambda.clone(),
                variant: Variant::Plus,
            },
            AltLabel {
                partition: lambda.clone(),
                variant: Variant::Minus,
            },
        ])
    } else {
        Ok(vec![AltLabel {
            partition: canonical_representative(lambda, p)?,
            variant: Variant::Whole,
        }])
    }
}

/// The lexicographically larger of `λ` and `λ^M`.
pub fn canonical_representative(lambda: &Partition, p: usize) -> Result<Partition> {
    let image = mullineux::mullineux(lambda, p)?;
    Ok(if image > *lambda {
        image
    } else {
        lambda.clone()
    })
}

/// `D^λ` is the trivial or the sign module.
pub fn is_dim_one(lambda: &Partition, p: usize) -> Result<bool> {
    require_regular(lambda, p)?;
    let trivial = Partition::row(lambda.size());
    Ok(*lambda == trivial || *lambda == mullineux::mullineux(&trivial, p)?)
}

/// Every label of `A_n`-irreducibles in characteristic `p`, in enumeration
/// order of the partitions with `+` before `-`. For `p ≥ 3` each non-split
/// pair `{λ, λ^M}` appears once, under its canonical representative.
pub fn all_labels(n: usize, p: usize) -> Result<Vec<AltLabel>> {
    check_characteristic(p)?;
    let mut out = Vec::new();
    for lambda in crate::partition::enumerate_p_regular(n, p) {
        if splits(&lambda, p)? {
            out.extend(alt_labels(&lambda, p)?);
        } else if canonical_representative(&lambda, p)? == lambda {
            out.push(AltLabel {
                partition: lambda,
                variant: Variant::Whole,
            });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagnosticClause {
    pub tag: &'static str,
    pub statement: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitJsDiagnostics {
    pub partition: Partition,
    pub p: usize,
    pub clauses: Vec<DiagnosticClause>,
}

impl SplitJsDiagnostics {
    pub fn all_pass(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }
}

/// Necessary conditions satisfied by split JS partitions.
///
/// `p = 2`: all parts odd, and `n ≡ h² (mod 4)`.
/// `p ≥ 3`: `n ≡ h² (mod p)`, and `h ≥ 3` once `n ≥ 5`.
pub fn split_js_diagnostics(lambda: &Partition, p: usize) -> Result<SplitJsDiagnostics> {
    if !splits(lambda, p)? || !branching::is_js(lambda, p)? {
        return Err(Error::PreconditionViolated(format!(
            "{lambda} is not a split JS partition at p = {p}"
        )));
    }
    let n = lambda.size();
    let h = lambda.height();
    let mut clauses = Vec::new();
    if p == 2 {
        clauses.push(DiagnosticClause {
            tag: "split-js-odd-parts",
            statement: format!("all parts of {lambda} are odd"),
            passed: lambda.parts().iter().all(|x| x % 2 == 1),
        });
        clauses.push(DiagnosticClause {
            tag: "split-js-height-square",
            statement: format!("n = {n} ≡ h² = {} (mod 4)", h * h),
            passed: n % 4 == (h * h) % 4,
        });
    } else {
        clauses.push(DiagnosticClause {
            tag: "split-js-height-square",
            statement: format!("n = {n} ≡ h² = {} (mod {p})", h * h),
            passed: n % p == (h * h) % p,
        });
        if n >= 5 {
            clauses.push(DiagnosticClause {
                tag: "split-height-at-least-3",
                statement: format!("h = {h} ≥ 3"),
                passed: h >= 3,
            });
        }
    }
    Ok(SplitJsDiagnostics {
        partition: lambda.clone(),
        p,
        clauses,
    })
}
