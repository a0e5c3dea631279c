//! Exhaustive invariant suites over small `n`, shared by the `selftest`
//! subcommand and the acceptance tests.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::alternating::{self, AltLabel, Variant};
use crate::branching;
use crate::classifier::{self, Citation, Verdict};
use crate::error::Result;
use crate::mullineux;
use crate::partition::{self, basic_spin, Partition};
use crate::specht;

/// Failures kept verbatim per suite; the count covers all of them.
const KEPT_FAILURES: usize = 20;

#[derive(Debug, Clone, Serialize)]
pub struct SuiteOutcome {
    pub tag: &'static str,
    pub title: &'static str,
    pub checked: usize,
    pub failure_count: usize,
    pub failures: Vec<String>,
    #[serde(skip)]
    pub seconds: f64,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

pub struct Suite {
    pub tag: &'static str,
    pub title: &'static str,
    run: fn(&mut Tally) -> Result<()>,
}

impl Suite {
    pub fn run(&self) -> SuiteOutcome {
        let start = Instant::now();
        let mut tally = Tally::default();
        if let Err(e) = (self.run)(&mut tally) {
            tally.fail(format!("aborted: {e}"));
        }
        SuiteOutcome {
            tag: self.tag,
            title: self.title,
            checked: tally.checked,
            failure_count: tally.failure_count,
            failures: tally.failures,
            seconds: start.elapsed().as_secs_f64(),
        }
    }
}

#[derive(Default)]
struct Tally {
    checked: usize,
    failure_count: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.failure_count += 1;
        if self.failures.len() < KEPT_FAILURES {
            self.failures.push(what);
        }
    }

    // merges per-item failure lists produced in parallel
    fn absorb(&mut self, results: Vec<Result<Vec<String>>>) -> Result<()> {
        for r in results {
            let failures = r?;
            self.checked += 1;
            for f in failures {
                self.fail(f);
            }
        }
        Ok(())
    }
}

pub const SUITES: &[Suite] = &[
    Suite {
        tag: "conormal-excess",
        title: "conormal count = normal count + 1 (p = 2, 3, 5; n <= 18)",
        run: conormal_excess,
    },
    Suite {
        tag: "js-equivalence",
        title: "closed-form JS <=> exactly one normal node (p = 2, 3, 5; n <= 18)",
        run: js_equivalence,
    },
    Suite {
        tag: "crystal-roundtrip",
        title: "f~^r e~^r = id with epsilon/phi shifts (p = 2, 3; n <= 14)",
        run: crystal_roundtrip,
    },
    Suite {
        tag: "mullineux",
        title: "Mullineux involution, p = 2 identity, residue negation, anchors",
        run: mullineux_suite,
    },
    Suite {
        tag: "fixed-family",
        title: "three-row Mullineux-fixed JS partitions at p = 3 (n <= 18)",
        run: fixed_family,
    },
    Suite {
        tag: "splitting-congruences",
        title: "basic spin splitting, split-JS congruences, heights, char-2 family",
        run: splitting_congruences,
    },
    Suite {
        tag: "two-row-oracle",
        title: "two-row restriction dimensions against Gram ranks (p = 2, 3; n <= 10)",
        run: two_row_oracle,
    },
    Suite {
        tag: "classifier-instances",
        title: "classifier reference instances and their dimension identities",
        run: classifier_instances,
    },
    Suite {
        tag: "coherence-scan",
        title: "every pair for p = 2, 3 and 5 <= n <= 14 classifies coherently",
        run: coherence_scan,
    },
];

pub fn find(tag: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.tag == tag)
}

pub fn run_all() -> Vec<SuiteOutcome> {
    SUITES.iter().map(Suite::run).collect()
}

fn regular_upto(ps: &[usize], max_n: usize) -> Vec<(usize, Partition)> {
    ps.iter()
        .flat_map(|&p| {
            (0..=max_n).flat_map(move |n| partition::enumerate_p_regular(n, p).map(move |l| (p, l)))
        })
        .collect()
}

fn conormal_excess(t: &mut Tally) -> Result<()> {
    let items = regular_upto(&[2, 3, 5], 18);
    let results = items
        .par_iter()
        .map(|(p, l)| {
            let normal = branching::normal_count(l, *p)?;
            let conormal = branching::conormal_count(l, *p)?;
            Ok(if conormal == normal + 1 {
                vec![]
            } else {
                vec![format!("{l} p={p}: normal {normal}, conormal {conormal}")]
            })
        })
        .collect();
    t.absorb(results)
}

fn js_equivalence(t: &mut Tally) -> Result<()> {
    let items = regular_upto(&[2, 3, 5], 18);
    let results = items
        .par_iter()
        .map(|(p, l)| {
            let closed = branching::is_js_closed_form(l, *p)?;
            let counted = branching::normal_count(l, *p)? == 1;
            Ok(if closed == counted {
                vec![]
            } else {
                vec![format!(
                    "{l} p={p}: closed form {closed}, normal count says {counted}"
                )]
            })
        })
        .collect();
    t.absorb(results)
}

fn crystal_roundtrip(t: &mut Tally) -> Result<()> {
    let items = regular_upto(&[2, 3], 14);
    let results = items
        .par_iter()
        .map(|(p, l)| {
            let p = *p;
            let mut failures = Vec::new();
            for i in 0..p {
                let eps = branching::epsilon(l, p, i)?;
                let phi = branching::phi(l, p, i)?;
                for r in 0..=eps {
                    let down = branching::e_tilde(l, p, i, r)?;
                    let back = branching::f_tilde(&down, p, i, r)?;
                    let shifted = branching::epsilon(&down, p, i)? + r == eps
                        && branching::phi(&down, p, i)? == phi + r;
                    if back != *l || !shifted {
                        failures.push(format!(
                            "{l} p={p} i={i} r={r}: e~ gives {down}, f~ back gives {back}"
                        ));
                    }
                }
            }
            Ok(failures)
        })
        .collect();
    t.absorb(results)
}

fn neg(i: usize, p: usize) -> usize {
    (p - i) % p
}

fn mullineux_suite(t: &mut Tally) -> Result<()> {
    let involution = regular_upto(&[3, 5], 14);
    let results = involution
        .par_iter()
        .map(|(p, l)| {
            let m = mullineux::mullineux(l, *p)?;
            let mm = mullineux::mullineux(&m, *p)?;
            let mut f = Vec::new();
            if mm != *l || m.size() != l.size() || !m.is_p_regular(*p) {
                f.push(format!("{l} p={p}: M = {m}, M^2 = {mm}"));
            }
            Ok(f)
        })
        .collect();
    t.absorb(results)?;

    let identity = regular_upto(&[2], 20);
    let results = identity
        .par_iter()
        .map(|(_, l)| {
            let m = mullineux::mullineux_by_symbol(l, 2)?;
            Ok(if m == *l {
                vec![]
            } else {
                vec![format!("{l} p=2: symbol route gives {m}")]
            })
        })
        .collect();
    t.absorb(results)?;

    let compat = regular_upto(&[3], 12);
    let results = compat
        .par_iter()
        .map(|(_, l)| {
            let p = 3;
            let m = mullineux::mullineux(l, p)?;
            let mut f = Vec::new();
            for i in 0..p {
                let j = neg(i, p);
                let eps = branching::epsilon(l, p, i)?;
                if eps != branching::epsilon(&m, p, j)? {
                    f.push(format!("{l}: epsilon_{i} differs from epsilon_{j} of {m}"));
                }
                if eps > 0 {
                    let lhs = mullineux::mullineux(&branching::e_tilde(l, p, i, 1)?, p)?;
                    let rhs = branching::e_tilde(&m, p, j, 1)?;
                    if lhs != rhs {
                        f.push(format!("{l}: (e~_{i} λ)^M = {lhs} but e~_{j}(λ^M) = {rhs}"));
                    }
                }
            }
            Ok(f)
        })
        .collect();
    t.absorb(results)?;

    let part = |s: &str| s.parse::<Partition>();
    t.check(
        mullineux::mullineux(&part("4,3,3,2")?, 3)? == part("7,5")?,
        || "(4,3,3,2)^M != (7,5) at p = 3".into(),
    );
    t.check(
        mullineux::mullineux(&part("7,3,2")?, 3)? == part("7,3,2")?,
        || "(7,3,2) not fixed at p = 3".into(),
    );
    Ok(())
}

fn fixed_family(t: &mut Tally) -> Result<()> {
    for n in 1..=18usize {
        let fixed: Vec<Partition> = partition::enumerate_p_regular(n, 3)
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|l| Ok((mullineux::is_mullineux_fixed(&l, 3)?, l)))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter_map(|(f, l)| f.then_some(l))
            .collect();
        // non-JS three-row fixed points such as (3,1,1) exist for many n
        let mut three_row_js = Vec::new();
        for l in fixed.iter().filter(|l| l.height() == 3) {
            if branching::is_js(l, 3)? {
                three_row_js.push(l.clone());
            }
        }
        let expected = n % 6 == 0;
        t.check(three_row_js.len() == usize::from(expected), || {
            format!("n={n}: three-row fixed JS partitions {three_row_js:?}")
        });
        let anchor = match n {
            6 => Some("4,1,1"),
            12 => Some("7,3,2"),
            _ => None,
        };
        if let Some(a) = anchor {
            let a: Partition = a.parse()?;
            t.check(three_row_js.first() == Some(&a), || {
                format!("n={n}: expected {a}")
            });
        }
        if n == 9 {
            t.check(fixed.is_empty(), || {
                format!("n=9 has fixed partitions {fixed:?}")
            });
        }
    }
    Ok(())
}

fn splitting_congruences(t: &mut Tally) -> Result<()> {
    for n in 3..=30usize {
        let spin = basic_spin(n);
        let splits = alternating::splits(&spin, 2)?;
        t.check(splits == (n % 4 != 2), || {
            format!("basic spin {spin} splits = {splits}")
        });
    }
    for p in [2usize, 3] {
        for n in 1..=18usize {
            for l in partition::enumerate_p_regular(n, p) {
                if !alternating::splits(&l, p)? {
                    continue;
                }
                let h = l.height();
                if p == 3 && n >= 5 {
                    t.check(h >= 3, || format!("{l} splits at p=3 with height {h}"));
                }
                if branching::is_js(&l, p)? {
                    let diag = alternating::split_js_diagnostics(&l, p)?;
                    t.check(diag.all_pass(), || format!("{l} p={p}: {diag:?}"));
                    let odd_parts = p != 2 || l.parts().iter().all(|x| x % 2 == 1);
                    let modulus = if p == 2 { 4 } else { 3 };
                    t.check(odd_parts && n % modulus == (h * h) % modulus, || {
                        format!("{l} p={p}: split JS but congruences fail")
                    });
                }
            }
        }
    }
    for n in (6..=30usize).step_by(4) {
        for j in 0..=(n - 6) / 4 {
            let nu = classifier::char2_symmetric_product_family(n, j)?;
            let splits = alternating::splits(&nu, 2)?;
            t.check(splits, || format!("family member {nu} does not split"));
        }
    }
    Ok(())
}

fn two_row_oracle(t: &mut Tally) -> Result<()> {
    for p in [2usize, 3] {
        for id in specht::two_row_sweep(p, 10)? {
            t.check(id.holds, || {
                format!("{}: {} != {}", id.statement, id.lhs, id.rhs)
            });
        }
    }
    let pinned = [
        (
            "5,2",
            2usize,
            14usize,
            vec![("4,2", 1usize, 4usize), ("5,1", 2, 4), ("6", 2, 1)],
        ),
        ("4,2", 3, 9, vec![("3,2", 1, 1), ("4,1", 2, 4)]),
    ];
    for (label, p, dim, terms) in pinned {
        let l: Partition = label.parse()?;
        let cert = branching::two_row_restriction(&l, p)?;
        let got: Vec<(String, usize)> = cert
            .terms
            .iter()
            .map(|(m, k)| (m.to_string(), *k))
            .collect();
        let want: Vec<(String, usize)> =
            terms.iter().map(|(m, k, _)| (m.to_string(), *k)).collect();
        t.check(got == want, || format!("{l} p={p}: terms {got:?}"));
        t.check(specht::gram_rank(&l, p)?.rank == dim, || {
            format!("dim D^({l}) != {dim}")
        });
        for (m, _, d) in terms {
            let m: Partition = m.parse()?;
            t.check(specht::gram_rank(&m, p)?.rank == d, || {
                format!("dim D^({m}) at p={p} != {d}")
            });
        }
    }
    Ok(())
}

/// `(p, n, lhs, rhs, verdict, product)`.
pub type ReferenceInstance = (
    usize,
    usize,
    &'static str,
    &'static str,
    Verdict,
    Option<&'static str>,
);

/// Reference instances with known outcomes.
pub const REFERENCE_INSTANCES: &[ReferenceInstance] = &[
    (2, 9, "5,3,1+", "8,1", Verdict::Irreducible, Some("4,3,2")),
    (3, 6, "4,1,1+", "4,1,1-", Verdict::Irreducible, Some("4,2")),
    (3, 6, "4,1,1+", "4,1,1+", Verdict::NotIrreducible, None),
    (3, 6, "4,1,1+", "5,1", Verdict::NotIrreducible, None),
    (2, 8, "5,3+", "5,2,1", Verdict::BasicSpinOpen, None),
    (2, 9, "5,4+", "4,3,2", Verdict::NotIrreducible, None),
    (2, 9, "5,4+", "8,1", Verdict::NotIrreducible, None),
    (3, 7, "7", "5,2", Verdict::Trivial, None),
];

fn classifier_instances(t: &mut Tally) -> Result<()> {
    for &(p, n, lhs, rhs, verdict, product) in REFERENCE_INSTANCES {
        let c = classifier::classify(p, n, &AltLabel::parse(lhs, p)?, &AltLabel::parse(rhs, p)?)?;
        let got_product = c.product.as_ref().map(|l| l.partition.to_string());
        t.check(
            c.verdict == verdict && got_product.as_deref() == product,
            || format!("{lhs} x {rhs} p={p}: {:?} {got_product:?}", c.verdict),
        );
    }
    let id = specht::case_i_identity(&"5,3,1".parse()?, 2)?;
    t.check(id.holds, || {
        format!("{}: {} != {}", id.statement, id.lhs, id.rhs)
    });
    let id = specht::double_split_char3_identity()?;
    t.check(id.holds, || {
        format!("{}: {} != {}", id.statement, id.lhs, id.rhs)
    });
    Ok(())
}

fn coherence_scan(t: &mut Tally) -> Result<()> {
    for p in [2usize, 3] {
        for n in 5..=14usize {
            let natural = Partition::new(vec![n - 1, 1])?;
            let natural_image = mullineux::mullineux(&natural, p)?;
            let spin = basic_spin(n);
            for row in classifier::classify_all(p, n)? {
                let c = &row.classification;
                let (v, w) = (&row.lhs, &row.rhs);
                match c.verdict {
                    Verdict::Irreducible => {
                        let ok = irreducible_shape(p, n, v, w, c, &natural, &natural_image)?;
                        t.check(ok, || {
                            format!("p={p} n={n}: {v} x {w} has an unexpected shape {c:?}")
                        });
                    }
                    Verdict::BasicSpinOpen => {
                        let ok = p == 2
                            && (v.partition == spin || w.partition == spin)
                            && (v.is_split() || w.is_split())
                            && c.report.as_ref().is_some_and(|r| r.passes);
                        t.check(ok, || {
                            format!("p={p} n={n}: open row {v} x {w} without basic spin")
                        });
                    }
                    _ => t.check(c.product.is_none(), || format!("{v} x {w}: stray product")),
                }
            }
        }
    }
    Ok(())
}

fn irreducible_shape(
    p: usize,
    n: usize,
    v: &AltLabel,
    w: &AltLabel,
    c: &classifier::Classification,
    natural: &Partition,
    natural_image: &Partition,
) -> Result<bool> {
    let Some(product) = &c.product else {
        return Ok(false);
    };
    if !product.partition.is_p_regular(p) || product.size() != n {
        return Ok(false);
    }
    if v.is_split() && w.is_split() {
        let pair = p == 3
            && n == 6
            && v.partition == "4,1,1".parse()?
            && w.partition == v.partition
            && v.variant != w.variant;
        return Ok(pair
            && c.citations == vec![Citation::DoubleSplitChar3]
            && product.variant == Variant::Whole);
    }
    let (split, other) = if v.is_split() { (v, w) } else { (w, v) };
    let tag = if p == 2 {
        Citation::SplitNaturalChar2
    } else {
        Citation::SplitNaturalChar3
    };
    Ok(split.is_split()
        && (other.partition == *natural || other.partition == *natural_image)
        && !n.is_multiple_of(p)
        && branching::is_js(&split.partition, p)?
        && !alternating::splits(&product.partition, p)?
        && c.citations.contains(&tag))
}
