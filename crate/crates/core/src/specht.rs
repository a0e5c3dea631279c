//! Brute-force dimensions of `D^λ` from Specht modules.
//!
//! `S^λ` is spanned by polytabloids `e_t` inside the permutation module on
//! tabloids. With tabloids orthonormal, the Gram matrix of the standard
//! polytabloids has rank `dim D^λ` over `F_p` for `p`-regular `λ`. Everything
//! is exact arithmetic mod `p`, and nothing here calls the crystal or
//! Mullineux code except to choose which identities to check.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::alternating::{self, AltLabel};
use crate::branching;
use crate::classifier::{self, Verdict};
use crate::error::{Error, Result};
use crate::partition::{self, Partition};

pub const DEFAULT_CAP: usize = 11;
pub const CAP_ENV: &str = "PARTMOD_ORACLE_CAP";

/// Largest `n` the oracle accepts: `PARTMOD_ORACLE_CAP` if set and valid,
/// otherwise 11.
pub fn oracle_cap() -> usize {
    std::env::var(CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_CAP)
}

fn check_cap(lambda: &Partition) -> Result<()> {
    let cap = oracle_cap();
    if lambda.size() > cap {
        return Err(Error::TooLarge {
            partition: lambda.clone(),
            size: lambda.size(),
            cap,
        });
    }
    Ok(())
}

fn check_prime(p: usize) -> Result<()> {
    if p < 2 {
        return Err(Error::InvalidCharacteristic(p));
    }
    if (2..p)
        .take_while(|d| d * d <= p)
        .any(|d| p.is_multiple_of(d))
    {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

/// Rows of entries `1..=n`.
pub type Tableau = Vec<Vec<usize>>;

/// `n! / ∏ hooks`.
pub fn hook_length_count(lambda: &Partition) -> u128 {
    let conj = partition::conjugate(lambda);
    let mut hooks: Vec<u128> = Vec::with_capacity(lambda.size());
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = conj.part(j + 1) - i - 1;
            hooks.push((arm + leg + 1) as u128);
        }
    }
    // interleave the division so intermediates stay small
    let mut numer: Vec<u128> = (1..=lambda.size() as u128).collect();
    for h in hooks {
        let mut h = h;
        for x in numer.iter_mut() {
            let g = gcd(*x, h);
            *x /= g;
            h /= g;
            if h == 1 {
                break;
            }
        }
        debug_assert_eq!(h, 1);
    }
    numer.into_iter().product()
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// All standard tableaux of shape `λ`, ordered by the row sequence of the
/// entries `1, 2, …, n`.
pub fn standard_tableaux(lambda: &Partition) -> Result<Vec<Tableau>> {
    check_cap(lambda)?;
    fn grow(
        lambda: &[usize],
        current: &mut Tableau,
        next: usize,
        n: usize,
        out: &mut Vec<Tableau>,
    ) {
        if next > n {
            out.push(current.clone());
            return;
        }
        for r in 0..lambda.len() {
            let len = current[r].len();
            let fits_above = r == 0 || current[r - 1].len() > len;
            if len < lambda[r] && fits_above {
                current[r].push(next);
                grow(lambda, current, next + 1, n, out);
                current[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut current: Tableau = vec![Vec::new(); lambda.height()];
    grow(lambda.parts(), &mut current, 1, lambda.size(), &mut out);
    let expected = hook_length_count(lambda);
    if out.len() as u128 != expected {
        return Err(Error::Internal(format!(
            "{} standard tableaux of shape {lambda}, hook formula gives {expected}",
            out.len()
        )));
    }
    Ok(out)
}

/// A tabloid, stored as the row (0-based) holding each entry `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tabloid(Vec<u8>);

impl Tabloid {
    /// Sorted row sets.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let height = self.0.iter().map(|&r| r as usize + 1).max().unwrap_or(0);
        let mut rows = vec![Vec::new(); height];
        for (entry, &row) in self.0.iter().enumerate() {
            rows[row as usize].push(entry + 1);
        }
        rows
    }
}

impl fmt::Display for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<String>())
            .collect();
        write!(f, "{{{}}}", rows.join("|"))
    }
}

/// A vector over the tabloid basis with coefficients in `F_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytabloid {
    pub p: usize,
    pub terms: BTreeMap<Tabloid, usize>,
}

impl Polytabloid {
    pub fn dot(&self, other: &Polytabloid) -> usize {
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        small
            .terms
            .iter()
            .fold(0, |acc, (key, &a)| match large.terms.get(key) {
                Some(&b) => (acc + a * b) % self.p,
                None => acc,
            })
    }
}

// Every permutation of 0..k with its sign, by Heap's algorithm.
fn signed_permutations(k: usize) -> Vec<(Vec<usize>, bool)> {
    let mut perm: Vec<usize> = (0..k).collect();
    let mut out = vec![(perm.clone(), true)];
    let mut even = true;
    let mut c = vec![0; k];
    let mut i = 1;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            even = !even;
            out.push((perm.clone(), even));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// `e_t = Σ_{σ ∈ C_t} sign(σ) {tσ}` over `F_p`.
pub fn polytabloid(t: &Tableau, p: usize) -> Result<Polytabloid> {
    check_prime(p)?;
    let n: usize = t.iter().map(Vec::len).sum();
    let width = t.first().map_or(0, Vec::len);
    let columns: Vec<Vec<usize>> = (0..width)
        .map(|c| {
            t.iter()
                .take_while(|row| row.len() > c)
                .map(|row| row[c])
                .collect()
        })
        .collect();
    let perms: Vec<Vec<(Vec<usize>, bool)>> = columns
        .iter()
        .map(|col| signed_permutations(col.len()))
        .collect();

    let mut key = vec![0u8; n];
    for (r, row) in t.iter().enumerate() {
        for &e in row {
            key[e - 1] = r as u8;
        }
    }
    let mut terms: BTreeMap<Tabloid, usize> = BTreeMap::new();
    let mut index = vec![0usize; width];
    loop {
        let mut positive = true;
        for (c, col) in columns.iter().enumerate() {
            let (perm, even) = &perms[c][index[c]];
            positive ^= !even;
            for (i, &e) in col.iter().enumerate() {
                key[e - 1] = perm[i] as u8;
            }
        }
        let coef = if positive { 1 } else { p - 1 };
        let slot = terms.entry(Tabloid(key.clone())).or_insert(0);
        *slot = (*slot + coef) % p;

        // mixed-radix increment over the column groups
        let mut c = 0;
        while c < width {
            index[c] += 1;
            if index[c] < perms[c].len() {
                break;
            }
            index[c] = 0;
            c += 1;
        }
        if c == width {
            break;
        }
    }
    terms.retain(|_, v| *v != 0);
    Ok(Polytabloid { p, terms })
}

/// Rank of a square matrix over `F_p` by Gaussian elimination.
pub fn rank_mod_p(mut rows: Vec<Vec<usize>>, p: usize) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = inverse_mod(rows[rank][col], p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col] == 0 {
                continue;
            }
            let factor = row[col];
            for (x, &y) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = (*x + p - factor * y % p) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn inverse_mod(a: usize, p: usize) -> usize {
    // Fermat: a^(p-2)
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1usize);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GramCertificate {
    pub partition: Partition,
    pub p: usize,
    pub syt: usize,
    pub rank: usize,
}

pub fn gram_rank(lambda: &Partition, p: usize) -> Result<GramCertificate> {
    check_prime(p)?;
    let tableaux = standard_tableaux(lambda)?;
    let vectors = tableaux
        .iter()
        .map(|t| polytabloid(t, p))
        .collect::<Result<Vec<_>>>()?;
    let f = vectors.len();
    let mut gram = vec![vec![0usize; f]; f];
    for i in 0..f {
        for j in i..f {
            let v = vectors[i].dot(&vectors[j]);
            gram[i][j] = v;
            gram[j][i] = v;
        }
    }
    Ok(GramCertificate {
        partition: lambda.clone(),
        p,
        syt: f,
        rank: rank_mod_p(gram, p),
    })
}

/// Gram ranks cached by partition, for sweeps that revisit labels.
#[derive(Debug)]
pub struct DimensionTable {
    p: usize,
    ranks: HashMap<Partition, usize>,
}

impl DimensionTable {
    pub fn new(p: usize) -> Self {
        DimensionTable {
            p,
            ranks: HashMap::new(),
        }
    }

    pub fn dim(&mut self, lambda: &Partition) -> Result<usize> {
        if let Some(&r) = self.ranks.get(lambda) {
            return Ok(r);
        }
        let r = gram_rank(lambda, self.p)?.rank;
        self.ranks.insert(lambda.clone(), r);
        Ok(r)
    }

    /// `dim E^λ` or `dim E^λ_±`: halved for split labels.
    pub fn label_dim(&mut self, label: &AltLabel) -> Result<usize> {
        let d = self.dim(&label.partition)?;
        if !label.is_split() {
            return Ok(d);
        }
        if d % 2 != 0 {
            return Err(Error::OddDimension {
                partition: label.partition.clone(),
                p: self.p,
                rank: d,
            });
        }
        Ok(d / 2)
    }
}

/// A checked equation between dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionIdentity {
    pub statement: String,
    pub lhs: usize,
    pub rhs: usize,
    pub holds: bool,
}

impl DimensionIdentity {
    fn new(statement: String, lhs: usize, rhs: usize) -> Self {
        DimensionIdentity {
            statement,
            lhs,
            rhs,
            holds: lhs == rhs,
        }
    }
}

/// `dim D^λ = Σ m_μ dim D^μ` over the two-row restriction terms.
pub fn two_row_identity(lambda: &Partition, p: usize) -> Result<DimensionIdentity> {
    let cert = branching::two_row_restriction(lambda, p)?;
    let mut table = DimensionTable::new(p);
    let lhs = table.dim(lambda)?;
    let mut rhs = 0;
    let mut pieces = Vec::new();
    for (mu, m) in &cert.terms {
        let d = table.dim(mu)?;
        rhs += m * d;
        pieces.push(format!("{m}*{d}"));
    }
    Ok(DimensionIdentity::new(
        format!("dim D^({lambda}) = {} at p = {p}", pieces.join(" + ")),
        lhs,
        rhs,
    ))
}

pub fn verify_two_row(lambda: &Partition, p: usize) -> Result<bool> {
    Ok(two_row_identity(lambda, p)?.holds)
}

/// Checks `dim E^λ_± · dim E^{(n-1,1)} = dim E^ν` for the product label of a
/// split JS `λ` with `p ∤ n`.
pub fn case_i_identity(lambda: &Partition, p: usize) -> Result<DimensionIdentity> {
    let n = lambda.size();
    if (p != 2 && p != 3) || n < 5 || n.is_multiple_of(p) || alternating::is_dim_one(lambda, p)? {
        return Err(Error::PreconditionViolated(format!(
            "{lambda} at p = {p} is not a split-times-natural irreducible case"
        )));
    }
    let nu = classifier::natural_product_label(lambda, p)?;
    let mut table = DimensionTable::new(p);
    let split = AltLabel::new(lambda.clone(), alternating::Variant::Plus, p)?;
    let natural = Partition::new(vec![n - 1, 1])?;
    let lhs = table.label_dim(&split)? * table.dim(&natural)?;
    let rhs = table.dim(&nu)?;
    Ok(DimensionIdentity::new(
        format!("dim E^({lambda})+ * dim D^({natural}) = dim D^({nu}) at p = {p}"),
        lhs,
        rhs,
    ))
}

pub fn verify_case_i(lambda: &Partition, p: usize) -> Result<bool> {
    Ok(case_i_identity(lambda, p)?.holds)
}

/// `(dim D^{(4,1,1)}/2)² = dim D^{(4,2)}` at `p = 3`.
pub fn double_split_char3_identity() -> Result<DimensionIdentity> {
    let mut table = DimensionTable::new(3);
    let split = AltLabel::parse("4,1,1+", 3)?;
    let half = table.label_dim(&split)?;
    let rhs = table.dim(&Partition::new(vec![4, 2])?)?;
    Ok(DimensionIdentity::new(
        "(dim D^(4,1,1)/2)^2 = dim D^(4,2) at p = 3".to_string(),
        half * half,
        rhs,
    ))
}

/// Two-row identities for every `p`-regular `(n-k, k)` with `n - 2k ≥ 1`,
/// `n ≤ max_n`, inside the restriction rule's range.
pub fn two_row_sweep(p: usize, max_n: usize) -> Result<Vec<DimensionIdentity>> {
    let lambdas: Vec<Partition> = (2..=max_n)
        .flat_map(|n| partition::enumerate_p_regular(n, p))
        .filter(|l| l.height() == 2 && l.part(1) > l.part(2))
        .collect();
    let results: Vec<Result<Option<DimensionIdentity>>> = lambdas
        .par_iter()
        .map(|l| match two_row_identity(l, p) {
            Ok(id) => Ok(Some(id)),
            Err(Error::OutsideRuleDomain { .. }) => Ok(None),
            Err(e) => Err(e),
        })
        .collect();
    results.into_iter().filter_map(|r| r.transpose()).collect()
}

/// For every irreducible row of `classify_all(p, n)`, `5 ≤ n ≤ max_n`,
/// checks `dim V · dim W = dim(product)`.
pub fn classifier_sweep(p: usize, max_n: usize) -> Result<Vec<DimensionIdentity>> {
    let mut out = Vec::new();
    for n in 5..=max_n {
        let mut table = DimensionTable::new(p);
        for row in classifier::classify_all(p, n)? {
            if row.classification.verdict != Verdict::Irreducible {
                continue;
            }
            let product = row
                .classification
                .product
                .as_ref()
                .ok_or_else(|| Error::Internal("irreducible row without product".into()))?;
            let lhs = table.label_dim(&row.lhs)? * table.label_dim(&row.rhs)?;
            let rhs = table.label_dim(product)?;
            out.push(DimensionIdentity::new(
                format!(
                    "dim E^{} * dim E^{} = dim E^{product} at p = {p}",
                    row.lhs, row.rhs
                ),
                lhs,
                rhs,
            ));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn tableaux_counts() {
        assert_eq!(standard_tableaux(&part("2,1")).unwrap().len(), 2);
        assert_eq!(standard_tableaux(&part("6")).unwrap().len(), 1);
        assert_eq!(standard_tableaux(&part("4,2")).unwrap().len(), 9);
        assert_eq!(hook_length_count(&part("5,3,1")), 162);
        assert_eq!(
            standard_tableaux(&part("2,1")).unwrap(),
            vec![vec![vec![1, 2], vec![3]], vec![vec![1, 3], vec![2]]]
        );
    }

    #[test]
    fn polytabloid_examples() {
        let e = polytabloid(&vec![vec![1, 3], vec![2]], 5).unwrap();
        let shown: Vec<(String, usize)> =
            e.terms.iter().map(|(k, &v)| (k.to_string(), v)).collect();
        assert_eq!(
            shown,
            vec![("{13|2}".to_string(), 1), ("{23|1}".to_string(), 4)]
        );

        let row = polytabloid(&vec![vec![1, 2, 3]], 3).unwrap();
        assert_eq!(row.terms.len(), 1);

        let column = polytabloid(&vec![vec![1], vec![2], vec![3]], 2).unwrap();
        assert_eq!(column.terms.len(), 6);
        assert!(column.terms.values().all(|&v| v == 1));
    }

    #[test]
    fn gram_rank_examples() {
        assert_eq!(gram_rank(&part("5"), 3).unwrap().rank, 1);
        assert_eq!(gram_rank(&part("3,2"), 3).unwrap().rank, 1);
        assert_eq!(gram_rank(&part("4,1"), 3).unwrap().rank, 4);
        let c = gram_rank(&part("5,2"), 2).unwrap();
        assert_eq!((c.syt, c.rank), (14, 14));
        // a 3-core: the form is nonsingular
        let c = gram_rank(&part("4,2,1,1"), 3).unwrap();
        assert_eq!(c.rank, c.syt);
        assert_eq!(gram_rank(&part("3"), 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn two_row_examples() {
        let id = two_row_identity(&part("5,2"), 2).unwrap();
        assert_eq!((id.lhs, id.rhs), (14, 14));
        let id = two_row_identity(&part("4,2"), 3).unwrap();
        assert_eq!((id.lhs, id.rhs), (9, 9));
        assert!(matches!(
            verify_two_row(&part("4,1"), 3),
            Err(Error::OutsideRuleDomain { .. })
        ));
    }

    #[test]
    fn case_i_examples() {
        let id = case_i_identity(&part("5,3,1"), 2).unwrap();
        assert!(id.holds, "{id:?}");
        assert!(matches!(
            verify_case_i(&part("7"), 3),
            Err(Error::PreconditionViolated(_))
        ));
        let id = double_split_char3_identity().unwrap();
        assert_eq!((id.lhs, id.rhs), (9, 9));
    }

    #[test]
    fn rank_helper() {
        assert_eq!(rank_mod_p(vec![vec![1, 2], vec![2, 4]], 5), 1);
        assert_eq!(rank_mod_p(vec![vec![1, 2], vec![2, 4]], 2), 1);
        assert_eq!(rank_mod_p(vec![vec![0, 1], vec![1, 0]], 3), 2);
    }
}
