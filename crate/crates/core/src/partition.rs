//! Partitions, Young diagrams and their residue calculus.
//!
//! Nodes are 1-indexed `(row, col)` pairs. Parts beyond the height of a
//! partition read as zero, so pairwise conditions on consecutive parts can be
//! evaluated without padding.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{check_characteristic, Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A box of a Young diagram, 1-indexed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub const fn new(row: usize, col: usize) -> Self {
        Node { row, col }
    }

    /// `(col - row) mod p`, canonicalised into `0..p`.
    pub fn residue(self, p: usize) -> usize {
        residue(self, p)
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Number of nodes of each residue `0..p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ContentVector {
    pub counts: Vec<usize>,
}

impl ContentVector {
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

/// Residue of a node: `(col - row) mod p` in `0..p`.
///
/// Panics if `p == 0`.
pub fn residue(node: Node, p: usize) -> usize {
    let diff = node.col as i64 - node.row as i64;
    diff.rem_euclid(p as i64) as usize
}

/// Checks that `parts` is weakly decreasing and strictly positive.
pub fn validate(parts: &[usize]) -> Result<Partition> {
    for (index, &part) in parts.iter().enumerate() {
        if part == 0 {
            return Err(Error::NotAPartition {
                index,
                reason: "parts must be positive".into(),
            });
        }
        if index > 0 && part > parts[index - 1] {
            return Err(Error::NotAPartition {
                index,
                reason: format!("{} follows the smaller part {}", part, parts[index - 1]),
            });
        }
    }
    Ok(Partition {
        parts: parts.to_vec(),
    })
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        validate(&parts)?;
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty for `n == 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// Builds a partition from parts that are known to be valid.
    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(validate(&parts).is_ok(), "invalid parts {parts:?}");
        Partition { parts }
    }

    /// Sorts and drops zeros. Used when a sequence of row lengths is
    /// guaranteed to be a partition up to trailing zeros.
    pub(crate) fn from_row_lengths(mut rows: Vec<usize>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Partition::new(rows)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn height(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of the given 1-indexed row; zero beyond the height.
    pub fn part(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, node: Node) -> bool {
        node.row >= 1 && node.col >= 1 && node.col <= self.part(node.row)
    }

    /// All nodes, row by row, left to right.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |c| Node::new(i + 1, c)))
    }

    /// No part value occurs `p` or more times.
    pub fn is_p_regular(&self, p: usize) -> bool {
        is_p_regular(self, p)
    }

    pub fn conjugate(&self) -> Partition {
        conjugate(self)
    }

    pub fn content(&self, p: usize) -> ContentVector {
        content(self, p)
    }

    /// Removable nodes, top to bottom.
    pub fn removable_nodes(&self) -> Vec<Node> {
        let h = self.height();
        (1..=h)
            .filter(|&r| self.part(r) > self.part(r + 1))
            .map(|r| Node::new(r, self.part(r)))
            .collect()
    }

    /// Addable nodes, top to bottom; always includes one node in row `h + 1`.
    pub fn addable_nodes(&self) -> Vec<Node> {
        let h = self.height();
        (1..=h + 1)
            .filter(|&r| r == 1 || self.part(r) < self.part(r - 1))
            .map(|r| Node::new(r, self.part(r) + 1))
            .collect()
    }

    pub fn is_removable(&self, node: Node) -> bool {
        node.row >= 1 && node.col == self.part(node.row) && node.col > self.part(node.row + 1)
    }

    pub fn is_addable(&self, node: Node) -> bool {
        node.row >= 1
            && node.col == self.part(node.row) + 1
            && (node.row == 1 || node.col <= self.part(node.row - 1))
    }

    /// `self \ node`, or `None` if `node` is not removable.
    pub fn remove_node(&self, node: Node) -> Option<Partition> {
        if !self.is_removable(node) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[node.row - 1] -= 1;
        if parts[node.row - 1] == 0 {
            parts.pop();
        }
        Some(Partition { parts })
    }

    /// `self ∪ node`, or `None` if `node` is not addable.
    pub fn add_node(&self, node: Node) -> Option<Partition> {
        if !self.is_addable(node) {
            return None;
        }
        let mut parts = self.parts.clone();
        if node.row > parts.len() {
            parts.push(1);
        } else {
            parts[node.row - 1] += 1;
        }
        Some(Partition { parts })
    }
}

pub fn is_p_regular(lambda: &Partition, p: usize) -> bool {
    let parts = lambda.parts();
    let mut run = 0;
    for (i, &part) in parts.iter().enumerate() {
        if i > 0 && parts[i - 1] == part {
            run += 1;
        } else {
            run = 1;
        }
        if run >= p {
            return false;
        }
    }
    true
}

pub fn conjugate(lambda: &Partition) -> Partition {
    let first = lambda.part(1);
    let parts = (1..=first)
        .map(|j| lambda.parts().iter().take_while(|&&x| x >= j).count())
        .collect();
    Partition { parts }
}

pub fn content(lambda: &Partition, p: usize) -> ContentVector {
    let mut counts = vec![0; p];
    for node in lambda.nodes() {
        counts[residue(node, p)] += 1;
    }
    ContentVector { counts }
}

/// Two partitions of the same size lie in the same `p`-block iff their
/// contents agree.
pub fn same_block(lambda: &Partition, mu: &Partition, p: usize) -> Result<bool> {
    check_characteristic(p)?;
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.clone(),
            left_size: lambda.size(),
            right: mu.clone(),
            right_size: mu.size(),
        });
    }
    Ok(content(lambda, p) == content(mu, p))
}

/// The basic spin label `(ceil((n+1)/2), floor((n-1)/2))`.
///
/// Panics if `n < 3`.
pub fn basic_spin(n: usize) -> Partition {
    assert!(n >= 3, "basic spin label needs n >= 3, got {n}");
    Partition {
        parts: vec![(n + 2) / 2, (n - 1) / 2],
    }
}

/// Every partition of `n` in descending lexicographic order.
pub fn partitions(n: usize) -> Partitions {
    Partitions {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

/// Every `p`-regular partition of `n` in descending lexicographic order.
pub fn enumerate_p_regular(n: usize, p: usize) -> impl Iterator<Item = Partition> {
    assert!(p >= 2, "characteristic must be at least 2");
    partitions(n).filter(move |lambda| lambda.is_p_regular(p))
}

/// Iterator over partitions of a fixed size, largest first.
#[derive(Debug, Clone)]
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Partition { parts: current })
    }
}

// Next partition in descending lexicographic order.
fn successor(parts: &[usize]) -> Option<Vec<usize>> {
    let mut next = parts.to_vec();
    let mut freed = 0;
    while next.last() == Some(&1) {
        next.pop();
        freed += 1;
    }
    let last = next.last_mut()?;
    *last -= 1;
    let cap = *last;
    freed += 1;
    while freed > 0 {
        let take = freed.min(cap);
        next.push(take);
        freed -= take;
    }
    Some(next)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{part}")?;
        }
        Ok(())
    }
}

/// Parses `"5,3,1"`; the empty partition is spelled `"-"`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let parse_err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        if trimmed == "-" {
            return Ok(Partition::empty());
        }
        if trimmed.is_empty() {
            return Err(parse_err("empty input; spell the empty partition `-`"));
        }
        let parts = trimmed
            .split(',')
            .map(|tok| {
                tok.trim().parse::<usize>().map_err(|_| {
                    parse_err(&format!("`{}` is not a non-negative integer", tok.trim()))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
