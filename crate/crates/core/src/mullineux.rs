//! `p`-rims, Mullineux symbols and the Mullineux involution.
//!
//! The rim of a partition is the set of nodes `(i, j)` with `(i+1, j+1)`
//! outside the diagram. It is walked from `(1, λ_1)` to `(h, 1)`, moving left
//! when the node below is missing and down otherwise. The `p`-rim collects
//! the walk in groups of `p` nodes; after a group ending in row `r` the next
//! group restarts at the first rim node of row `r + 1`. The last group may be
//! short.

use std::fmt;

use serde::Serialize;

use crate::error::{check_characteristic, Error, Result};
use crate::partition::{Node, Partition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PRim {
    pub nodes: Vec<Node>,
    pub remainder: Partition,
}

impl PRim {
    pub fn size(&self) -> usize {
        self.nodes.len()
    }
}

/// The full rim in walk order.
pub fn rim(lambda: &Partition) -> Vec<Node> {
    let h = lambda.height();
    let mut out = Vec::with_capacity(lambda.part(1) + h);
    if h == 0 {
        return out;
    }
    let mut node = Node::new(1, lambda.part(1));
    loop {
        out.push(node);
        if node.row == h && node.col == 1 {
            break;
        }
        if lambda.contains(Node::new(node.row + 1, node.col)) {
            node.row += 1;
        } else {
            node.col -= 1;
        }
    }
    out
}

pub fn p_rim(lambda: &Partition, p: usize) -> Result<PRim> {
    check_characteristic(p)?;
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let walk = rim(lambda);
    let mut nodes = Vec::new();
    let mut start = 0;
    while start < walk.len() {
        let end = (start + p).min(walk.len());
        nodes.extend_from_slice(&walk[start..end]);
        let last_row = walk[end - 1].row;
        match walk[end..].iter().position(|n| n.row == last_row + 1) {
            Some(offset) => start = end + offset,
            None => break,
        }
    }
    let mut rows = lambda.parts().to_vec();
    for node in &nodes {
        rows[node.row - 1] -= 1;
    }
    let remainder = Partition::from_row_lengths(rows)
        .map_err(|e| Error::Internal(format!("p-rim removal from {lambda} broke shape: {e}")))?;
    Ok(PRim { nodes, remainder })
}

/// Columns `(a_i, r_i)`: the `p`-rim size and the row count of the `i`-th
/// partition in the rim-removal sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MullineuxSymbol {
    pub a: Vec<usize>,
    pub r: Vec<usize>,
}

impl MullineuxSymbol {
    pub fn new(a: Vec<usize>, r: Vec<usize>) -> Result<Self> {
        if a.len() != r.len() {
            return Err(Error::PreconditionViolated(format!(
                "symbol rows have lengths {} and {}",
                a.len(),
                r.len()
            )));
        }
        Ok(MullineuxSymbol { a, r })
    }

    pub fn columns(&self) -> impl DoubleEndedIterator<Item = (usize, usize)> + '_ {
        self.a.iter().copied().zip(self.r.iter().copied())
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn size(&self) -> usize {
        self.a.iter().sum()
    }

    /// The symbol of `λ^M`: each `r_i` becomes `a_i - r_i + ε_i`, with
    /// `ε_i = 0` when `p | a_i` and `1` otherwise.
    pub fn flipped(&self, p: usize) -> MullineuxSymbol {
        let r = self
            .columns()
            .map(|(a, r)| a + usize::from(a % p != 0) - r)
            .collect();
        MullineuxSymbol {
            a: self.a.clone(),
            r,
        }
    }
}

impl fmt::Display for MullineuxSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "({} ; {})", join(&self.a), join(&self.r))
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

pub fn mullineux_symbol(lambda: &Partition, p: usize) -> Result<MullineuxSymbol> {
    require_regular(lambda, p)?;
    let mut a = Vec::new();
    let mut r = Vec::new();
    let mut current = lambda.clone();
    while !current.is_empty() {
        let rim = p_rim(&current, p)?;
        a.push(rim.size());
        r.push(current.height());
        current = rim.remainder;
    }
    Ok(MullineuxSymbol { a, r })
}

/// Rebuilds the `p`-regular partition with the given symbol, innermost
/// column first. Each step searches the partitions with the prescribed size
/// and height that contain the previous one and whose `p`-rim peels back to
/// it; the result is re-checked against the full symbol.
pub fn partition_from_symbol(symbol: &MullineuxSymbol, p: usize) -> Result<Partition> {
    check_characteristic(p)?;
    let missing = || Error::NoSuchPartition {
        symbol: symbol.to_string(),
        p,
    };
    let mut inner = Partition::empty();
    for (a, r) in symbol.columns().rev() {
        if a == 0 || r == 0 || r < inner.height() {
            return Err(missing());
        }
        let target = inner.size() + a;
        let mut found: Option<Partition> = None;
        for candidate in containing_partitions(&inner, target, r) {
            if !candidate.is_p_regular(p) {
                continue;
            }
            let rim = p_rim(&candidate, p)?;
            if rim.size() == a && rim.remainder == inner {
                if found.is_some() {
                    return Err(Error::Internal(format!(
                        "symbol {symbol} has two candidates at column ({a},{r})"
                    )));
                }
                found = Some(candidate);
            }
        }
        inner = found.ok_or_else(missing)?;
    }
    if mullineux_symbol(&inner, p)? != *symbol {
        return Err(missing());
    }
    Ok(inner)
}

// Partitions of `size` with exactly `height` rows containing `inner`.
fn containing_partitions(inner: &Partition, size: usize, height: usize) -> Vec<Partition> {
    fn fill(
        inner: &Partition,
        height: usize,
        row: usize,
        remaining: usize,
        cap: usize,
        acc: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row > height {
            if remaining == 0 {
                out.push(Partition::from_parts_unchecked(acc.clone()));
            }
            return;
        }
        let rows_left = height - row;
        // every later row needs at least its inner part, and at least 1
        let reserve: usize = (row + 1..=height).map(|j| inner.part(j).max(1)).sum();
        let low = inner.part(row).max(1);
        if remaining < reserve {
            return;
        }
        let high = cap.min(remaining - reserve);
        for len in (low..=high).rev() {
            if rows_left > 0 && len < inner.part(row + 1).max(1) {
                break;
            }
            acc.push(len);
            fill(inner, height, row + 1, remaining - len, len, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if height == 0 {
        return out;
    }
    fill(inner, height, 1, size, size, &mut Vec::new(), &mut out);
    out
}

/// `λ^M`, the label of `D^λ ⊗ sgn`. Identity at `p = 2`.
pub fn mullineux(lambda: &Partition, p: usize) -> Result<Partition> {
    require_regular(lambda, p)?;
    if p == 2 {
        return Ok(lambda.clone());
    }
    mullineux_by_symbol(lambda, p)
}

/// The symbol route without the `p = 2` shortcut.
pub fn mullineux_by_symbol(lambda: &Partition, p: usize) -> Result<Partition> {
    let symbol = mullineux_symbol(lambda, p)?;
    partition_from_symbol(&symbol.flipped(p), p)
}

pub fn is_mullineux_fixed(lambda: &Partition, p: usize) -> Result<bool> {
    Ok(mullineux(lambda, p)? == *lambda)
}
