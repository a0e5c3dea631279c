//! Test-side oracles that share no code with the library's algorithms.
#![allow(dead_code)]

use partmod::partition::Partition;

/// `(row, col, removable)` for every removable or addable `i`-node, top row
/// first, straight from the diagram.
pub fn i_nodes(parts: &[usize], p: usize, i: usize) -> Vec<(usize, usize, bool)> {
    let h = parts.len();
    let part = |r: usize| if r >= 1 && r <= h { parts[r - 1] } else { 0 };
    let res = |r: usize, c: usize| (c as i64 - r as i64).rem_euclid(p as i64) as usize;
    let mut out = Vec::new();
    for r in 1..=h + 1 {
        let len = part(r);
        // removable at the end of row r, then addable just after it
        if len > 0 && part(r + 1) < len && res(r, len) == i {
            out.push((r, len, true));
        }
        if (r == 1 || part(r - 1) > len) && res(r, len + 1) == i {
            out.push((r, len + 1, false));
        }
    }
    out
}

type Nodes = Vec<(usize, usize)>;

/// Normal (removable, unmatched) and conormal (addable, unmatched) nodes by
/// bracket matching: addable = `(`, removable = `)`, read top to bottom. A
/// `)` is unmatched iff every segment ending at it has more `)` than `(`.
pub fn bracket(parts: &[usize], p: usize, i: usize) -> (Nodes, Nodes) {
    let seq = i_nodes(parts, p, i);
    let mut normal = Vec::new();
    let mut conormal = Vec::new();
    for k in 0..seq.len() {
        let (r, c, removable) = seq[k];
        if removable {
            let free = (0..=k).all(|j| {
                let close = seq[j..=k].iter().filter(|e| e.2).count();
                let open = seq[j..=k].len() - close;
                close > open
            });
            if free {
                normal.push((r, c));
            }
        } else {
            let free = (k..seq.len()).all(|j| {
                let open = seq[k..=j].iter().filter(|e| !e.2).count();
                let close = seq[k..=j].len() - open;
                open > close
            });
            if free {
                conormal.push((r, c));
            }
        }
    }
    (normal, conormal)
}

pub fn normal_total(parts: &[usize], p: usize) -> usize {
    (0..p).map(|i| bracket(parts, p, i).0.len()).sum()
}

pub fn conormal_total(parts: &[usize], p: usize) -> usize {
    (0..p).map(|i| bracket(parts, p, i).1.len()).sum()
}

fn set(parts: &[usize], row: usize, len: usize) -> Vec<usize> {
    let mut v = parts.to_vec();
    if row > v.len() {
        v.push(len);
    } else {
        v[row - 1] = len;
    }
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Removes the lowest normal `i`-node.
pub fn e_good(parts: &[usize], p: usize, i: usize) -> Option<Vec<usize>> {
    let (normal, _) = bracket(parts, p, i);
    normal.last().map(|&(r, c)| set(parts, r, c - 1))
}

/// Adds the highest conormal `i`-node.
pub fn f_cogood(parts: &[usize], p: usize, i: usize) -> Option<Vec<usize>> {
    let (_, conormal) = bracket(parts, p, i);
    conormal.first().map(|&(r, c)| set(parts, r, c))
}

/// `λ^M` through the crystal: peel good nodes down to `∅` recording
/// residues, then rebuild with the negated residues.
pub fn mullineux_by_crystal(lambda: &Partition, p: usize) -> Partition {
    let mut path = Vec::new();
    let mut cur = lambda.parts().to_vec();
    while !cur.is_empty() {
        let i = (0..p)
            .find(|&i| !bracket(&cur, p, i).0.is_empty())
            .expect("a nonempty p-regular partition has a normal node");
        cur = e_good(&cur, p, i).unwrap();
        path.push(i);
    }
    let mut out: Vec<usize> = Vec::new();
    for &i in path.iter().rev() {
        let j = (p - i) % p;
        out = f_cogood(&out, p, j).expect("negated path stays in the crystal");
    }
    Partition::new(out).unwrap()
}

/// Distinct-part partitions of `n`, counted by the generating function
/// `∏ (1 + x^k)`.
pub fn distinct_part_count(n: usize) -> u64 {
    let mut coeff = vec![0u64; n + 1];
    coeff[0] = 1;
    for k in 1..=n {
        for m in (k..=n).rev() {
            coeff[m] += coeff[m - k];
        }
    }
    coeff[n]
}

/// Number of partitions of `n` with no part repeated `p` or more times,
/// by dynamic programming over part sizes.
pub fn p_regular_count(n: usize, p: usize) -> u64 {
    let mut coeff = vec![0u64; n + 1];
    coeff[0] = 1;
    for k in 1..=n {
        let mut next = vec![0u64; n + 1];
        for (m, slot) in next.iter_mut().enumerate() {
            for mult in 0..p {
                if mult * k > m {
                    break;
                }
                *slot += coeff[m - mult * k];
            }
        }
        coeff = next;
    }
    coeff[n]
}
