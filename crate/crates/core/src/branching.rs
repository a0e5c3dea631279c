//! Modular branching: reduced `i`-signatures, normal and conormal nodes,
//! the crystal operators and two-row restriction multiplicities.
//!
//! The `i`-signature of a partition lists its addable (`+`) and removable
//! (`-`) nodes of residue `i` from the top row to the bottom row. Adjacent
//! `+-` pairs (an addable node above a removable one) cancel until none are
//! left. The surviving word has the shape `-...-+...+`: the survivors are the
//! normal (`-`) and conormal (`+`) nodes. The good node is the lowest normal
//! node, the cogood node the highest conormal node.

use serde::Serialize;

use crate::error::{check_characteristic, Error, Result};
use crate::partition::{Node, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Addable,
    #[serde(rename = "-")]
    Removable,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Addable => '+',
            Sign::Removable => '-',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SignedNode {
    pub node: Node,
    pub sign: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignatureReport {
    pub residue: usize,
    /// Addable and removable `residue`-nodes, top row first.
    pub sequence: Vec<SignedNode>,
    /// The entries that survive cancellation, in the same order.
    pub reduced: Vec<SignedNode>,
    pub epsilon: usize,
    pub phi: usize,
    pub good: Option<Node>,
    pub cogood: Option<Node>,
}

impl SignatureReport {
    pub fn normal_nodes(&self) -> Vec<Node> {
        self.reduced
            .iter()
            .filter(|e| e.sign == Sign::Removable)
            .map(|e| e.node)
            .collect()
    }

    pub fn conormal_nodes(&self) -> Vec<Node> {
        self.reduced
            .iter()
            .filter(|e| e.sign == Sign::Addable)
            .map(|e| e.node)
            .collect()
    }

    /// The signature word, e.g. `"-++"`.
    pub fn word(&self) -> String {
        self.sequence.iter().map(|e| e.sign.symbol()).collect()
    }

    pub fn reduced_word(&self) -> String {
        self.reduced.iter().map(|e| e.sign.symbol()).collect()
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

/// Signed `i`-nodes of `lambda`, top to bottom. Within a row the removable
/// node precedes the addable one, but they never share a residue.
pub fn signed_sequence(lambda: &Partition, p: usize, i: usize) -> Vec<SignedNode> {
    let mut entries: Vec<SignedNode> = lambda
        .removable_nodes()
        .into_iter()
        .map(|node| SignedNode {
            node,
            sign: Sign::Removable,
        })
        .chain(lambda.addable_nodes().into_iter().map(|node| SignedNode {
            node,
            sign: Sign::Addable,
        }))
        .filter(|e| e.node.residue(p) == i)
        .collect();
    entries.sort_by_key(|e| (e.node.row, e.node.col));
    entries
}

/// Cancels `+-` pairs until the word has the form `-...-+...+`.
///
/// A left-to-right stack scan reaches the same fixed point as repeated
/// adjacent cancellation in any order.
pub fn reduce(sequence: &[SignedNode]) -> Vec<SignedNode> {
    let mut stack: Vec<SignedNode> = Vec::with_capacity(sequence.len());
    for &entry in sequence {
        if entry.sign == Sign::Removable && stack.last().map(|e| e.sign) == Some(Sign::Addable) {
            stack.pop();
        } else {
            stack.push(entry);
        }
    }
    stack
}

pub fn signature(lambda: &Partition, p: usize, i: usize) -> Result<SignatureReport> {
    require_regular(lambda, p)?;
    if i >= p {
        return Err(Error::OutOfRange(format!("residue {i} is not in 0..{p}")));
    }
    Ok(signature_unchecked(lambda, p, i))
}

fn signature_unchecked(lambda: &Partition, p: usize, i: usize) -> SignatureReport {
    let sequence = signed_sequence(lambda, p, i);
    let reduced = reduce(&sequence);
    let epsilon = reduced.iter().filter(|e| e.sign == Sign::Removable).count();
    let phi = reduced.len() - epsilon;
    let good = reduced
        .iter()
        .rev()
        .find(|e| e.sign == Sign::Removable)
        .map(|e| e.node);
    let cogood = reduced
        .iter()
        .find(|e| e.sign == Sign::Addable)
        .map(|e| e.node);
    SignatureReport {
        residue: i,
        sequence,
        reduced,
        epsilon,
        phi,
        good,
        cogood,
    }
}

/// One report per residue `0..p`.
pub fn signatures(lambda: &Partition, p: usize) -> Result<Vec<SignatureReport>> {
    require_regular(lambda, p)?;
    Ok((0..p).map(|i| signature_unchecked(lambda, p, i)).collect())
}

pub fn epsilon(lambda: &Partition, p: usize, i: usize) -> Result<usize> {
    Ok(signature(lambda, p, i)?.epsilon)
}

pub fn phi(lambda: &Partition, p: usize, i: usize) -> Result<usize> {
    Ok(signature(lambda, p, i)?.phi)
}

/// Total number of normal nodes over all residues.
pub fn normal_count(lambda: &Partition, p: usize) -> Result<usize> {
    Ok(signatures(lambda, p)?.iter().map(|s| s.epsilon).sum())
}

/// Total number of conormal nodes over all residues.
pub fn conormal_count(lambda: &Partition, p: usize) -> Result<usize> {
    Ok(signatures(lambda, p)?.iter().map(|s| s.phi).sum())
}

/// All normal nodes of `lambda`, top to bottom.
pub fn normal_nodes(lambda: &Partition, p: usize) -> Result<Vec<Node>> {
    let mut nodes: Vec<Node> = signatures(lambda, p)?
        .iter()
        .flat_map(|s| s.normal_nodes())
        .collect();
    nodes.sort();
    Ok(nodes)
}

/// All conormal nodes of `lambda`, top to bottom.
pub fn conormal_nodes(lambda: &Partition, p: usize) -> Result<Vec<Node>> {
    let mut nodes: Vec<Node> = signatures(lambda, p)?
        .iter()
        .flat_map(|s| s.conormal_nodes())
        .collect();
    nodes.sort();
    Ok(nodes)
}

/// Removes the `i`-good node `r` times.
pub fn e_tilde(lambda: &Partition, p: usize, i: usize, r: usize) -> Result<Partition> {
    let available = signature(lambda, p, i)?.epsilon;
    if available < r {
        return Err(Error::NotEnoughNormalNodes {
            partition: lambda.clone(),
            residue: i,
            available,
            requested: r,
        });
    }
    let mut current = lambda.clone();
    for _ in 0..r {
        let good = signature_unchecked(&current, p, i)
            .good
            .ok_or_else(|| Error::Internal(format!("{current} lost its {i}-good node")))?;
        current = current
            .remove_node(good)
            .ok_or_else(|| Error::Internal(format!("good node {good} not removable")))?;
    }
    Ok(current)
}

/// Adds the `i`-cogood node `r` times.
pub fn f_tilde(lambda: &Partition, p: usize, i: usize, r: usize) -> Result<Partition> {
    let available = signature(lambda, p, i)?.phi;
    if available < r {
        return Err(Error::NotEnoughConormalNodes {
            partition: lambda.clone(),
            residue: i,
            available,
            requested: r,
        });
    }
    let mut current = lambda.clone();
    for _ in 0..r {
        let cogood = signature_unchecked(&current, p, i)
            .cogood
            .ok_or_else(|| Error::Internal(format!("{current} lost its {i}-cogood node")))?;
        current = current
            .add_node(cogood)
            .ok_or_else(|| Error::Internal(format!("cogood node {cogood} not addable")))?;
    }
    Ok(current)
}

/// JS test by counting normal nodes: exactly one.
pub fn is_js_by_normal_nodes(lambda: &Partition, p: usize) -> Result<bool> {
    Ok(normal_count(lambda, p)? == 1)
}

/// Closed-form JS test on the block form `(a_1^{b_1}, ..., a_h^{b_h})`:
/// `a_k - a_{k+1} + b_k + b_{k+1} ≡ 0 (mod p)` for each consecutive pair of
/// distinct part values. At `p = 2` this is equivalent to all parts sharing a
/// parity, which is what gets evaluated there.
///
/// The empty partition has no normal node and is not JS.
pub fn is_js_closed_form(lambda: &Partition, p: usize) -> Result<bool> {
    require_regular(lambda, p)?;
    if lambda.is_empty() {
        return Ok(false);
    }
    if p == 2 {
        let parity = lambda.part(1) % 2;
        return Ok(lambda.parts().iter().all(|&x| x % 2 == parity));
    }
    let blocks = part_blocks(lambda);
    Ok(blocks
        .windows(2)
        .all(|w| (w[0].0 - w[1].0 + w[0].1 + w[1].1) % p == 0))
}

/// `(value, multiplicity)` pairs, largest value first.
pub(crate) fn part_blocks(lambda: &Partition) -> Vec<(usize, usize)> {
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    for &x in lambda.parts() {
        match blocks.last_mut() {
            Some((value, mult)) if *value == x => *mult += 1,
            _ => blocks.push((x, 1)),
        }
    }
    blocks
}

/// Whether `D^λ` restricts irreducibly to the next smaller symmetric group.
///
/// Both the closed form and the normal-node count are evaluated; a
/// disagreement is reported as an internal defect.
pub fn is_js(lambda: &Partition, p: usize) -> Result<bool> {
    let closed = is_js_closed_form(lambda, p)?;
    let counted = is_js_by_normal_nodes(lambda, p)?;
    if closed != counted {
        return Err(Error::Internal(format!(
            "JS criteria disagree for {lambda} at p = {p}: closed form {closed}, normal count {counted}"
        )));
    }
    Ok(closed)
}

/// Composition multiplicity of `D^{λ∖A}` in the `i`-restriction of `D^λ`,
/// for a normal `i`-node `A` with `λ∖A` still `p`-regular: the number of
/// normal `i`-nodes weakly above `A`.
pub fn normal_node_multiplicity(lambda: &Partition, p: usize, node: Node) -> Result<usize> {
    require_regular(lambda, p)?;
    let i = node.residue(p);
    let normal = signature_unchecked(lambda, p, i).normal_nodes();
    if !normal.contains(&node) {
        return Err(Error::NotNormal {
            partition: lambda.clone(),
            node,
        });
    }
    let smaller = lambda
        .remove_node(node)
        .ok_or_else(|| Error::Internal(format!("normal node {node} not removable")))?;
    if !smaller.is_p_regular(p) {
        return Err(Error::IrregularResult {
            partition: smaller,
            p,
        });
    }
    Ok(normal.iter().filter(|a| a.row <= node.row).count())
}

/// Composition factors of the restriction of a two-row `D^{(n-k,k)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RestrictionCertificate {
    pub source: Partition,
    pub p: usize,
    /// Base-`p` digits of `n - 2k`, least significant first, extended with
    /// zeros up to and including position `t`.
    pub digits: Vec<usize>,
    pub t: usize,
    pub delta: usize,
    pub terms: Vec<(Partition, usize)>,
}

/// Two-row restriction multiplicities for `λ = (n-k, k)`, `k ≥ 1`,
/// `n - 2k ≥ 1`, when the first base-`p` digit of `n - 2k` that is not
/// `p - 1` sits at position `t ≥ 1`.
///
/// Terms: `(n-k-1, k)` once, `(n-k-1+p^t, k-p^t)` with multiplicity `δ`
/// (`δ = 1` iff `s_t < p - 2`), and `(n-k-1+p^j, k-p^j)` twice for `j < t`.
/// Labels that are not `p`-regular partitions of `n - 1` are dropped.
pub fn two_row_restriction(lambda: &Partition, p: usize) -> Result<RestrictionCertificate> {
    require_regular(lambda, p)?;
    if lambda.height() != 2 || lambda.part(1) == lambda.part(2) {
        return Err(Error::PreconditionViolated(format!(
            "{lambda} is not of the form (n-k,k) with k >= 1 and n-2k >= 1"
        )));
    }
    let (first, second) = (lambda.part(1), lambda.part(2));
    let mut digits = Vec::new();
    let mut rest = first - second;
    while rest > 0 {
        digits.push(rest % p);
        rest /= p;
    }
    let t = (0..)
        .find(|&j| digits.get(j).copied().unwrap_or(0) < p - 1)
        .expect("digits eventually vanish");
    if t == 0 {
        return Err(Error::OutsideRuleDomain {
            partition: lambda.clone(),
            p,
        });
    }
    if digits.len() <= t {
        digits.resize(t + 1, 0);
    }
    let s_t = digits[t];
    let delta = usize::from(s_t + 2 < p);

    let shifted = |shift: usize| -> Option<Partition> {
        if shift > second {
            return None;
        }
        let mu = Partition::from_row_lengths(vec![first - 1 + shift, second - shift]).ok()?;
        mu.is_p_regular(p).then_some(mu)
    };

    let mut terms = Vec::new();
    if let Some(mu) = shifted(0) {
        terms.push((mu, 1));
    }
    if delta == 1 {
        if let Some(mu) = shifted(p.pow(t as u32)) {
            terms.push((mu, 1));
        }
    }
    for j in 0..t {
        if let Some(mu) = shifted(p.pow(j as u32)) {
            terms.push((mu, 2));
        }
    }
    Ok(RestrictionCertificate {
        source: lambda.clone(),
        p,
        digits,
        t,
        delta,
        terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn nodes(list: &[(usize, usize)]) -> Vec<Node> {
        list.iter().map(|&(r, c)| Node::new(r, c)).collect()
    }

    #[test]
    fn signature_of_three_one() {
        let s = signature(&part("3,1"), 2, 0).unwrap();
        assert_eq!(s.word(), "-++");
        assert_eq!(s.normal_nodes(), nodes(&[(1, 3)]));
        assert_eq!(s.conormal_nodes(), nodes(&[(2, 2), (3, 1)]));
        assert_eq!((s.epsilon, s.phi), (1, 2));
        assert_eq!(s.good, Some(Node::new(1, 3)));
        assert_eq!(s.cogood, Some(Node::new(2, 2)));
    }

    #[test]
    fn signature_of_five_three_one() {
        let lambda = part("5,3,1");
        let s0 = signature(&lambda, 2, 0).unwrap();
        assert_eq!(s0.epsilon, 1);
        assert_eq!(s0.good, Some(Node::new(1, 5)));
        let s1 = signature(&lambda, 2, 1).unwrap();
        assert_eq!((s1.epsilon, s1.phi), (0, 2));
        assert_eq!(s1.conormal_nodes(), nodes(&[(3, 2), (4, 1)]));
        assert_eq!(s1.good, None);
    }

    #[test]
    fn signature_cancellation() {
        let s = signature(&part("4,2,1"), 2, 1).unwrap();
        assert_eq!(s.word(), "-+++");
        assert_eq!(s.reduced_word(), "-+++");
        let t = signature(&part("3,2"), 2, 0).unwrap();
        assert_eq!(t.word(), "--+");
        assert_eq!(t.good, Some(Node::new(2, 2)));
        // addable (1,3) sits above removable (2,1), both of residue 2
        let u = signature(&part("2,1"), 3, 2).unwrap();
        assert_eq!(u.word(), "+-");
        assert_eq!(u.reduced_word(), "");
        assert_eq!((u.epsilon, u.phi, u.good, u.cogood), (0, 0, None, None));
    }

    #[test]
    fn two_one_both_normal() {
        let s = signature(&part("2,1"), 2, 1).unwrap();
        assert_eq!(s.epsilon, 2);
        assert_eq!(s.good, Some(Node::new(2, 1)));
    }

    #[test]
    fn counts() {
        assert_eq!(normal_count(&part("5,3,1"), 2).unwrap(), 1);
        assert_eq!(conormal_count(&part("5,3,1"), 2).unwrap(), 2);
        assert_eq!(normal_count(&part("2,1"), 2).unwrap(), 2);
        assert_eq!(conormal_count(&part("2,1"), 2).unwrap(), 3);
        for p in [2, 3, 5] {
            assert_eq!(normal_count(&Partition::row(7), p).unwrap(), 1);
            assert_eq!(conormal_count(&Partition::row(7), p).unwrap(), 2);
        }
    }

    #[test]
    fn irregular_input_rejected() {
        assert!(matches!(
            signature(&part("2,2"), 2, 0),
            Err(Error::IrregularInput { .. })
        ));
        assert!(matches!(
            is_js(&part("1,1,1"), 3),
            Err(Error::IrregularInput { .. })
        ));
    }

    #[test]
    fn crystal_operator_examples() {
        assert_eq!(e_tilde(&part("3,1"), 2, 0, 1).unwrap(), part("2,1"));
        assert_eq!(e_tilde(&part("2,1"), 2, 1, 2).unwrap(), part("1"));
        assert_eq!(e_tilde(&part("5"), 3, 1, 1).unwrap(), part("4"));
        assert_eq!(f_tilde(&part("3,1"), 2, 0, 1).unwrap(), part("3,2"));
        assert_eq!(f_tilde(&Partition::empty(), 3, 0, 1).unwrap(), part("1"));
        assert!(matches!(
            e_tilde(&part("3,1"), 2, 0, 2),
            Err(Error::NotEnoughNormalNodes { available: 1, .. })
        ));
        assert!(matches!(
            f_tilde(&part("5,3,1"), 2, 0, 2),
            Err(Error::NotEnoughConormalNodes { .. })
        ));
    }

    #[test]
    fn js_examples() {
        assert!(is_js(&part("5,3,1"), 2).unwrap());
        assert!(is_js(&part("2,1"), 3).unwrap());
        assert!(!is_js(&part("3,1"), 3).unwrap());
        assert!(is_js(&part("4,1,1"), 3).unwrap());
        assert!(!is_js(&part("5,4"), 2).unwrap());
        assert!(!is_js(&Partition::empty(), 2).unwrap());
    }

    #[test]
    fn multiplicity_examples() {
        let lambda = part("2,1");
        assert_eq!(
            normal_node_multiplicity(&lambda, 2, Node::new(2, 1)).unwrap(),
            2
        );
        // removing the upper normal node leaves the 2-singular (1,1)
        assert!(matches!(
            normal_node_multiplicity(&lambda, 2, Node::new(1, 2)),
            Err(Error::IrregularResult { .. })
        ));
        let lambda = part("3,1");
        assert_eq!(
            normal_node_multiplicity(&lambda, 3, Node::new(2, 1)).unwrap(),
            2
        );
        assert_eq!(
            normal_node_multiplicity(&lambda, 3, Node::new(1, 3)).unwrap(),
            1
        );
        let js = part("5,3,1");
        assert_eq!(
            normal_node_multiplicity(&js, 2, Node::new(1, 5)).unwrap(),
            1
        );
        assert!(matches!(
            normal_node_multiplicity(&js, 2, Node::new(3, 1)),
            Err(Error::NotNormal { .. })
        ));
        // (1,3) is normal in (3,2) at p = 2 but leaves (2,2)
        assert!(matches!(
            normal_node_multiplicity(&part("3,2"), 2, Node::new(1, 3)),
            Err(Error::IrregularResult { .. })
        ));
    }

    #[test]
    fn two_row_restriction_examples() {
        let cert = two_row_restriction(&part("5,2"), 2).unwrap();
        assert_eq!(cert.digits, vec![1, 1, 0]);
        assert_eq!((cert.t, cert.delta), (2, 0));
        assert_eq!(
            cert.terms,
            vec![(part("4,2"), 1), (part("5,1"), 2), (part("6"), 2)]
        );

        let cert = two_row_restriction(&part("4,2"), 3).unwrap();
        assert_eq!(cert.digits, vec![2, 0]);
        assert_eq!((cert.t, cert.delta), (1, 1));
        assert_eq!(cert.terms, vec![(part("3,2"), 1), (part("4,1"), 2)]);

        assert!(matches!(
            two_row_restriction(&part("4,1"), 3),
            Err(Error::OutsideRuleDomain { .. })
        ));
        assert!(matches!(
            two_row_restriction(&part("5"), 3),
            Err(Error::PreconditionViolated(_))
        ));
    }
}
