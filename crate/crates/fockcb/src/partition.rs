//! Integer partitions, their Young diagrams, and residue-labelled nodes.
//!
//! A partition is stored as its weakly decreasing sequence of positive
//! parts; trailing zeros are never stored, but every operation treats the
//! sequence as infinite with zeros appended.  Nodes (i,j) are 1-based and
//! carry the residue (j - i) mod e.

use crate::{residue_mod, Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// A partition: weakly decreasing positive parts, zeros stripped.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Build from a weakly decreasing sequence of positive parts.
    /// Trailing zeros are tolerated and stripped; anything else that is
    /// not weakly decreasing is rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let ok = parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0);
        if !ok {
            return Err(Error::MalformedPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    /// The stored (positive) parts.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The i-th part, 1-based, zero beyond the last positive part.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 || i > self.parts.len() {
            0
        } else {
            self.parts[i - 1]
        }
    }

    /// Number of positive parts (the first column of the conjugate).
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// |λ|, the number of cells.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// The conjugate partition λ′ with λ′_i = #{j : λ_j ≥ i}.
    pub fn conjugate(&self) -> Partition {
        let mut parts = Vec::new();
        if let Some(&first) = self.parts.first() {
            parts.reserve(first as usize);
            for i in 1..=first {
                let count = self.parts.iter().take_while(|&&p| p >= i).count();
                parts.push(count as u32);
            }
        }
        Partition { parts }
    }

    /// No e equal consecutive positive parts.
    pub fn is_e_regular(&self, e: u32) -> bool {
        assert!(e >= 2, "modulus must be at least 2");
        let e = e as usize;
        // Parts are weakly decreasing, so a window whose endpoints agree
        // is constant throughout.
        !self.parts.windows(e).any(|w| w[0] == w[e - 1])
    }

    /// All successive differences < e, including the step down to zero
    /// after the last part.  Equivalently, the conjugate is e-regular.
    pub fn is_e_restricted(&self, e: u32) -> bool {
        assert!(e >= 2, "modulus must be at least 2");
        for i in 1..=self.parts.len() {
            if self.part(i) - self.part(i + 1) >= e {
                return false;
            }
        }
        true
    }

    /// Partitions of n in lexicographically decreasing order.
    pub fn all_of_size(n: u64) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(remaining: u64, max: u64, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: current.clone(),
                });
                return;
            }
            let mut p = remaining.min(max);
            while p >= 1 {
                current.push(p as u32);
                rec(remaining - p, p, current, out);
                current.pop();
                p -= 1;
            }
        }
        rec(n, n.max(1), &mut current, &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated weakly decreasing positive integers; the literal
    /// token `0` denotes the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Partition::empty());
        }
        let parts: std::result::Result<Vec<u32>, _> =
            s.split(',').map(|t| t.trim().parse::<u32>()).collect();
        let parts = parts.map_err(|_| Error::MalformedPartition(s.to_string()))?;
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::MalformedPartition(s.to_string()));
        }
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

/// A cell of a Young diagram, rows and columns 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Node {
    pub row: u32,
    pub col: u32,
}

impl Node {
    pub fn new(row: u32, col: u32) -> Self {
        Node { row, col }
    }

    /// (col - row) mod e.
    pub fn residue(&self, e: u32) -> u32 {
        residue_mod(self.col as i64 - self.row as i64, e)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NodeKind {
    Addable,
    Removable,
}

/// The addable (resp. removable) nodes of λ of residue k, ordered
/// top-to-bottom (strictly increasing row index).
pub fn nodes_by_residue(la: &Partition, e: u32, k: u32, kind: NodeKind) -> Vec<Node> {
    assert!(e >= 2, "modulus must be at least 2");
    assert!(k < e, "residue {k} out of range for modulus {e}");
    let mut out = Vec::new();
    match kind {
        NodeKind::Addable => {
            // A node can be added at row i iff the row is strictly shorter
            // than the one above (or i = 1); only rows 1..=num_parts+1 can
            // receive a node.
            for i in 1..=(la.num_parts() + 1) {
                let i_u = i as u32;
                if i == 1 || la.part(i - 1) > la.part(i) {
                    let node = Node::new(i_u, la.part(i) + 1);
                    if node.residue(e) == k {
                        out.push(node);
                    }
                }
            }
        }
        NodeKind::Removable => {
            for i in 1..=la.num_parts() {
                if la.part(i) > la.part(i + 1) {
                    let node = Node::new(i as u32, la.part(i));
                    if node.residue(e) == k {
                        out.push(node);
                    }
                }
            }
        }
    }
    out
}

/// Add a set of pairwise-distinct addable nodes simultaneously.  Each node
/// must be addable to λ itself (simultaneous addition of addable nodes of
/// a fixed residue is always consistent; in general consistency is checked
/// by re-validating the result).
pub fn add_nodes(la: &Partition, nodes: &[Node]) -> Result<Partition> {
    let mut parts: Vec<u32> = la.parts().to_vec();
    for (idx, node) in nodes.iter().enumerate() {
        let i = node.row as usize;
        let distinct_row = nodes[..idx].iter().all(|m| m.row != node.row);
        let addable =
            i >= 1 && node.col == la.part(i) + 1 && (i == 1 || la.part(i - 1) > la.part(i));
        if !addable || !distinct_row || i > parts.len() + 1 {
            return Err(Error::NotAddable {
                row: node.row,
                col: node.col,
                la: la.to_string(),
            });
        }
        if i == parts.len() + 1 {
            parts.push(0);
        }
        parts[i - 1] += 1;
    }
    Partition::new(parts).map_err(|_| Error::NotAddable {
        row: nodes.first().map_or(0, |n| n.row),
        col: nodes.first().map_or(0, |n| n.col),
        la: la.to_string(),
    })
}

/// Remove a set of pairwise-distinct removable nodes simultaneously.
pub fn remove_nodes(la: &Partition, nodes: &[Node]) -> Result<Partition> {
    let mut parts: Vec<u32> = la.parts().to_vec();
    for (idx, node) in nodes.iter().enumerate() {
        let i = node.row as usize;
        let distinct_row = nodes[..idx].iter().all(|m| m.row != node.row);
        let removable =
            i >= 1 && i <= parts.len() && node.col == la.part(i) && la.part(i) > la.part(i + 1);
        if !removable || !distinct_row {
            return Err(Error::NotAddable {
                row: node.row,
                col: node.col,
                la: la.to_string(),
            });
        }
        parts[i - 1] -= 1;
    }
    Partition::new(parts).map_err(|_| Error::NotAddable {
        row: nodes.first().map_or(0, |n| n.row),
        col: nodes.first().map_or(0, |n| n.col),
        la: la.to_string(),
    })
}

/// Parse helper used all over the test suites.
pub fn parse(s: &str) -> Partition {
    s.parse().expect("literal partition")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_examples() {
        let la = parse("9,7,4,4,2,1,1,1");
        assert_eq!(la.conjugate(), parse("8,5,4,4,2,2,2,1,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(parse("4,4,3,1,1,1").conjugate(), parse("6,3,3,2"));
    }

    #[test]
    fn conjugate_is_involutive_small() {
        for n in 0..=12 {
            for la in Partition::all_of_size(n) {
                assert_eq!(la.conjugate().conjugate(), la);
            }
        }
    }

    #[test]
    fn regularity() {
        assert!(parse("12,11,11,7,6,5,3,3,2").is_e_regular(3));
        assert!(!parse("1,1,1").is_e_regular(3));
        assert!(parse("2,2").is_e_regular(3));
        assert!(!parse("2,2").is_e_regular(2));
        assert!(Partition::empty().is_e_regular(2));
    }

    #[test]
    fn restrictedness() {
        assert!(parse("5,3,2").is_e_restricted(3));
        assert!(!parse("4").is_e_restricted(3));
        assert!(Partition::empty().is_e_restricted(2));
        // last part counts: (3,3) has 3 - 0 >= 3
        assert!(!parse("3,3").is_e_restricted(3));
    }

    #[test]
    fn regular_iff_conjugate_restricted() {
        for n in 0..=14 {
            for la in Partition::all_of_size(n) {
                for e in 2..=5u32 {
                    assert_eq!(
                        la.is_e_regular(e),
                        la.conjugate().is_e_restricted(e),
                        "λ={la} e={e}"
                    );
                }
            }
        }
    }

    #[test]
    fn nodes_examples() {
        let one = parse("1");
        assert_eq!(
            nodes_by_residue(&one, 2, 1, NodeKind::Addable),
            vec![Node::new(1, 2), Node::new(2, 1)]
        );
        assert_eq!(
            nodes_by_residue(&Partition::empty(), 3, 0, NodeKind::Addable),
            vec![Node::new(1, 1)]
        );
        assert!(nodes_by_residue(&Partition::empty(), 3, 1, NodeKind::Removable).is_empty());
    }

    #[test]
    fn addable_count_exceeds_removable_by_one() {
        for n in 0..=12 {
            for la in Partition::all_of_size(n) {
                for e in 2..=4u32 {
                    let addable: usize = (0..e)
                        .map(|k| nodes_by_residue(&la, e, k, NodeKind::Addable).len())
                        .sum();
                    let removable: usize = (0..e)
                        .map(|k| nodes_by_residue(&la, e, k, NodeKind::Removable).len())
                        .sum();
                    assert_eq!(addable, removable + 1, "λ={la} e={e}");
                }
            }
        }
    }

    #[test]
    fn add_nodes_examples() {
        assert_eq!(
            add_nodes(&Partition::empty(), &[Node::new(1, 1)]).unwrap(),
            parse("1")
        );
        assert_eq!(
            add_nodes(&parse("1"), &[Node::new(1, 2), Node::new(2, 1)]).unwrap(),
            parse("2,1")
        );
        assert_eq!(add_nodes(&parse("2,1"), &[]).unwrap(), parse("2,1"));
        assert!(add_nodes(&parse("2,1"), &[Node::new(3, 2)]).is_err());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(parse("14,11,9,5,4,1,1,1,1,1").to_string(), "14,11,9,5,4,1,1,1,1,1");
        assert_eq!(Partition::empty().to_string(), "0");
        assert_eq!(parse("0"), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("3,0,1".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
    }

    #[test]
    fn partition_counts() {
        assert_eq!(Partition::all_of_size(0).len(), 1);
        assert_eq!(Partition::all_of_size(5).len(), 7);
        assert_eq!(Partition::all_of_size(10).len(), 42);
    }
}
