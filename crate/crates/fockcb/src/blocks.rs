//! Blocks (e-core + e-weight classes), their enumeration, Scopes moves
//! between blocks, Scopes-class reduction, and the fixed-weight sets of
//! q-decomposition values D^e_w.

use crate::abacus::{e_core, e_weight, BetaSet};
use crate::canonical::BlockTable;
use crate::laurent::LaurentPoly;
use crate::partition::{add_nodes, nodes_by_residue, remove_nodes, NodeKind, Partition};
use crate::{Error, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A block: the class of partitions sharing an e-core and e-weight.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct BlockId {
    pub e: u32,
    pub core: Partition,
    pub weight: u64,
}

impl BlockId {
    /// Validates that `core` really is an e-core.
    pub fn new(e: u32, core: Partition, weight: u64) -> Result<Self> {
        assert!(e >= 2, "modulus must be at least 2");
        if e_core(&core, e) != core {
            return Err(Error::NotACore {
                core: core.to_string(),
                e,
                w: weight,
            });
        }
        Ok(BlockId { e, core, weight })
    }

    /// |core| + e·weight, the size of every member.
    pub fn member_size(&self) -> u64 {
        self.core.size() + self.e as u64 * self.weight
    }

    /// A bead count large enough that every member of the block fits on
    /// the display and every runner can absorb the full weight; rounded
    /// to a multiple of e so runner d = (r+k) mod e = k.
    pub fn common_bead_count(&self) -> usize {
        let n = self.member_size() as usize + self.e as usize;
        n.next_multiple_of(self.e as usize)
    }
}

/// All partitions with the given e-core and e-weight.  The weight is
/// distributed over the runners of the core's display; on a runner with c
/// beads, the bead displacements read off a partition with at most c
/// parts, and every such choice yields a distinct member.
pub fn enumerate_block(id: &BlockId) -> Vec<Partition> {
    let e = id.e;
    let r = id.common_bead_count();
    let base = BetaSet::from_partition(&id.core, r).expect("r exceeds core part count");
    let runner_counts: Vec<usize> = (0..e).map(|j| base.runner_rows(e, j).len()).collect();

    let mut members = Vec::new();
    let mut split = vec![0u64; e as usize];
    distribute(&mut split, 0, id.weight, &mut |split| {
        let mut per_runner: Vec<Vec<Vec<u64>>> = Vec::with_capacity(e as usize);
        for j in 0..e as usize {
            let c = runner_counts[j];
            let choices: Vec<Vec<u64>> = Partition::all_of_size(split[j])
                .into_iter()
                .filter(|nu| nu.num_parts() <= c)
                .map(|nu| {
                    // Displaced rows, strictly decreasing: ν_i + c - i.
                    (1..=c)
                        .map(|i| nu.part(i) as u64 + (c - i) as u64)
                        .collect()
                })
                .collect();
            per_runner.push(choices);
        }
        let mut picks = vec![0usize; e as usize];
        assemble(&per_runner, &mut picks, 0, e, &mut |rows_by_runner| {
            let mut entries = Vec::with_capacity(r);
            for (j, rows) in rows_by_runner.iter().enumerate() {
                for &row in *rows {
                    entries.push(j as u64 + row * e as u64);
                }
            }
            members.push(
                BetaSet::from_entries(entries)
                    .expect("rows per runner are distinct")
                    .to_partition(),
            );
        });
    });
    members.sort_unstable_by(|a, b| b.cmp(a));
    members
}

fn distribute(split: &mut [u64], idx: usize, remaining: u64, f: &mut impl FnMut(&[u64])) {
    if idx + 1 == split.len() {
        split[idx] = remaining;
        f(split);
        return;
    }
    for take in 0..=remaining {
        split[idx] = take;
        distribute(split, idx + 1, remaining - take, f);
    }
}

fn assemble<'a>(
    per_runner: &'a [Vec<Vec<u64>>],
    picks: &mut [usize],
    j: usize,
    e: u32,
    f: &mut impl FnMut(Vec<&'a Vec<u64>>),
) {
    if j == e as usize {
        let rows: Vec<&Vec<u64>> = (0..e as usize)
            .map(|i| &per_runner[i][picks[i]])
            .collect();
        f(rows);
        return;
    }
    for p in 0..per_runner[j].len() {
        picks[j] = p;
        assemble(per_runner, picks, j + 1, e, f);
    }
}

/// Brute-force block enumeration for cross-checking: filter all
/// partitions of the member size by e-core.
pub fn brute_force_block(id: &BlockId) -> Vec<Partition> {
    let n = id.member_size();
    let mut members: Vec<Partition> = Partition::all_of_size(n)
        .into_iter()
        .filter(|la| e_core(la, id.e) == id.core)
        .collect();
    members.sort_unstable_by(|a, b| b.cmp(a));
    members
}

/// Add all addable residue-k nodes of λ at once.  Errors if λ has any
/// removable residue-k node (the move is only defined without them).
pub fn scopes_phi(la: &Partition, e: u32, k: u32) -> Result<Partition> {
    let removable = nodes_by_residue(la, e, k, NodeKind::Removable);
    if !removable.is_empty() {
        return Err(Error::RemovableNodesPresent {
            la: la.to_string(),
            k,
        });
    }
    let addable = nodes_by_residue(la, e, k, NodeKind::Addable);
    add_nodes(la, &addable)
}

/// Remove all removable residue-k nodes of λ at once (the inverse move).
/// Errors if λ has any addable residue-k node.
pub fn scopes_strip(la: &Partition, e: u32, k: u32) -> Result<Partition> {
    let addable = nodes_by_residue(la, e, k, NodeKind::Addable);
    if !addable.is_empty() {
        return Err(Error::RemovableNodesPresent {
            la: la.to_string(),
            k,
        });
    }
    let removable = nodes_by_residue(la, e, k, NodeKind::Removable);
    remove_nodes(la, &removable)
}

/// One Scopes move: the source core has `a` addable residue-k nodes with
/// a ≥ weight, and the move adds them all.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ScopesMove {
    pub k: u32,
    pub a: usize,
}

/// The Scopes-adjacent block in direction k, together with the member
/// bijection Φ (pairs (λ, Φ(λ)) in the enumeration order of the source).
pub fn scopes_adjacent(
    id: &BlockId,
    k: u32,
) -> Result<(BlockId, Vec<(Partition, Partition)>)> {
    let a = nodes_by_residue(&id.core, id.e, k, NodeKind::Addable).len();
    if (a as u64) < id.weight {
        return Err(Error::ScopesHypothesisFails {
            a,
            k,
            w: id.weight,
        });
    }
    let gamma = scopes_phi(&id.core, id.e, k)?;
    let target = BlockId::new(id.e, gamma, id.weight)?;
    let mut pairs = Vec::new();
    for la in enumerate_block(id) {
        let image = scopes_phi(&la, id.e, k)?;
        pairs.push((la, image));
    }
    Ok((target, pairs))
}

/// Greedy Scopes reduction: repeatedly strip all removable residue-k
/// nodes from the core whenever their count is at least max(weight, 1),
/// always choosing the smallest such k, until no move applies.  Returns
/// the representative block and the trace of applied inverse moves.
pub fn scopes_reduce(id: &BlockId) -> (BlockId, Vec<(ScopesMove, Partition)>) {
    let mut core = id.core.clone();
    let mut trace = Vec::new();
    let threshold = id.weight.max(1) as usize;
    'outer: loop {
        for k in 0..id.e {
            let removable = nodes_by_residue(&core, id.e, k, NodeKind::Removable);
            let b = removable.len();
            if b >= threshold
                && nodes_by_residue(&core, id.e, k, NodeKind::Addable).is_empty()
            {
                core = remove_nodes(&core, &removable).expect("nodes reported removable");
                trace.push((ScopesMove { k, a: b }, core.clone()));
                continue 'outer;
            }
        }
        break;
    }
    let reduced = BlockId::new(id.e, core, id.weight).expect("stripping a core yields a core");
    (reduced, trace)
}

/// All e-cores of size at most `max_size`, ascending by (size, lex).
pub fn cores_up_to(e: u32, max_size: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    for n in 0..=max_size {
        let mut level: Vec<Partition> = Partition::all_of_size(n)
            .into_iter()
            .filter(|la| e_weight(la, e) == 0)
            .collect();
        level.sort_unstable();
        out.extend(level);
    }
    out
}

/// The set of q-decomposition values over weight-w blocks whose cores
/// have size at most `max_core_size`, deduplicated through Scopes
/// reduction, always including 0.  Returns the value set together with
/// the representative blocks actually computed.
pub fn d_set(e: u32, w: u64, max_core_size: u64) -> (BTreeSet<LaurentPoly>, Vec<BlockId>) {
    let mut reps = BTreeSet::new();
    for core in cores_up_to(e, max_core_size) {
        let id = BlockId::new(e, core, w).expect("filtered to cores");
        let (rep, _) = scopes_reduce(&id);
        reps.insert(rep);
    }
    let reps: Vec<BlockId> = reps.into_iter().collect();
    let per_block: Vec<BTreeSet<LaurentPoly>> = reps
        .par_iter()
        .map(|id| {
            let table = BlockTable::build(id);
            let mut vals = BTreeSet::new();
            for col in 0..table.members().len() {
                for d in table.canonical_column(col) {
                    vals.insert(d);
                }
            }
            vals
        })
        .collect();
    let mut out: BTreeSet<LaurentPoly> = per_block.into_iter().flatten().collect();
    out.insert(LaurentPoly::zero());
    (out, reps)
}
