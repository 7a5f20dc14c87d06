//! The Mullineux map m and its conjugate, computed by the good-node
//! signature rule and cross-checked against an independent rim-stripping
//! characterization.  Also the canonical-basis oracle that recovers
//! m(μ)′ as the unique member whose q-decomposition coefficient is q^w.

use crate::abacus::{e_core, e_weight, BetaSet};
use crate::canonical::BlockTable;
use crate::laurent::LaurentPoly;
use crate::partition::{add_nodes, nodes_by_residue, remove_nodes, Node, NodeKind, Partition};
use crate::{BlockId, Error, Result};
use serde::Serialize;
use std::collections::BTreeSet;

/// One rim strip on the abacus: the bead moves (from, to), the number of
/// nodes removed, the stripped partition, and the bead count the walk ran
/// at (the moves depend on it; the rim length and result do not).
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RimStrip {
    pub pairs: Vec<(u64, u64)>,
    pub rim_length: u64,
    pub result: Partition,
    pub r: usize,
}

fn default_bead_count(la: &Partition, e: u32) -> usize {
    la.num_parts() + la.size() as usize + e as usize
}

/// Strip the e-rim of an e-regular partition at a chosen bead count:
/// starting from the highest bead, repeatedly slide down to the first
/// gap on the bead's runner, then restart from the highest bead below;
/// stop when the slide target would fall below the first empty position
/// γ, or when a fully occupied runner forces the final bead to γ itself.
pub fn strip_rim_at(mu: &Partition, e: u32, r: usize) -> Result<RimStrip> {
    assert!(e >= 2, "modulus must be at least 2");
    if mu.is_empty() {
        return Err(Error::EmptyPartition);
    }
    if !mu.is_e_regular(e) {
        return Err(Error::NotRegular {
            la: mu.to_string(),
            e,
        });
    }
    let beta = BetaSet::from_partition(mu, r)?;
    let occupied: BTreeSet<u64> = beta.entries().iter().copied().collect();
    let gamma = (r - mu.num_parts()) as u64;
    let e64 = e as u64;

    let mut pairs = Vec::new();
    let mut b = *occupied.iter().next_back().expect("mu is nonempty");
    loop {
        let mut gap = None;
        let mut z = b;
        while z >= e64 {
            z -= e64;
            if !occupied.contains(&z) {
                gap = Some(z);
                break;
            }
        }
        match gap {
            None => {
                // The runner below b is fully occupied: the bead lands on
                // the first empty position and the walk ends.
                pairs.push((b, gamma));
                break;
            }
            Some(j) => {
                pairs.push((b, j));
                match occupied.range(..j).next_back().copied() {
                    Some(p) if p >= gamma => b = p,
                    _ => break,
                }
            }
        }
    }

    finish_strip(&occupied, pairs, r)
}

/// As [`strip_rim_at`] with a bead count comfortably inside the range
/// where the walk stabilises.
pub fn strip_rim(mu: &Partition, e: u32) -> Result<RimStrip> {
    let r = default_bead_count(mu, e);
    let strip = strip_rim_at(mu, e, r)?;
    debug_assert!({
        let again = strip_rim_at(mu, e, r + 1)?;
        again.rim_length == strip.rim_length && again.result == strip.result
    });
    Ok(strip)
}

/// Strip the conjugate e-rim of an e-restricted partition at a chosen
/// bead count: starting from the first empty position ε, repeatedly jump
/// up to the first bead on the same runner, then restart from the first
/// empty position above it; a fully empty runner forces the final jump
/// to come from the highest bead δ.
pub fn strip_rim_conj_at(nu: &Partition, e: u32, r: usize) -> Result<RimStrip> {
    assert!(e >= 2, "modulus must be at least 2");
    if nu.is_empty() {
        return Err(Error::EmptyPartition);
    }
    if !nu.is_e_restricted(e) {
        return Err(Error::NotRestricted {
            la: nu.to_string(),
            e,
        });
    }
    let beta = BetaSet::from_partition(nu, r)?;
    let occupied: BTreeSet<u64> = beta.entries().iter().copied().collect();
    let delta = *occupied.iter().next_back().expect("nu is nonempty");
    let e64 = e as u64;

    let mut pairs_rev = Vec::new();
    let mut g = (r - nu.num_parts()) as u64;
    loop {
        let mut found = None;
        let mut z = g;
        loop {
            z += e64;
            if z > delta {
                break;
            }
            if occupied.contains(&z) {
                found = Some(z);
                break;
            }
        }
        match found {
            None => {
                // The runner above g is empty all the way up: the highest
                // bead makes the final jump and the walk ends.
                pairs_rev.push((delta, g));
                break;
            }
            Some(f) => {
                pairs_rev.push((f, g));
                let mut p = f + 1;
                while occupied.contains(&p) {
                    p += 1;
                }
                if p > delta {
                    break;
                }
                g = p;
            }
        }
    }

    pairs_rev.reverse();
    finish_strip(&occupied, pairs_rev, r)
}

/// As [`strip_rim_conj_at`] at the default bead count.
pub fn strip_rim_conj(nu: &Partition, e: u32) -> Result<RimStrip> {
    let r = default_bead_count(nu, e);
    let strip = strip_rim_conj_at(nu, e, r)?;
    debug_assert!({
        let again = strip_rim_conj_at(nu, e, r + 1)?;
        again.rim_length == strip.rim_length && again.result == strip.result
    });
    Ok(strip)
}

fn finish_strip(occupied: &BTreeSet<u64>, pairs: Vec<(u64, u64)>, r: usize) -> Result<RimStrip> {
    let mut entries = occupied.clone();
    let mut rim_length = 0;
    for &(from, to) in &pairs {
        assert!(from > to, "bead moves must descend");
        assert!(entries.remove(&from), "move source must be occupied");
        assert!(entries.insert(to), "move target must be empty");
        rim_length += from - to;
    }
    let result = BetaSet::from_entries(entries.into_iter().collect())
        .expect("moves keep entries distinct")
        .to_partition();
    Ok(RimStrip {
        pairs,
        rim_length,
        result,
        r,
    })
}

/// The residue-k signature of λ: one letter per row carrying an addable
/// (true) or removable (false) residue-k node, in increasing row order.
fn signature(la: &Partition, e: u32, k: u32) -> Vec<(Node, bool)> {
    let addable = nodes_by_residue(la, e, k, NodeKind::Addable);
    let removable = nodes_by_residue(la, e, k, NodeKind::Removable);
    let mut letters: Vec<(Node, bool)> = addable
        .into_iter()
        .map(|n| (n, true))
        .chain(removable.into_iter().map(|n| (n, false)))
        .collect();
    letters.sort_unstable_by_key(|(n, _)| n.row);
    letters
}

/// The good addable residue-k node: after cancelling each addable letter
/// with a later removable one, the earliest surviving addable.
pub fn good_addable(la: &Partition, e: u32, k: u32) -> Option<Node> {
    let mut stack: Vec<Node> = Vec::new();
    for (node, is_addable) in signature(la, e, k) {
        if is_addable {
            stack.push(node);
        } else if !stack.is_empty() {
            stack.pop();
        }
    }
    stack.first().copied()
}

/// The good removable residue-k node: the latest removable letter not
/// cancelled by an earlier addable one.
pub fn good_removable(la: &Partition, e: u32, k: u32) -> Option<Node> {
    let mut open_addable = 0usize;
    let mut survivor = None;
    for (node, is_addable) in signature(la, e, k) {
        if is_addable {
            open_addable += 1;
        } else if open_addable > 0 {
            open_addable -= 1;
        } else {
            survivor = Some(node);
        }
    }
    survivor
}

/// Add the good addable residue-k node, if any.
pub fn crystal_f(la: &Partition, e: u32, k: u32) -> Option<Partition> {
    good_addable(la, e, k)
        .map(|n| add_nodes(la, &[n]).expect("good addable node is addable"))
}

/// Remove the good removable residue-k node, if any.
pub fn crystal_e(la: &Partition, e: u32, k: u32) -> Option<Partition> {
    good_removable(la, e, k)
        .map(|n| remove_nodes(la, &[n]).expect("good removable node is removable"))
}

/// The Mullineux map on e-regular partitions: peel μ to ∅ along good
/// removable nodes, then rebuild along the mirror path with all residues
/// negated.  The result is checked against the rim-stripping
/// characterization before being returned.
pub fn mullineux(mu: &Partition, e: u32) -> Result<Partition> {
    assert!(e >= 2, "modulus must be at least 2");
    if !mu.is_e_regular(e) {
        return Err(Error::NotRegular {
            la: mu.to_string(),
            e,
        });
    }
    let mut seq = Vec::new();
    let mut nu = mu.clone();
    while !nu.is_empty() {
        let (k, next) = (0..e)
            .find_map(|k| crystal_e(&nu, e, k).map(|next| (k, next)))
            .expect("a nonempty regular partition has a good removable node");
        seq.push(k);
        nu = next;
    }
    let mut rho = Partition::empty();
    for &k in seq.iter().rev() {
        let mirrored = (e - k) % e;
        rho = crystal_f(&rho, e, mirrored)
            .expect("the mirrored path is applicable at every step");
    }
    assert!(
        check_mull_characterization(mu, &rho.conjugate(), e),
        "good-node result {rho} fails the rim characterization for {mu} (e={e})"
    );
    Ok(rho)
}

/// m(μ)′, the conjugate of the Mullineux image (an e-restricted
/// partition when μ is e-regular).
pub fn mullineux_conjugate(mu: &Partition, e: u32) -> Result<Partition> {
    Ok(mullineux(mu, e)?.conjugate())
}

/// Checks that ρ = m(μ)′ via the rim recursion: ρ must be e-restricted
/// with first part determined by the rim length of μ, strip to the same
/// rim length, and strip to the image of the stripped μ.
pub fn check_mull_characterization(mu: &Partition, rho: &Partition, e: u32) -> bool {
    if mu.is_empty() {
        return rho.is_empty();
    }
    if !mu.is_e_regular(e) || !rho.is_e_restricted(e) {
        return false;
    }
    let strip = match strip_rim(mu, e) {
        Ok(s) => s,
        Err(_) => return false,
    };
    let rim = strip.rim_length;
    let cols = mu.num_parts() as u64;
    if rim < cols {
        return false;
    }
    let l = if rim % e as u64 == 0 {
        rim - cols
    } else {
        rim - cols + 1
    };
    if rho.part(1) as u64 != l {
        return false;
    }
    let conj_strip = match strip_rim_conj(rho, e) {
        Ok(s) => s,
        Err(_) => return false,
    };
    if conj_strip.rim_length != rim {
        return false;
    }
    let expected = match mullineux_conjugate(&strip.result, e) {
        Ok(p) => p,
        Err(_) => return false,
    };
    conj_strip.result == expected
}

/// Recovers m(μ)′ from the canonical basis alone: the unique member of
/// μ's block whose coefficient in G(μ) is exactly q^w.
pub fn welk_oracle(mu: &Partition, e: u32) -> Result<Partition> {
    if !mu.is_e_regular(e) {
        return Err(Error::NotRegular {
            la: mu.to_string(),
            e,
        });
    }
    let w = e_weight(mu, e);
    let id = BlockId::new(e, e_core(mu, e), w).expect("e_core returns a core");
    let table = BlockTable::build(&id);
    let j = table.index_of(mu).expect("mu lies in its own block");
    let col = table.canonical_column(j);
    let target = LaurentPoly::q_power(w as i64);
    let hits: Vec<&Partition> = table
        .members()
        .iter()
        .zip(&col)
        .filter(|(_, c)| **c == target)
        .map(|(la, _)| la)
        .collect();
    assert_eq!(
        hits.len(),
        1,
        "exactly one coefficient of G({mu}) should equal q^{w} (e={e})"
    );
    Ok(hits[0].clone())
}
