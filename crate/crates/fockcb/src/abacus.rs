//! Beta-sets and abacus displays: e-cores, e-weights, k-emptiness, the
//! statistic U_k, runner removal, extended beta-sets, weight multisets,
//! the refined dominance order, and the pair-count n_{r,k}.
//!
//! An r-bead beta-set for λ is {λ_i + r - i : 1 ≤ i ≤ r}.  Placing bead z
//! on runner z mod e at row (z - z mod e)/e gives the abacus display;
//! sliding every bead as high as possible yields the e-core, and the total
//! slide distance (in steps of e) is the e-weight.

use crate::partition::Partition;
use crate::{residue_mod, Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// An r-bead beta-set: r distinct non-negative integers, stored strictly
/// decreasing, with entries[i] = λ_i + r - i (1-based).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "BetaSetRepr", into = "BetaSetRepr")]
pub struct BetaSet {
    r: usize,
    entries: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct BetaSetRepr {
    r: usize,
    entries: Vec<u64>,
}

impl TryFrom<BetaSetRepr> for BetaSet {
    type Error = Error;
    fn try_from(repr: BetaSetRepr) -> Result<Self> {
        if repr.entries.len() != repr.r {
            return Err(Error::MalformedBetaSet);
        }
        BetaSet::from_entries(repr.entries)
    }
}

impl From<BetaSet> for BetaSetRepr {
    fn from(b: BetaSet) -> BetaSetRepr {
        BetaSetRepr {
            r: b.r,
            entries: b.entries,
        }
    }
}

impl BetaSet {
    /// The r-bead beta-set of λ.  Requires r ≥ number of positive parts.
    pub fn from_partition(la: &Partition, r: usize) -> Result<Self> {
        if r < la.num_parts() {
            return Err(Error::BeadCountTooSmall {
                r,
                parts: la.num_parts(),
            });
        }
        let entries = (1..=r)
            .map(|i| la.part(i) as u64 + (r - i) as u64)
            .collect();
        Ok(BetaSet { r, entries })
    }

    /// Build from an explicit set of distinct non-negative integers.
    pub fn from_entries(mut entries: Vec<u64>) -> Result<Self> {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        if entries.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::MalformedBetaSet);
        }
        let r = entries.len();
        Ok(BetaSet { r, entries })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Entries in strictly decreasing order.
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// Recover the partition: λ_i = entries[i] - r + i.
    pub fn to_partition(&self) -> Partition {
        let r = self.r as u64;
        let parts: Vec<u32> = self
            .entries
            .iter()
            .enumerate()
            .map(|(idx, &b)| (b + idx as u64 + 1 - r) as u32)
            .collect();
        Partition::new(parts).expect("beta-set entries decode to a partition")
    }

    /// The (r+s)-bead beta-set of the same partition.
    pub fn shifted(&self, s: usize) -> BetaSet {
        let mut entries: Vec<u64> = self.entries.iter().map(|&b| b + s as u64).collect();
        entries.extend((0..s as u64).rev());
        BetaSet {
            r: self.r + s,
            entries,
        }
    }

    /// Beads on runner j (positions ≡ j mod e), as their row indices in
    /// increasing order.
    pub fn runner_rows(&self, e: u32, j: u32) -> Vec<u64> {
        let e64 = e as u64;
        let mut rows: Vec<u64> = self
            .entries
            .iter()
            .filter(|&&b| b % e64 == j as u64)
            .map(|&b| b / e64)
            .collect();
        rows.sort_unstable();
        rows
    }
}

impl fmt::Display for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.entries.iter().map(|b| b.to_string()).collect();
        write!(f, "{{{}}}", strs.join(","))
    }
}

/// The runner data attached to (λ, e, k, r): d = (r + k) mod e and the
/// number c of beads on runner d.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RunnerParams {
    pub e: u32,
    pub k: u32,
    pub d: u32,
    pub c: usize,
}

/// A finite multiset of non-negative integers.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct IntMultiset {
    counts: BTreeMap<u64, u64>,
}

impl IntMultiset {
    pub fn new() -> Self {
        IntMultiset::default()
    }

    pub fn insert(&mut self, value: u64) {
        *self.counts.entry(value).or_insert(0) += 1;
    }

    pub fn multiplicity(&self, value: u64) -> u64 {
        self.counts.get(&value).copied().unwrap_or(0)
    }

    /// Total size counting multiplicity.
    pub fn size(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// (value, multiplicity) pairs ascending by value.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.counts.iter().map(|(&v, &m)| (v, m))
    }

    /// All values expanded with multiplicity, descending.
    pub fn expanded_desc(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.size() as usize);
        for (&v, &m) in self.counts.iter().rev() {
            for _ in 0..m {
                out.push(v);
            }
        }
        out
    }

    /// Multiset difference self - other; None unless other ⊆ self.
    pub fn difference(&self, other: &IntMultiset) -> Option<IntMultiset> {
        let mut counts = self.counts.clone();
        for (&v, &m) in &other.counts {
            let have = counts.get_mut(&v)?;
            if *have < m {
                return None;
            }
            *have -= m;
            if *have == 0 {
                counts.remove(&v);
            }
        }
        Some(IntMultiset { counts })
    }

    /// Disjoint union (multiplicities add).
    pub fn union(&self, other: &IntMultiset) -> IntMultiset {
        let mut out = self.clone();
        for (&v, &m) in &other.counts {
            *out.counts.entry(v).or_insert(0) += m;
        }
        out
    }

    /// Number of entries (with multiplicity) strictly greater than x.
    pub fn count_greater(&self, x: u64) -> u64 {
        self.counts
            .range((x + 1)..)
            .map(|(_, &m)| m)
            .sum()
    }
}

impl FromIterator<u64> for IntMultiset {
    fn from_iter<T: IntoIterator<Item = u64>>(iter: T) -> Self {
        let mut out = IntMultiset::new();
        for v in iter {
            out.insert(v);
        }
        out
    }
}

impl Serialize for IntMultiset {
    /// `[[value, multiplicity], …]` ascending by value.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<(u64, u64)> = self.iter().collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMultiset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<(u64, u64)> = Vec::deserialize(d)?;
        let mut out = IntMultiset::new();
        for (v, m) in pairs {
            *out.counts.entry(v).or_insert(0) += m;
        }
        out.counts.retain(|_, m| *m > 0);
        Ok(out)
    }
}

impl fmt::Display for IntMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut strs = Vec::new();
        for (v, m) in self.iter() {
            for _ in 0..m {
                strs.push(v.to_string());
            }
        }
        write!(f, "{{{}}}", strs.join(","))
    }
}

fn internal_beta(la: &Partition) -> BetaSet {
    let r = la.num_parts().max(1);
    BetaSet::from_partition(la, r).expect("r >= number of parts")
}

/// The e-core: slide all beads up their runners as far as they will go.
pub fn e_core(la: &Partition, e: u32) -> Partition {
    assert!(e >= 2, "modulus must be at least 2");
    let b = internal_beta(la);
    let e64 = e as u64;
    let mut entries = Vec::with_capacity(b.r());
    for j in 0..e {
        let c = b.runner_rows(e, j).len() as u64;
        for row in 0..c {
            entries.push(j as u64 + row * e64);
        }
    }
    BetaSet::from_entries(entries)
        .expect("packed positions are distinct")
        .to_partition()
}

/// The e-weight: total bead slide distance to reach the core, in units
/// of e.  Computed per runner as Σ rows - (0 + 1 + … + (c-1)).
pub fn e_weight(la: &Partition, e: u32) -> u64 {
    assert!(e >= 2, "modulus must be at least 2");
    let b = internal_beta(la);
    let mut w = 0u64;
    for j in 0..e {
        let rows = b.runner_rows(e, j);
        let c = rows.len() as u64;
        let packed = c * (c.saturating_sub(1)) / 2;
        w += rows.iter().sum::<u64>() - packed;
    }
    w
}

/// Runner data (d, c) for the r-bead display.
pub fn runner_params(la: &Partition, e: u32, k: u32, r: usize) -> Result<RunnerParams> {
    assert!(e >= 2 && k < e, "need e >= 2 and 0 <= k < e");
    let b = BetaSet::from_partition(la, r)?;
    let d = residue_mod(r as i64 + k as i64, e);
    let c = b.runner_rows(e, d).len();
    Ok(RunnerParams { e, k, d, c })
}

/// True iff all beads on runner d = (r+k) mod e sit as high as possible.
/// Independent of the choice of r.
pub fn is_k_empty(la: &Partition, e: u32, k: u32) -> bool {
    assert!(e >= 2 && k < e, "need e >= 2 and 0 <= k < e");
    let b = internal_beta(la);
    let d = residue_mod(b.r() as i64 + k as i64, e);
    let rows = b.runner_rows(e, d);
    rows.iter().enumerate().all(|(i, &row)| row == i as u64)
}

/// The position map used when deleting runner d: φ_d(z) = z - ⌊(z+e-d)/e⌋.
/// Rejects z ≡ d (mod e) (those positions disappear with the runner).
pub fn phi_d(z: u64, e: u32, d: u32) -> Result<u64> {
    assert!(e >= 2 && d < e, "need e >= 2 and 0 <= d < e");
    if residue_mod(z as i64, e) == d {
        return Err(Error::OnDeletedRunner { z, d, e });
    }
    let zi = z as i64;
    let ei = e as i64;
    let di = d as i64;
    Ok((zi - (zi + ei - di).div_euclid(ei)) as u64)
}

/// Delete runner d from the display of a k-empty partition, producing the
/// modulus-(e-1) partition read off the remaining runners.
pub fn remove_runner(la: &Partition, e: u32, k: u32) -> Result<Partition> {
    assert!(e >= 3, "runner removal needs modulus at least 3");
    assert!(k < e, "residue {k} out of range for modulus {e}");
    if !is_k_empty(la, e, k) {
        let r = la.num_parts().max(1);
        let d = residue_mod(r as i64 + k as i64, e);
        return Err(Error::NotKEmpty {
            la: la.to_string(),
            e,
            k,
            d,
        });
    }
    let b = internal_beta(la);
    let d = residue_mod(b.r() as i64 + k as i64, e);
    let e64 = e as u64;
    let mut entries = Vec::new();
    for &z in b.entries() {
        if z % e64 != d as u64 {
            entries.push(phi_d(z, e, d).expect("entry is off the deleted runner"));
        }
    }
    Ok(BetaSet::from_entries(entries)
        .expect("phi_d is injective off runner d")
        .to_partition())
}

/// The e-extension of the r-bead beta-set: multiplicity of z is the number
/// of beads in {z, z+e, z+2e, …}.
pub fn extended_beta_set(la: &Partition, e: u32, r: usize) -> Result<IntMultiset> {
    assert!(e >= 2, "modulus must be at least 2");
    let b = BetaSet::from_partition(la, r)?;
    let mut out = IntMultiset::new();
    for &beta in b.entries() {
        let mut z = beta as i64;
        while z >= 0 {
            out.insert(z as u64);
            z -= e as i64;
        }
    }
    Ok(out)
}

/// 𝔛^e_r(λ) minus 𝔛^e_r(core); one entry per bead slide, recording the
/// slid-from position.  Size equals the e-weight.
pub fn weight_multiset(la: &Partition, e: u32, r: usize) -> Result<IntMultiset> {
    let full = extended_beta_set(la, e, r)?;
    let core = extended_beta_set(&e_core(la, e), e, r)?;
    Ok(full
        .difference(&core)
        .expect("the core extension embeds in the full extension"))
}

/// I ≽ J: equal sizes, and sorting both descending gives pointwise ≥.
pub fn bruhat_geq(i: &IntMultiset, j: &IntMultiset) -> bool {
    if i.size() != j.size() {
        return false;
    }
    i.expanded_desc()
        .iter()
        .zip(j.expanded_desc().iter())
        .all(|(a, b)| a >= b)
}

/// The refined dominance order: same e-core and 𝔛^e_r(μ) ≽ 𝔛^e_r(λ) for
/// a common r.  Partitions in different blocks are incomparable.
pub fn dominates(mu: &Partition, la: &Partition, e: u32) -> bool {
    assert!(e >= 2, "modulus must be at least 2");
    if mu == la {
        return true;
    }
    if mu.size() != la.size() || e_core(mu, e) != e_core(la, e) {
        return false;
    }
    let r = (mu.size().max(la.size()) as usize) + e as usize;
    let xm = extended_beta_set(mu, e, r).expect("r exceeds both part counts");
    let xl = extended_beta_set(la, e, r).expect("r exceeds both part counts");
    bruhat_geq(&xm, &xl)
}

/// U_k(λ): the number of entries of 𝔛^e_r(λ) (with multiplicity) greater
/// than d + ce.  Requires λ k-empty; independent of r.
pub fn ux(la: &Partition, e: u32, k: u32) -> Result<u64> {
    assert!(e >= 2 && k < e, "need e >= 2 and 0 <= k < e");
    let r = la.num_parts().max(1);
    if !is_k_empty(la, e, k) {
        let d = residue_mod(r as i64 + k as i64, e);
        return Err(Error::NotKEmpty {
            la: la.to_string(),
            e,
            k,
            d,
        });
    }
    let params = runner_params(la, e, k, r)?;
    let x = extended_beta_set(la, e, r)?;
    Ok(x.count_greater(params.d as u64 + params.c as u64 * e as u64))
}

/// The bead-by-bead formula for U_k: Σ over β in the r-bead beta-set of
/// ⌊(β - d - (c-1)e)/e⌋, with beads below d + (c-1)e contributing 0.
pub fn ux_alt(la: &Partition, e: u32, k: u32, r: usize) -> Result<u64> {
    assert!(e >= 2 && k < e, "need e >= 2 and 0 <= k < e");
    if !is_k_empty(la, e, k) {
        let d = residue_mod(r as i64 + k as i64, e);
        return Err(Error::NotKEmpty {
            la: la.to_string(),
            e,
            k,
            d,
        });
    }
    let params = runner_params(la, e, k, r)?;
    let b = BetaSet::from_partition(la, r)?;
    let base = params.d as i64 + (params.c as i64 - 1) * e as i64;
    let mut total = 0i64;
    for &beta in b.entries() {
        let beta = beta as i64;
        if beta >= base {
            total += (beta - base).div_euclid(e as i64);
        }
    }
    Ok(total as u64)
}

/// n_{r,k}(λ) = #{(a,b) : a,b in the r-bead beta-set, a < b,
/// a ≡ d (mod e), b ≢ d (mod e)} where d = (r+k) mod e.
pub fn n_rk(la: &Partition, e: u32, k: u32, r: usize) -> Result<u64> {
    assert!(e >= 2 && k < e, "need e >= 2 and 0 <= k < e");
    let b = BetaSet::from_partition(la, r)?;
    let d = residue_mod(r as i64 + k as i64, e) as u64;
    let e64 = e as u64;
    let mut count = 0u64;
    for &a in b.entries() {
        if a % e64 != d {
            continue;
        }
        count += b.entries().iter().filter(|&&x| x > a && x % e64 != d).count() as u64;
    }
    Ok(count)
}
