//! The truncated Fock space: wedge words u_{i_1}∧…∧u_{i_r}, the modulo-e
//! commutation relations, straightening into ordered wedges, the bar
//! involution on standard basis vectors, and the f_k action.
//!
//! The two-letter relations: for l ≤ m,
//!
//!   u_l∧u_m = -u_m∧u_l                      if l ≡ m (mod e),
//!   u_l∧u_m = -q^{-1} u_m∧u_l
//!             + (q^{-2}-1)(    u_{m-i}∧u_{l+i}
//!                          - q^{-1} u_{m-e}∧u_{l+e}
//!                          + q^{-2} u_{m-e-i}∧u_{l+e+i}
//!                          - q^{-3} u_{m-2e}∧u_{l+2e} + … )
//!                                            otherwise, i = (m-l) mod e,
//!
//! where the series continues exactly as long as its terms are ordered
//! (first letter strictly greater than second).  Longer words straighten
//! by applying the relations in adjacent positions; the normal form is
//! unique.

use crate::abacus::BetaSet;
use crate::laurent::{quantum_factorial, LaurentPoly};
use crate::partition::{add_nodes, nodes_by_residue, NodeKind, Partition};
use crate::{Error, Result};
use num_bigint::BigInt;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// An arbitrary word in the letters u_i, i ≥ 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WedgeWord {
    letters: Vec<u64>,
}

impl WedgeWord {
    pub fn new(letters: Vec<u64>) -> Self {
        WedgeWord { letters }
    }

    pub fn letters(&self) -> &[u64] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The reversed beta-word of μ on r beads: letters ascending, i.e.
    /// u_{β_r}∧…∧u_{β_1}.
    pub fn reversed_beta_word(mu: &Partition, r: usize) -> Result<Self> {
        let b = BetaSet::from_partition(mu, r)?;
        let mut letters: Vec<u64> = b.entries().to_vec();
        letters.reverse();
        Ok(WedgeWord { letters })
    }
}

impl fmt::Display for WedgeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.letters.iter().map(|l| format!("u{l}")).collect();
        write!(f, "{}", strs.join("∧"))
    }
}

/// A strictly decreasing word: the normal form of a nonzero wedge.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct OrderedWedge {
    letters: Vec<u64>,
}

impl OrderedWedge {
    pub fn new(letters: Vec<u64>) -> Result<Self> {
        if letters.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::MalformedBetaSet);
        }
        Ok(OrderedWedge { letters })
    }

    pub fn from_partition(la: &Partition, r: usize) -> Result<Self> {
        let b = BetaSet::from_partition(la, r)?;
        Ok(OrderedWedge {
            letters: b.entries().to_vec(),
        })
    }

    pub fn letters(&self) -> &[u64] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Decode through the r-bead beta-set, r = word length.
    pub fn to_partition(&self) -> Partition {
        BetaSet::from_entries(self.letters.clone())
            .expect("ordered wedge letters are distinct")
            .to_partition()
    }
}

impl fmt::Display for OrderedWedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.letters.iter().map(|l| format!("u{l}")).collect();
        write!(f, "{}", strs.join("∧"))
    }
}

/// A finite linear combination of ordered wedges of equal length.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct WedgeVector {
    terms: BTreeMap<OrderedWedge, LaurentPoly>,
}

impl WedgeVector {
    pub fn zero() -> Self {
        WedgeVector::default()
    }

    pub fn single(w: OrderedWedge) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, LaurentPoly::one());
        WedgeVector { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &OrderedWedge) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OrderedWedge, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: OrderedWedge, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// self += c · other.
    pub fn add_scaled(&mut self, other: &WedgeVector, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        for (w, p) in &other.terms {
            self.add_term(w.clone(), p * c);
        }
    }

    /// Reinterpret each ordered wedge as a partition (all keys must have
    /// equal length, which is the bead count).
    pub fn to_partition_map(&self) -> BTreeMap<Partition, LaurentPoly> {
        self.terms
            .iter()
            .map(|(w, c)| (w.to_partition(), c.clone()))
            .collect()
    }
}

/// The two-letter expansion of u_l∧u_m for l ≤ m as a list of
/// (first, second, coefficient) with first > second.  Empty for l = m.
pub fn straighten_pair(l: u64, m: u64, e: u32) -> Vec<(u64, u64, LaurentPoly)> {
    assert!(l <= m, "straighten_pair wants l <= m, got {l} > {m}");
    assert!(e >= 2, "modulus must be at least 2");
    if l == m {
        return Vec::new();
    }
    let e64 = e as u64;
    if l % e64 == m % e64 {
        return vec![(m, l, -LaurentPoly::one())];
    }
    let i = (m - l) % e64;
    let mut out = vec![(m, l, LaurentPoly::monomial(-1, -1))];
    // (q^{-2}-1)(-1)^j q^{-j} · u_{m-offset}∧u_{l+offset},
    // offsets i, e, e+i, 2e, 2e+i, 3e, … while ordered.
    let factor = LaurentPoly::q_power(-2) - LaurentPoly::one();
    for j in 0u64.. {
        let offset = if j % 2 == 0 {
            (j / 2) * e64 + i
        } else {
            j.div_ceil(2) * e64
        };
        if m < offset || m - offset <= l + offset {
            break;
        }
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let coeff = factor.shifted(-(j as i64)).scaled(&BigInt::from(sign));
        out.push((m - offset, l + offset, coeff));
    }
    out
}

/// A straightening engine for one modulus.  Holds bounded memo caches for
/// pair expansions and head insertions; the caches are an optimization
/// only and never change results.
pub struct Straightener {
    e: u32,
    pair_cache: HashMap<(u64, u64), Vec<(u64, u64, LaurentPoly)>>,
    insert_cache: HashMap<(u64, Vec<u64>), WedgeVector>,
    cache_cap: usize,
}

impl Straightener {
    pub fn new(e: u32) -> Self {
        assert!(e >= 2, "modulus must be at least 2");
        Straightener {
            e,
            pair_cache: HashMap::new(),
            insert_cache: HashMap::new(),
            cache_cap: 1 << 20,
        }
    }

    pub fn modulus(&self) -> u32 {
        self.e
    }

    fn pair(&mut self, l: u64, m: u64) -> Vec<(u64, u64, LaurentPoly)> {
        if let Some(hit) = self.pair_cache.get(&(l, m)) {
            return hit.clone();
        }
        let expansion = straighten_pair(l, m, self.e);
        self.pair_cache.insert((l, m), expansion.clone());
        expansion
    }

    /// Insert letter x on the left of an ordered tail, resolving the
    /// inversion at the head recursively.
    fn insert(&mut self, x: u64, tail: &[u64]) -> WedgeVector {
        if tail.is_empty() {
            return WedgeVector::single(OrderedWedge { letters: vec![x] });
        }
        let head = tail[0];
        if x > head {
            let mut letters = Vec::with_capacity(tail.len() + 1);
            letters.push(x);
            letters.extend_from_slice(tail);
            return WedgeVector::single(OrderedWedge { letters });
        }
        if x == head {
            return WedgeVector::zero();
        }
        let key = (x, tail.to_vec());
        if let Some(hit) = self.insert_cache.get(&key) {
            return hit.clone();
        }
        let mut out = WedgeVector::zero();
        for (a, b, c) in self.pair(x, head) {
            // u_x∧u_head∧rest → c · u_a∧(u_b∧rest), a > b.
            let inner = self.insert(b, &tail[1..]);
            for (w, p) in inner.terms.clone() {
                let outer = self.insert(a, w.letters());
                out.add_scaled(&outer, &(&p * &c));
            }
        }
        if self.insert_cache.len() >= self.cache_cap {
            self.insert_cache.clear();
        }
        self.insert_cache.insert(key, out.clone());
        out
    }

    /// Straighten an arbitrary word into its unique normal form.
    pub fn straighten(&mut self, w: &WedgeWord) -> WedgeVector {
        let mut acc = WedgeVector::single(OrderedWedge { letters: vec![] });
        for &x in w.letters().iter().rev() {
            let mut next = WedgeVector::zero();
            for (tail, c) in &acc.terms {
                let inserted = self.insert(x, tail.letters());
                next.add_scaled(&inserted, c);
            }
            acc = next;
        }
        acc
    }
}

/// The bar-involution coefficients a^e_{λμ}(q) at bead count r: straighten
/// the reversed beta-word of μ, then normalise by the diagonal b_{μμ}(q).
/// Requires r ≥ |μ| so the coefficients are stable in r.
pub fn bar_standard(
    mu: &Partition,
    e: u32,
    r: usize,
) -> Result<BTreeMap<Partition, LaurentPoly>> {
    let mut s = Straightener::new(e);
    bar_standard_with(&mut s, mu, r)
}

/// As [`bar_standard`], sharing a caller-provided straightener cache.
pub fn bar_standard_with(
    s: &mut Straightener,
    mu: &Partition,
    r: usize,
) -> Result<BTreeMap<Partition, LaurentPoly>> {
    if (r as u64) < mu.size() {
        return Err(Error::UnstableBeadCount {
            r,
            needed: mu.size(),
        });
    }
    let word = WedgeWord::reversed_beta_word(mu, r)?;
    let b_vec = s.straighten(&word);
    let own = OrderedWedge::from_partition(mu, r)?;
    let b_diag = b_vec.coeff(&own);
    assert!(!b_diag.is_zero(), "diagonal bar coefficient vanished for {mu}");
    if b_diag.as_signed_power().is_none() {
        eprintln!(
            "note: diagonal bar coefficient for {mu} (e={}, r={r}) is not a signed power of q: {b_diag}; using general exact division",
            s.modulus()
        );
    }
    let mut out = BTreeMap::new();
    for (w, c) in b_vec.terms() {
        out.insert(w.to_partition(), c.exact_div(&b_diag));
    }
    Ok(out)
}

/// The Fock-space action f_k on a vector written in the standard basis:
/// f_k|λ⟩ = Σ q^{N(λ,μ)}|μ⟩ over partitions μ obtained by adding one
/// addable node of residue k, where N counts addable minus removable
/// residue-k nodes of λ strictly above the added node.
pub fn apply_f(
    v: &BTreeMap<Partition, LaurentPoly>,
    e: u32,
    k: u32,
) -> BTreeMap<Partition, LaurentPoly> {
    let mut out: BTreeMap<Partition, LaurentPoly> = BTreeMap::new();
    for (la, c) in v {
        if c.is_zero() {
            continue;
        }
        let addable = nodes_by_residue(la, e, k, NodeKind::Addable);
        let removable = nodes_by_residue(la, e, k, NodeKind::Removable);
        for node in &addable {
            let n_stat = addable.iter().filter(|a| a.row < node.row).count() as i64
                - removable.iter().filter(|r| r.row < node.row).count() as i64;
            let mu = add_nodes(la, &[*node]).expect("node reported addable");
            let contribution = c.shifted(n_stat);
            use std::collections::btree_map::Entry;
            match out.entry(mu) {
                Entry::Vacant(slot) => {
                    slot.insert(contribution);
                }
                Entry::Occupied(mut slot) => {
                    *slot.get_mut() += contribution;
                    if slot.get().is_zero() {
                        slot.remove();
                    }
                }
            }
        }
    }
    out
}

/// The divided power f_k^{(a)} = f_k^a / [a]!, computed literally: apply
/// f_k a times, then exact-divide every coefficient by [a]!.
pub fn apply_f_divided(
    v: &BTreeMap<Partition, LaurentPoly>,
    e: u32,
    k: u32,
    a: u64,
) -> BTreeMap<Partition, LaurentPoly> {
    let mut acc = v.clone();
    for _ in 0..a {
        acc = apply_f(&acc, e, k);
    }
    let fact = quantum_factorial(a);
    acc.into_iter()
        .map(|(mu, c)| {
            let q = c.exact_div(&fact);
            (mu, q)
        })
        .collect()
}
