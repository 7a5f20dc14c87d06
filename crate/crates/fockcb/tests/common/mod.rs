//! Exhaustive bounded sweeps of the structural invariants, shared by the
//! property tests and the acceptance gate.  Each sweep returns the number
//! of checked cases, or the first failure it finds.

use fockcb::abacus::{
    bruhat_geq, dominates, e_core, e_weight, extended_beta_set, is_k_empty, n_rk,
    remove_runner, ux, ux_alt, weight_multiset, BetaSet, IntMultiset,
};
use fockcb::blocks::{brute_force_block, enumerate_block, BlockId};
use fockcb::laurent::{quantum_factorial, quantum_integer, LaurentPoly};
use fockcb::partition::{nodes_by_residue, NodeKind, Partition};
use fockcb::wedge::{bar_standard, straighten_pair, OrderedWedge, Straightener, WedgeVector, WedgeWord};
use num_traits::ToPrimitive;

pub type Sweep = Result<u64, String>;

fn fail(msg: String) -> Sweep {
    Err(msg)
}

/// Conjugation dualities on partitions: conjugation is an involution,
/// e-regularity matches conjugate e-restrictedness, and every partition
/// has one more addable than removable node.
pub fn sweep_partition_dualities() -> Sweep {
    let mut cases = 0;
    for n in 0..=14u64 {
        for la in Partition::all_of_size(n) {
            let conj = la.conjugate();
            if conj.conjugate() != la {
                return fail(format!("conjugate not involutive at {la}"));
            }
            if la.size() != conj.size() {
                return fail(format!("conjugate changes size at {la}"));
            }
            cases += 1;
            for e in 2..=5u32 {
                if la.is_e_regular(e) != conj.is_e_restricted(e) {
                    return fail(format!("regular/restricted duality fails at {la}, e={e}"));
                }
                let addable: usize = (0..e)
                    .map(|k| nodes_by_residue(&la, e, k, NodeKind::Addable).len())
                    .sum();
                let removable: usize = (0..e)
                    .map(|k| nodes_by_residue(&la, e, k, NodeKind::Removable).len())
                    .sum();
                if addable != removable + 1 {
                    return fail(format!(
                        "node count identity fails at {la}: {addable} addable, {removable} removable"
                    ));
                }
                cases += 2;
            }
        }
    }
    Ok(cases)
}

/// Abacus round trips: beta-sets invert, shifting beads preserves the
/// partition, conjugation flips bead/gap patterns, cores are idempotent
/// fixed points, and sizes decompose as |λ| = |core| + e·w with the
/// weight multiset carrying exactly w entries.
pub fn sweep_abacus_round_trips() -> Sweep {
    let mut cases = 0;
    for n in 0..=12u64 {
        for la in Partition::all_of_size(n) {
            let parts = la.num_parts();
            for extra in 0..=4usize {
                let r = parts + extra;
                if r == 0 {
                    continue;
                }
                let b = BetaSet::from_partition(&la, r).unwrap();
                if b.to_partition() != la {
                    return fail(format!("beta round trip fails at {la}, r={r}"));
                }
                if b.shifted(3).to_partition() != la {
                    return fail(format!("beta shift changes partition at {la}, r={r}"));
                }
                // Conjugate duality: z is a bead of λ at r exactly when
                // (r + s - 1) - z is a gap of λ′ at s, for any s ≥ λ₁.
                let s = la.part(1) as usize + extra;
                if s > 0 {
                    let top = (r + s - 1) as u64;
                    let conj = BetaSet::from_partition(&la.conjugate(), s).unwrap();
                    for z in 0..=top {
                        let bead = b.entries().contains(&z);
                        let conj_gap = !conj.entries().contains(&(top - z));
                        if bead != conj_gap {
                            return fail(format!(
                                "bead/gap duality fails at {la}, r={r}, s={s}, z={z}"
                            ));
                        }
                    }
                }
                cases += 1;
            }
            for e in 2..=5u32 {
                let core = e_core(&la, e);
                let w = e_weight(&la, e);
                if e_core(&core, e) != core || e_weight(&core, e) != 0 {
                    return fail(format!("core not idempotent at {la}, e={e}"));
                }
                if la.size() != core.size() + e as u64 * w {
                    return fail(format!("size decomposition fails at {la}, e={e}"));
                }
                if e_core(&la.conjugate(), e) != core.conjugate() {
                    return fail(format!("core/conjugate commutation fails at {la}, e={e}"));
                }
                if e_weight(&la.conjugate(), e) != w {
                    return fail(format!("weight changes under conjugation at {la}, e={e}"));
                }
                let r = la.num_parts().max(1) + e as usize;
                let wm = weight_multiset(&la, e, r).unwrap();
                if wm.size() != w {
                    return fail(format!(
                        "weight multiset has {} entries, weight is {w}, at {la}, e={e}",
                        wm.size()
                    ));
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}

/// Classical dominance (partial sums) for partitions of equal size.
fn classical_dominates(mu: &Partition, la: &Partition) -> bool {
    if mu.size() != la.size() {
        return false;
    }
    let rows = mu.num_parts().max(la.num_parts());
    let mut sum_mu = 0u64;
    let mut sum_la = 0u64;
    for i in 1..=rows {
        sum_mu += mu.part(i) as u64;
        sum_la += la.part(i) as u64;
        if sum_mu < sum_la {
            return false;
        }
    }
    true
}

/// The refined dominance order on block members: reflexivity,
/// antisymmetry, implication of classical dominance, invariance under
/// the bead count, the conjugation anti-isomorphism, and the weight
/// multiset characterization.
pub fn sweep_dominance() -> Sweep {
    let mut cases = 0;
    for e in 2..=4u32 {
        for core_size in 0..=3u64 {
            for core in Partition::all_of_size(core_size) {
                if e_weight(&core, e) != 0 {
                    continue;
                }
                for w in 0..=3u64 {
                    let id = BlockId::new(e, core.clone(), w).unwrap();
                    let members = enumerate_block(&id);
                    let r0 = id.common_bead_count();
                    for mu in &members {
                        if !dominates(mu, mu, e) {
                            return fail(format!("dominance not reflexive at {mu}, e={e}"));
                        }
                        for la in &members {
                            cases += 1;
                            let forward = dominates(mu, la, e);
                            if forward && dominates(la, mu, e) && la != mu {
                                return fail(format!(
                                    "dominance not antisymmetric at ({mu}, {la}), e={e}"
                                ));
                            }
                            if forward && !classical_dominates(mu, la) {
                                return fail(format!(
                                    "refined dominance without classical at ({mu}, {la}), e={e}"
                                ));
                            }
                            // Bead-count invariance of the Bruhat comparison.
                            for r in [r0, r0 + 1, r0 + e as usize] {
                                let xm = extended_beta_set(mu, e, r).unwrap();
                                let xl = extended_beta_set(la, e, r).unwrap();
                                if bruhat_geq(&xm, &xl) != forward {
                                    return fail(format!(
                                        "dominance depends on bead count at ({mu}, {la}), e={e}, r={r}"
                                    ));
                                }
                            }
                            // Conjugation reverses the order.
                            if dominates(&la.conjugate(), &mu.conjugate(), e) != forward {
                                return fail(format!(
                                    "conjugation duality fails at ({mu}, {la}), e={e}"
                                ));
                            }
                            // Weight-multiset characterization.
                            let wm = weight_multiset(mu, e, r0).unwrap();
                            let wl = weight_multiset(la, e, r0).unwrap();
                            if bruhat_geq(&wm, &wl) != forward {
                                return fail(format!(
                                    "weight multiset characterization fails at ({mu}, {la}), e={e}"
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(cases)
}

/// The two formulas for U_k agree at several bead counts; k-emptiness
/// and U_k interact with conjugation as claimed; and the bead-pair count
/// n_{r,k} satisfies its block identity.
pub fn sweep_ux_formulas() -> Sweep {
    let mut cases = 0;
    for n in 0..=12u64 {
        for la in Partition::all_of_size(n) {
            for e in 2..=4u32 {
                let core = e_core(&la, e);
                let w = e_weight(&la, e);
                for k in 0..e {
                    let conj_k = e - 1 - k;
                    // k-emptiness transposes.
                    let lhs = is_k_empty(&la, e, k);
                    let rhs = is_k_empty(&la.conjugate(), e, conj_k);
                    if lhs != rhs {
                        return fail(format!(
                            "k-empty conjugation fails at {la}, e={e}, k={k}"
                        ));
                    }
                    cases += 1;
                    if !lhs {
                        continue;
                    }
                    let u = ux(&la, e, k).unwrap();
                    let r0 = la.num_parts().max(1);
                    for r in [r0, r0 + 1, r0 + e as usize, r0 + 2 * e as usize] {
                        let alt = ux_alt(&la, e, k, r).unwrap();
                        if alt != u {
                            return fail(format!(
                                "U_k formulas disagree at {la}, e={e}, k={k}, r={r}: {u} vs {alt}"
                            ));
                        }
                        cases += 1;
                    }
                    // U_k(λ) + U_{e-1-k}(λ′) = U_k(κ) + U_{e-1-k}(κ′) + w.
                    let u_conj = ux(&la.conjugate(), e, conj_k).unwrap();
                    let u_core = ux(&core, e, k).unwrap();
                    let u_core_conj = ux(&core.conjugate(), e, conj_k).unwrap();
                    if u + u_conj != u_core + u_core_conj + w {
                        return fail(format!(
                            "conjugate U identity fails at {la}, e={e}, k={k}"
                        ));
                    }
                    cases += 1;
                    // U_k(λ) + n_{r,k}(λ) = U_k(κ) + n_{r,k}(κ) + w at a
                    // common bead count.
                    let r = la.num_parts().max(core.num_parts()).max(1) + e as usize;
                    let n_la = n_rk(&la, e, k, r).unwrap();
                    let n_core = n_rk(&core, e, k, r).unwrap();
                    if u + n_la != u_core + n_core + w {
                        return fail(format!(
                            "bead-pair identity fails at {la}, e={e}, k={k}, r={r}"
                        ));
                    }
                    cases += 1;
                }
            }
        }
    }
    Ok(cases)
}

/// Hypotheses of the two classical runner-removal statements at bead
/// count r: (all beads of runner d sit below the display's first gap,
/// the runner's first gap lies above the display's last bead).
fn simple_hypotheses(la: &Partition, e: u32, k: u32, r: usize) -> (bool, bool) {
    let b = BetaSet::from_partition(la, r).unwrap();
    let entries = b.entries();
    let d = (r as u64 + k as u64) % e as u64;
    let first_gap = (0u64..).find(|z| !entries.contains(z)).unwrap();
    let last_bead = entries.iter().copied().max().unwrap_or(0);
    let last_on_runner = entries
        .iter()
        .copied()
        .filter(|z| z % e as u64 == d)
        .max();
    let hyp1 = match last_on_runner {
        None => true,
        Some(z) => z < first_gap,
    };
    let first_gap_on_runner = (0u64..)
        .map(|t| d + t * e as u64)
        .find(|z| !entries.contains(z))
        .unwrap();
    let hyp2 = first_gap_on_runner > last_bead;
    (hyp1, hyp2)
}

/// Block-level U_k structure: equal-U transfer between a pair and its
/// conjugates, equality of U_k exactly when the bead-pair counts agree,
/// the sandwich property for dominance intervals, injectivity and
/// order-compatibility of runner removal, and the simple-hypothesis
/// sufficient condition for equal U_k.
pub fn sweep_block_ux() -> Sweep {
    let mut cases = 0;
    for e in 2..=4u32 {
        for core_size in 0..=3u64 {
            for core in Partition::all_of_size(core_size) {
                if e_weight(&core, e) != 0 {
                    continue;
                }
                for w in 0..=3u64 {
                    let id = BlockId::new(e, core.clone(), w).unwrap();
                    let members = enumerate_block(&id);
                    let r0 = id.common_bead_count();
                    for k in 0..e {
                        let conj_k = e - 1 - k;
                        let empties: Vec<&Partition> = members
                            .iter()
                            .filter(|m| is_k_empty(m, e, k))
                            .collect();
                        // Injectivity and order-compatibility of removal.
                        if e >= 3 {
                            let removed: Vec<Partition> = empties
                                .iter()
                                .map(|m| remove_runner(m, e, k).unwrap())
                                .collect();
                            for (i, a) in removed.iter().enumerate() {
                                for (j, b) in removed.iter().enumerate() {
                                    if i != j && a == b {
                                        return fail(format!(
                                            "runner removal not injective on block \
                                             e={e} core=({core}) w={w}, k={k}"
                                        ));
                                    }
                                    cases += 1;
                                    let before = dominates(empties[i], empties[j], e);
                                    let after = dominates(a, b, e - 1);
                                    if before != after {
                                        return fail(format!(
                                            "removal breaks dominance at ({}, {}), e={e}, k={k}",
                                            empties[i], empties[j]
                                        ));
                                    }
                                }
                            }
                            if let Some(first) = removed.first() {
                                let target_core = e_core(first, e - 1);
                                for p in &removed {
                                    if e_core(p, e - 1) != target_core {
                                        return fail(format!(
                                            "removed partitions split cores on block \
                                             e={e} core=({core}) w={w}, k={k}"
                                        ));
                                    }
                                }
                            }
                        }
                        for mu in &empties {
                            let u_mu = ux(mu, e, k).unwrap();
                            for la in &empties {
                                let u_la = ux(la, e, k).unwrap();
                                // Equal U exactly when bead-pair counts agree.
                                let n_mu = n_rk(mu, e, k, r0).unwrap();
                                let n_la = n_rk(la, e, k, r0).unwrap();
                                if (u_mu == u_la) != (n_mu == n_la) {
                                    return fail(format!(
                                        "U/bead-pair equivalence fails at ({mu}, {la}), e={e}, k={k}"
                                    ));
                                }
                                cases += 1;
                                // Conjugate-pair transfer.
                                let cu_mu = ux(&mu.conjugate(), e, conj_k).unwrap();
                                let cu_la = ux(&la.conjugate(), e, conj_k).unwrap();
                                if u_mu + cu_mu != u_la + cu_la {
                                    return fail(format!(
                                        "conjugate U transfer fails at ({mu}, {la}), e={e}, k={k}"
                                    ));
                                }
                                // Either classical hypothesis, satisfied by
                                // both partitions, forces equal U.
                                let (mu1, mu2) = simple_hypotheses(mu, e, k, r0);
                                let (la1, la2) = simple_hypotheses(la, e, k, r0);
                                if ((mu1 && la1) || (mu2 && la2)) && u_mu != u_la {
                                    return fail(format!(
                                        "classical hypothesis with unequal U at ({mu}, {la}), e={e}, k={k}"
                                    ));
                                }
                                // Sandwich: everything between a comparable
                                // equal-U pair is k-empty with the same U.
                                if u_mu == u_la && dominates(mu, la, e) {
                                    for xi in &members {
                                        if dominates(mu, xi, e) && dominates(xi, la, e) {
                                            cases += 1;
                                            if !is_k_empty(xi, e, k)
                                                || ux(xi, e, k).unwrap() != u_mu
                                            {
                                                return fail(format!(
                                                    "sandwich fails at {xi} between ({mu}, {la}), e={e}, k={k}"
                                                ));
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(cases)
}

/// The extension multiset of a word: each letter x contributes every
/// position x, x−e, x−2e, … down to its residue.
fn word_extension(letters: &[u64], e: u32) -> IntMultiset {
    letters
        .iter()
        .flat_map(|&x| (x % e as u64..=x).step_by(e as usize).collect::<Vec<_>>())
        .collect()
}

/// Straightening by always rewriting the leftmost unordered adjacent
/// pair — an independent strategy used to cross-check confluence.
fn rewrite_leftmost(word: &[u64], e: u32) -> WedgeVector {
    for i in 0..word.len().saturating_sub(1) {
        if word[i] <= word[i + 1] {
            let mut acc = WedgeVector::zero();
            for (a, b, c) in straighten_pair(word[i], word[i + 1], e) {
                let mut next = word.to_vec();
                next[i] = a;
                next[i + 1] = b;
                acc.add_scaled(&rewrite_leftmost(&next, e), &c);
            }
            return acc;
        }
    }
    WedgeVector::single(OrderedWedge::new(word.to_vec()).expect("word is strictly decreasing"))
}

fn words_to_check() -> Vec<Vec<u64>> {
    let mut words = Vec::new();
    for a in 0..=9u64 {
        for b in 0..=9u64 {
            words.push(vec![a, b]);
            for c in 0..=9u64 {
                words.push(vec![a, b, c]);
            }
        }
    }
    // A deterministic spread of longer words.
    for a in (0..=10u64).step_by(2) {
        for b in (1..=11u64).step_by(3) {
            for c in (0..=12u64).step_by(3) {
                for d in (2..=12u64).step_by(4) {
                    words.push(vec![a, b, c, d]);
                }
            }
        }
    }
    words
}

/// Straightening bounds: output letters stay inside the input range, the
/// residue multiset is preserved, the extension multiset weakly
/// decreases to every output word, and an independent rewriting strategy
/// produces the identical result.
pub fn sweep_straightening_lemmas() -> Sweep {
    let mut cases = 0;
    for e in 2..=4u32 {
        let mut s = Straightener::new(e);
        for word in words_to_check() {
            let v = s.straighten(&WedgeWord::new(word.clone()));
            let lo = *word.iter().min().unwrap();
            let hi = *word.iter().max().unwrap();
            let mut in_res: Vec<u64> = word.iter().map(|x| x % e as u64).collect();
            in_res.sort_unstable();
            let in_ext = word_extension(&word, e);
            for (ow, _) in v.terms() {
                if ow.letters().iter().any(|&x| x < lo || x > hi) {
                    return fail(format!("letter range violated: {word:?} -> {ow:?}, e={e}"));
                }
                let mut out_res: Vec<u64> = ow.letters().iter().map(|x| x % e as u64).collect();
                out_res.sort_unstable();
                if out_res != in_res {
                    return fail(format!("residues not preserved: {word:?} -> {ow:?}, e={e}"));
                }
                if !bruhat_geq(&in_ext, &word_extension(ow.letters(), e)) {
                    return fail(format!(
                        "extension multiset increased: {word:?} -> {ow:?}, e={e}"
                    ));
                }
            }
            if word.len() <= 3 && rewrite_leftmost(&word, e) != v {
                return fail(format!("rewriting strategies disagree on {word:?}, e={e}"));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

/// Deleting a runner commutes with straightening: for words avoiding
/// residue d, straightening at modulus e and then renumbering letterwise
/// equals renumbering first and straightening at modulus e−1.
pub fn sweep_fstraight() -> Sweep {
    let mut cases = 0;
    for e in 3..=4u32 {
        for d in 0..e {
            let mut big = Straightener::new(e);
            let mut small = Straightener::new(e - 1);
            for word in words_to_check() {
                if word.len() > 3 || word.iter().any(|&x| x % e as u64 == d as u64) {
                    continue;
                }
                let mapped: Vec<u64> = word
                    .iter()
                    .map(|&x| fockcb::abacus::phi_d(x, e, d).unwrap())
                    .collect();
                let lhs = big.straighten(&WedgeWord::new(word.clone()));
                let mut projected = WedgeVector::zero();
                for (ow, c) in lhs.terms() {
                    let letters: Vec<u64> = ow
                        .letters()
                        .iter()
                        .map(|&x| fockcb::abacus::phi_d(x, e, d).unwrap())
                        .collect();
                    projected.add_term(OrderedWedge::new(letters).unwrap(), c.clone());
                }
                let rhs = small.straighten(&WedgeWord::new(mapped));
                if projected != rhs {
                    return fail(format!("runner deletion breaks straightening: {word:?}, e={e}, d={d}"));
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}

/// The two-term commutation identities in both directions, checked as
/// equalities of straightened vectors.
pub fn sweep_wedgemod() -> Sweep {
    let mut cases = 0;
    for e in 2..=4u32 {
        let e64 = e as u64;
        let mut s = Straightener::new(e);
        for l in 0..=8u64 {
            for m in l + 1..=l + 40 {
                let i = (m - l) % e64;
                if i == 0 {
                    continue;
                }
                let top = (m - l - i) / e64;
                let q = LaurentPoly::q_power(1);
                let q_inv = LaurentPoly::q_power(-1);

                // u_m ∧ u_l = −q·u_l∧u_m + (q⁻¹−q)·Σ_s u_{l+se}∧u_{m−se}
                let lhs = s.straighten(&WedgeWord::new(vec![m, l]));
                let mut rhs = WedgeVector::zero();
                rhs.add_scaled(&s.straighten(&WedgeWord::new(vec![l, m])), &-q.clone());
                let factor = q_inv.clone() - q.clone();
                for t in 1..=top {
                    rhs.add_scaled(
                        &s.straighten(&WedgeWord::new(vec![l + t * e64, m - t * e64])),
                        &factor,
                    );
                }
                if lhs != rhs {
                    return fail(format!("first identity fails at l={l}, m={m}, e={e}"));
                }

                // u_l ∧ u_m = −q⁻¹·u_m∧u_l + (q−q⁻¹)·Σ_s u_{m−se}∧u_{l+se}
                let lhs = s.straighten(&WedgeWord::new(vec![l, m]));
                let mut rhs = WedgeVector::zero();
                rhs.add_scaled(&s.straighten(&WedgeWord::new(vec![m, l])), &-q_inv.clone());
                let factor = q.clone() - q_inv.clone();
                for t in 1..=top {
                    rhs.add_scaled(
                        &s.straighten(&WedgeWord::new(vec![m - t * e64, l + t * e64])),
                        &factor,
                    );
                }
                if lhs != rhs {
                    return fail(format!("second identity fails at l={l}, m={m}, e={e}"));
                }
                cases += 2;
            }
        }
    }
    Ok(cases)
}

/// Bar coefficients do not depend on the bead count once r ≥ |μ|.
pub fn sweep_bar_stability() -> Sweep {
    let mut cases = 0;
    for e in 2..=3u32 {
        for n in 0..=8u64 {
            for mu in Partition::all_of_size(n) {
                let base = bar_standard(&mu, e, n.max(1) as usize).unwrap();
                for extra in 1..=2usize {
                    let again = bar_standard(&mu, e, n as usize + extra).unwrap();
                    if again != base {
                        return fail(format!("bar coefficients unstable at {mu}, e={e}"));
                    }
                    cases += 1;
                }
            }
        }
    }
    Ok(cases)
}

/// Block enumeration agrees with filtering all partitions of the member
/// size by e-core.
pub fn sweep_block_enumeration() -> Sweep {
    let mut cases = 0;
    for e in 2..=4u32 {
        for core_size in 0..=4u64 {
            for core in Partition::all_of_size(core_size) {
                if e_weight(&core, e) != 0 {
                    continue;
                }
                for w in 0..=4u64 {
                    let id = BlockId::new(e, core.clone(), w).unwrap();
                    if id.member_size() > 16 {
                        continue;
                    }
                    if enumerate_block(&id) != brute_force_block(&id) {
                        return fail(format!(
                            "block enumeration differs from brute force at e={e} core=({core}) w={w}"
                        ));
                    }
                    cases += 1;
                }
            }
        }
    }
    Ok(cases)
}

/// Balanced quantum integers are bar-invariant, evaluate to n at q=1,
/// and assemble into factorials that divide the expected products.
pub fn sweep_quantum_integers() -> Sweep {
    let mut cases = 0;
    for n in 0..=30u64 {
        let qn = quantum_integer(n);
        if qn.bar() != qn {
            return fail(format!("[{n}] is not bar-invariant"));
        }
        if qn.eval_int(1).to_i64() != Some(n as i64) {
            return fail(format!("[{n}](1) != {n}"));
        }
        cases += 2;
    }
    for n in 1..=8u64 {
        let ratio = quantum_factorial(n).exact_div(&quantum_factorial(n - 1));
        if ratio != quantum_integer(n) {
            return fail(format!("[{n}]!/[{}]! != [{n}]", n - 1));
        }
        cases += 1;
    }
    Ok(cases)
}

/// Every sweep with its display name, in a deterministic order.
#[allow(dead_code)]
pub fn all_sweeps() -> Vec<(&'static str, fn() -> Sweep)> {
    vec![
        ("partition dualities", sweep_partition_dualities),
        ("abacus round trips", sweep_abacus_round_trips),
        ("dominance order", sweep_dominance),
        ("U_k formulas", sweep_ux_formulas),
        ("block U_k structure", sweep_block_ux),
        ("straightening lemmas", sweep_straightening_lemmas),
        ("runner deletion vs straightening", sweep_fstraight),
        ("two-term identities", sweep_wedgemod),
        ("bar stability", sweep_bar_stability),
        ("block enumeration", sweep_block_enumeration),
        ("quantum integers", sweep_quantum_integers),
    ]
}
