//! Sweep verification of the engine's structural identities over
//! declared ranges of blocks: runner removal, Mullineux compatibility,
//! the q^w oracle, Scopes equivalences, and triangularity.  Each suite
//! returns a deterministic report; failures are listed smallest block
//! first.

use crate::abacus::{dominates, is_k_empty, remove_runner, ux};
use crate::blocks::{cores_up_to, scopes_adjacent, BlockId};
use crate::canonical::{q_decomp, BlockTable};
use crate::laurent::LaurentPoly;
use crate::mullineux::{mullineux, mullineux_conjugate};
use crate::partition::{nodes_by_residue, NodeKind, Partition};
use rayon::prelude::*;
use serde::Serialize;
use std::time::Instant;

/// Outcome of one verification sweep.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub params: String,
    pub cases: u64,
    pub failures: Vec<String>,
    pub warnings: Vec<String>,
    pub millis: u128,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl std::fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} [{}]: {} — {} cases, {} ms",
            self.suite,
            self.params,
            if self.passed() { "PASS" } else { "FAIL" },
            self.cases,
            self.millis
        )?;
        for w in &self.warnings {
            write!(f, "\n  warning: {w}")?;
        }
        for fail in &self.failures {
            write!(f, "\n  failure: {fail}")?;
        }
        Ok(())
    }
}

/// The blocks a sweep ranges over: moduli, maximal weight, maximal core
/// size.
#[derive(Clone, Debug)]
pub struct BlockRange {
    pub e_values: Vec<u32>,
    pub max_weight: u64,
    pub max_core_size: u64,
}

impl BlockRange {
    pub fn new(e_values: &[u32], max_weight: u64, max_core_size: u64) -> Self {
        BlockRange {
            e_values: e_values.to_vec(),
            max_weight,
            max_core_size,
        }
    }

    fn describe(&self) -> String {
        format!(
            "e={:?} w<={} |core|<={}",
            self.e_values, self.max_weight, self.max_core_size
        )
    }
}

/// All blocks in the range, smallest first: ascending modulus, then
/// member size, then core (lexicographically), then weight.
pub fn blocks_in_range(range: &BlockRange) -> Vec<BlockId> {
    let mut out = Vec::new();
    for &e in &range.e_values {
        for core in cores_up_to(e, range.max_core_size) {
            for w in 0..=range.max_weight {
                out.push(BlockId::new(e, core.clone(), w).expect("enumerated cores"));
            }
        }
    }
    out.sort_by_key(|id| {
        (
            id.e,
            id.member_size(),
            id.core.parts().to_vec(),
            id.weight,
        )
    });
    out
}

/// Builds a thread pool sized by the explicit argument, else the
/// FOCKCB_THREADS environment variable, else one thread per core.
pub fn thread_pool(threads: Option<usize>) -> rayon::ThreadPool {
    let n = threads
        .or_else(|| {
            std::env::var("FOCKCB_THREADS")
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or(0);
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build()
        .expect("thread pool construction")
}

struct BlockOutcome {
    cases: u64,
    failures: Vec<String>,
    warnings: Vec<String>,
}

fn sweep_blocks(
    suite: &str,
    range: &BlockRange,
    threads: Option<usize>,
    per_block: impl Fn(&BlockId) -> BlockOutcome + Sync,
) -> SuiteReport {
    let start = Instant::now();
    let blocks = blocks_in_range(range);
    let pool = thread_pool(threads);
    let outcomes: Vec<BlockOutcome> =
        pool.install(|| blocks.par_iter().map(|id| per_block(id)).collect());
    let mut report = SuiteReport {
        suite: suite.to_string(),
        params: range.describe(),
        cases: 0,
        failures: Vec::new(),
        warnings: Vec::new(),
        millis: 0,
    };
    for o in outcomes {
        report.cases += o.cases;
        report.failures.extend(o.failures);
        report.warnings.extend(o.warnings);
    }
    report.millis = start.elapsed().as_millis();
    report
}

fn block_label(id: &BlockId) -> String {
    format!("e={} core=({}) w={}", id.e, id.core, id.weight)
}

/// Runner removal: for every ordered pair (λ, μ) of k-empty members of a
/// block with U_k(λ) = U_k(μ), the coefficient d^e_{λμ} equals
/// d^{e-1} of the runner-removed pair, the right side computed by an
/// independent run at the smaller modulus.
pub fn verify_runner_removal(range: &BlockRange, threads: Option<usize>) -> SuiteReport {
    let mut report = sweep_blocks("runner-removal", range, threads, |id| {
        let mut out = BlockOutcome {
            cases: 0,
            failures: Vec::new(),
            warnings: Vec::new(),
        };
        if id.e < 3 {
            return out;
        }
        let e = id.e;
        let table = BlockTable::build(id);
        let dmat = table.decomposition_matrix();
        let members = table.members();
        for k in 0..e {
            let empties: Vec<(usize, u64, Partition)> = members
                .iter()
                .enumerate()
                .filter(|(_, m)| is_k_empty(m, e, k))
                .map(|(i, m)| {
                    let u = ux(m, e, k).expect("member is k-empty");
                    let removed = remove_runner(m, e, k).expect("member is k-empty");
                    (i, u, removed)
                })
                .collect();
            for (i, u_la, la_rem) in &empties {
                for (j, u_mu, mu_rem) in &empties {
                    if u_la != u_mu {
                        continue;
                    }
                    let lhs = &dmat[*i][*j];
                    let rhs = q_decomp(la_rem, mu_rem, e - 1);
                    out.cases += 1;
                    if *lhs != rhs {
                        out.failures.push(format!(
                            "{} k={k}: d[{}][{}] = {} but d'[{}][{}] = {} at modulus {}",
                            block_label(id),
                            members[*i],
                            members[*j],
                            lhs,
                            la_rem,
                            mu_rem,
                            rhs,
                            e - 1
                        ));
                    }
                }
            }
        }
        out
    });
    if range.e_values.iter().any(|&e| e < 3) {
        report
            .warnings
            .push("modulus 2 blocks skipped: no modulus-1 side exists".into());
    }
    report
}

/// Mullineux compatibility: whenever μ and m(μ)′ are both k-empty, they
/// have the same statistic U_k; moreover runner removal commutes with
/// the map, m_{e−1}(μ^{-k})′ = (m(μ)′)^{-k}, with μ^{-k} again regular.
pub fn verify_mullineux(
    e_values: &[u32],
    max_size: u64,
    threads: Option<usize>,
) -> SuiteReport {
    let start = Instant::now();
    let pool = thread_pool(threads);
    let jobs: Vec<(u32, u64)> = e_values
        .iter()
        .flat_map(|&e| (0..=max_size).map(move |n| (e, n)))
        .collect();
    let outcomes: Vec<(u64, Vec<String>)> = pool.install(|| {
        jobs.par_iter()
            .map(|&(e, n)| {
                let mut cases = 0;
                let mut failures = Vec::new();
                for mu in Partition::all_of_size(n) {
                    if !mu.is_e_regular(e) {
                        continue;
                    }
                    let image = mullineux_conjugate(&mu, e).expect("mu is regular");
                    for k in 0..e {
                        if !(is_k_empty(&mu, e, k) && is_k_empty(&image, e, k)) {
                            continue;
                        }
                        cases += 1;
                        let a = ux(&mu, e, k).expect("k-empty");
                        let b = ux(&image, e, k).expect("k-empty");
                        if a != b {
                            failures.push(format!(
                                "e={e} k={k}: U({mu}) = {a} but U(m(μ)′ = {image}) = {b}"
                            ));
                        }
                        if e < 3 {
                            continue;
                        }
                        let mu_rem = remove_runner(&mu, e, k).expect("k-empty");
                        let image_rem = remove_runner(&image, e, k).expect("k-empty");
                        if !mu_rem.is_e_regular(e - 1) {
                            failures.push(format!(
                                "e={e} k={k}: {mu}^(-{k}) = {mu_rem} is not {}-regular",
                                e - 1
                            ));
                            continue;
                        }
                        let rem_image = mullineux_conjugate(&mu_rem, e - 1)
                            .expect("image is regular");
                        if rem_image != image_rem {
                            failures.push(format!(
                                "e={e} k={k}: m({mu_rem})′ = {rem_image} at modulus {} \
                                 but (m({mu})′)^(-{k}) = {image_rem}",
                                e - 1
                            ));
                        }
                    }
                }
                (cases, failures)
            })
            .collect()
    });
    let mut report = SuiteReport {
        suite: "mullineux".into(),
        params: format!("e={e_values:?} |mu|<={max_size}"),
        cases: 0,
        failures: Vec::new(),
        warnings: Vec::new(),
        millis: 0,
    };
    for (c, f) in outcomes {
        report.cases += c;
        report.failures.extend(f);
    }
    report.millis = start.elapsed().as_millis();
    report
}

/// Conjugation symmetry: d^e_{λ′, m(μ)}(q) = q^w · d^e_{λμ}(q⁻¹) for
/// every member λ and e-regular member μ of a weight-w block.
pub fn verify_llt(range: &BlockRange, threads: Option<usize>) -> SuiteReport {
    sweep_blocks("llt-conjugation", range, threads, |id| {
        let mut out = BlockOutcome {
            cases: 0,
            failures: Vec::new(),
            warnings: Vec::new(),
        };
        let e = id.e;
        let w = id.weight;
        let table = BlockTable::build(id);
        let conj_id = BlockId::new(e, id.core.conjugate(), w).expect("conjugate of a core");
        let conj_table = BlockTable::build(&conj_id);
        let qw = LaurentPoly::q_power(w as i64);
        for (j, mu) in table.members().iter().enumerate() {
            if !mu.is_e_regular(e) {
                continue;
            }
            let m_mu = mullineux(mu, e).expect("mu is regular");
            let Some(jj) = conj_table.index_of(&m_mu) else {
                out.failures.push(format!(
                    "{}: m({mu}) = {m_mu} is not in the conjugate block",
                    block_label(id)
                ));
                continue;
            };
            let col = table.canonical_column(j);
            let conj_col = conj_table.canonical_column(jj);
            for (i, la) in table.members().iter().enumerate() {
                let ii = conj_table
                    .index_of(&la.conjugate())
                    .expect("conjugate member lies in conjugate block");
                out.cases += 1;
                let expected = qw.clone() * col[i].bar();
                if conj_col[ii] != expected {
                    out.failures.push(format!(
                        "{}: d[{}][{}] = {} but q^{w}·bar d[{la}][{mu}] = {}",
                        block_label(id),
                        la.conjugate(),
                        m_mu,
                        conj_col[ii],
                        expected
                    ));
                }
            }
        }
        out
    })
}

/// The q^w oracle: in the column of an e-regular μ, the coefficient at
/// m(μ)′ is exactly q^w, every other nonzero coefficient has degree at
/// most w−1, and the unique q^w hit therefore recovers m(μ)′.
pub fn verify_welk(range: &BlockRange, threads: Option<usize>) -> SuiteReport {
    sweep_blocks("welk-oracle", range, threads, |id| {
        let mut out = BlockOutcome {
            cases: 0,
            failures: Vec::new(),
            warnings: Vec::new(),
        };
        let e = id.e;
        let w = id.weight;
        let table = BlockTable::build(id);
        let qw = LaurentPoly::q_power(w as i64);
        for (j, mu) in table.members().iter().enumerate() {
            if !mu.is_e_regular(e) {
                continue;
            }
            let image = mullineux_conjugate(mu, e).expect("mu is regular");
            let col = table.canonical_column(j);
            let mut hits = Vec::new();
            for (i, la) in table.members().iter().enumerate() {
                out.cases += 1;
                if col[i] == qw {
                    hits.push(la.clone());
                }
                if la != &image && !col[i].is_zero() {
                    let deg = col[i].max_exp().expect("nonzero");
                    if deg >= w as i64 {
                        out.failures.push(format!(
                            "{}: d[{la}][{mu}] = {} has degree {deg} >= w = {w}",
                            block_label(id),
                            col[i]
                        ));
                    }
                }
            }
            if hits != vec![image.clone()] {
                out.failures.push(format!(
                    "{}: q^{w} hits in column {mu} are {hits:?}, expected exactly m(μ)′ = {image}",
                    block_label(id)
                ));
            }
        }
        out
    })
}

/// Scopes equivalence: when the core has a ≥ max(w,1) addable residue-k
/// nodes and no removable ones, adding them all is a bijection of blocks
/// under which members keep exactly a addable and no removable residue-k
/// nodes and the decomposition matrices agree entry for entry.
pub fn verify_scopes(range: &BlockRange, threads: Option<usize>) -> SuiteReport {
    sweep_blocks("scopes", range, threads, |id| {
        let mut out = BlockOutcome {
            cases: 0,
            failures: Vec::new(),
            warnings: Vec::new(),
        };
        let e = id.e;
        for k in 0..e {
            let a = nodes_by_residue(&id.core, e, k, NodeKind::Addable).len();
            // A move with no addable nodes is the identity; skip it, and
            // skip directions where the hypothesis a ≥ w fails.
            if a == 0 || (a as u64) < id.weight {
                continue;
            }
            // The hypothesis holds (a core never carries both addable and
            // removable nodes of one residue), so any error now is a
            // genuine counterexample: some member has a removable
            // residue-k node.
            let (target, pairs) = match scopes_adjacent(id, k) {
                Ok(x) => x,
                Err(err) => {
                    out.failures
                        .push(format!("{} k={k}: {err}", block_label(id)));
                    continue;
                }
            };
            let table = BlockTable::build(id);
            let target_table = BlockTable::build(&target);
            if pairs.len() != target_table.members().len() {
                out.failures.push(format!(
                    "{} k={k}: image count {} differs from target block size {}",
                    block_label(id),
                    pairs.len(),
                    target_table.members().len()
                ));
                continue;
            }
            let mut image_index = Vec::with_capacity(pairs.len());
            let mut ok = true;
            for (la, image) in &pairs {
                let adds = nodes_by_residue(la, e, k, NodeKind::Addable).len();
                let rems = nodes_by_residue(la, e, k, NodeKind::Removable).len();
                if adds != a || rems != 0 {
                    out.failures.push(format!(
                        "{} k={k}: member {la} has {adds} addable / {rems} removable \
                         residue-{k} nodes, expected {a} / 0",
                        block_label(id)
                    ));
                    ok = false;
                    break;
                }
                match target_table.index_of(image) {
                    Some(ii) => image_index.push((
                        table.index_of(la).expect("pair source is a member"),
                        ii,
                    )),
                    None => {
                        out.failures.push(format!(
                            "{} k={k}: image {image} of {la} missing from target block",
                            block_label(id)
                        ));
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                continue;
            }
            let dmat = table.decomposition_matrix();
            let target_dmat = target_table.decomposition_matrix();
            for &(i, ii) in &image_index {
                for &(j, jj) in &image_index {
                    out.cases += 1;
                    if dmat[i][j] != target_dmat[ii][jj] {
                        out.failures.push(format!(
                            "{} k={k}: d[{}][{}] = {} but image pair gives {}",
                            block_label(id),
                            table.members()[i],
                            table.members()[j],
                            dmat[i][j],
                            target_dmat[ii][jj]
                        ));
                    }
                }
            }
        }
        out
    })
}

/// Triangularity and involutivity: coefficients vanish outside the
/// refined dominance interval [m(μ)′, μ], the bar matrix squares to the
/// identity, diagonals are 1, off-diagonal coefficients lie in qZ[q],
/// and (as a warning only) coefficients are non-negative.
pub fn verify_triangularity(range: &BlockRange, threads: Option<usize>) -> SuiteReport {
    sweep_blocks("triangularity", range, threads, |id| {
        let mut out = BlockOutcome {
            cases: 0,
            failures: Vec::new(),
            warnings: Vec::new(),
        };
        let e = id.e;
        let table = BlockTable::build(id);
        let members = table.members();
        let n = members.len();
        let dmat = table.decomposition_matrix();

        // Bar involutivity: Σ_t a[i][t] · bar(a[t][j]) = δ_ij.
        for i in 0..n {
            for j in 0..n {
                out.cases += 1;
                let mut acc = LaurentPoly::zero();
                for t in 0..n {
                    let left = table.bar_coeff(i, t);
                    let right = table.bar_coeff(t, j);
                    if !left.is_zero() && !right.is_zero() {
                        acc += &(left.clone() * right.bar());
                    }
                }
                let expected = if i == j {
                    LaurentPoly::one()
                } else {
                    LaurentPoly::zero()
                };
                if acc != expected {
                    out.failures.push(format!(
                        "{}: bar matrix squared has entry {} at ({}, {})",
                        block_label(id),
                        acc,
                        members[i],
                        members[j]
                    ));
                }
            }
        }

        // Bar-invariance of each canonical vector: expanding bar(G(μ))
        // through the bar matrix must reproduce G(μ) coefficient for
        // coefficient, d_{νμ}(q) = Σ_λ a_{νλ}(q)·d_{λμ}(q⁻¹).
        for j in 0..n {
            for i in 0..n {
                out.cases += 1;
                let mut acc = LaurentPoly::zero();
                for t in 0..n {
                    let a = table.bar_coeff(i, t);
                    if !a.is_zero() && !dmat[t][j].is_zero() {
                        acc += &(a.clone() * dmat[t][j].bar());
                    }
                }
                if acc != dmat[i][j] {
                    out.failures.push(format!(
                        "{}: bar(G({})) has coefficient {} at {}, expected {}",
                        block_label(id),
                        members[j],
                        acc,
                        members[i],
                        dmat[i][j]
                    ));
                }
            }
        }

        for (j, mu) in members.iter().enumerate() {
            let lowest = if mu.is_e_regular(e) {
                Some(mullineux_conjugate(mu, e).expect("mu is regular"))
            } else {
                None
            };
            for (i, la) in members.iter().enumerate() {
                out.cases += 1;
                let d = &dmat[i][j];
                if i == j {
                    if !d.is_one() {
                        out.failures
                            .push(format!("{}: diagonal at {mu} is {d}", block_label(id)));
                    }
                    continue;
                }
                if d.is_zero() {
                    continue;
                }
                if !dominates(mu, la, e) {
                    out.failures.push(format!(
                        "{}: d[{la}][{mu}] = {d} nonzero but {mu} does not dominate {la}",
                        block_label(id)
                    ));
                }
                if let Some(lowest) = &lowest {
                    if !dominates(la, lowest, e) {
                        out.failures.push(format!(
                            "{}: d[{la}][{mu}] = {d} nonzero but {la} does not dominate \
                             m(μ)′ = {lowest}",
                            block_label(id)
                        ));
                    }
                }
                if d.min_exp().expect("nonzero") < 1 {
                    out.failures.push(format!(
                        "{}: d[{la}][{mu}] = {d} is not in qZ[q]",
                        block_label(id)
                    ));
                }
                if !d.is_nonnegative() {
                    out.warnings.push(format!(
                        "{}: d[{la}][{mu}] = {d} has a negative coefficient",
                        block_label(id)
                    ));
                }
            }
        }
        out
    })
}

/// Runs every suite at the given ranges (the Mullineux sweep's size cap
/// is derived from the largest block in the range).
pub fn verify_all(range: &BlockRange, threads: Option<usize>) -> Vec<SuiteReport> {
    let max_size = range
        .e_values
        .iter()
        .map(|&e| range.max_core_size + e as u64 * range.max_weight)
        .max()
        .unwrap_or(0);
    vec![
        verify_runner_removal(range, threads),
        verify_mullineux(&range.e_values, max_size, threads),
        verify_llt(range, threads),
        verify_welk(range, threads),
        verify_scopes(range, threads),
        verify_triangularity(range, threads),
    ]
}
