//! The canonical basis of a block: bar-involution matrix, triangular
//! recursion, canonical vectors, and q-decomposition coefficients.

use crate::abacus::{dominates, e_core, e_weight, extended_beta_set};
use crate::blocks::{enumerate_block, BlockId};
use crate::laurent::LaurentPoly;
use crate::partition::Partition;
use crate::wedge::{bar_standard_with, Straightener};
use std::collections::HashMap;

/// A block's members in a fixed linear order (most dominant first),
/// together with the bar-involution coefficients between its standard
/// basis vectors.
pub struct BlockTable {
    id: BlockId,
    r: usize,
    members: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// amat[i][j] = coefficient of |members[i]⟩ in bar(|members[j]⟩);
    /// lower triangular with unit diagonal.
    amat: Vec<Vec<LaurentPoly>>,
}

/// Sort key giving a linear extension of the refined dominance order:
/// the extended beta-multiset expanded to a descending vector.  At a
/// fixed bead count the key is injective, and pointwise domination of
/// sorted vectors implies lexicographic order.
fn dominance_key(la: &Partition, e: u32, r: usize) -> Vec<u64> {
    extended_beta_set(la, e, r)
        .expect("bead count exceeds part count")
        .expanded_desc()
}

impl BlockTable {
    pub fn build(id: &BlockId) -> Self {
        let members = enumerate_block(id);
        Self::build_from_members(id, members, true)
    }

    /// Builds the table for a list of members.  With `full` set, a bar
    /// image outside the list is an engine bug; for interval-restricted
    /// lists such terms provably do not contribute to the recursion and
    /// are dropped.
    fn build_from_members(id: &BlockId, mut members: Vec<Partition>, full: bool) -> Self {
        let r = id.common_bead_count();
        members.sort_unstable_by(|a, b| {
            dominance_key(b, id.e, r).cmp(&dominance_key(a, id.e, r))
        });
        let index: HashMap<Partition, usize> = members
            .iter()
            .enumerate()
            .map(|(i, la)| (la.clone(), i))
            .collect();
        let n = members.len();
        let mut amat = vec![vec![LaurentPoly::zero(); n]; n];
        let mut s = Straightener::new(id.e);
        for (j, mu) in members.iter().enumerate() {
            let col = bar_standard_with(&mut s, mu, r).expect("r chosen above |mu|");
            for (nu, c) in col {
                if let Some(&i) = index.get(&nu) {
                    amat[i][j] = c;
                } else if full {
                    panic!("bar image of {mu} left the block: {nu}");
                }
            }
            assert!(
                amat[index[mu]][j].is_one(),
                "bar diagonal must be 1 after normalisation"
            );
        }
        BlockTable {
            id: id.clone(),
            r,
            members,
            index,
            amat,
        }
    }

    pub fn id(&self) -> &BlockId {
        &self.id
    }

    /// Members in the processing order, most dominant first.
    pub fn members(&self) -> &[Partition] {
        &self.members
    }

    pub fn bead_count(&self) -> usize {
        self.r
    }

    pub fn index_of(&self, la: &Partition) -> Option<usize> {
        self.index.get(la).copied()
    }

    /// Bar coefficient a_{νμ} by member indices (row ν, column μ).
    pub fn bar_coeff(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.amat[i][j]
    }

    /// One column of the decomposition matrix: d_{λ,members[j]} for every
    /// member λ, computed by the triangular recursion
    /// d_ν(q) − d_ν(q⁻¹) = Σ_{ξ between μ and ν} a_{νξ}(q) d_ξ(q⁻¹),
    /// taking the strictly-positive part at each step.
    pub fn canonical_column(&self, j: usize) -> Vec<LaurentPoly> {
        let n = self.members.len();
        let mut d = vec![LaurentPoly::zero(); n];
        d[j] = LaurentPoly::one();
        for i in j + 1..n {
            let mut g = LaurentPoly::zero();
            for t in j..i {
                if !self.amat[i][t].is_zero() && !d[t].is_zero() {
                    g += &(self.amat[i][t].clone() * d[t].bar());
                }
            }
            if !g.is_zero() {
                d[i] = g.solve_bar_difference();
            }
        }
        d
    }

    /// The full decomposition matrix, dmat[i][j] = d_{members[i], members[j]}.
    pub fn decomposition_matrix(&self) -> Vec<Vec<LaurentPoly>> {
        let n = self.members.len();
        let mut dmat = vec![vec![LaurentPoly::zero(); n]; n];
        for j in 0..n {
            for (i, v) in self.canonical_column(j).into_iter().enumerate() {
                dmat[i][j] = v;
            }
        }
        dmat
    }
}

/// A canonical basis vector G(μ) = Σ_λ d_{λμ}(q) |λ⟩.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CanonicalVector {
    mu: Partition,
    /// Nonzero coefficients, most dominant λ first.
    terms: Vec<(Partition, LaurentPoly)>,
}

impl CanonicalVector {
    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn terms(&self) -> &[(Partition, LaurentPoly)] {
        &self.terms
    }

    pub fn coeff(&self, la: &Partition) -> LaurentPoly {
        self.terms
            .iter()
            .find(|(p, _)| p == la)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(LaurentPoly::zero)
    }
}

/// The canonical basis vector labelled by μ, over μ's whole block.
pub fn canonical_vector(mu: &Partition, e: u32) -> CanonicalVector {
    let id = BlockId::new(e, e_core(mu, e), e_weight(mu, e)).expect("e_core returns a core");
    let table = BlockTable::build(&id);
    let j = table.index_of(mu).expect("mu lies in its own block");
    let col = table.canonical_column(j);
    let terms = table
        .members
        .iter()
        .zip(col)
        .filter(|(_, c)| !c.is_zero())
        .map(|(la, c)| (la.clone(), c))
        .collect();
    CanonicalVector {
        mu: mu.clone(),
        terms,
    }
}

/// The q-decomposition coefficient d^e_{λμ}(q): the coefficient of |λ⟩
/// in G(μ).  Zero unless λ and μ share their e-core and e-weight and
/// μ dominates λ in the refined order; computed on the dominance
/// interval [λ, μ] only, which is closed under the recursion.
pub fn q_decomp(la: &Partition, mu: &Partition, e: u32) -> LaurentPoly {
    if la == mu {
        return LaurentPoly::one();
    }
    if la.size() != mu.size()
        || e_core(la, e) != e_core(mu, e)
        || !dominates(mu, la, e)
    {
        return LaurentPoly::zero();
    }
    let id = BlockId::new(e, e_core(mu, e), e_weight(mu, e)).expect("e_core returns a core");
    let interval: Vec<Partition> = enumerate_block(&id)
        .into_iter()
        .filter(|xi| dominates(mu, xi, e) && dominates(xi, la, e))
        .collect();
    let table = BlockTable::build_from_members(&id, interval, false);
    let j = table.index_of(mu).expect("mu is in the interval");
    let i = table.index_of(la).expect("la is in the interval");
    table.canonical_column(j)[i].clone()
}
