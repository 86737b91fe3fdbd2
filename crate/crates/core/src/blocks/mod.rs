//! Blocks of `A_n` as a set partition of `Λ_n`: the closed-form classifier,
//! a brute-force oracle through central idempotents, and linkage checks
//! that compare the oracle against combinatorial rules.

mod classify;
mod linkage;
mod oracle;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{bail, Result};
use crate::partitions::{enumerate_lambda, Partition};

pub use classify::{classify, single_block_bound, staircase_eligibility, StaircaseEligibility};
pub use linkage::{
    check_p_core_linkage, check_transpose_symmetry, check_two_hook_linkage, p_core_violations, transpose_violations,
    two_hook_violations, LinkageReport,
};
pub use oracle::{oracle, oracle_with_bound};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Classifier,
    Oracle,
}

/// A partition of `Λ_n` into blocks. Members of a block are sorted by the
/// crate's linear extension of `⊴`, and blocks by their first member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    pub n: usize,
    pub p: u64,
    pub provenance: Provenance,
    pub blocks: Vec<Vec<Partition>>,
}

impl BlockDecomposition {
    /// Normalises the order and checks that `blocks` partitions `Λ_n`.
    pub fn new(n: usize, p: u64, provenance: Provenance, mut blocks: Vec<Vec<Partition>>) -> Result<Self> {
        blocks.retain(|b| !b.is_empty());
        for b in &mut blocks {
            b.sort();
        }
        blocks.sort_by(|a, b| a[0].cmp(&b[0]));
        let expected: BTreeSet<Partition> = enumerate_lambda(n, 0, false).iter().cloned().collect();
        let mut seen = BTreeSet::new();
        for lam in blocks.iter().flatten() {
            if !seen.insert(lam.clone()) {
                bail!(Internal, "{lam} appears in two blocks");
            }
        }
        if seen != expected {
            bail!(Internal, "blocks do not cover Λ_{n} exactly");
        }
        Ok(BlockDecomposition { n, p, provenance, blocks })
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Index of the block containing `lambda`.
    pub fn block_of(&self, lambda: &Partition) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(lambda).is_ok())
    }

    pub fn same_block(&self, a: &Partition, b: &Partition) -> bool {
        matches!((self.block_of(a), self.block_of(b)), (Some(x), Some(y)) if x == y)
    }

    /// Equality as set partitions, ignoring provenance.
    pub fn same_partition(&self, other: &Self) -> bool {
        self.n == other.n && self.blocks == other.blocks
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("block decompositions serialise")
    }
}

impl fmt::Display for BlockDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = if self.p == 0 { "Q".to_string() } else { format!("GF({})", self.p) };
        let source = match self.provenance {
            Provenance::Classifier => "classifier",
            Provenance::Oracle => "oracle",
        };
        write!(f, "A_{} over {field}: {} block(s) [{source}]", self.n, self.blocks.len())?;
        for (i, b) in self.blocks.iter().enumerate() {
            let members: Vec<String> = b.iter().map(Partition::to_string).collect();
            write!(f, "\n  {}: {}", i + 1, members.join(" "))?;
        }
        Ok(())
    }
}
