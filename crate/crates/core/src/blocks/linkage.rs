//! Combinatorial linkage rules checked against a block decomposition.
//! Each check lists violations; an empty list means the rule holds.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{oracle, BlockDecomposition};
use crate::error::Result;
use crate::partitions::{p_core, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkageReport {
    pub check: String,
    pub n: usize,
    pub p: u64,
    pub violations: Vec<String>,
}

impl LinkageReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn report(check: &str, blocks: &BlockDecomposition, violations: Vec<String>) -> LinkageReport {
    LinkageReport { check: check.to_string(), n: blocks.n, p: blocks.p, violations }
}

/// Every way of removing a horizontal or vertical domino from `mu`.
fn remove_dominoes(mu: &Partition) -> Vec<Partition> {
    let horizontal = |m: &Partition| -> Vec<Partition> {
        (0..m.len())
            .filter(|&i| m.part(i) >= 2 && m.part(i) - 2 >= m.part(i + 1))
            .map(|i| {
                let mut parts = m.parts().to_vec();
                parts[i] -= 2;
                Partition::new(parts).expect("domino removal leaves a partition")
            })
            .collect()
    };
    let mut out = horizontal(mu);
    out.extend(horizontal(&mu.transpose()).iter().map(Partition::transpose));
    out
}

/// Pairs `(μ, λ)` with `λ` obtained from `μ` by removing a domino that the
/// decomposition puts in different blocks.
pub fn two_hook_violations(blocks: &BlockDecomposition) -> Vec<String> {
    let mut out = Vec::new();
    for mu in blocks.blocks.iter().flatten() {
        for lam in remove_dominoes(mu) {
            if !blocks.same_block(mu, &lam) {
                out.push(format!("{mu} and {lam} differ by a domino but lie in different blocks"));
            }
        }
    }
    out
}

/// Blocks whose transpose is not itself a block.
pub fn transpose_violations(blocks: &BlockDecomposition) -> Vec<String> {
    let all: BTreeSet<BTreeSet<&Partition>> = blocks.blocks.iter().map(|b| b.iter().collect()).collect();
    let mut out = Vec::new();
    for b in &blocks.blocks {
        let image: Vec<Partition> = b.iter().map(Partition::transpose).collect();
        if !all.contains(&image.iter().collect()) {
            let shown: Vec<String> = b.iter().map(Partition::to_string).collect();
            out.push(format!("the transpose of block {{{}}} is not a block", shown.join(" ")));
        }
    }
    out
}

/// Same-size pairs with equal `p`-core in different blocks.
pub fn p_core_violations(blocks: &BlockDecomposition) -> Vec<String> {
    let members: Vec<&Partition> = blocks.blocks.iter().flatten().collect();
    let p = blocks.p as usize;
    let mut out = Vec::new();
    for (i, a) in members.iter().enumerate() {
        for b in &members[i + 1..] {
            if a.size() == b.size() && p_core(a, p) == p_core(b, p) && !blocks.same_block(a, b) {
                out.push(format!("{a} and {b} share a {p}-core but lie in different blocks"));
            }
        }
    }
    out
}

/// Domino removal stays inside an oracle block.
pub fn check_two_hook_linkage(n: usize, p: u64) -> Result<LinkageReport> {
    let blocks = oracle(n, p)?;
    Ok(report("two-hook", &blocks, two_hook_violations(&blocks)))
}

/// The oracle blocks are permuted by transposition.
pub fn check_transpose_symmetry(n: usize, p: u64) -> Result<LinkageReport> {
    let blocks = oracle(n, p)?;
    Ok(report("transpose", &blocks, transpose_violations(&blocks)))
}

/// Equal `p`-cores of equal size imply the same oracle block.
pub fn check_p_core_linkage(n: usize, p: u64) -> Result<LinkageReport> {
    let blocks = oracle(n, p)?;
    Ok(report("p-core", &blocks, p_core_violations(&blocks)))
}
