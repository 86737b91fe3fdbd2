//! The verification grid: eleven checks comparing closed-form answers with
//! brute-force computations and algebraic identities. Each check returns an
//! [`Outcome`]; nothing here panics on a mismatch.
//!
//! `cap` bounds every range of `n` (pass `usize::MAX` for the full grid);
//! the partition checks do not depend on it. `seed` fixes all sampling.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::perm;
use crate::algebra::standard::DEFAULT_BASIS_BOUND;
use crate::algebra::symmetric::mullineux_by_modules;
use crate::algebra::{gram_rank, localise, standard_basis, standard_dimension, Representation, StandardModule};
use crate::blocks::{
    classify, oracle, p_core_violations, single_block_bound, transpose_violations, two_hook_violations,
};
use crate::diagrams::layers::compose_via_layers;
use crate::diagrams::{
    compose_signed, enumerate::double_factorial_odd, enumerate_diagrams, phi, special_diagrams, BrauerDiagram,
    SignedDiagram,
};
use crate::error::Result;
use crate::linalg::{Arith, PrimeField, RationalField};
use crate::partitions::cores::p_core_by_removal;
use crate::partitions::{enumerate_lambda, in_lambda_prime, mullineux, p_core, two_core, Partition};

/// Result of one check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    /// A count of what was checked, or the first few failures.
    pub detail: String,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{status}] {:>2}. {}: {}", self.id, self.title, self.detail)
    }
}

/// Collects failures and renders a short detail line.
struct Tally {
    checked: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { checked: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn error(&mut self, what: String) {
        self.checked += 1;
        self.failures.push(what);
    }

    fn absorb(&mut self, other: Tally) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }

    fn finish(self, id: usize, title: &'static str) -> Outcome {
        let passed = self.failures.is_empty();
        let detail = if passed {
            format!("{} checks", self.checked)
        } else {
            let shown: Vec<&str> = self.failures.iter().take(3).map(String::as_str).collect();
            format!("{} of {} checks failed; {}", self.failures.len(), self.checked, shown.join("; "))
        };
        Outcome { id, title, passed, detail }
    }
}

fn capped(range: std::ops::RangeInclusive<usize>, cap: usize) -> std::ops::RangeInclusive<usize> {
    *range.start()..=(*range.end()).min(cap)
}

fn rng_for(seed: u64, id: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(id as u64))
}

pub const TITLES: [&str; 11] = [
    "classifier agrees with the centre oracle",
    "single block from the bound",
    "characteristic zero and large p",
    "signed composition",
    "anti-involution",
    "idempotent truncation",
    "dimension identities",
    "standard basis",
    "simple heads from Gram ranks",
    "cores and Mullineux map",
    "linkage rules",
];

/// Runs all checks, in parallel, and returns them in order.
pub fn run_all(cap: usize, seed: u64) -> Vec<Outcome> {
    (1..=TITLES.len()).into_par_iter().map(|id| run(id, cap, seed)).collect()
}

/// Runs check `id` (1-based).
pub fn run(id: usize, cap: usize, seed: u64) -> Outcome {
    let tally = match id {
        1 => classifier_vs_oracle(cap),
        2 => single_block(cap),
        3 => characteristic_zero(cap),
        4 => signed_composition(cap, seed),
        5 => anti_involution(cap, seed),
        6 => truncation(cap),
        7 => dimensions(cap),
        8 => basis(cap),
        9 => simple_heads(cap),
        10 => combinatorics(seed),
        11 => linkage(cap),
        _ => {
            let mut t = Tally::new();
            t.error(format!("no check numbered {id}"));
            return t.finish(id, "unknown");
        }
    };
    tally.finish(id, TITLES[id - 1])
}

fn classifier_vs_oracle(cap: usize) -> Tally {
    let cells: Vec<(usize, u64)> = capped(2..=5, cap).flat_map(|n| [3u64, 5, 7, 11].map(|p| (n, p))).collect();
    let results: Vec<Tally> = cells
        .par_iter()
        .map(|&(n, p)| {
            let mut t = Tally::new();
            match (classify(n, p), oracle(n, p)) {
                (Ok(c), Ok(o)) => t.check(c.same_partition(&o), || format!("n={n} p={p}: {c} vs {o}")),
                (Err(e), _) | (_, Err(e)) => t.error(format!("n={n} p={p}: {e}")),
            }
            t
        })
        .collect();
    results.into_iter().fold(Tally::new(), |mut acc, t| {
        acc.absorb(t);
        acc
    })
}

fn single_block(cap: usize) -> Tally {
    let mut t = Tally::new();
    for p in [3u64, 5, 7] {
        for n in capped(single_block_bound(p)..=12, cap) {
            match classify(n, p) {
                Ok(b) => t.check(b.len() == 1, || format!("n={n} p={p} has {} blocks", b.len())),
                Err(e) => t.error(format!("n={n} p={p}: {e}")),
            }
        }
    }
    t
}

fn characteristic_zero(cap: usize) -> Tally {
    let mut t = Tally::new();
    for n in capped(0..=12, cap) {
        let mut fibres: BTreeMap<Partition, Vec<Partition>> = BTreeMap::new();
        for lam in enumerate_lambda(n, 0, false).iter() {
            fibres.entry(two_core(lam)).or_default().push(lam.clone());
        }
        match classify(n, 0) {
            Ok(b) => {
                let mut expected: Vec<Vec<Partition>> = fibres.into_values().collect();
                expected.iter_mut().for_each(|f| f.sort());
                expected.sort();
                let mut got = b.blocks.clone();
                got.sort();
                t.check(got == expected, || format!("n={n}: classifier differs from 2-core fibres"));
            }
            Err(e) => t.error(format!("n={n} p=0: {e}")),
        }
    }
    for p in [7u64, 11, 13] {
        for n in capped(0..=p as usize - 1, cap) {
            match (classify(n, p), classify(n, 0)) {
                (Ok(a), Ok(b)) => t.check(a.same_partition(&b), || format!("n={n} p={p} differs from p=0")),
                (Err(e), _) | (_, Err(e)) => t.error(format!("n={n} p={p}: {e}")),
            }
        }
    }
    t
}

fn signed(d: &BrauerDiagram) -> SignedDiagram {
    SignedDiagram::plus(d.clone())
}

fn signed_composition(cap: usize, seed: u64) -> Tally {
    let mut t = Tally::new();
    if cap >= 3 {
        let ds = enumerate_diagrams(3, 3);
        for a in &ds {
            for b in &ds {
                let ab = compose_signed(a, b);
                for c in &ds {
                    let left = ab.then(&signed(c));
                    let right = signed(a).then(&compose_signed(b, c));
                    t.check(left == right, || format!("({a}·{b})·{c} = {left} but {a}·({b}·{c}) = {right}"));
                }
            }
        }
    }
    let mut rng = rng_for(seed, 4);
    for n in capped(4..=5, cap) {
        let ds = enumerate_diagrams(n, n);
        for _ in 0..10_000 {
            let (a, b, c) = (ds.choose(&mut rng).unwrap(), ds.choose(&mut rng).unwrap(), ds.choose(&mut rng).unwrap());
            let left = compose_signed(a, b).then(&signed(c));
            let right = signed(a).then(&compose_signed(b, c));
            t.check(left == right, || format!("associativity fails on {a}, {b}, {c}"));
        }
    }
    let mut pairs = Vec::new();
    for n in capped(0..=3, cap) {
        let ds = enumerate_diagrams(n, n);
        for a in &ds {
            for b in &ds {
                pairs.push((a.clone(), b.clone()));
            }
        }
    }
    if cap >= 4 {
        let ds = enumerate_diagrams(4, 4);
        for _ in 0..10_000 {
            pairs.push((ds.choose(&mut rng).unwrap().clone(), ds.choose(&mut rng).unwrap().clone()));
        }
    }
    let failures: Vec<Option<String>> = pairs
        .par_iter()
        .map(|(a, b)| match compose_via_layers(a, b) {
            Ok(via) if via == compose_signed(a, b) => None,
            Ok(via) => Some(format!("{a}·{b}: marking rule {} vs layers {via}", compose_signed(a, b))),
            Err(e) => Some(format!("{a}·{b}: {e}")),
        })
        .collect();
    for f in failures {
        match f {
            None => t.check(true, String::new),
            Some(msg) => t.error(msg),
        }
    }
    t
}

fn phi_signed(x: &SignedDiagram) -> SignedDiagram {
    match x {
        SignedDiagram::Zero => SignedDiagram::Zero,
        SignedDiagram::Term { sign, diagram } => phi(diagram).scaled(*sign),
    }
}

fn anti_involution(cap: usize, seed: u64) -> Tally {
    let mut t = Tally::new();
    let mut rng = rng_for(seed, 5);
    for n in capped(1..=4, cap) {
        let ds = enumerate_diagrams(n, n);
        for _ in 0..1_000 {
            let (a, b) = (ds.choose(&mut rng).unwrap(), ds.choose(&mut rng).unwrap());
            let lhs = phi_signed(&compose_signed(a, b));
            let rhs = phi(b).then(&phi(a));
            t.check(lhs == rhs, || format!("φ({a}·{b}) = {lhs} but φ({b})φ({a}) = {rhs}"));
        }
    }
    for n in capped(0..=4, cap) {
        for w in perm::all(n) {
            let sign = if perm::length(&w).is_multiple_of(2) { 1 } else { -1 };
            let expected = signed(&BrauerDiagram::permutation(&perm::inverse(&w))).scaled(sign);
            let got = phi(&BrauerDiagram::permutation(&w));
            t.check(got == expected, || format!("φ of permutation {w:?} is {got}"));
        }
    }
    let x = BrauerDiagram::crossing();
    t.check(phi(&x) == signed(&x).negated(), || "φ(X) ≠ -X".into());
    t.check(phi(&BrauerDiagram::cap()) == signed(&BrauerDiagram::cup()), || "φ(cap) ≠ cup".into());
    t.check(phi(&BrauerDiagram::cup()) == signed(&BrauerDiagram::cap()).negated(), || "φ(cup) ≠ -cap".into());
    t
}

fn truncation(cap: usize) -> Tally {
    let mut t = Tally::new();
    for n in capped(3..=8, cap) {
        let (e, g, f) = match special_diagrams(n) {
            Ok(triple) => triple,
            Err(err) => {
                t.error(format!("n={n}: {err}"));
                continue;
            }
        };
        t.check(compose_signed(&e, &e) == signed(&e), || format!("ε_{n}² ≠ ε_{n}"));
        t.check(compose_signed(&f, &g) == signed(&BrauerDiagram::identity(n - 2)), || format!("f·g ≠ 1 for n={n}"));
        t.check(compose_signed(&g, &f) == signed(&e), || format!("g·f ≠ ε_{n}"));
    }
    for n in capped(3..=5, cap) {
        for lam in enumerate_lambda(n, 0, false).iter() {
            let expected = if lam.size() <= n - 2 { standard_dimension(n - 2, lam) } else { 0 };
            for (field, got) in [
                ("Q", localised_dim(n, lam, RationalField)),
                ("GF(3)", localised_dim(n, lam, PrimeField::new(3).unwrap())),
            ] {
                match got {
                    Ok(d) => t.check(d == expected, || {
                        format!("ε_{n}W_{n}{lam} over {field} has dim {d}, expected {expected}")
                    }),
                    Err(e) => t.error(format!("localising W_{n}{lam}: {e}")),
                }
            }
        }
    }
    t
}

fn localised_dim<A: Arith>(n: usize, lam: &Partition, arith: A) -> Result<usize> {
    Ok(localise(StandardModule::new(n, lam, arith)?)?.dim())
}

fn dimensions(cap: usize) -> Tally {
    let mut t = Tally::new();
    for n in capped(0..=6, cap) {
        let expected = double_factorial_odd(2 * n);
        let count = enumerate_diagrams(n, n).len();
        t.check(count == expected, || format!("A_{n} has {count} diagrams, expected {expected}"));
        let mut sum = 0;
        for lam in enumerate_lambda(n, 0, false).iter() {
            match StandardModule::new(n, lam, PrimeField::new(3).unwrap()) {
                Ok(m) => {
                    let d = m.dim();
                    t.check(d == standard_dimension(n, lam), || format!("W_{n}{lam} has dim {d}"));
                    sum += d * d;
                }
                Err(e) => t.error(format!("W_{n}{lam}: {e}")),
            }
        }
        t.check(sum == expected, || format!("Σ dim² over Λ_{n} is {sum}, expected {expected}"));
    }
    t
}

fn basis_checks<A: Arith>(n: usize, arith: A, t: &mut Tally) {
    let label = arith.field();
    match standard_basis(n, DEFAULT_BASIS_BOUND) {
        Ok(b) => {
            let expected = double_factorial_odd(2 * n);
            t.check(b.len() == expected, || format!("ℬ_{n} has {} elements, expected {expected}", b.len()));
            match b.check_triangularity(arith) {
                Ok(v) => t.check(v.is_empty(), || format!("n={n} over {label}: {}", v.join("; "))),
                Err(e) => t.error(format!("ℬ_{n} over {label} is not a basis: {e}")),
            }
        }
        Err(e) => t.error(format!("ℬ_{n}: {e}")),
    }
}

fn basis(cap: usize) -> Tally {
    let mut t = Tally::new();
    for n in capped(0..=4, cap) {
        basis_checks(n, RationalField, &mut t);
        for p in [3u64, 5] {
            basis_checks(n, PrimeField::new(p).unwrap(), &mut t);
        }
    }
    t
}

fn simple_heads(cap: usize) -> Tally {
    let mut t = Tally::new();
    for n in capped(0..=4, cap) {
        for p in [3u64, 5] {
            for lam in enumerate_lambda(n, 0, false).iter() {
                match gram_rank(n, lam, p) {
                    Ok(rank) => {
                        let expected = in_lambda_prime(n, p as u32, lam);
                        t.check((rank > 0) == expected, || format!("n={n} p={p} {lam}: rank {rank}"));
                    }
                    Err(e) => t.error(format!("n={n} p={p} {lam}: {e}")),
                }
            }
        }
    }
    t
}

fn combinatorics(seed: u64) -> Tally {
    let mut t = Tally::new();
    let mut rng = rng_for(seed, 10);
    let by_size: Vec<Vec<Partition>> = (0..=20).map(Partition::all_of_size).collect();
    for _ in 0..200 {
        let size = rng.gen_range(0..by_size.len());
        let lam = by_size[size].choose(&mut rng).unwrap();
        for p in [2usize, 3, 5, 7] {
            let core = p_core(lam, p);
            for _ in 0..100 {
                let other = p_core_by_removal(lam, p, &mut rng);
                t.check(other == core, || format!("{p}-core of {lam}: {core} vs {other} by removal"));
            }
        }
    }
    for p in [3u32, 5, 7] {
        for size in 0..=8 {
            for lam in Partition::all_of_size(size).into_iter().filter(|l| l.is_p_restricted(p)) {
                match mullineux(&lam, p).and_then(|m| Ok((mullineux(&m, p)?, m))) {
                    Ok((back, m)) => {
                        t.check(m.is_p_restricted(p), || format!("{lam}^M = {m} is not {p}-restricted"));
                        t.check(back == lam, || format!("({lam}^M)^M = {back} for p={p}"));
                        if p_core(&lam, p as usize) == lam {
                            t.check(m == lam.transpose(), || format!("{p}-core {lam} has {lam}^M = {m}"));
                        }
                    }
                    Err(e) => t.error(format!("mullineux {lam} p={p}: {e}")),
                }
            }
        }
    }
    let restricted: Vec<Partition> =
        (0..=6).flat_map(Partition::all_of_size).filter(|l| l.is_p_restricted(3)).collect();
    let modular: Vec<(Partition, Result<Partition>, Result<Partition>)> = restricted
        .into_par_iter()
        .map(|lam| {
            let a = mullineux(&lam, 3);
            let b = mullineux_by_modules(&lam, 3);
            (lam, a, b)
        })
        .collect();
    for (lam, a, b) in modular {
        match (a, b) {
            (Ok(a), Ok(b)) => t.check(a == b, || format!("{lam}: symbols give {a}, modules give {b}")),
            (Err(e), _) | (_, Err(e)) => t.error(format!("{lam} p=3: {e}")),
        }
    }
    t
}

fn linkage(cap: usize) -> Tally {
    let cells: Vec<(usize, u64)> = capped(0..=5, cap).flat_map(|n| [3u64, 5, 7].map(|p| (n, p))).collect();
    let results: Vec<Tally> = cells
        .par_iter()
        .map(|&(n, p)| {
            let mut t = Tally::new();
            match oracle(n, p) {
                Ok(b) => {
                    for (rule, v) in [
                        ("two-hook", two_hook_violations(&b)),
                        ("transpose", transpose_violations(&b)),
                        ("p-core", p_core_violations(&b)),
                    ] {
                        t.check(v.is_empty(), || format!("n={n} p={p} {rule}: {}", v.join("; ")));
                    }
                }
                Err(e) => t.error(format!("n={n} p={p}: {e}")),
            }
            t
        })
        .collect();
    results.into_iter().fold(Tally::new(), |mut acc, t| {
        acc.absorb(t);
        acc
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grid_passes() {
        for outcome in run_all(3, 7) {
            assert!(outcome.passed, "{outcome}");
        }
    }

    #[test]
    fn unknown_check_fails() {
        assert!(!run(12, 3, 0).passed);
    }
}
