use serde::Serialize;

use super::lambda::in_lambda;
use super::partition::{residue, Partition};
use crate::error::{bail, Result};

/// A walk `t^(1) = (1), t^(2), ..., t^(n)` in Young's lattice where each
/// step adds or removes one box.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PartitionPath {
    steps: Vec<Partition>,
}

/// A single step of a path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    Add { row: usize, col: usize },
    Remove { row: usize, col: usize },
}

impl PartitionPath {
    pub fn new(steps: Vec<Partition>) -> Result<Self> {
        if steps.first() != Some(&Partition::new(vec![1])?) {
            bail!(Usage, "a path starts at (1)");
        }
        let path = PartitionPath { steps };
        for i in 1..path.steps.len() {
            path.step(i)?;
        }
        Ok(path)
    }

    pub fn steps(&self) -> &[Partition] {
        &self.steps
    }

    pub fn end(&self) -> &Partition {
        self.steps.last().expect("paths are nonempty")
    }

    /// The change from `t^(i)` to `t^(i+1)` (1-based `i`).
    pub fn step(&self, i: usize) -> Result<Step> {
        let (a, b) = (&self.steps[i - 1], &self.steps[i]);
        let rows = a.len().max(b.len());
        let diff: Vec<(usize, i64)> =
            (0..rows).map(|r| (r, b.part(r) as i64 - a.part(r) as i64)).filter(|&(_, d)| d != 0).collect();
        match diff.as_slice() {
            [(r, 1)] => Ok(Step::Add { row: *r, col: a.part(*r) }),
            [(r, -1)] => Ok(Step::Remove { row: *r, col: b.part(*r) }),
            _ => bail!(Usage, "{a} and {b} do not differ by one box"),
        }
    }

    /// `c_t`: the residue of each added box, or the residue plus one of each
    /// removed box, for steps `1..n`.
    pub fn vector(&self, p: u32) -> Vec<i64> {
        (1..self.steps.len())
            .map(|i| match self.step(i).expect("validated path") {
                Step::Add { row, col } => residue(Partition::content(row, col), p),
                Step::Remove { row, col } => residue(Partition::content(row, col) + 1, p),
            })
            .collect()
    }
}

/// Paths of length `n` ending at `λ`, which must lie in `Λ_n`.
pub fn enumerate_paths(n: usize, lambda: &Partition) -> Result<Vec<PartitionPath>> {
    if !in_lambda(n, lambda) {
        bail!(Domain, "{lambda} is not in Λ_{n}");
    }
    if n == 0 {
        bail!(Domain, "paths start at (1), so n must be positive");
    }
    let mut out = Vec::new();
    let mut cur = vec![Partition::new(vec![1])?];
    extend(n, lambda, &mut cur, &mut out);
    Ok(out)
}

fn extend(n: usize, target: &Partition, cur: &mut Vec<Partition>, out: &mut Vec<PartitionPath>) {
    let last = cur.last().unwrap().clone();
    let remaining = n - cur.len();
    // Each remaining step changes the size by one.
    if last.size().abs_diff(target.size()) > remaining {
        return;
    }
    if remaining == 0 {
        if &last == target {
            out.push(PartitionPath { steps: cur.clone() });
        }
        return;
    }
    let mut nexts: Vec<Partition> = last.addable_rows().into_iter().map(|r| last.add_box(r).unwrap()).collect();
    nexts.extend(last.removable_rows().into_iter().map(|r| last.remove_box(r).unwrap()));
    for next in nexts {
        cur.push(next);
        extend(n, target, cur, out);
        cur.pop();
    }
}

/// Replays the added and removed boxes of a path starting from the empty
/// partition's first box.
pub fn replay(path: &PartitionPath) -> Result<Partition> {
    let mut cur = Partition::new(vec![1])?;
    for i in 1..path.steps.len() {
        cur = match path.step(i)? {
            Step::Add { row, .. } => cur.add_box(row)?,
            Step::Remove { row, .. } => cur.remove_box(row)?,
        };
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn documented_paths() {
        let one = enumerate_paths(1, &p(&[1])).unwrap();
        assert_eq!(one.len(), 1);
        assert!(one[0].vector(0).is_empty());

        let empty = enumerate_paths(2, &Partition::empty()).unwrap();
        assert_eq!(empty.len(), 1);
        assert_eq!(empty[0].vector(0), vec![1]);

        let mut vs: Vec<Vec<i64>> = enumerate_paths(3, &p(&[2, 1])).unwrap().iter().map(|t| t.vector(3)).collect();
        vs.sort();
        assert_eq!(vs, vec![vec![1, 2], vec![2, 1]]);

        assert!(enumerate_paths(3, &p(&[2])).is_err());
    }

    #[test]
    fn replay_reconstructs_endpoint() {
        for n in 1..=6 {
            for lam in crate::partitions::lambda::enumerate_lambda(n, 0, false).members() {
                for t in enumerate_paths(n, lam).unwrap() {
                    assert_eq!(&replay(&t).unwrap(), lam);
                    assert_eq!(t.end(), lam);
                }
            }
        }
    }
}
