use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{bail, Error, Result};

/// An integer partition, stored as its nonzero parts in weakly decreasing
/// order. The empty partition has no parts.
///
/// `Ord` is a linear extension of the dominance order used throughout
/// the crate: larger partitions come first, then parts compare
/// lexicographically ascending. Within one size this puts `(1,1,1)` before
/// `(2,1)` before `(3)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates weak decrease; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            bail!(Usage, "parts {parts:?} are not weakly decreasing");
        }
        if parts.contains(&0) {
            bail!(Usage, "zero part in the middle of {parts:?}");
        }
        Ok(Partition { parts })
    }

    /// For callers that already guarantee the invariant.
    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && !parts.contains(&0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// `(r, r-1, ..., 1)`.
    pub fn staircase(r: usize) -> Self {
        Partition { parts: (1..=r).rev().collect() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        col < self.part(row)
    }

    /// Boxes as `(row, col)`, 0-based, row-major.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &l)| (0..l).map(move |j| (i, j)))
    }

    pub fn transpose(&self) -> Self {
        let cols = self.part(0);
        let parts = (0..cols).map(|j| self.parts.iter().take_while(|&&l| l > j).count()).collect();
        Partition { parts }
    }

    /// Length of column `j`.
    pub fn column_len(&self, j: usize) -> usize {
        self.parts.iter().take_while(|&&l| l > j).count()
    }

    /// Hook length of box `(i, j)`.
    pub fn hook_length(&self, i: usize, j: usize) -> usize {
        debug_assert!(self.contains(i, j));
        (self.part(i) - j) + (self.column_len(j) - i) - 1
    }

    /// `λ ⊴ μ`: `λ` is larger, or of equal size with every partial sum at
    /// most that of `μ`.
    pub fn dominated_by(&self, mu: &Partition) -> bool {
        dominance_leq(self, mu)
    }

    /// Rows where a box can be added, top to bottom.
    pub fn addable_rows(&self) -> Vec<usize> {
        (0..=self.len()).filter(|&i| i == 0 || self.part(i) < self.part(i - 1)).collect()
    }

    /// Rows whose last box can be removed, top to bottom.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.part(i) > self.part(i + 1)).collect()
    }

    pub fn add_box(&self, row: usize) -> Result<Self> {
        if !self.addable_rows().contains(&row) {
            bail!(Domain, "cannot add a box in row {row} of {self}");
        }
        let mut parts = self.parts.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Ok(Partition { parts })
    }

    pub fn remove_box(&self, row: usize) -> Result<Self> {
        if !self.removable_rows().contains(&row) {
            bail!(Domain, "cannot remove a box from row {row} of {self}");
        }
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Content `j - i` of box `(i, j)`.
    pub fn content(row: usize, col: usize) -> i64 {
        col as i64 - row as i64
    }

    /// Content of each box, reduced into `[0, p)` when `p > 0`.
    pub fn residue_grid(&self, p: u32) -> Vec<Vec<i64>> {
        self.parts.iter().enumerate().map(|(i, &l)| (0..l).map(|j| residue(Self::content(i, j), p)).collect()).collect()
    }

    /// Every difference of consecutive parts is below `p`; always true
    /// for `p = 0`.
    pub fn is_p_restricted(&self, p: u32) -> bool {
        p == 0 || (0..self.len()).all(|i| self.part(i) - self.part(i + 1) < p as usize)
    }

    /// No part repeats `p` or more times; always true for `p = 0`.
    pub fn is_p_regular(&self, p: u32) -> bool {
        p == 0 || self.parts.chunk_by(|a, b| a == b).all(|run| run.len() < p as usize)
    }

    /// `Some(r)` when this is the staircase `(r, ..., 1)`.
    pub fn staircase_index(&self) -> Option<usize> {
        let r = self.len();
        (*self == Partition::staircase(r)).then_some(r)
    }

    /// All partitions of `n` in the crate's total order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(n, n, &mut cur, &mut out);
        out.sort();
        out
    }
}

fn fill(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for k in (1..=rest.min(max)).rev() {
        cur.push(k);
        fill(rest - k, k, cur, out);
        cur.pop();
    }
}

/// Content reduced mod `p`; `p = 0` leaves it unchanged.
pub fn residue(content: i64, p: u32) -> i64 {
    if p == 0 {
        content
    } else {
        content.rem_euclid(p as i64)
    }
}

/// `λ ⊴ μ` in the order where bigger partitions sit lower.
pub fn dominance_leq(lambda: &Partition, mu: &Partition) -> bool {
    match lambda.size().cmp(&mu.size()) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => {
            let (mut a, mut b) = (0, 0);
            (0..lambda.len().max(mu.len())).all(|i| {
                a += lambda.part(i);
                b += mu.part(i);
                a <= b
            })
        }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.size().cmp(&self.size()).then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Accepts `(4,4,2,1)`, `[4,4,2,1]`, `4,4,2,1`, `4 4 2 1`, and `()` or
/// `∅` for the empty partition.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']).trim();
        if inner.is_empty() || inner == "∅" {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn transposes() {
        assert_eq!(p(&[4, 4, 2, 1]).transpose(), p(&[4, 3, 2, 2]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p(&[2, 1]).transpose(), p(&[2, 1]));
    }

    #[test]
    fn dominance() {
        assert!(dominance_leq(&p(&[1, 1, 1, 1, 1]), &p(&[3])));
        assert!(dominance_leq(&p(&[5]), &p(&[3])));
        assert!(dominance_leq(&p(&[2, 2]), &p(&[4])));
        assert!(!dominance_leq(&p(&[3, 1]), &p(&[2, 2])));
        assert!(dominance_leq(&p(&[2, 2]), &p(&[3, 1])));
    }

    #[test]
    fn dominance_is_partial_order_extended_by_ord() {
        let all: Vec<Partition> = (0..=6).flat_map(Partition::all_of_size).collect();
        for a in &all {
            assert!(dominance_leq(a, a));
            for b in &all {
                if a != b && dominance_leq(a, b) {
                    assert!(!dominance_leq(b, a));
                    assert!(a < b, "{a} ⊴ {b} but not ordered");
                }
                for c in &all {
                    if dominance_leq(a, b) && dominance_leq(b, c) {
                        assert!(dominance_leq(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn residues() {
        assert_eq!(p(&[2, 1]).residue_grid(0), vec![vec![0, 1], vec![-1]]);
        assert_eq!(p(&[2, 1]).residue_grid(3), vec![vec![0, 1], vec![2]]);
        assert_eq!(p(&[4]).residue_grid(3), vec![vec![0, 1, 2, 0]]);
    }

    #[test]
    fn restricted_and_regular() {
        assert!(!p(&[3]).is_p_restricted(3));
        assert!(p(&[1, 1, 1]).is_p_restricted(3));
        assert!(!p(&[1, 1, 1]).is_p_regular(3));
        assert!(p(&[7]).is_p_restricted(0) && p(&[1; 7]).is_p_regular(0));
    }

    #[test]
    fn staircases() {
        assert_eq!(p(&[2, 1]).staircase_index(), Some(2));
        assert_eq!(Partition::empty().staircase_index(), Some(0));
        assert_eq!(p(&[2, 2]).staircase_index(), None);
    }

    #[test]
    fn parsing_and_json() {
        assert_eq!("(4,4,2,1)".parse::<Partition>().unwrap(), p(&[4, 4, 2, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("(1,2)".parse::<Partition>().is_err());
        assert_eq!(serde_json::to_string(&p(&[3, 1])).unwrap(), "[3,1]");
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }
}
