use serde::Serialize;

use super::partition::Partition;

/// `Λ_n`: partitions of `t ≤ n` with `n - t` even, in the crate's total
/// order (larger partitions first).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaSet {
    n: usize,
    members: Vec<Partition>,
}

impl LambdaSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[Partition] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        self.members.binary_search(lambda).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Partition> {
        self.members.iter()
    }
}

impl<'a> IntoIterator for &'a LambdaSet {
    type Item = &'a Partition;
    type IntoIter = std::slice::Iter<'a, Partition>;
    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

pub fn in_lambda(n: usize, lambda: &Partition) -> bool {
    lambda.size() <= n && (n - lambda.size()).is_multiple_of(2)
}

/// Membership in `Λ'_n`: `p`-restricted, and nonempty when `n` is even and
/// positive. `A_0` is the ground field, so `∅` labels its simple module.
pub fn in_lambda_prime(n: usize, p: u32, lambda: &Partition) -> bool {
    in_lambda(n, lambda) && lambda.is_p_restricted(p) && !(n.is_multiple_of(2) && n > 0 && lambda.is_empty())
}

/// `Λ_n`, or `Λ'_n` for characteristic `p` when `restricted_only`.
pub fn enumerate_lambda(n: usize, p: u32, restricted_only: bool) -> LambdaSet {
    let mut members: Vec<Partition> = (0..=n)
        .rev()
        .filter(|t| (n - t).is_multiple_of(2))
        .flat_map(Partition::all_of_size)
        .filter(|l| !restricted_only || in_lambda_prime(n, p, l))
        .collect();
    members.sort();
    LambdaSet { n, members }
}
