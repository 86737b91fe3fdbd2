//! Permutations of `0..t` as maps, composed as functions.

/// `(u ∘ v)(i) = u(v(i))`.
pub fn compose(u: &[usize], v: &[usize]) -> Vec<usize> {
    v.iter().map(|&i| u[i]).collect()
}

pub fn inverse(w: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; w.len()];
    for (i, &wi) in w.iter().enumerate() {
        inv[wi] = i;
    }
    inv
}

/// Coxeter length: the number of inversions.
pub fn length(w: &[usize]) -> usize {
    (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
}

pub fn sign(w: &[usize]) -> i64 {
    if length(w).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Position of `w` in the lexicographic list of permutations.
pub fn rank(w: &[usize]) -> usize {
    let t = w.len();
    let mut r = 0;
    for i in 0..t {
        let smaller = (i + 1..t).filter(|&j| w[j] < w[i]).count();
        r = r * (t - i) + smaller;
    }
    r
}

/// All permutations of `0..t` in lexicographic order.
pub fn all(t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..t).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..t.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..t).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
}

pub fn factorial(t: usize) -> usize {
    (1..=t).product()
}
