//! Exhaustive lists of diagrams, `I(n,t)`, and the factorization
//! `d = S_1 w S_2^op`.

use super::diagram::BrauerDiagram;

/// All perfect matchings on `r + s` nodes, in a fixed order.
pub fn enumerate_diagrams(r: usize, s: usize) -> Vec<BrauerDiagram> {
    let total = r + s;
    let mut out = Vec::new();
    if !total.is_multiple_of(2) {
        return out;
    }
    let mut partner = vec![usize::MAX; total];
    matchings(&mut partner, &mut |p| out.push(BrauerDiagram::from_partner(r, s, p.to_vec())));
    out
}

fn matchings(partner: &mut [usize], emit: &mut impl FnMut(&[usize])) {
    let Some(first) = partner.iter().position(|&x| x == usize::MAX) else {
        emit(partner);
        return;
    };
    for other in first + 1..partner.len() {
        if partner[other] != usize::MAX {
            continue;
        }
        partner[first] = other;
        partner[other] = first;
        matchings(partner, emit);
        partner[first] = usize::MAX;
        partner[other] = usize::MAX;
    }
}

/// `I(n,t)`: `(n,t)`-diagrams whose `t` southern nodes all lie on mutually
/// non-crossing propagating lines.
pub fn enumerate_i(n: usize, t: usize) -> Vec<BrauerDiagram> {
    if t > n || !(n - t).is_multiple_of(2) {
        return Vec::new();
    }
    let mut out = Vec::new();
    for tops in combinations(n, t) {
        let mut partner = vec![usize::MAX; n + t];
        for (k, &a) in tops.iter().enumerate() {
            partner[a] = n + k;
            partner[n + k] = a;
        }
        matchings(&mut partner, &mut |p| out.push(BrauerDiagram::from_partner(n, t, p.to_vec())));
    }
    out
}

/// Increasing `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// `(2m-1)!!`, the number of perfect matchings on `2m` points.
pub fn double_factorial_odd(two_m: usize) -> usize {
    (1..two_m).step_by(2).product()
}

/// `(S_1, w, S_2)` with `S_1, S_2 ∈ I(n,t)` and `w ∈ S_t` such that the
/// unsigned concatenation `S_1 ⋆ w ⋆ S_2^op` is `d`. Here `w[k]` is the
/// index, among the northern ends of `d`'s lines, of the line whose
/// southern end is the `k`-th from the left.
pub fn factorize(d: &BrauerDiagram) -> (BrauerDiagram, Vec<usize>, BrauerDiagram) {
    let (n, m) = (d.r(), d.s());
    let lines = d.propagating();
    let t = lines.len();
    let tops: Vec<usize> = lines.iter().map(|&(a, _)| a).collect();
    let mut bottoms: Vec<usize> = lines.iter().map(|&(_, b)| b).collect();
    bottoms.sort_unstable();

    let mut p1 = vec![usize::MAX; n + t];
    for (a, b) in d.cups() {
        p1[a] = b;
        p1[b] = a;
    }
    for (k, &a) in tops.iter().enumerate() {
        p1[a] = n + k;
        p1[n + k] = a;
    }
    let mut p2 = vec![usize::MAX; m + t];
    for (a, b) in d.caps() {
        p2[a] = b;
        p2[b] = a;
    }
    for (k, &b) in bottoms.iter().enumerate() {
        p2[b] = m + k;
        p2[m + k] = b;
    }
    let w = bottoms
        .iter()
        .map(|&b| {
            let top = d.partner(n + b);
            tops.binary_search(&top).expect("line ends are recorded")
        })
        .collect();
    (BrauerDiagram::from_partner(n, t, p1), w, BrauerDiagram::from_partner(m, t, p2))
}

/// Unsigned concatenation `d1 ⋆ d2`, `None` on a size mismatch or a loop.
pub fn concatenate_unsigned(d1: &BrauerDiagram, d2: &BrauerDiagram) -> Option<BrauerDiagram> {
    match super::marking::compose_signed(d1, d2) {
        super::marking::SignedDiagram::Term { diagram, .. } => Some(diagram),
        super::marking::SignedDiagram::Zero => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::special::epsilon;
    use std::collections::HashSet;

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_diagrams(3, 3).len(), 15);
        assert_eq!(enumerate_diagrams(2, 0).len(), 1);
        assert_eq!(enumerate_diagrams(1, 2).len(), 0);
        assert_eq!(enumerate_i(3, 1).len(), 3);
        assert_eq!(enumerate_i(2, 0).len(), 1);
        for n in 0..=6 {
            assert_eq!(enumerate_diagrams(n, n).len(), double_factorial_odd(2 * n));
            for t in (n % 2..=n).step_by(2) {
                let expected = binomial(n, t) * double_factorial_odd(n - t);
                assert_eq!(enumerate_i(n, t).len(), expected, "I({n},{t})");
            }
        }
    }

    #[test]
    fn documented_factorizations() {
        let x = BrauerDiagram::crossing();
        let (s1, w, s2) = factorize(&x);
        assert_eq!(s1, BrauerDiagram::identity(2));
        assert_eq!(s2, BrauerDiagram::identity(2));
        assert_eq!(w, vec![1, 0]);

        let (s1, w, s2) = factorize(&epsilon(4).unwrap());
        let expected = BrauerDiagram::from_pairs(4, 2, &[(0, 4), (1, 5), (2, 3)]).unwrap();
        assert_eq!(s1, expected);
        assert_eq!(w, vec![0, 1]);
        let expected2 = BrauerDiagram::from_pairs(4, 2, &[(0, 4), (3, 5), (1, 2)]).unwrap();
        assert_eq!(s2, expected2);

        let (s1, w, s2) = factorize(&BrauerDiagram::cup_cap(2, 0));
        assert_eq!(s1, BrauerDiagram::cup());
        assert_eq!(s2, BrauerDiagram::cup());
        assert!(w.is_empty());
    }

    #[test]
    fn factorization_roundtrips_uniquely() {
        for n in 0..=4 {
            let mut seen = HashSet::new();
            for d in enumerate_diagrams(n, n) {
                let (s1, w, s2) = factorize(&d);
                let t = w.len();
                assert!(enumerate_i(n, t).contains(&s1));
                assert!(enumerate_i(n, t).contains(&s2));
                let middle = concatenate_unsigned(&BrauerDiagram::permutation(&w), &s2.flip()).unwrap();
                assert_eq!(concatenate_unsigned(&s1, &middle).unwrap(), d);
                assert!(seen.insert((s1, w, s2)), "two diagrams share a factorization");
            }
        }
    }
}
