use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{bail, Error, Result};

/// An `(r, s)`-Brauer diagram: a perfect matching on `r` northern and `s`
/// southern nodes.
///
/// Nodes are 0-based internally: north `0..r` left to right, then south
/// `r..r+s` left to right. The JSON and display forms are 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrauerDiagram {
    r: usize,
    s: usize,
    partner: Vec<usize>,
}

/// Which kind of edge a pair is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    Cup,
    Cap,
    Propagating,
}

impl BrauerDiagram {
    /// Builds from 0-based pairs.
    pub fn from_pairs(r: usize, s: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let total = r + s;
        if !total.is_multiple_of(2) {
            bail!(Usage, "a ({r},{s}) diagram needs an even number of nodes");
        }
        let mut partner = vec![usize::MAX; total];
        for &(a, b) in pairs {
            if a >= total || b >= total || a == b {
                bail!(Usage, "pair ({a},{b}) is out of range for a ({r},{s}) diagram");
            }
            if partner[a] != usize::MAX || partner[b] != usize::MAX {
                bail!(Usage, "node used twice in pairs {pairs:?}");
            }
            partner[a] = b;
            partner[b] = a;
        }
        if partner.contains(&usize::MAX) {
            bail!(Usage, "pairs {pairs:?} do not cover all {total} nodes");
        }
        Ok(BrauerDiagram { r, s, partner })
    }

    /// Builds from a full partner table; the caller guarantees it is an
    /// involution without fixed points.
    pub(crate) fn from_partner(r: usize, s: usize, partner: Vec<usize>) -> Self {
        debug_assert_eq!(partner.len(), r + s);
        debug_assert!(partner.iter().enumerate().all(|(i, &j)| j != i && partner[j] == i));
        BrauerDiagram { r, s, partner }
    }

    pub fn identity(n: usize) -> Self {
        Self::permutation(&(0..n).collect::<Vec<_>>())
    }

    /// The permutation diagram joining south node `j` to north node `w[j]`,
    /// so that products of permutation diagrams compose as functions.
    pub fn permutation(w: &[usize]) -> Self {
        let n = w.len();
        let mut partner = vec![0; 2 * n];
        for (j, &wj) in w.iter().enumerate() {
            partner[n + j] = wj;
            partner[wj] = n + j;
        }
        BrauerDiagram { r: n, s: n, partner }
    }

    /// The simple transposition `s_i` swapping strands `i` and `i+1`
    /// (0-based) in `A_n`.
    pub fn simple_transposition(n: usize, i: usize) -> Self {
        let mut w: Vec<usize> = (0..n).collect();
        w.swap(i, i + 1);
        Self::permutation(&w)
    }

    /// `e_i`: a cup and a cap on strands `i, i+1` (0-based), identity
    /// elsewhere.
    pub fn cup_cap(n: usize, i: usize) -> Self {
        let mut pairs: Vec<(usize, usize)> = (0..n).filter(|&k| k != i && k != i + 1).map(|k| (k, n + k)).collect();
        pairs.push((i, i + 1));
        pairs.push((n + i, n + i + 1));
        Self::from_pairs(n, n, &pairs).expect("valid cup-cap diagram")
    }

    /// The `(2,0)` diagram: a single cup.
    pub fn cup() -> Self {
        BrauerDiagram { r: 2, s: 0, partner: vec![1, 0] }
    }

    /// The `(0,2)` diagram: a single cap.
    pub fn cap() -> Self {
        BrauerDiagram { r: 0, s: 2, partner: vec![1, 0] }
    }

    /// The crossing `X` in `A_2`.
    pub fn crossing() -> Self {
        Self::permutation(&[1, 0])
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn partner(&self, node: usize) -> usize {
        self.partner[node]
    }

    pub fn is_north(&self, node: usize) -> bool {
        node < self.r
    }

    pub fn kind(&self, a: usize) -> EdgeKind {
        match (self.is_north(a), self.is_north(self.partner[a])) {
            (true, true) => EdgeKind::Cup,
            (false, false) => EdgeKind::Cap,
            _ => EdgeKind::Propagating,
        }
    }

    /// Every pair once, as `(smaller, larger)`, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.partner.len()).filter(|&a| a < self.partner[a]).map(|a| (a, self.partner[a])).collect()
    }

    /// Cups as 0-based north positions `(a, b)` with `a < b`, sorted by `a`.
    pub fn cups(&self) -> Vec<(usize, usize)> {
        (0..self.r).filter(|&a| self.partner[a] < self.r && a < self.partner[a]).map(|a| (a, self.partner[a])).collect()
    }

    /// Caps as 0-based south positions `(a, b)` with `a < b`, sorted by `a`.
    pub fn caps(&self) -> Vec<(usize, usize)> {
        let r = self.r;
        (r..r + self.s)
            .filter(|&a| self.partner[a] >= r && a < self.partner[a])
            .map(|a| (a - r, self.partner[a] - r))
            .collect()
    }

    /// Propagating lines as `(north position, south position)`, sorted by
    /// north position.
    pub fn propagating(&self) -> Vec<(usize, usize)> {
        (0..self.r).filter(|&a| self.partner[a] >= self.r).map(|a| (a, self.partner[a] - self.r)).collect()
    }

    pub fn num_propagating(&self) -> usize {
        (0..self.r).filter(|&a| self.partner[a] >= self.r).count()
    }

    /// `Some(w)` with south `j` joined to north `w[j]` when there are no cups
    /// or caps.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        if self.r != self.s || self.num_propagating() != self.r {
            return None;
        }
        Some((0..self.s).map(|j| self.partner[self.r + j]).collect())
    }

    /// Reflection in a horizontal line: an `(s, r)` diagram.
    pub fn flip(&self) -> Self {
        let (r, s) = (self.r, self.s);
        let relabel = |x: usize| if x < r { s + x } else { x - r };
        let mut partner = vec![0; r + s];
        for (a, &b) in self.partner.iter().enumerate() {
            partner[relabel(a)] = relabel(b);
        }
        BrauerDiagram { r: s, s: r, partner }
    }

    /// Side-by-side juxtaposition without any sign: `self` on the left.
    pub fn juxtapose(&self, other: &Self) -> Self {
        let (r1, s1, r2, s2) = (self.r, self.s, other.r, other.s);
        let r = r1 + r2;
        let map1 = |x: usize| if x < r1 { x } else { r + (x - r1) };
        let map2 = |x: usize| if x < r2 { r1 + x } else { r + s1 + (x - r2) };
        let mut partner = vec![0; r + s1 + s2];
        for (a, &b) in self.partner.iter().enumerate() {
            partner[map1(a)] = map1(b);
        }
        for (a, &b) in other.partner.iter().enumerate() {
            partner[map2(a)] = map2(b);
        }
        BrauerDiagram { r, s: s1 + s2, partner }
    }

    /// Parses 1-based pairs, as in the JSON form.
    pub fn from_one_based(r: usize, s: usize, pairs: &[[usize; 2]]) -> Result<Self> {
        let zero_based: Vec<(usize, usize)> = pairs
            .iter()
            .map(|&[a, b]| {
                if a == 0 || b == 0 {
                    Err(Error::Parse("diagram nodes are numbered from 1".into()))
                } else {
                    Ok((a - 1, b - 1))
                }
            })
            .collect::<Result<_>>()?;
        Self::from_pairs(r, s, &zero_based)
    }

    pub fn to_one_based(&self) -> Vec<[usize; 2]> {
        self.pairs().into_iter().map(|(a, b)| [a + 1, b + 1]).collect()
    }

    /// Multi-line picture: one line per edge kind.
    pub fn ascii(&self) -> String {
        let show = |v: Vec<(usize, usize)>| {
            v.iter().map(|(a, b)| format!("{}-{}", a + 1, b + 1)).collect::<Vec<_>>().join(" ")
        };
        format!(
            "({},{})-diagram\n  cups: {}\n  caps: {}\n  lines: {}",
            self.r,
            self.s,
            show(self.cups()),
            show(self.caps()),
            show(self.propagating())
        )
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    r: usize,
    s: usize,
    pairs: Vec<[usize; 2]>,
}

impl Serialize for BrauerDiagram {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramJson { r: self.r, s: self.s, pairs: self.to_one_based() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BrauerDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let j = DiagramJson::deserialize(deserializer)?;
        BrauerDiagram::from_one_based(j.r, j.s, &j.pairs).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Compact 1-based form, e.g. `(2,2)[1-3 2-4]`.
impl fmt::Display for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self.pairs().iter().map(|(a, b)| format!("{}-{}", a + 1, b + 1)).collect();
        write!(f, "({},{})[{}]", self.r, self.s, pairs.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_classification() {
        let e = BrauerDiagram::cup_cap(2, 0);
        assert_eq!(e.cups(), vec![(0, 1)]);
        assert_eq!(e.caps(), vec![(0, 1)]);
        assert_eq!(e.num_propagating(), 0);
        let x = BrauerDiagram::crossing();
        assert_eq!(x.as_permutation(), Some(vec![1, 0]));
        assert_eq!(x.propagating(), vec![(0, 1), (1, 0)]);
    }

    #[test]
    fn flip_is_involution() {
        let d = BrauerDiagram::from_pairs(3, 1, &[(0, 3), (1, 2)]).unwrap();
        let f = d.flip();
        assert_eq!((f.r(), f.s()), (1, 3));
        assert_eq!(f.flip(), d);
    }

    #[test]
    fn rejects_bad_pairs() {
        assert!(BrauerDiagram::from_pairs(1, 2, &[(0, 1)]).is_err());
        assert!(BrauerDiagram::from_pairs(2, 2, &[(0, 1), (1, 2)]).is_err());
        assert!(BrauerDiagram::from_pairs(2, 2, &[(0, 1)]).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let d = BrauerDiagram::cup_cap(3, 1);
        let text = serde_json::to_string(&d).unwrap();
        assert_eq!(text, r#"{"r":3,"s":3,"pairs":[[1,4],[2,3],[5,6]]}"#);
        assert_eq!(serde_json::from_str::<BrauerDiagram>(&text).unwrap(), d);
        assert!(serde_json::from_str::<BrauerDiagram>(r#"{"r":1,"s":1,"pairs":[[0,1]]}"#).is_err());
    }

    #[test]
    fn juxtaposition_counts() {
        let d = BrauerDiagram::cap().juxtapose(&BrauerDiagram::identity(1));
        assert_eq!((d.r(), d.s()), (1, 3));
        assert_eq!(d.caps(), vec![(0, 1)]);
        assert_eq!(d.propagating(), vec![(0, 2)]);
    }
}
