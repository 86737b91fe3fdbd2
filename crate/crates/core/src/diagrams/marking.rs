//! Marked diagrams and the signed composition rule.
//!
//! Every cup carries a diamond and every cap an arrow; all markings are
//! stacked at distinct heights. Composing `d1` over `d2` stacks the standard
//! markings of `d1` above those of `d2`, and the sign counts the moves that
//! turn the result into the standard marking of the concatenation: swaps
//! of adjacent markings, and cancellations of an adjacent arrow/diamond pair
//! on one edge when the arrow points away from the diamond.
//!
//! Arrow directions are tracked relative to the direction in which each
//! composite edge is traced. A composite cap whose surviving arrow points
//! to its left endpoint costs one more move, the flip that turns it into a
//! right arrow; this is the convention under which `∩ X = -∩`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::diagram::BrauerDiagram;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Marker {
    Diamond,
    LeftArrow,
    RightArrow,
}

/// A marker on an edge, given by its 0-based endpoints `(a, b)`, `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Marking {
    pub edge: (usize, usize),
    pub marker: Marker,
}

/// A diagram with markings listed from the most northern latitude down.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MarkedDiagram {
    pub base: BrauerDiagram,
    pub markings: Vec<Marking>,
}

/// Cups in standard height order: leftmost node further left is higher.
fn cups_by_height(d: &BrauerDiagram) -> Vec<(usize, usize)> {
    d.cups()
}

/// Caps in standard height order: leftmost node further right is higher.
fn caps_by_height(d: &BrauerDiagram) -> Vec<(usize, usize)> {
    let mut caps = d.caps();
    caps.reverse();
    caps
}

/// Right arrows on all caps; cups above caps.
pub fn standard_marking(d: &BrauerDiagram) -> MarkedDiagram {
    let r = d.r();
    let mut markings: Vec<Marking> =
        cups_by_height(d).into_iter().map(|edge| Marking { edge, marker: Marker::Diamond }).collect();
    markings.extend(
        caps_by_height(d).into_iter().map(|(a, b)| Marking { edge: (r + a, r + b), marker: Marker::RightArrow }),
    );
    MarkedDiagram { base: d.clone(), markings }
}

/// `±d`, or zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SignedDiagram {
    Zero,
    Term { sign: i8, diagram: BrauerDiagram },
}

impl SignedDiagram {
    pub fn plus(diagram: BrauerDiagram) -> Self {
        SignedDiagram::Term { sign: 1, diagram }
    }

    /// `+1`, `-1`, or `0` for the zero element.
    pub fn sign(&self) -> i8 {
        match self {
            SignedDiagram::Zero => 0,
            SignedDiagram::Term { sign, .. } => *sign,
        }
    }

    pub fn diagram(&self) -> Option<&BrauerDiagram> {
        match self {
            SignedDiagram::Zero => None,
            SignedDiagram::Term { diagram, .. } => Some(diagram),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, SignedDiagram::Zero)
    }

    pub fn scaled(self, factor: i8) -> Self {
        match self {
            SignedDiagram::Term { sign, diagram } if factor != 0 => {
                SignedDiagram::Term { sign: sign * factor, diagram }
            }
            _ => SignedDiagram::Zero,
        }
    }

    pub fn negated(self) -> Self {
        self.scaled(-1)
    }

    /// Signed product, zero absorbing.
    pub fn then(&self, other: &SignedDiagram) -> SignedDiagram {
        match (self, other) {
            (SignedDiagram::Term { sign: a, diagram: d1 }, SignedDiagram::Term { sign: b, diagram: d2 }) => {
                compose_signed(d1, d2).scaled(a * b)
            }
            _ => SignedDiagram::Zero,
        }
    }
}

impl fmt::Display for SignedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignedDiagram::Zero => write!(f, "0"),
            SignedDiagram::Term { sign, diagram } => write!(f, "{}{}", if *sign < 0 { "-" } else { "+" }, diagram),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum SignedJson {
    Zero { zero: bool },
    Term { r: usize, s: usize, pairs: Vec<[usize; 2]>, sign: i8 },
}

impl Serialize for SignedDiagram {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            SignedDiagram::Zero => SignedJson::Zero { zero: true },
            SignedDiagram::Term { sign, diagram } => {
                SignedJson::Term { r: diagram.r(), s: diagram.s(), pairs: diagram.to_one_based(), sign: *sign }
            }
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SignedDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        match SignedJson::deserialize(deserializer)? {
            SignedJson::Zero { zero: true } => Ok(SignedDiagram::Zero),
            SignedJson::Zero { zero: false } => Err(serde::de::Error::custom("\"zero\" must be true")),
            SignedJson::Term { r, s, pairs, sign } => {
                if sign != 1 && sign != -1 {
                    return Err(serde::de::Error::custom("sign must be 1 or -1"));
                }
                let diagram = BrauerDiagram::from_one_based(r, s, &pairs).map_err(serde::de::Error::custom)?;
                Ok(SignedDiagram::Term { sign, diagram })
            }
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum Mark {
    Diamond,
    /// `forward`: the arrow points along the direction of tracing.
    Arrow {
        forward: bool,
    },
}

/// Markings met along one composite edge, with their heights.
struct Component {
    marks: Vec<(usize, Mark)>,
    /// Position in the standard order of the result, for surviving marks.
    target: Option<(u8, isize)>,
}

/// Unsigned concatenation `d1 ⋆ d2` with its sign, or zero when the
/// inner sizes differ or a closed loop appears.
pub fn compose_signed(d1: &BrauerDiagram, d2: &BrauerDiagram) -> SignedDiagram {
    if d1.s() != d2.r() {
        return SignedDiagram::Zero;
    }
    let (r, s, t) = (d1.r(), d1.s(), d2.s());

    // Heights of the initial stacked marking, indexed by leftmost node.
    let mut height = 0;
    let mut assign = |edges: Vec<(usize, usize)>, table: &mut Vec<usize>| {
        for (a, _) in edges {
            table[a] = height;
            height += 1;
        }
    };
    let mut h_cup1 = vec![usize::MAX; r];
    let mut h_cap1 = vec![usize::MAX; s];
    let mut h_cup2 = vec![usize::MAX; s];
    let mut h_cap2 = vec![usize::MAX; t];
    assign(cups_by_height(d1), &mut h_cup1);
    assign(caps_by_height(d1), &mut h_cap1);
    assign(cups_by_height(d2), &mut h_cup2);
    assign(caps_by_height(d2), &mut h_cap2);
    let total_marks = height;
    let inner_marks = d1.caps().len() + d2.cups().len();

    let mut partner = vec![usize::MAX; r + t];
    let mut components: Vec<Component> = Vec::new();
    let mut inner_seen = 0;

    for start in 0..r + t {
        if partner[start] != usize::MAX {
            continue;
        }
        let mut marks = Vec::new();
        // `on_top`: walking in d1 (numbered as d1) versus d2 (numbered as d2).
        let (mut on_top, mut node) = if start < r { (true, start) } else { (false, s + (start - r)) };
        let end = loop {
            if on_top {
                let y = d1.partner(node);
                match (node < r, y < r) {
                    (true, true) => {
                        marks.push((h_cup1[node.min(y)], Mark::Diamond));
                        break y;
                    }
                    (true, false) => {
                        on_top = false;
                        node = y - r;
                    }
                    (false, true) => break y,
                    (false, false) => {
                        let (a, b) = (node - r, y - r);
                        marks.push((h_cap1[a.min(b)], Mark::Arrow { forward: b > a }));
                        inner_seen += 1;
                        on_top = false;
                        node = b;
                    }
                }
            } else {
                let y = d2.partner(node);
                match (node < s, y < s) {
                    (true, true) => {
                        marks.push((h_cup2[node.min(y)], Mark::Diamond));
                        inner_seen += 1;
                        on_top = true;
                        node = r + y;
                    }
                    (true, false) => break r + (y - s),
                    (false, true) => {
                        on_top = true;
                        node = r + y;
                    }
                    (false, false) => {
                        let (a, b) = (node - s, y - s);
                        marks.push((h_cap2[a.min(b)], Mark::Arrow { forward: b > a }));
                        break r + b;
                    }
                }
            }
        };
        partner[start] = end;
        partner[end] = start;
        let target = match (start < r, end < r) {
            (true, true) => Some((0, start as isize)),
            (false, false) => Some((1, -(start as isize))),
            _ => None,
        };
        components.push(Component { marks, target });
    }
    if inner_seen < inner_marks {
        return SignedDiagram::Zero;
    }

    let mut alive = vec![true; total_marks];
    let mut gamma = 0usize;
    let between = |alive: &[bool], a: usize, b: usize| alive[a.min(b) + 1..a.max(b)].iter().filter(|&&x| x).count();
    let mut survivors: Vec<(usize, (u8, isize))> = Vec::new();

    for comp in &components {
        let mut marks = comp.marks.clone();
        // Cancel the first two markings along the edge until at most one is left;
        // consecutive markings along an edge alternate between arrows and diamonds.
        while marks.len() >= 2 {
            let (first, second) = (marks[0], marks[1]);
            let (arrow_h, forward, diamond_h, diamond_ahead) = match (first.1, second.1) {
                (Mark::Arrow { forward }, Mark::Diamond) => (first.0, forward, second.0, true),
                (Mark::Diamond, Mark::Arrow { forward }) => (second.0, forward, first.0, false),
                _ => unreachable!("markings alternate along an edge"),
            };
            gamma += between(&alive, arrow_h, diamond_h);
            if forward != diamond_ahead {
                gamma += 1;
            }
            alive[arrow_h] = false;
            alive[diamond_h] = false;
            marks.drain(0..2);
        }
        if let Some(&(h, mark)) = marks.first() {
            if let Mark::Arrow { forward: false } = mark {
                gamma += 1;
            }
            let target = comp.target.expect("a surviving marking sits on a cup or a cap");
            survivors.push((h, target));
        }
    }

    survivors.sort_by_key(|&(h, _)| h);
    for i in 0..survivors.len() {
        for j in i + 1..survivors.len() {
            if survivors[i].1 > survivors[j].1 {
                gamma += 1;
            }
        }
    }

    let diagram = BrauerDiagram::from_partner(r, t, partner);
    SignedDiagram::Term { sign: if gamma.is_multiple_of(2) { 1 } else { -1 }, diagram }
}

/// The monoidal product: `d1` padded on the right by `d2.r()` lines, over
/// `d2` padded on the left by `d1.s()` lines.
pub fn tensor_signed(d1: &BrauerDiagram, d2: &BrauerDiagram) -> SignedDiagram {
    let top = d1.juxtapose(&BrauerDiagram::identity(d2.r()));
    let bottom = BrauerDiagram::identity(d1.s()).juxtapose(d2);
    compose_signed(&top, &bottom)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_marking_order() {
        // (4,4): cups 1-2 and 3-4, caps 5-6 and 7-8 (1-based)
        let d = BrauerDiagram::from_pairs(4, 4, &[(0, 1), (2, 3), (4, 5), (6, 7)]).unwrap();
        let m = standard_marking(&d);
        let edges: Vec<(usize, usize)> = m.markings.iter().map(|k| k.edge).collect();
        assert_eq!(edges, vec![(0, 1), (2, 3), (6, 7), (4, 5)]);
        assert!(standard_marking(&BrauerDiagram::crossing()).markings.is_empty());
        assert_eq!(standard_marking(&BrauerDiagram::cup()).markings.len(), 1);
    }

    #[test]
    fn permutations_multiply_without_sign() {
        let x = BrauerDiagram::crossing();
        assert_eq!(compose_signed(&x, &x), SignedDiagram::plus(BrauerDiagram::identity(2)));
    }

    #[test]
    fn loops_vanish() {
        let e = BrauerDiagram::cup_cap(2, 0);
        assert!(compose_signed(&e, &e).is_zero());
        assert!(compose_signed(&BrauerDiagram::cap(), &BrauerDiagram::cup()).is_zero());
        assert!(compose_signed(&e, &BrauerDiagram::identity(3)).is_zero());
    }

    #[test]
    fn snake_signs() {
        let i = BrauerDiagram::identity(1);
        let cap_i = BrauerDiagram::cap().juxtapose(&i);
        let i_cup = i.juxtapose(&BrauerDiagram::cup());
        assert_eq!(compose_signed(&cap_i, &i_cup), SignedDiagram::plus(i.clone()));
        let i_cap = i.juxtapose(&BrauerDiagram::cap());
        let cup_i = BrauerDiagram::cup().juxtapose(&i);
        assert_eq!(compose_signed(&i_cap, &cup_i), SignedDiagram::plus(i).negated());
    }

    #[test]
    fn crossing_against_cap_and_cup() {
        let x = BrauerDiagram::crossing();
        assert_eq!(compose_signed(&BrauerDiagram::cap(), &x), SignedDiagram::plus(BrauerDiagram::cap()).negated());
        assert_eq!(compose_signed(&x, &BrauerDiagram::cup()), SignedDiagram::plus(BrauerDiagram::cup()));
        let e = BrauerDiagram::cup_cap(2, 0);
        assert_eq!(compose_signed(&x, &e), SignedDiagram::plus(e.clone()));
        assert_eq!(compose_signed(&e, &x), SignedDiagram::plus(e).negated());
    }

    #[test]
    fn tensor_examples() {
        let i = BrauerDiagram::identity(1);
        assert_eq!(tensor_signed(&i, &i), SignedDiagram::plus(BrauerDiagram::identity(2)));
        let cc = tensor_signed(&BrauerDiagram::cap(), &BrauerDiagram::cap());
        let expected = BrauerDiagram::from_pairs(0, 4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(cc, SignedDiagram::plus(expected).negated());
        let icup = tensor_signed(&i, &BrauerDiagram::cup());
        assert_eq!(icup, SignedDiagram::plus(i.juxtapose(&BrauerDiagram::cup())));
    }

    #[test]
    fn json_forms() {
        let z = serde_json::to_string(&SignedDiagram::Zero).unwrap();
        assert_eq!(z, r#"{"zero":true}"#);
        let t = SignedDiagram::plus(BrauerDiagram::crossing()).negated();
        let text = serde_json::to_string(&t).unwrap();
        assert_eq!(text, r#"{"r":2,"s":2,"pairs":[[1,4],[2,3]],"sign":-1}"#);
        assert_eq!(serde_json::from_str::<SignedDiagram>(&text).unwrap(), t);
    }
}
