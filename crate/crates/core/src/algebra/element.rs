use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagrams::{compose_signed, BrauerDiagram, SignedDiagram};
use crate::error::{bail, Result};
use crate::linalg::{Field, Scalar};

/// Integer combination of diagrams of any fixed shape. Structure constants
/// of the diagram basis are integers, so all exact data is built here and
/// reduced into a field at the end.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntegralElement {
    terms: BTreeMap<BrauerDiagram, i64>,
}

impl IntegralElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_diagram(d: BrauerDiagram) -> Self {
        IntegralElement { terms: BTreeMap::from([(d, 1)]) }
    }

    pub fn from_signed(d: SignedDiagram) -> Self {
        match d {
            SignedDiagram::Zero => Self::zero(),
            SignedDiagram::Term { sign, diagram } => {
                IntegralElement { terms: BTreeMap::from([(diagram, sign as i64)]) }
            }
        }
    }

    pub fn add_term(&mut self, d: BrauerDiagram, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(d).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    pub fn add_signed(&mut self, d: SignedDiagram, c: i64) {
        if let SignedDiagram::Term { sign, diagram } = d {
            self.add_term(diagram, sign as i64 * c);
        }
    }

    pub fn terms(&self) -> &BTreeMap<BrauerDiagram, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, d: &BrauerDiagram) -> i64 {
        self.terms.get(d).copied().unwrap_or(0)
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, &x) in &self.terms {
            for (b, &y) in &other.terms {
                out.add_signed(compose_signed(a, b), x * y);
            }
        }
        out
    }

    pub fn scaled(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        IntegralElement { terms: self.terms.iter().map(|(d, &v)| (d.clone(), v * c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, &c) in &other.terms {
            out.add_term(d.clone(), c);
        }
        out
    }
}

/// An element of `A_n` over GF(p) or the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    n: usize,
    field: Field,
    terms: BTreeMap<BrauerDiagram, Scalar>,
}

impl AlgebraElement {
    pub fn zero(n: usize, field: Field) -> Self {
        AlgebraElement { n, field, terms: BTreeMap::new() }
    }

    pub fn one(n: usize, field: Field) -> Self {
        Self::from_diagram(BrauerDiagram::identity(n), field).expect("identity is (n,n)")
    }

    pub fn from_diagram(d: BrauerDiagram, field: Field) -> Result<Self> {
        let mut out = Self::zero(d.r(), field);
        out.add_term(d, field.one())?;
        Ok(out)
    }

    pub fn from_integral(n: usize, x: &IntegralElement, field: Field) -> Result<Self> {
        let mut out = Self::zero(n, field);
        for (d, &c) in x.terms() {
            out.add_term(d.clone(), field.from_i64(c))?;
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> &BTreeMap<BrauerDiagram, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, d: &BrauerDiagram) -> Scalar {
        self.terms.get(d).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Adds `c · d`; the diagram must be `(n,n)` and `c` in this field.
    pub fn add_term(&mut self, d: BrauerDiagram, c: Scalar) -> Result<()> {
        if d.r() != self.n || d.s() != self.n {
            bail!(Usage, "diagram {d} is not an ({n},{n}) diagram", n = self.n);
        }
        if c.field() != self.field {
            bail!(Usage, "coefficient {c} is not in {}", self.field);
        }
        let sum = match self.terms.get(&d) {
            Some(old) => self.field.add(old, &c),
            None => c,
        };
        if sum.is_zero() {
            self.terms.remove(&d);
        } else {
            self.terms.insert(d, sum);
        }
        Ok(())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.field != other.field {
            bail!(
                Usage,
                "cannot combine an element of A_{} over {} with one of A_{} over {}",
                self.n,
                self.field,
                other.n,
                other.field
            );
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Result<Self> {
        let mut out = Self::zero(self.n, self.field);
        for (d, v) in &self.terms {
            out.add_term(d.clone(), self.field.mul(v, &self.field.coerce(c)?))?;
        }
        Ok(out)
    }

    /// Bilinear extension of the signed diagram product.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.n, self.field);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if let SignedDiagram::Term { sign, diagram } = compose_signed(a, b) {
                    let c = self.field.mul(x, y);
                    let c = if sign < 0 { self.field.neg(&c) } else { c };
                    out.add_term(diagram, c)?;
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(d, c)| format!("{c}*{d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    diagram: BrauerDiagram,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    n: usize,
    p: u64,
    terms: Vec<TermJson>,
}

impl Serialize for AlgebraElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ElementJson {
            n: self.n,
            p: self.field.characteristic() as u64,
            terms: self.terms.iter().map(|(d, c)| TermJson { diagram: d.clone(), coeff: c.to_string() }).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AlgebraElement {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = ElementJson::deserialize(deserializer)?;
        let field = Field::new(j.p).map_err(D::Error::custom)?;
        let mut out = AlgebraElement::zero(j.n, field);
        for t in j.terms {
            let c = Scalar::parse(&t.coeff, field).map_err(D::Error::custom)?;
            out.add_term(t.diagram, c).map_err(D::Error::custom)?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossing_plus_cup_cap_squared() {
        let f = Field::new(5).unwrap();
        let x = BrauerDiagram::crossing();
        let e = BrauerDiagram::cup_cap(2, 0);
        let a = AlgebraElement::from_diagram(x.clone(), f)
            .unwrap()
            .add(&AlgebraElement::from_diagram(e.clone(), f).unwrap())
            .unwrap();
        // X² = 1, e² = 0, X·e = e, e·X = -e
        let sq = a.multiply(&a).unwrap();
        assert_eq!(sq, AlgebraElement::one(2, f));
        let one = AlgebraElement::one(2, f);
        assert_eq!(one.multiply(&a).unwrap(), a);
    }

    #[test]
    fn mismatches_are_usage_errors() {
        let a = AlgebraElement::one(2, Field::new(3).unwrap());
        let b = AlgebraElement::one(2, Field::new(5).unwrap());
        assert!(matches!(a.multiply(&b), Err(crate::Error::Usage(_))));
        assert!(a.multiply(&AlgebraElement::one(3, Field::new(3).unwrap())).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let f = Field::new(0).unwrap();
        let mut a = AlgebraElement::one(2, f);
        a.add_term(BrauerDiagram::cup_cap(2, 0), Scalar::parse("-3/2", f).unwrap()).unwrap();
        let text = serde_json::to_string(&a).unwrap();
        assert!(text.contains("\"coeff\":\"-3/2\""));
        assert_eq!(serde_json::from_str::<AlgebraElement>(&text).unwrap(), a);
    }

    #[test]
    fn integral_products_reduce() {
        let s = IntegralElement::from_diagram(BrauerDiagram::simple_transposition(3, 0))
            .add(&IntegralElement::from_diagram(BrauerDiagram::cup_cap(3, 1)).scaled(4));
        let sq = s.multiply(&s);
        for p in [3u64, 5, 7] {
            let f = Field::new(p).unwrap();
            let a = AlgebraElement::from_integral(3, &s, f).unwrap();
            assert_eq!(a.multiply(&a).unwrap(), AlgebraElement::from_integral(3, &sq, f).unwrap());
        }
    }
}
