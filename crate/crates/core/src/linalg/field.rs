//! Coefficient fields: prime fields GF(p) for odd p and the rationals.
//!
//! Heavy kernels are written against the [`Arith`] trait so that the GF(p)
//! path works on plain `u32` residues. [`Field`] and [`Scalar`] are the
//! tagged, runtime-selected forms used at API boundaries.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{bail, Error, Result};

/// Largest prime modulus accepted in GF(p) mode.
pub const MAX_PRIME: u64 = 1 << 31;

/// Field operations on an element type. Implementations are cheap to clone
/// and carry whatever context (the modulus) the arithmetic needs.
pub trait Arith: Clone + fmt::Debug + PartialEq + Send + Sync {
    type Elem: Clone + fmt::Debug + PartialEq + Send + Sync;

    fn field(&self) -> Field;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn to_scalar(&self, a: &Self::Elem) -> Scalar;
    fn from_scalar(&self, s: &Scalar) -> Result<Self::Elem>;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `acc += a * b`, the inner-loop shape of elimination.
    fn mul_add_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        *acc = self.add(acc, &self.mul(a, b));
    }
}

/// GF(p) with `p` an odd prime below 2^31.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        match Field::new(p)? {
            Field::Prime(p) => Ok(PrimeField { p }),
            Field::Rational => bail!(Usage, "GF(p) requires p > 0"),
        }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Reduces a signed integer into `[0, p)`.
    pub fn reduce(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let p = self.p as u64;
        let mut acc = 1u64;
        let mut b = base as u64 % p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            exp >>= 1;
        }
        base = acc as u32;
        base
    }
}

impl Arith for PrimeField {
    type Elem = u32;

    fn field(&self) -> Field {
        Field::Prime(self.p)
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn from_i64(&self, v: i64) -> u32 {
        self.reduce(v)
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        let p = self.p as u64;
        (if s >= p { s - p } else { s }) as u32
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (*a as u64 + self.p as u64 - *b as u64) as u32
        }
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        (*a as u64 * *b as u64 % self.p as u64) as u32
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p as u64 - 2))
        }
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn to_scalar(&self, a: &u32) -> Scalar {
        Scalar::Mod { value: *a, p: self.p }
    }
    fn from_scalar(&self, s: &Scalar) -> Result<u32> {
        match s {
            Scalar::Mod { value, p } if *p == self.p => Ok(*value),
            Scalar::Rational(q) if q.denom().is_one() => {
                let m = BigInt::from(self.p);
                let r = ((q.numer() % &m) + &m) % &m;
                Ok(u32::try_from(r).expect("residue fits u32"))
            }
            other => bail!(Usage, "scalar {other} does not belong to GF({})", self.p),
        }
    }
    #[inline]
    fn mul_add_assign(&self, acc: &mut u32, a: &u32, b: &u32) {
        *acc = ((*acc as u64 + *a as u64 * *b as u64) % self.p as u64) as u32;
    }
}

/// The rationals, exact.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct RationalField;

impl Arith for RationalField {
    type Elem = BigRational;

    fn field(&self) -> Field {
        Field::Rational
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn to_scalar(&self, a: &BigRational) -> Scalar {
        Scalar::Rational(a.clone())
    }
    fn from_scalar(&self, s: &Scalar) -> Result<BigRational> {
        match s {
            Scalar::Rational(q) => Ok(q.clone()),
            other => bail!(Usage, "scalar {other} is not rational"),
        }
    }
    fn mul_add_assign(&self, acc: &mut BigRational, a: &BigRational, b: &BigRational) {
        if !a.is_zero() && !b.is_zero() {
            *acc += a * b;
        }
    }
}

/// Runtime field tag: an odd prime `p`, or characteristic zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Prime(u32),
    Rational,
}

impl Field {
    /// `p = 0` selects the rationals; otherwise `p` must be an odd prime
    /// below 2^31.
    pub fn new(p: u64) -> Result<Field> {
        if p == 0 {
            return Ok(Field::Rational);
        }
        if p == 2 {
            bail!(Unsupported, "characteristic 2 is not supported");
        }
        if p >= MAX_PRIME {
            bail!(Usage, "prime {p} exceeds the supported bound 2^31");
        }
        if !is_prime(p) {
            bail!(Usage, "{p} is not prime");
        }
        Ok(Field::Prime(p as u32))
    }

    /// 0 for the rationals.
    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Prime(p) => *p,
            Field::Rational => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Mod { value: v.rem_euclid(*p as i64) as u32, p: *p },
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.binop(a, b, |f, x, y| f.add(x, y), |x, y| x + y)
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.binop(a, b, |f, x, y| f.sub(x, y), |x, y| x - y)
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.binop(a, b, |f, x, y| f.mul(x, y), |x, y| x * y)
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        self.sub(&self.zero(), a)
    }

    /// Brings a scalar of any tag into this field; integers reduce mod p.
    pub fn coerce(&self, s: &Scalar) -> Result<Scalar> {
        match self {
            Field::Prime(p) => Ok(Scalar::Mod { value: PrimeField { p: *p }.from_scalar(s)?, p: *p }),
            Field::Rational => Ok(Scalar::Rational(RationalField.from_scalar(s)?)),
        }
    }

    fn binop(
        &self,
        a: &Scalar,
        b: &Scalar,
        fp: impl Fn(&PrimeField, &u32, &u32) -> u32,
        q: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Mod { value: x, p: px }, Scalar::Mod { value: y, p: py })
                if p == px && p == py =>
            {
                Scalar::Mod { value: fp(&PrimeField { p: *p }, x, y), p: *p }
            }
            (Field::Rational, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(q(x, y)),
            _ => panic!("scalar field mismatch: {a} and {b} in {self:?}"),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "GF({p})"),
            Field::Rational => write!(f, "Q"),
        }
    }
}

/// A field element together with its field tag.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod { value: u32, p: u32 },
    Rational(BigRational),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Mod { p, .. } => Field::Prime(*p),
            Scalar::Rational(_) => Field::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Mod { value, .. } => *value == 0,
            Scalar::Rational(q) => q.is_zero(),
        }
    }

    /// Parses `"3"`, `"-2"` or `"5/7"` into the given field.
    pub fn parse(text: &str, field: Field) -> Result<Scalar> {
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (text, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| Error::Parse(format!("bad coefficient {text:?}")))?;
        let den: BigInt = den.parse().map_err(|_| Error::Parse(format!("bad coefficient {text:?}")))?;
        if den.is_zero() {
            bail!(Parse, "zero denominator in {text:?}");
        }
        match field {
            Field::Rational => Ok(Scalar::Rational(BigRational::new(num, den))),
            Field::Prime(p) => {
                let f = PrimeField { p };
                let m = BigInt::from(p);
                let reduce = |x: &BigInt| -> u32 {
                    let r = ((x % &m) + &m) % &m;
                    u32::try_from(r).expect("residue fits u32")
                };
                let d = f
                    .inv(&reduce(&den))
                    .ok_or_else(|| Error::Domain(format!("denominator of {text:?} vanishes mod {p}")))?;
                Ok(Scalar::Mod { value: f.mul(&reduce(&num), &d), p })
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod { value, .. } => write!(f, "{value}"),
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
        }
    }
}

/// Deterministic trial division; `n` is at most 2^31.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Converts a signed machine integer to a rational, used by integral
/// structure constants.
pub fn rational(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Centered lift of a residue, `(-p/2, p/2]`.
pub fn centered(value: u64, p: u64) -> i64 {
    if value > p / 2 {
        value as i64 - p as i64
    } else {
        value as i64
    }
}
