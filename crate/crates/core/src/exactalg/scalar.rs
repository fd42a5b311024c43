//! Exact field elements: arbitrary-precision rationals and prime-field residues.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::AlgebraError;

/// The ground field every scalar of a computation lives in.
/// Serialized as `"Q"` or `"Fp:<p>"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Field {
    /// Arbitrary-precision rationals.
    Rational,
    /// Integers modulo a prime.
    Prime(u64),
}

impl From<Field> for String {
    fn from(f: Field) -> String {
        f.to_string()
    }
}

impl TryFrom<String> for Field {
    type Error = AlgebraError;

    fn try_from(s: String) -> Result<Field, AlgebraError> {
        s.parse()
    }
}

impl Field {
    /// Builds the prime field of order `p`, rejecting composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Field, AlgebraError> {
        if p < 2 || p > u32::MAX as u64 || !is_prime(p) {
            return Err(AlgebraError::InvalidModulus(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::zero()),
            Field::Prime(p) => Scalar::Modular { residue: 0, modulus: p },
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Modular { residue: n.rem_euclid(p as i64) as u64, modulus: p },
        }
    }

    pub fn from_ratio(self, num: i64, den: i64) -> Result<Scalar, AlgebraError> {
        self.from_i64(num).checked_div(&self.from_i64(den))
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(self) -> Option<u64> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some(p),
        }
    }

    /// Parses the shared scalar literal format into this field.
    ///
    /// Accepted forms are `"p"`, `"p/q"` and `"r mod p"`. A rational literal read into a
    /// prime field is reduced modulo `p`; a modular literal is only accepted by the field
    /// with the same modulus.
    pub fn parse(self, text: &str) -> Result<Scalar, AlgebraError> {
        let text = text.trim();
        let bad = || AlgebraError::ParseScalar(text.to_string());
        if let Some((residue, modulus)) = text.split_once("mod") {
            let residue: BigInt = residue.trim().parse().map_err(|_| bad())?;
            let modulus: u64 = modulus.trim().parse().map_err(|_| bad())?;
            return match self {
                Field::Prime(p) if p == modulus => Ok(reduce(&residue, p)),
                _ => Err(AlgebraError::FieldMismatch {
                    literal: text.to_string(),
                    field: self,
                }),
            };
        }
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (
                n.trim().parse::<BigInt>().map_err(|_| bad())?,
                d.trim().parse::<BigInt>().map_err(|_| bad())?,
            ),
            None => (text.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        match self {
            Field::Rational => Ok(Scalar::Rational(BigRational::new(num, den))),
            Field::Prime(p) => reduce(&num, p).checked_div(&reduce(&den, p)),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl std::str::FromStr for Field {
    type Err = AlgebraError;

    /// Reads `Q` or `Fp:<p>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::Rational);
        }
        let p = s
            .strip_prefix("Fp:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| AlgebraError::ParseField(s.to_string()))?;
        Field::prime(p)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 4 {
        return p >= 2;
    }
    if p % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn reduce(n: &BigInt, p: u64) -> Scalar {
    let m = BigInt::from(p);
    let r = ((n % &m) + &m) % &m;
    let residue = r.iter_u64_digits().next().unwrap_or(0);
    Scalar::Modular { residue, modulus: p }
}

/// An exact element of a [`Field`].
///
/// Rationals are kept in lowest terms with a positive denominator (the invariant of
/// [`BigRational`]). Arithmetic between scalars of different fields is a logic error
/// and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { residue: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { residue, .. } => *residue == 1,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { residue, modulus } => Scalar::Modular {
                residue: pow_mod(*residue, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, AlgebraError> {
        let inv = rhs.inv().ok_or(AlgebraError::DivisionByZero)?;
        Ok(self * &inv)
    }

    /// Size used for residue reporting: `|q|` over the rationals, the canonical
    /// representative in `[0, p)` over a prime field.
    pub fn magnitude(&self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(q.abs()),
            m => m.clone(),
        }
    }

    /// Total order on magnitudes, used to pick the largest residue entry.
    pub fn magnitude_cmp(&self, other: &Scalar) -> std::cmp::Ordering {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.abs().cmp(&b.abs()),
            (Scalar::Modular { residue: a, .. }, Scalar::Modular { residue: b, .. }) => a.cmp(b),
            _ => panic!("scalar comparison across fields"),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Modular { .. } => None,
        }
    }
}

fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
    let mut acc: u128 = 1;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Modular { residue, modulus } => write!(f, "{residue} mod {modulus}"),
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("arithmetic across fields: {} and {}", a.field(), b.field())
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { residue: a, modulus: p }, Scalar::Modular { residue: b, modulus: q })
                if p == q =>
            {
                Scalar::Modular { residue: ((*a as u128 + *b as u128) % *p as u128) as u64, modulus: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Modular { residue: a, modulus: p }, Scalar::Modular { residue: b, modulus: q })
                if p == q =>
            {
                Scalar::Modular { residue: (a + (p - b)) % p, modulus: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { residue: a, modulus: p }, Scalar::Modular { residue: b, modulus: q })
                if p == q =>
            {
                Scalar::Modular { residue: ((*a as u128 * *b as u128) % *p as u128) as u64, modulus: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { residue, modulus } => {
                Scalar::Modular { residue: (modulus - residue) % modulus, modulus: *modulus }
            }
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            _ => *self = &*self + rhs,
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a -= b,
            _ => *self = &*self - rhs,
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
