//! Exact scalars over ℚ and prime fields F_p.
//!
//! A computation fixes one [`Field`]; every [`Scalar`] it touches carries the
//! same variant. Mixing variants in one arithmetic operation is a programming
//! error and panics.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse scalar {text:?} over {field}")]
    Parse { text: String, field: Field },
    #[error("cannot parse field {0:?}; expected \"Q\" or \"F_p\"")]
    FieldSyntax(String),
    #[error("denominator of {0} vanishes modulo {1}")]
    DenominatorVanishes(String, u64),
}

/// The ground field of a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field, ScalarError> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(ScalarError::NotPrime(p))
        }
    }

    /// 0 for ℚ, p for F_p.
    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }

    /// Number of elements, `None` when infinite.
    pub fn size(self) -> Option<u64> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some(p),
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Modular {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// `n / d`, or `None` when `d` vanishes in this field.
    pub fn from_ratio(self, n: i64, d: i64) -> Option<Scalar> {
        let d = self.from_i64(d).inv()?;
        Some(&self.from_i64(n) * &d)
    }

    /// The `index`-th element in the canonical enumeration `0, 1, …, p-1` of F_p.
    /// Over ℚ this is just the integer `index`.
    pub fn element(self, index: u64) -> Scalar {
        match self {
            Field::Rationals => self.from_i64(index as i64),
            Field::Prime(p) => Scalar::Modular {
                value: index % p,
                modulus: p,
            },
        }
    }

    pub fn contains(self, s: &Scalar) -> bool {
        s.field() == self
    }

    /// Parses the text format: `"n"` or `"n/d"` over ℚ; `"n mod p"` over F_p.
    /// Over F_p a bare integer or fraction is reduced modulo p.
    pub fn parse_scalar(self, text: &str) -> Result<Scalar, ScalarError> {
        let err = || ScalarError::Parse {
            text: text.to_string(),
            field: self,
        };
        let t = text.trim();
        match self {
            Field::Rationals => parse_rational(t).ok_or_else(err).map(Scalar::Rational),
            Field::Prime(p) => {
                if let Some((value, modulus)) = t.split_once("mod") {
                    let modulus: u64 = modulus.trim().parse().map_err(|_| err())?;
                    if modulus != p {
                        return Err(err());
                    }
                    let q = parse_rational(value.trim()).ok_or_else(err)?;
                    reduce_mod(&q, p)
                } else {
                    let q = parse_rational(t).ok_or_else(err)?;
                    reduce_mod(&q, p)
                }
            }
        }
    }

    /// Moves a scalar into this field (ℚ → F_p reduces; same field is the identity).
    pub fn convert(self, s: &Scalar) -> Result<Scalar, ScalarError> {
        match (self, s) {
            (Field::Rationals, Scalar::Rational(_)) => Ok(s.clone()),
            (Field::Prime(p), Scalar::Rational(q)) => reduce_mod(q, p),
            (Field::Prime(p), Scalar::Modular { modulus, .. }) if *modulus == p => Ok(s.clone()),
            _ => Err(ScalarError::Parse {
                text: s.to_string(),
                field: self,
            }),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if matches!(t, "Q" | "QQ" | "q" | "rationals") {
            return Ok(Field::Rationals);
        }
        let digits = t
            .strip_prefix("F_")
            .or_else(|| t.strip_prefix('F'))
            .or_else(|| t.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')))
            .ok_or_else(|| ScalarError::FieldSyntax(s.to_string()))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| ScalarError::FieldSyntax(s.to_string()))?;
        Field::prime(p)
    }
}

fn parse_rational(t: &str) -> Option<BigRational> {
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

fn reduce_mod(q: &BigRational, p: u64) -> Result<Scalar, ScalarError> {
    let pb = BigInt::from(p);
    let n = q.numer().mod_floor(&pb).to_u64().expect("residue fits");
    let d = q.denom().mod_floor(&pb).to_u64().expect("residue fits");
    if d == 0 {
        return Err(ScalarError::DenominatorVanishes(q.to_string(), p));
    }
    let n = Scalar::Modular { value: n, modulus: p };
    let d = Scalar::Modular { value: d, modulus: p };
    Ok(&n * &d.inv().expect("nonzero residue is invertible"))
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// Exact square root, if one exists in the field.
    pub fn sqrt(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(q) => {
                if q.is_negative() {
                    return None;
                }
                let n = q.numer().sqrt();
                let d = q.denom().sqrt();
                (&n * &n == *q.numer() && &d * &d == *q.denom())
                    .then(|| Scalar::Rational(BigRational::new(n, d)))
            }
            Scalar::Modular { value, modulus } => (0..*modulus)
                .find(|x| (x * x) % modulus == *value)
                .map(|x| Scalar::Modular {
                    value: x,
                    modulus: *modulus,
                }),
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % m as u128) as u64;
        }
        b = ((b as u128 * b as u128) % m as u128) as u64;
        e >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Modular { value, modulus } => write!(f, "{value} mod {modulus}"),
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (
                Scalar::Modular { value: a, modulus: p },
                Scalar::Modular { value: b, modulus: q },
            ) if p == q => Scalar::Modular {
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                modulus: *p,
            },
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (
                Scalar::Modular { value: a, modulus: p },
                Scalar::Modular { value: b, modulus: q },
            ) if p == q => Scalar::Modular {
                value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                modulus: *p,
            },
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_text_round_trip() {
        let q = Field::Rationals;
        for t in ["0", "-3", "7/2", "-5/12"] {
            assert_eq!(q.parse_scalar(t).unwrap().to_string(), t);
        }
        assert_eq!(q.parse_scalar("4/6").unwrap().to_string(), "2/3");
        assert!(q.parse_scalar("1/0").is_err());
        assert!(q.parse_scalar("abc").is_err());
    }

    #[test]
    fn modular_parse_and_reduce() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.parse_scalar("7 mod 5").unwrap(), f5.from_i64(2));
        assert_eq!(f5.parse_scalar("-1").unwrap(), f5.from_i64(4));
        assert_eq!(f5.parse_scalar("1/2").unwrap(), f5.from_i64(3));
        assert!(f5.parse_scalar("1 mod 7").is_err());
        assert_eq!(f5.from_i64(3).to_string(), "3 mod 5");
    }

    #[test]
    fn field_names() {
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rationals);
        assert_eq!("F_7".parse::<Field>().unwrap(), Field::Prime(7));
        assert_eq!("GF(3)".parse::<Field>().unwrap(), Field::Prime(3));
        assert!("F_6".parse::<Field>().is_err());
        assert_eq!(Field::Prime(3).to_string(), "F_3");
    }

    #[test]
    fn inverses() {
        let f5 = Field::Prime(5);
        assert_eq!(f5.from_i64(2).inv().unwrap(), f5.from_i64(3));
        assert!(f5.zero().inv().is_none());
        let q = Field::Rationals;
        assert_eq!(q.from_i64(2).inv().unwrap(), q.from_ratio(1, 2).unwrap());
    }

    #[test]
    fn square_roots() {
        let q = Field::Rationals;
        assert_eq!(q.from_ratio(9, 4).unwrap().sqrt(), q.from_ratio(3, 2));
        assert!(q.from_i64(2).sqrt().is_none());
        assert!(q.from_i64(-1).sqrt().is_none());
        let f5 = Field::Prime(5);
        assert!(f5.from_i64(4).sqrt().is_some());
        assert!(f5.from_i64(2).sqrt().is_none());
    }

    #[test]
    #[should_panic(expected = "mismatch")]
    fn mixing_fields_panics() {
        let _ = &Field::Rationals.one() + &Field::Prime(3).one();
    }
}
