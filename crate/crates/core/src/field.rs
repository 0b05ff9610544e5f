//! Exact scalars over the rationals or a prime field `F_p` (p odd).
//!
//! A [`FieldElement`] always carries the [`FieldSpec`] it belongs to. Rationals
//! are kept in lowest terms with a positive denominator and prime residues are
//! fully reduced, so derived `PartialEq` is the field's equality.
//!
//! The operator impls (`+`, `-`, `*`, `/`) panic when the operands come from
//! different fields or when dividing by zero; the `try_*` methods report those
//! conditions as [`Error`] values instead. Higher layers check field agreement
//! once at their API boundary and use the operators afterwards.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Error;

/// Largest modulus accepted by [`FieldSpec::prime`].
pub const MAX_PRIME: u64 = u32::MAX as u64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rational,
    Prime(u64),
}

/// Which field scalars live in. Construct with [`FieldSpec::rational`] or
/// [`FieldSpec::prime`]; the latter rejects composites and characteristic 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec(FieldKind);

impl FieldSpec {
    pub const fn rational() -> Self {
        FieldSpec(FieldKind::Rational)
    }

    /// The prime field of order `p`. `p` must be an odd prime not exceeding
    /// [`MAX_PRIME`].
    pub fn prime(p: u64) -> Result<Self, Error> {
        if p == 2 {
            return Err(Error::CharacteristicTwo);
        }
        if p > MAX_PRIME || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(FieldSpec(FieldKind::Prime(p)))
    }

    pub fn kind(self) -> FieldKind {
        self.0
    }

    /// The modulus for a prime field, `None` for the rationals.
    pub fn modulus(self) -> Option<u64> {
        match self.0 {
            FieldKind::Rational => None,
            FieldKind::Prime(p) => Some(p),
        }
    }

    pub fn zero(self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> FieldElement {
        match self.0 {
            FieldKind::Rational => {
                FieldElement::rational(BigRational::from_integer(BigInt::from(n)))
            }
            FieldKind::Prime(p) => FieldElement::residue(n.rem_euclid(p as i64) as u64, p),
        }
    }

    /// `num / den` in this field. Fails when `den` is zero in the field.
    pub fn from_ratio(self, num: i64, den: i64) -> Result<FieldElement, Error> {
        let d = self.from_i64(den);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.from_i64(num).try_div(&d)
    }

    /// Parse a scalar in the text grammar shared by the CLI and JSON:
    /// `[+-]digits[/digits]` for rationals, `[+-]digits` for prime fields.
    /// Prime-field inputs outside `[0, p)` are reduced mod p, never rejected.
    pub fn parse(self, text: &str) -> Result<FieldElement, Error> {
        let bad = || Error::Parse(text.to_string());
        match self.0 {
            FieldKind::Rational => {
                let (num, den) = match text.split_once('/') {
                    Some((n, d)) => (n, Some(d)),
                    None => (text, None),
                };
                let num = parse_signed(num).ok_or_else(bad)?;
                let den = match den {
                    Some(d) => {
                        if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                            return Err(bad());
                        }
                        BigInt::from_str(d).map_err(|_| bad())?
                    }
                    None => BigInt::one(),
                };
                if den.is_zero() {
                    return Err(Error::DenominatorZero);
                }
                Ok(FieldElement::rational(BigRational::new(num, den)))
            }
            FieldKind::Prime(p) => {
                let n = parse_signed(text).ok_or_else(bad)?;
                let r = n.mod_floor(&BigInt::from(p));
                Ok(FieldElement::residue(
                    r.to_u64().expect("residue below p"),
                    p,
                ))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            FieldKind::Rational => f.write_str("rational"),
            FieldKind::Prime(p) => write!(f, "prime:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `rational` or `prime:<p>`.
    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "rational" {
            return Ok(FieldSpec::rational());
        }
        let p = s
            .strip_prefix("prime:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| Error::Parse(format!("field spec {s:?}")))?;
        FieldSpec::prime(p)
    }
}

fn parse_signed(text: &str) -> Option<BigInt> {
    let digits = text.strip_prefix(['+', '-']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(text.strip_prefix('+').unwrap_or(text)).ok()
}

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

/// An exact scalar in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement(Repr);

impl FieldElement {
    fn rational(r: BigRational) -> Self {
        FieldElement(Repr::Rational(r))
    }

    fn residue(value: u64, modulus: u64) -> Self {
        debug_assert!(value < modulus);
        FieldElement(Repr::Prime { value, modulus })
    }

    pub fn spec(&self) -> FieldSpec {
        match &self.0 {
            Repr::Rational(_) => FieldSpec::rational(),
            Repr::Prime { modulus, .. } => FieldSpec(FieldKind::Prime(*modulus)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rational(r) => r.is_zero(),
            Repr::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rational(r) => r.is_one(),
            Repr::Prime { value, .. } => *value == 1,
        }
    }

    /// The underlying rational, if this element is one.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rational(r) => Some(r),
            Repr::Prime { .. } => None,
        }
    }

    /// The residue in `[0, p)`, if this element lives in a prime field.
    pub fn as_residue(&self) -> Option<u64> {
        match &self.0 {
            Repr::Rational(_) => None,
            Repr::Prime { value, .. } => Some(*value),
        }
    }

    pub fn same_field(&self, other: &Self) -> Result<(), Error> {
        if self.spec() == other.spec() {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.spec(),
                right: other.spec(),
            })
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, Error> {
        self.same_field(rhs)?;
        Ok(self.add_unchecked(rhs))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, Error> {
        self.same_field(rhs)?;
        Ok(self.add_unchecked(&rhs.neg_ref()))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, Error> {
        self.same_field(rhs)?;
        Ok(self.mul_unchecked(rhs))
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self, Error> {
        self.same_field(rhs)?;
        Ok(self.mul_unchecked(&rhs.inv()?))
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0 {
            Repr::Rational(r) => FieldElement::rational(r.recip()),
            Repr::Prime { value, modulus } => {
                FieldElement::residue(inv_mod(*value, *modulus), *modulus)
            }
        })
    }

    pub fn square(&self) -> Self {
        self.mul_unchecked(self)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.spec().one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.square();
            exp >>= 1;
        }
        acc
    }

    fn neg_ref(&self) -> Self {
        match &self.0 {
            Repr::Rational(r) => FieldElement::rational(-r),
            Repr::Prime { value, modulus } => {
                FieldElement::residue(if *value == 0 { 0 } else { modulus - value }, *modulus)
            }
        }
    }

    fn add_unchecked(&self, rhs: &Self) -> Self {
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => FieldElement::rational(a + b),
            (Repr::Prime { value: a, modulus }, Repr::Prime { value: b, .. }) => {
                let s = a + b;
                FieldElement::residue(if s >= *modulus { s - modulus } else { s }, *modulus)
            }
            _ => mismatch(self, rhs),
        }
    }

    fn mul_unchecked(&self, rhs: &Self) -> Self {
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => FieldElement::rational(a * b),
            (Repr::Prime { value: a, modulus }, Repr::Prime { value: b, .. }) => {
                FieldElement::residue(a * b % modulus, *modulus)
            }
            _ => mismatch(self, rhs),
        }
    }

    fn assert_same(&self, rhs: &Self) {
        if let Err(e) = self.same_field(rhs) {
            panic!("{e}");
        }
    }
}

#[cold]
fn mismatch(a: &FieldElement, b: &FieldElement) -> ! {
    panic!(
        "{}",
        Error::FieldMismatch {
            left: a.spec(),
            right: b.spec()
        }
    )
}

/// Inverse of a nonzero residue modulo a prime, via the extended Euclidean algorithm.
fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    t0.rem_euclid(p as i64) as u64
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Repr::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rational(_) => write!(f, "{self}"),
            Repr::Prime { modulus, .. } => write!(f, "{self} (mod {modulus})"),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.assert_same(rhs);
                let f: fn(&FieldElement, &FieldElement) -> FieldElement = $body;
                f(self, rhs)
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
        impl $trait<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a.add_unchecked(b));
binop!(Sub, sub, |a, b| a.add_unchecked(&b.neg_ref()));
binop!(Mul, mul, |a, b| a.mul_unchecked(b));
binop!(Div, div, |a, b| a
    .mul_unchecked(&b.inv().expect("division by zero")));

impl From<BigRational> for FieldElement {
    fn from(r: BigRational) -> Self {
        FieldElement::rational(r)
    }
}
