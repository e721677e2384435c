//! Exact scalar fields.
//!
//! Everything above this module is generic over [`Field`]. The workhorse
//! implementation is [`QuadComplex`], the field `Q(√m) + i·Q(√m)` for a
//! square-free radicand `m`; `BigRational` is provided as the plain real
//! rational field.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// An exact field with a conjugation, suitable for Hermitian linear algebra.
///
/// Equality is structural and decidable; there are no tolerances anywhere.
pub trait Field:
    Clone
    + fmt::Debug
    + fmt::Display
    + Eq
    + Hash
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
{
    /// Complex conjugate (identity on real fields).
    fn conj(&self) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn from_rational(value: BigRational) -> Self;

    /// The value as a rational number, if it is one.
    fn to_rational(&self) -> Option<BigRational>;

    /// Whether two elements live in the same concrete field.
    fn same_field(&self, _other: &Self) -> bool {
        true
    }

    fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `conj(x)·x`, always real.
    fn norm_sq(&self) -> Self {
        self.conj() * self
    }

    fn is_real(&self) -> bool {
        self.conj() == *self
    }
}

impl Field for BigRational {
    fn conj(&self) -> Self {
        self.clone()
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_rational(value: BigRational) -> Self {
        value
    }

    fn to_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("radicand {0} is not a positive square-free integer")]
    BadRadicand(u64),
    #[error("malformed scalar literal `{literal}`: {reason}")]
    Syntax { literal: String, reason: String },
}

/// Checks that `m` is a positive square-free integer.
pub fn validate_radicand(m: u64) -> Result<u32, ScalarError> {
    if m == 0 || m > u32::MAX as u64 {
        return Err(ScalarError::BadRadicand(m));
    }
    let mut d = 2u64;
    while d * d <= m {
        if m.is_multiple_of(d * d) {
            return Err(ScalarError::BadRadicand(m));
        }
        d += 1;
    }
    Ok(m as u32)
}

/// `(re_rat + re_irr·√m) + i·(im_rat + im_irr·√m)`.
///
/// The radicand travels with the value. Elements whose irrational parts vanish
/// carry `m = 1`, so such values compare equal across fields and combine with
/// elements of any `Q(√m)`. Mixing two different radicands with non-zero
/// irrational parts is a logic error and panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadComplex {
    re_rat: BigRational,
    re_irr: BigRational,
    im_rat: BigRational,
    im_irr: BigRational,
    radicand: u32,
}

/// Real element `rat + irr·√m`, only used for intermediate arithmetic.
#[derive(Clone)]
struct QuadReal {
    rat: BigRational,
    irr: BigRational,
}

impl QuadReal {
    fn zero() -> Self {
        QuadReal {
            rat: BigRational::zero(),
            irr: BigRational::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }

    fn add(&self, other: &QuadReal) -> QuadReal {
        QuadReal {
            rat: &self.rat + &other.rat,
            irr: &self.irr + &other.irr,
        }
    }

    fn sub(&self, other: &QuadReal) -> QuadReal {
        QuadReal {
            rat: &self.rat - &other.rat,
            irr: &self.irr - &other.irr,
        }
    }

    fn neg(&self) -> QuadReal {
        QuadReal {
            rat: -&self.rat,
            irr: -&self.irr,
        }
    }

    fn mul(&self, other: &QuadReal, m: u32) -> QuadReal {
        if self.is_zero() || other.is_zero() {
            return QuadReal::zero();
        }
        if self.irr.is_zero() && other.irr.is_zero() {
            return QuadReal {
                rat: &self.rat * &other.rat,
                irr: BigRational::zero(),
            };
        }
        let m = BigRational::from_integer(BigInt::from(m));
        QuadReal {
            rat: &self.rat * &other.rat + &self.irr * &other.irr * m,
            irr: &self.rat * &other.irr + &self.irr * &other.rat,
        }
    }

    fn inv(&self, m: u32) -> QuadReal {
        if self.irr.is_zero() {
            return QuadReal {
                rat: self.rat.recip(),
                irr: BigRational::zero(),
            };
        }
        let m = BigRational::from_integer(BigInt::from(m));
        // (p - q√m) / (p² - m q²); the norm is non-zero because √m is irrational.
        let norm = &self.rat * &self.rat - &self.irr * &self.irr * m;
        QuadReal {
            rat: &self.rat / &norm,
            irr: -&self.irr / &norm,
        }
    }
}

fn join_radicand(a: u32, b: u32) -> u32 {
    if a == 1 || a == b {
        b
    } else if b == 1 {
        a
    } else {
        panic!("cannot combine elements of Q(sqrt {a}) and Q(sqrt {b})");
    }
}

impl QuadComplex {
    /// Builds a value; for `m = 1` the irrational parts fold into the rational ones.
    pub fn new(
        re_rat: BigRational,
        re_irr: BigRational,
        im_rat: BigRational,
        im_irr: BigRational,
        radicand: u32,
    ) -> Self {
        assert!(radicand >= 1, "radicand must be positive");
        if radicand == 1 {
            return QuadComplex::from_parts(
                QuadReal {
                    rat: re_rat + re_irr,
                    irr: BigRational::zero(),
                },
                QuadReal {
                    rat: im_rat + im_irr,
                    irr: BigRational::zero(),
                },
                1,
            );
        }
        QuadComplex::from_parts(
            QuadReal {
                rat: re_rat,
                irr: re_irr,
            },
            QuadReal {
                rat: im_rat,
                irr: im_irr,
            },
            radicand,
        )
    }

    fn from_parts(re: QuadReal, im: QuadReal, radicand: u32) -> Self {
        let radicand = if re.irr.is_zero() && im.irr.is_zero() {
            1
        } else {
            radicand
        };
        QuadComplex {
            re_rat: re.rat,
            re_irr: re.irr,
            im_rat: im.rat,
            im_irr: im.irr,
            radicand,
        }
    }

    fn re(&self) -> QuadReal {
        QuadReal {
            rat: self.re_rat.clone(),
            irr: self.re_irr.clone(),
        }
    }

    fn im(&self) -> QuadReal {
        QuadReal {
            rat: self.im_rat.clone(),
            irr: self.im_irr.clone(),
        }
    }

    pub fn rational(value: BigRational) -> Self {
        QuadComplex {
            re_rat: value,
            re_irr: BigRational::zero(),
            im_rat: BigRational::zero(),
            im_irr: BigRational::zero(),
            radicand: 1,
        }
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        QuadComplex {
            im_rat: BigRational::one(),
            ..Self::zero()
        }
    }

    /// `√m` as an element of `Q(√m)`.
    pub fn sqrt_radicand(m: u32) -> Self {
        Self::new(
            BigRational::zero(),
            BigRational::one(),
            BigRational::zero(),
            BigRational::zero(),
            m,
        )
    }

    pub fn re_rat(&self) -> &BigRational {
        &self.re_rat
    }

    pub fn re_irr(&self) -> &BigRational {
        &self.re_irr
    }

    pub fn im_rat(&self) -> &BigRational {
        &self.im_rat
    }

    pub fn im_irr(&self) -> &BigRational {
        &self.im_irr
    }

    /// Radicand of the smallest field this value is known to need (1 when rational or Gaussian).
    pub fn radicand(&self) -> u32 {
        self.radicand
    }

    /// Parses a literal such as `-1/2+1/2*r*i` where `r` stands for `√m`.
    pub fn parse(text: &str, radicand: u32) -> Result<Self, ScalarError> {
        Ok(text.parse::<ScalarLiteral>()?.to_scalar(radicand))
    }
}

impl fmt::Debug for QuadComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicand == 1 {
            write!(f, "{}", self)
        } else {
            write!(f, "{} [m={}]", self, self.radicand)
        }
    }
}

impl fmt::Display for QuadComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            [
                (&self.re_rat, ""),
                (&self.re_irr, "r"),
                (&self.im_rat, "i"),
                (&self.im_irr, "r*i"),
            ],
        )
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: [(&BigRational, &str); 4]) -> fmt::Result {
    let mut first = true;
    for (coeff, unit) in terms {
        if coeff.is_zero() {
            continue;
        }
        if !first && coeff.is_positive() {
            f.write_str("+")?;
        }
        first = false;
        if unit.is_empty() {
            write!(f, "{}", coeff)?;
        } else if coeff.is_one() {
            f.write_str(unit)?;
        } else if (-coeff).is_one() {
            write!(f, "-{}", unit)?;
        } else {
            write!(f, "{}*{}", coeff, unit)?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl Zero for QuadComplex {
    fn zero() -> Self {
        Self::rational(BigRational::zero())
    }

    fn is_zero(&self) -> bool {
        self.re_rat.is_zero() && self.im_rat.is_zero() && self.re_irr.is_zero() && self.im_irr.is_zero()
    }
}

impl One for QuadComplex {
    fn one() -> Self {
        Self::rational(BigRational::one())
    }
}

impl<'a> Add<&'a QuadComplex> for &QuadComplex {
    type Output = QuadComplex;
    fn add(self, rhs: &'a QuadComplex) -> QuadComplex {
        let m = join_radicand(self.radicand, rhs.radicand);
        QuadComplex::from_parts(self.re().add(&rhs.re()), self.im().add(&rhs.im()), m)
    }
}

impl<'a> Sub<&'a QuadComplex> for &QuadComplex {
    type Output = QuadComplex;
    fn sub(self, rhs: &'a QuadComplex) -> QuadComplex {
        let m = join_radicand(self.radicand, rhs.radicand);
        QuadComplex::from_parts(self.re().sub(&rhs.re()), self.im().sub(&rhs.im()), m)
    }
}

impl<'a> Mul<&'a QuadComplex> for &QuadComplex {
    type Output = QuadComplex;
    fn mul(self, rhs: &'a QuadComplex) -> QuadComplex {
        let m = join_radicand(self.radicand, rhs.radicand);
        let (a, b, c, d) = (self.re(), self.im(), rhs.re(), rhs.im());
        if b.is_zero() && d.is_zero() {
            return QuadComplex::from_parts(a.mul(&c, m), QuadReal::zero(), m);
        }
        let re = a.mul(&c, m).sub(&b.mul(&d, m));
        let im = a.mul(&d, m).add(&b.mul(&c, m));
        QuadComplex::from_parts(re, im, m)
    }
}

impl<'a> Div<&'a QuadComplex> for &QuadComplex {
    type Output = QuadComplex;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &'a QuadComplex) -> QuadComplex {
        let inv = Field::inv(rhs).expect("division by zero");
        self * &inv
    }
}

impl Neg for &QuadComplex {
    type Output = QuadComplex;
    fn neg(self) -> QuadComplex {
        QuadComplex::from_parts(self.re().neg(), self.im().neg(), self.radicand)
    }
}

impl Neg for QuadComplex {
    type Output = QuadComplex;
    fn neg(self) -> QuadComplex {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait for QuadComplex {
            type Output = QuadComplex;
            fn $method(self, rhs: QuadComplex) -> QuadComplex {
                (&self).$method(&rhs)
            }
        }

        impl<'a> $trait<&'a QuadComplex> for QuadComplex {
            type Output = QuadComplex;
            fn $method(self, rhs: &'a QuadComplex) -> QuadComplex {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add add, Sub sub, Mul mul, Div div);

impl Field for QuadComplex {
    fn conj(&self) -> Self {
        QuadComplex::from_parts(self.re(), self.im().neg(), self.radicand)
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let m = self.radicand;
        let (a, b) = (self.re(), self.im());
        let norm = a.mul(&a, m).add(&b.mul(&b, m));
        let scale = norm.inv(m);
        Some(QuadComplex::from_parts(
            a.mul(&scale, m),
            b.neg().mul(&scale, m),
            m,
        ))
    }

    fn from_rational(value: BigRational) -> Self {
        Self::rational(value)
    }

    fn to_rational(&self) -> Option<BigRational> {
        if self.re_irr.is_zero() && self.im_rat.is_zero() && self.im_irr.is_zero() {
            Some(self.re_rat.clone())
        } else {
            None
        }
    }

    fn same_field(&self, other: &Self) -> bool {
        self.radicand == 1 || other.radicand == 1 || self.radicand == other.radicand
    }

    fn norm_sq(&self) -> Self {
        let m = self.radicand;
        let (a, b) = (self.re(), self.im());
        QuadComplex::from_parts(a.mul(&a, m).add(&b.mul(&b, m)), QuadReal::zero(), m)
    }

    fn is_real(&self) -> bool {
        self.im_rat.is_zero() && self.im_irr.is_zero()
    }
}

/// A parsed scalar literal, kept symbolic in `r` until a radicand is supplied.
///
/// Grammar: a sum of terms, each an optional rational coefficient times any
/// of the factors `r` and `i` joined by `*`. Whitespace is ignored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScalarLiteral {
    coeffs: [BigRational; 4],
}

impl ScalarLiteral {
    pub fn to_scalar(&self, radicand: u32) -> QuadComplex {
        let [a, b, c, d] = self.coeffs.clone();
        QuadComplex::new(a, b, c, d, radicand)
    }

    /// Whether the literal mentions `r` with a non-zero coefficient.
    pub fn uses_radical(&self) -> bool {
        !self.coeffs[1].is_zero() || !self.coeffs[3].is_zero()
    }
}

impl From<&QuadComplex> for ScalarLiteral {
    fn from(value: &QuadComplex) -> Self {
        ScalarLiteral {
            coeffs: [
                value.re_rat.clone(),
                value.re_irr.clone(),
                value.im_rat.clone(),
                value.im_irr.clone(),
            ],
        }
    }
}

impl fmt::Display for ScalarLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.coeffs;
        write_terms(f, [(a, ""), (b, "r"), (c, "i"), (d, "r*i")])
    }
}

impl FromStr for ScalarLiteral {
    type Err = ScalarError;

    fn from_str(text: &str) -> Result<Self, ScalarError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let fail = |reason: &str| ScalarError::Syntax {
            literal: text.to_string(),
            reason: reason.to_string(),
        };
        if compact.is_empty() {
            return Err(fail("empty literal"));
        }
        let mut coeffs: [BigRational; 4] = Default::default();
        let bytes = compact.as_bytes();
        let mut start = 0;
        while start < bytes.len() {
            let mut negative = false;
            let mut pos = start;
            while pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
                if pos > start {
                    return Err(fail("repeated sign"));
                }
                negative = bytes[pos] == b'-';
                pos += 1;
            }
            if pos > start && start == 0 && pos == bytes.len() {
                return Err(fail("dangling sign"));
            }
            let end = compact[pos..]
                .find(['+', '-'])
                .map_or(compact.len(), |offset| pos + offset);
            let term = &compact[pos..end];
            if term.is_empty() {
                return Err(fail("empty term"));
            }
            let mut coeff = BigRational::one();
            let mut has_r = false;
            let mut has_i = false;
            let mut has_number = false;
            for factor in term.split('*') {
                match factor {
                    "r" if !has_r => has_r = true,
                    "i" if !has_i => has_i = true,
                    "r" | "i" => return Err(fail("repeated factor")),
                    "" => return Err(fail("empty factor")),
                    number => {
                        if has_number {
                            return Err(fail("more than one numeric factor in a term"));
                        }
                        if !number.bytes().all(|b| b.is_ascii_digit() || b == b'/') {
                            return Err(fail(&format!("unexpected factor `{}`", number)));
                        }
                        coeff = BigRational::from_str(number)
                            .map_err(|_| fail(&format!("bad rational `{}`", number)))?;
                        has_number = true;
                    }
                }
            }
            if negative {
                coeff = -coeff;
            }
            let slot = match (has_r, has_i) {
                (false, false) => 0,
                (true, false) => 1,
                (false, true) => 2,
                (true, true) => 3,
            };
            coeffs[slot] += coeff;
            start = end;
        }
        Ok(ScalarLiteral { coeffs })
    }
}

impl Serialize for ScalarLiteral {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ScalarLiteral {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Int(i64),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Text(text) => text.parse().map_err(serde::de::Error::custom),
            Raw::Int(n) => Ok(ScalarLiteral {
                coeffs: [
                    BigRational::from_integer(BigInt::from(n)),
                    BigRational::zero(),
                    BigRational::zero(),
                    BigRational::zero(),
                ],
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn lit(s: &str, m: u32) -> QuadComplex {
        QuadComplex::parse(s, m).unwrap()
    }

    #[test]
    fn parses_grammar_forms() {
        assert_eq!(lit("3", 2), QuadComplex::integer(3));
        assert_eq!(lit("3/4", 2), QuadComplex::rational(q(3, 4)));
        assert_eq!(
            lit("1+2*r", 2),
            QuadComplex::new(q(1, 1), q(2, 1), q(0, 1), q(0, 1), 2)
        );
        assert_eq!(lit("5*i", 2), QuadComplex::integer(5) * QuadComplex::i());
        assert_eq!(
            lit(" -1/2 + 1/2 * r * i ", 3),
            QuadComplex::new(q(-1, 2), q(0, 1), q(0, 1), q(1, 2), 3)
        );
        assert_eq!(lit("i*r", 3), lit("r*i", 3));
        assert_eq!(lit("-r", 2), -QuadComplex::sqrt_radicand(2));
    }

    #[test]
    fn rejects_malformed_literals() {
        for bad in ["", "+", "1**r", "r*r", "2*3", "x", "1+", "--1", "1/0x"] {
            assert!(bad.parse::<ScalarLiteral>().is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn display_round_trips() {
        for s in ["0", "1", "-1/2+1/2*r*i", "r", "-r*i", "3/7-2*r+i-5/3*r*i"] {
            let v = lit(s, 5);
            assert_eq!(v.to_string(), s);
            assert_eq!(lit(&v.to_string(), 5), v);
        }
    }

    #[test]
    fn radicand_one_folds_irrational_parts() {
        let v = lit("1+r+i+r*i", 1);
        assert_eq!(v, lit("2+2*i", 1));
        assert!(v.re_irr().is_zero() && v.im_irr().is_zero());
    }

    #[test]
    fn sqrt_squares_to_radicand() {
        let r = QuadComplex::sqrt_radicand(3);
        assert_eq!(&r * &r, QuadComplex::integer(3));
        assert_eq!((&r * &r).radicand(), 1);
    }

    #[test]
    fn cube_root_of_unity() {
        let w = lit("-1/2+1/2*r*i", 3);
        let w3 = &(&w * &w) * &w;
        assert_eq!(w3, QuadComplex::one());
        assert_eq!(w.clone() * w.clone() + w.clone() + QuadComplex::one(), QuadComplex::zero());
        assert_eq!(w.conj(), &w * &w);
    }

    #[test]
    fn inverse_of_mixed_element() {
        let x = lit("1+r-3*i+1/2*r*i", 2);
        let inv = Field::inv(&x).unwrap();
        assert_eq!(&x * &inv, QuadComplex::one());
        assert!(Field::inv(&QuadComplex::zero()).is_none());
    }

    #[test]
    fn norm_sq_is_real() {
        let x = lit("2-r*i", 7);
        let n = x.norm_sq();
        assert!(n.is_real());
        assert_eq!(n, x.conj() * x);
    }

    #[test]
    fn radicand_validation() {
        assert_eq!(validate_radicand(1), Ok(1));
        assert_eq!(validate_radicand(6), Ok(6));
        assert!(validate_radicand(0).is_err());
        assert!(validate_radicand(12).is_err());
        assert!(validate_radicand(9).is_err());
    }

    #[test]
    #[should_panic(expected = "cannot combine")]
    fn mixing_fields_panics() {
        let _ = QuadComplex::sqrt_radicand(2) + QuadComplex::sqrt_radicand(3);
    }

    #[test]
    fn json_literals_accept_strings_and_integers() {
        let v: Vec<ScalarLiteral> = serde_json::from_str(r#"["1/2*r", 3, "-i"]"#).unwrap();
        assert_eq!(v[0].to_scalar(2), lit("1/2*r", 2));
        assert_eq!(v[1].to_scalar(2), QuadComplex::integer(3));
        assert_eq!(v[2].to_scalar(2), -QuadComplex::i());
        assert!(serde_json::from_str::<Vec<ScalarLiteral>>(r#"["1/"]"#).is_err());
    }
}
