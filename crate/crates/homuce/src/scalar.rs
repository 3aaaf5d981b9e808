//! Exact scalars in Q and in real quadratic fields Q(sqrt(d)).
//!
//! A [`Scalar`] is `a + b*sqrt(d)` with big-rational components. The surd
//! index `d` travels with the value and is erased whenever `b = 0`, so plain
//! rationals combine freely with elements of any one quadratic field. Two
//! values with different nonzero surd parts never meet in a well-formed
//! computation; combining them is a panic, not an error.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use thiserror::Error;

/// Element of Q(sqrt(d)), exact.
#[derive(Clone, PartialEq, Eq)]
pub struct Scalar {
    a: BigRational,
    b: BigRational,
    /// Surd index; `None` iff `b = 0`.
    d: Option<u64>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScalarError {
    #[error("parse error at byte {pos}: expected {expected}")]
    Parse { pos: usize, expected: &'static str },
    #[error("surd index {0} is not a square-free integer >= 2")]
    BadSurdIndex(u64),
    #[error("sqrt({found}) does not live in Q(sqrt({expected}))")]
    WrongField { found: u64, expected: u64 },
}

/// True when `d >= 2` and no prime square divides it.
pub fn is_square_free(d: u64) -> bool {
    if d < 2 {
        return false;
    }
    let mut n = d;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return false;
            }
        }
        p += 1;
    }
    true
}

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            a: BigRational::zero(),
            b: BigRational::zero(),
            d: None,
        }
    }

    pub fn one() -> Self {
        Scalar {
            a: BigRational::one(),
            b: BigRational::zero(),
            d: None,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_big_rational(BigRational::from(BigInt::from(n)))
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Scalar::from_big_rational(rat(p, q))
    }

    pub fn from_big_rational(a: BigRational) -> Self {
        Scalar {
            a,
            b: BigRational::zero(),
            d: None,
        }
    }

    /// `(p/q) * sqrt(d)`.
    pub fn surd(p: i64, q: i64, d: u64) -> Self {
        assert!(q != 0, "zero denominator");
        Scalar::with_parts(BigRational::zero(), rat(p, q), Some(d))
    }

    /// `a + b*sqrt(d)` from rational parts.
    pub fn quadratic(a: BigRational, b: BigRational, d: u64) -> Self {
        Scalar::with_parts(a, b, Some(d))
    }

    fn with_parts(a: BigRational, b: BigRational, d: Option<u64>) -> Self {
        if b.is_zero() {
            Scalar { a, b, d: None }
        } else {
            let d = d.expect("nonzero surd part requires a surd index");
            debug_assert!(is_square_free(d), "surd index must be square-free >= 2");
            Scalar { a, b, d: Some(d) }
        }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.b
    }

    pub fn surd_index(&self) -> Option<u64> {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.b.is_zero() && self.a.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a - b*sqrt(d)`.
    pub fn conjugate(&self) -> Self {
        Scalar::with_parts(self.a.clone(), -self.b.clone(), self.d)
    }

    /// Field norm `a^2 - d*b^2`, a rational; zero only for the zero element.
    pub fn norm(&self) -> BigRational {
        match self.d {
            None => &self.a * &self.a,
            Some(d) => &self.a * &self.a - &self.b * &self.b * BigRational::from(BigInt::from(d)),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero scalar");
        let n = self.norm();
        debug_assert!(!n.is_zero(), "square-free surd index gives nonzero norm");
        let c = self.conjugate();
        Scalar::with_parts(&c.a / &n, &c.b / &n, self.d)
    }

    fn unified_d(&self, other: &Self) -> Option<u64> {
        match (self.d, other.d) {
            (None, d) | (d, None) => d,
            (Some(x), Some(y)) => {
                assert!(x == y, "mixing Q(sqrt({x})) with Q(sqrt({y}))");
                Some(x)
            }
        }
    }

    /// Canonical text form: `p/q`, `r/s*sqrt(d)` or `p/q+r/s*sqrt(d)`.
    pub fn to_text(&self) -> String {
        fn rat_text(r: &BigRational) -> String {
            if r.denom().is_one() {
                r.numer().to_string()
            } else {
                format!("{}/{}", r.numer(), r.denom())
            }
        }
        if self.b.is_zero() {
            return rat_text(&self.a);
        }
        let d = self.d.unwrap();
        let surd = format!("{}*sqrt({})", rat_text(&self.b.abs()), d);
        if self.a.is_zero() {
            if self.b.is_negative() {
                format!("-{surd}")
            } else {
                surd
            }
        } else if self.b.is_negative() {
            format!("{}-{}", rat_text(&self.a), surd)
        } else {
            format!("{}+{}", rat_text(&self.a), surd)
        }
    }

    /// Parses the text form. `expect_d` restricts which surd index may occur;
    /// `None` accepts any square-free index.
    pub fn parse(text: &str, expect_d: Option<u64>) -> Result<Scalar, ScalarError> {
        let s: Vec<u8> = text.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
        let mut p = Parser { s: &s, pos: 0 };
        let value = p.scalar(expect_d)?;
        if p.pos != p.s.len() {
            return Err(ScalarError::Parse {
                pos: p.pos,
                expected: "end of scalar",
            });
        }
        Ok(value)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8, what: &'static str) -> Result<(), ScalarError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(ScalarError::Parse {
                pos: self.pos,
                expected: what,
            })
        }
    }

    fn integer(&mut self) -> Result<BigInt, ScalarError> {
        let start = self.pos;
        while self.peek().map_or(false, |b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ScalarError::Parse {
                pos: self.pos,
                expected: "digits",
            });
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .unwrap())
    }

    fn rational(&mut self) -> Result<BigRational, ScalarError> {
        let numer = self.integer()?;
        if self.eat(b'/') {
            let denom = self.integer()?;
            if denom.is_zero() {
                return Err(ScalarError::Parse {
                    pos: self.pos,
                    expected: "nonzero denominator",
                });
            }
            Ok(BigRational::new(numer, denom))
        } else {
            Ok(BigRational::from(numer))
        }
    }

    fn sqrt_index(&mut self, expect_d: Option<u64>) -> Result<u64, ScalarError> {
        // caller consumed "sqrt"
        self.expect(b'(', "'(' after sqrt")?;
        let d = self.integer()?;
        self.expect(b')', "')' closing sqrt")?;
        let d: u64 = d.try_into().map_err(|_| ScalarError::Parse {
            pos: self.pos,
            expected: "small surd index",
        })?;
        if !is_square_free(d) {
            return Err(ScalarError::BadSurdIndex(d));
        }
        if let Some(e) = expect_d {
            if d != e {
                return Err(ScalarError::WrongField {
                    found: d,
                    expected: e,
                });
            }
        }
        Ok(d)
    }

    fn at_sqrt(&self) -> bool {
        self.s[self.pos..].starts_with(b"sqrt")
    }

    /// One signed term: rational, rational*sqrt(d) or bare sqrt(d).
    fn term(&mut self, negate: bool, expect_d: Option<u64>) -> Result<Scalar, ScalarError> {
        let value = if self.at_sqrt() {
            self.pos += 4;
            let d = self.sqrt_index(expect_d)?;
            Scalar::with_parts(BigRational::zero(), BigRational::one(), Some(d))
        } else {
            let coeff = self.rational()?;
            if self.eat(b'*') {
                if !self.at_sqrt() {
                    return Err(ScalarError::Parse {
                        pos: self.pos,
                        expected: "sqrt(...) after '*'",
                    });
                }
                self.pos += 4;
                let d = self.sqrt_index(expect_d)?;
                Scalar::with_parts(BigRational::zero(), coeff, Some(d))
            } else {
                Scalar::from_big_rational(coeff)
            }
        };
        Ok(if negate { -value } else { value })
    }

    fn scalar(&mut self, expect_d: Option<u64>) -> Result<Scalar, ScalarError> {
        let mut negate = self.eat(b'-');
        if !negate {
            self.eat(b'+');
        }
        let mut acc = self.term(negate, expect_d)?;
        loop {
            negate = match self.peek() {
                Some(b'+') => false,
                Some(b'-') => true,
                _ => break,
            };
            self.pos += 1;
            acc = acc + self.term(negate, expect_d)?;
        }
        Ok(acc)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let d = self.unified_d(rhs);
        Scalar::with_parts(&self.a + &rhs.a, &self.b + &rhs.b, d)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return -rhs;
        }
        let d = self.unified_d(rhs);
        Scalar::with_parts(&self.a - &rhs.a, &self.b - &rhs.b, d)
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        let d = self.unified_d(rhs);
        let mut a = &self.a * &rhs.a;
        if let Some(d) = d {
            if !self.b.is_zero() && !rhs.b.is_zero() {
                a += &self.b * &rhs.b * BigRational::from(BigInt::from(d));
            }
        }
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        Scalar::with_parts(a, b, d)
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self * &rhs.inv()
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::with_parts(-self.a, -self.b, self.d)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::with_parts(-self.a.clone(), -self.b.clone(), self.d)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::from_int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        Scalar::parse(text, None).unwrap()
    }

    #[test]
    fn square_free_detection() {
        assert!(is_square_free(2));
        assert!(is_square_free(3));
        assert!(is_square_free(5));
        assert!(is_square_free(6));
        assert!(!is_square_free(1));
        assert!(!is_square_free(4));
        assert!(!is_square_free(12));
        assert!(!is_square_free(18));
    }

    #[test]
    fn arithmetic_in_q_sqrt2() {
        let x = s("1/2+1/2*sqrt(2)");
        let y = s("1/2-1/2*sqrt(2)");
        // (1/2 + r/2)(1/2 - r/2) = 1/4 - 2/4 = -1/4
        assert_eq!(&x * &y, s("-1/4"));
        assert_eq!(&x + &y, Scalar::one());
        // sqrt(2)^2 = 2
        let r = s("sqrt(2)");
        assert_eq!(&r * &r, Scalar::from_int(2));
    }

    #[test]
    fn exact_roundtrip_add_sub() {
        let x = s("7/3-2/5*sqrt(2)");
        let y = s("-4+9/7*sqrt(2)");
        assert_eq!(&(&x + &y) - &y, x);
    }

    #[test]
    fn inverse_is_exact() {
        let x = s("3/2+1/3*sqrt(2)");
        assert_eq!(&x * &x.inv(), Scalar::one());
        let r = s("2*sqrt(2)");
        assert_eq!(&r * &r.inv(), Scalar::one());
    }

    #[test]
    fn parse_shorthands() {
        assert_eq!(s("0"), Scalar::zero());
        assert_eq!(s("1"), Scalar::one());
        assert_eq!(s("-3"), Scalar::from_int(-3));
        assert_eq!(s("sqrt(2)"), Scalar::surd(1, 1, 2));
        assert_eq!(s("-sqrt(5)"), Scalar::surd(-1, 1, 5));
        assert_eq!(s("1/2*sqrt(2)"), Scalar::surd(1, 2, 2));
        assert_eq!(s("2+sqrt(2)"), Scalar::from_int(2) + Scalar::surd(1, 1, 2));
    }

    #[test]
    fn canonical_text_roundtrip() {
        for t in [
            "0",
            "1",
            "-5/7",
            "1*sqrt(2)",
            "-1/2*sqrt(2)",
            "3/2+1/2*sqrt(2)",
            "1-2*sqrt(2)",
        ] {
            let v = s(t);
            assert_eq!(v.to_text(), t, "canonical form should round-trip");
            assert_eq!(Scalar::parse(&v.to_text(), None).unwrap(), v);
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Scalar::parse("", None).is_err());
        assert!(Scalar::parse("1/0", None).is_err());
        assert!(Scalar::parse("sqrt(4)", None).is_err());
        assert!(Scalar::parse("2*3", None).is_err());
        assert!(Scalar::parse("1+", None).is_err());
        assert!(matches!(
            Scalar::parse("sqrt(3)", Some(2)),
            Err(ScalarError::WrongField {
                found: 3,
                expected: 2
            })
        ));
    }

    #[test]
    #[should_panic(expected = "mixing")]
    fn mixing_fields_panics() {
        let _ = s("sqrt(2)") + s("sqrt(3)");
    }
}
