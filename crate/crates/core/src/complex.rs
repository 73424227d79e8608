//! Exact complex rationals `re + im i` with arbitrary-precision parts.
//!
//! Both parts are `BigRational`, which keeps fractions in lowest terms with
//! positive denominators, so derived equality and hashing are canonical.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::domain::ExactDomain;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ComplexRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl ComplexRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        ComplexRational { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        ComplexRational {
            re: BigRational::from_integer(BigInt::from(re)),
            im: BigRational::from_integer(BigInt::from(im)),
        }
    }

    pub fn zero() -> Self {
        ComplexRational::default()
    }

    pub fn i() -> Self {
        ComplexRational::from_ints(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        ComplexRational::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &Self) -> Self {
        ComplexRational::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn mul(&self, o: &Self) -> Self {
        ComplexRational::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    pub fn neg(&self) -> Self {
        ComplexRational::new(-&self.re, -&self.im)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Ok(ComplexRational::new(&self.re / &norm, -&self.im / &norm))
    }
}

impl fmt::Display for ComplexRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |f: &mut fmt::Formatter<'_>, v: &BigRational| {
            if v.is_one() {
                write!(f, "i")
            } else if (-v).is_one() {
                write!(f, "-i")
            } else {
                write!(f, "{v}i")
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => imag(f, &self.im),
            (false, false) => {
                write!(f, "{}", self.re)?;
                if self.im.is_positive() {
                    write!(f, "+")?;
                }
                imag(f, &self.im)
            }
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational '{s}'"));
    let s = s.trim();
    let s = s.strip_prefix('+').unwrap_or(s);
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in '{s}'")));
            }
            Ok(BigRational::new(n, d))
        }
        None => s.parse::<BigInt>().map(BigRational::from_integer).map_err(|_| bad()),
    }
}

impl FromStr for ComplexRational {
    type Err = Error;

    /// Accepts `a/b+c/di` and its abbreviations: `3`, `-1/2`, `i`, `-2i`, `1-i`.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty complex rational".into()));
        }
        let Some(body) = s.strip_suffix('i') else {
            return Ok(ComplexRational::new(parse_rational(&s)?, BigRational::zero()));
        };
        // the imaginary part starts at the last sign that is not leading
        let split = body
            .char_indices()
            .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i)
            .last()
            .unwrap_or(0);
        let (re, im) = body.split_at(split);
        let re = if re.is_empty() { BigRational::zero() } else { parse_rational(re)? };
        let im = match im {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other)?,
        };
        Ok(ComplexRational::new(re, im))
    }
}

/// The complex numbers, restricted to exact rational parts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ComplexRationals;

impl ExactDomain for ComplexRationals {
    type Elem = ComplexRational;

    fn zero(&self) -> ComplexRational {
        ComplexRational::zero()
    }
    fn one(&self) -> ComplexRational {
        ComplexRational::from_ints(1, 0)
    }
    fn add(&self, a: &ComplexRational, b: &ComplexRational) -> ComplexRational {
        a.add(b)
    }
    fn sub(&self, a: &ComplexRational, b: &ComplexRational) -> ComplexRational {
        a.sub(b)
    }
    fn mul(&self, a: &ComplexRational, b: &ComplexRational) -> ComplexRational {
        a.mul(b)
    }
    fn neg(&self, a: &ComplexRational) -> ComplexRational {
        a.neg()
    }
    fn inv(&self, a: &ComplexRational) -> Result<ComplexRational> {
        a.inv()
    }
    fn is_zero(&self, a: &ComplexRational) -> bool {
        a.is_zero()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn from_int(&self, v: i64) -> ComplexRational {
        ComplexRational::from_ints(v, 0)
    }
    fn format(&self, a: &ComplexRational) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<ComplexRational> {
        s.parse()
    }
    fn label(&self) -> String {
        "C".to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(s: &str) -> ComplexRational {
        s.parse().unwrap()
    }

    #[test]
    fn parse_forms() {
        assert_eq!(c("3"), ComplexRational::from_ints(3, 0));
        assert_eq!(c("i"), ComplexRational::i());
        assert_eq!(c("-i"), ComplexRational::from_ints(0, -1));
        assert_eq!(c("1-i"), ComplexRational::from_ints(1, -1));
        assert_eq!(c("-2+3i"), ComplexRational::from_ints(-2, 3));
        let half = BigRational::new(1.into(), 2.into());
        let three_quarters = BigRational::new(3.into(), 4.into());
        assert_eq!(c("1/2+3/4i"), ComplexRational::new(half.clone(), three_quarters.clone()));
        assert_eq!(c("2/4-6/8i"), ComplexRational::new(half, -three_quarters));
        assert!("".parse::<ComplexRational>().is_err());
        assert!("1/0".parse::<ComplexRational>().is_err());
        assert!("x".parse::<ComplexRational>().is_err());
    }

    #[test]
    fn canonical_form_is_reduced() {
        assert_eq!(c("2/4"), c("1/2"));
        assert_eq!(c("3/-6"), c("-1/2"));
        assert_eq!(c("2/4").to_string(), "1/2");
    }

    #[test]
    fn field_ops() {
        let z = c("1+2i");
        assert_eq!(z.mul(&z.inv().unwrap()), c("1"));
        assert_eq!(c("i").mul(&c("i")), c("-1"));
        assert_eq!(c("0").inv(), Err(Error::DivisionByZero));
    }

    fn arb_rational() -> impl Strategy<Value = BigRational> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(re in arb_rational(), im in arb_rational()) {
            let z = ComplexRational::new(re, im);
            prop_assert_eq!(z.to_string().parse::<ComplexRational>().unwrap(), z);
        }
    }
}
