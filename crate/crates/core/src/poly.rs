//! Polynomials in `x, y, z` over the rationals, and a small text parser.
//!
//! Grammar accepted by [`Polynomial::parse`] (whitespace is ignored):
//!
//! ```text
//! poly   := [sign] term (sign term)*
//! sign   := '+' | '-'
//! term   := coeff ['*'] factors | coeff | factors
//! coeff  := digits ['/' digits]
//! factors:= factor (['*'] factor)*
//! factor := ('x' | 'y' | 'z') ['^' (digits | '{' digits '}')]
//! ```
//!
//! Variables may be juxtaposed, so `x^3y` and `x^3*y` are the same.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::rational::{self, Rational};
use crate::error::{Error, Result};

pub const VARIABLES: [char; 3] = ['x', 'y', 'z'];

/// Exponent vector `(n_x, n_y, n_z)`. The derived order is lexicographic
/// with `x > y > z`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn new(nx: u32, ny: u32, nz: u32) -> Self {
        Monomial([nx, ny, nz])
    }

    pub fn exponents(&self) -> [u32; 3] {
        self.0
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..3).all(|i| self.0[i] <= other.0[i])
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(std::array::from_fn(|i| self.0[i].max(other.0[i])))
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..3).all(|i| self.0[i] == 0 || other.0[i] == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(std::array::from_fn(|i| self.0[i] + other.0[i]))
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(std::array::from_fn(|i| self.0[i] - other.0[i]))
    }

    pub fn weighted_degree(&self, weights: &[u64; 3]) -> u64 {
        (0..3).map(|i| weights[i] * self.0[i] as u64).sum()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..3)
            .filter(|&i| self.0[i] > 0)
            .map(|i| match self.0[i] {
                1 => VARIABLES[i].to_string(),
                e => format!("{}^{e}", VARIABLES[i]),
            })
            .collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// Sparse polynomial with nonzero rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(Rational::one(), m)
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Self::monomial(Monomial(e))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lexicographic order of monomials.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> Vec<Monomial> {
        self.terms.keys().copied().collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut d = m.0;
            d[i] -= 1;
            out.add_term(Monomial(d), c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// True when no term involves `z`.
    pub fn is_bivariate(&self) -> bool {
        self.terms.keys().all(|m| m.0[2] == 0)
    }

    pub fn parse(text: &str) -> Result<Self> {
        Parser::new(text).poly()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for Polynomial {
    /// Terms from the lexicographically largest monomial down.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if *m == Monomial::ONE {
                f.write_str(&rational::to_string(&a))?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", rational::to_string(&a))?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for Polynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -Rational::one()
            }
            Some(b'+') => {
                self.pos += 1;
                Rational::one()
            }
            Some(_) => Rational::one(),
            None => return Err(self.err("empty polynomial")),
        };
        loop {
            let (m, c) = self.term()?;
            out.add_term(m, c * &sign);
            match self.peek() {
                None => return Ok(out),
                Some(b'+') => sign = Rational::one(),
                Some(b'-') => sign = -Rational::one(),
                Some(ch) => return Err(self.err(format!("unexpected {:?}", ch as char))),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(Monomial, Rational)> {
        let mut coeff = Rational::one();
        let mut have_coeff = false;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let n = self.digits()?;
            let d = if self.peek() == Some(b'/') {
                self.pos += 1;
                let d = self.digits()?;
                if d.is_zero() {
                    return Err(self.err("zero denominator"));
                }
                d
            } else {
                BigInt::one()
            };
            coeff = Rational::new(n, d);
            have_coeff = true;
            if self.peek() == Some(b'*') {
                self.pos += 1;
            }
        }
        let mut exps = [0u32; 3];
        let mut have_factor = false;
        while let Some(ch) = self.peek() {
            let Some(i) = VARIABLES.iter().position(|&v| v as u8 == ch) else {
                break;
            };
            self.pos += 1;
            let mut e = 1u32;
            if self.peek() == Some(b'^') {
                self.pos += 1;
                let braced = self.peek() == Some(b'{');
                if braced {
                    self.pos += 1;
                }
                e = u32::try_from(self.digits()?).map_err(|_| self.err("exponent too large"))?;
                if braced {
                    if self.peek() != Some(b'}') {
                        return Err(self.err("expected '}'"));
                    }
                    self.pos += 1;
                }
            }
            exps[i] += e;
            have_factor = true;
            if self.peek() == Some(b'*') {
                self.pos += 1;
                if !self.peek().is_some_and(|c| VARIABLES.contains(&(c as char))) {
                    return Err(self.err("expected a variable after '*'"));
                }
            }
        }
        if !have_coeff && !have_factor {
            return Err(self.err("expected a term"));
        }
        Ok((Monomial(exps), coeff))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};

    #[test]
    fn parse_table_polynomials() {
        let e8 = Polynomial::parse("x^5 + y^3 + z^2").unwrap();
        assert_eq!(e8.len(), 3);
        assert_eq!(e8.coeff(&Monomial::new(5, 0, 0)), int(1));
        let e7 = Polynomial::parse("x^3y + y^3 + z^2").unwrap();
        assert_eq!(e7.coeff(&Monomial::new(3, 1, 0)), int(1));
        assert_eq!(e7, Polynomial::parse("x^3*y+y^3+z^2").unwrap());
        let d = Polynomial::parse("x^{4} + x*y^2 + z^2").unwrap();
        assert_eq!(d.coeff(&Monomial::new(1, 2, 0)), int(1));
    }

    #[test]
    fn parse_coefficients_and_signs() {
        let p = Polynomial::parse("-3/2 x^2 + 5 - y + 2*x*y*z").unwrap();
        assert_eq!(p.coeff(&Monomial::new(2, 0, 0)), rat(-3, 2));
        assert_eq!(p.coeff(&Monomial::ONE), int(5));
        assert_eq!(p.coeff(&Monomial::new(0, 1, 0)), int(-1));
        assert_eq!(p.coeff(&Monomial::new(1, 1, 1)), int(2));
        // like terms combine, cancelling terms vanish
        assert!(Polynomial::parse("x - x").unwrap().is_zero());
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "x +", "x^", "2/0 x", "w^2", "x ** y", "x^{2"] {
            assert!(Polynomial::parse(bad).is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn display_round_trips() {
        for s in ["x^5 + y^3 + z^2", "x^3*y + y^3 + z^2", "-1/2*x*y - 7", "0"] {
            let p = Polynomial::parse(s).unwrap_or_else(|_| Polynomial::zero());
            assert_eq!(Polynomial::parse(&p.to_string()).unwrap_or_default(), p);
        }
        assert_eq!(Polynomial::parse("z^2 + y^3 + x^5").unwrap().to_string(), "x^5 + y^3 + z^2");
    }

    #[test]
    fn derivatives() {
        let f = Polynomial::parse("x^5 + y^3 + z^2").unwrap();
        assert_eq!(f.derivative(0), Polynomial::parse("5x^4").unwrap());
        assert_eq!(f.derivative(1), Polynomial::parse("3y^2").unwrap());
        assert_eq!(f.derivative(2), Polynomial::parse("2z").unwrap());
        assert!(Polynomial::constant(int(7)).derivative(0).is_zero());
    }

    #[test]
    fn arithmetic() {
        let a = Polynomial::parse("x + y").unwrap();
        let b = Polynomial::parse("x - y").unwrap();
        assert_eq!(&a * &b, Polynomial::parse("x^2 - y^2").unwrap());
        assert_eq!(&(&a + &b) - &a, b);
    }
}
