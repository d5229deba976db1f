use std::cmp::Ordering;
use std::collections::HashMap;
use std::f64::consts::TAU;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{self, Rational};
use crate::error::{Error, Result};

static PHI_CACHE: OnceLock<RwLock<HashMap<u32, Arc<[i64]>>>> = OnceLock::new();

pub fn euler_totient(n: u32) -> u32 {
    assert!(n > 0, "totient of zero");
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Coefficients (low degree first) of the `n`-th cyclotomic polynomial.
///
/// Results are memoized process-wide.
pub fn cyclotomic_polynomial(n: u32) -> Arc<[i64]> {
    assert!(n > 0, "cyclotomic polynomial of order zero");
    let cache = PHI_CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(p) = cache.read().expect("phi cache poisoned").get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by every Phi_d with d | n, d < n.
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            poly = div_exact_monic(&poly, &cyclotomic_polynomial(d));
        }
    }
    let poly: Arc<[i64]> = poly.into();
    cache
        .write()
        .expect("phi cache poisoned")
        .insert(n, poly.clone());
    poly
}

fn div_exact_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// An exact element of the cyclotomic field Q(zeta_N).
///
/// Stored as the coefficient vector of a polynomial in `zeta_N` of degree
/// below `phi(N)`, reduced modulo the `N`-th cyclotomic polynomial. The
/// representation is canonical, so derived equality and hashing are exact
/// field equality for numbers of the same order. Numbers of different
/// orders compare unequal; use [`CyclotomicNumber::value_eq`] to compare
/// across orders.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicNumber {
    order: u32,
    coeffs: Vec<Rational>,
}

impl CyclotomicNumber {
    /// Reduces an arbitrary-length coefficient vector in powers of `zeta_N`.
    pub fn from_coeffs(order: u32, mut coeffs: Vec<Rational>) -> Self {
        assert!(order > 0, "cyclotomic order must be positive");
        let phi = cyclotomic_polynomial(order);
        let deg = phi.len() - 1;
        if coeffs.len() < deg {
            coeffs.resize(deg, Rational::zero());
        }
        for i in (deg..coeffs.len()).rev() {
            if coeffs[i].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut coeffs[i], Rational::zero());
            for (j, &pj) in phi[..deg].iter().enumerate() {
                if pj != 0 {
                    coeffs[i - deg + j] -= &c * Rational::from_integer(BigInt::from(pj));
                }
            }
        }
        coeffs.truncate(deg);
        CyclotomicNumber { order, coeffs }
    }

    pub fn zero(order: u32) -> Self {
        Self::from_rational(order, Rational::zero())
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, Rational::one())
    }

    pub fn from_rational(order: u32, q: Rational) -> Self {
        let deg = euler_totient(order) as usize;
        let mut coeffs = vec![Rational::zero(); deg];
        coeffs[0] = q;
        CyclotomicNumber { order, coeffs }
    }

    pub fn from_i64(order: u32, n: i64) -> Self {
        Self::from_rational(order, rational::int(n))
    }

    /// `zeta_N^k`; negative exponents are taken modulo `N`.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let n = order as i64;
        let k = k.rem_euclid(n) as usize;
        let mut coeffs = vec![Rational::zero(); (order as usize).max(k + 1)];
        coeffs[k] = Rational::one();
        Self::from_coeffs(order, coeffs)
    }

    pub fn zeta(order: u32) -> Self {
        Self::zeta_pow(order, 1)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients in the power basis `1, zeta, ..., zeta^(phi(N)-1)`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational, if it lies in Q.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// True when every coefficient is an integer (an algebraic integer in
    /// the power basis).
    pub fn has_integral_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    /// Re-expresses this number in Q(zeta_M) via `zeta_N = zeta_M^(M/N)`.
    pub fn embed_order(&self, target: u32) -> Result<Self> {
        if target == 0 || !target.is_multiple_of(self.order) {
            return Err(Error::usage(format!(
                "cannot embed Q(zeta_{}) into Q(zeta_{target})",
                self.order
            )));
        }
        if target == self.order {
            return Ok(self.clone());
        }
        let step = (target / self.order) as usize;
        let mut coeffs = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * step] = c.clone();
        }
        Ok(Self::from_coeffs(target, coeffs))
    }

    fn promote_pair(a: &Self, b: &Self) -> (Self, Self) {
        let m = a.order.lcm(&b.order);
        (
            a.embed_order(m).expect("lcm is a multiple"),
            b.embed_order(m).expect("lcm is a multiple"),
        )
    }

    /// Field equality, promoting both sides to a common order.
    pub fn value_eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self == other;
        }
        let (a, b) = Self::promote_pair(self, other);
        a == b
    }

    /// Product of two numbers of the same order.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.order != other.order {
            return Err(Error::usage(format!(
                "order mismatch: {} vs {}",
                self.order, other.order
            )));
        }
        Ok(self.mul_same(other))
    }

    fn small_integer_coeffs(&self) -> Option<Vec<i128>> {
        self.coeffs
            .iter()
            .map(|c| if c.is_integer() { c.numer().to_i64().map(i128::from) } else { None })
            .collect()
    }

    /// Reduces an unreduced integer coefficient vector mod `Phi_order`;
    /// `None` on overflow.
    fn reduce_small(order: u32, mut out: Vec<i128>) -> Option<Self> {
        let phi = cyclotomic_polynomial(order);
        let deg = phi.len() - 1;
        if out.len() < deg {
            out.resize(deg, 0);
        }
        for i in (deg..out.len()).rev() {
            let c = std::mem::take(&mut out[i]);
            if c == 0 {
                continue;
            }
            for (j, &pj) in phi[..deg].iter().enumerate() {
                if pj != 0 {
                    out[i - deg + j] = out[i - deg + j].checked_sub(c.checked_mul(i128::from(pj))?)?;
                }
            }
        }
        out.truncate(deg);
        Some(CyclotomicNumber {
            order,
            coeffs: out.into_iter().map(|c| Rational::from_integer(BigInt::from(c))).collect(),
        })
    }

    /// Adds `w * a * b` into an unreduced accumulator; `None` on overflow.
    fn accumulate_small(acc: &mut [i128], w: i128, a: &[i128], b: &[i128]) -> Option<()> {
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let wx = w.checked_mul(x)?;
            for (j, &y) in b.iter().enumerate() {
                if y != 0 {
                    acc[i + j] = acc[i + j].checked_add(wx.checked_mul(y)?)?;
                }
            }
        }
        Some(())
    }

    fn mul_small(order: u32, a: &[i128], b: &[i128]) -> Option<Self> {
        let mut out = vec![0i128; a.len() + b.len() - 1];
        Self::accumulate_small(&mut out, 1, a, b)?;
        Self::reduce_small(order, out)
    }

    fn weighted_dot_small(order: u32, weights: &[i64], a: &[Self], b: &[Self]) -> Option<Self> {
        let n = euler_totient(order) as usize;
        let mut acc = vec![0i128; 2 * n - 1];
        for ((w, x), y) in weights.iter().zip(a).zip(b) {
            if *w == 0 {
                continue;
            }
            if x.order != order || y.order != order {
                return None;
            }
            let (xs, ys) = (x.small_integer_coeffs()?, y.small_integer_coeffs()?);
            Self::accumulate_small(&mut acc, i128::from(*w), &xs, &ys)?;
        }
        Self::reduce_small(order, acc)
    }

    /// `sum_i w_i a_i b_i`, in the field of the largest order involved.
    pub fn weighted_dot(weights: &[i64], a: &[Self], b: &[Self]) -> Self {
        let order = a.iter().chain(b).map(|x| x.order).fold(1, |m, o| m.lcm(&o));
        if let Some(v) = Self::weighted_dot_small(order, weights, a, b) {
            return v;
        }
        let mut acc = Self::zero(order);
        for ((w, x), y) in weights.iter().zip(a).zip(b) {
            if *w != 0 {
                acc = &acc + &(x * y).scale(&rational::int(*w));
            }
        }
        acc
    }

    fn mul_same(&self, other: &Self) -> Self {
        if let (Some(a), Some(b)) = (self.small_integer_coeffs(), other.small_integer_coeffs()) {
            if let Some(p) = Self::mul_small(self.order, &a, &b) {
                return p;
            }
        }
        let (a, da) = self.integer_form();
        let (b, db) = other.integer_form();
        let den = da * db;
        let small = |v: &[BigInt]| -> Option<Vec<i128>> {
            v.iter().map(|c| c.to_i64().map(i128::from)).collect()
        };
        if let (Some(xs), Some(ys)) = (small(&a), small(&b)) {
            let mut out = vec![0i128; xs.len() + ys.len() - 1];
            if Self::accumulate_small(&mut out, 1, &xs, &ys).is_some() {
                if let Some(p) = Self::reduce_small(self.order, out) {
                    return p.scale(&Rational::new(BigInt::one(), den));
                }
            }
        }
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        let phi = cyclotomic_polynomial(self.order);
        let deg = phi.len() - 1;
        out.resize(out.len().max(deg), BigInt::zero());
        for i in (deg..out.len()).rev() {
            let c = std::mem::take(&mut out[i]);
            if c.is_zero() {
                continue;
            }
            for (j, &pj) in phi[..deg].iter().enumerate() {
                if pj != 0 {
                    out[i - deg + j] -= &c * pj;
                }
            }
        }
        out.truncate(deg);
        CyclotomicNumber {
            order: self.order,
            coeffs: out.into_iter().map(|c| Rational::new(c, den.clone())).collect(),
        }
    }

    /// Integer numerators over the least common denominator.
    fn integer_form(&self) -> (Vec<BigInt>, BigInt) {
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (nums, den)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        CyclotomicNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Multiplicative inverse, solving `a x = 1` as an integer linear system
    /// by fraction-free elimination.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let phi = cyclotomic_polynomial(self.order);
        let n = phi.len() - 1;
        let (num, den) = self.integer_form();
        // Row i of `m` holds the coefficients of num * zeta^i; we solve x^T m = e_0.
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        let mut cur = num;
        cur.resize(n, BigInt::zero());
        for _ in 0..n {
            let top = std::mem::take(&mut cur[n - 1]);
            let mut next = vec![BigInt::zero(); n];
            next[1..].clone_from_slice(&cur[..n - 1]);
            if !top.is_zero() {
                for (j, &pj) in phi[..n].iter().enumerate() {
                    if pj != 0 {
                        next[j] -= &top * pj;
                    }
                }
            }
            cur[n - 1] = top;
            rows.push(std::mem::replace(&mut cur, next));
        }
        // Transpose into an augmented system m^T x = e_0.
        let mut aug: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                let mut r: Vec<BigInt> = rows.iter().map(|row| row[i].clone()).collect();
                r.push(if i == 0 { BigInt::one() } else { BigInt::zero() });
                r
            })
            .collect();
        let mut prev = BigInt::one();
        for k in 0..n {
            let p = (k..n).find(|&r| !aug[r][k].is_zero()).ok_or_else(|| {
                Error::internal("cyclotomic_inverse", "singular multiplication matrix")
            })?;
            aug.swap(k, p);
            for i in k + 1..n {
                for j in k + 1..=n {
                    let v = (&aug[k][k] * &aug[i][j] - &aug[i][k] * &aug[k][j]) / &prev;
                    aug[i][j] = v;
                }
                aug[i][k] = BigInt::zero();
            }
            prev = aug[k][k].clone();
        }
        let mut x = vec![Rational::zero(); n];
        for i in (0..n).rev() {
            let mut acc = Rational::from_integer(aug[i][n].clone());
            for j in i + 1..n {
                if !aug[i][j].is_zero() {
                    acc -= &x[j] * Rational::from_integer(aug[i][j].clone());
                }
            }
            x[i] = acc / Rational::from_integer(aug[i][i].clone());
        }
        let d = Rational::from_integer(den);
        Ok(Self::from_coeffs(self.order, x.into_iter().map(|c| c * &d).collect()))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one(self.order);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_same(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul_same(&sq);
            }
        }
        Ok(acc)
    }

    /// Applies the automorphism `zeta_N -> zeta_N^k`; `k` must be coprime to `N`.
    pub fn galois(&self, k: u32) -> Result<Self> {
        let n = self.order;
        if (k % n).gcd(&n) != 1 && n > 1 {
            return Err(Error::usage(format!("{k} is not a unit modulo {n}")));
        }
        let mut coeffs = vec![Rational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let pos = (i as u64 * k as u64 % n as u64) as usize;
            coeffs[pos] += c;
        }
        Ok(Self::from_coeffs(n, coeffs))
    }

    /// Complex conjugation, `zeta_N -> zeta_N^-1`.
    pub fn conj(&self) -> Self {
        let k = if self.order == 1 { 1 } else { self.order - 1 };
        self.galois(k).expect("N-1 is a unit")
    }

    /// Numerical value under `zeta_N -> exp(2 pi i / N)`. For diagnostics only.
    pub fn embed_complex(&self) -> (f64, f64) {
        let n = self.order as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = c.to_f64().unwrap_or(f64::NAN);
            let angle = TAU * i as f64 / n;
            re += v * angle.cos();
            im += v * angle.sin();
        }
        (re, im)
    }
}

impl PartialOrd for CyclotomicNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A total order used only for canonical sorting: by order, then
/// lexicographically on the coefficient vector.
impl Ord for CyclotomicNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl Add for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: Self) -> CyclotomicNumber {
        if self.order != rhs.order {
            let (a, b) = CyclotomicNumber::promote_pair(self, rhs);
            return &a + &b;
        }
        CyclotomicNumber {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: Self) -> CyclotomicNumber {
        if self.order != rhs.order {
            let (a, b) = CyclotomicNumber::promote_pair(self, rhs);
            return &a - &b;
        }
        CyclotomicNumber {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: Self) -> CyclotomicNumber {
        if self.order != rhs.order {
            let (a, b) = CyclotomicNumber::promote_pair(self, rhs);
            return a.mul_same(&b);
        }
        self.mul_same(rhs)
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, rhs: Self) -> CyclotomicNumber {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        -&self
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let zeta = match i {
                0 => String::new(),
                1 => format!("z{}", self.order),
                _ => format!("z{}^{}", self.order, i),
            };
            if i == 0 {
                write!(f, "{}", rational::to_string(&abs))?;
            } else if abs.is_one() {
                f.write_str(&zeta)?;
            } else {
                write!(f, "{}*{}", rational::to_string(&abs), zeta)?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};

    fn z(n: u32, k: i64) -> CyclotomicNumber {
        CyclotomicNumber::zeta_pow(n, k)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(&*cyclotomic_polynomial(1), &[-1, 1]);
        assert_eq!(&*cyclotomic_polynomial(3), &[1, 1, 1]);
        assert_eq!(&*cyclotomic_polynomial(4), &[1, 0, 1]);
        assert_eq!(&*cyclotomic_polynomial(6), &[1, -1, 1]);
        assert_eq!(&*cyclotomic_polynomial(12), &[1, 0, -1, 0, 1]);
        for n in 1..=60 {
            assert_eq!(cyclotomic_polynomial(n).len() - 1, euler_totient(n) as usize);
        }
    }

    #[test]
    fn mul_examples() {
        let minus_one = CyclotomicNumber::from_i64(4, -1);
        assert_eq!(z(4, 1).try_mul(&z(4, 1)).unwrap(), minus_one);
        assert!(z(5, 1).try_mul(&z(5, 4)).unwrap().is_one());
        // (1 + w)(1 + w^2) = 1 + w + w^2 + w^3 = 0 + 1 with w^2 + w + 1 = 0
        let one = CyclotomicNumber::one(3);
        let a = &one + &z(3, 1);
        let b = &one + &z(3, 2);
        assert!(a.try_mul(&b).unwrap().is_one());
    }

    #[test]
    fn mul_order_mismatch_is_usage_error() {
        assert!(matches!(z(4, 1).try_mul(&z(3, 1)), Err(Error::Usage(_))));
    }

    #[test]
    fn inverse_examples() {
        assert!(CyclotomicNumber::one(7).inverse().unwrap().is_one());
        for n in [3u32, 5, 8, 12] {
            assert_eq!(z(n, 1).inverse().unwrap(), z(n, n as i64 - 1));
        }
        let one = CyclotomicNumber::one(3);
        assert_eq!((&one + &z(3, 1)).inverse().unwrap(), &one + &z(3, 2));
        assert_eq!(
            CyclotomicNumber::zero(5).inverse(),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn embed_complex_examples() {
        let (re, im) = z(4, 1).embed_complex();
        assert!(re.abs() < 1e-12 && (im - 1.0).abs() < 1e-12);
        let golden = (&z(5, 1) + &z(5, 4)).embed_complex();
        assert!((golden.0 - 0.618_033_988_749_894_8).abs() < 1e-12);
        assert!(golden.1.abs() < 1e-12);
        let (re, im) = CyclotomicNumber::from_i64(9, -1).embed_complex();
        assert!((re + 1.0).abs() < 1e-12 && im.abs() < 1e-12);
    }

    #[test]
    fn roots_of_unity_relations() {
        for n in 1..=30u32 {
            assert!(z(n, 1).pow(n as i64).unwrap().is_one(), "zeta_{n}^{n}");
            // Phi_n(zeta_n) = 0
            let phi = cyclotomic_polynomial(n);
            let mut acc = CyclotomicNumber::zero(n);
            for (i, &c) in phi.iter().enumerate() {
                acc = &acc + &z(n, i as i64).scale(&int(c));
            }
            assert!(acc.is_zero(), "Phi_{n}(zeta_{n})");
        }
    }

    #[test]
    fn embedding_and_promotion() {
        let i4 = z(4, 1);
        let i8 = i4.embed_order(8).unwrap();
        assert_eq!(i8, z(8, 2));
        assert!(i4.value_eq(&z(8, 2)));
        assert!(i4.value_eq(&z(12, 3)));
        assert!(i4.embed_order(6).is_err());
        // mixed-order sum lands in the lcm
        let s = &z(3, 1) + &z(4, 1);
        assert_eq!(s.order(), 12);
        assert_eq!(s, &z(12, 4) + &z(12, 3));
    }

    #[test]
    fn conjugation_and_galois() {
        let a = &z(5, 1).scale(&rat(3, 2)) + &CyclotomicNumber::from_i64(5, 2);
        assert_eq!(a.conj().conj(), a);
        assert_eq!(z(5, 2).conj(), z(5, 3));
        assert_eq!(z(8, 1).galois(3).unwrap(), z(8, 3));
        assert!(z(8, 1).galois(2).is_err());
        // a * conj(a) is real
        let n = &a * &a.conj();
        assert_eq!(n, n.conj());
    }

    #[test]
    fn display() {
        assert_eq!(CyclotomicNumber::from_i64(4, -1).to_string(), "-1");
        assert_eq!(z(5, 4).to_string(), "-1 - z5 - z5^2 - z5^3");
        assert_eq!(CyclotomicNumber::zero(3).to_string(), "0");
        assert_eq!(z(8, 1).scale(&rat(1, 2)).to_string(), "1/2*z8");
    }
}
