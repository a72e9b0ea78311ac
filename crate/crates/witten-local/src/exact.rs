//! Exact scalars `Σ q·π^a·i^b` with rational `q`.
//!
//! Powers of `i` are kept in `{0, 1}`; `i² = −1` is folded into the sign of
//! the rational coefficient, so two values are equal iff their term maps are.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Finite formal sum of `q·π^a·i^b`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ExactScalar {
    terms: BTreeMap<(i32, u8), BigRational>,
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Binomial coefficient, zero when `k > n` or either argument is negative.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn sign_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `2^e` for any integer `e`.
pub fn two_pow(e: i64) -> BigRational {
    let p = BigInt::one() << (e.unsigned_abs() as usize);
    if e >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

impl ExactScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    pub fn int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn rational(q: BigRational) -> Self {
        Self::term(q, 0, 0)
    }

    /// `q·π^pi_power·i^i_power`; any integer `i_power` is accepted.
    pub fn term(q: BigRational, pi_power: i32, i_power: i64) -> Self {
        let mut out = Self::zero();
        out.push(q, pi_power, i_power);
        out
    }

    pub fn pi() -> Self {
        Self::term(BigRational::one(), 1, 0)
    }

    pub fn i() -> Self {
        Self::term(BigRational::one(), 0, 1)
    }

    /// `i^e` for any integer `e`.
    pub fn i_pow(e: i64) -> Self {
        Self::term(BigRational::one(), 0, e)
    }

    fn push(&mut self, q: BigRational, pi_power: i32, i_power: i64) {
        if q.is_zero() {
            return;
        }
        let e = i_power.rem_euclid(4);
        let (b, q) = match e {
            0 => (0u8, q),
            1 => (1u8, q),
            2 => (0u8, -q),
            _ => (1u8, -q),
        };
        let key = (pi_power, b);
        let entry = self.terms.entry(key).or_insert_with(BigRational::zero);
        *entry += q;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates `(pi_power, i_power, q)` in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, u8, &BigRational)> {
        self.terms.iter().map(|(&(a, b), q)| (a, b, q))
    }

    /// The rational value, if there are no π or i factors.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            out.push(c * q, a, b as i64);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_complex(&self) -> Complex64 {
        let mut z = Complex64::new(0.0, 0.0);
        for (&(a, b), q) in &self.terms {
            let v = q.to_f64().unwrap_or(f64::NAN) * std::f64::consts::PI.powi(a);
            if b == 0 {
                z.re += v;
            } else {
                z.im += v;
            }
        }
        z
    }
}

impl From<BigRational> for ExactScalar {
    fn from(q: BigRational) -> Self {
        Self::rational(q)
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        Self::int(n)
    }
}

impl<'a> Add<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for ExactScalar {
    type Output = ExactScalar;
    fn add(mut self, rhs: ExactScalar) -> ExactScalar {
        self += &rhs;
        self
    }
}

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, rhs: &ExactScalar) {
        for (&(a, b), q) in &rhs.terms {
            self.push(q.clone(), a, b as i64);
        }
    }
}

impl AddAssign for ExactScalar {
    fn add_assign(&mut self, rhs: ExactScalar) {
        *self += &rhs;
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        let mut out = ExactScalar::zero();
        for (&(a, b), q) in &self.terms {
            out.push(-q.clone(), a, b as i64);
        }
        out
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

impl<'a> Sub<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        self + &(-rhs)
    }
}

impl Sub for ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: ExactScalar) -> ExactScalar {
        &self - &rhs
    }
}

impl<'a> Mul<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        let mut out = ExactScalar::zero();
        for (&(a1, b1), q1) in &self.terms {
            for (&(a2, b2), q2) in &rhs.terms {
                out.push(q1 * q2, a1 + a2, b1 as i64 + b2 as i64);
            }
        }
        out
    }
}

impl Mul for ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: ExactScalar) -> ExactScalar {
        &self * &rhs
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (&(a, b), q)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " {} ", if q.is_negative() { "-" } else { "+" })?;
                write!(f, "{}", q.abs())?;
            } else {
                write!(f, "{}", q)?;
            }
            match a {
                0 => {}
                1 => write!(f, "·π")?,
                _ => write!(f, "·π^{}", a)?,
            }
            if b == 1 {
                write!(f, "·i")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactScalar({})", self)
    }
}
