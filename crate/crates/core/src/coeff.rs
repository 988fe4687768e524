//! Exact Laurent polynomials in a single formal variable `q`.
//!
//! [`LaurentPoly`] has arbitrary-precision integer coefficients and is the
//! coefficient ring of every symmetric function in the crate.
//! [`RatLaurentPoly`] carries rational coefficients and only shows up where
//! power-sum denominators `z_λ` appear.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact scalars usable as Laurent coefficients.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + Signed + Send + Sync + 'static {
    /// `self / d` when the quotient stays in the ring.
    fn div_exact(&self, d: &Self) -> Option<Self>;
    fn from_bigint(v: &BigInt) -> Self;
    /// Integer value, if the scalar is integral.
    fn to_bigint(&self) -> Option<BigInt>;
}

impl Scalar for BigInt {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (quo, rem) = self.div_rem(d);
        rem.is_zero().then_some(quo)
    }

    fn from_bigint(v: &BigInt) -> Self {
        v.clone()
    }

    fn to_bigint(&self) -> Option<BigInt> {
        Some(self.clone())
    }
}

impl Scalar for BigRational {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        (!d.is_zero()).then(|| self / d)
    }

    fn from_bigint(v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }

    fn to_bigint(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.to_integer())
    }
}

/// `∑ coeffs[i] q^(min_deg + i)`, canonically trimmed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent<S> {
    min_deg: i64,
    coeffs: Vec<S>,
}

pub type LaurentPoly = Laurent<BigInt>;
pub type RatLaurentPoly = Laurent<BigRational>;

/// Substitutions of the formal variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarShift {
    /// `q → q + 1`
    Up,
    /// `q → q - 1`
    Down,
    /// `q → 1/q`
    Invert,
}

impl<S: Scalar> Laurent<S> {
    pub fn zero() -> Self {
        Laurent { min_deg: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::from_coeffs(0, vec![c])
    }

    /// `c q^d`
    pub fn monomial(c: S, d: i64) -> Self {
        Self::from_coeffs(d, vec![c])
    }

    /// `q^d`
    pub fn q_pow(d: i64) -> Self {
        Self::monomial(S::one(), d)
    }

    pub fn from_coeffs(min_deg: i64, coeffs: Vec<S>) -> Self {
        let mut p = Laurent { min_deg, coeffs };
        p.trim();
        p
    }

    /// Builds a polynomial from small integer coefficients starting at `q^min_deg`.
    pub fn from_ints(min_deg: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(min_deg, coeffs.iter().map(|&c| S::from_bigint(&BigInt::from(c))).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.min_deg = 0;
        } else if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_deg += lead as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.min_deg == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent present (0 for the zero polynomial).
    pub fn min_deg(&self) -> i64 {
        self.min_deg
    }

    /// Highest exponent present, `None` for zero.
    pub fn max_deg(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.min_deg + self.coeffs.len() as i64 - 1)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Coefficient of `q^d`.
    pub fn coeff(&self, d: i64) -> S {
        let idx = d - self.min_deg;
        if idx < 0 {
            return S::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_else(S::zero)
    }

    /// Iterates `(exponent, coefficient)` over nonzero terms.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &S)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.min_deg + i as i64, c))
    }

    /// True for an ordinary polynomial (no negative exponents).
    pub fn is_polynomial(&self) -> bool {
        self.is_zero() || self.min_deg >= 0
    }

    /// Nonnegative integer coefficients and no negative exponents, i.e. in `N[q]`.
    pub fn is_in_nq(&self) -> bool {
        self.is_polynomial() && self.coeffs.iter().all(|c| !c.is_negative() && c.to_bigint().is_some())
    }

    /// Multiplies by `q^d`.
    pub fn shift(&self, d: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Laurent { min_deg: self.min_deg + d, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, k: &S) -> Self {
        Self::from_coeffs(self.min_deg, self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    /// Divides every coefficient by the scalar `k`, failing unless all divisions are exact.
    pub fn div_scalar(&self, k: &S) -> Option<Self> {
        let coeffs = self.coeffs.iter().map(|c| c.div_exact(k)).collect::<Option<Vec<_>>>()?;
        Some(Self::from_coeffs(self.min_deg, coeffs))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> S {
        self.coeffs.iter().fold(S::zero(), |acc, c| acc + c.clone())
    }

    /// Substitutes `q → q+1`, `q → q-1` or `q → 1/q`.
    pub fn shift_var(&self, mode: VarShift) -> Result<Self> {
        match mode {
            VarShift::Invert => {
                let Some(top) = self.max_deg() else { return Ok(Self::zero()) };
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                Ok(Self::from_coeffs(-top, coeffs))
            }
            VarShift::Up | VarShift::Down => {
                if !self.is_polynomial() {
                    return Err(Error::NegativeDegreeShift);
                }
                let step =
                    Self::from_coeffs(0, vec![if mode == VarShift::Up { S::one() } else { -S::one() }, S::one()]);
                // Horner in the shifted variable.
                let mut out = Self::zero();
                for d in (0..=self.max_deg().unwrap_or(0)).rev() {
                    out = &(&out * &step) + &Self::constant(self.coeff(d));
                }
                Ok(out)
            }
        }
    }

    /// Exact quotient `self / d` in `R[q, 1/q]`.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::InexactDivision("division by zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // q is a unit, so normalize both sides to polynomials with nonzero constant term.
        let shift = self.min_deg - d.min_deg;
        let den = &d.coeffs;
        let mut rem = self.coeffs.clone();
        if rem.len() < den.len() {
            return Err(Error::InexactDivision(format!("({self}) / ({d})")));
        }
        let lead = den.last().unwrap();
        let mut quo = vec![S::zero(); rem.len() - den.len() + 1];
        for k in (0..quo.len()).rev() {
            let top = rem[k + den.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            let Some(c) = top.div_exact(lead) else {
                return Err(Error::InexactDivision(format!("({self}) / ({d})")));
            };
            for (i, di) in den.iter().enumerate() {
                rem[k + i] = rem[k + i].clone() - c.clone() * di.clone();
            }
            quo[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision(format!("({self}) / ({d})")));
        }
        Ok(Self::from_coeffs(shift, quo))
    }

    /// Maps coefficients into another scalar ring.
    pub fn map_scalars<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Laurent<T> {
        Laurent::from_coeffs(self.min_deg, self.coeffs.iter().map(f).collect())
    }
}

impl LaurentPoly {
    pub fn to_rational(&self) -> RatLaurentPoly {
        self.map_scalars(|c| BigRational::from_integer(c.clone()))
    }

    /// Content (gcd of the coefficients), positive; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Greatest common divisor in `Z[q, 1/q]`, normalized to a polynomial with
    /// nonzero constant term and positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalized_unit();
        }
        if other.is_zero() {
            return self.normalized_unit();
        }
        let content = self.content().gcd(&other.content());
        let mut a = self.primitive_part().shift(-self.min_deg);
        let mut b = other.primitive_part().shift(-other.min_deg);
        if a.coeffs.len() < b.coeffs.len() {
            std::mem::swap(&mut a, &mut b);
        }
        // Primitive pseudo-remainder sequence.
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = if r.is_zero() { r } else { r.primitive_part() };
            b = b.shift(-b.min_deg);
        }
        a.primitive_part().normalized_unit().scale(&content)
    }

    fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() {
            return Self::zero();
        }
        self.div_scalar(&c).expect("content divides every coefficient")
    }

    /// Strips powers of q and makes the leading coefficient positive.
    fn normalized_unit(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let p = self.shift(-self.min_deg);
        if p.coeffs.last().unwrap().is_negative() {
            -p
        } else {
            p
        }
    }

    fn pseudo_rem(&self, d: &Self) -> Self {
        let mut rem = self.coeffs.clone();
        let den = &d.coeffs;
        let lead = den.last().unwrap().clone();
        while rem.len() >= den.len() {
            let top = rem.last().unwrap().clone();
            let off = rem.len() - den.len();
            for c in rem.iter_mut() {
                *c *= &lead;
            }
            for (i, di) in den.iter().enumerate() {
                rem[off + i] -= &top * di;
            }
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        Self::from_coeffs(0, rem)
    }
}

impl RatLaurentPoly {
    /// Converts back to integer coefficients when every coefficient is integral.
    pub fn to_integer(&self) -> Option<LaurentPoly> {
        let coeffs = self.coeffs.iter().map(|c| c.to_bigint()).collect::<Option<Vec<_>>>()?;
        Some(LaurentPoly::from_coeffs(self.min_deg, coeffs))
    }
}

impl<S: Scalar> Default for Laurent<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> From<i64> for Laurent<S> {
    fn from(c: i64) -> Self {
        Self::constant(S::from_bigint(&BigInt::from(c)))
    }
}

impl<'a, S: Scalar> Add<&'a Laurent<S>> for &'a Laurent<S> {
    type Output = Laurent<S>;

    fn add(self, rhs: &Laurent<S>) -> Laurent<S> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.min_deg.min(rhs.min_deg);
        let hi = self.max_deg().unwrap().max(rhs.max_deg().unwrap());
        let coeffs = (lo..=hi).map(|d| self.coeff(d) + rhs.coeff(d)).collect();
        Laurent::from_coeffs(lo, coeffs)
    }
}

impl<'a, S: Scalar> Sub<&'a Laurent<S>> for &'a Laurent<S> {
    type Output = Laurent<S>;

    fn sub(self, rhs: &Laurent<S>) -> Laurent<S> {
        self + &(-rhs)
    }
}

impl<'a, S: Scalar> Mul<&'a Laurent<S>> for &'a Laurent<S> {
    type Output = Laurent<S>;

    fn mul(self, rhs: &Laurent<S>) -> Laurent<S> {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero();
        }
        let mut coeffs = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Laurent::from_coeffs(self.min_deg + rhs.min_deg, coeffs)
    }
}

impl<S: Scalar> Neg for &Laurent<S> {
    type Output = Laurent<S>;

    fn neg(self) -> Laurent<S> {
        Laurent { min_deg: self.min_deg, coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<S: Scalar> Neg for Laurent<S> {
    type Output = Laurent<S>;

    fn neg(self) -> Laurent<S> {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl<S: Scalar> $tr<Laurent<S>> for Laurent<S> {
            type Output = Laurent<S>;
            fn $f(self, rhs: Laurent<S>) -> Laurent<S> {
                (&self).$f(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<S: Scalar> AddAssign<&Laurent<S>> for Laurent<S> {
    fn add_assign(&mut self, rhs: &Laurent<S>) {
        *self = &*self + rhs;
    }
}

impl<S: Scalar> SubAssign<&Laurent<S>> for Laurent<S> {
    fn sub_assign(&mut self, rhs: &Laurent<S>) {
        *self = &*self - rhs;
    }
}

impl<S: Scalar> fmt::Display for Laurent<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.terms() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = abs.is_one();
            match d {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !unit {
                        write!(f, "{abs}")?;
                    }
                    if d == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for Laurent<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Scalars that serialize to and from JSON number tokens of unbounded size.
pub trait JsonScalar: Scalar {
    fn to_json(&self) -> serde_json::Value;
    fn from_json(v: &serde_json::Value) -> Option<Self>;
}

fn parse_bigint(v: &serde_json::Value) -> Option<BigInt> {
    match v {
        serde_json::Value::Number(n) => n.to_string().parse().ok(),
        serde_json::Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

impl JsonScalar for BigInt {
    fn to_json(&self) -> serde_json::Value {
        let n: serde_json::Number = self.to_string().parse().expect("decimal integers are valid JSON numbers");
        serde_json::Value::Number(n)
    }

    fn from_json(v: &serde_json::Value) -> Option<Self> {
        parse_bigint(v)
    }
}

impl JsonScalar for BigRational {
    fn to_json(&self) -> serde_json::Value {
        if self.is_integer() {
            self.to_integer().to_json()
        } else {
            serde_json::Value::String(self.to_string())
        }
    }

    fn from_json(v: &serde_json::Value) -> Option<Self> {
        if let Some(i) = parse_bigint(v) {
            return Some(BigRational::from_integer(i));
        }
        let s = v.as_str()?;
        let (n, d) = s.split_once('/')?;
        let d: BigInt = d.trim().parse().ok()?;
        let n: BigInt = n.trim().parse().ok()?;
        (!d.is_zero()).then(|| BigRational::new(n, d))
    }
}

impl<S: JsonScalar> Serialize for Laurent<S> {
    fn serialize<Z: Serializer>(&self, serializer: Z) -> std::result::Result<Z::Ok, Z::Error> {
        let mut st = serializer.serialize_struct("Laurent", 2)?;
        st.serialize_field("min_deg", &self.min_deg)?;
        let coeffs: Vec<serde_json::Value> = self.coeffs.iter().map(|c| c.to_json()).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

impl<'de, S: JsonScalar> Deserialize<'de> for Laurent<S> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            min_deg: i64,
            coeffs: Vec<serde_json::Value>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|v| S::from_json(v).ok_or_else(|| de::Error::custom(format!("bad coefficient {v}"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Laurent::from_coeffs(raw.min_deg, coeffs))
    }
}

/// A quotient of two integer Laurent polynomials, kept in lowest terms.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InexactDivision("zero denominator".into()));
        }
        Ok(Self::reduced(num, den))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFunc { num: p, den: LaurentPoly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    fn reduced(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        // Put all powers of q into the numerator and make the denominator's
        // leading coefficient positive.
        let s = den.min_deg();
        num = num.shift(-s);
        den = den.shift(-s);
        if den.coeffs().last().unwrap().is_negative() {
            num = -num;
            den = -den;
        }
        RatFunc { num, den }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Returns the Laurent polynomial when the denominator is a unit.
    pub fn as_poly(&self) -> Option<LaurentPoly> {
        self.num.div_exact(&self.den).ok()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::reduced(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::reduced(&self.num * &o.num, &self.den * &o.den)
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::InexactDivision("division by zero rational function".into()));
        }
        Ok(Self::reduced(&self.num * &o.den, &self.den * &o.num))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `[k]_q = 1 + q + ... + q^(k-1)`.
pub fn q_integer(k: usize) -> LaurentPoly {
    LaurentPoly::from_coeffs(0, vec![BigInt::one(); k])
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(min: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_ints(min, c)
    }

    #[test]
    fn inverse_pair() {
        assert_eq!(&lp(1, &[1]) * &lp(-1, &[1]), LaurentPoly::one());
    }

    #[test]
    fn binomial_square() {
        assert_eq!(&lp(0, &[1, 1]) * &lp(0, &[1, 1]), lp(0, &[1, 2, 1]));
    }

    #[test]
    fn subtraction_trims() {
        let d = &lp(2, &[1, 1]) - &lp(2, &[1]);
        assert_eq!(d, lp(3, &[1]));
        assert_eq!(d.min_deg(), 3);
        assert_eq!(d.coeffs().len(), 1);
        assert!((&d - &d).coeffs().is_empty());
    }

    #[test]
    fn shifts() {
        assert_eq!(lp(2, &[1]).shift_var(VarShift::Up).unwrap(), lp(0, &[1, 2, 1]));
        assert_eq!(lp(0, &[-1, 1]).shift_var(VarShift::Up).unwrap(), lp(1, &[1]));
        assert_eq!(lp(3, &[1]).shift_var(VarShift::Invert).unwrap(), lp(-3, &[1]));
        assert!(matches!(lp(-1, &[1]).shift_var(VarShift::Up), Err(Error::NegativeDegreeShift)));
    }

    #[test]
    fn exact_division() {
        assert_eq!(lp(1, &[1, 1]).div_exact(&lp(1, &[1])).unwrap(), lp(0, &[1, 1]));
        assert_eq!(lp(0, &[-1, 0, 1]).div_exact(&lp(0, &[-1, 1])).unwrap(), lp(0, &[1, 1]));
        assert!(matches!(lp(0, &[1, 0, 1]).div_exact(&lp(0, &[1, 1])), Err(Error::InexactDivision(_))));
        assert!(lp(0, &[1]).div_exact(&LaurentPoly::zero()).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(lp(0, &[1, -2, 0, 1]).to_string(), "1 - 2q + q^3");
        assert_eq!(lp(-2, &[-1]).to_string(), "-q^-2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn gcd_and_ratfunc() {
        let a = &lp(0, &[-1, 1]) * &lp(0, &[1, 1]);
        let b = &lp(0, &[-1, 1]) * &lp(0, &[2, 0, 1]);
        assert_eq!(a.gcd(&b), lp(0, &[-1, 1]));
        let r = RatFunc::new(a.clone(), b.clone()).unwrap();
        assert_eq!(r.num(), &lp(0, &[1, 1]));
        assert_eq!(r.den(), &lp(0, &[2, 0, 1]));
        let s = r.mul(&RatFunc::new(lp(0, &[2, 0, 1]), lp(0, &[1, 1])).unwrap());
        assert_eq!(s.as_poly().unwrap(), LaurentPoly::one());
        let half = RatFunc::new(lp(1, &[1]), lp(2, &[2])).unwrap();
        assert_eq!(half.num(), &lp(-1, &[1]));
        assert_eq!(half.den(), &lp(0, &[2]));
    }

    #[test]
    fn json_roundtrip_big() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let p = LaurentPoly::from_coeffs(-2, vec![big, BigInt::from(-3)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"min_deg":-2,"coeffs":[123456789012345678901234567890,-3]}"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        let from_strings: LaurentPoly = serde_json::from_str(r#"{"min_deg":0,"coeffs":["5","0"]}"#).unwrap();
        assert_eq!(from_strings, lp(0, &[5]));
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        (-3i64..4, prop::collection::vec(-5i64..6, 0..5)).prop_map(|(m, c)| lp(m, &c))
    }

    fn arb_nonneg_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec(-5i64..6, 0..6).prop_map(|c| lp(0, &c))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn shift_up_down_inverse(a in arb_nonneg_poly()) {
            let up = a.shift_var(VarShift::Up).unwrap();
            prop_assert_eq!(up.shift_var(VarShift::Down).unwrap(), a);
        }

        #[test]
        fn product_divides(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
        }
    }
}
