//! Dense univariate polynomials over `Z` with exact arithmetic.
//!
//! [`IntPolynomial`] is the value type used everywhere in this crate.
//! Coefficients are arbitrary-precision integers stored low degree first,
//! with trailing zeros trimmed, so the empty vector is the zero polynomial.
//!
//! The GCD is canonical in `Z[x]`:
//!
//! ```text
//! gcd(a, b) = gcd(content(a), content(b)) * gcd(pp(a), pp(b))
//! ```
//!
//! normalized to a positive leading coefficient, with `gcd(a, 0) = ±a` and
//! `gcd(0, 0) = 0`. Working with a fixed canonical form (instead of "up to
//! units") makes equality of GCD expressions directly assertable. Integer
//! constants embed as degree-0 polynomials, so mixed expressions like
//! `gcd(d(x), k1, k2)` reduce to an integer gcd of contents automatically.
//!
//! The primitive-part GCD uses the subresultant polynomial remainder
//! sequence, which keeps intermediate coefficients polynomially bounded
//! without per-step content extraction.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::report::VerificationReport;

/// Errors from exact polynomial operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial division leaves a remainder: {0}")]
    NotDivisible(String),
    #[error("antiderivative has a non-integer coefficient at degree {degree}")]
    NonIntegerIntegral { degree: usize },
    #[error("gcd of an empty list is undefined")]
    EmptyInput,
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

/// A dense polynomial with integer coefficients; `coeffs[i]` multiplies `x^i`.
///
/// Invariant: the coefficient vector never ends in zero, and the zero
/// polynomial is the empty vector. Values are immutable after construction
/// and all operations are pure, so sharing between threads is safe.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Builds a polynomial from low-to-high coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_i64_coeffs(&[0, 1])
    }

    /// Embeds an integer as a degree-0 polynomial.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// The monomial `c * x^e`.
    pub fn monomial(c: impl Into<BigInt>, e: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` is the degree of the zero polynomial (the "minus infinity"
    /// sentinel); any other polynomial has degree `len - 1`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// True for nonzero constants and zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Multiplies every coefficient by `k`.
    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// `self^e` by repeated squaring.
    pub fn pow(&self, e: usize) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Horner evaluation at an integer point, exact.
    pub fn eval(&self, x0: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x0 + c;
        }
        acc
    }

    pub fn eval_i64(&self, x0: i64) -> BigInt {
        self.eval(&BigInt::from(x0))
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Formal antiderivative with constant term `c`.
    ///
    /// Every coefficient of `x^i` must be divisible by `i + 1`, otherwise the
    /// antiderivative leaves `Z[x]` and `NonIntegerIntegral` is returned.
    pub fn integrate(&self, c: impl Into<BigInt>) -> Result<Self, PolyError> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(c.into());
        for (i, a) in self.coeffs.iter().enumerate() {
            let div = BigInt::from(i + 1);
            let (q, r) = a.div_rem(&div);
            if !r.is_zero() {
                return Err(PolyError::NonIntegerIntegral { degree: i });
            }
            coeffs.push(q);
        }
        Ok(Self::from_coeffs(coeffs))
    }

    /// Exact quotient in `Z[x]`: returns `q` with `self = q * divisor`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let da = self.degree().unwrap();
        let db = divisor.degree().unwrap();
        if da < db {
            return Err(PolyError::NotDivisible(self.to_string()));
        }
        let lc = divisor.leading_coeff().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); da - db + 1];
        for i in (0..=da - db).rev() {
            let head = std::mem::take(&mut rem[db + i]);
            if head.is_zero() {
                continue;
            }
            let (q, r) = head.div_rem(lc);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible(format!(
                    "leading coefficient {head} not divisible by {lc}"
                )));
            }
            for (j, b) in divisor.coeffs.iter().enumerate().take(db) {
                rem[i + j] -= &q * b;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            let r = Self::from_coeffs(rem);
            return Err(PolyError::NotDivisible(r.to_string()));
        }
        Ok(Self::from_coeffs(quot))
    }

    /// Nonnegative gcd of all coefficients; `content(0) = 0`.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// `self / content(self)`, keeping the sign of the leading coefficient.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    /// Sign-normalized form: nonzero polynomials get a positive leading
    /// coefficient, zero stays zero.
    pub fn canonical(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) if lc.is_negative() => -self,
            _ => self.clone(),
        }
    }

    /// Canonical greatest common divisor in `Z[x]`.
    ///
    /// The result divides both inputs exactly, any common divisor divides it,
    /// and it is normalized as `gcd(content, content) * primitive-gcd` with a
    /// positive leading coefficient. `gcd(a, 0)` is the canonical form of `a`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.canonical();
        }
        if other.is_zero() {
            return self.canonical();
        }
        let content = self.content().gcd(&other.content());
        let pa = self.primitive_part();
        let pb = other.primitive_part();
        let prim = if pa.is_constant() || pb.is_constant() {
            Self::one()
        } else {
            Self::subresultant_gcd(&pa, &pb)
        };
        prim.scale(&content)
    }

    /// Left fold of [`Self::gcd`] over a nonempty list.
    pub fn gcd_many<'a, I>(polys: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = &'a Self>,
    {
        let mut iter = polys.into_iter();
        let first = iter.next().ok_or(PolyError::EmptyInput)?;
        let mut acc = first.canonical();
        for p in iter {
            acc = acc.gcd(p);
        }
        Ok(acc)
    }

    /// Pseudo-remainder: the unique `r` with
    /// `lc(b)^(deg a - deg b + 1) * a = q * b + r` and `deg r < deg b`.
    fn pseudo_remainder(a: &Self, b: &Self) -> Self {
        let da = a.degree().expect("pseudo_remainder: zero dividend");
        let db = b.degree().expect("pseudo_remainder: zero divisor");
        debug_assert!(da >= db);
        let lcb = b.leading_coeff().unwrap().clone();
        let mut r = a.clone();
        let mut premultiplies = (da - db + 1) as u32;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lcr = r.leading_coeff().unwrap().clone();
            r = &r.scale(&lcb) - &b.mul_monomial(&lcr, dr - db);
            premultiplies -= 1;
        }
        if premultiplies > 0 {
            r = r.scale(&lcb.pow(premultiplies));
        }
        r
    }

    /// `self * c * x^e` without building an intermediate monomial.
    fn mul_monomial(&self, c: &BigInt, e: usize) -> Self {
        if self.is_zero() || c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); e];
        coeffs.extend(self.coeffs.iter().map(|a| a * c));
        IntPolynomial { coeffs }
    }

    fn div_scalar_exact(&self, k: &BigInt) -> Self {
        debug_assert!(!k.is_zero());
        IntPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(k);
                    debug_assert!(r.is_zero(), "inexact scalar division in PRS");
                    q
                })
                .collect(),
        }
    }

    /// Subresultant PRS on primitive nonconstant inputs; returns the
    /// canonical primitive gcd.
    fn subresultant_gcd(a: &Self, b: &Self) -> Self {
        let (mut u, mut v) = if a.degree() >= b.degree() {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        };
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            if v.is_constant() {
                // A nonzero constant tail means the primitive inputs are coprime.
                return Self::one();
            }
            let delta = (u.degree().unwrap() - v.degree().unwrap()) as u32;
            let r = Self::pseudo_remainder(&u, &v);
            if r.is_zero() {
                return v.primitive_part().canonical();
            }
            let divisor = &g * h.pow(delta);
            u = std::mem::replace(&mut v, r.div_scalar_exact(&divisor));
            g = u.leading_coeff().unwrap().clone();
            h = match delta {
                0 => h,
                1 => g.clone(),
                _ => {
                    let num = g.pow(delta);
                    let den = h.pow(delta - 1);
                    let (q, rem) = num.div_rem(&den);
                    debug_assert!(rem.is_zero(), "inexact psi update in PRS");
                    q
                }
            };
        }
    }
}

impl std::ops::Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = rhs.coeffs.get(i);
            coeffs.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl std::ops::Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl std::ops::Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial { coeffs }
    }
}

/// Renders in the canonical text format: terms in descending exponent,
/// `k*x^e` per term, `x^1` printed `x`, `x^0` omitted, unit coefficients
/// elided except for the constant term. Examples: `x^4+3*x^2+1`, `-2*x^3+x`,
/// `0`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            if e == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if e == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// Parses the text format produced by `Display`; whitespace is ignored and
/// the `*` between coefficient and `x` is optional.
impl FromStr for IntPolynomial {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(PolyError::Parse("empty input".into()));
        }
        let bytes = compact.as_bytes();
        let mut acc = IntPolynomial::zero();
        let mut pos = 0usize;
        while pos < bytes.len() {
            let mut sign = 1i32;
            while pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
                if bytes[pos] == b'-' {
                    sign = -sign;
                }
                pos += 1;
            }
            let digits_start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let digits = &compact[digits_start..pos];
            let mut coeff: Option<BigInt> = if digits.is_empty() {
                None
            } else {
                Some(
                    digits
                        .parse::<BigInt>()
                        .map_err(|e| PolyError::Parse(e.to_string()))?,
                )
            };
            if pos < bytes.len() && bytes[pos] == b'*' {
                if coeff.is_none() {
                    return Err(PolyError::Parse(format!("stray '*' at offset {pos}")));
                }
                pos += 1;
            }
            let exp = if pos < bytes.len() && bytes[pos] == b'x' {
                pos += 1;
                if pos < bytes.len() && bytes[pos] == b'^' {
                    pos += 1;
                    let es = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if es == pos {
                        return Err(PolyError::Parse("missing exponent after '^'".into()));
                    }
                    compact[es..pos]
                        .parse::<usize>()
                        .map_err(|e| PolyError::Parse(e.to_string()))?
                } else {
                    1
                }
            } else {
                if coeff.is_none() {
                    return Err(PolyError::Parse(format!(
                        "expected term at offset {digits_start}"
                    )));
                }
                0
            };
            let mut c = coeff.take().unwrap_or_else(BigInt::one);
            if sign < 0 {
                c = -c;
            }
            acc = &acc + &IntPolynomial::monomial(c, exp);
        }
        Ok(acc)
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// Checks both multiplicativity laws for coprime-factored gcds:
///
/// 1. if `gcd(p,q) = gcd(r,s) = 1` then
///    `gcd(pq, rs) = gcd(p,r) gcd(p,s) gcd(q,r) gcd(q,s)`;
/// 2. if `gcd(p,r) = 1` and `gcd(q,s) = 1` then
///    `gcd(pq, rs) = gcd(p,s) gcd(q,r)`.
///
/// A part whose hypothesis fails on the given quadruple is reported as
/// vacuous rather than checked.
pub fn verify_gcd_multiplicativity(
    p: &IntPolynomial,
    q: &IntPolynomial,
    r: &IntPolynomial,
    s: &IntPolynomial,
) -> VerificationReport {
    let mut report = VerificationReport::new("gcd-multiplicativity");
    report.set_param("p", p);
    report.set_param("q", q);
    report.set_param("r", r);
    report.set_param("s", s);

    let one = IntPolynomial::one();
    let pq = p * q;
    let rs = r * s;
    let lhs = pq.gcd(&rs);

    if p.gcd(q) == one && r.gcd(s) == one {
        let rhs = &(&p.gcd(r) * &p.gcd(s)) * &(&q.gcd(r) * &q.gcd(s));
        report.check(lhs == rhs, || {
            (
                "part 1".into(),
                format!("gcd(pq,rs) = {lhs} but the four-factor product is {rhs}"),
            )
        });
    } else {
        report.skip_case();
    }

    if p.gcd(r) == one && q.gcd(s) == one {
        let rhs = &p.gcd(s) * &q.gcd(r);
        report.check(lhs == rhs, || {
            (
                "part 2".into(),
                format!("gcd(pq,rs) = {lhs} but gcd(p,s)gcd(q,r) = {rhs}"),
            )
        });
    } else {
        report.skip_case();
    }

    report
}
