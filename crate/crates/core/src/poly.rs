//! Dense univariate polynomials with exact rational coefficients.
//!
//! `coeffs[k]` holds the coefficient of `x^k`. The zero polynomial is the
//! empty coefficient vector; every nonzero polynomial stores a nonzero
//! leading coefficient, so structural equality is mathematical equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Arbitrary-precision rational number, always stored reduced with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand constructor for `p/q`. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Integer as a rational.
pub fn rat_int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Canonical string form: `p` when the denominator is 1, else `p/q`.
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q`. Rejects a zero denominator.
pub fn rational_from_str(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let parse_int = |t: &str| BigInt::from_str(t).map_err(|e| format!("bad integer {t:?}: {e}"));
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(Rational::new(parse_int(p)?, den))
        }
    }
}

/// Exact rational k-th root, if one exists. Negative inputs are allowed for
/// odd k; `k == 0` and roots of negative numbers at even k yield `None`.
pub fn rational_nth_root(q: &Rational, k: u32) -> Option<Rational> {
    if k == 0 {
        return None;
    }
    if q.is_negative() && k % 2 == 0 {
        return None;
    }
    let numer = q.numer().nth_root(k);
    let denom = q.denom().nth_root(k);
    let candidate = Rational::new(numer, denom);
    if &candidate.pow(k as i32) == q {
        Some(candidate)
    } else {
        None
    }
}

/// Round-to-nearest double for an exact rational. `None` when the value
/// falls outside the finite f64 range.
pub fn rational_to_f64(r: &Rational) -> Option<f64> {
    let v = r.to_f64()?;
    v.is_finite().then_some(v)
}

/// serde glue: a `Rational` field as its canonical `"p/q"` string.
pub mod rat_str {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rational_to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        rational_from_str(&s).map_err(serde::de::Error::custom)
    }
}

/// serde glue: a `Vec<Rational>` field as a list of `"p/q"` strings.
pub mod rat_str_list {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|r| rational_to_string(r)))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        strings
            .iter()
            .map(|s| rational_from_str(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

#[derive(Debug, Clone, thiserror::Error, PartialEq)]
pub enum PolyError {
    /// Exact division was requested but the Euclidean remainder is nonzero.
    #[error("division leaves a nonzero remainder ({remainder})")]
    NonzeroRemainder { remainder: Polynomial },
    /// `deflate_linear` was called with a value that is not a root.
    #[error("{} is not a root (f evaluates to {})", rational_to_string(.value), rational_to_string(.eval))]
    NotARoot { value: Rational, eval: Rational },
    #[error("division by the zero polynomial")]
    DivisionByZero,
}

/// Dense univariate polynomial over the rationals, canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Polynomial::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// `c·x^k`.
    pub fn monomial(k: usize, c: Rational) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    /// Builds from `coeffs[k] = coefficient of x^k`, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Convenience constructor from integer coefficients (index = power).
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the stored length.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, v: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c;
        }
        acc
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        Polynomial::from_coeffs(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Exact convolution product.
    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact power by repeated squaring. `pow(p, 0) == 1` for every `p`.
    pub fn pow(&self, mut k: u32) -> Polynomial {
        let mut result = Polynomial::one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Exact composition `self(inner(x))` by Horner over polynomials.
    pub fn compose(&self, inner: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Polynomial::constant(c.clone()));
        }
        acc
    }

    /// Euclidean division: `self = g·q + r` with `deg r < deg g`.
    pub(crate) fn div_rem(&self, g: &Polynomial) -> Result<(Polynomial, Polynomial), PolyError> {
        let g_deg = g.degree().ok_or(PolyError::DivisionByZero)?;
        let g_lead = g.leading().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        if rem.len() <= g_deg {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let q_len = rem.len() - g_deg;
        let mut quot = vec![Rational::zero(); q_len];
        for qi in (0..q_len).rev() {
            let c = rem[qi + g_deg].clone() / g_lead;
            if !c.is_zero() {
                for (k, gc) in g.coeffs.iter().enumerate() {
                    let t = gc * &c;
                    rem[qi + k] -= t;
                }
            }
            quot[qi] = c;
        }
        Ok((Polynomial::from_coeffs(quot), Polynomial::from_coeffs(rem)))
    }

    /// Exact quotient `q` with `self = g·q`; errors with the remainder when
    /// the division is not exact.
    pub fn divide_exact(&self, g: &Polynomial) -> Result<Polynomial, PolyError> {
        let (q, r) = self.div_rem(g)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::NonzeroRemainder { remainder: r })
        }
    }

    /// Synthetic division by `(x − r)` for a known exact root `r`.
    pub fn deflate_linear(&self, r: &Rational) -> Result<Polynomial, PolyError> {
        let Some(deg) = self.degree() else {
            return Err(PolyError::NotARoot {
                value: r.clone(),
                eval: Rational::zero(),
            });
        };
        let mut quotient = vec![Rational::zero(); deg];
        let mut carry = Rational::zero();
        for k in (0..=deg).rev() {
            let b = &self.coeffs[k] + &carry;
            if k == 0 {
                if !b.is_zero() {
                    return Err(PolyError::NotARoot {
                        value: r.clone(),
                        eval: b,
                    });
                }
            } else {
                carry = &b * r;
                quotient[k - 1] = b;
            }
        }
        Ok(Polynomial::from_coeffs(quotient))
    }

    /// Taylor shift: returns `g` with `g(y) = self(y + mu)`, by repeated
    /// synthetic division.
    pub fn shift(&self, mu: &Rational) -> Polynomial {
        if mu.is_zero() || self.is_zero() {
            return self.clone();
        }
        let mut a = self.coeffs.clone();
        let n = a.len() - 1;
        for k in 0..n {
            for j in (k..n).rev() {
                let t = mu * &a[j + 1];
                a[j] += t;
            }
        }
        Polynomial::from_coeffs(a)
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
            .collect();
        Polynomial::from_coeffs(coeffs)
    }

    /// Content: the signed rational `c` with `self = c · primitive_part()`.
    /// The sign follows the leading coefficient; `content(0) = 0`.
    pub fn content(&self) -> Rational {
        let Some(lead) = self.leading() else {
            return Rational::zero();
        };
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = Rational::new(num_gcd, den_lcm);
        if lead.is_negative() {
            content = -content;
        }
        content
    }

    /// The primitive part: coprime integer coefficients, positive leading
    /// coefficient. Coefficient normalization is never applied implicitly;
    /// callers opt in through this method.
    pub fn primitive_part(&self) -> Polynomial {
        let content = self.content();
        if content.is_zero() {
            return Polynomial::zero();
        }
        self.scale(&content.recip())
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::sub(self, rhs)
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

/// Canonical pretty-printer. The output re-parses to the same polynomial:
/// `2x^4 + 16x^3 - 1/2x + 32`, `-x^3 + x`, `0`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
                first = false;
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                f.write_str(&rational_to_string(&mag))?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        crate::parser::parse_polynomial(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_i64(coeffs)
    }

    #[test]
    fn add_cancels_leading_term() {
        // (x²+1) + (−x²+x) = x+1
        let sum = p(&[1, 0, 1]).add(&p(&[0, 1, -1]));
        assert_eq!(sum, p(&[1, 1]));
        assert_eq!(sum.degree(), Some(1));
    }

    #[test]
    fn add_identity_and_doubling() {
        let q = p(&[1, 1]);
        assert_eq!(q.add(&Polynomial::zero()), q);
        assert_eq!(q.add(&q), p(&[2, 2]));
    }

    #[test]
    fn mul_difference_of_squares() {
        assert_eq!(p(&[-1, 1]).mul(&p(&[1, 1])), p(&[-1, 0, 1]));
    }

    #[test]
    fn mul_hand_convolution() {
        // (x²−x+1)(x²+x+2) = x⁴+2x²−x+2
        let prod = p(&[1, -1, 1]).mul(&p(&[2, 1, 1]));
        assert_eq!(prod, p(&[2, -1, 2, 0, 1]));
    }

    #[test]
    fn mul_annihilator() {
        assert_eq!(p(&[3, 1]).mul(&Polynomial::zero()), Polynomial::zero());
    }

    #[test]
    fn pow_binomials() {
        assert_eq!(p(&[1, 1]).pow(2), p(&[1, 2, 1]));
        assert_eq!(p(&[3, 1]).pow(0), Polynomial::one());
        // binomial-theorem oracle for (x+2)^4: C(4,k)·2^(4−k)
        let expected: Vec<i64> = (0..=4)
            .map(|k| {
                let binom: i64 = match k {
                    0 | 4 => 1,
                    1 | 3 => 4,
                    _ => 6,
                };
                binom * 2i64.pow(4 - k)
            })
            .collect();
        assert_eq!(p(&[2, 1]).pow(4), p(&expected));
        assert_eq!(p(&[2, 1]).pow(4), p(&[16, 32, 24, 8, 1]));
    }

    #[test]
    fn compose_identities() {
        let inner = p(&[1, 0, 1]); // x²+1
        assert_eq!(inner.compose(&inner), p(&[2, 0, 2, 0, 1]));
        let q = p(&[4, -5, 0, 1]);
        assert_eq!(q.compose(&Polynomial::x()), q);
        assert_eq!(Polynomial::x().compose(&q), q);
    }

    #[test]
    fn divide_exact_recovers_factor() {
        // Long-division oracle verified by hand: x⁴+2x²−x+2 = (x²−x+1)(x²+x+2)
        let f = p(&[2, -1, 2, 0, 1]);
        assert_eq!(f.divide_exact(&p(&[1, -1, 1])).unwrap(), p(&[2, 1, 1]));
        assert_eq!(f.divide_exact(&Polynomial::one()).unwrap(), f);
    }

    #[test]
    fn divide_exact_reports_remainder() {
        // x²+1 = (x+1)(x−1) + 2
        let err = p(&[1, 0, 1]).divide_exact(&p(&[1, 1])).unwrap_err();
        assert_eq!(
            err,
            PolyError::NonzeroRemainder {
                remainder: p(&[2])
            }
        );
        assert!(matches!(
            p(&[1]).divide_exact(&Polynomial::zero()),
            Err(PolyError::DivisionByZero)
        ));
    }

    #[test]
    fn deflate_linear_synthetic_division() {
        assert_eq!(
            p(&[0, -1, 0, 1]).deflate_linear(&rat_int(0)).unwrap(),
            p(&[-1, 0, 1])
        );
        // synthetic-division oracle: x³+8 = (x+2)(x²−2x+4)
        assert_eq!(
            p(&[8, 0, 0, 1]).deflate_linear(&rat_int(-2)).unwrap(),
            p(&[4, -2, 1])
        );
        assert!(matches!(
            p(&[1, 0, 1]).deflate_linear(&rat_int(1)),
            Err(PolyError::NotARoot { .. })
        ));
    }

    #[test]
    fn eval_horner() {
        assert_eq!(p(&[4, -5, 1]).eval(&rat_int(1)), rat_int(0));
        assert_eq!(p(&[0, 0, 0, 1]).eval(&rat(1, 2)), rat(1, 8));
        assert_eq!(Polynomial::zero().eval(&rat_int(7)), rat_int(0));
    }

    #[test]
    fn shift_is_taylor_shift() {
        assert_eq!(p(&[0, 0, 1]).shift(&rat_int(1)), p(&[1, 2, 1]));
        let f = p(&[3, 1, 4, 1]);
        assert_eq!(f.shift(&rat_int(0)), f);
        // completing the square: x²+4x+5 recentered at −2 is y²+1
        assert_eq!(p(&[5, 4, 1]).shift(&rat_int(-2)), p(&[1, 0, 1]));
    }

    #[test]
    fn content_and_primitive_part() {
        let f = Polynomial::from_coeffs(vec![rat(-4, 3), rat(-2, 3)]);
        assert_eq!(f.content(), rat(-2, 3));
        assert_eq!(f.primitive_part(), p(&[2, 1]));
        assert_eq!(Polynomial::zero().content(), rat_int(0));
        // content is not applied implicitly by arithmetic
        let g = p(&[2, 4]);
        assert_eq!(g.add(&Polynomial::zero()).coeffs(), g.coeffs());
    }

    #[test]
    fn rational_nth_roots() {
        assert_eq!(rational_nth_root(&rat_int(8), 3), Some(rat_int(2)));
        assert_eq!(rational_nth_root(&rat_int(-8), 3), Some(rat_int(-2)));
        assert_eq!(rational_nth_root(&rat_int(-4), 2), None);
        assert_eq!(rational_nth_root(&rat(4, 9), 2), Some(rat(2, 3)));
        assert_eq!(rational_nth_root(&rat_int(2), 2), None);
        assert_eq!(rational_nth_root(&rat_int(5), 0), None);
    }

    #[test]
    fn rational_strings_round_trip() {
        for s in ["3", "-3", "1/2", "-7/4", "0"] {
            let r = rational_from_str(s).unwrap();
            assert_eq!(rational_to_string(&r), s);
        }
        assert_eq!(rational_from_str("4/6").unwrap(), rat(2, 3));
        assert!(rational_from_str("1/0").is_err());
        assert!(rational_from_str("x").is_err());
    }

    #[test]
    fn display_canonical_forms() {
        assert_eq!(p(&[32, 112, 60, 16, 2]).to_string(), "2x^4 + 16x^3 + 60x^2 + 112x + 32");
        assert_eq!(p(&[0, 1, 0, -1]).to_string(), "-x^3 + x");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(p(&[-5]).to_string(), "-5");
        let half_x = Polynomial::from_coeffs(vec![rat_int(0), rat(-1, 2)]);
        assert_eq!(half_x.to_string(), "-1/2x");
        assert_eq!(p(&[0, 0, 1]).to_string(), "x^2");
    }
}
