//! Exact Laurent polynomials in one variable q over the integers.
//!
//! Coefficients are arbitrary-precision (`BigInt`), exponents are `i64`.
//! The bar involution sends q ↦ q^{-1}.  Quantum integers are balanced:
//! [n] = q^{n-1} + q^{n-3} + … + q^{1-n}, so they are bar-invariant.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// A Laurent polynomial in q with integer coefficients.  The map never
/// stores a zero coefficient, so equality of maps is equality of values.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Default, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, BigInt::one())
    }

    /// c · q^exp.
    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    /// q^exp.
    pub fn q_power(exp: i64) -> Self {
        LaurentPoly::monomial(exp, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Coefficient of q^exp (zero if absent).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// (exponent, coefficient) pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Largest exponent with nonzero coefficient.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Smallest exponent with nonzero coefficient.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    fn insert_add(&mut self, exp: i64, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// The bar involution q ↦ q^{-1}.
    pub fn bar(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Substitute q ↦ q^{-1}; alias of [`bar`](Self::bar) kept for call
    /// sites that read better with substitution language.
    pub fn invert_q(&self) -> LaurentPoly {
        self.bar()
    }

    /// Multiply by q^shift.
    pub fn shifted(&self, shift: i64) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + shift, c.clone()))
                .collect(),
        }
    }

    /// Multiply by an integer scalar.
    pub fn scaled(&self, scalar: &BigInt) -> LaurentPoly {
        if scalar.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e, c * scalar))
                .collect(),
        }
    }

    /// True iff the polynomial is ±q^t for some t.
    pub fn as_signed_power(&self) -> Option<(i64, bool)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&exp, coeff) = self.terms.iter().next().unwrap();
        if coeff.is_one() {
            Some((exp, true))
        } else if (-coeff).is_one() {
            Some((exp, false))
        } else {
            None
        }
    }

    /// Exact division: panics unless `divisor` divides `self` exactly in
    /// ℤ[q, q^{-1}].  Division by ±q^t is a shift; the general case runs
    /// long division from the top term and checks the remainder.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> LaurentPoly {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        if let Some((t, positive)) = divisor.as_signed_power() {
            let shifted = self.shifted(-t);
            return if positive { shifted } else { -shifted };
        }
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        let d_top = divisor.max_exp().unwrap();
        let d_lead = divisor.coeff(d_top);
        // In an exact product the bottom exponents add, so no quotient
        // term can lie below this; hitting the bound means non-exactness.
        let min_quot_exp = self.min_exp().unwrap() - divisor.min_exp().unwrap();
        while !rem.is_zero() {
            let r_top = rem.max_exp().unwrap();
            assert!(
                r_top - d_top >= min_quot_exp,
                "non-exact division: remainder {rem} cannot be cleared\n  dividend {self}\n  divisor {divisor}"
            );
            let r_lead = rem.coeff(r_top);
            let (q_coeff, r_coeff) = num_integer_div_rem(&r_lead, &d_lead);
            assert!(
                r_coeff.is_zero(),
                "non-exact division: leading coefficient {r_lead} not divisible by {d_lead}\n  dividend {self}\n  divisor {divisor}"
            );
            let mono = LaurentPoly::monomial(r_top - d_top, q_coeff);
            rem = rem - mono.clone() * divisor.clone();
            quot += mono;
            if let Some(new_top) = rem.max_exp() {
                assert!(
                    new_top < r_top,
                    "non-exact division: no progress\n  dividend {self}\n  divisor {divisor}"
                );
            }
        }
        quot
    }

    /// Evaluate at an integer point (exponents must be ≥ 0 unless x = ±1).
    pub fn eval_int(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        let mut acc = BigInt::zero();
        for (&e, c) in &self.terms {
            assert!(e >= 0 || x.abs().is_one(), "negative exponent at x={x}");
            let p = if e >= 0 {
                x.pow(e as u32)
            } else if x.is_one() {
                BigInt::one()
            } else {
                // x = -1 and e < 0: (-1)^e = (-1)^{-e}
                (-BigInt::one()).pow((-e) as u32)
            };
            acc += c * p;
        }
        acc
    }

    /// The part of the polynomial with strictly positive exponents.
    pub fn positive_part(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&e, _)| e > 0)
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
        }
    }

    /// Given g with bar(g) = -g, return the unique f with only positive
    /// exponents and f - bar(f) = g.  Panics if g is not bar-antisymmetric.
    pub fn solve_bar_difference(&self) -> LaurentPoly {
        assert!(
            (self.bar() + self.clone()).is_zero(),
            "not bar-antisymmetric: {self}"
        );
        self.positive_part()
    }

    /// True iff every coefficient is ≥ 0.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    let q = a / b;
    let r = a - &q * b;
    (q, r)
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += rhs;
        self
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.insert_add(*e, c);
        }
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.insert_add(*e, c);
        }
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= rhs;
        self
    }
}

impl SubAssign for LaurentPoly {
    fn sub_assign(&mut self, rhs: LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.insert_add(*e, &(-c));
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.insert_add(ea + eb, &(ca * cb));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    /// Ascending exponents, sign-aware joins: `-q^-2 + 1 + 2q^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in &self.terms {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = abs.is_one();
            match (e, unit) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{abs}q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{abs}q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for LaurentPoly {
    /// Serialized as `[[exp, coeff], …]` in ascending exponent order; the
    /// coefficient is an arbitrary-precision JSON number.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<(i64, serde_json::Number)> = self
            .terms
            .iter()
            .map(|(&e, c)| {
                let num = serde_json::Number::from_string_unchecked(c.to_string());
                (e, num)
            })
            .collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<(i64, serde_json::Number)> = Vec::deserialize(d)?;
        let mut out = LaurentPoly::zero();
        for (e, num) in pairs {
            let c: BigInt = num
                .to_string()
                .parse()
                .map_err(|_| D::Error::custom("coefficient is not an integer"))?;
            out.insert_add(e, &c);
        }
        Ok(out)
    }
}

/// Balanced quantum integer [n] = q^{n-1} + q^{n-3} + … + q^{1-n} for
/// n ≥ 0 ([0] = 0).
pub fn quantum_integer(n: u64) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    let n = n as i64;
    let mut e = n - 1;
    while e >= 1 - n {
        out.insert_add(e, &BigInt::one());
        e -= 2;
    }
    out
}

/// [n]! = [1][2]…[n].
pub fn quantum_factorial(n: u64) -> LaurentPoly {
    let mut out = LaurentPoly::one();
    for k in 1..=n {
        out = out * quantum_integer(k);
    }
    out
}
