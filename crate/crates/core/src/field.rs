//! Exact coefficient arithmetic over Q (arbitrary-precision rationals) and
//! prime fields F_p, behind a single field-context value.
//!
//! Elements are immutable and carry enough information to detect context
//! mixups; every result is in canonical form (reduced fraction with positive
//! denominator, or a representative in `0..p`). Rationals are stored inline
//! while numerator and denominator fit machine words, with transparent
//! promotion to arbitrary precision on overflow; this keeps the echelon hot
//! path allocation-free for typical inputs without ever rounding.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use std::fmt;

/// A coefficient field: the rationals or F_p for a prime p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldCtx {
    Rationals,
    PrimeField(u64),
}

/// An exact rational with a canonical two-level representation: `Small`
/// whenever the reduced fraction fits (i64 numerator, u64 denominator),
/// `Big` otherwise. Equal values always share the representation, so the
/// derived equality and hashing are sound.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Rational {
    Small { num: i64, den: u64 },
    Big(BigRational),
}

impl Rational {
    pub fn zero() -> Rational {
        Rational::Small { num: 0, den: 1 }
    }

    pub fn one() -> Rational {
        Rational::Small { num: 1, den: 1 }
    }

    pub fn from_i64(n: i64) -> Rational {
        Rational::Small { num: n, den: 1 }
    }

    /// Canonicalize a reduced-or-not fraction with nonzero denominator.
    fn from_parts_i128(num: i128, den: u128) -> Rational {
        debug_assert!(den != 0);
        if num == 0 {
            return Rational::zero();
        }
        let g = num.unsigned_abs().gcd(&den);
        let num = num / g as i128;
        let den = den / g;
        match (i64::try_from(num), u64::try_from(den)) {
            (Ok(n), Ok(d)) => Rational::Small { num: n, den: d },
            _ => Rational::Big(BigRational::new(BigInt::from(num), BigInt::from(den))),
        }
    }

    /// Canonicalize a big rational, demoting when it fits.
    fn from_big(r: BigRational) -> Rational {
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_u64()) {
            return Rational::Small { num: n, den: d };
        }
        Rational::Big(r)
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rational::Small { num, den } => {
                BigRational::new(BigInt::from(*num), BigInt::from(*den))
            }
            Rational::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rational::Small { num: 0, .. })
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rational::Small { num: 1, den: 1 })
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rational::Small { num, .. } => *num < 0,
            Rational::Big(r) => r.is_negative(),
        }
    }

    fn add(&self, other: &Rational) -> Rational {
        match (self, other) {
            (Rational::Small { num: an, den: ad }, Rational::Small { num: bn, den: bd }) => {
                let left = (*an as i128).checked_mul(*bd as i128);
                let right = (*bn as i128).checked_mul(*ad as i128);
                match (left, right) {
                    (Some(l), Some(r)) => match l.checked_add(r) {
                        Some(num) => Rational::from_parts_i128(num, *ad as u128 * *bd as u128),
                        None => Rational::from_big(self.to_big() + other.to_big()),
                    },
                    _ => Rational::from_big(self.to_big() + other.to_big()),
                }
            }
            _ => Rational::from_big(self.to_big() + other.to_big()),
        }
    }

    fn neg(&self) -> Rational {
        match self {
            Rational::Small { num, den } => match num.checked_neg() {
                Some(n) => Rational::Small { num: n, den: *den },
                None => Rational::from_big(-self.to_big()),
            },
            Rational::Big(r) => Rational::from_big(-r.clone()),
        }
    }

    fn sub(&self, other: &Rational) -> Rational {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Rational) -> Rational {
        match (self, other) {
            (Rational::Small { num: an, den: ad }, Rational::Small { num: bn, den: bd }) => {
                // i64 * i64 always fits i128, and u64 * u64 fits u128.
                let num = *an as i128 * *bn as i128;
                let den = *ad as u128 * *bd as u128;
                Rational::from_parts_i128(num, den)
            }
            _ => Rational::from_big(self.to_big() * other.to_big()),
        }
    }

    fn recip(&self) -> Rational {
        debug_assert!(!self.is_zero());
        match self {
            Rational::Small { num, den } => {
                let sign = if *num < 0 { -1 } else { 1 };
                Rational::from_parts_i128(sign * *den as i128, num.unsigned_abs() as u128)
            }
            Rational::Big(r) => Rational::from_big(r.recip()),
        }
    }
}

/// An element of a [`FieldCtx`], in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElem {
    Rat(Rational),
    Mod { value: u64, p: u64 },
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Extended Euclid inverse of `a` modulo the prime `p`; `a` must be nonzero mod p.
fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "inverse of a non-unit");
    t.rem_euclid(p as i128) as u64
}

impl FieldCtx {
    /// Field over the rationals.
    pub fn rationals() -> FieldCtx {
        FieldCtx::Rationals
    }

    /// Prime field F_p; the modulus is trial-divided at construction.
    pub fn prime_field(p: u64) -> Result<FieldCtx> {
        if is_prime(p) {
            Ok(FieldCtx::PrimeField(p))
        } else {
            Err(Error::NonPrimeModulus(p))
        }
    }

    /// Number of elements, or `None` over Q.
    pub fn size(&self) -> Option<u64> {
        match self {
            FieldCtx::Rationals => None,
            FieldCtx::PrimeField(p) => Some(*p),
        }
    }

    pub fn zero(&self) -> FieldElem {
        match self {
            FieldCtx::Rationals => FieldElem::Rat(Rational::zero()),
            FieldCtx::PrimeField(p) => FieldElem::Mod { value: 0, p: *p },
        }
    }

    pub fn one(&self) -> FieldElem {
        match self {
            FieldCtx::Rationals => FieldElem::Rat(Rational::one()),
            FieldCtx::PrimeField(p) => FieldElem::Mod { value: 1, p: *p },
        }
    }

    pub fn from_i64(&self, n: i64) -> FieldElem {
        match self {
            FieldCtx::Rationals => FieldElem::Rat(Rational::from_i64(n)),
            FieldCtx::PrimeField(p) => FieldElem::Mod {
                value: n.rem_euclid(*p as i64) as u64,
                p: *p,
            },
        }
    }

    /// The fraction `num/den` as a field element.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<FieldElem> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.from_i64(num);
        let d = self.from_i64(den);
        self.div(&n, &d)
    }

    /// The j-th canonical element: 0, 1, 2, ... (used for Vandermonde
    /// parameters). Over F_p requires `j < p`.
    pub fn nth_element(&self, j: u64) -> Result<FieldElem> {
        match self {
            FieldCtx::Rationals => {
                let r = match i64::try_from(j) {
                    Ok(n) => Rational::from_i64(n),
                    Err(_) => Rational::from_big(BigRational::from(BigInt::from(j))),
                };
                Ok(FieldElem::Rat(r))
            }
            FieldCtx::PrimeField(p) => {
                if j >= *p {
                    Err(Error::FieldTooSmall {
                        needed: j + 1,
                        available: *p,
                    })
                } else {
                    Ok(FieldElem::Mod { value: j, p: *p })
                }
            }
        }
    }

    fn check(&self, e: &FieldElem) -> Result<()> {
        match (self, e) {
            (FieldCtx::Rationals, FieldElem::Rat(_)) => Ok(()),
            (FieldCtx::PrimeField(p), FieldElem::Mod { p: q, .. }) if p == q => Ok(()),
            _ => Err(Error::ContextMismatch),
        }
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (a, b) {
            (FieldElem::Rat(x), FieldElem::Rat(y)) => FieldElem::Rat(x.add(y)),
            (FieldElem::Mod { value: x, p }, FieldElem::Mod { value: y, .. }) => FieldElem::Mod {
                value: (x + y) % p,
                p: *p,
            },
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (a, b) {
            (FieldElem::Rat(x), FieldElem::Rat(y)) => FieldElem::Rat(x.sub(y)),
            (FieldElem::Mod { value: x, p }, FieldElem::Mod { value: y, .. }) => FieldElem::Mod {
                value: (x + p - y) % p,
                p: *p,
            },
            _ => unreachable!(),
        })
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (a, b) {
            (FieldElem::Rat(x), FieldElem::Rat(y)) => FieldElem::Rat(x.mul(y)),
            (FieldElem::Mod { value: x, p }, FieldElem::Mod { value: y, .. }) => FieldElem::Mod {
                value: ((*x as u128 * *y as u128) % *p as u128) as u64,
                p: *p,
            },
            _ => unreachable!(),
        })
    }

    pub fn neg(&self, a: &FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        Ok(match a {
            FieldElem::Rat(x) => FieldElem::Rat(x.neg()),
            FieldElem::Mod { value, p } => FieldElem::Mod {
                value: (p - value) % p,
                p: *p,
            },
        })
    }

    pub fn inv(&self, a: &FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match a {
            FieldElem::Rat(x) => FieldElem::Rat(x.recip()),
            FieldElem::Mod { value, p } => FieldElem::Mod {
                value: mod_inverse(*value, *p),
                p: *p,
            },
        })
    }

    pub fn div(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        let ib = self.inv(b)?;
        self.mul(a, &ib)
    }

    pub fn pow(&self, a: &FieldElem, mut e: u64) -> Result<FieldElem> {
        self.check(a)?;
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base)?;
            }
            base = self.mul(&base, &base)?;
            e >>= 1;
        }
        Ok(acc)
    }
}

impl FieldElem {
    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rat(x) => x.is_zero(),
            FieldElem::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Rat(x) => x.is_one(),
            FieldElem::Mod { value, .. } => *value == 1,
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small { num, den } => {
                if *den == 1 {
                    write!(f, "{}", num)
                } else {
                    write!(f, "{}/{}", num, den)
                }
            }
            Rational::Big(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rat(x) => write!(f, "{}", x),
            FieldElem::Mod { value, .. } => write!(f, "{}", value),
        }
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldCtx::Rationals => write!(f, "Q"),
            FieldCtx::PrimeField(p) => write!(f, "F{}", p),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_contexts() {
        assert_eq!(FieldCtx::rationals(), FieldCtx::Rationals);
        assert_eq!(FieldCtx::prime_field(5).unwrap(), FieldCtx::PrimeField(5));
        assert_eq!(FieldCtx::prime_field(4), Err(Error::NonPrimeModulus(4)));
        assert_eq!(FieldCtx::prime_field(1), Err(Error::NonPrimeModulus(1)));
    }

    #[test]
    fn rational_inverse() {
        let q = FieldCtx::rationals();
        let x = q.from_ratio(2, 3).unwrap();
        assert_eq!(q.inv(&x).unwrap(), q.from_ratio(3, 2).unwrap());
    }

    #[test]
    fn prime_field_arith() {
        let f5 = FieldCtx::prime_field(5).unwrap();
        assert_eq!(f5.inv(&f5.from_i64(2)).unwrap(), f5.from_i64(3));
        assert_eq!(
            f5.add(&f5.from_i64(4), &f5.from_i64(3)).unwrap(),
            f5.from_i64(2)
        );
        assert_eq!(f5.from_i64(-1), f5.from_i64(4));
    }

    #[test]
    fn inv_zero_fails() {
        let q = FieldCtx::rationals();
        assert_eq!(q.inv(&q.zero()), Err(Error::DivisionByZero));
        let f7 = FieldCtx::prime_field(7).unwrap();
        assert_eq!(f7.inv(&f7.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn context_mismatch_detected() {
        let q = FieldCtx::rationals();
        let f5 = FieldCtx::prime_field(5).unwrap();
        let f7 = FieldCtx::prime_field(7).unwrap();
        assert_eq!(q.add(&q.one(), &f5.one()), Err(Error::ContextMismatch));
        assert_eq!(f5.add(&f5.one(), &f7.one()), Err(Error::ContextMismatch));
    }

    #[test]
    fn field_axioms_sampled() {
        // Associativity, distributivity and inverses over a deterministic
        // sample of triples for both contexts.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let ctxs = [FieldCtx::rationals(), FieldCtx::prime_field(101).unwrap()];
        for ctx in ctxs {
            for _ in 0..200 {
                let a = ctx.from_i64((next() % 41) as i64 - 20);
                let b = ctx.from_i64((next() % 41) as i64 - 20);
                let c = ctx.from_i64((next() % 41) as i64 - 20);
                let ab_c = ctx.add(&ctx.add(&a, &b).unwrap(), &c).unwrap();
                let a_bc = ctx.add(&a, &ctx.add(&b, &c).unwrap()).unwrap();
                assert_eq!(ab_c, a_bc);
                let left = ctx.mul(&a, &ctx.add(&b, &c).unwrap()).unwrap();
                let right = ctx
                    .add(&ctx.mul(&a, &b).unwrap(), &ctx.mul(&a, &c).unwrap())
                    .unwrap();
                assert_eq!(left, right);
                if !a.is_zero() {
                    let i = ctx.inv(&a).unwrap();
                    assert!(ctx.mul(&a, &i).unwrap().is_one());
                }
                let z = ctx.add(&a, &ctx.neg(&a).unwrap()).unwrap();
                assert!(z.is_zero());
            }
        }
    }

    #[test]
    fn canonical_form_is_stable() {
        let q = FieldCtx::rationals();
        let a = q.from_ratio(4, 6).unwrap();
        let b = q.from_ratio(2, 3).unwrap();
        assert_eq!(a, b);
        let f5 = FieldCtx::prime_field(5).unwrap();
        assert_eq!(f5.from_i64(12), f5.from_i64(7));
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let q = FieldCtx::rationals();
        // Square a large value repeatedly to force the big representation,
        // then shrink back down and compare against the inline form.
        let big = q.from_i64(i64::MAX);
        let sq = q.mul(&big, &big).unwrap();
        assert!(matches!(&sq, FieldElem::Rat(Rational::Big(_))));
        let back = q.div(&sq, &big).unwrap();
        assert!(matches!(&back, FieldElem::Rat(Rational::Small { .. })));
        assert_eq!(back, big);

        // Addition near the i64 boundary promotes without losing exactness.
        let half = q.from_ratio(i64::MAX, 2).unwrap();
        let sum = q.add(&half, &half).unwrap();
        assert_eq!(sum, big);
        let third = q.from_ratio(1, 3).unwrap();
        let mix = q.add(&q.mul(&big, &big).unwrap(), &third).unwrap();
        let round = q.sub(&mix, &third).unwrap();
        assert_eq!(round, sq);
    }

    #[test]
    fn canonical_representation_is_value_determined() {
        // Equal values always share the representation arm, so equality and
        // hashing are sound across promotion boundaries.
        let q = FieldCtx::rationals();
        let a = q.from_i64(7);
        let big = q.from_i64(i64::MAX);
        let b = q
            .sub(&q.mul(&big, &big).unwrap(), &q.mul(&big, &big).unwrap())
            .unwrap();
        let b = q.add(&b, &q.from_i64(7)).unwrap();
        assert_eq!(a, b);
        assert!(matches!(
            &b,
            FieldElem::Rat(Rational::Small { num: 7, den: 1 })
        ));
    }

    #[test]
    fn min_i64_negation() {
        let q = FieldCtx::rationals();
        let min = q.from_i64(i64::MIN);
        let neg = q.neg(&min).unwrap();
        let back = q.neg(&neg).unwrap();
        assert_eq!(back, min);
        assert!(q.add(&min, &neg).unwrap().is_zero());
    }
}
