//! Exact field arithmetic behind one uniform contract.
//!
//! Two fields are provided: the rationals with arbitrary-precision
//! numerator and denominator ([`Rational`]), and prime fields GF(p) for
//! p < 2^31 ([`Fp`]). Elements carry their field identity, so mixing
//! elements of GF(7) and GF(11) is detectable at the operation
//! boundaries that return [`Error::FieldMismatch`].
//!
//! All values are immutable after construction and safe to share across
//! threads.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::{Error, Result};

/// Magnitude bound for sampled rationals: numerators in [-B, B],
/// denominators in [1, B]. Small values keep cross-of-cross coordinates
/// readable while still exercising sign and cancellation paths.
pub const SAMPLE_MAGNITUDE: i64 = 10;

/// Commutative ring operations. Implemented by field elements and by
/// the sparse polynomials in [`crate::symbolic`], so determinant kernels
/// can be written once over generic entries.
pub trait Ring: Clone {
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
}

/// An exact element of a field.
///
/// `add`, `sub` and `mul` (from [`Ring`]) require both operands to lie in
/// the same field; callers that accept untrusted pairs check
/// [`Field::same_field`] first and surface [`Error::FieldMismatch`].
pub trait Field:
    Ring + PartialEq + Eq + std::hash::Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// Descriptor from which elements of this field are made.
    type Ctx: FieldCtx<Elem = Self>;

    fn ctx(&self) -> Self::Ctx;
    fn same_field(&self, other: &Self) -> bool;
    fn is_one(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;

    /// Multiplicative inverse. Fails on zero.
    fn inv(&self) -> Result<Self>;

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }
}

/// A field descriptor: knows how to build, parse and sample elements.
#[allow(clippy::wrong_self_convention)] // from_* here converts *into* the field
pub trait FieldCtx: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync {
    type Elem: Field<Ctx = Self>;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// Image of an arbitrary-precision integer under the canonical map
    /// Z -> F (used when evaluating integer polynomials in this field).
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    /// Parse the textual element form: "a/b" or "a" for rationals,
    /// a decimal residue for GF(p).
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;
    /// Draw one element: uniform residue for GF(p); for rationals,
    /// numerator uniform in [-B, B] and denominator in [1, B] with
    /// B = [`SAMPLE_MAGNITUDE`].
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    /// Selector string: "rational" or "gf:<p>".
    fn name(&self) -> String;
}

// ---------------------------------------------------------------------------
// Rationals
// ---------------------------------------------------------------------------

/// An exact rational number in lowest terms with positive denominator.
/// Zero is 0/1. The canonical form makes equality a plain value comparison.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(BigRational);

/// Descriptor for the rational field.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Rationals;

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::ParseError("zero denominator".into()));
        }
        Ok(Rational(BigRational::new(numer.into(), denom.into())))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Ring for Rational {
    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }
    fn neg(&self) -> Self {
        Rational(-&self.0)
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl Field for Rational {
    type Ctx = Rationals;

    fn ctx(&self) -> Rationals {
        Rationals
    }
    fn same_field(&self, _other: &Self) -> bool {
        true
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn zero_like(&self) -> Self {
        Rational(BigRational::zero())
    }
    fn one_like(&self) -> Self {
        Rational(BigRational::one())
    }
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::InversionOfZero);
        }
        Ok(Rational(self.0.recip()))
    }
}

impl fmt::Display for Rationals {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rational")
    }
}

impl FieldCtx for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational(BigRational::zero())
    }
    fn one(&self) -> Rational {
        Rational(BigRational::one())
    }
    fn from_i64(&self, n: i64) -> Rational {
        Rational::from_integer(n)
    }
    fn from_bigint(&self, n: &BigInt) -> Rational {
        Rational(BigRational::from_integer(n.clone()))
    }
    fn parse_elem(&self, s: &str) -> Result<Rational> {
        let s = s.trim();
        let bad = || Error::ParseError(format!("invalid rational: {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let numer = BigInt::from_str(n.trim()).map_err(|_| bad())?;
                let denom = BigInt::from_str(d.trim()).map_err(|_| bad())?;
                if denom.is_zero() {
                    return Err(Error::ParseError(format!("zero denominator in {s:?}")));
                }
                Ok(Rational(BigRational::new(numer, denom)))
            }
            None => {
                let numer = BigInt::from_str(s).map_err(|_| bad())?;
                Ok(Rational(BigRational::from_integer(numer)))
            }
        }
    }
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Rational {
        let numer = rng.gen_range(-SAMPLE_MAGNITUDE..=SAMPLE_MAGNITUDE);
        let denom = rng.gen_range(1..=SAMPLE_MAGNITUDE);
        Rational(BigRational::new(numer.into(), denom.into()))
    }
    fn name(&self) -> String {
        "rational".into()
    }
}

// ---------------------------------------------------------------------------
// Prime fields GF(p)
// ---------------------------------------------------------------------------

/// An element of GF(p), stored as the residue in [0, p) together with the
/// modulus. The modulus is capped below 2^31 so sums stay in `u32` and
/// products in a widening `u64` multiply.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u32,
    modulus: u32,
}

/// Descriptor for GF(p). Construction checks primality, so every live
/// `PrimeField` really is a field.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u32,
}

/// Deterministic trial division up to sqrt(n). Instant for n < 2^31.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    /// Build the GF(p) descriptor, rejecting composite or oversized moduli.
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 31 {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn elem(&self, value: u32) -> Fp {
        Fp {
            value: value % self.p,
            modulus: self.p,
        }
    }
}

impl Fp {
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    #[inline]
    fn check_same(&self, rhs: &Self) {
        assert_eq!(
            self.modulus, rhs.modulus,
            "mixed GF({}) and GF({}) operands",
            self.modulus, rhs.modulus
        );
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Ring for Fp {
    #[inline]
    fn add(&self, rhs: &Self) -> Self {
        self.check_same(rhs);
        let s = self.value + rhs.value;
        Fp {
            value: if s >= self.modulus { s - self.modulus } else { s },
            modulus: self.modulus,
        }
    }
    #[inline]
    fn sub(&self, rhs: &Self) -> Self {
        self.check_same(rhs);
        let value = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.value + self.modulus - rhs.value
        };
        Fp {
            value,
            modulus: self.modulus,
        }
    }
    #[inline]
    fn mul(&self, rhs: &Self) -> Self {
        self.check_same(rhs);
        Fp {
            value: (self.value as u64 * rhs.value as u64 % self.modulus as u64) as u32,
            modulus: self.modulus,
        }
    }
    #[inline]
    fn neg(&self) -> Self {
        Fp {
            value: if self.value == 0 {
                0
            } else {
                self.modulus - self.value
            },
            modulus: self.modulus,
        }
    }
    #[inline]
    fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl Field for Fp {
    type Ctx = PrimeField;

    fn ctx(&self) -> PrimeField {
        PrimeField { p: self.modulus }
    }
    fn same_field(&self, other: &Self) -> bool {
        self.modulus == other.modulus
    }
    fn is_one(&self) -> bool {
        self.value == 1
    }
    fn zero_like(&self) -> Self {
        Fp {
            value: 0,
            modulus: self.modulus,
        }
    }
    fn one_like(&self) -> Self {
        Fp {
            value: 1 % self.modulus,
            modulus: self.modulus,
        }
    }

    /// Extended Euclid; p prime guarantees gcd(value, p) = 1 for value != 0.
    fn inv(&self) -> Result<Self> {
        if self.value == 0 {
            return Err(Error::InversionOfZero);
        }
        let (mut t, mut new_t): (i64, i64) = (0, 1);
        let (mut r, mut new_r): (i64, i64) = (self.modulus as i64, self.value as i64);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        debug_assert_eq!(r, 1);
        if t < 0 {
            t += self.modulus as i64;
        }
        Ok(Fp {
            value: t as u32,
            modulus: self.modulus,
        })
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

impl FieldCtx for PrimeField {
    type Elem = Fp;

    fn zero(&self) -> Fp {
        Fp {
            value: 0,
            modulus: self.p,
        }
    }
    fn one(&self) -> Fp {
        Fp {
            value: 1 % self.p,
            modulus: self.p,
        }
    }
    fn from_i64(&self, n: i64) -> Fp {
        let p = self.p as i64;
        Fp {
            value: n.rem_euclid(p) as u32,
            modulus: self.p,
        }
    }
    fn from_bigint(&self, n: &BigInt) -> Fp {
        let p = BigInt::from(self.p);
        let mut r = n % &p;
        if r.is_negative() {
            r += &p;
        }
        let (_, digits) = r.to_u32_digits();
        Fp {
            value: digits.first().copied().unwrap_or(0),
            modulus: self.p,
        }
    }
    fn parse_elem(&self, s: &str) -> Result<Fp> {
        let n: i64 = s
            .trim()
            .parse()
            .map_err(|_| Error::ParseError(format!("invalid GF({}) residue: {s:?}", self.p)))?;
        Ok(self.from_i64(n))
    }
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Fp {
        Fp {
            value: rng.gen_range(0..self.p),
            modulus: self.p,
        }
    }
    fn name(&self) -> String {
        format!("gf:{}", self.p)
    }
}

// ---------------------------------------------------------------------------
// Field selectors
// ---------------------------------------------------------------------------

/// Runtime choice of field, parsed from "rational" or "gf:<p>".
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FieldSelector {
    Rational,
    Gf(PrimeField),
}

impl FromStr for FieldSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "rational" {
            return Ok(FieldSelector::Rational);
        }
        if let Some(p) = s.strip_prefix("gf:") {
            let p: u64 = p
                .trim()
                .parse()
                .map_err(|_| Error::ParseError(format!("invalid field selector: {s:?}")))?;
            return Ok(FieldSelector::Gf(PrimeField::new(p)?));
        }
        Err(Error::ParseError(format!(
            "invalid field selector {s:?} (expected \"rational\" or \"gf:<p>\")"
        )))
    }
}

impl fmt::Display for FieldSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSelector::Rational => write!(f, "rational"),
            FieldSelector::Gf(field) => write!(f, "gf:{}", field.modulus()),
        }
    }
}
