//! Exact base scalars.
//!
//! Every structure in this crate is generic over a [`BaseRing`], a small
//! context object that owns the arithmetic of its element type. Moduli are
//! runtime values (they come from configuration files), so the context is
//! carried explicitly instead of being baked into the element type.
//!
//! Two families are provided:
//!
//! * [`Residues`]: the prime fields `F_p` and the modular rings `Z_n`.
//! * [`Exact<T>`]: any characteristic-zero exact field whose element type
//!   implements the `num-traits` numeric traits, e.g. `BigRational`.

use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
    #[error("unknown base tag {0:?} (expected \"Fp:<p>\", \"Zn:<n>\" or \"Q\")")]
    UnknownTag(String),
}

/// Arithmetic context for an exact commutative scalar ring.
pub trait BaseRing: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, if it exists.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Image of an integer under the canonical map `Z -> base`.
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    /// `0` for characteristic-zero fields.
    fn characteristic(&self) -> u64;
    fn is_field(&self) -> bool;
    /// All elements, when the ring is finite.
    fn elements(&self) -> Option<Vec<Self::Elem>>;
    /// The canonical residue in `[0, n)` for modular bases.
    fn residue(&self, a: &Self::Elem) -> Option<u64>;
    fn parse(&self, s: &str) -> Result<Self::Elem, ScalarError>;
    fn format(&self, a: &Self::Elem) -> String;
    /// Configuration tag such as `"Fp:5"`.
    fn tag(&self) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }

    /// Number of elements, when finite.
    fn size(&self) -> Option<u64> {
        match self.characteristic() {
            0 => None,
            n => Some(n),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `Z/nZ`, flagged as a field when `n` is prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residues {
    modulus: u64,
    prime: bool,
    tagged_prime: bool,
}

impl Residues {
    /// The prime field `F_p`; rejects composite `p`.
    pub fn prime_field(p: u64) -> Result<Self, ScalarError> {
        if !is_prime(p) {
            return Err(ScalarError::NotPrime(p));
        }
        Ok(Self { modulus: p, prime: true, tagged_prime: true })
    }

    /// The modular ring `Z_n`, `n >= 2`.
    pub fn integers_mod(n: u64) -> Result<Self, ScalarError> {
        if n < 2 {
            return Err(ScalarError::ModulusTooSmall(n));
        }
        Ok(Self { modulus: n, prime: is_prime(n), tagged_prime: false })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn reduce_i128(&self, v: i128) -> u64 {
        v.rem_euclid(self.modulus as i128) as u64
    }
}

impl BaseRing for Residues {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.modulus
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.modulus as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.modulus as u128) as u64
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        let g = (*a as i128).extended_gcd(&(self.modulus as i128));
        if g.gcd != 1 {
            return None;
        }
        Some(self.reduce_i128(g.x))
    }

    fn from_bigint(&self, n: &BigInt) -> u64 {
        let m = BigInt::from(self.modulus);
        n.mod_floor(&m).to_u64().expect("residue fits in u64")
    }

    fn characteristic(&self) -> u64 {
        self.modulus
    }

    fn is_field(&self) -> bool {
        self.prime
    }

    fn elements(&self) -> Option<Vec<u64>> {
        Some((0..self.modulus).collect())
    }

    fn residue(&self, a: &u64) -> Option<u64> {
        Some(*a)
    }

    fn parse(&self, s: &str) -> Result<u64, ScalarError> {
        let t = s.trim();
        let v: BigInt = t.parse().map_err(|_| ScalarError::Parse(s.to_string()))?;
        Ok(self.from_bigint(&v))
    }

    fn format(&self, a: &u64) -> String {
        a.to_string()
    }

    fn tag(&self) -> String {
        if self.tagged_prime {
            format!("Fp:{}", self.modulus)
        } else {
            format!("Zn:{}", self.modulus)
        }
    }
}

/// A characteristic-zero exact field backed by a `num-traits` numeric type.
pub struct Exact<T>(PhantomData<fn() -> T>);

impl<T> Exact<T> {
    pub fn new() -> Self {
        Exact(PhantomData)
    }
}

impl<T> Default for Exact<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T> Clone for Exact<T> {
    fn clone(&self) -> Self {
        Self::new()
    }
}

impl<T> Copy for Exact<T> {}

impl<T> PartialEq for Exact<T> {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl<T> fmt::Debug for Exact<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Exact<{}>", std::any::type_name::<T>())
    }
}

impl<T> BaseRing for Exact<T>
where
    T: Num + Signed + Clone + fmt::Debug + fmt::Display + Eq + Hash + Send + Sync + 'static,
{
    type Elem = T;

    fn zero(&self) -> T {
        T::zero()
    }

    fn one(&self) -> T {
        T::one()
    }

    fn add(&self, a: &T, b: &T) -> T {
        a.clone() + b.clone()
    }

    fn neg(&self, a: &T) -> T {
        -a.clone()
    }

    fn sub(&self, a: &T, b: &T) -> T {
        a.clone() - b.clone()
    }

    fn mul(&self, a: &T, b: &T) -> T {
        a.clone() * b.clone()
    }

    fn inv(&self, a: &T) -> Option<T> {
        if a.is_zero() {
            None
        } else {
            Some(T::one() / a.clone())
        }
    }

    fn from_bigint(&self, n: &BigInt) -> T {
        parse_signed::<T>(&n.to_str_radix(10)).unwrap_or_else(|| panic!("integer {n} not representable"))
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn is_field(&self) -> bool {
        true
    }

    fn elements(&self) -> Option<Vec<T>> {
        None
    }

    fn residue(&self, _: &T) -> Option<u64> {
        None
    }

    fn is_zero(&self, a: &T) -> bool {
        a.is_zero()
    }

    fn parse(&self, s: &str) -> Result<T, ScalarError> {
        parse_signed::<T>(s).ok_or_else(|| ScalarError::Parse(s.to_string()))
    }

    fn format(&self, a: &T) -> String {
        a.to_string()
    }

    fn tag(&self) -> String {
        "Q".to_string()
    }
}

fn parse_signed<T: Num + Signed>(s: &str) -> Option<T> {
    let t = s.trim();
    let (negative, digits) = match t.strip_prefix('-') {
        Some(rest) => (true, rest.trim_start()),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    if digits.starts_with(['-', '+']) {
        return None;
    }
    let v = T::from_str_radix(digits, 10).or_else(|_| T::from_str_radix(&format!("{digits}/1"), 10)).ok()?;
    Some(if negative { -v } else { v })
}

/// A parsed base tag, before the concrete context is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseTag {
    Prime(u64),
    Modular(u64),
    Rational,
}

impl std::str::FromStr for BaseTag {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, ScalarError> {
        let s = s.trim();
        if s == "Q" {
            return Ok(BaseTag::Rational);
        }
        let parse_n = |rest: &str| rest.trim().parse::<u64>().map_err(|_| ScalarError::UnknownTag(s.to_string()));
        if let Some(rest) = s.strip_prefix("Fp:") {
            let p = parse_n(rest)?;
            if !is_prime(p) {
                return Err(ScalarError::NotPrime(p));
            }
            Ok(BaseTag::Prime(p))
        } else if let Some(rest) = s.strip_prefix("Zn:") {
            let n = parse_n(rest)?;
            if n < 2 {
                return Err(ScalarError::ModulusTooSmall(n));
            }
            Ok(BaseTag::Modular(n))
        } else {
            Err(ScalarError::UnknownTag(s.to_string()))
        }
    }
}

/// Exact binomial coefficient `C(m, n)`, zero when `n > m`.
pub fn binomial(m: u64, n: u64) -> BigInt {
    if n > m {
        return BigInt::zero();
    }
    let n = n.min(m - n);
    let mut acc = BigInt::one();
    for i in 0..n {
        acc = acc * BigInt::from(m - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rationals;
    use num_rational::BigRational;

    #[test]
    fn residues_reduce() {
        let f5 = Residues::prime_field(5).unwrap();
        assert_eq!(f5.add(&3, &4), 2);
        assert_eq!(f5.neg(&2), 3);
        assert_eq!(f5.inv(&2), Some(3));
        assert_eq!(f5.from_i64(-1), 4);
        assert_eq!(f5.parse("-7").unwrap(), 3);
        let z4 = Residues::integers_mod(4).unwrap();
        assert_eq!(z4.inv(&2), None);
        assert!(!z4.is_field());
        assert_eq!(z4.tag(), "Zn:4");
    }

    #[test]
    fn rejects_bad_moduli() {
        assert_eq!(Residues::prime_field(4), Err(ScalarError::NotPrime(4)));
        assert_eq!(Residues::integers_mod(1), Err(ScalarError::ModulusTooSmall(1)));
        assert_eq!("Fp:4".parse::<BaseTag>(), Err(ScalarError::NotPrime(4)));
        assert_eq!("Zn:4".parse::<BaseTag>(), Ok(BaseTag::Modular(4)));
        assert_eq!("Q".parse::<BaseTag>(), Ok(BaseTag::Rational));
        assert!("R".parse::<BaseTag>().is_err());
    }

    #[test]
    fn rationals_lowest_terms() {
        let q = Rationals::new();
        let a = q.parse("6/4").unwrap();
        assert_eq!(q.format(&a), "3/2");
        let b = q.parse("-1/3").unwrap();
        assert_eq!(q.format(&q.add(&a, &b)), "7/6");
        assert_eq!(q.inv(&a).unwrap(), BigRational::new(2.into(), 3.into()));
        assert!(q.parse("1/0").is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 3), BigInt::zero());
        assert_eq!(binomial(7, 0), BigInt::one());
    }

    proptest::proptest! {
        #[test]
        fn add_sub_roundtrip(a in -1000i64..1000, b in -1000i64..1000, n in 2u64..40) {
            let z = Residues::integers_mod(n).unwrap();
            let (x, y) = (z.from_i64(a), z.from_i64(b));
            proptest::prop_assert_eq!(z.sub(&z.add(&x, &y), &y), x);
            let q = Rationals::new();
            let (x, y) = (q.from_i64(a), q.parse(&format!("{b}/7")).unwrap());
            proptest::prop_assert_eq!(q.sub(&q.add(&x, &y), &y), x);
        }
    }
}
