//! Multi-indices in `N^k`: the pointwise partial order, multi-binomials,
//! the graded lexicographical well-order and base-`p` helpers.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::scalar::{binomial, is_prime, BaseRing};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MultiIndexError {
    #[error("cannot subtract {rhs} from {lhs}: not componentwise smaller")]
    SubtractionUnderflow { lhs: MultiIndex, rhs: MultiIndex },
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse multi-index {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(Vec<u64>);

impl MultiIndex {
    pub fn new(exps: Vec<u64>) -> Self {
        Self(exps)
    }

    pub fn zero(arity: usize) -> Self {
        Self(vec![0; arity])
    }

    /// The unit vector with a one in position `i`.
    pub fn unit(arity: usize, i: usize) -> Self {
        let mut v = vec![0; arity];
        v[i] = 1;
        Self(v)
    }

    pub fn exps(&self) -> &[u64] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    /// `|f|`
    pub fn weight(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Indices with a nonzero entry.
    pub fn support(&self) -> Vec<usize> {
        (0..self.arity()).filter(|&i| self.0[i] != 0).collect()
    }

    /// `(-1)^|f|` as `±1`.
    pub fn sign(&self) -> i64 {
        if self.weight().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    fn same_arity(&self, other: &Self) -> Result<(), MultiIndexError> {
        if self.arity() != other.arity() {
            return Err(MultiIndexError::ArityMismatch(self.arity(), other.arity()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, MultiIndexError> {
        self.same_arity(other)?;
        Ok(Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    /// `self ≤ other` componentwise.
    pub fn le(&self, other: &Self) -> bool {
        self.arity() == other.arity() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self - other`, defined when `other ≤ self`.
    pub fn sub(&self, other: &Self) -> Result<Self, MultiIndexError> {
        self.same_arity(other)?;
        if !other.le(self) {
            return Err(MultiIndexError::SubtractionUnderflow { lhs: self.clone(), rhs: other.clone() });
        }
        Ok(Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    /// Graded lexicographical comparison: weight first, then the entry at the
    /// largest index where the two differ.
    pub fn graded_lex_cmp(&self, other: &Self) -> Result<Ordering, MultiIndexError> {
        self.same_arity(other)?;
        Ok(self.graded_lex(other))
    }

    pub(crate) fn graded_lex(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| {
            for i in (0..self.arity()).rev() {
                match self.0[i].cmp(&other.0[i]) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }

    /// Every `g ≤ self`, in graded lexicographical order.
    pub fn divisors(&self) -> Vec<Self> {
        let mut out = vec![Vec::new()];
        for &e in &self.0 {
            out = out.into_iter().flat_map(|p: Vec<u64>| (0..=e).map(move |x| [p.clone(), vec![x]].concat())).collect();
        }
        let mut out: Vec<Self> = out.into_iter().map(Self).collect();
        out.sort_by(|a, b| a.graded_lex(b));
        out
    }

    /// All multi-indices of the given arity and weight at most `cap`, in
    /// graded lexicographical order.
    pub fn up_to_weight(arity: usize, cap: u64) -> Vec<Self> {
        let mut out = Vec::new();
        for w in 0..=cap {
            compositions(arity, w, &mut Vec::new(), &mut out);
        }
        out.sort_by(|a, b| a.graded_lex(b));
        out
    }

    pub fn parse(s: &str) -> Result<Self, MultiIndexError> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| MultiIndexError::Parse(s.to_string()))?;
        if inner.trim().is_empty() {
            return Ok(Self(vec![]));
        }
        inner
            .split(',')
            .map(|x| x.trim().parse::<u64>().map_err(|_| MultiIndexError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()
            .map(Self)
    }
}

fn compositions(parts: usize, total: u64, prefix: &mut Vec<u64>, out: &mut Vec<MultiIndex>) {
    if parts == 0 {
        if total == 0 {
            out.push(MultiIndex(prefix.clone()));
        }
        return;
    }
    if parts == 1 {
        prefix.push(total);
        out.push(MultiIndex(prefix.clone()));
        prefix.pop();
        return;
    }
    for x in 0..=total {
        prefix.push(x);
        compositions(parts - 1, total - x, prefix, out);
        prefix.pop();
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

/// Exact `C(f, g) = Π C(f_i, g_i)`; zero unless `g ≤ f`.
pub fn multi_binomial_exact(f: &MultiIndex, g: &MultiIndex) -> BigInt {
    if !g.le(f) {
        return BigInt::from(0);
    }
    f.0.iter().zip(&g.0).fold(BigInt::one(), |acc, (&m, &n)| acc * binomial(m, n))
}

/// `C(f, g)` reduced into the base.
pub fn multi_binom<B: BaseRing>(base: &B, f: &MultiIndex, g: &MultiIndex) -> B::Elem {
    base.from_bigint(&multi_binomial_exact(f, g))
}

/// `C(m, n) mod p` from the base-`p` digits of `m` and `n`.
pub fn lucas_binom_mod_p(m: u64, n: u64, p: u64) -> Result<u64, MultiIndexError> {
    if !is_prime(p) {
        return Err(MultiIndexError::NotPrime(p));
    }
    let (mut m, mut n) = (m, n);
    let mut acc: u64 = 1;
    while n > 0 || m > 0 {
        let (md, nd) = (m % p, n % p);
        if nd > md {
            return Ok(0);
        }
        let c = binomial(md, nd) % BigInt::from(p);
        acc = acc * u64::try_from(c).expect("digit binomial fits") % p;
        m /= p;
        n /= p;
    }
    Ok(acc % p)
}

/// An exponent in `{-∞} ∪ N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtNat {
    NegInf,
    Fin(u32),
}

/// Componentwise `p^t(i)`, with `p^(-∞) = 0`.
pub fn p_power_index(t: &[ExtNat], p: u64) -> Result<MultiIndex, MultiIndexError> {
    if !is_prime(p) {
        return Err(MultiIndexError::NotPrime(p));
    }
    Ok(MultiIndex(
        t.iter()
            .map(|e| match e {
                ExtNat::NegInf => 0,
                ExtNat::Fin(k) => p.pow(*k),
            })
            .collect(),
    ))
}

/// The `t` with `p^t = f`, if every entry of `f` is zero or a power of `p`.
pub fn p_power_log(f: &MultiIndex, p: u64) -> Option<Vec<ExtNat>> {
    f.0.iter()
        .map(|&e| {
            if e == 0 {
                return Some(ExtNat::NegInf);
            }
            let mut k = 0;
            let mut x = e;
            while x % p == 0 {
                x /= p;
                k += 1;
            }
            (x == 1).then_some(ExtNat::Fin(k))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Residues;
    use proptest::prelude::*;

    fn mi(v: &[u64]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    #[test]
    fn pointwise_ops() {
        assert_eq!(mi(&[1, 2]).add(&mi(&[0, 3])).unwrap(), mi(&[1, 5]));
        assert!(mi(&[1, 1]).le(&mi(&[2, 1])));
        assert!(!mi(&[2, 0]).le(&mi(&[1, 5])));
        assert_eq!(mi(&[2, 3]).sub(&mi(&[1, 1])).unwrap(), mi(&[1, 2]));
        assert!(matches!(mi(&[0, 3]).sub(&mi(&[1, 1])), Err(MultiIndexError::SubtractionUnderflow { .. })));
        assert_eq!(mi(&[1]).add(&mi(&[1, 1])), Err(MultiIndexError::ArityMismatch(1, 2)));
    }

    #[test]
    fn multi_binomials() {
        let f7 = Residues::prime_field(7).unwrap();
        assert_eq!(multi_binom(&f7, &mi(&[2, 1]), &mi(&[1, 1])), 2);
        assert_eq!(multi_binom(&f7, &mi(&[1, 0]), &mi(&[0, 1])), 0);
        let f = mi(&[3, 4]);
        assert_eq!(multi_binom(&f7, &f, &mi(&[0, 0])), 1);
        assert_eq!(multi_binom(&f7, &f, &f), 1);
    }

    #[test]
    fn graded_lex_cases() {
        assert_eq!(mi(&[0, 2]).graded_lex_cmp(&mi(&[1, 2])), Ok(Ordering::Less));
        assert_eq!(mi(&[1, 1]).graded_lex_cmp(&mi(&[0, 2])), Ok(Ordering::Less));
        assert_eq!(mi(&[2, 0]).graded_lex_cmp(&mi(&[1, 1])), Ok(Ordering::Less));
        assert_eq!(mi(&[3, 0]).graded_lex_cmp(&mi(&[3, 0])), Ok(Ordering::Equal));
        assert!(mi(&[1]).graded_lex_cmp(&mi(&[1, 0])).is_err());
    }

    #[test]
    fn lucas_examples() {
        assert_eq!(lucas_binom_mod_p(5, 2, 2), Ok(0));
        for p in [2, 3, 5] {
            for j in 1..p {
                assert_eq!(lucas_binom_mod_p(p, j, p), Ok(0));
            }
            assert_eq!(lucas_binom_mod_p(17, 0, p), Ok(1));
        }
        assert_eq!(lucas_binom_mod_p(5, 2, 4), Err(MultiIndexError::NotPrime(4)));
    }

    #[test]
    fn p_powers() {
        assert_eq!(p_power_index(&[ExtNat::Fin(1), ExtNat::NegInf], 2), Ok(mi(&[2, 0])));
        assert_eq!(p_power_index(&[ExtNat::Fin(0), ExtNat::Fin(0)], 3), Ok(mi(&[1, 1])));
        assert_eq!(p_power_index(&[ExtNat::NegInf, ExtNat::NegInf], 5), Ok(mi(&[0, 0])));
        assert_eq!(p_power_log(&mi(&[4, 0, 1]), 2), Some(vec![ExtNat::Fin(2), ExtNat::NegInf, ExtNat::Fin(0)]));
        assert_eq!(p_power_log(&mi(&[6]), 2), None);
    }

    #[test]
    fn enumeration_and_parse() {
        let all = MultiIndex::up_to_weight(2, 2);
        let shown: Vec<String> = all.iter().map(|m| m.to_string()).collect();
        assert_eq!(shown, ["[0,0]", "[1,0]", "[0,1]", "[2,0]", "[1,1]", "[0,2]"]);
        assert_eq!(mi(&[1, 1]).divisors().len(), 4);
        assert_eq!(MultiIndex::parse("[2, 0,1]").unwrap(), mi(&[2, 0, 1]));
        assert!(MultiIndex::parse("2,0").is_err());
    }

    #[test]
    fn graded_lex_minimum_exists_on_small_sets() {
        // every nonempty subset has a minimum: check all subsets of a small box
        let pts = MultiIndex::up_to_weight(2, 2);
        for mask in 1u32..(1 << pts.len()) {
            let sub: Vec<&MultiIndex> = (0..pts.len()).filter(|i| mask >> i & 1 == 1).map(|i| &pts[i]).collect();
            let min = sub.iter().min_by(|a, b| a.graded_lex(b)).unwrap();
            assert!(sub.iter().all(|x| min.graded_lex(x) != Ordering::Greater));
        }
    }

    proptest! {
        #[test]
        fn graded_lex_is_total_and_extends_le(a in prop::collection::vec(0u64..6, 3), b in prop::collection::vec(0u64..6, 3)) {
            let (f, g) = (MultiIndex::new(a), MultiIndex::new(b));
            let o = f.graded_lex(&g);
            prop_assert_eq!(o.reverse(), g.graded_lex(&f));
            prop_assert_eq!(o == Ordering::Equal, f == g);
            if f.le(&g) && f != g {
                prop_assert_eq!(o, Ordering::Less);
            }
        }

        #[test]
        fn lucas_matches_direct(m in 0u64..200, n in 0u64..200, p in prop::sample::select(vec![2u64, 3, 5])) {
            let direct = binomial(m, n) % BigInt::from(p);
            prop_assert_eq!(BigInt::from(lucas_binom_mod_p(m, n, p).unwrap()), direct);
        }
    }
}
