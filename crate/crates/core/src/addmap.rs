//! Base-linear additive maps `R -> R`, stored as square matrices.
//!
//! Column `j` of the matrix holds the coordinates of the image of `e_j`,
//! so `matrix[i][j]` is the `e_i` coefficient of `m(e_j)`.

use crate::algebra::{AlgElem, Algebra};
use crate::linalg::{self, Vector};
use crate::scalar::BaseRing;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MapError {
    #[error("matrix must be {expected}x{expected}")]
    DimensionMismatch { expected: usize },
    #[error("no repetition among the first {bound} powers of a map over a characteristic-zero base")]
    OrbitBoundExceeded { bound: usize },
}

pub const DEFAULT_ORBIT_BOUND: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AddMap<E> {
    matrix: Vec<Vec<E>>,
}

impl<E: Clone> AddMap<E> {
    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<E>] {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> &E {
        &self.matrix[i][j]
    }
}

impl<E: Clone + Eq> AddMap<E> {
    pub fn from_matrix<B: BaseRing<Elem = E>>(alg: &Algebra<B>, matrix: Vec<Vec<E>>) -> Result<Self, MapError> {
        let d = alg.dim();
        if matrix.len() != d || matrix.iter().any(|r| r.len() != d) {
            return Err(MapError::DimensionMismatch { expected: d });
        }
        Ok(Self { matrix })
    }

    /// The map whose value on `e_j` is `images[j]`.
    pub fn from_images<B: BaseRing<Elem = E>>(alg: &Algebra<B>, images: &[AlgElem<E>]) -> Result<Self, MapError> {
        let d = alg.dim();
        if images.len() != d || images.iter().any(|v| v.len() != d) {
            return Err(MapError::DimensionMismatch { expected: d });
        }
        Ok(Self { matrix: (0..d).map(|i| (0..d).map(|j| images[j].coords[i].clone()).collect()).collect() })
    }

    pub fn identity<B: BaseRing<Elem = E>>(base: &B, dim: usize) -> Self {
        let matrix = (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { base.one() } else { base.zero() }).collect())
            .collect();
        Self { matrix }
    }

    pub fn zero<B: BaseRing<Elem = E>>(base: &B, dim: usize) -> Self {
        Self { matrix: vec![vec![base.zero(); dim]; dim] }
    }

    pub fn is_zero<B: BaseRing<Elem = E>>(&self, base: &B) -> bool {
        self.matrix.iter().all(|r| linalg::is_zero_vector(base, r))
    }

    pub fn apply<B: BaseRing<Elem = E>>(&self, base: &B, r: &AlgElem<E>) -> AlgElem<E> {
        AlgElem::new(linalg::mat_vec(base, &self.matrix, &r.coords))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose<B: BaseRing<Elem = E>>(&self, base: &B, other: &Self) -> Self {
        let d = self.dim();
        let mut matrix = vec![vec![base.zero(); d]; d];
        for (i, row) in matrix.iter_mut().enumerate() {
            for k in 0..d {
                let a = &self.matrix[i][k];
                if base.is_zero(a) {
                    continue;
                }
                linalg::axpy(base, row, a, &other.matrix[k]);
            }
        }
        Self { matrix }
    }

    pub fn add<B: BaseRing<Elem = E>>(&self, base: &B, other: &Self) -> Self {
        Self { matrix: self.matrix.iter().zip(&other.matrix).map(|(a, b)| linalg::add_vectors(base, a, b)).collect() }
    }

    pub fn sub<B: BaseRing<Elem = E>>(&self, base: &B, other: &Self) -> Self {
        Self {
            matrix: self
                .matrix
                .iter()
                .zip(&other.matrix)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| base.sub(x, y)).collect())
                .collect(),
        }
    }

    pub fn scale<B: BaseRing<Elem = E>>(&self, base: &B, c: &E) -> Self {
        Self { matrix: self.matrix.iter().map(|r| linalg::scale_vector(base, c, r)).collect() }
    }

    pub fn power<B: BaseRing<Elem = E>>(&self, base: &B, n: u64) -> Self {
        let mut acc = Self::identity(base, self.dim());
        let mut sq = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.compose(base, &sq);
            }
            n >>= 1;
            if n > 0 {
                sq = sq.compose(base, &sq);
            }
        }
        acc
    }

    /// Kernel of the map, as a basis (generating set over `Z_n`).
    pub fn kernel<B: BaseRing<Elem = E>>(&self, base: &B) -> Vec<Vector<B>> {
        linalg::kernel(base, &self.matrix, self.dim())
    }

    /// `m^0, m^1, …` up to (excluding) the first power equal to an earlier
    /// one. Over characteristic zero the search stops with an error after
    /// `bound` powers.
    pub fn power_orbit<B: BaseRing<Elem = E>>(&self, base: &B, bound: usize) -> Result<PowerOrbit<E>, MapError> {
        let mut powers = vec![Self::identity(base, self.dim())];
        loop {
            let next = powers.last().expect("nonempty").compose(base, self);
            if let Some(pos) = powers.iter().position(|p| *p == next) {
                return Ok(PowerOrbit { powers, cycle_start: pos });
            }
            if base.characteristic() == 0 && powers.len() >= bound {
                return Err(MapError::OrbitBoundExceeded { bound });
            }
            powers.push(next);
        }
    }

    /// Leibniz rule `m(rs) = m(r)s + r m(s)` over all basis pairs.
    pub fn is_derivation<B: BaseRing<Elem = E>>(&self, alg: &Algebra<B>) -> bool {
        self.leibniz_violation(alg).is_none()
    }

    /// First basis pair `(i, j)` on which the Leibniz rule fails.
    pub fn leibniz_violation<B: BaseRing<Elem = E>>(&self, alg: &Algebra<B>) -> Option<(usize, usize)> {
        let base = alg.base();
        let basis = alg.basis_elements();
        for (i, r) in basis.iter().enumerate() {
            for (j, s) in basis.iter().enumerate() {
                let lhs = self.apply(base, &alg.product(r, s));
                let rhs = alg.sum(&alg.product(&self.apply(base, r), s), &alg.product(r, &self.apply(base, s)));
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Whether `m(t r) = t m(r)` (`left`) or `m(r t) = m(r) t` for every
    /// basis `r` and every `t` in `scalars`.
    pub fn is_linear_over<B: BaseRing<Elem = E>>(&self, alg: &Algebra<B>, scalars: &[AlgElem<E>], left: bool) -> bool {
        let base = alg.base();
        scalars.iter().all(|t| {
            alg.basis_elements().iter().all(|r| {
                if left {
                    self.apply(base, &alg.product(t, r)) == alg.product(t, &self.apply(base, r))
                } else {
                    self.apply(base, &alg.product(r, t)) == alg.product(&self.apply(base, r), t)
                }
            })
        })
    }
}

/// Consecutive powers of a map until the sequence starts repeating.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerOrbit<E> {
    pub powers: Vec<AddMap<E>>,
    /// `m^len == m^cycle_start`.
    pub cycle_start: usize,
}

impl<E: Clone> PowerOrbit<E> {
    /// Index into `powers` of `m^n`, for any exponent.
    pub fn index_of(&self, n: u64) -> usize {
        let len = self.powers.len() as u64;
        if n < len {
            return n as usize;
        }
        let start = self.cycle_start as u64;
        (start + (n - start) % (len - start)) as usize
    }

    pub fn get(&self, n: u64) -> &AddMap<E> {
        &self.powers[self.index_of(n)]
    }
}
