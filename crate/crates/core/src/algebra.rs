//! Finite-dimensional, possibly non-associative coefficient algebras given by
//! structure constants, and their structural subspaces.

use std::fmt;

use crate::linalg::{self, Vector};
use crate::scalar::BaseRing;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the zero-dimensional algebra is not allowed")]
    ZeroDimension,
    #[error("claimed unit fails on basis vector e{basis} ({side} side)")]
    UnitAxiomViolation { basis: usize, side: &'static str },
}

/// An element of an [`Algebra`], as a coordinate vector on its basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgElem<E> {
    pub coords: Vec<E>,
}

impl<E> AlgElem<E> {
    pub fn new(coords: Vec<E>) -> Self {
        Self { coords }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }
}

impl<E: fmt::Debug> fmt::Debug for AlgElem<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coords).finish()
    }
}

/// Which nucleus to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Nucleus {
    Left,
    Middle,
    Right,
    Full,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Algebra<B: BaseRing> {
    base: B,
    dim: usize,
    // c[(i * dim + j) * dim + k]: coefficient of e_k in e_i e_j
    constants: Vec<B::Elem>,
    unit: Vec<B::Elem>,
    basis_names: Option<Vec<String>>,
}

impl<B: BaseRing> Algebra<B> {
    /// Validates dimensions and the unit law on every basis vector.
    pub fn new(base: B, dim: usize, constants: Vec<B::Elem>, unit: Vec<B::Elem>) -> Result<Self, AlgebraError> {
        if dim == 0 {
            return Err(AlgebraError::ZeroDimension);
        }
        if constants.len() != dim * dim * dim {
            return Err(AlgebraError::DimensionMismatch { expected: dim * dim * dim, found: constants.len() });
        }
        if unit.len() != dim {
            return Err(AlgebraError::DimensionMismatch { expected: dim, found: unit.len() });
        }
        let alg = Self { base, dim, constants, unit, basis_names: None };
        let one = alg.one();
        for i in 0..dim {
            let e = alg.basis(i);
            if alg.product(&one, &e) != e {
                return Err(AlgebraError::UnitAxiomViolation { basis: i, side: "left" });
            }
            if alg.product(&e, &one) != e {
                return Err(AlgebraError::UnitAxiomViolation { basis: i, side: "right" });
            }
        }
        Ok(alg)
    }

    /// Attach display names for the basis vectors (used by text formats).
    pub fn with_basis_names(mut self, names: Vec<String>) -> Result<Self, AlgebraError> {
        if names.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim, found: names.len() });
        }
        self.basis_names = Some(names);
        Ok(self)
    }

    pub fn base(&self) -> &B {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> Option<&[String]> {
        self.basis_names.as_deref()
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &B::Elem {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    pub fn structure_constants(&self) -> &[B::Elem] {
        &self.constants
    }

    pub fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    pub fn zero(&self) -> AlgElem<B::Elem> {
        AlgElem::new(linalg::zero_vector(&self.base, self.dim))
    }

    pub fn one(&self) -> AlgElem<B::Elem> {
        AlgElem::new(self.unit.clone())
    }

    pub fn basis(&self, i: usize) -> AlgElem<B::Elem> {
        let mut v = linalg::zero_vector(&self.base, self.dim);
        v[i] = self.base.one();
        AlgElem::new(v)
    }

    pub fn basis_elements(&self) -> Vec<AlgElem<B::Elem>> {
        (0..self.dim).map(|i| self.basis(i)).collect()
    }

    pub fn scalar(&self, c: &B::Elem) -> AlgElem<B::Elem> {
        self.scale(c, &self.one())
    }

    pub fn element(&self, coords: Vec<B::Elem>) -> Result<AlgElem<B::Elem>, AlgebraError> {
        self.check(&AlgElem::new(coords.clone()))?;
        Ok(AlgElem::new(coords))
    }

    pub fn is_zero(&self, a: &AlgElem<B::Elem>) -> bool {
        linalg::is_zero_vector(&self.base, &a.coords)
    }

    fn check(&self, a: &AlgElem<B::Elem>) -> Result<(), AlgebraError> {
        if a.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim, found: a.len() });
        }
        Ok(())
    }

    pub fn mul(&self, a: &AlgElem<B::Elem>, b: &AlgElem<B::Elem>) -> Result<AlgElem<B::Elem>, AlgebraError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.product(a, b))
    }

    pub fn add(&self, a: &AlgElem<B::Elem>, b: &AlgElem<B::Elem>) -> Result<AlgElem<B::Elem>, AlgebraError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.sum(a, b))
    }

    pub fn sub(&self, a: &AlgElem<B::Elem>, b: &AlgElem<B::Elem>) -> Result<AlgElem<B::Elem>, AlgebraError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.difference(a, b))
    }

    pub fn neg(&self, a: &AlgElem<B::Elem>) -> Result<AlgElem<B::Elem>, AlgebraError> {
        self.check(a)?;
        Ok(self.negate(a))
    }

    /// Unchecked product; panics on dimension mismatch.
    pub fn product(&self, a: &AlgElem<B::Elem>, b: &AlgElem<B::Elem>) -> AlgElem<B::Elem> {
        assert_eq!(a.len(), self.dim);
        assert_eq!(b.len(), self.dim);
        let base = &self.base;
        let mut out = linalg::zero_vector(base, self.dim);
        for (i, x) in a.coords.iter().enumerate() {
            if base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                if base.is_zero(y) {
                    continue;
                }
                let xy = base.mul(x, y);
                let row = &self.constants[(i * self.dim + j) * self.dim..][..self.dim];
                linalg::axpy(base, &mut out, &xy, row);
            }
        }
        AlgElem::new(out)
    }

    pub fn sum(&self, a: &AlgElem<B::Elem>, b: &AlgElem<B::Elem>) -> AlgElem<B::Elem> {
        AlgElem::new(linalg::add_vectors(&self.base, &a.coords, &b.coords))
    }

    pub fn negate(&self, a: &AlgElem<B::Elem>) -> AlgElem<B::Elem> {
        AlgElem::new(a.coords.iter().map(|x| self.base.neg(x)).collect())
    }

    pub fn difference(&self, a: &AlgElem<B::Elem>, b: &AlgElem<B::Elem>) -> AlgElem<B::Elem> {
        AlgElem::new(a.coords.iter().zip(&b.coords).map(|(x, y)| self.base.sub(x, y)).collect())
    }

    pub fn scale(&self, c: &B::Elem, a: &AlgElem<B::Elem>) -> AlgElem<B::Elem> {
        AlgElem::new(linalg::scale_vector(&self.base, c, &a.coords))
    }

    /// `[a, b] = ab - ba`
    pub fn commutator(&self, a: &AlgElem<B::Elem>, b: &AlgElem<B::Elem>) -> Result<AlgElem<B::Elem>, AlgebraError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.difference(&self.product(a, b), &self.product(b, a)))
    }

    /// `(a, b, c) = (ab)c - a(bc)`
    pub fn associator(
        &self,
        a: &AlgElem<B::Elem>,
        b: &AlgElem<B::Elem>,
        c: &AlgElem<B::Elem>,
    ) -> Result<AlgElem<B::Elem>, AlgebraError> {
        self.check(a)?;
        self.check(b)?;
        self.check(c)?;
        Ok(self.assoc(a, b, c))
    }

    pub(crate) fn assoc(&self, a: &AlgElem<B::Elem>, b: &AlgElem<B::Elem>, c: &AlgElem<B::Elem>) -> AlgElem<B::Elem> {
        self.difference(&self.product(&self.product(a, b), c), &self.product(a, &self.product(b, c)))
    }

    pub fn is_associative(&self) -> bool {
        let basis = self.basis_elements();
        basis.iter().all(|a| basis.iter().all(|b| basis.iter().all(|c| self.is_zero(&self.assoc(a, b, c)))))
    }

    pub fn is_commutative(&self) -> bool {
        let basis = self.basis_elements();
        basis.iter().all(|a| basis.iter().all(|b| self.product(a, b) == self.product(b, a)))
    }

    /// Solution space of the linear conditions `cond(x) = 0`, where `cond`
    /// produces one algebra element per condition and is linear in `x`.
    pub(crate) fn solve_conditions<F>(&self, conditions: usize, cond: F) -> Vec<AlgElem<B::Elem>>
    where
        F: Fn(usize, &AlgElem<B::Elem>) -> AlgElem<B::Elem>,
    {
        let images: Vec<Vec<AlgElem<B::Elem>>> =
            (0..self.dim).map(|l| (0..conditions).map(|c| cond(c, &self.basis(l))).collect()).collect();
        let mut rows: Vec<Vector<B>> = Vec::with_capacity(conditions * self.dim);
        for c in 0..conditions {
            for k in 0..self.dim {
                rows.push((0..self.dim).map(|l| images[l][c].coords[k].clone()).collect());
            }
        }
        linalg::kernel(&self.base, &rows, self.dim).into_iter().map(AlgElem::new).collect()
    }

    pub fn nucleus(&self, which: Nucleus) -> Vec<AlgElem<B::Elem>> {
        let slots: &[usize] = match which {
            Nucleus::Left => &[0],
            Nucleus::Middle => &[1],
            Nucleus::Right => &[2],
            Nucleus::Full => &[0, 1, 2],
        };
        self.slot_conditions(0, slots)
    }

    // kernel of: `commutators` commutator conditions against the basis,
    // followed by associator conditions with `x` in each listed slot
    fn slot_conditions(&self, commutators: usize, slots: &[usize]) -> Vec<AlgElem<B::Elem>> {
        let d = self.dim;
        let basis = self.basis_elements();
        self.solve_conditions(commutators + slots.len() * d * d, |c, x| {
            if c < commutators {
                let e = &basis[c];
                return self.difference(&self.product(x, e), &self.product(e, x));
            }
            let c = c - commutators;
            let (u, v) = (&basis[(c % (d * d)) / d], &basis[c % d]);
            match slots[c / (d * d)] {
                0 => self.assoc(x, u, v),
                1 => self.assoc(u, x, v),
                _ => self.assoc(u, v, x),
            }
        })
    }

    /// The commuter `C(R) = { r : [r, s] = 0 for all s }`.
    pub fn commuter(&self) -> Vec<AlgElem<B::Elem>> {
        self.slot_conditions(self.dim, &[])
    }

    /// `Z(R) = N(R) ∩ C(R)`.
    pub fn center(&self) -> Vec<AlgElem<B::Elem>> {
        self.slot_conditions(self.dim, &[0, 1, 2])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::Subspace;
    use crate::scalar::Residues;
    use crate::Rationals;

    #[test]
    fn product_ring_and_bad_unit() {
        let f2 = Residues::prime_field(2).unwrap();
        let r = catalog::product_ring(f2, 2);
        assert_eq!(r.mul(&r.element(vec![1, 0]).unwrap(), &r.element(vec![1, 1]).unwrap()).unwrap().coords, vec![1, 0]);
        let c = r.structure_constants().to_vec();
        assert_eq!(
            Algebra::new(f2, 2, c, vec![1, 0]),
            Err(AlgebraError::UnitAxiomViolation { basis: 1, side: "left" })
        );
        assert_eq!(Algebra::new(f2, 0, vec![], vec![]), Err(AlgebraError::ZeroDimension));
        assert!(matches!(Algebra::new(f2, 2, vec![0; 7], vec![1, 1]), Err(AlgebraError::DimensionMismatch { .. })));
    }

    #[test]
    fn truncated_polynomial() {
        let q = Rationals::new();
        let r = catalog::truncated_polynomial(q, 3);
        let (y, y2) = (r.basis(1), r.basis(2));
        assert!(r.is_zero(&r.mul(&y, &y2).unwrap()));
        assert!(r.is_associative());
        assert_eq!(r.characteristic(), 0);
        assert!(r.mul(&y, &AlgElem::new(vec![q.one()])).is_err());
    }

    #[test]
    fn unit_laws_and_identities() {
        let q = Rationals::new();
        let r = catalog::truncated_polynomial(q, 3);
        let s = r.element(vec![q.from_i64(2), q.parse("-1/3").unwrap(), q.from_i64(5)]).unwrap();
        assert_eq!(r.mul(&r.one(), &s).unwrap(), s);
        assert!(r.is_zero(&r.commutator(&s, &s).unwrap()));
        assert!(r.is_zero(&r.associator(&r.one(), &s, &r.basis(2)).unwrap()));
    }

    #[test]
    fn matrix_center_is_scalars() {
        let f3 = Residues::prime_field(3).unwrap();
        let m = catalog::matrix_algebra(f3, 2);
        let center = Subspace::spanned_by(&f3, 4, m.center().iter().map(|e| &e.coords));
        // oracle: every one of the 81 elements tested against the basis
        let mut brute = Subspace::new(&f3, 4);
        for v in Subspace::full(&f3, 4).enumerate().unwrap() {
            let x = AlgElem::new(v.clone());
            if m.basis_elements().iter().all(|e| m.product(&x, e) == m.product(e, &x)) {
                brute.insert(&v);
            }
        }
        assert_eq!(center.dim(), 1);
        assert_eq!(brute.dim(), 1);
        assert!(center.contains(&m.one().coords));
        assert_eq!(m.nucleus(Nucleus::Full).len(), 4);
        assert!(!m.is_commutative());
    }

    #[test]
    fn nonassociative_detection() {
        let f2 = Residues::prime_field(2).unwrap();
        let r = catalog::nonassociative_example(f2);
        assert!(!r.is_associative());
        let u = r.basis(1);
        // (uu)u = vu = 0 but u(uu) = uv = 1
        assert_eq!(r.associator(&u, &u, &u).unwrap(), r.negate(&r.one()));
    }

    #[test]
    fn nuclei_are_associative_subrings() {
        let f2 = Residues::prime_field(2).unwrap();
        for alg in [catalog::nonassociative_example(f2), catalog::product_ring(f2, 2)] {
            for which in [Nucleus::Left, Nucleus::Middle, Nucleus::Right, Nucleus::Full] {
                let basis = alg.nucleus(which);
                let span = Subspace::spanned_by(&f2, alg.dim(), basis.iter().map(|e| &e.coords));
                assert!(span.contains(&alg.one().coords));
                for a in &basis {
                    for b in &basis {
                        assert!(span.contains(&alg.product(a, b).coords));
                        for c in &basis {
                            assert!(alg.is_zero(&alg.assoc(a, b, c)));
                        }
                    }
                }
            }
            let z = alg.center();
            for a in &z {
                for b in &z {
                    assert_eq!(alg.product(a, b), alg.product(b, a));
                }
            }
        }
    }

    #[test]
    fn associator_identity() {
        let f2 = Residues::prime_field(2).unwrap();
        let alg = catalog::nonassociative_example(f2);
        let b = alg.basis_elements();
        for u in &b {
            for r in &b {
                for s in &b {
                    for t in &b {
                        let lhs = alg.sum(
                            &alg.sum(&alg.product(u, &alg.assoc(r, s, t)), &alg.product(&alg.assoc(u, r, s), t)),
                            &alg.assoc(u, &alg.product(r, s), t),
                        );
                        let rhs = alg.sum(&alg.assoc(&alg.product(u, r), s, t), &alg.assoc(u, r, &alg.product(s, t)));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn commutative_center_is_everything() {
        let f2 = Residues::prime_field(2).unwrap();
        let r = catalog::product_ring(f2, 2);
        assert_eq!(r.center().len(), 2);
        assert_eq!(r.commuter().len(), 2);
        for a in r.basis_elements() {
            for b in r.basis_elements() {
                assert!(r.is_zero(&r.commutator(&a, &b).unwrap()));
            }
        }
    }
}
