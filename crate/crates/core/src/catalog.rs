//! Ready-made coefficient algebras and maps used by fixtures and tests.

use crate::addmap::AddMap;
use crate::algebra::{AlgElem, Algebra};
use crate::scalar::BaseRing;

fn build<B: BaseRing>(
    base: B,
    dim: usize,
    unit: Vec<B::Elem>,
    names: Vec<String>,
    mut product: impl FnMut(usize, usize) -> Vec<(usize, i64)>,
) -> Algebra<B> {
    let mut c = vec![base.zero(); dim * dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            for (k, v) in product(i, j) {
                let slot = &mut c[(i * dim + j) * dim + k];
                *slot = base.add(slot, &base.from_i64(v));
            }
        }
    }
    Algebra::new(base, dim, c, unit)
        .expect("catalog algebras are unital")
        .with_basis_names(names)
        .expect("one name per basis vector")
}

fn monomial_name(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}

/// `base^n` with componentwise product, basis `e1..en`.
pub fn product_ring<B: BaseRing>(base: B, n: usize) -> Algebra<B> {
    let unit = vec![base.one(); n];
    let names = (1..=n).map(|i| format!("e{i}")).collect();
    build(base, n, unit, names, |i, j| if i == j { vec![(i, 1)] } else { vec![] })
}

/// `base[y]/(y^n)` on the basis `1, y, …, y^(n-1)`.
pub fn truncated_polynomial<B: BaseRing>(base: B, n: usize) -> Algebra<B> {
    let mut unit = vec![base.zero(); n];
    unit[0] = base.one();
    let names = (0..n).map(|k| if k == 0 { "1".to_string() } else { monomial_name("y", k) }).collect();
    build(base, n, unit, names, |i, j| if i + j < n { vec![(i + j, 1)] } else { vec![] })
}

/// `base[u,v]/(u^n, v^n)`; basis vector `i + n*j` is `u^i v^j`.
pub fn truncated_bivariate<B: BaseRing>(base: B, n: usize) -> Algebra<B> {
    let dim = n * n;
    let mut unit = vec![base.zero(); dim];
    unit[0] = base.one();
    let names = (0..dim)
        .map(|k| {
            let s = format!("{}{}", monomial_name("u", k % n), monomial_name("v", k / n));
            if s.is_empty() { "1".to_string() } else { s }
        })
        .collect();
    build(base, dim, unit, names, |a, b| {
        let (i, j) = (a % n + b % n, a / n + b / n);
        if i < n && j < n { vec![(i + n * j, 1)] } else { vec![] }
    })
}

/// Full `n x n` matrix algebra; basis vector `i*n + j` is `E_(i+1)(j+1)`.
pub fn matrix_algebra<B: BaseRing>(base: B, n: usize) -> Algebra<B> {
    let dim = n * n;
    let unit = (0..dim).map(|k| if k / n == k % n { base.one() } else { base.zero() }).collect();
    let names = (0..dim).map(|k| format!("E{}{}", k / n + 1, k % n + 1)).collect();
    build(base, dim, unit, names, |a, b| {
        let (i, j, k, l) = (a / n, a % n, b / n, b % n);
        if j == k { vec![(i * n + l, 1)] } else { vec![] }
    })
}

/// Three-dimensional unital algebra on `1, u, v` with `uu = v`, `uv = 1`,
/// `vu = vv = 0`. Not associative: `(uu)u = 0` while `u(uu) = 1`.
pub fn nonassociative_example<B: BaseRing>(base: B) -> Algebra<B> {
    let unit = vec![base.one(), base.zero(), base.zero()];
    let names = vec!["1".to_string(), "u".to_string(), "v".to_string()];
    build(base, 3, unit, names, |i, j| match (i, j) {
        (0, k) | (k, 0) => vec![(k, 1)],
        (1, 1) => vec![(2, 1)],
        (1, 2) => vec![(0, 1)],
        _ => vec![],
    })
}

/// `d/dy` on [`truncated_polynomial`].
pub fn derivative<B: BaseRing>(alg: &Algebra<B>) -> AddMap<B::Elem> {
    let base = alg.base();
    let n = alg.dim();
    let images: Vec<AlgElem<B::Elem>> = (0..n)
        .map(|k| {
            let mut v = alg.zero();
            if k > 0 {
                v.coords[k - 1] = base.from_i64(k as i64);
            }
            v
        })
        .collect();
    AddMap::from_images(alg, &images).expect("square")
}

/// `y d/dy` on [`truncated_polynomial`], a derivation in every characteristic.
pub fn euler_derivation<B: BaseRing>(alg: &Algebra<B>) -> AddMap<B::Elem> {
    let base = alg.base();
    let images: Vec<AlgElem<B::Elem>> = (0..alg.dim()).map(|k| alg.scale(&base.from_i64(k as i64), &alg.basis(k))).collect();
    AddMap::from_images(alg, &images).expect("square")
}

/// `∂/∂u` (`wrt_v = false`) or `∂/∂v` on [`truncated_bivariate`] with side `n`.
pub fn partial<B: BaseRing>(alg: &Algebra<B>, n: usize, wrt_v: bool) -> AddMap<B::Elem> {
    let base = alg.base();
    let images: Vec<AlgElem<B::Elem>> = (0..alg.dim())
        .map(|k| {
            let (i, j) = (k % n, k / n);
            let mut v = alg.zero();
            if !wrt_v && i > 0 {
                v.coords[(i - 1) + n * j] = base.from_i64(i as i64);
            }
            if wrt_v && j > 0 {
                v.coords[i + n * (j - 1)] = base.from_i64(j as i64);
            }
            v
        })
        .collect();
    AddMap::from_images(alg, &images).expect("square")
}

/// The inner derivation `r ↦ ar - ra`.
pub fn inner_derivation<B: BaseRing>(alg: &Algebra<B>, a: &AlgElem<B::Elem>) -> AddMap<B::Elem> {
    let images: Vec<_> =
        alg.basis_elements().iter().map(|r| alg.difference(&alg.product(a, r), &alg.product(r, a))).collect();
    AddMap::from_images(alg, &images).expect("square")
}

/// `P(a, b) = (0, a + b)` on `base x base`.
pub fn sum_projection<B: BaseRing>(alg: &Algebra<B>) -> AddMap<B::Elem> {
    let base = alg.base();
    AddMap::from_matrix(alg, vec![vec![base.zero(), base.zero()], vec![base.one(), base.one()]]).expect("2x2")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Residues;

    #[test]
    fn bivariate_partials_commute_and_derive() {
        let f3 = Residues::prime_field(3).unwrap();
        let r = truncated_bivariate(f3, 3);
        let (du, dv) = (partial(&r, 3, false), partial(&r, 3, true));
        assert!(du.is_derivation(&r));
        assert!(dv.is_derivation(&r));
        assert_eq!(du.compose(&f3, &dv), dv.compose(&f3, &du));
        assert_eq!(r.basis_names().unwrap()[4], "uv");
        assert!(r.is_associative() && r.is_commutative());
    }

    #[test]
    fn matrix_algebra_units() {
        let f3 = Residues::prime_field(3).unwrap();
        let m = matrix_algebra(f3, 2);
        assert_eq!(m.one().coords, vec![1, 0, 0, 1]);
        assert!(m.is_associative());
        let e12 = m.basis(1);
        let d = inner_derivation(&m, &e12);
        assert!(d.is_derivation(&m));
    }
}
