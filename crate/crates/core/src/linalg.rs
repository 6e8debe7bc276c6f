//! Exact linear algebra over a [`BaseRing`].
//!
//! Over fields everything goes through reduced row echelon form. Over `Z_n`
//! the homogeneous system `A x = 0 (mod n)` is diagonalized by unimodular
//! row and column operations; entries may be reduced mod `n` at any point
//! because `(A + nB) x = A x (mod n)` for integer `x`.

use num_integer::Integer;

use crate::scalar::BaseRing;

pub type Vector<B> = Vec<<B as BaseRing>::Elem>;

pub fn zero_vector<B: BaseRing>(base: &B, n: usize) -> Vector<B> {
    vec![base.zero(); n]
}

pub fn is_zero_vector<B: BaseRing>(base: &B, v: &[B::Elem]) -> bool {
    v.iter().all(|x| base.is_zero(x))
}

pub fn add_vectors<B: BaseRing>(base: &B, a: &[B::Elem], b: &[B::Elem]) -> Vector<B> {
    a.iter().zip(b).map(|(x, y)| base.add(x, y)).collect()
}

pub fn scale_vector<B: BaseRing>(base: &B, c: &B::Elem, v: &[B::Elem]) -> Vector<B> {
    v.iter().map(|x| base.mul(c, x)).collect()
}

/// `a + c * b`
pub fn axpy<B: BaseRing>(base: &B, a: &mut [B::Elem], c: &B::Elem, b: &[B::Elem]) {
    if base.is_zero(c) {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x = base.add(x, &base.mul(c, y));
    }
}

/// Reduced row echelon form over a field. Returns the nonzero rows and their
/// pivot columns.
pub fn rref<B: BaseRing>(base: &B, rows: &[Vector<B>], ncols: usize) -> (Vec<Vector<B>>, Vec<usize>) {
    debug_assert!(base.is_field());
    let mut m: Vec<Vector<B>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !base.is_zero(&m[i][col])) else {
            continue;
        };
        m.swap(r, p);
        let inv = base.inv(&m[r][col]).expect("nonzero element of a field is invertible");
        m[r] = scale_vector(base, &inv, &m[r]);
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !base.is_zero(&row[col]) {
                let c = base.neg(&row[col]);
                axpy(base, row, &c, &pivot_row);
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

/// A generating set of `{ x : A x = 0 }`. Over a field this is a basis.
pub fn kernel<B: BaseRing>(base: &B, rows: &[Vector<B>], ncols: usize) -> Vec<Vector<B>> {
    if base.is_field() {
        field_kernel(base, rows, ncols)
    } else {
        modular_kernel(base, rows, ncols)
    }
}

fn field_kernel<B: BaseRing>(base: &B, rows: &[Vector<B>], ncols: usize) -> Vec<Vector<B>> {
    let (r, pivots) = rref(base, rows, ncols);
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = zero_vector(base, ncols);
        v[free] = base.one();
        for (row, &p) in r.iter().zip(&pivots) {
            v[p] = base.neg(&row[free]);
        }
        out.push(v);
    }
    out
}

fn modular_kernel<B: BaseRing>(base: &B, rows: &[Vector<B>], ncols: usize) -> Vec<Vector<B>> {
    let n = base.characteristic() as u128;
    let lift = |x: &B::Elem| base.residue(x).expect("modular base") as u128;
    let mut a: Vec<Vec<u128>> = rows.iter().map(|r| r.iter().map(lift).collect()).collect();
    let mut v: Vec<Vec<u128>> = (0..ncols).map(|i| (0..ncols).map(|j| u128::from(i == j)).collect()).collect();
    let m = a.len();
    let sub_mul = |x: u128, q: u128, y: u128| (x + n - (q % n) * y % n) % n;

    let mut diag = Vec::new();
    for t in 0..m.min(ncols) {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..ncols {
                    if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j] < a[bi][bj]) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }
            let piv = a[t][t];
            let mut dirty = false;
            for i in t + 1..m {
                if a[i][t] != 0 {
                    let q = a[i][t] / piv;
                    for j in t..ncols {
                        a[i][j] = sub_mul(a[i][j], q, a[t][j]);
                    }
                    dirty |= a[i][t] != 0;
                }
            }
            for j in t + 1..ncols {
                if a[t][j] != 0 {
                    let q = a[t][j] / piv;
                    for i in 0..m {
                        a[i][j] = sub_mul(a[i][j], q, a[i][t]);
                    }
                    for row in v.iter_mut() {
                        row[j] = sub_mul(row[j], q, row[t]);
                    }
                    dirty |= a[t][j] != 0;
                }
            }
            if !dirty {
                break;
            }
        }
        diag.push(a[t][t]);
    }

    let mut out = Vec::new();
    for t in 0..ncols {
        let d = diag.get(t).copied().unwrap_or(0);
        let factor = n / d.gcd(&n);
        let g: Vec<u128> = v.iter().map(|row| row[t] * factor % n).collect();
        if g.iter().any(|&x| x != 0) {
            out.push(g.into_iter().map(|x| base.from_i64(x as i64)).collect());
        }
    }
    out
}

/// Some `x` with `A x = b`, if one exists.
pub fn solve<B: BaseRing>(base: &B, rows: &[Vector<B>], rhs: &[B::Elem], ncols: usize) -> Option<Vector<B>> {
    let augmented: Vec<Vector<B>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            r.push(base.neg(b));
            r
        })
        .collect();
    let gens = kernel(base, &augmented, ncols + 1);
    if base.is_field() {
        let g = gens.iter().find(|g| !base.is_zero(&g[ncols]))?;
        let inv = base.inv(&g[ncols])?;
        let mut x = scale_vector(base, &inv, g);
        x.truncate(ncols);
        return Some(x);
    }
    // combine generators so that the last coordinate becomes a unit (Bezout)
    let n = base.characteristic() as i128;
    let mut acc_g: i128 = 0;
    let mut acc = zero_vector(base, ncols + 1);
    for g in &gens {
        let l = base.residue(&g[ncols]).expect("modular base") as i128;
        if l == 0 {
            continue;
        }
        let e = acc_g.extended_gcd(&l);
        let mut next = scale_vector(base, &base.from_i64(e.x.rem_euclid(n) as i64), &acc);
        axpy(base, &mut next, &base.from_i64(e.y.rem_euclid(n) as i64), g);
        acc = next;
        acc_g = e.gcd;
    }
    let inv = base.inv(&base.from_i64(acc_g.rem_euclid(n) as i64))?;
    let mut x = scale_vector(base, &inv, &acc);
    x.truncate(ncols);
    Some(x)
}

/// Apply a matrix (rows of length `v.len()`) to a column vector.
pub fn mat_vec<B: BaseRing>(base: &B, m: &[Vector<B>], v: &[B::Elem]) -> Vector<B> {
    m.iter()
        .map(|row| {
            row.iter().zip(v).fold(base.zero(), |acc, (a, b)| {
                if base.is_zero(a) || base.is_zero(b) {
                    acc
                } else {
                    base.add(&acc, &base.mul(a, b))
                }
            })
        })
        .collect()
}

/// A subspace of `base^n` kept in reduced echelon form. Field bases only.
#[derive(Debug, Clone)]
pub struct Subspace<B: BaseRing> {
    base: B,
    ambient: usize,
    rows: Vec<Vector<B>>,
    pivots: Vec<usize>,
}

impl<B: BaseRing> Subspace<B> {
    pub fn new(base: &B, ambient: usize) -> Self {
        assert!(base.is_field(), "subspace arithmetic needs a field base");
        Self { base: base.clone(), ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn spanned_by<'a>(base: &B, ambient: usize, vectors: impl IntoIterator<Item = &'a Vector<B>>) -> Self {
        let mut s = Self::new(base, ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn full(base: &B, ambient: usize) -> Self {
        let mut s = Self::new(base, ambient);
        for i in 0..ambient {
            let mut e = zero_vector(base, ambient);
            e[i] = base.one();
            s.insert(&e);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vector<B>] {
        &self.rows
    }

    /// Residue of `v` after elimination against the current basis.
    pub fn reduce(&self, v: &[B::Elem]) -> Vector<B> {
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !self.base.is_zero(&r[p]) {
                let c = self.base.neg(&r[p]);
                axpy(&self.base, &mut r, &c, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &[B::Elem]) -> bool {
        is_zero_vector(&self.base, &self.reduce(v))
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[B::Elem]) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !self.base.is_zero(x)) else {
            return false;
        };
        let inv = self.base.inv(&r[p]).expect("field");
        let r = scale_vector(&self.base, &inv, &r);
        for row in self.rows.iter_mut() {
            if !self.base.is_zero(&row[p]) {
                let c = self.base.neg(&row[p]);
                axpy(&self.base, row, &c, &r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, r);
        self.pivots.insert(at, p);
        true
    }

    pub fn intersect(&self, other: &Self) -> Self {
        // x = sum a_i u_i = sum b_j w_j  <=>  [U | -W] (a, b) = 0
        let (u, w) = (&self.rows, &other.rows);
        let cols = u.len() + w.len();
        let system: Vec<Vector<B>> = (0..self.ambient)
            .map(|k| {
                u.iter()
                    .map(|x| x[k].clone())
                    .chain(w.iter().map(|x| self.base.neg(&x[k])))
                    .collect()
            })
            .collect();
        let mut out = Self::new(&self.base, self.ambient);
        for sol in kernel(&self.base, &system, cols) {
            let mut v = zero_vector(&self.base, self.ambient);
            for (a, x) in sol.iter().zip(u) {
                axpy(&self.base, &mut v, a, x);
            }
            out.insert(&v);
        }
        out
    }

    /// Every vector of the subspace; only sensible for small finite bases.
    pub fn enumerate(&self) -> Option<Vec<Vector<B>>> {
        let scalars = self.base.elements()?;
        let mut out = vec![zero_vector(&self.base, self.ambient)];
        for row in &self.rows {
            let mut next = Vec::with_capacity(out.len() * scalars.len());
            for v in &out {
                for c in &scalars {
                    let mut w = v.clone();
                    axpy(&self.base, &mut w, c, row);
                    next.push(w);
                }
            }
            out = next;
        }
        Some(out)
    }
}
