//! The Ore monoid ring `S = R[G; π]` and its structural computations.
//!
//! Elements are sparse sums `Σ r_a x^a`, stored with exponents in increasing
//! order under the monoid's well-order. Products follow
//! `(r x^a)(s x^b) = Σ_c r π^a_c(s) x^{cb}`.
//!
//! Center computations work inside the finite-dimensional window spanned by
//! `e_i x^a` for all exponents `a` of weight at most a cap (every exponent,
//! for a finite monoid). Candidates are cut out by commutation with the basis
//! of `R` and the monoid generators plus associator conditions against the
//! basis of `R`; each candidate is then verified against every monomial in
//! the window, and the solve is repeated with the full monomial conditions if
//! that verification fails.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{AlgElem, Algebra};
use crate::linalg::{self, Vector};
use crate::monoid::{MonoidElem, MonoidSpec};
use crate::multiindex::{multi_binom, MultiIndex};
use crate::pistructure::{check_all, AxiomReport, Classification, PiStructure};
use crate::scalar::BaseRing;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OreError {
    #[error("π is not a G-derivation: {0} fails")]
    NotGDerivation(String),
    #[error("operation on the zero element")]
    ZeroElement,
    #[error("operation needs a delta-generated ring")]
    WrongPiKind,
    #[error("operation needs the free commutative monoid")]
    WrongMonoidKind,
    #[error("coefficient at exponent {0} is not in the joint kernel of the deltas")]
    CoefficientNotInKernel(String),
    #[error("element does not belong to this ring")]
    RingMismatch,
}

/// A formal sum `Σ r_a x^a` with nonzero coefficients, sorted by exponent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OreElem<E> {
    terms: Vec<(MonoidElem, AlgElem<E>)>,
}

impl<E> OreElem<E> {
    pub fn terms(&self) -> &[(MonoidElem, AlgElem<E>)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `supp(s)`, in increasing order.
    pub fn support(&self) -> Vec<&MonoidElem> {
        self.terms.iter().map(|(a, _)| a).collect()
    }

    pub fn coefficient(&self, a: &MonoidElem) -> Option<&AlgElem<E>> {
        self.terms.iter().find(|(b, _)| b == a).map(|(_, r)| r)
    }
}

/// `S = R[G; π]` together with the classification of `π`.
#[derive(Debug, Clone)]
pub struct OreRing<B: BaseRing> {
    pi: PiStructure<B>,
    report: AxiomReport<B::Elem>,
    classification: Classification,
    cap: u64,
}

/// A basis of a subspace of `S` found inside a finite window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowBasis<E> {
    pub basis: Vec<OreElem<E>>,
    /// Weight cap of the window; `None` when the window is all of `S`.
    pub cap: Option<u64>,
    /// Whether the generator-only conditions had to be replaced by the full
    /// monomial conditions.
    pub used_full_conditions: bool,
}

impl<B: BaseRing> OreRing<B> {
    /// Builds `S`, refusing structures that are not G-derivations. Axioms over
    /// `N^k` are verified up to weight `cap`.
    pub fn new(pi: PiStructure<B>, cap: u64) -> Result<Self, OreError> {
        let report = check_all(&pi, cap);
        let classification = Classification::from_report(&report);
        if !classification.g_derivation {
            let failing: Vec<&str> =
                report.entries.iter().take(5).filter(|(_, s)| !s.passed()).map(|(a, _)| a.name()).collect();
            return Err(OreError::NotGDerivation(failing.join(", ")));
        }
        Ok(Self { pi, report, classification, cap })
    }

    pub fn pi(&self) -> &PiStructure<B> {
        &self.pi
    }

    pub fn algebra(&self) -> &Algebra<B> {
        self.pi.algebra()
    }

    pub fn monoid(&self) -> &MonoidSpec {
        self.pi.monoid()
    }

    pub fn base(&self) -> &B {
        self.algebra().base()
    }

    pub fn report(&self) -> &AxiomReport<B::Elem> {
        &self.report
    }

    pub fn classification(&self) -> Classification {
        self.classification
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    pub fn is_finite(&self) -> bool {
        self.monoid().is_finite() && self.base().size().is_some()
    }

    fn from_map(&self, map: BTreeMap<MonoidElem, AlgElem<B::Elem>>) -> OreElem<B::Elem> {
        let alg = self.algebra();
        let mut terms: Vec<_> = map.into_iter().filter(|(_, r)| !alg.is_zero(r)).collect();
        terms.sort_by(|x, y| self.monoid().cmp(&x.0, &y.0));
        OreElem { terms }
    }

    /// Builds an element from arbitrary terms; repeated exponents are summed.
    pub fn element(&self, terms: Vec<(MonoidElem, AlgElem<B::Elem>)>) -> Result<OreElem<B::Elem>, OreError> {
        let alg = self.algebra();
        let mut map: BTreeMap<MonoidElem, AlgElem<B::Elem>> = BTreeMap::new();
        for (a, r) in terms {
            if !self.monoid().contains(&a) || r.len() != alg.dim() {
                return Err(OreError::RingMismatch);
            }
            let slot = map.entry(a).or_insert_with(|| alg.zero());
            *slot = alg.sum(slot, &r);
        }
        Ok(self.from_map(map))
    }

    pub fn zero(&self) -> OreElem<B::Elem> {
        OreElem { terms: vec![] }
    }

    pub fn one(&self) -> OreElem<B::Elem> {
        self.constant(&self.algebra().one())
    }

    pub fn constant(&self, r: &AlgElem<B::Elem>) -> OreElem<B::Elem> {
        self.monomial(r, &self.monoid().identity())
    }

    /// `x^a`.
    pub fn x(&self, a: &MonoidElem) -> OreElem<B::Elem> {
        self.monomial(&self.algebra().one(), a)
    }

    /// `r x^a`.
    pub fn monomial(&self, r: &AlgElem<B::Elem>, a: &MonoidElem) -> OreElem<B::Elem> {
        if self.algebra().is_zero(r) {
            return self.zero();
        }
        OreElem { terms: vec![(a.clone(), r.clone())] }
    }

    fn check(&self, u: &OreElem<B::Elem>) -> Result<(), OreError> {
        let dim = self.algebra().dim();
        if u.terms.iter().all(|(a, r)| self.monoid().contains(a) && r.len() == dim) {
            Ok(())
        } else {
            Err(OreError::RingMismatch)
        }
    }

    pub fn s_add(&self, u: &OreElem<B::Elem>, v: &OreElem<B::Elem>) -> Result<OreElem<B::Elem>, OreError> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.add(u, v))
    }

    pub fn s_neg(&self, u: &OreElem<B::Elem>) -> Result<OreElem<B::Elem>, OreError> {
        self.check(u)?;
        Ok(self.neg(u))
    }

    pub fn s_mul(&self, u: &OreElem<B::Elem>, v: &OreElem<B::Elem>) -> Result<OreElem<B::Elem>, OreError> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.mul(u, v))
    }

    pub fn add(&self, u: &OreElem<B::Elem>, v: &OreElem<B::Elem>) -> OreElem<B::Elem> {
        let alg = self.algebra();
        let mut map: BTreeMap<MonoidElem, AlgElem<B::Elem>> = u.terms.iter().cloned().collect();
        for (a, r) in &v.terms {
            let slot = map.entry(a.clone()).or_insert_with(|| alg.zero());
            *slot = alg.sum(slot, r);
        }
        self.from_map(map)
    }

    pub fn neg(&self, u: &OreElem<B::Elem>) -> OreElem<B::Elem> {
        OreElem { terms: u.terms.iter().map(|(a, r)| (a.clone(), self.algebra().negate(r))).collect() }
    }

    pub fn sub(&self, u: &OreElem<B::Elem>, v: &OreElem<B::Elem>) -> OreElem<B::Elem> {
        self.add(u, &self.neg(v))
    }

    /// Multiplication by a base scalar.
    pub fn scale(&self, c: &B::Elem, u: &OreElem<B::Elem>) -> OreElem<B::Elem> {
        let alg = self.algebra();
        self.from_map(u.terms.iter().map(|(a, r)| (a.clone(), alg.scale(c, r))).collect())
    }

    pub fn mul(&self, u: &OreElem<B::Elem>, v: &OreElem<B::Elem>) -> OreElem<B::Elem> {
        let alg = self.algebra();
        let g = self.monoid();
        let mut map: BTreeMap<MonoidElem, AlgElem<B::Elem>> = BTreeMap::new();
        for (a, r) in &u.terms {
            let row = self.pi.support_row(a);
            for (b, s) in &v.terms {
                for c in &row {
                    let t = self.pi.pi_apply(a, c, s);
                    if alg.is_zero(&t) {
                        continue;
                    }
                    let coef = alg.product(r, &t);
                    if alg.is_zero(&coef) {
                        continue;
                    }
                    let slot = map.entry(g.op_unchecked(c, b)).or_insert_with(|| alg.zero());
                    *slot = alg.sum(slot, &coef);
                }
            }
        }
        self.from_map(map)
    }

    /// `π̃^a_b(Σ r_c x^c) = Σ π^a_b(r_c) x^c`.
    pub fn extend_pi(&self, a: &MonoidElem, b: &MonoidElem, u: &OreElem<B::Elem>) -> OreElem<B::Elem> {
        self.from_map(u.terms.iter().map(|(c, r)| (c.clone(), self.pi.pi_apply(a, b, r))).collect())
    }

    pub fn degree(&self, u: &OreElem<B::Elem>) -> Result<MonoidElem, OreError> {
        u.terms.last().map(|(a, _)| a.clone()).ok_or(OreError::ZeroElement)
    }

    pub fn leading_coefficient(&self, u: &OreElem<B::Elem>) -> Result<AlgElem<B::Elem>, OreError> {
        u.terms.last().map(|(_, r)| r.clone()).ok_or(OreError::ZeroElement)
    }

    pub fn is_monic(&self, u: &OreElem<B::Elem>) -> Result<bool, OreError> {
        Ok(self.leading_coefficient(u)? == self.algebra().one())
    }

    pub fn is_constant(&self, u: &OreElem<B::Elem>) -> bool {
        u.terms.last().is_none_or(|(a, _)| *a == self.monoid().identity())
    }

    /// Non-constant, no constant term, and the degree has a one-element
    /// support.
    pub fn is_linear(&self, u: &OreElem<B::Elem>) -> Result<bool, OreError> {
        let deg = self.degree(u)?;
        let f = deg.as_multi().ok_or(OreError::WrongMonoidKind)?;
        let e = self.monoid().identity();
        Ok(deg != e && u.coefficient(&e).is_none() && f.support().len() == 1)
    }

    pub fn s_commutator(&self, u: &OreElem<B::Elem>, v: &OreElem<B::Elem>) -> OreElem<B::Elem> {
        self.sub(&self.mul(u, v), &self.mul(v, u))
    }

    pub fn s_associator(&self, u: &OreElem<B::Elem>, v: &OreElem<B::Elem>, w: &OreElem<B::Elem>) -> OreElem<B::Elem> {
        self.sub(&self.mul(&self.mul(u, v), w), &self.mul(u, &self.mul(v, w)))
    }

    /// A basis of `R^G`; `S^G` is `Σ_a R^G x^a`.
    pub fn s_fixed(&self) -> Vec<AlgElem<B::Elem>> {
        self.pi.fixed_subring(self.cap)
    }

    /// Exponents of the window with weight at most `cap`.
    pub fn window_exponents(&self, cap: u64) -> Vec<MonoidElem> {
        self.monoid().elements(cap)
    }

    /// `e_i x^a` for every window exponent `a` and basis index `i`.
    pub fn window_monomials(&self, cap: u64) -> Vec<OreElem<B::Elem>> {
        let alg = self.algebra();
        self.window_exponents(cap)
            .iter()
            .flat_map(|a| (0..alg.dim()).map(move |i| self.monomial(&alg.basis(i), a)))
            .collect()
    }

    fn to_window(&self, exps: &[MonoidElem], coords: &[B::Elem]) -> OreElem<B::Elem> {
        let d = self.algebra().dim();
        self.from_map(exps.iter().enumerate().map(|(k, a)| (a.clone(), AlgElem::new(coords[k * d..][..d].to_vec()))).collect())
    }

    /// Kernel of the linear map `s ↦ (cond_1(s), …, cond_m(s))` on the window.
    fn solve_window<F>(&self, cap: u64, conditions: usize, cond: F, fixed_only: bool) -> Vec<OreElem<B::Elem>>
    where
        F: Fn(usize, &OreElem<B::Elem>) -> OreElem<B::Elem>,
    {
        let base = self.base();
        let alg = self.algebra();
        let d = alg.dim();
        let exps = self.window_exponents(cap);
        let monomials = self.window_monomials(cap);
        let n = monomials.len();
        // images[l][c] = cond_c(v_l)
        let images: Vec<Vec<OreElem<B::Elem>>> =
            monomials.iter().map(|v| (0..conditions).map(|c| cond(c, v)).collect()).collect();
        let mut rows: Vec<Vector<B>> = Vec::new();
        for c in 0..conditions {
            let mut keys: Vec<MonoidElem> = images.iter().flat_map(|im| im[c].support().into_iter().cloned()).collect();
            keys.sort();
            keys.dedup();
            for key in &keys {
                for k in 0..d {
                    let row: Vector<B> = images
                        .iter()
                        .map(|im| im[c].coefficient(key).map_or_else(|| base.zero(), |r| r.coords[k].clone()))
                        .collect();
                    if !linalg::is_zero_vector(base, &row) {
                        rows.push(row);
                    }
                }
            }
        }
        if fixed_only {
            let fixed_rows = self.fixed_rows();
            for blk in 0..exps.len() {
                for fr in &fixed_rows {
                    let mut row = vec![base.zero(); n];
                    row[blk * d..][..d].clone_from_slice(fr);
                    rows.push(row);
                }
            }
        }
        linalg::kernel(base, &rows, n).iter().map(|v| self.to_window(&exps, v)).collect()
    }

    fn fixed_rows(&self) -> Vec<Vector<B>> {
        self.pi.fixed_conditions(self.cap)
    }

    fn central_conditions(&self, cap: u64, full: bool) -> (usize, Box<dyn Fn(usize, &OreElem<B::Elem>) -> OreElem<B::Elem> + '_>) {
        let alg = self.algebra();
        let d = alg.dim();
        let mut probes: Vec<OreElem<B::Elem>> = (0..d).map(|i| self.constant(&alg.basis(i))).collect();
        if full {
            probes = self.window_monomials(cap);
        } else {
            probes.extend(self.monoid().generators().iter().map(|g| self.x(g)));
        }
        let assoc_probes: Vec<OreElem<B::Elem>> = if self.is_associative() {
            Vec::new()
        } else if full {
            probes.clone()
        } else {
            (0..d).map(|i| self.constant(&alg.basis(i))).collect()
        };
        let p = probes.len();
        let q = assoc_probes.len();
        let total = p + 3 * q * q;
        let f = move |c: usize, s: &OreElem<B::Elem>| {
            if c < p {
                return self.s_commutator(s, &probes[c]);
            }
            let c = c - p;
            let (u, v) = (&assoc_probes[(c % (q * q)) / q], &assoc_probes[c % q]);
            match c / (q * q) {
                0 => self.s_associator(s, u, v),
                1 => self.s_associator(u, s, v),
                _ => self.s_associator(u, v, s),
            }
        };
        (total, Box::new(f))
    }

    /// Whether `s` commutes and associates with every monomial of the window.
    pub fn is_central_in_window(&self, s: &OreElem<B::Elem>, cap: u64) -> bool {
        let monomials = self.window_monomials(cap);
        monomials.iter().all(|u| self.s_commutator(s, u).is_zero())
            && (self.is_associative()
                || monomials.iter().all(|u| {
                monomials.iter().all(|v| {
                    self.s_associator(s, u, v).is_zero()
                        && self.s_associator(u, s, v).is_zero()
                        && self.s_associator(u, v, s).is_zero()
                })
            }))
    }

    /// `S` is associative when `R` is associative and (D5) holds.
    pub fn is_associative(&self) -> bool {
        self.classification.d_structure && self.algebra().is_associative()
    }

    fn central_window(&self, cap: u64, fixed_only: bool) -> WindowBasis<B::Elem> {
        let cap_used = if self.monoid().is_finite() { 0 } else { cap };
        let (n, cond) = self.central_conditions(cap_used, false);
        let basis = self.solve_window(cap_used, n, cond, fixed_only);
        let mut used_full_conditions = false;
        let basis = if basis.iter().all(|s| self.is_central_in_window(s, cap_used)) {
            basis
        } else {
            used_full_conditions = true;
            let (n, cond) = self.central_conditions(cap_used, true);
            self.solve_window(cap_used, n, cond, fixed_only)
        };
        WindowBasis { basis, cap: (!self.monoid().is_finite()).then_some(cap), used_full_conditions }
    }

    /// Basis of `Z(S)` inside the window of weight `≤ cap`.
    pub fn center(&self, cap: u64) -> WindowBasis<B::Elem> {
        self.central_window(cap, false)
    }

    /// Basis of `Z(S)^G = Z(S) ∩ S^G` inside the window.
    pub fn zsg(&self, cap: u64) -> WindowBasis<B::Elem> {
        self.central_window(cap, true)
    }

    /// `Σ_{g ≤ f} (-1)^{|g|} C(f, g) x^{f-g} δ^g(r)`, which equals `r x^f`.
    pub fn right_expand(&self, r: &AlgElem<B::Elem>, f: &MultiIndex) -> Result<OreElem<B::Elem>, OreError> {
        let family = self.pi.delta_family().ok_or(OreError::WrongPiKind)?;
        let base = self.base();
        let mut acc = self.zero();
        for g in f.divisors() {
            let c = multi_binom(base, f, &g);
            let c = if g.sign() < 0 { base.neg(&c) } else { c };
            if base.is_zero(&c) {
                continue;
            }
            let h = f.sub(&g).expect("divisor");
            let dr = family.apply_power(&g, r);
            let term = self.mul(&self.x(&MonoidElem::Multi(h)), &self.constant(&dr));
            acc = self.add(&acc, &self.scale(&c, &term));
        }
        Ok(acc)
    }

    /// `b_g = Σ_{f ≥ g} C(f, g) a_f x^{f-g}`. Coefficients with `f ≠ g` must
    /// lie in `R_Δ`.
    pub fn center_shift(&self, a: &OreElem<B::Elem>, g: &MonoidElem) -> Result<OreElem<B::Elem>, OreError> {
        let family = self.pi.delta_family().ok_or(OreError::WrongPiKind)?;
        let gm = g.as_multi().ok_or(OreError::WrongMonoidKind)?;
        let base = self.base();
        let alg = self.algebra();
        let mut map = BTreeMap::new();
        for (f, r) in &a.terms {
            let fm = f.as_multi().expect("multi");
            let Ok(h) = fm.sub(gm) else { continue };
            if !h.is_zero() && family.deltas().iter().any(|d| !alg.is_zero(&d.apply(base, r))) {
                return Err(OreError::CoefficientNotInKernel(fm.to_string()));
            }
            map.insert(MonoidElem::Multi(h), alg.scale(&multi_binom(base, fm, gm), r));
        }
        Ok(self.from_map(map))
    }

    /// Human-readable form, terms in increasing exponent order.
    pub fn format(&self, u: &OreElem<B::Elem>) -> String {
        if u.is_zero() {
            return "0".to_string();
        }
        let e = self.monoid().identity();
        let one = self.algebra().one();
        u.terms
            .iter()
            .map(|(a, r)| {
                let x = match a {
                    MonoidElem::Multi(m) => format!("x^{m}"),
                    MonoidElem::Index(_) => format!("x^{}", self.monoid().name(a)),
                };
                if *a == e {
                    self.format_coefficient(r, true)
                } else if *r == one {
                    x
                } else {
                    format!("{}*{x}", self.format_coefficient(r, false))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Coefficients print as a basis combination when the algebra has basis
    /// names and as a coordinate tuple otherwise.
    pub fn format_coefficient(&self, r: &AlgElem<B::Elem>, standalone: bool) -> String {
        let alg = self.algebra();
        let base = self.base();
        let Some(names) = alg.basis_names() else {
            let inner: Vec<String> = r.coords.iter().map(|c| base.format(c)).collect();
            return format!("({})", inner.join(","));
        };
        let parts: Vec<String> = r
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !base.is_zero(c))
            .map(|(i, c)| {
                let name = &names[i];
                if name == "1" {
                    base.format(c)
                } else if *c == base.one() {
                    name.clone()
                } else {
                    format!("{}*{name}", base.format(c))
                }
            })
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else if parts.len() == 1 || standalone {
            parts.join(" + ")
        } else {
            format!("({})", parts.join(" + "))
        }
    }
}

impl<E: fmt::Debug> fmt::Display for OreElem<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (a, r)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{r:?}*x^{a}")?;
        }
        Ok(())
    }
}
