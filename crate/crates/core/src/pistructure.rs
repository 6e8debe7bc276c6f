//! The family `π = {π^a_b}`: explicit tables, families generated by maps
//! `δ_i` over `N^k`, the axiom verifier and the fixed subrings.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::addmap::AddMap;
use crate::algebra::{AlgElem, Algebra};
use crate::linalg::{self, Vector};
use crate::monoid::{MonoidElem, MonoidError, MonoidSpec};
use crate::multiindex::{multi_binom, MultiIndex};
use crate::scalar::{binomial, BaseRing};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PiError {
    #[error("map {index} has the wrong size for a dimension-{dim} algebra")]
    DimensionMismatch { index: usize, dim: usize },
    #[error("delta {0} does not send 1 to 0")]
    DeltaMovesOne(usize),
    #[error("duplicate table entry for ({0}, {1})")]
    DuplicateEntry(String, String),
    #[error("operation needs a delta-generated structure")]
    WrongPiKind,
    #[error(transparent)]
    Monoid(#[from] MonoidError),
}

/// The maps `Δ = {δ_1, …, δ_k}` on a coefficient algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct DeltaFamily<B: BaseRing> {
    algebra: Algebra<B>,
    deltas: Vec<AddMap<B::Elem>>,
}

impl<B: BaseRing> DeltaFamily<B> {
    pub fn new(algebra: Algebra<B>, deltas: Vec<AddMap<B::Elem>>) -> Result<Self, PiError> {
        let one = algebra.one();
        for (i, d) in deltas.iter().enumerate() {
            if d.dim() != algebra.dim() {
                return Err(PiError::DimensionMismatch { index: i, dim: algebra.dim() });
            }
            if !algebra.is_zero(&d.apply(algebra.base(), &one)) {
                return Err(PiError::DeltaMovesOne(i));
            }
        }
        Ok(Self { algebra, deltas })
    }

    pub fn algebra(&self) -> &Algebra<B> {
        &self.algebra
    }

    pub fn deltas(&self) -> &[AddMap<B::Elem>] {
        &self.deltas
    }

    pub fn arity(&self) -> usize {
        self.deltas.len()
    }

    /// `R_Δ = ∩ ker δ_i`.
    pub fn r_delta(&self) -> Vec<AlgElem<B::Elem>> {
        let rows: Vec<Vector<B>> = self.deltas.iter().flat_map(|d| d.matrix().to_vec()).collect();
        linalg::kernel(self.algebra.base(), &rows, self.algebra.dim()).into_iter().map(AlgElem::new).collect()
    }

    pub fn is_commutative(&self) -> bool {
        let base = self.algebra.base();
        self.deltas.iter().enumerate().all(|(i, a)| {
            self.deltas[i + 1..].iter().all(|b| a.compose(base, b) == b.compose(base, a))
        })
    }

    /// Whether every `δ_i` is left (`left`) or right `R_Δ`-linear.
    pub fn is_kernel_linear(&self, left: bool) -> bool {
        let kernel = self.r_delta();
        self.deltas.iter().all(|d| d.is_linear_over(&self.algebra, &kernel, left))
    }

    /// `δ^h(r) = (δ_1^{h_1} ∘ … ∘ δ_k^{h_k})(r)`, applying `δ_k` first.
    pub fn apply_power(&self, h: &MultiIndex, r: &AlgElem<B::Elem>) -> AlgElem<B::Elem> {
        let base = self.algebra.base();
        let mut v = r.clone();
        for (i, &e) in h.exps().iter().enumerate().rev() {
            for _ in 0..e {
                if self.algebra.is_zero(&v) {
                    return v;
                }
                v = self.deltas[i].apply(base, &v);
            }
        }
        v
    }

    /// The matrix of `δ^h`.
    pub fn power_map(&self, h: &MultiIndex) -> AddMap<B::Elem> {
        let base = self.algebra.base();
        let mut m = AddMap::identity(base, self.algebra.dim());
        for (i, &e) in h.exps().iter().enumerate() {
            if e > 0 {
                m = m.compose(base, &self.deltas[i].power(base, e));
            }
        }
        m
    }
}

/// `δ^n(rs) = Σ C(n,k) δ^{n-k}(r) δ^k(s)` on all basis pairs, `n ≤ n_max`.
/// Returns the first failing `(n, i, j)`.
pub fn leibniz_power_violation<B: BaseRing>(
    alg: &Algebra<B>,
    delta: &AddMap<B::Elem>,
    n_max: u64,
) -> Option<(u64, usize, usize)> {
    let base = alg.base();
    let powers: Vec<AddMap<B::Elem>> = (0..=n_max).map(|n| delta.power(base, n)).collect();
    let basis = alg.basis_elements();
    for n in 0..=n_max {
        for (i, r) in basis.iter().enumerate() {
            for (j, s) in basis.iter().enumerate() {
                let lhs = powers[n as usize].apply(base, &alg.product(r, s));
                let mut rhs = alg.zero();
                for k in 0..=n {
                    let c = base.from_bigint(&binomial(n, k));
                    let term = alg.product(
                        &powers[(n - k) as usize].apply(base, r),
                        &powers[k as usize].apply(base, s),
                    );
                    rhs = alg.sum(&rhs, &alg.scale(&c, &term));
                }
                if lhs != rhs {
                    return Some((n, i, j));
                }
            }
        }
    }
    None
}

pub fn leibniz_power_check<B: BaseRing>(alg: &Algebra<B>, delta: &AddMap<B::Elem>, n_max: u64) -> bool {
    leibniz_power_violation(alg, delta, n_max).is_none()
}

#[derive(Debug, Clone, PartialEq)]
enum PiKind<B: BaseRing> {
    Table(BTreeMap<(MonoidElem, MonoidElem), AddMap<B::Elem>>),
    Delta(DeltaFamily<B>),
}

/// A family `π^a_b` on a coefficient algebra indexed by a monoid.
#[derive(Debug, Clone, PartialEq)]
pub struct PiStructure<B: BaseRing> {
    algebra: Algebra<B>,
    monoid: MonoidSpec,
    kind: PiKind<B>,
}

impl<B: BaseRing> PiStructure<B> {
    /// Explicit entries; unlisted pairs give `id` on the diagonal and `0`
    /// elsewhere.
    pub fn table(
        algebra: Algebra<B>,
        monoid: MonoidSpec,
        entries: Vec<(MonoidElem, MonoidElem, AddMap<B::Elem>)>,
    ) -> Result<Self, PiError> {
        let mut map = BTreeMap::new();
        for (i, (a, b, m)) in entries.into_iter().enumerate() {
            for x in [&a, &b] {
                if !monoid.contains(x) {
                    return Err(MonoidError::OutOfRange(x.to_string()).into());
                }
            }
            if m.dim() != algebra.dim() {
                return Err(PiError::DimensionMismatch { index: i, dim: algebra.dim() });
            }
            let key = (a, b);
            if map.contains_key(&key) {
                return Err(PiError::DuplicateEntry(monoid.name(&key.0), monoid.name(&key.1)));
            }
            map.insert(key, m);
        }
        Ok(Self { algebra, monoid, kind: PiKind::Table(map) })
    }

    /// `π^f_g = C(f, g) δ^{f-g}` over `N^k`.
    pub fn delta_generated(family: DeltaFamily<B>) -> Self {
        Self { algebra: family.algebra.clone(), monoid: MonoidSpec::free(family.arity()), kind: PiKind::Delta(family) }
    }

    pub fn algebra(&self) -> &Algebra<B> {
        &self.algebra
    }

    pub fn monoid(&self) -> &MonoidSpec {
        &self.monoid
    }

    pub fn delta_family(&self) -> Option<&DeltaFamily<B>> {
        match &self.kind {
            PiKind::Delta(f) => Some(f),
            PiKind::Table(_) => None,
        }
    }

    pub fn is_delta_generated(&self) -> bool {
        self.delta_family().is_some()
    }

    /// Listed table entries, in key order.
    pub fn table_entries(&self) -> Vec<(MonoidElem, MonoidElem, AddMap<B::Elem>)> {
        match &self.kind {
            PiKind::Table(m) => m.iter().map(|((a, b), v)| (a.clone(), b.clone(), v.clone())).collect(),
            PiKind::Delta(_) => Vec::new(),
        }
    }

    /// The explicit table agreeing with this structure on all pairs with
    /// `|b| ≤ |a| ≤ cap` (every pair, for a finite monoid).
    pub fn materialize(&self, cap: u64) -> Self {
        let elems = self.monoid.elements(cap);
        let mut entries = Vec::new();
        for a in &elems {
            for b in self.support_row(a) {
                let m = self.lookup(a, &b);
                if !m.is_zero(self.algebra.base()) || a == &b {
                    entries.push((a.clone(), b, m));
                }
            }
        }
        Self::table(self.algebra.clone(), self.monoid.clone(), entries).expect("entries come from a valid structure")
    }

    /// Replaces (or inserts) one table entry.
    pub fn with_entry(&self, a: &MonoidElem, b: &MonoidElem, m: AddMap<B::Elem>) -> Result<Self, PiError> {
        let mut entries: Vec<_> =
            self.table_entries().into_iter().filter(|(x, y, _)| !(x == a && y == b)).collect();
        entries.push((a.clone(), b.clone(), m));
        Self::table(self.algebra.clone(), self.monoid.clone(), entries)
    }

    pub fn pi_lookup(&self, a: &MonoidElem, b: &MonoidElem) -> Result<AddMap<B::Elem>, PiError> {
        for x in [a, b] {
            if !self.monoid.contains(x) {
                return Err(MonoidError::OutOfRange(x.to_string()).into());
            }
        }
        Ok(self.lookup(a, b))
    }

    pub(crate) fn lookup(&self, a: &MonoidElem, b: &MonoidElem) -> AddMap<B::Elem> {
        let base = self.algebra.base();
        let dim = self.algebra.dim();
        match &self.kind {
            PiKind::Table(m) => m.get(&(a.clone(), b.clone())).cloned().unwrap_or_else(|| {
                if a == b {
                    AddMap::identity(base, dim)
                } else {
                    AddMap::zero(base, dim)
                }
            }),
            PiKind::Delta(family) => {
                let (f, g) = (a.as_multi().expect("multi"), b.as_multi().expect("multi"));
                match f.sub(g) {
                    Ok(h) => family.power_map(&h).scale(base, &multi_binom(base, f, g)),
                    Err(_) => AddMap::zero(base, dim),
                }
            }
        }
    }

    /// `π^a_b(r)`.
    pub fn pi_apply(&self, a: &MonoidElem, b: &MonoidElem, r: &AlgElem<B::Elem>) -> AlgElem<B::Elem> {
        let base = self.algebra.base();
        match &self.kind {
            PiKind::Delta(family) => {
                let (f, g) = (a.as_multi().expect("multi"), b.as_multi().expect("multi"));
                match f.sub(g) {
                    Ok(h) => {
                        let c = multi_binom(base, f, g);
                        if base.is_zero(&c) {
                            return self.algebra.zero();
                        }
                        self.algebra.scale(&c, &family.apply_power(&h, r))
                    }
                    Err(_) => self.algebra.zero(),
                }
            }
            PiKind::Table(m) => match m.get(&(a.clone(), b.clone())) {
                Some(map) => map.apply(base, r),
                None if a == b => r.clone(),
                None => self.algebra.zero(),
            },
        }
    }

    /// The `c` for which `π^a_c` may be nonzero, in increasing order.
    pub fn support_row(&self, a: &MonoidElem) -> Vec<MonoidElem> {
        let mut out: Vec<MonoidElem> = match (&self.kind, &self.monoid) {
            (_, MonoidSpec::Finite { .. }) => self.monoid.elements(0),
            (PiKind::Delta(_), _) => {
                a.as_multi().expect("multi").divisors().into_iter().map(MonoidElem::Multi).collect()
            }
            (PiKind::Table(m), _) => {
                let mut s: BTreeSet<MonoidElem> =
                    m.keys().filter(|(x, _)| x == a).map(|(_, c)| c.clone()).collect();
                s.insert(a.clone());
                s.into_iter().collect()
            }
        };
        out.sort_by(|x, y| self.monoid.cmp(x, y));
        out
    }

    /// The elements over which axioms quantify.
    pub fn range(&self, cap: u64) -> Vec<MonoidElem> {
        self.monoid.elements(cap)
    }

    /// Rows whose joint kernel is `R^G`: every row of `π^a_b - δ_{a,b} id`
    /// over the range.
    pub fn fixed_conditions(&self, cap: u64) -> Vec<Vector<B>> {
        let base = self.algebra.base();
        let id = AddMap::identity(base, self.algebra.dim());
        let elems = self.range(cap);
        let mut rows: Vec<Vector<B>> = Vec::new();
        for a in &elems {
            for b in &elems {
                let mut m = self.lookup(a, b);
                if a == b {
                    m = m.sub(base, &id);
                }
                rows.extend(m.matrix().iter().filter(|r| !linalg::is_zero_vector(base, r)).cloned());
            }
        }
        rows
    }

    /// `R^G`: solutions of `π^a_b(r) = δ_{a,b} r` over the range.
    pub fn fixed_subring(&self, cap: u64) -> Vec<AlgElem<B::Elem>> {
        let base = self.algebra.base();
        linalg::kernel(base, &self.fixed_conditions(cap), self.algebra.dim()).into_iter().map(AlgElem::new).collect()
    }
}

/// The axioms and properties reported by [`check_all`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    D0,
    D1,
    D2,
    D3,
    D4,
    D5,
    D6,
    D7,
    D8,
    Commutative,
    WellOrdered,
}

impl Axiom {
    pub const ALL: [Axiom; 11] = [
        Axiom::D0,
        Axiom::D1,
        Axiom::D2,
        Axiom::D3,
        Axiom::D4,
        Axiom::D5,
        Axiom::D6,
        Axiom::D7,
        Axiom::D8,
        Axiom::Commutative,
        Axiom::WellOrdered,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::D0 => "D0",
            Axiom::D1 => "D1",
            Axiom::D2 => "D2",
            Axiom::D3 => "D3",
            Axiom::D4 => "D4",
            Axiom::D5 => "D5",
            Axiom::D6 => "D6",
            Axiom::D7 => "D7",
            Axiom::D8 => "D8",
            Axiom::Commutative => "commutative",
            Axiom::WellOrdered => "well_ordered",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A concrete failing instance of an axiom.
///
/// `monoid` and `basis` hold the quantified monoid elements and basis indices
/// in the order they appear in the axiom; `element` is the `R^G` element for
/// D7/D8.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness<E> {
    pub axiom: Axiom,
    pub monoid: Vec<MonoidElem>,
    pub basis: Vec<usize>,
    pub element: Option<AlgElem<E>>,
}

impl<E: Clone + Eq> Witness<E> {
    /// Re-evaluates the single instance; `true` when it still fails.
    pub fn recheck<B: BaseRing<Elem = E>>(&self, pi: &PiStructure<B>) -> bool {
        violates(pi, self.axiom, &self.monoid, &self.basis, self.element.as_ref())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomStatus<E> {
    Pass,
    Fail(Witness<E>),
}

impl<E> AxiomStatus<E> {
    pub fn passed(&self) -> bool {
        matches!(self, AxiomStatus::Pass)
    }

    pub fn witness(&self) -> Option<&Witness<E>> {
        match self {
            AxiomStatus::Pass => None,
            AxiomStatus::Fail(w) => Some(w),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport<E> {
    pub entries: Vec<(Axiom, AxiomStatus<E>)>,
    /// Weight cap for `N^k`; `None` when the check was exhaustive.
    pub cap: Option<u64>,
}

impl<E> AxiomReport<E> {
    pub fn status(&self, axiom: Axiom) -> &AxiomStatus<E> {
        &self.entries.iter().find(|(a, _)| *a == axiom).expect("every axiom is reported").1
    }

    pub fn passed(&self, axiom: Axiom) -> bool {
        self.status(axiom).passed()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Classification {
    pub g_derivation: bool,
    pub unital: bool,
    pub strong_left: bool,
    pub strong_right: bool,
    pub d_structure: bool,
    pub commutative: bool,
    pub well_ordered: bool,
}

impl Classification {
    pub fn strong(&self) -> bool {
        self.g_derivation && (self.strong_left || self.strong_right)
    }

    pub fn from_report<E>(report: &AxiomReport<E>) -> Self {
        let p = |a| report.passed(a);
        let g_derivation = [Axiom::D0, Axiom::D1, Axiom::D2, Axiom::D3, Axiom::D4].into_iter().all(p);
        Self {
            g_derivation,
            unital: g_derivation && p(Axiom::D6),
            strong_left: g_derivation && p(Axiom::D7),
            strong_right: g_derivation && p(Axiom::D8),
            d_structure: g_derivation && p(Axiom::D5),
            commutative: p(Axiom::Commutative),
            well_ordered: p(Axiom::WellOrdered),
        }
    }
}

fn elem_eq<B: BaseRing>(alg: &Algebra<B>, a: &AlgElem<B::Elem>, b: &AlgElem<B::Elem>) -> bool {
    alg.is_zero(&alg.difference(a, b))
}

// One evaluation of one axiom instance; `true` when the instance fails.
fn violates<B: BaseRing>(
    pi: &PiStructure<B>,
    axiom: Axiom,
    m: &[MonoidElem],
    basis: &[usize],
    t: Option<&AlgElem<B::Elem>>,
) -> bool {
    let alg = &pi.algebra;
    let g = &pi.monoid;
    let e = g.identity();
    let ej = |j: usize| alg.basis(j);
    match axiom {
        Axiom::D0 => false,
        Axiom::D1 => {
            let r = ej(basis[0]);
            let want = if m[1] == e { r.clone() } else { alg.zero() };
            !elem_eq(alg, &pi.pi_apply(&e, &m[1], &r), &want)
        }
        Axiom::D2 => {
            let want = if m[0] == m[1] { alg.one() } else { alg.zero() };
            !elem_eq(alg, &pi.pi_apply(&m[0], &m[1], &alg.one()), &want)
        }
        Axiom::D3 => {
            let (r, s) = (ej(basis[0]), ej(basis[1]));
            let lhs = pi.pi_apply(&m[0], &m[1], &alg.sum(&r, &s));
            let rhs = alg.sum(&pi.pi_apply(&m[0], &m[1], &r), &pi.pi_apply(&m[0], &m[1], &s));
            !elem_eq(alg, &lhs, &rhs)
        }
        Axiom::D4 => {
            let (a, b, c) = (&m[0], &m[1], &m[2]);
            let r = ej(basis[0]);
            let lhs = pi.pi_apply(&g.op_unchecked(a, b), c, &r);
            let mut rhs = alg.zero();
            for (d, f) in g.factorizations(c).expect("c in monoid") {
                let inner = pi.pi_apply(b, &f, &r);
                if !alg.is_zero(&inner) {
                    rhs = alg.sum(&rhs, &pi.pi_apply(a, &d, &inner));
                }
            }
            !elem_eq(alg, &lhs, &rhs)
        }
        Axiom::D5 => {
            let (a, b) = (&m[0], &m[1]);
            let (r, s) = (ej(basis[0]), ej(basis[1]));
            let lhs = pi.pi_apply(a, b, &alg.product(&r, &s));
            let mut rhs = alg.zero();
            for c in pi.support_row(a) {
                let left = pi.pi_apply(a, &c, &r);
                if !alg.is_zero(&left) {
                    rhs = alg.sum(&rhs, &alg.product(&left, &pi.pi_apply(&c, b, &s)));
                }
            }
            !elem_eq(alg, &lhs, &rhs)
        }
        Axiom::D6 => {
            let r = ej(basis[0]);
            !elem_eq(alg, &pi.pi_apply(&m[0], &m[0], &r), &r)
        }
        Axiom::D7 | Axiom::D8 => {
            let t = t.expect("fixed element");
            let r = ej(basis[0]);
            let (a, b) = (&m[0], &m[1]);
            let (lhs, rhs) = if axiom == Axiom::D7 {
                (pi.pi_apply(a, b, &alg.product(t, &r)), alg.product(t, &pi.pi_apply(a, b, &r)))
            } else {
                (pi.pi_apply(a, b, &alg.product(&r, t)), alg.product(&pi.pi_apply(a, b, &r), t))
            };
            !elem_eq(alg, &lhs, &rhs)
        }
        Axiom::Commutative => {
            let r = ej(basis[0]);
            let one = pi.pi_apply(&m[0], &m[1], &pi.pi_apply(&m[2], &m[3], &r));
            let two = pi.pi_apply(&m[2], &m[3], &pi.pi_apply(&m[0], &m[1], &r));
            !elem_eq(alg, &one, &two)
        }
        Axiom::WellOrdered => {
            g.cmp(&m[0], &m[1]) == std::cmp::Ordering::Less
                && !alg.is_zero(&pi.pi_apply(&m[0], &m[1], &ej(basis[0])))
        }
    }
}

fn first_failure<B: BaseRing>(
    pi: &PiStructure<B>,
    axiom: Axiom,
    tuples: impl IntoIterator<Item = Vec<MonoidElem>>,
    basis_arity: usize,
    fixed: &[AlgElem<B::Elem>],
) -> AxiomStatus<B::Elem> {
    let dim = pi.algebra.dim();
    let basis_tuples: Vec<Vec<usize>> = match basis_arity {
        0 => vec![vec![]],
        1 => (0..dim).map(|i| vec![i]).collect(),
        _ => (0..dim).flat_map(|i| (0..dim).map(move |j| vec![i, j])).collect(),
    };
    let elements: Vec<Option<&AlgElem<B::Elem>>> =
        if matches!(axiom, Axiom::D7 | Axiom::D8) { fixed.iter().map(Some).collect() } else { vec![None] };
    for m in tuples {
        for t in &elements {
            for bt in &basis_tuples {
                if violates(pi, axiom, &m, bt, *t) {
                    return AxiomStatus::Fail(Witness {
                        axiom,
                        monoid: m.clone(),
                        basis: bt.clone(),
                        element: t.cloned(),
                    });
                }
            }
        }
    }
    AxiomStatus::Pass
}

/// Checks one axiom. Over `N^k` the quantifiers range over weight `≤ cap`
/// (for D4, pairs with `|a| + |b| ≤ cap`); finite monoids ignore `cap`.
pub fn check_axiom<B: BaseRing>(pi: &PiStructure<B>, axiom: Axiom, cap: u64) -> AxiomStatus<B::Elem> {
    let elems = pi.range(cap);
    let g = &pi.monoid;
    let weight = |x: &MonoidElem| x.as_multi().map_or(0, |m| m.weight());
    let pairs = || elems.iter().flat_map(|a| elems.iter().map(move |b| vec![a.clone(), b.clone()]));
    let support_pairs = || {
        elems.iter().flat_map(move |a| pi.support_row(a).into_iter().map(move |b| vec![a.clone(), b]))
    };
    match axiom {
        Axiom::D0 => AxiomStatus::Pass,
        Axiom::D1 => first_failure(pi, axiom, elems.iter().map(|a| vec![g.identity(), a.clone()]), 1, &[]),
        Axiom::D2 => first_failure(pi, axiom, pairs(), 0, &[]),
        Axiom::D3 => first_failure(pi, axiom, support_pairs(), 2, &[]),
        Axiom::D4 => {
            let mut tuples = Vec::new();
            for a in &elems {
                for b in &elems {
                    if g.is_finite() || weight(a) + weight(b) <= cap {
                        let ab = g.op_unchecked(a, b);
                        let mut cs: BTreeSet<MonoidElem> = pi.support_row(&ab).into_iter().collect();
                        for d in pi.support_row(a) {
                            for f in pi.support_row(b) {
                                cs.insert(g.op_unchecked(&d, &f));
                            }
                        }
                        let mut cs: Vec<_> = cs.into_iter().collect();
                        cs.sort_by(|x, y| g.cmp(x, y));
                        tuples.extend(cs.into_iter().map(|c| vec![a.clone(), b.clone(), c]));
                    }
                }
            }
            first_failure(pi, axiom, tuples, 1, &[])
        }
        Axiom::D5 => first_failure(pi, axiom, pairs(), 2, &[]),
        Axiom::D6 => first_failure(pi, axiom, elems.iter().map(|a| vec![a.clone()]), 1, &[]),
        Axiom::D7 | Axiom::D8 => {
            let fixed = pi.fixed_subring(cap);
            first_failure(pi, axiom, support_pairs(), 1, &fixed)
        }
        Axiom::Commutative => {
            let sp: Vec<Vec<MonoidElem>> = support_pairs().collect();
            let quads = sp.iter().enumerate().flat_map(|(i, x)| {
                sp[i + 1..].iter().map(move |y| vec![x[0].clone(), x[1].clone(), y[0].clone(), y[1].clone()])
            });
            first_failure(pi, axiom, quads, 1, &[])
        }
        Axiom::WellOrdered => first_failure(pi, axiom, pairs(), 1, &[]),
    }
}

pub fn check_all<B: BaseRing>(pi: &PiStructure<B>, cap: u64) -> AxiomReport<B::Elem> {
    AxiomReport {
        entries: Axiom::ALL.iter().map(|&a| (a, check_axiom(pi, a, cap))).collect(),
        cap: (!pi.monoid.is_finite()).then_some(cap),
    }
}

pub fn classify<B: BaseRing>(pi: &PiStructure<B>, cap: u64) -> Classification {
    Classification::from_report(&check_all(pi, cap))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::scalar::Residues;
    use crate::Rationals;

    fn m(v: &[u64]) -> MonoidElem {
        MonoidElem::Multi(MultiIndex::new(v.to_vec()))
    }

    fn section3() -> PiStructure<Residues> {
        let f2 = Residues::prime_field(2).unwrap();
        let r = catalog::product_ring(f2, 2);
        let p = catalog::sum_projection(&r);
        PiStructure::table(r, MonoidSpec::two_element_idempotent(), vec![(MonoidElem::Index(1), MonoidElem::Index(0), p)])
            .unwrap()
    }

    #[test]
    fn section3_axioms() {
        let pi = section3();
        let report = check_all(&pi, 0);
        for a in [Axiom::D0, Axiom::D1, Axiom::D2, Axiom::D3, Axiom::D4, Axiom::D6, Axiom::D7, Axiom::D8] {
            assert!(report.passed(a), "{a}");
        }
        let w = report.status(Axiom::D5).witness().unwrap();
        assert_eq!(w.monoid, vec![MonoidElem::Index(1), MonoidElem::Index(0)]);
        assert_eq!(w.basis, vec![0, 0]);
        assert!(w.recheck(&pi));
        let c = Classification::from_report(&report);
        assert!(c.g_derivation && c.unital && c.strong_left && c.strong_right && c.commutative && c.well_ordered);
        assert!(!c.d_structure);
        assert_eq!(pi.fixed_subring(0), vec![AlgElem::new(vec![1, 1])]);
    }

    #[test]
    fn delta_generated_lookup() {
        let q = Rationals::new();
        let r = catalog::truncated_polynomial(q, 3);
        let d = catalog::derivative(&r);
        let family = DeltaFamily::new(r.clone(), vec![d.clone()]).unwrap();
        let pi = PiStructure::delta_generated(family.clone());
        assert_eq!(pi.pi_lookup(&m(&[2]), &m(&[1])).unwrap(), d.scale(&q, &q.from_i64(2)));
        assert_eq!(pi.pi_lookup(&m(&[3]), &m(&[3])).unwrap(), AddMap::identity(&q, 3));
        assert_eq!(family.r_delta(), vec![r.one()]);
        assert!(family.is_commutative());
        assert_eq!(pi.fixed_subring(4), family.r_delta());
        let pi2 = PiStructure::delta_generated(DeltaFamily::new(r.clone(), vec![d.clone(), d]).unwrap());
        assert!(pi2.pi_lookup(&m(&[1, 0]), &m(&[0, 1])).unwrap().is_zero(&q));
        assert!(pi2.pi_lookup(&m(&[1]), &m(&[0])).is_err());
    }

    #[test]
    fn delta_must_kill_one() {
        let q = Rationals::new();
        let r = catalog::truncated_polynomial(q, 2);
        assert_eq!(DeltaFamily::new(r.clone(), vec![AddMap::identity(&q, 2)]), Err(PiError::DeltaMovesOne(0)));
        let empty = DeltaFamily::new(r.clone(), vec![]).unwrap();
        assert_eq!(empty.r_delta().len(), 2);
        assert!(empty.is_commutative());
    }

    #[test]
    fn delta_generated_over_f5_is_d_structure() {
        let f5 = Residues::prime_field(5).unwrap();
        let r = catalog::truncated_polynomial(f5, 5);
        let pi = PiStructure::delta_generated(DeltaFamily::new(r.clone(), vec![catalog::derivative(&r)]).unwrap());
        let report = check_all(&pi, 4);
        for a in Axiom::ALL {
            assert!(report.passed(a), "{a}");
        }
        assert_eq!(report.cap, Some(4));
    }

    #[test]
    fn noncommuting_inner_derivations_break_d4() {
        let f3 = Residues::prime_field(3).unwrap();
        let mat = catalog::matrix_algebra(f3, 2);
        let d1 = catalog::inner_derivation(&mat, &mat.basis(1));
        let d2 = catalog::inner_derivation(&mat, &mat.basis(2));
        let family = DeltaFamily::new(mat.clone(), vec![d1, d2]).unwrap();
        assert!(!family.is_commutative());
        let pi = PiStructure::delta_generated(family);
        let status = check_axiom(&pi, Axiom::D4, 2);
        let w = status.witness().expect("D4 fails");
        assert!(w.recheck(&pi));
        assert!(!check_axiom(&pi, Axiom::Commutative, 2).passed());
    }

    #[test]
    fn bivariate_family() {
        let f3 = Residues::prime_field(3).unwrap();
        let r = catalog::truncated_bivariate(f3, 3);
        let family =
            DeltaFamily::new(r.clone(), vec![catalog::partial(&r, 3, false), catalog::partial(&r, 3, true)]).unwrap();
        assert!(family.is_commutative());
        assert_eq!(family.r_delta(), vec![r.one()]);
        assert!(family.is_kernel_linear(true) && family.is_kernel_linear(false));
    }

    #[test]
    fn power_leibniz() {
        let f5 = Residues::prime_field(5).unwrap();
        let r = catalog::truncated_polynomial(f5, 5);
        assert!(leibniz_power_check(&r, &catalog::derivative(&r), 6));
        let q = Rationals::new();
        let r = catalog::truncated_polynomial(q, 4);
        assert!(leibniz_power_check(&r, &catalog::euler_derivation(&r), 6));
        assert_eq!(leibniz_power_violation(&r, &catalog::derivative(&r), 6), Some((1, 1, 3)));
    }

    #[test]
    fn materialized_table_matches() {
        let f5 = Residues::prime_field(5).unwrap();
        let r = catalog::truncated_polynomial(f5, 5);
        let pi = PiStructure::delta_generated(DeltaFamily::new(r.clone(), vec![catalog::derivative(&r)]).unwrap());
        let t = pi.materialize(4);
        for a in pi.range(4) {
            for b in pi.range(4) {
                assert_eq!(t.pi_lookup(&a, &b).unwrap(), pi.pi_lookup(&a, &b).unwrap());
            }
        }
        assert!(check_all(&t, 4).entries.iter().all(|(_, s)| s.passed()));
    }
}
