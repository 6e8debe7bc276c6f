//! Ideal closures, invariant simplicity of the coefficient ring, and the
//! simplicity deciders for `S = R[G; π]`.

use std::collections::BTreeMap;

use crate::addmap::{AddMap, DEFAULT_ORBIT_BOUND};
use crate::algebra::{AlgElem, Algebra};
use crate::linalg::{self, Subspace, Vector};
use crate::monoid::MonoidElem;
use crate::orering::{OreElem, OreRing};
use crate::pistructure::DeltaFamily;
use crate::scalar::BaseRing;

pub const DEFAULT_WEIGHT_CAP: u64 = 4;
pub const DEFAULT_BRUTE_FORCE_CAP: u64 = 1 << 20;
pub const DEFAULT_WITNESS_CAP: u64 = 8;

/// Limits shared by the deciders.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Weight cap for windows of a free monoid.
    pub weight: u64,
    /// Maximal number of powers computed for a map over characteristic zero.
    pub orbit_bound: usize,
    /// Largest number of elements enumerated exhaustively.
    pub brute_force: u64,
    /// Weight cap for unit and central-element searches.
    pub witness: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            weight: DEFAULT_WEIGHT_CAP,
            orbit_bound: DEFAULT_ORBIT_BOUND,
            brute_force: DEFAULT_BRUTE_FORCE_CAP,
            witness: DEFAULT_WITNESS_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SimplicityError {
    #[error("base {0} is not a field")]
    UnsupportedBase(String),
    #[error("wrong characteristic: expected {expected}, found {found}")]
    WrongCharacteristic { expected: &'static str, found: u64 },
    #[error("hypotheses not met: {}", .0.join(", "))]
    HypothesesNotMet(Vec<String>),
    #[error("{size} elements exceed the cap {cap}")]
    TooLarge { size: String, cap: u64 },
    #[error("operation needs a delta-generated ring")]
    WrongPiKind,
    #[error("operation needs a finite ring")]
    NotFinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Simple,
    NotSimple,
    Unknown,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Simple => "simple",
            Verdict::NotSimple => "not_simple",
            Verdict::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    BruteForce,
    Theorem33,
    Theorem413,
    Theorem415,
    WitnessSearch,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::BruteForce => "brute_force",
            Method::Theorem33 => "theorem_3_3",
            Method::Theorem413 => "theorem_4_13",
            Method::Theorem415 => "theorem_4_15",
            Method::WitnessSearch => "witness_search",
        }
    }
}

/// One summand `coefficient · δ_delta^(p^j)` of an inner combination; `j` is
/// `None` for the plain map `δ_delta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerTerm<E> {
    pub delta: usize,
    pub j: Option<u32>,
    pub coefficient: AlgElem<E>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence<E> {
    /// Simple by theorem; the checked hypotheses are in the report.
    Checks,
    /// Every nonzero element generates the whole ring.
    AllGenerate { elements: u64 },
    /// A proper nonzero invariant ideal of `R`.
    CoefficientIdeal { generator: AlgElem<E>, basis: Vec<AlgElem<E>> },
    /// A proper nonzero ideal of `S` generated by one element.
    RingIdeal { generator: OreElem<E>, dim: usize, ambient: usize },
    /// A non-trivial combination of maps equal to the inner derivation `δ_c`.
    InnerCombination { terms: Vec<InnerTerm<E>>, c: AlgElem<E> },
    /// A nonzero non-invertible element of `Z(S)^G`.
    CentralNonUnit { element: OreElem<E> },
    /// A monic non-constant central element, which cannot be invertible.
    CentralMonic { element: OreElem<E> },
    Inconclusive(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicityReport<E> {
    pub verdict: Verdict,
    pub method: Method,
    pub hypotheses: Vec<(String, bool)>,
    pub evidence: Evidence<E>,
    pub notes: Vec<String>,
}

/// Verdict on invariant simplicity of the coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffSimplicity<E> {
    pub verdict: Verdict,
    /// `exhaustive`, `closure_search` or `local_nilpotent`.
    pub method: &'static str,
    pub witness: Option<(AlgElem<E>, Vec<AlgElem<E>>)>,
}

fn require_field<B: BaseRing>(base: &B) -> Result<(), SimplicityError> {
    if base.is_field() {
        Ok(())
    } else {
        Err(SimplicityError::UnsupportedBase(base.tag()))
    }
}

fn worklist_close<B: BaseRing>(
    base: &B,
    ambient: usize,
    gens: &[Vector<B>],
    images: impl Fn(&Vector<B>) -> Vec<Vector<B>>,
    stop: impl Fn(&Subspace<B>) -> bool,
) -> Subspace<B> {
    let mut space = Subspace::new(base, ambient);
    let mut queue: Vec<Vector<B>> = Vec::new();
    for g in gens {
        if space.insert(g) {
            queue.push(g.clone());
        }
    }
    while let Some(v) = queue.pop() {
        if space.is_full() || stop(&space) {
            break;
        }
        for w in images(&v) {
            if space.insert(&w) {
                queue.push(w);
            }
        }
    }
    space
}

/// Least ideal of `R` containing `gens` and closed under every map in `maps`.
pub fn coefficient_ideal_closure<B: BaseRing>(
    alg: &Algebra<B>,
    gens: &[AlgElem<B::Elem>],
    maps: &[AddMap<B::Elem>],
) -> Result<Subspace<B>, SimplicityError> {
    let base = alg.base();
    require_field(base)?;
    let basis = alg.basis_elements();
    let gens: Vec<Vector<B>> = gens.iter().map(|g| g.coords.clone()).collect();
    Ok(worklist_close(
        base,
        alg.dim(),
        &gens,
        |v| {
            let v = AlgElem::new(v.clone());
            let mut out: Vec<Vector<B>> = Vec::new();
            for e in &basis {
                out.push(alg.product(e, &v).coords);
                out.push(alg.product(&v, e).coords);
            }
            out.extend(maps.iter().map(|m| m.apply(base, &v).coords));
            out
        },
        |_| false,
    ))
}

/// Nonzero vectors of `F_q^n` whose first nonzero coordinate is 1.
fn projective_points<B: BaseRing>(base: &B, n: usize) -> Vec<Vector<B>> {
    let scalars = base.elements().expect("finite base");
    let mut out = Vec::new();
    for lead in 0..n {
        let mut tails: Vec<Vector<B>> = vec![Vec::new()];
        for _ in lead + 1..n {
            tails = tails
                .into_iter()
                .flat_map(|t| scalars.iter().map(move |c| [t.clone(), vec![c.clone()]].concat()))
                .collect();
        }
        for t in tails {
            let mut v = vec![base.zero(); lead];
            v.push(base.one());
            v.extend(t);
            out.push(v);
        }
    }
    out
}

fn count_points(q: u64, n: usize) -> Option<u64> {
    q.checked_pow(n as u32)
}

/// Whether `{0}` and `R` are the only ideals of `R` closed under `maps`.
///
/// Over a finite field every nonzero element is tried when there are at most
/// `cap` of them. Otherwise closures of basis vectors and their pairwise sums
/// are searched for a proper ideal, and a structural test settles commutative
/// local algebras over characteristic zero.
pub fn is_g_simple_coeffring<B: BaseRing>(
    alg: &Algebra<B>,
    maps: &[AddMap<B::Elem>],
    cap: u64,
) -> Result<CoeffSimplicity<B::Elem>, SimplicityError> {
    let base = alg.base();
    require_field(base)?;
    let d = alg.dim();
    let proper = |g: &Vector<B>| -> Result<Option<(AlgElem<B::Elem>, Vec<AlgElem<B::Elem>>)>, SimplicityError> {
        let g = AlgElem::new(g.clone());
        let ideal = coefficient_ideal_closure(alg, std::slice::from_ref(&g), maps)?;
        Ok((!ideal.is_full()).then(|| (g, ideal.basis().iter().cloned().map(AlgElem::new).collect())))
    };
    if let Some(size) = base.size().and_then(|q| count_points(q, d)) {
        if size <= cap {
            for v in projective_points(base, d) {
                if let Some(w) = proper(&v)? {
                    return Ok(CoeffSimplicity { verdict: Verdict::NotSimple, method: "exhaustive", witness: Some(w) });
                }
            }
            return Ok(CoeffSimplicity { verdict: Verdict::Simple, method: "exhaustive", witness: None });
        }
    }
    let basis = alg.basis_elements();
    let mut candidates: Vec<Vector<B>> = basis.iter().map(|e| e.coords.clone()).collect();
    for i in 0..d {
        for j in i + 1..d {
            candidates.push(alg.sum(&basis[i], &basis[j]).coords);
        }
    }
    for v in &candidates {
        if let Some(w) = proper(v)? {
            return Ok(CoeffSimplicity { verdict: Verdict::NotSimple, method: "closure_search", witness: Some(w) });
        }
    }
    if base.characteristic() == 0 && local_nilpotent_escape(alg, maps) {
        return Ok(CoeffSimplicity { verdict: Verdict::Simple, method: "local_nilpotent", witness: None });
    }
    Ok(CoeffSimplicity { verdict: Verdict::Unknown, method: "closure_search", witness: None })
}

/// Sufficient test for invariant simplicity of a commutative associative
/// algebra over a characteristic-zero field whose nilradical `m` has
/// codimension one: for every `k` with `m^k ≠ 0`, each `x ∈ m^k` whose images
/// under all maps vanish modulo `m^k` already lies in `m^{k+1}`.
fn local_nilpotent_escape<B: BaseRing>(alg: &Algebra<B>, maps: &[AddMap<B::Elem>]) -> bool {
    if !alg.is_commutative() || !alg.is_associative() {
        return false;
    }
    let base = alg.base();
    let d = alg.dim();
    let basis = alg.basis_elements();
    let trace = |a: &AlgElem<B::Elem>| {
        (0..d).fold(base.zero(), |acc, j| base.add(&acc, &alg.product(a, &basis[j]).coords[j]))
    };
    let form: Vec<Vector<B>> =
        (0..d).map(|i| (0..d).map(|j| trace(&alg.product(&basis[i], &basis[j]))).collect()).collect();
    let m_basis = linalg::kernel(base, &form, d);
    if m_basis.len() + 1 != d {
        return false;
    }
    let m = Subspace::spanned_by(base, d, &m_basis);
    let mut power = m.clone();
    while power.dim() > 0 {
        let mut next = Subspace::new(base, d);
        for a in power.basis() {
            for b in m.basis() {
                next.insert(&alg.product(&AlgElem::new(a.clone()), &AlgElem::new(b.clone())).coords);
            }
        }
        // columns: images of the basis of m^k, each map reduced mod m^k
        let cols: Vec<Vector<B>> = power
            .basis()
            .iter()
            .map(|b| {
                let b = AlgElem::new(b.clone());
                maps.iter().flat_map(|f| power.reduce(&f.apply(base, &b).coords)).collect()
            })
            .collect();
        let rows: Vec<Vector<B>> =
            (0..maps.len() * d).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
        for lam in linalg::kernel(base, &rows, power.dim()) {
            let mut x = linalg::zero_vector(base, d);
            for (l, b) in lam.iter().zip(power.basis()) {
                linalg::axpy(base, &mut x, l, b);
            }
            if !next.contains(&x) {
                return false;
            }
        }
        if next.dim() == power.dim() {
            return false;
        }
        power = next;
    }
    true
}

/// Some `c` in the span of `domain` with `target(r) = cr - rc` for all `r`.
pub fn is_inner_from<B: BaseRing>(
    alg: &Algebra<B>,
    target: &AddMap<B::Elem>,
    domain: &[AlgElem<B::Elem>],
) -> Option<AlgElem<B::Elem>> {
    let base = alg.base();
    let d = alg.dim();
    let brackets: Vec<Vec<AlgElem<B::Elem>>> = domain
        .iter()
        .map(|w| alg.basis_elements().iter().map(|e| alg.difference(&alg.product(w, e), &alg.product(e, w))).collect())
        .collect();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for j in 0..d {
        let t = target.apply(base, &alg.basis(j));
        for k in 0..d {
            rows.push(brackets.iter().map(|b| b[j].coords[k].clone()).collect::<Vector<B>>());
            rhs.push(t.coords[k].clone());
        }
    }
    let lam = linalg::solve(base, &rows, &rhs, domain.len())?;
    let mut c = alg.zero();
    for (l, w) in lam.iter().zip(domain) {
        c = alg.sum(&c, &alg.scale(l, w));
    }
    Some(c)
}

/// `F = Z(R)_Δ = Z(R) ∩ R_Δ`.
pub fn center_kernel<B: BaseRing>(family: &DeltaFamily<B>) -> Vec<AlgElem<B::Elem>> {
    let alg = family.algebra();
    let base = alg.base();
    let z: Vec<Vector<B>> = alg.center().into_iter().map(|e| e.coords).collect();
    let k: Vec<Vector<B>> = family.r_delta().into_iter().map(|e| e.coords).collect();
    let (z, k) = (Subspace::spanned_by(base, alg.dim(), &z), Subspace::spanned_by(base, alg.dim(), &k));
    z.intersect(&k).basis().iter().cloned().map(AlgElem::new).collect()
}

/// Whether the span of `basis` is a field: `Some(true/false)` when decided,
/// `None` when it cannot be enumerated.
pub fn span_is_field<B: BaseRing>(alg: &Algebra<B>, basis: &[AlgElem<B::Elem>], cap: u64) -> Option<bool> {
    let base = alg.base();
    if basis.is_empty() {
        return Some(false);
    }
    let space = Subspace::spanned_by(base, alg.dim(), basis.iter().map(|b| &b.coords));
    if !space.contains(&alg.one().coords) {
        return Some(false);
    }
    if space.dim() == 1 {
        return Some(true);
    }
    let zero_divisor = basis.iter().any(|z| basis.iter().any(|w| alg.is_zero(&alg.product(z, w))));
    if zero_divisor {
        return Some(false);
    }
    let size = base.size().and_then(|q| count_points(q, space.dim()))?;
    if size > cap {
        return None;
    }
    let elems: Vec<AlgElem<B::Elem>> = space.enumerate()?.into_iter().map(AlgElem::new).collect();
    let one = alg.one();
    Some(elems.iter().filter(|z| !alg.is_zero(z)).all(|z| {
        elems.iter().any(|w| alg.product(z, w) == one && alg.product(w, z) == one)
    }))
}

fn kernel_hypotheses<B: BaseRing>(family: &DeltaFamily<B>, cap: u64) -> (Vec<(String, bool)>, Option<bool>) {
    let f = center_kernel(family);
    let field = span_is_field(family.algebra(), &f, cap);
    let hyps = vec![
        ("delta_commutative".to_string(), family.is_commutative()),
        (
            "kernel_derivations".to_string(),
            family.is_kernel_linear(true) || family.is_kernel_linear(false),
        ),
        ("F_is_field".to_string(), field.unwrap_or(true)),
    ];
    (hyps, field)
}

/// A non-trivial `F`-combination of `maps` equal to some `δ_c`, `c ∈ R_Δ`.
fn inner_combination<B: BaseRing>(
    family: &DeltaFamily<B>,
    maps: &[(usize, Option<u32>, AddMap<B::Elem>)],
) -> Option<(Vec<InnerTerm<B::Elem>>, AlgElem<B::Elem>)> {
    let alg = family.algebra();
    let base = alg.base();
    let d = alg.dim();
    let f = center_kernel(family);
    let kernel = family.r_delta();
    let basis = alg.basis_elements();
    // columns: λ_{t,l} then μ_m
    let mut cols: Vec<Vector<B>> = Vec::new();
    for (_, _, m) in maps {
        for phi in &f {
            cols.push(basis.iter().flat_map(|e| alg.product(phi, &m.apply(base, e)).coords).collect());
        }
    }
    let lam_len = cols.len();
    for w in &kernel {
        cols.push(basis.iter().flat_map(|e| alg.difference(&alg.product(e, w), &alg.product(w, e)).coords).collect());
    }
    let rows: Vec<Vector<B>> = (0..d * d).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    let sol = linalg::kernel(base, &rows, cols.len())
        .into_iter()
        .find(|v| !linalg::is_zero_vector(base, &v[..lam_len]))?;
    let mut terms = Vec::new();
    for (t, (delta, j, _)) in maps.iter().enumerate() {
        let mut coef = alg.zero();
        for (l, phi) in f.iter().enumerate() {
            coef = alg.sum(&coef, &alg.scale(&sol[t * f.len() + l], phi));
        }
        if !alg.is_zero(&coef) {
            terms.push(InnerTerm { delta: *delta, j: *j, coefficient: coef });
        }
    }
    let mut c = alg.zero();
    for (m, w) in kernel.iter().enumerate() {
        c = alg.sum(&c, &alg.scale(&sol[lam_len + m], w));
    }
    Some((terms, c))
}

/// `δ^(p^j)`.
pub fn p_power_map<B: BaseRing>(base: &B, delta: &AddMap<B::Elem>, p: u64, j: u32) -> AddMap<B::Elem> {
    match delta.power_orbit(base, DEFAULT_ORBIT_BOUND) {
        Ok(orbit) => {
            let mut idx = orbit.index_of(1);
            for _ in 0..j {
                idx = orbit.index_of(p * idx as u64);
            }
            orbit.powers[idx].clone()
        }
        Err(_) => delta.power(base, p.pow(j)),
    }
}

/// Re-evaluates an inner-combination witness: `Σ coef · map = δ_c` with some
/// coefficient nonzero.
pub fn verify_inner_combination<B: BaseRing>(
    family: &DeltaFamily<B>,
    terms: &[InnerTerm<B::Elem>],
    c: &AlgElem<B::Elem>,
) -> bool {
    let alg = family.algebra();
    let base = alg.base();
    let p = base.characteristic();
    if terms.iter().all(|t| alg.is_zero(&t.coefficient)) {
        return false;
    }
    alg.basis_elements().iter().all(|r| {
        let mut lhs = alg.zero();
        for t in terms {
            let delta = &family.deltas()[t.delta];
            let map = match t.j {
                None => delta.clone(),
                Some(j) => p_power_map(base, delta, p, j),
            };
            lhs = alg.sum(&lhs, &alg.product(&t.coefficient, &map.apply(base, r)));
        }
        lhs == alg.difference(&alg.product(c, r), &alg.product(r, c))
    })
}

fn theorem_verdict<B: BaseRing>(
    family: &DeltaFamily<B>,
    maps: Vec<(usize, Option<u32>, AddMap<B::Elem>)>,
    method: Method,
    caps: &Caps,
) -> Result<SimplicityReport<B::Elem>, SimplicityError> {
    let cap = caps.brute_force;
    let (mut hypotheses, field) = kernel_hypotheses(family, cap);
    let failing: Vec<String> = hypotheses.iter().filter(|(_, ok)| !ok).map(|(h, _)| h.clone()).collect();
    if !failing.is_empty() {
        return Err(SimplicityError::HypothesesNotMet(failing));
    }
    let mut notes = Vec::new();
    if field.is_none() {
        notes.push("F could not be enumerated; field property assumed unverified".to_string());
    }
    if let Some((terms, c)) = inner_combination(family, &maps) {
        hypotheses.push(("no_inner_combination".to_string(), false));
        return Ok(SimplicityReport {
            verdict: Verdict::NotSimple,
            method,
            hypotheses,
            evidence: Evidence::InnerCombination { terms, c },
            notes,
        });
    }
    hypotheses.push(("no_inner_combination".to_string(), true));
    let simple = is_g_simple_coeffring(family.algebra(), family.deltas(), cap)?;
    hypotheses.push((format!("R_delta_simple[{}]", simple.method), simple.verdict == Verdict::Simple));
    let (verdict, evidence) = match (simple.verdict, simple.witness) {
        (Verdict::NotSimple, Some((generator, basis))) => {
            (Verdict::NotSimple, Evidence::CoefficientIdeal { generator, basis })
        }
        (Verdict::Simple, _) if field.is_some() => (Verdict::Simple, Evidence::Checks),
        _ => (Verdict::Unknown, Evidence::Inconclusive("delta-simplicity of R undecided".to_string())),
    };
    Ok(SimplicityReport { verdict, method, hypotheses, evidence, notes })
}

/// Simplicity of `R[N^k; π]` in characteristic zero.
pub fn decide_simple_char0<B: BaseRing>(
    family: &DeltaFamily<B>,
    caps: &Caps,
) -> Result<SimplicityReport<B::Elem>, SimplicityError> {
    let base = family.algebra().base();
    if base.characteristic() != 0 {
        return Err(SimplicityError::WrongCharacteristic { expected: "0", found: base.characteristic() });
    }
    let maps = family.deltas().iter().enumerate().map(|(i, d)| (i, None, d.clone())).collect();
    theorem_verdict(family, maps, Method::Theorem413, caps)
}

/// The maps `δ_i^(p^j)` for `j = 0, 1, …` up to and including the first
/// repetition.
pub fn p_power_maps<B: BaseRing>(
    family: &DeltaFamily<B>,
    orbit_bound: usize,
) -> Vec<(usize, Option<u32>, AddMap<B::Elem>)> {
    let base = family.algebra().base();
    let p = base.characteristic();
    let mut out = Vec::new();
    for (i, d) in family.deltas().iter().enumerate() {
        let orbit = d.power_orbit(base, orbit_bound).expect("orbits over a finite base terminate");
        let mut seen = Vec::new();
        let mut idx = orbit.index_of(1);
        for j in 0.. {
            out.push((i, Some(j), orbit.powers[idx].clone()));
            if seen.contains(&idx) {
                break;
            }
            seen.push(idx);
            idx = orbit.index_of(p * idx as u64);
        }
    }
    out
}

/// Simplicity of `R[N^k; π]` over `F_p`.
pub fn decide_simple_charp<B: BaseRing>(
    family: &DeltaFamily<B>,
    caps: &Caps,
) -> Result<SimplicityReport<B::Elem>, SimplicityError> {
    let base = family.algebra().base();
    if base.characteristic() == 0 {
        return Err(SimplicityError::WrongCharacteristic { expected: "p > 0", found: 0 });
    }
    require_field(base)?;
    theorem_verdict(family, p_power_maps(family, caps.orbit_bound), Method::Theorem415, caps)
}

/// Coordinates of `S` restricted to a finite set of exponents.
#[derive(Debug, Clone)]
pub struct Window {
    exps: Vec<MonoidElem>,
    index: BTreeMap<MonoidElem, usize>,
    dim: usize,
}

impl Window {
    pub fn new<B: BaseRing>(ring: &OreRing<B>, cap: u64) -> Self {
        let exps = ring.window_exponents(cap);
        let index = exps.iter().enumerate().map(|(i, a)| (a.clone(), i)).collect();
        Self { exps, index, dim: ring.algebra().dim() }
    }

    pub fn len(&self) -> usize {
        self.exps.len() * self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponents(&self) -> &[MonoidElem] {
        &self.exps
    }

    pub fn coords<B: BaseRing>(&self, ring: &OreRing<B>, u: &OreElem<B::Elem>) -> Option<Vector<B>> {
        let mut v = linalg::zero_vector(ring.base(), self.len());
        for (a, r) in u.terms() {
            let k = *self.index.get(a)?;
            v[k * self.dim..][..self.dim].clone_from_slice(&r.coords);
        }
        Some(v)
    }

    pub fn element<B: BaseRing>(&self, ring: &OreRing<B>, v: &[B::Elem]) -> OreElem<B::Elem> {
        let terms =
            self.exps.iter().enumerate().map(|(k, a)| (a.clone(), AlgElem::new(v[k * self.dim..][..self.dim].to_vec())));
        ring.element(terms.collect()).expect("window exponents")
    }
}

/// Ideal of `S` generated by `gens` inside a window: closed under left and
/// right multiplication by `multipliers` (products leaving the window are
/// dropped) and, with `invariant`, under every `π̃^a_b` on window exponents.
/// The closure stops as soon as it contains `1`.
pub fn ring_ideal_closure<B: BaseRing>(
    ring: &OreRing<B>,
    window: &Window,
    gens: &[OreElem<B::Elem>],
    multipliers: &[OreElem<B::Elem>],
    invariant: bool,
) -> Result<Subspace<B>, SimplicityError> {
    let base = ring.base();
    require_field(base)?;
    let gens: Vec<Vector<B>> = gens.iter().filter_map(|g| window.coords(ring, g)).collect();
    let one = window.coords(ring, &ring.one()).expect("identity is in every window");
    let pairs: Vec<(MonoidElem, MonoidElem)> = if invariant {
        let e = window.exponents();
        e.iter().flat_map(|a| e.iter().map(move |b| (a.clone(), b.clone()))).collect()
    } else {
        Vec::new()
    };
    Ok(worklist_close(
        base,
        window.len(),
        &gens,
        |v| {
            let u = window.element(ring, v);
            let mut out = Vec::new();
            for m in multipliers {
                out.extend(window.coords(ring, &ring.mul(m, &u)));
                out.extend(window.coords(ring, &ring.mul(&u, m)));
            }
            for (a, b) in &pairs {
                out.extend(window.coords(ring, &ring.extend_pi(a, b, &u)));
            }
            out
        },
        |space| space.contains(&one),
    ))
}

/// Outcome of [`decide_brute_force`]: plain simplicity and G-simplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteForceReport<E> {
    pub simple: SimplicityReport<E>,
    pub g_simple: SimplicityReport<E>,
    pub elements: u64,
}

/// Exhaustive simplicity of a finite `S`.
pub fn decide_brute_force<B: BaseRing>(
    ring: &OreRing<B>,
    cap: u64,
) -> Result<BruteForceReport<B::Elem>, SimplicityError> {
    if !ring.is_finite() {
        return Err(SimplicityError::NotFinite);
    }
    let base = ring.base();
    require_field(base)?;
    let window = Window::new(ring, 0);
    let q = base.size().expect("finite");
    let size = count_points(q, window.len())
        .filter(|&s| s <= cap)
        .ok_or_else(|| SimplicityError::TooLarge { size: format!("{q}^{}", window.len()), cap })?;
    let monomials = ring.window_monomials(0);
    let points = projective_points(base, window.len());
    let one = window.coords(ring, &ring.one()).expect("identity");
    let run = |invariant: bool| -> Result<SimplicityReport<B::Elem>, SimplicityError> {
        for v in &points {
            let s = window.element(ring, v);
            let ideal = ring_ideal_closure(ring, &window, std::slice::from_ref(&s), &monomials, invariant)?;
            if !ideal.contains(&one) {
                return Ok(SimplicityReport {
                    verdict: Verdict::NotSimple,
                    method: Method::BruteForce,
                    hypotheses: vec![],
                    evidence: Evidence::RingIdeal { generator: s, dim: ideal.dim(), ambient: window.len() },
                    notes: vec![],
                });
            }
        }
        Ok(SimplicityReport {
            verdict: Verdict::Simple,
            method: Method::BruteForce,
            hypotheses: vec![],
            evidence: Evidence::AllGenerate { elements: size - 1 },
            notes: vec![],
        })
    };
    let simple = run(false)?;
    let g_simple = if simple.verdict == Verdict::Simple { simple.clone() } else { run(true)? };
    Ok(BruteForceReport { simple, g_simple, elements: size })
}

/// Re-checks a `RingIdeal` witness: the closure of the generator is proper.
pub fn verify_ring_ideal<B: BaseRing>(ring: &OreRing<B>, generator: &OreElem<B::Elem>, invariant: bool) -> bool {
    let window = Window::new(ring, 0);
    let monomials = ring.window_monomials(0);
    let one = window.coords(ring, &ring.one()).expect("identity");
    !generator.is_zero()
        && ring_ideal_closure(ring, &window, std::slice::from_ref(generator), &monomials, invariant)
            .is_ok_and(|i| !i.contains(&one))
}

/// Re-checks a `CoefficientIdeal` witness: the ideal is nonzero, proper and
/// closed under the maps.
pub fn verify_coefficient_ideal<B: BaseRing>(
    alg: &Algebra<B>,
    maps: &[AddMap<B::Elem>],
    generator: &AlgElem<B::Elem>,
) -> bool {
    !alg.is_zero(generator)
        && coefficient_ideal_closure(alg, std::slice::from_ref(generator), maps).is_ok_and(|i| !i.is_full())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitSearch {
    pub found: bool,
    pub ideal_dim: usize,
    pub window_dim: usize,
    pub cap: u64,
}

/// Whether the two-sided ideal generated by `s` reaches `1` inside the
/// window of weight `≤ cap`, multiplying by `e_i x^0` and `x^g` for monoid
/// generators `g`.
pub fn witness_unit_in_ideal<B: BaseRing>(
    ring: &OreRing<B>,
    s: &OreElem<B::Elem>,
    cap: u64,
) -> Result<UnitSearch, SimplicityError> {
    let window = Window::new(ring, cap);
    let alg = ring.algebra();
    let mut multipliers: Vec<OreElem<B::Elem>> = (0..alg.dim()).map(|i| ring.constant(&alg.basis(i))).collect();
    multipliers.extend(ring.monoid().generators().iter().map(|g| ring.x(g)));
    let ideal = ring_ideal_closure(ring, &window, std::slice::from_ref(s), &multipliers, false)?;
    let one = window.coords(ring, &ring.one()).expect("identity");
    Ok(UnitSearch { found: ideal.contains(&one), ideal_dim: ideal.dim(), window_dim: window.len(), cap })
}

/// Least non-constant monic central element found by [`center_structure_search`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterSearch<E> {
    pub element: Option<OreElem<E>>,
    pub degree: Option<MonoidElem>,
    /// `linear` in characteristic zero, `p_power` in characteristic `p`.
    pub expected_shape: &'static str,
    pub shape_ok: bool,
    pub anomalies: Vec<String>,
    pub cap: u64,
}

pub fn center_structure_search<B: BaseRing>(
    ring: &OreRing<B>,
    cap: u64,
) -> Result<CenterSearch<B::Elem>, SimplicityError> {
    ring.pi().delta_family().ok_or(SimplicityError::WrongPiKind)?;
    let base = ring.base();
    require_field(base)?;
    let alg = ring.algebra();
    let d = alg.dim();
    let window = Window::new(ring, cap);
    let center: Vec<Vector<B>> =
        ring.center(cap).basis.iter().map(|c| window.coords(ring, c).expect("inside window")).collect();
    let p = base.characteristic();
    let expected_shape = if p == 0 { "linear" } else { "p_power" };
    let exps = window.exponents().to_vec();
    let one = alg.one();
    for (fi, f) in exps.iter().enumerate().skip(1) {
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for gi in fi + 1..exps.len() {
            for k in 0..d {
                rows.push(center.iter().map(|c| c[gi * d + k].clone()).collect::<Vector<B>>());
                rhs.push(base.zero());
            }
        }
        for k in 0..d {
            rows.push(center.iter().map(|c| c[fi * d + k].clone()).collect::<Vector<B>>());
            rhs.push(one.coords[k].clone());
        }
        let Some(lam) = linalg::solve(base, &rows, &rhs, center.len()) else { continue };
        let mut v = linalg::zero_vector(base, window.len());
        for (l, c) in lam.iter().zip(&center) {
            linalg::axpy(base, &mut v, l, c);
        }
        // drop lower-degree central parts
        let lower: Vec<&Vector<B>> =
            center.iter().filter(|c| c[fi * d..].iter().all(|x| base.is_zero(x))).collect();
        let v = Subspace::spanned_by(base, window.len(), lower).reduce(&v);
        let element = window.element(ring, &v);
        let anomalies = shape_anomalies(&element, p);
        return Ok(CenterSearch {
            degree: Some(f.clone()),
            element: Some(element),
            expected_shape,
            shape_ok: anomalies.is_empty(),
            anomalies,
            cap,
        });
    }
    Ok(CenterSearch { element: None, degree: None, expected_shape, shape_ok: true, anomalies: vec![], cap })
}

fn shape_anomalies<E>(a: &OreElem<E>, p: u64) -> Vec<String> {
    let mut out = Vec::new();
    for (e, _) in a.terms() {
        let f = e.as_multi().expect("multi");
        if f.is_zero() {
            continue;
        }
        if p == 0 {
            if f.weight() != 1 {
                out.push(format!("exponent {f} is not linear"));
            }
        } else if f.support().len() != 1 || crate::multiindex::p_power_log(f, p).is_none() {
            out.push(format!("exponent {f} is not a p-power of a single variable"));
        }
    }
    out
}

/// Not simple when a monic non-constant central element exists (and the
/// structure is strong, so generator-level centrality is centrality);
/// otherwise unknown.
pub fn decide_via_witness<B: BaseRing>(
    ring: &OreRing<B>,
    cap: u64,
) -> Result<SimplicityReport<B::Elem>, SimplicityError> {
    let search = center_structure_search(ring, cap)?;
    let strong = ring.classification().strong();
    let hypotheses = vec![("strong".to_string(), strong)];
    Ok(match search.element {
        Some(element) if strong => SimplicityReport {
            verdict: Verdict::NotSimple,
            method: Method::WitnessSearch,
            hypotheses,
            evidence: Evidence::CentralMonic { element },
            notes: search.anomalies,
        },
        _ => SimplicityReport {
            verdict: Verdict::Unknown,
            method: Method::WitnessSearch,
            hypotheses,
            evidence: Evidence::Inconclusive(format!("no monic non-constant central element within weight {cap}")),
            notes: vec![],
        },
    })
}

/// G-simplicity of `S` through the two conditions of the structure theorem:
/// `R` is G-simple and `Z(S)^G` is a field. Delta-generated rings go to the
/// characteristic-specific deciders.
pub fn decide_via_theorem_3_3<B: BaseRing>(
    ring: &OreRing<B>,
    caps: &Caps,
) -> Result<SimplicityReport<B::Elem>, SimplicityError> {
    let c = ring.classification();
    let report = ring.report();
    let d7 = report.passed(crate::pistructure::Axiom::D7);
    let d8 = report.passed(crate::pistructure::Axiom::D8);
    let mut hypotheses = vec![
        ("unital_g_derivation".to_string(), c.unital),
        ("g_commutative".to_string(), ring.monoid().validate().is_valid()),
        ("strong".to_string(), c.strong()),
        ("well_ordered".to_string(), c.well_ordered),
        ("d8_or_d7_and_commutative".to_string(), d8 || (d7 && c.commutative)),
    ];
    let failing: Vec<String> = hypotheses.iter().filter(|(_, ok)| !ok).map(|(h, _)| h.clone()).collect();
    if !failing.is_empty() {
        return Err(SimplicityError::HypothesesNotMet(failing));
    }
    if let Some(family) = ring.pi().delta_family() {
        return if ring.base().characteristic() == 0 {
            decide_simple_char0(family, caps)
        } else {
            decide_simple_charp(family, caps)
        };
    }
    if !ring.is_finite() {
        return Err(SimplicityError::NotFinite);
    }
    let alg = ring.algebra();
    let base = ring.base();
    require_field(base)?;
    let elems = ring.window_exponents(0);
    let mut maps = Vec::new();
    for a in &elems {
        for b in &elems {
            maps.push(ring.pi().pi_lookup(a, b).expect("in monoid"));
        }
    }
    let r_simple = is_g_simple_coeffring(alg, &maps, caps.brute_force)?;
    hypotheses.push(("R_g_simple".to_string(), r_simple.verdict == Verdict::Simple));
    if let (Verdict::NotSimple, Some((generator, basis))) = (r_simple.verdict, r_simple.witness.clone()) {
        return Ok(SimplicityReport {
            verdict: Verdict::NotSimple,
            method: Method::Theorem33,
            hypotheses,
            evidence: Evidence::CoefficientIdeal { generator, basis },
            notes: vec![],
        });
    }
    let zsg = ring.zsg(0).basis;
    let window = Window::new(ring, 0);
    let coords: Vec<Vector<B>> = zsg.iter().map(|z| window.coords(ring, z).expect("finite")).collect();
    let span = Subspace::spanned_by(base, window.len(), &coords);
    let elements: Vec<OreElem<B::Elem>> =
        span.enumerate().expect("finite").iter().map(|v| window.element(ring, v)).collect();
    let one = ring.one();
    let non_unit = elements.iter().find(|z| {
        !z.is_zero() && !elements.iter().any(|w| ring.mul(z, w) == one && ring.mul(w, z) == one)
    });
    hypotheses.push(("ZSG_is_field".to_string(), non_unit.is_none() && span.dim() > 0));
    let (verdict, evidence) = match (non_unit, r_simple.verdict) {
        (Some(z), _) => (Verdict::NotSimple, Evidence::CentralNonUnit { element: z.clone() }),
        (None, Verdict::Simple) => (Verdict::Simple, Evidence::Checks),
        _ => (Verdict::Unknown, Evidence::Inconclusive("G-simplicity of R undecided".to_string())),
    };
    Ok(SimplicityReport { verdict, method: Method::Theorem33, hypotheses, evidence, notes: vec![] })
}
