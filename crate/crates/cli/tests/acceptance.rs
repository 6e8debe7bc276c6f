//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_UNATTAINABLE` still run and still print their
//! real status; they do not fail the target.

use std::collections::{BTreeMap, HashMap};
use std::path::PathBuf;
use std::process::ExitCode;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use orelab::{execute, report_body, AnyProblem, Command, ProblemConfig};
use orelab_core::multiindex::{lucas_binom_mod_p, multi_binomial_exact};
use orelab_core::pistructure::{check_axiom, check_all, Axiom};
use orelab_core::simplicity::{
    center_structure_search, decide_brute_force, decide_simple_char0, decide_simple_charp, decide_via_theorem_3_3,
    verify_inner_combination, verify_ring_ideal, witness_unit_in_ideal, Caps, Evidence, SimplicityError, Verdict,
};
use orelab_core::{
    catalog, linalg::Subspace, AddMap, AlgElem, Algebra, BaseRing, Classification, DeltaFamily, MonoidElem,
    MultiIndex, OreElem, OreRing, PiStructure, Rationals, Residues,
};

/// Criterion number and the reason it cannot pass.
const KNOWN_UNATTAINABLE: &[(u32, &str)] = &[(
    2,
    "with P(a,b) = (0,a+b) the ideal {0,(0,1)} of F_2xF_2 is fixed by every pi map, so S has a proper ideal",
)];

type Outcome = Result<String, String>;

fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn config(name: &str) -> ProblemConfig {
    ProblemConfig::from_file(&fixture_path(name)).expect("fixture parses")
}

fn residue_fixture(name: &str) -> PiStructure<Residues> {
    match config(name).build().expect("fixture builds") {
        AnyProblem::Residue(pi) => pi,
        AnyProblem::Rational(_) => panic!("{name} is over Q"),
    }
}

fn ensure(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

fn multi_oracle(f: &[u64], g: &[u64]) -> u64 {
    f.iter().zip(g).map(|(&a, &b)| binomial(a, b)).product()
}

fn boxes(arity: usize, max: u64) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        out = out.into_iter().flat_map(|v| (0..=max).map(move |e| [v.clone(), vec![e]].concat())).collect();
    }
    out
}

fn below(f: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for &e in f {
        out = out.into_iter().flat_map(|v| (0..=e).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out
}

fn sub(f: &[u64], g: &[u64]) -> Vec<u64> {
    f.iter().zip(g).map(|(a, b)| a - b).collect()
}

fn add(f: &[u64], g: &[u64]) -> Vec<u64> {
    f.iter().zip(g).map(|(a, b)| a + b).collect()
}

fn x1(n: u64) -> MonoidElem {
    MonoidElem::Multi(MultiIndex::new(vec![n]))
}

/// Every element of a finite `S` over `F_q`.
fn all_elements<B: BaseRing>(s: &OreRing<B>) -> Vec<OreElem<B::Elem>> {
    let scalars = s.base().elements().expect("finite base");
    let monomials = s.window_monomials(0);
    let mut out = vec![s.zero()];
    for m in &monomials {
        out = out.iter().flat_map(|u| scalars.iter().map(move |c| s.add(u, &s.scale(c, m)))).collect();
    }
    out
}

fn span_eq<B: BaseRing>(alg: &Algebra<B>, a: &[AlgElem<B::Elem>], b: &[AlgElem<B::Elem>]) -> bool {
    let sa = Subspace::spanned_by(alg.base(), alg.dim(), a.iter().map(|x| &x.coords));
    a.len() == b.len() && b.iter().all(|x| sa.contains(&x.coords))
}

// criterion 1

fn criterion_1() -> Outcome {
    let f5 = Residues::prime_field(5).unwrap();
    let r = catalog::truncated_polynomial(f5, 5);
    let d = catalog::derivative(&r);
    let family = DeltaFamily::new(r.clone(), vec![d.clone()]).unwrap();
    let pi = PiStructure::delta_generated(family);
    let axioms = [Axiom::D0, Axiom::D1, Axiom::D2, Axiom::D3, Axiom::D4, Axiom::D5, Axiom::D6];
    for ax in axioms {
        ensure(check_axiom(&pi, ax, 4).passed(), format!("{} fails on the delta-generated structure", ax.name()))?;
    }
    // oracle: pi^f_g = C(f,g) d^(f-g), and D4 recomputed from these matrices
    let oracle = |f: u64, g: u64| -> AddMap<u64> {
        if g > f {
            return AddMap::zero(&f5, 5);
        }
        d.power(&f5, f - g).scale(&f5, &(binomial(f, g) % 5))
    };
    for f in 0..=4 {
        for g in 0..=4 {
            ensure(pi.pi_lookup(&x1(f), &x1(g)).unwrap() == oracle(f, g), format!("pi^{f}_{g} differs from C(f,g) d^(f-g)"))?;
        }
    }
    for a in 0..=4u64 {
        for b in 0..=4 - a {
            for c in 0..=a + b {
                let mut sum = AddMap::zero(&f5, 5);
                for dd in 0..=c {
                    sum = sum.add(&f5, &oracle(a, dd).compose(&f5, &oracle(b, c - dd)));
                }
                ensure(sum == oracle(a + b, c), format!("oracle D4 fails at ({a},{b},{c})"))?;
            }
        }
    }
    let table = pi.materialize(4);
    ensure(check_all(&table, 4).entries.iter().all(|(_, s)| s.passed()), "materialized table fails an axiom")?;
    let mut e11 = vec![vec![0u64; 5]; 5];
    e11[1][1] = 1;
    let e11 = AddMap::from_matrix(&r, e11).unwrap();
    let id = AddMap::identity(&f5, 5);
    let entries = table.table_entries();
    let mut flipped = 0;
    for (a, b, m) in &entries {
        for bump in [&id, &e11] {
            let corrupted = table.with_entry(a, b, m.add(&f5, bump)).unwrap();
            let failing: Vec<_> = axioms
                .iter()
                .filter_map(|&ax| check_axiom(&corrupted, ax, 4).witness().cloned())
                .collect();
            ensure(!failing.is_empty(), format!("corrupting pi^{a}_{b} goes unnoticed"))?;
            ensure(failing.iter().all(|w| w.recheck(&corrupted)), format!("witness for pi^{a}_{b} does not recheck"))?;
            flipped += 1;
        }
    }
    Ok(format!("D0-D6 pass at weight <= 4; {flipped}/{flipped} corruptions of {} entries detected", entries.len()))
}

// criterion 2

fn criterion_2() -> Outcome {
    let pi = residue_fixture("section3.json");
    let s = OreRing::new(pi.clone(), 4).unwrap();
    let c: Classification = s.classification();
    let mut failures = Vec::new();
    let mut check = |ok: bool, what: &str| {
        if !ok {
            failures.push(what.to_string());
        }
    };
    check(c.g_derivation && c.unital, "unital G-derivation");
    check(c.strong_left && c.strong_right, "strong on both sides");
    check(c.well_ordered && c.commutative, "well-ordered and commutative");
    check(!c.d_structure, "not a D-structure");
    let d5 = s.report().status(Axiom::D5).witness().cloned();
    check(d5.as_ref().is_some_and(|w| w.recheck(&pi)), "D5 witness rechecks");
    let alg = s.algebra();
    check(span_eq(alg, &pi.fixed_subring(0), &[alg.one()]), "R^G = F_2");
    let zsg = s.zsg(0).basis;
    check(zsg.len() == 1 && zsg[0] == s.one(), "Z(S)^G = F_2");
    let bf = decide_brute_force(&s, Caps::default().brute_force).map_err(|e| e.to_string())?;
    let th = decide_via_theorem_3_3(&s, &Caps::default()).map_err(|e| e.to_string())?;
    check(bf.simple.verdict == Verdict::Simple, "brute-force verdict simple");
    check(th.verdict == Verdict::Simple, "Theorem 3.3 verdict simple");
    check(th.verdict == bf.g_simple.verdict, "brute force and Theorem 3.3 agree");
    let summary = format!(
        "brute force {}, Theorem 3.3 {}, agreement {}",
        bf.simple.verdict.as_str(),
        th.verdict.as_str(),
        th.verdict == bf.g_simple.verdict
    );
    if failures.is_empty() {
        Ok(summary)
    } else {
        Err(format!("{summary}; failed: {}", failures.join(", ")))
    }
}

// criterion 3

fn section2_suite<B: BaseRing>(name: &str, pi: PiStructure<B>) -> Result<usize, String> {
    let s = OreRing::new(pi.clone(), 0).map_err(|e| e.to_string())?;
    let alg = s.algebra();
    let elems = all_elements(&s);
    let rb: Vec<OreElem<B::Elem>> = alg.basis_elements().iter().map(|r| s.constant(r)).collect();
    let xs: Vec<OreElem<B::Elem>> = s.window_exponents(0).iter().map(|a| s.x(a)).collect();
    let fixed = Subspace::spanned_by(alg.base(), alg.dim(), pi.fixed_subring(0).iter().map(|r| &r.coords));
    let sg: Vec<&OreElem<B::Elem>> =
        elems.iter().filter(|u| u.terms().iter().all(|(_, r)| fixed.contains(&r.coords))).collect();
    let zero = |u: &OreElem<B::Elem>| u.is_zero();
    let assoc = |a: &OreElem<B::Elem>, b: &OreElem<B::Elem>, c: &OreElem<B::Elem>| s.s_associator(a, b, c);
    let comm = |a: &OreElem<B::Elem>, b: &OreElem<B::Elem>| s.s_commutator(a, b);
    let report = s.report();
    let (d7, d8) = (report.passed(Axiom::D7), report.passed(Axiom::D8));
    let mut checks = 0usize;
    let mut fail = |ok: bool, what: &str| -> Result<(), String> {
        checks += 1;
        ensure(ok, format!("{name}: {what}"))
    };
    for u in &elems {
        fail(s.mul(&s.one(), u) == *u && s.mul(u, &s.one()) == *u, "unitality")?;
        for v in &elems {
            for w in &elems {
                fail(s.mul(&s.add(u, v), w) == s.add(&s.mul(u, w), &s.mul(v, w)), "left distributivity")?;
                fail(s.mul(u, &s.add(v, w)) == s.add(&s.mul(u, v), &s.mul(u, w)), "right distributivity")?;
            }
            for x in &xs {
                fail(zero(&assoc(u, v, x)) && zero(&assoc(u, x, v)), "Prop 2.3: x^a in N_r and N_m")?;
            }
        }
    }
    for s_el in &sg {
        for x in &xs {
            fail(zero(&comm(s_el, x)), "Prop 2.4: [s, x^a] = 0 on S^G")?;
        }
        if rb.iter().all(|r| zero(&comm(s_el, r))) {
            fail(elems.iter().all(|t| zero(&comm(s_el, t))), "Prop 2.5")?;
        }
        if d7 && rb.iter().all(|r| rb.iter().all(|r2| zero(&assoc(r, s_el, r2)))) {
            fail(elems.iter().all(|u| elems.iter().all(|v| zero(&assoc(u, s_el, v)))), "Prop 2.8 middle slot")?;
        }
        if d8 && rb.iter().all(|r| rb.iter().all(|r2| zero(&assoc(r, r2, s_el)))) {
            fail(elems.iter().all(|u| elems.iter().all(|v| zero(&assoc(u, v, s_el)))), "Prop 2.8 right slot")?;
        }
    }
    let left_zero = xs.iter().all(|x| sg.iter().all(|g| rb.iter().all(|r| zero(&assoc(x, g, r)))));
    let right_zero = xs.iter().all(|x| sg.iter().all(|g| rb.iter().all(|r| zero(&assoc(x, r, g)))));
    fail(left_zero == d7, "Prop 2.6(a): D7 iff (x^a, S^G, R) = 0")?;
    fail(right_zero == d8, "Prop 2.6(b): D8 iff (x^a, R, S^G) = 0")?;
    for u in &elems {
        if rb.iter().all(|r| rb.iter().all(|r2| zero(&assoc(u, r, r2)))) {
            fail(elems.iter().all(|v| elems.iter().all(|w| zero(&assoc(u, v, w)))), "Prop 2.7")?;
        }
    }
    let mut center = Vec::new();
    for u in &elems {
        let c = elems.iter().all(|v| zero(&comm(u, v)));
        let nl = elems.iter().all(|v| elems.iter().all(|w| zero(&assoc(u, v, w))));
        let nm = elems.iter().all(|v| elems.iter().all(|w| zero(&assoc(v, u, w))));
        let nr = elems.iter().all(|v| elems.iter().all(|w| zero(&assoc(v, w, u))));
        let (z1, z2, z3) = (c && nl && nm, c && nl && nr, c && nm && nr);
        fail(z1 == z2 && z2 == z3, "Lemma 2.9")?;
        if z1 {
            center.push(u.clone());
        }
    }
    let strong = s.classification().strong();
    for s_el in &sg {
        let in_center = center.contains(s_el);
        let local = rb.iter().all(|r| {
            zero(&comm(s_el, r))
                && rb.iter().all(|r2| zero(&assoc(s_el, r, r2)) && zero(&assoc(r, s_el, r2)) && zero(&assoc(r, r2, s_el)))
        });
        if strong {
            fail(in_center == local, "Corollary 2.10")?;
        }
    }
    let computed: Vec<OreElem<B::Elem>> = s.center(0).basis;
    let computed_set: Vec<OreElem<B::Elem>> = all_span(&s, &computed);
    fail(
        computed_set.len() == center.len() && center.iter().all(|z| computed_set.contains(z)),
        "center() matches the exhaustive center",
    )?;
    Ok(checks)
}

fn all_span<B: BaseRing>(s: &OreRing<B>, basis: &[OreElem<B::Elem>]) -> Vec<OreElem<B::Elem>> {
    let scalars = s.base().elements().expect("finite base");
    let mut out = vec![s.zero()];
    for b in basis {
        out = out.iter().flat_map(|u| scalars.iter().map(move |c| s.add(u, &s.scale(c, b)))).collect();
    }
    out
}

fn criterion_3() -> Outcome {
    let a = section2_suite("section3", residue_fixture("section3.json"))?;
    let b = section2_suite("untwisted", residue_fixture("section3_untwisted.json"))?;
    Ok(format!("{} exhaustive checks hold on both rings", a + b))
}

// criterion 4

fn criterion_4() -> Outcome {
    let mut table: HashMap<(Vec<u64>, Vec<u64>), u64> = HashMap::new();
    for k in 1..=3 {
        for f in boxes(k, 4) {
            for g in boxes(k, 4) {
                let lib = multi_binomial_exact(&MultiIndex::new(f.clone()), &MultiIndex::new(g.clone()));
                let expect = multi_oracle(&f, &g);
                ensure(lib.to_string() == expect.to_string(), format!("C({f:?},{g:?})"))?;
                table.insert((f.clone(), g), expect);
            }
        }
    }
    let c = |f: &[u64], g: &[u64]| -> u64 {
        if f.iter().all(|&e| e <= 4) {
            table[&(f.to_vec(), g.to_vec())]
        } else {
            multi_oracle(f, g)
        }
    };
    let mut vandermonde = 0;
    let mut combinatorial = 0;
    for k in 1..=3 {
        for g in boxes(k, 4) {
            for h in boxes(k, 4) {
                let f = add(&g, &h);
                if f.iter().any(|&e| e > 4) {
                    continue;
                }
                for l in below(&f) {
                    let lhs: u64 = below(&l).iter().map(|p| c(&g, p) * c(&h, &sub(&l, p))).sum();
                    ensure(lhs == c(&f, &l), format!("Vandermonde at g={g:?} h={h:?} l={l:?}"))?;
                    vandermonde += 1;
                }
            }
        }
        for f in boxes(k, 4) {
            for g in below(&f) {
                for h in below(&f) {
                    let lhs = c(&f, &g) * c(&sub(&f, &g), &h);
                    let rhs = c(&f, &h) * c(&sub(&f, &h), &g);
                    ensure(lhs == rhs, format!("combinatorial identity at f={f:?} g={g:?} h={h:?}"))?;
                    combinatorial += 1;
                }
            }
        }
    }
    let mut lucas = 0;
    for p in [2u64, 3, 5] {
        let mut row = vec![1u64];
        for m in 0..=200u64 {
            for n in 0..=200u64 {
                let direct = row.get(n as usize).copied().unwrap_or(0);
                ensure(lucas_binom_mod_p(m, n, p).unwrap() == direct, format!("Lucas C({m},{n}) mod {p}"))?;
                lucas += 1;
            }
            let mut next = vec![1u64; row.len() + 1];
            for i in 1..row.len() {
                next[i] = (row[i - 1] + row[i]) % p;
            }
            row = next;
        }
    }
    let q = Rationals::new();
    let r = catalog::truncated_polynomial(q, 4);
    let mut leibniz = 0;
    for k in 1..4 {
        let images: Vec<AlgElem<_>> = (0..4)
            .map(|m| {
                let mut v = r.zero();
                if m > 0 && m - 1 + k < 4 {
                    v.coords[m - 1 + k] = q.from_i64(m as i64);
                }
                v
            })
            .collect();
        let delta = AddMap::from_images(&r, &images).unwrap();
        ensure(delta.is_derivation(&r), format!("y^{k} d/dy is a derivation"))?;
        for n in 0..=6u64 {
            for a in r.basis_elements() {
                for b in r.basis_elements() {
                    let lhs = delta.power(&q, n).apply(&q, &r.product(&a, &b));
                    let mut rhs = r.zero();
                    for i in 0..=n {
                        let term = r.product(&delta.power(&q, i).apply(&q, &a), &delta.power(&q, n - i).apply(&q, &b));
                        rhs = r.sum(&rhs, &r.scale(&q.from_i64(binomial(n, i) as i64), &term));
                    }
                    ensure(lhs == rhs, format!("power-Leibniz n={n} for y^{k} d/dy"))?;
                    leibniz += 1;
                }
            }
        }
    }
    let s = OreRing::new(residue_fixture("f3_bivariate_partials.json"), 4).unwrap();
    let mut expand = 0;
    for f in MultiIndex::up_to_weight(2, 4) {
        for rr in s.algebra().basis_elements() {
            let lhs = s.right_expand(&rr, &f).map_err(|e| e.to_string())?;
            let rhs = s.mul(&s.constant(&rr), &s.x(&MonoidElem::Multi(f.clone())));
            ensure(lhs == rhs, format!("right_expand at f={f}"))?;
            expand += 1;
        }
    }
    Ok(format!(
        "{vandermonde} Vandermonde, {combinatorial} combinatorial, {lucas} Lucas, {leibniz} power-Leibniz, {expand} right_expand cases"
    ))
}

// criterion 5

fn criterion_5() -> Outcome {
    let mut parts = Vec::new();
    for p in [2u64, 3] {
        let fp = Residues::prime_field(p).unwrap();
        let r = catalog::truncated_polynomial(fp, p as usize);
        let family = DeltaFamily::new(r.clone(), vec![catalog::derivative(&r)]).unwrap();
        let report = decide_simple_charp(&family, &Caps::default()).map_err(|e| e.to_string())?;
        ensure(report.verdict == Verdict::NotSimple, format!("p={p}: verdict {}", report.verdict.as_str()))?;
        let Evidence::InnerCombination { terms, c } = &report.evidence else {
            return Err(format!("p={p}: unexpected evidence"));
        };
        ensure(verify_inner_combination(&family, terms, c), format!("p={p}: evidence does not re-verify"))?;
        let s = OreRing::new(PiStructure::delta_generated(family), 4).unwrap();
        let xp = s.x(&x1(p));
        let search = center_structure_search(&s, 2 * p).map_err(|e| e.to_string())?;
        ensure(search.element.as_ref() == Some(&xp), format!("p={p}: least central monic is not x^p"))?;
        ensure(search.shape_ok, format!("p={p}: shape anomalies {:?}", search.anomalies))?;
        let y = s.constant(&r.basis(1));
        let x = s.x(&x1(1));
        ensure(s.s_commutator(&xp, &y).is_zero() && s.s_commutator(&xp, &x).is_zero(), format!("p={p}: x^p not central"))?;
        let unit = witness_unit_in_ideal(&s, &xp, 2 * p).map_err(|e| e.to_string())?;
        ensure(!unit.found, format!("p={p}: a unit was found in (x^p)"))?;
        parts.push(format!("p={p}: not simple, x^{p} central, (x^{p}) has no unit within weight {}", 2 * p));
    }
    Ok(parts.join("; "))
}

// criterion 6

fn random_element(s: &OreRing<Rationals>, rng: &mut ChaCha8Rng) -> OreElem<<Rationals as BaseRing>::Elem> {
    let q = s.base();
    let d = s.algebra().dim();
    loop {
        let mut terms = Vec::new();
        for e in 0..=3u64 {
            let coords = (0..d)
                .map(|_| if rng.gen_bool(0.5) { q.from_i64(rng.gen_range(-5..=5)) } else { q.zero() })
                .collect();
            terms.push((x1(e), AlgElem::new(coords)));
        }
        let u = s.element(terms).unwrap();
        if !u.is_zero() {
            return u;
        }
    }
}

fn criterion_6() -> Outcome {
    let q = Rationals::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0413);
    let mut parts = Vec::new();
    for n in 2..=4 {
        let r = catalog::truncated_polynomial(q, n);
        let family = DeltaFamily::new(r.clone(), vec![catalog::derivative(&r)]).unwrap();
        let report = decide_simple_char0(&family, &Caps::default()).map_err(|e| e.to_string())?;
        ensure(report.verdict == Verdict::Simple, format!("n={n}: verdict {}", report.verdict.as_str()))?;
        let s = OreRing::new(PiStructure::delta_generated(family), 4).unwrap();
        let mut hits = 0;
        for _ in 0..50 {
            let u = random_element(&s, &mut rng);
            if witness_unit_in_ideal(&s, &u, 8).map_err(|e| e.to_string())?.found {
                hits += 1;
            }
        }
        ensure(hits == 50, format!("n={n}: unit found in {hits}/50 trials"))?;
        parts.push(format!("n={n}: simple, 50/50"));
    }
    Ok(parts.join("; "))
}

// criterion 7

fn criterion_7() -> Outcome {
    let mut agree = 0;
    let mut skipped = Vec::new();
    for name in ["section3.json", "section3_untwisted.json", "nonassociative_projection.json"] {
        let s = OreRing::new(residue_fixture(name), 0).unwrap();
        let bf = decide_brute_force(&s, Caps::default().brute_force).map_err(|e| e.to_string())?;
        for report in [&bf.simple, &bf.g_simple] {
            if let Evidence::RingIdeal { generator, .. } = &report.evidence {
                let invariant = std::ptr::eq(report, &bf.g_simple);
                ensure(verify_ring_ideal(&s, generator, invariant), format!("{name}: ideal witness does not re-verify"))?;
            }
        }
        match decide_via_theorem_3_3(&s, &Caps::default()) {
            Ok(th) => {
                ensure(
                    th.verdict == bf.g_simple.verdict,
                    format!("{name}: theorem {} vs brute force {}", th.verdict.as_str(), bf.g_simple.verdict.as_str()),
                )?;
                agree += 1;
            }
            Err(SimplicityError::HypothesesNotMet(h)) => skipped.push(format!("{name} ({})", h.join(","))),
            Err(e) => return Err(e.to_string()),
        }
    }
    ensure(agree > 0, "no fixture satisfies the hypotheses")?;
    let mut msg = format!("{agree} fixtures agree, 0 disagreements");
    if !skipped.is_empty() {
        msg.push_str(&format!("; hypotheses not met: {}", skipped.join(", ")));
    }
    Ok(msg)
}

// criterion 8

fn criterion_8() -> Outcome {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut names: Vec<String> = std::fs::read_dir(&dir)
        .map_err(|e| e.to_string())?
        .filter_map(|e| e.ok()?.file_name().into_string().ok())
        .filter(|n| n.ends_with(".json"))
        .collect();
    names.sort();
    let mut runs = 0;
    let mut bodies: BTreeMap<String, String> = BTreeMap::new();
    for name in &names {
        let cfg = config(name);
        let (lhs, rhs) = mul_operands(&cfg);
        for command in [Command::Check, Command::Mul, Command::Center, Command::Simple] {
            let once = || -> Result<String, String> {
                let run = execute(command, cfg.clone(), None, None, Some(&lhs), Some(&rhs)).map_err(|e| e.to_string())?;
                serde_json::to_string(&report_body(&run.report)).map_err(|e| e.to_string())
            };
            let (a, b) = (once()?, once()?);
            ensure(a == b, format!("{name} {}: bodies differ", command.name()))?;
            bodies.insert(format!("{name}/{}", command.name()), a);
            runs += 2;
        }
    }
    Ok(format!("{runs} runs over {} fixtures, {} byte-identical body pairs", names.len(), bodies.len()))
}

fn mul_operands(cfg: &ProblemConfig) -> (String, String) {
    let lhs = match &cfg.monoid {
        Some(orelab::config::MonoidConfig::Finite { names: Some(n), .. }) => format!("x^{}", n[n.len() - 1]),
        Some(orelab::config::MonoidConfig::Finite { size, .. }) => format!("x^{}", size - 1),
        _ => {
            let k = match &cfg.pi {
                orelab::config::PiConfig::DeltaGenerated(d) => d.deltas.len(),
                _ => 1,
            };
            let mut e = vec!["0"; k];
            e[0] = "1";
            format!("x^[{}]", e.join(","))
        }
    };
    let d = cfg.algebra.dim;
    let rhs = format!("({})", (0..d).map(|i| if i + 1 == d { "1" } else { "0" }).collect::<Vec<_>>().join(","));
    (lhs, rhs)
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, fn() -> Outcome); 8] = [
        (1, "axiom suite and corruption", criterion_1),
        (2, "section 3 example end-to-end", criterion_2),
        (3, "section 2 propositions", criterion_3),
        (4, "section 4 identities", criterion_4),
        (5, "characteristic p negative case", criterion_5),
        (6, "characteristic 0 positive case", criterion_6),
        (7, "Theorem 3.3 against brute force", criterion_7),
        (8, "CLI determinism", criterion_8),
    ];
    let mut unexpected = 0;
    for (n, name, run) in criteria {
        let start = std::time::Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {n} [{name}]: PASS ({detail}) [{secs:.1}s]"),
            Err(detail) => {
                let known = KNOWN_UNATTAINABLE.iter().find(|(k, _)| *k == n);
                println!("criterion {n} [{name}]: FAIL ({detail}) [{secs:.1}s]");
                match known {
                    Some((_, why)) => println!("  known unattainable: {why}"),
                    None => unexpected += 1,
                }
            }
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
