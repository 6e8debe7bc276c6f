//! The four analyses, generic over the base.

use std::fmt::Write as _;

use serde_json::{json, Value};

use orelab_core::pistructure::check_all;
use orelab_core::simplicity::{
    center_structure_search, decide_brute_force, decide_via_theorem_3_3, decide_via_witness, Caps, Evidence,
    SimplicityError, SimplicityReport, Verdict,
};
use orelab_core::{linalg::Subspace, BaseRing, Classification, MonoidSpec, OreRing, PiStructure};

use crate::config::Strategy;
use crate::{expr, report, CliError};

pub const EXIT_SIMPLE: i32 = 0;
pub const EXIT_NOT_SIMPLE: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_HYPOTHESES: i32 = 3;
pub const EXIT_ERROR: i32 = 4;

/// Result of one command: exit code, human-readable text and the JSON
/// `result` section.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub exit: i32,
    pub text: String,
    pub result: Value,
}

fn classification_json(c: &Classification) -> Value {
    json!({
        "g_derivation": c.g_derivation,
        "unital": c.unital,
        "strong": c.strong(),
        "strong_left": c.strong_left,
        "strong_right": c.strong_right,
        "d_structure": c.d_structure,
        "commutative": c.commutative,
        "well_ordered": c.well_ordered,
    })
}

/// For each idempotent `g ≠ e` with `π^g_e ≠ 0`, D4 at `(g, g, g)` forces
/// `2 π^g_e = 0`.
fn idempotent_constraints<B: BaseRing>(pi: &PiStructure<B>) -> Vec<Value> {
    let g = pi.monoid();
    let MonoidSpec::Finite { .. } = g else { return Vec::new() };
    let e = g.identity();
    let base = pi.algebra().base();
    let two = base.from_i64(2);
    g.elements(0)
        .into_iter()
        .filter(|a| *a != e && g.op(a, a).ok().as_ref() == Some(a))
        .filter_map(|a| {
            let m = pi.pi_lookup(&a, &e).ok()?;
            (!m.is_zero(base)).then(|| {
                json!({
                    "element": g.name(&a),
                    "twice_pi_to_identity_vanishes": m.scale(base, &two).is_zero(base),
                    "characteristic": base.characteristic(),
                })
            })
        })
        .collect()
}

pub fn check<B: BaseRing>(pi: &PiStructure<B>, caps: &Caps) -> Outcome {
    let axioms = check_all(pi, caps.weight);
    let class = Classification::from_report(&axioms);
    let base = pi.algebra().base();
    let mut text = String::new();
    writeln!(text, "base: {}  characteristic: {}", base.tag(), base.characteristic()).ok();
    let monoid_report = pi.monoid().validate();
    match pi.monoid() {
        MonoidSpec::Finite { size, .. } => writeln!(text, "monoid: finite, {size} elements").ok(),
        MonoidSpec::Free { arity } => writeln!(text, "monoid: free commutative of rank {arity}").ok(),
    };
    let mut entries = Vec::new();
    for (axiom, status) in &axioms.entries {
        match status.witness() {
            None => {
                writeln!(text, "{:<13} pass", axiom.name()).ok();
                entries.push(json!({ "axiom": axiom.name(), "status": "pass" }));
            }
            Some(w) => {
                let names: Vec<String> = w.monoid.iter().map(|a| pi.monoid().name(a)).collect();
                writeln!(text, "{:<13} FAIL at monoid {:?} basis {:?}", axiom.name(), names, w.basis).ok();
                entries.push(json!({ "axiom": axiom.name(), "status": "fail", "witness": report::witness(pi, w) }));
            }
        }
    }
    writeln!(
        text,
        "classification: g_derivation={} unital={} strong={} d_structure={} commutative={} well_ordered={}",
        class.g_derivation, class.unital, class.strong(), class.d_structure, class.commutative, class.well_ordered
    )
    .ok();
    let fixed = pi.fixed_subring(caps.weight);
    let fixed_json: Vec<Value> = fixed.iter().map(|r| report::coords(base, r)).collect();
    writeln!(text, "R^G basis: {}", fixed_json.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")).ok();
    let constraints = idempotent_constraints(pi);
    for c in &constraints {
        writeln!(
            text,
            "idempotent {}: 2*pi^g_e = 0 {}",
            c["element"].as_str().unwrap_or(""),
            if c["twice_pi_to_identity_vanishes"] == json!(true) { "holds" } else { "fails" }
        )
        .ok();
    }
    Outcome {
        exit: 0,
        text,
        result: json!({
            "base": base.tag(),
            "characteristic": base.characteristic(),
            "monoid_valid": monoid_report.is_valid(),
            "monoid_violations": monoid_report.violations,
            "axioms": entries,
            "axiom_cap": axioms.cap,
            "classification": classification_json(&class),
            "fixed_subring": fixed_json,
            "idempotent_constraints": constraints,
        }),
    }
}

fn ring<B: BaseRing>(pi: &PiStructure<B>, caps: &Caps) -> Result<OreRing<B>, CliError> {
    Ok(OreRing::new(pi.clone(), caps.weight)?)
}

pub fn mul<B: BaseRing>(pi: &PiStructure<B>, caps: &Caps, lhs: &str, rhs: &str) -> Result<Outcome, CliError> {
    let s = ring(pi, caps)?;
    let u = expr::parse_element(&s, lhs)?;
    let v = expr::parse_element(&s, rhs)?;
    let w = s.mul(&u, &v);
    Ok(Outcome {
        exit: 0,
        text: format!("{}\n", s.format(&w)),
        result: json!({
            "lhs": report::element(&s, &u),
            "rhs": report::element(&s, &v),
            "product": report::element(&s, &w),
        }),
    })
}

pub fn center<B: BaseRing>(pi: &PiStructure<B>, caps: &Caps) -> Result<Outcome, CliError> {
    let s = ring(pi, caps)?;
    let z = s.center(caps.weight);
    let zg = s.zsg(caps.weight);
    let window_coords = |basis: &[orelab_core::OreElem<B::Elem>]| {
        let exps = s.window_exponents(caps.weight);
        let d = s.algebra().dim();
        basis
            .iter()
            .map(|u| {
                let mut v = vec![s.base().zero(); exps.len() * d];
                for (a, r) in u.terms() {
                    if let Some(k) = exps.iter().position(|e| e == a) {
                        v[k * d..][..d].clone_from_slice(&r.coords);
                    }
                }
                v
            })
            .collect::<Vec<_>>()
    };
    let ambient = s.window_exponents(caps.weight).len() * s.algebra().dim();
    let (zc, zgc) = (window_coords(&z.basis), window_coords(&zg.basis));
    let span_z = Subspace::spanned_by(s.base(), ambient, &zc);
    let equal = zc.len() == zgc.len() && zgc.iter().all(|v| span_z.contains(v));
    let mut text = String::new();
    let cap_text = z.cap.map_or("exhaustive".to_string(), |c| format!("weight <= {c}"));
    writeln!(text, "window: {cap_text}").ok();
    writeln!(text, "Z(S) basis: {}", z.basis.iter().map(|u| s.format(u)).collect::<Vec<_>>().join(" ; ")).ok();
    writeln!(text, "Z(S)^G basis: {}", zg.basis.iter().map(|u| s.format(u)).collect::<Vec<_>>().join(" ; ")).ok();
    writeln!(text, "Z(S)^G = Z(S): {equal}").ok();
    let mut result = json!({
        "window_cap": z.cap,
        "center": z.basis.iter().map(|u| report::element(&s, u)).collect::<Vec<_>>(),
        "center_used_full_conditions": z.used_full_conditions,
        "zsg": zg.basis.iter().map(|u| report::element(&s, u)).collect::<Vec<_>>(),
        "zsg_used_full_conditions": zg.used_full_conditions,
        "zsg_equals_center": equal,
    });
    if pi.is_delta_generated() && s.base().is_field() {
        let search = center_structure_search(&s, caps.weight)?;
        match &search.element {
            Some(a) => writeln!(text, "least monic non-constant central element: {}", s.format(a)).ok(),
            None => writeln!(text, "no monic non-constant central element within the window").ok(),
        };
        result["least_central_monic"] = json!({
            "element": search.element.as_ref().map(|a| report::element(&s, a)),
            "expected_shape": search.expected_shape,
            "shape_ok": search.shape_ok,
            "anomalies": search.anomalies,
        });
    }
    Ok(Outcome { exit: 0, text, result })
}

fn verdict_exit(v: Verdict) -> i32 {
    match v {
        Verdict::Simple => EXIT_SIMPLE,
        Verdict::NotSimple => EXIT_NOT_SIMPLE,
        Verdict::Unknown => EXIT_UNKNOWN,
    }
}

fn hypotheses_outcome(method: &str, failing: &[String]) -> Outcome {
    Outcome {
        exit: EXIT_HYPOTHESES,
        text: format!("verdict: none\nmethod: {method}\nhypotheses not met: {}\n", failing.join(", ")),
        result: json!({ "verdict": Value::Null, "method": method, "hypotheses_not_met": failing }),
    }
}

fn simplicity_outcome<B: BaseRing>(s: &OreRing<B>, r: &SimplicityReport<B::Elem>, extra: Vec<(&str, Value)>) -> Outcome {
    let mut text = String::new();
    writeln!(text, "verdict: {}", r.verdict.as_str()).ok();
    writeln!(text, "method: {}", r.method.as_str()).ok();
    for (h, ok) in &r.hypotheses {
        writeln!(text, "hypothesis {h}: {}", if *ok { "holds" } else { "fails" }).ok();
    }
    writeln!(text, "evidence: {}", report::evidence_text(s, &r.evidence)).ok();
    for n in &r.notes {
        writeln!(text, "note: {n}").ok();
    }
    let mut result = report::simplicity(s, r);
    for (k, v) in extra {
        if let Some(t) = v.get("text").and_then(Value::as_str) {
            writeln!(text, "{k}: {t}").ok();
        }
        result[k] = v;
    }
    Outcome { exit: verdict_exit(r.verdict), text, result }
}

pub fn simple<B: BaseRing>(pi: &PiStructure<B>, caps: &Caps, strategy: Strategy) -> Result<Outcome, CliError> {
    let s = ring(pi, caps)?;
    let hypotheses = |method: &str, e: SimplicityError| match e {
        SimplicityError::HypothesesNotMet(h) => Ok(hypotheses_outcome(method, &h)),
        other => Err(CliError::from(other)),
    };
    match strategy {
        Strategy::Brute => {
            let bf = decide_brute_force(&s, caps.brute_force)?;
            let g = json!({ "verdict": bf.g_simple.verdict.as_str(), "text": bf.g_simple.verdict.as_str() });
            Ok(simplicity_outcome(&s, &bf.simple, vec![("g_simplicity", g)]))
        }
        Strategy::Theorem => match decide_via_theorem_3_3(&s, caps) {
            Ok(r) => Ok(simplicity_outcome(&s, &r, vec![])),
            Err(e) => hypotheses("theorem", e),
        },
        Strategy::Witness => Ok(simplicity_outcome(&s, &decide_via_witness(&s, caps.witness)?, vec![])),
        Strategy::Auto => auto(&s, caps),
    }
}

/// Brute force when the ring is finite and small enough, cross-checked
/// against the structure theorem; otherwise the theorem decider,
/// corroborated by the central-element search.
fn auto<B: BaseRing>(s: &OreRing<B>, caps: &Caps) -> Result<Outcome, CliError> {
    if s.is_finite() {
        match decide_brute_force(s, caps.brute_force) {
            Ok(bf) => {
                let cross = match decide_via_theorem_3_3(s, caps) {
                    Ok(th) if th.verdict != Verdict::Unknown && th.verdict != bf.g_simple.verdict => {
                        return Err(CliError::Disagreement(format!(
                            "brute force says {} for G-simplicity, the structure theorem says {}",
                            bf.g_simple.verdict.as_str(),
                            th.verdict.as_str()
                        )));
                    }
                    Ok(th) => json!({
                        "method": th.method.as_str(),
                        "verdict": th.verdict.as_str(),
                        "text": format!("{} ({}), G-simplicity by brute force {}", th.verdict.as_str(), th.method.as_str(), bf.g_simple.verdict.as_str()),
                    }),
                    Err(SimplicityError::HypothesesNotMet(h)) => json!({
                        "method": "theorem_3_3",
                        "hypotheses_not_met": h,
                        "text": "structure theorem not applicable",
                    }),
                    Err(e) => return Err(e.into()),
                };
                let g = json!({ "verdict": bf.g_simple.verdict.as_str(), "text": bf.g_simple.verdict.as_str() });
                return Ok(simplicity_outcome(s, &bf.simple, vec![("g_simplicity", g), ("cross_check", cross)]));
            }
            Err(SimplicityError::TooLarge { .. }) => {}
            Err(e) => return Err(e.into()),
        }
    }
    let delta = s.pi().is_delta_generated() && s.base().is_field();
    let witness = if delta { Some(decide_via_witness(s, caps.weight)?) } else { None };
    let found = witness.as_ref().filter(|w| w.verdict == Verdict::NotSimple);
    match decide_via_theorem_3_3(s, caps) {
        Ok(th) => {
            if th.verdict == Verdict::Simple && found.is_some() {
                return Err(CliError::Disagreement(
                    "the theorem decider says simple but a monic non-constant central element exists".to_string(),
                ));
            }
            if th.verdict == Verdict::Unknown {
                if let Some(w) = found {
                    return Ok(simplicity_outcome(s, w, vec![]));
                }
            }
            let extra = match found {
                Some(SimplicityReport { evidence: Evidence::CentralMonic { element }, .. }) => {
                    vec![("corroboration", report::element(s, element))]
                }
                _ => vec![],
            };
            Ok(simplicity_outcome(s, &th, extra))
        }
        Err(SimplicityError::HypothesesNotMet(h)) => match found {
            Some(w) => Ok(simplicity_outcome(s, w, vec![])),
            None => Ok(hypotheses_outcome("auto", &h)),
        },
        Err(SimplicityError::NotFinite) => Ok(match witness {
            Some(w) => simplicity_outcome(s, &w, vec![]),
            None => simplicity_outcome(
                s,
                &SimplicityReport {
                    verdict: Verdict::Unknown,
                    method: orelab_core::simplicity::Method::WitnessSearch,
                    hypotheses: vec![],
                    evidence: Evidence::Inconclusive("no decider applies".to_string()),
                    notes: vec![],
                },
                vec![],
            ),
        }),
        Err(e) => Err(e.into()),
    }
}
