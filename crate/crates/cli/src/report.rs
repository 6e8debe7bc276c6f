//! JSON and text renderings of library values.

use serde_json::{json, Value};

use orelab_core::simplicity::{Evidence, InnerTerm, SimplicityReport};
use orelab_core::{AlgElem, BaseRing, MonoidElem, OreElem, OreRing, PiStructure, Witness};

pub fn exponent<B: BaseRing>(ring: &OreRing<B>, a: &MonoidElem) -> Value {
    match a {
        MonoidElem::Multi(m) => json!(m.exps()),
        MonoidElem::Index(_) => json!(ring.monoid().name(a)),
    }
}

pub fn coords<B: BaseRing>(base: &B, r: &AlgElem<B::Elem>) -> Value {
    json!(r.coords.iter().map(|c| base.format(c)).collect::<Vec<_>>())
}

pub fn algebra_element<B: BaseRing>(ring: &OreRing<B>, r: &AlgElem<B::Elem>) -> Value {
    json!({ "text": ring.format_coefficient(r, true), "coords": coords(ring.base(), r) })
}

pub fn element<B: BaseRing>(ring: &OreRing<B>, u: &OreElem<B::Elem>) -> Value {
    let terms: Vec<Value> = u
        .terms()
        .iter()
        .map(|(a, r)| json!({ "exp": exponent(ring, a), "coords": coords(ring.base(), r) }))
        .collect();
    json!({ "text": ring.format(u), "terms": terms })
}

pub fn witness<B: BaseRing>(pi: &PiStructure<B>, w: &Witness<B::Elem>) -> Value {
    let names: Vec<String> = w.monoid.iter().map(|a| pi.monoid().name(a)).collect();
    json!({
        "monoid": names,
        "basis": w.basis,
        "element": w.element.as_ref().map(|e| coords(pi.algebra().base(), e)),
        "rechecks": w.recheck(pi),
    })
}

fn inner_term<B: BaseRing>(ring: &OreRing<B>, t: &InnerTerm<B::Elem>) -> Value {
    let p = ring.base().characteristic();
    let map = match t.j {
        None => format!("delta_{}", t.delta + 1),
        Some(j) => match p.checked_pow(j) {
            Some(e) => format!("delta_{}^{e}", t.delta + 1),
            None => format!("delta_{}^({p}^{j})", t.delta + 1),
        },
    };
    json!({ "map": map, "coefficient": algebra_element(ring, &t.coefficient) })
}

pub fn evidence<B: BaseRing>(ring: &OreRing<B>, ev: &Evidence<B::Elem>) -> Value {
    match ev {
        Evidence::Checks => json!({ "kind": "checks" }),
        Evidence::AllGenerate { elements } => json!({ "kind": "all_generate", "nonzero_elements": elements }),
        Evidence::CoefficientIdeal { generator, basis } => json!({
            "kind": "coefficient_ideal",
            "generator": algebra_element(ring, generator),
            "basis": basis.iter().map(|b| algebra_element(ring, b)).collect::<Vec<_>>(),
        }),
        Evidence::RingIdeal { generator, dim, ambient } => json!({
            "kind": "ring_ideal",
            "generator": element(ring, generator),
            "dim": dim,
            "ambient_dim": ambient,
        }),
        Evidence::InnerCombination { terms, c } => json!({
            "kind": "inner_combination",
            "terms": terms.iter().map(|t| inner_term(ring, t)).collect::<Vec<_>>(),
            "c": algebra_element(ring, c),
        }),
        Evidence::CentralNonUnit { element: z } => json!({ "kind": "central_non_unit", "element": element(ring, z) }),
        Evidence::CentralMonic { element: z } => json!({ "kind": "central_monic", "element": element(ring, z) }),
        Evidence::Inconclusive(why) => json!({ "kind": "inconclusive", "reason": why }),
    }
}

pub fn simplicity<B: BaseRing>(ring: &OreRing<B>, r: &SimplicityReport<B::Elem>) -> Value {
    json!({
        "verdict": r.verdict.as_str(),
        "method": r.method.as_str(),
        "hypotheses": r.hypotheses.iter().map(|(h, ok)| json!({ "name": h, "holds": ok })).collect::<Vec<_>>(),
        "evidence": evidence(ring, &r.evidence),
        "notes": r.notes,
    })
}

pub fn evidence_text<B: BaseRing>(ring: &OreRing<B>, ev: &Evidence<B::Elem>) -> String {
    match ev {
        Evidence::Checks => "all hypotheses and conditions checked".to_string(),
        Evidence::AllGenerate { elements } => format!("each of the {elements} nonzero elements generates the ring"),
        Evidence::CoefficientIdeal { generator, basis } => format!(
            "proper invariant ideal of R generated by {} (dimension {})",
            ring.format_coefficient(generator, true),
            basis.len()
        ),
        Evidence::RingIdeal { generator, dim, ambient } => {
            format!("ideal generated by {} has dimension {dim} of {ambient}", ring.format(generator))
        }
        Evidence::InnerCombination { terms, c } => {
            let parts: Vec<String> = terms
                .iter()
                .map(|t| {
                    let v = inner_term(ring, t);
                    let coef = v["coefficient"]["text"].as_str().unwrap_or("");
                    let map = v["map"].as_str().unwrap_or("");
                    if coef.contains(' ') {
                        format!("({coef})*{map}")
                    } else {
                        format!("{coef}*{map}")
                    }
                })
                .collect();
            format!("{} is the inner derivation of {}", parts.join(" + "), ring.format_coefficient(c, true))
        }
        Evidence::CentralNonUnit { element: z } => format!("{} is central and not invertible", ring.format(z)),
        Evidence::CentralMonic { element: z } => format!("{} is central, monic and non-constant", ring.format(z)),
        Evidence::Inconclusive(why) => why.clone(),
    }
}
