//! Browser bindings: Gröbner bases, strong Koszul certification and apolar
//! ideals on pasted ideal or inverse-system text.

use serde_json::json;
use strongkoszul::apolarity::{apolar_ideal, InverseSystemModule};
use strongkoszul::gallery::{self, GalleryItem};
use strongkoszul::grobner::hilbert_function;
use strongkoszul::koszul::{strong_koszul_certify, KoszulMode};
use strongkoszul::parse::render_file;
use strongkoszul::{Field, IdealPresentation, MonomialOrder, Polynomial};
use wasm_bindgen::prelude::*;

/// Largest variable count the page certifies exhaustively.
pub const BROWSER_CAP: usize = 8;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Reduced Gröbner basis in ideal-file syntax; an empty `order` means revlex
/// in declaration order.
pub fn groebner_text(ideal: &str, order: &str) -> Result<String, String> {
    let ideal = IdealPresentation::parse(ideal).map_err(err)?;
    let order = if order.trim().is_empty() {
        ideal.default_order()
    } else {
        MonomialOrder::parse(order.trim(), ideal.ring().names()).map_err(err)?
    };
    let gb = ideal.groebner(&order);
    let names = ideal.ring().names();
    let lead: Vec<String> = gb.initial_ideal().gens().iter().map(|m| m.fmt_with(names)).collect();
    Ok(format!(
        "# under {}\n{}# initial ideal: ({})\n",
        order.describe(names),
        render_file(ideal.ring(), gb.basis(), false),
        lead.join(", ")
    ))
}

/// Exhaustive strong Koszul certification as JSON with the verdict, pair count
/// and any witness.
pub fn koszul_json(ideal: &str) -> Result<String, String> {
    let ideal = IdealPresentation::parse(ideal).map_err(err)?;
    let cert = strong_koszul_certify(&ideal, KoszulMode::Exhaustive { cap: BROWSER_CAP }).map_err(err)?;
    let out = json!({
        "verdict": cert.verdict,
        "pairs_checked": cert.pairs_checked,
        "witness": cert.witness,
    });
    serde_json::to_string_pretty(&out).map_err(err)
}

/// Apolar ideal of a `dualvars:` inverse system, with its Hilbert function.
pub fn apolar_text(forms: &str) -> Result<String, String> {
    let module = InverseSystemModule::parse(forms).map_err(err)?;
    let ideal = apolar_ideal(&module).map_err(err)?;
    let hf = hilbert_function(&ideal, 0..module.degree() + 2).map_err(err)?;
    Ok(format!("{}# hilbert function: {hf:?}\n", ideal.render()))
}

/// Text of a gallery example, for filling the input boxes.
pub fn example_text(name: &str) -> Result<String, String> {
    match gallery::lookup(name, Field::Rational).map_err(err)? {
        GalleryItem::Ideal { ideal, .. } => Ok(ideal.render()),
        GalleryItem::Module(m) => {
            let polys: Vec<Polynomial> = m.gens().iter().map(|g| g.poly().clone()).collect();
            Ok(render_file(m.gens()[0].ring(), &polys, true))
        }
        GalleryItem::Lines(_) => Err(format!("`{name}` is not an ideal or inverse system")),
    }
}

#[wasm_bindgen]
pub fn groebner(ideal: &str, order: &str) -> Result<String, JsError> {
    groebner_text(ideal, order).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn koszul(ideal: &str) -> Result<String, JsError> {
    koszul_json(ideal).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn apolar(forms: &str) -> Result<String, JsError> {
    apolar_text(forms).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn example(name: &str) -> Result<String, JsError> {
    example_text(name).map_err(|e| JsError::new(&e))
}
