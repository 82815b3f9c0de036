//! Browser bindings: build a Cambrian lattice, mutate it at an atom, reroot
//! it at an element. Every call takes and returns JSON strings so the page
//! keeps the current lattice itself.

use latmut::cambrian::{build_cambrian, Polygon};
use latmut::flip::{check_mutation, flip_on_atom, reroot as reroot_poset};
use latmut::order::{are_isomorphic, poset_from_json, poset_to_dot, poset_to_json};
use latmut::{Lattice, Poset};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn view(p: &Poset) -> Value {
    let lattice: Value = serde_json::from_str(&poset_to_json(p)).expect("poset JSON");
    let atoms: Vec<usize> = match p.minimum() {
        Some(b) => p.covers_of(b).to_vec(),
        None => Vec::new(),
    };
    json!({ "lattice": lattice, "dot": poset_to_dot(p, "lattice"), "atoms": atoms })
}

fn parse(lattice_json: &str) -> Result<Poset, String> {
    poset_from_json(lattice_json).map_err(|e| e.to_string())
}

/// `spec` is a polygon string such as `A3:UL` or `B3:LL`.
pub fn build_json(spec: &str) -> Result<String, String> {
    let polygon: Polygon = spec.parse().map_err(|e: latmut::cambrian::CambrianError| e.to_string())?;
    let c = build_cambrian(&polygon).map_err(|e| e.to_string())?;
    let mut v = view(&c.lattice);
    v["orientation"] = json!(c.orientation().to_string());
    Ok(v.to_string())
}

/// Flips at an atom given by index; reports whether the result is a lattice
/// and whether it is isomorphic to the input.
pub fn mutate_json(lattice_json: &str, atom: usize) -> Result<String, String> {
    let p = parse(lattice_json)?;
    let l = Lattice::new(p).map_err(|e| e.to_string())?;
    if atom >= l.len() || !l.is_cover(l.bottom(), atom) {
        return Err(format!("{atom} is not an atom"));
    }
    let (q, pair) = flip_on_atom(l.poset(), atom).map_err(|e| e.to_string())?;
    let verdict = check_mutation(&l, &pair, false);
    let mut v = view(&q);
    v["is_mutation"] = json!(verdict.is_mutation);
    v["ac"] = json!(verdict.ac_ok);
    v["d_sublattice"] = json!(verdict.d_sublattice_ok);
    v["isomorphic_to_input"] = json!(Lattice::new(q).is_ok_and(|m| are_isomorphic(&l, &m)));
    Ok(v.to_string())
}

/// Flips until `element` is the minimum.
pub fn reroot_json(lattice_json: &str, element: usize) -> Result<String, String> {
    let p = parse(lattice_json)?;
    if element >= p.len() {
        return Err(format!("no element {element}"));
    }
    let (q, seq) = reroot_poset(&p, element).map_err(|e| e.to_string())?;
    let mut v = view(&q);
    v["flips"] = json!(seq.len());
    v["is_lattice"] = json!(Lattice::new(q).is_ok());
    Ok(v.to_string())
}

#[wasm_bindgen]
pub fn build(spec: &str) -> Result<String, JsValue> {
    build_json(spec).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn mutate(lattice_json: &str, atom: usize) -> Result<String, JsValue> {
    mutate_json(lattice_json, atom).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn reroot(lattice_json: &str, element: usize) -> Result<String, JsValue> {
    reroot_json(lattice_json, element).map_err(|e| JsValue::from_str(&e))
}
