//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each exported function returns a JSON string; the pure `*_json`
//! counterparts are what the tests exercise.

mod render;

use serde_json::{json, Value};
use stallings::families::{family_h, family_k, theorem_rank, FamilySpec};
use stallings::subgroup_file::{resolve_alphabet, SubgroupFile};
use stallings::{parse_word, pullback_with_pairs, Alphabet, StallingsGraph, Word};
use wasm_bindgen::prelude::*;

use render::Style;

/// Keeps the demo responsive on pathological input.
const DEMO_MAX_VERTICES: usize = 20_000;

fn words_json(words: &[Word]) -> Value {
    words.iter().map(Word::to_string).collect()
}

fn factor_json(gens: &[Word], g: &StallingsGraph, pos: &[(f64, f64)]) -> Value {
    json!({
        "generators": words_json(gens),
        "rank": g.rank(),
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "svg": render::svg(g, pos, &Style::default()),
    })
}

fn intersection_json(gens_h: &[Word], gens_k: &[Word], alphabet: &Alphabet) -> Result<Value, String> {
    let err = |e: stallings::Error| e.to_string();
    let h = StallingsGraph::subgroup_with_limit(gens_h, alphabet, DEMO_MAX_VERTICES).map_err(err)?;
    let k = StallingsGraph::subgroup_with_limit(gens_k, alphabet, DEMO_MAX_VERTICES).map_err(err)?;
    let p = pullback_with_pairs(&h, &k, DEMO_MAX_VERTICES).map_err(err)?;
    let keep = p.graph.core_vertices();
    let core = p.graph.core_trim();
    let style = Style {
        faded: keep.iter().map(|&k| !k).collect(),
        marked: Vec::new(),
    };
    Ok(json!({
        "h": factor_json(gens_h, &h, &render::horizontal(&h)),
        "k": factor_json(gens_k, &k, &render::vertical(&k)),
        "intersection": {
            "rank": core.rank(),
            "vertices": p.graph.vertex_count(),
            "core_vertices": core.vertex_count(),
            "edges": core.edge_count(),
            "basis": words_json(&core.basis()),
            "svg": render::svg(&p.graph, &render::grid(&p.pairs, &h, &k), &style),
            "dot": core.to_dot(),
        },
    }))
}

/// The family `H(m,n,k,ℓ)`, `K(n)` and their intersection, drawn with `H`
/// along the top, `K` down the side, and the intersection on the grid
/// between them. Hanging trees are drawn faded.
pub fn explore_family_json(m: i64, n: i64, k: i64, l: i64) -> Result<Value, String> {
    let spec = FamilySpec::from_signed(m, n, k, l).map_err(|e| e.to_string())?;
    let gens_h = family_h(&spec);
    let gens_k = family_k(spec.n()).map_err(|e| e.to_string())?;
    let mut out = intersection_json(&gens_h, &gens_k, &Alphabet::free_ab())?;
    out["expected"] = json!(theorem_rank(&spec));
    out["max"] = json!((spec.m() - 1) * (spec.n() - 1) + 1);
    Ok(out)
}

fn parse_file(text: &str) -> Result<SubgroupFile, String> {
    SubgroupFile::parse(text).map_err(|e| e.to_string())
}

/// Intersection of two subgroups given as one generator per line.
pub fn intersect_json(h_text: &str, k_text: &str) -> Result<Value, String> {
    let (fh, fk) = (parse_file(h_text)?, parse_file(k_text)?);
    let alphabet = resolve_alphabet(&[&fh, &fk], &[]).map_err(|e| e.to_string())?;
    let gens_h = fh.words(&alphabet).map_err(|e| format!("H: {e}"))?;
    let gens_k = fk.words(&alphabet).map_err(|e| format!("K: {e}"))?;
    intersection_json(&gens_h, &gens_k, &alphabet)
}

/// Reads `word` in the subgroup's graph, highlighting the visited vertices.
pub fn member_json(h_text: &str, word: &str) -> Result<Value, String> {
    let f = parse_file(h_text)?;
    let alphabet = resolve_alphabet(&[&f], &[word]).map_err(|e| e.to_string())?;
    let gens = f.words(&alphabet).map_err(|e| e.to_string())?;
    let w = parse_word(word, &alphabet).map_err(|e| e.to_string())?;
    let g = StallingsGraph::subgroup_with_limit(&gens, &alphabet, DEMO_MAX_VERTICES)
        .map_err(|e| e.to_string())?;
    let path = g.trace(&w).map_err(|e| e.to_string())?;
    let member = g.contains(&w).map_err(|e| e.to_string())?;
    let mut marked = vec![false; g.vertex_count()];
    for &v in &path {
        marked[v] = true;
    }
    let read = path.len() - 1;
    Ok(json!({
        "member": member,
        "word": w.to_string(),
        "letters_read": read,
        "length": w.len(),
        "ends_at_base": read == w.len() && path.last() == Some(&g.base()),
        "path": path,
        "rank": g.rank(),
        "svg": render::svg(&g, &render::horizontal(&g), &Style { faded: Vec::new(), marked }),
    }))
}

fn to_js(r: Result<Value, String>) -> Result<String, JsValue> {
    r.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn explore_family(m: i32, n: i32, k: i32, l: i32) -> Result<String, JsValue> {
    to_js(explore_family_json(m.into(), n.into(), k.into(), l.into()))
}

#[wasm_bindgen]
pub fn intersect(h_text: &str, k_text: &str) -> Result<String, JsValue> {
    to_js(intersect_json(h_text, k_text))
}

#[wasm_bindgen]
pub fn member(h_text: &str, word: &str) -> Result<String, JsValue> {
    to_js(member_json(h_text, word))
}
