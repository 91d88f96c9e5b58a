//! wasm-bindgen bindings behind `www/index.html`.
//!
//! Each export takes graph text (line format, or structured JSON when it
//! starts with `{`) and returns a JSON string for the page to render.

use graph_ideals::format::format_set;
use graph_ideals::generators::{gen_chain_loops, gen_figure1, gen_random};
use graph_ideals::ideals::{
    enumerate_sat_her, is_regular, perp, perp_perp, quotient_graph, saturate, LatticeRecord,
    SatHerSet,
};
use graph_ideals::{
    find_entryless_cycle, parse_graph, serialize_graph, to_dot, Graph, GraphFormat,
};
use serde::Serialize;
use wasm_bindgen::prelude::*;

fn read_graph(text: &str) -> Result<Graph, String> {
    let format = if text.trim_start().starts_with('{') {
        GraphFormat::Structured
    } else {
        GraphFormat::Line
    };
    parse_graph(text, format).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct LatticeView {
    vertices: usize,
    edges: usize,
    condition_l: bool,
    entryless_cycle: Option<Vec<String>>,
    entries: Vec<LatticeRecord>,
    /// Covering pairs `[lower, upper]` for the Hasse diagram.
    covers: Vec<(usize, usize)>,
}

pub fn lattice_view(graph_text: &str) -> Result<String, String> {
    let g = read_graph(graph_text)?;
    let lattice = enumerate_sat_her(&g).map_err(|e| e.to_string())?;
    let cycle = find_entryless_cycle(&g);
    let view = LatticeView {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        condition_l: cycle.is_none(),
        entryless_cycle: cycle.map(|c| c.edges().to_vec()),
        entries: lattice.records(&g),
        covers: lattice.covers(),
    };
    Ok(serde_json::to_string(&view).expect("view serializes"))
}

#[derive(Serialize)]
struct SetView {
    requested: String,
    set: String,
    saturated_input: bool,
    perp: String,
    perp_perp: String,
    regular: bool,
    graph_condition_l: bool,
    quotient_condition_l: bool,
    quotient: String,
    quotient_dot: String,
}

pub fn set_view(graph_text: &str, set_csv: &str) -> Result<String, String> {
    let g = read_graph(graph_text)?;
    let ids: Vec<&str> = set_csv
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    let raw = g
        .set_from_ids(&ids)
        .map_err(|v| format!("unknown vertex {v}"))?;
    let h: SatHerSet = saturate(&g, &raw).map_err(|e| e.to_string())?;
    let err = |e: graph_ideals::Error| e.to_string();
    let q = quotient_graph(&g, &h).map_err(err)?;
    let view = SetView {
        requested: format_set(&g, &raw),
        set: format_set(&g, h.as_set()),
        saturated_input: h.as_set() == &raw,
        perp: format_set(&g, perp(&g, &h).map_err(err)?.as_set()),
        perp_perp: format_set(&g, perp_perp(&g, &h).map_err(err)?.as_set()),
        regular: is_regular(&g, &h).map_err(err)?,
        graph_condition_l: find_entryless_cycle(&g).is_none(),
        quotient_condition_l: find_entryless_cycle(&q).is_none(),
        quotient: serialize_graph(&q, GraphFormat::Line),
        quotient_dot: to_dot(&q),
    };
    Ok(serde_json::to_string(&view).expect("view serializes"))
}

/// `family` is `figure1` (size = depth), `chain` (size = length) or
/// `random` (size = vertex count, twice as many edges).
pub fn generated(family: &str, size: u32, seed: u64) -> Result<String, String> {
    let g = match family {
        "figure1" => gen_figure1(size).map(|(g, _)| g),
        "chain" => gen_chain_loops(size as usize),
        "random" => gen_random(size as usize, 2 * size as usize, 0.3, seed),
        other => return Err(format!("unknown family {other}")),
    }
    .map_err(|e| e.to_string())?;
    Ok(serialize_graph(&g, GraphFormat::Line))
}

#[wasm_bindgen]
pub fn lattice(graph_text: &str) -> Result<String, JsValue> {
    lattice_view(graph_text).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn analyze_set(graph_text: &str, set_csv: &str) -> Result<String, JsValue> {
    set_view(graph_text, set_csv).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn generate(family: &str, size: u32, seed: u64) -> Result<String, JsValue> {
    generated(family, size, seed).map_err(|e| JsValue::from_str(&e))
}
