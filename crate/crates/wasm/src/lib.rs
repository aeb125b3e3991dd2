//! Browser bindings. Each export takes text, returns a JSON string, and throws
//! the error message as a string on bad input.

use maxeven::format::{parse_digraph, parse_instance, render_digraph};
use maxeven::generate::gen_digraph;
use maxeven::{solve_dicut_acyclic, solve_dicut_cut, solve_max_and_even};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Exact arithmetic grows quickly; keep the page responsive.
pub const MAX_VERTICES: usize = 40;
pub const MAX_ARCS: usize = 120;

fn frac(r: &maxeven::Rational) -> Value {
    json!({ "text": r.to_string(), "approx": r.to_f64() })
}

pub fn solve_instance_json(text: &str) -> Result<String, String> {
    let inst = parse_instance(text).map_err(|e| e.to_string())?;
    if inst.num_vars() > MAX_VERTICES || inst.num_clauses() > MAX_ARCS {
        return Err(format!("demo limit is {MAX_VERTICES} variables and {MAX_ARCS} clauses"));
    }
    let r = solve_max_and_even(&inst).map_err(|e| e.to_string())?;
    Ok(json!({
        "variables": inst.num_vars(),
        "clauses": inst.num_clauses(),
        "lp_value": frac(&r.solution.lp_value),
        "weak_count": r.solution.weak_count,
        "excluded_tautologies": r.normalization.excluded_tautologies.len(),
        "ternary": r.ternary.values(),
        "assignment": r.solution.assignment.values(),
    })
    .to_string())
}

pub fn analyze_digraph_json(text: &str) -> Result<String, String> {
    let g = parse_digraph(text).map_err(|e| e.to_string())?;
    if g.num_vertices() > MAX_VERTICES || g.num_arcs() > MAX_ARCS {
        return Err(format!("demo limit is {MAX_VERTICES} vertices and {MAX_ARCS} arcs"));
    }
    let cut = solve_dicut_cut(&g).map_err(|e| e.to_string())?;
    let acyc = solve_dicut_acyclic(&g).map_err(|e| e.to_string())?;
    let arcs: Vec<[usize; 2]> = g.arcs().iter().map(|&(u, v)| [u, v]).collect();
    Ok(json!({
        "vertices": g.num_vertices(),
        "arcs": arcs,
        "lp_value": frac(&acyc.lp_value),
        "ternary": acyc.ternary.values(),
        "cut": {
            "side": cut.side,
            "value": cut.undirected_cut_value,
            "directed_value": g.dicut_value(&cut.side),
        },
        "acyclic": {
            "ordering": acyc.ordering.order(),
            "kept_arcs": acyc.kept_arcs,
            "value": acyc.value,
            "candidate_values": [acyc.candidate_values.0, acyc.candidate_values.1],
        },
    })
    .to_string())
}

pub fn generate_digraph_text(n: usize, m: usize, seed: u64, planted: Option<f64>) -> Result<String, String> {
    if n == 0 || n > MAX_VERTICES || m > MAX_ARCS {
        return Err(format!("need 1..={MAX_VERTICES} vertices and at most {MAX_ARCS} arcs"));
    }
    let generated = gen_digraph(n, m, seed, planted);
    let comments: Vec<String> = generated.planted_dicut.map(|d| format!("planted dicut >= {d}")).into_iter().collect();
    Ok(render_digraph(&generated.graph, &comments))
}

#[wasm_bindgen]
pub fn solve_instance(text: &str) -> Result<String, JsValue> {
    solve_instance_json(text).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn analyze_digraph(text: &str) -> Result<String, JsValue> {
    analyze_digraph_json(text).map_err(|e| JsValue::from_str(&e))
}

/// `planted` outside `[0, 1]` means a uniform digraph.
#[wasm_bindgen]
pub fn generate_digraph(n: u32, m: u32, seed: u32, planted: f64) -> Result<String, JsValue> {
    let planted = (0.0..=1.0).contains(&planted).then_some(planted);
    generate_digraph_text(n as usize, m as usize, seed as u64, planted).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let v: Value = serde_json::from_str(&analyze_digraph_json("p dg 3 3\na 1 2\na 2 3\na 3 1\n").unwrap()).unwrap();
        assert_eq!(v["lp_value"]["text"], "3/2");
        assert_eq!(v["acyclic"]["value"], 2);
        assert_eq!(v["acyclic"]["kept_arcs"].as_array().unwrap().len(), 2);
        assert!(v["cut"]["value"].as_u64().unwrap() >= 1);
    }

    #[test]
    fn units() {
        let v: Value = serde_json::from_str(&solve_instance_json("p mae 1 2\n1 0\n-1 0\n").unwrap()).unwrap();
        assert_eq!(v["weak_count"], 1);
        assert_eq!(v["lp_value"]["approx"], 1.0);
    }

    #[test]
    fn generated_text_parses() {
        let text = generate_digraph_text(8, 20, 5, Some(0.6)).unwrap();
        assert!(text.starts_with("c planted dicut"));
        assert!(analyze_digraph_json(&text).is_ok());
        assert_eq!(text, generate_digraph_text(8, 20, 5, Some(0.6)).unwrap());
    }

    #[test]
    fn errors_are_messages() {
        assert!(solve_instance_json("p mae 1 1\n2 0\n").is_err());
        assert!(analyze_digraph_json("garbage").is_err());
        assert!(generate_digraph_text(0, 0, 0, None).is_err());
        assert!(generate_digraph_text(MAX_VERTICES + 1, 1, 0, None).is_err());
    }
}
