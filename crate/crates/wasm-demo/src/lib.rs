//! wasm-bindgen bindings for the browser demo page.
//!
//! Three operations back the page: an SVG scatter of the realizable
//! `(b, i)` pairs with cone overlays, a membership/classification report
//! for one pair, and the Ehrhart data of a user-supplied triangle. Reports
//! come back as JSON strings; errors are reported in-band under an
//! `"error"` key so the page never has to catch exceptions.

use serde_json::json;
use wasm_bindgen::prelude::*;

use lattice_triangles::cones::{apex, cone_classify, polygon_set_contains, scott_holds};
use lattice_triangles::lattice::{
    brute_force_bi, dilated_point_count, ehrhart_eval, hnf_normalize, pick_area_twice, BiPair,
    LatticeTriangle,
};
use lattice_triangles::plot::{render_pairs_svg, SvgOptions};
use lattice_triangles::realize::{enumerate_pairs, membership_witness, Witness};

fn error_json(message: impl std::fmt::Display) -> String {
    json!({ "error": message.to_string() }).to_string()
}

fn witness_json(w: &Witness) -> serde_json::Value {
    let t = w.triple();
    let vertices: Vec<[i64; 2]> = w.vertices().iter().map(|v| [v.x, v.y]).collect();
    json!({
        "A": t.base(),
        "B": t.shear(),
        "C": t.height(),
        "vertices": vertices,
    })
}

/// SVG scatter of all pairs with `2i + b - 2 <= n_max`, cropped to
/// `b <= b_crop` when `b_crop > 0`, with facet overlays for cones
/// `cone_lo..=cone_hi` when `cone_hi >= cone_lo >= 1`.
#[wasm_bindgen]
pub fn scatter_svg(n_max: u32, b_crop: u32, cone_lo: u32, cone_hi: u32) -> String {
    let set = match enumerate_pairs(i64::from(n_max.min(20_000))) {
        Ok(set) => set,
        Err(e) => {
            let ns = "http://www.w3.org/2000/svg";
            return format!("<svg xmlns=\"{ns}\"><text x=\"10\" y=\"20\">{e}</text></svg>");
        }
    };
    let cones =
        (cone_lo >= 1 && cone_lo <= cone_hi).then_some((i64::from(cone_lo), i64::from(cone_hi)));
    let options = SvgOptions {
        b_crop: (b_crop > 0).then_some(i64::from(b_crop)),
        cones,
    };
    render_pairs_svg(&set, &options)
}

/// JSON report on one `(b, i)` pair: polygon-set membership, Scott's
/// inequality, cone classification with the cone's apex, and the triangle
/// membership decision with a witness when one exists.
#[wasm_bindgen]
pub fn pair_report(b: i32, i: i32) -> String {
    let pair = BiPair::new(i64::from(b), i64::from(i));
    let mut doc = json!({
        "b": pair.boundary,
        "i": pair.interior,
        "polygon_pair": polygon_set_contains(pair),
        "scott_holds": scott_holds(pair),
    });
    let obj = doc.as_object_mut().unwrap();
    match cone_classify(pair) {
        Some(c) => {
            let a = apex(c);
            obj.insert("cone".into(), json!(c.get()));
            obj.insert("cone_apex".into(), json!([a.boundary, a.interior]));
        }
        None => {
            obj.insert("cone".into(), json!(null));
        }
    }
    match membership_witness(pair) {
        Ok(Some(w)) => {
            obj.insert("member".into(), json!(true));
            obj.insert("witness".into(), witness_json(&w));
        }
        Ok(None) => {
            obj.insert("member".into(), json!(false));
        }
        Err(e) => {
            obj.insert("member".into(), json!(false));
            obj.insert("error".into(), json!(e.to_string()));
        }
    }
    doc.to_string()
}

/// JSON report on the triangle with the given vertices: its `(b, i)` pair,
/// normalized volume, canonical HNF triple, and the Ehrhart values for
/// `k = 0..=k_max`, each cross-checked against a scan of the dilate.
#[wasm_bindgen]
pub fn triangle_report(x1: i32, y1: i32, x2: i32, y2: i32, x3: i32, y3: i32, k_max: u32) -> String {
    let coords = [
        (i64::from(x1), i64::from(y1)),
        (i64::from(x2), i64::from(y2)),
        (i64::from(x3), i64::from(y3)),
    ];
    let triangle = match LatticeTriangle::from_coords(coords) {
        Ok(t) => t,
        Err(e) => return error_json(e),
    };
    let pair = brute_force_bi(&triangle);
    let hnf = hnf_normalize(&triangle);
    let k_max = i64::from(k_max.min(1_000));
    let mut values = Vec::new();
    let mut all_match = true;
    for k in 0..=k_max {
        let formula = ehrhart_eval(pair, k);
        let scan = dilated_point_count(&triangle, k);
        all_match &= formula == scan;
        values.push(json!({ "k": k, "value": formula, "scan": scan }));
    }
    json!({
        "b": pair.boundary,
        "i": pair.interior,
        "normalized_volume": pick_area_twice(pair),
        "hnf": { "A": hnf.base(), "B": hnf.shear(), "C": hnf.height() },
        "ehrhart": values,
        "scan_matches": all_match,
    })
    .to_string()
}
