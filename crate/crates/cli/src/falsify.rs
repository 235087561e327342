use hpp_core::poly::{parse_poly, stability_falsify, verify_witness, FalsifyOutcome, PolyJson, SampleSet, SparsePoly, StabilityWitness};
use hpp_core::rational::{fmt_rational, Rational};
use serde_json::{json, Value};

use crate::report::Status;

/// Reads a polynomial in the text format, or as polynomial JSON when the input starts with `{`.
pub fn load_polynomial(input: &str) -> Result<SparsePoly, String> {
    let trimmed = input.trim();
    if trimmed.starts_with('{') {
        let j: PolyJson = serde_json::from_str(trimmed).map_err(|e| e.to_string())?;
        SparsePoly::from_json(&j).map_err(|e| e.to_string())
    } else {
        parse_poly(trimmed).map_err(|e| e.to_string())
    }
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(fmt_rational).collect()
}

pub fn witness_json(w: &StabilityWitness) -> Value {
    match w {
        StabilityWitness::NotRealRooted { e, v, restriction } => json!({
            "kind": "not-real-rooted",
            "e": strings(e),
            "v": strings(v),
            "restriction": restriction.to_text("t"),
        }),
        StabilityWitness::NegativeRayleigh { i, j, point, value } => json!({
            "kind": "negative-rayleigh",
            "pair": [i, j],
            "point": strings(point),
            "value": fmt_rational(value),
        }),
    }
}

pub const MAX_GRID_DIM: usize = 20;

/// Built-in grid of `samples` lines plus `samples` seeded random ones.
pub fn falsify(p: &SparsePoly, samples: usize, seed: u64) -> Result<(Status, Value), String> {
    let n = p.vars().len();
    if n > MAX_GRID_DIM {
        return Err(format!("{n} variables; the built-in grid supports at most {MAX_GRID_DIM}"));
    }
    let mut set = SampleSet::halton(n, samples);
    set.extend(SampleSet::random(n, samples, seed));
    let base = json!({ "polynomial": p.to_text(), "variables": p.vars(), "samples": samples, "seed": seed });
    match stability_falsify(p, &set).map_err(|e| e.to_string())? {
        FalsifyOutcome::Witness(w) => {
            let mut details = base;
            details["witness"] = witness_json(&w);
            details["reverified"] = json!(verify_witness(p, &w));
            Ok((Status::Falsified, details))
        }
        FalsifyOutcome::NoneFound {
            lines_checked,
            points_checked,
        } => {
            let mut details = base;
            details["outcome"] = json!("none-found");
            details["kind"] = json!("sampled, necessary-only");
            details["lines_checked"] = json!(lines_checked);
            details["points_checked"] = json!(points_checked);
            Ok((Status::SampledPass, details))
        }
    }
}
