//! The submodularity argument showing that the specialised F7 polymatroids
//! have no amalgam, replayed with values in units of `m`.

use serde::Serialize;

use super::{AnalysisError, Result};
use crate::polymatroid::{f7_specialized_pair, scale, Polymatroid};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryValue {
    pub function: String,
    pub set: Vec<String>,
    /// Value in units of `m`.
    pub units_of_m: u32,
    /// True for the seven values named in the argument, false for auxiliary ones.
    pub primary: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainStep {
    pub conclusion: String,
    pub justification: String,
    pub inferred_by_symmetry: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    /// `None` for the symbolic statement.
    pub m: Option<u32>,
    pub boundary: Vec<BoundaryValue>,
    pub steps: Vec<ChainStep>,
    pub contradiction: String,
    pub linearity: String,
}

/// Values the argument consumes, in units of `m`: `(function, set, value, primary)`.
const EXPECTED: [(&str, &[&str], u32, bool); 10] = [
    ("r1", &["0"], 2, true),
    ("r1", &["0", "3"], 2, true),
    ("r1", &["1", "3"], 2, true),
    ("r1", &["3"], 1, true),
    ("r2", &["0", "4"], 2, true),
    ("r2", &["2", "4"], 2, true),
    ("r2", &["1", "4"], 3, true),
    ("r1", &["2"], 2, false),
    ("r1", &["2", "3"], 2, false),
    ("r1", &["0", "2", "3"], 3, false),
];

fn lookup(r: &Polymatroid, set: &[&str], step: &str) -> Result<u32> {
    r.r_of(set).map_err(|e| AnalysisError::ChainBroken {
        step: step.into(),
        detail: e.to_string(),
    })
}

fn broken(step: &str, detail: String) -> AnalysisError {
    AnalysisError::ChainBroken {
        step: step.into(),
        detail,
    }
}

/// Checks the boundary values against the polymatroids computed from the
/// specialised supports (scaled by `m` when given) and replays the chain.
pub fn no_amalgam_proof_chain(m: Option<u32>) -> Result<ChainReport> {
    let (r1, r2) = f7_specialized_pair();
    let mult = m.unwrap_or(1);
    if mult == 0 {
        return Err(broken("scale", "m must be at least 1".into()));
    }
    let (s1, s2) = (scale(&r1, mult), scale(&r2, mult));
    let mut boundary = Vec::new();
    for (f, set, units, primary) in EXPECTED.iter() {
        let r = if *f == "r1" { &s1 } else { &s2 };
        let got = lookup(r, set, "boundary")?;
        if got != units * mult {
            return Err(broken(
                "boundary",
                format!("{f}({set:?}) = {got}, expected {}", units * mult),
            ));
        }
        boundary.push(BoundaryValue {
            function: f.to_string(),
            set: set.iter().map(|s| s.to_string()).collect(),
            units_of_m: *units,
            primary: *primary,
        });
    }

    // Replay in units of m using the values read off r1, r2 at m = 1.
    let v = |r: &Polymatroid, set: &[&str]| lookup(r, set, "replay");
    let mut steps = Vec::new();

    let r034_lo = v(&r1, &["0", "3"])?;
    let r034_hi = v(&r1, &["0", "3"])? + v(&r2, &["0", "4"])? - v(&r1, &["0"])?;
    if r034_lo != r034_hi {
        return Err(broken("r({0,3,4})", format!("bounds {r034_lo}..{r034_hi} do not pin the value")));
    }
    let r034 = r034_lo;
    steps.push(ChainStep {
        conclusion: format!("r({{0,3,4}}) = {r034}m"),
        justification: format!(
            "monotonicity gives r({{0,3,4}}) >= r1({{0,3}}) = {r034_lo}m; submodularity on {{0,3}}, {{0,4}} gives r({{0,3,4}}) <= {r034_hi}m"
        ),
        inferred_by_symmetry: false,
    });

    let r234_lo = v(&r1, &["2", "3"])?;
    let r234_hi = v(&r1, &["2", "3"])? + v(&r2, &["2", "4"])? - v(&r1, &["2"])?;
    if r234_lo != r234_hi {
        return Err(broken("r({2,3,4})", format!("bounds {r234_lo}..{r234_hi} do not pin the value")));
    }
    let r234 = r234_lo;
    steps.push(ChainStep {
        conclusion: format!("r({{2,3,4}}) = {r234}m"),
        justification: format!(
            "same argument with 2 in place of 0: r1({{2,3}}) = {r234_lo}m, submodularity on {{2,3}}, {{2,4}} with r1({{2}}) = {}m",
            v(&r1, &["2"])?
        ),
        inferred_by_symmetry: true,
    });

    let r0234_lo = v(&r1, &["0", "2", "3"])?;
    let r34_lo = v(&r1, &["3"])?;
    let r34_hi = (r034 + r234).checked_sub(r0234_lo).ok_or_else(|| broken("r({3,4})", "negative bound".into()))?;
    if r34_lo != r34_hi {
        return Err(broken("r({3,4})", format!("bounds {r34_lo}..{r34_hi} do not pin the value")));
    }
    let r34 = r34_lo;
    steps.push(ChainStep {
        conclusion: format!("r({{3,4}}) = {r34}m"),
        justification: format!(
            "submodularity on {{0,3,4}}, {{2,3,4}} with r({{0,2,3,4}}) >= r1({{0,2,3}}) = {r0234_lo}m gives r({{3,4}}) <= {r34_hi}m; monotonicity gives r({{3,4}}) >= r1({{3}}) = {r34_lo}m"
        ),
        inferred_by_symmetry: false,
    });

    let r134_hi = (v(&r1, &["1", "3"])? + r34)
        .checked_sub(v(&r1, &["3"])?)
        .ok_or_else(|| broken("r({1,3,4})", "negative bound".into()))?;
    steps.push(ChainStep {
        conclusion: format!("r({{1,3,4}}) <= {r134_hi}m"),
        justification: format!(
            "submodularity on {{1,3}}, {{3,4}}: r({{3}}) + r({{1,3,4}}) <= r1({{1,3}}) + r({{3,4}}) = {}m",
            v(&r1, &["1", "3"])? + r34
        ),
        inferred_by_symmetry: false,
    });

    let r14 = v(&r2, &["1", "4"])?;
    if r14 <= r134_hi {
        return Err(broken(
            "contradiction",
            format!("r2({{1,4}}) = {r14}m does not exceed {r134_hi}m"),
        ));
    }
    steps.push(ChainStep {
        conclusion: format!("r({{1,3,4}}) >= {r14}m"),
        justification: format!("monotonicity: r({{1,3,4}}) >= r2({{1,4}}) = {r14}m"),
        inferred_by_symmetry: false,
    });

    Ok(ChainReport {
        m,
        boundary,
        steps,
        contradiction: format!("{r14}m <= r({{1,3,4}}) <= {r134_hi}m is impossible for every m >= 1"),
        linearity: "every boundary value is m times its value at m = 1 and every inequality used is homogeneous and linear, so the argument at m = 1 scales to all m >= 1".into(),
    })
}
