//! The claim registry: id, expected status and the check that produces a status.

use std::collections::BTreeSet;

use hpp_core::analysis::{
    degenerate_quadrangles, embed_report, f7_specialized_polynomials, hypcone_sampled, in_v_space, in_w_space,
    no_amalgam_proof_chain, shift_family, u_vector, v_space, verify_rayleigh_cubic, w_space, LogVector,
    RAYLEIGH_CUBIC,
};
use hpp_core::matroid::{catalog, elements, nonfano_matrix, p8_matrix, Matroid, CATALOG_NAMES};
use hpp_core::poly::{basis_generating_polynomial, stability_falsify, FalsifyOutcome, SampleSet, SparsePoly};
use hpp_core::polymatroid::{
    f7_specialized_pair, find_amalgam, mconvex_from_rank, rank_from_mconvex, restrict, scale, AmalgamOutcome,
    MConvexSet, Polymatroid,
};
use hpp_core::quaternion::{cauchy_binet_check, qu_hpp_identity, quaternionic_u24, QuatMatrix};
use hpp_core::rational::{int, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::falsify::witness_json;
use crate::report::Status;

#[derive(Debug, Clone)]
pub struct Options {
    pub m: u32,
    pub seed: u64,
    /// Overrides each claim's default sample count.
    pub samples: Option<usize>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            m: 1,
            seed: 0,
            samples: None,
        }
    }
}

impl Options {
    fn samples_or(&self, default: usize) -> usize {
        self.samples.unwrap_or(default)
    }
}

pub type ClaimResult = Result<(Status, Value), String>;

pub struct Claim {
    pub id: &'static str,
    pub summary: &'static str,
    pub expected: Status,
    pub run: fn(&Options) -> ClaimResult,
}

pub const CLAIMS: &[Claim] = &[
    Claim {
        id: "amalgam-counterexample",
        summary: "the specialised F7 polymatroids (scaled by m) have no amalgam",
        expected: Status::Verified,
        run: amalgam_counterexample,
    },
    Claim {
        id: "rayleigh-cubic",
        summary: "Rayleigh difference of F_{a,b} restricts to the stated cubic",
        expected: Status::Verified,
        run: rayleigh_cubic,
    },
    Claim {
        id: "vdim-p8",
        summary: "dim V(P8) = 9",
        expected: Status::Verified,
        run: |_| vdim("p8", 9),
    },
    Claim {
        id: "vdim-p1",
        summary: "dim V(P1) = 10",
        expected: Status::Verified,
        run: |_| vdim("p1", 10),
    },
    Claim {
        id: "u-vector-nonfano",
        summary: "u of the non-Fano matrix is log 2 at {2,4,6}, in V and not in W",
        expected: Status::Verified,
        run: u_vector_nonfano,
    },
    Claim {
        id: "embed-complement",
        summary: "embedded U(P8) and the relaxed basis span a complement of W(P1) in V(P1)",
        expected: Status::Verified,
        run: embed_complement,
    },
    Claim {
        id: "qu-cauchy-binet",
        summary: "quaternionic Cauchy-Binet on random instances",
        expected: Status::SampledPass,
        run: qu_cauchy_binet,
    },
    Claim {
        id: "qu-hpp-identity",
        summary: "h_M^2 = det(phi(A) X phi(A)*) for unimodular examples",
        expected: Status::Verified,
        run: qu_identity,
    },
    Claim {
        id: "mconvex-bijection",
        summary: "r_J and J_r are mutually inverse",
        expected: Status::SampledPass,
        run: mconvex_bijection,
    },
    Claim {
        id: "mconvrest",
        summary: "r_J restricted to T is the rank of the slice of J",
        expected: Status::SampledPass,
        run: mconvrest,
    },
    Claim {
        id: "lemma-relax",
        summary: "degenerate quadrangles of a relaxation are degenerate quadrangles of the original",
        expected: Status::Verified,
        run: relax_quadrangles,
    },
    Claim {
        id: "hypcone-sampled",
        summary: "H_k real-rooted along sampled lines with the expected cone members",
        expected: Status::SampledPass,
        run: hypcone,
    },
];

pub fn find(id: &str) -> Option<&'static Claim> {
    CLAIMS.iter().find(|c| c.id == id)
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn verdict(ok: bool, pass: Status) -> Status {
    if ok {
        pass
    } else {
        Status::Falsified
    }
}

fn amalgam_counterexample(o: &Options) -> ClaimResult {
    if o.m == 0 {
        return Err("--m must be at least 1".into());
    }
    let (r1, r2) = f7_specialized_pair();
    let search = match find_amalgam(&scale(&r1, o.m), &scale(&r2, o.m)).map_err(err)? {
        AmalgamOutcome::Infeasible { nodes } => json!({ "outcome": "infeasible", "nodes": nodes }),
        AmalgamOutcome::Found(r) => {
            return Ok((Status::Falsified, json!({ "m": o.m, "amalgam": r.to_json() })));
        }
    };
    let chain = no_amalgam_proof_chain(None).map_err(err)?;
    no_amalgam_proof_chain(Some(o.m)).map_err(err)?;
    Ok((
        Status::Verified,
        json!({
            "m": o.m,
            "search": search,
            "boundary": chain.boundary,
            "steps": chain.steps,
            "contradiction": chain.contradiction,
        }),
    ))
}

fn rayleigh_cubic(_: &Options) -> ClaimResult {
    match verify_rayleigh_cubic() {
        Ok((_, r)) => Ok((
            Status::Verified,
            json!({
                "cubic": RAYLEIGH_CUBIC,
                "coefficients": { "t^1": r.coefficients[1], "t^2": r.coefficients[2], "t^3": r.coefficients[3] },
                "at_a_b_1": r.at_unit,
                "t": r.negative_at,
                "value": r.value_there,
            }),
        )),
        Err(e) => Ok((Status::Falsified, json!({ "error": e.to_string() }))),
    }
}

fn vdim(name: &str, want: usize) -> ClaimResult {
    let m = catalog(name).map_err(err)?;
    let dim = v_space(&m).dim();
    Ok((
        verdict(dim == want, Status::Verified),
        json!({
            "matroid": name,
            "bases": m.bases().len(),
            "degenerate_quadrangles": degenerate_quadrangles(&m).len(),
            "dim_v": dim,
            "dim_w": w_space(&m).dim(),
            "expected_dim_v": want,
        }),
    ))
}

fn u_vector_nonfano(_: &Options) -> ClaimResult {
    let m = catalog("nonfano").map_err(err)?;
    let u = u_vector(&nonfano_matrix(), &m).map_err(err)?;
    let x = m.mask_of(&["2", "4", "6"]).map_err(err)?;
    let is_delta = u == LogVector::delta(m.bases().to_vec(), x, 2, int(1));
    let (in_v, in_w) = (in_v_space(&m, &u), in_w_space(&m, &u));
    let support: Vec<Value> = u
        .to_json(&m)
        .into_iter()
        .filter(|e| !e.log.is_empty())
        .map(|e| json!(e))
        .collect();
    Ok((
        verdict(is_delta && in_v && !in_w, Status::Verified),
        json!({ "support": support, "equals_log2_delta_246": is_delta, "in_v": in_v, "in_w": in_w }),
    ))
}

fn embed_complement(_: &Options) -> ClaimResult {
    let (p8, p1) = (catalog("p8").map_err(err)?, catalog("p1").map_err(err)?);
    let u = u_vector(&p8_matrix(), &p8).map_err(err)?;
    let rep = embed_report(&p8, &p1, &[u.coordinate(2)]).map_err(err)?;
    let ok = rep.iota_maps_v_into_v && rep.delta_x_in_v && rep.intersection_trivial && rep.spans_complement;
    Ok((verdict(ok, Status::Verified), serde_json::to_value(rep).map_err(err)?))
}

fn qu_cauchy_binet(o: &Options) -> ClaimResult {
    let ones = cauchy_binet_check(&QuatMatrix::from_ints(&[&[1, 1]])).map_err(err)?;
    if !ones.holds {
        return Ok((Status::Falsified, json!({ "instance": "(1 1)", "report": ones })));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
    let count = o.samples_or(100);
    for k in 0..count {
        let m = rng.gen_range(1..=3);
        let n = rng.gen_range(m..=5);
        let a = QuatMatrix::random(m, n, -3, 3, &mut rng);
        let r = cauchy_binet_check(&a).map_err(err)?;
        if !r.holds {
            return Ok((
                Status::Falsified,
                json!({ "instance": k, "matrix": a.to_json(), "report": r }),
            ));
        }
    }
    Ok((
        Status::SampledPass,
        json!({ "seed": o.seed, "instances": count, "ones_case": ones }),
    ))
}

/// Reduced incidence matrix of K4 with vertex 3 deleted.
pub fn k4_incidence() -> QuatMatrix {
    let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let rows: Vec<Vec<i64>> = (0..3)
        .map(|v| {
            edges
                .iter()
                .map(|&(a, b)| if a == v { 1 } else if b == v { -1 } else { 0 })
                .collect()
        })
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    QuatMatrix::from_ints(&refs)
}

fn qu_identity(_: &Options) -> ClaimResult {
    let cases = [
        ("u23-tu", QuatMatrix::from_ints(&[&[1, 0, 1], &[0, 1, 1]])),
        ("k4-incidence", k4_incidence()),
        ("hurwitz-u24", quaternionic_u24()),
    ];
    let mut out = serde_json::Map::new();
    let mut ok = true;
    for (name, a) in cases {
        let entry = match qu_hpp_identity(&a) {
            Ok(id) => {
                let h = basis_generating_polynomial(&id.matroid);
                let stability = match stability_falsify(&h, &SampleSet::builtin(h.vars().len())).map_err(err)? {
                    FalsifyOutcome::NoneFound { lines_checked, .. } => {
                        json!({ "kind": "sampled, necessary-only", "outcome": "none-found", "lines": lines_checked })
                    }
                    FalsifyOutcome::Witness(w) => {
                        ok = false;
                        json!({ "outcome": "witness", "witness": witness_json(&w) })
                    }
                };
                json!({
                    "bases": id.matroid.bases().len(),
                    "terms": id.terms,
                    "identity": "holds",
                    "h_m_stability": stability,
                })
            }
            Err(e) => {
                ok = false;
                json!({ "identity": e.to_string() })
            }
        };
        out.insert(name.into(), entry);
    }
    Ok((verdict(ok, Status::Verified), Value::Object(out)))
}

/// Support of a product of random 0/1 linear forms, which is M-convex.
pub fn random_mconvex(rng: &mut ChaCha8Rng) -> MConvexSet {
    let n = rng.gen_range(2..=5);
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let vars: Vec<String> = labels.iter().map(|l| format!("x{l}")).collect();
    let mut p = SparsePoly::constant(int(1)).with_vars(&vars);
    for _ in 0..rng.gen_range(1..=3) {
        let s: u32 = rng.gen_range(1..1u32 << n);
        let terms: Vec<(Vec<u32>, Rational)> = elements(s)
            .map(|i| ((0..n).map(|k| u32::from(k == i)).collect(), int(1)))
            .collect();
        p = &p * &SparsePoly::from_terms(vars.clone(), terms);
    }
    MConvexSet::new(labels, p.support()).expect("product supports are valid point sets")
}

fn bases_as_mconvex(m: &Matroid) -> Result<MConvexSet, String> {
    let n = m.size();
    MConvexSet::new(
        m.ground().to_vec(),
        m.bases().iter().map(|&b| (0..n).map(|i| b >> i & 1).collect::<Vec<u32>>()),
    )
    .map_err(err)
}

/// Catalog basis sets followed by seeded random product supports.
fn instances(o: &Options) -> Result<Vec<(String, MConvexSet)>, String> {
    let mut out = Vec::new();
    for name in CATALOG_NAMES {
        out.push((name.to_string(), bases_as_mconvex(&catalog(name).map_err(err)?)?));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
    for k in 0..o.samples_or(200) {
        out.push((format!("random-{k}"), random_mconvex(&mut rng)));
    }
    Ok(out)
}

fn mconvex_bijection(o: &Options) -> ClaimResult {
    let all = instances(o)?;
    for (name, j) in &all {
        let r: Polymatroid = rank_from_mconvex(j).map_err(err)?;
        let back = mconvex_from_rank(&r).map_err(err)?;
        if &back != j || rank_from_mconvex(&back).map_err(err)? != r {
            return Ok((Status::Falsified, json!({ "instance": name, "points": j.to_json() })));
        }
    }
    Ok((
        Status::SampledPass,
        json!({ "seed": o.seed, "catalog": CATALOG_NAMES.len(), "instances": all.len() }),
    ))
}

fn mconvrest(o: &Options) -> ClaimResult {
    let all = instances(o)?;
    let mut checked = 0usize;
    for (name, j) in &all {
        let r = rank_from_mconvex(j).map_err(err)?;
        for t in 1..=r.full_mask() {
            if let Some(slice) = j.slice(t) {
                checked += 1;
                if restrict(&r, t) != rank_from_mconvex(&slice).map_err(err)? {
                    return Ok((
                        Status::Falsified,
                        json!({ "instance": name, "t": r.labels_of(t), "points": j.to_json() }),
                    ));
                }
            }
        }
    }
    Ok((
        Status::SampledPass,
        json!({ "seed": o.seed, "instances": all.len(), "nondegenerate_restrictions": checked }),
    ))
}

fn relax_quadrangles(_: &Options) -> ClaimResult {
    let mut details = serde_json::Map::new();
    let mut ok = true;
    for (relaxed, base) in [("p1", "p8"), ("nonfano", "fano")] {
        let key = |m: &Matroid| -> BTreeSet<(Vec<String>, [Vec<String>; 4])> {
            degenerate_quadrangles(m)
                .iter()
                .map(|q| (m.labels_of(q.s), q.basis_labels(m)))
                .collect()
        };
        let (a, b) = (key(&catalog(relaxed).map_err(err)?), key(&catalog(base).map_err(err)?));
        let contained = a.is_subset(&b);
        ok &= contained;
        details.insert(
            format!("{relaxed}-in-{base}"),
            json!({ "relaxed": a.len(), "original": b.len(), "contained": contained }),
        );
    }
    Ok((verdict(ok, Status::Verified), Value::Object(details)))
}

fn hypcone(o: &Options) -> ClaimResult {
    let input = f7_specialized_polynomials().map_err(err)?;
    let fam = shift_family(&input).map_err(err)?;
    let reports = hypcone_sampled(&fam, &input.pivot, o.samples_or(100)).map_err(err)?;
    let ok = reports
        .iter()
        .all(|r| r.all_real_rooted && r.cone_members.values().all(|&b| b));
    Ok((
        verdict(ok, Status::SampledPass),
        json!({ "pivot": input.pivot, "families": reports }),
    ))
}
