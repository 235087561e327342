//! Acceptance gate: one line per criterion, nonzero exit if any fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hpp_core::analysis::{
    degenerate_quadrangles, embed_report, f_unit, fano_perturbed, in_v_space, in_w_space, no_amalgam_proof_chain,
    rayleigh_point, u_vector, v_space, verify_rayleigh_cubic, LogVector, RAYLEIGH_CUBIC,
};
use hpp_core::matroid::{catalog, nonfano_matrix, p8_matrix, Matroid, CATALOG_NAMES};
use hpp_core::poly::{
    basis_generating_polynomial, line_restriction, rayleigh_difference, sturm_real_rooted, count_roots_in,
    stability_falsify, verify_witness, FalsifyOutcome, SampleSet, SparsePoly, StabilityWitness, UnivariatePoly,
};
use hpp_core::polymatroid::{
    f7_specialized_pair, find_amalgam, flats, is_modular_pair, mconvex_from_rank, rank_from_mconvex, scale,
    sticky_sufficient, uniform_cap_two, AmalgamOutcome, MConvexSet, Polymatroid,
};
use hpp_core::quaternion::{
    cauchy_binet_check, delta_basis_property, delta_matroid, delta_multiplicativity_check, qu_hpp_identity,
    quaternionic_u24, QuatMatrix,
};
use hpp_core::rational::{int, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn c1() -> Check {
    let mut out = Vec::new();
    for (name, want) in [("p8", 9), ("p1", 10)] {
        let start = Instant::now();
        let dim = v_space(&catalog(name).map_err(err)?).dim();
        let took = start.elapsed();
        ensure(dim == want, format!("dim V({name}) = {dim}, expected {want}"))?;
        ensure(took < Duration::from_secs(10), format!("dim V({name}) took {took:?}"))?;
        out.push(format!("dim V({name})={dim}"));
    }
    Ok(out.join(", "))
}

fn c2() -> Check {
    let (_, report) = verify_rayleigh_cubic().map_err(err)?;
    ensure(report.coefficients.len() == 4, "cubic has wrong degree")?;
    ensure(report.at_unit == "-1*t^3 + 25*t^2 + 1*t", format!("at a=b=1: {}", report.at_unit))?;
    // Direct evaluation of the Rayleigh difference of F_{1,1} at t = 26.
    let delta = rayleigh_difference(&f_unit().map_err(err)?, "x0", "x1");
    let value = delta.eval(&rayleigh_point(26)).map_err(err)?;
    ensure(value == int(-650), format!("direct evaluation gives {value}"))?;
    Ok(format!("{RAYLEIGH_CUBIC}; value -650 at a=b=1, t=26"))
}

fn c3() -> Check {
    let nf = catalog("nonfano").map_err(err)?;
    let u = u_vector(&nonfano_matrix(), &nf).map_err(err)?;
    let x = nf.mask_of(&["2", "4", "6"]).map_err(err)?;
    ensure(u == LogVector::delta(nf.bases().to_vec(), x, 2, int(1)), "non-Fano u is not log2 at {2,4,6}")?;
    ensure(in_v_space(&nf, &u) && !in_w_space(&nf, &u), "non-Fano u: wrong V/W membership")?;
    let p8 = catalog("p8").map_err(err)?;
    let up = u_vector(&p8_matrix(), &p8).map_err(err)?;
    ensure(up.primes().iter().all(|&p| p == 2), "P8 minor with odd prime")?;
    let vals: BTreeSet<Rational> = up.coordinate(2).into_iter().collect();
    ensure(vals.iter().all(|v| [int(0), int(1), int(2)].contains(v)), "P8 log2 entries outside {0,1,2}")?;
    ensure(in_v_space(&p8, &up) && !in_w_space(&p8, &up), "P8 u: wrong V/W membership")?;
    Ok(format!("u(nonfano)=log2*delta_246, u(P8)/log2 values {:?}", vals.iter().map(|v| v.to_string()).collect::<Vec<_>>()))
}

fn c4() -> Check {
    let start = Instant::now();
    let (r1, r2) = f7_specialized_pair();
    let mut nodes = Vec::new();
    for m in 1..=3 {
        match find_amalgam(&scale(&r1, m), &scale(&r2, m)).map_err(err)? {
            AmalgamOutcome::Infeasible { nodes: n } => nodes.push(n),
            AmalgamOutcome::Found(_) => return Err(format!("amalgam found for m={m}")),
        }
    }
    let chain = no_amalgam_proof_chain(None).map_err(err)?;
    ensure(chain.boundary.iter().filter(|b| b.primary).count() == 7, "expected seven primary boundary values")?;
    ensure(chain.steps.last().is_some_and(|s| s.conclusion == "r({1,3,4}) >= 3m"), "chain does not end at r2({1,4})")?;
    let took = start.elapsed();
    ensure(took < Duration::from_secs(60), format!("took {took:?}"))?;
    Ok(format!("Infeasible for m=1,2,3 (nodes {nodes:?}); {}", chain.contradiction))
}

fn bases_as_mconvex(m: &Matroid) -> MConvexSet {
    let n = m.size();
    MConvexSet::new(
        m.ground().to_vec(),
        m.bases().iter().map(|&b| (0..n).map(|i| b >> i & 1).collect::<Vec<u32>>()),
    )
    .unwrap()
}

fn random_mconvex(rng: &mut ChaCha8Rng) -> MConvexSet {
    let n = rng.gen_range(2..=5);
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let vars: Vec<String> = labels.iter().map(|l| format!("x{l}")).collect();
    let mut p = SparsePoly::constant(int(1)).with_vars(&vars);
    for _ in 0..rng.gen_range(1..=3) {
        let s: u32 = rng.gen_range(1..1u32 << n);
        let terms: Vec<(Vec<u32>, Rational)> = (0..n)
            .filter(|i| s >> i & 1 == 1)
            .map(|i| ((0..n).map(|k| u32::from(k == i)).collect(), int(1)))
            .collect();
        p = &p * &SparsePoly::from_terms(vars.clone(), terms);
    }
    MConvexSet::new(labels, p.support()).unwrap()
}

fn round_trip(j: &MConvexSet, r: &Polymatroid) -> std::result::Result<(), String> {
    ensure(&rank_from_mconvex(j).map_err(err)? == r, "r_J differs")?;
    ensure(&mconvex_from_rank(r).map_err(err)? == j, "J_r differs")
}

fn c5() -> Check {
    for name in CATALOG_NAMES {
        let m = catalog(name).map_err(err)?;
        round_trip(&bases_as_mconvex(&m), &Polymatroid::of_matroid(&m)).map_err(|e| format!("{name}: {e}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for k in 0..200 {
        let j = random_mconvex(&mut rng);
        let r = rank_from_mconvex(&j).map_err(err)?;
        r.validate().map_err(err)?;
        round_trip(&j, &r).map_err(|e| format!("random #{k}: {e}"))?;
    }
    let r = rank_from_mconvex(&uniform_cap_two(3)).map_err(err)?;
    let (f1, f2) = (r.mask_of(&["1"]).map_err(err)?, r.mask_of(&["2"]).map_err(err)?);
    let fl = flats(&r);
    ensure(fl.contains(&f1) && fl.contains(&f2), "{1},{2} not flats")?;
    ensure(!is_modular_pair(&r, f1, f2).map_err(err)?, "{1},{2} reported modular")?;
    ensure(!sticky_sufficient(&r), "sticky_sufficient true")?;
    Ok(format!("{} catalog + 200 random round trips; {{1}},{{2}} non-modular", CATALOG_NAMES.len()))
}

/// Quadrangles as label sets `(S, {B1..B4})`, comparable across matroids on one ground set.
fn dq_labels(m: &Matroid) -> BTreeSet<(Vec<String>, [Vec<String>; 4])> {
    degenerate_quadrangles(m)
        .iter()
        .map(|q| (m.labels_of(q.s), q.basis_labels(m)))
        .collect()
}

fn c6() -> Check {
    let mut out = Vec::new();
    for (relaxed, base) in [("p1", "p8"), ("nonfano", "fano")] {
        let (a, b) = (dq_labels(&catalog(relaxed).map_err(err)?), dq_labels(&catalog(base).map_err(err)?));
        ensure(a.is_subset(&b), format!("DQ({relaxed}) not inside DQ({base})"))?;
        out.push(format!("DQ({relaxed})={} in DQ({base})={}", a.len(), b.len()));
    }
    Ok(out.join(", "))
}

fn c7() -> Check {
    let (p8, p1) = (catalog("p8").map_err(err)?, catalog("p1").map_err(err)?);
    let u = u_vector(&p8_matrix(), &p8).map_err(err)?;
    let rep = embed_report(&p8, &p1, &[u.coordinate(2)]).map_err(err)?;
    ensure(rep.iota_maps_v_into_v && rep.delta_x_in_v, "embedding leaves V(P1)")?;
    ensure(rep.intersection_trivial, "intersection with W(P1) is nonzero")?;
    ensure(rep.sum_dim == 2 && rep.spans_complement, "pair does not span a complement")?;
    ensure(rep.dim_v_relaxed == 10 && rep.dim_w_relaxed == 8, "unexpected dims for P1")?;
    Ok(format!("dim V(P1)={} = dim W(P1) {} + {}", rep.dim_v_relaxed, rep.dim_w_relaxed, rep.sum_dim))
}

fn c8() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let ones = QuatMatrix::from_ints(&[&[1, 1]]);
    let r = cauchy_binet_check(&ones).map_err(err)?;
    ensure(r.holds && r.lhs_squared == "4", "(1 1) case fails")?;
    for k in 0..100 {
        let m = rng.gen_range(1..=3);
        let n = rng.gen_range(m..=5);
        let a = QuatMatrix::random(m, n, -3, 3, &mut rng);
        let r = cauchy_binet_check(&a).map_err(err)?;
        ensure(r.holds, format!("Cauchy-Binet fails on instance {k}: {} vs {}", r.lhs_squared, r.rhs_squared))?;
    }
    for k in 0..100 {
        let n = rng.gen_range(1..=3);
        let a = QuatMatrix::random(n, n, -3, 3, &mut rng);
        let b = QuatMatrix::random(n, n, -3, 3, &mut rng);
        ensure(delta_multiplicativity_check(&a, &b).map_err(err)?, format!("multiplicativity fails on {k}"))?;
    }
    Ok("100 Cauchy-Binet + (1 1); 100 multiplicativity/adjoint".into())
}

fn k4_incidence() -> QuatMatrix {
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

fn c9() -> Check {
    let cases = [
        ("U(2,3) TU", QuatMatrix::from_ints(&[&[1, 0, 1], &[0, 1, 1]])),
        ("M(K4) incidence", k4_incidence()),
        ("Hurwitz U(2,4)", quaternionic_u24()),
    ];
    let mut out = Vec::new();
    for (name, a) in cases {
        let m = delta_matroid(&a).map_err(err)?;
        ensure(delta_basis_property(&a, &m).map_err(err)?, format!("{name}: δ-minors outside {{0,1}}"))?;
        let id = qu_hpp_identity(&a).map_err(|e| format!("{name}: {e}"))?;
        let h = basis_generating_polynomial(&id.matroid);
        match stability_falsify(&h, &SampleSet::builtin(h.vars().len())).map_err(err)? {
            FalsifyOutcome::NoneFound { .. } => {}
            FalsifyOutcome::Witness(w) => return Err(format!("{name}: h_M falsified by {w:?}")),
        }
        out.push(format!("{name} ({} bases)", id.matroid.bases().len()));
    }
    Ok(out.join(", "))
}

fn c10() -> Check {
    let p = fano_perturbed(int(2)).map_err(err)?;
    let e: Vec<Rational> = vec![int(1); 7];
    let v: Vec<Rational> = [1, 1, 1, 0, -1, -1, -1].into_iter().map(int).collect();
    let pinned = UnivariatePoly::from_ints(&[-4, -14, 0, 30]);
    let restriction = line_restriction(&p, &e, &v).map_err(err)?;
    ensure(restriction == pinned, format!("restriction is {}", restriction.to_text("t")))?;
    // Second route: substitute x_i -> t + v_i symbolically.
    let t = SparsePoly::var("t");
    let assignment = p
        .vars()
        .iter()
        .zip(&v)
        .map(|(x, vi)| (x.clone(), &t + &SparsePoly::constant(vi.clone())))
        .collect();
    let by_substitution = p.substitute(&assignment).trim_vars().to_univariate("t").map_err(err)?;
    ensure(by_substitution == pinned, "substitution route disagrees")?;
    // Oracle: a cubic with negative discriminant has a pair of non-real roots.
    let [d, c, b, a] = [int(-4), int(-14), int(0), int(30)];
    let disc = int(18) * &a * &b * &c * &d - int(4) * &b * &b * &b * &d + &b * &b * &c * &c
        - int(4) * &a * &c * &c * &c
        - int(27) * &a * &a * &d * &d;
    ensure(disc == int(-59520), format!("discriminant {disc}"))?;
    ensure(!sturm_real_rooted(&restriction).map_err(err)?, "Sturm count says real-rooted")?;
    ensure(count_roots_in(&restriction, None, None).map_err(err)? == 1, "expected exactly one real root")?;
    let w = StabilityWitness::NotRealRooted {
        e,
        v,
        restriction,
    };
    ensure(verify_witness(&p, &w), "witness does not re-verify")?;
    Ok("e=1, v=(1,1,1,0,-1,-1,-1): 30t^3 - 14t - 4, discriminant -59520".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("dim V(P8)=9, dim V(P1)=10", c1),
        ("Rayleigh cubic identity", c2),
        ("u-vectors of non-Fano and P8", c3),
        ("no amalgam for the F7 specialisations", c4),
        ("M-convex/polymatroid bijection and uniform flats", c5),
        ("degenerate quadrangles survive relaxation", c6),
        ("complement of W(P1) in V(P1)", c7),
        ("quaternionic Cauchy-Binet and δ multiplicativity", c8),
        ("QU identity and sampled stability of h_M", c9),
        ("h_F7 + 2 x2x4x6 is not stable", c10),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS ({secs:.2}s) {title}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL ({secs:.2}s) {title}: {detail}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
