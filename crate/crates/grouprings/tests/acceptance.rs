//! Acceptance suite: one line per criterion, checked against pinned expectations.
//!
//! Every criterion carries an expected outcome and a time budget. The run fails when an outcome
//! differs from its pinned expectation or a budget is exceeded.

use std::process::Command;
use std::time::{Duration, Instant};

use grouprings_core::algebra::{right_mult_rank, AlgElement};
use grouprings_core::group::families::*;
use grouprings_core::nd::g223::run_samples;
use grouprings_core::nd::witness::{thersy_verify, witness_gpmn};
use grouprings_core::nd::{dk_check, nd_report, sn_check, ssn_check, verify_nd_witness, NdStatus};
use grouprings_core::sl2z::{
    congruence_level, d8_embedding, d8_images, in_v, triangle_quotient_is_finite, unipotent_normal_form,
    CongruenceLevel, IntMat2, RatMat2,
};
use grouprings_core::structure::{
    closure, core, cyclic_subgroup_class_count, derived_of, derived_subgroup, is_supersolvable, normal_subgroups,
    LatticeGuard,
};
use grouprings_core::wedderburn::{epsilon_normal, kernel_of_idempotent, wedderburn_report, ComponentClass};
use grouprings_core::CayleyGroup;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 7;

struct Outcome {
    passed: bool,
    detail: String,
}

struct Criterion {
    id: u32,
    title: &'static str,
    expect_pass: bool,
    budget: Duration,
    run: fn() -> Outcome,
}

fn guard() -> LatticeGuard {
    LatticeGuard::default()
}

fn dp(a: CayleyGroup, b: CayleyGroup) -> CayleyGroup {
    direct_product(&a, &b).unwrap()
}

fn catalog() -> Vec<(&'static str, CayleyGroup)> {
    vec![
        ("C2", cyclic(2).unwrap()),
        ("C6", cyclic(6).unwrap()),
        ("C4xC2", dp(cyclic(4).unwrap(), cyclic(2).unwrap())),
        ("C8", cyclic(8).unwrap()),
        ("S3", symmetric(3).unwrap()),
        ("D8", dihedral(8).unwrap()),
        ("Q8", generalized_quaternion(8).unwrap()),
        ("D10", dihedral(10).unwrap()),
        ("MC(3,4,2)", metacyclic(3, 4, 2).unwrap()),
        ("A4", alternating(4).unwrap()),
        ("D12", dihedral(12).unwrap()),
        ("Q16", generalized_quaternion(16).unwrap()),
        ("D16", dihedral(16).unwrap()),
        ("MC(8,2,3)", metacyclic(8, 2, 3).unwrap()),
        ("MC(8,2,5)", metacyclic(8, 2, 5).unwrap()),
        ("G(2,2,2)", gpmn(2, 2, 2).unwrap()),
        ("MC(5,4,2)", metacyclic(5, 4, 2).unwrap()),
        ("MC(7,3,2)", metacyclic(7, 3, 2).unwrap()),
        ("S4", symmetric(4).unwrap()),
        ("SL(2,3)", sl2(3).unwrap()),
        ("MC(3,8,2)", metacyclic(3, 8, 2).unwrap()),
        ("D8xC2", dp(dihedral(8).unwrap(), cyclic(2).unwrap())),
        ("Q8xC2", dp(generalized_quaternion(8).unwrap(), cyclic(2).unwrap())),
        ("Q8xC3", dp(generalized_quaternion(8).unwrap(), cyclic(3).unwrap())),
        ("S3xS3", dp(symmetric(3).unwrap(), symmetric(3).unwrap())),
        ("D10xC5", dp(dihedral(10).unwrap(), cyclic(5).unwrap())),
        ("SG32_11", sg32_11().unwrap()),
        ("SG32_12", sg32_12().unwrap()),
        ("G(2,2,3)", gpmn(2, 2, 3).unwrap()),
        ("G(2,3,2)", gpmn(2, 3, 2).unwrap()),
        ("BJ4", bj4().unwrap()),
        ("BJ5", bj5().unwrap()),
        ("BJ8", bj8().unwrap()),
        ("MC(7,9,2)", metacyclic(7, 9, 2).unwrap()),
        ("BJ9", bj9().unwrap()),
        ("SG64_135", sg64_135().unwrap()),
        ("Q8xQ8", q8xq8().unwrap()),
        ("A5", alternating(5).unwrap()),
    ]
}

fn census(g: &CayleyGroup) -> (Vec<usize>, Vec<ComponentClass>, usize) {
    let r = wedderburn_report(g, guard()).unwrap();
    let mut dims: Vec<usize> = r.components.iter().map(|c| c.dim).collect();
    dims.sort_unstable();
    (dims, r.components.iter().map(|c| c.class.clone()).collect(), r.matrix_count_min)
}

fn wedderburn_census() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    let mut timed = |label: &str, f: &dyn Fn() -> bool| {
        let t = Instant::now();
        let pass = f();
        let fast = t.elapsed() < Duration::from_secs(1);
        ok &= pass && fast;
        notes.push(format!("{label} {}", if pass && fast { "ok" } else { "bad" }));
    };
    timed("D8", &|| {
        let (d, cl, _) = census(&dihedral(8).unwrap());
        d == [1, 1, 1, 1, 4] && cl.iter().filter(|c| c.is_matrix()).count() == 1
    });
    timed("Q8", &|| {
        let (d, cl, _) = census(&generalized_quaternion(8).unwrap());
        d == [1, 1, 1, 1, 4]
            && cl.iter().filter(|c| matches!(c, ComponentClass::DivisionQuaternionOverQ { .. })).count() == 1
            && !cl.iter().any(ComponentClass::is_matrix)
    });
    timed("A4", &|| {
        let (d, cl, _) = census(&alternating(4).unwrap());
        d == [1, 2, 9] && cl.iter().filter(|c| c.is_matrix()).count() == 1
    });
    timed("SL(2,3)", &|| census(&sl2(3).unwrap()).2 >= 2);
    Outcome { passed: ok, detail: notes.join(", ") }
}

fn g223_census() -> Outcome {
    let g = gpmn(2, 2, 3).unwrap();
    let r = wedderburn_report(&g, guard()).unwrap();
    let b = g.generator("b").unwrap();
    let b2 = closure(&g, &[g.pow(b, 2)]);
    let sum: usize = r.components.iter().map(|c| c.dim).sum();
    let m2q = r.components.iter().any(|c| c.dim == 4 && c.class.is_matrix() && c.kernel == b2);
    let dim8: Vec<usize> = r.components.iter().filter(|c| c.dim == 8).map(|c| c.kernel.order()).collect();
    let as_stated = r.total_components == 9 && sum == 32 && m2q && dim8 == [1];
    // The computed census itself is pinned, so the stated failure stays explained.
    let computed = r.total_components == 11 && r.covered && sum == 32 && m2q && dim8 == [2];
    Outcome {
        passed: as_stated,
        detail: format!(
            "{} components, dims sum {sum}, <b^2> kernel present {m2q}, dim-8 kernel orders {dim8:?}; \
             computed census {}",
            r.total_components,
            if computed { "matches 11 components with a dim-8 kernel of order 2" } else { "CHANGED" }
        ),
    }
}

fn property_verdicts() -> Outcome {
    let q8q8 = q8xq8().unwrap();
    let sn_q = sn_check(&q8q8, guard()).unwrap().direct;
    let ssn_q = ssn_check(&q8q8, guard()).unwrap();
    let sn_s4 = sn_check(&symmetric(4).unwrap(), guard()).unwrap().direct;
    let dk_true = [
        generalized_quaternion(8).unwrap(),
        dihedral(8).unwrap(),
        alternating(4).unwrap(),
        bj4().unwrap(),
        bj5().unwrap(),
        bj8().unwrap(),
        bj9().unwrap(),
        sg64_135().unwrap(),
    ];
    let dk_false = [
        symmetric(4).unwrap(),
        sl2(3).unwrap(),
        dp(dihedral(10).unwrap(), cyclic(5).unwrap()),
        sg32_11().unwrap(),
    ];
    let t = dk_true.iter().filter(|g| dk_check(g).unwrap().holds).count();
    let f = dk_false.iter().filter(|g| !dk_check(g).unwrap().holds).count();
    Outcome {
        passed: sn_q && !ssn_q && !sn_s4 && t == 8 && f == 4,
        detail: format!("SN(Q8xQ8) {sn_q}, SSN(Q8xQ8) {ssn_q}, SN(S4) {sn_s4}, DK true {t}/8, DK false {f}/4"),
    }
}

fn sn_equivalence() -> Outcome {
    let groups: Vec<_> = catalog().into_iter().filter(|(_, g)| g.order() <= 64).collect();
    let bad: Vec<&str> =
        groups.iter().filter(|(_, g)| !sn_check(g, guard()).unwrap().consistent()).map(|(n, _)| *n).collect();
    Outcome {
        passed: groups.len() >= 25 && bad.is_empty(),
        detail: format!("{} groups of order <= 64, disagreements {bad:?}", groups.len()),
    }
}

fn nd_witnesses() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for (p, m, n, budget) in [(2, 3, 2, 30), (2, 2, 4, 30), (3, 2, 2, 30), (5, 2, 2, 120)] {
        let t = Instant::now();
        let (g, w) = witness_gpmn(p, m, n).unwrap();
        let v = nd_report(&g, guard());
        let pass = thersy_verify(&w.triple, &g)
            && v.status == NdStatus::Fails
            && v.witness.as_ref().is_some_and(|w| verify_nd_witness(&g, w));
        let fast = t.elapsed() < Duration::from_secs(budget);
        ok &= pass && fast;
        notes.push(format!("G({p},{m},{n}) {} in {:.1}s", if pass { "Fails" } else { "bad" }, t.elapsed().as_secs_f64()));
    }
    let d8 = nd_report(&dihedral(8).unwrap(), guard()).status == NdStatus::Holds;
    let g223 = nd_report(&gpmn(2, 2, 3).unwrap(), guard()).status == NdStatus::Holds;
    let s = run_samples(240, SEED).unwrap();
    ok &= d8 && g223 && s.samples >= 200 && s.nonzero >= 200 && s.all_pass();
    notes.push(format!("D8 Holds {d8}, G(2,2,3) Holds {g223} with {}/{} samples passing", s.passed, s.samples));
    Outcome { passed: ok, detail: notes.join(", ") }
}

fn invariant_failures(g: &CayleyGroup) -> Vec<&'static str> {
    let mut bad = Vec::new();
    let eps: Vec<AlgElement> =
        normal_subgroups(g).iter().map(|n| epsilon_normal(g, n).unwrap()).filter(|e| !e.is_zero()).collect();
    let sum = eps.iter().fold(AlgElement::zero(g.order()), |a, e| a.add(e));
    if sum != AlgElement::one(g.order())
        || !eps.iter().enumerate().all(|(i, e)| eps[i + 1..].iter().all(|f| e.mul(f, g).is_zero()))
    {
        bad.push("epsilons");
    }
    let r = wedderburn_report(g, guard()).unwrap();
    let metabelian = derived_of(g, &derived_subgroup(g)).is_trivial();
    if (g.is_abelian() || metabelian || is_supersolvable(g)) && !r.covered {
        bad.push("coverage");
    }
    for c in &r.components {
        if c.dim != c.dim_formula || c.dim != right_mult_rank(&c.ssp.e, g) {
            bad.push("dimension");
        }
        if c.kernel != core(g, &c.ssp.k) || c.kernel != kernel_of_idempotent(g, &c.ssp.e) {
            bad.push("kernel");
        }
    }
    if r.covered && r.components.len() != cyclic_subgroup_class_count(g) {
        bad.push("count");
    }
    bad
}

fn idempotent_invariants() -> Outcome {
    let cat = catalog();
    let bad: Vec<String> = cat
        .iter()
        .filter_map(|(n, g)| {
            let f = invariant_failures(g);
            (!f.is_empty()).then(|| format!("{n}: {f:?}"))
        })
        .collect();
    Outcome { passed: bad.is_empty(), detail: format!("{} groups, failures {bad:?}", cat.len()) }
}

fn sl2z_toolkit() -> Outcome {
    let (s, m) = unipotent_normal_form(&IntMat2::new(5, -4, 4, -3)).unwrap();
    let nf = s == IntMat2::new(1, -2, 1, -1) && m == BigInt::from(-4);
    let tri = (1..=20).all(|n| triangle_quotient_is_finite(n).unwrap() == (n <= 5));

    let g = dihedral(8).unwrap();
    let (a, b) = (g.generator("a").unwrap(), g.generator("b").unwrap());
    let el = |x: usize| AlgElement::basis(8, x);
    let one = AlgElement::one(8);
    let core_term = one.add(&el(b)).mul(&el(g.mul(a, b)), &g).mul(&one.sub(&el(b)), &g);
    let ue = one.add(&core_term.scale_int(2));
    let phi = d8_embedding(&g, &ue).unwrap().to_int().unwrap();
    let level = congruence_level(&phi).unwrap() == CongruenceLevel::Finite(4.into())
        && in_v(&phi, &BigInt::from(4)).unwrap()
        && phi == IntMat2::new(5, -4, 4, -3);

    let images = d8_images(&g).unwrap();
    let mut products = 0;
    for x in g.elements() {
        for y in g.elements() {
            let lhs = d8_embedding(&g, &el(g.mul(x, y))).unwrap();
            products += usize::from(lhs == RatMat2::from(&images[x]).mul(&RatMat2::from(&images[y])));
        }
    }

    let gens = [IntMat2::new(0, -1, 1, 0), IntMat2::new(1, 1, 0, 1), IntMat2::new(1, -1, 0, 1)];
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut trips = 0;
    for _ in 0..500 {
        let w = (0..rng.gen_range(0..12)).fold(IntMat2::identity(), |w, _| w.mul(&gens[rng.gen_range(0..3)]));
        let k: i64 = rng.gen_range(-50..=50);
        let u = w.mul(&IntMat2::upper(k.into())).mul(&w.inverse().unwrap());
        let (s, m) = unipotent_normal_form(&u).unwrap();
        let back = s.mul(&IntMat2::upper(m.clone())).mul(&s.inverse().unwrap());
        trips += usize::from(back == u && s.det() == BigInt::from(1) && m.magnitude() == BigInt::from(k).magnitude());
    }
    Outcome {
        passed: nf && tri && level && products == 64 && trips == 500,
        detail: format!(
            "normal form S = {s}, m = {m}; triangle rule {tri}; phi(ue) = {phi} with level 4 {level}; \
             {products}/64 products; {trips}/500 round trips"
        ),
    }
}

fn undetermined_cases() -> Outcome {
    let g = metacyclic(17, 8, 16).unwrap();
    let status = nd_report(&g, guard()).status;
    let cli = Command::new(env!("CARGO_BIN_EXE_grouprings"))
        .args(["nd", "MC(17, 8, 16)", "--expect-decided", "--no-cache"])
        .output()
        .unwrap();
    Outcome {
        passed: status == NdStatus::Undetermined && cli.status.code() == Some(2),
        detail: format!(
            "MC(17,8,16) {status:?}, CLI exit {:?}; classification theorems, infiniteness of q(G) and ND for \
             SSN groups of unfaithful type are out of computational scope",
            cli.status.code()
        ),
    }
}

fn batch_agrees(results: &[(u32, bool)]) -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_grouprings"))
        .args(["batch", "--catalog", "paper", "--no-cache"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let batch: Vec<(u32, bool)> = v["criteria"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| (c["id"].as_u64().unwrap() as u32, c["passed"].as_bool().unwrap()))
        .collect();
    let all = results.iter().all(|r| r.1);
    let code_ok = out.status.code() == Some(if all { 0 } else { 2 });
    Outcome {
        passed: batch == results && code_ok,
        detail: format!("batch verdicts {batch:?}, exit {:?}", out.status.code()),
    }
}

fn main() {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { id: 1, title: "Wedderburn census", expect_pass: true, budget: secs(4), run: wedderburn_census },
        // Unattainable as stated: the census has 11 components and the dim-8 kernel has order 2.
        Criterion { id: 2, title: "G(2,2,3) census", expect_pass: false, budget: secs(5), run: g223_census },
        Criterion { id: 3, title: "property verdicts", expect_pass: true, budget: secs(180), run: property_verdicts },
        Criterion { id: 4, title: "SN equivalence", expect_pass: true, budget: secs(300), run: sn_equivalence },
        Criterion { id: 5, title: "ND witnesses", expect_pass: true, budget: secs(240), run: nd_witnesses },
        Criterion { id: 6, title: "idempotent invariants", expect_pass: true, budget: secs(600), run: idempotent_invariants },
        Criterion { id: 7, title: "SL2(Z) toolkit", expect_pass: true, budget: secs(10), run: sl2z_toolkit },
        Criterion { id: 8, title: "undetermined cases", expect_pass: true, budget: secs(60), run: undetermined_cases },
    ];
    let mut unexpected = 0;
    let mut results = Vec::new();
    for c in &criteria {
        let t = Instant::now();
        let o = (c.run)();
        let elapsed = t.elapsed();
        let in_budget = elapsed <= c.budget;
        let as_expected = o.passed == c.expect_pass && in_budget;
        unexpected += usize::from(!as_expected);
        results.push((c.id, o.passed));
        println!(
            "criterion {} {}: {} in {:.2}s (budget {}s{}){} | {}",
            c.id,
            c.title,
            if o.passed { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            c.budget.as_secs(),
            if in_budget { "" } else { ", EXCEEDED" },
            if c.expect_pass { "" } else { " [expected FAIL: unattainable as stated]" },
            o.detail
        );
    }
    let b = batch_agrees(&results);
    unexpected += usize::from(!b.passed);
    println!("batch runner agreement: {} | {}", if b.passed { "PASS" } else { "FAIL" }, b.detail);
    let passed = results.iter().filter(|r| r.1).count();
    println!("acceptance: {passed}/{} criteria pass, {unexpected} unexpected outcome(s)", results.len());
    if unexpected > 0 {
        std::process::exit(1);
    }
}
