//! The reference catalog and the per-criterion checks run by `batch --catalog paper`.

use grouprings_core::algebra::AlgElement;
use grouprings_core::nd::g223::run_samples;
use grouprings_core::nd::witness::{thersy_verify, witness_gpmn};
use grouprings_core::nd::{dk_check, nd_report, sn_check, ssn_check, verify_nd_witness, NdStatus};
use grouprings_core::sl2z::{
    congruence_level, d8_embedding, d8_images, triangle_quotient_is_finite, unipotent_normal_form, CongruenceLevel,
    IntMat2, RatMat2,
};
use grouprings_core::structure::{
    closure, core, cyclic_subgroup_class_count, derived_of, derived_subgroup, is_supersolvable, normal_subgroups,
    LatticeGuard,
};
use grouprings_core::wedderburn::{epsilon_normal, kernel_of_idempotent, wedderburn_report, ComponentClass};
use grouprings_core::{algebra::right_mult_rank, CayleyGroup};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::expr::parse;
use crate::report::{ARTIFACT_VERSION, SCHEMA_VERSION};

/// Named groups exercised by the invariant and SN suites.
pub const REFERENCE_CATALOG: &[&str] = &[
    "C(2)", "C(6)", "C(4) x C(2)", "C(8)", "S(3)", "D(8)", "Q(8)", "D(10)", "MC(3,4,2)", "A(4)", "D(12)",
    "Q(16)", "D(16)", "MC(8,2,3)", "MC(8,2,5)", "G(2,2,2)", "MC(5,4,2)", "MC(7,3,2)", "S(4)", "SL2(3)",
    "MC(3,8,2)", "D(8) x C(2)", "Q(8) x C(2)", "Q(8) x C(3)", "S(3) x C(3)", "S(3) x S(3)", "D(10) x C(5)",
    "SG32_11", "SG32_12", "G(2,2,3)", "G(2,3,2)", "BJ4", "BJ5", "BJ8", "MC(7,9,2)", "BJ9", "SG64_135",
    "Q8xQ8", "A(5)",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionResult {
    pub id: u32,
    pub title: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchReport {
    pub schema_version: u32,
    pub artifact_version: String,
    pub catalog: String,
    pub timestamp: u64,
    pub passed: bool,
    pub criteria: Vec<CriterionResult>,
}

struct Checks(Vec<Check>);

impl Checks {
    fn add(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.0.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    fn try_add(&mut self, name: &str, f: impl FnOnce() -> anyhow::Result<(bool, String)>) {
        match f() {
            Ok((p, d)) => self.add(name, p, d),
            Err(e) => self.add(name, false, format!("error: {e}")),
        }
    }
}

fn group(src: &str) -> anyhow::Result<CayleyGroup> {
    Ok(parse(src)?.build()?)
}

fn guard() -> LatticeGuard {
    LatticeGuard::default()
}

fn census(src: &str) -> anyhow::Result<(Vec<usize>, Vec<ComponentClass>, usize)> {
    let g = group(src)?;
    let r = wedderburn_report(&g, guard())?;
    let mut dims: Vec<usize> = r.components.iter().map(|c| c.dim).collect();
    dims.sort_unstable();
    Ok((dims, r.components.iter().map(|c| c.class.clone()).collect(), r.matrix_count_min))
}

fn criterion_1() -> Vec<Check> {
    let mut c = Checks(Vec::new());
    let count = |cl: &[ComponentClass], f: fn(&ComponentClass) -> bool| cl.iter().filter(|x| f(x)).count();
    let is_matrix: fn(&ComponentClass) -> bool = ComponentClass::is_matrix;
    let is_quat: fn(&ComponentClass) -> bool = |x| matches!(x, ComponentClass::DivisionQuaternionOverQ { .. });
    for (src, dims, pred, label) in [
        ("D(8)", vec![1, 1, 1, 1, 4], is_matrix, "matrix"),
        ("Q(8)", vec![1, 1, 1, 1, 4], is_quat, "quaternion division"),
        ("A(4)", vec![1, 2, 9], is_matrix, "matrix"),
    ] {
        c.try_add(src, || {
            let (d, cl, _) = census(src)?;
            let n = count(&cl, pred);
            Ok((d == dims && n == 1, format!("dims {d:?}, {n} {label} component(s)")))
        });
    }
    c.try_add("SL2(3)", || {
        let (_, _, min) = census("SL2(3)")?;
        Ok((min >= 2, format!("matrix_count_min {min}")))
    });
    c.0
}

fn criterion_2() -> Vec<Check> {
    let mut c = Checks(Vec::new());
    c.try_add("G(2,2,3) census", || {
        let g = group("G(2,2,3)")?;
        let r = wedderburn_report(&g, guard())?;
        let a = g.generator("a").expect("a");
        let b = g.generator("b").expect("b");
        let b2 = closure(&g, &[g.pow(b, 2)]);
        let sum: usize = r.components.iter().map(|x| x.dim).sum();
        let m2q = r.components.iter().any(|x| x.dim == 4 && x.class.is_matrix() && x.kernel == b2);
        let dim8: Vec<usize> = r.components.iter().filter(|x| x.dim == 8).map(|x| x.kernel.order()).collect();
        let dim8_trivial = !dim8.is_empty() && dim8.iter().all(|&k| k == 1);
        let detail = format!(
            "{} components (expected 9), dims sum {sum}, <b^2> kernel on M2(Q): {m2q}, dim-8 kernel orders {dim8:?} \
             (kernel <a^2 b^4> of order {}), displayed decomposition omits one field component",
            r.total_components,
            closure(&g, &[g.mul(g.pow(a, 2), g.pow(b, 4))]).order(),
        );
        Ok((r.total_components == 9 && sum == 32 && m2q && dim8_trivial, detail))
    });
    c.0
}

fn criterion_3() -> Vec<Check> {
    let mut c = Checks(Vec::new());
    c.try_add("Q8xQ8 SN and not SSN", || {
        let g = group("Q8xQ8")?;
        let (sn, ssn) = (sn_check(&g, guard())?.direct, ssn_check(&g, guard())?);
        Ok((sn && !ssn, format!("sn {sn}, ssn {ssn}")))
    });
    c.try_add("S4 not SN", || {
        let sn = sn_check(&group("S(4)")?, guard())?.direct;
        Ok((!sn, format!("sn {sn}")))
    });
    let expected = [
        ("Q(8)", true),
        ("D(8)", true),
        ("A(4)", true),
        ("BJ4", true),
        ("BJ5", true),
        ("BJ8", true),
        ("BJ9", true),
        ("SG64_135", true),
        ("S(4)", false),
        ("SL2(3)", false),
        ("D(10) x C(5)", false),
        ("SG32_11", false),
    ];
    let results: Vec<Check> = expected
        .par_iter()
        .map(|&(src, want)| {
            let mut one = Checks(Vec::new());
            one.try_add(&format!("DK {src}"), || {
                let dk = dk_check(&group(src)?)?.holds;
                Ok((dk == want, format!("dk {dk}")))
            });
            one.0.remove(0)
        })
        .collect();
    c.0.extend(results);
    c.0
}

fn criterion_4() -> Vec<Check> {
    let entries: Vec<&str> = REFERENCE_CATALOG
        .iter()
        .copied()
        .filter(|s| parse(s).map(|e| e.order() <= 64).unwrap_or(false))
        .collect();
    let mut c = Checks(Vec::new());
    c.add("catalog size", entries.len() >= 25, format!("{} groups of order <= 64", entries.len()));
    let per: Vec<Check> = entries
        .par_iter()
        .map(|src| {
            let mut one = Checks(Vec::new());
            one.try_add(src, || {
                let r = sn_check(&group(src)?, guard())?;
                Ok((r.consistent(), format!("direct {}, hats {}, epsilons {}", r.direct, r.via_hats, r.via_epsilons)))
            });
            one.0.remove(0)
        })
        .collect();
    c.0.extend(per);
    c.0
}

fn criterion_5(seed: u64) -> Vec<Check> {
    let mut c = Checks(Vec::new());
    for (p, m, n) in [(2, 3, 2), (2, 2, 4), (3, 2, 2), (5, 2, 2)] {
        c.try_add(&format!("G({p},{m},{n})"), || {
            let (g, w) = witness_gpmn(p, m, n)?;
            let accepted = thersy_verify(&w.triple, &g);
            let v = nd_report(&g, guard());
            let reverified = v.witness.as_ref().is_some_and(|w| verify_nd_witness(&g, w));
            Ok((
                accepted && v.status == NdStatus::Fails && reverified,
                format!("triple accepted {accepted} ({:?}), nd {:?}, witness re-verified {reverified}", w.source, v.status),
            ))
        });
    }
    c.try_add("D(8) Holds", || {
        let v = nd_report(&group("D(8)")?, guard());
        Ok((v.status == NdStatus::Holds, format!("{:?} ({:?})", v.status, v.basis)))
    });
    c.try_add("G(2,2,3) Holds with congruence samples", || {
        let v = nd_report(&group("G(2,2,3)")?, guard());
        let s = run_samples(240, seed)?;
        Ok((
            v.status == NdStatus::Holds && s.samples >= 200 && s.all_pass(),
            format!("{:?} ({:?}); {}/{} samples pass, {} nonzero, seed {}", v.status, v.basis, s.passed, s.samples, s.nonzero, s.seed),
        ))
    });
    c.0
}

fn invariants(src: &str) -> anyhow::Result<(bool, String)> {
    let g = group(src)?;
    let mut bad: Vec<&str> = Vec::new();
    let eps: Vec<AlgElement> =
        normal_subgroups(&g).iter().map(|n| epsilon_normal(&g, n)).collect::<Result<Vec<_>, _>>()?;
    let eps: Vec<AlgElement> = eps.into_iter().filter(|e| !e.is_zero()).collect();
    let sum = eps.iter().fold(AlgElement::zero(g.order()), |a, e| a.add(e));
    let orth = eps.iter().enumerate().all(|(i, e)| eps[i + 1..].iter().all(|f| e.mul(f, &g).is_zero()));
    if sum != AlgElement::one(g.order()) || !orth {
        bad.push("epsilon family");
    }
    let r = wedderburn_report(&g, guard())?;
    let metabelian = derived_of(&g, &derived_subgroup(&g)).is_trivial();
    if (g.is_abelian() || metabelian || is_supersolvable(&g)) && !r.covered {
        bad.push("coverage");
    }
    for comp in &r.components {
        if comp.dim != comp.dim_formula || comp.dim != right_mult_rank(&comp.ssp.e, &g) {
            bad.push("dimension");
        }
        if comp.kernel != core(&g, &comp.ssp.k) || comp.kernel != kernel_of_idempotent(&g, &comp.ssp.e) {
            bad.push("kernel");
        }
    }
    if r.covered && r.components.len() != cyclic_subgroup_class_count(&g) {
        bad.push("component count");
    }
    bad.dedup();
    let detail = format!("{} components, covered {}", r.total_components, r.covered);
    Ok((bad.is_empty(), if bad.is_empty() { detail } else { format!("{detail}; failed: {}", bad.join(", ")) }))
}

fn criterion_6() -> Vec<Check> {
    REFERENCE_CATALOG
        .par_iter()
        .map(|src| {
            let mut one = Checks(Vec::new());
            one.try_add(src, || invariants(src));
            one.0.remove(0)
        })
        .collect()
}

fn random_word(rng: &mut ChaCha8Rng) -> IntMat2 {
    let gens = [IntMat2::new(0, -1, 1, 0), IntMat2::new(1, 1, 0, 1), IntMat2::new(1, -1, 0, 1)];
    let len = rng.gen_range(0..12);
    (0..len).fold(IntMat2::identity(), |w, _| w.mul(&gens[rng.gen_range(0..3)]))
}

fn criterion_7(seed: u64) -> Vec<Check> {
    let mut c = Checks(Vec::new());
    c.try_add("normal form of [[5,-4],[4,-3]]", || {
        let (s, m) = unipotent_normal_form(&IntMat2::new(5, -4, 4, -3))?;
        Ok((s == IntMat2::new(1, -2, 1, -1) && m == BigInt::from(-4), format!("S = {s}, m = {m}")))
    });
    c.try_add("triangle rule", || {
        let ok = (1..=12).all(|n| triangle_quotient_is_finite(n) == Ok(n <= 5));
        Ok((ok, "finite exactly for n <= 5 on 1..=12".into()))
    });
    c.try_add("level of phi(u e)", || {
        let g = group("D(8)")?;
        let (a, b) = (g.generator("a").expect("a"), g.generator("b").expect("b"));
        let el = |x: usize| AlgElement::basis(8, x);
        let one = AlgElement::one(8);
        let ab = g.mul(a, b);
        let x = one.add(&el(b)).mul(&el(ab), &g).mul(&one.sub(&el(b)), &g);
        let ue = one.add(&x.scale_int(2));
        let m = d8_embedding(&g, &ue)?.to_int()?;
        let level = congruence_level(&m)?;
        Ok((level == CongruenceLevel::Finite(4.into()), format!("phi(ue) = {m}, level {level}")))
    });
    c.try_add("d8 embedding is multiplicative", || {
        let g = group("D(8)")?;
        let images = d8_images(&g)?;
        let mut ok = 0;
        for x in g.elements() {
            for y in g.elements() {
                let lhs = d8_embedding(&g, &AlgElement::basis(8, g.mul(x, y)))?;
                let rhs = RatMat2::from(&images[x]).mul(&RatMat2::from(&images[y]));
                ok += usize::from(lhs == rhs);
            }
        }
        Ok((ok == 64, format!("{ok}/64 products")))
    });
    c.try_add("randomized unipotent normal forms", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut ok = 0;
        for _ in 0..500 {
            let w = random_word(&mut rng);
            let k: i64 = rng.gen_range(-50..=50);
            let u = w.mul(&IntMat2::upper(k.into())).mul(&w.inverse()?);
            let (s, m) = unipotent_normal_form(&u)?;
            let round = s.mul(&IntMat2::upper(m.clone())).mul(&s.inverse()?);
            ok += usize::from(round == u && s.det() == BigInt::from(1) && m.magnitude() == BigInt::from(k).magnitude());
        }
        Ok((ok == 500, format!("{ok}/500 round trips, seed {seed}")))
    });
    c.0
}

fn criterion_8() -> Vec<Check> {
    let mut c = Checks(Vec::new());
    c.try_add("MC(17,8,16) Undetermined", || {
        let v = nd_report(&group("MC(17,8,16)")?, guard());
        Ok((v.status == NdStatus::Undetermined, format!("{:?}", v.status)))
    });
    c.add(
        "out of scope",
        true,
        "classification theorems, infiniteness of q(G) and ND for SSN groups of unfaithful type are not computed",
    );
    c.0
}

const TITLES: [&str; 8] = [
    "Wedderburn census",
    "G(2,2,3) census",
    "property verdicts",
    "SN equivalence",
    "ND witnesses",
    "idempotent invariants",
    "SL2(Z) toolkit",
    "undetermined cases",
];

/// Runs every criterion; criteria run concurrently, each one sequentially except where noted.
pub fn run_reference_catalog(seed: u64) -> BatchReport {
    let criteria: Vec<CriterionResult> = (1..=8u32)
        .into_par_iter()
        .map(|id| {
            let checks = match id {
                1 => criterion_1(),
                2 => criterion_2(),
                3 => criterion_3(),
                4 => criterion_4(),
                5 => criterion_5(seed),
                6 => criterion_6(),
                7 => criterion_7(seed),
                _ => criterion_8(),
            };
            CriterionResult {
                id,
                title: TITLES[id as usize - 1].into(),
                passed: checks.iter().all(|c| c.passed),
                checks,
            }
        })
        .collect();
    BatchReport {
        schema_version: SCHEMA_VERSION,
        artifact_version: ARTIFACT_VERSION.into(),
        catalog: "paper".into(),
        timestamp: crate::report::timestamp(),
        passed: criteria.iter().all(|c| c.passed),
        criteria,
    }
}

