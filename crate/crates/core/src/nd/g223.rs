//! Congruence checks for integral nilpotents of `Z G(2,2,3)` and a reproducible sampler.

use alloc::vec::Vec;

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgElement, Rational};
use crate::group::families::gpmn;
use crate::group::{CayleyGroup, GroupError};
use crate::nd::bicyclic::bicyclics_on;
use crate::structure::{all_subgroups, center, closure, LatticeGuard};
use crate::wedderburn::e_of_pair;

/// Outcome of the individual identities for one nilpotent element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct G223Report {
    /// `alpha(g) = -alpha(g a^2)` for all `g`.
    pub sign_rule: bool,
    /// `alpha(g) + alpha(g b^4) = alpha(g b^2) + alpha(g b^6)` for all `g`.
    pub b_balance: bool,
    /// `alpha(1) = alpha(b^2) = alpha(b^4) = alpha(b^6) = 0`.
    pub vanishing: bool,
    /// `alpha(g) + alpha(g b^4)` is even for all `g`.
    pub parity: bool,
    /// `n e` is integral for the `M_2(Q)` component.
    pub m2q_integral: bool,
    /// `n e` is integral for the `M_2(Q(i))` component.
    pub m2qi_integral: bool,
    /// The coefficients of `n e` for `M_2(Q)` are `(alpha(g) + alpha(g b^4)) / 2`.
    pub m2q_closed_form: bool,
    /// The coefficients of `n e` for `M_2(Q(i))` are `(alpha(g) - alpha(g b^4)) / 2`.
    pub m2qi_closed_form: bool,
}

impl G223Report {
    pub fn all_pass(&self) -> bool {
        self.sign_rule
            && self.b_balance
            && self.vanishing
            && self.parity
            && self.m2q_integral
            && self.m2qi_integral
            && self.m2q_closed_form
            && self.m2qi_closed_form
    }
}

/// `G(2,2,3)` with the idempotents of its two matrix components.
#[derive(Debug, Clone)]
pub struct G223 {
    group: CayleyGroup,
    a2: usize,
    b2: usize,
    b4: usize,
    b6: usize,
    e_m2q: AlgElement,
    e_m2qi: AlgElement,
}

impl G223 {
    pub fn new() -> Result<Self, GroupError> {
        let g = gpmn(2, 2, 3)?;
        let a = g.generator("a").expect("generator a");
        let b = g.generator("b").expect("generator b");
        let (a2, b2, b4, b6) = (g.pow(a, 2), g.pow(b, 2), g.pow(b, 4), g.pow(b, 6));
        let e_m2q = e_of_pair(&g, &closure(&g, &[a, b2]), &closure(&g, &[b2]))?;
        let e_m2qi = e_of_pair(&g, &closure(&g, &[a2, b]), &closure(&g, &[g.mul(a2, b4)]))?;
        Ok(G223 { group: g, a2, b2, b4, b6, e_m2q, e_m2qi })
    }

    pub fn group(&self) -> &CayleyGroup {
        &self.group
    }

    /// Idempotent of the `M_2(Q)` component, kernel `<b^2>`.
    pub fn e_m2q(&self) -> &AlgElement {
        &self.e_m2q
    }

    /// Idempotent of the `M_2(Q(i))` component, kernel `<a^2 b^4>`.
    pub fn e_m2qi(&self) -> &AlgElement {
        &self.e_m2qi
    }

    /// Checks every identity for an integral nilpotent `n`.
    pub fn check(&self, n: &AlgElement) -> Result<G223Report, GroupError> {
        let g = &self.group;
        if n.len() != g.order() || !n.is_integral() || !n.is_nilpotent(g) {
            return Err(GroupError::InvalidParameter("expected an integral nilpotent of Z G(2,2,3)".into()));
        }
        let alpha = |x: usize| n.coeff(x);
        let at = |x: usize, y: usize| alpha(g.mul(x, y));
        let two = Rational::from_integer(2.into());
        let half = Rational::new(1.into(), 2.into());
        let mut r = G223Report {
            sign_rule: g.elements().all(|x| alpha(x) == -at(x, self.a2)),
            b_balance: g.elements().all(|x| alpha(x) + at(x, self.b4) == at(x, self.b2) + at(x, self.b6)),
            vanishing: [0, self.b2, self.b4, self.b6].iter().all(|&x| alpha(x).is_zero()),
            parity: g.elements().all(|x| ((alpha(x) + at(x, self.b4)) / &two).is_integer()),
            ..Default::default()
        };
        let ne = n.mul(&self.e_m2q, g);
        r.m2q_integral = ne.is_integral();
        r.m2q_closed_form = g.elements().all(|x| ne.coeff(x) == (alpha(x) + at(x, self.b4)) * &half);
        let ne = n.mul(&self.e_m2qi, g);
        r.m2qi_integral = ne.is_integral();
        r.m2qi_closed_form = g.elements().all(|x| ne.coeff(x) == (alpha(x) - at(x, self.b4)) * &half);
        Ok(r)
    }

    /// Integral nilpotents: every nonzero bicyclic nilpotent first, then random conjugates of
    /// bicyclics multiplied by random central integral elements, up to `count` in total.
    pub fn sample_nilpotents(&self, count: usize, seed: u64) -> Result<Vec<AlgElement>, GroupError> {
        let g = &self.group;
        let order = g.order();
        let mut base = Vec::new();
        for h in all_subgroups(g, LatticeGuard::default())? {
            for b in bicyclics_on(g, &h) {
                let x = b.to_element(g);
                if !base.contains(&x) {
                    base.push(x);
                }
            }
        }
        let central = center(g).elements();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out: Vec<AlgElement> = base.iter().take(count).cloned().collect();
        while out.len() < count {
            let n = &base[rng.gen_range(0..base.len())];
            let n = n.conjugate(g, rng.gen_range(0..order));
            let mut coeffs = alloc::vec![0i64; order];
            for &z in &central {
                coeffs[z] = rng.gen_range(-3..=3);
            }
            let z = AlgElement::from_ints(&coeffs);
            out.push(z.mul(&n, g));
        }
        Ok(out)
    }
}

/// Aggregate result of checking sampled nilpotents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleSummary {
    pub samples: usize,
    pub nonzero: usize,
    pub passed: usize,
    pub seed: u64,
}

impl SampleSummary {
    pub fn all_pass(&self) -> bool {
        self.passed == self.samples
    }
}

/// Checks `count` sampled nilpotents of `Z G(2,2,3)`.
pub fn run_samples(count: usize, seed: u64) -> Result<SampleSummary, GroupError> {
    let ctx = G223::new()?;
    let samples = ctx.sample_nilpotents(count, seed)?;
    let mut summary = SampleSummary { samples: samples.len(), nonzero: 0, passed: 0, seed };
    for n in &samples {
        if !n.is_zero() {
            summary.nonzero += 1;
        }
        if ctx.check(n)?.all_pass() {
            summary.passed += 1;
        }
    }
    Ok(summary)
}
