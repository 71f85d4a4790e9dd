//! Group analysis commands producing [`AnalysisRecord`]s.

use grouprings_core::nd::g223::run_samples;
use grouprings_core::nd::witness::{thersy_report, witness_for_tagged, witness_range_ok};
use grouprings_core::nd::{bicyclic_resistant, dk_check, is_g223, nd_report, sn_check, ssn_check};
use grouprings_core::structure::{is_dedekind, is_nilpotent, is_solvable, is_supersolvable, LatticeGuard};
use grouprings_core::wedderburn::wedderburn_report;
use grouprings_core::{CayleyGroup, FamilyTag};
use thiserror::Error;

use crate::expr::GroupExpr;
use crate::report::{
    status_name, AnalysisRecord, GroupInfo, NdJson, NdWitnessJson, PropertiesJson, TripleJson, WedderburnJson,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Command {
    Analyze,
    Components,
    Nd,
    Dk,
    Sn,
    Witness,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Analyze => "analyze",
            Command::Components => "components",
            Command::Nd => "nd",
            Command::Dk => "dk",
            Command::Sn => "sn",
            Command::Witness => "witness",
        }
    }

    /// Commands that enumerate the whole subgroup lattice are refused above the guard.
    fn needs_lattice(self) -> bool {
        matches!(self, Command::Analyze | Command::Components | Command::Sn)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub guard: LatticeGuard,
    pub seed: u64,
    pub samples: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { guard: LatticeGuard::default(), seed: 7, samples: 240 }
    }
}

impl Options {
    /// The cache argument string: everything besides the group that affects the output.
    pub fn cache_args(&self, expr: &GroupExpr) -> String {
        format!(
            "{expr};max_order={};max_subgroups={};seed={};samples={}",
            self.guard.max_order, self.guard.max_subgroups, self.seed, self.samples
        )
    }
}

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("group of order {order} exceeds the guard of {limit}; pass --force or raise --max-order (may be slow)")]
    Guard { order: usize, limit: usize },
    #[error(transparent)]
    Group(#[from] grouprings_core::GroupError),
    #[error("no ND witness available: ND status is {0}")]
    NoWitness(&'static str),
}

pub fn check_guard(cmd: Command, g: &CayleyGroup, opts: &Options) -> Result<(), AnalysisError> {
    if cmd.needs_lattice() && g.order() > opts.guard.max_order {
        return Err(AnalysisError::Guard { order: g.order(), limit: opts.guard.max_order });
    }
    Ok(())
}

/// Runs `cmd` on an already built group.
pub fn run(cmd: Command, expr: &GroupExpr, g: &CayleyGroup, opts: &Options) -> Result<AnalysisRecord, AnalysisError> {
    check_guard(cmd, g, opts)?;
    let guard = opts.guard;
    let mut rec = AnalysisRecord::new(cmd.name(), GroupInfo::new(&expr.to_string(), g));
    let congruence = || -> Result<_, AnalysisError> {
        Ok(if is_g223(g) { Some(run_samples(opts.samples, opts.seed)?.into()) } else { None })
    };
    match cmd {
        Command::Analyze => {
            let w = wedderburn_report(g, guard)?;
            let nd = nd_report(g, guard);
            let nd_json = NdJson::new(g, &nd);
            rec.witnesses.extend(nd_json.witness.clone());
            rec.properties = Some(PropertiesJson {
                sn: sn_check(g, guard)?.into(),
                ssn: ssn_check(g, guard)?,
                dedekind: is_dedekind(g),
                nilpotent: is_nilpotent(g),
                solvable: is_solvable(g),
                supersolvable: is_supersolvable(g),
                dk: dk_check(g)?.into(),
                bicyclic_resistant: status_name(bicyclic_resistant(g, guard)?.status).into(),
                nd: nd_json,
            });
            rec.wedderburn = Some(WedderburnJson::new(g, &w));
            rec.congruence = congruence()?;
        }
        Command::Components => rec.wedderburn = Some(WedderburnJson::new(g, &wedderburn_report(g, guard)?)),
        Command::Nd => {
            rec.nd = Some(NdJson::new(g, &nd_report(g, guard)));
            rec.congruence = congruence()?;
        }
        Command::Dk => rec.dk = Some(dk_check(g)?.into()),
        Command::Sn => {
            rec.sn = Some(sn_check(g, guard)?.into());
            rec.ssn = Some(ssn_check(g, guard)?);
        }
        Command::Witness => {
            if let Some(FamilyTag::Gpmn { p, m, n }) = g.tag() {
                if witness_range_ok(p, m, n) {
                    let w = witness_for_tagged(g)?;
                    rec.triple = Some(TripleJson::new(g, &w, &thersy_report(&w.triple, g)));
                }
            }
            let nd = nd_report(g, guard);
            match &nd.witness {
                Some(w) => rec.witnesses.push(NdWitnessJson::new(g, w)),
                None if rec.triple.is_none() => return Err(AnalysisError::NoWitness(status_name(nd.status))),
                None => {}
            }
            rec.nd = Some(NdJson::new(g, &nd));
        }
    }
    Ok(rec)
}
