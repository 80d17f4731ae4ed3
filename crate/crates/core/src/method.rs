//! Computation strategies behind one trait.
//!
//! Four ways to obtain semigroup statistics are registered by name and
//! selected at runtime (`--method` on the CLI):
//!
//! * `generic`  — p-Apéry set plus the exact Apéry formulas;
//! * `gap-scan` — direct gap enumeration (the independent oracle);
//! * `closed`   — the per-regime closed forms (needs (s, t, r) context);
//! * `two-gen`  — the classical two-generator formulas.
//!
//! Methods answer partially: closed forms give g (and n where the paper
//! states one) but never s; `two-gen` only speaks at p = 0 for pairs.

use crate::closed;
use crate::error::{Error, Result};
use crate::semigroup::{
    gap_scan_stats, p_apery_set_with, stats_from_apery, two_gen_stats, EngineOptions,
    GeneratorSet, MethodTag,
};
use crate::triple::{general_xyz, TripleParams};

/// What to compute: a generator set, optionally with the (s, t, r) context
/// that closed forms need.
#[derive(Debug, Clone)]
pub struct StatsRequest {
    pub gens: GeneratorSet,
    pub params: Option<TripleParams>,
    pub p: u32,
    pub opts: EngineOptions,
}

impl StatsRequest {
    pub fn from_gens(gens: GeneratorSet, p: u32) -> Self {
        StatsRequest {
            gens,
            params: None,
            p,
            opts: EngineOptions::default(),
        }
    }

    pub fn from_params(params: TripleParams, p: u32) -> Result<Self> {
        let gens = general_xyz(&params)?.generator_set()?;
        Ok(StatsRequest {
            gens,
            params: Some(params),
            p,
            opts: EngineOptions::default(),
        })
    }
}

/// A possibly partial answer: g is always present, n and s only when the
/// method can produce them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MethodOutput {
    pub p: u32,
    pub g: i128,
    pub n: Option<i128>,
    pub s: Option<i128>,
    pub method: MethodTag,
}

pub trait ComputeMethod: Sync + Send {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    /// Whether this method can answer the request at all.
    fn supports(&self, req: &StatsRequest) -> bool;
    fn compute(&self, req: &StatsRequest) -> Result<MethodOutput>;
}

struct GenericApery;

impl ComputeMethod for GenericApery {
    fn name(&self) -> &'static str {
        "generic"
    }

    fn description(&self) -> &'static str {
        "p-Apéry set and the exact Apéry formulas"
    }

    fn supports(&self, _req: &StatsRequest) -> bool {
        true
    }

    fn compute(&self, req: &StatsRequest) -> Result<MethodOutput> {
        let ap = p_apery_set_with(&req.gens, req.p, &req.opts)?;
        let stats = stats_from_apery(&ap)?;
        Ok(MethodOutput {
            p: req.p,
            g: stats.g,
            n: Some(stats.n),
            s: Some(stats.s),
            method: MethodTag::GenericApery,
        })
    }
}

struct GapScan;

impl ComputeMethod for GapScan {
    fn name(&self) -> &'static str {
        "gap-scan"
    }

    fn description(&self) -> &'static str {
        "direct enumeration of the p-gap set"
    }

    fn supports(&self, _req: &StatsRequest) -> bool {
        true
    }

    fn compute(&self, req: &StatsRequest) -> Result<MethodOutput> {
        let stats = gap_scan_stats(&req.gens, req.p, &req.opts)?;
        Ok(MethodOutput {
            p: req.p,
            g: stats.g,
            n: Some(stats.n),
            s: Some(stats.s),
            method: MethodTag::GapScan,
        })
    }
}

struct ClosedForm;

impl ComputeMethod for ClosedForm {
    fn name(&self) -> &'static str {
        "closed"
    }

    fn description(&self) -> &'static str {
        "per-regime closed forms for the x^2+y^2=z^r families"
    }

    fn supports(&self, req: &StatsRequest) -> bool {
        req.params.is_some() && req.p <= 1
    }

    fn compute(&self, req: &StatsRequest) -> Result<MethodOutput> {
        let params = req.params.ok_or_else(|| {
            Error::NoClosedForm("closed forms need (s, t, r) parameters".into())
        })?;
        let label = crate::algebra::classify_regime(&params, req.p)?;
        if label.has_closed_form() {
            let g = if req.p == 0 {
                closed::g0_closed(&params)?
            } else {
                closed::g1_closed(&params)?
            };
            let n = if req.p == 0 {
                match closed::n0_closed(&params, &req.opts) {
                    Ok(res) => Some(res.value),
                    Err(Error::NoClosedForm(_)) => None,
                    Err(e) => return Err(e),
                }
            } else {
                None
            };
            return Ok(MethodOutput {
                p: req.p,
                g: g.value,
                n,
                s: None,
                method: MethodTag::ClosedForm(label.case_id().to_string()),
            });
        }
        // Irregular region: corner extraction stands in for the closed
        // form; the single-row shape also yields the genus.
        if label.case == crate::algebra::RegimeCase::Irregular {
            let spec = closed::apery_corners(&params, req.p, &req.opts)?;
            let triple = general_xyz(&params)?;
            let g = closed::corner_frobenius(&spec, &triple)?;
            let n = match closed::n0_closed(&params, &req.opts) {
                Ok(res) => Some(res.value),
                Err(Error::NoClosedForm(_)) => None,
                Err(e) => return Err(e),
            };
            return Ok(MethodOutput {
                p: req.p,
                g,
                n,
                s: None,
                method: MethodTag::ClosedForm(label.case_id().to_string()),
            });
        }
        Err(Error::NoClosedForm(format!(
            "{params}: {} has no closed form",
            label.case_id()
        )))
    }
}

struct TwoGen;

impl ComputeMethod for TwoGen {
    fn name(&self) -> &'static str {
        "two-gen"
    }

    fn description(&self) -> &'static str {
        "classical two-generator formulas (p = 0)"
    }

    fn supports(&self, req: &StatsRequest) -> bool {
        req.gens.arity() == 2 && req.p == 0
    }

    fn compute(&self, req: &StatsRequest) -> Result<MethodOutput> {
        if !self.supports(req) {
            return Err(Error::NoClosedForm(
                "two-gen needs exactly two generators and p = 0".into(),
            ));
        }
        let g = req.gens.gens();
        let stats = two_gen_stats(g[0], g[1])?;
        Ok(MethodOutput {
            p: 0,
            g: stats.g,
            n: Some(stats.n),
            s: Some(stats.s),
            method: MethodTag::TwoGenerator,
        })
    }
}

/// Name-indexed registry of the computation strategies.
pub struct MethodRegistry {
    methods: Vec<Box<dyn ComputeMethod>>,
}

impl MethodRegistry {
    pub fn standard() -> Self {
        MethodRegistry {
            methods: vec![
                Box::new(GenericApery),
                Box::new(GapScan),
                Box::new(ClosedForm),
                Box::new(TwoGen),
            ],
        }
    }

    pub fn get(&self, name: &str) -> Option<&dyn ComputeMethod> {
        self.methods
            .iter()
            .find(|m| m.name() == name)
            .map(|m| m.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.methods.iter().map(|m| m.name()).collect()
    }
}

impl Default for MethodRegistry {
    fn default() -> Self {
        Self::standard()
    }
}
