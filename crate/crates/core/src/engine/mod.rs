//! Declarative registry of congruence cases and the sweep driver that
//! verifies them over prime ranges.
//!
//! Each registered case transcribes one stated congruence: a prime
//! predicate taken verbatim from the statement header, a modulus exponent,
//! and a runner that evaluates both sides in Z/p^e Z. Failures are data,
//! not exceptions: the sweep aggregates them into a report.

pub mod context;
pub mod eval;
pub mod registry;
pub mod sampling;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

pub use context::{NamedSeq, PrimeCtx};
pub use eval::{eval_sum, inner_binomial_transform, SeqFactor, SumLimit, SumSpec, WeightKind};
pub use sampling::ParamSampler;

use crate::modarith::ModArithError;
use crate::quadforms::{QuadError, QuadRep};
use crate::sequences::SeqError;

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("precision loss: negative-valuation term in sum")]
    Precision,
    #[error(transparent)]
    ModArith(#[from] ModArithError),
    #[error(transparent)]
    Quad(#[from] QuadError),
    #[error(transparent)]
    Seq(#[from] SeqError),
    #[error("unknown case id {0}")]
    UnknownCase(String),
}

/// Representation attached to an outcome.
#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq)]
pub struct RepOut {
    pub x: i64,
    pub y: u64,
    pub d: u64,
    pub scale: u64,
}

impl From<QuadRep> for RepOut {
    fn from(r: QuadRep) -> Self {
        RepOut {
            x: r.x,
            y: r.y,
            d: r.d,
            scale: r.scale,
        }
    }
}

/// One verified (case, prime, parameters) instance.
#[derive(Debug, Clone, Serialize)]
pub struct Outcome {
    pub case_id: String,
    pub p: u64,
    pub e: u8,
    pub params: BTreeMap<String, String>,
    pub lhs: u64,
    pub rhs: u64,
    pub holds: bool,
    pub branch: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rep: Option<RepOut>,
    pub ms: u64,
}

/// A case that was eligible by hypothesis but could not be evaluated
/// (base divisible by p, or no eligible parameters exist).
#[derive(Debug, Clone, Serialize)]
pub struct Skip {
    pub case_id: String,
    pub p: u64,
    pub reason: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Summary {
    pub cases: usize,
    pub primes: usize,
    pub outcomes: usize,
    pub holds: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub records: Vec<Outcome>,
    pub skips: Vec<Skip>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &Outcome> {
        self.records.iter().filter(|o| !o.holds)
    }
}

/// Draft of an outcome produced by a case runner; the driver stamps the
/// case id, prime, exponent and timing.
#[derive(Debug, Clone)]
pub struct Draft {
    pub params: BTreeMap<String, String>,
    pub lhs: u64,
    pub rhs: u64,
    pub branch: String,
    pub rep: Option<RepOut>,
}

impl Draft {
    pub fn new(lhs: u64, rhs: u64, branch: impl Into<String>) -> Self {
        Draft {
            params: BTreeMap::new(),
            lhs,
            rhs,
            branch: branch.into(),
            rep: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn with_rep(mut self, rep: Option<RepOut>) -> Self {
        self.rep = rep;
        self
    }
}

/// What a runner produced for one prime.
#[derive(Debug, Default)]
pub struct CaseResult {
    pub drafts: Vec<Draft>,
    pub skips: Vec<String>,
}

impl CaseResult {
    pub fn skipped(reason: impl Into<String>) -> Self {
        CaseResult {
            drafts: Vec::new(),
            skips: vec![reason.into()],
        }
    }
}

/// Runner environment: context plus sampling state for one (case, prime).
pub struct CaseCtx<'a> {
    pub ctx: &'a PrimeCtx,
    pub draws: usize,
    pub sampler: ParamSampler,
}

/// A registered congruence case.
pub struct TheoremCase {
    pub id: &'static str,
    /// modulus exponent e
    pub e: u8,
    /// prime hypothesis, transcribed from the statement header
    pub hypothesis: &'static str,
    pub parameterized: bool,
    pub pred: fn(u64) -> bool,
    pub run: fn(&mut CaseCtx) -> Result<CaseResult, EngineError>,
}

pub fn case(id: &str) -> Option<&'static TheoremCase> {
    registry::CASES.iter().find(|c| c.id == id)
}

pub fn case_ids() -> Vec<&'static str> {
    registry::CASES.iter().map(|c| c.id).collect()
}

/// Verify one case at one prime. Returns the outcomes plus any skip records;
/// an ineligible prime yields a single skip.
pub fn verify_case(
    id: &str,
    p: u64,
    draws: usize,
    seed: u64,
    e_override: Option<u8>,
) -> Result<(Vec<Outcome>, Vec<Skip>), EngineError> {
    let case = case(id).ok_or_else(|| EngineError::UnknownCase(id.to_string()))?;
    if !(case.pred)(p) {
        return Ok((
            Vec::new(),
            vec![Skip {
                case_id: id.to_string(),
                p,
                reason: format!("prime fails hypothesis: {}", case.hypothesis),
            }],
        ));
    }
    let e = e_override.unwrap_or(case.e);
    let ctx = PrimeCtx::new(p, e)?;
    run_case_in_ctx(case, &ctx, draws, seed)
}

fn run_case_in_ctx(
    case: &TheoremCase,
    ctx: &PrimeCtx,
    draws: usize,
    seed: u64,
) -> Result<(Vec<Outcome>, Vec<Skip>), EngineError> {
    let p = ctx.p();
    let started = Instant::now();
    let mut cc = CaseCtx {
        ctx,
        draws,
        sampler: ParamSampler::new(seed, case.id, p),
    };
    let result = (case.run)(&mut cc);
    let ms = started.elapsed().as_millis() as u64;
    match result {
        Ok(r) => {
            let outcomes = r
                .drafts
                .into_iter()
                .map(|d| Outcome {
                    case_id: case.id.to_string(),
                    p,
                    e: ctx.e(),
                    params: d.params,
                    lhs: d.lhs,
                    rhs: d.rhs,
                    holds: d.lhs == d.rhs,
                    branch: d.branch,
                    rep: d.rep,
                    ms,
                })
                .collect();
            let skips = r
                .skips
                .into_iter()
                .map(|reason| Skip {
                    case_id: case.id.to_string(),
                    p,
                    reason,
                })
                .collect();
            Ok((outcomes, skips))
        }
        // consistency and precision errors surface as failed records with
        // full reproduction data rather than aborting the sweep
        Err(EngineError::Quad(QuadError::Consistency { p, d, scale })) => Ok((
            vec![Outcome {
                case_id: case.id.to_string(),
                p,
                e: ctx.e(),
                params: BTreeMap::new(),
                lhs: 0,
                rhs: 1,
                holds: false,
                branch: format!("CONSISTENCY ERROR: no representation {}p = x^2 + {}y^2", scale, d),
                rep: None,
                ms,
            }],
            Vec::new(),
        )),
        Err(EngineError::Precision) => Ok((
            vec![Outcome {
                case_id: case.id.to_string(),
                p,
                e: ctx.e(),
                params: BTreeMap::new(),
                lhs: 0,
                rhs: 1,
                holds: false,
                branch: "PRECISION ERROR".to_string(),
                rep: None,
                ms,
            }],
            Vec::new(),
        )),
        Err(e) => Err(e),
    }
}

/// Sweep the registry (or the `filter` subset) over a prime list.
/// Deterministic under a fixed seed; parallel across primes. Primes that
/// fail a case hypothesis are counted but not reported individually.
pub fn verify_all(
    primes: &[u64],
    filter: Option<&[String]>,
    draws: usize,
    seed: u64,
    e_override: Option<u8>,
) -> Result<VerificationReport, EngineError> {
    let cases: Vec<&'static TheoremCase> = match filter {
        None => registry::CASES.iter().collect(),
        Some(ids) => {
            let mut v = Vec::new();
            for id in ids {
                v.push(case(id).ok_or_else(|| EngineError::UnknownCase(id.clone()))?);
            }
            v
        }
    };
    let per_prime: Result<Vec<(Vec<Outcome>, Vec<Skip>)>, EngineError> = primes
        .par_iter()
        .map(|&p| {
            let mut outs = Vec::new();
            let mut skips = Vec::new();
            // contexts per exponent, built only if some case needs them
            let mut ctxs: Vec<Option<PrimeCtx>> = vec![None, None, None, None];
            for case in &cases {
                if !(case.pred)(p) {
                    continue;
                }
                let e = e_override.unwrap_or(case.e) as usize;
                if ctxs[e].is_none() {
                    ctxs[e] = Some(PrimeCtx::new(p, e as u8)?);
                }
                let ctx = ctxs[e].as_ref().unwrap();
                let (o, s) = run_case_in_ctx(case, ctx, draws, seed)?;
                outs.extend(o);
                skips.extend(s);
            }
            Ok((outs, skips))
        })
        .collect();
    let per_prime = per_prime?;
    let mut records = Vec::new();
    let mut skips = Vec::new();
    for (o, s) in per_prime {
        records.extend(o);
        skips.extend(s);
    }
    let holds = records.iter().filter(|o| o.holds).count();
    let summary = Summary {
        cases: cases.len(),
        primes: primes.len(),
        outcomes: records.len(),
        holds,
        failed: records.len() - holds,
        skipped: skips.len(),
    };
    Ok(VerificationReport {
        records,
        skips,
        summary,
    })
}
