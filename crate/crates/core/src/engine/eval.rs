//! Generic evaluator for the truncated sums appearing in the congruence
//! registry: sum over k of w_k * c_k * ratio^k in Z/p^e Z, with the weight
//! w_k drawn from a fixed list of binomial products, the sequence factor c_k
//! from a residue table, and ratio an arbitrary p-adic value.

use super::context::{NamedSeq, PrimeCtx};
use super::EngineError;
use crate::modarith::{add_mod, inv_mod_u64, PadicResidue};

/// Upper summation limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumLimit {
    /// k = 0 .. p-1
    Full,
    /// k = 0 .. (p-1)/2
    Half,
}

/// Per-term weight w_k.
#[derive(Debug, Clone)]
pub enum WeightKind {
    /// 1
    One,
    /// C(2k,k)
    Cb,
    /// C(2k,k)^2
    CbSq,
    /// C(2k,k)^3
    CbCube,
    /// C(2k,k) C(3k,k)
    CbC3k,
    /// C(2k,k) C(4k,2k)
    CbC4k2k,
    /// C(3k,k) C(6k,3k)
    C3kC6k3k,
    /// C(2k,k)^2 C(3k,k)
    CbSqC3k,
    /// C(2k,k)^2 C(4k,2k)
    CbSqC4k2k,
    /// C(2k,k) C(3k,k) C(6k,3k)
    CbC3kC6k3k,
    /// C(a,k) C(-1-a,k) as falling-factorial products, a a residue mod p^e
    FallingPair(u64),
    /// p/(2k+1), equal to 1 at k = (p-1)/2 and p * (2k+1)^{-1} elsewhere
    HarmonicP,
}

/// Sequence factor c_k.
#[derive(Debug, Clone)]
pub enum SeqFactor {
    /// c_k = 1
    One,
    /// a cached named table
    Named(NamedSeq),
    /// S_k(x) at the given modular x
    SPolyAt(PadicResidue),
    /// C_k(x) at the given modular x
    CPolyAt(PadicResidue),
    /// caller-supplied residues
    Custom(Vec<u64>),
}

/// One truncated sum.
#[derive(Debug, Clone)]
pub struct SumSpec {
    pub weight: WeightKind,
    pub seq: SeqFactor,
    pub ratio: PadicResidue,
    pub limit: SumLimit,
    /// extra (-1)^k twist
    pub alternate: bool,
}

impl SumSpec {
    pub fn new(weight: WeightKind, seq: SeqFactor, ratio: PadicResidue) -> Self {
        SumSpec {
            weight,
            seq,
            ratio,
            limit: SumLimit::Full,
            alternate: false,
        }
    }

    pub fn half(mut self) -> Self {
        self.limit = SumLimit::Half;
        self
    }

    pub fn alternating(mut self) -> Self {
        self.alternate = true;
        self
    }
}

fn weight_at(ctx: &PrimeCtx, w: &WeightKind, k: usize) -> PadicResidue {
    match w {
        WeightKind::One => PadicResidue::one(),
        WeightKind::Cb => ctx.cb(k),
        WeightKind::CbSq => ctx.cb(k).mul(ctx.cb(k), ctx.pe()),
        WeightKind::CbCube => ctx.cb(k).mul(ctx.cb(k), ctx.pe()).mul(ctx.cb(k), ctx.pe()),
        WeightKind::CbC3k => ctx.cb(k).mul(ctx.c3k(k), ctx.pe()),
        WeightKind::CbC4k2k => ctx.cb(k).mul(ctx.c4k2k(k), ctx.pe()),
        WeightKind::C3kC6k3k => ctx.c3k(k).mul(ctx.c6k3k(k), ctx.pe()),
        WeightKind::CbSqC3k => ctx
            .cb(k)
            .mul(ctx.cb(k), ctx.pe())
            .mul(ctx.c3k(k), ctx.pe()),
        WeightKind::CbSqC4k2k => ctx
            .cb(k)
            .mul(ctx.cb(k), ctx.pe())
            .mul(ctx.c4k2k(k), ctx.pe()),
        WeightKind::CbC3kC6k3k => ctx
            .cb(k)
            .mul(ctx.c3k(k), ctx.pe())
            .mul(ctx.c6k3k(k), ctx.pe()),
        WeightKind::FallingPair(_) | WeightKind::HarmonicP => unreachable!("materialized"),
    }
}

/// C(a,k) C(-1-a,k) for k = 0..=upto, built iteratively in plain residue
/// arithmetic (exact mod p^e: the only divisions are by k < p).
fn falling_pair_weights(ctx: &PrimeCtx, a: u64, upto: usize) -> Result<Vec<u64>, EngineError> {
    let m = ctx.modulus();
    let b = (m - 1 + m - a % m) % m; // -1 - a
    let mut out = Vec::with_capacity(upto + 1);
    let mut ca = 1u64;
    let mut cb = 1u64;
    out.push(1);
    for k in 1..=upto as u64 {
        let inv_k = inv_mod_u64(k, m).map_err(EngineError::from)?;
        ca = crate::modarith::mul_mod(
            crate::modarith::mul_mod(ca, (a + m - (k - 1) % m) % m, m),
            inv_k,
            m,
        );
        cb = crate::modarith::mul_mod(
            crate::modarith::mul_mod(cb, (b + m - (k - 1) % m) % m, m),
            inv_k,
            m,
        );
        out.push(crate::modarith::mul_mod(ca, cb, m));
    }
    Ok(out)
}

/// Evaluate the sum as a canonical residue mod p^e. Terms with valuation
/// >= e vanish; a term with negative valuation is a precision error.
pub fn eval_sum(ctx: &PrimeCtx, spec: &SumSpec) -> Result<u64, EngineError> {
    let pe = *ctx.pe();
    let p = ctx.p();
    let m = ctx.modulus();
    let upto = match spec.limit {
        SumLimit::Full => (p - 1) as usize,
        SumLimit::Half => ((p - 1) / 2) as usize,
    };
    let table: Option<std::rc::Rc<Vec<u64>>> = match &spec.seq {
        SeqFactor::One => None,
        SeqFactor::Named(s) => Some(ctx.named(*s)?),
        SeqFactor::SPolyAt(x) => Some(std::rc::Rc::new(ctx.spoly(*x)?)),
        SeqFactor::CPolyAt(x) => Some(std::rc::Rc::new(ctx.cpoly(*x)?)),
        SeqFactor::Custom(v) => Some(std::rc::Rc::new(v.clone())),
    };
    let falling: Option<Vec<u64>> = match spec.weight {
        WeightKind::FallingPair(a) => Some(falling_pair_weights(ctx, a, upto)?),
        _ => None,
    };
    let mut acc = 0u64;
    let mut pw = PadicResidue::one();
    for k in 0..=upto {
        let w = match &spec.weight {
            WeightKind::FallingPair(_) => {
                PadicResidue::from_residue(falling.as_ref().unwrap()[k], &pe)
            }
            WeightKind::HarmonicP => {
                if 2 * k as u64 + 1 == p {
                    PadicResidue::one()
                } else {
                    // p/(2k+1): valuation 1 times a unit
                    PadicResidue::from_ratio(p as i128, 2 * k as i128 + 1, &pe)
                        .map_err(EngineError::from)?
                }
            }
            other => weight_at(ctx, other, k),
        };
        let c = match &table {
            Some(t) => PadicResidue::from_residue(t[k], &pe),
            None => PadicResidue::one(),
        };
        let mut term = w.mul(c, &pe).mul(pw, &pe);
        if spec.alternate && k % 2 == 1 {
            term = term.neg(&pe);
        }
        if !term.is_zero() {
            if term.val() < 0 {
                return Err(EngineError::Precision);
            }
            if term.val() < pe.e() as i64 {
                acc = add_mod(acc, term.canonical(&pe)?, m);
            }
        }
        pw = pw.mul(spec.ratio, &pe);
    }
    Ok(acc)
}

/// T_n = sum_{k=0}^{n} C(n,k) C(n+k,k) c_k mod p^e for n = 0..p-1.
pub fn inner_binomial_transform(ctx: &PrimeCtx, c: &[u64]) -> Result<Vec<u64>, EngineError> {
    let pe = *ctx.pe();
    let p = ctx.p() as usize;
    let m = ctx.modulus();
    let mut out = Vec::with_capacity(p);
    for n in 0..p {
        let mut acc = 0u64;
        for k in 0..=n {
            let t = ctx
                .binom(n as u64, k as u64)?
                .mul(ctx.binom((n + k) as u64, k as u64)?, &pe)
                .mul(PadicResidue::from_residue(c[k], &pe), &pe);
            if !t.is_zero() && t.val() < pe.e() as i64 {
                if t.val() < 0 {
                    return Err(EngineError::Precision);
                }
                acc = add_mod(acc, t.canonical(&pe)?, m);
            }
        }
        out.push(acc);
    }
    Ok(out)
}
