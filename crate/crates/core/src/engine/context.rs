//! Per-prime evaluation context: factorial tables, cached binomial-product
//! weights and lazily built sequence residue tables for one (p, e).
//!
//! A context is built once per prime inside a worker and is not shared
//! across threads; cases within a prime run sequentially against it.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use super::EngineError;
use crate::modarith::{
    binom_padic, inv_mod, legendre_symbol, FactorialTable, PadicResidue, PrimePower,
};
use crate::sequences::{generate_mod, legendre_poly, SequenceKind};

/// Named sequence tables the registry draws on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedSeq {
    Franel,
    Apery,
    Domb,
    SunA,
    ClfS,
    /// C_n = C_n(-3)
    CNeg3,
}

pub struct PrimeCtx {
    pe: PrimePower,
    ft: FactorialTable,
    cb: Vec<PadicResidue>,
    c3k: Vec<PadicResidue>,
    c4k2k: Vec<PadicResidue>,
    c6k3k: Vec<PadicResidue>,
    tables: RefCell<HashMap<NamedSeq, Rc<Vec<u64>>>>,
}

impl PrimeCtx {
    pub fn new(p: u64, e: u8) -> Result<Self, EngineError> {
        let pe = PrimePower::new(p, e)?;
        let ft = FactorialTable::default_for(pe);
        let n = p as usize;
        let mut cb = Vec::with_capacity(n);
        let mut c3k = Vec::with_capacity(n);
        let mut c4k2k = Vec::with_capacity(n);
        let mut c6k3k = Vec::with_capacity(n);
        for k in 0..p {
            cb.push(binom_padic(2 * k, k, &ft)?);
            c3k.push(binom_padic(3 * k, k, &ft)?);
            c4k2k.push(binom_padic(4 * k, 2 * k, &ft)?);
            c6k3k.push(binom_padic(6 * k, 3 * k, &ft)?);
        }
        Ok(PrimeCtx {
            pe,
            ft,
            cb,
            c3k,
            c4k2k,
            c6k3k,
            tables: RefCell::new(HashMap::new()),
        })
    }

    pub fn pe(&self) -> &PrimePower {
        &self.pe
    }

    pub fn p(&self) -> u64 {
        self.pe.p()
    }

    pub fn e(&self) -> u8 {
        self.pe.e()
    }

    pub fn modulus(&self) -> u64 {
        self.pe.modulus()
    }

    pub fn ft(&self) -> &FactorialTable {
        &self.ft
    }

    pub fn cb(&self, k: usize) -> PadicResidue {
        self.cb[k]
    }

    pub fn c3k(&self, k: usize) -> PadicResidue {
        self.c3k[k]
    }

    pub fn c4k2k(&self, k: usize) -> PadicResidue {
        self.c4k2k[k]
    }

    pub fn c6k3k(&self, k: usize) -> PadicResidue {
        self.c6k3k[k]
    }

    pub fn binom(&self, top: u64, bot: u64) -> Result<PadicResidue, EngineError> {
        Ok(binom_padic(top, bot, &self.ft)?)
    }

    /// Canonical residue of a signed integer.
    pub fn residue(&self, n: i128) -> u64 {
        self.pe.reduce_signed(n)
    }

    /// Inverse of a signed integer mod p^e.
    pub fn inv(&self, a: i64) -> Result<u64, EngineError> {
        Ok(inv_mod(a, &self.pe)?)
    }

    /// ratio = 1/base as a p-adic value; error if p | base.
    pub fn inv_ratio(&self, base: i64) -> Result<PadicResidue, EngineError> {
        Ok(PadicResidue::from_residue(self.inv(base)?, &self.pe))
    }

    /// Legendre symbol (a/p) of a signed integer.
    pub fn legendre(&self, a: i128) -> Result<i8, EngineError> {
        let r = (a).rem_euclid(self.p() as i128) as i64;
        Ok(legendre_symbol(r, self.p())?)
    }

    /// Apply a +-1 Legendre sign to a residue.
    pub fn signed(&self, sign: i8, r: u64) -> u64 {
        match sign {
            1 => r,
            -1 => (self.modulus() - r) % self.modulus(),
            _ => 0,
        }
    }

    /// Residue table of a named sequence up to index p-1, cached.
    pub fn named(&self, s: NamedSeq) -> Result<Rc<Vec<u64>>, EngineError> {
        if let Some(t) = self.tables.borrow().get(&s) {
            return Ok(Rc::clone(t));
        }
        let n_max = (self.p() - 1) as usize;
        let table = match s {
            NamedSeq::Franel => generate_mod(SequenceKind::Franel, n_max, &self.ft, None)?,
            NamedSeq::Apery => generate_mod(SequenceKind::Apery, n_max, &self.ft, None)?,
            NamedSeq::Domb => generate_mod(SequenceKind::Domb, n_max, &self.ft, None)?,
            NamedSeq::SunA => generate_mod(SequenceKind::SunA, n_max, &self.ft, None)?,
            NamedSeq::ClfS => generate_mod(SequenceKind::ClfS, n_max, &self.ft, None)?,
            NamedSeq::CNeg3 => generate_mod(
                SequenceKind::CPoly,
                n_max,
                &self.ft,
                Some(PadicResidue::from_int(-3, &self.pe)),
            )?,
        };
        let rc = Rc::new(table.values);
        self.tables.borrow_mut().insert(s, Rc::clone(&rc));
        Ok(rc)
    }

    /// S_k(x) residues for k = 0..p-1 (not cached: x is a sampled parameter).
    pub fn spoly(&self, x: PadicResidue) -> Result<Vec<u64>, EngineError> {
        let t = generate_mod(SequenceKind::SPoly, (self.p() - 1) as usize, &self.ft, Some(x))?;
        Ok(t.values)
    }

    /// C_k(x) residues for k = 0..p-1.
    pub fn cpoly(&self, x: PadicResidue) -> Result<Vec<u64>, EngineError> {
        let t = generate_mod(SequenceKind::CPoly, (self.p() - 1) as usize, &self.ft, Some(x))?;
        Ok(t.values)
    }

    /// Legendre polynomial values P_n(x) for n = 0..p-1.
    pub fn legendre_table(&self, x: PadicResidue) -> Result<Vec<u64>, EngineError> {
        let mut out = Vec::with_capacity(self.p() as usize);
        for n in 0..self.p() {
            out.push(legendre_poly(n, x, &self.ft)?.canonical(&self.pe)?);
        }
        Ok(out)
    }
}
