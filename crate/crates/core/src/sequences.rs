//! Exact and mod-p^e generation of the sequence and polynomial families:
//! Franel f_n, Apery A_n, Domb D_n, a_n, Almkvist-Zudilin b_n,
//! Catalan-Larcombe-French S_n and P_n = 2^n S_n, and the polynomial
//! families S_n(x), C_n(x) and the Legendre polynomials P_n(x).
//!
//! Residue tables are computed from the defining sums (not from recurrences),
//! so they stay valid when a recurrence coefficient vanishes mod p. The
//! three-term recurrences for f_n and S_n are provided separately for exact
//! big-integer prefixes at large indices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::modarith::{binom_padic, FactorialTable, ModArithError, PadicResidue};

#[derive(Debug, Error)]
pub enum SeqError {
    #[error("sequence kind {0} requires a parameter x")]
    MissingParam(&'static str),
    #[error("sequence kind {0} takes no parameter x")]
    UnexpectedParam(&'static str),
    #[error("negative valuation after summation; increase precision")]
    Precision,
    #[error(transparent)]
    ModArith(#[from] ModArithError),
}

/// Which family a table holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    /// f_n = sum C(n,k)^3
    Franel,
    /// A_n = sum C(n,k)^2 C(n+k,k)^2
    Apery,
    /// D_n = sum C(n,k)^2 C(2k,k) C(2n-2k,n-k)
    Domb,
    /// a_n = sum C(n,k)^2 C(2k,k)
    SunA,
    /// b_n = sum_{3k<=n} C(2k,k) C(3k,k) C(n,3k) C(n+k,k) (-3)^{n-3k}
    AlmkvistZudilin,
    /// S_n = sum C(n,k) C(2k,k) C(2n-2k,n-k)
    ClfS,
    /// P_n = 2^n S_n
    ClfP,
    /// S_n(x) = sum C(n,k) C(2k,k) C(2n-2k,n-k) x^k
    SPoly,
    /// C_n(x) = sum_{3k<=n} C(2k,k) C(3k,k) C(n,3k) x^{n-3k}
    CPoly,
    /// Legendre P_n(x) = sum C(n,k) C(n+k,k) ((x-1)/2)^k
    LegendreP,
}

impl SequenceKind {
    pub fn is_polynomial(self) -> bool {
        matches!(
            self,
            SequenceKind::SPoly | SequenceKind::CPoly | SequenceKind::LegendreP
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            SequenceKind::Franel => "franel",
            SequenceKind::Apery => "apery",
            SequenceKind::Domb => "domb",
            SequenceKind::SunA => "suna",
            SequenceKind::AlmkvistZudilin => "almkvist-zudilin",
            SequenceKind::ClfS => "clf-s",
            SequenceKind::ClfP => "clf-p",
            SequenceKind::SPoly => "spoly",
            SequenceKind::CPoly => "cpoly",
            SequenceKind::LegendreP => "legendre",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::all().into_iter().find(|k| k.name() == s)
    }

    pub fn all() -> [SequenceKind; 10] {
        [
            SequenceKind::Franel,
            SequenceKind::Apery,
            SequenceKind::Domb,
            SequenceKind::SunA,
            SequenceKind::AlmkvistZudilin,
            SequenceKind::ClfS,
            SequenceKind::ClfP,
            SequenceKind::SPoly,
            SequenceKind::CPoly,
            SequenceKind::LegendreP,
        ]
    }
}

/// Exact entries: big integers for the plain sequences, rationals for the
/// polynomial families.
#[derive(Debug, Clone)]
pub enum ExactEntries {
    Int(Vec<BigInt>),
    Rat(Vec<BigRational>),
}

impl ExactEntries {
    pub fn len(&self) -> usize {
        match self {
            ExactEntries::Int(v) => v.len(),
            ExactEntries::Rat(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Entry as a rational regardless of storage.
    pub fn rat(&self, i: usize) -> BigRational {
        match self {
            ExactEntries::Int(v) => BigRational::from_integer(v[i].clone()),
            ExactEntries::Rat(v) => v[i].clone(),
        }
    }
}

/// Exact table of one family, indexed 0..=n_max.
#[derive(Debug, Clone)]
pub struct SequenceTable {
    pub kind: SequenceKind,
    pub x: Option<BigRational>,
    pub entries: ExactEntries,
}

impl SequenceTable {
    pub fn int(&self, i: usize) -> &BigInt {
        match &self.entries {
            ExactEntries::Int(v) => &v[i],
            ExactEntries::Rat(_) => panic!("rational table indexed as integer"),
        }
    }
}

/// Residue mirror of a table: canonical values mod p^e.
#[derive(Debug, Clone)]
pub struct ModTable {
    pub kind: SequenceKind,
    pub values: Vec<u64>,
}

/// Exact binomial C(n, k); zero when k > n.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

/// Row n of Pascal's triangle.
fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n + 1);
    row.push(BigInt::one());
    for k in 0..n {
        let next = (&row[k] * BigInt::from((n - k) as u64))
            .div_exact(&BigInt::from((k + 1) as u64));
        row.push(next);
    }
    row
}

/// Central binomials C(2j, j) for j = 0..=n.
fn central_binomials(n: usize) -> Vec<BigInt> {
    let mut cb = Vec::with_capacity(n + 1);
    cb.push(BigInt::one());
    for j in 0..n {
        let next = (&cb[j] * BigInt::from(2 * (2 * j as u64 + 1)))
            .div_exact(&BigInt::from(j as u64 + 1));
        cb.push(next);
    }
    cb
}

/// C(3j, j) for j = 0..=n.
fn third_binomials(n: usize) -> Vec<BigInt> {
    let mut c = Vec::with_capacity(n + 1);
    c.push(BigInt::one());
    for j in 0..n as u64 {
        let num = &c[j as usize] * BigInt::from((3 * j + 1) * (3 * j + 2) * (3 * j + 3));
        let den = BigInt::from((j + 1) * (2 * j + 1) * (2 * j + 2));
        c.push(num.div_exact(&den));
    }
    c
}

trait DivExact {
    fn div_exact(&self, d: &BigInt) -> BigInt;
}

impl DivExact for BigInt {
    fn div_exact(&self, d: &BigInt) -> BigInt {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact division in sequence generation");
        q
    }
}

/// Exact table from the defining sum.
pub fn generate_exact(
    kind: SequenceKind,
    n_max: usize,
    x: Option<&BigRational>,
) -> Result<SequenceTable, SeqError> {
    if kind.is_polynomial() && x.is_none() {
        return Err(SeqError::MissingParam(kind.name()));
    }
    if !kind.is_polynomial() && x.is_some() {
        return Err(SeqError::UnexpectedParam(kind.name()));
    }
    let cb = central_binomials(n_max.max(1));
    let entries = if kind.is_polynomial() {
        let x = x.unwrap();
        let base = match kind {
            SequenceKind::LegendreP => {
                (x - BigRational::one()) / BigRational::from_integer(BigInt::from(2))
            }
            _ => x.clone(),
        };
        let mut xpow = Vec::with_capacity(n_max + 1);
        xpow.push(BigRational::one());
        for k in 0..n_max {
            xpow.push(&xpow[k] * &base);
        }
        let mut vals = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let row = binomial_row(n);
            let mut s = BigRational::zero();
            match kind {
                SequenceKind::SPoly => {
                    for k in 0..=n {
                        s += BigRational::from_integer(&row[k] * &cb[k] * &cb[n - k]) * &xpow[k];
                    }
                }
                SequenceKind::CPoly => {
                    let c3 = third_binomials(n / 3);
                    for k in 0..=n / 3 {
                        s += BigRational::from_integer(&cb[k] * &c3[k] * &row[3 * k])
                            * &xpow[n - 3 * k];
                    }
                }
                SequenceKind::LegendreP => {
                    // C(n+k,k) built incrementally
                    let mut t = BigInt::one();
                    for k in 0..=n {
                        if k > 0 {
                            t = (&t * BigInt::from((n + k) as u64))
                                .div_exact(&BigInt::from(k as u64));
                        }
                        s += BigRational::from_integer(&row[k] * &t) * &xpow[k];
                    }
                }
                _ => unreachable!(),
            }
            vals.push(s);
        }
        ExactEntries::Rat(vals)
    } else {
        let mut vals = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let row = binomial_row(n);
            let mut s = BigInt::zero();
            match kind {
                SequenceKind::Franel => {
                    for k in 0..=n {
                        s += &row[k] * &row[k] * &row[k];
                    }
                }
                SequenceKind::Apery => {
                    let mut t = BigInt::one();
                    for k in 0..=n {
                        if k > 0 {
                            t = (&t * BigInt::from((n + k) as u64))
                                .div_exact(&BigInt::from(k as u64));
                        }
                        s += &row[k] * &row[k] * &t * &t;
                    }
                }
                SequenceKind::Domb => {
                    for k in 0..=n {
                        s += &row[k] * &row[k] * &cb[k] * &cb[n - k];
                    }
                }
                SequenceKind::SunA => {
                    for k in 0..=n {
                        s += &row[k] * &row[k] * &cb[k];
                    }
                }
                SequenceKind::AlmkvistZudilin => {
                    let c3 = third_binomials(n / 3);
                    let m3 = BigInt::from(-3);
                    let mut pw = num_traits::pow::pow(m3.clone(), n);
                    let inv_cube = BigInt::from(-27);
                    for k in 0..=n / 3 {
                        // C(n+k,k)
                        let t = if k == 0 {
                            BigInt::one()
                        } else {
                            binomial((n + k) as u64, k as u64)
                        };
                        s += &cb[k] * &c3[k] * &row[3 * k] * &t * &pw;
                        if 3 * (k + 1) <= n {
                            pw = pw.div_exact(&inv_cube);
                        }
                    }
                }
                SequenceKind::ClfS => {
                    for k in 0..=n {
                        s += &row[k] * &cb[k] * &cb[n - k];
                    }
                }
                SequenceKind::ClfP => {
                    for k in 0..=n {
                        s += &row[k] * &cb[k] * &cb[n - k];
                    }
                    s <<= n;
                }
                _ => unreachable!(),
            }
            vals.push(s);
        }
        ExactEntries::Int(vals)
    };
    Ok(SequenceTable {
        kind,
        x: x.cloned(),
        entries,
    })
}

/// Residue table mod p^e from the defining sum, using factorial-table
/// binomials with exact p-valuations.
pub fn generate_mod(
    kind: SequenceKind,
    n_max: usize,
    ft: &FactorialTable,
    x: Option<PadicResidue>,
) -> Result<ModTable, SeqError> {
    if kind.is_polynomial() && x.is_none() {
        return Err(SeqError::MissingParam(kind.name()));
    }
    if !kind.is_polynomial() && x.is_some() {
        return Err(SeqError::UnexpectedParam(kind.name()));
    }
    let pe = *ft.pe();
    let e = pe.e() as i64;
    let m = pe.modulus();
    let bin = |top: u64, bot: u64| binom_padic(top, bot, ft);

    // base^k powers used by the polynomial families
    let base = match kind {
        SequenceKind::LegendreP => {
            let x = x.unwrap();
            let half = PadicResidue::from_ratio(1, 2, &pe)?;
            Some(x.add(PadicResidue::one().neg(&pe), &pe).mul(half, &pe))
        }
        SequenceKind::SPoly | SequenceKind::CPoly => x,
        _ => None,
    };
    let pows: Vec<PadicResidue> = match base {
        Some(b) => {
            let mut v = Vec::with_capacity(n_max + 1);
            v.push(PadicResidue::one());
            for k in 0..n_max {
                v.push(v[k].mul(b, &pe));
            }
            v
        }
        None => Vec::new(),
    };
    let neg3_pows: Vec<PadicResidue> = if kind == SequenceKind::AlmkvistZudilin {
        let b = PadicResidue::from_int(-3, &pe);
        let mut v = Vec::with_capacity(n_max + 1);
        v.push(PadicResidue::one());
        for k in 0..n_max {
            v.push(v[k].mul(b, &pe));
        }
        v
    } else {
        Vec::new()
    };

    let mut values = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max as u64 {
        let mut acc: u64 = 0;
        let mut push = |t: PadicResidue| -> Result<(), SeqError> {
            if t.is_zero() || t.val() >= e {
                return Ok(());
            }
            if t.val() < 0 {
                return Err(SeqError::Precision);
            }
            acc = crate::modarith::add_mod(acc, t.canonical(&pe)?, m);
            Ok(())
        };
        match kind {
            SequenceKind::Franel => {
                for k in 0..=n {
                    let b = bin(n, k)?;
                    push(b.mul(b, &pe).mul(b, &pe))?;
                }
            }
            SequenceKind::Apery => {
                for k in 0..=n {
                    let b = bin(n, k)?;
                    let t = bin(n + k, k)?;
                    push(b.mul(b, &pe).mul(t, &pe).mul(t, &pe))?;
                }
            }
            SequenceKind::Domb => {
                for k in 0..=n {
                    let b = bin(n, k)?;
                    let t = bin(2 * k, k)?.mul(bin(2 * (n - k), n - k)?, &pe);
                    push(b.mul(b, &pe).mul(t, &pe))?;
                }
            }
            SequenceKind::SunA => {
                for k in 0..=n {
                    let b = bin(n, k)?;
                    push(b.mul(b, &pe).mul(bin(2 * k, k)?, &pe))?;
                }
            }
            SequenceKind::AlmkvistZudilin => {
                for k in 0..=n / 3 {
                    let t = bin(2 * k, k)?
                        .mul(bin(3 * k, k)?, &pe)
                        .mul(bin(n, 3 * k)?, &pe)
                        .mul(bin(n + k, k)?, &pe)
                        .mul(neg3_pows[(n - 3 * k) as usize], &pe);
                    push(t)?;
                }
            }
            SequenceKind::ClfS => {
                for k in 0..=n {
                    let t = bin(n, k)?
                        .mul(bin(2 * k, k)?, &pe)
                        .mul(bin(2 * (n - k), n - k)?, &pe);
                    push(t)?;
                }
            }
            SequenceKind::ClfP => {
                let two_n = PadicResidue::from_int(2, &pe).pow(n, &pe);
                for k in 0..=n {
                    let t = bin(n, k)?
                        .mul(bin(2 * k, k)?, &pe)
                        .mul(bin(2 * (n - k), n - k)?, &pe);
                    push(t.mul(two_n, &pe))?;
                }
            }
            SequenceKind::SPoly => {
                for k in 0..=n {
                    let t = bin(n, k)?
                        .mul(bin(2 * k, k)?, &pe)
                        .mul(bin(2 * (n - k), n - k)?, &pe)
                        .mul(pows[k as usize], &pe);
                    push(t)?;
                }
            }
            SequenceKind::CPoly => {
                for k in 0..=n / 3 {
                    let t = bin(2 * k, k)?
                        .mul(bin(3 * k, k)?, &pe)
                        .mul(bin(n, 3 * k)?, &pe)
                        .mul(pows[(n - 3 * k) as usize], &pe);
                    push(t)?;
                }
            }
            SequenceKind::LegendreP => {
                for k in 0..=n {
                    let t = bin(n, k)?
                        .mul(bin(n + k, k)?, &pe)
                        .mul(pows[k as usize], &pe);
                    push(t)?;
                }
            }
        }
        values.push(acc);
    }
    Ok(ModTable { kind, values })
}

/// Legendre polynomial P_n(x) mod p^e via the Murphy formula.
pub fn legendre_poly(
    n: u64,
    x: PadicResidue,
    ft: &FactorialTable,
) -> Result<PadicResidue, SeqError> {
    let pe = *ft.pe();
    let half = PadicResidue::from_ratio(1, 2, &pe)?;
    let base = x.add(PadicResidue::one().neg(&pe), &pe).mul(half, &pe);
    let mut acc = PadicResidue::zero();
    let mut pw = PadicResidue::one();
    for k in 0..=n {
        let t = binom_padic(n, k, ft)?
            .mul(binom_padic(n + k, k, ft)?, &pe)
            .mul(pw, &pe);
        acc = acc.add(t, &pe);
        pw = pw.mul(base, &pe);
    }
    Ok(acc)
}

/// Exact f_0..f_{n_max} by the three-term recurrence
/// (n+1)^2 f_{n+1} = (7n^2+7n+2) f_n + 8n^2 f_{n-1}.
pub fn franel_prefix_by_recurrence(n_max: usize) -> Vec<BigInt> {
    let mut f = Vec::with_capacity(n_max + 1);
    f.push(BigInt::one());
    if n_max >= 1 {
        f.push(BigInt::from(2));
    }
    for n in 1..n_max as u64 {
        let num = BigInt::from(7 * n * n + 7 * n + 2) * &f[n as usize]
            + BigInt::from(8 * n * n) * &f[(n - 1) as usize];
        f.push(num.div_exact(&BigInt::from((n + 1) * (n + 1))));
    }
    f
}

/// Exact S_0..S_{n_max} by the three-term recurrence
/// n^2 S_n = 4(3n^2-3n+1) S_{n-1} - 32(n-1)^2 S_{n-2}.
pub fn clf_s_prefix_by_recurrence(n_max: usize) -> Vec<BigInt> {
    let mut s = Vec::with_capacity(n_max + 1);
    s.push(BigInt::one());
    if n_max >= 1 {
        s.push(BigInt::from(4));
    }
    for n in 2..=n_max as u64 {
        let num = BigInt::from(4 * (3 * n * n - 3 * n + 1)) * &s[(n - 1) as usize]
            - BigInt::from(32 * (n - 1) * (n - 1)) * &s[(n - 2) as usize];
        s.push(num.div_exact(&BigInt::from(n * n)));
    }
    s
}

/// v_p of a big integer together with the reduced cofactor check
/// `x ≡ 0 (mod p^r)`.
pub fn divisible_by_prime_power(x: &BigInt, p: u64, r: u32) -> bool {
    let m = BigInt::from(p).pow(r);
    (x % m).is_zero()
}

/// x mod p^r as u64 (r small).
pub fn big_mod_u64(x: &BigInt, modulus: u64) -> u64 {
    let m = BigInt::from(modulus);
    let r = ((x % &m) + &m) % &m;
    let (_, digits) = r.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modarith::PrimePower;

    fn ft(p: u64, e: u8) -> FactorialTable {
        FactorialTable::default_for(PrimePower::new(p, e).unwrap())
    }

    fn ints(t: &SequenceTable) -> Vec<i64> {
        match &t.entries {
            ExactEntries::Int(v) => v.iter().map(|x| i64::try_from(x).unwrap()).collect(),
            _ => panic!(),
        }
    }

    #[test]
    fn defining_sums_small_values() {
        let f = generate_exact(SequenceKind::Franel, 4, None).unwrap();
        assert_eq!(ints(&f), vec![1, 2, 10, 56, 346]);
        let s = generate_exact(SequenceKind::ClfS, 3, None).unwrap();
        assert_eq!(ints(&s), vec![1, 4, 20, 112]);
        let a = generate_exact(SequenceKind::Apery, 2, None).unwrap();
        assert_eq!(ints(&a), vec![1, 5, 73]);
        let d = generate_exact(SequenceKind::Domb, 4, None).unwrap();
        assert_eq!(ints(&d), vec![1, 4, 28, 256, 2716]);
        let an = generate_exact(SequenceKind::SunA, 4, None).unwrap();
        assert_eq!(ints(&an), vec![1, 3, 15, 93, 639]);
        let b = generate_exact(SequenceKind::AlmkvistZudilin, 4, None).unwrap();
        assert_eq!(ints(&b), vec![1, -3, 9, -3, -279]);
        let p = generate_exact(SequenceKind::ClfP, 3, None).unwrap();
        assert_eq!(ints(&p), vec![1, 8, 80, 896]);
    }

    #[test]
    fn spoly_at_minus_one() {
        let x = BigRational::from_integer(BigInt::from(-1));
        let t = generate_exact(SequenceKind::SPoly, 4, Some(&x)).unwrap();
        let vals: Vec<BigRational> = match &t.entries {
            ExactEntries::Rat(v) => v.clone(),
            _ => panic!(),
        };
        let expect: Vec<i64> = vec![1, 0, 4, 0, 36];
        for (v, e) in vals.iter().zip(expect) {
            assert_eq!(*v, BigRational::from_integer(BigInt::from(e)));
        }
    }

    #[test]
    fn param_arity_enforced() {
        assert!(generate_exact(SequenceKind::SPoly, 3, None).is_err());
        let x = BigRational::from_integer(BigInt::from(2));
        assert!(generate_exact(SequenceKind::Franel, 3, Some(&x)).is_err());
    }

    #[test]
    fn franel_mod_seven() {
        let t = generate_mod(SequenceKind::Franel, 6, &ft(7, 1), None).unwrap();
        assert_eq!(t.values, vec![1, 2, 3, 0, 3, 5, 1]);
    }

    #[test]
    fn domb_mod_25() {
        let t = generate_mod(SequenceKind::Domb, 2, &ft(5, 2), None).unwrap();
        assert_eq!(t.values[2], 3); // D_2 = 28
    }

    #[test]
    fn legendre_p_at_one_is_one() {
        let table = ft(7, 3);
        let pe = *table.pe();
        let one = PadicResidue::one();
        for n in 0..10 {
            let v = legendre_poly(n, one, &table).unwrap();
            assert_eq!(v.canonical(&pe).unwrap(), 1);
        }
        let t = generate_mod(SequenceKind::LegendreP, 9, &table, Some(one)).unwrap();
        assert!(t.values.iter().all(|&v| v == 1));
    }

    #[test]
    fn legendre_poly_examples() {
        let table = ft(7, 3);
        let pe = *table.pe();
        let x = PadicResidue::from_int(3, &pe);
        assert_eq!(legendre_poly(0, x, &table).unwrap().canonical(&pe).unwrap(), 1);
        assert_eq!(legendre_poly(1, x, &table).unwrap().canonical(&pe).unwrap(), 3);
        assert_eq!(legendre_poly(2, x, &table).unwrap().canonical(&pe).unwrap(), 13);
    }

    #[test]
    fn recurrences_match_defining_sums() {
        let f = generate_exact(SequenceKind::Franel, 60, None).unwrap();
        let fr = franel_prefix_by_recurrence(60);
        for n in 0..=60 {
            assert_eq!(f.int(n), &fr[n], "franel n={n}");
        }
        let s = generate_exact(SequenceKind::ClfS, 60, None).unwrap();
        let sr = clf_s_prefix_by_recurrence(60);
        for n in 0..=60 {
            assert_eq!(s.int(n), &sr[n], "clf-s n={n}");
        }
    }

    #[test]
    fn clf_p_is_power_of_two_times_s() {
        let s = generate_exact(SequenceKind::ClfS, 40, None).unwrap();
        let p = generate_exact(SequenceKind::ClfP, 40, None).unwrap();
        for n in 0..=40 {
            assert_eq!(p.int(n), &(s.int(n) << n), "n={n}");
        }
    }

    #[test]
    fn spoly_at_one_is_clf_s_and_cpoly_at_minus_three() {
        let one = BigRational::one();
        let sx = generate_exact(SequenceKind::SPoly, 30, Some(&one)).unwrap();
        let s = generate_exact(SequenceKind::ClfS, 30, None).unwrap();
        for n in 0..=30 {
            assert_eq!(sx.entries.rat(n), BigRational::from_integer(s.int(n).clone()));
        }
        let m3 = BigRational::from_integer(BigInt::from(-3));
        let c = generate_exact(SequenceKind::CPoly, 12, Some(&m3)).unwrap();
        // C_1(-3) = -3, C_3(-3) = -27 + 2*3 = -21
        assert_eq!(c.entries.rat(1), BigRational::from_integer(BigInt::from(-3)));
        assert_eq!(c.entries.rat(3), BigRational::from_integer(BigInt::from(-21)));
    }

    #[test]
    fn mod_tables_agree_with_exact() {
        use crate::sequences::big_mod_u64;
        let x_exact = BigRational::new(BigInt::from(2), BigInt::from(3));
        for p in [5u64, 7, 11, 13] {
            for e in 1..=3u8 {
                let pe = PrimePower::new(p, e).unwrap();
                let table = FactorialTable::new(pe, 6 * 40 + 8);
                let x_mod = PadicResidue::from_ratio(2, 3, &pe).unwrap();
                for kind in SequenceKind::all() {
                    let (exact, modt) = if kind.is_polynomial() {
                        (
                            generate_exact(kind, 40, Some(&x_exact)).unwrap(),
                            generate_mod(kind, 40, &table, Some(x_mod)).unwrap(),
                        )
                    } else {
                        (
                            generate_exact(kind, 40, None).unwrap(),
                            generate_mod(kind, 40, &table, None).unwrap(),
                        )
                    };
                    for n in 0..=40 {
                        let r = exact.entries.rat(n);
                        let denom_inv = crate::modarith::inv_mod_u64(
                            big_mod_u64(r.denom(), pe.modulus()),
                            pe.modulus(),
                        )
                        .unwrap();
                        let want = crate::modarith::mul_mod(
                            big_mod_u64(r.numer(), pe.modulus()),
                            denom_inv,
                            pe.modulus(),
                        );
                        assert_eq!(
                            modt.values[n],
                            want,
                            "kind={:?} p={p} e={e} n={n}",
                            kind
                        );
                    }
                }
            }
        }
    }
}
