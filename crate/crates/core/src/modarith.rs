//! Arithmetic in Z/p^e Z for odd primes p, e in {1, 2, 3}.
//!
//! Rationals whose numerator or denominator carries powers of p are tracked
//! as [`PadicResidue`] values: a p-adic valuation together with a unit part
//! known modulo p^e. [`FactorialTable`] supplies binomial coefficients with
//! exact p-valuations via Legendre's formula.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModArithError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("exponent {0} outside 1..=3")]
    BadExponent(u8),
    #[error("p^e overflows u64 for p = {0}, e = {1}")]
    Overflow(u64, u8),
    #[error("{0} is not invertible modulo {1}")]
    NotInvertible(i64, u64),
    #[error("{0} has no square root modulo {1}")]
    NoSquareRoot(i64, u64),
    #[error("index {0} outside factorial table bound {1}")]
    OutOfTable(u64, u64),
    #[error("valuation {0} is negative; residue cannot be canonicalized")]
    NegativeValuation(i64),
    #[error("division by zero")]
    DivisionByZero,
}

/// An odd prime power p^e with e in {1, 2, 3}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimePower {
    p: u64,
    e: u8,
    modulus: u64,
}

impl PrimePower {
    pub fn new(p: u64, e: u8) -> Result<Self, ModArithError> {
        if p < 3 || !is_prime(p) {
            return Err(ModArithError::NotOddPrime(p));
        }
        if !(1..=3).contains(&e) {
            return Err(ModArithError::BadExponent(e));
        }
        let mut modulus: u64 = 1;
        for _ in 0..e {
            modulus = modulus
                .checked_mul(p)
                .ok_or(ModArithError::Overflow(p, e))?;
        }
        // all products below go through u128, but p^{e+1} must stay in range
        // for the Fermat-quotient helper
        modulus
            .checked_mul(p)
            .ok_or(ModArithError::Overflow(p, e))?;
        Ok(PrimePower { p, e, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u8 {
        self.e
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// p^k for k <= e.
    pub fn p_pow(&self, k: u32) -> u64 {
        self.p.pow(k)
    }

    /// Canonical residue of a signed integer.
    pub fn reduce_signed(&self, n: i128) -> u64 {
        n.rem_euclid(self.modulus as i128) as u64
    }
}

/// Deterministic trial-division primality check; fine at desk scale.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// All primes in [lo, hi], ascending.
pub fn primes_in_range(lo: u64, hi: u64) -> Vec<u64> {
    assert!(2 <= lo && lo <= hi, "need 2 <= lo <= hi");
    let mut sieve = vec![true; (hi + 1) as usize];
    sieve[0] = false;
    if hi >= 1 {
        sieve[1] = false;
    }
    let mut i = 2u64;
    while i * i <= hi {
        if sieve[i as usize] {
            let mut j = i * i;
            while j <= hi {
                sieve[j as usize] = false;
                j += i;
            }
        }
        i += 1;
    }
    (lo..=hi).filter(|&n| sieve[n as usize]).collect()
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % m as u128) as u64
}

#[inline]
pub fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        m - (b - a) % m
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn extended_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if a == 0 {
        return (b, 0, 1);
    }
    let (g, x, y) = extended_gcd(b % a, a);
    (g, y - (b / a) * x, x)
}

/// Inverse of a modulo m, for any modulus m > 1.
pub fn inv_mod_u64(a: u64, m: u64) -> Result<u64, ModArithError> {
    let (g, x, _) = extended_gcd((a % m) as i128, m as i128);
    if g != 1 {
        return Err(ModArithError::NotInvertible(a as i64, m));
    }
    Ok(x.rem_euclid(m as i128) as u64)
}

/// Inverse of a modulo p^e.
pub fn inv_mod(a: i64, pe: &PrimePower) -> Result<u64, ModArithError> {
    let r = pe.reduce_signed(a as i128);
    if r % pe.p() == 0 {
        return Err(ModArithError::NotInvertible(a, pe.modulus()));
    }
    inv_mod_u64(r, pe.modulus())
}

/// Legendre symbol (a/p) via Euler's criterion.
pub fn legendre_symbol(a: i64, p: u64) -> Result<i8, ModArithError> {
    if p < 3 || !is_prime(p) {
        return Err(ModArithError::NotOddPrime(p));
    }
    let r = (a as i128).rem_euclid(p as i128) as u64;
    if r == 0 {
        return Ok(0);
    }
    let s = pow_mod(r, (p - 1) / 2, p);
    Ok(if s == 1 { 1 } else { -1 })
}

/// Square root of a modulo p, normalized to {1, ..., (p-1)/2}.
///
/// Tonelli-Shanks with a deterministic non-residue search, so output is
/// reproducible run to run.
pub fn sqrt_mod(a: i64, p: u64) -> Result<u64, ModArithError> {
    if p < 3 || !is_prime(p) {
        return Err(ModArithError::NotOddPrime(p));
    }
    let n = (a as i128).rem_euclid(p as i128) as u64;
    if n == 0 {
        return Err(ModArithError::NoSquareRoot(a, p));
    }
    if pow_mod(n, (p - 1) / 2, p) != 1 {
        return Err(ModArithError::NoSquareRoot(a, p));
    }
    let root = if p % 4 == 3 {
        pow_mod(n, (p + 1) / 4, p)
    } else {
        // write p-1 = q * 2^s with q odd
        let mut q = p - 1;
        let mut s = 0u32;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let mut z = 2u64;
        while pow_mod(z, (p - 1) / 2, p) != p - 1 {
            z += 1;
        }
        let mut m = s;
        let mut c = pow_mod(z, q, p);
        let mut t = pow_mod(n, q, p);
        let mut r = pow_mod(n, (q + 1) / 2, p);
        while t != 1 {
            let mut i = 0u32;
            let mut t2 = t;
            while t2 != 1 {
                t2 = mul_mod(t2, t2, p);
                i += 1;
            }
            let b = pow_mod(c, 1 << (m - i - 1), p);
            m = i;
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            r = mul_mod(r, b, p);
        }
        r
    };
    Ok(root.min(p - root))
}

/// A rational in Q_p as (valuation, unit mod p^e). `zero` marks the exact
/// zero, which has no finite valuation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PadicResidue {
    val: i64,
    unit: u64,
    zero: bool,
}

impl PadicResidue {
    pub fn zero() -> Self {
        PadicResidue {
            val: 0,
            unit: 0,
            zero: true,
        }
    }

    pub fn one() -> Self {
        PadicResidue {
            val: 0,
            unit: 1,
            zero: false,
        }
    }

    /// Split a plain residue into p-valuation and unit part. A residue that
    /// is 0 mod p^e is treated as zero (its true valuation is >= e, which is
    /// indistinguishable at this precision).
    pub fn from_residue(r: u64, pe: &PrimePower) -> Self {
        let r = r % pe.modulus();
        if r == 0 {
            return Self::zero();
        }
        let mut val = 0i64;
        let mut u = r;
        while u % pe.p() == 0 {
            u /= pe.p();
            val += 1;
        }
        PadicResidue {
            val,
            unit: u,
            zero: false,
        }
    }

    pub fn from_int(n: i128, pe: &PrimePower) -> Self {
        if n == 0 {
            return Self::zero();
        }
        let mut val = 0i64;
        let mut n = n;
        let p = pe.p() as i128;
        while n % p == 0 {
            n /= p;
            val += 1;
        }
        PadicResidue {
            val,
            unit: pe.reduce_signed(n),
            zero: false,
        }
    }

    /// Exact rational num/den as a p-adic value.
    pub fn from_ratio(num: i128, den: i128, pe: &PrimePower) -> Result<Self, ModArithError> {
        if den == 0 {
            return Err(ModArithError::DivisionByZero);
        }
        if num == 0 {
            return Ok(Self::zero());
        }
        let p = pe.p() as i128;
        let (mut num, mut den, mut val) = (num, den, 0i64);
        while num % p == 0 {
            num /= p;
            val += 1;
        }
        while den % p == 0 {
            den /= p;
            val -= 1;
        }
        let inv = inv_mod_u64(pe.reduce_signed(den), pe.modulus())?;
        Ok(PadicResidue {
            val,
            unit: mul_mod(pe.reduce_signed(num), inv, pe.modulus()),
            zero: false,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.zero
    }

    pub fn val(&self) -> i64 {
        self.val
    }

    pub fn unit(&self) -> u64 {
        self.unit
    }

    pub fn mul(self, other: Self, pe: &PrimePower) -> Self {
        if self.zero || other.zero {
            return Self::zero();
        }
        PadicResidue {
            val: self.val + other.val,
            unit: mul_mod(self.unit, other.unit, pe.modulus()),
            zero: false,
        }
    }

    pub fn neg(self, pe: &PrimePower) -> Self {
        if self.zero {
            return self;
        }
        PadicResidue {
            val: self.val,
            unit: pe.modulus() - self.unit,
            zero: false,
        }
    }

    pub fn inv(self, pe: &PrimePower) -> Result<Self, ModArithError> {
        if self.zero {
            return Err(ModArithError::DivisionByZero);
        }
        Ok(PadicResidue {
            val: -self.val,
            unit: inv_mod_u64(self.unit, pe.modulus())?,
            zero: false,
        })
    }

    pub fn pow(self, k: u64, pe: &PrimePower) -> Self {
        if k == 0 {
            return Self::one();
        }
        if self.zero {
            return Self::zero();
        }
        let val = self.val.saturating_mul(k as i64);
        PadicResidue {
            val,
            unit: pow_mod(self.unit, k, pe.modulus()),
            zero: false,
        }
    }

    /// Sum. Operands are lifted to the smaller valuation; cancellation deeper
    /// than the tracked precision collapses to zero, which is exact for every
    /// canonical image mod p^f, f <= e.
    pub fn add(self, other: Self, pe: &PrimePower) -> Self {
        if self.zero {
            return other;
        }
        if other.zero {
            return self;
        }
        let floor = self.val.min(other.val);
        let m = pe.modulus();
        let lift = |r: &PadicResidue| -> u64 {
            let shift = (r.val - floor) as u32;
            if shift >= pe.e() as u32 {
                0
            } else {
                mul_mod(r.unit, pe.p_pow(shift), m)
            }
        };
        let s = add_mod(lift(&self), lift(&other), m);
        if s == 0 {
            return Self::zero();
        }
        let mut val = floor;
        let mut u = s;
        while u % pe.p() == 0 {
            u /= pe.p();
            val += 1;
        }
        PadicResidue {
            val,
            unit: u,
            zero: false,
        }
    }

    /// Canonical residue mod p^e. Requires valuation >= 0.
    pub fn canonical(&self, pe: &PrimePower) -> Result<u64, ModArithError> {
        self.canonical_mod(pe, pe.e())
    }

    /// Canonical residue mod p^f for f <= e.
    pub fn canonical_mod(&self, pe: &PrimePower, f: u8) -> Result<u64, ModArithError> {
        debug_assert!(f <= pe.e());
        if self.zero {
            return Ok(0);
        }
        if self.val < 0 {
            return Err(ModArithError::NegativeValuation(self.val));
        }
        let m = pe.p_pow(f as u32);
        if self.val >= f as i64 {
            return Ok(0);
        }
        Ok(mul_mod(self.unit % m, pe.p_pow(self.val as u32), m))
    }

    /// True iff the canonical images mod p^f agree.
    pub fn congruent_mod(&self, other: &Self, pe: &PrimePower, f: u8) -> Result<bool, ModArithError> {
        Ok(self.canonical_mod(pe, f)? == other.canonical_mod(pe, f)?)
    }
}

/// Factorials with powers of p removed: for n < bound stores the unit part of
/// n! mod p^e, its inverse, and v_p(n!) = sum over i of floor(n / p^i).
pub struct FactorialTable {
    pe: PrimePower,
    unit: Vec<u64>,
    inv_unit: Vec<u64>,
    val: Vec<u32>,
}

impl FactorialTable {
    /// Table covering 0..bound. Callers evaluating C(6k,3k) for k <= p-1 need
    /// bound >= 6p - 5; `PrimeCtx` uses 6p + 2.
    pub fn new(pe: PrimePower, bound: u64) -> Self {
        let m = pe.modulus();
        let n = bound as usize;
        let mut unit = Vec::with_capacity(n);
        let mut val = Vec::with_capacity(n);
        unit.push(1u64);
        val.push(0u32);
        for i in 1..n as u64 {
            let mut v = 0u32;
            let mut u = i;
            while u % pe.p() == 0 {
                u /= pe.p();
                v += 1;
            }
            unit.push(mul_mod(unit[(i - 1) as usize], u % m, m));
            val.push(val[(i - 1) as usize] + v);
        }
        let mut inv_unit = vec![0u64; n];
        inv_unit[n - 1] = inv_mod_u64(unit[n - 1], m).expect("factorial unit is coprime to p");
        for i in (1..n as u64).rev() {
            let mut u = i;
            while u % pe.p() == 0 {
                u /= pe.p();
            }
            inv_unit[(i - 1) as usize] = mul_mod(inv_unit[i as usize], u % m, m);
        }
        FactorialTable {
            pe,
            unit,
            inv_unit,
            val,
        }
    }

    pub fn default_for(pe: PrimePower) -> Self {
        Self::new(pe, 6 * pe.p() + 2)
    }

    pub fn pe(&self) -> &PrimePower {
        &self.pe
    }

    pub fn bound(&self) -> u64 {
        self.unit.len() as u64
    }
}

/// C(top, bot) as a p-adic value with exact valuation.
pub fn binom_padic(top: u64, bot: u64, t: &FactorialTable) -> Result<PadicResidue, ModArithError> {
    if top >= t.bound() {
        return Err(ModArithError::OutOfTable(top, t.bound()));
    }
    if bot > top {
        return Ok(PadicResidue::zero());
    }
    let (top, bot) = (top as usize, bot as usize);
    let m = t.pe.modulus();
    let unit = mul_mod(
        t.unit[top],
        mul_mod(t.inv_unit[bot], t.inv_unit[top - bot], m),
        m,
    );
    Ok(PadicResidue {
        val: (t.val[top] - t.val[bot] - t.val[top - bot]) as i64,
        unit,
        zero: false,
    })
}

/// Fermat quotient q_p(2) = (2^{p-1} - 1)/p as a residue mod p^e, computed
/// from 2^{p-1} mod p^{e+1} so the division by p is exact.
pub fn fermat_quotient_2(pe: &PrimePower) -> u64 {
    let big = pe.modulus() * pe.p();
    let r = pow_mod(2, pe.p() - 1, big);
    ((r - 1) / pe.p()) % pe.modulus()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(p: u64, e: u8) -> PrimePower {
        PrimePower::new(p, e).unwrap()
    }

    #[test]
    fn primes_small_ranges() {
        assert_eq!(primes_in_range(2, 10), vec![2, 3, 5, 7]);
        assert_eq!(primes_in_range(24, 28), Vec::<u64>::new());
        assert_eq!(primes_in_range(990, 1010), vec![991, 997, 1009]);
    }

    #[test]
    fn primes_match_trial_division() {
        let sieved = primes_in_range(2, 2000);
        let trial: Vec<u64> = (2..=2000).filter(|&n| is_prime(n)).collect();
        assert_eq!(sieved, trial);
    }

    #[test]
    fn legendre_basics() {
        assert_eq!(legendre_symbol(1, 7).unwrap(), 1);
        assert_eq!(legendre_symbol(7, 7).unwrap(), 0);
        assert_eq!(legendre_symbol(2, 7).unwrap(), 1);
        assert!(legendre_symbol(2, 8).is_err());
        assert!(legendre_symbol(2, 2).is_err());
    }

    #[test]
    fn sqrt_mod_examples() {
        assert_eq!(sqrt_mod(-15, 17).unwrap(), 6);
        assert_eq!(sqrt_mod(4, 11).unwrap(), 2);
        assert_eq!(sqrt_mod(-1, 13).unwrap(), 5);
        assert_eq!(
            sqrt_mod(3, 7),
            Err(ModArithError::NoSquareRoot(3, 7))
        );
    }

    #[test]
    fn sqrt_mod_all_quadratic_residues() {
        for p in primes_in_range(3, 500) {
            for a in 1..p {
                if legendre_symbol(a as i64, p).unwrap() == 1 {
                    let t = sqrt_mod(a as i64, p).unwrap();
                    assert!(1 <= t && t <= (p - 1) / 2, "p={p} a={a} t={t}");
                    assert_eq!(mul_mod(t, t, p), a);
                }
            }
        }
    }

    #[test]
    fn inv_mod_examples() {
        assert_eq!(inv_mod(2, &pp(7, 1)).unwrap(), 4);
        assert_eq!(inv_mod(3, &pp(5, 2)).unwrap(), 17);
        assert!(matches!(
            inv_mod(5, &pp(5, 1)),
            Err(ModArithError::NotInvertible(5, 5))
        ));
    }

    #[test]
    fn binom_padic_examples() {
        // C(4,2) = 6 = 2 * 3: valuation 1 at p = 3, canonical 6 mod 9
        let t = FactorialTable::default_for(pp(3, 2));
        let b = binom_padic(4, 2, &t).unwrap();
        assert_eq!(b.val(), 1);
        assert_eq!(b.canonical(t.pe()).unwrap(), 6);

        // C(8,4) = 70 = 7 * 10
        let t = FactorialTable::default_for(pp(7, 2));
        let b = binom_padic(8, 4, &t).unwrap();
        assert_eq!(b.val(), 1);
        assert_eq!(b.unit(), 10);

        // C(12,6) = 924 = 11 * 84: p | C(2k,k) at k = (p+1)/2
        let t = FactorialTable::default_for(pp(11, 1));
        let b = binom_padic(12, 6, &t).unwrap();
        assert_eq!(b.val(), 1);
    }

    #[test]
    fn central_binomial_tail_is_divisible_by_p() {
        for p in [5u64, 7, 11, 13, 17] {
            let t = FactorialTable::default_for(pp(p, 1));
            for k in (p + 1) / 2..p {
                assert!(binom_padic(2 * k, k, &t).unwrap().val() >= 1);
            }
        }
    }

    #[test]
    fn padic_from_ratio() {
        let pe = pp(5, 2);
        // 5/3 has valuation 1
        let r = PadicResidue::from_ratio(5, 3, &pe).unwrap();
        assert_eq!(r.val(), 1);
        assert_eq!(r.unit(), 17);
        // 3/25 has valuation -2 and cannot canonicalize
        let r = PadicResidue::from_ratio(3, 25, &pe).unwrap();
        assert_eq!(r.val(), -2);
        assert!(r.canonical(&pe).is_err());
    }

    #[test]
    fn padic_add_cancellation() {
        let pe = pp(5, 3);
        let a = PadicResidue::from_int(7, &pe);
        let b = PadicResidue::from_int(-7 + 25, &pe);
        let s = a.add(b, &pe);
        assert_eq!(s.val(), 2);
        assert_eq!(s.canonical(&pe).unwrap(), 25);
    }

    #[test]
    fn fermat_quotient_small() {
        // q_5(2) = (16 - 1)/5 = 3
        assert_eq!(fermat_quotient_2(&pp(5, 1)), 3);
        assert_eq!(fermat_quotient_2(&pp(5, 2)), 3);
        // q_7(2) = (64 - 1)/7 = 9
        assert_eq!(fermat_quotient_2(&pp(7, 2)), 9);
    }
}
