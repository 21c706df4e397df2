//! Property tests for the Z/p^e Z layer.

use franel::modarith::{
    binom_padic, inv_mod_u64, legendre_symbol, mul_mod, pow_mod, primes_in_range, FactorialTable,
    PadicResidue, PrimePower,
};
use franel::sequences::{big_mod_u64, binomial};
use proptest::prelude::*;

const SMALL_PRIMES: &[u64] = &[3, 5, 7, 11, 13, 17, 23, 29, 41, 53, 71, 97];

fn prime_and_exp() -> impl Strategy<Value = (u64, u8)> {
    (0..SMALL_PRIMES.len(), 1u8..=3).prop_map(|(i, e)| (SMALL_PRIMES[i], e))
}

proptest! {
    #[test]
    fn binom_padic_matches_exact_binomial(
        (p, e) in prime_and_exp(),
        n in 0u64..400,
        frac in 0.0f64..=1.0,
    ) {
        let pe = PrimePower::new(p, e).unwrap();
        let ft = FactorialTable::new(pe, 401);
        let k = (n as f64 * frac) as u64;
        let got = binom_padic(n, k, &ft).unwrap().canonical(&pe).unwrap();
        let want = big_mod_u64(&binomial(n, k), pe.modulus());
        prop_assert_eq!(got, want, "C({}, {}) mod {}^{}", n, k, p, e);
    }

    #[test]
    fn legendre_matches_euler_criterion(
        pi in 0..SMALL_PRIMES.len(),
        a in 1i64..1000,
    ) {
        let p = SMALL_PRIMES[pi];
        let sym = legendre_symbol(a, p).unwrap();
        let euler = pow_mod(a as u64 % p, (p - 1) / 2, p);
        let sym_as_residue = match sym {
            1 => 1,
            -1 => p - 1,
            _ => 0,
        };
        prop_assert_eq!(euler, sym_as_residue);
    }

    #[test]
    fn legendre_is_multiplicative(
        pi in 0..SMALL_PRIMES.len(),
        a in 1i64..500,
        b in 1i64..500,
    ) {
        let p = SMALL_PRIMES[pi];
        let ab = legendre_symbol(a * b, p).unwrap();
        let sep = legendre_symbol(a, p).unwrap() * legendre_symbol(b, p).unwrap();
        prop_assert_eq!(ab, sep);
    }

    #[test]
    fn padic_mul_is_associative_and_valuations_add(
        (p, e) in prime_and_exp(),
        a in 1i128..10_000,
        b in 1i128..10_000,
        c in 1i128..10_000,
    ) {
        let pe = PrimePower::new(p, e).unwrap();
        let (x, y, z) = (
            PadicResidue::from_int(a, &pe),
            PadicResidue::from_int(b, &pe),
            PadicResidue::from_int(c, &pe),
        );
        let left = x.mul(y, &pe).mul(z, &pe);
        let right = x.mul(y.mul(z, &pe), &pe);
        prop_assert_eq!(left, right);
        prop_assert_eq!(x.mul(y, &pe).val(), x.val() + y.val());
    }

    #[test]
    fn padic_add_agrees_with_exact_arithmetic(
        (p, e) in prime_and_exp(),
        a in 0i128..100_000,
        b in 0i128..100_000,
    ) {
        let pe = PrimePower::new(p, e).unwrap();
        let x = PadicResidue::from_int(a, &pe);
        let y = PadicResidue::from_int(b, &pe);
        let got = x.add(y, &pe).canonical(&pe).unwrap();
        prop_assert_eq!(got, pe.reduce_signed(a + b));
    }

    #[test]
    fn padic_inverse_roundtrip(
        (p, e) in prime_and_exp(),
        a in 1u64..100_000,
    ) {
        let pe = PrimePower::new(p, e).unwrap();
        prop_assume!(a % p != 0);
        let x = PadicResidue::from_residue(a % pe.modulus(), &pe);
        let prod = x.mul(x.inv(&pe).unwrap(), &pe);
        prop_assert_eq!(prod.canonical(&pe).unwrap(), 1);
    }

    #[test]
    fn inv_mod_u64_roundtrip(
        (p, e) in prime_and_exp(),
        a in 1u64..100_000,
    ) {
        let pe = PrimePower::new(p, e).unwrap();
        prop_assume!(a % p != 0);
        let m = pe.modulus();
        let inv = inv_mod_u64(a % m, m).unwrap();
        prop_assert_eq!(mul_mod(a % m, inv, m), 1);
    }
}

#[test]
fn factorial_valuation_matches_legendre_formula() {
    for &p in &[3u64, 7, 13] {
        let pe = PrimePower::new(p, 1).unwrap();
        let ft = FactorialTable::new(pe, 500);
        // spot-check v_p(n!) = sum floor(n/p^i) through binomials:
        // v_p(C(2n, n)) = v(2n)! - 2 v(n)!
        for n in 0..250u64 {
            let direct: u32 = {
                let mut s = 0u32;
                let mut q = 2 * n;
                while q > 0 {
                    q /= p;
                    s += q as u32;
                }
                let mut t = 0u32;
                let mut q = n;
                while q > 0 {
                    q /= p;
                    t += q as u32;
                }
                s - 2 * t
            };
            assert_eq!(
                binom_padic(2 * n, n, &ft).unwrap().val(),
                direct as i64,
                "p={p} n={n}"
            );
        }
    }
}

#[test]
fn primes_in_range_endpoints() {
    assert_eq!(primes_in_range(3, 3), vec![3]);
    assert_eq!(primes_in_range(4, 4), Vec::<u64>::new());
}
