//! Engine-level invariants: truncation equivalence, the random-sequence
//! transform of Lemma 2.1, specializations of the master equivalence, and
//! the mod-p^2 binomial congruence behind the 128^k case.

use franel::engine::{
    eval_sum, inner_binomial_transform, NamedSeq, PrimeCtx, SeqFactor, SumSpec, WeightKind,
};
use franel::modarith::{inv_mod_u64, mul_mod, primes_in_range, PadicResidue};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn full_and_half_limits_agree_when_weight_has_central_binomial() {
    // p | C(2k,k) for (p-1)/2 < k <= p-1, so the tail vanishes mod p
    let weights = [
        WeightKind::Cb,
        WeightKind::CbSq,
        WeightKind::CbCube,
        WeightKind::CbC3k,
        WeightKind::CbC4k2k,
        WeightKind::CbSqC3k,
        WeightKind::CbSqC4k2k,
        WeightKind::CbC3kC6k3k,
    ];
    let seqs = [
        NamedSeq::Franel,
        NamedSeq::Apery,
        NamedSeq::Domb,
        NamedSeq::SunA,
        NamedSeq::ClfS,
        NamedSeq::CNeg3,
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let primes = primes_in_range(5, 200);
    for i in 0..100 {
        let p = primes[rng.gen_range(0..primes.len())];
        let ctx = PrimeCtx::new(p, 1).unwrap();
        let w = weights[rng.gen_range(0..weights.len())].clone();
        let s = seqs[rng.gen_range(0..seqs.len())];
        let base = rng.gen_range(1..p);
        let alternate = rng.gen_bool(0.5);
        let mut spec = SumSpec::new(
            w,
            SeqFactor::Named(s),
            ctx.inv_ratio(base as i64).unwrap(),
        );
        spec.alternate = alternate;
        let full = eval_sum(&ctx, &spec).unwrap();
        let half = eval_sum(&ctx, &spec.clone().half()).unwrap();
        assert_eq!(full, half, "instance {i}: p={p} base={base}");
    }
}

#[test]
fn lemma_2_1_transform_on_random_sequences() {
    // 20 random sequences c and 5 random u per prime p < 200, independent of
    // any named sequence
    for p in primes_in_range(3, 200) {
        let ctx = PrimeCtx::new(p, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(p);
        for _ in 0..20 {
            let c: Vec<u64> = (0..p).map(|_| rng.gen_range(0..p)).collect();
            let inner = inner_binomial_transform(&ctx, &c).unwrap();
            for _ in 0..5 {
                let u = loop {
                    let u = rng.gen_range(0..p);
                    if u != 1 {
                        break u;
                    }
                };
                let om = (p + 1 - u) % p;
                let ratio = mul_mod(
                    u,
                    inv_mod_u64(mul_mod(om, om, p), p).unwrap(),
                    p,
                );
                let lhs = eval_sum(
                    &ctx,
                    &SumSpec::new(
                        WeightKind::Cb,
                        SeqFactor::Custom(c.clone()),
                        PadicResidue::from_residue(ratio, ctx.pe()),
                    ),
                )
                .unwrap();
                let rhs = eval_sum(
                    &ctx,
                    &SumSpec::new(
                        WeightKind::One,
                        SeqFactor::Custom(inner.clone()),
                        PadicResidue::from_residue(u, ctx.pe()),
                    ),
                )
                .unwrap();
                assert_eq!(lhs, rhs, "p={p} u={u}");
            }
        }
    }
}

#[test]
fn master_equivalence_and_its_specializations() {
    // the m-parameterized equivalence holds for 10 sampled m per prime, and
    // m = 2, 8, -1, -16 reproduce the fixed-base sums over 50, 32, -49, -4
    for p in primes_in_range(5, 200) {
        let ctx = PrimeCtx::new(p, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(p * 31);
        let mut ms: Vec<u64> = Vec::new();
        while ms.len() < 10 {
            let m = rng.gen_range(0..p);
            if m != 0 && (m + 4) % p != 0 && (m + 8) % p != 0 && !ms.contains(&m) {
                ms.push(m);
            }
        }
        for m in ms {
            let t1 = (m + 8) % p;
            let lhs_ratio = mul_mod(m, inv_mod_u64(mul_mod(t1, t1, p), p).unwrap(), p);
            let t2 = (m + 4) % p;
            let cube = mul_mod(mul_mod(t2, t2, p), t2, p);
            let rhs_ratio = mul_mod(m, inv_mod_u64(cube, p).unwrap(), p);
            let lhs = eval_sum(
                &ctx,
                &SumSpec::new(
                    WeightKind::Cb,
                    SeqFactor::Named(NamedSeq::Franel),
                    PadicResidue::from_residue(lhs_ratio, ctx.pe()),
                ),
            )
            .unwrap();
            let rhs = eval_sum(
                &ctx,
                &SumSpec::new(
                    WeightKind::CbSqC3k,
                    SeqFactor::One,
                    PadicResidue::from_residue(rhs_ratio, ctx.pe()),
                ),
            )
            .unwrap();
            assert_eq!(lhs, rhs, "p={p} m={m}");
        }
        // specializations: m/(m+8)^2 = 1/base for base in {50, 32, -49, -4}
        for (m, base) in [(2i64, 50i64), (8, 32), (-1, -49), (-16, -4)] {
            let m_res = ctx.residue(m as i128);
            if m_res == 0 || (m_res + 4) % p == 0 || (m_res + 8) % p == 0 || base % p as i64 == 0 {
                continue;
            }
            let t1 = (m_res + 8) % p;
            let ratio_param = mul_mod(m_res, inv_mod_u64(mul_mod(t1, t1, p), p).unwrap(), p);
            let ratio_fixed = ctx.inv(base).unwrap();
            assert_eq!(ratio_param, ratio_fixed, "p={p} m={m} base={base}");
            let sum_param = eval_sum(
                &ctx,
                &SumSpec::new(
                    WeightKind::Cb,
                    SeqFactor::Named(NamedSeq::Franel),
                    PadicResidue::from_residue(ratio_param, ctx.pe()),
                ),
            )
            .unwrap();
            let sum_fixed = eval_sum(
                &ctx,
                &SumSpec::new(
                    WeightKind::Cb,
                    SeqFactor::Named(NamedSeq::Franel),
                    ctx.inv_ratio(base).unwrap(),
                ),
            )
            .unwrap();
            assert_eq!(sum_param, sum_fixed, "p={p} m={m} base={base}");
        }
    }
}

#[test]
fn half_binomial_product_congruence_mod_p_squared() {
    // C((p-1)/2, k) C((p-1)/2 + k, k) = C(2k,k)^2 / (-16)^k (mod p^2)
    for p in primes_in_range(3, 200) {
        let ctx = PrimeCtx::new(p, 2).unwrap();
        let pe = *ctx.pe();
        let h = (p - 1) / 2;
        let inv16 = PadicResidue::from_residue(ctx.inv(-16).unwrap(), &pe);
        let mut pw = PadicResidue::one();
        for k in 0..=h {
            let lhs = ctx
                .binom(h, k)
                .unwrap()
                .mul(ctx.binom(h + k, k).unwrap(), &pe)
                .canonical(&pe)
                .unwrap();
            let cb = ctx.binom(2 * k, k).unwrap();
            let rhs = cb.mul(cb, &pe).mul(pw, &pe).canonical(&pe).unwrap();
            assert_eq!(lhs, rhs, "p={p} k={k}");
            pw = pw.mul(inv16, &pe);
        }
    }
}

#[test]
fn unfiltered_sweep_covers_every_case_once_per_eligible_prime() {
    use std::collections::HashSet;
    let primes = primes_in_range(5, 60);
    let report = franel::engine::verify_all(&primes, None, 2, 9, None).unwrap();
    let mut seen: HashSet<(String, u64)> = HashSet::new();
    for o in &report.records {
        seen.insert((o.case_id.clone(), o.p));
    }
    for s in &report.skips {
        seen.insert((s.case_id.clone(), s.p));
    }
    for case in franel::engine::registry::CASES {
        for &p in &primes {
            if (case.pred)(p) {
                assert!(
                    seen.contains(&(case.id.to_string(), p)),
                    "{} not covered at p={p}",
                    case.id
                );
            }
        }
    }
}
