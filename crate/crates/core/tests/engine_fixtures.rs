//! Hand-verified anchors for the congruence engine: small-prime instances
//! whose left- and right-hand sides were computed by hand.

use franel::engine::{
    eval_sum, verify_case, NamedSeq, PrimeCtx, SeqFactor, SumSpec, WeightKind,
};
use franel::modarith::PadicResidue;

fn ctx(p: u64, e: u8) -> PrimeCtx {
    PrimeCtx::new(p, e).unwrap()
}

#[test]
fn eval_sum_franel_over_50_at_7() {
    // 50 = 1 (mod 7); terms are 1, 4, 4, 0, 0, 0, 0
    let c = ctx(7, 1);
    let s = eval_sum(
        &c,
        &SumSpec::new(
            WeightKind::Cb,
            SeqFactor::Named(NamedSeq::Franel),
            c.inv_ratio(50).unwrap(),
        ),
    )
    .unwrap();
    assert_eq!(s, 2);
}

#[test]
fn eval_sum_weight_product_at_7() {
    // sum C(2k,k)^2 C(3k,k)/108^k mod 7: terms 1, 4, 4, 0, ...
    let c = ctx(7, 1);
    let s = eval_sum(
        &c,
        &SumSpec::new(
            WeightKind::CbSqC3k,
            SeqFactor::One,
            c.inv_ratio(108).unwrap(),
        ),
    )
    .unwrap();
    assert_eq!(s, 2);
}

#[test]
fn eval_sum_suna_over_4_at_3() {
    // terms 1, 0, 0
    let c = ctx(3, 1);
    let s = eval_sum(
        &c,
        &SumSpec::new(
            WeightKind::Cb,
            SeqFactor::Named(NamedSeq::SunA),
            c.inv_ratio(4).unwrap(),
        ),
    )
    .unwrap();
    assert_eq!(s, 1);
}

#[test]
fn eval_sum_half_limit_cube_at_5() {
    // sum_{k<=2} C(2k,k)^3 / 64^k mod 5 = 1 + 2 + 1 = 4
    let c = ctx(5, 1);
    let s = eval_sum(
        &c,
        &SumSpec::new(
            WeightKind::CbCube,
            SeqFactor::One,
            c.inv_ratio(64).unwrap(),
        )
        .half(),
    )
    .unwrap();
    assert_eq!(s, 4);
}

#[test]
fn t22_at_7_holds_with_lhs_2() {
    // 7 = 2^2 + 3*1^2: LHS = 2 = 4*x^2 = 16 mod 7
    let (outs, skips) = verify_case("T2.2", 7, 5, 1, None).unwrap();
    assert!(skips.is_empty());
    assert_eq!(outs.len(), 1);
    assert_eq!(outs[0].lhs, 2);
    assert_eq!(outs[0].rhs, 2);
    assert!(outs[0].holds);
    let rep = outs[0].rep.unwrap();
    assert_eq!((rep.x, rep.y, rep.d), (2, 1, 3));
}

#[test]
fn t22_at_11_zero_branch() {
    // 11 = 2 (mod 3): zero branch
    let (outs, _) = verify_case("T2.2", 11, 5, 1, None).unwrap();
    assert_eq!(outs.len(), 1);
    assert_eq!(outs[0].rhs, 0);
    assert!(outs[0].holds, "lhs = {}", outs[0].lhs);
}

#[test]
fn t214_at_3_holds_with_lhs_1() {
    // 3 = 1^2 + 2*1^2: LHS = 1 = 4*1 mod 3
    let (outs, _) = verify_case("T2.14", 3, 5, 1, None).unwrap();
    assert_eq!(outs.len(), 1);
    assert_eq!(outs[0].lhs, 1);
    assert_eq!(outs[0].rhs, 1);
    assert!(outs[0].holds);
}

#[test]
fn e26_at_5_holds() {
    let (outs, _) = verify_case("E2.6", 5, 5, 1, None).unwrap();
    assert_eq!(outs.len(), 1);
    assert!(outs[0].holds);
}

#[test]
fn t37_at_11_both_sums_match_4xsq() {
    // 11 = 2^2 + 7: branch 4x^2 = 16 = 5 (mod 11); hand value of the
    // 7^k sum is 5
    let (outs, _) = verify_case("T3.7", 11, 5, 1, None).unwrap();
    assert_eq!(outs.len(), 2);
    for o in &outs {
        assert_eq!(o.rhs, 5);
        assert!(o.holds, "base {:?} lhs {}", o.params.get("base"), o.lhs);
    }
}

#[test]
fn t34_at_5_corrected_branch() {
    // LHS = 1 + 22 + 5 = 3 (mod 25); corrected RHS
    // (-1)^((p-1)/4) (2/p)(8x^3-6xp) = -(-1)(8-30) = 3 (mod 25)
    let (outs, _) = verify_case("T3.4", 5, 5, 1, None).unwrap();
    assert_eq!(outs.len(), 1);
    assert_eq!(outs[0].lhs, 3);
    assert_eq!(outs[0].rhs, 3);
    assert!(outs[0].holds);
}

#[test]
fn t34_zero_branch_at_7() {
    let (outs, _) = verify_case("T3.4", 7, 5, 1, None).unwrap();
    assert_eq!(outs.len(), 1);
    assert_eq!(outs[0].rhs, 0);
    assert!(outs[0].holds, "lhs = {}", outs[0].lhs);
}

#[test]
fn t213_at_5_is_zero_mod_25() {
    let (outs, _) = verify_case("T2.13", 5, 5, 1, None).unwrap();
    assert_eq!(outs.len(), 1);
    assert_eq!(outs[0].lhs, 0);
    assert!(outs[0].holds);
}

#[test]
fn e27_at_5_both_sides_zero() {
    let (outs, _) = verify_case("E2.7", 5, 5, 1, None).unwrap();
    assert_eq!(outs.len(), 1);
    assert_eq!(outs[0].lhs, 0);
    assert_eq!(outs[0].rhs, 0);
}

#[test]
fn skipped_when_hypothesis_fails() {
    // T2.2 requires p > 5
    let (outs, skips) = verify_case("T2.2", 5, 5, 1, None).unwrap();
    assert!(outs.is_empty());
    assert_eq!(skips.len(), 1);
}

#[test]
fn t311_at_7_skips_undefined_sum() {
    // 7 | 1568, so the second display sum is undefined at p = 7; the first
    // is still checked (7 = 7 mod 11: zero branch)
    let (outs, skips) = verify_case("T3.11", 7, 5, 1, None).unwrap();
    assert_eq!(outs.len(), 1);
    assert_eq!(skips.len(), 1);
    assert!(outs[0].holds);
}

#[test]
fn padic_zero_ratio_gives_constant_term() {
    // ratio 0: only the k = 0 term contributes
    let c = ctx(13, 1);
    let s = eval_sum(
        &c,
        &SumSpec::new(
            WeightKind::Cb,
            SeqFactor::Named(NamedSeq::Franel),
            PadicResidue::zero(),
        ),
    )
    .unwrap();
    assert_eq!(s, 1);
}
