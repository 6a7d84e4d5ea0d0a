//! Randomized property tests: structural laws that must hold for arbitrary
//! morphisms, driven by proptest-chosen seeds.

use proptest::prelude::*;
use qkit_core::category::{word_of_labels, Ctx, Word};
use qkit_core::morphism::Side;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::path::Path;

fn load(name: &str) -> Ctx {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(format!("{name}.json"));
    Ctx::new(qkit_core::io::load_category(&path).unwrap()).unwrap()
}

fn contexts() -> Vec<Ctx> {
    vec![load("z2"), load("fib"), load("ising")]
}

/// A short random word of simple letters.
fn random_word<R: Rng>(ctx: &Ctx, rng: &mut R, max_len: usize) -> Word {
    let len = rng.gen_range(1..=max_len);
    let labels: Vec<usize> = (0..len).map(|_| rng.gen_range(0..ctx.n_labels())).collect();
    word_of_labels(ctx.n_labels(), &labels)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn inner_product_is_positive_definite(seed in any::<u64>(), which in 0usize..3) {
        let ctx = &contexts()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let src = random_word(ctx, &mut rng, 2);
        let tgt = random_word(ctx, &mut rng, 2);
        let f = ctx.random_morphism(&src, &tgt, &mut rng);
        let g = ctx.random_morphism(&src, &tgt, &mut rng);
        let ff = ctx.inner_product(&f, &f).unwrap();
        prop_assert!(ff.im.abs() < 1e-10);
        prop_assert!(ff.re >= -1e-10);
        if f.max_abs() > 1e-6 {
            prop_assert!(ff.re > 0.0);
        }
        // sesquilinear symmetry
        let fg = ctx.inner_product(&f, &g).unwrap();
        let gf = ctx.inner_product(&g, &f).unwrap();
        prop_assert!((fg - gf.conj()).norm() < 1e-9);
    }

    #[test]
    fn adjoint_is_involutive_and_contravariant(seed in any::<u64>(), which in 0usize..3) {
        let ctx = &contexts()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_word(ctx, &mut rng, 2);
        let b = random_word(ctx, &mut rng, 2);
        let c = random_word(ctx, &mut rng, 2);
        let f = ctx.random_morphism(&a, &b, &mut rng);
        let g = ctx.random_morphism(&b, &c, &mut rng);
        prop_assert!(ctx.adjoint(&ctx.adjoint(&f)).distance(&f).unwrap() < 1e-12);
        let lhs = ctx.adjoint(&ctx.compose(&g, &f).unwrap());
        let rhs = ctx.compose(&ctx.adjoint(&f), &ctx.adjoint(&g)).unwrap();
        prop_assert!(lhs.distance(&rhs).unwrap() < 1e-9);
    }

    #[test]
    fn interchange_law(seed in any::<u64>(), which in 0usize..3) {
        let ctx = &contexts()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a1 = random_word(ctx, &mut rng, 2);
        let b1 = random_word(ctx, &mut rng, 2);
        let c1 = random_word(ctx, &mut rng, 2);
        let a2 = random_word(ctx, &mut rng, 2);
        let b2 = random_word(ctx, &mut rng, 2);
        let c2 = random_word(ctx, &mut rng, 2);
        let f1 = ctx.random_morphism(&a1, &b1, &mut rng);
        let g1 = ctx.random_morphism(&b1, &c1, &mut rng);
        let f2 = ctx.random_morphism(&a2, &b2, &mut rng);
        let g2 = ctx.random_morphism(&b2, &c2, &mut rng);
        let lhs = ctx
            .tensor(&ctx.compose(&g1, &f1).unwrap(), &ctx.compose(&g2, &f2).unwrap())
            .unwrap();
        let rhs = ctx
            .compose(&ctx.tensor(&g1, &g2).unwrap(), &ctx.tensor(&f1, &f2).unwrap())
            .unwrap();
        prop_assert!(lhs.distance(&rhs).unwrap() < 1e-9);
    }

    #[test]
    fn merge_unmerge_roundtrip(seed in any::<u64>(), which in 0usize..3) {
        let ctx = &contexts()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let src = random_word(ctx, &mut rng, 3);
        let tgt = random_word(ctx, &mut rng, 3);
        let f = ctx.random_morphism(&src, &tgt, &mut rng);
        if src.len() >= 2 {
            let merged = ctx.merge_at(&f, Side::Src, 0);
            let back = ctx.unmerge_at(&merged, Side::Src, 0, &src[0..2].to_vec());
            prop_assert!(back.distance(&f).unwrap() < 1e-10);
        }
        if tgt.len() >= 2 {
            let merged = ctx.merge_at(&f, Side::Tgt, 0);
            let back = ctx.unmerge_at(&merged, Side::Tgt, 0, &tgt[0..2].to_vec());
            prop_assert!(back.distance(&f).unwrap() < 1e-10);
        }
    }

    #[test]
    fn trace_is_conjugation_invariant(seed in any::<u64>(), which in 0usize..3) {
        let ctx = &contexts()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = random_word(ctx, &mut rng, 2);
        let f = ctx.random_morphism(&w, &w, &mut rng);
        let t = ctx.categorical_trace(&f);
        let tc = ctx.categorical_trace(&ctx.conjugate(&f).unwrap());
        prop_assert!((t - tc.conj()).norm() < 1e-9);
    }
}
