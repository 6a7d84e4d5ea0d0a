//! Engine-level checks: category validation on the bundled data, duality for
//! composite objects, monoidal coherence of the tensor product, and the
//! 1-click rotation.

use qkit_core::category::{word_of_labels, Ctx, Object, Word};
use qkit_core::duality::TraceSide;
use qkit_core::linalg::C64;
use qkit_core::tol;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::path::Path;

fn load(name: &str) -> Ctx {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(format!("{name}.json"));
    let spec = qkit_core::io::load_category(&path).expect("category loads");
    Ctx::new(spec).expect("context builds")
}

const ALL: [&str; 5] = ["vec", "z2", "z3", "fib", "ising"];

#[test]
fn bundled_categories_validate() {
    for name in ALL {
        let ctx = load(name);
        let rep = ctx.validate_category(tol::CLEAN_DATA).unwrap();
        assert!(
            rep.pass(),
            "{name}: pentagon {:.2e} unitarity {:.2e} dims {:.2e} zigzag {:.2e} std {:.2e} bal {:.2e}",
            rep.pentagon_defect,
            rep.unitarity_defect,
            rep.dim_homomorphism_defect,
            rep.zigzag_defect,
            rep.standardness_defect,
            rep.balancing_defect
        );
    }
}

/// Every object of each bundled category, including composites: a handful of
/// multiplicity vectors exercising the object-level cups.
fn test_objects(ctx: &Ctx) -> Vec<Object> {
    let n = ctx.n_labels();
    let mut out: Vec<Object> = (0..n).map(|a| Object::simple(n, a)).collect();
    // the full regular object 1 (+) ... (+) a_n
    out.push(Object { mult: vec![1; n] });
    // something with multiplicity
    let mut m = vec![0; n];
    m[0] = 2;
    if n > 1 {
        m[n - 1] = 1;
    }
    out.push(Object { mult: m });
    out
}

#[test]
fn composite_zigzag_and_standardness() {
    for name in ALL {
        let ctx = load(name);
        for x in test_objects(&ctx) {
            let xbar = ctx.dual_object(&x);
            let xw: Word = vec![x.clone()];
            let xbw: Word = vec![xbar.clone()];
            let id_x = ctx.identity(&xw);
            let id_xb = ctx.identity(&xbw);
            // (id_x (x) ev_x)(S_x (x) id_x) = id_x
            let s1 = ctx
                .compose(
                    &ctx.tensor(&id_x, &ctx.cap_ev(&x)).unwrap(),
                    &ctx.tensor(&ctx.cup_s(&x), &id_x).unwrap(),
                )
                .unwrap();
            assert!(s1.distance(&id_x).unwrap() < tol::CLEAN_DATA, "{name}: snake 1");
            // (ev_x (x) id_xbar)(id_xbar (x) S_x) = id_xbar
            let s2 = ctx
                .compose(
                    &ctx.tensor(&ctx.cap_ev(&x), &id_xb).unwrap(),
                    &ctx.tensor(&id_xb, &ctx.cup_s(&x)).unwrap(),
                )
                .unwrap();
            assert!(s2.distance(&id_xb).unwrap() < tol::CLEAN_DATA, "{name}: snake 2");
            // standardness: R^* R = S^* S = d_x
            let d = C64::new(ctx.dim_object(&x), 0.0);
            let rr = ctx.compose(&ctx.cap_ev(&x), &ctx.cup_r(&x)).unwrap();
            let ss = ctx.compose(&ctx.cap_s(&x), &ctx.cup_s(&x)).unwrap();
            assert!((rr.scalar_value(&ctx) - d).norm() < tol::CLEAN_DATA, "{name}: R*R");
            assert!((ss.scalar_value(&ctx) - d).norm() < tol::CLEAN_DATA, "{name}: S*S");
        }
    }
}

fn small_words(ctx: &Ctx) -> Vec<Word> {
    let n = ctx.n_labels();
    let mut out: Vec<Word> = vec![Vec::new()];
    for a in 0..n {
        out.push(word_of_labels(n, &[a]));
    }
    out.push(word_of_labels(n, &[n - 1, n - 1]));
    out.push(word_of_labels(n, &[0, n - 1]));
    if n > 1 {
        out.push(word_of_labels(n, &[n - 1, 1, n - 1]));
    }
    out
}

#[test]
fn tensor_interchange_law() {
    for name in ALL {
        let ctx = load(name);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let words = small_words(&ctx);
        for w1 in &words {
            for w2 in &words {
                for w3 in words.iter().take(3) {
                    let f = ctx.random_morphism(w1, w2, &mut rng);
                    let fp = ctx.random_morphism(w3, w1, &mut rng);
                    let g = ctx.random_morphism(w2, w1, &mut rng);
                    let gp = ctx.random_morphism(w1, w2, &mut rng);
                    let lhs = ctx
                        .compose(
                            &ctx.tensor(&f, &g).unwrap(),
                            &ctx.tensor(&fp, &gp).unwrap(),
                        )
                        .unwrap();
                    let rhs = ctx
                        .tensor(
                            &ctx.compose(&f, &fp).unwrap(),
                            &ctx.compose(&g, &gp).unwrap(),
                        )
                        .unwrap();
                    assert!(
                        lhs.distance(&rhs).unwrap() < 1e-10,
                        "{name}: interchange failed"
                    );
                }
            }
        }
    }
}

#[test]
fn tensor_associativity_and_unit() {
    for name in ALL {
        let ctx = load(name);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let words = small_words(&ctx);
        let empty: Word = Vec::new();
        for w1 in words.iter().take(4) {
            for w2 in words.iter().take(4) {
                let f = ctx.random_morphism(w1, w2, &mut rng);
                let g = ctx.random_morphism(w2, w1, &mut rng);
                let h = ctx.random_morphism(w1, w1, &mut rng);
                let lhs = ctx.tensor(&ctx.tensor(&f, &g).unwrap(), &h).unwrap();
                let rhs = ctx.tensor(&f, &ctx.tensor(&g, &h).unwrap()).unwrap();
                assert!(
                    lhs.distance(&rhs).unwrap() < 1e-10,
                    "{name}: tensor associativity"
                );
                let unit = ctx.identity(&empty);
                let l = ctx.tensor(&unit, &f).unwrap();
                let r = ctx.tensor(&f, &unit).unwrap();
                assert!(l.distance(&f).unwrap() < 1e-12, "{name}: left unit");
                assert!(r.distance(&f).unwrap() < 1e-12, "{name}: right unit");
            }
        }
    }
}

#[test]
fn merge_unmerge_roundtrip() {
    use qkit_core::morphism::Side;
    for name in ALL {
        let ctx = load(name);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let n = ctx.n_labels();
        let w3 = word_of_labels(n, &[n - 1, 0, n - 1]);
        let w1 = word_of_labels(n, &[n - 1]);
        let f = ctx.random_morphism(&w3, &w1, &mut rng);
        for pos in 0..2 {
            let merged = ctx.merge_at(&f, Side::Src, pos);
            let sub: Word = w3[pos..pos + 2].to_vec();
            let back = ctx.unmerge_at(&merged, Side::Src, pos, &sub);
            assert!(back.distance(&f).unwrap() < 1e-12, "{name}: src merge roundtrip");
        }
        let g = ctx.random_morphism(&w1, &w3, &mut rng);
        for pos in 0..2 {
            let merged = ctx.merge_at(&g, Side::Tgt, pos);
            let sub: Word = w3[pos..pos + 2].to_vec();
            let back = ctx.unmerge_at(&merged, Side::Tgt, pos, &sub);
            assert!(back.distance(&g).unwrap() < 1e-12, "{name}: tgt merge roundtrip");
        }
        // merging is unitary: it preserves the hom-space inner product
        let h = ctx.random_morphism(&w3, &w1, &mut rng);
        let ip0 = ctx.inner_product(&f, &h).unwrap();
        let ip1 = ctx
            .inner_product(&ctx.merge_at(&f, Side::Src, 0), &ctx.merge_at(&h, Side::Src, 0))
            .unwrap();
        assert!((ip0 - ip1).norm() < 1e-10, "{name}: merge unitary");
    }
}

#[test]
fn conjugation_is_involutive_and_multiplicative() {
    for name in ALL {
        let ctx = load(name);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let n = ctx.n_labels();
        for w in [
            word_of_labels(n, &[n - 1]),
            word_of_labels(n, &[n - 1, n - 1]),
        ] {
            let f = ctx.random_morphism(&w, &w, &mut rng);
            let g = ctx.random_morphism(&w, &w, &mut rng);
            let ff = ctx.conjugate(&ctx.conjugate(&f).unwrap()).unwrap();
            let fr = ctx.cast_words(&ff, w.clone(), w.clone());
            assert!(fr.distance(&f).unwrap() < 1e-10, "{name}: double conjugate");
            // conj(f . g) = conj(f) . conj(g)
            let lhs = ctx.conjugate(&ctx.compose(&f, &g).unwrap()).unwrap();
            let rhs = ctx
                .compose(&ctx.conjugate(&f).unwrap(), &ctx.conjugate(&g).unwrap())
                .unwrap();
            assert!(lhs.distance(&rhs).unwrap() < 1e-10, "{name}: conj multiplicative");
            // trace is conjugation invariant up to complex conjugation
            let t0 = ctx.categorical_trace(&f);
            let t1 = ctx.categorical_trace(&ctx.conjugate(&f).unwrap());
            assert!((t0.conj() - t1).norm() < 1e-10, "{name}: conj trace");
        }
    }
}

#[test]
fn partial_traces_compose_to_categorical_trace() {
    for name in ALL {
        let ctx = load(name);
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let n = ctx.n_labels();
        let w = word_of_labels(n, &[n - 1, 0, n - 1]);
        let f = ctx.random_morphism(&w, &w, &mut rng);
        let mut cur = f.clone();
        for _ in 0..w.len() {
            cur = ctx.partial_trace(&cur, TraceSide::Right).unwrap();
        }
        let full = cur.scalar_value(&ctx);
        assert!(
            (full - ctx.categorical_trace(&f)).norm() < 1e-9,
            "{name}: iterated right trace"
        );
        let mut cur = f.clone();
        for _ in 0..w.len() {
            cur = ctx.partial_trace(&cur, TraceSide::Left).unwrap();
        }
        let full_l = cur.scalar_value(&ctx);
        assert!(
            (full_l - ctx.categorical_trace(&f)).norm() < 1e-9,
            "{name}: iterated left trace"
        );
    }
}

#[test]
fn fourier_rotation_is_weighted_isometry() {
    for name in ALL {
        let ctx = load(name);
        let n = ctx.n_labels();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if ctx.spec.n(a, b, c) == 0 {
                        continue;
                    }
                    for de in ctx.pair_isometries(c, a, b) {
                        // delta is an isometry
                        let dd = ctx.compose(&ctx.adjoint(&de), &de).unwrap();
                        assert!(
                            (dd.blocks[c][(0, 0)] - C64::new(1.0, 0.0)).norm() < 1e-10,
                            "{name}: delta isometry"
                        );
                        // (d_b/d_c)^{1/2} F(delta) is again an isometry
                        let w = (ctx.spec.dims[b] / ctx.spec.dims[c]).sqrt();
                        let rot = ctx.fourier(&de).unwrap().scale(C64::new(w, 0.0));
                        let rr = ctx.compose(&ctx.adjoint(&rot), &rot).unwrap();
                        let bbar = ctx.spec.dual[b];
                        assert!(
                            (rr.blocks[bbar][(0, 0)] - C64::new(1.0, 0.0)).norm() < 1e-9,
                            "{name}: rotated isometry ({a},{b},{c})"
                        );
                    }
                }
            }
        }
    }
}
