//! Acceptance gate: one test per acceptance criterion, each printing a
//! single PASS/FAIL line (visible with `cargo test -- --nocapture`).
//! All tolerances are pinned in this file.

use qkit_core::algebra::{AlgebraMorphism, AlgebraObject};
use qkit_core::category::Ctx;
use qkit_core::linalg::{self, C64};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::path::{Path, PathBuf};
use std::process::Command;

const TOL: f64 = 1e-9;
const CLEAN: f64 = 1e-10;
const ORACLE: f64 = 1e-12;
const NEGATIVE: f64 = 1e-4;

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn load(name: &str) -> Ctx {
    let path = data_dir().join(format!("{name}.json"));
    let spec = qkit_core::io::load_category(&path).expect("category loads");
    Ctx::new(spec).expect("context builds")
}

fn battery() -> Vec<(&'static str, Ctx, AlgebraObject)> {
    let mut out = Vec::new();
    let ctx = load("vec");
    let alg = ctx.trivial_qsystem();
    out.push(("vec/trivial", ctx, alg));
    let ctx = load("z2");
    let alg = ctx.group_algebra().unwrap();
    out.push(("z2/group", ctx, alg));
    let ctx = load("z3");
    let alg = ctx.group_algebra().unwrap();
    out.push(("z3/group", ctx, alg));
    let ctx = load("fib");
    let tau = ctx.spec.label_index("tau").unwrap();
    let alg = ctx.inner_hom_qsystem(tau).unwrap();
    out.push(("fib/tau-taubar", ctx, alg));
    let ctx = load("ising");
    let sigma = ctx.spec.label_index("sigma").unwrap();
    let alg = ctx.inner_hom_qsystem(sigma).unwrap();
    out.push(("ising/sigma-sigmabar", ctx, alg));
    out
}

fn verdict(criterion: &str, ok: bool) {
    println!(
        "acceptance {criterion}: {}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "acceptance {criterion} failed");
}

/// A seeded additive perturbation of the multiplication.
fn perturbed(ctx: &Ctx, alg: &AlgebraObject, seed: u64, scale: f64) -> AlgebraObject {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let noise = ctx
        .random_morphism(&alg.word2(), &alg.word(), &mut rng)
        .scale(C64::new(scale, 0.0));
    let mut out = alg.clone();
    out.m = out.m.add(&noise).unwrap();
    out
}

#[test]
fn criterion_1_category_validation() {
    let mut ok = true;
    for name in ["z2", "z3", "fib", "ising"] {
        let ctx = load(name);
        let v = ctx.validate_category(CLEAN).unwrap();
        ok &= v.pass();
    }
    verdict("1 (bundled categories validate, max defect < 1e-10)", ok);
}

#[test]
fn criterion_2_qsystem_ladder_and_dimensions() {
    let expected = [1.0, 2.0, 3.0, (1.0 + 5f64.sqrt()) / 2.0 + 1.0, 2.0];
    let mut ok = true;
    for ((_, ctx, alg), d_expected) in battery().into_iter().zip(expected) {
        let q = ctx.qsystem_check(&alg, TOL).unwrap();
        ok &= q.is_qsystem && q.normalized && q.connected;
        ok &= (q.lambda_prime - 1.0).abs() < TOL;
        ok &= (q.d_a - d_expected).abs() < TOL;
        // seeded negative control: a perturbed multiplication fails loudly
        if ctx.dim_object(&alg.a) > 1.0 + TOL {
            let bad = perturbed(&ctx, &alg, 7, 1e-2);
            let qb = ctx.qsystem_check(&bad, TOL).unwrap();
            ok &= !qb.is_qsystem && qb.max_ladder_defect() > NEGATIVE;
        }
    }
    verdict("2 (Q-system ladder, d_A values, negative controls)", ok);
}

#[test]
fn criterion_3_condition_equivalence() {
    // The three characterizations of a Q-system — standardness of the pair
    // R = S = m* i, the loop value R* R = d_A, and unitarity of sigma_L —
    // must agree (all-pass or all-fail) on the battery and on >= 20 seeded
    // perturbations of it.
    let mut ok = true;
    let mut cases = 0usize;
    for (_, ctx, alg) in battery() {
        let mut algs = vec![alg.clone()];
        for seed in 0..4u64 {
            algs.push(perturbed(&ctx, &alg, seed, 1e-2));
        }
        for a in algs {
            let q = ctx.qsystem_check(&a, TOL).unwrap();
            let c1 = q.cond1_defect <= TOL;
            let c2 = q.cond2_defect <= TOL;
            let c3 = q.sigma_unitarity_defect <= TOL;
            ok &= c1 == c2 && c2 == c3;
            cases += 1;
        }
    }
    ok &= cases >= 25;
    verdict("3 (three Q-system conditions agree on battery + 20 perturbations)", ok);
}

#[test]
fn criterion_4_projector_lemmas() {
    let mut ok = true;
    for (_, ctx, alg) in battery() {
        let w = ctx.wstar_object(&alg, TOL).unwrap();
        let pp = ctx.build_p(&w).unwrap();
        ok &= ctx.check_p(&pp, TOL).unwrap().pass();
        ok &= ctx.check_p_lemmas(&w, &pp, TOL).unwrap().pass();
        ok &= ctx.check_p_absorbs_pi(&w, &pp).unwrap() < TOL;
        for c in 0..ctx.n_labels() {
            ok &= pp.ranks[c] == w.sector_dim(c);
        }
        // p is independent of the ONB choice: re-mix each sector's ONB by a
        // random unitary and rebuild p
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut w2 = w.clone();
        for a in 0..ctx.n_labels() {
            let n = w.sector_dim(a);
            if n == 0 {
                continue;
            }
            let mut raw = linalg::zeros(n, n);
            for v in raw.iter_mut() {
                *v = C64::new(rng_f(&mut rng), rng_f(&mut rng));
            }
            let u = linalg::orthonormal_column_basis(&raw, 1e-12);
            assert_eq!(u.ncols(), n, "re-mixing matrix must be unitary");
            let mut new_onb = Vec::with_capacity(n);
            for k in 0..n {
                let mut f = w.onb[a][0].scale(u[(0, k)]);
                for j in 1..n {
                    f = f.add(&w.onb[a][j].scale(u[(j, k)])).unwrap();
                }
                new_onb.push(f);
            }
            let d_a = ctx.spec.dims[a].sqrt();
            w2.b[a] = new_onb
                .iter()
                .map(|f| {
                    ctx.induced_pi(&w, f)
                        .unwrap()
                        .scale(C64::new(d_a, 0.0))
                })
                .collect();
            w2.onb[a] = new_onb;
        }
        let pp2 = ctx.build_p(&w2).unwrap();
        ok &= pp2.p.distance(&pp.p).unwrap() < TOL;
    }
    verdict("4 (projector identities, ranks, ONB-independence of p)", ok);
}

fn rng_f<R: rand::Rng>(rng: &mut R) -> f64 {
    rng.gen_range(-1.0..1.0)
}

#[test]
fn criterion_5_delta_identities_and_oracle() {
    let mut ok = true;
    for (_, ctx, alg) in battery() {
        let w = ctx.wstar_object(&alg, TOL).unwrap();
        ok &= ctx.check_delta_identities(&w, TOL).unwrap().pass();
    }
    // frozen oracle: in the Z/2 group algebra every nonzero tetrahedral
    // constant has modulus 2^{-1/2}, and Delta(g,g,1) in particular
    let ctx = load("z2");
    let alg = ctx.group_algebra().unwrap();
    let w = ctx.wstar_object(&alg, TOL).unwrap();
    let table = ctx.tetra_delta(&w).unwrap();
    let g = ctx.spec.label_index("g").unwrap();
    let one = ctx.unit();
    let oracle = 0.5f64.sqrt();
    let e = table.channels[&(g, g, one)][0][0][0][0];
    ok &= (e.norm() - oracle).abs() < ORACLE;
    verdict("5 (Delta identities on battery; Z/2 value vs closed-diagram oracle)", ok);
}

#[test]
fn criterion_6_round_trip_isomorphisms() {
    let mut ok = true;
    for (_, ctx, alg) in battery() {
        let w = ctx.wstar_object(&alg, TOL).unwrap();
        let pp = ctx.build_p(&w).unwrap();
        let qd = ctx.build_q(&w, &pp).unwrap();
        ok &= qd.alg.a.mult == alg.a.mult;
        ok &= ctx.eta_report(&w, &qd, TOL).unwrap().pass();
        ok &= ctx.zeta_report(&w, &qd, TOL).unwrap().pass();

        // functoriality on the morphism battery: the unit inclusion
        // theta: 1 -> A, plus identity preservation Q(id) = p and the
        // composite Q(id . theta) = Q(id) Q(theta)
        let triv = ctx.trivial_qsystem();
        let unit_w = qkit_core::category::word_of_labels(ctx.n_labels(), &[ctx.unit()]);
        let theta = ctx.cast_words(&alg.i, unit_w, alg.word());
        let am = AlgebraMorphism {
            theta,
            source: triv.clone(),
            target: alg.clone(),
        };
        let wa = ctx.wstar_object(&triv, TOL).unwrap();
        let pa = ctx.build_p(&wa).unwrap();
        let qa = ctx.build_q(&wa, &pa).unwrap();
        let qm = ctx.q_morphism(&am, &wa, &w, &qa, &qd).unwrap();
        ok &= ctx
            .check_q_morphism(&am, &wa, &w, &pa, &pp, &qa, &qd, &qm, TOL)
            .unwrap()
            .pass();
        ok &= ctx.check_naturality(&am, &wa, &w, &qa, &qd, &qm).unwrap() < TOL;

        let ident = AlgebraMorphism {
            theta: ctx.identity(&alg.word()),
            source: alg.clone(),
            target: alg.clone(),
        };
        let qid = ctx.q_morphism(&ident, &w, &w, &qd, &qd).unwrap();
        ok &= qid.q_theta.distance(&pp.p).unwrap() < TOL;
        let composite = ctx.compose(&qid.q_theta, &qm.q_theta).unwrap();
        ok &= composite.distance(&qm.q_theta).unwrap() < TOL;
    }
    verdict("6 (eta/zeta isomorphisms, naturality, functor laws)", ok);
}

#[test]
fn criterion_7_dimension_bookkeeping() {
    let mut ok = true;
    for (name, ctx, alg) in battery() {
        let w = ctx.wstar_object(&alg, TOL).unwrap();
        ok &= ctx.dimension_sum_defect(&w) < TOL;
        if name == "fib/tau-taubar" {
            // golden-ratio instance: 1 + phi = phi^2
            let phi = (1.0 + 5f64.sqrt()) / 2.0;
            ok &= (w.d_h - (1.0 + phi)).abs() < TOL;
            ok &= (w.d_h - phi * phi).abs() < TOL;
        }
    }
    verdict("7 (sum_a dim C(a,A) d_a = d_H, incl. 1 + phi = phi^2)", ok);
}

#[test]
fn criterion_8_deterministic_reports() {
    let exe = env!("CARGO_BIN_EXE_qkit");
    let run = || {
        let out = Command::new(exe)
            .args([
                "roundtrip",
                "--category",
                data_dir().join("fib.json").to_str().unwrap(),
                "--algebra",
                data_dir().join("algebras/fib_tau.json").to_str().unwrap(),
                "--seed",
                "42",
                "--format",
                "json",
            ])
            .output()
            .expect("qkit roundtrip runs");
        assert!(out.status.success(), "roundtrip exits 0");
        out.stdout
    };
    let first = run();
    let second = run();
    verdict("8 (same-seed roundtrip reports are byte-identical)", first == second);
}
