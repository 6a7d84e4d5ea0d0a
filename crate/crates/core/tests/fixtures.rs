//! The bundled algebra fixtures stay consistent with the in-code generators
//! and with their intended verification outcomes.

use qkit_core::category::Ctx;
use qkit_core::tol;
use std::path::{Path, PathBuf};

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn load_ctx(name: &str) -> Ctx {
    let spec = qkit_core::io::load_category(&data_dir().join(format!("{name}.json"))).unwrap();
    Ctx::new(spec).unwrap()
}

fn load_alg(ctx: &Ctx, file: &str) -> qkit_core::algebra::AlgebraObject {
    qkit_core::io::load_algebra(ctx, &data_dir().join("algebras").join(file)).unwrap()
}

type Generator = fn(&Ctx) -> qkit_core::algebra::AlgebraObject;

#[test]
fn fixtures_match_generators() {
    let cases: [(&str, &str, Generator); 6] = [
        ("vec", "vec_trivial.json", |c| c.trivial_qsystem()),
        ("z2", "z2_trivial.json", |c| c.trivial_qsystem()),
        ("z2", "z2_group.json", |c| c.group_algebra().unwrap()),
        ("z3", "z3_group.json", |c| c.group_algebra().unwrap()),
        ("fib", "fib_tau.json", |c| {
            c.inner_hom_qsystem(c.spec.label_index("tau").unwrap()).unwrap()
        }),
        ("ising", "ising_sigma.json", |c| {
            c.inner_hom_qsystem(c.spec.label_index("sigma").unwrap()).unwrap()
        }),
    ];
    for (cat, file, gen) in cases {
        let ctx = load_ctx(cat);
        let alg = load_alg(&ctx, file);
        let reference = gen(&ctx);
        assert_eq!(alg.a.mult, reference.a.mult, "{file}: object");
        assert!(alg.m.distance(&reference.m).unwrap() < 1e-12, "{file}: m");
        assert!(alg.i.distance(&reference.i).unwrap() < 1e-12, "{file}: i");
    }
}

#[test]
fn fixture_outcomes() {
    let ctx = load_ctx("fib");
    let raw = load_alg(&ctx, "fib_tau_unnormalized.json");
    let q = ctx.qsystem_check(&raw, tol::DEFAULT).unwrap();
    assert!(q.is_qsystem && !q.normalized, "unnormalized fixture");
    let fixed = ctx.normalize_qsystem(&raw, tol::DEFAULT).unwrap();
    let q = ctx.qsystem_check(&fixed, tol::DEFAULT).unwrap();
    assert!(q.is_qsystem && q.normalized, "normalizes cleanly");

    let ctx = load_ctx("z2");
    let bad = load_alg(&ctx, "z2_group_perturbed.json");
    let q = ctx.qsystem_check(&bad, tol::DEFAULT).unwrap();
    assert!(
        !q.is_qsystem && q.max_ladder_defect() > tol::NEGATIVE_CONTROL,
        "perturbed fixture must fail loudly"
    );
}

#[test]
fn morphism_fixture_is_involutive() {
    let ctx = load_ctx("z2");
    let text =
        std::fs::read_to_string(data_dir().join("algebras/z2_unit_inclusion.json")).unwrap();
    let mf: qkit_core::io::MorphismFile = serde_json::from_str(&text).unwrap();
    let src = load_alg(&ctx, &mf.source);
    let tgt = load_alg(&ctx, &mf.target);
    let theta = qkit_core::io::load_morphism_blocks(&ctx, &mf, &src.a, &tgt.a).unwrap();
    let am = qkit_core::algebra::AlgebraMorphism {
        theta,
        source: src,
        target: tgt,
    };
    let inv = ctx.check_involutive(&am, tol::DEFAULT).unwrap();
    assert!(inv.pass(), "unit inclusion fixture: {inv:?}");
}
