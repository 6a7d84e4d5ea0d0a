//! W*-side construction, projector battery, and round-trip isomorphisms on
//! the bundled Q-systems.

use qkit_core::algebra::{AlgebraMorphism, AlgebraObject};
use qkit_core::category::Ctx;
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

#[test]
fn wstar_construction_and_star_axioms() {
    for (name, ctx, alg) in battery() {
        let w = ctx.wstar_object(&alg, tol::DEFAULT).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let star = ctx.check_star_axioms(&w, tol::DEFAULT, &mut rng).unwrap();
        assert!(
            star.pass(),
            "{name}: nat {:.2e} invol {:.2e} unital {:.2e} monoidal {:.2e} pos {:.2e}",
            star.conjugate_naturality_defect,
            star.involutive_defect,
            star.unital_defect,
            star.monoidal_defect,
            star.positivity_defect,
        );
        assert!(ctx.h_equals_a_defect(&w).unwrap() < 1e-9, "{name}: L2 gram");
        assert!(ctx.traciality_defect(&w).unwrap() < 1e-9, "{name}: traciality");
        assert!(
            ctx.lambda_pairing_defect(&w).unwrap() < 1e-9,
            "{name}: lambda pairing"
        );
        assert!(ctx.pi_pairing_defect(&w).unwrap() < 1e-9, "{name}: pi pairing");
        assert!(
            ctx.b_orthonormality_defect(&w).unwrap() < 1e-9,
            "{name}: B_a orthonormality"
        );
        assert!(ctx.dimension_sum_defect(&w) < 1e-9, "{name}: dim sum");
        assert!(ctx.lambda_faithful(&w).unwrap(), "{name}: lambda faithful");
    }
}

#[test]
fn projector_battery() {
    for (name, ctx, alg) in battery() {
        let w = ctx.wstar_object(&alg, tol::DEFAULT).unwrap();
        let pp = ctx.build_p(&w).unwrap();
        let prep = ctx.check_p(&pp, tol::DEFAULT).unwrap();
        assert!(
            prep.pass(),
            "{name}: idem {:.2e} selfadj {:.2e} selfdual {:.2e}",
            prep.idempotent_defect,
            prep.selfadjoint_defect,
            prep.selfdual_defect,
        );
        for c in 0..ctx.n_labels() {
            assert_eq!(pp.ranks[c], w.sector_dim(c), "{name}: rank(p_{c})");
        }
        let lem = ctx.check_p_lemmas(&w, &pp, tol::DEFAULT).unwrap();
        assert!(
            lem.pass(),
            "{name}: top {:.2e} any {:.2e} cap {:.2e} rot {:.2e}",
            lem.remove_top_defect,
            lem.remove_any_defect,
            lem.cap_off_defect,
            lem.rotation_defect,
        );
        assert!(
            ctx.check_p_absorbs_pi(&w, &pp).unwrap() < 1e-9,
            "{name}: p does not absorb pi"
        );
    }
}

#[test]
fn delta_identities() {
    for (name, ctx, alg) in battery() {
        let w = ctx.wstar_object(&alg, tol::DEFAULT).unwrap();
        let rep = ctx.check_delta_identities(&w, tol::DEFAULT).unwrap();
        assert!(
            rep.pass(),
            "{name}: abd {:.2e} abc {:.2e} z3 {:.2e}",
            rep.replace_abd_defect,
            rep.replace_abc_defect,
            rep.z3_defect,
        );
    }
}

#[test]
fn z2_delta_values() {
    let ctx = load("z2");
    let alg = ctx.group_algebra().unwrap();
    let w = ctx.wstar_object(&alg, tol::DEFAULT).unwrap();
    let table = ctx.tetra_delta(&w).unwrap();
    let g = ctx.spec.label_index("g").unwrap();
    let one = ctx.unit();
    let root_half = C64::new(0.5f64.sqrt(), 0.0);
    let e_ggo = table.channels[&(g, g, one)][0][0][0][0];
    assert!(
        (e_ggo.norm() - root_half.norm()).abs() < 1e-12,
        "Delta(g,g,1) = {e_ggo}"
    );
    let e_ooo = table.channels[&(one, one, one)][0][0][0][0];
    assert!(
        (e_ooo - root_half).norm() < 1e-12,
        "Delta(1,1,1) = {e_ooo}"
    );
}

#[test]
fn build_q_roundtrip() {
    for (name, ctx, alg) in battery() {
        let w = ctx.wstar_object(&alg, tol::DEFAULT).unwrap();
        let pp = ctx.build_p(&w).unwrap();
        let qd = ctx.build_q(&w, &pp).unwrap();
        assert!(
            ctx.check_embedding(&pp, &qd).unwrap() < 1e-9,
            "{name}: embedding"
        );
        assert_eq!(qd.alg.a.mult, alg.a.mult, "{name}: Q mult != A mult");
        let qrep = ctx.qsystem_check(&qd.alg, tol::DEFAULT).unwrap();
        assert!(
            qrep.is_qsystem && qrep.normalized && qrep.connected,
            "{name}: Q fails ladder (max {:.2e}, normalized {}, lambda' {})",
            qrep.max_ladder_defect(),
            qrep.normalized,
            qrep.lambda_prime,
        );
        let eta = ctx.eta_report(&w, &qd, tol::DEFAULT).unwrap();
        assert!(
            eta.pass(),
            "{name}: eta unit {:.2e} mult {:.2e} star {:.2e} bij {}",
            eta.unit_defect,
            eta.mult_defect,
            eta.star_defect,
            eta.bijective,
        );
        let zeta = ctx.zeta_report(&w, &qd, tol::DEFAULT).unwrap();
        assert!(
            zeta.pass(),
            "{name}: zeta unitary {:.2e} unit {:.2e} mult {:.2e} invol {:.2e}",
            zeta.unitary_defect,
            zeta.unit_defect,
            zeta.mult_defect,
            zeta.involutive_defect,
        );
        let rt = ctx.roundtrip_report(&alg, tol::DEFAULT, 0).unwrap();
        assert!(rt.pass, "{name}: roundtrip report fails: {rt:?}");
    }
}

/// The unit inclusion 1 -> A as an involutive algebra morphism from the
/// trivial Q-system, and its image under Q.
#[test]
fn unit_inclusion_q_morphism_and_naturality() {
    for (name, ctx, alg) in battery() {
        let triv = ctx.trivial_qsystem();
        let unit_w = qkit_core::category::word_of_labels(ctx.n_labels(), &[ctx.unit()]);
        let theta = ctx.cast_words(&alg.i, unit_w, alg.word());
        let am = AlgebraMorphism {
            theta,
            source: triv.clone(),
            target: alg.clone(),
        };
        let inv = ctx.check_involutive(&am, tol::DEFAULT).unwrap();
        assert!(inv.pass(), "{name}: unit inclusion not involutive {inv:?}");
        let wa = ctx.wstar_object(&triv, tol::DEFAULT).unwrap();
        let wb = ctx.wstar_object(&alg, tol::DEFAULT).unwrap();
        let pa = ctx.build_p(&wa).unwrap();
        let pb = ctx.build_p(&wb).unwrap();
        let qa = ctx.build_q(&wa, &pa).unwrap();
        let qb = ctx.build_q(&wb, &pb).unwrap();
        let qm = ctx.q_morphism(&am, &wa, &wb, &qa, &qb).unwrap();
        let qrep = ctx
            .check_q_morphism(&am, &wa, &wb, &pa, &pb, &qa, &qb, &qm, tol::DEFAULT)
            .unwrap();
        assert!(
            qrep.pass(),
            "{name}: q_morphism pi {:.2e} sub {:.2e} rem {:.2e} rep {:.2e} inv {:.2e}",
            qrep.partial_isometry_defect,
            qrep.subprojection_defect,
            qrep.remove_theta_defect,
            qrep.replace_theta_abc_defect,
            qrep.compressed_involutive_defect,
        );
        let nat = ctx
            .check_naturality(&am, &wa, &wb, &qa, &qb, &qm)
            .unwrap();
        assert!(nat < 1e-9, "{name}: naturality defect {nat:.2e}");
    }
}

/// Q(id) = p and the identity morphism's naturality square is exact.
#[test]
fn identity_q_morphism_is_p() {
    let ctx = load("z2");
    let alg = ctx.group_algebra().unwrap();
    let w = ctx.wstar_object(&alg, tol::DEFAULT).unwrap();
    let pp = ctx.build_p(&w).unwrap();
    let qd = ctx.build_q(&w, &pp).unwrap();
    let am = AlgebraMorphism {
        theta: ctx.identity(&alg.word()),
        source: alg.clone(),
        target: alg.clone(),
    };
    let qm = ctx.q_morphism(&am, &w, &w, &qd, &qd).unwrap();
    assert!(qm.q_theta.distance(&pp.p).unwrap() < 1e-9, "Q(id) != p");
    assert!(qm.theta_p.distance(&pp.p).unwrap() < 1e-9, "id(p) != p");
    assert!(
        qm.compressed
            .distance(&ctx.identity(&qd.alg.word()))
            .unwrap()
            < 1e-9,
        "compressed Q(id) != id"
    );
}
