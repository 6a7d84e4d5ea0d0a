//! `qkit` — verification front end for skeletal fusion categories,
//! Q-systems, and the W*-algebra-object round trip.
//!
//! Exit codes: 0 all checks pass, 1 a check fails, 2 parse/schema error.

use anyhow::Context as _;
use clap::{Parser, Subcommand, ValueEnum};
use qkit_core::algebra::{AlgebraMorphism, AlgebraObject, FrobeniusReport};
use qkit_core::category::Ctx;
use qkit_core::report::Report;
use qkit_core::tol;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(name = "qkit", version, about = "Numerical verifier for Q-systems and W*-algebra objects in unitary fusion categories")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(clap::Args)]
struct Common {
    /// Path to the category JSON file.
    #[arg(long)]
    category: PathBuf,
    /// Numerical tolerance (overridden by the QKIT_TOL env var if set).
    #[arg(long)]
    tol: Option<f64>,
    /// Seed for random-morphism batteries.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check pentagon, F-unitarity, duality and balancing identities of a category file.
    ValidateCategory {
        #[command(flatten)]
        common: Common,
    },
    /// Run the full Frobenius/Q-system verifier ladder on an algebra file.
    VerifyQsystem {
        #[command(flatten)]
        common: Common,
        /// Path to the algebra JSON file.
        #[arg(long)]
        algebra: PathBuf,
        /// Rescale the unit so the algebra is normalized before checking.
        #[arg(long)]
        normalize: bool,
    },
    /// Build the W*-algebra object of a Q-system and verify its axioms.
    BuildWstar {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        algebra: PathBuf,
    },
    /// Full round trip: Q-system -> W*-object -> projector -> Q-system, with
    /// the isomorphisms eta and zeta and every supporting identity.
    Roundtrip {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        algebra: PathBuf,
        /// Optional algebra-morphism file; adds functoriality and naturality checks.
        #[arg(long)]
        morphism: Option<PathBuf>,
    },
    /// Emit the table of tetrahedral structure constants Delta(a,b,c).
    DeltaTable {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        algebra: PathBuf,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    };
    std::process::exit(code);
}

fn effective_tol(flag: Option<f64>) -> f64 {
    if let Ok(v) = std::env::var(tol::TOL_ENV_VAR) {
        if let Ok(t) = v.parse::<f64>() {
            return t;
        }
    }
    flag.unwrap_or(tol::DEFAULT)
}

fn sha256_hex(path: &Path) -> anyhow::Result<String> {
    let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(format!("{:x}", Sha256::digest(&bytes)))
}

fn load_ctx(path: &Path) -> anyhow::Result<Ctx> {
    let spec = qkit_core::io::load_category(path)
        .with_context(|| format!("loading category {}", path.display()))?;
    Ctx::new(spec).context("building category context")
}

fn load_alg(ctx: &Ctx, path: &Path) -> anyhow::Result<AlgebraObject> {
    qkit_core::io::load_algebra(ctx, path)
        .with_context(|| format!("loading algebra {}", path.display()))
}

fn emit(report: &Report, format: Format) -> anyhow::Result<i32> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(report)?),
        Format::Csv => {
            println!("name,defect,tol,pass");
            for c in &report.checks {
                println!("{},{:e},{:e},{}", c.name, c.defect, c.tol, c.pass);
            }
        }
        Format::Text => {
            for c in &report.checks {
                let tag = if c.pass { "PASS" } else { "FAIL" };
                println!("{tag}  {:<34} defect {:>10.3e}  :: {}", c.name, c.defect, c.anchor);
            }
            println!(
                "{}: {} ({} checks, max defect {:.3e}, tol {:.1e}, seed {})",
                if report.pass { "PASS" } else { "FAIL" },
                report.command,
                report.checks.len(),
                report.max_defect(),
                report.tol,
                report.seed,
            );
        }
    }
    Ok(if report.pass { 0 } else { 1 })
}

fn ladder_checks(report: &mut Report, prefix: &str, q: &FrobeniusReport) {
    let p = |s: &str| format!("{prefix}{s}");
    report.check(&p("associativity"), "m(m(x)id) = m(id(x)m)", q.assoc_defect);
    report.check(&p("unitality"), "m(i(x)id) = id = m(id(x)i)", q.unital_defect);
    report.check(
        &p("frobenius"),
        "(id(x)m)(m*(x)id) = m*m = (m(x)id)(id(x)m*)",
        q.frobenius_defect,
    );
    report.check(
        &p("selfdual_cups"),
        "ev_A = i* m and coev_A = m* i are a conjugate pair for A",
        q.frobenius_selfdual_defect,
    );
    report.check(
        &p("lambda_scalar"),
        "m m* = lambda id_A (least-squares residual)",
        q.lambda_residual,
    );
    report.check(
        &p("standard_pair"),
        "R = S = m* i solves the conjugate equations standardly",
        q.cond1_defect,
    );
    report.check(&p("loop_dimension"), "R* R = d_A", q.cond2_defect);
    report.check(
        &p("sigma_unitary"),
        "the conjugation structure map sigma_A is unitary",
        q.sigma_unitarity_defect,
    );
    report.check(
        &p("sigma_left_right"),
        "left and right conjugation structure maps agree",
        q.sigma_lr_defect,
    );
    report.check_bool(&p("connected"), "dim C(1, A) = 1", q.connected);
    report.check_bool(&p("normalized"), "lambda' = i* i = 1", q.normalized);
    report.check_bool(&p("is_qsystem"), "all Q-system ladder conditions hold", q.is_qsystem);
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    match cli.cmd {
        Cmd::ValidateCategory { common } => {
            let tol = effective_tol(common.tol);
            let ctx = load_ctx(&common.category)?;
            let mut report = Report::new("validate-category", tol, common.seed);
            report.add_input(
                &common.category.display().to_string(),
                &sha256_hex(&common.category)?,
            );
            let v = ctx.validate_category(tol).context("validating category")?;
            report.check("pentagon", "pentagon equation for all F-matrices", v.pentagon_defect);
            report.check("f_unitarity", "every F-matrix is unitary", v.unitarity_defect);
            report.check(
                "dimension_homomorphism",
                "d_a d_b = sum_c N_ab^c d_c",
                v.dim_homomorphism_defect,
            );
            report.check("zigzag", "snake identities for the standard cups/caps", v.zigzag_defect);
            report.check("standardness", "R_a* R_a = S_a* S_a = d_a", v.standardness_defect);
            report.check(
                "balancing",
                "left and right traces of the cups agree",
                v.balancing_defect,
            );
            emit(&report, common.format)
        }
        Cmd::VerifyQsystem { common, algebra, normalize } => {
            let tol = effective_tol(common.tol);
            let ctx = load_ctx(&common.category)?;
            let mut alg = load_alg(&ctx, &algebra)?;
            let mut report = Report::new("verify-qsystem", tol, common.seed);
            report.add_input(
                &common.category.display().to_string(),
                &sha256_hex(&common.category)?,
            );
            report.add_input(&algebra.display().to_string(), &sha256_hex(&algebra)?);
            if normalize {
                alg = ctx.normalize_qsystem(&alg, tol).context("normalizing")?;
            }
            let q = ctx.qsystem_check(&alg, tol).context("q-system ladder")?;
            ladder_checks(&mut report, "", &q);
            report.check(
                "lambda_prime_one",
                "lambda' = 1 for a normalized Q-system",
                (q.lambda_prime - 1.0).abs(),
            );
            if common.format == Format::Text {
                println!("d_A = {:.12}   lambda = {:.12}   lambda' = {:.12}", q.d_a, q.lambda, q.lambda_prime);
            }
            emit(&report, common.format)
        }
        Cmd::BuildWstar { common, algebra } => {
            let tol = effective_tol(common.tol);
            let ctx = load_ctx(&common.category)?;
            let alg = load_alg(&ctx, &algebra)?;
            let mut report = Report::new("build-wstar", tol, common.seed);
            report.add_input(
                &common.category.display().to_string(),
                &sha256_hex(&common.category)?,
            );
            report.add_input(&algebra.display().to_string(), &sha256_hex(&algebra)?);
            let w = ctx.wstar_object(&alg, tol).context("building W*-object")?;
            let mut rng = ChaCha8Rng::seed_from_u64(common.seed);
            let star = ctx.check_star_axioms(&w, tol, &mut rng).context("star axioms")?;
            report.check(
                "conjugate_naturality",
                "j_a is natural in a against random endomorphisms",
                star.conjugate_naturality_defect,
            );
            report.check("star_involutive", "j(j(f)) = f", star.involutive_defect);
            report.check("star_unital", "j fixes the unit vector", star.unital_defect);
            report.check(
                "star_monoidal",
                "j intertwines the multiplication maps",
                star.monoidal_defect,
            );
            report.check(
                "l2_positivity",
                "every sector Gram matrix is positive semidefinite",
                star.positivity_defect,
            );
            report.check(
                "gram_identity",
                "the L2 inner product of the chosen ONB is the identity",
                ctx.h_equals_a_defect(&w)?,
            );
            report.check(
                "traciality",
                "<f|g> computed with R-cups equals the S-cup value",
                ctx.traciality_defect(&w)?,
            );
            report.check(
                "lambda_pairing",
                "GNS left multiplication is compatible with the L2 pairing",
                ctx.lambda_pairing_defect(&w)?,
            );
            report.check(
                "pi_pairing",
                "pi_a preserves the L2 inner product up to the d_H weight",
                ctx.pi_pairing_defect(&w)?,
            );
            report.check(
                "b_orthonormality",
                "B_a = sqrt(d_a) pi_a(ONB) is a family of isometries",
                ctx.b_orthonormality_defect(&w)?,
            );
            report.check(
                "dimension_sum",
                "sum_a dim C(a,A) d_a = d_H",
                ctx.dimension_sum_defect(&w),
            );
            report.check_bool(
                "lambda_faithful",
                "GNS left multiplication is injective",
                ctx.lambda_faithful(&w)?,
            );
            if common.format == Format::Text {
                for a in 0..ctx.n_labels() {
                    println!("dim C({}, A) = {}", ctx.spec.labels[a], w.sector_dim(a));
                }
            }
            emit(&report, common.format)
        }
        Cmd::Roundtrip { common, algebra, morphism } => {
            let tol = effective_tol(common.tol);
            let ctx = load_ctx(&common.category)?;
            let alg = load_alg(&ctx, &algebra)?;
            let mut report = Report::new("roundtrip", tol, common.seed);
            report.add_input(
                &common.category.display().to_string(),
                &sha256_hex(&common.category)?,
            );
            report.add_input(&algebra.display().to_string(), &sha256_hex(&algebra)?);
            if let Some(m) = &morphism {
                report.add_input(&m.display().to_string(), &sha256_hex(m)?);
            }
            roundtrip_checks(&ctx, &alg, morphism.as_deref(), tol, common.seed, &mut report)?;
            emit(&report, common.format)
        }
        Cmd::DeltaTable { common, algebra } => {
            let tol = effective_tol(common.tol);
            let ctx = load_ctx(&common.category)?;
            let alg = load_alg(&ctx, &algebra)?;
            let w = ctx.wstar_object(&alg, tol).context("building W*-object")?;
            let table = ctx.tetra_delta(&w).context("tetrahedral constants")?;
            let mut keys: Vec<_> = table.channels.keys().copied().collect();
            keys.sort_unstable();
            match common.format {
                Format::Json => {
                    let mut rows = Vec::new();
                    for (a, b, c) in keys {
                        let ch = &table.channels[&(a, b, c)];
                        for (al, x) in ch.iter().enumerate() {
                            for (be, y) in x.iter().enumerate() {
                                for (ga, z) in y.iter().enumerate() {
                                    for (de, v) in z.iter().enumerate() {
                                        rows.push(serde_json::json!({
                                            "a": ctx.spec.labels[a],
                                            "b": ctx.spec.labels[b],
                                            "c": ctx.spec.labels[c],
                                            "alpha": al, "beta": be, "gamma": ga, "delta": de,
                                            "re": v.re, "im": v.im,
                                        }));
                                    }
                                }
                            }
                        }
                    }
                    println!("{}", serde_json::to_string_pretty(&rows)?);
                }
                _ => {
                    println!("a,b,c,alpha,beta,gamma,delta,re,im");
                    for (a, b, c) in keys {
                        let ch = &table.channels[&(a, b, c)];
                        for (al, x) in ch.iter().enumerate() {
                            for (be, y) in x.iter().enumerate() {
                                for (ga, z) in y.iter().enumerate() {
                                    for (de, v) in z.iter().enumerate() {
                                        println!(
                                            "{},{},{},{al},{be},{ga},{de},{},{}",
                                            ctx.spec.labels[a],
                                            ctx.spec.labels[b],
                                            ctx.spec.labels[c],
                                            v.re,
                                            v.im,
                                        );
                                    }
                                }
                            }
                        }
                    }
                }
            }
            Ok(0)
        }
    }
}

/// Run the full pipeline and append one check record per verified identity.
fn roundtrip_checks(
    ctx: &Ctx,
    alg: &AlgebraObject,
    morphism: Option<&Path>,
    tol: f64,
    seed: u64,
    report: &mut Report,
) -> anyhow::Result<()> {
    let q = ctx.qsystem_check(alg, tol).context("q-system ladder")?;
    ladder_checks(report, "qsystem_", &q);
    if !q.is_qsystem || !q.normalized || !q.connected {
        return Ok(());
    }
    let w = ctx.wstar_object(alg, tol).context("W*-object")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let star = ctx.check_star_axioms(&w, tol, &mut rng)?;
    report.check(
        "star_axioms",
        "j is an antilinear, involutive, unital, monoidal star structure",
        star.max_defect(),
    );
    report.check(
        "l2_positivity",
        "every sector Gram matrix is positive semidefinite",
        star.positivity_defect,
    );
    report.check("traciality", "L2 pairing is tracial", ctx.traciality_defect(&w)?);
    report.check(
        "dimension_sum",
        "sum_a dim C(a,A) d_a = d_H",
        ctx.dimension_sum_defect(&w),
    );
    let pp = ctx.build_p(&w).context("projector p")?;
    let prep = ctx.check_p(&pp, tol)?;
    report.check("p_idempotent", "p p = p", prep.idempotent_defect);
    report.check("p_selfadjoint", "p* = p", prep.selfadjoint_defect);
    report.check(
        "p_symmetric_selfdual",
        "(p (x) id) S_X = (id (x) p) S_X on X = H (x) Hbar",
        prep.selfdual_defect,
    );
    let ranks_ok = (0..ctx.n_labels()).all(|c| pp.ranks[c] == w.sector_dim(c));
    report.check_bool("p_rank", "rank(p_c) = dim C(c, A) in every sector", ranks_ok);
    let lem = ctx.check_p_lemmas(&w, &pp, tol)?;
    report.check(
        "p_remove_top",
        "the dressed pair of pants absorbs a top copy of p",
        lem.remove_top_defect,
    );
    report.check(
        "p_remove_any",
        "the triple-p composite equals each two-p composite",
        lem.remove_any_defect,
    );
    report.check(
        "p_cap_off",
        "right partial trace of p is the identity on H",
        lem.cap_off_defect,
    );
    report.check(
        "p_rotation",
        "the dressed pair of pants is invariant under 1-click rotation",
        lem.rotation_defect,
    );
    report.check(
        "p_absorbs_pi",
        "p pi_a(f) = pi_a(f) for every sector basis element",
        ctx.check_p_absorbs_pi(&w, &pp)?,
    );
    let drep = ctx.check_delta_identities(&w, tol)?;
    report.check(
        "delta_replace_abd",
        "contracting two legs of Delta against the pair isometry reproduces the basis vector",
        drep.replace_abd_defect,
    );
    report.check(
        "delta_replace_abc",
        "Delta-weighted recombination reproduces the dressed pair of pants",
        drep.replace_abc_defect,
    );
    report.check(
        "delta_z3_symmetry",
        "Delta(a,b,c) = Delta(cbar,a,bbar) after a 1-click rotation of the pair isometry",
        drep.z3_defect,
    );
    let qd = ctx.build_q(&w, &pp).context("subobject Q")?;
    report.check(
        "embedding",
        "u* u = id_Q, u u* = p, and m_Q m_Q* = d_H id_Q",
        ctx.check_embedding(&pp, &qd)?,
    );
    report.check_bool(
        "mult_preserved",
        "Q has the same per-sector multiplicities as A",
        qd.alg.a.mult == alg.a.mult,
    );
    let qrep = ctx.qsystem_check(&qd.alg, tol)?;
    report.check(
        "q_ladder",
        "the reconstructed algebra Q passes the full Q-system ladder",
        qrep.max_ladder_defect(),
    );
    report.check_bool(
        "q_normalized",
        "the reconstructed algebra is normalized and connected",
        qrep.is_qsystem && qrep.normalized && qrep.connected,
    );
    let eta = ctx.eta_report(&w, &qd, tol)?;
    report.check("eta_unit", "eta maps the unit vector to the unit of Q", eta.unit_defect);
    report.check(
        "eta_multiplicative",
        "eta intertwines GNS multiplication with m_Q",
        eta.mult_defect,
    );
    report.check("eta_star", "eta intertwines j with the star of Q", eta.star_defect);
    report.check_bool("eta_bijective", "eta is a linear bijection in every sector", eta.bijective);
    let zeta = ctx.zeta_report(&w, &qd, tol)?;
    report.check("zeta_unitary", "zeta is unitary", zeta.unitary_defect);
    report.check("zeta_unit", "zeta i_A = i_Q up to normalization", zeta.unit_defect);
    report.check(
        "zeta_multiplicative",
        "zeta m_A = m_Q (zeta (x) zeta)",
        zeta.mult_defect,
    );
    report.check(
        "zeta_involutive",
        "zeta intertwines the algebra involutions",
        zeta.involutive_defect,
    );
    let rt = ctx.roundtrip_report(alg, tol, seed)?;
    report.check_bool(
        "roundtrip_pass",
        "staged pipeline report (qsystem -> wstar -> qsystem) passes",
        rt.pass && rt.failed_stage.is_none(),
    );
    if let Some(mpath) = morphism {
        let text = std::fs::read_to_string(mpath)?;
        let mf: qkit_core::io::MorphismFile = serde_json::from_str(&text)
            .with_context(|| format!("parsing morphism file {}", mpath.display()))?;
        let dir = mpath.parent().unwrap_or(Path::new("."));
        let src_alg = load_alg(ctx, &dir.join(&mf.source))?;
        let tgt_alg = load_alg(ctx, &dir.join(&mf.target))?;
        let theta = qkit_core::io::load_morphism_blocks(ctx, &mf, &src_alg.a, &tgt_alg.a)
            .context("morphism blocks")?;
        let am = AlgebraMorphism {
            theta,
            source: src_alg.clone(),
            target: tgt_alg.clone(),
        };
        let inv = ctx.check_involutive(&am, tol)?;
        report.check(
            "theta_involutive",
            "theta is a unital multiplicative star homomorphism",
            inv.max_defect(),
        );
        let wa = ctx.wstar_object(&src_alg, tol)?;
        let wb = ctx.wstar_object(&tgt_alg, tol)?;
        let pa = ctx.build_p(&wa)?;
        let pb = ctx.build_p(&wb)?;
        let qa = ctx.build_q(&wa, &pa)?;
        let qb = ctx.build_q(&wb, &pb)?;
        let qm = ctx.q_morphism(&am, &wa, &wb, &qa, &qb).context("Q(theta)")?;
        let qmr = ctx.check_q_morphism(&am, &wa, &wb, &pa, &pb, &qa, &qb, &qm, tol)?;
        report.check(
            "q_theta_partial_isometry",
            "Q(theta) is a partial isometry",
            qmr.partial_isometry_defect,
        );
        report.check(
            "q_theta_subprojection",
            "Q(theta) Q(theta)* is a subprojection of p_B",
            qmr.subprojection_defect,
        );
        report.check(
            "q_theta_remove",
            "Q(theta) absorbs p_A on the right",
            qmr.remove_theta_defect,
        );
        report.check(
            "q_theta_replace_abc",
            "Q(theta) intertwines the dressed pairs of pants up to the dimension weight",
            qmr.replace_theta_abc_defect,
        );
        report.check(
            "q_theta_involutive",
            "the compressed image of theta is an involutive algebra morphism",
            qmr.compressed_involutive_defect,
        );
        report.check(
            "naturality",
            "eta_B Q(theta) = theta eta_A on every sector basis element",
            ctx.check_naturality(&am, &wa, &wb, &qa, &qb, &qm)?,
        );
    }
    Ok(())
}
