//! The round-trip isomorphisms between a normalized irreducible Q-system and
//! the Q-system recovered from its W*-algebra object: the sector-wise natural
//! isomorphism eta and the unitary involutive algebra isomorphism zeta, plus
//! naturality in the algebra morphism.

use crate::algebra::{AlgebraMorphism, AlgebraObject};
use crate::category::{word_of_labels, Ctx};
use crate::linalg;
use crate::morphism::Morphism;
use crate::projector::{QData, QMorphismData};
use crate::wstar::WStarData;
use crate::{QkitError, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Defects of the sector-wise isomorphism eta_a(f) = u^* pi_a(f).
#[derive(Debug, Clone)]
pub struct EtaReport {
    pub unit_defect: f64,
    pub mult_defect: f64,
    pub star_defect: f64,
    pub bijective: bool,
    pub tol: f64,
}

impl EtaReport {
    pub fn max_defect(&self) -> f64 {
        self.unit_defect
            .max(self.mult_defect)
            .max(self.star_defect)
            .max(if self.bijective { 0.0 } else { 1.0 })
    }
    pub fn pass(&self) -> bool {
        self.max_defect() <= self.tol
    }
}

/// Defects of zeta = u^* pi_A(id_A) : A -> Q.
#[derive(Debug, Clone)]
pub struct ZetaReport {
    pub unitary_defect: f64,
    pub unit_defect: f64,
    pub mult_defect: f64,
    pub involutive_defect: f64,
    pub tol: f64,
}

impl ZetaReport {
    pub fn max_defect(&self) -> f64 {
        self.unitary_defect
            .max(self.unit_defect)
            .max(self.mult_defect)
            .max(self.involutive_defect)
    }
    pub fn pass(&self) -> bool {
        self.max_defect() <= self.tol
    }
}

/// Aggregated round-trip verification result.
#[derive(Debug, Clone)]
pub struct RoundTripReport {
    pub direction: String,
    /// Name of the pipeline stage that failed, when one did.
    pub failed_stage: Option<String>,
    /// Bijectivity / unitarity of the round-trip isomorphisms.
    pub iso_defect: f64,
    /// Unit and multiplication intertwining.
    pub algebra_defect: f64,
    /// Star-structure / involution intertwining.
    pub star_or_involutive_defect: f64,
    /// Naturality-square defect when a morphism was supplied.
    pub naturality_defect: Option<f64>,
    /// Object-level multiplicities preserved exactly around the round trip.
    pub mult_preserved: bool,
    pub tol: f64,
    pub pass: bool,
}

impl RoundTripReport {
    fn failed(direction: &str, stage: &str, tol: f64) -> Self {
        RoundTripReport {
            direction: direction.to_string(),
            failed_stage: Some(stage.to_string()),
            iso_defect: f64::INFINITY,
            algebra_defect: f64::INFINITY,
            star_or_involutive_defect: f64::INFINITY,
            naturality_defect: None,
            mult_preserved: false,
            tol,
            pass: false,
        }
    }
}

impl Ctx {
    /// eta(f) = u^* pi(f), defined for any morphism into the algebra object.
    pub fn eta_apply(&self, w: &WStarData, qd: &QData, f: &Morphism) -> Result<Morphism> {
        self.compose(&self.adjoint(&qd.emb.u), &self.induced_pi(w, f)?)
    }

    /// eta intertwines units, multiplications, and *-structures, and is a
    /// sector-wise linear bijection.
    pub fn eta_report(&self, w: &WStarData, qd: &QData, tol: f64) -> Result<EtaReport> {
        let n = self.n_labels();
        let unit_w = word_of_labels(n, &[self.unit()]);
        let qw = qd.alg.word();
        // unit: eta_1(i_A) = i_Q
        let i1 = &w.onb[self.unit()][0];
        let iq1 = self.cast_words(&qd.alg.i, unit_w, qw.clone());
        let unit_defect = self.eta_apply(w, qd, i1)?.distance(&iq1)?;
        // multiplication: eta(m_A (f (x) g)) = m_Q (eta f (x) eta g)
        let mut mult = 0.0f64;
        for a in 0..n {
            for f in &w.onb[a] {
                for b in 0..n {
                    for g in &w.onb[b] {
                        let prod = self.compose(&w.alg.m, &self.tensor(f, g)?)?;
                        let lhs = self.eta_apply(w, qd, &prod)?;
                        let rhs = self.compose(
                            &qd.alg.m,
                            &self.tensor(
                                &self.eta_apply(w, qd, f)?,
                                &self.eta_apply(w, qd, g)?,
                            )?,
                        )?;
                        mult = mult.max(lhs.distance(&rhs)?);
                    }
                }
            }
        }
        // star: eta(j^A f) = sigma_Q^* conj(eta f)
        let (sigma_q, _) = self.sigma_maps(&qd.alg)?;
        let mut star = 0.0f64;
        for a in 0..n {
            for f in &w.onb[a] {
                let lhs = self.eta_apply(w, qd, &self.j_map(w, f)?)?;
                let rhs = self.compose(
                    &self.adjoint(&sigma_q),
                    &self.conjugate(&self.eta_apply(w, qd, f)?)?,
                )?;
                star = star.max(lhs.distance(&rhs)?);
            }
        }
        // bijectivity sector by sector: dims match and the image matrix has
        // full rank
        let mut bij = true;
        for a in 0..n {
            let k = w.onb[a].len();
            if qd.emb.q.mult[a] != k {
                bij = false;
                continue;
            }
            if k == 0 {
                continue;
            }
            let mut mat = linalg::zeros(k, k);
            for (j, f) in w.onb[a].iter().enumerate() {
                let img = self.eta_apply(w, qd, f)?;
                for r in 0..k {
                    mat[(r, j)] = img.blocks[a][(r, 0)];
                }
            }
            if linalg::orthonormal_column_basis(&mat, crate::tol::RANK_CUTOFF).ncols() != k {
                bij = false;
            }
        }
        Ok(EtaReport {
            unit_defect,
            mult_defect: mult,
            star_defect: star,
            bijective: bij,
            tol,
        })
    }

    /// zeta = u^* pi_A(id_A) in C(A, Q).
    pub fn zeta(&self, w: &WStarData, qd: &QData) -> Result<Morphism> {
        self.eta_apply(w, qd, &self.identity(&w.alg.word()))
    }

    /// zeta is a unitary involutive algebra isomorphism.
    pub fn zeta_report(&self, w: &WStarData, qd: &QData, tol: f64) -> Result<ZetaReport> {
        let z = self.zeta(w, qd)?;
        let zs = self.adjoint(&z);
        let unitary = self
            .compose(&zs, &z)?
            .distance(&self.identity(&w.alg.word()))?
            .max(
                self.compose(&z, &zs)?
                    .distance(&self.identity(&qd.alg.word()))?,
            );
        let am = AlgebraMorphism {
            theta: z,
            source: w.alg.clone(),
            target: qd.alg.clone(),
        };
        let inv = self.check_involutive(&am, tol)?;
        Ok(ZetaReport {
            unitary_defect: unitary,
            unit_defect: inv.unital_defect,
            mult_defect: inv.multiplicative_defect,
            involutive_defect: inv.involutive_defect,
            tol,
        })
    }

    /// Both naturality squares for an algebra morphism theta : A -> B:
    /// (compressed Q theta) . eta^A = eta^B . theta sector-wise, and
    /// (compressed Q theta) . zeta_A = zeta_B . theta.
    #[allow(clippy::too_many_arguments)]
    pub fn check_naturality(
        &self,
        am: &AlgebraMorphism,
        wa: &WStarData,
        wb: &WStarData,
        qa: &QData,
        qb: &QData,
        qm: &QMorphismData,
    ) -> Result<f64> {
        let mut worst = 0.0f64;
        for a in 0..self.n_labels() {
            for f in &wa.onb[a] {
                let lhs = self.compose(&qm.compressed, &self.eta_apply(wa, qa, f)?)?;
                let rhs = self.eta_apply(wb, qb, &self.compose(&am.theta, f)?)?;
                worst = worst.max(lhs.distance(&rhs)?);
            }
        }
        let za = self.zeta(wa, qa)?;
        let zb = self.zeta(wb, qb)?;
        let lhs = self.compose(&qm.compressed, &za)?;
        let rhs = self.compose(&zb, &am.theta)?;
        worst = worst.max(lhs.distance(&rhs)?);
        Ok(worst)
    }

    /// Run the full round trip from a normalized irreducible Q-system and
    /// aggregate every defect. Stops at the first failing stage.
    pub fn roundtrip_report(
        &self,
        alg: &AlgebraObject,
        tol: f64,
        seed: u64,
    ) -> Result<RoundTripReport> {
        let direction = "qsystem -> wstar -> qsystem";
        let qrep = self.qsystem_check(alg, tol)?;
        if !(qrep.is_qsystem && qrep.normalized && qrep.connected) {
            return Ok(RoundTripReport::failed(direction, "qsystem_check", tol));
        }
        let w = match self.wstar_object(alg, tol) {
            Ok(w) => w,
            Err(QkitError::Precondition(_)) => {
                return Ok(RoundTripReport::failed(direction, "wstar_object", tol));
            }
            Err(e) => return Err(e),
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let star = self.check_star_axioms(&w, tol, &mut rng)?;
        if !star.pass() {
            return Ok(RoundTripReport::failed(direction, "star_axioms", tol));
        }
        let pp = self.build_p(&w)?;
        let prep = self.check_p(&pp, tol)?;
        if !prep.pass() {
            return Ok(RoundTripReport::failed(direction, "check_p", tol));
        }
        let qd = self.build_q(&w, &pp)?;
        let q_qrep = self.qsystem_check(&qd.alg, tol)?;
        if !(q_qrep.is_qsystem && q_qrep.normalized && q_qrep.connected) {
            return Ok(RoundTripReport::failed(direction, "qsystem_check(Q)", tol));
        }
        let eta = self.eta_report(&w, &qd, tol)?;
        let zeta = self.zeta_report(&w, &qd, tol)?;
        let mult_preserved = qd.alg.a.mult == alg.a.mult;
        let iso = zeta
            .unitary_defect
            .max(if eta.bijective { 0.0 } else { 1.0 });
        let algebra = zeta
            .unit_defect
            .max(zeta.mult_defect)
            .max(eta.unit_defect)
            .max(eta.mult_defect);
        let star_def = zeta.involutive_defect.max(eta.star_defect);
        let pass =
            iso <= tol && algebra <= tol && star_def <= tol && mult_preserved;
        Ok(RoundTripReport {
            direction: direction.to_string(),
            failed_stage: None,
            iso_defect: iso,
            algebra_defect: algebra,
            star_or_involutive_defect: star_def,
            naturality_defect: None,
            mult_preserved,
            tol,
            pass,
        })
    }
}
