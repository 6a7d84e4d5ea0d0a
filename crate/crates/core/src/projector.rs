//! The canonical projector p on H (x) Hbar built from the orthonormal
//! families B_a, the tetrahedral structure constants Delta, the supporting
//! identity battery, the Q-system carried by im(p), and the image of algebra
//! morphisms under the subobject compression.

use crate::algebra::{AlgebraMorphism, AlgebraObject};
use crate::category::{word_of_labels, Ctx, Object, Word};
use crate::duality::TraceSide;
use crate::linalg::{self, C64, CMat};
use crate::morphism::{Morphism, Side};
use crate::wstar::WStarData;
use crate::{QkitError, Result};
use std::collections::HashMap;

/// The canonical projector p = sum_a sum_{alpha in B_a} alpha alpha^* in
/// End(H (x) Hbar), with the numerical rank of each sector block.
#[derive(Debug, Clone)]
pub struct ProjectorP {
    pub p: Morphism,
    pub ranks: Vec<usize>,
}

/// A concrete realization of im(p): an object Q with mult[c] = rank(p_c)
/// and an isometry u : Q -> H (x) Hbar with u u^* = p.
#[derive(Debug, Clone)]
pub struct SubobjectEmbedding {
    pub q: Object,
    pub u: Morphism,
}

/// The Q-system carried by im(p) together with its embedding.
#[derive(Debug, Clone)]
pub struct QData {
    pub alg: AlgebraObject,
    pub emb: SubobjectEmbedding,
}

/// Defects of the projector axioms.
#[derive(Debug, Clone)]
pub struct PReport {
    pub idempotent_defect: f64,
    pub selfadjoint_defect: f64,
    pub selfdual_defect: f64,
    pub tol: f64,
}

impl PReport {
    pub fn max_defect(&self) -> f64 {
        self.idempotent_defect
            .max(self.selfadjoint_defect)
            .max(self.selfdual_defect)
    }
    pub fn pass(&self) -> bool {
        self.max_defect() <= self.tol
    }
}

/// Defects of the p-removal identities and rotation invariance.
#[derive(Debug, Clone)]
pub struct PLemmaReport {
    pub remove_top_defect: f64,
    pub remove_any_defect: f64,
    pub cap_off_defect: f64,
    pub rotation_defect: f64,
    pub tol: f64,
}

impl PLemmaReport {
    pub fn max_defect(&self) -> f64 {
        self.remove_top_defect
            .max(self.remove_any_defect)
            .max(self.cap_off_defect)
            .max(self.rotation_defect)
    }
    pub fn pass(&self) -> bool {
        self.max_defect() <= self.tol
    }
}

/// One channel of tetrahedral constants, indexed [alpha][beta][gamma][delta].
pub type DeltaChannel = Vec<Vec<Vec<Vec<C64>>>>;

/// Tetrahedral structure constants Delta(a,b,c; alpha,beta,gamma | delta),
/// one channel per nonzero (a,b,c).
#[derive(Debug, Clone)]
pub struct TetraTable {
    pub channels: HashMap<(usize, usize, usize), DeltaChannel>,
}

/// Defects of the Delta expansion identities and the cyclic symmetry.
#[derive(Debug, Clone)]
pub struct DeltaReport {
    pub replace_abd_defect: f64,
    pub replace_abc_defect: f64,
    pub z3_defect: f64,
    pub tol: f64,
}

impl DeltaReport {
    pub fn max_defect(&self) -> f64 {
        self.replace_abd_defect
            .max(self.replace_abc_defect)
            .max(self.z3_defect)
    }
    pub fn pass(&self) -> bool {
        self.max_defect() <= self.tol
    }
}

/// The image of an algebra morphism theta under the projector machinery.
#[derive(Debug, Clone)]
pub struct QMorphismData {
    /// Q(theta) = sum theta(alpha) alpha^* : H_A (x) Hbar_A -> H_B (x) Hbar_B.
    pub q_theta: Morphism,
    /// theta(p_A) = sum theta(alpha) theta(alpha)^*, a subprojection of p_B.
    pub theta_p: Morphism,
    /// u_B^* Q(theta) u_A : Q_A -> Q_B.
    pub compressed: Morphism,
    /// theta(alpha) per sector, aligned with wa's B_a.
    pub theta_b: Vec<Vec<Morphism>>,
    /// ONB of the target sector spaces extended around the theta-images.
    pub onb_b: Vec<Vec<Morphism>>,
}

/// Defects of the identities satisfied by Q(theta).
#[derive(Debug, Clone)]
pub struct QMorphismReport {
    pub partial_isometry_defect: f64,
    pub subprojection_defect: f64,
    pub remove_theta_defect: f64,
    pub replace_theta_abc_defect: f64,
    pub compressed_involutive_defect: f64,
    pub tol: f64,
}

impl QMorphismReport {
    pub fn max_defect(&self) -> f64 {
        self.partial_isometry_defect
            .max(self.subprojection_defect)
            .max(self.remove_theta_defect)
            .max(self.replace_theta_abc_defect)
            .max(self.compressed_involutive_defect)
    }
    pub fn pass(&self) -> bool {
        self.max_defect() <= self.tol
    }
}

impl Ctx {
    /// id_H (x) ev_H (x) id_Hbar : (H Hbar)(H Hbar) -> H Hbar, the middle cap
    /// of the pair-of-pants.
    pub fn middle_cap(&self, h: &Object) -> Result<Morphism> {
        let hbar = self.dual_object(h);
        let id_h = self.identity(&vec![h.clone()]);
        let id_hbar = self.identity(&vec![hbar]);
        self.tensor(&self.tensor(&id_h, &self.cap_ev(h))?, &id_hbar)
    }

    /// Assemble p = sum_a sum_{alpha in B_a} alpha alpha^*.
    pub fn build_p(&self, w: &WStarData) -> Result<ProjectorP> {
        let xw = w.hhbar_word(self);
        let mut p = self.zero_morphism(&xw, &xw);
        for ba in &w.b {
            for al in ba {
                p = p.add(&self.compose(al, &self.adjoint(al))?)?;
            }
        }
        let ranks = p
            .blocks
            .iter()
            .map(|b| linalg::orthonormal_column_basis(b, crate::tol::RANK_CUTOFF).ncols())
            .collect();
        Ok(ProjectorP { p, ranks })
    }

    /// p^2 = p = p^* and symmetric self-duality
    /// (p (x) id) coev_X = (id (x) p) coev_X for X = H (x) Hbar.
    pub fn check_p(&self, pp: &ProjectorP, tol: f64) -> Result<PReport> {
        let idem = self.compose(&pp.p, &pp.p)?.distance(&pp.p)?;
        let selfadj = self.adjoint(&pp.p).distance(&pp.p)?;
        // fold both legs into the single object X; Xbar = X as an object
        let pm = self.merge_at(&self.merge_at(&pp.p, Side::Tgt, 0), Side::Src, 0);
        let x = pm.src[0].clone();
        let xbar = self.dual_object(&x);
        let id_x = self.identity(&vec![x.clone()]);
        let sx = self.cup_s(&x);
        let p_on_xbar = self.cast_words(&pm, vec![xbar.clone()], vec![xbar.clone()]);
        let lhs = self.compose(&self.tensor(&pm, &self.identity(&vec![xbar]))?, &sx)?;
        let rhs = self.compose(&self.tensor(&id_x, &p_on_xbar)?, &sx)?;
        Ok(PReport {
            idempotent_defect: idem,
            selfadjoint_defect: selfadj,
            selfdual_defect: lhs.distance(&rhs)?,
            tol,
        })
    }

    /// The canonical isometries delta in Isom(c, a (x) b): the fusion-vertex
    /// basis vectors, in enumeration order.
    pub fn pair_isometries(&self, c: usize, a: usize, b: usize) -> Vec<Morphism> {
        let n = self.n_labels();
        let src = word_of_labels(n, &[c]);
        let tgt = word_of_labels(n, &[a, b]);
        (0..self.spec.n(a, b, c))
            .map(|ti| {
                let mut m = self.zero_morphism(&src, &tgt);
                m.blocks[c][(ti, 0)] = C64::new(1.0, 0.0);
                m
            })
            .collect()
    }

    /// One tetrahedral structure constant:
    /// Delta = d_c * (gamma^* . middle_cap . (alpha (x) beta) . delta).
    fn tetra_entry(
        &self,
        midc: &Morphism,
        c: usize,
        alpha: &Morphism,
        beta: &Morphism,
        gamma: &Morphism,
        delta: &Morphism,
    ) -> Result<C64> {
        let comp = self.compose_all(&[
            &self.adjoint(gamma),
            midc,
            &self.tensor(alpha, beta)?,
            delta,
        ])?;
        Ok(comp.blocks[c][(0, 0)] * C64::new(self.spec.dims[c], 0.0))
    }

    /// The full table over nonzero fusion channels with nonempty B-families.
    pub fn tetra_delta(&self, w: &WStarData) -> Result<TetraTable> {
        let h = w.h_object();
        let midc = self.middle_cap(&h)?;
        let n = self.n_labels();
        let mut channels = HashMap::new();
        for a in 0..n {
            if w.b[a].is_empty() {
                continue;
            }
            for b in 0..n {
                if w.b[b].is_empty() {
                    continue;
                }
                for c in 0..n {
                    if self.spec.n(a, b, c) == 0 || w.b[c].is_empty() {
                        continue;
                    }
                    let deltas = self.pair_isometries(c, a, b);
                    let mut tab = Vec::with_capacity(w.b[a].len());
                    for al in &w.b[a] {
                        let mut ta = Vec::with_capacity(w.b[b].len());
                        for be in &w.b[b] {
                            let mut tb = Vec::with_capacity(w.b[c].len());
                            for ga in &w.b[c] {
                                let mut tc = Vec::with_capacity(deltas.len());
                                for de in &deltas {
                                    tc.push(self.tetra_entry(&midc, c, al, be, ga, de)?);
                                }
                                tb.push(tc);
                            }
                            ta.push(tb);
                        }
                        tab.push(ta);
                    }
                    channels.insert((a, b, c), tab);
                }
            }
        }
        Ok(TetraTable { channels })
    }

    /// Conjugate of an element of C(a, H (x) Hbar), presented back on the
    /// two-letter word (H, Hbar) (the dual object of H (x) Hbar coincides
    /// with it).
    fn conjugate_to_hhbar(&self, f: &Morphism, xw: &Word) -> Result<Morphism> {
        let c = self.conjugate(f)?;
        Ok(self.unmerge_at(&c, Side::Tgt, 0, xw))
    }

    /// The expansion identities for Delta and the cyclic Z/3 symmetry.
    pub fn check_delta_identities(&self, w: &WStarData, tol: f64) -> Result<DeltaReport> {
        let h = w.h_object();
        let midc = self.middle_cap(&h)?;
        let xw = w.hhbar_word(self);
        let n = self.n_labels();
        let mut abd = 0.0f64;
        let mut abc = 0.0f64;
        let mut z3 = 0.0f64;
        for a in 0..n {
            for b in 0..n {
                if w.b[a].is_empty() || w.b[b].is_empty() {
                    continue;
                }
                for c in 0..n {
                    if self.spec.n(a, b, c) == 0 {
                        continue;
                    }
                    let deltas = self.pair_isometries(c, a, b);
                    let dcinv = C64::new(1.0 / self.spec.dims[c], 0.0);
                    for al in &w.b[a] {
                        for be in &w.b[b] {
                            let capped = self.compose(&midc, &self.tensor(al, be)?)?;
                            // (middle cap)(alpha (x) beta) delta
                            //   = d_c^{-1} sum_gamma Delta . gamma
                            for de in &deltas {
                                let lhs = self.compose(&capped, de)?;
                                let cw = word_of_labels(n, &[c]);
                                let mut rhs = self.zero_morphism(&cw, &xw);
                                for ga in &w.b[c] {
                                    let ent = self.tetra_entry(&midc, c, al, be, ga, de)?;
                                    rhs = rhs.add(&ga.scale(ent * dcinv))?;
                                }
                                abd = abd.max(lhs.distance(&rhs)?);
                            }
                            // gamma^* (middle cap)(alpha (x) beta)
                            //   = d_c^{-1} sum_delta Delta . delta^*
                            for ga in &w.b[c] {
                                let lhs = self.compose(&self.adjoint(ga), &capped)?;
                                let mut rhs = lhs.scale(C64::new(0.0, 0.0));
                                for de in &deltas {
                                    let ent = self.tetra_entry(&midc, c, al, be, ga, de)?;
                                    rhs = rhs.add(&self.adjoint(de).scale(ent * dcinv))?;
                                }
                                abc = abc.max(lhs.distance(&rhs)?);
                                // Z/3 rotation: Delta(a,b,c; al,be,ga | de)
                                //   = Delta(cbar,a,bbar; conj ga, al, conj be | F de)
                                let ga_c = self.conjugate_to_hhbar(ga, &xw)?;
                                let be_c = self.conjugate_to_hhbar(be, &xw)?;
                                let bbar = self.spec.dual[b];
                                for de in &deltas {
                                    let rot_de = self.fourier(de)?;
                                    let lhs_ent =
                                        self.tetra_entry(&midc, c, al, be, ga, de)?;
                                    let rhs_ent = self.tetra_entry(
                                        &midc, bbar, &ga_c, al, &be_c, &rot_de,
                                    )?;
                                    z3 = z3.max((lhs_ent - rhs_ent).norm());
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(DeltaReport {
            replace_abd_defect: abd,
            replace_abc_defect: abc,
            z3_defect: z3,
            tol,
        })
    }

    /// The p-removal identities and rotation invariance of the dressed
    /// pair-of-pants.
    pub fn check_p_lemmas(&self, w: &WStarData, pp: &ProjectorP, tol: f64) -> Result<PLemmaReport> {
        let h = w.h_object();
        let xw = w.hhbar_word(self);
        let midc = self.middle_cap(&h)?;
        let idx = self.identity(&xw);
        let pp2 = self.tensor(&pp.p, &pp.p)?;
        let m0 = self.compose(&midc, &pp2)?;
        let top = self.compose(&pp.p, &m0)?;
        let remove_top = top.distance(&m0)?;
        let v1 = self.compose_all(&[&pp.p, &midc, &self.tensor(&pp.p, &idx)?])?;
        let v2 = self.compose_all(&[&pp.p, &midc, &self.tensor(&idx, &pp.p)?])?;
        let remove_any = top
            .distance(&m0)?
            .max(top.distance(&v1)?)
            .max(top.distance(&v2)?);
        // capping off the Hbar leg of p yields id_H
        let tr = self.partial_trace(&pp.p, TraceSide::Right)?;
        let cap_off = tr.distance(&self.identity(&vec![h.clone()]))?;
        // rotation invariance of the dressed pair-of-pants: with everything
        // folded into X = H (x) Hbar, the adjoint comultiplication is a fixed
        // point of the 1-click rotation (d-weights cancel since all three
        // legs carry X)
        let m_full = top.scale(C64::new(w.d_h.sqrt(), 0.0));
        let m2 = self.merge_at(
            &self.merge_at(&self.merge_at(&m_full, Side::Src, 0), Side::Src, 1),
            Side::Tgt,
            0,
        );
        let f = self.adjoint(&m2);
        let rot = self.fourier(&f)?;
        let rot_cast = self.cast_words(&rot, f.src.clone(), f.tgt.clone());
        let rotation = rot_cast.distance(&f)?;
        Ok(PLemmaReport {
            remove_top_defect: remove_top,
            remove_any_defect: remove_any,
            cap_off_defect: cap_off,
            rotation_defect: rotation,
            tol,
        })
    }

    /// p absorbs the matrix-coefficient morphisms: p pi_a(f) = pi_a(f) and
    /// p coev_H = coev_H.
    pub fn check_p_absorbs_pi(&self, w: &WStarData, pp: &ProjectorP) -> Result<f64> {
        let mut worst = 0.0f64;
        for a in 0..self.n_labels() {
            for f in &w.onb[a] {
                let pi = self.induced_pi(w, f)?;
                worst = worst.max(self.compose(&pp.p, &pi)?.distance(&pi)?);
            }
        }
        let coev = self.cup_s(&w.h_object());
        worst = worst.max(self.compose(&pp.p, &coev)?.distance(&coev)?);
        Ok(worst)
    }

    /// Factor p = u u^* with u isometric and build the Q-system on im(p):
    /// m = d_H^{1/2} u^* (middle cap)(u (x) u), i = d_H^{-1/2} u^* coev_H.
    pub fn build_q(&self, w: &WStarData, pp: &ProjectorP) -> Result<QData> {
        let xw = w.hhbar_word(self);
        let n = self.n_labels();
        let mut mult = vec![0usize; n];
        let mut cols: Vec<CMat> = Vec::with_capacity(n);
        for (c, m) in mult.iter_mut().enumerate() {
            let u_c = linalg::orthonormal_column_basis(&pp.p.blocks[c], crate::tol::RANK_CUTOFF);
            *m = u_c.ncols();
            cols.push(u_c);
        }
        let q = Object { mult };
        let qw: Word = vec![q.clone()];
        let mut u = self.zero_morphism(&qw, &xw);
        u.blocks = cols;
        let ustar = self.adjoint(&u);
        let midc = self.middle_cap(&w.h_object())?;
        let m_q = self
            .compose_all(&[&ustar, &midc, &self.tensor(&u, &u)?])?
            .scale(C64::new(w.d_h.sqrt(), 0.0));
        let i_q = self
            .compose(&ustar, &self.cup_s(&w.h_object()))?
            .scale(C64::new(1.0 / w.d_h.sqrt(), 0.0));
        Ok(QData {
            alg: AlgebraObject { a: q.clone(), m: m_q, i: i_q },
            emb: SubobjectEmbedding { q, u },
        })
    }

    /// u^* u = id_Q, u u^* = p, and m_Q m_Q^* = d_H id_Q.
    pub fn check_embedding(&self, pp: &ProjectorP, qd: &QData) -> Result<f64> {
        let u = &qd.emb.u;
        let ustar = self.adjoint(u);
        let iso = self.compose(&ustar, u)?.distance(&self.identity(&u.src))?;
        let range = self.compose(u, &ustar)?.distance(&pp.p)?;
        let pants = self
            .compose(&qd.alg.m, &self.adjoint(&qd.alg.m))?
            .distance(&self.identity(&qd.alg.word()).scale(C64::new(pp_dh(self, qd), 0.0)))?;
        Ok(iso.max(range).max(pants))
    }

    /// Q(theta), theta(p_A), and the compression u_B^* Q(theta) u_A, with the
    /// target ONB extended around the theta-images of the source ONB.
    pub fn q_morphism(
        &self,
        am: &AlgebraMorphism,
        wa: &WStarData,
        wb: &WStarData,
        qa: &QData,
        qb: &QData,
    ) -> Result<QMorphismData> {
        let n = self.n_labels();
        let mut onb_b: Vec<Vec<Morphism>> = Vec::with_capacity(n);
        let mut theta_b: Vec<Vec<Morphism>> = Vec::with_capacity(n);
        for a in 0..n {
            // theta-images of the source ONB must stay orthonormal in L2(B)
            let images: Vec<Morphism> = wa.onb[a]
                .iter()
                .map(|f| self.compose(&am.theta, f))
                .collect::<Result<_>>()?;
            for (r, f) in images.iter().enumerate() {
                for (c, g) in images.iter().enumerate() {
                    let ip = self.l2_inner(wb, a, f, g)?;
                    let want = if r == c { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) };
                    if (ip - want).norm() > crate::tol::RANK_CUTOFF {
                        return Err(QkitError::Precondition(
                            "q_morphism: theta-images of the source ONB are not orthonormal"
                                .into(),
                        ));
                    }
                }
            }
            // complete to an ONB of the target sector space
            let mut basis = images.clone();
            for cand in &wb.sector_basis[a] {
                let mut v = cand.clone();
                for u in &basis {
                    let c = self.l2_inner(wb, a, u, &v)?;
                    v = v.sub(&u.scale(c))?;
                }
                let nrm = self.l2_inner(wb, a, &v, &v)?.re;
                if nrm > crate::tol::RANK_CUTOFF {
                    basis.push(v.scale(C64::new(1.0 / nrm.sqrt(), 0.0)));
                }
            }
            if basis.len() != wb.sector_basis[a].len() {
                return Err(QkitError::Precondition(
                    "q_morphism: ONB completion failed".into(),
                ));
            }
            let s = C64::new(self.spec.dims[a].sqrt(), 0.0);
            let mut tb = Vec::with_capacity(images.len());
            for f in &images {
                tb.push(self.induced_pi(wb, f)?.scale(s));
            }
            theta_b.push(tb);
            onb_b.push(basis);
        }
        let xa = wa.hhbar_word(self);
        let xb = wb.hhbar_word(self);
        let mut q_theta = self.zero_morphism(&xa, &xb);
        let mut theta_p = self.zero_morphism(&xb, &xb);
        for (a, tb) in theta_b.iter().enumerate() {
            for (k, ta) in tb.iter().enumerate() {
                let alpha = &wa.b[a][k];
                q_theta = q_theta.add(&self.compose(ta, &self.adjoint(alpha))?)?;
                theta_p = theta_p.add(&self.compose(ta, &self.adjoint(ta))?)?;
            }
        }
        let compressed =
            self.compose_all(&[&self.adjoint(&qb.emb.u), &q_theta, &qa.emb.u])?;
        Ok(QMorphismData { q_theta, theta_p, compressed, theta_b, onb_b })
    }

    /// The identity battery for Q(theta).
    #[allow(clippy::too_many_arguments)]
    pub fn check_q_morphism(
        &self,
        am: &AlgebraMorphism,
        wa: &WStarData,
        wb: &WStarData,
        pa: &ProjectorP,
        pb: &ProjectorP,
        qa: &QData,
        qb: &QData,
        qm: &QMorphismData,
        tol: f64,
    ) -> Result<QMorphismReport> {
        let qstar = self.adjoint(&qm.q_theta);
        let pi1 = self
            .compose(&qm.q_theta, &qstar)?
            .distance(&qm.theta_p)?;
        let pi2 = self.compose(&qstar, &qm.q_theta)?.distance(&pa.p)?;
        let sub = self
            .compose(&pb.p, &qm.theta_p)?
            .distance(&qm.theta_p)?;
        // pi^B_a(theta f) = Q(theta) pi^A_a(f)
        let mut rem = 0.0f64;
        for a in 0..self.n_labels() {
            for f in &wa.onb[a] {
                let lhs = self.induced_pi(wb, &self.compose(&am.theta, f)?)?;
                let rhs = self.compose(&qm.q_theta, &self.induced_pi(wa, f)?)?;
                rem = rem.max(lhs.distance(&rhs)?);
            }
        }
        // theta(gamma)^* (middle cap_B)(theta(alpha) (x) theta(beta))
        //   = d_{H_A}^{1/2} / (d_c d_{H_B}^{1/2}) sum_delta Delta^A . delta^*
        let midc_a = self.middle_cap(&wa.h_object())?;
        let midc_b = self.middle_cap(&wb.h_object())?;
        let mut rep = 0.0f64;
        let n = self.n_labels();
        for a in 0..n {
            for b in 0..n {
                if qm.theta_b[a].is_empty() || qm.theta_b[b].is_empty() {
                    continue;
                }
                for c in 0..n {
                    if self.spec.n(a, b, c) == 0 || qm.theta_b[c].is_empty() {
                        continue;
                    }
                    let deltas = self.pair_isometries(c, a, b);
                    let scale = C64::new(
                        wa.d_h.sqrt() / (self.spec.dims[c] * wb.d_h.sqrt()),
                        0.0,
                    );
                    for (ai, tal) in qm.theta_b[a].iter().enumerate() {
                        for (bi, tbe) in qm.theta_b[b].iter().enumerate() {
                            let capped = self.compose(&midc_b, &self.tensor(tal, tbe)?)?;
                            for (ci, tga) in qm.theta_b[c].iter().enumerate() {
                                let lhs = self.compose(&self.adjoint(tga), &capped)?;
                                let mut rhs = lhs.scale(C64::new(0.0, 0.0));
                                for de in &deltas {
                                    let ent = self.tetra_entry(
                                        &midc_a,
                                        c,
                                        &wa.b[a][ai],
                                        &wa.b[b][bi],
                                        &wa.b[c][ci],
                                        de,
                                    )?;
                                    rhs = rhs.add(&self.adjoint(de).scale(ent * scale))?;
                                }
                                rep = rep.max(lhs.distance(&rhs)?);
                            }
                        }
                    }
                }
            }
        }
        let comp_am = AlgebraMorphism {
            theta: qm.compressed.clone(),
            source: qa.alg.clone(),
            target: qb.alg.clone(),
        };
        let inv = self.check_involutive(&comp_am, tol)?.max_defect();
        Ok(QMorphismReport {
            partial_isometry_defect: pi1.max(pi2),
            subprojection_defect: sub,
            remove_theta_defect: rem,
            replace_theta_abc_defect: rep,
            compressed_involutive_defect: inv,
            tol,
        })
    }
}

fn pp_dh(ctx: &Ctx, qd: &QData) -> f64 {
    // d_H of the ambient W* object equals the dimension of im(p)'s ambient
    // H, recovered from the embedding's target
    ctx.dim_object(&qd.emb.u.tgt[0])
}
