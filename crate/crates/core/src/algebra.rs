//! Algebra objects, the full verification ladder for unitary Frobenius
//! algebras (Q-systems), involutive algebra morphisms, and canonical
//! example generators.

use crate::category::{Ctx, Object, Word};
use crate::duality::TraceSide;
use crate::linalg::{fit_scalar_identity, C64};
use crate::morphism::{Morphism, Side};
use crate::{QkitError, Result};

/// An algebra object: underlying object A with multiplication m : A(x)A -> A
/// and unit i : 1 -> A, stored in single-factor presentations.
#[derive(Debug, Clone)]
pub struct AlgebraObject {
    pub a: Object,
    pub m: Morphism,
    pub i: Morphism,
}

impl AlgebraObject {
    pub fn word(&self) -> Word {
        vec![self.a.clone()]
    }

    pub fn word2(&self) -> Word {
        vec![self.a.clone(), self.a.clone()]
    }
}

/// Defects and scalars of the full Q-system verification ladder.
#[derive(Debug, Clone)]
pub struct FrobeniusReport {
    pub assoc_defect: f64,
    pub unital_defect: f64,
    pub frobenius_defect: f64,
    /// The alternative route: defect of the self-duality cups/caps
    /// ev = i*m, coev = m*i satisfying both zig-zag identities.
    pub frobenius_selfdual_defect: f64,
    /// m m* = lambda id (least-squares value and residual).
    pub lambda: f64,
    pub lambda_residual: f64,
    /// i*i = lambda'.
    pub lambda_prime: f64,
    pub d_a: f64,
    pub connected: bool,
    /// Condition (1): R = S = m* i are standard (zig-zag and balancing).
    pub cond1_defect: f64,
    /// Condition (2): R* R = i* m m* i = d_A.
    pub cond2_defect: f64,
    /// Condition (3): sigma_L unitary.
    pub sigma_unitarity_defect: f64,
    /// sigma_L = sigma_R whenever either is unitary.
    pub sigma_lr_defect: f64,
    pub is_qsystem: bool,
    pub normalized: bool,
    pub tol: f64,
}

impl FrobeniusReport {
    /// Worst defect across the whole ladder (excluding the scalars).
    pub fn max_ladder_defect(&self) -> f64 {
        self.assoc_defect
            .max(self.unital_defect)
            .max(self.frobenius_defect)
            .max(self.frobenius_selfdual_defect)
            .max(self.lambda_residual)
            .max(self.cond1_defect)
            .max(self.cond2_defect)
            .max(self.sigma_unitarity_defect)
            .max(self.sigma_lr_defect)
    }

    fn empty(tol: f64) -> Self {
        FrobeniusReport {
            assoc_defect: f64::INFINITY,
            unital_defect: f64::INFINITY,
            frobenius_defect: f64::INFINITY,
            frobenius_selfdual_defect: f64::INFINITY,
            lambda: f64::NAN,
            lambda_residual: f64::INFINITY,
            lambda_prime: f64::NAN,
            d_a: f64::NAN,
            connected: false,
            cond1_defect: f64::INFINITY,
            cond2_defect: f64::INFINITY,
            sigma_unitarity_defect: f64::INFINITY,
            sigma_lr_defect: f64::INFINITY,
            is_qsystem: false,
            normalized: false,
            tol,
        }
    }
}

/// A morphism theta : A -> B between algebra objects.
#[derive(Debug, Clone)]
pub struct AlgebraMorphism {
    pub theta: Morphism,
    pub source: AlgebraObject,
    pub target: AlgebraObject,
}

/// Defects of the involutive-algebra-morphism laws.
#[derive(Debug, Clone)]
pub struct InvolutiveReport {
    /// m_B (theta (x) theta) = theta m_A.
    pub multiplicative_defect: f64,
    /// theta i_A = i_B.
    pub unital_defect: f64,
    /// sigma_B theta = conj(theta) sigma_A.
    pub involutive_defect: f64,
    pub tol: f64,
}

impl InvolutiveReport {
    pub fn max_defect(&self) -> f64 {
        self.multiplicative_defect
            .max(self.unital_defect)
            .max(self.involutive_defect)
    }

    pub fn pass(&self) -> bool {
        self.max_defect() <= self.tol
    }
}

impl Ctx {
    fn check_shapes(&self, alg: &AlgebraObject) -> Result<()> {
        if alg.m.src != alg.word2() || alg.m.tgt != alg.word() {
            return Err(QkitError::Shape("algebra: m has wrong presentation".into()));
        }
        if !alg.i.src.is_empty() || alg.i.tgt != alg.word() {
            return Err(QkitError::Shape("algebra: i has wrong presentation".into()));
        }
        Ok(())
    }

    /// Associativity, unitality, and connectedness.
    pub fn check_algebra(&self, alg: &AlgebraObject, tol: f64) -> Result<FrobeniusReport> {
        self.check_shapes(alg)?;
        let id_a = self.identity(&alg.word());
        let left = self.compose(&alg.m, &self.tensor(&alg.m, &id_a)?)?;
        let right = self.compose(&alg.m, &self.tensor(&id_a, &alg.m)?)?;
        let assoc_defect = left.distance(&right)?;
        let ul = self.compose(&alg.m, &self.tensor(&alg.i, &id_a)?)?;
        let ur = self.compose(&alg.m, &self.tensor(&id_a, &alg.i)?)?;
        let unital_defect = ul.distance(&id_a)?.max(ur.distance(&id_a)?);
        let mut rep = FrobeniusReport::empty(tol);
        rep.assoc_defect = assoc_defect;
        rep.unital_defect = unital_defect;
        rep.connected = alg.a.mult[self.unit()] == 1;
        rep.d_a = self.dim_object(&alg.a);
        Ok(rep)
    }

    /// Frobenius condition: m* m = (id (x) m)(m* (x) id) = (m (x) id)(id (x) m*).
    pub fn check_frobenius(&self, alg: &AlgebraObject, _tol: f64) -> Result<f64> {
        let id_a = self.identity(&alg.word());
        let mstar = self.adjoint(&alg.m);
        let mid = self.compose(&mstar, &alg.m)?;
        let lhs = self.compose(&self.tensor(&id_a, &alg.m)?, &self.tensor(&mstar, &id_a)?)?;
        let rhs = self.compose(&self.tensor(&alg.m, &id_a)?, &self.tensor(&id_a, &mstar)?)?;
        Ok(mid.distance(&lhs)?.max(mid.distance(&rhs)?))
    }

    /// The alternative Frobenius route: the self-duality maps ev = i* m and
    /// coev = m* i satisfy both zig-zag identities.
    pub fn frobenius_selfdual_defect(&self, alg: &AlgebraObject) -> Result<f64> {
        let id_a = self.identity(&alg.word());
        let cup = self.compose(&self.adjoint(&alg.m), &alg.i)?; // 1 -> A (x) A
        let cap = self.adjoint(&cup); // A (x) A -> 1
        let s1 = self.compose(&self.tensor(&cap, &id_a)?, &self.tensor(&id_a, &cup)?)?;
        let s2 = self.compose(&self.tensor(&id_a, &cap)?, &self.tensor(&cup, &id_a)?)?;
        Ok(s1.distance(&id_a)?.max(s2.distance(&id_a)?))
    }

    /// (lambda, residual, lambda', d_A) from m m* = lambda id and i* i.
    pub fn separability_and_unit_norm(&self, alg: &AlgebraObject) -> Result<(f64, f64, f64, f64)> {
        let mmstar = self.compose(&alg.m, &self.adjoint(&alg.m))?;
        let block_refs: Vec<&crate::linalg::CMat> = mmstar.blocks.iter().collect();
        let (lam, residual) = fit_scalar_identity(&block_refs);
        let lambda_prime = self
            .compose(&self.adjoint(&alg.i), &alg.i)?
            .scalar_value(self)
            .re;
        Ok((lam.re, residual, lambda_prime, self.dim_object(&alg.a)))
    }

    /// The canonical maps sigma_L, sigma_R : A -> Abar built from the counit
    /// i* m and the standard (co)evaluations of A.
    pub fn sigma_maps(&self, alg: &AlgebraObject) -> Result<(Morphism, Morphism)> {
        let id_a = self.identity(&alg.word());
        let abar = self.dual_object(&alg.a);
        let id_abar = self.identity(&vec![abar.clone()]);
        let counit_m = self.compose(&self.adjoint(&alg.i), &alg.m)?; // A (x) A -> 1
        // sigma_L = ((i* m) (x) id_Abar) . (id_A (x) coev_A)
        let sl = self.compose(
            &self.tensor(&counit_m, &id_abar)?,
            &self.tensor(&id_a, &self.cup_s(&alg.a))?,
        )?;
        // sigma_R = (id_Abar (x) (i* m)) . (ev_A* (x) id_A)
        let sr = self.compose(
            &self.tensor(&id_abar, &counit_m)?,
            &self.tensor(&self.cup_r(&alg.a), &id_a)?,
        )?;
        Ok((sl, sr))
    }

    /// Matrix-unit basis of End(A) in the single-factor presentation.
    fn end_basis(&self, a: &Object) -> Vec<Morphism> {
        let w: Word = vec![a.clone()];
        let mut out = Vec::new();
        for c in 0..self.n_labels() {
            for r in 0..a.mult[c] {
                for s in 0..a.mult[c] {
                    let mut m = self.zero_morphism(&w, &w);
                    m.blocks[c][(r, s)] = C64::new(1.0, 0.0);
                    out.push(m);
                }
            }
        }
        out
    }

    /// The full Q-system ladder. Evaluates the three equivalent conditions
    /// independently: (1) R = S = m* i satisfy zig-zag and balancing,
    /// (2) R* R = d_A, (3) sigma_L unitary.
    pub fn qsystem_check(&self, alg: &AlgebraObject, tol: f64) -> Result<FrobeniusReport> {
        let mut rep = self.check_algebra(alg, tol)?;
        rep.frobenius_defect = self.check_frobenius(alg, tol)?;
        rep.frobenius_selfdual_defect = self.frobenius_selfdual_defect(alg)?;
        let (lam, lam_res, lam_prime, d_a) = self.separability_and_unit_norm(alg)?;
        rep.lambda = lam;
        rep.lambda_residual = lam_res;
        rep.lambda_prime = lam_prime;
        rep.d_a = d_a;

        // condition (1): zig-zag is the self-duality defect; balancing means
        // left and right closed traces with these cups agree on End(A)
        let cup = self.compose(&self.adjoint(&alg.m), &alg.i)?;
        let cap = self.adjoint(&cup);
        let id_a = self.identity(&alg.word());
        let mut balancing = 0.0f64;
        for f in self.end_basis(&alg.a) {
            let lt = self
                .compose_all(&[&cap, &self.tensor(&id_a, &f)?, &cup])?
                .scalar_value(self);
            let rt = self
                .compose_all(&[&cap, &self.tensor(&f, &id_a)?, &cup])?
                .scalar_value(self);
            balancing = balancing.max((lt - rt).norm());
        }
        rep.cond1_defect = rep.frobenius_selfdual_defect.max(balancing);

        // condition (2): R* R = i* m m* i = d_A
        let rr = self.compose(&cap, &cup)?.scalar_value(self);
        rep.cond2_defect = (rr - C64::new(d_a, 0.0)).norm();

        // condition (3): sigma_L unitary; also sigma_L = sigma_R
        let (sl, sr) = self.sigma_maps(alg)?;
        let u1 = self
            .compose(&self.adjoint(&sl), &sl)?
            .distance(&self.identity(&alg.word()))?;
        let abar_w: Word = vec![self.dual_object(&alg.a)];
        let u2 = self
            .compose(&sl, &self.adjoint(&sl))?
            .distance(&self.identity(&abar_w))?;
        rep.sigma_unitarity_defect = u1.max(u2);
        rep.sigma_lr_defect = sl.distance(&sr)?;

        let base_ok = rep.assoc_defect <= tol
            && rep.unital_defect <= tol
            && rep.frobenius_defect <= tol
            && rep.lambda_residual <= tol;
        rep.is_qsystem = base_ok
            && rep.cond1_defect <= tol
            && rep.cond2_defect <= tol
            && rep.sigma_unitarity_defect <= tol;
        rep.normalized = (rep.lambda_prime - 1.0).abs() <= tol;
        Ok(rep)
    }

    /// Rescale (m, i) -> (lambda'^{1/2} m, lambda'^{-1/2} i) so that the new
    /// unit has i* i = 1.
    pub fn normalize_qsystem(&self, alg: &AlgebraObject, tol: f64) -> Result<AlgebraObject> {
        let lambda_prime = self
            .compose(&self.adjoint(&alg.i), &alg.i)?
            .scalar_value(self)
            .re;
        if lambda_prime <= tol {
            return Err(QkitError::Precondition(
                "normalize_qsystem: unit norm not positive".into(),
            ));
        }
        let s = lambda_prime.sqrt();
        Ok(AlgebraObject {
            a: alg.a.clone(),
            m: alg.m.scale(C64::new(s, 0.0)),
            i: alg.i.scale(C64::new(1.0 / s, 0.0)),
        })
    }

    /// The involutive-algebra-morphism laws for theta : A -> B.
    pub fn check_involutive(&self, am: &AlgebraMorphism, tol: f64) -> Result<InvolutiveReport> {
        let th = &am.theta;
        let (a, b) = (&am.source, &am.target);
        let mult = self
            .compose(&b.m, &self.tensor(th, th)?)?
            .distance(&self.compose(th, &a.m)?)?;
        let unital = self.compose(th, &a.i)?.distance(&b.i)?;
        let (sa, _) = self.sigma_maps(a)?;
        let (sb, _) = self.sigma_maps(b)?;
        let thbar = self.conjugate(th)?;
        let invol = self
            .compose(&sb, th)?
            .distance(&self.compose(&thbar, &sa)?)?;
        Ok(InvolutiveReport {
            multiplicative_defect: mult,
            unital_defect: unital,
            involutive_defect: invol,
            tol,
        })
    }

    /// Defect of m_A [id_A (x) (theta* theta)] = theta* theta m_A.
    pub fn check_cstar_iso_condition(&self, am: &AlgebraMorphism, _tol: f64) -> Result<f64> {
        let tt = self.compose(&self.adjoint(&am.theta), &am.theta)?;
        let id_a = self.identity(&am.source.word());
        let lhs = self.compose(&am.source.m, &self.tensor(&id_a, &tt)?)?;
        let rhs = self.compose(&tt, &am.source.m)?;
        lhs.distance(&rhs)
    }

    /// The trivial Q-system on the unit object.
    pub fn trivial_qsystem(&self) -> AlgebraObject {
        let a = Object::simple(self.n_labels(), self.unit());
        let w: Word = vec![a.clone()];
        let ww: Word = vec![a.clone(), a.clone()];
        let mut m = self.zero_morphism(&ww, &w);
        m.blocks[self.unit()][(0, 0)] = C64::new(1.0, 0.0);
        let empty: Word = Vec::new();
        let mut i = self.zero_morphism(&empty, &w);
        i.blocks[self.unit()][(0, 0)] = C64::new(1.0, 0.0);
        AlgebraObject { a, m, i }
    }

    /// Group algebra of a pointed category: A = (+)_g g with unit structure
    /// coefficients. Requires every label invertible (all fusion channels
    /// one-dimensional, group-like).
    pub fn group_algebra(&self) -> Result<AlgebraObject> {
        let n = self.n_labels();
        for g in 0..n {
            for h in 0..n {
                let total: usize = (0..n).map(|c| self.spec.n(g, h, c)).sum();
                if total != 1 {
                    return Err(QkitError::Precondition(
                        "group_algebra: category is not pointed".into(),
                    ));
                }
            }
        }
        let a = Object { mult: vec![1; n] };
        let w: Word = vec![a.clone()];
        let ww: Word = vec![a.clone(), a.clone()];
        let mut m = self.zero_morphism(&ww, &w);
        for c in 0..n {
            // every fusion tree of A (x) A into c is a product pair g h = c
            let count = self.trees(&ww, c).len();
            for ti in 0..count {
                m.blocks[c][(0, ti)] = C64::new(1.0, 0.0);
            }
        }
        let empty: Word = Vec::new();
        let mut i = self.zero_morphism(&empty, &w);
        i.blocks[self.unit()][(0, 0)] = C64::new(1.0, 0.0);
        Ok(AlgebraObject { a, m, i })
    }

    /// The inner-hom algebra on c (x) cbar with the unscaled structure maps
    /// m = id (x) ev (x) id, i = coev.
    pub fn inner_hom_algebra(&self, c: usize) -> Result<AlgebraObject> {
        let n = self.n_labels();
        let cw: Word = crate::category::word_of_labels(n, &[c]);
        let cbar = self.spec.dual[c];
        let cbw: Word = crate::category::word_of_labels(n, &[cbar]);
        let cobj = cw[0].clone();
        let a = self.object_of_word(&vec![cobj.clone(), cbw[0].clone()]);
        // m on the expanded word [c, cbar, c, cbar] -> [c, cbar]
        let raw = self.tensor(
            &self.tensor(&self.identity(&cw), &self.cap_ev(&cobj))?,
            &self.identity(&cbw),
        )?;
        let m = {
            let t = self.merge_at(&raw, Side::Tgt, 0);
            let s = self.merge_at(&t, Side::Src, 0);
            self.merge_at(&s, Side::Src, 1)
        };
        let i = self.merge_at(&self.cup_s(&cobj), Side::Tgt, 0);
        debug_assert_eq!(m.tgt, vec![a.clone()]);
        Ok(AlgebraObject { a, m, i })
    }

    /// The normalized inner-hom Q-system on c: m scaled by d_c^{1/2} and
    /// i by d_c^{-1/2}.
    pub fn inner_hom_qsystem(&self, c: usize) -> Result<AlgebraObject> {
        let alg = self.inner_hom_algebra(c)?;
        let s = self.spec.dims[c].sqrt();
        Ok(AlgebraObject {
            a: alg.a,
            m: alg.m.scale(C64::new(s, 0.0)),
            i: alg.i.scale(C64::new(1.0 / s, 0.0)),
        })
    }

    /// Categorical left/right traces of an algebra endomorphism using the
    /// standard duality pack (used by tests for balancing cross-checks).
    pub fn algebra_trace(&self, f: &Morphism, side: TraceSide) -> Result<C64> {
        Ok(self.partial_trace(f, side)?.scalar_value(self))
    }
}
