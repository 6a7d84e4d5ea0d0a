//! Category-level consistency checks: pentagon equation, unitarity of the
//! F-matrices, the dimension homomorphism property, and the duality
//! identities satisfied by the standard cups/caps.

use crate::category::{word_of_labels, CategorySpec, Ctx};
use crate::linalg::{defect_from_identity, C64};
use crate::Result;

/// Maximal defects of each category-level identity.
#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub pentagon_defect: f64,
    pub unitarity_defect: f64,
    pub dim_homomorphism_defect: f64,
    pub zigzag_defect: f64,
    pub standardness_defect: f64,
    pub balancing_defect: f64,
    pub tol: f64,
}

impl ValidationReport {
    pub fn max_defect(&self) -> f64 {
        [
            self.pentagon_defect,
            self.unitarity_defect,
            self.dim_homomorphism_defect,
            self.zigzag_defect,
            self.standardness_defect,
            self.balancing_defect,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }

    pub fn pass(&self) -> bool {
        self.max_defect() <= self.tol
    }
}

/// Pentagon residual over all label 5-tuples (a,b,c,d; e), including
/// fusion multiplicities:
///   sum_rho F^{f0 c d}_e[(g,b,g),(l,d,rho)] * F^{a b l}_e[(f0,a,rho),(k,l,n)]
/// = sum_{h,s,t,p} F^{abc}_g[(f0,a,b),(h,s,t)] * F^{a h d}_e[(g,t,g),(k,p,n)]
///                 * F^{bcd}_k[(h,s,p),(l,d,l)].
fn pentagon_defect(spec: &CategorySpec) -> f64 {
    let n = spec.n_labels();
    let mut worst = 0.0f64;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    for e in 0..n {
                        worst = worst.max(pentagon_defect_at(spec, a, b, c, d, e));
                    }
                }
            }
        }
    }
    worst
}

#[allow(clippy::too_many_arguments)]
fn pentagon_defect_at(
    spec: &CategorySpec,
    a: usize,
    b: usize,
    c: usize,
    d: usize,
    e: usize,
) -> f64 {
    let n = spec.n_labels();
    let mut worst = 0.0f64;
    // free indices: f0 (a,b fusion channel), g (f0,c channel), k, l and the
    // vertex labels alpha, beta, gamma, delta, lambda, nu
    for f0 in 0..n {
        for g in 0..n {
            if spec.n(a, b, f0) == 0 || spec.n(f0, c, g) == 0 || spec.n(g, d, e) == 0 {
                continue;
            }
            let f_fcd = spec.f_mat(f0, c, d, e);
            let fcd_rows = spec.f_rows(f0, c, d, e);
            let fcd_cols = spec.f_cols(f0, c, d, e);
            let f_abc = spec.f_mat(a, b, c, g);
            let abc_rows = spec.f_rows(a, b, c, g);
            let abc_cols = spec.f_cols(a, b, c, g);
            for k in 0..n {
                for l in 0..n {
                    if spec.n(c, d, l) == 0
                        || spec.n(a, k, e) == 0
                        || spec.n(b, l, k) == 0
                        || spec.n(f0, l, e) == 0
                    {
                        continue;
                    }
                    let f_abl = spec.f_mat(a, b, l, e);
                    let abl_rows = spec.f_rows(a, b, l, e);
                    let abl_cols = spec.f_cols(a, b, l, e);
                    for alpha in 0..spec.n(a, b, f0) {
                        for beta in 0..spec.n(f0, c, g) {
                            for gamma in 0..spec.n(g, d, e) {
                                for delta in 0..spec.n(c, d, l) {
                                    for lambda in 0..spec.n(b, l, k) {
                                        for nu in 0..spec.n(a, k, e) {
                                            let mut lhs = C64::new(0.0, 0.0);
                                            for rho in 0..spec.n(f0, l, e) {
                                                let r1 = fcd_rows
                                                    .iter()
                                                    .position(|&t| t == (g, beta, gamma))
                                                    .unwrap();
                                                let c1 = fcd_cols
                                                    .iter()
                                                    .position(|&t| t == (l, delta, rho))
                                                    .unwrap();
                                                let r2 = abl_rows
                                                    .iter()
                                                    .position(|&t| t == (f0, alpha, rho))
                                                    .unwrap();
                                                let c2 = abl_cols
                                                    .iter()
                                                    .position(|&t| t == (k, lambda, nu))
                                                    .unwrap();
                                                lhs += f_fcd[(r1, c1)] * f_abl[(r2, c2)];
                                            }
                                            let mut rhs = C64::new(0.0, 0.0);
                                            for h in 0..n {
                                                let nh1 = spec.n(b, c, h);
                                                let nh2 = spec.n(a, h, g);
                                                let nh3 = spec.n(h, d, k);
                                                if nh1 == 0 || nh2 == 0 || nh3 == 0 {
                                                    continue;
                                                }
                                                let f_ahd = spec.f_mat(a, h, d, e);
                                                let ahd_rows = spec.f_rows(a, h, d, e);
                                                let ahd_cols = spec.f_cols(a, h, d, e);
                                                let f_bcd = spec.f_mat(b, c, d, k);
                                                let bcd_rows = spec.f_rows(b, c, d, k);
                                                let bcd_cols = spec.f_cols(b, c, d, k);
                                                for sigma in 0..nh1 {
                                                    for tau in 0..nh2 {
                                                        let r3 = abc_rows
                                                            .iter()
                                                            .position(|&t| {
                                                                t == (f0, alpha, beta)
                                                            })
                                                            .unwrap();
                                                        let c3 = abc_cols
                                                            .iter()
                                                            .position(|&t| t == (h, sigma, tau))
                                                            .unwrap();
                                                        let v1 = f_abc[(r3, c3)];
                                                        if v1.norm() == 0.0 {
                                                            continue;
                                                        }
                                                        for phi in 0..nh3 {
                                                            let r4 = ahd_rows
                                                                .iter()
                                                                .position(|&t| {
                                                                    t == (g, tau, gamma)
                                                                })
                                                                .unwrap();
                                                            let c4 = ahd_cols
                                                                .iter()
                                                                .position(|&t| {
                                                                    t == (k, phi, nu)
                                                                })
                                                                .unwrap();
                                                            let r5 = bcd_rows
                                                                .iter()
                                                                .position(|&t| {
                                                                    t == (h, sigma, phi)
                                                                })
                                                                .unwrap();
                                                            let c5 = bcd_cols
                                                                .iter()
                                                                .position(|&t| {
                                                                    t == (l, delta, lambda)
                                                                })
                                                                .unwrap();
                                                            rhs += v1
                                                                * f_ahd[(r4, c4)]
                                                                * f_bcd[(r5, c5)];
                                                        }
                                                    }
                                                }
                                            }
                                            worst = worst.max((lhs - rhs).norm());
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    worst
}

/// Worst deviation of every F-matrix from unitarity.
fn unitarity_defect(spec: &CategorySpec) -> f64 {
    let n = spec.n_labels();
    let mut worst = 0.0f64;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let rows = spec.f_rows(a, b, c, d).len();
                    let cols = spec.f_cols(a, b, c, d).len();
                    if rows == 0 && cols == 0 {
                        continue;
                    }
                    if rows != cols {
                        return f64::INFINITY;
                    }
                    let f = spec.f_mat(a, b, c, d);
                    let prod = crate::linalg::adjoint(&f).dot(&f);
                    worst = worst.max(defect_from_identity(&prod));
                }
            }
        }
    }
    worst
}

/// |d_a d_b - sum_c N_{ab}^c d_c| over all pairs, relative defect.
fn dim_homomorphism_defect(spec: &CategorySpec) -> f64 {
    let n = spec.n_labels();
    let mut worst = 0.0f64;
    for a in 0..n {
        for b in 0..n {
            let lhs = spec.dims[a] * spec.dims[b];
            let rhs: f64 = (0..n)
                .map(|c| spec.n(a, b, c) as f64 * spec.dims[c])
                .sum();
            worst = worst.max((lhs - rhs).abs() / lhs.max(1.0));
        }
    }
    worst
}

impl Ctx {
    /// Both zig-zag identities for every simple label:
    ///   (ev (x) id) . (id (x) coev) = id  and  (id (x) R^*) . (S (x) id)... via
    /// the two snake equations with the standard cups.
    fn zigzag_defect(&self) -> Result<f64> {
        let n = self.n_labels();
        let mut worst = 0.0f64;
        for a in 0..n {
            let abar = self.spec.dual[a];
            let wa = word_of_labels(n, &[a]);
            let wabar = word_of_labels(n, &[abar]);
            let x = wa[0].clone();
            let id_a = self.identity(&wa);
            let id_abar = self.identity(&wabar);
            // snake 1: (id_a (x) ev_a) . (S_a (x) id_a) = id_a
            let s1 = self.compose(
                &self.tensor(&id_a, &self.cap_ev(&x))?,
                &self.tensor(&self.cup_s(&x), &id_a)?,
            )?;
            worst = worst.max(s1.distance(&id_a)?);
            // snake 2: (ev_a (x) id_abar) . (id_abar (x) S_a) = id_abar
            let s2 = self.compose(
                &self.tensor(&self.cap_ev(&x), &id_abar)?,
                &self.tensor(&id_abar, &self.cup_s(&x))?,
            )?;
            worst = worst.max(s2.distance(&id_abar)?);
        }
        Ok(worst)
    }

    /// Standardness: R_a^* . R_a = S_a^* . S_a = d_a for every label.
    fn standardness_defect(&self) -> Result<f64> {
        let n = self.n_labels();
        let mut worst = 0.0f64;
        for a in 0..n {
            let x = crate::category::Object::simple(n, a);
            let d = C64::new(self.spec.dims[a], 0.0);
            let rr = self.compose(&self.cap_ev(&x), &self.cup_r(&x))?;
            let ss = self.compose(&self.cap_s(&x), &self.cup_s(&x))?;
            worst = worst.max((rr.scalar_value(self) - d).norm());
            worst = worst.max((ss.scalar_value(self) - d).norm());
        }
        Ok(worst)
    }

    /// Balancing of the standard solution: left and right partial traces of
    /// any endomorphism of a simple label agree (tr = d_a for identities).
    fn balancing_defect(&self) -> Result<f64> {
        let n = self.n_labels();
        let mut worst = 0.0f64;
        for a in 0..n {
            let wa = word_of_labels(n, &[a]);
            let id_a = self.identity(&wa);
            let lt = self.partial_trace(&id_a, crate::duality::TraceSide::Left)?;
            let rt = self.partial_trace(&id_a, crate::duality::TraceSide::Right)?;
            let d = C64::new(self.spec.dims[a], 0.0);
            worst = worst.max((lt.scalar_value(self) - d).norm());
            worst = worst.max((rt.scalar_value(self) - d).norm());
        }
        Ok(worst)
    }

    /// Full category validation with the given tolerance.
    pub fn validate_category(&self, tol: f64) -> Result<ValidationReport> {
        Ok(ValidationReport {
            pentagon_defect: pentagon_defect(&self.spec),
            unitarity_defect: unitarity_defect(&self.spec),
            dim_homomorphism_defect: dim_homomorphism_defect(&self.spec),
            zigzag_defect: self.zigzag_defect()?,
            standardness_defect: self.standardness_defect()?,
            balancing_defect: self.balancing_defect()?,
            tol,
        })
    }
}
