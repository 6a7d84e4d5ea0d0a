//! Skeletal fusion-category data and the computation context.

use crate::linalg::{zeros, CMat, C64};
use crate::{QkitError, Result};
use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

/// Skeletal data of a unitary fusion category.
#[derive(Debug, Clone)]
pub struct CategorySpec {
    pub labels: Vec<String>,
    pub unit: usize,
    /// dual[a] = index of the conjugate label.
    pub dual: Vec<usize>,
    /// Frobenius-Schur indicator per label (+1 for non-self-dual labels).
    pub kappa: Vec<f64>,
    /// fusion[a][b][c] = dim C(c, a (x) b).
    pub fusion: Vec<Vec<Vec<usize>>>,
    /// Quantum dimension per label.
    pub dims: Vec<f64>,
    /// Dense F-matrices keyed by (a,b,c,d); rows (e,alpha,beta), cols (f,mu,nu).
    pub f_mats: HashMap<(usize, usize, usize, usize), CMat>,
}

impl CategorySpec {
    pub fn n_labels(&self) -> usize {
        self.labels.len()
    }

    pub fn label_index(&self, name: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| QkitError::Schema(format!("unknown label `{name}`")))
    }

    pub fn n(&self, a: usize, b: usize, c: usize) -> usize {
        self.fusion[a][b][c]
    }

    /// Row index map of F^{abc}_d: ordered (e asc, alpha, beta).
    pub fn f_rows(&self, a: usize, b: usize, c: usize, d: usize) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for e in 0..self.n_labels() {
            for alpha in 0..self.n(a, b, e) {
                for beta in 0..self.n(e, c, d) {
                    out.push((e, alpha, beta));
                }
            }
        }
        out
    }

    /// Column index map of F^{abc}_d: ordered (f asc, mu, nu).
    pub fn f_cols(&self, a: usize, b: usize, c: usize, d: usize) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for f in 0..self.n_labels() {
            for mu in 0..self.n(b, c, f) {
                for nu in 0..self.n(a, f, d) {
                    out.push((f, mu, nu));
                }
            }
        }
        out
    }

    /// The F-matrix F^{abc}_d; a zero matrix of the right shape when the
    /// input data carried no entries for this block.
    pub fn f_mat(&self, a: usize, b: usize, c: usize, d: usize) -> CMat {
        let rows = self.f_rows(a, b, c, d).len();
        let cols = self.f_cols(a, b, c, d).len();
        match self.f_mats.get(&(a, b, c, d)) {
            Some(m) => m.clone(),
            None => zeros(rows, cols),
        }
    }

    /// Compute quantum dimensions as Perron-Frobenius eigenvalues of the
    /// fusion matrices (N_a)_{bc} = N[a][b][c].
    pub fn perron_frobenius_dims(&self) -> Vec<f64> {
        let n = self.n_labels();
        (0..n)
            .map(|a| {
                let mut v = vec![1.0f64; n];
                let mut lam = 1.0;
                for _ in 0..2000 {
                    let mut w = vec![0.0f64; n];
                    for (b, vb) in v.iter().enumerate() {
                        for (c, wc) in w.iter_mut().enumerate() {
                            *wc += self.fusion[a][b][c] as f64 * vb;
                        }
                    }
                    let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
                    if norm == 0.0 {
                        return 0.0;
                    }
                    for x in &mut w {
                        *x /= norm;
                    }
                    lam = norm;
                    v = w;
                }
                lam
            })
            .collect()
    }
}

/// A (possibly composite) object: multiplicity of each simple sector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Object {
    pub mult: Vec<usize>,
}

impl Object {
    pub fn simple(n_labels: usize, a: usize) -> Self {
        let mut mult = vec![0; n_labels];
        mult[a] = 1;
        Object { mult }
    }

    pub fn is_zero(&self) -> bool {
        self.mult.iter().all(|&m| m == 0)
    }

    /// The unique sector when the object is simple.
    pub fn as_simple(&self) -> Option<usize> {
        let mut found = None;
        for (a, &m) in self.mult.iter().enumerate() {
            match (m, found) {
                (0, _) => {}
                (1, None) => found = Some(a),
                _ => return None,
            }
        }
        found
    }
}

/// A tensor word: ordered list of factors. Empty word = unit object.
pub type Word = Vec<Object>;

pub fn word_of_labels(n_labels: usize, labels: &[usize]) -> Word {
    labels.iter().map(|&a| Object::simple(n_labels, a)).collect()
}

/// Cup normalization scalars for the standard duality solutions: S_a carries
/// sqrt(d_a); R_a carries the Frobenius-Schur sign (via the F^{a abar a}_a
/// corner entry), so that both zig-zag identities and standardness hold.
#[derive(Debug, Clone)]
pub struct DualityPack {
    pub r: Vec<C64>,
    pub s: Vec<C64>,
    /// The corner entries F^{a abar a}_a[(1),(1)] used to derive `r`.
    pub corner: Vec<C64>,
}

/// Computation context: category data plus duality scalars and memoized
/// fusion-tree tables.
pub struct Ctx {
    pub spec: CategorySpec,
    pub dp: DualityPack,
    pub(crate) tree_cache: RefCell<HashMap<(Word, usize), Rc<crate::trees::TreeTable>>>,
}

impl Ctx {
    pub fn new(spec: CategorySpec) -> Result<Self> {
        let n = spec.n_labels();
        let mut r = Vec::with_capacity(n);
        let mut s = Vec::with_capacity(n);
        let mut corner = Vec::with_capacity(n);
        for a in 0..n {
            let abar = spec.dual[a];
            if spec.n(a, abar, spec.unit) != 1 || spec.n(abar, a, spec.unit) != 1 {
                return Err(QkitError::Schema(format!(
                    "label `{}` has no unique pairing with its dual",
                    spec.labels[a]
                )));
            }
            let d = spec.dims[a];
            // F^{a abar a}_a entry at e = f = unit (both vertex multiplicities 0).
            let fm = spec.f_mat(a, abar, a, a);
            let rows = spec.f_rows(a, abar, a, a);
            let cols = spec.f_cols(a, abar, a, a);
            let ri = rows
                .iter()
                .position(|&(e, _, _)| e == spec.unit)
                .ok_or_else(|| QkitError::Schema("missing unit channel in F rows".into()))?;
            let ci = cols
                .iter()
                .position(|&(f, _, _)| f == spec.unit)
                .ok_or_else(|| QkitError::Schema("missing unit channel in F cols".into()))?;
            let f11 = fm[(ri, ci)];
            if f11.norm() < 1e-14 {
                return Err(QkitError::Schema(format!(
                    "vanishing duality corner entry for label `{}`",
                    spec.labels[a]
                )));
            }
            let s_a = C64::new(d.sqrt(), 0.0);
            let r_a = C64::new(1.0, 0.0) / (C64::new(d.sqrt(), 0.0) * f11.conj());
            r.push(r_a);
            s.push(s_a);
            corner.push(f11);
        }
        Ok(Ctx {
            spec,
            dp: DualityPack { r, s, corner },
            tree_cache: RefCell::new(HashMap::new()),
        })
    }

    pub fn n_labels(&self) -> usize {
        self.spec.n_labels()
    }

    pub fn unit(&self) -> usize {
        self.spec.unit
    }

    pub fn dual_object(&self, x: &Object) -> Object {
        let mut mult = vec![0; self.n_labels()];
        for (a, &m) in x.mult.iter().enumerate() {
            mult[self.spec.dual[a]] = m;
        }
        Object { mult }
    }

    pub fn dual_word(&self, w: &Word) -> Word {
        w.iter().rev().map(|x| self.dual_object(x)).collect()
    }

    pub fn dim_object(&self, x: &Object) -> f64 {
        x.mult
            .iter()
            .enumerate()
            .map(|(a, &m)| m as f64 * self.spec.dims[a])
            .sum()
    }
}
