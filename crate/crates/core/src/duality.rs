//! Duality structure: cups/caps for arbitrary objects, conjugation and the
//! dual of a morphism, the 1-click Fourier rotation, and partial traces.

use crate::category::{Ctx, Object, Word};
use crate::linalg::C64;
use crate::morphism::Morphism;
use crate::{QkitError, Result};

/// Which outer strand a partial trace closes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceSide {
    Left,
    Right,
}

impl Ctx {
    /// R_X : 1 -> Xbar (x) X, the standard pairing with the conjugate.
    /// For composite X, inclusion i of sector a is paired with inclusion i of
    /// abar in the dual object.
    pub fn cup_r(&self, x: &Object) -> Morphism {
        let xbar = self.dual_object(x);
        let tgt: Word = vec![xbar.clone(), x.clone()];
        let src: Word = Vec::new();
        let mut m = self.zero_morphism(&src, &tgt);
        let unit = self.unit();
        let table = self.trees(&tgt, unit);
        for (ti, t) in table.trees.iter().enumerate() {
            // two steps: (abar, i) then (a, j) fusing to 1; pair iff i = j
            let s1 = t[0];
            let s2 = t[1];
            if s1.x == self.spec.dual[s2.x] && s1.incl == s2.incl {
                m.blocks[unit][(ti, 0)] = self.dp.r[s2.x];
            }
        }
        m
    }

    /// S_X : 1 -> X (x) Xbar.
    pub fn cup_s(&self, x: &Object) -> Morphism {
        let xbar = self.dual_object(x);
        let tgt: Word = vec![x.clone(), xbar.clone()];
        let src: Word = Vec::new();
        let mut m = self.zero_morphism(&src, &tgt);
        let unit = self.unit();
        let table = self.trees(&tgt, unit);
        for (ti, t) in table.trees.iter().enumerate() {
            let s1 = t[0];
            let s2 = t[1];
            if s2.x == self.spec.dual[s1.x] && s1.incl == s2.incl {
                m.blocks[unit][(ti, 0)] = self.dp.s[s1.x];
            }
        }
        m
    }

    /// ev_X = R_X^* : Xbar (x) X -> 1.
    pub fn cap_ev(&self, x: &Object) -> Morphism {
        self.adjoint(&self.cup_r(x))
    }

    /// coev-side cap S_X^* : X (x) Xbar -> 1.
    pub fn cap_s(&self, x: &Object) -> Morphism {
        self.adjoint(&self.cup_s(x))
    }

    fn single_factor(&self, w: &Word) -> Object {
        match w.len() {
            0 => Object::simple(self.n_labels(), self.unit()),
            1 => w[0].clone(),
            _ => self.object_of_word(w),
        }
    }

    /// The dual f^v : Ybar -> Xbar of f : X -> Y, obtained by bending both
    /// sides with the standard cups/caps.
    pub fn dual_morphism(&self, f: &Morphism) -> Result<Morphism> {
        let fm = self.merge_all(f);
        let x = self.single_factor(&fm.src);
        let y = self.single_factor(&fm.tgt);
        let xw: Word = vec![x.clone()];
        let f1 = self.cast_words(&fm, xw.clone(), vec![y.clone()]);
        let xbar = self.dual_object(&x);
        let ybar = self.dual_object(&y);
        // (ev_Y (x) id) . (id (x) f (x) id) . (id (x) coev_X)
        let t1 = self.tensor(&self.identity(&vec![ybar.clone()]), &self.cup_s(&x))?;
        let t2 = self.tensor(
            &self.tensor(&self.identity(&vec![ybar.clone()]), &f1)?,
            &self.identity(&vec![xbar.clone()]),
        )?;
        let t3 = self.tensor(&self.cap_ev(&y), &self.identity(&vec![xbar.clone()]))?;
        self.compose_all(&[&t3, &t2, &t1])
    }

    /// The conjugate fbar : Xbar -> Ybar of f : X -> Y (adjoint of the dual).
    pub fn conjugate(&self, f: &Morphism) -> Result<Morphism> {
        Ok(self.adjoint(&self.dual_morphism(f)?))
    }

    /// Both involutions at once: (f^v, fbar).
    pub fn dual_and_conjugate(&self, f: &Morphism) -> Result<(Morphism, Morphism)> {
        let dual = self.dual_morphism(f)?;
        let conj = self.adjoint(&dual);
        Ok((dual, conj))
    }

    /// 1-click rotation C(c, a (x) b) -> C(bbar, cbar (x) a): the source leg
    /// is bent up on the left, the right output leg is bent down. The target
    /// presentation must be a two-factor word (a, b); the source is folded.
    pub fn fourier(&self, f: &Morphism) -> Result<Morphism> {
        if f.tgt.len() != 2 {
            return Err(QkitError::Precondition(
                "fourier: target must be presented as a two-letter word".into(),
            ));
        }
        let a = f.tgt[0].clone();
        let b = f.tgt[1].clone();
        let fm = {
            let m = self.merge_all(f);
            let c = self.single_factor(&m.src);
            let src: Word = vec![c];
            let tgt = f.tgt.clone();
            self.cast_words(f, src, tgt)
        };
        let c = fm.src[0].clone();
        let cbar = self.dual_object(&c);
        let bbar = self.dual_object(&b);
        // (id_{cbar (x) a} (x) S_b^*) . (id_cbar (x) f (x) id_bbar) . (R_c (x) id_bbar)
        let t1 = self.tensor(&self.cup_r(&c), &self.identity(&vec![bbar.clone()]))?;
        let t2 = self.tensor(
            &self.tensor(&self.identity(&vec![cbar.clone()]), &fm)?,
            &self.identity(&vec![bbar.clone()]),
        )?;
        let t3 = self.tensor(
            &self.identity(&vec![cbar.clone(), a.clone()]),
            &self.cap_s(&b),
        )?;
        self.compose_all(&[&t3, &t2, &t1])
    }

    /// Close the outermost strand of one side with the standard cup/cap.
    /// Requires the outer factors of src and tgt to coincide.
    pub fn partial_trace(&self, f: &Morphism, side: TraceSide) -> Result<Morphism> {
        match side {
            TraceSide::Right => {
                let (Some(ps), Some(pt)) = (f.src.last(), f.tgt.last()) else {
                    return Err(QkitError::Shape("partial_trace: empty word".into()));
                };
                if ps != pt {
                    return Err(QkitError::Shape(
                        "partial_trace: outer factors differ".into(),
                    ));
                }
                let p = ps.clone();
                let pbar = self.dual_object(&p);
                let x: Word = f.src[..f.src.len() - 1].to_vec();
                let y: Word = f.tgt[..f.tgt.len() - 1].to_vec();
                let t1 = self.tensor(&self.identity(&x), &self.cup_s(&p))?;
                let t2 = self.tensor(f, &self.identity(&vec![pbar]))?;
                let t3 = self.tensor(&self.identity(&y), &self.cap_s(&p))?;
                self.compose_all(&[&t3, &t2, &t1])
            }
            TraceSide::Left => {
                let (Some(ps), Some(pt)) = (f.src.first(), f.tgt.first()) else {
                    return Err(QkitError::Shape("partial_trace: empty word".into()));
                };
                if ps != pt {
                    return Err(QkitError::Shape(
                        "partial_trace: outer factors differ".into(),
                    ));
                }
                let p = ps.clone();
                let pbar = self.dual_object(&p);
                let x: Word = f.src[1..].to_vec();
                let y: Word = f.tgt[1..].to_vec();
                let t1 = self.tensor(&self.cup_r(&p), &self.identity(&x))?;
                let t2 = self.tensor(&self.identity(&vec![pbar]), f)?;
                let t3 = self.tensor(&self.cap_ev(&p), &self.identity(&y))?;
                self.compose_all(&[&t3, &t2, &t1])
            }
        }
    }

    /// Hom-space norm induced by the trace inner product.
    pub fn norm(&self, f: &Morphism) -> f64 {
        self.inner_product(f, f)
            .map(|z| z.re.max(0.0).sqrt())
            .unwrap_or(0.0)
    }

    /// Categorical trace of an endomorphism: sum_c d_c tr(B_c).
    pub fn categorical_trace(&self, f: &Morphism) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for (c, b) in f.blocks.iter().enumerate() {
            acc += crate::linalg::trace(b) * C64::new(self.spec.dims[c], 0.0);
        }
        acc
    }
}
