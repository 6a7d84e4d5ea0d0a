//! Morphisms as per-sector block matrices between presented objects.

use crate::category::{Ctx, Object, Word};
use crate::linalg::{self, zeros, CMat, C64};
use crate::trees::Tree;
use crate::{QkitError, Result};
use rand::Rng;

/// A morphism between tensor words, stored as one complex matrix per simple
/// sector c of shape (#trees(tgt, c) x #trees(src, c)) in the canonical
/// fusion-tree bases.
#[derive(Debug, Clone, PartialEq)]
pub struct Morphism {
    pub src: Word,
    pub tgt: Word,
    pub blocks: Vec<CMat>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Src,
    Tgt,
}

impl Morphism {
    pub fn scale(&self, z: C64) -> Morphism {
        Morphism {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            blocks: self.blocks.iter().map(|b| b * z).collect(),
        }
    }

    pub fn add(&self, other: &Morphism) -> Result<Morphism> {
        if self.src != other.src || self.tgt != other.tgt {
            return Err(QkitError::Shape("add: presentations differ".into()));
        }
        Ok(Morphism {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Morphism) -> Result<Morphism> {
        self.add(&other.scale(C64::new(-1.0, 0.0)))
    }

    pub fn max_abs(&self) -> f64 {
        self.blocks
            .iter()
            .map(linalg::max_abs)
            .fold(0.0, f64::max)
    }

    /// Max-abs entrywise distance; errors when presentations differ.
    pub fn distance(&self, other: &Morphism) -> Result<f64> {
        Ok(self.sub(other)?.max_abs())
    }

    /// The scalar carried by an endomorphism of the unit object.
    pub fn scalar_value(&self, ctx: &Ctx) -> C64 {
        let b = &self.blocks[ctx.unit()];
        if b.nrows() == 1 && b.ncols() == 1 {
            b[(0, 0)]
        } else {
            C64::new(0.0, 0.0)
        }
    }
}

impl Ctx {
    pub fn zero_morphism(&self, src: &Word, tgt: &Word) -> Morphism {
        let sd = self.word_dims(src);
        let td = self.word_dims(tgt);
        Morphism {
            src: src.clone(),
            tgt: tgt.clone(),
            blocks: (0..self.n_labels()).map(|c| zeros(td[c], sd[c])).collect(),
        }
    }

    pub fn identity(&self, word: &Word) -> Morphism {
        let dims = self.word_dims(word);
        Morphism {
            src: word.clone(),
            tgt: word.clone(),
            blocks: dims.iter().map(|&d| linalg::eye(d)).collect(),
        }
    }

    /// The scalar z as an endomorphism of the unit object (empty word).
    pub fn scalar(&self, z: C64) -> Morphism {
        let empty: Word = Vec::new();
        let mut m = self.identity(&empty);
        m = m.scale(z);
        m
    }

    pub fn compose(&self, g: &Morphism, f: &Morphism) -> Result<Morphism> {
        if f.tgt != g.src {
            return Err(QkitError::Shape(
                "compose: inner presentations differ".into(),
            ));
        }
        Ok(Morphism {
            src: f.src.clone(),
            tgt: g.tgt.clone(),
            blocks: g
                .blocks
                .iter()
                .zip(&f.blocks)
                .map(|(bg, bf)| bg.dot(bf))
                .collect(),
        })
    }

    pub fn compose_all(&self, chain: &[&Morphism]) -> Result<Morphism> {
        let mut it = chain.iter();
        let mut acc = (*it.next().expect("empty chain")).clone();
        for m in it {
            acc = self.compose(&acc, m)?;
        }
        Ok(acc)
    }

    pub fn adjoint(&self, f: &Morphism) -> Morphism {
        Morphism {
            src: f.tgt.clone(),
            tgt: f.src.clone(),
            blocks: f.blocks.iter().map(linalg::adjoint).collect(),
        }
    }

    /// Reinterpret with new presentations of the same semisimple content.
    /// Blocks are unchanged; valid for free regroupings (merging a prefix of
    /// factors into their product object).
    pub fn cast_words(&self, f: &Morphism, src: Word, tgt: Word) -> Morphism {
        debug_assert_eq!(self.word_dims(&f.src), self.word_dims(&src));
        debug_assert_eq!(self.word_dims(&f.tgt), self.word_dims(&tgt));
        Morphism { src, tgt, blocks: f.blocks.clone() }
    }

    /// Merge both presentations into single-factor words (free relabeling;
    /// the canonical decomposition of a word is its own tree enumeration).
    pub fn merge_all(&self, f: &Morphism) -> Morphism {
        let fold = |w: &Word| -> Word {
            if w.len() <= 1 {
                w.clone()
            } else {
                vec![self.object_of_word(w)]
            }
        };
        let src = fold(&f.src);
        let tgt = fold(&f.tgt);
        self.cast_words(f, src, tgt)
    }

    /// Apply the F-move recoupling that merges factors `pos`, `pos+1` of the
    /// given side's word into their tensor-product object.
    pub fn merge_at(&self, f: &Morphism, side: Side, pos: usize) -> Morphism {
        let word = match side {
            Side::Src => &f.src,
            Side::Tgt => &f.tgt,
        };
        let c_mats = self.merge_transform(word, pos);
        let new_word = self.merged_word(word, pos);
        let blocks = f
            .blocks
            .iter()
            .zip(&c_mats)
            .map(|(b, c)| match side {
                // new basis w = C v; for targets B' = conj(C) B, for sources
                // B' = B C^T
                Side::Tgt => linalg::conj(c).dot(b),
                Side::Src => b.dot(&c.t()),
            })
            .collect();
        match side {
            Side::Src => Morphism { src: new_word, tgt: f.tgt.clone(), blocks },
            Side::Tgt => Morphism { src: f.src.clone(), tgt: new_word, blocks },
        }
    }

    /// Inverse of `merge_at`: split the single factor at `pos` of the given
    /// side back into `subword` (whose product it must be).
    pub fn unmerge_at(&self, f: &Morphism, side: Side, pos: usize, subword: &Word) -> Morphism {
        if subword.len() <= 1 {
            return f.clone();
        }
        let word = match side {
            Side::Src => &f.src,
            Side::Tgt => &f.tgt,
        };
        debug_assert_eq!(word[pos], self.object_of_word(subword));
        let mut cur = f.clone();
        // peel letters off the back of the folded factor one at a time
        for j in (2..=subword.len()).rev() {
            let head: Word = subword[..j - 1].to_vec();
            let head_obj = if head.len() == 1 {
                head[0].clone()
            } else {
                self.object_of_word(&head)
            };
            let cur_word = match side {
                Side::Src => &cur.src,
                Side::Tgt => &cur.tgt,
            };
            let mut split_word: Word = cur_word[..pos].to_vec();
            split_word.push(head_obj);
            split_word.push(subword[j - 1].clone());
            split_word.extend_from_slice(&cur_word[pos + 1..]);
            let c_mats = self.merge_transform(&split_word, pos);
            let blocks: Vec<CMat> = cur
                .blocks
                .iter()
                .zip(&c_mats)
                .map(|(b, c)| match side {
                    // inverse of the merge transforms above
                    Side::Tgt => c.t().to_owned().dot(b),
                    Side::Src => b.dot(&linalg::conj(c)),
                })
                .collect();
            cur = match side {
                Side::Src => Morphism { src: split_word, tgt: cur.tgt.clone(), blocks },
                Side::Tgt => Morphism { src: cur.src.clone(), tgt: split_word, blocks },
            };
        }
        cur
    }

    /// Monoidal product. The result's presentations are the concatenated
    /// words; internally the right operand is folded to a single factor,
    /// blocks are assembled sector-diagonally, and the factor is split back.
    pub fn tensor(&self, f: &Morphism, g: &Morphism) -> Result<Morphism> {
        let assembled = self.tensor_folded(f, g)?;
        // split the folded right factor back into g's words
        let mut out = assembled;
        if g.src.len() >= 2 {
            out = self.unmerge_at(&out, Side::Src, f.src.len(), &g.src);
        }
        if g.tgt.len() >= 2 {
            out = self.unmerge_at(&out, Side::Tgt, f.tgt.len(), &g.tgt);
        }
        Ok(out)
    }

    /// Tensor with the right operand folded to (at most) one factor.
    fn tensor_folded(&self, f: &Morphism, g: &Morphism) -> Result<Morphism> {
        let concat = |fw: &Word, gw: &Word| -> Word {
            let mut w = fw.clone();
            if !gw.is_empty() {
                w.push(if gw.len() == 1 {
                    gw[0].clone()
                } else {
                    self.object_of_word(gw)
                });
            }
            w
        };
        let src_w = concat(&f.src, &g.src);
        let tgt_w = concat(&f.tgt, &g.tgt);
        let n = self.n_labels();
        let mut blocks = Vec::with_capacity(n);
        for e in 0..n {
            let rows = self.trees(&tgt_w, e);
            let cols = self.trees(&src_w, e);
            let mut b = zeros(rows.len(), cols.len());
            for (ci, ct) in cols.trees.iter().enumerate() {
                let (cp, cy, cx, cj, cmu) = self.split_last(&f.src, &src_w, ct, e);
                let bf = &f.blocks[cy];
                let bg = &g.blocks[cx];
                if bf.nrows() == 0 || bg.nrows() == 0 {
                    continue;
                }
                for (ri, rt) in rows.trees.iter().enumerate() {
                    let (rp, ry, rx, rj, rmu) = self.split_last(&f.tgt, &tgt_w, rt, e);
                    if ry != cy || rx != cx || rmu != cmu {
                        continue;
                    }
                    let v = bf[(rp, cp)] * bg[(rj, cj)];
                    if v.norm() != 0.0 {
                        b[(ri, ci)] = v;
                    }
                }
            }
            blocks.push(b);
        }
        Ok(Morphism { src: src_w, tgt: tgt_w, blocks })
    }

    /// Decompose a tree of `word` (= fw, possibly with one appended factor)
    /// into (prefix tree index, prefix total y, appended sector x, inclusion
    /// j, vertex mu).
    fn split_last(
        &self,
        fw: &Word,
        word: &Word,
        t: &Tree,
        e: usize,
    ) -> (usize, usize, usize, usize, usize) {
        if word.len() == fw.len() {
            // nothing appended: the g factor is scalar-like in the unit sector
            let idx = *self.trees(fw, e).index.get(t).expect("tree not found");
            return (idx, e, self.unit(), 0, 0);
        }
        debug_assert_eq!(word.len(), fw.len() + 1);
        let last = *t.last().expect("nonempty tree");
        if fw.is_empty() {
            return (0, self.unit(), last.x, last.incl, 0);
        }
        let prefix: Tree = t[..fw.len()].to_vec();
        let y = prefix.last().expect("nonempty prefix").y;
        let idx = *self
            .trees(fw, y)
            .index
            .get(&prefix)
            .expect("prefix tree not found");
        (idx, y, last.x, last.incl, last.mu)
    }

    /// A seeded random morphism with independent uniform complex entries.
    pub fn random_morphism<R: Rng>(&self, src: &Word, tgt: &Word, rng: &mut R) -> Morphism {
        let mut m = self.zero_morphism(src, tgt);
        for b in &mut m.blocks {
            for v in b.iter_mut() {
                *v = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            }
        }
        m
    }

    /// Isometric inclusions Isom(c, X): the c-sector basis vectors of X as
    /// morphisms from the simple object c.
    pub fn isom_basis(&self, c: usize, x: &Object) -> Vec<Morphism> {
        let word: Word = vec![x.clone()];
        let src: Word = vec![Object::simple(self.n_labels(), c)];
        (0..x.mult[c])
            .map(|i| {
                let mut m = self.zero_morphism(&src, &word);
                m.blocks[c][(i, 0)] = C64::new(1.0, 0.0);
                m
            })
            .collect()
    }

    /// ONB(c, X) = d_c^{-1/2} Isom(c, X): orthonormal under the weighted
    /// trace inner product on hom spaces.
    pub fn onb_basis(&self, c: usize, x: &Object) -> Vec<Morphism> {
        let w = C64::new(1.0 / self.spec.dims[c].sqrt(), 0.0);
        self.isom_basis(c, x).iter().map(|m| m.scale(w)).collect()
    }

    /// Hom-space inner product: sum_c d_c tr(B_c(f)^dagger B_c(g)).
    pub fn inner_product(&self, f: &Morphism, g: &Morphism) -> Result<C64> {
        if f.src != g.src || f.tgt != g.tgt {
            return Err(QkitError::Shape("inner_product: presentations differ".into()));
        }
        let mut acc = C64::new(0.0, 0.0);
        for (c, (bf, bg)) in f.blocks.iter().zip(&g.blocks).enumerate() {
            let prod = linalg::adjoint(bf).dot(bg);
            acc += linalg::trace(&prod) * C64::new(self.spec.dims[c], 0.0);
        }
        Ok(acc)
    }

    pub fn hom_dim(&self, x: &Object, y: &Object) -> usize {
        x.mult.iter().zip(&y.mult).map(|(a, b)| a * b).sum()
    }
}
