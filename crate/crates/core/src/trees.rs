//! Canonical left-nested fusion-tree bases for tensor words and the F-move
//! change-of-basis transforms between regroupings.
//!
//! A tree for a word [X_1, ..., X_m] fusing to sector c is a list of steps
//! (x_k, incl_k, y_k, mu_k): x_k is the sector chosen inside factor X_k,
//! incl_k its inclusion index, y_k the running total after step k
//! (y_1 = x_1, y_m = c), and mu_k the vertex multiplicity in
//! N(y_{k-1}, x_k, y_k). Vertices are isometries, so distinct trees have
//! orthogonal ranges and each tree is an isometry c -> X_1 (x) ... (x) X_m.
//!
//! Enumeration order (fixed, deterministic): for words of length >= 2,
//! primary key is the prefix total y, then the prefix tree index, then
//! (x, incl, mu) ascending. With this order, merging the *first two* factors
//! into their tensor-product object is the identity relabeling; merging at a
//! later position is a genuine recoupling given by a single F-move per tree.

use crate::category::{Ctx, Object, Word};
use crate::linalg::{eye, zeros, CMat};
use std::collections::HashMap;
use std::rc::Rc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Step {
    pub x: usize,
    pub incl: usize,
    pub y: usize,
    pub mu: usize,
}

pub type Tree = Vec<Step>;

#[derive(Debug)]
pub struct TreeTable {
    pub trees: Vec<Tree>,
    pub index: HashMap<Tree, usize>,
}

impl TreeTable {
    fn new(trees: Vec<Tree>) -> Self {
        let index = trees
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        TreeTable { trees, index }
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }
}

impl Ctx {
    /// All fusion trees of `word` with total sector `c`, memoized.
    pub fn trees(&self, word: &Word, c: usize) -> Rc<TreeTable> {
        if let Some(t) = self.tree_cache.borrow().get(&(word.clone(), c)) {
            return Rc::clone(t);
        }
        let table = Rc::new(TreeTable::new(self.enumerate_trees(word, c)));
        self.tree_cache
            .borrow_mut()
            .insert((word.clone(), c), Rc::clone(&table));
        table
    }

    fn enumerate_trees(&self, word: &Word, c: usize) -> Vec<Tree> {
        let n = self.n_labels();
        match word.len() {
            0 => {
                if c == self.unit() {
                    vec![Vec::new()]
                } else {
                    Vec::new()
                }
            }
            1 => (0..word[0].mult[c])
                .map(|incl| vec![Step { x: c, incl, y: c, mu: 0 }])
                .collect(),
            _ => {
                let prefix: Word = word[..word.len() - 1].to_vec();
                let last = &word[word.len() - 1];
                let mut out = Vec::new();
                for y in 0..n {
                    let pts = self.trees(&prefix, y);
                    for t in &pts.trees {
                        for x in 0..n {
                            for incl in 0..last.mult[x] {
                                for mu in 0..self.spec.n(y, x, c) {
                                    let mut tree = t.clone();
                                    tree.push(Step { x, incl, y: c, mu });
                                    out.push(tree);
                                }
                            }
                        }
                    }
                }
                out
            }
        }
    }

    /// Per-sector tree counts of a word; the semisimple content.
    pub fn word_dims(&self, word: &Word) -> Vec<usize> {
        (0..self.n_labels())
            .map(|c| self.trees(word, c).len())
            .collect()
    }

    /// The object a word presents, with inclusion order = tree order.
    pub fn object_of_word(&self, word: &Word) -> Object {
        Object { mult: self.word_dims(word) }
    }

    /// The word with factors `pos` and `pos+1` replaced by their product.
    pub fn merged_word(&self, word: &Word, pos: usize) -> Word {
        let pair: Word = vec![word[pos].clone(), word[pos + 1].clone()];
        let merged = self.object_of_word(&pair);
        let mut out = word[..pos].to_vec();
        out.push(merged);
        out.extend_from_slice(&word[pos + 2..]);
        out
    }

    /// Unitary change of basis for merging factors `pos`, `pos+1` of `word`:
    /// per sector c, the matrix C with C[t_merged, t_orig] such that each
    /// merged-basis vector expands as sum_orig C[merged, orig] * (orig basis
    /// vector). For pos = 0 this is the identity.
    pub fn merge_transform(&self, word: &Word, pos: usize) -> Vec<CMat> {
        let n = self.n_labels();
        let merged = self.merged_word(word, pos);
        let pair: Word = vec![word[pos].clone(), word[pos + 1].clone()];
        (0..n)
            .map(|c| {
                let orig = self.trees(word, c);
                let new = self.trees(&merged, c);
                if pos == 0 {
                    debug_assert_eq!(orig.len(), new.len());
                    return eye(new.len());
                }
                let mut mat = zeros(new.len(), orig.len());
                for (ti, t) in orig.trees.iter().enumerate() {
                    let y_prev = t[pos - 1].y;
                    let s1 = t[pos];
                    let s2 = t[pos + 1];
                    let fm = self.spec.f_mat(y_prev, s1.x, s2.x, s2.y);
                    let rows = self.spec.f_rows(y_prev, s1.x, s2.x, s2.y);
                    let cols = self.spec.f_cols(y_prev, s1.x, s2.x, s2.y);
                    let ri = rows
                        .iter()
                        .position(|&(e, al, be)| e == s1.y && al == s1.mu && be == s2.mu)
                        .expect("tree step not in F row map");
                    for (ci, &(z, kappa, lambda)) in cols.iter().enumerate() {
                        let coeff = fm[(ri, ci)].conj();
                        if coeff.norm() == 0.0 {
                            continue;
                        }
                        // inclusion index of the merged factor: the two-step
                        // tree of [X_pos, X_{pos+1}] fusing to z
                        let pair_tree: Tree = vec![
                            Step { x: s1.x, incl: s1.incl, y: s1.x, mu: 0 },
                            Step { x: s2.x, incl: s2.incl, y: z, mu: kappa },
                        ];
                        let j = *self
                            .trees(&pair, z)
                            .index
                            .get(&pair_tree)
                            .expect("pair tree not found");
                        let mut mt: Tree = t[..pos].to_vec();
                        mt.push(Step { x: z, incl: j, y: s2.y, mu: lambda });
                        mt.extend_from_slice(&t[pos + 2..]);
                        let mi = *new.index.get(&mt).expect("merged tree not found");
                        mat[(mi, ti)] += coeff;
                    }
                }
                mat
            })
            .collect()
    }
}
