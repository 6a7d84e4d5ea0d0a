//! JSON file formats: categories, algebras, and algebra morphisms.

use crate::category::{CategorySpec, Ctx, Object, Word};
use crate::linalg::{zeros, C64};
use crate::morphism::Morphism;
use crate::{QkitError, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::path::Path;

#[derive(Debug, Serialize, Deserialize)]
struct CategoryFile {
    labels: Vec<String>,
    unit: String,
    dual: HashMap<String, String>,
    #[serde(default)]
    fs_indicator: HashMap<String, f64>,
    fusion: Vec<(String, String, String, usize)>,
    #[serde(default)]
    dims: HashMap<String, f64>,
    #[serde(rename = "F")]
    f_entries: Vec<FEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
struct FEntry {
    a: String,
    b: String,
    c: String,
    d: String,
    e: String,
    f: String,
    #[serde(default)]
    alpha: usize,
    #[serde(default)]
    beta: usize,
    #[serde(default)]
    mu: usize,
    #[serde(default)]
    nu: usize,
    re: f64,
    #[serde(default)]
    im: f64,
}

pub fn load_category(path: &Path) -> Result<CategorySpec> {
    let text = std::fs::read_to_string(path)?;
    let file: CategoryFile = serde_json::from_str(&text)?;
    let labels = file.labels.clone();
    let n = labels.len();
    let idx = |name: &str| -> Result<usize> {
        labels
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| QkitError::Schema(format!("unknown label `{name}`")))
    };
    let unit = idx(&file.unit)?;
    let mut dual = vec![usize::MAX; n];
    for (a, abar) in &file.dual {
        dual[idx(a)?] = idx(abar)?;
    }
    for (a, &d) in dual.iter().enumerate() {
        if d == usize::MAX {
            return Err(QkitError::Schema(format!(
                "dual map missing label `{}`",
                labels[a]
            )));
        }
    }
    let mut kappa = vec![1.0; n];
    for (a, k) in &file.fs_indicator {
        kappa[idx(a)?] = *k;
    }
    let mut fusion = vec![vec![vec![0usize; n]; n]; n];
    for (a, b, c, m) in &file.fusion {
        fusion[idx(a)?][idx(b)?][idx(c)?] = *m;
    }
    let spec_partial = CategorySpec {
        labels: labels.clone(),
        unit,
        dual,
        kappa,
        fusion,
        dims: vec![0.0; n],
        f_mats: HashMap::new(),
    };
    let dims = if file.dims.is_empty() {
        spec_partial.perron_frobenius_dims()
    } else {
        let mut d = vec![0.0; n];
        for (a, v) in &file.dims {
            if *v <= 0.0 {
                return Err(QkitError::Schema(format!(
                    "nonpositive dimension for `{a}`"
                )));
            }
            d[idx(a)?] = *v;
        }
        d
    };
    let mut spec = CategorySpec { dims, ..spec_partial };
    // assemble dense F-matrices from the sparse entries
    let mut mats: HashMap<(usize, usize, usize, usize), crate::linalg::CMat> = HashMap::new();
    for ent in &file.f_entries {
        let key = (idx(&ent.a)?, idx(&ent.b)?, idx(&ent.c)?, idx(&ent.d)?);
        let rows = spec.f_rows(key.0, key.1, key.2, key.3);
        let cols = spec.f_cols(key.0, key.1, key.2, key.3);
        let mat = mats
            .entry(key)
            .or_insert_with(|| zeros(rows.len(), cols.len()));
        let e = idx(&ent.e)?;
        let f = idx(&ent.f)?;
        let ri = rows
            .iter()
            .position(|&(x, al, be)| x == e && al == ent.alpha && be == ent.beta)
            .ok_or_else(|| QkitError::Schema(format!("F row index out of range: {ent:?}")))?;
        let ci = cols
            .iter()
            .position(|&(x, mu, nu)| x == f && mu == ent.mu && nu == ent.nu)
            .ok_or_else(|| QkitError::Schema(format!("F col index out of range: {ent:?}")))?;
        mat[(ri, ci)] = C64::new(ent.re, ent.im);
    }
    spec.f_mats = mats;
    Ok(spec)
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BlockEntry {
    pub sector: String,
    pub row: usize,
    pub col: usize,
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct UnitEntry {
    pub row: usize,
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub category: String,
    pub object: HashMap<String, usize>,
    pub m: Vec<BlockEntry>,
    pub i: Vec<UnitEntry>,
}

/// Load an algebra file; the category itself is loaded by the caller (the
/// file's `category` field names the expected category file).
pub fn load_algebra(ctx: &Ctx, path: &Path) -> Result<crate::algebra::AlgebraObject> {
    let text = std::fs::read_to_string(path)?;
    let file: AlgebraFile = serde_json::from_str(&text)?;
    algebra_from_file(ctx, &file)
}

pub fn algebra_from_file(ctx: &Ctx, file: &AlgebraFile) -> Result<crate::algebra::AlgebraObject> {
    let n = ctx.n_labels();
    let mut mult = vec![0usize; n];
    for (lbl, m) in &file.object {
        mult[ctx.spec.label_index(lbl)?] = *m;
    }
    let a = Object { mult };
    let aw: Word = vec![a.clone()];
    let aaw: Word = vec![a.clone(), a.clone()];
    let mut m = ctx.zero_morphism(&aaw, &aw);
    for ent in &file.m {
        let c = ctx.spec.label_index(&ent.sector)?;
        let b = &mut m.blocks[c];
        if ent.row >= b.nrows() || ent.col >= b.ncols() {
            return Err(QkitError::Schema(format!(
                "m entry out of range in sector `{}`",
                ent.sector
            )));
        }
        b[(ent.row, ent.col)] = C64::new(ent.re, ent.im);
    }
    let empty: Word = Vec::new();
    let mut i = ctx.zero_morphism(&empty, &aw);
    for ent in &file.i {
        let b = &mut i.blocks[ctx.unit()];
        if ent.row >= b.nrows() {
            return Err(QkitError::Schema("i entry out of range".into()));
        }
        b[(ent.row, 0)] = C64::new(ent.re, ent.im);
    }
    Ok(crate::algebra::AlgebraObject { a, m, i })
}

pub fn algebra_to_file(ctx: &Ctx, alg: &crate::algebra::AlgebraObject, category: &str) -> AlgebraFile {
    let mut object = HashMap::new();
    for (a, &m) in alg.a.mult.iter().enumerate() {
        if m > 0 {
            object.insert(ctx.spec.labels[a].clone(), m);
        }
    }
    let mut m_entries = Vec::new();
    for (c, b) in alg.m.blocks.iter().enumerate() {
        for ((r, col), v) in b.indexed_iter() {
            if v.norm() > 1e-15 {
                m_entries.push(BlockEntry {
                    sector: ctx.spec.labels[c].clone(),
                    row: r,
                    col,
                    re: v.re,
                    im: v.im,
                });
            }
        }
    }
    let mut i_entries = Vec::new();
    for ((r, _), v) in alg.i.blocks[ctx.unit()].indexed_iter() {
        if v.norm() > 1e-15 {
            i_entries.push(UnitEntry { row: r, re: v.re, im: v.im });
        }
    }
    AlgebraFile {
        category: category.to_string(),
        object,
        m: m_entries,
        i: i_entries,
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct MorphismFile {
    pub category: String,
    pub source: String,
    pub target: String,
    pub theta: Vec<BlockEntry>,
}

pub fn load_morphism_blocks(
    ctx: &Ctx,
    file: &MorphismFile,
    src: &Object,
    tgt: &Object,
) -> Result<Morphism> {
    let sw: Word = vec![src.clone()];
    let tw: Word = vec![tgt.clone()];
    let mut th = ctx.zero_morphism(&sw, &tw);
    for ent in &file.theta {
        let c = ctx.spec.label_index(&ent.sector)?;
        let b = &mut th.blocks[c];
        if ent.row >= b.nrows() || ent.col >= b.ncols() {
            return Err(QkitError::Schema(format!(
                "theta entry out of range in sector `{}`",
                ent.sector
            )));
        }
        b[(ent.row, ent.col)] = C64::new(ent.re, ent.im);
    }
    Ok(th)
}
