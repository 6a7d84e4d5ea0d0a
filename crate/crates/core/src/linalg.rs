//! Small complex-matrix helpers on top of ndarray.

use ndarray::Array2;
use num_complex::Complex64;

pub type C64 = Complex64;
pub type CMat = Array2<Complex64>;

pub fn zeros(rows: usize, cols: usize) -> CMat {
    Array2::zeros((rows, cols))
}

pub fn eye(n: usize) -> CMat {
    Array2::eye(n)
}

pub fn adjoint(m: &CMat) -> CMat {
    m.t().mapv(|z| z.conj())
}

pub fn conj(m: &CMat) -> CMat {
    m.mapv(|z| z.conj())
}

pub fn max_abs(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn max_abs_diff(a: &CMat, b: &CMat) -> f64 {
    debug_assert_eq!(a.dim(), b.dim());
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

pub fn trace(m: &CMat) -> C64 {
    m.diag().iter().sum()
}

/// Max-abs deviation of `m` from the identity.
pub fn defect_from_identity(m: &CMat) -> f64 {
    let n = m.nrows().max(m.ncols());
    max_abs_diff(m, &eye(n))
}

/// Modified Gram-Schmidt with greedy column pivoting under the standard
/// inner product. Returns an orthonormal basis of the column space of `m`
/// (columns of the result) with rank determined by `cutoff` on the residual
/// column norms. Deterministic: pivot order is by largest residual norm with
/// ties broken by lowest column index.
pub fn orthonormal_column_basis(m: &CMat, cutoff: f64) -> CMat {
    let (rows, cols) = m.dim();
    let mut work: Vec<ndarray::Array1<C64>> = (0..cols).map(|j| m.column(j).to_owned()).collect();
    let mut basis: Vec<ndarray::Array1<C64>> = Vec::new();
    let mut used = vec![false; cols];
    loop {
        let mut pivot = None;
        let mut best = cutoff;
        for (j, v) in work.iter().enumerate() {
            if used[j] {
                continue;
            }
            let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm > best {
                best = norm;
                pivot = Some(j);
            }
        }
        let Some(j) = pivot else { break };
        used[j] = true;
        let q = work[j].mapv(|z| z / C64::new(best, 0.0));
        for (k, v) in work.iter_mut().enumerate() {
            if used[k] {
                continue;
            }
            let coeff: C64 = q.iter().zip(v.iter()).map(|(a, b)| a.conj() * b).sum();
            for (vi, qi) in v.iter_mut().zip(q.iter()) {
                *vi -= coeff * qi;
            }
        }
        basis.push(q);
    }
    let rank = basis.len();
    let mut out = zeros(rows, rank);
    for (j, q) in basis.iter().enumerate() {
        out.column_mut(j).assign(q);
    }
    out
}

/// Positive-semidefiniteness test for a Hermitian matrix via pivoted
/// Cholesky. Returns the most negative pivot encountered (0.0 when clean).
pub fn psd_defect(m: &CMat) -> f64 {
    let n = m.nrows();
    let mut a = m.clone();
    let mut worst: f64 = 0.0;
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        let (pos, &piv) = active
            .iter()
            .enumerate()
            .max_by(|(_, &i), (_, &j)| {
                a[(i, i)].re.partial_cmp(&a[(j, j)].re).unwrap()
            })
            .unwrap();
        let d = a[(piv, piv)].re;
        if d <= 0.0 {
            // remaining diagonal is <= d; any residual mass below zero is the defect
            for &i in &active {
                worst = worst.min(a[(i, i)].re);
            }
            break;
        }
        active.remove(pos);
        let col: Vec<(usize, C64)> = active.iter().map(|&i| (i, a[(i, piv)])).collect();
        for &(i, ci) in &col {
            for &(j, cj) in &col {
                let upd = ci * cj.conj() / C64::new(d, 0.0);
                let v = a[(i, j)] - upd;
                a[(i, j)] = v;
            }
        }
    }
    -worst
}

/// Least-squares fit of a family of square blocks to scalar multiples of the
/// identity; returns the common scalar and the max-abs residual.
pub fn fit_scalar_identity(blocks: &[&CMat]) -> (C64, f64) {
    let mut tr = C64::new(0.0, 0.0);
    let mut dim = 0usize;
    for b in blocks {
        tr += trace(b);
        dim += b.nrows();
    }
    let lambda = if dim == 0 {
        C64::new(0.0, 0.0)
    } else {
        tr / C64::new(dim as f64, 0.0)
    };
    let mut resid: f64 = 0.0;
    for b in blocks {
        let n = b.nrows();
        let fit = &eye(n) * lambda;
        resid = resid.max(max_abs_diff(b, &fit));
    }
    (lambda, resid)
}
