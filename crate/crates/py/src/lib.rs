//! Python bindings for the qkit engine (enable the `python` feature).
//!
//! Exposes categories, algebra objects, the Q-system verifier ladder, the
//! W*-object round trip, and the tetrahedral constant table.

#[cfg(feature = "python")]
// the #[pymethods] expansion inserts error conversions clippy flags as no-ops
#[allow(clippy::useless_conversion)]
mod python {
    use pyo3::exceptions::PyValueError;
    use pyo3::prelude::*;
    use pyo3::types::PyDict;
    use qkit_core::algebra::AlgebraObject;
    use qkit_core::category::Ctx;
    use std::path::Path;

    fn err<E: std::fmt::Display>(e: E) -> PyErr {
        PyValueError::new_err(e.to_string())
    }

    /// (a, b, c, alpha, beta, gamma, delta, value)
    type DeltaRow = (
        String,
        String,
        String,
        usize,
        usize,
        usize,
        usize,
        num_complex::Complex<f64>,
    );

    /// A skeletal unitary fusion category loaded from a JSON file.
    /// (Holds shared tree-basis caches, so it is confined to the thread
    /// that created it.)
    #[pyclass(unsendable)]
    pub struct Category {
        ctx: Ctx,
    }

    /// An algebra object (A, m, i) in a fixed category.
    #[pyclass]
    #[derive(Clone)]
    pub struct Algebra {
        alg: AlgebraObject,
    }

    #[pymethods]
    impl Algebra {
        /// Per-label multiplicities of the underlying object.
        #[getter]
        fn multiplicities(&self) -> Vec<usize> {
            self.alg.a.mult.clone()
        }
    }

    #[pymethods]
    impl Category {
        #[new]
        fn new(path: &str) -> PyResult<Self> {
            let spec = qkit_core::io::load_category(Path::new(path)).map_err(err)?;
            Ok(Category {
                ctx: Ctx::new(spec).map_err(err)?,
            })
        }

        #[getter]
        fn labels(&self) -> Vec<String> {
            self.ctx.spec.labels.clone()
        }

        #[getter]
        fn dims(&self) -> Vec<f64> {
            self.ctx.spec.dims.clone()
        }

        /// Pentagon, F-unitarity, duality and balancing defects.
        #[pyo3(signature = (tol = 1e-9))]
        fn validate(&self, py: Python<'_>, tol: f64) -> PyResult<PyObject> {
            let v = self.ctx.validate_category(tol).map_err(err)?;
            let d = PyDict::new_bound(py);
            d.set_item("pentagon", v.pentagon_defect)?;
            d.set_item("f_unitarity", v.unitarity_defect)?;
            d.set_item("dimension_homomorphism", v.dim_homomorphism_defect)?;
            d.set_item("zigzag", v.zigzag_defect)?;
            d.set_item("standardness", v.standardness_defect)?;
            d.set_item("balancing", v.balancing_defect)?;
            d.set_item("pass", v.pass())?;
            Ok(d.into())
        }

        fn trivial_qsystem(&self) -> Algebra {
            Algebra {
                alg: self.ctx.trivial_qsystem(),
            }
        }

        /// The group algebra of a pointed category (all d_a = 1).
        fn group_algebra(&self) -> PyResult<Algebra> {
            Ok(Algebra {
                alg: self.ctx.group_algebra().map_err(err)?,
            })
        }

        /// The normalized inner-hom Q-system of x (x) xbar.
        fn inner_hom_qsystem(&self, label: &str) -> PyResult<Algebra> {
            let x = self.ctx.spec.label_index(label).map_err(err)?;
            Ok(Algebra {
                alg: self.ctx.inner_hom_qsystem(x).map_err(err)?,
            })
        }

        fn load_algebra(&self, path: &str) -> PyResult<Algebra> {
            Ok(Algebra {
                alg: qkit_core::io::load_algebra(&self.ctx, Path::new(path)).map_err(err)?,
            })
        }

        /// Rescale the unit so that i* i = 1.
        #[pyo3(signature = (alg, tol = 1e-9))]
        fn normalize(&self, alg: &Algebra, tol: f64) -> PyResult<Algebra> {
            Ok(Algebra {
                alg: self.ctx.normalize_qsystem(&alg.alg, tol).map_err(err)?,
            })
        }

        /// Run the full Frobenius/Q-system verifier ladder.
        #[pyo3(signature = (alg, tol = 1e-9))]
        fn qsystem_check(&self, py: Python<'_>, alg: &Algebra, tol: f64) -> PyResult<PyObject> {
            let q = self.ctx.qsystem_check(&alg.alg, tol).map_err(err)?;
            let d = PyDict::new_bound(py);
            d.set_item("associativity", q.assoc_defect)?;
            d.set_item("unitality", q.unital_defect)?;
            d.set_item("frobenius", q.frobenius_defect)?;
            d.set_item("selfdual_cups", q.frobenius_selfdual_defect)?;
            d.set_item("lambda", q.lambda)?;
            d.set_item("lambda_residual", q.lambda_residual)?;
            d.set_item("lambda_prime", q.lambda_prime)?;
            d.set_item("d_A", q.d_a)?;
            d.set_item("standard_pair", q.cond1_defect)?;
            d.set_item("loop_dimension", q.cond2_defect)?;
            d.set_item("sigma_unitary", q.sigma_unitarity_defect)?;
            d.set_item("sigma_left_right", q.sigma_lr_defect)?;
            d.set_item("connected", q.connected)?;
            d.set_item("normalized", q.normalized)?;
            d.set_item("is_qsystem", q.is_qsystem)?;
            Ok(d.into())
        }

        /// Q-system -> W*-object -> Q-system round trip with the
        /// isomorphisms eta and zeta.
        #[pyo3(signature = (alg, tol = 1e-9, seed = 0))]
        fn roundtrip(
            &self,
            py: Python<'_>,
            alg: &Algebra,
            tol: f64,
            seed: u64,
        ) -> PyResult<PyObject> {
            let rt = self.ctx.roundtrip_report(&alg.alg, tol, seed).map_err(err)?;
            let d = PyDict::new_bound(py);
            d.set_item("direction", rt.direction)?;
            d.set_item("failed_stage", rt.failed_stage)?;
            d.set_item("iso_defect", rt.iso_defect)?;
            d.set_item("algebra_defect", rt.algebra_defect)?;
            d.set_item("star_or_involutive_defect", rt.star_or_involutive_defect)?;
            d.set_item("naturality_defect", rt.naturality_defect)?;
            d.set_item("mult_preserved", rt.mult_preserved)?;
            d.set_item("pass", rt.pass)?;
            Ok(d.into())
        }

        /// Sector dimensions dim C(a, A) of the W*-object of `alg`.
        #[pyo3(signature = (alg, tol = 1e-9))]
        fn sector_dims(&self, alg: &Algebra, tol: f64) -> PyResult<Vec<usize>> {
            let w = self.ctx.wstar_object(&alg.alg, tol).map_err(err)?;
            Ok((0..self.ctx.n_labels()).map(|a| w.sector_dim(a)).collect())
        }

        /// Tetrahedral structure constants as rows
        /// (a, b, c, alpha, beta, gamma, delta, complex value).
        #[pyo3(signature = (alg, tol = 1e-9))]
        fn delta_table(
            &self,
            alg: &Algebra,
            tol: f64,
        ) -> PyResult<Vec<DeltaRow>> {
            let w = self.ctx.wstar_object(&alg.alg, tol).map_err(err)?;
            let table = self.ctx.tetra_delta(&w).map_err(err)?;
            let mut keys: Vec<_> = table.channels.keys().copied().collect();
            keys.sort_unstable();
            let mut rows = Vec::new();
            for (a, b, c) in keys {
                let ch = &table.channels[&(a, b, c)];
                for (al, x) in ch.iter().enumerate() {
                    for (be, y) in x.iter().enumerate() {
                        for (ga, z) in y.iter().enumerate() {
                            for (de, v) in z.iter().enumerate() {
                                rows.push((
                                    self.ctx.spec.labels[a].clone(),
                                    self.ctx.spec.labels[b].clone(),
                                    self.ctx.spec.labels[c].clone(),
                                    al,
                                    be,
                                    ga,
                                    de,
                                    *v,
                                ));
                            }
                        }
                    }
                }
            }
            Ok(rows)
        }
    }

    #[pymodule]
    fn qkit(m: &Bound<'_, PyModule>) -> PyResult<()> {
        m.add_class::<Category>()?;
        m.add_class::<Algebra>()?;
        Ok(())
    }
}
