use pyo3::prelude::*;

#[pymodule]
fn stieltjes_k_py(_m: &Bound<'_, PyModule>) -> PyResult<()> {
    Ok(())
}
