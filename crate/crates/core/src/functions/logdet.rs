use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use super::matrix::{logdet_unchecked, DenseMatrix};
use crate::error::{Error, Result};
use crate::oracle::SetFunction;
use crate::subset::Subset;

/// Jitter added before the Cholesky-based PSD test of each input matrix.
pub const PSD_JITTER: f64 = 1e-9;

/// `f(A) = ln det(Σ_{i∈A} D_i + I)` for symmetric PSD matrices `D_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct LogDetFunction {
    dim: usize,
    matrices: Vec<DenseMatrix>,
}

impl LogDetFunction {
    pub fn new(matrices: Vec<DenseMatrix>) -> Result<Self> {
        let dim = matrices
            .first()
            .ok_or_else(|| Error::invalid("log-det function needs at least one matrix"))?
            .dim();
        if dim == 0 {
            return Err(Error::invalid("matrix dimension must be at least 1"));
        }
        for (i, d) in matrices.iter().enumerate() {
            if d.dim() != dim {
                return Err(Error::invalid(format!(
                    "matrix {i} has dimension {}, expected {dim}",
                    d.dim()
                )));
            }
            d.check_symmetric()
                .map_err(|e| Error::invalid(format!("matrix {i}: {e}")))?;
            let mut shifted = d.clone();
            shifted.add_diagonal(PSD_JITTER);
            shifted
                .cholesky()
                .map_err(|e| Error::invalid(format!("matrix {i} is not PSD: {e}")))?;
        }
        Ok(Self { dim, matrices })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrices(&self) -> &[DenseMatrix] {
        &self.matrices
    }
}

impl SetFunction for LogDetFunction {
    fn ground_size(&self) -> usize {
        self.matrices.len()
    }

    fn value(&self, set: &Subset) -> f64 {
        if set.is_empty() {
            return 0.0;
        }
        let mut acc = DenseMatrix::identity(self.dim);
        for i in set.iter() {
            acc.add_assign(&self.matrices[i]);
        }
        // Σ D_i + I has every eigenvalue >= 1.
        logdet_unchecked(&acc).expect("sum of PSD matrices plus identity is positive definite")
    }
}

/// `m` Gram matrices `G Gᵀ`, each `G` a `d × d` matrix of i.i.d. standard
/// normals drawn from a ChaCha8 stream seeded with `seed`.
pub fn random_psd_instance(m: usize, d: usize, seed: u64) -> Result<LogDetFunction> {
    if m == 0 || d == 0 {
        return Err(Error::invalid(format!(
            "random instance needs m >= 1 and d >= 1, got m={m}, d={d}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let matrices = (0..m)
        .map(|_| {
            let g: Vec<f64> = (0..d * d)
                .map(|_| StandardNormal.sample(&mut rng))
                .collect();
            DenseMatrix::gram(&DenseMatrix::new(d, g).expect("d*d entries"))
        })
        .collect();
    LogDetFunction::new(matrices)
}
