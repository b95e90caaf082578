use crate::error::{Error, Result};

/// Absolute-or-relative tolerance used for symmetry checks.
pub const SYMMETRY_TOL: f64 = 1e-9;

/// Square, row-major, dense matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn new(dim: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != dim * dim {
            return Err(Error::invalid(format!(
                "matrix of dimension {dim} needs {} entries, got {}",
                dim * dim,
                data.len()
            )));
        }
        if let Some(x) = data.iter().find(|x| !x.is_finite()) {
            return Err(Error::invalid(format!("matrix entry {x} is not finite")));
        }
        Ok(Self { dim, data })
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = 1.0;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::invalid(format!(
                "matrix is not square: {dim} rows but a row of length {}",
                r.len()
            )));
        }
        Self::new(dim, rows.concat())
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.dim).map(<[f64]>::to_vec).collect()
    }

    /// `g gᵀ` for a square factor `g`; the result is symmetric bit-for-bit.
    pub fn gram(g: &DenseMatrix) -> Self {
        let d = g.dim;
        let mut out = Self::zeros(d);
        for i in 0..d {
            let ri = g.row(i);
            for j in 0..=i {
                let v = ri.iter().zip(g.row(j)).map(|(a, b)| a * b).sum();
                out.data[i * d + j] = v;
                out.data[j * d + i] = v;
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn add_assign(&mut self, other: &DenseMatrix) {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += b;
        }
    }

    pub fn add_diagonal(&mut self, shift: f64) {
        for i in 0..self.dim {
            self.data[i * self.dim + i] += shift;
        }
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        self.first_asymmetry(tol).is_none()
    }

    fn first_asymmetry(&self, tol: f64) -> Option<(usize, usize)> {
        let d = self.dim;
        for i in 0..d {
            for j in 0..i {
                let (a, b) = (self.get(i, j), self.get(j, i));
                if (a - b).abs() > tol * 1f64.max(a.abs()).max(b.abs()) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn check_symmetric(&self) -> Result<()> {
        match self.first_asymmetry(SYMMETRY_TOL) {
            None => Ok(()),
            Some((i, j)) => Err(Error::invalid(format!(
                "matrix is not symmetric: entry ({i},{j}) = {} but ({j},{i}) = {}",
                self.get(i, j),
                self.get(j, i)
            ))),
        }
    }

    /// Lower Cholesky factor `L` with `M = L Lᵀ`, row-major. Only the lower
    /// triangle of `self` is read; symmetry is the caller's concern.
    pub fn cholesky(&self) -> Result<DenseMatrix> {
        let d = self.dim;
        let mut l = vec![0.0; d * d];
        for j in 0..d {
            let mut diag = self.get(j, j);
            for k in 0..j {
                diag -= l[j * d + k] * l[j * d + k];
            }
            if diag.is_nan() || diag <= 0.0 {
                return Err(Error::NotPositiveDefinite {
                    row: j,
                    pivot: diag,
                });
            }
            let ljj = diag.sqrt();
            l[j * d + j] = ljj;
            for i in j + 1..d {
                let mut s = self.get(i, j);
                for k in 0..j {
                    s -= l[i * d + k] * l[j * d + k];
                }
                l[i * d + j] = s / ljj;
            }
        }
        Ok(DenseMatrix { dim: d, data: l })
    }
}

/// `ln det M = 2 Σ ln L_kk` for symmetric positive definite `M`.
pub fn cholesky_logdet(m: &DenseMatrix) -> Result<f64> {
    m.check_symmetric()?;
    logdet_unchecked(m)
}

pub(crate) fn logdet_unchecked(m: &DenseMatrix) -> Result<f64> {
    let l = m.cholesky()?;
    Ok(2.0 * (0..m.dim).map(|k| l.get(k, k).ln()).sum::<f64>())
}
