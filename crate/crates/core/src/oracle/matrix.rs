use nalgebra::{Complex, DMatrix};

use crate::error::{Error, Result};
use crate::par::{map_collect, Execution};

pub type C64 = Complex<f64>;

/// Relative size below which eigenvalues of a positive semidefinite matrix
/// are treated as zero when taking square roots.
const PSD_CUTOFF: f64 = 1e-10;

/// Dense Hermitian matrix with row-major complex entries.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseHermitian {
    dim: usize,
    entries: Vec<C64>,
}

impl DenseHermitian {
    pub fn zeros(dim: usize) -> Self {
        DenseHermitian {
            dim,
            entries: vec![C64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        DenseHermitian { dim, entries }
    }

    pub fn from_real_fn(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        Self::from_fn(dim, |i, j| C64::new(f(i, j), 0.0))
    }

    /// Rank-one projector `|v><v|`.
    pub fn projector(v: &[C64]) -> Self {
        Self::from_fn(v.len(), |i, j| v[i] * v[j].conj())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.entries[i * self.dim + j]
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i).re).sum()
    }

    /// Largest `|a_ij - conj(a_ji)|`.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.dim {
            for j in i..self.dim {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        worst
    }

    pub fn max_abs_diff(&self, other: &DenseHermitian) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    fn is_real(&self) -> bool {
        let scale = self.entries.iter().map(|z| z.re.abs()).fold(0.0, f64::max);
        self.entries.iter().all(|z| z.im.abs() <= 1e-15 * scale.max(f64::MIN_POSITIVE))
    }

    pub fn add(&self, other: &DenseHermitian) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &DenseHermitian) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, factor: f64) -> Self {
        DenseHermitian {
            dim: self.dim,
            entries: self.entries.iter().map(|z| z * factor).collect(),
        }
    }

    fn zip_with(&self, other: &DenseHermitian, f: impl Fn(C64, C64) -> C64) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        DenseHermitian {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(*a, *b)).collect(),
        }
    }

    fn real_matrix(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.dim, self.dim, |i, j| self.get(i, j).re)
    }

    fn complex_matrix(&self) -> DMatrix<C64> {
        DMatrix::from_fn(self.dim, self.dim, |i, j| self.get(i, j))
    }

    fn from_complex_matrix(m: &DMatrix<C64>) -> Self {
        Self::from_fn(m.nrows(), |i, j| m[(i, j)])
    }

    fn from_real_matrix(m: &DMatrix<f64>) -> Self {
        Self::from_real_fn(m.nrows(), |i, j| m[(i, j)])
    }

    /// Eigenvalues, unordered. Real symmetric input takes a real solver.
    pub fn eigenvalues(&self) -> Vec<f64> {
        if self.dim == 0 {
            return Vec::new();
        }
        if self.is_real() {
            self.real_matrix().symmetric_eigenvalues().iter().copied().collect()
        } else {
            self.complex_matrix().symmetric_eigenvalues().iter().copied().collect()
        }
    }

    pub fn trace_norm(&self) -> f64 {
        self.eigenvalues().iter().map(|x| x.abs()).sum()
    }

    /// Number of eigenvalues above `tol`.
    pub fn rank(&self, tol: f64) -> usize {
        self.eigenvalues().iter().filter(|x| x.abs() > tol).count()
    }

    /// Square root of a positive semidefinite matrix; eigenvalues below
    /// `1e-10` times the largest are dropped.
    pub fn psd_sqrt(&self) -> Self {
        if self.dim == 0 {
            return self.clone();
        }
        let root = |values: &[f64]| -> Vec<f64> {
            let top = values.iter().copied().fold(0.0, f64::max);
            values
                .iter()
                .map(|&x| if x > PSD_CUTOFF * top { x.sqrt() } else { 0.0 })
                .collect()
        };
        if self.is_real() {
            let eig = self.real_matrix().symmetric_eigen();
            let vals = root(eig.eigenvalues.as_slice());
            let v = &eig.eigenvectors;
            let scaled = DMatrix::from_fn(self.dim, self.dim, |i, k| v[(i, k)] * vals[k]);
            Self::from_real_matrix(&(scaled * v.transpose()))
        } else {
            let eig = self.complex_matrix().symmetric_eigen();
            let vals = root(eig.eigenvalues.as_slice());
            let v = &eig.eigenvectors;
            let scaled = DMatrix::from_fn(self.dim, self.dim, |i, k| v[(i, k)] * vals[k]);
            Self::from_complex_matrix(&(scaled * v.adjoint()))
        }
    }

    /// `tr √(√a b √a)`, evaluated as the nuclear norm of `√a √b`.
    pub fn fidelity(&self, other: &DenseHermitian) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        if self.dim == 0 {
            return 0.0;
        }
        let (ra, rb) = (self.psd_sqrt(), other.psd_sqrt());
        if ra.is_real() && rb.is_real() {
            (ra.real_matrix() * rb.real_matrix()).singular_values().sum()
        } else {
            (ra.complex_matrix() * rb.complex_matrix()).singular_values().sum()
        }
    }

    /// `Bᵀ H B` for a real matrix `B` with orthonormal columns.
    pub fn compress(&self, basis: &DMatrix<f64>) -> Self {
        assert_eq!(basis.nrows(), self.dim);
        let re = self.real_matrix();
        let out_re = basis.transpose() * re * basis;
        if self.is_real() {
            return Self::from_real_matrix(&out_re);
        }
        let im = DMatrix::from_fn(self.dim, self.dim, |i, j| self.get(i, j).im);
        let out_im = basis.transpose() * im * basis;
        Self::from_fn(basis.ncols(), |i, j| C64::new(out_re[(i, j)], out_im[(i, j)]))
    }

    /// `v† H v`.
    pub fn expectation(&self, v: &[C64]) -> f64 {
        let mut acc = C64::new(0.0, 0.0);
        for i in 0..self.dim {
            for j in 0..self.dim {
                acc += v[i].conj() * self.get(i, j) * v[j];
            }
        }
        acc.re
    }
}

/// Basis in which the blocks of a [`WeightBlocks`] are expressed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SectorBasis {
    /// One block per Hamming weight `w`, spanned by the `w`-weight bit strings
    /// in increasing order.
    Computational,
    /// One block per Hamming weight, spanned by products of per-port Dicke
    /// states `|a⟩|b⟩|c⟩` with `a + b + c = w`, lexicographic in `(a, b, c)`.
    PortSymmetric { n_a: u32, n_b: u32, n_c: u32 },
    /// A single dense block.
    Dense,
}

/// Block-diagonal operator on `qubits` qubits.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightBlocks {
    pub(crate) qubits: u32,
    pub(crate) basis: SectorBasis,
    pub(crate) blocks: Vec<DenseHermitian>,
}

impl WeightBlocks {
    pub fn single(matrix: DenseHermitian) -> Self {
        WeightBlocks {
            qubits: 0,
            basis: SectorBasis::Dense,
            blocks: vec![matrix],
        }
    }

    pub fn qubits(&self) -> u32 {
        self.qubits
    }

    pub fn basis(&self) -> SectorBasis {
        self.basis
    }

    pub fn blocks(&self) -> &[DenseHermitian] {
        &self.blocks
    }

    pub fn trace(&self) -> f64 {
        self.blocks.iter().map(DenseHermitian::trace).sum()
    }

    pub fn hermiticity_defect(&self) -> f64 {
        self.blocks.iter().map(DenseHermitian::hermiticity_defect).fold(0.0, f64::max)
    }

    pub fn rank(&self, tol: f64) -> usize {
        self.blocks.iter().map(|b| b.rank(tol)).sum()
    }

    pub fn max_abs_diff(&self, other: &WeightBlocks) -> Result<f64> {
        self.check_compatible(other)?;
        Ok(self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.max_abs_diff(b))
            .fold(0.0, f64::max))
    }

    pub fn map_blocks(&self, mut f: impl FnMut(usize, &DenseHermitian) -> DenseHermitian) -> Self {
        WeightBlocks {
            qubits: self.qubits,
            basis: self.basis,
            blocks: self.blocks.iter().enumerate().map(|(w, b)| f(w, b)).collect(),
        }
    }

    /// `self += weight · other`.
    pub fn add_scaled(&mut self, weight: f64, other: &WeightBlocks) -> Result<()> {
        self.check_compatible(other)?;
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a = a.add(&b.scale(weight));
        }
        Ok(())
    }

    pub fn check_compatible(&self, other: &WeightBlocks) -> Result<()> {
        let same_shape = self.blocks.len() == other.blocks.len()
            && self.blocks.iter().zip(&other.blocks).all(|(a, b)| a.dim() == b.dim());
        if self.basis != other.basis || self.qubits != other.qubits || !same_shape {
            return Err(Error::InvalidArgument("operators act on different spaces".into()));
        }
        Ok(())
    }

    /// The full `2^qubits` matrix, for computational-basis operators.
    pub fn to_dense(&self) -> Result<DenseHermitian> {
        match self.basis {
            SectorBasis::Dense => Ok(self.blocks[0].clone()),
            SectorBasis::PortSymmetric { .. } => Err(Error::InvalidArgument(
                "port-symmetric blocks have no computational-basis embedding".into(),
            )),
            SectorBasis::Computational => {
                if self.qubits > 10 {
                    return Err(Error::DimensionCap {
                        qubits: self.qubits,
                        limit: 10,
                    });
                }
                let dim = 1usize << self.qubits;
                let mut out = DenseHermitian::zeros(dim);
                for (w, block) in self.blocks.iter().enumerate() {
                    let states = super::sector_states(self.qubits, w as u32);
                    for (i, &x) in states.iter().enumerate() {
                        for (j, &y) in states.iter().enumerate() {
                            out.entries[x as usize * dim + y as usize] = block.get(i, j);
                        }
                    }
                }
                Ok(out)
            }
        }
    }
}

fn check_unit_trace(s: &WeightBlocks) -> Result<()> {
    let t = s.trace();
    if (t - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidArgument(format!("state has trace {t}, expected 1")));
    }
    Ok(())
}

/// `‖s1 - s2‖₁`, summed over blocks.
pub fn trace_distance_norm(s1: &WeightBlocks, s2: &WeightBlocks, exec: Execution) -> Result<f64> {
    s1.check_compatible(s2)?;
    let pairs: Vec<_> = s1.blocks.iter().zip(&s2.blocks).collect();
    let norms = map_collect(exec, &pairs, |(a, b)| a.sub(b).trace_norm());
    Ok(norms.iter().sum())
}

/// Minimum error probability `½(1 - ½‖s1 - s2‖₁)` for equiprobable states.
pub fn helstrom(s1: &WeightBlocks, s2: &WeightBlocks) -> Result<f64> {
    helstrom_with(s1, s2, Execution::default())
}

pub fn helstrom_with(s1: &WeightBlocks, s2: &WeightBlocks, exec: Execution) -> Result<f64> {
    check_unit_trace(s1)?;
    check_unit_trace(s2)?;
    Ok(0.5 * (1.0 - 0.5 * trace_distance_norm(s1, s2, exec)?))
}

/// `tr √(√s1 s2 √s1)`, summed over blocks. Inputs need not be normalized.
pub fn fidelity(s1: &WeightBlocks, s2: &WeightBlocks) -> Result<f64> {
    fidelity_with(s1, s2, Execution::default())
}

pub fn fidelity_with(s1: &WeightBlocks, s2: &WeightBlocks, exec: Execution) -> Result<f64> {
    s1.check_compatible(s2)?;
    let pairs: Vec<_> = s1.blocks.iter().zip(&s2.blocks).collect();
    Ok(map_collect(exec, &pairs, |(a, b)| a.fidelity(b)).iter().sum())
}
