use std::sync::OnceLock;

use nalgebra::DMatrix;

/// Largest port group symmetrized by summing over all permutations.
pub const PERMUTATION_LIMIT: u32 = 8;

/// Projector onto the symmetric subspace of `qubits` qubits.
#[derive(Clone, Debug)]
pub enum SymmetricProjector {
    /// `(1/k!) Σ_π π` as an explicit `2^k × 2^k` matrix.
    Permutation { qubits: u32, matrix: &'static DMatrix<f64> },
    /// `Σ_w |D_w⟩⟨D_w|` with Dicke states `|D_w⟩`, evaluated entrywise.
    Dicke { qubits: u32, inv_binomial: Vec<f64> },
}

impl SymmetricProjector {
    /// Permutation sum up to [`PERMUTATION_LIMIT`] qubits, Dicke states beyond.
    pub fn new(qubits: u32) -> Self {
        if qubits <= PERMUTATION_LIMIT {
            Self::by_permutations(qubits)
        } else {
            Self::by_dicke(qubits)
        }
    }

    pub fn by_permutations(qubits: u32) -> Self {
        assert!(qubits <= PERMUTATION_LIMIT, "permutation sum limited to {PERMUTATION_LIMIT} qubits");
        static CACHE: [OnceLock<DMatrix<f64>>; PERMUTATION_LIMIT as usize + 1] =
            [const { OnceLock::new() }; PERMUTATION_LIMIT as usize + 1];
        let matrix = CACHE[qubits as usize].get_or_init(|| permutation_sum(qubits));
        SymmetricProjector::Permutation { qubits, matrix }
    }

    pub fn by_dicke(qubits: u32) -> Self {
        let mut inv_binomial = Vec::with_capacity(qubits as usize + 1);
        let mut c = 1.0f64;
        for w in 0..=qubits {
            inv_binomial.push(1.0 / c);
            c = c * f64::from(qubits - w) / f64::from(w + 1);
        }
        SymmetricProjector::Dicke { qubits, inv_binomial }
    }

    pub fn qubits(&self) -> u32 {
        match self {
            SymmetricProjector::Permutation { qubits, .. } | SymmetricProjector::Dicke { qubits, .. } => {
                *qubits
            }
        }
    }

    /// Rank, `qubits + 1`.
    pub fn rank(&self) -> u32 {
        self.qubits() + 1
    }

    pub fn entry(&self, x: u32, y: u32) -> f64 {
        match self {
            SymmetricProjector::Permutation { matrix, .. } => matrix[(x as usize, y as usize)],
            SymmetricProjector::Dicke { inv_binomial, .. } => {
                let w = x.count_ones();
                if w == y.count_ones() {
                    inv_binomial[w as usize]
                } else {
                    0.0
                }
            }
        }
    }
}

fn permutation_sum(qubits: u32) -> DMatrix<f64> {
    let k = qubits as usize;
    let perms = permutations(k);
    let dim = 1usize << k;
    let mut counts = DMatrix::<u32>::zeros(dim, dim);
    for x in 0..dim {
        for perm in &perms {
            let mut y = 0usize;
            for (bit, &target) in perm.iter().enumerate() {
                y |= ((x >> bit) & 1) << target;
            }
            counts[(y, x)] += 1;
        }
    }
    let norm = perms.len() as f64;
    counts.map(|c| f64::from(c) / norm)
}

/// All permutations of `0..k` (Heap's algorithm).
fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (0..k).collect();
    let mut out = vec![current.clone()];
    let mut counters = vec![0usize; k];
    let mut i = 1;
    while i < k {
        if counters[i] < i {
            if i % 2 == 0 {
                current.swap(0, i);
            } else {
                current.swap(counters[i], i);
            }
            out.push(current.clone());
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heap_generates_all_permutations() {
        for k in 0..=5 {
            let mut perms = permutations(k);
            let count = perms.len();
            perms.sort();
            perms.dedup();
            assert_eq!(perms.len(), count);
            assert_eq!(count, (1..=k).product::<usize>().max(1));
        }
    }

    #[test]
    fn paths_agree() {
        for k in 1..=PERMUTATION_LIMIT {
            let a = SymmetricProjector::by_permutations(k);
            let b = SymmetricProjector::by_dicke(k);
            for x in 0..1u32 << k {
                for y in 0..1u32 << k {
                    assert!((a.entry(x, y) - b.entry(x, y)).abs() < 1e-14, "k={k} x={x} y={y}");
                }
            }
        }
    }

    #[test]
    fn permutation_projector_is_idempotent() {
        let SymmetricProjector::Permutation { matrix, .. } = SymmetricProjector::by_permutations(4) else {
            unreachable!()
        };
        let sq = matrix * matrix;
        assert!((sq - matrix).abs().max() < 1e-14);
        assert!((matrix.trace() - 5.0).abs() < 1e-13);
    }
}
