//! Eigenvalues of symmetric matrices, quotient matrices of vertex partitions,
//! interlacing checks, and the closed-form eigenvalue bounds used in the
//! classification arguments.
//!
//! Eigenvalues are computed in floating point by the cyclic Jacobi method and
//! are accurate to about `1e-12` on the matrices this crate builds; callers
//! are promised [`EXTERNAL_TOLERANCE`]. Integrality questions never go
//! through this module; see [`crate::exact`].

use crate::error::{Error, Result};
use crate::exact::IntMatrix;
use crate::graphs::{Graph, Partition};

/// Accuracy of individual eigenvalues produced by [`eigenvalues_sym`].
pub const INTERNAL_TOLERANCE: f64 = 1e-9;
/// Tolerance guaranteed to callers comparing eigenvalues.
pub const EXTERNAL_TOLERANCE: f64 = 1e-8;
/// Largest asymmetry accepted by [`SymMatrix::new`].
pub const SYMMETRY_TOLERANCE: f64 = 1e-12;

/// Real symmetric matrix, row major.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn new(order: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != order * order {
            return Err(Error::InvalidParameter(format!(
                "expected {} entries for order {order}, got {}",
                order * order,
                data.len()
            )));
        }
        for i in 0..order {
            for j in 0..i {
                let diff = (data[i * order + j] - data[j * order + i]).abs();
                // Also rejects NaN.
                #[allow(clippy::neg_cmp_op_on_partial_ord)]
                if !(diff <= SYMMETRY_TOLERANCE) {
                    return Err(Error::Asymmetric { i, j, diff });
                }
            }
        }
        Ok(SymMatrix { order, data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::InvalidParameter("matrix must be square".into()));
        }
        Self::new(order, rows.iter().flatten().copied().collect())
    }

    pub fn from_int(m: &IntMatrix) -> Result<Self> {
        let n = m.order();
        Self::new(n, (0..n * n).map(|k| m.get(k / n, k % n) as f64).collect())
    }

    pub fn adjacency(g: &Graph) -> Self {
        let n = g.n();
        let data = (0..n * n).map(|k| g.has_edge(k / n, k % n) as u8 as f64).collect();
        SymMatrix { order: n, data }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    /// All eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        jacobi_eigenvalues(self.order, self.data.clone())
    }

    pub fn smallest_eigenvalue(&self) -> f64 {
        self.eigenvalues().first().copied().unwrap_or(f64::NAN)
    }
}

/// Eigenvalues of a symmetric matrix, ascending.
pub fn eigenvalues_sym(m: &SymMatrix) -> Vec<f64> {
    m.eigenvalues()
}

/// Cyclic Jacobi rotations until the off-diagonal mass is negligible.
fn jacobi_eigenvalues(n: usize, mut a: Vec<f64>) -> Vec<f64> {
    const MAX_SWEEPS: usize = 100;
    let frob: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let target = f64::EPSILON * frob.max(f64::MIN_POSITIVE);
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * n + j] * a[i * n + j])
            .sum::<f64>()
            .sqrt();
        if off <= target {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let np = c * arp - s * arq;
                    let nq = s * arp + c * arq;
                    a[r * n + p] = np;
                    a[p * n + r] = np;
                    a[r * n + q] = nq;
                    a[q * n + r] = nq;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Smallest adjacency eigenvalue. For a disconnected graph this is the
/// minimum over its components.
pub fn smallest_eigenvalue(g: &Graph) -> f64 {
    SymMatrix::adjacency(g).smallest_eigenvalue()
}

/// Sorted adjacency spectrum.
pub fn spectrum(g: &Graph) -> Vec<f64> {
    SymMatrix::adjacency(g).eigenvalues()
}

/// Quotient matrix of a partition: `entries[i][j]` is the average number of
/// neighbours in cell `j` of a vertex in cell `i`.
///
/// Every such matrix satisfies `size_i * b_ij = size_j * b_ji`, so it is
/// similar to the symmetric matrix `D^{1/2} B D^{-1/2}`; eigenvalues are
/// taken from that conjugate and are real whether or not the partition is
/// equitable.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientMatrix {
    order: usize,
    entries: Vec<f64>,
    cell_sizes: Vec<usize>,
}

impl QuotientMatrix {
    /// Builds a quotient matrix from explicit entries and cell sizes.
    pub fn new(rows: Vec<Vec<f64>>, cell_sizes: Vec<usize>) -> Result<Self> {
        let r = rows.len();
        if cell_sizes.len() != r || rows.iter().any(|row| row.len() != r) {
            return Err(Error::InvalidParameter("quotient matrix must be square with one size per cell".into()));
        }
        if cell_sizes.contains(&0) {
            return Err(Error::InvalidParameter("cell sizes must be positive".into()));
        }
        for i in 0..r {
            for j in 0..i {
                let lhs = cell_sizes[i] as f64 * rows[i][j];
                let rhs = cell_sizes[j] as f64 * rows[j][i];
                let diff = (lhs - rhs).abs();
                if diff > 1e-9 * lhs.abs().max(rhs.abs()).max(1.0) {
                    return Err(Error::Asymmetric { i, j, diff });
                }
            }
        }
        Ok(QuotientMatrix { order: r, entries: rows.into_iter().flatten().collect(), cell_sizes })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    pub fn cell_sizes(&self) -> &[usize] {
        &self.cell_sizes
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.entries.chunks(self.order).map(<[f64]>::to_vec).collect()
    }

    /// The symmetric conjugate `D^{1/2} B D^{-1/2}`.
    pub fn symmetrized(&self) -> SymMatrix {
        let r = self.order;
        let mut data = vec![0.0; r * r];
        for i in 0..r {
            for j in 0..r {
                let si = (self.cell_sizes[i] as f64).sqrt();
                let sj = (self.cell_sizes[j] as f64).sqrt();
                data[i * r + j] = si * self.get(i, j) / sj;
            }
        }
        // Average the two triangles to absorb sqrt rounding.
        for i in 0..r {
            for j in 0..i {
                let m = 0.5 * (data[i * r + j] + data[j * r + i]);
                data[i * r + j] = m;
                data[j * r + i] = m;
            }
        }
        SymMatrix { order: r, data }
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        self.symmetrized().eigenvalues()
    }

    pub fn smallest_eigenvalue(&self) -> f64 {
        self.symmetrized().smallest_eigenvalue()
    }
}

/// Quotient matrix of `g` relative to `p`.
pub fn quotient_matrix(g: &Graph, p: &Partition) -> Result<QuotientMatrix> {
    if p.vertex_count() != g.n() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} vertices, graph has {}",
            p.vertex_count(),
            g.n()
        )));
    }
    // Re-validate against this graph's vertex range.
    let p = Partition::new(g.n(), p.cells().to_vec())?;
    let mut cell_of = vec![0; g.n()];
    for (ci, cell) in p.cells().iter().enumerate() {
        for &v in cell {
            cell_of[v] = ci;
        }
    }
    let r = p.len();
    let mut counts = vec![vec![0usize; r]; r];
    for (u, v) in g.edges() {
        counts[cell_of[u]][cell_of[v]] += 1;
        counts[cell_of[v]][cell_of[u]] += 1;
    }
    let sizes: Vec<usize> = p.cells().iter().map(Vec::len).collect();
    let rows = (0..r).map(|i| (0..r).map(|j| counts[i][j] as f64 / sizes[i] as f64).collect()).collect();
    QuotientMatrix::new(rows, sizes)
}

/// Whether the induced subgraph on `subset` has smallest eigenvalue at least
/// that of `g`, up to [`EXTERNAL_TOLERANCE`]. Always true; exists as an oracle.
pub fn interlacing_check(g: &Graph, subset: &[usize]) -> Result<bool> {
    let sub = g.induced(subset)?;
    Ok(smallest_eigenvalue(&sub) >= smallest_eigenvalue(g) - EXTERNAL_TOLERANCE)
}

/// Quotient matrix for a vertex `x`, its `k` neighbours and two disjoint
/// adjacent pairs at distance two from `x`, in a sesqui-regular graph with
/// `c = k − 1` and diameter two. Cell sizes are `(1, k, 4)`.
pub fn deep_pairs_quotient(k: usize) -> Result<QuotientMatrix> {
    if k == 0 {
        return Err(Error::InvalidParameter("valency must be positive".into()));
    }
    let kf = k as f64;
    let cross = 4.0 * (kf - 1.0) / kf;
    QuotientMatrix::new(
        vec![vec![0.0, kf, 0.0], vec![1.0, kf - 1.0 - cross, cross], vec![0.0, kf - 1.0, 1.0]],
        vec![1, k, 4],
    )
}

/// Closed-form smallest eigenvalue of [`deep_pairs_quotient`]:
/// `−(2(k−1) + √(5k² − 8k + 4)) / k`.
pub fn deep_pairs_bound(k: usize) -> Result<f64> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("valency {k} is below 3")));
    }
    let k = k as f64;
    Ok(-(2.0 * (k - 1.0) + (5.0 * k * k - 8.0 * k + 4.0).sqrt()) / k)
}

/// Distance-layer quotient of a `k`-regular graph of diameter three with
/// `c = k − 1`, cells `{x}`, `Γ₁(x)`, `Γ₂(x)`, `{x₃}` of sizes `(1, k, k, 1)`.
/// Its smallest eigenvalue is `−k`.
pub fn layered_quotient(k: usize) -> Result<QuotientMatrix> {
    if k == 0 {
        return Err(Error::InvalidParameter("valency must be positive".into()));
    }
    let kf = k as f64;
    QuotientMatrix::new(
        vec![
            vec![0.0, kf, 0.0, 0.0],
            vec![1.0, 0.0, kf - 1.0, 0.0],
            vec![0.0, kf - 1.0, 0.0, 1.0],
            vec![0.0, 0.0, kf, 0.0],
        ],
        vec![1, k, k, 1],
    )
}

/// The integer matrix `[[0, w, 0], [1, w−1, 41], [0, w, 40]]` bounding the
/// number `w` of slim vertices sharing a fat neighbour.
pub fn fat_bound_matrix(w: i64) -> IntMatrix {
    IntMatrix::from_rows(vec![vec![0, w, 0], vec![1, w - 1, 41], vec![0, w, 40]])
}

/// `det(M + 3I) = −37w + 258` for `M = fat_bound_matrix(w)`; it is negative
/// exactly when `w ≥ 7`.
pub fn fat_bound_determinant(w: i64) -> i64 {
    -37 * w + 258
}

/// [`fat_bound_matrix`] as a quotient matrix with cell sizes `(1, w, 41)`,
/// so that its (real) eigenvalues can be computed. Requires `w ≥ 1`.
pub fn fat_bound_quotient(w: usize) -> Result<QuotientMatrix> {
    if w == 0 {
        return Err(Error::InvalidParameter("w must be positive".into()));
    }
    let m = fat_bound_matrix(w as i64);
    let rows = m.rows().into_iter().map(|r| r.into_iter().map(|x| x as f64).collect()).collect();
    QuotientMatrix::new(rows, vec![1, w, 41])
}
