//! Exact dense linear algebra over a field of [`Scalar`]s: incremental
//! reduced row echelon forms, membership tests, and affine solving.
//!
//! Everything here assumes all scalars share one field domain; the public
//! algebra layer guarantees that before calling in.

use crate::scalar::{Scalar, ScalarDomain};

fn add(a: &Scalar, b: &Scalar) -> Scalar {
    a.add(b).expect("linalg: mixed scalar domains")
}

fn mul(a: &Scalar, b: &Scalar) -> Scalar {
    a.mul(b).expect("linalg: mixed scalar domains")
}

/// `dst -= c * src`
fn sub_scaled(dst: &mut [Scalar], c: &Scalar, src: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d = add(d, &mul(&c.neg(), s));
        }
    }
}

/// An incrementally maintained reduced row echelon form of a subspace.
///
/// Pivots are chosen by scanning coordinates in a configurable priority
/// order; each stored row is normalized to pivot coefficient one and the
/// pivot coordinate is eliminated from every other row.
#[derive(Debug, Clone)]
pub(crate) struct RowSpace {
    width: usize,
    /// Coordinate scan order: `priority[k]` is the k-th column to try.
    priority: Vec<usize>,
    rows: Vec<Vec<Scalar>>,
    /// Pivot column of each row, parallel to `rows`.
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(domain: ScalarDomain, width: usize) -> Self {
        Self::with_priority(domain, width, (0..width).collect())
    }

    pub fn with_priority(domain: ScalarDomain, width: usize, priority: Vec<usize>) -> Self {
        debug_assert!(domain.is_field());
        debug_assert_eq!(priority.len(), width);
        let _ = domain;
        RowSpace {
            width,
            priority,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_pivot(&self, column: usize) -> bool {
        self.pivots.contains(&column)
    }

    /// Eliminates all pivot coordinates from `v`, leaving the canonical
    /// representative of `v` modulo this row space.
    pub fn reduce(&self, v: &mut [Scalar]) {
        debug_assert_eq!(v.len(), self.width);
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = v[piv].clone();
            if !c.is_zero() {
                sub_scaled(v, &c, row);
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Scalar::is_zero)
    }

    /// Inserts a vector; returns `true` when it enlarged the space.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        let mut v = v;
        self.reduce(&mut v);
        let Some(&piv) = self.priority.iter().find(|&&c| !v[c].is_zero()) else {
            return false;
        };
        let inv = v[piv].invert().expect("nonzero pivot");
        for entry in v.iter_mut() {
            *entry = mul(entry, &inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[piv].clone();
            if !c.is_zero() {
                sub_scaled(row, &c, &v);
            }
        }
        self.rows.push(v);
        self.pivots.push(piv);
        true
    }

    /// True when the two row spaces are equal as subspaces.
    pub fn same_space(&self, other: &RowSpace) -> bool {
        self.rank() == other.rank() && self.rows.iter().all(|r| other.contains(r))
    }
}

/// Solution set of a consistent linear system: `particular + span(kernel)`.
#[derive(Debug, Clone)]
pub(crate) struct AffineSolutions {
    pub particular: Vec<Scalar>,
    pub kernel: Vec<Vec<Scalar>>,
}

impl AffineSolutions {
    /// Does the solution set contain a point with coordinate-`k`
    /// functional nonzero? (An affine set either lies inside the
    /// hyperplane `x_k = 0` or leaves it.)
    pub fn attains_nonzero_at(&self, k: usize) -> bool {
        !self.particular[k].is_zero() || self.kernel.iter().any(|v| !v[k].is_zero())
    }

    /// A solution whose coordinate `k` is zero, if one exists.
    pub fn solution_with_zero_at(&self, k: usize, domain: &ScalarDomain) -> Option<Vec<Scalar>> {
        if self.particular[k].is_zero() {
            return Some(self.particular.clone());
        }
        let dir = self.kernel.iter().find(|v| !v[k].is_zero())?;
        // particular - (particular[k]/dir[k]) * dir
        let c = self
            .particular[k]
            .div(&dir[k])
            .expect("field division");
        let mut out = self.particular.clone();
        sub_scaled(&mut out, &c, dir);
        debug_assert!(out[k].is_zero());
        let _ = domain;
        Some(out)
    }
}

/// Solves `sum_j x_j * columns[j] = target` over a field.
///
/// Returns `None` when infeasible; otherwise a particular solution and a
/// kernel basis spanning all homogeneous solutions.
pub(crate) fn solve_affine(
    domain: ScalarDomain,
    columns: &[Vec<Scalar>],
    target: &[Scalar],
) -> Option<AffineSolutions> {
    debug_assert!(domain.is_field());
    let m = columns.len();
    let height = target.len();
    // Augmented rows: one per coordinate equation, width m + 1.
    let mut rows: Vec<Vec<Scalar>> = (0..height)
        .map(|i| {
            let mut r: Vec<Scalar> = columns.iter().map(|c| c[i].clone()).collect();
            r.push(target[i].clone());
            r
        })
        .collect();

    let mut pivot_of_col: Vec<Option<usize>> = vec![None; m];
    let mut next_row = 0usize;
    for col in 0..m {
        let Some(r) = (next_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, r);
        let inv = rows[next_row][col].invert().expect("nonzero pivot");
        for e in rows[next_row].iter_mut() {
            *e = mul(e, &inv);
        }
        let pivot_row = rows[next_row].clone();
        for (idx, row) in rows.iter_mut().enumerate() {
            if idx != next_row {
                let c = row[col].clone();
                sub_scaled(row, &c, &pivot_row);
            }
        }
        pivot_of_col[col] = Some(next_row);
        next_row += 1;
        if next_row == rows.len() {
            break;
        }
    }
    // Infeasible when a leftover row is (0 .. 0 | nonzero).
    for row in &rows[next_row..] {
        if !row[m].is_zero() {
            return None;
        }
    }

    let zero = domain.zero();
    let mut particular = vec![zero.clone(); m];
    for col in 0..m {
        if let Some(r) = pivot_of_col[col] {
            particular[col] = rows[r][m].clone();
        }
    }
    let mut kernel = Vec::new();
    for free in 0..m {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![zero.clone(); m];
        v[free] = domain.one();
        for col in 0..m {
            if let Some(r) = pivot_of_col[col] {
                v[col] = rows[r][free].neg();
            }
        }
        kernel.push(v);
    }
    Some(AffineSolutions { particular, kernel })
}
