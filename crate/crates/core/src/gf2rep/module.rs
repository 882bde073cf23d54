//! GF(2)-modules for a permutation group: the action matrices, the
//! permutation and regular modules, the heart of an even-degree
//! permutation module, spinning, and spaces of intertwiners.
//!
//! Vectors are rows and generators act on the right: `v ↦ v·X_g`, matching
//! the composition convention of [`crate::groups::Perm::then`].

use crate::groups::{Perm, PermGroup};

use super::matrix::{GF2Matrix, GF2Vector, RowBasis, MAX_DIM};
use super::GF2RepError;

/// A finite-dimensional module over GF(2) for a fixed permutation group:
/// one invertible matrix per group generator.
#[derive(Debug, Clone)]
pub struct GF2Module {
    group: PermGroup,
    dimension: usize,
    action: Vec<GF2Matrix>,
}

impl GF2Module {
    /// Assemble a module from explicit generator actions.  Verifies shape
    /// and invertibility; in debug builds also spot-checks that products
    /// of generators act by products of matrices.
    pub fn new(
        group: PermGroup,
        action: Vec<GF2Matrix>,
        dimension: usize,
    ) -> Result<GF2Module, GF2RepError> {
        if dimension > MAX_DIM {
            return Err(GF2RepError::DimensionTooLarge { dimension, limit: MAX_DIM });
        }
        assert_eq!(action.len(), group.generators().len());
        for x in &action {
            assert_eq!((x.rows(), x.cols()), (dimension, dimension));
            assert_eq!(x.rank(), dimension, "generator action is not invertible");
        }
        Ok(GF2Module { group, dimension, action })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn action(&self) -> &[GF2Matrix] {
        &self.action
    }

    /// The module of dimension `degree` on which each generator acts by
    /// its permutation matrix.
    pub fn permutation_module(group: &PermGroup) -> GF2Module {
        let degree = group.degree() as usize;
        let matrix_of = |g: &Perm| {
            let mut x = GF2Matrix::zero(degree, degree);
            for i in 0..degree {
                x.set(i, g.apply(i as u8) as usize, true);
            }
            x
        };
        let action: Vec<GF2Matrix> = group.generators().iter().map(matrix_of).collect();
        debug_assert!(spot_check_homomorphism(group.generators(), &action, matrix_of));
        GF2Module { group: group.clone(), dimension: degree, action }
    }

    /// The right regular module: dimension |G|, basis indexed by the
    /// sorted elements, generator g sending the basis vector of x to the
    /// basis vector of x·g.
    pub fn regular_module(group: &PermGroup) -> Result<GF2Module, GF2RepError> {
        let order = group.order();
        if order as usize > MAX_DIM {
            return Err(GF2RepError::GroupTooLarge { order, limit: MAX_DIM as u64 });
        }
        let elements = group.elements();
        let index_of = |p: &Perm| elements.binary_search(p).expect("closed under product");
        let n = elements.len();
        let matrix_of = |g: &Perm| {
            let mut x = GF2Matrix::zero(n, n);
            for (i, e) in elements.iter().enumerate() {
                x.set(i, index_of(&e.then(g)), true);
            }
            x
        };
        let action: Vec<GF2Matrix> = group.generators().iter().map(matrix_of).collect();
        debug_assert!(spot_check_homomorphism(group.generators(), &action, matrix_of));
        Ok(GF2Module { group: group.clone(), dimension: n, action })
    }

    /// The heart of an even-degree permutation module: the sum-zero
    /// subspace modulo the all-ones line, of dimension `degree − 2`.
    /// (For even degree the all-ones vector is itself sum-zero.)
    pub fn heart(&self) -> Result<GF2Module, GF2RepError> {
        for x in &self.action {
            if !x.is_permutation_matrix() {
                return Err(GF2RepError::NotPermutationAction);
            }
        }
        if self.dimension % 2 != 0 {
            return Err(GF2RepError::OddDegreeHeart { degree: self.dimension });
        }
        // Sum-zero subspace: spanned by e_0+e_i.  The all-ones vector is
        // the sum of all of them when the degree is even.
        let mut sum_zero = RowBasis::new(self.dimension);
        for i in 1..self.dimension {
            let mut v = GF2Vector::unit(self.dimension, 0);
            v.set(i, true);
            sum_zero.insert(v);
        }
        let inside = self.submodule(&sum_zero);
        // The all-ones line in sum-zero coordinates.
        let mut all_ones = GF2Vector::zero(self.dimension);
        for i in 0..self.dimension {
            all_ones.set(i, true);
        }
        let coords = sum_zero.express(&all_ones).expect("all-ones is sum-zero");
        let mut line = RowBasis::new(inside.dimension);
        let mut v = GF2Vector::zero(inside.dimension);
        for (i, c) in coords.into_iter().enumerate() {
            if c {
                v.set(i, true);
            }
        }
        line.insert(v);
        Ok(inside.quotient(&line))
    }

    /// The smallest submodule containing `v`: closure under the generator
    /// actions, as a row basis.
    pub fn spin(&self, v: &GF2Vector) -> RowBasis {
        debug_assert_eq!(v.len(), self.dimension);
        let mut basis = RowBasis::new(self.dimension);
        basis.insert(v.clone());
        let mut next = 0;
        while next < basis.dim() {
            let current = basis.rows()[next].clone();
            next += 1;
            for x in &self.action {
                basis.insert(x.vec_mul(&current));
            }
        }
        basis
    }

    /// The induced module on an invariant subspace.  Panics if the given
    /// row space is not actually invariant — callers pass spins.
    pub fn submodule(&self, basis: &RowBasis) -> GF2Module {
        let k = basis.dim();
        let action = self
            .action
            .iter()
            .map(|x| {
                let mut sub = GF2Matrix::zero(k, k);
                for (i, row) in basis.rows().iter().enumerate() {
                    let image = x.vec_mul(row);
                    let coords = basis
                        .express(&image)
                        .expect("subspace is invariant under the action");
                    for (j, c) in coords.into_iter().enumerate() {
                        if c {
                            sub.set(i, j, true);
                        }
                    }
                }
                sub
            })
            .collect();
        GF2Module { group: self.group.clone(), dimension: k, action }
    }

    /// The induced module on the quotient by an invariant subspace, in
    /// the coordinates of the non-pivot columns.
    pub fn quotient(&self, basis: &RowBasis) -> GF2Module {
        let free: Vec<usize> = (0..self.dimension)
            .filter(|i| !basis.pivots().contains(i))
            .collect();
        let k = free.len();
        let position: std::collections::HashMap<usize, usize> =
            free.iter().enumerate().map(|(a, &b)| (b, a)).collect();
        let reduce_to_free = |mut v: GF2Vector| -> GF2Vector {
            for (row, &p) in basis.rows().iter().zip(basis.pivots()) {
                if v.get(p) {
                    v.xor_with(row);
                }
            }
            let mut out = GF2Vector::zero(k);
            for i in v.support() {
                out.set(position[&i], true);
            }
            out
        };
        let action = self
            .action
            .iter()
            .map(|x| {
                let mut q = GF2Matrix::zero(k, k);
                for (a, &i) in free.iter().enumerate() {
                    let image = reduce_to_free(x.vec_mul(&GF2Vector::unit(self.dimension, i)));
                    q.set_row(a, &image);
                }
                q
            })
            .collect();
        GF2Module { group: self.group.clone(), dimension: k, action }
    }

    /// The module with every generator acting by the transpose matrix —
    /// the dual with respect to the standard pairing.  Submodules found
    /// there orthogonally complement to submodules here.
    pub fn transpose_module(&self) -> GF2Module {
        GF2Module {
            group: self.group.clone(),
            dimension: self.dimension,
            action: self.action.iter().map(GF2Matrix::transpose).collect(),
        }
    }

    /// The submodule orthogonal to a row space of the transpose module.
    pub fn orthogonal_complement(&self, dual_basis: &RowBasis) -> RowBasis {
        let m = dual_basis.as_matrix();
        let mut basis = RowBasis::new(self.dimension);
        for v in m.right_nullspace() {
            basis.insert(v);
        }
        debug_assert_eq!(basis.dim(), self.dimension - dual_basis.dim());
        basis
    }
}

/// Dimension of the space of module maps M1 → M2: matrices T with
/// X1_g · T = T · X2_g for every generator g.  For irreducible modules
/// this is 0 unless they are isomorphic, and for M1 = M2 irreducible it
/// is the degree of the endomorphism field over GF(2).
pub fn hom_dimension(m1: &GF2Module, m2: &GF2Module) -> usize {
    let d1 = m1.dimension;
    let d2 = m2.dimension;
    debug_assert_eq!(m1.action.len(), m2.action.len());
    if d1 == 0 || d2 == 0 {
        return 0;
    }
    let unknowns = d1 * d2;
    assert!(
        unknowns <= MAX_DIM,
        "intertwiner system with {unknowns} unknowns exceeds {MAX_DIM}"
    );
    if m1.action.is_empty() {
        return unknowns; // every matrix intertwines trivial actions
    }
    // One linear constraint per generator and matrix entry, accumulated
    // into an echelonized basis so the row count never needs to be bounded.
    let mut constraints = RowBasis::new(unknowns);
    for (x1, x2) in m1.action.iter().zip(&m2.action) {
        for a in 0..d1 {
            for b in 0..d2 {
                // Coefficients of Σ_i X1[a,i]·T[i,b] + Σ_j T[a,j]·X2[j,b].
                let mut row = GF2Vector::zero(unknowns);
                for i in 0..d1 {
                    if x1.get(a, i) {
                        let col = i * d2 + b;
                        row.set(col, !row.get(col));
                    }
                }
                for j in 0..d2 {
                    if x2.get(j, b) {
                        let col = a * d2 + j;
                        row.set(col, !row.get(col));
                    }
                }
                constraints.insert(row);
            }
        }
    }
    unknowns - constraints.dim()
}

/// Check X_g·X_h = X_{gh} on generator pairs, with the expected product
/// matrix built by the same constructor.
fn spot_check_homomorphism<F>(gens: &[Perm], action: &[GF2Matrix], matrix_of: F) -> bool
where
    F: Fn(&Perm) -> GF2Matrix,
{
    for (i, g) in gens.iter().enumerate().take(3) {
        for (j, h) in gens.iter().enumerate().take(3) {
            if action[i].mul(&action[j]) != matrix_of(&g.then(h)) {
                return false;
            }
        }
    }
    true
}
