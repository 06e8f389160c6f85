//! Exact sparse linear algebra over the rationals.
//!
//! The workhorse is [`Subspace`], an incrementally built echelon basis of
//! the span of the vectors inserted so far. Each new vector is reduced
//! against the stored rows in insertion order and, if something survives,
//! a pivot is chosen among its nonzero entries. Stored rows always vanish
//! at the pivots of earlier rows, which is all the reduction needs, so any
//! pivot choice is correct; the choice only affects fill-in.
//!
//! Rank computations first split a matrix into the connected components of
//! its row/column incidence graph. The sign-flip symmetries of the
//! Lefschetz bivector make the delta matrices block diagonal, and the
//! split finds those blocks without being told about them.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::rational::{height, Rational};

/// Sparse vector: `(index, value)` pairs, strictly increasing indices, no
/// stored zeros.
pub type SparseVec = Vec<(usize, Rational)>;

/// Build a sparse vector from a dense slice.
pub fn sparse_from_dense(v: &[Rational]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn dense_from_sparse(v: &[(usize, Rational)], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// Sort by index, merge duplicates, drop zeros.
fn normalize(mut v: SparseVec) -> SparseVec {
    v.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some((j, y)) if *j == i => *y += x,
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

/// A sparse exact matrix stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, columns: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        let columns = (0..n).map(|i| vec![(i, Rational::one())]).collect();
        ExactMatrix { rows: n, cols: n, columns }
    }

    /// Columns may be unsorted and contain duplicates or zeros.
    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Result<Self> {
        let cols = columns.len();
        let mut out = Vec::with_capacity(cols);
        for c in columns {
            if let Some((i, _)) = c.iter().find(|(i, _)| *i >= rows) {
                return Err(AlgebraError::DimensionMismatch { left: *i, right: rows });
            }
            out.push(normalize(c));
        }
        Ok(ExactMatrix { rows, cols, columns: out })
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(AlgebraError::DimensionMismatch { left: bad.len(), right: c });
        }
        let mut columns = vec![Vec::new(); c];
        for (i, row) in rows.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    columns[j].push((i, x.clone()));
                }
            }
        }
        Ok(ExactMatrix { rows: r, cols: c, columns })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        let dense: Vec<Vec<Rational>> =
            rows.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect();
        Self::from_dense(&dense)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &[(usize, Rational)] {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        match self.columns[j].binary_search_by_key(&i, |(r, _)| *r) {
            Ok(pos) => self.columns[j][pos].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// `(row, col, value)` in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.columns.iter().enumerate().flat_map(|(j, c)| c.iter().map(move |(i, x)| (*i, j, x)))
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut columns = vec![Vec::new(); self.rows];
        for (i, j, x) in self.entries() {
            columns[i].push((j, x.clone()));
        }
        ExactMatrix { rows: self.cols, cols: self.rows, columns }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(AlgebraError::DimensionMismatch { left: self.cols, right: v.len() });
        }
        let mut out = vec![Rational::zero(); self.rows];
        for (j, c) in self.columns.iter().enumerate() {
            if v[j].is_zero() {
                continue;
            }
            for (i, x) in c {
                out[*i] += x * &v[j];
            }
        }
        Ok(out)
    }

    pub fn mul_sparse(&self, v: &[(usize, Rational)]) -> SparseVec {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (j, y) in v {
            for (i, x) in &self.columns[*j] {
                *acc.entry(*i).or_insert_with(Rational::zero) += x * y;
            }
        }
        acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(AlgebraError::DimensionMismatch { left: self.cols, right: other.rows });
        }
        let columns = other.columns.iter().map(|c| self.mul_sparse(c)).collect();
        Ok(ExactMatrix { rows: self.rows, cols: other.cols, columns })
    }

    /// Connected components of the bipartite row/column graph, as
    /// `(rows, cols)` index lists. Empty columns form singleton components
    /// with no rows; empty rows are omitted.
    pub fn components(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        // union-find over rows 0..r and columns r..r+c
        let n = self.rows + self.cols;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (j, c) in self.columns.iter().enumerate() {
            for (i, _) in c {
                let (a, b) = (find(&mut parent, *i), find(&mut parent, self.rows + j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: BTreeMap<usize, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
        let mut row_used = vec![false; self.rows];
        for c in &self.columns {
            for (i, _) in c {
                row_used[*i] = true;
            }
        }
        for (i, used) in row_used.iter().enumerate() {
            if *used {
                let root = find(&mut parent, i);
                groups.entry(root).or_default().0.push(i);
            }
        }
        for j in 0..self.cols {
            let root = find(&mut parent, self.rows + j);
            groups.entry(root).or_default().1.push(j);
        }
        groups.into_values().collect()
    }

    /// Rank, computed block by block.
    pub fn rank(&self) -> usize {
        let blocks: Vec<(Vec<usize>, Vec<usize>)> =
            self.components().into_iter().filter(|(r, _)| !r.is_empty()).collect();
        let rank_of = |(rows, cols): &(Vec<usize>, Vec<usize>)| -> usize {
            let local: BTreeMap<usize, usize> = rows.iter().enumerate().map(|(k, r)| (*r, k)).collect();
            let vectors: Vec<SparseVec> = cols
                .iter()
                .map(|j| self.columns[*j].iter().map(|(i, x)| (local[i], x.clone())).collect())
                .collect();
            rank_of_vectors(rows.len(), &vectors)
        };
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            blocks.par_iter().map(rank_of).sum()
        }
        #[cfg(not(feature = "parallel"))]
        {
            blocks.iter().map(rank_of).sum()
        }
    }

    /// Rank together with a basis of the right kernel.
    pub fn rank_kernel(&self) -> (usize, Vec<Vec<Rational>>) {
        let mut space = Subspace::with_certificates(self.rows);
        let mut kernel = Vec::new();
        for (j, c) in self.columns.iter().enumerate() {
            match space.insert_or_relation(c) {
                None => {}
                Some(relation) => {
                    // c_j = sum relation_g c_g, so e_j - relation is in the kernel
                    let mut v = vec![Rational::zero(); self.cols];
                    v[j] = Rational::one();
                    for (g, x) in relation {
                        v[g] -= x;
                    }
                    kernel.push(v);
                }
            }
        }
        (space.rank(), kernel)
    }

    pub fn column_space(&self) -> Subspace {
        let mut s = Subspace::new(self.rows);
        for c in &self.columns {
            s.insert(c);
        }
        s
    }
}

/// Rank of a list of sparse vectors of length `dim`, inserting sparse
/// vectors first and preferring pivots in rarely used coordinates.
pub fn rank_of_vectors(dim: usize, vectors: &[SparseVec]) -> usize {
    span_of(dim, vectors).rank()
}

/// Span of `vectors` built with the ordering heuristics of
/// [`rank_of_vectors`]. Generator numbering follows the insertion order,
/// so the result is not meant for certificates.
pub fn span_of(dim: usize, vectors: &[SparseVec]) -> Subspace {
    let mut usage = vec![0u32; dim];
    for v in vectors {
        for (i, _) in v {
            usage[*i] += 1;
        }
    }
    let mut order: Vec<usize> = (0..vectors.len()).collect();
    order.sort_by_key(|&k| (vectors[k].len(), k));
    let mut s = Subspace::new(dim).with_priority(usage);
    for k in order {
        if s.rank() == dim {
            break;
        }
        s.insert(&vectors[k]);
    }
    s
}

#[derive(Clone, Debug)]
struct Row {
    pivot: usize,
    // pivot entry is one
    entries: SparseVec,
    // coefficients on the inserted generators
    combo: SparseVec,
}

/// Echelon basis of a growing subspace of `Q^dim`.
#[derive(Clone, Debug)]
pub struct Subspace {
    dim: usize,
    rows: Vec<Row>,
    pivot_row: BTreeMap<usize, usize>,
    track: bool,
    generators: usize,
    priority: Option<Vec<u32>>,
}

impl Subspace {
    pub fn new(dim: usize) -> Self {
        Subspace { dim, rows: Vec::new(), pivot_row: BTreeMap::new(), track: false, generators: 0, priority: None }
    }

    /// Also keep, for every stored row, its expression in the inserted
    /// vectors; needed for [`Subspace::coordinates`].
    pub fn with_certificates(dim: usize) -> Self {
        Subspace { track: true, ..Self::new(dim) }
    }

    /// Lower numbers are preferred as pivot coordinates.
    pub fn with_priority(mut self, priority: Vec<u32>) -> Self {
        self.priority = Some(priority);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Number of vectors inserted so far, independent or not.
    pub fn generators(&self) -> usize {
        self.generators
    }

    /// Reduce `v` against the stored rows. Returns the remainder and, when
    /// tracking, the combination `c` with `v = remainder + sum c_g gen_g`.
    fn reduce(&self, v: &[(usize, Rational)]) -> (SparseVec, SparseVec) {
        let mut acc: BTreeMap<usize, Rational> = v.iter().filter(|(_, x)| !x.is_zero()).cloned().collect();
        let mut combo: BTreeMap<usize, Rational> = BTreeMap::new();
        let mut pending: BTreeSet<usize> = acc.keys().filter_map(|c| self.pivot_row.get(c).copied()).collect();
        while let Some(r) = pending.pop_first() {
            let row = &self.rows[r];
            let factor = match acc.get(&row.pivot) {
                Some(x) => x.clone(),
                None => continue,
            };
            for (c, x) in &row.entries {
                let entry = acc.entry(*c).or_insert_with(Rational::zero);
                let was_zero = entry.is_zero();
                *entry -= x * &factor;
                if entry.is_zero() {
                    acc.remove(c);
                } else if was_zero {
                    if let Some(&r2) = self.pivot_row.get(c) {
                        if r2 > r {
                            pending.insert(r2);
                        }
                    }
                }
            }
            if self.track {
                for (g, x) in &row.combo {
                    let e = combo.entry(*g).or_insert_with(Rational::zero);
                    *e += x * &factor;
                    if e.is_zero() {
                        combo.remove(g);
                    }
                }
            }
        }
        (acc.into_iter().collect(), combo.into_iter().collect())
    }

    fn choose_pivot(&self, v: &[(usize, Rational)]) -> usize {
        let key = |(c, x): &(usize, Rational)| {
            let p = self.priority.as_ref().map_or(0, |p| p[*c]);
            (p, height(x), *c)
        };
        v.iter().min_by_key(|e| key(e)).map(|(c, _)| *c).expect("nonzero vector")
    }

    fn push_row(&mut self, rem: SparseVec, combo: SparseVec, generator: usize) {
        let pivot = self.choose_pivot(&rem);
        let inv = Rational::one() / &rem.iter().find(|(c, _)| *c == pivot).expect("pivot present").1;
        let entries: SparseVec = rem.into_iter().map(|(c, x)| (c, x * &inv)).collect();
        let combo = if self.track {
            // rem = gen - sum combo_g gen_g
            let mut m: BTreeMap<usize, Rational> = combo.into_iter().map(|(g, x)| (g, -x * &inv)).collect();
            *m.entry(generator).or_insert_with(Rational::zero) += &inv;
            m.into_iter().filter(|(_, x)| !x.is_zero()).collect()
        } else {
            Vec::new()
        };
        self.pivot_row.insert(pivot, self.rows.len());
        self.rows.push(Row { pivot, entries, combo });
    }

    /// Insert a vector; returns whether the rank grew.
    pub fn insert(&mut self, v: &[(usize, Rational)]) -> bool {
        self.insert_or_relation(v).is_none()
    }

    /// Insert a vector. If it is dependent, returns its coordinates in the
    /// previously inserted vectors (only meaningful when tracking).
    pub fn insert_or_relation(&mut self, v: &[(usize, Rational)]) -> Option<SparseVec> {
        let generator = self.generators;
        self.generators += 1;
        let (rem, combo) = self.reduce(v);
        if rem.is_empty() {
            return Some(combo);
        }
        self.push_row(rem, combo, generator);
        None
    }

    pub fn contains(&self, v: &[(usize, Rational)]) -> bool {
        self.reduce(v).0.is_empty()
    }

    /// Coordinates of `v` in the inserted vectors, if `v` lies in the span.
    /// Requires [`Subspace::with_certificates`].
    pub fn coordinates(&self, v: &[(usize, Rational)]) -> Option<SparseVec> {
        let (rem, combo) = self.reduce(v);
        rem.is_empty().then_some(combo)
    }

    pub fn is_tracking(&self) -> bool {
        self.track
    }

    /// Switch certificate tracking on for vectors inserted from now on.
    /// Rows already present carry no certificate, so later coordinates are
    /// only determined modulo their span. Returns the generator index of
    /// the next insertion.
    pub fn start_tracking(&mut self) -> usize {
        self.track = true;
        self.generators
    }

    /// Rank increase obtained by adjoining `extra` to this subspace.
    pub fn rank_increase(&self, extra: &[SparseVec]) -> usize {
        let mut s = self.clone();
        s.track = false;
        let before = s.rank();
        for v in extra {
            s.insert(v);
        }
        s.rank() - before
    }
}

/// Coordinates of `v` in the span of `span`, if it lies there.
pub fn membership(v: &[Rational], span: &[Vec<Rational>]) -> Result<Option<Vec<Rational>>> {
    let n = v.len();
    let mut s = Subspace::with_certificates(n);
    for u in span {
        if u.len() != n {
            return Err(AlgebraError::DimensionMismatch { left: u.len(), right: n });
        }
        s.insert(&sparse_from_dense(u));
    }
    Ok(s.coordinates(&sparse_from_dense(v)).map(|c| dense_from_sparse(&c, span.len())))
}

/// `dim span(ambient) - dim span(sub)`, after checking containment.
pub fn quotient_dim(ambient: &[Vec<Rational>], sub: &[Vec<Rational>]) -> Result<usize> {
    let n = ambient.first().or(sub.first()).map_or(0, Vec::len);
    let mut a = Subspace::new(n);
    for u in ambient {
        if u.len() != n {
            return Err(AlgebraError::DimensionMismatch { left: u.len(), right: n });
        }
        a.insert(&sparse_from_dense(u));
    }
    let mut b = Subspace::new(n);
    for u in sub {
        if u.len() != n {
            return Err(AlgebraError::DimensionMismatch { left: u.len(), right: n });
        }
        let s = sparse_from_dense(u);
        if !a.contains(&s) {
            return Err(AlgebraError::NotContained);
        }
        b.insert(&s);
    }
    Ok(a.rank() - b.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn identity_has_full_rank() {
        let (r, k) = ExactMatrix::identity(3).rank_kernel();
        assert_eq!((r, k.len()), (3, 0));
        assert_eq!(ExactMatrix::identity(3).rank(), 3);
    }

    #[test]
    fn zero_matrix_kernel() {
        let (r, k) = ExactMatrix::zeros(2, 5).rank_kernel();
        assert_eq!((r, k.len()), (0, 5));
    }

    #[test]
    fn two_by_two() {
        let m = ExactMatrix::from_int_rows(&[&[1, 2], &[2, 4]]).unwrap();
        let (r, k) = m.rank_kernel();
        assert_eq!(r, 1);
        assert_eq!(k.len(), 1);
        // proportional to (2, -1)
        assert_eq!(&k[0][0] * int(-1), &k[0][1] * int(2));
        assert!(m.mul_vec(&k[0]).unwrap().iter().all(Zero::is_zero));
    }

    #[test]
    fn membership_examples() {
        let span = [ints(&[1, 0]), ints(&[0, 1])];
        assert_eq!(membership(&ints(&[0, 0]), &span).unwrap(), Some(ints(&[0, 0])));
        assert_eq!(membership(&ints(&[1, 1]), &span).unwrap(), Some(ints(&[1, 1])));
        let span = [ints(&[1, 0, 0]), ints(&[0, 1, 0])];
        assert_eq!(membership(&ints(&[1, 2, 3]), &span).unwrap(), None);
    }

    #[test]
    fn quotient_examples() {
        let e: Vec<Vec<Rational>> = (0..4).map(|i| (0..4).map(|j| int((i == j) as i64)).collect()).collect();
        assert_eq!(quotient_dim(&e, &[]).unwrap(), 4);
        assert_eq!(quotient_dim(&e, &[ints(&[1, 1, 0, 0]), ints(&[0, 0, 1, 0])]).unwrap(), 2);
        let amb = [ints(&[1, 0]), ints(&[0, 1]), ints(&[1, 1])];
        assert_eq!(quotient_dim(&amb, &[ints(&[1, 1])]).unwrap(), 1);
        assert_eq!(quotient_dim(&[ints(&[1, 0])], &[ints(&[0, 1])]), Err(AlgebraError::NotContained));
    }

    #[test]
    fn block_split() {
        let m = ExactMatrix::from_int_rows(&[&[1, 0, 0], &[0, 2, 3], &[0, 4, 6], &[0, 0, 0]]).unwrap();
        let comps = m.components();
        assert_eq!(comps, vec![(vec![0], vec![0]), (vec![1, 2], vec![1, 2])]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn tracking_after_a_fixed_part() {
        let mut s = Subspace::new(3);
        s.insert(&sparse_from_dense(&ints(&[1, 0, 0])));
        let base = s.start_tracking();
        s.insert(&sparse_from_dense(&ints(&[1, 1, 0])));
        // (5, 2, 0) = 2 (1, 1, 0) + 3 (1, 0, 0)
        let c = s.coordinates(&sparse_from_dense(&ints(&[5, 2, 0]))).unwrap();
        assert_eq!(c, vec![(base, int(2))]);
        assert!(s.coordinates(&sparse_from_dense(&ints(&[0, 0, 1]))).is_none());
    }

    #[test]
    fn dependent_columns_report_relations() {
        let mut s = Subspace::with_certificates(3);
        assert!(s.insert(&sparse_from_dense(&ints(&[1, 1, 0]))));
        assert!(s.insert(&sparse_from_dense(&ints(&[0, 1, 1]))));
        let rel = s.insert_or_relation(&sparse_from_dense(&ints(&[1, 2, 1]))).unwrap();
        assert_eq!(rel, vec![(0, int(1)), (1, int(1))]);
        assert_eq!(s.generators(), 3);
    }

    fn matrix() -> impl Strategy<Value = ExactMatrix> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(prop_oneof![3 => Just(0i64), 2 => -4i64..=4], c), r)
                .prop_map(|rows| {
                    let dense: Vec<Vec<Rational>> = rows.iter().map(|r| ints(r)).collect();
                    ExactMatrix::from_dense(&dense).unwrap()
                })
        })
    }

    /// Dense fraction-free oracle.
    fn bareiss_rank(m: &ExactMatrix) -> usize {
        let mut a: Vec<Vec<Rational>> =
            (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j)).collect()).collect();
        let mut rank = 0;
        for col in 0..m.cols() {
            let Some(p) = (rank..a.len()).find(|&i| !a[i][col].is_zero()) else { continue };
            a.swap(rank, p);
            for i in 0..a.len() {
                if i != rank && !a[i][col].is_zero() {
                    let f = &a[i][col] / &a[rank][col];
                    for j in 0..m.cols() {
                        let t = &a[rank][j] * &f;
                        a[i][j] -= t;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    proptest! {
        #[test]
        fn rank_matches_dense_oracle(m in matrix()) {
            prop_assert_eq!(m.rank(), bareiss_rank(&m));
        }

        #[test]
        fn rank_of_transpose(m in matrix()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn kernel_is_exact(m in matrix()) {
            let (r, k) = m.rank_kernel();
            prop_assert_eq!(r + k.len(), m.cols());
            for v in &k {
                prop_assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
            }
            let km = ExactMatrix::from_dense(&k.iter().map(|v| v.clone()).collect::<Vec<_>>());
            if let Ok(km) = km {
                prop_assert_eq!(km.rank(), k.len());
            }
        }

        #[test]
        fn permuted_rows_same_rank_and_kernel(m in matrix(), seed in any::<u64>()) {
            let mut perm: Vec<usize> = (0..m.rows()).collect();
            let mut s = seed;
            for i in (1..perm.len()).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            let cols: Vec<SparseVec> = m.columns().iter().map(|c| c.iter().map(|(i, x)| (perm[*i], x.clone())).collect()).collect();
            let p = ExactMatrix::from_columns(m.rows(), cols).unwrap();
            let (r1, k1) = m.rank_kernel();
            let (r2, k2) = p.rank_kernel();
            prop_assert_eq!(r1, r2);
            for v in &k2 {
                prop_assert!(membership(v, &k1).unwrap().is_some());
            }
            for v in &k1 {
                prop_assert!(membership(v, &k2).unwrap().is_some());
            }
        }

        #[test]
        fn membership_certificates_reconstruct(m in matrix(), coeffs in proptest::collection::vec(-3i64..=3, 6)) {
            let span: Vec<Vec<Rational>> = (0..m.cols()).map(|j| (0..m.rows()).map(|i| m.get(i, j)).collect()).collect();
            let c: Vec<Rational> = coeffs.iter().take(m.cols()).map(|&x| int(x)).chain(core::iter::repeat(int(0))).take(m.cols()).collect();
            let v = m.mul_vec(&c).unwrap();
            let found = membership(&v, &span).unwrap().expect("in span by construction");
            prop_assert_eq!(m.mul_vec(&found).unwrap(), v);
        }
    }
}
