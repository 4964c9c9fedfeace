//! Exact integer linear algebra over `Z^n`.
//!
//! Everything here works with arbitrary-precision integers: Hermite and Smith
//! normal forms can blow up intermediate entries well past machine words even
//! for tiny inputs.

mod monoid_search;
mod normal_form;

pub use monoid_search::{nonneg_combination, Membership, MixedLattice};
pub use normal_form::{hnf, lattice_eq, snf, SmithDecomposition};

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A lattice vector with arbitrary-precision coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVector(Vec<BigInt>);

impl IntVector {
    pub fn new(coords: Vec<BigInt>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Empty);
        }
        Ok(IntVector(coords))
    }

    pub fn zeros(dim: usize) -> Self {
        assert!(dim > 0, "lattice vectors have positive dimension");
        IntVector(vec![BigInt::zero(); dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = BigInt::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BigInt> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Gcd of the coordinates (zero for the zero vector).
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    pub fn scale(&self, k: &BigInt) -> IntVector {
        IntVector(self.0.iter().map(|x| x * k).collect())
    }

    /// Coordinates as `i64`, if they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.0.iter().map(|x| x.to_i64()).collect()
    }
}

impl From<Vec<i64>> for IntVector {
    fn from(v: Vec<i64>) -> Self {
        assert!(!v.is_empty(), "lattice vectors have positive dimension");
        IntVector(v.into_iter().map(BigInt::from).collect())
    }
}

impl From<&[i64]> for IntVector {
    fn from(v: &[i64]) -> Self {
        IntVector::from(v.to_vec())
    }
}

impl<const N: usize> From<[i64; N]> for IntVector {
    fn from(v: [i64; N]) -> Self {
        IntVector::from(v.to_vec())
    }
}

impl Index<usize> for IntVector {
    type Output = BigInt;
    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl<'a> Add<&'a IntVector> for &'a IntVector {
    type Output = IntVector;
    fn add(self, rhs: &IntVector) -> IntVector {
        assert_eq!(self.dim(), rhs.dim());
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub<&'a IntVector> for &'a IntVector {
    type Output = IntVector;
    fn sub(self, rhs: &IntVector) -> IntVector {
        assert_eq!(self.dim(), rhs.dim());
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &IntVector {
    type Output = IntVector;
    fn neg(self) -> IntVector {
        IntVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// The primitive lattice vector on the ray through `v`.
pub fn primitive(v: &IntVector) -> Result<IntVector> {
    let g = v.content();
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(IntVector(v.0.iter().map(|x| x / &g).collect()))
}

/// The standard pairing between `N` and `M`.
pub fn pairing(p: &IntVector, m: &IntVector) -> Result<BigInt> {
    if p.dim() != m.dim() {
        return Err(Error::DimMismatch {
            expected: p.dim(),
            found: m.dim(),
        });
    }
    Ok(dot(p.coords(), m.coords()))
}

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    nrows: usize,
    ncols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        IntMatrix {
            nrows,
            ncols,
            entries: vec![BigInt::zero(); nrows * ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[IntVector]) -> Result<Self> {
        let first = rows.first().ok_or(Error::Empty)?;
        let ncols = first.dim();
        let mut entries = Vec::with_capacity(rows.len() * ncols);
        for r in rows {
            if r.dim() != ncols {
                return Err(Error::DimMismatch {
                    expected: ncols,
                    found: r.dim(),
                });
            }
            entries.extend(r.iter().cloned());
        }
        Ok(IntMatrix {
            nrows: rows.len(),
            ncols,
            entries,
        })
    }

    pub fn from_i64(nrows: usize, ncols: usize, data: &[i64]) -> Self {
        assert_eq!(data.len(), nrows * ncols);
        IntMatrix {
            nrows,
            ncols,
            entries: data.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.nrows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.ncols, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.ncols);
        (0..self.nrows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.ncols {
            self.entries.swap(a * self.ncols + j, b * self.ncols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.nrows {
            self.entries.swap(i * self.ncols + a, i * self.ncols + b);
        }
    }

    /// row[target] += k * row[source]
    pub(crate) fn add_row_multiple(&mut self, target: usize, source: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.ncols {
            let delta = &self[(source, j)] * k;
            self[(target, j)] += delta;
        }
    }

    /// col[target] += k * col[source]
    pub(crate) fn add_col_multiple(&mut self, target: usize, source: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.nrows {
            let delta = &self[(i, source)] * k;
            self[(i, target)] += delta;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.ncols {
            let x = -&self[(i, j)];
            self[(i, j)] = x;
        }
    }

    pub(crate) fn negate_col(&mut self, j: usize) {
        for i in 0..self.nrows {
            let x = -&self[(i, j)];
            self[(i, j)] = x;
        }
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn det(&self) -> Result<BigInt> {
        if self.nrows != self.ncols {
            return Err(Error::DimMismatch {
                expected: self.nrows,
                found: self.ncols,
            });
        }
        let n = self.nrows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        Ok(sign * &a[(n - 1, n - 1)])
    }

    pub fn rank(&self) -> usize {
        let (h, _) = hnf(self);
        (0..h.nrows())
            .filter(|&i| h.row(i).iter().any(|x| !x.is_zero()))
            .count()
    }

    /// Inverse of a matrix with determinant ±1.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix> {
        let d = self.det()?;
        if d.abs() != BigInt::one() {
            return Err(Error::NotABasis);
        }
        let n = self.nrows;
        let mut inv = IntMatrix::zeros(n, n);
        if n == 1 {
            inv[(0, 0)] = d;
            return Ok(inv);
        }
        for i in 0..n {
            for j in 0..n {
                let minor = self.minor(i, j);
                let mut c = minor.det()?;
                if (i + j) % 2 == 1 {
                    c = -c;
                }
                // adj = cofactor^T, inverse = adj / det = adj * det for det = ±1
                inv[(j, i)] = c * &d;
            }
        }
        Ok(inv)
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.nrows - 1, self.ncols - 1);
        for (ii, i) in (0..self.nrows).filter(|&i| i != skip_row).enumerate() {
            for (jj, j) in (0..self.ncols).filter(|&j| j != skip_col).enumerate() {
                m[(ii, jj)] = self[(i, j)].clone();
            }
        }
        m
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.ncols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.ncols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.ncols, rhs.nrows);
        let mut out = IntMatrix::zeros(self.nrows, rhs.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.ncols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        out
    }
}

fn check_square_basis(basis: &[IntVector]) -> Result<IntMatrix> {
    let m = IntMatrix::from_rows(basis)?;
    if m.nrows() != m.ncols() || m.det()?.abs() != BigInt::one() {
        return Err(Error::NotABasis);
    }
    Ok(m)
}

/// True iff `vs` consists of exactly `dim` vectors with determinant ±1.
pub fn is_lattice_basis(vs: &[IntVector]) -> bool {
    check_square_basis(vs).is_ok()
}

/// Integer coordinates of `v` in a lattice basis.
pub fn coords_in_basis(basis: &[IntVector], v: &IntVector) -> Result<IntVector> {
    let b = check_square_basis(basis)?;
    if v.dim() != b.ncols() {
        return Err(Error::DimMismatch {
            expected: b.ncols(),
            found: v.dim(),
        });
    }
    // v = c^T B  =>  c = (B^T)^{-1} v
    let inv = b.transpose().inverse_unimodular()?;
    IntVector::new(inv.mul_vec(v.coords()))
}

/// The basis `m_1..m_n` of the dual lattice with `<basis_i, m_j> = delta_ij`.
pub fn dual_basis(basis: &[IntVector]) -> Result<Vec<IntVector>> {
    let b = check_square_basis(basis)?;
    let inv = b.inverse_unimodular()?;
    (0..inv.ncols()).map(|j| IntVector::new(inv.col(j))).collect()
}

/// A nonzero integer vector orthogonal to `dim - 1` vectors (generalized cross
/// product). Zero when the vectors are linearly dependent.
pub fn orthogonal_vector(vs: &[IntVector], dim: usize) -> IntVector {
    assert_eq!(vs.len() + 1, dim);
    if dim == 1 {
        return IntVector::from(vec![1]);
    }
    let m = IntMatrix::from_rows(vs).expect("non-empty");
    let coords = (0..dim)
        .map(|j| {
            let mut minor = IntMatrix::zeros(dim - 1, dim - 1);
            for i in 0..dim - 1 {
                for (jj, c) in (0..dim).filter(|&c| c != j).enumerate() {
                    minor[(i, jj)] = m[(i, c)].clone();
                }
            }
            let d = minor.det().expect("square");
            if j % 2 == 1 {
                -d
            } else {
                d
            }
        })
        .collect();
    IntVector(coords)
}

/// Solve the square system `a x = b` over the rationals.
pub fn solve_rational(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigRational>> {
    let n = a.nrows();
    assert_eq!(n, a.ncols());
    assert_eq!(n, b.len());
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> =
                a.row(i).iter().map(|x| BigRational::from(x.clone())).collect();
            row.push(BigRational::from(b[i].clone()));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, piv);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x /= &p;
        }
        for i in 0..n {
            if i != col && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                let pivot = m[col].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot).skip(col) {
                    *x -= &f * p;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Facets of the cone spanned by nonzero vectors, computed in a coordinate
/// projection on which their span keeps full rank.
struct ConeFacets {
    coords: Vec<usize>,
    rank: usize,
    /// Primitive inner normals in projected coordinates.
    normals: Vec<IntVector>,
}

fn cone_facets(gens: &[&IntVector], dim: usize) -> Option<ConeFacets> {
    let full = IntMatrix::from_rows(&gens.iter().map(|g| (*g).clone()).collect::<Vec<_>>()).ok()?;
    let d = full.rank();
    let coords = combinations(dim, d).find(|cols| {
        let rows: Vec<IntVector> = gens.iter().map(|g| project(g, cols)).collect();
        IntMatrix::from_rows(&rows).map(|m| m.rank() == d).unwrap_or(false)
    })?;
    let projected: Vec<IntVector> = gens.iter().map(|g| project(g, &coords)).collect();
    let mut normals: Vec<IntVector> = Vec::new();
    for subset in combinations(projected.len(), d - 1) {
        let vs: Vec<IntVector> = subset.iter().map(|&i| projected[i].clone()).collect();
        let nv = orthogonal_vector(&vs, d);
        if nv.is_zero() {
            continue;
        }
        let nv = primitive(&nv).ok()?;
        let signs: Vec<BigInt> = projected.iter().map(|g| dot(nv.coords(), g.coords())).collect();
        let candidate = if signs.iter().all(|s| !s.is_negative()) {
            nv
        } else if signs.iter().all(|s| !s.is_positive()) {
            -&nv
        } else {
            continue;
        };
        if !normals.contains(&candidate) {
            normals.push(candidate);
        }
    }
    Some(ConeFacets {
        coords,
        rank: d,
        normals,
    })
}

/// Returns an integer functional that is strictly positive on every nonzero
/// vector of `gens`, or `None` when the cone they span is not pointed.
///
/// Works in a coordinate projection on which the span of `gens` is
/// full-dimensional and sums the primitive facet normals there.
pub fn pointed_functional(gens: &[IntVector], dim: usize) -> Option<IntVector> {
    let gens: Vec<&IntVector> = gens.iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return Some(IntVector::zeros(dim));
    }
    let facets = cone_facets(&gens, dim)?;
    let mut w = vec![BigInt::zero(); facets.rank];
    for nv in &facets.normals {
        for (wi, x) in w.iter_mut().zip(nv.iter()) {
            *wi += x;
        }
    }
    if gens
        .iter()
        .any(|g| !dot(&w, project(g, &facets.coords).coords()).is_positive())
    {
        return None;
    }
    let mut lifted = vec![BigInt::zero(); dim];
    for (k, &c) in facets.coords.iter().enumerate() {
        lifted[c] = w[k].clone();
    }
    Some(IntVector(lifted))
}

/// Whether `x` is a nonnegative rational combination of `gens`.
pub fn in_rational_cone(gens: &[IntVector], x: &IntVector) -> bool {
    if x.is_zero() {
        return true;
    }
    let nonzero: Vec<&IntVector> = gens.iter().filter(|g| !g.is_zero()).collect();
    if nonzero.is_empty() {
        return false;
    }
    let Some(facets) = cone_facets(&nonzero, x.dim()) else {
        return false;
    };
    let mut with_x: Vec<IntVector> = nonzero.iter().map(|g| (*g).clone()).collect();
    with_x.push(x.clone());
    if IntMatrix::from_rows(&with_x).map(|m| m.rank()).unwrap_or(0) != facets.rank {
        return false;
    }
    let px = project(x, &facets.coords);
    facets
        .normals
        .iter()
        .all(|n| !dot(n.coords(), px.coords()).is_negative())
}

fn project(v: &IntVector, cols: &[usize]) -> IntVector {
    IntVector(cols.iter().map(|&c| v[c].clone()).collect())
}

/// Increasing `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = if k <= n { Some((0..k).collect()) } else { None };
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                current = None;
                break;
            }
            i -= 1;
            if next[i] < n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                current = Some(next);
                break;
            }
        }
        Some(out)
    })
}
