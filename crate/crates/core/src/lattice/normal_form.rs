//! Hermite and Smith normal forms.
//!
//! Conventions: the Hermite form is row-style (`U·A = H`), echelon with
//! positive pivots and the entries above each pivot reduced into
//! `[0, pivot)`. Smith invariant factors are positive and form a divisibility
//! chain; zero diagonal entries trail and are not listed as invariants.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// Row-style Hermite normal form: returns `(H, U)` with `U` unimodular and
/// `U·A = H`.
pub fn hnf(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let m = a.nrows();
    let n = a.ncols();
    let mut h = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut row = 0;
    for col in 0..n {
        if row == m {
            break;
        }
        loop {
            // smallest nonzero |entry| at or below `row` becomes the pivot
            let pivot = (row..m)
                .filter(|&i| !h[(i, col)].is_zero())
                .min_by(|&i, &j| h[(i, col)].abs().cmp(&h[(j, col)].abs()));
            let Some(p) = pivot else { break };
            h.swap_rows(row, p);
            u.swap_rows(row, p);
            let mut done = true;
            for i in row + 1..m {
                if h[(i, col)].is_zero() {
                    continue;
                }
                let q = h[(i, col)].div_floor(&h[(row, col)]);
                h.add_row_multiple(i, row, &-&q);
                u.add_row_multiple(i, row, &-&q);
                if !h[(i, col)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(row, col)].is_zero() {
            continue;
        }
        if h[(row, col)].is_negative() {
            h.negate_row(row);
            u.negate_row(row);
        }
        for i in 0..row {
            let q = h[(i, col)].div_floor(&h[(row, col)]);
            h.add_row_multiple(i, row, &-&q);
            u.add_row_multiple(i, row, &-&q);
        }
        row += 1;
    }
    (h, u)
}

/// True iff the row lattices of `a` and `b` coincide (compared through their
/// Hermite forms with zero rows dropped).
pub fn lattice_eq(a: &IntMatrix, b: &IntMatrix) -> bool {
    if a.ncols() != b.ncols() {
        return false;
    }
    let nonzero_rows = |m: &IntMatrix| -> Vec<Vec<BigInt>> {
        let (h, _) = hnf(m);
        (0..h.nrows())
            .map(|i| h.row(i).to_vec())
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .collect()
    };
    nonzero_rows(a) == nonzero_rows(b)
}

/// Smith decomposition `U·A·V = S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub s: IntMatrix,
    pub u: IntMatrix,
    /// `U^{-1}`, tracked alongside `U`.
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
    /// Nonzero diagonal entries of `S`, each dividing the next.
    pub invariants: Vec<BigInt>,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.invariants.len()
    }
}

struct SmithState {
    s: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
}

impl SmithState {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.s.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.s.swap_cols(a, b);
        self.v.swap_cols(a, b);
    }

    /// row[target] += k row[source]
    fn add_row(&mut self, target: usize, source: usize, k: &BigInt) {
        self.s.add_row_multiple(target, source, k);
        self.u.add_row_multiple(target, source, k);
        // (E U)^{-1} = U^{-1} E^{-1}: col[source] -= k col[target]
        self.u_inv.add_col_multiple(source, target, &-k);
    }

    fn add_col(&mut self, target: usize, source: usize, k: &BigInt) {
        self.s.add_col_multiple(target, source, k);
        self.v.add_col_multiple(target, source, k);
    }

    fn negate_row(&mut self, i: usize) {
        self.s.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }
}

/// Smith normal form with unimodular transforms.
pub fn snf(a: &IntMatrix) -> SmithDecomposition {
    let m = a.nrows();
    let n = a.ncols();
    let mut st = SmithState {
        s: a.clone(),
        u: IntMatrix::identity(m),
        u_inv: IntMatrix::identity(m),
        v: IntMatrix::identity(n),
    };
    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = min_nonzero(&st.s, t) else {
            break;
        };
        st.swap_rows(t, pi);
        st.swap_cols(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..m {
                if st.s[(i, t)].is_zero() {
                    continue;
                }
                let q = st.s[(i, t)].div_floor(&st.s[(t, t)]);
                st.add_row(i, t, &-&q);
                if !st.s[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if st.s[(t, j)].is_zero() {
                    continue;
                }
                let q = st.s[(t, j)].div_floor(&st.s[(t, t)]);
                st.add_col(j, t, &-&q);
                if !st.s[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                // pivot must divide the whole remaining block
                let bad = (t + 1..m).find(|&i| {
                    (t + 1..n).any(|j| !st.s[(i, j)].is_multiple_of(&st.s[(t, t)]))
                });
                match bad {
                    Some(i) => st.add_row(t, i, &BigInt::one()),
                    None => break,
                }
            }
            // move the smallest entry of row/column t back onto the diagonal
            let (pi, pj) = min_in_cross(&st.s, t);
            st.swap_rows(t, pi);
            st.swap_cols(t, pj);
        }
        if st.s[(t, t)].is_negative() {
            st.negate_row(t);
        }
        t += 1;
    }
    let invariants = (0..m.min(n))
        .map(|i| st.s[(i, i)].clone())
        .filter(|d| !d.is_zero())
        .collect();
    SmithDecomposition {
        s: st.s,
        u: st.u,
        u_inv: st.u_inv,
        v: st.v,
        invariants,
    }
}

fn min_nonzero(s: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..s.nrows() {
        for j in t..s.ncols() {
            if s[(i, j)].is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| s[(i, j)].abs() < s[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn min_in_cross(s: &IntMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let better = |cand: (usize, usize), cur: (usize, usize)| {
        !s[cand].is_zero() && (s[cur].is_zero() || s[cand].abs() < s[cur].abs())
    };
    for i in t..s.nrows() {
        if better((i, t), best) {
            best = (i, t);
        }
    }
    for j in t..s.ncols() {
        if better((t, j), best) {
            best = (t, j);
        }
    }
    best
}
