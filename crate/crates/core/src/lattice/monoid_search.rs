//! Membership in finitely generated submonoids of `Z^k ⊕ Z/d_1 ⊕ … ⊕ Z/d_t`.
//!
//! Decided by depth-first search over nonnegative coefficient vectors. When
//! the free parts of the generators span a pointed cone, a strictly positive
//! integer functional bounds every coefficient and the search always
//! terminates with a definite answer. Otherwise the caller supplies a cap on
//! the total coefficient sum and an exhausted search is reported as such.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{dot, in_rational_cone, pointed_functional, IntVector};

/// Ambient group `Z^free_rank ⊕ ⊕_j Z/moduli[j]`. Elements are flat vectors:
/// free coordinates first, then torsion residues.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedLattice {
    pub free_rank: usize,
    pub moduli: Vec<BigInt>,
}

impl MixedLattice {
    pub fn free(rank: usize) -> Self {
        MixedLattice {
            free_rank: rank,
            moduli: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.free_rank + self.moduli.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn reduce(&self, x: &mut [BigInt]) {
        for (j, d) in self.moduli.iter().enumerate() {
            let idx = self.free_rank + j;
            x[idx] = x[idx].mod_floor(d);
        }
    }

    fn is_zero(&self, x: &[BigInt]) -> bool {
        x.iter().all(Zero::is_zero)
    }

    /// Additive order of the torsion part of `x` (1 if trivial).
    fn torsion_order(&self, x: &[BigInt]) -> BigInt {
        self.moduli
            .iter()
            .enumerate()
            .fold(BigInt::one(), |acc, (j, d)| {
                let r = &x[self.free_rank + j];
                acc.lcm(&(d / r.gcd(d)))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    /// Nonnegative coefficients, one per generator.
    Member(Vec<BigInt>),
    NotMember,
    /// The cone is not pointed and the coefficient-sum cap ran out.
    Inconclusive,
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member(_))
    }
}

struct Search<'a> {
    space: &'a MixedLattice,
    gens: Vec<Vec<BigInt>>,
    order: Vec<usize>,
    // per generator: weight under the positive functional (pointed mode)
    weights: Vec<BigInt>,
    // per generator: max coefficient for weight-zero generators
    caps: Vec<BigInt>,
    functional: Option<Vec<BigInt>>,
    sum_cap: usize,
    hit_cap: bool,
    failed: HashSet<(usize, Vec<BigInt>, usize)>,
    coeffs: Vec<BigInt>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize, rest: Vec<BigInt>, used: usize) -> bool {
        if self.space.is_zero(&rest) {
            return true;
        }
        if pos == self.order.len() {
            return false;
        }
        let used_key = if self.functional.is_some() { 0 } else { used };
        let key = (pos, rest.clone(), used_key);
        if self.failed.contains(&key) {
            return false;
        }
        let gi = self.order[pos];
        let max_c: BigInt = match &self.functional {
            Some(w) => {
                if self.weights[gi].is_positive() {
                    let budget = dot(w, &rest[..self.space.free_rank]);
                    if budget.is_negative() {
                        self.failed.insert(key);
                        return false;
                    }
                    budget / &self.weights[gi]
                } else {
                    &self.caps[gi] - 1
                }
            }
            None => BigInt::from(self.sum_cap - used),
        };
        let max_c_usize = max_c.to_usize().unwrap_or(usize::MAX);
        let mut cur = rest;
        let mut c = 0usize;
        loop {
            self.coeffs[gi] = BigInt::from(c);
            if self.run(pos + 1, cur.clone(), used + c) {
                return true;
            }
            if c >= max_c_usize {
                if self.functional.is_none() && used + c >= self.sum_cap {
                    self.hit_cap = true;
                }
                break;
            }
            c += 1;
            for (x, g) in cur.iter_mut().zip(&self.gens[gi]) {
                *x -= g;
            }
            self.space.reduce(&mut cur);
        }
        self.coeffs[gi] = BigInt::zero();
        self.failed.insert(key);
        false
    }
}

/// Looks for nonnegative integers `c_i` with `Σ c_i·gens[i] = target` in
/// `space`. `sum_cap` bounds the coefficient sum only when the generators'
/// free parts do not span a pointed cone.
pub fn nonneg_combination(
    space: &MixedLattice,
    gens: &[Vec<BigInt>],
    target: &[BigInt],
    sum_cap: usize,
) -> Membership {
    let k = space.free_rank;
    let mut gens: Vec<Vec<BigInt>> = gens.to_vec();
    for g in gens.iter_mut() {
        assert_eq!(g.len(), space.len());
        space.reduce(g);
    }
    let mut rest = target.to_vec();
    assert_eq!(rest.len(), space.len());
    space.reduce(&mut rest);

    let functional: Option<Vec<BigInt>> = if k == 0 {
        Some(Vec::new())
    } else {
        let free_parts: Vec<IntVector> = gens
            .iter()
            .map(|g| IntVector(g[..k].to_vec()))
            .collect();
        // cheap rational obstruction before the lattice search
        if !in_rational_cone(&free_parts, &IntVector(rest[..k].to_vec())) {
            return Membership::NotMember;
        }
        pointed_functional(&free_parts, k).map(IntVector::into_coords)
    };
    let weights: Vec<BigInt> = gens
        .iter()
        .map(|g| match &functional {
            Some(w) => dot(w, &g[..k]),
            None => BigInt::zero(),
        })
        .collect();
    let caps: Vec<BigInt> = gens.iter().map(|g| space.torsion_order(g)).collect();

    // weight-zero (torsion) generators first, then heavier generators first
    let mut order: Vec<usize> = (0..gens.len()).filter(|&i| !space.is_zero(&gens[i])).collect();
    order.sort_by(|&a, &b| {
        let za = weights[a].is_zero();
        let zb = weights[b].is_zero();
        zb.cmp(&za).then_with(|| weights[b].cmp(&weights[a])).then(a.cmp(&b))
    });

    let mut search = Search {
        space,
        coeffs: vec![BigInt::zero(); gens.len()],
        gens,
        order,
        weights,
        caps,
        functional,
        sum_cap,
        hit_cap: false,
        failed: HashSet::new(),
    };
    if search.run(0, rest, 0) {
        Membership::Member(search.coeffs)
    } else if search.hit_cap {
        Membership::Inconclusive
    } else {
        Membership::NotMember
    }
}
