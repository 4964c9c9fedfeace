//! Euler points of torus orbits, Euler symmetry, and monomial fundamental
//! forms of polytopes inscribed in a rectangle.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::classgroup::{OrbitAnalysis, OrbitEquivalenceWitness};
use crate::error::{Error, Result};
use crate::fan::{admits_additive_action, all_cones, is_smooth_cone, require_complete, smooth_max_cones, Cone, Fan};
use crate::lattice::{coords_in_basis, dual_basis, pairing, IntVector};
use crate::polytope::{is_inscribed_in_rectangle, is_very_ample, lattice_points, LatticePolytope, RectangleWitness};

/// A finite set of exponent vectors `D(F) ⊂ Z^n_{≥0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSymbolSystem {
    pub n: usize,
    pub exponents: BTreeSet<IntVector>,
}

impl MonomialSymbolSystem {
    pub fn new(n: usize, exponents: impl IntoIterator<Item = IntVector>) -> Self {
        MonomialSymbolSystem {
            n,
            exponents: exponents.into_iter().collect(),
        }
    }

    pub fn from_i64(n: usize, exponents: &[&[i64]]) -> Self {
        Self::new(n, exponents.iter().map(|e| IntVector::from(*e)))
    }

    /// Exponents grouped by total degree.
    pub fn grading(&self) -> BTreeMap<BigInt, Vec<IntVector>> {
        let mut out: BTreeMap<BigInt, Vec<IntVector>> = BTreeMap::new();
        for e in &self.exponents {
            out.entry(total_degree(e)).or_default().push(e.clone());
        }
        out
    }

    pub fn degree(&self, k: i64) -> Vec<IntVector> {
        self.grading().remove(&BigInt::from(k)).unwrap_or_default()
    }
}

fn total_degree(e: &IntVector) -> BigInt {
    e.iter().sum()
}

/// `0`, the unit vectors, nonnegativity and closure under decrementing any
/// positive coordinate.
pub fn is_symbol_system(s: &MonomialSymbolSystem) -> bool {
    if s.n == 0 {
        return false;
    }
    if s.exponents.iter().any(|e| e.dim() != s.n || e.iter().any(Signed::is_negative)) {
        return false;
    }
    if !s.exponents.contains(&IntVector::zeros(s.n)) {
        return false;
    }
    if !(0..s.n).all(|i| s.exponents.contains(&IntVector::unit(s.n, i))) {
        return false;
    }
    s.exponents.iter().all(|e| {
        (0..s.n).filter(|&i| e[i].is_positive()).all(|i| {
            let mut c = e.coords().to_vec();
            c[i] -= 1;
            s.exponents.contains(&IntVector::new(c).expect("n > 0"))
        })
    })
}

fn checked(p: &LatticePolytope, w: &RectangleWitness) -> Result<()> {
    if w.verify(p) {
        Ok(())
    } else {
        Err(Error::InvalidWitness(format!(
            "vertex {} with edges {:?} is not a rectangle witness",
            w.v0,
            w.edge_basis.iter().map(ToString::to_string).collect::<Vec<_>>()
        )))
    }
}

/// `(P ∩ M) − v0` in edge-basis coordinates.
pub fn fundamental_form(p: &LatticePolytope, w: &RectangleWitness) -> Result<MonomialSymbolSystem> {
    checked(p, w)?;
    let exps = lattice_points(p)
        .iter()
        .map(|m| coords_in_basis(&w.edge_basis, &(m - &w.v0)))
        .collect::<Result<Vec<_>>>()?;
    Ok(MonomialSymbolSystem::new(p.dim(), exps))
}

/// A one-parameter subgroup acting with weight 1 on every edge direction
/// at `v0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerAction {
    pub lambda: IntVector,
    /// Lattice points of `P` in lexicographic order.
    pub points: Vec<IntVector>,
    pub ambient_weights: Vec<BigInt>,
}

pub fn euler_action(p: &LatticePolytope, w: &RectangleWitness) -> Result<EulerAction> {
    checked(p, w)?;
    let lambda = dual_basis(&w.edge_basis)?
        .iter()
        .fold(IntVector::zeros(p.dim()), |acc, d| &acc + d);
    let points = lattice_points(p);
    let ambient_weights = points
        .iter()
        .map(|m| pairing(&lambda, &(m - &w.v0)))
        .collect::<Result<_>>()?;
    Ok(EulerAction {
        lambda,
        points,
        ambient_weights,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRecord {
    pub cone: Cone,
    pub smooth: bool,
    /// `None` for non-smooth orbits.
    pub euler: Option<bool>,
    /// A smooth maximal cone in the same Aut(X)-orbit, with the witness.
    pub witness: Option<(Cone, OrbitEquivalenceWitness)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerOrbitReport {
    pub records: Vec<OrbitRecord>,
}

impl EulerOrbitReport {
    pub fn record(&self, cone: &Cone) -> Option<&OrbitRecord> {
        self.records.iter().find(|r| &r.cone == cone)
    }

    pub fn all_euler(&self) -> bool {
        self.records.iter().all(|r| r.euler == Some(true))
    }
}

/// Marks a smooth orbit Euler iff it is Aut(X)-equivalent to the orbit of
/// some smooth maximal cone.
pub fn classify_euler_orbits(f: &Fan, search_bound: usize) -> Result<EulerOrbitReport> {
    require_complete(f)?;
    let analysis = OrbitAnalysis::new(f, search_bound)?;
    classify_with(f, &analysis)
}

pub fn classify_with(f: &Fan, analysis: &OrbitAnalysis) -> Result<EulerOrbitReport> {
    let targets = smooth_max_cones(f);
    let mut records = Vec::new();
    for cone in all_cones(f)? {
        if !is_smooth_cone(f, &cone) {
            records.push(OrbitRecord {
                cone,
                smooth: false,
                euler: None,
                witness: None,
            });
            continue;
        }
        let mut witness = None;
        for t in &targets {
            if let Some(w) = analysis.equivalent(&cone, t)? {
                witness = Some((t.clone(), w));
                break;
            }
        }
        records.push(OrbitRecord {
            cone,
            smooth: true,
            euler: Some(witness.is_some()),
            witness,
        });
    }
    Ok(EulerOrbitReport { records })
}

#[derive(Clone, Copy, Debug)]
pub enum EulerInput<'a> {
    Fan(&'a Fan),
    /// Must be very ample.
    Polytope(&'a LatticePolytope),
}

/// Fan route: a complete collection of Demazure roots exists. Polytope
/// route: `P` is inscribed in a rectangle.
pub fn is_euler_symmetric(input: EulerInput<'_>) -> Result<bool> {
    match input {
        EulerInput::Fan(f) => Ok(admits_additive_action(f)?.is_some()),
        EulerInput::Polytope(p) => {
            if !is_very_ample(p) {
                return Err(Error::NotVeryAmple);
            }
            Ok(is_inscribed_in_rectangle(p).is_some())
        }
    }
}

/// Weight of `v0` is zero, weights of the unit exponents are one, all other
/// weights are positive.
pub fn weights_are_euler(action: &EulerAction, p: &LatticePolytope, w: &RectangleWitness) -> bool {
    let n = p.dim();
    action.points.iter().zip(&action.ambient_weights).all(|(m, wt)| {
        let d = m - &w.v0;
        if d.is_zero() {
            wt.is_zero()
        } else if w.edge_basis.contains(&d) || n == 0 {
            wt.is_one()
        } else {
            wt.is_positive()
        }
    })
}
