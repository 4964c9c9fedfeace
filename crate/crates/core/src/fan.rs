//! Fans, Demazure roots and complete collections.
//!
//! A fan is stored by its rays and maximal cones; faces are derived on demand.
//! Completeness is decided exactly in dimensions 1 and 2. In higher dimension
//! only the necessary condition (rays positively span `N_Q`) is checked and
//! completeness has to be asserted by the caller.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{
    combinations, coords_in_basis, dual_basis, is_lattice_basis, orthogonal_vector, pairing,
    pointed_functional, solve_rational, IntMatrix, IntVector,
};

/// A ray of a fan, given by its primitive generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ray(IntVector);

impl Ray {
    pub fn new(generator: IntVector) -> Result<Self> {
        if generator.is_zero() {
            return Err(Error::ZeroVector);
        }
        if !generator.content().is_one() {
            return Err(Error::InvalidRay {
                index: 0,
                reason: format!("{generator} is not primitive"),
            });
        }
        Ok(Ray(generator))
    }

    pub fn generator(&self) -> &IntVector {
        &self.0
    }
}

/// A cone, as a sorted set of ray indices. The empty set is the trivial cone.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cone {
    ray_indices: Vec<usize>,
}

impl Cone {
    pub fn new(mut ray_indices: Vec<usize>) -> Self {
        ray_indices.sort_unstable();
        ray_indices.dedup();
        Cone { ray_indices }
    }

    pub fn trivial() -> Self {
        Cone {
            ray_indices: Vec::new(),
        }
    }

    pub fn rays(&self) -> &[usize] {
        &self.ray_indices
    }

    pub fn len(&self) -> usize {
        self.ray_indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ray_indices.is_empty()
    }

    pub fn contains(&self, ray: usize) -> bool {
        self.ray_indices.binary_search(&ray).is_ok()
    }

    pub fn is_face_of(&self, other: &Cone) -> bool {
        self.ray_indices.iter().all(|&r| other.contains(r))
    }

    /// Label with 1-based ray numbers, e.g. `σ_12`; the trivial cone is `σ_0`.
    pub fn label(&self) -> String {
        if self.is_empty() {
            return "σ_0".to_string();
        }
        let sep = if self.ray_indices.iter().any(|&r| r >= 9) { "," } else { "" };
        let parts: Vec<String> = self.ray_indices.iter().map(|r| (r + 1).to_string()).collect();
        format!("σ_{}", parts.join(sep))
    }
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Completeness {
    /// Decided exactly (dimension ≤ 2).
    Verified,
    /// Rays positively span and the input claims completeness (dimension ≥ 3).
    Asserted,
    /// Rays positively span but nobody vouched for completeness.
    Unverified,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    dim: usize,
    rays: Vec<Ray>,
    max_cones: Vec<Cone>,
    complete_asserted: bool,
}

impl Fan {
    /// Builds a fan, checking the structural invariants (primitive distinct
    /// rays of the right dimension, valid incomparable cones, no unused rays).
    pub fn new(dim: usize, rays: Vec<IntVector>, max_cones: Vec<Vec<usize>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Empty);
        }
        let mut checked = Vec::with_capacity(rays.len());
        for (index, r) in rays.into_iter().enumerate() {
            if r.dim() != dim {
                return Err(Error::InvalidRay {
                    index,
                    reason: format!("expected dimension {dim}, found {}", r.dim()),
                });
            }
            let ray = Ray::new(r.clone()).map_err(|_| Error::InvalidRay {
                index,
                reason: format!("{r} is zero or not primitive"),
            })?;
            if checked.contains(&ray) {
                return Err(Error::InvalidRay {
                    index,
                    reason: format!("{r} is repeated"),
                });
            }
            checked.push(ray);
        }
        let mut cones = Vec::with_capacity(max_cones.len());
        for (index, c) in max_cones.into_iter().enumerate() {
            if c.is_empty() {
                return Err(Error::InvalidCone {
                    index,
                    reason: "maximal cone without rays".into(),
                });
            }
            if let Some(&bad) = c.iter().find(|&&i| i >= checked.len()) {
                return Err(Error::InvalidCone {
                    index,
                    reason: format!("ray index {bad} out of range"),
                });
            }
            let len = c.len();
            let cone = Cone::new(c);
            if cone.len() != len {
                return Err(Error::InvalidCone {
                    index,
                    reason: "repeated ray index".into(),
                });
            }
            cones.push(cone);
        }
        for i in 0..cones.len() {
            for j in 0..cones.len() {
                if i != j && cones[i].is_face_of(&cones[j]) {
                    return Err(Error::InvalidCone {
                        index: i,
                        reason: format!("contained in maximal cone {j}"),
                    });
                }
            }
        }
        for (index, _) in checked.iter().enumerate() {
            if !cones.iter().any(|c| c.contains(index)) {
                return Err(Error::InvalidRay {
                    index,
                    reason: "not used by any maximal cone".into(),
                });
            }
        }
        for (index, c) in cones.iter().enumerate() {
            let gens: Vec<IntVector> = c.rays().iter().map(|&i| checked[i].0.clone()).collect();
            if pointed_functional(&gens, dim).is_none() {
                return Err(Error::InvalidCone {
                    index,
                    reason: "cone is not strongly convex".into(),
                });
            }
        }
        Ok(Fan {
            dim,
            rays: checked,
            max_cones: cones,
            complete_asserted: false,
        })
    }

    /// Fan from `i64` data, mainly for tests and literals.
    pub fn from_i64(dim: usize, rays: &[&[i64]], max_cones: &[&[usize]]) -> Result<Self> {
        Fan::new(
            dim,
            rays.iter().map(|r| IntVector::from(*r)).collect(),
            max_cones.iter().map(|c| c.to_vec()).collect(),
        )
    }

    /// The complete planar fan whose maximal cones join angularly adjacent rays.
    pub fn planar(rays: Vec<IntVector>) -> Result<Self> {
        if rays.iter().any(|r| r.dim() != 2) {
            return Err(Error::DimMismatch {
                expected: 2,
                found: rays.iter().map(IntVector::dim).find(|&d| d != 2).unwrap_or(2),
            });
        }
        let mut order: Vec<usize> = (0..rays.len()).collect();
        order.sort_by(|&a, &b| angular_cmp(&rays[a], &rays[b]));
        let cones = (0..order.len())
            .map(|k| vec![order[k], order[(k + 1) % order.len()]])
            .collect();
        Fan::new(2, rays, cones)
    }

    /// Marks the fan as complete on the caller's word (used in dimension ≥ 3).
    pub fn assert_complete(mut self, asserted: bool) -> Self {
        self.complete_asserted = asserted;
        self
    }

    pub fn complete_asserted(&self) -> bool {
        self.complete_asserted
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn ray(&self, i: usize) -> &IntVector {
        &self.rays[i].0
    }

    pub fn n_rays(&self) -> usize {
        self.rays.len()
    }

    pub fn max_cones(&self) -> &[Cone] {
        &self.max_cones
    }

    pub fn generators(&self, cone: &Cone) -> Vec<IntVector> {
        cone.rays().iter().map(|&i| self.ray(i).clone()).collect()
    }

    /// The `r × n` matrix whose rows are the ray generators.
    pub fn ray_matrix(&self) -> IntMatrix {
        let rows: Vec<IntVector> = self.rays.iter().map(|r| r.0.clone()).collect();
        IntMatrix::from_rows(&rows).expect("fan has rays")
    }
}

fn det2(a: &IntVector, b: &IntVector) -> BigInt {
    &a[0] * &b[1] - &a[1] * &b[0]
}

fn half_plane(v: &IntVector) -> u8 {
    if v[1].is_positive() || (v[1].is_zero() && v[0].is_positive()) {
        0
    } else {
        1
    }
}

/// Counter-clockwise angular order starting at the positive x-axis.
pub(crate) fn angular_cmp(a: &IntVector, b: &IntVector) -> Ordering {
    half_plane(a)
        .cmp(&half_plane(b))
        .then_with(|| BigInt::zero().cmp(&det2(a, b)))
}

/// True iff the vectors positively span `Q^dim`: no supporting hyperplane
/// through `dim - 1` independent vectors leaves them all on one side.
pub fn positively_spans(vectors: &[IntVector], dim: usize) -> bool {
    if vectors.is_empty() {
        return false;
    }
    let m = IntMatrix::from_rows(vectors).expect("non-empty");
    if m.rank() < dim {
        return false;
    }
    for subset in combinations(vectors.len(), dim - 1) {
        let vs: Vec<IntVector> = subset.iter().map(|&i| vectors[i].clone()).collect();
        let normal = orthogonal_vector(&vs, dim);
        if normal.is_zero() {
            continue;
        }
        let signs: Vec<BigInt> = vectors
            .iter()
            .map(|v| pairing(&normal, v).expect("dims"))
            .collect();
        if signs.iter().all(|s| !s.is_negative()) || signs.iter().all(|s| !s.is_positive()) {
            return false;
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanDiagnostics {
    pub completeness: Completeness,
    pub n_rays: usize,
    pub n_max_cones: usize,
    pub simplicial: bool,
    pub notes: Vec<String>,
}

/// Checks completeness: exactly in dimensions 1 and 2, by the positive-span
/// condition in higher dimension.
pub fn validate_fan(f: &Fan) -> Result<FanDiagnostics> {
    let gens: Vec<IntVector> = f.rays.iter().map(|r| r.0.clone()).collect();
    if !positively_spans(&gens, f.dim) {
        return Err(Error::NotPositivelySpanning);
    }
    let simplicial = f.max_cones.iter().all(|c| {
        IntMatrix::from_rows(&f.generators(c))
            .map(|m| m.rank() == c.len())
            .unwrap_or(false)
    });
    let mut notes = Vec::new();
    let completeness = match f.dim {
        1 => {
            // rays are ±1 and strongly convex cones hold one ray each
            Completeness::Verified
        }
        2 => {
            check_planar_tiling(f)?;
            Completeness::Verified
        }
        _ => {
            if f.complete_asserted {
                notes.push("completeness asserted by input; results are conditional".into());
                Completeness::Asserted
            } else {
                notes.push("completeness not verified in dimension ≥ 3".into());
                Completeness::Unverified
            }
        }
    };
    Ok(FanDiagnostics {
        completeness,
        n_rays: f.rays.len(),
        n_max_cones: f.max_cones.len(),
        simplicial,
        notes,
    })
}

fn check_planar_tiling(f: &Fan) -> Result<()> {
    // oriented sectors (start, end) with det(start, end) > 0
    let mut sectors: Vec<(usize, usize)> = Vec::with_capacity(f.max_cones.len());
    for (index, c) in f.max_cones.iter().enumerate() {
        match c.rays() {
            [a, b] => {
                let d = det2(f.ray(*a), f.ray(*b));
                match d.sign() {
                    num_bigint::Sign::Plus => sectors.push((*a, *b)),
                    num_bigint::Sign::Minus => sectors.push((*b, *a)),
                    num_bigint::Sign::NoSign => {
                        return Err(Error::InvalidCone {
                            index,
                            reason: "opposite rays do not span a strongly convex cone".into(),
                        })
                    }
                }
            }
            [_] => {
                return Err(Error::NotComplete(format!(
                    "maximal cone {index} is one-dimensional"
                )))
            }
            _ => {
                return Err(Error::InvalidCone {
                    index,
                    reason: "planar cones have at most two rays".into(),
                })
            }
        }
    }
    for (ci, &(a, b)) in sectors.iter().enumerate() {
        for k in 0..f.n_rays() {
            if k == a || k == b {
                continue;
            }
            let p = f.ray(k);
            if det2(f.ray(a), p).is_positive() && det2(p, f.ray(b)).is_positive() {
                let other = f
                    .max_cones
                    .iter()
                    .position(|c| c.contains(k))
                    .expect("every ray is used");
                return Err(Error::OverlappingCones {
                    first: ci.min(other),
                    second: ci.max(other),
                });
            }
        }
    }
    let mut starts: Vec<Option<usize>> = vec![None; f.n_rays()];
    for (ci, &(a, _)) in sectors.iter().enumerate() {
        if let Some(prev) = starts[a] {
            return Err(Error::OverlappingCones {
                first: prev,
                second: ci,
            });
        }
        starts[a] = Some(ci);
    }
    if let Some(k) = starts.iter().position(Option::is_none) {
        return Err(Error::NotComplete(format!(
            "gap counter-clockwise from ray {}",
            k + 1
        )));
    }
    Ok(())
}

/// Fails unless completeness is verified or asserted.
pub fn require_complete(f: &Fan) -> Result<Completeness> {
    let diag = validate_fan(f).map_err(|e| match e {
        Error::NotPositivelySpanning => {
            Error::NotComplete("ray generators do not positively span".into())
        }
        other => other,
    })?;
    if diag.completeness == Completeness::Unverified {
        return Err(Error::CompletenessUnverified(
            "completeness in dimension ≥ 3 must be asserted".into(),
        ));
    }
    Ok(diag.completeness)
}

/// A character `e` pairing to −1 with the distinguished ray and ≥ 0 with
/// every other ray.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DemazureRoot {
    pub distinguished: usize,
    pub e: IntVector,
}

impl DemazureRoot {
    pub fn is_root_of(&self, f: &Fan) -> bool {
        f.rays.iter().enumerate().all(|(i, r)| {
            let v = pairing(&r.0, &self.e).expect("dims");
            if i == self.distinguished {
                v == -BigInt::one()
            } else {
                !v.is_negative()
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompleteCollection {
    pub basis_rays: Vec<usize>,
    pub roots: Vec<DemazureRoot>,
}

impl CompleteCollection {
    /// `<p_i, e_j> = −δ_ij` over the basis rays and every root is a root.
    pub fn verify(&self, f: &Fan) -> bool {
        self.basis_rays.len() == f.dim
            && self.roots.len() == f.dim
            && self.basis_rays.iter().enumerate().all(|(i, &ri)| {
                self.roots.iter().enumerate().all(|(j, root)| {
                    let expected = if i == j { -BigInt::one() } else { BigInt::zero() };
                    pairing(f.ray(ri), &root.e).expect("dims") == expected
                })
            })
            && self
                .roots
                .iter()
                .zip(&self.basis_rays)
                .all(|(root, &ri)| root.distinguished == ri && root.is_root_of(f))
    }
}

/// All Demazure roots, sorted by distinguished ray and then by character.
pub fn demazure_roots(f: &Fan) -> Result<Vec<DemazureRoot>> {
    let gens: Vec<IntVector> = f.rays.iter().map(|r| r.0.clone()).collect();
    if !positively_spans(&gens, f.dim) {
        return Err(Error::NotComplete(
            "ray generators do not positively span; root region unbounded".into(),
        ));
    }
    let mut roots = Vec::new();
    for rho in 0..f.n_rays() {
        let Some((lo, hi)) = root_region_box(f, rho) else {
            continue;
        };
        for point in BoxIter::new(&lo, &hi) {
            let e = IntVector::new(point).expect("dim > 0");
            let root = DemazureRoot {
                distinguished: rho,
                e,
            };
            if root.is_root_of(f) {
                roots.push(root);
            }
        }
    }
    Ok(roots)
}

/// Integer bounding box of `{e : <p_rho, e> = −1, <p_i, e> ≥ 0 (i ≠ rho)}`,
/// from its vertices (each cut out by the equation plus `n − 1` tight
/// inequalities). `None` when the region is empty.
fn root_region_box(f: &Fan, rho: usize) -> Option<(Vec<BigInt>, Vec<BigInt>)> {
    let n = f.dim;
    let others: Vec<usize> = (0..f.n_rays()).filter(|&i| i != rho).collect();
    let mut lo: Option<Vec<BigInt>> = None;
    let mut hi: Option<Vec<BigInt>> = None;
    for active in combinations(others.len(), n - 1) {
        let mut rows = vec![f.ray(rho).clone()];
        rows.extend(active.iter().map(|&k| f.ray(others[k]).clone()));
        let a = IntMatrix::from_rows(&rows).expect("non-empty");
        let mut rhs = vec![BigInt::zero(); n];
        rhs[0] = -BigInt::one();
        let Some(x) = solve_rational(&a, &rhs) else {
            continue;
        };
        let feasible = others.iter().all(|&i| {
            let v: num_rational::BigRational = f
                .ray(i)
                .iter()
                .zip(&x)
                .map(|(p, xi)| xi * num_rational::BigRational::from(p.clone()))
                .sum();
            !v.is_negative()
        });
        if !feasible {
            continue;
        }
        let floor: Vec<BigInt> = x.iter().map(|q| q.numer().div_floor(q.denom())).collect();
        let ceil: Vec<BigInt> = x.iter().map(|q| q.numer().div_ceil(q.denom())).collect();
        lo = Some(match lo {
            None => floor,
            Some(l) => l.into_iter().zip(floor).map(|(a, b)| a.min(b)).collect(),
        });
        hi = Some(match hi {
            None => ceil,
            Some(h) => h.into_iter().zip(ceil).map(|(a, b)| a.max(b)).collect(),
        });
    }
    Some((lo?, hi?))
}

/// Lexicographic iteration over the integer points of a box.
pub(crate) struct BoxIter {
    lo: Vec<BigInt>,
    hi: Vec<BigInt>,
    next: Option<Vec<BigInt>>,
}

impl BoxIter {
    pub(crate) fn new(lo: &[BigInt], hi: &[BigInt]) -> Self {
        let empty = lo.iter().zip(hi).any(|(l, h)| l > h);
        BoxIter {
            lo: lo.to_vec(),
            hi: hi.to_vec(),
            next: if empty { None } else { Some(lo.to_vec()) },
        }
    }
}

impl Iterator for BoxIter {
    type Item = Vec<BigInt>;
    fn next(&mut self) -> Option<Vec<BigInt>> {
        let out = self.next.clone()?;
        let mut cur = out.clone();
        let mut i = cur.len();
        loop {
            if i == 0 {
                self.next = None;
                break;
            }
            i -= 1;
            if cur[i] < self.hi[i] {
                cur[i] += 1;
                cur[i + 1..].clone_from_slice(&self.lo[i + 1..]);
                self.next = Some(cur);
                break;
            }
        }
        Some(out)
    }
}

fn collection_for(f: &Fan, basis_rays: &[usize]) -> Option<CompleteCollection> {
    let basis: Vec<IntVector> = basis_rays.iter().map(|&i| f.ray(i).clone()).collect();
    if !is_lattice_basis(&basis) {
        return None;
    }
    for i in 0..f.n_rays() {
        if basis_rays.contains(&i) {
            continue;
        }
        let c = coords_in_basis(&basis, f.ray(i)).ok()?;
        if c.iter().any(Signed::is_positive) {
            return None;
        }
    }
    let duals = dual_basis(&basis).ok()?;
    let roots = duals
        .iter()
        .zip(basis_rays)
        .map(|(m, &ri)| DemazureRoot {
            distinguished: ri,
            e: -m,
        })
        .collect();
    Some(CompleteCollection {
        basis_rays: basis_rays.to_vec(),
        roots,
    })
}

/// Every complete collection, one per lattice basis of rays (taken as an
/// increasing index set) whose remaining rays lie in the negative octant.
/// Emitted in lexicographic order of the basis rays.
pub fn complete_collections(f: &Fan) -> Result<Vec<CompleteCollection>> {
    require_complete(f)?;
    Ok(combinations(f.n_rays(), f.dim)
        .filter_map(|b| collection_for(f, &b))
        .collect())
}

/// The first complete collection, if any: a witness that the variety admits
/// an additive action.
pub fn admits_additive_action(f: &Fan) -> Result<Option<CompleteCollection>> {
    require_complete(f)?;
    Ok(combinations(f.n_rays(), f.dim).find_map(|b| collection_for(f, &b)))
}

/// Maximal cones with `n` rays forming a lattice basis.
pub fn smooth_max_cones(f: &Fan) -> Vec<Cone> {
    f.max_cones
        .iter()
        .filter(|c| c.len() == f.dim && is_lattice_basis(&f.generators(c)))
        .cloned()
        .collect()
}

/// True iff the cone's generators extend to a lattice basis.
pub fn is_smooth_cone(f: &Fan, c: &Cone) -> bool {
    if c.is_empty() {
        return true;
    }
    let m = IntMatrix::from_rows(&f.generators(c)).expect("non-empty");
    let dec = crate::lattice::snf(&m);
    dec.rank() == c.len() && dec.invariants.iter().all(One::is_one)
}

/// All cones of the fan (faces of maximal cones), ordered by dimension and
/// then lexicographically; starts with the trivial cone.
pub fn all_cones(f: &Fan) -> Result<Vec<Cone>> {
    let mut faces: BTreeSet<(usize, Cone)> = BTreeSet::new();
    for (index, c) in f.max_cones.iter().enumerate() {
        if f.dim >= 3 {
            let m = IntMatrix::from_rows(&f.generators(c)).expect("non-empty");
            if m.rank() != c.len() {
                return Err(Error::NonSimplicialCone(index));
            }
        }
        let k = c.len();
        for size in 0..=k {
            for sub in combinations(k, size) {
                let face = Cone::new(sub.iter().map(|&i| c.rays()[i]).collect());
                faces.insert((size, face));
            }
        }
    }
    Ok(faces.into_iter().map(|(_, c)| c).collect())
}

/// Looks a cone up by its ray set.
pub fn find_cone(cones: &[Cone], rays: &[usize]) -> Option<usize> {
    let target = Cone::new(rays.to_vec());
    cones.iter().position(|c| *c == target)
}
