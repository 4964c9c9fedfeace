//! The divisor class group `Cl(X) = Z^r / M`, the monoids `Γ(τ)` and the
//! Aut(X)-orbit criterion on torus orbits.
//!
//! `M` embeds into `Z^r` through `m ↦ (<p_1, m>, …, <p_r, m>)`; the Smith
//! form of the ray matrix gives coordinates on the cokernel. Class elements
//! are stored as a free part in `Z^k` followed by residues modulo the torsion
//! invariants.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::fan::{all_cones, Cone, Fan};
use crate::lattice::{
    combinations, coords_in_basis, hnf, is_lattice_basis, lattice_eq, nonneg_combination, snf, IntMatrix,
    IntVector, Membership, MixedLattice, SmithDecomposition,
};

/// Cap on the coefficient sum for monoid searches on non-pointed cones.
pub const DEFAULT_SEARCH_BOUND: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassElement {
    pub free_part: Vec<BigInt>,
    pub torsion_part: Vec<BigInt>,
}

impl ClassElement {
    fn flat(&self) -> Vec<BigInt> {
        self.free_part
            .iter()
            .chain(&self.torsion_part)
            .cloned()
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.free_part.iter().chain(&self.torsion_part).all(Zero::is_zero)
    }
}

impl fmt::Display for ClassElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.free_part.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))?;
        if !self.torsion_part.is_empty() {
            let t: Vec<String> = self.torsion_part.iter().map(ToString::to_string).collect();
            write!(f, "+[{}]", t.join(","))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct ClassGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
    ray_matrix: IntMatrix,
    smith: SmithDecomposition,
    // rows of U giving torsion / free coordinates
    torsion_rows: Vec<usize>,
    free_rows: Vec<usize>,
    divisor_classes: Vec<ClassElement>,
}

/// Cokernel presentation of `M → Z^r`.
pub fn class_group(f: &Fan) -> Result<ClassGroup> {
    let r_mat = f.ray_matrix();
    let smith = snf(&r_mat);
    if smith.rank() < f.dim() {
        return Err(Error::RaysDoNotSpan);
    }
    let r = f.n_rays();
    let torsion_rows: Vec<usize> = (0..smith.rank())
        .filter(|&i| smith.invariants[i] > BigInt::one())
        .collect();
    let torsion = torsion_rows.iter().map(|&i| smith.invariants[i].clone()).collect();
    let free_rows: Vec<usize> = (smith.rank()..r).collect();
    let mut cg = ClassGroup {
        free_rank: free_rows.len(),
        torsion,
        ray_matrix: r_mat,
        smith,
        torsion_rows,
        free_rows,
        divisor_classes: Vec::new(),
    };
    cg.divisor_classes = (0..r)
        .map(|i| {
            let mut e = vec![BigInt::zero(); r];
            e[i] = BigInt::one();
            cg.project(&e)
        })
        .collect();
    Ok(cg)
}

impl ClassGroup {
    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn n_rays(&self) -> usize {
        self.ray_matrix.nrows()
    }

    pub fn divisor_classes(&self) -> &[ClassElement] {
        &self.divisor_classes
    }

    pub fn divisor_class(&self, ray: usize) -> &ClassElement {
        &self.divisor_classes[ray]
    }

    /// The image of `M` in `Z^r`, as the `r × n` ray matrix.
    pub fn ray_matrix(&self) -> &IntMatrix {
        &self.ray_matrix
    }

    pub fn space(&self) -> MixedLattice {
        MixedLattice {
            free_rank: self.free_rank,
            moduli: self.torsion.clone(),
        }
    }

    /// `(b_1, …, b_r) ↦ Σ b_i [D_i]`.
    pub fn project(&self, b: &[BigInt]) -> ClassElement {
        let y = self.smith.u.mul_vec(b);
        ClassElement {
            free_part: self.free_rows.iter().map(|&i| y[i].clone()).collect(),
            torsion_part: self
                .torsion_rows
                .iter()
                .zip(&self.torsion)
                .map(|(&i, d)| y[i].mod_floor(d))
                .collect(),
        }
    }

    /// A vector of `Z^r` projecting onto `c`.
    pub fn lift(&self, c: &ClassElement) -> Vec<BigInt> {
        let r = self.n_rays();
        let mut y = vec![BigInt::zero(); r];
        for (&i, x) in self.free_rows.iter().zip(&c.free_part) {
            y[i] = x.clone();
        }
        for (&i, x) in self.torsion_rows.iter().zip(&c.torsion_part) {
            y[i] = x.clone();
        }
        self.smith.u_inv.mul_vec(&y)
    }

    fn normalize(&self, mut c: ClassElement) -> ClassElement {
        for (x, d) in c.torsion_part.iter_mut().zip(&self.torsion) {
            *x = x.mod_floor(d);
        }
        c
    }

    pub fn zero(&self) -> ClassElement {
        ClassElement {
            free_part: vec![BigInt::zero(); self.free_rank],
            torsion_part: vec![BigInt::zero(); self.torsion.len()],
        }
    }

    pub fn add(&self, a: &ClassElement, b: &ClassElement) -> ClassElement {
        self.normalize(ClassElement {
            free_part: a.free_part.iter().zip(&b.free_part).map(|(x, y)| x + y).collect(),
            torsion_part: a
                .torsion_part
                .iter()
                .zip(&b.torsion_part)
                .map(|(x, y)| x + y)
                .collect(),
        })
    }

    pub fn scale(&self, k: &BigInt, a: &ClassElement) -> ClassElement {
        self.normalize(ClassElement {
            free_part: a.free_part.iter().map(|x| x * k).collect(),
            torsion_part: a.torsion_part.iter().map(|x| x * k).collect(),
        })
    }

    /// `Σ coeffs[i] · [D_i]`.
    pub fn combination(&self, coeffs: &[(usize, i64)]) -> ClassElement {
        coeffs.iter().fold(self.zero(), |acc, &(i, k)| {
            self.add(&acc, &self.scale(&BigInt::from(k), &self.divisor_classes[i]))
        })
    }

    fn element_from_flat(&self, v: &[BigInt]) -> ClassElement {
        self.normalize(ClassElement {
            free_part: v[..self.free_rank].to_vec(),
            torsion_part: v[self.free_rank..].to_vec(),
        })
    }

    /// Coordinates of `x` in the basis `[D_i]`, `i ∈ basis_rays`, of a
    /// torsion-free class group.
    pub fn coordinates(&self, basis_rays: &[usize], x: &ClassElement) -> Result<Vec<BigInt>> {
        if !self.torsion.is_empty() || basis_rays.len() != self.free_rank || self.free_rank == 0 {
            return Err(Error::NotABasis);
        }
        let basis: Vec<IntVector> = basis_rays
            .iter()
            .map(|&i| IntVector::new(self.divisor_classes[i].free_part.clone()))
            .collect::<Result<_>>()?;
        let c = coords_in_basis(&basis, &IntVector::new(x.free_part.clone())?)?;
        Ok(c.into_coords())
    }

    /// When `Cl(X)` is free, the classes of the rays outside a lattice basis
    /// of rays form a basis of `Cl(X)`. Takes the first such basis (by ray
    /// indices) in which every other ray class has nonnegative coordinates,
    /// else the first one. Returns that basis and the coordinates of every
    /// remaining ray class in it.
    pub fn ray_basis_relations(&self, f: &Fan) -> Option<(Vec<usize>, RayRelations)> {
        if !self.torsion.is_empty() || self.free_rank == 0 {
            return None;
        }
        let mut first = None;
        for n_basis in combinations(f.n_rays(), f.dim()) {
            let gens: Vec<IntVector> = n_basis.iter().map(|&i| f.ray(i).clone()).collect();
            if !is_lattice_basis(&gens) {
                continue;
            }
            let cl_basis: Vec<usize> = (0..f.n_rays()).filter(|i| !n_basis.contains(i)).collect();
            let relations = n_basis
                .iter()
                .map(|&i| {
                    self.coordinates(&cl_basis, &self.divisor_classes[i])
                        .map(|c| (i, c))
                })
                .collect::<Result<Vec<_>>>()
                .ok()?;
            if relations.iter().all(|(_, c)| c.iter().all(|x| !x.is_negative())) {
                return Some((cl_basis, relations));
            }
            first.get_or_insert((cl_basis, relations));
        }
        first
    }

    /// Additive order of `c` (`None` when infinite).
    pub fn order(&self, c: &ClassElement) -> Option<BigInt> {
        if c.free_part.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(
            c.torsion_part
                .iter()
                .zip(&self.torsion)
                .fold(BigInt::one(), |acc, (x, d)| acc.lcm(&(d / x.gcd(d)))),
        )
    }

    /// The automorphism of `Cl(X)` induced by `[D_i] ↦ [D_perm(i)]`.
    pub fn apply_permutation(&self, perm: &[usize], c: &ClassElement) -> ClassElement {
        let x = self.lift(c);
        let mut y = vec![BigInt::zero(); x.len()];
        for (i, xi) in x.into_iter().enumerate() {
            y[perm[i]] = xi;
        }
        self.project(&y)
    }

    /// True iff permuting coordinates of `Z^r` by `perm` maps the image of
    /// `M` onto itself (compared through Hermite forms).
    pub fn preserves_image_lattice(&self, perm: &[usize]) -> bool {
        let r = self.n_rays();
        let n = self.ray_matrix.ncols();
        let mut permuted = IntMatrix::zeros(r, n);
        for i in 0..r {
            for k in 0..n {
                permuted[(perm[i], k)] = self.ray_matrix[(i, k)].clone();
            }
        }
        lattice_eq(&self.ray_matrix.transpose(), &permuted.transpose())
    }

    /// Matrix of the induced automorphism on flat class coordinates (free
    /// coordinates first, then torsion residues); column `j` is the image of
    /// the `j`-th coordinate generator.
    pub fn permutation_matrix(&self, perm: &[usize]) -> IntMatrix {
        let len = self.free_rank + self.torsion.len();
        let mut m = IntMatrix::zeros(len, len);
        for j in 0..len {
            let mut e = vec![BigInt::zero(); len];
            e[j] = BigInt::one();
            let img = self.apply_permutation(perm, &self.element_from_flat(&e)).flat();
            for (i, x) in img.into_iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }

    /// Applies a flat-coordinate matrix to a class element.
    pub fn apply_matrix(&self, m: &IntMatrix, c: &ClassElement) -> ClassElement {
        self.element_from_flat(&m.mul_vec(&c.flat()))
    }
}

/// The submonoid generated by the classes of the rays outside a cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMonoid {
    /// Distinct generators, sorted.
    pub generators: Vec<ClassElement>,
    pub origin: Cone,
    pub excluded_rays: Vec<usize>,
    space: MixedLattice,
}

impl ClassMonoid {
    pub fn from_generators(cg: &ClassGroup, gens: Vec<ClassElement>) -> Self {
        let mut generators = gens;
        generators.sort();
        generators.dedup();
        ClassMonoid {
            generators,
            origin: Cone::trivial(),
            excluded_rays: Vec::new(),
            space: cg.space(),
        }
    }
}

/// `Γ(τ) = Σ_{ρ_i ∉ τ(1)} Z_{≥0}[D_i]`.
pub fn gamma_monoid(f: &Fan, tau: &Cone, cg: &ClassGroup) -> Result<ClassMonoid> {
    if !all_cones(f)?.contains(tau) {
        return Err(Error::ConeNotInFan);
    }
    Ok(gamma_unchecked(tau, cg))
}

fn gamma_unchecked(tau: &Cone, cg: &ClassGroup) -> ClassMonoid {
    let outside: Vec<usize> = (0..cg.n_rays()).filter(|&i| !tau.contains(i)).collect();
    let mut m = ClassMonoid::from_generators(
        cg,
        outside.iter().map(|&i| cg.divisor_classes[i].clone()).collect(),
    );
    m.origin = tau.clone();
    m.excluded_rays = outside;
    m
}

/// Membership of `x` in the monoid.
pub fn monoid_contains(m: &ClassMonoid, x: &ClassElement, search_bound: usize) -> Result<bool> {
    let gens: Vec<Vec<BigInt>> = m.generators.iter().map(ClassElement::flat).collect();
    match nonneg_combination(&m.space, &gens, &x.flat(), search_bound) {
        Membership::Member(_) => Ok(true),
        Membership::NotMember => Ok(false),
        Membership::Inconclusive => Err(Error::Inconclusive(search_bound)),
    }
}

/// Equality of monoids: mutual containment of generators.
pub fn monoids_equal(a: &ClassMonoid, b: &ClassMonoid, search_bound: usize) -> Result<bool> {
    if a.generators == b.generators {
        return Ok(true);
    }
    for g in &a.generators {
        if !monoid_contains(b, g, search_bound)? {
            return Ok(false);
        }
    }
    for g in &b.generators {
        if !monoid_contains(a, g, search_bound)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The distinct monoids of `Υ(Δ)` and which cone produces which.
#[derive(Clone, Debug)]
pub struct Upsilon {
    pub cones: Vec<Cone>,
    /// Per cone, its `Γ(τ)`.
    pub gammas: Vec<ClassMonoid>,
    /// Equality-class representatives (lexicographically least generator set),
    /// in order of first occurrence.
    pub representatives: Vec<ClassMonoid>,
    /// Per cone, the index of its equality class.
    pub assignment: Vec<usize>,
}

impl Upsilon {
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.representatives.len()];
        for &a in &self.assignment {
            sizes[a] += 1;
        }
        sizes
    }

    pub fn cones_in_class(&self, class: usize) -> Vec<&Cone> {
        self.cones
            .iter()
            .zip(&self.assignment)
            .filter(|(_, &a)| a == class)
            .map(|(c, _)| c)
            .collect()
    }

    pub fn class_of(&self, cone: &Cone) -> Option<usize> {
        self.cones.iter().position(|c| c == cone).map(|i| self.assignment[i])
    }
}

/// Computes `Γ(τ)` for every cone, including the trivial one, and groups
/// them by equality.
pub fn upsilon(f: &Fan, cg: &ClassGroup, search_bound: usize) -> Result<Upsilon> {
    let cones = all_cones(f)?;
    let gammas: Vec<ClassMonoid> = cones.iter().map(|c| gamma_unchecked(c, cg)).collect();
    let mut members: Vec<Vec<usize>> = Vec::new();
    let mut assignment = Vec::with_capacity(gammas.len());
    for (i, g) in gammas.iter().enumerate() {
        let mut found = None;
        for (k, class) in members.iter().enumerate() {
            if monoids_equal(&gammas[class[0]], g, search_bound)? {
                found = Some(k);
                break;
            }
        }
        match found {
            Some(k) => {
                members[k].push(i);
                assignment.push(k);
            }
            None => {
                members.push(vec![i]);
                assignment.push(members.len() - 1);
            }
        }
    }
    let representatives = members
        .iter()
        .map(|class| {
            class
                .iter()
                .map(|&i| &gammas[i])
                .min_by(|a, b| a.generators.cmp(&b.generators))
                .expect("non-empty class")
                .clone()
        })
        .collect();
    Ok(Upsilon {
        cones,
        gammas,
        representatives,
        assignment,
    })
}

/// Per non-basis ray, its class in basis coordinates.
pub type RayRelations = Vec<(usize, Vec<BigInt>)>;

/// A ray permutation whose induced automorphism of `Cl(X)` realizes the
/// orbit equivalence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitEquivalenceWitness {
    pub ray_permutation: Vec<usize>,
    /// Action on flat class coordinates, see [`ClassGroup::permutation_matrix`].
    pub automorphism: IntMatrix,
}

/// Admissible automorphisms of `Cl(X)` together with `Υ(Δ)`; built once and
/// reused for every pair of cones.
#[derive(Clone, Debug)]
pub struct OrbitAnalysis {
    pub class_group: ClassGroup,
    pub upsilon: Upsilon,
    /// One ray permutation per distinct automorphism that is well defined on
    /// `Cl(X)` and permutes `Υ(Δ)`, in lexicographic order.
    pub automorphisms: Vec<Vec<usize>>,
    search_bound: usize,
}

impl OrbitAnalysis {
    pub fn new(f: &Fan, search_bound: usize) -> Result<Self> {
        let cg = class_group(f)?;
        let ups = upsilon(f, &cg, search_bound)?;
        let perms = lattice_preserving_permutations(f, &cg);
        let mut seen: HashMap<Vec<ClassElement>, ()> = HashMap::new();
        let mut automorphisms = Vec::new();
        for perm in perms {
            let images: Vec<ClassElement> =
                perm.iter().map(|&j| cg.divisor_classes[j].clone()).collect();
            if seen.insert(images, ()).is_some() {
                continue;
            }
            if permutes_upsilon(&cg, &ups, &perm, search_bound)? {
                automorphisms.push(perm);
            }
        }
        Ok(OrbitAnalysis {
            class_group: cg,
            upsilon: ups,
            automorphisms,
            search_bound,
        })
    }

    pub fn search_bound(&self) -> usize {
        self.search_bound
    }

    fn gamma(&self, c: &Cone) -> Result<&ClassMonoid> {
        let i = self
            .upsilon
            .cones
            .iter()
            .position(|x| x == c)
            .ok_or(Error::ConeNotInFan)?;
        Ok(&self.upsilon.gammas[i])
    }

    /// Whether the orbits of `sigma` and `sigma2` lie in one Aut(X)-orbit;
    /// the witness is the first admissible permutation in lexicographic order.
    pub fn equivalent(&self, sigma: &Cone, sigma2: &Cone) -> Result<Option<OrbitEquivalenceWitness>> {
        let g1 = self.gamma(sigma)?;
        let g2 = self.gamma(sigma2)?;
        for perm in &self.automorphisms {
            let image = map_monoid(&self.class_group, g1, perm);
            if monoids_equal(&image, g2, self.search_bound)? {
                return Ok(Some(OrbitEquivalenceWitness {
                    ray_permutation: perm.clone(),
                    automorphism: self.class_group.permutation_matrix(perm),
                }));
            }
        }
        Ok(None)
    }

    /// Partition of all cones into Aut(X)-orbit classes.
    pub fn orbit_classes(&self) -> Result<Vec<Vec<Cone>>> {
        let mut classes: Vec<Vec<Cone>> = Vec::new();
        'cones: for c in &self.upsilon.cones {
            for class in classes.iter_mut() {
                if self.equivalent(&class[0], c)?.is_some() {
                    class.push(c.clone());
                    continue 'cones;
                }
            }
            classes.push(vec![c.clone()]);
        }
        Ok(classes)
    }

    /// Re-checks a witness: lattice preservation by Hermite forms, the
    /// matrix action on divisor classes, `φ(Γ(σ)) = Γ(σ')` and `φ(Υ) = Υ`.
    pub fn verify_witness(
        &self,
        sigma: &Cone,
        sigma2: &Cone,
        w: &OrbitEquivalenceWitness,
    ) -> Result<bool> {
        let cg = &self.class_group;
        let perm = &w.ray_permutation;
        let mut sorted = perm.clone();
        sorted.sort_unstable();
        if sorted != (0..cg.n_rays()).collect::<Vec<_>>() || !cg.preserves_image_lattice(perm) {
            return Ok(false);
        }
        for (c, &j) in cg.divisor_classes.iter().zip(perm) {
            if cg.apply_matrix(&w.automorphism, c) != cg.divisor_classes[j] {
                return Ok(false);
            }
        }
        let image = map_monoid(cg, self.gamma(sigma)?, perm);
        Ok(monoids_equal(&image, self.gamma(sigma2)?, self.search_bound)?
            && permutes_upsilon(cg, &self.upsilon, perm, self.search_bound)?)
    }
}

/// Whether the orbits of `sigma` and `sigma2` lie in the same Aut(X)-orbit.
pub fn bazhov_equivalent(
    f: &Fan,
    sigma: &Cone,
    sigma2: &Cone,
    search_bound: usize,
) -> Result<Option<OrbitEquivalenceWitness>> {
    OrbitAnalysis::new(f, search_bound)?.equivalent(sigma, sigma2)
}

fn map_monoid(cg: &ClassGroup, m: &ClassMonoid, perm: &[usize]) -> ClassMonoid {
    ClassMonoid::from_generators(
        cg,
        m.generators
            .iter()
            .map(|g| cg.apply_permutation(perm, g))
            .collect(),
    )
}

fn permutes_upsilon(
    cg: &ClassGroup,
    ups: &Upsilon,
    perm: &[usize],
    search_bound: usize,
) -> Result<bool> {
    for rep in &ups.representatives {
        let image = map_monoid(cg, rep, perm);
        let mut hit = false;
        for other in &ups.representatives {
            if monoids_equal(&image, other, search_bound)? {
                hit = true;
                break;
            }
        }
        if !hit {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Relations of `M ⊂ Z^r` supported on the first `len` coordinates, for
/// every prefix length.
fn prefix_relations(cg: &ClassGroup) -> Vec<Vec<Vec<BigInt>>> {
    let r_mat = cg.ray_matrix();
    let r = r_mat.nrows();
    let n = r_mat.ncols();
    (0..=r)
        .map(|len| {
            let kernel: Vec<Vec<BigInt>> = if len == r {
                (0..n)
                    .map(|k| {
                        let mut e = vec![BigInt::zero(); n];
                        e[k] = BigInt::one();
                        e
                    })
                    .collect()
            } else {
                // m with <p_j, m> = 0 for j ≥ len: left kernel of the suffix rows
                let mut suffix = IntMatrix::zeros(r - len, n);
                for j in len..r {
                    for k in 0..n {
                        suffix[(j - len, k)] = r_mat[(j, k)].clone();
                    }
                }
                let (h, u) = hnf(&suffix.transpose());
                (0..h.nrows())
                    .filter(|&i| h.row(i).iter().all(Zero::is_zero))
                    .map(|i| u.row(i).to_vec())
                    .collect()
            };
            kernel.iter().map(|m| r_mat.mul_vec(m)).collect()
        })
        .collect()
}

/// All ray permutations `f` (lexicographic order) with `P_f(M) = M`, i.e.
/// `[D_i] ↦ [D_f(i)]` extends to an automorphism of `Cl(X)`.
fn lattice_preserving_permutations(f: &Fan, cg: &ClassGroup) -> Vec<Vec<usize>> {
    let r = f.n_rays();
    let relations = prefix_relations(cg);
    let classes = cg.divisor_classes();
    let orders: Vec<Option<BigInt>> = classes.iter().map(|c| cg.order(c)).collect();
    let mut out = Vec::new();
    let mut perm = Vec::with_capacity(r);
    let mut used = vec![false; r];

    fn consistent(
        cg: &ClassGroup,
        relations: &[Vec<BigInt>],
        perm: &[usize],
    ) -> bool {
        relations.iter().all(|rel| {
            let mut acc = cg.zero();
            for (i, a) in rel.iter().enumerate().take(perm.len()) {
                if !a.is_zero() {
                    acc = cg.add(&acc, &cg.scale(a, &cg.divisor_classes[perm[i]]));
                }
            }
            acc.is_zero()
        })
    }

    #[allow(clippy::too_many_arguments)]
    fn go(
        cg: &ClassGroup,
        relations: &[Vec<Vec<BigInt>>],
        classes: &[ClassElement],
        orders: &[Option<BigInt>],
        perm: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let r = classes.len();
        let i = perm.len();
        if i == r {
            if cg.preserves_image_lattice(perm) {
                out.push(perm.clone());
            }
            return;
        }
        for j in 0..r {
            if used[j] || orders[i] != orders[j] {
                continue;
            }
            // equal classes must go to equal classes
            if (0..i).any(|k| (classes[k] == classes[i]) != (classes[perm[k]] == classes[j])) {
                continue;
            }
            perm.push(j);
            if consistent(cg, &relations[i + 1], perm) {
                used[j] = true;
                go(cg, relations, classes, orders, perm, used, out);
                used[j] = false;
            }
            perm.pop();
        }
    }

    go(cg, &relations, classes, &orders, &mut perm, &mut used, &mut out);
    out
}
