//! Full-dimensional lattice polytopes in `M_Q`.
//!
//! Facets are found by brute force over affinely independent vertex subsets;
//! at desk scale (n ≤ 3, a few dozen vertices) this is fast and needs no
//! convex-hull machinery.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::fan::{BoxIter, Fan};
use crate::lattice::{
    combinations, is_lattice_basis, nonneg_combination, orthogonal_vector, pairing, primitive,
    solve_rational, IntMatrix, IntVector, Membership, MixedLattice,
};

/// A facet inequality `<normal, x> ≤ bound` with primitive outer normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FacetInequality {
    pub normal: IntVector,
    pub bound: BigInt,
}

impl FacetInequality {
    pub fn value(&self, x: &IntVector) -> BigInt {
        pairing(&self.normal, x).expect("dims")
    }

    pub fn satisfied_by(&self, x: &IntVector) -> bool {
        self.value(x) <= self.bound
    }

    pub fn is_tight_at(&self, x: &IntVector) -> bool {
        self.value(x) == self.bound
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<IntVector>,
    facets: Vec<FacetInequality>,
}

/// Facets of the convex hull of a full-dimensional point set, ordered by the
/// sorted list of point indices they contain.
fn hull_facets(points: &[IntVector], dim: usize) -> Result<Vec<FacetInequality>> {
    if points.len() <= dim {
        return Err(Error::NotFullDimensional);
    }
    let diffs: Vec<IntVector> = points[1..].iter().map(|p| p - &points[0]).collect();
    if IntMatrix::from_rows(&diffs)?.rank() < dim {
        return Err(Error::NotFullDimensional);
    }
    let mut found: Vec<(Vec<usize>, FacetInequality)> = Vec::new();
    for subset in combinations(points.len(), dim) {
        let base = &points[subset[0]];
        let spans: Vec<IntVector> = subset[1..].iter().map(|&i| &points[i] - base).collect();
        let nv = orthogonal_vector(&spans, dim);
        if nv.is_zero() {
            continue;
        }
        let nv = primitive(&nv)?;
        let level = pairing(&nv, base)?;
        let values: Vec<BigInt> = points.iter().map(|p| pairing(&nv, p).expect("dims")).collect();
        let facet = if values.iter().all(|v| *v <= level) {
            FacetInequality {
                normal: nv,
                bound: level,
            }
        } else if values.iter().all(|v| *v >= level) {
            FacetInequality {
                normal: -&nv,
                bound: -level,
            }
        } else {
            continue;
        };
        if found.iter().any(|(_, f)| *f == facet) {
            continue;
        }
        let on: Vec<usize> = (0..points.len())
            .filter(|&i| facet.is_tight_at(&points[i]))
            .collect();
        found.push((on, facet));
    }
    found.sort();
    Ok(found.into_iter().map(|(_, f)| f).collect())
}

impl LatticePolytope {
    /// Polytope from its vertex list. Every point must be a vertex of the
    /// convex hull and the hull must be full-dimensional.
    pub fn new(vertices: Vec<IntVector>) -> Result<Self> {
        let dim = vertices.first().ok_or(Error::Empty)?.dim();
        for v in &vertices {
            if v.dim() != dim {
                return Err(Error::DimMismatch {
                    expected: dim,
                    found: v.dim(),
                });
            }
        }
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::NotAVertex(format!("{v} (repeated)")));
            }
        }
        let facets = hull_facets(&vertices, dim)?;
        let p = LatticePolytope {
            dim,
            vertices,
            facets,
        };
        for v in &p.vertices {
            if !p.is_vertex(v) {
                return Err(Error::NotAVertex(v.to_string()));
            }
        }
        Ok(p)
    }

    pub fn from_i64(vertices: &[&[i64]]) -> Result<Self> {
        Self::new(vertices.iter().map(|v| IntVector::from(*v)).collect())
    }

    /// Convex hull of arbitrary lattice points; keeps the extreme points in
    /// their first-occurrence order.
    pub fn hull(points: &[IntVector]) -> Result<Self> {
        let mut uniq: Vec<IntVector> = Vec::new();
        for p in points {
            if !uniq.contains(p) {
                uniq.push(p.clone());
            }
        }
        let dim = uniq.first().ok_or(Error::Empty)?.dim();
        let facets = hull_facets(&uniq, dim)?;
        let vertices: Vec<IntVector> = uniq
            .into_iter()
            .filter(|p| tight_rank(&facets, p) == dim)
            .collect();
        Self::new(vertices)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[IntVector] {
        &self.vertices
    }

    fn is_vertex(&self, v: &IntVector) -> bool {
        self.facets.iter().all(|f| f.satisfied_by(v)) && tight_rank(&self.facets, v) == self.dim
    }

    pub fn contains(&self, x: &IntVector) -> bool {
        self.facets.iter().all(|f| f.satisfied_by(x))
    }

    fn vertex_index(&self, v: &IntVector) -> Result<usize> {
        self.vertices
            .iter()
            .position(|w| w == v)
            .ok_or_else(|| Error::NotAVertex(v.to_string()))
    }

    fn tight_facets(&self, v: &IntVector) -> Vec<&FacetInequality> {
        self.facets.iter().filter(|f| f.is_tight_at(v)).collect()
    }
}

fn tight_rank(facets: &[FacetInequality], v: &IntVector) -> usize {
    let normals: Vec<IntVector> = facets
        .iter()
        .filter(|f| f.is_tight_at(v))
        .map(|f| f.normal.clone())
        .collect();
    if normals.is_empty() {
        return 0;
    }
    IntMatrix::from_rows(&normals).expect("non-empty").rank()
}

/// The irredundant facet inequalities of `p`.
pub fn facets(p: &LatticePolytope) -> Vec<FacetInequality> {
    p.facets.clone()
}

/// All lattice points of `p` in lexicographic order.
pub fn lattice_points(p: &LatticePolytope) -> Vec<IntVector> {
    let lo: Vec<BigInt> = (0..p.dim)
        .map(|i| p.vertices.iter().map(|v| v[i].clone()).min().expect("vertices"))
        .collect();
    let hi: Vec<BigInt> = (0..p.dim)
        .map(|i| p.vertices.iter().map(|v| v[i].clone()).max().expect("vertices"))
        .collect();
    BoxIter::new(&lo, &hi)
        .map(|c| IntVector::new(c).expect("dim > 0"))
        .filter(|x| p.contains(x))
        .collect()
}

/// Primitive directions of the edges at vertex `v`, ordered by the index of
/// the other endpoint.
pub fn vertex_edges(p: &LatticePolytope, v: &IntVector) -> Result<Vec<IntVector>> {
    p.vertex_index(v)?;
    let mut out = Vec::new();
    for w in &p.vertices {
        if w == v {
            continue;
        }
        let common: Vec<IntVector> = p
            .facets
            .iter()
            .filter(|f| f.is_tight_at(v) && f.is_tight_at(w))
            .map(|f| f.normal.clone())
            .collect();
        let rank = if common.is_empty() {
            0
        } else {
            IntMatrix::from_rows(&common)?.rank()
        };
        if rank + 1 == p.dim {
            out.push(primitive(&(w - v))?);
        }
    }
    Ok(out)
}

/// A vertex whose primitive edge directions form a lattice basis and whose
/// non-incident facets have normals nonnegative on that basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectangleWitness {
    pub v0: IntVector,
    pub edge_basis: Vec<IntVector>,
}

impl RectangleWitness {
    /// Re-checks both defining conditions against `p`.
    pub fn verify(&self, p: &LatticePolytope) -> bool {
        let Ok(edges) = vertex_edges(p, &self.v0) else {
            return false;
        };
        if edges.len() != self.edge_basis.len()
            || !self.edge_basis.iter().all(|e| edges.contains(e))
            || !is_lattice_basis(&self.edge_basis)
        {
            return false;
        }
        p.facets
            .iter()
            .filter(|f| !f.is_tight_at(&self.v0))
            .all(|f| {
                self.edge_basis
                    .iter()
                    .all(|e| !pairing(&f.normal, e).expect("dims").is_negative())
            })
    }
}

/// First vertex (in input order) witnessing that `p` is inscribed in a
/// rectangle.
pub fn is_inscribed_in_rectangle(p: &LatticePolytope) -> Option<RectangleWitness> {
    p.vertices.iter().find_map(|v| {
        let edges = vertex_edges(p, v).ok()?;
        if edges.len() != p.dim || !is_lattice_basis(&edges) {
            return None;
        }
        let ok = p.facets.iter().filter(|f| !f.is_tight_at(v)).all(|f| {
            edges
                .iter()
                .all(|e| !pairing(&f.normal, e).expect("dims").is_negative())
        });
        ok.then(|| RectangleWitness {
            v0: v.clone(),
            edge_basis: edges,
        })
    })
}

/// The semigroup generated by `(P ∩ M) − m` for a vertex `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSemigroup {
    pub vertex: IntVector,
    pub generators: Vec<IntVector>,
    /// Integer functional strictly positive on every nonzero generator.
    pub grading: IntVector,
}

impl VertexSemigroup {
    pub fn new(p: &LatticePolytope, m: &IntVector) -> Result<Self> {
        p.vertex_index(m)?;
        let generators: Vec<IntVector> = lattice_points(p).iter().map(|x| x - m).collect();
        // minus the sum of the outer normals of the facets through m
        let mut grading = IntVector::zeros(p.dim);
        for f in p.tight_facets(m) {
            grading = &grading - &f.normal;
        }
        Ok(VertexSemigroup {
            vertex: m.clone(),
            generators,
            grading,
        })
    }

    pub fn contains(&self, a: &IntVector) -> bool {
        let gens: Vec<Vec<BigInt>> = self
            .generators
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.coords().to_vec())
            .collect();
        // the generators span a pointed cone, so the cap is never consulted
        matches!(
            nonneg_combination(&MixedLattice::free(a.dim()), &gens, a.coords(), 0),
            Membership::Member(_)
        )
    }
}

/// Lattice points of the half-open parallelepiped `{Σ t_i b_i : 0 ≤ t_i < 1}`.
pub fn parallelepiped_points(basis: &[IntVector]) -> Vec<IntVector> {
    let n = basis[0].dim();
    let mut lo = vec![BigInt::zero(); n];
    let mut hi = vec![BigInt::zero(); n];
    for b in basis {
        for i in 0..n {
            if b[i].is_negative() {
                lo[i] += &b[i];
            } else {
                hi[i] += &b[i];
            }
        }
    }
    let bt = IntMatrix::from_rows(basis).expect("non-empty").transpose();
    BoxIter::new(&lo, &hi)
        .filter_map(|z| {
            let t = solve_rational(&bt, &z)?;
            let one = BigRational::one();
            t.iter()
                .all(|ti| !ti.is_negative() && *ti < one)
                .then(|| IntVector::new(z).expect("dim > 0"))
        })
        .collect()
}

/// Saturation of the semigroup at vertex `m`: every lattice point of every
/// half-open parallelepiped spanned by `n` independent edge directions lies
/// in the semigroup. Returns the first missing point, if any.
pub fn saturation_defect(p: &LatticePolytope, m: &IntVector) -> Result<Option<IntVector>> {
    let sg = VertexSemigroup::new(p, m)?;
    let edges = vertex_edges(p, m)?;
    for subset in combinations(edges.len(), p.dim) {
        let basis: Vec<IntVector> = subset.iter().map(|&i| edges[i].clone()).collect();
        if IntMatrix::from_rows(&basis)?.det()?.is_zero() {
            continue;
        }
        for z in parallelepiped_points(&basis) {
            if !z.is_zero() && !sg.contains(&z) {
                return Ok(Some(z));
            }
        }
    }
    Ok(None)
}

/// True iff every vertex semigroup is saturated.
pub fn is_very_ample(p: &LatticePolytope) -> bool {
    p.vertices.iter().all(|m| {
        saturation_defect(p, m)
            .expect("m is a vertex")
            .is_none()
    })
}

/// Normal fan with inner-normal convention: ray `i` is minus the outer
/// normal of facet `i`, and vertex `v` contributes the cone of the facets
/// through it.
pub fn normal_fan(p: &LatticePolytope) -> Result<Fan> {
    let rays: Vec<IntVector> = p.facets.iter().map(|f| -&f.normal).collect();
    let cones: Vec<Vec<usize>> = p
        .vertices
        .iter()
        .map(|v| {
            (0..p.facets.len())
                .filter(|&i| p.facets[i].is_tight_at(v))
                .collect()
        })
        .collect();
    let fan = Fan::new(p.dim, rays, cones)?;
    Ok(if p.dim >= 3 { fan.assert_complete(true) } else { fan })
}
