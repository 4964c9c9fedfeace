//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness so the lines are always printed.

mod common;

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use toric_core::classgroup::{
    class_group, gamma_monoid, monoids_equal, upsilon, ClassGroup, ClassMonoid, OrbitAnalysis,
    DEFAULT_SEARCH_BOUND,
};
use toric_core::euler::{
    classify_euler_orbits, euler_action, fundamental_form, is_euler_symmetric, is_symbol_system,
    EulerInput,
};
use toric_core::fan::{admits_additive_action, demazure_roots, Cone, Fan};
use toric_core::lattice::{snf, IntMatrix, IntVector};
use toric_core::polytope::{
    is_inscribed_in_rectangle, is_very_ample, lattice_points, normal_fan, LatticePolytope,
};

// Pinned sizes and bounds. Everything here is exact integer arithmetic, so
// the only tolerances are counts.
const N_RANDOM_POLYGONS: usize = 200;
const N_NORMAL_FANS: usize = 60;
const N_RANDOM_FANS: usize = 60;
const MIN_FAN_CORPUS: usize = 100;
const ROOT_BOX_RADIUS: i64 = 64;
const N_SNF_MATRICES: usize = 500;
const SNF_MAX_SIZE: usize = 5;
const SNF_ENTRY_MAX: i64 = 9;
const SNF_SEED: u64 = 4_242;
const VA_BOX_RADIUS: i64 = 8;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn b(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

fn i64s(v: &IntVector) -> Vec<i64> {
    v.to_i64s().expect("small coordinates")
}

// ---------------------------------------------------------------- golden

fn coords_in(cg: &ClassGroup, basis: &[usize], m: &ClassMonoid) -> BTreeSet<Vec<i64>> {
    m.generators
        .iter()
        .map(|g| {
            cg.coordinates(basis, g)
                .unwrap()
                .iter()
                .map(|x| x.to_i64().unwrap())
                .collect()
        })
        .collect()
}

fn hirzebruch_suite() -> Outcome {
    for s in 1..=3i64 {
        let f = common::data_fan(&format!("hirzebruch_s{s}.json"));
        let cg = class_group(&f).map_err(|e| e.to_string())?;
        ensure(cg.free_rank() == 2 && cg.torsion().is_empty(), || {
            format!("H_{s}: class group is not Z^2")
        })?;
        let d = cg.divisor_classes();
        ensure(d[0] == d[2], || format!("H_{s}: [D1] != [D3]"))?;
        ensure(d[3] == cg.combination(&[(1, 1), (2, s)]), || {
            format!("H_{s}: [D4] != [D2] + s[D3]")
        })?;
        ensure(
            cg.coordinates(&[2, 1], &d[3]).unwrap() == b(&[s, 1]),
            || format!("H_{s}: [D3],[D2] is not a basis with the stated coordinates"),
        )?;

        let ups = upsilon(&f, &cg, DEFAULT_SEARCH_BOUND).map_err(|e| e.to_string())?;
        ensure(ups.cones.len() == 9, || format!("H_{s}: {} cones", ups.cones.len()))?;
        ensure(ups.representatives.len() == 2, || {
            format!("H_{s}: {} distinct monoids", ups.representatives.len())
        })?;
        let b_class = ups.class_of(&Cone::new(vec![1])).unwrap();
        let b_cones: BTreeSet<Cone> = ups.cones_in_class(b_class).into_iter().cloned().collect();
        let expected: BTreeSet<Cone> = [vec![1], vec![0, 1], vec![1, 2]]
            .into_iter()
            .map(Cone::new)
            .collect();
        ensure(b_cones == expected, || format!("H_{s}: B cones {b_cones:?}"))?;
        let a_count = ups.cones_in_class(1 - b_class).len();
        ensure(a_count == 6, || format!("H_{s}: A occurs {a_count} times"))?;
        // B = <[D3], [D2] + s[D3]> does not contain [D2]
        let bm = &ups.representatives[b_class];
        ensure(
            !toric_core::classgroup::monoid_contains(bm, &d[1], DEFAULT_SEARCH_BOUND).unwrap(),
            || format!("H_{s}: [D2] in B"),
        )?;

        let analysis = OrbitAnalysis::new(&f, DEFAULT_SEARCH_BOUND).map_err(|e| e.to_string())?;
        let classes = analysis.orbit_classes().map_err(|e| e.to_string())?;
        ensure(classes.len() == 2, || format!("H_{s}: {} orbit classes", classes.len()))?;
        let report = classify_euler_orbits(&f, DEFAULT_SEARCH_BOUND).map_err(|e| e.to_string())?;
        ensure(report.records.len() == 9 && report.all_euler(), || {
            format!("H_{s}: not every orbit Euler")
        })?;
        for r in &report.records {
            let (t, w) = r.witness.as_ref().unwrap();
            ensure(analysis.verify_witness(&r.cone, t, w).unwrap(), || {
                format!("H_{s}: witness for {} does not re-verify", r.cone)
            })?;
        }
        ensure(admits_additive_action(&f).unwrap().is_some(), || {
            format!("H_{s}: no complete collection")
        })?;
    }
    Ok("s = 1, 2, 3: Cl = Z^2 with stated relations; Υ = {A (6 cones incl. σ_0), B (σ_2, σ_12, σ_23)}; 2 orbit classes; all 9 orbits Euler; additive action".into())
}

fn blowup_suite() -> Outcome {
    let f = common::data_fan("blowup_p1p1.json");
    let cg = class_group(&f).map_err(|e| e.to_string())?;
    ensure(cg.free_rank() == 3 && cg.torsion().is_empty(), || "Cl is not Z^3".into())?;
    let d = cg.divisor_classes();
    ensure(d[0] == cg.combination(&[(2, 1), (3, 1)]), || "[D1] != [D3]+[D4]".into())?;
    ensure(d[1] == cg.combination(&[(3, 1), (4, 1)]), || "[D2] != [D4]+[D5]".into())?;
    let basis = [2, 3, 4];
    let set = |xs: &[[i64; 3]]| -> BTreeSet<Vec<i64>> { xs.iter().map(|x| x.to_vec()).collect() };
    let g4 = gamma_monoid(&f, &Cone::new(vec![3]), &cg).map_err(|e| e.to_string())?;
    ensure(
        coords_in(&cg, &basis, &g4) == set(&[[1, 0, 0], [0, 0, 1], [1, 1, 0], [0, 1, 1]]),
        || format!("Γ(σ_4) = {:?}", coords_in(&cg, &basis, &g4)),
    )?;
    let fixed: [(&[usize], &[[i64; 3]]); 5] = [
        (&[1, 2], &[[0, 1, 0], [0, 0, 1], [1, 1, 0]]),
        (&[0, 4], &[[0, 1, 0], [1, 0, 0], [0, 1, 1]]),
        (&[2, 3], &[[0, 0, 1], [1, 1, 0], [0, 1, 1]]),
        (&[3, 4], &[[1, 0, 0], [1, 1, 0], [0, 1, 1]]),
        (&[0, 1], &[[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
    ];
    for (rays, gens) in fixed {
        let c = Cone::new(rays.to_vec());
        let g = gamma_monoid(&f, &c, &cg).map_err(|e| e.to_string())?;
        ensure(coords_in(&cg, &basis, &g) == set(gens), || format!("Γ({c}) differs"))?;
        ensure(!monoids_equal(&g4, &g, DEFAULT_SEARCH_BOUND).unwrap(), || {
            format!("Γ(σ_4) = Γ({c})")
        })?;
    }
    let report = classify_euler_orbits(&f, DEFAULT_SEARCH_BOUND).map_err(|e| e.to_string())?;
    let r4 = report.record(&Cone::new(vec![3])).unwrap();
    ensure(r4.smooth && r4.euler == Some(false), || "O_σ4 not smooth non-Euler".into())?;
    ensure(
        report.record(&Cone::trivial()).unwrap().euler == Some(true),
        || "open orbit not Euler".into(),
    )?;
    ensure(is_euler_symmetric(EulerInput::Fan(&f)).unwrap(), || "not Euler-symmetric".into())?;
    Ok("Cl = Z^3 with stated relations; Γ(σ_4) exact and distinct from the 5 fixed-point monoids; O_σ4 smooth, not Euler; open orbit Euler; Euler-symmetric".into())
}

// ------------------------------------------------------------ polygons

fn cross_criterion_suite() -> Outcome {
    let polys = common::random_polygons(N_RANDOM_POLYGONS, common::POLYGON_SEED);
    let mut mismatches = Vec::new();
    let mut yes = 0;
    for (i, p) in polys.iter().enumerate() {
        let inscribed = is_inscribed_in_rectangle(p).is_some();
        let additive = admits_additive_action(&normal_fan(p).unwrap()).unwrap().is_some();
        let symmetric = is_euler_symmetric(EulerInput::Polytope(p)).unwrap();
        if inscribed {
            yes += 1;
        }
        if !(inscribed == additive && additive == symmetric) {
            mismatches.push(format!("polygon #{i} {:?}", p.vertices()));
        }
    }
    ensure(polys.len() >= 200, || format!("only {} polygons", polys.len()))?;
    ensure(mismatches.is_empty(), || {
        format!("{} mismatches, first: {}", mismatches.len(), mismatches[0])
    })?;
    Ok(format!(
        "{} polygons in [0,{}]^2 ({yes} inscribed, {} not); 0 mismatches",
        polys.len(),
        common::POLYGON_COORD_MAX,
        polys.len() - yes
    ))
}

// --------------------------------------------------------------- roots

fn brute_force_roots(f: &Fan) -> BTreeSet<(usize, Vec<i64>)> {
    let rays: Vec<Vec<i64>> = f.rays().iter().map(|r| i64s(r.generator())).collect();
    let mut out = BTreeSet::new();
    for x in -ROOT_BOX_RADIUS..=ROOT_BOX_RADIUS {
        for y in -ROOT_BOX_RADIUS..=ROOT_BOX_RADIUS {
            let vals: Vec<i64> = rays.iter().map(|p| p[0] * x + p[1] * y).collect();
            let neg: Vec<usize> = (0..vals.len()).filter(|&i| vals[i] < 0).collect();
            if neg.len() == 1 && vals[neg[0]] == -1 {
                out.insert((neg[0], vec![x, y]));
            }
        }
    }
    out
}

fn roots_suite() -> Outcome {
    let corpus = common::fan_corpus_2d(N_NORMAL_FANS, N_RANDOM_FANS);
    ensure(corpus.len() >= MIN_FAN_CORPUS, || format!("corpus has {} fans", corpus.len()))?;
    let mut total = 0;
    for (name, f) in &corpus {
        let got: BTreeSet<(usize, Vec<i64>)> = demazure_roots(f)
            .map_err(|e| format!("{name}: {e}"))?
            .into_iter()
            .map(|r| (r.distinguished, i64s(&r.e)))
            .collect();
        let want = brute_force_roots(f);
        ensure(got == want, || {
            format!(
                "{name}: extra {:?}, missing {:?}",
                got.difference(&want).collect::<Vec<_>>(),
                want.difference(&got).collect::<Vec<_>>()
            )
        })?;
        total += got.len();
    }
    let n11 = demazure_roots(&common::p1xp1()).unwrap().len();
    let n2 = demazure_roots(&common::p2()).unwrap().len();
    ensure(n11 == 4, || format!("P1xP1 has {n11} roots"))?;
    ensure(n2 == 6, || format!("P2 has {n2} roots"))?;
    Ok(format!(
        "{} fans, {total} roots, equal to the box oracle (radius {ROOT_BOX_RADIUS}); P1xP1: 4, P2: 6",
        corpus.len()
    ))
}

// ------------------------------------------------------------ algebra

fn det_i128(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det_i128(&minor)
        })
        .sum()
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n))
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&i| m & (1 << i) != 0).collect())
        .collect()
}

/// Invariant factors from determinantal divisors.
fn determinantal_invariants(a: &[Vec<i64>]) -> Vec<i128> {
    let m = a.len();
    let n = a[0].len();
    let mut prev = 1i128;
    let mut out = Vec::new();
    for k in 1..=m.min(n) {
        let mut g = 0i128;
        for rows in subsets(m, k) {
            for cols in subsets(n, k) {
                let minor: Vec<Vec<i128>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| a[i][j] as i128).collect())
                    .collect();
                g = gcd(g, det_i128(&minor));
            }
        }
        if g == 0 {
            break;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}

fn snf_suite() -> Outcome {
    let mut rng = common::rng(SNF_SEED);
    let mut nonsingular = 0;
    for t in 0..N_SNF_MATRICES {
        let m = rng.gen_range(1..=SNF_MAX_SIZE);
        let n = rng.gen_range(1..=SNF_MAX_SIZE);
        let rows: Vec<Vec<i64>> = (0..m)
            .map(|_| (0..n).map(|_| rng.gen_range(-SNF_ENTRY_MAX..=SNF_ENTRY_MAX)).collect())
            .collect();
        let flat: Vec<i64> = rows.concat();
        let a = IntMatrix::from_i64(m, n, &flat);
        let d = snf(&a);
        let ctx = || format!("matrix #{t} {rows:?}");
        ensure(&(&d.u * &a) * &d.v == d.s, || format!("{}: U·A·V != S", ctx()))?;
        ensure(d.u.det().unwrap().abs().is_one(), || format!("{}: |det U| != 1", ctx()))?;
        ensure(d.v.det().unwrap().abs().is_one(), || format!("{}: |det V| != 1", ctx()))?;
        ensure(&d.u * &d.u_inv == IntMatrix::identity(m), || format!("{}: U·U^-1 != I", ctx()))?;
        for i in 0..m {
            for j in 0..n {
                let x = &d.s[(i, j)];
                let expected = if i == j && i < d.invariants.len() {
                    d.invariants[i].clone()
                } else {
                    BigInt::zero()
                };
                ensure(*x == expected, || format!("{}: S not diagonal", ctx()))?;
            }
        }
        for w in d.invariants.windows(2) {
            ensure((&w[1] % &w[0]).is_zero() && w[0].is_positive(), || {
                format!("{}: divisibility chain broken", ctx())
            })?;
        }
        let oracle = determinantal_invariants(&rows);
        let got: Vec<i128> = d.invariants.iter().map(|x| x.to_i128().unwrap()).collect();
        ensure(got == oracle, || format!("{}: invariants {got:?} vs minors {oracle:?}", ctx()))?;
        if m == n {
            let det = a.det().unwrap();
            if !det.is_zero() {
                nonsingular += 1;
                let prod: BigInt = d.invariants.iter().product();
                ensure(prod == det.abs(), || format!("{}: Π d_i != |det A|", ctx()))?;
            }
        }
    }
    Ok(format!(
        "{N_SNF_MATRICES} matrices up to {SNF_MAX_SIZE}x{SNF_MAX_SIZE}, entries in [-{SNF_ENTRY_MAX},{SNF_ENTRY_MAX}]; invariants match determinantal divisors; {nonsingular} square nonsingular"
    ))
}

// ------------------------------------------------------ very ampleness

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn cross3(a: &[i64], b: &[i64]) -> Vec<i64> {
    vec![
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Inner facet normals of the cone generated by `gens` (dimension 2 or 3).
fn cone_normals(gens: &[Vec<i64>], dim: usize) -> Vec<Vec<i64>> {
    let mut cands = Vec::new();
    if dim == 2 {
        for g in gens {
            cands.push(vec![-g[1], g[0]]);
        }
    } else {
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                cands.push(cross3(&gens[i], &gens[j]));
            }
        }
    }
    let mut out = Vec::new();
    for c in cands {
        for n in [c.clone(), c.iter().map(|x| -x).collect::<Vec<_>>()] {
            if n.iter().any(|&x| x != 0) && gens.iter().all(|g| dot(&n, g) >= 0) && !out.contains(&n)
            {
                out.push(n);
            }
        }
    }
    out
}

fn box_points(dim: usize, r: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|p| {
                (-r..=r).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// At each vertex, every lattice point of the tangent cone inside the box
/// must be a nonnegative integer combination of `(P ∩ M) − v`.
fn very_ample_oracle(p: &LatticePolytope) -> bool {
    let dim = p.dim();
    let pts: Vec<Vec<i64>> = lattice_points(p).iter().map(i64s).collect();
    let boxed = box_points(dim, VA_BOX_RADIUS);
    for v in p.vertices().iter().map(i64s) {
        let gens: Vec<Vec<i64>> = pts
            .iter()
            .map(|q| q.iter().zip(&v).map(|(a, b)| a - b).collect::<Vec<i64>>())
            .filter(|g| g.iter().any(|&x| x != 0))
            .collect();
        let normals = cone_normals(&gens, dim);
        let weight: Vec<i64> = (0..dim).map(|k| normals.iter().map(|n| n[k]).sum()).collect();
        let in_cone = |x: &[i64]| normals.iter().all(|n| dot(n, x) >= 0);
        let targets: Vec<&Vec<i64>> = boxed.iter().filter(|x| in_cone(x)).collect();
        let max_w = targets.iter().map(|x| dot(&weight, x)).max().unwrap_or(0);
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue = VecDeque::from([vec![0i64; dim]]);
        seen.insert(vec![0; dim]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y: Vec<i64> = x.iter().zip(g).map(|(a, b)| a + b).collect();
                if dot(&weight, &y) <= max_w && seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        if targets.iter().any(|x| !seen.contains(*x)) {
            return false;
        }
    }
    true
}

fn very_ample_suite() -> Outcome {
    let corpus = common::polytope_corpus();
    let mut n2 = 0;
    for (name, p) in corpus.iter().filter(|(_, p)| p.dim() == 2) {
        n2 += 1;
        ensure(is_very_ample(p), || format!("{name}: reported not very ample"))?;
        ensure(very_ample_oracle(p), || format!("{name}: box oracle disagrees"))?;
    }
    let reeve = common::data_polytope("reeve_simplex.json");
    ensure(!is_very_ample(&reeve), || "Reeve-type simplex reported very ample".into())?;
    ensure(!very_ample_oracle(&reeve), || "box oracle finds Reeve-type simplex very ample".into())?;
    let cube = common::data_polytope("unit_cube.json");
    ensure(is_very_ample(&cube) && very_ample_oracle(&cube), || "unit cube".into())?;
    Ok(format!(
        "{n2} polygons very ample, agreeing with the box oracle (radius {VA_BOX_RADIUS}); conv{{0,(1,1,0),(1,0,1),(0,1,1)}} not very ample"
    ))
}

// ------------------------------------------------------- symbol systems

fn downward_closed(exps: &BTreeSet<Vec<i64>>, n: usize) -> bool {
    exps.contains(&vec![0; n])
        && (0..n).all(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            exps.contains(&e)
        })
        && exps.iter().all(|e| {
            e.iter().all(|&x| x >= 0)
                && (0..n).filter(|&i| e[i] > 0).all(|i| {
                    let mut f = e.clone();
                    f[i] -= 1;
                    exps.contains(&f)
                })
        })
}

fn symbol_suite() -> Outcome {
    let corpus = common::polytope_corpus();
    let mut checked = 0;
    for (name, p) in &corpus {
        let Some(w) = is_inscribed_in_rectangle(p) else {
            continue;
        };
        checked += 1;
        let s = fundamental_form(p, &w).map_err(|e| format!("{name}: {e}"))?;
        ensure(is_symbol_system(&s), || format!("{name}: not a symbol system"))?;
        let exps: BTreeSet<Vec<i64>> = s.exponents.iter().map(i64s).collect();
        ensure(exps.len() == lattice_points(p).len(), || format!("{name}: size"))?;
        ensure(downward_closed(&exps, p.dim()), || format!("{name}: not downward closed"))?;

        let act = euler_action(p, &w).map_err(|e| format!("{name}: {e}"))?;
        let v0 = i64s(&w.v0);
        let edges: Vec<Vec<i64>> = w.edge_basis.iter().map(i64s).collect();
        for (m, wt) in act.points.iter().zip(&act.ambient_weights) {
            let d: Vec<i64> = i64s(m).iter().zip(&v0).map(|(a, b)| a - b).collect();
            let wt = wt.to_i64().unwrap();
            if d.iter().all(|&x| x == 0) {
                ensure(wt == 0, || format!("{name}: weight {wt} at v0"))?;
            } else if edges.contains(&d) {
                ensure(wt == 1, || format!("{name}: tangent weight {wt}"))?;
            } else {
                ensure(wt >= 1, || format!("{name}: weight {wt} at {m}"))?;
            }
            // weight equals the total degree of the exponent
            let e: i64 = exps
                .iter()
                .find(|e| {
                    (0..p.dim()).all(|k| {
                        e.iter().zip(&edges).map(|(c, g)| c * g[k]).sum::<i64>() == d[k]
                    })
                })
                .map(|e| e.iter().sum())
                .ok_or_else(|| format!("{name}: {m} has no exponent"))?;
            ensure(e == wt, || format!("{name}: weight {wt} vs degree {e}"))?;
        }
    }
    ensure(checked > 0, || "no rectangle witnesses in corpus".into())?;
    Ok(format!(
        "{checked} of {} corpus polytopes carry a rectangle witness; all symbol systems; tangent weights 1, weight 0 at v0",
        corpus.len()
    ))
}

fn main() -> ExitCode {
    // keep panics from printing backtraces between the result lines
    std::panic::set_hook(Box::new(|_| {}));
    let criteria: [Criterion; 7] = [
        ("Hirzebruch golden suite", hirzebruch_suite),
        ("Blow-up of P1xP1 golden suite", blowup_suite),
        ("Cross-criterion property suite", cross_criterion_suite),
        ("Demazure-root oracle suite", roots_suite),
        ("Exact-algebra property suite", snf_suite),
        ("Very-ampleness suite", very_ample_suite),
        ("Symbol-system suite", symbol_suite),
    ];
    let mut failed = 0;
    let total = Instant::now();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  criterion {}: {name} ({secs:.2}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {}: {name} ({secs:.2}s): {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.2}s",
        criteria.len() - failed,
        total.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
