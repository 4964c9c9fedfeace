use std::path::Path;

use serde_json::{json, Value};
use thiserror::Error;
use toric_core::classgroup::{ClassElement, ClassGroup, OrbitAnalysis};
use toric_core::euler::{
    classify_with, euler_action, fundamental_form, is_euler_symmetric, is_symbol_system,
    EulerInput,
};
use toric_core::fan::{
    admits_additive_action, complete_collections, demazure_roots, require_complete, validate_fan,
    Completeness, Fan, FanDiagnostics,
};
use toric_core::polytope::{
    facets, is_inscribed_in_rectangle, is_very_ample, lattice_points, normal_fan,
    saturation_defect, LatticePolytope,
};

use crate::input::{fan_doc, load_fan, load_polytope, render_fan_doc, InputError};
use crate::report::{self, Report};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Core(#[from] toric_core::Error),
    #[error("{0}")]
    Output(String),
}

impl CliError {
    /// 1 for invalid input, 2 for inconclusive analyses.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(
                toric_core::Error::Inconclusive(_) | toric_core::Error::CompletenessUnverified(_),
            ) => 2,
            _ => 1,
        }
    }

    pub fn status(&self) -> &'static str {
        if self.exit_code() == 2 {
            "inconclusive"
        } else {
            "invalid_input"
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// What a command produced: a report, or a raw document to print as-is.
pub enum Output {
    Report(Report),
    Document(String),
}

fn completeness_name(c: Completeness) -> &'static str {
    match c {
        Completeness::Verified => "verified",
        Completeness::Asserted => "asserted",
        Completeness::Unverified => "unverified",
    }
}

fn fan_diagnostics(r: &mut Report, f: &Fan, d: &FanDiagnostics) {
    r.diagnostic("completeness", Value::from(completeness_name(d.completeness)));
    r.diagnostic("dim", Value::from(f.dim()));
    r.diagnostic("n_rays", Value::from(d.n_rays));
    r.diagnostic("n_max_cones", Value::from(d.n_max_cones));
    r.diagnostic("simplicial", Value::from(d.simplicial));
    r.diagnostic("notes", json!(d.notes));
    r.line(format!(
        "fan: dim {}, {} rays, {} maximal cones, completeness {}",
        f.dim(),
        d.n_rays,
        d.n_max_cones,
        completeness_name(d.completeness)
    ));
    for n in &d.notes {
        r.line(format!("note: {n}"));
    }
}

fn checked_fan(path: &Path, command: &'static str) -> CliResult<(Fan, Report)> {
    let (f, bytes) = load_fan(path)?;
    let mut r = Report::new(command, &bytes);
    let d = validate_fan(&f)?;
    fan_diagnostics(&mut r, &f, &d);
    Ok((f, r))
}

fn polytope_report(path: &Path, command: &'static str) -> CliResult<(LatticePolytope, Report)> {
    let (p, bytes) = load_polytope(path)?;
    let mut r = Report::new(command, &bytes);
    r.diagnostic("dim", Value::from(p.dim()));
    r.diagnostic("n_vertices", Value::from(p.vertices().len()));
    r.diagnostic("n_facets", Value::from(facets(&p).len()));
    r.diagnostic("n_lattice_points", Value::from(lattice_points(&p).len()));
    r.line(format!(
        "polytope: dim {}, {} vertices, {} facets",
        p.dim(),
        p.vertices().len(),
        facets(&p).len()
    ));
    Ok((p, r))
}

pub fn check_additive(path: &Path) -> CliResult<Output> {
    let (f, mut r) = checked_fan(path, "check-additive")?;
    let found = admits_additive_action(&f)?;
    r.diagnostic(
        "n_complete_collections",
        Value::from(complete_collections(&f)?.len()),
    );
    r.verdict("admits_additive_action", found.is_some());
    match found {
        Some(c) => {
            r.witness(
                "complete_collection",
                json!({
                    "basis_rays": report::indices(&c.basis_rays),
                    "roots": c.roots.iter().map(|e| json!({
                        "ray": e.distinguished,
                        "e": report::vector(&e.e),
                    })).collect::<Vec<_>>(),
                }),
            );
            r.line("admits an additive action: yes");
            let names: Vec<String> = c.basis_rays.iter().map(|i| format!("ρ{}", i + 1)).collect();
            r.line(format!("complete collection on rays {}", names.join(", ")));
            for e in &c.roots {
                r.line(format!("  ρ{}: e = {}", e.distinguished + 1, e.e));
            }
        }
        None => r.line("admits an additive action: no"),
    }
    Ok(Output::Report(r))
}

pub fn roots(path: &Path) -> CliResult<Output> {
    let (f, mut r) = checked_fan(path, "demazure-roots")?;
    let roots = demazure_roots(&f)?;
    r.diagnostic("n_roots", Value::from(roots.len()));
    r.witness(
        "roots",
        Value::Array(
            roots
                .iter()
                .map(|e| json!({ "ray": e.distinguished, "e": report::vector(&e.e) }))
                .collect(),
        ),
    );
    r.line(format!("{} Demazure roots", roots.len()));
    for rho in 0..f.n_rays() {
        let es: Vec<String> = roots
            .iter()
            .filter(|e| e.distinguished == rho)
            .map(|e| e.e.to_string())
            .collect();
        r.line(format!("  ρ{}: {}", rho + 1, if es.is_empty() { "none".into() } else { es.join(" ") }));
    }
    Ok(Output::Report(r))
}

fn class_group_section(r: &mut Report, f: &Fan, cg: &ClassGroup) {
    r.diagnostic("free_rank", Value::from(cg.free_rank()));
    r.diagnostic("torsion", report::ints(cg.torsion()));
    r.witness(
        "divisor_classes",
        Value::Array(cg.divisor_classes().iter().map(report::class).collect()),
    );
    let torsion: Vec<String> = cg.torsion().iter().map(|d| format!(" ⊕ Z/{d}")).collect();
    r.line(format!("Cl(X) ≅ Z^{}{}", cg.free_rank(), torsion.concat()));
    match cg.ray_basis_relations(f) {
        Some((basis, relations)) => {
            let names: Vec<String> = basis.iter().map(|&i| report::divisor(i)).collect();
            r.line(format!("freely generated by {}", names.join(", ")));
            for (i, coords) in &relations {
                r.line(format!("  {} = {}", report::divisor(*i), report::combination(&basis, coords)));
            }
            r.witness(
                "relations",
                json!({
                    "basis": report::indices(&basis),
                    "expressions": relations.iter().map(|(i, c)| json!({
                        "ray": i,
                        "coordinates": report::ints(c),
                    })).collect::<Vec<_>>(),
                }),
            );
        }
        None => {
            for (i, c) in cg.divisor_classes().iter().enumerate() {
                r.line(format!("  {} = {}", report::divisor(i), c));
            }
        }
    }
}

pub fn class_group(path: &Path) -> CliResult<Output> {
    let (f, mut r) = checked_fan(path, "class-group")?;
    let cg = toric_core::classgroup::class_group(&f)?;
    class_group_section(&mut r, &f, &cg);
    Ok(Output::Report(r))
}

/// Renders a class in the ray basis when one exists.
fn class_text(cg: &ClassGroup, basis: Option<&[usize]>, c: &ClassElement) -> String {
    basis
        .and_then(|b| cg.coordinates(b, c).ok())
        .map(|coords| {
            let parts: Vec<String> = coords.iter().map(ToString::to_string).collect();
            format!("({})", parts.join(","))
        })
        .unwrap_or_else(|| c.to_string())
}

pub fn orbits(path: &Path, search_bound: usize) -> CliResult<Output> {
    let (f, mut r) = checked_fan(path, "orbits")?;
    require_complete(&f)?;
    let a = OrbitAnalysis::new(&f, search_bound)?;
    let cg = &a.class_group;
    class_group_section(&mut r, &f, cg);
    let basis = cg.ray_basis_relations(&f).map(|(b, _)| b);
    if let Some(b) = &basis {
        let names: Vec<String> = b.iter().map(|&i| report::divisor(i)).collect();
        r.line(format!("monoid generators in the basis ({})", names.join(", ")));
    }

    let ups = &a.upsilon;
    let sizes = ups.class_sizes();
    r.diagnostic("n_cones", Value::from(ups.cones.len()));
    r.diagnostic("upsilon_class_sizes", json!(sizes));
    r.line(format!("Υ(Δ): {} distinct monoids over {} cones", ups.representatives.len(), ups.cones.len()));
    let mut monoids = Vec::new();
    for (k, rep) in ups.representatives.iter().enumerate() {
        let gens: Vec<String> = rep
            .generators
            .iter()
            .map(|g| class_text(cg, basis.as_deref(), g))
            .collect();
        let cones = ups.cones_in_class(k);
        r.line(format!("  M{} = ⟨{}⟩: {} cones: {}", k + 1, gens.join(", "), cones.len(), report::labels(&cones)));
        monoids.push(json!({
            "generators": rep.generators.iter().map(report::class).collect::<Vec<_>>(),
            "cones": cones.iter().map(|c| report::cone(c)).collect::<Vec<_>>(),
        }));
    }
    r.witness("upsilon", Value::Array(monoids));
    r.diagnostic("n_automorphisms", Value::from(a.automorphisms.len()));
    r.line(format!("admissible automorphisms of Cl(X): {}", a.automorphisms.len()));

    let classes = a.orbit_classes()?;
    r.diagnostic("n_orbit_classes", Value::from(classes.len()));
    r.line(format!("Aut(X)-orbit classes of torus orbits: {}", classes.len()));
    for c in &classes {
        let refs: Vec<_> = c.iter().collect();
        r.line(format!("  {{{}}}", report::labels(&refs)));
    }
    r.witness(
        "orbit_classes",
        Value::Array(
            classes
                .iter()
                .map(|c| Value::Array(c.iter().map(report::cone).collect()))
                .collect(),
        ),
    );

    let euler = classify_with(&f, &a)?;
    r.line("orbits:");
    let mut records = Vec::new();
    for rec in &euler.records {
        let status = match rec.euler {
            None => "singular".to_string(),
            Some(false) => "smooth, not Euler".to_string(),
            Some(true) => {
                let (t, w) = rec.witness.as_ref().expect("euler flag carries a witness");
                format!("smooth, Euler (equivalent to {} via {})", t.label(), report::permutation(&w.ray_permutation))
            }
        };
        r.line(format!("  {}: {}", rec.cone.label(), status));
        records.push(json!({
            "cone": report::cone(&rec.cone),
            "smooth": rec.smooth,
            "euler": rec.euler,
            "witness": rec.witness.as_ref().map(|(t, w)| json!({
                "fixed_point_cone": report::cone(t),
                "ray_permutation": report::indices(&w.ray_permutation),
                "automorphism": report::matrix(&w.automorphism),
            })),
        }));
    }
    r.witness("orbits", Value::Array(records));
    r.verdict("all_smooth_orbits_euler", euler.records.iter().all(|x| x.euler != Some(false)));
    r.verdict(
        "open_orbit_euler",
        euler.record(&toric_core::fan::Cone::trivial()).and_then(|x| x.euler) == Some(true),
    );
    Ok(Output::Report(r))
}

pub fn check_inscribed(path: &Path) -> CliResult<Output> {
    let (p, mut r) = polytope_report(path, "check-inscribed")?;
    let w = is_inscribed_in_rectangle(&p);
    r.verdict("inscribed_in_rectangle", w.is_some());
    match w {
        Some(w) => {
            r.witness(
                "rectangle",
                json!({
                    "v0": report::vector(&w.v0),
                    "edge_basis": w.edge_basis.iter().map(report::vector).collect::<Vec<_>>(),
                }),
            );
            let es: Vec<String> = w.edge_basis.iter().map(ToString::to_string).collect();
            r.line(format!("inscribed in a rectangle: yes (vertex {}, edges {})", w.v0, es.join(" ")));
        }
        None => r.line("inscribed in a rectangle: no"),
    }
    Ok(Output::Report(r))
}

pub fn check_very_ample(path: &Path) -> CliResult<Output> {
    let (p, mut r) = polytope_report(path, "check-very-ample")?;
    let ample = is_very_ample(&p);
    r.verdict("very_ample", ample);
    if ample {
        r.line("very ample: yes");
    } else {
        for v in p.vertices() {
            if let Some(d) = saturation_defect(&p, v)? {
                r.witness(
                    "saturation_defect",
                    json!({ "vertex": report::vector(v), "point": report::vector(&d) }),
                );
                r.line(format!(
                    "very ample: no (at vertex {v}, {d} lies in the cone but not in the semigroup)"
                ));
                break;
            }
        }
    }
    Ok(Output::Report(r))
}

pub fn normal_fan_cmd(path: &Path, json_out: bool) -> CliResult<Output> {
    let (p, mut r) = polytope_report(path, "normal-fan")?;
    let f = normal_fan(&p)?;
    let doc = fan_doc(&f).ok_or_else(|| CliError::Output("ray coordinates exceed 64 bits".into()))?;
    if !json_out {
        return Ok(Output::Document(render_fan_doc(&doc)));
    }
    r.witness("fan", serde_json::to_value(&doc).map_err(|e| CliError::Output(e.to_string()))?);
    Ok(Output::Report(r))
}

pub fn fundamental(path: &Path) -> CliResult<Output> {
    let (p, mut r) = polytope_report(path, "fundamental-form")?;
    let Some(w) = is_inscribed_in_rectangle(&p) else {
        r.verdict("inscribed_in_rectangle", false);
        r.line("not inscribed in a rectangle: no monomial fundamental form");
        return Ok(Output::Report(r));
    };
    r.verdict("inscribed_in_rectangle", true);
    let s = fundamental_form(&p, &w)?;
    let act = euler_action(&p, &w)?;
    r.verdict("symbol_system", is_symbol_system(&s));
    let es: Vec<String> = w.edge_basis.iter().map(ToString::to_string).collect();
    r.line(format!("vertex {}, edge basis {}", w.v0, es.join(" ")));
    let mut graded = serde_json::Map::new();
    for (k, exps) in s.grading() {
        let strs: Vec<String> = exps.iter().map(ToString::to_string).collect();
        r.line(format!("  F^{k}: {}", strs.join(" ")));
        graded.insert(k.to_string(), Value::Array(exps.iter().map(report::vector).collect()));
    }
    r.witness("graded_exponents", Value::Object(graded));
    r.witness(
        "euler_action",
        json!({
            "lambda": report::vector(&act.lambda),
            "points": act.points.iter().map(report::vector).collect::<Vec<_>>(),
            "weights": report::ints(&act.ambient_weights),
        }),
    );
    r.line(format!("Euler one-parameter subgroup λ = {}", act.lambda));
    Ok(Output::Report(r))
}

pub fn euler_symmetric(fan: Option<&Path>, polytope: Option<&Path>) -> CliResult<Output> {
    match (fan, polytope) {
        (Some(path), None) => {
            let (f, mut r) = checked_fan(path, "euler-symmetric")?;
            let v = is_euler_symmetric(EulerInput::Fan(&f))?;
            r.verdict("euler_symmetric", v);
            r.line(format!("Euler-symmetric: {}", if v { "yes" } else { "no" }));
            Ok(Output::Report(r))
        }
        (None, Some(path)) => {
            let (p, mut r) = polytope_report(path, "euler-symmetric")?;
            let v = is_euler_symmetric(EulerInput::Polytope(&p))?;
            r.verdict("euler_symmetric", v);
            r.line(format!("Euler-symmetric: {}", if v { "yes" } else { "no" }));
            Ok(Output::Report(r))
        }
        _ => Err(CliError::Output("exactly one of --fan and --polytope is required".into())),
    }
}
