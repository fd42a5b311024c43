//! Document-level commands shared by the command-line tool and the browser demo.
//!
//! Every command returns an [`Outcome`] holding a plain-text rendering, the same content
//! as JSON, and whether every check in its report passed.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{json, Value};
use thiserror::Error;

use crate::catpres::{validate_duality_data, validate_functor, validate_tensor_data, CatError};
use crate::coend::{nat_space, natvee, pairing_report, CoendError};
use crate::exactalg::{ExactMatrix, Field, LinearMap, Scalar};
use crate::moncat::{coherence_equal, eval_in_vec, parse_expr, perm_of, MoncatError};
use crate::report::{Check, Report};
use crate::tannaka::{
    characters as find_characters, check_comodule, check_rep_correspondence, convolution_group, endvee_antipode,
    endvee_bialgebra, lift_functor, parse_comodule_document, reconstruct as run_reconstruct, rep_of_comodule,
    rho_tilde_report, ComoduleDocument, GroupTable, NamedMorphism, TannakaError,
};

#[derive(Debug, Error)]
pub enum JobError {
    #[error(transparent)]
    Tannaka(#[from] TannakaError),
    #[error(transparent)]
    Coend(#[from] CoendError),
    #[error(transparent)]
    Category(#[from] CatError),
    #[error(transparent)]
    Moncat(#[from] MoncatError),
    #[error("{0}")]
    Usage(String),
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub passed: bool,
}

impl Outcome {
    fn new(command: &str, report: Report, text: String, mut json: Value) -> Self {
        let passed = report.all_passed();
        if let Value::Object(map) = &mut json {
            map.insert("command".into(), command.into());
            map.insert("passed".into(), passed.into());
            map.insert("report".into(), serde_json::to_value(&report).expect("reports serialize"));
        }
        Outcome { text: format!("{text}\n{report}"), json, passed }
    }

    pub fn json_string(&self) -> String {
        serde_json::to_string_pretty(&self.json).expect("values serialize")
    }
}

/// Parses a document, letting `field` override its declared field.
pub fn load(text: &str, field: Option<Field>) -> Result<ComoduleDocument, JobError> {
    Ok(parse_comodule_document(text, field)?)
}

fn matrix_block(out: &mut String, title: &str, m: &ExactMatrix) {
    let _ = writeln!(out, "{title} ({}x{}):", m.rows(), m.cols());
    for line in m.to_string().lines() {
        let _ = writeln!(out, "  {line}");
    }
}

fn vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn table_text(out: &mut String, title: &str, g: &GroupTable) {
    let _ = writeln!(out, "{title}: order {}, group {}, cyclic {}", g.order(), yes(g.is_group()), yes(g.is_cyclic()));
    for row in &g.table {
        let cells: Vec<String> = row.iter().map(|c| c.map_or("-".to_string(), |k| k.to_string())).collect();
        let _ = writeln!(out, "  {}", cells.join(" "));
    }
}

pub fn validate(cd: &ComoduleDocument) -> Result<Outcome, JobError> {
    let d = &cd.document;
    let (cat, f) = (&d.category, &d.functor);
    let mut r = Report::new("");
    r.absorb(validate_functor(cat, f));
    if let Some(t) = &d.tensor {
        let tr = validate_tensor_data(cat, f, t);
        let valid = tr.all_passed();
        r.absorb(tr);
        if let (true, Some(dual)) = (valid, &d.duality) {
            r.absorb(validate_duality_data(cat, f, t, dual));
        }
    }
    if let Some(b) = &cd.coalgebra {
        r.absorb(b.check());
        for (c, m) in &cd.coactions {
            for check in check_comodule(m, b)?.checks {
                r.checks.push(Check { name: format!("coaction at {c}: {}", check.name), ..check });
            }
        }
    }
    let mut text = String::new();
    let _ = writeln!(
        text,
        "field {}; {} objects, {} generators, {} relations",
        d.field,
        cat.objects().len(),
        cat.generators().len(),
        cat.relations().len()
    );
    let _ = writeln!(
        text,
        "tensor {}, duality {}, coalgebra {}",
        yes(d.tensor.is_some()),
        yes(d.duality.is_some()),
        cd.coalgebra.as_ref().map_or("no".to_string(), |b| format!("dim {}", b.dim))
    );
    let json = json!({
        "field": d.field.to_string(),
        "objects": cat.objects(),
        "generators": cat.generators().len(),
        "relations": cat.relations().len(),
        "tensor": d.tensor.is_some(),
        "duality": d.duality.is_some(),
        "coalgebra_dim": cd.coalgebra.as_ref().map(|b| b.dim),
    });
    Ok(Outcome::new("validate", r, text, json))
}

pub fn reconstruct(cd: &ComoduleDocument) -> Result<Outcome, JobError> {
    let rec = run_reconstruct(cd)?;
    let mut text = String::new();
    let s = &rec.coend;
    let _ = writeln!(
        text,
        "End^∨(F) over {}: ambient {}, relations {}, dim {}",
        cd.document.field, s.ambient_dim, s.relation_rank, s.quotient_dim
    );
    for (i, label) in s.basis.iter().enumerate() {
        let _ = writeln!(text, "  x{i} = {label}");
    }
    matrix_block(&mut text, "Δ", rec.coalgebra.delta.matrix());
    matrix_block(&mut text, "ε", rec.coalgebra.eps.matrix());
    if let Some(a) = &rec.algebra {
        matrix_block(&mut text, "m", a.m.matrix());
        matrix_block(&mut text, "u", a.u.matrix());
    }
    if let Some(a) = &rec.antipode {
        matrix_block(&mut text, "antipode", a.matrix());
    }
    match &rec.grouplikes {
        Some(gl) => {
            let _ = writeln!(text, "grouplikes: {}", gl.len());
            for v in gl {
                let _ = writeln!(text, "  {}", vector(v));
            }
        }
        None => {
            let _ = writeln!(text, "grouplikes: not computed over this field");
        }
    }
    if let Some(g) = &rec.grouplike_group {
        table_text(&mut text, "grouplikes under m", g);
    }
    if let Some(chars) = &rec.characters {
        let _ = writeln!(text, "characters: {}", chars.len());
        for chi in chars {
            let _ = writeln!(text, "  {}", vector(chi.matrix().row(0)));
        }
    }
    if let Some(g) = &rec.character_group {
        table_text(&mut text, "characters under convolution", g);
    }
    let report = rec.report.clone();
    let mut json = serde_json::to_value(&rec).expect("reconstruction serializes");
    json["field"] = d_field(cd);
    Ok(Outcome::new("reconstruct", report, text, json))
}

fn d_field(cd: &ComoduleDocument) -> Value {
    Value::String(cd.document.field.to_string())
}

pub fn lift(cd: &ComoduleDocument) -> Result<Outcome, JobError> {
    let d = &cd.document;
    let p = natvee(&d.category, &d.functor, &d.functor)?;
    let lift = lift_functor(&d.category, &d.functor, &p)?;
    let mut text = String::new();
    let _ = writeln!(text, "End^∨(F): dim {}", lift.coalgebra.dim);
    for (c, m) in &lift.comodules {
        matrix_block(&mut text, &format!("ρ at {c}"), m.rho.matrix());
    }
    let coactions: BTreeMap<&String, &LinearMap> = lift.comodules.iter().map(|(c, m)| (c, &m.rho)).collect();
    let json = json!({ "field": d_field(cd), "coalgebra": lift.coalgebra, "coactions": coactions });
    Ok(Outcome::new("lift", lift.report, text, json))
}

pub fn rho_tilde(cd: &ComoduleDocument) -> Result<Outcome, JobError> {
    let rt = rho_tilde_report(cd)?;
    let mut text = String::new();
    let _ = writeln!(
        text,
        "ρ̃: End^∨(F) (dim {}) → B (dim {}), rank {}, surjective {}, bijective {}",
        rt.domain_dim,
        rt.codomain_dim,
        rt.rank,
        yes(rt.surjective),
        yes(rt.bijective)
    );
    matrix_block(&mut text, "ρ̃", rt.map.matrix());
    let report = rt.report.clone();
    let mut json = serde_json::to_value(&rt).expect("report serializes");
    json["field"] = d_field(cd);
    Ok(Outcome::new("rho-tilde", report, text, json))
}

pub fn nat(cd: &ComoduleDocument) -> Result<Outcome, JobError> {
    let d = &cd.document;
    let (cat, f) = (&d.category, &d.functor);
    let p = natvee(cat, f, f)?;
    let space = nat_space(cat, f, f);
    let report = pairing_report(cat, f, f, &p)?;
    let mut text = String::new();
    let s = p.summary();
    let _ = writeln!(text, "Nat^∨(F,F): dim {} (ambient {}, relations {})", s.quotient_dim, s.ambient_dim, s.relation_rank);
    let _ = writeln!(text, "Nat(F,F): dim {}", space.dim);
    for (k, theta) in space.basis.iter().enumerate() {
        for (c, m) in theta {
            matrix_block(&mut text, &format!("θ{k} at {c}"), m.matrix());
        }
    }
    let json = json!({ "field": d_field(cd), "coend": s, "nat": space });
    Ok(Outcome::new("nat", report, text, json))
}

pub fn characters(cd: &ComoduleDocument) -> Result<Outcome, JobError> {
    let d = &cd.document;
    let (cat, f) = (&d.category, &d.functor);
    let t = d.tensor.as_ref().ok_or_else(|| JobError::Usage("characters need a tensor section".into()))?;
    let mut r = Report::new("");
    let tr = validate_tensor_data(cat, f, t);
    if !tr.all_passed() {
        r.absorb(tr);
        return Ok(Outcome::new("characters", r, "tensor data is invalid\n".into(), json!({ "field": d_field(cd) })));
    }
    let p = natvee(cat, f, f)?;
    let b = endvee_bialgebra(cat, f, t, &p)?;
    r.absorb(b.check());
    let chars = find_characters(&b, None)?;
    let lift = lift_functor(cat, f, &p)?;
    let morphisms: Vec<NamedMorphism> = cat
        .generators()
        .iter()
        .map(|g| NamedMorphism {
            name: format!("F({})", g.name),
            src: g.src.clone(),
            dst: g.dst.clone(),
            map: f.generator_map(&g.name).clone(),
        })
        .collect();
    r.absorb(check_rep_correspondence(&lift.comodules, &morphisms, &chars, &b.coalgebra)?);
    let mut group = None;
    if let Some(dual) = &d.duality {
        let dr = validate_duality_data(cat, f, t, dual);
        if dr.all_passed() {
            let h = endvee_antipode(cat, f, t, dual, &p)?;
            let g = convolution_group(&chars, &h)?;
            r.absorb(g.report.clone());
            group = Some(g);
        } else {
            r.absorb(dr);
        }
    }

    let mut text = String::new();
    let mut actions = Vec::new();
    let _ = writeln!(text, "characters of End^∨(F) over {}: {}", d.field, chars.len());
    for (i, chi) in chars.iter().enumerate() {
        let _ = writeln!(text, "χ{i} = {}", vector(chi.matrix().row(0)));
        let mut on = BTreeMap::new();
        for (c, m) in &lift.comodules {
            let theta = rep_of_comodule(m, chi)?;
            matrix_block(&mut text, &format!("  θ(χ{i}) at {c}"), theta.matrix());
            on.insert(c.clone(), theta);
        }
        actions.push(on);
    }
    if let Some(g) = &group {
        table_text(&mut text, "convolution group", g);
    }
    let json = json!({ "field": d_field(cd), "characters": chars, "actions": actions, "group": group });
    Ok(Outcome::new("characters", r, text, json))
}

/// Decides whether two symmetry expressions are equal; with `dims`, also evaluates both
/// as matrices over `field` and checks that the two answers agree.
pub fn coherence(
    left: &str,
    right: &str,
    dims: Option<&BTreeMap<String, usize>>,
    field: Field,
) -> Result<Outcome, JobError> {
    let (a, b) = (parse_expr(left)?, parse_expr(right)?);
    let equal = coherence_equal(&a, &b)?;
    let (pa, pb) = (perm_of(&a)?, perm_of(&b)?);
    let mut r = Report::new("");
    r.check("same underlying permutation", equal, (!equal).then(|| format!("{:?} vs {:?}", pa.0, pb.0)));
    let mut text = String::new();
    let _ = writeln!(text, "left:  {a}");
    let _ = writeln!(text, "right: {b}");
    let _ = writeln!(text, "{} → {}", a.domain(), a.codomain()?);
    let _ = writeln!(text, "permutations: {:?} {:?}", pa.0, pb.0);
    let _ = writeln!(text, "equal: {}", yes(equal));
    let mut matrices_equal = None;
    if let Some(dims) = dims {
        let same = eval_in_vec(&a, dims, field)? == eval_in_vec(&b, dims, field)?;
        r.check("matrix evaluation agrees", same == equal, None);
        let assignment: Vec<String> = dims.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(text, "matrices over {field} at {}: {}", assignment.join(","), if same { "equal" } else { "different" });
        matrices_equal = Some(same);
    }
    let json = json!({
        "left": a.to_string(),
        "right": b.to_string(),
        "domain": a.domain().to_string(),
        "codomain": a.codomain()?.to_string(),
        "permutations": [pa.0, pb.0],
        "equal": equal,
        "matrices_equal": matrices_equal,
    });
    Ok(Outcome::new("coherence", r, text, json))
}

/// Reads `A=2,B=3`.
pub fn parse_dims(text: &str) -> Result<BTreeMap<String, usize>, JobError> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|pair| {
            let (k, v) = pair.split_once('=').ok_or_else(|| JobError::Usage(format!("expected ATOM=DIM, got {pair:?}")))?;
            let n = v.trim().parse().map_err(|_| JobError::Usage(format!("bad dimension in {pair:?}")))?;
            Ok((k.trim().to_string(), n))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn doc(name: &str) -> ComoduleDocument {
        load(fixtures::get(name).unwrap(), None).unwrap()
    }

    #[test]
    fn validate_passes_and_fails() {
        assert!(validate(&doc("z2_regular")).unwrap().passed);
        assert!(validate(&doc("empty")).unwrap().passed);
        let broken = validate(&doc("broken_relation")).unwrap();
        assert!(!broken.passed);
        assert!(broken.text.contains("relation g.g = id_*"));
    }

    #[test]
    fn reconstruct_json_has_dimension() {
        let o = reconstruct(&doc("z2_characters")).unwrap();
        assert!(o.passed);
        assert_eq!(o.json["coend"]["quotient_dim"], 2);
        assert_eq!(o.json["character_group"]["table"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn characters_of_the_character_category() {
        let o = characters(&doc("z2_characters")).unwrap();
        assert!(o.passed, "{}", o.text);
        assert_eq!(o.json["characters"].as_array().unwrap().len(), 2);
        assert!(characters(&doc("z2_regular")).is_err());
    }

    #[test]
    fn coherence_with_dims() {
        let dims = parse_dims("A=2,B=3").unwrap();
        let o = coherence("(swap[A,B;0] ; swap[B,A;0])", "id[A,B]", Some(&dims), Field::Rational).unwrap();
        assert!(o.passed);
        assert_eq!(o.json["matrices_equal"], true);
        let o = coherence("swap[A,A;0]", "id[A,A]", Some(&parse_dims("A=2").unwrap()), Field::Rational).unwrap();
        assert!(!o.passed);
        assert_eq!(o.json["equal"], false);
        assert!(parse_dims("A2").is_err());
    }

    #[test]
    fn nat_reports_the_bijection() {
        let o = nat(&doc("z2_regular")).unwrap();
        assert!(o.passed);
        assert_eq!(o.json["nat"]["dim"], 2);
    }
}
