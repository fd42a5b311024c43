use serde::Serialize;

use super::convolution::{characters, convolution_group, grouplike_group, grouplikes, GroupTable};
use super::endvee::{antipode_descended, multiplication_descended, require, unit_map};
use super::{
    rho_tilde, rho_tilde_descended, AlgebraData, BialgebraData, CoalgebraData, ComoduleDocument, HopfData, TannakaError,
};
use crate::catpres::{validate_duality_data, validate_functor, validate_tensor_data};
use crate::coend::{cocomposition_descended, counit_descended, natvee, CoendSummary, DescendedMap};
use crate::exactalg::{LinearMap, Scalar};
use crate::report::Report;

/// Everything computed for one document.
#[derive(Clone, Debug, Serialize)]
pub struct Reconstruction {
    pub coend: CoendSummary,
    pub coalgebra: CoalgebraData,
    pub algebra: Option<AlgebraData>,
    pub antipode: Option<LinearMap>,
    pub grouplikes: Option<Vec<Vec<Scalar>>>,
    pub grouplike_group: Option<GroupTable>,
    pub characters: Option<Vec<LinearMap>>,
    pub character_group: Option<GroupTable>,
    pub report: Report,
}

fn record(r: &mut Report, what: &str, d: &DescendedMap) {
    r.check_zero(format!("{what} kills the relation span"), &d.residue);
}

/// `End^∨(F)` with every structure the document supports, and all axioms checked.
pub fn reconstruct(cd: &ComoduleDocument) -> Result<Reconstruction, TannakaError> {
    let d = &cd.document;
    let (cat, f) = (&d.category, &d.functor);
    let mut report = Report::new("reconstruct");
    report.absorb(validate_functor(cat, f));
    let p = natvee(cat, f, f)?;

    let delta = cocomposition_descended(&p, &p, &p)?;
    let eps = counit_descended(&p)?;
    record(&mut report, "Δ", &delta);
    record(&mut report, "ε", &eps);
    let coalgebra = CoalgebraData::new(require("Δ", delta)?, require("ε", eps)?)?;
    report.absorb(coalgebra.check());

    let mut bialgebra = None;
    if let Some(t) = &d.tensor {
        let tr = validate_tensor_data(cat, f, t);
        let valid = tr.all_passed();
        report.absorb(tr);
        if valid {
            let m = multiplication_descended(cat, f, t, &p)?;
            record(&mut report, "m", &m);
            let b = BialgebraData::new(coalgebra.clone(), AlgebraData::new(require("m", m)?, unit_map(t, &p)?)?)?;
            report.absorb(b.check());
            bialgebra = Some(b);
        }
    }

    let mut hopf = None;
    if let (Some(t), Some(dual), Some(b)) = (&d.tensor, &d.duality, &bialgebra) {
        let dr = validate_duality_data(cat, f, t, dual);
        let valid = dr.all_passed();
        report.absorb(dr);
        if valid {
            let a = antipode_descended(cat, f, t, dual, &p)?;
            record(&mut report, "antipode", &a);
            let h = HopfData::new(b.clone(), require("antipode", a)?)?;
            report.absorb(h.check());
            hopf = Some(h);
        }
    }

    let gl = grouplikes(&coalgebra, None).ok();
    let mut gl_group = None;
    let mut chars = None;
    let mut char_group = None;
    if let Some(h) = &hopf {
        if let Some(g) = &gl {
            let table = grouplike_group(g, &h.bialgebra);
            report.check("grouplikes form a group under m", table.is_group(), None);
            gl_group = Some(table);
        }
        if let Ok(c) = characters(&h.bialgebra, None) {
            let table = convolution_group(&c, h)?;
            report.check("characters form a group under ∗", table.is_group(), None);
            chars = Some(c);
            char_group = Some(table);
        }
    }

    Ok(Reconstruction {
        coend: p.summary(),
        coalgebra,
        algebra: bialgebra.map(|b| b.algebra),
        antipode: hopf.map(|h| h.antipode),
        grouplikes: gl,
        grouplike_group: gl_group,
        characters: chars,
        character_group: char_group,
        report,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RhoTildeReport {
    pub map: LinearMap,
    pub rank: usize,
    pub domain_dim: usize,
    pub codomain_dim: usize,
    pub surjective: bool,
    pub bijective: bool,
    pub report: Report,
}

/// `ρ̃` for a document carrying a coalgebra and a coaction on every object.
pub fn rho_tilde_report(cd: &ComoduleDocument) -> Result<RhoTildeReport, TannakaError> {
    let b = cd.coalgebra.as_ref().ok_or(crate::catpres::CatError::MissingSection("coalgebra"))?;
    let d = &cd.document;
    let mut report = Report::new("rho-tilde");
    report.absorb(b.check());
    let rt = rho_tilde(b, &d.category, &d.functor, &cd.coactions)?;
    let p = natvee(&d.category, &d.functor, &d.functor)?;
    record(&mut report, "ρ̃", &rho_tilde_descended(b, &p, &cd.coactions)?);
    report.absorb(rt.report.clone());
    Ok(RhoTildeReport {
        rank: rt.rank,
        domain_dim: rt.map.domain_dim(),
        codomain_dim: rt.map.codomain_dim(),
        surjective: rt.is_surjective(),
        bijective: rt.is_bijective(),
        map: rt.map,
        report,
    })
}

/// Residue of every map defined on generators of `End^∨(F)` that the document supports.
pub fn well_definedness_report(cd: &ComoduleDocument) -> Result<Report, TannakaError> {
    let d = &cd.document;
    let (cat, f) = (&d.category, &d.functor);
    let p = natvee(cat, f, f)?;
    let mut r = Report::new("well-definedness");
    record(&mut r, "Δ", &cocomposition_descended(&p, &p, &p)?);
    record(&mut r, "ε", &counit_descended(&p)?);
    if let Some(t) = d.tensor.as_ref().filter(|t| validate_tensor_data(cat, f, t).all_passed()) {
        record(&mut r, "m", &multiplication_descended(cat, f, t, &p)?);
        // u is a map out of K: there is nothing to descend.
        r.check("u is defined on K", unit_map(t, &p).is_ok(), None);
        if let Some(dual) = d.duality.as_ref().filter(|dual| validate_duality_data(cat, f, t, dual).all_passed()) {
            record(&mut r, "antipode", &antipode_descended(cat, f, t, dual, &p)?);
        }
    }
    if let Some(b) = &cd.coalgebra {
        if cat.objects().iter().all(|c| cd.coactions.contains_key(c)) {
            record(&mut r, "ρ̃", &rho_tilde_descended(b, &p, &cd.coactions)?);
        }
    }
    Ok(r)
}
