//! Runs catalog entries against their expectations and assembles reports.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::apolarity::{apolar_data, essential_variables, minimal_generator_counts};
use crate::artinian::{graded_hilbert_function, quotient_dim, socle_and_profile};
use crate::catalog::{find, printed_ideal, CatalogEntry, EntryKind, ExpectedProfile, CATALOG_SEED};
use crate::deformations::{default_samples, fiber, flatness_certificate, tangent_dimension, verify_decomposition};
use crate::error::Result;
use crate::field::Field;
use crate::ideal::Ideal;
use crate::parse::parse_polynomial;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntryReport {
    pub id: String,
    pub citation: String,
    pub expected: Map<String, Value>,
    pub computed: Map<String, Value>,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub entries: Vec<EntryReport>,
    pub summary: Summary,
    pub seed: u64,
}

impl VerificationReport {
    /// Sorts entries by id and tallies the summary.
    pub fn assemble(mut entries: Vec<EntryReport>) -> Self {
        entries.sort_by(|a, b| a.id.cmp(&b.id));
        let passed = entries.iter().filter(|e| e.pass).count();
        let failed = entries.len() - passed;
        VerificationReport {
            entries,
            summary: Summary { passed, failed },
            seed: CATALOG_SEED,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}

fn expected_map(e: &ExpectedProfile, kind: &EntryKind) -> Map<String, Value> {
    let mut m = Map::new();
    match kind {
        EntryKind::Family {
            special_fiber,
            parts,
            through_zero,
            ..
        } => {
            let n = if *through_zero { 4 } else { 3 };
            m.insert("fiber_dims".into(), json!(vec![e.dim; n]));
            if special_fiber.is_some() {
                m.insert("special_fiber_matches".into(), json!(true));
            }
            if !parts.is_empty() {
                m.insert("decomposition_b1_b2".into(), json!([true, true]));
            }
            return m;
        }
        EntryKind::Form { printed_apolar, .. } => {
            if printed_apolar.is_some() {
                m.insert("apolar_matches_listed".into(), json!(true));
            }
        }
        EntryKind::Algebra { .. } => {}
    }
    m.insert("dim".into(), json!(e.dim));
    if let Some(h) = &e.hilbert {
        m.insert("hilbert".into(), json!(h));
    }
    if let Some(v) = e.h0 {
        m.insert("h0".into(), json!(v));
    }
    if let Some(v) = e.dim_a2 {
        m.insert("dim_a2".into(), json!(v));
    }
    if let Some(v) = e.obstructed {
        m.insert("obstructed".into(), json!(v));
    }
    if let Some(v) = e.beta {
        m.insert("beta".into(), json!(v));
    }
    if let Some(v) = &e.h_a2 {
        m.insert("h_a2".into(), json!(v));
    }
    if let Some(v) = e.cone {
        m.insert("cone".into(), json!(v));
    }
    if let Some(v) = &e.socle {
        m.insert("socle".into(), json!(v));
    }
    m
}

/// Computes exactly the keys present in `expected`.
fn compute(
    entry: &CatalogEntry,
    catalog: &[CatalogEntry],
    expected: &Map<String, Value>,
) -> Result<Map<String, Value>> {
    let mut m = Map::new();
    let wants = |k: &str| expected.contains_key(k);
    match &entry.kind {
        EntryKind::Family {
            ideal,
            param,
            special_fiber,
            parts,
            through_zero,
        } => {
            let field = ideal.ring().field();
            let samples = if *through_zero {
                default_samples(field)
            } else {
                default_samples(field)[1..].to_vec()
            };
            let dims = if *through_zero {
                flatness_certificate(ideal, param, &samples)?.fiber_dims
            } else {
                samples
                    .iter()
                    .map(|v| quotient_dim(&fiber(ideal, param, v)?))
                    .collect::<Result<Vec<_>>>()?
            };
            m.insert("fiber_dims".into(), json!(dims));
            if let Some(id) = special_fiber {
                let special = fiber(ideal, param, &field.zero())?;
                let target = match &find(catalog, id)?.kind {
                    EntryKind::Algebra { ideal } => ideal.clone(),
                    _ => return Err(crate::AlgebraError::UnknownEntry(id.clone())),
                };
                let target = target.map_to_ring(special.ring())?;
                m.insert("special_fiber_matches".into(), json!(special.equals(&target)?));
            }
            if !parts.is_empty() {
                let mut verdicts = Vec::new();
                for b in [1, 2] {
                    let v = field.from_i64(b);
                    let whole = fiber(ideal, param, &v)?;
                    let pieces = parts
                        .iter()
                        .map(|p| match &find(catalog, p)?.kind {
                            EntryKind::Family { ideal, param, .. } => fiber(ideal, param, &v),
                            _ => Err(crate::AlgebraError::UnknownEntry(p.clone())),
                        })
                        .collect::<Result<Vec<_>>>()?;
                    let pieces = pieces
                        .iter()
                        .map(|p| p.map_to_ring(whole.ring()))
                        .collect::<Result<Vec<_>>>()?;
                    verdicts.push(verify_decomposition(&whole, &pieces)?);
                }
                m.insert("decomposition_b1_b2".into(), json!(verdicts));
            }
            return Ok(m);
        }
        EntryKind::Algebra { ideal } => {
            m.insert("dim".into(), json!(quotient_dim(ideal)?));
            if wants("hilbert") || wants("socle") {
                let p = socle_and_profile(ideal)?;
                m.insert("hilbert".into(), json!(p.hilbert.values));
                if let Some(s) = expected.get("socle").and_then(Value::as_str) {
                    let spanned = socle_spanned_by(ideal, &p.socle_basis, s)?;
                    m.insert(
                        "socle".into(),
                        json!(if spanned {
                            s.to_string()
                        } else {
                            format_socle(&p.socle_basis)
                        }),
                    );
                }
            }
            if wants("h0") || wants("obstructed") || wants("dim_a2") {
                insert_tangent(&mut m, ideal, expected)?;
            }
        }
        EntryKind::Form { form, printed_apolar } => {
            let data = apolar_data(form)?;
            let ideal = &data.ideal;
            let h = graded_hilbert_function(ideal)?;
            m.insert("dim".into(), json!(h.total()));
            m.insert("hilbert".into(), json!(h.values));
            if wants("cone") {
                m.insert("cone".into(), json!(essential_variables(form)? < form.nvars()));
            }
            if wants("beta") {
                m.insert("beta".into(), json!(minimal_generator_counts(ideal, 4)?.beta));
            }
            if wants("h_a2") {
                m.insert("h_a2".into(), json!(graded_hilbert_function(&ideal.square())?.values));
            }
            if let Some(printed) = printed_apolar {
                let listed = printed_ideal(printed, form.field())?;
                m.insert("apolar_matches_listed".into(), json!(listed.equals(ideal)?));
            }
            if wants("h0") || wants("obstructed") || wants("dim_a2") {
                insert_tangent(&mut m, ideal, expected)?;
            }
        }
    }
    Ok(m)
}

fn insert_tangent(m: &mut Map<String, Value>, ideal: &Ideal, expected: &Map<String, Value>) -> Result<()> {
    let t = tangent_dimension(ideal, ideal.ring().nvars())?;
    if expected.contains_key("h0") {
        m.insert("h0".into(), json!(t.h0));
    }
    if expected.contains_key("dim_a2") {
        m.insert("dim_a2".into(), json!(t.dim_a2));
    }
    if expected.contains_key("obstructed") {
        m.insert("obstructed".into(), json!(t.obstructed));
    }
    Ok(())
}

/// Whether the one-dimensional socle is spanned by the class of `text`.
fn socle_spanned_by(ideal: &Ideal, socle: &[crate::poly::Polynomial], text: &str) -> Result<bool> {
    if socle.len() != 1 {
        return Ok(false);
    }
    let f = parse_polynomial(text, ideal.ring())?;
    let nf = ideal.gb().normal_form(&f)?;
    if nf.is_zero() {
        return Ok(false);
    }
    // proportional iff the 2x2 minors of (nf, socle[0]) on their supports vanish
    let s = &socle[0];
    let (m0, c0) = nf.leading_term(crate::MonomialOrder::DegRevLex).expect("nonzero");
    let d0 = s.coefficient(m0);
    if d0.is_zero() {
        return Ok(false);
    }
    let ratio = c0 * &d0.inverse().expect("nonzero");
    Ok(&nf - &s.scale(&ratio) == crate::poly::Polynomial::zero(ideal.ring()))
}

fn format_socle(basis: &[crate::poly::Polynomial]) -> String {
    let parts: Vec<String> = basis.iter().map(|p| p.to_string()).collect();
    format!("<{}>", parts.join(", "))
}

/// Verifies one entry. Errors become a failing report with an `error` key.
pub fn verify_entry(entry: &CatalogEntry, catalog: &[CatalogEntry], timings: bool) -> EntryReport {
    let start = Instant::now();
    let expected = expected_map(&entry.expected, &entry.kind);
    let (computed, pass) = match compute(entry, catalog, &expected) {
        Ok(c) => {
            let pass = expected.iter().all(|(k, v)| c.get(k) == Some(v));
            (c, pass)
        }
        Err(e) => {
            let mut c = Map::new();
            c.insert("error".into(), json!(e.to_string()));
            (c, false)
        }
    };
    EntryReport {
        id: entry.id.clone(),
        citation: entry.expected.citation.clone(),
        expected,
        computed,
        pass,
        elapsed_ms: timings.then(|| start.elapsed().as_millis() as u64),
    }
}

/// Field used by an entry, for display.
pub fn entry_field(entry: &CatalogEntry) -> Field {
    match &entry.kind {
        EntryKind::Algebra { ideal } | EntryKind::Family { ideal, .. } => ideal.ring().field(),
        EntryKind::Form { form, .. } => form.field(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::registry;

    #[test]
    fn small_entries_pass() {
        let r = registry().unwrap();
        for id in ["A[n=1,d=4]", "A[n=4,d=6]", "cone/y4^3+y3^3"] {
            let rep = verify_entry(find(&r, id).unwrap(), &r, false);
            assert!(rep.pass, "{id}: {:?}", rep.computed);
            assert!(rep.elapsed_ms.is_none());
        }
    }

    #[test]
    fn report_round_trips() {
        let r = registry().unwrap();
        let rep = VerificationReport::assemble(vec![verify_entry(find(&r, "A[n=1,d=4]").unwrap(), &r, false)]);
        let text = serde_json::to_string(&rep).unwrap();
        let back: VerificationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(rep, back);
        assert!(rep.all_passed());
    }
}
