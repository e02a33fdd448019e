//! Field reports, pairwise comparison verdicts and their renderings.

mod parse;
mod text;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{NfError, Result};
use crate::numberfield::{is_fundamental_disc, NumberField};
use crate::parallel::Execution;
use crate::quadform::{jordan_form_odd, rationally_standard, trace_profile, GenusComparison, HasseProfile, JordanForm};
use crate::rootnum::{compare_root_numbers, det_rho_discriminant, RootNumberComparison};
use crate::splitting::{is_tame_field, ramified_primes, split_place, Place};
use crate::zeta::{local_l_factor, weakly_equivalent};

pub use parse::parse_polynomial;

/// Whole-field invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldReport {
    pub polynomial: String,
    pub coefficients: Vec<String>,
    pub degree: usize,
    pub disc: String,
    pub disc_factored: String,
    pub disc_factors: Vec<(String, u32)>,
    pub poly_disc: String,
    pub index: String,
    pub signature: (usize, usize),
    pub integral_basis: Vec<String>,
    pub ramified_primes: Vec<String>,
    pub tame: bool,
    pub galois: bool,
    pub galois_assumed: bool,
    pub fundamental_disc: bool,
    pub trace_gram: Vec<Vec<String>>,
    pub trace_det_class: String,
    pub rational_trace_standard: bool,
    pub det_character: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanReport {
    pub blocks: String,
    pub flat: String,
    pub form: JordanForm,
}

/// Data of one field at one place.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalData {
    /// `(e, f)` pairs, sorted by `f` then `e`.
    pub pairs: Vec<(u32, u32)>,
    pub table_row: String,
    pub decomposition_type: String,
    pub l_factor: String,
    pub ramified: bool,
    pub tame: bool,
    pub hasse: i8,
    /// Normalized root number; absent at `-1`.
    pub root_number: Option<i8>,
    pub jordan: Option<JordanReport>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeComparison {
    pub types_agree: bool,
    pub hasse_agree: bool,
    pub root_numbers_agree: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeEvidence {
    pub fields: Vec<LocalData>,
    pub comparison: Option<PrimeComparison>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Evidence {
    pub per_prime: BTreeMap<Place, PrimeEvidence>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tri {
    Yes,
    No,
    Inapplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Isometry {
    Isometric,
    NotIsometricGenus,
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrailEntry {
    pub rule: String,
    pub outcome: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub weak_ae: bool,
    pub weak_ae_witness: String,
    pub same_degree: bool,
    pub same_disc: bool,
    pub same_signature: bool,
    pub both_tame: bool,
    pub both_non_totally_real: bool,
    pub both_galois: bool,
    pub galois_assumed: bool,
    pub degree_at_most_3: bool,
    pub fundamental_disc: bool,
    pub assume_ae: bool,
    pub genus_equal: Tri,
    pub genus_detail: String,
    pub spinor_genus_equal: Tri,
    pub isometry: Isometry,
    pub isometry_reason: String,
    pub root_numbers: String,
    pub root_numbers_differ_at: Option<Vec<u64>>,
    pub theorem_trail: Vec<TrailEntry>,
    /// Failed consistency checks; nonempty means a bug or a false premise.
    pub internal_errors: Vec<String>,
}

/// Output of `inspect` (no verdicts) or `compare`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub fields: Vec<FieldReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdicts: Option<Verdicts>,
    pub evidence: Evidence,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Report> {
        serde_json::from_str(s).map_err(|e| NfError::Parse {
            position: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_text(&self) -> String {
        text::render(self)
    }

    pub fn has_internal_errors(&self) -> bool {
        self.verdicts.as_ref().is_some_and(|v| !v.internal_errors.is_empty())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Options {
    pub assume_galois: bool,
    pub assume_ae: bool,
    pub execution: Execution,
}

/// A field with the invariants every report needs, computed once.
struct Analyzed<'a> {
    k: &'a NumberField,
    profile: HasseProfile,
    ramified: Vec<u64>,
    tame: bool,
    galois: bool,
}

fn analyze<'a>(k: &'a NumberField, opts: &Options) -> Result<Analyzed<'a>> {
    let galois = if opts.assume_galois { true } else { k.is_galois()? };
    Ok(Analyzed {
        k,
        profile: trace_profile(k)?,
        ramified: ramified_primes(k)?,
        tame: is_tame_field(k)?,
        galois,
    })
}

fn field_report(a: &Analyzed, opts: &Options) -> Result<FieldReport> {
    let k = a.k;
    let gram = k.trace_gram();
    Ok(FieldReport {
        polynomial: k.defining_poly().to_string(),
        coefficients: k.defining_poly().coeffs().iter().map(|c| c.to_string()).collect(),
        degree: k.degree(),
        disc: k.disc().to_string(),
        disc_factored: k.disc_factorization().to_string(),
        disc_factors: k
            .disc_factorization()
            .factors
            .iter()
            .map(|(p, e)| (p.to_string(), *e))
            .collect(),
        poly_disc: k.poly_disc().to_string(),
        index: k.index().to_string(),
        signature: k.signature(),
        integral_basis: (0..k.degree()).map(|i| k.basis_element_string(i)).collect(),
        ramified_primes: a.ramified.iter().map(u64::to_string).collect(),
        tame: a.tame,
        galois: a.galois,
        galois_assumed: opts.assume_galois,
        fundamental_disc: is_fundamental_disc(k.disc())?,
        trace_gram: gram
            .entries()
            .iter()
            .map(|r| r.iter().map(|c| c.to_string()).collect())
            .collect(),
        trace_det_class: a.profile.det_class.to_string(),
        rational_trace_standard: rationally_standard(&gram)?,
        det_character: det_rho_discriminant(k)?.to_string(),
    })
}

fn local_data(a: &Analyzed, place: Place) -> Result<LocalData> {
    let k = a.k;
    let s = split_place(k, place)?;
    let hasse = a.profile.get(place);
    let mut jordan = None;
    let mut note = None;
    let root_number = match place {
        Place::Infinite => None,
        Place::Prime(p) => {
            let two = crate::quadform::hilbert_symbol_int(&num_bigint::BigInt::from(2), k.disc(), place)?;
            if s.is_ramified() {
                if p == 2 {
                    note = Some("dyadic Jordan decomposition not computed".to_string());
                } else if !s.is_tame() {
                    note = Some(format!("wild at {p}; Jordan decomposition not computed"));
                } else {
                    let j = jordan_form_odd(&k.trace_gram(), p)?;
                    jordan = Some(JordanReport {
                        blocks: j.to_string(),
                        flat: j.flat(),
                        form: j,
                    });
                }
            }
            Some(hasse * two)
        }
    };
    Ok(LocalData {
        pairs: s.pairs.iter().map(|q| (q.e, q.f)).collect(),
        table_row: s.table_row(),
        decomposition_type: s.decomposition_type().to_string(),
        l_factor: local_l_factor(k, place)?.to_string(),
        ramified: s.is_ramified(),
        tame: s.is_tame(),
        hasse,
        root_number,
        jordan,
        note,
    })
}

fn places_of(fields: &[&Analyzed]) -> Vec<Place> {
    let mut set: BTreeSet<Place> = BTreeSet::new();
    set.insert(Place::Infinite);
    set.insert(Place::Prime(2));
    for a in fields {
        set.extend(a.ramified.iter().map(|&p| Place::Prime(p)));
    }
    set.into_iter().collect()
}

fn evidence(fields: &[&Analyzed], exec: Execution) -> Result<Evidence> {
    let places = places_of(fields);
    let rows = exec.map(&places, |&place| -> Result<PrimeEvidence> {
        let data = fields
            .iter()
            .map(|a| local_data(a, place))
            .collect::<Result<Vec<_>>>()?;
        let comparison = (data.len() == 2).then(|| PrimeComparison {
            types_agree: data[0].decomposition_type == data[1].decomposition_type,
            hasse_agree: data[0].hasse == data[1].hasse,
            root_numbers_agree: match (data[0].root_number, data[1].root_number) {
                (Some(x), Some(y)) => Some(x == y),
                _ => None,
            },
        });
        Ok(PrimeEvidence { fields: data, comparison })
    });
    let mut per_prime = BTreeMap::new();
    for (place, row) in places.into_iter().zip(rows) {
        per_prime.insert(place, row?);
    }
    Ok(Evidence { per_prime })
}

/// Report on a single field.
pub fn inspect(k: &NumberField, opts: &Options) -> Result<Report> {
    let a = analyze(k, opts)?;
    Ok(Report {
        fields: vec![field_report(&a, opts)?],
        verdicts: None,
        evidence: evidence(&[&a], opts.execution)?,
    })
}

/// Parse, construct and inspect.
pub fn inspect_polynomial(text: &str, opts: &Options) -> Result<Report> {
    inspect(&NumberField::new(parse_polynomial(text)?)?, opts)
}

/// Inspect many polynomials, one result per input in order.
pub fn inspect_batch(inputs: &[String], opts: &Options) -> Vec<Result<Report>> {
    opts.execution.map(inputs, |s| inspect_polynomial(s, opts))
}

fn trail(rule: &str, outcome: impl Into<String>) -> TrailEntry {
    TrailEntry {
        rule: rule.to_string(),
        outcome: outcome.into(),
    }
}

/// Compare two fields and apply the verdict rules.
pub fn compare(k: &NumberField, l: &NumberField, opts: &Options) -> Result<Report> {
    let (a, b) = opts.execution.join(|| analyze(k, opts), || analyze(l, opts));
    let (a, b) = (a?, b?);
    let mut t = Vec::new();
    let mut internal = Vec::new();

    let (weak_ae, witness) = weakly_equivalent(k, l)?;
    t.push(trail("weak-equivalence", format!("{}: {witness}", if weak_ae { "yes" } else { "no" })));

    let same_degree = k.degree() == l.degree();
    let same_disc = k.disc() == l.disc();
    let same_signature = k.signature() == l.signature();
    let both_tame = a.tame && b.tame;
    let both_non_totally_real = !k.is_totally_real() && !l.is_totally_real();
    let both_galois = a.galois && b.galois;
    let degree_at_most_3 = same_degree && k.degree() <= 3;
    let fundamental_disc = same_disc && is_fundamental_disc(k.disc())?;

    if weak_ae && both_tame {
        if same_disc {
            t.push(trail("tame-discriminant", "weakly equivalent tame fields: discriminants agree"));
        } else {
            internal.push(format!(
                "weakly equivalent tame fields with discriminants {} and {}",
                k.disc(),
                l.disc()
            ));
            t.push(trail("tame-discriminant", "FAILED: discriminants differ"));
        }
    }

    let genus = crate::quadform::same_genus_trace(k, l)?;
    let genus_equal = match &genus {
        GenusComparison::Same => Tri::Yes,
        GenusComparison::Different { .. } => Tri::No,
        GenusComparison::Inapplicable { .. } => Tri::Inapplicable,
    };
    t.push(trail("genus", genus.to_string()));

    let spinor_genus_equal = if k.degree() == 2 && same_degree && same_disc {
        t.push(trail("spinor-genus", "yes: quadratic fields with equal discriminant coincide"));
        Tri::Yes
    } else if same_degree && k.degree() >= 3 {
        t.push(trail(
            "spinor-genus",
            format!("{}: equals the genus verdict in degree >= 3", tri_word(genus_equal)),
        ));
        genus_equal
    } else {
        t.push(trail("spinor-genus", format!("{}: taken from the genus verdict", tri_word(genus_equal))));
        genus_equal
    };

    let (isometry, isometry_reason) = match (spinor_genus_equal, genus_equal) {
        (Tri::Yes, _) if both_non_totally_real => (
            Isometry::Isometric,
            "one spinor genus and neither field totally real".to_string(),
        ),
        (Tri::Yes, _) => (
            Isometry::Undetermined,
            "same spinor genus, but for totally real fields that does not decide isometry".to_string(),
        ),
        (_, Tri::No) => (Isometry::NotIsometricGenus, "trace forms lie in different genera".to_string()),
        _ => (
            Isometry::Undetermined,
            "the genus criterion does not apply to this pair".to_string(),
        ),
    };
    t.push(trail("isometry", format!("{}: {isometry_reason}", isometry_word(isometry))));

    let rn = compare_root_numbers(k, l)?;
    let root_numbers_differ_at = match &rn {
        RootNumberComparison::Compared { differ, .. } => Some(differ.clone()),
        RootNumberComparison::UnequalDiscriminants => None,
    };
    t.push(trail("root-numbers", rn.to_string()));

    // h_p at odd primes of either discriminant
    let odd: BTreeSet<u64> = a.ramified.iter().chain(&b.ramified).copied().filter(|&p| p != 2).collect();
    let hasse_differ: Vec<u64> = odd
        .iter()
        .copied()
        .filter(|&p| a.profile.get(Place::Prime(p)) != b.profile.get(Place::Prime(p)))
        .collect();
    let conditions: Vec<&str> = [
        (degree_at_most_3, "degree <= 3"),
        (fundamental_disc, "fundamental discriminant"),
        (both_galois, "both Galois"),
    ]
    .iter()
    .filter(|(c, _)| *c)
    .map(|(_, s)| *s)
    .collect();
    if weak_ae && both_tame && !conditions.is_empty() {
        if hasse_differ.is_empty() {
            t.push(trail(
                "trace-cross-check",
                format!("predicted equal h_p at odd primes ({}); confirmed", conditions.join(", ")),
            ));
        } else {
            internal.push(format!(
                "weakly equivalent tame fields ({}) but h_p differs at {:?}",
                conditions.join(", "),
                hasse_differ
            ));
            t.push(trail("trace-cross-check", format!("FAILED at {hasse_differ:?}")));
        }
    } else if weak_ae && both_tame {
        t.push(trail(
            "trace-cross-check",
            "not applicable: none of degree <= 3, fundamental discriminant, both Galois",
        ));
    }

    if opts.assume_ae {
        if both_tame {
            let outcome = if hasse_differ.is_empty() && weak_ae {
                "arithmetic equivalence asserted; tame equivalent fields have isometric integral trace forms, consistent with the computed invariants".to_string()
            } else {
                format!(
                    "arithmetic equivalence asserted but contradicted by the computed invariants (weak equivalence {}, h_p differs at {hasse_differ:?})",
                    if weak_ae { "holds" } else { "fails" }
                )
            };
            t.push(trail("assumed-equivalence", outcome));
        } else {
            t.push(trail(
                "assumed-equivalence",
                "arithmetic equivalence asserted; no conclusion drawn for wildly ramified fields",
            ));
        }
    }

    let verdicts = Verdicts {
        weak_ae,
        weak_ae_witness: witness.to_string(),
        same_degree,
        same_disc,
        same_signature,
        both_tame,
        both_non_totally_real,
        both_galois,
        galois_assumed: opts.assume_galois,
        degree_at_most_3,
        fundamental_disc,
        assume_ae: opts.assume_ae,
        genus_equal,
        genus_detail: genus.to_string(),
        spinor_genus_equal,
        isometry,
        isometry_reason,
        root_numbers: rn.to_string(),
        root_numbers_differ_at,
        theorem_trail: t,
        internal_errors: internal,
    };
    Ok(Report {
        fields: vec![field_report(&a, opts)?, field_report(&b, opts)?],
        verdicts: Some(verdicts),
        evidence: evidence(&[&a, &b], opts.execution)?,
    })
}

/// Parse, construct and compare.
pub fn compare_polynomials(left: &str, right: &str, opts: &Options) -> Result<Report> {
    let (k, l) = (parse_polynomial(left)?, parse_polynomial(right)?);
    let (k, l) = opts.execution.join(|| NumberField::new(k), || NumberField::new(l));
    compare(&k?, &l?, opts)
}

pub(crate) fn tri_word(t: Tri) -> &'static str {
    match t {
        Tri::Yes => "yes",
        Tri::No => "no",
        Tri::Inapplicable => "inapplicable",
    }
}

pub(crate) fn isometry_word(i: Isometry) -> &'static str {
    match i {
        Isometry::Isometric => "isometric",
        Isometry::NotIsometricGenus => "not isometric (different genus)",
        Isometry::Undetermined => "undetermined",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const K: &str = "x^4 - x^3 + 4*x^2 + 68*x + 152";
    const L: &str = "x^4 - 15*x^2 - 21*x + 121";

    #[test]
    fn quartic_comparison() {
        let r = compare_polynomials(K, L, &Options::default()).unwrap();
        let v = r.verdicts.as_ref().unwrap();
        assert!(v.weak_ae);
        assert_eq!(v.genus_equal, Tri::No);
        assert_eq!(v.isometry, Isometry::NotIsometricGenus);
        assert_eq!(v.root_numbers_differ_at, Some(vec![7, 43]));
        assert!(v.internal_errors.is_empty());
        let seven = &r.evidence.per_prime[&Place::Prime(7)];
        assert_eq!(seven.fields[0].table_row, "(1,1) (1,3)");
        assert_eq!(seven.fields[1].table_row, "(1,1) (2,2)");
        assert_eq!(seven.fields[0].jordan.as_ref().unwrap().flat, "<1,3,7,21>");
        assert_eq!(seven.fields[1].jordan.as_ref().unwrap().flat, "<1,1,7,7>");
    }

    #[test]
    fn json_round_trip_and_determinism() {
        let r = compare_polynomials(K, L, &Options::default()).unwrap();
        let s = r.to_json();
        assert_eq!(Report::from_json(&s).unwrap(), r);
        let seq = Options {
            execution: Execution::Sequential,
            ..Options::default()
        };
        assert_eq!(compare_polynomials(K, L, &seq).unwrap().to_json(), s);
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert!(v["evidence"]["per_prime"]["-1"].is_object());
        assert_eq!(v["fields"][0]["disc"], "15311569");
        assert!(v["verdicts"].is_object());
    }

    #[test]
    fn inspect_gaussian() {
        let r = inspect_polynomial("x^2 + 1", &Options::default()).unwrap();
        assert_eq!(r.fields[0].disc, "-4");
        assert_eq!(r.fields[0].ramified_primes, vec!["2"]);
        let two = &r.evidence.per_prime[&Place::Prime(2)].fields[0];
        assert!(!two.tame);
        assert!(two.jordan.is_none());
        assert!(two.note.is_some());
        assert!(r.verdicts.is_none());
        assert!(r.to_text().contains("disc"));
    }

    #[test]
    fn batch_preserves_order() {
        let inputs = vec!["x^2 + 1".to_string(), "x^2 - 2".to_string(), "x^2 - 1".to_string()];
        let out = inspect_batch(&inputs, &Options::default());
        assert_eq!(out[0].as_ref().unwrap().fields[0].disc, "-4");
        assert_eq!(out[1].as_ref().unwrap().fields[0].disc, "8");
        assert!(matches!(out[2], Err(NfError::Reducible(_))));
    }
}
