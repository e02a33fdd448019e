//! Plain-text rendering of reports.

use std::fmt::Write;

use super::{isometry_word, tri_word, FieldReport, Report};

fn sign(v: i8) -> &'static str {
    if v > 0 {
        "+1"
    } else {
        "-1"
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn field(out: &mut String, i: usize, f: &FieldReport) {
    let _ = writeln!(out, "field {}: {}", i + 1, f.polynomial);
    let _ = writeln!(out, "  degree            {}", f.degree);
    let _ = writeln!(out, "  disc              {} = {}", f.disc, f.disc_factored);
    let _ = writeln!(out, "  disc(f), index    {}, {}", f.poly_disc, f.index);
    let _ = writeln!(out, "  signature         ({}, {})", f.signature.0, f.signature.1);
    let _ = writeln!(out, "  integral basis    {}", f.integral_basis.join(", "));
    let _ = writeln!(out, "  ramified primes   {{{}}}", f.ramified_primes.join(", "));
    let _ = writeln!(out, "  tame              {}", yes_no(f.tame));
    let galois = if f.galois_assumed { "yes (assumed)" } else { yes_no(f.galois) };
    let _ = writeln!(out, "  galois            {galois}");
    let _ = writeln!(out, "  fundamental disc  {}", yes_no(f.fundamental_disc));
    let _ = writeln!(out, "  det character     {}", f.det_character);
    let rows: Vec<String> = f.trace_gram.iter().map(|r| format!("[{}]", r.join(", "))).collect();
    let _ = writeln!(out, "  trace gram        [{}]", rows.join(", "));
    let _ = writeln!(
        out,
        "  rational trace    {}",
        if f.rational_trace_standard {
            format!("equivalent to <{}>", vec!["1"; f.degree].join(","))
        } else {
            format!("det class {}", f.trace_det_class)
        }
    );
}

pub(super) fn render(r: &Report) -> String {
    let mut out = String::new();
    for (i, f) in r.fields.iter().enumerate() {
        field(&mut out, i, f);
        out.push('\n');
    }
    let _ = writeln!(out, "per place");
    for (place, ev) in &r.evidence.per_prime {
        let _ = writeln!(out, "  p = {place}");
        for (i, d) in ev.fields.iter().enumerate() {
            let tag = if ev.fields.len() > 1 { format!("[{}] ", i + 1) } else { String::new() };
            let pairs: Vec<String> = d.pairs.iter().map(|(e, f)| format!("({e},{f})")).collect();
            let _ = writeln!(
                out,
                "    {tag}(e,f) {}  table {}  type {}  {}",
                pairs.join(" "),
                d.table_row,
                d.decomposition_type,
                if d.tame { "tame" } else { "wild" }
            );
            let _ = writeln!(out, "    {tag}L-factor {}", d.l_factor);
            let mut line = format!("    {tag}h_p {}", sign(d.hasse));
            if let Some(w) = d.root_number {
                let _ = write!(line, "  w_p {}", sign(w));
            }
            let _ = writeln!(out, "{line}");
            if let Some(j) = &d.jordan {
                let _ = writeln!(out, "    {tag}jordan {}  = {}", j.blocks, j.flat);
            }
            if let Some(n) = &d.note {
                let _ = writeln!(out, "    {tag}note: {n}");
            }
        }
        if let Some(c) = &ev.comparison {
            let rn = c.root_numbers_agree.map_or("-", yes_no);
            let _ = writeln!(
                out,
                "    agree: types {}, h_p {}, w_p {}",
                yes_no(c.types_agree),
                yes_no(c.hasse_agree),
                rn
            );
        }
    }
    if let Some(v) = &r.verdicts {
        out.push('\n');
        let _ = writeln!(out, "verdicts");
        let _ = writeln!(out, "  weak arithmetic equivalence  {} ({})", yes_no(v.weak_ae), v.weak_ae_witness);
        let _ = writeln!(out, "  same disc / signature        {} / {}", yes_no(v.same_disc), yes_no(v.same_signature));
        let _ = writeln!(out, "  both tame                    {}", yes_no(v.both_tame));
        let _ = writeln!(out, "  both non-totally-real        {}", yes_no(v.both_non_totally_real));
        let galois = if v.galois_assumed { "yes (assumed)" } else { yes_no(v.both_galois) };
        let _ = writeln!(out, "  both galois                  {galois}");
        let _ = writeln!(out, "  degree <= 3                  {}", yes_no(v.degree_at_most_3));
        let _ = writeln!(out, "  fundamental disc             {}", yes_no(v.fundamental_disc));
        let _ = writeln!(out, "  genus                        {}", v.genus_detail);
        let _ = writeln!(out, "  spinor genus                 {}", tri_word(v.spinor_genus_equal));
        let _ = writeln!(out, "  isometry                     {} ({})", isometry_word(v.isometry), v.isometry_reason);
        let _ = writeln!(out, "  root numbers                 {}", v.root_numbers);
        let _ = writeln!(out, "trail");
        for (i, e) in v.theorem_trail.iter().enumerate() {
            let _ = writeln!(out, "  {}. {}: {}", i + 1, e.rule, e.outcome);
        }
        for e in &v.internal_errors {
            let _ = writeln!(out, "INTERNAL ERROR: {e}");
        }
    }
    out
}
