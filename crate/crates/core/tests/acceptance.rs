//! One line per acceptance criterion. Exits nonzero if any line fails.

mod common;

use std::time::{Duration, Instant};

use num_bigint::BigInt;

use nf_core::numberfield::{GramMatrix, NumberField};
use nf_core::quadform::{jordan_form_odd, Hypothesis};
use nf_core::report::{compare_polynomials, parse_polynomial, Isometry, Options, Report, Tri};
use nf_core::splitting::Place;

const QUARTIC_K: &str = "x^4 - x^3 + 4x^2 + 68x + 152";
const QUARTIC_L: &str = "x^4 - 15x^2 - 21x + 121";
const PAIRS: [(&str, &str); 3] = [
    (
        "x^7 - 609x^5 - 2233x^4 + 36743x^3 + 62118x^2 - 576520x + 3625",
        "x^7 - 609x^5 - 2233x^4 + 48111x^3 - 40194x^2 - 87696x + 77517",
    ),
    ("x^6 - 14x^4 - 5x^3 + 52x^2 + 33x - 24", "x^6 - 3x^5 - 17x^4 - x^3 + 37x^2 + 27x + 5"),
    ("x^3 - 8x - 15", "x^3 + 10x - 1"),
];
const SEPTIC_F: &str = "x^7 - 2x^6 - 47x^5 + 25x^4 + 755x^3 + 496x^2 - 3782x - 5217";
const SEPTIC_L: &str = "x^7 - 2x^6 - 47x^5 - 8x^4 + 480x^3 + 793x^2 + 233x + 19";
const CUBIC_49: &str = "x^3 + x^2 - 2x - 1";
const CUBIC_81: &str = "x^3 - 3x + 1";
const CUBICS_8281: (&str, &str) = ("x^3 - x^2 - 30x + 64", "x^3 - x^2 - 30x - 27");

const LIMIT_QUARTIC: Duration = Duration::from_secs(10);
const LIMIT_PAIRS: Duration = Duration::from_secs(60);
const LIMIT_PROPERTIES: Duration = Duration::from_secs(60);

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn compare(a: &str, b: &str) -> Result<Report, String> {
    compare_polynomials(a, b, &Options::default()).map_err(|e| format!("{a} vs {b}: {e}"))
}

fn in_time(start: Instant, limit: Duration) -> Check {
    let t = start.elapsed();
    ensure!(t < limit, "took {t:?}, limit {limit:?}");
    Ok(())
}

fn odd_hasse_agree(r: &Report) -> Check {
    for (place, ev) in &r.evidence.per_prime {
        if matches!(place, Place::Prime(p) if *p > 2) {
            let c = ev.comparison.as_ref().ok_or("missing comparison")?;
            ensure!(c.hasse_agree, "h_p differs at {place}");
        }
    }
    ensure!(r.verdicts.as_ref().unwrap().internal_errors.is_empty(), "internal errors reported");
    Ok(())
}

fn quartic_pair() -> Check {
    let start = Instant::now();
    let r = compare(QUARTIC_K, QUARTIC_L)?;
    let v = r.verdicts.as_ref().unwrap();
    for f in &r.fields {
        ensure!(f.disc == "15311569", "disc {}", f.disc);
        ensure!(f.signature == (0, 2), "signature {:?}", f.signature);
        ensure!(f.tame, "not tame");
    }
    ensure!(BigInt::from(7 * 13 * 43).pow(2) == "15311569".parse().unwrap(), "disc is not (7*13*43)^2");
    let table = [
        (7, "(1,1) (1,3)", "(1,1) (2,2)"),
        (13, "(1,1) (2,2)", "(1,1) (1,3)"),
        (43, "(1,1) (2,2)", "(1,1) (1,3)"),
    ];
    for (p, k_row, l_row) in table {
        let ev = &r.evidence.per_prime[&Place::Prime(p)];
        ensure!(ev.fields[0].table_row == k_row, "K at {p}: {}", ev.fields[0].table_row);
        ensure!(ev.fields[1].table_row == l_row, "L at {p}: {}", ev.fields[1].table_row);
    }
    ensure!(v.weak_ae, "not weakly equivalent");
    let hasse = |p: u64| {
        let ev = &r.evidence.per_prime[&Place::Prime(p)];
        (ev.fields[0].hasse, ev.fields[1].hasse)
    };
    ensure!(hasse(7) == (1, -1), "h_7 = {:?}", hasse(7));
    ensure!(hasse(43) == (-1, 1), "h_43 = {:?}", hasse(43));
    let classes = [(7, [1, 3, 7, 21], [1, 1, 7, 7]), (43, [1, 1, 43, 43], [1, 3, 43, 129])];
    for (p, k_diag, l_diag) in classes {
        let ev = &r.evidence.per_prime[&Place::Prime(p)];
        for (i, diag) in [k_diag, l_diag].iter().enumerate() {
            let expected = jordan_form_odd(&GramMatrix::diagonal(diag), p).map_err(|e| e.to_string())?;
            let got = &ev.fields[i].jordan.as_ref().ok_or("missing jordan data")?.form;
            ensure!(*got == expected, "field {} at {p}: {} vs <{:?}>", i + 1, got, diag);
        }
    }
    ensure!(v.root_numbers_differ_at == Some(vec![7, 43]), "root numbers: {}", v.root_numbers);
    ensure!(v.root_numbers == "differ at {7, 43}", "root numbers: {}", v.root_numbers);
    ensure!(v.genus_equal == Tri::No && v.isometry == Isometry::NotIsometricGenus, "verdict {:?}", v.isometry);
    in_time(start, LIMIT_QUARTIC)
}

fn weakly_equivalent_examples() -> Check {
    let start = Instant::now();
    for (i, (a, b)) in PAIRS.iter().enumerate() {
        let r = compare(a, b)?;
        let v = r.verdicts.as_ref().unwrap();
        ensure!(v.weak_ae, "pair ({}) not weakly equivalent", i + 1);
        match i {
            0 => ensure!(v.both_galois && !v.galois_assumed, "pair (1) not both Galois"),
            1 => {
                ensure!(v.fundamental_disc, "pair (2) disc not fundamental");
                ensure!(r.fields.iter().all(|f| f.disc == "725517561"), "pair (2) disc {}", r.fields[0].disc);
            }
            _ => ensure!(v.degree_at_most_3, "pair (3) not cubic"),
        }
        odd_hasse_agree(&r).map_err(|e| format!("pair ({}): {e}", i + 1))?;
    }
    in_time(start, LIMIT_PAIRS)
}

fn septic_pair() -> Check {
    let r = compare(SEPTIC_F, SEPTIC_L)?;
    let v = r.verdicts.as_ref().unwrap();
    let disc = BigInt::from(25) * BigInt::from(11).pow(6) * BigInt::from(19).pow(4);
    for f in &r.fields {
        ensure!(f.disc == disc.to_string(), "disc {}", f.disc);
        ensure!(f.signature == (7, 0), "signature {:?}", f.signature);
        ensure!(f.tame, "not tame");
    }
    ensure!(v.spinor_genus_equal == Tri::Yes, "spinor genus {:?}", v.spinor_genus_equal);
    ensure!(v.isometry == Isometry::Undetermined, "isometry {:?}", v.isometry);
    Ok(())
}

fn cubics_49_81() -> Check {
    let r = compare(CUBIC_49, CUBIC_81)?;
    let v = r.verdicts.as_ref().unwrap();
    ensure!(r.fields[0].disc == "49" && r.fields[1].disc == "81", "discs {} {}", r.fields[0].disc, r.fields[1].disc);
    ensure!(r.fields.iter().all(|f| f.rational_trace_standard), "rational trace not <1,1,1>");
    ensure!(!v.weak_ae, "reported weakly equivalent");
    ensure!(v.genus_equal == Tri::Inapplicable, "genus {:?}", v.genus_equal);
    let k = field(CUBIC_49)?;
    let l = field(CUBIC_81)?;
    match nf_core::quadform::same_genus_trace(&k, &l).map_err(|e| e.to_string())? {
        nf_core::quadform::GenusComparison::Inapplicable { failed } => {
            ensure!(failed.contains(&Hypothesis::SameDiscriminant), "failed hypotheses {failed:?}")
        }
        other => return Err(format!("genus comparison {other}")),
    }
    Ok(())
}

fn cubics_8281() -> Check {
    let (a, b) = CUBICS_8281;
    let r = compare(a, b)?;
    let v = r.verdicts.as_ref().unwrap();
    ensure!(r.fields.iter().all(|f| f.disc == "8281" && f.galois), "not Galois of disc 8281");
    ensure!(v.weak_ae && v.genus_equal == Tri::Yes, "genus {:?}", v.genus_equal);
    ensure!(v.root_numbers_differ_at.as_deref() == Some(&[][..]), "root numbers: {}", v.root_numbers);
    ensure!(v.isometry == Isometry::Undetermined, "isometry {:?}", v.isometry);
    odd_hasse_agree(&r)
}

fn properties() -> Check {
    let start = Instant::now();
    let failed: Vec<String> = common::run_all()
        .into_iter()
        .filter_map(|(name, r)| r.err().map(|e| format!("{name}: {e}")))
        .collect();
    ensure!(failed.is_empty(), "{}", failed.join("; "));
    in_time(start, LIMIT_PROPERTIES)
}

fn field(s: &str) -> Result<NumberField, String> {
    NumberField::new(parse_polynomial(s).map_err(|e| e.to_string())?).map_err(|e| format!("{s}: {e}"))
}

fn determinant_identity() -> Check {
    let mut corpus = vec![QUARTIC_K, QUARTIC_L, SEPTIC_F, SEPTIC_L, CUBIC_49, CUBIC_81, CUBICS_8281.0, CUBICS_8281.1];
    for (a, b) in PAIRS {
        corpus.push(a);
        corpus.push(b);
    }
    corpus.extend(["x^2 + 1", "x^2 - 5", "x^3 - 2", "x^3 - 10", "x^4 - 10x^2 + 1", "x^4 + x^3 + x^2 + x + 1"]);
    for s in corpus {
        let k = field(s)?;
        ensure!(k.trace_gram().det() == *k.disc(), "{s}: det {} vs disc {}", k.trace_gram().det(), k.disc());
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 7] = [
        ("1 quartic pair with differing root numbers (< 10 s)", quartic_pair),
        ("2 weakly equivalent example pairs (< 60 s)", weakly_equivalent_examples),
        ("3 degree-7 totally real pair", septic_pair),
        ("4 disc-49 vs disc-81 cubics", cubics_49_81),
        ("5 property suites (1000 cases each, < 60 s)", properties),
        ("6 det(trace gram) = disc over the corpus", determinant_identity),
        ("  disc-8281 Galois cubics", cubics_8281),
    ];
    let mut failures = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("PASS  {name}  [{:.2?}]", start.elapsed()),
            Err(e) => {
                failures += 1;
                println!("FAIL  {name}  [{:.2?}]: {e}", start.elapsed());
            }
        }
    }
    if failures > 0 {
        eprintln!("{failures} acceptance check(s) failed");
        std::process::exit(1);
    }
}
