//! The bundled self-test corpus: every headline result recomputed from
//! scratch and reported as a pass/fail matrix.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::clifford::{
    class4_certificate, clifford11_matrix_certificate, clifford_complex, clifford_real, morita_table,
    verify_periodicity, CliffordSignature,
};
use crate::divclass::{self, canonical, invariant_tuple, realify, ClassifyError, TenfoldClass};
use crate::repthree::{complexify, fixtures, fs_indicator, schur_type, SchurType};
use crate::scalar::Scalar;
use crate::superalg::SuperAlgebra;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Section {
    Tenfold,
    Clifford,
    Periodicity,
    Class4,
    Threefold,
}

impl Section {
    pub const ALL: [Section; 5] = [
        Section::Tenfold,
        Section::Clifford,
        Section::Periodicity,
        Section::Class4,
        Section::Threefold,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Section::Tenfold => "tenfold",
            Section::Clifford => "clifford",
            Section::Periodicity => "periodicity",
            Section::Class4 => "class4",
            Section::Threefold => "threefold",
        }
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Section {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Section::ALL
            .into_iter()
            .find(|sec| sec.name() == s)
            .ok_or_else(|| format!("unknown section {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SectionReport {
    pub section: Section,
    pub checks: Vec<Check>,
}

impl SectionReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelftestReport {
    pub sections: Vec<SectionReport>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.sections.iter().all(SectionReport::passed)
    }

    /// One line per check followed by a per-section summary.
    pub fn matrix(&self) -> String {
        let mut out = String::new();
        for s in &self.sections {
            for c in &s.checks {
                let mark = if c.passed { "PASS" } else { "FAIL" };
                out.push_str(&format!("{mark}  {:<12} {}", s.section.name(), c.name));
                if !c.detail.is_empty() {
                    out.push_str(&format!(": {}", c.detail));
                }
                out.push('\n');
            }
        }
        out.push('\n');
        for s in &self.sections {
            let ok = s.checks.iter().filter(|c| c.passed).count();
            let mark = if s.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!("{mark}  {:<12} {ok}/{}\n", s.section.name(), s.checks.len()));
        }
        out
    }
}

/// Deliberate corruption for exercising the failure paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Negates every odd·odd structure constant of one canonical algebra.
    /// This flips the sign of `e²`, so for labels with a meaningful sign
    /// the corrupted algebra lands on its sibling class.
    CorruptCanonical(TenfoldClass),
}

#[derive(Debug, Clone, Default)]
pub struct Options {
    /// Sections to run; empty means all.
    pub sections: Vec<Section>,
    pub fault: Option<Fault>,
}

pub fn run(options: &Options) -> SelftestReport {
    let selected: Vec<Section> = if options.sections.is_empty() {
        Section::ALL.to_vec()
    } else {
        Section::ALL
            .into_iter()
            .filter(|s| options.sections.contains(s))
            .collect()
    };
    let fault = options.fault;
    let sections = std::thread::scope(|scope| {
        let handles: Vec<_> = selected
            .iter()
            .map(|&section| scope.spawn(move || run_section(section, fault)))
            .collect();
        handles
            .into_iter()
            .zip(&selected)
            .map(|(h, &section)| match h.join() {
                Ok(report) => report,
                Err(_) => SectionReport {
                    section,
                    checks: vec![Check::new("section completed", false, "panicked")],
                },
            })
            .collect()
    });
    SelftestReport { sections }
}

fn run_section(section: Section, fault: Option<Fault>) -> SectionReport {
    let checks = match section {
        Section::Tenfold => tenfold(fault),
        Section::Clifford => clifford(),
        Section::Periodicity => periodicity(),
        Section::Class4 => class4(),
        Section::Threefold => threefold(),
    };
    SectionReport { section, checks }
}

fn corrupt(alg: &SuperAlgebra<crate::scalar::Rational>) -> SuperAlgebra<crate::scalar::Rational> {
    let mut table = alg.table();
    for i in alg.odd_indices() {
        for j in alg.odd_indices() {
            for c in table[i][j].iter_mut() {
                *c = c.neg();
            }
        }
    }
    SuperAlgebra::new(alg.parity().to_vec(), table, alg.unit().to_vec()).expect("negating odd squares keeps the axioms")
}

fn error_detail(e: &ClassifyError) -> String {
    e.to_string()
}

fn tenfold(fault: Option<Fault>) -> Vec<Check> {
    let mut checks = Vec::new();
    let mut tuples = Vec::new();
    for label in TenfoldClass::ALL {
        let mut alg = canonical(label);
        if fault == Some(Fault::CorruptCanonical(label)) {
            alg = corrupt(&alg);
        }
        match divclass::classify(&alg) {
            Ok(report) => {
                let ok = report.class == label;
                checks.push(Check::new(
                    format!("round trip {label}"),
                    ok,
                    if ok { String::new() } else { format!("classified as {}", report.class) },
                ));
                tuples.push((label, invariant_tuple(&report)));
            }
            Err(e) => checks.push(Check::new(format!("round trip {label}"), false, error_detail(&e))),
        }
    }
    let mut clashes = Vec::new();
    for (a, (la, ta)) in tuples.iter().enumerate() {
        for (lb, tb) in &tuples[a + 1..] {
            if ta == tb {
                clashes.push(format!("{la} and {lb} share {ta:?}"));
            }
        }
    }
    let complete = tuples.len() == TenfoldClass::ALL.len();
    let detail = if !complete {
        "not every label classified".to_string()
    } else {
        clashes.join("; ")
    };
    checks.push(Check::new("ten invariant tuples distinct", complete && clashes.is_empty(), detail));
    checks
}

fn sig(p: usize, q: usize) -> CliffordSignature {
    CliffordSignature::new(p, q).expect("within the cap")
}

fn clifford() -> Vec<Check> {
    use TenfoldClass::*;
    let mut checks = Vec::new();
    let mut realized = Vec::new();
    let mut expect = |name: String, got: Result<TenfoldClass, ClassifyError>, want: TenfoldClass| {
        let check = match got {
            Ok(c) => {
                realized.push(c);
                Check::new(name, c == want, if c == want { String::new() } else { format!("got {c}") })
            }
            Err(e) => Check::new(name, false, error_detail(&e)),
        };
        checks.push(check);
    };
    let table = [
        ((0, 0), R),
        ((1, 0), RPlus),
        ((0, 1), RMinus),
        ((2, 0), CAntiPlus),
        ((0, 2), CAntiMinus),
        ((3, 0), HMinus),
        ((0, 3), HPlus),
    ];
    for ((p, q), want) in table {
        let s = sig(p, q);
        expect(
            format!("{s} is {want}"),
            divclass::classify(&clifford_real(s)).map(|r| r.class),
            want,
        );
    }
    for (n, want) in [(0, C), (1, CComm)] {
        let alg = realify(&clifford_complex(n).expect("within the cap"));
        expect(format!("realified Cl_{n}(C) is {want}"), divclass::classify(&alg).map(|r| r.class), want);
    }
    expect(
        "purely even H".to_string(),
        divclass::classify(&canonical(H)).map(|r| r.class),
        H,
    );
    let missing: Vec<_> = TenfoldClass::ALL.into_iter().filter(|l| !realized.contains(l)).collect();
    checks.push(Check::new(
        "all ten labels realized",
        missing.is_empty(),
        if missing.is_empty() {
            String::new()
        } else {
            format!("missing {missing:?}")
        },
    ));
    for (p, q) in [(1, 1), (2, 2)] {
        let s = sig(p, q);
        let alg = clifford_real(s);
        let check = match divclass::classify(&alg) {
            Ok(r) => Check::new(format!("{s} rejected"), false, format!("accepted as {}", r.class)),
            Err(e) => match e.witness() {
                Some(w) if w.verify(&alg) => Check::new(format!("{s} rejected"), true, w.describe(&alg)),
                _ => Check::new(format!("{s} rejected"), false, "witness does not verify"),
            },
        };
        checks.push(check);
    }
    checks
}

fn periodicity() -> Vec<Check> {
    let mut checks = Vec::new();
    for total in 0..=4 {
        for p in 0..=total {
            let s = sig(p, total - p);
            let expected = 1usize << (total + 2);
            checks.push(match verify_periodicity(s) {
                Ok(cert) => Check::new(
                    format!("Cl({},{}) ≅ {s} ⊗ Cl(1,1)", p + 1, total - p + 1),
                    cert.span_dim == expected,
                    format!("span {}", cert.span_dim),
                ),
                Err(e) => Check::new(format!("Cl({},{}) ≅ {s} ⊗ Cl(1,1)", p + 1, total - p + 1), false, e.to_string()),
            });
        }
    }
    checks.push(match clifford11_matrix_certificate() {
        Ok(cert) => Check::new("Cl(1,1) ≅ End(1|1)", cert.span_dim == 4, cert.image_names.join(", ")),
        Err(e) => Check::new("Cl(1,1) ≅ End(1|1)", false, e.to_string()),
    });
    use TenfoldClass::*;
    let expected = [R, RPlus, CAntiPlus, HMinus, H, HPlus, CAntiMinus, RMinus];
    match morita_table() {
        Ok(entries) => {
            for (class, want) in expected.into_iter().enumerate() {
                let check = match entries.iter().find(|e| e.class as usize == class) {
                    Some(entry) => Check::new(
                        format!("class {class} via {} → {}", entry.signature, entry.reduction.end),
                        entry.label == want,
                        entry.label.to_string(),
                    ),
                    None => Check::new(format!("class {class}"), false, "no representative"),
                };
                checks.push(check);
            }
            let mut classes: Vec<u8> = entries.iter().map(|e| e.class).collect();
            classes.sort_unstable();
            checks.push(Check::new(
                "eight Morita classes realized",
                classes == (0..8).collect::<Vec<u8>>(),
                format!("{classes:?}"),
            ));
        }
        Err(e) => checks.push(Check::new("eight Morita classes realized", false, e.to_string())),
    }
    checks
}

fn class4() -> Vec<Check> {
    let mut checks = vec![match class4_certificate() {
        Ok(cert) => Check::new(
            "Cl(4,0) ≅ H ⊗ Cl(1,1)",
            cert.span_dim == 16,
            format!("{} (span {})", cert.image_names.join(", "), cert.span_dim),
        ),
        Err(e) => Check::new("Cl(4,0) ≅ H ⊗ Cl(1,1)", false, e.to_string()),
    }];
    let h = divclass::classify(&canonical(TenfoldClass::H)).map(|r| r.class);
    checks.push(Check::new("H is purely even H", h == Ok(TenfoldClass::H), format!("{h:?}")));
    checks
}

fn threefold() -> Vec<Check> {
    let mut checks = Vec::new();
    let mut schur = |name: &str, got: SchurType, want: SchurType| {
        checks.push(Check::new(
            format!("{name} has type {}", want.as_str()),
            got == want,
            if got == want { String::new() } else { format!("got {}", got.as_str()) },
        ));
    };
    schur("C4 rotations", schur_type(&fixtures::cyclic4_rotation()), SchurType::Complex);
    schur("Q8 left regular", schur_type(&fixtures::quaternion_left_regular()), SchurType::Quaternionic);
    schur("S3 standard", schur_type(&fixtures::symmetric3_standard()), SchurType::Real);
    schur("trivial ⊕ trivial", schur_type(&fixtures::trivial_sum()), SchurType::Reducible);
    let mut fs = |name: &str, got: Result<i8, crate::repthree::RepError>, want: i8| {
        checks.push(Check::new(
            format!("fs({name}) = {want}"),
            got == Ok(want),
            if got == Ok(want) { String::new() } else { format!("got {got:?}") },
        ));
    };
    fs("C4 on C by i", fs_indicator(&fixtures::cyclic4_complex()), 0);
    fs("Q8 on C²", fs_indicator(&fixtures::quaternion_complex()), -1);
    fs("S3 standard ⊗ C", fs_indicator(&complexify(&fixtures::symmetric3_standard())), 1);
    checks
}
