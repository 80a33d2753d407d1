//! Human-readable renderings.

use std::fmt::Write as _;
use std::path::Path;

use finsemi::corpus::Manifest;
use finsemi::report::{AnalysisReport, BLatticeDoc, RectangularDoc, Section, Tables};
use finsemi::theorems::{EquivalenceVerdict, SweepRow};
use finsemi::{serialize_semiring, GreensData, Semiring};

pub fn mapping(m: &[usize]) -> String {
    m.iter()
        .enumerate()
        .map(|(a, b)| format!("{a}->{b}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Tables as an SMR block (without the header lines).
fn tables(t: &Tables, indent: &str) -> String {
    let mut out = String::new();
    for (label, rows) in [("add", &t.add), ("mul", &t.mul)] {
        let _ = writeln!(out, "{indent}{label}");
        for row in rows {
            let row: Vec<String> = row.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "{indent}{}", row.join(" "));
        }
    }
    out
}

fn greens(out: &mut String, g: &GreensData, mark: &str) {
    for (rel, p) in [
        ("L", &g.l),
        ("R", &g.r),
        ("H", &g.h),
        ("D", &g.d),
        ("J", &g.j),
    ] {
        let _ = writeln!(out, "  {rel}{mark}: {p}");
    }
    if !g.d_commutes {
        let _ = writeln!(out, "  note: L{mark} and R{mark} do not commute");
    }
    if !g.d_is_equivalence {
        let _ = writeln!(out, "  note: D{mark} is the closure of L{mark}∘R{mark}");
    }
}

fn section<T>(out: &mut String, title: &str, s: &Section<T>, body: impl FnOnce(&mut String, &T)) {
    match s {
        Section::Ok { value } => {
            let _ = writeln!(out, "{title}");
            body(out, value);
        }
        Section::NotApplicable { reason } => {
            let _ = writeln!(out, "{title}: not applicable ({reason})");
        }
        Section::Severe { message } => {
            let _ = writeln!(out, "{title}: SEVERE {message}");
        }
    }
}

pub fn analysis(s: &Semiring, r: &AnalysisReport) -> String {
    let mut out = String::new();
    if let Some(name) = &r.name {
        let _ = writeln!(out, "name: {name}");
    }
    let _ = writeln!(out, "order: {}", r.tables.order);
    let _ = writeln!(out, "sha256: {}", r.sha256);
    out.push_str(&serialize_semiring(s));
    let _ = writeln!(out, "classification");
    for (name, v) in r.classification.verdicts() {
        let mark = if v.holds { "yes" } else { "no " };
        let _ = writeln!(out, "  {name:<30} {mark}  {}", v.evidence);
    }
    for f in &r.implication_failures {
        let _ = writeln!(out, "  SEVERE implication fails: {f}");
    }
    let _ = writeln!(out, "green's relations");
    greens(&mut out, &r.greens, "+");
    section(
        &mut out,
        "starred green's relations",
        &r.starred_greens,
        |out, g| {
            greens(out, g, "*+");
        },
    );
    let _ = writeln!(out, "profile");
    let _ = writeln!(out, "  E+: {}", r.profile.additive_idempotents());
    let _ = writeln!(out, "  Reg+: {}", r.profile.regular_elements());
    for e in &r.profile.elements {
        let index = e.quasi_index.map_or("-".to_string(), |k| k.to_string());
        let cr = e.cr_witness.map_or("-".to_string(), |x| x.to_string());
        let _ = writeln!(
            out,
            "  {}: index {index}, cr witness {cr}, inverses {}, orbit {}+{}",
            e.element, e.inverse_set, e.orbit_index, e.orbit_period
        );
    }
    match &r.decompositions.kernel {
        Some(k) => {
            let _ = writeln!(out, "kernel: {k}");
        }
        None => {
            let _ = writeln!(out, "kernel: none");
        }
    }
    out.push_str(&blattice(&r.decompositions.blattice));
    out.push_str(&rectangular(&r.decompositions.rectangular));
    out
}

pub fn blattice(s: &Section<BLatticeDoc>) -> String {
    let mut out = String::new();
    section(&mut out, "b-lattice decomposition", s, |out, d| {
        let _ = writeln!(out, "  classes: {}", d.partition);
        let _ = writeln!(out, "  quotient");
        out.push_str(&tables(&d.quotient, "    "));
        for c in &d.components {
            let _ = writeln!(out, "  component {}: {}", c.members, c.holds.join(", "));
        }
    });
    out
}

pub fn rectangular(s: &Section<RectangularDoc>) -> String {
    let mut out = String::new();
    section(&mut out, "rectangular decomposition", s, |out, d| {
        let _ = writeln!(out, "  band part on {:?}", d.band_members);
        out.push_str(&tables(&d.band_part, "    "));
        let _ = writeln!(out, "  skew-ring part on {:?}", d.skew_members);
        out.push_str(&tables(&d.skew_part, "    "));
        let verified = if d.iso.verified {
            "verified"
        } else {
            "NOT verified"
        };
        let _ = writeln!(out, "  iso ({verified}): {}", mapping(&d.iso.mapping));
    });
    out
}

pub fn verdicts(vs: &[EquivalenceVerdict]) -> String {
    let mut out = String::new();
    for v in vs {
        let status = if v.equivalent {
            "equivalent"
        } else {
            "COUNTEREXAMPLE"
        };
        let _ = writeln!(out, "{} {} {status}", v.theorem, v.bits());
        for c in &v.conditions {
            let mark = if c.holds { "yes" } else { "no " };
            let _ = writeln!(out, "  ({}) {mark}  {}", c.label, c.evidence);
        }
        if let Some(d) = &v.detail {
            let _ = writeln!(out, "  {d}");
        }
    }
    out
}

pub fn sweep_row(r: &SweepRow) -> String {
    format!(
        "{} (order {}) {} {}: {}",
        r.item,
        r.order,
        r.theorem,
        r.bits,
        r.detail.as_deref().unwrap_or("")
    )
}

pub fn manifest(dir: &Path, m: &Manifest) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "wrote corpus to {} (seed {})", dir.display(), m.seed);
    let _ = writeln!(out, "named: {}", m.named.len());
    for c in &m.census {
        let _ = writeln!(
            out,
            "census order {}: {} associative tables, {} labelled, {} up to isomorphism",
            c.order, c.associative_tables, c.labelled, c.up_to_iso
        );
    }
    let _ = writeln!(out, "rees specs: {}", m.rees_specs.len());
    out
}
