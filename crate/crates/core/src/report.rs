//! Serializable analysis documents.
//!
//! Reports contain no timestamps, paths or versions, and every map-like
//! structure is emitted in a fixed order, so equal inputs give byte-equal
//! JSON.

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::bitset::ElementSet;
use crate::classify::{classify, ClassificationReport};
use crate::greens::{
    greens_additive, regularity_profile, starred_greens, GreensData, RegularityProfile,
};
use crate::iso::IsoWitness;
use crate::partition::Partition;
use crate::semiring::Semiring;
use crate::smr::serialize_semiring;
use crate::structure::{blattice_decompose, decompose_rectangular, kernel, StructureError};

/// Hex SHA-256 of the SMR serialization.
pub fn digest(s: &Semiring) -> String {
    sha256_hex(serialize_semiring(s).as_bytes())
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Tables {
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
}

impl Tables {
    pub fn of(s: &Semiring) -> Self {
        let rows = |t: Vec<usize>| t.chunks(s.order()).map(<[usize]>::to_vec).collect();
        Tables {
            order: s.order(),
            add: rows(s.add_table()),
            mul: rows(s.mul_table()),
        }
    }
}

/// A section that may be unavailable for the input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Section<T> {
    Ok { value: T },
    NotApplicable { reason: String },
    Severe { message: String },
}

impl<T> Section<T> {
    fn from_structure(r: Result<T, StructureError>) -> Self {
        match r {
            Ok(value) => Section::Ok { value },
            Err(e) if e.is_severe() => Section::Severe {
                message: e.to_string(),
            },
            Err(e) => Section::NotApplicable {
                reason: e.to_string(),
            },
        }
    }

    pub fn is_severe(&self) -> bool {
        matches!(self, Section::Severe { .. })
    }

    pub fn value(&self) -> Option<&T> {
        match self {
            Section::Ok { value } => Some(value),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentDoc {
    pub members: ElementSet,
    pub tables: Tables,
    /// Names of the classification predicates the component satisfies.
    pub holds: Vec<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BLatticeDoc {
    pub partition: Partition,
    pub quotient: Tables,
    pub components: Vec<ComponentDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RectangularDoc {
    pub band_members: Vec<usize>,
    pub band_part: Tables,
    pub skew_members: Vec<usize>,
    pub skew_part: Tables,
    pub iso: IsoWitness,
}

pub fn blattice_doc(s: &Semiring) -> Section<BLatticeDoc> {
    Section::from_structure(blattice_decompose(s).map(|d| {
        BLatticeDoc {
            partition: d.congruence.partition().clone(),
            quotient: Tables::of(&d.quotient),
            components: d
                .components
                .iter()
                .map(|c| ComponentDoc {
                    members: c.members,
                    tables: Tables::of(&c.semiring),
                    holds: c
                        .report
                        .verdicts()
                        .into_iter()
                        .filter(|(_, v)| v.holds)
                        .map(|(name, _)| name)
                        .collect(),
                })
                .collect(),
        }
    }))
}

pub fn rectangular_doc(s: &Semiring) -> Section<RectangularDoc> {
    Section::from_structure(decompose_rectangular(s).map(|d| RectangularDoc {
        band_part: Tables::of(&d.band_part),
        band_members: d.band_members,
        skew_part: Tables::of(&d.skew_part),
        skew_members: d.skew_members,
        iso: d.iso,
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decompositions {
    pub kernel: Option<ElementSet>,
    pub blattice: Section<BLatticeDoc>,
    pub rectangular: Section<RectangularDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub name: Option<String>,
    pub sha256: String,
    pub tables: Tables,
    pub classification: ClassificationReport,
    pub implication_failures: Vec<&'static str>,
    pub greens: GreensData,
    pub starred_greens: Section<GreensData>,
    pub profile: RegularityProfile,
    pub decompositions: Decompositions,
}

impl AnalysisReport {
    /// Whether any section records a severe diagnostic.
    pub fn has_severe(&self) -> bool {
        !self.implication_failures.is_empty()
            || self.starred_greens.is_severe()
            || self.decompositions.blattice.is_severe()
            || self.decompositions.rectangular.is_severe()
    }
}

pub fn analysis_report(s: &Semiring) -> AnalysisReport {
    let classification = classify(s);
    let starred = match starred_greens(s) {
        Ok(value) => Section::Ok { value },
        Err(e) => Section::NotApplicable {
            reason: e.to_string(),
        },
    };
    AnalysisReport {
        name: s.name().map(str::to_string),
        sha256: digest(s),
        tables: Tables::of(s),
        implication_failures: classification.implication_failures(),
        classification,
        greens: greens_additive(s),
        starred_greens: starred,
        profile: regularity_profile(s),
        decompositions: Decompositions {
            kernel: kernel(s),
            blattice: blattice_doc(s),
            rectangular: rectangular_doc(s),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::Named;

    #[test]
    fn deterministic() {
        let s = Named::TR3.build();
        assert_eq!(to_json(&analysis_report(&s)), to_json(&analysis_report(&s)));
    }

    #[test]
    fn digest_tracks_content() {
        let a = Named::Z2.build();
        let b = Named::B2.build();
        assert_eq!(digest(&a).len(), 64);
        assert_ne!(digest(&a), digest(&b));
    }

    #[test]
    fn sections() {
        let r = analysis_report(&Named::Q2.build());
        assert!(matches!(
            r.decompositions.blattice,
            Section::NotApplicable { .. }
        ));
        assert!(!r.has_severe());
        let r = analysis_report(&Named::RB4.build());
        let rect = r.decompositions.rectangular.value().unwrap();
        assert_eq!(rect.band_part.order, 4);
        assert_eq!(rect.skew_part.order, 1);
    }
}
