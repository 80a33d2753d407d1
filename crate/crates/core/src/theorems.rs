//! Characterization theorems as per-instance equivalence checks.
//!
//! Each condition is decided from its own definition. Conditions share
//! helper routines but never each other's results, so a wrong evaluator
//! shows up as a disagreement instead of being masked.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::bitset::ElementSet;
use crate::classify::{
    additive_group, additively_closed, is_b_lattice, is_completely_archimedean,
    is_completely_simple, is_idempotent_semiring, is_left_skew_ring, is_quasi_completely_regular,
    is_quasi_skew_ring, is_rectangular_band_semiring, is_rectangular_skew_ring, is_skew_ring,
    Verdict,
};
use crate::corpus::CorpusItem;
use crate::greens::{greens_additive, is_additively_regular, regular_multiples, starred_greens};
use crate::iso::{find_isomorphism, IsoWitness};
use crate::partition::Partition;
use crate::rees::{corollary_failures, sandwich_violations, ReesError, ReesSpec};
use crate::semiring::Semiring;
use crate::structure::{
    bi_ideal_escape, congruence_failure, decompose_rectangular, quotient_by, Congruence,
    RectangularDecomposition, StructureError,
};

/// Largest order for which the skew-ring kernel is searched over all subsets.
pub const EXHAUSTIVE_BI_IDEAL_ORDER: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    Thm2_8,
    Thm2_11,
    Thm2_12,
    Thm3_4,
    Thm3_5,
    Thm3_6,
    Thm3_7,
    Thm3_10,
    Thm3_11,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        TheoremId::Thm2_8,
        TheoremId::Thm2_11,
        TheoremId::Thm2_12,
        TheoremId::Thm3_4,
        TheoremId::Thm3_5,
        TheoremId::Thm3_6,
        TheoremId::Thm3_7,
        TheoremId::Thm3_10,
        TheoremId::Thm3_11,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Thm2_8 => "thm_2_8",
            TheoremId::Thm2_11 => "thm_2_11",
            TheoremId::Thm2_12 => "thm_2_12",
            TheoremId::Thm3_4 => "thm_3_4",
            TheoremId::Thm3_5 => "thm_3_5",
            TheoremId::Thm3_6 => "thm_3_6",
            TheoremId::Thm3_7 => "thm_3_7",
            TheoremId::Thm3_10 => "thm_3_10",
            TheoremId::Thm3_11 => "thm_3_11",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown theorem id `{0}`")]
pub struct UnknownTheorem(pub String);

impl FromStr for TheoremId {
    type Err = UnknownTheorem;

    fn from_str(s: &str) -> Result<Self, UnknownTheorem> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| UnknownTheorem(s.to_string()))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionVerdict {
    pub label: &'static str,
    pub holds: bool,
    pub evidence: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceVerdict {
    pub theorem: TheoremId,
    pub conditions: Vec<ConditionVerdict>,
    pub equivalent: bool,
    /// On disagreement: the first holding and first failing condition with
    /// their evidence.
    pub detail: Option<String>,
}

impl EquivalenceVerdict {
    fn new(theorem: TheoremId, conditions: Vec<(&'static str, Verdict)>) -> Self {
        let conditions: Vec<ConditionVerdict> = conditions
            .into_iter()
            .map(|(label, v)| ConditionVerdict {
                label,
                holds: v.holds,
                evidence: v.evidence,
            })
            .collect();
        let yes = conditions.iter().find(|c| c.holds);
        let no = conditions.iter().find(|c| !c.holds);
        let detail = match (yes, no) {
            (Some(y), Some(n)) => Some(format!(
                "({}) holds [{}] but ({}) fails [{}]",
                y.label, y.evidence, n.label, n.evidence
            )),
            _ => None,
        };
        EquivalenceVerdict {
            theorem,
            equivalent: detail.is_none(),
            conditions,
            detail,
        }
    }

    /// Condition truth values as a bit string, e.g. `"101"`.
    pub fn bits(&self) -> String {
        self.conditions
            .iter()
            .map(|c| if c.holds { '1' } else { '0' })
            .collect()
    }
}

pub fn check_equivalence(s: &Semiring, theorem: TheoremId) -> EquivalenceVerdict {
    let conditions = match theorem {
        TheoremId::Thm2_8 => vec![
            ("1", is_quasi_completely_regular(s)),
            ("2", h_star_classes_quasi_skew(s)),
            ("3", union_of_quasi_skew_rings(s)),
            (
                "4",
                blattice_of(s, j_star(s), "J*+", "completely Archimedean", |t| {
                    is_completely_archimedean(t)
                }),
            ),
            ("5", idempotent_semiring_of_quasi_skew_rings(s)),
        ],
        TheoremId::Thm2_11 => vec![
            ("1", is_quasi_skew_ring(s)),
            ("2", nil_extension_of_skew_ring(s)),
        ],
        TheoremId::Thm2_12 => vec![
            ("1", is_completely_archimedean(s)),
            (
                "2",
                nil_extension_of(s, "completely simple", is_completely_simple),
            ),
        ],
        TheoremId::Thm3_4 => vec![
            ("i", blattice_of_nil_rect(s)),
            (
                "ii",
                is_quasi_completely_regular(s).and(|| idempotent_sums_stabilize(s)),
            ),
            (
                "iii",
                quasi_regular_with(s, "a=a+2x+2a", |s, a, x| s.sum(&[a, x, x, a, a]) == a),
            ),
        ],
        TheoremId::Thm3_5 => vec![
            (
                "1",
                is_completely_archimedean(s).and(|| idempotents_closed(s)),
            ),
            (
                "2",
                nil_extension_of(s, "rectangular skew-ring", is_rectangular_skew_ring),
            ),
        ],
        TheoremId::Thm3_6 => vec![
            (
                "i",
                is_quasi_completely_regular(s).and(|| idempotents_closed(s)),
            ),
            (
                "ii",
                quasi_regular_with(s, "a=a+2x+2a", |s, a, x| s.sum(&[a, x, x, a, a]) == a)
                    .and(|| regular_closed(s)),
            ),
            ("iii", blattice_of_nil_rect(s).and(|| idempotents_closed(s))),
        ],
        TheoremId::Thm3_7 => vec![
            (
                "i",
                is_quasi_completely_regular(s).and(|| idempotents_commute(s)),
            ),
            (
                "ii",
                blattice_of(s, h_star(s), "H*+", "a quasi skew-ring", is_quasi_skew_ring)
                    .and(|| idempotents_commute(s)),
            ),
            ("iii", regular_part_blattice_of_skew_rings(s)),
        ],
        TheoremId::Thm3_10 => vec![
            ("i", blattice_of_nil_left(s)),
            (
                "ii",
                is_quasi_completely_regular(s).and(|| idempotent_sums_left_stable(s)),
            ),
            (
                "iii",
                quasi_regular_with(s, "a+x=a+2x+a", |s, a, x| {
                    s.add(a, x) == s.sum(&[a, x, x, a])
                }),
            ),
        ],
        TheoremId::Thm3_11 => vec![
            ("i", blattice_of_nil_left(s).and(|| idempotents_closed(s))),
            (
                "ii",
                is_quasi_completely_regular(s).and(|| idempotents_left_absorb(s)),
            ),
        ],
    };
    EquivalenceVerdict::new(theorem, conditions)
}

trait And {
    fn and(self, other: impl FnOnce() -> Verdict) -> Verdict;
}

impl And for Verdict {
    fn and(self, other: impl FnOnce() -> Verdict) -> Verdict {
        if self.holds {
            other()
        } else {
            self
        }
    }
}

fn j_star(s: &Semiring) -> Result<Partition, String> {
    starred_greens(s).map(|g| g.j).map_err(|e| e.to_string())
}

fn h_star(s: &Semiring) -> Result<Partition, String> {
    starred_greens(s).map(|g| g.h).map_err(|e| e.to_string())
}

/// Each class of `p` as an induced subsemiring satisfying `test`.
fn classes_satisfy(
    s: &Semiring,
    p: &Partition,
    what: &str,
    test: impl Fn(&Semiring) -> Verdict,
) -> Verdict {
    for class in p.classes() {
        let sub = match s.induced(&class) {
            Ok((sub, _)) => sub,
            Err(e) => return Verdict::no(format!("class {class} is not a subsemiring: {e}")),
        };
        let v = test(&sub);
        if !v.holds {
            return Verdict::no(format!("class {class} is not {what}: {}", v.evidence));
        }
    }
    Verdict::yes(format!("{} classes, each {what}", p.num_classes()))
}

/// `p` is a congruence, `S/p` passes `quotient_test`, every class passes `test`.
fn decomposition_of(
    s: &Semiring,
    p: Result<Partition, String>,
    name: &str,
    quotient_kind: &str,
    quotient_test: impl Fn(&Semiring) -> Verdict,
    what: &str,
    test: impl Fn(&Semiring) -> Verdict,
) -> Verdict {
    let p = match p {
        Ok(p) => p,
        Err(e) => return Verdict::no(e),
    };
    match congruence_failure(s, &p) {
        Ok(None) => {}
        Ok(Some(f)) => return Verdict::no(format!("{name} is not a congruence: {f}")),
        Err(e) => return Verdict::no(e.to_string()),
    }
    let c = Congruence::new(s, p.clone()).expect("checked above");
    let q = quotient_test(&quotient_by(s, &c));
    if !q.holds {
        return Verdict::no(format!("S/{name} is not {quotient_kind}: {}", q.evidence));
    }
    classes_satisfy(s, &p, what, test)
}

fn blattice_of(
    s: &Semiring,
    p: Result<Partition, String>,
    name: &str,
    what: &str,
    test: impl Fn(&Semiring) -> Verdict,
) -> Verdict {
    decomposition_of(s, p, name, "a b-lattice", is_b_lattice, what, test)
}

fn h_star_classes_quasi_skew(s: &Semiring) -> Verdict {
    match h_star(s) {
        Ok(h) => classes_satisfy(s, &h, "a quasi skew-ring", is_quasi_skew_ring),
        Err(e) => Verdict::no(e),
    }
}

/// A partition into quasi skew-rings puts each element with its additive
/// idempotent power, so the only candidate is the partition by that power.
fn union_of_quasi_skew_rings(s: &Semiring) -> Verdict {
    let p = Partition::from_keys(s.elements().map(|a| s.orbit(a).idempotent()));
    classes_satisfy(s, &p, "a quasi skew-ring", is_quasi_skew_ring)
}

fn idempotent_semiring_of_quasi_skew_rings(s: &Semiring) -> Verdict {
    decomposition_of(
        s,
        h_star(s),
        "H*+",
        "an idempotent semiring",
        is_idempotent_semiring,
        "a quasi skew-ring",
        is_quasi_skew_ring,
    )
}

/// Nil-extension of a kernel passing `test`. The kernel of a nil-extension
/// with regular kernel is forced to be `Reg⁺S`, which is the candidate.
fn nil_extension_of(s: &Semiring, what: &str, test: impl Fn(&Semiring) -> Verdict) -> Verdict {
    let reg: ElementSet = s
        .elements()
        .filter(|&a| is_additively_regular(s, a))
        .collect();
    match bi_ideal_escape(s, &reg) {
        Ok(None) => {}
        Ok(Some(e)) => return Verdict::no(format!("Reg+ = {reg} is not a bi-ideal: {e}")),
        Err(e) => return Verdict::no(e.to_string()),
    }
    let sub = match s.induced(&reg) {
        Ok((sub, _)) => sub,
        Err(e) => return Verdict::no(e.to_string()),
    };
    let v = test(&sub);
    if !v.holds {
        return Verdict::no(format!("kernel {reg} is not {what}: {}", v.evidence));
    }
    nil_over(s, &reg, what)
}

fn nil_over(s: &Semiring, k: &ElementSet, what: &str) -> Verdict {
    let stuck = s.elements().find(|&a| {
        let orbit = s.orbit(a);
        !(1..orbit.bound()).any(|n| k.contains(orbit.power(n)))
    });
    match stuck {
        Some(a) => Verdict::no(format!("no multiple of {a} lies in {k}")),
        None => Verdict::yes(format!("nil-extension of {what} {k}")),
    }
}

/// Bi-ideals inducing a skew-ring over which `S` is nil; all subsets are
/// tried up to [`EXHAUSTIVE_BI_IDEAL_ORDER`], otherwise only `Reg⁺S`.
fn nil_extension_of_skew_ring(s: &Semiring) -> Verdict {
    if s.order() > EXHAUSTIVE_BI_IDEAL_ORDER {
        return nil_extension_of(s, "a skew-ring", is_skew_ring);
    }
    let n = s.order();
    for mask in 1u32..(1 << n) {
        let k: ElementSet = (0..n).filter(|&a| mask & (1 << a) != 0).collect();
        if !matches!(bi_ideal_escape(s, &k), Ok(None)) {
            continue;
        }
        let Ok((sub, _)) = s.induced(&k) else {
            continue;
        };
        if additive_group(&sub).is_err() {
            continue;
        }
        let v = nil_over(s, &k, "the skew-ring");
        if v.holds {
            return v;
        }
    }
    Verdict::no("no bi-ideal is a skew-ring with S nil over it")
}

fn blattice_of_nil_rect(s: &Semiring) -> Verdict {
    blattice_of(
        s,
        j_star(s),
        "J*+",
        "a nil-extension of a rectangular skew-ring",
        |t| nil_extension_of(t, "a rectangular skew-ring", is_rectangular_skew_ring),
    )
}

fn blattice_of_nil_left(s: &Semiring) -> Verdict {
    blattice_of(
        s,
        j_star(s),
        "J*+",
        "a nil-extension of a left skew-ring",
        |t| nil_extension_of(t, "a left skew-ring", is_left_skew_ring),
    )
}

fn idempotent_pairs(s: &Semiring) -> impl Iterator<Item = (usize, usize)> + '_ {
    let e = s.additive_idempotents();
    e.iter().flat_map(move |a| e.iter().map(move |b| (a, b)))
}

/// `∀ e,f ∈ E⁺ ∃ n ≥ 1: n(e+f) = (n+1)(e+f)`, with `n` up to the orbit bound.
fn idempotent_sums_stabilize(s: &Semiring) -> Verdict {
    for (e, f) in idempotent_pairs(s) {
        let orbit = s.orbit(s.add(e, f));
        if !(1..=orbit.bound()).any(|n| orbit.power(n) == orbit.power(n + 1)) {
            return Verdict::no(format!("multiples of {e}+{f} never stabilize"));
        }
    }
    Verdict::yes("n(e+f) = (n+1)(e+f) for some n, all e,f in E+")
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// `∀ e,f ∈ E⁺ ∃ n ≥ 1: n(e+f) = n(e+f+e)`. Past both indices the pair of
/// multiples repeats with the lcm of the periods, which bounds the search.
fn idempotent_sums_left_stable(s: &Semiring) -> Verdict {
    for (e, f) in idempotent_pairs(s) {
        let (u, v) = (s.orbit(s.add(e, f)), s.orbit(s.sum(&[e, f, e])));
        let bound = u.index.max(v.index) + lcm(u.period, v.period);
        if !(1..=bound).any(|n| u.power(n) == v.power(n)) {
            return Verdict::no(format!("n({e}+{f}) != n({e}+{f}+{e}) for every n"));
        }
    }
    Verdict::yes("n(e+f) = n(e+f+e) for some n, all e,f in E+")
}

fn idempotents_closed(s: &Semiring) -> Verdict {
    match additively_closed(s, &s.additive_idempotents()) {
        Some((e, f)) => Verdict::no(format!("{e}+{f} = {} is not in E+", s.add(e, f))),
        None => Verdict::yes("E+ is closed under +"),
    }
}

fn idempotents_commute(s: &Semiring) -> Verdict {
    match idempotent_pairs(s).find(|&(e, f)| s.add(e, f) != s.add(f, e)) {
        Some((e, f)) => Verdict::no(format!("{e}+{f} != {f}+{e}")),
        None => Verdict::yes("E+ is commutative"),
    }
}

fn idempotents_left_absorb(s: &Semiring) -> Verdict {
    match idempotent_pairs(s).find(|&(e, f)| s.add(e, f) != s.sum(&[e, f, e])) {
        Some((e, f)) => Verdict::no(format!("{e}+{f} != {e}+{f}+{e}")),
        None => Verdict::yes("e+f = e+f+e on E+"),
    }
}

fn regular_set(s: &Semiring) -> ElementSet {
    s.elements()
        .filter(|&a| is_additively_regular(s, a))
        .collect()
}

fn regular_closed(s: &Semiring) -> Verdict {
    let reg = regular_set(s);
    match additively_closed(s, &reg) {
        Some((a, b)) => Verdict::no(format!("{a}+{b} = {} is not in Reg+", s.add(a, b))),
        None => Verdict::yes(format!("Reg+ = {reg} is closed under +")),
    }
}

/// Additively quasi regular, `b² H*⁺ b` for all `b`, and `a = a+x+a`
/// implies `law(a, x)`.
fn quasi_regular_with(
    s: &Semiring,
    name: &str,
    law: impl Fn(&Semiring, usize, usize) -> bool,
) -> Verdict {
    if let Err(e) = regular_multiples(s) {
        return Verdict::no(e.to_string());
    }
    let h = match h_star(s) {
        Ok(h) => h,
        Err(e) => return Verdict::no(e),
    };
    if let Some(b) = s.elements().find(|&b| !h.same(s.mul(b, b), b)) {
        return Verdict::no(format!(
            "{b}*{b} = {} is not H*+ related to {b}",
            s.mul(b, b)
        ));
    }
    for a in s.elements() {
        for x in s.elements() {
            if s.sum(&[a, x, a]) == a && !law(s, a, x) {
                return Verdict::no(format!("a={a}, x={x}: a=a+x+a but not {name}"));
            }
        }
    }
    Verdict::yes(format!(
        "quasi regular, b*b H*+ b, and a=a+x+a implies {name}"
    ))
}

fn regular_part_blattice_of_skew_rings(s: &Semiring) -> Verdict {
    if let Err(e) = regular_multiples(s) {
        return Verdict::no(e.to_string());
    }
    let v = regular_closed(s);
    if !v.holds {
        return v;
    }
    let reg = regular_set(s);
    let sub = match s.induced(&reg) {
        Ok((sub, _)) => sub,
        Err(e) => return Verdict::no(format!("Reg+ is not a subsemiring: {e}")),
    };
    let h = greens_additive(&sub).h;
    blattice_of(&sub, Ok(h), "H+ on Reg+", "a skew-ring", is_skew_ring)
}

/// Outcome of [`verify_thm_3_3`].
#[derive(Debug, Clone)]
pub enum Thm33Outcome {
    /// `S` is a rectangular skew-ring and splits as a product.
    Decomposed(RectangularDecomposition),
    /// `S` is not a rectangular skew-ring and no pool product matches it.
    Refuted {
        reason: String,
        pairs_checked: usize,
    },
    /// `S` is not a rectangular skew-ring yet matches a pool product.
    Counterexample {
        band: String,
        skew: String,
        iso: IsoWitness,
    },
}

/// Forward direction by decomposition; otherwise a scan of all products of
/// a rectangular band semiring and a skew-ring from the pools with matching
/// order. Pool members failing their own class test are skipped.
pub fn verify_thm_3_3(
    s: &Semiring,
    bands: &[CorpusItem],
    skews: &[CorpusItem],
) -> Result<Thm33Outcome, StructureError> {
    let v = is_rectangular_skew_ring(s);
    if v.holds {
        let d = decompose_rectangular(s)?;
        let b = is_rectangular_band_semiring(&d.band_part);
        let r = is_skew_ring(&d.skew_part);
        if !(b.holds && r.holds) {
            return Err(StructureError::Severe(format!(
                "factors misclassified: band part [{}], skew part [{}]",
                b.evidence, r.evidence
            )));
        }
        return Ok(Thm33Outcome::Decomposed(d));
    }
    let mut pairs_checked = 0;
    for b in bands
        .iter()
        .filter(|b| is_rectangular_band_semiring(&b.semiring).holds)
    {
        for r in skews.iter().filter(|r| is_skew_ring(&r.semiring).holds) {
            if b.semiring.order() * r.semiring.order() != s.order() {
                continue;
            }
            pairs_checked += 1;
            let product = crate::semiring::direct_product(&b.semiring, &r.semiring)
                .map_err(|e| StructureError::Severe(e.to_string()))?;
            if let Some(iso) = find_isomorphism(s, &product) {
                return Ok(Thm33Outcome::Counterexample {
                    band: b.name.clone(),
                    skew: r.name.clone(),
                    iso,
                });
            }
        }
    }
    Ok(Thm33Outcome::Refuted {
        reason: v.evidence,
        pairs_checked,
    })
}

/// The three derived sandwich identities over every index tuple.
pub fn verify_cor_2_3(spec: &ReesSpec) -> Result<Verdict, ReesError> {
    let violations = sandwich_violations(spec)?;
    if !violations.is_empty() {
        return Err(ReesError::InvalidSpec(violations));
    }
    Ok(match corollary_failures(spec)?.into_iter().next() {
        Some(first) => Verdict::no(first),
        None => Verdict::yes("all identities hold"),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub item: String,
    pub order: usize,
    pub theorem: TheoremId,
    pub bits: String,
    pub equivalent: bool,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub items: usize,
    pub checks: usize,
    pub counterexamples: usize,
    pub rows: Vec<SweepRow>,
}

/// Every theorem on every item, in item order. Never stops early.
pub fn sweep(items: &[CorpusItem], theorems: &[TheoremId]) -> SweepSummary {
    let rows: Vec<SweepRow> = items
        .par_iter()
        .flat_map_iter(|item| {
            theorems.iter().map(move |&t| {
                let v = check_equivalence(&item.semiring, t);
                SweepRow {
                    item: item.name.clone(),
                    order: item.semiring.order(),
                    theorem: t,
                    bits: v.bits(),
                    equivalent: v.equivalent,
                    detail: v.detail,
                }
            })
        })
        .collect();
    SweepSummary {
        items: items.len(),
        checks: rows.len(),
        counterexamples: rows.iter().filter(|r| !r.equivalent).count(),
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{m4_spec, rect_band_pool, skew_ring_pool, Family, Named};
    use crate::rees::Band;

    fn all_bits(s: &Semiring, t: TheoremId) -> String {
        let v = check_equivalence(s, t);
        assert!(v.equivalent, "{t}: {:?}", v.detail);
        v.bits()
    }

    #[test]
    fn ids_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.as_str().parse::<TheoremId>(), Ok(t));
        }
        assert!("thm_9_9".parse::<TheoremId>().is_err());
    }

    #[test]
    fn spec_examples() {
        assert_eq!(all_bits(&Named::TR3.build(), TheoremId::Thm3_4), "111");
        assert_eq!(all_bits(&Named::Q2.build(), TheoremId::Thm2_8), "00000");
        assert_eq!(all_bits(&Named::Z2.build(), TheoremId::Thm3_7), "111");
    }

    #[test]
    fn left_and_right_zero() {
        let lz = Named::LZ2.build();
        assert_eq!(all_bits(&lz, TheoremId::Thm3_10), "111");
        assert_eq!(all_bits(&lz, TheoremId::Thm3_11), "11");
        let rz = crate::corpus::build_family(Family::RightZero(2)).unwrap();
        assert_eq!(all_bits(&rz, TheoremId::Thm3_10), "000");
        assert_eq!(all_bits(&rz, TheoremId::Thm3_4), "111");
    }

    #[test]
    fn nil_extensions_of_skew_rings() {
        assert_eq!(all_bits(&Named::N2.build(), TheoremId::Thm2_11), "11");
        assert_eq!(all_bits(&Named::TR3.build(), TheoremId::Thm2_11), "00");
        assert_eq!(all_bits(&Named::N2.build(), TheoremId::Thm2_12), "11");
    }

    #[test]
    fn disagreement_carries_detail() {
        let v = EquivalenceVerdict::new(
            TheoremId::Thm2_12,
            vec![("1", Verdict::yes("a")), ("2", Verdict::no("b"))],
        );
        assert!(!v.equivalent);
        assert_eq!(v.bits(), "10");
        assert_eq!(v.detail.as_deref(), Some("(1) holds [a] but (2) fails [b]"));
    }

    #[test]
    fn product_decomposition_outcomes() {
        let (bands, skews) = (rect_band_pool(4).unwrap(), skew_ring_pool(4).unwrap());
        match verify_thm_3_3(&Named::M4.build(), &bands, &skews).unwrap() {
            Thm33Outcome::Decomposed(d) => {
                assert_eq!((d.band_part.order(), d.skew_part.order()), (2, 2));
            }
            other => panic!("{other:?}"),
        }
        match verify_thm_3_3(&Named::B2.build(), &bands, &skews).unwrap() {
            Thm33Outcome::Refuted { pairs_checked, .. } => assert!(pairs_checked > 0),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn sandwich_identities() {
        assert!(verify_cor_2_3(&m4_spec()).unwrap().holds);
        let spec = m4_spec();
        let bad = ReesSpec::new(
            spec.ring().clone(),
            spec.index_i().clone(),
            Band::trivial("o"),
            vec![1, 0],
        )
        .unwrap();
        assert!(matches!(
            verify_cor_2_3(&bad),
            Err(ReesError::InvalidSpec(_))
        ));
    }
}
