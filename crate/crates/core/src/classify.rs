//! Decision procedures for the named classes of semirings.
//!
//! Every verdict carries a short evidence string: the witness when the
//! property holds, or the least counterexample (by element id) when it fails.

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::greens::{
    completely_regular_witness, greens_additive, is_additively_regular, regular_multiples,
    starred_greens,
};
use crate::semiring::Semiring;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub evidence: String,
}

impl Verdict {
    pub fn yes(evidence: impl Into<String>) -> Self {
        Verdict {
            holds: true,
            evidence: evidence.into(),
        }
    }

    pub fn no(evidence: impl Into<String>) -> Self {
        Verdict {
            holds: false,
            evidence: evidence.into(),
        }
    }

    /// Conjunction; the first failing verdict supplies the evidence.
    fn and(self, other: impl FnOnce() -> Verdict) -> Verdict {
        if self.holds {
            other()
        } else {
            self
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub is_skew_ring: Verdict,
    pub is_b_lattice: Verdict,
    pub is_idempotent_semiring: Verdict,
    pub is_completely_regular: Verdict,
    pub is_additively_quasi_regular: Verdict,
    pub is_quasi_completely_regular: Verdict,
    pub is_completely_simple: Verdict,
    pub is_completely_archimedean: Verdict,
    pub is_additively_orthodox: Verdict,
    pub is_rectangular_band_semiring: Verdict,
    pub is_rectangular_skew_ring: Verdict,
    pub is_left_zero_semiring: Verdict,
    pub is_left_skew_ring: Verdict,
    pub is_quasi_skew_ring: Verdict,
}

impl ClassificationReport {
    pub fn verdicts(&self) -> [(&'static str, &Verdict); 14] {
        [
            ("is_skew_ring", &self.is_skew_ring),
            ("is_b_lattice", &self.is_b_lattice),
            ("is_idempotent_semiring", &self.is_idempotent_semiring),
            ("is_completely_regular", &self.is_completely_regular),
            (
                "is_additively_quasi_regular",
                &self.is_additively_quasi_regular,
            ),
            (
                "is_quasi_completely_regular",
                &self.is_quasi_completely_regular,
            ),
            ("is_completely_simple", &self.is_completely_simple),
            ("is_completely_archimedean", &self.is_completely_archimedean),
            ("is_additively_orthodox", &self.is_additively_orthodox),
            (
                "is_rectangular_band_semiring",
                &self.is_rectangular_band_semiring,
            ),
            ("is_rectangular_skew_ring", &self.is_rectangular_skew_ring),
            ("is_left_zero_semiring", &self.is_left_zero_semiring),
            ("is_left_skew_ring", &self.is_left_skew_ring),
            ("is_quasi_skew_ring", &self.is_quasi_skew_ring),
        ]
    }

    /// Implications that must hold on every report; returns the broken ones.
    pub fn implication_failures(&self) -> Vec<&'static str> {
        let h = |v: &Verdict| v.holds;
        let checks = [
            (
                "completely_simple => completely_regular",
                !h(&self.is_completely_simple) || h(&self.is_completely_regular),
            ),
            (
                "completely_archimedean => quasi_completely_regular",
                !h(&self.is_completely_archimedean) || h(&self.is_quasi_completely_regular),
            ),
            (
                "rectangular_skew_ring => completely_simple & additively_orthodox",
                !h(&self.is_rectangular_skew_ring)
                    || (h(&self.is_completely_simple) && h(&self.is_additively_orthodox)),
            ),
            (
                "left_skew_ring => rectangular_skew_ring",
                !h(&self.is_left_skew_ring) || h(&self.is_rectangular_skew_ring),
            ),
            (
                "skew_ring => left_skew_ring",
                !h(&self.is_skew_ring) || h(&self.is_left_skew_ring),
            ),
            (
                "b_lattice => quasi_completely_regular",
                !h(&self.is_b_lattice) || h(&self.is_quasi_completely_regular),
            ),
        ];
        checks
            .into_iter()
            .filter(|(_, ok)| !ok)
            .map(|(name, _)| name)
            .collect()
    }
}

/// Identity and negation of an additive group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditiveGroup {
    pub zero: usize,
    pub neg: Vec<usize>,
}

/// The group structure of `(S,+)`, or evidence that there is none.
pub fn additive_group(s: &Semiring) -> Result<AdditiveGroup, String> {
    let zero = s
        .elements()
        .find(|&e| s.elements().all(|a| s.add(e, a) == a && s.add(a, e) == a))
        .ok_or_else(|| "no additive identity".to_string())?;
    let neg = s
        .elements()
        .map(|a| {
            s.elements()
                .find(|&b| s.add(a, b) == zero && s.add(b, a) == zero)
                .ok_or_else(|| format!("element {a} has no additive inverse"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AdditiveGroup { zero, neg })
}

pub fn is_skew_ring(s: &Semiring) -> Verdict {
    match additive_group(s) {
        Ok(g) => Verdict::yes(format!("additive group with zero {}", g.zero)),
        Err(e) => Verdict::no(e),
    }
}

fn additive_band(s: &Semiring) -> Verdict {
    match s.elements().find(|&a| !s.is_add_idempotent(a)) {
        Some(a) => Verdict::no(format!("{a}+{a} = {} != {a}", s.add(a, a))),
        None => Verdict::yes("(S,+) is a band"),
    }
}

fn multiplicative_band(s: &Semiring) -> Verdict {
    match s.elements().find(|&a| !s.is_mul_idempotent(a)) {
        Some(a) => Verdict::no(format!("{a}*{a} = {} != {a}", s.mul(a, a))),
        None => Verdict::yes("(S,*) is a band"),
    }
}

fn first_pair(s: &Semiring, mut pred: impl FnMut(usize, usize) -> bool) -> Option<(usize, usize)> {
    s.elements()
        .flat_map(|a| s.elements().map(move |b| (a, b)))
        .find(|&(a, b)| pred(a, b))
}

pub fn is_idempotent_semiring(s: &Semiring) -> Verdict {
    additive_band(s)
        .and(|| multiplicative_band(s))
        .and(|| Verdict::yes("both reducts are bands"))
}

pub fn is_b_lattice(s: &Semiring) -> Verdict {
    additive_band(s)
        .and(|| match first_pair(s, |a, b| s.add(a, b) != s.add(b, a)) {
            Some((a, b)) => Verdict::no(format!("{a}+{b} != {b}+{a}")),
            None => Verdict::yes(""),
        })
        .and(|| multiplicative_band(s))
        .and(|| Verdict::yes("(S,+) semilattice and (S,*) band"))
}

/// The least `x` certifying that `a` is completely regular.
pub fn is_completely_regular_element(s: &Semiring, a: usize) -> Option<usize> {
    completely_regular_witness(s, a)
}

pub fn is_completely_regular(s: &Semiring) -> Verdict {
    match s
        .elements()
        .find(|&a| completely_regular_witness(s, a).is_none())
    {
        Some(a) => Verdict::no(format!("element {a} is not completely regular")),
        None => Verdict::yes("every element has a completely regular witness"),
    }
}

pub fn is_additively_quasi_regular(s: &Semiring) -> Verdict {
    match regular_multiples(s) {
        Ok(_) => Verdict::yes("every element has an additively regular multiple"),
        Err(e) => Verdict::no(e.to_string()),
    }
}

/// The least element none of whose multiples is completely regular.
pub fn qcr_counterexample(s: &Semiring) -> Option<usize> {
    s.elements().find(|&a| {
        let orbit = s.orbit(a);
        !(1..orbit.bound()).any(|k| completely_regular_witness(s, orbit.power(k)).is_some())
    })
}

pub fn is_quasi_completely_regular(s: &Semiring) -> Verdict {
    match qcr_counterexample(s) {
        Some(a) => Verdict::no(format!("element {a} has no completely regular multiple")),
        None => Verdict::yes("every element has a completely regular multiple"),
    }
}

pub fn is_completely_simple(s: &Semiring) -> Verdict {
    is_completely_regular(s).and(|| {
        let j = greens_additive(s).j;
        if j.is_universal() {
            Verdict::yes("completely regular with a single J+ class")
        } else {
            Verdict::no(format!("J+ has {} classes: {j}", j.num_classes()))
        }
    })
}

pub fn is_completely_archimedean(s: &Semiring) -> Verdict {
    is_quasi_completely_regular(s).and(|| match starred_greens(s) {
        Ok(g) if g.j.is_universal() => {
            Verdict::yes("quasi completely regular with a single J*+ class")
        }
        Ok(g) => Verdict::no(format!("J*+ has {} classes: {}", g.j.num_classes(), g.j)),
        Err(e) => Verdict::no(e.to_string()),
    })
}

/// Whether `set` is closed under `+`; returns the first escaping pair.
pub(crate) fn additively_closed(s: &Semiring, set: &ElementSet) -> Option<(usize, usize)> {
    set.iter()
        .flat_map(|a| set.iter().map(move |b| (a, b)))
        .find(|&(a, b)| !set.contains(s.add(a, b)))
}

pub fn is_additively_orthodox(s: &Semiring) -> Verdict {
    let e = s.additive_idempotents();
    match additively_closed(s, &e) {
        Some((a, b)) => Verdict::no(format!(
            "{a}+{b} = {} is not an additive idempotent",
            s.add(a, b)
        )),
        None => Verdict::yes(format!("E+ = {e} is closed under +")),
    }
}

pub fn is_rectangular_band_semiring(s: &Semiring) -> Verdict {
    is_idempotent_semiring(s).and(|| match first_pair(s, |a, x| s.sum(&[a, x, a]) != a) {
        Some((a, x)) => Verdict::no(format!("{a}+{x}+{a} != {a}")),
        None => Verdict::yes("idempotent semiring with rectangular (S,+)"),
    })
}

pub fn is_left_zero_semiring(s: &Semiring) -> Verdict {
    is_idempotent_semiring(s).and(|| match first_pair(s, |a, b| s.add(a, b) != a) {
        Some((a, b)) => Verdict::no(format!("{a}+{b} != {a}")),
        None => Verdict::yes("idempotent semiring with left zero (S,+)"),
    })
}

pub fn is_rectangular_skew_ring(s: &Semiring) -> Verdict {
    is_completely_simple(s)
        .and(|| is_additively_orthodox(s))
        .and(|| Verdict::yes("completely simple with E+ closed under +"))
}

pub fn is_left_skew_ring(s: &Semiring) -> Verdict {
    is_rectangular_skew_ring(s).and(|| {
        let e = s.additive_idempotents();
        let bad = e
            .iter()
            .flat_map(|a| e.iter().map(move |b| (a, b)))
            .find(|&(a, b)| s.add(a, b) != a);
        match bad {
            Some((a, b)) => Verdict::no(format!("E+ is not left zero: {a}+{b} != {a}")),
            None => Verdict::yes("rectangular skew-ring with left zero E+"),
        }
    })
}

/// Reg⁺S is a sub-skew-ring and every element has a multiple in it.
pub fn is_quasi_skew_ring(s: &Semiring) -> Verdict {
    let reg: ElementSet = s
        .elements()
        .filter(|&a| is_additively_regular(s, a))
        .collect();
    let (sub, _) = match s.induced(&reg) {
        Ok(x) => x,
        Err(e) => return Verdict::no(format!("Reg+ = {reg} is not a subsemiring: {e}")),
    };
    if let Err(e) = additive_group(&sub) {
        return Verdict::no(format!("Reg+ = {reg} is not a skew-ring: {e}"));
    }
    let escaping = s.elements().find(|&a| {
        let orbit = s.orbit(a);
        !(1..orbit.bound()).any(|k| reg.contains(orbit.power(k)))
    });
    match escaping {
        Some(a) => Verdict::no(format!("no multiple of {a} lies in Reg+")),
        None => Verdict::yes(format!("nil-extension of the skew-ring Reg+ = {reg}")),
    }
}

pub fn classify(s: &Semiring) -> ClassificationReport {
    ClassificationReport {
        is_skew_ring: is_skew_ring(s),
        is_b_lattice: is_b_lattice(s),
        is_idempotent_semiring: is_idempotent_semiring(s),
        is_completely_regular: is_completely_regular(s),
        is_additively_quasi_regular: is_additively_quasi_regular(s),
        is_quasi_completely_regular: is_quasi_completely_regular(s),
        is_completely_simple: is_completely_simple(s),
        is_completely_archimedean: is_completely_archimedean(s),
        is_additively_orthodox: is_additively_orthodox(s),
        is_rectangular_band_semiring: is_rectangular_band_semiring(s),
        is_rectangular_skew_ring: is_rectangular_skew_ring(s),
        is_left_zero_semiring: is_left_zero_semiring(s),
        is_left_skew_ring: is_left_skew_ring(s),
        is_quasi_skew_ring: is_quasi_skew_ring(s),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> Semiring {
        Semiring::from_fns(2, |a, b| a ^ b, |a, b| a & b).unwrap()
    }
    fn b2() -> Semiring {
        Semiring::from_fns(2, usize::max, usize::min).unwrap()
    }
    fn q2() -> Semiring {
        Semiring::from_fns(2, usize::max, |_, _| 0).unwrap()
    }
    fn tr3() -> Semiring {
        Semiring::from_fns(3, |a, b| (a + b).min(2), |a, b| (a * b).min(2)).unwrap()
    }

    #[test]
    fn z2_report() {
        let r = classify(&z2());
        assert!(r.is_skew_ring.holds);
        assert!(r.is_completely_simple.holds);
        assert!(r.is_rectangular_skew_ring.holds);
        assert!(r.is_left_skew_ring.holds);
        assert!(r.is_quasi_skew_ring.holds);
    }

    #[test]
    fn b2_report() {
        let r = classify(&b2());
        assert!(r.is_b_lattice.holds);
        assert!(r.is_completely_regular.holds);
        assert!(!r.is_completely_simple.holds);
        assert_eq!(r.is_completely_simple.evidence, "J+ has 2 classes: {0} {1}");
    }

    #[test]
    fn q2_report() {
        let r = classify(&q2());
        assert!(r.is_additively_quasi_regular.holds);
        assert!(!r.is_quasi_completely_regular.holds);
        assert_eq!(qcr_counterexample(&q2()), Some(1));
    }

    #[test]
    fn tr3_report() {
        let r = classify(&tr3());
        assert!(r.is_quasi_completely_regular.holds);
        assert!(!r.is_completely_archimedean.holds);
        assert!(!r.is_b_lattice.holds);
        assert_eq!(
            r.is_completely_archimedean.evidence,
            "J*+ has 2 classes: {0} {1,2}"
        );
    }

    #[test]
    fn element_witnesses() {
        assert_eq!(is_completely_regular_element(&z2(), 1), Some(1));
        assert_eq!(is_completely_regular_element(&q2(), 1), None);
        assert_eq!(is_completely_regular_element(&b2(), 1), Some(0));
    }

    #[test]
    fn skew_rings_are_qcr() {
        let z3 = Semiring::from_fns(3, |a, b| (a + b) % 3, |a, b| a * b % 3).unwrap();
        assert!(is_quasi_completely_regular(&z3).holds);
        assert!(classify(&z3).implication_failures().is_empty());
    }
}
