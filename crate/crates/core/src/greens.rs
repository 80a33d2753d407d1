//! Additive Green's relations, regularity data and the starred relations.
//!
//! Principal ideals of `(S,+)` are computed as bit-sets:
//! `L(a) = {a} ∪ (S+a)`, `R(a) = {a} ∪ (a+S)` and
//! `J(a) = ⋃ { R(b) : b ∈ L(a) }`.
//!
//! The starred relations compare least additively regular multiples: with
//! `ρ(a) = m·a` for the least `m ≥ 1` making `m·a` additively regular,
//! `a L*⁺ b` iff `ρ(a) L⁺ ρ(b)`, and likewise for `R*⁺` and `J*⁺`.

use serde::Serialize;
use thiserror::Error;

use crate::bitset::ElementSet;
use crate::partition::{Partition, Relation};
use crate::semiring::Semiring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GreensVariant {
    PlainAdditive,
    Starred,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreensData {
    pub variant: GreensVariant,
    pub l: Partition,
    pub r: Partition,
    pub h: Partition,
    pub d: Partition,
    pub j: Partition,
    /// Whether `L∘R = R∘L` held when `D` was computed.
    pub d_commutes: bool,
    /// Whether `L∘R` was already an equivalence. When it is not, `d` holds
    /// its equivalence closure.
    pub d_is_equivalence: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GreensError {
    #[error("element {0} has no additively regular multiple")]
    NoRegularMultiple(usize),
}

/// Principal one-sided and two-sided ideals of `(S,+)`.
#[derive(Debug, Clone)]
pub struct PrincipalIdeals {
    pub left: Vec<ElementSet>,
    pub right: Vec<ElementSet>,
    pub two_sided: Vec<ElementSet>,
}

pub fn principal_ideals(s: &Semiring) -> PrincipalIdeals {
    let left: Vec<ElementSet> = s
        .elements()
        .map(|a| {
            let mut set = ElementSet::singleton(a);
            for x in s.elements() {
                set.insert(s.add(x, a));
            }
            set
        })
        .collect();
    let right: Vec<ElementSet> = s
        .elements()
        .map(|a| {
            let mut set = ElementSet::singleton(a);
            for x in s.add_row(a) {
                set.insert(x);
            }
            set
        })
        .collect();
    let two_sided = left
        .iter()
        .map(|l| {
            let mut set = ElementSet::new();
            for b in l {
                set.union_with(&right[b]);
            }
            set
        })
        .collect();
    PrincipalIdeals {
        left,
        right,
        two_sided,
    }
}

fn assemble(variant: GreensVariant, l: Partition, r: Partition, j: Partition) -> GreensData {
    let h = l.meet(&r);
    let lr = Relation::of_partition(&l).compose(&Relation::of_partition(&r));
    let rl = Relation::of_partition(&r).compose(&Relation::of_partition(&l));
    let (d, d_is_equivalence) = match lr.to_partition() {
        Some(d) => (d, true),
        None => (lr.equivalence_closure(), false),
    };
    GreensData {
        variant,
        l,
        r,
        h,
        d,
        j,
        d_commutes: lr == rl,
        d_is_equivalence,
    }
}

/// `L⁺, R⁺, H⁺, D⁺, J⁺` on the additive reduct.
pub fn greens_additive(s: &Semiring) -> GreensData {
    let ideals = principal_ideals(s);
    assemble(
        GreensVariant::PlainAdditive,
        Partition::from_keys(ideals.left),
        Partition::from_keys(ideals.right),
        Partition::from_keys(ideals.two_sided),
    )
}

/// `a = a + x + a` for some `x`.
pub fn is_additively_regular(s: &Semiring, a: usize) -> bool {
    s.add_row(a).any(|ax| s.add(ax, a) == a)
}

/// The least `x` with `a = a+x+a`, `a+x = x+a` and `a(a+x) = a+x`.
pub fn completely_regular_witness(s: &Semiring, a: usize) -> Option<usize> {
    s.elements().find(|&x| {
        let ax = s.add(a, x);
        s.add(ax, a) == a && ax == s.add(x, a) && s.mul(a, ax) == ax
    })
}

/// `V⁺(a) = {x : a = a+x+a and x = x+a+x}`.
pub fn additive_inverses(s: &Semiring, a: usize) -> ElementSet {
    s.elements()
        .filter(|&x| s.sum(&[a, x, a]) == a && s.sum(&[x, a, x]) == x)
        .collect()
}

/// Per-element regularity data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementProfile {
    pub element: usize,
    pub add_idempotent: bool,
    pub add_regular: bool,
    /// Least `m ≥ 1` with `m·a` additively regular.
    pub quasi_index: Option<usize>,
    pub cr_witness: Option<usize>,
    pub inverse_set: ElementSet,
    pub orbit_index: usize,
    pub orbit_period: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularityProfile {
    pub elements: Vec<ElementProfile>,
}

impl RegularityProfile {
    /// E⁺(S).
    pub fn additive_idempotents(&self) -> ElementSet {
        self.elements
            .iter()
            .filter(|p| p.add_idempotent)
            .map(|p| p.element)
            .collect()
    }

    /// Reg⁺S.
    pub fn regular_elements(&self) -> ElementSet {
        self.elements
            .iter()
            .filter(|p| p.add_regular)
            .map(|p| p.element)
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        self.elements.iter().all(|p| p.quasi_index.is_some())
    }
}

pub fn regularity_profile(s: &Semiring) -> RegularityProfile {
    let regular: Vec<bool> = s.elements().map(|a| is_additively_regular(s, a)).collect();
    let elements = s
        .elements()
        .map(|a| {
            let orbit = s.orbit(a);
            let quasi_index = (1..orbit.bound()).find(|&k| regular[orbit.power(k)]);
            let inverse_set = if regular[a] {
                additive_inverses(s, a)
            } else {
                ElementSet::new()
            };
            ElementProfile {
                element: a,
                add_idempotent: s.is_add_idempotent(a),
                add_regular: regular[a],
                quasi_index,
                cr_witness: completely_regular_witness(s, a),
                inverse_set,
                orbit_index: orbit.index,
                orbit_period: orbit.period,
            }
        })
        .collect();
    RegularityProfile { elements }
}

/// `ρ(a)`: the least additively regular multiple of each element.
pub fn regular_multiples(s: &Semiring) -> Result<Vec<usize>, GreensError> {
    s.elements()
        .map(|a| {
            let orbit = s.orbit(a);
            (1..orbit.bound())
                .map(|k| orbit.power(k))
                .find(|&x| is_additively_regular(s, x))
                .ok_or(GreensError::NoRegularMultiple(a))
        })
        .collect()
}

/// `L*⁺, R*⁺, H*⁺ = L*⁺ ∧ R*⁺, D*⁺ = L*⁺ ∘ R*⁺, J*⁺`.
pub fn starred_greens(s: &Semiring) -> Result<GreensData, GreensError> {
    let rho = regular_multiples(s)?;
    let plain = greens_additive(s);
    let pull = |p: &Partition| Partition::from_keys(rho.iter().map(|&x| p.class_of(x)));
    Ok(assemble(
        GreensVariant::Starred,
        pull(&plain.l),
        pull(&plain.r),
        pull(&plain.j),
    ))
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

    fn classes(p: &Partition) -> Vec<Vec<usize>> {
        p.classes().iter().map(|c| c.to_vec()).collect()
    }

    #[test]
    fn group_reduct_is_one_class() {
        let g = greens_additive(&z2());
        for p in [&g.l, &g.r, &g.h, &g.d, &g.j] {
            assert!(p.is_universal());
        }
        assert_eq!(starred_greens(&z2()).unwrap().h, g.h);
    }

    #[test]
    fn b2_j_classes() {
        assert_eq!(classes(&greens_additive(&b2()).j), vec![vec![0], vec![1]]);
    }

    #[test]
    fn tr3_plain_and_starred() {
        let g = greens_additive(&tr3());
        assert_eq!(classes(&g.l), vec![vec![0], vec![1], vec![2]]);
        let st = starred_greens(&tr3()).unwrap();
        assert_eq!(classes(&st.h), vec![vec![0], vec![1, 2]]);
        assert_eq!(classes(&st.j), vec![vec![0], vec![1, 2]]);
    }

    #[test]
    fn q2_starred_j() {
        let st = starred_greens(&q2()).unwrap();
        assert_eq!(classes(&st.j), vec![vec![0], vec![1]]);
    }

    #[test]
    fn profiles() {
        let p = regularity_profile(&z2());
        assert!(p
            .elements
            .iter()
            .all(|e| e.add_regular && e.quasi_index == Some(1)));
        assert_eq!(p.elements[1].cr_witness, Some(1));

        let p = regularity_profile(&tr3());
        assert!(!p.elements[1].add_regular);
        assert_eq!(p.elements[1].quasi_index, Some(2));

        let p = regularity_profile(&q2());
        assert!(p.elements[1].add_regular);
        assert_eq!(p.elements[1].cr_witness, None);
    }

    #[test]
    fn inverse_sets() {
        assert_eq!(additive_inverses(&z2(), 1).to_vec(), vec![1]);
        assert_eq!(additive_inverses(&b2(), 1).to_vec(), vec![1]);
        assert!(additive_inverses(&tr3(), 1).is_empty());
    }

    #[test]
    fn cr_witnesses() {
        assert_eq!(completely_regular_witness(&z2(), 1), Some(1));
        assert_eq!(completely_regular_witness(&q2(), 1), None);
        assert_eq!(completely_regular_witness(&b2(), 1), Some(0));
    }
}
