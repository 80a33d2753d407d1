//! Bi-ideals, congruences and quotients, kernels and nil-extensions, and the
//! two structural decompositions: a rectangular skew-ring as a direct
//! product, and a quasi completely regular semiring as a b-lattice of its
//! `J*⁺`-classes.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::bitset::ElementSet;
use crate::classify::{
    classify, is_b_lattice, is_quasi_completely_regular, is_rectangular_skew_ring,
    ClassificationReport,
};
use crate::greens::{greens_additive, is_additively_regular, starred_greens};
use crate::iso::IsoWitness;
use crate::partition::Partition;
use crate::semiring::{direct_product, Semiring, Table};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("subset must be nonempty")]
    EmptySubset,
    #[error("subset is not a bi-ideal: {0}")]
    NotBiIdeal(Escape),
    #[error("malformed partition: {0}")]
    MalformedPartition(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A property the structure theory guarantees did not hold.
    #[error("severe diagnostic: {0}")]
    Severe(String),
}

impl StructureError {
    pub fn is_severe(&self) -> bool {
        matches!(self, StructureError::Severe(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BiIdealSide {
    /// `a + x`
    AddRight,
    /// `x + a`
    AddLeft,
    /// `a·x`
    MulRight,
    /// `x·a`
    MulLeft,
}

/// An element `a` of the subset and an `x` sending it outside.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Escape {
    pub a: usize,
    pub x: usize,
    pub side: BiIdealSide,
    pub value: usize,
}

impl fmt::Display for Escape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, x, v) = (self.a, self.x, self.value);
        match self.side {
            BiIdealSide::AddRight => write!(f, "{a}+{x} = {v} escapes"),
            BiIdealSide::AddLeft => write!(f, "{x}+{a} = {v} escapes"),
            BiIdealSide::MulRight => write!(f, "{a}*{x} = {v} escapes"),
            BiIdealSide::MulLeft => write!(f, "{x}*{a} = {v} escapes"),
        }
    }
}

/// The first `(a, x)` (in id order) with one of `a+x, x+a, ax, xa` outside `k`.
pub fn bi_ideal_escape(s: &Semiring, k: &ElementSet) -> Result<Option<Escape>, StructureError> {
    if k.is_empty() {
        return Err(StructureError::EmptySubset);
    }
    for a in k {
        for x in s.elements() {
            let sides = [
                (BiIdealSide::AddRight, s.add(a, x)),
                (BiIdealSide::AddLeft, s.add(x, a)),
                (BiIdealSide::MulRight, s.mul(a, x)),
                (BiIdealSide::MulLeft, s.mul(x, a)),
            ];
            if let Some((side, value)) = sides.into_iter().find(|&(_, v)| !k.contains(v)) {
                return Ok(Some(Escape { a, x, side, value }));
            }
        }
    }
    Ok(None)
}

pub fn is_bi_ideal(s: &Semiring, k: &ElementSet) -> Result<bool, StructureError> {
    Ok(bi_ideal_escape(s, k)?.is_none())
}

fn require_bi_ideal(s: &Semiring, k: &ElementSet) -> Result<(), StructureError> {
    match bi_ideal_escape(s, k)? {
        Some(escape) => Err(StructureError::NotBiIdeal(escape)),
        None => Ok(()),
    }
}

/// `a ≡ a'` and `b ≡ b'` but `a∘b ≢ a'∘b'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CongruenceFailure {
    pub table: Table,
    pub a: usize,
    pub a2: usize,
    pub b: usize,
    pub b2: usize,
}

impl fmt::Display for CongruenceFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.table {
            Table::Add => "+",
            Table::Mul => "*",
        };
        write!(
            f,
            "{}~{} and {}~{} but {}{op}{} !~ {}{op}{}",
            self.a, self.a2, self.b, self.b2, self.a, self.b, self.a2, self.b2
        )
    }
}

/// Compatibility of `p` with both operations.
pub fn congruence_failure(
    s: &Semiring,
    p: &Partition,
) -> Result<Option<CongruenceFailure>, StructureError> {
    if p.len() != s.order() {
        return Err(StructureError::MalformedPartition(format!(
            "partition covers {} elements, carrier has {}",
            p.len(),
            s.order()
        )));
    }
    let reps: Vec<usize> = p
        .classes()
        .iter()
        .map(|c| c.first().expect("nonempty"))
        .collect();
    for table in [Table::Add, Table::Mul] {
        for a in s.elements() {
            let rep = reps[p.class_of(a)];
            if rep == a {
                continue;
            }
            for b in s.elements() {
                if !p.same(s.op(table, a, b), s.op(table, rep, b)) {
                    return Ok(Some(CongruenceFailure {
                        table,
                        a,
                        a2: rep,
                        b,
                        b2: b,
                    }));
                }
                if !p.same(s.op(table, b, a), s.op(table, b, rep)) {
                    return Ok(Some(CongruenceFailure {
                        table,
                        a: b,
                        a2: b,
                        b: a,
                        b2: rep,
                    }));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_congruence(s: &Semiring, p: &Partition) -> Result<bool, StructureError> {
    Ok(congruence_failure(s, p)?.is_none())
}

/// A partition known to be compatible with both operations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Congruence {
    partition: Partition,
}

impl Congruence {
    pub fn new(s: &Semiring, partition: Partition) -> Result<Self, StructureError> {
        match congruence_failure(s, &partition)? {
            Some(f) => Err(StructureError::Precondition(format!(
                "not a congruence: {f}"
            ))),
            None => Ok(Congruence { partition }),
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }
}

/// `S/ρ`, with class `c` as element `c`.
pub fn quotient_by(s: &Semiring, c: &Congruence) -> Semiring {
    let p = c.partition();
    let reps: Vec<usize> = p
        .classes()
        .iter()
        .map(|c| c.first().expect("nonempty"))
        .collect();
    Semiring::from_fns(
        reps.len(),
        |x, y| p.class_of(s.add(reps[x], reps[y])),
        |x, y| p.class_of(s.mul(reps[x], reps[y])),
    )
    .expect("quotient of a semiring by a congruence is a semiring")
}

/// `S/K` for a bi-ideal `K`, with the Rees congruence.
pub fn rees_quotient(
    s: &Semiring,
    k: &ElementSet,
) -> Result<(Semiring, Congruence), StructureError> {
    require_bi_ideal(s, k)?;
    let anchor = k.first().expect("nonempty");
    let p = Partition::from_keys(s.elements().map(|a| if k.contains(a) { anchor } else { a }));
    let c = Congruence::new(s, p).map_err(|e| {
        StructureError::Severe(format!("Rees congruence of a bi-ideal failed: {e}"))
    })?;
    let q = quotient_by(s, &c);
    let z = c.partition().class_of(anchor);
    let absorbing = q
        .elements()
        .all(|x| q.add(z, x) == z && q.add(x, z) == z && q.mul(z, x) == z && q.mul(x, z) == z);
    if !absorbing {
        return Err(StructureError::Severe(
            "class of the bi-ideal is not a zero of the quotient".into(),
        ));
    }
    Ok((q, c))
}

/// `Reg⁺S` when it is a bi-ideal.
pub fn kernel(s: &Semiring) -> Option<ElementSet> {
    let reg: ElementSet = s
        .elements()
        .filter(|&a| is_additively_regular(s, a))
        .collect();
    matches!(bi_ideal_escape(s, &reg), Ok(None)).then_some(reg)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NilCheck {
    pub holds: bool,
    /// Least `n ≥ 1` with `n·a ∈ K`, per element.
    pub witnesses: Vec<Option<usize>>,
}

pub fn is_nil_extension(s: &Semiring, k: &ElementSet) -> Result<NilCheck, StructureError> {
    require_bi_ideal(s, k)?;
    let witnesses: Vec<Option<usize>> = s
        .elements()
        .map(|a| {
            let orbit = s.orbit(a);
            (1..orbit.bound()).find(|&n| k.contains(orbit.power(n)))
        })
        .collect();
    Ok(NilCheck {
        holds: witnesses.iter().all(Option::is_some),
        witnesses,
    })
}

/// A rectangular skew-ring split as (rectangular band semiring) × (skew-ring).
#[derive(Debug, Clone, Serialize)]
pub struct RectangularDecomposition {
    #[serde(skip)]
    pub band_part: Semiring,
    /// Element of `S` behind each element of `band_part` (this is E⁺(S)).
    pub band_members: Vec<usize>,
    #[serde(skip)]
    pub skew_part: Semiring,
    /// Element of `S` behind each element of `skew_part` (an H⁺-class).
    pub skew_members: Vec<usize>,
    /// `S → band_part × skew_part`.
    pub iso: IsoWitness,
}

/// `a ↦ (a⁰, e+a+e)` where `e` is the least additive idempotent and `a⁰` the
/// additive idempotent `H⁺`-related to `a`.
pub fn decompose_rectangular(s: &Semiring) -> Result<RectangularDecomposition, StructureError> {
    let v = is_rectangular_skew_ring(s);
    if !v.holds {
        return Err(StructureError::Precondition(format!(
            "not a rectangular skew-ring: {}",
            v.evidence
        )));
    }
    let severe = |msg: String| StructureError::Severe(format!("rectangular decomposition: {msg}"));
    let idem = s.additive_idempotents();
    let e = idem
        .first()
        .ok_or_else(|| severe("no additive idempotent".into()))?;
    let h = greens_additive(s).h;
    let (band_part, band_members) = s
        .induced(&idem)
        .map_err(|err| severe(format!("E+ is not a subsemiring: {err}")))?;
    let (skew_part, skew_members) = s
        .induced(&h.class_containing(e))
        .map_err(|err| severe(format!("H+({e}) is not a subsemiring: {err}")))?;
    let product = direct_product(&band_part, &skew_part).map_err(|err| severe(err.to_string()))?;
    let k = skew_part.order();
    let mut mapping = Vec::with_capacity(s.order());
    for a in s.elements() {
        let a0 = match idem
            .intersection(&h.class_containing(a))
            .to_vec()
            .as_slice()
        {
            [x] => *x,
            other => return Err(severe(format!("H+({a}) holds idempotents {other:?}"))),
        };
        let mid = s.sum(&[e, a, e]);
        let bi = band_members
            .iter()
            .position(|&x| x == a0)
            .expect("a0 in E+");
        let si = skew_members
            .iter()
            .position(|&x| x == mid)
            .ok_or_else(|| severe(format!("e+{a}+e lies outside H+(e)")))?;
        mapping.push(bi * k + si);
    }
    let iso = IsoWitness::new(s, &product, mapping);
    if !iso.verified {
        return Err(severe("map onto the product is not an isomorphism".into()));
    }
    Ok(RectangularDecomposition {
        band_part,
        band_members,
        skew_part,
        skew_members,
        iso,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct Component {
    pub members: ElementSet,
    #[serde(skip)]
    pub semiring: Semiring,
    pub report: ClassificationReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct BLatticeDecomposition {
    pub congruence: Congruence,
    #[serde(skip)]
    pub quotient: Semiring,
    pub components: Vec<Component>,
}

/// Components induced on the classes of a partition, in class order.
pub(crate) fn components_of(
    s: &Semiring,
    p: &Partition,
) -> Result<Vec<(ElementSet, Semiring)>, (ElementSet, String)> {
    p.classes()
        .into_iter()
        .map(|class| match s.induced(&class) {
            Ok((sub, _)) => Ok((class, sub)),
            Err(e) => Err((class, e.to_string())),
        })
        .collect()
}

pub fn blattice_decompose(s: &Semiring) -> Result<BLatticeDecomposition, StructureError> {
    let v = is_quasi_completely_regular(s);
    if !v.holds {
        return Err(StructureError::Precondition(format!(
            "not quasi completely regular: {}",
            v.evidence
        )));
    }
    let j = starred_greens(s)
        .map_err(|e| StructureError::Severe(e.to_string()))?
        .j;
    if let Some(f) = congruence_failure(s, &j)? {
        return Err(StructureError::Severe(format!(
            "J*+ is not a congruence: {f}"
        )));
    }
    let congruence = Congruence { partition: j };
    let quotient = quotient_by(s, &congruence);
    let b = is_b_lattice(&quotient);
    if !b.holds {
        return Err(StructureError::Severe(format!(
            "S/J*+ is not a b-lattice: {}",
            b.evidence
        )));
    }
    let parts = components_of(s, congruence.partition()).map_err(|(class, e)| {
        StructureError::Severe(format!("J*+ class {class} is not a subsemiring: {e}"))
    })?;
    let mut components = Vec::with_capacity(parts.len());
    for (members, semiring) in parts {
        let report = classify(&semiring);
        if !report.is_completely_archimedean.holds {
            return Err(StructureError::Severe(format!(
                "component {members} is not completely Archimedean: {}",
                report.is_completely_archimedean.evidence
            )));
        }
        components.push(Component {
            members,
            semiring,
            report,
        });
    }
    Ok(BLatticeDecomposition {
        congruence,
        quotient,
        components,
    })
}
