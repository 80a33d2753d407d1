//! Rees matrix semirings over skew-rings.
//!
//! A [`ReesSpec`] names a skew-ring `R`, two bands `I` and `Λ` sharing a
//! distinguished index `o`, and a sandwich matrix `P = (p_{λ,i})` over `R`.
//! The carrier of the built semiring is `I × R × Λ` with
//!
//! ```text
//! (i,a,λ) + (j,b,μ) = (i, a + p_{λ,j} + b, μ)
//! (i,a,λ) · (j,b,μ) = (ij, -p_{λμ,ij} + ab, λμ)
//! ```
//!
//! Triples are encoded lexicographically: `(i·|R| + a)·|Λ| + λ`, with each
//! component numbered in declaration order.

mod format;

pub use format::{parse_rees, serialize_rees};

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::bitset::ElementSet;
use crate::classify::{additive_group, is_completely_simple, AdditiveGroup};
use crate::greens::greens_additive;
use crate::iso::IsoWitness;
use crate::semiring::{Semiring, SemiringError, MAX_ORDER};
use crate::smr::SmrError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReesError {
    #[error("ring is not a skew-ring: {0}")]
    NotSkewRing(String),
    #[error("invalid band: {0}")]
    InvalidBand(String),
    #[error("malformed spec: {0}")]
    Malformed(String),
    #[error("sandwich matrix violates {} condition(s); first: {}", .0.len(), .0[0])]
    InvalidSpec(Vec<SandwichViolation>),
    #[error("Rees semiring of order {order} exceeds the maximum of {max}")]
    TooLarge { order: usize, max: usize },
    #[error("not completely simple: {0}")]
    NotCompletelySimple(String),
    /// A step that must succeed on valid input failed.
    #[error("internal inconsistency: {0}")]
    Severe(String),
    #[error(transparent)]
    Format(#[from] SmrError),
}

impl ReesError {
    pub fn is_severe(&self) -> bool {
        matches!(self, ReesError::Severe(_))
    }
}

/// A finite band with labelled elements and a distinguished element `o`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Band {
    labels: Vec<String>,
    table: Vec<usize>,
    o: usize,
}

impl Band {
    pub fn new(labels: Vec<String>, table: Vec<usize>, o: usize) -> Result<Self, ReesError> {
        let k = labels.len();
        if k == 0 {
            return Err(ReesError::InvalidBand("empty carrier".into()));
        }
        if table.len() != k * k {
            return Err(ReesError::InvalidBand(format!(
                "table has {} entries, expected {}",
                table.len(),
                k * k
            )));
        }
        if o >= k {
            return Err(ReesError::InvalidBand(format!("o = {o} is out of range")));
        }
        let mut seen = HashSet::new();
        if let Some(dup) = labels.iter().find(|l| !seen.insert(l.as_str())) {
            return Err(ReesError::InvalidBand(format!("duplicate label `{dup}`")));
        }
        if let Some(pos) = table.iter().position(|&x| x >= k) {
            return Err(ReesError::InvalidBand(format!(
                "entry {} out of range",
                table[pos]
            )));
        }
        let band = Band { labels, table, o };
        for x in 0..k {
            if band.mul(x, x) != x {
                return Err(ReesError::InvalidBand(format!(
                    "{} is not idempotent",
                    band.labels[x]
                )));
            }
            for y in 0..k {
                for z in 0..k {
                    if band.mul(band.mul(x, y), z) != band.mul(x, band.mul(y, z)) {
                        return Err(ReesError::InvalidBand(format!(
                            "not associative at ({},{},{})",
                            band.labels[x], band.labels[y], band.labels[z]
                        )));
                    }
                }
            }
        }
        Ok(band)
    }

    /// A band whose product is given by a closure over indices.
    pub fn from_fn(
        labels: Vec<String>,
        o: usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, ReesError> {
        let k = labels.len();
        let table = (0..k * k).map(|x| mul(x / k, x % k)).collect();
        Band::new(labels, table, o)
    }

    pub fn trivial(label: &str) -> Self {
        Band {
            labels: vec![label.to_string()],
            table: vec![0],
            o: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn o(&self) -> usize {
        self.o
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.labels.len() + y]
    }

    /// Whether `o` happens to be a two-sided identity of the band.
    pub fn o_is_identity(&self) -> bool {
        (0..self.len()).all(|x| self.mul(self.o, x) == x && self.mul(x, self.o) == x)
    }
}

/// `M(I, R, Λ; P)` before construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReesSpec {
    ring: Semiring,
    index_i: Band,
    index_lambda: Band,
    /// Row-major `|Λ| × |I|`: `sandwich[λ·|I| + i] = p_{λ,i}`.
    sandwich: Vec<usize>,
}

impl ReesSpec {
    pub fn new(
        ring: Semiring,
        index_i: Band,
        index_lambda: Band,
        sandwich: Vec<usize>,
    ) -> Result<Self, ReesError> {
        let expected = index_i.len() * index_lambda.len();
        if sandwich.len() != expected {
            return Err(ReesError::Malformed(format!(
                "P has {} entries, expected {expected}",
                sandwich.len()
            )));
        }
        if let Some(&x) = sandwich.iter().find(|&&x| x >= ring.order()) {
            return Err(ReesError::Malformed(format!(
                "P entry {x} is not an element of R"
            )));
        }
        Ok(ReesSpec {
            ring,
            index_i,
            index_lambda,
            sandwich,
        })
    }

    pub fn ring(&self) -> &Semiring {
        &self.ring
    }

    pub fn index_i(&self) -> &Band {
        &self.index_i
    }

    pub fn index_lambda(&self) -> &Band {
        &self.index_lambda
    }

    pub fn sandwich(&self) -> &[usize] {
        &self.sandwich
    }

    /// `p_{λ,i}`.
    #[inline]
    pub fn p(&self, lambda: usize, i: usize) -> usize {
        self.sandwich[lambda * self.index_i.len() + i]
    }

    pub fn has_nonzero_sandwich(&self) -> bool {
        match additive_group(&self.ring) {
            Ok(g) => self.sandwich.iter().any(|&x| x != g.zero),
            Err(_) => true,
        }
    }

    pub fn built_order(&self) -> usize {
        self.index_i.len() * self.ring.order() * self.index_lambda.len()
    }

    /// Encoded id of the triple `(i, a, λ)`.
    pub fn encode(&self, i: usize, a: usize, lambda: usize) -> usize {
        (i * self.ring.order() + a) * self.index_lambda.len() + lambda
    }

    pub fn decode(&self, x: usize) -> (usize, usize, usize) {
        let (r, l) = (self.ring.order(), self.index_lambda.len());
        (x / (r * l), (x / l) % r, x % l)
    }
}

/// A failed condition on a Rees specification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SandwichViolation {
    /// 0 for the shared-index condition `I ∩ Λ = {o}`, otherwise 1–6.
    pub condition: u8,
    pub detail: String,
}

impl fmt::Display for SandwichViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "condition {}: {}", self.condition, self.detail)
    }
}

const MAX_SANDWICH_VIOLATIONS: usize = 100;

struct Ctx<'a> {
    spec: &'a ReesSpec,
    g: AdditiveGroup,
}

impl Ctx<'_> {
    fn add(&self, a: usize, b: usize) -> usize {
        self.spec.ring.add(a, b)
    }
    /// `x - y + z`
    fn sub_add(&self, x: usize, y: usize, z: usize) -> usize {
        self.add(self.add(x, self.g.neg[y]), z)
    }
    fn li(&self, x: usize) -> &str {
        self.spec.index_i.label(x)
    }
    fn ll(&self, x: usize) -> &str {
        self.spec.index_lambda.label(x)
    }
}

fn ring_group(spec: &ReesSpec) -> Result<AdditiveGroup, ReesError> {
    additive_group(&spec.ring).map_err(ReesError::NotSkewRing)
}

/// Every violated condition (capped at 100), in condition order.
///
/// When conditions 1–6 all hold, the identities
/// `p_{λμ,ij} = p_{λo,oj} + p_{oμ,io}`, `p_{λ,i} = p_{λo,oi} + p_{oλ,io}` and
/// `ab + p_{λ,i} = p_{λ,i} + ab` are checked as well; a failure there is a
/// [`ReesError::Severe`].
pub fn validate_sandwich(spec: &ReesSpec) -> Result<Vec<SandwichViolation>, ReesError> {
    let out = sandwich_violations(spec)?;
    if out.is_empty() {
        if let Some(first) = corollary_failures(spec)?.into_iter().next() {
            return Err(ReesError::Severe(format!(
                "conditions 1-6 hold but a derived identity fails: {first}"
            )));
        }
    }
    Ok(out)
}

/// Conditions 0–6 only.
pub(crate) fn sandwich_violations(spec: &ReesSpec) -> Result<Vec<SandwichViolation>, ReesError> {
    let g = ring_group(spec)?;
    let cx = Ctx { spec, g };
    let mut out = Vec::new();
    let mut push = |condition: u8, detail: String| {
        if out.len() < MAX_SANDWICH_VIOLATIONS {
            out.push(SandwichViolation { condition, detail });
        }
    };

    let (bi, bl) = (&spec.index_i, &spec.index_lambda);
    let (ni, nl) = (bi.len(), bl.len());
    let (oi, ol) = (bi.o(), bl.o());
    let r = &spec.ring;
    let zero = cx.g.zero;

    if bi.label(oi) != bl.label(ol) {
        push(
            0,
            format!(
                "distinguished labels differ: `{}` in I, `{}` in Λ",
                bi.label(oi),
                bl.label(ol)
            ),
        );
    }
    let lambda_labels: HashSet<&str> = bl.labels().iter().map(String::as_str).collect();
    for (x, label) in bi.labels().iter().enumerate() {
        if x != oi && lambda_labels.contains(label.as_str()) {
            push(0, format!("label `{label}` occurs in both I and Λ"));
        }
    }

    for l in 0..nl {
        if spec.p(l, oi) != zero {
            push(
                1,
                format!("p[{},{}] = {} != 0", cx.ll(l), cx.li(oi), spec.p(l, oi)),
            );
        }
    }
    for i in 0..ni {
        if spec.p(ol, i) != zero {
            push(
                1,
                format!("p[{},{}] = {} != 0", cx.ll(ol), cx.li(i), spec.p(ol, i)),
            );
        }
    }

    for i in 0..ni {
        for j in 0..ni {
            for k in 0..ni {
                for l in 0..nl {
                    for m in 0..nl {
                        for v in 0..nl {
                            // (2) p_{λμ,kj} = p_{λμ,ij} - p_{νμ,ij} + p_{νμ,kj}
                            let (lm, vm) = (bl.mul(l, m), bl.mul(v, m));
                            let (kj, ij) = (bi.mul(k, j), bi.mul(i, j));
                            let rhs = cx.sub_add(spec.p(lm, ij), spec.p(vm, ij), spec.p(vm, kj));
                            if spec.p(lm, kj) != rhs {
                                push(
                                    2,
                                    format!(
                                        "(i,j,k)=({},{},{}) (λ,μ,ν)=({},{},{})",
                                        cx.li(i),
                                        cx.li(j),
                                        cx.li(k),
                                        cx.ll(l),
                                        cx.ll(m),
                                        cx.ll(v)
                                    ),
                                );
                            }
                            // (3) p_{μλ,jk} = p_{μλ,ji} - p_{μν,ji} + p_{μν,jk}
                            let (ml, mv) = (bl.mul(m, l), bl.mul(m, v));
                            let (jk, ji) = (bi.mul(j, k), bi.mul(j, i));
                            let rhs = cx.sub_add(spec.p(ml, ji), spec.p(mv, ji), spec.p(mv, jk));
                            if spec.p(ml, jk) != rhs {
                                push(
                                    3,
                                    format!(
                                        "(i,j,k)=({},{},{}) (λ,μ,ν)=({},{},{})",
                                        cx.li(i),
                                        cx.li(j),
                                        cx.li(k),
                                        cx.ll(l),
                                        cx.ll(m),
                                        cx.ll(v)
                                    ),
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    for l in 0..nl {
        for i in 0..ni {
            let p = spec.p(l, i);
            for a in r.elements() {
                if r.mul(a, p) != zero || r.mul(p, a) != zero {
                    push(
                        4,
                        format!("a={a} does not annihilate p[{},{}]={p}", cx.ll(l), cx.li(i)),
                    );
                }
            }
        }
    }

    let products: ElementSet = r
        .elements()
        .flat_map(|a| r.elements().map(move |b| r.mul(a, b)))
        .collect();
    for m in 0..nl {
        for i in 0..ni {
            let p = spec.p(bl.mul(ol, m), bi.mul(i, oi));
            if let Some(ab) = products.iter().find(|&ab| cx.add(ab, p) != cx.add(p, ab)) {
                push(
                    5,
                    format!(
                        "product {ab} does not commute with p[o{},{}o]={p}",
                        cx.ll(m),
                        cx.li(i)
                    ),
                );
            }
        }
    }
    for l in 0..nl {
        for j in 0..ni {
            let p = spec.p(bl.mul(l, ol), bi.mul(oi, j));
            if let Some(ab) = products.iter().find(|&ab| cx.add(ab, p) != cx.add(p, ab)) {
                push(
                    6,
                    format!(
                        "product {ab} does not commute with p[{}o,o{}]={p}",
                        cx.ll(l),
                        cx.li(j)
                    ),
                );
            }
        }
    }

    Ok(out)
}

/// Failures of the three derived sandwich identities, in order.
pub fn corollary_failures(spec: &ReesSpec) -> Result<Vec<String>, ReesError> {
    let g = ring_group(spec)?;
    let cx = Ctx { spec, g };
    let (bi, bl) = (&spec.index_i, &spec.index_lambda);
    let (oi, ol) = (bi.o(), bl.o());
    let r = &spec.ring;
    let mut out = Vec::new();
    for l in 0..bl.len() {
        for m in 0..bl.len() {
            for i in 0..bi.len() {
                for j in 0..bi.len() {
                    let lhs = spec.p(bl.mul(l, m), bi.mul(i, j));
                    let rhs = cx.add(
                        spec.p(bl.mul(l, ol), bi.mul(oi, j)),
                        spec.p(bl.mul(ol, m), bi.mul(i, oi)),
                    );
                    if lhs != rhs {
                        out.push(format!(
                            "p[{}{},{}{}] != p[{}o,o{}] + p[o{},{}o]",
                            cx.ll(l),
                            cx.ll(m),
                            cx.li(i),
                            cx.li(j),
                            cx.ll(l),
                            cx.li(j),
                            cx.ll(m),
                            cx.li(i)
                        ));
                    }
                }
            }
        }
    }
    for l in 0..bl.len() {
        for i in 0..bi.len() {
            let p = spec.p(l, i);
            let rhs = cx.add(
                spec.p(bl.mul(l, ol), bi.mul(oi, i)),
                spec.p(bl.mul(ol, l), bi.mul(i, oi)),
            );
            if p != rhs {
                out.push(format!(
                    "p[{0},{1}] != p[{0}o,o{1}] + p[o{0},{1}o]",
                    cx.ll(l),
                    cx.li(i)
                ));
            }
            for a in r.elements() {
                for b in r.elements() {
                    let ab = r.mul(a, b);
                    if cx.add(ab, p) != cx.add(p, ab) {
                        out.push(format!(
                            "{a}{b} + p[{},{}] != p[{},{}] + {a}{b}",
                            cx.ll(l),
                            cx.li(i),
                            cx.ll(l),
                            cx.li(i)
                        ));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// A built Rees matrix semiring with its coordinates.
#[derive(Debug, Clone)]
pub struct ReesSemiring {
    pub semiring: Semiring,
    /// `coords[x] = (i, a, λ)` for each encoded element `x`.
    pub coords: Vec<(usize, usize, usize)>,
}

pub fn build_rees(spec: &ReesSpec) -> Result<ReesSemiring, ReesError> {
    let violations = validate_sandwich(spec)?;
    if !violations.is_empty() {
        return Err(ReesError::InvalidSpec(violations));
    }
    let order = spec.built_order();
    if order > MAX_ORDER {
        return Err(ReesError::TooLarge {
            order,
            max: MAX_ORDER,
        });
    }
    let g = ring_group(spec)?;
    let r = &spec.ring;
    let (bi, bl) = (&spec.index_i, &spec.index_lambda);
    let coords: Vec<_> = (0..order).map(|x| spec.decode(x)).collect();
    let add = |x: usize, y: usize| {
        let ((i, a, l), (j, b, m)) = (coords[x], coords[y]);
        spec.encode(i, r.add(r.add(a, spec.p(l, j)), b), m)
    };
    let mul = |x: usize, y: usize| {
        let ((i, a, l), (j, b, m)) = (coords[x], coords[y]);
        let (ij, lm) = (bi.mul(i, j), bl.mul(l, m));
        spec.encode(ij, r.add(g.neg[spec.p(lm, ij)], r.mul(a, b)), lm)
    };
    let semiring = Semiring::from_fns(order, add, mul).map_err(|e| match e {
        SemiringError::Axioms(v) => {
            ReesError::Severe(format!("valid spec produced a non-semiring: {}", v[0]))
        }
        other => ReesError::Severe(other.to_string()),
    })?;
    let semiring = match r.name() {
        Some(name) => semiring.with_name(format!("M({name})")),
        None => semiring,
    };
    Ok(ReesSemiring { semiring, coords })
}

/// A Rees specification for a completely simple semiring, with the
/// isomorphism onto its build.
#[derive(Debug, Clone)]
pub struct Coordinatization {
    pub spec: ReesSpec,
    pub iso: IsoWitness,
}

/// Rees coordinates for a completely simple semiring.
///
/// With `e` the least additive idempotent: `I` is the additive idempotents
/// `L⁺`-related to `e`, `Λ` those `R⁺`-related to `e`, `o = e`, `R` is the
/// `H⁺`-class of `e`, both bands multiply as in `S`, and `p_{λ,i} = λ + i`.
/// Element `a` goes to `(i_a, e+a+e, λ_a)` where `i_a` is the idempotent in
/// `R⁺(a) ∩ L⁺(e)` and `λ_a` the one in `L⁺(a) ∩ R⁺(e)`.
pub fn coordinatize(s: &Semiring) -> Result<Coordinatization, ReesError> {
    let cs = is_completely_simple(s);
    if !cs.holds {
        return Err(ReesError::NotCompletelySimple(cs.evidence));
    }
    let severe = |msg: String| ReesError::Severe(format!("coordinatization: {msg}"));
    let greens = greens_additive(s);
    let idem = s.additive_idempotents();
    let e = idem
        .first()
        .ok_or_else(|| severe("no additive idempotent".into()))?;
    let i_set: Vec<usize> = idem.intersection(&greens.l.class_containing(e)).to_vec();
    let l_set: Vec<usize> = idem.intersection(&greens.r.class_containing(e)).to_vec();
    let h_e = greens.h.class_containing(e);
    let (ring, ring_ids) = s
        .induced(&h_e)
        .map_err(|err| severe(format!("H+ class of {e} is not a subsemiring: {err}")))?;
    let ring_index = |x: usize| ring_ids.iter().position(|&y| y == x);

    let band = |members: &[usize]| -> Result<Band, ReesError> {
        let k = members.len();
        let mut table = Vec::with_capacity(k * k);
        for &f in members {
            for &g in members {
                let fg = s.mul(f, g);
                let pos = members.iter().position(|&x| x == fg).ok_or_else(|| {
                    severe(format!("index set {members:?} not closed: {f}*{g} = {fg}"))
                })?;
                table.push(pos);
            }
        }
        let o = members
            .iter()
            .position(|&x| x == e)
            .expect("e is in both index sets");
        Band::new(members.iter().map(|x| x.to_string()).collect(), table, o)
            .map_err(|err| severe(err.to_string()))
    };
    let index_i = band(&i_set)?;
    let index_lambda = band(&l_set)?;

    let mut sandwich = Vec::with_capacity(i_set.len() * l_set.len());
    for &l in &l_set {
        for &i in &i_set {
            let p = s.add(l, i);
            sandwich.push(
                ring_index(p).ok_or_else(|| severe(format!("{l}+{i} = {p} is outside H+({e})")))?,
            );
        }
    }
    let spec = ReesSpec::new(ring, index_i, index_lambda, sandwich)?;
    let violations = validate_sandwich(&spec)?;
    if let Some(v) = violations.first() {
        return Err(severe(format!("derived spec is invalid: {v}")));
    }

    let mut mapping = Vec::with_capacity(s.order());
    for a in s.elements() {
        let unique = |set: ElementSet, what: &str| -> Result<usize, ReesError> {
            match set.to_vec().as_slice() {
                [x] => Ok(*x),
                other => Err(severe(format!("{what} for {a} is {other:?}"))),
            }
        };
        let ia = unique(
            idem.intersection(&greens.r.class_containing(a))
                .intersection(&greens.l.class_containing(e)),
            "row idempotent",
        )?;
        let la = unique(
            idem.intersection(&greens.l.class_containing(a))
                .intersection(&greens.r.class_containing(e)),
            "column idempotent",
        )?;
        let mid = s.sum(&[e, a, e]);
        let i = i_set.iter().position(|&x| x == ia).expect("ia in I");
        let l = l_set.iter().position(|&x| x == la).expect("la in Λ");
        let m = ring_index(mid).ok_or_else(|| severe(format!("e+{a}+e outside H+(e)")))?;
        mapping.push(spec.encode(i, m, l));
    }
    let built = build_rees(&spec)?;
    let iso = IsoWitness::new(s, &built.semiring, mapping);
    if !iso.verified {
        return Err(severe("element map is not an isomorphism".into()));
    }
    Ok(Coordinatization { spec, iso })
}
