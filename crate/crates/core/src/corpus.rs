//! Reference semirings: the named examples, parameterized families, the
//! exhaustive census of small orders, and a generated set of Rees specs.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::classify::{is_rectangular_band_semiring, is_skew_ring};
use crate::iso::permutations;
use crate::rees::{build_rees, serialize_rees, validate_sandwich, Band, ReesError, ReesSpec};
use crate::semiring::{direct_product, Semiring, SemiringError};
use crate::smr::serialize_semiring;

/// Largest order for which [`enumerate_semirings`] is exhaustive.
pub const MAX_CENSUS_ORDER: usize = 3;
/// Largest built order admitted into the Rees spec corpus.
pub const MAX_REES_CORPUS_ORDER: usize = 16;
pub const REES_CORPUS_CAP: usize = 50;
/// Nonzero-sandwich specs the generator keeps room for.
pub const REES_NONZERO_TARGET: usize = 10;
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameters for `{family}`: {message}")]
    BadParams { family: String, message: String },
    #[error("order {order} is outside the exhaustive range 1..={max}")]
    OrderOutOfRange { order: usize, max: usize },
    #[error(transparent)]
    Semiring(#[from] SemiringError),
    #[error(transparent)]
    Rees(#[from] ReesError),
    #[error("i/o error at {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "detail", rename_all = "snake_case")]
pub enum Provenance {
    Named,
    Family(String),
    Enumerated { order: usize, index: usize },
    Product(String, String),
    Rees(String),
}

#[derive(Debug, Clone)]
pub struct CorpusItem {
    pub name: String,
    pub semiring: Semiring,
    pub provenance: Provenance,
}

impl CorpusItem {
    fn new(name: impl Into<String>, semiring: Semiring, provenance: Provenance) -> Self {
        let name = name.into();
        CorpusItem {
            semiring: semiring.with_name(name.clone()),
            name,
            provenance,
        }
    }
}

/// A finite group given by its table, element 0 being the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    Cyclic(usize),
    Klein,
    Symmetric3,
}

impl Group {
    pub fn order(self) -> usize {
        match self {
            Group::Cyclic(k) => k,
            Group::Klein => 4,
            Group::Symmetric3 => 6,
        }
    }

    pub fn op(self, a: usize, b: usize) -> usize {
        match self {
            Group::Cyclic(k) => (a + b) % k,
            Group::Klein => a ^ b,
            Group::Symmetric3 => {
                let perms = permutations(3);
                let composed: Vec<usize> = (0..3).map(|x| perms[a][perms[b][x]]).collect();
                perms.iter().position(|p| *p == composed).expect("closed")
            }
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::Cyclic(k) => write!(f, "Z{k}"),
            Group::Klein => write!(f, "V4"),
            Group::Symmetric3 => write!(f, "S3"),
        }
    }
}

impl FromStr for Group {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "V4" => Ok(Group::Klein),
            "S3" => Ok(Group::Symmetric3),
            _ => match s.strip_prefix('Z').map(str::parse::<usize>) {
                Some(Ok(k)) if k >= 1 => Ok(Group::Cyclic(k)),
                _ => Err(format!("unknown group `{s}` (expected Zk, V4 or S3)")),
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Integers mod k.
    Ring(usize),
    ZeroMulSkewring(Group),
    /// Join and meet on a k-chain.
    ChainBlattice(usize),
    LeftZero(usize),
    RightZero(usize),
    /// `left_zero(p) × right_zero(q)`.
    RectBand(usize, usize),
    /// Carrier `0..=k`, `a+b = min(a+b, k)`, `ab = min(ab, k)`.
    Truncated(usize),
    /// Join on a k-chain, every product 0.
    ConstZeroMulSemilattice(usize),
    /// The elements `1..=k` of `truncated(k)`, renumbered from 0.
    ArchimedeanComponent(usize),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Ring(k) => write!(f, "ring(Z{k})"),
            Family::ZeroMulSkewring(g) => write!(f, "zero_mul_skewring({g})"),
            Family::ChainBlattice(k) => write!(f, "chain_blattice({k})"),
            Family::LeftZero(k) => write!(f, "left_zero({k})"),
            Family::RightZero(k) => write!(f, "right_zero({k})"),
            Family::RectBand(p, q) => write!(f, "rect_band({p},{q})"),
            Family::Truncated(k) => write!(f, "truncated({k})"),
            Family::ConstZeroMulSemilattice(k) => write!(f, "const_zero_mul_semilattice({k})"),
            Family::ArchimedeanComponent(k) => write!(f, "archimedean_component(truncated({k}))"),
        }
    }
}

impl FromStr for Family {
    type Err = CorpusError;

    /// Accepts the [`Display`](fmt::Display) form; `ring(3)` is read as `ring(Z3)`.
    fn from_str(text: &str) -> Result<Self, CorpusError> {
        let text = text.trim();
        let (head, args) = match text.split_once('(') {
            Some((head, rest)) => match rest.strip_suffix(')') {
                Some(args) => (head.trim(), args.trim()),
                None => return Err(CorpusError::UnknownFamily(text.into())),
            },
            None => return Err(CorpusError::UnknownFamily(text.into())),
        };
        let bad = |message: String| CorpusError::BadParams {
            family: head.into(),
            message,
        };
        let positive = |s: &str| -> Result<usize, CorpusError> {
            match s.trim().parse::<usize>() {
                Ok(k) if k >= 1 => Ok(k),
                _ => Err(bad(format!("expected a positive integer, found `{s}`"))),
            }
        };
        let family = match head {
            "ring" => Family::Ring(positive(args.strip_prefix('Z').unwrap_or(args))?),
            "zero_mul_skewring" => Family::ZeroMulSkewring(args.parse().map_err(bad)?),
            "chain_blattice" => Family::ChainBlattice(positive(args)?),
            "left_zero" => Family::LeftZero(positive(args)?),
            "right_zero" => Family::RightZero(positive(args)?),
            "rect_band" => match args.split_once(',') {
                Some((p, q)) => Family::RectBand(positive(p)?, positive(q)?),
                None => return Err(bad("expected two parameters".into())),
            },
            "truncated" => Family::Truncated(positive(args)?),
            "const_zero_mul_semilattice" => Family::ConstZeroMulSemilattice(positive(args)?),
            "archimedean_component" => match args.parse::<Family>() {
                Ok(Family::Truncated(k)) => Family::ArchimedeanComponent(k),
                _ => return Err(bad("expected truncated(k)".into())),
            },
            _ => return Err(CorpusError::UnknownFamily(head.into())),
        };
        Ok(family)
    }
}

pub fn build_family(family: Family) -> Result<Semiring, CorpusError> {
    let s = match family {
        Family::Ring(k) => Semiring::from_fns(k, |a, b| (a + b) % k, |a, b| (a * b) % k),
        Family::ZeroMulSkewring(g) => Semiring::from_fns(g.order(), |a, b| g.op(a, b), |_, _| 0),
        Family::ChainBlattice(k) => Semiring::from_fns(k, usize::max, usize::min),
        Family::LeftZero(k) => Semiring::from_fns(k, |a, _| a, |a, _| a),
        Family::RightZero(k) => Semiring::from_fns(k, |_, b| b, |_, b| b),
        Family::RectBand(p, q) => {
            let l = build_family(Family::LeftZero(p))?;
            let r = build_family(Family::RightZero(q))?;
            direct_product(&l, &r)
        }
        Family::Truncated(k) => {
            Semiring::from_fns(k + 1, |a, b| (a + b).min(k), |a, b| (a * b).min(k))
        }
        Family::ConstZeroMulSemilattice(k) => Semiring::from_fns(k, usize::max, |_, _| 0),
        Family::ArchimedeanComponent(k) => Semiring::from_fns(
            k,
            |a, b| (a + b + 2).min(k) - 1,
            |a, b| ((a + 1) * (b + 1)).min(k) - 1,
        ),
    }?;
    Ok(s.with_name(family.to_string()))
}

/// The fixed reference examples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Named {
    S1,
    Z2,
    B2,
    Q2,
    LZ2,
    RB4,
    TR3,
    N2,
    M4,
}

impl Named {
    pub const ALL: [Named; 9] = [
        Named::S1,
        Named::Z2,
        Named::B2,
        Named::Q2,
        Named::LZ2,
        Named::RB4,
        Named::TR3,
        Named::N2,
        Named::M4,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Named::S1 => "S1",
            Named::Z2 => "Z2",
            Named::B2 => "B2",
            Named::Q2 => "Q2",
            Named::LZ2 => "LZ2",
            Named::RB4 => "RB4",
            Named::TR3 => "TR3",
            Named::N2 => "N2",
            Named::M4 => "M4",
        }
    }

    pub fn build(self) -> Semiring {
        let family = |f| build_family(f).expect("named families are valid");
        let s = match self {
            Named::S1 => family(Family::Ring(1)),
            Named::Z2 => family(Family::Ring(2)),
            Named::B2 => family(Family::ChainBlattice(2)),
            Named::Q2 => family(Family::ConstZeroMulSemilattice(2)),
            Named::LZ2 => family(Family::LeftZero(2)),
            Named::RB4 => family(Family::RectBand(2, 2)),
            Named::TR3 => family(Family::Truncated(2)),
            Named::N2 => family(Family::ArchimedeanComponent(2)),
            Named::M4 => build_rees(&m4_spec()).expect("M4 spec is valid").semiring,
        };
        s.with_name(self.as_str())
    }
}

impl fmt::Display for Named {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Named {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Named::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| format!("unknown named semiring `{s}`"))
    }
}

/// `I = {o, i}` a left zero band, `Λ = {o}`, `R = ring(Z2)`, `P ≡ 0`.
pub fn m4_spec() -> ReesSpec {
    let ring = build_family(Family::Ring(2))
        .expect("valid")
        .with_name("Z2");
    let index_i = Band::from_fn(vec!["o".into(), "i".into()], 0, |x, _| x).expect("left zero");
    ReesSpec::new(ring, index_i, Band::trivial("o"), vec![0, 0]).expect("well formed")
}

pub fn named_items() -> Vec<CorpusItem> {
    Named::ALL
        .into_iter()
        .map(|n| CorpusItem::new(n.as_str(), n.build(), Provenance::Named))
        .collect()
}

/// Every associative table on `0..n`, in lexicographic order.
pub fn associative_tables(n: usize) -> Vec<Vec<usize>> {
    fn consistent(t: &[Option<usize>], n: usize) -> bool {
        for x in 0..n {
            for y in 0..n {
                let Some(xy) = t[x * n + y] else { continue };
                for z in 0..n {
                    let (Some(yz), Some(l)) = (t[y * n + z], t[xy * n + z]) else {
                        continue;
                    };
                    if let Some(r) = t[x * n + yz] {
                        if l != r {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
    fn go(t: &mut Vec<Option<usize>>, cell: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        if cell == n * n {
            out.push(t.iter().map(|x| x.expect("filled")).collect());
            return;
        }
        for v in 0..n {
            t[cell] = Some(v);
            if consistent(t, n) {
                go(t, cell + 1, n, out);
            }
        }
        t[cell] = None;
    }
    let mut out = Vec::new();
    if n > 0 {
        go(&mut vec![None; n * n], 0, n, &mut out);
    }
    out
}

fn distributive(n: usize, add: &[usize], mul: &[usize]) -> bool {
    let (a_, m_) = (
        |x: usize, y: usize| add[x * n + y],
        |x: usize, y: usize| mul[x * n + y],
    );
    (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).all(|c| {
                m_(a, a_(b, c)) == a_(m_(a, b), m_(a, c))
                    && m_(a_(b, c), a) == a_(m_(b, a), m_(c, a))
            })
        })
    })
}

/// The least `(add, mul)` byte string over all relabellings.
pub fn canonical_key(s: &Semiring) -> Vec<u8> {
    permutations(s.order())
        .iter()
        .map(|p| {
            let t = s.relabel(p);
            t.add_table()
                .into_iter()
                .chain(t.mul_table())
                .map(|x| x as u8)
                .collect::<Vec<u8>>()
        })
        .min()
        .expect("at least one permutation")
}

#[derive(Debug, Clone)]
pub struct Census {
    pub order: usize,
    pub up_to_iso: bool,
    pub associative_tables: usize,
    pub semirings: Vec<Semiring>,
}

impl Census {
    pub fn count(&self) -> usize {
        self.semirings.len()
    }

    pub fn items(&self) -> Vec<CorpusItem> {
        let tag = if self.up_to_iso { "i" } else { "l" };
        self.semirings
            .iter()
            .enumerate()
            .map(|(index, s)| {
                CorpusItem::new(
                    format!("c{}{tag}_{index:04}", self.order),
                    s.clone(),
                    Provenance::Enumerated {
                        order: self.order,
                        index,
                    },
                )
            })
            .collect()
    }
}

/// All semirings on `0..n` (`n ≤ 3`), or one per isomorphism class in
/// canonical form. Output order is deterministic.
pub fn enumerate_semirings(n: usize, up_to_iso: bool) -> Result<Census, CorpusError> {
    if n == 0 || n > MAX_CENSUS_ORDER {
        return Err(CorpusError::OrderOutOfRange {
            order: n,
            max: MAX_CENSUS_ORDER,
        });
    }
    let tables = associative_tables(n);
    let pairs: Vec<(&Vec<usize>, &Vec<usize>)> = tables
        .par_iter()
        .flat_map_iter(|add| {
            tables
                .iter()
                .filter(move |mul| distributive(n, add, mul))
                .map(move |mul| (add, mul))
        })
        .collect();
    let labelled = pairs
        .into_iter()
        .map(|(add, mul)| Semiring::new(n, add.clone(), mul.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    let semirings = if up_to_iso {
        let classes: BTreeMap<Vec<u8>, ()> = labelled
            .par_iter()
            .map(|s| (canonical_key(s), ()))
            .collect();
        classes
            .into_keys()
            .map(|key| {
                let (add, mul) = key.split_at(n * n);
                let widen = |t: &[u8]| t.iter().map(|&x| x as usize).collect();
                Semiring::new(n, widen(add), widen(mul))
            })
            .collect::<Result<Vec<_>, _>>()?
    } else {
        labelled
    };
    Ok(Census {
        order: n,
        up_to_iso,
        associative_tables: tables.len(),
        semirings,
    })
}

/// Bands on at most 3 elements, one per isomorphism class.
fn small_bands() -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for n in 1..=3 {
        let mut seen = BTreeMap::new();
        for t in associative_tables(n) {
            if (0..n).all(|x| t[x * n + x] == x) {
                let key = permutations(n)
                    .iter()
                    .map(|p| {
                        let mut r = vec![0; n * n];
                        for x in 0..n {
                            for y in 0..n {
                                r[p[x] * n + p[y]] = p[t[x * n + y]];
                            }
                        }
                        r
                    })
                    .min()
                    .expect("nonempty");
                seen.entry(key).or_insert(t);
            }
        }
        out.extend(seen.into_values());
    }
    out
}

fn pointed_bands(prefix: &str) -> Vec<Band> {
    let mut out = Vec::new();
    for table in small_bands() {
        let n = (table.len() as f64).sqrt() as usize;
        for o in 0..n {
            let labels = (0..n)
                .map(|x| match x.cmp(&o) {
                    std::cmp::Ordering::Equal => "o".to_string(),
                    std::cmp::Ordering::Less => format!("{prefix}{}", x + 1),
                    std::cmp::Ordering::Greater => format!("{prefix}{x}"),
                })
                .collect();
            out.push(Band::new(labels, table.clone(), o).expect("enumerated band"));
        }
    }
    out
}

fn rees_rings() -> Vec<Semiring> {
    let zero_mul = [
        Group::Cyclic(1),
        Group::Cyclic(2),
        Group::Cyclic(3),
        Group::Cyclic(4),
        Group::Klein,
    ];
    let mut out: Vec<Semiring> = zero_mul
        .into_iter()
        .map(|g| {
            build_family(Family::ZeroMulSkewring(g))
                .expect("valid")
                .with_name(format!("0{g}"))
        })
        .collect();
    out.push(
        build_family(Family::Ring(2))
            .expect("valid")
            .with_name("Z2"),
    );
    out
}

/// Sandwich matrices with the `o` row and column zero, free entries drawn
/// from the elements annihilating every element of the ring.
fn sandwich_candidates(ring: &Semiring, bi: &Band, bl: &Band, zero: usize) -> Vec<Vec<usize>> {
    let annihilators: Vec<usize> = ring
        .elements()
        .filter(|&p| {
            ring.elements()
                .all(|a| ring.mul(a, p) == zero && ring.mul(p, a) == zero)
        })
        .collect();
    let (ni, nl) = (bi.len(), bl.len());
    let free: Vec<usize> = (0..nl * ni)
        .filter(|&x| x / ni != bl.o() && x % ni != bi.o())
        .collect();
    let mut out = Vec::new();
    let total = annihilators.len().pow(free.len() as u32);
    for mut code in 0..total {
        let mut p = vec![zero; nl * ni];
        for &cell in &free {
            p[cell] = annihilators[code % annihilators.len()];
            code /= annihilators.len();
        }
        out.push(p);
    }
    out
}

/// Valid Rees specs over small pointed bands and skew-rings, with built
/// order at most [`MAX_REES_CORPUS_ORDER`].
///
/// Combinations are visited in a seeded order. Each contributes one spec:
/// a randomly chosen valid nonzero sandwich when one exists, otherwise
/// `P ≡ 0`. At most `REES_CORPUS_CAP - REES_NONZERO_TARGET` zero-sandwich
/// specs are taken, so the nonzero ones are not crowded out.
pub fn rees_spec_corpus(seed: u64) -> Result<Vec<(String, ReesSpec)>, CorpusError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (bands_i, bands_l) = (pointed_bands("i"), pointed_bands("l"));
    let rings = rees_rings();
    let mut combos = Vec::new();
    for (ri, ring) in rings.iter().enumerate() {
        for (a, bi) in bands_i.iter().enumerate() {
            for (b, bl) in bands_l.iter().enumerate() {
                if bi.len() * bl.len() * ring.order() <= MAX_REES_CORPUS_ORDER {
                    combos.push((ri, a, b));
                }
            }
        }
    }
    combos.shuffle(&mut rng);

    let mut out: Vec<(String, ReesSpec)> = Vec::new();
    let mut nonzero = 0;
    for (ri, a, b) in combos {
        if out.len() >= REES_CORPUS_CAP {
            break;
        }
        let ring = &rings[ri];
        let (bi, bl) = (&bands_i[a], &bands_l[b]);
        let zero = crate::classify::additive_group(ring)
            .map_err(ReesError::NotSkewRing)?
            .zero;
        let mut valid_nonzero = Vec::new();
        let mut zero_spec = None;
        for p in sandwich_candidates(ring, bi, bl, zero) {
            let spec = ReesSpec::new(ring.clone(), bi.clone(), bl.clone(), p)?;
            if !validate_sandwich(&spec)?.is_empty() {
                continue;
            }
            if spec.has_nonzero_sandwich() {
                valid_nonzero.push(spec);
            } else {
                zero_spec = Some(spec);
            }
        }
        let chosen = if let Some(spec) = valid_nonzero.choose(&mut rng) {
            nonzero += 1;
            Some(spec.clone())
        } else if out.len() - nonzero < REES_CORPUS_CAP - REES_NONZERO_TARGET {
            zero_spec
        } else {
            None
        };
        if let Some(spec) = chosen {
            let name = format!(
                "rees_{:02}_{}_{}x{}{}",
                out.len(),
                ring.name().unwrap_or("R"),
                bi.len(),
                bl.len(),
                if spec.has_nonzero_sandwich() {
                    "_p"
                } else {
                    ""
                }
            );
            out.push((name, spec));
        }
    }
    Ok(out)
}

/// Rectangular band semirings of order at most `max_order`: the census
/// members of order ≤ 3 together with the left zero, right zero and
/// rectangular families.
pub fn rect_band_pool(max_order: usize) -> Result<Vec<CorpusItem>, CorpusError> {
    let mut out = census_matching(max_order, |s| is_rectangular_band_semiring(s).holds)?;
    for k in 1..=max_order {
        for f in [Family::LeftZero(k), Family::RightZero(k)] {
            out.push(family_item(f)?);
        }
    }
    for p in 2..=max_order {
        for q in 2..=max_order / p {
            out.push(family_item(Family::RectBand(p, q))?);
        }
    }
    Ok(out)
}

/// Skew-rings of order at most `max_order`: census members, rings `Z_k`,
/// zero-multiplication skew-rings on `Z_k`, `V4`, `S3`, and `Z2 × Z2`.
pub fn skew_ring_pool(max_order: usize) -> Result<Vec<CorpusItem>, CorpusError> {
    let mut out = census_matching(max_order, |s| is_skew_ring(s).holds)?;
    for k in 1..=max_order {
        out.push(family_item(Family::Ring(k))?);
        out.push(family_item(Family::ZeroMulSkewring(Group::Cyclic(k)))?);
    }
    for g in [Group::Klein, Group::Symmetric3] {
        if g.order() <= max_order {
            out.push(family_item(Family::ZeroMulSkewring(g))?);
        }
    }
    if max_order >= 4 {
        let z2 = build_family(Family::Ring(2))?;
        out.push(product_item(&z2, "Z2", &z2, "Z2")?);
    }
    Ok(out)
}

fn census_matching(
    max_order: usize,
    keep: impl Fn(&Semiring) -> bool,
) -> Result<Vec<CorpusItem>, CorpusError> {
    let mut out = Vec::new();
    for n in 1..=max_order.min(MAX_CENSUS_ORDER) {
        out.extend(
            enumerate_semirings(n, true)?
                .items()
                .into_iter()
                .filter(|item| keep(&item.semiring)),
        );
    }
    Ok(out)
}

fn family_item(f: Family) -> Result<CorpusItem, CorpusError> {
    Ok(CorpusItem::new(
        f.to_string(),
        build_family(f)?,
        Provenance::Family(f.to_string()),
    ))
}

fn product_item(a: &Semiring, an: &str, b: &Semiring, bn: &str) -> Result<CorpusItem, CorpusError> {
    Ok(CorpusItem::new(
        format!("{an}x{bn}"),
        direct_product(a, b)?,
        Provenance::Product(an.into(), bn.into()),
    ))
}

/// Constructed items of order at most 16: named examples, family members,
/// direct products, and the built Rees corpus.
pub fn constructed_items(seed: u64) -> Result<Vec<CorpusItem>, CorpusError> {
    let mut out = named_items();
    let mut families = Vec::new();
    for k in 1..=6 {
        families.push(Family::Ring(k));
    }
    for k in 2..=6 {
        families.push(Family::ZeroMulSkewring(Group::Cyclic(k)));
    }
    families.push(Family::ZeroMulSkewring(Group::Klein));
    families.push(Family::ZeroMulSkewring(Group::Symmetric3));
    for k in 1..=4 {
        families.push(Family::ChainBlattice(k));
        families.push(Family::LeftZero(k));
        families.push(Family::RightZero(k));
        families.push(Family::ConstZeroMulSemilattice(k));
    }
    for (p, q) in [(2, 2), (2, 3), (3, 2), (3, 3), (2, 4)] {
        families.push(Family::RectBand(p, q));
    }
    for k in 1..=5 {
        families.push(Family::Truncated(k));
        families.push(Family::ArchimedeanComponent(k));
    }
    for f in families {
        out.push(family_item(f)?);
    }

    let n = |x: Named| x.build();
    let f = |x: Family| build_family(x).expect("valid family");
    let products: Vec<(Semiring, &str, Semiring, &str)> = vec![
        (n(Named::TR3), "TR3", n(Named::Z2), "Z2"),
        (n(Named::N2), "N2", n(Named::Z2), "Z2"),
        (n(Named::N2), "N2", f(Family::Ring(3)), "Z3"),
        (n(Named::B2), "B2", f(Family::Ring(3)), "Z3"),
        (n(Named::LZ2), "LZ2", f(Family::Ring(3)), "Z3"),
        (n(Named::Q2), "Q2", n(Named::Z2), "Z2"),
        (n(Named::RB4), "RB4", n(Named::Z2), "Z2"),
        (n(Named::TR3), "TR3", n(Named::TR3), "TR3"),
        (n(Named::N2), "N2", n(Named::M4), "M4"),
        (
            n(Named::B2),
            "B2",
            f(Family::ZeroMulSkewring(Group::Klein)),
            "0V4",
        ),
        (n(Named::TR3), "TR3", n(Named::LZ2), "LZ2"),
        (n(Named::N2), "N2", f(Family::RightZero(2)), "RZ2"),
        (
            n(Named::TR3),
            "TR3",
            f(Family::ZeroMulSkewring(Group::Cyclic(4))),
            "0Z4",
        ),
        (
            n(Named::N2),
            "N2",
            f(Family::ZeroMulSkewring(Group::Symmetric3)),
            "0S3",
        ),
        (n(Named::Q2), "Q2", n(Named::B2), "B2"),
        (f(Family::Truncated(3)), "TR4", n(Named::LZ2), "LZ2"),
    ];
    for (a, an, b, bn) in products {
        out.push(product_item(&a, an, &b, bn)?);
    }
    for (name, spec) in rees_spec_corpus(seed)? {
        let built = build_rees(&spec)?;
        out.push(CorpusItem::new(
            name.clone(),
            built.semiring,
            Provenance::Rees(name),
        ));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusCount {
    pub order: usize,
    pub associative_tables: usize,
    pub labelled: usize,
    pub up_to_iso: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Manifest {
    pub seed: u64,
    pub named: Vec<String>,
    pub census: Vec<CensusCount>,
    pub rees_specs: Vec<String>,
}

/// Writes named items, the up-to-isomorphism census and the Rees corpus as
/// SMR/REES files under `dir`, plus `manifest.json` with census counts.
pub fn export(dir: &Path, seed: u64) -> Result<Manifest, CorpusError> {
    let write = |path: &Path, text: &str| -> Result<(), CorpusError> {
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent).map_err(|source| CorpusError::Io {
                path: parent.display().to_string(),
                source,
            })?;
        }
        fs::write(path, text).map_err(|source| CorpusError::Io {
            path: path.display().to_string(),
            source,
        })
    };
    let mut named = Vec::new();
    for item in named_items() {
        write(
            &dir.join("named").join(format!("{}.smr", item.name)),
            &serialize_semiring(&item.semiring),
        )?;
        named.push(item.name);
    }
    let mut census = Vec::new();
    for order in 1..=MAX_CENSUS_ORDER {
        let labelled = enumerate_semirings(order, false)?;
        let iso = enumerate_semirings(order, true)?;
        for item in iso.items() {
            write(
                &dir.join("census")
                    .join(format!("order{order}"))
                    .join(format!("{}.smr", item.name)),
                &serialize_semiring(&item.semiring),
            )?;
        }
        census.push(CensusCount {
            order,
            associative_tables: labelled.associative_tables,
            labelled: labelled.count(),
            up_to_iso: iso.count(),
        });
    }
    let mut rees_specs = Vec::new();
    for (name, spec) in rees_spec_corpus(seed)? {
        write(
            &dir.join("rees").join(format!("{name}.rees")),
            &serialize_rees(&spec),
        )?;
        rees_specs.push(name);
    }
    let manifest = Manifest {
        seed,
        named,
        census,
        rees_specs,
    };
    let json = serde_json::to_string_pretty(&manifest).expect("manifest serializes") + "\n";
    write(&dir.join("manifest.json"), &json)?;
    Ok(manifest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;
    use crate::iso::find_isomorphism;

    #[test]
    fn family_parsing() {
        for text in [
            "ring(Z3)",
            "zero_mul_skewring(V4)",
            "chain_blattice(3)",
            "rect_band(2,3)",
            "archimedean_component(truncated(4))",
        ] {
            assert_eq!(text.parse::<Family>().unwrap().to_string(), text);
        }
        assert_eq!("ring(5)".parse::<Family>().unwrap(), Family::Ring(5));
        assert!(matches!(
            "cube(3)".parse::<Family>(),
            Err(CorpusError::UnknownFamily(_))
        ));
        assert!(matches!(
            "truncated(0)".parse::<Family>(),
            Err(CorpusError::BadParams { .. })
        ));
        assert!("zero_mul_skewring(Q8)".parse::<Family>().is_err());
    }

    #[test]
    fn named_facts() {
        assert_eq!(Named::TR3.build().order(), 3);
        assert!(
            classify(&Named::TR3.build())
                .is_quasi_completely_regular
                .holds
        );
        assert!(classify(&Named::LZ2.build()).is_left_zero_semiring.holds);
        let q2 = classify(&Named::Q2.build());
        assert!(q2.is_additively_quasi_regular.holds && !q2.is_quasi_completely_regular.holds);
        let n2 = Named::N2.build();
        assert_eq!(n2.add_table(), vec![1, 1, 1, 1]);
        assert_eq!(n2.mul_table(), vec![0, 1, 1, 1]);
        let lz2z2 = direct_product(&Named::LZ2.build(), &Named::Z2.build()).unwrap();
        assert!(find_isomorphism(&Named::M4.build(), &lz2z2).is_some());
        assert_eq!("RB4".parse::<Named>(), Ok(Named::RB4));
    }

    #[test]
    fn truncated_idempotents() {
        for k in 1..=5 {
            let s = build_family(Family::Truncated(k)).unwrap();
            assert_eq!(s.additive_idempotents().to_vec(), vec![0, k]);
        }
    }

    #[test]
    fn zero_mul_skewrings() {
        for g in [Group::Cyclic(5), Group::Klein, Group::Symmetric3] {
            let s = build_family(Family::ZeroMulSkewring(g)).unwrap();
            assert!(classify(&s).is_skew_ring.holds, "{g}");
        }
        let s3 = build_family(Family::ZeroMulSkewring(Group::Symmetric3)).unwrap();
        assert!((0..6).any(|a| (0..6).any(|b| s3.add(a, b) != s3.add(b, a))));
    }

    #[test]
    fn small_censuses() {
        assert_eq!(enumerate_semirings(1, false).unwrap().count(), 1);
        assert_eq!(associative_tables(2).len(), 8);
        assert_eq!(associative_tables(3).len(), 113);
        assert!(matches!(
            enumerate_semirings(4, true),
            Err(CorpusError::OrderOutOfRange { .. })
        ));
    }

    #[test]
    fn band_census() {
        // bands up to isomorphism: 1, 3 (left zero, right zero, chain), and 10 on three points
        let bands = small_bands();
        assert_eq!(bands.iter().filter(|t| t.len() == 4).count(), 3);
        assert_eq!(bands.iter().filter(|t| t.len() == 9).count(), 10);
        assert_eq!(bands.len(), 14);
    }

    #[test]
    fn rees_corpus_shape() {
        let specs = rees_spec_corpus(DEFAULT_SEED).unwrap();
        assert!(specs.len() >= 20);
        assert!(
            specs
                .iter()
                .filter(|(_, s)| s.has_nonzero_sandwich())
                .count()
                >= 5
        );
        assert!(specs
            .iter()
            .all(|(_, s)| s.built_order() <= MAX_REES_CORPUS_ORDER));
        assert_eq!(
            rees_spec_corpus(DEFAULT_SEED)
                .unwrap()
                .iter()
                .map(|x| &x.0)
                .collect::<Vec<_>>(),
            specs.iter().map(|x| &x.0).collect::<Vec<_>>()
        );
    }
}
