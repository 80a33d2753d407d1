//! Finite semirings as pairs of Cayley tables.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::bitset::ElementSet;

/// Largest carrier the crate accepts. Element ids must fit an [`ElementSet`].
pub const MAX_ORDER: usize = ElementSet::CAPACITY;

/// Cap on the number of violations [`validate_axioms`] collects.
pub const MAX_REPORTED_VIOLATIONS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Table {
    Add,
    Mul,
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Table::Add => "add",
            Table::Mul => "mul",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    AdditiveAssociativity,
    MultiplicativeAssociativity,
    /// a(b+c) = ab + ac
    LeftDistributivity,
    /// (b+c)a = ba + ca
    RightDistributivity,
}

/// A failed semiring law together with the triple that witnesses it.
///
/// For right distributivity the triple is reported in the order `(b, c, a)`
/// matching the law `(b+c)a = ba+ca`; every other law uses `(a, b, c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Violation {
    pub law: Law,
    pub witness: [usize; 3],
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = self.witness;
        match self.law {
            Law::AdditiveAssociativity => {
                write!(f, "additive associativity fails at (a,b,c)=({x},{y},{z})")
            }
            Law::MultiplicativeAssociativity => write!(
                f,
                "multiplicative associativity fails at (a,b,c)=({x},{y},{z})"
            ),
            Law::LeftDistributivity => {
                write!(f, "left distributivity fails at (a,b,c)=({x},{y},{z})")
            }
            Law::RightDistributivity => {
                write!(f, "right distributivity fails at (b,c,a)=({x},{y},{z})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemiringError {
    #[error("carrier must be nonempty")]
    EmptyCarrier,
    #[error("order {order} exceeds the maximum of {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("{table} table has {found} entries, expected {expected}")]
    DimensionMismatch {
        table: Table,
        expected: usize,
        found: usize,
    },
    #[error("entry out of range: {table}[{row}][{col}] = {value} but order is {order}")]
    EntryOutOfRange {
        table: Table,
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("semiring axioms violated: {}", join_violations(.0))]
    Axioms(Vec<Violation>),
    #[error("n·a is undefined for n = 0")]
    ZeroMultiple,
    #[error("subset {members} is not closed under {table}: {a} {table} {b} = {value}")]
    NotClosed {
        members: ElementSet,
        table: Table,
        a: usize,
        b: usize,
        value: usize,
    },
}

fn join_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

/// A finite semiring on the carrier `0..order`.
///
/// Both tables are stored row-major: `add[a * order + b] = a + b`.
/// Construction always validates the semiring axioms, so a `Semiring` value
/// is known to be associative in both operations and distributive on both
/// sides.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Semiring {
    order: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    name: Option<String>,
}

impl Semiring {
    /// Builds a semiring from row-major tables, checking ranges and axioms.
    pub fn new(order: usize, add: Vec<usize>, mul: Vec<usize>) -> Result<Self, SemiringError> {
        check_shape(order, &add, Table::Add)?;
        check_shape(order, &mul, Table::Mul)?;
        let violations = validate_axioms_unchecked(order, &add, &mul);
        if !violations.is_empty() {
            return Err(SemiringError::Axioms(violations));
        }
        Ok(Semiring {
            order,
            add: add.into_iter().map(|x| x as u8).collect(),
            mul: mul.into_iter().map(|x| x as u8).collect(),
            name: None,
        })
    }

    /// Builds a semiring from two operation closures.
    pub fn from_fns(
        order: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, SemiringError> {
        let mut at = Vec::with_capacity(order * order);
        let mut mt = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                at.push(add(a, b));
                mt.push(mul(a, b));
            }
        }
        Semiring::new(order, at, mt)
    }

    /// Builds a semiring from nested rows.
    pub fn from_rows(add: &[Vec<usize>], mul: &[Vec<usize>]) -> Result<Self, SemiringError> {
        let order = add.len();
        Semiring::new(
            order,
            add.iter().flatten().copied().collect(),
            mul.iter().flatten().copied().collect(),
        )
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn carrier(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    pub fn op(&self, table: Table, a: usize, b: usize) -> usize {
        match table {
            Table::Add => self.add(a, b),
            Table::Mul => self.mul(a, b),
        }
    }

    pub fn add_row(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.add[a * self.order..(a + 1) * self.order]
            .iter()
            .map(|&x| x as usize)
    }

    pub fn mul_row(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.mul[a * self.order..(a + 1) * self.order]
            .iter()
            .map(|&x| x as usize)
    }

    pub fn add_table(&self) -> Vec<usize> {
        self.add.iter().map(|&x| x as usize).collect()
    }

    pub fn mul_table(&self) -> Vec<usize> {
        self.mul.iter().map(|&x| x as usize).collect()
    }

    /// Sum of a slice of elements, left to right. Panics on an empty slice.
    pub fn sum(&self, terms: &[usize]) -> usize {
        let (&first, rest) = terms.split_first().expect("empty sum");
        rest.iter().fold(first, |acc, &t| self.add(acc, t))
    }

    pub fn is_add_idempotent(&self, a: usize) -> bool {
        self.add(a, a) == a
    }

    pub fn is_mul_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    /// E⁺(S), the additive idempotents.
    pub fn additive_idempotents(&self) -> ElementSet {
        self.elements()
            .filter(|&a| self.is_add_idempotent(a))
            .collect()
    }

    /// `n·a = a + ... + a` with `n` summands.
    pub fn add_power(&self, a: usize, n: u64) -> Result<usize, SemiringError> {
        if n == 0 {
            return Err(SemiringError::ZeroMultiple);
        }
        let mut acc: Option<usize> = None;
        let mut base = a;
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = Some(match acc {
                    None => base,
                    Some(x) => self.add(x, base),
                });
            }
            n >>= 1;
            if n > 0 {
                base = self.add(base, base);
            }
        }
        Ok(acc.expect("n > 0"))
    }

    /// The monogenic additive subsemigroup generated by `a`.
    pub fn orbit(&self, a: usize) -> Orbit {
        let mut seen = vec![usize::MAX; self.order];
        let mut powers = Vec::new();
        let mut x = a;
        loop {
            if seen[x] != usize::MAX {
                let index = seen[x] + 1;
                let period = powers.len() + 1 - index;
                return Orbit {
                    powers,
                    index,
                    period,
                };
            }
            seen[x] = powers.len();
            powers.push(x);
            x = self.add(x, a);
        }
    }

    /// The subsemiring induced on `members`, renumbered in increasing id
    /// order. Returns the renumbering (new id → old id) alongside.
    pub fn induced(&self, members: &ElementSet) -> Result<(Semiring, Vec<usize>), SemiringError> {
        let ids = members.to_vec();
        if ids.is_empty() {
            return Err(SemiringError::EmptyCarrier);
        }
        let mut index = vec![usize::MAX; self.order];
        for (k, &a) in ids.iter().enumerate() {
            index[a] = k;
        }
        let m = ids.len();
        let mut add = Vec::with_capacity(m * m);
        let mut mul = Vec::with_capacity(m * m);
        for &a in &ids {
            for &b in &ids {
                for (table, out) in [(Table::Add, &mut add), (Table::Mul, &mut mul)] {
                    let value = self.op(table, a, b);
                    if index[value] == usize::MAX {
                        return Err(SemiringError::NotClosed {
                            members: *members,
                            table,
                            a,
                            b,
                            value,
                        });
                    }
                    out.push(index[value]);
                }
            }
        }
        Ok((Semiring::new(m, add, mul)?, ids))
    }

    /// Image of the semiring under a relabelling `perm` (old id → new id).
    pub fn relabel(&self, perm: &[usize]) -> Semiring {
        let n = self.order;
        let mut add = vec![0u8; n * n];
        let mut mul = vec![0u8; n * n];
        for a in 0..n {
            for b in 0..n {
                add[perm[a] * n + perm[b]] = perm[self.add(a, b)] as u8;
                mul[perm[a] * n + perm[b]] = perm[self.mul(a, b)] as u8;
            }
        }
        Semiring {
            order: n,
            add,
            mul,
            name: self.name.clone(),
        }
    }
}

impl fmt::Debug for Semiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Semiring")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("add", &self.add)
            .field("mul", &self.mul)
            .finish()
    }
}

/// The sequence `a, 2a, 3a, ...` up to its first repetition.
///
/// `index` and `period` follow the usual convention for monogenic
/// semigroups: `(index + period)·a = index·a` and both are minimal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    /// `powers[k - 1] = k·a` for `k = 1 ..= index + period - 1`.
    pub powers: Vec<usize>,
    pub index: usize,
    pub period: usize,
}

impl Orbit {
    /// Exclusive upper bound on the multiples worth searching: every `n·a`
    /// with `n ≥ 1` equals some `k·a` with `k < bound()`.
    pub fn bound(&self) -> usize {
        self.index + self.period
    }

    pub fn power(&self, n: usize) -> usize {
        assert!(n >= 1);
        if n <= self.powers.len() {
            self.powers[n - 1]
        } else {
            let k = self.index + (n - self.index) % self.period;
            self.powers[k - 1]
        }
    }

    /// The unique additive idempotent among the multiples.
    pub fn idempotent(&self) -> usize {
        // The cyclic part is a group; its identity is k·a with k ≡ 0 mod period.
        let k = self.index.div_ceil(self.period) * self.period;
        self.power(k)
    }
}

fn check_shape(order: usize, table: &[usize], which: Table) -> Result<(), SemiringError> {
    if order == 0 {
        return Err(SemiringError::EmptyCarrier);
    }
    if order > MAX_ORDER {
        return Err(SemiringError::OrderTooLarge {
            order,
            max: MAX_ORDER,
        });
    }
    if table.len() != order * order {
        return Err(SemiringError::DimensionMismatch {
            table: which,
            expected: order * order,
            found: table.len(),
        });
    }
    if let Some(pos) = table.iter().position(|&v| v >= order) {
        return Err(SemiringError::EntryOutOfRange {
            table: which,
            row: pos / order,
            col: pos % order,
            value: table[pos],
            order,
        });
    }
    Ok(())
}

/// Every failed semiring law (at most [`MAX_REPORTED_VIOLATIONS`]).
///
/// Laws are scanned in a fixed order: additive associativity, multiplicative
/// associativity, left distributivity, right distributivity; triples are
/// scanned lexicographically within each law.
pub fn validate_axioms(
    order: usize,
    add: &[usize],
    mul: &[usize],
) -> Result<Vec<Violation>, SemiringError> {
    check_shape(order, add, Table::Add)?;
    check_shape(order, mul, Table::Mul)?;
    Ok(validate_axioms_unchecked(order, add, mul))
}

type Law3<'a> = &'a dyn Fn(usize, usize, usize) -> bool;

fn validate_axioms_unchecked(n: usize, add: &[usize], mul: &[usize]) -> Vec<Violation> {
    let p = |a: usize, b: usize| add[a * n + b];
    let m = |a: usize, b: usize| mul[a * n + b];
    let mut out = Vec::new();
    let laws: [(Law, Law3<'_>); 4] = [
        (Law::AdditiveAssociativity, &|a, b, c| {
            p(p(a, b), c) == p(a, p(b, c))
        }),
        (Law::MultiplicativeAssociativity, &|a, b, c| {
            m(m(a, b), c) == m(a, m(b, c))
        }),
        (Law::LeftDistributivity, &|a, b, c| {
            m(a, p(b, c)) == p(m(a, b), m(a, c))
        }),
        (Law::RightDistributivity, &|b, c, a| {
            m(p(b, c), a) == p(m(b, a), m(c, a))
        }),
    ];
    for (law, holds) in laws {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if !holds(x, y, z) {
                        out.push(Violation {
                            law,
                            witness: [x, y, z],
                        });
                        if out.len() == MAX_REPORTED_VIOLATIONS {
                            return out;
                        }
                    }
                }
            }
        }
    }
    out
}

/// Default cap on the order of a direct product.
pub const DEFAULT_PRODUCT_LIMIT: usize = 256;

/// Componentwise product; `(s, t)` is encoded as `s * |T| + t`.
pub fn direct_product(s: &Semiring, t: &Semiring) -> Result<Semiring, SemiringError> {
    direct_product_with_limit(s, t, DEFAULT_PRODUCT_LIMIT)
}

pub fn direct_product_with_limit(
    s: &Semiring,
    t: &Semiring,
    limit: usize,
) -> Result<Semiring, SemiringError> {
    let (m, k) = (s.order(), t.order());
    let order = m * k;
    let max = limit.min(MAX_ORDER);
    if order > max {
        return Err(SemiringError::OrderTooLarge { order, max });
    }
    let product = Semiring::from_fns(
        order,
        |x, y| s.add(x / k, y / k) * k + t.add(x % k, y % k),
        |x, y| s.mul(x / k, y / k) * k + t.mul(x % k, y % k),
    )?;
    Ok(match (s.name(), t.name()) {
        (Some(a), Some(b)) => product.with_name(format!("{a}x{b}")),
        _ => product,
    })
}
