//! Canonical partitions of a carrier.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use serde::{Serialize, Serializer};

use crate::bitset::ElementSet;

/// A partition of `0..n`, stored as a class id per element.
///
/// Class ids are canonical: classes are numbered in order of their least
/// member, so two equal partitions always have equal representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    class_of: Vec<usize>,
    classes: usize,
}

impl Partition {
    /// Groups elements with equal keys.
    pub fn from_keys<K: Eq + Hash>(keys: impl IntoIterator<Item = K>) -> Self {
        let mut ids: HashMap<K, usize> = HashMap::new();
        let class_of: Vec<usize> = keys
            .into_iter()
            .map(|k| {
                let next = ids.len();
                *ids.entry(k).or_insert(next)
            })
            .collect();
        Partition {
            classes: ids.len(),
            class_of,
        }
    }

    /// Canonicalizes arbitrary labels. Returns `None` if `labels` is empty.
    pub fn from_labels(labels: &[usize]) -> Option<Self> {
        (!labels.is_empty()).then(|| Self::from_keys(labels.iter().copied()))
    }

    pub fn from_classes(n: usize, classes: &[ElementSet]) -> Option<Self> {
        let mut labels = vec![usize::MAX; n];
        for (k, class) in classes.iter().enumerate() {
            for a in class {
                if a >= n || labels[a] != usize::MAX {
                    return None;
                }
                labels[a] = k;
            }
        }
        if labels.contains(&usize::MAX) {
            return None;
        }
        Self::from_labels(&labels)
    }

    pub fn identity(n: usize) -> Self {
        Self::from_keys(0..n)
    }

    pub fn universal(n: usize) -> Self {
        Self::from_keys(std::iter::repeat_n((), n))
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn num_classes(&self) -> usize {
        self.classes
    }

    #[inline]
    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn labels(&self) -> &[usize] {
        &self.class_of
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn is_universal(&self) -> bool {
        self.classes == 1
    }

    /// Classes in id order.
    pub fn classes(&self) -> Vec<ElementSet> {
        let mut out = vec![ElementSet::new(); self.classes];
        for (a, &c) in self.class_of.iter().enumerate() {
            out[c].insert(a);
        }
        out
    }

    pub fn class(&self, id: usize) -> ElementSet {
        self.class_of
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == id)
            .map(|(a, _)| a)
            .collect()
    }

    pub fn class_containing(&self, a: usize) -> ElementSet {
        self.class(self.class_of[a])
    }

    /// True when every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        let mut image = vec![usize::MAX; self.classes];
        self.class_of.iter().zip(&coarser.class_of).all(|(&c, &d)| {
            if image[c] == usize::MAX {
                image[c] = d;
            }
            image[c] == d
        })
    }

    pub fn meet(&self, other: &Partition) -> Partition {
        Self::from_keys(self.class_of.iter().zip(&other.class_of))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let classes: Vec<String> = self.classes().iter().map(|c| c.to_string()).collect();
        write!(f, "{}", classes.join(" "))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.classes().iter().map(|c| c.to_vec()))
    }
}

/// A binary relation on `0..n` as one row set per element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation(pub Vec<ElementSet>);

impl Relation {
    pub fn of_partition(p: &Partition) -> Self {
        let classes = p.classes();
        Relation((0..p.len()).map(|a| classes[p.class_of(a)]).collect())
    }

    /// `a (self ∘ other) b` iff there is `c` with `a self c` and `c other b`.
    pub fn compose(&self, other: &Relation) -> Relation {
        Relation(
            self.0
                .iter()
                .map(|row| {
                    let mut out = ElementSet::new();
                    for c in row {
                        out.union_with(&other.0[c]);
                    }
                    out
                })
                .collect(),
        )
    }

    pub fn is_equivalence(&self) -> bool {
        let rows = &self.0;
        (0..rows.len()).all(|a| rows[a].contains(a) && rows[a].iter().all(|b| rows[b] == rows[a]))
    }

    /// Partition by the rows of an equivalence relation.
    pub fn to_partition(&self) -> Option<Partition> {
        self.is_equivalence()
            .then(|| Partition::from_keys(self.0.iter().copied()))
    }

    /// Reflexive, symmetric and transitive closure.
    pub fn equivalence_closure(&self) -> Partition {
        let n = self.0.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for a in 0..n {
            for b in self.0[a] {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        Partition::from_keys((0..n).map(|a| find(&mut parent, a)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_follow_least_member() {
        let p = Partition::from_labels(&[7, 3, 7, 9, 3]).unwrap();
        assert_eq!(p.labels(), &[0, 1, 0, 2, 1]);
        assert_eq!(p.to_string(), "{0,2} {1,4} {3}");
    }

    #[test]
    fn refinement_and_meet() {
        let a = Partition::from_labels(&[0, 0, 1, 1]).unwrap();
        let b = Partition::from_labels(&[0, 1, 1, 0]).unwrap();
        let m = a.meet(&b);
        assert_eq!(m, Partition::identity(4));
        assert!(m.refines(&a) && m.refines(&b));
        assert!(!a.refines(&b));
        assert!(a.refines(&Partition::universal(4)));
    }

    #[test]
    fn composition_of_equivalences() {
        let l = Relation::of_partition(&Partition::from_labels(&[0, 0, 1, 1]).unwrap());
        let r = Relation::of_partition(&Partition::from_labels(&[0, 1, 0, 1]).unwrap());
        let d = l.compose(&r);
        assert!(d.0.iter().all(|row| row.len() == 4));
        assert_eq!(d.to_partition(), Some(Partition::universal(4)));

        let l = Relation::of_partition(&Partition::from_labels(&[0, 0, 1]).unwrap());
        let r = Relation::of_partition(&Partition::from_labels(&[0, 1, 1]).unwrap());
        let lr = l.compose(&r);
        assert!(!lr.is_equivalence());
        assert_eq!(lr.equivalence_closure(), Partition::universal(3));
    }

    #[test]
    fn from_classes_rejects_overlap() {
        let a: ElementSet = [0, 1].into_iter().collect();
        let b: ElementSet = [1, 2].into_iter().collect();
        assert!(Partition::from_classes(3, &[a, b]).is_none());
        let c: ElementSet = [2].into_iter().collect();
        assert_eq!(
            Partition::from_classes(3, &[c, a]).unwrap().labels(),
            &[0, 0, 1]
        );
    }
}
