//! Isomorphism search between finite semirings.
//!
//! Backtracking over bijections. Each element gets a cheap color
//! (additive idempotency, least `k` with `k·a` additively idempotent,
//! multiplicative idempotency) and may only map to an element of the same
//! color. After every choice the partial map is closed under both
//! operations: if `a` and `b` are mapped then `a+b` and `ab` are forced.

use serde::Serialize;

use crate::semiring::Semiring;

/// A bijection on element ids, `mapping[a]` being the image of `a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoWitness {
    pub mapping: Vec<usize>,
    pub verified: bool,
}

impl IsoWitness {
    /// Checks `mapping` against both tables and records the outcome.
    pub fn new(from: &Semiring, to: &Semiring, mapping: Vec<usize>) -> Self {
        let verified = is_isomorphism(from, to, &mapping);
        IsoWitness { mapping, verified }
    }

    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.mapping.len()];
        for (a, &fa) in self.mapping.iter().enumerate() {
            inv[fa] = a;
        }
        inv
    }
}

pub fn is_isomorphism(from: &Semiring, to: &Semiring, mapping: &[usize]) -> bool {
    let n = from.order();
    if to.order() != n || mapping.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &fa in mapping {
        if fa >= n || std::mem::replace(&mut seen[fa], true) {
            return false;
        }
    }
    from.elements().all(|a| {
        from.elements().all(|b| {
            mapping[from.add(a, b)] == to.add(mapping[a], mapping[b])
                && mapping[from.mul(a, b)] == to.mul(mapping[a], mapping[b])
        })
    })
}

pub(crate) fn element_colors(s: &Semiring) -> Vec<(bool, usize, bool)> {
    s.elements()
        .map(|a| {
            let k = (1..)
                .find(|&k| {
                    let x = s.add_power(a, k).expect("k >= 1");
                    s.is_add_idempotent(x)
                })
                .expect("finite orbit contains an idempotent");
            (s.is_add_idempotent(a), k as usize, s.is_mul_idempotent(a))
        })
        .collect()
}

/// A verified isomorphism `s → t`, or `None` when the two are not isomorphic.
pub fn find_isomorphism(s: &Semiring, t: &Semiring) -> Option<IsoWitness> {
    let n = s.order();
    if t.order() != n {
        return None;
    }
    let cs = element_colors(s);
    let ct = element_colors(t);
    let mut hist_s = cs.clone();
    let mut hist_t = ct.clone();
    hist_s.sort();
    hist_t.sort();
    if hist_s != hist_t {
        return None;
    }

    let mut search = Search {
        s,
        t,
        cs: &cs,
        ct: &ct,
    };
    let map = vec![usize::MAX; n];
    let inv = vec![usize::MAX; n];
    let mapping = search.extend(map, inv)?;
    let witness = IsoWitness::new(s, t, mapping);
    debug_assert!(witness.verified);
    witness.verified.then_some(witness)
}

struct Search<'a> {
    s: &'a Semiring,
    t: &'a Semiring,
    cs: &'a [(bool, usize, bool)],
    ct: &'a [(bool, usize, bool)],
}

impl Search<'_> {
    fn extend(&mut self, map: Vec<usize>, inv: Vec<usize>) -> Option<Vec<usize>> {
        let Some(a) = map.iter().position(|&x| x == usize::MAX) else {
            return Some(map);
        };
        for b in 0..self.t.order() {
            if inv[b] != usize::MAX || self.cs[a] != self.ct[b] {
                continue;
            }
            let (mut m, mut i) = (map.clone(), inv.clone());
            if self.assign(&mut m, &mut i, a, b) && self.close(&mut m, &mut i) {
                if let Some(done) = self.extend(m, i) {
                    return Some(done);
                }
            }
        }
        None
    }

    fn assign(&self, map: &mut [usize], inv: &mut [usize], a: usize, b: usize) -> bool {
        match (map[a], inv[b]) {
            (x, _) if x == b => true,
            (x, y) if x == usize::MAX && y == usize::MAX && self.cs[a] == self.ct[b] => {
                map[a] = b;
                inv[b] = a;
                true
            }
            _ => false,
        }
    }

    /// Propagates forced images until nothing changes; false on conflict.
    fn close(&self, map: &mut [usize], inv: &mut [usize]) -> bool {
        loop {
            let mut changed = false;
            let mapped: Vec<usize> = (0..map.len()).filter(|&x| map[x] != usize::MAX).collect();
            for &x in &mapped {
                for &y in &mapped {
                    for (src, dst) in [
                        (self.s.add(x, y), self.t.add(map[x], map[y])),
                        (self.s.mul(x, y), self.t.mul(map[x], map[y])),
                    ] {
                        if map[src] == dst {
                            continue;
                        }
                        if !self.assign(map, inv, src, dst) {
                            return false;
                        }
                        changed = true;
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for k in 0..used.len() {
            if !used[k] {
                used[k] = true;
                prefix.push(k);
                go(prefix, used, out);
                prefix.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::direct_product;

    fn z2() -> Semiring {
        Semiring::from_fns(2, |a, b| a ^ b, |a, b| a & b).unwrap()
    }

    fn lz2() -> Semiring {
        Semiring::from_fns(2, |a, _| a, |a, _| a).unwrap()
    }

    #[test]
    fn identity_on_z2() {
        let w = find_isomorphism(&z2(), &z2()).unwrap();
        assert_eq!(w.mapping, vec![0, 1]);
        assert!(w.verified);
    }

    #[test]
    fn b2_and_q2_differ() {
        let b2 = Semiring::from_fns(2, usize::max, usize::min).unwrap();
        let q2 = Semiring::from_fns(2, usize::max, |_, _| 0).unwrap();
        assert!(find_isomorphism(&b2, &q2).is_none());
        // Both bijections fail by direct evaluation too.
        assert!(permutations(2).iter().all(|p| !is_isomorphism(&b2, &q2, p)));
    }

    #[test]
    fn swapped_products() {
        let p = direct_product(&lz2(), &z2()).unwrap();
        let q = direct_product(&z2(), &lz2()).unwrap();
        let w = find_isomorphism(&p, &q).unwrap();
        // (s, t) = 2s + t  ↦  (t, s) = 2t + s
        assert_eq!(w.mapping, vec![0, 2, 1, 3]);
        assert!(is_isomorphism(&q, &p, &w.inverse()));
    }

    #[test]
    fn relabelled_copies_are_found() {
        let s = direct_product(&direct_product(&lz2(), &z2()).unwrap(), &z2()).unwrap();
        for perm in [vec![7, 6, 5, 4, 3, 2, 1, 0], vec![3, 1, 4, 0, 5, 2, 7, 6]] {
            let t = s.relabel(&perm);
            let w = find_isomorphism(&s, &t).expect("isomorphic");
            assert!(w.verified);
        }
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(0), vec![Vec::<usize>::new()]);
    }
}
