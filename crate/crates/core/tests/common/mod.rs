#![allow(dead_code)]

use std::path::PathBuf;

use finsemi::corpus::{constructed_items, enumerate_semirings, CorpusItem, DEFAULT_SEED};
use finsemi::Semiring;

/// Census items of orders 1 to 3 (labelled) followed by constructed items.
pub fn sweep_items() -> Vec<CorpusItem> {
    let mut items = Vec::new();
    for n in 1..=3 {
        items.extend(enumerate_semirings(n, false).unwrap().items());
    }
    items.extend(constructed_items(DEFAULT_SEED).unwrap());
    items
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
}

/// `k·x` by repeated addition.
pub fn multiple(s: &Semiring, x: usize, k: usize) -> usize {
    (1..k).fold(x, |acc, _| s.add(acc, x))
}

pub fn naive_regular(s: &Semiring, x: usize) -> bool {
    s.elements().any(|y| s.add(s.add(x, y), x) == x)
}

/// Least `m ≥ 1` with `m·a` additively regular, by direct search.
pub fn naive_index(s: &Semiring, a: usize) -> usize {
    (1..=s.order() + 1)
        .find(|&m| naive_regular(s, multiple(s, a, m)))
        .expect("finite semirings are additively quasi regular")
}

/// `x ∈ S¹ + y`.
fn in_left(s: &Semiring, x: usize, y: usize) -> bool {
    x == y || s.elements().any(|u| s.add(u, y) == x)
}

/// `x ∈ y + S¹`.
fn in_right(s: &Semiring, x: usize, y: usize) -> bool {
    x == y || s.elements().any(|u| s.add(y, u) == x)
}

/// `x ∈ S¹ + y + S¹`.
fn in_two_sided(s: &Semiring, x: usize, y: usize) -> bool {
    in_left(s, x, y)
        || in_right(s, x, y)
        || s.elements()
            .any(|u| s.elements().any(|v| s.add(s.add(u, y), v) == x))
}

/// The five starred relations as boolean matrices, computed pairwise from
/// the definitions: `a X* b` iff `ma X⁺ nb` with `m, n` least making the
/// multiples additively regular.
pub struct NaiveStarred {
    pub l: Vec<Vec<bool>>,
    pub r: Vec<Vec<bool>>,
    pub h: Vec<Vec<bool>>,
    pub d: Vec<Vec<bool>>,
    pub j: Vec<Vec<bool>>,
}

pub fn naive_starred(s: &Semiring) -> NaiveStarred {
    let n = s.order();
    let rho: Vec<usize> = s
        .elements()
        .map(|a| multiple(s, a, naive_index(s, a)))
        .collect();
    let rel = |f: &dyn Fn(usize, usize) -> bool| -> Vec<Vec<bool>> {
        (0..n)
            .map(|a| (0..n).map(|b| f(rho[a], rho[b])).collect())
            .collect()
    };
    let l = rel(&|x, y| in_left(s, x, y) && in_left(s, y, x));
    let r = rel(&|x, y| in_right(s, x, y) && in_right(s, y, x));
    let j = rel(&|x, y| in_two_sided(s, x, y) && in_two_sided(s, y, x));
    let h = (0..n)
        .map(|a| (0..n).map(|b| l[a][b] && r[a][b]).collect())
        .collect();
    let d = (0..n)
        .map(|a| (0..n).map(|b| (0..n).any(|c| l[a][c] && r[c][b])).collect())
        .collect();
    NaiveStarred { l, r, h, d, j }
}

/// The first pair on which `matrix` and the partition disagree.
pub fn disagreement(matrix: &[Vec<bool>], p: &finsemi::Partition) -> Option<(usize, usize)> {
    let n = matrix.len();
    (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| matrix[a][b] != p.same(a, b))
}

/// All permutations of `0..n`, by insertion.
pub fn perms(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for k in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..=p.len()).map(move |pos| {
                    let mut q = p.clone();
                    q.insert(pos, k);
                    q
                })
            })
            .collect();
    }
    out
}

/// Labelled and up-to-isomorphism semiring counts on `n` points by plain
/// generate and filter.
pub fn oracle_census(n: usize) -> (usize, usize) {
    let cells = n * n;
    let all: Vec<Vec<usize>> = (0..n.pow(cells as u32))
        .map(|mut code| {
            (0..cells)
                .map(|_| {
                    let d = code % n;
                    code /= n;
                    d
                })
                .collect()
        })
        .collect();
    let at = |t: &[usize], a: usize, b: usize| t[a * n + b];
    let assoc: Vec<&Vec<usize>> = all
        .iter()
        .filter(|t| {
            (0..n).all(|a| {
                (0..n).all(|b| (0..n).all(|c| at(t, at(t, a, b), c) == at(t, a, at(t, b, c))))
            })
        })
        .collect();
    let mut labelled = Vec::new();
    for add in &assoc {
        for mul in &assoc {
            let ok = (0..n).all(|a| {
                (0..n).all(|b| {
                    (0..n).all(|c| {
                        at(mul, a, at(add, b, c)) == at(add, at(mul, a, b), at(mul, a, c))
                            && at(mul, at(add, b, c), a) == at(add, at(mul, b, a), at(mul, c, a))
                    })
                })
            });
            if ok {
                labelled.push((add.to_vec(), mul.to_vec()));
            }
        }
    }
    let ps = perms(n);
    let mut classes = std::collections::HashSet::new();
    for (add, mul) in &labelled {
        let key = ps
            .iter()
            .map(|p| {
                let mut img = vec![0; 2 * cells];
                for a in 0..n {
                    for b in 0..n {
                        img[p[a] * n + p[b]] = p[at(add, a, b)];
                        img[cells + p[a] * n + p[b]] = p[at(mul, a, b)];
                    }
                }
                img
            })
            .min()
            .unwrap();
        classes.insert(key);
    }
    (labelled.len(), classes.len())
}

/// Counts produced by `tests/oracle/census.py`.
pub const PYTHON_CENSUS: [(usize, usize, usize); 3] = [(1, 1, 1), (2, 36, 20), (3, 1747, 316)];
