//! Brute-force oracles shared by the integration tests. None of them use the
//! root permutation machinery of the library.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::f64::consts::PI;

use subword_complex::simplicial::{Face, SimplicialComplex};

/// A finite Coxeter group in its geometric representation, with every
/// element listed by breadth-first search from the identity.
pub struct CayleyOracle {
    rank: usize,
    generators: Vec<Vec<f64>>,
    /// Rounded matrix -> a shortest word, found by the search.
    words: HashMap<Vec<i64>, Vec<usize>>,
}

pub type Key = Vec<i64>;

fn mat_mul(a: &[f64], b: &[f64], n: usize) -> Vec<f64> {
    let mut out = vec![0.0; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x != 0.0 {
                for j in 0..n {
                    out[i * n + j] += x * b[k * n + j];
                }
            }
        }
    }
    out
}

fn key(m: &[f64]) -> Key {
    m.iter().map(|x| (x * 1e6).round() as i64).collect()
}

impl CayleyOracle {
    pub fn new(coxeter_matrix: &[Vec<usize>]) -> Self {
        let n = coxeter_matrix.len();
        let bilinear = |i: usize, j: usize| -(PI / coxeter_matrix[i][j] as f64).cos();
        // s_i(a_j) = a_j - 2 B(a_i, a_j) a_i, stored column by column.
        let generators: Vec<Vec<f64>> = (0..n)
            .map(|i| {
                let mut m = vec![0.0; n * n];
                for j in 0..n {
                    m[j * n + j] += 1.0;
                    m[i * n + j] -= 2.0 * bilinear(i, j);
                }
                m
            })
            .collect();
        let mut identity = vec![0.0; n * n];
        for i in 0..n {
            identity[i * n + i] = 1.0;
        }
        let mut words = HashMap::new();
        words.insert(key(&identity), Vec::new());
        let mut queue = VecDeque::from([(identity, Vec::new())]);
        while let Some((m, w)) = queue.pop_front() {
            for (s, g) in generators.iter().enumerate() {
                let next = mat_mul(&m, g, n);
                let k = key(&next);
                if let std::collections::hash_map::Entry::Vacant(e) = words.entry(k) {
                    let mut longer: Vec<usize> = w.clone();
                    longer.push(s);
                    e.insert(longer.clone());
                    queue.push_back((next, longer));
                }
            }
            assert!(words.len() < 100_000, "group is too large for the oracle");
        }
        CayleyOracle {
            rank: n,
            generators,
            words,
        }
    }

    pub fn order(&self) -> usize {
        self.words.len()
    }

    pub fn max_length(&self) -> usize {
        self.words.values().map(Vec::len).max().unwrap()
    }

    /// The product of the 0-indexed letters, left to right.
    pub fn product(&self, letters: &[usize]) -> Key {
        let n = self.rank;
        let mut m = vec![0.0; n * n];
        for i in 0..n {
            m[i * n + i] = 1.0;
        }
        for &s in letters {
            m = mat_mul(&m, &self.generators[s], n);
        }
        key(&m)
    }

    pub fn length(&self, k: &Key) -> usize {
        self.words[k].len()
    }

    pub fn word_length(&self, letters: &[usize]) -> usize {
        self.length(&self.product(letters))
    }

    /// Products of all subwords.
    pub fn subword_products(&self, letters: &[usize]) -> BTreeSet<Key> {
        (0u32..1 << letters.len())
            .map(|mask| {
                let sub: Vec<usize> = (0..letters.len())
                    .filter(|&k| mask >> k & 1 == 1)
                    .map(|k| letters[k])
                    .collect();
                self.product(&sub)
            })
            .collect()
    }

    /// `u <= v` by the subword property against a shortest word for `v`.
    pub fn bruhat_leq(&self, u: &[usize], v: &[usize]) -> bool {
        let reduced = self.shortest_word(&self.product(v));
        self.subword_products(&reduced).contains(&self.product(u))
    }

    pub fn shortest_word(&self, k: &Key) -> Vec<usize> {
        self.words[k].clone()
    }

    /// The Bruhat-maximal subword product: the unique longest one.
    pub fn demazure(&self, letters: &[usize]) -> Key {
        let products = self.subword_products(letters);
        let best = products.iter().map(|p| self.length(p)).max().unwrap();
        let top: Vec<&Key> = products.iter().filter(|p| self.length(p) == best).collect();
        assert_eq!(
            top.len(),
            1,
            "subword products have a unique longest element"
        );
        top[0].clone()
    }

    /// Facets of SC(Q, π) by testing every subset of positions: complements
    /// of the subsets of size `l(π)` whose product is `π`. Positions are
    /// labelled from 1.
    pub fn subword_facets(&self, letters: &[usize], pi: &[usize]) -> Vec<Face> {
        let target = self.product(pi);
        let l = self.length(&target);
        let r = letters.len();
        let mut out: Vec<Face> = (0u32..1 << r)
            .filter(|mask| mask.count_ones() as usize == l)
            .filter(|mask| {
                let sub: Vec<usize> = (0..r)
                    .filter(|&k| mask >> k & 1 == 1)
                    .map(|k| letters[k])
                    .collect();
                self.product(&sub) == target
            })
            .map(|mask| {
                (0..r as u32)
                    .filter(|&k| mask >> k & 1 == 0)
                    .map(|k| k + 1)
                    .collect()
            })
            .collect();
        out.sort();
        out
    }
}

/// Type A elements as permutations of `0..=rank`, with `s_i` swapping `i`
/// and `i + 1`.
pub fn permutation(rank: usize, letters: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..=rank).collect();
    for &s in letters {
        p.swap(s, s + 1);
    }
    p
}

pub fn inversions(p: &[usize]) -> usize {
    (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count()
}

/// Bruhat order on permutations by the rank matrix criterion.
pub fn permutation_bruhat_leq(u: &[usize], v: &[usize]) -> bool {
    let n = u.len();
    let rank = |w: &[usize], i: usize, j: usize| (0..=i).filter(|&a| w[a] >= j).count();
    (0..n).all(|i| (0..n).all(|j| rank(u, i, j) <= rank(v, i, j)))
}

/// Every face of a complex, generated from the facets.
pub fn all_faces(c: &SimplicialComplex) -> BTreeSet<Face> {
    c.facets().iter().flat_map(|f| f.subsets()).collect()
}

/// Random complexes on vertices `0..n` from lists of vertex bitmasks.
pub fn complex_from_masks(masks: &[u64]) -> SimplicialComplex {
    SimplicialComplex::from_facets(masks.iter().map(|&m| Face::from_bits(m)))
}
