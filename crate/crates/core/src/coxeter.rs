//! Finite Coxeter systems with exact group arithmetic.
//!
//! A system is realised through the action of its generators on the finite
//! root system. Root coordinates live in `Z[x]/(p)`, where `x = 2cos(pi/M)`,
//! `M` is the lcm of the Coxeter matrix entries and `p` is the minimal
//! polynomial of `x`, so every root is an exact integer vector. Group
//! elements are permutations of the root set: two elements are equal exactly
//! when their permutations agree, and the length of an element is the number
//! of positive roots it sends to negative roots.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("invalid finite Coxeter type: {0}")]
    InvalidType(String),
    #[error("generator s{letter} at position {position} is out of range for a rank {rank} system")]
    InvalidLetter {
        letter: usize,
        position: usize,
        rank: usize,
    },
    #[error("cannot parse word {input:?}: {reason}")]
    WordSyntax { input: String, reason: String },
}

/// Irreducible finite Coxeter families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    D,
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2,
}

/// A finite irreducible Coxeter type such as `A3`, `H4` or `I2(7)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoxeterType {
    family: Family,
    rank: usize,
    /// Only meaningful for the dihedral family.
    m: usize,
}

impl CoxeterType {
    pub fn new(family: Family, rank: usize) -> Result<Self, CoxeterError> {
        let fixed = match family {
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            Family::F4 => Some(4),
            Family::H3 => Some(3),
            Family::H4 => Some(4),
            Family::I2 => Some(2),
            _ => None,
        };
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::D => rank >= 4,
            _ => fixed == Some(rank),
        };
        if !ok || family == Family::I2 {
            return Err(CoxeterError::InvalidType(format!("{family:?}{rank}")));
        }
        Ok(CoxeterType { family, rank, m: 0 })
    }

    /// The dihedral type `I2(m)`, `m >= 3`.
    pub fn dihedral(m: usize) -> Result<Self, CoxeterError> {
        if m < 3 {
            return Err(CoxeterError::InvalidType(format!("I2({m})")));
        }
        Ok(CoxeterType {
            family: Family::I2,
            rank: 2,
            m,
        })
    }

    pub fn a(rank: usize) -> Self {
        Self::new(Family::A, rank).expect("A_n needs n >= 1")
    }

    pub fn b(rank: usize) -> Self {
        Self::new(Family::B, rank).expect("B_n needs n >= 2")
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Symmetric Coxeter matrix, Bourbaki numbering, 0-indexed.
    pub fn coxeter_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.rank;
        let mut m = vec![vec![2usize; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        let mut edge = |i: usize, j: usize, v: usize| {
            m[i][j] = v;
            m[j][i] = v;
        };
        match self.family {
            Family::A => (1..n).for_each(|i| edge(i - 1, i, 3)),
            Family::B => {
                (1..n - 1).for_each(|i| edge(i - 1, i, 3));
                edge(n - 2, n - 1, 4);
            }
            Family::D => {
                (1..n - 1).for_each(|i| edge(i - 1, i, 3));
                edge(n - 3, n - 1, 3);
            }
            Family::E6 | Family::E7 | Family::E8 => {
                // 1-3-4-5-6-..., with 2 attached to 4.
                edge(0, 2, 3);
                edge(1, 3, 3);
                (3..n).for_each(|i| edge(i - 1, i, 3));
            }
            Family::F4 => {
                edge(0, 1, 3);
                edge(1, 2, 4);
                edge(2, 3, 3);
            }
            Family::H3 | Family::H4 => {
                edge(0, 1, 5);
                (2..n).for_each(|i| edge(i - 1, i, 3));
            }
            Family::I2 => edge(0, 1, self.m),
        }
        m
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A{}", self.rank),
            Family::B => write!(f, "B{}", self.rank),
            Family::D => write!(f, "D{}", self.rank),
            Family::E6 => f.write_str("E6"),
            Family::E7 => f.write_str("E7"),
            Family::E8 => f.write_str("E8"),
            Family::F4 => f.write_str("F4"),
            Family::H3 => f.write_str("H3"),
            Family::H4 => f.write_str("H4"),
            Family::I2 => write!(f, "I2({})", self.m),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = CoxeterError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CoxeterError::InvalidType(s.to_string());
        let t = s.trim();
        if let Some(rest) = t.strip_prefix("I2(") {
            let m = rest
                .strip_suffix(')')
                .and_then(|m| m.parse().ok())
                .ok_or_else(bad)?;
            return CoxeterType::dihedral(m).map_err(|_| bad());
        }
        let mut chars = t.chars();
        let letter = chars.next().ok_or_else(bad)?;
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        let family = match (letter, rank) {
            ('A', _) => Family::A,
            ('B', _) => Family::B,
            ('D', _) => Family::D,
            ('E', 6) => Family::E6,
            ('E', 7) => Family::E7,
            ('E', 8) => Family::E8,
            ('F', 4) => Family::F4,
            ('H', 3) => Family::H3,
            ('H', 4) => Family::H4,
            _ => return Err(bad()),
        };
        CoxeterType::new(family, rank).map_err(|_| bad())
    }
}

impl Serialize for CoxeterType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CoxeterType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A word in the generators, stored 0-indexed.
///
/// Text and JSON forms are 1-indexed: `1,2,1` and `[1,2,1]` both denote
/// `s1 s2 s1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from 1-indexed generator numbers.
    pub fn from_one_indexed(letters: &[usize]) -> Result<Self, CoxeterError> {
        letters
            .iter()
            .enumerate()
            .map(|(pos, &l)| {
                l.checked_sub(1).ok_or_else(|| CoxeterError::WordSyntax {
                    input: format!("{letters:?}"),
                    reason: format!("generator 0 at position {}", pos + 1),
                })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn one_indexed(&self) -> Vec<usize> {
        self.0.iter().map(|l| l + 1).collect()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// The word with the letter at 0-based `index` removed.
    pub fn without(&self, index: usize) -> Word {
        let mut v = self.0.clone();
        v.remove(index);
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| (l + 1).to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Word {
    type Err = CoxeterError;

    /// Parses `1,2,1`, `s1 s2 s1` or `[1,2,1]`; the empty string is the empty word.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim().trim_start_matches('[').trim_end_matches(']');
        let mut letters = Vec::new();
        for (pos, tok) in trimmed
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .enumerate()
        {
            let digits = tok.strip_prefix('s').unwrap_or(tok);
            let n: usize = digits.parse().map_err(|_| CoxeterError::WordSyntax {
                input: s.to_string(),
                reason: format!("token {tok:?} at position {} is not a generator", pos + 1),
            })?;
            if n == 0 {
                return Err(CoxeterError::WordSyntax {
                    input: s.to_string(),
                    reason: format!("generators are numbered from 1 (position {})", pos + 1),
                });
            }
            letters.push(n - 1);
        }
        Ok(Word(letters))
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.one_indexed().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Word::from_one_indexed(&v).map_err(serde::de::Error::custom)
    }
}

/// A group element, as the permutation it induces on the root set.
///
/// Elements carry no reference to their system; mixing elements of
/// different systems is a logic error.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    perm: Vec<u16>,
}

impl GroupElement {
    fn apply(&self, root: usize) -> usize {
        self.perm[root] as usize
    }

    /// Product `self * other`, acting as `other` first.
    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            perm: other.perm.iter().map(|&r| self.perm[r as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        let mut perm = vec![0u16; self.perm.len()];
        for (i, &r) in self.perm.iter().enumerate() {
            perm[r as usize] = i as u16;
        }
        GroupElement { perm }
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement({:?})", self.perm)
    }
}

/// Exact arithmetic in `Z[x]/(p)` for a monic integer polynomial `p`.
#[derive(Debug, Clone)]
struct NumberRing {
    /// Coefficients of `p` below the leading term, lowest degree first.
    modulus: Vec<i64>,
    /// Numeric value of `x`, used only to read off signs of non-zero elements.
    x: f64,
}

type RingElem = Vec<i64>;

impl NumberRing {
    /// The ring generated by `2cos(pi/m)`.
    fn two_cos_pi_over(m: usize) -> Self {
        let psi = minimal_polynomial_two_cos(2 * m);
        let d = psi.len() - 1;
        NumberRing {
            modulus: psi[..d].to_vec(),
            x: 2.0 * (std::f64::consts::PI / m as f64).cos(),
        }
    }

    fn degree(&self) -> usize {
        self.modulus.len()
    }

    fn constant(&self, c: i64) -> RingElem {
        let mut v = vec![0; self.degree()];
        v[0] = c;
        v
    }

    fn reduce(&self, mut poly: Vec<i64>) -> RingElem {
        let d = self.degree();
        while poly.len() > d {
            let lead = poly.pop().unwrap();
            if lead != 0 {
                let shift = poly.len() - d;
                for (i, &c) in self.modulus.iter().enumerate() {
                    poly[shift + i] -= lead * c;
                }
            }
        }
        poly.resize(d, 0);
        poly
    }

    fn mul(&self, a: &[i64], b: &[i64]) -> RingElem {
        let mut prod = vec![0i64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        self.reduce(prod)
    }

    /// `2cos(k*theta)` as a polynomial in `x = 2cos(theta)`.
    fn chebyshev(&self, k: usize) -> RingElem {
        let x = {
            let mut v = vec![0i64; 2];
            v[1] = 1;
            self.reduce(v)
        };
        let mut prev = self.constant(2);
        let mut cur = x.clone();
        if k == 0 {
            return prev;
        }
        for _ in 1..k {
            let next: RingElem = self
                .mul(&x, &cur)
                .iter()
                .zip(&prev)
                .map(|(a, b)| a - b)
                .collect();
            prev = std::mem::replace(&mut cur, next);
        }
        cur
    }

    fn to_f64(&self, a: &[i64]) -> f64 {
        a.iter().rev().fold(0.0, |acc, &c| acc * self.x + c as f64)
    }
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dl = den.len();
    let lead = *den.last().unwrap();
    let mut q = vec![0i64; num.len() + 1 - dl];
    for i in (0..q.len()).rev() {
        let c = rem[i + dl - 1] / lead;
        q[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

fn cyclotomic(n: usize) -> Vec<i64> {
    // z^n - 1 divided by every cyclotomic factor of a proper divisor.
    let mut p = vec![0i64; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = poly_div_exact(&p, &cyclotomic(d));
        }
    }
    p
}

/// Minimal polynomial of `2cos(2pi/n)`, `n >= 3`, lowest degree first.
fn minimal_polynomial_two_cos(n: usize) -> Vec<i64> {
    // Phi_n is palindromic of degree 2k and z^-k Phi_n(z) = c_k + sum_j c_{k+j} D_j(z + 1/z).
    let phi = cyclotomic(n);
    let k = (phi.len() - 1) / 2;
    let mut d_prev = vec![2i64];
    let mut d_cur = vec![0i64, 1];
    let mut out = vec![0i64; k + 1];
    out[0] += phi[k];
    for j in 1..=k {
        for (i, &c) in d_cur.iter().enumerate() {
            out[i] += phi[k + j] * c;
        }
        let mut next = vec![0i64; d_cur.len() + 1];
        for (i, &c) in d_cur.iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, &c) in d_prev.iter().enumerate() {
            next[i] -= c;
        }
        d_prev = std::mem::replace(&mut d_cur, next);
    }
    out
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// A finite Coxeter system together with its action on roots.
#[derive(Debug, Clone)]
pub struct CoxeterSystem {
    ctype: CoxeterType,
    matrix: Vec<Vec<usize>>,
    positive_roots: usize,
    generators: Vec<GroupElement>,
    identity: GroupElement,
    longest: GroupElement,
}

impl CoxeterSystem {
    pub fn new(ctype: CoxeterType) -> Self {
        let matrix = ctype.coxeter_matrix();
        let n = ctype.rank();
        let big_m = matrix
            .iter()
            .flatten()
            .filter(|&&m| m >= 3)
            .fold(3, |acc, &m| lcm(acc, m));
        let ring = NumberRing::two_cos_pi_over(big_m);
        let zero = ring.constant(0);

        // bilinear[i][j] = 2B(a_i, a_j) = -2cos(pi/m_ij)
        let bilinear: Vec<Vec<RingElem>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match matrix[i][j] {
                        1 => ring.constant(2),
                        2 => zero.clone(),
                        m => ring.chebyshev(big_m / m).iter().map(|c| -c).collect(),
                    })
                    .collect()
            })
            .collect();

        let reflect = |i: usize, root: &[RingElem]| -> Vec<RingElem> {
            let mut pairing = zero.clone();
            for (j, coeff) in root.iter().enumerate() {
                for (p, q) in pairing.iter_mut().zip(ring.mul(&bilinear[i][j], coeff)) {
                    *p += q;
                }
            }
            let mut out = root.to_vec();
            for (o, p) in out[i].iter_mut().zip(&pairing) {
                *o -= p;
            }
            out
        };

        // Orbit closure of the simple roots.
        let simple: Vec<Vec<RingElem>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| ring.constant(if i == j { 1 } else { 0 }))
                    .collect()
            })
            .collect();
        let mut roots: Vec<Vec<RingElem>> = simple.clone();
        let mut seen: HashMap<Vec<RingElem>, usize> = simple
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, r)| (r, i))
            .collect();
        let mut head = 0;
        while head < roots.len() {
            for i in 0..n {
                let img = reflect(i, &roots[head]);
                if !seen.contains_key(&img) {
                    seen.insert(img.clone(), roots.len());
                    roots.push(img);
                }
            }
            head += 1;
            assert!(
                roots.len() <= 2 * 1024,
                "root system of {ctype} is not finite"
            );
        }

        let is_positive = |root: &[RingElem]| -> bool {
            let first = root
                .iter()
                .find(|c| c.iter().any(|&x| x != 0))
                .expect("roots are non-zero");
            ring.to_f64(first) > 0.0
        };
        let positives: Vec<Vec<RingElem>> =
            roots.iter().filter(|r| is_positive(r)).cloned().collect();
        let npos = positives.len();
        debug_assert_eq!(2 * npos, roots.len());
        let mut index: HashMap<Vec<RingElem>, usize> = HashMap::new();
        for (i, r) in positives.iter().enumerate() {
            index.insert(r.clone(), i);
            let neg: Vec<RingElem> = r.iter().map(|c| c.iter().map(|x| -x).collect()).collect();
            index.insert(neg, i + npos);
        }
        let all: Vec<Vec<RingElem>> = {
            let mut v = vec![Vec::new(); 2 * npos];
            for (r, &i) in &index {
                v[i] = r.clone();
            }
            v
        };

        let generators: Vec<GroupElement> = (0..n)
            .map(|i| GroupElement {
                perm: all.iter().map(|r| index[&reflect(i, r)] as u16).collect(),
            })
            .collect();
        let identity = GroupElement {
            perm: (0..2 * npos as u16).collect(),
        };

        let mut sys = CoxeterSystem {
            ctype,
            matrix,
            positive_roots: npos,
            generators,
            identity: identity.clone(),
            longest: identity,
        };
        let mut w = sys.identity.clone();
        while let Some(s) = (0..n).find(|&s| !sys.is_right_descent(&w, s)) {
            w = w.mul(&sys.generators[s]);
        }
        sys.longest = w;
        sys
    }

    /// Parses a type string such as `A3` or `I2(5)` and builds the system.
    pub fn from_type_str(s: &str) -> Result<Self, CoxeterError> {
        Ok(Self::new(s.parse()?))
    }

    pub fn coxeter_type(&self) -> CoxeterType {
        self.ctype
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn coxeter_matrix(&self) -> &[Vec<usize>] {
        &self.matrix
    }

    pub fn positive_root_count(&self) -> usize {
        self.positive_roots
    }

    pub fn identity(&self) -> GroupElement {
        self.identity.clone()
    }

    pub fn generator(&self, s: usize) -> &GroupElement {
        &self.generators[s]
    }

    pub fn check_word(&self, w: &Word) -> Result<(), CoxeterError> {
        match w.letters().iter().position(|&l| l >= self.rank()) {
            Some(pos) => Err(CoxeterError::InvalidLetter {
                letter: w.letters()[pos] + 1,
                position: pos + 1,
                rank: self.rank(),
            }),
            None => Ok(()),
        }
    }

    /// The product `q_1 q_2 ... q_r`; the empty word gives the identity.
    pub fn evaluate(&self, w: &Word) -> GroupElement {
        w.letters()
            .iter()
            .fold(self.identity(), |acc, &s| acc.mul(&self.generators[s]))
    }

    pub fn length(&self, g: &GroupElement) -> usize {
        (0..self.positive_roots)
            .filter(|&r| g.apply(r) >= self.positive_roots)
            .count()
    }

    pub fn is_reduced(&self, w: &Word) -> bool {
        self.length(&self.evaluate(w)) == w.len()
    }

    /// `l(gs) < l(g)`.
    pub fn is_right_descent(&self, g: &GroupElement, s: usize) -> bool {
        g.apply(s) >= self.positive_roots
    }

    /// `l(sg) < l(g)`.
    pub fn is_left_descent(&self, g: &GroupElement, s: usize) -> bool {
        let pre = g.perm.iter().position(|&r| r as usize == s).unwrap();
        pre >= self.positive_roots
    }

    pub fn longest_element(&self) -> GroupElement {
        self.longest.clone()
    }

    /// The generator `w0^-1 s w0`.
    pub fn psi(&self, s: usize) -> usize {
        let w0 = &self.longest;
        let conj = w0.inverse().mul(&self.generators[s]).mul(w0);
        self.generators
            .iter()
            .position(|g| *g == conj)
            .expect("conjugation by w0 permutes the simple reflections")
    }

    /// The lexicographically smallest reduced word of `g`.
    pub fn reduced_word(&self, g: &GroupElement) -> Word {
        let mut letters = Vec::new();
        let mut cur = g.clone();
        while let Some(s) = (0..self.rank()).find(|&s| self.is_left_descent(&cur, s)) {
            letters.push(s);
            cur = self.generators[s].mul(&cur);
        }
        Word(letters)
    }

    /// Bruhat order, decided by descending along left descents of `v`.
    pub fn bruhat_leq(&self, u: &GroupElement, v: &GroupElement) -> bool {
        let mut u = u.clone();
        let mut v = v.clone();
        loop {
            let lu = self.length(&u);
            let lv = self.length(&v);
            if lu > lv {
                return false;
            }
            if lu == 0 {
                return true;
            }
            if lu == lv {
                return u == v;
            }
            let s = (0..self.rank())
                .find(|&s| self.is_left_descent(&v, s))
                .expect("non-identity element has a descent");
            if self.is_left_descent(&u, s) {
                u = self.generators[s].mul(&u);
            }
            v = self.generators[s].mul(&v);
        }
    }

    /// Demazure product: multiply by each letter that increases length, skip the others.
    pub fn demazure_product(&self, w: &Word) -> GroupElement {
        self.demazure_extend(&self.identity(), w.letters())
    }

    pub(crate) fn demazure_extend(&self, start: &GroupElement, letters: &[usize]) -> GroupElement {
        letters.iter().fold(start.clone(), |mu, &s| {
            if self.is_right_descent(&mu, s) {
                mu
            } else {
                mu.mul(&self.generators[s])
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn parse_types() {
        for s in [
            "A1", "A3", "B4", "D5", "E6", "E7", "E8", "F4", "H3", "H4", "I2(7)",
        ] {
            let t: CoxeterType = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
        for s in [
            "A0", "B1", "D3", "E5", "E9", "F3", "H5", "I2(2)", "I2(x)", "Z3", "",
        ] {
            assert!(s.parse::<CoxeterType>().is_err(), "{s}");
        }
    }

    #[test]
    fn minimal_polynomials() {
        // 2cos(pi/3) = 1, 2cos(pi/4) = sqrt 2, 2cos(pi/5) = golden ratio
        assert_eq!(minimal_polynomial_two_cos(6), vec![-1, 1]);
        assert_eq!(minimal_polynomial_two_cos(8), vec![-2, 0, 1]);
        assert_eq!(minimal_polynomial_two_cos(10), vec![-1, -1, 1]);
    }

    #[test]
    fn root_counts() {
        let cases = [
            ("A1", 1),
            ("A3", 6),
            ("B3", 9),
            ("D4", 12),
            ("E6", 36),
            ("E8", 120),
            ("F4", 24),
            ("H3", 15),
            ("H4", 60),
            ("I2(5)", 5),
            ("I2(8)", 8),
        ];
        for (t, n) in cases {
            let sys = CoxeterSystem::from_type_str(t).unwrap();
            assert_eq!(sys.positive_root_count(), n, "{t}");
            assert_eq!(sys.length(&sys.longest_element()), n, "{t}");
        }
    }

    #[test]
    fn basic_relations() {
        let sys = CoxeterSystem::new(CoxeterType::a(3));
        assert_eq!(sys.evaluate(&w("1,2,1")), sys.evaluate(&w("2,1,2")));
        assert_eq!(sys.evaluate(&w("")), sys.identity());
        assert_eq!(sys.evaluate(&w("1,1")), sys.identity());
        assert!(sys.is_reduced(&w("1,2,1")));
        assert!(!sys.is_reduced(&w("1,1")));
        assert_eq!(sys.length(&sys.identity()), 0);
        assert_eq!(sys.length(sys.generator(1)), 1);
    }

    #[test]
    fn word_text_forms() {
        assert_eq!(w("[1,2,1]"), w("s1 s2 s1"));
        assert_eq!(w("1,2,1").to_string(), "1,2,1");
        assert!("0,1".parse::<Word>().is_err());
        let sys = CoxeterSystem::new(CoxeterType::a(2));
        assert!(sys.check_word(&w("1,3")).is_err());
    }

    #[test]
    fn demazure_small_cases() {
        let sys = CoxeterSystem::new(CoxeterType::a(3));
        assert_eq!(
            sys.demazure_product(&w("1,2,1,2,1")),
            sys.evaluate(&w("1,2,1"))
        );
        assert_eq!(sys.demazure_product(&w("")), sys.identity());
        assert_eq!(sys.demazure_product(&w("1,1")), sys.evaluate(&w("1")));
    }

    #[test]
    fn psi_values() {
        let a3 = CoxeterSystem::new(CoxeterType::a(3));
        assert_eq!(a3.psi(0), 2);
        assert_eq!(a3.psi(1), 1);
        let b2 = CoxeterSystem::new(CoxeterType::b(2));
        assert_eq!((b2.psi(0), b2.psi(1)), (0, 1));
    }

    #[test]
    fn bruhat_small_cases() {
        let sys = CoxeterSystem::new(CoxeterType::a(2));
        let e = sys.identity();
        let s1 = sys.evaluate(&w("1"));
        let s12 = sys.evaluate(&w("1,2"));
        let s21 = sys.evaluate(&w("2,1"));
        assert!(sys.bruhat_leq(&e, &s21));
        assert!(sys.bruhat_leq(&s12, &s12));
        assert!(sys.bruhat_leq(&s1, &s12));
        assert!(!sys.bruhat_leq(&s12, &s21));
    }

    #[test]
    fn reduced_word_is_lex_first() {
        let sys = CoxeterSystem::new(CoxeterType::a(3));
        assert_eq!(sys.reduced_word(&sys.evaluate(&w("2,1,2"))), w("1,2,1"));
        assert_eq!(sys.reduced_word(&sys.longest_element()).len(), 6);
    }
}
