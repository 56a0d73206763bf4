//! Root systems of the simple types.
//!
//! Simple roots are numbered as in Bourbaki, except for G2 where `α1` is the
//! short simple root and `α2` the long one. The Cartan matrix is stored with
//! `C[i][j] = <α_j, α_i^∨>`, so for G2 the entry `C[0][1]` is `-3`.
//!
//! Roots are integer coordinate vectors in the basis of simple roots.
//! Positive roots are sorted by height, and roots of equal height by
//! decreasing coordinate vector, which lists `α1, α2, ...` in index order.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// A simple type such as `A3`, `B2` or `E8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every simple type of rank at most `max_rank`, in the order
    /// A1..An, B2.., C3.., D4.., E6.., F4, G2.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<SimpleType> {
        use Family::*;
        let mut out = Vec::new();
        for family in [A, B, C, D, E, F, G] {
            for rank in 1..=max_rank {
                if let Ok(t) = SimpleType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// Parses the labels `A1..A8`, `B2..B8`, `C3..C8`, `D4..D8`, `E6..E8`, `F4`, `G2`.
impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidTypeLabel(s.to_string());
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars.next().and_then(Family::from_letter).ok_or_else(bad)?;
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        if rank > 8 {
            return Err(bad());
        }
        SimpleType::new(family, rank).map_err(|_| bad())
    }
}

impl Serialize for SimpleType {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A root, as coordinates in the simple-root basis. Serialized in its text
/// form `"[3,2]"`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn new(coords: Vec<i32>) -> Self {
        Root(coords)
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        Root(c)
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scaled(&self, k: i32) -> Root {
        Root(self.0.iter().map(|a| a * k).collect())
    }
}

impl std::ops::Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|a| -a).collect())
    }
}

impl std::ops::Neg for Root {
    type Output = Root;
    fn neg(self) -> Root {
        -&self
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Parses `"[3,2]"`; brackets and whitespace are optional.
impl FromStr for Root {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let coords: std::result::Result<Vec<i32>, _> =
            inner.split(',').map(|p| p.trim().parse::<i32>()).collect();
        match coords {
            Ok(c) if !c.is_empty() => Ok(Root(c)),
            _ => Err(Error::InvalidRootLabel(s.to_string())),
        }
    }
}

impl Serialize for Root {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Root {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    simple_type: SimpleType,
    cartan: Vec<Vec<i32>>,
    // (α_i, α_i) / 2, scaled so the smallest is 1
    symmetrizer: Vec<i64>,
    positive: Vec<Root>,
    // positive roots followed by their negatives, in the same order
    roots: Vec<Root>,
    long: Vec<bool>,
    index: HashMap<Root, usize>,
}

fn cartan_matrix(t: SimpleType) -> Vec<Vec<i32>> {
    let r = t.rank();
    let mut c = vec![vec![0i32; r]; r];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match t.family() {
        Family::A => (0..r - 1).for_each(|i| link(i, i + 1)),
        Family::B | Family::C => (0..r - 1).for_each(|i| link(i, i + 1)),
        Family::D => {
            (0..r - 2).for_each(|i| link(i, i + 1));
            link(r - 3, r - 1);
        }
        Family::E => {
            for (i, j) in [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)] {
                if j < r {
                    link(i, j);
                }
            }
        }
        Family::F => (0..3).for_each(|i| link(i, i + 1)),
        Family::G => link(0, 1),
    }
    match t.family() {
        // α_r short
        Family::B => c[r - 1][r - 2] = -2,
        // α_r long
        Family::C => c[r - 2][r - 1] = -2,
        // α1, α2 long; α3, α4 short
        Family::F => c[2][1] = -2,
        // α1 short, α2 long
        Family::G => c[0][1] = -3,
        _ => {}
    }
    c
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Solves `d_i C[i][j] = d_j C[j][i]` on the connected Dynkin diagram.
fn symmetrizer(cartan: &[Vec<i32>]) -> Vec<i64> {
    let r = cartan.len();
    let mut d = vec![0i64; r];
    d[0] = 6;
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for j in 0..r {
            if d[j] == 0 && cartan[i][j] != 0 {
                d[j] = d[i] * cartan[i][j] as i64 / cartan[j][i] as i64;
                stack.push(j);
            }
        }
    }
    let g = d.iter().fold(0, |acc, &x| gcd(acc, x));
    d.iter().map(|x| x / g).collect()
}

impl RootSystem {
    /// Generates the positive roots from the simple roots: for a positive
    /// root β and simple α_i ≠ β, β + α_i is a root iff `p - <β, α_i^∨> > 0`,
    /// where p is the length of the downward α_i-string from β.
    pub fn new(t: SimpleType) -> Self {
        let r = t.rank();
        let cartan = cartan_matrix(t);
        let symmetrizer = symmetrizer(&cartan);

        let mut known: HashSet<Root> = HashSet::new();
        let mut layer: Vec<Root> = (0..r).map(|i| Root::simple(r, i)).collect();
        let mut positive = Vec::new();
        while !layer.is_empty() {
            known.extend(layer.iter().cloned());
            let mut next: Vec<Root> = Vec::new();
            for beta in &layer {
                for (i, row) in cartan.iter().enumerate() {
                    let alpha = Root::simple(r, i);
                    if *beta == alpha {
                        continue;
                    }
                    let mut p = 0;
                    while known.contains(&beta.sub(&alpha.scaled(p + 1))) {
                        p += 1;
                    }
                    let pair: i32 = beta.0.iter().zip(row).map(|(b, c)| b * c).sum();
                    if p - pair > 0 {
                        let up = beta.add(&alpha);
                        if !next.contains(&up) {
                            next.push(up);
                        }
                    }
                }
            }
            positive.append(&mut layer);
            layer = next;
        }
        positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.cmp(a)));

        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|a| -a));
        let index = roots
            .iter()
            .enumerate()
            .map(|(i, a)| (a.clone(), i))
            .collect();
        let mut rs = RootSystem {
            simple_type: t,
            cartan,
            symmetrizer,
            positive,
            roots,
            long: Vec::new(),
            index,
        };
        let norms: Vec<i64> = rs.roots.iter().map(|a| rs.form(a, a)).collect();
        let max = norms.iter().copied().max().unwrap_or(0);
        rs.long = norms.iter().map(|&n| n == max).collect();
        rs
    }

    pub fn simple_type(&self) -> SimpleType {
        self.simple_type
    }

    pub fn rank(&self) -> usize {
        self.simple_type.rank()
    }

    /// `cartan()[i][j] = <α_j, α_i^∨>`.
    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// All roots: the positive roots, then their negatives in the same order.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        (0..self.rank()).map(|i| self.simple_root(i)).collect()
    }

    /// Index of the simple root equal to `root`, if any.
    pub fn simple_index(&self, root: &Root) -> Option<usize> {
        if root.rank() == self.rank() && root.height() == 1 && root.is_positive() {
            root.0.iter().position(|&c| c == 1)
        } else {
            None
        }
    }

    pub fn is_root(&self, root: &Root) -> bool {
        self.index.contains_key(root)
    }

    pub fn index_of(&self, root: &Root) -> Option<usize> {
        self.index.get(root).copied()
    }

    pub(crate) fn require(&self, root: &Root) -> Result<usize> {
        self.index_of(root)
            .ok_or_else(|| Error::NotARoot(root.to_string()))
    }

    pub fn is_long(&self, root: &Root) -> Result<bool> {
        Ok(self.long[self.require(root)?])
    }

    /// W-invariant form with `(α_i, α_i) = 2 d_i`; short roots have norm 2
    /// in every type.
    pub(crate) fn form(&self, a: &Root, b: &Root) -> i64 {
        let r = self.rank();
        let mut s = 0i64;
        for i in 0..r {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..r {
                s += (a.0[i] * b.0[j]) as i64 * self.symmetrizer[i] * self.cartan[i][j] as i64;
            }
        }
        s
    }

    pub(crate) fn norm(&self, a: &Root) -> i64 {
        self.form(a, a)
    }

    /// Coefficients of the coroot `α^∨` in the basis of simple coroots.
    pub fn coroot_coeffs(&self, alpha: &Root) -> Result<Vec<i64>> {
        self.require(alpha)?;
        let n = self.norm(alpha);
        Ok((0..self.rank())
            .map(|i| {
                let num = alpha.0[i] as i64 * 2 * self.symmetrizer[i];
                debug_assert_eq!(num % n, 0);
                num / n
            })
            .collect())
    }

    /// `<β, α_i^∨>`, linear in β; the value of β on the simple coroot `h_i`.
    pub fn simple_coroot_pairing(&self, beta: &Root, i: usize) -> i32 {
        (0..self.rank())
            .map(|j| beta.0[j] * self.cartan[i][j])
            .sum()
    }

    /// Maximal `(p, q)` with `β - pα, ..., β + qα` all roots.
    pub fn root_string(&self, beta: &Root, alpha: &Root) -> Result<(usize, usize)> {
        self.require(beta)?;
        self.require(alpha)?;
        if beta == alpha || *beta == -alpha {
            return Err(Error::ParallelRoots {
                beta: beta.to_string(),
                alpha: alpha.to_string(),
            });
        }
        let mut p = 0;
        while self.is_root(&beta.sub(&alpha.scaled(p as i32 + 1))) {
            p += 1;
        }
        let mut q = 0;
        while self.is_root(&beta.add(&alpha.scaled(q as i32 + 1))) {
            q += 1;
        }
        Ok((p, q))
    }

    /// `<β, α^∨>`, computed as `p - q` from the α-string through β.
    pub fn pairing(&self, beta: &Root, alpha: &Root) -> Result<i32> {
        self.require(beta)?;
        self.require(alpha)?;
        if beta == alpha {
            return Ok(2);
        }
        if *beta == -alpha {
            return Ok(-2);
        }
        let (p, q) = self.root_string(beta, alpha)?;
        Ok(p as i32 - q as i32)
    }

    pub fn highest_root(&self) -> Root {
        self.positive
            .last()
            .cloned()
            .expect("root systems are nonempty")
    }
}

pub fn build_root_system(t: SimpleType) -> RootSystem {
    RootSystem::new(t)
}
