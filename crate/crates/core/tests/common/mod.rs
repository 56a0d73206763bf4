//! Simple roots as explicit vectors in Euclidean space, used as an oracle
//! independent of the Cartan-matrix machinery.

#![allow(dead_code)]

use chevalley::{Family, Root, SimpleType};
use num_rational::Rational64;
use num_traits::Zero;

pub type Vector = Vec<Rational64>;

fn unit(n: usize, i: usize) -> Vector {
    let mut v = vec![Rational64::zero(); n];
    v[i] = Rational64::from_integer(1);
    v
}

fn combo(n: usize, terms: &[(usize, i64)], denom: i64) -> Vector {
    let mut v = vec![Rational64::zero(); n];
    for &(i, c) in terms {
        v[i] += Rational64::new(c, denom);
    }
    v
}

fn diff(n: usize, i: usize, j: usize) -> Vector {
    combo(n, &[(i, 1), (j, -1)], 1)
}

/// Bourbaki simple roots; for G2 the first simple root is short.
pub fn simple_roots(t: SimpleType) -> Vec<Vector> {
    let r = t.rank();
    match t.family() {
        Family::A => (0..r).map(|i| diff(r + 1, i, i + 1)).collect(),
        Family::B | Family::C | Family::D => {
            let mut v: Vec<Vector> = (0..r - 1).map(|i| diff(r, i, i + 1)).collect();
            v.push(match t.family() {
                Family::B => unit(r, r - 1),
                Family::C => combo(r, &[(r - 1, 2)], 1),
                _ => combo(r, &[(r - 2, 1), (r - 1, 1)], 1),
            });
            v
        }
        Family::E => {
            let mut v = vec![
                combo(
                    8,
                    &[
                        (0, 1),
                        (7, 1),
                        (1, -1),
                        (2, -1),
                        (3, -1),
                        (4, -1),
                        (5, -1),
                        (6, -1),
                    ],
                    2,
                ),
                combo(8, &[(0, 1), (1, 1)], 1),
            ];
            v.extend((0..6).map(|i| diff(8, i + 1, i)));
            v.truncate(r);
            v
        }
        Family::F => vec![
            diff(4, 1, 2),
            diff(4, 2, 3),
            unit(4, 3),
            combo(4, &[(0, 1), (1, -1), (2, -1), (3, -1)], 2),
        ],
        Family::G => vec![diff(3, 0, 1), combo(3, &[(0, -2), (1, 1), (2, 1)], 1)],
    }
}

pub fn dot(a: &[Rational64], b: &[Rational64]) -> Rational64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn embed(simple: &[Vector], root: &Root) -> Vector {
    let n = simple[0].len();
    let mut v = vec![Rational64::zero(); n];
    for (s, &c) in simple.iter().zip(root.coords()) {
        for (x, y) in v.iter_mut().zip(s) {
            *x += y * Rational64::from_integer(c as i64);
        }
    }
    v
}

/// `2(β, α) / (α, α)`.
pub fn coroot_pairing(simple: &[Vector], beta: &Root, alpha: &Root) -> Rational64 {
    let a = embed(simple, alpha);
    let b = embed(simple, beta);
    Rational64::from_integer(2) * dot(&b, &a) / dot(&a, &a)
}
