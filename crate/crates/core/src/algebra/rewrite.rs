//! Normal forms of generator words by exhaustive rewriting.
//!
//! Rules, applied to adjacent pairs:
//!
//! ```text
//! y X    -> X y + t X - k s X
//! y X^-1 -> X^-1 y - t X^-1 + k X^-1 s
//! X s    -> s X^-1
//! X^-1 s -> s X
//! y s    -> -k - s y
//! s s    -> 1
//! X X^-1 -> 1,  X^-1 X -> 1
//! ```
//!
//! A word with no redex has the shape `s^i X^j y^l`.

use std::collections::BTreeMap;
use std::fmt;

use super::{AlgebraElement, AlgebraParams, Monomial};
use crate::field::Fq;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    X,
    XInv,
    S,
    Y,
}

impl Gen {
    pub const ALL: [Gen; 4] = [Gen::X, Gen::XInv, Gen::S, Gen::Y];
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Gen::X => "X",
            Gen::XInv => "Xinv",
            Gen::S => "s",
            Gen::Y => "y",
        };
        write!(f, "{s}")
    }
}

/// A scalar multiple of a product of generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorWord {
    pub scalar: Fq,
    pub tokens: Vec<Gen>,
}

impl GeneratorWord {
    pub fn new(tokens: Vec<Gen>) -> Self {
        GeneratorWord { scalar: Fq::ONE, tokens }
    }
}

/// Which redex to rewrite first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

type Expansion = Vec<(Fq, Vec<Gen>)>;

fn rewrite_pair(params: &AlgebraParams, a: Gen, b: Gen) -> Option<Expansion> {
    use Gen::*;
    let f = params.field();
    let (t, k) = (params.t(), params.k());
    let one = Fq::ONE;
    let exp = match (a, b) {
        (Y, X) => vec![(one, vec![X, Y]), (t, vec![X]), (f.neg(k), vec![S, X])],
        (Y, XInv) => vec![(one, vec![XInv, Y]), (f.neg(t), vec![XInv]), (k, vec![XInv, S])],
        (X, S) => vec![(one, vec![S, XInv])],
        (XInv, S) => vec![(one, vec![S, X])],
        (Y, S) => vec![(f.neg(k), vec![]), (f.neg(one), vec![S, Y])],
        (S, S) | (X, XInv) | (XInv, X) => vec![(one, vec![])],
        _ => return None,
    };
    Some(exp)
}

fn find_redex(params: &AlgebraParams, word: &[Gen], strategy: Strategy) -> Option<(usize, Expansion)> {
    let n = word.len();
    let mut positions: Box<dyn Iterator<Item = usize>> = match strategy {
        Strategy::Leftmost => Box::new(0..n.saturating_sub(1)),
        Strategy::Rightmost => Box::new((0..n.saturating_sub(1)).rev()),
    };
    positions.find_map(|pos| rewrite_pair(params, word[pos], word[pos + 1]).map(|e| (pos, e)))
}

fn irreducible_monomial(word: &[Gen]) -> Monomial {
    let mut m = Monomial::ONE;
    for g in word {
        match g {
            Gen::S => m.i = 1,
            Gen::X => m.j += 1,
            Gen::XInv => m.j -= 1,
            Gen::Y => m.l += 1,
        }
    }
    m
}

/// Normal form of `word` using the leftmost rewriting order.
pub fn normalize(word: &GeneratorWord, params: &AlgebraParams) -> AlgebraElement {
    normalize_with(word, params, Strategy::Leftmost)
}

pub fn normalize_with(word: &GeneratorWord, params: &AlgebraParams, strategy: Strategy) -> AlgebraElement {
    let f = params.field().clone();
    // words awaiting rewriting, merged by identical token sequences
    let mut pending: BTreeMap<Vec<Gen>, Fq> = BTreeMap::new();
    pending.insert(word.tokens.clone(), word.scalar);
    let mut out = AlgebraElement::zero(params);
    while let Some((w, c)) = pending.pop_first() {
        if c.is_zero() {
            continue;
        }
        match find_redex(params, &w, strategy) {
            None => out.add_term(irreducible_monomial(&w), c),
            Some((pos, expansion)) => {
                for (d, middle) in expansion {
                    let mut next = Vec::with_capacity(w.len() + 1);
                    next.extend_from_slice(&w[..pos]);
                    next.extend(middle);
                    next.extend_from_slice(&w[pos + 2..]);
                    let slot = pending.entry(next).or_insert(Fq::ZERO);
                    *slot = f.add(*slot, f.mul(c, d));
                }
            }
        }
    }
    out
}
