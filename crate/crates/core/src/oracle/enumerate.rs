//! Isomorphism classes of bounded posets with an antitone involution.
//!
//! Every class has a representative whose involution fixes the first `f`
//! middle elements and pairs the rest consecutively, so only those standard
//! involutions are tried. Order relations between middle elements are then
//! chosen pair by pair, each choice also fixing its mirror image under the
//! involution, and transitivity is checked as soon as a triple is decided.

use std::collections::BTreeMap;

use thiserror::Error;

use super::canon::{canonical_form, relabel, Code};
use crate::poset::InvolutivePoset;

pub const MAX_ENUMERATION_SIZE: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("enumeration size {n} outside 2..={max}")]
    OutOfRange { n: usize, max: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Rel {
    Unknown,
    Less,
    NotLess,
}

struct Builder {
    k: usize,
    prime: Vec<usize>,
    /// `rel[i][j]`: whether middle element `i` is strictly below `j`.
    rel: Vec<Vec<Rel>>,
}

impl Builder {
    fn set(&mut self, i: usize, j: usize, r: Rel, trail: &mut Vec<(usize, usize)>) -> bool {
        match self.rel[i][j] {
            Rel::Unknown => {
                self.rel[i][j] = r;
                trail.push((i, j));
                true
            }
            existing => existing == r,
        }
    }

    /// `i < j` forces `j' < i'`; `i ≮ j` forces `j' ≮ i'`.
    fn assign(&mut self, i: usize, j: usize, r: Rel, trail: &mut Vec<(usize, usize)>) -> bool {
        let (pi, pj) = (self.prime[i], self.prime[j]);
        self.set(i, j, r, trail) && self.set(pj, pi, r, trail)
    }

    fn undo(&mut self, trail: &[(usize, usize)]) {
        for &(i, j) in trail {
            self.rel[i][j] = Rel::Unknown;
        }
    }

    fn transitive_so_far(&self) -> bool {
        let k = self.k;
        for a in 0..k {
            for b in 0..k {
                if self.rel[a][b] != Rel::Less {
                    continue;
                }
                for c in 0..k {
                    if self.rel[b][c] == Rel::Less && a == c {
                        return false;
                    }
                    if self.rel[b][c] == Rel::Less && self.rel[a][c] == Rel::NotLess {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn leaf(&self) -> InvolutivePoset {
        let k = self.k;
        let n = k + 2;
        let top = n - 1;
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x] = true;
            leq[x * n + top] = true;
            leq[x * n + x] = true;
        }
        for i in 0..k {
            for j in 0..k {
                if self.rel[i][j] == Rel::Less {
                    leq[(i + 1) * n + j + 1] = true;
                }
            }
        }
        let mut prime = vec![top; n];
        prime[top] = 0;
        for i in 0..k {
            prime[i + 1] = self.prime[i] + 1;
        }
        let labels = (0..n)
            .map(|x| match x {
                0 => "0".to_string(),
                x if x == top => "1".to_string(),
                x => format!("e{x}"),
            })
            .collect();
        InvolutivePoset::from_relation(labels, leq, prime).expect("enumerated structure is valid")
    }
}

fn explore(
    b: &mut Builder,
    pairs: &[(usize, usize)],
    at: usize,
    out: &mut BTreeMap<Code, InvolutivePoset>,
) {
    if at == pairs.len() {
        let poset = b.leaf();
        let (code, order) = canonical_form(&poset);
        out.entry(code).or_insert_with(|| relabel(&poset, &order));
        return;
    }
    let (i, j) = pairs[at];
    let choices: [&[(usize, usize, Rel)]; 3] = [
        &[(i, j, Rel::Less), (j, i, Rel::NotLess)],
        &[(j, i, Rel::Less), (i, j, Rel::NotLess)],
        &[(i, j, Rel::NotLess), (j, i, Rel::NotLess)],
    ];
    for choice in choices {
        let mut trail = Vec::new();
        let ok = choice
            .iter()
            .all(|&(x, y, r)| b.assign(x, y, r, &mut trail));
        if ok && b.transitive_so_far() {
            explore(b, pairs, at + 1, out);
        }
        b.undo(&trail);
    }
}

/// One representative per isomorphism class, in canonical-code order and
/// in canonical element order.
pub fn enumerate_involutive_posets(n: usize) -> Result<Vec<InvolutivePoset>, EnumerationError> {
    if !(2..=MAX_ENUMERATION_SIZE).contains(&n) {
        return Err(EnumerationError::OutOfRange {
            n,
            max: MAX_ENUMERATION_SIZE,
        });
    }
    let k = n - 2;
    let mut out = BTreeMap::new();
    for fixed in (k % 2..=k).step_by(2) {
        let mut prime: Vec<usize> = (0..k).collect();
        for p in (fixed..k).step_by(2) {
            prime[p] = p + 1;
            prime[p + 1] = p;
        }
        let mut builder = Builder {
            k,
            prime,
            rel: vec![vec![Rel::Unknown; k]; k],
        };
        for i in 0..k {
            builder.rel[i][i] = Rel::NotLess;
        }
        let pairs: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .collect();
        explore(&mut builder, &pairs, 0, &mut out);
    }
    Ok(out.into_values().collect())
}

/// All classes with `2 <= n <= n_max`, smallest first.
pub fn enumerate_up_to(n_max: usize) -> Result<Vec<InvolutivePoset>, EnumerationError> {
    let mut all = Vec::new();
    for n in 2..=n_max {
        all.extend(enumerate_involutive_posets(n)?);
    }
    Ok(all)
}
