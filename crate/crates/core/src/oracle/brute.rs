//! Independent generate-and-filter enumeration for tiny sizes: every
//! relation matrix, every involution, canonicalized over all permutations.

use std::collections::BTreeSet;

use crate::poset::InvolutivePoset;

pub const MAX_BRUTE_SIZE: usize = 5;

type Matrix = Vec<Vec<bool>>;

fn is_partial_order(m: &Matrix) -> bool {
    let n = m.len();
    for a in 0..n {
        for b in 0..n {
            if a != b && m[a][b] && m[b][a] {
                return false;
            }
            if m[a][b] && (0..n).any(|c| m[b][c] && !m[a][c]) {
                return false;
            }
        }
    }
    true
}

fn extremes(m: &Matrix) -> Option<(usize, usize)> {
    let n = m.len();
    let mins: Vec<usize> = (0..n).filter(|&b| (0..n).all(|x| m[b][x])).collect();
    let maxs: Vec<usize> = (0..n).filter(|&t| (0..n).all(|x| m[x][t])).collect();
    match (mins.as_slice(), maxs.as_slice()) {
        ([b], [t]) => Some((*b, *t)),
        _ => None,
    }
}

fn involutions(n: usize) -> Vec<Vec<usize>> {
    fn go(f: &mut Vec<Option<usize>>, out: &mut Vec<Vec<usize>>) {
        match f.iter().position(Option::is_none) {
            None => out.push(f.iter().map(|x| x.expect("assigned")).collect()),
            Some(i) => {
                f[i] = Some(i);
                go(f, out);
                for j in i + 1..f.len() {
                    if f[j].is_none() {
                        f[i] = Some(j);
                        f[j] = Some(i);
                        go(f, out);
                        f[j] = None;
                    }
                }
                f[i] = None;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut vec![None; n], &mut out);
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                go(cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn code(m: &Matrix, prime: &[usize], perm: &[usize]) -> Vec<u8> {
    let n = m.len();
    let mut inverse = vec![0; n];
    for (i, &x) in perm.iter().enumerate() {
        inverse[x] = i;
    }
    let mut out = Vec::with_capacity(n * n + n);
    for &x in perm {
        for &y in perm {
            out.push(u8::from(m[x][y]));
        }
    }
    for &x in perm {
        out.push(inverse[prime[x]] as u8);
    }
    out
}

fn min_code(m: &Matrix, prime: &[usize], perms: &[Vec<usize>]) -> Vec<u8> {
    perms
        .iter()
        .map(|p| code(m, prime, p))
        .min()
        .expect("at least one permutation")
}

/// Minimum encoding over all `n!` element orders.
pub fn brute_code(poset: &InvolutivePoset) -> Vec<u8> {
    let n = poset.len();
    let m: Matrix = (0..n)
        .map(|i| (0..n).map(|j| poset.leq(i, j)).collect())
        .collect();
    min_code(&m, poset.prime_map(), &permutations(n))
}

/// The set of isomorphism-class codes on `n` elements.
///
/// # Panics
///
/// If `n` is 0 or exceeds [`MAX_BRUTE_SIZE`].
pub fn brute_classes(n: usize) -> BTreeSet<Vec<u8>> {
    assert!(
        (1..=MAX_BRUTE_SIZE).contains(&n),
        "brute force supports 1..=5 elements"
    );
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let perms = permutations(n);
    let invs = involutions(n);
    let mut classes = BTreeSet::new();
    for mask in 0u64..(1u64 << off.len()) {
        let mut m: Matrix = vec![vec![false; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = true;
        }
        for (bit, &(i, j)) in off.iter().enumerate() {
            m[i][j] = mask >> bit & 1 == 1;
        }
        if !is_partial_order(&m) {
            continue;
        }
        let Some((bottom, top)) = extremes(&m) else {
            continue;
        };
        for prime in &invs {
            if prime[bottom] != top {
                continue;
            }
            let antitone = (0..n).all(|x| (0..n).all(|y| !m[x][y] || m[prime[y]][prime[x]]));
            if antitone {
                classes.insert(min_code(&m, prime, &perms));
            }
        }
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn involution_counts() {
        // Telephone numbers.
        let counts: Vec<usize> = (1..=5).map(|n| involutions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 10, 26]);
        assert_eq!(permutations(4).len(), 24);
    }

    #[test]
    fn tiny_classes() {
        // A single element is its own bottom, top and complement.
        assert_eq!(brute_classes(1).len(), 1);
        assert_eq!(brute_classes(2).len(), 1);
        assert_eq!(brute_classes(3).len(), 1);
    }
}
