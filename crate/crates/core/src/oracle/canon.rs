//! Canonical forms of involutive posets under isomorphisms that commute
//! with the involution.
//!
//! Colour refinement by position class, down-set and up-set colours and the
//! colour of the complement, followed by individualization of the first
//! non-singleton cell. The canonical code is the least encoding found over
//! all leaves of that search.

use crate::poset::InvolutivePoset;

/// Relation bits in row-major order followed by the relabelled prime map.
pub type Code = Vec<u8>;

/// Encodes `poset` with new position `i` holding old element `order[i]`.
pub fn encode(poset: &InvolutivePoset, order: &[usize]) -> Code {
    let n = poset.len();
    let mut position = vec![0; n];
    for (i, &x) in order.iter().enumerate() {
        position[x] = i;
    }
    let mut code = Vec::with_capacity(n * n + n);
    for &x in order {
        for &y in order {
            code.push(u8::from(poset.leq(x, y)));
        }
    }
    for &x in order {
        code.push(u8::try_from(position[poset.prime(x)]).expect("poset too large to encode"));
    }
    code
}

fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut distinct: Vec<K> = keys.to_vec();
    distinct.sort();
    distinct.dedup();
    keys.iter()
        .map(|k| distinct.binary_search(k).expect("key present"))
        .collect()
}

fn count_colours(colours: &[usize]) -> usize {
    colours.iter().max().map_or(0, |m| m + 1)
}

fn refine(poset: &InvolutivePoset, mut colours: Vec<usize>) -> Vec<usize> {
    loop {
        let keys: Vec<(usize, Vec<usize>, Vec<usize>, usize)> = poset
            .elements()
            .map(|x| {
                let mut below: Vec<usize> = poset
                    .elements()
                    .filter(|&y| poset.lt(y, x))
                    .map(|y| colours[y])
                    .collect();
                let mut above: Vec<usize> = poset
                    .elements()
                    .filter(|&y| poset.lt(x, y))
                    .map(|y| colours[y])
                    .collect();
                below.sort_unstable();
                above.sort_unstable();
                (colours[x], below, above, colours[poset.prime(x)])
            })
            .collect();
        let next = rank(&keys);
        if count_colours(&next) == count_colours(&colours) {
            return next;
        }
        colours = next;
    }
}

fn initial_colours(poset: &InvolutivePoset) -> Vec<usize> {
    let keys: Vec<(u8, bool)> = poset
        .elements()
        .map(|x| {
            let class = if x == poset.bottom() {
                0
            } else if x == poset.top() {
                2
            } else {
                1
            };
            (class, poset.prime(x) == x)
        })
        .collect();
    rank(&keys)
}

fn search(poset: &InvolutivePoset, colours: Vec<usize>, best: &mut Option<(Code, Vec<usize>)>) {
    let colours = refine(poset, colours);
    let n = poset.len();
    if count_colours(&colours) == n {
        let mut order = vec![0; n];
        for (x, &c) in colours.iter().enumerate() {
            order[c] = x;
        }
        let code = encode(poset, &order);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, order));
        }
        return;
    }
    let mut sizes = vec![0usize; count_colours(&colours)];
    for &c in &colours {
        sizes[c] += 1;
    }
    let cell = sizes
        .iter()
        .position(|&s| s > 1)
        .expect("non-discrete colouring");
    for chosen in poset.elements().filter(|&x| colours[x] == cell) {
        let keys: Vec<(usize, bool)> = poset
            .elements()
            .map(|x| (colours[x], x != chosen))
            .collect();
        search(poset, rank(&keys), best);
    }
}

/// The canonical code and the element order that realizes it.
pub fn canonical_form(poset: &InvolutivePoset) -> (Code, Vec<usize>) {
    let mut best = None;
    search(poset, initial_colours(poset), &mut best);
    best.expect("search visits at least one leaf")
}

pub fn canonical_code(poset: &InvolutivePoset) -> Code {
    canonical_form(poset).0
}

pub fn is_isomorphic(a: &InvolutivePoset, b: &InvolutivePoset) -> bool {
    a.len() == b.len() && canonical_code(a) == canonical_code(b)
}

/// Rebuilds the poset in canonical element order with labels `0`, `e1`, …,
/// `1`.
pub fn canonical_poset(poset: &InvolutivePoset) -> InvolutivePoset {
    let (_, order) = canonical_form(poset);
    relabel(poset, &order)
}

pub(crate) fn relabel(poset: &InvolutivePoset, order: &[usize]) -> InvolutivePoset {
    let n = poset.len();
    let mut position = vec![0; n];
    for (i, &x) in order.iter().enumerate() {
        position[x] = i;
    }
    let labels = order
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            if x == poset.bottom() {
                "0".to_string()
            } else if x == poset.top() {
                "1".to_string()
            } else {
                format!("e{i}")
            }
        })
        .collect();
    let mut leq = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            leq[i * n + j] = poset.leq(order[i], order[j]);
        }
    }
    let prime = order.iter().map(|&x| position[poset.prime(x)]).collect();
    InvolutivePoset::from_relation(labels, leq, prime).expect("relabelling preserves validity")
}
