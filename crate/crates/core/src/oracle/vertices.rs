//! Exhaustive vertex enumeration of the state polytope.
//!
//! The polytope is bounded, so it is the convex hull of its vertices. A
//! state separating `p ≰ q` exists iff some vertex separates them, and
//! states on both sides of 1/2 at `p` exist iff vertices on both sides do.
//! Hence a full and proper state set exists iff the set of all vertices is
//! one. This path shares nothing with the simplex solver: constraints come
//! from every comparable pair and vertices from square subsystems solved by
//! Gaussian elimination.

use num_traits::{One, Zero};

use crate::poset::InvolutivePoset;
use crate::rational::{half, Rational};
use crate::states::{StateSet, StateVector};

/// `value(x) = constant + Σ coefficients[k] · v_k`.
#[derive(Clone, Debug)]
struct Expr {
    coefficients: Vec<Rational>,
    constant: Rational,
}

/// `a · v <= b`.
#[derive(Clone, Debug)]
struct Halfspace {
    a: Vec<Rational>,
    b: Rational,
}

fn expressions(poset: &InvolutivePoset) -> (Vec<Expr>, usize) {
    let mut var_of = vec![None; poset.len()];
    let mut d = 0;
    for x in poset.elements() {
        let px = poset.prime(x);
        if x != poset.bottom() && x != poset.top() && px != x && var_of[px].is_none() {
            var_of[x] = Some(d);
            d += 1;
        }
    }
    let exprs = poset
        .elements()
        .map(|x| {
            let mut coefficients = vec![Rational::zero(); d];
            let px = poset.prime(x);
            let constant = if x == poset.bottom() {
                Rational::zero()
            } else if x == poset.top() {
                Rational::one()
            } else if px == x {
                half()
            } else if let Some(k) = var_of[x] {
                coefficients[k] = Rational::one();
                Rational::zero()
            } else {
                let k = var_of[px].expect("partner owns the variable");
                coefficients[k] = -Rational::one();
                Rational::one()
            };
            Expr {
                coefficients,
                constant,
            }
        })
        .collect();
    (exprs, d)
}

/// Solves the square system `rows · v = rhs`; `None` unless the solution is
/// unique.
fn solve_square(mut rows: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Option<Vec<Rational>> {
    let d = rows.len();
    for col in 0..d {
        let pivot = (col..d).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(col, pivot);
        rhs.swap(col, pivot);
        let pivot_row = rows[col].clone();
        for r in 0..d {
            if r != col && !rows[r][col].is_zero() {
                let f = &rows[r][col] / &pivot_row[col];
                for (c, v) in pivot_row.iter().enumerate().skip(col) {
                    rows[r][c] -= &f * v;
                }
                let delta = &f * &rhs[col];
                rhs[r] -= delta;
            }
        }
    }
    Some((0..d).map(|i| &rhs[i] / &rows[i][i]).collect())
}

fn subsets(m: usize, d: usize, f: &mut impl FnMut(&[usize])) {
    fn go(start: usize, m: usize, d: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == d {
            f(cur);
            return;
        }
        for i in start..m {
            if m - i < d - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, m, d, cur, f);
            cur.pop();
        }
    }
    go(0, m, d, &mut Vec::new(), f);
}

/// Every vertex of the state polytope as a state vector, deduplicated, in
/// discovery order. Empty when the polytope is empty.
pub fn state_vertices(poset: &InvolutivePoset) -> Vec<StateVector> {
    let (exprs, d) = expressions(poset);
    let mut halfspaces = Vec::new();
    for k in 0..d {
        let mut a = vec![Rational::zero(); d];
        a[k] = -Rational::one();
        halfspaces.push(Halfspace {
            a: a.clone(),
            b: Rational::zero(),
        });
        a[k] = Rational::one();
        halfspaces.push(Halfspace {
            a,
            b: Rational::one(),
        });
    }
    for p in poset.elements() {
        for q in poset.elements() {
            if p != q && poset.leq(p, q) {
                // value(p) - value(q) <= 0
                let a: Vec<Rational> = exprs[p]
                    .coefficients
                    .iter()
                    .zip(&exprs[q].coefficients)
                    .map(|(x, y)| x - y)
                    .collect();
                let b = &exprs[q].constant - &exprs[p].constant;
                if a.iter().all(Zero::is_zero) {
                    if b < Rational::zero() {
                        return Vec::new();
                    }
                    continue;
                }
                halfspaces.push(Halfspace { a, b });
            }
        }
    }
    let inside = |v: &[Rational]| {
        halfspaces.iter().all(|h| {
            let lhs: Rational = h.a.iter().zip(v).map(|(x, y)| x * y).sum();
            lhs <= h.b
        })
    };
    let expand = |v: &[Rational]| {
        StateVector::new(
            exprs
                .iter()
                .map(|e| {
                    e.coefficients
                        .iter()
                        .zip(v)
                        .map(|(x, y)| x * y)
                        .sum::<Rational>()
                        + &e.constant
                })
                .collect(),
        )
    };
    let mut out: Vec<StateVector> = Vec::new();
    if d == 0 {
        out.push(expand(&[]));
        return out;
    }
    subsets(halfspaces.len(), d, &mut |chosen| {
        let rows = chosen.iter().map(|&i| halfspaces[i].a.clone()).collect();
        let rhs = chosen.iter().map(|&i| halfspaces[i].b.clone()).collect();
        if let Some(v) = solve_square(rows, rhs) {
            if inside(&v) {
                let s = expand(&v);
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        }
    });
    out
}

/// Whether any full and proper set of states exists, decided on the vertex
/// set.
pub fn full_proper_exists(poset: &InvolutivePoset) -> bool {
    let vertices = state_vertices(poset);
    if vertices.is_empty() {
        return false;
    }
    let set = StateSet::new(poset, vertices).expect("vertices are states");
    set.full && set.proper
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::int;
    use crate::states::is_state;

    #[test]
    fn vertex_counts() {
        assert_eq!(state_vertices(&fixtures::chain3()).len(), 1);
        // 0 <= x <= 1/2 for a <= a'.
        assert_eq!(state_vertices(&fixtures::chain4()).len(), 2);
        // The unit square.
        assert_eq!(state_vertices(&fixtures::mo_poset(2)).len(), 4);
    }

    #[test]
    fn vertices_are_states() {
        for (_, p) in fixtures::named_posets() {
            for v in state_vertices(&p) {
                assert!(is_state(&p, &v.values));
            }
        }
    }

    #[test]
    fn decisions() {
        assert!(full_proper_exists(&fixtures::chain2()));
        assert!(!full_proper_exists(&fixtures::chain3()));
        assert!(!full_proper_exists(&fixtures::chain4()));
        assert!(full_proper_exists(&fixtures::mo_poset(1)));
        assert!(full_proper_exists(&fixtures::hex_poset()));
    }

    #[test]
    fn gaussian_elimination() {
        let rows = vec![vec![int(1), int(1)], vec![int(1), int(-1)]];
        assert_eq!(
            solve_square(rows, vec![int(3), int(1)]),
            Some(vec![int(2), int(1)])
        );
        let singular = vec![vec![int(1), int(1)], vec![int(2), int(2)]];
        assert_eq!(solve_square(singular, vec![int(1), int(2)]), None);
    }
}
