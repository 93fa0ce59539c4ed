//! Exhaustive enumeration of finite monoids by backtracking over Cayley
//! tables.
//!
//! Tables are generated with the identity fixed at element 0 and free cells
//! filled in row-major order, so the output stream is lexicographic and
//! reproducible. Associativity is checked incrementally: a triple is tested
//! as soon as the last table cell it reads gets a value. The search splits
//! by first-row prefix for parallel fan-out.

use crate::monoid::Monoid;
use crate::par;

const UNSET: usize = usize::MAX;

/// All monoids on `order` elements with identity 0, in lexicographic table
/// order. With `up_to_iso`, keeps exactly the canonical representative of
/// each isomorphism class.
pub fn enumerate_monoids(order: usize, up_to_iso: bool) -> Vec<Monoid> {
    assert!(order >= 1, "order must be positive");
    if order == 1 {
        return vec![Monoid::trivial()];
    }
    let cells = free_cells(order);
    // first free row as the split prefix
    let split = order - 1;
    let mut prefixes: Vec<Vec<usize>> = Vec::new();
    let mut table = seed_table(order);
    search(&mut table, order, &cells, 0, split, &mut |t| {
        prefixes.push(t.to_vec())
    });
    let completed: Vec<Vec<Monoid>> = par::map_collect(&prefixes, |prefix| {
        let mut table = prefix.clone();
        let mut found = Vec::new();
        search(&mut table, order, &cells, split, cells.len(), &mut |t| {
            let m = Monoid::from_flat_unchecked(order, t.to_vec());
            if !up_to_iso || m.is_canonical() {
                found.push(m);
            }
        });
        found
    });
    completed.into_iter().flatten().collect()
}

/// Sequential twin of [`enumerate_monoids`]; same output, no fan-out.
pub fn enumerate_monoids_sequential(order: usize, up_to_iso: bool) -> Vec<Monoid> {
    assert!(order >= 1, "order must be positive");
    if order == 1 {
        return vec![Monoid::trivial()];
    }
    let cells = free_cells(order);
    let mut out = Vec::new();
    let mut table = seed_table(order);
    search(&mut table, order, &cells, 0, cells.len(), &mut |t| {
        let m = Monoid::from_flat_unchecked(order, t.to_vec());
        if !up_to_iso || m.is_canonical() {
            out.push(m);
        }
    });
    out
}

fn free_cells(order: usize) -> Vec<(usize, usize)> {
    let mut cells = Vec::with_capacity((order - 1) * (order - 1));
    for i in 1..order {
        for j in 1..order {
            cells.push((i, j));
        }
    }
    cells
}

fn seed_table(order: usize) -> Vec<usize> {
    let mut table = vec![UNSET; order * order];
    for i in 0..order {
        table[i] = i; // identity row
        table[i * order] = i; // identity column
    }
    table
}

fn search(
    table: &mut Vec<usize>,
    n: usize,
    cells: &[(usize, usize)],
    depth: usize,
    stop: usize,
    sink: &mut impl FnMut(&[usize]),
) {
    if depth == stop {
        sink(table);
        return;
    }
    let (i, j) = cells[depth];
    for v in 0..n {
        table[i * n + j] = v;
        if associative_at(table, n, i, j) {
            search(table, n, cells, depth + 1, stop, sink);
        }
    }
    table[i * n + j] = UNSET;
}

/// Checks every associativity triple that becomes fully determined when
/// cell `(i, j)` is set. A triple `(a, b, c)` reads the four cells
/// `(a,b)`, `(a·b, c)`, `(b,c)`, `(a, b·c)`; the new cell can play any of
/// the four roles.
fn associative_at(table: &[usize], n: usize, i: usize, j: usize) -> bool {
    let at = |x: usize, y: usize| table[x * n + y];
    let v = at(i, j);

    // (i, j) as the pair (a, b): triples (i, j, c)
    for c in 0..n {
        let t = at(j, c);
        if t == UNSET {
            continue;
        }
        let left = at(v, c);
        let right = at(i, t);
        if left != UNSET && right != UNSET && left != right {
            return false;
        }
    }
    // (i, j) as the pair (b, c): triples (a, i, j)
    for a in 0..n {
        let s = at(a, i);
        if s == UNSET {
            continue;
        }
        let left = at(s, j);
        let right = at(a, v);
        if left != UNSET && right != UNSET && left != right {
            return false;
        }
    }
    // (i, j) as the outer cell (a·b, c): triples (a, b, j) with a·b = i
    for a in 0..n {
        for b in 0..n {
            if at(a, b) != i {
                continue;
            }
            let t = at(b, j);
            if t == UNSET {
                continue;
            }
            let right = at(a, t);
            if right != UNSET && v != right {
                return false;
            }
        }
    }
    // (i, j) as the outer cell (a, b·c): triples (i, b, c) with b·c = j
    for b in 0..n {
        for c in 0..n {
            if at(b, c) != j {
                continue;
            }
            let s = at(i, b);
            if s == UNSET {
                continue;
            }
            let left = at(s, c);
            if left != UNSET && left != v {
                return false;
            }
        }
    }
    true
}
