//! Finite monoids as Cayley tables, submonoids, and canonical forms.
//!
//! Elements are integer indices `0..order`. Every `Monoid` held in memory has
//! its identity at index 0; [`Monoid::from_table`] accepts an arbitrary
//! identity index and relabels on construction.

use crate::error::{Error, Result};

/// A finite monoid given by its Cayley table.
///
/// The table is stored row-major: `table[i * order + j]` is the product
/// `i · j`. The identity is always element 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monoid {
    order: usize,
    table: Vec<usize>,
}

impl Monoid {
    /// Validates a square table with a designated identity element and
    /// returns the monoid, relabelled so that the identity is element 0.
    ///
    /// Checks, in order: shape, entry range, the identity law at the given
    /// index, and associativity over all triples. The first violation found
    /// is reported against the *input* labelling.
    pub fn from_table(table: &[Vec<usize>], identity: usize) -> Result<Monoid> {
        let order = table.len();
        if order == 0 {
            return Err(Error::IdentityOutOfRange { identity, order });
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != order {
                return Err(Error::NotSquare {
                    row,
                    len: r.len(),
                    order,
                });
            }
            for (j, &v) in r.iter().enumerate() {
                if v >= order {
                    return Err(Error::EntryOutOfRange {
                        i: row,
                        j,
                        value: v,
                        order,
                    });
                }
            }
        }
        if identity >= order {
            return Err(Error::IdentityOutOfRange { identity, order });
        }
        #[allow(clippy::needless_range_loop)] // i indexes both row and column
        for i in 0..order {
            if table[identity][i] != i {
                return Err(Error::IdentityLaw {
                    left: identity,
                    right: i,
                    got: table[identity][i],
                    expected: i,
                });
            }
            if table[i][identity] != i {
                return Err(Error::IdentityLaw {
                    left: i,
                    right: identity,
                    got: table[i][identity],
                    expected: i,
                });
            }
        }
        for i in 0..order {
            for j in 0..order {
                for k in 0..order {
                    let left = table[table[i][j]][k];
                    let right = table[i][table[j][k]];
                    if left != right {
                        return Err(Error::Associativity {
                            i,
                            j,
                            k,
                            left,
                            right,
                        });
                    }
                }
            }
        }
        // Relabel so the identity sits at index 0. The swap is its own inverse.
        let mut flat = vec![0usize; order * order];
        let swap = |x: usize| {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        for i in 0..order {
            for j in 0..order {
                flat[swap(i) * order + swap(j)] = swap(table[i][j]);
            }
        }
        Ok(Monoid { order, table: flat })
    }

    /// Builds a monoid from an already-valid flat table with identity 0.
    /// Used by constructions whose output is correct by construction;
    /// debug builds re-validate.
    pub(crate) fn from_flat_unchecked(order: usize, table: Vec<usize>) -> Monoid {
        debug_assert_eq!(table.len(), order * order);
        let m = Monoid { order, table };
        debug_assert!(m.check_valid().is_ok(), "invalid table from construction");
        m
    }

    fn check_valid(&self) -> Result<()> {
        let rows: Vec<Vec<usize>> = (0..self.order)
            .map(|i| self.table[i * self.order..(i + 1) * self.order].to_vec())
            .collect();
        Monoid::from_table(&rows, 0).map(|_| ())
    }

    /// The one-element monoid (the zero object of the pointed category).
    pub fn trivial() -> Monoid {
        Monoid {
            order: 1,
            table: vec![0],
        }
    }

    /// The cyclic group of order `n` written additively: `i · j = i + j mod n`.
    pub fn cyclic(n: usize) -> Monoid {
        assert!(n >= 1);
        let mut table = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = (i + j) % n;
            }
        }
        Monoid { order: n, table }
    }

    /// The `n`-element chain semilattice: `i · j = max(i, j)`, identity 0.
    /// `chain(2)` is the two-element semilattice; `chain(3)` is the
    /// three-element monoid whose projection onto `chain(2)` is the
    /// standard example of a split epimorphism that is not Schreier.
    pub fn chain(n: usize) -> Monoid {
        assert!(n >= 1);
        let mut table = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = i.max(j);
            }
        }
        Monoid { order: n, table }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The identity element; always 0 for in-memory monoids.
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn op(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order + j]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Row-major table entries, mostly for serialization.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|i| self.table[i * self.order..(i + 1) * self.order].to_vec())
            .collect()
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.op(x, x) == x
    }

    pub fn idempotent_count(&self) -> usize {
        self.elements().filter(|&x| self.is_idempotent(x)).count()
    }

    /// Size of the submonoid generated by a single element.
    pub fn element_order(&self, x: usize) -> usize {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut count = 1;
        let mut cur = x;
        while !seen[cur] {
            seen[cur] = true;
            count += 1;
            cur = self.op(cur, x);
        }
        count
    }

    /// Per-element invariants, sorted; equal profiles are a necessary
    /// condition for isomorphism and drive the backtracking prefilter.
    pub(crate) fn profile(&self) -> Vec<(usize, bool, usize, usize)> {
        let mut p: Vec<_> = self.elements().map(|x| self.element_profile(x)).collect();
        p.sort_unstable();
        p
    }

    pub(crate) fn element_profile(&self, x: usize) -> (usize, bool, usize, usize) {
        let row_distinct = {
            let mut seen = vec![false; self.order];
            self.elements().for_each(|j| seen[self.op(x, j)] = true);
            seen.iter().filter(|&&b| b).count()
        };
        let col_distinct = {
            let mut seen = vec![false; self.order];
            self.elements().for_each(|i| seen[self.op(i, x)] = true);
            seen.iter().filter(|&&b| b).count()
        };
        (
            self.element_order(x),
            self.is_idempotent(x),
            row_distinct,
            col_distinct,
        )
    }

    /// Applies a relabelling permutation (`perm[old] = new`, `perm[0] = 0`).
    pub fn relabel(&self, perm: &[usize]) -> Monoid {
        debug_assert_eq!(perm.len(), self.order);
        debug_assert_eq!(perm[0], 0);
        let n = self.order;
        let mut table = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                table[perm[i] * n + perm[j]] = perm[self.op(i, j)];
            }
        }
        Monoid { order: n, table }
    }

    /// The lexicographically minimal relabelling over all permutations that
    /// fix the identity. Two monoids are isomorphic iff their canonical
    /// forms are equal; intended for enumeration-scale orders.
    pub fn canonical_form(&self) -> Monoid {
        let n = self.order;
        if n <= 2 {
            return self.clone();
        }
        let mut best = self.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        permute_tail(&mut perm, 1, &mut |p| {
            let candidate = self.relabel(p);
            if candidate.table < best.table {
                best = candidate;
            }
        });
        best
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical_form()
    }
}

/// Visits all permutations of `perm[from..]` in place.
fn permute_tail(perm: &mut Vec<usize>, from: usize, visit: &mut impl FnMut(&[usize])) {
    if from + 1 >= perm.len() {
        visit(perm);
        return;
    }
    for i in from..perm.len() {
        perm.swap(from, i);
        permute_tail(perm, from + 1, visit);
        perm.swap(from, i);
    }
}

/// A submonoid of an ambient monoid, identified with its member set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Submonoid {
    ambient: Monoid,
    members: Vec<usize>,
}

impl Submonoid {
    /// Checks that `members` contains the identity and is closed under the
    /// ambient operation.
    pub fn new(ambient: Monoid, mut members: Vec<usize>) -> Result<Submonoid> {
        members.sort_unstable();
        members.dedup();
        if let Some(&bad) = members.iter().find(|&&x| x >= ambient.order()) {
            return Err(Error::SeedOutOfRange(bad));
        }
        let mut in_set = vec![false; ambient.order()];
        for &x in &members {
            in_set[x] = true;
        }
        if !in_set[ambient.identity()] {
            return Err(Error::IdentityLaw {
                left: 0,
                right: 0,
                got: 0,
                expected: 0,
            });
        }
        for &x in &members {
            for &y in &members {
                if !in_set[ambient.op(x, y)] {
                    return Err(Error::NotMultiplicative {
                        i: x,
                        j: y,
                        got: ambient.op(x, y),
                        expected: ambient.op(x, y),
                    });
                }
            }
        }
        Ok(Submonoid { ambient, members })
    }

    pub(crate) fn from_sorted_unchecked(ambient: Monoid, members: Vec<usize>) -> Submonoid {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Submonoid { ambient, members }
    }

    pub fn ambient(&self) -> &Monoid {
        &self.ambient
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_all(&self) -> bool {
        self.members.len() == self.ambient.order()
    }
}

/// Least submonoid of `m` containing `seed`: the closure of
/// `seed ∪ {identity}` under the operation.
pub fn generated_submonoid(m: &Monoid, seed: &[usize]) -> Result<Submonoid> {
    if let Some(&bad) = seed.iter().find(|&&x| x >= m.order()) {
        return Err(Error::SeedOutOfRange(bad));
    }
    Ok(close_under_op(m, seed))
}

pub(crate) fn close_under_op(m: &Monoid, seed: &[usize]) -> Submonoid {
    let n = m.order();
    let mut in_set = vec![false; n];
    in_set[m.identity()] = true;
    let mut work: Vec<usize> = vec![m.identity()];
    for &x in seed {
        if !in_set[x] {
            in_set[x] = true;
            work.push(x);
        }
    }
    let mut members: Vec<usize> = work.clone();
    while let Some(x) = work.pop() {
        // products with everything already present, both sides
        let snapshot: Vec<usize> = members.clone();
        for &y in &snapshot {
            for p in [m.op(x, y), m.op(y, x)] {
                if !in_set[p] {
                    in_set[p] = true;
                    members.push(p);
                    work.push(p);
                }
            }
        }
    }
    members.sort_unstable();
    Submonoid {
        ambient: m.clone(),
        members,
    }
}
