//! Finite limits of monoids: binary products and pullbacks, with the
//! projections and pairing data needed to recheck universal properties.

use crate::error::{Error, Result};
use crate::hom::{compose, Hom};
use crate::monoid::Monoid;

/// A pair of homomorphisms with a shared codomain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cospan {
    left: Hom,
    right: Hom,
}

impl Cospan {
    pub fn new(left: Hom, right: Hom) -> Result<Cospan> {
        if left.cod() != right.cod() {
            return Err(Error::CospanMismatch);
        }
        Ok(Cospan { left, right })
    }

    pub fn left(&self) -> &Hom {
        &self.left
    }

    pub fn right(&self) -> &Hom {
        &self.right
    }
}

/// Product monoid with its two projections. Element `i * |N| + j`
/// represents the pair `(i, j)`.
pub fn product(m: &Monoid, n: &Monoid) -> (Monoid, Hom, Hom) {
    let (mo, no) = (m.order(), n.order());
    let order = mo * no;
    let mut table = vec![0usize; order * order];
    for a in 0..order {
        let (a1, a2) = (a / no, a % no);
        for b in 0..order {
            let (b1, b2) = (b / no, b % no);
            table[a * order + b] = m.op(a1, b1) * no + n.op(a2, b2);
        }
    }
    let carrier = Monoid::from_flat_unchecked(order, table);
    let p1 = Hom::new_unchecked(
        carrier.clone(),
        m.clone(),
        (0..order).map(|a| a / no).collect(),
    );
    let p2 = Hom::new_unchecked(
        carrier.clone(),
        n.clone(),
        (0..order).map(|a| a % no).collect(),
    );
    (carrier, p1, p2)
}

/// Index of the pair `(i, j)` inside `product(m, n)`.
pub fn pair_index(n: &Monoid, i: usize, j: usize) -> usize {
    i * n.order() + j
}

/// A pullback `A ×_B X` realized as a fresh monoid over pair indices, so
/// that it can feed every other operation uniformly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pullback {
    carrier: Monoid,
    proj_left: Hom,
    proj_right: Hom,
    /// Element `p` of the carrier represents the pair `pairs[p]`.
    pairs: Vec<(usize, usize)>,
    /// Dense reverse lookup: `(a, x) → carrier element`, MAX when absent.
    index: Vec<usize>,
    right_order: usize,
}

impl Pullback {
    pub fn carrier(&self) -> &Monoid {
        &self.carrier
    }

    /// First projection, into the domain of the cospan's left leg.
    pub fn proj_left(&self) -> &Hom {
        &self.proj_left
    }

    /// Second projection, into the domain of the cospan's right leg.
    pub fn proj_right(&self) -> &Hom {
        &self.proj_right
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Carrier element representing `(a, x)`, if the pair satisfies the
    /// pullback equation.
    pub fn index_of(&self, a: usize, x: usize) -> Option<usize> {
        match self.index[a * self.right_order + x] {
            usize::MAX => None,
            p => Some(p),
        }
    }

    /// Mediating morphism for a commuting cone `(p, q)`: the unique
    /// `u: T → A ×_B X` with `π₁u = p` and `π₂u = q`.
    pub fn mediate(&self, p: &Hom, q: &Hom) -> Result<Hom> {
        if p.dom() != q.dom()
            || p.cod() != self.proj_left.cod()
            || q.cod() != self.proj_right.cod()
        {
            return Err(Error::PullbackMismatch);
        }
        let map: Result<Vec<usize>> = p
            .dom()
            .elements()
            .map(|t| {
                self.index_of(p.apply(t), q.apply(t))
                    .ok_or(Error::PullbackMismatch)
            })
            .collect();
        Ok(Hom::new_unchecked(
            p.dom().clone(),
            self.carrier.clone(),
            map?,
        ))
    }
}

/// The pullback `{(a, x) | f(a) = x̂(x)}` of a cospan, with projections.
/// Pairs are enumerated in lexicographic order; the identity pair `(0, 0)`
/// always exists and sorts first.
pub fn pullback(c: &Cospan) -> Pullback {
    let f = c.left();
    let x = c.right();
    let a_ord = f.dom().order();
    let x_ord = x.dom().order();
    let mut pairs = Vec::new();
    for a in 0..a_ord {
        for x0 in 0..x_ord {
            if f.apply(a) == x.apply(x0) {
                pairs.push((a, x0));
            }
        }
    }
    let n = pairs.len();
    let mut index = vec![usize::MAX; a_ord * x_ord];
    for (p, &(a, x0)) in pairs.iter().enumerate() {
        index[a * x_ord + x0] = p;
    }
    let mut table = vec![0usize; n * n];
    for (i, &(a1, x1)) in pairs.iter().enumerate() {
        for (j, &(a2, x2)) in pairs.iter().enumerate() {
            table[i * n + j] = index[f.dom().op(a1, a2) * x_ord + x.dom().op(x1, x2)];
        }
    }
    let carrier = Monoid::from_flat_unchecked(n, table);
    let proj_left = Hom::new_unchecked(
        carrier.clone(),
        f.dom().clone(),
        pairs.iter().map(|&(a, _)| a).collect(),
    );
    let proj_right = Hom::new_unchecked(
        carrier.clone(),
        x.dom().clone(),
        pairs.iter().map(|&(_, x0)| x0).collect(),
    );
    Pullback {
        carrier,
        proj_left,
        proj_right,
        pairs,
        index,
        right_order: x_ord,
    }
}

/// Exhaustive check of the universal property of a commuting square
/// `(P, p1: P→Y, p2: P→Z)` over the cospan `(u: Y→W, v: Z→W)`: for every
/// test object `T` and every commuting cone `(p: T→Y, q: T→Z)`, exactly
/// one `h: T→P` satisfies `p1∘h = p` and `p2∘h = q`.
///
/// Returns `(cones checked, violations)`. This is the independent oracle
/// for the pullback construction: it enumerates mediating candidates
/// instead of building them.
pub fn square_universal_property(
    p1: &Hom,
    p2: &Hom,
    u: &Hom,
    v: &Hom,
    cones_from: &[Monoid],
) -> (u64, u64) {
    assert_eq!(p1.dom(), p2.dom());
    assert_eq!(u.cod(), v.cod());
    assert_eq!(
        compose(u, p1).unwrap(),
        compose(v, p2).unwrap(),
        "square does not commute"
    );
    let mut checked = 0u64;
    let mut violations = 0u64;
    for t in cones_from {
        let into_p = crate::hom::enumerate_homs(t, p1.dom(), false);
        let into_y = crate::hom::enumerate_homs(t, u.dom(), false);
        let into_z = crate::hom::enumerate_homs(t, v.dom(), false);
        // count candidate mediators by their projected leg pair
        let mut mediating: std::collections::HashMap<(Vec<usize>, Vec<usize>), usize> =
            std::collections::HashMap::new();
        for h in &into_p {
            let legs = (
                compose(p1, h).unwrap().map().to_vec(),
                compose(p2, h).unwrap().map().to_vec(),
            );
            *mediating.entry(legs).or_insert(0) += 1;
        }
        for p in &into_y {
            let up = compose(u, p).unwrap();
            for q in &into_z {
                if up != compose(v, q).unwrap() {
                    continue;
                }
                checked += 1;
                let key = (p.map().to_vec(), q.map().to_vec());
                if mediating.get(&key).copied().unwrap_or(0) != 1 {
                    violations += 1;
                }
            }
        }
    }
    (checked, violations)
}
