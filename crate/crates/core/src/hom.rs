//! Monoid homomorphisms: validation, kernels, images, composition,
//! exhaustive enumeration, and isomorphism testing.

use crate::error::{Error, Result};
use crate::monoid::{Monoid, Submonoid};

/// A homomorphism between two finite monoids, as an element map.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hom {
    dom: Monoid,
    cod: Monoid,
    map: Vec<usize>,
}

impl Hom {
    /// Validates identity preservation and multiplicativity.
    pub fn new(dom: Monoid, cod: Monoid, map: Vec<usize>) -> Result<Hom> {
        if map.len() != dom.order() {
            return Err(Error::MapLength {
                len: map.len(),
                order: dom.order(),
            });
        }
        if let Some((e, &v)) = map.iter().enumerate().find(|&(_, &v)| v >= cod.order()) {
            return Err(Error::MapOutOfRange {
                element: e,
                value: v,
                order: cod.order(),
            });
        }
        if map[dom.identity()] != cod.identity() {
            return Err(Error::IdentityNotPreserved {
                got: map[dom.identity()],
            });
        }
        for i in dom.elements() {
            for j in dom.elements() {
                let got = map[dom.op(i, j)];
                let expected = cod.op(map[i], map[j]);
                if got != expected {
                    return Err(Error::NotMultiplicative { i, j, got, expected });
                }
            }
        }
        Ok(Hom { dom, cod, map })
    }

    pub(crate) fn new_unchecked(dom: Monoid, cod: Monoid, map: Vec<usize>) -> Hom {
        let h = Hom { dom, cod, map };
        debug_assert!(
            Hom::new(h.dom.clone(), h.cod.clone(), h.map.clone()).is_ok(),
            "invalid hom from construction"
        );
        h
    }

    pub fn identity(m: &Monoid) -> Hom {
        Hom {
            dom: m.clone(),
            cod: m.clone(),
            map: m.elements().collect(),
        }
    }

    /// The zero morphism: everything to the codomain identity.
    pub fn zero(dom: &Monoid, cod: &Monoid) -> Hom {
        Hom {
            dom: dom.clone(),
            cod: cod.clone(),
            map: vec![cod.identity(); dom.order()],
        }
    }

    pub fn dom(&self) -> &Monoid {
        &self.dom
    }

    pub fn cod(&self) -> &Monoid {
        &self.cod
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.cod.order()];
        for &v in &self.map {
            hit[v] = true;
        }
        hit.into_iter().all(|b| b)
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = vec![false; self.cod.order()];
        for &v in &self.map {
            if hit[v] {
                return false;
            }
            hit[v] = true;
        }
        true
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Elements of the codomain fiber `f⁻¹(b)`, in element order.
    pub fn fiber(&self, b: usize) -> Vec<usize> {
        self.dom.elements().filter(|&a| self.map[a] == b).collect()
    }
}

/// Kernel in the pointed sense: everything mapping to the codomain identity.
pub fn kernel(f: &Hom) -> Submonoid {
    let members: Vec<usize> = f
        .dom()
        .elements()
        .filter(|&a| f.apply(a) == f.cod().identity())
        .collect();
    Submonoid::from_sorted_unchecked(f.dom().clone(), members)
}

/// Image of a homomorphism, always a submonoid of the codomain.
pub fn image(f: &Hom) -> Submonoid {
    let mut hit = vec![false; f.cod().order()];
    for &v in f.map() {
        hit[v] = true;
    }
    let members: Vec<usize> = (0..f.cod().order()).filter(|&x| hit[x]).collect();
    Submonoid::from_sorted_unchecked(f.cod().clone(), members)
}

/// The composite `f ∘ g` (apply `g` first). Requires `g.cod = f.dom`.
pub fn compose(f: &Hom, g: &Hom) -> Result<Hom> {
    if g.cod() != f.dom() {
        return Err(Error::ComposeMismatch);
    }
    let map: Vec<usize> = g.map().iter().map(|&x| f.apply(x)).collect();
    Ok(Hom::new_unchecked(g.dom().clone(), f.cod().clone(), map))
}

/// Realizes a submonoid as a monoid in its own right, together with the
/// inclusion homomorphism. Member 0 of the ambient is the identity and
/// sorts first, so the extracted monoid has its identity at index 0.
pub fn sub_as_monoid(s: &Submonoid) -> (Monoid, Hom) {
    let members = s.members();
    let n = members.len();
    let index_of = |x: usize| members.binary_search(&x).expect("closed under op");
    let mut table = vec![0usize; n * n];
    for (i, &a) in members.iter().enumerate() {
        for (j, &b) in members.iter().enumerate() {
            table[i * n + j] = index_of(s.ambient().op(a, b));
        }
    }
    let carrier = Monoid::from_flat_unchecked(n, table);
    let incl = Hom::new_unchecked(carrier.clone(), s.ambient().clone(), members.to_vec());
    (carrier, incl)
}

/// A derivation order for backtracking: each element of `m` is either a
/// generator or the product of two previously derived elements.
#[derive(Debug, Clone)]
enum Derivation {
    Identity,
    Generator,
    Product(usize, usize),
}

fn derivation_chain(m: &Monoid) -> Vec<(usize, Derivation)> {
    let n = m.order();
    let mut chain: Vec<(usize, Derivation)> = vec![(m.identity(), Derivation::Identity)];
    let mut known = vec![false; n];
    known[m.identity()] = true;
    while chain.len() < n {
        // close the current chain under products
        let mut progress = true;
        while progress {
            progress = false;
            let snapshot: Vec<usize> = chain.iter().map(|&(e, _)| e).collect();
            for &a in &snapshot {
                for &b in &snapshot {
                    let p = m.op(a, b);
                    if !known[p] {
                        known[p] = true;
                        chain.push((p, Derivation::Product(a, b)));
                        progress = true;
                    }
                }
            }
        }
        // introduce the smallest unknown element as a fresh generator
        if let Some(g) = (0..n).find(|&x| !known[x]) {
            known[g] = true;
            chain.push((g, Derivation::Generator));
        }
    }
    chain
}

/// All identity-preserving multiplicative maps `m → n`, via backtracking
/// over a generating set of `m`. With `surjective_only`, keeps surjections.
pub fn enumerate_homs(m: &Monoid, n: &Monoid, surjective_only: bool) -> Vec<Hom> {
    let chain = derivation_chain(m);
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; m.order()];
    backtrack_homs(m, n, &chain, 0, &mut map, &mut out, surjective_only);
    out
}

fn backtrack_homs(
    m: &Monoid,
    n: &Monoid,
    chain: &[(usize, Derivation)],
    depth: usize,
    map: &mut Vec<usize>,
    out: &mut Vec<Hom>,
    surjective_only: bool,
) {
    if depth == chain.len() {
        // derivation consistency is necessary but not sufficient; confirm
        // multiplicativity over all pairs before emitting
        for i in m.elements() {
            for j in m.elements() {
                if map[m.op(i, j)] != n.op(map[i], map[j]) {
                    return;
                }
            }
        }
        let hom = Hom {
            dom: m.clone(),
            cod: n.clone(),
            map: map.clone(),
        };
        if !surjective_only || hom.is_surjective() {
            out.push(hom);
        }
        return;
    }
    let (elem, ref derivation) = chain[depth];
    match derivation {
        Derivation::Identity => {
            map[elem] = n.identity();
            backtrack_homs(m, n, chain, depth + 1, map, out, surjective_only);
            map[elem] = usize::MAX;
        }
        Derivation::Product(a, b) => {
            let forced = n.op(map[*a], map[*b]);
            map[elem] = forced;
            backtrack_homs(m, n, chain, depth + 1, map, out, surjective_only);
            map[elem] = usize::MAX;
        }
        Derivation::Generator => {
            for v in n.elements() {
                map[elem] = v;
                backtrack_homs(m, n, chain, depth + 1, map, out, surjective_only);
            }
            map[elem] = usize::MAX;
        }
    }
}

/// Isomorphism test with witness: invariant prefilters, then backtracking
/// over identity-fixing bijections.
pub fn are_isomorphic(m: &Monoid, n: &Monoid) -> Option<Hom> {
    if m.order() != n.order() {
        return None;
    }
    if m.profile() != n.profile() {
        return None;
    }
    // candidates[i]: elements of n whose invariants match element i of m
    let candidates: Vec<Vec<usize>> = m
        .elements()
        .map(|i| {
            let p = m.element_profile(i);
            n.elements()
                .filter(|&j| n.element_profile(j) == p)
                .collect()
        })
        .collect();
    let mut assignment = vec![usize::MAX; m.order()];
    let mut used = vec![false; n.order()];
    assignment[m.identity()] = n.identity();
    used[n.identity()] = true;
    if backtrack_iso(m, n, &candidates, 1, &mut assignment, &mut used) {
        Some(Hom::new_unchecked(m.clone(), n.clone(), assignment))
    } else {
        None
    }
}

fn backtrack_iso(
    m: &Monoid,
    n: &Monoid,
    candidates: &[Vec<usize>],
    next: usize,
    assignment: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if next == m.order() {
        // the pruning below is partial; confirm multiplicativity in full
        for i in m.elements() {
            for j in m.elements() {
                if assignment[m.op(i, j)] != n.op(assignment[i], assignment[j]) {
                    return false;
                }
            }
        }
        return true;
    }
    'cand: for &v in &candidates[next] {
        if used[v] {
            continue;
        }
        // prune on products with already-assigned elements where determined
        for a in 0..m.order() {
            let av = if a == next { v } else { assignment[a] };
            if av == usize::MAX {
                continue;
            }
            for (x, xv, y, yv) in [(next, v, a, av), (a, av, next, v)] {
                let prod = m.op(x, y);
                let pv = if prod == next { v } else { assignment[prod] };
                if pv != usize::MAX && pv != n.op(xv, yv) {
                    continue 'cand;
                }
            }
        }
        assignment[next] = v;
        used[v] = true;
        if backtrack_iso(m, n, candidates, next + 1, assignment, used) {
            return true;
        }
        assignment[next] = usize::MAX;
        used[v] = false;
    }
    false
}

/// Surjective homomorphism `Z4 → Z2`, reduction mod 2 — a recurring fixture.
pub fn mod2_reduction() -> Hom {
    Hom::new_unchecked(Monoid::cyclic(4), Monoid::cyclic(2), vec![0, 1, 0, 1])
}
