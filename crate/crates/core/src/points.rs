//! Points (split epimorphisms with a chosen section), generalized points
//! (composable pairs with surjective composite), and the Schreier-theoretic
//! checkers on both.
//!
//! Decompositions are written kernel-element-first: `a = k + s(f(a))` for
//! points and `a = k + g(c)` for generalized points. The side matters for
//! noncommutative monoids; no right-handed variant exists here.
//!
//! Every checker comes in two implementations: the default one works off
//! precomputed fiber/kernel translation tables, and [`literal`] scans the
//! definition verbatim. The two must agree on every instance; the
//! verification suites enforce this corpus-wide.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hom::{compose, image, kernel, Hom};
use crate::monoid::{generated_submonoid, Monoid, Submonoid};

/// Outcome of a decision procedure, with a witness on failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decision<W> {
    pub holds: bool,
    pub witness: Option<W>,
}

impl<W> Decision<W> {
    pub fn pass() -> Decision<W> {
        Decision {
            holds: true,
            witness: None,
        }
    }

    pub fn fail(witness: W) -> Decision<W> {
        Decision {
            holds: false,
            witness: Some(witness),
        }
    }
}

/// An element with zero or several kernel decompositions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BadDecomposition {
    pub element: usize,
    pub decompositions: usize,
}

/// A pair `(a, c)` violating the generalized Schreier condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BadGpDecomposition {
    pub element: usize,
    pub source: usize,
    pub decompositions: usize,
}

/// A base element with no representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NoRepresentative {
    pub element: usize,
}

/// Why a Schreier epimorphism fails to be regular.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RegularityFailure {
    NoRepresentative { element: usize },
    NotClosed { left: usize, right: usize },
}

/// An element outside the submonoid generated by the given parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NotGenerated {
    pub element: usize,
}

/// A split epimorphism `f: A → B` with a chosen section `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    f: Hom,
    s: Hom,
}

impl Point {
    pub fn new(f: Hom, s: Hom) -> Result<Point> {
        if s.dom() != f.cod() || s.cod() != f.dom() {
            return Err(Error::ComposeMismatch);
        }
        for b in f.cod().elements() {
            let got = f.apply(s.apply(b));
            if got != b {
                return Err(Error::NotASection { b, got });
            }
        }
        Ok(Point { f, s })
    }

    pub fn f(&self) -> &Hom {
        &self.f
    }

    pub fn s(&self) -> &Hom {
        &self.s
    }

    /// The total object A of `f: A → B`.
    pub fn total(&self) -> &Monoid {
        self.f.dom()
    }

    pub fn base(&self) -> &Monoid {
        self.f.cod()
    }
}

/// A composable pair `(f: A → B, g: C → A)` whose composite `fg` is
/// surjective.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedPoint {
    f: Hom,
    g: Hom,
    composite: Hom,
}

impl GeneralizedPoint {
    pub fn new(f: Hom, g: Hom) -> Result<GeneralizedPoint> {
        if g.cod() != f.dom() {
            return Err(Error::ComposeMismatch);
        }
        let composite = compose(&f, &g)?;
        if !composite.is_surjective() {
            let missing = (0..f.cod().order())
                .find(|&b| !composite.map().contains(&b))
                .unwrap_or(0);
            return Err(Error::NotSurjective { missing });
        }
        Ok(GeneralizedPoint { f, g, composite })
    }

    pub fn f(&self) -> &Hom {
        &self.f
    }

    pub fn g(&self) -> &Hom {
        &self.g
    }

    /// The composite `fg: C → B`.
    pub fn composite(&self) -> &Hom {
        &self.composite
    }

    /// The middle object A.
    pub fn apex(&self) -> &Monoid {
        self.f.dom()
    }

    pub fn base(&self) -> &Monoid {
        self.f.cod()
    }

    /// The source object C of `g`.
    pub fn source(&self) -> &Monoid {
        self.g.dom()
    }

    /// Whether the composite is the identity, i.e. the pair is a point in
    /// disguise.
    pub fn is_split(&self) -> bool {
        self.composite.is_identity()
    }

    /// For a split pair, the point it came from.
    pub fn as_point(&self) -> Option<Point> {
        if self.is_split() {
            Some(Point {
                f: self.f.clone(),
                s: self.g.clone(),
            })
        } else {
            None
        }
    }
}

/// A morphism of generalized points: a triple making both squares commute.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GpMorphism {
    source: GeneralizedPoint,
    target: GeneralizedPoint,
    alpha: Hom,
    beta: Hom,
    gamma: Hom,
}

impl GpMorphism {
    pub fn new(
        source: GeneralizedPoint,
        target: GeneralizedPoint,
        alpha: Hom,
        beta: Hom,
        gamma: Hom,
    ) -> Result<GpMorphism> {
        if alpha.dom() != source.apex()
            || alpha.cod() != target.apex()
            || beta.dom() != source.base()
            || beta.cod() != target.base()
            || gamma.dom() != source.source()
            || gamma.cod() != target.source()
        {
            return Err(Error::ComposeMismatch);
        }
        if compose(&alpha, source.g())? != compose(target.g(), &gamma)? {
            return Err(Error::SquareNotCommuting {
                which: "alpha∘g = g'∘gamma",
            });
        }
        if compose(&beta, source.f())? != compose(target.f(), &alpha)? {
            return Err(Error::SquareNotCommuting {
                which: "beta∘f = f'∘alpha",
            });
        }
        Ok(GpMorphism {
            source,
            target,
            alpha,
            beta,
            gamma,
        })
    }

    pub fn source(&self) -> &GeneralizedPoint {
        &self.source
    }

    pub fn target(&self) -> &GeneralizedPoint {
        &self.target
    }

    pub fn alpha(&self) -> &Hom {
        &self.alpha
    }

    pub fn beta(&self) -> &Hom {
        &self.beta
    }

    pub fn gamma(&self) -> &Hom {
        &self.gamma
    }
}

/// Views a point as the generalized point with `C = B` and `fg = 1`.
pub fn as_generalized(p: &Point) -> GeneralizedPoint {
    GeneralizedPoint {
        f: p.f.clone(),
        g: p.s.clone(),
        composite: Hom::identity(p.base()),
    }
}

/// Do the given submonoids jointly generate the whole of `m`? In monoids
/// this is exactly "jointly strongly epic" for the corresponding family of
/// morphisms: the least subobject through which they all factor is the
/// submonoid generated by the union of their images.
pub fn jointly_strongly_epic(m: &Monoid, parts: &[&Submonoid]) -> Result<Decision<NotGenerated>> {
    if parts.iter().any(|p| p.ambient() != m) {
        return Err(Error::AmbientMismatch);
    }
    let seed: Vec<usize> = parts
        .iter()
        .flat_map(|p| p.members().iter().copied())
        .collect();
    let generated = generated_submonoid(m, &seed)?;
    match m.elements().find(|&x| !generated.contains(x)) {
        None => Ok(Decision::pass()),
        Some(element) => Ok(Decision::fail(NotGenerated { element })),
    }
}

/// Strongness of a generalized point: `g` and the kernel of `f` are
/// jointly strongly epic.
pub fn is_strong_gp(gp: &GeneralizedPoint) -> Decision<NotGenerated> {
    let k = kernel(gp.f());
    let im = image(gp.g());
    jointly_strongly_epic(gp.apex(), &[&k, &im]).expect("parts live in the apex by construction")
}

/// Precomputed translation tables for the Schreier checkers on one
/// homomorphism `f`: its kernel, its fibers, and for every translator `t`
/// the count of kernel decompositions `k + t = x`.
pub struct SchreierTables {
    kernel: Vec<usize>,
    fibers: Vec<Vec<usize>>,
    /// counts[t][x] = #{k ∈ Ker f | k · t = x}
    counts: Vec<Vec<u32>>,
}

impl SchreierTables {
    pub fn new(f: &Hom) -> SchreierTables {
        let a = f.dom();
        let kernel: Vec<usize> = kernel(f).members().to_vec();
        let fibers: Vec<Vec<usize>> = (0..f.cod().order()).map(|b| f.fiber(b)).collect();
        let counts: Vec<Vec<u32>> = a
            .elements()
            .map(|t| {
                let mut row = vec![0u32; a.order()];
                for &k in &kernel {
                    row[a.op(k, t)] += 1;
                }
                row
            })
            .collect();
        SchreierTables {
            kernel,
            fibers,
            counts,
        }
    }

    pub fn kernel(&self) -> &[usize] {
        &self.kernel
    }

    #[inline]
    fn count(&self, t: usize, x: usize) -> usize {
        self.counts[t][x] as usize
    }
}

/// Schreier point check: every `a` decomposes uniquely as `k + s(f(a))`
/// with `k` in the kernel.
pub fn is_schreier_point(p: &Point) -> Decision<BadDecomposition> {
    is_schreier_point_with(&SchreierTables::new(p.f()), p)
}

/// Table-driven variant for callers checking many sections over one `f`.
pub fn is_schreier_point_with(tables: &SchreierTables, p: &Point) -> Decision<BadDecomposition> {
    for a in p.total().elements() {
        let t = p.s.apply(p.f.apply(a));
        let decompositions = tables.count(t, a);
        if decompositions != 1 {
            return Decision::fail(BadDecomposition {
                element: a,
                decompositions,
            });
        }
    }
    Decision::pass()
}

/// Representatives of `b` under a surjection `f`: elements `a` of the
/// fiber such that every `a'` in the fiber decomposes uniquely as `k + a`.
pub fn representatives(f: &Hom, b: usize) -> Result<Vec<usize>> {
    representatives_with(&SchreierTables::new(f), f, b)
}

pub fn representatives_with(tables: &SchreierTables, f: &Hom, b: usize) -> Result<Vec<usize>> {
    surjective_or_err(f)?;
    if b >= f.cod().order() {
        return Err(Error::ElementOutOfRange { element: b });
    }
    let fiber = &tables.fibers[b];
    Ok(fiber
        .iter()
        .copied()
        .filter(|&a| fiber.iter().all(|&a2| tables.count(a, a2) == 1))
        .collect())
}

/// Schreier epimorphism: every base element has a representative.
pub fn is_schreier_epi(f: &Hom) -> Result<Decision<NoRepresentative>> {
    is_schreier_epi_with(&SchreierTables::new(f), f)
}

pub fn is_schreier_epi_with(
    tables: &SchreierTables,
    f: &Hom,
) -> Result<Decision<NoRepresentative>> {
    surjective_or_err(f)?;
    for b in f.cod().elements() {
        if representatives_with(tables, f, b)?.is_empty() {
            return Ok(Decision::fail(NoRepresentative { element: b }));
        }
    }
    Ok(Decision::pass())
}

/// Regular Schreier epimorphism: Schreier, and the set of all
/// representatives is a submonoid of the domain.
pub fn is_regular_schreier_epi(f: &Hom) -> Result<Decision<RegularityFailure>> {
    is_regular_schreier_epi_with(&SchreierTables::new(f), f)
}

pub fn is_regular_schreier_epi_with(
    tables: &SchreierTables,
    f: &Hom,
) -> Result<Decision<RegularityFailure>> {
    surjective_or_err(f)?;
    let mut rep_set = Vec::new();
    for b in f.cod().elements() {
        let reps = representatives_with(tables, f, b)?;
        if reps.is_empty() {
            return Ok(Decision::fail(RegularityFailure::NoRepresentative {
                element: b,
            }));
        }
        rep_set.extend(reps);
    }
    rep_set.sort_unstable();
    // the identity is always a representative of the base identity, so
    // only closure under the operation can fail
    debug_assert!(rep_set.contains(&f.dom().identity()));
    let a = f.dom();
    for &x in &rep_set {
        for &y in &rep_set {
            if rep_set.binary_search(&a.op(x, y)).is_err() {
                return Ok(Decision::fail(RegularityFailure::NotClosed {
                    left: x,
                    right: y,
                }));
            }
        }
    }
    Ok(Decision::pass())
}

/// The full representative set of a surjection, across all base elements.
/// Fails if the set is not a submonoid; see [`is_regular_schreier_epi`].
pub fn representative_set(f: &Hom) -> Result<Submonoid> {
    let tables = SchreierTables::new(f);
    surjective_or_err(f)?;
    let mut rep_set = Vec::new();
    for b in f.cod().elements() {
        rep_set.extend(representatives_with(&tables, f, b)?);
    }
    rep_set.sort_unstable();
    Submonoid::new(f.dom().clone(), rep_set)
}

/// Generalized Schreier check: for every `a` and `c` with `f(a) = fg(c)`,
/// a unique kernel element `k` has `a = k + g(c)`.
pub fn is_schreier_gp(gp: &GeneralizedPoint) -> Decision<BadGpDecomposition> {
    is_schreier_gp_with(&SchreierTables::new(gp.f()), gp)
}

pub fn is_schreier_gp_with(
    tables: &SchreierTables,
    gp: &GeneralizedPoint,
) -> Decision<BadGpDecomposition> {
    let f = gp.f();
    let fg = gp.composite();
    for a in gp.apex().elements() {
        let fa = f.apply(a);
        for c in gp.source().elements() {
            if fg.apply(c) != fa {
                continue;
            }
            let decompositions = tables.count(gp.g().apply(c), a);
            if decompositions != 1 {
                return Decision::fail(BadGpDecomposition {
                    element: a,
                    source: c,
                    decompositions,
                });
            }
        }
    }
    Decision::pass()
}

fn surjective_or_err(f: &Hom) -> Result<()> {
    let mut hit = vec![false; f.cod().order()];
    for &v in f.map() {
        hit[v] = true;
    }
    match hit.iter().position(|&b| !b) {
        None => Ok(()),
        Some(missing) => Err(Error::HomNotSurjective { missing }),
    }
}

/// Definition-literal scans of the same checkers, kept deliberately naive.
/// These are the oracles the table-driven implementations are verified
/// against, instance by instance.
pub mod literal {
    use super::*;

    pub fn is_schreier_point(p: &Point) -> Decision<BadDecomposition> {
        let a_monoid = p.total();
        let k = kernel(p.f());
        for a in a_monoid.elements() {
            let t = p.s().apply(p.f().apply(a));
            let decompositions = k
                .members()
                .iter()
                .filter(|&&x| a_monoid.op(x, t) == a)
                .count();
            if decompositions != 1 {
                return Decision::fail(BadDecomposition {
                    element: a,
                    decompositions,
                });
            }
        }
        Decision::pass()
    }

    pub fn representatives(f: &Hom, b: usize) -> Result<Vec<usize>> {
        super::surjective_or_err(f)?;
        if b >= f.cod().order() {
            return Err(Error::ElementOutOfRange { element: b });
        }
        let a_monoid = f.dom();
        let k = kernel(f);
        let fiber = f.fiber(b);
        Ok(fiber
            .iter()
            .copied()
            .filter(|&a| {
                fiber.iter().all(|&a2| {
                    k.members()
                        .iter()
                        .filter(|&&x| a_monoid.op(x, a) == a2)
                        .count()
                        == 1
                })
            })
            .collect())
    }

    pub fn is_schreier_epi(f: &Hom) -> Result<Decision<NoRepresentative>> {
        super::surjective_or_err(f)?;
        for b in f.cod().elements() {
            if representatives(f, b)?.is_empty() {
                return Ok(Decision::fail(NoRepresentative { element: b }));
            }
        }
        Ok(Decision::pass())
    }

    pub fn is_regular_schreier_epi(f: &Hom) -> Result<Decision<RegularityFailure>> {
        super::surjective_or_err(f)?;
        let mut rep_set = Vec::new();
        for b in f.cod().elements() {
            let reps = representatives(f, b)?;
            if reps.is_empty() {
                return Ok(Decision::fail(RegularityFailure::NoRepresentative {
                    element: b,
                }));
            }
            rep_set.extend(reps);
        }
        rep_set.sort_unstable();
        let a = f.dom();
        for &x in &rep_set {
            for &y in &rep_set {
                if rep_set.binary_search(&a.op(x, y)).is_err() {
                    return Ok(Decision::fail(RegularityFailure::NotClosed {
                        left: x,
                        right: y,
                    }));
                }
            }
        }
        Ok(Decision::pass())
    }

    pub fn is_schreier_gp(gp: &GeneralizedPoint) -> Decision<BadGpDecomposition> {
        let a_monoid = gp.apex();
        let k = kernel(gp.f());
        for a in a_monoid.elements() {
            for c in gp.source().elements() {
                if gp.composite().apply(c) != gp.f().apply(a) {
                    continue;
                }
                let gc = gp.g().apply(c);
                let decompositions = k
                    .members()
                    .iter()
                    .filter(|&&x| a_monoid.op(x, gc) == a)
                    .count();
                if decompositions != 1 {
                    return Decision::fail(BadGpDecomposition {
                        element: a,
                        source: c,
                        decompositions,
                    });
                }
            }
        }
        Decision::pass()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limits::{pair_index, product};

    fn z(n: usize) -> Monoid {
        Monoid::cyclic(n)
    }

    /// The projection point (π₂: Z2×Z2 → Z2, y ↦ (0, y)).
    fn projection_point() -> Point {
        let z2 = z(2);
        let (p, _, p2) = product(&z2, &z2);
        let s = Hom::new(
            z2.clone(),
            p.clone(),
            (0..2).map(|y| pair_index(&z2, 0, y)).collect(),
        )
        .unwrap();
        Point::new(p2, s).unwrap()
    }

    /// The split epi chain(3) → chain(2) collapsing the middle element,
    /// with the evident section. Not a Schreier point.
    fn chain_point() -> Point {
        let a = Monoid::chain(3);
        let b = Monoid::chain(2);
        let f = Hom::new(a.clone(), b.clone(), vec![0, 0, 1]).unwrap();
        let s = Hom::new(b, a, vec![0, 2]).unwrap();
        Point::new(f, s).unwrap()
    }

    #[test]
    fn point_validation_rejects_non_sections() {
        let z2 = z(2);
        let f = Hom::zero(&z2, &z2);
        let s = Hom::identity(&z2);
        assert!(matches!(
            Point::new(f, s),
            Err(Error::NotASection { b: 1, got: 0 })
        ));
    }

    #[test]
    fn as_generalized_gives_split_gp() {
        let id_point = Point::new(Hom::identity(&z(3)), Hom::identity(&z(3))).unwrap();
        let gp = as_generalized(&id_point);
        assert!(gp.is_split());
        assert!(gp.composite().is_identity());

        let gp = as_generalized(&projection_point());
        assert!(gp.is_split());
        assert_eq!(gp.source(), &z(2));

        let over_z1 = Point::new(
            Hom::zero(&z(4), &Monoid::trivial()),
            Hom::zero(&Monoid::trivial(), &z(4)),
        )
        .unwrap();
        let gp = as_generalized(&over_z1);
        assert_eq!(gp.source(), &Monoid::trivial());
    }

    #[test]
    fn jointly_strongly_epic_examples() {
        let z4 = z(4);
        let all = generated_submonoid(&z4, &[1]).unwrap();
        assert!(jointly_strongly_epic(&z4, &[&all]).unwrap().holds);

        let evens = generated_submonoid(&z4, &[2]).unwrap();
        let d = jointly_strongly_epic(&z4, &[&evens, &evens]).unwrap();
        assert!(!d.holds);
        assert_eq!(d.witness, Some(NotGenerated { element: 1 }));

        assert!(jointly_strongly_epic(&z4, &[&evens, &all]).unwrap().holds);

        let z3 = z(3);
        let sub_of_other = generated_submonoid(&z3, &[]).unwrap();
        assert!(matches!(
            jointly_strongly_epic(&z4, &[&sub_of_other]),
            Err(Error::AmbientMismatch)
        ));
    }

    #[test]
    fn schreier_point_examples() {
        // any point over the trivial monoid is Schreier: k = a is forced
        let over_z1 = Point::new(
            Hom::zero(&z(4), &Monoid::trivial()),
            Hom::zero(&Monoid::trivial(), &z(4)),
        )
        .unwrap();
        assert!(is_schreier_point(&over_z1).holds);

        assert!(is_schreier_point(&projection_point()).holds);

        let d = is_schreier_point(&chain_point());
        assert!(!d.holds);
        // the bottom element decomposes as 1·0 and a·0 — two ways
        assert_eq!(
            d.witness,
            Some(BadDecomposition {
                element: 2,
                decompositions: 2
            })
        );
    }

    #[test]
    fn representatives_examples() {
        let id = Hom::identity(&z(3));
        for b in 0..3 {
            assert_eq!(representatives(&id, b).unwrap(), vec![b]);
        }

        let proj = projection_point();
        assert_eq!(representatives(proj.f(), 1).unwrap(), vec![1, 3]);

        let chain = chain_point();
        assert_eq!(representatives(chain.f(), 1).unwrap(), Vec::<usize>::new());

        assert!(matches!(
            representatives(&Hom::zero(&z(2), &z(2)), 0),
            Err(Error::HomNotSurjective { missing: 1 })
        ));
    }

    #[test]
    fn schreier_epi_examples() {
        assert!(is_schreier_epi(&Hom::identity(&z(4))).unwrap().holds);
        assert!(is_schreier_epi(projection_point().f()).unwrap().holds);
        let d = is_schreier_epi(chain_point().f()).unwrap();
        assert!(!d.holds);
        assert_eq!(d.witness, Some(NoRepresentative { element: 1 }));
    }

    #[test]
    fn regular_schreier_examples() {
        let id = Hom::identity(&z(4));
        assert!(is_regular_schreier_epi(&id).unwrap().holds);
        assert_eq!(representative_set(&id).unwrap().members(), &[0, 1, 2, 3]);

        assert!(is_regular_schreier_epi(projection_point().f())
            .unwrap()
            .holds);

        let d = is_regular_schreier_epi(chain_point().f()).unwrap();
        assert_eq!(
            d.witness,
            Some(RegularityFailure::NoRepresentative { element: 1 })
        );
    }

    #[test]
    fn schreier_gp_examples() {
        // split reduction: a Schreier point stays Schreier as a GP
        let gp = as_generalized(&projection_point());
        assert!(is_schreier_gp(&gp).holds);

        // ... and the chain point stays non-Schreier
        let gp = as_generalized(&chain_point());
        assert!(!is_schreier_gp(&gp).holds);

        // no g at all makes chain(3) → chain(2) part of a Schreier GP
        let f = chain_point().f().clone();
        for order in 1..=3 {
            for c in crate::enumerate::enumerate_monoids(order, true) {
                for g in crate::hom::enumerate_homs(&c, f.dom(), false) {
                    if let Ok(gp) = GeneralizedPoint::new(f.clone(), g) {
                        assert!(!is_schreier_gp(&gp).holds);
                    }
                }
            }
        }
    }

    #[test]
    fn split_reduction_on_small_points() {
        // the point condition is the fg = 1 specialization of the GP one
        for p in [projection_point(), chain_point()] {
            assert_eq!(
                is_schreier_point(&p).holds,
                is_schreier_gp(&as_generalized(&p)).holds
            );
        }
    }

    #[test]
    fn literal_and_tabled_checkers_agree_on_fixtures() {
        for p in [projection_point(), chain_point()] {
            assert_eq!(is_schreier_point(&p), literal::is_schreier_point(&p));
            let gp = as_generalized(&p);
            assert_eq!(is_schreier_gp(&gp), literal::is_schreier_gp(&gp));
            let f = p.f();
            assert_eq!(
                is_schreier_epi(f).unwrap(),
                literal::is_schreier_epi(f).unwrap()
            );
            assert_eq!(
                is_regular_schreier_epi(f).unwrap(),
                literal::is_regular_schreier_epi(f).unwrap()
            );
            for b in f.cod().elements() {
                assert_eq!(
                    representatives(f, b).unwrap(),
                    literal::representatives(f, b).unwrap()
                );
            }
        }
    }

    #[test]
    fn schreier_implies_strong_on_fixtures() {
        let gp = as_generalized(&projection_point());
        assert!(is_schreier_gp(&gp).holds);
        assert!(is_strong_gp(&gp).holds);

        // chain point: strong but not Schreier — kernel {0,1} plus the
        // section image {0,2} generates all of chain(3)
        let gp = as_generalized(&chain_point());
        assert!(is_strong_gp(&gp).holds);
        assert!(!is_schreier_gp(&gp).holds);
    }

    #[test]
    fn trivial_kernel_makes_every_fiber_element_a_representative() {
        let f = Hom::identity(&z(4));
        for b in 0..4 {
            assert_eq!(representatives(&f, b).unwrap(), f.fiber(b));
        }
    }
}
