//! Deterministic corpora of small monoids with precomputed homomorphism
//! caches, and the instance streams (surjections, points, generalized
//! points) the suites run over.

use serde::Serialize;

use crate::enumerate::enumerate_monoids;
use crate::hom::{enumerate_homs, Hom};
use crate::monoid::Monoid;
use crate::par;
use crate::points::{GeneralizedPoint, Point};

/// Fixed default seed; every run is reproducible unless overridden.
pub const DEFAULT_SEED: u64 = 1729;

/// How many order-5 isomorphism classes a corpus keeps when `max_order`
/// reaches 5. Orders up to 4 are always exhaustive.
pub const DEFAULT_ORDER5_SAMPLE: usize = 40;

#[derive(Debug, Clone, Serialize)]
pub struct CorpusParams {
    pub max_order: usize,
    pub seed: u64,
    pub order5_sample: usize,
}

impl CorpusParams {
    pub fn new(max_order: usize) -> CorpusParams {
        CorpusParams {
            max_order,
            seed: DEFAULT_SEED,
            order5_sample: DEFAULT_ORDER5_SAMPLE,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> CorpusParams {
        self.seed = seed;
        self
    }
}

/// SplitMix64; fixed algorithm so seeded runs stay byte-identical across
/// releases.
pub(crate) struct SplitMix64(u64);

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform index below `n` (rejection-free modulo bias is acceptable
    /// at these magnitudes).
    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}

/// A generalized-point task: one surjection `f: A → B` paired with one
/// source monoid index; the generalized points of the task are all
/// `(f, g)` with `g` drawn from the hom cache and `fg` surjective.
#[derive(Debug, Clone)]
pub struct GpTask {
    pub f: Hom,
    pub source_idx: usize,
}

/// An enumerated corpus: one representative per isomorphism class up to
/// `max_order` (seeded sampling at order 5), with every homomorphism
/// between corpus members precomputed.
pub struct Corpus {
    params: CorpusParams,
    monoids: Vec<Monoid>,
    homs: Vec<Vec<Vec<Hom>>>,
}

impl Corpus {
    pub fn build(params: CorpusParams) -> Corpus {
        assert!(params.max_order >= 1);
        let mut monoids: Vec<Monoid> = Vec::new();
        for order in 1..=params.max_order.min(4) {
            monoids.extend(enumerate_monoids(order, true));
        }
        if params.max_order >= 5 {
            let all5 = enumerate_monoids(5, true);
            monoids.extend(sample(all5, params.order5_sample, params.seed));
        }
        let pairs: Vec<(usize, usize)> = (0..monoids.len())
            .flat_map(|i| (0..monoids.len()).map(move |j| (i, j)))
            .collect();
        let flat: Vec<Vec<Hom>> = par::map_collect(&pairs, |&(i, j)| {
            enumerate_homs(&monoids[i], &monoids[j], false)
        });
        let mut homs: Vec<Vec<Vec<Hom>>> = Vec::with_capacity(monoids.len());
        let mut it = flat.into_iter();
        for _ in 0..monoids.len() {
            homs.push((&mut it).take(monoids.len()).collect());
        }
        Corpus {
            params,
            monoids,
            homs,
        }
    }

    pub fn params(&self) -> &CorpusParams {
        &self.params
    }

    pub fn monoids(&self) -> &[Monoid] {
        &self.monoids
    }

    /// All homomorphisms from monoid `from` to monoid `to` (corpus indices).
    pub fn homs(&self, from: usize, to: usize) -> &[Hom] {
        &self.homs[from][to]
    }

    /// Every surjective homomorphism between corpus members.
    pub fn surjections(&self) -> Vec<Hom> {
        let mut out = Vec::new();
        for row in &self.homs {
            for cell in row {
                out.extend(cell.iter().filter(|h| h.is_surjective()).cloned());
            }
        }
        out
    }

    /// Every point: a surjection together with each of its sections.
    pub fn points(&self) -> Vec<Point> {
        let mut out = Vec::new();
        for (i, row) in self.homs.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                for f in cell.iter().filter(|h| h.is_surjective()) {
                    for s in &self.homs[j][i] {
                        if let Ok(p) = Point::new(f.clone(), s.clone()) {
                            out.push(p);
                        }
                    }
                }
            }
        }
        out
    }

    /// One task per (surjection, source monoid) pair; the generalized
    /// points of the corpus are exactly the union over tasks of
    /// [`Corpus::gps_for_task`].
    pub fn gp_tasks(&self) -> Vec<GpTask> {
        let mut out = Vec::new();
        for row in self.homs.iter() {
            for cell in row.iter() {
                for f in cell.iter().filter(|h| h.is_surjective()) {
                    for source_idx in 0..self.monoids.len() {
                        out.push(GpTask {
                            f: f.clone(),
                            source_idx,
                        });
                    }
                }
            }
        }
        out
    }

    /// The generalized points of one task: all `(f, g)` with `fg`
    /// surjective.
    pub fn gps_for_task(&self, task: &GpTask) -> Vec<GeneralizedPoint> {
        let apex_idx = self
            .index_of(task.f.dom())
            .expect("task surjection comes from the corpus");
        self.homs[task.source_idx][apex_idx]
            .iter()
            .filter_map(|g| GeneralizedPoint::new(task.f.clone(), g.clone()).ok())
            .collect()
    }

    pub fn index_of(&self, m: &Monoid) -> Option<usize> {
        self.monoids.iter().position(|x| x == m)
    }
}

/// Seeded sample of `k` monoids, re-sorted into canonical order.
fn sample(mut pool: Vec<Monoid>, k: usize, seed: u64) -> Vec<Monoid> {
    if pool.len() <= k {
        return pool;
    }
    let mut rng = SplitMix64::new(seed);
    // Fisher–Yates prefix
    for i in 0..k {
        let j = i + rng.below(pool.len() - i);
        pool.swap(i, j);
    }
    let mut chosen: Vec<Monoid> = pool.into_iter().take(k).collect();
    chosen.sort();
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_sizes_are_cumulative_class_counts() {
        assert_eq!(Corpus::build(CorpusParams::new(1)).monoids().len(), 1);
        assert_eq!(Corpus::build(CorpusParams::new(2)).monoids().len(), 3);
        assert_eq!(Corpus::build(CorpusParams::new(3)).monoids().len(), 10);
        assert_eq!(Corpus::build(CorpusParams::new(4)).monoids().len(), 45);
    }

    #[test]
    fn corpus_is_deterministic() {
        let a = Corpus::build(CorpusParams::new(3));
        let b = Corpus::build(CorpusParams::new(3));
        assert_eq!(a.monoids(), b.monoids());
        assert_eq!(a.homs(4, 7), b.homs(4, 7));
    }

    #[test]
    fn points_have_valid_sections() {
        let corpus = Corpus::build(CorpusParams::new(2));
        for p in corpus.points() {
            for b in p.base().elements() {
                assert_eq!(p.f().apply(p.s().apply(b)), b);
            }
        }
    }

    #[test]
    fn gp_tasks_yield_surjective_composites() {
        let corpus = Corpus::build(CorpusParams::new(2));
        let mut total = 0usize;
        for task in corpus.gp_tasks() {
            for gp in corpus.gps_for_task(&task) {
                assert!(gp.composite().is_surjective());
                total += 1;
            }
        }
        assert!(total > 0);
    }

    #[test]
    fn seeded_sampling_is_reproducible() {
        let pool = enumerate_monoids(4, true);
        let a = sample(pool.clone(), 10, 99);
        let b = sample(pool.clone(), 10, 99);
        let c = sample(pool, 10, 100);
        assert_eq!(a, b);
        assert_ne!(a, c);
    }
}
