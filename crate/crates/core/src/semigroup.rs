//! Sampled sub-semigroups of Z^2: minimal generators, finite-generation
//! verdicts, and the segment estimate for the level-one slice of the cone.
//!
//! Samples are complete per level up to `kmax` and nothing is extrapolated
//! beyond that: new minimal generators can appear at every level, so
//! generators are only certified within the sampled range, and a finiteness
//! verdict is issued only from witnessed ray generators.

use crate::{Rat, scalar::Scalar};

/// Levels 1..=kmax of a value semigroup, each slice strictly increasing and
/// complete for its level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupSample {
    kmax: usize,
    slices: Vec<Vec<usize>>,
    degree_hint: Option<usize>,
}

/// Fin-gen verdict from witnessed ray generators. The cone of a degree-`d`
/// curve valuation is spanned by `(1,0)` and `(1,d)`; the semigroup is
/// finitely generated exactly when both rays carry semigroup elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FgVerdict {
    Finite {
        zero_ray_witness: (usize, usize),
        degree_ray_witness: (usize, usize),
    },
    Unknown {
        kmax: usize,
        missing_rays: Vec<(usize, usize)>,
    },
}

impl SemigroupSample {
    /// `slices[i]` is the level `i + 1` slice.
    pub fn new(kmax: usize, slices: Vec<Vec<usize>>) -> Self {
        assert_eq!(slices.len(), kmax, "one slice per level 1..=kmax");
        for s in &slices {
            assert!(s.windows(2).all(|w| w[0] < w[1]), "slices are strictly increasing");
        }
        Self {
            kmax,
            slices,
            degree_hint: None,
        }
    }

    pub fn with_degree_hint(mut self, d: usize) -> Self {
        self.degree_hint = Some(d);
        self
    }

    pub fn kmax(&self) -> usize {
        self.kmax
    }

    pub fn degree_hint(&self) -> Option<usize> {
        self.degree_hint
    }

    /// The level-k slice, k in 1..=kmax.
    pub fn slice(&self, k: usize) -> &[usize] {
        &self.slices[k - 1]
    }

    pub fn contains(&self, k: usize, b: usize) -> bool {
        k >= 1 && k <= self.kmax && self.slice(k).binary_search(&b).is_ok()
    }

    /// Elements `(k, b)` that are not sums of two sample elements with
    /// positive levels. Exhaustive for every k <= kmax because the slices
    /// are complete.
    pub fn minimal_generators(&self) -> Vec<(usize, usize)> {
        let mut gens = Vec::new();
        for k in 1..=self.kmax {
            for &b in self.slice(k) {
                let mut decomposable = false;
                'search: for k1 in 1..k {
                    let k2 = k - k1;
                    for &b1 in self.slice(k1) {
                        if b1 > b {
                            break;
                        }
                        if self.contains(k2, b - b1) {
                            decomposable = true;
                            break 'search;
                        }
                    }
                }
                if !decomposable {
                    gens.push((k, b));
                }
            }
        }
        gens
    }

    /// Finite iff both ray generators are witnessed: some `(k, 0)` and some
    /// `(k', d k')` in the sample.
    pub fn fg_verdict(&self, d: usize) -> FgVerdict {
        assert!(
            self.degree_hint.is_none_or(|h| h == d),
            "degree hint disagrees with the supplied degree"
        );
        let zero_ray = (1..=self.kmax)
            .find(|&k| self.contains(k, 0))
            .map(|k| (k, 0));
        let degree_ray = (1..=self.kmax)
            .find(|&k| self.contains(k, d * k))
            .map(|k| (k, d * k));
        match (zero_ray, degree_ray) {
            (Some(z), Some(dr)) => FgVerdict::Finite {
                zero_ray_witness: z,
                degree_ray_witness: dr,
            },
            (z, dr) => {
                let mut missing = Vec::new();
                if z.is_none() {
                    missing.push((1, 0));
                }
                if dr.is_none() {
                    missing.push((1, d));
                }
                FgVerdict::Unknown {
                    kmax: self.kmax,
                    missing_rays: missing,
                }
            }
        }
    }

    /// `[min(S_kmax)/kmax, max(S_kmax)/kmax]`, an inner approximation of the
    /// level-one segment of the cone at the deepest sampled level.
    pub fn segment_estimate(&self) -> (Rat, Rat) {
        assert!(self.kmax >= 1);
        let last = self.slice(self.kmax);
        assert!(!last.is_empty(), "slices of a nonzero algebra are non-empty");
        let k = Rat::from_i64(self.kmax as i64);
        let lo = Rat::from_i64(*last.first().unwrap() as i64) / k.clone();
        let hi = Rat::from_i64(*last.last().unwrap() as i64) / k;
        (lo, hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn sample(slices: &[&[usize]]) -> SemigroupSample {
        SemigroupSample::new(slices.len(), slices.iter().map(|s| s.to_vec()).collect())
    }

    #[test]
    fn full_staircase_has_two_generators() {
        let s = sample(&[&[0, 1], &[0, 1, 2], &[0, 1, 2, 3]]);
        assert_eq!(s.minimal_generators(), vec![(1, 0), (1, 1)]);
    }

    #[test]
    fn full_cone_slices_are_finite() {
        let d = 2;
        let s = sample(&[&[0, 1, 2], &[0, 1, 2, 3, 4], &[0, 1, 2, 3, 4, 5, 6]]);
        assert_eq!(
            s.fg_verdict(d),
            FgVerdict::Finite {
                zero_ray_witness: (1, 0),
                degree_ray_witness: (1, 2),
            }
        );
    }

    #[test]
    fn missing_ray_is_named() {
        // max order 4k - 2 never reaches the (1,4) ray
        let s = sample(&[&[0, 2, 3], &[0, 2, 3, 4, 5, 6]]);
        assert_eq!(
            s.fg_verdict(4),
            FgVerdict::Unknown {
                kmax: 2,
                missing_rays: vec![(1, 4)],
            }
        );
    }

    #[test]
    fn staircase_segment() {
        let s = sample(&[&[0, 1], &[0, 1, 2]]);
        let (lo, hi) = s.segment_estimate();
        assert_eq!(lo, Rat::from_i64(0));
        assert_eq!(hi, Rat::from_i64(1));
    }
}
