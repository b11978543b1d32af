//! The graded algebra of a linear system of binary forms.
//!
//! A subspace `L` of the degree-`a` forms generates the graded ring whose
//! degree-`k` piece is the span `L^k` of all k-fold products from `L`. This
//! module computes those power spaces incrementally, extracts degree and
//! genus from the stabilized Hilbert data, slices value semigroups of the
//! order-of-vanishing valuations, and decides (semi-decides) whether such a
//! valuation has finitely generated value semigroup.
//!
//! The finiteness test is a membership test: the valuation at `Q` is
//! Khovanskii-finite exactly when some power space `L^k` contains the
//! `dk`-th power of the linear form vanishing at `Q`. Since no upper bound
//! on `k` is available in general, the caller supplies `kmax` and `Unknown`
//! is an honest outcome, never converted into a "no".

use crate::error::Error;
use crate::forms::{BinaryForm, PointP1, RationalRoots};
use crate::scalar::Scalar;
use crate::semigroup::SemigroupSample;
use crate::subspace::Subspace;
use crate::Rat;
use num_traits::{One, Zero};
use std::sync::Mutex;

/// Degree and arithmetic genus read off the stabilized Hilbert function
/// `dim L^k = d*k + 1 - g`, together with the first level from which the
/// affine fit held for every sampled k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveInvariants {
    pub degree: usize,
    pub genus: usize,
    pub stabilization_k: usize,
}

/// Outcome of the finiteness test at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KfVerdict {
    /// The least level whose power space contains the required linear power.
    Finite { witness_k: usize },
    /// No witness up to the searched bound; says nothing beyond it.
    Unknown { kmax_searched: usize },
    /// The hypotheses of the membership criterion do not hold for this
    /// system (its degree differs from its ambient degree even after
    /// removing the common factor).
    Unsupported { reason: String },
}

/// Classification by genus. For genus >= 2 the answer carries no existence
/// claim in either direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenusClass {
    HomogeneouslyKf,
    SomeKfValuationExists,
    NoGuarantee { genus: usize },
}

/// The constraint cutting out the locus of finiteness points at one level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocusConstraint {
    /// The power space is all of its ambient space; every point passes.
    EveryPoint,
    /// Monic gcd of the annihilator constraints, a form in the homogeneous
    /// coordinates (alpha, beta) of Q.
    Form(BinaryForm<Rat>),
}

/// Level-`k` locus data: the constraint form and its rational vanishing
/// points. The vanishing locus is exactly the set of Q whose linear power
/// lies in `L^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KfLocus {
    pub k: usize,
    pub degree: usize,
    pub constraint: LocusConstraint,
    pub roots: RationalRoots,
}

/// The ring of a linear system: `L` in canonical form plus the append-only
/// cache of its power spaces. Reads may happen concurrently; the cache
/// itself serializes extension behind a mutex.
#[derive(Debug)]
pub struct CurveAlgebra {
    ambient_degree: usize,
    powers: Mutex<Vec<Subspace<Rat>>>,
}

impl Clone for CurveAlgebra {
    fn clone(&self) -> Self {
        let powers = self.powers.lock().unwrap().clone();
        Self {
            ambient_degree: self.ambient_degree,
            powers: Mutex::new(powers),
        }
    }
}

impl PartialEq for CurveAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_degree == other.ambient_degree && self.base() == other.base()
    }
}

fn forms_to_vectors(forms: &[BinaryForm<Rat>]) -> Vec<Vec<Rat>> {
    forms.iter().map(|f| f.coeffs().to_vec()).collect()
}

fn subspace_forms(space: &Subspace<Rat>) -> Vec<BinaryForm<Rat>> {
    space
        .basis_rows()
        .map(|row| BinaryForm::new(row.to_vec()))
        .collect()
}

impl CurveAlgebra {
    /// The algebra of the span of `basis` inside the degree-`a` forms.
    pub fn new(ambient_degree: usize, basis: &[BinaryForm<Rat>]) -> Result<Self, Error> {
        for f in basis {
            if f.degree() != ambient_degree {
                return Err(Error::DegreeMismatch {
                    expected: ambient_degree,
                    got: f.degree(),
                });
            }
        }
        let base = Subspace::from_spanning(&forms_to_vectors(basis), ambient_degree + 1)?;
        if base.dim() == 0 {
            return Err(Error::EmptySpan);
        }
        let constants = Subspace::full(1).expect("dimension 1");
        Ok(Self {
            ambient_degree,
            powers: Mutex::new(vec![constants, base]),
        })
    }

    pub fn ambient_degree(&self) -> usize {
        self.ambient_degree
    }

    /// The canonical basis of `L` itself.
    pub fn base(&self) -> Subspace<Rat> {
        self.powers.lock().unwrap()[1].clone()
    }

    pub fn base_forms(&self) -> Vec<BinaryForm<Rat>> {
        subspace_forms(&self.base())
    }

    pub fn dim(&self) -> usize {
        self.base().dim()
    }

    /// The power space `L^k` inside the degree-`k*a` forms, built one level
    /// at a time as the span of `L^(k-1) * L` and cached.
    pub fn power_space(&self, k: usize) -> Subspace<Rat> {
        let mut cache = self.powers.lock().unwrap();
        while cache.len() <= k {
            let prev = subspace_forms(cache.last().unwrap());
            let base = subspace_forms(&cache[1]);
            let mut products = Vec::with_capacity(prev.len() * base.len());
            for f in &prev {
                for g in &base {
                    products.push(f.mul(g));
                }
            }
            let ambient = (cache.len()) * self.ambient_degree + 1;
            let next = Subspace::from_spanning(&forms_to_vectors(&products), ambient)
                .expect("products live in the expected degree");
            cache.push(next);
        }
        cache[k].clone()
    }

    /// `dim L^k` for k = 0..=kmax.
    pub fn hilbert(&self, kmax: usize) -> Vec<usize> {
        (0..=kmax).map(|k| self.power_space(k).dim()).collect()
    }

    /// Fits `dim L^k = d*k + 1 - g` on the longest terminal run of the
    /// Hilbert data. At least 3 consecutive equal differences are required;
    /// with fewer the fit is refused rather than guessed.
    pub fn invariants(&self, kmax: usize) -> Result<CurveInvariants, Error> {
        assert!(kmax >= 3, "invariants need kmax >= 3");
        let dims = self.hilbert(kmax);
        let d = dims[kmax] - dims[kmax - 1];
        let mut run_start = kmax;
        while run_start > 1 && dims[run_start - 1] - dims[run_start - 2] == d {
            run_start -= 1;
        }
        if kmax - run_start + 1 < 3 {
            return Err(Error::NotStabilized { kmax });
        }
        if d == 0 {
            return Err(Error::DegreeZero);
        }
        let g = (d * kmax + 1) as i64 - dims[kmax] as i64;
        if g < 0 {
            return Err(Error::NotStabilized { kmax });
        }
        Ok(CurveInvariants {
            degree: d,
            genus: g as usize,
            stabilization_k: run_start - 1,
        })
    }

    /// Divides off the gcd of a basis of `L`. The value semigroups of the
    /// original and the reduced algebra differ by the shear
    /// `(k, b) -> (k, b + k * ord_Q(h))`.
    pub fn reduce_common_factor(&self) -> (BinaryForm<Rat>, CurveAlgebra) {
        let forms = self.base_forms();
        let mut h = forms[0].clone();
        for f in &forms[1..] {
            h = h.gcd(f).expect("basis forms are nonzero");
        }
        let h = h.monic();
        if h.degree() == 0 {
            return (BinaryForm::new(vec![Rat::one()]), self.clone());
        }
        let reduced: Vec<BinaryForm<Rat>> = forms
            .iter()
            .map(|f| f.div_exact(&h).expect("h divides every basis form"))
            .collect();
        let a0 = self.ambient_degree - h.degree();
        let algebra = CurveAlgebra::new(a0, &reduced).expect("reduced span is nonzero");
        (h, algebra)
    }

    /// The set of orders of vanishing at `q` attained on `L^k`, computed by
    /// echelonizing a basis against the adic filtration of the linear form
    /// of `q`. Always has exactly `dim L^k` elements.
    pub fn attainable_orders(&self, k: usize, q: &PointP1) -> Vec<usize> {
        assert!(k >= 1, "attainable orders are sliced per level k >= 1");
        let space = self.power_space(k);
        let rows: Vec<Vec<Rat>> = subspace_forms(&space)
            .iter()
            .map(|f| f.adic_coefficients(q))
            .collect();
        let echelon = Subspace::from_spanning(&rows, k * self.ambient_degree + 1)
            .expect("power space is nonzero");
        let orders = echelon.pivots().to_vec();
        debug_assert_eq!(orders.len(), space.dim());
        orders
    }

    /// The sampled value semigroup of the order valuation at `q`: one
    /// complete slice per level 1..=kmax.
    pub fn value_semigroup(&self, q: &PointP1, kmax: usize) -> SemigroupSample {
        assert!(kmax >= 1);
        let slices = (1..=kmax).map(|k| self.attainable_orders(k, q)).collect();
        SemigroupSample::new(kmax, slices)
    }

    /// Common-factor reduction followed by the degree hypothesis check of
    /// the membership criterion. `auto_extend` switches between strict
    /// invariants at the caller's kmax and the self-extending variant.
    fn reduced_for_criterion(
        &self,
        kmax: usize,
        auto_extend: bool,
    ) -> Result<Result<(usize, CurveAlgebra), String>, Error> {
        let (h, reduced) = self.reduce_common_factor();
        let inv = if auto_extend {
            reduced.stable_invariants(kmax)?
        } else {
            reduced.invariants(kmax)?
        };
        let ambient = reduced.ambient_degree();
        if inv.degree != ambient {
            let mut reason = format!(
                "computed degree {} differs from ambient degree {} after common-factor reduction",
                inv.degree, ambient
            );
            if h.degree() > 0 {
                reason.push_str(&format!(" (common factor {h})"));
            }
            return Ok(Err(reason));
        }
        Ok(Ok((inv.degree, reduced)))
    }

    /// Searches levels 1..=kmax for one whose power space contains the
    /// `d*k`-th power of the linear form of `q`. The common factor of `L`
    /// is divided off first; this changes the semigroup only by a shear, so
    /// the verdict transfers.
    pub fn kf_test(&self, q: &PointP1, kmax: usize) -> Result<KfVerdict, Error> {
        assert!(kmax >= 3, "kf_test needs kmax >= 3 to fit the degree");
        let (d, reduced) = match self.reduced_for_criterion(kmax, false)? {
            Ok(v) => v,
            Err(reason) => return Ok(KfVerdict::Unsupported { reason }),
        };
        for k in 1..=kmax {
            let target = BinaryForm::linear_power(q, d * k);
            let space = reduced.power_space(k);
            if space.member(target.coeffs()).expect("matching ambient") {
                return Ok(KfVerdict::Finite { witness_k: k });
            }
        }
        Ok(KfVerdict::Unknown {
            kmax_searched: kmax,
        })
    }

    /// Like `invariants`, but extends kmax on its own (doubling, capped)
    /// instead of reporting the failure to stabilize.
    fn stable_invariants(&self, kmax_hint: usize) -> Result<CurveInvariants, Error> {
        let mut kmax = kmax_hint.max(3);
        loop {
            match self.invariants(kmax) {
                Err(Error::NotStabilized { .. }) if kmax < 64 => kmax = (kmax * 2).min(64),
                other => return other,
            }
        }
    }

    /// The locus form at level `k`: for each functional in a basis of the
    /// annihilator of `L^k`, pairing it with the coefficients of
    /// `(beta s - alpha t)^(dk)` yields a form in `(alpha, beta)`; their
    /// monic gcd G vanishes exactly on the points whose linear power lies
    /// in `L^k`.
    pub fn kf_locus(&self, k: usize) -> Result<KfLocus, Error> {
        assert!(k >= 1);
        let (d, reduced) = match self.reduced_for_criterion(k, true)? {
            Ok(v) => v,
            Err(reason) => return Err(Error::Unsupported { reason }),
        };
        let dk = d * k;
        let ann = reduced.power_space(k).annihilator();
        if ann.dim() == 0 {
            return Ok(KfLocus {
                k,
                degree: d,
                constraint: LocusConstraint::EveryPoint,
                roots: RationalRoots {
                    roots: Vec::new(),
                    residual_degree: 0,
                },
            });
        }
        let mut g: Option<BinaryForm<Rat>> = None;
        for phi in ann.basis_rows() {
            let constraint = constraint_form(phi, dk);
            debug_assert!(!constraint.is_zero());
            g = Some(match g {
                None => constraint,
                Some(prev) => prev.gcd(&constraint)?,
            });
        }
        let g = g.expect("annihilator has positive dimension").monic();
        let roots = g.rational_roots()?;
        Ok(KfLocus {
            k,
            degree: d,
            constraint: LocusConstraint::Form(g),
            roots,
        })
    }

    /// Genus classification: genus 0 curves are homogeneously finite, genus
    /// 1 curves still have some finite valuation, beyond that nothing is
    /// claimed.
    pub fn genus_classification(&self, kmax: usize) -> Result<GenusClass, Error> {
        let inv = self.invariants(kmax)?;
        Ok(match inv.genus {
            0 => GenusClass::HomogeneouslyKf,
            1 => GenusClass::SomeKfValuationExists,
            g => GenusClass::NoGuarantee { genus: g },
        })
    }
}

/// The pairing of a dual functional with the coefficient vector of the
/// generic linear power: sum_j phi_j * C(dk, j) * beta^(dk-j) * (-alpha)^j,
/// expressed as a binary form in (alpha, beta).
fn constraint_form(phi: &[Rat], dk: usize) -> BinaryForm<Rat> {
    let mut coeffs = vec![Rat::zero(); dk + 1];
    let mut binom = Rat::one();
    for (j, p) in phi.iter().enumerate() {
        if j > 0 {
            binom = binom * Rat::from_i64((dk - j + 1) as i64) / Rat::from_i64(j as i64);
        }
        if p.is_zero() {
            continue;
        }
        // alpha-exponent j, beta-exponent dk - j; coefficient index is
        // the beta-exponent under the descending-alpha ordering... the
        // alpha^j beta^(dk-j) monomial sits at index dk - j.
        let sign = if j % 2 == 0 { Rat::one() } else { -Rat::one() };
        coeffs[dk - j] = p * &binom * sign;
    }
    BinaryForm::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(ints: &[i64]) -> BinaryForm<Rat> {
        BinaryForm::new(ints.iter().map(|&x| Rat::from_i64(x)).collect())
    }

    fn pt(a: i64, b: i64) -> PointP1 {
        PointP1::from_integers(a, b).unwrap()
    }

    /// s^3, s^2 t, t^3
    fn cuspidal_cubic() -> CurveAlgebra {
        CurveAlgebra::new(3, &[form(&[1, 0, 0, 0]), form(&[0, 1, 0, 0]), form(&[0, 0, 0, 1])])
            .unwrap()
    }

    /// s^3 t, s^2 t^2, s^4 + t^4
    fn quartic() -> CurveAlgebra {
        CurveAlgebra::new(
            4,
            &[form(&[0, 1, 0, 0, 0]), form(&[0, 0, 1, 0, 0]), form(&[1, 0, 0, 0, 1])],
        )
        .unwrap()
    }

    /// s^2 t, s t^2, s^3 + t^3
    fn unit_root_cubic() -> CurveAlgebra {
        CurveAlgebra::new(3, &[form(&[0, 1, 0, 0]), form(&[0, 0, 1, 0]), form(&[1, 0, 0, 1])])
            .unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(cuspidal_cubic().dim(), 3);
        assert_eq!(quartic().dim(), 3);
        let dependent = CurveAlgebra::new(2, &[form(&[1, 0, 0]), form(&[2, 0, 0])]).unwrap();
        assert_eq!(dependent.dim(), 1);
        assert!(matches!(
            CurveAlgebra::new(3, &[form(&[1, 0, 0])]),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!(matches!(
            CurveAlgebra::new(2, &[form(&[0, 0, 0])]),
            Err(Error::EmptySpan)
        ));
    }

    #[test]
    fn common_factor_reduction() {
        // <s^3, s^2 t> = s^2 * <s, t>
        let a = CurveAlgebra::new(3, &[form(&[1, 0, 0, 0]), form(&[0, 1, 0, 0])]).unwrap();
        let (h, a0) = a.reduce_common_factor();
        assert_eq!(h, form(&[1, 0, 0])); // s^2
        assert_eq!(a0.ambient_degree(), 1);
        assert_eq!(a0.dim(), 2);

        let (h, _) = cuspidal_cubic().reduce_common_factor();
        assert_eq!(h.degree(), 0);

        // <s^2 t, s t^2> = s t * <s, t>
        let b = CurveAlgebra::new(3, &[form(&[0, 1, 0, 0]), form(&[0, 0, 1, 0])]).unwrap();
        let (h, b0) = b.reduce_common_factor();
        assert_eq!(h, form(&[0, 1, 0])); // s t
        assert_eq!(b0.ambient_degree(), 1);
    }

    #[test]
    fn power_spaces_of_the_cubic() {
        let a = cuspidal_cubic();
        let k2 = a.power_space(2);
        assert_eq!(k2.dim(), 6);
        // basis pattern: all monomials except s t^5
        let expected = Subspace::from_spanning(
            &[
                form(&[1, 0, 0, 0, 0, 0, 0]).into_coeffs(),
                form(&[0, 1, 0, 0, 0, 0, 0]).into_coeffs(),
                form(&[0, 0, 1, 0, 0, 0, 0]).into_coeffs(),
                form(&[0, 0, 0, 1, 0, 0, 0]).into_coeffs(),
                form(&[0, 0, 0, 0, 1, 0, 0]).into_coeffs(),
                form(&[0, 0, 0, 0, 0, 0, 1]).into_coeffs(),
            ],
            7,
        )
        .unwrap();
        assert_eq!(k2, expected);
        assert_eq!(a.power_space(1), a.base());
    }

    #[test]
    fn hilbert_sequences() {
        assert_eq!(cuspidal_cubic().hilbert(4), vec![1, 3, 6, 9, 12]);
        assert_eq!(quartic().hilbert(4), vec![1, 3, 6, 10, 14]);
        let line = CurveAlgebra::new(1, &[form(&[1, 0]), form(&[0, 1])]).unwrap();
        assert_eq!(line.hilbert(3), vec![1, 2, 3, 4]);
    }

    #[test]
    fn invariant_extraction() {
        let inv = cuspidal_cubic().invariants(5).unwrap();
        assert_eq!((inv.degree, inv.genus), (3, 1));
        assert_eq!(inv.stabilization_k, 1);

        let inv = quartic().invariants(6).unwrap();
        assert_eq!((inv.degree, inv.genus), (4, 3));
        assert_eq!(inv.stabilization_k, 2);

        // quartic data has only two agreeing terminal differences at kmax=4
        assert_eq!(
            quartic().invariants(4),
            Err(Error::NotStabilized { kmax: 4 })
        );

        // the full-monomial family of ambient degree 5 with m = 4
        let l = CurveAlgebra::new(
            5,
            &[
                form(&[1, 0, 0, 0, 0, 0]),
                form(&[0, 1, 0, 0, 0, 0]),
                form(&[0, 0, 1, 0, 0, 0]),
                form(&[0, 0, 0, 0, 0, 1]),
            ],
        )
        .unwrap();
        assert_eq!(l.invariants(6).unwrap().degree, 5);
    }

    #[test]
    fn degree_five_family_dimensions() {
        // s^4 t, s^3 t^2, s^2 t^3, s^5 + t^5: level k spans the monomials
        // s^(5k-j) t^j for j = 1..=5k-2 plus s^(5k) + t^(5k), so dim = 5k - 1
        let l = CurveAlgebra::new(
            5,
            &[
                form(&[0, 1, 0, 0, 0, 0]),
                form(&[0, 0, 1, 0, 0, 0]),
                form(&[0, 0, 0, 1, 0, 0]),
                form(&[1, 0, 0, 0, 0, 1]),
            ],
        )
        .unwrap();
        assert_eq!(l.hilbert(6), vec![1, 4, 9, 14, 19, 24, 29]);
        let inv = l.invariants(6).unwrap();
        assert_eq!((inv.degree, inv.genus), (5, 2));
    }

    #[test]
    fn degenerate_single_form_has_no_degree() {
        let a = CurveAlgebra::new(2, &[form(&[1, 0, 1])]).unwrap();
        assert_eq!(a.invariants(4), Err(Error::DegreeZero));
    }

    #[test]
    fn attainable_orders_of_the_cubic() {
        let a = cuspidal_cubic();
        assert_eq!(a.attainable_orders(1, &pt(0, 1)), vec![0, 2, 3]);
        assert_eq!(a.attainable_orders(2, &pt(0, 1)), vec![0, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn kf_test_on_the_fixtures() {
        let a = cuspidal_cubic();
        assert_eq!(
            a.kf_test(&pt(1, 0), 5).unwrap(),
            KfVerdict::Finite { witness_k: 1 }
        );
        assert_eq!(
            a.kf_test(&pt(0, 1), 5).unwrap(),
            KfVerdict::Finite { witness_k: 1 }
        );
        assert_eq!(
            a.kf_test(&pt(1, 1), 5).unwrap(),
            KfVerdict::Unknown { kmax_searched: 5 }
        );

        let b = unit_root_cubic();
        assert_eq!(
            b.kf_test(&pt(1, -1), 5).unwrap(),
            KfVerdict::Finite { witness_k: 1 }
        );
        // (1:1) needs an even level
        assert_eq!(
            b.kf_test(&pt(1, 1), 5).unwrap(),
            KfVerdict::Finite { witness_k: 2 }
        );
    }

    #[test]
    fn composite_parametrizations_are_unsupported() {
        // <s^2, t^2> has degree 1 but ambient degree 2
        let a = CurveAlgebra::new(2, &[form(&[1, 0, 0]), form(&[0, 0, 1])]).unwrap();
        assert!(matches!(
            a.kf_test(&pt(1, 1), 4).unwrap(),
            KfVerdict::Unsupported { .. }
        ));
    }

    #[test]
    fn locus_of_the_cuspidal_cubic() {
        let a = cuspidal_cubic();
        for k in 1..=3 {
            let locus = a.kf_locus(k).unwrap();
            // alpha^(3k-1) beta, monic
            let mut coeffs = vec![Rat::zero(); 3 * k + 1];
            coeffs[1] = Rat::one();
            let expected = BinaryForm::new(coeffs);
            assert_eq!(locus.constraint, LocusConstraint::Form(expected));
            assert_eq!(
                locus.roots.roots,
                vec![(pt(0, 1), 3 * k - 1), (pt(1, 0), 1)]
            );
            assert_eq!(locus.roots.residual_degree, 0);
        }
    }

    #[test]
    fn locus_of_the_unit_root_cubic() {
        let locus = unit_root_cubic().kf_locus(1).unwrap();
        // beta^3 + alpha^3 made monic: alpha^3 + beta^3
        assert_eq!(locus.constraint, LocusConstraint::Form(form(&[1, 0, 0, 1])));
        assert_eq!(locus.roots.roots, vec![(pt(1, -1), 1)]);
        assert_eq!(locus.roots.residual_degree, 2);
    }

    #[test]
    fn full_power_space_passes_every_point() {
        let line = CurveAlgebra::new(1, &[form(&[1, 0]), form(&[0, 1])]).unwrap();
        let locus = line.kf_locus(2).unwrap();
        assert_eq!(locus.constraint, LocusConstraint::EveryPoint);
    }

    #[test]
    fn genus_classes() {
        let line = CurveAlgebra::new(1, &[form(&[1, 0]), form(&[0, 1])]).unwrap();
        assert_eq!(
            line.genus_classification(4).unwrap(),
            GenusClass::HomogeneouslyKf
        );
        assert_eq!(
            cuspidal_cubic().genus_classification(5).unwrap(),
            GenusClass::SomeKfValuationExists
        );
        assert_eq!(
            quartic().genus_classification(6).unwrap(),
            GenusClass::NoGuarantee { genus: 3 }
        );
    }

    #[test]
    fn semigroup_shear_under_common_factor() {
        // L = s t * <s, t>^2 pattern: orders shift by k * ord_q(h)
        let a = CurveAlgebra::new(
            4,
            &[form(&[0, 1, 0, 0, 0]), form(&[0, 0, 1, 0, 0]), form(&[0, 0, 0, 1, 0])],
        )
        .unwrap();
        let (h, a0) = a.reduce_common_factor();
        let q = pt(0, 1);
        let shift = h.ord_at(&q).unwrap();
        for k in 1..=3 {
            let full: Vec<usize> = a.attainable_orders(k, &q);
            let reduced: Vec<usize> = a0
                .attainable_orders(k, &q)
                .iter()
                .map(|b| b + k * shift)
                .collect();
            assert_eq!(full, reduced);
        }
    }
}
