//! Almost toric algebras: multigraded domains generated by univariate
//! polynomials times lattice characters, `R = K[p_i(t) chi^(u_i)]`.
//!
//! Finiteness questions reduce ray by ray: for each extreme ray of the
//! weight cone the corresponding Veronese subalgebra is rescaled until it
//! is generated in degree one, homogenized into a curve algebra, and the
//! curve machinery takes over. Every combined verdict carries the same
//! coverage caveat: the reduction needs the rays of the valuation cone,
//! whose projections are rational rays of the weight cone but may land in
//! its interior; only the extreme rays plus caller-supplied extras are
//! enumerated here.

use crate::cone::{analyze_generators, primitive_i64, ConeZm};
use crate::curve::{CurveAlgebra, KfVerdict};
use crate::error::Error;
use crate::forms::PointP1;
use crate::subspace::Subspace;
use crate::unipoly::UniPoly;
use crate::{Int, Rat};
use num_traits::Zero;
use std::fmt;

/// Contract caveat attached verbatim to every combined multigraded verdict.
pub const RAY_COVERAGE_CAVEAT: &str = "ray coverage: the verdict covers the extreme rays of the \
weight cone plus any caller-supplied extra rays; rays of the valuation cone may project into \
the interior of the weight cone and are not enumerated automatically";

/// Default cap on the Veronese rescaling search: the minimal nonzero level
/// is doubled until generation in degree one certifies, up to this factor.
pub const DEFAULT_LAMBDA_CAP: usize = 64;

/// A valuation point of the rational function field: order of vanishing at
/// `t = tau`, or at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tau {
    Finite(Rat),
    Infinity,
}

impl Tau {
    /// Dictionary into the projective line: finite tau to `(1 : tau)`,
    /// infinity to `(0 : 1)`.
    pub fn point(&self) -> PointP1 {
        match self {
            Tau::Finite(r) => PointP1::new(r.denom().clone(), r.numer().clone())
                .expect("denominators are nonzero"),
            Tau::Infinity => PointP1::new(Int::from(0), Int::from(1)).unwrap(),
        }
    }
}

impl fmt::Display for Tau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tau::Finite(r) => write!(f, "{r}"),
            Tau::Infinity => write!(f, "inf"),
        }
    }
}

/// A graded piece `R_u` as a subspace of the polynomials of degree at most
/// `max_t_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPiece {
    pub space: Subspace<Rat>,
    pub max_t_degree: usize,
}

/// The homogenized curve attached to a ray: `R_(lambda u0)` generates the
/// ray Veronese in degree one, `big_degree` is the maximal t-degree of its
/// basis, and `curve` is the span of the degree-`big_degree`
/// homogenizations. The point dictionary is `Tau::point`.
#[derive(Clone, Debug)]
pub struct RayCurveData {
    pub ray: Vec<i64>,
    pub lambda: usize,
    pub big_degree: usize,
    pub curve: CurveAlgebra,
}

impl RayCurveData {
    pub fn point_for(&self, tau: &Tau) -> PointP1 {
        tau.point()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayKf {
    pub ray: Vec<i64>,
    pub lambda: usize,
    pub big_degree: usize,
    pub verdict: KfVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CombinedVerdict {
    Finite,
    Unknown,
    Unsupported,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultigradedKfReport {
    pub per_ray: Vec<RayKf>,
    pub combined: CombinedVerdict,
    pub caveats: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayGenus {
    pub ray: Vec<i64>,
    pub lambda: usize,
    pub degree: usize,
    pub genus: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HkfVerdict {
    HomogeneouslyKf,
    NotHomogeneouslyKf { offending_ray: Vec<i64>, genus: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HkfReport {
    pub per_ray: Vec<RayGenus>,
    pub verdict: HkfVerdict,
    pub caveats: Vec<String>,
}

/// `R = K[p_i(t) chi^(u_i)]` with a pointed weight cone, so `R_0 = K`.
#[derive(Clone, Debug)]
pub struct MultigradedAlgebra {
    rank: usize,
    generators: Vec<(UniPoly, Vec<i64>)>,
    rays: ConeZm,
    dual_certificate: Vec<i64>,
}

impl MultigradedAlgebra {
    pub fn new(rank: usize, generators: Vec<(UniPoly, Vec<i64>)>) -> Result<Self, Error> {
        if rank == 0 || rank > 4 {
            return Err(Error::RankUnsupported { rank });
        }
        let mut kept = Vec::new();
        for (index, (p, u)) in generators.into_iter().enumerate() {
            if u.len() != rank {
                return Err(Error::DimensionMismatch {
                    expected: rank,
                    got: u.len(),
                });
            }
            if p.is_zero() {
                return Err(Error::ZeroGenerator { index });
            }
            if u.iter().all(|&x| x == 0) {
                if p.is_constant() {
                    continue; // a scalar; contributes nothing
                }
                return Err(Error::NonConstantDegreeZero { index });
            }
            kept.push((p, u));
        }
        if kept.is_empty() {
            return Err(Error::NoGenerators);
        }
        let weights: Vec<Vec<i64>> = kept.iter().map(|(_, u)| u.clone()).collect();
        let (rays, dual_certificate) = analyze_generators(&weights, rank)?;
        Ok(Self {
            rank,
            generators: kept,
            rays,
            dual_certificate,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[(UniPoly, Vec<i64>)] {
        &self.generators
    }

    /// Extreme rays of the weight cone, primitive and sorted.
    pub fn weight_cone_rays(&self) -> &ConeZm {
        &self.rays
    }

    /// All monomials `prod p_i^(e_i)` with `sum e_i u_i = u`, as a canonical
    /// subspace. The interior dual certificate bounds the exponent search,
    /// so the enumeration is finite exactly because the cone is pointed.
    pub fn graded_piece(&self, u: &[i64]) -> GradedPiece {
        assert_eq!(u.len(), self.rank, "weight has the algebra's rank");
        let w = &self.dual_certificate;
        let budget: i64 = u.iter().zip(w).map(|(a, b)| a * b).sum();
        let mut polys: Vec<UniPoly> = Vec::new();
        if budget >= 0 {
            let costs: Vec<i64> = self
                .generators
                .iter()
                .map(|(_, ui)| ui.iter().zip(w).map(|(a, b)| a * b).sum())
                .collect();
            let mut exponents = vec![0usize; self.generators.len()];
            self.enumerate(0, u.to_vec(), budget, &costs, &mut exponents, &mut polys);
        }
        if polys.is_empty() {
            return GradedPiece {
                space: Subspace::zero(1).unwrap(),
                max_t_degree: 0,
            };
        }
        let max_deg = polys
            .iter()
            .map(|p| p.degree().expect("products of nonzero polys"))
            .max()
            .unwrap();
        let vectors: Vec<Vec<Rat>> = polys
            .iter()
            .map(|p| {
                let mut v = p.coeffs().to_vec();
                v.resize(max_deg + 1, Rat::zero());
                v
            })
            .collect();
        GradedPiece {
            space: Subspace::from_spanning(&vectors, max_deg + 1).unwrap(),
            max_t_degree: max_deg,
        }
    }

    fn enumerate(
        &self,
        i: usize,
        remaining: Vec<i64>,
        budget: i64,
        costs: &[i64],
        exponents: &mut Vec<usize>,
        out: &mut Vec<UniPoly>,
    ) {
        if i == self.generators.len() {
            if remaining.iter().all(|&x| x == 0) {
                let mut prod = UniPoly::one();
                for (e, (p, _)) in exponents.iter().zip(&self.generators) {
                    if *e > 0 {
                        prod = prod.mul(&p.pow(*e));
                    }
                }
                out.push(prod);
            }
            return;
        }
        let cost = costs[i];
        debug_assert!(cost >= 1, "certificate is strictly positive on weights");
        let max_e = (budget / cost).max(0) as usize;
        let u_i = &self.generators[i].1;
        for e in 0..=max_e {
            let rem: Vec<i64> = remaining
                .iter()
                .zip(u_i)
                .map(|(r, x)| r - (e as i64) * x)
                .collect();
            exponents[i] = e;
            self.enumerate(i + 1, rem, budget - (e as i64) * cost, costs, exponents, out);
        }
        exponents[i] = 0;
    }

    /// The rescaled ray Veronese as a curve algebra, certified to be
    /// generated in degree one for every level up to `kmax`.
    pub fn ray_curve(&self, ray: &[i64], kmax: usize) -> Result<RayCurveData, Error> {
        self.ray_curve_with_cap(ray, kmax, DEFAULT_LAMBDA_CAP)
    }

    pub fn ray_curve_with_cap(
        &self,
        ray: &[i64],
        kmax: usize,
        cap: usize,
    ) -> Result<RayCurveData, Error> {
        assert_eq!(ray.len(), self.rank);
        let ray = primitive_i64(ray);
        let scaled = |m: usize| -> Vec<i64> { ray.iter().map(|&x| x * m as i64).collect() };
        let lambda0 = (1..=cap)
            .find(|&m| self.graded_piece(&scaled(m)).space.dim() > 0)
            .ok_or_else(|| Error::RayNotStabilized {
                details: format!(
                    "no nonzero graded piece on ray {:?} up to level {cap}",
                    ray
                ),
            })?;
        let mut lambda = lambda0;
        let mut last_failure = String::new();
        while lambda <= cap * lambda0 {
            match self.try_certificate(&ray, lambda, kmax) {
                Ok(data) => return Ok(data),
                Err(reason) => last_failure = reason,
            }
            lambda *= 2;
        }
        Err(Error::RayNotStabilized {
            details: format!(
                "degree-one generation certificate failed on ray {:?} for every lambda up to {} \
                 (last failure: {last_failure})",
                ray,
                cap * lambda0
            ),
        })
    }

    fn try_certificate(
        &self,
        ray: &[i64],
        lambda: usize,
        kmax: usize,
    ) -> Result<RayCurveData, String> {
        let scaled = |m: usize| -> Vec<i64> { ray.iter().map(|&x| x * m as i64).collect() };
        let piece = self.graded_piece(&scaled(lambda));
        if piece.space.dim() == 0 {
            return Err(format!("level {lambda} is zero"));
        }
        let big_degree = piece.max_t_degree;
        let forms: Vec<crate::forms::BinaryForm<Rat>> = piece
            .space
            .basis_rows()
            .map(|row| {
                let mut coeffs = row.to_vec();
                coeffs.resize(big_degree + 1, Rat::zero());
                crate::forms::BinaryForm::new(coeffs)
            })
            .collect();
        let curve = CurveAlgebra::new(big_degree, &forms)
            .map_err(|e| format!("homogenization failed: {e}"))?;
        for k in 2..=kmax {
            let pk = self.graded_piece(&scaled(k * lambda));
            if pk.max_t_degree > k * big_degree {
                return Err(format!(
                    "t-degree overflow at k={k}: level degree {} exceeds {k}*{big_degree}",
                    pk.max_t_degree
                ));
            }
            if curve.power_space(k).dim() != pk.space.dim() {
                return Err(format!("generation certificate fails at k={k}"));
            }
        }
        Ok(RayCurveData {
            ray: ray.to_vec(),
            lambda,
            big_degree,
            curve,
        })
    }

    /// Per-ray finiteness verdicts at the point of `tau`, over the extreme
    /// rays of the weight cone plus `extra_rays`, combined conjunctively.
    pub fn multigraded_kf(
        &self,
        tau: &Tau,
        kmax: usize,
        extra_rays: &[Vec<i64>],
    ) -> Result<MultigradedKfReport, Error> {
        let mut rays: Vec<Vec<i64>> = self.rays.rays().to_vec();
        for r in extra_rays {
            let r = primitive_i64(r);
            if !rays.contains(&r) {
                rays.push(r);
            }
        }
        let q = tau.point();
        let mut per_ray = Vec::with_capacity(rays.len());
        for ray in rays {
            let data = self.ray_curve(&ray, kmax)?;
            let verdict = data.curve.kf_test(&q, kmax)?;
            per_ray.push(RayKf {
                ray: data.ray,
                lambda: data.lambda,
                big_degree: data.big_degree,
                verdict,
            });
        }
        let combined = if per_ray
            .iter()
            .all(|r| matches!(r.verdict, KfVerdict::Finite { .. }))
        {
            CombinedVerdict::Finite
        } else if per_ray
            .iter()
            .any(|r| matches!(r.verdict, KfVerdict::Unsupported { .. }))
        {
            CombinedVerdict::Unsupported
        } else {
            CombinedVerdict::Unknown
        };
        Ok(MultigradedKfReport {
            per_ray,
            combined,
            caveats: vec![RAY_COVERAGE_CAVEAT.to_string()],
        })
    }

    /// Genus of every extreme-ray curve; homogeneously finite exactly when
    /// all of them vanish (each ray curve is then smooth and rational).
    pub fn hkf_report(&self, kmax: usize) -> Result<HkfReport, Error> {
        let mut per_ray = Vec::new();
        for ray in self.rays.rays() {
            let data = self.ray_curve(ray, kmax)?;
            let inv = data.curve.invariants(kmax)?;
            per_ray.push(RayGenus {
                ray: data.ray,
                lambda: data.lambda,
                degree: inv.degree,
                genus: inv.genus,
            });
        }
        let verdict = match per_ray.iter().find(|r| r.genus > 0) {
            None => HkfVerdict::HomogeneouslyKf,
            Some(r) => HkfVerdict::NotHomogeneouslyKf {
                offending_ray: r.ray.clone(),
                genus: r.genus,
            },
        };
        Ok(HkfReport {
            per_ray,
            verdict,
            caveats: vec![RAY_COVERAGE_CAVEAT.to_string()],
        })
    }
}
