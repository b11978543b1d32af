//! Pointed integer cones: extreme rays via the double description method,
//! pointedness certificates, and the interior dual vector that bounds
//! exponent enumeration for graded pieces.

use crate::error::Error;
use crate::matrix::Matrix;
use crate::Rat;
use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Extreme rays of a pointed cone, primitive and sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeZm {
    rays: Vec<Vec<i64>>,
}

impl ConeZm {
    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn dim_ambient(&self) -> usize {
        self.rays.first().map_or(0, Vec::len)
    }
}

pub(crate) fn primitive_i64(v: &[i64]) -> Vec<i64> {
    let mut g: i64 = 0;
    for &x in v {
        g = gcd_i64(g, x.abs());
    }
    if g > 1 {
        v.iter().map(|&x| x / g).collect()
    } else {
        v.to_vec()
    }
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd_i64(b, a % b)
    }
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn primitive_big(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for x in &v {
        if !x.is_zero() {
            g = g.gcd(x);
        }
    }
    if g > BigInt::one() {
        for x in &mut v {
            *x = &*x / &g;
        }
    }
    v
}

struct DdRay {
    v: Vec<BigInt>,
    /// Bitmask over the inequalities processed so far that are tight here.
    tight: u64,
}

/// Minimal generating description (lineality basis plus extreme rays) of
/// `{x : a.x >= 0 for all a in normals}` by incremental double description.
pub(crate) struct DualDescription {
    pub lineality: Vec<Vec<BigInt>>,
    pub rays: Vec<Vec<BigInt>>,
}

pub(crate) fn double_description(normals: &[Vec<BigInt>], dim: usize) -> DualDescription {
    assert!(normals.len() <= 64, "tight sets are tracked in a u64");
    let mut lineality: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| {
            let mut e = vec![BigInt::zero(); dim];
            e[i] = BigInt::one();
            e
        })
        .collect();
    let mut rays: Vec<DdRay> = Vec::new();
    for (idx, a) in normals.iter().enumerate() {
        let bit = 1u64 << idx;
        let all_previous = bit - 1;
        // lineality pivot if some line leaves the hyperplane of a
        if let Some(p) = lineality.iter().position(|l| !dot(a, l).is_zero()) {
            let mut pivot = lineality.swap_remove(p);
            if dot(a, &pivot).is_negative() {
                for x in &mut pivot {
                    *x = -x.clone();
                }
            }
            let ap = dot(a, &pivot);
            for l in &mut lineality {
                let al = dot(a, l);
                if !al.is_zero() {
                    let new: Vec<BigInt> = l
                        .iter()
                        .zip(&pivot)
                        .map(|(x, y)| &ap * x - &al * y)
                        .collect();
                    *l = primitive_big(new);
                }
            }
            for r in &mut rays {
                let ar = dot(a, &r.v);
                if !ar.is_zero() {
                    let new: Vec<BigInt> = r
                        .v
                        .iter()
                        .zip(&pivot)
                        .map(|(x, y)| &ap * x - &ar * y)
                        .collect();
                    r.v = primitive_big(new);
                }
                r.tight |= bit;
            }
            rays.push(DdRay {
                v: primitive_big(pivot),
                tight: all_previous,
            });
            continue;
        }
        // all lines stay; split the rays by sign against a
        let signs: Vec<i8> = rays
            .iter()
            .map(|r| {
                let d = dot(a, &r.v);
                if d.is_zero() {
                    0
                } else if d.is_positive() {
                    1
                } else {
                    -1
                }
            })
            .collect();
        let lin_dim = lineality.len();
        let mut new_rays: Vec<DdRay> = Vec::new();
        for (r, &s) in rays.iter().zip(&signs) {
            if s >= 0 {
                new_rays.push(DdRay {
                    v: r.v.clone(),
                    tight: if s == 0 { r.tight | bit } else { r.tight },
                });
            }
        }
        for (i, p) in rays.iter().enumerate() {
            if signs[i] <= 0 {
                continue;
            }
            for (j, n) in rays.iter().enumerate() {
                if signs[j] >= 0 {
                    continue;
                }
                if !adjacent(p, n, &rays, normals, dim, lin_dim) {
                    continue;
                }
                let apos = dot(a, &p.v);
                let aneg = dot(a, &n.v);
                let combined: Vec<BigInt> = p
                    .v
                    .iter()
                    .zip(&n.v)
                    .map(|(x, y)| &apos * y - &aneg * x)
                    .collect();
                new_rays.push(DdRay {
                    v: primitive_big(combined),
                    tight: (p.tight & n.tight) | bit,
                });
            }
        }
        rays = new_rays;
    }
    let mut out: Vec<Vec<BigInt>> = rays.into_iter().map(|r| r.v).collect();
    out.sort();
    out.dedup();
    DualDescription {
        lineality,
        rays: out,
    }
}

/// Rank test for adjacency: two extreme rays span a 2-face over the
/// lineality space exactly when their common tight normals have rank
/// `dim - lin_dim - 2`.
fn adjacent(
    p: &DdRay,
    n: &DdRay,
    all: &[DdRay],
    normals: &[Vec<BigInt>],
    dim: usize,
    lin_dim: usize,
) -> bool {
    let t = p.tight & n.tight;
    // quick combinatorial filter: some other ray tight on all of t
    for r in all {
        if std::ptr::eq(r, p) || std::ptr::eq(r, n) {
            continue;
        }
        if r.tight & t == t {
            return false;
        }
    }
    let rows: Vec<Vec<Rat>> = (0..normals.len())
        .filter(|i| t & (1u64 << i) != 0)
        .map(|i| {
            normals[i]
                .iter()
                .map(|x| Rat::from_bigint(x))
                .collect()
        })
        .collect();
    if rows.is_empty() {
        return dim == lin_dim + 2;
    }
    let rank = Matrix::from_rows(rows).expect("uniform length").rref().rank();
    rank == dim.saturating_sub(lin_dim + 2)
}

/// Extreme rays of the pointed cone generated by `gens`, plus an interior
/// dual certificate `w` with `<w, g> >= 1` for every generator. Errors when
/// the cone is not pointed.
pub(crate) fn analyze_generators(
    gens: &[Vec<i64>],
    dim: usize,
) -> Result<(ConeZm, Vec<i64>), Error> {
    let normals: Vec<Vec<BigInt>> = gens
        .iter()
        .map(|g| g.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let dual = double_description(&normals, dim);
    let mut w = vec![BigInt::zero(); dim];
    for r in &dual.rays {
        for (wi, ri) in w.iter_mut().zip(r) {
            *wi += ri;
        }
    }
    for g in &normals {
        if !dot(g, &w).is_positive() {
            return Err(Error::NonPointedCone);
        }
    }
    let w = primitive_big(w);
    let w: Vec<i64> = w
        .iter()
        .map(|x| x.to_i64().expect("certificate fits in i64"))
        .collect();

    let mut primal_normals = dual.rays.clone();
    for l in &dual.lineality {
        primal_normals.push(l.clone());
        primal_normals.push(l.iter().map(|x| -x.clone()).collect());
    }
    let primal = double_description(&primal_normals, dim);
    assert!(
        primal.lineality.is_empty(),
        "a pointed cone has no lineality"
    );
    let mut rays: Vec<Vec<i64>> = primal
        .rays
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| x.to_i64().expect("ray coordinates fit in i64"))
                .collect()
        })
        .collect();
    rays.sort();
    rays.dedup();
    Ok((ConeZm { rays }, w))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rays_of(gens: &[&[i64]], dim: usize) -> Vec<Vec<i64>> {
        let gens: Vec<Vec<i64>> = gens.iter().map(|g| g.to_vec()).collect();
        analyze_generators(&gens, dim).unwrap().0.rays().to_vec()
    }

    #[test]
    fn quadrant_from_repeated_weights() {
        assert_eq!(
            rays_of(&[&[1, 0], &[1, 0], &[1, 0], &[0, 1], &[0, 1], &[0, 1]], 2),
            vec![vec![0, 1], vec![1, 0]]
        );
    }

    #[test]
    fn interior_generator_is_absorbed() {
        assert_eq!(
            rays_of(&[&[1, 0], &[1, 1], &[0, 1]], 2),
            vec![vec![0, 1], vec![1, 0]]
        );
    }

    #[test]
    fn skew_cone_keeps_its_generators() {
        assert_eq!(
            rays_of(&[&[2, 1], &[1, 2]], 2),
            vec![vec![1, 2], vec![2, 1]]
        );
    }

    #[test]
    fn non_pointed_cone_is_rejected() {
        let gens = vec![vec![1, 0], vec![-1, 0]];
        assert_eq!(analyze_generators(&gens, 2), Err(Error::NonPointedCone));
    }

    #[test]
    fn certificate_is_strictly_positive() {
        let gens = vec![vec![2, 1], vec![1, 2], vec![1, 1]];
        let (_, w) = analyze_generators(&gens, 2).unwrap();
        for g in &gens {
            let d: i64 = g.iter().zip(&w).map(|(a, b)| a * b).sum();
            assert!(d >= 1);
        }
    }

    #[test]
    fn rank_one_cone() {
        assert_eq!(rays_of(&[&[1], &[1], &[1]], 1), vec![vec![1]]);
    }

    #[test]
    fn three_dimensional_octant() {
        assert_eq!(
            rays_of(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]], 3),
            vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]
        );
    }
}
