//! Double description: extreme rays of a pointed cone `{ y : A y >= 0 }`,
//! computed in integers with the combinatorial adjacency test.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::{Rational, Scalar};

use super::Matrix;

/// Abort when an intermediate ray list grows past this.
pub const MAX_RAYS: usize = 200_000;

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
pub fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Clears denominators and divides out the content. Positive scaling only,
/// so direction is preserved.
pub fn primitive_from_rationals<T: Scalar>(v: &[T]) -> Vec<BigInt> {
    let q: Vec<Rational> = v
        .iter()
        .map(|x| x.to_rational().expect("finite scalar"))
        .collect();
    let lcm = q.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = q
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    primitive(&ints)
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_subset_of(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

struct Ray {
    coords: Vec<BigInt>,
    zeros: Bits,
}

/// Extreme rays of `{ y ∈ R^dim : <a, y> >= 0 for a in normals }`.
///
/// The cone must be pointed (`normals` of rank `dim`). Constraints are
/// inserted in the given order after an initial simplicial cone built from
/// the first linearly independent rows. Rays are primitive integer vectors,
/// returned in lexicographic order.
pub fn extreme_rays_of(normals: &[Vec<BigInt>], dim: usize) -> Result<Vec<Vec<BigInt>>> {
    if dim == 0 {
        return Ok(Vec::new());
    }
    let k = normals.len();
    // initial basis: first rows that raise the rank
    let mut basis_rows: Vec<usize> = Vec::new();
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    for (i, a) in normals.iter().enumerate() {
        if basis.len() == dim {
            break;
        }
        let row: Vec<Rational> = a.iter().map(|x| Rational::from_integer(x.clone())).collect();
        let mut trial = basis.clone();
        trial.push(row);
        if Matrix::from_rows(dim, trial.clone())?.rank() == trial.len() {
            basis = trial;
            basis_rows.push(i);
        }
    }
    if basis.len() < dim {
        return Err(Error::Precondition(format!(
            "cone is not pointed: constraints have rank {} in dimension {dim}",
            basis.len()
        )));
    }
    // rays of the initial simplicial cone are the columns of B^{-1}
    let b = Matrix::from_rows(dim, basis)?;
    let mut rays: Vec<Ray> = Vec::with_capacity(dim);
    for j in 0..dim {
        let mut e = vec![Rational::zero(); dim];
        e[j] = Rational::one();
        let x = b
            .solve(&e)?
            .map_err(|_| Error::Invariant("singular initial basis".into()))?;
        let coords = primitive_from_rationals(&x);
        let mut zeros = Bits::new(k);
        for (jj, &row) in basis_rows.iter().enumerate() {
            if jj != j {
                zeros.set(row);
            }
        }
        rays.push(Ray { coords, zeros });
    }

    for (i, a) in normals.iter().enumerate() {
        if basis_rows.contains(&i) {
            continue;
        }
        let values: Vec<BigInt> = rays.iter().map(|r| dot(a, &r.coords)).collect();
        let mut next: Vec<Ray> = Vec::new();
        let pos: Vec<usize> = (0..rays.len()).filter(|&r| values[r].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&r| values[r].is_negative()).collect();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zeros.and(&rays[q].zeros);
                if common.count() + 2 < dim {
                    continue;
                }
                let blocked = rays.iter().enumerate().any(|(r, ray)| {
                    r != p && r != q && common.is_subset_of(&ray.zeros)
                });
                if blocked {
                    continue;
                }
                // (a·p) q - (a·q) p vanishes on a and is a positive combination
                let coords: Vec<BigInt> = rays[q]
                    .coords
                    .iter()
                    .zip(&rays[p].coords)
                    .map(|(yq, yp)| &values[p] * yq - &values[q] * yp)
                    .collect();
                let mut zeros = common;
                zeros.set(i);
                next.push(Ray {
                    coords: primitive(&coords),
                    zeros,
                });
            }
        }
        for (r, mut ray) in rays.into_iter().enumerate() {
            if values[r].is_zero() {
                ray.zeros.set(i);
                next.push(ray);
            } else if values[r].is_positive() {
                next.push(ray);
            }
        }
        if next.len() > MAX_RAYS {
            return Err(Error::too_large("double description ray count", next.len(), MAX_RAYS));
        }
        rays = next;
    }
    let mut out: Vec<Vec<BigInt>> = rays.into_iter().map(|r| r.coords).collect();
    out.sort();
    out.dedup();
    Ok(out)
}
