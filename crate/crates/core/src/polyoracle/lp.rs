//! Exact phase-one simplex, used as a Farkas oracle: is a vector a
//! nonnegative combination of given generators?

use crate::Scalar;

/// Some `λ >= 0` with `Σ_j λ_j · generators[j] = target`, if one exists.
///
/// Runs the phase-one simplex method with one artificial variable per
/// coordinate and Bland's rule, so it terminates without cycling. All
/// arithmetic happens in `T`; with an exact field the answer is exact.
pub fn conic_combination<T: Scalar>(generators: &[Vec<T>], target: &[T]) -> Option<Vec<T>> {
    let d = target.len();
    let m = generators.len();
    debug_assert!(generators.iter().all(|g| g.len() == d));
    // coordinates where every generator and the target vanish carry no constraint
    let live: Vec<usize> = (0..d)
        .filter(|&i| !target[i].is_zero() || generators.iter().any(|g| !g[i].is_zero()))
        .collect();
    let rows = live.len();
    let width = m + rows + 1;
    let rhs = width - 1;
    let mut tab = vec![T::zero(); rows * width];
    for (r, &i) in live.iter().enumerate() {
        let flip = target[i] < T::zero();
        let signed = |v: &T| if flip { -v.clone() } else { v.clone() };
        for (j, g) in generators.iter().enumerate() {
            tab[r * width + j] = signed(&g[i]);
        }
        tab[r * width + m + r] = T::one();
        tab[r * width + rhs] = signed(&target[i]);
    }
    let mut basis: Vec<usize> = (m..m + rows).collect();
    // reduced costs of the phase-one objective Σ artificials; last entry is -objective
    let mut cost = vec![T::zero(); width];
    for j in (0..m).chain(std::iter::once(rhs)) {
        cost[j] = (0..rows).fold(T::zero(), |acc, r| acc - tab[r * width + j].clone());
    }

    while let Some(enter) = (0..rhs).find(|&j| cost[j] < T::zero()) {
        let mut leave: Option<(usize, T)> = None;
        for r in 0..rows {
            let a = &tab[r * width + enter];
            if *a > T::zero() {
                let ratio = tab[r * width + rhs].clone() / a.clone();
                let better = match &leave {
                    None => true,
                    Some((best_r, best)) => {
                        ratio < *best || (ratio == *best && basis[r] < basis[*best_r])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let (pr, _) = leave.expect("phase-one objective is bounded below");
        pivot(&mut tab, width, pr, enter);
        let factor = cost[enter].clone();
        for j in 0..width {
            cost[j] = cost[j].clone() - factor.clone() * tab[pr * width + j].clone();
        }
        basis[pr] = enter;
    }

    if !cost[rhs].is_zero() {
        return None;
    }
    let mut lambda = vec![T::zero(); m];
    for (r, &b) in basis.iter().enumerate() {
        if b < m {
            lambda[b] = tab[r * width + rhs].clone();
        }
    }
    Some(lambda)
}

fn pivot<T: Scalar>(tab: &mut [T], width: usize, pr: usize, pc: usize) {
    let rows = tab.len() / width;
    let inv = T::one() / tab[pr * width + pc].clone();
    for j in 0..width {
        tab[pr * width + j] = tab[pr * width + j].clone() * inv.clone();
    }
    for r in 0..rows {
        if r == pr {
            continue;
        }
        let factor = tab[r * width + pc].clone();
        if factor.is_zero() {
            continue;
        }
        for j in 0..width {
            let v = tab[r * width + j].clone() - factor.clone() * tab[pr * width + j].clone();
            tab[r * width + j] = v;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from_integer(x.into())).collect()
    }

    fn check(gens: &[Vec<Rational>], target: &[Rational]) -> bool {
        match conic_combination(gens, target) {
            None => false,
            Some(lambda) => {
                assert!(lambda.iter().all(|l| *l >= Rational::from_integer(0.into())));
                let mut acc = vec![Rational::from_integer(0.into()); target.len()];
                for (l, g) in lambda.iter().zip(gens) {
                    for (a, x) in acc.iter_mut().zip(g) {
                        *a += l.clone() * x.clone();
                    }
                }
                assert_eq!(acc, target);
                true
            }
        }
    }

    #[test]
    fn membership_in_simple_cones() {
        let gens = vec![v(&[1, 0]), v(&[1, 1])];
        assert!(check(&gens, &v(&[3, 1])));
        assert!(check(&gens, &v(&[0, 0])));
        assert!(!check(&gens, &v(&[0, 1])));
        assert!(!check(&gens, &v(&[-1, 0])));
        assert!(check(&[], &v(&[0, 0, 0])));
        assert!(!check(&[], &v(&[0, 1])));
    }

    #[test]
    fn degenerate_cone() {
        // generators of the cone over a square, plus a redundant interior ray
        let gens = vec![
            v(&[1, 0, 1]),
            v(&[0, 1, 1]),
            v(&[-1, 0, 1]),
            v(&[0, -1, 1]),
            v(&[0, 0, 1]),
        ];
        assert!(check(&gens, &v(&[0, 0, 5])));
        assert!(check(&gens, &v(&[1, 1, 2])));
        assert!(!check(&gens, &v(&[1, 1, 1])));
        assert!(!check(&gens, &v(&[0, 0, -1])));
    }
}
