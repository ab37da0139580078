use std::ops::{Add, Index, Neg, Sub};

use crate::error::{Error, Result};
use crate::graphcore::SubsetMask;
use crate::Scalar;

/// A point of `R^{2^n}`: one value `h_S` per subset `S`, indexed by mask.
///
/// It encodes the (possibly virtual) polytope `{ x : <i_S, x> <= h_S }`.
#[derive(Clone, Debug, PartialEq)]
pub struct HeightVector<T> {
    n: usize,
    values: Vec<T>,
}

impl<T: Scalar> HeightVector<T> {
    pub fn new(n: usize, values: Vec<T>) -> Result<Self> {
        let expected = 1usize << n;
        if values.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                got: values.len(),
            });
        }
        Ok(HeightVector { n, values })
    }

    pub fn zeros(n: usize) -> Self {
        HeightVector {
            n,
            values: vec![T::zero(); 1 << n],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(SubsetMask) -> T) -> Self {
        HeightVector {
            n,
            values: SubsetMask::all(n).map(&mut f).collect(),
        }
    }

    /// Integer-valued vector, `h_S = f(S)`.
    pub fn from_int_fn(n: usize, mut f: impl FnMut(SubsetMask) -> i64) -> Self {
        Self::from_fn(n, |s| T::from_int(f(s)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    pub fn get(&self, s: SubsetMask) -> &T {
        &self.values[s.index()]
    }

    pub fn set(&mut self, s: SubsetMask, value: T) {
        self.values[s.index()] = value;
    }

    pub fn iter(&self) -> impl Iterator<Item = (SubsetMask, &T)> {
        self.values
            .iter()
            .enumerate()
            .map(|(i, v)| (SubsetMask::from_bits(i as u32), v))
    }

    #[must_use]
    pub fn scale(&self, factor: &T) -> Self {
        HeightVector {
            n: self.n,
            values: self.values.iter().map(|v| v.clone() * factor.clone()).collect(),
        }
    }

    /// `self + factor · other`.
    #[must_use]
    pub fn add_scaled(&self, factor: &T, other: &HeightVector<T>) -> Self {
        assert_eq!(self.n, other.n, "height vectors of different sizes");
        HeightVector {
            n: self.n,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.clone() + factor.clone() * b.clone())
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }
}

impl<T> Index<SubsetMask> for HeightVector<T> {
    type Output = T;

    fn index(&self, s: SubsetMask) -> &T {
        &self.values[s.index()]
    }
}

impl<T: Scalar> Add for &HeightVector<T> {
    type Output = HeightVector<T>;

    fn add(self, rhs: &HeightVector<T>) -> HeightVector<T> {
        self.add_scaled(&T::one(), rhs)
    }
}

impl<T: Scalar> Sub for &HeightVector<T> {
    type Output = HeightVector<T>;

    fn sub(self, rhs: &HeightVector<T>) -> HeightVector<T> {
        self.add_scaled(&-T::one(), rhs)
    }
}

impl<T: Scalar> Neg for &HeightVector<T> {
    type Output = HeightVector<T>;

    fn neg(self) -> HeightVector<T> {
        self.scale(&-T::one())
    }
}
