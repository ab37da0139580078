use crate::error::{Error, Result};
use crate::Scalar;

use super::{ConeDescription, FormTag, HeightVector};

/// Outcome of testing a height vector against a cone description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    /// Every equation vanishes.
    pub in_linear_span: bool,
    /// Additionally every inequality is nonnegative.
    pub in_cone: bool,
    /// Additionally every inequality is strictly positive.
    pub in_type_cone: bool,
    /// First equation that fails, or else first negative inequality.
    pub first_violation: Option<FormTag>,
    /// First inequality that holds with equality, if any.
    pub first_tight: Option<FormTag>,
}

/// Evaluates every form of `desc` at `h`.
pub fn contains<T: Scalar>(desc: &ConeDescription, h: &HeightVector<T>) -> Result<Membership> {
    if h.n() != desc.n {
        return Err(Error::DimensionMismatch {
            expected: 1 << desc.n,
            got: h.values().len(),
        });
    }
    let failed_eq = desc
        .equations
        .iter()
        .find(|f| !f.eval(h).is_zero())
        .map(|f| f.tag());
    let mut negative = None;
    let mut tight = None;
    for f in &desc.inequalities {
        let value = f.eval(h);
        if negative.is_none() && value < T::zero() {
            negative = Some(f.tag());
        }
        if tight.is_none() && value.is_zero() {
            tight = Some(f.tag());
        }
    }
    let in_linear_span = failed_eq.is_none();
    let in_cone = in_linear_span && negative.is_none();
    Ok(Membership {
        in_linear_span,
        in_cone,
        in_type_cone: in_cone && tight.is_none(),
        first_violation: failed_eq.or(negative),
        first_tight: tight,
    })
}

/// `Ok` when `h` lies in the cone, otherwise the matching error.
pub fn require_in_cone<T: Scalar>(desc: &ConeDescription, h: &HeightVector<T>) -> Result<()> {
    let m = contains(desc, h)?;
    match m.first_violation {
        None => Ok(()),
        Some(tag) if !m.in_linear_span => Err(Error::NotInSpan(tag)),
        Some(tag) => Err(Error::NotInCone(tag)),
    }
}
