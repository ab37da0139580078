use std::fmt;

use crate::graphcore::SubsetMask;
use crate::Scalar;

use super::HeightVector;

/// Where a linear form comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormTag {
    /// `h_∅ + h_V`.
    Apex,
    /// The single equation kept for a non-clique `set`, built from its
    /// smallest missing edge `{u, v}`:
    /// `h_{set∖u} + h_{set∖v} - h_set - h_{set∖uv}`.
    NonClique { set: SubsetMask, u: usize, v: usize },
    /// Wall-crossing form `n(u, v, rest)` for a non-edge `{u, v}`.
    NonEdgeWall { u: usize, v: usize, rest: SubsetMask },
    /// Wall-crossing form `n(u, v, rest)` for an edge `{u, v}`.
    EdgeWall { u: usize, v: usize, rest: SubsetMask },
}

impl fmt::Display for FormTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormTag::Apex => f.write_str("apex"),
            FormTag::NonClique { set, u, v } => write!(f, "non-clique S={set} pair {{{u},{v}}}"),
            FormTag::NonEdgeWall { u, v, rest } => write!(f, "non-edge {{{u},{v}}} S={rest}"),
            FormTag::EdgeWall { u, v, rest } => write!(f, "edge {{{u},{v}}} S={rest}"),
        }
    }
}

/// A sparse integer functional `Σ c_X f_X` on `R^{2^n}` with its provenance.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm {
    coeffs: Vec<(SubsetMask, i64)>,
    tag: FormTag,
}

impl LinearForm {
    /// Merges repeated masks and drops zero coefficients; terms end up sorted
    /// by mask.
    pub fn new(terms: impl IntoIterator<Item = (SubsetMask, i64)>, tag: FormTag) -> Self {
        let mut coeffs: Vec<(SubsetMask, i64)> = Vec::new();
        let mut sorted: Vec<(SubsetMask, i64)> = terms.into_iter().collect();
        sorted.sort_by_key(|&(s, _)| s);
        for (s, c) in sorted {
            match coeffs.last_mut() {
                Some((last, acc)) if *last == s => *acc += c,
                _ => coeffs.push((s, c)),
            }
        }
        coeffs.retain(|&(_, c)| c != 0);
        LinearForm { coeffs, tag }
    }

    /// `n(u, v, S) = f_{S∪u} + f_{S∪v} - f_S - f_{S∪uv}`.
    pub fn wall(u: usize, v: usize, rest: SubsetMask, tag: FormTag) -> Self {
        LinearForm::new(
            [
                (rest.with(u), 1),
                (rest.with(v), 1),
                (rest, -1),
                (rest.with(u).with(v), -1),
            ],
            tag,
        )
    }

    /// `f_∅ + f_V`.
    pub fn apex(n: usize) -> Self {
        LinearForm::new([(SubsetMask::EMPTY, 1), (SubsetMask::full(n), 1)], FormTag::Apex)
    }

    pub fn coeffs(&self) -> &[(SubsetMask, i64)] {
        &self.coeffs
    }

    pub fn tag(&self) -> FormTag {
        self.tag
    }

    pub fn coefficient(&self, s: SubsetMask) -> i64 {
        self.coeffs
            .binary_search_by_key(&s, |&(m, _)| m)
            .map(|i| self.coeffs[i].1)
            .unwrap_or(0)
    }

    pub fn eval<T: Scalar>(&self, h: &HeightVector<T>) -> T {
        self.coeffs.iter().fold(T::zero(), |acc, &(s, c)| {
            acc + T::from_int(c) * h[s].clone()
        })
    }

    /// Dense coefficient row of length `2^n`.
    pub fn dense<T: Scalar>(&self, n: usize) -> Vec<T> {
        let mut row = vec![T::zero(); 1 << n];
        for &(s, c) in &self.coeffs {
            row[s.index()] = T::from_int(c);
        }
        row
    }

    /// Sum of two forms; the tag of `self` is kept.
    #[must_use]
    pub fn plus(&self, other: &LinearForm) -> LinearForm {
        LinearForm::new(self.coeffs.iter().chain(&other.coeffs).copied(), self.tag)
    }

    /// Readable rendering such as `h{0} + h{1} - h{} - h{0,1}`.
    pub fn to_expression(&self) -> String {
        let mut out = String::new();
        for (i, &(s, c)) in self.coeffs.iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            if c.abs() != 1 {
                out.push_str(&c.abs().to_string());
            }
            out.push_str(&format!("h{s}"));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expression())
    }
}

/// A polyhedral cone in `R^{2^n}`: `equations` must vanish and `inequalities`
/// must be nonnegative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeDescription {
    pub n: usize,
    pub equations: Vec<LinearForm>,
    pub inequalities: Vec<LinearForm>,
}

impl ConeDescription {
    pub fn forms(&self) -> impl Iterator<Item = &LinearForm> {
        self.equations.iter().chain(&self.inequalities)
    }

    /// Removes the inequality with the given tag, returning it.
    pub fn remove_inequality(&mut self, tag: FormTag) -> Option<LinearForm> {
        let i = self.inequalities.iter().position(|f| f.tag() == tag)?;
        Some(self.inequalities.remove(i))
    }
}
