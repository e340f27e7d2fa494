//! Faces of the reference cube `[-1, 1]^n` and traces of forms onto them.

use crate::error::FormError;
use crate::form::DifferentialForm;
use crate::scalar::ExactScalar;
use itertools::Itertools;
use std::fmt;

/// A face of `[-1, 1]^n`, described by the axes that are pinned to +1 or -1.
/// The empty constraint list is the interior (the cube itself).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Face {
    ambient_dim: usize,
    constraints: Vec<(usize, i8)>,
}

impl Face {
    pub fn interior(n: usize) -> Self {
        Face {
            ambient_dim: n,
            constraints: Vec::new(),
        }
    }

    /// Builds a face from `(axis, value)` constraints; axes must be distinct
    /// and values in `{-1, +1}`.
    pub fn new(n: usize, mut constraints: Vec<(usize, i8)>) -> Result<Self, FormError> {
        constraints.sort_by_key(|&(a, _)| a);
        for w in constraints.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(FormError::RepeatedAxis(w[0].0));
            }
        }
        for &(axis, value) in &constraints {
            if axis >= n {
                return Err(FormError::AxisOutOfRange { axis, ambient: n });
            }
            if value != 1 && value != -1 {
                return Err(FormError::BadFaceValue(value));
            }
        }
        Ok(Face {
            ambient_dim: n,
            constraints,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.ambient_dim - self.constraints.len()
    }

    pub fn constraints(&self) -> &[(usize, i8)] {
        &self.constraints
    }

    pub fn constrains(&self, axis: usize) -> bool {
        self.constraints.iter().any(|&(a, _)| a == axis)
    }

    /// Axes not pinned by the face, in ascending order.
    pub fn free_axes(&self) -> Vec<usize> {
        (0..self.ambient_dim)
            .filter(|&a| !self.constrains(a))
            .collect()
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.constraints.is_empty() {
            return write!(f, "interior");
        }
        let parts: Vec<String> = self
            .constraints
            .iter()
            .map(|&(a, v)| {
                format!(
                    "{}={}",
                    crate::form::axis_name(a),
                    if v > 0 { "+1" } else { "-1" }
                )
            })
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

/// All faces of `[-1, 1]^n` of the given dimension, in a fixed order: pinned
/// axis sets ascending lexicographically, then sign patterns with +1 before
/// -1, rightmost slot fastest.
pub fn faces_of_cube(n: usize, dim: usize) -> Result<Vec<Face>, FormError> {
    if n > 3 {
        return Err(FormError::AmbientTooLarge(n));
    }
    if dim > n {
        return Err(FormError::FaceDimOutOfRange { dim, ambient: n });
    }
    let pinned = n - dim;
    let mut out = Vec::new();
    for axes in (0..n).combinations(pinned) {
        for signs in 0..(1u32 << pinned) {
            let constraints: Vec<(usize, i8)> = axes
                .iter()
                .enumerate()
                .map(|(slot, &axis)| {
                    let bit = (signs >> (pinned - 1 - slot)) & 1;
                    (axis, if bit == 0 { 1 } else { -1 })
                })
                .collect();
            out.push(Face {
                ambient_dim: n,
                constraints,
            });
        }
    }
    Ok(out)
}

impl DifferentialForm {
    /// Trace (pullback) of the form onto a face: components whose alternator
    /// touches a pinned axis are dropped, and pinned axes are substituted in
    /// the remaining coefficients. The result still lives in `n` variables.
    pub fn trace(&self, face: &Face) -> Result<DifferentialForm, FormError> {
        if self.ambient_dim() != face.ambient_dim() {
            return Err(FormError::DimensionMismatch(
                self.ambient_dim(),
                face.ambient_dim(),
            ));
        }
        let mut out = DifferentialForm::zero(self.ambient_dim(), self.form_order());
        'component: for (alt, poly) in self.components() {
            let mut p = poly.clone();
            for &(axis, value) in face.constraints() {
                if alt.contains(axis) {
                    continue 'component;
                }
                p = p.substitute(axis, &ExactScalar::from_int(i64::from(value)));
            }
            if !p.is_zero() {
                out = out.try_add(&DifferentialForm::from_component(
                    self.ambient_dim(),
                    alt.clone(),
                    p,
                ))?;
            }
        }
        Ok(out)
    }
}

/// Smallest dimension of a face on which the form has nonzero trace.
///
/// The trace of a `k`-form on a face of dimension below `k` vanishes
/// structurally (no alternator survives), so the scan starts at `k`; the
/// interior guarantees termination for nonzero input.
pub fn min_trace_dim(w: &DifferentialForm) -> Result<usize, FormError> {
    if w.is_zero() {
        return Err(FormError::MinTraceDimUndefined);
    }
    let n = w.ambient_dim();
    if n > 3 {
        return Err(FormError::AmbientTooLarge(n));
    }
    for dim in w.form_order()..=n {
        for face in faces_of_cube(n, dim)? {
            if !w.trace(&face)?.is_zero() {
                return Ok(dim);
            }
        }
    }
    unreachable!("a nonzero form has nonzero trace on the interior");
}
