//! Polynomial differential forms and their calculus.
//!
//! A form is stored as a map from alternators (strictly increasing index
//! sets) to polynomial coefficients, i.e. a finite sum of monomials
//! `x^a dx_s`. All operations are pure and exact.

use crate::error::FormError;
use crate::poly::{ExponentVector, Polynomial};
use crate::scalar::ExactScalar;
use itertools::Itertools;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// Strictly increasing list of 0-based axis indices; the wedge factor
/// `dx_{s(1)} ∧ … ∧ dx_{s(k)}`. The empty alternator is the unique
/// alternator of 0-forms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Alternator(Vec<usize>);

impl Alternator {
    pub fn empty() -> Self {
        Alternator(Vec::new())
    }

    /// Builds an alternator from already sorted, strictly increasing axes.
    pub fn new(axes: Vec<usize>) -> Self {
        debug_assert!(axes.windows(2).all(|w| w[0] < w[1]));
        Alternator(axes)
    }

    /// Sorts arbitrary axes into an alternator together with the sign of the
    /// sorting permutation. `None` if an axis repeats.
    pub fn from_unsorted(axes: &[usize]) -> Option<(Alternator, i32)> {
        let mut v: Vec<usize> = axes.to_vec();
        let mut sign = 1;
        // insertion sort, counting inversions
        for i in 1..v.len() {
            let mut j = i;
            while j > 0 && v[j - 1] > v[j] {
                v.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if v.windows(2).any(|w| w[0] == w[1]) {
            None
        } else {
            Some((Alternator(v), sign))
        }
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn axes(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, axis: usize) -> bool {
        self.0.binary_search(&axis).is_ok()
    }

    /// Inserts `axis`, returning the new alternator and the sign picked up
    /// by moving `dx_axis` from the front to its sorted slot. `None` if the
    /// axis is already present.
    pub fn insert(&self, axis: usize) -> Option<(Alternator, i32)> {
        match self.0.binary_search(&axis) {
            Ok(_) => None,
            Err(pos) => {
                let mut v = self.0.clone();
                v.insert(pos, axis);
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                Some((Alternator(v), sign))
            }
        }
    }

    /// Removes the entry at position `idx`.
    pub fn remove_at(&self, idx: usize) -> Alternator {
        let mut v = self.0.clone();
        v.remove(idx);
        Alternator(v)
    }

    /// All alternators of order `k` on `n` axes, in lexicographic order.
    pub fn all(n: usize, k: usize) -> Vec<Alternator> {
        (0..n).combinations(k).map(Alternator).collect()
    }

    /// Human-readable label: "dx", "dxdy", ...; "1" for the empty alternator.
    pub fn label(&self) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|&a| format!("d{}", axis_name(a)))
            .collect()
    }

    /// Inverse of [`Alternator::label`].
    pub fn from_label(label: &str, n: usize) -> Option<Alternator> {
        if label == "1" || label.is_empty() {
            return Some(Alternator::empty());
        }
        let mut axes = Vec::new();
        let mut chars = label.chars();
        while let Some(c) = chars.next() {
            if c != 'd' {
                return None;
            }
            let v = chars.next()?;
            let axis = axis_index(v)?;
            if axis >= n {
                return None;
            }
            axes.push(axis);
        }
        if axes.windows(2).all(|w| w[0] < w[1]) {
            Some(Alternator(axes))
        } else {
            None
        }
    }
}

pub fn axis_name(axis: usize) -> char {
    match axis {
        0 => 'x',
        1 => 'y',
        2 => 'z',
        _ => panic!("axis {axis} has no variable name"),
    }
}

pub fn axis_index(name: char) -> Option<usize> {
    match name {
        'x' => Some(0),
        'y' => Some(1),
        'z' => Some(2),
        _ => None,
    }
}

/// Polynomial differential `k`-form on `R^n`.
///
/// Invariants: every alternator key has length `form_order`, no stored
/// component polynomial is zero, and `form_order <= ambient_dim` unless the
/// form is zero (the exterior derivative of an `n`-form is represented as a
/// zero form of order `n + 1`).
#[derive(Clone, Debug)]
pub struct DifferentialForm {
    ambient_dim: usize,
    form_order: usize,
    components: BTreeMap<Alternator, Polynomial>,
}

impl DifferentialForm {
    pub fn zero(n: usize, k: usize) -> Self {
        DifferentialForm {
            ambient_dim: n,
            form_order: k,
            components: BTreeMap::new(),
        }
    }

    /// Single-component form `p dx_s`.
    pub fn from_component(n: usize, alt: Alternator, poly: Polynomial) -> Self {
        assert_eq!(poly.ambient_dim(), n);
        assert!(alt.order() <= n);
        assert!(alt.axes().iter().all(|&a| a < n));
        let k = alt.order();
        let mut components = BTreeMap::new();
        if !poly.is_zero() {
            components.insert(alt, poly);
        }
        DifferentialForm {
            ambient_dim: n,
            form_order: k,
            components,
        }
    }

    /// The form monomial `c x^exps dx_axes`.
    pub fn monomial(n: usize, exps: ExponentVector, axes: Vec<usize>, c: ExactScalar) -> Self {
        DifferentialForm::from_component(n, Alternator::new(axes), Polynomial::monomial(n, exps, c))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn form_order(&self) -> usize {
        self.form_order
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = (&Alternator, &Polynomial)> {
        self.components.iter()
    }

    pub fn component(&self, alt: &Alternator) -> Option<&Polynomial> {
        self.components.get(alt)
    }

    fn accumulate(&mut self, alt: Alternator, poly: &Polynomial) {
        if poly.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.components.entry(alt) {
            Entry::Vacant(e) => {
                e.insert(poly.clone());
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + poly;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Componentwise sum. Fails if dimensions or form orders differ
    /// (zero forms are compatible with any order).
    pub fn try_add(&self, other: &DifferentialForm) -> Result<DifferentialForm, FormError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(FormError::DimensionMismatch(
                self.ambient_dim,
                other.ambient_dim,
            ));
        }
        if self.form_order != other.form_order && !self.is_zero() && !other.is_zero() {
            return Err(FormError::OrderMismatch(self.form_order, other.form_order));
        }
        let mut out = self.clone();
        if out.is_zero() {
            out.form_order = other.form_order;
        }
        for (alt, poly) in &other.components {
            out.accumulate(alt.clone(), poly);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &DifferentialForm) -> Result<DifferentialForm, FormError> {
        self.try_add(&-other)
    }

    pub fn scale(&self, c: &ExactScalar) -> DifferentialForm {
        if c.is_zero() {
            return DifferentialForm::zero(self.ambient_dim, self.form_order);
        }
        DifferentialForm {
            ambient_dim: self.ambient_dim,
            form_order: self.form_order,
            components: self
                .components
                .iter()
                .map(|(a, p)| (a.clone(), p.scale(c)))
                .collect(),
        }
    }

    /// Exterior product. Bilinear; merging alternators picks up the sign of
    /// the sorting permutation and a repeated axis kills the term.
    pub fn wedge(&self, other: &DifferentialForm) -> Result<DifferentialForm, FormError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(FormError::DimensionMismatch(
                self.ambient_dim,
                other.ambient_dim,
            ));
        }
        let order = self.form_order + other.form_order;
        if order > self.ambient_dim {
            return Err(FormError::OrderExceedsDimension {
                order,
                dim: self.ambient_dim,
            });
        }
        let mut out = DifferentialForm::zero(self.ambient_dim, order);
        for (sa, pa) in &self.components {
            for (sb, pb) in &other.components {
                let merged: Vec<usize> = sa.axes().iter().chain(sb.axes()).copied().collect();
                if let Some((alt, sign)) = Alternator::from_unsorted(&merged) {
                    let prod = pa * pb;
                    let signed = if sign < 0 { -&prod } else { prod };
                    out.accumulate(alt, &signed);
                }
            }
        }
        Ok(out)
    }

    /// Exterior derivative. Total: for an `n`-form the result is the zero
    /// form of order `n + 1`, which compares equal to zero.
    pub fn d(&self) -> DifferentialForm {
        let mut out = DifferentialForm::zero(self.ambient_dim, self.form_order + 1);
        for (alt, poly) in &self.components {
            for axis in 0..self.ambient_dim {
                let dp = poly.derivative(axis);
                if dp.is_zero() {
                    continue;
                }
                if let Some((new_alt, sign)) = alt.insert(axis) {
                    let signed = if sign < 0 { -&dp } else { dp };
                    out.accumulate(new_alt, &signed);
                }
            }
        }
        out
    }

    /// Koszul operator: contraction with the Euler vector field. On a
    /// monomial `x^a dx_s` it yields the alternating sum over positions of
    /// `x^a x_{s(i)} dx_{s without s(i)}`. The Koszul operator of a 0-form
    /// is the zero 0-form.
    pub fn koszul(&self) -> DifferentialForm {
        let order = self.form_order.saturating_sub(1);
        let mut out = DifferentialForm::zero(self.ambient_dim, order);
        for (alt, poly) in &self.components {
            for (idx, &axis) in alt.axes().iter().enumerate() {
                let term = poly.mul_var(axis);
                let signed = if idx % 2 == 1 { -&term } else { term };
                out.accumulate(alt.remove_at(idx), &signed);
            }
        }
        out
    }

    /// Maximum total degree `|a|` over all stored terms.
    pub fn total_degree(&self) -> Result<u32, FormError> {
        self.components
            .values()
            .filter_map(Polynomial::total_degree)
            .max()
            .ok_or(FormError::DegreeUndefined)
    }

    /// Linear degree: for a monomial `x^a dx_s`, the number of axes outside
    /// `s` whose exponent is exactly 1; for a sum, the minimum over stored
    /// monomials.
    pub fn linear_degree(&self) -> Result<u32, FormError> {
        let mut min: Option<u32> = None;
        for (alt, poly) in &self.components {
            for (exps, _) in poly.terms() {
                let ldeg = (0..self.ambient_dim)
                    .filter(|&a| !alt.contains(a) && exps.get(a) == 1)
                    .count() as u32;
                min = Some(match min {
                    None => ldeg,
                    Some(m) => m.min(ldeg),
                });
            }
        }
        min.ok_or(FormError::LinearDegreeUndefined)
    }

    /// Largest exponent of `x_axis` appearing in any coefficient.
    pub fn max_exponent(&self, axis: usize) -> u32 {
        self.components
            .values()
            .map(|p| p.max_exponent(axis))
            .max()
            .unwrap_or(0)
    }
}

impl PartialEq for DifferentialForm {
    /// Forms are equal when their canonical term sets agree. Zero forms of
    /// different recorded orders compare equal.
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.components == other.components
            && (self.form_order == other.form_order || (self.is_zero() && other.is_zero()))
    }
}

impl Eq for DifferentialForm {}

impl Add<&DifferentialForm> for &DifferentialForm {
    type Output = DifferentialForm;
    fn add(self, rhs: &DifferentialForm) -> DifferentialForm {
        self.try_add(rhs).expect("incompatible forms")
    }
}

impl Sub<&DifferentialForm> for &DifferentialForm {
    type Output = DifferentialForm;
    fn sub(self, rhs: &DifferentialForm) -> DifferentialForm {
        self.try_sub(rhs).expect("incompatible forms")
    }
}

impl Neg for &DifferentialForm {
    type Output = DifferentialForm;
    fn neg(self) -> DifferentialForm {
        DifferentialForm {
            ambient_dim: self.ambient_dim,
            form_order: self.form_order,
            components: self
                .components
                .iter()
                .map(|(a, p)| (a.clone(), -p))
                .collect(),
        }
    }
}

impl fmt::Display for DifferentialForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::render::render_form(self))
    }
}
