//! Standard spanning sets for the classical polynomial form spaces.
//!
//! These sets are the rank oracles for basis verification: `H_r` (homogeneous
//! forms), `H_{r,l}` (homogeneous with a linear-degree floor), the Koszul
//! image sums `J_r`, the polynomial families `P_r` and `P^-_r`, the tensor
//! product family `Q^-_r`, and the serendipity families `S_r` and `S^-_r`.
//! Spanning sets may contain linear dependencies; only exact duplicates are
//! removed where noted.

use crate::error::SpaceError;
use crate::form::{Alternator, DifferentialForm};
use crate::poly::ExponentVector;
use crate::scalar::ExactScalar;
use std::fmt;

/// Which classical space a spanning set generates.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpaceKind {
    /// `H_r`: homogeneous polynomial forms of degree exactly `r`.
    Homogeneous { r: u32 },
    /// `H_{r,l}`: homogeneous forms with linear degree at least `l`.
    HomogeneousMinLdeg { r: u32, l: u32 },
    /// `J_r`: sum over `l >= 1` of the Koszul images of `H_{r+l-1, l}`.
    KoszulSum { r: u32 },
    /// `P_r`: polynomials of degree at most `r`.
    Polynomial { r: u32 },
    /// `P^-_r`: trimmed polynomial family.
    TrimmedPolynomial { r: u32 },
    /// `Q^-_r`: tensor product family.
    TensorProduct { r: u32 },
    /// `S_r`: serendipity family.
    Serendipity { r: u32 },
    /// `S^-_r`: trimmed serendipity family.
    TrimmedSerendipity { r: u32 },
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceKind::Homogeneous { r } => write!(f, "H_{r}"),
            SpaceKind::HomogeneousMinLdeg { r, l } => write!(f, "H_{{{r},{l}}}"),
            SpaceKind::KoszulSum { r } => write!(f, "J_{r}"),
            SpaceKind::Polynomial { r } => write!(f, "P_{r}"),
            SpaceKind::TrimmedPolynomial { r } => write!(f, "P_{r}^-"),
            SpaceKind::TensorProduct { r } => write!(f, "Q_{r}^-"),
            SpaceKind::Serendipity { r } => write!(f, "S_{r}"),
            SpaceKind::TrimmedSerendipity { r } => write!(f, "S_{r}^-"),
        }
    }
}

/// Which construction rule produced a spanning set element.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpanTag {
    /// Monomial of `H_{degree}`.
    H { degree: u32 },
    /// Koszul image of an `H_{degree}` monomial (trimmed polynomial part).
    KappaH { degree: u32 },
    /// Koszul image of an `H_{degree, min_ldeg}` monomial (a `J` summand).
    J { degree: u32, min_ldeg: u32 },
    /// Exterior derivative of a `J` element.
    DJ { degree: u32, min_ldeg: u32 },
    /// Tensor product monomial.
    Q,
}

impl fmt::Display for SpanTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpanTag::H { degree } => write!(f, "H_{degree}"),
            SpanTag::KappaH { degree } => write!(f, "kH_{degree}"),
            SpanTag::J { degree, min_ldeg } => write!(f, "kH_{{{degree},{min_ldeg}}}"),
            SpanTag::DJ { degree, min_ldeg } => write!(f, "dkH_{{{degree},{min_ldeg}}}"),
            SpanTag::Q => write!(f, "Q"),
        }
    }
}

/// Ordered list of forms spanning a classical space, possibly with linear
/// dependencies, each tagged with the rule that produced it.
#[derive(Clone, Debug)]
pub struct SpanningSet {
    pub space: SpaceKind,
    pub ambient_dim: usize,
    pub form_order: usize,
    elements: Vec<DifferentialForm>,
    tags: Vec<SpanTag>,
}

impl SpanningSet {
    fn new(space: SpaceKind, n: usize, k: usize) -> Self {
        SpanningSet {
            space,
            ambient_dim: n,
            form_order: k,
            elements: Vec::new(),
            tags: Vec::new(),
        }
    }

    fn push(&mut self, form: DifferentialForm, tag: SpanTag) {
        debug_assert_eq!(form.ambient_dim(), self.ambient_dim);
        self.elements.push(form);
        self.tags.push(tag);
    }

    fn extend_from(&mut self, other: SpanningSet) {
        for (e, t) in other.elements.into_iter().zip(other.tags) {
            self.push(e, t);
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[DifferentialForm] {
        &self.elements
    }

    pub fn tags(&self) -> &[SpanTag] {
        &self.tags
    }

    pub fn iter(&self) -> impl Iterator<Item = (&DifferentialForm, &SpanTag)> {
        self.elements.iter().zip(self.tags.iter())
    }
}

fn check_order(k: usize, n: usize) -> Result<(), SpaceError> {
    if k > n {
        Err(SpaceError::InvalidOrder { k, n })
    } else {
        Ok(())
    }
}

fn check_r(space: &'static str, r: u32) -> Result<(), SpaceError> {
    if r < 1 {
        Err(SpaceError::DegreeTooSmall { space, r })
    } else {
        Ok(())
    }
}

/// All exponent vectors of length `n` with total degree exactly `r`, in
/// descending lexicographic order (`x^r` first).
fn exponents_of_degree(n: usize, r: u32) -> Vec<ExponentVector> {
    fn rec(n: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if prefix.len() == n - 1 {
            prefix.push(left);
            out.push(ExponentVector::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            rec(n, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, r, &mut Vec::new(), &mut out);
    out
}

/// Monomial basis of `H_r Λ^k(R^n)`: all `x^a dx_s` with `|a| = r`,
/// `|s| = k`. Alternators iterate lexicographically, monomials in
/// descending lexicographic exponent order.
pub fn homogeneous_basis(r: u32, k: usize, n: usize) -> Result<SpanningSet, SpaceError> {
    check_order(k, n)?;
    let mut set = SpanningSet::new(SpaceKind::Homogeneous { r }, n, k);
    for alt in Alternator::all(n, k) {
        for exps in exponents_of_degree(n, r) {
            set.push(
                DifferentialForm::monomial(n, exps, alt.axes().to_vec(), ExactScalar::one()),
                SpanTag::H { degree: r },
            );
        }
    }
    Ok(set)
}

/// Monomial basis of `H_{r,l} Λ^k(R^n)`: the subset of `homogeneous_basis`
/// with linear degree at least `l`. Filtering monomials is exact because the
/// linear degree of a sum is the minimum over its monomials.
pub fn homogeneous_ldeg_basis(
    r: u32,
    k: usize,
    n: usize,
    l: u32,
) -> Result<SpanningSet, SpaceError> {
    let base = homogeneous_basis(r, k, n)?;
    let mut set = SpanningSet::new(SpaceKind::HomogeneousMinLdeg { r, l }, n, k);
    for form in base.elements {
        let ldeg = form.linear_degree().expect("monomials are nonzero");
        if ldeg >= l {
            set.push(form, SpanTag::H { degree: r });
        }
    }
    Ok(set)
}

/// Spanning set of `J_r Λ^k(R^n)`, the sum over `l >= 1` of the Koszul
/// images of `H_{r+l-1, l} Λ^{k+1}`. The loop over `l` runs to `n - k - 1`
/// inclusive, which is exhaustive: a `(k+1)`-form monomial has at most
/// `n - k - 1` axes outside its alternator. Exact duplicates are removed;
/// linear dependencies are kept.
pub fn j_span(r: u32, k: usize, n: usize) -> Result<SpanningSet, SpaceError> {
    check_order(k, n)?;
    check_r("J_r", r)?;
    let mut set = SpanningSet::new(SpaceKind::KoszulSum { r }, n, k);
    if k + 1 > n {
        return Ok(set);
    }
    let top = (n - k).saturating_sub(1);
    for l in 1..=top as u32 {
        let source = homogeneous_ldeg_basis(r + l - 1, k + 1, n, l)?;
        for form in source.elements {
            let image = form.koszul();
            if image.is_zero() {
                continue;
            }
            if set.elements.contains(&image) {
                continue;
            }
            set.push(
                image,
                SpanTag::J {
                    degree: r + l - 1,
                    min_ldeg: l,
                },
            );
        }
    }
    Ok(set)
}

/// Basis of `P_r Λ^k(R^n)`: concatenation of the homogeneous bases of
/// degrees `0..=r`.
pub fn p_span(r: u32, k: usize, n: usize) -> Result<SpanningSet, SpaceError> {
    check_order(k, n)?;
    let mut set = SpanningSet::new(SpaceKind::Polynomial { r }, n, k);
    for j in 0..=r {
        set.extend_from(homogeneous_basis(j, k, n)?);
    }
    Ok(set)
}

/// Spanning set of `P^-_r Λ^k(R^n) = P_{r-1} Λ^k + κ H_{r-1} Λ^{k+1}`.
pub fn p_minus_span(r: u32, k: usize, n: usize) -> Result<SpanningSet, SpaceError> {
    check_order(k, n)?;
    check_r("P_r^-", r)?;
    let mut set = SpanningSet::new(SpaceKind::TrimmedPolynomial { r }, n, k);
    set.extend_from(p_span(r - 1, k, n)?);
    if k < n {
        for form in homogeneous_basis(r - 1, k + 1, n)?.elements {
            let image = form.koszul();
            if image.is_zero() {
                continue;
            }
            set.push(image, SpanTag::KappaH { degree: r - 1 });
        }
    }
    Ok(set)
}

/// Monomial basis of `Q^-_r Λ^k(R^n)`: for each alternator, all monomial
/// coefficients with per-variable degree at most `r - 1` on alternator axes
/// and at most `r` elsewhere. Cardinality `C(n,k) r^k (r+1)^(n-k)`.
pub fn q_minus_span(r: u32, k: usize, n: usize) -> Result<SpanningSet, SpaceError> {
    check_order(k, n)?;
    check_r("Q_r^-", r)?;
    let mut set = SpanningSet::new(SpaceKind::TensorProduct { r }, n, k);
    for alt in Alternator::all(n, k) {
        let caps: Vec<u32> = (0..n)
            .map(|a| if alt.contains(a) { r - 1 } else { r })
            .collect();
        let mut exps = vec![0u32; n];
        loop {
            set.push(
                DifferentialForm::monomial(
                    n,
                    ExponentVector::new(exps.clone()),
                    alt.axes().to_vec(),
                    ExactScalar::one(),
                ),
                SpanTag::Q,
            );
            // odometer, last axis fastest
            let mut done = true;
            for axis in (0..n).rev() {
                if exps[axis] < caps[axis] {
                    exps[axis] += 1;
                    done = false;
                    break;
                }
                exps[axis] = 0;
            }
            if done {
                break;
            }
        }
    }
    Ok(set)
}

/// Spanning set of `S_r Λ^k = P_r Λ^k + J_r Λ^k + d J_{r+1} Λ^{k-1}`.
pub fn s_span(r: u32, k: usize, n: usize) -> Result<SpanningSet, SpaceError> {
    check_order(k, n)?;
    check_r("S_r", r)?;
    let mut set = SpanningSet::new(SpaceKind::Serendipity { r }, n, k);
    set.extend_from(p_span(r, k, n)?);
    let j = j_span(r, k, n)?;
    set.extend_from(SpanningSet {
        space: set.space,
        ..j
    });
    if k >= 1 {
        for (form, tag) in j_span(r + 1, k - 1, n)?.iter() {
            let image = form.d();
            if image.is_zero() {
                continue;
            }
            let (degree, min_ldeg) = match tag {
                SpanTag::J { degree, min_ldeg } => (*degree, *min_ldeg),
                _ => unreachable!("j_span elements carry J tags"),
            };
            set.push(image, SpanTag::DJ { degree, min_ldeg });
        }
    }
    Ok(set)
}

/// Spanning set of `S^-_r Λ^k = P^-_r Λ^k + J_r Λ^k + d J_r Λ^{k-1}`.
pub fn s_minus_span(r: u32, k: usize, n: usize) -> Result<SpanningSet, SpaceError> {
    check_order(k, n)?;
    check_r("S_r^-", r)?;
    let mut set = SpanningSet::new(SpaceKind::TrimmedSerendipity { r }, n, k);
    set.extend_from(p_minus_span(r, k, n)?);
    let j = j_span(r, k, n)?;
    set.extend_from(SpanningSet {
        space: set.space,
        ..j
    });
    if k >= 1 {
        for (form, tag) in j_span(r, k - 1, n)?.iter() {
            let image = form.d();
            if image.is_zero() {
                continue;
            }
            let (degree, min_ldeg) = match tag {
                SpanTag::J { degree, min_ldeg } => (*degree, *min_ldeg),
                _ => unreachable!("j_span elements carry J tags"),
            };
            set.push(image, SpanTag::DJ { degree, min_ldeg });
        }
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::render::render_form;
    use std::collections::BTreeSet;

    fn binom(n: u64, k: u64) -> u64 {
        if k > n {
            return 0;
        }
        let mut r = 1u64;
        for i in 0..k {
            r = r * (n - i) / (i + 1);
        }
        r
    }

    fn rendered(set: &SpanningSet) -> BTreeSet<String> {
        set.elements().iter().map(render_form).collect()
    }

    #[test]
    fn homogeneous_cardinalities() {
        // (0,0,2) -> {1}
        let s = homogeneous_basis(0, 0, 2).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(rendered(&s).into_iter().next().unwrap(), "1");

        // (1,1,2) -> {x dx, y dx, x dy, y dy}
        let s = homogeneous_basis(1, 1, 2).unwrap();
        assert_eq!(
            rendered(&s),
            ["x dx", "y dx", "x dy", "y dy"]
                .into_iter()
                .map(String::from)
                .collect()
        );

        // |H_r Λ^k(R^3)| = C(r+2, 2) C(3, k)
        for r in 0..=5u32 {
            for k in 0..=3usize {
                let s = homogeneous_basis(r, k, 3).unwrap();
                let expected = binom(u64::from(r) + 2, 2) * binom(3, k as u64);
                assert_eq!(s.len() as u64, expected, "r={r}, k={k}");
            }
        }

        assert!(homogeneous_basis(1, 4, 3).is_err());
    }

    #[test]
    fn ldeg_filtering() {
        // (1,0,2,1) -> {x, y}
        let s = homogeneous_ldeg_basis(1, 0, 2, 1).unwrap();
        assert_eq!(
            rendered(&s),
            ["x", "y"].into_iter().map(String::from).collect()
        );

        // (2,0,2,1) -> {xy}
        let s = homogeneous_ldeg_basis(2, 0, 2, 1).unwrap();
        assert_eq!(
            rendered(&s),
            ["x*y"].into_iter().map(String::from).collect()
        );

        // (r,n,n,1) is empty: top forms have linear degree 0
        for n in 2..=3usize {
            for r in 0..=4u32 {
                assert!(homogeneous_ldeg_basis(r, n, n, 1).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn j_span_shapes() {
        // no (n+1)-forms exist
        for n in 2..=3usize {
            for r in 1..=4u32 {
                assert!(j_span(r, n, n).unwrap().is_empty());
            }
        }

        // every element of j_span(1,1,3) is homogeneous of degree 2
        let j = j_span(1, 1, 3).unwrap();
        assert!(!j.is_empty());
        for e in j.elements() {
            assert_eq!(e.total_degree().unwrap(), 2);
            assert_eq!(e.form_order(), 1);
        }
    }

    #[test]
    fn d_of_j_span_113_matches_known_span() {
        let j = j_span(1, 1, 3).unwrap();
        let images: BTreeSet<String> = j.elements().iter().map(|f| render_form(&f.d())).collect();
        let expected: BTreeSet<String> = [
            "2*z dxdy + y dxdz - x dydz",
            "z dxdy + 2*y dxdz + x dydz",
            "-z dxdy + y dxdz + 2*x dydz",
        ]
        .into_iter()
        .map(String::from)
        .collect();
        assert_eq!(images, expected);
    }

    #[test]
    fn p_span_shapes() {
        // (1,0,2) -> {1, x, y}
        let s = p_span(1, 0, 2).unwrap();
        assert_eq!(
            rendered(&s),
            ["1", "x", "y"].into_iter().map(String::from).collect()
        );

        // |P_r Λ^0(R^3)| = C(r+3, 3)
        for r in 0..=5u32 {
            let s = p_span(r, 0, 3).unwrap();
            assert_eq!(s.len() as u64, binom(u64::from(r) + 3, 3));
        }

        // (0,1,2) -> {dx, dy}
        let s = p_span(0, 1, 2).unwrap();
        assert_eq!(
            rendered(&s),
            ["1 dx", "1 dy"].into_iter().map(String::from).collect()
        );
    }

    #[test]
    fn p_minus_112() {
        // (1,1,2) -> {dx, dy, x dy - y dx}
        let s = p_minus_span(1, 1, 2).unwrap();
        assert_eq!(
            rendered(&s),
            ["1 dx", "1 dy", "-y dx + x dy"]
                .into_iter()
                .map(String::from)
                .collect()
        );
    }

    #[test]
    fn q_minus_shapes() {
        // (1,0,2) -> {1, x, y, xy}
        let s = q_minus_span(1, 0, 2).unwrap();
        assert_eq!(
            rendered(&s),
            ["1", "x", "y", "x*y"]
                .into_iter()
                .map(String::from)
                .collect()
        );

        // (1,1,2) -> {dx, y dx, dy, x dy}
        let s = q_minus_span(1, 1, 2).unwrap();
        assert_eq!(
            rendered(&s),
            ["1 dx", "y dx", "1 dy", "x dy"]
                .into_iter()
                .map(String::from)
                .collect()
        );

        // cardinality law on the cube
        for r in 1..=4u32 {
            for k in 0..=3usize {
                let s = q_minus_span(r, k, 3).unwrap();
                let expected = binom(3, k as u64)
                    * u64::from(r).pow(k as u32)
                    * u64::from(r + 1).pow(3 - k as u32);
                assert_eq!(s.len() as u64, expected, "r={r}, k={k}");
            }
        }

        assert!(q_minus_span(0, 0, 2).is_err());
    }

    #[test]
    fn trimmed_polynomial_span_ranks() {
        use crate::verify::rank_of_forms;
        fn binom(n: u64, k: u64) -> u64 {
            let mut r = 1;
            for i in 0..k {
                r = r * (n - i) / (i + 1);
            }
            r
        }
        for n in 2..=3usize {
            for r in 1..=3u32 {
                // for 0-forms the Koszul part is redundant: P^-_r Λ^0 = P_r Λ^0
                let trimmed = p_minus_span(r, 0, n).unwrap();
                let plain = p_span(r, 0, n).unwrap();
                let rank_t = rank_of_forms(trimmed.elements()).unwrap();
                let rank_p = rank_of_forms(plain.elements()).unwrap();
                let mut both = trimmed.elements().to_vec();
                both.extend_from_slice(plain.elements());
                assert_eq!(rank_t, rank_p);
                assert_eq!(rank_of_forms(&both).unwrap(), rank_p);

                // for top forms the Koszul part is empty: rank = dim P_{r-1} Λ^n
                let top = p_minus_span(r, n, n).unwrap();
                let expected = binom(u64::from(r) - 1 + n as u64, n as u64);
                assert_eq!(rank_of_forms(top.elements()).unwrap() as u64, expected);
            }
        }
    }

    #[test]
    fn trimmed_serendipity_rank_113() {
        use crate::verify::rank_of_forms;
        let set = s_minus_span(1, 1, 3).unwrap();
        assert_eq!(rank_of_forms(set.elements()).unwrap(), 12);
    }

    #[test]
    fn serendipity_spans_build() {
        let s = s_span(1, 1, 3).unwrap();
        assert!(!s.is_empty());
        // P part + J part + dJ part all present
        assert!(s.tags().iter().any(|t| matches!(t, SpanTag::H { .. })));
        assert!(s.tags().iter().any(|t| matches!(t, SpanTag::J { .. })));
        assert!(s.tags().iter().any(|t| matches!(t, SpanTag::DJ { .. })));

        let sm = s_minus_span(1, 1, 3).unwrap();
        assert!(!sm.is_empty());
        assert!(s_span(0, 1, 3).is_err());
    }
}
