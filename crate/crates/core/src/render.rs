//! Canonical textual rendering of polynomials and forms.
//!
//! The canonical rendering is fully expanded: terms sorted by alternator,
//! then by exponent vector in descending lexicographic order, coefficients
//! printed as integers or `p/q`, variables named `x, y, z`. Example:
//! `2*x*(y+1)` renders as `2*x*y + 2*x`.

use crate::form::DifferentialForm;
use crate::poly::Polynomial;
use crate::scalar::ExactScalar;
use num_traits::One;

fn render_monomial(exps: &[u32]) -> String {
    let mut parts = Vec::new();
    for (axis, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let name = crate::form::axis_name(axis);
        if e == 1 {
            parts.push(name.to_string());
        } else {
            parts.push(format!("{name}^{e}"));
        }
    }
    parts.join("*")
}

fn coeff_magnitude(c: &ExactScalar) -> String {
    let a = c.abs();
    if a.denom().is_one() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

/// Expanded canonical rendering; "0" for the zero polynomial.
pub fn render_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    // descending lexicographic exponent order
    for (i, (exps, coeff)) in p.terms().collect::<Vec<_>>().into_iter().rev().enumerate() {
        let neg = coeff.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = coeff_magnitude(coeff);
        let mono = render_monomial(exps.as_slice());
        if mono.is_empty() {
            out.push_str(&mag);
        } else if mag == "1" {
            out.push_str(&mono);
        } else {
            out.push_str(&mag);
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

/// Canonical rendering of a form: components in alternator order, each as
/// `<polynomial> <alternator>`; a bare polynomial for 0-forms; "0" if zero.
pub fn render_form(w: &DifferentialForm) -> String {
    if w.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (alt, poly)) in w.components().enumerate() {
        let mut p = render_polynomial(poly);
        if alt.order() > 0 {
            p.push(' ');
            p.push_str(&alt.label());
        }
        if i == 0 {
            out.push_str(&p);
        } else if let Some(rest) = p.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&p);
        }
    }
    out
}

/// LaTeX rendering of a polynomial (expanded).
pub fn latex_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (exps, coeff)) in p.terms().collect::<Vec<_>>().into_iter().rev().enumerate() {
        let neg = coeff.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = coeff.abs();
        let mag = if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("\\tfrac{{{}}}{{{}}}", a.numer(), a.denom())
        };
        let mut mono = String::new();
        for (axis, e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let name = crate::form::axis_name(axis);
            if e == 1 {
                mono.push(name);
            } else {
                mono.push_str(&format!("{name}^{{{e}}}"));
            }
        }
        if mono.is_empty() {
            out.push_str(&mag);
        } else if mag == "1" {
            out.push_str(&mono);
        } else {
            out.push_str(&mag);
            out.push_str(&mono);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::form::Alternator;
    use crate::poly::Polynomial;

    #[test]
    fn expanded_product_rendering() {
        let n = 3;
        let x = Polynomial::variable(n, 0);
        let y = Polynomial::variable(n, 1);
        let z = Polynomial::variable(n, 2);
        let one = Polynomial::one(n);
        // 2*x*(y+1)*(z+1) expands to 2*x*y*z + 2*x*y + 2*x*z + 2*x
        let p = (&(&x * &(&y + &one)) * &(&z + &one)).scale(&ExactScalar::from_int(2));
        assert_eq!(render_polynomial(&p), "2*x*y*z + 2*x*y + 2*x*z + 2*x");
        let w = DifferentialForm::from_component(n, Alternator::new(vec![0]), p);
        assert_eq!(render_form(&w), "2*x*y*z + 2*x*y + 2*x*z + 2*x dx");
    }

    #[test]
    fn signs_and_fractions() {
        let n = 2;
        let x = Polynomial::variable(n, 0);
        let one = Polynomial::one(n);
        let p = &(&x * &x).scale(&ExactScalar::from_int(-1)) + &one;
        assert_eq!(render_polynomial(&p), "-x^2 + 1");
        let q = x.scale(&ExactScalar::ratio(1, 2));
        assert_eq!(render_polynomial(&q), "1/2*x");
        assert_eq!(render_polynomial(&Polynomial::zero(n)), "0");
    }

    #[test]
    fn zero_form_renders_as_zero() {
        assert_eq!(render_form(&DifferentialForm::zero(3, 1)), "0");
    }
}
