//! Plain-text and LaTeX renderings of polynomials.

use super::poly::MultiPoly;
use super::scalar::Scalar;

fn monomial_text(exps: &[u16], var: char) -> String {
    let mut parts = Vec::new();
    for (i, &e) in exps.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("{var}{}", i + 1)),
            _ => parts.push(format!("{var}{}^{e}", i + 1)),
        }
    }
    parts.join("*")
}

fn monomial_latex(exps: &[u16], var: char) -> String {
    let mut out = String::new();
    for (i, &e) in exps.iter().enumerate() {
        match e {
            0 => {}
            1 => out.push_str(&format!("{var}_{{{}}}", i + 1)),
            _ => out.push_str(&format!("{var}_{{{}}}^{{{e}}}", i + 1)),
        }
    }
    out
}

/// Renders `f` as e.g. `x1^2 + (κ + 2)*x1*x2 - 1/2`, highest term first.
pub fn render_text<C: Scalar>(f: &MultiPoly<C>, var: char) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let one = C::one();
    let mut out = String::new();
    for (k, (m, c)) in f.sorted_terms().into_iter().enumerate() {
        let mono = monomial_text(m.exps(), var);
        let (neg, abs) = match c.as_rational() {
            Some(r) if r < num_traits::Zero::zero() => (true, c.neg()),
            _ => (false, c.clone()),
        };
        let body = if mono.is_empty() {
            abs.render_text()
        } else if abs == one {
            mono
        } else {
            format!("{}*{mono}", abs.render_text())
        };
        if k == 0 {
            out.push_str(if neg { "-" } else { "" });
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

/// LaTeX rendering with monomials in descending global (dominance-refining)
/// order.
pub fn render_latex<C: Scalar>(f: &MultiPoly<C>, var: char) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (m, c)) in f.sorted_terms().into_iter().enumerate() {
        let mono = monomial_latex(m.exps(), var);
        let (neg, abs) = match c.as_rational() {
            Some(r) if r < num_traits::Zero::zero() => (true, c.neg()),
            _ => (false, c.clone()),
        };
        let body = if mono.is_empty() {
            abs.render_latex()
        } else if abs.is_one() {
            mono
        } else {
            format!("{} {mono}", abs.render_latex())
        };
        if k == 0 {
            out.push_str(if neg { "-" } else { "" });
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::kappa::KappaScalar;
    use super::*;

    #[test]
    fn renders_jack_polynomial() {
        type K = MultiPoly<KappaScalar>;
        let f = K::var(2, 1).add(&K::var(2, 2).scale(&KappaScalar::linear(1, 1).inv().unwrap()));
        assert_eq!(render_text(&f, 'x'), "x1 + (1/(κ + 1))*x2");
        assert_eq!(render_latex(&f, 'x'), "x_{1} + \\frac{1}{\\kappa + 1} x_{2}");
        let g = K::var(2, 1).sub(&K::one(2));
        assert_eq!(render_text(&g, 'z'), "z1 - 1");
    }
}
