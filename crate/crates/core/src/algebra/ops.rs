use super::{AlgebraError, Exponents, Polynomial};

/// Formal partial derivative with respect to variable `i` (0-based).
pub fn partial_derivative(f: &Polynomial, i: usize) -> Polynomial {
    assert!(i < f.ring().arity(), "variable index out of range");
    let field = f.field();
    let terms = f.terms().iter().filter_map(|(e, c)| {
        let a = e.get(i);
        if a == 0 {
            return None;
        }
        let c = field.mul(*c, field.reduce(a as u64));
        let mut d = e.clone();
        d.entries_mut()[i] = a - 1;
        Some((d, c))
    });
    Polynomial::from_terms(f.ring(), terms)
}

/// Multiplicity `n` of `f` at the origin and its initial form `f_n`, the
/// sum of the terms of minimal total degree.
pub fn initial_form(f: &Polynomial) -> Result<(u64, Polynomial), AlgebraError> {
    let n = f
        .terms()
        .iter()
        .map(|(e, _)| e.degree())
        .min()
        .ok_or(AlgebraError::ZeroPolynomial)?;
    let fn_terms: Vec<(Exponents, u32)> = f
        .terms()
        .iter()
        .filter(|(e, _)| e.degree() == n)
        .cloned()
        .collect();
    Ok((n, Polynomial::from_sorted_terms(f.ring(), fn_terms)))
}

/// Jacobian row `(∂f/∂x_1, ..., ∂f/∂x_d)`.
pub fn gradient(f: &Polynomial) -> Vec<Polynomial> {
    (0..f.ring().arity())
        .map(|i| partial_derivative(f, i))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly_parse;

    #[test]
    fn derivative_examples() {
        let f = poly_parse("x^2 - y^3", &["x", "y"], 7).unwrap();
        assert_eq!(partial_derivative(&f, 1).to_string(), "4*y^2");
        let g = poly_parse("y^3", &["x", "y"], 3).unwrap();
        assert!(partial_derivative(&g, 1).is_zero());
        let h = poly_parse("x^4 + y^4", &["x", "y"], 5).unwrap();
        assert_eq!(partial_derivative(&h, 0).to_string(), "4*x^3");
    }

    #[test]
    fn initial_forms() {
        let f = poly_parse("x^2 - y^3", &["x", "y"], 7).unwrap();
        let (n, fn_) = initial_form(&f).unwrap();
        assert_eq!(n, 2);
        assert_eq!(fn_.to_string(), "x^2");

        let vars = ["x", "y", "z", "w"];
        let q = poly_parse("x^4+y^4+z^4+w^4", &vars, 5).unwrap();
        assert_eq!(initial_form(&q).unwrap(), (4, q.clone()));

        let c = poly_parse("x*y - z^2", &["x", "y", "z"], 5).unwrap();
        assert_eq!(initial_form(&c).unwrap(), (2, c.clone()));

        let zero = poly_parse("0", &["x"], 5).unwrap();
        assert!(matches!(
            initial_form(&zero),
            Err(AlgebraError::ZeroPolynomial)
        ));
    }
}
