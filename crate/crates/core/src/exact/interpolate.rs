//! Univariate interpolation with Newton divided differences.

use num_traits::Zero;

use super::{rat, ExactError, Monomial, MultiPoly, Rational};

/// The deterministic abscissae `0, 1, -1, 2, -2, ...`, first `count` of them.
pub fn interpolation_abscissae(count: usize) -> Vec<Rational> {
    (0..count as i64).map(|k| if k % 2 == 1 { rat((k + 1) / 2) } else { rat(-(k / 2)) }).collect()
}

/// The unique polynomial in `var` of degree at most `degree_bound` through the
/// samples. Samples beyond the first `degree_bound + 1` must lie on it.
pub fn lagrange_interpolate(
    samples: &[(Rational, Rational)],
    degree_bound: usize,
    var: &str,
) -> Result<MultiPoly, ExactError> {
    let needed = degree_bound + 1;
    if samples.len() < needed {
        return Err(ExactError::TooFewSamples { needed, got: samples.len() });
    }
    for (i, (x, _)) in samples.iter().enumerate() {
        if samples[..i].iter().any(|(y, _)| y == x) {
            return Err(ExactError::DuplicateAbscissa(x.clone()));
        }
    }
    let (fit, extra) = samples.split_at(needed);
    let xs: Vec<&Rational> = fit.iter().map(|(x, _)| x).collect();
    let mut dd: Vec<Rational> = fit.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..needed {
        for i in (level..needed).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    // Horner on the Newton form, working on dense coefficient vectors.
    let mut coeffs: Vec<Rational> = vec![Rational::zero(); needed];
    for i in (0..needed).rev() {
        // coeffs <- coeffs * (t - x_i) + dd[i]
        let mut next = vec![Rational::zero(); needed];
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k + 1 < needed {
                next[k + 1] += c;
            }
            next[k] -= c * xs[i];
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    let poly = MultiPoly::from_terms(
        &[var],
        coeffs.into_iter().enumerate().map(|(k, c)| (Monomial::new(vec![k as u32]), c)),
    );
    for (x, y) in extra {
        if &poly.evaluate(std::slice::from_ref(x)) != y {
            return Err(ExactError::InconsistentSamples { x: x.clone(), y: y.clone(), bound: degree_bound });
        }
    }
    Ok(poly)
}
