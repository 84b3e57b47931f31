use crate::exact::{bareiss_determinant, Deadline, MultiPoly, Ring};

use super::ResultantError;

/// Resultant of two polynomials in `var` whose coefficients may involve the other
/// variables. `formal` overrides the degrees (for the homogeneous reading, where
/// a vanishing leading coefficient means a root at infinity).
///
/// Rows are `k` shifts of `f` followed by `m` shifts of `g`, coefficients from
/// the highest power down, so `Res(x^m, 1) = 1` with formal degrees `(m, k)`.
pub fn sylvester_resultant(
    f: &MultiPoly,
    g: &MultiPoly,
    var: &str,
    formal: Option<(u32, u32)>,
) -> Result<MultiPoly, ResultantError> {
    let fc = f.coefficients_in(var)?;
    let gc = g.coefficients_in(var)?;
    let actual = |p: &MultiPoly, c: &[MultiPoly]| if p.is_zero() { 0 } else { c.len() as u32 - 1 };
    let (af, ag) = (actual(f, &fc), actual(g, &gc));
    let (m, k) = match formal {
        Some((m, k)) => {
            if m < af {
                return Err(ResultantError::DegreeMismatch { declared: m, actual: af });
            }
            if k < ag {
                return Err(ResultantError::DegreeMismatch { declared: k, actual: ag });
            }
            (m, k)
        }
        None => (af, ag),
    };
    let zero = MultiPoly::zero(f.vars());
    let one = MultiPoly::one(f.vars());
    let n = (m + k) as usize;
    if n == 0 {
        return Ok(one);
    }
    let coeff = |c: &[MultiPoly], e: u32| c.get(e as usize).cloned().unwrap_or_else(|| zero.clone());
    let mut rows = Vec::with_capacity(n);
    for shift in 0..k as usize {
        let mut row = vec![zero.clone(); n];
        for i in 0..=m {
            row[shift + i as usize] = coeff(&fc, m - i);
        }
        rows.push(row);
    }
    for shift in 0..m as usize {
        let mut row = vec![zero.clone(); n];
        for i in 0..=k {
            row[shift + i as usize] = coeff(&gc, k - i);
        }
        rows.push(row);
    }
    if f.vars().len() == 1 {
        // only `var` itself: rational entries
        let q: Vec<Vec<_>> = rows.iter().map(|r| r.iter().map(|e| e.constant_value().unwrap_or_default()).collect()).collect();
        let d = crate::exact::determinant_rational(&q, Deadline::none())?;
        return Ok(MultiPoly::constant(f.vars(), d));
    }
    Ok(bareiss_determinant(&rows, &one.one_like(), Deadline::none())?)
}
