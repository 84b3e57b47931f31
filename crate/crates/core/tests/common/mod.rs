#![allow(dead_code)]

use std::collections::BTreeMap;

use disc_core::exact::{kernel_rank, monomials_below, monomials_of_degree, rat, MultiPoly, Rational};
use disc_core::resultants::HomogeneousForm;
use rand::Rng;

pub fn vars(names: &str) -> Vec<String> {
    names.split(',').map(str::to_string).collect()
}

/// A form of degree `d` with integer coefficients drawn from `lo..=hi`.
pub fn random_form<R: Rng>(rng: &mut R, form_vars: &[String], d: u32, lo: i64, hi: i64) -> HomogeneousForm {
    let terms = monomials_of_degree(form_vars.len(), d).into_iter().map(|m| (m, rat(rng.gen_range(lo..=hi))));
    HomogeneousForm::new(MultiPoly::from_terms(form_vars, terms), form_vars, d).unwrap()
}

/// Integer coefficient vector of a form in the order of `monomials_of_degree`.
pub fn coefficient_vector(f: &HomogeneousForm) -> Vec<i64> {
    monomials_of_degree(f.form_vars().len(), f.degree())
        .iter()
        .map(|m| f.poly().coeff(m).to_integer().try_into().unwrap())
        .collect()
}

/// Substitutes `x_i -> sum_j a_ij x_j + b_i`.
pub fn affine_change(f: &MultiPoly, a: &[Vec<i64>], b: &[i64]) -> MultiPoly {
    let v = f.vars().to_vec();
    let var = |i: usize| MultiPoly::var(&v, &v[i]).unwrap();
    let map: BTreeMap<String, MultiPoly> = (0..v.len())
        .map(|i| {
            let image = (0..v.len()).fold(MultiPoly::constant(&v, rat(b[i])), |acc, j| &acc + &var(j).scale(&rat(a[i][j])));
            (v[i].clone(), image)
        })
        .collect();
    f.substitute(&map).unwrap()
}

/// `dim Q[x] / (J + m^n)` at the origin, by the rank of the spanning set
/// `{ monomial * df/dx_i }` truncated below degree `n`. Equals the Milnor
/// number once `m^n` lies in the local Jacobian ideal.
pub fn dense_milnor_oracle(f: &MultiPoly, n: u32) -> u64 {
    let k = f.nvars();
    let basis = monomials_below(k, n);
    let index: BTreeMap<_, _> = basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    let partials: Vec<MultiPoly> = f.vars().iter().map(|v| f.derivative(v).unwrap()).collect();
    let mut rows = Vec::new();
    for g in &partials {
        for m in &basis {
            let mut row = vec![Rational::from_integer(0.into()); basis.len()];
            for (gm, c) in g.terms() {
                if let Some(&i) = index.get(&gm.mul(m)) {
                    row[i] = c.clone();
                }
            }
            rows.push(row);
        }
    }
    (basis.len() - kernel_rank(&rows).rank) as u64
}

/// Brute-force singular points of a form over `F_p`, in projective space.
pub fn has_singular_point_mod_p(f: &HomogeneousForm, p: u64) -> bool {
    let k = f.form_vars().len();
    let reduce = |q: &MultiPoly| -> Vec<(Vec<u32>, i64)> {
        q.terms()
            .map(|(m, c)| {
                let n: i64 = (c.numer() % num_bigint::BigInt::from(p)).try_into().unwrap();
                let d: i64 = (c.denom() % num_bigint::BigInt::from(p)).try_into().unwrap();
                let inv = disc_core::exact::Fp::from_i64(d, p).inv_checked().expect("p-integral").value() as i64;
                (m.exponents().to_vec(), n.rem_euclid(p as i64) * inv % p as i64)
            })
            .collect()
    };
    let polys: Vec<_> = std::iter::once(f.poly().clone())
        .chain(f.form_vars().iter().map(|v| f.poly().derivative(v).unwrap()))
        .map(|q| reduce(&q))
        .collect();
    let eval = |terms: &[(Vec<u32>, i64)], x: &[u64]| -> u64 {
        terms.iter().fold(0u64, |acc, (e, c)| {
            let mono = e.iter().zip(x).fold(1u64, |m, (&e, &xi)| m * disc_core::exact::Fp::new(xi, p).pow(u64::from(e)).value() % p);
            (acc + (*c as u64) * mono) % p
        })
    };
    // normalized representatives: first nonzero coordinate is 1
    for lead in 0..k {
        let free = k - lead - 1;
        for code in 0..p.pow(free as u32) {
            let mut x = vec![0u64; k];
            x[lead] = 1;
            let mut c = code;
            for xi in x.iter_mut().skip(lead + 1) {
                *xi = c % p;
                c /= p;
            }
            if polys.iter().all(|q| eval(q, &x) == 0) {
                return true;
            }
        }
    }
    false
}
