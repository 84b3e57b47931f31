mod common;

use common::{affine_change, dense_milnor_oracle, vars};
use disc_core::exact::{rat, Deadline, MultiPoly, Rational};
use disc_core::parse::parse_poly;
use disc_core::singularity::{global_jacobian_colength, local_colength, local_milnor, local_tjurina, SingularityError};
use proptest::prelude::*;

const ADE: [(&str, &str, u64); 14] = [
    ("A1", "y^2 + x^2", 1),
    ("A2", "y^2 + x^3", 2),
    ("A3", "y^2 + x^4", 3),
    ("A4", "y^2 + x^5", 4),
    ("A5", "y^2 + x^6", 5),
    ("A6", "y^2 + x^7", 6),
    ("A7", "y^2 + x^8", 7),
    ("A8", "y^2 + x^9", 8),
    ("D4", "x^2*y + y^3", 4),
    ("D5", "x^2*y + y^4", 5),
    ("D6", "x^2*y + y^5", 6),
    ("E6", "x^3 + y^4", 6),
    ("E7", "x^3 + x*y^3", 7),
    ("E8", "x^3 + y^5", 8),
];

fn origin(k: usize) -> Vec<Rational> {
    vec![rat(0); k]
}

#[test]
fn ade_table_against_dense_oracle() {
    let v = vars("x,y");
    for (name, src, mu) in ADE {
        let f = parse_poly(src, &v).unwrap();
        assert_eq!(dense_milnor_oracle(&f, 12), mu, "{name} oracle");
        assert_eq!(local_milnor(&f, &origin(2)).unwrap(), mu, "{name}");
    }
}

#[test]
fn oracle_is_stable_in_the_truncation() {
    let v = vars("x,y");
    for (_, src, mu) in ADE {
        let f = parse_poly(src, &v).unwrap();
        assert_eq!(dense_milnor_oracle(&f, mu as u32 + 2), dense_milnor_oracle(&f, mu as u32 + 5));
    }
}

#[test]
fn three_variable_singularities() {
    let v = vars("x,y,z");
    for (src, mu) in [("x^2 + y^2 + z^2", 1), ("x^2 + y^2 + z^4", 3), ("x^2*y + y^4 + z^2", 5), ("x^3 + y^4 + z^2", 6)] {
        let f = parse_poly(src, &v).unwrap();
        assert_eq!(dense_milnor_oracle(&f, 8), mu, "{src}");
        assert_eq!(local_milnor(&f, &origin(3)).unwrap(), mu, "{src}");
    }
}

#[test]
fn higher_order_terms_do_not_change_milnor() {
    let v = vars("x,y");
    // semi-quasi-homogeneous perturbations, not quasi-homogeneous
    for (src, mu) in [("y^2 + x^5 + x^3*y^2", 4), ("x^3 + y^5 + x^2*y^3", 8), ("x^2*y + y^3 + x^4 + y^5", 4)] {
        let f = parse_poly(src, &v).unwrap();
        assert_eq!(dense_milnor_oracle(&f, 12), mu, "{src}");
        assert_eq!(local_milnor(&f, &origin(2)).unwrap(), mu, "{src}");
    }
}

#[test]
fn tjurina_only_agrees_for_quasi_homogeneous() {
    let v = vars("x,y");
    for (_, src, mu) in ADE {
        assert_eq!(local_tjurina(&parse_poly(src, &v).unwrap(), &origin(2)).unwrap(), mu);
    }
    // x^5 + y^5 + x^3 y^3 has mu = 16 and tau = 15
    let f = parse_poly("x^5 + y^5 + x^3*y^3", &v).unwrap();
    assert_eq!(dense_milnor_oracle(&f, 20), 16);
    assert_eq!(local_milnor(&f, &origin(2)).unwrap(), 16);
    assert_eq!(local_tjurina(&f, &origin(2)).unwrap(), 15);
}

#[test]
fn global_colength_is_the_sum_of_local_ones() {
    let v = vars("x,y");
    let cases: [(&str, &[(i64, i64)]); 3] = [
        ("x^4 - 2*x^2 + y^3", &[(0, 0), (1, 0), (-1, 0)]),
        ("x^3 - 3*x + y^2", &[(1, 0), (-1, 0)]),
        ("x^3 - 3*x + y^3 - 3*y", &[(1, 1), (1, -1), (-1, 1), (-1, -1)]),
    ];
    for (src, crit) in cases {
        let f = parse_poly(src, &v).unwrap();
        let partials: Vec<MultiPoly> = v.iter().map(|x| f.derivative(x).unwrap()).collect();
        let local: u64 = crit
            .iter()
            .map(|&(a, b)| local_colength(&partials, &[rat(a), rat(b)], 20, Deadline::none()).unwrap())
            .sum();
        assert_eq!(global_jacobian_colength(&f, Deadline::none()).unwrap(), local, "{src}");
    }
}

#[test]
fn non_isolated_and_smooth_points_are_rejected() {
    let v = vars("x,y");
    let f = parse_poly("x^2*y^2", &v).unwrap();
    assert!(matches!(local_milnor(&f, &origin(2)), Err(SingularityError::NotIsolated { .. })));
    let partials: Vec<MultiPoly> = v.iter().map(|x| f.derivative(x).unwrap()).collect();
    assert!(matches!(local_colength(&partials, &origin(2), 6, Deadline::none()), Err(SingularityError::NotIsolated { cap: 6 })));
    let g = parse_poly("y - x^2", &v).unwrap();
    assert!(matches!(local_milnor(&g, &origin(2)), Err(SingularityError::NotSingular(_))));
    assert!(matches!(local_milnor(&g, &[rat(1), rat(0)]), Err(SingularityError::NotSingular(_))));
    assert!(matches!(global_jacobian_colength(&f, Deadline::none()), Err(SingularityError::NotZeroDimensional)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn milnor_is_invariant_under_affine_changes(
        idx in 0usize..ADE.len(),
        a in prop::sample::select(vec![[1i64, 0, 0, 1], [1, 1, 0, 1], [2, 1, 1, 1], [0, 1, 1, 0], [1, -2, 1, -1], [3, 2, 1, 1]]),
        b0 in -3i64..=3, b1 in -3i64..=3,
    ) {
        let v = vars("x,y");
        let (_, src, mu) = ADE[idx];
        let f = parse_poly(src, &v).unwrap();
        // f(A x + b) is singular where A x + b = 0
        let g = affine_change(&f, &[vec![a[0], a[1]], vec![a[2], a[3]]], &[b0, b1]);
        let det = Rational::from_integer((a[0] * a[3] - a[1] * a[2]).into());
        let px = (rat(-b0) * rat(a[3]) + rat(b1) * rat(a[1])) / det.clone();
        let py = (rat(b0) * rat(a[2]) - rat(b1) * rat(a[0])) / det;
        prop_assert_eq!(local_milnor(&g, &[px, py]).unwrap(), mu);
        let centred = affine_change(&f, &[vec![a[0], a[1]], vec![a[2], a[3]]], &[0, 0]);
        prop_assert_eq!(dense_milnor_oracle(&centred, 12), mu);
    }
}
