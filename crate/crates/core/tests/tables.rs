use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use katzvec::katz::{alpha, epsilon, format_h_entry, h_entry, h_matrices, h_matrix, latex_tables, table_ring};
use katzvec::matrix;
use katzvec::scalar::{binomial, factorial, integer};
use katzvec::{Error, Poly, Rational};

fn x_poly(coeff: Rational, degree: usize) -> Poly<Rational> {
    Poly::monomial(coeff, degree)
}

#[test]
fn golden_rank_two() {
    let text: Vec<Vec<Vec<String>>> = h_matrices(2)
        .unwrap()
        .iter()
        .map(|m| {
            m.to_rows()
                .iter()
                .map(|r| r.iter().map(format_h_entry).collect())
                .collect()
        })
        .collect();
    assert_eq!(
        text,
        vec![
            vec![vec!["1", "X"], vec!["0", "1"]],
            vec![vec!["-X", "0"], vec!["0", "X"]],
            vec![vec!["0", "0"], vec!["-X", "0"]],
        ]
    );
}

#[test]
fn spot_entries_of_larger_tables() {
    assert_eq!(alpha(1, 0, 1, 3).unwrap(), BigInt::from(-2));
    assert_eq!(alpha(2, 2, 1, 3).unwrap(), BigInt::from(-3));
    assert_eq!(alpha(3, 3, 1, 4).unwrap(), BigInt::from(4));
    assert_eq!(alpha(4, 4, 2, 5).unwrap(), BigInt::from(25));
    assert_eq!(h_entry(1, 0, 1, 3).unwrap(), x_poly(integer(-1), 2));
}

#[test]
fn out_of_range_indices_are_rejected() {
    assert!(matches!(alpha(0, 2, 0, 2), Err(Error::IndexOutOfRange(_))));
    assert!(matches!(h_matrix(3, 2), Err(Error::IndexOutOfRange(_))));
    assert!(matches!(h_matrices(0), Err(Error::IndexOutOfRange(_))));
}

/// Same sum written with `(−1)^{s−k}`.
fn alpha_other_sign(s: usize, i: usize, j: usize, n: usize) -> BigInt {
    if !epsilon(s, i, j, n).unwrap() {
        return BigInt::zero();
    }
    let lo = (s + j).saturating_sub(n - 1);
    (lo..=i.min(s))
        .map(|k| {
            let sign: i64 = if (s as i64 - k as i64).rem_euclid(2) == 0 {
                1
            } else {
                -1
            };
            BigInt::from(sign) * binomial((s - k + j) as u64, j as u64) * binomial(i as u64, k as u64)
        })
        .sum()
}

#[test]
fn both_sign_spellings_agree() {
    for n in 1..=6 {
        for s in 0..=2 * n - 2 {
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(
                        alpha(s, i, j, n).unwrap(),
                        alpha_other_sign(s, i, j, n),
                        "({s};{i},{j}) n={n}"
                    );
                }
            }
        }
    }
}

/// For `s ≥ 1`, `α(s;i,j) = 0` unless `j − i ∈ [max(1−s, 1−n), n−1−s]`.
/// At `s = 0` the band is `[0, n−1]` since `H₀` has a unit diagonal.
#[test]
fn support_lies_in_the_band() {
    for n in 1..=5usize {
        for i in 0..n {
            for j in 0..i {
                assert!(alpha(0, i, j, n).unwrap().is_zero());
            }
            assert_eq!(alpha(0, i, i, n).unwrap(), BigInt::from(1));
        }
        for s in 1..=2 * n - 2 {
            for i in 0..n {
                for j in 0..n {
                    let offset = j as i64 - i as i64;
                    let lo = (1 - s as i64).max(1 - n as i64);
                    let hi = n as i64 - 1 - s as i64;
                    if offset < lo || offset > hi {
                        assert!(alpha(s, i, j, n).unwrap().is_zero(), "({s};{i},{j}) n={n}");
                    }
                }
            }
        }
    }
}

#[test]
fn alpha_vanishes_at_offset_minus_s() {
    for n in 2..=6usize {
        for s in 1..n {
            for i in s..n {
                assert!(alpha(s, i, i - s, n).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn h0_is_inverted_by_reflection() {
    let r = table_ring();
    let minus_x = Poly::x().scale(&integer(-1));
    for n in 1..=6 {
        let h0 = h_matrix(0, n).unwrap();
        let reflected = h0.map(|p| p.compose(&minus_x));
        assert_eq!(matrix::mul(&r, &h0, &reflected), matrix::identity(&r, n), "n = {n}");
    }
}

#[test]
fn h0_is_unipotent_upper_triangular() {
    for n in 1..=6 {
        let h0 = h_matrix(0, n).unwrap();
        for i in 0..n {
            for j in 0..n {
                let e = h0.get(i, j);
                if i == j {
                    assert_eq!(e, &Poly::one());
                } else if j < i {
                    assert!(e.is_zero());
                } else {
                    // X^{j−i}/(j−i)! up to sign
                    let k = j - i;
                    let c = Rational::new(alpha(0, i, j, n).unwrap(), factorial(k as u64));
                    assert_eq!(e, &x_poly(c, k));
                }
            }
        }
    }
}

/// Vectors of `M[X]` written in the free symbols `∇ˢ(e_j)`: the key is
/// `(s, j)`, the value its `X`-polynomial coefficient.
type Free = BTreeMap<(usize, usize), Poly<Rational>>;

fn free_add(acc: &mut Free, key: (usize, usize), p: Poly<Rational>) {
    let sum = &acc.get(&key).cloned().unwrap_or_else(Poly::zero) + &p;
    if sum.is_zero() {
        acc.remove(&key);
    } else {
        acc.insert(key, sum);
    }
}

/// `∇(f·∇ˢe_j) = f'·∇ˢe_j + f·∇ˢ⁺¹e_j`.
fn free_nabla(v: &Free) -> Free {
    let mut out = Free::new();
    for (&(s, j), p) in v {
        free_add(&mut out, (s, j), p.derivative());
        free_add(&mut out, (s + 1, j), p.clone());
    }
    out
}

fn free_katz_vector(n: usize) -> Free {
    let mut c = Free::new();
    for j in 0..n {
        for k in 0..=j {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let coeff = Rational::new(BigInt::from(sign) * binomial(j as u64, k as u64), factorial(j as u64));
            free_add(&mut c, (k, j - k), x_poly(coeff, j));
        }
    }
    c
}

/// `h_{s;i,j}` is the coefficient of `∇ˢ(e_j)` in `∇ⁱ(c(e, X))`.
#[test]
fn tables_match_free_symbol_expansion() {
    for n in 1..=5 {
        let mut v = free_katz_vector(n);
        for i in 0..n {
            for s in 0..=2 * n - 2 {
                for j in 0..n {
                    let want = v.get(&(s, j)).cloned().unwrap_or_else(Poly::zero);
                    assert_eq!(h_entry(s, i, j, n).unwrap(), want, "n = {n}, (s;i,j) = ({s};{i},{j})");
                }
            }
            assert!(v.keys().all(|&(s, _)| s <= 2 * n - 2));
            v = free_nabla(&v);
        }
    }
}

#[test]
fn alpha_is_integral_over_wide_ranges() {
    // α is an integer by construction; the entries h = α·X^m/m! must
    // have denominators dividing m!.
    for n in 1..=7 {
        for s in 0..=2 * n - 2 {
            for i in 0..n {
                for j in 0..n {
                    let h = h_entry(s, i, j, n).unwrap();
                    if let Some(m) = h.degree() {
                        let scaled = h.coeff(m) * Rational::from_integer(factorial(m as u64));
                        assert!(scaled.is_integer());
                    }
                }
            }
        }
    }
}

#[test]
fn latex_layout() {
    let text = latex_tables(3).unwrap();
    assert!(text.contains("\\begin{pmatrix}"));
    assert_eq!(text.matches("\\begin{pmatrix}").count(), 5);
    assert!(text.contains("-2\\frac{X^{2}}{2!}"));
}
