//! Generators shared by the integration tests.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use symcert::poly::{power_sum, ratio};
use symcert::symfun::monomial_symmetric;
use symcert::{Poly, Rational};

/// Small random rational `a/b` with `|a| <= num`, `1 <= b <= den`.
pub fn small_rational(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rational {
    ratio(rng.random_range(-num..=num), rng.random_range(1..=den))
}

/// Partitions of `k` into at most `max_len` positive parts, decreasing.
pub fn integer_partitions(k: u32, max_len: usize) -> Vec<Vec<u32>> {
    fn go(rest: u32, cap: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if cur.len() == max_len {
            return;
        }
        for part in (1..=rest.min(cap)).rev() {
            cur.push(part);
            go(rest - part, part, max_len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, max_len, &mut Vec::new(), &mut out);
    out
}

/// Random symmetric polynomial of degree at most `d` in `n` variables, as a
/// combination of monomial symmetric polynomials. The top degree is always
/// present.
pub fn random_symmetric(rng: &mut ChaCha8Rng, n: usize, d: u32) -> Poly {
    let mut f = Poly::zero(n);
    for k in 0..=d {
        for lambda in integer_partitions(k, n) {
            let forced = k == d && f.degree().or_zero() < d;
            if forced || rng.random_bool(0.5) {
                let mut c = small_rational(rng, 9, 5);
                if c == ratio(0, 1) {
                    c = ratio(1, 1);
                }
                f = &f + &monomial_symmetric(n, &lambda).scale(&c);
            }
        }
    }
    f
}

/// `p_{i_1} * ... * p_{i_r}` in `n` variables.
pub fn power_sum_product(n: usize, indices: &[u32]) -> Poly {
    indices.iter().fold(Poly::one(n), |acc, &i| &acc * &power_sum(n, i))
}

/// Distinct random rationals.
pub fn distinct_rationals(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::new();
    while out.len() < n {
        let v = small_rational(rng, 12, 4);
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}
