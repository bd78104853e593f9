//! Oracles shared by the integration tests. They use only integer
//! arithmetic and never call into the library's criteria code.

#![allow(dead_code)]

pub fn digits(mut n: u64, p: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while n > 0 {
        out.push(n % p);
        n /= p;
    }
    out
}

/// Kummer: `p` divides the multinomial `(Σ parts)! / Π parts!` iff adding
/// the parts in base `p` carries.
pub fn multinomial_nonzero_mod_p(parts: &[u64], p: u64) -> bool {
    let mut rest: Vec<u64> = parts.to_vec();
    while rest.iter().any(|&x| x > 0) {
        let s: u64 = rest.iter().map(|x| x % p).sum();
        if s >= p {
            return false;
        }
        for x in rest.iter_mut() {
            *x /= p;
        }
    }
    true
}

/// `C(n, k) mod p` by Lucas' theorem.
pub fn binomial_mod_p(n: u64, k: u64, p: u64) -> u64 {
    if k > n {
        return 0;
    }
    let small = |n: u64, k: u64| -> u64 {
        if k > n {
            return 0;
        }
        let mut num = 1u64;
        let mut den = 1u64;
        for i in 0..k {
            num = num * ((n - i) % p) % p;
            den = den * ((i + 1) % p) % p;
        }
        num * pow_mod(den, p - 2, p) % p
    };
    let (mut n, mut k, mut acc) = (n, k, 1u64);
    while n > 0 || k > 0 {
        acc = acc * small(n % p, k % p) % p;
        n /= p;
        k /= p;
    }
    acc
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// `(x^4+y^4+z^4+w^4)^(q−1) ∉ m^[q]`, by scanning multinomial exponents.
pub fn quartic_passes(p: u64, q: u64) -> bool {
    let n = q - 1;
    let cap = (q - 1) / 4;
    for a in 0..=cap.min(n) {
        for b in 0..=cap.min(n - a) {
            for c in 0..=cap.min(n - a - b) {
                let d = n - a - b - c;
                if d <= cap && multinomial_nonzero_mod_p(&[a, b, c, d], p) {
                    return true;
                }
            }
        }
    }
    false
}

/// Largest `j` with `(x^2 − y^3)^j ∉ m^[q]`: some `x^(2k) y^(3(j−k))` with
/// both exponents below `q` and `C(j, k) ≢ 0`.
pub fn cusp_nu(p: u64, q: u64) -> u64 {
    (0..2 * q)
        .rev()
        .find(|&j| {
            (0..=j).any(|k| 2 * k < q && 3 * (j - k) < q && binomial_mod_p(j, k, p) != 0)
        })
        .expect("j = 0 always survives")
}

/// Quadric cone `(xy − z^2)^(q−1) z^r`: the term with `k = q − 1` is
/// `(xy)^(q−1) z^r` with unit coefficient, and every other term has a
/// larger power of `z`; so the product survives iff `r < q`.
pub fn cone_passes(q: u64, r: u64) -> bool {
    r < q
}

pub fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}
