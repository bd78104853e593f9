//! Lattice form of F-purity for affine toric pairs.
//!
//! For a cone spanned by primitive rays `n_1..n_s` and a divisor `Σ λ_i D_i`,
//! the module `A(Σ λ_i D_i)` is spanned by the monomials `x^m` with
//! `⟨m, n_i⟩ ≥ −λ_i`. With `Δ = Σ D_i` one has `K_A = −Δ`, and Frobenius
//! `x^m ↦ x^(qm)` identifies `A(qK_A + (q−1)Δ)` with `K_A`.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ToricError {
    #[error("cone has no rays")]
    NoRays,
    #[error("ray {0} has the wrong dimension")]
    Dimension(usize),
    #[error("ray {0} is not primitive")]
    NotPrimitive(usize),
    #[error("rays {0} and {1} are parallel")]
    Parallel(usize, usize),
    #[error("cone contains a line")]
    NotStronglyConvex,
    #[error("ray index {0} out of range")]
    BadIndex(usize),
    #[error("coefficient list has length {got}, expected {expected}")]
    CoefficientLength { got: usize, expected: usize },
    #[error("malformed ray list: {0}")]
    Parse(String),
    #[error("box and level must be positive")]
    BadParameter,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cone {
    dim: usize,
    rays: Vec<Vec<i64>>,
}

impl Cone {
    pub fn new(rays: Vec<Vec<i64>>) -> Result<Self, ToricError> {
        let dim = rays.first().ok_or(ToricError::NoRays)?.len();
        if dim == 0 {
            return Err(ToricError::Dimension(0));
        }
        for (i, r) in rays.iter().enumerate() {
            if r.len() != dim {
                return Err(ToricError::Dimension(i));
            }
            if r.iter().fold(0i64, |g, &x| g.gcd(&x)) != 1 {
                return Err(ToricError::NotPrimitive(i));
            }
        }
        for i in 0..rays.len() {
            for j in i + 1..rays.len() {
                if parallel(&rays[i], &rays[j]) {
                    return Err(ToricError::Parallel(i, j));
                }
            }
        }
        // strongly convex iff some m pairs positively with every ray
        let system: Vec<(Vec<Rational>, Rational)> = rays
            .iter()
            .map(|r| (r.iter().map(|&x| Rational::from_int(x)).collect(), Rational::one()))
            .collect();
        if !fourier_motzkin_feasible(system, dim) {
            return Err(ToricError::NotStronglyConvex);
        }
        Ok(Cone { dim, rays })
    }

    /// Parses `"1,0;1,2"`.
    pub fn parse(text: &str) -> Result<Self, ToricError> {
        let rays = text
            .split(';')
            .map(|r| {
                r.split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<i64>()
                            .map_err(|_| ToricError::Parse(text.to_string()))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(rays)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rays: Vec<String> = self
            .rays
            .iter()
            .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
            .collect();
        f.write_str(&rays.join(";"))
    }
}

fn parallel(a: &[i64], b: &[i64]) -> bool {
    (0..a.len()).all(|i| (i..a.len()).all(|j| a[i] * b[j] == a[j] * b[i]))
}

/// Feasibility of `{ m ∈ Q^dim : ⟨a_k, m⟩ ≥ b_k }` by Fourier–Motzkin
/// elimination.
pub fn fourier_motzkin_feasible(mut system: Vec<(Vec<Rational>, Rational)>, dim: usize) -> bool {
    for var in (0..dim).rev() {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for (a, b) in system {
            if a[var].is_zero() {
                rest.push((a, b));
            } else if a[var].is_negative() {
                neg.push((a, b));
            } else {
                pos.push((a, b));
            }
        }
        for (ap, bp) in &pos {
            for (an, bn) in &neg {
                // ap[var] > 0 > an[var]: combine to cancel var
                let cp = an[var].abs();
                let cn = ap[var].clone();
                let a: Vec<Rational> = ap
                    .iter()
                    .zip(an)
                    .map(|(x, y)| &(x * &cp) + &(y * &cn))
                    .collect();
                let b = &(bp * &cp) + &(bn * &cn);
                rest.push((a, b));
            }
        }
        system = rest;
    }
    // only constant constraints 0 ≥ b remain
    system.iter().all(|(_, b)| !(b > &Rational::zero()))
}

fn pairing(m: &[i64], n: &[i64]) -> i64 {
    m.iter().zip(n).map(|(a, b)| a * b).sum()
}

fn in_module(cone: &Cone, lambda: &[Rational], m: &[i64]) -> bool {
    cone.rays
        .iter()
        .zip(lambda)
        .all(|(n, l)| Rational::from_int(pairing(m, n)) >= -l.clone())
}

/// Lattice points `m` with `|m|_∞ ≤ bound` and `⟨m, n_i⟩ ≥ −λ_i`.
pub fn divisor_module_points(
    cone: &Cone,
    lambda: &[Rational],
    bound: i64,
) -> Result<BTreeSet<Vec<i64>>, ToricError> {
    if lambda.len() != cone.rays.len() {
        return Err(ToricError::CoefficientLength {
            got: lambda.len(),
            expected: cone.rays.len(),
        });
    }
    if bound < 0 {
        return Err(ToricError::BadParameter);
    }
    let mut out = BTreeSet::new();
    let mut m = vec![-bound; cone.dim];
    loop {
        if in_module(cone, lambda, &m) {
            out.insert(m.clone());
        }
        let mut k = 0;
        loop {
            if k == cone.dim {
                return Ok(out);
            }
            if m[k] < bound {
                m[k] += 1;
                break;
            }
            m[k] = -bound;
            k += 1;
        }
    }
}

/// `K_A`: coefficient −1 on every ray.
pub fn canonical_coeffs(cone: &Cone) -> Vec<Rational> {
    vec![Rational::from_int(-1); cone.rays.len()]
}

/// Coefficients of `qK_A + (q−1)Δ` for `Δ = Σ_{i ∈ delta} D_i`.
pub fn frobenius_twist_coeffs(cone: &Cone, delta: &[usize], q: u64) -> Vec<Rational> {
    let q = Rational::from(q);
    (0..cone.rays.len())
        .map(|i| {
            let base = -q.clone();
            if delta.contains(&i) {
                &base + &(&q - &Rational::one())
            } else {
                base
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ToricVerification {
    pub cone: String,
    pub delta: Vec<usize>,
    pub q: u64,
    pub bound: i64,
    pub full_delta: bool,
    /// `A(qK_A + (q−1)Δ) = K_A` inside the box.
    pub identity_holds: bool,
    /// `A(qK_A + (q−1)Δ) ⊆ K_A` inside the box.
    pub containment_holds: bool,
    /// Points of `K_A` in the box outside `A(qK_A + (q−1)Δ)`.
    pub strict_witnesses: Vec<Vec<i64>>,
    /// `m ↦ qm` is injective on the `K_A` points of the box.
    pub scaling_injective: bool,
    /// `qm ∈ A(qK_A + (q−1)Δ)` for every `K_A` point `m` of the box.
    pub frobenius_image_contained: bool,
}

impl ToricVerification {
    /// Full boundary: the identity itself. Partial boundary: the
    /// containment.
    pub fn verified(&self) -> bool {
        let core = if self.full_delta {
            self.identity_holds
        } else {
            self.containment_holds
        };
        core && self.scaling_injective && self.frobenius_image_contained
    }
}

pub fn toric_fpure_verify(
    cone: &Cone,
    delta: &[usize],
    p: u32,
    e: u32,
    bound: i64,
) -> Result<ToricVerification, ToricError> {
    if bound < 1 || e < 1 {
        return Err(ToricError::BadParameter);
    }
    if let Some(&i) = delta.iter().find(|&&i| i >= cone.rays.len()) {
        return Err(ToricError::BadIndex(i));
    }
    let q = (p as u64)
        .checked_pow(e)
        .ok_or(ToricError::BadParameter)?;
    let mut delta: Vec<usize> = delta.to_vec();
    delta.sort_unstable();
    delta.dedup();
    let full_delta = delta.len() == cone.rays.len();
    let k = canonical_coeffs(cone);
    let twisted = frobenius_twist_coeffs(cone, &delta, q);
    let k_points = divisor_module_points(cone, &k, bound)?;
    let t_points = divisor_module_points(cone, &twisted, bound)?;
    let strict_witnesses: Vec<Vec<i64>> = k_points.difference(&t_points).cloned().collect();
    let scaled: BTreeSet<Vec<i64>> = k_points
        .iter()
        .map(|m| m.iter().map(|x| x * q as i64).collect())
        .collect();
    let frobenius_image_contained = scaled.iter().all(|m| in_module(cone, &twisted, m));
    Ok(ToricVerification {
        cone: cone.to_string(),
        delta,
        q,
        bound,
        full_delta,
        identity_holds: k_points == t_points,
        containment_holds: t_points.is_subset(&k_points),
        strict_witnesses,
        scaling_injective: scaled.len() == k_points.len(),
        frobenius_image_contained,
    })
}
