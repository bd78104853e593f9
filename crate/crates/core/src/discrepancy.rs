//! Discrepancies of surface pairs from the dual graph of a resolution.
//!
//! For exceptional curves `E_j ≅ P^1` with `E_j^2 = −b_j`, intersecting the
//! relation `K_X + Δ̃ = f^*(K_Y + Δ) + Σ a_i E_i` with `E_j` gives
//! `Σ_i a_i (E_i·E_j) = b_j − 2 + t_j`, where `t_j = Δ̃·E_j` counts boundary
//! branches through `E_j`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {0}: b must be a positive integer")]
    BadWeight(usize),
    #[error("vertex {0}: only rational curves (genus 0) are supported")]
    PositiveGenus(usize),
    #[error("edge ({0}, {1}) refers to a missing vertex")]
    BadEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("boundary list has length {got}, expected {expected}")]
    BoundaryLength { got: usize, expected: usize },
    #[error("intersection matrix is not negative definite (leading minor {0})")]
    NotNegativeDefinite(usize),
    #[error("graph carries no boundary mark")]
    NoBoundary,
    #[error("index must be positive")]
    ZeroIndex,
    #[error("malformed graph description: {0}")]
    Parse(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub b: i64,
    #[serde(default, skip_serializing_if = "is_zero_u32")]
    pub genus: u32,
}

fn is_zero_u32(x: &u32) -> bool {
    *x == 0
}

/// Weighted dual graph of the exceptional curves, with the number of
/// boundary branches meeting each curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualGraph {
    pub vertices: Vec<Vertex>,
    #[serde(default)]
    pub edges: Vec<[usize; 2]>,
    #[serde(default)]
    pub boundary: Vec<u32>,
}

impl DualGraph {
    /// Builds a graph from self-intersection weights `b_j`, edges and marks.
    pub fn new(b: &[i64], edges: &[(usize, usize)], boundary: &[u32]) -> Result<Self, GraphError> {
        let g = DualGraph {
            vertices: b.iter().map(|&b| Vertex { b, genus: 0 }).collect(),
            edges: edges.iter().map(|&(u, v)| [u, v]).collect(),
            boundary: boundary.to_vec(),
        };
        g.validate()?;
        Ok(g)
    }

    /// Chain `E_1 − E_2 − .. − E_n`.
    pub fn chain(b: &[i64], boundary: &[u32]) -> Result<Self, GraphError> {
        let edges: Vec<(usize, usize)> = (1..b.len()).map(|i| (i - 1, i)).collect();
        Self::new(b, &edges, boundary)
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let mut g: DualGraph =
            serde_json::from_str(text).map_err(|e| GraphError::Parse(e.to_string()))?;
        if g.boundary.is_empty() {
            g.boundary = vec![0; g.vertices.len()];
        }
        g.validate()?;
        Ok(g)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn boundary_total(&self) -> u32 {
        self.boundary.iter().sum()
    }

    fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.len()];
        for [u, v] in &self.edges {
            adj[*u].push(*v);
            adj[*v].push(*u);
        }
        adj
    }

    /// `N_ij = E_i·E_j`.
    pub fn intersection_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.len();
        let mut m = vec![vec![0i64; n]; n];
        for (i, v) in self.vertices.iter().enumerate() {
            m[i][i] = -v.b;
        }
        for [u, v] in &self.edges {
            m[*u][*v] = 1;
            m[*v][*u] = 1;
        }
        m
    }

    /// `(K_X + Δ̃)·E_j = b_j − 2 + t_j`.
    pub fn rhs(&self) -> Vec<i64> {
        self.vertices
            .iter()
            .zip(&self.boundary)
            .map(|(v, &t)| v.b - 2 + t as i64)
            .collect()
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        let n = self.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        for (i, v) in self.vertices.iter().enumerate() {
            if v.b < 1 {
                return Err(GraphError::BadWeight(i));
            }
            if v.genus != 0 {
                return Err(GraphError::PositiveGenus(i));
            }
        }
        if self.boundary.len() != n {
            return Err(GraphError::BoundaryLength {
                got: self.boundary.len(),
                expected: n,
            });
        }
        let mut seen = BTreeSet::new();
        for [u, v] in &self.edges {
            if *u >= n || *v >= n {
                return Err(GraphError::BadEdge(*u, *v));
            }
            if u == v {
                return Err(GraphError::SelfLoop(*u));
            }
            if !seen.insert((*u.min(v), *u.max(v))) {
                return Err(GraphError::DuplicateEdge(*u, *v));
            }
        }
        let adj = self.neighbours();
        let mut visited = vec![false; n];
        let mut stack = vec![0];
        visited[0] = true;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !visited[v] {
                    visited[v] = true;
                    stack.push(v);
                }
            }
        }
        if visited.iter().any(|v| !v) {
            return Err(GraphError::Disconnected);
        }
        let minors = leading_minors(&self.intersection_matrix());
        for (k, m) in minors.iter().enumerate() {
            // (−1)^(k+1) · det_(k+1) must be positive
            let ok = if k % 2 == 0 { m.is_negative() } else { m.is_positive() };
            if !ok {
                return Err(GraphError::NotNegativeDefinite(k + 1));
            }
        }
        Ok(())
    }
}

/// Leading principal minors `det_1, .., det_n` by fraction-free elimination
/// without pivoting; stops after the first zero minor.
pub fn leading_minors(m: &[Vec<i64>]) -> Vec<BigInt> {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut out = Vec::with_capacity(n);
    let mut prev = BigInt::from(1);
    for k in 0..n {
        let pivot = a[k][k].clone();
        out.push(pivot.clone());
        if pivot.is_zero() {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&pivot * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = pivot;
    }
    out
}

/// Solves `N x = b` exactly for nonsingular `N`: Bareiss forward
/// elimination on `[N | b]`, then rational back substitution.
pub fn bareiss_solve(m: &[Vec<i64>], b: &[i64]) -> Option<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .zip(b)
        .map(|(row, &r)| {
            row.iter()
                .map(|&x| BigInt::from(x))
                .chain(std::iter::once(BigInt::from(r)))
                .collect()
        })
        .collect();
    let mut prev = BigInt::from(1);
    for k in 0..n {
        let piv_row = (k..n).find(|&i| !a[i][k].is_zero())?;
        if piv_row != k {
            a.swap(piv_row, k);
        }
        for i in k + 1..n {
            for j in k + 1..=n {
                a[i][j] = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Rational::from(a[i][n].clone());
        for j in i + 1..n {
            acc = acc - Rational::from(a[i][j].clone()) * x[j].clone();
        }
        x[i] = acc / Rational::from(a[i][i].clone());
    }
    Some(x)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LcClass {
    Klt,
    Plt,
    Lc,
    NotLc,
}

impl fmt::Display for LcClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LcClass::Klt => "KLT",
            LcClass::Plt => "PLT",
            LcClass::Lc => "LC",
            LcClass::NotLc => "not LC",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscrepancyVector {
    pub a: Vec<Rational>,
    pub lc_class: LcClass,
}

impl DiscrepancyVector {
    pub fn min(&self) -> Rational {
        self.a.iter().cloned().reduce(Rational::min).expect("nonempty graph")
    }
}

pub fn solve_discrepancies(graph: &DualGraph) -> Result<DiscrepancyVector, GraphError> {
    graph.validate()?;
    let a = bareiss_solve(&graph.intersection_matrix(), &graph.rhs())
        .ok_or(GraphError::NotNegativeDefinite(graph.len()))?;
    let minus_one = Rational::from_int(-1);
    let min = a.iter().cloned().reduce(Rational::min).expect("nonempty graph");
    let lc_class = if min < minus_one {
        LcClass::NotLc
    } else if min == minus_one {
        LcClass::Lc
    } else if graph.boundary_total() > 0 {
        LcClass::Plt
    } else {
        LcClass::Klt
    };
    Ok(DiscrepancyVector { a, lc_class })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphType {
    A,
    B,
    C,
    Other,
}

impl fmt::Display for GraphType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphType::A => "(a)",
            GraphType::B => "(b)",
            GraphType::C => "(c)",
            GraphType::Other => "other",
        })
    }
}

/// Shape of the dual graph of `E ∪ Δ̃`, with boundary branches as extra
/// leaves:
/// * (a) `• − ○ − .. − ○`
/// * (b) `• − ○ − .. − ○ − •`
/// * (c) `• − ○ − .. − ○ − v − ○(−2)` with a second `○(−2)` hanging at `v`
pub fn classify_graph_type(graph: &DualGraph) -> Result<GraphType, GraphError> {
    graph.validate()?;
    let k = graph.boundary_total();
    if k == 0 {
        return Err(GraphError::NoBoundary);
    }
    let n = graph.len();
    if graph.edges.len() + 1 != n {
        return Ok(GraphType::Other);
    }
    let adj = graph.neighbours();
    let deg = |i: usize| adj[i].len() + graph.boundary[i] as usize;
    let is_path = (0..n).all(|i| deg(i) <= 2);
    if is_path {
        // in a tree all of whose combined degrees are ≤ 2, boundary leaves
        // are automatically path ends
        return Ok(match k {
            1 => GraphType::A,
            2 => GraphType::B,
            _ => GraphType::Other,
        });
    }
    if k != 1 {
        return Ok(GraphType::Other);
    }
    let forks: Vec<usize> = (0..n).filter(|&i| deg(i) >= 3).collect();
    if forks.len() != 1 || deg(forks[0]) != 3 {
        return Ok(GraphType::Other);
    }
    let v = forks[0];
    let leaves: Vec<usize> = adj[v]
        .iter()
        .copied()
        .filter(|&u| deg(u) == 1 && graph.boundary[u] == 0 && graph.vertices[u].b == 2)
        .collect();
    // a tree with a single fork of degree 3 has three leaves, so the third
    // arm of v ends at the boundary branch
    Ok(if leaves.len() == 2 { GraphType::C } else { GraphType::Other })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FClassPrediction {
    DivisoriallyFRegular,
    FPureNotDivisoriallyFRegular,
    NotFPure,
}

impl fmt::Display for FClassPrediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FClassPrediction::DivisoriallyFRegular => "divisorially F-regular",
            FClassPrediction::FPureNotDivisoriallyFRegular => {
                "F-pure, not divisorially F-regular"
            }
            FClassPrediction::NotFPure => "not F-pure",
        })
    }
}

/// F-class predicted from the graph type of the minimal log resolution
/// (minimality is the caller's responsibility).
pub fn predict_fclass(graph: &DualGraph, p: u32) -> Result<FClassPrediction, GraphError> {
    Ok(match classify_graph_type(graph)? {
        GraphType::A => FClassPrediction::DivisoriallyFRegular,
        GraphType::B => FClassPrediction::FPureNotDivisoriallyFRegular,
        GraphType::C if p != 2 => FClassPrediction::FPureNotDivisoriallyFRegular,
        GraphType::C | GraphType::Other => FClassPrediction::NotFPure,
    })
}

/// Discrepancy `−1 − b/r` of the exceptional divisor of the graded blowup
/// of a section ring, where `r·K = b·D`.
pub fn graded_discrepancy(index: u64, b: i64) -> Result<Rational, GraphError> {
    if index == 0 {
        return Err(GraphError::ZeroIndex);
    }
    Ok(Rational::from_int(-1) - Rational::from_bigints(b.into(), index.into()))
}

/// Everything known about one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphReport {
    pub discrepancies: DiscrepancyVector,
    pub graph_type: Option<GraphType>,
    pub prediction: Option<FClassPrediction>,
}

pub fn graph_report(graph: &DualGraph, p: Option<u32>) -> Result<GraphReport, GraphError> {
    let discrepancies = solve_discrepancies(graph)?;
    let graph_type = if graph.boundary_total() > 0 {
        Some(classify_graph_type(graph)?)
    } else {
        None
    };
    let prediction = match (graph_type, p) {
        (Some(_), Some(p)) => Some(predict_fclass(graph, p)?),
        _ => None,
    };
    Ok(GraphReport {
        discrepancies,
        graph_type,
        prediction,
    })
}
