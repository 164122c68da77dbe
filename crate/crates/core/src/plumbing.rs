//! Plumbing graphs, their intersection lattices, signatures, Wu classes, μ̄,
//! and construction from Seifert/Brieskorn data via negative continued
//! fractions.
//!
//! A plumbing graph is a weighted tree; its intersection form has the weights
//! on the diagonal and a 1 for every edge. All invariants are computed exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use thiserror::Error;

use crate::matrix::{self, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PlumbingError {
    #[error("duplicate vertex id {0}")]
    DuplicateId(i64),
    #[error("edges do not form a tree on the vertex set: {0}")]
    NotATree(String),
    #[error("zero denominator in continued fraction expansion")]
    ZeroDenominator,
    #[error("no negative continued fraction expansion with all entries <= -2 for {p}/{q}")]
    NotExpandable { p: i64, q: i64 },
    #[error("Seifert orbit ({alpha}, {beta}) is not coprime")]
    OrbitNotCoprime { alpha: i64, beta: i64 },
    #[error("multiplicities {0}, {1}, {2} are not pairwise coprime")]
    NotCoprime(i64, i64, i64),
    #[error("mod-2 Wu system has no solution (graph is not a valid plumbing tree)")]
    NoSolution,
    #[error("operation requires a negative-definite graph")]
    NotNegativeDefinite,
    #[error("invalid Seifert multiplicity {0} (must be positive)")]
    InvalidMultiplicity(i64),
}

/// Star-shape bookkeeping attached to graphs built from Seifert data:
/// the central vertex and each leg as a path of vertex indices ordered
/// outward from the center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarShape {
    pub central: usize,
    pub legs: Vec<Vec<usize>>,
}

/// A weighted tree encoding a plumbed 4-manifold.
///
/// Vertices carry arbitrary distinct integer ids; internally they are stored
/// densely in input order and all matrix computations use dense indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlumbingGraph {
    ids: Vec<i64>,
    weights: Vec<i64>,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    star: Option<StarShape>,
}

impl PlumbingGraph {
    pub fn vertex_count(&self) -> usize {
        self.weights.len()
    }

    pub fn ids(&self) -> &[i64] {
        &self.ids
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn weight(&self, v: usize) -> i64 {
        self.weights[v]
    }

    /// Edges as dense index pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn index_of_id(&self, id: i64) -> Option<usize> {
        self.ids.iter().position(|&x| x == id)
    }

    /// Star-shape data, present when the graph was built from Seifert data.
    pub fn star(&self) -> Option<&StarShape> {
        self.star.as_ref()
    }

    /// The intersection form: weights on the diagonal, 1 per edge.
    pub fn intersection_form(&self) -> IntersectionForm {
        let n = self.vertex_count();
        let mut m = vec![vec![0i64; n]; n];
        for v in 0..n {
            m[v][v] = self.weights[v];
        }
        for &(a, b) in &self.edges {
            m[a][b] = 1;
            m[b][a] = 1;
        }
        IntersectionForm { matrix: m }
    }

    /// Almost-rationality is not decidable from the paper's data; the only
    /// sanity signal is star-shapedness. Returns a warning message when the
    /// graph has more than one vertex of degree ≥ 3.
    pub fn ar_warning(&self) -> Option<String> {
        let high = self.adj.iter().filter(|nb| nb.len() >= 3).count();
        if high > 1 {
            Some(format!(
                "graph has {high} vertices of degree >= 3; it is not star-shaped and may not be almost-rational"
            ))
        } else {
            None
        }
    }
}

/// Symmetric intersection matrix of a plumbing graph with exact determinant
/// and inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionForm {
    pub matrix: Vec<Vec<i64>>,
}

impl IntersectionForm {
    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    pub fn determinant(&self) -> BigInt {
        matrix::determinant(&self.matrix)
    }

    pub fn inverse(&self) -> Option<Vec<Vec<Rat>>> {
        matrix::inverse(&self.matrix)
    }

    /// Pairing xᵀ·Q·y of two integer vectors.
    pub fn pairing(&self, x: &[i64], y: &[i64]) -> i64 {
        let n = self.size();
        let mut acc = 0i64;
        for i in 0..n {
            for j in 0..n {
                acc += x[i] * self.matrix[i][j] * y[j];
            }
        }
        acc
    }

    /// Q·x for an integer vector.
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// Validate vertex/edge data and build a plumbing graph.
pub fn build_graph(
    vertices: &[(i64, i64)],
    edges: &[(i64, i64)],
) -> Result<PlumbingGraph, PlumbingError> {
    let n = vertices.len();
    let ids: Vec<i64> = vertices.iter().map(|&(id, _)| id).collect();
    let weights: Vec<i64> = vertices.iter().map(|&(_, w)| w).collect();
    for (i, &id) in ids.iter().enumerate() {
        if ids[..i].contains(&id) {
            return Err(PlumbingError::DuplicateId(id));
        }
    }
    if edges.len() + 1 != n {
        return Err(PlumbingError::NotATree(format!(
            "{} edges on {} vertices",
            edges.len(),
            n
        )));
    }
    let mut dense = Vec::with_capacity(edges.len());
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        let ai = ids
            .iter()
            .position(|&x| x == a)
            .ok_or_else(|| PlumbingError::NotATree(format!("edge endpoint {a} is not a vertex")))?;
        let bi = ids
            .iter()
            .position(|&x| x == b)
            .ok_or_else(|| PlumbingError::NotATree(format!("edge endpoint {b} is not a vertex")))?;
        if ai == bi {
            return Err(PlumbingError::NotATree(format!("self-loop at {a}")));
        }
        if adj[ai].contains(&bi) {
            return Err(PlumbingError::NotATree(format!("parallel edge {a}-{b}")));
        }
        adj[ai].push(bi);
        adj[bi].push(ai);
        dense.push((ai, bi));
    }
    // |E| = |V| - 1 plus connectivity makes it a tree.
    if n > 0 {
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(PlumbingError::NotATree("graph is disconnected".into()));
        }
    }
    Ok(PlumbingGraph { ids, weights, edges: dense, adj, star: None })
}

/// Signature of the intersection form, computed exactly.
pub fn signature(g: &PlumbingGraph) -> i64 {
    let q = g.intersection_form();
    let inertia = matrix::inertia(&q.matrix);
    inertia.positive as i64 - inertia.negative as i64
}

/// True iff −Q has all leading principal minors positive.
pub fn is_negative_definite(g: &PlumbingGraph) -> bool {
    let q = g.intersection_form();
    let neg: Vec<Vec<i64>> = q.matrix.iter().map(|row| row.iter().map(|&x| -x).collect()).collect();
    matrix::leading_minors(&neg).iter().all(|m| m.is_positive())
}

/// Negative continued fraction expansion of p/q:
/// returns [a₁,…,a_k], all aᵢ ≤ −2, with p/q = a₁ − 1/(a₂ − 1/(… − 1/a_k)).
pub fn neg_continued_fraction(p: i64, q: i64) -> Result<Vec<i64>, PlumbingError> {
    if q == 0 {
        return Err(PlumbingError::ZeroDenominator);
    }
    let mut x = Rat::new(BigInt::from(p), BigInt::from(q));
    let mut out = Vec::new();
    loop {
        if x.is_integer() {
            let a = x.to_integer();
            if a > BigInt::from(-2) {
                return Err(PlumbingError::NotExpandable { p, q });
            }
            out.push(int_to_i64(&a));
            return Ok(out);
        }
        let a = x.floor().to_integer();
        if a > BigInt::from(-2) {
            return Err(PlumbingError::NotExpandable { p, q });
        }
        out.push(int_to_i64(&a));
        // x ← 1/(a − x); the next tail value t satisfies x = a − 1/t.
        let af = Rat::from_integer(a);
        x = Rat::from_integer(BigInt::from(1)) / (af - x);
    }
}

fn int_to_i64(b: &BigInt) -> i64 {
    use num_traits::ToPrimitive;
    b.to_i64().expect("continued fraction entry exceeds i64")
}

/// Evaluate [a₁,…,a_k] as the exact rational a₁ − 1/(a₂ − 1/(… − 1/a_k)).
pub fn eval_continued_fraction(entries: &[i64]) -> Rat {
    let mut it = entries.iter().rev();
    let mut x = matrix::rat_int(*it.next().expect("empty expansion"));
    for &a in it {
        x = matrix::rat_int(a) - matrix::rat_int(1) / x;
    }
    x
}

/// Unnormalized Seifert invariants: a central weight and one (α, β) pair per
/// singular orbit, gcd(α, β) = 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertData {
    pub central_weight: i64,
    pub orbits: Vec<(i64, i64)>,
}

impl SeifertData {
    pub fn new(central_weight: i64, orbits: Vec<(i64, i64)>) -> Result<Self, PlumbingError> {
        for &(alpha, beta) in &orbits {
            if alpha <= 0 {
                return Err(PlumbingError::InvalidMultiplicity(alpha));
            }
            if alpha.gcd(&beta) != 1 {
                return Err(PlumbingError::OrbitNotCoprime { alpha, beta });
            }
        }
        Ok(SeifertData { central_weight, orbits })
    }

    /// Orbifold Euler number e = b − Σ βᵢ/αᵢ.
    pub fn euler_number(&self) -> Rat {
        let mut e = matrix::rat_int(self.central_weight);
        for &(alpha, beta) in &self.orbits {
            e -= matrix::rat(beta, alpha);
        }
        e
    }
}

/// Translate Seifert data into a star-shaped plumbing graph: one leg per
/// orbit with α > 1 (leg weights = negative continued fraction of α/β);
/// α = 1 orbits are absorbed into the central weight.
pub fn seifert_to_plumbing(s: &SeifertData) -> Result<PlumbingGraph, PlumbingError> {
    let mut central = s.central_weight;
    let mut leg_weights = Vec::new();
    for &(alpha, beta) in &s.orbits {
        if alpha == 1 {
            // (1, β) contributes β/1 to the Euler number; fold it into b.
            central -= beta;
        } else {
            leg_weights.push(neg_continued_fraction(alpha, beta)?);
        }
    }
    let mut vertices = vec![(0i64, central)];
    let mut edges = Vec::new();
    let mut legs = Vec::new();
    for lw in &leg_weights {
        let mut prev = 0usize;
        let mut leg = Vec::new();
        for &w in lw {
            let idx = vertices.len();
            vertices.push((idx as i64, w));
            edges.push((prev as i64, idx as i64));
            leg.push(idx);
            prev = idx;
        }
        legs.push(leg);
    }
    let mut g = build_graph(&vertices, &edges)?;
    g.star = Some(StarShape { central: 0, legs });
    Ok(g)
}

/// Seifert invariants of the Brieskorn sphere Σ(a₁,a₂,a₃) (pairwise coprime),
/// normalized to Euler number −1/(a₁a₂a₃): βᵢ ∈ (−αᵢ, 0) with
/// (a/αᵢ)·βᵢ ≡ 1 (mod αᵢ), central weight from the defining relation.
pub fn brieskorn_to_seifert(a1: i64, a2: i64, a3: i64) -> Result<SeifertData, PlumbingError> {
    for &(x, y) in &[(a1, a2), (a1, a3), (a2, a3)] {
        if x.gcd(&y) != 1 {
            return Err(PlumbingError::NotCoprime(a1, a2, a3));
        }
    }
    for &x in &[a1, a2, a3] {
        if x <= 0 {
            return Err(PlumbingError::InvalidMultiplicity(x));
        }
    }
    let a = a1 * a2 * a3;
    let mut orbits = Vec::new();
    let mut sum = -1i64;
    for &alpha in &[a1, a2, a3] {
        let m = a / alpha;
        let beta = if alpha == 1 {
            0
        } else {
            mod_inverse(m.rem_euclid(alpha), alpha) - alpha
        };
        orbits.push((alpha, beta));
        sum += beta * m;
    }
    debug_assert_eq!(sum.rem_euclid(a), 0);
    let b = sum / a;
    SeifertData::new(b, orbits)
}

/// Seifert invariants of Σ(2, p, q) — the double branched cover of the torus
/// knot T_{p,q} with p even, q odd, gcd(p, q) = 1 — presented as the
/// three-leg (two legs for p = 2) graph with two identical legs:
/// central −c, orbits (p/2, −β₂), (q, −β₃), (q, −β₃) with
/// β₂ ≡ −q⁻¹ (mod p/2), β₃ ≡ −p⁻¹ (mod q), c·pq/2 − q·β₂ − p·β₃ = 1.
pub fn branched_cover_seifert(p: i64, q: i64) -> Result<SeifertData, PlumbingError> {
    if p <= 0 || p % 2 != 0 {
        return Err(PlumbingError::InvalidMultiplicity(p));
    }
    if q <= 0 || p.gcd(&q) != 1 {
        return Err(PlumbingError::NotCoprime(2, p, q));
    }
    let ph = p / 2;
    let b2 = if ph == 1 { 0 } else { (-mod_inverse(q.rem_euclid(ph), ph)).rem_euclid(ph) };
    let b3 = if q == 1 { 0 } else { (-mod_inverse(p.rem_euclid(q), q)).rem_euclid(q) };
    let c = (1 + q * b2 + p * b3) / (ph * q);
    debug_assert_eq!(c * ph * q, 1 + q * b2 + p * b3);
    let mut orbits = vec![(ph, -b2), (q, -b3), (q, -b3)];
    orbits.retain(|&(alpha, _)| alpha > 1);
    SeifertData::new(-c, orbits)
}

fn mod_inverse(x: i64, m: i64) -> i64 {
    // Extended Euclid; x and m coprime, m > 0. Returns the inverse in [0, m).
    let (mut r0, mut r1) = (m, x.rem_euclid(m));
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "arguments must be coprime");
    t0.rem_euclid(m)
}

/// The spherical Wu class: the unique 0/1 vertex-coefficient solution of
/// Q·x ≡ diag(Q) (mod 2), with pairwise non-adjacent support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WuClass {
    pub coefficients: Vec<u8>,
}

impl WuClass {
    /// w² = εᵀQε, an integer.
    pub fn square(&self, g: &PlumbingGraph) -> i64 {
        let q = g.intersection_form();
        let x: Vec<i64> = self.coefficients.iter().map(|&c| c as i64).collect();
        q.pairing(&x, &x)
    }

    /// Pairings (w, S_v) = (Q·ε)_v, the characteristic vector PD(w).
    pub fn pairings(&self, g: &PlumbingGraph) -> Vec<i64> {
        let q = g.intersection_form();
        let x: Vec<i64> = self.coefficients.iter().map(|&c| c as i64).collect();
        q.apply(&x)
    }
}

/// Compute the spherical Wu class of a negative-definite plumbing tree.
pub fn wu_class(g: &PlumbingGraph) -> Result<WuClass, PlumbingError> {
    if !is_negative_definite(g) {
        return Err(PlumbingError::NotNegativeDefinite);
    }
    let n = g.vertex_count();
    let q = g.intersection_form();
    // Solve Q·ε ≡ diag(Q) (mod 2) over GF(2); free variables are set to 0.
    let mut rows: Vec<Vec<u8>> = (0..n)
        .map(|i| {
            let mut row: Vec<u8> = q.matrix[i].iter().map(|&x| (x.rem_euclid(2)) as u8).collect();
            row.push((q.matrix[i][i].rem_euclid(2)) as u8);
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if let Some(p) = (r..n).find(|&i| rows[i][c] == 1) {
            rows.swap(r, p);
            for i in 0..n {
                if i != r && rows[i][c] == 1 {
                    let pivot_row = rows[r].clone();
                    for (x, y) in rows[i].iter_mut().zip(pivot_row.iter()) {
                        *x ^= y;
                    }
                }
            }
            pivots.push((r, c));
            r += 1;
        }
    }
    if (r..n).any(|i| rows[i][n] == 1) {
        return Err(PlumbingError::NoSolution);
    }
    let mut eps = vec![0u8; n];
    for &(ri, c) in &pivots {
        eps[c] = rows[ri][n];
    }
    // The support of the Wu class must be pairwise non-adjacent.
    for &(a, b) in g.edges() {
        debug_assert!(
            !(eps[a] == 1 && eps[b] == 1),
            "Wu class support contains adjacent vertices"
        );
    }
    Ok(WuClass { coefficients: eps })
}

/// The Neumann–Siebenmann invariant μ̄ = (σ(Γ) − w²)/8 as an exact rational.
pub fn mubar(g: &PlumbingGraph) -> Result<Rat, PlumbingError> {
    let w = wu_class(g)?;
    let sig = signature(g);
    Ok(matrix::rat(sig - w.square(g), 8))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn chain(weights: &[i64]) -> PlumbingGraph {
        let vertices: Vec<(i64, i64)> = weights.iter().enumerate().map(|(i, &w)| (i as i64, w)).collect();
        let edges: Vec<(i64, i64)> = (1..weights.len()).map(|i| (i as i64 - 1, i as i64)).collect();
        build_graph(&vertices, &edges).unwrap()
    }

    #[test]
    fn build_graph_validates_tree_structure() {
        assert!(build_graph(&[(0, -1)], &[]).is_ok());
        assert!(matches!(
            build_graph(&[(0, -1), (0, -2)], &[(0, 0)]),
            Err(PlumbingError::DuplicateId(0))
        ));
        // Two vertices, two parallel edges: rejected (a cycle, not a tree).
        assert!(matches!(
            build_graph(&[(0, -2), (1, -2)], &[(0, 1), (1, 0)]),
            Err(PlumbingError::NotATree(_))
        ));
        assert!(matches!(
            build_graph(&[(0, -2), (1, -2), (2, -2)], &[(0, 1)]),
            Err(PlumbingError::NotATree(_))
        ));
    }

    #[test]
    fn continued_fraction_examples() {
        assert_eq!(
            neg_continued_fraction(19, -9).unwrap(),
            vec![-3, -2, -2, -2, -2, -2, -2, -2, -2]
        );
        assert_eq!(neg_continued_fraction(-2, 1).unwrap(), vec![-2]);
        assert_eq!(neg_continued_fraction(-9, 2).unwrap(), vec![-5, -2]);
        assert!(matches!(
            neg_continued_fraction(1, 2),
            Err(PlumbingError::NotExpandable { .. })
        ));
        assert!(matches!(
            neg_continued_fraction(3, 0),
            Err(PlumbingError::ZeroDenominator)
        ));
    }

    #[test]
    fn continued_fraction_round_trip() {
        for p in -200i64..=200 {
            for q in -200i64..=200 {
                if q == 0 {
                    continue;
                }
                if let Ok(cf) = neg_continued_fraction(p, q) {
                    assert!(cf.iter().all(|&a| a <= -2));
                    assert_eq!(eval_continued_fraction(&cf), matrix::rat(p, q), "{p}/{q}");
                }
            }
        }
    }

    #[test]
    fn signature_and_definiteness() {
        let single = build_graph(&[(0, -1)], &[]).unwrap();
        assert_eq!(signature(&single), -1);
        assert!(is_negative_definite(&single));
        let pos = build_graph(&[(0, 1)], &[]).unwrap();
        assert!(!is_negative_definite(&pos));
        let zero = build_graph(&[(0, 0)], &[]).unwrap();
        assert!(!is_negative_definite(&zero));
        assert_eq!(signature(&chain(&[-2; 18])), -18);
    }

    #[test]
    fn two_leg_graph_for_n_equals_one() {
        let s = SeifertData::new(-1, vec![(19, -9), (19, -9)]).unwrap();
        let g = seifert_to_plumbing(&s).unwrap();
        assert_eq!(g.vertex_count(), 19);
        assert!(is_negative_definite(&g));
        // The printed 19-vertex graph is negative definite, so its signature
        // is −19 (and its Wu square −1); the frequently quoted −18/0 pair
        // belongs to the minimal linear presentation [−2 × 18] of the same
        // boundary, tested below.
        assert_eq!(signature(&g), -19);
        let w = wu_class(&g).unwrap();
        assert_eq!(w.square(&g), -1);
        assert_eq!(mubar(&g).unwrap(), matrix::rat(-9, 4));

        let c = chain(&[-2; 18]);
        assert_eq!(signature(&c), -18);
        assert_eq!(wu_class(&c).unwrap().square(&c), 0);
        assert_eq!(mubar(&c).unwrap(), matrix::rat(-9, 4));
    }

    #[test]
    fn three_leg_graphs_for_odd_n() {
        for n in [3i64, 5, 7, 9] {
            let s = SeifertData::new(
                -2,
                vec![(20 * n - 1, -20 * n + 11), (20 * n - 1, -20 * n + 11), (n, -1)],
            )
            .unwrap();
            let g = seifert_to_plumbing(&s).unwrap();
            assert!(is_negative_definite(&g));
            assert_eq!(signature(&g), -4 * n - 16);
            assert_eq!(wu_class(&g).unwrap().square(&g), -4 * n + 2);
            assert_eq!(mubar(&g).unwrap(), matrix::rat(-9, 4));
        }
    }

    #[test]
    fn brieskorn_examples() {
        // Σ(2,3,5): the E8 graph.
        let s = brieskorn_to_seifert(2, 3, 5).unwrap();
        assert_eq!(s.euler_number(), matrix::rat(-1, 30));
        let g = seifert_to_plumbing(&s).unwrap();
        assert_eq!(g.weights()[0], -2);
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(signature(&g), -8);
        assert_eq!(mubar(&g).unwrap(), matrix::rat(-1, 1));

        // Σ(2,3,7): the (−1; −2, −3, −7) star.
        let s = brieskorn_to_seifert(2, 3, 7).unwrap();
        assert_eq!(s.central_weight, -1);
        assert_eq!(s.orbits, vec![(2, -1), (3, -1), (7, -1)]);
        let g = seifert_to_plumbing(&s).unwrap();
        assert_eq!(g.weights(), &[-1, -2, -3, -7]);
        assert_eq!(mubar(&g).unwrap(), matrix::rat(1, 1));

        assert!(matches!(
            brieskorn_to_seifert(2, 2, 19),
            Err(PlumbingError::NotCoprime(..))
        ));
    }

    #[test]
    fn branched_cover_matches_printed_graphs() {
        // Σ(2,2,19): central −1, two legs [−3, −2×8].
        let s = branched_cover_seifert(2, 19).unwrap();
        assert_eq!(s.central_weight, -1);
        assert_eq!(s.orbits, vec![(19, -9), (19, -9)]);
        // Σ(2,2n,20n−1): central −2, orbits (20n−1, −20n+11)², (n, −1).
        for n in [3i64, 5, 7] {
            let s = branched_cover_seifert(2 * n, 20 * n - 1).unwrap();
            assert_eq!(s.central_weight, -2);
            assert_eq!(
                s.orbits,
                vec![(n, -1), (20 * n - 1, -20 * n + 11), (20 * n - 1, -20 * n + 11)]
            );
        }
    }

    #[test]
    fn wu_class_examples() {
        let g = seifert_to_plumbing(&SeifertData::new(-1, vec![(19, -9), (19, -9)]).unwrap()).unwrap();
        let w = wu_class(&g).unwrap();
        // Support is the central vertex only (w² = −1).
        assert_eq!(w.coefficients.iter().map(|&c| c as i64).sum::<i64>(), 1);

        let p = seifert_to_plumbing(&brieskorn_to_seifert(2, 3, 7).unwrap()).unwrap();
        let w = wu_class(&p).unwrap();
        assert_eq!(w.coefficients, vec![0, 1, 1, 1]);

        let single = build_graph(&[(0, -2)], &[]).unwrap();
        assert_eq!(wu_class(&single).unwrap().coefficients, vec![0]);
        assert_eq!(mubar(&single).unwrap(), matrix::rat(-1, 8));
    }

    #[test]
    fn intersection_form_determinant_counts_spinc_classes() {
        let g = seifert_to_plumbing(&SeifertData::new(-1, vec![(19, -9), (19, -9)]).unwrap()).unwrap();
        let det = g.intersection_form().determinant();
        assert_eq!(det.abs().to_i64(), Some(19));
    }

    #[test]
    fn seifert_alpha_one_orbits_are_absorbed() {
        let s = SeifertData::new(-2, vec![(1, -1), (3, -2)]).unwrap();
        let g = seifert_to_plumbing(&s).unwrap();
        // (1, −1) raises the central weight by 1; only the (3, −2) leg remains.
        assert_eq!(g.weights(), &[-1, -2, -2]);
        let e_direct = s.euler_number();
        let folded = SeifertData::new(-1, vec![(3, -2)]).unwrap();
        assert_eq!(e_direct, folded.euler_number());
    }

    #[test]
    fn ar_warning_flags_double_stars() {
        let g = seifert_to_plumbing(&brieskorn_to_seifert(2, 3, 7).unwrap()).unwrap();
        assert!(g.ar_warning().is_none());
        // Two degree-3 vertices: a dumbbell of stars.
        let g = build_graph(
            &[(0, -2), (1, -2), (2, -2), (3, -2), (4, -2), (5, -2), (6, -2), (7, -2)],
            &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6), (4, 7)],
        )
        .unwrap();
        assert!(g.ar_warning().is_some());
    }
}
