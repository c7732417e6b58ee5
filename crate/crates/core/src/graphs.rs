//! Finite loop-free graphs and the right-angled Artin invariants computed
//! from their cliques.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::charpoly::CharPolynomial;
use crate::{Error, Result};

/// Default cap on the vertex count for clique enumeration.
pub const DEFAULT_MAX_VERTICES: usize = 40;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    fn empty(v: usize) -> Self {
        VertexSet {
            words: vec![0; v.div_ceil(64)],
        }
    }

    fn insert(&mut self, x: usize) {
        self.words[x / 64] |= 1 << (x % 64);
    }

    fn remove(&mut self, x: usize) {
        self.words[x / 64] &= !(1 << (x % 64));
    }

    fn contains(&self, x: usize) -> bool {
        self.words[x / 64] & (1 << (x % 64)) != 0
    }

    fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn intersection(&self, other: &Self) -> Self {
        VertexSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    fn intersection_len(&self, other: &Self) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn difference(&self, other: &Self) -> Self {
        VertexSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect(),
        }
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + bit)
            })
        })
    }
}

/// Undirected graph on vertices `0..v` without loops or multiple edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    adjacency: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; loops are rejected.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(vertex_count);
        for (a, b) in edges {
            for x in [a, b] {
                if x >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: x,
                        vertex_count,
                    });
                }
            }
            if a == b {
                return Err(Error::SelfLoop { vertex: a });
            }
            g.adjacency[a].insert(b);
            g.adjacency[b].insert(a);
        }
        Ok(g)
    }

    pub fn empty(vertex_count: usize) -> Self {
        Graph {
            vertex_count,
            adjacency: vec![VertexSet::empty(vertex_count); vertex_count],
        }
    }

    pub fn complete(vertex_count: usize) -> Self {
        Graph::empty(vertex_count).complement()
    }

    pub fn path(vertex_count: usize) -> Self {
        Graph::new(vertex_count, (1..vertex_count).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn star(leaves: usize) -> Self {
        Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("valid star")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)));
        Graph::new(a + b, edges).expect("valid bipartite graph")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.vertex_count && b < self.vertex_count && self.adjacency[a].contains(b)
    }

    pub fn degree(&self, x: usize) -> usize {
        self.adjacency[x].len()
    }

    /// Edges as `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count)
            .flat_map(|a| self.adjacency[a].iter().filter(move |&b| b > a).map(move |b| (a, b)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Same vertices, complementary edge set.
    pub fn complement(&self) -> Self {
        let v = self.vertex_count;
        let adjacency = (0..v)
            .map(|x| {
                let mut all = VertexSet::empty(v);
                for y in (0..v).filter(|&y| y != x) {
                    all.insert(y);
                }
                all.difference(&self.adjacency[x])
            })
            .collect();
        Graph {
            vertex_count: v,
            adjacency,
        }
    }

    /// Relabels vertex `x` as `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        Graph::new(
            self.vertex_count,
            self.edges().into_iter().map(|(a, b)| (perm[a], perm[b])),
        )
    }

    /// Smallest-last ordering: repeatedly remove a vertex of minimum remaining degree.
    fn degeneracy_order(&self) -> Vec<usize> {
        let v = self.vertex_count;
        let mut remaining = VertexSet::empty(v);
        for x in 0..v {
            remaining.insert(x);
        }
        let mut order = Vec::with_capacity(v);
        while !remaining.is_empty() {
            let x = remaining
                .iter()
                .min_by_key(|&x| self.adjacency[x].intersection_len(&remaining))
                .expect("nonempty");
            remaining.remove(x);
            order.push(x);
        }
        order
    }

    /// `c_1..c_ω`: the number of complete subgraphs on `k` vertices, up to
    /// the clique number ω. Empty for the graph without vertices.
    pub fn clique_counts(&self) -> Result<Vec<BigInt>> {
        self.clique_counts_with_limit(DEFAULT_MAX_VERTICES)
    }

    pub fn clique_counts_with_limit(&self, limit: usize) -> Result<Vec<BigInt>> {
        let v = self.vertex_count;
        if v > limit {
            return Err(Error::TooManyVertices {
                vertex_count: v,
                limit,
            });
        }
        let mut counter = CliqueCounter {
            graph: self,
            counts: vec![BigInt::zero(); v + 1],
            binomials: binomial_rows(v),
        };
        let order = self.degeneracy_order();
        let mut later = VertexSet::empty(v);
        for x in 0..v {
            later.insert(x);
        }
        for &x in &order {
            later.remove(x);
            let candidates = self.adjacency[x].intersection(&later);
            counter.descend(candidates, 1, 0);
        }
        let mut counts = counter.counts;
        counts.remove(0);
        while counts.last().is_some_and(Zero::is_zero) {
            counts.pop();
        }
        Ok(counts)
    }

    /// Largest clique size.
    pub fn clique_number(&self) -> Result<usize> {
        Ok(self.clique_counts()?.len())
    }

    /// Alternating clique polynomial `1 + Σ (−1)^k·c_k·y^k`, the characteristic
    /// polynomial of the right-angled Artin Lie algebra of the graph.
    pub fn clique_polynomial(&self) -> Result<CharPolynomial> {
        self.clique_polynomial_with_limit(DEFAULT_MAX_VERTICES)
    }

    pub fn clique_polynomial_with_limit(&self, limit: usize) -> Result<CharPolynomial> {
        let mut coeffs = vec![BigInt::one()];
        for (i, c) in self.clique_counts_with_limit(limit)?.into_iter().enumerate() {
            coeffs.push(if i % 2 == 0 { -c } else { c });
        }
        CharPolynomial::new(coeffs)
    }

    /// Ranks of the lower-central-series quotients `gr_1..gr_count` of the
    /// right-angled Artin group of the graph.
    pub fn lcs_ranks(&self, count: usize) -> Result<Vec<BigInt>> {
        self.lcs_ranks_with_limit(count, DEFAULT_MAX_VERTICES)
    }

    pub fn lcs_ranks_with_limit(&self, count: usize, limit: usize) -> Result<Vec<BigInt>> {
        let witt = self.clique_polynomial_with_limit(limit)?.witt_dims(count);
        if let Some((degree, _)) = witt.first_defect() {
            return Err(Error::InvalidRank { degree });
        }
        Ok(witt.integral().expect("no defect"))
    }

    pub fn turan_check(&self) -> Result<TuranReport> {
        self.turan_check_with_limit(DEFAULT_MAX_VERTICES)
    }

    pub fn turan_check_with_limit(&self, limit: usize) -> Result<TuranReport> {
        let counts = self.clique_counts_with_limit(limit)?;
        Ok(TuranReport::from_counts(&counts))
    }
}

fn binomial_rows(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut row = vec![BigInt::one(); i + 1];
        for k in 1..i {
            row[k] = &rows[i - 1][k - 1] + &rows[i - 1][k];
        }
        rows.push(row);
    }
    rows
}

/// Pivot-based clique counting: every clique is reached exactly once as a
/// set of `held` vertices (always included) plus a subset of `pivots`
/// vertices (each optional), so a leaf contributes `C(pivots, j)` cliques of
/// size `held + j` without listing them.
struct CliqueCounter<'g> {
    graph: &'g Graph,
    counts: Vec<BigInt>,
    binomials: Vec<Vec<BigInt>>,
}

impl CliqueCounter<'_> {
    fn descend(&mut self, mut candidates: VertexSet, held: usize, pivots: usize) {
        if candidates.is_empty() {
            for (j, b) in self.binomials[pivots].iter().enumerate() {
                self.counts[held + j] += b;
            }
            return;
        }
        let adjacency = &self.graph.adjacency;
        let pivot = candidates
            .iter()
            .max_by_key(|&u| adjacency[u].intersection_len(&candidates))
            .expect("nonempty");
        let branch: Vec<usize> = candidates
            .difference(&adjacency[pivot])
            .iter()
            .collect();
        // the pivot itself is not its own neighbour, so it leads the branch list
        self.descend(candidates.intersection(&adjacency[pivot]), held, pivots + 1);
        candidates.remove(pivot);
        for x in branch.into_iter().filter(|&x| x != pivot) {
            let next = candidates.intersection(&adjacency[x]);
            self.descend(next, held + 1, pivots);
            candidates.remove(x);
        }
    }
}

/// Mantel and Turán-type inequalities on the first two clique counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TuranReport {
    pub clique_number: usize,
    pub c1: BigInt,
    pub c2: BigInt,
    /// The graph is triangle-free.
    pub mantel_applicable: bool,
    /// `c_2 ≤ c_1²/4`.
    pub mantel_holds: bool,
    /// `((d − 1)/(2d))·c_1²` with `d` the clique number; 0 when `d = 0`.
    pub turan_bound: BigRational,
    /// `c_2 ≤ turan_bound`.
    pub turan_question_holds: bool,
    /// Equality in the Turán-type bound.
    pub turan_extremal: bool,
}

impl TuranReport {
    pub fn from_counts(counts: &[BigInt]) -> Self {
        let c1 = counts.first().cloned().unwrap_or_default();
        let c2 = counts.get(1).cloned().unwrap_or_default();
        let d = counts.len();
        let c1_sq = &c1 * &c1;
        let turan_bound = if d == 0 {
            BigRational::zero()
        } else {
            BigRational::new(BigInt::from(d - 1) * &c1_sq, BigInt::from(2 * d))
        };
        let c2_rat = BigRational::from_integer(c2.clone());
        TuranReport {
            clique_number: d,
            mantel_applicable: d <= 2,
            mantel_holds: BigInt::from(4) * &c2 <= c1_sq,
            turan_question_holds: c2_rat <= turan_bound,
            turan_extremal: c2_rat == turan_bound,
            turan_bound,
            c1,
            c2,
        }
    }
}

/// Cayley graph of `ℤ/n` for a connection set closed under negation and
/// avoiding 0: `x ~ x + s (mod n)` for `s ∈ S`.
pub fn cayley_graph(modulus: u64, connection: &[u64]) -> Result<Graph> {
    if modulus == 0 {
        return Err(Error::ZeroModulus);
    }
    let set: Vec<u64> = connection.iter().map(|s| s % modulus).collect();
    for &s in &set {
        if s == 0 || !set.contains(&((modulus - s) % modulus)) {
            return Err(Error::InvalidConnectionSet { residue: s });
        }
    }
    let n = modulus as usize;
    let edges = (0..n).flat_map(|x| set.iter().map(move |&s| (x, (x + s as usize) % n)));
    Graph::new(n, edges)
}

/// Closes a residue list under negation modulo `modulus`.
pub fn symmetrize(modulus: u64, residues: &[u64]) -> Vec<u64> {
    let mut out: Vec<u64> = residues
        .iter()
        .flat_map(|&s| {
            let s = s % modulus;
            [s, (modulus - s) % modulus]
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}
