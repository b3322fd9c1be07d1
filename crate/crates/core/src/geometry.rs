//! Polygon models of types A, B and C: diagonals (or centrally symmetric
//! pairs of diagonals), crossing numbers, triangulations, and a matching of
//! the whole picture onto an enumerated cluster algebra.
//!
//! Crossings are decided on the cyclic order of vertex labels alone.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::cluster::{ClusterAlgebra, DVector};
use crate::coxeter::Family;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum DiagonalKind {
    /// A diagonal of the type A polygon.
    Plain,
    /// A centrally symmetric pair `{u,v}, {u+h,v+h}`.
    SymmetricPair,
    /// A diameter; doubled in type B.
    Long { doubled: bool },
}

/// A diagonal object, stored by one representative `(u, v)` with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Diagonal {
    u: usize,
    v: usize,
    kind: DiagonalKind,
}

impl Diagonal {
    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn kind(&self) -> DiagonalKind {
        self.kind
    }

    pub fn is_long(&self) -> bool {
        matches!(self.kind, DiagonalKind::Long { .. })
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            DiagonalKind::Plain => write!(f, "{{{},{}}}", self.u, self.v),
            DiagonalKind::Long { doubled: true } => write!(f, "2x{{{},{}}}", self.u, self.v),
            DiagonalKind::Long { doubled: false } => write!(f, "{{{},{}}}", self.u, self.v),
            DiagonalKind::SymmetricPair => write!(f, "{{{},{}}}+c.s.", self.u, self.v),
        }
    }
}

/// A maximal set of pairwise non-crossing diagonal objects, as indices into
/// [`PolygonModel::diagonals`].
pub type GeometricCluster = Vec<usize>;

#[derive(Debug, Clone)]
pub struct PolygonModel {
    family: Family,
    rank: usize,
    vertex_count: usize,
    diagonals: Vec<Diagonal>,
    index: HashMap<(usize, usize), usize>,
}

impl PolygonModel {
    /// `(n+3)`-gon for `A_n`, centrally symmetric `(2n+2)`-gon for `B_n`, `C_n`.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let vertex_count = match family {
            Family::A if rank >= 1 => rank + 3,
            Family::B | Family::C if rank >= 2 => 2 * rank + 2,
            _ => return Err(Error::Geometry(format!("no polygon model for {family}{rank}"))),
        };
        let mut model = PolygonModel { family, rank, vertex_count, diagonals: Vec::new(), index: HashMap::new() };
        let half = vertex_count / 2;
        for (u, v) in (0..vertex_count).tuple_combinations() {
            if !model.is_diagonal(u, v) {
                continue;
            }
            let kind = match family {
                Family::A => DiagonalKind::Plain,
                _ if v - u == half => DiagonalKind::Long { doubled: family == Family::B },
                _ => DiagonalKind::SymmetricPair,
            };
            if kind == DiagonalKind::SymmetricPair && model.index.contains_key(&(u, v)) {
                continue;
            }
            let id = model.diagonals.len();
            model.diagonals.push(Diagonal { u, v, kind });
            model.index.insert((u, v), id);
            if kind == DiagonalKind::SymmetricPair {
                model.index.insert(model.rotate_half(u, v), id);
            }
        }
        Ok(model)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    fn is_diagonal(&self, u: usize, v: usize) -> bool {
        let k = self.vertex_count;
        u < k && v < k && u != v && (u + 1) % k != v && (v + 1) % k != u
    }

    fn rotate_half(&self, u: usize, v: usize) -> (usize, usize) {
        let h = self.vertex_count / 2;
        let (a, b) = ((u + h) % self.vertex_count, (v + h) % self.vertex_count);
        (a.min(b), a.max(b))
    }

    /// Index of the diagonal object containing the segment `{u, v}`.
    pub fn diagonal(&self, u: usize, v: usize) -> Result<usize> {
        let key = (u.min(v), u.max(v));
        self.index
            .get(&key)
            .copied()
            .ok_or_else(|| Error::Geometry(format!("{{{u},{v}}} is not a diagonal of the {}-gon", self.vertex_count)))
    }

    /// Segments making up a diagonal object.
    fn members(&self, d: &Diagonal) -> Vec<(usize, usize)> {
        match d.kind {
            DiagonalKind::SymmetricPair => vec![(d.u, d.v), self.rotate_half(d.u, d.v)],
            _ => vec![(d.u, d.v)],
        }
    }

    /// `[θ ∥ δ]` for diagonal indices.
    pub fn crossing_number(&self, theta: usize, delta: usize) -> Result<i64> {
        let count = self.diagonals.len();
        if theta >= count || delta >= count {
            return Err(Error::Geometry(format!("diagonal index out of range (have {count})")));
        }
        if theta == delta {
            return Ok(-1);
        }
        let t = &self.diagonals[theta];
        let d = &self.diagonals[delta];
        let rep = (d.u, d.v);
        let hits = |segments: Vec<(usize, usize)>| segments.iter().filter(|&&s| cross(s, rep)).count() as i64;
        Ok(match (self.family, d.kind) {
            (Family::B, DiagonalKind::Long { .. }) => i64::from(hits(self.members(t)) > 0),
            _ => {
                let h = hits(self.members(t));
                match t.kind {
                    DiagonalKind::Long { doubled: true } => 2 * h,
                    _ => h,
                }
            }
        })
    }

    /// Full table of crossing numbers.
    pub fn crossing_table(&self) -> Vec<Vec<i64>> {
        let k = self.diagonals.len();
        (0..k)
            .map(|t| (0..k).map(|d| self.crossing_number(t, d).expect("indices in range")).collect())
            .collect()
    }

    /// All maximal sets of pairwise non-crossing diagonal objects, each
    /// sorted, in lexicographic order.
    pub fn enumerate_geometric_clusters(&self) -> Vec<GeometricCluster> {
        let table = self.crossing_table();
        let k = self.diagonals.len();
        let compatible = |a: usize, b: usize| table[a][b] == 0 && table[b][a] == 0;
        let mut out = Vec::new();
        let mut current = Vec::new();
        extend_cliques(k, &compatible, 0, &mut current, &mut out);
        out
    }

    /// `d(T, δ) = ([θ_1 ∥ δ], ..., [θ_n ∥ δ])`.
    pub fn crossing_vector(&self, cluster: &[usize], delta: usize) -> Result<Vec<i64>> {
        cluster.iter().map(|&t| self.crossing_number(t, delta)).collect()
    }

    /// Finds a bijection `χ` from diagonal objects to cluster variables under
    /// which every geometric cluster is an algebraic cluster and every
    /// crossing vector equals the matching d-vector.
    pub fn match_with_algebra(&self, algebra: &ClusterAlgebra) -> Result<Option<GeometricMatching>> {
        let clusters = self.enumerate_geometric_clusters();
        let k = self.diagonals.len();
        let graph = algebra.graph();
        if clusters.len() != graph.num_seeds() || k != graph.num_variables() {
            return Ok(None);
        }
        let n = self.rank;
        // d-vectors with respect to every algebraic seed, by node.
        let mut by_node: Vec<(Vec<usize>, Vec<DVector>)> = Vec::with_capacity(graph.num_seeds());
        for node in 0..graph.num_seeds() {
            let re = graph.reseed_at(node)?;
            let dvecs = (0..k).map(|y| re.d_vector(y)).collect();
            by_node.push((re.slots().to_vec(), dvecs));
        }
        let t0 = &clusters[0];
        let base: Vec<Vec<i64>> = (0..k).map(|d| self.crossing_vector(t0, d)).try_collect()?;
        for (slots0, dvecs0) in &by_node {
            for perm in (0..n).permutations(n) {
                // slot `s` of T0 sits at slot `perm[s]` of the algebraic seed
                let lookup: HashMap<Vec<i64>, usize> = dvecs0
                    .iter()
                    .enumerate()
                    .map(|(y, d)| ((0..n).map(|s| d[perm[s]]).collect(), y))
                    .collect();
                let chi: Option<Vec<usize>> = base.iter().map(|cv| lookup.get(cv).copied()).collect();
                let Some(chi) = chi else { continue };
                if chi.iter().unique().count() != k {
                    continue;
                }
                if t0.iter().enumerate().any(|(s, &t)| chi[t] != slots0[perm[s]]) {
                    continue;
                }
                if self.check_matching(&clusters, &chi, algebra, &by_node)? {
                    return Ok(Some(GeometricMatching { clusters, chi }));
                }
            }
        }
        Ok(None)
    }

    fn check_matching(
        &self,
        clusters: &[GeometricCluster],
        chi: &[usize],
        algebra: &ClusterAlgebra,
        by_node: &[(Vec<usize>, Vec<DVector>)],
    ) -> Result<bool> {
        for t in clusters {
            let ids: Vec<usize> = t.iter().map(|&d| chi[d]).collect();
            let Some(node) = algebra.graph().node_of(&ids) else { return Ok(false) };
            let (slots, dvecs) = &by_node[node];
            for delta in 0..self.diagonals.len() {
                let cv = self.crossing_vector(t, delta)?;
                for (s, &theta) in t.iter().enumerate() {
                    let slot = slots.iter().position(|&x| x == chi[theta]).expect("cluster member");
                    if dvecs[chi[delta]][slot] != cv[s] {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

/// A bijection between diagonal objects and cluster variables.
#[derive(Debug, Clone)]
pub struct GeometricMatching {
    clusters: Vec<GeometricCluster>,
    chi: Vec<usize>,
}

impl GeometricMatching {
    pub fn clusters(&self) -> &[GeometricCluster] {
        &self.clusters
    }

    /// `χ(δ)` as a variable id.
    pub fn chi(&self, delta: usize) -> usize {
        self.chi[delta]
    }
}

/// Strict interleaving of the endpoints of two chords.
fn cross((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    let (a, b) = (a.min(b), a.max(b));
    let inside = |x: usize| a < x && x < b;
    let shared = a == c || a == d || b == c || b == d;
    !shared && inside(c) != inside(d)
}

fn extend_cliques(
    k: usize,
    compatible: &dyn Fn(usize, usize) -> bool,
    start: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let mut extended = false;
    for x in start..k {
        if current.iter().all(|&y| compatible(x, y)) {
            extended = true;
            current.push(x);
            extend_cliques(k, compatible, x + 1, current, out);
            current.pop();
        }
    }
    // maximal only if nothing (earlier or later) can be added
    if !extended && (0..k).all(|x| current.contains(&x) || current.iter().any(|&y| !compatible(x, y))) {
        out.push(current.clone());
    }
}
