//! Symbolic cluster dynamics: exchange matrices, seeds of Laurent
//! polynomials, mutation by exact division, the exchange graph, and
//! denominator vectors with respect to any seed.
//!
//! Every enumerated seed remembers the mutation that produced it from its
//! BFS parent. Re-expressing the whole algebra in another seed's variables
//! replays that spanning tree from a different starting cluster, so the
//! identity of a variable across bases comes from the tree, never from
//! polynomial substitution.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;

use crate::coxeter::{Coords, RootSystem};
use crate::error::{invariant, Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::roots::RootModel;
use crate::subword::SubwordComplex;

/// Denominator vector of a cluster variable in some seed.
pub type DVector = Vec<i64>;

/// A skew-symmetrizable integer matrix `b`; `b[i][k] > 0` reads as an arrow
/// `i → k` (weighted) of the associated quiver.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExchangeMatrix {
    b: Vec<Vec<i64>>,
}

impl ExchangeMatrix {
    pub fn new(b: Vec<Vec<i64>>) -> Self {
        ExchangeMatrix { b }
    }

    /// The Coxeter graph oriented by the order of appearance in `c`:
    /// `b_uv = −a_uv` when `u` precedes `v`, `+a_uv` otherwise.
    pub fn from_coxeter(rs: &RootSystem, c: &[usize]) -> Self {
        let n = rs.rank();
        let a = rs.spec().cartan();
        let pos: Vec<usize> = (0..n).map(|s| c.iter().position(|&x| x == s).unwrap_or(s)).collect();
        let b = (0..n)
            .map(|u| {
                (0..n)
                    .map(|v| match () {
                        _ if u == v => 0,
                        _ if pos[u] < pos[v] => -a[u][v],
                        _ => a[u][v],
                    })
                    .collect()
            })
            .collect();
        ExchangeMatrix { b }
    }

    pub fn rank(&self) -> usize {
        self.b.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.b[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.b
    }

    /// `b'_ij = −b_ij` if `k ∈ {i, j}`, else
    /// `b_ij + sign(b_ik) · max(0, b_ik b_kj)`.
    pub fn mutate(&self, k: usize) -> Self {
        let n = self.rank();
        let b = &self.b;
        let out = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == k || j == k {
                            -b[i][j]
                        } else {
                            b[i][j] + b[i][k].signum() * (b[i][k] * b[k][j]).max(0)
                        }
                    })
                    .collect()
            })
            .collect();
        ExchangeMatrix { b: out }
    }

    /// `D·b` is skew-symmetric for the given positive diagonal `D`.
    pub fn is_skew_symmetrizable_by(&self, d: &[i64]) -> bool {
        let n = self.rank();
        d.len() == n
            && d.iter().all(|&x| x > 0)
            && (0..n).all(|i| (0..n).all(|j| d[i] * self.b[i][j] == -d[j] * self.b[j][i]))
    }

    /// No oriented cycle in the quiver.
    pub fn is_acyclic(&self) -> bool {
        let n = self.rank();
        let mut indegree: Vec<usize> =
            (0..n).map(|v| (0..n).filter(|&u| self.b[u][v] > 0).count()).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut removed = 0;
        while let Some(u) = queue.pop_front() {
            removed += 1;
            for v in 0..n {
                if self.b[u][v] > 0 {
                    indegree[v] -= 1;
                    if indegree[v] == 0 {
                        queue.push_back(v);
                    }
                }
            }
        }
        removed == n
    }
}

/// A labelled cluster of Laurent polynomials (in the variables of some
/// reference seed) together with its exchange matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seed {
    variables: Vec<LaurentPolynomial>,
    exchange: ExchangeMatrix,
}

impl Seed {
    /// Fresh indeterminates `x_1, ..., x_n` with the given exchange matrix.
    pub fn initial(exchange: ExchangeMatrix) -> Self {
        let n = exchange.rank();
        let variables = (0..n).map(|i| LaurentPolynomial::var(n, i)).collect();
        Seed { variables, exchange }
    }

    pub fn from_parts(variables: Vec<LaurentPolynomial>, exchange: ExchangeMatrix) -> Self {
        Seed { variables, exchange }
    }

    pub fn variables(&self) -> &[LaurentPolynomial] {
        &self.variables
    }

    pub fn exchange(&self) -> &ExchangeMatrix {
        &self.exchange
    }

    pub fn rank(&self) -> usize {
        self.variables.len()
    }

    /// The exchange binomial `∏_{b_ik>0} x_i^{b_ik} + ∏_{b_ik<0} x_i^{−b_ik}`.
    fn exchange_binomial(&self, k: usize) -> LaurentPolynomial {
        let nvars = self.variables[k].nvars();
        let mut plus = LaurentPolynomial::one(nvars);
        let mut minus = LaurentPolynomial::one(nvars);
        for (i, x) in self.variables.iter().enumerate() {
            let e = self.exchange.entry(i, k);
            if e > 0 {
                plus = &plus * &x.pow(e as u32);
            } else if e < 0 {
                minus = &minus * &x.pow((-e) as u32);
            }
        }
        &plus + &minus
    }

    /// Mutation at `k`; the new variable is obtained by exact division.
    pub fn mutate(&self, k: usize) -> Result<Seed> {
        let n = self.rank();
        if k >= n {
            return Err(Error::BadVertex { index: k, rank: n });
        }
        let binomial = self.exchange_binomial(k);
        let fresh = binomial
            .exact_div(&self.variables[k])
            .ok_or_else(|| Error::Invariant(format!("inexact exchange division at vertex {}", k + 1)))?;
        let mut variables = self.variables.clone();
        variables[k] = fresh;
        Ok(Seed { variables, exchange: self.exchange.mutate(k) })
    }

    pub fn mutate_path(&self, path: &[usize]) -> Result<Seed> {
        path.iter().try_fold(self.clone(), |s, &k| s.mutate(k))
    }
}

/// The seed `X_c` whose quiver is the Coxeter graph oriented by `c`.
pub fn seed_from_coxeter(sc: &SubwordComplex) -> Seed {
    Seed::initial(ExchangeMatrix::from_coxeter(sc.root_system(), sc.c().letters()))
}

/// `d_i = −(minimum exponent of x_i over the terms of y)`.
pub fn d_vector(y: &LaurentPolynomial) -> DVector {
    y.min_exponents()
        .unwrap_or_else(|| vec![0; y.nvars()])
        .into_iter()
        .map(|e| -i64::from(e))
        .collect()
}

/// One node of the BFS spanning tree of the exchange graph.
#[derive(Debug, Clone)]
pub struct SeedNode {
    /// Variable ids, by vertex.
    pub vars: Vec<usize>,
    pub exchange: ExchangeMatrix,
    /// `(parent node, mutated vertex)`; `None` for the root.
    pub parent: Option<(usize, usize)>,
}

/// All seeds (unlabelled) and cluster variables reachable from a root seed.
#[derive(Debug, Clone)]
pub struct ExchangeGraph {
    rank: usize,
    variables: Vec<LaurentPolynomial>,
    var_lookup: HashMap<LaurentPolynomial, usize>,
    nodes: Vec<SeedNode>,
    node_lookup: HashMap<Vec<usize>, usize>,
    /// First node containing each variable, and its vertex there.
    origin: Vec<(usize, usize)>,
}

impl ExchangeGraph {
    /// Breadth-first enumeration from `root`; fails once more than
    /// `max_seeds` seeds are found.
    pub fn enumerate(root: &Seed, max_seeds: usize) -> Result<Self> {
        let n = root.rank();
        let mut graph = ExchangeGraph {
            rank: n,
            variables: Vec::new(),
            var_lookup: HashMap::new(),
            nodes: Vec::new(),
            node_lookup: HashMap::new(),
            origin: Vec::new(),
        };
        let root_ids: Vec<usize> = root.variables.iter().map(|v| graph.intern(v.clone(), 0, 0)).collect();
        for (slot, &id) in root_ids.iter().enumerate() {
            graph.origin[id] = (0, slot);
        }
        graph.node_lookup.insert(sorted(&root_ids), 0);
        graph.nodes.push(SeedNode { vars: root_ids, exchange: root.exchange.clone(), parent: None });

        let mut seeds = vec![root.clone()];
        let mut head = 0;
        while head < graph.nodes.len() {
            let seed = seeds[head].clone();
            for k in 0..n {
                let next = seed.mutate(k)?;
                let node_index = graph.nodes.len();
                let mut ids = graph.nodes[head].vars.clone();
                ids[k] = graph.intern(next.variables[k].clone(), node_index, k);
                let key = sorted(&ids);
                if graph.node_lookup.contains_key(&key) {
                    continue;
                }
                if graph.nodes.len() >= max_seeds {
                    return Err(Error::BudgetExceeded { limit: max_seeds });
                }
                graph.node_lookup.insert(key, node_index);
                graph.nodes.push(SeedNode {
                    vars: ids,
                    exchange: next.exchange.clone(),
                    parent: Some((head, k)),
                });
                seeds.push(next);
            }
            head += 1;
        }
        Ok(graph)
    }

    fn intern(&mut self, poly: LaurentPolynomial, node: usize, slot: usize) -> usize {
        if let Some(&id) = self.var_lookup.get(&poly) {
            return id;
        }
        let id = self.variables.len();
        self.var_lookup.insert(poly.clone(), id);
        self.variables.push(poly);
        self.origin.push((node, slot));
        id
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_seeds(&self) -> usize {
        self.nodes.len()
    }

    pub fn num_variables(&self) -> usize {
        self.variables.len()
    }

    /// Cluster variables in the root seed's variables, by id.
    pub fn variables(&self) -> &[LaurentPolynomial] {
        &self.variables
    }

    pub fn variable_id(&self, poly: &LaurentPolynomial) -> Option<usize> {
        self.var_lookup.get(poly).copied()
    }

    pub fn nodes(&self) -> &[SeedNode] {
        &self.nodes
    }

    /// Node of the unlabelled seed with the given variable ids.
    pub fn node_of(&self, ids: &[usize]) -> Option<usize> {
        self.node_lookup.get(&sorted(ids)).copied()
    }

    /// First node containing variable `id`, and the vertex it sits at.
    pub fn origin(&self, id: usize) -> (usize, usize) {
        self.origin[id]
    }

    /// Mutation path from the root to `node`.
    pub fn path_to(&self, mut node: usize) -> Vec<usize> {
        let mut path = Vec::new();
        while let Some((parent, k)) = self.nodes[node].parent {
            path.push(k);
            node = parent;
        }
        path.reverse();
        path
    }

    /// Re-runs the spanning tree from a different labelled root cluster
    /// (given in any basis) and returns every variable id's image. The root
    /// cluster must carry the root's exchange matrix.
    pub fn replay(&self, root_vars: &[LaurentPolynomial]) -> Result<Vec<LaurentPolynomial>> {
        let mut images: Vec<Option<LaurentPolynomial>> = vec![None; self.variables.len()];
        let mut clusters: Vec<Vec<LaurentPolynomial>> = Vec::with_capacity(self.nodes.len());
        for (idx, node) in self.nodes.iter().enumerate() {
            let cluster = match node.parent {
                None => root_vars.to_vec(),
                Some((parent, k)) => {
                    let seed = Seed::from_parts(clusters[parent].clone(), self.nodes[parent].exchange.clone());
                    seed.mutate(k)?.variables
                }
            };
            for (slot, poly) in cluster.iter().enumerate() {
                let id = node.vars[slot];
                match &images[id] {
                    None => images[id] = Some(poly.clone()),
                    Some(prev) if prev == poly => {}
                    Some(_) => {
                        return invariant(format!(
                            "variable {id} has two different images (node {idx}, vertex {})",
                            slot + 1
                        ))
                    }
                }
            }
            clusters.push(cluster);
        }
        images
            .into_iter()
            .map(|p| p.ok_or_else(|| Error::Invariant("variable not reached in replay".into())))
            .collect()
    }

    /// Labelled seed reached from the root along `path`, as variable ids.
    pub fn follow(&self, path: &[usize]) -> Result<(Vec<usize>, ExchangeMatrix)> {
        let n = self.rank;
        let mut seed = Seed::from_parts(
            self.nodes[0].vars.iter().map(|&id| self.variables[id].clone()).collect(),
            self.nodes[0].exchange.clone(),
        );
        for &k in path {
            if k >= n {
                return Err(Error::BadVertex { index: k, rank: n });
            }
            seed = seed.mutate(k)?;
        }
        let ids = seed
            .variables
            .iter()
            .map(|v| self.variable_id(v).ok_or(Error::UnknownVariable))
            .collect::<Result<Vec<_>>>()?;
        Ok((ids, seed.exchange))
    }

    /// Every cluster variable expressed in the fresh variables of the seed
    /// reached from the root along `path`.
    pub fn reseed(&self, path: &[usize]) -> Result<Reseeded> {
        let (slots, exchange) = self.follow(path)?;
        let target = Seed::initial(exchange.clone());
        // Mutations are involutions on labelled seeds: walk the path back.
        let back: Vec<usize> = path.iter().rev().copied().collect();
        let root = target.mutate_path(&back)?;
        if root.exchange != self.nodes[0].exchange {
            return invariant("reversed path does not return to the root exchange matrix");
        }
        let expressions = self.replay(&root.variables)?;
        Ok(Reseeded { slots, exchange, expressions })
    }

    /// Reseed at a node of the spanning tree.
    pub fn reseed_at(&self, node: usize) -> Result<Reseeded> {
        self.reseed(&self.path_to(node))
    }
}

fn sorted(ids: &[usize]) -> Vec<usize> {
    let mut v = ids.to_vec();
    v.sort_unstable();
    v
}

/// The algebra re-expressed in the variables of another seed.
#[derive(Debug, Clone)]
pub struct Reseeded {
    slots: Vec<usize>,
    exchange: ExchangeMatrix,
    expressions: Vec<LaurentPolynomial>,
}

impl Reseeded {
    /// Variable id at each vertex of the new reference seed.
    pub fn slots(&self) -> &[usize] {
        &self.slots
    }

    pub fn exchange(&self) -> &ExchangeMatrix {
        &self.exchange
    }

    /// Variable `id` as a Laurent polynomial in the new seed.
    pub fn expression(&self, id: usize) -> &LaurentPolynomial {
        &self.expressions[id]
    }

    pub fn d_vector(&self, id: usize) -> DVector {
        d_vector(&self.expressions[id])
    }
}

/// A finite-type cluster algebra with its initial seed `X_c`, the labelling
/// `ψ_c` of its variables by positions of `Q_c`, and the rotation `τ`.
#[derive(Debug, Clone)]
pub struct ClusterAlgebra {
    roots: RootModel,
    graph: ExchangeGraph,
    psi: Vec<usize>,
    psi_inv: Vec<usize>,
    rotation: Vec<usize>,
}

impl ClusterAlgebra {
    /// Enumerates the exchange graph from `X_c`, then labels each variable
    /// by the position whose almost positive root equals its d-vector.
    pub fn new(roots: RootModel, max_seeds: usize) -> Result<Self> {
        let sc = roots.complex();
        let root_seed = seed_from_coxeter(sc);
        let d = root_seed.exchange().clone();
        if !d.is_skew_symmetrizable_by(sc.root_system().spec().symmetrizer()) {
            return invariant("Coxeter exchange matrix is not skew-symmetrizable");
        }
        let graph = ExchangeGraph::enumerate(&root_seed, max_seeds)?;
        let m = sc.len();
        if graph.num_variables() != m {
            return invariant(format!("{} cluster variables, expected m = {m}", graph.num_variables()));
        }

        let by_dvector: HashMap<DVector, usize> = graph
            .variables()
            .iter()
            .enumerate()
            .map(|(id, y)| (d_vector(y), id))
            .collect();
        if by_dvector.len() != m {
            return invariant("two cluster variables share a d-vector with respect to X_c");
        }
        let mut psi = Vec::with_capacity(m);
        for j in 0..m {
            match by_dvector.get(roots.theta(j).coords()) {
                Some(&id) => psi.push(id),
                None => {
                    return invariant(format!(
                        "no cluster variable has d-vector {} (sign convention?)",
                        roots.theta(j)
                    ))
                }
            }
        }
        let mut psi_inv = vec![0; m];
        for (j, &id) in psi.iter().enumerate() {
            psi_inv[id] = j;
        }

        // τ: replay the tree from μ_{c_n}⋯μ_{c_1}(X_c), which has the same
        // exchange matrix as X_c.
        let rotated_root = root_seed.mutate_path(sc.c().letters())?;
        if rotated_root.exchange() != root_seed.exchange() {
            return invariant("source mutations along c do not restore the quiver of X_c");
        }
        let images = graph.replay(rotated_root.variables())?;
        let rotation = images
            .iter()
            .map(|p| graph.variable_id(p).ok_or(Error::UnknownVariable))
            .collect::<Result<Vec<_>>>()?;

        Ok(ClusterAlgebra { roots, graph, psi, psi_inv, rotation })
    }

    pub fn of_type(rs: Arc<RootSystem>, c: &crate::coxeter::GeneratorWord, max_seeds: usize) -> Result<Self> {
        Self::new(RootModel::of_type(rs, c)?, max_seeds)
    }

    pub fn roots(&self) -> &RootModel {
        &self.roots
    }

    pub fn complex(&self) -> &SubwordComplex {
        self.roots.complex()
    }

    pub fn graph(&self) -> &ExchangeGraph {
        &self.graph
    }

    pub fn rank(&self) -> usize {
        self.graph.rank()
    }

    /// Variables in the basis of `X_c`.
    pub fn variable(&self, id: usize) -> &LaurentPolynomial {
        &self.graph.variables()[id]
    }

    /// `ψ_c(j)`: id of the variable at position `j`.
    pub fn psi(&self, j: usize) -> usize {
        self.psi[j]
    }

    pub fn psi_inv(&self, id: usize) -> usize {
        self.psi_inv[id]
    }

    /// `τ` on variable ids.
    pub fn rotate_variable(&self, id: usize) -> usize {
        self.rotation[id]
    }

    /// `τ(y)` computed directly: mutate `X_c` along `c`, then along the
    /// recorded path of `y`, and read the vertex where `y` was produced.
    pub fn rotate_variable_by_path(&self, id: usize) -> Result<usize> {
        let (node, slot) = self.graph.origin(id);
        let mut path = self.complex().c().letters().to_vec();
        path.extend(self.graph.path_to(node));
        let (ids, _) = self.graph.follow(&path)?;
        Ok(ids[slot])
    }

    /// Unlabelled clusters, as sets of variable ids.
    pub fn clusters(&self) -> Vec<Vec<usize>> {
        self.graph.nodes().iter().map(|n| sorted(&n.vars)).collect()
    }

    /// Whether a set of variable ids is a cluster.
    pub fn is_cluster(&self, ids: &[usize]) -> bool {
        self.graph.node_of(ids).is_some()
    }

    /// `d(x, y)`: the `x`-component of `d(X, y)` for the first enumerated
    /// cluster `X` containing `x`.
    pub fn compat_degree_vars(&self, x: usize, y: usize) -> Result<i64> {
        let (node, slot) = self.graph.origin(x);
        let reseeded = self.graph.reseed_at(node)?;
        Ok(reseeded.d_vector(y)[slot])
    }

    /// `d(x, y)` for all variable pairs, reseeding at a greedy cover of the
    /// variables by clusters.
    pub fn compat_degree_table(&self) -> Result<Vec<Vec<i64>>> {
        let m = self.graph.num_variables();
        let mut table: Vec<Option<Vec<i64>>> = vec![None; m];
        for x in 0..m {
            if table[x].is_some() {
                continue;
            }
            let (node, _) = self.graph.origin(x);
            let reseeded = self.graph.reseed_at(node)?;
            let dvecs: Vec<DVector> = (0..m).map(|y| reseeded.d_vector(y)).collect();
            for (slot, &z) in reseeded.slots().iter().enumerate() {
                if table[z].is_none() {
                    table[z] = Some(dvecs.iter().map(|d| d[slot]).collect());
                }
            }
        }
        Ok(table.into_iter().map(|row| row.expect("every variable lies in a cluster")).collect())
    }

    /// `d(ψ(i), ψ(j))` indexed by positions.
    pub fn compat_by_position(&self) -> Result<Vec<Vec<i64>>> {
        let by_var = self.compat_degree_table()?;
        let m = self.psi.len();
        Ok((0..m)
            .map(|i| (0..m).map(|j| by_var[self.psi[i]][self.psi[j]]).collect())
            .collect())
    }

    /// Variable ids of the cluster of positions `positions`.
    pub fn variables_at(&self, positions: &[usize]) -> Vec<usize> {
        positions.iter().map(|&p| self.psi[p]).collect()
    }

    /// Mutation path from `X_c` to the unlabelled seed with these variables.
    pub fn path_to_cluster(&self, ids: &[usize]) -> Option<Vec<usize>> {
        self.graph.node_of(ids).map(|node| self.graph.path_to(node))
    }

    /// d-vectors of every position's variable w.r.t. the seed reached along
    /// `path`, in slot order of that seed.
    pub fn dvectors_at(&self, path: &[usize]) -> Result<(Reseeded, Vec<DVector>)> {
        let reseeded = self.graph.reseed(path)?;
        let dvecs = (0..self.psi.len()).map(|j| reseeded.d_vector(self.psi[j])).collect();
        Ok((reseeded, dvecs))
    }

    /// The multiset of d-vectors `X_c` sees equals `Φ_{≥−1}`.
    pub fn almost_positive_self_check(&self) -> bool {
        let mut got: Vec<Coords> = self.graph.variables().iter().map(d_vector).collect();
        let mut want: Vec<Coords> =
            self.roots.almost_positive_roots().iter().map(|r| r.coords().to_vec()).collect();
        got.sort();
        want.sort();
        got == want
    }

    /// Acyclic or not, per seed node.
    pub fn seed_is_acyclic(&self, node: usize) -> bool {
        self.graph.nodes()[node].exchange.is_acyclic()
    }

    /// `BigInt` coefficient extremes of all variables, for reporting.
    pub fn max_coefficient(&self) -> BigInt {
        self.graph
            .variables()
            .iter()
            .flat_map(|p| p.terms().map(|(_, c)| c.clone()).collect_vec())
            .max()
            .unwrap_or_else(BigInt::one)
    }

    /// Positions whose variables are pairwise in a common cluster with `i`.
    pub fn compatible_positions(&self) -> Vec<HashSet<usize>> {
        let m = self.psi.len();
        let mut out = vec![HashSet::new(); m];
        for node in self.graph.nodes() {
            for &x in &node.vars {
                for &y in &node.vars {
                    out[self.psi_inv[x]].insert(self.psi_inv[y]);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{Family, GeneratorWord};

    fn algebra(f: Family, n: usize, c: &[usize]) -> ClusterAlgebra {
        let rs = Arc::new(RootSystem::of_type(f, n).unwrap());
        ClusterAlgebra::of_type(rs, &GeneratorWord::new(c.to_vec()), 10_000).unwrap()
    }

    fn lp(n: usize, s: &str) -> LaurentPolynomial {
        LaurentPolynomial::parse(n, s).unwrap()
    }

    #[test]
    fn coxeter_exchange_matrices() {
        let a2 = RootSystem::of_type(Family::A, 2).unwrap();
        assert_eq!(ExchangeMatrix::from_coxeter(&a2, &[0, 1]).rows(), &[vec![0, 1], vec![-1, 0]]);
        let a1 = RootSystem::of_type(Family::A, 1).unwrap();
        assert_eq!(ExchangeMatrix::from_coxeter(&a1, &[0]).rows(), &[vec![0]]);
        let b2 = RootSystem::of_type(Family::B, 2).unwrap();
        let m = ExchangeMatrix::from_coxeter(&b2, &[0, 1]);
        let mut mags = [m.entry(0, 1).abs(), m.entry(1, 0).abs()];
        mags.sort();
        assert_eq!(mags, [1, 2]);
        assert!(m.is_skew_symmetrizable_by(b2.spec().symmetrizer()));
    }

    #[test]
    fn a2_mutations() {
        let a2 = RootSystem::of_type(Family::A, 2).unwrap();
        let seed = Seed::initial(ExchangeMatrix::from_coxeter(&a2, &[0, 1]));
        let s1 = seed.mutate(0).unwrap();
        assert_eq!(s1.variables()[0], lp(2, "x1^-1 + x1^-1*x2"));
        assert_eq!(s1.mutate(0).unwrap(), seed);
        let s12 = s1.mutate(1).unwrap();
        assert_eq!(s12.variables()[1], lp(2, "x1^-1*x2^-1 + x1^-1 + x2^-1"));
        assert!(matches!(seed.mutate(2), Err(Error::BadVertex { .. })));
    }

    #[test]
    fn d_vectors_of_laurent_expressions() {
        assert_eq!(d_vector(&LaurentPolynomial::var(2, 0)), vec![-1, 0]);
        assert_eq!(d_vector(&lp(2, "x1^-1*x2^-1 + x1^-1 + x2^-1")), vec![1, 1]);
        assert_eq!(d_vector(&lp(2, "x1^-1 + x1^-1*x2")), vec![1, 0]);
    }

    #[test]
    fn exchange_graph_sizes() {
        let a2 = algebra(Family::A, 2, &[0, 1]);
        assert_eq!((a2.graph().num_variables(), a2.graph().num_seeds()), (5, 5));
        let a1 = algebra(Family::A, 1, &[0]);
        assert_eq!((a1.graph().num_variables(), a1.graph().num_seeds()), (2, 2));
        let a3 = algebra(Family::A, 3, &[0, 1, 2]);
        assert_eq!((a3.graph().num_variables(), a3.graph().num_seeds()), (9, 14));
        let b2 = algebra(Family::B, 2, &[0, 1]);
        assert_eq!((b2.graph().num_variables(), b2.graph().num_seeds()), (6, 6));
        assert!(b2.almost_positive_self_check());
    }

    #[test]
    fn budget_is_enforced() {
        let rs = Arc::new(RootSystem::of_type(Family::A, 3).unwrap());
        let err = ClusterAlgebra::of_type(rs, &GeneratorWord::new(vec![0, 1, 2]), 10).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded { limit: 10 });
    }

    #[test]
    fn psi_labels() {
        let a2 = algebra(Family::A, 2, &[0, 1]);
        assert_eq!(a2.variable(a2.psi(3)), &lp(2, "x1^-1*x2^-1 + x1^-1 + x2^-1"));
        assert_eq!(a2.variable(a2.psi(0)), &LaurentPolynomial::var(2, 0));
        assert_eq!(a2.variable(a2.psi(1)), &LaurentPolynomial::var(2, 1));
        let c = [1, 0, 2];
        let a3 = algebra(Family::A, 3, &c);
        for (i, &s) in c.iter().enumerate() {
            assert_eq!(a3.variable(a3.psi(i)), &LaurentPolynomial::var(3, s));
        }
    }

    #[test]
    fn reseeding() {
        let a2 = algebra(Family::A, 2, &[0, 1]);
        let same = a2.graph().reseed(&[]).unwrap();
        for id in 0..5 {
            assert_eq!(same.expression(id), a2.variable(id));
        }
        let target = a2
            .clusters()
            .into_iter()
            .find(|cl| cl.contains(&a2.psi(3)) && !cl.contains(&a2.psi(1)))
            .unwrap();
        let path = a2.path_to_cluster(&target).unwrap();
        let re = a2.graph().reseed(&path).unwrap();
        let x2 = a2.psi(1);
        let slot_of_new = re.slots().iter().position(|&id| id == a2.psi(3)).unwrap();
        assert!(re.d_vector(x2)[slot_of_new] > 0);
    }

    #[test]
    fn rotation_on_variables_in_a2() {
        let a2 = algebra(Family::A, 2, &[0, 1]);
        let x = |s: &str| a2.graph().variable_id(&lp(2, s)).unwrap();
        let x1 = x("x1");
        let x2 = x("x2");
        let y1 = x("x1^-1 + x1^-1*x2");
        let y2 = x("x1^-1*x2^-1 + x1^-1 + x2^-1");
        let y3 = x("x2^-1 + x1*x2^-1");
        let table = [(x1, y1), (x2, y2), (y1, y3), (y2, x1), (y3, x2)];
        for (a, b) in table {
            assert_eq!(a2.rotate_variable(a), b);
            assert_eq!(a2.rotate_variable_by_path(a).unwrap(), b);
        }
    }

    #[test]
    fn compat_degrees_in_a2() {
        let a2 = algebra(Family::A, 2, &[0, 1]);
        for id in 0..5 {
            assert_eq!(a2.compat_degree_vars(id, id).unwrap(), -1);
        }
        assert_eq!(a2.compat_degree_vars(a2.psi(0), a2.psi(3)).unwrap(), 1);
        let table = a2.compat_degree_table().unwrap();
        for cluster in a2.clusters() {
            for &x in &cluster {
                for &y in &cluster {
                    if x != y {
                        assert_eq!(table[x][y], 0);
                    }
                }
            }
        }
    }

    #[test]
    fn cyclic_quivers_are_detected() {
        let cyc = ExchangeMatrix::new(vec![vec![0, 1, -1], vec![-1, 0, 1], vec![1, -1, 0]]);
        assert!(!cyc.is_acyclic());
        let a3 = RootSystem::of_type(Family::A, 3).unwrap();
        assert!(ExchangeMatrix::from_coxeter(&a3, &[0, 1, 2]).is_acyclic());
        let m = ExchangeMatrix::from_coxeter(&a3, &[0, 1, 2]);
        assert_eq!(m.mutate(1).mutate(1), m);
    }
}
