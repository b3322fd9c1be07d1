//! c-clusters as facets of the subword complex of `Q_c`.
//!
//! A set `I` of `n` positions in `Q_c` is a c-cluster iff the letters of
//! `Q_c` outside `I` spell a reduced word for w∘. Each cluster carries a root
//! function `r(I, j)`, which drives flips and yields the compatibility
//! coefficients `{i ∥_c j}` by exact linear algebra. Positions are 0-based.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;

use crate::coxeter::{Coords, CoxeterWord, GeneratorWord, GroupElement, RootSystem};
use crate::error::{invariant, Error, Result};
use crate::linalg::{determinant, RationalInverse};

/// A sorted set of positions of `Q_c` that forms a c-cluster.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClusterPositions(Vec<usize>);

impl ClusterPositions {
    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    /// Slot of position `i` in the sorted position list.
    pub fn slot(&self, i: usize) -> Option<usize> {
        self.0.binary_search(&i).ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|p| p + 1).collect()
    }
}

impl fmt::Display for ClusterPositions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().map(|p| p + 1).join(","))
    }
}

/// Values `r(I, j)` of the root function of a cluster, for every position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootFunctionTable {
    cluster: ClusterPositions,
    values: Vec<Coords>,
}

impl RootFunctionTable {
    pub fn cluster(&self) -> &ClusterPositions {
        &self.cluster
    }

    pub fn get(&self, j: usize) -> &Coords {
        &self.values[j]
    }

    pub fn values(&self) -> &[Coords] {
        &self.values
    }

    /// The root configuration `R(I)`, in position order.
    pub fn configuration(&self) -> Vec<Coords> {
        self.cluster.0.iter().map(|&i| self.values[i].clone()).collect()
    }
}

/// The subword complex of `Q_c` for w∘, with its rotation `τ_c`.
#[derive(Debug, Clone)]
pub struct SubwordComplex {
    rs: Arc<RootSystem>,
    word: CoxeterWord,
    rotation: Vec<usize>,
    rotation_inv: Vec<usize>,
}

impl SubwordComplex {
    pub fn new(rs: Arc<RootSystem>, c: &GeneratorWord) -> Result<Self> {
        let word = CoxeterWord::new(&rs, c)?;
        let q = word.letters();
        let m = q.len();
        let mut rotation = vec![0; m];
        for i in 0..m {
            let s = q[i];
            rotation[i] = match (i + 1..m).find(|&k| q[k] == s) {
                Some(k) => k,
                None => {
                    let t = rs.eta(s);
                    match q.iter().position(|&x| x == t) {
                        Some(k) => k,
                        None => return invariant("η(s) does not occur in Q_c"),
                    }
                }
            };
        }
        let mut rotation_inv = vec![usize::MAX; m];
        for (i, &k) in rotation.iter().enumerate() {
            if rotation_inv[k] != usize::MAX {
                return invariant("rotation on positions is not injective");
            }
            rotation_inv[k] = i;
        }
        Ok(SubwordComplex { rs, word, rotation, rotation_inv })
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn word(&self) -> &CoxeterWord {
        &self.word
    }

    pub fn c(&self) -> &GeneratorWord {
        self.word.c()
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// `m = n + N`, the length of `Q_c`.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn letter(&self, j: usize) -> usize {
        self.word.letters()[j]
    }

    fn check_shape(&self, positions: &[usize]) -> Result<()> {
        let n = self.rank();
        let m = self.len();
        if positions.len() != n {
            return Err(Error::InvalidPositions(format!(
                "expected {n} positions, got {}",
                positions.len()
            )));
        }
        if let Some(p) = positions.iter().find(|&&p| p >= m) {
            return Err(Error::InvalidPositions(format!("position {} is outside [1, {m}]", p + 1)));
        }
        if positions.iter().collect::<HashSet<_>>().len() != n {
            return Err(Error::InvalidPositions("repeated position".into()));
        }
        Ok(())
    }

    /// Whether the complement of `positions` is a reduced word for w∘.
    pub fn is_c_cluster(&self, positions: &[usize]) -> Result<bool> {
        self.check_shape(positions)?;
        let inside: HashSet<usize> = positions.iter().copied().collect();
        let mut v = self.rs.identity();
        for (j, &s) in self.word.letters().iter().enumerate() {
            if inside.contains(&j) {
                continue;
            }
            if !self.rs.is_positive(&v.apply(&self.rs.simple_root(s))) {
                return Ok(false);
            }
            v = v.compose(self.rs.generator(s));
        }
        // m − n letters, all length-increasing: length N, hence w∘.
        Ok(true)
    }

    /// Validates and wraps a position set.
    pub fn cluster(&self, mut positions: Vec<usize>) -> Result<ClusterPositions> {
        positions.sort_unstable();
        if self.is_c_cluster(&positions)? {
            Ok(ClusterPositions(positions))
        } else {
            Err(Error::NotACluster(positions))
        }
    }

    /// `I_c`: the first `n` positions.
    pub fn initial_cluster(&self) -> ClusterPositions {
        ClusterPositions((0..self.rank()).collect())
    }

    /// Some c-cluster containing position `i`: the complement of the greedy
    /// (Demazure) reduced subword of `Q_c` with position `i` deleted.
    pub fn cluster_containing(&self, i: usize) -> ClusterPositions {
        let big_n = self.rs.num_positive();
        let mut v = self.rs.identity();
        let mut used = 0;
        let mut positions = Vec::with_capacity(self.rank());
        for (j, &s) in self.word.letters().iter().enumerate() {
            if j != i
                && used < big_n
                && self.rs.is_positive(&v.apply(&self.rs.simple_root(s)))
            {
                v = v.compose(self.rs.generator(s));
                used += 1;
            } else {
                positions.push(j);
            }
        }
        debug_assert_eq!(positions.len(), self.rank());
        ClusterPositions(positions)
    }

    /// `r(I, j) = σ_{[j−1]∖I}(α_{q_j})`.
    pub fn root_function(&self, cluster: &ClusterPositions, j: usize) -> Coords {
        let mut v = self.rs.identity();
        for k in 0..j {
            if !cluster.contains(k) {
                v = v.compose(self.rs.generator(self.letter(k)));
            }
        }
        v.apply(&self.rs.simple_root(self.letter(j)))
    }

    pub fn root_function_table(&self, cluster: &ClusterPositions) -> RootFunctionTable {
        let mut v = self.rs.identity();
        let mut values = Vec::with_capacity(self.len());
        for (j, &s) in self.word.letters().iter().enumerate() {
            values.push(v.apply(&self.rs.simple_root(s)));
            if !cluster.contains(j) {
                v = v.compose(self.rs.generator(s));
            }
        }
        RootFunctionTable { cluster: cluster.clone(), values }
    }

    /// Exchanges `i ∈ I` with the unique `j ∉ I` having `r(I, j) = ±r(I, i)`.
    pub fn flip(&self, cluster: &ClusterPositions, i: usize) -> Result<(ClusterPositions, usize)> {
        let table = self.root_function_table(cluster);
        self.flip_with(&table, i)
    }

    fn flip_with(&self, table: &RootFunctionTable, i: usize) -> Result<(ClusterPositions, usize)> {
        let cluster = &table.cluster;
        if !cluster.contains(i) {
            return Err(Error::InvalidPositions(format!("position {} is not in {cluster}", i + 1)));
        }
        let target = &table.values[i];
        let neg: Coords = target.iter().map(|x| -x).collect();
        let mut hits = (0..self.len())
            .filter(|j| !cluster.contains(*j))
            .filter(|&j| table.values[j] == *target || table.values[j] == neg);
        let j = match (hits.next(), hits.next()) {
            (Some(j), None) => j,
            _ => return invariant(format!("no unique flip partner for {} in {cluster}", i + 1)),
        };
        let mut positions: Vec<usize> = cluster.0.iter().copied().filter(|&p| p != i).collect();
        positions.push(j);
        positions.sort_unstable();
        Ok((ClusterPositions(positions), j))
    }

    /// Root function of the flipped cluster, obtained from the old table by
    /// reflecting the values strictly after `min(i, j)` up to `max(i, j)` in
    /// the hyperplane orthogonal to `r(I, i)`.
    pub fn update_root_function(
        &self,
        table: &RootFunctionTable,
        i: usize,
        j: usize,
    ) -> Result<RootFunctionTable> {
        let (flipped, partner) = self.flip_with(table, i)?;
        if partner != j {
            return Err(Error::InvalidPositions(format!(
                "{} is not the flip partner of {} (expected {})",
                j + 1,
                i + 1,
                partner + 1
            )));
        }
        let axis = table.values[i].clone();
        let (lo, hi) = (i.min(j), i.max(j));
        let values = table
            .values
            .iter()
            .enumerate()
            .map(|(k, r)| {
                if lo < k && k <= hi {
                    self.rs.reflect_along(&axis, r)
                } else {
                    r.clone()
                }
            })
            .collect();
        Ok(RootFunctionTable { cluster: flipped, values })
    }

    /// `{i ∥_c j}` computed in the given cluster, which must contain `i`.
    pub fn compat_coeff_in(&self, cluster: &ClusterPositions, i: usize, j: usize) -> Result<i64> {
        let slot = cluster.slot(i).ok_or_else(|| {
            Error::InvalidPositions(format!("position {} is not in {cluster}", i + 1))
        })?;
        let table = self.root_function_table(cluster);
        let basis = table.configuration();
        let inverse = RationalInverse::from_columns(&basis)
            .ok_or_else(|| Error::Invariant(format!("R({cluster}) is not a basis")))?;
        let rho = inverse
            .solve_integral(&table.values[j])
            .ok_or_else(|| Error::Invariant(format!("non-integral decomposition in {cluster}")))?;
        Ok(if j > i { rho[slot] } else { -rho[slot] })
    }

    /// `{i ∥_c j}` for every `i` in the cluster (rows, in cluster order) and
    /// every position `j`, from a single inversion of `R(I)`.
    pub fn compat_coeffs_in(&self, cluster: &ClusterPositions) -> Result<Vec<Vec<i64>>> {
        let table = self.root_function_table(cluster);
        let inverse = RationalInverse::from_columns(&table.configuration())
            .ok_or_else(|| Error::Invariant(format!("R({cluster}) is not a basis")))?;
        let mut rows = vec![vec![0i64; self.len()]; cluster.len()];
        for (j, value) in table.values.iter().enumerate() {
            let rho = inverse
                .solve_integral(value)
                .ok_or_else(|| Error::Invariant(format!("non-integral decomposition in {cluster}")))?;
            for (slot, &i) in cluster.positions().iter().enumerate() {
                rows[slot][j] = if j > i { rho[slot] } else { -rho[slot] };
            }
        }
        Ok(rows)
    }

    /// `{i ∥_c j}`.
    pub fn compat_coeff(&self, i: usize, j: usize) -> Result<i64> {
        self.compat_coeff_in(&self.cluster_containing(i), i, j)
    }

    /// All coefficients `{i ∥_c j}`, one cluster and one inversion per `i`.
    pub fn compat_table(&self) -> Result<CompatTable> {
        let m = self.len();
        let mut values = vec![vec![0i64; m]; m];
        for (i, row) in values.iter_mut().enumerate() {
            let cluster = self.cluster_containing(i);
            let slot = cluster.slot(i).expect("cluster_containing keeps i");
            let table = self.root_function_table(&cluster);
            let inverse = RationalInverse::from_columns(&table.configuration())
                .ok_or_else(|| Error::Invariant(format!("R({cluster}) is not a basis")))?;
            for (j, out) in row.iter_mut().enumerate() {
                let rho = inverse.solve_integral(&table.values[j]).ok_or_else(|| {
                    Error::Invariant(format!("non-integral decomposition in {cluster}"))
                })?;
                *out = if j > i { rho[slot] } else { -rho[slot] };
            }
        }
        Ok(CompatTable { values })
    }

    /// `τ_c(i)`: the next occurrence of the letter `q_i`, or the first
    /// occurrence of `η(q_i)`.
    pub fn rotate_position(&self, i: usize) -> usize {
        self.rotation[i]
    }

    pub fn rotate_position_inv(&self, i: usize) -> usize {
        self.rotation_inv[i]
    }

    pub fn rotation(&self) -> &[usize] {
        &self.rotation
    }

    pub fn rotate_positions(&self, positions: &[usize]) -> Vec<usize> {
        positions.iter().map(|&p| self.rotation[p]).sorted().collect()
    }

    fn commute(&self, s: usize, t: usize) -> bool {
        s != t && !self.rs.spec().adjacent(s, t)
    }

    /// Jumps the first letter of `c`: relates `Q_c` to `Q_{c'}` for
    /// `c' = (c_2, ..., c_n, c_1)`.
    pub fn jump(&self) -> Result<Jump> {
        let m = self.len();
        let q = self.word.letters();
        let mut jumped: Vec<usize> = q[1..].to_vec();
        jumped.push(self.rs.eta(q[0]));

        let mut c_next = self.c().letters()[1..].to_vec();
        c_next.push(self.c().letters()[0]);
        let target = SubwordComplex::new(self.rs.clone(), &GeneratorWord::new(c_next))?;
        let q_next = target.word.letters();

        // Commutation classes of words are determined by the projections on
        // every pair of non-commuting letters.
        let n = self.rank();
        for s in 0..n {
            for t in s..n {
                if self.commute(s, t) {
                    continue;
                }
                let proj = |w: &[usize]| -> Vec<usize> {
                    w.iter().copied().filter(|&x| x == s || x == t).collect()
                };
                if proj(&jumped) != proj(q_next) {
                    return invariant(format!(
                        "jumped word of Q_{} is not commutation-equivalent to Q_{}",
                        self.c(),
                        target.c()
                    ));
                }
            }
        }

        // k-th occurrence of a letter goes to its k-th occurrence.
        let mut occurrences: HashMap<usize, Vec<usize>> = HashMap::new();
        for (p, &s) in q_next.iter().enumerate() {
            occurrences.entry(s).or_default().push(p);
        }
        let mut seen: HashMap<usize, usize> = HashMap::new();
        let mut via_jumped = vec![0; m];
        for (p, &s) in jumped.iter().enumerate() {
            let k = seen.entry(s).or_insert(0);
            via_jumped[p] = occurrences[&s][*k];
            *k += 1;
        }
        let sigma = (0..m)
            .map(|p| if p == 0 { via_jumped[m - 1] } else { via_jumped[p - 1] })
            .collect();
        Ok(Jump { target, sigma })
    }

    /// All c-clusters, by breadth-first flips from `I_c`; ordered by BFS
    /// layer, lexicographically within a layer.
    pub fn enumerate_clusters(&self) -> Result<Vec<ClusterPositions>> {
        let start = self.initial_cluster();
        let mut seen: HashSet<ClusterPositions> = HashSet::from([start.clone()]);
        let mut out = vec![start.clone()];
        let mut layer = vec![start];
        while !layer.is_empty() {
            let mut next = BTreeSet::new();
            for cluster in &layer {
                let table = self.root_function_table(cluster);
                for &i in cluster.positions() {
                    let (flipped, _) = self.flip_with(&table, i)?;
                    if seen.insert(flipped.clone()) {
                        next.insert(flipped);
                    }
                }
            }
            layer = next.into_iter().collect();
            out.extend(layer.iter().cloned());
        }
        Ok(out)
    }

    /// `compatible[i][j]` iff some cluster contains both `i` and `j`.
    pub fn compatibility_relation(&self, clusters: &[ClusterPositions]) -> Vec<Vec<bool>> {
        let m = self.len();
        let mut rel = vec![vec![false; m]; m];
        for cluster in clusters {
            for &i in cluster.positions() {
                for &j in cluster.positions() {
                    rel[i][j] = true;
                }
            }
        }
        rel
    }

    /// Determinant of the root configuration of a cluster.
    pub fn configuration_determinant(&self, cluster: &ClusterPositions) -> num_bigint::BigInt {
        let basis = self.root_function_table(cluster).configuration();
        determinant(&basis)
    }

    /// Product of the letters at the given positions, in order.
    pub fn product(&self, positions: impl IntoIterator<Item = usize>) -> GroupElement {
        positions
            .into_iter()
            .fold(self.rs.identity(), |acc, p| acc.compose(self.rs.generator(self.letter(p))))
    }
}

/// The matrix of coefficients `{i ∥_c j}` indexed by positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatTable {
    values: Vec<Vec<i64>>,
}

impl CompatTable {
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.values[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Result of jumping the first letter of `c`.
#[derive(Debug, Clone)]
pub struct Jump {
    target: SubwordComplex,
    sigma: Vec<usize>,
}

impl Jump {
    /// The complex of `Q_{c'}`.
    pub fn target(&self) -> &SubwordComplex {
        &self.target
    }

    /// Position map from `Q_c` to `Q_{c'}`.
    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn map_positions(&self, positions: &[usize]) -> Vec<usize> {
        positions.iter().map(|&p| self.sigma[p]).sorted().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::Family;

    fn complex(f: Family, n: usize, c: &[usize]) -> SubwordComplex {
        let rs = Arc::new(RootSystem::of_type(f, n).unwrap());
        SubwordComplex::new(rs, &GeneratorWord::new(c.to_vec())).unwrap()
    }

    fn a2() -> SubwordComplex {
        complex(Family::A, 2, &[0, 1])
    }

    #[test]
    fn cluster_membership() {
        let sc = a2();
        assert!(sc.is_c_cluster(&[0, 1]).unwrap());
        assert!(!sc.is_c_cluster(&[0, 2]).unwrap());
        assert!(sc.is_c_cluster(&[0]).is_err());
        assert!(sc.is_c_cluster(&[0, 7]).is_err());
        assert!(sc.is_c_cluster(&[1, 1]).is_err());
        let a1 = complex(Family::A, 1, &[0]);
        assert!(a1.is_c_cluster(&[0]).unwrap());
        assert!(a1.is_c_cluster(&[1]).unwrap());
    }

    #[test]
    fn initial_clusters() {
        assert_eq!(a2().initial_cluster().positions(), &[0, 1]);
        assert_eq!(complex(Family::A, 3, &[0, 1, 2]).initial_cluster().positions(), &[0, 1, 2]);
        assert_eq!(complex(Family::G, 2, &[0, 1]).initial_cluster().positions(), &[0, 1]);
    }

    #[test]
    fn root_function_values() {
        let sc = a2();
        let ic = sc.initial_cluster();
        assert_eq!(sc.root_function(&ic, 3), vec![1, 1]);
        assert_eq!(sc.root_function(&ic, 4), vec![0, 1]);
        assert_eq!(sc.root_function(&ic, 0), vec![1, 0]);
        let table = sc.root_function_table(&ic);
        for j in 0..sc.len() {
            assert_eq!(table.get(j), &sc.root_function(&ic, j));
        }
    }

    #[test]
    fn flips_in_a2() {
        let sc = a2();
        let ic = sc.initial_cluster();
        let (j1, p1) = sc.flip(&ic, 0).unwrap();
        assert_eq!((j1.positions(), p1), (&[1, 2][..], 2));
        let (j2, p2) = sc.flip(&ic, 1).unwrap();
        assert_eq!((j2.positions(), p2), (&[0, 4][..], 4));
        let (back, q) = sc.flip(&j2, 4).unwrap();
        assert_eq!((back, q), (ic.clone(), 1));
        assert!(sc.flip(&ic, 3).is_err());

        let a1 = complex(Family::A, 1, &[0]);
        let (j, p) = a1.flip(&a1.initial_cluster(), 0).unwrap();
        assert_eq!((j.positions(), p), (&[1][..], 1));
    }

    #[test]
    fn incremental_update_outside_interval_is_identity() {
        let sc = complex(Family::A, 3, &[0, 1, 2]);
        let ic = sc.initial_cluster();
        let table = sc.root_function_table(&ic);
        let (flipped, j) = sc.flip(&ic, 1).unwrap();
        let updated = sc.update_root_function(&table, 1, j).unwrap();
        for k in (0..sc.len()).filter(|&k| k <= 1 || k > j) {
            assert_eq!(updated.get(k), table.get(k));
        }
        assert_eq!(updated, sc.root_function_table(&flipped));
        let neg: Coords = table.get(1).iter().map(|x| -x).collect();
        assert!(updated.get(j) == table.get(1) || *updated.get(j) == neg);
    }

    #[test]
    fn a2_coefficients() {
        let sc = a2();
        assert_eq!(sc.compat_coeff(0, 3).unwrap(), 1);
        assert_eq!(sc.compat_coeff(1, 3).unwrap(), 1);
        assert_eq!(sc.compat_coeff(0, 1).unwrap(), 0);
        for i in 0..sc.len() {
            assert_eq!(sc.compat_coeff(i, i).unwrap(), -1);
        }
        let table = sc.compat_table().unwrap();
        for i in 0..sc.len() {
            for j in 0..sc.len() {
                assert_eq!(table.get(i, j), sc.compat_coeff(i, j).unwrap());
            }
        }
    }

    #[test]
    fn rotation_tables() {
        assert_eq!(a2().rotation(), &[2, 3, 4, 0, 1]);
        assert_eq!(complex(Family::A, 1, &[0]).rotation(), &[1, 0]);
        let sc = complex(Family::E, 6, &[0, 1, 2, 3, 4, 5]);
        let mut perm = sc.rotation().to_vec();
        perm.sort_unstable();
        assert_eq!(perm, (0..sc.len()).collect::<Vec<_>>());
    }

    #[test]
    fn jump_in_a2() {
        let sc = a2();
        let jump = sc.jump().unwrap();
        assert_eq!(jump.target().c().letters(), &[1, 0]);
        assert_eq!(jump.target().word().letters(), &[1, 0, 1, 0, 1]);
        let image = jump.map_positions(&[0, 1]);
        assert!(jump.target().is_c_cluster(&image).unwrap());
    }

    #[test]
    fn cluster_counts() {
        assert_eq!(a2().enumerate_clusters().unwrap().len(), 5);
        let a1 = complex(Family::A, 1, &[0]).enumerate_clusters().unwrap();
        assert_eq!(a1.iter().map(|c| c.positions().to_vec()).collect::<Vec<_>>(), vec![vec![0], vec![1]]);
        assert_eq!(complex(Family::B, 2, &[0, 1]).enumerate_clusters().unwrap().len(), 6);
        assert_eq!(complex(Family::A, 3, &[1, 0, 2]).enumerate_clusters().unwrap().len(), 14);
    }

    #[test]
    fn cluster_containing_is_a_cluster() {
        let sc = complex(Family::D, 4, &[3, 1, 0, 2]);
        for i in 0..sc.len() {
            let cl = sc.cluster_containing(i);
            assert!(cl.contains(i));
            assert!(sc.is_c_cluster(cl.positions()).unwrap());
        }
    }
}
