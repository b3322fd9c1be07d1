//! Almost positive roots `Φ_{≥−1} = Φ⁺ ∪ −Δ`: the labelling `ϑ_c` of the
//! positions of `Q_c`, the rotation `τ_c` written purely in terms of roots,
//! and the c-compatibility degree `(α ∥_c β)`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::coxeter::{Coords, GeneratorWord, RootSystem};
use crate::error::{invariant, Error, Result};
use crate::subword::SubwordComplex;

/// A positive root or a negative simple root, in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AlmostPositiveRoot(Coords);

impl AlmostPositiveRoot {
    pub fn new(rs: &RootSystem, coords: Coords) -> Result<Self> {
        if coords.len() == rs.rank()
            && (rs.positive_index(&coords).is_some() || negative_simple_index(&coords).is_some())
        {
            Ok(AlmostPositiveRoot(coords))
        } else {
            Err(Error::NotAlmostPositive(coords))
        }
    }

    pub fn negative_simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = -1;
        AlmostPositiveRoot(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// `Some(i)` iff this is `−α_i`.
    pub fn negative_simple_index(&self) -> Option<usize> {
        negative_simple_index(&self.0)
    }
}

impl fmt::Display for AlmostPositiveRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &b)| b != 0)
            .map(|(i, &b)| match b {
                1 => format!("α{}", i + 1),
                -1 => format!("-α{}", i + 1),
                _ => format!("{b}α{}", i + 1),
            })
            .join("+");
        f.write_str(&terms.replace("+-", "-"))
    }
}

fn negative_simple_index(v: &[i64]) -> Option<usize> {
    let mut found = None;
    for (i, &x) in v.iter().enumerate() {
        match x {
            0 => {}
            -1 if found.is_none() => found = Some(i),
            _ => return None,
        }
    }
    found
}

/// `ϑ_c`, `τ_c` on roots, and `(· ∥_c ·)` for a fixed Coxeter word `c`.
#[derive(Debug, Clone)]
pub struct RootModel {
    sc: SubwordComplex,
    theta: Vec<AlmostPositiveRoot>,
    theta_inv: HashMap<AlmostPositiveRoot, usize>,
    tau: HashMap<AlmostPositiveRoot, AlmostPositiveRoot>,
    tau_inv: HashMap<AlmostPositiveRoot, AlmostPositiveRoot>,
}

impl RootModel {
    pub fn new(sc: &SubwordComplex) -> Result<Self> {
        let rs = sc.root_system().clone();
        let n = rs.rank();
        let c = sc.c().letters().to_vec();

        let mut theta = Vec::with_capacity(sc.len());
        for &s in &c {
            theta.push(AlmostPositiveRoot::negative_simple(n, s));
        }
        let mut prefix = rs.identity();
        for &w in sc.word().sorting_word().letters() {
            let root = prefix.apply(&rs.simple_root(w));
            theta.push(AlmostPositiveRoot::new(&rs, root)?);
            prefix = prefix.compose(rs.generator(w));
        }
        let theta_inv: HashMap<_, _> = theta.iter().cloned().enumerate().map(|(j, r)| (r, j)).collect();
        if theta_inv.len() != rs.num_positive() + n {
            return invariant("ϑ_c is not injective");
        }

        let (tau, tau_inv) = rotation_on_roots(&rs, &c)?;
        Ok(RootModel { sc: sc.clone(), theta, theta_inv, tau, tau_inv })
    }

    pub fn of_type(rs: Arc<RootSystem>, c: &GeneratorWord) -> Result<Self> {
        Self::new(&SubwordComplex::new(rs, c)?)
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        self.sc.root_system()
    }

    pub fn complex(&self) -> &SubwordComplex {
        &self.sc
    }

    pub fn c(&self) -> &GeneratorWord {
        self.sc.c()
    }

    /// `Φ_{≥−1}` in position order of `Q_c`.
    pub fn almost_positive_roots(&self) -> &[AlmostPositiveRoot] {
        &self.theta
    }

    /// `ϑ_c(j)`.
    pub fn theta(&self, j: usize) -> &AlmostPositiveRoot {
        &self.theta[j]
    }

    pub fn theta_inv(&self, alpha: &AlmostPositiveRoot) -> Result<usize> {
        self.theta_inv
            .get(alpha)
            .copied()
            .ok_or_else(|| Error::NotAlmostPositive(alpha.0.clone()))
    }

    pub fn root(&self, coords: Coords) -> Result<AlmostPositiveRoot> {
        AlmostPositiveRoot::new(self.root_system(), coords)
    }

    pub fn tau_root(&self, alpha: &AlmostPositiveRoot) -> Result<AlmostPositiveRoot> {
        self.tau.get(alpha).cloned().ok_or_else(|| Error::NotAlmostPositive(alpha.0.clone()))
    }

    pub fn tau_root_inv(&self, alpha: &AlmostPositiveRoot) -> Result<AlmostPositiveRoot> {
        self.tau_inv.get(alpha).cloned().ok_or_else(|| Error::NotAlmostPositive(alpha.0.clone()))
    }

    /// Backward τ_c-orbit of `(α, β)` up to the first time α is a negative
    /// simple root `−α_i`; returns `i` and the transported β.
    fn transport(
        &self,
        alpha: &AlmostPositiveRoot,
        beta: &AlmostPositiveRoot,
    ) -> Result<(usize, AlmostPositiveRoot)> {
        let mut a = alpha.clone();
        let mut b = beta.clone();
        for _ in 0..=self.theta.len() {
            if let Some(i) = a.negative_simple_index() {
                return Ok((i, b));
            }
            a = self.tau_root_inv(&a)?;
            b = self.tau_root_inv(&b)?;
        }
        invariant(format!("τ_c-orbit of {alpha} avoids the negative simple roots"))
    }

    /// `(α ∥_c β)`: rotate both backwards until α is some `−α_i`, then read
    /// the `α_i`-coordinate of β.
    pub fn c_compat(&self, alpha: &AlmostPositiveRoot, beta: &AlmostPositiveRoot) -> Result<i64> {
        let (i, b) = self.transport(alpha, beta)?;
        Ok(b.0[i])
    }

    /// Every value reached by continuing the backward orbit through later
    /// negative simple roots; all must agree for the degree to be well defined.
    pub fn c_compat_all_hits(
        &self,
        alpha: &AlmostPositiveRoot,
        beta: &AlmostPositiveRoot,
    ) -> Result<Vec<i64>> {
        let mut a = alpha.clone();
        let mut b = beta.clone();
        let mut hits = Vec::new();
        // a full period of τ_c on Φ_{≥−1} is bounded by |Φ_{≥−1}|·2
        for _ in 0..2 * self.theta.len() {
            if let Some(i) = a.negative_simple_index() {
                hits.push(b.0[i]);
            }
            a = self.tau_root_inv(&a)?;
            b = self.tau_root_inv(&b)?;
        }
        Ok(hits)
    }

    /// `d_c(B, β) = ((β_1 ∥_c β), ..., (β_n ∥_c β))`.
    pub fn dvector_from_roots(
        &self,
        cluster: &[AlmostPositiveRoot],
        beta: &AlmostPositiveRoot,
    ) -> Result<Vec<i64>> {
        let positions: Vec<usize> = cluster.iter().map(|r| self.theta_inv(r)).try_collect()?;
        if !self.sc.is_c_cluster(&positions)? {
            return Err(Error::NotACluster(positions));
        }
        cluster.iter().map(|b| self.c_compat(b, beta)).collect()
    }

    /// Roots of a cluster of positions.
    pub fn roots_of(&self, positions: &[usize]) -> Vec<AlmostPositiveRoot> {
        positions.iter().map(|&p| self.theta[p].clone()).collect()
    }

    /// Coroot of an almost positive root, as an almost positive root of the
    /// dual system.
    pub fn coroot(&self, alpha: &AlmostPositiveRoot) -> AlmostPositiveRoot {
        AlmostPositiveRoot(self.root_system().coroot(&alpha.0))
    }

    /// `(α ∥_c β) = (β^∨ ∥_c α^∨)`, the right side computed in `dual`, which
    /// must be the model of the dual root system for the same word `c`.
    pub fn dual_compat_check(
        &self,
        dual: &RootModel,
        alpha: &AlmostPositiveRoot,
        beta: &AlmostPositiveRoot,
    ) -> Result<bool> {
        let lhs = self.c_compat(alpha, beta)?;
        let rhs = dual.c_compat(&self.coroot(beta), &self.coroot(alpha))?;
        Ok(lhs == rhs)
    }
}

/// `τ_c` and its inverse on `Φ_{≥−1}`, from the three-case formula:
/// `−α_{c_i} ↦ c_1⋯c_{i−1}(α_{c_i})`, `c_n⋯c_{i+1}(α_{c_i}) ↦ −α_{c_i}`,
/// and `α ↦ c(α)` otherwise.
#[allow(clippy::type_complexity)]
fn rotation_on_roots(
    rs: &RootSystem,
    c: &[usize],
) -> Result<(
    HashMap<AlmostPositiveRoot, AlmostPositiveRoot>,
    HashMap<AlmostPositiveRoot, AlmostPositiveRoot>,
)> {
    let n = rs.rank();
    let word = |letters: Vec<usize>| rs.evaluate_word(&GeneratorWord::new(letters));
    let cox = word(c.to_vec());
    let cox_inv = word(c.iter().rev().copied().collect());

    // special[i] = (c_1⋯c_{i−1}(α_{c_i}), c_n⋯c_{i+1}(α_{c_i}))
    let special: Vec<(Coords, Coords)> = (0..n)
        .map(|i| {
            let simple = rs.simple_root(c[i]);
            let head = word(c[..i].to_vec()).apply(&simple);
            let tail = word(c[i + 1..].iter().rev().copied().collect()).apply(&simple);
            (head, tail)
        })
        .collect();

    let mut domain: Vec<Coords> = (0..n).map(|i| AlmostPositiveRoot::negative_simple(n, i).0).collect();
    domain.extend(rs.positive_roots().iter().cloned());

    let mut tau = HashMap::new();
    let mut tau_inv = HashMap::new();
    for alpha in &domain {
        let image = if let Some(s) = negative_simple_index(alpha) {
            let i = c.iter().position(|&x| x == s).expect("c uses every generator");
            special[i].0.clone()
        } else if let Some(i) = special.iter().position(|(_, tail)| tail == alpha) {
            AlmostPositiveRoot::negative_simple(n, c[i]).0
        } else {
            cox.apply(alpha)
        };
        let preimage = if let Some(i) = special.iter().position(|(head, _)| head == alpha) {
            AlmostPositiveRoot::negative_simple(n, c[i]).0
        } else if let Some(s) = negative_simple_index(alpha) {
            let i = c.iter().position(|&x| x == s).expect("c uses every generator");
            special[i].1.clone()
        } else {
            cox_inv.apply(alpha)
        };
        let key = AlmostPositiveRoot::new(rs, alpha.clone())?;
        tau.insert(key.clone(), AlmostPositiveRoot::new(rs, image)?);
        tau_inv.insert(key, AlmostPositiveRoot::new(rs, preimage)?);
    }
    if tau.values().collect::<HashSet<_>>().len() != domain.len() {
        return invariant("τ_c on roots is not a bijection");
    }
    Ok((tau, tau_inv))
}

/// Classical compatibility degree from the piecewise-linear
/// involutions `τ_+` and `τ_−` of a bipartite partition, with the
/// diagonal convention `(α ∥ α) = −1`.
#[derive(Debug, Clone)]
pub struct ClassicalCompat {
    rs: Arc<RootSystem>,
    parts: [Vec<usize>; 2],
}

impl ClassicalCompat {
    /// `c` must be bipartite: a block of pairwise commuting generators
    /// followed by another such block.
    pub fn new(rs: Arc<RootSystem>, c: &GeneratorWord) -> Result<Self> {
        let n = rs.rank();
        if !c.is_coxeter_word(n) {
            return Err(Error::InvalidCoxeterWord(format!("{c} is not a Coxeter word")));
        }
        let letters = c.letters();
        let split = (1..=n)
            .find(|&k| {
                let ok = |block: &[usize]| {
                    block.iter().tuple_combinations().all(|(&a, &b)| !rs.spec().adjacent(a, b))
                };
                ok(&letters[..k]) && ok(&letters[k..])
            })
            .ok_or_else(|| Error::InvalidCoxeterWord(format!("{c} is not bipartite")))?;
        let parts = [letters[..split].to_vec(), letters[split..].to_vec()];
        Ok(ClassicalCompat { rs, parts })
    }

    fn tau(&self, part: usize, alpha: &[i64]) -> Coords {
        if let Some(i) = negative_simple_index(alpha) {
            if self.parts[1 - part].contains(&i) {
                return alpha.to_vec();
            }
        }
        self.parts[part]
            .iter()
            .fold(alpha.to_vec(), |v, &s| self.rs.generator(s).apply(&v))
    }

    /// `(α ∥ β)`, searching the `⟨τ_+, τ_−⟩`-orbit of the pair for a
    /// negative simple first entry.
    pub fn compat(&self, alpha: &AlmostPositiveRoot, beta: &AlmostPositiveRoot) -> Result<i64> {
        let mut seen = HashSet::new();
        let mut queue = VecDeque::from([(alpha.0.clone(), beta.0.clone())]);
        while let Some((a, b)) = queue.pop_front() {
            if let Some(i) = negative_simple_index(&a) {
                return Ok(b[i]);
            }
            if !seen.insert(a.clone()) {
                continue;
            }
            for part in 0..2 {
                queue.push_back((self.tau(part, &a), self.tau(part, &b)));
            }
        }
        invariant(format!("⟨τ_+, τ_−⟩-orbit of {alpha} has no negative simple root"))
    }
}
