//! Finite crystallographic root systems, their Weyl groups, and the words
//! built from a Coxeter element: the c-sorting word of the longest element
//! and the concatenation `Q_c = c · w∘(c)`.
//!
//! Everything is integral. Roots are coordinate vectors in the basis of
//! simple roots, group elements are integer matrices acting on those
//! coordinates, and a word acts with its rightmost letter applied first.
//! Generators are indexed from 0 in the API and printed from 1.

use std::cmp::Reverse;
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{invariant, Error, Result};

/// Integer coordinates of a vector in the simple-root basis.
pub type Coords = Vec<i64>;

/// Cartan-Killing family of a finite crystallographic root system.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn admits_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }

    /// Family of the dual (coroot) system; B and C swap.
    pub fn dual(self) -> Family {
        match self {
            Family::B => Family::C,
            Family::C => Family::B,
            other => other,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(Error::MalformedCartan(format!("unknown family {other:?}"))),
        }
    }
}

/// Gram matrix `(α_i, α_j)` of the simple roots, Bourbaki numbering, scaled
/// so that short roots have squared length 2.
fn gram_table(family: Family, n: usize) -> Result<Vec<Vec<i64>>> {
    if !family.admits_rank(n) {
        return Err(Error::InvalidRank { family, rank: n });
    }
    let mut g = vec![vec![0i64; n]; n];
    let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match family {
        Family::A => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 0..n.saturating_sub(1) {
                link(&mut g, i, i + 1, -1);
            }
        }
        Family::B => {
            // α_n short
            for i in 0..n - 1 {
                g[i][i] = 4;
            }
            g[n - 1][n - 1] = 2;
            for i in 0..n - 1 {
                link(&mut g, i, i + 1, -2);
            }
        }
        Family::C => {
            // α_n long
            for i in 0..n - 1 {
                g[i][i] = 2;
            }
            g[n - 1][n - 1] = 4;
            for i in 0..n - 2 {
                link(&mut g, i, i + 1, -1);
            }
            link(&mut g, n - 2, n - 1, -2);
        }
        Family::D => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 0..n - 2 {
                link(&mut g, i, i + 1, -1);
            }
            link(&mut g, n - 3, n - 1, -1);
        }
        Family::E => {
            for i in 0..n {
                g[i][i] = 2;
            }
            link(&mut g, 0, 2, -1);
            link(&mut g, 1, 3, -1);
            for i in 2..n - 1 {
                link(&mut g, i, i + 1, -1);
            }
        }
        Family::F => {
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
            link(&mut g, 0, 1, -2);
            link(&mut g, 1, 2, -2);
            link(&mut g, 2, 3, -1);
        }
        Family::G => {
            g[0][0] = 2;
            g[1][1] = 6;
            link(&mut g, 0, 1, -3);
        }
    }
    Ok(g)
}

/// Cartan data of a finite crystallographic type.
///
/// `cartan[i][j] = 2(α_i, α_j)/(α_i, α_i)`, so that `s_i(α_j) = α_j − a_ij α_i`.
/// The symmetrizer `d_i = (α_i, α_i)/2` makes `D·A` the (symmetric, positive
/// definite) Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanSpec {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    dual: bool,
}

impl CartanSpec {
    /// The Bourbaki-numbered Cartan data of `family` in rank `rank`.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let gram = gram_table(family, rank)?;
        Ok(Self::from_gram(family, &gram, false))
    }

    /// Validates an explicit Cartan matrix against the fixed table.
    pub fn from_matrix(family: Family, rank: usize, cartan: Vec<Vec<i64>>) -> Result<Self> {
        if cartan.len() != rank || cartan.iter().any(|row| row.len() != rank) {
            return Err(Error::MalformedCartan(format!("expected a {rank}x{rank} matrix")));
        }
        for i in 0..rank {
            if cartan[i][i] != 2 {
                return Err(Error::MalformedCartan(format!("a_{i}{i} must be 2")));
            }
            for j in 0..rank {
                if i != j && (cartan[i][j] > 0 || (cartan[i][j] == 0) != (cartan[j][i] == 0)) {
                    return Err(Error::MalformedCartan(format!("bad off-diagonal entry ({i}, {j})")));
                }
            }
        }
        let spec = Self::new(family, rank)?;
        if spec.cartan != cartan {
            return Err(Error::MalformedCartan(format!(
                "matrix does not match the {family}{rank} table"
            )));
        }
        Ok(spec)
    }

    fn from_gram(family: Family, gram: &[Vec<i64>], dual: bool) -> Self {
        let n = gram.len();
        let cartan = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[i][i]).collect())
            .collect();
        let symmetrizer = (0..n).map(|i| gram[i][i] / 2).collect();
        CartanSpec { family, rank: n, cartan, symmetrizer, dual }
    }

    /// Cartan data of the dual root system (coroots as simple roots).
    ///
    /// The Cartan matrix is transposed. For B and C this is the Bourbaki
    /// table of the other family; for F4 and G2 it is the same family with
    /// reversed root lengths, flagged by [`CartanSpec::is_dual`].
    pub fn dual(&self) -> Self {
        let n = self.rank;
        // Coroot Gram matrix: (α_i^∨, α_j^∨) = 4(α_i, α_j)/((α_i,α_i)(α_j,α_j)),
        // rescaled to integers with short coroots of squared length 2.
        let gram = self.gram();
        let max_norm = (0..n).map(|i| gram[i][i]).max().unwrap_or(2);
        let family = self.family.dual();
        let flips = matches!(self.family, Family::F | Family::G);
        let mut dual_gram = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                // 4 g_ij / (g_ii g_jj) * (max_norm^2 / 2) stays integral here.
                let num = 2 * gram[i][j] * max_norm * max_norm;
                let den = gram[i][i] * gram[j][j];
                dual_gram[i][j] = num / den;
            }
        }
        let g0 = (0..n).map(|i| dual_gram[i][i]).min().unwrap_or(2);
        let scale = g0 / 2;
        for row in dual_gram.iter_mut() {
            for v in row.iter_mut() {
                *v /= scale;
            }
        }
        Self::from_gram(family, &dual_gram, if flips { !self.dual } else { self.dual })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// True for the transposed F4/G2 data produced by [`CartanSpec::dual`].
    pub fn is_dual(&self) -> bool {
        self.dual
    }

    /// `(α_i, α_j) = d_i a_ij`.
    pub fn gram(&self) -> Vec<Vec<i64>> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.symmetrizer[i] * self.cartan[i][j]).collect())
            .collect()
    }

    /// Generators `u != v` joined by an edge of the Coxeter graph.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.cartan[u][v] != 0
    }
}

impl fmt::Display for CartanSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)?;
        if self.dual {
            f.write_str("^vee")?;
        }
        Ok(())
    }
}

/// An element of the Weyl group, as its matrix on simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    n: usize,
    data: Vec<i64>,
}

impl GroupElement {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        GroupElement { n, data }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.data[row * self.n + col]
    }

    pub fn apply(&self, v: &[i64]) -> Coords {
        let n = self.n;
        (0..n)
            .map(|r| self.data[r * n..(r + 1) * n].iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Matrix product `self · other`: `other` acts first.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        let n = self.n;
        let mut data = vec![0; n * n];
        for r in 0..n {
            for k in 0..n {
                let a = self.data[r * n + k];
                if a == 0 {
                    continue;
                }
                for c in 0..n {
                    data[r * n + c] += a * other.data[k * n + c];
                }
            }
        }
        GroupElement { n, data }
    }

    /// Inverse by repeated multiplication (Weyl group elements have finite
    /// order).
    pub fn inverse(&self) -> GroupElement {
        let id = GroupElement::identity(self.n);
        let mut prev = id.clone();
        let mut cur = self.clone();
        while cur != id {
            prev = cur.clone();
            cur = cur.compose(self);
        }
        prev
    }
}

/// A finite sequence of generator indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct GeneratorWord(Vec<usize>);

impl GeneratorWord {
    pub fn new(letters: Vec<usize>) -> Self {
        GeneratorWord(letters)
    }

    /// Parses a comma-separated list of 1-based generator labels.
    pub fn parse_one_based(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let v: usize = tok
                .parse()
                .map_err(|_| Error::InvalidCoxeterWord(format!("bad generator label {tok:?}")))?;
            if v == 0 {
                return Err(Error::InvalidCoxeterWord("generator labels start at 1".into()));
            }
            letters.push(v - 1);
        }
        Ok(GeneratorWord(letters))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True iff the word uses every generator of rank `n` exactly once.
    pub fn is_coxeter_word(&self, n: usize) -> bool {
        self.0.len() == n && {
            let mut seen = vec![false; n];
            self.0.iter().all(|&s| s < n && !std::mem::replace(&mut seen[s], true))
        }
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|s| s + 1).collect()
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(|s| format!("s{}", s + 1)).join(","))
    }
}

/// Positive roots, generator matrices, and the longest element of a finite
/// crystallographic root system.
#[derive(Debug, Clone)]
pub struct RootSystem {
    spec: CartanSpec,
    gram: Vec<Vec<i64>>,
    positive_roots: Vec<Coords>,
    root_index: HashMap<Coords, usize>,
    generators: Vec<GroupElement>,
    longest: GroupElement,
    eta: Vec<usize>,
}

impl RootSystem {
    pub fn of_type(family: Family, rank: usize) -> Result<Self> {
        Self::new(CartanSpec::new(family, rank)?)
    }

    /// Closes the simple roots under the simple reflections.
    pub fn new(spec: CartanSpec) -> Result<Self> {
        let n = spec.rank();
        let a = spec.cartan();
        let generators: Vec<GroupElement> = (0..n)
            .map(|i| {
                let mut g = GroupElement::identity(n);
                for j in 0..n {
                    g.data[i * n + j] -= a[i][j];
                }
                g
            })
            .collect();

        // Any finite type in scope has fewer than 200 positive roots.
        const CLOSURE_LIMIT: usize = 4096;
        let mut seen: HashMap<Coords, ()> = HashMap::new();
        let mut queue: VecDeque<Coords> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone(), ());
            queue.push_back(e);
        }
        while let Some(beta) = queue.pop_front() {
            for g in &generators {
                let gamma = g.apply(&beta);
                if gamma.iter().all(|&x| x >= 0) && !seen.contains_key(&gamma) {
                    if gamma.iter().any(|&x| x > 0) && gamma.iter().any(|&x| x < 0) {
                        return Err(Error::MalformedCartan("mixed-sign vector in orbit".into()));
                    }
                    seen.insert(gamma.clone(), ());
                    queue.push_back(gamma);
                    if seen.len() > CLOSURE_LIMIT {
                        return Err(Error::MalformedCartan("root orbit is not finite".into()));
                    }
                }
            }
        }
        let mut positive_roots: Vec<Coords> = seen.into_keys().collect();
        positive_roots.sort_by_key(|r| (r.iter().sum::<i64>(), Reverse(r.clone())));
        let root_index = positive_roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();

        let gram = spec.gram();
        let mut rs = RootSystem {
            spec,
            gram,
            positive_roots,
            root_index,
            generators,
            longest: GroupElement::identity(n),
            eta: Vec::new(),
        };

        // Demazure product of (s_1 ... s_n)^∞ reaches w∘.
        let big_n = rs.num_positive();
        let mut w = GroupElement::identity(n);
        let mut len = 0;
        'outer: loop {
            for s in 0..n {
                if len == big_n {
                    break 'outer;
                }
                if rs.is_positive(&w.apply(&rs.simple_root(s))) {
                    w = w.compose(&rs.generators[s]);
                    len += 1;
                }
            }
        }
        rs.longest = w;

        let mut eta = Vec::with_capacity(n);
        for s in 0..n {
            let conj = rs.longest.compose(&rs.generators[s]).compose(&rs.longest);
            match rs.generators.iter().position(|g| *g == conj) {
                Some(t) => eta.push(t),
                None => return invariant("w∘ s w∘ is not a simple reflection"),
            }
        }
        rs.eta = eta;
        Ok(rs)
    }

    pub fn spec(&self) -> &CartanSpec {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank()
    }

    /// Number N of positive roots.
    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn positive_roots(&self) -> &[Coords] {
        &self.positive_roots
    }

    pub fn positive_index(&self, v: &[i64]) -> Option<usize> {
        self.root_index.get(v).copied()
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        if self.root_index.contains_key(v) {
            return true;
        }
        let neg: Coords = v.iter().map(|x| -x).collect();
        self.root_index.contains_key(&neg)
    }

    /// Sign test for a vector already known to be a root.
    pub fn is_positive(&self, root: &[i64]) -> bool {
        root.iter().all(|&x| x >= 0)
    }

    pub fn simple_root(&self, i: usize) -> Coords {
        let mut e = vec![0; self.rank()];
        e[i] = 1;
        e
    }

    pub fn generator(&self, i: usize) -> &GroupElement {
        &self.generators[i]
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::identity(self.rank())
    }

    /// Symmetric bilinear form on simple-root coordinates.
    pub fn form(&self, u: &[i64], v: &[i64]) -> i64 {
        let n = self.rank();
        let mut acc = 0;
        for i in 0..n {
            if u[i] == 0 {
                continue;
            }
            for j in 0..n {
                acc += u[i] * self.gram[i][j] * v[j];
            }
        }
        acc
    }

    /// Reflection `t_β(v) = v − 2(v, β)/(β, β) · β` orthogonal to the root β.
    pub fn reflect_along(&self, beta: &[i64], v: &[i64]) -> Coords {
        let k = 2 * self.form(v, beta) / self.form(beta, beta);
        v.iter().zip(beta).map(|(x, b)| x - k * b).collect()
    }

    /// Product of the generator matrices, leftmost letter outermost.
    pub fn evaluate_word(&self, w: &GeneratorWord) -> GroupElement {
        w.letters()
            .iter()
            .fold(self.identity(), |acc, &s| acc.compose(&self.generators[s]))
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, g: &GroupElement) -> usize {
        self.positive_roots
            .iter()
            .filter(|beta| g.apply(beta).iter().any(|&x| x < 0))
            .count()
    }

    pub fn longest_element(&self) -> &GroupElement {
        &self.longest
    }

    /// The involution `η(s) = w∘ s w∘` on generator indices.
    pub fn eta(&self, s: usize) -> usize {
        self.eta[s]
    }

    pub fn is_reduced(&self, w: &GeneratorWord) -> bool {
        let mut v = self.identity();
        for &s in w.letters() {
            if !self.is_positive(&v.apply(&self.simple_root(s))) {
                return false;
            }
            v = v.compose(&self.generators[s]);
        }
        true
    }

    /// Greedy (lexicographically first) reduced subword of `c^∞` for w∘.
    pub fn c_sorting_word(&self, c: &GeneratorWord) -> Result<GeneratorWord> {
        let n = self.rank();
        if !c.is_coxeter_word(n) {
            return Err(Error::InvalidCoxeterWord(format!(
                "{c} must use each of the {n} generators exactly once"
            )));
        }
        let big_n = self.num_positive();
        let mut v = self.identity();
        let mut letters = Vec::with_capacity(big_n);
        while letters.len() < big_n {
            for &s in c.letters() {
                if letters.len() == big_n {
                    break;
                }
                // length(v·s) = length(v) + 1  iff  v(α_s) > 0
                if self.is_positive(&v.apply(&self.simple_root(s))) {
                    v = v.compose(&self.generators[s]);
                    letters.push(s);
                }
            }
        }
        Ok(GeneratorWord(letters))
    }

    /// Every Coxeter word of this rank (all `n!` generator orders), in
    /// lexicographic order.
    pub fn coxeter_words(&self) -> Vec<GeneratorWord> {
        let n = self.rank();
        (0..n).permutations(n).map(GeneratorWord).collect()
    }

    /// Generator order 1, 2, ..., n.
    pub fn standard_word(&self) -> GeneratorWord {
        GeneratorWord((0..self.rank()).collect())
    }

    /// Bipartite Coxeter word: the 2-colour class of generator 0 first, then
    /// the other class, each in increasing order.
    pub fn bipartite_word(&self) -> GeneratorWord {
        let n = self.rank();
        let mut colour = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if colour[root] != usize::MAX {
                continue;
            }
            colour[root] = 0;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for v in 0..n {
                    if self.spec.adjacent(u, v) && colour[v] == usize::MAX {
                        colour[v] = 1 - colour[u];
                        queue.push_back(v);
                    }
                }
            }
        }
        let mut letters: Vec<usize> = (0..n).filter(|&s| colour[s] == 0).collect();
        letters.extend((0..n).filter(|&s| colour[s] == 1));
        GeneratorWord(letters)
    }

    /// Dual root system (Cartan transpose).
    pub fn dual(&self) -> Result<RootSystem> {
        RootSystem::new(self.spec.dual())
    }

    /// Coordinates of the coroot `β^∨ = 2β/(β, β)` in the basis of simple
    /// coroots `α_j^∨`.
    pub fn coroot(&self, beta: &[i64]) -> Coords {
        let norm = self.form(beta, beta);
        beta.iter()
            .enumerate()
            .map(|(j, b)| b * self.gram[j][j] / norm)
            .collect()
    }
}

/// The word `Q_c = c · w∘(c)` of length `m = n + N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterWord {
    c: GeneratorWord,
    sorting: GeneratorWord,
    letters: Vec<usize>,
}

impl CoxeterWord {
    pub fn new(rs: &RootSystem, c: &GeneratorWord) -> Result<Self> {
        let sorting = rs.c_sorting_word(c)?;
        let letters = c.letters().iter().chain(sorting.letters()).copied().collect();
        Ok(CoxeterWord { c: c.clone(), sorting, letters })
    }

    pub fn c(&self) -> &GeneratorWord {
        &self.c
    }

    pub fn sorting_word(&self) -> &GeneratorWord {
        &self.sorting
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::of_type(f, n).unwrap()
    }

    #[test]
    fn rank_two_closures() {
        let a2 = rs(Family::A, 2);
        assert_eq!(a2.positive_roots(), &[vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(rs(Family::A, 1).positive_roots(), &[vec![1]]);
        assert_eq!(rs(Family::G, 2).num_positive(), 6);
        assert_eq!(rs(Family::B, 2).num_positive(), 4);
    }

    #[test]
    fn positive_root_counts_match_classification() {
        // N = number of reflections: A_n n(n+1)/2, B_n/C_n n^2, D_n n(n-1),
        // E6 36, E7 63, E8 120, F4 24, G2 6.
        let table = [
            (Family::A, 4, 10),
            (Family::B, 3, 9),
            (Family::C, 4, 16),
            (Family::D, 4, 12),
            (Family::D, 5, 20),
            (Family::E, 6, 36),
            (Family::E, 7, 63),
            (Family::E, 8, 120),
            (Family::F, 4, 24),
            (Family::G, 2, 6),
        ];
        for (f, n, count) in table {
            assert_eq!(rs(f, n).num_positive(), count, "{f}{n}");
        }
    }

    #[test]
    fn rejects_out_of_scope_ranks_and_bad_matrices() {
        assert!(matches!(CartanSpec::new(Family::D, 3), Err(Error::InvalidRank { .. })));
        assert!(CartanSpec::new(Family::E, 9).is_err());
        assert!(CartanSpec::new(Family::A, 0).is_err());
        let bad = vec![vec![2, -1], vec![0, 2]];
        assert!(CartanSpec::from_matrix(Family::A, 2, bad).is_err());
        let swapped = vec![vec![2, -2], vec![-1, 2]];
        assert!(CartanSpec::from_matrix(Family::B, 2, swapped.clone()).is_err());
        assert!(CartanSpec::from_matrix(Family::C, 2, swapped).is_ok());
    }

    #[test]
    fn bourbaki_b_and_c_are_transposes() {
        let b3 = CartanSpec::new(Family::B, 3).unwrap();
        let c3 = CartanSpec::new(Family::C, 3).unwrap();
        assert_eq!(b3.cartan()[1][2], -1);
        assert_eq!(b3.cartan()[2][1], -2);
        assert_eq!(b3.dual(), c3);
        assert_eq!(c3.dual(), b3);
        let g2 = CartanSpec::new(Family::G, 2).unwrap();
        assert_eq!(g2.dual().dual(), g2);
        assert!(g2.dual().is_dual());
    }

    #[test]
    fn word_evaluation_convention() {
        let a2 = rs(Family::A, 2);
        assert_eq!(a2.evaluate_word(&GeneratorWord::default()), a2.identity());
        let s1 = GeneratorWord::new(vec![0]);
        assert_eq!(a2.evaluate_word(&s1).apply(&[1, 0]), vec![-1, 0]);
        // c = s1 s2 acts with s2 first: s1(s2(α1)) = s1(α1 + α2) = α2
        let c = GeneratorWord::new(vec![0, 1]);
        assert_eq!(a2.evaluate_word(&c).apply(&[1, 0]), vec![0, 1]);
    }

    #[test]
    fn lengths() {
        let a2 = rs(Family::A, 2);
        assert_eq!(a2.length(&a2.identity()), 0);
        assert_eq!(a2.length(a2.generator(0)), 1);
        assert_eq!(a2.length(a2.longest_element()), 3);
        for f in [Family::B, Family::D, Family::E] {
            let n = if f == Family::B { 3 } else if f == Family::D { 4 } else { 6 };
            let r = rs(f, n);
            assert_eq!(r.length(r.longest_element()), r.num_positive());
        }
    }

    #[test]
    fn sorting_words() {
        let a2 = rs(Family::A, 2);
        let c = GeneratorWord::new(vec![0, 1]);
        assert_eq!(a2.c_sorting_word(&c).unwrap().letters(), &[0, 1, 0]);
        let a1 = rs(Family::A, 1);
        assert_eq!(a1.c_sorting_word(&GeneratorWord::new(vec![0])).unwrap().letters(), &[0]);
        let a3 = rs(Family::A, 3);
        let w = a3.c_sorting_word(&a3.standard_word()).unwrap();
        assert_eq!(w.len(), 6);
        assert!(a3.is_reduced(&w));
        assert_eq!(&a3.evaluate_word(&w), a3.longest_element());
        assert!(a3.c_sorting_word(&GeneratorWord::new(vec![0, 0, 1])).is_err());
    }

    #[test]
    fn eta_values() {
        let a2 = rs(Family::A, 2);
        assert_eq!((a2.eta(0), a2.eta(1)), (1, 0));
        let b2 = rs(Family::B, 2);
        assert_eq!((b2.eta(0), b2.eta(1)), (0, 1));
        let d4 = rs(Family::D, 4);
        assert!((0..4).all(|s| d4.eta(s) == s));
        let e6 = rs(Family::E, 6);
        assert_eq!((0..6).map(|s| e6.eta(s)).collect::<Vec<_>>(), vec![5, 1, 4, 3, 2, 0]);
    }

    #[test]
    fn q_c_words() {
        let a2 = rs(Family::A, 2);
        let q = CoxeterWord::new(&a2, &GeneratorWord::new(vec![0, 1])).unwrap();
        assert_eq!(q.letters(), &[0, 1, 0, 1, 0]);
        let a1 = rs(Family::A, 1);
        let q = CoxeterWord::new(&a1, &GeneratorWord::new(vec![0])).unwrap();
        assert_eq!(q.letters(), &[0, 0]);
        let b2 = rs(Family::B, 2);
        let q = CoxeterWord::new(&b2, &GeneratorWord::new(vec![0, 1])).unwrap();
        assert_eq!(q.len(), 6);
    }

    #[test]
    fn bipartite_word_alternates_colours() {
        let a4 = rs(Family::A, 4);
        assert_eq!(a4.bipartite_word().letters(), &[0, 2, 1, 3]);
        let d4 = rs(Family::D, 4);
        assert_eq!(d4.bipartite_word().letters(), &[0, 2, 3, 1]);
    }

    #[test]
    fn coroots_of_b2_land_in_c2() {
        let b2 = rs(Family::B, 2);
        let c2 = b2.dual().unwrap();
        assert_eq!(c2.spec().family(), Family::C);
        for beta in b2.positive_roots() {
            let co = b2.coroot(beta);
            assert!(c2.positive_index(&co).is_some(), "{beta:?} -> {co:?}");
        }
    }
}
