//! Verification harness: runs the three d-vector computations against each
//! other and checks the invariants they rely on. Every check records the
//! number of cases examined and the first counterexample found.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;
use std::time::Instant;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cluster::{ClusterAlgebra, Reseeded};
use crate::coxeter::{Family, GeneratorWord, RootSystem};
use crate::error::Result;
use crate::geometry::PolygonModel;
use crate::roots::{ClassicalCompat, RootModel};
use crate::subword::{ClusterPositions, SubwordComplex};

/// Default cap on the number of enumerated seeds.
pub const DEFAULT_BUDGET: usize = 500;

/// Which seeds the reseeding checks visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeedSample {
    All,
    /// `count` seeds drawn with a ChaCha generator seeded by `rng_seed`.
    Random { count: usize, rng_seed: u64 },
}

impl SeedSample {
    /// Every seed up to rank 3, 50 seeds drawn with generator seed 0 above.
    pub fn default_for_rank(rank: usize) -> Self {
        if rank <= 3 {
            SeedSample::All
        } else {
            SeedSample::Random { count: 50, rng_seed: 0 }
        }
    }

    /// Seed nodes to visit, sorted. The initial seed and, when one exists, a
    /// seed with a cyclic quiver are always included.
    pub fn select(&self, algebra: &ClusterAlgebra) -> Vec<usize> {
        let total = algebra.graph().num_seeds();
        let mut nodes: BTreeSet<usize> = match *self {
            SeedSample::Random { count, rng_seed } if count < total => {
                let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
                sample(&mut rng, total, count).into_iter().collect()
            }
            _ => (0..total).collect(),
        };
        nodes.insert(0);
        if !nodes.iter().any(|&k| !algebra.seed_is_acyclic(k)) {
            if let Some(k) = (0..total).find(|&k| !algebra.seed_is_acyclic(k)) {
                nodes.insert(k);
            }
        }
        nodes.into_iter().collect()
    }

    fn describe(&self) -> String {
        match self {
            SeedSample::All => "all".into(),
            SeedSample::Random { count, rng_seed } => format!("sample:{count}@{rng_seed}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Scenario {
    pub family: String,
    pub rank: usize,
    /// One-based generator order.
    pub coxeter: Vec<usize>,
    pub seed: String,
}

impl Scenario {
    pub fn new(rs: &RootSystem, c: &GeneratorWord, seed: impl Into<String>) -> Self {
        Scenario {
            family: rs.spec().family().to_string(),
            rank: rs.rank(),
            coxeter: c.to_one_based(),
            seed: seed.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub cases: usize,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub scenario: Scenario,
    pub checks: Vec<CheckResult>,
    /// Wall-clock time; the only field that varies between runs.
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Accumulates cases for one named check.
struct Check {
    name: &'static str,
    cases: usize,
    counterexample: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check { name, cases: 0, counterexample: None }
    }

    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name.to_string(),
            pass: self.counterexample.is_none(),
            cases: self.cases,
            counterexample: self.counterexample,
        }
    }
}

struct ReportBuilder {
    suite: &'static str,
    scenario: Scenario,
    checks: Vec<CheckResult>,
    start: Instant,
}

impl ReportBuilder {
    fn new(suite: &'static str, scenario: Scenario) -> Self {
        ReportBuilder { suite, scenario, checks: Vec::new(), start: Instant::now() }
    }

    fn push(&mut self, check: Check) {
        self.checks.push(check.finish());
    }

    fn finish(self) -> VerificationReport {
        VerificationReport {
            suite: self.suite.to_string(),
            scenario: self.scenario,
            checks: self.checks,
            elapsed_ms: self.start.elapsed().as_millis() as u64,
        }
    }
}

/// Lazily reseeds the algebra at enumerated nodes.
struct ReseedCache<'a> {
    algebra: &'a ClusterAlgebra,
    cache: HashMap<usize, Reseeded>,
}

impl<'a> ReseedCache<'a> {
    fn new(algebra: &'a ClusterAlgebra) -> Self {
        ReseedCache { algebra, cache: HashMap::new() }
    }

    fn at(&mut self, node: usize) -> Result<&Reseeded> {
        if !self.cache.contains_key(&node) {
            let re = self.algebra.graph().reseed_at(node)?;
            self.cache.insert(node, re);
        }
        Ok(&self.cache[&node])
    }
}

/// Coefficients `{i ∥ j}` for `i` in seed order, from rows in cluster order.
fn cluster_rows(cluster: &ClusterPositions, positions: &[usize], rows: &[Vec<i64>], j: usize) -> Vec<i64> {
    positions.iter().map(|&i| rows[cluster.slot(i).expect("member")][j]).collect()
}

fn one_based(positions: &[usize]) -> Vec<usize> {
    positions.iter().map(|p| p + 1).collect()
}

/// The three compatibility degrees agree on every pair of positions.
pub fn verify_three_way(algebra: &ClusterAlgebra) -> Result<VerificationReport> {
    let sc = algebra.complex();
    let roots = algebra.roots();
    let rs = sc.root_system();
    let mut report = ReportBuilder::new("three-way", Scenario::new(rs, sc.c(), "initial"));
    let m = sc.len();

    let symbolic = algebra.compat_by_position()?;
    let positional = sc.compat_table()?;
    let clusters = sc.enumerate_clusters()?;
    let compatible = sc.compatibility_relation(&clusters);

    let mut agree = Check::new("three-way agreement");
    let mut diagonal = Check::new("diagonal degrees are -1");
    let mut zeros = Check::new("compatible pairs have degree 0");
    for i in 0..m {
        for j in 0..m {
            let d = symbolic[i][j];
            let r = roots.c_compat(roots.theta(i), roots.theta(j))?;
            let p = positional.get(i, j);
            agree.case(d == r && r == p, || {
                format!(
                    "(i, j) = ({}, {}): d(ψ(i), ψ(j)) = {d}, (ϑ(i) ∥ ϑ(j)) = {r}, {{i ∥ j}} = {p}",
                    i + 1,
                    j + 1
                )
            });
            if i == j {
                diagonal.case(d == -1 && r == -1 && p == -1, || format!("position {}: ({d}, {r}, {p})", i + 1));
            } else if compatible[i][j] {
                zeros.case(d == 0 && r == 0 && p == 0, || format!("({}, {}): ({d}, {r}, {p})", i + 1, j + 1));
            }
        }
    }
    report.push(agree);
    report.push(diagonal);
    report.push(zeros);

    let mut counts = Check::new("cluster and variable counts agree");
    let graph = algebra.graph();
    counts.case(clusters.len() == graph.num_seeds(), || {
        format!("{} c-clusters but {} seeds", clusters.len(), graph.num_seeds())
    });
    counts.case(graph.num_variables() == m && m == rs.num_positive() + rs.rank(), || {
        format!("{} variables, m = {m}, N + n = {}", graph.num_variables(), rs.num_positive() + rs.rank())
    });
    report.push(counts);

    let mut phi = Check::new("initial d-vectors are the almost positive roots");
    phi.case(algebra.almost_positive_self_check(), || "multiset mismatch".into());
    report.push(phi);

    let mut clusters_match = Check::new("c-clusters are exactly the seeds");
    for cl in &clusters {
        let ids = algebra.variables_at(cl.positions());
        clusters_match.case(algebra.is_cluster(&ids), || format!("{cl} is not a seed"));
    }
    report.push(clusters_match);
    Ok(report.finish())
}

/// d-vectors with respect to sampled seeds, computed symbolically, from
/// roots and from positions; plus positivity of non-initial d-vectors.
pub fn verify_seed_dvectors(algebra: &ClusterAlgebra, seeds: SeedSample) -> Result<VerificationReport> {
    let sc = algebra.complex();
    let roots = algebra.roots();
    let rs = sc.root_system();
    let mut report = ReportBuilder::new("seed-dvectors", Scenario::new(rs, sc.c(), seeds.describe()));
    let m = sc.len();
    let n = sc.rank();
    let classical = ClassicalCompat::new(rs.clone(), sc.c()).ok();

    let mut is_cluster = Check::new("seed positions form a c-cluster");
    let mut from_roots = Check::new("symbolic d-vectors match root compatibility");
    let mut from_positions = Check::new("symbolic d-vectors match position coefficients");
    let mut positive = Check::new("non-initial d-vectors are non-negative and non-zero");
    let mut initial = Check::new("seed variables have d-vector -e_i");
    let mut cyclic = Check::new("cyclic seeds are sampled when they exist");
    let mut bipartite = Check::new("bipartite c matches classical compatibility");

    let nodes = seeds.select(algebra);
    let mut cache = ReseedCache::new(algebra);
    let mut cyclic_seen = 0;
    for &node in &nodes {
        if !algebra.seed_is_acyclic(node) {
            cyclic_seen += 1;
        }
        let re = cache.at(node)?;
        let slots = re.slots().to_vec();
        let positions: Vec<usize> = slots.iter().map(|&x| algebra.psi_inv(x)).collect();
        let cluster = match sc.cluster(positions.clone()) {
            Ok(cluster) => cluster,
            Err(_) => {
                is_cluster.case(false, || format!("seed {node}: positions {:?}", one_based(&positions)));
                continue;
            }
        };
        is_cluster.case(true, String::new);
        let rows = sc.compat_coeffs_in(&cluster)?;
        for j in 0..m {
            let y = algebra.psi(j);
            let d = re.d_vector(y);
            let by_roots: Vec<i64> =
                positions.iter().map(|&i| roots.c_compat(roots.theta(i), roots.theta(j))).collect::<Result<_>>()?;
            let by_positions: Vec<i64> = cluster_rows(&cluster, &positions, &rows, j);
            let seed = || format!("seed {cluster}, position {}", j + 1);
            from_roots.case(d == by_roots, || format!("{}: {d:?} vs {by_roots:?}", seed()));
            from_positions.case(d == by_positions, || format!("{}: {d:?} vs {by_positions:?}", seed()));
            if let Some(slot) = slots.iter().position(|&x| x == y) {
                let want: Vec<i64> = (0..n).map(|k| if k == slot { -1 } else { 0 }).collect();
                initial.case(d == want, || format!("{}: {d:?}", seed()));
            } else {
                positive.case(d.iter().all(|&x| x >= 0) && d.iter().any(|&x| x > 0), || format!("{}: {d:?}", seed()));
            }
            if let Some(classical) = &classical {
                let beta = roots.theta(j);
                let want: Vec<i64> =
                    positions.iter().map(|&i| classical.compat(roots.theta(i), beta)).collect::<Result<_>>()?;
                bipartite.case(d == want, || format!("{}: {d:?} vs {want:?}", seed()));
            }
        }
    }
    let exists = (0..algebra.graph().num_seeds()).any(|k| !algebra.seed_is_acyclic(k));
    cyclic.case(!exists || cyclic_seen > 0, || "no cyclic seed in the sample".into());

    report.push(is_cluster);
    report.push(from_roots);
    report.push(from_positions);
    report.push(initial);
    report.push(positive);
    report.push(cyclic);
    if classical.is_some() {
        report.push(bipartite);
    }
    Ok(report.finish())
}

/// Rotation, cluster-independence and reseeding invariances of the algebra,
/// followed by the subword and root layer checks.
pub fn verify_invariances(algebra: &ClusterAlgebra, seeds: SeedSample) -> Result<VerificationReport> {
    let sc = algebra.complex();
    let rs = sc.root_system();
    let mut report = ReportBuilder::new("invariances", Scenario::new(rs, sc.c(), seeds.describe()));
    let m = sc.len();
    let graph = algebra.graph();

    let mut square = Check::new("rotation commutes with ψ");
    let mut by_path = Check::new("rotation by replay equals rotation by path");
    for j in 0..m {
        let lhs = algebra.rotate_variable(algebra.psi(j));
        let rhs = algebra.psi(sc.rotate_position(j));
        square.case(lhs == rhs, || format!("position {}", j + 1));
        let direct = algebra.rotate_variable_by_path(algebra.psi(j))?;
        by_path.case(direct == lhs, || format!("position {}", j + 1));
    }
    report.push(square);
    report.push(by_path);

    let mut preserves = Check::new("rotation preserves clusters");
    for node in graph.nodes() {
        let rotated: Vec<usize> = node.vars.iter().map(|&x| algebra.rotate_variable(x)).collect();
        preserves.case(algebra.is_cluster(&rotated), || {
            let ps: Vec<usize> = node.vars.iter().map(|&x| algebra.psi_inv(x) + 1).collect();
            format!("τ of seed with positions {ps:?} is not a seed")
        });
    }
    report.push(preserves);

    let table = algebra.compat_degree_table()?;
    let mut pair_rotation = Check::new("d(x, y) = d(τx, τy)");
    for x in 0..m {
        for y in 0..m {
            let (tx, ty) = (algebra.rotate_variable(x), algebra.rotate_variable(y));
            pair_rotation.case(table[x][y] == table[tx][ty], || {
                format!("positions ({}, {})", algebra.psi_inv(x) + 1, algebra.psi_inv(y) + 1)
            });
        }
    }
    report.push(pair_rotation);

    let mut independent = Check::new("d(x, y) is independent of the cluster containing x");
    let mut rotated_cluster_degrees = Check::new("d(X, y) = d(τX, τy)");
    let mut cache = ReseedCache::new(algebra);
    for node in seeds.select(algebra) {
        let (slots, dvecs): (Vec<usize>, Vec<Vec<i64>>) = {
            let re = cache.at(node)?;
            (re.slots().to_vec(), (0..m).map(|y| re.d_vector(y)).collect())
        };
        let rotated: Vec<usize> = slots.iter().map(|&x| algebra.rotate_variable(x)).collect();
        let Some(target) = graph.node_of(&rotated) else { continue };
        let re_t = cache.at(target)?;
        for (slot, &x) in slots.iter().enumerate() {
            let tx = algebra.rotate_variable(x);
            let t_slot = re_t.slots().iter().position(|&v| v == tx).expect("rotated member");
            for y in 0..m {
                let d = dvecs[y][slot];
                independent.case(d == table[x][y], || {
                    format!(
                        "x at position {}, y at position {}, seed {node}: {d} vs {}",
                        algebra.psi_inv(x) + 1,
                        algebra.psi_inv(y) + 1,
                        table[x][y]
                    )
                });
                let rotated_d = re_t.d_vector(algebra.rotate_variable(y))[t_slot];
                rotated_cluster_degrees.case(d == rotated_d, || {
                    format!("seed {node}, y at position {}: {d} vs {rotated_d}", algebra.psi_inv(y) + 1)
                });
            }
        }
    }
    report.push(independent);
    report.push(rotated_cluster_degrees);

    for check in subword_checks(algebra.roots())? {
        report.checks.push(check);
    }
    Ok(report.finish())
}

/// Checks that need only positions and roots; these run in every type.
pub fn verify_subword_layer(roots: &RootModel) -> Result<VerificationReport> {
    let sc = roots.complex();
    let mut report = ReportBuilder::new("subword-layer", Scenario::new(sc.root_system(), sc.c(), "initial"));
    report.checks = subword_checks(roots)?;
    Ok(report.finish())
}

fn subword_checks(roots: &RootModel) -> Result<Vec<CheckResult>> {
    let sc = roots.complex();
    let m = sc.len();
    let n = sc.rank();
    let table = sc.compat_table()?;
    let clusters = sc.enumerate_clusters()?;
    let compatible = sc.compatibility_relation(&clusters);
    let mut out = Vec::new();

    let mut theta = Check::new("ϑ commutes with rotation");
    for j in 0..m {
        let lhs = roots.tau_root(roots.theta(j))?;
        let rhs = roots.theta(sc.rotate_position(j));
        theta.case(&lhs == rhs, || format!("position {}", j + 1));
    }
    out.push(theta.finish());

    let mut agree = Check::new("root and position coefficients agree");
    let mut well_defined = Check::new("root compatibility is independent of the orbit hit");
    for i in 0..m {
        for j in 0..m {
            let r = roots.c_compat(roots.theta(i), roots.theta(j))?;
            agree.case(r == table.get(i, j), || format!("({}, {}): {r} vs {}", i + 1, j + 1, table.get(i, j)));
            if n <= 3 {
                let hits = roots.c_compat_all_hits(roots.theta(i), roots.theta(j))?;
                well_defined.case(hits.iter().all(|&h| h == r), || format!("({}, {}): {hits:?}", i + 1, j + 1));
            }
        }
    }
    out.push(agree.finish());
    if n <= 3 {
        out.push(well_defined.finish());
    }

    let mut signs = Check::new("off-diagonal coefficients are non-negative, zero iff compatible");
    let mut rotation = Check::new("{i ∥ j} = {τi ∥ τj}");
    for i in 0..m {
        for j in 0..m {
            let v = table.get(i, j);
            if i != j {
                signs.case(v >= 0 && (v == 0) == compatible[i][j], || format!("({}, {}): {v}", i + 1, j + 1));
            }
            let (ti, tj) = (sc.rotate_position(i), sc.rotate_position(j));
            rotation.case(v == table.get(ti, tj), || format!("({}, {})", i + 1, j + 1));
        }
    }
    out.push(signs.finish());
    out.push(rotation.finish());

    let mut closed = Check::new("c-clusters are closed under rotation");
    let set: BTreeSet<&ClusterPositions> = clusters.iter().collect();
    for cl in &clusters {
        let image = sc.rotate_positions(cl.positions());
        let ok = sc.cluster(image.clone()).is_ok_and(|c| set.contains(&c));
        closed.case(ok, || format!("τ({cl}) = {:?}", one_based(&image)));
    }
    out.push(closed.finish());

    let mut independent = Check::new("{i ∥ j} is independent of the cluster containing i");
    let mut update = Check::new("incremental root-function update equals recomputation");
    for cl in &clusters {
        let rf = sc.root_function_table(cl);
        let rows = sc.compat_coeffs_in(cl)?;
        for (&i, row) in cl.positions().iter().zip(&rows) {
            for (j, &v) in row.iter().enumerate() {
                independent.case(v == table.get(i, j), || format!("{cl}, ({}, {}): {v}", i + 1, j + 1));
            }
            let (flipped, j) = sc.flip(cl, i)?;
            let updated = sc.update_root_function(&rf, i, j)?;
            let fresh = sc.root_function_table(&flipped);
            update.case(updated.values() == fresh.values(), || format!("{cl} flipped at {}", i + 1));
        }
    }
    out.push(independent.finish());
    out.push(update.finish());

    let (jump_clusters, jump_coeffs, jump_cycle) = jump_checks(sc, &clusters, &table)?;
    out.push(jump_clusters.finish());
    out.push(jump_coeffs.finish());
    out.push(jump_cycle.finish());
    Ok(out)
}

/// Follows `n` successive jumps, through every cyclic shift of `c`.
fn jump_checks(
    sc: &SubwordComplex,
    clusters: &[ClusterPositions],
    table: &crate::subword::CompatTable,
) -> Result<(Check, Check, Check)> {
    let m = sc.len();
    let mut to_clusters = Check::new("jumps send clusters to clusters");
    let mut coeffs = Check::new("{i ∥ j} is invariant under jumps");
    let mut current = sc.clone();
    let mut sigma: Vec<usize> = (0..m).collect();
    for _ in 0..sc.rank() {
        let jump = current.jump()?;
        sigma = sigma.iter().map(|&p| jump.sigma()[p]).collect();
        let target = jump.target().clone();
        let target_table = target.compat_table()?;
        let c_label = target.c().to_string();
        for cl in clusters {
            let image: Vec<usize> = cl.positions().iter().map(|&p| sigma[p]).collect();
            to_clusters.case(target.is_c_cluster(&image)?, || format!("{cl} into Q for {c_label}"));
        }
        for i in 0..m {
            for j in 0..m {
                let (a, b) = (table.get(i, j), target_table.get(sigma[i], sigma[j]));
                coeffs.case(a == b, || format!("({}, {}) into Q for {c_label}: {a} vs {b}", i + 1, j + 1));
            }
        }
        current = target;
    }
    let mut cycle = Check::new("n jumps return to Q_c with the inverse rotation");
    cycle.case(current.word().letters() == sc.word().letters(), || format!("ended at {}", current.c()));
    for (p, &q) in sigma.iter().enumerate() {
        cycle.case(q == sc.rotate_position_inv(p), || format!("position {} goes to {}", p + 1, q + 1));
    }
    Ok((to_clusters, coeffs, cycle))
}

/// `(α ∥ β) = (β^∨ ∥ α^∨)` for all pairs, the right side in the dual system.
pub fn verify_duality(roots: &RootModel) -> Result<VerificationReport> {
    let rs = roots.root_system();
    let c = roots.c().clone();
    let dual = RootModel::of_type(Arc::new(rs.dual()?), &c)?;
    let mut report = ReportBuilder::new("duality", Scenario::new(rs, &c, "initial"));
    let mut check = Check::new("(α ∥ β) = (β^∨ ∥ α^∨)");
    let mut coroots = Check::new("coroots are almost positive roots of the dual");
    for alpha in roots.almost_positive_roots() {
        let co = roots.coroot(alpha);
        coroots.case(dual.theta_inv(&co).is_ok(), || format!("{alpha} ↦ {co}"));
        for beta in roots.almost_positive_roots() {
            let ok = roots.dual_compat_check(&dual, alpha, beta)?;
            check.case(ok, || format!("α = {alpha}, β = {beta}"));
        }
    }
    report.push(coroots);
    report.push(check);
    Ok(report.finish())
}

/// Crossing numbers reproduce d-vectors under some consistent bijection.
pub fn verify_geometry(algebra: &ClusterAlgebra) -> Result<VerificationReport> {
    let sc = algebra.complex();
    let rs = sc.root_system();
    let spec = rs.spec();
    let mut report = ReportBuilder::new("geometry", Scenario::new(rs, sc.c(), "all"));
    let model = PolygonModel::new(spec.family(), spec.rank())?;
    let geometric = model.enumerate_geometric_clusters();

    let mut counts = Check::new("diagonal and triangulation counts");
    counts.case(model.diagonals().len() == sc.len(), || {
        format!("{} diagonal objects, m = {}", model.diagonals().len(), sc.len())
    });
    counts.case(geometric.len() == algebra.graph().num_seeds(), || {
        format!("{} triangulations, {} seeds", geometric.len(), algebra.graph().num_seeds())
    });
    report.push(counts);

    let mut sizes = Check::new("triangulations have n diagonals");
    for t in &geometric {
        sizes.case(t.len() == sc.rank(), || format!("{t:?}"));
    }
    report.push(sizes);

    if spec.family() == Family::A {
        let mut symmetric = Check::new("type A crossing numbers are symmetric");
        let table = model.crossing_table();
        for (i, row) in table.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                symmetric.case(v == table[j][i], || format!("{} vs {}", model.diagonals()[i], model.diagonals()[j]));
            }
        }
        report.push(symmetric);
    }

    let mut matching = Check::new("crossing vectors equal d-vectors under a cluster bijection");
    matching.case(model.match_with_algebra(algebra)?.is_some(), || "no consistent bijection".into());
    report.push(matching);
    Ok(report.finish())
}

/// What [`verify_all`] runs.
#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub budget: usize,
    pub seeds: SeedSample,
    /// Skip the exchange graph entirely.
    pub subword_only: bool,
}

impl VerifyOptions {
    pub fn for_rank(rank: usize) -> Self {
        VerifyOptions { budget: DEFAULT_BUDGET, seeds: SeedSample::default_for_rank(rank), subword_only: false }
    }
}

/// Every suite that applies to the given type and word.
pub fn verify_all(rs: Arc<RootSystem>, c: &GeneratorWord, options: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    let roots = RootModel::of_type(rs.clone(), c)?;
    let family = rs.spec().family();
    let mut reports = Vec::new();
    if options.subword_only {
        reports.push(verify_subword_layer(&roots)?);
    } else {
        let algebra = ClusterAlgebra::new(roots.clone(), options.budget)?;
        reports.push(verify_three_way(&algebra)?);
        reports.push(verify_seed_dvectors(&algebra, options.seeds)?);
        reports.push(verify_invariances(&algebra, options.seeds)?);
        if PolygonModel::new(family, rs.rank()).is_ok() {
            reports.push(verify_geometry(&algebra)?);
        }
    }
    reports.push(verify_duality(&roots)?);
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn algebra(f: Family, n: usize, c: &[usize]) -> ClusterAlgebra {
        let rs = Arc::new(RootSystem::of_type(f, n).unwrap());
        ClusterAlgebra::of_type(rs, &GeneratorWord::new(c.to_vec()), DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn a2_reports_pass() {
        let alg = algebra(Family::A, 2, &[0, 1]);
        let report = verify_three_way(&alg).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.check("three-way agreement").unwrap().cases, 25);
        assert!(verify_seed_dvectors(&alg, SeedSample::All).unwrap().passed());
        assert!(verify_invariances(&alg, SeedSample::All).unwrap().passed());
        assert!(verify_geometry(&alg).unwrap().passed());
        assert!(verify_duality(alg.roots()).unwrap().passed());
    }

    #[test]
    fn cyclic_seeds_are_forced_into_samples() {
        let alg = algebra(Family::A, 3, &[0, 1, 2]);
        let nodes = SeedSample::Random { count: 1, rng_seed: 0 }.select(&alg);
        assert!(nodes.contains(&0));
        assert!(nodes.iter().any(|&k| !alg.seed_is_acyclic(k)));
        let report = verify_seed_dvectors(&alg, SeedSample::Random { count: 1, rng_seed: 0 }).unwrap();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn samples_are_deterministic() {
        let alg = algebra(Family::D, 4, &[0, 1, 2, 3]);
        let s = SeedSample::default_for_rank(4);
        assert_eq!(s.select(&alg), s.select(&alg));
        assert!(s.select(&alg).len() >= 50);
    }

    #[test]
    fn failing_checks_carry_a_counterexample() {
        let mut c = Check::new("demo");
        c.case(true, || unreachable!());
        c.case(false, || "first".into());
        c.case(false, || "second".into());
        let r = c.finish();
        assert!(!r.pass);
        assert_eq!((r.cases, r.counterexample.as_deref()), (3, Some("first")));
    }
}
