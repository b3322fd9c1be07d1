// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

use std::sync::Arc;
use std::time::{Duration, Instant};

use cluster_denominators::cluster::ClusterAlgebra;
use cluster_denominators::coxeter::{Family, GeneratorWord, RootSystem};
use cluster_denominators::geometry::PolygonModel;
use cluster_denominators::laurent::LaurentPolynomial;
use cluster_denominators::roots::RootModel;
use cluster_denominators::subword::SubwordComplex;
use cluster_denominators::verify::{
    verify_seed_dvectors, verify_duality, verify_geometry, verify_invariances, verify_subword_layer,
    verify_three_way, SeedSample, VerificationReport, DEFAULT_BUDGET,
};
use cluster_denominators::Result;
use rayon::prelude::*;

const FULL_TYPES: [(Family, usize); 11] = [
    (Family::A, 1),
    (Family::A, 2),
    (Family::A, 3),
    (Family::A, 4),
    (Family::B, 2),
    (Family::B, 3),
    (Family::C, 2),
    (Family::C, 3),
    (Family::D, 4),
    (Family::G, 2),
    (Family::F, 4),
];

type Outcome = Result<std::result::Result<usize, String>>;

fn rs(f: Family, n: usize) -> Arc<RootSystem> {
    Arc::new(RootSystem::of_type(f, n).expect("root system"))
}

fn word(s: &str) -> GeneratorWord {
    GeneratorWord::parse_one_based(s).expect("word")
}

fn all_words() -> Vec<(Arc<RootSystem>, GeneratorWord)> {
    FULL_TYPES
        .iter()
        .flat_map(|&(f, n)| {
            let r = rs(f, n);
            r.coxeter_words().into_iter().map(move |c| (r.clone(), c))
        })
        .collect()
}

// Runs `f` on every scenario in parallel and folds the reports.
fn over<T: Sync>(items: &[T], f: impl Fn(&T) -> Result<Vec<VerificationReport>> + Sync) -> Outcome {
    let reports: Vec<VerificationReport> =
        items.par_iter().map(&f).collect::<Result<Vec<_>>>()?.into_iter().flatten().collect();
    for r in &reports {
        if let Some(bad) = r.failures().next() {
            return Ok(Err(format!(
                "{}{} c={:?}: {} ({})",
                r.scenario.family,
                r.scenario.rank,
                r.scenario.coxeter,
                bad.name,
                bad.counterexample.as_deref().unwrap_or("-")
            )));
        }
    }
    Ok(Ok(reports.len()))
}

fn expect(cond: bool, what: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn a2_rotation_tables() -> Outcome {
    let alg = ClusterAlgebra::of_type(rs(Family::A, 2), &word("1,2"), 100)?;
    let sc = alg.complex();
    let roots = alg.roots();
    let lp = |s: &str| LaurentPolynomial::parse(2, s).expect("laurent");
    let positions = [3, 4, 5, 1, 2];
    let root_table = [
        ("-α1", "α1"),
        ("-α2", "α1+α2"),
        ("α1", "α2"),
        ("α1+α2", "-α1"),
        ("α2", "-α2"),
    ];
    let variables = [
        "x1",
        "x2",
        "x1^-1 + x1^-1*x2",
        "x1^-1*x2^-1 + x1^-1 + x2^-1",
        "x2^-1 + x1*x2^-1",
    ];
    let check = || -> Result<std::result::Result<(), String>> {
        for j in 0..5 {
            let got = sc.rotate_position(j) + 1;
            if got != positions[j] {
                return Ok(Err(format!("τ({}) = {got}, expected {}", j + 1, positions[j])));
            }
            let (from, to) = root_table[j];
            let alpha = roots.theta(j);
            let image = roots.tau_root(alpha)?;
            if alpha.to_string() != from || image.to_string() != to {
                return Ok(Err(format!("τ({alpha}) = {image}, expected {from} -> {to}")));
            }
            let y = alg.psi(j);
            if alg.variable(y) != &lp(variables[j]) {
                return Ok(Err(format!("ψ({}) = {}", j + 1, alg.variable(y))));
            }
            let ty = alg.variable(alg.rotate_variable(y));
            if ty != &lp(variables[positions[j] - 1]) {
                return Ok(Err(format!("τ({}) = {ty}", alg.variable(y))));
            }
        }
        Ok(expect(alg.graph().num_variables() == 5, || "expected 5 variables".into()))
    };
    Ok(check()?.map(|()| 1))
}

fn three_way() -> Outcome {
    over(&all_words(), |(r, c)| {
        let alg = ClusterAlgebra::of_type(r.clone(), c, DEFAULT_BUDGET)?;
        Ok(vec![verify_three_way(&alg)?])
    })
}

fn nonnegative_dvectors() -> Outcome {
    over(&all_words(), |(r, c)| {
        let alg = ClusterAlgebra::of_type(r.clone(), c, DEFAULT_BUDGET)?;
        Ok(vec![verify_seed_dvectors(&alg, SeedSample::default_for_rank(r.rank()))?])
    })
}

fn bipartite_classical() -> Outcome {
    let types: Vec<_> = FULL_TYPES.iter().filter(|(_, n)| *n <= 3).map(|&(f, n)| rs(f, n)).collect();
    over(&types, |r| {
        let alg = ClusterAlgebra::of_type(r.clone(), &r.bipartite_word(), DEFAULT_BUDGET)?;
        let report = verify_seed_dvectors(&alg, SeedSample::All)?;
        if report.check("bipartite c matches classical compatibility").is_none() {
            return Err(cluster_denominators::Error::Invariant(format!(
                "{}: no classical comparison ran",
                r.spec()
            )));
        }
        Ok(vec![report])
    })
}

fn invariance_suites() -> Outcome {
    over(&all_words(), |(r, c)| {
        let alg = ClusterAlgebra::of_type(r.clone(), c, DEFAULT_BUDGET)?;
        Ok(vec![verify_invariances(&alg, SeedSample::default_for_rank(r.rank()))?])
    })
}

fn counts() -> Outcome {
    let expected = [(Family::A, 1, 2), (Family::A, 2, 5), (Family::A, 3, 14), (Family::B, 2, 6), (Family::C, 2, 6)];
    for (f, n, want) in expected {
        let r = rs(f, n);
        let c = r.standard_word();
        let facets = SubwordComplex::new(r.clone(), &c)?.enumerate_clusters()?.len();
        let seeds = ClusterAlgebra::of_type(r.clone(), &c, DEFAULT_BUDGET)?.graph().num_seeds();
        let triangulations = PolygonModel::new(f, n)?.enumerate_geometric_clusters().len();
        if (facets, seeds, triangulations) != (want, want, want) {
            return Ok(Err(format!("{f}{n}: {facets}/{seeds}/{triangulations}, expected {want}")));
        }
    }
    let mut all = FULL_TYPES.to_vec();
    all.extend([(Family::D, 5), (Family::E, 6), (Family::E, 7), (Family::E, 8)]);
    for &(f, n) in &all {
        let r = rs(f, n);
        let sc = SubwordComplex::new(r.clone(), &r.standard_word())?;
        if sc.len() != r.num_positive() + n {
            return Ok(Err(format!("{f}{n}: m = {}, N + n = {}", sc.len(), r.num_positive() + n)));
        }
        if FULL_TYPES.contains(&(f, n)) {
            let vars = ClusterAlgebra::of_type(r.clone(), &r.standard_word(), DEFAULT_BUDGET)?.graph().num_variables();
            if vars != sc.len() {
                return Ok(Err(format!("{f}{n}: {vars} variables, m = {}", sc.len())));
            }
        }
    }
    Ok(Ok(expected.len() + all.len()))
}

fn geometry() -> Outcome {
    let types = [
        (Family::A, 2),
        (Family::A, 3),
        (Family::A, 4),
        (Family::B, 2),
        (Family::B, 3),
        (Family::C, 2),
        (Family::C, 3),
    ];
    let scenarios: Vec<_> = types
        .iter()
        .flat_map(|&(f, n)| {
            let r = rs(f, n);
            let words = if n <= 3 { r.coxeter_words() } else { vec![r.standard_word(), r.bipartite_word()] };
            words.into_iter().map(move |c| (r.clone(), c))
        })
        .collect();
    over(&scenarios, |(r, c)| {
        let alg = ClusterAlgebra::of_type(r.clone(), c, DEFAULT_BUDGET)?;
        Ok(vec![verify_geometry(&alg)?])
    })
}

fn duality() -> Outcome {
    let scenarios: Vec<_> = [(Family::A, 2), (Family::A, 3), (Family::B, 2), (Family::B, 3), (Family::C, 2), (Family::C, 3)]
        .iter()
        .flat_map(|&(f, n)| {
            let r = rs(f, n);
            r.coxeter_words().into_iter().map(move |c| (r.clone(), c))
        })
        .collect();
    over(&scenarios, |(r, c)| Ok(vec![verify_duality(&RootModel::of_type(r.clone(), c)?)?]))
}

fn e6_subword_layer() -> Outcome {
    let r = rs(Family::E, 6);
    let words = [r.standard_word(), r.bipartite_word()];
    over(&words, |c| Ok(vec![verify_subword_layer(&RootModel::of_type(r.clone(), c)?)?]))
}

fn main() {
    let criteria: [(&str, Duration, fn() -> Outcome); 9] = [
        ("A2 rotation tables and variables", Duration::from_secs(1), a2_rotation_tables),
        ("three-way d-vector agreement, all Coxeter words", Duration::from_secs(300), three_way),
        ("non-initial d-vectors are non-negative and non-zero", Duration::MAX, nonnegative_dvectors),
        ("bipartite c matches classical compatibility", Duration::MAX, bipartite_classical),
        ("rotation, cluster-independence and jump invariances", Duration::MAX, invariance_suites),
        ("facet, seed and triangulation counts; m = N + n", Duration::MAX, counts),
        ("crossing vectors match d-vectors", Duration::MAX, geometry),
        ("coroot duality of compatibility degrees", Duration::MAX, duality),
        ("E6 subword layer", Duration::from_secs(120), e6_subword_layer),
    ];
    let mut failed = 0;
    for (k, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(Ok(cases)) if elapsed <= *limit => (true, format!("{cases} cases")),
            Ok(Ok(_)) => (false, format!("over time limit of {:?}", limit)),
            Ok(Err(why)) => (false, why),
            Err(e) => (false, format!("error: {e}")),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "{} [{}] {name}: {detail} ({:.2} s)",
            if ok { "PASS" } else { "FAIL" },
            k + 1,
            elapsed.as_secs_f64()
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
