// Seeds of Laurent polynomials, mutation by exact division, and the
// exchange graph enumerated from the acyclic seed `X_c`.

use std::sync::Arc;

use cluster_denominators::cluster::{d_vector, seed_from_coxeter, ClusterAlgebra};
use cluster_denominators::coxeter::{Family, GeneratorWord, RootSystem};
use cluster_denominators::subword::SubwordComplex;

pub fn run_example() -> cluster_denominators::Result<()> {
    let rs = Arc::new(RootSystem::of_type(Family::A, 2)?);
    let c = GeneratorWord::parse_one_based("1,2")?;
    let seed = seed_from_coxeter(&SubwordComplex::new(rs.clone(), &c)?);
    println!("B(c) = {:?}", seed.exchange().rows());
    let once = seed.mutate(0)?;
    let twice = once.mutate(1)?;
    println!("mu1:      x1' = {}", once.variables()[0]);
    println!("mu2 mu1:  x2' = {}   d = {:?}", twice.variables()[1], d_vector(&twice.variables()[1]));
    assert_eq!(once.mutate(0)?, seed);

    for (family, rank) in [(Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::G, 2), (Family::F, 4)] {
        let rs = Arc::new(RootSystem::of_type(family, rank)?);
        let alg = ClusterAlgebra::of_type(rs.clone(), &rs.standard_word(), 1000)?;
        let cyclic = (0..alg.graph().num_seeds()).filter(|&k| !alg.seed_is_acyclic(k)).count();
        println!(
            "{family}{rank}: {} variables, {} seeds ({cyclic} with cyclic quivers), largest coefficient {}",
            alg.graph().num_variables(),
            alg.graph().num_seeds(),
            alg.max_coefficient()
        );
        assert!(alg.almost_positive_self_check());
    }

    let g2 = Arc::new(RootSystem::of_type(Family::G, 2)?);
    let alg = ClusterAlgebra::of_type(g2.clone(), &g2.standard_word(), 100)?;
    println!("G2 variables, by position:");
    for j in 0..alg.complex().len() {
        println!("  {:>2}  {:<10} {}", j + 1, alg.roots().theta(j).to_string(), alg.variable(alg.psi(j)));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("laurent mutation example");
}
