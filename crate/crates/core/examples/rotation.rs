// The rotation on positions, almost positive roots and cluster variables
// for A2 with c = (s1, s2).

use std::sync::Arc;

use cluster_denominators::cluster::ClusterAlgebra;
use cluster_denominators::coxeter::{Family, GeneratorWord, RootSystem};

pub fn run_example() -> cluster_denominators::Result<()> {
    let rs = Arc::new(RootSystem::of_type(Family::A, 2)?);
    let alg = ClusterAlgebra::of_type(rs, &GeneratorWord::parse_one_based("1,2")?, 100)?;
    let sc = alg.complex();
    let roots = alg.roots();
    for j in 0..sc.len() {
        let y = alg.psi(j);
        println!(
            "{} -> {}    {:>8} -> {:<8}    {} -> {}",
            j + 1,
            sc.rotate_position(j) + 1,
            roots.theta(j).to_string(),
            roots.tau_root(roots.theta(j))?.to_string(),
            alg.variable(y),
            alg.variable(alg.rotate_variable(y))
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("rotation example");
}
