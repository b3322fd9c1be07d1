// d-vectors with respect to a seed whose quiver is an oriented cycle,
// computed three ways: by symbolic reseeding, from root compatibility, and
// from the root configuration of the matching c-cluster.

use std::sync::Arc;

use cluster_denominators::cluster::ClusterAlgebra;
use cluster_denominators::coxeter::{Family, RootSystem};

pub fn run_example() -> cluster_denominators::Result<()> {
    let rs = Arc::new(RootSystem::of_type(Family::A, 3)?);
    let alg = ClusterAlgebra::of_type(rs.clone(), &rs.standard_word(), 100)?;
    let graph = alg.graph();
    let node = (0..graph.num_seeds()).find(|&k| !alg.seed_is_acyclic(k)).expect("A3 has a cyclic seed");
    let path = graph.path_to(node);
    let (reseeded, dvecs) = alg.dvectors_at(&path)?;
    println!("seed reached by mutations {:?}", path.iter().map(|k| k + 1).collect::<Vec<_>>());
    println!("exchange matrix {:?}", reseeded.exchange().rows());

    let roots = alg.roots();
    let sc = alg.complex();
    let positions: Vec<usize> = reseeded.slots().iter().map(|&x| alg.psi_inv(x)).collect();
    let cluster = sc.cluster(positions.clone())?;
    let basis = roots.roots_of(&positions);
    println!("as a c-cluster: {cluster}, roots {}", basis.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", "));

    println!("{:>3}  {:<12} {:<12} {:<12} {:<12} laurent", "pos", "root", "symbolic", "from roots", "from R(I)");
    for (j, d) in dvecs.iter().enumerate() {
        let from_roots = roots.dvector_from_roots(&basis, roots.theta(j))?;
        let from_positions: Vec<i64> =
            positions.iter().map(|&i| sc.compat_coeff_in(&cluster, i, j)).collect::<Result<_, _>>()?;
        println!(
            "{:>3}  {:<12} {:<12} {:<12} {:<12} {}",
            j + 1,
            roots.theta(j).to_string(),
            format!("{d:?}"),
            format!("{from_roots:?}"),
            format!("{from_positions:?}"),
            reseeded.expression(alg.psi(j))
        );
        assert_eq!(d, &from_roots);
        assert_eq!(d, &from_positions);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("any seed d-vectors example");
}
