// Triangulations of polygons as clusters of types A, B and C: crossing
// numbers, crossing vectors, and a matching with the algebra.

use std::sync::Arc;

use cluster_denominators::cluster::ClusterAlgebra;
use cluster_denominators::coxeter::{Family, RootSystem};
use cluster_denominators::geometry::PolygonModel;

pub fn run_example() -> cluster_denominators::Result<()> {
    let pentagon = PolygonModel::new(Family::A, 2)?;
    let t = [pentagon.diagonal(0, 2)?, pentagon.diagonal(0, 3)?];
    for (u, v) in [(1, 4), (1, 3), (0, 2)] {
        let d = pentagon.diagonal(u, v)?;
        println!("pentagon, T = {{0,2}},{{0,3}}: d(T, {{{u},{v}}}) = {:?}", pentagon.crossing_vector(&t, d)?);
    }

    for (family, rank) in [(Family::A, 3), (Family::B, 3), (Family::C, 3)] {
        let model = PolygonModel::new(family, rank)?;
        let rs = Arc::new(RootSystem::of_type(family, rank)?);
        let alg = ClusterAlgebra::of_type(rs.clone(), &rs.standard_word(), 100)?;
        let matching = model.match_with_algebra(&alg)?.expect("crossing numbers match d-vectors");
        println!(
            "\n{family}{rank}: {}-gon, {} diagonal objects, {} triangulations",
            model.vertex_count(),
            model.diagonals().len(),
            matching.clusters().len()
        );
        for (k, d) in model.diagonals().iter().enumerate() {
            let j = alg.psi_inv(matching.chi(k));
            println!("  {:<12} <-> position {:>2}, root {}", d.to_string(), j + 1, alg.roots().theta(j));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("polygon models example");
}
