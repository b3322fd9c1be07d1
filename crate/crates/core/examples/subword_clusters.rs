// c-clusters as facets of the subword complex of `Q_c`, with root
// functions, flips and the position coefficients `{i ∥ j}`.

use std::sync::Arc;

use cluster_denominators::coxeter::{Family, GeneratorWord, RootSystem};
use cluster_denominators::subword::SubwordComplex;

pub fn run_example() -> cluster_denominators::Result<()> {
    let rs = Arc::new(RootSystem::of_type(Family::A, 2)?);
    let sc = SubwordComplex::new(rs, &GeneratorWord::parse_one_based("1,2")?)?;
    println!("Q_c = {:?}", sc.word().letters().iter().map(|s| s + 1).collect::<Vec<_>>());

    let clusters = sc.enumerate_clusters()?;
    println!("{} c-clusters:", clusters.len());
    for cl in &clusters {
        let table = sc.root_function_table(cl);
        println!("  {cl}  R(I) = {:?}", table.configuration());
    }

    let start = sc.initial_cluster();
    let (flipped, j) = sc.flip(&start, 0)?;
    println!("flip {start} at position 1 -> {flipped} (entering position {})", j + 1);
    let updated = sc.update_root_function(&sc.root_function_table(&start), 0, j)?;
    assert_eq!(updated.values(), sc.root_function_table(&flipped).values());

    let table = sc.compat_table()?;
    println!("{{i ∥ j}}:");
    for row in table.rows() {
        println!("  {row:?}");
    }

    let jump = sc.jump()?;
    println!(
        "jump to c' = {}: positions map as {:?}",
        jump.target().c(),
        jump.sigma().iter().map(|p| p + 1).collect::<Vec<_>>()
    );

    let d4 = Arc::new(RootSystem::of_type(Family::D, 4)?);
    let sc = SubwordComplex::new(d4.clone(), &d4.standard_word())?;
    println!("D4: m = {}, {} c-clusters", sc.len(), sc.enumerate_clusters()?.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("subword clusters example");
}
