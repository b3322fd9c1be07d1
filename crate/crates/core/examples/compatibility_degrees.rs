// Compatibility degrees on almost positive roots: the rotation-transport
// definition for any c, the classical bipartite one, and duality B2 <-> C2.

use std::sync::Arc;

use cluster_denominators::coxeter::{Family, RootSystem};
use cluster_denominators::roots::{ClassicalCompat, RootModel};

fn print_table(model: &RootModel) -> cluster_denominators::Result<()> {
    let roots = model.almost_positive_roots();
    print!("{:>10}", "");
    for b in roots {
        print!("{:>10}", b.to_string());
    }
    println!();
    for a in roots {
        print!("{:>10}", a.to_string());
        for b in roots {
            print!("{:>10}", model.c_compat(a, b)?);
        }
        println!();
    }
    Ok(())
}

pub fn run_example() -> cluster_denominators::Result<()> {
    let b2 = Arc::new(RootSystem::of_type(Family::B, 2)?);
    let c = b2.standard_word();
    let model = RootModel::of_type(b2.clone(), &c)?;
    println!("B2, c = {c}: (α ∥ β), rows α, columns β");
    print_table(&model)?;

    let c2 = RootModel::of_type(Arc::new(b2.dual()?), &c)?;
    let mut agree = 0;
    for a in model.almost_positive_roots() {
        for b in model.almost_positive_roots() {
            agree += usize::from(model.dual_compat_check(&c2, a, b)?);
        }
    }
    println!("(α ∥ β) = (β^∨ ∥ α^∨) in C2 for {agree} of {} pairs", model.almost_positive_roots().len().pow(2));

    let d4 = Arc::new(RootSystem::of_type(Family::D, 4)?);
    let bip = d4.bipartite_word();
    let model = RootModel::of_type(d4.clone(), &bip)?;
    let classical = ClassicalCompat::new(d4, &bip)?;
    let mut same = true;
    for a in model.almost_positive_roots() {
        for b in model.almost_positive_roots() {
            same &= model.c_compat(a, b)? == classical.compat(a, b)?;
        }
    }
    println!("D4, bipartite c = {bip}: matches the τ± compatibility degree: {same}");
    assert!(same);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("compatibility degrees example");
}
