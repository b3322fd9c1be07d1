// Root systems, Coxeter words and the word `Q_c = c · w∘(c)` for every
// finite type up to rank 4, plus E6.

use cluster_denominators::coxeter::{CoxeterWord, Family, RootSystem};

pub fn run_example() -> cluster_denominators::Result<()> {
    let types = [
        (Family::A, 3),
        (Family::B, 3),
        (Family::C, 3),
        (Family::D, 4),
        (Family::F, 4),
        (Family::G, 2),
        (Family::E, 6),
    ];
    println!("{:<4} {:>4} {:>4}  {:<16} c-sorting word of w∘", "type", "N", "m", "eta");
    for (family, rank) in types {
        let rs = RootSystem::of_type(family, rank)?;
        let c = rs.standard_word();
        let q = CoxeterWord::new(&rs, &c)?;
        let eta: Vec<usize> = (0..rank).map(|s| rs.eta(s) + 1).collect();
        let sorting: Vec<String> = q.sorting_word().to_one_based().iter().map(|s| s.to_string()).collect();
        println!(
            "{:<4} {:>4} {:>4}  {:<16} {}",
            format!("{family}{rank}"),
            rs.num_positive(),
            q.len(),
            format!("{eta:?}"),
            sorting.join("")
        );
        assert_eq!(q.len(), rs.num_positive() + rank);
        assert_eq!(rs.length(rs.longest_element()), rs.num_positive());
    }

    let b2 = RootSystem::of_type(Family::B, 2)?;
    println!("\nB2 Cartan matrix {:?}, symmetrizer {:?}", b2.spec().cartan(), b2.spec().symmetrizer());
    for root in b2.positive_roots() {
        println!("  root {root:?}  coroot {:?}", b2.coroot(root));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("root systems example");
}
