//! Enumerate the subquandle lattice, find complements and maximal
//! subquandles, and print the Hasse diagram as Graphviz DOT.
//!
//! cargo run --example subquandle_lattice | tail -n +6 | dot -Tsvg > lattice.svg

use quandles::constructors::{conj, GroupTable};
use quandles::lattice::{enumerate_subquandles, maximal_intersection, to_dot};

fn main() -> quandles::Result<()> {
    let q = conj(&GroupTable::symmetric(3)?)?;
    let lattice = enumerate_subquandles(&q)?;
    let verdict = lattice.is_complemented();
    println!(
        "Conj(S3): {} subquandles, complemented: {}",
        lattice.len(),
        verdict.complemented
    );
    for &(s, c) in verdict
        .witnesses
        .iter()
        .filter(|(s, _)| lattice.elements()[*s].len() == 2)
    {
        let c = c
            .map(|c| lattice.elements()[c].one_based())
            .unwrap_or_default();
        println!("  {} has complement {c}", lattice.elements()[s].one_based());
    }
    let maximal: Vec<String> = lattice
        .maximal_subquandles()
        .iter()
        .map(|m| m.one_based())
        .collect();
    println!(
        "maximal: {}  (common part {})",
        maximal.join(" "),
        maximal_intersection(&lattice).one_based()
    );
    print!("{}", to_dot(&lattice));
    Ok(())
}
