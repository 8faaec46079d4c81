//! Chains Q″ ⊑ Q′ ⊑ Q: the explicit complement of the bottom and the
//! letter-removal rewrite of words in symmetries.

use quandles::constructors::{takasaki, AbelianGroupSpec};
use quandles::lattice::{
    enumerate_subquandles, explicit_chain_complement, removal_rewrite, Letter,
};
use quandles::ElementSet;

fn main() -> quandles::Result<()> {
    let q = takasaki(&AbelianGroupSpec::cyclic(8))?;
    let evens = ElementSet::from_members(8, [0, 2, 4, 6]);
    let bottom = ElementSet::from_members(8, [0, 4]);

    let c = explicit_chain_complement(&q, &evens, &bottom)?;
    println!(
        "chain {} ⊑ {} ⊑ Tak(Z8)",
        bottom.one_based(),
        evens.one_based()
    );
    println!(
        "  explicit complement {} (orbit closure {})",
        c.complement.one_based(),
        c.orbit_closure.one_based()
    );
    let least = enumerate_subquandles(&q)?
        .complement_search(&bottom)?
        .expect("finite lattices are complemented");
    println!("  least complement in the lattice: {}", least.one_based());

    let word = [
        Letter::plus(1),
        Letter::plus(2),
        Letter::minus(3),
        Letter::plus(6),
    ];
    let short = removal_rewrite(&q, &evens, &bottom, &word)?;
    let show = |w: &[Letter]| {
        w.iter()
            .map(|l| {
                format!(
                    "S{}{}",
                    l.element + 1,
                    if l.sign == quandles::perm::Sign::Plus {
                        ""
                    } else {
                        "⁻¹"
                    }
                )
            })
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!(
        "  word {} moves {} like {}",
        show(&word),
        bottom.one_based(),
        show(&short)
    );
    Ok(())
}
