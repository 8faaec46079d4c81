//! The four descriptions of a strongly complemented subquandle, evaluated
//! separately on every subquandle of a non-connected quandle.

use quandles::constructors::{takasaki, AbelianGroupSpec};
use quandles::lattice::{classify_strong_complement, enumerate_subquandles};

fn main() -> quandles::Result<()> {
    let q = takasaki(&AbelianGroupSpec::new(vec![2, 3]))?;
    let lattice = enumerate_subquandles(&q)?;
    println!("Tak(Z2 ⊕ Z3), {} subquandles", lattice.len());
    for s in lattice.elements() {
        let r = classify_strong_complement(&q, s)?;
        if r.cond_setminus {
            println!("  strongly complemented: {}", s.one_based());
        }
    }
    let example = &lattice.elements()[1];
    print!(
        "\nreport for {}:\n{}",
        example.one_based(),
        classify_strong_complement(&q, example)?
    );
    Ok(())
}
