//! Symmetries, inner and full automorphism groups, orbits, and the
//! restriction of symmetries to a subquandle.

use quandles::constructors::{conj, takasaki, AbelianGroupSpec, GroupTable};
use quandles::inner::{
    aut_group, inn_group, orbit_closure, orbits, subquotient_witness, symmetries,
};
use quandles::{ElementSet, FiniteQuandle};

fn describe(name: &str, q: &FiniteQuandle) -> quandles::Result<()> {
    let orbs: Vec<String> = orbits(q).iter().map(|o| o.one_based()).collect();
    println!(
        "{name}: |Inn| = {}, |Aut| = {}, orbits {}",
        inn_group(q)?.order(),
        aut_group(q)?.order(),
        orbs.join(" ")
    );
    for (y, s) in symmetries(q).iter().enumerate() {
        println!("  S_{} = {s}", y + 1);
    }
    Ok(())
}

fn main() -> quandles::Result<()> {
    let tak8 = takasaki(&AbelianGroupSpec::cyclic(8))?;
    let s3 = conj(&GroupTable::symmetric(3)?)?;
    describe("Tak(Z8)", &tak8)?;
    describe("Conj(S3)", &s3)?;

    let sub = ElementSet::from_members(8, [0, 4]);
    println!(
        "orbit closure of {} in Tak(Z8): {}",
        sub.one_based(),
        orbit_closure(&tak8, &sub).one_based()
    );
    let w = subquotient_witness(&tak8, &sub)?;
    println!(
        "symmetries at {} generate a group of order {}; kernel {} and Inn of the subquandle {}",
        sub.one_based(),
        w.subgroup.order(),
        w.kernel.order(),
        w.induced_inn.order()
    );
    Ok(())
}
