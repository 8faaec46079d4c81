//! Smith normal form of the abelianized presentation of a kei, and the
//! factorization of kei maps into Takasaki keis.

use quandles::constructors::{
    adtak, check_adjunction, relation_matrix, smith_normal_form, takasaki, trivial,
    AbelianGroupSpec,
};
use quandles::ElementMap;

fn main() -> quandles::Result<()> {
    for n in 1..=6 {
        println!("AdTak(trivial({n})) = {}", adtak(&trivial(n)?)?);
    }
    for m in [3u64, 4, 5, 6] {
        let k = takasaki(&AbelianGroupSpec::cyclic(m))?;
        let snf = smith_normal_form(&relation_matrix(&k));
        let diag: Vec<String> = snf.diagonal.iter().map(|d| d.to_string()).collect();
        println!(
            "Tak(Z{m}): diagonal [{}], AdTak = {}",
            diag.join(" "),
            adtak(&k)?
        );
    }

    let k = takasaki(&AbelianGroupSpec::cyclic(3))?;
    let a = AbelianGroupSpec::cyclic(3);
    let r = check_adjunction(&k, &a, &ElementMap::identity(3))?;
    println!("identity of Tak(Z3) factors: {}", r.holds());
    for (d, b) in &r.basis_images {
        println!("  basis vector with invariant {d} ↦ {b:?}");
    }
    Ok(())
}
