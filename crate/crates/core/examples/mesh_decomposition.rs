//! Split a quandle along its orbits into a mesh, check it, damage it, and
//! glue it back together.

use quandles::constructors::{takasaki, AbelianGroupSpec};
use quandles::format::serialize_mesh;
use quandles::mesh::{extract_mesh, semidisjoint_union, validate_mesh};
use quandles::perm::Permutation;

fn main() -> quandles::Result<()> {
    let q = takasaki(&AbelianGroupSpec::cyclic(6))?;
    let mesh = extract_mesh(&q, None)?;
    print!("{}", serialize_mesh(&mesh));
    print!("{}", validate_mesh(&mesh));
    println!("round trip exact: {}", semidisjoint_union(&mesh)? == q);

    let mut broken = mesh.clone();
    let n = broken.blocks()[1].members.len();
    broken.set_image(0, 1, 0, Permutation::identity(n));
    print!(
        "after replacing one generator image:\n{}",
        validate_mesh(&broken)
    );
    Ok(())
}
