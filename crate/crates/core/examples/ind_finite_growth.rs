//! Closure growth in the Z_{n!} tower against a bounded window of the
//! integers under x ⊳ y = 2y − x.

use quandles::limits::{direct_tower_growth, factorial_tower, BoundedIntegerDihedral};
use quandles::ElementSet;

fn main() -> quandles::Result<()> {
    let tower = factorial_tower(5)?;
    for k in 1..=tower.len() {
        let prefix = tower.prefix(k)?;
        let n = prefix.top().size();
        let seed = ElementSet::from_members(n, [0, 1 % n]);
        let r = direct_tower_growth(&prefix, &seed, 100)?;
        print!("Z{n}: {r}");
    }
    let window = BoundedIntegerDihedral::new(50)?;
    print!("integers in [-50, 50]: {}", window.growth(&[0, 1], 100)?);
    Ok(())
}
