//! Truncated inverse limits of reduction towers and the complementation
//! evidence report.

use quandles::iso::are_isomorphic;
use quandles::limits::{
    profinite_evidence, reduction_tower, truncated_inverse_limit, validate_tower,
};

fn main() -> quandles::Result<()> {
    let tower = reduction_tower(&[2, 4, 8])?;
    print!("{}", validate_tower(&tower));
    let limit = truncated_inverse_limit(&tower, 3)?;
    println!(
        "limit of Z2 <- Z4 <- Z8: order {}, isomorphic to the top level: {}",
        limit.quandle.size(),
        are_isomorphic(&limit.quandle, &tower.levels()[2])
    );
    for (i, t) in limit.tuples.iter().enumerate().take(4) {
        println!("  element {} = {:?}", i + 1, t);
    }

    let tower = reduction_tower(&[3, 9])?;
    print!("{}", profinite_evidence(&tower, 2)?);
    Ok(())
}
