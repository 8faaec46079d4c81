//! Load a table from disk, check the axioms, and evaluate products.
//!
//! cargo run --example validate_and_evaluate

use std::path::Path;

use quandles::format::{parse_quandle, read_quandle_file};
use quandles::{Direction, Error};

fn main() -> quandles::Result<()> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let tait = read_quandle_file(&data.join("tait.qnd"))?;
    println!(
        "order {}, quandle: {}, kei: {}",
        tait.size(),
        tait.is_quandle(),
        tait.is_kei()
    );
    for x in tait.elements() {
        let row: Vec<String> = tait
            .elements()
            .map(|y| (tait.evaluate(x, y, Direction::Forward).unwrap() + 1).to_string())
            .collect();
        println!("  {} ⊳ _ = {}", x + 1, row.join(" "));
    }
    let back = tait.evaluate(2, 1, Direction::Backward)?;
    println!("3 ⊳⁻¹ 2 = {}", back + 1);

    match read_quandle_file(&data.join("bad.qnd")) {
        Err(Error::Axioms(report)) => print!("bad.qnd rejected:\n{report}"),
        other => println!("unexpected: {other:?}"),
    }

    // Idempotence alone may fail: that is a rack, accepted but flagged.
    let rack = parse_quandle("quandle 2\n2 2\n1 1\n", Path::new("<inline>"))?;
    println!("inline table: quandle {}, rack accepted", rack.is_quandle());
    Ok(())
}
