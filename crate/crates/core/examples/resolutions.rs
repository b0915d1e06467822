//! Graded free resolutions for three and four generators, as text and JSON.
//!
//! `cargo run --example resolutions`

use kwsgp::resolution::{
    repair_candidates, resolution_ed3, resolution_ed4, verify_complex, REPAIRS,
};

fn main() -> kwsgp::Result<()> {
    let ed3 = resolution_ed3(5, 7, 2, 2)?;
    let ed4 = resolution_ed4(5, 7, (2, 2), (3, 1))?;
    for c in [&ed3, &ed4] {
        println!("generators {:?}", c.weights);
        print!("{}", c.to_text());
        let r = verify_complex(c);
        println!(
            "ranks {:?}, shifts {:?}, exact {}\n",
            r.ranks, r.shifts, r.passes
        );
    }
    println!("{}", kwsgp::cli::to_json(&ed3.to_export()));

    println!("corrected entries:");
    for r in REPAIRS {
        println!(
            "  {} {} ({},{}): {} -> {}",
            r.complex, r.matrix, r.row, r.col, r.printed, r.corrected
        );
    }
    for check in repair_candidates(&ed4)? {
        println!(
            "  {} ({},{}) unique {}",
            check.repair.matrix, check.repair.row, check.repair.col, check.unique
        );
    }
    Ok(())
}
