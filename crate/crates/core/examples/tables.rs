//! Type and mu of single- and two-gap extensions of R(5,7,2,1,3).
//!
//! `cargo run --example tables`

use kwsgp::cli::{table_csv, table_rows, table_scan, TABLE_IDS};

fn main() -> kwsgp::Result<()> {
    let scan = table_scan()?;
    for row in &scan.singles {
        println!(
            "h = {:>3} at ({},{},{}): type {}, mu {}",
            row.h, row.point.x, row.point.y, row.point.z, row.semigroup_type, row.mu
        );
    }
    for id in TABLE_IDS {
        println!("\n{id}");
        print!("{}", table_csv(id, &table_rows(id, &scan)?));
    }
    Ok(())
}
