//! Lattice path of a KW member as SVG.
//!
//! `cargo run --example render_svg -- path.svg`

use kwsgp::cli::path_svg;
use kwsgp::kw2d::render_path;
use kwsgp::{KwCorners, KwParams};

fn main() -> kwsgp::Result<()> {
    let c = KwCorners::new(KwParams::new(7, 9)?, vec![(1, 3), (2, 2), (3, 1)])?;
    let svg = path_svg(&render_path(&c));
    match std::env::args().nth(1) {
        Some(file) => {
            std::fs::write(&file, svg).expect("writable output file");
            println!("wrote {file}");
        }
        None => print!("{svg}"),
    }
    Ok(())
}
