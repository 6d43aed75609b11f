//! The Shrikhande graph is cospectral with the 4x4 grid. Its clique
//! extension shares the spectrum of the grid extension, and the pipeline
//! still tells them apart once it reaches the line structure.

use gridspectra::graph::{build_grid, build_shrikhande, clique_extension, ExtensionParams};
use gridspectra::iso::is_isomorphic;
use gridspectra::reconstruct::{identify_grid_or_shrikhande, run_pipeline};
use gridspectra::spectra::integral_spectrum;

fn main() -> gridspectra::Result<()> {
    let grid = build_grid(4)?;
    let shrik = build_shrikhande();
    println!("grid spectrum:       {:?}", integral_spectrum(&grid)?.map(|s| s.pairs().to_vec()));
    println!("shrikhande spectrum: {:?}", integral_spectrum(&shrik)?.map(|s| s.pairs().to_vec()));
    println!("isomorphic: {}", is_isomorphic(&grid, &shrik));
    println!("identify(grid): {:?}", identify_grid_or_shrikhande(&grid, 3)?.verdict);
    println!("identify(shrikhande): {:?}", identify_grid_or_shrikhande(&shrik, 3)?.verdict);

    let p = ExtensionParams::new(2, 3)?;
    let ext = clique_extension(&shrik, 2)?;
    let report = run_pipeline(&ext, p, true);
    println!("\npipeline on the extension of the Shrikhande graph (s=2):");
    print!("{report}");
    Ok(())
}
