//! Discover the integral spectrum of a graph from an edge-list or graph6
//! file, or of a few built-in graphs when no file is given.

use gridspectra::graph::{build_complete, build_grid, build_shrikhande, Graph};
use gridspectra::io::read_any;
use gridspectra::spectra::integral_spectrum;

fn report(name: &str, g: &Graph) -> gridspectra::Result<()> {
    match integral_spectrum(g)? {
        Some(spec) => println!("{name}: {:?}", spec.pairs()),
        None => println!("{name}: spectrum is not integral"),
    }
    Ok(())
}

fn main() -> gridspectra::Result<()> {
    if let Some(path) = std::env::args().nth(1) {
        let g = read_any(std::path::Path::new(&path))?;
        return report(&path, &g);
    }
    report("K5", &build_complete(5)?)?;
    report("grid 3x3", &build_grid(3)?)?;
    report("shrikhande", &build_shrikhande())?;
    let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])?;
    report("C5", &c5)
}
