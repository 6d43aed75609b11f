//! Build the clique extension of a grid and certify its spectrum exactly.
//!
//! Usage: `cargo run --example construct_and_certify -- [s] [t]`

use gridspectra::graph::{build_grid, clique_extension, ExtensionParams};
use gridspectra::spectra::{expected_spectrum, verify_spectrum};

fn main() -> gridspectra::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u32>().expect("integer argument"));
    let s = args.next().unwrap_or(2);
    let t = args.next().unwrap_or(3);
    let p = ExtensionParams::new(s, t)?;

    let g = clique_extension(&build_grid(t as usize + 1)?, s as usize)?;
    println!("extension of the ({0}x{0}) grid with s={s}: n={1}, edges={2}", t + 1, g.order(), g.size());

    let claimed = expected_spectrum(p)?;
    println!("claimed spectrum:\n{claimed}");
    let check = verify_spectrum(&g, &claimed)?;
    println!("certified: {}", check.holds);
    if let Some(w) = check.witness {
        println!("witness: {w:?}");
    }
    Ok(())
}
