//! Check the cubic Hoffman-type polynomial identity and the resulting
//! classification of A³ entries.

use gridspectra::graph::{build_grid, clique_extension, ExtensionParams};
use gridspectra::spectra::{verify_a3_classification, verify_hoffman_identity, verify_walk_regularity};

fn main() -> gridspectra::Result<()> {
    for (s, t) in [(2, 2), (2, 3), (3, 2)] {
        let p = ExtensionParams::new(s, t)?;
        let g = clique_extension(&build_grid(t as usize + 1)?, s as usize)?;

        let h = verify_hoffman_identity(&g, p)?;
        let c = h.coefficients;
        println!(
            "s={s} t={t}: A^3 + {}A^2 + {}A + {}I = {}J  -> {}",
            c.c2, c.c1, c.c0, c.j, if h.holds { "holds" } else { "FAILS" }
        );

        let a3 = verify_a3_classification(&g, p)?;
        let cls = a3.classification;
        println!(
            "  diag(A^3) = {}, edge rule {} + {}*lambda, non-edge rule {} + {}*mu -> {}",
            cls.diag_value,
            cls.edge_rule.constant,
            cls.edge_rule.slope,
            cls.nonedge_rule.constant,
            cls.nonedge_rule.slope,
            a3.holds
        );

        let walk = verify_walk_regularity(&g, 4)?;
        println!("  walk-regular up to length 4: {}", walk.holds);
    }
    Ok(())
}
