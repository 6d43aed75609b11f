//! Run the full recognition pipeline on a graph and print a stage report.
//!
//! Usage: `cargo run --example reconstruct_pipeline -- [s] [t] [--json]`

use gridspectra::graph::{build_grid, clique_extension, ExtensionParams};
use gridspectra::reconstruct::run_pipeline;

fn main() -> gridspectra::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let json = args.iter().any(|a| a == "--json");
    let mut nums = args.iter().filter_map(|a| a.parse::<u32>().ok());
    let s = nums.next().unwrap_or(2);
    let t = nums.next().unwrap_or(2);
    let p = ExtensionParams::new(s, t)?;

    let g = clique_extension(&build_grid(t as usize + 1)?, s as usize)?;
    let report = run_pipeline(&g, p, false);
    if json {
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    } else {
        print!("{report}");
        if let Some(id) = &report.identification {
            if let Some(coords) = &id.coordinates {
                println!("grid coordinates of quotient vertices: {coords:?}");
            }
        }
    }
    Ok(())
}
